//! Monomials and monomial ideals over finite indexed variable sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// A variable identifier. The derived order puts every `Pair` before every
/// `Elem` before every `Nat`, and orders fields lexicographically within a tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarIndex {
    /// `x_{p,i}` with `p` a poset element.
    Pair(u32, u32),
    /// `x_p` with `p` a poset element.
    Elem(u32),
    /// `x_i` with `i` a natural number.
    Nat(u32),
}

impl VarIndex {
    pub fn pair(p: usize, i: u32) -> VarIndex {
        VarIndex::Pair(p as u32, i)
    }

    pub fn elem(p: usize) -> VarIndex {
        VarIndex::Elem(p as u32)
    }
}

/// A monomial as a sorted list of `(variable, positive exponent)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(VarIndex, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: VarIndex) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    /// Accumulates repeated variables and drops zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (VarIndex, u32)>>(it: I) -> Monomial {
        let mut m: BTreeMap<VarIndex, u32> = BTreeMap::new();
        for (v, e) in it {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m.into_iter().collect())
    }

    /// Squarefree product of the given variables.
    pub fn squarefree<I: IntoIterator<Item = VarIndex>>(vars: I) -> Monomial {
        let set: BTreeSet<VarIndex> = vars.into_iter().collect();
        Monomial(set.into_iter().map(|v| (v, 1)).collect())
    }

    pub fn factors(&self) -> &[(VarIndex, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarIndex) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = VarIndex> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut it = other.0.iter().peekable();
        'outer: for &(v, e) in &self.0 {
            while let Some(&&(w, f)) = it.peek() {
                it.next();
                if w == v {
                    if f >= e {
                        continue 'outer;
                    }
                    return false;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_factors(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m: BTreeMap<VarIndex, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            let slot = m.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial(m.into_iter().collect())
    }

    /// `self / gcd(self, other)`
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let r = e.saturating_sub(other.exponent(v));
                    (r > 0).then_some((v, r))
                })
                .collect(),
        )
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.colon(other))
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.support().all(|v| other.exponent(v) == 0)
    }

    /// Substitutes variables; exponents of identified variables accumulate.
    pub fn map_vars(&self, mut f: impl FnMut(VarIndex) -> VarIndex) -> Monomial {
        Monomial::from_factors(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Display with a variable letter and optional element labels.
    pub fn render(&self, letter: &str, labels: Option<&[String]>) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let name = |p: u32| match labels {
            Some(l) => l[p as usize].clone(),
            None => p.to_string(),
        };
        self.0
            .iter()
            .map(|&(v, e)| {
                let base = match v {
                    VarIndex::Pair(p, i) => format!("{letter}[{},{i}]", name(p)),
                    VarIndex::Elem(p) => format!("{letter}[{}]", name(p)),
                    VarIndex::Nat(i) => format!("{letter}[{i}]"),
                };
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

// Graded, then lex with earlier variables heavier: x0^2 < x0*x1 < x1^2 in
// this (ascending) listing order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                let c = a.0.cmp(&b.0).then(b.1.cmp(&a.1));
                if c.is_ne() {
                    return c;
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", None))
    }
}

/// Which variable tag a text form uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Pair,
    Elem,
    Nat,
}

impl VarKind {
    pub fn name(self) -> &'static str {
        match self {
            VarKind::Pair => "pair",
            VarKind::Elem => "elem",
            VarKind::Nat => "nat",
        }
    }

    pub fn parse(s: &str) -> Result<VarKind> {
        match s {
            "pair" => Ok(VarKind::Pair),
            "elem" => Ok(VarKind::Elem),
            "nat" => Ok(VarKind::Nat),
            other => Err(Error::Parse(format!("unknown variable family `{other}`"))),
        }
    }
}

/// Parses `x[a,0]^2*x[c,1]` (any single-letter prefix). Element labels are
/// resolved with `resolve`; `Nat` indices are plain numbers.
pub fn parse_monomial(
    s: &str,
    kind: VarKind,
    resolve: &dyn Fn(&str) -> Option<usize>,
) -> Result<Monomial> {
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::one());
    }
    let mut factors = Vec::new();
    for part in s.split('*') {
        let part = part.trim();
        let (base, exp) = match part.split_once('^') {
            Some((b, e)) => (
                b,
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{part}`")))?,
            ),
            None => (part, 1),
        };
        let open = base
            .find('[')
            .ok_or_else(|| Error::Parse(format!("expected `[` in `{part}`")))?;
        let inner = base[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("expected `]` in `{part}`")))?;
        let elem = |t: &str| {
            resolve(t.trim())
                .map(|p| p as u32)
                .ok_or_else(|| Error::Parse(format!("unknown element `{}`", t.trim())))
        };
        let nat = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad index `{}`", t.trim())))
        };
        let v = match kind {
            VarKind::Pair => {
                let (p, i) = inner
                    .rsplit_once(',')
                    .ok_or_else(|| Error::Parse(format!("expected `p,i` in `{part}`")))?;
                VarIndex::Pair(elem(p)?, nat(i)?)
            }
            VarKind::Elem => VarIndex::Elem(elem(inner)?),
            VarKind::Nat => VarIndex::Nat(nat(inner)?),
        };
        factors.push((v, exp));
    }
    Ok(Monomial::from_factors(factors))
}

/// Integer polynomial in `t`, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TPoly(pub Vec<i64>);

impl TPoly {
    pub fn one() -> TPoly {
        TPoly(vec![1])
    }

    pub fn zero() -> TPoly {
        TPoly(Vec::new())
    }

    /// `1 - t^k`
    pub fn one_minus_t_pow(k: u32) -> TPoly {
        if k == 0 {
            return TPoly::zero();
        }
        let mut c = vec![0; k as usize + 1];
        c[0] = 1;
        c[k as usize] = -1;
        TPoly(c)
    }

    fn trimmed(mut c: Vec<i64>) -> TPoly {
        while c.last() == Some(&0) {
            c.pop();
        }
        TPoly(c)
    }

    pub fn add(&self, o: &TPoly) -> TPoly {
        let n = self.0.len().max(o.0.len());
        TPoly::trimmed(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&0) + o.0.get(k).unwrap_or(&0))
                .collect(),
        )
    }

    pub fn mul(&self, o: &TPoly) -> TPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return TPoly::zero();
        }
        let mut c = vec![0i64; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        TPoly::trimmed(c)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: u32) -> TPoly {
        if self.0.is_empty() {
            return TPoly::zero();
        }
        let mut c = vec![0; k as usize];
        c.extend_from_slice(&self.0);
        TPoly(c)
    }

    pub fn one_minus_t_power(k: u32) -> TPoly {
        (0..k).fold(TPoly::one(), |acc, _| acc.mul(&TPoly(vec![1, -1])))
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{a}*t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}*t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// A monomial ideal with minimal generators and an explicit variable universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
    universe: BTreeSet<VarIndex>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`; the universe is extended by every variable used.
    pub fn new<I: IntoIterator<Item = Monomial>>(
        gens: I,
        universe: impl IntoIterator<Item = VarIndex>,
    ) -> MonomialIdeal {
        let gens = minimalize(gens);
        let mut universe: BTreeSet<VarIndex> = universe.into_iter().collect();
        for g in &gens {
            universe.extend(g.support());
        }
        MonomialIdeal { gens, universe }
    }

    /// Universe = variables occurring in the generators.
    pub fn from_gens<I: IntoIterator<Item = Monomial>>(gens: I) -> MonomialIdeal {
        MonomialIdeal::new(gens, std::iter::empty())
    }

    pub fn zero(universe: impl IntoIterator<Item = VarIndex>) -> MonomialIdeal {
        MonomialIdeal::new(std::iter::empty(), universe)
    }

    pub fn unit(universe: impl IntoIterator<Item = VarIndex>) -> MonomialIdeal {
        MonomialIdeal::new([Monomial::one()], universe)
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn universe(&self) -> &BTreeSet<VarIndex> {
        &self.universe
    }

    pub fn with_universe(&self, universe: impl IntoIterator<Item = VarIndex>) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.clone(), universe)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Variables occurring in some minimal generator.
    pub fn support(&self) -> BTreeSet<VarIndex> {
        self.gens.iter().flat_map(|g| g.support()).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(
            self.gens.iter().chain(&other.gens).cloned(),
            self.universe.union(&other.universe).copied(),
        )
    }

    /// `(I : m)`
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.gens.iter().map(|g| g.colon(m)),
            self.universe.iter().copied(),
        )
    }

    /// Substitutes variables in every generator and minimalizes.
    pub fn map_vars(
        &self,
        mut f: impl FnMut(VarIndex) -> VarIndex,
        universe: impl IntoIterator<Item = VarIndex>,
    ) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().map(|g| g.map_vars(&mut f)), universe)
    }

    /// Artinian: a pure power of every universe variable lies in the ideal.
    pub fn artinian_failure(&self) -> Option<VarIndex> {
        self.universe.iter().copied().find(|&v| {
            !self
                .gens
                .iter()
                .any(|g| g.factors().len() == 1 && g.factors()[0].0 == v || g.is_one())
        })
    }

    /// Alexander dual: the ideal of minimal transversals of the generator supports.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let vars: Vec<VarIndex> = self.universe.iter().copied().collect();
        let edges = self.edge_masks(&vars)?;
        let transversals = minimal_transversals(&edges);
        Ok(MonomialIdeal::new(
            transversals
                .into_iter()
                .map(|t| Monomial::squarefree(bits(t).map(|k| vars[k]))),
            vars.iter().copied(),
        ))
    }

    fn edge_masks(&self, vars: &[VarIndex]) -> Result<Vec<u128>> {
        if vars.len() > 128 {
            return Err(Error::Overflow("transversal bitmask (more than 128 variables)"));
        }
        Ok(self
            .gens
            .iter()
            .map(|g| {
                g.support().fold(0u128, |acc, v| {
                    acc | 1u128 << vars.binary_search(&v).expect("universe covers gens")
                })
            })
            .collect())
    }

    /// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^v`.
    pub fn hilbert_numerator(&self) -> TPoly {
        let (_, dense) = self.dense();
        hilbert_dense(dense)
    }

    /// The same numerator by inclusion-exclusion over subsets of generators.
    pub fn hilbert_numerator_incl_excl(&self) -> TPoly {
        let n = self.gens.len();
        assert!(n <= 20, "inclusion-exclusion is exponential in the generator count");
        let mut coeffs: BTreeMap<u32, i64> = BTreeMap::new();
        for mask in 0u32..(1 << n) {
            let lcm = (0..n)
                .filter(|k| mask >> k & 1 == 1)
                .fold(Monomial::one(), |acc, k| acc.lcm(&self.gens[k]));
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            *coeffs.entry(lcm.degree()).or_insert(0) += sign;
        }
        let top = coeffs.keys().max().copied().unwrap_or(0) as usize;
        let mut c = vec![0; top + 1];
        for (d, v) in coeffs {
            c[d as usize] += v;
        }
        TPoly::trimmed(c)
    }

    /// Dense exponent vectors over the variables occurring in generators.
    fn dense(&self) -> (Vec<VarIndex>, Vec<Vec<u32>>) {
        let vars: Vec<VarIndex> = self.support().into_iter().collect();
        let dense = self
            .gens
            .iter()
            .map(|g| {
                let mut v = vec![0u32; vars.len()];
                for &(x, e) in g.factors() {
                    v[vars.binary_search(&x).expect("support")] = e;
                }
                v
            })
            .collect();
        (vars, dense)
    }

    /// Minimum number of variables meeting every generator.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let vars: Vec<VarIndex> = self.support().into_iter().collect();
        let radical = MonomialIdeal::new(
            self.gens.iter().map(|g| Monomial::squarefree(g.support())),
            vars.iter().copied(),
        );
        let edges = radical.edge_masks(&vars)?;
        Ok(minimal_transversals(&edges)
            .into_iter()
            .map(|t| t.count_ones() as usize)
            .min()
            .expect("a nonzero proper ideal has a transversal"))
    }

    /// Supports of all associated primes, found by a brute-force search over
    /// witnesses `m` with exponents bounded by the generator exponents.
    pub fn associated_primes(&self, cap: usize) -> Result<BTreeSet<Vec<VarIndex>>> {
        let mut out = BTreeSet::new();
        if self.is_zero() || self.is_unit() {
            return Ok(out);
        }
        let (vars, _) = self.dense();
        let maxexp: Vec<u32> = vars
            .iter()
            .map(|&v| self.gens.iter().map(|g| g.exponent(v)).max().unwrap_or(0))
            .collect();
        let size = maxexp
            .iter()
            .try_fold(1usize, |acc, &e| acc.checked_mul(e as usize + 1))
            .filter(|&s| s <= cap)
            .ok_or(Error::ExplosionGuard { cap })?;
        for mut code in 0..size {
            let mut factors = Vec::new();
            for (k, &e) in maxexp.iter().enumerate() {
                factors.push((vars[k], (code % (e as usize + 1)) as u32));
                code /= e as usize + 1;
            }
            let m = Monomial::from_factors(factors);
            if self.contains(&m) {
                continue;
            }
            let q = self.colon(&m);
            if q.gens.iter().all(|g| g.degree() == 1) {
                out.insert(q.gens.iter().flat_map(|g| g.support()).collect());
            }
        }
        Ok(out)
    }

    pub fn render(&self, letter: &str, labels: Option<&[String]>) -> Vec<String> {
        self.gens.iter().map(|g| g.render(letter, labels)).collect()
    }
}

/// Divisibility-minimal generators, sorted by degree then lexicographically.
pub fn minimalize<I: IntoIterator<Item = Monomial>>(gens: I) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    all.sort();
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    // sorted by degree, so a divisor is always seen before its multiples
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn bits(mut x: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let k = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(k)
        }
    })
}

/// Berge's algorithm: fold in one edge at a time, keeping only minimal transversals.
pub(crate) fn minimal_transversals(edges: &[u128]) -> Vec<u128> {
    let mut current: Vec<u128> = vec![0];
    for &e in edges {
        let mut next: Vec<u128> = Vec::new();
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                for k in bits(e) {
                    next.push(t | 1u128 << k);
                }
            }
        }
        next.sort_by_key(|t| (t.count_ones(), *t));
        next.dedup();
        let mut kept: Vec<u128> = Vec::new();
        for t in next {
            if !kept.iter().any(|k| k & t == *k) {
                kept.push(t);
            }
        }
        current = kept;
    }
    current
}

/// Pivot recursion on dense exponent vectors.
pub(crate) fn hilbert_dense(gens: Vec<Vec<u32>>) -> TPoly {
    let gens = minimal_dense(gens);
    if gens.is_empty() {
        return TPoly::one();
    }
    if gens[0].iter().all(|&e| e == 0) {
        return TPoly::zero();
    }
    let nv = gens[0].len();
    let mut count = vec![0usize; nv];
    let mut coprime = true;
    for g in &gens {
        for (k, &e) in g.iter().enumerate() {
            if e > 0 {
                count[k] += 1;
                if count[k] > 1 {
                    coprime = false;
                }
            }
        }
    }
    if coprime {
        return gens.iter().fold(TPoly::one(), |acc, g| {
            acc.mul(&TPoly::one_minus_t_pow(g.iter().sum()))
        });
    }
    // most frequent variable, ties to the smallest index
    let x = (0..nv).max_by_key(|&k| (count[k], std::cmp::Reverse(k))).expect("nv > 0");
    let without: Vec<Vec<u32>> = gens.iter().filter(|g| g[x] == 0).cloned().collect();
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[x] = h[x].saturating_sub(1);
            h
        })
        .collect();
    TPoly(vec![1, -1])
        .mul(&hilbert_dense(without))
        .add(&hilbert_dense(colon).shift(1))
}

fn minimal_dense(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.iter().zip(&g).all(|(a, b)| a <= b)) {
            kept.push(g);
        }
    }
    kept
}

/// Ideal file: a `# vars=<family> ...` header followed by one monomial per line.
pub struct IdealFile {
    pub kind: VarKind,
    pub header: BTreeMap<String, String>,
    pub gens: Vec<Monomial>,
}

impl IdealFile {
    pub fn parse(text: &str, resolve: &dyn Fn(&str) -> Option<usize>) -> Result<IdealFile> {
        let mut header = BTreeMap::new();
        let mut gens = Vec::new();
        let mut kind = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                for kv in rest.split_whitespace() {
                    if let Some((k, v)) = kv.split_once('=') {
                        header.insert(k.to_string(), v.to_string());
                    }
                }
                if let Some(v) = header.get("vars") {
                    kind = Some(VarKind::parse(v)?);
                }
                continue;
            }
            let k = kind.ok_or_else(|| Error::Parse("missing `# vars=...` header".into()))?;
            gens.push(parse_monomial(line, k, resolve)?);
        }
        let kind = kind.ok_or_else(|| Error::Parse("missing `# vars=...` header".into()))?;
        Ok(IdealFile { kind, header, gens })
    }

    pub fn render(
        kind: VarKind,
        extra: &[(&str, String)],
        ideal: &MonomialIdeal,
        labels: Option<&[String]>,
    ) -> String {
        let mut out = format!("# vars={}", kind.name());
        for (k, v) in extra {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push('\n');
        for line in ideal.render("x", labels) {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn n(i: u32) -> VarIndex {
        VarIndex::Nat(i)
    }

    fn mono(f: &[(u32, u32)]) -> Monomial {
        Monomial::from_factors(f.iter().map(|&(v, e)| (n(v), e)))
    }

    fn sq(vs: &[u32]) -> Monomial {
        Monomial::squarefree(vs.iter().map(|&v| n(v)))
    }

    #[test]
    fn minimalize_examples() {
        let x = mono(&[(0, 1)]);
        let x2 = mono(&[(0, 2)]);
        assert_eq!(minimalize([x.clone(), x2]), vec![x]);
        let got = minimalize([sq(&[0, 1]), sq(&[1, 2]), sq(&[0, 1, 2])]);
        assert_eq!(got, vec![sq(&[0, 1]), sq(&[1, 2])]);
        assert!(MonomialIdeal::from_gens([]).is_zero());
    }

    #[test]
    fn containment() {
        let i = MonomialIdeal::from_gens([mono(&[(0, 2)])]);
        assert!(i.contains(&mono(&[(0, 3)])));
        let j = MonomialIdeal::from_gens([sq(&[0, 1])]);
        assert!(!j.contains(&sq(&[0])));
        let a0 = VarIndex::Pair(0, 0);
        let b0 = VarIndex::Pair(1, 0);
        let c1 = VarIndex::Pair(2, 1);
        let k = MonomialIdeal::from_gens([Monomial::squarefree([a0, b0])]);
        assert!(k.contains(&Monomial::squarefree([a0, b0, c1])));
    }

    #[test]
    fn dual_examples() {
        let a0 = VarIndex::Pair(0, 0);
        let b0 = VarIndex::Pair(1, 0);
        let i = MonomialIdeal::from_gens([Monomial::squarefree([a0, b0])]);
        assert_eq!(
            i.alexander_dual().unwrap().gens(),
            &[Monomial::var(a0), Monomial::var(b0)]
        );
        let j = MonomialIdeal::from_gens([sq(&[1, 2]), sq(&[2, 3])]);
        assert_eq!(j.alexander_dual().unwrap().gens(), &[sq(&[2]), sq(&[1, 3])]);
        assert_eq!(
            MonomialIdeal::from_gens([mono(&[(0, 2)])]).alexander_dual(),
            Err(Error::NotSquarefree)
        );
        // zero and unit ideals swap
        assert!(MonomialIdeal::zero([n(0)]).alexander_dual().unwrap().is_unit());
        assert!(MonomialIdeal::unit([n(0)]).alexander_dual().unwrap().is_zero());
    }

    #[test]
    fn hilbert_examples() {
        let x2 = MonomialIdeal::new([mono(&[(0, 2)])], [n(0)]);
        assert_eq!(x2.hilbert_numerator(), TPoly(vec![1, 0, -1]));
        assert_eq!(MonomialIdeal::zero([n(0), n(1)]).hilbert_numerator(), TPoly::one());
        let xy = MonomialIdeal::from_gens([sq(&[0, 1])]);
        assert_eq!(xy.hilbert_numerator(), TPoly(vec![1, 0, -1]));
        assert_eq!(xy.hilbert_numerator().to_string(), "1 - t^2");
    }

    // oracle: count standard monomials degreewise and multiply by (1-t)^v
    fn hilbert_by_counting(i: &MonomialIdeal, vars: &[VarIndex], upto: u32) -> Vec<i64> {
        let mut counts = vec![0i64; upto as usize + 1];
        fn rec(
            i: &MonomialIdeal,
            vars: &[VarIndex],
            k: usize,
            left: u32,
            cur: &mut Vec<(VarIndex, u32)>,
            counts: &mut Vec<i64>,
            upto: u32,
        ) {
            if k == vars.len() {
                let m = Monomial::from_factors(cur.iter().copied());
                if !i.contains(&m) {
                    counts[(upto - left) as usize] += 1;
                }
                return;
            }
            for e in 0..=left {
                cur.push((vars[k], e));
                rec(i, vars, k + 1, left - e, cur, counts, upto);
                cur.pop();
            }
        }
        rec(i, vars, 0, upto, &mut Vec::new(), &mut counts, upto);
        let series = TPoly(counts);
        let prod = series.mul(&TPoly::one_minus_t_power(vars.len() as u32));
        prod.0.into_iter().take(upto as usize + 1).collect()
    }

    #[test]
    fn hilbert_matches_counting() {
        let i = MonomialIdeal::from_gens([mono(&[(0, 2), (1, 1)]), mono(&[(1, 3)]), sq(&[0, 2])]);
        let vars: Vec<VarIndex> = i.universe().iter().copied().collect();
        let k = i.hilbert_numerator();
        let want = hilbert_by_counting(&i, &vars, 8);
        let mut got = k.0.clone();
        got.resize(9, 0);
        assert_eq!(got, want);
    }

    #[test]
    fn height_examples() {
        assert_eq!(MonomialIdeal::from_gens([sq(&[0])]).height(), Ok(1));
        let tri = MonomialIdeal::from_gens([sq(&[0, 1]), sq(&[0, 2]), sq(&[1, 2])]);
        assert_eq!(tri.height(), Ok(2));
        assert_eq!(MonomialIdeal::zero([n(0)]).height(), Err(Error::ZeroIdeal));
        assert_eq!(MonomialIdeal::unit([n(0)]).height(), Err(Error::UnitIdeal));
    }

    #[test]
    fn associated_prime_examples() {
        let set = |v: Vec<Vec<u32>>| -> BTreeSet<Vec<VarIndex>> {
            v.into_iter().map(|s| s.into_iter().map(n).collect()).collect()
        };
        let x2 = MonomialIdeal::from_gens([mono(&[(0, 2)])]);
        assert_eq!(x2.associated_primes(1000).unwrap(), set(vec![vec![0]]));
        let xy = MonomialIdeal::from_gens([sq(&[0, 1])]);
        assert_eq!(xy.associated_primes(1000).unwrap(), set(vec![vec![0], vec![1]]));
        let emb = MonomialIdeal::from_gens([mono(&[(0, 2)]), sq(&[0, 1])]);
        assert_eq!(
            emb.associated_primes(1000).unwrap(),
            set(vec![vec![0], vec![0, 1]])
        );
    }

    #[test]
    fn text_round_trip() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let m = Monomial::from_factors([(VarIndex::Pair(0, 0), 2), (VarIndex::Pair(2, 1), 1)]);
        let s = m.render("x", Some(&labels));
        assert_eq!(s, "x[a,0]^2*x[c,1]");
        let resolve = |t: &str| labels.iter().position(|l| l == t);
        assert_eq!(parse_monomial(&s, VarKind::Pair, &resolve).unwrap(), m);
        assert!(parse_monomial("x[z,0]", VarKind::Pair, &resolve).is_err());
        assert!(parse_monomial("x[a,0", VarKind::Pair, &resolve).is_err());
    }

    #[test]
    fn ideal_file_round_trip() {
        let i = MonomialIdeal::from_gens([mono(&[(0, 2)]), sq(&[0, 1])]);
        let text = IdealFile::render(VarKind::Nat, &[("n", "1".into())], &i, None);
        assert_eq!(text, "# vars=nat n=1\nx[0]^2\nx[0]*x[1]\n");
        let back = IdealFile::parse(&text, &|_| None).unwrap();
        assert_eq!(MonomialIdeal::from_gens(back.gens), i);
        assert_eq!(back.header.get("n").map(String::as_str), Some("1"));
        assert!(IdealFile::parse("x[0]\n", &|_| None).is_err());
    }

    fn squarefree_ideal(nvars: u32) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(1u32..(1 << nvars), 0..7).prop_map(move |masks| {
            MonomialIdeal::new(
                masks
                    .into_iter()
                    .map(|m| Monomial::squarefree((0..nvars).filter(|k| m >> k & 1 == 1).map(n))),
                (0..nvars).map(n),
            )
        })
    }

    fn general_ideal() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..4, 4), 0..8).prop_map(|gens| {
            MonomialIdeal::new(
                gens.into_iter().map(|e| {
                    Monomial::from_factors(e.into_iter().enumerate().map(|(k, x)| (n(k as u32), x)))
                }),
                (0..4).map(n),
            )
        })
    }

    proptest! {
        #[test]
        fn dual_is_involution(i in squarefree_ideal(8)) {
            let d = i.alexander_dual().unwrap();
            prop_assert_eq!(d.alexander_dual().unwrap(), i);
        }

        #[test]
        fn pivot_matches_inclusion_exclusion(i in general_ideal()) {
            prop_assert_eq!(i.hilbert_numerator(), i.hilbert_numerator_incl_excl());
        }

        #[test]
        fn height_is_min_prime(i in squarefree_ideal(6)) {
            prop_assume!(!i.is_zero());
            let minimal_primes = i.associated_primes(1 << 12).unwrap();
            let h = minimal_primes.iter().map(Vec::len).min().unwrap();
            prop_assert_eq!(i.height().unwrap(), h);
        }
    }

    #[test]
    fn dual_membership_exhaustive() {
        let ideals = [
            vec![sq(&[0, 1]), sq(&[1, 2, 3])],
            vec![sq(&[0]), sq(&[2, 4]), sq(&[3, 5])],
            vec![sq(&[0, 1, 2]), sq(&[2, 3]), sq(&[4, 5]), sq(&[1, 5])],
        ];
        for gens in ideals {
            let i = MonomialIdeal::new(gens, (0..6).map(n));
            let d = i.alexander_dual().unwrap();
            for mask in 0u32..64 {
                let m = sq(&(0..6).filter(|k| mask >> k & 1 == 1).collect::<Vec<_>>());
                let hits = i.gens().iter().all(|g| !g.coprime(&m));
                assert_eq!(d.contains(&m), hits);
            }
        }
    }

    #[test]
    fn divides_edge_cases() {
        assert!(Monomial::one().divides(&sq(&[0])));
        assert!(!sq(&[1]).divides(&sq(&[0])));
        assert!(!sq(&[0, 3]).divides(&sq(&[0, 1, 2])));
        assert!(mono(&[(1, 2)]).divides(&mono(&[(0, 1), (1, 2), (2, 1)])));
    }
}
