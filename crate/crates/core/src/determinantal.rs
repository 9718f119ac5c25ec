//! Staircase matrices `M(l)` of weakly increasing sequences, their ideals of
//! maximal minors, terrace sequences, and the letterplace ideals that are
//! their initial ideals.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_with_stats, initial_ideal, reduce, Budget, Polynomial, TermOrder};
use crate::letterplace::principal_letterplace_gens;
use crate::monomial::{Monomial, MonomialIdeal, VarIndex};
use crate::poset::Poset;

/// `l_a <= l_(a+1) <= ... <= l_b` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LSequence {
    a: u32,
    vals: Vec<u32>,
}

impl LSequence {
    pub fn new(a: u32, vals: Vec<u32>) -> Result<LSequence> {
        if vals.len() < 2 {
            return Err(Error::InvalidSequence(
                "need at least two entries so that a < b".to_string(),
            ));
        }
        if let Some(w) = vals.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::InvalidSequence(format!(
                "not weakly increasing: {} > {}",
                w[0], w[1]
            )));
        }
        Ok(LSequence { a, vals })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.a + self.vals.len() as u32 - 1
    }

    pub fn vals(&self) -> &[u32] {
        &self.vals
    }

    /// `l_c` for `a <= c <= b`.
    pub fn at(&self, c: u32) -> u32 {
        self.vals[(c - self.a) as usize]
    }

    /// `l_a, ..., l_c`
    pub fn prefix(&self, c: u32) -> Result<LSequence> {
        LSequence::new(self.a, self.vals[..=(c - self.a) as usize].to_vec())
    }

    /// `l_c, ..., l_b`
    pub fn suffix(&self, c: u32) -> Result<LSequence> {
        LSequence::new(c, self.vals[(c - self.a) as usize..].to_vec())
    }
}

/// `M(l)`: rows `a..b-1`, columns `l_a+1..=l_b`; column `p` in
/// `[l_c+1, l_(c+1)]` holds `y[p,i]` for `a <= i <= c` and zeros above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetMatrix {
    seq: LSequence,
    /// Top filled row of each column, indexed from `l_a + 1`.
    height: Vec<u32>,
}

impl DetMatrix {
    pub fn rows(&self) -> std::ops::Range<u32> {
        self.seq.a()..self.seq.b()
    }

    pub fn cols(&self) -> std::ops::RangeInclusive<u32> {
        self.seq.at(self.seq.a()) + 1..=self.seq.at(self.seq.b())
    }

    pub fn is_var(&self, p: u32, i: u32) -> bool {
        let first = self.seq.at(self.seq.a()) + 1;
        p >= first
            && self.rows().contains(&i)
            && ((p - first) as usize) < self.height.len()
            && i <= self.height[(p - first) as usize]
    }

    pub fn vars(&self) -> Vec<VarIndex> {
        let mut out = Vec::new();
        for p in self.cols() {
            for i in self.rows() {
                if self.is_var(p, i) {
                    out.push(VarIndex::Pair(p, i));
                }
            }
        }
        out
    }

    /// Bullet diagram, highest row on top.
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        for i in self.rows().rev() {
            let row: Vec<&str> = self
                .cols()
                .map(|p| if self.is_var(p, i) { "*" } else { "." })
                .collect();
            lines.push(format!("{i:>3} {}", row.join(" ")));
        }
        lines.join("\n")
    }

    fn entry(&self, p: u32, i: u32) -> Polynomial {
        if self.is_var(p, i) {
            Polynomial::var(VarIndex::Pair(p, i))
        } else {
            Polynomial::zero()
        }
    }

    /// Determinant on rows `rows` and columns `cols` (same length), expanding
    /// along the highest row, where the staircase has the most zeros.
    pub fn minor(&self, rows: &[u32], cols: &[u32]) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        let Some((&top, rest)) = rows.split_last() else {
            return Polynomial::constant(BigRational::one());
        };
        let mut out = Polynomial::zero();
        for (k, &p) in cols.iter().enumerate() {
            if !self.is_var(p, top) {
                continue;
            }
            let sub: Vec<u32> = cols.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &q)| q).collect();
            let cof = self.minor(rest, &sub);
            if cof.is_zero() {
                continue;
            }
            let term = self.entry(p, top).mul(&cof);
            // sign of the position (last row, column k)
            let sign = (rows.len() - 1 + k) % 2 == 1;
            out = if sign { out.sub(&term) } else { out.add(&term) };
        }
        out
    }

    /// Row `a + j` paired with the `j`-th smallest column, if all are variables.
    pub fn diagonal(&self, cols: &[u32]) -> Option<Monomial> {
        let a = self.seq.a();
        let vars: Option<Vec<VarIndex>> = cols
            .iter()
            .enumerate()
            .map(|(j, &p)| self.is_var(p, a + j as u32).then_some(VarIndex::Pair(p, a + j as u32)))
            .collect();
        vars.map(Monomial::squarefree)
    }
}

pub fn build_matrix(l: &LSequence) -> DetMatrix {
    let first = l.at(l.a()) + 1;
    let mut height = Vec::new();
    for c in l.a()..l.b() {
        for _ in l.at(c) + 1..=l.at(c + 1) {
            height.push(c);
        }
    }
    debug_assert_eq!(height.len() as u32 + first, l.at(l.b()) + 1);
    DetMatrix {
        seq: l.clone(),
        height,
    }
}

/// A generating minor of `I(l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    /// The `c` of `J_a^c`.
    pub c: u32,
    pub cols: Vec<u32>,
    pub poly: Polynomial,
}

fn combinations(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    fn rec(items: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..items.len() {
            if items.len() - j < k - cur.len() {
                break;
            }
            cur.push(items[j]);
            rec(items, k, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// All nonzero maximal minors of the lower left blocks: for each `c` in
/// `(a, b]`, rows `a..c-1` and columns `l_a+1..=l_c`.
pub fn generating_minors(l: &LSequence) -> Vec<Minor> {
    let m = build_matrix(l);
    let mut out = Vec::new();
    for c in l.a() + 1..=l.b() {
        let rows: Vec<u32> = (l.a()..c).collect();
        let cols: Vec<u32> = (l.at(l.a()) + 1..=l.at(c)).collect();
        for chosen in combinations(&cols, rows.len()) {
            let poly = m.minor(&rows, &chosen);
            if !poly.is_zero() {
                out.push(Minor { c, cols: chosen, poly });
            }
        }
    }
    out
}

/// Number of maximal minors of all blocks, vanishing ones included.
pub fn minor_count(l: &LSequence) -> usize {
    (l.a() + 1..=l.b())
        .map(|c| combinations(&(l.at(l.a()) + 1..=l.at(c)).collect::<Vec<_>>(), (c - l.a()) as usize).len())
        .sum()
}

pub fn ideal_gens(l: &LSequence) -> Vec<Polynomial> {
    generating_minors(l).into_iter().map(|m| m.poly).collect()
}

/// `l_a - a, l_(a+1) - a, l_(a+2) - (a+1), ..., l_b - (b-1)`
fn differences(l: &LSequence) -> Vec<i64> {
    (l.a()..=l.b())
        .map(|c| {
            let shift = if c == l.a() { c } else { c - 1 };
            l.at(c) as i64 - shift as i64
        })
        .collect()
}

/// Constant on the runs between successive strict maxima of the differences.
pub fn terrace(l: &LSequence) -> LSequence {
    let d = differences(l);
    let mut vals = Vec::with_capacity(d.len());
    let mut best = d[0];
    let mut current = l.vals()[0];
    for (k, &x) in d.iter().enumerate() {
        if x > best {
            best = x;
            current = l.vals()[k];
        }
        vals.push(current);
    }
    LSequence { a: l.a(), vals }
}

pub fn is_terrace(l: &LSequence) -> bool {
    terrace(l) == *l
}

pub fn i_sequence(l: &LSequence) -> Result<LSequence> {
    if !is_terrace(l) {
        return Err(Error::NotTerrace);
    }
    let a = l.a();
    if l.at(a) < a {
        return Err(Error::InvalidSequence(format!("l_a = {} is below a = {a}", l.at(a))));
    }
    let mut vals = vec![l.at(a) - a];
    for c in a + 1..=l.b() {
        let prev = *vals.last().expect("nonempty");
        vals.push(if l.at(c) > l.at(c - 1) { l.at(c) + 1 - c } else { prev });
    }
    LSequence::new(a, vals)
}

/// Inverse of `i_sequence`.
pub fn terrace_from_i(i: &LSequence) -> LSequence {
    let a = i.a();
    let mut vals = vec![i.at(a) + a];
    for c in a + 1..=i.b() {
        let prev = *vals.last().expect("nonempty");
        vals.push(if i.at(c) > i.at(c - 1) { i.at(c) + c - 1 } else { prev });
    }
    LSequence { a, vals }
}

/// `L^Y(i)`: the principal letterplace ideal of `phi(p) = c` for
/// `p in [i_c+1, i_(c+1)]`, with `x[p,j]` sent to `y[p+j, j]`.
pub fn ly_ideal(i: &LSequence) -> MonomialIdeal {
    let (a, lo) = (i.a(), i.at(i.a()));
    let mut alpha = Vec::new();
    for c in a..i.b() {
        for _ in i.at(c) + 1..=i.at(c + 1) {
            alpha.push(c - a);
        }
    }
    let chain = Poset::chain(alpha.len());
    let gens = principal_letterplace_gens(&chain, &alpha).expect("constant runs are isotone");
    gens.map_vars(
        |v| match v {
            VarIndex::Pair(k, j) => {
                let p = lo + 1 + k;
                VarIndex::Pair(p + j + a, j + a)
            }
            other => other,
        },
        std::iter::empty(),
    )
}

/// `max { l_d - l_a - (d - a) + 1 : a < d <= b }`
pub fn codim_formula(l: &LSequence) -> i64 {
    let a = l.a();
    (a + 1..=l.b())
        .map(|d| l.at(d) as i64 - l.at(a) as i64 - (d - a) as i64 + 1)
        .max()
        .expect("a < b")
}

fn height_or_zero(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        Ok(0)
    } else {
        ideal.height()
    }
}

fn render_ideal(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.gens().iter().map(|g| g.render("y", None)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub l: Vec<u32>,
    pub a: u32,
    pub variables: usize,
    pub minors: usize,
    pub gb_size: usize,
    pub pairs_reduced: usize,
    /// Buchberger finished and every minor reduces to zero.
    pub gb_ok: bool,
    pub diagonal_ok: bool,
    pub initial_ideal: Vec<String>,
    pub initial_equals_ly: bool,
    /// Heights of `in(I)` and `L^Y(i)`, `i_b - i_a`, and the max formula.
    pub codim: CodimReport,
    pub codim_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub initial_height: usize,
    pub ly_height: usize,
    pub i_span: i64,
    pub max_formula: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetReport {
    pub terrace: Vec<u32>,
    pub i_sequence: Vec<u32>,
    pub ly_ideal: Vec<String>,
    pub raw: InstanceReport,
    /// Present when `l` is not already a terrace sequence.
    pub terrace_instance: Option<InstanceReport>,
    pub ok: bool,
}

/// Leading term of each generating minor with a nonzero diagonal is that diagonal.
pub fn diagonal_property(l: &LSequence, ord: &TermOrder) -> bool {
    let m = build_matrix(l);
    generating_minors(l).iter().all(|minor| match m.diagonal(&minor.cols) {
        Some(d) => minor.poly.leading_monomial(ord) == Some(&d),
        None => true,
    })
}

fn verify_instance(l: &LSequence, ly: &MonomialIdeal, i: &LSequence, budget: Budget) -> Result<InstanceReport> {
    let m = build_matrix(l);
    let vars = m.vars();
    let ord = TermOrder::diagonal(vars.iter().copied());
    let gens = ideal_gens(l);
    let (gb, stats) = buchberger_with_stats(&gens, &ord, budget)?;
    let gb_ok = gens.iter().all(|g| reduce(g, &gb, &ord).is_zero());
    let init = initial_ideal(&gb, &ord);
    let initial_height = height_or_zero(&init)?;
    let ly_height = height_or_zero(ly)?;
    let i_span = i.at(i.b()) as i64 - i.at(i.a()) as i64;
    let max_formula = codim_formula(l);
    let codim = CodimReport {
        initial_height,
        ly_height,
        i_span,
        max_formula,
    };
    Ok(InstanceReport {
        l: l.vals().to_vec(),
        a: l.a(),
        variables: vars.len(),
        minors: gens.len(),
        gb_size: gb.len(),
        pairs_reduced: stats.pairs_reduced,
        gb_ok,
        diagonal_ok: diagonal_property(l, &ord),
        initial_ideal: render_ideal(&init),
        initial_equals_ly: init.gens() == ly.gens(),
        codim_ok: ly_height as i64 == i_span && i_span == max_formula && initial_height == ly_height,
        codim,
    })
}

/// Gröbner basis of `I(l)` under the diagonal order against `L^Y(i)`, for
/// `l` and, when it differs, for its terrace sequence.
pub fn verify_main(l: &LSequence, budget: Budget) -> Result<DetReport> {
    let t = terrace(l);
    let i = i_sequence(&t)?;
    let ly = ly_ideal(&i);
    let raw = verify_instance(l, &ly, &i, budget)?;
    let terrace_instance = if t == *l {
        None
    } else {
        Some(verify_instance(&t, &ly, &i, budget)?)
    };
    let good = |r: &InstanceReport| r.gb_ok && r.initial_equals_ly && r.codim_ok && r.diagonal_ok;
    let ok = good(&raw) && terrace_instance.as_ref().map_or(true, good);
    Ok(DetReport {
        terrace: t.vals().to_vec(),
        i_sequence: i.vals().to_vec(),
        ly_ideal: render_ideal(&ly),
        raw,
        terrace_instance,
        ok,
    })
}

/// `l_d - l_c <= d - c` for every `d >= c`, so the blocks beyond `c` add nothing.
pub fn reduction_applies(l: &LSequence, c: u32) -> bool {
    c > l.a() && c <= l.b() && (c..=l.b()).all(|d| l.at(d) <= l.at(c) + (d - c))
}

fn ideal_contains(gb: &[Polynomial], gens: &[Polynomial], ord: &TermOrder) -> bool {
    gens.iter().all(|g| reduce(g, gb, ord).is_zero())
}

/// Both containments between `I(l_a..l_b)` and `I(l_a..l_c)`, when the
/// hypothesis of the reduction holds; `None` otherwise.
pub fn check_reduction(l: &LSequence, c: u32, budget: Budget) -> Result<Option<bool>> {
    if !reduction_applies(l, c) {
        return Ok(None);
    }
    let short = l.prefix(c)?;
    let ord = TermOrder::diagonal(build_matrix(l).vars());
    let (long_gens, short_gens) = (ideal_gens(l), ideal_gens(&short));
    let long_gb = buchberger_with_stats(&long_gens, &ord, budget)?.0;
    let short_gb = buchberger_with_stats(&short_gens, &ord, budget)?.0;
    Ok(Some(
        ideal_contains(&long_gb, &short_gens, &ord) && ideal_contains(&short_gb, &long_gens, &ord),
    ))
}

/// `L^(i_a..i_c) ⊆ L(i_a..i_b) ⊆ L^(i_a..i_c) + L^(i_c..i_b)` on the `Y` side.
pub fn check_segment_inclusions(i: &LSequence, c: u32) -> Result<bool> {
    let whole = ly_ideal(i);
    let head = if c > i.a() { ly_ideal(&i.prefix(c)?) } else { MonomialIdeal::from_gens([]) };
    let tail = if c < i.b() { ly_ideal(&i.suffix(c)?) } else { MonomialIdeal::from_gens([]) };
    Ok(whole.contains_ideal(&head) && head.sum(&tail).contains_ideal(&whole))
}

/// Variables `y[l_c + 1, c]` with `a < c < b` and `l_c < l_(c+1)` that occur
/// in a minimal generator of `L^Y(i)`; expected to be empty.
pub fn step_corner_violations(l: &LSequence) -> Result<Vec<VarIndex>> {
    let i = i_sequence(&terrace(l))?;
    let support: BTreeSet<VarIndex> = ly_ideal(&i).support();
    Ok((l.a() + 1..l.b())
        .filter(|&c| l.at(c) < l.at(c + 1))
        .map(|c| VarIndex::Pair(l.at(c) + 1, c))
        .filter(|v| support.contains(v))
        .collect())
}

/// Leading monomials of the generating minors, checked for membership in `L^Y(i)`.
pub fn leading_terms_in_ly(l: &LSequence) -> Result<bool> {
    let i = i_sequence(&terrace(l))?;
    let ly = ly_ideal(&i);
    let ord = TermOrder::diagonal(build_matrix(l).vars());
    Ok(ideal_gens(l)
        .iter()
        .all(|g| g.leading_monomial(&ord).is_some_and(|m| ly.contains(m))))
}
