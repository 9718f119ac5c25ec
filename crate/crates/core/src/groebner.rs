//! Exact polynomials over the rationals, term orders, normal forms and
//! reduced Gröbner bases by Buchberger's algorithm.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{parse_monomial, Monomial, MonomialIdeal, VarIndex, VarKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A term order given by a ranking of variables, highest first. Variables
/// missing from the ranking sit below all ranked ones, in `VarIndex` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    ranking: Vec<VarIndex>,
    rank: BTreeMap<VarIndex, usize>,
}

type RankKey = (usize, VarIndex);

impl TermOrder {
    pub fn new(kind: OrderKind, ranking: Vec<VarIndex>) -> TermOrder {
        let rank = ranking.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        TermOrder { kind, ranking, rank }
    }

    pub fn lex(ranking: Vec<VarIndex>) -> TermOrder {
        TermOrder::new(OrderKind::Lex, ranking)
    }

    pub fn grevlex(ranking: Vec<VarIndex>) -> TermOrder {
        TermOrder::new(OrderKind::GrevLex, ranking)
    }

    /// Lex with `y[p,i]` above `y[q,j]` iff `i < j`, or `i = j` and `p < q`.
    /// Picks the main diagonal of every staircase minor.
    pub fn diagonal(vars: impl IntoIterator<Item = VarIndex>) -> TermOrder {
        let mut pairs = Vec::new();
        let mut rest = Vec::new();
        for v in vars {
            match v {
                VarIndex::Pair(p, i) => pairs.push((i, p)),
                other => rest.push(other),
            }
        }
        pairs.sort();
        pairs.dedup();
        rest.sort();
        rest.dedup();
        let ranking = pairs
            .into_iter()
            .map(|(i, p)| VarIndex::Pair(p, i))
            .chain(rest)
            .collect();
        TermOrder::lex(ranking)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[VarIndex] {
        &self.ranking
    }

    fn key(&self, m: &Monomial) -> Vec<(RankKey, u32)> {
        let mut k: Vec<(RankKey, u32)> = m
            .factors()
            .iter()
            .map(|&(v, e)| ((self.rank.get(&v).copied().unwrap_or(usize::MAX), v), e))
            .collect();
        k.sort();
        k
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ka, kb) = (self.key(a), self.key(b));
        match self.kind {
            OrderKind::Lex => {
                for (x, y) in ka.iter().zip(&kb) {
                    if x.0 != y.0 {
                        // the side holding the higher variable wins
                        return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
                    }
                    if x.1 != y.1 {
                        return x.1.cmp(&y.1);
                    }
                }
                ka.len().cmp(&kb.len())
            }
            OrderKind::GrevLex => {
                let c = a.degree().cmp(&b.degree());
                if c.is_ne() {
                    return c;
                }
                for (x, y) in ka.iter().rev().zip(kb.iter().rev()) {
                    if x.0 != y.0 {
                        // the side holding the lower variable loses
                        return if x.0 > y.0 { Ordering::Less } else { Ordering::Greater };
                    }
                    if x.1 != y.1 {
                        return y.1.cmp(&x.1);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// A polynomial with exact rational coefficients; no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn constant(c: BigRational) -> Polynomial {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(v: VarIndex) -> Polynomial {
        Polynomial::term(Monomial::var(v), BigRational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Terms from the largest down.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<(&Monomial, &BigRational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| ord.cmp(b.0, a.0));
        t
    }

    pub fn leading_term(&self, ord: &TermOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, ord: &TermOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|t| t.0)
    }

    pub fn monic(&self, ord: &TermOrder) -> Polynomial {
        match self.leading_term(ord) {
            Some((_, c)) => self.scale(&c.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Text form `+c*y[p,i]^e*... -c*...`, largest term first.
    pub fn render(&self, ord: &TermOrder, letter: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.sorted_terms(ord)
            .into_iter()
            .map(|(m, c)| {
                let sign = if c.is_negative() { '-' } else { '+' };
                let mag = c.abs();
                if m.is_one() {
                    format!("{sign}{mag}")
                } else {
                    format!("{sign}{mag}*{}", m.render(letter, None))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the text form; terms may come in any order and a missing
    /// coefficient means 1.
    pub fn parse(s: &str, kind: VarKind) -> Result<Polynomial> {
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        let resolve = |t: &str| t.parse::<usize>().ok();
        let mut out = Polynomial::zero();
        let mut rest = s;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if rest.len() == s.len() => (false, rest),
                _ => return Err(Error::Parse(format!("expected a sign before `{rest}`"))),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = body[..end].trim();
            rest = body[end..].trim_start();
            if term.is_empty() {
                return Err(Error::Parse("empty term".to_string()));
            }
            let (coef, mono) = match term.split_once('*') {
                Some((c, m)) if !c.contains('[') => (parse_rational(c)?, parse_monomial(m, kind, &resolve)?),
                _ if !term.contains('[') => (parse_rational(term)?, Monomial::one()),
                _ => (BigRational::one(), parse_monomial(term, kind, &resolve)?),
            };
            out.add_term(mono, if negative { -coef } else { coef });
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ord = TermOrder::grevlex(Vec::new());
        f.write_str(&self.render(&ord, "x"))
    }
}

/// Terms sorted ascending under a fixed order, leading term last.
#[derive(Debug, Clone)]
struct Sorted {
    terms: Vec<(Monomial, BigRational)>,
}

impl Sorted {
    fn new(p: &Polynomial, ord: &TermOrder) -> Sorted {
        let mut terms: Vec<_> = p.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        Sorted { terms }
    }

    fn lead(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.last()
    }

    /// `self - c * m * g`, by merging; multiplication by `m` keeps `g` sorted.
    fn sub_mul(&mut self, c: &BigRational, m: &Monomial, g: &Sorted, ord: &TermOrder) {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), -(gc * c))).peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Less => out.push(a.next().expect("peeked")),
                Ordering::Greater => out.push(b.next().expect("peeked")),
                Ordering::Equal => {
                    let (xm, xc) = a.next().expect("peeked");
                    let (_, yc) = b.next().expect("peeked");
                    let s = xc + yc;
                    if !s.is_zero() {
                        out.push((xm, s));
                    }
                }
            }
        }
        self.terms = out;
    }

    fn into_polynomial(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().collect(),
        }
    }

    fn monic(&mut self) {
        if let Some((_, c)) = self.terms.last() {
            let inv = c.recip();
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
    }
}

/// Full normal form, dividing by the members of `basis` in listed order.
fn normal_form(f: Sorted, basis: &[Sorted], ord: &TermOrder) -> Sorted {
    let mut p = f;
    let mut rem: Vec<(Monomial, BigRational)> = Vec::new();
    while let Some((lm, lc)) = p.lead().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.lead().is_some_and(|(gm, _)| gm.divides(&lm)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.lead().expect("nonzero");
                let q = lm.div(gm).expect("divides");
                p.sub_mul(&(&lc / gc), &q, g, ord);
            }
            None => {
                rem.push(p.terms.pop().expect("lead"));
            }
        }
    }
    rem.reverse();
    Sorted { terms: rem }
}

pub fn reduce(f: &Polynomial, g: &[Polynomial], ord: &TermOrder) -> Polynomial {
    let basis: Vec<Sorted> = g.iter().filter(|p| !p.is_zero()).map(|p| Sorted::new(p, ord)).collect();
    normal_form(Sorted::new(f, ord), &basis, ord).into_polynomial()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs that may be reduced.
    pub max_pairs: usize,
    /// Largest degree of a new basis element; `None` means three above the
    /// top input degree.
    pub max_degree: Option<u32>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 100_000,
            max_degree: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_reduced: usize,
    pub pairs_skipped_coprime: usize,
    pub basis_peak: usize,
}

/// The reduced Gröbner basis (monic, sorted by leading monomial ascending).
pub fn buchberger(f: &[Polynomial], ord: &TermOrder, budget: Budget) -> Result<Vec<Polynomial>> {
    buchberger_with_stats(f, ord, budget).map(|(g, _)| g)
}

pub fn buchberger_with_stats(
    f: &[Polynomial],
    ord: &TermOrder,
    budget: Budget,
) -> Result<(Vec<Polynomial>, GbStats)> {
    let mut stats = GbStats::default();
    let top = f.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    let cap = budget.max_degree.unwrap_or(top + 3);
    let mut basis: Vec<Sorted> = Vec::new();
    for p in f.iter().filter(|p| !p.is_zero()) {
        let mut s = Sorted::new(p, ord);
        s.monic();
        basis.push(s);
    }
    let lead = |s: &Sorted| s.lead().expect("nonzero").0.clone();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let add_pairs = |basis: &[Sorted], pairs: &mut Vec<(usize, usize, Monomial)>, stats: &mut GbStats, k: usize| {
        let lk = lead(&basis[k]);
        for i in 0..k {
            let li = lead(&basis[i]);
            if li.coprime(&lk) {
                stats.pairs_skipped_coprime += 1;
            } else {
                pairs.push((i, k, li.lcm(&lk)));
            }
        }
    };
    for k in 0..basis.len() {
        add_pairs(&basis, &mut pairs, &mut stats, k);
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let pick = (0..pairs.len())
            .min_by(|&x, &y| {
                ord.cmp(&pairs[x].2, &pairs[y].2)
                    .then((pairs[x].0, pairs[x].1).cmp(&(pairs[y].0, pairs[y].1)))
            })
            .expect("nonempty");
        let (i, j, l) = pairs.swap_remove(pick);
        stats.pairs_reduced += 1;
        if stats.pairs_reduced > budget.max_pairs {
            return Err(Error::BudgetExceeded {
                phase: "buchberger".to_string(),
                detail: format!("more than {} S-pairs", budget.max_pairs),
            });
        }
        let (gi, gj) = (&basis[i], &basis[j]);
        let mut s = Sorted { terms: Vec::new() };
        s.sub_mul(&-BigRational::one(), &l.div(&lead(gi)).expect("lcm"), gi, ord);
        s.sub_mul(&BigRational::one(), &l.div(&lead(gj)).expect("lcm"), gj, ord);
        let mut h = normal_form(s, &basis, ord);
        if let Some(deg) = h.terms.iter().map(|t| t.0.degree()).max() {
            if deg > cap {
                return Err(Error::BudgetExceeded {
                    phase: "buchberger".to_string(),
                    detail: format!("new basis element of degree {deg} exceeds the degree cap {cap}"),
                });
            }
            h.monic();
            basis.push(h);
            stats.basis_peak = stats.basis_peak.max(basis.len());
            add_pairs(&basis, &mut pairs, &mut stats, basis.len() - 1);
        }
    }
    stats.basis_peak = stats.basis_peak.max(basis.len());
    Ok((reduce_basis(basis, ord), stats))
}

fn reduce_basis(basis: Vec<Sorted>, ord: &TermOrder) -> Vec<Polynomial> {
    let leads: Vec<Monomial> = basis.iter().map(|s| s.lead().expect("nonzero").0.clone()).collect();
    let mut keep: Vec<Sorted> = Vec::new();
    for (k, s) in basis.into_iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, l)| {
            j != k && l.divides(&leads[k]) && (l != &leads[k] || j < k)
        });
        if !redundant {
            keep.push(s);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Sorted> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, s)| s.clone())
            .collect();
        let mut lead_only = keep[k].clone();
        let (lm, lc) = lead_only.terms.pop().expect("nonzero");
        // the leading term is irreducible, so only the tail needs reducing
        let mut tail = normal_form(lead_only, &others, ord);
        tail.terms.push((lm, lc));
        tail.monic();
        out.push(tail.into_polynomial());
    }
    out.sort_by(|a, b| {
        ord.cmp(
            a.leading_monomial(ord).expect("nonzero"),
            b.leading_monomial(ord).expect("nonzero"),
        )
    });
    out
}

/// Minimalized leading monomials.
pub fn initial_ideal(g: &[Polynomial], ord: &TermOrder) -> MonomialIdeal {
    MonomialIdeal::from_gens(g.iter().filter_map(|p| p.leading_monomial(ord).cloned()))
}
