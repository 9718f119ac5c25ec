//! The bijection between `Hom(P, N)` and monomials of `k[x_P]`, longest
//! b-chains, and P-stable monomial ideals.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::homset::{decrement, for_each_isotone, IsotoneMap};
use crate::monomial::{Monomial, MonomialIdeal, VarIndex};
use crate::poset::{ElemSet, Poset};

/// Exponent vector of a monomial over `Elem` variables of `p`.
pub fn dense_exponents(p: &Poset, m: &Monomial) -> Result<Vec<u32>> {
    let mut e = vec![0u32; p.n()];
    for &(v, k) in m.factors() {
        match v {
            VarIndex::Elem(q) if (q as usize) < p.n() => e[q as usize] = k,
            other => {
                return Err(Error::Parse(format!(
                    "variable {other:?} is not an element of the poset"
                )))
            }
        }
    }
    Ok(e)
}

pub fn elem_monomial(e: &[u32]) -> Monomial {
    Monomial::from_factors(e.iter().enumerate().map(|(q, &k)| (VarIndex::elem(q), k)))
}

/// `prod x_p^(phi(p) - max_{q<p} phi(q))`
pub fn lambda_bar(p: &Poset, phi: &[u32]) -> Result<Monomial> {
    IsotoneMap::total(p, phi.to_vec())?;
    Ok(elem_monomial(&lambda_bar_dense(p, phi)))
}

pub(crate) fn lambda_bar_dense(p: &Poset, phi: &[u32]) -> Vec<u32> {
    (0..p.n())
        .map(|q| {
            let below = p.strictly_below(q).iter().map(|r| phi[r]).max().unwrap_or(0);
            phi[q] - below
        })
        .collect()
}

/// Inverse of `lambda_bar`: peel off the minimal elements of the support one
/// layer at a time; `phi(p)` counts the layers whose up-closure contains `p`.
pub fn lambda_bar_inv(p: &Poset, m: &Monomial) -> Result<IsotoneMap> {
    let mut a = dense_exponents(p, m)?;
    let mut phi = vec![0u32; p.n()];
    loop {
        let supp = ElemSet::from_iter((0..p.n()).filter(|&q| a[q] > 0));
        if supp.is_empty() {
            break;
        }
        for q in p.up_closure(supp).iter() {
            phi[q] += 1;
        }
        for q in p.min_set(supp).iter() {
            a[q] -= 1;
        }
    }
    Ok(IsotoneMap::total_unchecked(phi))
}

/// Longest weighted chain ending at each element: `L(p) = e_p + max_{q<p} L(q)`.
pub(crate) fn chain_lengths(p: &Poset, e: &[u32]) -> Vec<u32> {
    let mut len = vec![0u32; p.n()];
    for q in p.linear_extension() {
        let below = p.strictly_below(q).iter().map(|r| len[r]).max().unwrap_or(0);
        len[q] = e[q] + below;
    }
    len
}

/// Longest weighted chain inside the open-closed interval `(a, b]`.
fn interval_length(p: &Poset, e: &[u32], a: usize, b: usize) -> u32 {
    let inside = p.strictly_above(a).intersection(p.down_set(b));
    let mut len = vec![0u32; p.n()];
    let mut best = 0;
    for q in p.linear_extension() {
        if !inside.contains(q) {
            continue;
        }
        let below = p
            .strictly_below(q)
            .intersection(inside)
            .iter()
            .map(|r| len[r])
            .max()
            .unwrap_or(0);
        len[q] = e[q] + below;
        best = best.max(len[q]);
    }
    best
}

/// Some longest b-chain in the monomial with exponents `e` goes through `a`.
pub(crate) fn goes_through(p: &Poset, e: &[u32], lens: &[u32], a: usize, b: usize) -> bool {
    p.leq(a, b) && lens[a] + interval_length(p, e, a, b) == lens[b]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BChainInfo {
    pub length: u32,
    /// Element sets of longest b-chains; each element is used with its full
    /// exponent. Truncated to `MAX_WITNESSES`.
    pub witnesses: Vec<Vec<usize>>,
    pub through: ElemSet,
}

pub const MAX_WITNESSES: usize = 64;

pub fn longest_b_chain(p: &Poset, m: &Monomial, b: usize) -> Result<BChainInfo> {
    if b >= p.n() {
        return Err(Error::IdentifierOutOfRange { id: b, n: p.n() });
    }
    let e = dense_exponents(p, m)?;
    let lens = chain_lengths(p, &e);
    let length = lens[b];
    let through = ElemSet::from_iter(
        p.down_set(b)
            .iter()
            .filter(|&a| goes_through(p, &e, &lens, a, b)),
    );
    // chains of support elements below b, built upward from the top
    let mut witnesses = Vec::new();
    fn extend(
        p: &Poset,
        e: &[u32],
        lens: &[u32],
        chain: &mut Vec<usize>,
        remaining: u32,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= MAX_WITNESSES {
            return;
        }
        if remaining == 0 {
            let mut c = chain.clone();
            c.reverse();
            out.push(c);
            return;
        }
        let top = *chain.last().expect("nonempty");
        for q in p.strictly_below(top).iter() {
            if e[q] > 0 && lens[q] == remaining {
                chain.push(q);
                extend(p, e, lens, chain, remaining - e[q], out);
                chain.pop();
            }
        }
    }
    if length == 0 {
        witnesses.push(Vec::new());
    } else {
        for top in p.down_set(b).iter() {
            if e[top] > 0 && lens[top] == length {
                let mut chain = vec![top];
                extend(p, &e, &lens, &mut chain, length - e[top], &mut witnesses);
            }
        }
    }
    Ok(BChainInfo {
        length,
        witnesses,
        through,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityMode {
    /// Filter test on the finite standard set; requires an artinian ideal.
    Exact,
    /// The definition, checked for every monomial of the ideal up to the degree.
    Bounded(u32),
}

/// Dense view of a monomial ideal over the elements of a poset.
#[derive(Debug, Clone)]
pub struct ElemIdeal {
    gens: Vec<Vec<u32>>,
}

impl ElemIdeal {
    pub fn new(p: &Poset, ideal: &MonomialIdeal) -> Result<ElemIdeal> {
        let gens = ideal
            .gens()
            .iter()
            .map(|g| dense_exponents(p, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(ElemIdeal { gens })
    }

    pub fn contains(&self, e: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.iter().zip(e).all(|(a, b)| a <= b))
    }

    /// Smallest `k` with `x_q^k` in the ideal.
    fn pure_power(&self, q: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.iter().enumerate().all(|(r, &x)| r == q || x == 0))
            .map(|g| g[q])
            .min()
    }

    /// Exponent vectors of the standard monomials, if the ideal is artinian.
    pub fn standard_monomials(&self, p: &Poset) -> Result<Vec<Vec<u32>>> {
        let mut bounds = Vec::with_capacity(p.n());
        for q in 0..p.n() {
            bounds.push(
                self.pure_power(q)
                    .ok_or_else(|| Error::NotArtinian(p.label(q)))?,
            );
        }
        let mut out = Vec::new();
        let mut e = vec![0u32; p.n()];
        fn rec(
            ideal: &ElemIdeal,
            bounds: &[u32],
            k: usize,
            e: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if k == bounds.len() {
                if !ideal.contains(e) {
                    out.push(e.clone());
                }
                return;
            }
            for x in 0..bounds[k] {
                e[k] = x;
                rec(ideal, bounds, k + 1, e, out);
            }
            e[k] = 0;
        }
        rec(self, &bounds, 0, &mut e, &mut out);
        Ok(out)
    }
}

pub fn is_p_stable(p: &Poset, ideal: &MonomialIdeal, mode: StabilityMode) -> Result<bool> {
    let dense = ElemIdeal::new(p, ideal)?;
    match mode {
        StabilityMode::Exact => filter_test(p, &dense),
        StabilityMode::Bounded(d) => Ok(definitional_test(p, &dense, d)),
    }
}

/// `Lambda-bar^{-1}` of the standard monomials must be closed under moving
/// down one cover step in `Hom(P, N)`.
fn filter_test(p: &Poset, ideal: &ElemIdeal) -> Result<bool> {
    for s in ideal.standard_monomials(p)? {
        let phi = chain_lengths(p, &s);
        for q in 0..p.n() {
            if let Some(lower) = decrement(p, &phi, q) {
                if ideal.contains(&lambda_bar_dense(p, &lower)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Calls `visit(m, B, a)` for every monomial `m` of the ideal with degree at most
/// `max_degree`, antichain `B` in the support of `m`, and `a` through which
/// some longest b-chain passes for every `b` in `B`. Stops when `visit` is false.
fn for_each_stability_condition(
    p: &Poset,
    ideal: &ElemIdeal,
    max_degree: u32,
    visit: &mut dyn FnMut(&[u32], ElemSet, usize) -> bool,
) {
    let n = p.n();
    let antichains: Vec<ElemSet> = p.antichains().into_iter().filter(|a| !a.is_empty()).collect();
    let mut e = vec![0u32; n];
    fn rec(
        p: &Poset,
        ideal: &ElemIdeal,
        antichains: &[ElemSet],
        k: usize,
        left: u32,
        e: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32], ElemSet, usize) -> bool,
    ) -> bool {
        if k == e.len() {
            if !ideal.contains(e) {
                return true;
            }
            let lens = chain_lengths(p, e);
            for &b in antichains {
                if b.iter().any(|q| e[q] == 0) {
                    continue;
                }
                for a in 0..p.n() {
                    if b.iter().all(|bb| goes_through(p, e, &lens, a, bb)) && !visit(e, b, a) {
                        return false;
                    }
                }
            }
            return true;
        }
        for x in 0..=left {
            e[k] = x;
            if !rec(p, ideal, antichains, k + 1, left - x, e, visit) {
                return false;
            }
        }
        e[k] = 0;
        true
    }
    rec(p, ideal, &antichains, 0, max_degree, &mut e, visit);
}

/// The definition of P-stability on all monomials of degree at most `d`.
fn definitional_test(p: &Poset, ideal: &ElemIdeal, d: u32) -> bool {
    let mut ok = true;
    for_each_stability_condition(p, ideal, d, &mut |m, b, a| {
        let mut nxa = m.to_vec();
        for q in b.iter() {
            nxa[q] -= 1;
        }
        nxa[a] += 1;
        ok = ideal.contains(&nxa);
        ok
    });
    ok
}

/// A degree bound that makes the bounded test complete for artinian ideals:
/// a violated condition has `n * x_a` standard, so `deg m <= deg s - 1 + |B|`.
pub fn complete_degree_bound(p: &Poset, ideal: &MonomialIdeal) -> Result<u32> {
    let dense = ElemIdeal::new(p, ideal)?;
    let top = dense
        .standard_monomials(p)?
        .iter()
        .map(|s| s.iter().sum::<u32>())
        .max()
        .unwrap_or(0);
    Ok((top + p.width() as u32).saturating_sub(1))
}

/// `(filter test on m^d, every element has at most one upper cover)`.
pub fn max_ideal_power_stable(p: &Poset, d: u32) -> Result<(bool, bool)> {
    if d < 2 {
        return Err(Error::InvalidSequence(format!("power must be at least 2, got {d}")));
    }
    let power = max_ideal_power(p, d);
    let stable = is_p_stable(p, &power, StabilityMode::Exact)?;
    let forest = (0..p.n()).all(|q| p.upper_covers(q).len() <= 1);
    Ok((stable, forest))
}

/// `(x_p : p in P)^d`
pub fn max_ideal_power(p: &Poset, d: u32) -> MonomialIdeal {
    let mut gens = Vec::new();
    let mut e = vec![0u32; p.n()];
    fn rec(k: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == e.len() {
            e[k] = left;
            out.push(elem_monomial(e));
            e[k] = 0;
            return;
        }
        for x in 0..=left {
            e[k] = x;
            rec(k + 1, left - x, e, out);
        }
        e[k] = 0;
    }
    if p.n() > 0 {
        rec(0, d, &mut e, &mut gens);
    }
    MonomialIdeal::new(gens, (0..p.n()).map(VarIndex::elem))
}

/// Fast P-stability checks for artinian ideals over at most eight elements,
/// with membership precomputed on the box below the pure powers.
pub struct DenseArtinian {
    bounds: Vec<u32>,
    member: Vec<bool>,
    standard: Vec<Vec<u32>>,
}

impl DenseArtinian {
    pub fn new(p: &Poset, ideal: &MonomialIdeal) -> Result<DenseArtinian> {
        let dense = ElemIdeal::new(p, ideal)?;
        Self::from_gens(p, &dense)
    }

    pub fn from_gens(p: &Poset, ideal: &ElemIdeal) -> Result<DenseArtinian> {
        let standard = ideal.standard_monomials(p)?;
        let bounds: Vec<u32> = (0..p.n())
            .map(|q| ideal.pure_power(q).expect("artinian"))
            .collect();
        let size: usize = bounds.iter().map(|&b| b as usize).product();
        let mut member = vec![true; size];
        for s in &standard {
            member[Self::index(&bounds, s)] = false;
        }
        Ok(DenseArtinian {
            bounds,
            member,
            standard,
        })
    }

    fn index(bounds: &[u32], e: &[u32]) -> usize {
        e.iter()
            .zip(bounds)
            .fold(0usize, |acc, (&x, &b)| acc * b as usize + x as usize)
    }

    pub fn contains(&self, e: &[u32]) -> bool {
        if e.iter().zip(&self.bounds).any(|(x, b)| x >= b) {
            return true;
        }
        self.member[Self::index(&self.bounds, e)]
    }

    pub fn standard(&self) -> &[Vec<u32>] {
        &self.standard
    }

    pub fn filter_test(&self, p: &Poset) -> bool {
        for s in &self.standard {
            let phi = chain_lengths(p, s);
            for q in 0..p.n() {
                if let Some(lower) = decrement(p, &phi, q) {
                    if self.contains(&lambda_bar_dense(p, &lower)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The definitional test with the complete degree bound. Only conditions
    /// whose conclusion `n * x_a` is standard can fail, so those are generated
    /// directly: `s = n * x_a` standard, `B` an antichain above `a`.
    pub fn definitional_test(&self, p: &Poset, antichains_above: &[Vec<ElemSet>]) -> bool {
        let mut m = vec![0u32; p.n()];
        for s in &self.standard {
            for a in 0..p.n() {
                if s[a] == 0 {
                    continue;
                }
                for &b in &antichains_above[a] {
                    m.copy_from_slice(s);
                    m[a] -= 1;
                    for q in b.iter() {
                        m[q] += 1;
                    }
                    if !self.contains(&m) {
                        continue;
                    }
                    let lens = chain_lengths(p, &m);
                    if b.iter().all(|bb| goes_through(p, &m, &lens, a, bb)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Nonempty antichains all of whose elements lie above `a`, for every `a`.
pub fn antichains_above(p: &Poset) -> Vec<Vec<ElemSet>> {
    let all = p.antichains();
    (0..p.n())
        .map(|a| {
            all.iter()
                .copied()
                .filter(|b| !b.is_empty() && b.is_subset(p.up_set(a)))
                .collect()
        })
        .collect()
}

/// A poset ideal of `Hom(P, N)` whose image under `Lambda_Q^{-1} o Lambda_P`
/// is not a poset ideal of `Hom(Q, N)`, for `Q` a weakening of `P`.
#[derive(Debug, Clone)]
pub struct WeakeningWitness {
    pub p: Poset,
    pub q: Poset,
    pub alpha: Vec<u32>,
    /// An image map with a lower cover outside the image.
    pub image_map: Vec<u32>,
    pub missing: Vec<u32>,
}

/// Searches principal ideals `J(alpha)` of `Hom(P, N)` with values at most
/// `max_value`, over all posets up to `max_n` elements and all weakenings.
pub fn search_weakening_counterexample(max_n: usize, max_value: u32) -> Option<WeakeningWitness> {
    for n in 1..=max_n {
        for p in Poset::all_up_to_isomorphism(n) {
            let relations: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| p.lt(a, b))
                .collect();
            for mask in 0u64..(1u64 << relations.len()) {
                let kept: Vec<(usize, usize)> = relations
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &r)| r)
                    .collect();
                let Ok(q) = Poset::from_covers(n, &kept) else { continue };
                if q.same_order(&p) {
                    continue;
                }
                // the relation subset must itself be transitively closed
                let closed = (0..n).all(|a| (0..n).all(|b| !q.lt(a, b) || kept.contains(&(a, b))));
                if !closed {
                    continue;
                }
                let mut found = None;
                for_each_isotone(&p, p.elements(), max_value, |alpha| {
                    let mut image: BTreeSet<Vec<u32>> = BTreeSet::new();
                    for_each_isotone(&p, p.elements(), max_value, |phi| {
                        if phi.iter().zip(alpha).all(|(x, y)| x <= y) {
                            image.insert(chain_lengths(&q, &lambda_bar_dense(&p, phi)));
                        }
                        true
                    });
                    for img in &image {
                        for r in 0..n {
                            if let Some(lower) = decrement(&q, img, r) {
                                if !image.contains(&lower) {
                                    found = Some((alpha.to_vec(), img.clone(), lower));
                                    return false;
                                }
                            }
                        }
                    }
                    true
                });
                if let Some((alpha, image_map, missing)) = found {
                    return Some(WeakeningWitness {
                        p,
                        q,
                        alpha,
                        image_map,
                        missing,
                    });
                }
            }
        }
    }
    None
}
