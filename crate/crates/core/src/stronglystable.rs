//! Strongly stable ideals as the chain case: projections of letterplace and
//! co-letterplace ideals over `[m]`, and the duality they induce.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::homset::{for_each_isotone, minimal_values, HomIdeal};
use crate::letterplace::{coletterplace_ideal, letterplace_ideal, support};
use crate::monomial::{Monomial, MonomialIdeal, VarIndex};
use crate::poset::Poset;
use crate::quotient::FiberMap;

/// Variable with the same family and a different index.
fn reindex(v: VarIndex, k: u32) -> Option<VarIndex> {
    match v {
        VarIndex::Elem(_) => Some(VarIndex::Elem(k)),
        VarIndex::Nat(_) => Some(VarIndex::Nat(k)),
        VarIndex::Pair(..) => None,
    }
}

fn index(v: VarIndex) -> u32 {
    match v {
        VarIndex::Elem(k) | VarIndex::Nat(k) => k,
        VarIndex::Pair(..) => u32::MAX,
    }
}

/// Borel moves `x_i m / x_j` for `i < j` in the same variable family.
fn borel_moves(m: &Monomial) -> Vec<Monomial> {
    let mut out = Vec::new();
    for v in m.support() {
        let j = index(v);
        for i in 0..j {
            let Some(lower) = reindex(v, i) else { continue };
            let moved = m
                .div(&Monomial::var(v))
                .expect("v divides m")
                .mul(&Monomial::var(lower));
            out.push(moved);
        }
    }
    out
}

/// Generator-level test; pair variables are never strongly stable.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    if ideal
        .support()
        .iter()
        .any(|v| matches!(v, VarIndex::Pair(..)))
    {
        return false;
    }
    ideal
        .gens()
        .iter()
        .all(|g| borel_moves(g).iter().all(|m| ideal.contains(m)))
}

/// The smallest strongly stable ideal containing the given monomials.
pub fn borel_closure(
    gens: impl IntoIterator<Item = Monomial>,
    universe: impl IntoIterator<Item = VarIndex>,
) -> MonomialIdeal {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack: Vec<Monomial> = gens.into_iter().collect();
    while let Some(m) = stack.pop() {
        if seen.insert(m.clone()) {
            stack.extend(borel_moves(&m));
        }
    }
    MonomialIdeal::new(seen, universe)
}

fn elem_universe(m: usize) -> impl Iterator<Item = VarIndex> {
    (0..m).map(VarIndex::elem)
}

fn require_chain(p: &Poset) -> Result<()> {
    if p.is_natural_chain() {
        Ok(())
    } else {
        Err(Error::NotAChain)
    }
}

/// `L^{p1}(J, [m])` in `k[x_1..x_m]`, with `x_k` stored as `Elem(k - 1)`.
pub fn ss_from_homideal(j: &HomIdeal, cap: usize) -> Result<MonomialIdeal> {
    let p = j.poset();
    require_chain(p)?;
    let l = letterplace_ideal(j, cap)?.ideal;
    let source: Vec<(usize, u32)> = l
        .support()
        .into_iter()
        .map(|v| match v {
            VarIndex::Pair(a, i) => (a as usize, i),
            _ => unreachable!("letterplace ideals use pair variables"),
        })
        .collect();
    let out = FiberMap::p1(source)
        .project_ideal(&l)?
        .with_universe(elem_universe(p.n()));
    debug_assert!(is_strongly_stable(&out));
    Ok(out)
}

/// Partial sums: on a chain, `Lambda-bar^{-1}(m)(a) = deg` of `m` in `x_1..x_a`.
fn partial_sums(m: &Monomial, n: usize) -> Result<Vec<u32>> {
    let mut e = vec![0u32; n];
    for &(v, k) in m.factors() {
        match v {
            VarIndex::Elem(q) if (q as usize) < n => e[q as usize] = k,
            other => return Err(Error::Parse(format!("{other:?} is not one of x_1..x_{n}"))),
        }
    }
    let mut acc = 0;
    Ok(e.into_iter()
        .map(|k| {
            acc += k;
            acc
        })
        .collect())
}

/// The ideal `J` of `Hom([m], N)` with `L^{p1}(J, [m]) = I`. On a chain
/// `Lambda-bar^{-1}` turns divisibility into the order, so the complement
/// filter is generated by the images of the generators.
pub fn homideal_from_ss(ideal: &MonomialIdeal, m: usize) -> Result<HomIdeal> {
    if !is_strongly_stable(ideal) {
        return Err(Error::NotStronglyStable);
    }
    let maps = ideal
        .gens()
        .iter()
        .map(|g| partial_sums(g, m))
        .collect::<Result<Vec<_>>>()?;
    HomIdeal::cofinite(Poset::chain(m), minimal_values(maps))
}

/// `L^{p2}([m], J)` in `k[x_0, x_1, ...]` for `J` over a chain.
pub fn coletterplace_projection(j: &HomIdeal, cap: usize) -> Result<MonomialIdeal> {
    require_chain(j.poset())?;
    let co = coletterplace_ideal(j, cap)?.ideal;
    let source: Vec<(usize, u32)> = support(j, cap)?.into_iter().collect();
    let top = source.iter().map(|s| s.1).max();
    let out = FiberMap::p2(source)
        .project_ideal(&co)?
        .with_universe(top.into_iter().flat_map(|t| (0..=t).map(VarIndex::Nat)));
    debug_assert!(is_strongly_stable(&out));
    Ok(out)
}

/// Strongly stable `I` in `k[x_1..x_m]` to the `m`-regular strongly stable
/// ideal in `k[x_0, x_1, ...]` attached to the same poset ideal.
pub fn dualize_ss(ideal: &MonomialIdeal, m: usize, cap: usize) -> Result<MonomialIdeal> {
    let j = homideal_from_ss(ideal, m)?;
    coletterplace_projection(&j, cap)
}

/// Inverse of [`coletterplace_projection`]: for an `m`-regular strongly
/// stable `I` in `k[x_0, x_1, ...]`, the maps `phi: [m] -> N` with
/// `x_{phi(1)} ... x_{phi(m)}` in `I`. Indices above those of `I` never help
/// membership, so the complement filter is generated below `max index + 1`.
pub fn homideal_from_regular(ideal: &MonomialIdeal, m: usize) -> Result<HomIdeal> {
    if !is_strongly_stable(ideal) {
        return Err(Error::NotStronglyStable);
    }
    let mut top = 0;
    for g in ideal.gens() {
        if g.degree() > m as u32 {
            return Err(Error::InvalidSequence(format!(
                "generator of degree {} exceeds m = {m}",
                g.degree()
            )));
        }
        for v in g.support() {
            match v {
                VarIndex::Nat(k) => top = top.max(k),
                other => return Err(Error::Parse(format!("{other:?} is not a variable x_i, i >= 0"))),
            }
        }
    }
    let p = Poset::chain(m);
    let mut outside = Vec::new();
    for_each_isotone(&p, p.elements(), top + 1, |phi| {
        let g = Monomial::from_factors(phi.iter().map(|&v| (VarIndex::Nat(v), 1)));
        if !ideal.contains(&g) {
            outside.push(phi.to_vec());
        }
        true
    });
    HomIdeal::cofinite(p, minimal_values(outside))
}

/// Inverse of [`dualize_ss`].
pub fn undualize_ss(ideal: &MonomialIdeal, m: usize, cap: usize) -> Result<MonomialIdeal> {
    ss_from_homideal(&homideal_from_regular(ideal, m)?, cap)
}

/// `phi^T(j) = #{i : phi(i) >= n + 1 - j}`, a bijection
/// `Hom([m], [n]_0) -> Hom([n], [m]_0)` that preserves the order.
pub fn transpose(phi: &[u32], n: u32) -> Vec<u32> {
    (1..=n)
        .map(|j| phi.iter().filter(|&&v| v + j > n).count() as u32)
        .collect()
}

/// Maps `phi: [m] -> [n]_0` with `x_{phi(1)} ... x_{phi(m)}` in `I`.
pub fn bounded_homideal(ideal: &MonomialIdeal, m: usize, n: u32) -> Result<HomIdeal> {
    if !is_strongly_stable(ideal) {
        return Err(Error::NotStronglyStable);
    }
    let p = Poset::chain(m);
    let mut maps = Vec::new();
    for_each_isotone(&p, p.elements(), n, |phi| {
        let g = Monomial::from_factors(phi.iter().map(|&v| (VarIndex::Nat(v), 1)));
        if ideal.contains(&g) {
            maps.push(phi.to_vec());
        }
        true
    });
    HomIdeal::finite(p, maps)
}

/// The finite duality between `m`-regular strongly stable ideals in
/// `k[x_0..x_n]` and `n`-regular ones in `k[x_0..x_m]`, through the
/// transpose of maps `[m] -> [n]_0`.
pub fn dualize_bounded(ideal: &MonomialIdeal, m: usize, n: u32, cap: usize) -> Result<MonomialIdeal> {
    if let Some(g) = ideal.gens().iter().find(|g| g.degree() > m as u32) {
        return Err(Error::InvalidSequence(format!(
            "generator of degree {} exceeds m = {m}",
            g.degree()
        )));
    }
    let j = bounded_homideal(ideal, m, n)?;
    let maps: Vec<Vec<u32>> = j
        .finite_members()?
        .iter()
        .map(|phi| transpose(phi, n))
        .collect();
    let dual = HomIdeal::finite(Poset::chain(n as usize), maps)?;
    Ok(coletterplace_projection(&dual, cap)?.with_universe((0..=m as u32).map(VarIndex::Nat)))
}
