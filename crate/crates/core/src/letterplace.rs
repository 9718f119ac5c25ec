//! Graphs, ascents, and the letterplace / co-letterplace ideals of a poset
//! ideal of `Hom(P, N)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homset::{for_each_isotone, HomIdeal, HomRepr, IsotoneMap};
use crate::monomial::{Monomial, MonomialIdeal, VarIndex};
use crate::poset::Poset;

/// `{(p, i) : max_{q<p} phi(q) <= i < phi(p)}`, sorted.
pub fn ascent(p: &Poset, phi: &[u32]) -> Result<Vec<(usize, u32)>> {
    IsotoneMap::total(p, phi.to_vec())?;
    Ok(ascent_unchecked(p, phi))
}

pub(crate) fn ascent_unchecked(p: &Poset, phi: &[u32]) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for q in 0..p.n() {
        let floor = p.strictly_below(q).iter().map(|r| phi[r]).max().unwrap_or(0);
        for i in floor..phi[q] {
            out.push((q, i));
        }
    }
    out
}

/// `m_S` for a set of pairs.
pub fn pair_monomial(pairs: &[(usize, u32)]) -> Monomial {
    Monomial::squarefree(pairs.iter().map(|&(p, i)| VarIndex::pair(p, i)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LetterplaceResult {
    #[serde(skip)]
    pub ideal: MonomialIdeal,
    /// Largest value of the enumerated maps.
    pub bound_used: u32,
    pub unit: bool,
}

/// `L(J, P)`: generated by the ascent monomials of maps in the complement filter.
pub fn letterplace_ideal(j: &HomIdeal, cap: usize) -> Result<LetterplaceResult> {
    let p = j.poset();
    let gens = j.complement_filter_gens();
    let bound = gens.iter().flatten().copied().max().unwrap_or(0);
    let mut asc: BTreeSet<Monomial> = BTreeSet::new();
    let mut seen = 0usize;
    let mut over = false;
    // capping a complement map at `bound` stays in the complement and only
    // shrinks its ascent, so larger values never give minimal generators
    for_each_isotone(p, p.elements(), bound, |v| {
        seen += 1;
        if seen > cap {
            over = true;
            return false;
        }
        if !j.member(v) {
            asc.insert(pair_monomial(&ascent_unchecked(p, v)));
        }
        true
    });
    if over {
        return Err(Error::ExplosionGuard { cap });
    }
    let ideal = MonomialIdeal::from_gens(asc);
    Ok(LetterplaceResult {
        unit: ideal.is_unit(),
        ideal,
        bound_used: bound,
    })
}

/// `L(P, J)`: generated by the graph monomials of the minimal markers.
pub fn coletterplace_ideal(j: &HomIdeal, cap: usize) -> Result<LetterplaceResult> {
    let markers = j.minimal_markers(cap)?;
    let ideal = MonomialIdeal::from_gens(markers.iter().map(|m| {
        pair_monomial(&m.graph())
    }));
    Ok(LetterplaceResult {
        unit: ideal.is_unit(),
        ideal,
        bound_used: j.nmax(),
    })
}

/// Pairs `(p, i)` occurring in the minimal generators of `L(P, J)`.
pub fn support(j: &HomIdeal, cap: usize) -> Result<BTreeSet<(usize, u32)>> {
    let co = coletterplace_ideal(j, cap)?;
    let supp: BTreeSet<(usize, u32)> = co
        .ideal
        .support()
        .into_iter()
        .map(|v| match v {
            VarIndex::Pair(p, i) => (p as usize, i),
            _ => unreachable!("co-letterplace ideals use pair variables"),
        })
        .collect();
    if j.is_finite() && j.poset().n() > 0 {
        let hull = hull_map(j)?;
        debug_assert_eq!(supp, hull_support(&hull), "support differs from hull formula");
    }
    Ok(supp)
}

/// `{(p, i) : i <= alpha(p)}`
pub fn hull_support(alpha: &IsotoneMap) -> BTreeSet<(usize, u32)> {
    alpha
        .graph()
        .into_iter()
        .flat_map(|(p, a)| (0..=a).map(move |i| (p, i)))
        .collect()
}

pub fn support_vars(supp: &BTreeSet<(usize, u32)>) -> Vec<VarIndex> {
    supp.iter().map(|&(p, i)| VarIndex::pair(p, i)).collect()
}

/// Pointwise maximum of a finite ideal.
pub fn hull_map(j: &HomIdeal) -> Result<IsotoneMap> {
    let p = j.poset();
    if let HomRepr::Principal(a) = j.repr() {
        return IsotoneMap::total(p, a.clone());
    }
    let members = j.finite_members()?;
    let mut hull = vec![0u32; p.n()];
    for m in &members {
        for (h, &v) in hull.iter_mut().zip(m) {
            *h = (*h).max(v);
        }
    }
    IsotoneMap::total(p, hull)
}

/// Generators of `L(J(alpha), P)` from multichains `p_0 <= ... <= p_r` with
/// `alpha(p_r) = r` and `alpha(p_j) > j` for `j < r`.
pub fn principal_letterplace_gens(p: &Poset, alpha: &[u32]) -> Result<MonomialIdeal> {
    IsotoneMap::total(p, alpha.to_vec())?;
    fn extend(
        p: &Poset,
        alpha: &[u32],
        chain: &mut Vec<(usize, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        let &(last, j) = chain.last().expect("chain is nonempty");
        if alpha[last] == j {
            out.push(pair_monomial(chain));
            return;
        }
        // alpha(last) > j, and every q >= last has alpha(q) >= j + 1
        for q in p.up_set(last).iter() {
            chain.push((q, j + 1));
            extend(p, alpha, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    for p0 in 0..p.n() {
        let mut chain = vec![(p0, 0)];
        extend(p, alpha, &mut chain, &mut out);
    }
    Ok(MonomialIdeal::from_gens(out))
}
