//! The poset `Hom(P, N)` of isotone maps into the naturals, its poset ideals
//! and their markers.
//!
//! Maps are stored as value vectors indexed by element identifier. Partial maps
//! carry their domain (a poset ideal); values outside the domain are zero and
//! meaningless.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{ElemSet, Poset, PosetJson};

pub const DEFAULT_ENUMERATION_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsotoneMap {
    values: Vec<u32>,
    domain: ElemSet,
}

impl IsotoneMap {
    /// A total isotone map on `p`.
    pub fn total(p: &Poset, values: Vec<u32>) -> Result<IsotoneMap> {
        if values.len() != p.n() {
            return Err(Error::NotIsotone(format!(
                "expected {} values, got {}",
                p.n(),
                values.len()
            )));
        }
        let m = IsotoneMap {
            values,
            domain: p.elements(),
        };
        m.check_isotone(p)?;
        Ok(m)
    }

    /// A map defined on the poset ideal `domain`; `values` is indexed by element
    /// and entries outside the domain are ignored.
    pub fn partial(p: &Poset, domain: ElemSet, mut values: Vec<u32>) -> Result<IsotoneMap> {
        if values.len() != p.n() {
            return Err(Error::NotIsotone(format!(
                "expected {} values, got {}",
                p.n(),
                values.len()
            )));
        }
        if !domain.is_subset(p.elements()) || !p.is_ideal(domain) {
            return Err(Error::DomainNotIdeal);
        }
        for (q, v) in values.iter_mut().enumerate() {
            if !domain.contains(q) {
                *v = 0;
            }
        }
        let m = IsotoneMap { values, domain };
        m.check_isotone(p)?;
        Ok(m)
    }

    // Callers guarantee isotonicity.
    pub(crate) fn total_unchecked(values: Vec<u32>) -> IsotoneMap {
        let domain = ElemSet::full(values.len());
        IsotoneMap { values, domain }
    }

    fn check_isotone(&self, p: &Poset) -> Result<()> {
        for (lo, hi) in p.covers() {
            if self.domain.contains(hi) && self.values[lo] > self.values[hi] {
                return Err(Error::NotIsotone(format!(
                    "{} <= {} but value {} > {}",
                    p.label(lo),
                    p.label(hi),
                    self.values[lo],
                    self.values[hi]
                )));
            }
        }
        Ok(())
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn domain(&self) -> ElemSet {
        self.domain
    }

    pub fn get(&self, p: usize) -> Option<u32> {
        self.domain.contains(p).then(|| self.values[p])
    }

    pub fn is_total(&self) -> bool {
        self.domain == ElemSet::full(self.values.len())
    }

    pub fn max_value(&self) -> u32 {
        self.domain.iter().map(|p| self.values[p]).max().unwrap_or(0)
    }

    /// Pointwise order on total maps of the same poset.
    pub fn leq(&self, other: &IsotoneMap) -> bool {
        leq_values(&self.values, &other.values)
    }

    pub fn restrict(&self, domain: ElemSet) -> IsotoneMap {
        debug_assert!(domain.is_subset(self.domain));
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(q, &v)| if domain.contains(q) { v } else { 0 })
            .collect();
        IsotoneMap { values, domain }
    }

    /// The graph `{(p, f(p)) : p in domain}`, sorted by element.
    pub fn graph(&self) -> Vec<(usize, u32)> {
        self.domain.iter().map(|p| (p, self.values[p])).collect()
    }
}

impl PartialOrd for IsotoneMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Deterministic total order for output sets: by graph, lexicographically.
impl Ord for IsotoneMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graph().cmp(&other.graph())
    }
}

pub(crate) fn leq_values(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Calls `visit` on every isotone map `domain -> [0, bound]` in lexicographic
/// order of value sequences. Stops early when `visit` returns `false`.
pub(crate) fn for_each_isotone(
    p: &Poset,
    domain: ElemSet,
    bound: u32,
    mut visit: impl FnMut(&[u32]) -> bool,
) {
    let n = p.n();
    let elems: Vec<usize> = domain.iter().collect();
    let mut values = vec![0u32; n];
    fn rec(
        p: &Poset,
        elems: &[usize],
        k: usize,
        bound: u32,
        values: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if k == elems.len() {
            return visit(values);
        }
        let e = elems[k];
        let mut lo = 0;
        let mut hi = bound;
        for &q in &elems[..k] {
            if p.lt(q, e) {
                lo = lo.max(values[q]);
            } else if p.lt(e, q) {
                hi = hi.min(values[q]);
            }
        }
        for v in lo..=hi {
            values[e] = v;
            if !rec(p, elems, k + 1, bound, values, visit) {
                return false;
            }
        }
        values[e] = 0;
        true
    }
    rec(p, &elems, 0, bound, &mut values, &mut visit);
}

/// All total isotone maps `P -> {0..=bound}` in lexicographic order.
pub fn enumerate_isotone(p: &Poset, bound: u32, cap: usize) -> Result<Vec<IsotoneMap>> {
    let mut out = Vec::new();
    let mut over = false;
    for_each_isotone(p, p.elements(), bound, |v| {
        if out.len() >= cap {
            over = true;
            return false;
        }
        out.push(IsotoneMap::total_unchecked(v.to_vec()));
        true
    });
    if over {
        return Err(Error::ExplosionGuard { cap });
    }
    Ok(out)
}

/// Minimal elements of a finite set of total maps, sorted.
pub fn minimal_of(maps: &[IsotoneMap]) -> Result<Vec<IsotoneMap>> {
    if let Some(first) = maps.first() {
        if maps.iter().any(|m| m.values.len() != first.values.len()) {
            return Err(Error::MixedPosets);
        }
    }
    Ok(minimal_values(maps.iter().map(|m| m.values.clone()))
        .into_iter()
        .map(IsotoneMap::total_unchecked)
        .collect())
}

pub(crate) fn minimal_values(maps: impl IntoIterator<Item = Vec<u32>>) -> Vec<Vec<u32>> {
    let set: BTreeSet<Vec<u32>> = maps.into_iter().collect();
    // sorting by sum first means a dominating map is never kept before its dominee
    let mut by_sum: Vec<Vec<u32>> = set.into_iter().collect();
    by_sum.sort_by_key(|v| v.iter().map(|&x| x as u64).sum::<u64>());
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for v in by_sum {
        if !kept.iter().any(|k| leq_values(k, &v)) {
            kept.push(v);
        }
    }
    kept.sort();
    kept
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomRepr {
    /// All maps below a single map.
    Principal(Vec<u32>),
    /// A finite, downward closed set of maps.
    Finite(Vec<Vec<u32>>),
    /// Antichain of generators of the complement filter.
    Cofinite(Vec<Vec<u32>>),
}

/// A poset ideal of `Hom(P, N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomIdeal {
    poset: Poset,
    repr: HomRepr,
}

impl HomIdeal {
    pub fn principal(poset: Poset, alpha: Vec<u32>) -> Result<HomIdeal> {
        IsotoneMap::total(&poset, alpha.clone())?;
        Ok(HomIdeal {
            poset,
            repr: HomRepr::Principal(alpha),
        })
    }

    /// A finite ideal; the set must be downward closed, checked by cover descent.
    pub fn finite(poset: Poset, maps: Vec<Vec<u32>>) -> Result<HomIdeal> {
        for m in &maps {
            IsotoneMap::total(&poset, m.clone())?;
        }
        let set: BTreeSet<Vec<u32>> = maps.into_iter().collect();
        for m in &set {
            for q in 0..poset.n() {
                if let Some(lower) = decrement(&poset, m, q) {
                    if !set.contains(&lower) {
                        return Err(Error::NotDownwardClosed(format!(
                            "{:?} is missing below {:?}",
                            lower, m
                        )));
                    }
                }
            }
        }
        Ok(HomIdeal {
            poset,
            repr: HomRepr::Finite(set.into_iter().collect()),
        })
    }

    /// The complement of the filter generated by `gens`.
    pub fn cofinite(poset: Poset, gens: Vec<Vec<u32>>) -> Result<HomIdeal> {
        for g in &gens {
            IsotoneMap::total(&poset, g.clone())?;
        }
        Ok(HomIdeal {
            poset,
            repr: HomRepr::Cofinite(minimal_values(gens)),
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn repr(&self) -> &HomRepr {
        &self.repr
    }

    pub fn is_finite(&self) -> bool {
        match &self.repr {
            HomRepr::Principal(_) | HomRepr::Finite(_) => true,
            // Hom(P, N) is infinite unless P is empty
            HomRepr::Cofinite(_) => self.poset.n() == 0,
        }
    }

    pub fn member(&self, phi: &[u32]) -> bool {
        match &self.repr {
            HomRepr::Principal(a) => leq_values(phi, a),
            HomRepr::Finite(ms) => ms.binary_search_by(|m| m.as_slice().cmp(phi)).is_ok(),
            HomRepr::Cofinite(gs) => !gs.iter().any(|g| leq_values(g, phi)),
        }
    }

    /// Minimal generators of the complement filter, sorted.
    pub fn complement_filter_gens(&self) -> Vec<Vec<u32>> {
        let p = &self.poset;
        match &self.repr {
            HomRepr::Principal(a) => minimal_values((0..p.n()).map(|q| {
                (0..p.n())
                    .map(|r| if p.leq(q, r) { a[q] + 1 } else { 0 })
                    .collect::<Vec<u32>>()
            })),
            HomRepr::Finite(ms) => {
                let bound = ms.iter().flatten().copied().max().map_or(0, |n| n + 1);
                let mut outside = Vec::new();
                for_each_isotone(p, p.elements(), bound, |v| {
                    if ms.binary_search_by(|m| m.as_slice().cmp(v)).is_err() {
                        outside.push(v.to_vec());
                    }
                    true
                });
                minimal_values(outside)
            }
            HomRepr::Cofinite(gs) => gs.clone(),
        }
    }

    /// Largest value over the complement generators.
    pub fn nmax(&self) -> u32 {
        self.complement_filter_gens()
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn to_cofinite(&self) -> HomIdeal {
        HomIdeal {
            poset: self.poset.clone(),
            repr: HomRepr::Cofinite(self.complement_filter_gens()),
        }
    }

    /// Members of a finite ideal, sorted.
    pub fn finite_members(&self) -> Result<Vec<Vec<u32>>> {
        match &self.repr {
            HomRepr::Principal(a) => {
                let bound = a.iter().copied().max().unwrap_or(0);
                let mut out = Vec::new();
                for_each_isotone(&self.poset, self.poset.elements(), bound, |v| {
                    if leq_values(v, a) {
                        out.push(v.to_vec());
                    }
                    true
                });
                Ok(out)
            }
            HomRepr::Finite(ms) => Ok(ms.clone()),
            HomRepr::Cofinite(_) if self.poset.n() == 0 => {
                Ok(if self.member(&[]) { vec![vec![]] } else { vec![] })
            }
            HomRepr::Cofinite(_) => Err(Error::InfiniteIdeal),
        }
    }

    pub fn is_marker(&self, m: &Marker) -> bool {
        is_marker_for(&self.complement_filter_gens(), m.domain, &m.map.values)
    }

    /// Markers whose graphs are inclusion minimal among all marker graphs.
    pub fn minimal_markers(&self, cap: usize) -> Result<Vec<Marker>> {
        let gens = self.complement_filter_gens();
        let bound = gens.iter().flatten().copied().max().unwrap_or(0);
        let p = &self.poset;
        let mut out = Vec::new();
        let mut visited = 0usize;
        let mut over = false;
        for ideal in p.ideals() {
            let maxima = p.max_set(ideal);
            for_each_isotone(p, ideal, bound, |v| {
                visited += 1;
                if visited > cap {
                    over = true;
                    return false;
                }
                if !is_marker_for(&gens, ideal, v) {
                    return true;
                }
                // markers are closed under extension, so checking the
                // restrictions that drop one maximal element is enough
                let minimal = maxima.iter().all(|q| {
                    let mut smaller = ideal;
                    smaller.remove(q);
                    !is_marker_for(&gens, smaller, v)
                });
                if minimal {
                    let map = IsotoneMap {
                        values: v.to_vec(),
                        domain: ideal,
                    };
                    out.push(Marker {
                        domain: ideal,
                        map: map.restrict(ideal),
                    });
                }
                true
            });
            if over {
                return Err(Error::ExplosionGuard { cap });
            }
        }
        out.sort();
        Ok(out)
    }
}

/// `(I, alpha)` is a marker iff every complement generator exceeds alpha somewhere on I.
pub(crate) fn is_marker_for(gens: &[Vec<u32>], domain: ElemSet, alpha: &[u32]) -> bool {
    gens.iter()
        .all(|g| domain.iter().any(|p| alpha[p] < g[p]))
}

/// Lower `m` by one at `q` if the result is still isotone and nonnegative.
pub(crate) fn decrement(p: &Poset, m: &[u32], q: usize) -> Option<Vec<u32>> {
    if m[q] == 0 {
        return None;
    }
    if p.strictly_below(q).iter().any(|r| m[r] > m[q] - 1) {
        return None;
    }
    let mut lower = m.to_vec();
    lower[q] -= 1;
    Some(lower)
}


/// A poset ideal `I` of P together with an isotone map on it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Marker {
    pub domain: ElemSet,
    pub map: IsotoneMap,
}

impl Marker {
    pub fn new(p: &Poset, domain: ElemSet, values: Vec<u32>) -> Result<Marker> {
        let map = IsotoneMap::partial(p, domain, values)?;
        Ok(Marker { domain, map })
    }

    pub fn graph(&self) -> Vec<(usize, u32)> {
        self.map.graph()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReprJson {
    Principal(Vec<u32>),
    Finite(Vec<Vec<u32>>),
    Cofinite(Vec<Vec<u32>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomIdealJson {
    pub poset: PosetJson,
    pub repr: ReprJson,
}

impl From<&HomIdeal> for HomIdealJson {
    fn from(j: &HomIdeal) -> Self {
        HomIdealJson {
            poset: PosetJson::from(&j.poset),
            repr: match &j.repr {
                HomRepr::Principal(a) => ReprJson::Principal(a.clone()),
                HomRepr::Finite(m) => ReprJson::Finite(m.clone()),
                HomRepr::Cofinite(g) => ReprJson::Cofinite(g.clone()),
            },
        }
    }
}

impl TryFrom<HomIdealJson> for HomIdeal {
    type Error = Error;

    fn try_from(j: HomIdealJson) -> Result<HomIdeal> {
        let poset = Poset::try_from(j.poset)?;
        match j.repr {
            ReprJson::Principal(a) => HomIdeal::principal(poset, a),
            ReprJson::Finite(m) => HomIdeal::finite(poset, m),
            ReprJson::Cofinite(g) => HomIdeal::cofinite(poset, g),
        }
    }
}

impl Serialize for HomIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HomIdealJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        HomIdeal::try_from(HomIdealJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
