//! Finite posets with an eagerly materialized order relation.
//!
//! Elements are the dense identifiers `0..n`. Labels only affect display.
//! Subsets of a poset are bitmasks, so posets are limited to 64 elements,
//! which is far beyond anything the enumerations in this crate can handle
//! anyway.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 64;

/// A subset of the elements of a poset, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(p: usize) -> Self {
        ElemSet(1u64 << p)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for p in it {
            s.insert(p);
        }
        s
    }

    #[inline]
    pub fn contains(self, p: usize) -> bool {
        self.0 >> p & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, p: usize) {
        self.0 |= 1u64 << p;
    }

    #[inline]
    pub fn remove(&mut self, p: usize) {
        self.0 &= !(1u64 << p);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = ElemSet> {
        // standard submask walk, run in increasing numeric order
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some(((cur | !full).wrapping_add(1)) & full)
            };
            Some(ElemSet(cur))
        })
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Down,
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsetKind {
    Ideal,
    Filter,
    Antichain,
    Plain,
}

/// A subset of a poset tagged with the structural property it is known to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subset {
    pub members: ElemSet,
    pub kind: SubsetKind,
}

/// A finite partially ordered set on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    labels: Option<Vec<String>>,
    /// `down[p]` = all q with q <= p (reflexive).
    down: Vec<ElemSet>,
    /// `up[p]` = all q with p <= q (reflexive).
    up: Vec<ElemSet>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.covers())
            .field("labels", &self.labels)
            .finish()
    }
}

impl Poset {
    /// Builds the reflexive-transitive closure of a cover list.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        if n > MAX_ELEMENTS {
            return Err(Error::PosetTooLarge { max: MAX_ELEMENTS });
        }
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for &(lo, hi) in covers {
            for id in [lo, hi] {
                if id >= n {
                    return Err(Error::IdentifierOutOfRange { id, n });
                }
            }
            if lo == hi {
                return Err(Error::CycleDetected(lo));
            }
            up[lo].insert(hi);
        }
        // Warshall on bitmasks
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        for p in 0..n {
            for q in up[p].iter() {
                if q != p && up[q].contains(p) {
                    return Err(Error::CycleDetected(p));
                }
            }
        }
        let mut down = vec![ElemSet::EMPTY; n];
        for p in 0..n {
            for q in up[p].iter() {
                down[q].insert(p);
            }
        }
        Ok(Poset {
            n,
            labels: None,
            down,
            up,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.n {
            return Err(Error::Parse(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Parse("labels must be distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// The chain `1 < 2 < ... < m`, stored as `0 < 1 < ... < m-1`.
    pub fn chain(m: usize) -> Poset {
        let covers: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
        Poset::from_covers(m, &covers)
            .expect("chain is acyclic")
            .with_labels((1..=m).map(|i| i.to_string()).collect())
            .expect("labels are distinct")
    }

    /// The antichain on `m` elements labelled `1..=m`.
    pub fn antichain(m: usize) -> Poset {
        Poset::from_covers(m, &[])
            .expect("empty relation")
            .with_labels((1..=m).map(|i| i.to_string()).collect())
            .expect("labels are distinct")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, p: usize) -> String {
        match &self.labels {
            Some(l) => l[p].clone(),
            None => p.to_string(),
        }
    }

    /// Resolves a label, falling back to a numeric identifier.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        if let Some(ls) = &self.labels {
            if let Some(p) = ls.iter().position(|l| l == label) {
                return Some(p);
            }
            return None;
        }
        label.parse::<usize>().ok().filter(|&p| p < self.n)
    }

    #[inline]
    pub fn leq(&self, p: usize, q: usize) -> bool {
        self.up[p].contains(q)
    }

    #[inline]
    pub fn lt(&self, p: usize, q: usize) -> bool {
        p != q && self.leq(p, q)
    }

    pub fn comparable(&self, p: usize, q: usize) -> bool {
        self.leq(p, q) || self.leq(q, p)
    }

    /// `{q : q <= p}`
    #[inline]
    pub fn down_set(&self, p: usize) -> ElemSet {
        self.down[p]
    }

    /// `{q : p <= q}`
    #[inline]
    pub fn up_set(&self, p: usize) -> ElemSet {
        self.up[p]
    }

    /// `{q : q < p}`
    #[inline]
    pub fn strictly_below(&self, p: usize) -> ElemSet {
        let mut s = self.down[p];
        s.remove(p);
        s
    }

    #[inline]
    pub fn strictly_above(&self, p: usize) -> ElemSet {
        let mut s = self.up[p];
        s.remove(p);
        s
    }

    fn check_subset(&self, s: ElemSet) -> Result<()> {
        if let Some(p) = s.difference(self.elements()).iter().next() {
            return Err(Error::IdentifierOutOfRange { id: p, n: self.n });
        }
        Ok(())
    }

    pub fn down_closure(&self, s: ElemSet) -> ElemSet {
        s.iter().fold(ElemSet::EMPTY, |acc, p| acc.union(self.down[p]))
    }

    pub fn up_closure(&self, s: ElemSet) -> ElemSet {
        s.iter().fold(ElemSet::EMPTY, |acc, p| acc.union(self.up[p]))
    }

    /// Smallest ideal (`Down`) or filter (`Up`) containing `s`.
    pub fn closure(&self, s: ElemSet, direction: Direction) -> Result<Subset> {
        self.check_subset(s)?;
        Ok(match direction {
            Direction::Down => Subset {
                members: self.down_closure(s),
                kind: SubsetKind::Ideal,
            },
            Direction::Up => Subset {
                members: self.up_closure(s),
                kind: SubsetKind::Filter,
            },
        })
    }

    pub fn min_set(&self, s: ElemSet) -> ElemSet {
        ElemSet::from_iter(
            s.iter()
                .filter(|&p| self.strictly_below(p).intersection(s).is_empty()),
        )
    }

    pub fn max_set(&self, s: ElemSet) -> ElemSet {
        ElemSet::from_iter(
            s.iter()
                .filter(|&p| self.strictly_above(p).intersection(s).is_empty()),
        )
    }

    /// Minimal elements of `s`, as an antichain.
    pub fn min_elements(&self, s: ElemSet) -> Result<Subset> {
        self.check_subset(s)?;
        Ok(Subset {
            members: self.min_set(s),
            kind: SubsetKind::Antichain,
        })
    }

    pub fn is_ideal(&self, s: ElemSet) -> bool {
        self.down_closure(s) == s
    }

    pub fn is_filter(&self, s: ElemSet) -> bool {
        self.up_closure(s) == s
    }

    pub fn is_antichain(&self, s: ElemSet) -> bool {
        s.iter()
            .all(|p| self.strictly_above(p).intersection(s).is_empty())
    }

    pub fn is_chain(&self, s: ElemSet) -> bool {
        s.iter()
            .all(|p| s.iter().all(|q| self.comparable(p, q)))
    }

    /// Elements covering `p` in the Hasse diagram.
    pub fn upper_covers(&self, p: usize) -> ElemSet {
        self.min_set(self.strictly_above(p))
    }

    pub fn lower_covers(&self, p: usize) -> ElemSet {
        self.max_set(self.strictly_below(p))
    }

    /// Hasse diagram edges `(lower, upper)`, sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.n {
            for q in self.upper_covers(p).iter() {
                out.push((p, q));
            }
        }
        out.sort_unstable();
        out
    }

    /// All poset ideals, in increasing bitmask order.
    pub fn ideals(&self) -> Vec<ElemSet> {
        // grow ideals by adding minimal elements of the complement
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        let mut stack = vec![ElemSet::EMPTY];
        seen.insert(0);
        while let Some(i) = stack.pop() {
            let rest = self.elements().difference(i);
            for p in self.min_set(rest).iter() {
                let mut j = i;
                j.insert(p);
                if seen.insert(j.0) {
                    stack.push(j);
                }
            }
        }
        seen.into_iter().map(ElemSet).collect()
    }

    pub fn antichains(&self) -> Vec<ElemSet> {
        self.elements()
            .subsets()
            .filter(|&s| self.is_antichain(s))
            .collect()
    }

    /// Size of the largest antichain.
    pub fn width(&self) -> usize {
        self.antichains().iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// An ordering of the elements compatible with the partial order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&p| (self.down[p].len(), p));
        order
    }

    /// True when `i < j` implies `i <= j` in the poset and all pairs are comparable.
    pub fn is_natural_chain(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| self.leq(i, j)))
    }

    /// The opposite order, as a borrowed view.
    pub fn opposite(&self) -> Opposite<'_> {
        Opposite(self)
    }

    /// Same order relation, ignoring labels.
    pub fn same_order(&self, other: &Poset) -> bool {
        self.n == other.n && self.up == other.up
    }

    /// One representative per isomorphism class of posets on `n` elements.
    /// Representatives are naturally labelled (p < q implies p < q as integers).
    pub fn all_up_to_isomorphism(n: usize) -> Vec<Poset> {
        assert!(n <= 6, "isomorphism enumeration is only meant for tiny posets");
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let perms = permutations(n);
        let mut canon_seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut out = Vec::new();
        // every poset has a natural labelling, so relations inside i<j suffice
        for mask in 0u64..(1u64 << pairs.len()) {
            let rel: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let Ok(p) = Poset::from_covers(n, &rel) else {
                continue;
            };
            // only keep transitively closed relation sets to avoid duplicates
            let closed = rel.len()
                == (0..n)
                    .map(|i| p.strictly_above(i).len())
                    .sum::<usize>();
            if !closed {
                continue;
            }
            let canon = perms
                .iter()
                .map(|perm| {
                    let mut rows = vec![0u64; n];
                    for i in 0..n {
                        for j in p.up[i].iter() {
                            rows[perm[i]] |= 1 << perm[j];
                        }
                    }
                    rows
                })
                .min()
                .expect("at least one permutation");
            if canon_seen.insert(canon) {
                out.push(p);
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `P^op`: same elements, reversed order.
#[derive(Clone, Copy)]
pub struct Opposite<'a>(&'a Poset);

impl Opposite<'_> {
    pub fn leq(&self, p: usize, q: usize) -> bool {
        self.0.leq(q, p)
    }

    pub fn lt(&self, p: usize, q: usize) -> bool {
        self.0.lt(q, p)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Poset> for PosetJson {
    fn from(p: &Poset) -> Self {
        PosetJson {
            n: p.n,
            covers: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            labels: p.labels.clone(),
        }
    }
}

impl TryFrom<PosetJson> for Poset {
    type Error = Error;

    fn try_from(j: PosetJson) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = j.covers.iter().map(|c| (c[0], c[1])).collect();
        let p = Poset::from_covers(j.n, &covers)?;
        match j.labels {
            Some(l) => p.with_labels(l),
            None => Ok(p),
        }
    }
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PosetJson::deserialize(d)?;
        Poset::try_from(j).map_err(serde::de::Error::custom)
    }
}
