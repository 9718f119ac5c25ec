//! Isotone maps `S -> R` from a finite subset of `P x N`, their fiber
//! structure, and regularity of the induced variable identifications.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, VarIndex};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberKind {
    RightStrict,
    LeftStrict,
    Both,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Right,
    Left,
}

/// A map from a finite set of pairs `(p, i)` to target variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberMap {
    source: Vec<(usize, u32)>,
    assignment: Vec<VarIndex>,
}

impl FiberMap {
    pub fn new(source: Vec<(usize, u32)>, assignment: Vec<VarIndex>) -> Result<FiberMap> {
        if source.len() != assignment.len() {
            return Err(Error::Parse(format!(
                "source has {} entries but assignment has {}",
                source.len(),
                assignment.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for s in &source {
            if !seen.insert(*s) {
                return Err(Error::Parse(format!("duplicate source pair {:?}", s)));
            }
        }
        Ok(FiberMap { source, assignment })
    }

    pub fn identity(source: impl IntoIterator<Item = (usize, u32)>) -> FiberMap {
        let source: Vec<_> = source.into_iter().collect();
        let assignment = source.iter().map(|&(p, i)| VarIndex::pair(p, i)).collect();
        FiberMap { source, assignment }
    }

    /// `(p, i) -> x_p`
    pub fn p1(source: impl IntoIterator<Item = (usize, u32)>) -> FiberMap {
        let source: Vec<_> = source.into_iter().collect();
        let assignment = source.iter().map(|&(p, _)| VarIndex::elem(p)).collect();
        FiberMap { source, assignment }
    }

    /// `(p, i) -> x_i`
    pub fn p2(source: impl IntoIterator<Item = (usize, u32)>) -> FiberMap {
        let source: Vec<_> = source.into_iter().collect();
        let assignment = source.iter().map(|&(_, i)| VarIndex::Nat(i)).collect();
        FiberMap { source, assignment }
    }

    pub fn source(&self) -> &[(usize, u32)] {
        &self.source
    }

    pub fn assignment(&self) -> &[VarIndex] {
        &self.assignment
    }

    pub fn targets(&self) -> BTreeSet<VarIndex> {
        self.assignment.iter().copied().collect()
    }

    pub fn fibers(&self) -> BTreeMap<VarIndex, Vec<(usize, u32)>> {
        let mut out: BTreeMap<VarIndex, Vec<(usize, u32)>> = BTreeMap::new();
        for (s, r) in self.source.iter().zip(&self.assignment) {
            out.entry(*r).or_default().push(*s);
        }
        out
    }

    pub fn image(&self, p: usize, i: u32) -> Option<VarIndex> {
        self.source
            .iter()
            .position(|&s| s == (p, i))
            .map(|k| self.assignment[k])
    }

    /// Whether some partial order on the targets makes the map isotone for the
    /// product order on `P x N`: the relation induced on fibers must be acyclic.
    pub fn induced_order_acyclic(&self, p: &Poset) -> bool {
        let targets: Vec<VarIndex> = self.targets().into_iter().collect();
        let idx = |r: &VarIndex| targets.binary_search(r).expect("target");
        let k = targets.len();
        let mut reach = vec![vec![false; k]; k];
        for (a, ra) in self.source.iter().zip(&self.assignment) {
            for (b, rb) in self.source.iter().zip(&self.assignment) {
                if p.leq(a.0, b.0) && a.1 <= b.1 {
                    reach[idx(ra)][idx(rb)] = true;
                }
            }
        }
        for m in 0..k {
            for i in 0..k {
                if reach[i][m] {
                    for j in 0..k {
                        if reach[m][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        (0..k).all(|i| (0..k).all(|j| i == j || !(reach[i][j] && reach[j][i])))
    }

    /// Isotone check against an explicit order on the targets.
    pub fn is_isotone(&self, p: &Poset, target_leq: &dyn Fn(VarIndex, VarIndex) -> bool) -> bool {
        self.source.iter().zip(&self.assignment).all(|(a, ra)| {
            self.source
                .iter()
                .zip(&self.assignment)
                .all(|(b, rb)| !(p.leq(a.0, b.0) && a.1 <= b.1) || target_leq(*ra, *rb))
        })
    }

    pub fn fiber_kind(&self, p: &Poset) -> FiberKind {
        let mut right = true;
        let mut left = true;
        for fiber in self.fibers().values() {
            for (k, a) in fiber.iter().enumerate() {
                for b in &fiber[k + 1..] {
                    if !op_comparable(p, *a, *b) {
                        right = false;
                        left = false;
                    }
                    if a.1 == b.1 {
                        right = false;
                    }
                    if a.0 == b.0 {
                        left = false;
                    }
                }
            }
        }
        match (right, left) {
            (true, true) => FiberKind::Both,
            (true, false) => FiberKind::RightStrict,
            (false, true) => FiberKind::LeftStrict,
            (false, false) => FiberKind::Neither,
        }
    }

    /// Substitutes `x_s -> x_{f(s)}` in every generator and minimalizes.
    pub fn project_ideal(&self, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        let table: BTreeMap<VarIndex, VarIndex> = self
            .source
            .iter()
            .zip(&self.assignment)
            .map(|(&(p, i), &r)| (VarIndex::pair(p, i), r))
            .collect();
        for v in ideal.support() {
            if !table.contains_key(&v) {
                return Err(Error::VariableOutsideSource(format!("{v:?}")));
            }
        }
        Ok(ideal.map_vars(|v| table[&v], self.targets()))
    }

    /// The differences of identified variables form a regular sequence on
    /// `k[x_S]/I` iff both quotients share the Hilbert numerator: each regular
    /// linear form multiplies the series by `1 - t` and removes one variable.
    pub fn regular_quotient_check(&self, ideal: &MonomialIdeal) -> Result<bool> {
        let projected = self.project_ideal(ideal)?;
        Ok(projected.hilbert_numerator() == ideal.hilbert_numerator())
    }

    /// Greedily merges fibers in the order given by `candidates` (pairs of
    /// source positions), keeping a merge only if every fiber stays a strict
    /// chain of the requested kind and the induced order stays acyclic.
    /// Targets are `Nat(k)` with `k` the smallest source position in the fiber.
    pub fn merge_fibers(
        p: &Poset,
        source: Vec<(usize, u32)>,
        strictness: Strictness,
        candidates: &[(usize, usize)],
    ) -> FiberMap {
        let n = source.len();
        let mut class: Vec<usize> = (0..n).collect();
        let build = |class: &[usize]| FiberMap {
            source: source.clone(),
            assignment: class.iter().map(|&c| VarIndex::Nat(c as u32)).collect(),
        };
        for &(a, b) in candidates {
            let (ca, cb) = (class[a], class[b]);
            if ca == cb {
                continue;
            }
            let merged_ok = (0..n).filter(|&k| class[k] == ca).all(|x| {
                (0..n).filter(|&k| class[k] == cb).all(|y| {
                    let (s, t) = (source[x], source[y]);
                    op_comparable(p, s, t)
                        && match strictness {
                            Strictness::Right => s.1 != t.1,
                            Strictness::Left => s.0 != t.0,
                        }
                })
            });
            if !merged_ok {
                continue;
            }
            let target = ca.min(cb);
            let trial: Vec<usize> = class
                .iter()
                .map(|&c| if c == ca || c == cb { target } else { c })
                .collect();
            if build(&trial).induced_order_acyclic(p) {
                class = trial;
            }
        }
        build(&class)
    }
}

/// Comparability in `P^op x N`.
fn op_comparable(p: &Poset, a: (usize, u32), b: (usize, u32)) -> bool {
    (p.leq(b.0, a.0) && a.1 <= b.1) || (p.leq(a.0, b.0) && b.1 <= a.1)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiberMapJson {
    pub source: Vec<[u32; 2]>,
    pub assignment: Vec<u32>,
    /// Variable family of the targets: `elem` or `nat` (the default).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
}

impl From<&FiberMap> for FiberMapJson {
    /// Pair targets have no integer form; their fibers are renumbered.
    fn from(f: &FiberMap) -> Self {
        let mut renumber: BTreeMap<VarIndex, u32> = BTreeMap::new();
        let mut elem = false;
        let assignment = f
            .assignment
            .iter()
            .map(|r| match *r {
                VarIndex::Elem(k) => {
                    elem = true;
                    k
                }
                VarIndex::Nat(k) => k,
                pair => {
                    let next = renumber.len() as u32;
                    *renumber.entry(pair).or_insert(next)
                }
            })
            .collect();
        FiberMapJson {
            source: f.source.iter().map(|&(p, i)| [p as u32, i]).collect(),
            assignment,
            target: elem.then(|| "elem".to_string()),
        }
    }
}

impl TryFrom<FiberMapJson> for FiberMap {
    type Error = Error;

    fn try_from(j: FiberMapJson) -> Result<FiberMap> {
        let wrap: fn(u32) -> VarIndex = match j.target.as_deref() {
            None | Some("nat") => VarIndex::Nat,
            Some("elem") => VarIndex::Elem,
            Some(other) => return Err(Error::Parse(format!("unknown target family `{other}`"))),
        };
        FiberMap::new(
            j.source.iter().map(|s| (s[0] as usize, s[1])).collect(),
            j.assignment.into_iter().map(wrap).collect(),
        )
    }
}
