//! Finite topological spaces presented by their closed sets.

use serde::{Deserialize, Serialize};

use crate::bits::PointSet;
use crate::error::{Error, Result};
use crate::lattice::escape;

/// Serialized space: point labels and closed sets as label lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopSpaceSpec {
    pub points: Vec<String>,
    pub closed_sets: Vec<Vec<String>>,
}

/// A finite space. The closed family is kept sorted by size, then by bits,
/// without duplicates, so equal families compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSpace {
    labels: Vec<String>,
    closed: Vec<PointSet>,
}

/// Why a closed family fails to be a topology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TopologyViolation {
    MissingEmpty,
    MissingWhole,
    UnionNotClosed(Vec<String>, Vec<String>),
    IntersectionNotClosed(Vec<String>, Vec<String>),
}

/// Longest strict chain of closed sets, counted in sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCondition {
    pub holds: bool,
    pub max_chain_length: usize,
}

/// Result of the sobriety check: each irreducible closed set with the points
/// whose closure is exactly that set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sobriety {
    pub sober: bool,
    pub generic_points: Vec<(PointSet, Vec<usize>)>,
}

impl TopSpace {
    pub fn new<I: IntoIterator<Item = PointSet>>(labels: Vec<String>, closed: I) -> Self {
        let mut closed: Vec<PointSet> = closed.into_iter().collect();
        closed.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        closed.dedup();
        Self { labels, closed }
    }

    pub fn discrete(labels: Vec<String>) -> Self {
        let n = labels.len();
        assert!(n < 20, "discrete space too large to list");
        Self::new(labels, (0..1u64 << n).map(|m| PointSet::from_mask(n, m)))
    }

    pub fn indiscrete(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self::new(labels, [PointSet::empty(n), PointSet::full(n)])
    }

    pub fn from_spec(spec: &TopSpaceSpec) -> Result<Self> {
        let n = spec.points.len();
        let mut closed = Vec::with_capacity(spec.closed_sets.len());
        for set in &spec.closed_sets {
            let mut s = PointSet::empty(n);
            for l in set {
                let i = spec
                    .points
                    .iter()
                    .position(|p| p == l)
                    .ok_or_else(|| Error::UnknownLabel(l.clone()))?;
                s.insert(i);
            }
            closed.push(s);
        }
        Ok(Self::new(spec.points.clone(), closed))
    }

    pub fn to_spec(&self) -> TopSpaceSpec {
        TopSpaceSpec {
            points: self.labels.clone(),
            closed_sets: self.closed.iter().map(|s| self.names(s)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn closed_sets(&self) -> &[PointSet] {
        &self.closed
    }

    pub fn names(&self, s: &PointSet) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn whole(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn is_closed(&self, s: &PointSet) -> bool {
        self.closed.binary_search_by(|c| c.len().cmp(&s.len()).then_with(|| c.cmp(s))).is_ok()
    }

    pub fn is_open(&self, s: &PointSet) -> bool {
        self.is_closed(&s.complement())
    }

    pub fn open_sets(&self) -> Vec<PointSet> {
        self.closed.iter().rev().map(PointSet::complement).collect()
    }

    /// `None` when the family contains ∅ and the whole set and is closed
    /// under pairwise unions and intersections.
    pub fn verify_topology(&self) -> Option<TopologyViolation> {
        let n = self.len();
        if !self.is_closed(&PointSet::empty(n)) {
            return Some(TopologyViolation::MissingEmpty);
        }
        if !self.is_closed(&PointSet::full(n)) {
            return Some(TopologyViolation::MissingWhole);
        }
        for (i, a) in self.closed.iter().enumerate() {
            for b in &self.closed[i + 1..] {
                if !self.is_closed(&a.union(b)) {
                    return Some(TopologyViolation::UnionNotClosed(self.names(a), self.names(b)));
                }
                if !self.is_closed(&a.intersection(b)) {
                    return Some(TopologyViolation::IntersectionNotClosed(
                        self.names(a),
                        self.names(b),
                    ));
                }
            }
        }
        None
    }

    pub fn is_topology(&self) -> bool {
        self.verify_topology().is_none()
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: &PointSet) -> PointSet {
        self.closed
            .iter()
            .filter(|c| a.is_subset(c))
            .fold(self.whole(), |acc, c| acc.intersection(c))
    }

    pub fn point_closure(&self, p: usize) -> PointSet {
        self.closure(&PointSet::singleton(self.len(), p))
    }

    /// Distinct points with equal closures.
    pub fn t0_witness(&self) -> Option<(usize, usize)> {
        let cl: Vec<PointSet> = (0..self.len()).map(|p| self.point_closure(p)).collect();
        for p in 0..self.len() {
            for q in p + 1..self.len() {
                if cl[p] == cl[q] {
                    return Some((p, q));
                }
            }
        }
        None
    }

    /// A point whose singleton is not closed.
    pub fn t1_witness(&self) -> Option<usize> {
        (0..self.len()).find(|&p| !self.is_closed(&PointSet::singleton(self.len(), p)))
    }

    /// Distinct points without disjoint open neighbourhoods.
    pub fn t2_witness(&self) -> Option<(usize, usize)> {
        let opens = self.open_sets();
        for p in 0..self.len() {
            for q in p + 1..self.len() {
                let separated = opens.iter().filter(|u| u.contains(p)).any(|u| {
                    opens
                        .iter()
                        .any(|v| v.contains(q) && u.is_disjoint(v))
                });
                if !separated {
                    return Some((p, q));
                }
            }
        }
        None
    }

    pub fn is_t0(&self) -> bool {
        self.t0_witness().is_none()
    }

    pub fn is_t1(&self) -> bool {
        self.t1_witness().is_none()
    }

    pub fn is_t2(&self) -> bool {
        self.t2_witness().is_none()
    }

    /// A point whose singleton is not open.
    pub fn discrete_witness(&self) -> Option<usize> {
        (0..self.len()).find(|&p| !self.is_open(&PointSet::singleton(self.len(), p)))
    }

    pub fn is_discrete(&self) -> bool {
        self.discrete_witness().is_none()
    }

    /// A clopen set other than ∅ and the whole space.
    pub fn connected_witness(&self) -> Option<PointSet> {
        let whole = self.whole();
        self.closed
            .iter()
            .find(|c| !c.is_empty() && **c != whole && self.is_open(c))
            .cloned()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_witness().is_none()
    }

    /// Two proper closed sets covering `a`, neither containing it.
    /// `a` must be non-empty.
    pub fn reducibility_witness(&self, a: &PointSet) -> Option<(PointSet, PointSet)> {
        // Only the maximal proper traces C ∩ A matter.
        let mut traces: Vec<(PointSet, &PointSet)> = Vec::new();
        for c in &self.closed {
            let t = c.intersection(a);
            if t != *a && !traces.iter().any(|(u, _)| *u == t) {
                traces.push((t, c));
            }
        }
        let maximal: Vec<&(PointSet, &PointSet)> = traces
            .iter()
            .filter(|(t, _)| !traces.iter().any(|(u, _)| u != t && t.is_subset(u)))
            .collect();
        for (i, (t1, c1)) in maximal.iter().enumerate() {
            for (t2, c2) in &maximal[i..] {
                if t1.union(t2) == *a {
                    return Some(((*c1).clone(), (*c2).clone()));
                }
            }
        }
        None
    }

    /// Irreducibility of a subset in the sense of Bourbaki.
    pub fn is_irreducible_subset(&self, a: &PointSet) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.reducibility_witness(a).is_none())
    }

    pub fn is_irreducible_space(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptySpace);
        }
        self.is_irreducible_subset(&self.whole())
    }

    /// Two non-empty disjoint closed sets.
    pub fn ultraconnected_witness(&self) -> Option<(PointSet, PointSet)> {
        let nonempty: Vec<&PointSet> = self.closed.iter().filter(|c| !c.is_empty()).collect();
        for (i, a) in nonempty.iter().enumerate() {
            for b in &nonempty[i + 1..] {
                if a.is_disjoint(b) {
                    return Some(((*a).clone(), (*b).clone()));
                }
            }
        }
        None
    }

    pub fn is_ultraconnected(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptySpace);
        }
        Ok(self.ultraconnected_witness().is_none())
    }

    /// A finite subfamily of `cover` (by index) that still covers the space,
    /// or `None` when `cover` is not a cover at all.
    pub fn finite_subcover(&self, cover: &[PointSet]) -> Option<Vec<usize>> {
        let whole = self.whole();
        let union = cover
            .iter()
            .fold(PointSet::empty(self.len()), |acc, u| acc.union(u));
        if union != whole {
            return None;
        }
        let mut covered = PointSet::empty(self.len());
        let mut chosen = Vec::new();
        while covered != whole {
            let (best, gain) = cover
                .iter()
                .enumerate()
                .map(|(i, u)| (i, u.difference(&covered).len()))
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))?;
            if gain == 0 {
                return None;
            }
            covered.union_with(&cover[best]);
            chosen.push(best);
        }
        Some(chosen)
    }

    /// Open covers tested for compactness: every subfamily of the open sets
    /// when there are at most 12 of them, otherwise the full open family,
    /// the open family without the whole space, and the minimal
    /// neighbourhoods of the points.
    fn test_covers(&self) -> Vec<Vec<PointSet>> {
        let opens = self.open_sets();
        if opens.len() <= 12 {
            return (0..1u32 << opens.len())
                .map(|mask| {
                    opens
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, u)| u.clone())
                        .collect()
                })
                .collect();
        }
        let whole = self.whole();
        let minimal: Vec<PointSet> = (0..self.len())
            .map(|p| {
                opens
                    .iter()
                    .filter(|u| u.contains(p))
                    .fold(whole.clone(), |acc, u| acc.intersection(u))
            })
            .collect();
        let proper: Vec<PointSet> = opens.iter().filter(|u| **u != whole).cloned().collect();
        vec![opens, proper, minimal]
    }

    /// Every open cover (from the tested family) has a finite subcover.
    pub fn is_compact(&self) -> bool {
        self.test_covers().iter().all(|cover| {
            let whole = self.whole();
            let union = cover
                .iter()
                .fold(PointSet::empty(self.len()), |acc, u| acc.union(u));
            if union != whole {
                return true;
            }
            match self.finite_subcover(cover) {
                Some(sub) => {
                    sub.iter()
                        .fold(PointSet::empty(self.len()), |acc, &i| acc.union(&cover[i]))
                        == whole
                }
                None => false,
            }
        })
    }

    /// On a finite carrier every cover is countable, so this runs the same
    /// cover test as [`is_compact`](Self::is_compact).
    pub fn is_countably_compact(&self) -> bool {
        self.is_compact()
    }

    fn longest_chain(&self) -> usize {
        let mut best = vec![1usize; self.closed.len()];
        for i in 0..self.closed.len() {
            for j in 0..i {
                if self.closed[j].len() < self.closed[i].len()
                    && self.closed[j].is_subset(&self.closed[i])
                {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// Descending chains of closed sets stabilise.
    pub fn is_noetherian(&self) -> ChainCondition {
        let len = self.longest_chain();
        ChainCondition {
            holds: len <= self.closed.len(),
            max_chain_length: len,
        }
    }

    /// Ascending chains of closed sets stabilise.
    pub fn is_artinian(&self) -> ChainCondition {
        self.is_noetherian()
    }

    /// Maximal irreducible closed subsets.
    pub fn irreducible_components(&self) -> Result<Vec<PointSet>> {
        if self.is_empty() {
            return Err(Error::EmptySpace);
        }
        let irreducible: Vec<&PointSet> = self
            .closed
            .iter()
            .filter(|c| !c.is_empty() && self.reducibility_witness(c).is_none())
            .collect();
        Ok(irreducible
            .iter()
            .filter(|c| !irreducible.iter().any(|d| d != *c && c.is_subset(d)))
            .map(|c| (*c).clone())
            .collect())
    }

    pub fn sobriety(&self) -> Sobriety {
        let closures: Vec<PointSet> = (0..self.len()).map(|p| self.point_closure(p)).collect();
        let mut generic_points = Vec::new();
        let mut sober = true;
        for c in &self.closed {
            if c.is_empty() || self.reducibility_witness(c).is_some() {
                continue;
            }
            let generic: Vec<usize> = c.iter().filter(|&p| closures[p] == *c).collect();
            sober &= generic.len() == 1;
            generic_points.push((c.clone(), generic));
        }
        Sobriety {
            sober,
            generic_points,
        }
    }

    pub fn is_sober(&self) -> bool {
        self.sobriety().sober
    }

    /// Specialisation preorder: an edge `p -> q` whenever `p ∈ cl{q}`.
    pub fn specialization_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n", escape(name));
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  p{} [label=\"{}\"];\n", i, escape(l)));
        }
        for q in 0..self.len() {
            for p in self.point_closure(q).iter() {
                if p != q {
                    out.push_str(&format!("  p{} -> p{};\n", p, q));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
