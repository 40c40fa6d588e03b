//! Finite bounded lattices with precomputed meet and join tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::ElemSet;
use crate::error::{Error, Result};

/// Default cap on the number of lattice elements.
pub const DEFAULT_MAX_ELEMENTS: usize = 4096;

/// Serialized lattice: element labels plus any generating set of order pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub elements: Vec<String>,
    pub leq: Vec<(String, String)>,
}

/// A finite bounded lattice.
///
/// Elements are indices `0..n`. The order is stored as up-sets and down-sets;
/// meets and joins are `n × n` lookup tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinLattice {
    n: usize,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
    labels: Vec<String>,
}

/// A violated lattice law, found by [`FinLattice::check_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub law: String,
    pub elements: Vec<String>,
}

impl FinLattice {
    /// Builds a lattice from labels and order pairs `(a, b)` meaning `a ≤ b`.
    /// The relation is closed reflexively and transitively.
    pub fn build<S: AsRef<str>>(elements: &[S], leq_pairs: &[(S, S)]) -> Result<Self> {
        Self::build_capped(elements, leq_pairs, DEFAULT_MAX_ELEMENTS)
    }

    pub fn build_capped<S: AsRef<str>>(
        elements: &[S],
        leq_pairs: &[(S, S)],
        cap: usize,
    ) -> Result<Self> {
        let n = elements.len();
        if n > cap {
            return Err(Error::TooLarge {
                what: "lattice",
                size: n,
                cap,
            });
        }
        if n == 0 {
            return Err(Error::NoBounds("bottom"));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.as_ref(), i).is_some() {
                return Err(Error::DuplicateLabel(e.as_ref().to_string()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
        };
        let mut up: Vec<ElemSet> = (0..n).map(|i| ElemSet::singleton(n, i)).collect();
        for (a, b) in leq_pairs {
            let (a, b) = (lookup(a)?, lookup(b)?);
            up[a].insert(b);
        }
        // Warshall on rows: if i ≤ k then everything above k is above i.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        let labels = elements.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_order(labels, up)
    }

    pub fn from_spec(spec: &LatticeSpec) -> Result<Self> {
        Self::build(&spec.elements, &spec.leq)
    }

    /// Builds from a transitively closed order given as up-sets.
    pub fn from_order(labels: Vec<String>, up: Vec<ElemSet>) -> Result<Self> {
        let n = up.len();
        let mut down: Vec<ElemSet> = vec![ElemSet::empty(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotAPoset(labels[a].clone(), labels[b].clone()));
                }
                down[b].insert(a);
            }
        }
        let bottom = (0..n)
            .find(|&i| up[i].len() == n)
            .ok_or(Error::NoBounds("bottom"))?;
        let top = (0..n)
            .find(|&i| down[i].len() == n)
            .ok_or(Error::NoBounds("top"))?;

        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let m = extremal(&down, &down[a].intersection(&down[b]))
                    .ok_or_else(|| Error::NotALattice(labels[a].clone(), labels[b].clone(), "meet"))?;
                let j = extremal(&up, &up[a].intersection(&up[b]))
                    .ok_or_else(|| Error::NotALattice(labels[a].clone(), labels[b].clone(), "join"))?;
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
            }
        }
        Ok(Self {
            n,
            up,
            down,
            meet,
            join,
            bottom,
            top,
            labels,
        })
    }

    /// Assembles a lattice from tables computed elsewhere (e.g. by module
    /// arithmetic). No law is checked here; callers run [`check_axioms`]
    /// when the tables are not correct by construction.
    ///
    /// [`check_axioms`]: FinLattice::check_axioms
    pub fn from_parts_unchecked(
        labels: Vec<String>,
        up: Vec<ElemSet>,
        meet: Vec<u32>,
        join: Vec<u32>,
        bottom: usize,
        top: usize,
    ) -> Self {
        let n = up.len();
        let mut down = vec![ElemSet::empty(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.iter() {
                down[b].insert(a);
            }
        }
        Self {
            n,
            up,
            down,
            meet,
            join,
            bottom,
            top,
            labels,
        }
    }

    /// Returns a copy whose meet table has `meet(a, b) = value` (both orders).
    /// Used as a negative control for the verification suite.
    #[doc(hidden)]
    pub fn with_corrupted_meet(&self, a: usize, b: usize, value: usize) -> Self {
        let mut out = self.clone();
        out.meet[a * self.n + b] = value as u32;
        out.meet[b * self.n + a] = value as u32;
        out
    }

    /// Checks the order laws and the universal properties of both tables.
    /// Returns every violation found, in a fixed scan order.
    pub fn check_axioms(&self) -> Vec<AxiomViolation> {
        let n = self.n;
        let mut out = Vec::new();
        let name = |i: usize| self.labels[i].clone();
        for a in 0..n {
            if !self.leq(a, a) {
                out.push(AxiomViolation {
                    law: "reflexivity".into(),
                    elements: vec![name(a)],
                });
            }
            if !self.leq(self.bottom, a) || !self.leq(a, self.top) {
                out.push(AxiomViolation {
                    law: "bounds".into(),
                    elements: vec![name(a)],
                });
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    out.push(AxiomViolation {
                        law: "antisymmetry".into(),
                        elements: vec![name(a), name(b)],
                    });
                }
                if self.leq(a, b) && !self.up[b].is_subset(&self.up[a]) {
                    out.push(AxiomViolation {
                        law: "transitivity".into(),
                        elements: vec![name(a), name(b)],
                    });
                }
                let m = self.meet(a, b);
                if m >= n
                    || self.meet(b, a) != m
                    || self.down[m] != self.down[a].intersection(&self.down[b])
                {
                    out.push(AxiomViolation {
                        law: "meet is the greatest lower bound".into(),
                        elements: vec![name(a), name(b)],
                    });
                }
                let j = self.join(a, b);
                if j >= n
                    || self.join(b, a) != j
                    || self.up[j] != self.up[a].intersection(&self.up[b])
                {
                    out.push(AxiomViolation {
                        law: "join is the least upper bound".into(),
                        elements: vec![name(a), name(b)],
                    });
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b] as usize
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.n)
    }

    /// Greatest lower bound of `s`; the empty meet is the top.
    pub fn meet_all(&self, s: &ElemSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Least upper bound of `s`; the empty join is the bottom.
    pub fn join_all(&self, s: &ElemSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `{y : x ≤ y}`
    pub fn upset(&self, x: usize) -> &ElemSet {
        &self.up[x]
    }

    /// `{y : y ≤ x}`
    pub fn downset(&self, x: usize) -> &ElemSet {
        &self.down[x]
    }

    pub fn is_chain(&self, s: &ElemSet) -> bool {
        let v = s.to_vec();
        v.iter().enumerate().all(|(i, &a)| {
            v[i + 1..]
                .iter()
                .all(|&b| self.leq(a, b) || self.leq(b, a))
        })
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| x != self.bottom && self.down[x].len() == 2)
            .collect()
    }

    /// Upper covers of `x`: minimal elements strictly above it.
    pub fn covers(&self, x: usize) -> Vec<usize> {
        let strict: Vec<usize> = self.up[x].iter().filter(|&y| y != x).collect();
        strict
            .iter()
            .copied()
            .filter(|&y| !strict.iter().any(|&z| z != y && self.leq(z, y)))
            .collect()
    }

    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| self.covers(x).into_iter().map(move |y| (x, y)))
            .collect()
    }

    /// The order dual: reversed order, swapped tables and bounds.
    pub fn dual(&self) -> Self {
        Self {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
            labels: self.labels.clone(),
        }
    }

    /// Checks that `ground` is closed under the lattice meet.
    pub fn check_meet_closed(&self, ground: &ElemSet) -> Result<()> {
        for a in ground.iter() {
            for b in ground.iter() {
                if b > a {
                    break;
                }
                if !ground.contains(self.meet(a, b)) {
                    return Err(Error::GroundNotMeetClosed(
                        self.labels[a].clone(),
                        self.labels[b].clone(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn check_member(&self, ground: &ElemSet, p: usize) -> Result<()> {
        if p >= self.n || !ground.contains(p) {
            return Err(Error::InvalidPoints(format!(
                "element {} is not in the ground set",
                self.labels.get(p).map_or("?", |s| s.as_str())
            )));
        }
        Ok(())
    }

    /// Irreducibility of `p` in the meet-semilattice `(ground, ∧)`: for all
    /// `a, b` in ground with `p ≤ a, b`, `a ∧ b ≤ p` forces `a ≤ p` or `b ≤ p`.
    pub fn is_irreducible(&self, ground: &ElemSet, p: usize) -> Result<bool> {
        self.check_member(ground, p)?;
        self.check_meet_closed(ground)?;
        Ok(self.irreducible_witness(ground, p, false).is_none())
    }

    /// Strong irreducibility: the same implication for all `a, b` in ground.
    pub fn is_strongly_irreducible(&self, ground: &ElemSet, p: usize) -> Result<bool> {
        self.check_member(ground, p)?;
        Ok(self.irreducible_witness(ground, p, true).is_none())
    }

    /// First pair `(a, b)` in ground violating (strong) irreducibility of `p`.
    /// Ground validation is the caller's job.
    pub fn irreducible_witness(
        &self,
        ground: &ElemSet,
        p: usize,
        strong: bool,
    ) -> Option<(usize, usize)> {
        let candidates: Vec<usize> = if strong {
            ground.iter().filter(|&a| !self.leq(a, p)).collect()
        } else {
            ground
                .iter()
                .filter(|&a| self.leq(p, a) && !self.leq(a, p))
                .collect()
        };
        for (i, &a) in candidates.iter().enumerate() {
            for &b in &candidates[i..] {
                if self.leq(self.meet(a, b), p) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Distributivity of `(ground, meet_fn, join_fn)` over all triples.
    pub fn is_distributive<M, J>(&self, ground: &ElemSet, meet_fn: M, join_fn: J) -> Result<bool>
    where
        M: Fn(usize, usize) -> usize,
        J: Fn(usize, usize) -> usize,
    {
        Ok(distributivity_witness(self, ground, meet_fn, join_fn)?.is_none())
    }

    pub fn to_spec(&self) -> LatticeSpec {
        LatticeSpec {
            elements: self.labels.clone(),
            leq: self
                .cover_pairs()
                .into_iter()
                .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        }
    }

    /// Hasse diagram in DOT, edges from each element to its upper covers.
    pub fn hasse_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(name));
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, escape(l)));
        }
        for (a, b) in self.cover_pairs() {
            out.push_str(&format!("  n{} -> n{};\n", a, b));
        }
        out.push_str("}\n");
        out
    }
}

/// The element of `set` whose down-set (or up-set) equals `set`, if any.
fn extremal(rel: &[ElemSet], set: &ElemSet) -> Option<usize> {
    let size = set.len();
    set.iter().find(|&x| rel[x].len() == size && rel[x] == *set)
}

/// First triple `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
pub fn distributivity_witness<M, J>(
    lattice: &FinLattice,
    ground: &ElemSet,
    meet_fn: M,
    join_fn: J,
) -> Result<Option<(usize, usize, usize)>>
where
    M: Fn(usize, usize) -> usize,
    J: Fn(usize, usize) -> usize,
{
    let g = ground.to_vec();
    for &a in &g {
        for &b in &g {
            let (m, j) = (meet_fn(a, b), join_fn(a, b));
            if !ground.contains(m) || !ground.contains(j) {
                return Err(Error::GroundNotClosed(
                    lattice.label(a).to_string(),
                    lattice.label(b).to_string(),
                ));
            }
        }
    }
    for &a in &g {
        for &b in &g {
            for &c in &g {
                let lhs = meet_fn(a, join_fn(b, c));
                let rhs = join_fn(meet_fn(a, b), meet_fn(a, c));
                if lhs != rhs {
                    return Ok(Some((a, b, c)));
                }
            }
        }
    }
    Ok(None)
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Small named lattices used throughout tests and the built-in corpus.
pub mod named {
    use super::FinLattice;

    /// Chain `0 < 1 < ... < n-1` labelled by position.
    pub fn chain(n: usize) -> FinLattice {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<(String, String)> = (1..n)
            .map(|i| (labels[i - 1].clone(), labels[i].clone()))
            .collect();
        FinLattice::build(&labels, &pairs).expect("chain is a lattice")
    }

    /// `M3`: bottom, three atoms a, b, c, top.
    pub fn diamond() -> FinLattice {
        let e = ["0", "a", "b", "c", "1"];
        let p = [
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ];
        FinLattice::build(&e, &p).expect("M3 is a lattice")
    }

    /// `N5`: 0 < a < b < 1 and 0 < c < 1.
    pub fn pentagon() -> FinLattice {
        let e = ["0", "a", "b", "c", "1"];
        let p = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")];
        FinLattice::build(&e, &p).expect("N5 is a lattice")
    }

    /// Boolean lattice on two atoms x, y.
    pub fn boolean2() -> FinLattice {
        let e = ["0", "x", "y", "1"];
        let p = [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")];
        FinLattice::build(&e, &p).expect("2^2 is a lattice")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn set(l: &FinLattice, names: &[&str]) -> ElemSet {
        ElemSet::from_indices(l.len(), names.iter().map(|n| l.index_of(n).unwrap()))
    }

    #[test]
    fn two_chain() {
        let l = chain(2);
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
    }

    #[test]
    fn diamond_tables() {
        let l = diamond();
        let (a, b) = (l.index_of("a").unwrap(), l.index_of("b").unwrap());
        assert_eq!(l.label(l.meet(a, b)), "0");
        assert_eq!(l.label(l.join(a, b)), "1");
        assert!(l.check_axioms().is_empty());
    }

    #[test]
    fn missing_top_is_no_bounds() {
        let err = FinLattice::build(&["x", "y"], &[] as &[(&str, &str)]).unwrap_err();
        assert!(matches!(err, Error::NoBounds(_)));
    }

    #[test]
    fn cycle_is_not_a_poset() {
        let err = FinLattice::build(&["0", "a", "b", "1"], &[("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")])
            .unwrap_err();
        assert!(matches!(err, Error::NotAPoset(..)));
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        // a, b both below c and d: no unique join of a and b.
        let e = ["0", "a", "b", "c", "d", "1"];
        let p = [
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "1"),
            ("d", "1"),
        ];
        let err = FinLattice::build(&e, &p).unwrap_err();
        assert!(matches!(err, Error::NotALattice(..)));
    }

    #[test]
    fn unknown_and_duplicate_labels() {
        assert!(matches!(
            FinLattice::build(&["0", "1"], &[("0", "z")]).unwrap_err(),
            Error::UnknownLabel(_)
        ));
        assert!(matches!(
            FinLattice::build(&["0", "0"], &[] as &[(&str, &str)]).unwrap_err(),
            Error::DuplicateLabel(_)
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let err = FinLattice::build_capped(&labels, &[], 4).unwrap_err();
        assert!(matches!(err, Error::TooLarge { .. }));
    }

    #[test]
    fn big_meet_and_join() {
        let l = diamond();
        assert_eq!(l.label(l.meet_all(&set(&l, &["a", "b"]))), "0");
        assert_eq!(l.label(l.join_all(&set(&l, &["a", "b"]))), "1");
        assert_eq!(l.meet_all(&l.empty_set()), l.top());
        assert_eq!(l.join_all(&l.empty_set()), l.bottom());
        for x in 0..l.len() {
            let s = ElemSet::singleton(l.len(), x);
            assert_eq!(l.meet_all(&s), x);
            assert_eq!(l.join_all(&s), x);
        }
    }

    #[test]
    fn irreducibility_examples() {
        let m3 = diamond();
        let a = m3.index_of("a").unwrap();
        assert!(m3.is_irreducible(&m3.all(), a).unwrap());
        assert!(!m3.is_strongly_irreducible(&m3.all(), a).unwrap());
        let (w1, w2) = m3.irreducible_witness(&m3.all(), a, true).unwrap();
        assert_eq!((m3.label(w1), m3.label(w2)), ("b", "c"));

        let b2 = boolean2();
        assert!(!b2.is_irreducible(&b2.all(), b2.bottom()).unwrap());

        for n in 2..6 {
            let c = chain(n);
            for p in 0..n {
                assert!(c.is_irreducible(&c.all(), p).unwrap());
                assert!(c.is_strongly_irreducible(&c.all(), p).unwrap());
            }
        }
        let c2 = chain(2);
        assert!(c2.is_strongly_irreducible(&c2.all(), 0).unwrap());
    }

    #[test]
    fn ground_must_be_meet_closed() {
        let m3 = diamond();
        let g = set(&m3, &["a", "b", "1"]);
        let a = m3.index_of("a").unwrap();
        assert!(matches!(
            m3.is_irreducible(&g, a).unwrap_err(),
            Error::GroundNotMeetClosed(..)
        ));
        assert!(m3.is_irreducible(&m3.all(), m3.top()).is_ok());
        assert!(matches!(
            m3.is_irreducible(&set(&m3, &["0", "1"]), a).unwrap_err(),
            Error::InvalidPoints(_)
        ));
    }

    #[test]
    fn distributivity_examples() {
        let m3 = diamond();
        let full = m3.all();
        assert!(!m3
            .is_distributive(&full, |a, b| m3.meet(a, b), |a, b| m3.join(a, b))
            .unwrap());
        assert!(!pentagon()
            .is_distributive(&pentagon().all(), |a, b| pentagon().meet(a, b), |a, b| pentagon().join(a, b))
            .unwrap());
        let b2 = boolean2();
        assert!(b2
            .is_distributive(&b2.all(), |a, b| b2.meet(a, b), |a, b| b2.join(a, b))
            .unwrap());
        let c = chain(4);
        assert!(c
            .is_distributive(&c.all(), |a, b| c.meet(a, b), |a, b| c.join(a, b))
            .unwrap());
        let g = set(&m3, &["a", "b"]);
        assert!(matches!(
            m3.is_distributive(&g, |a, b| m3.meet(a, b), |a, b| m3.join(a, b))
                .unwrap_err(),
            Error::GroundNotClosed(..)
        ));
    }

    #[test]
    fn chains() {
        let m3 = diamond();
        assert!(!m3.is_chain(&set(&m3, &["a", "b"])));
        assert!(m3.is_chain(&set(&m3, &["0", "a", "1"])));
        assert!(m3.is_chain(&m3.empty_set()));
    }

    #[test]
    fn duality() {
        let c2 = chain(2);
        let d = c2.dual();
        assert_eq!(d.bottom(), 1);
        assert_eq!(d.top(), 0);
        assert_eq!(d.dual(), c2);

        let m3 = diamond();
        let d = m3.dual();
        assert!(d.check_axioms().is_empty());
        // M3 is self-dual: swapping 0 and 1 is an isomorphism.
        let swap = |x: usize| {
            if x == m3.bottom() {
                m3.top()
            } else if x == m3.top() {
                m3.bottom()
            } else {
                x
            }
        };
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(d.leq(a, b), m3.leq(swap(a), swap(b)));
                assert_eq!(swap(d.meet(a, b)), m3.meet(swap(a), swap(b)));
            }
        }
    }

    #[test]
    fn up_and_down_sets() {
        let m3 = diamond();
        let a = m3.index_of("a").unwrap();
        assert_eq!(*m3.upset(a), set(&m3, &["a", "1"]));
        assert_eq!(*m3.upset(m3.bottom()), m3.all());
        assert_eq!(m3.downset(m3.bottom()).to_vec(), vec![m3.bottom()]);
    }

    #[test]
    fn corrupted_meet_is_detected() {
        let m3 = diamond();
        let a = m3.index_of("a").unwrap();
        let b = m3.index_of("b").unwrap();
        let bad = m3.with_corrupted_meet(a, b, a);
        let v = bad.check_axioms();
        assert!(!v.is_empty());
        assert_eq!(v[0].elements, vec!["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn spec_round_trip_and_dot() {
        let c = chain(3);
        let spec = c.to_spec();
        assert_eq!(spec.leq.len(), 2);
        assert_eq!(FinLattice::from_spec(&spec).unwrap(), c);
        let dot = c.hasse_dot("chain");
        assert_eq!(dot.matches("->").count(), 2);
    }
}
