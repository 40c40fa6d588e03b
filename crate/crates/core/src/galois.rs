//! The Galois connection between a finite lattice and the subsets of a
//! designated point set `X`, the closed elements it induces, and the
//! decision procedures for X-top and strongly X-top lattices.
//!
//! `V(a)` is the set of points above `a`; `I(A)` is the meet of `A`. Their
//! fixpoints `C(L) = {a : a = I(V(a))}` form a lattice under the inherited
//! meet and the modified join `a ⋁~ b = I(V(a ∨ b))`.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::bits::{ElemSet, PointSet};
use crate::check::{subset_sample, CheckReport};
use crate::error::{Error, Result};
use crate::lattice::{distributivity_witness, FinLattice};
use crate::topology::TopSpace;

/// A lattice together with its designated points.
#[derive(Clone, Debug)]
pub struct SpectrumContext {
    lattice: FinLattice,
    points: Vec<usize>,
    point_of: Vec<Option<usize>>,
    varieties: Vec<PointSet>,
    hull: Vec<usize>,
    from_dual: bool,
}

/// `C(L)` with its inherited meet and modified join.
#[derive(Clone, Debug)]
pub struct ClosedElements {
    members: ElemSet,
    hull: Vec<usize>,
}

impl ClosedElements {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Binary modified join `I(V(a ∨ b))`.
    pub fn tilde_join(&self, lattice: &FinLattice, a: usize, b: usize) -> usize {
        self.hull[lattice.join(a, b)]
    }
}

/// Outcome of the direct X-top test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XTop {
    pub holds: bool,
    /// Elements `(a, b)` with `V(a) ∪ V(b)` outside the image of `V`.
    pub witness: Option<(usize, usize)>,
}

/// Outcome of the strongly X-top test and its anti-homomorphism oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StronglyXTop {
    pub holds: bool,
    /// `V(a ∧ b) = V(a) ∪ V(b)` for all pairs.
    pub meet_reversal: bool,
    /// `V(a ∨ b) = V(a) ∩ V(b)` for all pairs.
    pub join_reversal: bool,
    /// `(p, a, b)` with `a ∧ b ≤ p` but neither `a ≤ p` nor `b ≤ p`.
    pub witness: Option<(usize, usize, usize)>,
}

impl SpectrumContext {
    /// `points` must be non-empty and must not contain the top.
    pub fn new(lattice: FinLattice, points: &ElemSet, from_dual: bool) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidPoints("X must be non-empty".into()));
        }
        if points.width() != lattice.len() || points.iter().any(|p| p >= lattice.len()) {
            return Err(Error::InvalidPoints("X references unknown elements".into()));
        }
        if points.contains(lattice.top()) {
            return Err(Error::InvalidPoints(format!(
                "X contains the top element {}",
                lattice.label(lattice.top())
            )));
        }
        let pts = points.to_vec();
        let mut point_of = vec![None; lattice.len()];
        for (i, &p) in pts.iter().enumerate() {
            point_of[p] = Some(i);
        }
        let varieties: Vec<PointSet> = (0..lattice.len())
            .map(|a| {
                PointSet::from_indices(
                    pts.len(),
                    pts.iter()
                        .enumerate()
                        .filter(|(_, &p)| lattice.leq(a, p))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        let mut ctx = Self {
            lattice,
            points: pts,
            point_of,
            varieties,
            hull: Vec::new(),
            from_dual,
        };
        ctx.hull = (0..ctx.lattice.len())
            .map(|a| ctx.intersect_point_set(&ctx.varieties[a]))
            .collect();
        Ok(ctx)
    }

    /// Builds a context from point labels.
    pub fn from_labels<S: AsRef<str>>(lattice: FinLattice, labels: &[S]) -> Result<Self> {
        let mut pts = lattice.empty_set();
        for l in labels {
            let i = lattice.index_of(l.as_ref()).ok_or_else(|| {
                Error::InvalidPoints(format!("unknown point {:?}", l.as_ref()))
            })?;
            pts.insert(i);
        }
        Self::new(lattice, &pts, false)
    }

    pub fn lattice(&self) -> &FinLattice {
        &self.lattice
    }

    /// Lattice elements of `X`, in increasing index order. Point `i` of a
    /// [`PointSet`] is `points()[i]`.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn point_index(&self, element: usize) -> Option<usize> {
        self.point_of[element]
    }

    pub fn is_from_dual(&self) -> bool {
        self.from_dual
    }

    pub fn x_elements(&self) -> ElemSet {
        ElemSet::from_indices(self.lattice.len(), self.points.iter().copied())
    }

    pub fn point_labels(&self) -> Vec<String> {
        self.points
            .iter()
            .map(|&p| self.lattice.label(p).to_string())
            .collect()
    }

    pub fn point_names(&self, a: &PointSet) -> Vec<String> {
        a.iter()
            .map(|i| self.lattice.label(self.points[i]).to_string())
            .collect()
    }

    /// `V(a) = {p ∈ X : a ≤ p}`.
    pub fn variety(&self, a: usize) -> &PointSet {
        &self.varieties[a]
    }

    /// `I(A) = ⋀ A`, with `I(∅)` the top.
    pub fn intersect_point_set(&self, a: &PointSet) -> usize {
        a.iter()
            .fold(self.lattice.top(), |acc, i| self.lattice.meet(acc, self.points[i]))
    }

    /// `I(V(a))`.
    pub fn hull(&self, a: usize) -> usize {
        self.hull[a]
    }

    /// The image of `V`, sorted.
    pub fn variety_image(&self) -> BTreeSet<PointSet> {
        self.varieties.iter().cloned().collect()
    }

    /// The Galois laws, with the point-set side quantified over
    /// [`subset_sample`]`(|X|, cap, seed)`.
    pub fn check_galois_laws(&self, cap: usize, seed: u64) -> CheckReport {
        let l = &self.lattice;
        let mut r = CheckReport::new("galois laws");
        for a in 0..l.len() {
            let ia = self.hull[a];
            r.record(l.leq(a, ia), || format!("{} ≰ I(V({}))", l.label(a), l.label(a)));
            r.record(self.varieties[ia] == self.varieties[a], || {
                format!("V(I(V({}))) ≠ V({})", l.label(a), l.label(a))
            });
            for b in 0..l.len() {
                if l.leq(a, b) {
                    r.record(self.varieties[b].is_subset(&self.varieties[a]), || {
                        format!("V not order-reversing at {} ≤ {}", l.label(a), l.label(b))
                    });
                }
            }
        }
        for set in subset_sample(self.point_count(), cap, seed) {
            let i = self.intersect_point_set(&set);
            let vi = &self.varieties[i];
            r.record(set.is_subset(vi), || {
                format!("{:?} ⊄ V(I(A))", self.point_names(&set))
            });
            r.record(self.intersect_point_set(vi) == i, || {
                format!("I(V(I({:?}))) ≠ I(A)", self.point_names(&set))
            });
            for p in 0..self.point_count() {
                if !set.contains(p) {
                    let mut bigger = set.clone();
                    bigger.insert(p);
                    r.record(l.leq(self.intersect_point_set(&bigger), i), || {
                        format!("I not order-reversing at {:?}", self.point_names(&set))
                    });
                }
            }
        }
        r
    }

    /// `C(L)` by a single fixpoint scan over the lattice.
    pub fn closed_elements(&self) -> ClosedElements {
        let members = ElemSet::from_indices(
            self.lattice.len(),
            (0..self.lattice.len()).filter(|&a| self.hull[a] == a),
        );
        ClosedElements {
            members,
            hull: self.hull.clone(),
        }
    }

    /// Modified join of `y ⊆ C(L)`, evaluated as `I(V(⋁ y))` and as the
    /// meet of all closed upper bounds; the two must agree.
    pub fn tilde_join(&self, y: &ElemSet) -> Result<usize> {
        let l = &self.lattice;
        let closed = self.closed_elements();
        if let Some(bad) = y.iter().find(|&a| !closed.contains(a)) {
            return Err(Error::NotClosedElements(l.label(bad).to_string()));
        }
        let via_hull = self.hull[l.join_all(y)];
        let bounds = ElemSet::from_indices(
            l.len(),
            closed
                .members
                .iter()
                .filter(|&c| y.iter().all(|a| l.leq(a, c))),
        );
        let via_bounds = l.meet_all(&bounds);
        if via_hull != via_bounds {
            return Err(Error::OracleDisagreement {
                check: "modified join",
                detail: format!(
                    "I(V(⋁Y)) = {} but meet of closed upper bounds = {}",
                    l.label(via_hull),
                    l.label(via_bounds)
                ),
            });
        }
        Ok(via_hull)
    }

    /// Direct criterion: the image of `V` is closed under pairwise unions.
    pub fn is_x_top(&self) -> XTop {
        let image: HashSet<&PointSet> = self.varieties.iter().collect();
        let n = self.lattice.len();
        // One representative element per distinct variety.
        let mut reps: Vec<usize> = Vec::new();
        let mut seen = HashSet::new();
        for a in 0..n {
            if seen.insert(&self.varieties[a]) {
                reps.push(a);
            }
        }
        for (i, &a) in reps.iter().enumerate() {
            for &b in &reps[i + 1..] {
                if !image.contains(&self.varieties[a].union(&self.varieties[b])) {
                    return XTop {
                        holds: false,
                        witness: Some((a, b)),
                    };
                }
            }
        }
        XTop {
            holds: true,
            witness: None,
        }
    }

    /// Every point is strongly irreducible in `(C(L), ∧)`.
    pub fn is_x_top_via_c(&self) -> bool {
        let c = self.closed_elements();
        self.points
            .iter()
            .all(|&p| self.lattice.irreducible_witness(&c.members, p, true).is_none())
    }

    /// `(C(L), ∧, ⋁~)` is distributive and every point is irreducible in
    /// `(C(L), ∧)`.
    pub fn is_x_top_via_d(&self) -> bool {
        let l = &self.lattice;
        let c = self.closed_elements();
        let distributive = distributivity_witness(
            l,
            &c.members,
            |a, b| l.meet(a, b),
            |a, b| c.tilde_join(l, a, b),
        )
        .expect("C(L) is closed under ∧ and ⋁~")
        .is_none();
        distributive
            && self
                .points
                .iter()
                .all(|&p| l.irreducible_witness(&c.members, p, false).is_none())
    }

    /// Every point strongly irreducible in `(L, ∧)`, checked against the
    /// anti-homomorphism property of `V` on all of `L`.
    pub fn is_strongly_x_top(&self) -> Result<StronglyXTop> {
        let l = &self.lattice;
        let all = l.all();
        let witness = self.points.iter().find_map(|&p| {
            l.irreducible_witness(&all, p, true)
                .map(|(a, b)| (p, a, b))
        });
        let mut meet_reversal = true;
        let mut join_reversal = true;
        for a in 0..l.len() {
            for b in a..l.len() {
                let (va, vb) = (&self.varieties[a], &self.varieties[b]);
                meet_reversal &= self.varieties[l.meet(a, b)] == va.union(vb);
                join_reversal &= self.varieties[l.join(a, b)] == va.intersection(vb);
            }
        }
        let holds = witness.is_none();
        if holds != (meet_reversal && join_reversal) {
            return Err(Error::OracleDisagreement {
                check: "strongly X-top vs anti-homomorphism",
                detail: format!(
                    "strong irreducibility says {holds}, meet reversal {meet_reversal}, join reversal {join_reversal}"
                ),
            });
        }
        Ok(StronglyXTop {
            holds,
            meet_reversal,
            join_reversal,
            witness,
        })
    }

    /// The topology on `X` whose closed sets are the image of `V`.
    pub fn build_topology(&self) -> Result<TopSpace> {
        let x = self.is_x_top();
        if let Some((a, b)) = x.witness {
            return Err(Error::NotXTop(format!(
                "V({}) ∪ V({}) is not a variety",
                self.lattice.label(a),
                self.lattice.label(b)
            )));
        }
        let space = TopSpace::new(self.point_labels(), self.variety_image());
        if let Some(v) = space.verify_topology() {
            return Err(Error::OracleDisagreement {
                check: "variety image is a topology",
                detail: format!("{v:?}"),
            });
        }
        Ok(space)
    }

    /// Irreducibility of a non-empty point set in the X-top topology.
    pub fn is_irreducible_point_set(&self, a: &PointSet) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let space = self.build_topology()?;
        space.is_irreducible_subset(a)
    }

    /// Cross-checks irreducible subsets of `X` against irreducibility of
    /// their meets, and chains above points whose interval lies in `X`.
    pub fn check_irreducible_correspondence(&self, cap: usize, seed: u64) -> Result<CheckReport> {
        let space = self.build_topology()?;
        let strongly = self.is_strongly_x_top()?.holds;
        let l = &self.lattice;
        let closed = self.closed_elements();
        let all = l.all();
        let mut r = CheckReport::new("irreducible subsets");
        for set in subset_sample(self.point_count(), cap, seed) {
            if set.is_empty() {
                continue;
            }
            let i = self.intersect_point_set(&set);
            let irr_set = space.reducibility_witness(&set).is_none();
            let irr_in_c = l.irreducible_witness(&closed.members, i, false).is_none();
            r.record(!irr_in_c || irr_set, || {
                format!(
                    "I({:?}) irreducible in C(L) but the set is reducible",
                    self.point_names(&set)
                )
            });
            if self.point_of[i].is_some() {
                r.record(irr_set, || {
                    format!("I({:?}) ∈ X but the set is reducible", self.point_names(&set))
                });
            }
            if strongly {
                let irr_in_l = l.irreducible_witness(&all, i, false).is_none();
                let strong_in_l = l.irreducible_witness(&all, i, true).is_none();
                r.record(
                    irr_in_c == irr_set && irr_set == strong_in_l && strong_in_l == irr_in_l,
                    || {
                        format!(
                            "{:?}: irreducible in C(L) {irr_in_c}, as a set {irr_set}, in L {irr_in_l}, strongly in L {strong_in_l}",
                            self.point_names(&set)
                        )
                    },
                );
            }
        }
        let x = self.x_elements();
        let top = l.top();
        let interval_in_x = |p: usize| l.upset(p).iter().all(|y| y == top || x.contains(y));
        for &p in &self.points {
            if interval_in_x(p) {
                let mut interval = l.upset(p).clone();
                interval.remove(top);
                r.record(l.is_chain(&interval), || {
                    format!("[{}, 1[ ⊆ X but is not a chain", l.label(p))
                });
            }
        }
        if self.points.iter().all(|&p| interval_in_x(p)) {
            for set in subset_sample(self.point_count(), cap, seed) {
                if set.is_empty() || self.point_of[self.intersect_point_set(&set)].is_none() {
                    continue;
                }
                let elems = ElemSet::from_indices(l.len(), set.iter().map(|i| self.points[i]));
                r.record(l.is_chain(&elems), || {
                    format!("I({:?}) ∈ X but the set is not a chain", self.point_names(&set))
                });
            }
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::named::{boolean2, chain, diamond};

    fn m3_ctx() -> SpectrumContext {
        SpectrumContext::from_labels(diamond(), &["a", "b", "c"]).unwrap()
    }

    fn ps(ctx: &SpectrumContext, names: &[&str]) -> PointSet {
        PointSet::from_indices(
            ctx.point_count(),
            names.iter().map(|n| {
                ctx.point_index(ctx.lattice().index_of(n).unwrap())
                    .unwrap()
            }),
        )
    }

    #[test]
    fn rejects_bad_points() {
        let l = diamond();
        assert!(matches!(
            SpectrumContext::from_labels(l.clone(), &["1"]),
            Err(Error::InvalidPoints(_))
        ));
        assert!(matches!(
            SpectrumContext::new(l.clone(), &l.empty_set(), false),
            Err(Error::InvalidPoints(_))
        ));
        assert!(matches!(
            SpectrumContext::from_labels(l, &["q"]),
            Err(Error::InvalidPoints(_))
        ));
        // bottom is allowed
        assert!(SpectrumContext::from_labels(chain(2), &["0"]).is_ok());
    }

    #[test]
    fn varieties() {
        let ctx = m3_ctx();
        let l = ctx.lattice();
        assert_eq!(*ctx.variety(l.bottom()), PointSet::full(3));
        assert!(ctx.variety(l.top()).is_empty());
        assert_eq!(*ctx.variety(l.index_of("a").unwrap()), ps(&ctx, &["a"]));
    }

    #[test]
    fn intersections() {
        let ctx = m3_ctx();
        let l = ctx.lattice();
        assert_eq!(ctx.intersect_point_set(&PointSet::empty(3)), l.top());
        let a = l.index_of("a").unwrap();
        assert_eq!(ctx.intersect_point_set(&ps(&ctx, &["a"])), a);
        assert_eq!(ctx.intersect_point_set(&ps(&ctx, &["a", "b"])), l.bottom());
    }

    #[test]
    fn galois_laws_hold() {
        let r = m3_ctx().check_galois_laws(15, 0);
        assert!(r.passed(), "{:?}", r.failures);
        let c2 = SpectrumContext::from_labels(chain(2), &["0"]).unwrap();
        assert_eq!(c2.hull(1), 1);
        assert!(c2.check_galois_laws(15, 0).passed());
        let ctx = m3_ctx();
        let i = ctx.intersect_point_set(&ps(&ctx, &["a", "b"]));
        assert_eq!(*ctx.variety(i), PointSet::full(3));
    }

    #[test]
    fn closed_elements_examples() {
        let ctx = m3_ctx();
        assert_eq!(ctx.closed_elements().len(), 5);
        let l = chain(4);
        let ctx = SpectrumContext::from_labels(l.clone(), &["0", "2"]).unwrap();
        assert_eq!(ctx.closed_elements().to_vec(), vec![0, 2, 3]);
        let x = ctx.x_elements();
        assert!(x.is_subset(ctx.closed_elements().members()));
    }

    #[test]
    fn tilde_join_examples() {
        let ctx = m3_ctx();
        let l = ctx.lattice().clone();
        let a = l.index_of("a").unwrap();
        let b = l.index_of("b").unwrap();
        assert_eq!(ctx.tilde_join(&ElemSet::singleton(5, a)).unwrap(), a);
        assert_eq!(
            ctx.tilde_join(&l.empty_set()).unwrap(),
            ctx.intersect_point_set(&PointSet::full(3))
        );
        assert_eq!(ctx.tilde_join(&ElemSet::from_indices(5, [a, b])).unwrap(), l.top());

        let ctx = SpectrumContext::from_labels(chain(4), &["1"]).unwrap();
        assert!(matches!(
            ctx.tilde_join(&ElemSet::singleton(4, 2)),
            Err(Error::NotClosedElements(_))
        ));
    }

    #[test]
    fn x_top_examples() {
        let ctx = m3_ctx();
        let x = ctx.is_x_top();
        assert!(!x.holds);
        let (a, b) = x.witness.unwrap();
        assert_eq!((ctx.lattice().label(a), ctx.lattice().label(b)), ("a", "b"));
        assert!(!ctx.is_x_top_via_c());
        assert!(!ctx.is_x_top_via_d());

        for n in 2..6 {
            let l = chain(n);
            for mask in 1u64..(1 << (n - 1)) {
                let pts = ElemSet::from_mask(n, mask);
                let ctx = SpectrumContext::new(l.clone(), &pts, false).unwrap();
                assert!(ctx.is_x_top().holds);
                assert!(ctx.is_x_top_via_c());
                assert!(ctx.is_x_top_via_d());
                assert!(ctx.is_strongly_x_top().unwrap().holds);
            }
        }
    }

    #[test]
    fn strongly_x_top_on_boolean() {
        // X = {x, y} in 2^2: V(x ∧ y) = X = V(x) ∪ V(y) holds, strongly X-top.
        let ctx = SpectrumContext::from_labels(boolean2(), &["x", "y"]).unwrap();
        let s = ctx.is_strongly_x_top().unwrap();
        assert!(s.holds && s.meet_reversal && s.join_reversal);
        // X = {0}: 0 is not strongly irreducible, yet X-top.
        let ctx = SpectrumContext::from_labels(boolean2(), &["0"]).unwrap();
        let s = ctx.is_strongly_x_top().unwrap();
        assert!(!s.holds && !s.meet_reversal && s.join_reversal);
        assert!(ctx.is_x_top().holds);
    }

    #[test]
    fn topology_examples() {
        let c2 = SpectrumContext::from_labels(chain(2), &["0"]).unwrap();
        let t = c2.build_topology().unwrap();
        assert_eq!(t.closed_sets(), &[PointSet::empty(1), PointSet::full(1)]);

        let c3 = SpectrumContext::from_labels(chain(3), &["0", "1"]).unwrap();
        let t = c3.build_topology().unwrap();
        // closed: ∅, {x}, {0, x}
        assert_eq!(t.closed_sets().len(), 3);
        assert_eq!(t.closed_sets()[1], PointSet::singleton(2, 1));

        assert!(matches!(m3_ctx().build_topology(), Err(Error::NotXTop(_))));
    }

    #[test]
    fn irreducible_point_sets() {
        let ctx = SpectrumContext::from_labels(boolean2(), &["x", "y"]).unwrap();
        assert!(ctx
            .is_irreducible_point_set(&PointSet::singleton(2, 0))
            .unwrap());
        assert!(!ctx.is_irreducible_point_set(&PointSet::full(2)).unwrap());
        assert!(matches!(
            ctx.is_irreducible_point_set(&PointSet::empty(2)),
            Err(Error::EmptySet)
        ));
        assert!(matches!(
            m3_ctx().is_irreducible_point_set(&PointSet::full(3)),
            Err(Error::NotXTop(_))
        ));
        // chain 0 < 1 < 2 < 3 with X = {0, 1}: I({0,1}) = 0 ∈ X
        let ctx = SpectrumContext::from_labels(chain(4), &["0", "1"]).unwrap();
        assert!(ctx.is_irreducible_point_set(&PointSet::full(2)).unwrap());
    }

    #[test]
    fn correspondence_on_chains() {
        for n in 2..6 {
            let l = chain(n);
            for mask in 1u64..(1 << (n - 1)) {
                let ctx = SpectrumContext::new(l.clone(), &ElemSet::from_mask(n, mask), false).unwrap();
                let r = ctx.check_irreducible_correspondence(15, 0).unwrap();
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
    }
}
