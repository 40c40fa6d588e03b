//! The first-submodule spectrum: varieties `V(N) = {P first : P ⊆ N}`, the
//! topf conditions and the two topologies on `Spec^f(M)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::submodules::SubmoduleLattice;
use crate::bits::{ElemSet, PointSet};
use crate::check::{subset_sample, CheckReport};
use crate::error::{Error, Result};
use crate::galois::SpectrumContext;
use crate::topology::TopSpace;

/// Outcome of the topf test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Topf {
    pub holds: bool,
    /// Submodules `(L1, L2)` whose union of varieties is not a variety.
    pub witness: Option<(usize, usize)>,
}

/// Outcome of the consistency test for a topf module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Consistency {
    pub holds: bool,
    /// An irreducible point set whose sum is not first.
    pub witness: Option<Vec<usize>>,
    /// Subsets examined.
    pub checked: u64,
}

impl SubmoduleLattice {
    /// `Spec^f(M)` as an element set of the dual lattice.
    pub fn first_set(&self) -> Result<ElemSet> {
        Ok(ElemSet::from_indices(self.len(), self.spec_first()?))
    }

    /// The context over the dual lattice with `X = Spec^f(M)`. Points keep
    /// the order of [`SubmoduleLattice::spec_first`].
    pub fn spec_f_context(&self) -> Result<SpectrumContext> {
        let firsts = self.first_set()?;
        if firsts.is_empty() {
            return Err(Error::Firstless);
        }
        SpectrumContext::new(self.dual().clone(), &firsts, true)
    }

    /// `V(N)` over the first submodules, computed from members directly.
    pub fn variety_f(&self, firsts: &[usize], n: usize) -> PointSet {
        PointSet::from_indices(
            firsts.len(),
            firsts
                .iter()
                .enumerate()
                .filter(|(_, &p)| self.members(p).is_subset(self.members(n)))
                .map(|(i, _)| i),
        )
    }

    /// `I(A)`: the sum of the first submodules in `A`.
    pub fn sum_of_points(&self, firsts: &[usize], a: &PointSet) -> usize {
        self.sum_all(a.iter().map(|i| firsts[i]))
    }

    /// `ξ^f(M)` is closed under finite unions. Decided in the dual context
    /// and checked against a direct scan of member sets.
    pub fn topf(&self) -> Result<Topf> {
        let ctx = match self.spec_f_context() {
            Ok(ctx) => ctx,
            Err(Error::Firstless) => {
                return Ok(Topf {
                    holds: true,
                    witness: None,
                })
            }
            Err(e) => return Err(e),
        };
        let via_context = ctx.is_x_top();
        let firsts = self.spec_first()?;
        let family: Vec<PointSet> = (0..self.len()).map(|n| self.variety_f(&firsts, n)).collect();
        let image: HashSet<&PointSet> = family.iter().collect();
        let direct = (0..self.len()).all(|a| {
            (a..self.len()).all(|b| image.contains(&family[a].union(&family[b])))
        });
        if direct != via_context.holds {
            return Err(Error::OracleDisagreement {
                check: "topf: dual context vs member scan",
                detail: format!("context says {}, scan says {direct}", via_context.holds),
            });
        }
        Ok(Topf {
            holds: direct,
            witness: via_context.witness,
        })
    }

    pub fn is_topf_module(&self) -> Result<bool> {
        Ok(self.topf()?.holds)
    }

    /// Every first submodule is strongly hollow, checked against strong
    /// X-topness of the dual context.
    pub fn is_strongly_topf_module(&self) -> Result<bool> {
        let firsts = self.spec_first()?;
        let mut hollow = true;
        for &p in &firsts {
            hollow &= self.is_strongly_hollow(p)?;
        }
        if firsts.is_empty() {
            return Ok(true);
        }
        let ctx = self.spec_f_context()?;
        let strong = ctx.is_strongly_x_top()?.holds;
        if strong != hollow {
            return Err(Error::OracleDisagreement {
                check: "strongly topf vs strongly hollow firsts",
                detail: format!("context says {strong}, hollowness says {hollow}"),
            });
        }
        Ok(hollow)
    }

    /// `V(L1) ∪ V(L2) = V(L1 + L2)` for all pairs, by member scans.
    pub fn sum_reversal_witness(&self) -> Result<Option<(usize, usize)>> {
        let firsts = self.spec_first()?;
        for a in 0..self.len() {
            for b in a..self.len() {
                let lhs = self.variety_f(&firsts, a).union(&self.variety_f(&firsts, b));
                let sum = self.module().sum(self.members(a), self.members(b));
                let rhs = self.variety_f(&firsts, self.index_of(&sum).expect("sum is a submodule"));
                if lhs != rhs {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    /// `(Spec^f(M), ξ^f(M))` for a topf module.
    pub fn xi_f_topology(&self) -> Result<TopSpace> {
        let ctx = self.spec_f_context()?;
        match ctx.build_topology() {
            Err(Error::NotXTop(_)) => Err(Error::NotTopf),
            other => other,
        }
    }

    /// `(Spec^f(M), τ_c^f(M))`, closed sets `V((0 :_M I))` for two-sided
    /// ideals `I` of the scalar ring.
    pub fn torsion_subspace_topology(&self) -> Result<TopSpace> {
        let firsts = self.spec_first()?;
        if firsts.is_empty() {
            return Err(Error::Firstless);
        }
        let closed = self
            .annihilator_submodules()
            .into_iter()
            .map(|n| self.variety_f(&firsts, n));
        Ok(TopSpace::new(self.labels_of(firsts.iter().copied()), closed))
    }

    /// Checks, for all pairs of two-sided ideals `I`, `J`,
    /// `V(0:I) ∪ V(0:J) = V((0:I) + (0:J)) = V(0:(I∩J)) = V(0:IJ)`.
    pub fn check_annihilator_unions(&self) -> Result<CheckReport> {
        let m = self.module();
        let ring = m.scalars();
        let firsts = self.spec_first()?;
        let all = ElemSet::full(m.len());
        let ideals = m.scalar_ideals();
        let v = |s: &ElemSet| self.variety_f(&firsts, self.index_of(s).expect("(0:I) is a submodule"));
        let mut r = CheckReport::new("annihilator unions");
        for (x, i) in ideals.iter().enumerate() {
            let ai = m.annihilated_in(i, &all);
            for j in &ideals[x..] {
                let aj = m.annihilated_in(j, &all);
                let union = v(&ai).union(&v(&aj));
                let sum = v(&m.sum(&ai, &aj));
                let meet = v(&m.annihilated_in(&i.intersection(j), &all));
                let product = v(&m.annihilated_in(&ring.product(i, j), &all));
                r.record(union == sum && sum == meet && meet == product, || {
                    format!(
                        "{}: ideals {} and {}",
                        m.spec(),
                        ring.ideal_label(i, super::ring::IdealKind::TwoSided),
                        ring.ideal_label(j, super::ring::IdealKind::TwoSided)
                    )
                });
            }
        }
        Ok(r)
    }

    /// For a topf module: every irreducible `A ⊆ Spec^f(M)` has a first
    /// sum. Cross-checked against the two equivalent conditions: every
    /// non-zero `H ⊆ I(A)` contains a first submodule, and `I(A)` has a
    /// distributive submodule lattice.
    pub fn is_consistent_topf(&self, cap: usize, seed: u64) -> Result<Consistency> {
        if !self.is_topf_module()? {
            return Err(Error::NotTopf);
        }
        let ctx = self.spec_f_context()?;
        let space = self.xi_f_topology()?;
        let firsts = self.spec_first()?;
        let first_set = ElemSet::from_indices(self.len(), firsts.iter().copied());
        let mut witness = None;
        let mut enough_firsts = true;
        let mut distributive = true;
        let mut checked = 0;
        for a in subset_sample(firsts.len(), cap, seed) {
            if a.is_empty() || space.reducibility_witness(&a).is_some() {
                continue;
            }
            checked += 1;
            let sum = self.sum_of_points(&firsts, &a);
            debug_assert_eq!(sum, ctx.intersect_point_set(&a));
            if witness.is_none() && !first_set.contains(sum) {
                witness = Some(a.to_vec());
            }
            enough_firsts &= self
                .nonzero_below(sum)
                .iter()
                .all(|h| !self.below(h).is_disjoint(&first_set));
            distributive &= self.distributivity_witness_below(sum).is_none();
        }
        let holds = witness.is_none();
        if holds != (enough_firsts && distributive) {
            return Err(Error::OracleDisagreement {
                check: "consistency",
                detail: format!(
                    "direct test says {holds}, firsts below sums {enough_firsts}, distributive sums {distributive}"
                ),
            });
        }
        Ok(Consistency {
            holds,
            witness,
            checked,
        })
    }

    /// For every non-zero `F`: comultiplication `F` is first iff simple;
    /// multiplication `F` is first iff its annihilator is prime.
    pub fn check_first_criteria(&self) -> Result<CheckReport> {
        let mut r = CheckReport::new("first criteria");
        for f in 0..self.len() {
            if f == self.zero() {
                continue;
            }
            let first = self.is_prime_module(f)?;
            if self.comultiplication_witness(f).is_none() {
                let simple = self.lattice().covers(self.zero()).contains(&f);
                r.record(first == simple, || {
                    format!("{} in {}: comultiplication, first {first}, simple {simple}", self.label(f), self.module().spec())
                });
            }
            if self.multiplication_witness(f).is_none() {
                let prime = self.annihilator_is_prime(f);
                r.record(first == prime, || {
                    format!("{} in {}: multiplication, first {first}, prime annihilator {prime}", self.label(f), self.module().spec())
                });
            }
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::module::parse_module_spec;

    fn lat(spec: &str) -> SubmoduleLattice {
        SubmoduleLattice::new(parse_module_spec(spec, 512).unwrap()).unwrap()
    }

    #[test]
    fn context_maps_match_sums() {
        let s = lat("Z: 2,3");
        let ctx = s.spec_f_context().unwrap();
        let firsts = s.spec_first().unwrap();
        assert_eq!(ctx.points(), firsts.as_slice());
        assert_eq!(ctx.variety(s.whole()).len(), 2);
        assert_eq!(ctx.variety(firsts[0]).to_vec(), vec![0]);
        assert!(ctx.variety(s.zero()).is_empty());
        assert_eq!(ctx.intersect_point_set(&PointSet::full(2)), s.whole());
        for n in 0..s.len() {
            assert_eq!(ctx.variety(n), &s.variety_f(&firsts, n));
        }
    }

    #[test]
    fn topf_examples() {
        let d = lat("Z: 2,3,5");
        assert!(d.is_topf_module().unwrap());
        assert!(d.xi_f_topology().unwrap().is_discrete());
        let h = lat("Z: 2,2");
        let t = h.topf().unwrap();
        assert!(!t.holds && t.witness.is_some());
        assert!(matches!(h.xi_f_topology(), Err(Error::NotTopf)));
        let c = lat("Z: 4");
        assert!(c.is_strongly_topf_module().unwrap());
        assert!(c.sum_reversal_witness().unwrap().is_none());
        assert!(h.sum_reversal_witness().unwrap().is_some());
    }

    #[test]
    fn torsion_topologies() {
        let h = lat("Z: 2,2");
        let t = h.torsion_subspace_topology().unwrap();
        assert!(t.is_topology());
        assert_eq!(t.len(), 4);
        assert_eq!(t.closed_sets().len(), 2);
        let d = lat("Z: 2,3,5");
        assert!(d.torsion_subspace_topology().unwrap().is_discrete());
        assert_eq!(lat("Z: 4").torsion_subspace_topology().unwrap().len(), 1);
        for spec in ["Z: 2,2", "Z: 8,3", "ring M2F2: regular", "ring Zmod:12: regular"] {
            assert!(lat(spec).check_annihilator_unions().unwrap().passed(), "{spec}");
        }
    }

    #[test]
    fn consistency() {
        assert!(lat("Z: 2,3,5").is_consistent_topf(15, 0).unwrap().holds);
        assert!(lat("Z: 4").is_consistent_topf(15, 0).unwrap().holds);
        assert!(matches!(lat("Z: 2,2").is_consistent_topf(15, 0), Err(Error::NotTopf)));
    }

    #[test]
    fn first_criteria() {
        for spec in ["Z: 4", "Z: 2,2", "Z: 8,3", "ring M2F2: regular", "ring Zmod:12: regular"] {
            let r = lat(spec).check_first_criteria().unwrap();
            assert!(r.passed(), "{spec}: {:?}", r.failures);
        }
    }
}
