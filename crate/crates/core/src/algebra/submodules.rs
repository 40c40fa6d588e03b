//! The lattice of submodules and the predicates defined on it.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::module::{is_prime, FiniteModule};
use super::ring::{inclusion_lattice, IdealKind};
use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::{distributivity_witness, FinLattice};

/// Default cap on the number of submodules.
pub const DEFAULT_MAX_SUBMODULES: usize = 4096;

/// Annihilator of a submodule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnIdeal {
    /// Scalars `r` with `rN = 0`.
    pub scalars: Vec<usize>,
    /// Positive generator `g` of `gℤ` for integer coefficients.
    pub generator: Option<u64>,
}

/// All submodules of a finite module, ordered by size then members, with
/// the inclusion lattice on their indices.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    module: FiniteModule,
    subs: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    lattice: FinLattice,
    dual: FinLattice,
    /// `cyclic[m]` is the index of `Rm`.
    cyclic: Vec<usize>,
    annihilators: Vec<ElemSet>,
}

impl SubmoduleLattice {
    pub fn new(module: FiniteModule) -> Result<Self> {
        Self::with_cap(module, DEFAULT_MAX_SUBMODULES)
    }

    /// Breadth-first search over `N + Rm`, starting from `0`.
    pub fn with_cap(module: FiniteModule, cap: usize) -> Result<Self> {
        let n = module.len();
        let cyclic_sets: Vec<ElemSet> = (0..n).map(|m| module.cyclic(m)).collect();
        let mut extenders: Vec<&ElemSet> = cyclic_sets.iter().collect();
        extenders.sort();
        extenders.dedup();
        let zero = ElemSet::singleton(n, module.zero());
        let mut seen: HashSet<ElemSet> = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(sub) = queue.pop_front() {
            for &c in &extenders {
                if c.is_subset(&sub) {
                    continue;
                }
                let bigger = module.sum(&sub, c);
                if seen.insert(bigger.clone()) {
                    if seen.len() > cap {
                        return Err(Error::TooLarge {
                            what: "submodule lattice",
                            size: seen.len(),
                            cap,
                        });
                    }
                    queue.push_back(bigger);
                }
            }
        }
        let mut subs: Vec<ElemSet> = seen.into_iter().collect();
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: HashMap<ElemSet, usize> =
            subs.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let cyclic = cyclic_sets.iter().map(|c| index[c]).collect();
        let placeholder = vec![String::new(); subs.len()];
        let mut lattice = inclusion_lattice(&subs, placeholder);
        let annihilators = subs.iter().map(|s| module.annihilator_scalars(s)).collect();
        let mut out = Self {
            module,
            subs,
            index,
            dual: lattice.clone(),
            lattice: lattice.clone(),
            cyclic,
            annihilators,
        };
        let labels: Vec<String> = (0..out.subs.len()).map(|i| out.make_label(i)).collect();
        lattice = FinLattice::from_parts_unchecked(
            labels,
            (0..out.subs.len()).map(|i| out.lattice.upset(i).clone()).collect(),
            flat(&out.lattice, |a, b| out.lattice.meet(a, b)),
            flat(&out.lattice, |a, b| out.lattice.join(a, b)),
            out.lattice.bottom(),
            out.lattice.top(),
        );
        out.dual = lattice.dual();
        out.lattice = lattice;
        Ok(out)
    }

    /// `0`, `M`, or `<g1,g2,...>` with greedily chosen generators.
    fn make_label(&self, i: usize) -> String {
        if i == self.zero() {
            return "0".into();
        }
        if i == self.whole() {
            return "M".into();
        }
        let mut current = self.zero();
        let mut gens = Vec::new();
        for m in self.subs[i].iter() {
            if !self.subs[current].contains(m) {
                gens.push(self.module.label(m).to_string());
                current = self.lattice.join(current, self.cyclic[m]);
            }
        }
        format!("<{}>", gens.join(","))
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    /// Submodule lattice with `∩` and `+`.
    pub fn lattice(&self) -> &FinLattice {
        &self.lattice
    }

    /// The dual lattice `(Sub(M), +, ∩)`.
    pub fn dual(&self) -> &FinLattice {
        &self.dual
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn members(&self, i: usize) -> &ElemSet {
        &self.subs[i]
    }

    pub fn submodules(&self) -> &[ElemSet] {
        &self.subs
    }

    pub fn index_of(&self, s: &ElemSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn label(&self, i: usize) -> &str {
        self.lattice.label(i)
    }

    pub fn labels_of<I: IntoIterator<Item = usize>>(&self, it: I) -> Vec<String> {
        it.into_iter().map(|i| self.label(i).to_string()).collect()
    }

    pub fn zero(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn whole(&self) -> usize {
        self.lattice.top()
    }

    pub fn cyclic_of(&self, m: usize) -> usize {
        self.cyclic[m]
    }

    /// Submodules contained in `i`.
    pub fn below(&self, i: usize) -> &ElemSet {
        self.lattice.downset(i)
    }

    pub fn nonzero_below(&self, i: usize) -> ElemSet {
        let mut s = self.below(i).clone();
        s.remove(self.zero());
        s
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    pub fn intersect(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    pub fn sum_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.zero(), |acc, x| self.sum(acc, x))
    }

    fn nonzero(&self, i: usize) -> Result<()> {
        if i == self.zero() {
            Err(Error::ZeroSubmodule)
        } else {
            Ok(())
        }
    }

    /// Annihilator scalars of submodule `i`.
    pub fn annihilator_set(&self, i: usize) -> &ElemSet {
        &self.annihilators[i]
    }

    /// Annihilator with its integer generator where applicable. For integer
    /// coefficients the generator is the least positive annihilating residue
    /// (`e` counts as `e`), and it equals the lcm of element orders.
    pub fn annihilator(&self, i: usize) -> AnnIdeal {
        let scalars = &self.annihilators[i];
        let generator = self.module.z_coefficients().map(|z| {
            scalars
                .iter()
                .find(|&r| r > 0)
                .map_or(z.exponent, |r| r as u64)
        });
        AnnIdeal {
            scalars: scalars.to_vec(),
            generator,
        }
    }

    /// Exponent of submodule `i` from element orders (integer case).
    pub fn exponent_by_orders(&self, i: usize) -> Option<u64> {
        self.module.z_coefficients()?;
        Some(
            self.subs[i]
                .iter()
                .fold(1u64, |acc, m| super::module::lcm(acc, self.module.order_of(m))),
        )
    }

    /// Whether the annihilator of `i` is a prime ideal: a prime generator
    /// for integer coefficients, the two-sided criterion otherwise.
    pub fn annihilator_is_prime(&self, i: usize) -> bool {
        match self.annihilator(i).generator {
            Some(g) => is_prime(g),
            None => {
                let ring = self.module.scalars();
                ring.is_prime_ideal(&self.annihilators[i], &ring.ideals(IdealKind::TwoSided))
            }
        }
    }

    /// Whether the annihilator of `i` is a maximal two-sided ideal.
    pub fn annihilator_is_maximal(&self, i: usize) -> bool {
        match self.annihilator(i).generator {
            Some(g) => is_prime(g),
            None => {
                let ring = self.module.scalars();
                ring.is_maximal_ideal(&self.annihilators[i], &ring.ideals(IdealKind::TwoSided))
            }
        }
    }

    /// Oracle A: all non-zero submodules of `i` share its annihilator.
    pub fn prime_by_annihilators(&self, i: usize) -> Option<usize> {
        self.nonzero_below(i)
            .iter()
            .find(|&h| self.annihilators[h] != self.annihilators[i])
    }

    /// Oracle B: `rRf = 0` forces `f = 0` or `rN = 0`. Returns `(r, f)` on
    /// failure.
    pub fn prime_by_elements(&self, i: usize) -> Option<(usize, usize)> {
        let m = &self.module;
        let ring = m.scalars();
        let n = &self.subs[i];
        for r in 0..ring.len() {
            if self.annihilators[i].contains(r) {
                continue;
            }
            for f in n.iter() {
                if f == m.zero() {
                    continue;
                }
                let kills = if ring.is_commutative() {
                    m.act(r, f) == m.zero()
                } else {
                    (0..ring.len()).all(|s| m.act(ring.mul(r, s), f) == m.zero())
                };
                if kills {
                    return Some((r, f));
                }
            }
        }
        None
    }

    /// Whether submodule `i` is a prime module, by both oracles.
    pub fn is_prime_module(&self, i: usize) -> Result<bool> {
        self.nonzero(i)?;
        let a = self.prime_by_annihilators(i).is_none();
        let b = self.prime_by_elements(i).is_none();
        if a != b {
            return Err(Error::OracleDisagreement {
                check: "prime module",
                detail: format!(
                    "{}: annihilator test says {a}, element test says {b}",
                    self.label(i)
                ),
            });
        }
        Ok(a)
    }

    /// First submodules, in lattice order.
    pub fn spec_first(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if i != self.zero() && self.is_prime_module(i)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    pub fn simple_submodules(&self) -> Vec<usize> {
        self.lattice.atoms()
    }

    pub fn socle(&self) -> usize {
        self.sum_all(self.simple_submodules())
    }

    /// Simples inside submodule `i`.
    pub fn simples_below(&self, i: usize) -> Vec<usize> {
        self.simple_submodules()
            .into_iter()
            .filter(|&s| self.leq(s, i))
            .collect()
    }

    /// Sum of all first submodules.
    pub fn coradical_f(&self) -> Result<usize> {
        Ok(self.sum_all(self.spec_first()?))
    }

    /// `N ⊆ A + B` forces `N ⊆ A` or `N ⊆ B`, over all submodules.
    pub fn is_strongly_hollow(&self, i: usize) -> Result<bool> {
        Ok(self.strongly_hollow_witness(i)?.is_none())
    }

    pub fn strongly_hollow_witness(&self, i: usize) -> Result<Option<(usize, usize)>> {
        self.nonzero(i)?;
        Ok(self.dual.irreducible_witness(&self.dual.all(), i, true))
    }

    /// Irreducibility in the dual lattice: `N = A + B` with `A, B ⊆ N`
    /// forces `N = A` or `N = B`.
    pub fn is_hollow(&self, i: usize) -> Result<bool> {
        self.nonzero(i)?;
        Ok(self.dual.irreducible_witness(&self.dual.all(), i, false).is_none())
    }

    /// Submodules of `i` form a chain.
    pub fn is_uniserial(&self, i: usize) -> bool {
        self.lattice.is_chain(self.below(i))
    }

    /// Two non-zero submodules of `i` meeting in `0`.
    pub fn uniform_witness(&self, i: usize) -> Option<(usize, usize)> {
        let nz = self.nonzero_below(i).to_vec();
        for (k, &a) in nz.iter().enumerate() {
            for &b in &nz[k + 1..] {
                if self.intersect(a, b) == self.zero() {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_uniform(&self) -> bool {
        self.uniform_witness(self.whole()).is_none()
    }

    /// A non-zero submodule missing the socle.
    pub fn essential_socle_witness(&self) -> Option<usize> {
        let soc = self.socle();
        (0..self.len()).find(|&n| n != self.zero() && self.intersect(n, soc) == self.zero())
    }

    pub fn has_essential_socle(&self) -> bool {
        self.essential_socle_witness().is_none()
    }

    /// The intersection of all non-zero submodules is non-zero.
    pub fn is_colocal(&self) -> bool {
        let nz = self.nonzero_below(self.whole());
        !nz.is_empty() && self.lattice.meet_all(&nz) != self.zero()
    }

    /// A simple submodule contained in the sum of the other simples.
    pub fn min_property_witness(&self) -> Option<usize> {
        let simples = self.simple_submodules();
        simples.iter().copied().find(|&h| {
            let rest = self.sum_all(simples.iter().copied().filter(|&k| k != h));
            self.leq(h, rest)
        })
    }

    /// No simple submodule lies in the sum of the others, checked against
    /// distributivity of the submodule lattice of the socle.
    pub fn has_min_property(&self) -> Result<bool> {
        let direct = self.min_property_witness().is_none();
        let distributive = self.socle_distributivity_witness().is_none();
        if direct != distributive {
            return Err(Error::OracleDisagreement {
                check: "min-property vs distributive socle",
                detail: format!("direct test says {direct}, distributivity says {distributive}"),
            });
        }
        Ok(direct)
    }

    /// A triple in `[0, Soc]` violating distributivity.
    pub fn socle_distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        self.distributivity_witness_below(self.socle())
    }

    pub fn distributivity_witness_below(&self, i: usize) -> Option<(usize, usize, usize)> {
        let l = &self.lattice;
        distributivity_witness(l, self.below(i), |a, b| l.meet(a, b), |a, b| l.join(a, b))
            .expect("a down-set is a sublattice")
    }

    /// A submodule `H ≤ N` with `H ≠ (H :_R N)N`.
    pub fn multiplication_witness(&self, n: usize) -> Option<usize> {
        let m = &self.module;
        let ns = &self.subs[n];
        self.below(n)
            .iter()
            .find(|&h| m.ideal_times(&m.colon(&self.subs[h], ns), ns) != self.subs[h])
    }

    /// A submodule `L ≤ N` with `L ≠ (0 :_N (0 :_R L))`.
    pub fn comultiplication_witness(&self, n: usize) -> Option<usize> {
        let m = &self.module;
        let ns = &self.subs[n];
        self.below(n)
            .iter()
            .find(|&l| m.annihilated_in(&self.annihilators[l], ns) != self.subs[l])
    }

    pub fn is_multiplication(&self) -> bool {
        self.multiplication_witness(self.whole()).is_none()
    }

    pub fn is_comultiplication(&self) -> bool {
        self.comultiplication_witness(self.whole()).is_none()
    }

    /// Isomorphism of two simple submodules: by order for integer
    /// coefficients, otherwise by searching for `rs ↦ rt`.
    pub fn simples_isomorphic(&self, a: usize, b: usize) -> bool {
        if self.module.z_coefficients().is_some() {
            return self.subs[a].len() == self.subs[b].len();
        }
        self.isomorphic_by_search(a, b)
    }

    /// Searches for an isomorphism `Rs → Rt` sending a fixed generator `s`
    /// of simple submodule `a` to each non-zero `t` in `b`.
    pub fn isomorphic_by_search(&self, a: usize, b: usize) -> bool {
        let m = &self.module;
        if self.subs[a].len() != self.subs[b].len() {
            return false;
        }
        let Some(s) = self.subs[a].iter().find(|&x| x != m.zero()) else {
            return false;
        };
        let ring = m.scalars();
        self.subs[b].iter().filter(|&t| t != m.zero()).any(|t| {
            let mut map: HashMap<usize, usize> = HashMap::new();
            for r in 0..ring.len() {
                let (x, y) = (m.act(r, s), m.act(r, t));
                if *map.entry(x).or_insert(y) != y {
                    return false;
                }
            }
            let image: HashSet<usize> = map.values().copied().collect();
            map.len() == self.subs[a].len() && image.len() == map.len()
        })
    }

    /// Maximal elements of `{P first : P ⊆ H}`.
    pub fn maximal_under(&self, h: usize) -> Result<Vec<usize>> {
        self.nonzero(h)?;
        let under: Vec<usize> = self
            .spec_first()?
            .into_iter()
            .filter(|&p| self.leq(p, h))
            .collect();
        Ok(under
            .iter()
            .copied()
            .filter(|&p| !under.iter().any(|&q| q != p && self.leq(p, q)))
            .collect())
    }

    /// `(0 :_M I)` for each two-sided ideal `I` of the scalar ring, as
    /// submodule indices (deduplicated, sorted).
    pub fn annihilator_submodules(&self) -> Vec<usize> {
        let m = &self.module;
        let all = ElemSet::full(m.len());
        let mut out: Vec<usize> = m
            .scalar_ideals()
            .iter()
            .map(|i| self.index[&m.annihilated_in(i, &all)])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn flat(l: &FinLattice, f: impl Fn(usize, usize) -> usize) -> Vec<u32> {
    let n = l.len();
    let mut out = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            out[a * n + b] = f(a, b) as u32;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::module::parse_module_spec;

    fn lat(spec: &str) -> SubmoduleLattice {
        SubmoduleLattice::new(parse_module_spec(spec, 512).unwrap()).unwrap()
    }

    fn by_label(s: &SubmoduleLattice, label: &str) -> usize {
        s.lattice().index_of(label).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(lat("Z: 2,2").len(), 5);
        let c = lat("Z: 4");
        assert_eq!(c.lattice().labels(), &["0", "<2>", "M"]);
        assert_eq!(lat("Z: 2,3").len(), 4);
        assert_eq!(lat("Z: 2,2,2").len(), 16);
        assert_eq!(lat("Z: 12").len(), 6);
        assert_eq!(lat("ring M2F2: regular").len(), 5);
        assert_eq!(lat("ring M2F2: column").len(), 2);
    }

    #[test]
    fn joins_are_sums_and_lattice_is_sound() {
        for spec in ["Z: 2,4", "Z: 2,2,2", "ring M2F2: regular", "Z: 3,9"] {
            let s = lat(spec);
            assert!(s.lattice().check_axioms().is_empty(), "{spec}");
            for a in 0..s.len() {
                assert!(s.module().is_submodule(s.members(a)));
                for b in 0..s.len() {
                    let sum = s.module().sum(s.members(a), s.members(b));
                    assert_eq!(s.members(s.sum(a, b)), &sum, "{spec}");
                }
            }
        }
    }

    #[test]
    fn annihilator_generators() {
        let s = lat("Z: 8,3");
        let eight = s
            .submodules()
            .iter()
            .position(|n| n.len() == 8)
            .expect("unique subgroup of order 8");
        assert_eq!(s.annihilator(eight).generator, Some(8));
        assert_eq!(s.exponent_by_orders(eight), Some(8));
        assert_eq!(s.annihilator(s.zero()).generator, Some(1));
        assert_eq!(s.annihilator(s.whole()).generator, Some(24));
        let t = lat("Z: 2,3");
        assert_eq!(t.annihilator(t.whole()).generator, Some(6));
        for i in 0..s.len() {
            assert_eq!(s.annihilator(i).generator, s.exponent_by_orders(i));
        }
    }

    #[test]
    fn prime_modules() {
        let s = lat("Z: 2,2");
        assert!(s.is_prime_module(s.whole()).unwrap());
        let c = lat("Z: 4");
        assert!(!c.is_prime_module(c.whole()).unwrap());
        assert!(matches!(c.is_prime_module(c.zero()), Err(Error::ZeroSubmodule)));
        for spec in ["Z: 2,3,5", "Z: 8,3", "ring M2F2: regular"] {
            let l = lat(spec);
            for h in l.simple_submodules() {
                assert!(l.is_prime_module(h).unwrap());
            }
        }
    }

    #[test]
    fn spectra() {
        let s = lat("Z: 2,3,5");
        let firsts = s.spec_first().unwrap();
        assert_eq!(firsts, s.simple_submodules());
        assert_eq!(firsts.len(), 3);
        assert_eq!(s.coradical_f().unwrap(), s.whole());
        let c = lat("Z: 4");
        assert_eq!(c.spec_first().unwrap(), vec![by_label(&c, "<2>")]);
        assert_eq!(c.socle(), by_label(&c, "<2>"));
        assert_eq!(c.coradical_f().unwrap(), by_label(&c, "<2>"));
        let h = lat("Z: 2,2");
        assert_eq!(h.spec_first().unwrap().len(), 4);
        assert_eq!(h.simple_submodules().len(), 3);
        assert_eq!(h.socle(), h.whole());
        assert_eq!(lat("Z: 2,3").socle(), lat("Z: 2,3").whole());
    }

    #[test]
    fn mixed_8_3_firsts() {
        // only the two simples are first; larger submodules mix annihilators
        let s = lat("Z: 8,3");
        let firsts = s.spec_first().unwrap();
        let sizes: Vec<usize> = firsts.iter().map(|&f| s.members(f).len()).collect();
        assert_eq!(sizes, vec![2, 3]);
        assert!(!s.annihilator_is_prime(s.whole()));
    }

    #[test]
    fn hollowness() {
        let c = lat("Z: 4");
        assert!(c.is_strongly_hollow(by_label(&c, "<2>")).unwrap());
        let h = lat("Z: 2,2");
        let diagonal = by_label(&h, "<(1,1)>");
        assert!(!h.is_strongly_hollow(diagonal).unwrap());
        assert!(h.is_hollow(diagonal).unwrap());
        assert!(!h.is_hollow(h.whole()).unwrap());
        let simple = lat("Z: 5");
        assert!(simple.is_strongly_hollow(simple.whole()).unwrap());
        assert!(matches!(simple.is_hollow(simple.zero()), Err(Error::ZeroSubmodule)));
    }

    #[test]
    fn shape_predicates() {
        let c = lat("Z: 4");
        assert!(c.is_uniserial(c.whole()) && c.is_uniform() && c.has_essential_socle() && c.is_colocal());
        let s = lat("Z: 2,3");
        assert!(!s.is_uniform() && s.has_essential_socle() && !s.is_colocal());
        assert!(!lat("Z: 2,2").is_uniform());
    }

    #[test]
    fn min_property() {
        assert!(lat("Z: 2,3,5").has_min_property().unwrap());
        assert!(!lat("Z: 2,2").has_min_property().unwrap());
        assert!(lat("Z: 7").has_min_property().unwrap());
        assert!(!lat("ring M2F2: regular").has_min_property().unwrap());
    }

    #[test]
    fn multiplication_modules() {
        let c = lat("Z: 4");
        assert!(c.is_multiplication() && c.is_comultiplication());
        let h = lat("Z: 2,2");
        assert!(!h.is_multiplication());
        let s = lat("Z: 2,3");
        assert!(s.is_multiplication() && s.is_comultiplication());
    }

    #[test]
    fn maximal_under() {
        let c = lat("Z: 4");
        assert_eq!(c.maximal_under(c.whole()).unwrap(), vec![by_label(&c, "<2>")]);
        let s = lat("Z: 2,3");
        assert_eq!(s.maximal_under(s.whole()).unwrap(), s.simple_submodules());
        for h in s.simple_submodules() {
            assert_eq!(s.maximal_under(h).unwrap(), vec![h]);
        }
    }

    #[test]
    fn simple_isomorphism() {
        let h = lat("Z: 2,2");
        let simples = h.simple_submodules();
        assert!(h.simples_isomorphic(simples[0], simples[1]));
        assert!(h.isomorphic_by_search(simples[0], simples[1]));
        let d = lat("Z: 2,3");
        let simples = d.simple_submodules();
        assert!(!d.simples_isomorphic(simples[0], simples[1]));
        let r = lat("ring M2F2: regular");
        let simples = r.simple_submodules();
        assert_eq!(simples.len(), 3);
        assert!(r.simples_isomorphic(simples[0], simples[2]));
    }

    #[test]
    fn annihilator_submodules_of_z22() {
        let h = lat("Z: 2,2");
        assert_eq!(h.annihilator_submodules(), vec![h.zero(), h.whole()]);
    }

    #[test]
    fn submodule_cap() {
        let m = parse_module_spec("Z: 2,2,2", 512).unwrap();
        assert!(matches!(
            SubmoduleLattice::with_cap(m, 10),
            Err(Error::TooLarge { .. })
        ));
    }
}
