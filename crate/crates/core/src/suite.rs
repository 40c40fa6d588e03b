//! The theorem battery: every equivalence and implication is evaluated on
//! the built-in corpus, and any counterexample is reported with a witness.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_module_spec, FiniteRing, SubmoduleLattice, DEFAULT_MAX_ORDER};
use crate::bits::{ElemSet, PointSet};
use crate::check::{subset_sample, CheckReport, DEFAULT_SUBSET_CAP};
use crate::corpus::{self, EntryKind};
use crate::error::{Error, Result};
use crate::galois::SpectrumContext;
use crate::lattice::{named, FinLattice};
use crate::report::{self, AnalysisReport};
use crate::topology::TopSpace;

/// Group names in report order.
pub const GROUPS: [&str; 29] = [
    "lattice_axioms",
    "xtop_criteria",
    "strongly_xtop_antihomomorphism",
    "galois_laws",
    "irreducible_subsets",
    "xtop_topology",
    "ring_spectra",
    "named_examples",
    "report_witnesses",
    "tau_c_and_strong_topf",
    "first_submodules",
    "first_criteria",
    "topf_criteria",
    "socle_distributivity",
    "spectrum_closure",
    "irreducible_annihilators",
    "irreducible_sums",
    "consistency",
    "consistent_irreducibles",
    "irreducible_closed_sets",
    "sobriety",
    "separation",
    "compact",
    "simple_spectrum",
    "comultiplication_spectrum",
    "uniform",
    "closed_points",
    "chain_conditions",
    "oracle_agreement",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cap: usize,
    /// Number of random lattices.
    pub random: usize,
    /// Largest exhaustively enumerated lattice.
    pub max_lattice: usize,
    /// Largest random lattice.
    pub max_random_lattice: usize,
    /// Adds a lattice with a corrupted meet table as a negative control.
    pub inject_fault: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            cap: DEFAULT_SUBSET_CAP,
            random: 200,
            max_lattice: 6,
            max_random_lattice: 8,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCounts {
    pub small_lattices: usize,
    pub lattice_contexts: usize,
    pub random_contexts: usize,
    pub ring_contexts: usize,
    pub module_contexts: usize,
    pub modules: usize,
    pub named_entries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub corpus: CorpusCounts,
    pub groups: Vec<CheckReport>,
    pub failed_groups: Vec<String>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn group(&self, name: &str) -> Option<&CheckReport> {
        self.groups.iter().find(|g| g.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for g in &self.groups {
            out.push_str(&format!(
                "{:<32} {:>8} checked {:>4} failed\n",
                g.name, g.checked, g.failed
            ));
            for f in &g.failures {
                out.push_str(&format!("    {f}\n"));
            }
        }
        out.push_str(if self.passed { "suite passed\n" } else { "suite FAILED\n" });
        out
    }
}

struct Groups {
    reports: BTreeMap<&'static str, CheckReport>,
}

impl Groups {
    fn new() -> Self {
        Self {
            reports: GROUPS.iter().map(|&g| (g, CheckReport::new(g))).collect(),
        }
    }

    fn rec(&mut self, group: &'static str, ok: bool, witness: impl FnOnce() -> String) {
        self.reports
            .get_mut(group)
            .expect("known group")
            .record(ok, witness);
    }

    fn merge(&mut self, group: &'static str, mut r: CheckReport) {
        r.name = group.into();
        self.reports.get_mut(group).expect("known group").merge(r);
    }

    /// Unwraps a result; oracle disagreements count against
    /// `oracle_agreement`, other errors against `group`.
    fn take<T>(&mut self, group: &'static str, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => {
                self.rec("oracle_agreement", true, String::new);
                Some(v)
            }
            Err(e @ Error::OracleDisagreement { .. }) => {
                self.rec("oracle_agreement", false, || format!("{what}: {e}"));
                None
            }
            Err(e) => {
                self.rec(group, false, || format!("{what}: {e}"));
                None
            }
        }
    }

    fn finish(self) -> Vec<CheckReport> {
        GROUPS
            .iter()
            .map(|g| self.reports[g].clone())
            .collect()
    }
}

/// Runs the whole battery.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let mut g = Groups::new();
    let mut counts = CorpusCounts::default();
    let (cap, seed) = (config.cap, config.seed);

    let mut contexts: Vec<(String, SpectrumContext)> = Vec::new();
    let small = corpus::small_lattices(config.max_lattice);
    counts.small_lattices = small.len();
    for (i, l) in small.iter().enumerate() {
        for x in corpus::all_point_sets(l) {
            let name = format!("lattice {} #{i} X={:?}", l.len(), names(l, &x));
            if let Some(ctx) = g.take("xtop_criteria", &name, SpectrumContext::new(l.clone(), &x, false)) {
                contexts.push((name, ctx));
            }
        }
    }
    counts.lattice_contexts = contexts.len();
    let mut lattices: Vec<(String, FinLattice)> = small
        .iter()
        .enumerate()
        .map(|(i, l)| (format!("lattice {} #{i}", l.len()), l.clone()))
        .collect();
    for (i, (l, x)) in corpus::random_lattices(config.random, config.max_random_lattice, seed)
        .into_iter()
        .enumerate()
    {
        let name = format!("random #{i} ({} elements) X={:?}", l.len(), names(&l, &x));
        lattices.push((format!("random #{i}"), l.clone()));
        if let Some(ctx) = g.take("xtop_criteria", &name, SpectrumContext::new(l, &x, false)) {
            contexts.push((name, ctx));
            counts.random_contexts += 1;
        }
    }

    for spec in corpus::battery_rings() {
        let Some(ring) = g.take("ring_spectra", spec, FiniteRing::parse(spec)) else {
            continue;
        };
        check_ring(&mut g, spec, &ring);
        if let Some(ctx) = g.take("ring_spectra", spec, report::zariski_context(&ring)) {
            lattices.push((format!("ideals of {spec}"), ctx.lattice().clone()));
            contexts.push((format!("Zariski {spec}"), ctx));
            counts.ring_contexts += 1;
        }
        if let Some(ctx) = g.take("ring_spectra", spec, report::left_ideal_context(&ring)) {
            lattices.push((format!("left ideals of {spec}"), ctx.lattice().clone()));
            contexts.push((format!("left ideals {spec}"), ctx));
            counts.ring_contexts += 1;
        }
    }

    let mut modules = Vec::new();
    for spec in corpus::battery_modules() {
        let sl = parse_module_spec(spec, DEFAULT_MAX_ORDER).and_then(SubmoduleLattice::new);
        if let Some(sl) = g.take("first_submodules", spec, sl) {
            lattices.push((format!("submodules of {spec}"), sl.lattice().clone()));
            if let Ok(ctx) = sl.spec_f_context() {
                contexts.push((format!("Spec^f {spec}"), ctx));
                counts.module_contexts += 1;
            }
            modules.push(sl);
        }
    }
    counts.modules = modules.len();

    if config.inject_fault {
        let corrupt = named::diamond().with_corrupted_meet(1, 2, 1);
        lattices.push(("corrupted diamond (meet(a,b) := a)".into(), corrupt));
    }
    for (name, l) in &lattices {
        let v = l.check_axioms();
        g.rec("lattice_axioms", v.is_empty(), || {
            let first = &v[0];
            format!("{name}: {} fails at {:?} ({} violations)", first.law, first.elements, v.len())
        });
    }

    for (name, ctx) in &contexts {
        check_context(&mut g, name, ctx, cap, seed);
    }
    for sl in &modules {
        check_module(&mut g, sl, cap, seed);
    }
    counts.named_entries = check_named(&mut g, cap, seed);

    let groups = g.finish();
    let failed_groups: Vec<String> = groups
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.name.clone())
        .collect();
    SuiteReport {
        config: config.clone(),
        corpus: counts,
        passed: failed_groups.is_empty(),
        failed_groups,
        groups,
    }
}

fn names(l: &FinLattice, x: &ElemSet) -> Vec<String> {
    x.iter().map(|a| l.label(a).to_string()).collect()
}

fn check_context(g: &mut Groups, name: &str, ctx: &SpectrumContext, cap: usize, seed: u64) {
    let l = ctx.lattice();
    let x = ctx.is_x_top();
    let (c, d) = (ctx.is_x_top_via_c(), ctx.is_x_top_via_d());
    g.rec("xtop_criteria", x.holds == c && c == d, || {
        format!("{name}: direct {}, via C(L) {c}, via distributivity {d}", x.holds)
    });

    // V is an anti-homomorphism iff every point is strongly irreducible
    let mut meet_rev = true;
    let mut join_rev = true;
    for a in 0..l.len() {
        for b in 0..l.len() {
            meet_rev &= *ctx.variety(l.meet(a, b)) == ctx.variety(a).union(ctx.variety(b));
            join_rev &= *ctx.variety(l.join(a, b)) == ctx.variety(a).intersection(ctx.variety(b));
        }
    }
    if let Some(s) = g.take("strongly_xtop_antihomomorphism", name, ctx.is_strongly_x_top()) {
        g.rec("strongly_xtop_antihomomorphism", s.holds == (meet_rev && join_rev), || {
            format!("{name}: strongly {} but meet reversal {meet_rev}, join reversal {join_rev}", s.holds)
        });
        g.rec("strongly_xtop_antihomomorphism", join_rev && s.join_reversal, || {
            format!("{name}: V(a ∨ b) ≠ V(a) ∩ V(b)")
        });
        g.rec("strongly_xtop_antihomomorphism", !s.holds || x.holds, || {
            format!("{name}: strongly X-top but not X-top")
        });
    }

    g.merge("galois_laws", ctx.check_galois_laws(cap, seed));
    if !x.holds {
        return;
    }
    if let Some(r) = g.take("irreducible_subsets", name, ctx.check_irreducible_correspondence(cap, seed)) {
        g.merge("irreducible_subsets", r);
    }
    let Some(space) = g.take("xtop_topology", name, ctx.build_topology()) else {
        return;
    };
    g.rec("xtop_topology", space.is_topology() && space.is_t0(), || {
        format!("{name}: X-top space is not a T0 topology")
    });
    for a in subset_sample(ctx.point_count(), cap, seed) {
        let expect = ctx.variety(ctx.intersect_point_set(&a));
        g.rec("xtop_topology", space.closure(&a) == *expect, || {
            format!("{name}: closure of {:?} is not V(I(A))", ctx.point_names(&a))
        });
    }
    let closed = ctx.closed_elements();
    let longest = longest_chain(&closed.to_vec(), |a, b| l.leq(a, b));
    let noetherian = space.is_noetherian();
    g.rec("chain_conditions", noetherian.holds && noetherian.max_chain_length == longest, || {
        format!(
            "{name}: closed-set chains of length {} but closed-element chains of length {longest}",
            noetherian.max_chain_length
        )
    });
}

/// Number of elements in the longest chain of `items` under `leq`.
fn longest_chain(items: &[usize], leq: impl Fn(usize, usize) -> bool) -> usize {
    // items are not assumed sorted; relax until stable (finite poset)
    let mut best = vec![1usize; items.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..items.len() {
            for j in 0..items.len() {
                if i != j && items[i] != items[j] && leq(items[j], items[i]) && best[j] + 1 > best[i] {
                    best[i] = best[j] + 1;
                    changed = true;
                }
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn check_ring(g: &mut Groups, spec: &str, ring: &FiniteRing) {
    let il = ring.ideal_lattice(crate::algebra::IdealKind::TwoSided);
    let primes = il.prime_spectrum(ring);
    for (i, ideal) in il.ideals.iter().enumerate() {
        let maximal = ring.is_maximal_ideal(ideal, &il.ideals);
        g.rec("ring_spectra", primes.contains(i) == maximal, || {
            format!("{spec}: ideal {} prime {} but maximal {maximal}", il.lattice.label(i), primes.contains(i))
        });
    }
    if ring.is_commutative() {
        if let Some(ctx) = g.take("ring_spectra", spec, report::zariski_context(ring)) {
            if let Some(s) = g.take("ring_spectra", spec, ctx.is_strongly_x_top()) {
                g.rec("ring_spectra", s.holds, || format!("{spec}: commutative but not strongly X-top"));
            }
        }
    }
}

fn check_named(g: &mut Groups, cap: usize, seed: u64) -> usize {
    let entries = corpus::named_entries();
    for e in &entries {
        let report: Result<AnalysisReport> = match e.kind {
            EntryKind::Module => parse_module_spec(&e.spec, DEFAULT_MAX_ORDER)
                .and_then(SubmoduleLattice::new)
                .and_then(|sl| report::module_report(&sl, cap, seed)),
            EntryKind::Ring => FiniteRing::parse(&e.spec).and_then(|r| report::ring_report(&r, cap, seed)),
            EntryKind::LeftIdeals => FiniteRing::parse(&e.spec)
                .and_then(|r| report::ring_report(&r, cap, seed))
                .map(|r| r.parts["left_ideals"].clone()),
        };
        let Some(report) = g.take("named_examples", &e.name, report) else {
            continue;
        };
        for (flag, &want) in &e.expected {
            let got = report.flags.get(flag).copied();
            g.rec("named_examples", got == Some(want), || {
                format!("{}: {flag} expected {want}, got {got:?}", e.name)
            });
        }
    }
    entries.len()
}

fn check_module(g: &mut Groups, sl: &SubmoduleLattice, cap: usize, seed: u64) {
    let m = sl.module();
    let spec = m.spec();
    let Some(firsts) = g.take("first_submodules", spec, sl.spec_first()) else {
        return;
    };
    let first_set = ElemSet::from_indices(sl.len(), firsts.iter().copied());
    let simples = sl.simple_submodules();
    let lab = |i: usize| sl.label(i).to_string();

    if let Some(r) = g.take("report_witnesses", spec, report::module_report(sl, cap, seed)) {
        match report::verify_module_report(&r, sl) {
            Ok(bad) => g.rec("report_witnesses", bad.is_empty(), || format!("{spec}: witnesses for {bad:?} do not verify")),
            Err(e) => g.rec("report_witnesses", false, || format!("{spec}: {e}")),
        }
        let missing = report::unwitnessed_false_flags(&r);
        g.rec("report_witnesses", missing.is_empty(), || format!("{spec}: no witness for {missing:?}"));
        let round = AnalysisReport::from_json(&r.to_json()).ok();
        g.rec("report_witnesses", round.as_ref() == Some(&r), || format!("{spec}: report does not round-trip"));
    }

    check_first_submodules(g, sl, &firsts, &simples);
    if let Some(r) = g.take("first_criteria", spec, sl.check_first_criteria()) {
        g.merge("first_criteria", r);
    }
    // the socle is non-zero for every finite non-zero module
    let distributive_soc = sl.socle_distributivity_witness().is_none();
    let iso_equal = simples.iter().enumerate().all(|(i, &a)| {
        simples[i + 1..].iter().all(|&b| !sl.simples_isomorphic(a, b))
    });
    g.rec("socle_distributivity", iso_equal == distributive_soc, || {
        format!("{spec}: isomorphic simples equal {iso_equal}, socle distributive {distributive_soc}")
    });
    if let Some(min) = g.take("socle_distributivity", spec, sl.has_min_property()) {
        g.rec("socle_distributivity", min == distributive_soc, || {
            format!("{spec}: min-property {min}, socle distributive {distributive_soc}")
        });
    }
    if m.z_coefficients().is_some() {
        for (i, &a) in simples.iter().enumerate() {
            for &b in &simples[i + 1..] {
                g.rec("socle_distributivity", sl.simples_isomorphic(a, b) == sl.isomorphic_by_search(a, b), || {
                    format!("{spec}: order and search disagree on {} ≅ {}", lab(a), lab(b))
                });
            }
        }
    }

    if firsts.is_empty() {
        return;
    }
    if let Some(tau) = g.take("tau_c_and_strong_topf", spec, sl.torsion_subspace_topology()) {
        let v = tau.verify_topology();
        g.rec("tau_c_and_strong_topf", v.is_none(), || format!("{spec}: tau_c fails: {v:?}"));
    }
    if let Some(r) = g.take("tau_c_and_strong_topf", spec, sl.check_annihilator_unions()) {
        g.merge("tau_c_and_strong_topf", r);
    }
    let Some(topf) = g.take("topf_criteria", spec, sl.topf()) else {
        return;
    };
    let Some(strongly) = g.take("topf_criteria", spec, sl.is_strongly_topf_module()) else {
        return;
    };
    if let Some(w) = g.take("tau_c_and_strong_topf", spec, sl.sum_reversal_witness()) {
        g.rec("tau_c_and_strong_topf", strongly == w.is_none(), || {
            format!("{spec}: strongly topf {strongly} but sum reversal fails at {w:?}")
        });
    }
    g.rec("tau_c_and_strong_topf", !strongly || topf.holds, || format!("{spec}: strongly topf but not topf"));

    check_topf_criteria(g, sl, &firsts, topf.holds);

    let comult = sl.is_comultiplication();
    let essential = sl.has_essential_socle();
    if comult {
        let discrete = sl.xi_f_topology().map(|s| s.is_discrete()).unwrap_or(false);
        g.rec("comultiplication_spectrum", strongly && topf.holds && firsts == simples && discrete, || {
            format!("{spec}: comultiplication but strongly {strongly}, topf {}, firsts simple {}, discrete {discrete}", topf.holds, firsts == simples)
        });
    }
    if !topf.holds {
        return;
    }
    let Some(space) = g.take("spectrum_closure", spec, sl.xi_f_topology()) else {
        return;
    };
    let Some(ctx) = g.take("spectrum_closure", spec, sl.spec_f_context()) else {
        return;
    };
    let samples: Vec<PointSet> = subset_sample(firsts.len(), cap, seed);
    let corad = sl.sum_all(firsts.iter().copied());

    // closure and open sets of the first spectrum
    g.rec("spectrum_closure", space.is_t0(), || format!("{spec}: Spec^f is not T0"));
    for a in &samples {
        let closure = space.closure(a);
        let v = sl.variety_f(&firsts, sl.sum_of_points(&firsts, a));
        g.rec("spectrum_closure", closure == v, || {
            format!("{spec}: closure of {:?} differs from V(I(A))", ctx.point_names(a))
        });
    }
    for h in 0..sl.len() {
        if h == sl.zero() {
            continue;
        }
        let open_empty = sl.variety_f(&firsts, h).len() == firsts.len();
        g.rec("spectrum_closure", open_empty == sl.leq(corad, h), || {
            format!("{spec}: X({}) empty {open_empty} but Corad ⊆ H {}", lab(h), sl.leq(corad, h))
        });
    }
    if essential {
        for h in 0..sl.len() {
            let none = sl.below(h).is_disjoint(&first_set);
            g.rec("spectrum_closure", none == (h == sl.zero()), || {
                format!("{spec}: Spec^f({}) empty {none}", lab(h))
            });
        }
    }

    let irreducible = |a: &PointSet| !a.is_empty() && space.reducibility_witness(a).is_none();
    let has_first_below = |s: usize| sl.nonzero_below(s).iter().all(|h| !sl.below(h).is_disjoint(&first_set));
    let is_chain = |a: &PointSet| {
        let v = a.to_vec();
        v.iter().all(|&i| v.iter().all(|&j| sl.leq(firsts[i], firsts[j]) || sl.leq(firsts[j], firsts[i])))
    };

    for a in samples.iter().filter(|a| !a.is_empty()) {
        let s = sl.sum_of_points(&firsts, a);
        let irr = irreducible(a);
        let names = ctx.point_names(a);
        if irr {
            for h in sl.nonzero_below(s).iter() {
                if sl.below(h).is_disjoint(&first_set) {
                    continue;
                }
                g.rec("irreducible_annihilators", sl.annihilator_set(h) == sl.annihilator_set(s), || {
                    format!("{spec}: A={names:?}, ann({}) ≠ ann(I(A))", lab(h))
                });
            }
        }
        let hollow = sl.is_hollow(s).unwrap_or(false);
        g.rec("irreducible_sums", !hollow || irr, || format!("{spec}: I({names:?}) hollow but A reducible"));
        if strongly {
            g.rec("irreducible_sums", !irr || hollow, || format!("{spec}: strongly topf, A={names:?} irreducible but I(A) not hollow"));
        }
        let conds = [
            irr && has_first_below(s),
            irr && sl.distributivity_witness_below(s).is_none(),
            first_set.contains(s),
            sl.is_uniserial(s),
            is_chain(a),
        ];
        g.rec("irreducible_sums", conds.iter().all(|&c| c == conds[0]), || {
            format!("{spec}: A={names:?} gives (a..e) = {conds:?}")
        });
    }

    let Some(consistency) = g.take("consistency", spec, sl.is_consistent_topf(cap, seed)) else {
        return;
    };
    let corad_distributive = sl.distributivity_witness_below(corad).is_none();
    g.rec("consistency", !essential || consistency.holds, || format!("{spec}: essential socle but not consistent"));
    g.rec("consistency", !corad_distributive || consistency.holds, || {
        format!("{spec}: distributive coradical but not consistent")
    });

    if consistency.holds {
        for a in samples.iter().filter(|a| !a.is_empty()) {
            let s = sl.sum_of_points(&firsts, a);
            let conds = [
                irreducible(a),
                first_set.contains(s),
                sl.is_hollow(s).unwrap_or(false),
                sl.is_uniserial(s),
                is_chain(a),
            ];
            g.rec("consistent_irreducibles", conds.iter().all(|&c| c == conds[0]), || {
                format!("{spec}: A={:?} gives (a..e) = {conds:?}", ctx.point_names(a))
            });
        }
        let whole = PointSet::full(firsts.len());
        let conds = [
            irreducible(&whole),
            first_set.contains(corad),
            sl.is_hollow(corad).unwrap_or(false),
            sl.is_uniserial(corad),
            is_chain(&whole),
        ];
        g.rec("consistent_irreducibles", conds.iter().all(|&c| c == conds[0]), || {
            format!("{spec}: coradical conditions {conds:?}")
        });

        check_max_irr(g, sl, &firsts, &space);
        g.rec("sobriety", space.is_sober(), || format!("{spec}: consistent but not sober"));
    }

    if essential {
        let conds = [firsts == simples, space.is_discrete(), space.is_t2(), space.is_t1()];
        g.rec("separation", conds.iter().all(|&c| c == conds[0]), || {
            format!("{spec}: (Spec^f = S, discrete, T2, T1) = {conds:?}")
        });
        g.rec("compact", space.is_compact() && space.is_countably_compact(), || {
            format!("{spec}: finitely many simples but not compact")
        });
        let ultra = space.is_ultraconnected().unwrap_or(false);
        g.rec("uniform", sl.is_uniform() == ultra, || {
            format!("{spec}: uniform {} but ultraconnected {ultra}", sl.is_uniform())
        });
        for (i, &h) in firsts.iter().enumerate() {
            let simple = simples.contains(&h);
            let own = sl.variety_f(&firsts, h) == PointSet::singleton(firsts.len(), i);
            let closed = space.is_closed(&PointSet::singleton(firsts.len(), i));
            g.rec("closed_points", simple == own && own == closed, || {
                format!("{spec}: {} simple {simple}, V(H) = {{H}} {own}, closed point {closed}", lab(h))
            });
        }
    }
    if firsts == simples {
        let connected = space.is_connected();
        g.rec("simple_spectrum", space.is_discrete(), || format!("{spec}: firsts simple but not discrete"));
        g.rec("simple_spectrum", (simples.len() == 1) == connected, || {
            format!("{spec}: {} simples, connected {connected}", simples.len())
        });
        g.rec("simple_spectrum", sl.is_colocal() == (connected && essential), || {
            format!("{spec}: colocal {} but connected {connected}, essential {essential}", sl.is_colocal())
        });
    }
    let closed: Vec<usize> = ctx.closed_elements().to_vec();
    let longest = longest_chain(&closed, |a, b| sl.leq(a, b));
    let (noe, art) = (space.is_noetherian(), space.is_artinian());
    g.rec("chain_conditions", noe.holds && art.holds && noe.max_chain_length == longest, || {
        format!("{spec}: chains of closed sets {} vs I(M) {longest}", noe.max_chain_length)
    });
}

fn check_first_submodules(g: &mut Groups, sl: &SubmoduleLattice, firsts: &[usize], simples: &[usize]) {
    let m = sl.module();
    let spec = m.spec();
    let lab = |i: usize| sl.label(i).to_string();
    for &s in simples {
        g.rec("first_submodules", firsts.contains(&s), || format!("{spec}: simple {} not first", lab(s)));
    }
    let ring = m.scalars();
    let ideals = ring.ideals(crate::algebra::IdealKind::TwoSided);
    for f in 1..sl.len() {
        let first = firsts.contains(&f);
        let prime = sl.annihilator_is_prime(f);
        if first {
            for h in sl.nonzero_below(f).iter() {
                g.rec("first_submodules", firsts.contains(&h), || {
                    format!("{spec}: {} ≤ first {} but not first", lab(h), lab(f))
                });
            }
            g.rec("first_submodules", prime, || format!("{spec}: first {} with non-prime annihilator", lab(f)));
        }
        if sl.annihilator_is_maximal(f) {
            g.rec("first_submodules", first, || format!("{spec}: {} has maximal annihilator, not first", lab(f)));
        }
        // finite rings are zero-dimensional
        g.rec("first_submodules", first == prime, || {
            format!("{spec}: {} first {first} but annihilator prime {prime}", lab(f))
        });
        if let Some(z) = m.z_coefficients() {
            let ann = sl.annihilator(f);
            g.rec("first_submodules", ann.generator == sl.exponent_by_orders(f), || {
                format!("{spec}: generator of ann({}) disagrees with element orders", lab(f))
            });
            let by_ring = ring.is_prime_ideal(sl.annihilator_set(f), &ideals);
            g.rec("first_submodules", by_ring == prime, || {
                format!("{spec}: ann({}) prime by generator {prime}, by ideals {by_ring} (e = {})", lab(f), z.exponent)
            });
        }
        // commutative scalars: a semisimple submodule is first iff homogeneous
        if ring.is_commutative() && sl.leq(f, sl.socle()) {
            let inside = sl.simples_below(f);
            let homogeneous = inside.iter().all(|&a| inside.iter().all(|&b| sl.simples_isomorphic(a, b)));
            g.rec("first_submodules", homogeneous == first, || {
                format!("{spec}: semisimple {} homogeneous {homogeneous} but first {first}", lab(f))
            });
        }
    }
}

fn check_topf_criteria(g: &mut Groups, sl: &SubmoduleLattice, firsts: &[usize], topf: bool) {
    let spec = sl.module().spec();
    let Some(ctx) = g.take("topf_criteria", spec, sl.spec_f_context()) else {
        return;
    };
    let dual = sl.dual();
    let closed = ctx.closed_elements();
    let corad = sl.sum_all(firsts.iter().copied());
    let below_corad = sl.below(corad).clone();
    let c = firsts
        .iter()
        .all(|&p| dual.irreducible_witness(&below_corad, p, true).is_none());
    let members = closed.to_vec();
    let mut b = true;
    for &x in &members {
        for &y in &members {
            b &= *ctx.variety(sl.sum(x, y)) == ctx.variety(x).union(ctx.variety(y));
            b &= *ctx.variety(closed.tilde_join(dual, x, y)) == ctx.variety(x).intersection(ctx.variety(y));
        }
    }
    let distributive = crate::lattice::distributivity_witness(
        dual,
        closed.members(),
        |x, y| dual.meet(x, y),
        |x, y| closed.tilde_join(dual, x, y),
    )
    .map(|w| w.is_none())
    .unwrap_or(false);
    let hollow = firsts.iter().all(|&p| sl.is_hollow(p).unwrap_or(false));
    let d = distributive && hollow;
    g.rec("topf_criteria", topf == b && b == c && c == d, || {
        format!("{spec}: (a, b, c, d) = ({topf}, {b}, {c}, {d})")
    });
    if topf {
        for &p in firsts {
            g.rec("topf_criteria", sl.is_uniserial(p), || {
                format!("{spec}: first {} is not uniserial", sl.label(p))
            });
        }
        let soc = sl.socle_distributivity_witness();
        g.rec("socle_distributivity", soc.is_none(), || format!("{spec}: topf with non-distributive socle"));
    }
}

fn check_max_irr(g: &mut Groups, sl: &SubmoduleLattice, firsts: &[usize], space: &TopSpace) {
    let spec = sl.module().spec();
    let irreducible_closed: BTreeSet<PointSet> = space
        .closed_sets()
        .iter()
        .filter(|c| !c.is_empty() && space.reducibility_witness(c).is_none())
        .cloned()
        .collect();
    let images: BTreeSet<PointSet> = firsts.iter().map(|&p| sl.variety_f(firsts, p)).collect();
    g.rec("irreducible_closed_sets", images.len() == firsts.len() && images == irreducible_closed, || {
        format!("{spec}: V is not a bijection onto irreducible closed sets")
    });
    let maximal: BTreeSet<PointSet> = firsts
        .iter()
        .filter(|&&p| !firsts.iter().any(|&q| q != p && sl.leq(p, q)))
        .map(|&p| sl.variety_f(firsts, p))
        .collect();
    match space.irreducible_components() {
        Ok(components) => {
            let components: BTreeSet<PointSet> = components.into_iter().collect();
            g.rec("irreducible_closed_sets", maximal == components, || {
                format!("{spec}: maximal firsts do not match irreducible components")
            });
        }
        Err(e) => g.rec("irreducible_closed_sets", false, || format!("{spec}: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteConfig {
        SuiteConfig {
            random: 10,
            max_lattice: 5,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn small_suite_passes() {
        let r = run_suite(&quick());
        assert!(r.passed, "{}", r.to_table());
        assert!(r.groups.iter().filter(|g| g.checked > 0).count() >= 14);
    }

    #[test]
    fn injected_fault_is_caught() {
        let r = run_suite(&SuiteConfig {
            inject_fault: true,
            ..quick()
        });
        assert!(!r.passed);
        assert_eq!(r.failed_groups, vec!["lattice_axioms".to_string()]);
        assert!(r.group("lattice_axioms").unwrap().failures[0].contains("corrupted"));
    }

    #[test]
    fn longest_chain_counts_elements() {
        assert_eq!(longest_chain(&[0, 1, 2], |a, b| a <= b), 3);
        assert_eq!(longest_chain(&[], |a: usize, b: usize| a <= b), 0);
    }
}
