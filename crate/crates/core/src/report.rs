//! Analysis reports for lattices, modules and rings, with witnesses that can
//! be checked again against the analysed object.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteRing, IdealKind, SubmoduleLattice};
use crate::bits::{ElemSet, PointSet};
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::galois::SpectrumContext;
use crate::lattice::FinLattice;
use crate::topology::{TopSpace, TopSpaceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    Lattice,
    Module,
    Ring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub spec: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<String>,
}

/// Per-submodule facts in a module report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleInfo {
    pub label: String,
    pub order: usize,
    /// Generator of the annihilator for integer coefficients.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annihilator_generator: Option<u64>,
    pub annihilator_order: usize,
    pub first: bool,
    pub simple: bool,
}

/// A concrete counterexample behind a false flag. Names refer to element,
/// submodule, ideal or point labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `V(a) ∪ V(b)` is not a variety.
    VarietyUnion { a: String, b: String },
    /// `a ∧ b ≤ p` with neither `a ≤ p` nor `b ≤ p`.
    NotStronglyIrreducible { point: String, a: String, b: String },
    /// A first submodule inside `a + b` but inside neither.
    NotStronglyHollow { first: String, a: String, b: String },
    /// Two points with the same closure (T0) or without disjoint open
    /// neighbourhoods (T2).
    Inseparable { p: String, q: String },
    NotClosedPoint { point: String },
    NotOpenPoint { point: String },
    Clopen { set: Vec<String> },
    /// A set covered by two closed sets, neither containing it.
    ClosedCover { set: Vec<String>, a: Vec<String>, b: Vec<String> },
    DisjointClosed { a: Vec<String>, b: Vec<String> },
    /// An irreducible closed set without exactly one generic point.
    NoGenericPoint { set: Vec<String>, generic: Vec<String> },
    Incomparable { a: String, b: String },
    DisjointSubmodules { a: String, b: String },
    MissesSocle { submodule: String },
    SimpleInSum { simple: String },
    NotDistributive { a: String, b: String, c: String },
    NotMultiplication { submodule: String },
    NotComultiplication { submodule: String },
    /// An irreducible point set whose sum is not first.
    ReducibleSum { points: Vec<String> },
    HasFirst { first: String },
    NonCommuting { a: String, b: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub kind: ReportKind,
    pub input: InputEcho,
    pub flags: BTreeMap<String, bool>,
    pub spectra: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub irreducible_components: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub submodules: Vec<SubmoduleInfo>,
    pub topologies: BTreeMap<String, TopSpaceSpec>,
    pub witnesses: BTreeMap<String, Witness>,
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parts: BTreeMap<String, AnalysisReport>,
}

impl AnalysisReport {
    fn new(kind: ReportKind, spec: impl Into<String>, points: Vec<String>) -> Self {
        Self {
            kind,
            input: InputEcho {
                spec: spec.into(),
                points,
            },
            flags: BTreeMap::new(),
            spectra: BTreeMap::new(),
            irreducible_components: Vec::new(),
            submodules: Vec::new(),
            topologies: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            parts: BTreeMap::new(),
        }
    }

    fn flag(&mut self, name: &str, value: bool, witness: Option<Witness>) {
        self.flags.insert(name.to_string(), value);
        if let (false, Some(w)) = (value, witness) {
            self.witnesses.insert(name.to_string(), w);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Plain-text rendering.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        self.write_table(&mut out, "");
        out
    }

    fn write_table(&self, out: &mut String, prefix: &str) {
        let _ = writeln!(out, "{prefix}input: {}", self.input.spec);
        if !self.input.points.is_empty() {
            let _ = writeln!(out, "{prefix}points: {}", self.input.points.join(", "));
        }
        for (k, v) in &self.flags {
            let _ = writeln!(out, "{prefix}{k:<24} {v}");
        }
        for (k, v) in &self.spectra {
            let _ = writeln!(out, "{prefix}{k:<24} {{{}}}", v.join(", "));
        }
        for (k, t) in &self.topologies {
            let sets: Vec<String> = t
                .closed_sets
                .iter()
                .map(|s| format!("{{{}}}", s.join(",")))
                .collect();
            let _ = writeln!(out, "{prefix}closed sets ({k}): {}", sets.join(" "));
        }
        for (k, w) in &self.witnesses {
            let _ = writeln!(out, "{prefix}witness {k}: {}", serde_json::to_string(w).unwrap_or_default());
        }
        for c in &self.checks {
            let _ = writeln!(out, "{prefix}check {:<22} {}/{} passed", c.name, c.checked - c.failed, c.checked);
        }
        for n in &self.notes {
            let _ = writeln!(out, "{prefix}note: {n}");
        }
        for (k, p) in &self.parts {
            let _ = writeln!(out, "{prefix}[{k}]");
            p.write_table(out, &format!("{prefix}  "));
        }
    }
}

fn names(labels: &[String], s: &PointSet) -> Vec<String> {
    s.iter().map(|i| labels[i].clone()).collect()
}

/// Separation, connectedness and compactness flags of a finite space.
fn topology_flags(report: &mut AnalysisReport, space: &TopSpace) -> Result<()> {
    let l = space.labels();
    let w = space.t0_witness().map(|(p, q)| Witness::Inseparable {
        p: l[p].clone(),
        q: l[q].clone(),
    });
    report.flag("t0", w.is_none(), w);
    let w = space
        .t1_witness()
        .map(|p| Witness::NotClosedPoint { point: l[p].clone() });
    report.flag("t1", w.is_none(), w);
    let w = space.t2_witness().map(|(p, q)| Witness::Inseparable {
        p: l[p].clone(),
        q: l[q].clone(),
    });
    report.flag("t2", w.is_none(), w);
    let w = space
        .discrete_witness()
        .map(|p| Witness::NotOpenPoint { point: l[p].clone() });
    report.flag("discrete", w.is_none(), w);
    let w = space
        .connected_witness()
        .map(|s| Witness::Clopen { set: names(l, &s) });
    report.flag("connected", w.is_none(), w);
    let whole = space.whole();
    let w = space.reducibility_witness(&whole).map(|(a, b)| Witness::ClosedCover {
        set: names(l, &whole),
        a: names(l, &a),
        b: names(l, &b),
    });
    report.flag("irreducible", w.is_none(), w);
    let w = space.ultraconnected_witness().map(|(a, b)| Witness::DisjointClosed {
        a: names(l, &a),
        b: names(l, &b),
    });
    report.flag("ultraconnected", w.is_none(), w);
    let sob = space.sobriety();
    let w = sob
        .generic_points
        .iter()
        .find(|(_, g)| g.len() != 1)
        .map(|(s, g)| Witness::NoGenericPoint {
            set: names(l, s),
            generic: g.iter().map(|&p| l[p].clone()).collect(),
        });
    report.flag("sober", sob.sober, w);
    report.flag("compact", space.is_compact(), None);
    report.flag("countably_compact", space.is_countably_compact(), None);
    report.flag("noetherian", space.is_noetherian().holds, None);
    report.flag("artinian", space.is_artinian().holds, None);
    report.irreducible_components = space
        .irreducible_components()?
        .iter()
        .map(|c| names(l, c))
        .collect();
    Ok(())
}

/// Full analysis of a lattice with designated points.
pub fn lattice_report(ctx: &SpectrumContext, cap: usize, seed: u64) -> Result<AnalysisReport> {
    let mut r = AnalysisReport::new(ReportKind::Lattice, "lattice", ctx.point_labels());
    lattice_flags(&mut r, ctx, cap, seed)?;
    Ok(r)
}

fn lattice_flags(r: &mut AnalysisReport, ctx: &SpectrumContext, cap: usize, seed: u64) -> Result<()> {
    let l = ctx.lattice();
    let x = ctx.is_x_top();
    let via_c = ctx.is_x_top_via_c();
    let via_d = ctx.is_x_top_via_d();
    if x.holds != via_c || x.holds != via_d {
        return Err(Error::OracleDisagreement {
            check: "X-top criteria",
            detail: format!("direct {}, via C(L) {via_c}, via distributivity {via_d}", x.holds),
        });
    }
    let w = x.witness.map(|(a, b)| Witness::VarietyUnion {
        a: l.label(a).into(),
        b: l.label(b).into(),
    });
    r.flag("x_top", x.holds, w.clone());
    r.flag("x_top_via_c", via_c, w.clone());
    r.flag("x_top_via_d", via_d, w);
    let s = ctx.is_strongly_x_top()?;
    let w = s.witness.map(|(p, a, b)| Witness::NotStronglyIrreducible {
        point: l.label(p).into(),
        a: l.label(a).into(),
        b: l.label(b).into(),
    });
    r.flag("strongly_x_top", s.holds, w.clone());
    r.flag("meet_reversal", s.meet_reversal, w);
    r.flag("join_reversal", s.join_reversal, None);
    r.spectra.insert("points".into(), ctx.point_labels());
    let closed = ctx.closed_elements();
    r.spectra.insert(
        "closed_elements".into(),
        closed.to_vec().iter().map(|&a| l.label(a).to_string()).collect(),
    );
    r.checks.push(ctx.check_galois_laws(cap, seed));
    if x.holds {
        let space = ctx.build_topology()?;
        r.topologies.insert("x_top".into(), space.to_spec());
        topology_flags(r, &space)?;
        r.checks.push(ctx.check_irreducible_correspondence(cap, seed)?);
    } else {
        r.notes.push("not X-top: no topology on the points".into());
    }
    Ok(())
}

/// Full analysis of a finite module.
pub fn module_report(sl: &SubmoduleLattice, cap: usize, seed: u64) -> Result<AnalysisReport> {
    let m = sl.module();
    let mut r = AnalysisReport::new(ReportKind::Module, m.spec(), Vec::new());
    let lab = |i: usize| sl.label(i).to_string();
    let firsts = sl.spec_first()?;
    let simples = sl.simple_submodules();
    r.flag(
        "firstless",
        firsts.is_empty(),
        firsts.first().map(|&f| Witness::HasFirst { first: lab(f) }),
    );
    r.submodules = (0..sl.len())
        .map(|i| {
            let ann = sl.annihilator(i);
            SubmoduleInfo {
                label: lab(i),
                order: sl.members(i).len(),
                annihilator_generator: ann.generator,
                annihilator_order: ann.scalars.len(),
                first: firsts.contains(&i),
                simple: simples.contains(&i),
            }
        })
        .collect();
    r.spectra.insert("spec_first".into(), sl.labels_of(firsts.iter().copied()));
    r.spectra.insert("simple".into(), sl.labels_of(simples.iter().copied()));
    let maximal: Vec<usize> = firsts
        .iter()
        .copied()
        .filter(|&p| !firsts.iter().any(|&q| q != p && sl.leq(p, q)))
        .collect();
    r.spectra.insert("maximal_first".into(), sl.labels_of(maximal));
    r.spectra.insert("socle".into(), vec![lab(sl.socle())]);
    r.spectra.insert("coradical".into(), vec![lab(sl.coradical_f()?)]);
    r.spectra.insert("sub_c".into(), sl.labels_of(sl.annihilator_submodules()));

    let whole = sl.whole();
    let w = incomparable_pair(sl, whole).map(|(a, b)| Witness::Incomparable { a: lab(a), b: lab(b) });
    r.flag("uniserial", w.is_none(), w);
    let w = sl
        .uniform_witness(whole)
        .map(|(a, b)| Witness::DisjointSubmodules { a: lab(a), b: lab(b) });
    r.flag("uniform", w.is_none(), w);
    let w = sl
        .essential_socle_witness()
        .map(|n| Witness::MissesSocle { submodule: lab(n) });
    r.flag("essential_socle", w.is_none(), w);
    let colocal = sl.is_colocal();
    let w = (!colocal && simples.len() >= 2).then(|| Witness::DisjointSubmodules {
        a: lab(simples[0]),
        b: lab(simples[1]),
    });
    r.flag("colocal", colocal, w);
    let min = sl.has_min_property()?;
    let w = sl
        .min_property_witness()
        .map(|h| Witness::SimpleInSum { simple: lab(h) });
    r.flag("min_property", min, w);
    let w = sl
        .socle_distributivity_witness()
        .map(|(a, b, c)| Witness::NotDistributive { a: lab(a), b: lab(b), c: lab(c) });
    r.flag("distributive_socle", w.is_none(), w);
    let w = sl
        .multiplication_witness(whole)
        .map(|h| Witness::NotMultiplication { submodule: lab(h) });
    r.flag("multiplication", w.is_none(), w);
    let w = sl
        .comultiplication_witness(whole)
        .map(|h| Witness::NotComultiplication { submodule: lab(h) });
    r.flag("comultiplication", w.is_none(), w);

    if firsts.is_empty() {
        r.notes.push("firstless: Spec^f(M) is empty".into());
        return Ok(r);
    }
    let tau = sl.torsion_subspace_topology()?;
    r.flag("tau_c_topology", tau.is_topology(), None);
    r.topologies.insert("tau_c".into(), tau.to_spec());
    r.checks.push(sl.check_annihilator_unions()?);
    r.checks.push(sl.check_first_criteria()?);

    let topf = sl.topf()?;
    let w = topf.witness.map(|(a, b)| Witness::VarietyUnion { a: lab(a), b: lab(b) });
    r.flag("topf", topf.holds, w);
    let strongly = sl.is_strongly_topf_module()?;
    let w = firsts.iter().find_map(|&p| {
        sl.strongly_hollow_witness(p).ok().flatten().map(|(a, b)| Witness::NotStronglyHollow {
            first: lab(p),
            a: lab(a),
            b: lab(b),
        })
    });
    r.flag("strongly_topf", strongly, w);
    if topf.holds {
        let c = sl.is_consistent_topf(cap, seed)?;
        let w = c.witness.map(|a| Witness::ReducibleSum {
            points: a.iter().map(|&i| lab(firsts[i])).collect(),
        });
        r.flag("consistent", c.holds, w);
        let space = sl.xi_f_topology()?;
        r.topologies.insert("xi_f".into(), space.to_spec());
        topology_flags(&mut r, &space)?;
        let ctx = sl.spec_f_context()?;
        r.checks.push(ctx.check_galois_laws(cap, seed));
        r.checks.push(ctx.check_irreducible_correspondence(cap, seed)?);
    } else {
        r.notes.push("not topf: the varieties do not form a topology; see tau_c".into());
    }
    Ok(r)
}

fn incomparable_pair(sl: &SubmoduleLattice, n: usize) -> Option<(usize, usize)> {
    let below = sl.below(n).to_vec();
    for (k, &a) in below.iter().enumerate() {
        for &b in &below[k + 1..] {
            if !sl.leq(a, b) && !sl.leq(b, a) {
                return Some((a, b));
            }
        }
    }
    None
}

/// The Zariski context of a ring: two-sided ideals with the prime ideals.
pub fn zariski_context(ring: &FiniteRing) -> Result<SpectrumContext> {
    let il = ring.ideal_lattice(IdealKind::TwoSided);
    let primes = il.prime_spectrum(ring);
    SpectrumContext::new(il.lattice, &primes, false)
}

/// The left-ideal lattice with the prime two-sided ideals as points.
pub fn left_ideal_context(ring: &FiniteRing) -> Result<SpectrumContext> {
    let two = ring.ideal_lattice(IdealKind::TwoSided);
    let primes = two.prime_spectrum(ring);
    let left = ring.ideal_lattice(IdealKind::Left);
    let mut x = left.lattice.empty_set();
    for p in primes.iter() {
        let i = left
            .ideals
            .iter()
            .position(|l| *l == two.ideals[p])
            .expect("two-sided ideals are left ideals");
        x.insert(i);
    }
    SpectrumContext::new(left.lattice, &x, false)
}

/// Zariski analysis of a ring plus its left-ideal lattice.
pub fn ring_report(ring: &FiniteRing, cap: usize, seed: u64) -> Result<AnalysisReport> {
    let mut r = AnalysisReport::new(ReportKind::Ring, ring.name(), Vec::new());
    let n = ring.len();
    let pair = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| ring.mul(a, b) != ring.mul(b, a));
    let w = pair.map(|(a, b)| Witness::NonCommuting {
        a: ring.label(a).into(),
        b: ring.label(b).into(),
    });
    r.flag("commutative", ring.is_commutative(), w);
    let ctx = zariski_context(ring)?;
    r.input.points = ctx.point_labels();
    let il = ring.ideal_lattice(IdealKind::TwoSided);
    r.spectra.insert("ideals".into(), il.lattice.labels().to_vec());
    r.spectra.insert("primes".into(), ctx.point_labels());
    let maximal: Vec<String> = il
        .ideals
        .iter()
        .enumerate()
        .filter(|(_, i)| ring.is_maximal_ideal(i, &il.ideals))
        .map(|(k, _)| il.lattice.label(k).to_string())
        .collect();
    r.spectra.insert("maximal_ideals".into(), maximal);
    lattice_flags(&mut r, &ctx, cap, seed)?;
    let left = left_ideal_context(ring)?;
    let mut part = lattice_report(&left, cap, seed)?;
    part.input.spec = format!("{}: left ideals", ring.name());
    r.parts.insert("left_ideals".into(), part);
    Ok(r)
}

/// What a witness is checked against.
pub enum Subject<'a> {
    Context(&'a SpectrumContext),
    Module(&'a SubmoduleLattice),
    Space(&'a TopSpace),
    Ring(&'a FiniteRing),
}

fn elem(l: &FinLattice, name: &str) -> Option<usize> {
    l.index_of(name)
}

fn point_set(space: &TopSpace, names: &[String]) -> Option<PointSet> {
    let mut s = PointSet::empty(space.len());
    for n in names {
        s.insert(space.labels().iter().position(|l| l == n)?);
    }
    Some(s)
}

fn point(space: &TopSpace, name: &str) -> Option<usize> {
    space.labels().iter().position(|l| l == name)
}

impl Witness {
    /// Re-checks the counterexample against the object it was drawn from.
    /// Returns false when the witness does not hold or does not fit the
    /// subject.
    pub fn verify(&self, subject: &Subject) -> bool {
        self.verify_inner(subject).unwrap_or(false)
    }

    fn verify_inner(&self, subject: &Subject) -> Option<bool> {
        use Witness::*;
        match (self, subject) {
            (VarietyUnion { a, b }, Subject::Context(ctx)) => {
                let l = ctx.lattice();
                let u = ctx.variety(elem(l, a)?).union(ctx.variety(elem(l, b)?));
                Some(!ctx.variety_image().contains(&u))
            }
            (VarietyUnion { a, b }, Subject::Module(sl)) => {
                let firsts = sl.spec_first().ok()?;
                let (a, b) = (elem(sl.lattice(), a)?, elem(sl.lattice(), b)?);
                let u = sl.variety_f(&firsts, a).union(&sl.variety_f(&firsts, b));
                Some((0..sl.len()).all(|n| sl.variety_f(&firsts, n) != u))
            }
            (NotStronglyIrreducible { point, a, b }, Subject::Context(ctx)) => {
                let l = ctx.lattice();
                let (p, a, b) = (elem(l, point)?, elem(l, a)?, elem(l, b)?);
                Some(ctx.point_index(p).is_some() && l.leq(l.meet(a, b), p) && !l.leq(a, p) && !l.leq(b, p))
            }
            (NotStronglyHollow { first, a, b }, Subject::Module(sl)) => {
                let l = sl.lattice();
                let (p, a, b) = (elem(l, first)?, elem(l, a)?, elem(l, b)?);
                let m = sl.module();
                let sum = m.sum(sl.members(a), sl.members(b));
                let inside = |x: usize| sl.members(p).is_subset(sl.members(x));
                Some(sl.is_prime_module(p).ok()? && sl.members(p).is_subset(&sum) && !inside(a) && !inside(b))
            }
            (Inseparable { p, q }, Subject::Space(s)) => {
                let (p, q) = (point(s, p)?, point(s, q)?);
                let opens = s.open_sets();
                let same_closure = s.point_closure(p) == s.point_closure(q);
                let no_disjoint = !opens.iter().any(|u| {
                    u.contains(p)
                        && !u.contains(q)
                        && opens.iter().any(|v| v.contains(q) && v.is_disjoint(u))
                });
                Some(p != q && (same_closure || no_disjoint))
            }
            (NotClosedPoint { point: p }, Subject::Space(s)) => {
                let p = point(s, p)?;
                Some(!s.is_closed(&PointSet::singleton(s.len(), p)))
            }
            (NotOpenPoint { point: p }, Subject::Space(s)) => {
                let p = point(s, p)?;
                Some(!s.is_open(&PointSet::singleton(s.len(), p)))
            }
            (Clopen { set }, Subject::Space(s)) => {
                let c = point_set(s, set)?;
                Some(!c.is_empty() && c != s.whole() && s.is_closed(&c) && s.is_open(&c))
            }
            (ClosedCover { set, a, b }, Subject::Space(s)) => {
                let (x, a, b) = (point_set(s, set)?, point_set(s, a)?, point_set(s, b)?);
                Some(
                    s.is_closed(&a)
                        && s.is_closed(&b)
                        && x.is_subset(&a.union(&b))
                        && !x.is_subset(&a)
                        && !x.is_subset(&b),
                )
            }
            (DisjointClosed { a, b }, Subject::Space(s)) => {
                let (a, b) = (point_set(s, a)?, point_set(s, b)?);
                Some(!a.is_empty() && !b.is_empty() && s.is_closed(&a) && s.is_closed(&b) && a.is_disjoint(&b))
            }
            (NoGenericPoint { set, generic }, Subject::Space(s)) => {
                let c = point_set(s, set)?;
                let found: Vec<usize> = c.iter().filter(|&p| s.point_closure(p) == c).collect();
                let claimed: Option<Vec<usize>> = generic.iter().map(|g| point(s, g)).collect();
                Some(
                    s.is_closed(&c)
                        && s.reducibility_witness(&c).is_none()
                        && !c.is_empty()
                        && found.len() != 1
                        && claimed? == found,
                )
            }
            (Incomparable { a, b }, Subject::Module(sl)) => {
                let (a, b) = (elem(sl.lattice(), a)?, elem(sl.lattice(), b)?);
                let (x, y) = (sl.members(a), sl.members(b));
                Some(!x.is_subset(y) && !y.is_subset(x))
            }
            (DisjointSubmodules { a, b }, Subject::Module(sl)) => {
                let (a, b) = (elem(sl.lattice(), a)?, elem(sl.lattice(), b)?);
                let meet = sl.members(a).intersection(sl.members(b));
                Some(a != sl.zero() && b != sl.zero() && meet.len() == 1)
            }
            (MissesSocle { submodule }, Subject::Module(sl)) => {
                let n = elem(sl.lattice(), submodule)?;
                let soc = socle_members(sl);
                Some(n != sl.zero() && sl.members(n).intersection(&soc).len() == 1)
            }
            (SimpleInSum { simple }, Subject::Module(sl)) => {
                let h = elem(sl.lattice(), simple)?;
                let m = sl.module();
                let zero = ElemSet::singleton(m.len(), m.zero());
                let rest = sl
                    .simple_submodules()
                    .into_iter()
                    .filter(|&k| k != h)
                    .fold(zero, |acc, k| m.sum(&acc, sl.members(k)));
                Some(sl.simple_submodules().contains(&h) && sl.members(h).is_subset(&rest))
            }
            (NotDistributive { a, b, c }, Subject::Module(sl)) => {
                let l = sl.lattice();
                let m = sl.module();
                let (a, b, c) = (sl.members(elem(l, a)?), sl.members(elem(l, b)?), sl.members(elem(l, c)?));
                let lhs = a.intersection(&m.sum(b, c));
                let rhs = m.sum(&a.intersection(b), &a.intersection(c));
                Some(lhs != rhs)
            }
            (NotMultiplication { submodule }, Subject::Module(sl)) => {
                let h = sl.members(elem(sl.lattice(), submodule)?);
                let m = sl.module();
                let all = ElemSet::full(m.len());
                Some(m.ideal_times(&m.colon(h, &all), &all) != *h)
            }
            (NotComultiplication { submodule }, Subject::Module(sl)) => {
                let h = sl.members(elem(sl.lattice(), submodule)?);
                let m = sl.module();
                let all = ElemSet::full(m.len());
                Some(m.annihilated_in(&m.annihilator_scalars(h), &all) != *h)
            }
            (ReducibleSum { points }, Subject::Module(sl)) => {
                let firsts = sl.spec_first().ok()?;
                let idx: Option<Vec<usize>> = points
                    .iter()
                    .map(|p| {
                        let e = elem(sl.lattice(), p)?;
                        firsts.iter().position(|&f| f == e)
                    })
                    .collect();
                let a = PointSet::from_indices(firsts.len(), idx?);
                let space = sl.xi_f_topology().ok()?;
                let sum = sl.sum_of_points(&firsts, &a);
                Some(!a.is_empty() && space.reducibility_witness(&a).is_none() && !firsts.contains(&sum))
            }
            (HasFirst { first }, Subject::Module(sl)) => {
                let f = elem(sl.lattice(), first)?;
                Some(f != sl.zero() && sl.is_prime_module(f).ok()?)
            }
            (NonCommuting { a, b }, Subject::Ring(r)) => {
                let a = r.labels().iter().position(|l| l == a)?;
                let b = r.labels().iter().position(|l| l == b)?;
                Some(r.mul(a, b) != r.mul(b, a))
            }
            _ => None,
        }
    }

    /// Whether the witness concerns the topology rather than the algebra.
    pub fn is_topological(&self) -> bool {
        use Witness::*;
        matches!(
            self,
            Inseparable { .. }
                | NotClosedPoint { .. }
                | NotOpenPoint { .. }
                | Clopen { .. }
                | ClosedCover { .. }
                | DisjointClosed { .. }
                | NoGenericPoint { .. }
        )
    }
}

fn socle_members(sl: &SubmoduleLattice) -> ElemSet {
    let m = sl.module();
    sl.simple_submodules()
        .into_iter()
        .fold(ElemSet::singleton(m.len(), m.zero()), |acc, k| m.sum(&acc, sl.members(k)))
}

/// Re-verifies every witness in a lattice report. Returns the flags whose
/// witness did not check out.
pub fn verify_lattice_report(report: &AnalysisReport, ctx: &SpectrumContext) -> Result<Vec<String>> {
    let space = match report.topologies.get("x_top") {
        Some(spec) => Some(TopSpace::from_spec(spec)?),
        None => None,
    };
    Ok(report
        .witnesses
        .iter()
        .filter(|(_, w)| !check_with(w, Subject::Context(ctx), space.as_ref()))
        .map(|(k, _)| k.clone())
        .collect())
}

/// Re-verifies every witness in a module report.
pub fn verify_module_report(report: &AnalysisReport, sl: &SubmoduleLattice) -> Result<Vec<String>> {
    let space = match sl.xi_f_topology() {
        Ok(s) => Some(s),
        Err(Error::NotTopf) | Err(Error::Firstless) => None,
        Err(e) => return Err(e),
    };
    Ok(report
        .witnesses
        .iter()
        .filter(|(_, w)| !check_with(w, Subject::Module(sl), space.as_ref()))
        .map(|(k, _)| k.clone())
        .collect())
}

fn check_with(w: &Witness, subject: Subject, space: Option<&TopSpace>) -> bool {
    if w.is_topological() {
        space.is_some_and(|s| w.verify(&Subject::Space(s)))
    } else {
        w.verify(&subject)
    }
}

/// Flags that are false but carry no witness, excluding those where no
/// finite witness can exist.
pub fn unwitnessed_false_flags(report: &AnalysisReport) -> Vec<String> {
    const NO_WITNESS: [&str; 7] = [
        "compact",
        "countably_compact",
        "noetherian",
        "artinian",
        "join_reversal",
        "tau_c_topology",
        "firstless",
    ];
    report
        .flags
        .iter()
        .filter(|(k, &v)| !v && !report.witnesses.contains_key(*k) && !NO_WITNESS.contains(&k.as_str()))
        .map(|(k, _)| k.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_module_spec;
    use crate::lattice::named;

    fn module(spec: &str) -> SubmoduleLattice {
        SubmoduleLattice::new(parse_module_spec(spec, 512).unwrap()).unwrap()
    }

    #[test]
    fn diamond_report() {
        let ctx = SpectrumContext::from_labels(named::diamond(), &["a", "b", "c"]).unwrap();
        let r = lattice_report(&ctx, 15, 0).unwrap();
        assert!(!r.flags["x_top"]);
        assert!(matches!(r.witnesses["x_top"], Witness::VarietyUnion { .. }));
        assert!(verify_lattice_report(&r, &ctx).unwrap().is_empty());
        assert!(unwitnessed_false_flags(&r).is_empty());
    }

    #[test]
    fn chain_report_has_three_closed_sets() {
        let ctx = SpectrumContext::from_labels(named::chain(3), &["0", "1"]).unwrap();
        let r = lattice_report(&ctx, 15, 0).unwrap();
        assert!(r.flags["x_top"]);
        assert_eq!(r.topologies["x_top"].closed_sets.len(), 3);
        assert!(verify_lattice_report(&r, &ctx).unwrap().is_empty());
    }

    #[test]
    fn module_reports_round_trip_and_verify() {
        for spec in ["Z: 2,3,5", "Z: 2,2", "Z: 4", "Z: 8,3", "ring M2F2: regular"] {
            let sl = module(spec);
            let r = module_report(&sl, 15, 0).unwrap();
            let back = AnalysisReport::from_json(&r.to_json()).unwrap();
            assert_eq!(back, r, "{spec}");
            assert!(verify_module_report(&r, &sl).unwrap().is_empty(), "{spec}");
            assert!(unwitnessed_false_flags(&r).is_empty(), "{spec}: {:?}", unwitnessed_false_flags(&r));
        }
    }

    #[test]
    fn module_flags() {
        let r = module_report(&module("Z: 2,3,5"), 15, 0).unwrap();
        assert!(r.flags["topf"] && r.flags["discrete"] && r.flags["consistent"]);
        assert_eq!(r.spectra["spec_first"].len(), 3);
        let r = module_report(&module("Z: 2,2"), 15, 0).unwrap();
        assert!(!r.flags["topf"] && !r.flags["min_property"]);
        assert!(r.flags["tau_c_topology"]);
        let r = module_report(&module("Z: 4"), 15, 0).unwrap();
        assert!(r.flags["strongly_topf"] && r.flags["ultraconnected"] && r.flags["uniform"]);
    }

    #[test]
    fn tampered_witness_fails() {
        let sl = module("Z: 2,2");
        let mut r = module_report(&sl, 15, 0).unwrap();
        r.witnesses.insert(
            "uniform".into(),
            Witness::DisjointSubmodules {
                a: "M".into(),
                b: "<(0,1)>".into(),
            },
        );
        assert_eq!(verify_module_report(&r, &sl).unwrap(), vec!["uniform".to_string()]);
    }

    #[test]
    fn ring_reports() {
        let z12 = FiniteRing::parse("Zmod:12").unwrap();
        let r = ring_report(&z12, 15, 0).unwrap();
        assert!(r.flags["x_top"] && r.flags["strongly_x_top"]);
        assert_eq!(r.spectra["primes"].len(), 2);
        let m = FiniteRing::parse("M2F2").unwrap();
        let r = ring_report(&m, 15, 0).unwrap();
        assert!(r.flags["x_top"] && !r.flags["commutative"]);
        assert!(r.witnesses["commutative"].verify(&Subject::Ring(&m)));
        let left = &r.parts["left_ideals"];
        assert_eq!(left.input.points, vec!["0".to_string()]);
        assert!(left.flags["x_top"] && !left.flags["strongly_x_top"]);
        let ctx = left_ideal_context(&m).unwrap();
        assert!(verify_lattice_report(left, &ctx).unwrap().is_empty());
    }
}
