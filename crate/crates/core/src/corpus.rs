//! Built-in corpus: named examples, every small lattice, seeded random
//! lattices and a battery of small modules.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::ElemSet;
use crate::lattice::FinLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Module,
    Ring,
    /// A ring's left-ideal lattice with the prime two-sided ideals as points.
    LeftIdeals,
}

/// A named example with the flags its report must show.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub kind: EntryKind,
    pub spec: String,
    pub expected: BTreeMap<String, bool>,
}

fn entry(name: &str, kind: EntryKind, spec: &str, expected: &[(&str, bool)]) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        kind,
        spec: spec.into(),
        expected: expected.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
    }
}

/// The checkable worked examples.
pub fn named_entries() -> Vec<CorpusEntry> {
    use EntryKind::*;
    vec![
        entry(
            "zariski-Z12",
            Ring,
            "Zmod:12",
            &[("x_top", true), ("strongly_x_top", true), ("commutative", true)],
        ),
        entry("matrix-M2F2", Ring, "M2F2", &[("x_top", true), ("commutative", false)]),
        entry(
            "matrix-M2F2-left",
            LeftIdeals,
            "M2F2",
            &[("x_top", true), ("strongly_x_top", false)],
        ),
        entry(
            "semisimple-distinct",
            Module,
            "Z: 2,3,5",
            &[("topf", true), ("discrete", true), ("min_property", true), ("consistent", true)],
        ),
        entry(
            "semisimple-homogeneous",
            Module,
            "Z: 2,2",
            &[("topf", false), ("min_property", false), ("uniform", false), ("multiplication", false)],
        ),
        entry(
            "chain-4",
            Module,
            "Z: 4",
            &[
                ("strongly_topf", true),
                ("uniserial", true),
                ("ultraconnected", true),
                ("uniform", true),
                ("colocal", true),
                ("comultiplication", true),
            ],
        ),
        entry(
            "mixed-8-3",
            Module,
            "Z: 8,3",
            &[("topf", true), ("uniserial", false), ("discrete", true)],
        ),
    ]
}

/// Modules of order at most 64 that the theorem battery runs over.
pub fn battery_modules() -> Vec<&'static str> {
    vec![
        "Z: 2",
        "Z: 4",
        "Z: 6",
        "Z: 8",
        "Z: 9",
        "Z: 12",
        "Z: 16",
        "Z: 27",
        "Z: 30",
        "Z: 2,2",
        "Z: 2,3",
        "Z: 2,3,5",
        "Z: 2,4",
        "Z: 4,3",
        "Z: 8,3",
        "Z: 2,2,2",
        "Z: 2,9",
        "Z: 3,3",
        "Z: 4,4",
        "Z: 2,8",
        "Z: 4,9",
        "Z: 32",
        "Z: 64",
        "Z: 5,5",
        "Z: 3,9",
        "Z: 2,2,3",
        "Z: 2,2,4",
        "Z: 4,16",
        "Z: 2,4,8",
        "ring M2F2: regular",
        "ring M2F2: column",
        "ring M2F3: column",
        "ring M2F4: column",
        "ring Zmod:8: regular",
        "ring Zmod:12: regular",
        "ring Zmod:30: regular",
        "ring Zmod:16: regular",
        "ring F4: regular",
    ]
}

/// Rings whose ideal lattices join the lattice corpus.
pub fn battery_rings() -> Vec<&'static str> {
    vec!["Zmod:12", "Zmod:8", "Zmod:30", "Zmod:2", "F4", "M2F2", "M2F3"]
}

const MIDDLE_NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// Lattice from a strict order on `k` middle elements given as
/// `below[i]` = elements strictly above `i`. Bounds are added around it.
fn bounded(k: usize, above: &[Vec<usize>]) -> Option<FinLattice> {
    let n = k + 2;
    let mut labels = vec!["0".to_string()];
    labels.extend(MIDDLE_NAMES[..k].iter().map(|s| s.to_string()));
    labels.push("1".into());
    let mut up = vec![ElemSet::full(n)];
    for i in 0..k {
        let mut s = ElemSet::from_indices(n, above[i].iter().map(|&j| j + 1));
        s.insert(i + 1);
        s.insert(n - 1);
        up.push(s);
    }
    up.push(ElemSet::singleton(n, n - 1));
    FinLattice::from_order(labels, up).ok()
}

fn transitive_closure(k: usize, rel: &mut [Vec<bool>]) {
    for m in 0..k {
        for i in 0..k {
            if rel[i][m] {
                for j in 0..k {
                    if rel[m][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Every lattice with exactly `n ≥ 2` elements, one per isomorphism class,
/// in a fixed order.
pub fn lattices_of_size(n: usize) -> Vec<FinLattice> {
    assert!(n >= 2, "a bounded lattice with X ≠ ∅ has at least two elements");
    let k = n - 2;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let perms = permutations(k);
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rel = vec![vec![false; k]; k];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rel[i][j] = true;
            }
        }
        let mut closed = rel.clone();
        transitive_closure(k, &mut closed);
        if closed != rel {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for i in 0..k {
                    for j in 0..k {
                        if rel[i][j] {
                            code |= 1 << (p[i] * k + p[j]);
                        }
                    }
                }
                code
            })
            .min()
            .unwrap_or(0);
        if !seen.insert(canonical) {
            continue;
        }
        let above: Vec<Vec<usize>> = (0..k).map(|i| (0..k).filter(|&j| rel[i][j]).collect()).collect();
        if let Some(l) = bounded(k, &above) {
            out.push(l);
        }
    }
    out
}

/// Every lattice with `2..=max_n` elements.
pub fn small_lattices(max_n: usize) -> Vec<FinLattice> {
    (2..=max_n).flat_map(lattices_of_size).collect()
}

/// Every non-empty `X` avoiding the top.
pub fn all_point_sets(l: &FinLattice) -> Vec<ElemSet> {
    let candidates: Vec<usize> = (0..l.len()).filter(|&a| a != l.top()).collect();
    (1u64..(1 << candidates.len()))
        .map(|mask| {
            ElemSet::from_indices(
                l.len(),
                candidates
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &a)| a),
            )
        })
        .collect()
}

/// `count` random lattices with at most `max_n` elements, each with a
/// random non-empty point set.
pub fn random_lattices(count: usize, max_n: usize, seed: u64) -> Vec<(FinLattice, ElemSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_k = max_n.saturating_sub(2).min(MIDDLE_NAMES.len());
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(0..=max_k);
        let density: f64 = rng.gen_range(0.15..0.7);
        let mut rel = vec![vec![false; k]; k];
        for i in 0..k {
            for j in i + 1..k {
                rel[i][j] = rng.gen_bool(density);
            }
        }
        transitive_closure(k, &mut rel);
        let above: Vec<Vec<usize>> = (0..k).map(|i| (0..k).filter(|&j| rel[i][j]).collect()).collect();
        let Some(l) = bounded(k, &above) else {
            continue;
        };
        let mut x = l.empty_set();
        while x.is_empty() {
            for a in 0..l.len() {
                if a != l.top() && rng.gen_bool(0.5) {
                    x.insert(a);
                }
            }
        }
        out.push((l, x));
    }
    out
}
