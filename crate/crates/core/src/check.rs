//! Pass/fail bookkeeping for exhaustive property checks, and the
//! deterministic subset sampler used when exhaustive scans are too large.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::PointSet;

/// Subset scans are exhaustive up to this many points by default.
pub const DEFAULT_SUBSET_CAP: usize = 15;
/// Number of random subsets drawn beyond the structured ones.
pub const RANDOM_SUBSETS: usize = 1000;
const MAX_STORED_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    /// Records one instance; the witness is rendered only on failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_STORED_FAILURES {
                self.failures.push(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_STORED_FAILURES {
                self.failures.push(f);
            }
        }
    }
}

/// Subsets of `0..width`: all of them when `width ≤ cap`, otherwise every
/// singleton, every pair, the full set and [`RANDOM_SUBSETS`] random subsets
/// drawn from a ChaCha stream seeded with `seed`. The empty set comes first
/// in the exhaustive case only.
pub fn subset_sample(width: usize, cap: usize, seed: u64) -> Vec<PointSet> {
    if width <= cap && width < 63 {
        return (0..1u64 << width)
            .map(|mask| PointSet::from_mask(width, mask))
            .collect();
    }
    let mut out: Vec<PointSet> = (0..width).map(|i| PointSet::singleton(width, i)).collect();
    for i in 0..width {
        for j in i + 1..width {
            out.push(PointSet::from_indices(width, [i, j]));
        }
    }
    out.push(PointSet::full(width));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SUBSETS {
        out.push(PointSet::from_indices(
            width,
            (0..width).filter(|_| rng.gen_bool(0.5)),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_below_cap() {
        let s = subset_sample(4, 15, 0);
        assert_eq!(s.len(), 16);
        assert!(s[0].is_empty());
    }

    #[test]
    fn sampled_above_cap_is_deterministic() {
        let a = subset_sample(20, 15, 7);
        let b = subset_sample(20, 15, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 20 + 190 + 1 + RANDOM_SUBSETS);
        assert_ne!(subset_sample(20, 15, 8), a);
    }

    #[test]
    fn report_counts() {
        let mut r = CheckReport::new("x");
        r.record(true, || unreachable!());
        r.record(false, || "w".into());
        assert_eq!((r.checked, r.failed), (2, 1));
        assert!(!r.passed());
    }
}
