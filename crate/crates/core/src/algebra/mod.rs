//! Finite rings, finite modules and their first-submodule spectra.

pub mod module;
pub mod ring;
pub mod spectrum;
pub mod submodules;

pub use module::{parse_module_spec, Coefficients, FiniteModule, ZCoefficients, DEFAULT_MAX_ORDER};
pub use ring::{FiniteRing, IdealKind, IdealLattice};
pub use spectrum::{Consistency, Topf};
pub use submodules::{AnnIdeal, SubmoduleLattice};

use crate::bits::ElemSet;

/// `A + B` for additive subgroups `A` and `B` of a group on `0..len`.
///
/// Walks cosets of the larger subgroup, so the cost is `|A + B|` rather than
/// `|A|·|B|`.
pub(crate) fn subgroup_sum(len: usize, a: &ElemSet, b: &ElemSet, add: impl Fn(usize, usize) -> usize) -> ElemSet {
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut out = ElemSet::empty(len);
    for y in small.iter() {
        // y already covered means its whole coset is
        if out.contains(y) {
            continue;
        }
        for x in big.iter() {
            out.insert(add(x, y));
        }
    }
    out
}
