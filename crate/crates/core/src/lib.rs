//! Finite topological lattices and the first-submodule spectrum.
//!
//! The crate decides when the varieties `V(a) = {p ∈ X : a ≤ p}` of a finite
//! lattice form the closed sets of a topology on a designated point set `X`,
//! and applies this to the dual submodule lattice of a finite module with
//! `X` the first (prime-as-a-module) submodules.

pub mod algebra;
pub mod bits;
pub mod check;
pub mod corpus;
pub mod error;
pub mod galois;
pub mod input;
pub mod lattice;
pub mod report;
pub mod suite;
pub mod topology;

pub use bits::{ElemSet, PointSet};
pub use error::{Error, Result};
pub use galois::{ClosedElements, SpectrumContext};
pub use lattice::{FinLattice, LatticeSpec};
pub use topology::{TopSpace, TopSpaceSpec};
