//! Exact combinatorics for embedded graphs.
//!
//! Graphs are stored as rotation systems ([`embed::RotationGraph`]): a cyclic
//! neighbour order at each vertex, which fixes an orientable embedding and
//! therefore a set of faces. On top of that the crate provides
//!
//! * [`detect`]: searches for `K5`, `K5` minus an edge, `W4`, cycles of a given
//!   length and hamiltonian cycles;
//! * [`color`]: chromatic number, list coloring, exhaustive `f`-choosability
//!   and the structural degree-choosability test;
//! * [`reduce`]: the five reducible configurations used against a minimal
//!   counterexample to 4-choosability on the torus;
//! * [`discharge`]: initial charges, the six transfer rules, exact
//!   conservation checks and the per-element final-charge checklist;
//! * [`audit`]: literal checks of the structural face/vertex statements;
//! * [`families`]: the two sharpness families with torus rotation systems.
//!
//! Everything here is pure and allocation-only; file formats, reports and
//! the command line live in the `toroid` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod audit;
pub mod budget;
pub mod color;
pub mod detect;
pub mod discharge;
pub mod embed;
pub mod families;
pub mod gate;
pub mod reduce;

pub use budget::{Budget, BudgetExceeded};
pub use embed::{Element, EmbeddingSummary, Face, FaceSet, GraphError, RotationGraph};
