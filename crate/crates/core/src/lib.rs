//! k-forcing and k-power domination on simple graphs.
//!
//! The crate provides the synchronous closure processes, exact minimum-set solvers, the
//! contraction / pendant-augmentation / partition transforms with the bounds they yield,
//! generators for Sierpiński graphs and the tightness gadgets, and a verifier that evaluates
//! the known inequalities between these parameters on concrete graphs.

pub mod enumerate;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod propagation;
pub mod set;
pub mod solvers;
pub mod transforms;
pub mod verifier;

pub use enumerate::SearchConfig;
pub use error::{Error, Result};
pub use graph::{ContractionResult, DegreeStats, Graph};
pub use propagation::{Mode, PropagationTrace};
pub use set::{IdMap, VertexSet};
pub use solvers::{Parameter, SolveResult};
