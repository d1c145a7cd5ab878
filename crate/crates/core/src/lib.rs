//! Reductions from cardinality constraints over spectral expanders to
//! perfect-matching instances, together with degree-bounded polynomial
//! calculus decision and sum-of-squares certificate verification.
//!
//! The crate is organised around the stages of the reduction:
//!
//! * [`graph`] — graph representation, generators, spectral gaps, and
//!   expander mixing checks;
//! * [`partition`] — resampling-based vertex partitions with per-vertex
//!   neighbourhood windows;
//! * [`embed`] — odd-subdivision topological embeddings of a small
//!   pattern graph inside an induced subgraph;
//! * [`matching`] — blossom perfect matchings, Tutte-style component
//!   audits, and regular spanning subgraphs via gadget reduction;
//! * [`constraints`] — polynomial encodings of cardinality constraints,
//!   affine restrictions, normalization, and equivalence;
//! * [`refute`] — degree-bounded polynomial calculus over prime fields,
//!   exact sum-of-squares certificate checking, and a numerical
//!   pseudo-expectation probe;
//! * [`pipeline`] — the end-to-end construction mapping a cardinality
//!   instance onto a perfect-matching instance by an affine restriction,
//!   plus experiment harness and report export.

pub mod constraints;
pub mod embed;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod matching;
pub mod partition;
pub mod pipeline;
pub mod refute;

pub use constraints::{ConstraintSystem, PolyEquation, Restriction, VariableId};
pub use embed::{Embedding, SubdivisionSpec};
pub use error::{Error, Result};
pub use graph::{Graph, SpectralReport};
pub use matching::{FactorSubgraph, Matching};
pub use partition::Partition;
pub use pipeline::{PipelineConfig, PipelineReport};
pub use refute::{PCResult, PseudoExpectation, SoSCertificate};
