//! Exact solvers, verifiers, gadget generators, hardness reductions and
//! FPT routines for first-fit (Grundy) colorings and their relatives.

pub mod coloring;
pub mod error;
pub mod exact;
pub mod fpt;
pub mod generators;
pub mod graph;
pub mod io;
pub mod isomorphism;
pub mod props;
pub mod random;
pub mod reductions;

pub use coloring::{
    extend_partial_grundy, first_fit, sample_first_fit, verify, verify_b_coloring, verify_grundy,
    verify_partial_grundy, Coloring, GreedyTrace, SampleReport, Verdict, Violation, WitnessCertificate, WitnessKind,
};
pub use error::{Error, Result};
pub use exact::{
    b_chromatic_core_order, grundy_number, grundy_number_by_orderings, grundy_witness_search, partial_grundy_number,
    rooted_grundy, Caps, SolveResult,
};
pub use fpt::{solve_almost_bounded_degree, solve_ktt_free, FptProblem, StarOrCliqueWitness};
pub use graph::{induced_subgraph, Graph, VertexSet};
pub use isomorphism::{labeled_isomorphic, LabeledComponent};
pub use reductions::ReductionOutput;
