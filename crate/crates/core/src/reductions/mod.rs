//! Builders for the hardness reductions and forward certificate synthesis.

use std::fmt;

use serde_json::{Map, Value};

use crate::graph::Graph;

pub mod gridtiling;
pub mod mcsi;
pub mod mis;

pub use gridtiling::{
    gridtiling_certificate, gridtiling_certificate_unchecked, reduce_gridtiling_to_bcore, GridRole, GridTilingInstance,
};
pub use mcsi::{mcsi_solution_certificate, reduce_mcsi_to_grundy, McsiCertificates, McsiInstance, McsiMode, McsiRole};
pub use mis::{mis_solution_certificate, reduce_mis_to_rooted_grundy, MisInstance, MisReduction};

/// A reduced instance: the graph, the order to reach, one typed role per
/// vertex and an audit of the construction.
#[derive(Clone, Debug)]
pub struct ReductionOutput<R> {
    pub graph: Graph,
    pub target: usize,
    pub roles: Vec<R>,
    /// False when the output was shrunk below the faithful parameters and
    /// no longer encodes the source instance.
    pub equivalence_preserving: bool,
    pub audit: Map<String, Value>,
}

impl<R: fmt::Display> ReductionOutput<R> {
    pub(crate) fn new(graph: Graph, target: usize, roles: Vec<R>) -> Self {
        let mut graph = graph;
        for (v, r) in roles.iter().enumerate() {
            graph.set_role(v, r.to_string());
        }
        ReductionOutput {
            graph,
            target,
            roles,
            equivalence_preserving: true,
            audit: Map::new(),
        }
    }

    /// Vertices whose role satisfies `pred`.
    pub fn vertices_where(&self, pred: impl Fn(&R) -> bool) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| pred(r))
            .map(|(v, _)| v)
            .collect()
    }
}
