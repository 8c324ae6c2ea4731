//! Fixed workloads shared by the criterion benchmarks. All inputs are
//! seeded, so every run measures the same graphs.

use firstfit::generators::{binomial_tree, half_graph_path};
use firstfit::random::{self, seeded};
use firstfit::reductions::{GridTilingInstance, MisInstance};
use firstfit::Graph;

pub const SEED: u64 = 2024;

pub fn binomial(k: usize) -> Graph {
    binomial_tree(k).expect("binomial tree")
}

pub fn layered_half_graphs(l: usize, t: usize) -> Graph {
    half_graph_path(l, t).expect("half-graph path")
}

pub fn dense_random(n: usize) -> Graph {
    random::gnp(n, 0.5, &mut seeded(SEED))
}

pub fn sparse_random(n: usize) -> Graph {
    random::gnp(n, 0.2, &mut seeded(SEED))
}

/// K_{2,2}-free graph for the FPT pipeline.
pub fn c4_free(n: usize) -> Graph {
    random::ktt_free(n, 2, 0.3, &mut seeded(SEED))
}

/// Degree at most 3 outside the first two vertices.
pub fn almost_bounded(n: usize) -> Graph {
    random::almost_bounded(n, 3, 2, 0.2, 0.5, &mut seeded(SEED))
}

pub fn mis(n: usize, k: usize) -> MisInstance {
    random::mis_instance(n, k, 0.3, &mut seeded(SEED)).expect("MIS instance")
}

pub fn grid_tiling(k: usize, n: usize, t: usize) -> GridTilingInstance {
    random::gridtiling_yes_instance(k, n, t, &mut seeded(SEED))
        .expect("grid instance")
        .0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(binomial(5).n(), 16);
        assert_eq!(dense_random(12), dense_random(12));
        assert!((2..20).all(|v| almost_bounded(20).degree(v) <= 3));
        assert_eq!(grid_tiling(3, 3, 2).k, 3);
        assert_eq!(mis(10, 3).k(), 3);
    }
}
