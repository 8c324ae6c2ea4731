//! Seeded random instances for property checks and benchmarks. Every
//! generator takes the RNG explicitly; [`seeded`] fixes the stream.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{has_biclique, Graph, VertexSet};
use crate::reductions::{GridTilingInstance, MisInstance};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("distinct in-range endpoints");
            }
        }
    }
    g
}

/// `G(n - 1, p)` plus a false twin of a random vertex, appended as the
/// last vertex. Returns the graph and the twin pair.
pub fn with_planted_twin(n: usize, p: f64, rng: &mut impl Rng) -> (Graph, (usize, usize)) {
    assert!(n >= 2, "need room for a twin");
    let base = gnp(n - 1, p, rng);
    let v = rng.gen_range(0..n - 1);
    let (g, w) = crate::generators::duplicate_vertex(&base, v).expect("v in range");
    (g, (v, w))
}

/// Random graph in which all vertices but the first `s` have degree at
/// most `d`. The first `s` vertices see each other vertex with
/// probability `p_high`; low edges are tried in random order.
pub fn almost_bounded(n: usize, d: usize, s: usize, p_low: f64, p_high: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    let s = s.min(n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        let high = u < s || v < s;
        let p = if high { p_high } else { p_low };
        if !rng.gen_bool(p) {
            continue;
        }
        let fits = |x: usize, g: &Graph| x < s || g.degree(x) < d;
        if fits(u, &g) && fits(v, &g) {
            g.add_edge(u, v).expect("valid pair");
        }
    }
    g
}

/// Random `K_{t,t}`-free graph: candidate edges are offered in random
/// order and kept with probability `p` unless they close a `K_{t,t}`.
pub fn ktt_free(n: usize, t: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if !rng.gen_bool(p) {
            continue;
        }
        g.add_edge(u, v).expect("valid pair");
        if has_biclique(&g, t, u128::MAX).expect("unbounded search").is_some() {
            g.remove_edge(u, v);
        }
    }
    g
}

/// `G(n, p)` split into `k` random parts, none empty when `n >= k`.
pub fn mis_instance(n: usize, k: usize, p: f64, rng: &mut impl Rng) -> Result<MisInstance> {
    let g = gnp(n, p, rng);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut parts = vec![VertexSet::new(); k];
    for (i, v) in order.into_iter().enumerate() {
        // Round-robin first so that every part is nonempty when n >= k.
        let part = if i < k { i } else { rng.gen_range(0..k) };
        parts[part].insert(v);
    }
    MisInstance::new(g, parts)
}

/// Grid Tiling yes-instance: a planted solution with row values `x_i`
/// and column values `y_j`, padded with random distinct pairs up to `t`
/// per cell.
pub fn gridtiling_yes_instance(
    k: usize,
    n: usize,
    t: usize,
    rng: &mut impl Rng,
) -> Result<(GridTilingInstance, Vec<(usize, usize)>)> {
    let t = t.clamp(1, n * n);
    let xs: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
    let ys: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
    let all: Vec<(usize, usize)> = (1..=n).flat_map(|x| (1..=n).map(move |y| (x, y))).collect();
    let mut cells = Vec::with_capacity(k * k);
    let mut solution = Vec::with_capacity(k * k);
    for &x in &xs {
        for &y in &ys {
            let planted = (x, y);
            let mut rest: Vec<(usize, usize)> = all.iter().copied().filter(|&p| p != planted).collect();
            rest.shuffle(rng);
            let mut cell = vec![planted];
            cell.extend(rest.into_iter().take(t - 1));
            cell.shuffle(rng);
            cells.push(cell);
            solution.push(planted);
        }
    }
    Ok((GridTilingInstance::new(k, n, cells)?, solution))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = seeded(7);
        let g = almost_bounded(14, 3, 2, 0.4, 0.6, &mut rng);
        assert!((2..14).all(|v| g.degree(v) <= 3));
        let g = ktt_free(12, 2, 0.5, &mut rng);
        assert!(has_biclique(&g, 2, u128::MAX).unwrap().is_none());
        let (g, (v, w)) = with_planted_twin(8, 0.5, &mut rng);
        assert_eq!(g.neighbors(v), g.neighbors(w));
        let (inst, sol) = gridtiling_yes_instance(2, 3, 6, &mut rng).unwrap();
        assert_eq!(inst.t(), 6);
        inst.check_solution(&sol).unwrap();
    }

    #[test]
    fn same_seed_same_graph() {
        assert_eq!(gnp(9, 0.5, &mut seeded(3)), gnp(9, 0.5, &mut seeded(3)));
    }
}
