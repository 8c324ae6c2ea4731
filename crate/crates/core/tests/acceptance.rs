//! Acceptance run: twelve criteria, one PASS/FAIL line each.
//!
//! `cargo test -p firstfit-core --test acceptance -- 3 9` runs a subset.
//! Criterion 7 is known not to hold at k = 2 (the certificate cannot
//! close there); it is run as stated and its failure is expected. The
//! target fails if any other criterion fails, or if 7 stops failing.

use std::time::{Duration, Instant};

use firstfit::coloring::{sample_first_fit, verify, WitnessKind};
use firstfit::exact::{
    b_chromatic_core_order_with_cap, grundy_number, grundy_number_by_orderings, partial_grundy_number, rooted_grundy,
};
use firstfit::fpt::{
    separating_family, solve_almost_bounded_degree, solve_ktt_free, star_forest_extract, thresholds, FptProblem,
    KttConfig, Magnitude, PracticalOverrides, StarOrCliqueWitness, ThresholdMode,
};
use firstfit::generators::{anti_matching, binomial_tree, half_graph, half_graph_path, star_forest};
use firstfit::graph::{has_biclique, induced_subgraph, Graph, VertexSet};
use firstfit::random;
use firstfit::reductions::{
    gridtiling_certificate, mis_solution_certificate, reduce_gridtiling_to_bcore, reduce_mis_to_rooted_grundy,
    MisInstance,
};
use num_bigint::BigUint;
use rand::Rng;

const EXPECTED_FAILURES: &[usize] = &[7];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

type Criterion = (usize, &'static str, Duration, fn() -> Outcome);

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let criteria: [Criterion; 12] = [
        (1, "binomial trees", Duration::from_secs(10), c1_binomial),
        (2, "half-graph bounds", Duration::from_secs(60), c2_half_graphs),
        (
            3,
            "sampled half-graph path bounds",
            Duration::from_secs(300),
            c3_sampled_paths,
        ),
        (
            4,
            "anti-matching lower bound",
            Duration::from_secs(30),
            c4_anti_matching,
        ),
        (5, "grundy oracle agreement", Duration::from_secs(600), c5_oracle),
        (6, "false twin invariance", Duration::from_secs(300), c6_twins),
        (
            7,
            "grid tiling forward certificates at k = 2",
            Duration::from_secs(300),
            c7_grid_tiling,
        ),
        (
            8,
            "rooted grundy reduction equivalence",
            Duration::from_secs(600),
            c8_mis,
        ),
        (
            9,
            "FPT decisions match exact solvers",
            Duration::from_secs(1800),
            c9_fpt,
        ),
        (
            10,
            "separating family contract",
            Duration::from_secs(300),
            c10_separating,
        ),
        (11, "star extraction soundness", Duration::from_secs(300), c11_stars),
        (12, "threshold arithmetic", Duration::from_secs(5), c12_thresholds),
    ];
    let mut unexpected = Vec::new();
    for (id, name, limit, run) in criteria {
        if !args.is_empty() && !args.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let mut out = run();
        let took = start.elapsed();
        if took > limit {
            out.passed = false;
            out.detail = format!("{} (took {:.1?}, limit {:?})", out.detail, took, limit);
        }
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        let tag = match (out.passed, expected_fail) {
            (true, _) => "PASS",
            (false, true) => "FAIL (expected)",
            (false, false) => "FAIL",
        };
        println!("acceptance {id:>2} {tag}: {name}: {} [{:.2?}]", out.detail, took);
        if out.passed == expected_fail {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance status for criteria {unexpected:?}");
        std::process::exit(1);
    }
}

fn c1_binomial() -> Outcome {
    for k in 1..=5 {
        let g = binomial_tree(k).unwrap();
        let v = grundy_number(&g).unwrap().value;
        if g.n() != 1 << (k - 1) || v != k {
            return outcome(false, format!("T_{k}: {} vertices, grundy {v}", g.n()));
        }
    }
    outcome(true, "grundy(T_k) = k and |T_k| = 2^(k-1) for k = 1..5")
}

fn c2_half_graphs() -> Outcome {
    let mut worst = (0, 0);
    for t in 1..=6 {
        let v = grundy_number(&half_graph(t).unwrap()).unwrap().value;
        worst.0 = worst.0.max(v);
        if v > 3 {
            return outcome(false, format!("H_{{{t},{t}}} has grundy {v}"));
        }
    }
    for t in 1..=4 {
        let v = grundy_number(&half_graph_path(2, t).unwrap()).unwrap().value;
        worst.1 = worst.1.max(v);
        if v > 5 {
            return outcome(false, format!("path(2,{t}) has grundy {v}"));
        }
    }
    outcome(
        true,
        format!("max over H_(t,t) is {}, over path(2,t) is {}", worst.0, worst.1),
    )
}

fn c3_sampled_paths() -> Outcome {
    let mut worst = [0usize; 2];
    for (slot, (l, cap)) in [(3usize, 64usize), (4, 53)].into_iter().enumerate() {
        for t in 1..=30 {
            let g = half_graph_path(l, t).unwrap();
            let r = sample_first_fit(&g, 100_000, 1000 * l as u64 + t as u64);
            worst[slot] = worst[slot].max(r.max_colors);
            if r.max_colors > cap {
                return outcome(
                    false,
                    format!("path({l},{t}) reached {} colors (seed {})", r.max_colors, r.seed),
                );
            }
        }
    }
    outcome(
        true,
        format!(
            "10^5 orderings per t <= 30: max {} on l = 3, {} on l = 4",
            worst[0], worst[1]
        ),
    )
}

fn c4_anti_matching() -> Outcome {
    for t in 1..=5 {
        let v = grundy_number(&anti_matching(t).unwrap()).unwrap().value;
        if v < t {
            return outcome(false, format!("anti_matching({t}) has grundy {v}"));
        }
    }
    outcome(true, "grundy(anti_matching(t)) >= t for t = 1..5")
}

fn c5_oracle() -> Outcome {
    let mut rng = random::seeded(5);
    for i in 0..1000 {
        let n = 1 + rng.gen_range(0..9);
        let p = rng.gen_range(0.1..0.9);
        let g = random::gnp(n, p, &mut rng);
        let (a, b) = (
            grundy_number(&g).unwrap().value,
            grundy_number_by_orderings(&g).unwrap(),
        );
        if a != b {
            return outcome(false, format!("graph {i} (n={n}): solver {a}, orderings {b}"));
        }
    }
    outcome(true, "1000/1000 random graphs with n <= 9 agree")
}

fn c6_twins() -> Outcome {
    let mut rng = random::seeded(6);
    for i in 0..500 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.1..0.9);
        let (g, (_, w)) = random::with_planted_twin(n, p, &mut rng);
        let h = induced_subgraph(&g, &VertexSet::full(n).difference(&VertexSet::from([w])))
            .unwrap()
            .graph;
        let (a, b) = (grundy_number(&g).unwrap().value, grundy_number(&h).unwrap().value);
        if a != b {
            return outcome(false, format!("graph {i} (n={n}): {a} with twin, {b} without"));
        }
    }
    outcome(true, "500/500 planted twins leave grundy unchanged")
}

fn c7_grid_tiling() -> Outcome {
    let mut rng = random::seeded(7);
    let mut failures = 0;
    let mut first = None;
    for i in 0..50 {
        let n = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=6.min(n * n));
        let (inst, sol) = random::gridtiling_yes_instance(2, n, t, &mut rng).unwrap();
        let out = reduce_gridtiling_to_bcore(&inst).unwrap();
        let ok = match gridtiling_certificate(&inst, &out, &sol) {
            Ok(cert) => {
                let verdict = verify(&out.graph, &cert).unwrap();
                let ok = cert.order() == 56 && verdict.is_valid();
                if !ok && first.is_none() {
                    first = Some(format!("instance {i} (n={n}, t={t}): {verdict:?}"));
                }
                ok
            }
            Err(e) => {
                first.get_or_insert_with(|| format!("instance {i}: {e}"));
                false
            }
        };
        failures += usize::from(!ok);
    }
    if failures == 0 {
        outcome(true, "50/50 certificates verify at order 56")
    } else {
        outcome(
            false,
            format!(
                "{}/50 verify; first failure {}",
                50 - failures,
                first.unwrap_or_default()
            ),
        )
    }
}

/// All ordered splits of `0..n` into `k` consecutive (possibly empty)
/// parts.
fn consecutive_splits(n: usize, k: usize) -> Vec<Vec<VertexSet>> {
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        if cur.len() + 1 == k {
            cur.push((from..n).collect());
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for end in from..=n {
            cur.push((from..end).collect());
            rec(n, k, end, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn mis_case(inst: &MisInstance) -> Result<(), String> {
    let red = reduce_mis_to_rooted_grundy(inst).map_err(|e| e.to_string())?;
    let reached = rooted_grundy(&red.graph, red.root).map_err(|e| e.to_string())? >= red.target;
    let sol = inst.find_solution();
    if reached != sol.is_some() {
        return Err(format!("rooted reaches target: {reached}, solution: {sol:?}"));
    }
    if let Some(s) = sol {
        let cert = mis_solution_certificate(inst, &red, &s).map_err(|e| e.to_string())?;
        if !verify(&red.graph, &cert).map_err(|e| e.to_string())?.is_valid() {
            return Err("solution certificate does not verify".into());
        }
    }
    Ok(())
}

fn c8_mis() -> Outcome {
    let mut cases = 0usize;
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            for k in 1..=3 {
                for parts in consecutive_splits(n, k) {
                    let inst = MisInstance::new(g.clone(), parts).unwrap();
                    if let Err(e) = mis_case(&inst) {
                        return outcome(false, format!("n={n} mask={mask:#x} k={k}: {e}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    let mut rng = random::seeded(8);
    for i in 0..20_000 {
        let n = 7 + i % 2;
        let k = 1 + i % 3;
        let inst = random::mis_instance(n, k, rng.gen_range(0.2..0.8), &mut rng).unwrap();
        if let Err(e) = mis_case(&inst) {
            return outcome(false, format!("random instance {i} (n={n}, k={k}): {e}"));
        }
        cases += 1;
    }
    outcome(
        true,
        format!("{cases} instances: every graph on <= 6 vertices with every consecutive split into k <= 3 parts, plus 20000 random at n = 7, 8"),
    )
}

fn exact_decision(g: &Graph, k: usize, problem: FptProblem) -> bool {
    match problem {
        FptProblem::PartialGrundy => partial_grundy_number(g).unwrap().value >= k,
        FptProblem::BCore => b_chromatic_core_order_with_cap(g, 14).unwrap().value >= k,
    }
}

fn c9_fpt() -> Outcome {
    let mut rng = random::seeded(9);
    let mut yes = [0usize; 2];
    for i in 0..500 {
        let problem = if i % 2 == 0 {
            FptProblem::BCore
        } else {
            FptProblem::PartialGrundy
        };
        // The partition oracle for partial Grundy is capped at 12 vertices.
        let n = if problem == FptProblem::BCore {
            rng.gen_range(12..=14)
        } else {
            12
        };
        // Small k is almost always a yes; weight toward k = 3.
        let k = [1, 2, 3, 3, 3][rng.gen_range(0..5)];
        let s = rng.gen_range(0..=2);
        // Densities reach down to near-matchings so that both answers occur.
        let g = random::almost_bounded(n, 3, s, rng.gen_range(0.0..0.3), rng.gen_range(0.0..0.7), &mut rng);
        let got = solve_almost_bounded_degree(&g, k, 3, s, problem).unwrap();
        let want = exact_decision(&g, k, problem);
        if got.is_some() != want || !got.as_ref().is_none_or(|c| verify(&g, c).unwrap().is_valid()) {
            return outcome(
                false,
                format!("almost-bounded instance {i} (n={n}, k={k}, s={s}, {problem}): exact {want}"),
            );
        }
        yes[0] += usize::from(want);
    }
    for i in 0..500 {
        let problem = if i % 2 == 0 {
            FptProblem::BCore
        } else {
            FptProblem::PartialGrundy
        };
        let n = rng.gen_range(8..=12);
        let k = [1, 2, 3, 3, 3][rng.gen_range(0..5)];
        let g = random::ktt_free(n, 2, rng.gen_range(0.0..0.5), &mut rng);
        let out = solve_ktt_free(&g, k, 2, problem, &KttConfig::practical(2, k)).unwrap();
        let want = exact_decision(&g, k, problem);
        let cert_ok = out
            .certificate
            .as_ref()
            .is_none_or(|c| verify(&g, c).unwrap().is_valid());
        if out.decision != want || !cert_ok {
            return outcome(
                false,
                format!("K22-free instance {i} (n={n}, k={k}, {problem}): exact {want}"),
            );
        }
        yes[1] += usize::from(want);
    }
    outcome(
        true,
        format!(
            "500/500 almost-bounded ({} yes) and 500/500 K22-free ({} yes) agree",
            yes[0], yes[1]
        ),
    )
}

fn c10_separating() -> Outcome {
    let mut families = 0;
    for n in 1..=12 {
        for a in 0..=3 {
            for b in 0..=3 {
                let f = separating_family(n, a, b).unwrap();
                if let Some((x, y)) = f.verify_exhaustive() {
                    return outcome(false, format!("n={n} a={a} b={b}: {x:?} not separated from {y:?}"));
                }
                families += 1;
            }
        }
    }
    outcome(true, format!("{families} families verified over all disjoint pairs"))
}

fn check_stars(g: &Graph, k: usize, w: &StarOrCliqueWitness, counts: &mut [usize; 2]) -> Result<(), String> {
    w.verify(g, k)?;
    for kind in [WitnessKind::BColoring, WitnessKind::PartialGrundy] {
        if !verify(g, &w.to_certificate(kind))
            .map_err(|e| e.to_string())?
            .is_valid()
        {
            return Err(format!("{kind:?} certificate does not verify"));
        }
    }
    counts[usize::from(matches!(w, StarOrCliqueWitness::Clique(_)))] += 1;
    Ok(())
}

fn c11_stars() -> Outcome {
    let mut counts = [0usize; 2];
    let mut rng = random::seeded(11);
    let permissive = |k: usize| {
        thresholds(
            2,
            k,
            &ThresholdMode::Practical(PracticalOverrides {
                f: 1,
                g: 1,
                m: 1,
                n_t_eps: usize::MAX,
            }),
        )
        .unwrap()
    };
    // Random K22-free backgrounds with a planted kK_{1,k} attached.
    for i in 0..200 {
        let k = 2 + i % 2;
        let bg = random::ktt_free(10 + i % 8, 2, 0.2, &mut rng);
        let stars = star_forest(k, k + i % 3).unwrap();
        let mut g = bg.clone();
        let offset = g.append(&stars);
        let centers: VertexSet = (0..k).map(|s| offset + s * (k + i % 3 + 1)).collect();
        // Sparse links from leaves into the background, kept only while
        // the graph stays K22-free.
        for leaf in offset..g.n() {
            if centers.contains(leaf) || !rng.gen_bool(0.3) {
                continue;
            }
            let u = rng.gen_range(0..bg.n());
            g.add_edge(u, leaf).unwrap();
            if has_biclique(&g, 2, u128::MAX).unwrap().is_some() {
                g.remove_edge(u, leaf);
            }
        }
        let y = VertexSet::full(g.n()).difference(&centers);
        match star_forest_extract(&g, &centers, &y, k, 2, &permissive(k)) {
            Ok((w, _)) => {
                if let Err(e) = check_stars(&g, k, &w, &mut counts) {
                    return outcome(false, format!("planted instance {i}: {e}"));
                }
            }
            Err(firstfit::Error::BestEffortFailed(_)) => {}
            Err(e) => return outcome(false, format!("planted instance {i}: {e}")),
        }
    }
    // The full pipeline on star forests padded with isolated vertices.
    for k in 2..=3 {
        for pad in 0..4 {
            let mut g = star_forest(k, k).unwrap();
            g.add_vertices(pad);
            let config = KttConfig {
                mode: ThresholdMode::Practical(PracticalOverrides {
                    f: 1,
                    g: 1,
                    m: 1,
                    n_t_eps: usize::MAX,
                }),
                biclique_budget: firstfit::graph::DEFAULT_BICLIQUE_BUDGET,
            };
            let out = solve_ktt_free(&g, k, 2, FptProblem::BCore, &config).unwrap();
            match &out.witness {
                Some(w) => {
                    if let Err(e) = check_stars(&g, k, w, &mut counts) {
                        return outcome(false, format!("kK_(1,k) k={k} pad={pad}: {e}"));
                    }
                }
                None => return outcome(false, format!("kK_(1,k) k={k} pad={pad}: no star output")),
            }
        }
    }
    if counts[0] + counts[1] == 0 {
        return outcome(false, "no star or clique outputs were produced");
    }
    outcome(
        true,
        format!("{} star and {} clique outputs, all verified", counts[0], counts[1]),
    )
}

fn c12_thresholds() -> Outcome {
    let faithful = ThresholdMode::Faithful {
        n_t_eps: BigUint::from(1u32),
    };
    let f22 = thresholds(2, 2, &faithful).unwrap().f_tk;
    let f11 = thresholds(1, 1, &faithful).unwrap().f_tk;
    // Direct evaluation of 2^(2t + k(t k^t + t)).
    let direct = |t: u32, k: u32| BigUint::from(2u32).pow(2 * t + k * (t * k.pow(t) + t));
    let ok = f22 == Magnitude::Exact(direct(2, 2))
        && f22 == Magnitude::exact(1u64 << 24)
        && f11 == Magnitude::Exact(direct(1, 1))
        && f11 == Magnitude::exact(16u32);
    outcome(ok, format!("f(2,2) = {f22}, f(1,1) = {f11}"))
}
