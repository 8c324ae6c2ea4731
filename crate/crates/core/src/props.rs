//! Invariant suites run by `firstfit props`. Each suite is a list of named
//! checks over generated or seeded random instances; a check passes when
//! every instance it covers satisfies the property.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::{first_fit, verify, verify_grundy, WitnessKind};
use crate::error::{Error, Result};
use crate::exact::{
    b_chromatic_core_order, b_chromatic_core_order_by_enumeration, grundy_number, grundy_number_by_orderings,
    grundy_witness_search, ordering_from_certificate, partial_grundy_number, rooted_grundy,
};
use crate::fpt::{
    separating_family, solve_almost_bounded_degree, solve_ktt_free, star_forest_extract, thresholds, FptProblem,
    KttConfig, Magnitude, PracticalOverrides, ThresholdMode,
};
use crate::generators::{
    anti_matching, binomial_tree, half_graph, half_graph_path, is_2k2_free_across, layer_vertex, star_forest,
};
use crate::graph::{false_twin_classes, induced_subgraph, Graph, VertexSet};
use crate::random;
use crate::reductions::{
    gridtiling_certificate, mis_solution_certificate, reduce_gridtiling_to_bcore, reduce_mis_to_rooted_grundy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    HalfGraphBounds,
    Binomial,
    AntiMatching,
    Twins,
    Oracle,
    Separating,
    MisReduction,
    Stars,
    Thresholds,
    Fpt,
    GridTiling,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::HalfGraphBounds,
        Suite::Binomial,
        Suite::AntiMatching,
        Suite::Twins,
        Suite::Oracle,
        Suite::Separating,
        Suite::MisReduction,
        Suite::Stars,
        Suite::Thresholds,
        Suite::Fpt,
        Suite::GridTiling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HalfGraphBounds => "half-graph-bounds",
            Suite::Binomial => "binomial",
            Suite::AntiMatching => "anti-matching",
            Suite::Twins => "twins",
            Suite::Oracle => "oracle",
            Suite::Separating => "separating",
            Suite::MisReduction => "mis-reduction",
            Suite::Stars => "stars",
            Suite::Thresholds => "thresholds",
            Suite::Fpt => "fpt",
            Suite::GridTiling => "grid-tiling",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-").to_ascii_lowercase();
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == norm)
            .ok_or_else(|| Error::Precondition(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// Instances examined.
    pub cases: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropsReport {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl PropsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Collects one check: counts cases and keeps the first failure.
struct Probe {
    cases: usize,
    failure: Option<String>,
}

impl Probe {
    fn new() -> Self {
        Probe {
            cases: 0,
            failure: None,
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, suite: Suite, name: &str) -> Check {
        Check {
            suite,
            name: name.to_string(),
            passed: self.failure.is_none(),
            cases: self.cases,
            detail: self.failure.unwrap_or_else(|| "ok".into()),
        }
    }
}

fn run_check(suite: Suite, name: &str, body: impl FnOnce(&mut Probe) -> Result<()>) -> Check {
    let mut probe = Probe::new();
    match body(&mut probe) {
        Ok(()) => probe.finish(suite, name),
        Err(e) => Check {
            suite,
            name: name.to_string(),
            passed: false,
            cases: probe.cases,
            detail: format!("error: {e}"),
        },
    }
}

/// Runs one suite (or all of them) with the given seed.
pub fn run_suite(suite: Suite, seed: u64) -> PropsReport {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut checks = Vec::new();
    for s in suites {
        checks.extend(match s {
            Suite::HalfGraphBounds => half_graph_bounds(),
            Suite::Binomial => binomial(),
            Suite::AntiMatching => anti_matchings(),
            Suite::Twins => twins(seed),
            Suite::Oracle => oracle(seed),
            Suite::Separating => separating(),
            Suite::MisReduction => mis_reduction(seed),
            Suite::Stars => stars(seed),
            Suite::Thresholds => threshold_values(),
            Suite::Fpt => fpt(seed),
            Suite::GridTiling => grid_tiling(seed),
            Suite::All => unreachable!("expanded above"),
        });
    }
    PropsReport { seed, checks }
}

fn half_graph_bounds() -> Vec<Check> {
    let s = Suite::HalfGraphBounds;
    vec![
        run_check(s, "half-graph grundy at most 3 (t <= 6)", |p| {
            for t in 1..=6 {
                let v = grundy_number(&half_graph(t)?)?.value;
                p.case(v <= 3, || format!("t={t}: grundy {v}"));
            }
            Ok(())
        }),
        run_check(s, "length-two path grundy at most 5 (t <= 4)", |p| {
            for t in 1..=4 {
                let v = grundy_number(&half_graph_path(2, t)?)?.value;
                p.case(v <= 5, || format!("t={t}: grundy {v}"));
            }
            Ok(())
        }),
        run_check(s, "consecutive layers are 2K2-free across", |p| {
            for l in 1..=4 {
                for t in 1..=6 {
                    let g = half_graph_path(l, t)?;
                    for layer in 1..=l {
                        let a: VertexSet = (1..=t).map(|lv| layer_vertex(t, layer, lv)).collect();
                        let b: VertexSet = (1..=t).map(|lv| layer_vertex(t, layer + 1, lv)).collect();
                        p.case(is_2k2_free_across(&g, &a, &b), || format!("l={l} t={t} layer {layer}"));
                    }
                }
            }
            Ok(())
        }),
        run_check(s, "sampled first-fit on longer paths stays below 4^l", |p| {
            for (l, cap) in [(3, 64usize), (4, 53)] {
                let g = half_graph_path(l, 12)?;
                let r = crate::coloring::sample_first_fit(&g, 2000, 17);
                p.case(r.max_colors <= cap, || format!("l={l}: {} colors", r.max_colors));
            }
            Ok(())
        }),
    ]
}

fn binomial() -> Vec<Check> {
    let s = Suite::Binomial;
    vec![
        run_check(s, "T_k has 2^(k-1) vertices and grundy k (k <= 5)", |p| {
            for k in 1..=5 {
                let g = binomial_tree(k)?;
                let v = grundy_number(&g)?.value;
                p.case(g.n() == 1 << (k - 1) && v == k, || {
                    format!("k={k}: n={} grundy {v}", g.n())
                });
            }
            Ok(())
        }),
        run_check(s, "class prefixes of T_k certificates verify", |p| {
            for k in 1..=5 {
                let g = binomial_tree(k)?;
                let cert = grundy_number(&g)?.certificate;
                for j in 0..=k {
                    let ok = verify_grundy(&g, &cert.truncate(j))?.is_valid();
                    p.case(ok, || format!("k={k}: prefix {j}"));
                }
            }
            Ok(())
        }),
    ]
}

fn anti_matchings() -> Vec<Check> {
    vec![run_check(
        Suite::AntiMatching,
        "anti-matching grundy at least t (t <= 5)",
        |p| {
            for t in 1..=5 {
                let v = grundy_number(&anti_matching(t)?)?.value;
                p.case(v >= t, || format!("t={t}: grundy {v}"));
            }
            Ok(())
        },
    )]
}

fn twins(seed: u64) -> Vec<Check> {
    let s = Suite::Twins;
    vec![
        run_check(s, "removing a planted false twin keeps grundy", |p| {
            let mut rng = random::seeded(seed);
            for n in (3..=9).cycle().take(60) {
                let (g, (_, w)) = random::with_planted_twin(n, 0.5, &mut rng);
                let keep = VertexSet::full(n).difference(&VertexSet::from([w]));
                let h = induced_subgraph(&g, &keep)?.graph;
                let (a, b) = (grundy_number(&g)?.value, grundy_number(&h)?.value);
                p.case(a == b, || format!("n={n}: {a} vs {b}"));
            }
            Ok(())
        }),
        run_check(s, "twin reduction keeps grundy", |p| {
            let mut rng = random::seeded(seed ^ 1);
            for n in (3..=9).cycle().take(60) {
                let g = random::gnp(n, 0.4, &mut rng);
                let red = false_twin_classes(&g).reduced.graph;
                let (a, b) = (grundy_number(&g)?.value, grundy_number(&red)?.value);
                p.case(a == b, || format!("n={n}: {a} vs {b}"));
            }
            Ok(())
        }),
    ]
}

fn oracle(seed: u64) -> Vec<Check> {
    let s = Suite::Oracle;
    let corpus = |salt: u64, max_n: usize, count: usize| {
        let mut rng = random::seeded(seed ^ salt);
        (0..count)
            .map(|i| random::gnp(1 + i % max_n, [0.25, 0.5, 0.75][i % 3], &mut rng))
            .collect::<Vec<Graph>>()
    };
    vec![
        run_check(s, "grundy equals the ordering oracle", |p| {
            for g in corpus(2, 8, 120) {
                let (a, b) = (grundy_number(&g)?.value, grundy_number_by_orderings(&g)?);
                p.case(a == b, || format!("n={} m={}: {a} vs {b}", g.n(), g.edge_count()));
            }
            Ok(())
        }),
        run_check(s, "b-core order equals the enumeration oracle", |p| {
            for g in corpus(3, 7, 120) {
                let (a, b) = (
                    b_chromatic_core_order(&g)?.value,
                    b_chromatic_core_order_by_enumeration(&g)?,
                );
                p.case(a == b, || format!("n={} m={}: {a} vs {b}", g.n(), g.edge_count()));
            }
            Ok(())
        }),
        run_check(s, "grundy and b-core are below partial grundy", |p| {
            for g in corpus(4, 10, 80) {
                let gr = grundy_number(&g)?.value;
                let pg = partial_grundy_number(&g)?.value;
                let bc = b_chromatic_core_order(&g)?.value;
                p.case(gr <= pg && bc <= pg, || format!("n={}: {gr}, {bc} vs {pg}", g.n()));
            }
            Ok(())
        }),
        run_check(s, "rooted grundy is at most grundy", |p| {
            for g in corpus(5, 9, 60) {
                let gr = grundy_number(&g)?.value;
                for v in 0..g.n() {
                    let r = rooted_grundy(&g, v)?;
                    p.case(r <= gr, || format!("n={} v={v}: {r} vs {gr}", g.n()));
                }
            }
            Ok(())
        }),
        run_check(s, "optimal classes replay under first-fit", |p| {
            for g in corpus(6, 10, 80) {
                let cert = grundy_number(&g)?.certificate;
                let order = ordering_from_certificate(&cert);
                let sub = induced_subgraph(&g, &cert.support)?;
                let local: Vec<usize> = order.iter().map(|&v| sub.old_to_new[v].expect("in support")).collect();
                let replay = first_fit(&sub.graph, &local)?;
                let lifted: Vec<VertexSet> = replay.classes().iter().map(|c| sub.lift(c)).collect();
                p.case(lifted == cert.classes, || format!("n={}", g.n()));
            }
            Ok(())
        }),
        run_check(s, "witness search agrees with grundy", |p| {
            for g in corpus(7, 9, 60) {
                let gr = grundy_number(&g)?.value;
                // Order-k witnesses can need 2^(k-1) vertices; stay within budget.
                for k in 1..=(gr + 1).min(5) {
                    let found = grundy_witness_search(&g, k)?;
                    let ok = found.is_some() == (k <= gr)
                        && found.map_or(Ok(true), |c| verify(&g, &c).map(|v| v.is_valid()))?;
                    p.case(ok, || format!("n={} k={k} grundy {gr}", g.n()));
                }
            }
            Ok(())
        }),
        run_check(s, "b-colorings read as partial grundy certificates", |p| {
            for g in corpus(8, 10, 60) {
                let cert = b_chromatic_core_order(&g)?.certificate;
                let ok = verify(&g, &cert.reinterpret(WitnessKind::PartialGrundy))?.is_valid();
                p.case(ok, || format!("n={}", g.n()));
            }
            Ok(())
        }),
    ]
}

fn separating() -> Vec<Check> {
    vec![run_check(
        Suite::Separating,
        "separating families separate (n <= 10, a, b <= 3)",
        |p| {
            for n in 1..=10 {
                for a in 0..=3 {
                    for b in 0..=3 {
                        let f = separating_family(n, a, b)?;
                        let bad = f.verify_exhaustive();
                        p.case(bad.is_none(), || format!("n={n} a={a} b={b}: {bad:?}"));
                    }
                }
            }
            Ok(())
        },
    )]
}

fn mis_reduction(seed: u64) -> Vec<Check> {
    vec![run_check(
        Suite::MisReduction,
        "rooted target reached iff a multicolored IS exists",
        |p| {
            let mut rng = random::seeded(seed ^ 9);
            for i in 0..80 {
                let k = 1 + i % 3;
                let n = k + i % (8 - k);
                let inst = random::mis_instance(n, k, 0.5, &mut rng)?;
                let red = reduce_mis_to_rooted_grundy(&inst)?;
                let reached = rooted_grundy(&red.graph, red.root)? >= red.target;
                let sol = inst.find_solution();
                let cert_ok = match &sol {
                    Some(s) => verify(&red.graph, &mis_solution_certificate(&inst, &red, s)?)?.is_valid(),
                    None => true,
                };
                p.case(reached == sol.is_some() && cert_ok, || format!("n={n} k={k}"));
            }
            Ok(())
        },
    )]
}

fn stars(seed: u64) -> Vec<Check> {
    vec![run_check(
        Suite::Stars,
        "extracted stars verify as induced kK_{1,k}",
        |p| {
            let mut rng = random::seeded(seed ^ 11);
            for k in 2..=3 {
                for extra in 0..6 {
                    let mut g = star_forest(k + extra % 2, k + extra / 2)?;
                    let base = g.n();
                    // Isolated padding and a few random edges among leaves that
                    // keep the graph K22-free.
                    g.add_vertices(extra);
                    let centers: VertexSet = (0..k + extra % 2).map(|s| s * (k + extra / 2 + 1)).collect();
                    for _ in 0..extra {
                        let (u, v) = (
                            rand::Rng::gen_range(&mut rng, 0..base),
                            rand::Rng::gen_range(&mut rng, 0..base),
                        );
                        if u != v && !centers.contains(u) && !centers.contains(v) && !g.has_edge(u, v) {
                            g.add_edge(u, v)?;
                            if crate::graph::has_biclique(&g, 2, u128::MAX)?.is_some() {
                                g.remove_edge(u, v);
                            }
                        }
                    }
                    let leaves = VertexSet::full(g.n()).difference(&centers);
                    let over = PracticalOverrides {
                        f: 1,
                        g: 1,
                        m: 1,
                        n_t_eps: usize::MAX,
                    };
                    let th = thresholds(2, k, &ThresholdMode::Practical(over))?;
                    match star_forest_extract(&g, &centers, &leaves, k, 2, &th) {
                        Ok((w, _)) => {
                            let structural = w.verify(&g, k);
                            let cert = verify(&g, &w.to_certificate(WitnessKind::BColoring))?.is_valid();
                            p.case(structural.is_ok() && cert, || {
                                format!("k={k} extra={extra}: {structural:?}")
                            });
                        }
                        // A starved step is a reported outcome, not an unsound one.
                        Err(Error::BestEffortFailed(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
            Ok(())
        },
    )]
}

fn threshold_values() -> Vec<Check> {
    vec![run_check(
        Suite::Thresholds,
        "f(1,1) = 16, f(2,2) = 2^24, M(1,1) = 8",
        |p| {
            let faithful = ThresholdMode::Faithful { n_t_eps: 1u32.into() };
            let a = thresholds(1, 1, &faithful)?;
            let b = thresholds(2, 2, &faithful)?;
            p.case(a.f_tk == Magnitude::exact(16u32), || format!("f(1,1) = {}", a.f_tk));
            p.case(b.f_tk == Magnitude::exact(1u64 << 24), || {
                format!("f(2,2) = {}", b.f_tk)
            });
            p.case(a.m == Magnitude::exact(8u32), || format!("M(1,1) = {}", a.m));
            Ok(())
        },
    )]
}

fn exact_decision(g: &Graph, k: usize, problem: FptProblem) -> Result<bool> {
    Ok(match problem {
        FptProblem::PartialGrundy => partial_grundy_number(g)?.value >= k,
        FptProblem::BCore => crate::exact::b_chromatic_core_order_with_cap(g, 14)?.value >= k,
    })
}

fn fpt(seed: u64) -> Vec<Check> {
    let s = Suite::Fpt;
    vec![
        run_check(s, "almost-bounded search matches the exact solvers", |p| {
            let mut rng = random::seeded(seed ^ 13);
            for i in 0..40 {
                let n = 6 + i % 5;
                let k = 1 + i % 3;
                let sh = i % 3;
                let problem = if i % 2 == 0 {
                    FptProblem::BCore
                } else {
                    FptProblem::PartialGrundy
                };
                let g = random::almost_bounded(n, 3, sh, 0.35, 0.6, &mut rng);
                let got = solve_almost_bounded_degree(&g, k, 3, sh, problem)?;
                let want = exact_decision(&g, k, problem)?;
                let ok = got.is_some() == want && got.map_or(Ok(true), |c| verify(&g, &c).map(|v| v.is_valid()))?;
                p.case(ok, || format!("n={n} k={k} s={sh} {problem}: want {want}"));
            }
            Ok(())
        }),
        run_check(s, "K22-free pipeline matches the exact solvers", |p| {
            let mut rng = random::seeded(seed ^ 17);
            for i in 0..30 {
                let n = 6 + i % 5;
                let k = 1 + i % 3;
                let problem = if i % 2 == 0 {
                    FptProblem::BCore
                } else {
                    FptProblem::PartialGrundy
                };
                let g = random::ktt_free(n, 2, 0.4, &mut rng);
                let out = solve_ktt_free(&g, k, 2, problem, &KttConfig::practical(2, k))?;
                let want = exact_decision(&g, k, problem)?;
                let cert_ok = out
                    .certificate
                    .as_ref()
                    .map_or(Ok(true), |c| verify(&g, c).map(|v| v.is_valid()))?;
                p.case(out.decision == want && cert_ok, || {
                    format!("n={n} k={k} {problem}: want {want}")
                });
            }
            Ok(())
        }),
    ]
}

fn grid_tiling(seed: u64) -> Vec<Check> {
    vec![run_check(
        Suite::GridTiling,
        "k = 3 certificates verify at order 126",
        |p| {
            let mut rng = random::seeded(seed ^ 19);
            for _ in 0..2 {
                let (inst, sol) = random::gridtiling_yes_instance(3, 2, 2, &mut rng)?;
                let out = reduce_gridtiling_to_bcore(&inst)?;
                let cert = gridtiling_certificate(&inst, &out, &sol)?;
                let ok = cert.order() == 126 && verify(&out.graph, &cert)?.is_valid();
                p.case(ok, || format!("order {}", cert.order()));
            }
            Ok(())
        },
    )]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for s in [
            Suite::HalfGraphBounds,
            Suite::Binomial,
            Suite::Thresholds,
            Suite::AntiMatching,
        ] {
            let r = run_suite(s, 1);
            assert!(r.passed(), "{:?}", r.checks);
        }
    }
}
