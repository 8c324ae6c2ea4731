//! `firstfit`: exact solvers, verifiers, generators, reductions and FPT
//! routines for first-fit colorings.
//!
//! Exit codes: 0 yes/success, 1 no, 2 usage or input error, 3 cap or
//! budget exceeded, 4 input contract breach.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use firstfit::coloring::{sample_first_fit, GreedyTrace};
use firstfit::exact::{
    self, b_chromatic_core_order_with_cap, grundy_number_with_cap, partial_grundy_number_centered_with_cap,
    partial_grundy_number_with_cap, rooted_grundy_certificate_with_cap,
};
use firstfit::fpt::{
    solve_almost_bounded_degree_report, solve_ktt_free, FptOutcome, KttConfig, PracticalOverrides, StarAudit,
    ThresholdMode,
};
use firstfit::generators::{GadgetFamily, GadgetSpec};
use firstfit::io::{
    certificate_to_json_value, graph_to_json_value, parse_certificate, parse_graph, write_graph, GraphFormat,
    SCHEMA_VERSION,
};
use firstfit::props::{run_suite, Suite};
use firstfit::reductions::{
    gridtiling_certificate, mcsi_solution_certificate, mis_solution_certificate, reduce_gridtiling_to_bcore,
    reduce_mcsi_to_grundy, reduce_mis_to_rooted_grundy, GridTilingInstance, McsiInstance, McsiMode, MisInstance,
    ReductionOutput,
};
use firstfit::{random, verify, Error, FptProblem, Graph, StarOrCliqueWitness, Verdict, WitnessCertificate};

#[derive(Parser)]
#[command(name = "firstfit", version, about = "First-fit (Grundy) coloring toolkit")]
struct Cli {
    /// Seed for randomized samplers and generators.
    #[arg(long, global = true, env = "FIRSTFIT_SEED", default_value_t = 0)]
    seed: u64,
    /// Vertex cap for the exact solvers (defaults depend on the solver).
    #[arg(long, global = true, env = "FIRSTFIT_CAP", value_parser = clap::value_parser!(u64).range(1..=64))]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file (JSON or DIMACS); `-` or absent reads stdin.
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Decision {
    /// Answer "is the value at least K?" through the exit code.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartialMethod {
    Partition,
    Centered,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Mis,
    Mcsi,
    Gridtiling,
}

#[derive(Clone, Copy, ValueEnum)]
enum FptMode {
    Faithful,
    Practical,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Grundy number with a certificate.
    Grundy {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        decision: Decision,
    },
    /// Largest color first-fit can give one vertex.
    RootedGrundy {
        #[command(flatten)]
        input: Input,
        /// Vertex id (0-based).
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        decision: Decision,
    },
    /// Exact partial Grundy number.
    PartialGrundy {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = PartialMethod::Partition)]
        method: PartialMethod,
        #[command(flatten)]
        decision: Decision,
    },
    /// Largest b-chromatic core order.
    Bcore {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        decision: Decision,
    },
    /// First-fit on a given ordering, or on random orderings.
    Firstfit {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 0-based vertex ids.
        #[arg(long, conflicts_with = "sample")]
        order: Option<String>,
        /// Number of random orderings to sample instead.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Checks a certificate against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Builds a gadget graph.
    Gen {
        /// A gadget family, or `random` (params n, p as a percentage).
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Builds the reduced instance of a source problem.
    Reduce {
        #[arg(long, value_enum)]
        from: Source,
        #[command(flatten)]
        input: Input,
        /// MCSI only: materialize the top tree at this order.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Builds and verifies the certificate a source solution induces.
    Certify {
        #[arg(long, value_enum)]
        from: Source,
        #[command(flatten)]
        input: Input,
        /// 1-based vertex ids (`3,5,8`) or, for grid tiling, row-major
        /// pairs (`1:2,1:3,...`). Searched for when absent.
        #[arg(long)]
        solution: Option<String>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// FPT decision on K_{t,t}-free or almost bounded-degree inputs.
    Fpt {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        problem: FptProblem,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, value_enum, default_value_t = FptMode::Practical)]
        mode: FptMode,
        /// N(t, 1/k); required in faithful mode.
        #[arg(long)]
        n_t_eps: Option<u64>,
        /// Run the almost bounded-degree search directly with this `d`.
        #[arg(long)]
        d: Option<usize>,
        /// Allowed number of vertices above degree `d` (default: observed).
        #[arg(long, requires = "d")]
        s: Option<usize>,
    },
    /// Runs invariant suites and reports pass/fail per check.
    Props {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Sweeps gadget families and reports sizes, Grundy values, timings.
    Bench {
        /// Restrict to one family.
        #[arg(long)]
        family: Option<GadgetFamily>,
        /// Random orderings for graphs too large for the exact solver.
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
}

/// Error plus the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } | Error::BudgetExceeded(_) => 3,
            Error::ContractBreach { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Run = Result<u8, Failure>;

fn read_text(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    Ok(parse_graph(&read_text(input.input.as_ref())?)?)
}

fn emit(seed: u64, command: &str, body: Value) {
    let mut doc = Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert("command".into(), json!(command));
    doc.insert("seed".into(), json!(seed));
    if let Value::Object(m) = body {
        doc.extend(m);
    }
    write_out(&(serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON output") + "\n"));
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn write_out(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: cannot write output: {e}");
        }
    }
}

fn decide(value: usize, k: Option<usize>) -> u8 {
    match k {
        Some(k) if value < k => 1,
        _ => 0,
    }
}

fn cap(cli_cap: Option<u64>, default: usize) -> usize {
    cli_cap.map_or(default, |c| c as usize)
}

fn one_based(ids: impl IntoIterator<Item = usize>) -> Vec<usize> {
    ids.into_iter().map(|v| v + 1).collect()
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Valid => json!({ "valid": true }),
        Verdict::Invalid(why) => json!({ "valid": false, "violation": why.to_string() }),
    }
}

fn solve(name: &str, value: usize, cert: &WitnessCertificate, seed: u64, k: Option<usize>) -> u8 {
    let mut body = json!({ "value": value, "certificate": certificate_to_json_value(cert) });
    if let Some(k) = k {
        body["k"] = json!(k);
        body["decision"] = json!(value >= k);
    }
    emit(seed, name, body);
    decide(value, k)
}

fn run(cli: Cli) -> Run {
    let seed = cli.seed;
    match cli.command {
        Command::Grundy { input, decision } => {
            let g = read_graph(&input)?;
            let r = grundy_number_with_cap(&g, cap(cli.cap, exact::GRUNDY_CAP))?;
            Ok(solve("grundy", r.value, &r.certificate, seed, decision.k))
        }
        Command::RootedGrundy {
            input,
            vertex,
            decision,
        } => {
            let g = read_graph(&input)?;
            let c = rooted_grundy_certificate_with_cap(&g, vertex, cap(cli.cap, exact::ROOTED_CAP))?;
            Ok(solve("rooted-grundy", c.order(), &c, seed, decision.k))
        }
        Command::PartialGrundy {
            input,
            method,
            decision,
        } => {
            let g = read_graph(&input)?;
            let r = match method {
                PartialMethod::Partition => {
                    partial_grundy_number_with_cap(&g, cap(cli.cap, exact::PARTIAL_PARTITION_CAP))?
                }
                PartialMethod::Centered => {
                    partial_grundy_number_centered_with_cap(&g, cap(cli.cap, exact::PARTIAL_CENTERED_CAP))?
                }
            };
            Ok(solve("partial-grundy", r.value, &r.certificate, seed, decision.k))
        }
        Command::Bcore { input, decision } => {
            let g = read_graph(&input)?;
            let r = b_chromatic_core_order_with_cap(&g, cap(cli.cap, exact::BCORE_CAP))?;
            Ok(solve("bcore", r.value, &r.certificate, seed, decision.k))
        }
        Command::Firstfit { input, order, sample } => {
            let g = read_graph(&input)?;
            if let Some(samples) = sample {
                let r = sample_first_fit(&g, samples, seed);
                emit(
                    seed,
                    "firstfit",
                    json!({ "samples": r.samples, "max_colors": r.max_colors, "best_ordering": r.best_ordering }),
                );
                return Ok(0);
            }
            let ordering: Vec<usize> = match order {
                Some(text) => text
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| usage(format!("bad vertex id `{s}` in --order"))))
                    .collect::<Result<_, _>>()?,
                None => (0..g.n()).collect(),
            };
            let trace = GreedyTrace::run(&g, ordering)?;
            emit(
                seed,
                "firstfit",
                json!({
                    "order": trace.ordering,
                    "colors": trace.colors_in_order(),
                    "colors_by_vertex": trace.resulting.colors,
                    "max_color": trace.resulting.max_color(),
                }),
            );
            Ok(0)
        }
        Command::Verify { graph, cert } => {
            let g = parse_graph(&read_text(Some(&graph))?)?;
            let c = parse_certificate(&read_text(Some(&cert))?)?;
            let v = verify(&g, &c)?;
            let mut body = verdict_json(&v);
            body["kind"] = json!(c.kind.name());
            body["order"] = json!(c.order());
            emit(seed, "verify", body);
            Ok(if v.is_valid() { 0 } else { 1 })
        }
        Command::Gen { family, params, format } => {
            let format: GraphFormat = format.parse()?;
            let g = if family == "random" {
                gen_random(&params, seed)?
            } else {
                let family: GadgetFamily = family.parse()?;
                GadgetSpec::parse_params(family, &params)?.build()?
            };
            match format {
                GraphFormat::Json => {
                    let mut v = graph_to_json_value(&g);
                    v["seed"] = json!(seed);
                    write_out(&(serde_json::to_string(&v).expect("JSON output") + "\n"));
                }
                other => write_out(&write_graph(&g, other)),
            }
            Ok(0)
        }
        Command::Reduce { from, input, budget } => {
            let text = read_text(input.input.as_ref())?;
            let body = match from {
                Source::Mis => {
                    let inst = MisInstance::from_json(&text)?;
                    let red = reduce_mis_to_rooted_grundy(&inst)?;
                    json!({
                        "graph": graph_to_json_value(&red.graph),
                        "target": red.target,
                        "root": red.root + 1,
                        "equivalence_preserving": true,
                    })
                }
                Source::Mcsi => {
                    let inst = McsiInstance::from_json(&text)?;
                    reduction_json(&reduce_mcsi_to_grundy(&inst, mcsi_mode(budget))?)
                }
                Source::Gridtiling => {
                    no_budget(budget)?;
                    let inst = GridTilingInstance::from_json(&text)?;
                    reduction_json(&reduce_gridtiling_to_bcore(&inst)?)
                }
            };
            emit(seed, "reduce", body);
            Ok(0)
        }
        Command::Certify {
            from,
            input,
            solution,
            budget,
        } => certify(
            from,
            &read_text(input.input.as_ref())?,
            solution.as_deref(),
            budget,
            seed,
        ),
        Command::Fpt {
            input,
            problem,
            k,
            t,
            mode,
            n_t_eps,
            d,
            s,
        } => {
            let g = read_graph(&input)?;
            if let Some(d) = d {
                let s = s.unwrap_or_else(|| (0..g.n()).filter(|&v| g.degree(v) > d).count());
                let r = solve_almost_bounded_degree_report(&g, k, d, s, problem)?;
                let decision = r.certificate.is_some();
                emit(
                    seed,
                    "fpt",
                    json!({
                        "problem": problem.to_string(),
                        "k": k,
                        "decision": decision,
                        "certificate": r.certificate.as_ref().map(certificate_to_json_value),
                        "audit": {
                            "branch": "almost-bounded",
                            "d": d,
                            "s": s,
                            "high_degree": one_based(r.high_degree.iter()),
                            "family_size": r.family_size,
                            "candidates_tested": r.candidates_tested,
                        },
                    }),
                );
                return Ok(if decision { 0 } else { 1 });
            }
            let mode = match mode {
                FptMode::Faithful => ThresholdMode::Faithful {
                    n_t_eps: n_t_eps.ok_or_else(|| usage("faithful mode needs --n-t-eps"))?.into(),
                },
                FptMode::Practical => {
                    let mut o = PracticalOverrides::for_params(t, k);
                    if let Some(n) = n_t_eps {
                        o.n_t_eps = n as usize;
                    }
                    ThresholdMode::Practical(o)
                }
            };
            let config = KttConfig {
                mode,
                ..KttConfig::practical(t, k)
            };
            let out = solve_ktt_free(&g, k, t, problem, &config)?;
            emit(seed, "fpt", fpt_json(&out, problem, k, t));
            Ok(if out.decision { 0 } else { 1 })
        }
        Command::Props { suite } => {
            let report = run_suite(suite, seed);
            for c in &report.checks {
                eprintln!(
                    "{} {}: {} ({} cases)",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.suite,
                    c.name,
                    c.cases
                );
            }
            let passed = report.passed();
            let mut body = serde_json::to_value(&report).expect("report JSON");
            body["passed"] = json!(passed);
            body["suite"] = json!(suite.name());
            emit(seed, "props", body);
            Ok(if passed { 0 } else { 1 })
        }
        Command::Bench { family, samples } => {
            let rows = bench(family, samples, seed, cap(cli.cap, exact::GRUNDY_CAP))?;
            emit(seed, "bench", json!({ "rows": rows }));
            Ok(0)
        }
    }
}

fn gen_random(params: &str, seed: u64) -> Result<Graph, Failure> {
    let mut n = None;
    let mut p = 50usize;
    for item in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("parameter `{item}` is not key=value")))?;
        let value: usize = value
            .parse()
            .map_err(|_| usage(format!("parameter `{item}` is not an integer")))?;
        match key {
            "n" => n = Some(value),
            "p" if value <= 100 => p = value,
            _ => return Err(usage(format!("random graphs take n and p (percent), got `{item}`"))),
        }
    }
    let n = n.ok_or_else(|| usage("random graphs need n"))?;
    Ok(random::gnp(n, p as f64 / 100.0, &mut random::seeded(seed)))
}

fn mcsi_mode(budget: Option<usize>) -> McsiMode {
    budget.map_or(McsiMode::Faithful, McsiMode::Budget)
}

fn no_budget(budget: Option<usize>) -> Result<(), Failure> {
    match budget {
        Some(_) => Err(usage("--budget applies to MCSI only")),
        None => Ok(()),
    }
}

fn reduction_json<R>(out: &ReductionOutput<R>) -> Value {
    json!({
        "graph": graph_to_json_value(&out.graph),
        "target": out.target,
        "equivalence_preserving": out.equivalence_preserving,
        "audit": Value::Object(out.audit.clone()),
    })
}

fn parse_ids(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(usage(format!("bad 1-based vertex id `{s}`"))),
        })
        .collect()
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (x, y) = s
                .split_once(':')
                .ok_or_else(|| usage(format!("pair `{s}` is not x:y")))?;
            match (x.trim().parse(), y.trim().parse()) {
                (Ok(x), Ok(y)) => Ok((x, y)),
                _ => Err(usage(format!("pair `{s}` is not x:y"))),
            }
        })
        .collect()
}

fn no_solution(seed: u64, from: &str) -> u8 {
    emit(
        seed,
        "certify",
        json!({ "source": from, "solution": null, "valid": false }),
    );
    1
}

fn certify(from: Source, text: &str, solution: Option<&str>, budget: Option<usize>, seed: u64) -> Run {
    match from {
        Source::Mis => {
            no_budget(budget)?;
            let inst = MisInstance::from_json(text)?;
            let sol = match solution {
                Some(s) => parse_ids(s)?,
                None => match inst.find_solution() {
                    Some(s) => s,
                    None => return Ok(no_solution(seed, "mis")),
                },
            };
            let red = reduce_mis_to_rooted_grundy(&inst)?;
            let cert = mis_solution_certificate(&inst, &red, &sol)?;
            let v = verify(&red.graph, &cert)?;
            let mut body = verdict_json(&v);
            body["source"] = json!("mis");
            body["solution"] = json!(one_based(sol));
            body["target"] = json!(red.target);
            body["root"] = json!(red.root + 1);
            body["certificate"] = certificate_to_json_value(&cert);
            emit(seed, "certify", body);
            Ok(if v.is_valid() { 0 } else { 1 })
        }
        Source::Mcsi => {
            let inst = McsiInstance::from_json(text)?;
            let sol = match solution {
                Some(s) => parse_ids(s)?,
                None => match inst.find_solution() {
                    Some(s) => s,
                    None => return Ok(no_solution(seed, "mcsi")),
                },
            };
            let out = reduce_mcsi_to_grundy(&inst, mcsi_mode(budget))?;
            let certs = mcsi_solution_certificate(&inst, &out, &sol)?;
            emit(
                seed,
                "certify",
                json!({
                    "source": "mcsi",
                    "solution": one_based(sol),
                    "target": out.target,
                    "equivalence_preserving": out.equivalence_preserving,
                    "valid": true,
                    "color_one": one_based(certs.color_one.iter()),
                    "trees": certs.trees.iter().map(|t| json!({
                        "key": t.key.to_string(),
                        "rooted_value": t.rooted_value,
                        "certificate": certificate_to_json_value(&t.certificate),
                    })).collect::<Vec<_>>(),
                    "f_stage": certificate_to_json_value(&certs.f_stage),
                    "full": certs.full.as_ref().map(certificate_to_json_value),
                }),
            );
            Ok(0)
        }
        Source::Gridtiling => {
            no_budget(budget)?;
            let inst = GridTilingInstance::from_json(text)?;
            let sol = match solution {
                Some(s) => parse_pairs(s)?,
                None => match inst.find_solution() {
                    Some(s) => s,
                    None => return Ok(no_solution(seed, "gridtiling")),
                },
            };
            let out = reduce_gridtiling_to_bcore(&inst)?;
            let cert = gridtiling_certificate(&inst, &out, &sol)?;
            let v = verify(&out.graph, &cert)?;
            let mut body = verdict_json(&v);
            body["source"] = json!("gridtiling");
            body["solution"] = json!(sol.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>());
            body["target"] = json!(out.target);
            body["order"] = json!(cert.order());
            body["wiring_consistent"] = out.audit.get("wiring_consistent").cloned().unwrap_or(Value::Null);
            body["certificate"] = certificate_to_json_value(&cert);
            emit(seed, "certify", body);
            Ok(if v.is_valid() { 0 } else { 1 })
        }
    }
}

fn witness_json(w: &StarOrCliqueWitness) -> Value {
    match w {
        StarOrCliqueWitness::Clique(c) => json!({ "clique": one_based(c.iter()) }),
        StarOrCliqueWitness::Stars { centers, leaf_sets } => json!({
            "centers": one_based(centers.iter().copied()),
            "leaf_sets": leaf_sets.iter().map(|l| one_based(l.iter())).collect::<Vec<_>>(),
        }),
    }
}

fn star_audit_json(a: &StarAudit) -> Value {
    json!({
        "initial_independent": a.initial_independent,
        "steps": a.steps.iter().map(|s| json!({
            "center": s.center + 1,
            "neighborhood": s.neighborhood,
            "leaf_pattern": one_based(s.leaf_pattern.iter().copied()),
            "leaves": s.leaves,
            "heavy": s.heavy,
            "heavy_bound": s.heavy_bound,
            "bound_checked": s.bound_checked,
        })).collect::<Vec<_>>(),
    })
}

fn fpt_json(out: &FptOutcome, problem: FptProblem, k: usize, t: usize) -> Value {
    json!({
        "problem": problem.to_string(),
        "k": k,
        "t": t,
        "decision": out.decision,
        "certificate": out.certificate.as_ref().map(certificate_to_json_value),
        "witness": out.witness.as_ref().map(witness_json),
        "audit": {
            "branch": serde_json::to_value(out.branch).expect("branch JSON"),
            "high_degree": out.high_degree,
            "degree_threshold": out.degree_threshold,
            "f": out.f,
            "g": out.g,
            "ktt_checked": out.ktt_checked,
            "star": out.star_audit.as_ref().map(star_audit_json),
            "fallback_reason": out.fallback_reason,
            "family_size": out.family_size,
            "candidates_tested": out.candidates_tested,
        },
    })
}

/// Parameter sweeps per family, kept small enough for a quick run.
fn sweep(family: GadgetFamily) -> Vec<GadgetSpec> {
    let spec = GadgetSpec::new(family);
    match family {
        GadgetFamily::BinomialTree => (1..=6).map(|k| spec.clone().with("k", k)).collect(),
        GadgetFamily::PrunedBinomialTree => (2..=5)
            .map(|k| spec.clone().with("k", k).with("i", k).with("x", 1))
            .collect(),
        GadgetFamily::HalfGraph | GadgetFamily::AntiMatching => (1..=6).map(|t| spec.clone().with("t", t)).collect(),
        GadgetFamily::HalfGraphPath | GadgetFamily::HalfGraphCycle => [(2, 2), (2, 4), (3, 8), (4, 16)]
            .into_iter()
            .map(|(l, t)| spec.clone().with("l", l).with("t", t))
            .collect(),
        GadgetFamily::StarForest => (2..=4)
            .map(|k| spec.clone().with("count", k).with("leaves", k))
            .collect(),
        GadgetFamily::T5EdgeTree => vec![spec],
    }
}

fn bench(only: Option<GadgetFamily>, samples: usize, seed: u64, cap: usize) -> Result<Vec<Value>, Failure> {
    let families: Vec<GadgetFamily> = only.map_or_else(|| GadgetFamily::ALL.to_vec(), |f| vec![f]);
    let mut rows = Vec::new();
    for family in families {
        for spec in sweep(family) {
            let g = match spec.build() {
                Ok(g) => g,
                // Some sweeps cross family-specific preconditions.
                Err(Error::Precondition(_)) => continue,
                Err(e) => return Err(e.into()),
            };
            let start = Instant::now();
            let (value, method) = if g.n() <= cap {
                (grundy_number_with_cap(&g, cap)?.value, "exact")
            } else {
                (sample_first_fit(&g, samples, seed).max_colors, "sampled")
            };
            rows.push(json!({
                "family": family.name(),
                "params": spec.params,
                "n": g.n(),
                "m": g.edge_count(),
                "grundy": value,
                "method": method,
                "millis": start.elapsed().as_secs_f64() * 1000.0,
            }));
        }
    }
    Ok(rows)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
