//! FPT algorithms for partial Grundy and b-chromatic core on graphs with
//! few high-degree vertices and on `K_{t,t}`-free graphs.

use serde::Serialize;

use crate::coloring::{verify, WitnessCertificate};
use crate::error::{Error, Result};
use crate::graph::{has_biclique, Graph, VertexSet, DEFAULT_BICLIQUE_BUDGET};

pub mod almost_bounded;
pub mod extract;
pub mod separating;
pub mod thresholds;

pub use almost_bounded::{
    solve_almost_bounded_degree, solve_almost_bounded_degree_report, AlmostBoundedReport, FptProblem,
};
pub use extract::{
    anti_biclique_extract, clique_or_multipartite_is, star_forest_extract, ExtractMode, LeafOutcome, StarAudit,
    StarOrCliqueWitness,
};
pub use separating::{separating_family, SeparatingFamily};
pub use thresholds::{thresholds, Magnitude, PracticalOverrides, ThresholdMode, Thresholds};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KttConfig {
    pub mode: ThresholdMode,
    /// Budget for the upfront `K_{t,t}` check; past it the input is taken
    /// on trust.
    pub biclique_budget: u128,
}

impl KttConfig {
    pub fn practical(t: usize, k: usize) -> Self {
        KttConfig {
            mode: ThresholdMode::Practical(PracticalOverrides::for_params(t, k)),
            biclique_budget: DEFAULT_BICLIQUE_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FptBranch {
    /// Enough high-degree vertices: an induced star forest or clique.
    StarForest,
    /// Few high-degree vertices.
    AlmostBounded,
    /// Star extraction failed in practical mode; the bounded-degree
    /// search ran on the same degree split.
    AlmostBoundedFallback,
}

#[derive(Clone, Debug)]
pub struct FptOutcome {
    pub decision: bool,
    pub certificate: Option<WitnessCertificate>,
    pub witness: Option<StarOrCliqueWitness>,
    pub branch: FptBranch,
    pub high_degree: usize,
    pub degree_threshold: String,
    pub f: String,
    pub g: String,
    /// False when the `K_{t,t}` check exceeded its budget.
    pub ktt_checked: bool,
    pub star_audit: Option<StarAudit>,
    pub fallback_reason: Option<String>,
    pub family_size: usize,
    pub candidates_tested: usize,
}

/// Decides whether a `K_{t,t}`-free graph has an order-`k` witness. With
/// `X` the vertices of degree at least `g + f`: if `|X| ≥ f` the witness
/// is an extracted star forest (or clique), otherwise the almost-bounded
/// search runs with `d = g + f - 1` and `s = |X|`.
pub fn solve_ktt_free(g: &Graph, k: usize, t: usize, problem: FptProblem, config: &KttConfig) -> Result<FptOutcome> {
    if t == 0 {
        return Err(Error::Precondition("t must be positive".into()));
    }
    let ktt_checked = match has_biclique(g, t, config.biclique_budget) {
        Ok(Some((a, b))) => {
            return Err(Error::ContractBreach {
                reason: format!("input contains K_{{{t},{t}}}"),
                witness: Some((a, b)),
            })
        }
        Ok(None) => true,
        Err(Error::BudgetExceeded(_)) => false,
        Err(e) => return Err(e),
    };
    let th = thresholds(t, k.max(1), &config.mode)?;
    let threshold = th.degree_threshold();
    let x: VertexSet = (0..g.n()).filter(|&v| threshold.at_most(g.degree(v))).collect();
    let mut out = FptOutcome {
        decision: false,
        certificate: None,
        witness: None,
        branch: FptBranch::AlmostBounded,
        high_degree: x.len(),
        degree_threshold: threshold.to_string(),
        f: th.f_tk.to_string(),
        g: th.g_tk.to_string(),
        ktt_checked,
        star_audit: None,
        fallback_reason: None,
        family_size: 0,
        candidates_tested: 0,
    };

    if k > 0 && th.f_tk.at_most(x.len()) {
        let y = VertexSet::full(g.n()).difference(&x);
        match star_forest_extract(g, &x, &y, k, t, &th) {
            Ok((w, audit)) => {
                let cert = w.to_certificate(problem.kind());
                if !verify(g, &cert)?.is_valid() {
                    return Err(Error::Precondition(
                        "star forest certificate failed verification".into(),
                    ));
                }
                out.decision = true;
                out.certificate = Some(cert);
                out.witness = Some(w);
                out.branch = FptBranch::StarForest;
                out.star_audit = Some(audit);
                return Ok(out);
            }
            Err(e @ Error::ContractBreach { .. }) => return Err(e),
            Err(e) if th.mode.is_faithful() => return Err(e),
            Err(e) => {
                out.branch = FptBranch::AlmostBoundedFallback;
                out.fallback_reason = Some(e.to_string());
            }
        }
    }

    let d = threshold.to_usize().map_or(usize::MAX, |v| v.saturating_sub(1));
    let report = solve_almost_bounded_degree_report(g, k, d, x.len(), problem)?;
    out.family_size = report.family_size;
    out.candidates_tested = report.candidates_tested;
    out.decision = report.certificate.is_some();
    out.certificate = report.certificate;
    Ok(out)
}
