//! Constructive extraction on `K_{t,t}`-free graphs: anti-bicliques,
//! pairwise anti-complete independent sets, and induced star forests.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::thresholds::Thresholds;
use crate::coloring::{WitnessCertificate, WitnessKind};
use crate::error::{Error, Result};
use crate::graph::{has_biclique, induced_subgraph, ramsey_search, Graph, RamseyOutcome, VertexSet};

/// Whether size preconditions are enforced or the routine runs
/// best-effort.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtractMode {
    Faithful,
    Practical,
}

/// Node budget for the `K_{t,t}` hunts triggered by audits.
pub const HUNT_BUDGET: u128 = 5_000_000;

fn breach(reason: String, a: VertexSet, b: VertexSet) -> Error {
    Error::ContractBreach {
        reason,
        witness: Some((a, b)),
    }
}

fn first_n(s: &VertexSet, n: usize) -> VertexSet {
    s.iter().take(n).collect()
}

/// Sets `A' ⊆ A`, `B' ⊆ B` of size at least `n` with no edge between
/// them. `b_1..b_{n+t}` are the first `n + t` vertices of `B`; `A_i` keeps
/// the larger of `N(b_i) ∩ A_{i-1}` and `A_{i-1} \ N(b_i)`.
pub fn anti_biclique_extract(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    n: usize,
    t: usize,
    mode: ExtractMode,
) -> Result<(VertexSet, VertexSet)> {
    if !a.is_disjoint(b) {
        return Err(Error::Precondition("A and B must be disjoint".into()));
    }
    if mode == ExtractMode::Faithful {
        let need_a = BigUint::from(n) << (n + t);
        if n < t || BigUint::from(a.len()) < need_a || b.len() < n + t {
            return Err(Error::Precondition(format!(
                "need N >= t, |A| >= N*2^(N+t) = {need_a}, |B| >= N+t = {}; got N={n}, t={t}, |A|={}, |B|={}",
                n + t,
                a.len(),
                b.len()
            )));
        }
    }
    let bs: Vec<usize> = b.iter().take(n + t).collect();
    let mut current = a.clone();
    let mut complete = Vec::new();
    for &bi in &bs {
        let nb = g.neighbors_in(bi, &current);
        if 2 * nb.len() >= current.len() && !nb.is_empty() {
            complete.push(bi);
            current = nb;
        } else {
            current = current.difference(&nb);
        }
    }
    if current.len() < n {
        return Err(Error::BestEffortFailed(format!(
            "halving left {} vertices of A, need {n}",
            current.len()
        )));
    }
    if complete.len() >= t && current.len() >= t {
        return Err(breach(
            format!(
                "{} vertices of B are complete to a set of {} vertices",
                complete.len(),
                current.len()
            ),
            first_n(&current, t),
            complete.iter().take(t).copied().collect(),
        ));
    }
    let b_prime: VertexSet = bs
        .iter()
        .copied()
        .filter(|&bi| g.neighbors_in(bi, &current).is_empty())
        .collect();
    if b_prime.len() < n {
        return Err(Error::BestEffortFailed(format!(
            "only {} vertices of B are anti-complete to A', need {n}",
            b_prime.len()
        )));
    }
    debug_assert!(current.iter().all(|u| g.neighbors_in(u, &b_prime).is_empty()));
    Ok((current, b_prime))
}

/// Result of [`clique_or_multipartite_is`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafOutcome {
    Clique(VertexSet),
    /// `k` vertices from each part, together independent.
    Independent(Vec<VertexSet>),
}

/// Either a `k`-clique inside some part, or `k` vertices per part forming
/// an independent set of size `k²`. Parts are made pairwise anti-complete
/// by repeated [`anti_biclique_extract`], then each part is split by the
/// Ramsey pivot procedure.
pub fn clique_or_multipartite_is(
    g: &Graph,
    parts: &[VertexSet],
    k: usize,
    t: usize,
    th: Option<&Thresholds>,
    mode: ExtractMode,
) -> Result<LeafOutcome> {
    let t = t.max(k);
    if mode == ExtractMode::Faithful {
        let m = th
            .map(|th| th.m.clone())
            .ok_or_else(|| Error::Precondition("faithful mode needs thresholds".into()))?;
        if let Some(small) = parts.iter().find(|p| !m.at_most(p.len())) {
            return Err(Error::Precondition(format!(
                "part of size {} is below M = {m}",
                small.len()
            )));
        }
    }
    let mut parts: Vec<VertexSet> = parts.to_vec();
    let target = crate::graph::ramsey_guarantee(k, k).min(usize::MAX as u128) as usize;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let cross = parts[i].iter().any(|u| !g.neighbors_in(u, &parts[j]).is_empty());
            if !cross {
                continue;
            }
            // Keep as much as the halving allows, but at least k each.
            let n = target.min(parts[i].len()).min(parts[j].len()).max(k);
            let (ai, aj) = anti_biclique_extract(g, &parts[i], &parts[j], n, t, ExtractMode::Practical)?;
            parts[i] = ai;
            parts[j] = aj;
        }
    }
    let mut sets = Vec::with_capacity(parts.len());
    for (i, p) in parts.iter().enumerate() {
        match ramsey_search(g, p, k, k) {
            Some(RamseyOutcome::Clique(c)) => return Ok(LeafOutcome::Clique(c)),
            Some(RamseyOutcome::Independent(s)) => sets.push(s),
            None => {
                return Err(Error::BestEffortFailed(format!(
                    "part {} ({} vertices) has neither a {k}-clique nor a {k}-independent set from the pivot procedure",
                    i + 1,
                    p.len()
                )))
            }
        }
    }
    Ok(LeafOutcome::Independent(sets))
}

/// A `k`-clique or an induced `kK_{1,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarOrCliqueWitness {
    Clique(VertexSet),
    Stars {
        centers: Vec<usize>,
        leaf_sets: Vec<VertexSet>,
    },
}

impl StarOrCliqueWitness {
    /// Structural check: a clique of size `k`, or `k` stars with `k`
    /// leaves each forming an induced `kK_{1,k}`.
    pub fn verify(&self, g: &Graph, k: usize) -> std::result::Result<(), String> {
        match self {
            StarOrCliqueWitness::Clique(c) => {
                if c.len() != k {
                    return Err(format!("clique has {} vertices, expected {k}", c.len()));
                }
                if !g.is_clique(c) {
                    return Err("clique vertices are not pairwise adjacent".into());
                }
                Ok(())
            }
            StarOrCliqueWitness::Stars { centers, leaf_sets } => {
                if centers.len() != k || leaf_sets.len() != k {
                    return Err(format!(
                        "{} centers and {} leaf sets, expected {k}",
                        centers.len(),
                        leaf_sets.len()
                    ));
                }
                let center_set: VertexSet = centers.iter().copied().collect();
                if center_set.len() != k {
                    return Err("centers repeat".into());
                }
                if !g.is_independent(&center_set) {
                    return Err("centers are not pairwise non-adjacent".into());
                }
                let mut all_leaves = VertexSet::new();
                for (s, leaves) in leaf_sets.iter().enumerate() {
                    if leaves.len() != k {
                        return Err(format!("star {} has {} leaves, expected {k}", s + 1, leaves.len()));
                    }
                    for l in leaves.iter() {
                        if center_set.contains(l) || !all_leaves.insert(l) {
                            return Err(format!("vertex {l} is used twice"));
                        }
                        let seen = g.neighbors_in(l, &center_set);
                        if seen != VertexSet::from([centers[s]]) {
                            return Err(format!("leaf {l} of star {} is not private to its center", s + 1));
                        }
                    }
                }
                if !g.is_independent(&all_leaves) {
                    return Err("leaves are not independent".into());
                }
                Ok(())
            }
        }
    }

    pub fn vertices(&self) -> VertexSet {
        match self {
            StarOrCliqueWitness::Clique(c) => c.clone(),
            StarOrCliqueWitness::Stars { centers, leaf_sets } => leaf_sets
                .iter()
                .fold(centers.iter().copied().collect(), |acc: VertexSet, l| acc.union(l)),
        }
    }

    /// Order-`k` certificate of the given kind (b-coloring or partial
    /// Grundy): centers get distinct colors, leaves of center `i` get the
    /// other colors.
    pub fn to_certificate(&self, kind: WitnessKind) -> WitnessCertificate {
        match self {
            StarOrCliqueWitness::Clique(c) => {
                let members: Vec<usize> = c.iter().collect();
                WitnessCertificate::with_centers(kind, members.iter().map(|&v| VertexSet::from([v])).collect(), members)
            }
            StarOrCliqueWitness::Stars { centers, leaf_sets } => {
                let k = centers.len();
                let mut classes: Vec<VertexSet> = centers.iter().map(|&c| VertexSet::from([c])).collect();
                for (i, leaves) in leaf_sets.iter().enumerate() {
                    let others: Vec<usize> = (0..k).filter(|&c| c != i).collect();
                    if others.is_empty() {
                        continue;
                    }
                    for (pos, l) in leaves.iter().enumerate() {
                        classes[others[pos % others.len()]].insert(l);
                    }
                }
                WitnessCertificate::with_centers(kind, classes, centers.clone())
            }
        }
    }
}

/// One inductive step of the private-neighbor extraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarStep {
    pub center: usize,
    pub neighborhood: usize,
    /// Exact `X`-neighborhood of the chosen leaf class.
    pub leaf_pattern: Vec<usize>,
    pub leaves: usize,
    /// `|X_x|`, the vertices seeing at least a `1/k` fraction of `N_Y(x)`.
    pub heavy: usize,
    /// `t·k^t`, checked when `|N_Y(x)| ≥ N(t, 1/k)`.
    pub heavy_bound: Option<usize>,
    pub bound_checked: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StarAudit {
    pub initial_independent: usize,
    pub steps: Vec<StarStep>,
}

fn hunt_biclique(g: &Graph, within: &VertexSet, t: usize, reason: String) -> Result<()> {
    let sub = induced_subgraph(g, within)?;
    match has_biclique(&sub.graph, t, HUNT_BUDGET) {
        Ok(Some((a, b))) => Err(breach(reason, sub.lift(&a), sub.lift(&b))),
        Ok(None) => Ok(()),
        Err(Error::BudgetExceeded(_)) => Ok(()),
        Err(e) => Err(e),
    }
}

/// Induced `kK_{1,k}` (or a `k`-clique) from many high-degree vertices
/// `X` with neighbors in `Y`.
pub fn star_forest_extract(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    k: usize,
    t: usize,
    th: &Thresholds,
) -> Result<(StarOrCliqueWitness, StarAudit)> {
    if !x.is_disjoint(y) {
        return Err(Error::Precondition("X and Y must be disjoint".into()));
    }
    let faithful = th.mode.is_faithful();
    if faithful {
        if !th.f_tk.at_most(x.len()) {
            return Err(Error::Precondition(format!(
                "|X| = {} is below f(t,k) = {}",
                x.len(),
                th.f_tk
            )));
        }
        if let Some(v) = x.iter().find(|&v| !th.g_tk.at_most(g.neighbors_in(v, y).len())) {
            return Err(Error::Precondition(format!(
                "vertex {v} has fewer than g(t,k) = {} neighbors in Y",
                th.g_tk
            )));
        }
    }
    // Practical mode only asks for M leaves per class; N(t, 1/k) then
    // governs the audit alone.
    let class_min = if faithful { &th.m_prime } else { &th.m }
        .to_usize()
        .unwrap_or(usize::MAX)
        .max(k);
    let n_eps = th.n_t_eps.to_usize();
    let mut audit = StarAudit::default();

    // An independent set of the size the induction consumes.
    let per_step = th.hyperedge_bound().map_or(usize::MAX, |b| b.saturating_add(t));
    let want = per_step.saturating_mul(k).min(x.len()).max(1);
    let mut xs = match ramsey_search(g, x, 2 * t, want) {
        Some(RamseyOutcome::Independent(s)) => s,
        Some(RamseyOutcome::Clique(c)) => {
            let c: Vec<usize> = c.iter().collect();
            return Err(breach(
                format!("X contains a clique on {} vertices", 2 * t),
                c[..t].iter().copied().collect(),
                c[t..].iter().copied().collect(),
            ));
        }
        None if faithful => return Err(Error::BestEffortFailed("Ramsey step found no independent set".into())),
        None => greedy_independent(g, x),
    };
    audit.initial_independent = xs.len();

    let mut ys = y.clone();
    let mut centers = Vec::with_capacity(k);
    let mut leaves = Vec::with_capacity(k);
    for step in 1..=k {
        let Some(cx) = xs.iter().min_by_key(|&v| (g.neighbors_in(v, &ys).len(), v)) else {
            return Err(Error::BestEffortFailed(format!(
                "step {step}: no candidate centers left"
            )));
        };
        let ny = g.neighbors_in(cx, &ys);
        let mut classes: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
        for w in ny.iter() {
            classes.entry(g.neighbors_in(w, &xs)).or_default().insert(w);
        }
        let Some((pattern, class)) = classes
            .into_iter()
            .max_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| b.0.cmp(&a.0)))
        else {
            return Err(Error::BestEffortFailed(format!(
                "step {step}: center {cx} has no neighbors left in Y"
            )));
        };
        if class.len() < class_min {
            return Err(Error::BestEffortFailed(format!(
                "step {step}: largest leaf class has {} vertices, need {class_min}",
                class.len()
            )));
        }
        if pattern.len() >= t && class.len() >= t {
            return Err(breach(
                format!(
                    "step {step}: {} centers share {} common neighbors",
                    pattern.len(),
                    class.len()
                ),
                first_n(&pattern, t),
                first_n(&class, t),
            ));
        }
        let heavy: VertexSet = xs
            .iter()
            .filter(|&v| g.neighbors_in(v, &ny).len() * k >= ny.len())
            .collect();
        let bound = th.hyperedge_bound();
        let checked = n_eps.is_some_and(|n| ny.len() >= n);
        if checked {
            if let Some(b) = bound.filter(|&b| heavy.len() > b) {
                hunt_biclique(
                    g,
                    &heavy.union(&ny),
                    t,
                    format!(
                        "step {step}: {} vertices see a 1/{k} fraction of N_Y({cx}), bound {b}",
                        heavy.len()
                    ),
                )?;
                if faithful {
                    return Err(Error::ContractBreach {
                        reason: format!(
                            "step {step}: |X_x| = {} exceeds t*k^t = {b} and no K_{{t,t}} was found within budget",
                            heavy.len()
                        ),
                        witness: None,
                    });
                }
            }
        }
        audit.steps.push(StarStep {
            center: cx,
            neighborhood: ny.len(),
            leaf_pattern: pattern.iter().collect(),
            leaves: class.len(),
            heavy: heavy.len(),
            heavy_bound: bound,
            bound_checked: checked,
        });
        centers.push(cx);
        leaves.push(class);
        xs = xs.difference(&pattern.union(&heavy));
        ys = ys.difference(&ny);
    }

    let mode = if faithful {
        ExtractMode::Faithful
    } else {
        ExtractMode::Practical
    };
    let witness = match clique_or_multipartite_is(g, &leaves, k, t, Some(th), mode)? {
        LeafOutcome::Clique(c) => StarOrCliqueWitness::Clique(c),
        LeafOutcome::Independent(sets) => StarOrCliqueWitness::Stars {
            centers,
            leaf_sets: sets,
        },
    };
    witness
        .verify(g, k)
        .map_err(|e| Error::BestEffortFailed(format!("extracted structure failed verification: {e}")))?;
    Ok((witness, audit))
}

/// Maximal independent set of `g[within]`, smallest degree first.
fn greedy_independent(g: &Graph, within: &VertexSet) -> VertexSet {
    let mut order: Vec<usize> = within.iter().collect();
    order.sort_by_key(|&v| (g.neighbors_in(v, within).len(), v));
    let mut out = VertexSet::new();
    for v in order {
        if g.neighbors_in(v, &out).is_empty() {
            out.insert(v);
        }
    }
    out
}
