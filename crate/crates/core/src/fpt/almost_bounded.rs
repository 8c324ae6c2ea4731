//! Witness search on graphs where all but `s` vertices have degree at
//! most `d`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::separating::separating_family;
use crate::coloring::{verify, WitnessCertificate, WitnessKind};
use crate::error::{Error, Result};
use crate::exact::{b_coloring_witness, partial_grundy_witness};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::isomorphism::{labeled_isomorphic, LabeledComponent, DEFAULT_COMPONENT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FptProblem {
    PartialGrundy,
    BCore,
}

impl FptProblem {
    pub fn kind(self) -> WitnessKind {
        match self {
            FptProblem::PartialGrundy => WitnessKind::PartialGrundy,
            FptProblem::BCore => WitnessKind::BColoring,
        }
    }

    /// Exact decision on a small graph: a witness of order `k` on some
    /// vertex subset.
    pub fn decide(self, g: &Graph, k: usize) -> Result<Option<WitnessCertificate>> {
        match self {
            FptProblem::PartialGrundy => partial_grundy_witness(g, k),
            FptProblem::BCore => b_coloring_witness(g, k),
        }
    }
}

impl fmt::Display for FptProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FptProblem::PartialGrundy => "partial-grundy",
            FptProblem::BCore => "bcore",
        })
    }
}

impl FromStr for FptProblem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "partial-grundy" => Ok(FptProblem::PartialGrundy),
            "bcore" | "b-core" | "b-chromatic-core" => Ok(FptProblem::BCore),
            other => Err(Error::Precondition(format!("unknown problem '{other}'"))),
        }
    }
}

/// Where the search succeeded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoundAt {
    pub high_part: VertexSet,
    pub family_index: usize,
    pub multiplicities: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostBoundedReport {
    pub certificate: Option<WitnessCertificate>,
    pub high_degree: VertexSet,
    pub family_size: usize,
    pub candidates_tested: usize,
    pub found_at: Option<FoundAt>,
}

/// Components of `G[s]` with at most `cap` vertices, grouped into classes
/// of label-preserving isomorphism, labels being `N(v) ∩ i`.
fn component_classes(g: &Graph, s: &VertexSet, i: &VertexSet, cap: usize) -> Result<Vec<Vec<VertexSet>>> {
    let mut classes: Vec<(LabeledComponent, Vec<VertexSet>)> = Vec::new();
    for comp in g.components_within(s) {
        if comp.len() > cap {
            continue;
        }
        let sub = induced_subgraph(g, &comp)?;
        let labels = sub.new_to_old.iter().map(|&v| g.neighbors_in(v, i)).collect();
        let lc = LabeledComponent::new(sub.graph, labels)?;
        let mut placed = false;
        for (rep, members) in classes.iter_mut() {
            if labeled_isomorphic(rep, &lc, DEFAULT_COMPONENT_CAP.max(cap))? {
                members.push(comp.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((lc, vec![comp]));
        }
    }
    Ok(classes.into_iter().map(|(_, m)| m).collect())
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    problem: FptProblem,
    tested: HashSet<VertexSet>,
    budget: usize,
}

impl Search<'_> {
    /// Lexicographic multiplicity vectors with at most `budget` vertices
    /// and components in total.
    fn vectors(
        &mut self,
        classes: &[Vec<VertexSet>],
        high: &VertexSet,
        idx: usize,
        chosen: &mut Vec<usize>,
        w: VertexSet,
        comps: usize,
    ) -> Result<Option<(Vec<usize>, WitnessCertificate)>> {
        if idx == classes.len() {
            let cand = w.union(high);
            if cand.len() < self.k || !self.tested.insert(cand.clone()) {
                return Ok(None);
            }
            let sub = induced_subgraph(self.g, &cand)?;
            return Ok(self
                .problem
                .decide(&sub.graph, self.k)?
                .map(|c| (chosen.clone(), lift(&c, &sub.new_to_old))));
        }
        let mut w = w;
        let mut comps = comps;
        chosen.push(0);
        for m in 0..=classes[idx].len() {
            if m > 0 {
                let c = &classes[idx][m - 1];
                comps += 1;
                if w.len() + c.len() > self.budget || comps > self.budget {
                    break;
                }
                w = w.union(c);
                *chosen.last_mut().expect("pushed") = m;
            }
            if let Some(found) = self.vectors(classes, high, idx + 1, chosen, w.clone(), comps)? {
                return Ok(Some(found));
            }
        }
        chosen.pop();
        Ok(None)
    }
}

fn lift(cert: &WitnessCertificate, new_to_old: &[usize]) -> WitnessCertificate {
    let map = |s: &VertexSet| s.iter().map(|v| new_to_old[v]).collect::<VertexSet>();
    WitnessCertificate {
        kind: cert.kind,
        support: map(&cert.support),
        classes: cert.classes.iter().map(map).collect(),
        centers: cert
            .centers
            .as_ref()
            .map(|c| c.iter().map(|&v| new_to_old[v]).collect()),
    }
}

/// Decides whether `g` has an order-`k` witness for `problem`, assuming
/// at most `s` vertices have degree above `d`. Loops over the part `I` of
/// the high-degree set, the members `S` of a separating family on the
/// rest, and multiplicity vectors over isomorphism classes of the small
/// components of `G[S]`; each candidate `G[W ∪ I]` goes to the exact
/// solver.
pub fn solve_almost_bounded_degree(
    g: &Graph,
    k: usize,
    d: usize,
    s: usize,
    problem: FptProblem,
) -> Result<Option<WitnessCertificate>> {
    Ok(solve_almost_bounded_degree_report(g, k, d, s, problem)?.certificate)
}

pub fn solve_almost_bounded_degree_report(
    g: &Graph,
    k: usize,
    d: usize,
    s: usize,
    problem: FptProblem,
) -> Result<AlmostBoundedReport> {
    let high: VertexSet = (0..g.n()).filter(|&v| g.degree(v) > d).collect();
    if high.len() > s {
        return Err(Error::Precondition(format!(
            "{} vertices have degree above {d}, allowed {s}",
            high.len()
        )));
    }
    let mut report = AlmostBoundedReport {
        certificate: None,
        high_degree: high.clone(),
        family_size: 0,
        candidates_tested: 0,
        found_at: None,
    };
    let kk = k * k;
    if k == 0 {
        report.certificate = Some(WitnessCertificate::with_centers(problem.kind(), vec![], vec![]));
        return Ok(report);
    }
    if high.len() >= 64 {
        return Err(Error::CapExceeded {
            what: "high-degree vertices",
            size: high.len(),
            cap: 63,
        });
    }
    let universe: Vec<usize> = (0..g.n()).filter(|v| !high.contains(*v)).collect();
    let family = separating_family(universe.len(), kk, d.saturating_mul(kk))?;
    report.family_size = family.sets.len();
    let high_list: Vec<usize> = high.iter().collect();
    let mut search = Search {
        g,
        k,
        problem,
        tested: HashSet::new(),
        budget: kk,
    };
    for mask in 0u64..1 << high_list.len() {
        let i: VertexSet = (0..high_list.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| high_list[b])
            .collect();
        let mut seen_collections: HashSet<Vec<VertexSet>> = HashSet::new();
        for (idx, set) in family.sets.iter().enumerate() {
            let sv: VertexSet = set.iter().map(|u| universe[u]).collect();
            let classes = component_classes(g, &sv, &i, kk)?;
            let key: Vec<VertexSet> = classes.iter().flatten().cloned().collect();
            if !seen_collections.insert(key) {
                continue;
            }
            if let Some((mult, cert)) = search.vectors(&classes, &i, 0, &mut Vec::new(), VertexSet::new(), 0)? {
                if !verify(g, &cert)?.is_valid() {
                    return Err(Error::Precondition("lifted witness failed verification".into()));
                }
                report.certificate = Some(cert);
                report.found_at = Some(FoundAt {
                    high_part: i,
                    family_index: idx,
                    multiplicities: mult,
                });
                report.candidates_tested = search.tested.len();
                return Ok(report);
            }
        }
    }
    report.candidates_tested = search.tested.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::star_forest;

    #[test]
    fn star_forest_is_a_witness() {
        let g = star_forest(2, 2).unwrap();
        for p in [FptProblem::BCore, FptProblem::PartialGrundy] {
            let cert = solve_almost_bounded_degree(&g, 2, 2, 0, p).unwrap().unwrap();
            assert_eq!(cert.order(), 2);
            assert!(verify(&g, &cert).unwrap().is_valid());
        }
    }

    #[test]
    fn edgeless_has_no_two_witness() {
        let g = Graph::new(6);
        assert!(solve_almost_bounded_degree(&g, 2, 0, 0, FptProblem::BCore)
            .unwrap()
            .is_none());
        assert!(solve_almost_bounded_degree(&g, 1, 0, 0, FptProblem::BCore)
            .unwrap()
            .is_some());
    }

    #[test]
    fn precondition_on_high_degree() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(solve_almost_bounded_degree(&g, 2, 2, 0, FptProblem::BCore).is_err());
        let r = solve_almost_bounded_degree_report(&g, 2, 2, 1, FptProblem::BCore).unwrap();
        assert!(r.certificate.is_some());
        assert_eq!(r.high_degree, VertexSet::from([0]));
    }

    #[test]
    fn problem_names() {
        assert_eq!("bcore".parse::<FptProblem>().unwrap(), FptProblem::BCore);
        assert_eq!(
            "partial_grundy".parse::<FptProblem>().unwrap(),
            FptProblem::PartialGrundy
        );
        assert!("grundy".parse::<FptProblem>().is_err());
    }
}
