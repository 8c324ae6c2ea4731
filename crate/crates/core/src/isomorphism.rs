//! Label-preserving isomorphism for small connected components.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex cap for [`labeled_isomorphic`].
pub const DEFAULT_COMPONENT_CAP: usize = 16;

/// A small connected graph whose vertices carry labels drawn from an
/// external anchor set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledComponent {
    pub graph: Graph,
    pub labels: Vec<VertexSet>,
}

impl LabeledComponent {
    pub fn new(graph: Graph, labels: Vec<VertexSet>) -> Result<Self> {
        if labels.len() != graph.n() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.n()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::Precondition("component is not connected".into()));
        }
        Ok(LabeledComponent { graph, labels })
    }

    /// Like [`LabeledComponent::new`] but also checks every label is a
    /// subset of `anchor`.
    pub fn with_anchor(graph: Graph, labels: Vec<VertexSet>, anchor: &VertexSet) -> Result<Self> {
        if let Some(bad) = labels.iter().find(|l| !l.is_subset(anchor)) {
            return Err(Error::Precondition(format!("label {:?} not within anchor set", bad)));
        }
        LabeledComponent::new(graph, labels)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Invariant under label-preserving isomorphism; used to reject
    /// mismatches before backtracking.
    pub fn signature(&self) -> (usize, usize, Vec<(usize, VertexSet)>) {
        let mut keys: Vec<(usize, VertexSet)> = (0..self.n())
            .map(|v| (self.graph.degree(v), self.labels[v].clone()))
            .collect();
        keys.sort();
        (self.n(), self.graph.edge_count(), keys)
    }
}

/// True iff some bijection maps edges to edges, non-edges to non-edges and
/// preserves labels.
pub fn labeled_isomorphic(c1: &LabeledComponent, c2: &LabeledComponent, cap: usize) -> Result<bool> {
    for c in [c1, c2] {
        if c.n() > cap {
            return Err(Error::CapExceeded {
                what: "labeled component",
                size: c.n(),
                cap,
            });
        }
    }
    if c1.signature() != c2.signature() {
        return Ok(false);
    }
    let n = c1.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(backtrack(c1, c2, 0, &mut map, &mut used))
}

fn backtrack(c1: &LabeledComponent, c2: &LabeledComponent, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == c1.n() {
        return true;
    }
    for w in 0..c2.n() {
        if used[w] || c1.graph.degree(v) != c2.graph.degree(w) || c1.labels[v] != c2.labels[w] {
            continue;
        }
        let consistent = (0..v).all(|u| c1.graph.has_edge(u, v) == c2.graph.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if backtrack(c1, c2, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(g: Graph, labels: &[&[usize]]) -> LabeledComponent {
        LabeledComponent::new(g, labels.iter().map(|l| VertexSet::from(l.to_vec())).collect()).unwrap()
    }

    #[test]
    fn identical_and_changed_label() {
        let a = lc(Graph::path(3), &[&[0], &[], &[1]]);
        assert!(labeled_isomorphic(&a, &a.clone(), 16).unwrap());
        let b = lc(Graph::path(3), &[&[0], &[], &[0]]);
        assert!(!labeled_isomorphic(&a, &b, 16).unwrap());
    }

    #[test]
    fn p3_relabeling_matches_bruteforce() {
        // P3 with middle vertex 0: edges 0-1, 0-2.
        let g2 = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let a = lc(Graph::path(3), &[&[5], &[], &[7]]);
        let b = lc(g2, &[&[], &[7], &[5]]);
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let brute = perms.iter().any(|p| {
            (0..3).all(|u| a.labels[u] == b.labels[p[u]])
                && (0..3).all(|u| (0..3).all(|v| a.graph.has_edge(u, v) == b.graph.has_edge(p[u], p[v])))
        });
        assert!(brute);
        assert!(labeled_isomorphic(&a, &b, 16).unwrap());
    }

    #[test]
    fn cap_and_connectivity() {
        let big = lc(Graph::path(5), &[&[], &[], &[], &[], &[]]);
        assert!(matches!(
            labeled_isomorphic(&big, &big, 4),
            Err(Error::CapExceeded { .. })
        ));
        assert!(LabeledComponent::new(Graph::new(2), vec![VertexSet::new(); 2]).is_err());
    }
}
