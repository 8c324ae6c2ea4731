//! Simple undirected graphs over dense 0-based vertex ids, plus the
//! structural primitives (induced subgraphs, twins, bicliques, Ramsey
//! extraction) shared by the solvers.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// An ordered, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// The full vertex set `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Checks that every member is a vertex of a graph on `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Simple undirected graph. Adjacency is kept symmetric and loop-free by
/// every mutating method; optional role labels name gadget vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    roles: BTreeMap<usize, String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            roles: BTreeMap::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("cycle edge is valid");
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    /// Adds `count` vertices and returns the id of the first one.
    pub fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.adj.len();
        self.adj.resize(first + count, BTreeSet::new());
        first
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n() && v < self.n() {
            self.adj[u].remove(&v);
            self.adj[v].remove(&u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn set_role(&mut self, v: usize, role: impl Into<String>) {
        self.roles.insert(v, role.into());
    }

    pub fn role(&self, v: usize) -> Option<&str> {
        self.roles.get(&v).map(String::as_str)
    }

    pub fn roles(&self) -> &BTreeMap<usize, String> {
        &self.roles
    }

    /// Vertices whose role label equals `role`.
    pub fn vertices_with_role(&self, role: &str) -> VertexSet {
        self.roles
            .iter()
            .filter(|(_, r)| r.as_str() == role)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Neighborhood bitmasks, one `u64` per vertex.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::CapExceeded {
                what: "bitmask graph",
                size: self.n(),
                cap: 64,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|a| a.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    /// Appends a disjoint copy of `other` (with its roles) and returns the
    /// id offset of the copy.
    pub fn append(&mut self, other: &Graph) -> usize {
        let offset = self.add_vertices(other.n());
        for (u, v) in other.edges() {
            self.adj[u + offset].insert(v + offset);
            self.adj[v + offset].insert(u + offset);
        }
        for (&v, r) in &other.roles {
            self.roles.insert(v + offset, r.clone());
        }
        offset
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.adj[u].iter().all(|&v| !s.contains(v)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let m = s.as_slice();
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| self.has_edge(m[i], m[j])))
    }

    /// Open neighborhood of `v` restricted to `within`.
    pub fn neighbors_in(&self, v: usize, within: &VertexSet) -> VertexSet {
        self.adj[v].iter().copied().filter(|&u| within.contains(u)).collect()
    }

    /// Connected components of `g[within]`, each sorted, ordered by
    /// smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in within.iter() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if within.contains(w) && seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n()))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Result of [`induced_subgraph`]: the subgraph and both id maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Induced {
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.new_to_old[v]).collect()
    }
}

/// The subgraph induced by `s`, with vertices renumbered in increasing
/// order of their old ids. Role labels are carried over.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Induced> {
    s.validate(g.n())?;
    let mut old_to_new = vec![None; g.n()];
    for (i, v) in s.iter().enumerate() {
        old_to_new[v] = Some(i);
    }
    let mut h = Graph::new(s.len());
    for (i, u) in s.iter().enumerate() {
        for &w in g.neighbors(u) {
            if let Some(j) = old_to_new[w] {
                h.adj[i].insert(j);
            }
        }
        if let Some(r) = g.role(u) {
            h.set_role(i, r);
        }
    }
    Ok(Induced {
        graph: h,
        old_to_new,
        new_to_old: s.as_slice().to_vec(),
    })
}

/// False-twin classes and the graph reduced to one representative
/// (the smallest id) per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinReduction {
    pub classes: Vec<VertexSet>,
    pub reduced: Induced,
}

/// Partitions the vertices by open neighborhood: `u` and `v` share a class
/// iff `N(u) = N(v)`.
pub fn false_twin_classes(g: &Graph) -> TwinReduction {
    let mut by_nbhd: BTreeMap<&BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        by_nbhd.entry(g.neighbors(v)).or_default().push(v);
    }
    let mut classes: Vec<VertexSet> = by_nbhd.into_values().map(VertexSet::from).collect();
    classes.sort();
    let reps: VertexSet = classes.iter().map(|c| c.as_slice()[0]).collect();
    let reduced = induced_subgraph(g, &reps).expect("representatives are valid vertices");
    TwinReduction { classes, reduced }
}

/// Default node budget for biclique enumeration.
pub const DEFAULT_BICLIQUE_BUDGET: u128 = 50_000_000;

/// Looks for `K_{t,t}` as a (not necessarily induced) subgraph.
pub fn has_biclique(g: &Graph, t: usize, budget: u128) -> Result<Option<(VertexSet, VertexSet)>> {
    has_complete_bipartite(g, t, t, budget)
}

/// Looks for disjoint `S`, `T` with `|S| = s`, `|T| = t` and all `s*t`
/// cross edges. The smaller side is enumerated; the other is read off the
/// common neighborhood. Returns the sides in `(s, t)` order.
pub fn has_complete_bipartite(g: &Graph, s: usize, t: usize, budget: u128) -> Result<Option<(VertexSet, VertexSet)>> {
    if s == 0 || t == 0 {
        return Err(Error::Precondition("biclique sides must be positive".into()));
    }
    let (small, large) = if s <= t { (s, t) } else { (t, s) };
    let eligible: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= large).collect();
    let estimate = binomial(eligible.len() as u128, small as u128);
    if estimate > budget {
        return Err(Error::BudgetExceeded(format!(
            "C({}, {}) = {} candidate sides exceed budget {}",
            eligible.len(),
            small,
            estimate,
            budget
        )));
    }

    fn extend(
        g: &Graph,
        eligible: &[usize],
        from: usize,
        chosen: &mut Vec<usize>,
        common: Option<BTreeSet<usize>>,
        small: usize,
        large: usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if chosen.len() == small {
            let common = common.expect("small >= 1");
            return Some((chosen.clone(), common.into_iter().take(large).collect()));
        }
        for i in from..eligible.len() {
            if eligible.len() - i < small - chosen.len() {
                break;
            }
            let v = eligible[i];
            let next: BTreeSet<usize> = match &common {
                None => g.neighbors(v).clone(),
                Some(c) => c.intersection(g.neighbors(v)).copied().collect(),
            };
            if next.len() < large {
                continue;
            }
            chosen.push(v);
            if let Some(found) = extend(g, eligible, i + 1, chosen, Some(next), small, large) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    let found = extend(g, &eligible, 0, &mut Vec::new(), None, small, large);
    Ok(found.map(|(a, b)| {
        let (a, b) = (VertexSet::from(a), VertexSet::from(b));
        if s <= t {
            (a, b)
        } else {
            (b, a)
        }
    }))
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Outcome of a Ramsey extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyOutcome {
    Clique(VertexSet),
    Independent(VertexSet),
}

impl RamseyOutcome {
    pub fn vertices(&self) -> &VertexSet {
        match self {
            RamseyOutcome::Clique(s) | RamseyOutcome::Independent(s) => s,
        }
    }

    /// Structural check against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            RamseyOutcome::Clique(s) => g.is_clique(s),
            RamseyOutcome::Independent(s) => g.is_independent(s),
        }
    }
}

/// Size that guarantees a clique of size `a` or an independent set of
/// size `b` to the halving pivot procedure: `2^(a+b-2)`.
pub fn ramsey_guarantee(a: usize, b: usize) -> u128 {
    let e = (a + b).saturating_sub(2);
    if e >= 127 {
        u128::MAX
    } else {
        1u128 << e
    }
}

/// Clique or independent set of size `s` in `g`. Below the guaranteed
/// size `2^(2s-2)` the procedure still runs best-effort and only reports
/// [`Error::TooSmallForGuarantee`] when it comes up empty.
pub fn ramsey_clique_or_independent(g: &Graph, s: usize) -> Result<RamseyOutcome> {
    let needed = ramsey_guarantee(s, s);
    match ramsey_search(g, &VertexSet::full(g.n()), s, s) {
        Some(out) => Ok(out),
        None if (g.n() as u128) < needed => Err(Error::TooSmallForGuarantee { needed, have: g.n() }),
        None => Err(Error::BestEffortFailed("pivot procedure ran out of candidates".into())),
    }
}

/// Like [`ramsey_clique_or_independent`] but refuses graphs below the
/// guaranteed size up front.
pub fn ramsey_clique_or_independent_strict(g: &Graph, s: usize) -> Result<RamseyOutcome> {
    let needed = ramsey_guarantee(s, s);
    if (g.n() as u128) < needed {
        return Err(Error::TooSmallForGuarantee { needed, have: g.n() });
    }
    ramsey_clique_or_independent(g, s)
}

/// Greedy pivot procedure inside `candidates`: take the smallest remaining
/// vertex, then keep whichever of its neighbors / non-neighbors is larger.
/// Vertices kept on the neighbor side form a clique, the others an
/// independent set. Stops at a clique of size `clique_size` or an
/// independent set of size `indep_size`; `None` if candidates run out.
pub fn ramsey_search(
    g: &Graph,
    candidates: &VertexSet,
    clique_size: usize,
    indep_size: usize,
) -> Option<RamseyOutcome> {
    if clique_size == 0 {
        return Some(RamseyOutcome::Clique(VertexSet::new()));
    }
    if indep_size == 0 {
        return Some(RamseyOutcome::Independent(VertexSet::new()));
    }
    let mut pool: Vec<usize> = candidates.iter().collect();
    let mut clique = VertexSet::new();
    let mut indep = VertexSet::new();
    while let Some((&pivot, rest)) = pool.split_first() {
        let (nbrs, non): (Vec<usize>, Vec<usize>) = rest.iter().partition(|&&w| g.has_edge(pivot, w));
        if nbrs.len() > non.len() {
            clique.insert(pivot);
            if clique.len() == clique_size {
                return Some(RamseyOutcome::Clique(clique));
            }
            pool = nbrs;
        } else {
            indep.insert(pivot);
            if indep.len() == indep_size {
                return Some(RamseyOutcome::Independent(indep));
            }
            pool = non;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k13() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn induced_identity_and_empty() {
        let g = Graph::cycle(5);
        let full = induced_subgraph(&g, &VertexSet::full(5)).unwrap();
        assert_eq!(full.graph, g);
        let empty = induced_subgraph(&g, &VertexSet::new()).unwrap();
        assert_eq!(empty.graph.n(), 0);
    }

    #[test]
    fn induced_c4_minus_vertex_is_p3() {
        let c4 = Graph::cycle(4);
        let sub = induced_subgraph(&c4, &VertexSet::from([0, 1, 2])).unwrap();
        // Direct edge filter: keep edges of C4 with both ends in {0,1,2}.
        let expected: Vec<_> = c4.edges().filter(|&(u, v)| u < 3 && v < 3).collect();
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), expected);
        assert_eq!(sub.graph, Graph::path(3));
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::path(3);
        assert!(induced_subgraph(&g, &VertexSet::from([0, 7])).is_err());
    }

    #[test]
    fn twins_of_star_triangle_empty() {
        let t = false_twin_classes(&k13());
        assert_eq!(t.classes, vec![VertexSet::from([0]), VertexSet::from([1, 2, 3])]);
        assert_eq!(t.reduced.graph.n(), 2);
        assert_eq!(t.reduced.graph.edge_count(), 1);

        let tri = false_twin_classes(&Graph::complete(3));
        assert_eq!(tri.classes.len(), 3);

        let empty = false_twin_classes(&Graph::new(4));
        assert_eq!(empty.classes, vec![VertexSet::full(4)]);
    }

    #[test]
    fn biclique_examples() {
        assert!(has_biclique(&Graph::cycle(4), 2, DEFAULT_BICLIQUE_BUDGET)
            .unwrap()
            .is_some());
        assert!(has_biclique(&k13(), 2, DEFAULT_BICLIQUE_BUDGET).unwrap().is_none());
        // H_{4,4}: a_i ~ b_j iff i < j; {a1,a2} x {b3,b4} is a K_{2,2}.
        let mut h = Graph::new(8);
        for i in 0..4 {
            for j in i + 1..4 {
                h.add_edge(i, 4 + j).unwrap();
            }
        }
        let (x, y) = has_biclique(&h, 2, DEFAULT_BICLIQUE_BUDGET).unwrap().unwrap();
        for a in x.iter() {
            for b in y.iter() {
                assert!(h.has_edge(a, b));
            }
        }
    }

    #[test]
    fn biclique_budget_guard() {
        let g = Graph::complete(30);
        assert!(matches!(has_biclique(&g, 5, 1000), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn unequal_sides_enumerate_smaller() {
        let mut g = Graph::new(7);
        for a in 0..2 {
            for b in 2..7 {
                g.add_edge(a, b).unwrap();
            }
        }
        let (s, t) = has_complete_bipartite(&g, 5, 2, DEFAULT_BICLIQUE_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(t.len(), 2);
        assert!(has_complete_bipartite(&g, 3, 3, DEFAULT_BICLIQUE_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn ramsey_examples() {
        let out = ramsey_clique_or_independent(&Graph::complete(10), 3).unwrap();
        assert!(matches!(out, RamseyOutcome::Clique(ref s) if s.len() == 3));
        let out = ramsey_clique_or_independent(&Graph::new(10), 3).unwrap();
        assert!(matches!(out, RamseyOutcome::Independent(ref s) if s.len() == 3));
        assert!(matches!(
            ramsey_clique_or_independent_strict(&Graph::new(10), 3),
            Err(Error::TooSmallForGuarantee { needed: 16, have: 10 })
        ));
        // C5 has neither a triangle nor an independent triple.
        assert!(matches!(
            ramsey_clique_or_independent(&Graph::cycle(5), 3),
            Err(Error::TooSmallForGuarantee { needed: 16, have: 5 })
        ));
    }

    #[test]
    fn components_and_independence() {
        let mut g = Graph::path(3);
        g.append(&Graph::complete(2));
        let comps = g.components();
        assert_eq!(comps, vec![VertexSet::from([0, 1, 2]), VertexSet::from([3, 4])]);
        assert!(g.is_independent(&VertexSet::from([0, 2, 3])));
        assert!(!g.is_independent(&VertexSet::from([3, 4])));
    }
}
