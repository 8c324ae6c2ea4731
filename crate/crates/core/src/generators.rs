//! Gadget families: binomial trees and their pruned variants, half-graphs
//! with their paths and cycles, anti-matchings, star forests and the
//! 14-vertex edge tree. Every vertex carries a role label.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};

/// Largest binomial tree order that will be materialized.
pub const MAX_BINOMIAL_ORDER: usize = 25;

/// Parent of `v` in the canonical numbering of a binomial tree (root 0).
pub fn binomial_parent(v: usize) -> Option<usize> {
    (v != 0).then(|| v & (v - 1))
}

/// Color of `v` in the first-fit coloring of `T_k` that gives the root
/// color `k`.
pub fn binomial_color(v: usize, k: usize) -> usize {
    if v == 0 {
        k
    } else {
        v.trailing_zeros() as usize + 1
    }
}

/// Binomial tree `T_k` on `2^(k-1)` vertices. Vertex `v > 0` hangs below
/// `v & (v - 1)`, so `[0, 2^(k-2))` and `[2^(k-2), 2^(k-1))` are the two
/// copies of `T_(k-1)` joined at their roots.
pub fn binomial_tree(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition("binomial tree order must be at least 1".into()));
    }
    if k > MAX_BINOMIAL_ORDER {
        return Err(Error::CapExceeded {
            what: "binomial tree order",
            size: k,
            cap: MAX_BINOMIAL_ORDER,
        });
    }
    let n = 1usize << (k - 1);
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v & (v - 1), v)?;
    }
    g.set_role(0, "root");
    for v in 1..n {
        g.set_role(v, format!("c{}", binomial_color(v, k)));
    }
    Ok(g)
}

/// `T'_k` with its marked set `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrunedTree {
    pub graph: Graph,
    pub root: usize,
    /// Members of `X` in the ids of `graph`.
    pub x_members: VertexSet,
    /// Number of `T_i` roots whose parent roots a `T_(i+1)`.
    pub eligible: usize,
}

/// Roots of `T_i` subtrees whose parent roots a `T_(i+1)`, in the
/// canonical numbering of `T_k`: `v = p + 2^(i-1)` where `p` has color
/// `i + 1`, i.e. `v ≡ 2^i + 2^(i-1) (mod 2^(i+1))`.
pub fn pruned_tree_eligible(k: usize, i: usize) -> Vec<usize> {
    let n = 1usize << (k - 1);
    let step = 1usize << (i + 1);
    let first = (1usize << i) + (1usize << (i - 1));
    (first..n).step_by(step).collect()
}

/// `T_k` with the `T_(i-1)` subtree removed below each of the first
/// `x_count` eligible vertices.
pub fn pruned_binomial_tree(k: usize, i: usize, x_count: usize) -> Result<PrunedTree> {
    if k < 4 || i < 2 || i + 2 > k {
        return Err(Error::Precondition(format!(
            "pruned tree needs 2 <= i <= k - 2, got k = {k}, i = {i}"
        )));
    }
    let t = binomial_tree(k)?;
    let eligible = pruned_tree_eligible(k, i);
    if x_count > eligible.len() {
        return Err(Error::Precondition(format!(
            "{x_count} X-members requested, only {} eligible",
            eligible.len()
        )));
    }
    let x: Vec<usize> = eligible[..x_count].to_vec();
    let mut removed = VertexSet::new();
    for &v in &x {
        // The color-(i-1) child of v and everything below it.
        let child = v + (1usize << (i - 2));
        for w in child..v + (1usize << (i - 1)) {
            removed.insert(w);
        }
    }
    let keep = VertexSet::full(t.n()).difference(&removed);
    let mut sub = induced_subgraph(&t, &keep)?;
    let x_members: VertexSet = x.iter().map(|&v| sub.old_to_new[v].expect("X is kept")).collect();
    for v in x_members.iter() {
        sub.graph.set_role(v, "X");
    }
    Ok(PrunedTree {
        graph: sub.graph,
        root: 0,
        x_members,
        eligible: eligible.len(),
    })
}

/// Role string of the vertex at `level` (1-based) in layer `layer`.
pub fn layer_role(layer: usize, level: usize) -> String {
    format!("H{layer}/{level}")
}

/// Canonical half-graph `H_{t,t}`: `a_i` is vertex `i - 1`, `b_j` is
/// vertex `t + j - 1`, and `a_i ~ b_j` iff `i < j`.
pub fn half_graph(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::Precondition("half-graph height must be positive".into()));
    }
    let mut g = Graph::new(2 * t);
    for i in 0..t {
        for j in i + 1..t {
            g.add_edge(i, t + j)?;
        }
        g.set_role(i, format!("A/{}", i + 1));
        g.set_role(t + i, format!("B/{}", i + 1));
    }
    Ok(g)
}

/// Id of level `level` (1-based) in layer `layer` (1-based) of a layered
/// half-graph gadget of height `t`.
pub fn layer_vertex(t: usize, layer: usize, level: usize) -> usize {
    (layer - 1) * t + (level - 1)
}

fn link_layers(g: &mut Graph, t: usize, from: usize, to: usize) -> Result<()> {
    for i in 1..=t {
        for j in i + 1..=t {
            g.add_edge(layer_vertex(t, from, i), layer_vertex(t, to, j))?;
        }
    }
    Ok(())
}

/// Length-`l` path of half-graphs `H_{l×t}`: layers `H_1..H_(l+1)`, each
/// consecutive pair a canonical `H_{t,t}` oriented the same way.
pub fn half_graph_path(l: usize, t: usize) -> Result<Graph> {
    if l == 0 || t == 0 {
        return Err(Error::Precondition("half-graph path needs l, t >= 1".into()));
    }
    let mut g = Graph::new((l + 1) * t);
    for p in 1..=l {
        link_layers(&mut g, t, p, p + 1)?;
    }
    for p in 1..=l + 1 {
        for i in 1..=t {
            g.set_role(layer_vertex(t, p, i), layer_role(p, i));
        }
    }
    Ok(g)
}

/// The path closed by one more half-graph from `H_(l+1)` back to `H_1`,
/// keeping every layer's order.
pub fn half_graph_cycle(l: usize, t: usize) -> Result<Graph> {
    let mut g = half_graph_path(l, t)?;
    link_layers(&mut g, t, l + 1, 1)?;
    Ok(g)
}

/// `K_(2t)` minus the perfect matching `{2i, 2i+1}`.
pub fn anti_matching(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::Precondition("anti-matching size must be positive".into()));
    }
    let mut g = Graph::complete(2 * t);
    for i in 0..t {
        g.remove_edge(2 * i, 2 * i + 1);
        g.set_role(2 * i, format!("M{}/a", i + 1));
        g.set_role(2 * i + 1, format!("M{}/b", i + 1));
    }
    Ok(g)
}

/// `count` disjoint stars `K_(1,leaves)`; star `s` has center
/// `s * (leaves + 1)` followed by its leaves.
pub fn star_forest(count: usize, leaves: usize) -> Result<Graph> {
    if count == 0 || leaves == 0 {
        return Err(Error::Precondition("star forest needs count, leaves >= 1".into()));
    }
    let mut g = Graph::new(count * (leaves + 1));
    for s in 0..count {
        let c = s * (leaves + 1);
        g.set_role(c, format!("center/{}", s + 1));
        for l in 1..=leaves {
            g.add_edge(c, c + l)?;
            g.set_role(c + l, format!("leaf/{}", s + 1));
        }
    }
    Ok(g)
}

/// `T_5` without the pendant leaves of its two color-2 vertices whose
/// parents have color 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeTree {
    pub graph: Graph,
    pub root: usize,
    pub beta: usize,
    pub gamma: usize,
}

pub fn t5_edge_tree() -> EdgeTree {
    // In T_5, vertices 6 and 14 have color 2 and parents 4 and 12 of
    // color 3; their leaves are 7 and 15.
    let t5 = binomial_tree(5).expect("T_5 is small");
    let keep = VertexSet::full(16).difference(&VertexSet::from([7, 15]));
    let mut sub = induced_subgraph(&t5, &keep).expect("valid subset");
    let beta = sub.old_to_new[6].expect("kept");
    let gamma = sub.old_to_new[14].expect("kept");
    sub.graph.set_role(beta, "beta");
    sub.graph.set_role(gamma, "gamma");
    EdgeTree {
        graph: sub.graph,
        root: 0,
        beta,
        gamma,
    }
}

/// Adds a false twin of `v` (same open neighborhood, same role).
pub fn duplicate_vertex(g: &Graph, v: usize) -> Result<(Graph, usize)> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut h = g.clone();
    let w = h.add_vertex();
    for &u in g.neighbors(v) {
        h.add_edge(u, w)?;
    }
    if let Some(r) = g.role(v) {
        h.set_role(w, r.to_string());
    }
    Ok((h, w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetFamily {
    BinomialTree,
    PrunedBinomialTree,
    HalfGraph,
    HalfGraphPath,
    HalfGraphCycle,
    AntiMatching,
    StarForest,
    T5EdgeTree,
}

impl GadgetFamily {
    pub const ALL: [GadgetFamily; 8] = [
        GadgetFamily::BinomialTree,
        GadgetFamily::PrunedBinomialTree,
        GadgetFamily::HalfGraph,
        GadgetFamily::HalfGraphPath,
        GadgetFamily::HalfGraphCycle,
        GadgetFamily::AntiMatching,
        GadgetFamily::StarForest,
        GadgetFamily::T5EdgeTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetFamily::BinomialTree => "binomial-tree",
            GadgetFamily::PrunedBinomialTree => "pruned-binomial-tree",
            GadgetFamily::HalfGraph => "half-graph",
            GadgetFamily::HalfGraphPath => "half-graph-path",
            GadgetFamily::HalfGraphCycle => "half-graph-cycle",
            GadgetFamily::AntiMatching => "anti-matching",
            GadgetFamily::StarForest => "star-forest",
            GadgetFamily::T5EdgeTree => "t5-edge-tree",
        }
    }

    /// Parameters each family reads.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            GadgetFamily::BinomialTree => &["k"],
            GadgetFamily::PrunedBinomialTree => &["k", "i", "x"],
            GadgetFamily::HalfGraph | GadgetFamily::AntiMatching => &["t"],
            GadgetFamily::HalfGraphPath | GadgetFamily::HalfGraphCycle => &["l", "t"],
            GadgetFamily::StarForest => &["count", "leaves"],
            GadgetFamily::T5EdgeTree => &[],
        }
    }
}

impl fmt::Display for GadgetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-").to_ascii_lowercase();
        GadgetFamily::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::Precondition(format!("unknown gadget family `{s}`")))
    }
}

/// A family plus its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSpec {
    pub family: GadgetFamily,
    pub params: BTreeMap<String, usize>,
}

impl GadgetSpec {
    pub fn new(family: GadgetFamily) -> Self {
        GadgetSpec {
            family,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: usize) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    /// Parses `k=4,t=3` style parameter lists.
    pub fn parse_params(family: GadgetFamily, text: &str) -> Result<Self> {
        let mut spec = GadgetSpec::new(family);
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Precondition(format!("parameter `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("parameter `{item}` is not an integer")))?;
            spec.params.insert(key.trim().to_string(), value);
        }
        Ok(spec)
    }

    fn get(&self, key: &str) -> Result<usize> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{} needs parameter `{key}`", self.family)))
    }

    pub fn build(&self) -> Result<Graph> {
        if let Some(extra) = self.params.keys().find(|k| !self.family.params().contains(&k.as_str())) {
            return Err(Error::Precondition(format!(
                "{} does not take parameter `{extra}`",
                self.family
            )));
        }
        match self.family {
            GadgetFamily::BinomialTree => binomial_tree(self.get("k")?),
            GadgetFamily::PrunedBinomialTree => {
                let x = self.params.get("x").copied().unwrap_or(0);
                Ok(pruned_binomial_tree(self.get("k")?, self.get("i")?, x)?.graph)
            }
            GadgetFamily::HalfGraph => half_graph(self.get("t")?),
            GadgetFamily::HalfGraphPath => half_graph_path(self.get("l")?, self.get("t")?),
            GadgetFamily::HalfGraphCycle => half_graph_cycle(self.get("l")?, self.get("t")?),
            GadgetFamily::AntiMatching => anti_matching(self.get("t")?),
            GadgetFamily::StarForest => star_forest(self.get("count")?, self.get("leaves")?),
            GadgetFamily::T5EdgeTree => Ok(t5_edge_tree().graph),
        }
    }
}

/// True iff no two edges `a b`, `a' b'` across `(a_side, b_side)` form an
/// induced `2K_2`.
pub fn is_2k2_free_across(g: &Graph, a_side: &VertexSet, b_side: &VertexSet) -> bool {
    let cross: Vec<(usize, usize)> = a_side
        .iter()
        .flat_map(|a| b_side.iter().filter(move |&b| g.has_edge(a, b)).map(move |b| (a, b)))
        .collect();
    for (x, &(a, b)) in cross.iter().enumerate() {
        for &(a2, b2) in &cross[x + 1..] {
            if a != a2 && b != b2 && !g.has_edge(a, b2) && !g.has_edge(a2, b) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_shapes() {
        assert_eq!(binomial_tree(1).unwrap().n(), 1);
        let t3 = binomial_tree(3).unwrap();
        assert_eq!(t3.n(), 4);
        assert_eq!(t3.degree(0), 2);
        let t4 = binomial_tree(4).unwrap();
        assert_eq!(t4.edge_count(), 7);
        assert_eq!(t4.degree(0), 3);
        assert!(binomial_tree(26).is_err());
    }

    #[test]
    fn pruned_trees() {
        let p = pruned_binomial_tree(5, 2, 1).unwrap();
        assert_eq!(p.graph.n(), 15);
        assert_eq!(p.x_members.len(), 1);
        assert_eq!(p.eligible, 2);
        let same = pruned_binomial_tree(5, 3, 0).unwrap();
        assert_eq!(same.graph.edge_count(), binomial_tree(5).unwrap().edge_count());
        let small = pruned_binomial_tree(4, 2, 1).unwrap();
        assert_eq!(small.graph.n(), 7);
        assert!(pruned_binomial_tree(5, 4, 0).is_err());
        assert!(pruned_binomial_tree(5, 2, 3).is_err());
    }

    #[test]
    fn half_graph_shapes() {
        assert_eq!(half_graph(1).unwrap().edge_count(), 0);
        let h2 = half_graph(2).unwrap();
        assert_eq!(h2.edges().collect::<Vec<_>>(), vec![(0, 3)]);
        let h4 = half_graph(4).unwrap();
        assert_eq!(h4.edge_count(), 6);
        assert!(is_2k2_free_across(
            &h4,
            &VertexSet::from([0, 1, 2, 3]),
            &VertexSet::from([4, 5, 6, 7])
        ));
        let p = half_graph_path(1, 5).unwrap();
        assert_eq!(
            p.edges().collect::<Vec<_>>(),
            half_graph(5).unwrap().edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn anti_matching_is_complement_of_matching() {
        assert_eq!(anti_matching(1).unwrap().edge_count(), 0);
        let c4 = anti_matching(2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        let m = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(
            anti_matching(3).unwrap().edges().collect::<Vec<_>>(),
            m.complement().edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn t5_edge_tree_shape() {
        let e = t5_edge_tree();
        assert_eq!(e.graph.n(), 14);
        assert_eq!(e.graph.degree(e.beta), 1);
        assert_eq!(e.graph.degree(e.gamma), 1);
        assert_eq!(e.graph.role(e.beta), Some("beta"));
    }

    #[test]
    fn spec_parsing() {
        let fam: GadgetFamily = "binomial-tree".parse().unwrap();
        let g = GadgetSpec::parse_params(fam, "k=4").unwrap().build().unwrap();
        assert_eq!(g.n(), 8);
        assert!(GadgetSpec::parse_params(fam, "t=4").unwrap().build().is_err());
        assert!("nonsense".parse::<GadgetFamily>().is_err());
    }
}
