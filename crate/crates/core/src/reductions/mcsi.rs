//! Multicolored subgraph isomorphism (3-regular pattern) to Grundy
//! coloring with `q = ⌈log k⌉ + 55`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::mis::{one_based, validate_parts};
use super::ReductionOutput;
use crate::coloring::{verify_grundy, WitnessCertificate};
use crate::error::{Error, Result};
use crate::exact::rooted_grundy;
use crate::generators::{binomial_color, t5_edge_tree};
use crate::graph::{induced_subgraph, Graph, VertexSet};

/// Order above which the top binomial tree is never materialized.
pub const MAX_BUDGET_ORDER: usize = 16;
/// Vertices of `T_q` kept around each mapped color-6 vertex: the vertex
/// and its child subtrees `T_1..T_4`.
pub const FRONTIER: u128 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McsiInstance {
    pub graph: Graph,
    pub parts: Vec<VertexSet>,
    /// Pattern on `[k]` (0-based here).
    pub pattern: Graph,
}

impl McsiInstance {
    pub fn new(graph: Graph, parts: Vec<VertexSet>, pattern: Graph) -> Result<Self> {
        let inst = McsiInstance { graph, parts, pattern };
        inst.validate()?;
        Ok(inst)
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Part index of every vertex.
    pub fn part_of(&self) -> Vec<usize> {
        let mut part = vec![0; self.graph.n()];
        for (i, p) in self.parts.iter().enumerate() {
            for v in p.iter() {
                part[v] = i;
            }
        }
        part
    }

    pub fn validate(&self) -> Result<()> {
        validate_parts(&self.graph, &self.parts)?;
        let k = self.k();
        if k == 0 || !k.is_multiple_of(2) {
            return Err(Error::InvalidInstance(format!(
                "number of parts must be positive and even, got {k}"
            )));
        }
        if self.pattern.n() != k {
            return Err(Error::InvalidInstance(format!(
                "pattern has {} vertices for {k} parts",
                self.pattern.n()
            )));
        }
        if let Some(i) = (0..k).find(|&i| self.pattern.degree(i) != 3) {
            return Err(Error::InvalidInstance(format!(
                "pattern vertex {} has degree {}, expected 3",
                i + 1,
                self.pattern.degree(i)
            )));
        }
        let part = self.part_of();
        for (u, v) in self.graph.edges() {
            let (i, j) = (part[u], part[v]);
            if i == j {
                return Err(Error::InvalidInstance(format!(
                    "edge {}-{} lies inside part {}",
                    u + 1,
                    v + 1,
                    i + 1
                )));
            }
            if !self.pattern.has_edge(i, j) {
                return Err(Error::InvalidInstance(format!(
                    "edge {}-{} joins parts {} and {}, which are not adjacent in the pattern",
                    u + 1,
                    v + 1,
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// `solution[i] ∈ V_i` and every pattern edge is realized.
    pub fn check_solution(&self, solution: &[usize]) -> Result<()> {
        if solution.is_empty() {
            return Err(Error::InvalidSolution("empty solution".into()));
        }
        if solution.len() != self.k() {
            return Err(Error::InvalidSolution(format!(
                "{} vertices for {} parts",
                solution.len(),
                self.k()
            )));
        }
        for (i, &v) in solution.iter().enumerate() {
            if !self.parts[i].contains(v) {
                return Err(Error::InvalidSolution(format!(
                    "vertex {} is not in part {}",
                    v + 1,
                    i + 1
                )));
            }
        }
        for (i, j) in self.pattern.edges() {
            if !self.graph.has_edge(solution[i], solution[j]) {
                return Err(Error::InvalidSolution(format!(
                    "pattern edge {}-{} is not realized: vertices {} and {} are not adjacent",
                    i + 1,
                    j + 1,
                    solution[i] + 1,
                    solution[j] + 1
                )));
            }
        }
        Ok(())
    }

    /// Brute force over one vertex per part.
    pub fn find_solution(&self) -> Option<Vec<usize>> {
        fn rec(inst: &McsiInstance, chosen: &mut Vec<usize>) -> bool {
            let i = chosen.len();
            let Some(part) = inst.parts.get(i) else {
                return true;
            };
            for v in part.iter() {
                let ok = (0..i).all(|j| !inst.pattern.has_edge(i, j) || inst.graph.has_edge(chosen[j], v));
                if ok {
                    chosen.push(v);
                    if rec(inst, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        let mut chosen = Vec::new();
        rec(self, &mut chosen).then_some(chosen)
    }

    /// The three pattern neighbors of part `i`, ascending.
    fn slots(&self, i: usize) -> [usize; 3] {
        let n: Vec<usize> = self.pattern.neighbors(i).iter().copied().collect();
        [n[0], n[1], n[2]]
    }

    /// `V(H) ∪ E(H)` in the order the mapped vertices of `T_q` are taken:
    /// parts first, then pattern edges ascending.
    pub fn targets(&self) -> Vec<FTarget> {
        (0..self.k())
            .map(FTarget::Part)
            .chain(self.pattern.edges().map(|(i, j)| FTarget::Edge(i, j)))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct McsiJson {
    #[serde(default)]
    schema_version: Option<u32>,
    n: usize,
    edges: Vec<[usize; 2]>,
    parts: Vec<Vec<usize>>,
    pattern_edges: Vec<[usize; 2]>,
}

impl McsiInstance {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: McsiJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let mut g = Graph::new(doc.n);
        for [u, v] in doc.edges {
            g.add_edge(one_based(u, doc.n)?, one_based(v, doc.n)?)?;
        }
        let parts = doc
            .parts
            .iter()
            .map(|p| p.iter().map(|&v| one_based(v, doc.n)).collect::<Result<VertexSet>>())
            .collect::<Result<Vec<_>>>()?;
        let k = parts.len();
        let mut pattern = Graph::new(k);
        for [i, j] in doc.pattern_edges {
            pattern.add_edge(one_based(i, k)?, one_based(j, k)?)?;
        }
        McsiInstance::new(g, parts, pattern)
    }

    pub fn to_json(&self) -> String {
        let doc = McsiJson {
            schema_version: Some(crate::io::SCHEMA_VERSION),
            n: self.graph.n(),
            edges: self.graph.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
            parts: self.parts.iter().map(|p| p.iter().map(|v| v + 1).collect()).collect(),
            pattern_edges: self.pattern.edges().map(|(i, j)| [i + 1, j + 1]).collect(),
        };
        serde_json::to_string(&doc).expect("instance JSON is serializable")
    }
}

/// Element of `V(H) ∪ E(H)`, 0-based, edges with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FTarget {
    Part(usize),
    Edge(usize, usize),
}

impl fmt::Display for TreeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TreeKey::Vertex(u) => write!(f, "T5({})", u + 1),
            TreeKey::Edge(u, v) => write!(f, "T5({},{})", u + 1, v + 1),
        }
    }
}

/// Which `T_5` copy a tree vertex belongs to: one per source vertex and
/// one per source edge `uv` with `u` in the lower-indexed part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeKey {
    Vertex(usize),
    Edge(usize, usize),
}

/// Role of a vertex of the Grundy instance. Source vertex ids and parts
/// are 0-based; `Display` shows them 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum McsiRole {
    /// `l(u)` in `L_i`.
    L { part: usize, u: usize },
    /// `r(u)` in `R_i`.
    R { part: usize, u: usize },
    /// `z(u, v)` in `V_{i, i(slot)}`, `slot ∈ {1, 2, 3}`.
    Z {
        part: usize,
        slot: usize,
        u: usize,
        v: usize,
    },
    /// Vertex `idx` of the 14-vertex edge tree (root 0).
    Tree { key: TreeKey, idx: usize },
    /// Vertex `index` of the top binomial tree; `f` is set on the mapped
    /// color-6 vertices.
    Top { index: u128, f: Option<FTarget> },
}

impl fmt::Display for McsiRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            McsiRole::L { part, u } => write!(f, "l{}({})", part + 1, u + 1),
            McsiRole::R { part, u } => write!(f, "r{}({})", part + 1, u + 1),
            McsiRole::Z { part, slot, u, v } => write!(f, "z{}.{}({},{})", part + 1, slot, u + 1, v + 1),
            McsiRole::Tree { key, idx } => {
                let tree = key;
                let t = edge_tree_shape();
                if idx == t.root {
                    write!(f, "{tree}/root")
                } else if idx == t.beta {
                    write!(f, "{tree}/beta")
                } else if idx == t.gamma {
                    write!(f, "{tree}/gamma")
                } else {
                    write!(f, "{tree}#{idx}")
                }
            }
            McsiRole::Top { index, f: None } => write!(f, "top#{index}"),
            McsiRole::Top {
                f: Some(FTarget::Part(i)),
                ..
            } => write!(f, "f({})", i + 1),
            McsiRole::Top {
                f: Some(FTarget::Edge(i, j)),
                ..
            } => write!(f, "f({},{})", i + 1, j + 1),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct TreeShape {
    root: usize,
    beta: usize,
    gamma: usize,
    /// First removed leaf: local ids at or above it are shifted down by one
    /// relative to `T_5`.
    leaf_beta: usize,
}

fn edge_tree_shape() -> TreeShape {
    // Fixed by the T_5 numbering: leaves 7 and 15 are removed.
    TreeShape {
        root: 0,
        beta: 6,
        gamma: 13,
        leaf_beta: 7,
    }
}

/// Color of local vertex `idx` of the edge tree in the first-fit
/// coloring of `T_5` that gives the root color 5.
fn edge_tree_color(idx: usize) -> usize {
    let shape = edge_tree_shape();
    let old = if idx < shape.leaf_beta { idx } else { idx + 1 };
    binomial_color(old, 5)
}

/// Top-tree handling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum McsiMode {
    /// `q = ⌈log k⌉ + 55`; `T_q` is kept as counts plus the materialized
    /// frontier `[f, f + 16)` of each mapped vertex.
    Faithful,
    /// Materialize `T_{q'}` with `q' ≤ 16` and target `q'`. The output no
    /// longer encodes the source instance.
    Budget(usize),
}

pub fn ceil_log2(k: usize) -> usize {
    if k <= 1 {
        0
    } else {
        (usize::BITS - (k - 1).leading_zeros()) as usize
    }
}

/// Index in `T_q` of the `m`-th mapped color-6 vertex: the child `2^5`
/// positions into a color-7 vertex.
pub fn f_index(m: usize) -> u128 {
    96 + 128 * m as u128
}

/// Closed-form count of the part of `G'` outside the top tree.
pub fn mcsi_polynomial_vertices(n: usize, m: usize) -> usize {
    16 * n + 16 * m
}

pub fn reduce_mcsi_to_grundy(inst: &McsiInstance, mode: McsiMode) -> Result<ReductionOutput<McsiRole>> {
    inst.validate()?;
    let k = inst.k();
    let part = inst.part_of();
    let targets = inst.targets();
    let q_faithful = ceil_log2(k) + 55;
    let (q, top_order) = match mode {
        McsiMode::Faithful => (q_faithful, q_faithful),
        McsiMode::Budget(qb) => {
            if qb > MAX_BUDGET_ORDER {
                return Err(Error::CapExceeded {
                    what: "budget top-tree order",
                    size: qb,
                    cap: MAX_BUDGET_ORDER,
                });
            }
            if qb < 8 || (1usize << (qb - 8)) < targets.len() {
                return Err(Error::Precondition(format!(
                    "T_{qb} has too few color-7 vertices for {} mapped vertices",
                    targets.len()
                )));
            }
            (qb, qb)
        }
    };

    let mut g = Graph::new(0);
    let mut roles: Vec<McsiRole> = Vec::new();
    let mut add = |g: &mut Graph, role: McsiRole| {
        roles.push(role);
        g.add_vertex()
    };

    // Gadgets H_i: five layers of (vertex id, source u).
    let mut l_id = vec![0; inst.graph.n()];
    let mut r_id = vec![0; inst.graph.n()];
    let mut z_id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut layers_of = Vec::with_capacity(k);
    for i in 0..k {
        let slots = inst.slots(i);
        let mut layers: Vec<Vec<(usize, usize)>> = Vec::with_capacity(5);
        layers.push(
            inst.parts[i]
                .iter()
                .map(|u| {
                    let id = add(&mut g, McsiRole::L { part: i, u });
                    l_id[u] = id;
                    (id, u)
                })
                .collect(),
        );
        for (p, &j) in slots.iter().enumerate() {
            let mut layer = Vec::new();
            for u in inst.parts[i].iter() {
                for &v in inst.graph.neighbors(u) {
                    if part[v] == j {
                        let id = add(
                            &mut g,
                            McsiRole::Z {
                                part: i,
                                slot: p + 1,
                                u,
                                v,
                            },
                        );
                        z_id.insert((u, v), id);
                        layer.push((id, u));
                    }
                }
            }
            layers.push(layer);
        }
        layers.push(
            inst.parts[i]
                .iter()
                .map(|u| {
                    let id = add(&mut g, McsiRole::R { part: i, u });
                    r_id[u] = id;
                    (id, u)
                })
                .collect(),
        );
        for w in layers.windows(2) {
            for &(a, u) in &w[0] {
                for &(b, u2) in &w[1] {
                    if u < u2 {
                        g.add_edge(a, b)?;
                    }
                }
            }
        }
        layers_of.push(layers);
    }

    // Edge trees, grouped by the target their roots hang from.
    let shape = t5_edge_tree();
    let mut tree = |g: &mut Graph, key: TreeKey, beta_to: usize, gamma_to: usize| -> Result<usize> {
        let base = g.n();
        for idx in 0..shape.graph.n() {
            add(g, McsiRole::Tree { key, idx });
        }
        for (a, b) in shape.graph.edges() {
            g.add_edge(base + a, base + b)?;
        }
        g.add_edge(base + shape.beta, beta_to)?;
        g.add_edge(base + shape.gamma, gamma_to)?;
        Ok(base + shape.root)
    };
    let mut r_sets: HashMap<FTarget, Vec<usize>> = HashMap::new();
    for (u, v) in inst.graph.edges() {
        let (u, v) = if part[u] < part[v] { (u, v) } else { (v, u) };
        let root = tree(&mut g, TreeKey::Edge(u, v), z_id[&(u, v)], z_id[&(v, u)])?;
        r_sets.entry(FTarget::Edge(part[u], part[v])).or_default().push(root);
    }
    for u in 0..inst.graph.n() {
        let root = tree(&mut g, TreeKey::Vertex(u), l_id[u], r_id[u])?;
        r_sets.entry(FTarget::Part(part[u])).or_default().push(root);
    }
    let polynomial = g.n();

    // Top tree.
    let f_of: HashMap<u128, FTarget> = targets.iter().enumerate().map(|(m, &t)| (f_index(m), t)).collect();
    let removed = |x: u128| f_of.keys().any(|&f| x >= f + FRONTIER && x < f + 2 * FRONTIER);
    let indices: Vec<u128> = match mode {
        McsiMode::Faithful => (0..targets.len())
            .flat_map(|m| (0..FRONTIER).map(move |x| f_index(m) + x))
            .collect(),
        McsiMode::Budget(_) => (0..(1u128 << (top_order - 1))).filter(|&x| !removed(x)).collect(),
    };
    let mut top_id: HashMap<u128, usize> = HashMap::with_capacity(indices.len());
    for &x in &indices {
        let id = add(
            &mut g,
            McsiRole::Top {
                index: x,
                f: f_of.get(&x).copied(),
            },
        );
        top_id.insert(x, id);
    }
    for &x in &indices {
        if x != 0 {
            if let Some(&p) = top_id.get(&(x & (x - 1))) {
                g.add_edge(p, top_id[&x])?;
            }
        }
    }
    for (m, t) in targets.iter().enumerate() {
        let f = top_id[&f_index(m)];
        for &root in r_sets.get(t).map(Vec::as_slice).unwrap_or(&[]) {
            g.add_edge(f, root)?;
        }
    }

    let mut out = ReductionOutput::new(g, q, roles);
    out.equivalence_preserving = matches!(mode, McsiMode::Faithful);
    let n = inst.graph.n();
    let m = inst.graph.edge_count();
    let full_top = 1u128 << (top_order - 1);
    let kept_top = full_top - FRONTIER * targets.len() as u128;
    out.audit.insert("k".into(), json!(k));
    out.audit.insert("q".into(), json!(q));
    out.audit.insert("faithful_q".into(), json!(q_faithful));
    out.audit.insert(
        "mode".into(),
        json!(match mode {
            McsiMode::Faithful => "faithful".to_string(),
            McsiMode::Budget(qb) => format!("budget({qb})"),
        }),
    );
    out.audit.insert("polynomial_vertices".into(), json!(polynomial));
    out.audit.insert(
        "closed_form_polynomial_vertices".into(),
        json!(mcsi_polynomial_vertices(n, m)),
    );
    // Counts of T_q can exceed u64, so they are written as decimal strings.
    out.audit.insert("top_tree_order".into(), json!(top_order));
    out.audit
        .insert("top_tree_vertices_after_surgery".into(), json!(kept_top.to_string()));
    out.audit.insert("top_tree_materialized".into(), json!(indices.len()));
    out.audit
        .insert("top_tree_lazy".into(), Value::Bool(matches!(mode, McsiMode::Faithful)));
    out.audit
        .insert("color7_vertices".into(), json!((1u128 << (top_order - 8)).to_string()));
    out.audit.insert(
        "mapped".into(),
        Value::Array(
            targets
                .iter()
                .enumerate()
                .map(|(m, t)| {
                    json!({
                        "index": f_index(m).to_string(),
                        "vertex": top_id[&f_index(m)],
                        "target": McsiRole::Top { index: f_index(m), f: Some(*t) }.to_string(),
                        "r_set": r_sets.get(t).map_or(0, Vec::len),
                    })
                })
                .collect(),
        ),
    );
    Ok(out)
}

/// Per-tree certificate: the tree and its two attachments, with the root
/// at color 5.
#[derive(Clone, Debug)]
pub struct TreeCertificate {
    pub key: TreeKey,
    pub certificate: WitnessCertificate,
    /// Rooted Grundy value of the root on the induced tree-plus-attachment
    /// subgraph.
    pub rooted_value: usize,
}

/// Forward-direction certificates for one source solution.
#[derive(Clone, Debug)]
pub struct McsiCertificates {
    /// `l(v_i)`, `r(v_i)` and every `z(v_i, v_j)`.
    pub color_one: VertexSet,
    pub trees: Vec<TreeCertificate>,
    /// Everything up to the mapped vertices at color 6.
    pub f_stage: WitnessCertificate,
    /// Budget mode only: the whole coloring with the top root at `q'`.
    pub full: Option<WitnessCertificate>,
}

fn certificate_from_colors(colors: &HashMap<usize, usize>) -> WitnessCertificate {
    let k = colors.values().copied().max().unwrap_or(0);
    let mut classes = vec![VertexSet::new(); k];
    for (&v, &c) in colors {
        classes[c - 1].insert(v);
    }
    WitnessCertificate::grundy(classes)
}

fn require_valid(g: &Graph, cert: &WitnessCertificate, what: &str) -> Result<()> {
    match verify_grundy(g, cert)? {
        crate::coloring::Verdict::Valid => Ok(()),
        crate::coloring::Verdict::Invalid(v) => Err(Error::Precondition(format!("{what} does not verify: {v}"))),
    }
}

/// Builds and verifies the certificates of the forward direction.
pub fn mcsi_solution_certificate(
    inst: &McsiInstance,
    out: &ReductionOutput<McsiRole>,
    solution: &[usize],
) -> Result<McsiCertificates> {
    inst.check_solution(solution)?;
    let id: HashMap<&McsiRole, usize> = out.roles.iter().enumerate().map(|(v, r)| (r, v)).collect();
    let lookup = |r: McsiRole| -> Result<usize> {
        id.get(&r)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("reduction output has no vertex {r}")))
    };
    let part = inst.part_of();
    let g = &out.graph;

    let mut color_one = VertexSet::new();
    let mut zs = HashMap::new();
    for (i, &v) in solution.iter().enumerate() {
        color_one.insert(lookup(McsiRole::L { part: i, u: v })?);
        color_one.insert(lookup(McsiRole::R { part: i, u: v })?);
        for (p, &j) in inst.slots(i).iter().enumerate() {
            let z = lookup(McsiRole::Z {
                part: i,
                slot: p + 1,
                u: v,
                v: solution[j],
            })?;
            color_one.insert(z);
            zs.insert((v, solution[j]), z);
        }
    }
    if !g.is_independent(&color_one) {
        return Err(Error::Precondition("color-1 set is not independent".into()));
    }

    let shape = t5_edge_tree();
    let mut keys: Vec<(TreeKey, usize, usize)> = Vec::new();
    for &v in solution {
        keys.push((
            TreeKey::Vertex(v),
            lookup(McsiRole::L { part: part[v], u: v })?,
            lookup(McsiRole::R { part: part[v], u: v })?,
        ));
    }
    for (i, j) in inst.pattern.edges() {
        let (u, v) = (solution[i], solution[j]);
        keys.push((TreeKey::Edge(u, v), zs[&(u, v)], zs[&(v, u)]));
    }
    let mut stage: HashMap<usize, usize> = color_one.iter().map(|v| (v, 1)).collect();
    let mut trees = Vec::new();
    let mut colored_roots = HashMap::new();
    for (key, a, b) in keys {
        let mut colors: HashMap<usize, usize> = HashMap::from([(a, 1), (b, 1)]);
        for idx in 0..shape.graph.n() {
            colors.insert(lookup(McsiRole::Tree { key, idx })?, edge_tree_color(idx));
        }
        let cert = certificate_from_colors(&colors);
        require_valid(g, &cert, &format!("tree certificate for {key:?}"))?;
        let support: VertexSet = colors.keys().copied().collect();
        let local = induced_subgraph(g, &support)?;
        let root = lookup(McsiRole::Tree { key, idx: shape.root })?;
        let rooted_value = rooted_grundy(&local.graph, local.old_to_new[root].expect("root in support"))?;
        if rooted_value != 5 {
            return Err(Error::Precondition(format!(
                "root of {key:?} reaches {rooted_value}, expected 5"
            )));
        }
        let target = match key {
            TreeKey::Vertex(u) => FTarget::Part(part[u]),
            TreeKey::Edge(u, v) => FTarget::Edge(part[u].min(part[v]), part[u].max(part[v])),
        };
        colored_roots.insert(target, root);
        stage.extend(colors);
        trees.push(TreeCertificate {
            key,
            certificate: cert,
            rooted_value,
        });
    }

    for (m, t) in inst.targets().into_iter().enumerate() {
        let f = f_index(m);
        for x in 0..FRONTIER {
            let v = lookup(McsiRole::Top {
                index: f + x,
                f: (x == 0).then_some(t),
            })?;
            let c = if x == 0 { 6 } else { x.trailing_zeros() as usize + 1 };
            stage.insert(v, c);
        }
        if !colored_roots.contains_key(&t) {
            return Err(Error::Precondition(format!("no colored tree root below {t:?}")));
        }
    }
    let f_stage = certificate_from_colors(&stage);
    require_valid(g, &f_stage, "f-stage certificate")?;

    let full = if out.equivalence_preserving {
        None
    } else {
        let mut all = stage;
        for (v, r) in out.roles.iter().enumerate() {
            if let McsiRole::Top { index, .. } = *r {
                all.insert(v, binomial_color(index as usize, out.target));
            }
        }
        let cert = certificate_from_colors(&all);
        require_valid(g, &cert, "full certificate")?;
        Some(cert)
    };

    Ok(McsiCertificates {
        color_one,
        trees,
        f_stage,
        full,
    })
}
