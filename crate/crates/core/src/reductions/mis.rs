//! Multicolored independent set to rooted Grundy coloring.

use serde::{Deserialize, Serialize};

use crate::coloring::WitnessCertificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Graph whose vertex set is split into `k` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisInstance {
    pub graph: Graph,
    pub parts: Vec<VertexSet>,
}

impl MisInstance {
    pub fn new(graph: Graph, parts: Vec<VertexSet>) -> Result<Self> {
        let inst = MisInstance { graph, parts };
        inst.validate()?;
        Ok(inst)
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn validate(&self) -> Result<()> {
        validate_parts(&self.graph, &self.parts)
    }

    /// Brute-force search for one vertex per part, pairwise non-adjacent.
    pub fn find_solution(&self) -> Option<Vec<usize>> {
        fn rec(g: &Graph, parts: &[VertexSet], chosen: &mut Vec<usize>) -> bool {
            let Some(part) = parts.get(chosen.len()) else {
                return true;
            };
            for v in part.iter() {
                if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                    chosen.push(v);
                    if rec(g, parts, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        let mut chosen = Vec::new();
        rec(&self.graph, &self.parts, &mut chosen).then_some(chosen)
    }

    pub fn check_solution(&self, solution: &[usize]) -> Result<()> {
        if solution.len() != self.k() {
            return Err(Error::InvalidSolution(format!(
                "{} vertices for {} parts",
                solution.len(),
                self.k()
            )));
        }
        for (i, &v) in solution.iter().enumerate() {
            if !self.parts[i].contains(v) {
                return Err(Error::InvalidSolution(format!("vertex {v} is not in part {}", i + 1)));
            }
            for (j, &u) in solution.iter().enumerate().take(i) {
                if self.graph.has_edge(u, v) {
                    return Err(Error::InvalidSolution(format!(
                        "chosen vertices {u} (part {}) and {v} (part {}) are adjacent",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn validate_parts(g: &Graph, parts: &[VertexSet]) -> Result<()> {
    let mut seen = VertexSet::new();
    for (i, p) in parts.iter().enumerate() {
        p.validate(g.n())?;
        for v in p.iter() {
            if !seen.insert(v) {
                return Err(Error::InvalidInstance(format!(
                    "vertex {v} is in more than one part (again in part {})",
                    i + 1
                )));
            }
        }
    }
    if seen.len() != g.n() {
        return Err(Error::InvalidInstance("parts do not cover the vertex set".into()));
    }
    Ok(())
}

/// Rooted Grundy instance: `root` can reach color `target` iff the source
/// has a multicolored independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisReduction {
    pub graph: Graph,
    pub root: usize,
    pub target: usize,
    /// `clique[i]` is the vertex joined to part `i`; the root is separate.
    pub clique: Vec<usize>,
    pub pendant: usize,
}

/// Copies the source graph, adds a clique `{root, v_1..v_k}` with `v_i`
/// complete to part `i`, and hangs a pendant vertex on the root.
pub fn reduce_mis_to_rooted_grundy(inst: &MisInstance) -> Result<MisReduction> {
    inst.validate()?;
    let k = inst.k();
    let mut g = inst.graph.clone();
    for v in 0..g.n() {
        let part = inst.parts.iter().position(|p| p.contains(v)).expect("parts cover V");
        g.set_role(v, format!("H/{}", part + 1));
    }
    let root = g.add_vertex();
    g.set_role(root, "root");
    let clique: Vec<usize> = (0..k).map(|_| g.add_vertex()).collect();
    let pendant = g.add_vertex();
    g.set_role(pendant, "pendant");
    let members: Vec<usize> = std::iter::once(root).chain(clique.iter().copied()).collect();
    for (a, &u) in members.iter().enumerate() {
        for &w in &members[a + 1..] {
            g.add_edge(u, w)?;
        }
    }
    g.add_edge(root, pendant)?;
    for (i, &c) in clique.iter().enumerate() {
        g.set_role(c, format!("clique/{}", i + 1));
        for v in inst.parts[i].iter() {
            g.add_edge(c, v)?;
        }
    }
    Ok(MisReduction {
        graph: g,
        root,
        target: k + 2,
        clique,
        pendant,
    })
}

/// Grundy certificate giving the root color `k + 2`: the solution and the
/// pendant take color 1, `v_i` takes `i + 1`.
pub fn mis_solution_certificate(
    inst: &MisInstance,
    red: &MisReduction,
    solution: &[usize],
) -> Result<WitnessCertificate> {
    inst.check_solution(solution)?;
    let mut classes = vec![solution.iter().copied().chain([red.pendant]).collect::<VertexSet>()];
    classes.extend(red.clique.iter().map(|&c| VertexSet::from([c])));
    classes.push(VertexSet::from([red.root]));
    Ok(WitnessCertificate::grundy(classes))
}

#[derive(Serialize, Deserialize)]
pub(crate) struct MisJson {
    #[serde(default)]
    pub schema_version: Option<u32>,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub parts: Vec<Vec<usize>>,
}

pub(crate) fn one_based(id: usize, n: usize) -> Result<usize> {
    if id == 0 || id > n {
        Err(Error::InvalidInstance(format!("vertex id {id} outside 1..={n}")))
    } else {
        Ok(id - 1)
    }
}

impl MisInstance {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MisJson = serde_json::from_str(text).map_err(|e| Error::Parse {
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
        MisInstance::new(g, parts)
    }

    pub fn to_json(&self) -> String {
        let doc = MisJson {
            schema_version: Some(crate::io::SCHEMA_VERSION),
            n: self.graph.n(),
            edges: self.graph.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
            parts: self.parts.iter().map(|p| p.iter().map(|v| v + 1).collect()).collect(),
        };
        serde_json::to_string(&doc).expect("instance JSON is serializable")
    }
}
