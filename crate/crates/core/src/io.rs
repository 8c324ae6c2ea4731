//! Text formats. Files use 1-based vertex ids; everything in memory is
//! 0-based, and the conversion happens only here.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coloring::{WitnessCertificate, WitnessKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dimacs,
    Dot,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(GraphFormat::Json),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "dot" => Ok(GraphFormat::Dot),
            other => Err(Error::Precondition(format!("unknown graph format `{other}`"))),
        }
    }
}

fn to_one_based(v: usize) -> usize {
    v + 1
}

fn from_one_based(id: usize, n: usize, line: usize) -> Result<usize> {
    if id == 0 || id > n {
        Err(Error::Parse {
            line,
            message: format!("vertex id {id} outside 1..={n}"),
        })
    } else {
        Ok(id - 1)
    }
}

/// Parses `p edge n m` / `e u v` text. `c role <v> <name>` comment lines
/// restore role labels; other comments are ignored.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut parts = raw.split_whitespace();
        match parts.next() {
            None => continue,
            Some("c") => {
                if let (Some("role"), Some(v), Some(name)) = (parts.next(), parts.next(), parts.next()) {
                    let g = g.as_mut().ok_or_else(|| Error::Parse {
                        line,
                        message: "role before problem line".into(),
                    })?;
                    let v: usize = v.parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad vertex `{v}`"),
                    })?;
                    let v = from_one_based(v, g.n(), line)?;
                    g.set_role(v, name);
                }
            }
            Some("p") => {
                if g.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "second problem line".into(),
                    });
                }
                let _format = parts.next();
                let n: usize = parts.next().and_then(|x| x.parse().ok()).ok_or_else(|| Error::Parse {
                    line,
                    message: "problem line must read `p edge <n> <m>`".into(),
                })?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let g = g.as_mut().ok_or_else(|| Error::Parse {
                    line,
                    message: "edge before problem line".into(),
                })?;
                let mut ends = [0usize; 2];
                for end in &mut ends {
                    let tok = parts.next().ok_or_else(|| Error::Parse {
                        line,
                        message: "edge line needs two endpoints".into(),
                    })?;
                    let id: usize = tok.parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad vertex `{tok}`"),
                    })?;
                    *end = from_one_based(id, g.n(), line)?;
                }
                g.add_edge(ends[0], ends[1]).map_err(|e| Error::Parse {
                    line,
                    message: e.to_string(),
                })?;
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unexpected line type `{other}`"),
                })
            }
        }
    }
    g.ok_or(Error::Parse {
        line: 0,
        message: "missing problem line".into(),
    })
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    for (&v, role) in g.roles() {
        if !role.contains(char::is_whitespace) {
            let _ = writeln!(out, "c role {} {}", to_one_based(v), role);
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", to_one_based(u), to_one_based(v));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    #[serde(default)]
    schema_version: Option<u32>,
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    roles: BTreeMap<String, String>,
}

pub fn graph_to_json_value(g: &Graph) -> Value {
    let doc = GraphJson {
        schema_version: Some(SCHEMA_VERSION),
        n: g.n(),
        edges: g.edges().map(|(u, v)| [to_one_based(u), to_one_based(v)]).collect(),
        roles: g
            .roles()
            .iter()
            .map(|(&v, r)| (to_one_based(v).to_string(), r.clone()))
            .collect(),
    };
    serde_json::to_value(doc).expect("graph JSON is serializable")
}

pub fn write_json(g: &Graph) -> String {
    serde_json::to_string(&graph_to_json_value(g)).expect("graph JSON is serializable")
}

pub fn graph_from_json_value(v: &Value) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })?;
    let mut g = Graph::new(doc.n);
    for [u, w] in doc.edges {
        let a = from_one_based(u, doc.n, 0)?;
        let b = from_one_based(w, doc.n, 0)?;
        g.add_edge(a, b).map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })?;
    }
    for (k, r) in doc.roles {
        let id: usize = k.parse().map_err(|_| Error::Parse {
            line: 0,
            message: format!("bad role key `{k}`"),
        })?;
        g.set_role(from_one_based(id, doc.n, 0)?, r);
    }
    Ok(g)
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    // Accept a solver output or reduction output that embeds the graph.
    match v.get("graph") {
        Some(inner) if v.get("n").is_none() => graph_from_json_value(inner),
        _ => graph_from_json_value(&v),
    }
}

/// JSON if the text starts with `{`, DIMACS otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_dimacs(text)
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz export; roles become a `role` attribute and the label.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let id = to_one_based(v);
        match g.role(v) {
            Some(r) => {
                let r = dot_escape(r);
                let _ = writeln!(out, "  {id} [label=\"{id}:{r}\", role=\"{r}\"];");
            }
            None => {
                let _ = writeln!(out, "  {id};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", to_one_based(u), to_one_based(v));
    }
    out.push_str("}\n");
    out
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => write_json(g) + "\n",
        GraphFormat::Dimacs => write_dimacs(g),
        GraphFormat::Dot => write_dot(g),
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    #[serde(default)]
    schema_version: Option<u32>,
    kind: WitnessKind,
    classes: Vec<Vec<usize>>,
    #[serde(default)]
    centers: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    support: Option<Vec<usize>>,
}

pub fn certificate_to_json_value(cert: &WitnessCertificate) -> Value {
    let one = |s: &VertexSet| s.iter().map(to_one_based).collect::<Vec<_>>();
    let union = cert.classes.iter().fold(VertexSet::new(), |acc, c| acc.union(c));
    let doc = CertificateJson {
        schema_version: Some(SCHEMA_VERSION),
        kind: cert.kind,
        classes: cert.classes.iter().map(one).collect(),
        centers: cert
            .centers
            .as_ref()
            .map(|c| c.iter().map(|&v| to_one_based(v)).collect()),
        // Only spelled out when it differs from the union of classes.
        support: (union != cert.support).then(|| one(&cert.support)),
    };
    serde_json::to_value(doc).expect("certificate JSON is serializable")
}

pub fn certificate_from_json_value(v: &Value) -> Result<WitnessCertificate> {
    let doc: CertificateJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })?;
    let zero = |id: usize| {
        id.checked_sub(1).ok_or(Error::Parse {
            line: 0,
            message: "vertex ids are 1-based".into(),
        })
    };
    let mut classes = Vec::with_capacity(doc.classes.len());
    for c in &doc.classes {
        let members = c.iter().map(|&x| zero(x)).collect::<Result<Vec<_>>>()?;
        let set = VertexSet::from(members.clone());
        if set.len() != members.len() {
            return Err(Error::MalformedCertificate("repeated vertex inside a class".into()));
        }
        classes.push(set);
    }
    let centers = match doc.centers {
        Some(c) => Some(c.into_iter().map(zero).collect::<Result<Vec<_>>>()?),
        None => None,
    };
    let support = match doc.support {
        Some(s) => s.into_iter().map(zero).collect::<Result<VertexSet>>()?,
        None => classes.iter().fold(VertexSet::new(), |acc, c| acc.union(c)),
    };
    Ok(WitnessCertificate {
        kind: doc.kind,
        support,
        classes,
        centers,
    })
}

pub fn parse_certificate(text: &str) -> Result<WitnessCertificate> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    // Solver outputs wrap the certificate.
    match v.get("certificate") {
        Some(inner) if v.get("kind").is_none() => certificate_from_json_value(inner),
        _ => certificate_from_json_value(&v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip() {
        let mut g = Graph::cycle(5);
        g.set_role(0, "root");
        let text = write_dimacs(&g);
        assert!(text.starts_with("p edge 5 5"));
        assert_eq!(parse_dimacs(&text).unwrap(), g);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 2 1\ne 1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_dimacs("c nothing\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut g = Graph::path(4);
        g.set_role(3, "end");
        let text = write_json(&g);
        assert!(text.contains("\"schema_version\":1"));
        assert_eq!(parse_graph(&text).unwrap(), g);
        let plain = parse_graph(r#"{"n": 3, "edges": [[1,2],[2,3]]}"#).unwrap();
        assert_eq!(plain, Graph::path(3));
        assert!(parse_graph(r#"{"n": 2, "edges": [[0,1]]}"#).is_err());
    }

    #[test]
    fn dot_has_roles() {
        let mut g = Graph::path(2);
        g.set_role(0, "root");
        let dot = write_dot(&g);
        assert!(dot.contains("role=\"root\""));
        assert!(dot.contains("1 -- 2"));
    }

    #[test]
    fn certificate_round_trip() {
        let cert = WitnessCertificate::with_centers(
            WitnessKind::BColoring,
            vec![VertexSet::from([0, 2]), VertexSet::from([1])],
            vec![0, 1],
        );
        let v = certificate_to_json_value(&cert);
        assert_eq!(v["kind"], "b_coloring");
        assert_eq!(v["classes"][0][1], 3);
        assert_eq!(certificate_from_json_value(&v).unwrap(), cert);
        let wrapped = serde_json::json!({"value": 2, "certificate": v});
        assert_eq!(parse_certificate(&wrapped.to_string()).unwrap(), cert);
    }
}
