//! First-fit engine, witness certificates and their verifiers.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Per-vertex colors, `0` meaning uncolored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring { colors: vec![0; n] }
    }

    /// Number of distinct nonzero colors.
    pub fn order(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.iter().copied().filter(|&c| c > 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_color(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Classes `V_1..V_max`, possibly with empty entries.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::new(); self.max_color()];
        for (v, &c) in self.colors.iter().enumerate() {
            if c > 0 {
                out[c - 1].insert(v);
            }
        }
        out
    }

    pub fn colored(&self) -> VertexSet {
        (0..self.colors.len()).filter(|&v| self.colors[v] > 0).collect()
    }

    /// Grundy certificate over the colored vertices.
    pub fn to_grundy_certificate(&self) -> WitnessCertificate {
        WitnessCertificate::grundy(self.classes())
    }
}

/// An ordering together with the first-fit coloring it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyTrace {
    pub ordering: Vec<usize>,
    pub resulting: Coloring,
}

impl GreedyTrace {
    pub fn run(g: &Graph, ordering: Vec<usize>) -> Result<Self> {
        let resulting = first_fit(g, &ordering)?;
        Ok(GreedyTrace { ordering, resulting })
    }

    /// Colors in processing order.
    pub fn colors_in_order(&self) -> Vec<usize> {
        self.ordering.iter().map(|&v| self.resulting.colors[v]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Grundy,
    PartialGrundy,
    BColoring,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Grundy => "grundy",
            WitnessKind::PartialGrundy => "partial_grundy",
            WitnessKind::BColoring => "b_coloring",
        }
    }
}

/// A color-class partition of an explicit support set. `classes[i]` is
/// color `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub kind: WitnessKind,
    pub support: VertexSet,
    pub classes: Vec<VertexSet>,
    pub centers: Option<Vec<usize>>,
}

impl WitnessCertificate {
    pub fn grundy(classes: Vec<VertexSet>) -> Self {
        let support = classes.iter().fold(VertexSet::new(), |acc, c| acc.union(c));
        WitnessCertificate {
            kind: WitnessKind::Grundy,
            support,
            classes,
            centers: None,
        }
    }

    pub fn with_centers(kind: WitnessKind, classes: Vec<VertexSet>, centers: Vec<usize>) -> Self {
        let support = classes.iter().fold(VertexSet::new(), |acc, c| acc.union(c));
        WitnessCertificate {
            kind,
            support,
            classes,
            centers: Some(centers),
        }
    }

    pub fn order(&self) -> usize {
        self.classes.len()
    }

    /// Same classes and centers under another kind.
    pub fn reinterpret(&self, kind: WitnessKind) -> Self {
        WitnessCertificate { kind, ..self.clone() }
    }

    /// Grundy certificate seen as partial Grundy, using the smallest member
    /// of each class as its center.
    pub fn grundy_as_partial(&self) -> Self {
        let centers = self
            .classes
            .iter()
            .map(|c| c.as_slice().first().copied().unwrap_or(usize::MAX))
            .collect();
        WitnessCertificate {
            kind: WitnessKind::PartialGrundy,
            centers: Some(centers),
            ..self.clone()
        }
    }

    /// Drops classes above `k`, keeping their support out as well.
    pub fn truncate(&self, k: usize) -> Self {
        let classes: Vec<VertexSet> = self.classes.iter().take(k).cloned().collect();
        let support = classes.iter().fold(VertexSet::new(), |acc, c| acc.union(c));
        WitnessCertificate {
            kind: self.kind,
            support,
            classes,
            centers: self.centers.as_ref().map(|c| c.iter().take(k).copied().collect()),
        }
    }

    /// Per-vertex coloring of a graph on `n` vertices.
    pub fn to_coloring(&self, n: usize) -> Coloring {
        let mut colors = vec![0; n];
        for (i, class) in self.classes.iter().enumerate() {
            for v in class.iter() {
                if v < n {
                    colors[v] = i + 1;
                }
            }
        }
        Coloring { colors }
    }

    /// Checks the shape invariants that do not depend on the graph
    /// semantics: ids in range, disjoint classes covering the support,
    /// centers inside their classes.
    pub fn check_shape(&self, n: usize) -> Result<()> {
        self.support.validate(n)?;
        let mut seen = VertexSet::new();
        for (i, class) in self.classes.iter().enumerate() {
            class.validate(n)?;
            for v in class.iter() {
                if !seen.insert(v) {
                    return Err(Error::MalformedCertificate(format!(
                        "vertex {v} appears in more than one class (again in class {})",
                        i + 1
                    )));
                }
            }
        }
        if seen != self.support {
            return Err(Error::MalformedCertificate(
                "classes do not partition the support".into(),
            ));
        }
        if let Some(centers) = &self.centers {
            if centers.len() != self.classes.len() {
                return Err(Error::MalformedCertificate(format!(
                    "{} centers for {} classes",
                    centers.len(),
                    self.classes.len()
                )));
            }
            for (i, &c) in centers.iter().enumerate() {
                if !self.classes[i].contains(c) {
                    return Err(Error::MalformedCertificate(format!(
                        "center {c} of class {} is not a member of it",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// First violated constraint found by a verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyClass {
        class: usize,
    },
    NotProper {
        u: usize,
        v: usize,
        class: usize,
    },
    /// `vertex` (of color `class`) has no neighbor of color `missing`.
    MissingColor {
        vertex: usize,
        class: usize,
        missing: usize,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::EmptyClass { class } => write!(f, "class {class} is empty"),
            Violation::NotProper { u, v, class } => {
                write!(f, "adjacent vertices {u} and {v} share color {class}")
            }
            Violation::MissingColor { vertex, class, missing } => {
                write!(f, "vertex {vertex} of color {class} has no neighbor of color {missing}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Processes `ordering` left to right giving each vertex the smallest
/// color missing among its already colored neighbors.
pub fn first_fit(g: &Graph, ordering: &[usize]) -> Result<Coloring> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut stamp = vec![usize::MAX; n + 2];
    for (step, &v) in ordering.iter().enumerate() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if colors[v] != 0 {
            return Err(Error::DuplicateVertex(v));
        }
        for &u in g.neighbors(v) {
            let c = colors[u];
            if c > 0 && c <= n {
                stamp[c] = step;
            }
        }
        let mut c = 1;
        while stamp[c] == step {
            c += 1;
        }
        colors[v] = c;
    }
    Ok(Coloring { colors })
}

fn check_kind(cert: &WitnessCertificate, kind: WitnessKind) -> Result<()> {
    if cert.kind != kind {
        return Err(Error::MalformedCertificate(format!(
            "expected a {} certificate, got {}",
            kind.name(),
            cert.kind.name()
        )));
    }
    Ok(())
}

fn properness(g: &Graph, cert: &WitnessCertificate) -> Option<Violation> {
    for (i, class) in cert.classes.iter().enumerate() {
        if class.is_empty() {
            return Some(Violation::EmptyClass { class: i + 1 });
        }
        for u in class.iter() {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| v > u && class.contains(v)) {
                return Some(Violation::NotProper { u, v, class: i + 1 });
            }
        }
    }
    None
}

/// Colors `1..` present among the neighbors of `v`, as a bitmap indexed
/// by color.
fn neighbor_colors(g: &Graph, colors: &[usize], v: usize, k: usize) -> Vec<bool> {
    let mut seen = vec![false; k + 1];
    for &u in g.neighbors(v) {
        let c = colors[u];
        if c > 0 && c <= k {
            seen[c] = true;
        }
    }
    seen
}

/// Grundy condition: proper, and every vertex of color `i` sees all colors
/// below `i` inside the support.
pub fn verify_grundy(g: &Graph, cert: &WitnessCertificate) -> Result<Verdict> {
    check_kind(cert, WitnessKind::Grundy)?;
    cert.check_shape(g.n())?;
    if let Some(v) = properness(g, cert) {
        return Ok(Verdict::Invalid(v));
    }
    let k = cert.order();
    let colors = cert.to_coloring(g.n()).colors;
    for (i, class) in cert.classes.iter().enumerate().skip(1) {
        for v in class.iter() {
            let seen = neighbor_colors(g, &colors, v, k);
            if let Some(j) = (1..=i).find(|&j| !seen[j]) {
                return Ok(Verdict::Invalid(Violation::MissingColor {
                    vertex: v,
                    class: i + 1,
                    missing: j,
                }));
            }
        }
    }
    Ok(Verdict::Valid)
}

fn verify_centered(g: &Graph, cert: &WitnessCertificate, all_others: bool) -> Result<Verdict> {
    if cert.centers.is_none() {
        return Err(Error::MalformedCertificate("centers are missing".into()));
    }
    cert.check_shape(g.n())?;
    if let Some(v) = properness(g, cert) {
        return Ok(Verdict::Invalid(v));
    }
    let k = cert.order();
    let colors = cert.to_coloring(g.n()).colors;
    let centers = cert.centers.as_ref().expect("checked above");
    for (i, &c) in centers.iter().enumerate() {
        let seen = neighbor_colors(g, &colors, c, k);
        let upper = if all_others { k } else { i };
        if let Some(j) = (1..=upper).find(|&j| j != i + 1 && !seen[j]) {
            return Ok(Verdict::Invalid(Violation::MissingColor {
                vertex: c,
                class: i + 1,
                missing: j,
            }));
        }
    }
    Ok(Verdict::Valid)
}

/// Partial Grundy condition: proper, and each center of color `i` sees all
/// colors below `i`.
pub fn verify_partial_grundy(g: &Graph, cert: &WitnessCertificate) -> Result<Verdict> {
    check_kind(cert, WitnessKind::PartialGrundy)?;
    verify_centered(g, cert, false)
}

/// b-coloring condition: proper, and each center sees every other color.
pub fn verify_b_coloring(g: &Graph, cert: &WitnessCertificate) -> Result<Verdict> {
    check_kind(cert, WitnessKind::BColoring)?;
    verify_centered(g, cert, true)
}

/// Dispatches on `cert.kind`.
pub fn verify(g: &Graph, cert: &WitnessCertificate) -> Result<Verdict> {
    match cert.kind {
        WitnessKind::Grundy => verify_grundy(g, cert),
        WitnessKind::PartialGrundy => verify_partial_grundy(g, cert),
        WitnessKind::BColoring => verify_b_coloring(g, cert),
    }
}

/// Extends a partial Grundy certificate on `S` to all of `V`: the vertices
/// outside `S`, in increasing id order, take the smallest color missing
/// from their colored neighborhood. A vertex that lands on a new top color
/// sees every lower color and becomes that class's center.
pub fn extend_partial_grundy(g: &Graph, cert: &WitnessCertificate) -> Result<WitnessCertificate> {
    match verify_partial_grundy(g, cert)? {
        Verdict::Valid => {}
        Verdict::Invalid(v) => return Err(Error::MalformedCertificate(format!("certificate does not verify: {v}"))),
    }
    let n = g.n();
    let mut colors = cert.to_coloring(n).colors;
    let mut classes = cert.classes.clone();
    let mut centers = cert.centers.clone().expect("verified certificates carry centers");
    for v in 0..n {
        if cert.support.contains(v) {
            continue;
        }
        let seen = neighbor_colors(g, &colors, v, classes.len() + 1);
        let c = (1..).find(|&c| c >= seen.len() || !seen[c]).expect("unbounded search");
        colors[v] = c;
        if c > classes.len() {
            classes.push(VertexSet::new());
            centers.push(v);
        }
        classes[c - 1].insert(v);
    }
    Ok(WitnessCertificate::with_centers(
        WitnessKind::PartialGrundy,
        classes,
        centers,
    ))
}

/// Compact adjacency lists for hot first-fit loops.
#[derive(Clone, Debug)]
pub struct FlatGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl FlatGraph {
    pub fn new(g: &Graph) -> Self {
        let mut offsets = Vec::with_capacity(g.n() + 1);
        let mut targets = Vec::with_capacity(2 * g.edge_count());
        offsets.push(0);
        for v in 0..g.n() {
            targets.extend(g.neighbors(v).iter().map(|&u| u as u32));
            offsets.push(targets.len());
        }
        FlatGraph { offsets, targets }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Highest color first-fit uses on a full permutation. `colors` and
    /// `stamp` are scratch buffers of length `n` and `n + 2`.
    pub fn first_fit_max(&self, ordering: &[u32], colors: &mut [u32], stamp: &mut [u32]) -> u32 {
        colors.iter_mut().for_each(|c| *c = 0);
        stamp.iter_mut().for_each(|s| *s = u32::MAX);
        let mut best = 0;
        for (step, &v) in ordering.iter().enumerate() {
            let step = step as u32;
            let v = v as usize;
            for &u in &self.targets[self.offsets[v]..self.offsets[v + 1]] {
                stamp[colors[u as usize] as usize] = step;
            }
            let mut c = 1;
            while stamp[c as usize] == step {
                c += 1;
            }
            colors[v] = c;
            best = best.max(c);
        }
        best
    }
}

/// Summary of random first-fit sampling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub samples: usize,
    pub seed: u64,
    pub max_colors: usize,
    pub best_ordering: Vec<usize>,
}

const SAMPLE_CHUNK: usize = 1024;

/// Runs first-fit on `samples` uniformly random orderings. Each chunk of
/// orderings draws from its own ChaCha stream, so the result depends only
/// on `(g, samples, seed)` and not on thread scheduling.
pub fn sample_first_fit(g: &Graph, samples: usize, seed: u64) -> SampleReport {
    let flat = FlatGraph::new(g);
    let n = g.n();
    let chunks = samples.div_ceil(SAMPLE_CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk as u64);
            let mut order: Vec<u32> = (0..n as u32).collect();
            let mut colors = vec![0u32; n];
            let mut stamp = vec![0u32; n + 2];
            let count = SAMPLE_CHUNK.min(samples - chunk * SAMPLE_CHUNK);
            let mut best: (u32, Vec<u32>) = (0, Vec::new());
            for _ in 0..count {
                order.shuffle(&mut rng);
                let m = flat.first_fit_max(&order, &mut colors, &mut stamp);
                if m > best.0 {
                    best = (m, order.clone());
                }
            }
            best
        })
        .reduce(|| (0, Vec::new()), |a, b| if b.0 > a.0 { b } else { a });
    SampleReport {
        samples,
        seed,
        max_colors: best.0 as usize,
        best_ordering: best.1.into_iter().map(|v| v as usize).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes(c: &[&[usize]]) -> Vec<VertexSet> {
        c.iter().map(|x| VertexSet::from(x.to_vec())).collect()
    }

    #[test]
    fn first_fit_basics() {
        assert_eq!(first_fit(&Graph::new(1), &[0]).unwrap().colors, vec![1]);
        let k4 = Graph::complete(4);
        let c = first_fit(&k4, &[2, 0, 3, 1]).unwrap();
        assert_eq!(c.colors, vec![2, 4, 1, 3]);
        let p4 = Graph::path(4);
        let t = GreedyTrace::run(&p4, vec![0, 2, 1, 3]).unwrap();
        assert_eq!(t.resulting.colors, vec![1, 2, 1, 2]);
        assert_eq!(t.colors_in_order(), vec![1, 1, 2, 2]);
        assert_eq!(first_fit(&p4, &[0, 0]), Err(Error::DuplicateVertex(0)));
        assert_eq!(first_fit(&p4, &[1]).unwrap().colors, vec![0, 1, 0, 0]);
    }

    #[test]
    fn verifiers_small() {
        let k2 = Graph::complete(2);
        let bad = WitnessCertificate::grundy(classes(&[&[0, 1]]));
        assert!(!verify_grundy(&k2, &bad).unwrap().is_valid());

        let k3 = Graph::complete(3);
        let pg =
            WitnessCertificate::with_centers(WitnessKind::PartialGrundy, classes(&[&[0], &[1], &[2]]), vec![0, 1, 2]);
        assert!(verify_partial_grundy(&k3, &pg).unwrap().is_valid());
        assert!(verify_b_coloring(&k3, &pg.reinterpret(WitnessKind::BColoring))
            .unwrap()
            .is_valid());

        // 2K2 with three classes cannot be proper with every class seen.
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = WitnessCertificate::with_centers(
            WitnessKind::PartialGrundy,
            classes(&[&[0, 2], &[1], &[3]]),
            vec![0, 1, 3],
        );
        assert!(!verify_partial_grundy(&two_k2, &c).unwrap().is_valid());
    }

    #[test]
    fn star_has_no_three_b_coloring() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        // Exhaustive: every assignment of 4 vertices to 3 nonempty classes
        // and every choice of centers fails.
        for code in 0..81usize {
            let mut cls = vec![VertexSet::new(); 3];
            let mut x = code;
            for v in 0..4 {
                cls[x % 3].insert(v);
                x /= 3;
            }
            if cls.iter().any(VertexSet::is_empty) {
                continue;
            }
            for a in cls[0].iter() {
                for b in cls[1].iter() {
                    for c in cls[2].iter() {
                        let cert = WitnessCertificate::with_centers(WitnessKind::BColoring, cls.clone(), vec![a, b, c]);
                        assert!(!verify_b_coloring(&star, &cert).unwrap().is_valid());
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_certificates() {
        let g = Graph::path(3);
        let overlap = WitnessCertificate::grundy(classes(&[&[0], &[0, 1]]));
        assert!(matches!(
            verify_grundy(&g, &overlap),
            Err(Error::MalformedCertificate(_))
        ));
        let no_centers = WitnessCertificate::grundy(classes(&[&[0]])).reinterpret(WitnessKind::BColoring);
        assert!(verify_b_coloring(&g, &no_centers).is_err());
    }

    #[test]
    fn extension_on_p3() {
        let p3 = Graph::path(3);
        let cert = WitnessCertificate::with_centers(WitnessKind::PartialGrundy, classes(&[&[0], &[1]]), vec![0, 1]);
        let ext = extend_partial_grundy(&p3, &cert).unwrap();
        assert_eq!(ext.to_coloring(3).colors, vec![1, 2, 1]);
        assert!(verify_partial_grundy(&p3, &ext).unwrap().is_valid());
    }

    #[test]
    fn sampler_deterministic() {
        let g = Graph::cycle(7);
        let a = sample_first_fit(&g, 3000, 9);
        let b = sample_first_fit(&g, 3000, 9);
        assert_eq!(a, b);
        let check = first_fit(&g, &a.best_ordering).unwrap();
        assert_eq!(check.max_color(), a.max_colors);
    }
}
