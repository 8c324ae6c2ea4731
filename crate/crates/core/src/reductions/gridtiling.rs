//! Cyclic Grid Tiling to b-chromatic core, with `q = 14k^2`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::ReductionOutput;
use crate::coloring::{WitnessCertificate, WitnessKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Sizes of the distinguished parts of the global clique.
pub const D_SIZE: usize = 18;
pub const SATURATION_SIZE: usize = 5;
/// `|D| + |C'| + |C-| + |C+|`.
pub const DISTINGUISHED: usize = D_SIZE + 3 * SATURATION_SIZE;

/// `k × k` grid of pair sets over `[n] × [n]`, all of the same size `t`.
/// Cells are stored row-major; coordinates and grid indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridTilingInstance {
    pub k: usize,
    pub n: usize,
    pub cells: Vec<Vec<(usize, usize)>>,
}

impl GridTilingInstance {
    pub fn new(k: usize, n: usize, cells: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        let inst = GridTilingInstance { k, n, cells };
        inst.validate()?;
        Ok(inst)
    }

    pub fn t(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    pub fn q(&self) -> usize {
        14 * self.k * self.k
    }

    /// Row-major index of cell `(i, j)`, both 1-based.
    pub fn cell(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.k + (j - 1)
    }

    /// Toroidal successor of a 1-based grid index.
    pub fn next(&self, i: usize) -> usize {
        if i == self.k {
            1
        } else {
            i + 1
        }
    }

    pub fn prev(&self, i: usize) -> usize {
        if i == 1 {
            self.k
        } else {
            i - 1
        }
    }

    pub fn pairs(&self, i: usize, j: usize) -> &[(usize, usize)] {
        &self.cells[self.cell(i, j)]
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidInstance("grid dimension must be positive".into()));
        }
        if self.cells.len() != self.k * self.k {
            return Err(Error::InvalidInstance(format!(
                "{} cells for a {}x{} grid",
                self.cells.len(),
                self.k,
                self.k
            )));
        }
        let t = self.t();
        if t == 0 {
            return Err(Error::InvalidInstance("pair sets must be nonempty".into()));
        }
        for (c, pairs) in self.cells.iter().enumerate() {
            let (i, j) = (c / self.k + 1, c % self.k + 1);
            if pairs.len() != t {
                return Err(Error::InvalidInstance(format!(
                    "cell ({i},{j}) has {} pairs, expected {t}",
                    pairs.len()
                )));
            }
            let distinct: BTreeSet<_> = pairs.iter().collect();
            if distinct.len() != t {
                return Err(Error::InvalidInstance(format!("cell ({i},{j}) repeats a pair")));
            }
            if let Some(&(x, y)) = pairs
                .iter()
                .find(|&&(x, y)| x == 0 || y == 0 || x > self.n || y > self.n)
            {
                return Err(Error::InvalidInstance(format!(
                    "pair ({x},{y}) in cell ({i},{j}) lies outside [{}]^2",
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// Checks that `solution[c]` lies in cell `c` and that rows agree on
    /// `x` and columns on `y`, wrapping around.
    pub fn check_solution(&self, solution: &[(usize, usize)]) -> Result<()> {
        self.check_membership(solution)?;
        for i in 1..=self.k {
            for j in 1..=self.k {
                let here = solution[self.cell(i, j)];
                let right = solution[self.cell(i, self.next(j))];
                if here.0 != right.0 {
                    return Err(Error::InvalidSolution(format!(
                        "cells ({i},{j}) and ({i},{}) disagree on x: {} vs {}",
                        self.next(j),
                        here.0,
                        right.0
                    )));
                }
                let below = solution[self.cell(self.next(i), j)];
                if here.1 != below.1 {
                    return Err(Error::InvalidSolution(format!(
                        "cells ({i},{j}) and ({},{j}) disagree on y: {} vs {}",
                        self.next(i),
                        here.1,
                        below.1
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_membership(&self, solution: &[(usize, usize)]) -> Result<Vec<usize>> {
        if solution.len() != self.k * self.k {
            return Err(Error::InvalidSolution(format!(
                "{} pairs for {} cells",
                solution.len(),
                self.k * self.k
            )));
        }
        solution
            .iter()
            .enumerate()
            .map(|(c, p)| {
                self.cells[c].iter().position(|q| q == p).ok_or_else(|| {
                    Error::InvalidSolution(format!(
                        "pair ({},{}) is not in cell ({},{})",
                        p.0,
                        p.1,
                        c / self.k + 1,
                        c % self.k + 1
                    ))
                })
            })
            .collect()
    }

    /// A solution is one column value per grid column and one row value
    /// per grid row: `x` is shared along each row, `y` down each column.
    pub fn find_solution(&self) -> Option<Vec<(usize, usize)>> {
        let k = self.k;
        // xs[i-1] is the x of row i, ys[j-1] the y of column j.
        let mut xs = vec![0usize; k];
        let mut ys = vec![0usize; k];
        fn rec(inst: &GridTilingInstance, c: usize, xs: &mut [usize], ys: &mut [usize]) -> bool {
            let k = inst.k;
            if c == k * k {
                return true;
            }
            let (i, j) = (c / k, c % k);
            for &(x, y) in &inst.cells[c] {
                if (xs[i] != 0 && xs[i] != x) || (ys[j] != 0 && ys[j] != y) {
                    continue;
                }
                let (ox, oy) = (xs[i], ys[j]);
                xs[i] = x;
                ys[j] = y;
                if rec(inst, c + 1, xs, ys) {
                    return true;
                }
                xs[i] = ox;
                ys[j] = oy;
            }
            false
        }
        rec(self, 0, &mut xs, &mut ys).then(|| (0..k * k).map(|c| (xs[c / k], ys[c % k])).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    #[serde(default)]
    schema_version: Option<u32>,
    k: usize,
    n: usize,
    cells: Vec<Vec<[usize; 2]>>,
}

impl GridTilingInstance {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GridJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let cells = doc
            .cells
            .into_iter()
            .map(|c| c.into_iter().map(|[x, y]| (x, y)).collect())
            .collect();
        GridTilingInstance::new(doc.k, doc.n, cells)
    }

    pub fn to_json(&self) -> String {
        let doc = GridJson {
            schema_version: Some(crate::io::SCHEMA_VERSION),
            k: self.k,
            n: self.n,
            cells: self
                .cells
                .iter()
                .map(|c| c.iter().map(|&(x, y)| [x, y]).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("instance JSON is serializable")
    }
}

/// What each vertex of the b-core instance stands for. Grid indices and
/// coordinates are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridRole {
    /// `a_{i,j}(x,y)`.
    A { i: usize, j: usize, x: usize, y: usize },
    /// Member `m` of `B_{i,j}`.
    B { i: usize, j: usize, m: usize },
    /// Side of `H(i→i+1,j)` matching `a_{i,j}(x,y)`.
    VertSrc { i: usize, j: usize, x: usize, y: usize },
    /// Side of `H(i→i+1,j)` matching `a_{i+1,j}(x,y)`.
    VertDst { i: usize, j: usize, x: usize, y: usize },
    /// Side of `H(i,j→j+1)` matching `a_{i,j}(x,y)`.
    HorSrc { i: usize, j: usize, x: usize, y: usize },
    /// Side of `H(i,j→j+1)` matching `a_{i,j+1}(x,y)`.
    HorDst { i: usize, j: usize, x: usize, y: usize },
    /// Clique vertex with color `x` in the intended coloring.
    Clique { x: usize },
    /// Private neighbor `m` of clique vertex `x`.
    Pendant { x: usize, m: usize },
}

impl fmt::Display for GridRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GridRole::A { i, j, x, y } => write!(f, "a[{i},{j}]({x},{y})"),
            GridRole::B { i, j, m } => write!(f, "b[{i},{j}]#{m}"),
            GridRole::VertSrc { i, j, x, y } => write!(f, "hv[{i}>,{j}]({x},{y})"),
            GridRole::VertDst { i, j, x, y } => write!(f, "hv[>{i},{j}]({x},{y})"),
            GridRole::HorSrc { i, j, x, y } => write!(f, "hh[{i},{j}>]({x},{y})"),
            GridRole::HorDst { i, j, x, y } => write!(f, "hh[{i},>{j}]({x},{y})"),
            GridRole::Clique { x } => match x {
                1..=18 => write!(f, "d{x}"),
                19..=23 => write!(f, "c'{}", x - 18),
                24..=28 => write!(f, "c-{}", x - 23),
                29..=33 => write!(f, "c+{}", x - 28),
                _ => write!(f, "c{x}"),
            },
            GridRole::Pendant { x, m } => write!(f, "p[{x}]#{m}"),
        }
    }
}

/// Representative of `i mod 3` in `{1, 2, 3}`.
fn residue(i: usize) -> usize {
    (i - 1) % 3 + 1
}

/// `x + 1`, except that multiples of 3 wrap to `x - 2`.
pub fn succ(x: usize) -> usize {
    if !x.is_multiple_of(3) {
        x + 1
    } else {
        x - 2
    }
}

/// The four `z ∈ [18]` whose `d_z` is complete to `B_{i,j}`.
pub fn d_colors(i: usize, j: usize) -> [usize; 4] {
    let z1 = 3 * (residue(j) - 1) + residue(i);
    let z3 = 3 * (residue(i) - 1) + residue(j) + 9;
    [z1, succ(z1), z3, succ(z3)]
}

fn common_color(a: [usize; 4], b: [usize; 4]) -> Result<usize> {
    let common: Vec<usize> = a.iter().copied().filter(|z| b.contains(z)).collect();
    match common.as_slice() {
        [z] => Ok(*z),
        _ => Err(Error::InvalidInstance(format!(
            "neighboring cells share {} d-colors instead of one",
            common.len()
        ))),
    }
}

/// Vertex id layout of the construction.
#[derive(Clone, Copy, Debug)]
struct Layout {
    k: usize,
    t: usize,
    q: usize,
}

impl Layout {
    fn cells(&self) -> usize {
        self.k * self.k
    }
    fn a(&self, c: usize, p: usize) -> usize {
        c * self.t + p
    }
    fn b(&self, c: usize, m: usize) -> usize {
        self.cells() * self.t + c * (self.q - 9) + m
    }
    fn vert_base(&self) -> usize {
        self.cells() * (self.t + self.q - 9)
    }
    fn vsrc(&self, c: usize, p: usize) -> usize {
        self.vert_base() + c * 2 * self.t + p
    }
    fn vdst(&self, c: usize, p: usize) -> usize {
        self.vsrc(c, 0) + self.t + p
    }
    fn hor_base(&self) -> usize {
        self.vert_base() + self.cells() * 2 * self.t
    }
    fn hsrc(&self, c: usize, p: usize) -> usize {
        self.hor_base() + c * 2 * self.t + p
    }
    fn hdst(&self, c: usize, p: usize) -> usize {
        self.hsrc(c, 0) + self.t + p
    }
    fn clique(&self, x: usize) -> usize {
        self.hor_base() + self.cells() * 2 * self.t + (x - 1)
    }
    fn clique_size(&self) -> usize {
        self.q - self.cells()
    }
    fn pendant(&self, x: usize, m: usize) -> usize {
        self.clique(self.clique_size() + 1) + (x - 1) * self.cells() + (m - 1)
    }
    fn total(&self) -> usize {
        self.pendant(self.clique_size() + 1, 1)
    }
}

/// Closed-form vertex count: `k²t + k²(q−9) + 4k²t + (q−k²)(1+k²)`.
pub fn gridtiling_vertex_count(k: usize, t: usize) -> usize {
    let q = 14 * k * k;
    let kk = k * k;
    kk * t + kk * (q - 9) + 4 * kk * t + (q - kk) * (1 + kk)
}

/// Builds the b-core instance. The target order is `q = 14k²`.
pub fn reduce_gridtiling_to_bcore(inst: &GridTilingInstance) -> Result<ReductionOutput<GridRole>> {
    inst.validate()?;
    let (k, t, q) = (inst.k, inst.t(), inst.q());
    if q - k * k < DISTINGUISHED {
        return Err(Error::InvalidInstance(format!(
            "k = {k} leaves a clique of {} vertices, fewer than the {DISTINGUISHED} distinguished ones",
            q - k * k
        )));
    }
    let lay = Layout { k, t, q };
    let mut g = Graph::new(lay.total());
    let mut roles: Vec<Option<GridRole>> = vec![None; lay.total()];

    let mut vert_z = Vec::with_capacity(k * k);
    let mut hor_z = Vec::with_capacity(k * k);
    for i in 1..=k {
        for j in 1..=k {
            vert_z.push(common_color(d_colors(i, j), d_colors(inst.next(i), j))?);
            hor_z.push(common_color(d_colors(i, j), d_colors(i, inst.next(j)))?);
        }
    }

    for i in 1..=k {
        for j in 1..=k {
            let c = inst.cell(i, j);
            let down = inst.cell(inst.next(i), j);
            let right = inst.cell(i, inst.next(j));
            for (p, &(x, y)) in inst.pairs(i, j).iter().enumerate() {
                roles[lay.a(c, p)] = Some(GridRole::A { i, j, x, y });
                roles[lay.vsrc(c, p)] = Some(GridRole::VertSrc { i, j, x, y });
                roles[lay.hsrc(c, p)] = Some(GridRole::HorSrc { i, j, x, y });
                for m in 0..q - 9 {
                    g.add_edge(lay.a(c, p), lay.b(c, m))?;
                }
                g.add_edge(lay.a(c, p), lay.vsrc(c, p))?;
                g.add_edge(lay.a(c, p), lay.hsrc(c, p))?;
            }
            for (p, &(x, y)) in inst.pairs(inst.next(i), j).iter().enumerate() {
                roles[lay.vdst(c, p)] = Some(GridRole::VertDst { i, j, x, y });
                g.add_edge(lay.a(down, p), lay.vdst(c, p))?;
            }
            for (p, &(x, y)) in inst.pairs(i, inst.next(j)).iter().enumerate() {
                roles[lay.hdst(c, p)] = Some(GridRole::HorDst { i, j, x, y });
                g.add_edge(lay.a(right, p), lay.hdst(c, p))?;
            }
            for m in 0..q - 9 {
                roles[lay.b(c, m)] = Some(GridRole::B { i, j, m: m + 1 });
            }
            // Half-graph orders: y within vertical gadgets, x within
            // horizontal ones.
            for (p, &(_, y)) in inst.pairs(i, j).iter().enumerate() {
                for (p2, &(_, y2)) in inst.pairs(inst.next(i), j).iter().enumerate() {
                    if y < y2 {
                        g.add_edge(lay.vsrc(c, p), lay.vdst(c, p2))?;
                    }
                }
            }
            for (p, &(x, _)) in inst.pairs(i, j).iter().enumerate() {
                for (p2, &(x2, _)) in inst.pairs(i, inst.next(j)).iter().enumerate() {
                    if x < x2 {
                        g.add_edge(lay.hsrc(c, p), lay.hdst(c, p2))?;
                    }
                }
            }
        }
    }

    let cs = lay.clique_size();
    for x in 1..=cs {
        roles[lay.clique(x)] = Some(GridRole::Clique { x });
        for y in x + 1..=cs {
            g.add_edge(lay.clique(x), lay.clique(y))?;
        }
        for m in 1..=k * k {
            roles[lay.pendant(x, m)] = Some(GridRole::Pendant { x, m });
            g.add_edge(lay.clique(x), lay.pendant(x, m))?;
        }
    }
    let c_prime = |s: usize| lay.clique(D_SIZE + s);
    let c_minus = |s: usize| lay.clique(D_SIZE + SATURATION_SIZE + s);
    let c_plus = |s: usize| lay.clique(D_SIZE + 2 * SATURATION_SIZE + s);

    for i in 1..=k {
        for j in 1..=k {
            let c = inst.cell(i, j);
            for z in d_colors(i, j) {
                for m in 0..q - 9 {
                    g.add_edge(lay.clique(z), lay.b(c, m))?;
                }
            }
            for p in 0..t {
                for s in 1..=SATURATION_SIZE {
                    g.add_edge(lay.a(c, p), c_prime(s))?;
                    g.add_edge(lay.vsrc(c, p), c_minus(s))?;
                    g.add_edge(lay.hsrc(c, p), c_minus(s))?;
                    g.add_edge(lay.vdst(c, p), c_plus(s))?;
                    g.add_edge(lay.hdst(c, p), c_plus(s))?;
                }
                for z in 1..=D_SIZE {
                    if z != vert_z[c] {
                        g.add_edge(lay.vsrc(c, p), lay.clique(z))?;
                        g.add_edge(lay.vdst(c, p), lay.clique(z))?;
                    }
                    if z != hor_z[c] {
                        g.add_edge(lay.hsrc(c, p), lay.clique(z))?;
                        g.add_edge(lay.hdst(c, p), lay.clique(z))?;
                    }
                }
            }
        }
    }

    let roles: Vec<GridRole> = roles.into_iter().map(|r| r.expect("every vertex has a role")).collect();
    let mut out = ReductionOutput::new(g, q, roles);

    // A center in cell (i,j) hears its four d-colors only through the
    // four half-graphs around it.
    let mut consistent = true;
    let mut table = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            let c = inst.cell(i, j);
            let seen: BTreeSet<usize> = [
                vert_z[c],
                vert_z[inst.cell(inst.prev(i), j)],
                hor_z[c],
                hor_z[inst.cell(i, inst.prev(j))],
            ]
            .into_iter()
            .collect();
            let need: BTreeSet<usize> = d_colors(i, j).into_iter().collect();
            let ok = seen == need;
            consistent &= ok;
            table.push(json!({
                "cell": [i, j],
                "d": need.iter().collect::<Vec<_>>(),
                "vertical_missing": vert_z[c],
                "horizontal_missing": hor_z[c],
                "reachable_by_center": seen.iter().collect::<Vec<_>>(),
                "closed": ok,
            }));
        }
    }
    out.audit.insert("k".into(), json!(k));
    out.audit.insert("t".into(), json!(t));
    out.audit.insert("q".into(), json!(q));
    out.audit.insert("vertices".into(), json!(out.graph.n()));
    out.audit.insert("edges".into(), json!(out.graph.edge_count()));
    out.audit
        .insert("closed_form_vertices".into(), json!(gridtiling_vertex_count(k, t)));
    out.audit.insert("wiring_consistent".into(), Value::Bool(consistent));
    if k <= 3 {
        out.audit.insert("d_table".into(), Value::Array(table));
    }
    Ok(out)
}

/// The b-coloring of order `q` induced by a tiling solution, after the
/// solution has been checked.
pub fn gridtiling_certificate(
    inst: &GridTilingInstance,
    out: &ReductionOutput<GridRole>,
    solution: &[(usize, usize)],
) -> Result<WitnessCertificate> {
    inst.check_solution(solution)?;
    gridtiling_certificate_unchecked(inst, out, solution)
}

/// Same coloring without the tiling-consistency check; used to show what
/// goes wrong for inconsistent choices. Every chosen pair must still be
/// in its cell.
pub fn gridtiling_certificate_unchecked(
    inst: &GridTilingInstance,
    out: &ReductionOutput<GridRole>,
    solution: &[(usize, usize)],
) -> Result<WitnessCertificate> {
    let chosen = inst.check_membership(solution)?;
    let (k, t, q) = (inst.k, inst.t(), inst.q());
    let lay = Layout { k, t, q };
    if out.graph.n() != lay.total() || out.target != q {
        return Err(Error::Precondition(
            "reduction output does not match the instance".into(),
        ));
    }
    let cs = lay.clique_size();
    let mut color = vec![0usize; lay.total()];
    let mut centers = vec![0usize; q];
    for x in 1..=cs {
        color[lay.clique(x)] = x;
        centers[x - 1] = lay.clique(x);
        for m in 1..=k * k {
            color[lay.pendant(x, m)] = cs + m;
        }
    }
    let saturation: Vec<usize> = (D_SIZE + 1..=D_SIZE + SATURATION_SIZE).collect();
    for i in 1..=k {
        for j in 1..=k {
            let c = inst.cell(i, j);
            let own = cs + c + 1;
            let center = lay.a(c, chosen[c]);
            color[center] = own;
            centers[own - 1] = center;
            let d = d_colors(i, j);
            let palette: Vec<usize> = (1..=q)
                .filter(|x| !saturation.contains(x) && !d.contains(x) && *x != own)
                .collect();
            debug_assert_eq!(palette.len(), q - 10);
            for (m, &x) in palette.iter().enumerate() {
                color[lay.b(c, m)] = x;
            }

            let down = inst.cell(inst.next(i), j);
            let zv = common_color(d, d_colors(inst.next(i), j))?;
            color[lay.vsrc(c, chosen[c])] = zv;
            color[lay.vdst(c, chosen[down])] = zv;
            let right = inst.cell(i, inst.next(j));
            let zh = common_color(d, d_colors(i, inst.next(j)))?;
            color[lay.hsrc(c, chosen[c])] = zh;
            color[lay.hdst(c, chosen[right])] = zh;
        }
    }
    let mut classes = vec![VertexSet::new(); q];
    for (v, &x) in color.iter().enumerate() {
        if x > 0 {
            classes[x - 1].insert(v);
        }
    }
    Ok(WitnessCertificate::with_centers(
        WitnessKind::BColoring,
        classes,
        centers,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn succ_wraps_blocks() {
        assert_eq!((1..=9).map(succ).collect::<Vec<_>>(), vec![2, 3, 1, 5, 6, 4, 8, 9, 7]);
        assert_eq!(d_colors(1, 1), [1, 2, 10, 11]);
    }

    #[test]
    fn constant_instance_shape() {
        let inst = GridTilingInstance::new(2, 1, vec![vec![(1, 1)]; 4]).unwrap();
        let out = reduce_gridtiling_to_bcore(&inst).unwrap();
        assert_eq!(out.target, 56);
        assert_eq!(out.graph.n(), gridtiling_vertex_count(2, 1));
        for v in out.vertices_where(|r| matches!(r, GridRole::A { .. })) {
            assert_eq!(out.graph.degree(v), 56);
        }
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(GridTilingInstance::new(2, 2, vec![vec![(1, 1)]; 3]).is_err());
        assert!(GridTilingInstance::new(2, 2, vec![vec![(1, 3)]; 4]).is_err());
        let uneven = vec![vec![(1, 1)], vec![(1, 1), (2, 2)], vec![(1, 1)], vec![(1, 1)]];
        assert!(GridTilingInstance::new(2, 2, uneven).is_err());
        let k1 = GridTilingInstance::new(1, 1, vec![vec![(1, 1)]]).unwrap();
        assert!(reduce_gridtiling_to_bcore(&k1).is_err());
    }

    #[test]
    fn solutions() {
        let inst = GridTilingInstance::new(2, 2, vec![vec![(1, 1), (2, 2)]; 4]).unwrap();
        let sol = inst.find_solution().unwrap();
        inst.check_solution(&sol).unwrap();
        let bad = vec![(1, 1), (2, 1), (1, 1), (2, 1)];
        assert!(inst.check_solution(&bad).is_err());
    }

    #[test]
    fn certificate_closes_at_three_not_two() {
        use crate::coloring::{verify_b_coloring, Verdict, Violation};
        let three = GridTilingInstance::new(3, 1, vec![vec![(1, 1)]; 9]).unwrap();
        let out = reduce_gridtiling_to_bcore(&three).unwrap();
        assert_eq!(out.audit["wiring_consistent"], Value::Bool(true));
        let cert = gridtiling_certificate(&three, &out, &[(1, 1); 9]).unwrap();
        assert_eq!(cert.order(), 126);
        assert_eq!(verify_b_coloring(&out.graph, &cert).unwrap(), Verdict::Valid);

        let two = GridTilingInstance::new(2, 1, vec![vec![(1, 1)]; 4]).unwrap();
        let out = reduce_gridtiling_to_bcore(&two).unwrap();
        assert_eq!(out.audit["wiring_consistent"], Value::Bool(false));
        let cert = gridtiling_certificate(&two, &out, &[(1, 1); 4]).unwrap();
        assert!(matches!(
            verify_b_coloring(&out.graph, &cert).unwrap(),
            Verdict::Invalid(Violation::MissingColor { .. })
        ));
    }

    #[test]
    fn broken_solution_is_improper() {
        use crate::coloring::{verify_b_coloring, Verdict, Violation};
        let inst = GridTilingInstance::new(3, 2, vec![vec![(1, 1), (2, 1)]; 9]).unwrap();
        let out = reduce_gridtiling_to_bcore(&inst).unwrap();
        let mut sol = vec![(1, 1); 9];
        sol[0] = (2, 1);
        assert!(gridtiling_certificate(&inst, &out, &sol).is_err());
        let cert = gridtiling_certificate_unchecked(&inst, &out, &sol).unwrap();
        assert!(matches!(
            verify_b_coloring(&out.graph, &cert).unwrap(),
            Verdict::Invalid(Violation::NotProper { .. })
        ));
    }
}
