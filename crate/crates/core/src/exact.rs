//! Exhaustive solvers for the Grundy number and its relatives. Everything
//! here works on `u64` neighborhood masks, so graphs are capped at 64
//! vertices before the per-solver caps apply.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use crate::coloring::{WitnessCertificate, WitnessKind};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};

pub const GRUNDY_CAP: usize = 20;
pub const ROOTED_CAP: usize = 16;
pub const ORDERINGS_CAP: usize = 9;
pub const PARTIAL_PARTITION_CAP: usize = 12;
pub const PARTIAL_CENTERED_CAP: usize = 40;
pub const BCORE_CAP: usize = 10;
pub const BCORE_ORACLE_CAP: usize = 8;
/// Largest connected subgraph examined by [`grundy_witness_search`].
pub const WITNESS_SIZE_BUDGET: usize = 16;

/// Per-solver vertex caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub grundy: usize,
    pub rooted: usize,
    pub partial: usize,
    pub partial_centered: usize,
    pub bcore: usize,
    pub witness_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            grundy: GRUNDY_CAP,
            rooted: ROOTED_CAP,
            partial: PARTIAL_PARTITION_CAP,
            partial_centered: PARTIAL_CENTERED_CAP,
            bcore: BCORE_CAP,
            witness_size: WITNESS_SIZE_BUDGET,
        }
    }
}

/// Optimal order and a certificate attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub certificate: WitnessCertificate,
}

fn cap_check(g: &Graph, what: &'static str, cap: usize) -> Result<()> {
    let cap = cap.min(64);
    if g.n() > cap {
        Err(Error::CapExceeded { what, size: g.n(), cap })
    } else {
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_set(m: u64) -> VertexSet {
    bits(m).collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

fn max_degree_in(adj: &[u64], s: u64) -> u32 {
    bits(s).map(|v| (adj[v] & s).count_ones()).max().unwrap_or(0)
}

/// Calls `visit` on every maximal independent set of `g[s]`
/// (Bron–Kerbosch with pivoting, run on the complement). The visiting
/// order depends only on vertex ids.
pub(crate) fn for_each_maximal_independent_set<F>(adj: &[u64], s: u64, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    fn rec<F: FnMut(u64) -> ControlFlow<()>>(
        adj: &[u64],
        r: u64,
        mut p: u64,
        mut x: u64,
        visit: &mut F,
    ) -> ControlFlow<()> {
        if p == 0 {
            if x == 0 {
                return visit(r);
            }
            return ControlFlow::Continue(());
        }
        // Pivot: fewest closed neighbors inside P, so fewest branches.
        let mut pivot = usize::MAX;
        let mut best = u32::MAX;
        for u in bits(p | x) {
            let c = ((adj[u] | (1u64 << u)) & p).count_ones();
            if c < best {
                best = c;
                pivot = u;
            }
        }
        let branch = p & (adj[pivot] | (1u64 << pivot));
        for v in bits(branch) {
            let closed = adj[v] | (1u64 << v);
            rec(adj, r | (1u64 << v), p & !closed, x & !closed, visit)?;
            p &= !(1u64 << v);
            x |= 1u64 << v;
        }
        ControlFlow::Continue(())
    }
    rec(adj, 0, s, 0, visit)
}

/// Memo keyed by vertex subsets: a flat table for small graphs, a hash
/// map otherwise. Values are stored shifted by one so zero means absent.
struct Memo {
    dense: Vec<u8>,
    sparse: HashMap<u64, u8>,
    is_dense: bool,
}

impl Memo {
    fn new(n: usize) -> Self {
        let is_dense = n <= 22;
        Memo {
            dense: if is_dense { vec![0; 1usize << n] } else { Vec::new() },
            sparse: HashMap::new(),
            is_dense,
        }
    }

    fn get(&self, s: u64) -> Option<u8> {
        let raw = if self.is_dense {
            self.dense[s as usize]
        } else {
            self.sparse.get(&s).copied().unwrap_or(0)
        };
        raw.checked_sub(1)
    }

    fn put(&mut self, s: u64, val: u8) {
        if self.is_dense {
            self.dense[s as usize] = val + 1;
        } else {
            self.sparse.insert(s, val + 1);
        }
    }
}

struct GrundyDp<'a> {
    adj: &'a [u64],
    memo: Memo,
}

impl GrundyDp<'_> {
    fn value(&mut self, s: u64) -> u8 {
        if s == 0 {
            return 0;
        }
        if let Some(v) = self.memo.get(s) {
            return v;
        }
        let ub = 1 + max_degree_in(self.adj, s) as u8;
        let mut best = 0u8;
        let adj = self.adj;
        let _ = for_each_maximal_independent_set(adj, s, &mut |m| {
            let val = 1 + self.value(s & !m);
            best = best.max(val);
            if best >= ub {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        self.memo.put(s, best);
        best
    }

    /// First maximal IS (in enumeration order) attaining `value(s)`.
    fn choice(&mut self, s: u64) -> u64 {
        let target = self.value(s);
        let mut found = 0;
        let adj = self.adj;
        let _ = for_each_maximal_independent_set(adj, s, &mut |m| {
            if 1 + self.value(s & !m) == target {
                found = m;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found
    }
}

/// Grundy number by iterated removal of maximal independent sets.
pub fn grundy_number(g: &Graph) -> Result<SolveResult> {
    grundy_number_with_cap(g, GRUNDY_CAP)
}

pub fn grundy_number_with_cap(g: &Graph, cap: usize) -> Result<SolveResult> {
    cap_check(g, "grundy_number", cap)?;
    let adj = g.neighbor_masks()?;
    let mut dp = GrundyDp {
        adj: &adj,
        memo: Memo::new(g.n()),
    };
    let mut s = full_mask(g.n());
    let value = dp.value(s) as usize;
    let mut classes = Vec::with_capacity(value);
    while s != 0 {
        let m = dp.choice(s);
        classes.push(mask_to_set(m));
        s &= !m;
    }
    debug_assert_eq!(classes.len(), value);
    Ok(SolveResult {
        value,
        certificate: WitnessCertificate::grundy(classes),
    })
}

/// Maximum first-fit color over all `n!` orderings, by depth-first
/// enumeration with shared prefixes.
pub fn grundy_number_by_orderings(g: &Graph) -> Result<usize> {
    cap_check(g, "grundy_number_by_orderings", ORDERINGS_CAP)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = g.neighbor_masks()?;
    let ub = 1 + g.max_degree();

    fn rec(adj: &[u64], n: usize, used: u64, colors: &mut [usize], cur: usize, best: &mut usize, ub: usize) {
        if *best >= ub {
            return;
        }
        let remaining = n - used.count_ones() as usize;
        if remaining == 0 {
            *best = (*best).max(cur);
            return;
        }
        if cur + remaining <= *best {
            return;
        }
        for v in 0..n {
            if used & (1u64 << v) != 0 {
                continue;
            }
            let mut seen = 0u64;
            for u in bits(adj[v] & used) {
                seen |= 1u64 << colors[u];
            }
            let c = (!(seen | 1)).trailing_zeros() as usize;
            colors[v] = c;
            rec(adj, n, used | (1u64 << v), colors, cur.max(c), best, ub);
            colors[v] = 0;
        }
    }

    let mut colors = vec![0usize; n];
    let mut best = 0;
    rec(&adj, n, 0, &mut colors, 0, &mut best, ub);
    Ok(best)
}

struct RootedDp<'a> {
    adj: &'a [u64],
    root: usize,
    memo: Memo,
}

impl RootedDp<'_> {
    fn value(&mut self, s: u64) -> u8 {
        if let Some(v) = self.memo.get(s) {
            return v;
        }
        let root_bit = 1u64 << self.root;
        let ub = 1 + (self.adj[self.root] & s).count_ones() as u8;
        let mut best = 0u8;
        let adj = self.adj;
        let _ = for_each_maximal_independent_set(adj, s, &mut |m| {
            let val = if m & root_bit != 0 { 1 } else { 1 + self.value(s & !m) };
            best = best.max(val);
            if best >= ub {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        self.memo.put(s, best);
        best
    }

    fn choice(&mut self, s: u64) -> u64 {
        let target = self.value(s);
        let root_bit = 1u64 << self.root;
        let mut found = 0;
        let adj = self.adj;
        let _ = for_each_maximal_independent_set(adj, s, &mut |m| {
            let val = if m & root_bit != 0 { 1 } else { 1 + self.value(s & !m) };
            if val == target {
                found = m;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found
    }
}

/// Largest color first-fit can give `v` over all orderings.
pub fn rooted_grundy(g: &Graph, v: usize) -> Result<usize> {
    Ok(rooted_grundy_certificate(g, v)?.order())
}

/// Grundy certificate whose top class contains `v`, of maximum order.
/// The classes are the first rounds of an optimal class sequence, so
/// they cover only part of the graph.
pub fn rooted_grundy_certificate(g: &Graph, v: usize) -> Result<WitnessCertificate> {
    rooted_grundy_certificate_with_cap(g, v, ROOTED_CAP)
}

pub fn rooted_grundy_certificate_with_cap(g: &Graph, v: usize, cap: usize) -> Result<WitnessCertificate> {
    cap_check(g, "rooted_grundy", cap)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let adj = g.neighbor_masks()?;
    let mut dp = RootedDp {
        adj: &adj,
        root: v,
        memo: Memo::new(g.n()),
    };
    let mut s = full_mask(g.n());
    let mut classes = Vec::new();
    loop {
        let m = dp.choice(s);
        classes.push(mask_to_set(m));
        if m & (1u64 << v) != 0 {
            break;
        }
        s &= !m;
    }
    Ok(WitnessCertificate::grundy(classes))
}

/// Connected vertex sets of each size up to `max_size`, grown one
/// neighbor at a time and deduplicated.
fn connected_sets_by_size(
    g: &Graph,
    adj: &[u64],
    max_size: usize,
    visit: &mut dyn FnMut(u64) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut layer: Vec<u64> = (0..g.n()).map(|v| 1u64 << v).collect();
    for size in 1..=max_size.min(g.n()) {
        if size > 1 {
            let mut next = HashSet::new();
            for &s in &layer {
                let frontier = bits(s).fold(0u64, |acc, v| acc | adj[v]) & !s;
                for w in bits(frontier) {
                    next.insert(s | (1u64 << w));
                }
            }
            layer = next.into_iter().collect();
            layer.sort_unstable();
        }
        for &s in &layer {
            visit(s)?;
        }
    }
    ControlFlow::Continue(())
}

/// Smallest connected induced subgraph (at most `2^(k-1)` vertices) with
/// Grundy number at least `k`, returned as a Grundy certificate in the
/// ids of `g`.
pub fn grundy_witness_search(g: &Graph, k: usize) -> Result<Option<WitnessCertificate>> {
    grundy_witness_search_with_budget(g, k, WITNESS_SIZE_BUDGET)
}

pub fn grundy_witness_search_with_budget(g: &Graph, k: usize, budget: usize) -> Result<Option<WitnessCertificate>> {
    if k == 0 {
        return Ok(Some(WitnessCertificate::grundy(Vec::new())));
    }
    let max_size = if k > 63 { usize::MAX } else { 1usize << (k - 1) };
    if max_size > budget {
        return Err(Error::BudgetExceeded(format!(
            "witnesses of order {k} may need {max_size} vertices, budget is {budget}"
        )));
    }
    cap_check(g, "grundy_witness_search", 64)?;
    let adj = g.neighbor_masks()?;
    let mut found: Option<Result<WitnessCertificate>> = None;
    let _ = connected_sets_by_size(g, &adj, max_size, &mut |s| {
        if s.count_ones() < k as u32 || max_degree_in(&adj, s) + 1 < k as u32 {
            return ControlFlow::Continue(());
        }
        let set = mask_to_set(s);
        let sub = match induced_subgraph(g, &set) {
            Ok(sub) => sub,
            Err(e) => {
                found = Some(Err(e));
                return ControlFlow::Break(());
            }
        };
        match grundy_number_with_cap(&sub.graph, 64) {
            Ok(res) if res.value >= k => {
                let classes = res.certificate.classes.iter().map(|c| sub.lift(c)).collect();
                found = Some(Ok(WitnessCertificate::grundy(classes)));
                ControlFlow::Break(())
            }
            Ok(_) => ControlFlow::Continue(()),
            Err(e) => {
                found = Some(Err(e));
                ControlFlow::Break(())
            }
        }
    });
    found.transpose()
}

/// Can class `x` (among `alive`) sit on top, i.e. does it contain a vertex
/// seeing every other alive class? Returns that vertex.
fn top_center(adj: &[u64], classes: &[u64], alive: &[usize], x: usize) -> Option<usize> {
    bits(classes[x]).find(|&u| alive.iter().all(|&y| y == x || adj[u] & classes[y] != 0))
}

/// Orders the classes of a proper partition so each class has a center
/// seeing all lower classes, peeling feasible top classes greedily.
/// Returns `(class index, center)` from color 1 upwards.
fn peel_partial_grundy(adj: &[u64], classes: &[u64]) -> Option<Vec<(usize, usize)>> {
    let mut alive: Vec<usize> = (0..classes.len()).collect();
    let mut top_down = Vec::with_capacity(classes.len());
    while !alive.is_empty() {
        let (pos, center) = alive
            .iter()
            .enumerate()
            .find_map(|(pos, &x)| top_center(adj, classes, &alive, x).map(|c| (pos, c)))?;
        top_down.push((alive[pos], center));
        alive.remove(pos);
    }
    top_down.reverse();
    Some(top_down)
}

/// Partial Grundy number by enumerating the proper partitions of `V` as
/// restricted growth strings.
pub fn partial_grundy_number(g: &Graph) -> Result<SolveResult> {
    partial_grundy_number_with_cap(g, PARTIAL_PARTITION_CAP)
}

pub fn partial_grundy_number_with_cap(g: &Graph, cap: usize) -> Result<SolveResult> {
    cap_check(g, "partial_grundy_number", cap)?;
    let n = g.n();
    let adj = g.neighbor_masks()?;
    let ub = if n == 0 { 0 } else { 1 + g.max_degree() };

    /// Class masks plus the (vertex, class) assignments in order.
    type Snapshot = (Vec<u64>, Vec<(usize, usize)>);

    struct State<'a> {
        adj: &'a [u64],
        n: usize,
        ub: usize,
        classes: Vec<u64>,
        best: usize,
        best_cert: Option<Snapshot>,
    }

    fn rec(st: &mut State, v: usize) {
        if st.best >= st.ub {
            return;
        }
        if v == st.n {
            let k = st.classes.len();
            if k > st.best {
                if let Some(order) = peel_partial_grundy(st.adj, &st.classes) {
                    st.best = k;
                    st.best_cert = Some((st.classes.clone(), order));
                }
            }
            return;
        }
        if st.classes.len() + (st.n - v) <= st.best {
            return;
        }
        let bit = 1u64 << v;
        // New class first: partitions with many classes come early and
        // tighten the bound sooner.
        st.classes.push(bit);
        rec(st, v + 1);
        st.classes.pop();
        for c in 0..st.classes.len() {
            if st.adj[v] & st.classes[c] == 0 {
                st.classes[c] |= bit;
                rec(st, v + 1);
                st.classes[c] &= !bit;
            }
        }
    }

    let mut st = State {
        adj: &adj,
        n,
        ub,
        classes: Vec::new(),
        best: 0,
        best_cert: None,
    };
    rec(&mut st, 0);
    let (classes, order) = st.best_cert.unwrap_or_default();
    let cert = WitnessCertificate::with_centers(
        WitnessKind::PartialGrundy,
        order.iter().map(|&(x, _)| mask_to_set(classes[x])).collect(),
        order.iter().map(|&(_, c)| c).collect(),
    );
    Ok(SolveResult {
        value: st.best,
        certificate: cert,
    })
}

/// Partial bookkeeping shared by the centered searches: colors of the
/// vertices placed so far and the union of neighborhoods per color.
struct CenterSearch<'a> {
    adj: &'a [u64],
    k: usize,
    b_coloring: bool,
    color: Vec<usize>,
    class: Vec<u64>,
    centers: Vec<usize>,
    colored: u64,
}

impl CenterSearch<'_> {
    fn place(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.class[c] |= 1u64 << v;
        self.colored |= 1u64 << v;
    }

    fn unplace(&mut self, v: usize, c: usize) {
        self.color[v] = 0;
        self.class[c] &= !(1u64 << v);
        self.colored &= !(1u64 << v);
    }

    fn class_nbhd(&self, c: usize) -> u64 {
        bits(self.class[c]).fold(0u64, |acc, u| acc | self.adj[u])
    }

    /// Most constrained unmet need: `(center color, missing color,
    /// candidate supporters)`. `None` when every need is met.
    fn pick_need(&self) -> Option<(usize, usize, u64)> {
        let mut best: Option<(usize, usize, u64)> = None;
        for i in 1..=self.k {
            let c = self.centers[i];
            let upper = if self.b_coloring { self.k } else { i - 1 };
            for j in 1..=upper {
                if j == i || self.adj[c] & self.class[j] != 0 {
                    continue;
                }
                let cand = self.adj[c] & !self.colored & !self.class_nbhd(j);
                if best.is_none_or(|b| cand.count_ones() < b.2.count_ones()) {
                    best = Some((i, j, cand));
                    if cand == 0 {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn supports(&mut self) -> bool {
        let Some((_, j, cand)) = self.pick_need() else {
            return true;
        };
        for u in bits(cand) {
            self.place(u, j);
            if self.supports() {
                return true;
            }
            self.unplace(u, j);
        }
        false
    }

    fn certificate(&self) -> WitnessCertificate {
        let kind = if self.b_coloring {
            WitnessKind::BColoring
        } else {
            WitnessKind::PartialGrundy
        };
        WitnessCertificate::with_centers(
            kind,
            (1..=self.k).map(|c| mask_to_set(self.class[c])).collect(),
            self.centers[1..].to_vec(),
        )
    }
}

/// Partial Grundy witness of order `k` built around guessed centers:
/// fresh centers for colors `2..k`, then one supporting neighbor per
/// unmet requirement. The support has at most `k^2` vertices.
pub fn partial_grundy_witness(g: &Graph, k: usize) -> Result<Option<WitnessCertificate>> {
    cap_check(g, "partial_grundy_witness", PARTIAL_CENTERED_CAP)?;
    partial_grundy_witness_unchecked(g, k)
}

fn partial_grundy_witness_unchecked(g: &Graph, k: usize) -> Result<Option<WitnessCertificate>> {
    let n = g.n();
    if k == 0 {
        return Ok(Some(WitnessCertificate::with_centers(
            WitnessKind::PartialGrundy,
            vec![],
            vec![],
        )));
    }
    if n == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok(Some(WitnessCertificate::with_centers(
            WitnessKind::PartialGrundy,
            vec![VertexSet::from([0])],
            vec![0],
        )));
    }
    let adj = g.neighbor_masks()?;
    let mut st = CenterSearch {
        adj: &adj,
        k,
        b_coloring: false,
        color: vec![0; n],
        class: vec![0; k + 1],
        centers: vec![usize::MAX; k + 1],
        colored: 0,
    };

    fn choose(st: &mut CenterSearch, i: usize, n: usize) -> bool {
        if i > st.k {
            // Color 1 has no requirement; its center is any supporter the
            // color-2 center recruits.
            let found = st.supports();
            if found {
                st.centers[1] = bits(st.class[1]).next().expect("class 1 is supported");
            }
            return found;
        }
        for v in 0..n {
            if st.colored & (1u64 << v) != 0 || (st.adj[v].count_ones() as usize) < i - 1 {
                continue;
            }
            st.place(v, i);
            st.centers[i] = v;
            if choose(st, i + 1, n) {
                return true;
            }
            st.unplace(v, i);
        }
        false
    }

    if choose(&mut st, 2, n) {
        Ok(Some(st.certificate()))
    } else {
        Ok(None)
    }
}

/// Partial Grundy number via [`partial_grundy_witness`] for increasing `k`;
/// handles larger graphs than the partition enumeration.
pub fn partial_grundy_number_centered(g: &Graph) -> Result<SolveResult> {
    partial_grundy_number_centered_with_cap(g, PARTIAL_CENTERED_CAP)
}

pub fn partial_grundy_number_centered_with_cap(g: &Graph, cap: usize) -> Result<SolveResult> {
    cap_check(g, "partial_grundy_number_centered", cap)?;
    let ub = if g.n() == 0 { 0 } else { 1 + g.max_degree() };
    let mut best = SolveResult {
        value: 0,
        certificate: WitnessCertificate::with_centers(WitnessKind::PartialGrundy, vec![], vec![]),
    };
    for k in 1..=ub {
        match partial_grundy_witness_unchecked(g, k)? {
            Some(cert) => {
                best = SolveResult {
                    value: k,
                    certificate: cert,
                }
            }
            None => break,
        }
    }
    Ok(best)
}

/// b-coloring witness of order `k` on some induced subgraph. Centers are
/// taken in increasing id order (colors are interchangeable), then each
/// center recruits a neighbor of every other color.
pub fn b_coloring_witness(g: &Graph, k: usize) -> Result<Option<WitnessCertificate>> {
    b_coloring_witness_with_cap(g, k, 64)
}

pub fn b_coloring_witness_with_cap(g: &Graph, k: usize, cap: usize) -> Result<Option<WitnessCertificate>> {
    cap_check(g, "b_coloring_witness", cap)?;
    let n = g.n();
    if k == 0 {
        return Ok(Some(WitnessCertificate::with_centers(
            WitnessKind::BColoring,
            vec![],
            vec![],
        )));
    }
    let adj = g.neighbor_masks()?;
    let eligible: Vec<usize> = (0..n).filter(|&v| adj[v].count_ones() as usize + 1 >= k).collect();
    if eligible.len() < k {
        return Ok(None);
    }
    let mut st = CenterSearch {
        adj: &adj,
        k,
        b_coloring: true,
        color: vec![0; n],
        class: vec![0; k + 1],
        centers: vec![usize::MAX; k + 1],
        colored: 0,
    };

    fn choose(st: &mut CenterSearch, eligible: &[usize], from: usize, i: usize) -> bool {
        if i > st.k {
            return st.supports();
        }
        let left = st.k - i + 1;
        for pos in from..eligible.len() {
            if eligible.len() - pos < left {
                break;
            }
            let v = eligible[pos];
            st.place(v, i);
            st.centers[i] = v;
            if choose(st, eligible, pos + 1, i + 1) {
                return true;
            }
            st.unplace(v, i);
        }
        false
    }

    if choose(&mut st, &eligible, 0, 1) {
        Ok(Some(st.certificate()))
    } else {
        Ok(None)
    }
}

/// Largest `k` such that some induced subgraph admits a b-coloring of
/// order `k`.
pub fn b_chromatic_core_order(g: &Graph) -> Result<SolveResult> {
    b_chromatic_core_order_with_cap(g, BCORE_CAP)
}

pub fn b_chromatic_core_order_with_cap(g: &Graph, cap: usize) -> Result<SolveResult> {
    cap_check(g, "b_chromatic_core_order", cap)?;
    let ub = if g.n() == 0 { 0 } else { 1 + g.max_degree() };
    let mut best = SolveResult {
        value: 0,
        certificate: WitnessCertificate::with_centers(WitnessKind::BColoring, vec![], vec![]),
    };
    // Dropping the top class of a core of order k leaves a core of order
    // k - 1, so the first failure ends the scan.
    for k in 1..=ub {
        match b_coloring_witness_with_cap(g, k, cap)? {
            Some(cert) => {
                best = SolveResult {
                    value: k,
                    certificate: cert,
                }
            }
            None => break,
        }
    }
    Ok(best)
}

/// Independent oracle for [`b_chromatic_core_order`]: every vertex is
/// either left out or placed into a class (restricted growth on the
/// included vertices), and each full assignment is checked directly.
pub fn b_chromatic_core_order_by_enumeration(g: &Graph) -> Result<usize> {
    cap_check(g, "b_chromatic_core_order_by_enumeration", BCORE_ORACLE_CAP)?;
    let adj = g.neighbor_masks()?;
    let n = g.n();

    fn is_b_coloring(adj: &[u64], classes: &[u64]) -> bool {
        classes
            .iter()
            .enumerate()
            .all(|(i, &c)| bits(c).any(|u| classes.iter().enumerate().all(|(j, &d)| j == i || adj[u] & d != 0)))
    }

    fn rec(adj: &[u64], n: usize, v: usize, classes: &mut Vec<u64>, best: &mut usize) {
        if v == n {
            if classes.len() > *best && is_b_coloring(adj, classes) {
                *best = classes.len();
            }
            return;
        }
        rec(adj, n, v + 1, classes, best);
        let bit = 1u64 << v;
        for c in 0..classes.len() {
            if adj[v] & classes[c] == 0 {
                classes[c] |= bit;
                rec(adj, n, v + 1, classes, best);
                classes[c] &= !bit;
            }
        }
        classes.push(bit);
        rec(adj, n, v + 1, classes, best);
        classes.pop();
    }

    let mut best = 0;
    rec(&adj, n, 0, &mut Vec::new(), &mut best);
    Ok(best)
}

/// Concatenates the classes of a certificate into a vertex ordering;
/// first-fit on it reproduces the classes of any optimal sequence.
pub fn ordering_from_certificate(cert: &WitnessCertificate) -> Vec<usize> {
    cert.classes.iter().flat_map(|c| c.iter()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{first_fit, verify_b_coloring, verify_grundy, verify_partial_grundy};

    fn t4() -> Graph {
        // parent(v) = v & (v - 1)
        Graph::from_edges(8, (1..8).map(|v| (v & (v - 1), v))).unwrap()
    }

    #[test]
    fn mis_enumeration_c5() {
        let g = Graph::cycle(5);
        let adj = g.neighbor_masks().unwrap();
        let mut all = Vec::new();
        let _ = for_each_maximal_independent_set(&adj, 0b11111, &mut |m| {
            all.push(m);
            ControlFlow::Continue(())
        });
        all.sort();
        assert_eq!(all, vec![0b00101, 0b01001, 0b01010, 0b10010, 0b10100]);
    }

    #[test]
    fn grundy_examples() {
        let r = grundy_number(&t4()).unwrap();
        assert_eq!(r.value, 4);
        assert!(verify_grundy(&t4(), &r.certificate).unwrap().is_valid());
        assert_eq!(grundy_number(&Graph::new(1)).unwrap().value, 1);
        assert_eq!(grundy_number(&Graph::path(4)).unwrap().value, 3);
        assert_eq!(grundy_number(&Graph::cycle(4)).unwrap().value, 2);
        assert_eq!(grundy_number(&Graph::new(0)).unwrap().value, 0);
    }

    #[test]
    fn orderings_oracle_examples() {
        assert_eq!(grundy_number_by_orderings(&Graph::complete(3)).unwrap(), 3);
        assert_eq!(grundy_number_by_orderings(&Graph::path(4)).unwrap(), 3);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(grundy_number_by_orderings(&two_k2).unwrap(), 2);
        assert!(grundy_number_by_orderings(&Graph::new(10)).is_err());
    }

    #[test]
    fn certificate_order_is_realizable() {
        let g = t4();
        let r = grundy_number(&g).unwrap();
        let coloring = first_fit(&g, &ordering_from_certificate(&r.certificate)).unwrap();
        assert_eq!(coloring.classes(), r.certificate.classes);
    }

    #[test]
    fn rooted_examples() {
        assert_eq!(rooted_grundy(&Graph::new(3), 1).unwrap(), 1);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(rooted_grundy(&star, 0).unwrap(), 2);
        assert_eq!(rooted_grundy(&t4(), 0).unwrap(), 4);
        let cert = rooted_grundy_certificate(&t4(), 0).unwrap();
        assert!(cert.classes[3].contains(0));
        assert!(verify_grundy(&t4(), &cert).unwrap().is_valid());
    }

    #[test]
    fn witness_search_examples() {
        let mut g = t4();
        g.add_vertices(3);
        let cert = grundy_witness_search(&g, 4).unwrap().unwrap();
        assert_eq!(cert.support, VertexSet::full(8));
        assert!(verify_grundy(&g, &cert).unwrap().is_valid());
        let k4 = Graph::complete(4);
        assert_eq!(
            grundy_witness_search(&k4, 4).unwrap().unwrap().support,
            VertexSet::full(4)
        );
        assert!(grundy_witness_search(&Graph::cycle(6), 4).unwrap().is_none());
        assert!(grundy_witness_search(&k4, 6).is_err());
    }

    #[test]
    fn partial_grundy_examples() {
        for k in 1..6 {
            let r = partial_grundy_number(&Graph::complete(k)).unwrap();
            assert_eq!(r.value, k);
        }
        let p4 = Graph::path(4);
        let r = partial_grundy_number(&p4).unwrap();
        assert_eq!(r.value, 3);
        assert!(verify_partial_grundy(&p4, &r.certificate).unwrap().is_valid());
        let c = partial_grundy_number_centered(&p4).unwrap();
        assert_eq!(c.value, 3);
        assert!(verify_partial_grundy(&p4, &c.certificate).unwrap().is_valid());
        assert!(c.certificate.support.len() <= 9);
    }

    #[test]
    fn bcore_examples() {
        for k in 1..6 {
            assert_eq!(b_chromatic_core_order(&Graph::complete(k)).unwrap().value, k);
        }
        let c5 = Graph::cycle(5);
        let r = b_chromatic_core_order(&c5).unwrap();
        assert_eq!(r.value, b_chromatic_core_order_by_enumeration(&c5).unwrap());
        assert!(verify_b_coloring(&c5, &r.certificate).unwrap().is_valid());
    }
}
