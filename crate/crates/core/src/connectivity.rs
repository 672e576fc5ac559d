//! Exact edge-connectivity and `l`-edge-connectivity.
//!
//! `κ'_l(G)` is computed as the minimum, over all partitions of `V(G)` into
//! exactly `l` nonempty parts, of the number of edges crossing between parts.
//! Deleting the crossing edges of such a partition leaves at least `l`
//! components; conversely any deletion set leaving `≥ l` components contains
//! the crossing set of its component partition coarsened to `l` parts. The
//! same formulation is valid for disconnected graphs, which is what the
//! minimality checks need when they evaluate `κ'_l(G - e)`.
//!
//! The scan enumerates restricted-growth strings over a BFS vertex order with
//! branch-and-bound on the running crossing count. It is exponential and
//! intended for `n ≤ 14`, `l ≤ 4`.

use crate::error::{Error, Result};
use crate::graph::{bits, bridges, is_connected, norm_edge, Edge, Graph};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    /// The crossing edges `T`, sorted.
    pub edges: Vec<Edge>,
    /// The `l` parts, ordered by smallest vertex.
    pub parts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub kappa_prime: usize,
    pub kappa_l: BTreeMap<usize, usize>,
    pub bridge_count: usize,
    pub witnesses: BTreeMap<usize, CutWitness>,
}

enum Visit {
    Continue,
    Stop,
    Tighten(usize),
}

/// Set-partition scan over a relabelled copy of the graph.
struct Scan {
    order: Vec<usize>,
    rows: Vec<u64>,
    n: usize,
    l: usize,
    parts: Vec<u64>,
    label: Vec<usize>,
    assigned: u64,
    /// For reordered vertex `i`: earlier vertices that must land in a
    /// different part.
    apart: Vec<u64>,
    limit: usize,
    stopped: bool,
}

impl Scan {
    fn new(g: &Graph, l: usize) -> Self {
        let order = bfs_order(g);
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| bits(g.neighbors(v)).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        Scan {
            order,
            rows,
            n: g.n(),
            l,
            parts: vec![0; l],
            label: vec![0; g.n()],
            assigned: 0,
            apart: vec![0; g.n()],
            limit: usize::MAX,
            stopped: false,
        }
    }

    fn require_crossing(&mut self, edges: &[Edge]) {
        let mut pos = vec![0; self.n];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        for &(u, v) in edges {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            self.apart[b] |= 1 << a;
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&Scan, usize) -> Visit) {
        self.rec(0, 0, 0, visit);
    }

    fn rec(&mut self, i: usize, used: usize, cost: usize, visit: &mut dyn FnMut(&Scan, usize) -> Visit) {
        if self.stopped || cost > self.limit {
            return;
        }
        if i == self.n {
            if used == self.l {
                match visit(self, cost) {
                    Visit::Continue => {}
                    Visit::Stop => self.stopped = true,
                    Visit::Tighten(lim) => self.limit = lim,
                }
            }
            return;
        }
        let remaining = self.n - i;
        let first = if self.l - used == remaining { used } else { 0 };
        let last = used.min(self.l - 1);
        for p in first..=last {
            if self.apart[i] & self.parts[p] != 0 {
                continue;
            }
            let add = (self.rows[i] & self.assigned & !self.parts[p]).count_ones() as usize;
            self.parts[p] |= 1 << i;
            self.assigned |= 1 << i;
            self.label[i] = p;
            self.rec(i + 1, used.max(p + 1), cost + add, visit);
            self.parts[p] &= !(1 << i);
            self.assigned &= !(1 << i);
            if self.stopped {
                return;
            }
        }
    }

    /// Current partition in original labels, ordered by smallest vertex.
    fn parts_original(&self) -> Vec<u64> {
        let mut parts = vec![0u64; self.l];
        for i in 0..self.n {
            parts[self.label[i]] |= 1 << self.order[i];
        }
        parts.sort_unstable_by_key(|p| p.trailing_zeros());
        parts
    }

    fn crossing_original(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in bits(self.rows[i] & ((1u64 << i) - 1)) {
                if self.label[i] != self.label[j] {
                    out.push(norm_edge(self.order[i], self.order[j]));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = 0u64;
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| seen >> v & 1 == 0)
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        seen |= 1 << root;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in bits(g.neighbors(v) & !seen) {
                seen |= 1 << u;
                order.push(u);
            }
        }
    }
    order
}

fn check_l(l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidArgument(format!("l must be at least 2, got {l}")));
    }
    Ok(())
}

/// `κ'_l(G)`; equals `n` when `n < l`.
pub fn l_edge_connectivity(g: &Graph, l: usize) -> Result<usize> {
    check_l(l)?;
    if g.n() < l {
        return Ok(g.n());
    }
    let mut best = g.m();
    let mut scan = Scan::new(g, l);
    scan.limit = best;
    scan.run(&mut |_, cost| {
        best = cost;
        if cost == 0 {
            Visit::Stop
        } else {
            Visit::Tighten(cost - 1)
        }
    });
    Ok(best)
}

/// `κ'(G)`, i.e. `κ'_2`. Zero for disconnected graphs and for `K_1`.
pub fn edge_connectivity(g: &Graph) -> usize {
    if g.n() == 1 {
        return 0;
    }
    l_edge_connectivity(g, 2).expect("l = 2 is valid")
}

/// True when some `l`-part partition has fewer than `k` crossing edges,
/// i.e. `κ'_l(G) < k`. Stops at the first such partition.
pub fn l_edge_connectivity_below(g: &Graph, l: usize, k: usize) -> Result<bool> {
    check_l(l)?;
    if g.n() < l {
        return Ok(g.n() < k);
    }
    if k == 0 {
        return Ok(false);
    }
    let mut found = false;
    let mut scan = Scan::new(g, l);
    scan.limit = k - 1;
    scan.run(&mut |_, _| {
        found = true;
        Visit::Stop
    });
    Ok(found)
}

fn require_connected(g: &Graph) -> Result<()> {
    if is_connected(g) {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// `κ'_l(G) ≥ k`.
pub fn is_kl_edge_connected(g: &Graph, k: usize, l: usize) -> Result<bool> {
    require_connected(g)?;
    Ok(!l_edge_connectivity_below(g, l, k)?)
}

/// `κ'_l(G) ≥ k` and `κ'_l(G - e) < k` for every edge `e`.
pub fn is_minimally_kl_edge_connected(g: &Graph, k: usize, l: usize) -> Result<bool> {
    if !is_kl_edge_connected(g, k, l)? {
        return Ok(false);
    }
    for (u, v) in g.edges() {
        if !l_edge_connectivity_below(&g.without_edge(u, v), l, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cross-checks the two characterisations of minimal (k,k)-edge-connectivity:
/// `(k,k)`-edge-connected with `κ'_k(G - e) = k - 1` for every edge, versus
/// the defining predicate.
pub fn minimality_characterization_agrees(g: &Graph, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    let mut per_edge = is_kl_edge_connected(g, k, k)?;
    for (u, v) in g.edges() {
        if !per_edge {
            break;
        }
        per_edge = l_edge_connectivity(&g.without_edge(u, v), k)? == k - 1;
    }
    Ok(per_edge == is_minimally_kl_edge_connected(g, k, k)?)
}

/// One minimum `l`-cut. Among optimal cuts, the lexicographically smallest
/// sorted edge set is returned.
pub fn cut_witness(g: &Graph, l: usize) -> Result<CutWitness> {
    check_l(l)?;
    if g.n() < l {
        return Err(Error::InvalidArgument(format!(
            "no partition of {} vertices into {l} parts",
            g.n()
        )));
    }
    let kappa = l_edge_connectivity(g, l)?;
    let mut best: Option<CutWitness> = None;
    let mut scan = Scan::new(g, l);
    scan.limit = kappa;
    scan.run(&mut |s, _| {
        let edges = s.crossing_original();
        if best.as_ref().is_none_or(|b| edges < b.edges) {
            best = Some(CutWitness {
                edges,
                parts: s.parts_original(),
            });
        }
        Visit::Continue
    });
    Ok(best.expect("n >= l guarantees a partition"))
}

/// An `l`-part partition whose crossing set has exactly `size` edges and
/// contains every edge of `required`.
pub fn cut_containing(g: &Graph, l: usize, size: usize, required: &[Edge]) -> Result<Option<CutWitness>> {
    check_l(l)?;
    if g.n() < l {
        return Ok(None);
    }
    let mut found = None;
    let mut scan = Scan::new(g, l);
    scan.require_crossing(required);
    scan.limit = size;
    scan.run(&mut |s, cost| {
        if cost == size {
            found = Some(CutWitness {
                edges: s.crossing_original(),
                parts: s.parts_original(),
            });
            Visit::Stop
        } else {
            Visit::Continue
        }
    });
    Ok(found)
}

/// Pendant-vertex reduction: for every degree-1 vertex `v`, `G` is minimally
/// (k,k)-edge-connected iff `G - v` is minimally (k-1,k-1)-edge-connected.
pub fn pendant_reduction_agrees(g: &Graph, k: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("k must be at least 3, got {k}")));
    }
    let pendants: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    if pendants.is_empty() {
        return Err(Error::InvalidArgument("graph has no degree-1 vertex".into()));
    }
    let lhs = is_minimally_kl_edge_connected(g, k, k)?;
    for v in pendants {
        let h = g.without_vertex(v)?;
        if lhs != is_minimally_kl_edge_connected(&h, k - 1, k - 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn connectivity_report(g: &Graph, ls: &[usize]) -> Result<ConnectivityReport> {
    let mut kappa_l = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for &l in ls {
        kappa_l.insert(l, l_edge_connectivity(g, l)?);
        if g.n() >= l {
            witnesses.insert(l, cut_witness(g, l)?);
        }
    }
    Ok(ConnectivityReport {
        kappa_prime: edge_connectivity(g),
        kappa_l,
        bridge_count: bridges(g).len(),
        witnesses,
    })
}

/// Independent slow path: the smallest edge subset whose deletion leaves at
/// least `l` components, searched by increasing subset size.
pub fn l_edge_connectivity_by_deletion(g: &Graph, l: usize) -> Result<usize> {
    check_l(l)?;
    if g.n() < l {
        return Ok(g.n());
    }
    let edges = g.edges();
    for size in 0..=edges.len() {
        let mut chosen = Vec::with_capacity(size);
        if deletion_search(g, &edges, 0, size, &mut chosen, l) {
            return Ok(size);
        }
    }
    unreachable!("deleting every edge leaves n >= l components")
}

fn deletion_search(g: &Graph, edges: &[Edge], from: usize, left: usize, chosen: &mut Vec<Edge>, l: usize) -> bool {
    if left == 0 {
        return crate::graph::component_count(&g.without_edges(chosen)) >= l;
    }
    for i in from..=edges.len() - left {
        chosen.push(edges[i]);
        let hit = deletion_search(g, edges, i + 1, left - 1, chosen, l);
        chosen.pop();
        if hit {
            return true;
        }
    }
    false
}
