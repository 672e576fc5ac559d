//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` adjacency row, so neighbourhood operations are
//! single machine-word bit operations. Vertex sets throughout the crate are
//! plain `u64` masks; [`bits`] iterates one.

mod graph6;
mod structure;

pub use graph6::{parse_graph6_lines, Graph6};
pub use structure::{
    block_decomposition, bridges, chorded_cycle, components, component_count, has_chorded_cycle,
    internal_paths, is_connected, BlockDecomposition, ChordedCycle, InternalPath,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const MAX_VERTICES: usize = 64;

/// An undirected edge, always stored with `0 < 1`.
pub type Edge = (usize, usize);

/// Iterates the set bits of a vertex mask in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) fn norm_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a graph from an edge list, dropping duplicate pairs.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in pairs {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.rows[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &pairs)
    }

    pub fn path(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &pairs)
    }

    /// `K_{1,t}` with the centre at vertex 0.
    pub fn star(t: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..=t).map(|i| (0, i)).collect();
        Graph::from_edge_list(t + 1, &pairs)
    }

    /// `K_{a,b}`; the `a` side occupies vertices `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut pairs = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                pairs.push((i, a + j));
            }
        }
        Graph::from_edge_list(a + b, &pairs)
    }

    /// Builds directly from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let all = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !all).trailing_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges in lexicographic `(min, max)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in bits(self.rows[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// `G - uv`. Removing an absent edge returns an identical graph.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.rows[u] &= !(1 << v);
        g.rows[v] &= !(1 << u);
        g
    }

    pub fn without_edges(&self, edges: &[Edge]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.rows[u] &= !(1 << v);
            g.rows[v] &= !(1 << u);
        }
        g
    }

    /// The subgraph induced by `keep`, relabelled to `0..|keep|` preserving order.
    pub fn induced(&self, keep: u64) -> Result<Graph> {
        let keep = keep & self.vertex_mask();
        let verts: Vec<usize> = bits(keep).collect();
        let mut rows = Vec::with_capacity(verts.len());
        for &v in &verts {
            rows.push(compress(self.rows[v] & keep, keep));
        }
        if rows.is_empty() {
            return Err(Error::VertexCount(0));
        }
        Ok(Graph {
            n: rows.len(),
            rows,
        })
    }

    /// `G - v`, relabelled so vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.induced(self.vertex_mask() & !(1 << v))
    }

    /// Adds a fresh vertex `n` adjacent to the vertices in `nbrs`.
    pub fn with_vertex(&self, nbrs: u64) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        if nbrs & !self.vertex_mask() != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: (nbrs & !self.vertex_mask()).trailing_zeros() as usize,
                n: self.n,
            });
        }
        let mut rows = self.rows.clone();
        for u in bits(nbrs) {
            rows[u] |= 1 << self.n;
        }
        rows.push(nbrs);
        Ok(Graph { n, rows })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let mut r = 0u64;
            for u in bits(self.rows[v]) {
                r |= 1 << perm[u];
            }
            rows[perm[v]] = r;
        }
        Graph { n: self.n, rows }
    }

    /// Disjoint union; `other` is shifted to `self.n()..`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(Graph { n, rows })
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// True when the graph is a star `K_{1,n-1}` centred at `center`
    /// (including `K_1` and `K_2`).
    pub fn is_star_centered_at(&self, center: usize) -> bool {
        center < self.n
            && self.m() == self.n - 1
            && self.degree(center) == self.n - 1
    }
}

/// Packs the bits of `row` that lie inside `keep` into consecutive low bits.
fn compress(row: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in bits(keep).enumerate() {
        if row >> v & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Graph::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g, Graph::complete(3).unwrap());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::empty(0), Err(Error::VertexCount(0)));
        assert_eq!(Graph::empty(65), Err(Error::VertexCount(65)));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = Graph::complete_bipartite(2, 5).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        assert_eq!(g.m(), 10);
    }

    #[test]
    fn vertex_deletion_relabels() {
        let g = Graph::path(4).unwrap();
        let h = g.without_vertex(1).unwrap();
        assert_eq!(h.edges(), vec![(1, 2)]);
        let h = g.with_vertex(0b1001).unwrap();
        assert_eq!(h.n(), 5);
        assert!(h.has_edge(4, 0) && h.has_edge(4, 3));
    }

    #[test]
    fn relabel_preserves_edge_count() {
        let g = Graph::path(4).unwrap();
        let h = g.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn star_detection() {
        assert!(Graph::star(4).unwrap().is_star_centered_at(0));
        assert!(!Graph::star(4).unwrap().is_star_centered_at(1));
        assert!(Graph::star(1).unwrap().is_star_centered_at(1));
        assert!(Graph::empty(1).unwrap().is_star_centered_at(0));
        assert!(!Graph::cycle(3).unwrap().is_star_centered_at(0));
    }
}
