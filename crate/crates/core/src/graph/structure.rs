//! Structural queries: components, bridges, blocks, chorded cycles and
//! internal paths.

use super::{bits, norm_edge, Edge, Graph};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::VecDeque;

/// Vertex masks of the connected components, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<u64> {
    let mut out = Vec::new();
    let mut left = g.vertex_mask();
    while left != 0 {
        let comp = reach(g, left.trailing_zeros() as usize, left);
        out.push(comp);
        left &= !comp;
    }
    out
}

pub fn component_count(g: &Graph) -> usize {
    components(g).len()
}

pub fn is_connected(g: &Graph) -> bool {
    reach(g, 0, g.vertex_mask()) == g.vertex_mask()
}

/// Vertices reachable from `start` using only vertices inside `allowed`.
pub(crate) fn reach(g: &Graph, start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks. A bridge is a two-vertex block.
    pub blocks: Vec<u64>,
    pub cut_vertices: u64,
    /// `leaf[i]` is true when block `i` contains exactly one cut vertex.
    pub leaf: Vec<bool>,
}

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<u64>,
    bridges: Vec<Edge>,
    cut: u64,
}

const UNSEEN: usize = usize::MAX;

impl<'a> LowLink<'a> {
    fn run(g: &'a Graph) -> Self {
        let n = g.n();
        let mut s = LowLink {
            g,
            disc: vec![UNSEEN; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            bridges: Vec::new(),
            cut: 0,
        };
        for r in 0..n {
            if s.disc[r] == UNSEEN {
                s.visit(r, None);
            }
        }
        s.bridges.sort_unstable();
        s
    }

    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for v in bits(self.g.neighbors(u)) {
            if self.disc[v] == UNSEEN {
                children += 1;
                self.stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() {
                        self.cut |= 1 << u;
                    }
                    let mut block = 0u64;
                    while let Some((a, b)) = self.stack.pop() {
                        block |= 1 << a | 1 << b;
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
                if self.low[v] > self.disc[u] {
                    self.bridges.push(norm_edge(u, v));
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cut |= 1 << u;
        }
    }
}

/// Edges whose removal increases the number of components.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    LowLink::run(g).bridges
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let ll = LowLink::run(g);
    let mut blocks = ll.blocks;
    blocks.sort_unstable_by_key(|b| (b.trailing_zeros(), *b));
    let leaf = blocks
        .iter()
        .map(|b| (b & ll.cut).count_ones() == 1)
        .collect();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: ll.cut,
        leaf,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordedCycle {
    /// Cycle vertices in order; the closing edge back to `cycle[0]` is implied.
    pub cycle: Vec<usize>,
    pub chord: Edge,
}

pub fn has_chorded_cycle(g: &Graph) -> bool {
    chorded_cycle(g).is_some()
}

/// Finds a cycle with a chord, if one exists.
///
/// An edge `uv` is a chord of some cycle exactly when `G - uv` contains two
/// internally disjoint `u`-`v` paths; those paths close into the cycle.
pub fn chorded_cycle(g: &Graph) -> Option<ChordedCycle> {
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v);
        if let Some((p, q)) = two_disjoint_paths(&h, u, v) {
            let mut cycle = p;
            cycle.extend(q.into_iter().rev().skip(1).take_while(|&w| w != u));
            return Some(ChordedCycle {
                cycle,
                chord: (u, v),
            });
        }
    }
    None
}

/// Two internally vertex-disjoint `s`-`t` paths via unit-capacity flow on
/// the vertex-split graph.
fn two_disjoint_paths(g: &Graph, s: usize, t: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let size = 2 * n;
    let vin = |v: usize| 2 * v;
    let vout = |v: usize| 2 * v + 1;
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..n {
        cap[vin(v)][vout(v)] = 1;
    }
    for (a, b) in g.edges() {
        cap[vout(a)][vin(b)] = 1;
        cap[vout(b)][vin(a)] = 1;
    }
    let src = vout(s);
    let dst = vin(t);
    let orig = cap.clone();

    for _ in 0..2 {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            if x == dst {
                break;
            }
            for y in 0..size {
                if cap[x][y] > 0 && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            return None;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
    }

    let mut used: Vec<Vec<bool>> = (0..size)
        .map(|x| (0..size).map(|y| orig[x][y] > 0 && cap[x][y] == 0).collect())
        .collect();
    let mut walk = || {
        let mut path = vec![s];
        let mut x = src;
        while x != dst {
            let y = (0..size).find(|&y| used[x][y])?;
            used[x][y] = false;
            if y % 2 == 0 {
                path.push(y / 2);
            }
            x = y;
        }
        Some(path)
    };
    let p = walk()?;
    let q = walk()?;
    Some((p, q))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InternalPath {
    /// `v_0 .. v_p`. For a component that is a bare cycle, `v_0 == v_p` is
    /// its smallest vertex.
    pub vertices: Vec<usize>,
}

impl InternalPath {
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }
}

/// The maximal internal paths with at least one interior vertex.
///
/// Interior vertices have degree 2; endpoints have degree other than 2,
/// except on a component that is itself a cycle, where the smallest vertex
/// serves as both endpoints. Each path is oriented so it starts at its
/// smaller endpoint (ties broken by the smaller first interior vertex).
pub fn internal_paths(g: &Graph) -> Vec<InternalPath> {
    let deg2: u64 = (0..g.n())
        .filter(|&v| g.degree(v) == 2)
        .fold(0, |acc, v| acc | 1 << v);
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in bits(deg2) {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut nb = bits(g.neighbors(start));
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        let left = walk(g, deg2, start, a);
        let path = if left.last() == Some(&start) {
            // bare cycle component
            let mut cyc = left;
            cyc.pop();
            cyc.insert(0, start);
            let pos = cyc.iter().enumerate().min_by_key(|p| p.1).unwrap().0;
            cyc.rotate_left(pos);
            if cyc.len() > 2 && cyc[cyc.len() - 1] < cyc[1] {
                cyc[1..].reverse();
            }
            let first = cyc[0];
            cyc.push(first);
            cyc
        } else {
            let right = walk(g, deg2, start, b);
            let mut p: Vec<usize> = left.into_iter().rev().collect();
            p.push(start);
            p.extend(right);
            let (s, e) = (p[0], p[p.len() - 1]);
            if (e, p[p.len() - 2]) < (s, p[1]) {
                p.reverse();
            }
            p
        };
        for &v in &path {
            if deg2 >> v & 1 == 1 {
                seen |= 1 << v;
            }
        }
        out.push(InternalPath { vertices: path });
    }
    out.sort_by(|x, y| x.vertices.cmp(&y.vertices));
    out
}

/// Walks from `from` through `next` along degree-2 vertices; returns the
/// visited vertices after `from`, ending at the first vertex of degree != 2
/// or back at `from`.
fn walk(g: &Graph, deg2: u64, from: usize, next: usize) -> Vec<usize> {
    let mut out = vec![next];
    let (mut prev, mut cur) = (from, next);
    while deg2 >> cur & 1 == 1 && cur != from {
        let nxt = bits(g.neighbors(cur) & !(1 << prev)).next().unwrap();
        out.push(nxt);
        prev = cur;
        cur = nxt;
    }
    out
}
