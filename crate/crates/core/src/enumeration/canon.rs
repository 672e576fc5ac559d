//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the unit partition to an
//! equitable one, then repeatedly individualise a vertex of the first
//! smallest non-singleton cell and refine again. Each discrete leaf orders the
//! vertices; the canonical form is the relabelling with the lexicographically
//! largest row sequence. Automorphisms are harvested whenever two leaves give
//! the same relabelled graph and are used both to jump back up the tree and
//! to skip children equivalent to one already explored.

use crate::graph::{bits, Graph};

/// Refines `cells` to the coarsest equitable partition below it.
///
/// Every cell is split by neighbour count into each cell in turn, fragments
/// ordered by increasing count. Restarts after each split, so the result
/// depends only on the graph and the incoming ordered partition.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut s = 0;
    let mut next: Vec<u64> = Vec::with_capacity(cells.len());
    let mut counts: Vec<(u32, usize)> = Vec::new();
    while s < cells.len() {
        let w = cells[s];
        next.clear();
        for &c in cells.iter() {
            if c & (c - 1) == 0 {
                next.push(c);
                continue;
            }
            counts.clear();
            counts.extend(bits(c).map(|v| ((rows[v] & w).count_ones(), v)));
            counts.sort_unstable();
            let mut frag = 0u64;
            let mut cur = counts[0].0;
            for &(k, v) in &counts {
                if k != cur {
                    next.push(frag);
                    frag = 0;
                    cur = k;
                }
                frag |= 1 << v;
            }
            next.push(frag);
        }
        if next.len() != cells.len() {
            std::mem::swap(cells, &mut next);
            s = 0;
        } else {
            s += 1;
        }
    }
}

fn certificate(rows: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| bits(rows[v]).fold(0u64, |r, u| r | 1 << pos[u]))
        .collect()
}

struct Leaf {
    cert: Vec<u64>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    gens: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Returns the depth to resume at after an automorphism was found in
    /// this subtree, or `None` to carry on normally.
    fn visit(&mut self, cells: &[u64], path: &mut Vec<usize>) -> Option<usize> {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            return self.leaf(cells, path);
        };
        let depth = path.len();
        let mut done = 0u64;
        for v in bits(cells[t]) {
            if self.equivalent_to_done(v, done, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(cells[t] & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.rows, &mut child);
            path.push(v);
            let jump = self.visit(&child, path);
            path.pop();
            done |= 1 << v;
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// True when an automorphism fixing `path` pointwise maps `v` into `done`.
    fn equivalent_to_done(&self, v: usize, done: u64, path: &[usize]) -> bool {
        if done == 0 || self.gens.is_empty() {
            return false;
        }
        let n = self.rows.len();
        let mut orbit = 1u64 << v;
        let mut frontier = orbit;
        let usable: Vec<&Vec<usize>> = self.gens.iter().filter(|g| path.iter().all(|&p| g[p] == p)).collect();
        if usable.is_empty() {
            return false;
        }
        while frontier != 0 {
            let mut grown = 0u64;
            for x in bits(frontier) {
                for g in &usable {
                    grown |= 1 << g[x];
                }
            }
            frontier = grown & !orbit;
            orbit |= grown;
            if orbit & done != 0 {
                return true;
            }
        }
        debug_assert!(orbit >> n == 0);
        false
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = certificate(self.rows, &order);
        let Some(first) = &self.first else {
            let leaf = Leaf { cert, order, path: path.to_vec() };
            self.best = Some(Leaf { cert: leaf.cert.clone(), order: leaf.order.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gen = automorphism(&first.order, &order);
            let d = common_prefix(&first.path, path);
            self.gens.push(gen);
            return Some(d);
        }
        let best = self.best.as_ref().expect("set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let gen = automorphism(&best.order, &order);
                let d = common_prefix(&best.path, path);
                self.gens.push(gen);
                Some(d)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { cert, order, path: path.to_vec() });
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }
}

/// The vertex map sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut g = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        g[a] = b;
    }
    g
}

/// Canonical labelling: `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let rows = g.rows();
    let mut cells = vec![g.vertex_mask()];
    refine(rows, &mut cells);
    let mut search = Search { rows, first: None, best: None, gens: Vec::new() };
    search.visit(&cells, &mut Vec::with_capacity(n));
    let best = search.best.expect("search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        perm[v] = i;
    }
    perm
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel_unchecked(&canonical_labeling(g))
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && sorted_degrees(g) == sorted_degrees(h) && canonical_form(g) == canonical_form(h)
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

/// Lexicographically smallest adjacency rows over all `n!` relabellings.
/// Exponential; an independent check for the refinement search at small `n`.
pub fn brute_force_canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = g.relabel_unchecked(&perm);
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let h = g.relabel_unchecked(&perm);
            if h.rows() < best.rows() {
                best = h;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}
