use super::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;

pub const MAX_ORDER: usize = 10;
pub const MAX_SIZE: usize = 12;

/// Parents processed per batch before merging into the running set; bounds
/// peak memory at the larger orders.
const CHUNK: usize = 2048;

/// Packs a graph on at most 15 vertices into a sortable key: the upper
/// triangle in column order, with `n` in the top byte.
pub(crate) fn pack(g: &Graph) -> u128 {
    let mut key = (g.n() as u128) << 120;
    let mut bit = 0;
    for j in 1..g.n() {
        let col = g.neighbors(j) & ((1u64 << j) - 1);
        key |= (col as u128) << bit;
        bit += j;
    }
    key
}

pub(crate) fn unpack(key: u128) -> Graph {
    let n = (key >> 120) as usize;
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (bit + i) & 1 == 1 {
                edges.push((i, j));
            }
        }
        bit += j;
    }
    Graph::from_edge_list(n, &edges).expect("packed graphs are valid")
}

/// Expands every parent, canonicalises the children and returns the sorted
/// set of distinct keys.
fn expand<F>(parents: &[u128], children: F) -> Vec<u128>
where
    F: Fn(&Graph) -> Vec<Graph> + Sync,
{
    let mut all: Vec<u128> = Vec::new();
    for chunk in parents.chunks(CHUNK) {
        let mut batch: Vec<u128> = chunk
            .par_iter()
            .flat_map_iter(|&p| {
                let mut keys: Vec<u128> = children(&unpack(p)).iter().map(|c| pack(&canonical_form(c))).collect();
                keys.sort_unstable();
                keys.dedup();
                keys
            })
            .collect();
        batch.par_sort_unstable();
        batch.dedup();
        all = merge_dedup(&all, &batch);
    }
    all
}

fn merge_dedup(a: &[u128], b: &[u128]) -> Vec<u128> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let x = if a[i] <= b[j] {
            i += 1;
            a[i - 1]
        } else {
            j += 1;
            b[j - 1]
        };
        if out.last() != Some(&x) {
            out.push(x);
        }
    }
    for &x in a[i..].iter().chain(&b[j..]) {
        if out.last() != Some(&x) {
            out.push(x);
        }
    }
    out
}

/// One canonical representative of every connected graph on `n` vertices,
/// in a fixed order.
///
/// Grows level by level: every connected graph on `n` vertices has a vertex
/// whose removal leaves it connected (a leaf of a spanning tree), so adding a
/// vertex with every nonempty neighbourhood to each graph of the previous
/// level reaches every class.
pub fn enumerate_connected_by_order(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if n > MAX_ORDER {
        return Err(Error::CapExceeded { what: "order", value: n, cap: MAX_ORDER });
    }
    let mut level = vec![pack(&Graph::empty(1)?)];
    for _ in 1..n {
        level = expand(&level, |p| {
            (1..1u64 << p.n()).map(|s| p.with_vertex(s).expect("below the vertex cap")).collect()
        });
    }
    Ok(level.into_iter().map(unpack).collect())
}

/// One canonical representative of every connected graph with `m` edges
/// (and therefore no isolated vertex, except `K_1` at `m = 0`).
///
/// A connected graph with a cycle loses a cycle edge and stays connected; a
/// tree loses a leaf. So each class is reached from the level below by adding
/// either an edge between existing vertices or a pendant vertex.
pub fn enumerate_connected_by_size(m: usize) -> Result<Vec<Graph>> {
    if m > MAX_SIZE {
        return Err(Error::CapExceeded { what: "size", value: m, cap: MAX_SIZE });
    }
    let mut level = vec![pack(&Graph::empty(1)?)];
    for _ in 0..m {
        level = expand(&level, |p| {
            let mut out = Vec::new();
            for u in 0..p.n() {
                for v in u + 1..p.n() {
                    if !p.has_edge(u, v) {
                        out.push(p.with_edge(u, v).expect("valid pair"));
                    }
                }
                out.push(p.with_vertex(1 << u).expect("below the vertex cap"));
            }
            out
        });
    }
    Ok(level.into_iter().map(unpack).collect())
}

/// Counts isomorphism classes of connected graphs on `n ≤ 7` vertices by
/// scanning all labelled graphs and keeping those whose edge set is the
/// smallest in its orbit under all vertex permutations. Shares nothing with
/// the refinement search.
pub fn brute_force_connected_count(n: usize) -> Result<usize> {
    if n == 0 || n > 7 {
        return Err(Error::CapExceeded { what: "brute-force order", value: n, cap: 7 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        b * (b - 1) / 2 + a
    };
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if perm.iter().enumerate().any(|(i, &p)| i != p) {
            maps.push(pairs.iter().map(|&(u, v)| index(perm[u], perm[v])).collect());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let total = 1u32 << pairs.len();
    let count = (0..total)
        .into_par_iter()
        .filter(|&code| {
            let mut edges = Vec::new();
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if code >> b & 1 == 1 {
                    edges.push((u, v));
                }
            }
            let g = Graph::from_edge_list(n, &edges).expect("valid pairs");
            if !crate::graph::is_connected(&g) {
                return false;
            }
            maps.iter().all(|map| {
                let image = map.iter().enumerate().fold(0u32, |acc, (b, &t)| acc | ((code >> b & 1) << t));
                image >= code
            })
        })
        .count();
    Ok(count)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_connected;

    #[test]
    fn pack_round_trip() {
        for g in [Graph::complete(13).unwrap(), Graph::cycle(7).unwrap(), Graph::empty(1).unwrap()] {
            assert_eq!(unpack(pack(&g)), g);
        }
    }

    #[test]
    fn order_counts() {
        let expected = [1, 1, 2, 6, 21, 112, 853, 11117];
        for (i, &e) in expected.iter().enumerate() {
            let gs = enumerate_connected_by_order(i + 1).unwrap();
            assert_eq!(gs.len(), e, "n = {}", i + 1);
            assert!(gs.iter().all(|g| is_connected(g) && g.n() == i + 1));
        }
        assert!(enumerate_connected_by_order(11).is_err());
    }

    #[test]
    fn order_counts_match_brute_force() {
        for n in 1..=7 {
            assert_eq!(enumerate_connected_by_order(n).unwrap().len(), brute_force_connected_count(n).unwrap());
        }
    }

    #[test]
    fn size_counts() {
        let expected = [1, 1, 1, 3, 5, 12, 30, 79, 227, 710];
        for (m, &e) in expected.iter().enumerate() {
            let gs = enumerate_connected_by_size(m).unwrap();
            assert_eq!(gs.len(), e, "m = {m}");
            assert!(gs.iter().all(|g| is_connected(g) && g.m() == m));
        }
        assert!(enumerate_connected_by_size(13).is_err());
    }

    #[test]
    fn three_edges() {
        let mut got: Vec<Graph> = enumerate_connected_by_size(3).unwrap();
        got.sort();
        let mut want: Vec<Graph> = [Graph::path(4).unwrap(), Graph::complete(3).unwrap(), Graph::star(3).unwrap()]
            .iter()
            .map(canonical_form)
            .collect();
        want.sort();
        assert_eq!(got, want);
    }
}
