use super::{rho, spectral_radius, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HongBound {
    pub value: f64,
    /// Set when every degree is `δ` or `n − 1`, the equality case.
    pub tight: bool,
}

/// `ρ(G) ≤ (δ−1)/2 + sqrt(2m − nδ + (δ+1)²/4)` for minimum degree `δ ≥ 1`.
pub fn hong_bound(g: &Graph) -> Result<HongBound> {
    let delta = g.min_degree();
    if delta == 0 {
        return Err(Error::OutsideHypothesis("graph has an isolated vertex".into()));
    }
    let (n, m, d) = (g.n() as f64, g.m() as f64, delta as f64);
    let value = (d - 1.0) / 2.0 + (2.0 * m - n * d + (d + 1.0).powi(2) / 4.0).sqrt();
    let top = g.n() - 1;
    let tight = (0..g.n()).all(|v| {
        let dv = g.degree(v);
        dv == delta || dv == top
    });
    Ok(HongBound { value, tight })
}

/// The clique-size bound `ρ(G) ≤ (sqrt(1 + 8m) − 1) / 2`.
pub fn stanley_bound(m: usize) -> f64 {
    ((1.0 + 8.0 * m as f64).sqrt() - 1.0) / 2.0
}

/// Identifies vertex `v` of `h` with vertex `w` of `k`. Vertices of `h` keep
/// their labels; the rest of `k` follows in order.
pub fn coalesce(h: &Graph, v: usize, k: &Graph, w: usize) -> Result<Graph> {
    if v >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
    }
    if w >= k.n() {
        return Err(Error::VertexOutOfRange { vertex: w, n: k.n() });
    }
    let mut map = vec![0usize; k.n()];
    let mut next = h.n();
    for (x, slot) in map.iter_mut().enumerate() {
        if x == w {
            *slot = v;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = h.edges();
    for (a, b) in k.edges() {
        edges.push((map[a], map[b]));
    }
    Graph::from_edge_list(next, &edges)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoalescenceBound {
    pub graph: Graph,
    pub rho: f64,
    /// `sqrt(ρ(H)² + ρ(K)²)`.
    pub bound: f64,
    /// Both factors are stars rooted at their centres.
    pub equality: bool,
}

pub fn coalescence_bound(h: &Graph, v: usize, k: &Graph, w: usize) -> Result<CoalescenceBound> {
    if !is_connected(h) || !is_connected(k) {
        return Err(Error::Disconnected);
    }
    let graph = coalesce(h, v, k, w)?;
    let bound = (rho(h)?.powi(2) + rho(k)?.powi(2)).sqrt();
    let rho = spectral_radius(&graph, DEFAULT_TOL)?.rho;
    Ok(CoalescenceBound {
        graph,
        rho,
        bound,
        equality: h.is_star_centered_at(v) && k.is_star_centered_at(w),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hong_tight_on_regular_graphs() {
        for n in 3..8 {
            let kn = Graph::complete(n).unwrap();
            let hb = hong_bound(&kn).unwrap();
            assert!(hb.tight);
            assert!((hb.value - (n as f64 - 1.0)).abs() < 1e-12);
            let c = hong_bound(&Graph::cycle(n).unwrap()).unwrap();
            assert!(c.tight);
            assert!((c.value - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hong_not_tight_on_pendant_bipartite() {
        let g = Graph::complete_bipartite(2, 9).unwrap().with_vertex(1).unwrap();
        let hb = hong_bound(&g).unwrap();
        assert!(!hb.tight);
        assert!(hb.value > rho(&g).unwrap() + 1e-6);
    }

    #[test]
    fn hong_rejects_isolated_vertex() {
        let g = Graph::complete(3).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert!(matches!(hong_bound(&g), Err(Error::OutsideHypothesis(_))));
    }

    #[test]
    fn star_coalescence_is_tight() {
        let cb = coalescence_bound(&Graph::star(3).unwrap(), 0, &Graph::star(5).unwrap(), 0).unwrap();
        assert_eq!(cb.graph.n(), 9);
        assert!(cb.graph.is_star_centered_at(0));
        assert!(cb.equality);
        assert!((cb.rho - 8f64.sqrt()).abs() < 1e-10);
        assert!((cb.bound - 8f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn triangle_and_edge_strict() {
        let cb = coalescence_bound(&Graph::complete(3).unwrap(), 0, &Graph::complete(2).unwrap(), 0).unwrap();
        assert_eq!((cb.graph.n(), cb.graph.m()), (4, 4));
        assert!(!cb.equality);
        assert!(cb.rho < 5f64.sqrt() - 1e-6);
    }

    #[test]
    fn stanley_examples() {
        assert!((stanley_bound(3) - 2.0).abs() < 1e-12);
        assert!((stanley_bound(6) - 3.0).abs() < 1e-12);
    }
}
