use super::{adjacency_char_poly, compare_largest_roots, spectral_radius, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::{InternalPath, Graph};
use serde::Serialize;
use std::cmp::Ordering;

/// Gap below which a strict comparison of two radii falls back to the exact test.
pub const STRICT_MARGIN: f64 = 1e-9;
/// Coordinates closer than this count as equal in the unimodality check.
const COORD_EQ: f64 = 1e-9;

/// Moves the edges `v·x`, `x ∈ moved`, over to `u`.
pub fn edge_switch(g: &Graph, u: usize, v: usize, moved: &[usize]) -> Result<Graph> {
    let n = g.n();
    for &x in [u, v].iter().chain(moved) {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::InvalidArgument(format!("u and v are both vertex {u}")));
    }
    if moved.is_empty() {
        return Err(Error::InvalidArgument("no edges to move".into()));
    }
    let mut out = g.clone();
    for &x in moved {
        if x == u {
            return Err(Error::InvalidArgument(format!("vertex {x} is u itself")));
        }
        if !g.has_edge(v, x) {
            return Err(Error::InvalidArgument(format!("vertex {x} is not a neighbour of v = {v}")));
        }
        if g.has_edge(u, x) {
            return Err(Error::InvalidArgument(format!("vertex {x} is already a neighbour of u = {u}")));
        }
        out = out.without_edge(v, x).with_edge(u, x)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Margin,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrictComparison {
    pub holds: bool,
    pub rho_larger: f64,
    pub rho_smaller: f64,
    pub decided_by: Decision,
}

/// Decides `ρ(larger) > ρ(smaller)`.
///
/// A gap above [`STRICT_MARGIN`] settles it numerically. Otherwise the largest
/// roots of the two characteristic polynomials are compared exactly, so ties
/// report `false`.
pub fn rho_strictly_greater(larger: &Graph, smaller: &Graph) -> Result<StrictComparison> {
    let a = spectral_radius(larger, DEFAULT_TOL)?.rho;
    let b = spectral_radius(smaller, DEFAULT_TOL)?.rho;
    let gap = a - b;
    if gap.abs() > STRICT_MARGIN {
        return Ok(StrictComparison {
            holds: gap > 0.0,
            rho_larger: a,
            rho_smaller: b,
            decided_by: Decision::Margin,
        });
    }
    let order = compare_largest_roots(&adjacency_char_poly(larger), &adjacency_char_poly(smaller))?;
    Ok(StrictComparison {
        holds: order == Ordering::Greater,
        rho_larger: a,
        rho_smaller: b,
        decided_by: Decision::Exact,
    })
}

/// Checks the Perron coordinates along an internal path against the
/// unimodal shape forced by `ρ > 2`.
///
/// Oriented so that `x_k ≥ x_0`. Equal ends give a symmetric valley. Otherwise the
/// coordinates either rise strictly after `x_0 ≤ x_1`, or fall strictly to a
/// single bottom (possibly a flat pair) and then rise strictly, with
/// `x_{k−i} > x_i` on the first half.
pub fn internal_path_unimodality(g: &Graph, p: &InternalPath) -> Result<bool> {
    let vs = &p.vertices;
    if vs.len() < 3 {
        return Err(Error::InvalidArgument("path has no interior vertex".into()));
    }
    for w in vs.windows(2) {
        if w[0] >= g.n() || w[1] >= g.n() || !g.has_edge(w[0], w[1]) {
            return Err(Error::InvalidArgument(format!("{} and {} are not adjacent", w[0], w[1])));
        }
    }
    if let Some(&bad) = vs[1..vs.len() - 1].iter().find(|&&v| g.degree(v) != 2) {
        return Err(Error::InvalidArgument(format!("interior vertex {bad} does not have degree 2")));
    }
    let est = spectral_radius(g, DEFAULT_TOL)?;
    if est.rho <= 2.0 + STRICT_MARGIN {
        return Err(Error::OutsideHypothesis(format!("ρ = {} is not above 2", est.rho)));
    }
    let mut x: Vec<f64> = vs.iter().map(|&v| est.perron[v]).collect();
    if x[0] > x[x.len() - 1] {
        x.reverse();
    }
    Ok(unimodal(&x))
}

fn eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= COORD_EQ
}

fn strictly_increasing(x: &[f64]) -> bool {
    x.windows(2).all(|w| w[0] < w[1] && !eq(w[0], w[1]))
}

fn unimodal(x: &[f64]) -> bool {
    let k = x.len() - 1;
    if eq(x[0], x[k]) {
        let symmetric = (0..=k).all(|i| eq(x[i], x[k - i]));
        let half = &x[..=k / 2];
        let falling = half.windows(2).all(|w| w[0] > w[1] && !eq(w[0], w[1]));
        return symmetric && falling;
    }
    if x[0] <= x[1] || eq(x[0], x[1]) {
        return strictly_increasing(&x[1..]);
    }
    let mirrored = (1..k.div_ceil(2)).all(|i| x[k - i] > x[i] && !eq(x[k - i], x[i]));
    let mut j = 0;
    while j < k && x[j] > x[j + 1] && !eq(x[j], x[j + 1]) {
        j += 1;
    }
    let rest = if j < k && eq(x[j], x[j + 1]) { &x[j + 1..] } else { &x[j..] };
    mirrored && strictly_increasing(rest)
}
