//! Spectral radius, Perron vectors and the spectral tools built on them.

mod bounds;
mod equitable;
pub mod poly;
mod switching;

pub use bounds::{coalesce, coalescence_bound, hong_bound, stanley_bound, CoalescenceBound, HongBound};
pub use equitable::{verify_equitable, EquitablePartition};
pub use poly::{adjacency_char_poly, char_poly, compare_largest_roots, count_real_roots, largest_real_root, IntMatrix, IntPolynomial};
pub use switching::{edge_switch, internal_path_unimodality, rho_strictly_greater, Decision, StrictComparison, STRICT_MARGIN};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use serde::Serialize;

/// Residual tolerance used when callers do not supply one.
pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralEstimate {
    pub rho: f64,
    /// Eigenvector for `rho`, scaled so its largest entry is exactly 1.
    pub perron: Vec<f64>,
    /// `‖A x − ρ x‖∞` for the returned vector.
    pub residual: f64,
    pub iterations: usize,
}

/// Power iteration on `A + I` from the all-ones vector.
///
/// The unit shift makes the iteration converge on bipartite graphs, where
/// `-ρ` is also an eigenvalue of `A`. Converged once the residual drops to
/// `tol · max(1, ρ)`. The estimate is the Rayleigh quotient of the iterate.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralEstimate> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.n();
    if g.m() == 0 {
        return Ok(SpectralEstimate {
            rho: 0.0,
            perron: vec![1.0; n],
            residual: 0.0,
            iterations: 0,
        });
    }
    let rows = g.rows();
    let mut x = vec![1.0f64; n];
    let mut ax = vec![0.0f64; n];
    let mut rho = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        for v in 0..n {
            ax[v] = bits(rows[v]).map(|u| x[u]).sum();
        }
        let num: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        rho = num / den;
        residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, ai)| (ai - rho * xi).abs())
            .fold(0.0, f64::max);
        if residual <= tol * rho.max(1.0) {
            return Ok(SpectralEstimate {
                rho,
                perron: x,
                residual,
                iterations: it,
            });
        }
        let mut norm = 0.0f64;
        for v in 0..n {
            x[v] += ax[v];
            norm = norm.max(x[v].abs());
        }
        for xi in &mut x {
            *xi /= norm;
        }
    }
    Err(Error::NotConverged {
        rho,
        residual,
        iterations: MAX_ITERATIONS,
    })
}

/// `ρ(G)` at the default tolerance.
pub fn rho(g: &Graph) -> Result<f64> {
    spectral_radius(g, DEFAULT_TOL).map(|e| e.rho)
}
