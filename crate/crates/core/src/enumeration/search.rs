use super::canon::canonical_form;
use crate::connectivity::is_minimally_kl_edge_connected;
use crate::constructions::{order_threshold, size_threshold, FamilySpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, Graph6};
use crate::spectral::{spectral_radius, DEFAULT_TOL};
use rayon::prelude::*;
use serde::Serialize;

/// Graphs whose `ρ` is within this of the maximum are all reported.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "by", rename_all = "snake_case")]
pub enum SearchPoint {
    Order { n: usize },
    Size { m: usize },
}

impl SearchPoint {
    /// The construction proved extremal at this point, when its parameters
    /// are feasible.
    pub fn construction(&self, k: usize) -> Option<FamilySpec> {
        let spec = match *self {
            SearchPoint::Order { n } => FamilySpec::PendantBipartite { k, n },
            SearchPoint::Size { m } if m >= k && (m - k).is_multiple_of(2) => FamilySpec::EvenExtremal { k, m },
            SearchPoint::Size { m } => FamilySpec::TriangleCoalescence { k, m },
        };
        spec.validate().ok().map(|_| spec)
    }

    pub fn threshold_met(&self, k: usize) -> bool {
        match *self {
            SearchPoint::Order { n } => n >= order_threshold(k),
            SearchPoint::Size { m } => m >= size_threshold(k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalResult {
    pub k: usize,
    pub point: SearchPoint,
    /// Graphs that passed the minimality filter.
    pub candidate_count: usize,
    /// Canonical graph6 of every candidate within [`TIE_TOL`] of the maximum, sorted.
    pub argmax: Vec<String>,
    pub rho_max: Option<f64>,
    /// Tag of the proved-extremal construction when it is among the argmax.
    pub matched_construction: Option<String>,
    pub threshold_met: bool,
}

/// Filters `graphs` to the minimally `(k,k)`-edge-connected ones and
/// reports those of largest spectral radius.
pub fn extremal_search(graphs: &[Graph], k: usize, point: SearchPoint) -> Result<ExtremalResult> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    let scored: Vec<(f64, &Graph)> = graphs
        .par_iter()
        .map(|g| -> Result<Option<(f64, &Graph)>> {
            if !plausible(g, k) || !is_minimally_kl_edge_connected(g, k, k)? {
                return Ok(None);
            }
            Ok(Some((spectral_radius(g, DEFAULT_TOL)?.rho, g)))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;

    let rho_max = scored.iter().map(|&(r, _)| r).fold(None, |acc: Option<f64>, r| Some(acc.map_or(r, |a| a.max(r))));
    let mut argmax_graphs: Vec<Graph> = match rho_max {
        Some(top) => scored.iter().filter(|(r, _)| top - r <= TIE_TOL).map(|(_, g)| canonical_form(g)).collect(),
        None => Vec::new(),
    };
    argmax_graphs.sort_by_cached_key(|g| g.to_graph6());
    argmax_graphs.dedup();

    let matched_construction = match point.construction(k) {
        Some(spec) => {
            let target = canonical_form(&spec.build()?);
            argmax_graphs.contains(&target).then(|| spec.tag().to_string())
        }
        None => None,
    };
    Ok(ExtremalResult {
        k,
        point,
        candidate_count: scored.len(),
        argmax: argmax_graphs.iter().map(|g| g.to_graph6()).collect(),
        rho_max,
        matched_construction,
        threshold_met: point.threshold_met(k),
    })
}

/// Cheap necessary condition for minimal `(k,k)`-edge-connectivity on a
/// connected graph: at `k = 2` there can be no vertex of degree 1, since it
/// alone would split off with one crossing edge.
fn plausible(g: &Graph, k: usize) -> bool {
    g.n() >= k && (k != 2 || g.min_degree() >= 2)
}

/// Graphs on `core_order + 1` vertices formed by hanging one pendant vertex
/// off a minimally `(k−1,k−1)`-edge-connected connected graph, up to
/// isomorphism. Pendant removal preserves minimality one level down, so every
/// minimally `(k,k)`-edge-connected graph with a pendant vertex arises here.
pub fn pendant_extensions(core_order: usize, k: usize) -> Result<Vec<Graph>> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("k must be at least 3, got {k}")));
    }
    let cores = super::enumerate_connected_by_order(core_order)?;
    let mut out: Vec<Graph> = cores
        .par_iter()
        .map(|c| -> Result<Vec<Graph>> {
            if !is_minimally_kl_edge_connected(c, k - 1, k - 1)? {
                return Ok(Vec::new());
            }
            (0..c.n()).map(|v| Ok(canonical_form(&c.with_vertex(1 << v)?))).collect()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.par_sort_unstable();
    out.dedup();
    Ok(out)
}
