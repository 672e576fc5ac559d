//! Parametric builders for the extremal families, with their equitable
//! partitions, quotient matrices and closed-form spectral radii.
//!
//! Every family is a single hub (vertex 0) carrying some of: pendant
//! vertices, triangles, a `K_{2,t}` wing through one of its degree-`t`
//! vertices, and a `K_{2,t+1}` wing through one of its degree-2 vertices.
//! Labels follow a fixed order: hub, pendants, the `K_{2,t}` wing (its other
//! degree-`t` vertex first), the `K_{2,t+1}` wing (its two degree-`(t+1)`
//! vertices first), then triangles as consecutive pairs.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::spectral::{largest_real_root, IntMatrix, IntPolynomial, DEFAULT_TOL};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// One member of an extremal family, identified by tag and parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `K_{1,k−2}` glued at its centre to a degree-`(n−k)` vertex of `K_{2,n−k}`.
    PendantBipartite { k: usize, n: usize },
    /// The size-extremal graph for `m − k` even: `K_{1,k−2}` glued to `K_{2,(m−k+2)/2}`.
    EvenExtremal { k: usize, m: usize },
    /// The size-extremal graph for `m − k` odd: the even shape on `(m−k−1)/2` plus a triangle at the hub.
    TriangleCoalescence { k: usize, m: usize },
    /// Hub with `t1` triangles, a `K_{2,t2}` wing, a `K_{2,t3+1}` wing and `k−2` pendants.
    K1Family { k: usize, t1: usize, t2: usize, t3: usize },
    /// As [`FamilySpec::K1Family`] with `k−3` pendants.
    K2Family { k: usize, t1: usize, t2: usize, t3: usize },
    /// Hub with `t1` triangles, a `K_{2,t2}` wing and `k−2` pendants.
    KFamily { k: usize, t1: usize, t2: usize },
    /// Same shape as [`FamilySpec::KFamily`], parametrised by size.
    FFamily { k: usize, t1: usize, t2: usize },
    /// Friendship graph on `(m−k+3)/3` triangles with `k−3` pendants at its centre.
    FriendComposite { k: usize, m: usize },
}

/// Size threshold above which the size-extremal statements are proved.
pub fn size_threshold(k: usize) -> usize {
    (432 * k).pow(2)
}

/// Order threshold above which the order-extremal statements are proved.
pub fn order_threshold(k: usize) -> usize {
    4 * k
}

fn infeasible(msg: impl Into<String>) -> Error {
    Error::Infeasible(msg.into())
}

fn wing_ok(t: usize, what: &str) -> Result<()> {
    if t == 1 {
        return Err(infeasible(format!("{what} must be 0 or at least 2, got 1")));
    }
    Ok(())
}

/// Component counts of the hub-and-wings shape shared by all families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Shape {
    pendants: usize,
    triangles: usize,
    /// Degree-`t` side of the `K_{2,t}` wing; 0 when absent.
    wing: usize,
    /// `t3` of the `K_{2,t3+1}` wing; 0 when absent.
    wing2: usize,
}

impl Shape {
    fn order(&self) -> usize {
        let wing = if self.wing > 0 { self.wing + 1 } else { 0 };
        let wing2 = if self.wing2 > 0 { self.wing2 + 2 } else { 0 };
        1 + self.pendants + 2 * self.triangles + wing + wing2
    }

    fn size(&self) -> usize {
        self.pendants + 3 * self.triangles + 2 * self.wing + if self.wing2 > 0 { 2 * self.wing2 + 2 } else { 0 }
    }
}

/// Vertex classes of a realised shape, as masks. Empty classes are 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Layout {
    pub hub: u64,
    pub pendants: u64,
    /// The second degree-`t` vertex of the `K_{2,t}` wing.
    pub wing_apex: u64,
    pub wing_side: u64,
    /// The two degree-`(t3+1)` vertices of the `K_{2,t3+1}` wing.
    pub wing2_apex: u64,
    pub wing2_side: u64,
    pub triangles: u64,
}

fn range_mask(start: usize, len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        (u64::MAX >> (64 - len)) << start
    }
}

fn realise(s: Shape) -> Result<(Graph, Layout)> {
    let n = s.order();
    if n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let mut edges = Vec::with_capacity(s.size());
    let mut next = 1;
    let pendants = range_mask(next, s.pendants);
    for p in next..next + s.pendants {
        edges.push((0, p));
    }
    next += s.pendants;

    let (mut wing_apex, mut wing_side) = (0, 0);
    if s.wing > 0 {
        let w = next;
        wing_apex = 1 << w;
        wing_side = range_mask(w + 1, s.wing);
        for x in w + 1..=w + s.wing {
            edges.push((0, x));
            edges.push((w, x));
        }
        next += s.wing + 1;
    }

    let (mut wing2_apex, mut wing2_side) = (0, 0);
    if s.wing2 > 0 {
        let (a, b) = (next, next + 1);
        wing2_apex = range_mask(a, 2);
        wing2_side = range_mask(a + 2, s.wing2);
        edges.push((0, a));
        edges.push((0, b));
        for x in a + 2..a + 2 + s.wing2 {
            edges.push((a, x));
            edges.push((b, x));
        }
        next += s.wing2 + 2;
    }

    let triangles = range_mask(next, 2 * s.triangles);
    for i in 0..s.triangles {
        let (a, b) = (next + 2 * i, next + 2 * i + 1);
        edges.extend([(0, a), (0, b), (a, b)]);
    }

    let g = Graph::from_edge_list(n, &edges)?;
    debug_assert_eq!(g.m(), s.size());
    Ok((
        g,
        Layout {
            hub: 1,
            pendants,
            wing_apex,
            wing_side,
            wing2_apex,
            wing2_side,
            triangles,
        },
    ))
}

/// A closed-form or polynomial-root value of `ρ` together with whether the
/// parameters meet the hypothesis under which it is proved.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaValue {
    pub value: f64,
    pub within_hypothesis: bool,
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::PendantBipartite { .. } => "pendant_bipartite",
            FamilySpec::EvenExtremal { .. } => "even_extremal",
            FamilySpec::TriangleCoalescence { .. } => "triangle_coalescence",
            FamilySpec::K1Family { .. } => "k1_family",
            FamilySpec::K2Family { .. } => "k2_family",
            FamilySpec::KFamily { .. } => "k_family",
            FamilySpec::FFamily { .. } => "f_family",
            FamilySpec::FriendComposite { .. } => "friend_composite",
        }
    }

    pub fn k(&self) -> usize {
        match *self {
            FamilySpec::PendantBipartite { k, .. }
            | FamilySpec::EvenExtremal { k, .. }
            | FamilySpec::TriangleCoalescence { k, .. }
            | FamilySpec::K1Family { k, .. }
            | FamilySpec::K2Family { k, .. }
            | FamilySpec::KFamily { k, .. }
            | FamilySpec::FFamily { k, .. }
            | FamilySpec::FriendComposite { k, .. } => k,
        }
    }

    pub fn params(&self) -> BTreeMap<&'static str, usize> {
        let pairs: Vec<(&'static str, usize)> = match *self {
            FamilySpec::PendantBipartite { k, n } => vec![("k", k), ("n", n)],
            FamilySpec::EvenExtremal { k, m }
            | FamilySpec::TriangleCoalescence { k, m }
            | FamilySpec::FriendComposite { k, m } => vec![("k", k), ("m", m)],
            FamilySpec::K1Family { k, t1, t2, t3 } | FamilySpec::K2Family { k, t1, t2, t3 } => {
                vec![("k", k), ("t1", t1), ("t2", t2), ("t3", t3)]
            }
            FamilySpec::KFamily { k, t1, t2 } | FamilySpec::FFamily { k, t1, t2 } => {
                vec![("k", k), ("t1", t1), ("t2", t2)]
            }
        };
        pairs.into_iter().collect()
    }

    fn shape(&self) -> Result<Shape> {
        match *self {
            FamilySpec::PendantBipartite { k, n } => {
                if k < 2 {
                    return Err(infeasible(format!("k must be at least 2, got {k}")));
                }
                if n < k + 2 {
                    return Err(infeasible(format!("n − k must be at least 2, got n = {n}, k = {k}")));
                }
                Ok(Shape { pendants: k - 2, triangles: 0, wing: n - k, wing2: 0 })
            }
            FamilySpec::EvenExtremal { k, m } => {
                if k < 2 {
                    return Err(infeasible(format!("k must be at least 2, got {k}")));
                }
                if m < k || (m - k) % 2 != 0 {
                    return Err(infeasible(format!("m − k must be even and nonnegative, got m = {m}, k = {k}")));
                }
                let t = (m - k + 2) / 2;
                if t < 2 {
                    return Err(infeasible(format!("(m − k + 2)/2 must be at least 2, got {t}")));
                }
                Ok(Shape { pendants: k - 2, triangles: 0, wing: t, wing2: 0 })
            }
            FamilySpec::TriangleCoalescence { k, m } => {
                if k < 2 {
                    return Err(infeasible(format!("k must be at least 2, got {k}")));
                }
                if m < k + 1 || (m - k) % 2 != 1 {
                    return Err(infeasible(format!("m − k must be odd and positive, got m = {m}, k = {k}")));
                }
                let t = (m - k - 1) / 2;
                if t < 2 {
                    return Err(infeasible(format!("(m − k − 1)/2 must be at least 2, got {t}")));
                }
                Ok(Shape { pendants: k - 2, triangles: 1, wing: t, wing2: 0 })
            }
            FamilySpec::K1Family { k, t1, t2, t3 } => {
                if k < 2 {
                    return Err(infeasible(format!("k must be at least 2, got {k}")));
                }
                wing_ok(t2, "t2")?;
                Ok(Shape { pendants: k - 2, triangles: t1, wing: t2, wing2: t3 })
            }
            FamilySpec::K2Family { k, t1, t2, t3 } => {
                if k < 3 {
                    return Err(infeasible(format!("k must be at least 3, got {k}")));
                }
                wing_ok(t2, "t2")?;
                Ok(Shape { pendants: k - 3, triangles: t1, wing: t2, wing2: t3 })
            }
            FamilySpec::KFamily { k, t1, t2 } | FamilySpec::FFamily { k, t1, t2 } => {
                if k < 2 {
                    return Err(infeasible(format!("k must be at least 2, got {k}")));
                }
                wing_ok(t2, "t2")?;
                Ok(Shape { pendants: k - 2, triangles: t1, wing: t2, wing2: 0 })
            }
            FamilySpec::FriendComposite { k, m } => {
                if k < 3 {
                    return Err(infeasible(format!("k must be at least 3, got {k}")));
                }
                if m + 3 < k || (m + 3 - k) % 3 != 0 {
                    return Err(infeasible(format!("(m − k + 3)/3 is not a nonnegative integer for m = {m}, k = {k}")));
                }
                Ok(Shape { pendants: k - 3, triangles: (m + 3 - k) / 3, wing: 0, wing2: 0 })
            }
        }
    }

    /// Validates the parameters without building anything.
    pub fn validate(&self) -> Result<()> {
        self.shape().map(|_| ())
    }

    pub fn order(&self) -> Result<usize> {
        self.shape().map(|s| s.order())
    }

    pub fn size(&self) -> Result<usize> {
        self.shape().map(|s| s.size())
    }

    pub fn build(&self) -> Result<Graph> {
        realise(self.shape()?).map(|(g, _)| g)
    }

    pub fn build_with_layout(&self) -> Result<(Graph, Layout)> {
        realise(self.shape()?)
    }

    /// A partition into vertex classes that is equitable for every member of
    /// the family. Empty classes are omitted.
    pub fn partition(&self) -> Result<Vec<u64>> {
        let (_, l) = self.build_with_layout()?;
        Ok([l.hub, l.wing_apex, l.wing_side, l.wing2_apex, l.wing2_side, l.pendants, l.triangles]
            .into_iter()
            .filter(|&p| p != 0)
            .collect())
    }

    /// The partition and quotient matrix from the closed-form derivation, in
    /// its part order. Parts may be empty (for instance no pendants when
    /// `k = 2`); the matrix still has a row and column for them.
    /// `None` for members without such a derivation.
    pub fn formula_quotient(&self) -> Result<Option<(Vec<u64>, IntMatrix)>> {
        let (_, l) = self.build_with_layout()?;
        let k = self.k() as i64;
        let (parts, rows): (Vec<u64>, Vec<Vec<i64>>) = match *self {
            FamilySpec::PendantBipartite { n, .. } => {
                let n = n as i64;
                (
                    vec![l.hub, l.wing_apex, l.pendants, l.wing_side],
                    vec![vec![0, 0, k - 2, n - k], vec![0, 0, 0, n - k], vec![1, 0, 0, 0], vec![1, 1, 0, 0]],
                )
            }
            FamilySpec::K1Family { t1, t2: 0, t3: 0, .. } => {
                let t = 2 * t1 as i64;
                (vec![l.hub, l.pendants, l.triangles], vec![vec![0, k - 2, t], vec![1, 0, 0], vec![1, 0, 1]])
            }
            FamilySpec::K2Family { t1, t2: 0, t3: 0, .. } => {
                let t = 2 * t1 as i64;
                (vec![l.hub, l.pendants, l.triangles], vec![vec![0, k - 3, t], vec![1, 0, 0], vec![1, 0, 1]])
            }
            FamilySpec::EvenExtremal { m, .. } => {
                let t = (m as i64 - k + 2) / 2;
                (
                    vec![l.hub, l.wing_apex, l.wing_side, l.pendants],
                    vec![vec![0, 0, t, k - 2], vec![0, 0, t, 0], vec![1, 1, 0, 0], vec![1, 0, 0, 0]],
                )
            }
            FamilySpec::TriangleCoalescence { m, .. } => {
                let t = (m as i64 - k - 1) / 2;
                (
                    vec![l.hub, l.wing_apex, l.wing_side, l.triangles, l.pendants],
                    vec![
                        vec![0, 0, t, 2, k - 2],
                        vec![0, 0, t, 0, 0],
                        vec![1, 1, 0, 0, 0],
                        vec![1, 0, 0, 1, 0],
                        vec![1, 0, 0, 0, 0],
                    ],
                )
            }
            FamilySpec::FriendComposite { m, .. } => {
                let t = 2 * (m as i64 - k + 3) / 3;
                (vec![l.hub, l.pendants, l.triangles], vec![vec![0, k - 3, t], vec![1, 0, 0], vec![1, 0, 1]])
            }
            _ => return Ok(None),
        };
        Ok(Some((parts, IntMatrix::from_rows(&rows)?)))
    }

    /// The characteristic polynomial of [`FamilySpec::formula_quotient`] as
    /// written in the closed-form derivation, expanded by hand.
    pub fn formula_polynomial(&self) -> Result<Option<IntPolynomial>> {
        self.validate()?;
        let k = self.k() as i64;
        let p = match *self {
            FamilySpec::PendantBipartite { n, .. } => Some(pendant_bipartite_quartic(k, n as i64)),
            FamilySpec::K1Family { t1, t2: 0, t3: 0, .. } => Some(ki_cubic(k, 2 * t1 as i64 + k - 1, 1)),
            FamilySpec::K2Family { t1, t2: 0, t3: 0, .. } => Some(ki_cubic(k, 2 * t1 as i64 + k - 2, 2)),
            FamilySpec::EvenExtremal { m, .. } => Some(even_quartic(k, m as i64)),
            FamilySpec::TriangleCoalescence { m, .. } => Some(odd_quintic(k, m as i64)),
            FamilySpec::FriendComposite { m, .. } => Some(friend_cubic(k, m as i64)),
            _ => None,
        };
        Ok(p)
    }

    /// `ρ` from the closed form or the largest root of the formula polynomial.
    pub fn rho_formula(&self) -> Result<Option<FormulaValue>> {
        self.validate()?;
        let v = match *self {
            FamilySpec::PendantBipartite { k, n } => Some(rho_pendant_bipartite(k, n)?),
            FamilySpec::K1Family { k, t1, t2: 0, t3: 0 } => Some(rho_ki_cubic(k, 2 * t1 + k - 1, 1)?),
            FamilySpec::K2Family { k, t1, t2: 0, t3: 0 } => Some(rho_ki_cubic(k, 2 * t1 + k - 2, 2)?),
            FamilySpec::EvenExtremal { k, m } => Some(rho_even_extremal(k, m)?),
            FamilySpec::TriangleCoalescence { k, m } => Some(rho_odd_extremal(k, m)?),
            FamilySpec::FriendComposite { k, m } => Some(rho_friend_cubic(k, m)?),
            _ => None,
        };
        Ok(v)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.tag())?;
        for (i, (name, v)) in self.params().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}={v}")?;
        }
        write!(f, ")")
    }
}

pub fn build_pendant_bipartite(k: usize, n: usize) -> Result<Graph> {
    FamilySpec::PendantBipartite { k, n }.build()
}

pub fn build_even_extremal(k: usize, m: usize) -> Result<Graph> {
    FamilySpec::EvenExtremal { k, m }.build()
}

pub fn build_odd_extremal(k: usize, m: usize) -> Result<Graph> {
    FamilySpec::TriangleCoalescence { k, m }.build()
}

pub fn build_k1(k: usize, t1: usize, t2: usize, t3: usize) -> Result<Graph> {
    FamilySpec::K1Family { k, t1, t2, t3 }.build()
}

pub fn build_k2(k: usize, t1: usize, t2: usize, t3: usize) -> Result<Graph> {
    FamilySpec::K2Family { k, t1, t2, t3 }.build()
}

pub fn build_k_family(k: usize, t1: usize, t2: usize) -> Result<Graph> {
    FamilySpec::KFamily { k, t1, t2 }.build()
}

pub fn build_f_family(k: usize, t1: usize, t2: usize) -> Result<Graph> {
    FamilySpec::FFamily { k, t1, t2 }.build()
}

pub fn build_friend_composite(k: usize, m: usize) -> Result<Graph> {
    FamilySpec::FriendComposite { k, m }.build()
}

/// `x⁴ + (k−2n+2)x² − k² + kn + 2k − 2n`.
pub fn pendant_bipartite_quartic(k: i64, n: i64) -> IntPolynomial {
    IntPolynomial::from_descending(&[1, 0, k - 2 * n + 2, 0, -k * k + k * n + 2 * k - 2 * n])
}

/// `x³ − x² + (1−n)x + k − (i+1)`.
pub fn ki_cubic(k: i64, n: i64, i: i64) -> IntPolynomial {
    IntPolynomial::from_descending(&[1, -1, 1 - n, k - (i + 1)])
}

/// `x⁴ − m x² + k(m−k)/2 − m + 2k − 2`, integral when `m − k` is even.
pub fn even_quartic(k: i64, m: i64) -> IntPolynomial {
    IntPolynomial::from_descending(&[1, 0, -m, 0, k * (m - k) / 2 - m + 2 * k - 2])
}

/// `x⁵ − x⁴ + (1−m)x³ + (m−3)x² + k(m−k−1)/2·x + m − 1 − k(m−k+1)/2`,
/// integral when `m − k` is odd.
pub fn odd_quintic(k: i64, m: i64) -> IntPolynomial {
    IntPolynomial::from_descending(&[1, -1, 1 - m, m - 3, k * (m - k - 1) / 2, m - 1 - k * (m - k + 1) / 2])
}

/// `x³ − x² + (1 − (2m+k)/3)x + k − 3`, integral when `m ≡ k (mod 3)`.
pub fn friend_cubic(k: i64, m: i64) -> IntPolynomial {
    IntPolynomial::from_descending(&[1, -1, 1 - (2 * m + k) / 3, k - 3])
}

/// `sqrt(4n − 2k − 4 + 2 sqrt(5k² − 8kn + 4n² − 4k + 4)) / 2`.
pub fn rho_pendant_bipartite(k: usize, n: usize) -> Result<FormulaValue> {
    FamilySpec::PendantBipartite { k, n }.validate()?;
    let (k, nf) = (k as f64, n as f64);
    let inner = 5.0 * k * k - 8.0 * k * nf + 4.0 * nf * nf - 4.0 * k + 4.0;
    let value = (4.0 * nf - 2.0 * k - 4.0 + 2.0 * inner.sqrt()).sqrt() / 2.0;
    Ok(FormulaValue {
        value,
        within_hypothesis: n >= order_threshold(k as usize),
    })
}

/// Largest root of [`ki_cubic`]. Proved for `k ≥ 3` and `n ≥ 4k`.
pub fn rho_ki_cubic(k: usize, n: usize, i: usize) -> Result<FormulaValue> {
    if !(i == 1 || i == 2) {
        return Err(Error::InvalidArgument(format!("i must be 1 or 2, got {i}")));
    }
    let value = largest_real_root(&ki_cubic(k as i64, n as i64, i as i64), DEFAULT_TOL)?;
    Ok(FormulaValue {
        value,
        within_hypothesis: k >= 3 && n >= order_threshold(k),
    })
}

/// `sqrt(2m + 2 sqrt(2k² − 2km + m² − 8k + 4m + 8)) / 2`.
pub fn rho_even_extremal(k: usize, m: usize) -> Result<FormulaValue> {
    FamilySpec::EvenExtremal { k, m }.validate()?;
    let (kf, mf) = (k as f64, m as f64);
    let inner = 2.0 * kf * kf - 2.0 * kf * mf + mf * mf - 8.0 * kf + 4.0 * mf + 8.0;
    Ok(FormulaValue {
        value: (2.0 * mf + 2.0 * inner.sqrt()).sqrt() / 2.0,
        within_hypothesis: m >= size_threshold(k),
    })
}

/// Largest root of [`odd_quintic`].
pub fn rho_odd_extremal(k: usize, m: usize) -> Result<FormulaValue> {
    FamilySpec::TriangleCoalescence { k, m }.validate()?;
    Ok(FormulaValue {
        value: largest_real_root(&odd_quintic(k as i64, m as i64), DEFAULT_TOL)?,
        within_hypothesis: m >= size_threshold(k),
    })
}

/// Largest root of [`friend_cubic`].
pub fn rho_friend_cubic(k: usize, m: usize) -> Result<FormulaValue> {
    FamilySpec::FriendComposite { k, m }.validate()?;
    Ok(FormulaValue {
        value: largest_real_root(&friend_cubic(k as i64, m as i64), DEFAULT_TOL)?,
        within_hypothesis: m >= size_threshold(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_minimally_kl_edge_connected;
    use crate::spectral::{char_poly, rho, verify_equitable};

    #[test]
    fn pendant_bipartite_examples() {
        let g = build_pendant_bipartite(2, 6).unwrap();
        assert_eq!(g, Graph::complete_bipartite(2, 4).unwrap());
        assert_eq!(g.m(), 8);
        let g = build_pendant_bipartite(3, 12).unwrap();
        assert_eq!((g.n(), g.m(), g.degree(0)), (12, 19, 10));
        assert!(matches!(build_pendant_bipartite(3, 4), Err(Error::Infeasible(_))));
    }

    #[test]
    fn pendant_bipartite_closed_form() {
        assert!((rho_pendant_bipartite(2, 6).unwrap().value - 8f64.sqrt()).abs() < 1e-12);
        assert!((rho_pendant_bipartite(2, 8).unwrap().value - 12f64.sqrt()).abs() < 1e-12);
        let v = rho_pendant_bipartite(3, 12).unwrap();
        assert!(v.within_hypothesis);
        assert!((v.value - 4.30278).abs() < 1e-5);
        assert!((v.value - rho(&build_pendant_bipartite(3, 12).unwrap()).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn k_family_examples() {
        for (k, n) in [(2, 7), (3, 12), (5, 20)] {
            assert_eq!(build_k_family(k, 0, n - k).unwrap(), build_pendant_bipartite(k, n).unwrap());
        }
        let g = build_k_family(3, 1, 4).unwrap();
        assert_eq!((g.n(), g.m()), (9, 12));
        assert!(build_k_family(3, 1, 1).is_err());
        assert!(build_k1(3, 1, 1, 0).is_err());
    }

    #[test]
    fn k1_counts() {
        for k in 2..6 {
            for t1 in 0..3 {
                for t2 in [0, 2, 3] {
                    for t3 in 1..4 {
                        let g = build_k1(k, t1, t2, t3).unwrap();
                        let wing = if t2 > 0 { t2 + 1 } else { 0 };
                        assert_eq!(g.n(), 2 * t1 + wing + t3 + k + 1);
                        if t2 >= 2 {
                            assert_eq!(g.n(), 2 * t1 + t2 + t3 + k + 2);
                        }
                        assert_eq!(g.degree(0), k - 2 + 2 * t1 + t2 + 2);
                    }
                }
            }
        }
        assert_eq!(build_k1(4, 2, 3, 0).unwrap(), build_k_family(4, 2, 3).unwrap());
    }

    #[test]
    fn k2_with_k3_has_no_pendants() {
        let g = build_k2(3, 4, 0, 0).unwrap();
        assert_eq!(g, build_friend_composite(3, 12).unwrap());
        assert!(build_k2(2, 1, 0, 0).is_err());
    }

    #[test]
    fn friend_examples() {
        let g = build_friend_composite(3, 9).unwrap();
        assert_eq!((g.n(), g.m(), g.degree(0)), (7, 9, 6));
        let g = build_friend_composite(4, 10).unwrap();
        assert_eq!((g.n(), g.m()), (8, 10));
        assert!(build_friend_composite(3, 10).is_err());
        assert_eq!(friend_cubic(3, 9), IntPolynomial::from_descending(&[1, -1, -6, 0]));
        let v = rho_friend_cubic(3, 9).unwrap();
        assert!((v.value - 3.0).abs() < 1e-12);
        assert!((rho(&build_friend_composite(3, 9).unwrap()).unwrap() - 3.0).abs() < 1e-10);
        assert!(rho_friend_cubic(3, 90).unwrap().value < 87f64.sqrt());
    }

    #[test]
    fn size_extremal_examples() {
        assert_eq!(build_even_extremal(2, 8).unwrap(), build_pendant_bipartite(2, 6).unwrap());
        assert_eq!(build_even_extremal(3, 11).unwrap().m(), 11);
        assert!(build_even_extremal(3, 10).is_err());
        let g = build_even_extremal(4, 12).unwrap();
        assert_eq!((g.n(), g.m()), (9, 12));
        let g = build_odd_extremal(2, 9).unwrap();
        assert_eq!((g.n(), g.m()), (7, 9));
        assert_eq!(build_odd_extremal(3, 10).unwrap().m(), 10);
        assert!(build_odd_extremal(2, 8).is_err());
        assert_eq!(build_f_family(2, 0, 4).unwrap(), build_even_extremal(2, 8).unwrap());
        assert_eq!(build_f_family(2, 1, 3).unwrap(), build_odd_extremal(2, 9).unwrap());
        assert_eq!(build_f_family(3, 2, 2).unwrap().m(), 11);
        assert!((rho_even_extremal(2, 8).unwrap().value - 8f64.sqrt()).abs() < 1e-12);
        for (k, m) in [(3, 15), (3, 16)] {
            let v = if (m - k) % 2 == 0 { rho_even_extremal(k, m) } else { rho_odd_extremal(k, m) };
            assert!(v.unwrap().value > ((m - k) as f64).sqrt());
        }
    }

    #[test]
    fn ki_cubic_below_pendant_bipartite() {
        let c = rho_ki_cubic(3, 12, 1).unwrap();
        assert!(c.within_hypothesis);
        assert_eq!(ki_cubic(3, 12, 1), IntPolynomial::from_descending(&[1, -1, -11, 1]));
        assert!(c.value < rho_pendant_bipartite(3, 12).unwrap().value);
        assert!(!rho_ki_cubic(2, 12, 1).unwrap().within_hypothesis);
    }

    fn specs() -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for k in 2..6 {
            for n in k + 2..k + 12 {
                out.push(FamilySpec::PendantBipartite { k, n });
            }
            for m in k + 2..k + 20 {
                out.push(FamilySpec::EvenExtremal { k, m });
                out.push(FamilySpec::TriangleCoalescence { k, m });
                out.push(FamilySpec::FriendComposite { k, m });
            }
            for t1 in 0..4 {
                out.push(FamilySpec::K1Family { k, t1, t2: 0, t3: 0 });
                out.push(FamilySpec::K2Family { k, t1, t2: 0, t3: 0 });
                for t2 in [0, 2, 4] {
                    out.push(FamilySpec::KFamily { k, t1, t2 });
                    for t3 in 0..3 {
                        out.push(FamilySpec::K1Family { k, t1, t2, t3 });
                    }
                }
            }
        }
        out.retain(|s| s.validate().is_ok() && s.order().unwrap() > 1);
        out
    }

    #[test]
    fn counts_and_natural_partition() {
        for s in specs() {
            let g = s.build().unwrap();
            assert_eq!((g.n(), g.m()), (s.order().unwrap(), s.size().unwrap()), "{s}");
            verify_equitable(&g, &s.partition().unwrap()).unwrap();
        }
    }

    #[test]
    fn formula_matrices_and_polynomials_agree() {
        let mut checked = 0;
        for s in specs() {
            let Some((parts, matrix)) = s.formula_quotient().unwrap() else { continue };
            let g = s.build().unwrap();
            let empty: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] == 0).collect();
            let kept: Vec<u64> = parts.iter().copied().filter(|&p| p != 0).collect();
            let ep = verify_equitable(&g, &kept).unwrap();
            assert_eq!(ep.quotient, matrix.without_indices(&empty), "{s}");
            assert_eq!(char_poly(&matrix), s.formula_polynomial().unwrap().unwrap(), "{s}");
            let f = s.rho_formula().unwrap().unwrap();
            assert!((f.value - rho(&g).unwrap()).abs() < 1e-9, "{s}");
            checked += 1;
        }
        assert!(checked > 100);
    }

    #[test]
    fn equality_graphs_are_minimal() {
        for k in 2..5 {
            for n in k + 2..k + 6 {
                let g = build_pendant_bipartite(k, n).unwrap();
                assert!(is_minimally_kl_edge_connected(&g, k, k).unwrap(), "k={k} n={n}");
            }
            for m in k + 4..k + 10 {
                let g = if (m - k) % 2 == 0 { build_even_extremal(k, m) } else { build_odd_extremal(k, m) };
                let g = g.unwrap();
                assert!(is_minimally_kl_edge_connected(&g, k, k).unwrap(), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn display_and_serde() {
        let s = FamilySpec::KFamily { k: 3, t1: 1, t2: 4 };
        assert_eq!(s.to_string(), "k_family(k=3, t1=1, t2=4)");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"family":"k_family","k":3,"t1":1,"t2":4}"#);
        assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), s);
    }
}
