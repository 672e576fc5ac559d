//! Exact integer polynomials and matrices.
//!
//! Characteristic polynomials come from the Faddeev–LeVerrier recurrence in
//! big-integer arithmetic (every division in it is exact for integer input).
//! Real roots are located with a Sturm sequence evaluated exactly at dyadic
//! points, so bisection never depends on floating-point sign tests.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Square matrix with exact integer entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Ok(IntMatrix {
            n,
            data: rows.concat(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(<[i64]>::to_vec).collect()
    }

    /// Removes the listed rows and the matching columns.
    pub fn without_indices(&self, drop: &[usize]) -> IntMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|i| !drop.contains(i)).collect();
        let mut out = IntMatrix::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }
}

/// Univariate polynomial with big-integer coefficients, constant term first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    /// Coefficients in ascending order of degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients from the leading term down.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        let mut v: Vec<i64> = coeffs.to_vec();
        v.reverse();
        IntPolynomial::from_i64(&v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact sign of `p(num / 2^shift)`.
    pub fn sign_at_dyadic(&self, num: &BigInt, shift: u32) -> Ordering {
        let d = self.degree();
        let mut acc = BigInt::zero();
        // Horner on 2^(s d) p(num / 2^s) = sum c_i num^i 2^(s (d - i))
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * num + (c << (shift as usize * (d - i)));
        }
        acc.sign_ordering()
    }

    /// Exact sign of `p(x)` at the binary value of the float `x`.
    pub fn sign_at_f64(&self, x: f64) -> Ordering {
        let (num, shift) = dyadic(x);
        self.sign_at_dyadic(&num, shift)
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.degree() == 0 {
            return IntPolynomial::from_i64(&[0]);
        }
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Division by a monic polynomial; both quotient and remainder are integral.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        if !divisor.leading().is_one() {
            return Err(Error::InvalidArgument("divisor must be monic".into()));
        }
        let dd = divisor.degree();
        if self.degree() < dd {
            return Ok((IntPolynomial::from_i64(&[0]), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd.max(1));
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }

    /// True when `divisor` (monic) divides `self` exactly.
    pub fn divisible_by(&self, divisor: &IntPolynomial) -> Result<bool> {
        Ok(self.div_rem_monic(divisor)?.1.is_zero())
    }

    fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Cauchy bound `1 + max |a_i / a_d|`, rounded up to an integer.
    pub fn cauchy_bound(&self) -> BigInt {
        let lead = self.leading().abs();
        let max = self.coeffs[..self.degree()]
            .iter()
            .map(|c| {
                let (q, r) = c.abs().div_rem(&lead);
                if r.is_zero() {
                    q
                } else {
                    q + 1
                }
            })
            .max()
            .unwrap_or_else(BigInt::zero);
        max + 1
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Exact dyadic representation `x = num / 2^shift` of a finite float.
pub(crate) fn dyadic(x: f64) -> (BigInt, u32) {
    assert!(x.is_finite(), "non-finite value {x}");
    if x == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, e) = if exp == 0 {
        (frac, -1074)
    } else {
        (frac | 1u64 << 52, exp - 1075)
    };
    let num = BigInt::from(mant) * sign;
    if e >= 0 {
        (num << e as usize, 0)
    } else {
        (num, (-e) as u32)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    /// Ascending coefficient list; values outside `i64` are emitted as strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// `det(xI - M)` by the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.size();
    let a: Vec<Vec<BigInt>> = m
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    // coeffs[n - k] = c_{n-k}
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mat_mul(&a, &mk);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = q;
    }
    IntPolynomial::new(coeffs)
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Adjacency characteristic polynomial of a graph, computed exactly.
pub fn adjacency_char_poly(g: &crate::graph::Graph) -> IntPolynomial {
    let n = g.n();
    let mut m = IntMatrix::zeros(n);
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    char_poly(&m)
}

#[derive(Clone, Debug)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        if c.is_empty() {
            c.push(BigRational::zero());
        }
        RatPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_zero()
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree();
        if self.degree() < dd {
            return (RatPoly::new(vec![]), self.clone());
        }
        let lead = d.0[dd].clone();
        let mut rem = self.0.clone();
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd.max(1));
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Scales by a positive rational so all coefficients are integers.
    fn to_int_positive(&self) -> IntPolynomial {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPolynomial::new(
            self.0
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }
}

/// Sturm chain of the square-free part of a polynomial, each member scaled
/// to integer coefficients by a positive factor.
struct SturmChain(Vec<IntPolynomial>);

impl SturmChain {
    fn new(p: &IntPolynomial) -> Self {
        let rp = p.to_rat();
        let g = rp.gcd(&rp.derivative());
        let sqfree = if g.degree() == 0 { rp } else { rp.div_rem(&g).0 };
        let mut chain = vec![sqfree.clone(), sqfree.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        SturmChain(chain.iter().map(RatPoly::to_int_positive).collect())
    }

    fn variations(&self, num: &BigInt, shift: u32) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.0 {
            let s = p.sign_at_dyadic(num, shift);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn first(&self) -> &IntPolynomial {
        &self.0[0]
    }
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
pub fn count_real_roots(p: &IntPolynomial, a: f64, b: f64) -> usize {
    let chain = SturmChain::new(p);
    let (na, sa) = dyadic(a);
    let (nb, sb) = dyadic(b);
    chain.variations(&na, sa).saturating_sub(chain.variations(&nb, sb))
}

/// The largest real root of `p`, located to within `tol` by Sturm-guided
/// bisection on the Cauchy bracket `[-B, B]`.
pub fn largest_real_root(p: &IntPolynomial, tol: f64) -> Result<f64> {
    if p.degree() == 0 {
        return Err(Error::NoRealRoot);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let chain = SturmChain::new(p);
    // Work on the grid num / 2^shift with a shift fine enough for tol.
    let shift = ((1.0 / tol).log2().ceil().max(0.0) as u32) + 2;
    let bound = p.cauchy_bound() << shift as usize;
    let mut lo = -bound.clone();
    let mut hi = bound;
    let v_hi = chain.variations(&hi, shift);
    if chain.variations(&lo, shift) <= v_hi {
        return Err(Error::NoRealRoot);
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1usize;
        if chain.variations(&mid, shift) > v_hi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // The root lies in (lo, hi]; hi is exact when it is a root.
    let scale = (shift as f64).exp2();
    if chain.first().sign_at_dyadic(&hi, shift) == Ordering::Equal {
        return Ok(hi.to_f64().unwrap() / scale);
    }
    Ok(((lo.to_f64().unwrap() + hi.to_f64().unwrap()) / 2.0) / scale)
}

/// Dyadic `lo` with the largest root of `chain` in `(lo, lo + 1] / 2^shift`.
fn largest_root_bracket(chain: &SturmChain, bound: &BigInt, shift: u32) -> Result<BigInt> {
    let mut hi = bound << shift as usize;
    let mut lo = -hi.clone();
    let v_hi = chain.variations(&hi, shift);
    if chain.variations(&lo, shift) <= v_hi {
        return Err(Error::NoRealRoot);
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1usize;
        if chain.variations(&mid, shift) > v_hi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Exact comparison of the largest real roots of `p` and `q`.
///
/// Equal roots are detected through `gcd(p, q)`: a common root above both
/// brackets can only be the largest root of each. Distinct roots are
/// separated by refining the brackets.
pub fn compare_largest_roots(p: &IntPolynomial, q: &IntPolynomial) -> Result<Ordering> {
    if p.degree() == 0 || q.degree() == 0 {
        return Err(Error::NoRealRoot);
    }
    let (cp, cq) = (SturmChain::new(p), SturmChain::new(q));
    let common = p.to_rat().gcd(&q.to_rat());
    let common = (common.degree() > 0).then(|| SturmChain::new(&common.to_int_positive()));
    let bound = p.cauchy_bound().max(q.cauchy_bound());
    let mut shift = 4;
    loop {
        let lp = largest_root_bracket(&cp, &bound, shift)?;
        let lq = largest_root_bracket(&cq, &bound, shift)?;
        if let Some(c) = &common {
            let lo = (&lp).max(&lq);
            let top = &bound << shift as usize;
            if c.variations(lo, shift) > c.variations(&top, shift) {
                return Ok(Ordering::Equal);
            }
        }
        // Disjoint half-open brackets order the roots.
        if lp != lq {
            return Ok(lp.cmp(&lq));
        }
        shift += 16;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det_leibniz(m: &IntMatrix, x: i64) -> i64 {
        // det(xI - M) by permutation expansion
        let n = m.size();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0i64;
        permute(&mut perm, 0, &mut |p| {
            let mut sign = 1i64;
            let mut seen = vec![false; n];
            for s in 0..n {
                if seen[s] {
                    continue;
                }
                let mut len = 0;
                let mut c = s;
                while !seen[c] {
                    seen[c] = true;
                    c = p[c];
                    len += 1;
                }
                if len % 2 == 0 {
                    sign = -sign;
                }
            }
            let mut prod = sign;
            for i in 0..n {
                let e = if i == p[i] { x - m.get(i, i) } else { -m.get(i, p[i]) };
                prod *= e;
            }
            total += prod;
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn identity_char_poly() {
        let p = char_poly(&IntMatrix::identity(2));
        assert_eq!(p, IntPolynomial::from_descending(&[1, -2, 1]));
        assert_eq!(p.to_string(), "x^2 - 2x + 1");
    }

    #[test]
    fn char_poly_matches_permutation_expansion() {
        let m = IntMatrix::from_rows(&[
            vec![0, 0, 3, 7],
            vec![0, 0, 0, 7],
            vec![1, 0, 0, 0],
            vec![1, 1, 0, 0],
        ])
        .unwrap();
        let p = char_poly(&m);
        for x in -4..=4 {
            assert_eq!(p.eval_f64(x as f64) as i64, det_leibniz(&m, x), "x = {x}");
        }
    }

    #[test]
    fn division_and_divisibility() {
        // (x^2 - 1)(x + 3) = x^3 + 3x^2 - x - 3
        let p = IntPolynomial::from_descending(&[1, 3, -1, -3]);
        let d = IntPolynomial::from_descending(&[1, 3]);
        let (q, r) = p.div_rem_monic(&d).unwrap();
        assert_eq!(q, IntPolynomial::from_descending(&[1, 0, -1]));
        assert!(r.is_zero());
        assert!(!p.divisible_by(&IntPolynomial::from_descending(&[1, 2])).unwrap());
        assert!(p.div_rem_monic(&IntPolynomial::from_descending(&[2, 1])).is_err());
    }

    #[test]
    fn linear_root() {
        let p = IntPolynomial::from_descending(&[1, -5]);
        assert_eq!(largest_real_root(&p, 1e-12).unwrap(), 5.0);
    }

    #[test]
    fn repeated_and_exact_roots() {
        // x (x - 3)(x + 2) = x^3 - x^2 - 6x
        let p = IntPolynomial::from_descending(&[1, -1, -6, 0]);
        assert_eq!(largest_real_root(&p, 1e-12).unwrap(), 3.0);
        // (x - 1)^2 (x + 4)
        let p = IntPolynomial::from_descending(&[1, 2, -7, 4]);
        assert!((largest_real_root(&p, 1e-12).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(count_real_roots(&p, -10.0, 10.0), 2);
    }

    #[test]
    fn no_real_root() {
        let p = IntPolynomial::from_descending(&[1, 0, 1]);
        assert_eq!(largest_real_root(&p, 1e-12), Err(Error::NoRealRoot));
        assert_eq!(
            largest_real_root(&IntPolynomial::from_i64(&[3]), 1e-12),
            Err(Error::NoRealRoot)
        );
    }

    #[test]
    fn quartic_in_x_squared() {
        // x^4 - 19x^2 + 9: largest root sqrt((19 + sqrt(325)) / 2)
        let p = IntPolynomial::from_descending(&[1, 0, -19, 0, 9]);
        let want = ((19.0 + 325f64.sqrt()) / 2.0).sqrt();
        assert!((largest_real_root(&p, 1e-12).unwrap() - want).abs() < 1e-11);
    }

    #[test]
    fn exact_signs() {
        let p = IntPolynomial::from_descending(&[1, 0, -2]);
        assert_eq!(p.sign_at_f64(1.5), Ordering::Greater);
        assert_eq!(p.sign_at_f64(1.0), Ordering::Less);
        assert_eq!(p.sign_at_f64(-1.5), Ordering::Greater);
        assert_eq!(IntPolynomial::from_descending(&[1, -3]).sign_at_f64(3.0), Ordering::Equal);
    }

    #[test]
    fn cauchy_bound_covers_roots() {
        let p = IntPolynomial::from_descending(&[2, -7, 3]);
        assert_eq!(p.cauchy_bound(), BigInt::from(5));
    }

    #[test]
    fn serializes_as_integer_list() {
        let p = IntPolynomial::from_descending(&[1, 0, -8, 0, 0]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[0,0,-8,0,1]");
    }

    #[test]
    fn largest_root_comparison() {
        let c6 = adjacency_char_poly(&crate::graph::Graph::cycle(6).unwrap());
        let c5 = adjacency_char_poly(&crate::graph::Graph::cycle(5).unwrap());
        // both largest roots are 2
        assert_eq!(compare_largest_roots(&c6, &c5).unwrap(), Ordering::Equal);
        // x^2 - 2 against x^2 - 3, and a factor shared below the top root
        let two = IntPolynomial::from_descending(&[1, 0, -2]);
        let three = IntPolynomial::from_descending(&[1, 0, -3]);
        assert_eq!(compare_largest_roots(&two, &three).unwrap(), Ordering::Less);
        assert_eq!(compare_largest_roots(&three, &two).unwrap(), Ordering::Greater);
        let shared = IntPolynomial::from_descending(&[1, 0, -3, 0, 2]);
        assert_eq!(compare_largest_roots(&shared, &two).unwrap(), Ordering::Equal);
        assert_eq!(compare_largest_roots(&shared, &IntPolynomial::from_descending(&[1, 0, -5, 0, 6])).unwrap(), Ordering::Less);
        // roots 10^-6 apart
        let a = IntPolynomial::from_descending(&[1, -1_000_000]);
        let b = IntPolynomial::from_descending(&[1_000_000, -999_999_999_999]);
        assert_eq!(compare_largest_roots(&a, &b).unwrap(), Ordering::Greater);
    }
}
