//! Bivariate power series in `x` and `q` truncated to a fixed box, with
//! exact integer coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{AtlasError, Result};

/// Coefficients of `x^i q^j` for `i <= x_order`, `j <= q_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedBivariateSeries {
    x_order: usize,
    q_order: usize,
    coeffs: Vec<Vec<BigInt>>,
}

impl TruncatedBivariateSeries {
    pub fn zero(x_order: usize, q_order: usize) -> Self {
        TruncatedBivariateSeries { x_order, q_order, coeffs: vec![vec![BigInt::zero(); q_order + 1]; x_order + 1] }
    }

    pub fn one(x_order: usize, q_order: usize) -> Self {
        Self::monomial(x_order, q_order, BigInt::one(), 0, 0)
    }

    /// `c x^i q^j`, or zero if the monomial lies outside the box.
    pub fn monomial(x_order: usize, q_order: usize, c: BigInt, i: usize, j: usize) -> Self {
        let mut s = Self::zero(x_order, q_order);
        if i <= x_order && j <= q_order {
            s.coeffs[i][j] = c;
        }
        s
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigInt {
        &self.coeffs[i][j]
    }

    /// The polynomial in `q` multiplying `x^i`.
    pub fn x_row(&self, i: usize) -> &[BigInt] {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    fn check_shape(&self, other: &Self) {
        assert_eq!((self.x_order, self.q_order), (other.x_order, other.q_order), "series truncated to different boxes");
    }

    fn require_unit(&self) -> Result<()> {
        if self.coeffs[0][0].is_one() {
            Ok(())
        } else {
            Err(AtlasError::Domain("series reciprocal needs constant term 1".into()))
        }
    }

    /// Reciprocal of a series with constant term 1 by Newton iteration
    /// `g ← g (2 − f g)`; the lowest total degree of `1 − f g` doubles each
    /// round.
    pub fn reciprocal(&self) -> Result<Self> {
        self.require_unit()?;
        let one = Self::one(self.x_order, self.q_order);
        let two = &one + &one;
        let mut g = one.clone();
        loop {
            let err = &one - &(self * &g);
            if err.is_zero() {
                return Ok(g);
            }
            g = &g * &(&two - &(self * &g));
        }
    }

    /// `self / other` via [`Self::reciprocal`].
    pub fn divide(&self, other: &Self) -> Result<Self> {
        self.check_shape(other);
        Ok(self * &other.reciprocal()?)
    }

    /// `self / other` by solving `other · g = self` one coefficient at a time.
    pub fn divide_schoolbook(&self, other: &Self) -> Result<Self> {
        self.check_shape(other);
        other.require_unit()?;
        let mut g = Self::zero(self.x_order, self.q_order);
        for i in 0..=self.x_order {
            for j in 0..=self.q_order {
                let mut c = self.coeffs[i][j].clone();
                for a in 0..=i {
                    for b in 0..=j {
                        if (a, b) != (0, 0) && !other.coeffs[a][b].is_zero() {
                            c -= &other.coeffs[a][b] * &g.coeffs[i - a][j - b];
                        }
                    }
                }
                g.coeffs[i][j] = c;
            }
        }
        Ok(g)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> =
            self.coeffs.iter().map(|r| r.iter().map(crate::counting::distribution::bigint_json).collect()).collect();
        json!({
            "schema": crate::SCHEMA,
            "x_order": self.x_order,
            "q_order": self.q_order,
            "coefficients": rows,
        })
    }
}

impl Add for &TruncatedBivariateSeries {
    type Output = TruncatedBivariateSeries;

    fn add(self, other: &TruncatedBivariateSeries) -> TruncatedBivariateSeries {
        self.check_shape(other);
        let mut s = self.clone();
        for (r, o) in s.coeffs.iter_mut().zip(&other.coeffs) {
            for (c, d) in r.iter_mut().zip(o) {
                *c += d;
            }
        }
        s
    }
}

impl Sub for &TruncatedBivariateSeries {
    type Output = TruncatedBivariateSeries;

    fn sub(self, other: &TruncatedBivariateSeries) -> TruncatedBivariateSeries {
        self + &(-other)
    }
}

impl Neg for &TruncatedBivariateSeries {
    type Output = TruncatedBivariateSeries;

    fn neg(self) -> TruncatedBivariateSeries {
        let mut s = self.clone();
        for c in s.coeffs.iter_mut().flatten() {
            *c = -std::mem::take(c);
        }
        s
    }
}

impl Mul for &TruncatedBivariateSeries {
    type Output = TruncatedBivariateSeries;

    fn mul(self, other: &TruncatedBivariateSeries) -> TruncatedBivariateSeries {
        self.check_shape(other);
        let (nx, nq) = (self.x_order, self.q_order);
        let mut s = TruncatedBivariateSeries::zero(nx, nq);
        for a in 0..=nx {
            for b in 0..=nq {
                let c = &self.coeffs[a][b];
                if c.is_zero() {
                    continue;
                }
                for i in 0..=nx - a {
                    for j in 0..=nq - b {
                        let d = &other.coeffs[i][j];
                        if !d.is_zero() {
                            s.coeffs[a + i][b + j] += c * d;
                        }
                    }
                }
            }
        }
        s
    }
}

/// `1 / (1 − x^i q^j)` as a geometric series; needs `(i, j) != (0, 0)`.
fn geometric(x_order: usize, q_order: usize, i: usize, j: usize) -> TruncatedBivariateSeries {
    let mut s = TruncatedBivariateSeries::zero(x_order, q_order);
    let mut t = 0;
    while t * i <= x_order && t * j <= q_order {
        s.coeffs[t * i][t * j] = BigInt::one();
        t += 1;
    }
    s
}

/// `J_r(x, q) = Σ_m (−1)^m x^{m+r} q^{m(m+2r+1)/2} / ((x)_{m+r} (q)_m)` with
/// `(a)_m = (1−a)(1−aq)⋯(1−aq^{m−1})`, truncated to `x^N q^K`.
///
/// The `m`-th summand has lowest `x`-degree `m+r`, so summation stops once
/// that exceeds `N`.
pub fn j_series(r: usize, x_order: usize, q_order: usize) -> Result<TruncatedBivariateSeries> {
    if r > 1 {
        return Err(AtlasError::OutOfRange(format!("J_r is defined here for r in {{0, 1}}, got {r}")));
    }
    let mut total = TruncatedBivariateSeries::zero(x_order, q_order);
    let mut m = 0;
    while m + r <= x_order {
        let qexp = m * (m + 2 * r + 1) / 2;
        if qexp > q_order {
            break;
        }
        let sign = if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let mut term = TruncatedBivariateSeries::monomial(x_order, q_order, sign, m + r, qexp);
        for t in 0..m + r {
            term = &term * &geometric(x_order, q_order, 1, t);
        }
        for t in 1..=m {
            term = &term * &geometric(x_order, q_order, 0, t);
        }
        total = &total + &term;
        m += 1;
    }
    Ok(total)
}

/// `J_1 / J_0`, whose `x^n q^k` coefficient counts bi-increasing
/// permutations of length `n` with excedance difference `k`.
pub fn dexc_generating_function(x_order: usize, q_order: usize) -> Result<TruncatedBivariateSeries> {
    j_series(1, x_order, q_order)?.divide(&j_series(0, x_order, q_order)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series_from(x: usize, q: usize, terms: &[(i64, usize, usize)]) -> TruncatedBivariateSeries {
        let mut s = TruncatedBivariateSeries::zero(x, q);
        for &(c, i, j) in terms {
            s = &s + &TruncatedBivariateSeries::monomial(x, q, BigInt::from(c), i, j);
        }
        s
    }

    #[test]
    fn j0_has_unit_constant_term() {
        let j0 = j_series(0, 6, 10).unwrap();
        assert!(j0.coeff(0, 0).is_one());
        let j1 = j_series(1, 6, 10).unwrap();
        assert!(j1.x_row(0).iter().all(Zero::is_zero));
        assert!(j_series(2, 3, 3).is_err());
    }

    #[test]
    fn first_coefficients_of_quotient() {
        let g = dexc_generating_function(4, 6).unwrap();
        assert!(g.x_row(0).iter().all(Zero::is_zero));
        assert_eq!(g.coeff(1, 0), &BigInt::one());
        // n=2: 1 2 (dexc 0) and 2 1 (dexc 1)
        assert_eq!(g.coeff(2, 0), &BigInt::one());
        assert_eq!(g.coeff(2, 1), &BigInt::one());
        let row3: Vec<i64> = g.x_row(3).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(row3, vec![1, 2, 2, 0, 0, 0, 0]);
    }

    #[test]
    fn newton_matches_schoolbook() {
        let f = series_from(5, 5, &[(1, 0, 0), (-3, 1, 0), (2, 0, 1), (7, 2, 3), (-1, 4, 1)]);
        let h = series_from(5, 5, &[(4, 0, 0), (1, 1, 2), (-5, 3, 3)]);
        assert_eq!(h.divide(&f).unwrap(), h.divide_schoolbook(&f).unwrap());
        let one = TruncatedBivariateSeries::one(5, 5);
        assert_eq!(&f * &f.reciprocal().unwrap(), one);
        let j0 = j_series(0, 7, 12).unwrap();
        let j1 = j_series(1, 7, 12).unwrap();
        assert_eq!(j1.divide(&j0).unwrap(), j1.divide_schoolbook(&j0).unwrap());
    }

    #[test]
    fn reciprocal_needs_unit() {
        let f = series_from(2, 2, &[(2, 0, 0)]);
        assert!(f.reciprocal().is_err());
        assert!(f.divide_schoolbook(&f).is_err());
    }

    #[test]
    fn quotient_columns_sum_to_catalan() {
        let g = dexc_generating_function(8, 16).unwrap();
        for n in 0..=8u64 {
            let s: BigInt = g.x_row(n as usize).iter().sum();
            let expect = if n == 0 { BigInt::zero() } else { BigInt::from(crate::counting::numbers::catalan(n)) };
            assert_eq!(s, expect, "n = {n}");
        }
    }
}
