//! Closed-form and recursive counting sequences, all in exact arithmetic.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{AtlasError, Result};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// `N(n, w) = (1/n) C(n, w) C(n, w−1)` for `1 <= w <= n`.
pub fn narayana(n: u64, w: u64) -> Result<BigUint> {
    if w == 0 || w > n {
        return Err(AtlasError::OutOfRange(format!("narayana needs 1 <= w <= n, got n={n}, w={w}")));
    }
    Ok(binomial(n, w) * binomial(n, w - 1) / BigUint::from(n))
}

/// `M_0 = 1`, `M_n = M_{n−1} + Σ_{i=0}^{n−2} M_i M_{n−2−i}`.
pub fn motzkin(n: u64) -> BigUint {
    motzkin_row(n).pop().unwrap()
}

pub fn motzkin_row(n: u64) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = vec![BigUint::one()];
    for k in 1..=n as usize {
        let mut next = m[k - 1].clone();
        for i in 0..k.saturating_sub(1) {
            next += &m[i] * &m[k - 2 - i];
        }
        m.push(next);
    }
    m
}

/// Fine numbers `1, 0, 1, 2, 6, 18, 57, …` from `F_{n−1} + 2F_n = C_n`.
pub fn fine(n: u64) -> BigUint {
    fine_row(n).pop().unwrap()
}

pub fn fine_row(n: u64) -> Vec<BigUint> {
    let mut f = vec![BigUint::one()];
    for k in 1..=n {
        let next = (catalan(k) - &f[k as usize - 1]) / BigUint::from(2u32);
        f.push(next);
    }
    f
}

/// 2-Motzkin paths of length `n` with no broken step and exactly `k` solid
/// steps on the axis:
/// `Σ_{i=0}^{n−k} (−1)^i (k+1+i)/(n+1) · C(2n−k−i, n) · C(k+i, k)`.
pub fn m_nk(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(AtlasError::OutOfRange(format!("m(n,k) needs 0 <= k <= n, got n={n}, k={k}")));
    }
    let mut num = BigInt::zero();
    for i in 0..=n - k {
        let term = BigInt::from(k + 1 + i) * BigInt::from(binomial(2 * n - k - i, n)) * BigInt::from(binomial(k + i, k));
        if i % 2 == 0 {
            num += term;
        } else {
            num -= term;
        }
    }
    let (q, r) = num.div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q.to_biguint().ok_or_else(|| AtlasError::Domain("negative m(n,k)".into()))
}

/// Bi-increasing permutations of length `n` with greatest excedance `k`.
pub fn greatest_excedance_count(n: u64, k: u64) -> Result<BigUint> {
    if n == 0 || k >= n {
        return Err(AtlasError::OutOfRange(format!("greatest excedance needs 0 <= k < n, got n={n}, k={k}")));
    }
    if k == 0 {
        return Ok(BigUint::one());
    }
    Ok(binomial(n - 1 + k, k) - binomial(n - 1 + k, k - 1))
}

/// Young diagrams of perimeter `2n+2` and Durfee rank `r`: `C(n, 2r−1)`.
pub fn partitions_by_rank(n: u64, r: u64) -> Result<BigUint> {
    if n == 0 || r == 0 {
        return Err(AtlasError::OutOfRange(format!("partitions_by_rank needs n, r >= 1, got n={n}, r={r}")));
    }
    Ok(binomial(n, 2 * r - 1))
}

/// Connected skew diagrams of perimeter `2n+2` and rank `r`:
/// `2^{n+1−2r} C(n−1, 2r−2) C_{r−1}`.
pub fn skew_by_rank(n: u64, r: u64) -> Result<BigUint> {
    if n == 0 || r == 0 {
        return Err(AtlasError::OutOfRange(format!("skew_by_rank needs n, r >= 1, got n={n}, r={r}")));
    }
    if 2 * r > n + 1 {
        return Ok(BigUint::zero());
    }
    Ok((BigUint::one() << (n + 1 - 2 * r)) * binomial(n - 1, 2 * r - 2) * catalan(r - 1))
}

/// Checks `Σ_{k=0}^{c−b} C(a+k, a) C(c−a−1−k, b−a−1) = C(c, b)`.
pub fn chu_vandermonde_check(a: u64, b: u64, c: u64) -> Result<bool> {
    if !(a < b && b <= c) {
        return Err(AtlasError::OutOfRange(format!("need 0 <= a < b <= c, got a={a}, b={b}, c={c}")));
    }
    let lhs: BigUint = (0..=c - b).map(|k| binomial(a + k, a) * binomial(c - a - 1 - k, b - a - 1)).sum();
    Ok(lhs == binomial(c, b))
}

/// Bi-increasing permutations of length `n` whose fixed points are exactly
/// `fixed`: the product of Fine numbers over the gaps between fixed points.
pub fn fixed_point_set_count(n: u64, fixed: &[u64]) -> Result<BigUint> {
    let mut sorted = fixed.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != fixed.len() || sorted.iter().any(|&i| i == 0 || i > n) {
        return Err(AtlasError::OutOfRange(format!("fixed points must be distinct elements of 1..={n}")));
    }
    let f = fine_row(n);
    let mut prev = 0;
    let mut acc = BigUint::one();
    for &i in sorted.iter().chain(std::iter::once(&(n + 1))) {
        acc *= &f[(i - prev - 1) as usize];
        prev = i;
    }
    Ok(acc)
}
