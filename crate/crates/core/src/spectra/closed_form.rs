//! Closed-form spectral quantities for paths, branch blocks and the branch
//! resolvent `α_k(λ)`.
//!
//! `α_k(λ)` is the top-left entry of `(λI - B)^{-1}` where `B` is the `k×k`
//! Laplacian block of a pendant branch (diagonal `2, …, 2, 1`, off-diagonal
//! `-1`). It obeys `α_k = 1/(λ - 2 - α_{k-1})` from `α_0 = -1`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Laplacian eigenvalues of `P_n`: `4 sin²((n-j)π/(2n))`, ascending.
pub fn path_eigs_closed(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("path length must be ≥ 1".into()));
    }
    let nf = n as f64;
    // j = n, n-1, …, 1 gives ascending order
    Ok((1..=n)
        .rev()
        .map(|j| {
            let s = ((nf - j as f64) * PI / (2.0 * nf)).sin();
            4.0 * s * s
        })
        .collect())
}

/// Eigenvalues of the branch block `B`: `2 + 2cos(2jπ/(2k+1))`, ascending.
pub fn branch_eigs_closed(k: usize) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::InvalidArgument("branch length must be ≥ 1".into()));
    }
    let denom = (2 * k + 1) as f64;
    Ok((1..=k)
        .rev()
        .map(|j| 2.0 + 2.0 * (2.0 * j as f64 * PI / denom).cos())
        .collect())
}

fn check_domain(lambda: f64) -> Result<()> {
    if lambda >= 4.0 {
        Ok(())
    } else {
        Err(Error::OutOfDomain(format!("λ must be ≥ 4, got {lambda}")))
    }
}

/// `α_k(λ)` by running the recursion `k` steps from `α_0 = -1`.
pub fn alpha_recursive(lambda: f64, k: usize) -> Result<f64> {
    check_domain(lambda)?;
    Ok((0..k).fold(-1.0, |a, _| 1.0 / (lambda - 2.0 - a)))
}

/// The recursion in exact arithmetic.
pub fn alpha_recursive_exact(lambda: &BigRational, k: usize) -> Result<BigRational> {
    let four = BigRational::from_integer(BigInt::from(4));
    if lambda < &four {
        return Err(Error::OutOfDomain(format!("λ must be ≥ 4, got {lambda}")));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let mut a = -BigRational::one();
    for _ in 0..k {
        a = (lambda - &two - &a).recip();
    }
    Ok(a)
}

/// `α_k(4) = (2k-1)/(2k+1)`.
pub fn alpha_at_four(k: usize) -> BigRational {
    let k = BigInt::from(k);
    BigRational::new(&k * 2 - 1, &k * 2 + 1)
}

/// `α_k(λ)` from the explicit solution of the recursion.
///
/// With `x, y = (λ - 2 ∓ √(λ(λ-4)))/2` the solution is
/// `(xᵏy(x+1) - xyᵏ(y+1)) / (xᵏ(x+1) - yᵏ(y+1))`. It is evaluated after
/// dividing through by `yᵏ` so large `k` neither overflows nor loses the
/// `xᵏ` terms.
pub fn alpha_closed(lambda: f64, k: usize) -> Result<f64> {
    check_domain(lambda)?;
    if lambda == 4.0 {
        let k = k as f64;
        return Ok((2.0 * k - 1.0) / (2.0 * k + 1.0));
    }
    let root = (lambda * (lambda - 4.0)).sqrt();
    let x = 0.5 * (lambda - 2.0 - root);
    let y = 0.5 * (lambda - 2.0 + root);
    let r = (x / y).powi(k as i32);
    Ok((r * y * (x + 1.0) - x * (y + 1.0)) / (r * (x + 1.0) - (y + 1.0)))
}

/// `lim_{k→∞} α_k(λ) = (λ - 2 - √(λ(λ-4)))/2`, in `(0, 1]`.
pub fn alpha_limit(lambda: f64) -> Result<f64> {
    check_domain(lambda)?;
    Ok(0.5 * (lambda - 2.0 - (lambda * (lambda - 4.0)).sqrt()))
}
