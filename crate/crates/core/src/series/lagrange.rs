//! Solving `T = S * phi(T)` with `T(0) = 0`.
//!
//! [`lagrange_invert`] extracts coefficients directly,
//! `[S^n] T = (1/n) [x^(n-1)] phi(x)^n`, while [`lagrange_fixed_point`]
//! iterates the equation itself. The two share no code beyond series
//! multiplication, so agreement between them is a meaningful check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ExactRational, FormalSeries};
use crate::error::{Error, Result};

fn check_phi(phi: &FormalSeries, order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::domain("inversion order must be >= 1"));
    }
    if phi.coeffs()[0].is_zero() {
        return Err(Error::domain(
            "phi(0) must be nonzero for T = S*phi(T) to have a unique solution",
        ));
    }
    if phi.order() + 1 < order {
        return Err(Error::domain(format!(
            "phi has order {} but order {} needs at least {}",
            phi.order(),
            order,
            order - 1
        )));
    }
    Ok(())
}

/// `S * a`, raising the order by one.
fn times_s(a: &FormalSeries) -> FormalSeries {
    let mut coeffs = Vec::with_capacity(a.coeffs().len() + 1);
    coeffs.push(ExactRational::zero());
    coeffs.extend_from_slice(a.coeffs());
    FormalSeries { coeffs }
}

/// The coefficient-formula solution of `T = S * phi(T)` through `S^order`.
///
/// Powers of `phi` are formed in integers: with `psi_j = j! * phi_j` scaled
/// by the lcm `D` of their denominators, `k! * D^n * [x^k] phi^n` is an
/// integer obeying a binomial convolution, so no rational normalization
/// happens until each coefficient is extracted.
pub fn lagrange_invert(phi: &FormalSeries, order: usize) -> Result<FormalSeries> {
    check_phi(phi, order)?;
    let len = order; // degrees 0..order-1 of phi and its powers
    let mut factorial = BigInt::one();
    let mut scaled = Vec::with_capacity(len);
    for (j, c) in phi.coeffs()[..len].iter().enumerate() {
        if j > 0 {
            factorial *= j;
        }
        scaled.push(c * &ExactRational::from_integer(factorial.clone()));
    }
    let lcm = scaled
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let psi: Vec<BigInt> = scaled
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();

    let pascal = pascal_rows(len);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(ExactRational::zero());
    // power[k] = k! * lcm^n * [x^k] phi^n
    let mut power = psi.clone();
    let mut lcm_pow = lcm.clone();
    let mut n_factorial = BigInt::one();
    for n in 1..=order {
        n_factorial *= n;
        coeffs.push(ExactRational::new(
            power[n - 1].clone(),
            &n_factorial * &lcm_pow,
        )?);
        if n < order {
            power = (0..len)
                .map(|k| {
                    (0..=k)
                        .filter(|&j| !psi[j].is_zero())
                        .map(|j| &pascal[k][j] * &psi[j] * &power[k - j])
                        .sum()
                })
                .collect();
            lcm_pow *= &lcm;
        }
    }
    Ok(FormalSeries { coeffs })
}

fn pascal_rows(len: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(len);
    for k in 0..len {
        let mut row = vec![BigInt::one(); k + 1];
        for j in 1..k {
            row[j] = &rows[k - 1][j - 1] + &rows[k - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// The same solution by iterating `T <- S * phi(T)` from `T = 0`; each pass
/// fixes at least one more coefficient.
pub fn lagrange_fixed_point(phi: &FormalSeries, order: usize) -> Result<FormalSeries> {
    check_phi(phi, order)?;
    let phi = phi.truncate(order - 1);
    let mut t = FormalSeries::zero(order);
    for _ in 0..order {
        let next = times_s(&phi.compose(&t.truncate(order - 1))?);
        if next == t {
            break;
        }
        t = next;
    }
    Ok(t)
}

/// `t - S * phi(t)` through the order of `t`; zero exactly when `t` solves
/// the equation to that order.
pub fn inversion_residual(phi: &FormalSeries, t: &FormalSeries) -> Result<FormalSeries> {
    check_phi(phi, t.order())?;
    if !t.coeffs()[0].is_zero() {
        return Err(Error::domain("candidate solution must vanish at 0"));
    }
    let order = t.order();
    let substituted = times_s(&phi.truncate(order - 1).compose(&t.truncate(order - 1))?);
    Ok(t - &substituted)
}
