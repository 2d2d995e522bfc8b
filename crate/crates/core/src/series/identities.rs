//! The generating function of the tree counts and the identities it satisfies.
//!
//! Counts are weighted by `(n-1)!` rather than `n!`:
//!
//! ```text
//! T(S) = sum_{n>=1} T_n S^n / (n-1)!
//! ```
//!
//! Each `*_residual` function returns `lhs - rhs` of one identity; a zero
//! series means the identity holds through the returned order.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ExactRational, FormalSeries};
use crate::error::{Error, Result};
use crate::recurrence::TreeCountTable;

fn require_table(table: &TreeCountTable, order: usize) -> Result<()> {
    if (table.max_n() as usize) < order {
        return Err(Error::domain(format!(
            "table covers 1..={} but order {order} was requested",
            table.max_n()
        )));
    }
    Ok(())
}

/// `sum_{n=1}^{order} T_n S^n / (n-1)!` from a filled table.
pub fn tree_egf(order: usize, table: &TreeCountTable) -> Result<FormalSeries> {
    if order == 0 {
        return Err(Error::domain("tree_egf: order must be >= 1"));
    }
    require_table(table, order)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(ExactRational::zero());
    let mut factorial = BigUint::one();
    for (i, t_n) in table.values()[..order].iter().enumerate() {
        // i = n - 1
        if i > 0 {
            factorial *= i;
        }
        coeffs.push(ExactRational::new(t_n.clone(), factorial.clone())?);
    }
    FormalSeries::from_coeffs(coeffs)
}

/// Both sides of `t = S * exp(t)`, through the order of `t`.
pub fn functional_equation_sides(t: &FormalSeries) -> Result<(FormalSeries, FormalSeries)> {
    Ok((t.clone(), t.exp()?.mul_by_s()))
}

/// Both sides of `t = log(t / S)` through order `N - 1`; the integration
/// constant is zero since `t(0) = 0` and `(t / S)(0) = 1`.
pub fn log_form_sides(t: &FormalSeries) -> Result<(FormalSeries, FormalSeries)> {
    let rhs = t.div_by_s()?.log()?;
    Ok((t.truncate(rhs.order()), rhs))
}

/// Both sides of `t * t' = t' - t / S` through order `N - 1`.
pub fn ode_sides(t: &FormalSeries) -> Result<(FormalSeries, FormalSeries)> {
    if !t.coeffs()[0].is_zero() {
        return Err(Error::domain("ode_residual: series must vanish at 0"));
    }
    let dt = t.derivative()?;
    let over_s = t.div_by_s()?;
    Ok((t * &dt, &dt - &over_s))
}

/// Both sides of `t^2 = sum_{n>=1} 2 (n-1)/n T_n S^n / (n-1)!` through the
/// order of `t`. The `n = 1` term of the sum vanishes, matching `t^2`
/// starting at `S^2`.
pub fn square_identity_sides(
    t: &FormalSeries,
    table: &TreeCountTable,
) -> Result<(FormalSeries, FormalSeries)> {
    let order = t.order();
    require_table(table, order)?;
    let mut rhs = vec![ExactRational::zero(); order + 1];
    let mut factorial = BigUint::one();
    for n in 1..=order {
        if n > 1 {
            factorial *= n - 1;
        }
        let weight = ExactRational::new(2 * (n as i64 - 1), n as i64)?;
        let term = ExactRational::new(table.values()[n - 1].clone(), factorial.clone())?;
        rhs[n] = &weight * &term;
    }
    Ok((t * t, FormalSeries::from_coeffs(rhs)?))
}

fn difference((lhs, rhs): (FormalSeries, FormalSeries)) -> FormalSeries {
    &lhs - &rhs
}

/// `t - S * exp(t)` through the order of `t`.
pub fn functional_equation_residual(t: &FormalSeries) -> Result<FormalSeries> {
    functional_equation_sides(t).map(difference)
}

/// `t - log(t / S)` through order `N - 1`.
pub fn log_form_residual(t: &FormalSeries) -> Result<FormalSeries> {
    log_form_sides(t).map(difference)
}

/// `t * t' - t' + t / S` through order `N - 1`.
pub fn ode_residual(t: &FormalSeries) -> Result<FormalSeries> {
    ode_sides(t).map(difference)
}

/// `t^2 - sum_{n>=1} 2 (n-1)/n T_n S^n / (n-1)!` through the order of `t`.
pub fn square_identity_residual(t: &FormalSeries, table: &TreeCountTable) -> Result<FormalSeries> {
    square_identity_sides(t, table).map(difference)
}
