//! Truncated formal power series over exact rationals.
//!
//! A [`FormalSeries`] of order `N` stores the coefficients of `S^0..=S^N`.
//! Binary operations on series of orders `N1` and `N2` produce a series of
//! order `min(N1, N2)`; unary operations document their own result order.

mod identities;
mod lagrange;
mod rational;

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use identities::{
    functional_equation_residual, functional_equation_sides, log_form_residual, log_form_sides,
    ode_residual, ode_sides, square_identity_residual, square_identity_sides, tree_egf,
};
pub use lagrange::{inversion_residual, lagrange_fixed_point, lagrange_invert};
pub use rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalSeries {
    coeffs: Vec<ExactRational>,
}

impl FormalSeries {
    /// Builds a series from `coeffs[0..=N]`; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("a series needs at least a constant term"));
        }
        Ok(Self { coeffs })
    }

    /// Integer coefficients, padded with zeros (or truncated) to `order`.
    pub fn from_integers(values: &[i64], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| {
                values
                    .get(i)
                    .map_or_else(ExactRational::zero, |&v| ExactRational::from(v))
            })
            .collect();
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![ExactRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRational::one(), order)
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `S` itself (zero if `order == 0`).
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = ExactRational::one();
        }
        s
    }

    /// `e^x` truncated to `order`: coefficients `1/k!`.
    pub fn exp_x(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = ExactRational::one();
        for k in 0..=order {
            if k > 0 {
                c = c / ExactRational::from(k as i64);
            }
            coeffs.push(c.clone());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `S^n`, or `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&ExactRational> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ExactRational::is_zero)
    }

    /// Largest absolute coefficient (zero for the zero series).
    pub fn max_abs_coeff(&self) -> ExactRational {
        self.coeffs
            .iter()
            .map(ExactRational::abs)
            .max()
            .unwrap_or_else(ExactRational::zero)
    }

    /// Drops coefficients above `order`. Panics if `order` exceeds the current order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Termwise derivative; the result has order `N - 1`.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::domain("cannot differentiate a series of order 0"));
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * &ExactRational::from((i + 1) as i64))
            .collect();
        Ok(Self { coeffs })
    }

    /// Divides by `S`; the result has order `N - 1`.
    pub fn div_by_s(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain(
                "series is not divisible by S: nonzero constant term",
            ));
        }
        if self.order() == 0 {
            return Err(Error::domain("cannot divide a series of order 0 by S"));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplies by `S`, keeping the order (the top coefficient falls off).
    pub fn mul_by_s(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(ExactRational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Self { coeffs }
    }

    /// `exp(a)` for `a` with zero constant term, solving `B' = A' B`, `b_0 = 1`:
    /// `n b_n = sum_{k=1}^{n} k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("exp requires a zero constant term"));
        }
        let order = self.order();
        let weighted: Vec<ExactRational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * &ExactRational::from(k as i64))
            .collect();
        let mut out = Vec::with_capacity(order + 1);
        out.push(ExactRational::one());
        for n in 1..=order {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() {
                    acc += &weighted[k] * &out[n - k];
                }
            }
            out.push(acc / ExactRational::from(n as i64));
        }
        Ok(Self { coeffs: out })
    }

    /// `log(a)` for `a` with constant term one, solving `L' = A'/A`, `l_0 = 0`:
    /// `n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain("log requires a constant term of 1"));
        }
        let order = self.order();
        let mut out: Vec<ExactRational> = Vec::with_capacity(order + 1);
        out.push(ExactRational::zero());
        for n in 1..=order {
            let mut acc = &self.coeffs[n] * &ExactRational::from(n as i64);
            for k in 1..n {
                if !out[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    acc -= &(&(&out[k] * &ExactRational::from(k as i64)) * &self.coeffs[n - k]);
                }
            }
            out.push(acc / ExactRational::from(n as i64));
        }
        Ok(Self { coeffs: out })
    }

    /// `self^p`, truncated to the order of `self`.
    pub fn pow(&self, p: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..p {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner)` for an inner series with zero constant term, evaluated by
    /// Horner's rule. Result order is `min` of the two orders.
    pub fn compose(&self, inner: &FormalSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::domain(
                "composition requires the inner series to vanish at 0",
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

fn zip_truncated(
    a: &FormalSeries,
    b: &FormalSeries,
    f: impl Fn(&ExactRational, &ExactRational) -> ExactRational,
) -> FormalSeries {
    let order = a.order().min(b.order());
    FormalSeries {
        coeffs: (0..=order).map(|i| f(&a.coeffs[i], &b.coeffs[i])).collect(),
    }
}

impl Add for &FormalSeries {
    type Output = FormalSeries;
    fn add(self, rhs: &FormalSeries) -> FormalSeries {
        zip_truncated(self, rhs, |x, y| x + y)
    }
}

impl Sub for &FormalSeries {
    type Output = FormalSeries;
    fn sub(self, rhs: &FormalSeries) -> FormalSeries {
        zip_truncated(self, rhs, |x, y| x - y)
    }
}

impl Neg for &FormalSeries {
    type Output = FormalSeries;
    fn neg(self) -> FormalSeries {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated to the smaller order.
impl Mul for &FormalSeries {
    type Output = FormalSeries;
    fn mul(self, rhs: &FormalSeries) -> FormalSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        FormalSeries { coeffs }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FormalSeries {
            type Output = FormalSeries;
            fn $m(self, rhs: FormalSeries) -> FormalSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Coefficient-wise sum, truncated to the smaller order.
pub fn series_add(a: &FormalSeries, b: &FormalSeries) -> FormalSeries {
    a + b
}

/// Cauchy product, truncated to the smaller order.
pub fn series_mul(a: &FormalSeries, b: &FormalSeries) -> FormalSeries {
    a * b
}

pub fn series_diff(a: &FormalSeries) -> Result<FormalSeries> {
    a.derivative()
}

pub fn series_div_by_s(a: &FormalSeries) -> Result<FormalSeries> {
    a.div_by_s()
}

pub fn series_exp(a: &FormalSeries) -> Result<FormalSeries> {
    a.exp()
}

pub fn series_log(a: &FormalSeries) -> Result<FormalSeries> {
    a.log()
}

impl std::fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "({mag})*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("S")?,
                _ => write!(f, "S^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(S^{})", self.order() + 1)
    }
}
