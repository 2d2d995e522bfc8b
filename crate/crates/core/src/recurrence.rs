//! Labeled tree counts from the edge-rooted recurrence.
//!
//! Fixing one edge `{1, 2}` and splitting the remaining `n - 2` vertices
//! between its two endpoints gives the number `E_n` of trees containing that
//! edge:
//!
//! ```text
//! E_n = sum_{k=0}^{n-2} C(n-2, k) * T_{k+1} * T_{n-k-1}
//! ```
//!
//! Every one of the `C(n, 2)` edges is contained in the same number of trees,
//! and each tree has `n - 1` edges, so `n * E_n = 2 * T_n`. Together these
//! determine `T_n` from `T_1 = 1` using integers only.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::VerificationReport;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Uses the multiplicative formula; every intermediate division is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Memoized counts `T_1..=T_max_n`.
///
/// Entries are only ever appended by the recurrence, so every prefix of the
/// table is final once written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCountTable {
    // values[i] holds T_{i+1}
    values: Vec<BigUint>,
}

impl Default for TreeCountTable {
    fn default() -> Self {
        Self::new()
    }
}

impl TreeCountTable {
    /// A table holding only `T_1 = 1`.
    pub fn new() -> Self {
        Self {
            values: vec![BigUint::one()],
        }
    }

    /// A table filled through `max_n`.
    pub fn with_max(max_n: u64) -> Result<Self> {
        let mut table = Self::new();
        table.extend_to(max_n)?;
        Ok(table)
    }

    pub fn max_n(&self) -> u64 {
        self.values.len() as u64
    }

    /// `T_n` if it has already been computed.
    pub fn get(&self, n: u64) -> Option<&BigUint> {
        if n == 0 {
            return None;
        }
        self.values.get((n - 1) as usize)
    }

    /// Entries `T_1..=T_max_n` in order.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// Grows the table so it covers `1..=max_n`. A no-op if it already does.
    pub fn extend_to(&mut self, max_n: u64) -> Result<()> {
        if max_n == 0 {
            return Err(Error::domain("tree counts are defined for n >= 1"));
        }
        while self.max_n() < max_n {
            let n = self.max_n() + 1;
            let doubled = BigUint::from(n) * self.edge_rooted_sum(n);
            let (t_n, rem) = doubled.div_rem(&BigUint::from(2u32));
            if !rem.is_zero() {
                return Err(Error::Invariant(format!(
                    "n * E_n is odd at n = {n}; the recurrence requires it to be even"
                )));
            }
            self.values.push(t_n);
        }
        Ok(())
    }

    /// The summands `C(n-2, k) * T_{k+1} * T_{n-k-1}` for `k = 0..=n-2`.
    ///
    /// Requires the table to cover `1..=n-1`.
    pub fn edge_rooted_summands(&self, n: u64) -> Vec<BigUint> {
        debug_assert!(n >= 2 && self.max_n() >= n - 1);
        let m = n - 2;
        let mut row = BigUint::one();
        let mut out = Vec::with_capacity((m + 1) as usize);
        for k in 0..=m {
            let left = &self.values[k as usize];
            let right = &self.values[(m - k) as usize];
            out.push(&row * left * right);
            if k < m {
                // C(m, k+1) = C(m, k) * (m - k) / (k + 1)
                row = row * (m - k) / (k + 1);
            }
        }
        out
    }

    fn edge_rooted_sum(&self, n: u64) -> BigUint {
        self.edge_rooted_summands(n).into_iter().sum()
    }

    /// Test hook: bumps `T_n` by one and drops every later entry, so that any
    /// re-extension propagates the fault through the recurrence.
    #[doc(hidden)]
    pub fn inject_fault(&mut self, n: u64) -> Result<()> {
        if n == 0 || n > self.max_n() {
            return Err(Error::domain(format!(
                "cannot corrupt T_{n}: table covers 1..={}",
                self.max_n()
            )));
        }
        self.values[(n - 1) as usize] += 1u32;
        self.values.truncate(n as usize);
        Ok(())
    }
}

/// `T_n` via the recurrence, memoized in `table`.
pub fn tree_count_recursive(n: u64, table: &mut TreeCountTable) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("tree_count_recursive: n must be >= 1"));
    }
    table.extend_to(n)?;
    Ok(table.values[(n - 1) as usize].clone())
}

/// `n^(n-2)`, with the single-vertex tree counted once at `n = 1`.
pub fn tree_count_closed(n: u64) -> Result<BigUint> {
    match n {
        0 => Err(Error::domain("tree_count_closed: n must be >= 1")),
        1 => Ok(BigUint::one()),
        _ => {
            let exp = u32::try_from(n - 2)
                .map_err(|_| Error::domain(format!("exponent too large for n = {n}")))?;
            Ok(BigUint::from(n).pow(exp))
        }
    }
}

/// `E_n`, the number of trees containing the fixed edge `{1, 2}`.
pub fn edge_rooted_count(n: u64, table: &mut TreeCountTable) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::domain(
            "edge_rooted_count: n must be >= 2 (a single vertex has no edges)",
        ));
    }
    if table.max_n() < n - 1 {
        table.extend_to(n - 1)?;
    }
    Ok(table.edge_rooted_sum(n))
}

/// Checks `n * E_n = 2 * T_n` at a single `n`.
pub fn verify_edge_symmetry(n: u64, table: &mut TreeCountTable) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::domain("verify_edge_symmetry: n must be >= 2"));
    }
    let t_n = tree_count_recursive(n, table)?;
    let e_n = edge_rooted_count(n, table)?;
    Ok(VerificationReport::check_range(
        "n*E_n = 2*T_n",
        n,
        n,
        |_| (BigUint::from(n) * &e_n, &t_n * 2u32),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn pascal(n: usize, k: usize) -> BigUint {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        row.get(k).cloned().unwrap_or_default()
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, 5), big(1));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn binomial_matches_pascal() {
        assert_eq!(pascal(21, 6), big(54264));
        assert_eq!(binomial(21, 6), big(54264));
        for n in 0..40u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), pascal(n as usize, k as usize), "C({n},{k})");
                assert_eq!(binomial(n, k), binomial(n, n - k));
            }
        }
    }

    #[test]
    fn recursive_base_and_small_cases() {
        let mut t = TreeCountTable::new();
        assert_eq!(tree_count_recursive(1, &mut t).unwrap(), big(1));
        assert_eq!(tree_count_recursive(2, &mut t).unwrap(), big(1));
        // 4 and 7 were established by the brute-force oracle (see oracle tests).
        assert_eq!(tree_count_recursive(4, &mut t).unwrap(), big(16));
        assert_eq!(tree_count_recursive(7, &mut t).unwrap(), big(16807));
        assert_eq!(t.max_n(), 7);
    }

    #[test]
    fn zero_is_a_domain_error() {
        let mut t = TreeCountTable::new();
        assert!(matches!(
            tree_count_recursive(0, &mut t),
            Err(Error::Domain(_))
        ));
        assert!(matches!(tree_count_closed(0), Err(Error::Domain(_))));
        assert!(matches!(TreeCountTable::with_max(0), Err(Error::Domain(_))));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(tree_count_closed(1).unwrap(), big(1));
        assert_eq!(tree_count_closed(2).unwrap(), big(1));
        assert_eq!(tree_count_closed(3).unwrap(), big(3));
        assert_eq!(tree_count_closed(7).unwrap(), big(16807));
    }

    #[test]
    fn edge_rooted_values() {
        let mut t = TreeCountTable::new();
        assert_eq!(edge_rooted_count(2, &mut t).unwrap(), big(1));
        assert_eq!(edge_rooted_count(3, &mut t).unwrap(), big(2));
        assert_eq!(edge_rooted_count(4, &mut t).unwrap(), big(8));
        assert!(matches!(
            edge_rooted_count(1, &mut t),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn edge_symmetry_checks() {
        let mut t = TreeCountTable::new();
        for n in [2, 4, 50] {
            let r = verify_edge_symmetry(n, &mut t).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(verify_edge_symmetry(1, &mut t).is_err());
    }

    #[test]
    fn recurrence_matches_closed_form_to_200() {
        let mut t = TreeCountTable::new();
        for n in 1..=200 {
            assert_eq!(
                tree_count_recursive(n, &mut t).unwrap(),
                tree_count_closed(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn memoization_is_transparent() {
        let fresh = TreeCountTable::with_max(60).unwrap();
        let mut incremental = TreeCountTable::new();
        for n in [3, 10, 11, 40, 60, 20] {
            incremental.extend_to(n).unwrap();
        }
        assert_eq!(fresh, incremental);
    }

    #[test]
    fn summands_are_symmetric() {
        let t = TreeCountTable::with_max(30).unwrap();
        for n in 2..=31 {
            let s = t.edge_rooted_summands(n);
            assert_eq!(s.len() as u64, n - 1);
            for k in 0..s.len() {
                assert_eq!(s[k], s[s.len() - 1 - k], "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn injected_fault_propagates() {
        let mut t = TreeCountTable::with_max(10).unwrap();
        t.inject_fault(5).unwrap();
        assert_eq!(t.max_n(), 5);
        assert_eq!(t.get(5).unwrap(), &big(126));
        t.extend_to(10).unwrap();
        assert_ne!(t.get(10).unwrap(), &tree_count_closed(10).unwrap());
        assert!(t.inject_fault(11).is_err());
    }
}
