use clap::ValueEnum;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::oracle::{Census, MAX_ORACLE_N};
use crate::recurrence::{binomial, edge_rooted_count, tree_count_closed, TreeCountTable};
use crate::report::{Failure, VerificationReport};
use crate::series::{self, ExactRational, FormalSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Recurrence against n^(n-2).
    ClosedForm,
    /// n * E_n = 2 * T_n.
    EdgeSymmetry,
    /// Brute-force enumeration against both engines (n <= 8).
    Oracle,
    /// Per-summand check of the edge-rooted decomposition (n <= 8).
    Split,
    /// Generating-function identities and Lagrange inversion.
    Series,
}

impl Suite {
    /// Bound used when neither `--max` nor `--order` is given.
    pub fn default_bound(self) -> u64 {
        match self {
            Suite::ClosedForm | Suite::EdgeSymmetry => 200,
            Suite::Oracle | Suite::Split => 7,
            Suite::Series => 50,
        }
    }
}

/// A recurrence table through `max_n`, optionally with `T_fault` corrupted
/// before the table is filled past it.
fn build_table(max_n: u64, fault: Option<u64>) -> Result<TreeCountTable> {
    let mut table = TreeCountTable::with_max(max_n)?;
    if let Some(k) = fault {
        if k == 0 || k > max_n {
            return Err(Error::domain(format!(
                "--inject-fault must be in 1..={max_n}"
            )));
        }
        table.inject_fault(k)?;
        table.extend_to(max_n)?;
    }
    Ok(table)
}

fn entry(table: &TreeCountTable, n: u64) -> BigUint {
    table
        .get(n)
        .cloned()
        .expect("table covers the checked range")
}

/// Runs `suite` up to `bound` (largest `n`, or truncation order for the
/// series suite).
pub fn run_suite(suite: Suite, bound: u64, fault: Option<u64>) -> Result<Vec<VerificationReport>> {
    if bound == 0 {
        return Err(Error::domain("bound must be at least 1"));
    }
    match suite {
        Suite::ClosedForm => closed_form(bound, fault),
        Suite::EdgeSymmetry => edge_symmetry(bound, fault),
        Suite::Oracle => oracle(bound, fault),
        Suite::Split => split(bound, fault),
        Suite::Series => series_suite(bound, fault),
    }
}

fn closed_form(max_n: u64, fault: Option<u64>) -> Result<Vec<VerificationReport>> {
    let table = build_table(max_n, fault)?;
    let closed: Vec<BigUint> = (1..=max_n).map(tree_count_closed).collect::<Result<_>>()?;
    Ok(vec![VerificationReport::check_range(
        "T_n (recurrence) = n^(n-2)",
        1,
        max_n,
        |n| (entry(&table, n), closed[(n - 1) as usize].clone()),
    )])
}

fn require_two(max_n: u64) -> Result<()> {
    if max_n < 2 {
        return Err(Error::domain("this suite needs --max >= 2"));
    }
    Ok(())
}

fn edge_symmetry(max_n: u64, fault: Option<u64>) -> Result<Vec<VerificationReport>> {
    require_two(max_n)?;
    let mut table = build_table(max_n, fault)?;
    let mut e = Vec::with_capacity(max_n as usize);
    for n in 2..=max_n {
        e.push(edge_rooted_count(n, &mut table)?);
    }
    Ok(vec![VerificationReport::check_range(
        "n*E_n = 2*T_n",
        2,
        max_n,
        |n| {
            (
                BigUint::from(n) * &e[(n - 2) as usize],
                entry(&table, n) * 2u32,
            )
        },
    )])
}

fn oracle_bound(max_n: u64) -> Result<usize> {
    if max_n as usize > MAX_ORACLE_N {
        return Err(Error::OracleLimit {
            n: max_n as usize,
            max: MAX_ORACLE_N,
        });
    }
    Ok(max_n as usize)
}

fn oracle(max_n: u64, fault: Option<u64>) -> Result<Vec<VerificationReport>> {
    let top = oracle_bound(max_n)?;
    let mut table = build_table(max_n, fault)?;
    let censuses: Vec<Census> = (1..=top).map(Census::new).collect::<Result<_>>()?;
    let census = |n: u64| &censuses[(n - 1) as usize];
    let counts: Vec<String> = censuses
        .iter()
        .map(|c| c.tree_count().to_string())
        .collect();

    let mut reports = vec![
        VerificationReport::check_range("oracle count = T_n (recurrence)", 1, max_n, |n| {
            (census(n).tree_count(), entry(&table, n))
        })
        .with_value(counts.join(",")),
        VerificationReport::check_range("oracle count = n^(n-2)", 1, max_n, |n| {
            (
                census(n).tree_count(),
                tree_count_closed(n).expect("n >= 1"),
            )
        }),
    ];
    if max_n < 2 {
        return Ok(reports);
    }

    let mut e = Vec::new();
    for n in 2..=max_n {
        e.push(edge_rooted_count(n, &mut table)?);
    }
    let with_anchor: Vec<BigUint> = (2..=max_n)
        .map(|n| census(n).trees_with_edge(1, 2))
        .collect::<Result<_>>()?;
    reports.push(VerificationReport::check_range(
        "oracle trees containing {1,2} = E_n",
        2,
        max_n,
        |n| {
            (
                with_anchor[(n - 2) as usize].clone(),
                e[(n - 2) as usize].clone(),
            )
        },
    ));

    let mut uniform = VerificationReport::pass("per-edge tree counts are equal", 2, max_n);
    let mut common = Vec::new();
    for n in 2..=max_n {
        let r = census(n).edge_count_uniformity()?;
        if let Some(f) = r.first_failure() {
            uniform = VerificationReport::fail(r.identity(), 2, max_n, f.clone());
            break;
        }
        common.push(r.value().unwrap_or_default().to_string());
    }
    if uniform.passed() {
        uniform = uniform.with_value(common.join(","));
    }
    reports.push(uniform);

    let per_edge_sums: Vec<BigUint> = (2..=max_n)
        .map(|n| {
            census(n)
                .per_edge_counts()
                .map(|v| v.into_iter().map(|(_, c)| c).sum())
        })
        .collect::<Result<_>>()?;
    reports.push(VerificationReport::check_range(
        "sum of per-edge counts = (n-1)*T_n",
        2,
        max_n,
        |n| {
            (
                per_edge_sums[(n - 2) as usize].clone(),
                entry(&table, n) * (n - 1),
            )
        },
    ));
    Ok(reports)
}

fn split(max_n: u64, fault: Option<u64>) -> Result<Vec<VerificationReport>> {
    require_two(max_n)?;
    let top = oracle_bound(max_n)?;
    let table = build_table(max_n, fault)?;
    let identity = "split profile = C(n-2,k)*T_{k+1}*T_{n-k-1}";
    for n in 2..=top {
        let profile = Census::new(n)?.split_profile()?;
        let m = (n - 2) as u64;
        for (k, observed) in profile.counts_by_k.iter().enumerate() {
            let k = k as u64;
            let expected = binomial(m, k) * entry(&table, k + 1) * entry(&table, m - k + 1);
            if *observed != expected {
                return Ok(vec![VerificationReport::fail(
                    identity,
                    2,
                    max_n,
                    Failure {
                        index: n as u64,
                        lhs: format!("k={k}: {observed}"),
                        rhs: format!("k={k}: {expected}"),
                    },
                )]);
            }
        }
    }
    Ok(vec![VerificationReport::pass(identity, 2, max_n)])
}

/// Compares two series coefficient by coefficient over `from..=` their
/// common order.
fn series_report(
    identity: &str,
    from: usize,
    (lhs, rhs): (FormalSeries, FormalSeries),
) -> VerificationReport {
    let to = lhs.order().min(rhs.order());
    if to < from {
        return VerificationReport::pass(identity, from as u64, from as u64);
    }
    VerificationReport::check_range(identity, from as u64, to as u64, |i| {
        (
            lhs.coeffs()[i as usize].clone(),
            rhs.coeffs()[i as usize].clone(),
        )
    })
}

fn series_suite(order: u64, fault: Option<u64>) -> Result<Vec<VerificationReport>> {
    let order = order as usize;
    if order > super::MAX_SERIES_ORDER {
        return Err(Error::domain(format!(
            "--order must be at most {}",
            super::MAX_SERIES_ORDER
        )));
    }
    let table = build_table(order as u64, fault)?;
    let egf = series::tree_egf(order, &table)?;

    let mut reports = vec![
        series_report(
            "T(S)^2 = sum 2(n-1)/n T_n S^n/(n-1)!",
            0,
            series::square_identity_sides(&egf, &table)?,
        ),
        series_report("T*T' = T' - T/S", 0, series::ode_sides(&egf)?),
        series_report("T = log(T/S)", 0, series::log_form_sides(&egf)?),
        series_report("T = S*exp(T)", 0, series::functional_equation_sides(&egf)?),
    ];

    let lagrange = series::lagrange_invert(&FormalSeries::exp_x(order - 1), order)?;
    let closed: Vec<ExactRational> = (1..=order)
        .map(|n| {
            let n_big = BigUint::from(n);
            let num = n_big.pow(n as u32 - 1);
            let den: BigUint = (1..=n).map(BigUint::from).product();
            ExactRational::new(num, den)
        })
        .collect::<Result<_>>()?;
    reports.push(VerificationReport::check_range(
        "lagrange coefficient = n^(n-1)/n!",
        1,
        order as u64,
        |n| {
            (
                lagrange.coeffs()[n as usize].clone(),
                closed[(n - 1) as usize].clone(),
            )
        },
    ));
    reports.push(series_report(
        "lagrange coefficient = T_n/(n-1)!",
        1,
        (lagrange.clone(), egf),
    ));
    reports.push(series_report(
        "lagrange back-substitution T = S*exp(T)",
        0,
        series::functional_equation_sides(&lagrange)?,
    ));
    Ok(reports)
}
