//! Exact counting of labeled trees.
//!
//! Three independent routes to the number of labeled trees on `n` vertices
//! are provided and cross-checked against each other:
//!
//! - [`recurrence`]: a memoized big-integer recurrence built from the
//!   edge-rooted decomposition, alongside the closed form `n^(n-2)`;
//! - [`series`]: an exact-rational truncated power series engine that builds
//!   the generating function of the counts, checks the identities it
//!   satisfies, and extracts coefficients by Lagrange inversion;
//! - [`oracle`]: a brute-force enumeration of edge subsets of the complete
//!   graph, independent of every formula above.
//!
//! The [`cli`] module drives all of them from the `cayley` binary.

pub mod cli;
pub mod error;
pub mod oracle;
pub mod recurrence;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use oracle::{LabeledTree, SplitProfile};
pub use recurrence::TreeCountTable;
pub use report::{Failure, VerificationReport};
pub use series::{ExactRational, FormalSeries};
