//! Numerical semigroups, their invariants, and explicit density lower
//! bounds.
//!
//! For a numerical semigroup S with Frobenius number f, genus g and
//! embedding dimension e, the density d(S) = (f+1-g)/(f+1) measures how much
//! of [0, f] lies in S. Whether d(S) >= 1/e always holds is a long-open
//! question; this crate computes the quantities involved and verifies, with
//! exact arithmetic wherever the statements are exact, a family of explicit
//! lower bounds on d(S) in terms of e alone. The bounds for e >= 8 are
//! parameterized by the root N of an auxiliary function, floor(N) = 104978,
//! which is pinned here by exact big-integer sign tests.
//!
//! - [`semigroup`]: Apéry-set representation, invariants, exact density.
//! - [`enumerate`]: the semigroup tree up to a genus cap, plus an
//!   independent brute-force oracle.
//! - [`bounds`]: the auxiliary function, its root, and the bound formulas.
//! - [`verify`]: streaming verification and CSV/JSON reports.

pub mod bounds;
pub mod enumerate;
pub mod semigroup;
pub mod verify;

pub use bounds::{BoundContext, BoundKind, BoundsError, LogBound};
pub use enumerate::{EnumerateError, ParallelConfig, SigmaFilter, TreeNode};
pub use semigroup::{DensityValue, GeneratorSet, Invariants, NumericalSemigroup, SemigroupError};
pub use verify::{AggregateRow, ReportFormat, VerificationRecord, VerificationRun};
