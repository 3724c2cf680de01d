//! The auxiliary function F(x, e), its root N, and the explicit density
//! lower bounds parameterized by N.
//!
//! F(x, e) = 1/((2x+2)e) - ((2x+1)/((2x+2)(e-2)))^e  for real x >= 1 and
//! integer e >= 8. F(., 8) is strictly decreasing with a unique zero N,
//! floor(N) = 104978. That constant is pinned here by exact big-integer sign
//! tests; floating point is used only where a bound genuinely lives in log
//! space (the e-th powers underflow long before e reaches 1000).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

/// floor(N) for the unique zero N of F(., 8). Recomputed and asserted by
/// [`find_n`]; exposed for report metadata.
pub const N_FLOOR: i64 = 104978;

/// Default width of the bisection bracket around N.
pub const DEFAULT_ROOT_TOL: f64 = 1e-6;

/// Default slack for the floating-point side of the F(N, e) >= 0 check.
pub const DEFAULT_NONNEG_SLACK: f64 = 1e-12;

/// Default upper end of the finite e-range over which F(floor(N), e) >= 0
/// is verified exactly.
pub const DEFAULT_E_MAX: i64 = 1000;

#[derive(Debug, Error, PartialEq, Clone)]
pub enum BoundsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("tolerance must satisfy 0 < tol <= 1, got {0}")]
    InvalidTolerance(f64),
    #[error("bisection endpoints do not straddle zero")]
    Bracket,
    #[error("computed floor(N) = {got}, expected {expected}")]
    FloorMismatch { got: i64, expected: i64 },
}

fn check_e(e: i64) -> Result<(), BoundsError> {
    if e < 8 {
        return Err(BoundsError::Domain(format!("e must be >= 8, got {e}")));
    }
    Ok(())
}

/// F(x, e) in floating point. The e-th power goes through exp/ln so that it
/// degrades to a clean underflow for large e instead of overflowing an
/// intermediate.
pub fn aux_f(x: f64, e: i64) -> Result<f64, BoundsError> {
    if !x.is_finite() || x < 1.0 {
        return Err(BoundsError::Domain(format!("x must be >= 1, got {x}")));
    }
    check_e(e)?;
    let first = 1.0 / ((2.0 * x + 2.0) * e as f64);
    let log_ratio = (2.0 * x + 1.0).ln() - (2.0 * x + 2.0).ln() - ((e - 2) as f64).ln();
    let second = (e as f64 * log_ratio).exp();
    Ok(first - second)
}

/// Exact sign of F(x, e) at an integer point, by clearing denominators:
///
///   sign F(x, e) = sign[ (2x+2)^(e-1) (e-2)^e  -  e (2x+1)^e ]
///
/// Big-integer comparison, no rounding anywhere. `Ordering::Greater` means
/// F(x, e) > 0.
pub fn aux_f_sign_exact(x: i64, e: i64) -> Result<Ordering, BoundsError> {
    if x < 1 {
        return Err(BoundsError::Domain(format!("x must be >= 1, got {x}")));
    }
    check_e(e)?;
    let e_u = e as u32;
    let lhs = BigInt::from(2 * x + 2).pow(e_u - 1) * BigInt::from(e - 2).pow(e_u);
    let rhs = BigInt::from(e) * BigInt::from(2 * x + 1).pow(e_u);
    Ok(lhs.cmp(&rhs))
}

/// The root N of F(., 8) bracketed to a configured width, with its floor
/// pinned exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundContext {
    /// Working approximation of N. This is the *lower* bracket endpoint, so
    /// F(n_value, e) >= F(N, e) for every fixed e (F decreases in x).
    pub n_value: f64,
    /// floor(N), determined by exact integer sign tests.
    pub n_floor: i64,
    /// (lo, hi) with F(lo, 8) > 0 > F(hi, 8) and hi - lo <= the requested tol.
    pub n_bracket: (f64, f64),
    /// The bracket tolerance this context was built with.
    pub tol: f64,
}

/// Bisect F(., 8) on [1, 10^6] down to a bracket of width <= `tol`, then pin
/// floor(N) with exact sign tests and check it equals [`N_FLOOR`].
pub fn find_n(tol: f64) -> Result<BoundContext, BoundsError> {
    if !(tol > 0.0 && tol <= 1.0) {
        return Err(BoundsError::InvalidTolerance(tol));
    }
    let (mut lo, mut hi) = (1.0f64, 1e6f64);
    if !(aux_f(lo, 8)? > 0.0 && aux_f(hi, 8)? < 0.0) {
        return Err(BoundsError::Bracket);
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if !(mid > lo && mid < hi) {
            break; // float resolution exhausted
        }
        if aux_f(mid, 8)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Locate floor(N) exactly: the last integer x with F(x, 8) > 0. The
    // float bracket tells us where to look; the big-integer tests decide.
    let mut k = lo.floor() as i64;
    k = k.max(1);
    while aux_f_sign_exact(k + 1, 8)? == Ordering::Greater {
        k += 1;
    }
    while k > 1 && aux_f_sign_exact(k, 8)? != Ordering::Greater {
        k -= 1;
    }
    if k != N_FLOOR {
        return Err(BoundsError::FloorMismatch {
            got: k,
            expected: N_FLOOR,
        });
    }
    Ok(BoundContext {
        n_value: lo,
        n_floor: k,
        n_bracket: (lo, hi),
        tol,
    })
}

/// delta(e) = (2N+1)/((N+1)(e-2)), the threshold on m/(f+1) separating the
/// two regimes of the e >= 8 bound. Always strictly below 2/(e-2).
pub fn delta(e: i64, ctx: &BoundContext) -> Result<f64, BoundsError> {
    check_e(e)?;
    let n = ctx.n_value;
    Ok((2.0 * n + 1.0) / ((n + 1.0) * (e - 2) as f64))
}

/// The density lower bound 1/e - (m-1)(e-2)/((f+1)*2e), as an exact rational.
/// May be <= 0, in which case it is vacuous.
pub fn zhai_thm1_lb(f: i64, m: i64, e: i64) -> Ratio<i128> {
    let (f, m, e) = (f as i128, m as i128, e as i128);
    let num = 2 * (f + 1) - (m - 1) * (e - 2);
    let den = 2 * e * (f + 1);
    Ratio::new(num, den)
}

/// The bound (8-e)/(6e) for embedding dimension 4 <= e <= 7.
pub fn prop1a_lb(e: i64) -> Result<Ratio<i128>, BoundsError> {
    if !(4..=7).contains(&e) {
        return Err(BoundsError::Domain(format!("e must be in [4, 7], got {e}")));
    }
    Ok(Ratio::new((8 - e) as i128, (6 * e) as i128))
}

/// The bound 1/((2N+2)e), valid for all but finitely many semigroups of
/// embedding dimension e >= 8.
pub fn prop2a_lb(e: i64, ctx: &BoundContext) -> Result<f64, BoundsError> {
    check_e(e)?;
    Ok(1.0 / ((2.0 * ctx.n_value + 2.0) * e as f64))
}

/// Which bound a [`LogBound`] value carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    Zhai,
    Prop1a,
    Prop2a,
    Prop2b,
    Lemma2,
}

/// A bound held in log10 space. The linear value of the e >= 8 bound is
/// ~10^-115 already at e = 64; far beyond e ~ 470 it cannot be represented
/// in an f64 at all, so exponent-level arithmetic is the canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogBound {
    pub log10_value: f64,
    pub kind: BoundKind,
}

impl LogBound {
    /// The linear-space value, when it does not underflow (>= 10^-300).
    pub fn linear(&self) -> Option<f64> {
        if self.log10_value >= -300.0 {
            Some(10f64.powf(self.log10_value))
        } else {
            None
        }
    }
}

/// log10 of the bound ((2N+1)/((2N+2)(e-2)))^e, valid for every semigroup of
/// embedding dimension e >= 8.
pub fn prop2b_lb_log10(e: i64, ctx: &BoundContext) -> Result<LogBound, BoundsError> {
    check_e(e)?;
    let n = ctx.n_value;
    let log10_value =
        e as f64 * ((2.0 * n + 1.0).log10() - (2.0 * n + 2.0).log10() - ((e - 2) as f64).log10());
    Ok(LogBound {
        log10_value,
        kind: BoundKind::Prop2b,
    })
}

/// log10 of (2/delta(e))^e, the cap on f+1 for semigroups with
/// m/(f+1) > delta(e). Algebraically the negation of [`prop2b_lb_log10`];
/// computed here through delta so the identity is a genuine cross-check.
pub fn lemma2_bound_log10(e: i64, ctx: &BoundContext) -> Result<LogBound, BoundsError> {
    let d = delta(e, ctx)?;
    Ok(LogBound {
        log10_value: e as f64 * (2.0 / d).log10(),
        kind: BoundKind::Lemma2,
    })
}

/// True iff f + 1 <= 3m. Under this condition the density question has a
/// known affirmative answer, so the e in [4, 7] bound only needs the
/// complementary case.
#[allow(clippy::int_plus_one)] // keep the condition in its stated form
pub fn eliahou_condition(f: i64, m: i64) -> bool {
    f + 1 <= 3 * m
}

/// Outcome of the finite-range checks behind the root-based bounds.
///
/// (a) F(., 8) strictly decreases across log-spaced samples of [1, 10^6];
/// (b) exact: sign F(floor(N), e) is nonnegative for every e in [8, e_max],
///     and float: F(n_value, e) >= -slack over the same range.
///
/// The range is finite by construction; the report states exactly what was
/// checked and carries failures instead of erroring.
#[derive(Debug, Clone, Serialize)]
pub struct Lemma1Report {
    pub grid: usize,
    pub monotone_ok: bool,
    /// Sample abscissas (x_k, x_{k+1}) where F failed to strictly decrease.
    pub monotone_violations: Vec<(f64, f64)>,
    pub e_range: (i64, i64),
    /// e values where the exact sign of F(floor(N), e) is negative.
    pub exact_failures: Vec<i64>,
    /// e values where the float value F(n_value, e) < -slack.
    pub float_failures: Vec<i64>,
    pub slack: f64,
}

impl Lemma1Report {
    pub fn all_ok(&self) -> bool {
        self.monotone_ok && self.exact_failures.is_empty() && self.float_failures.is_empty()
    }
}

/// Log-spaced grid over [1, 10^6]: x_k = 10^(6k/(grid-1)).
pub fn log_grid(grid: usize) -> impl Iterator<Item = f64> {
    let last = (grid - 1).max(1) as f64;
    (0..grid).map(move |k| 10f64.powf(6.0 * k as f64 / last))
}

pub fn check_lemma1(
    ctx: &BoundContext,
    e_max: i64,
    grid: usize,
    slack: f64,
) -> Result<Lemma1Report, BoundsError> {
    if e_max < 8 {
        return Err(BoundsError::Domain(format!(
            "e_max must be >= 8, got {e_max}"
        )));
    }
    if grid < 2 {
        return Err(BoundsError::Domain(format!(
            "grid must be >= 2, got {grid}"
        )));
    }

    let mut monotone_violations = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for x in log_grid(grid) {
        let fx = aux_f(x, 8)?;
        if let Some((px, pf)) = prev {
            if fx >= pf || fx.is_nan() {
                monotone_violations.push((px, x));
            }
        }
        prev = Some((x, fx));
    }

    let mut exact_failures = Vec::new();
    let mut float_failures = Vec::new();
    for e in 8..=e_max {
        if aux_f_sign_exact(ctx.n_floor, e)? == Ordering::Less {
            exact_failures.push(e);
        }
        if aux_f(ctx.n_value, e)? < -slack {
            float_failures.push(e);
        }
    }

    Ok(Lemma1Report {
        grid,
        monotone_ok: monotone_violations.is_empty(),
        monotone_violations,
        e_range: (8, e_max),
        exact_failures,
        float_failures,
        slack,
    })
}
