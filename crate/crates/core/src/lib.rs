//! Reliability polynomials of hammock networks.
//!
//! * [`poly`]: exact N-form coefficients, binomials, duality identities.
//! * [`coeff_fn`]: piecewise-linear coefficient functions and their areas.
//! * [`spline`]: the cubic approximation of a hammock and its dual from four
//!   known coefficients, plus the uniform error bound.
//! * [`bounds`]: Stanley-type lower and upper coefficient bounds.
//! * [`oracle`]: exhaustive exact coefficients for small two-terminal graphs.
//! * [`linalg`]: the small dense solvers behind [`spline`].

pub mod bounds;
pub mod coeff_fn;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod spline;

pub use bounds::{bound_polynomials, stanley_bounds, stanley_bounds_from_exact, BoundsPair};
pub use coeff_fn::{integrate_f, make_f, PiecewiseLinearF};
pub use error::{Error, Result};
pub use oracle::{exact_coeffs, make_hammock, HammockVariant, TwoTerminalGraph};
pub use poly::{
    binomial, binomial_row, check_duality_identity, check_sum_complementarity, dual_coeffs,
    eval_nform, eval_nform_exact, ApproxCoeffVector, ApproxParams, BinomialTable, ExactCoeffVector,
    HammockDims, NForm, SolveMode,
};
pub use spline::{
    approximate, error_bound, Approximation, ErrorBound, KnownAnchors, Mode, SplineModel,
};

/// Formats a real with 17 significant digits, plain notation where the
/// exponent allows it, so the text round-trips to the same `f64`.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if !(-5..17).contains(&exp) {
        return sci;
    }
    let decimals = (16 - exp).max(0) as usize;
    let fixed = format!("{x:.decimals$}");
    if fixed.contains('.') {
        fixed
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        fixed
    }
}

/// `count` evenly spaced points covering `[0, 1]`.
pub fn unit_grid(count: usize) -> Vec<f64> {
    assert!(count >= 2, "grid needs at least two points");
    (0..count).map(|i| i as f64 / (count - 1) as f64).collect()
}
