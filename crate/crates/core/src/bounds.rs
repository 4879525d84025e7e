//! Stanley-type coefficient bounds.
//!
//! From `N_l`, `N_{l+1}`, `N_{n-w-1}` and `N_{n-w}`, the interior coefficients
//! are bracketed by binomially scaled copies of a known one:
//!
//! ```text
//! LB_i = N_{l+1}   C(n,i) / C(n,l+1)     l+1 <= i <= n-w-2
//! UB_i = N_{n-w-1} C(n,i) / C(n,n-w-1)   l+2 <= i <= n-w-2
//! ```
//!
//! The known anchors and the binomial tail above `n-w` are copied through
//! unchanged. Integer entries round the scaled values to nearest, ties to
//! even; the exact rationals are kept for curve evaluation.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial_row, eval_integer_nform, ExactCoeffVector, HammockDims};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsPair {
    dims: HammockDims,
    lb: Vec<BigUint>,
    ub: Vec<BigUint>,
    lb_exact: Vec<BigRational>,
    ub_exact: Vec<BigRational>,
}

impl BoundsPair {
    pub fn n(&self) -> usize {
        self.lb.len() - 1
    }
    pub fn dims(&self) -> HammockDims {
        self.dims
    }
    pub fn lb(&self) -> &[BigUint] {
        &self.lb
    }
    pub fn ub(&self) -> &[BigUint] {
        &self.ub
    }
    pub fn lb_exact(&self) -> &[BigRational] {
        &self.lb_exact
    }
    pub fn ub_exact(&self) -> &[BigRational] {
        &self.ub_exact
    }

    pub fn lb_vector(&self) -> ExactCoeffVector {
        ExactCoeffVector::new(self.lb.clone()).expect("lb entries bounded by binomials")
    }

    pub fn ub_vector(&self) -> ExactCoeffVector {
        ExactCoeffVector::new(self.ub.clone()).expect("ub entries bounded by binomials")
    }

    /// True when `lb_k <= N_k <= ub_k` for every `k`.
    pub fn brackets(&self, exact: &ExactCoeffVector) -> bool {
        exact.n() == self.n()
            && exact
                .coeffs()
                .iter()
                .zip(self.lb.iter().zip(&self.ub))
                .all(|(c, (lo, hi))| lo <= c && c <= hi)
    }

    /// Exact values of the two bound polynomials at a rational `p`.
    pub fn eval_exact(&self, p: &BigRational) -> Result<(BigRational, BigRational)> {
        if p < &BigRational::zero() || p > &BigRational::one() {
            return Err(Error::Domain {
                value: p.to_f64().unwrap_or(f64::NAN),
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok((
            rational_nform(&self.lb_exact, p),
            rational_nform(&self.ub_exact, p),
        ))
    }
}

/// Evaluates an N-form with rational coefficients by clearing denominators.
fn rational_nform(coeffs: &[BigRational], p: &BigRational) -> BigRational {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    eval_integer_nform(&ints, p) / BigRational::from_integer(lcm)
}

/// Nearest integer, ties to even. `x` must be non-negative.
pub(crate) fn round_half_even(x: &BigRational) -> BigUint {
    let (q, r) = x.numer().div_rem(x.denom());
    let twice: BigInt = r.abs() * 2;
    let q = match twice.cmp(x.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal if q.is_even() => q,
        std::cmp::Ordering::Equal => q + 1,
    };
    q.to_biguint().expect("non-negative bound entry")
}

pub fn stanley_bounds(
    dims: HammockDims,
    n_l: &BigUint,
    n_l1: &BigUint,
    n_nw1: &BigUint,
    n_nw: &BigUint,
) -> Result<BoundsPair> {
    let span = dims.cubic_span();
    if span < 2 {
        return Err(Error::Degenerate { span });
    }
    let (l, w, n) = (dims.l(), dims.w(), dims.n());
    let row = binomial_row(n);
    let top = n - w;

    if n_l > n_l1 {
        return Err(Error::Anchors(format!(
            "N_{l}={n_l} exceeds N_{}={n_l1}",
            l + 1
        )));
    }
    for (k, v) in [(l, n_l), (l + 1, n_l1), (top - 1, n_nw1), (top, n_nw)] {
        if v > row.get(k) {
            return Err(Error::Anchors(format!(
                "N_{k}={v} exceeds C({n},{k})={}",
                row.get(k)
            )));
        }
    }

    let int = |v: &BigUint| BigRational::from_integer(BigInt::from(v.clone()));
    let scaled = |base: &BigUint, base_k: usize, i: usize| {
        BigRational::new(
            BigInt::from(base * row.get(i)),
            BigInt::from(row.get(base_k).clone()),
        )
    };

    let mut lb_exact = vec![BigRational::zero(); n + 1];
    let mut ub_exact = vec![BigRational::zero(); n + 1];
    lb_exact[l] = int(n_l);
    ub_exact[l] = int(n_l);
    ub_exact[l + 1] = int(n_l1);
    for i in l + 1..=top - 2 {
        lb_exact[i] = scaled(n_l1, l + 1, i);
    }
    for i in l + 2..=top - 2 {
        ub_exact[i] = scaled(n_nw1, top - 1, i);
    }
    // the explicit anchor wins where the scaled run and the anchor overlap
    for v in [&mut lb_exact, &mut ub_exact] {
        v[top - 1] = int(n_nw1);
        v[top] = int(n_nw);
        for (i, slot) in v.iter_mut().enumerate().skip(top + 1) {
            *slot = int(row.get(i));
        }
    }

    let lb: Vec<BigUint> = lb_exact.iter().map(round_half_even).collect();
    let ub: Vec<BigUint> = ub_exact.iter().map(round_half_even).collect();
    if let Some(k) = (0..=n).find(|&k| lb[k] > ub[k]) {
        return Err(Error::Anchors(format!(
            "inconsistent anchors: lower bound {} exceeds upper bound {} at k={k}",
            lb[k], ub[k]
        )));
    }
    Ok(BoundsPair {
        dims,
        lb,
        ub,
        lb_exact,
        ub_exact,
    })
}

/// Bounds from a known exact vector of the hammock.
pub fn stanley_bounds_from_exact(h: &ExactCoeffVector) -> Result<BoundsPair> {
    let dims = h
        .dims()
        .ok_or_else(|| Error::Anchors("exact vector carries no hammock dimensions".into()))?;
    let (l, top) = (dims.l(), dims.n() - dims.w());
    if top < l + 2 {
        return Err(Error::Degenerate {
            span: dims.cubic_span(),
        });
    }
    stanley_bounds(dims, h.get(l), h.get(l + 1), h.get(top - 1), h.get(top))
}

/// Values of the lower and upper bound polynomials on a grid of `p`.
pub fn bound_polynomials(bp: &BoundsPair, grid: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let lb: Vec<f64> = bp
        .lb_exact
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    let ub: Vec<f64> = bp
        .ub_exact
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    let mut lo = Vec::with_capacity(grid.len());
    let mut hi = Vec::with_capacity(grid.len());
    for &p in grid {
        lo.push(crate::poly::eval_nform(lb.as_slice(), p)?);
        hi.push(crate::poly::eval_nform(ub.as_slice(), p)?);
    }
    Ok((lo, hi))
}
