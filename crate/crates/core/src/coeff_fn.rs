//! Piecewise-linear interpolants through the coefficient points `(k, N_k)`.
//!
//! On each `[k-1, k]` the function is the chord
//! `(v_k - v_{k-1}) x + k v_{k-1} - (k-1) v_k`. The value at `x = 0` is set
//! separately: `0` for a network's coefficient function, `1` for the
//! binomial envelope. Integrals are exact trapezoid sums over the knots.
//!
//! For a complementary pair the two integrals add up to `2^n - 1`, not `2^n`:
//! the trapezoid rule halves the end knots, and `F(0) = 0`, `v_n = 1` on
//! both sides.

use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial_row, ExactCoeffVector};

#[derive(Clone, Debug, PartialEq)]
pub struct PiecewiseLinearF {
    knots: Vec<BigRational>,
}

impl PiecewiseLinearF {
    /// `knots[0]` is the value at `x = 0`; `knots[k]` for `k >= 1` is `v_k`.
    pub fn from_knots(knots: Vec<BigRational>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::Length {
                expected: 2,
                got: knots.len(),
            });
        }
        Ok(PiecewiseLinearF { knots })
    }

    /// Binomial envelope `B`, chords through `(k, C(n,k))` with `B(0) = 1`.
    pub fn binomial_envelope(n: usize) -> Result<Self> {
        Self::from_knots(
            binomial_row(n)
                .into_values()
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.knots.len() - 1
    }

    pub fn knots(&self) -> &[BigRational] {
        &self.knots
    }

    /// Exact value at a rational abscissa in `[0, n]`.
    pub fn eval_exact(&self, x: &BigRational) -> Result<BigRational> {
        let n = self.n();
        let nr = BigRational::from_integer(BigInt::from(n));
        if x < &BigRational::zero() || x > &nr {
            return Err(Error::Domain {
                value: x.to_f64().unwrap_or(f64::NAN),
                lo: 0.0,
                hi: n as f64,
            });
        }
        if x.is_zero() {
            return Ok(self.knots[0].clone());
        }
        // segment index k with x in (k-1, k]
        let k = x.ceil().to_integer().to_usize().unwrap_or(n).clamp(1, n);
        let lo = &self.knots[k - 1];
        let hi = &self.knots[k];
        let kk = BigRational::from_integer(BigInt::from(k));
        let km1 = BigRational::from_integer(BigInt::from(k - 1));
        Ok((hi - lo) * x + &kk * lo - &km1 * hi)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let n = self.n();
        if !(0.0..=n as f64).contains(&x) {
            return Err(Error::Domain {
                value: x,
                lo: 0.0,
                hi: n as f64,
            });
        }
        if x == 0.0 {
            return Ok(self.knots[0].to_f64().unwrap_or(f64::NAN));
        }
        let k = (x.ceil() as usize).clamp(1, n);
        let lo = self.knots[k - 1].to_f64().unwrap_or(f64::NAN);
        let hi = self.knots[k].to_f64().unwrap_or(f64::NAN);
        Ok(lo + (hi - lo) * (x - (k - 1) as f64))
    }
}

/// Coefficient function of a network; pinned to `0` at the origin.
pub fn make_f(coeffs: &ExactCoeffVector) -> PiecewiseLinearF {
    let mut knots: Vec<BigRational> = coeffs
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
        .collect();
    knots[0] = BigRational::zero();
    PiecewiseLinearF { knots }
}

/// Exact area under `f` on `[0, n]`.
pub fn integrate_f(f: &PiecewiseLinearF) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    f.knots
        .windows(2)
        .map(|w| (&w[0] + &w[1]) / &two)
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// Writes `x,F(x)` rows on `samples` evenly spaced points of `[0, n]`.
pub fn write_samples_csv<W: Write>(
    f: &PiecewiseLinearF,
    samples: usize,
    out: &mut W,
) -> std::io::Result<()> {
    let samples = samples.max(2);
    let n = f.n() as f64;
    writeln!(out, "x,F")?;
    for i in 0..samples {
        let x = n * i as f64 / (samples - 1) as f64;
        let y = f.eval(x).expect("grid point inside [0, n]");
        writeln!(out, "{},{}", crate::fmt_real(x), crate::fmt_real(y))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::dual_coeffs;
    use crate::poly::fixtures::{h5x3, h5x5};
    use num_bigint::BigUint;
    use num_traits::One;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn interpolates_knots() {
        let h = h5x3();
        let f = make_f(&h);
        for k in 1..=h.n() {
            let x = BigRational::from_integer(k.into());
            let want = BigRational::from_integer(BigInt::from(h.get(k).clone()));
            assert_eq!(f.eval_exact(&x).unwrap(), want);
        }
        assert_eq!(f.eval_exact(&r(0, 1)).unwrap(), r(0, 1));
    }

    #[test]
    fn chord_midpoint() {
        let f = make_f(&h5x3());
        assert_eq!(f.eval_exact(&r(23, 2)).unwrap(), r(813, 1));
        assert_eq!(f.eval(11.0).unwrap(), 1187.0);
        assert_eq!(f.eval(11.5).unwrap(), 813.0);
        assert!(f.eval(15.5).is_err());
        assert!(f.eval_exact(&r(-1, 2)).is_err());
    }

    #[test]
    fn envelope_symmetric_chord() {
        let b = PiecewiseLinearF::binomial_envelope(15).unwrap();
        assert_eq!(b.eval_exact(&r(15, 2)).unwrap(), r(6435, 1));
        assert_eq!(b.eval(0.0).unwrap(), 1.0);
    }

    #[test]
    fn integral_values() {
        // trapezoid over C(15, .) halves both unit end knots
        let b = PiecewiseLinearF::binomial_envelope(15).unwrap();
        assert_eq!(integrate_f(&b), r(32767, 1));

        let f = make_f(&h5x3());
        assert_eq!(integrate_f(&f), r(9073, 1) - r(1, 2));

        let zero = ExactCoeffVector::from_u64(&[0, 0, 0, 0]).unwrap();
        assert!(integrate_f(&make_f(&zero)).is_zero());
    }

    #[test]
    fn complementary_integrals_sum_to_two_pow_n_minus_one() {
        for h in [h5x3(), h5x5()] {
            let d = dual_coeffs(&h).unwrap();
            let total = integrate_f(&make_f(&h)) + integrate_f(&make_f(&d));
            let two_n = BigRational::from_integer(BigInt::from(BigUint::one() << h.n()));
            assert_eq!(total, two_n - BigRational::one());
        }
    }

    #[test]
    fn csv_samples() {
        let f = make_f(&h5x3());
        let mut buf = Vec::new();
        write_samples_csv(&f, 31, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 32);
        assert_eq!(lines[0], "x,F");
        let last: Vec<f64> = lines[31].split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(last, vec![15.0, 1.0]);
        let mid: Vec<f64> = lines[24].split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(mid, vec![11.5, 813.0]);
    }
}
