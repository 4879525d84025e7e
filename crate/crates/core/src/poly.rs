//! Exact N-form reliability polynomials.
//!
//! A two-terminal network with `n` devices has reliability
//! `h(p) = sum_k N_k p^k (1-p)^(n-k)`, where `N_k` counts the `k`-subsets of
//! devices that connect source to terminal. The coefficients are kept as
//! arbitrary-precision integers so the duality identities between a hammock
//! and its dual can be checked with zero tolerance.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Length `l` and width `w` of a hammock network; `n = l * w` devices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DimsWire", into = "DimsWire")]
pub struct HammockDims {
    l: usize,
    w: usize,
}

#[derive(Serialize, Deserialize)]
struct DimsWire {
    l: usize,
    w: usize,
}

impl TryFrom<DimsWire> for HammockDims {
    type Error = Error;
    fn try_from(d: DimsWire) -> Result<Self> {
        HammockDims::new(d.l, d.w)
    }
}

impl From<HammockDims> for DimsWire {
    fn from(d: HammockDims) -> Self {
        DimsWire { l: d.l, w: d.w }
    }
}

impl HammockDims {
    pub fn new(l: usize, w: usize) -> Result<Self> {
        if l == 0 || w == 0 {
            return Err(Error::Dimensions {
                l,
                w,
                reason: "length and width must be at least 1".into(),
            });
        }
        if l.checked_mul(w).is_none() {
            return Err(Error::Dimensions {
                l,
                w,
                reason: "device count overflows".into(),
            });
        }
        Ok(HammockDims { l, w })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn n(&self) -> usize {
        self.l * self.w
    }

    /// Dimensions of the dual hammock (length and width swapped).
    pub fn dual(&self) -> HammockDims {
        HammockDims {
            l: self.w,
            w: self.l,
        }
    }

    /// Length of the open interval `(l, n-w)` carrying the cubic piece.
    pub fn cubic_span(&self) -> i64 {
        self.n() as i64 - self.w as i64 - self.l as i64
    }
}

impl fmt::Display for HammockDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l={}, w={}", self.l, self.w)
    }
}

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// One row `C(n, 0), ..., C(n, n)` of Pascal's triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialTable {
    n: usize,
    values: Vec<BigUint>,
}

impl BinomialTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.values[k]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.values
    }
}

pub fn binomial_row(n: usize) -> BinomialTable {
    let mut values = Vec::with_capacity(n + 1);
    let mut c = BigUint::one();
    values.push(c.clone());
    for k in 1..=n {
        c = c * BigUint::from(n - k + 1) / BigUint::from(k);
        values.push(c.clone());
    }
    BinomialTable { n, values }
}

/// Exact N-form coefficients `N_0..N_n`.
///
/// Hammock vectors carry their dimensions; vectors produced for arbitrary
/// graphs only carry `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoeffWire", into = "CoeffWire")]
pub struct ExactCoeffVector {
    dims: Option<HammockDims>,
    coeffs: Vec<BigUint>,
}

impl ExactCoeffVector {
    /// Builds a vector of length `n + 1`, checking `N_k <= C(n, k)`.
    pub fn new(coeffs: Vec<BigUint>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Length {
                expected: 1,
                got: 0,
            });
        }
        let n = coeffs.len() - 1;
        let row = binomial_row(n);
        for (k, (c, b)) in coeffs.iter().zip(row.values()).enumerate() {
            if c > b {
                return Err(Error::Parse(format!(
                    "N_{k} = {c} exceeds C({n},{k}) = {b}"
                )));
            }
        }
        Ok(ExactCoeffVector { dims: None, coeffs })
    }

    pub fn from_u64(coeffs: &[u64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Attaches hammock dimensions; `dims.n()` must match the vector.
    pub fn with_dims(mut self, dims: HammockDims) -> Result<Self> {
        if dims.n() != self.n() {
            return Err(Error::Length {
                expected: dims.n() + 1,
                got: self.coeffs.len(),
            });
        }
        self.dims = Some(dims);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn dims(&self) -> Option<HammockDims> {
        self.dims
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.coeffs[k]
    }

    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }
}

/// Which linear system produced an approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveMode {
    Unique,
    General,
}

impl fmt::Display for SolveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveMode::Unique => f.write_str("unique"),
            SolveMode::General => f.write_str("general"),
        }
    }
}

/// Parameters an approximation was produced with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxParams {
    pub s: usize,
    pub t: usize,
    pub x1: usize,
    pub x2: usize,
    pub mode: SolveMode,
}

/// Real-valued approximate coefficients `f(0)..f(n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CoeffWire", into = "CoeffWire")]
pub struct ApproxCoeffVector {
    dims: Option<HammockDims>,
    coeffs: Vec<f64>,
    params: Option<ApproxParams>,
}

impl ApproxCoeffVector {
    pub fn new(coeffs: Vec<f64>, dims: Option<HammockDims>, params: Option<ApproxParams>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "coefficient vector must have n + 1 entries"
        );
        ApproxCoeffVector {
            dims,
            coeffs,
            params,
        }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn dims(&self) -> Option<HammockDims> {
        self.dims
    }

    pub fn params(&self) -> Option<ApproxParams> {
        self.params
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Integer view, rounding half away from zero.
    pub fn rounded(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.round() as i64).collect()
    }
}

/// Anything with N-form coefficients that can be evaluated in floating point.
pub trait NForm {
    fn degree(&self) -> usize;
    fn coeff_f64(&self, k: usize) -> f64;
}

impl NForm for ExactCoeffVector {
    fn degree(&self) -> usize {
        self.n()
    }
    fn coeff_f64(&self, k: usize) -> f64 {
        self.coeffs[k].to_f64().unwrap_or(f64::INFINITY)
    }
}

impl NForm for ApproxCoeffVector {
    fn degree(&self) -> usize {
        self.n()
    }
    fn coeff_f64(&self, k: usize) -> f64 {
        self.coeffs[k]
    }
}

impl NForm for [f64] {
    fn degree(&self) -> usize {
        self.len() - 1
    }
    fn coeff_f64(&self, k: usize) -> f64 {
        self[k]
    }
}

fn check_unit(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Domain {
            value: p,
            lo: 0.0,
            hi: 1.0,
        })
    }
}

/// `sum_k c_k p^k (1-p)^(n-k)` in double precision.
pub fn eval_nform<V: NForm + ?Sized>(v: &V, p: f64) -> Result<f64> {
    check_unit(p)?;
    let n = v.degree();
    let q = 1.0 - p;
    Ok((0..=n)
        .map(|k| v.coeff_f64(k) * p.powi(k as i32) * q.powi((n - k) as i32))
        .sum())
}

fn rational_in_unit(p: &BigRational) -> Result<()> {
    if p < &BigRational::zero() || p > &BigRational::one() {
        return Err(Error::Domain {
            value: p.to_f64().unwrap_or(f64::NAN),
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(())
}

/// Exact evaluation at a rational `p = a/b`, computed as
/// `sum_k N_k a^k (b-a)^(n-k) / b^n`.
pub fn eval_nform_exact(v: &ExactCoeffVector, p: &BigRational) -> Result<BigRational> {
    rational_in_unit(p)?;
    let ints: Vec<BigInt> = v.coeffs.iter().map(|c| BigInt::from(c.clone())).collect();
    Ok(eval_integer_nform(&ints, p))
}

pub(crate) fn eval_integer_nform(coeffs: &[BigInt], p: &BigRational) -> BigRational {
    let n = coeffs.len() - 1;
    let a = p.numer().clone();
    let b = p.denom().clone();
    let q = &b - &a;
    // q^(n-k) for k = 0..=n, built from the top down
    let mut q_pows = vec![BigInt::one(); n + 1];
    for k in (0..n).rev() {
        q_pows[k] = &q_pows[k + 1] * &q;
    }
    let mut num = BigInt::zero();
    let mut a_pow = BigInt::one();
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            num += c * &a_pow * &q_pows[k];
        }
        a_pow *= &a;
    }
    BigRational::new(num, num_traits::pow(b, n))
}

/// Coefficients of the dual network: `N'_k = C(n, k) - N_{n-k}`.
pub fn dual_coeffs(v: &ExactCoeffVector) -> Result<ExactCoeffVector> {
    let n = v.n();
    let row = binomial_row(n);
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mirror = &v.coeffs[n - k];
        let b = row.get(k);
        if mirror > b {
            return Err(Error::NegativeDual { k });
        }
        out.push(b - mirror);
    }
    Ok(ExactCoeffVector {
        dims: v.dims.map(|d| d.dual()),
        coeffs: out,
    })
}

/// `h(p) + h'(1-p) == 1` under exact rational arithmetic.
pub fn check_duality_identity(
    h: &ExactCoeffVector,
    hdual: &ExactCoeffVector,
    p: &BigRational,
) -> Result<bool> {
    if h.n() != hdual.n() {
        return Err(Error::DegreeMismatch {
            left: h.n(),
            right: hdual.n(),
        });
    }
    let lhs = eval_nform_exact(h, p)? + eval_nform_exact(hdual, &(BigRational::one() - p))?;
    Ok(lhs.is_one())
}

/// `sum N_k + sum N'_k == 2^n`.
pub fn check_sum_complementarity(h: &ExactCoeffVector, hdual: &ExactCoeffVector) -> bool {
    h.n() == hdual.n() && h.sum() + hdual.sum() == BigUint::one() << h.n()
}

/// `N_k + N'_{n-k} == C(n, k)` for every `k`.
pub fn check_mirror_complementarity(h: &ExactCoeffVector, hdual: &ExactCoeffVector) -> bool {
    if h.n() != hdual.n() {
        return false;
    }
    let n = h.n();
    let row = binomial_row(n);
    (0..=n).all(|k| h.coeffs[k].clone() + &hdual.coeffs[n - k] == *row.get(k))
}

// JSON: {"n": int, "coeffs": [decimal strings], "kind": "exact" | "approx"}

#[derive(Serialize, Deserialize)]
struct CoeffWire {
    n: usize,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dims: Option<HammockDims>,
    coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    params: Option<ApproxParams>,
}

impl From<ExactCoeffVector> for CoeffWire {
    fn from(v: ExactCoeffVector) -> Self {
        CoeffWire {
            n: v.n(),
            kind: "exact".into(),
            dims: v.dims,
            coeffs: v.coeffs.iter().map(|c| c.to_string()).collect(),
            params: None,
        }
    }
}

impl TryFrom<CoeffWire> for ExactCoeffVector {
    type Error = Error;
    fn try_from(w: CoeffWire) -> Result<Self> {
        if w.kind != "exact" {
            return Err(Error::Parse(format!(
                "expected kind \"exact\", got {:?}",
                w.kind
            )));
        }
        check_wire_len(&w)?;
        let coeffs = w
            .coeffs
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<BigUint>()
                    .map_err(|e| Error::Parse(format!("coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let v = ExactCoeffVector::new(coeffs)?;
        match w.dims {
            Some(d) => v.with_dims(d),
            None => Ok(v),
        }
    }
}

impl From<ApproxCoeffVector> for CoeffWire {
    fn from(v: ApproxCoeffVector) -> Self {
        CoeffWire {
            n: v.n(),
            kind: "approx".into(),
            dims: v.dims,
            coeffs: v.coeffs.iter().map(|c| c.to_string()).collect(),
            params: v.params,
        }
    }
}

impl TryFrom<CoeffWire> for ApproxCoeffVector {
    type Error = Error;
    fn try_from(w: CoeffWire) -> Result<Self> {
        if w.kind != "approx" {
            return Err(Error::Parse(format!(
                "expected kind \"approx\", got {:?}",
                w.kind
            )));
        }
        check_wire_len(&w)?;
        let coeffs = w
            .coeffs
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ApproxCoeffVector::new(coeffs, w.dims, w.params))
    }
}

fn check_wire_len(w: &CoeffWire) -> Result<()> {
    if w.coeffs.len() != w.n + 1 {
        return Err(Error::Length {
            expected: w.n + 1,
            got: w.coeffs.len(),
        });
    }
    if let Some(d) = w.dims {
        if d.n() != w.n {
            return Err(Error::Parse(format!("dims {d} do not match n={}", w.n)));
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// l=5, w=3 hammock, N_0..N_15.
    pub fn h5x3() -> ExactCoeffVector {
        ExactCoeffVector::from_u64(&[
            0, 0, 0, 0, 0, 21, 194, 782, 1772, 2443, 2114, 1187, 439, 105, 15, 1,
        ])
        .unwrap()
        .with_dims(HammockDims::new(5, 3).unwrap())
        .unwrap()
    }

    /// l=w=5 hammock, N_0..N_25.
    pub fn h5x5() -> ExactCoeffVector {
        let mut c = vec![0u64; 5];
        c.extend_from_slice(&[
            52, 994, 8983, 50796, 200559, 584302, 1294750, 2220298, 2980002, 3162650, 2684458,
            1842416, 1030779, 471717, 176106, 53078,
        ]);
        c.extend_from_slice(&[12650, 2300, 300, 25, 1]);
        ExactCoeffVector::from_u64(&c)
            .unwrap()
            .with_dims(HammockDims::new(5, 5).unwrap())
            .unwrap()
    }
}
