//! Simultaneous cubic approximation of a hammock's coefficients and those of
//! its dual.
//!
//! The coefficient function of `H(l,w)` is modelled as
//!
//! ```text
//! f(x) = 0                                   0 <= x <= l-1
//!        N_l (x - l + 1)                     l-1 < x <= l
//!        B(x)                                l < x <= n-w
//!        chord to (k, C(n,k))                k-1 < x <= k,  k > n-w
//! ```
//!
//! with the cubic
//! `B(x) = [N_l u^3 + 3a u^2 v + 3b u v^2 + N_{n-w} v^3] / (n-w-l)^3`,
//! `u = n-w-x`, `v = x-l`. The dual side has the same shape with `l` and `w`
//! swapped and control values `c`, `d`. The four control values come from
//! two known interior coefficients per side plus the mirror identity
//! `N_k + N'_{n-k} = C(n,k)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntegerSystem};
use crate::poly::{
    binomial, dual_coeffs, ApproxCoeffVector, ApproxParams, ExactCoeffVector, HammockDims,
    SolveMode,
};

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn signed(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

fn to_f64(v: &BigUint) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}

/// Known coefficients feeding the approximation: `N_l`, `N_{l+t}` of the
/// hammock and `N'_w`, `N'_{w+s}` of its dual. `t` and `s` are offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownAnchors {
    dims: HammockDims,
    t: usize,
    s: usize,
    n_l: BigUint,
    n_lt: BigUint,
    n_w_dual: BigUint,
    n_ws_dual: BigUint,
}

impl KnownAnchors {
    pub fn new(
        dims: HammockDims,
        t: usize,
        s: usize,
        n_l: BigUint,
        n_lt: BigUint,
        n_w_dual: BigUint,
        n_ws_dual: BigUint,
    ) -> Result<Self> {
        let span = dims.cubic_span();
        if span < 2 {
            return Err(Error::Degenerate { span });
        }
        let span = span as usize;
        for (name, off) in [("t", t), ("s", s)] {
            if off == 0 || off >= span {
                return Err(Error::Anchors(format!(
                    "offset {name}={off} must lie in 1..={}",
                    span - 1
                )));
            }
        }
        let (l, w, n) = (dims.l(), dims.w(), dims.n());
        if n_l.is_zero() || n_lt <= n_l {
            return Err(Error::Anchors(format!(
                "need N_{{l+t}} > N_l > 0, got N_{l}={n_l}, N_{}={n_lt}",
                l + t
            )));
        }
        if n_w_dual.is_zero() || n_ws_dual <= n_w_dual {
            return Err(Error::Anchors(format!(
                "need N'_{{w+s}} > N'_w > 0, got N'_{w}={n_w_dual}, N'_{}={n_ws_dual}",
                w + s
            )));
        }
        for (label, k, v) in [
            ("N", l, &n_l),
            ("N", l + t, &n_lt),
            ("N'", w, &n_w_dual),
            ("N'", w + s, &n_ws_dual),
        ] {
            let c = binomial(n, k);
            if v > &c {
                return Err(Error::Anchors(format!(
                    "{label}_{k}={v} exceeds C({n},{k})={c}"
                )));
            }
        }
        Ok(KnownAnchors {
            dims,
            t,
            s,
            n_l,
            n_lt,
            n_w_dual,
            n_ws_dual,
        })
    }

    pub fn from_u64(
        dims: HammockDims,
        t: usize,
        s: usize,
        n_l: u64,
        n_lt: u64,
        n_w_dual: u64,
        n_ws_dual: u64,
    ) -> Result<Self> {
        Self::new(
            dims,
            t,
            s,
            n_l.into(),
            n_lt.into(),
            n_w_dual.into(),
            n_ws_dual.into(),
        )
    }

    /// Reads the four anchors off a known exact vector of `H(l,w)`.
    pub fn from_exact(h: &ExactCoeffVector, t: usize, s: usize) -> Result<Self> {
        let dims = h
            .dims()
            .ok_or_else(|| Error::Anchors("exact vector carries no hammock dimensions".into()))?;
        let (l, w) = (dims.l(), dims.w());
        if l + t > dims.n() || w + s > dims.n() {
            return Err(Error::Anchors("anchor index beyond n".into()));
        }
        let dual = dual_coeffs(h)?;
        Self::new(
            dims,
            t,
            s,
            h.get(l).clone(),
            h.get(l + t).clone(),
            dual.get(w).clone(),
            dual.get(w + s).clone(),
        )
    }

    pub fn dims(&self) -> HammockDims {
        self.dims
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn s(&self) -> usize {
        self.s
    }
    pub fn n_l(&self) -> &BigUint {
        &self.n_l
    }
    pub fn n_lt(&self) -> &BigUint {
        &self.n_lt
    }
    pub fn n_w_dual(&self) -> &BigUint {
        &self.n_w_dual
    }
    pub fn n_ws_dual(&self) -> &BigUint {
        &self.n_ws_dual
    }

    fn span(&self) -> usize {
        self.dims.cubic_span() as usize
    }

    /// `N_{n-w} = C(n,w) - N'_w`.
    pub fn n_nw(&self) -> BigUint {
        binomial(self.dims.n(), self.dims.w()) - &self.n_w_dual
    }

    /// `N'_{n-l} = C(n,l) - N_l`.
    pub fn n_nl_dual(&self) -> BigUint {
        binomial(self.dims.n(), self.dims.l()) - &self.n_l
    }

    /// `N_{n-w-s} = C(n,w+s) - N'_{w+s}`.
    pub fn n_nws(&self) -> BigUint {
        binomial(self.dims.n(), self.dims.w() + self.s) - &self.n_ws_dual
    }

    /// `N'_{n-l-t} = C(n,l+t) - N_{l+t}`.
    pub fn n_nlt_dual(&self) -> BigUint {
        binomial(self.dims.n(), self.dims.l() + self.t) - &self.n_lt
    }
}

/// Which constraints close the system for `(a, b, c, d)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    /// Mirror conditions at `n-l-t` and `n-w-s`; decouples into two 2x2
    /// systems.
    Unique,
    /// Bridge conditions `f(x) + f'(n-x) = C(n,x)` at `x1` and `x2`.
    General { x1: usize, x2: usize },
}

impl Mode {
    pub fn kind(&self) -> SolveMode {
        match self {
            Mode::Unique => SolveMode::Unique,
            Mode::General { .. } => SolveMode::General,
        }
    }
}

/// One side of the model, in its own `(lead, trail)` orientation.
struct Side<'a> {
    lead: usize,
    trail: usize,
    n: usize,
    start: f64,
    end: f64,
    p1: f64,
    p2: f64,
    binoms: &'a [f64],
}

impl Side<'_> {
    fn cubic(&self, x: f64) -> f64 {
        let span = (self.n - self.trail - self.lead) as f64;
        let u = (self.n - self.trail) as f64 - x;
        let v = x - self.lead as f64;
        (self.start * u * u * u
            + 3.0 * self.p1 * u * u * v
            + 3.0 * self.p2 * u * v * v
            + self.end * v * v * v)
            / (span * span * span)
    }

    fn eval(&self, x: f64) -> Result<f64> {
        let n = self.n as f64;
        if !(0.0..=n).contains(&x) {
            return Err(Error::Domain {
                value: x,
                lo: 0.0,
                hi: n,
            });
        }
        let lead = self.lead as f64;
        let top = (self.n - self.trail) as f64;
        Ok(if x <= lead - 1.0 {
            0.0
        } else if x <= lead {
            self.start * (x - lead + 1.0)
        } else if x <= top {
            self.cubic(x)
        } else {
            let k = (x.ceil() as usize).min(self.n);
            let lo = if k - 1 == self.n - self.trail {
                self.end
            } else {
                self.binoms[k - 1]
            };
            let hi = self.binoms[k];
            lo + (hi - lo) * (x - (k - 1) as f64)
        })
    }
}

/// Solved cubic model for `f_(l,w)` and `f_(w,l)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplineModel {
    anchors: KnownAnchors,
    mode: Mode,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    binoms: Vec<f64>,
}

impl SplineModel {
    /// Builds a model from explicit control values.
    pub fn from_controls(anchors: KnownAnchors, mode: Mode, controls: [f64; 4]) -> Self {
        let n = anchors.dims.n();
        let binoms = (0..=n).map(|k| to_f64(&binomial(n, k))).collect();
        let [a, b, c, d] = controls;
        SplineModel {
            anchors,
            mode,
            a,
            b,
            c,
            d,
            binoms,
        }
    }

    pub fn dims(&self) -> HammockDims {
        self.anchors.dims
    }
    pub fn anchors(&self) -> &KnownAnchors {
        &self.anchors
    }
    pub fn mode(&self) -> Mode {
        self.mode
    }
    /// `(a, b, c, d)`.
    pub fn controls(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    fn primal(&self) -> Side<'_> {
        let dims = self.anchors.dims;
        Side {
            lead: dims.l(),
            trail: dims.w(),
            n: dims.n(),
            start: to_f64(&self.anchors.n_l),
            end: to_f64(&self.anchors.n_nw()),
            p1: self.a,
            p2: self.b,
            binoms: &self.binoms,
        }
    }

    fn dual(&self) -> Side<'_> {
        let dims = self.anchors.dims;
        Side {
            lead: dims.w(),
            trail: dims.l(),
            n: dims.n(),
            start: to_f64(&self.anchors.n_w_dual),
            end: to_f64(&self.anchors.n_nl_dual()),
            p1: self.c,
            p2: self.d,
            binoms: &self.binoms,
        }
    }

    /// `f_(l,w)(x)` for `x` in `[0, n]`.
    pub fn eval_f_lw(&self, x: f64) -> Result<f64> {
        self.primal().eval(x)
    }

    /// `f_(w,l)(x)` for `x` in `[0, n]`.
    pub fn eval_f_wl(&self, x: f64) -> Result<f64> {
        self.dual().eval(x)
    }

    /// Relative residuals of the four interpolation conditions
    /// `f(l+t) = N_{l+t}`, `f'(w+s) = N'_{w+s}`, `f'(n-l-t) = N'_{n-l-t}`,
    /// `f(n-w-s) = N_{n-w-s}`.
    pub fn interpolation_residuals(&self) -> [f64; 4] {
        let a = &self.anchors;
        let (l, w, n) = (a.dims.l(), a.dims.w(), a.dims.n());
        let rel = |got: f64, want: &BigUint| {
            let want = to_f64(want);
            (got - want).abs() / want.abs().max(1.0)
        };
        [
            rel(self.eval_f_lw((l + a.t) as f64).unwrap(), &a.n_lt),
            rel(self.eval_f_wl((w + a.s) as f64).unwrap(), &a.n_ws_dual),
            rel(
                self.eval_f_wl((n - l - a.t) as f64).unwrap(),
                &a.n_nlt_dual(),
            ),
            rel(self.eval_f_lw((n - w - a.s) as f64).unwrap(), &a.n_nws()),
        ]
    }

    /// Relative residual of `f(x) + f'(n-x) = C(n,x)` at an integer `x`.
    pub fn bridge_residual(&self, x: usize) -> Result<f64> {
        let n = self.anchors.dims.n();
        if x > n {
            return Err(Error::Domain {
                value: x as f64,
                lo: 0.0,
                hi: n as f64,
            });
        }
        let got = self.eval_f_lw(x as f64)? + self.eval_f_wl((n - x) as f64)?;
        let want = self.binoms[x];
        Ok((got - want).abs() / want.max(1.0))
    }

    fn coeff_vector(
        &self,
        side: Side<'_>,
        dims: HammockDims,
        params: ApproxParams,
    ) -> ApproxCoeffVector {
        let (lead, top, n) = (side.lead, side.n - side.trail, side.n);
        let coeffs = (0..=n)
            .map(|k| match k {
                k if k < lead => 0.0,
                k if k == lead => side.start,
                k if k < top => side.cubic(k as f64),
                k if k == top => side.end,
                k => side.binoms[k],
            })
            .collect();
        ApproxCoeffVector::new(coeffs, Some(dims), Some(params))
    }

    pub fn params(&self) -> ApproxParams {
        let dims = self.anchors.dims;
        let (x1, x2) = match self.mode {
            Mode::Unique => (dims.l() + 1, dims.n() - dims.w() - 1),
            Mode::General { x1, x2 } => (x1, x2),
        };
        ApproxParams {
            s: self.anchors.s,
            t: self.anchors.t,
            x1,
            x2,
            mode: self.mode.kind(),
        }
    }

    /// Approximate coefficients `f_(l,w)(0..=n)`; the pinned entries (zeros
    /// below `l`, `N_l`, `N_{n-w}` and the binomial tail) are exact.
    pub fn primal_coeffs(&self) -> ApproxCoeffVector {
        self.coeff_vector(self.primal(), self.anchors.dims, self.params())
    }

    /// Approximate coefficients `f_(w,l)(0..=n)` of the dual.
    pub fn dual_coeffs(&self) -> ApproxCoeffVector {
        self.coeff_vector(self.dual(), self.anchors.dims.dual(), self.params())
    }
}

/// The decoupled pair of 2x2 systems: `(a, b)` and `(c, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueSystems {
    pub primal: IntegerSystem,
    pub dual: IntegerSystem,
}

/// An assembled system for the control values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ControlSystem {
    Unique(UniqueSystems),
    General(IntegerSystem),
}

/// Row `[3 (m-o)^2 o, 3 (m-o) o^2]` of the condition `f(lead + o) = value`.
fn near_row(span: usize, o: usize) -> [BigInt; 2] {
    let r = big(span - o);
    let o = big(o);
    [3 * &r * &r * &o, 3 * &r * &o * &o]
}

/// Row `[3 o^2 (m-o), 3 o (m-o)^2]` of the condition `f(top - o) = value`.
fn far_row(span: usize, o: usize) -> [BigInt; 2] {
    let [x, y] = near_row(span, o);
    [y, x]
}

/// Right side `value m^3 - start (m-o)^3 - end o^3` for `f(lead + o)`.
fn rhs(span: usize, o: usize, value: &BigUint, start: &BigUint, end: &BigUint) -> BigInt {
    let m = big(span);
    let r = big(span - o);
    let o = big(o);
    signed(value) * &m * &m * &m - signed(start) * &r * &r * &r - signed(end) * &o * &o * &o
}

/// Two decoupled 2x2 systems closing the model with the mirror conditions.
pub fn assemble_unique_system(anchors: &KnownAnchors) -> Result<UniqueSystems> {
    let m = anchors.span();
    let (t, s) = (anchors.t, anchors.s);
    let n_nw = anchors.n_nw();
    let n_nl_dual = anchors.n_nl_dual();

    // f(l+t) = N_{l+t};  f(n-w-s) = N_{n-w-s}
    let a1 = rhs(m, t, &anchors.n_lt, &anchors.n_l, &n_nw);
    let a4 = rhs(m, m - s, &anchors.n_nws(), &anchors.n_l, &n_nw);
    let primal = IntegerSystem::new(
        vec![near_row(m, t).to_vec(), far_row(m, s).to_vec()],
        vec![a1, a4],
    )?;

    // f'(w+s) = N'_{w+s};  f'(n-l-t) = N'_{n-l-t}
    let a2 = rhs(m, s, &anchors.n_ws_dual, &anchors.n_w_dual, &n_nl_dual);
    let a3 = rhs(
        m,
        m - t,
        &anchors.n_nlt_dual(),
        &anchors.n_w_dual,
        &n_nl_dual,
    );
    let dual = IntegerSystem::new(
        vec![near_row(m, s).to_vec(), far_row(m, t).to_vec()],
        vec![a2, a3],
    )?;

    Ok(UniqueSystems { primal, dual })
}

/// Open interval of admissible bridge points for the general system.
pub fn bridge_interval(anchors: &KnownAnchors) -> (i64, i64) {
    let d = anchors.dims;
    let (l, w, n) = (d.l() as i64, d.w() as i64, d.n() as i64);
    let (t, s) = (anchors.t as i64, anchors.s as i64);
    let lo = (l + t).max(w + s).max(l);
    let hi = (n - w + s).min(n - l + t).min(n - w);
    (lo, hi)
}

/// 4x4 system: the two near-anchor conditions and the bridge conditions
/// `f(x) + f'(n-x) = C(n,x)` at `x1` and `x2`.
pub fn assemble_general_system(
    anchors: &KnownAnchors,
    x1: usize,
    x2: usize,
) -> Result<IntegerSystem> {
    if anchors.s == anchors.t {
        return Err(Error::Anchors(format!(
            "general mode needs s != t (both are {})",
            anchors.s
        )));
    }
    if anchors.s == anchors.dims.n().saturating_sub(anchors.t) {
        return Err(Error::Anchors("general mode needs s != n - t".into()));
    }
    let (lo, hi) = bridge_interval(anchors);
    for x in [x1, x2] {
        if !(lo < x as i64 && (x as i64) < hi) {
            return Err(Error::BridgePoint {
                x: x as i64,
                lo,
                hi,
            });
        }
    }
    if x1 == x2 {
        return Err(Error::BridgePoint {
            x: x2 as i64,
            lo,
            hi,
        });
    }

    let m = anchors.span();
    let d = anchors.dims;
    let (l, w, n) = (d.l(), d.w(), d.n());
    let (t, s) = (anchors.t, anchors.s);
    let zero = BigInt::zero;

    let [r1a, r1b] = near_row(m, t);
    let [r2c, r2d] = near_row(m, s);
    let mut rows = vec![
        vec![r1a, r1b, zero(), zero()],
        vec![zero(), zero(), r2c, r2d],
    ];
    let mut rhs_col = vec![
        rhs(m, t, &anchors.n_lt, &anchors.n_l, &anchors.n_nw()),
        rhs(
            m,
            s,
            &anchors.n_ws_dual,
            &anchors.n_w_dual,
            &anchors.n_nl_dual(),
        ),
    ];
    for x in [x1, x2] {
        let (row, b) = bridge_row(l, w, n, x);
        rows.push(row.to_vec());
        rhs_col.push(b);
    }
    IntegerSystem::new(rows, rhs_col)
}

/// Bridge row at `x`: coefficients `3 p_lw^(3;1)(x), 3 p_lw^(3;2)(x),
/// 3 p_wl^(3;1)(n-x), 3 p_wl^(3;2)(n-x)` and right side
/// `C(n,x) m^3 - C(n,l) (n-w-x)^3 - C(n,w) (x-l)^3`.
fn bridge_row(l: usize, w: usize, n: usize, x: usize) -> ([BigInt; 4], BigInt) {
    let m = big(n - w - l);
    let v = big(x - l); // x - l, also (n-l) - (n-x)
    let u = big(n - w - x); // n-w-x, also (n-x) - w
    let row = [
        3 * &v * &u * &u,
        3 * &v * &v * &u,
        3 * &u * &v * &v,
        3 * &u * &u * &v,
    ];
    let b = signed(&binomial(n, x)) * &m * &m * &m
        - signed(&binomial(n, l)) * &u * &u * &u
        - signed(&binomial(n, w)) * &v * &v * &v;
    (row, b)
}

/// Solves for `(a, b, c, d)`.
pub fn solve_system(system: &ControlSystem) -> Result<[f64; 4]> {
    match system {
        ControlSystem::Unique(u) => {
            let ab = linalg::solve(&u.primal)?;
            let cd = linalg::solve(&u.dual)?;
            Ok([ab[0], ab[1], cd[0], cd[1]])
        }
        ControlSystem::General(g) => {
            let x = linalg::solve(g)?;
            Ok([x[0], x[1], x[2], x[3]])
        }
    }
}

/// Output of the approximation pipeline.
#[derive(Clone, Debug, PartialEq)]
pub struct Approximation {
    pub primal: ApproxCoeffVector,
    pub dual: ApproxCoeffVector,
    pub model: SplineModel,
}

/// Assembles and solves the control system, then samples both spline
/// functions at the integers.
pub fn approximate(anchors: &KnownAnchors, mode: Mode) -> Result<Approximation> {
    let system = match mode {
        Mode::Unique => ControlSystem::Unique(assemble_unique_system(anchors)?),
        Mode::General { x1, x2 } => {
            ControlSystem::General(assemble_general_system(anchors, x1, x2)?)
        }
    };
    let controls = solve_system(&system)?;
    let model = SplineModel::from_controls(anchors.clone(), mode, controls);
    Ok(Approximation {
        primal: model.primal_coeffs(),
        dual: model.dual_coeffs(),
        model,
    })
}

/// Worst-case error of the approximation, uniform in `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorBound {
    /// `M = max{(l+1)^(l+1) (n-l-1)^(n-l-1), (w+1)^(w+1) (n-w-1)^(n-w-1)}`.
    pub m: BigUint,
    /// Exact per-network bound.
    pub exact: BigRational,
    pub per_network: f64,
    /// Bound on `|1 - h~(p) - h~'(1-p)|`, twice the per-network value.
    pub cumulative: f64,
}

/// `M (n-w-l-1) / n^n * |C(n, n/2) - min(C(n,l+1), C(n,w+1))|`.
pub fn error_bound(dims: HammockDims) -> Result<ErrorBound> {
    let span = dims.cubic_span();
    if span < 2 {
        return Err(Error::Degenerate { span });
    }
    let (l, w, n) = (dims.l(), dims.w(), dims.n());
    let term = |a: usize| -> BigUint {
        num_traits::pow(BigUint::from(a + 1), a + 1)
            * num_traits::pow(BigUint::from(n - a - 1), n - a - 1)
    };
    let m = term(l).max(term(w));
    let gap = {
        let mid = signed(&binomial(n, n / 2));
        let low = signed(&binomial(n, l + 1).min(binomial(n, w + 1)));
        (mid - low).abs()
    };
    let numer = signed(&m) * BigInt::from(span - 1) * gap;
    let denom = num_traits::pow(BigInt::from(n), n);
    let exact = BigRational::new(numer, denom);
    let per_network = exact.to_f64().unwrap_or(f64::INFINITY);
    Ok(ErrorBound {
        m,
        exact,
        per_network,
        cumulative: 2.0 * per_network,
    })
}

// JSON form of a solved model. Big integers and reals are decimal strings.

#[derive(Serialize, Deserialize)]
struct AnchorsWire {
    t: usize,
    s: usize,
    n_l: String,
    n_lt: String,
    n_w_dual: String,
    n_ws_dual: String,
}

#[derive(Serialize, Deserialize)]
struct EndpointsWire {
    n_nw: String,
    n_nl_dual: String,
    n_nws: String,
    n_nlt_dual: String,
}

#[derive(Serialize, Deserialize)]
struct ModelWire {
    dims: HammockDims,
    mode: SolveMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x2: Option<usize>,
    anchors: AnchorsWire,
    a: String,
    b: String,
    c: String,
    d: String,
    derived: EndpointsWire,
}

impl Serialize for SplineModel {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let a = &self.anchors;
        let (x1, x2) = match self.mode {
            Mode::Unique => (None, None),
            Mode::General { x1, x2 } => (Some(x1), Some(x2)),
        };
        ModelWire {
            dims: a.dims,
            mode: self.mode.kind(),
            x1,
            x2,
            anchors: AnchorsWire {
                t: a.t,
                s: a.s,
                n_l: a.n_l.to_string(),
                n_lt: a.n_lt.to_string(),
                n_w_dual: a.n_w_dual.to_string(),
                n_ws_dual: a.n_ws_dual.to_string(),
            },
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            d: self.d.to_string(),
            derived: EndpointsWire {
                n_nw: a.n_nw().to_string(),
                n_nl_dual: a.n_nl_dual().to_string(),
                n_nws: a.n_nws().to_string(),
                n_nlt_dual: a.n_nlt_dual().to_string(),
            },
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SplineModel {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = ModelWire::deserialize(de)?;
        let int = |s: &str| s.trim().parse::<BigUint>().map_err(D::Error::custom);
        let real = |s: &str| s.trim().parse::<f64>().map_err(D::Error::custom);
        let anchors = KnownAnchors::new(
            w.dims,
            w.anchors.t,
            w.anchors.s,
            int(&w.anchors.n_l)?,
            int(&w.anchors.n_lt)?,
            int(&w.anchors.n_w_dual)?,
            int(&w.anchors.n_ws_dual)?,
        )
        .map_err(D::Error::custom)?;
        let mode = match (w.mode, w.x1, w.x2) {
            (SolveMode::Unique, _, _) => Mode::Unique,
            (SolveMode::General, Some(x1), Some(x2)) => Mode::General { x1, x2 },
            (SolveMode::General, _, _) => {
                return Err(D::Error::custom("general mode requires x1 and x2"))
            }
        };
        Ok(SplineModel::from_controls(
            anchors,
            mode,
            [real(&w.a)?, real(&w.b)?, real(&w.c)?, real(&w.d)?],
        ))
    }
}

impl ErrorBound {
    /// True when `value <= per_network` bound, compared exactly.
    pub fn admits(&self, value: f64) -> bool {
        match BigRational::from_float(value) {
            Some(v) => v <= self.exact,
            None => false,
        }
    }
}
