//! Delta sequences and the ε-regularized singular Beta integrals.
//!
//! `B(ε+iτ, ε−iτ)` behaves like `2ε/(ε²+τ²) = 2π·ω_ε(τ)` near the origin, so
//! pairing it against a probe and letting `ε → 0+` recovers `2π·φ(0)`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::complexfn::log_gamma;
use crate::error::{finite, Error, Result};
use crate::quad::{
    integrate_cosine_transform, integrate_finite, integrate_interval, integrate_pairing,
    integrate_semi_infinite_with_period, EndpointExponents, IntegralResult, PeakedKernel,
    QuadratureSpec,
};

/// A continuous, bounded real test function.
#[derive(Debug, Clone, Copy)]
pub struct Probe {
    name: &'static str,
    eval: fn(f64) -> f64,
    value_at_zero: f64,
    support: (f64, f64),
    bound: f64,
    lipschitz: f64,
}

fn gaussian(t: f64) -> f64 {
    (-t * t).exp()
}

fn cauchy(t: f64) -> f64 {
    1.0 / (1.0 + t * t)
}

fn bump(t: f64) -> f64 {
    if t.abs() < 1.0 {
        (-1.0 / (1.0 - t * t)).exp()
    } else {
        0.0
    }
}

fn constant(_: f64) -> f64 {
    1.0
}

pub const PROBE_NAMES: [&str; 4] = ["gaussian", "cauchy", "bump", "constant"];

impl Probe {
    pub fn gaussian() -> Self {
        Self {
            name: "gaussian",
            eval: gaussian,
            value_at_zero: 1.0,
            support: (f64::NEG_INFINITY, f64::INFINITY),
            bound: 1.0,
            lipschitz: 0.86,
        }
    }

    pub fn cauchy() -> Self {
        Self {
            name: "cauchy",
            eval: cauchy,
            value_at_zero: 1.0,
            support: (f64::NEG_INFINITY, f64::INFINITY),
            bound: 1.0,
            lipschitz: 0.65,
        }
    }

    /// `exp(-1/(1-τ²))` on `(-1, 1)`, zero outside.
    pub fn bump() -> Self {
        Self {
            name: "bump",
            eval: bump,
            value_at_zero: (-1.0f64).exp(),
            support: (-1.0, 1.0),
            bound: (-1.0f64).exp(),
            lipschitz: 0.8,
        }
    }

    pub fn constant() -> Self {
        Self {
            name: "constant",
            eval: constant,
            value_at_zero: 1.0,
            support: (f64::NEG_INFINITY, f64::INFINITY),
            bound: 1.0,
            lipschitz: 0.0,
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "gaussian" => Ok(Self::gaussian()),
            "cauchy" => Ok(Self::cauchy()),
            "bump" => Ok(Self::bump()),
            "constant" => Ok(Self::constant()),
            other => Err(Error::domain(format!(
                "unknown probe '{other}' (expected one of {})",
                PROBE_NAMES.join(", ")
            ))),
        }
    }

    pub fn catalog() -> [Self; 4] {
        [Self::gaussian(), Self::cauchy(), Self::bump(), Self::constant()]
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn eval(&self, tau: f64) -> f64 {
        (self.eval)(tau)
    }

    pub fn value_at_zero(&self) -> f64 {
        self.value_at_zero
    }

    /// Interval outside which the probe vanishes.
    pub fn support_hint(&self) -> (f64, f64) {
        self.support
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }

    /// Lipschitz constant used as the continuity modulus.
    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    /// Dense sampling of `[a, b]` at step `h`; returns the first point where the
    /// bound or the continuity modulus is violated.
    pub fn check_regularity(&self, a: f64, b: f64, h: f64) -> std::result::Result<(), f64> {
        let n = ((b - a) / h).ceil() as usize;
        let mut prev = self.eval(a);
        for i in 0..=n {
            let t = (a + i as f64 * h).min(b);
            let v = self.eval(t);
            if !v.is_finite() || v.abs() > self.bound * (1.0 + 1e-12) {
                return Err(t);
            }
            if (v - prev).abs() > self.lipschitz * h * (1.0 + 1e-9) + 1e-15 {
                return Err(t);
            }
            prev = v;
        }
        Ok(())
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("ε must be positive (got {eps})")))
    }
}

/// The Cauchy delta approximant `ε / (π(ε² + x²))`.
pub fn omega_eps(x: f64, eps: f64) -> Result<f64> {
    check_eps(eps)?;
    let r = x / eps;
    Ok(1.0 / (PI * eps * (1.0 + r * r)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaKernel {
    eps: f64,
}

impl DeltaKernel {
    pub fn new(eps: f64) -> Result<Self> {
        check_eps(eps)?;
        Ok(Self { eps })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn eval(&self, x: f64) -> f64 {
        let r = x / self.eps;
        1.0 / (PI * self.eps * (1.0 + r * r))
    }

    /// The unscaled profile `η(x) = 1/(π(1+x²))`.
    pub fn profile(x: f64) -> f64 {
        1.0 / (PI * (1.0 + x * x))
    }
}

/// Strictly decreasing positive regularization parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonLadder {
    values: Vec<f64>,
}

impl EpsilonLadder {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("ladder is empty"));
        }
        if values.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
            return Err(Error::domain("ladder values must be positive and finite"));
        }
        if values.windows(2).any(|w| !(w[0] > w[1])) {
            return Err(Error::domain("ladder must be strictly decreasing"));
        }
        Ok(Self { values })
    }

    /// `first, first·r, first·r², ...` down to `last` (inclusive, up to rounding).
    pub fn geometric(first: f64, last: f64, ratio: f64) -> Result<Self> {
        if !(ratio > 0.0 && ratio < 1.0) || !(first > last && last > 0.0) {
            return Err(Error::domain("geometric ladder needs first > last > 0 and 0 < ratio < 1"));
        }
        let n = ((last / first).ln() / ratio.ln()).round() as i32;
        Self::new((0..=n).map(|k| first * ratio.powi(k)).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::domain(format!("bad ladder entry '{}'", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last(&self) -> f64 {
        self.values[self.values.len() - 1]
    }
}

impl Default for EpsilonLadder {
    /// `1e-1 … 1e-5` in steps of `10^{1/2}` (nine points).
    fn default() -> Self {
        Self {
            values: (0..9).map(|k| 10f64.powf(-1.0 - 0.5 * k as f64)).collect(),
        }
    }
}

/// One point of a parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub param: f64,
    pub value: Complex64,
    pub error_estimate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairingSweepResult {
    pub points: Vec<SweepPoint>,
    pub extrapolated_limit: Complex64,
    /// NaN when the data admit no power-law fit.
    pub fitted_order: f64,
}

/// Fits `v(ε) = L + C·ε^q` to the last four points.
///
/// `q` is the least-squares slope of `ln|v_{i+1} - v_i|` against `ln ε_i`;
/// `L` and `C` then follow from linear least squares in `ε^q`. Without a
/// positive order the last value is reported as the limit.
pub fn extrapolate(points: &[SweepPoint]) -> (Complex64, f64) {
    let last = match points.last() {
        Some(p) => p.value,
        None => return (Complex64::new(f64::NAN, f64::NAN), f64::NAN),
    };
    if points.len() < 4 {
        return (last, f64::NAN);
    }
    let tail = &points[points.len() - 4..];
    let mut xs = Vec::with_capacity(3);
    let mut ys = Vec::with_capacity(3);
    for w in tail.windows(2) {
        let d = (w[1].value - w[0].value).norm();
        if d == 0.0 || !d.is_finite() || !(w[0].param > 0.0) {
            return (last, f64::NAN);
        }
        xs.push(w[0].param.ln());
        ys.push(d.ln());
    }
    let q = ls_slope(&xs, &ys);
    if !(q > 0.0 && q.is_finite()) {
        return (last, f64::NAN);
    }
    let us: Vec<f64> = tail.iter().map(|p| p.param.powf(q)).collect();
    let n = us.len() as f64;
    let mu = us.iter().sum::<f64>() / n;
    let mv = tail.iter().map(|p| p.value).sum::<Complex64>() / n;
    let suu: f64 = us.iter().map(|u| (u - mu) * (u - mu)).sum();
    if suu == 0.0 {
        return (last, f64::NAN);
    }
    let suv: Complex64 = us.iter().zip(tail).map(|(u, p)| (p.value - mv) * (u - mu)).sum();
    let c = suv / suu;
    (mv - c * mu, q)
}

fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    sxy / sxx
}

/// Runs `eval` over the ladder, keeping completed points if one fails.
pub fn run_sweep<F>(params: &[f64], mut eval: F) -> Result<PairingSweepResult>
where
    F: FnMut(f64) -> Result<IntegralResult>,
{
    let mut points = Vec::with_capacity(params.len());
    for &p in params {
        match eval(p) {
            Ok(r) => points.push(SweepPoint {
                param: p,
                value: r.value,
                error_estimate: r.error_estimate,
            }),
            Err(e) => {
                return Err(Error::Sweep {
                    at: p,
                    completed: points,
                    source: Box::new(e),
                })
            }
        }
    }
    let (extrapolated_limit, fitted_order) = extrapolate(&points);
    Ok(PairingSweepResult {
        points,
        extrapolated_limit,
        fitted_order,
    })
}

/// Euler's formula `Γ(α)Γ(β)/Γ(α+β)`.
pub fn beta(alpha: Complex64, b: Complex64) -> Result<Complex64> {
    let l = log_gamma(alpha)? + log_gamma(b)? - log_gamma(alpha + b)?;
    finite(l.exp(), "beta")
}

fn check_positive_re(alpha: Complex64, b: Complex64) -> Result<()> {
    if alpha.re > 0.0 && b.re > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "Beta integral needs Re α > 0 and Re β > 0 (got α = {alpha}, β = {b})"
        )))
    }
}

/// `∫₀^½ t^{p-1}(1-t)^{q-1} dt`, with `t^{p-1}` integrated exactly and the
/// bounded remainder `t^{p-1}[(1-t)^{q-1} - 1]` by quadrature.
fn half_beta(p: Complex64, q: Complex64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    let head = Complex64::new(0.5, 0.0).powc(p) / p;
    let qm1 = q - 1.0;
    let exps = EndpointExponents::new(p + 1.0, Complex64::new(1.0, 0.0))?;
    let mut r = integrate_finite(
        |x| {
            let t = x.from_left;
            let lt = Complex64::new(t.ln(), 0.0);
            let bracket = expm1(qm1 * (-t).ln_1p());
            Ok((lt * (p - 1.0)).exp() * bracket)
        },
        0.0,
        0.5,
        exps,
        spec,
    )?;
    r.value += head;
    Ok(r)
}

fn expm1(z: Complex64) -> Complex64 {
    if z.norm() < 1e-5 {
        z * (1.0 + z * (0.5 + z / 6.0))
    } else {
        z.exp() - 1.0
    }
}

/// Below this real part the endpoint powers are peeled off analytically.
const SPLIT_BELOW_RE: f64 = 0.25;

/// `∫₀¹ t^{α-1}(1-t)^{β-1} dt` by quadrature.
pub fn beta_integral(alpha: Complex64, b: Complex64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    check_positive_re(alpha, b)?;
    if alpha.re >= SPLIT_BELOW_RE && b.re >= SPLIT_BELOW_RE {
        let exps = EndpointExponents::new(alpha, b)?;
        return integrate_finite(
            |x| {
                let l = (alpha - 1.0) * x.from_left.ln() + (b - 1.0) * x.from_right.ln();
                Ok(l.exp())
            },
            0.0,
            1.0,
            exps,
            spec,
        );
    }
    // small real parts: split at ½ and peel off the singular power exactly
    let left = half_beta(alpha, b, spec)?;
    let right = half_beta(b, alpha, spec)?;
    Ok(IntegralResult {
        value: left.value + right.value,
        error_estimate: left.error_estimate + right.error_estimate,
        evaluations: left.evaluations + right.evaluations,
        truncation_point: None,
    })
}

/// `∫₀^∞ u^{α-1}(1+u)^{-α-β} du` by semi-infinite quadrature.
///
/// With `u = e^s` the integrand decays like `e^{-Re β·s}` for `s → ∞` and
/// like `e^{Re α·s}` for `s → -∞`; each half line is integrated separately.
pub fn beta_semi_infinite(alpha: Complex64, b: Complex64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    check_positive_re(alpha, b)?;
    let ab = alpha + b;
    // ln(1 + e^s) without overflow
    let softplus = |s: f64| if s > 0.0 { s + (-s).exp().ln_1p() } else { s.exp().ln_1p() };
    let g = |s: f64| (alpha * s - ab * softplus(s)).exp();
    let period = |im: f64| if im != 0.0 { Some(2.0 * PI / im.abs()) } else { None };
    let right = integrate_semi_infinite_with_period(|s| Ok(g(s)), b.re, period(b.im), spec)?;
    let left = integrate_semi_infinite_with_period(|s| Ok(g(-s)), alpha.re, period(alpha.im), spec)?;
    Ok(IntegralResult {
        value: left.value + right.value,
        error_estimate: left.error_estimate + right.error_estimate,
        evaluations: left.evaluations + right.evaluations,
        truncation_point: right.truncation_point,
    })
}

/// `B(ε+iτ, ε-iτ)` through the Euler formula.
pub fn beta_reg(tau: f64, eps: f64) -> Result<Complex64> {
    check_eps(eps)?;
    let p = Complex64::new(eps, tau);
    beta(p, p.conj())
}

/// `beta_reg` as a pairing kernel with its `ε`-wide peak declared.
pub fn beta_reg_kernel(eps: f64) -> PeakedKernel<impl Fn(f64) -> Result<Complex64>> {
    PeakedKernel {
        f: move |tau| beta_reg(tau, eps),
        width: eps,
    }
}

/// Limit predicted for `∫_a^b φ·ω_ε`: φ(0), φ(0)/2 at an endpoint, else 0.
pub fn delta_target(probe: &Probe, a: f64, b: f64) -> f64 {
    if a < 0.0 && 0.0 < b {
        probe.value_at_zero()
    } else if a == 0.0 || b == 0.0 {
        0.5 * probe.value_at_zero()
    } else {
        0.0
    }
}

/// Pairings `∫_a^b φ(τ)·B(ε+iτ, ε-iτ) dτ` along the ladder.
pub fn delta_claim_sweep(
    probe: &Probe,
    a: f64,
    b: f64,
    ladder: &EpsilonLadder,
    spec: &QuadratureSpec,
) -> Result<PairingSweepResult> {
    run_sweep(ladder.values(), |eps| {
        integrate_pairing(probe, &beta_reg_kernel(eps), a, b, spec)
    })
}

/// `∫₀^∞ t^{ε+iτ-1}(1+t)^{-2ε} dt`, the regularized Mellin transform of 1,
/// mapped to `[0, 1]` by `t = u/(1-u)` and integrated there.
pub fn mellin_reg_forward(tau: f64, eps: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::domain(format!("Mellin regularization needs 0 < ε < 1/2 (got {eps})")));
    }
    let p = Complex64::new(eps, tau);
    beta_integral(p, p.conj(), spec)
}

/// Pairings of the regularized forward Mellin transform against a probe.
pub fn mellin_forward_sweep(
    probe: &Probe,
    a: f64,
    b: f64,
    ladder: &EpsilonLadder,
    spec: &QuadratureSpec,
) -> Result<PairingSweepResult> {
    let inner = spec.with_rel_tol(spec.rel_tol.max(1e-10) * 10.0);
    run_sweep(ladder.values(), |eps| {
        let kernel = PeakedKernel {
            f: |tau| mellin_reg_forward(tau, eps, &inner).map(|r| r.value),
            width: eps,
        };
        integrate_pairing(probe, &kernel, a, b, spec)
    })
}

/// `∫ℝ t^{-ix} ω_ε(x) dx` by quadrature (closed form `exp(-ε|ln t|)`).
pub fn mellin_inverse_check(t: f64, eps: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("inverse Mellin needs t > 0 (got {t})")));
    }
    check_eps(eps)?;
    // x = εy turns ω_ε into η(y); the odd sine part integrates to zero
    let omega = eps * t.ln().abs();
    if omega == 0.0 {
        // y = tan θ maps the Cauchy profile onto the constant 1/π
        return integrate_interval(|_| Complex64::new(1.0 / PI, 0.0), -FRAC_PI_2, FRAC_PI_2, spec);
    }
    integrate_cosine_transform(|y| 2.0 * DeltaKernel::profile(y), omega, Some(1.0), spec)
}
