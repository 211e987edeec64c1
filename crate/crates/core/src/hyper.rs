//! Gauss hypergeometric series and the imaginary-parameter family
//! `₂F₁(2iτ, ε+iτ; 2ε+2iτ; 1)`.
//!
//! At unit argument the family equals
//! `Γ(2ε+2iτ)Γ(ε−iτ) / (Γ(2ε)Γ(ε+iτ)) = f(ε,τ)·(ε+iτ)·ω_ε(τ)` with a
//! prefactor `f` that is smooth at `ε = 0`, so it tends weakly to zero.

use std::f64::consts::PI;
use std::str::FromStr;

use num_complex::Complex64;

use crate::complexfn::{digamma, log_gamma, trigamma, POLE_TOLERANCE};
use crate::distrib::{omega_eps, run_sweep, EpsilonLadder, PairingSweepResult, Probe};
use crate::error::{finite, Error, Result};
use crate::quad::{integrate_pairing, integrate_panels, IntegralResult, PeakedKernel, QuadratureSpec};

/// Largest `|z|` accepted by [`hyp2f1`].
pub const MAX_SERIES_ABS_Z: f64 = 1.0 - 1e-4;
/// Consecutive negligible terms required before the series is declared summed.
pub const QUIET_TERMS: usize = 50;
const SERIES_REL_TOL: f64 = 1e-16;
const TERM_BUDGET: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Params {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl Hyp2F1Params {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Result<Self> {
        let n = c.re.round();
        if n <= 0.0 && (c - n).norm() <= POLE_TOLERANCE {
            return Err(Error::Pole { at: n as i64 });
        }
        Ok(Self { a, b, c })
    }

    pub fn real(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(Complex64::new(a, 0.0), Complex64::new(b, 0.0), Complex64::new(c, 0.0))
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
            c: self.c,
        }
    }
}

/// Power series of `₂F₁(a, b; c; z)` for `|z| ≤ 1 − 10⁻⁴`.
pub fn hyp2f1(p: &Hyp2F1Params, z: Complex64) -> Result<Complex64> {
    let n = p.c.re.round();
    if n <= 0.0 && (p.c - n).norm() <= POLE_TOLERANCE {
        return Err(Error::Pole { at: n as i64 });
    }
    if !(z.norm() <= MAX_SERIES_ABS_Z) {
        return Err(Error::domain(format!(
            "|z| = {} exceeds the series limit {MAX_SERIES_ABS_Z}",
            z.norm()
        )));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0;
    for k in 0..TERM_BUDGET {
        let kf = k as f64;
        term *= (p.a + kf) * (p.b + kf) / ((p.c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.norm() <= SERIES_REL_TOL * sum.norm() {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                return finite(sum, "hypergeometric series");
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::SeriesNonConvergence {
        partial: sum,
        terms: TERM_BUDGET,
    })
}

/// Gauss's value `Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b))` of `₂F₁(a, b; c; 1)`.
pub fn gauss_sum(p: &Hyp2F1Params) -> Result<Complex64> {
    if !(p.c.re > p.b.re) {
        return Err(Error::domain("Gauss summation needs Re c > Re b"));
    }
    if !(p.b.re > 0.0) {
        return Err(Error::domain("Gauss summation needs Re b > 0"));
    }
    if !((p.c - p.a - p.b).re > 0.0) {
        return Err(Error::domain("Gauss summation needs Re(c − a − b) > 0"));
    }
    if p.a == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let l = log_gamma(p.c)? + log_gamma(p.c - p.a - p.b)? - log_gamma(p.c - p.a)? - log_gamma(p.c - p.b)?;
    finite(l.exp(), "Gauss sum")
}

/// Parameters `a = 2iτ, b = ε+iτ, c = 2ε+2iτ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyPoint {
    tau: f64,
    eps: f64,
}

impl FamilyPoint {
    pub fn new(tau: f64, eps: f64) -> Result<Self> {
        if !(eps >= 0.0) || !eps.is_finite() || !tau.is_finite() {
            return Err(Error::domain(format!("family point needs finite τ and ε ≥ 0 (got τ={tau}, ε={eps})")));
        }
        Ok(Self { tau, eps })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn params(&self) -> Result<Hyp2F1Params> {
        Hyp2F1Params::new(
            Complex64::new(0.0, 2.0 * self.tau),
            Complex64::new(self.eps, self.tau),
            Complex64::new(2.0 * self.eps, 2.0 * self.tau),
        )
    }
}

fn require_positive_eps(pt: &FamilyPoint) -> Result<()> {
    if pt.eps > 0.0 {
        Ok(())
    } else {
        Err(Error::domain("the family closed form needs ε > 0"))
    }
}

/// `Γ(2ε+2iτ)Γ(ε−iτ) / (Γ(2ε)Γ(ε+iτ))`.
pub fn family_closed_form(pt: &FamilyPoint) -> Result<Complex64> {
    require_positive_eps(pt)?;
    let (e, t) = (pt.eps, pt.tau);
    let l = log_gamma(Complex64::new(2.0 * e, 2.0 * t))? + log_gamma(Complex64::new(e, -t))?
        - log_gamma(Complex64::new(2.0 * e, 0.0))?
        - log_gamma(Complex64::new(e, t))?;
    finite(l.exp(), "family closed form")
}

/// The same value after the duplication formula:
/// `2^{2(ε+iτ)−1} π^{−1/2} Γ(ε+iτ+½)Γ(ε−iτ) / Γ(2ε)`.
pub fn family_duplication_form(pt: &FamilyPoint) -> Result<Complex64> {
    require_positive_eps(pt)?;
    let (e, t) = (pt.eps, pt.tau);
    let s = Complex64::new(e, t);
    let l = (2.0 * s - 1.0) * std::f64::consts::LN_2 - 0.5 * PI.ln() + log_gamma(s + 0.5)?
        + log_gamma(s.conj())?
        - log_gamma(Complex64::new(2.0 * e, 0.0))?;
    finite(l.exp(), "duplication form")
}

fn ln_f(eps: f64, tau: f64) -> Result<Complex64> {
    let s = Complex64::new(eps, tau);
    Ok(0.5 * PI.ln() + 2.0 * s * std::f64::consts::LN_2 + log_gamma(s + 0.5)? + log_gamma(s.conj() + 1.0)?
        - log_gamma(Complex64::new(2.0 * eps + 1.0, 0.0))?)
}

/// `f(ε,τ) = √π·2^{2(ε+iτ)}·Γ(ε+iτ+½)Γ(ε−iτ+1) / Γ(2ε+1)`, the smooth factor
/// in `family = f·(ε+iτ)·ω_ε(τ)`.
pub fn f_factor(eps: f64, tau: f64) -> Result<Complex64> {
    finite(ln_f(eps, tau)?.exp(), "f factor")
}

/// `(∂f/∂ε, ∂²f/∂ε²)` from the digamma and trigamma expressions.
pub fn f_derivatives(eps: f64, tau: f64) -> Result<(Complex64, Complex64)> {
    let s = Complex64::new(eps, tau);
    let two_e1 = Complex64::new(2.0 * eps + 1.0, 0.0);
    let f = f_factor(eps, tau)?;
    let l1 = 4f64.ln() + digamma(s + 0.5)? + digamma(s.conj() + 1.0)? - 2.0 * digamma(two_e1)?;
    let l2 = trigamma(s + 0.5)? + trigamma(s.conj() + 1.0)? - 4.0 * trigamma(two_e1)?;
    Ok((f * l1, f * (l1 * l1 + l2)))
}

/// `family_closed_form` rebuilt from `f_factor·(ε+iτ)·ω_ε(τ)`.
pub fn family_factorized(pt: &FamilyPoint) -> Result<Complex64> {
    require_positive_eps(pt)?;
    let w = omega_eps(pt.tau, pt.eps)?;
    Ok(f_factor(pt.eps, pt.tau)? * Complex64::new(pt.eps, pt.tau) * w)
}

/// Taylor remainder `|f(ε,τ) − f(0,τ) − ε·∂f/∂ε(0,τ)|` against the bound
/// `(M/2)ε²`, with `M` 10% above the largest `|∂²f/∂ε²|` sampled on `(0, ε]`.
pub fn taylor_remainder(eps: f64, tau: f64) -> Result<(f64, f64)> {
    const SAMPLES: usize = 64;
    let f0 = f_factor(0.0, tau)?;
    let (d0, _) = f_derivatives(0.0, tau)?;
    let rem = (f_factor(eps, tau)? - f0 - d0 * eps).norm();
    let mut m: f64 = 0.0;
    for i in 1..=SAMPLES {
        let xi = eps * i as f64 / SAMPLES as f64;
        m = m.max(f_derivatives(xi, tau)?.1.norm());
    }
    Ok((rem, 0.5 * 1.1 * m * eps * eps))
}

/// Pairings `∫_a^b φ(τ)·family(τ, ε) dτ` along the ladder.
pub fn family_weak_limit_sweep(
    probe: &Probe,
    a: f64,
    b: f64,
    ladder: &EpsilonLadder,
    spec: &QuadratureSpec,
) -> Result<PairingSweepResult> {
    run_sweep(ladder.values(), |eps| {
        let kernel = PeakedKernel {
            f: move |tau| family_closed_form(&FamilyPoint::new(tau, eps)?),
            width: eps,
        };
        integrate_pairing(probe, &kernel, a, b, spec)
    })
}

/// Oscillating factor of the unit-argument limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OscKind {
    /// `cos(τ ln|1−z|)`
    Cos,
    /// `sin(τ ln|1−z|)`
    Sin,
    /// `|1−z|^{−iτ}`
    Power,
}

impl FromStr for OscKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cos" => Ok(OscKind::Cos),
            "sin" => Ok(OscKind::Sin),
            "power" => Ok(OscKind::Power),
            other => Err(Error::domain(format!("unknown oscillation kind '{other}' (cos, sin, power)"))),
        }
    }
}

impl OscKind {
    fn eval(&self, tau: f64, log_dist: f64) -> Complex64 {
        let (s, c) = (tau * log_dist).sin_cos();
        match self {
            OscKind::Cos => Complex64::new(c, 0.0),
            OscKind::Sin => Complex64::new(s, 0.0),
            OscKind::Power => Complex64::new(c, -s),
        }
    }
}

/// `∫_a^b φ(τ)·osc(τ ln|1−z|) dτ` with panels no wider than half a period.
pub fn oscillatory_pairing(
    probe: &Probe,
    kind: OscKind,
    one_minus_z: f64,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    if !(one_minus_z > 0.0 && one_minus_z.is_finite()) {
        return Err(Error::domain(format!("|1 − z| must be positive (got {one_minus_z})")));
    }
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain("pairing interval must be finite with a < b"));
    }
    let (lo, hi) = probe.support_hint();
    let (ca, cb) = (a.max(lo), b.min(hi));
    if !(ca < cb) {
        return Ok(IntegralResult {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            evaluations: 0,
            truncation_point: None,
        });
    }
    let ld = one_minus_z.ln();
    let half_period = if ld == 0.0 { cb - ca } else { PI / ld.abs() };
    let n = ((cb - ca) / half_period).ceil().max(1.0) as usize;
    let pts: Vec<f64> = (0..=n).map(|i| ca + (cb - ca) * i as f64 / n as f64).collect();
    let spec = spec.with_max_subdivisions(spec.max_subdivisions.max(2 * n));
    integrate_panels(|tau| Ok(probe.eval(tau) * kind.eval(tau, ld)), &pts, &spec)
}

/// Oscillatory pairings along a decreasing ladder of `|1−z|` values. The
/// reported limit is the last pairing: these sequences decay faster than any
/// power, so no order is fitted.
pub fn oscillatory_limit_sweep(
    probe: &Probe,
    kind: OscKind,
    a: f64,
    b: f64,
    one_minus_z: &EpsilonLadder,
    spec: &QuadratureSpec,
) -> Result<PairingSweepResult> {
    let mut r = run_sweep(one_minus_z.values(), |d| oscillatory_pairing(probe, kind, d, a, b, spec))?;
    r.extrapolated_limit = r.points.last().map(|p| p.value).unwrap_or_default();
    r.fitted_order = f64::NAN;
    Ok(r)
}
