//! Legendre functions of the second kind from their cosh-kernel integrals,
//! the imaginary-order relation
//! `Q_ν^{iτ}(z) = e^{−πτ} Γ(ν+iτ+1)/Γ(ν+1) · Q_ν(z)` under test, and the
//! large-`z`, large-`ν` and `z → 1` leading-order laws.
//!
//! Integrals are normalized by the integrand at `t = 0`, so quadrature and
//! truncation tolerances act relative to the size of the result.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::complexfn::{gamma, log_gamma, POLE_TOLERANCE};
use crate::error::{finite, Error, Result};
use crate::harness::claims::{ClaimVerdict, Mode};
use crate::quad::{integrate_semi_infinite_with_period, IntegralResult, QuadratureSpec};

/// Smallest decay rate of the kernel accepted by the integral routines.
pub const MIN_DECAY: f64 = 1e-2;

/// A point of the plane cut along `(−∞, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutPlanePoint {
    z: Complex64,
}

impl CutPlanePoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::domain("z must be finite"));
        }
        if z.im == 0.0 && z.re <= 1.0 {
            return Err(Error::domain(format!("z = {z} lies on the cut (−∞, 1]")));
        }
        Ok(Self { z })
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(Complex64::new(x, 0.0))
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// `√(z−1)·√(z+1)` with principal roots.
    pub fn sqrt_z2m1(&self) -> Complex64 {
        (self.z - 1.0).sqrt() * (self.z + 1.0).sqrt()
    }
}

/// Degree `ν` and order `μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendreOrderDegree {
    nu: Complex64,
    mu: Complex64,
}

fn check_degree(nu: Complex64) -> Result<()> {
    if !(nu.re > -1.0) {
        return Err(Error::domain(format!("degree needs Re ν > −1 (got {nu})")));
    }
    Ok(())
}

impl LegendreOrderDegree {
    pub fn new(nu: Complex64, mu: Complex64) -> Result<Self> {
        check_degree(nu)?;
        if !((nu + mu).re > -1.0) {
            return Err(Error::domain(format!("order needs Re(ν + μ) > −1 (got ν = {nu}, μ = {mu})")));
        }
        Ok(Self { nu, mu })
    }

    /// Purely imaginary order `μ = iτ`.
    pub fn imaginary(nu: Complex64, tau: f64) -> Result<Self> {
        Self::new(nu, Complex64::new(0.0, tau))
    }

    pub fn nu(&self) -> Complex64 {
        self.nu
    }

    pub fn mu(&self) -> Complex64 {
        self.mu
    }

    /// `Im μ` when the order is purely imaginary.
    pub fn tau(&self) -> Option<f64> {
        (self.mu.re == 0.0).then_some(self.mu.im)
    }
}

/// `cosh(μt)·(z + √(z²−1)·cosh t)^{−ν−1}` divided by its value at `t = 0`.
#[derive(Debug, Clone, Copy)]
pub struct LegendreIntegrand {
    nu1: Complex64,
    mu: Complex64,
    z: Complex64,
    s: Complex64,
    w0: Complex64,
}

impl LegendreIntegrand {
    pub fn new(nu: Complex64, mu: Complex64, z: &CutPlanePoint) -> Self {
        let s = z.sqrt_z2m1();
        Self {
            nu1: nu + 1.0,
            mu,
            z: z.z(),
            s,
            w0: (z.z() + s).ln(),
        }
    }

    /// `ln(z + s·cosh t)`, rewritten for large `t` so `cosh` cannot overflow.
    fn log_base(&self, t: f64) -> Complex64 {
        if t < 30.0 {
            (self.z + self.s * t.cosh()).ln()
        } else {
            let e = (-t).exp();
            t + (0.5 * self.s + self.z * e + 0.5 * self.s * e * e).ln()
        }
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let core = -self.nu1 * (self.log_base(t) - self.w0);
        if self.mu == Complex64::new(0.0, 0.0) {
            core.exp()
        } else {
            0.5 * ((core + self.mu * t).exp() + (core - self.mu * t).exp())
        }
    }

    /// The factor `(z + √(z²−1))^{−ν−1}` removed by the normalization.
    pub fn scale(&self) -> Complex64 {
        (-self.nu1 * self.w0).exp()
    }

    pub fn decay_rate(&self) -> f64 {
        self.nu1.re - self.mu.re.abs()
    }

    /// Oscillation period in `t` coming from `Im μ` and `Im ν`.
    pub fn period(&self) -> Option<f64> {
        let w = self.mu.im.abs() + self.nu1.im.abs();
        (w > 0.0).then(|| 2.0 * PI / w)
    }

    /// `∫₀^∞` of the un-normalized kernel.
    pub fn integrate(&self, spec: &QuadratureSpec) -> Result<IntegralResult> {
        let decay = self.decay_rate();
        if !(decay >= MIN_DECAY) {
            return Err(Error::domain(format!(
                "kernel decays too slowly (rate {decay}); need Re(ν+1) − |Re μ| ≥ {MIN_DECAY}"
            )));
        }
        let mut r = integrate_semi_infinite_with_period(|t| Ok(self.eval(t)), decay, self.period(), spec)?;
        let k = self.scale();
        r.value *= k;
        r.error_estimate *= k.norm();
        Ok(r)
    }
}

/// `Q_ν(z) = ∫₀^∞ (z + √(z²−1) cosh t)^{−ν−1} dt`.
pub fn q_nu(nu: Complex64, z: &CutPlanePoint, spec: &QuadratureSpec) -> Result<IntegralResult> {
    check_degree(nu)?;
    LegendreIntegrand::new(nu, Complex64::new(0.0, 0.0), z).integrate(spec)
}

/// `Q_ν^μ(z) = e^{iπμ} Γ(ν+1)/Γ(ν−μ+1) · ∫₀^∞ cosh(μt)(z + √(z²−1) cosh t)^{−ν−1} dt`.
pub fn q_nu_mu(ld: &LegendreOrderDegree, z: &CutPlanePoint, spec: &QuadratureSpec) -> Result<IntegralResult> {
    let (nu, mu) = (ld.nu, ld.mu);
    let integrand = LegendreIntegrand::new(nu, mu, z);
    if !(integrand.decay_rate() > 0.0) {
        return Err(Error::domain(format!("the integral needs Re(ν+1) > |Re μ| (got ν = {nu}, μ = {mu})")));
    }
    let mut r = integrand.integrate(spec)?;
    let pre = gamma_prefactor(nu, mu)?;
    r.value *= pre;
    r.error_estimate *= pre.norm();
    r.value = finite(r.value, "Q_ν^μ")?;
    Ok(r)
}

/// `e^{iπμ} Γ(ν+1)/Γ(ν−μ+1)`; zero when `ν−μ+1` is a pole.
fn gamma_prefactor(nu: Complex64, mu: Complex64) -> Result<Complex64> {
    let w = nu - mu + 1.0;
    let n = w.re.round();
    let phase = (Complex64::i() * PI * mu).exp();
    if n <= 0.0 && (w - n).norm() <= POLE_TOLERANCE {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(phase * (log_gamma(nu + 1.0)? - log_gamma(w)?).exp())
}

/// `Q_ν^{iτ}(z)` straight from its integral with the `cos(τt)` factor.
pub fn q_nu_itau_direct(nu: Complex64, tau: f64, z: &CutPlanePoint, spec: &QuadratureSpec) -> Result<IntegralResult> {
    check_degree(nu)?;
    q_nu_mu(&LegendreOrderDegree::imaginary(nu, tau)?, z, spec)
}

/// Mean-value phase for `cos(τη) = |Γ(ν+1+iτ)|² / Γ(ν+1)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaSolution {
    pub eta: f64,
    pub cos_value: f64,
    pub branch_index: i64,
    /// Set when `τ = 0`, where every `η` solves the equation.
    pub degenerate: bool,
}

pub fn solve_eta(nu: f64, tau: f64) -> Result<EtaSolution> {
    if !(nu > -1.0) || !tau.is_finite() {
        return Err(Error::domain(format!("η needs real ν > −1 and finite τ (got ν={nu}, τ={tau})")));
    }
    if tau == 0.0 {
        return Ok(EtaSolution {
            eta: 0.0,
            cos_value: 1.0,
            branch_index: 0,
            degenerate: true,
        });
    }
    // through ln Γ: the moduli themselves overflow for large ν
    let l = 2.0 * log_gamma(Complex64::new(nu + 1.0, tau))?.re - 2.0 * log_gamma(Complex64::new(nu + 1.0, 0.0))?.re;
    let c = l.exp();
    if c > 1.0 + 1e-12 {
        return Err(Error::Consistency(format!("cos(τη) = {c} exceeds 1 at ν={nu}, τ={tau}")));
    }
    let c = c.min(1.0);
    // arccos c = 2 asin √((1−c)/2), with 1 − c = −expm1(l) kept exact near c = 1
    let one_minus = (-l.exp_m1()).max(0.0);
    Ok(EtaSolution {
        eta: 2.0 * (0.5 * one_minus).sqrt().min(1.0).asin() / tau.abs(),
        cos_value: c,
        branch_index: 0,
        degenerate: false,
    })
}

/// `e^{−πτ} Γ(ν+iτ+1)/Γ(ν+1)`.
pub fn relation_factor(nu: Complex64, tau: f64) -> Result<Complex64> {
    let l = log_gamma(nu + Complex64::new(1.0, tau))? - log_gamma(nu + 1.0)?;
    finite((l - PI * tau).exp(), "relation factor")
}

/// Right-hand side `e^{−πτ} Γ(ν+iτ+1)/Γ(ν+1) · Q_ν(z)` of the relation.
pub fn relation_rhs(nu: Complex64, tau: f64, z: &CutPlanePoint, spec: &QuadratureSpec) -> Result<IntegralResult> {
    let mut q = q_nu(nu, z, spec)?;
    let k = relation_factor(nu, tau)?;
    q.value *= k;
    q.error_estimate *= k.norm();
    Ok(q)
}

/// Both sides of the relation at one grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationRecord {
    pub nu: Complex64,
    pub tau: f64,
    pub z: Complex64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub rel_dev: f64,
}

impl RelationRecord {
    pub fn point(&self) -> String {
        format!(
            "nu={},tau={},z={}",
            crate::harness::report::fmt_complex(self.nu),
            crate::harness::report::fmt_f64(self.tau),
            crate::harness::report::fmt_complex(self.z)
        )
    }
}

/// Compares the integral `Q_ν^{iτ}(z)` with the relation's right-hand side.
pub fn relation_record(nu: Complex64, tau: f64, z: &CutPlanePoint, spec: &QuadratureSpec) -> Result<RelationRecord> {
    let lhs = q_nu_itau_direct(nu, tau, z, spec)?.value;
    let rhs = relation_rhs(nu, tau, z, spec)?.value;
    Ok(RelationRecord {
        nu,
        tau,
        z: z.z(),
        lhs,
        rhs,
        rel_dev: (lhs - rhs).norm() / lhs.norm(),
    })
}

/// Relative deviation of the relation as a verdict; in report mode the
/// deviation is recorded and never fails.
pub fn adjudicate_relation(
    nu: Complex64,
    tau: f64,
    z: &CutPlanePoint,
    tolerance: f64,
    mode: Mode,
    spec: &QuadratureSpec,
) -> Result<(RelationRecord, ClaimVerdict)> {
    let rec = relation_record(nu, tau, z, spec)?;
    let v = ClaimVerdict::measured("E47-legendre-relation", rec.point(), rec.rel_dev, tolerance, f64::NAN, mode);
    Ok((rec, v))
}

/// `√π e^{iπμ} Γ(ν+μ+1)/Γ(ν+3/2) · (2z)^{−ν−1}`, the large-`z` law.
pub fn asymptotic_large_z(ld: &LegendreOrderDegree, z: &CutPlanePoint) -> Result<Complex64> {
    let (nu, mu) = (ld.nu, ld.mu);
    let l = 0.5 * PI.ln() + Complex64::i() * PI * mu + log_gamma(nu + mu + 1.0)? - log_gamma(nu + 1.5)?
        - (nu + 1.0) * (2.0 * z.z()).ln();
    finite(l.exp(), "large-z asymptote")
}

/// Large-degree forms of `Q_ν^{iτ}(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LargeNuAsymptote {
    /// `e^{−πτ} ν^{iτ} Q_ν(z)` with `Q_ν` by quadrature.
    pub ratio_form: Complex64,
    /// `ν^{−1/2+iτ} e^{−πτ} (z + √(z²−1))^{−ν−1/2}`.
    pub explicit: Complex64,
}

/// The fully explicit large-`ν` value.
pub fn large_nu_explicit(nu: Complex64, tau: f64, z: &CutPlanePoint) -> Result<Complex64> {
    if !(nu.re > 0.0) {
        return Err(Error::domain("large-ν asymptote needs Re ν > 0"));
    }
    let xi = (z.z() + z.sqrt_z2m1()).ln();
    let l = (Complex64::new(-0.5, tau)) * nu.ln() - PI * tau - (nu + 0.5) * xi;
    finite(l.exp(), "large-ν asymptote")
}

pub fn asymptotic_large_nu(
    nu: Complex64,
    tau: f64,
    z: &CutPlanePoint,
    spec: &QuadratureSpec,
) -> Result<LargeNuAsymptote> {
    let explicit = large_nu_explicit(nu, tau, z)?;
    let q = q_nu(nu, z, spec)?.value;
    let ratio_form = (Complex64::new(0.0, tau) * nu.ln() - PI * tau).exp() * q;
    Ok(LargeNuAsymptote { ratio_form, explicit })
}

/// `|Γ(ν+1+iτ)/Γ(ν+1) − ν^{iτ}|`.
pub fn gamma_ratio_deviation(nu: f64, tau: f64) -> Result<f64> {
    if !(nu > 0.0) {
        return Err(Error::domain("Γ-ratio check needs ν > 0"));
    }
    let ratio = (log_gamma(Complex64::new(nu + 1.0, tau))? - log_gamma(Complex64::new(nu + 1.0, 0.0))?).exp();
    let power = Complex64::new(0.0, tau * nu.ln()).exp();
    Ok((ratio - power).norm())
}

fn check_near_one(z: &CutPlanePoint) -> Result<Complex64> {
    let d = z.z() - 1.0;
    if d.norm() > 0.5 {
        return Err(Error::domain(format!("near-one law requested far from z = 1 (|z−1| = {})", d.norm())));
    }
    Ok(d)
}

/// `−ln(z−1) / (2Γ(ν+1))`.
pub fn near_one_q_nu(nu: Complex64, z: &CutPlanePoint) -> Result<Complex64> {
    let d = check_near_one(z)?;
    finite(-d.ln() / (2.0 * gamma(nu + 1.0)?), "near-one law")
}

/// `−½ e^{−πτ} Γ(ν+iτ+1)/Γ(ν+1)² · ln(z−1)`.
pub fn near_one_q_nu_itau(nu: Complex64, tau: f64, z: &CutPlanePoint) -> Result<Complex64> {
    let d = check_near_one(z)?;
    let l = log_gamma(nu + Complex64::new(1.0, tau))? - 2.0 * log_gamma(nu + 1.0)? - PI * tau;
    finite(-0.5 * l.exp() * d.ln(), "near-one law")
}

/// `e^{iπμ} 2^{μ/2−1} Γ(μ) (z−1)^{−μ/2}` for `Re μ > 0`.
pub fn near_one_power(mu: Complex64, z: &CutPlanePoint) -> Result<Complex64> {
    if !(mu.re > 0.0) {
        return Err(Error::domain("the power law needs Re μ > 0"));
    }
    let d = check_near_one(z)?;
    let l = Complex64::i() * PI * mu + (0.5 * mu - 1.0) * std::f64::consts::LN_2 + log_gamma(mu)? - 0.5 * mu * d.ln();
    finite(l.exp(), "near-one power law")
}

/// Least-squares slope of `ln|Q_ν^μ(1+d)|` against `ln d`.
pub fn near_one_slope(ld: &LegendreOrderDegree, dists: &[f64], spec: &QuadratureSpec) -> Result<f64> {
    if dists.len() < 2 {
        return Err(Error::domain("slope fit needs at least two distances"));
    }
    let mut xs = Vec::with_capacity(dists.len());
    let mut ys = Vec::with_capacity(dists.len());
    for &d in dists {
        let z = CutPlanePoint::real(1.0 + d)?;
        xs.push(d.ln());
        ys.push(q_nu_mu(ld, &z, spec)?.value.norm().ln());
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn q0(z: Complex64) -> Complex64 {
        0.5 * ((z + 1.0) / (z - 1.0)).ln()
    }

    fn q1(z: Complex64) -> Complex64 {
        z * q0(z) - 1.0
    }

    #[test]
    fn cut_plane() {
        assert!(CutPlanePoint::real(1.0).is_err());
        assert!(CutPlanePoint::real(-3.0).is_err());
        assert!(CutPlanePoint::new(c(-3.0, 1e-9)).is_ok());
        let s = CutPlanePoint::new(c(-2.0, 0.5)).unwrap().sqrt_z2m1();
        let z = c(-2.0, 0.5);
        assert!((s * s - (z * z - 1.0)).norm() < 1e-14);
        // principal product: continuous across the real axis left of −1
        let above = CutPlanePoint::new(c(-2.0, 1e-12)).unwrap().sqrt_z2m1();
        let below = CutPlanePoint::new(c(-2.0, -1e-12)).unwrap().sqrt_z2m1();
        assert!((above - below).norm() < 1e-9);
    }

    #[test]
    fn q_nu_examples() {
        let spec = QuadratureSpec::default();
        let two = CutPlanePoint::real(2.0).unwrap();
        let v = q_nu(c(0.0, 0.0), &two, &spec).unwrap().value;
        assert!((v.re - 0.5 * 3f64.ln()).abs() < 1e-10 * v.re && v.im == 0.0);
        let v = q_nu(c(1.0, 0.0), &two, &spec).unwrap().value;
        assert!((v.re - (3f64.ln() - 1.0)).abs() < 1e-9 * v.re);
        let big = CutPlanePoint::real(1e6).unwrap();
        let v = q_nu(c(0.0, 0.0), &big, &spec).unwrap().value;
        assert!((v.re - 1e-6).abs() < 1e-12);
        assert!(q_nu(c(-1.0, 0.0), &two, &spec).is_err());
        assert!(q_nu(c(-0.999, 0.0), &two, &spec).is_err());
    }

    #[test]
    fn q_nu_off_axis_matches_closed_forms() {
        let spec = QuadratureSpec::default();
        for &z in &[c(2.0, 1.0), c(-2.0, 0.5), c(0.3, -0.8), c(1.5, -3.0)] {
            let p = CutPlanePoint::new(z).unwrap();
            let v0 = q_nu(c(0.0, 0.0), &p, &spec).unwrap().value;
            assert!((v0 - q0(z)).norm() < 1e-9 * q0(z).norm(), "z={z}: {v0} vs {}", q0(z));
            let v1 = q_nu(c(1.0, 0.0), &p, &spec).unwrap().value;
            assert!((v1 - q1(z)).norm() < 1e-8 * q1(z).norm(), "z={z}: {v1} vs {}", q1(z));
        }
    }

    #[test]
    fn q_nu_mu_examples() {
        let spec = QuadratureSpec::default();
        let two = CutPlanePoint::real(2.0).unwrap();
        let a = q_nu_mu(&LegendreOrderDegree::new(c(0.7, 0.0), c(0.0, 0.0)).unwrap(), &two, &spec).unwrap();
        let b = q_nu(c(0.7, 0.0), &two, &spec).unwrap();
        assert!((a.value - b.value).norm() < 1e-14);
        let three = CutPlanePoint::real(3.0).unwrap();
        let a = q_nu_mu(&LegendreOrderDegree::imaginary(c(1.0, 0.0), 0.5).unwrap(), &three, &spec).unwrap();
        let b = q_nu_itau_direct(c(1.0, 0.0), 0.5, &three, &spec).unwrap();
        assert_eq!(a.value, b.value);
        let ld = LegendreOrderDegree::new(c(2.0, 0.0), c(0.5, 0.0)).unwrap();
        let z = CutPlanePoint::real(1e3).unwrap();
        let r = q_nu_mu(&ld, &z, &spec).unwrap().value / asymptotic_large_z(&ld, &z).unwrap();
        assert!((r - 1.0).norm() < 0.01, "{r}");
    }

    #[test]
    fn q_nu_half_order_closed_form() {
        // Q_ν^{1/2}(cosh ξ) = i √(π/(2 sinh ξ)) e^{−(ν+½)ξ}
        let spec = QuadratureSpec::default();
        let xi: f64 = 1.3;
        let z = CutPlanePoint::real(xi.cosh()).unwrap();
        for &nu in &[0.0, 1.0, 2.5] {
            let ld = LegendreOrderDegree::new(c(nu, 0.0), c(0.5, 0.0)).unwrap();
            let v = q_nu_mu(&ld, &z, &spec).unwrap().value;
            let exact = c(0.0, (PI / (2.0 * xi.sinh())).sqrt() * (-(nu + 0.5) * xi).exp());
            assert!((v - exact).norm() < 1e-9 * exact.norm(), "ν={nu}: {v} vs {exact}");
        }
    }

    #[test]
    fn q_nu_itau_bound_and_symmetry() {
        let spec = QuadratureSpec::default();
        let two = CutPlanePoint::real(2.0).unwrap();
        let v = q_nu_itau_direct(c(0.0, 0.0), 1.0, &two, &spec).unwrap().value;
        let g = (log_gamma(c(1.0, 0.0)).unwrap() - log_gamma(c(1.0, -1.0)).unwrap()).exp().norm();
        let bound = (-PI).exp() * g * 0.5 * 3f64.ln();
        assert!(v.norm() > 0.0 && v.norm() <= bound);
        // the integral is real; only the prefactor distinguishes ±τ
        let nu = c(1.5, 0.0);
        let plus = q_nu_itau_direct(nu, 0.8, &two, &spec).unwrap().value / relation_like_prefactor(nu, 0.8);
        let minus = q_nu_itau_direct(nu, -0.8, &two, &spec).unwrap().value / relation_like_prefactor(nu, -0.8);
        assert!((plus - minus.conj()).norm() < 1e-12 * plus.norm());
        assert!(plus.im.abs() < 1e-12 * plus.norm());
    }

    fn relation_like_prefactor(nu: Complex64, tau: f64) -> Complex64 {
        gamma_prefactor(nu, c(0.0, tau)).unwrap()
    }

    #[test]
    fn real_arguments_give_real_values() {
        let spec = QuadratureSpec::default();
        for &(nu, mu, x) in &[(0.3, 0.2, 1.7), (2.0, 0.5, 4.0), (1.2, -0.7, 1.1)] {
            let ld = LegendreOrderDegree::new(c(nu, 0.0), c(mu, 0.0)).unwrap();
            let v = q_nu_mu(&ld, &CutPlanePoint::real(x).unwrap(), &spec).unwrap().value;
            let unphased = v * (-Complex64::i() * PI * mu).exp();
            assert!(unphased.im.abs() <= 1e-10 * unphased.norm());
            let q = q_nu(c(nu, 0.0), &CutPlanePoint::real(x).unwrap(), &spec).unwrap().value;
            assert!(q.im.abs() <= 1e-10 * q.norm());
        }
    }

    #[test]
    fn truncation_is_stable() {
        let spec = QuadratureSpec::default();
        let z = CutPlanePoint::real(1.5).unwrap();
        let k = LegendreIntegrand::new(c(0.5, 0.0), c(0.0, 0.7), &z);
        let r = k.integrate(&spec).unwrap();
        let t = r.truncation_point.unwrap();
        let beyond = crate::quad::integrate_interval(|s| k.eval(s), t, 2.0 * t, &spec).unwrap();
        assert!(beyond.value.norm() <= spec.truncation_tail_tol);
    }

    #[test]
    fn eta_examples() {
        let s = solve_eta(0.0, 1.0).unwrap();
        assert!((s.cos_value - PI / PI.sinh()).abs() < 1e-12);
        assert!((s.eta - (PI / PI.sinh()).acos()).abs() < 1e-12 && (s.eta - 1.295).abs() < 1e-3);
        let big = solve_eta(1e3, 1.0).unwrap();
        assert!(1.0 - big.cos_value < 1e-3 && big.eta < 0.05);
        // cos(τη) = 1 − τ²ψ′(ν+1) + O(τ⁴), so η tends to √(2ψ′(ν+1)), not 0
        let tiny = solve_eta(0.0, 1e-6).unwrap();
        assert!(1.0 - tiny.cos_value < 1e-11);
        let small = solve_eta(0.0, 1e-4).unwrap();
        assert!((small.eta - PI / 3f64.sqrt()).abs() < 1e-6, "{}", small.eta);
        let zero = solve_eta(0.0, 0.0).unwrap();
        assert!(zero.degenerate && zero.eta == 0.0 && zero.cos_value == 1.0);
        let neg = solve_eta(0.5, -2.0).unwrap();
        assert!((neg.eta - solve_eta(0.5, 2.0).unwrap().eta).abs() < 1e-15 && neg.eta >= 0.0);
        assert!(solve_eta(-1.0, 1.0).is_err());
    }

    #[test]
    fn relation_rhs_examples() {
        let spec = QuadratureSpec::default();
        let two = CutPlanePoint::real(2.0).unwrap();
        let r = relation_rhs(c(0.0, 0.0), 0.0, &two, &spec).unwrap().value;
        assert!((r - q_nu(c(0.0, 0.0), &two, &spec).unwrap().value).norm() < 1e-15);
        let r = relation_rhs(c(0.0, 0.0), 1.0, &two, &spec).unwrap().value;
        let e = (-PI).exp() * gamma(c(1.0, 1.0)).unwrap() * 0.5 * 3f64.ln();
        assert!((r - e).norm() < 1e-10 * e.norm());
        let near = CutPlanePoint::real(1.01).unwrap();
        let r = relation_rhs(c(1.0, 0.0), 0.5, &near, &spec).unwrap().value;
        let law = near_one_q_nu_itau(c(1.0, 0.0), 0.5, &near).unwrap();
        // leading logarithm only: agreement to the size of the neglected constant
        assert!((r / law - 1.0).norm() < 0.4, "{}", r / law);
    }

    #[test]
    fn relation_exact_at_tau_zero() {
        let spec = QuadratureSpec::default();
        let (rec, v) = adjudicate_relation(c(1.0, 0.0), 0.0, &CutPlanePoint::real(2.0).unwrap(), 1e-8, Mode::Assert, &spec).unwrap();
        assert!(rec.rel_dev <= 1e-8);
        assert_eq!(v.status, crate::harness::claims::Status::Pass);
    }

    #[test]
    fn large_nu_forms() {
        let spec = QuadratureSpec::default();
        let two = CutPlanePoint::real(2.0).unwrap();
        let a0 = asymptotic_large_nu(c(50.0, 0.0), 0.0, &two, &spec).unwrap();
        let a1 = asymptotic_large_nu(c(50.0, 0.0), 1.0, &two, &spec).unwrap();
        assert!((a1.explicit.norm() - a0.explicit.norm() * (-PI).exp()).abs() < 1e-12 * a1.explicit.norm());
        assert!(gamma_ratio_deviation(1e3, 1.0).unwrap() <= 1e-3);
    }

    #[test]
    fn near_one_laws_shape() {
        let z = CutPlanePoint::real(1.0 + 1e-6).unwrap();
        assert!((near_one_q_nu(c(0.0, 0.0), &z).unwrap().re - 0.5 * 1e6f64.ln()).abs() < 1e-9);
        assert!(near_one_q_nu(c(0.0, 0.0), &CutPlanePoint::real(3.0).unwrap()).is_err());
        assert!(near_one_power(c(0.0, 0.0), &z).is_err());
        let spec = QuadratureSpec::default();
        let ld = LegendreOrderDegree::new(c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        let d = 1e-8;
        let zz = CutPlanePoint::real(1.0 + d).unwrap();
        let r = q_nu_mu(&ld, &zz, &spec).unwrap().value / near_one_power(c(0.5, 0.0), &zz).unwrap();
        assert!((r - 1.0).norm() < 1e-3, "{r}");
    }
}
