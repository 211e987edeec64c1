//! Adaptive quadrature for the integral shapes used throughout the crate.
//!
//! The workhorse is a globally adaptive Gauss–Kronrod (10/21) bisection
//! scheme. Complex integrands are integrated componentwise along real paths,
//! with the QUADPACK error heuristic applied to each component.
//!
//! * [`integrate_finite`] removes algebraic endpoint singularities by the
//!   substitution `t = a + h·u^{1/Re p}` on each half of the interval.
//! * [`integrate_semi_infinite`] truncates `[0, ∞)` at a point chosen from an
//!   exponential tail bound and records it.
//! * [`integrate_pairing`] integrates `φ(τ)·K(τ)` with forced geometric
//!   refinement around a narrow peak at the origin.
//! * [`integrate_cosine_transform`] handles slowly (algebraically) decaying
//!   `∫₀^∞ g(y) cos(ωy) dy` by summing half-period panels and accelerating
//!   the alternating partial sums with Wynn's ε-algorithm.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::distrib::Probe;
use crate::error::{Error, Result};

/// Tolerance budget of a single integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub truncation_tail_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            truncation_tail_tol: 1e-12,
        }
    }
}

impl QuadratureSpec {
    pub fn new(
        abs_tol: f64,
        rel_tol: f64,
        max_subdivisions: usize,
        truncation_tail_tol: f64,
    ) -> Result<Self> {
        let spec = Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
            truncation_tail_tol,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be at least 1"));
        }
        if !(self.truncation_tail_tol > 0.0) {
            return Err(Error::domain("truncation_tail_tol must be positive"));
        }
        Ok(())
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n;
        self
    }

    pub fn with_tail_tol(mut self, tol: f64) -> Self {
        self.truncation_tail_tol = tol;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
    /// Truncation point `T` of a semi-infinite domain.
    pub truncation_point: Option<f64>,
}

/// Endpoint behaviour `f(t) ~ (t-a)^{left_p-1}` and `f(t) ~ (b-t)^{right_p-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointExponents {
    left_p: Complex64,
    right_p: Complex64,
}

impl EndpointExponents {
    pub fn new(left_p: Complex64, right_p: Complex64) -> Result<Self> {
        if !(left_p.re > 0.0 && right_p.re > 0.0) {
            return Err(Error::domain(format!(
                "endpoint exponents need positive real parts (got {left_p}, {right_p})"
            )));
        }
        Ok(Self { left_p, right_p })
    }

    /// Bounded integrand at both ends.
    pub fn regular() -> Self {
        Self {
            left_p: Complex64::new(1.0, 0.0),
            right_p: Complex64::new(1.0, 0.0),
        }
    }

    pub fn left_p(&self) -> Complex64 {
        self.left_p
    }

    pub fn right_p(&self) -> Complex64 {
        self.right_p
    }
}

/// Smallest real part of an endpoint exponent that [`integrate_finite`]
/// regularizes; the substitution power `1/Re p` is capped at 20.
pub const MIN_ENDPOINT_RE: f64 = 0.05;

/// A point of `(a, b)` together with its distances to both ends, computed
/// without cancellation so that singular factors can be formed accurately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Abscissa {
    pub t: f64,
    pub from_left: f64,
    pub from_right: f64,
}

// Kronrod 21-point nodes; odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_067_617_347,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// QUADPACK error heuristic for one real component.
fn component_error(resk: f64, resg: f64, resabs: f64, resasc: f64) -> f64 {
    let mut err = (resk - resg).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    err
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F>(f: &mut F, a: f64, b: f64) -> Result<Panel>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv1 = [Complex64::new(0.0, 0.0); 10];
    let mut fv2 = [Complex64::new(0.0, 0.0); 10];
    let fc = f(center)?;
    let mut resk = fc * WGK[10];
    let mut resg = Complex64::new(0.0, 0.0);
    let mut resabs = [WGK[10] * fc.re.abs(), WGK[10] * fc.im.abs()];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk += (f1 + f2) * WGK[j];
        resabs[0] += WGK[j] * (f1.re.abs() + f2.re.abs());
        resabs[1] += WGK[j] * (f1.im.abs() + f2.im.abs());
        if j % 2 == 1 {
            resg += (f1 + f2) * WG[j / 2];
        }
    }
    let reskh = resk * 0.5;
    let mut resasc = [
        WGK[10] * (fc.re - reskh.re).abs(),
        WGK[10] * (fc.im - reskh.im).abs(),
    ];
    for j in 0..10 {
        resasc[0] += WGK[j] * ((fv1[j].re - reskh.re).abs() + (fv2[j].re - reskh.re).abs());
        resasc[1] += WGK[j] * ((fv1[j].im - reskh.im).abs() + (fv2[j].im - reskh.im).abs());
    }
    let h = half.abs();
    let value = resk * half;
    let g = resg * half;
    let err_re = component_error(value.re, g.re, resabs[0] * h, resasc[0] * h);
    let err_im = component_error(value.im, g.im, resabs[1] * h, resasc[1] * h);
    Ok(Panel {
        a,
        b,
        value,
        error: err_re.hypot(err_im),
    })
}

const EVALS_PER_PANEL: usize = 21;

/// Globally adaptive integration of `f` over consecutive `breakpoints`.
///
/// The error target is `max(abs_tol, rel_tol·|value|)`. Panels that shrink to
/// a few ulps are frozen; if the target is still unmet the best estimate is
/// returned inside [`Error::NonConvergence`].
pub fn integrate_panels<F>(mut f: F, breakpoints: &[f64], spec: &QuadratureSpec) -> Result<IntegralResult>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    spec.validate()?;
    if breakpoints.len() < 2 {
        return Err(Error::domain("need at least two breakpoints"));
    }
    if breakpoints.windows(2).any(|w| !(w[0] < w[1])) || breakpoints.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("breakpoints must be finite and strictly increasing"));
    }
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    for w in breakpoints.windows(2) {
        let p = gauss_kronrod(&mut f, w[0], w[1])?;
        evaluations += EVALS_PER_PANEL;
        value += p.value;
        error += p.error;
        heap.push(p);
    }
    let mut frozen_value = Complex64::new(0.0, 0.0);
    let mut frozen_error = 0.0;
    let mut panels = heap.len();

    let finish = |heap: &BinaryHeap<Panel>, fv: Complex64, fe: f64, evaluations: usize| {
        let mut v = fv;
        let mut e = fe;
        for p in heap.iter() {
            v += p.value;
            e += p.error;
        }
        IntegralResult {
            value: v,
            error_estimate: e,
            evaluations,
            truncation_point: None,
        }
    };

    loop {
        let target = spec.abs_tol.max(spec.rel_tol * value.norm());
        if error <= target {
            return Ok(finish(&heap, frozen_value, frozen_error, evaluations));
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => {
                return Err(Error::NonConvergence {
                    best: finish(&heap, frozen_value, frozen_error, evaluations),
                })
            }
        };
        let mid = 0.5 * (worst.a + worst.b);
        let scale = worst.a.abs().max(worst.b.abs()).max(f64::MIN_POSITIVE);
        if (worst.b - worst.a) <= 64.0 * f64::EPSILON * scale || mid <= worst.a || mid >= worst.b {
            frozen_value += worst.value;
            frozen_error += worst.error;
            continue;
        }
        if panels >= spec.max_subdivisions {
            heap.push(worst);
            return Err(Error::NonConvergence {
                best: finish(&heap, frozen_value, frozen_error, evaluations),
            });
        }
        let left = gauss_kronrod(&mut f, worst.a, mid)?;
        let right = gauss_kronrod(&mut f, mid, worst.b)?;
        evaluations += 2 * EVALS_PER_PANEL;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels += 1;
        heap.push(left);
        heap.push(right);
        if panels % 64 == 0 {
            // refresh the running sums to keep them from drifting
            let r = finish(&heap, frozen_value, frozen_error, evaluations);
            value = r.value;
            error = r.error_estimate;
        }
    }
}

/// Infallible-integrand convenience over `[a, b]`.
pub fn integrate_interval<F>(mut f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<IntegralResult>
where
    F: FnMut(f64) -> Complex64,
{
    integrate_panels(|x| Ok(f(x)), &[a, b], spec)
}

/// `∫_a^b f` for an integrand with algebraic endpoint behaviour described by
/// `exps`. The integrand receives an [`Abscissa`] so it can form `(t-a)` and
/// `(b-t)` without cancellation.
pub fn integrate_finite<F>(
    mut f: F,
    a: f64,
    b: f64,
    exps: EndpointExponents,
    spec: &QuadratureSpec,
) -> Result<IntegralResult>
where
    F: FnMut(Abscissa) -> Result<Complex64>,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!("need finite a < b (got {a}, {b})")));
    }
    if exps.left_p.re < MIN_ENDPOINT_RE || exps.right_p.re < MIN_ENDPOINT_RE {
        return Err(Error::domain(format!(
            "endpoint exponent real part below {MIN_ENDPOINT_RE}; subtract the singular part first"
        )));
    }
    let width = b - a;
    let h = 0.5 * width;
    let power = |p: Complex64| if p.re < 1.0 { 1.0 / p.re } else { 1.0 };
    let kl = power(exps.left_p);
    let kr = power(exps.right_p);
    // x in [0, 1] covers the left half (u = x), x in [1, 2] the right half (u = 2 - x).
    let g = |x: f64| -> Result<Complex64> {
        let (u, k, left_side) = if x <= 1.0 { (x, kl, true) } else { (2.0 - x, kr, false) };
        let uk = u.powf(k);
        let d = h * uk;
        if d == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let jac = h * k * if k == 1.0 { 1.0 } else { uk / u };
        let abscissa = if left_side {
            Abscissa {
                t: a + d,
                from_left: d,
                from_right: width - d,
            }
        } else {
            Abscissa {
                t: b - d,
                from_left: width - d,
                from_right: d,
            }
        };
        Ok(f(abscissa)? * jac)
    };
    integrate_panels(g, &[0.0, 1.0, 2.0], spec)
}

/// Integral over `[0, ∞)` of an integrand with `|f(t)| <= C e^{-decay_rate t}`.
pub fn integrate_semi_infinite<F>(f: F, decay_rate: f64, spec: &QuadratureSpec) -> Result<IntegralResult>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    integrate_semi_infinite_with_period(f, decay_rate, None, spec)
}

/// As [`integrate_semi_infinite`], with the initial panels no wider than half
/// an oscillation `period` of the integrand.
pub fn integrate_semi_infinite_with_period<F>(
    mut f: F,
    decay_rate: f64,
    period: Option<f64>,
    spec: &QuadratureSpec,
) -> Result<IntegralResult>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    spec.validate()?;
    if !(decay_rate > 0.0) || !decay_rate.is_finite() {
        return Err(Error::domain(format!("decay rate must be positive (got {decay_rate})")));
    }
    let (cutoff, tail, probes) = truncation_point(&mut f, decay_rate, spec.truncation_tail_tol)?;
    let mut width = 1.0 / decay_rate;
    if let Some(p) = period {
        if p.is_finite() && p > 0.0 {
            width = width.min(0.5 * p);
        }
    }
    let n = ((cutoff / width).ceil() as usize).clamp(1, spec.max_subdivisions.max(2) / 2);
    let points: Vec<f64> = (0..=n).map(|i| cutoff * i as f64 / n as f64).collect();
    let mut r = integrate_panels(f, &points, spec)?;
    r.error_estimate += tail;
    r.evaluations += probes;
    r.truncation_point = Some(cutoff);
    Ok(r)
}

/// Smallest grid point `T = k/λ` whose sampled envelope over `[T, T + 1/λ]`
/// bounds the tail `∫_T^∞ |f|` below `tail_tol`.
fn truncation_point<F>(f: &mut F, decay_rate: f64, tail_tol: f64) -> Result<(f64, f64, usize)>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    const SAMPLES: usize = 8;
    const MAX_STEPS: usize = 4000;
    let step = 1.0 / decay_rate;
    let mut evaluations = 0;
    for k in 1..=MAX_STEPS {
        let t0 = k as f64 * step;
        let mut envelope: f64 = 0.0;
        for j in 0..=SAMPLES {
            let t = t0 + step * j as f64 / SAMPLES as f64;
            envelope = envelope.max(f(t)?.norm());
            evaluations += 1;
        }
        // |f| <= M e^{-λ(t-T)} beyond T integrates to M/λ
        let tail = envelope / decay_rate;
        if tail <= tail_tol {
            return Ok((t0, tail, evaluations));
        }
    }
    Err(Error::domain(format!(
        "integrand does not decay at rate {decay_rate} (tail above {tail_tol:e} at t = {})",
        MAX_STEPS as f64 * step
    )))
}

/// A τ-dependent kernel paired against a [`Probe`].
pub trait PairingKernel {
    fn eval(&self, tau: f64) -> Result<Complex64>;

    /// Width of a peak at the origin that must be resolved, if any.
    fn peak_width(&self) -> Option<f64> {
        None
    }
}

impl<F> PairingKernel for F
where
    F: Fn(f64) -> Result<Complex64>,
{
    fn eval(&self, tau: f64) -> Result<Complex64> {
        self(tau)
    }
}

/// A closure kernel with a declared peak width at `τ = 0`.
pub struct PeakedKernel<F> {
    pub f: F,
    pub width: f64,
}

impl<F> PairingKernel for PeakedKernel<F>
where
    F: Fn(f64) -> Result<Complex64>,
{
    fn eval(&self, tau: f64) -> Result<Complex64> {
        (self.f)(tau)
    }

    fn peak_width(&self) -> Option<f64> {
        Some(self.width)
    }
}

/// Breakpoints of `[a, b]` refined geometrically towards the origin.
pub fn origin_breakpoints(a: f64, b: f64, peak_width: Option<f64>) -> Vec<f64> {
    let mut pts = vec![a, b];
    if a < 0.0 && 0.0 < b {
        pts.push(0.0);
    }
    if let Some(w) = peak_width.filter(|w| *w > 0.0 && w.is_finite()) {
        let mut s = w;
        while s < (b - a) {
            for x in [s, -s] {
                if a < x && x < b {
                    pts.push(x);
                }
            }
            s *= 10.0;
        }
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// `∫_a^b φ(τ) K(τ) dτ`, refining around the origin when `K` declares a peak.
pub fn integrate_pairing<K: PairingKernel + ?Sized>(
    probe: &Probe,
    kernel: &K,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!("pairing interval must be finite with a < b (got [{a}, {b}])")));
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
    let pts = origin_breakpoints(ca, cb, kernel.peak_width());
    integrate_panels(|tau| Ok(kernel.eval(tau)? * probe.eval(tau)), &pts, spec)
}

/// Wynn's ε-algorithm on a sequence of partial sums; returns the estimate
/// from the highest complete even column.
fn wynn_epsilon(sums: &[f64]) -> f64 {
    let n = sums.len();
    if n < 3 {
        return *sums.last().unwrap_or(&0.0);
    }
    let mut prev = vec![0.0; n + 1];
    let mut cur: Vec<f64> = sums.to_vec();
    let mut best = sums[n - 1];
    let mut column = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d == 0.0 {
                // the sequence has converged exactly at this depth
                return if column % 2 == 0 { cur[i + 1] } else { best };
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        prev = cur;
        cur = next;
        column += 1;
        if column % 2 == 0 {
            if let Some(&v) = cur.last() {
                if v.is_finite() {
                    best = v;
                }
            }
        }
    }
    best
}

/// `∫₀^∞ g(y) cos(ωy) dy` for `g` decaying monotonically (possibly only
/// algebraically). Panels end at the zeros of `cos(ωy)`; the alternating
/// partial sums are accelerated with Wynn's ε-algorithm. `peak_width`
/// refines the first panel around a narrow feature of `g` at the origin.
pub fn integrate_cosine_transform<G>(
    g: G,
    omega: f64,
    peak_width: Option<f64>,
    spec: &QuadratureSpec,
) -> Result<IntegralResult>
where
    G: Fn(f64) -> f64,
{
    spec.validate()?;
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::domain("cosine transform needs a positive finite frequency"));
    }
    const MAX_PANELS: usize = 400;
    let f = |y: f64| Complex64::new(g(y) * (omega * y).cos(), 0.0);
    let first_zero = 0.5 * PI / omega;
    let mut pts = vec![0.0, first_zero];
    if let Some(w) = peak_width.filter(|w| *w > 0.0) {
        let mut s = w;
        while s < first_zero {
            pts.push(s);
            s *= 10.0;
        }
        pts.sort_by(f64::total_cmp);
        pts.dedup();
    }
    let panel_spec = spec.with_abs_tol(spec.abs_tol * 1e-2);
    let head = integrate_panels(|y| Ok(f(y)), &pts, &panel_spec)?;
    let mut evaluations = head.evaluations;
    let mut quad_error = head.error_estimate;
    let mut partial = head.value.re;
    let mut sums = vec![partial];
    let mut estimates: Vec<f64> = Vec::new();
    for k in 0..MAX_PANELS {
        let a = first_zero + k as f64 * PI / omega;
        let b = a + PI / omega;
        let r = integrate_panels(|y| Ok(f(y)), &[a, b], &panel_spec)?;
        evaluations += r.evaluations;
        quad_error += r.error_estimate;
        partial += r.value.re;
        sums.push(partial);
        // keep the table short: older sums carry no extra information
        let window = if sums.len() > 40 { &sums[sums.len() - 40..] } else { &sums[..] };
        let est = wynn_epsilon(window);
        estimates.push(est);
        let m = estimates.len();
        if m >= 3 {
            let delta = (estimates[m - 1] - estimates[m - 2])
                .abs()
                .max((estimates[m - 1] - estimates[m - 3]).abs());
            let target = spec.abs_tol.max(spec.rel_tol * est.abs());
            if delta <= target && k >= 4 {
                return Ok(IntegralResult {
                    value: Complex64::new(est, 0.0),
                    error_estimate: delta + quad_error,
                    evaluations,
                    truncation_point: Some(b),
                });
            }
        }
    }
    let last = *estimates.last().unwrap_or(&partial);
    Err(Error::NonConvergence {
        best: IntegralResult {
            value: Complex64::new(last, 0.0),
            error_estimate: f64::INFINITY,
            evaluations,
            truncation_point: None,
        },
    })
}
