//! The claim registry: each identity or limit, its default grid, tolerance
//! and mode, and the code that measures it.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::report::{fmt_complex, fmt_f64, Table};
use crate::complexfn::duplication_residual;
use crate::distrib::{
    beta, beta_integral, beta_semi_infinite, delta_claim_sweep, delta_target, mellin_forward_sweep,
    mellin_inverse_check, EpsilonLadder, PairingSweepResult, Probe,
};
use crate::error::{Error, Result};
use crate::hyper::{
    f_derivatives, f_factor, family_closed_form, family_duplication_form, family_factorized, family_weak_limit_sweep,
    gauss_sum, hyp2f1, oscillatory_limit_sweep, taylor_remainder, FamilyPoint, Hyp2F1Params, OscKind,
};
use crate::legendre::{
    asymptotic_large_nu, asymptotic_large_z, gamma_ratio_deviation, large_nu_explicit, near_one_q_nu,
    near_one_q_nu_itau, near_one_slope, q_nu, q_nu_itau_direct, q_nu_mu, relation_record, solve_eta,
    CutPlanePoint, LegendreOrderDegree,
};
use crate::quad::QuadratureSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Fails the run when the deviation exceeds the tolerance.
    Assert,
    /// Records the deviation only.
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimVerdict {
    pub claim: String,
    pub point: String,
    pub deviation: f64,
    pub tolerance: f64,
    /// Fitted convergence order; NaN when not applicable.
    pub order: f64,
    pub status: Status,
    pub runtime_ms: u64,
    pub message: Option<String>,
}

impl ClaimVerdict {
    pub fn measured(claim: &str, point: String, deviation: f64, tolerance: f64, order: f64, mode: Mode) -> Self {
        let status = match mode {
            Mode::Report => Status::Reported,
            Mode::Assert if deviation <= tolerance => Status::Pass,
            Mode::Assert => Status::Fail,
        };
        Self {
            claim: claim.to_string(),
            point,
            deviation,
            tolerance,
            order,
            status,
            runtime_ms: 0,
            message: None,
        }
    }

    /// A point whose computation raised an error.
    pub fn errored(claim: &str, point: String, tolerance: f64, mode: Mode, err: &Error) -> Self {
        Self {
            claim: claim.to_string(),
            point,
            deviation: f64::NAN,
            tolerance,
            order: f64::NAN,
            status: if mode == Mode::Report { Status::Reported } else { Status::Fail },
            runtime_ms: 0,
            message: Some(err.to_string()),
        }
    }

    pub fn with_message(mut self, msg: impl Into<String>) -> Self {
        self.message = Some(msg.into());
        self
    }

    fn fail_with(mut self, msg: impl Into<String>) -> Self {
        if self.status == Status::Pass {
            self.status = Status::Fail;
        }
        self.message = Some(msg.into());
        self
    }
}

/// Inputs shared by every claim run.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub ladder: EpsilonLadder,
    pub probe: Probe,
    /// Primary tolerance after overrides.
    pub tol: f64,
    pub spec: QuadratureSpec,
}

#[derive(Debug, Clone, Default)]
pub struct ClaimOutput {
    pub verdicts: Vec<ClaimVerdict>,
    /// Per-point detail, when the claim produces a grid.
    pub table: Option<Table>,
}

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub target: &'static str,
    pub default_grid: &'static str,
    pub tolerance: f64,
    pub mode: Mode,
    pub run: fn(&Claim, &Ctx) -> ClaimOutput,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("mode", &self.mode).finish()
    }
}

impl Claim {
    fn verdict(&self, point: String, tol: f64, r: Result<f64>) -> ClaimVerdict {
        self.verdict_with_order(point, tol, r.map(|d| (d, f64::NAN)))
    }

    fn verdict_with_order(&self, point: String, tol: f64, r: Result<(f64, f64)>) -> ClaimVerdict {
        match r {
            Ok((d, q)) => ClaimVerdict::measured(self.id, point, d, tol, q, self.mode),
            Err(e) => ClaimVerdict::errored(self.id, point, tol, self.mode, &e),
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn pt(kv: &[(&str, String)]) -> String {
    kv.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

fn f(x: f64) -> String {
    fmt_f64(x)
}

fn cz(z: Complex64) -> String {
    fmt_complex(z)
}

/// Euler-formula grid: `Re α ∈ {0.5, 1, 2.5}` against four imaginary-part
/// patterns, with `Re β` cycling through the same set.
pub fn euler_grid() -> Vec<(Complex64, Complex64)> {
    let res = [0.5, 1.0, 2.5];
    let ims = [(0.0, 0.0), (1.0, 0.0), (0.0, -1.0), (-1.0, 1.0)];
    let mut out = Vec::new();
    for (i, &ar) in res.iter().enumerate() {
        for (j, &(ai, bi)) in ims.iter().enumerate() {
            let br = res[(i + j + 2) % 3];
            out.push((c(ar, ai), c(br, bi)));
        }
    }
    out
}

pub fn half_line_points() -> Vec<(Complex64, Complex64)> {
    vec![
        (c(1.0, 0.0), c(1.0, 0.0)),
        (c(2.0, 0.0), c(3.0, 0.0)),
        (c(0.5, 0.5), c(0.5, -0.5)),
        (c(0.5, 0.0), c(0.5, 0.0)),
        (c(1.5, 1.0), c(0.8, 0.0)),
        (c(2.5, -1.0), c(1.0, 0.5)),
    ]
}

pub fn gauss_sum_sets() -> Vec<Hyp2F1Params> {
    [
        (c(1.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)),
        (c(0.5, 0.0), c(0.25, 0.0), c(2.0, 0.0)),
        (c(0.3, 0.0), c(0.2, 0.0), c(1.8, 0.0)),
        (c(0.5, 0.5), c(0.25, 0.0), c(2.5, 0.0)),
        (c(1.0, 0.0), c(0.5, 0.0), c(3.0, 0.0)),
    ]
    .iter()
    .map(|&(a, b, cc)| Hyp2F1Params::new(a, b, cc).expect("admissible set"))
    .collect()
}

pub const FAMILY_EPS: [f64; 4] = [1e-3, 1e-2, 0.1, 0.5];
pub const FAMILY_TAU: [f64; 4] = [0.1, 0.5, 1.0, 2.0];

pub const RELATION_NU: [f64; 3] = [0.0, 1.0, 2.0];
pub const RELATION_TAU: [f64; 3] = [0.25, 0.5, 1.0];
pub const RELATION_Z: [f64; 3] = [1.5, 2.0, 5.0];

/// Deviation of an ε-sweep's limit from its target: relative, or absolute
/// when the target is zero.
fn limit_deviation(r: &PairingSweepResult, target: f64) -> f64 {
    let d = (r.extrapolated_limit - target).norm();
    if target != 0.0 {
        d / target.abs()
    } else {
        d
    }
}

fn run_e03(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let verdicts = half_line_points()
        .into_iter()
        .map(|(a, b)| {
            let r = (|| Ok(rel(beta_semi_infinite(a, b, &ctx.spec)?.value, beta(a, b)?)))();
            cl.verdict(pt(&[("alpha", cz(a)), ("beta", cz(b))]), ctx.tol, r)
        })
        .collect();
    ClaimOutput { verdicts, table: None }
}

fn run_e04(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let verdicts = euler_grid()
        .into_iter()
        .map(|(a, b)| {
            let r = (|| Ok(rel(beta_integral(a, b, &ctx.spec)?.value, beta(a, b)?)))();
            cl.verdict(pt(&[("alpha", cz(a)), ("beta", cz(b))]), ctx.tol, r)
        })
        .collect();
    ClaimOutput { verdicts, table: None }
}

fn run_e06(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let l3 = 3f64.ln();
    let cases = [(0.0, 0.5 * l3), (1.0, l3 - 1.0)];
    let verdicts = cases
        .iter()
        .map(|&(nu, exact)| {
            let r = (|| {
                let v = q_nu(c(nu, 0.0), &CutPlanePoint::real(2.0)?, &ctx.spec)?.value;
                Ok(rel(v, c(exact, 0.0)))
            })();
            cl.verdict(pt(&[("nu", f(nu)), ("z", f(2.0))]), ctx.tol, r)
        })
        .collect();
    ClaimOutput { verdicts, table: None }
}

fn sweep_table(param: &str, r: &PairingSweepResult, target: Complex64) -> Table {
    let mut t = Table::new(&[param, "re", "im", "err_estimate", "deviation"]);
    for p in &r.points {
        t.push(vec![
            f(p.param),
            f(p.value.re),
            f(p.value.im),
            f(p.error_estimate),
            f((p.value - target).norm()),
        ]);
    }
    t
}

fn run_e12(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let probe = ctx.probe;
    let mut verdicts = Vec::new();
    let mut table = None;
    for &(a, b) in &[(-1.0, 1.0), (0.0, 1.0), (1.0, 2.0)] {
        let target = 2.0 * PI * delta_target(&probe, a, b);
        let point = pt(&[("probe", probe.name().to_string()), ("a", f(a)), ("b", f(b))]);
        let v = match delta_claim_sweep(&probe, a, b, &ctx.ladder, &ctx.spec) {
            Ok(r) => {
                if table.is_none() {
                    table = Some(sweep_table("epsilon", &r, c(target, 0.0)));
                }
                let v = ClaimVerdict::measured(cl.id, point, limit_deviation(&r, target), ctx.tol, r.fitted_order, cl.mode);
                if r.fitted_order > 0.0 {
                    v
                } else {
                    v.fail_with("fitted order is not positive")
                }
            }
            Err(e) => ClaimVerdict::errored(cl.id, point, ctx.tol, cl.mode, &e),
        };
        verdicts.push(v);
    }
    ClaimOutput { verdicts, table }
}

fn run_e16(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let probe = ctx.probe;
    let target = 2.0 * PI * delta_target(&probe, -1.0, 1.0);
    let point = pt(&[("probe", probe.name().to_string()), ("a", f(-1.0)), ("b", f(1.0))]);
    let (v, table) = match mellin_forward_sweep(&probe, -1.0, 1.0, &ctx.ladder, &ctx.spec) {
        Ok(r) => (
            ClaimVerdict::measured(cl.id, point, limit_deviation(&r, target), ctx.tol, r.fitted_order, cl.mode),
            Some(sweep_table("epsilon", &r, c(target, 0.0))),
        ),
        Err(e) => (ClaimVerdict::errored(cl.id, point, ctx.tol, cl.mode, &e), None),
    };
    ClaimOutput { verdicts: vec![v], table }
}

fn run_e17(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let e = std::f64::consts::E;
    let mut verdicts: Vec<ClaimVerdict> = ctx
        .ladder
        .values()
        .iter()
        .map(|&eps| {
            let r = (|| Ok((mellin_inverse_check(e, eps, &ctx.spec)?.value - (-eps).exp()).norm()))();
            cl.verdict(pt(&[("t", f(e)), ("eps", f(eps))]), ctx.tol, r)
        })
        .collect();
    let r = (|| Ok((mellin_inverse_check(e, 1e-4, &ctx.spec)?.value - 1.0).norm()))();
    verdicts.push(cl.verdict(pt(&[("t", f(e)), ("eps", f(1e-4)), ("limit", "1".into())]), 1e-4, r));
    let r = (|| Ok((mellin_inverse_check(1.0, 0.1, &ctx.spec)?.value - 1.0).norm()))();
    verdicts.push(cl.verdict(pt(&[("t", f(1.0)), ("eps", f(0.1))]), ctx.tol, r));
    ClaimOutput { verdicts, table: None }
}

fn run_e18(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let verdicts = gauss_sum_sets()
        .into_iter()
        .map(|p| {
            let point = pt(&[("a", cz(p.a)), ("b", cz(p.b)), ("c", cz(p.c)), ("z", f(0.999))]);
            let r = (|| {
                let g = gauss_sum(&p)?;
                let d3 = rel(hyp2f1(&p, c(0.999, 0.0))?, g);
                let d4 = rel(hyp2f1(&p, c(0.9999, 0.0))?, g);
                Ok((d3, d4))
            })();
            match r {
                Ok((d3, d4)) => {
                    let v = ClaimVerdict::measured(cl.id, point, d3, ctx.tol, f64::NAN, cl.mode);
                    if d4 < d3 {
                        v
                    } else {
                        v.fail_with(format!("no improvement at z = 0.9999 (deviation {})", f(d4)))
                    }
                }
                Err(e) => ClaimVerdict::errored(cl.id, point, ctx.tol, cl.mode, &e),
            }
        })
        .collect();
    ClaimOutput { verdicts, table: None }
}

fn family_grid() -> impl Iterator<Item = (f64, f64)> {
    FAMILY_EPS.into_iter().flat_map(|e| FAMILY_TAU.into_iter().map(move |t| (e, t)))
}

fn run_e21(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let mut verdicts: Vec<ClaimVerdict> = family_grid()
        .map(|(eps, tau)| {
            let r = (|| {
                let p = FamilyPoint::new(tau, eps)?;
                Ok(rel(family_duplication_form(&p)?, family_closed_form(&p)?))
            })();
            cl.verdict(pt(&[("eps", f(eps)), ("tau", f(tau))]), ctx.tol, r)
        })
        .collect();
    for z in [c(1.0, 0.0), c(0.3, 0.7), c(5.0, 0.0)] {
        verdicts.push(cl.verdict(pt(&[("z", cz(z))]), ctx.tol, duplication_residual(z)));
    }
    ClaimOutput { verdicts, table: None }
}

fn run_e22(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let mut verdicts: Vec<ClaimVerdict> = family_grid()
        .map(|(eps, tau)| {
            let r = (|| {
                let p = FamilyPoint::new(tau, eps)?;
                Ok(rel(family_factorized(&p)?, family_closed_form(&p)?))
            })();
            cl.verdict(pt(&[("eps", f(eps)), ("tau", f(tau))]), ctx.tol, r)
        })
        .collect();
    let r = (|| Ok((f_factor(0.0, 0.0)? - PI).norm() / PI))();
    verdicts.push(cl.verdict(pt(&[("eps", f(0.0)), ("tau", f(0.0)), ("value", "f".into())]), ctx.tol, r));
    let r = (|| Ok(f_derivatives(0.0, 0.0)?.0.norm()))();
    verdicts.push(cl.verdict(pt(&[("eps", f(0.0)), ("tau", f(0.0)), ("value", "df".into())]), ctx.tol, r));
    ClaimOutput { verdicts, table: None }
}

const TAYLOR_POINTS: [(f64, f64); 4] = [(0.0, 1.0), (0.2, 0.7), (0.05, 0.3), (0.1, 2.0)];

fn run_e25(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let mut verdicts = Vec::new();
    for &(eps, tau) in &TAYLOR_POINTS {
        let r = (|| {
            let h = 1e-5;
            let fd = (f_factor(eps + h, tau)? - f_factor(eps - h, tau)?) / (2.0 * h);
            Ok(rel(f_derivatives(eps, tau)?.0, fd))
        })();
        verdicts.push(cl.verdict(pt(&[("eps", f(eps)), ("tau", f(tau)), ("order", "1".into())]), ctx.tol, r));
        let r = (|| {
            let h = 1e-4;
            let fd = (f_factor(eps + h, tau)? - 2.0 * f_factor(eps, tau)? + f_factor(eps - h, tau)?) / (h * h);
            Ok(rel(f_derivatives(eps, tau)?.1, fd))
        })();
        verdicts.push(cl.verdict(pt(&[("eps", f(eps)), ("tau", f(tau)), ("order", "2".into())]), ctx.tol, r));
    }
    // remainder / bound; at most 1 when the second-order bound holds
    for &eps in &[0.1, 0.01] {
        for &tau in &[0.5, 1.0, 2.0] {
            let r = (|| {
                let (rem, bound) = taylor_remainder(eps, tau)?;
                Ok(rem / bound)
            })();
            verdicts.push(cl.verdict(pt(&[("eps", f(eps)), ("tau", f(tau)), ("bound", "taylor".into())]), 1.0, r));
        }
    }
    ClaimOutput { verdicts, table: None }
}

fn run_e31(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let mut verdicts = Vec::new();
    let mut table = None;
    for (probe, a, b) in [(ctx.probe, -1.0, 1.0), (Probe::constant(), 1.0, 2.0)] {
        let point = pt(&[("probe", probe.name().to_string()), ("a", f(a)), ("b", f(b))]);
        let v = match family_weak_limit_sweep(&probe, a, b, &ctx.ladder, &ctx.spec) {
            Ok(r) => {
                if table.is_none() {
                    table = Some(sweep_table("epsilon", &r, c(0.0, 0.0)));
                }
                let mags: Vec<f64> = r.points.iter().map(|p| p.value.norm()).collect();
                let last = *mags.last().unwrap_or(&f64::NAN);
                let v = ClaimVerdict::measured(cl.id, point, last, ctx.tol, r.fitted_order, cl.mode);
                let tail = &mags[mags.len().saturating_sub(3)..];
                if tail.windows(2).all(|w| w[1] < w[0]) {
                    v
                } else {
                    v.fail_with("pairing magnitude not decreasing over the last three ladder points")
                }
            }
            Err(e) => ClaimVerdict::errored(cl.id, point, ctx.tol, cl.mode, &e),
        };
        verdicts.push(v);
    }
    ClaimOutput { verdicts, table }
}

fn run_e32(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let cases = [
        (c(0.5, 0.0), c(1.5, 0.0), c(0.25, 0.0)),
        (c(0.3, 0.2), c(2.0, 0.0), c(0.5, -0.3)),
        (c(0.0, 1.4), c(0.1, 0.7), c(0.9, 0.0)),
        (c(-1.5, 0.5), c(0.7, -0.2), c(-0.6, 0.6)),
    ];
    let verdicts = cases
        .iter()
        .map(|&(a, b, z)| {
            let r = (|| {
                let s = hyp2f1(&Hyp2F1Params::new(a, b, b)?, z)?;
                Ok(rel(s, (1.0 - z).powc(-a)))
            })();
            cl.verdict(pt(&[("a", cz(a)), ("b", cz(b)), ("z", cz(z))]), ctx.tol, r)
        })
        .collect();
    ClaimOutput { verdicts, table: None }
}

pub const OSC_K: [f64; 3] = [5.0, 10.0, 20.0];

fn osc_ladder() -> EpsilonLadder {
    EpsilonLadder::new(OSC_K.iter().map(|k| (-k).exp()).collect()).expect("decreasing")
}

fn run_e35(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let g = Probe::gaussian();
    let ladder = osc_ladder();
    let mut verdicts = Vec::new();
    let mut table = None;
    for kind in [OscKind::Cos, OscKind::Sin, OscKind::Power] {
        let name = match kind {
            OscKind::Cos => "cos",
            OscKind::Sin => "sin",
            OscKind::Power => "power",
        };
        match oscillatory_limit_sweep(&g, kind, -5.0, 5.0, &ladder, &ctx.spec) {
            Ok(r) => {
                let mut t = Table::new(&["z_minus_1", "re", "im", "err_estimate", "deviation"]);
                let mut mags = Vec::new();
                for (p, k) in r.points.iter().zip(OSC_K) {
                    let oracle = PI.sqrt() * (-k * k / 4.0).exp();
                    let dev = match kind {
                        OscKind::Cos => (p.value - oracle).norm(),
                        OscKind::Sin => p.value.norm(),
                        OscKind::Power => (p.value - Complex64::new(oracle, 0.0)).norm(),
                    };
                    mags.push(p.value.norm());
                    t.push(vec![f(-p.param), f(p.value.re), f(p.value.im), f(p.error_estimate), f(dev)]);
                    verdicts.push(ClaimVerdict::measured(
                        cl.id,
                        pt(&[("probe", "gaussian".into()), ("kind", name.into()), ("k", f(k))]),
                        dev,
                        ctx.tol,
                        f64::NAN,
                        cl.mode,
                    ));
                }
                if kind == OscKind::Cos {
                    if !mags.windows(2).all(|w| w[1] < w[0]) {
                        if let Some(v) = verdicts.last_mut() {
                            *v = v.clone().fail_with("pairing magnitudes do not decrease");
                        }
                    }
                    table = Some(t);
                }
            }
            Err(e) => verdicts.push(ClaimVerdict::errored(
                cl.id,
                pt(&[("probe", "gaussian".into()), ("kind", name.into())]),
                ctx.tol,
                cl.mode,
                &e,
            )),
        }
    }
    ClaimOutput { verdicts, table }
}

pub fn large_z_cases() -> Vec<(Complex64, Complex64)> {
    vec![(c(0.0, 0.0), c(0.0, 0.0)), (c(2.0, 0.0), c(0.5, 0.0)), (c(1.0, 0.0), c(0.0, 0.5))]
}

fn run_e45(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let verdicts = large_z_cases()
        .into_iter()
        .map(|(nu, mu)| {
            let r = (|| {
                let ld = LegendreOrderDegree::new(nu, mu)?;
                let z = CutPlanePoint::real(1e3)?;
                let ratio = q_nu_mu(&ld, &z, &ctx.spec)?.value / asymptotic_large_z(&ld, &z)?;
                Ok((ratio - 1.0).norm())
            })();
            cl.verdict(pt(&[("nu", cz(nu)), ("mu", cz(mu)), ("z", f(1e3))]), ctx.tol, r)
        })
        .collect();
    ClaimOutput { verdicts, table: None }
}

fn run_e46(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let r = (|| Ok((solve_eta(0.0, 1.0)?.cos_value - PI / PI.sinh()).abs()))();
    let mut verdicts = vec![cl.verdict(pt(&[("nu", f(0.0)), ("tau", f(1.0))]), ctx.tol, r)];
    let r = (|| Ok(1.0 - solve_eta(1e3, 1.0)?.cos_value))();
    verdicts.push(cl.verdict(pt(&[("nu", f(1e3)), ("tau", f(1.0)), ("limit", "1".into())]), 1e-3, r));
    ClaimOutput { verdicts, table: None }
}

/// Header of the relation deviation grid.
pub const RELATION_HEADER: [&str; 10] =
    ["nu_re", "nu_im", "tau", "z_re", "z_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_dev"];

fn run_e47(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let mut verdicts = Vec::new();
    let mut table = Table::new(&RELATION_HEADER);
    for &nu in &RELATION_NU {
        for &tau in &RELATION_TAU {
            for &x in &RELATION_Z {
                let point = pt(&[("nu", f(nu)), ("tau", f(tau)), ("z", f(x))]);
                match CutPlanePoint::real(x).and_then(|z| relation_record(c(nu, 0.0), tau, &z, &ctx.spec)) {
                    Ok(rec) => {
                        table.push(vec![
                            f(rec.nu.re),
                            f(rec.nu.im),
                            f(rec.tau),
                            f(rec.z.re),
                            f(rec.z.im),
                            f(rec.lhs.re),
                            f(rec.lhs.im),
                            f(rec.rhs.re),
                            f(rec.rhs.im),
                            f(rec.rel_dev),
                        ]);
                        verdicts.push(ClaimVerdict::measured(cl.id, point, rec.rel_dev, ctx.tol, f64::NAN, cl.mode));
                    }
                    Err(e) => verdicts.push(ClaimVerdict::errored(cl.id, point, ctx.tol, cl.mode, &e)),
                }
            }
        }
    }
    ClaimOutput { verdicts, table: Some(table) }
}

pub const TAU_ZERO_GRID: [(f64, f64); 6] = [(0.0, 1.5), (0.0, 5.0), (1.0, 1.5), (1.0, 5.0), (2.5, 2.0), (0.5, 1.1)];

fn run_e47_tau_zero(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let verdicts = TAU_ZERO_GRID
        .iter()
        .map(|&(nu, x)| {
            let r = (|| Ok(relation_record(c(nu, 0.0), 0.0, &CutPlanePoint::real(x)?, &ctx.spec)?.rel_dev))();
            cl.verdict(pt(&[("nu", f(nu)), ("tau", f(0.0)), ("z", f(x))]), ctx.tol, r)
        })
        .collect();
    ClaimOutput { verdicts, table: None }
}

fn run_e48(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let verdicts = [1.0, 0.5]
        .iter()
        .map(|&tau| cl.verdict(pt(&[("nu", f(1e3)), ("tau", f(tau))]), ctx.tol, gamma_ratio_deviation(1e3, tau)))
        .collect();
    ClaimOutput { verdicts, table: None }
}

pub const LARGE_NU: [f64; 3] = [10.0, 50.0, 250.0];

/// `Q_ν(z)` against the explicit large-degree value, with the ratio column.
pub fn large_nu_table(nus: &[f64], x: f64, spec: &QuadratureSpec) -> Result<Table> {
    let mut t = Table::new(&["nu", "re", "im", "err_estimate", "ratio", "deviation"]);
    let z = CutPlanePoint::real(x)?;
    for &nu in nus {
        let q = q_nu(c(nu, 0.0), &z, spec)?;
        let ratio = q.value / large_nu_explicit(c(nu, 0.0), 0.0, &z)?;
        t.push(vec![f(nu), f(q.value.re), f(q.value.im), f(q.error_estimate), f(ratio.re), f((ratio - 1.0).norm())]);
    }
    Ok(t)
}

fn run_e49(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let mut verdicts: Vec<ClaimVerdict> = LARGE_NU
        .iter()
        .map(|&nu| {
            let r = (|| {
                let a = asymptotic_large_nu(c(nu, 0.0), 0.0, &CutPlanePoint::real(2.0)?, &ctx.spec)?;
                Ok((a.ratio_form / a.explicit - 1.0).norm())
            })();
            cl.verdict(pt(&[("nu", f(nu)), ("tau", f(0.0)), ("z", f(2.0))]), ctx.tol, r)
        })
        .collect();
    // |ν^{iτ}| = 1: the τ = 1 modulus is the τ = 0 modulus times e^{−π}
    let r = (|| {
        let z = CutPlanePoint::real(2.0)?;
        let a0 = large_nu_explicit(c(50.0, 0.0), 0.0, &z)?;
        let a1 = large_nu_explicit(c(50.0, 0.0), 1.0, &z)?;
        Ok((a1.norm() / (a0.norm() * (-PI).exp()) - 1.0).abs())
    })();
    verdicts.push(cl.verdict(pt(&[("nu", f(50.0)), ("tau", f(1.0)), ("z", f(2.0)), ("check", "modulus".into())]), 1e-12, r));
    let table = large_nu_table(&LARGE_NU, 2.0, &ctx.spec).ok();
    ClaimOutput { verdicts, table }
}

pub const NEAR_ONE_DISTS: [f64; 5] = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6];

/// `Q_ν(1+d)` against the logarithmic law, with the ratio column.
pub fn near_one_table(nu: f64, dists: &[f64], spec: &QuadratureSpec) -> Result<Table> {
    let mut t = Table::new(&["z_minus_1", "re", "im", "err_estimate", "ratio", "deviation"]);
    for &d in dists {
        let z = CutPlanePoint::real(1.0 + d)?;
        let q = q_nu(c(nu, 0.0), &z, spec)?;
        let ratio = q.value / near_one_q_nu(c(nu, 0.0), &z)?;
        t.push(vec![f(d), f(q.value.re), f(q.value.im), f(q.error_estimate), f(ratio.re), f((ratio - 1.0).norm())]);
    }
    Ok(t)
}

fn run_e53(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let d = 1e-6;
    let mut verdicts: Vec<ClaimVerdict> = [0.0, 1.0]
        .iter()
        .map(|&nu| {
            let r = (|| {
                let z = CutPlanePoint::real(1.0 + d)?;
                Ok((q_nu(c(nu, 0.0), &z, &ctx.spec)?.value / near_one_q_nu(c(nu, 0.0), &z)? - 1.0).norm())
            })();
            cl.verdict(pt(&[("nu", f(nu)), ("z_minus_1", f(d))]), ctx.tol, r)
        })
        .collect();
    let r = (|| {
        let z = CutPlanePoint::real(1.0 + d)?;
        let lhs = q_nu_itau_direct(c(1.0, 0.0), 0.5, &z, &ctx.spec)?.value;
        Ok((lhs / near_one_q_nu_itau(c(1.0, 0.0), 0.5, &z)? - 1.0).norm())
    })();
    verdicts.push(cl.verdict(pt(&[("nu", f(1.0)), ("tau", f(0.5)), ("z_minus_1", f(d))]), ctx.tol, r));
    let table = near_one_table(0.0, &NEAR_ONE_DISTS, &ctx.spec).ok();
    ClaimOutput { verdicts, table }
}

pub const SLOPE_CASES: [(f64, f64); 2] = [(0.0, 0.5), (1.0, 1.0)];
pub const SLOPE_DISTS: [f64; 3] = [1e-2, 1e-3, 1e-4];

fn run_e54(cl: &Claim, ctx: &Ctx) -> ClaimOutput {
    let verdicts = SLOPE_CASES
        .iter()
        .map(|&(nu, mu)| {
            let r = (|| {
                let ld = LegendreOrderDegree::new(c(nu, 0.0), c(mu, 0.0))?;
                let s = near_one_slope(&ld, &SLOPE_DISTS, &ctx.spec)?;
                Ok((s + 0.5 * mu).abs())
            })();
            cl.verdict(pt(&[("nu", f(nu)), ("mu", f(mu))]), ctx.tol, r)
        })
        .collect();
    ClaimOutput { verdicts, table: None }
}

/// All registered claims, sorted by id.
pub static REGISTRY: [Claim; 21] = [
    Claim {
        id: "E03-beta-half-line",
        description: "Beta integral over the half line equals the Euler formula",
        target: "int_0^inf u^(a-1)(1+u)^(-a-b) du = B(a,b)",
        default_grid: "6 (alpha, beta) points with positive real parts",
        tolerance: 1e-9,
        mode: Mode::Assert,
        run: run_e03,
    },
    Claim {
        id: "E04-euler-beta",
        description: "Beta integral on [0,1] equals Gamma(a)Gamma(b)/Gamma(a+b)",
        target: "relative deviation 0",
        default_grid: "Re in {0.5,1,2.5}, Im in {0,+-1}: 12 points",
        tolerance: 1e-9,
        mode: Mode::Assert,
        run: run_e04,
    },
    Claim {
        id: "E06-legendre-baseline",
        description: "Q_0(2) and Q_1(2) from the cosh-kernel integral",
        target: "ln(3)/2 and ln(3) - 1",
        default_grid: "nu in {0,1}, z = 2",
        tolerance: 1e-8,
        mode: Mode::Assert,
        run: run_e06,
    },
    Claim {
        id: "E12-beta-delta",
        description: "B(eps+i tau, eps-i tau) tends weakly to 2 pi delta(tau)",
        target: "2 pi phi(0), pi phi(0), 0 for 0 interior, at an endpoint, outside",
        default_grid: "intervals [-1,1], [0,1], [1,2] over the eps ladder",
        tolerance: 1e-2,
        mode: Mode::Assert,
        run: run_e12,
    },
    Claim {
        id: "E16-mellin-forward",
        description: "Regularized Mellin transform of 1 tends weakly to 2 pi delta",
        target: "2 pi phi(0)",
        default_grid: "probe on [-1,1] over the eps ladder",
        tolerance: 1e-2,
        mode: Mode::Assert,
        run: run_e16,
    },
    Claim {
        id: "E17-mellin-inverse",
        description: "Mollified inverse Mellin integral equals exp(-eps |ln t|) and tends to 1",
        target: "exp(-eps) at t = e; 1 as eps -> 0",
        default_grid: "t = e over the eps ladder, t = 1",
        tolerance: 1e-8,
        mode: Mode::Assert,
        run: run_e17,
    },
    Claim {
        id: "E18-gauss-sum",
        description: "Series near z = 1 approaches the Gauss summation value",
        target: "Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b))",
        default_grid: "5 admissible parameter sets, z = 1 - 1e-3 and 1 - 1e-4",
        tolerance: 1e-2,
        mode: Mode::Assert,
        run: run_e18,
    },
    Claim {
        id: "E21-duplication-form",
        description: "Family closed form equals its duplication-formula rewrite",
        target: "relative residual 0",
        default_grid: "eps in {1e-3,1e-2,0.1,0.5} x tau in {0.1,0.5,1,2}",
        tolerance: 1e-10,
        mode: Mode::Assert,
        run: run_e21,
    },
    Claim {
        id: "E22-factorization",
        description: "Family closed form equals f(eps,tau)(eps+i tau) omega_eps(tau)",
        target: "relative residual 0; f(0,0) = pi; df/deps(0,0) = 0",
        default_grid: "eps in {1e-3,1e-2,0.1,0.5} x tau in {0.1,0.5,1,2}",
        tolerance: 1e-10,
        mode: Mode::Assert,
        run: run_e22,
    },
    Claim {
        id: "E25-taylor-data",
        description: "Digamma/trigamma derivatives of f match finite differences; Taylor bound holds",
        target: "relative deviation 0; remainder/bound <= 1",
        default_grid: "4 (eps, tau) derivative points, 6 Taylor-bound points",
        tolerance: 1e-4,
        mode: Mode::Assert,
        run: run_e25,
    },
    Claim {
        id: "E31-weak-limit-2f1",
        description: "The imaginary-parameter family at z = 1 tends weakly to 0",
        target: "0",
        default_grid: "probe on [-1,1] and constant on [1,2] over the eps ladder",
        tolerance: 1e-2,
        mode: Mode::Assert,
        run: run_e31,
    },
    Claim {
        id: "E32-power-identity",
        description: "2F1(a,b;b;z) = (1-z)^(-a)",
        target: "relative deviation 0",
        default_grid: "4 (a, b, z) points",
        tolerance: 1e-12,
        mode: Mode::Assert,
        run: run_e32,
    },
    Claim {
        id: "E35-oscillatory",
        description: "cos, sin and power pairings in ln|1-z| vanish as z -> 1",
        target: "sqrt(pi) exp(-k^2/4), 0, sqrt(pi) exp(-k^2/4)",
        default_grid: "gaussian on [-5,5], |1-z| = e^-k, k in {5,10,20}",
        tolerance: 1e-6,
        mode: Mode::Assert,
        run: run_e35,
    },
    Claim {
        id: "E45-large-z-asym",
        description: "Large-z law of Q_nu^mu",
        target: "ratio 1",
        default_grid: "(nu, mu) in {(0,0), (2,0.5), (1,0.5i)}, z = 1e3",
        tolerance: 1e-2,
        mode: Mode::Assert,
        run: run_e45,
    },
    Claim {
        id: "E46-eta",
        description: "cos(tau eta) = |Gamma(nu+1+i tau)|^2/Gamma(nu+1)^2 and its large-nu limit",
        target: "pi/sinh(pi) at nu = 0, tau = 1; 1 at large nu",
        default_grid: "nu in {0, 1e3}, tau = 1",
        tolerance: 1e-10,
        mode: Mode::Assert,
        run: run_e46,
    },
    Claim {
        id: "E47-legendre-relation",
        description: "Q_nu^(i tau) from its integral versus the Gamma-ratio relation",
        target: "deviation grid (recorded, not asserted)",
        default_grid: "nu in {0,1,2} x tau in {0.25,0.5,1} x z in {1.5,2,5}",
        tolerance: 1e-8,
        mode: Mode::Report,
        run: run_e47,
    },
    Claim {
        id: "E47-tau-zero-exactness",
        description: "The relation is exact at tau = 0",
        target: "relative deviation 0",
        default_grid: "6 (nu, z) points",
        tolerance: 1e-8,
        mode: Mode::Assert,
        run: run_e47_tau_zero,
    },
    Claim {
        id: "E48-gamma-ratio",
        description: "Gamma(nu+1+i tau)/Gamma(nu+1) approaches nu^(i tau)",
        target: "deviation 0",
        default_grid: "nu = 1e3, tau in {1, 0.5}",
        tolerance: 1e-3,
        mode: Mode::Assert,
        run: run_e48,
    },
    Claim {
        id: "E49-large-nu-asym",
        description: "Explicit large-nu value nu^(-1/2) exp(-(nu+1/2) xi) versus quadrature",
        target: "ratio 1",
        default_grid: "nu in {10,50,250}, z = 2",
        tolerance: 3e-2,
        mode: Mode::Report,
        run: run_e49,
    },
    Claim {
        id: "E53-near-one",
        description: "Logarithmic laws of Q_nu and Q_nu^(i tau) as z -> 1",
        target: "ratio 1",
        default_grid: "nu in {0,1} at z - 1 = 1e-6; nu = 1, tau = 0.5",
        tolerance: 2e-2,
        mode: Mode::Report,
        run: run_e53,
    },
    Claim {
        id: "E54-near-one-power",
        description: "Power-law divergence (z-1)^(-mu/2) of Q_nu^mu as z -> 1",
        target: "log-log slope -Re(mu)/2",
        default_grid: "(nu, mu) in {(0,0.5), (1,1)}, z - 1 in {1e-2,1e-3,1e-4}",
        tolerance: 2e-2,
        mode: Mode::Assert,
        run: run_e54,
    },
];

pub fn find(id: &str) -> Result<&'static Claim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::Config(format!("unknown claim id '{id}'")))
}
