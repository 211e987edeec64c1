//! Acceptance criteria at their pinned tolerances, one line per criterion.
//!
//! Criteria listed in [`EXPECTED_FAILURES`] have been analyzed as
//! unattainable at the pinned point. They are still evaluated and printed as
//! FAIL; the run only breaks if one of them starts passing, so the list
//! cannot go stale.

use std::f64::consts::{E, PI};
use std::process::{Command, ExitCode};

use num_complex::Complex64;
use regfun::distrib::{
    beta, beta_integral, beta_semi_infinite, delta_claim_sweep, mellin_forward_sweep, mellin_inverse_check,
    EpsilonLadder, Probe,
};
use regfun::harness::claims::{self, Status};
use regfun::harness::config::RunConfig;
use regfun::hyper::{
    f_derivatives, f_factor, family_closed_form, family_duplication_form, family_factorized,
    family_weak_limit_sweep, gauss_sum, hyp2f1, oscillatory_pairing, FamilyPoint, OscKind,
};
use regfun::legendre::{
    asymptotic_large_z, gamma_ratio_deviation, large_nu_explicit, near_one_q_nu, near_one_slope, q_nu, q_nu_mu,
    relation_record, solve_eta, CutPlanePoint, LegendreOrderDegree,
};
use regfun::quad::QuadratureSpec;
use regfun::Result;

/// `(criterion, reason)` for criteria that fail for analyzed reasons.
const EXPECTED_FAILURES: [(&str, &str); 2] = [
    (
        "14",
        "the explicit large-degree form omits the factor sqrt(pi/(2 sinh xi)), 0.952 at z = 2",
    ),
    (
        "15",
        "the logarithmic law drops the constant term, so its ratio converges like 1/|ln(z-1)| (1.050 and 0.905 at 1e-6)",
    ),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn euler_formula() -> Result<Outcome> {
    let grid = claims::euler_grid();
    let mut worst: f64 = 0.0;
    for &(a, b) in &grid {
        worst = worst.max(rel(beta_integral(a, b, &spec())?.value, beta(a, b)?));
    }
    Ok(check(grid.len() == 12 && worst <= 1e-9, format!("{} points, max rel dev {worst:.2e} (tol 1e-9)", grid.len())))
}

fn half_line_representation() -> Result<Outcome> {
    let pts = claims::half_line_points();
    let mut worst: f64 = 0.0;
    for &(a, b) in &pts {
        worst = worst.max(rel(beta_semi_infinite(a, b, &spec())?.value, beta(a, b)?));
    }
    Ok(check(pts.len() == 6 && worst <= 1e-9, format!("{} points, max rel dev {worst:.2e} (tol 1e-9)", pts.len())))
}

fn delta_identity() -> Result<Outcome> {
    let g = Probe::gaussian();
    let ladder = EpsilonLadder::default();
    let full = delta_claim_sweep(&g, -1.0, 1.0, &ladder, &spec())?;
    let half = delta_claim_sweep(&g, 0.0, 1.0, &ladder, &spec())?;
    let d_full = (full.extrapolated_limit - 2.0 * PI).norm() / (2.0 * PI);
    let d_half = (half.extrapolated_limit - PI).norm() / PI;
    Ok(check(
        ladder.last() <= 1e-5 && d_full <= 1e-2 && full.fitted_order > 0.0 && d_half <= 1e-2,
        format!(
            "limit {:.6} rel dev {d_full:.2e}, order {:.3}; endpoint limit {:.6} rel dev {d_half:.2e} (tol 1e-2)",
            full.extrapolated_limit.re, full.fitted_order, half.extrapolated_limit.re
        ),
    ))
}

fn mellin_pair() -> Result<Outcome> {
    let ladder = EpsilonLadder::default();
    let fwd = mellin_forward_sweep(&Probe::gaussian(), -1.0, 1.0, &ladder, &spec())?;
    let d_fwd = (fwd.extrapolated_limit - 2.0 * PI).norm() / (2.0 * PI);
    let mut worst: f64 = 0.0;
    for &eps in ladder.values() {
        let r = mellin_inverse_check(E, eps, &spec())?;
        worst = worst.max((r.value - (-eps).exp()).norm());
    }
    let at = mellin_inverse_check(E, 1e-4, &spec())?.value;
    let d_lim = (at - 1.0).norm();
    Ok(check(
        d_fwd <= 1e-2 && worst <= 1e-8 && d_lim <= 1e-4,
        format!("forward rel dev {d_fwd:.2e}; inverse max dev {worst:.2e} (tol 1e-8); |value - 1| at 1e-4 = {d_lim:.6e} (tol 1e-4)"),
    ))
}

fn gauss_summation() -> Result<Outcome> {
    let sets = claims::gauss_sum_sets();
    let (mut worst, mut improving) = (0.0f64, true);
    for p in &sets {
        let g = gauss_sum(p)?;
        let d3 = rel(hyp2f1(p, c(1.0 - 1e-3))?, g);
        let d4 = rel(hyp2f1(p, c(1.0 - 1e-4))?, g);
        worst = worst.max(d3);
        improving &= d4 < d3;
    }
    Ok(check(
        sets.len() == 5 && worst <= 1e-2 && improving,
        format!("{} sets, max dev at 1-1e-3 {worst:.2e} (tol 1e-2), improving at 1-1e-4: {improving}", sets.len()),
    ))
}

fn family_grid() -> Result<Vec<FamilyPoint>> {
    let mut out = Vec::new();
    for &eps in &claims::FAMILY_EPS {
        for &tau in &claims::FAMILY_TAU {
            out.push(FamilyPoint::new(tau, eps)?);
        }
    }
    Ok(out)
}

fn duplication_pathway() -> Result<Outcome> {
    let grid = family_grid()?;
    let mut worst: f64 = 0.0;
    for p in &grid {
        worst = worst.max(rel(family_duplication_form(p)?, family_closed_form(p)?));
    }
    Ok(check(grid.len() == 16 && worst <= 1e-10, format!("{} points, max rel residual {worst:.2e} (tol 1e-10)", grid.len())))
}

fn factorization_and_taylor() -> Result<Outcome> {
    let grid = family_grid()?;
    let mut fact: f64 = 0.0;
    let (mut d1, mut d2) = (0.0f64, 0.0f64);
    for p in &grid {
        fact = fact.max(rel(family_factorized(p)?, family_closed_form(p)?));
        let (eps, tau) = (p.eps(), p.tau());
        let h = 1e-4;
        let (fm, f0, fp) = (f_factor(eps - h, tau)?, f_factor(eps, tau)?, f_factor(eps + h, tau)?);
        let (a1, a2) = f_derivatives(eps, tau)?;
        d1 = d1.max(rel(a1, (fp - fm) / (2.0 * h)));
        d2 = d2.max(rel(a2, (fp - 2.0 * f0 + fm) / (h * h)));
    }
    Ok(check(
        fact <= 1e-10 && d1 <= 1e-4 && d2 <= 1e-4,
        format!("identity residual {fact:.2e} (tol 1e-10); f' dev {d1:.2e}, f'' dev {d2:.2e} (tol 1e-4)"),
    ))
}

fn family_weak_limit() -> Result<Outcome> {
    let ladder = EpsilonLadder::default();
    let r = family_weak_limit_sweep(&Probe::gaussian(), -1.0, 1.0, &ladder, &spec())?;
    let at = r
        .points
        .iter()
        .find(|p| (p.param / 1e-4 - 1.0).abs() < 1e-9)
        .map(|p| p.value.norm())
        .unwrap_or(f64::NAN);
    let m: Vec<f64> = r.points.iter().map(|p| p.value.norm()).collect();
    let n = m.len();
    let decreasing = n >= 3 && m[n - 1] < m[n - 2] && m[n - 2] < m[n - 3];
    Ok(check(at <= 1e-2 && decreasing, format!("|pairing| at 1e-4 = {at:.3e} (tol 1e-2), last 3 decreasing: {decreasing}")))
}

fn oscillatory_limits() -> Result<Outcome> {
    let g = Probe::gaussian();
    let (mut worst, mut mags) = (0.0f64, Vec::new());
    for k in claims::OSC_K {
        let v = oscillatory_pairing(&g, OscKind::Cos, (-k).exp(), -5.0, 5.0, &spec())?.value;
        worst = worst.max((v - PI.sqrt() * (-k * k / 4.0).exp()).norm());
        mags.push(v.norm());
    }
    let trend = mags.windows(2).all(|w| w[1] < w[0]);
    Ok(check(worst <= 1e-6 && trend, format!("max dev from sqrt(pi) e^(-k^2/4) {worst:.2e} (tol 1e-6), decreasing: {trend}")))
}

fn legendre_baseline() -> Result<Outcome> {
    let z = CutPlanePoint::real(2.0)?;
    let d0 = rel(q_nu(c(0.0), &z, &spec())?.value, c(0.5 * 3f64.ln()));
    let d1 = rel(q_nu(c(1.0), &z, &spec())?.value, c(3f64.ln() - 1.0));
    Ok(check(d0 <= 1e-8 && d1 <= 1e-8, format!("Q_0(2) rel dev {d0:.2e}, Q_1(2) rel dev {d1:.2e} (tol 1e-8)")))
}

fn large_z_asymptote() -> Result<Outcome> {
    let z = CutPlanePoint::real(1e3)?;
    let cases = [(c(0.0), c(0.0)), (c(2.0), c(0.5)), (c(1.0), Complex64::new(0.0, 0.5))];
    let mut parts = Vec::new();
    let mut pass = true;
    for (nu, mu) in cases {
        let ld = LegendreOrderDegree::new(nu, mu)?;
        let ratio = q_nu_mu(&ld, &z, &spec())?.value / asymptotic_large_z(&ld, &z)?;
        pass &= (0.99..=1.01).contains(&ratio.re) && ratio.im.abs() <= 1e-2;
        parts.push(format!("{:.6}{:+.1e}i", ratio.re, ratio.im));
    }
    Ok(check(pass, format!("ratios at z=1e3: {} (range [0.99, 1.01])", parts.join(", "))))
}

fn eta_solver() -> Result<Outcome> {
    let d = (solve_eta(0.0, 1.0)?.cos_value - PI / PI.sinh()).abs();
    let gap = 1.0 - solve_eta(1e3, 1.0)?.cos_value;
    Ok(check(d <= 1e-10 && gap <= 1e-3, format!("cos_value dev {d:.2e} (tol 1e-10); 1 - cos_value at nu=1e3 {gap:.6e} (tol 1e-3)")))
}

fn relation_adjudication() -> Result<Outcome> {
    let mut exact: f64 = 0.0;
    for &(nu, x) in &claims::TAU_ZERO_GRID {
        exact = exact.max(relation_record(c(nu), 0.0, &CutPlanePoint::real(x)?, &spec())?.rel_dev);
    }
    // the report grid goes through the harness so its serialized form is exercised
    let run = regfun::harness::run_claim("E47-legendre-relation", &RunConfig::default())?;
    let rows = run.table.as_ref().map_or(0, |t| t.rows.len());
    let reported = run.verdicts.iter().filter(|v| v.status == Status::Reported && v.deviation.is_finite()).count();
    let csv = run.table.as_ref().map(|t| t.to_csv()).unwrap_or_default();
    let json = regfun::harness::report::verdicts_json(&run.verdicts);
    let serialized = csv.lines().count() == 28 && json.matches("\"REPORTED\"").count() == 27;
    // both sides are computed independently, so the grid must be populated with finite distinct values
    let mut independent = true;
    for &nu in &claims::RELATION_NU {
        for &tau in &claims::RELATION_TAU {
            for &x in &claims::RELATION_Z {
                let r = relation_record(c(nu), tau, &CutPlanePoint::real(x)?, &spec())?;
                independent &= r.lhs.norm().is_finite() && r.rhs.norm().is_finite() && r.lhs != r.rhs;
            }
        }
    }
    Ok(check(
        exact <= 1e-8 && rows == 27 && reported == 27 && serialized && independent,
        format!(
            "tau=0 max rel dev {exact:.2e} on {} points (tol 1e-8); report grid {rows} rows, {reported} REPORTED, max dev {:.3e}",
            claims::TAU_ZERO_GRID.len(),
            run.max_deviation()
        ),
    ))
}

fn large_nu_asymptotics() -> Result<Outcome> {
    let g = gamma_ratio_deviation(1e3, 1.0)?;
    let z = CutPlanePoint::real(2.0)?;
    let ratio = q_nu(c(50.0), &z, &spec())?.value / large_nu_explicit(c(50.0), 0.0, &z)?;
    let d = (ratio - 1.0).norm();
    Ok(check(
        g <= 1e-3 && d <= 0.03,
        format!("gamma-ratio dev {g:.3e} (tol 1e-3); quadrature/explicit at nu=50, z=2 = {:.4} (tol 3%)", ratio.re),
    ))
}

fn near_one_laws() -> Result<Outcome> {
    let z = CutPlanePoint::real(1.0 + 1e-6)?;
    let mut ratios = Vec::new();
    for nu in [0.0, 1.0] {
        ratios.push((q_nu(c(nu), &z, &spec())?.value / near_one_q_nu(c(nu), &z)?).re);
    }
    let log_ok = ratios.iter().all(|r| (r - 1.0).abs() <= 0.02);
    let mut slopes = Vec::new();
    for &(nu, mu) in &claims::SLOPE_CASES {
        let ld = LegendreOrderDegree::new(c(nu), c(mu))?;
        slopes.push((mu, near_one_slope(&ld, &claims::SLOPE_DISTS, &spec())?));
    }
    let slope_ok = slopes.iter().all(|&(mu, s)| (s + 0.5 * mu).abs() <= 0.02);
    Ok(check(
        log_ok && slope_ok,
        format!(
            "log-law ratios at 1e-6: {:.4}, {:.4} (tol 2%); slopes {} (tol 0.02)",
            ratios[0],
            ratios[1],
            slopes.iter().map(|(mu, s)| format!("mu={mu}: {s:.4} vs {:.2}", -0.5 * mu)).collect::<Vec<_>>().join(", ")
        ),
    ))
}

fn harness_determinism() -> Result<Outcome> {
    let bin = env!("CARGO_BIN_EXE_regfun");
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("cli runs");
    let first = run(&["verify-all"]);
    let second = run(&["verify-all"]);
    let identical = first.stdout == second.stdout && !first.stdout.is_empty();
    let clean = first.status.code() == Some(0);
    let dir = std::env::temp_dir().join(format!("regfun-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let cfg = dir.join("forced.cfg");
    std::fs::write(&cfg, "tol.E04-euler-beta = 1e-30\n").expect("config written");
    let forced = run(&["--config", cfg.to_str().expect("utf-8 path"), "verify-all"]);
    let _ = std::fs::remove_dir_all(&dir);
    let forced_code = forced.status.code();
    Ok(check(
        identical && clean && forced_code == Some(1),
        format!(
            "byte-identical: {identical} ({} bytes), default exit {:?}, forced-failure exit {forced_code:?}",
            first.stdout.len(),
            first.status.code()
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Result<Outcome>); 16] = [
        ("1", "Euler integral vs gamma closed form", euler_formula),
        ("2", "half-line representation", half_line_representation),
        ("3", "beta kernel tends to a delta", delta_identity),
        ("4", "Mellin forward and inverse pair", mellin_pair),
        ("5", "Gauss summation from the series", gauss_summation),
        ("6", "duplication pathway", duplication_pathway),
        ("7", "factorization and Taylor data", factorization_and_taylor),
        ("8", "family weak limit", family_weak_limit),
        ("9", "oscillatory limits", oscillatory_limits),
        ("10", "Legendre baseline", legendre_baseline),
        ("11", "large-z asymptote", large_z_asymptote),
        ("12", "eta solver", eta_solver),
        ("13", "relation adjudication", relation_adjudication),
        ("14", "large-degree asymptotics", large_nu_asymptotics),
        ("15", "near-one laws", near_one_laws),
        ("16", "harness determinism", harness_determinism),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let o = run().unwrap_or_else(|e| check(false, format!("error: {e}")));
        let known = EXPECTED_FAILURES.iter().find(|(k, _)| *k == id);
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {verdict}  {name}: {}", o.detail);
        match (o.pass, known) {
            (false, Some((_, why))) => println!("              expected failure: {why}"),
            (false, None) => unexpected += 1,
            (true, Some(_)) => {
                println!("              listed as an expected failure but passed; update the list");
                unexpected += 1;
            }
            (true, None) => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria did not match their expected outcome");
        ExitCode::FAILURE
    }
}
