//! Claim execution, sweeps and the function catalog behind the CLI.

pub mod claims;
pub mod config;
pub mod eval;
pub mod report;

use std::time::Instant;

use claims::{Claim, ClaimVerdict, Ctx, Mode, Status, REGISTRY};
use config::RunConfig;
use report::Table;

use crate::error::{Error, Result};
use crate::quad::QuadratureSpec;

/// Verdicts of one claim.
#[derive(Debug, Clone)]
pub struct ClaimRun {
    pub claim: &'static Claim,
    pub verdicts: Vec<ClaimVerdict>,
    pub table: Option<Table>,
}

impl ClaimRun {
    /// `(passed, failed, reported)`
    pub fn counts(&self) -> (usize, usize, usize) {
        let n = |s| self.verdicts.iter().filter(|v| v.status == s).count();
        (n(Status::Pass), n(Status::Fail), n(Status::Reported))
    }

    /// Largest finite deviation; NaN if none.
    pub fn max_deviation(&self) -> f64 {
        self.verdicts
            .iter()
            .map(|v| v.deviation)
            .filter(|d| d.is_finite())
            .fold(f64::NAN, f64::max)
    }

    pub fn failed(&self) -> bool {
        self.claim.mode == Mode::Assert && self.verdicts.iter().any(|v| v.status == Status::Fail)
    }
}

#[derive(Debug, Clone)]
pub struct RunSummary {
    pub runs: Vec<ClaimRun>,
}

impl RunSummary {
    pub fn assert_failures(&self) -> usize {
        self.runs.iter().filter(|r| r.failed()).count()
    }

    /// Exit-status contract: success iff no assert claim failed.
    pub fn success(&self) -> bool {
        self.assert_failures() == 0
    }

    pub fn total_runtime_ms(&self) -> u64 {
        self.runs.iter().flat_map(|r| &r.verdicts).map(|v| v.runtime_ms).sum()
    }
}

fn context(claim: &Claim, cfg: &RunConfig) -> Result<Ctx> {
    Ok(Ctx {
        ladder: cfg.ladder(),
        probe: cfg.probe()?,
        tol: cfg.tolerance_for(claim),
        spec: QuadratureSpec::default(),
    })
}

fn execute(claim: &'static Claim, cfg: &RunConfig) -> Result<ClaimRun> {
    let ctx = context(claim, cfg)?;
    let start = Instant::now();
    let out = (claim.run)(claim, &ctx);
    let mut verdicts = out.verdicts;
    if cfg.timing {
        // whole-claim wall time, spread over its points
        let ms = start.elapsed().as_millis() as u64;
        let n = verdicts.len().max(1) as u64;
        for v in &mut verdicts {
            v.runtime_ms = ms / n;
        }
    }
    Ok(ClaimRun {
        claim,
        verdicts,
        table: out.table,
    })
}

pub fn run_claim(id: &str, cfg: &RunConfig) -> Result<ClaimRun> {
    execute(claims::find(id)?, cfg)
}

/// Every registered claim, ordered by id whatever the execution order.
pub fn run_all(cfg: &RunConfig) -> Result<RunSummary> {
    let mut runs = if cfg.parallel {
        std::thread::scope(|s| {
            let handles: Vec<_> = REGISTRY.iter().map(|c| s.spawn(move || execute(c, cfg))).collect();
            handles
                .into_iter()
                .map(|h| h.join().map_err(|_| Error::Consistency("claim thread panicked".into()))?)
                .collect::<Result<Vec<_>>>()
        })?
    } else {
        REGISTRY.iter().map(|c| execute(c, cfg)).collect::<Result<Vec<_>>>()?
    };
    runs.sort_by_key(|r| r.claim.id);
    Ok(RunSummary { runs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    Eps,
    Z,
    Nu,
}

impl std::str::FromStr for SweepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eps" => Ok(SweepKind::Eps),
            "z" => Ok(SweepKind::Z),
            "nu" => Ok(SweepKind::Nu),
            other => Err(Error::Config(format!("unknown sweep kind '{other}' (eps, z, nu)"))),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Config(format!("bad ladder entry '{}'", t.trim()))))
        .collect()
}

/// One CSV-ready row per ladder point of a claim's sweep.
pub fn sweep(kind: SweepKind, claim: &str, ladder: Option<&str>, cfg: &RunConfig) -> Result<Table> {
    use crate::distrib::{delta_claim_sweep, delta_target, mellin_forward_sweep, EpsilonLadder};
    use crate::hyper::{family_weak_limit_sweep, oscillatory_limit_sweep, OscKind};
    use num_complex::Complex64;
    use report::fmt_f64 as f;

    let spec = QuadratureSpec::default();
    let probe = cfg.probe()?;
    let table_of = |param: &str, r: &crate::distrib::PairingSweepResult, target: f64| {
        let mut t = Table::new(&[param, "re", "im", "err_estimate", "deviation"]);
        for p in &r.points {
            t.push(vec![
                f(p.param),
                f(p.value.re),
                f(p.value.im),
                f(p.error_estimate),
                f((p.value - Complex64::new(target, 0.0)).norm()),
            ]);
        }
        t
    };
    let sweep_err = |e: Error| match e {
        Error::Sweep { at, source, .. } => Error::Config(format!("sweep stopped at {at:e}: {source}")),
        other => other,
    };
    claims::find(claim)?;
    match (kind, claim) {
        (SweepKind::Eps, "E12-beta-delta" | "E16-mellin-forward" | "E31-weak-limit-2f1") => {
            let ladder = match ladder {
                Some(s) => EpsilonLadder::parse(s)?,
                None => cfg.ladder(),
            };
            let (r, target) = match claim {
                "E12-beta-delta" => (delta_claim_sweep(&probe, -1.0, 1.0, &ladder, &spec), 2.0 * std::f64::consts::PI * delta_target(&probe, -1.0, 1.0)),
                "E16-mellin-forward" => (mellin_forward_sweep(&probe, -1.0, 1.0, &ladder, &spec), 2.0 * std::f64::consts::PI * delta_target(&probe, -1.0, 1.0)),
                _ => (family_weak_limit_sweep(&probe, -1.0, 1.0, &ladder, &spec), 0.0),
            };
            Ok(table_of("epsilon", &r.map_err(sweep_err)?, target))
        }
        (SweepKind::Eps, "E17-mellin-inverse") => {
            let ladder = match ladder {
                Some(s) => EpsilonLadder::parse(s)?,
                None => cfg.ladder(),
            };
            let mut t = Table::new(&["epsilon", "re", "im", "err_estimate", "deviation"]);
            for &eps in ladder.values() {
                let r = crate::distrib::mellin_inverse_check(std::f64::consts::E, eps, &spec)?;
                t.push(vec![f(eps), f(r.value.re), f(r.value.im), f(r.error_estimate), f((r.value - (-eps).exp()).norm())]);
            }
            Ok(t)
        }
        (SweepKind::Z, "E53-near-one") => {
            let d = match ladder {
                Some(s) => parse_list(s)?,
                None => claims::NEAR_ONE_DISTS.to_vec(),
            };
            claims::near_one_table(0.0, &d, &spec)
        }
        (SweepKind::Z, "E35-oscillatory") => {
            let ladder = match ladder {
                Some(s) => EpsilonLadder::parse(s)?,
                None => EpsilonLadder::new(claims::OSC_K.iter().map(|k| (-k).exp()).collect())?,
            };
            let r = oscillatory_limit_sweep(&crate::distrib::Probe::gaussian(), OscKind::Cos, -5.0, 5.0, &ladder, &spec)
                .map_err(sweep_err)?;
            let mut t = Table::new(&["z_minus_1", "re", "im", "err_estimate", "deviation"]);
            for p in &r.points {
                let k = -p.param.ln();
                let oracle = std::f64::consts::PI.sqrt() * (-k * k / 4.0).exp();
                t.push(vec![f(-p.param), f(p.value.re), f(p.value.im), f(p.error_estimate), f((p.value - oracle).norm())]);
            }
            Ok(t)
        }
        (SweepKind::Nu, "E49-large-nu-asym") => {
            let nus = match ladder {
                Some(s) => parse_list(s)?,
                None => claims::LARGE_NU.to_vec(),
            };
            claims::large_nu_table(&nus, 2.0, &spec)
        }
        _ => Err(Error::Config(format!("claim {claim} has no {kind:?} sweep"))),
    }
}
