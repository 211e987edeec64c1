//! Named-function evaluation with `key=value` parameters.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::value::RawValue;

use super::report::json_f64;
use crate::error::{Error, Result};
use crate::quad::{IntegralResult, QuadratureSpec};
use crate::{complexfn, distrib, hyper, legendre};

pub const CATALOG: [&str; 19] = [
    "gamma",
    "log_gamma",
    "digamma",
    "trigamma",
    "beta",
    "beta_reg",
    "omega_eps",
    "mellin_inverse",
    "hyp2f1",
    "gauss_sum",
    "family_closed_form",
    "f_factor",
    "q_nu",
    "q_nu_mu",
    "q_nu_itau",
    "relation_rhs",
    "solve_eta",
    "asymptotic_large_z",
    "large_nu_explicit",
];

struct Params {
    map: BTreeMap<String, String>,
}

impl Params {
    fn parse(tokens: &[String]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for t in tokens {
            let (k, v) = t
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key=value, got '{t}'")))?;
            map.insert(k.to_string(), v.to_string());
        }
        Ok(Self { map })
    }

    fn raw(&self, key: &str) -> Result<&str> {
        self.map
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Config(format!("missing parameter '{key}'")))
    }

    fn complex(&self, key: &str) -> Result<Complex64> {
        let s = self.raw(key)?;
        Complex64::from_str(s).map_err(|_| Error::Config(format!("cannot parse {key}={s} as a complex number")))
    }

    fn real(&self, key: &str) -> Result<f64> {
        let s = self.raw(key)?;
        s.parse::<f64>().map_err(|_| Error::Config(format!("cannot parse {key}={s} as a real number")))
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.map.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::Config(format!("unexpected parameter '{k}' (expected {})", allowed.join(", ")))),
            None => Ok(()),
        }
    }
}

#[derive(Serialize)]
struct ComplexJson {
    re: Box<RawValue>,
    im: Box<RawValue>,
}

#[derive(Serialize)]
struct ValueJson<'a> {
    function: &'a str,
    value: ComplexJson,
    error_estimate: Box<RawValue>,
}

#[derive(Serialize)]
struct EtaJson<'a> {
    function: &'a str,
    eta: Box<RawValue>,
    cos_value: Box<RawValue>,
    branch_index: i64,
    degenerate: bool,
}

fn value_json(name: &str, v: Complex64, err: f64) -> String {
    serde_json::to_string(&ValueJson {
        function: name,
        value: ComplexJson {
            re: json_f64(v.re),
            im: json_f64(v.im),
        },
        error_estimate: json_f64(err),
    })
    .expect("serializable")
}

fn exact(v: Complex64) -> (Complex64, f64) {
    (v, 0.0)
}

fn quad(r: IntegralResult) -> (Complex64, f64) {
    (r.value, r.error_estimate)
}

/// Evaluates `name` and returns one line of JSON.
pub fn eval(name: &str, tokens: &[String]) -> Result<String> {
    let p = Params::parse(tokens)?;
    let spec = QuadratureSpec::default();
    let z_cut = |p: &Params| legendre::CutPlanePoint::new(p.complex("z")?);
    let (v, err) = match name {
        "gamma" | "log_gamma" | "digamma" | "trigamma" => {
            p.check_keys(&["z"])?;
            let z = p.complex("z")?;
            exact(match name {
                "gamma" => complexfn::gamma(z)?,
                "log_gamma" => complexfn::log_gamma(z)?,
                "digamma" => complexfn::digamma(z)?,
                _ => complexfn::trigamma(z)?,
            })
        }
        "beta" => {
            p.check_keys(&["alpha", "beta"])?;
            exact(distrib::beta(p.complex("alpha")?, p.complex("beta")?)?)
        }
        "beta_reg" => {
            p.check_keys(&["tau", "eps"])?;
            exact(distrib::beta_reg(p.real("tau")?, p.real("eps")?)?)
        }
        "omega_eps" => {
            p.check_keys(&["x", "eps"])?;
            exact(Complex64::new(distrib::omega_eps(p.real("x")?, p.real("eps")?)?, 0.0))
        }
        "mellin_inverse" => {
            p.check_keys(&["t", "eps"])?;
            quad(distrib::mellin_inverse_check(p.real("t")?, p.real("eps")?, &spec)?)
        }
        "hyp2f1" => {
            p.check_keys(&["a", "b", "c", "z"])?;
            let hp = hyper::Hyp2F1Params::new(p.complex("a")?, p.complex("b")?, p.complex("c")?)?;
            exact(hyper::hyp2f1(&hp, p.complex("z")?)?)
        }
        "gauss_sum" => {
            p.check_keys(&["a", "b", "c"])?;
            let hp = hyper::Hyp2F1Params::new(p.complex("a")?, p.complex("b")?, p.complex("c")?)?;
            exact(hyper::gauss_sum(&hp)?)
        }
        "family_closed_form" => {
            p.check_keys(&["tau", "eps"])?;
            exact(hyper::family_closed_form(&hyper::FamilyPoint::new(p.real("tau")?, p.real("eps")?)?)?)
        }
        "f_factor" => {
            p.check_keys(&["eps", "tau"])?;
            exact(hyper::f_factor(p.real("eps")?, p.real("tau")?)?)
        }
        "q_nu" => {
            p.check_keys(&["nu", "z"])?;
            quad(legendre::q_nu(p.complex("nu")?, &z_cut(&p)?, &spec)?)
        }
        "q_nu_mu" => {
            p.check_keys(&["nu", "mu", "z"])?;
            let ld = legendre::LegendreOrderDegree::new(p.complex("nu")?, p.complex("mu")?)?;
            quad(legendre::q_nu_mu(&ld, &z_cut(&p)?, &spec)?)
        }
        "q_nu_itau" => {
            p.check_keys(&["nu", "tau", "z"])?;
            quad(legendre::q_nu_itau_direct(p.complex("nu")?, p.real("tau")?, &z_cut(&p)?, &spec)?)
        }
        "relation_rhs" => {
            p.check_keys(&["nu", "tau", "z"])?;
            quad(legendre::relation_rhs(p.complex("nu")?, p.real("tau")?, &z_cut(&p)?, &spec)?)
        }
        "asymptotic_large_z" => {
            p.check_keys(&["nu", "mu", "z"])?;
            let ld = legendre::LegendreOrderDegree::new(p.complex("nu")?, p.complex("mu")?)?;
            exact(legendre::asymptotic_large_z(&ld, &z_cut(&p)?)?)
        }
        "large_nu_explicit" => {
            p.check_keys(&["nu", "tau", "z"])?;
            exact(legendre::large_nu_explicit(p.complex("nu")?, p.real("tau")?, &z_cut(&p)?)?)
        }
        "solve_eta" => {
            p.check_keys(&["nu", "tau"])?;
            let s = legendre::solve_eta(p.real("nu")?, p.real("tau")?)?;
            return Ok(serde_json::to_string(&EtaJson {
                function: name,
                eta: json_f64(s.eta),
                cos_value: json_f64(s.cos_value),
                branch_index: s.branch_index,
                degenerate: s.degenerate,
            })
            .expect("serializable"));
        }
        other => {
            return Err(Error::Config(format!(
                "unknown function '{other}' (available: {})",
                CATALOG.join(", ")
            )))
        }
    };
    Ok(value_json(name, v, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn evaluates_catalog_entries() {
        let out = eval("gamma", &args(&["z=0.5"])).unwrap();
        assert!(out.contains("\"re\":1.77245385090551"), "{out}");
        let out = eval("solve_eta", &args(&["nu=0", "tau=1"])).unwrap();
        assert!(out.contains("\"eta\":1.29"), "{out}");
        let out = eval("q_nu", &args(&["nu=0", "z=2"])).unwrap();
        assert!(out.contains("\"re\":5.4930614433"), "{out}");
        let out = eval("beta", &args(&["alpha=0.3+0.4i", "beta=0.7-0.4i"])).unwrap();
        assert!(out.starts_with("{\"function\":\"beta\""));
    }

    #[test]
    fn reports_bad_tokens() {
        let e = eval("gamma", &args(&["z=abc"])).unwrap_err().to_string();
        assert!(e.contains("z=abc"));
        assert!(eval("gamma", &args(&["z"])).is_err());
        assert!(eval("gamma", &args(&["w=1"])).is_err());
        assert!(eval("zeta", &args(&[])).is_err());
        assert!(matches!(eval("gamma", &args(&["z=0"])), Err(Error::Pole { at: 0 })));
    }
}
