use std::f64::consts::{E, PI};

use num_complex::Complex64;
use proptest::prelude::*;
use regfun::distrib::Probe;
use regfun::quad::{
    integrate_finite, integrate_interval, integrate_pairing, integrate_semi_infinite,
    integrate_semi_infinite_with_period, EndpointExponents, IntegralResult, QuadratureSpec,
};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn catalog(spec: &QuadratureSpec) -> Vec<(&'static str, IntegralResult, Complex64)> {
    let finite = |p: f64, q: f64| EndpointExponents::new(c(p), c(q)).unwrap();
    vec![
        ("x^2 on [0,1]", integrate_interval(|x| c(x * x), 0.0, 1.0, spec).unwrap(), c(1.0 / 3.0)),
        ("sin on [0,pi]", integrate_interval(|x| c(x.sin()), 0.0, PI, spec).unwrap(), c(2.0)),
        ("exp on [0,1]", integrate_interval(|x| c(x.exp()), 0.0, 1.0, spec).unwrap(), c(E - 1.0)),
        ("1/(1+x^2) on [0,1]", integrate_interval(|x| c(1.0 / (1.0 + x * x)), 0.0, 1.0, spec).unwrap(), c(PI / 4.0)),
        (
            "e^{ix} on [0,3]",
            integrate_interval(|x| Complex64::new(0.0, x).exp(), 0.0, 3.0, spec).unwrap(),
            Complex64::new(3f64.sin(), 1.0 - 3f64.cos()),
        ),
        (
            "x^{-1/2} on [0,1]",
            integrate_finite(|a| Ok(c(a.from_left.powf(-0.5))), 0.0, 1.0, finite(0.5, 1.0), spec).unwrap(),
            c(2.0),
        ),
        (
            "x^{-0.9} on [0,1]",
            integrate_finite(|a| Ok(c(a.from_left.powf(-0.9))), 0.0, 1.0, finite(0.1, 1.0), spec).unwrap(),
            c(10.0),
        ),
        (
            "arcsine density on [0,1]",
            integrate_finite(|a| Ok(c((a.from_left * a.from_right).powf(-0.5))), 0.0, 1.0, finite(0.5, 0.5), spec)
                .unwrap(),
            c(PI),
        ),
        ("e^{-x} on [0,inf)", integrate_semi_infinite(|x| Ok(c((-x).exp())), 1.0, spec).unwrap(), c(1.0)),
        (
            "e^{-x} cos 3x on [0,inf)",
            integrate_semi_infinite_with_period(|x| Ok(c((-x).exp() * (3.0 * x).cos())), 1.0, Some(2.0 * PI / 3.0), spec)
                .unwrap(),
            c(0.1),
        ),
    ]
}

#[test]
fn error_estimates_are_honest() {
    let spec = QuadratureSpec::default();
    let rows = catalog(&spec);
    assert_eq!(rows.len(), 10);
    let mut honest = 0;
    for (name, r, exact) in &rows {
        let err = (r.value - exact).norm();
        if err <= 5.0 * r.error_estimate {
            honest += 1;
        } else {
            eprintln!("{name}: true error {err:e} vs estimate {:e}", r.error_estimate);
        }
        assert!(err <= 1e-9 * exact.norm().max(1.0), "{name}: error {err:e}");
    }
    assert!(honest >= 9, "only {honest} of 10 estimates bound the true error");
}

#[test]
fn truncation_doubling_is_stable() {
    let spec = QuadratureSpec::default();
    let f = |x: f64| Complex64::new(0.0, 2.0 * x).exp() * (-0.5 * x).exp() / (1.0 + x);
    let r = integrate_semi_infinite(|x| Ok(f(x)), 0.5, &spec).unwrap();
    let t = r.truncation_point.unwrap();
    let longer = integrate_interval(f, 0.0, 2.0 * t, &spec.with_max_subdivisions(8000)).unwrap();
    assert!((r.value - longer.value).norm() <= spec.truncation_tail_tol + r.error_estimate + longer.error_estimate);
}

fn gaussian_pair(probe: &Probe, k: f64, a: f64, b: f64, spec: &QuadratureSpec) -> IntegralResult {
    integrate_pairing(probe, &|t: f64| Ok(Complex64::new((-k * t * t).exp(), t)), a, b, spec).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pairing_is_linear(k in 0.1f64..20.0, a in -3.0f64..0.0, w in 0.5f64..4.0) {
        let spec = QuadratureSpec::default();
        let b = a + w;
        let p1 = Probe::gaussian();
        let p2 = Probe::cauchy();
        let kernel = |t: f64| Complex64::new((-k * t * t).exp(), t);
        let sum = integrate_interval(|t| (p1.eval(t) + p2.eval(t)) * kernel(t), a, b, &spec).unwrap();
        let r1 = gaussian_pair(&p1, k, a, b, &spec);
        let r2 = gaussian_pair(&p2, k, a, b, &spec);
        let tol = 2.0 * (sum.error_estimate + r1.error_estimate + r2.error_estimate) + 1e-14;
        prop_assert!((sum.value - r1.value - r2.value).norm() <= tol);
    }

    #[test]
    fn power_endpoints_match_beta(p in 0.06f64..3.0, q in 0.06f64..3.0) {
        let spec = QuadratureSpec::default();
        let exps = EndpointExponents::new(c(p), c(q)).unwrap();
        let r = integrate_finite(
            |x| Ok(c(x.from_left.powf(p - 1.0) * x.from_right.powf(q - 1.0))),
            0.0,
            1.0,
            exps,
            &spec,
        )
        .unwrap();
        let exact = regfun::distrib::beta(c(p), c(q)).unwrap();
        prop_assert!((r.value - exact).norm() <= 1e-9 * exact.norm(), "p={p}, q={q}");
    }
}

#[test]
fn rejects_bad_inputs() {
    let spec = QuadratureSpec::default();
    assert!(integrate_interval(c, 1.0, 0.0, &spec).is_err());
    assert!(integrate_semi_infinite(|x| Ok(c(x)), 0.0, &spec).is_err());
    assert!(integrate_interval(|_| c(f64::NAN), 0.0, 1.0, &spec).is_err());
    let exps = EndpointExponents::new(c(0.01), c(1.0)).unwrap();
    assert!(integrate_finite(|a| Ok(c(a.t)), 0.0, 1.0, exps, &spec).is_err());
    assert!(EndpointExponents::new(c(-0.5), c(1.0)).is_err());
}
