//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export returns a flat `Float64Array` so the page can plot it without
//! any glue beyond the generated module. The plain functions in [`native`]
//! carry the logic and are what the tests exercise.

use wasm_bindgen::prelude::*;

pub mod native {
    use regfun::distrib::{beta_reg, beta_reg_kernel, delta_target, Probe};
    use regfun::hyper::{family_closed_form, FamilyPoint};
    use regfun::legendre::{relation_record, CutPlanePoint};
    use regfun::quad::{integrate_pairing, QuadratureSpec};
    use regfun::ComplexValue;

    fn grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, String> {
        if !(n >= 2 && n <= 20_000) {
            return Err(format!("need between 2 and 20000 samples (got {n})"));
        }
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(format!("need a finite range lo < hi (got {lo}, {hi})"));
        }
        Ok((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect())
    }

    /// `[τ₀, re₀, im₀, τ₁, …]` of `B(ε+iτ, ε−iτ)/(2π)` on `[−τ_max, τ_max]`.
    pub fn delta_sequence(eps: f64, tau_max: f64, n: usize) -> Result<Vec<f64>, String> {
        let mut out = Vec::with_capacity(3 * n);
        for tau in grid(-tau_max, tau_max, n)? {
            let v = beta_reg(tau, eps).map_err(|e| e.to_string())? / (2.0 * std::f64::consts::PI);
            out.extend([tau, v.re, v.im]);
        }
        Ok(out)
    }

    /// `[re, im, error_estimate, target]` of `∫_a^b φ(τ) B(ε+iτ, ε−iτ) dτ`,
    /// with the limit `2π·φ(0)` (halved at an endpoint) it should approach.
    pub fn delta_pairing(probe: &str, eps: f64, a: f64, b: f64) -> Result<Vec<f64>, String> {
        let p = Probe::by_name(probe).map_err(|e| e.to_string())?;
        let r = integrate_pairing(&p, &beta_reg_kernel(eps), a, b, &QuadratureSpec::default())
            .map_err(|e| e.to_string())?;
        let target = 2.0 * std::f64::consts::PI * delta_target(&p, a, b);
        Ok(vec![r.value.re, r.value.im, r.error_estimate, target])
    }

    /// `[τ₀, re₀, im₀, …]` of the hypergeometric family at unit argument.
    pub fn family_curve(eps: f64, tau_max: f64, n: usize) -> Result<Vec<f64>, String> {
        let mut out = Vec::with_capacity(3 * n);
        for tau in grid(-tau_max, tau_max, n)? {
            let pt = FamilyPoint::new(tau, eps).map_err(|e| e.to_string())?;
            let v = family_closed_form(&pt).map_err(|e| e.to_string())?;
            out.extend([tau, v.re, v.im]);
        }
        Ok(out)
    }

    /// `[lhs_re, lhs_im, rhs_re, rhs_im, rel_dev]` of the imaginary-order
    /// relation at real `z > 1`: the integral on the left, the Γ-factor times
    /// `Q_ν(z)` on the right.
    pub fn legendre_relation(nu: f64, tau: f64, z: f64) -> Result<Vec<f64>, String> {
        let zp = CutPlanePoint::real(z).map_err(|e| e.to_string())?;
        let r = relation_record(ComplexValue::new(nu, 0.0), tau, &zp, &QuadratureSpec::default())
            .map_err(|e| e.to_string())?;
        Ok(vec![r.lhs.re, r.lhs.im, r.rhs.re, r.rhs.im, r.rel_dev])
    }
}

fn js(r: Result<Vec<f64>, String>) -> Result<Vec<f64>, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn delta_sequence(eps: f64, tau_max: f64, n: usize) -> Result<Vec<f64>, JsError> {
    js(native::delta_sequence(eps, tau_max, n))
}

#[wasm_bindgen]
pub fn delta_pairing(probe: &str, eps: f64, a: f64, b: f64) -> Result<Vec<f64>, JsError> {
    js(native::delta_pairing(probe, eps, a, b))
}

#[wasm_bindgen]
pub fn family_curve(eps: f64, tau_max: f64, n: usize) -> Result<Vec<f64>, JsError> {
    js(native::family_curve(eps, tau_max, n))
}

#[wasm_bindgen]
pub fn legendre_relation(nu: f64, tau: f64, z: f64) -> Result<Vec<f64>, JsError> {
    js(native::legendre_relation(nu, tau, z))
}
