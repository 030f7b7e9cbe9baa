//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Rationals cross the boundary as `p/q` strings and every export returns a
//! JSON document. The logic lives in [`api`] so it can be tested natively.

use wasm_bindgen::prelude::*;

/// Largest index the page may request; keeps the exact arithmetic interactive.
pub const MAX_N: usize = 40;

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn curve(
    family: &str,
    u: &str,
    lambda: &str,
    order: u32,
    n: usize,
    x_min: f64,
    x_max: f64,
    samples: usize,
) -> Result<String, JsValue> {
    api::curve(family, u, lambda, order, n, (x_min, x_max), samples).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify(identity: &str, u: &str, lambda: &str, max_n: usize) -> Result<String, JsValue> {
    api::verify(identity, u, lambda, max_n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn convert(direction: &str, u: &str, lambda: &str, order: u32, max_m: usize) -> Result<String, JsValue> {
    api::convert(direction, u, lambda, order, max_m).map_err(|e| JsValue::from_str(&e))
}

pub mod api {
    use defrost_core::families::{FamilyKind, FamilySpec, Families};
    use defrost_core::stirling::{classical_to_degenerate, degenerate_to_classical};
    use defrost_core::verify::{Grid, GridPoint, IdentityId, Verifier};
    use defrost_core::{Poly, Rational};
    use serde::Serialize;

    use super::MAX_N;

    type Result<T> = std::result::Result<T, String>;

    fn rational(name: &str, s: &str) -> Result<Rational> {
        s.trim().parse().map_err(|_| format!("{name}: expected an integer or p/q, got `{s}`"))
    }

    fn family_kind(name: &str) -> Result<FamilyKind> {
        Ok(match name {
            "dfe" => FamilyKind::DegFrobeniusEuler,
            "dfe-r" => FamilyKind::DegFrobeniusEulerOrderR,
            "dbern" => FamilyKind::DegBernoulli,
            "dgen" => FamilyKind::DegGenocchi,
            "cfe" => FamilyKind::ClassicalFrobeniusEuler,
            other => return Err(format!("unknown family `{other}`")),
        })
    }

    fn within_cap(n: usize) -> Result<()> {
        if n > MAX_N {
            return Err(format!("index {n} exceeds {MAX_N}"));
        }
        Ok(())
    }

    #[derive(Serialize)]
    struct Curve {
        family: FamilySpec,
        n: usize,
        coefficients: Poly,
        /// `[x, y]` samples for plotting only; y is a float rendering of the exact value.
        points: Vec<[f64; 2]>,
    }

    pub fn curve(
        family: &str,
        u: &str,
        lambda: &str,
        order: u32,
        n: usize,
        (x_min, x_max): (f64, f64),
        samples: usize,
    ) -> Result<String> {
        within_cap(n)?;
        let kind = family_kind(family)?;
        let u = if kind.uses_u() { Some(rational("u", u)?) } else { None };
        let spec = FamilySpec::new(kind, u, rational("lambda", lambda)?, order).map_err(|e| e.to_string())?;
        let p = spec.polys(n).map_err(|e| e.to_string())?.pop().expect("nonempty");
        let coeffs: Vec<f64> = p.coeffs().iter().map(Rational::to_f64).collect();
        let samples = samples.clamp(2, 2000);
        let points = (0..samples)
            .map(|i| {
                let x = x_min + (x_max - x_min) * i as f64 / (samples - 1) as f64;
                let y = coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
                [x, y]
            })
            .collect();
        Ok(serde_json::to_string(&Curve { family: spec, n, coefficients: p, points }).unwrap())
    }

    /// One identity at one `(u, λ)` point over the default `r` and `d` axes.
    pub fn verify(identity: &str, u: &str, lambda: &str, max_n: usize) -> Result<String> {
        within_cap(max_n)?;
        let id: IdentityId = identity.parse()?;
        let point = GridPoint { u: rational("u", u)?, lambda: rational("lambda", lambda)? };
        let report = Verifier::default().check(id, &point, &Grid::default_orders(), &Grid::default_ds(), max_n);
        Ok(serde_json::to_string(&report).unwrap())
    }

    #[derive(Serialize)]
    struct ConvertRow {
        m: usize,
        coefficients: Poly,
        matches: bool,
    }

    #[derive(Serialize)]
    struct Converted {
        direction: String,
        all_match: bool,
        rows: Vec<ConvertRow>,
    }

    /// `h2H` maps the degenerate family to the classical one, `H2h` the reverse;
    /// each row is compared with the independently computed target family.
    pub fn convert(direction: &str, u: &str, lambda: &str, order: u32, max_m: usize) -> Result<String> {
        within_cap(max_m)?;
        let u = rational("u", u)?;
        let lambda = rational("lambda", lambda)?;
        let fam = Families::exact();
        let err = |e: defrost_core::Error| e.to_string();
        let degenerate = fam.dfe_higher_polys(max_m, order, &u, &lambda).map_err(err)?;
        let classical = fam.classical_fe_higher_polys(max_m, order, &u).map_err(err)?;
        let (output, target) = match direction {
            "h2H" => (degenerate_to_classical(&degenerate, &lambda), classical),
            "H2h" => (classical_to_degenerate(&classical, &lambda), degenerate),
            other => return Err(format!("direction must be h2H or H2h, got `{other}`")),
        };
        let rows: Vec<ConvertRow> = output
            .into_iter()
            .zip(&target)
            .enumerate()
            .map(|(m, (p, t))| ConvertRow { matches: &p == t, m, coefficients: p })
            .collect();
        let doc = Converted {
            direction: direction.to_string(),
            all_match: rows.iter().all(|r| r.matches),
            rows,
        };
        Ok(serde_json::to_string(&doc).unwrap())
    }
}
