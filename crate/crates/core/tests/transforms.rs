//! Cross-module checks: series composition against the Stirling transforms and
//! the family recurrences.

use defrost_core::egf::EgfSeq;
use defrost_core::families::{dfe_higher_series, dfe_number_series, Families};
use defrost_core::stirling::{classical_to_degenerate, degenerate_to_classical};
use defrost_core::{Poly, Rational};

fn r(p: i64, q: i64) -> Rational {
    Rational::frac(p, q)
}

#[test]
fn scaled_exp_turns_degenerate_numbers_into_classical() {
    let fam = Families::exact();
    let (u, lambda) = (r(2, 1), r(1, 2));
    let series = dfe_number_series(1, &u, &lambda, 8).unwrap();
    let composed = series.compose_scaled_exp(&lambda, 8).unwrap();
    assert_eq!(composed.entries(), &fam.classical_fe_numbers(&u, 8).unwrap()[..]);

    let polys = dfe_higher_series(1, &u, &lambda, &Poly::x(), 8).unwrap();
    let composed = polys.compose_scaled_exp(&lambda, 8).unwrap();
    assert_eq!(composed.entries(), &fam.classical_fe_polys(8, &u).unwrap()[..]);
}

#[test]
fn scaled_log_turns_classical_numbers_into_degenerate() {
    let fam = Families::exact();
    let (u, lambda) = (r(2, 1), r(1, 3));
    let classical = EgfSeq::new(fam.classical_fe_numbers(&u, 8).unwrap());
    let composed = classical.compose_scaled_log(&lambda, 8).unwrap();
    assert_eq!(composed.entries(), &fam.dfe_numbers(&u, &lambda, 8).unwrap()[..]);
}

#[test]
fn transforms_map_between_the_families() {
    let fam = Families::exact();
    let u = r(2, 1);
    let lambda = r(1, 2);
    let h = fam.dfe_polys(12, &u, &lambda).unwrap();
    assert_eq!(degenerate_to_classical(&h, &lambda), fam.classical_fe_polys(12, &u).unwrap());

    let u = r(-3, 1);
    let lambda = r(1, 3);
    let big_h = fam.classical_fe_polys(12, &u).unwrap();
    assert_eq!(classical_to_degenerate(&big_h, &lambda), fam.dfe_polys(12, &u, &lambda).unwrap());
}

#[test]
fn transform_agrees_with_composition() {
    let fam = Families::exact();
    for (u, lambda) in [(r(2, 1), r(1, 2)), (r(-1, 1), r(-2, 3)), (r(1, 2), r(1, 1))] {
        for order in 1..=3 {
            let h = fam.dfe_higher_polys(10, order, &u, &lambda).unwrap();
            let by_stirling = degenerate_to_classical(&h, &lambda);
            let by_series = EgfSeq::new(h).compose_scaled_exp(&lambda, 10).unwrap();
            assert_eq!(by_series.entries(), &by_stirling[..], "u={u} λ={lambda} r={order}");
        }
    }
}
