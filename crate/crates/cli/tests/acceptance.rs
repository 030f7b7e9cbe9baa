//! Acceptance criteria, one test per criterion. All comparisons are exact.
//!
//! Run with `cargo test -p defrost-cli --test acceptance -- --nocapture` to see
//! the summary line each criterion prints.

use std::time::{Duration, Instant};

use defrost_core::egf::EgfSeq;
use defrost_core::families::{deg_bernoulli_series, dfe_higher_series, Defect, Families};
use defrost_core::stirling::{classical_to_degenerate, degenerate_to_classical};
use defrost_core::verify::{
    check_t2_reflection, check_t3_distribution, check_t4_addition, check_t7_order_reduction,
    classical_bernoulli_numbers, Grid, GridPoint, IdentityId, Status, Verifier, VerifyReport,
};
use defrost_core::{Poly, Rational};

mod common;

fn r(p: i64, q: i64) -> Rational {
    Rational::frac(p, q)
}

fn grid_us() -> Vec<Rational> {
    vec![r(2, 1), r(-1, 1), r(1, 2), r(-3, 5)]
}

fn grid_lambdas() -> Vec<Rational> {
    vec![r(0, 1), r(1, 1), r(1, 2), r(-2, 3)]
}

/// Prints the criterion line and fails the test if any problem was collected.
fn conclude(id: u32, title: &str, problems: Vec<String>, elapsed: Duration) {
    let tag = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} [{tag}] {title} ({:.2?})", elapsed);
    for p in &problems {
        println!("    {p}");
    }
    assert!(problems.is_empty(), "criterion {id} failed: {}", problems.join("; "));
}

fn expect_pass(report: &VerifyReport, problems: &mut Vec<String>) {
    if report.status != Status::Pass {
        problems.push(format!(
            "{} at u={} λ={}: {}",
            report.identity,
            report.params.u,
            report.params.lambda,
            serde_json::to_string(&report.first_failure).unwrap()
        ));
    }
}

fn first_mismatch(a: &[Poly], b: &[Poly]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| x != y)
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let fam = Families::exact();
    let x = Poly::x();
    let max_n = 24;
    let mut problems = Vec::new();
    for u in grid_us() {
        for lambda in grid_lambdas() {
            for order in [1, 2, 3] {
                let rec = fam.dfe_higher_polys(max_n, order, &u, &lambda).unwrap();
                let oracle = dfe_higher_series(order, &u, &lambda, &x, max_n).unwrap().into_entries();
                if let Some(n) = first_mismatch(&rec, &oracle) {
                    problems.push(format!("dfe r={order} u={u} λ={lambda} n={n}"));
                }
            }
        }
    }
    for lambda in grid_lambdas() {
        let rec = fam.deg_bernoulli_polys(max_n, &lambda);
        let oracle = deg_bernoulli_series(&lambda, &x, max_n).into_entries();
        if let Some(n) = first_mismatch(&rec, &oracle) {
            problems.push(format!("dbern λ={lambda} n={n}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        problems.push(format!("took {elapsed:.2?}, budget 10 s"));
    }
    conclude(1, "recurrence equals generating-function oracle, n <= 24", problems, elapsed);
}

#[test]
fn criterion_2_expansion_shift_delta() {
    let start = Instant::now();
    let grid = Grid::from_axes(&grid_us(), &grid_lambdas(), vec![1], vec![1]);
    let ids = [IdentityId::T1Expansion, IdentityId::T1Shift, IdentityId::T1Delta];
    let mut problems = Vec::new();
    for report in Verifier::default().check_many(&ids, &grid, 24) {
        expect_pass(&report, &mut problems);
    }
    conclude(2, "expansion, shift and delta identities, n <= 24", problems, start.elapsed());
}

#[test]
fn criterion_3_reflection() {
    let start = Instant::now();
    let mut problems = Vec::new();
    for u in [r(2, 1), r(1, 2), r(-3, 1)] {
        for lambda in [r(1, 1), r(1, 3), r(-2, 3)] {
            expect_pass(&check_t2_reflection(&u, &lambda, 16).unwrap(), &mut problems);
        }
    }
    conclude(3, "reflection identity, n <= 16", problems, start.elapsed());
}

/// Right-hand side of the distribution identity at one `n`, built directly
/// from the family polynomials.
fn distribution_rhs(n: usize, u: &Rational, lambda: &Rational, d: u32) -> Poly {
    let fam = Families::exact();
    let dd = Rational::from(d as i64);
    let ud = u.pow(d as i32);
    let inner = fam.dfe_poly(n, &ud, &(lambda / &dd)).unwrap();
    let mut sum = Poly::zero();
    for a in 0..d {
        let shifted = inner.substitute_affine(&(Rational::from(a as i64) / &dd), &dd.recip().unwrap());
        sum = sum + shifted.scale(&u.pow((d - a) as i32));
    }
    let factor = dd.pow(n as i32) * (u.recip().unwrap() - Rational::one()) / (Rational::one() - ud);
    sum.scale(&factor)
}

#[test]
fn criterion_4_distribution() {
    let start = Instant::now();
    let fam = Families::exact();
    let mut problems = Vec::new();
    for u in [r(2, 1), r(-3, 1), r(1, 2)] {
        for lambda in [r(1, 1), r(1, 2)] {
            for d in 1..=4 {
                if u.pow(d as i32).is_one() {
                    continue;
                }
                expect_pass(&check_t3_distribution(&u, &lambda, d, 10).unwrap(), &mut problems);
                if distribution_rhs(0, &u, &lambda, d) != Poly::one() {
                    problems.push(format!("n=0 anchor u={u} λ={lambda} d={d}"));
                }
            }
            // n = 1, d = 2: both sides are x + 1/(u-1)
            let anchor = Poly::linear((&u - &Rational::one()).recip().unwrap(), Rational::one());
            let lhs = fam.dfe_poly(1, &u, &lambda).unwrap();
            if lhs != anchor || distribution_rhs(1, &u, &lambda, 2) != anchor {
                problems.push(format!("n=1 d=2 anchor u={u} λ={lambda}"));
            }
        }
    }
    conclude(4, "distribution identity, n <= 10, d <= 4, with anchors", problems, start.elapsed());
}

#[test]
fn criterion_5_addition_and_order_reduction() {
    let start = Instant::now();
    let fam = Families::exact();
    let mut problems = Vec::new();
    for u in grid_us() {
        for lambda in grid_lambdas() {
            for order in 1..=3 {
                expect_pass(&check_t4_addition(&u, &lambda, order, 12).unwrap(), &mut problems);
                expect_pass(&check_t7_order_reduction(&u, &lambda, order, 12).unwrap(), &mut problems);
            }
            // r = 1: (h_n(x+1) - u h_n(x)) / (1-u) = (x|λ)_n
            let one_minus_u = Rational::one() - &u;
            for (n, h) in fam.dfe_polys(12, &u, &lambda).unwrap().iter().enumerate() {
                let lhs = (h.shift_one() - h.scale(&u)).scale(&one_minus_u.recip().unwrap());
                let falling = defrost_core::numeric::genfall(&Poly::x(), &lambda, n);
                if lhs != falling {
                    problems.push(format!("r=1 shift reduction u={u} λ={lambda} n={n}"));
                    break;
                }
            }
        }
    }
    conclude(5, "addition and order reduction, n <= 12, r <= 3", problems, start.elapsed());
}

#[test]
fn criterion_6_stirling_transforms() {
    let start = Instant::now();
    let fam = Families::exact();
    let mut problems = Vec::new();
    for u in grid_us() {
        for order in 1..=3 {
            let classical = fam.classical_fe_higher_polys(12, order, &u).unwrap();
            let mut images: Vec<Vec<Poly>> = Vec::new();
            for lambda in grid_lambdas() {
                let degenerate = fam.dfe_higher_polys(12, order, &u, &lambda).unwrap();
                let image = degenerate_to_classical(&degenerate, &lambda);
                if image != classical {
                    problems.push(format!("h_to_H u={u} r={order} λ={lambda}"));
                }
                if classical_to_degenerate(&image, &lambda) != degenerate {
                    problems.push(format!("H_to_h inverse u={u} r={order} λ={lambda}"));
                }
                if !lambda.is_zero() {
                    let composed = EgfSeq::new(degenerate[..=10].to_vec())
                        .compose_scaled_exp(&lambda, 10)
                        .unwrap()
                        .into_entries();
                    if composed[..] != image[..=10] {
                        problems.push(format!("composition u={u} r={order} λ={lambda}"));
                    }
                }
                images.push(image);
            }
            if images.windows(2).any(|w| w[0] != w[1]) {
                problems.push(format!("image depends on λ at u={u} r={order}"));
            }
        }
    }
    conclude(6, "Stirling transforms, m <= 12, composition m <= 10", problems, start.elapsed());
}

#[test]
fn criterion_7_limits_and_relatives() {
    let start = Instant::now();
    let fam = Families::exact();
    let zero = Rational::zero();
    let mut problems = Vec::new();
    for u in grid_us() {
        for order in 1..=3 {
            let degenerate = fam.dfe_higher_polys(20, order, &u, &zero).unwrap();
            let classical = fam.classical_fe_higher_polys(20, order, &u).unwrap();
            if let Some(n) = first_mismatch(&degenerate, &classical) {
                problems.push(format!("λ=0 limit u={u} r={order} n={n}"));
            }
            for n in 1..=20 {
                if classical[n].derivative() != classical[n - 1].scale(&Rational::from(n as i64)) {
                    problems.push(format!("derivative u={u} r={order} n={n}"));
                    break;
                }
            }
        }
    }
    let bernoulli = fam.deg_bernoulli_numbers(&zero, 20);
    let stated = [r(1, 1), r(-1, 2), r(1, 6), r(0, 1), r(-1, 30), r(0, 1), r(1, 42)];
    if bernoulli[..=6] != stated {
        problems.push(format!("B_0..B_6 = {:?}", bernoulli[..=6].iter().map(|b| b.to_string()).collect::<Vec<_>>()));
    }
    if bernoulli != classical_bernoulli_numbers(20) {
        problems.push("Bernoulli limit disagrees with the classical recurrence".into());
    }
    for lambda in grid_lambdas() {
        let g = fam.deg_genocchi_polys(21, &lambda);
        let h = fam.dfe_polys(20, &r(-1, 1), &lambda).unwrap();
        if g[0] != Poly::zero() {
            problems.push(format!("g_0 nonzero at λ={lambda}"));
        }
        for n in 0..=20 {
            if g[n + 1] != h[n].scale(&Rational::from(n as i64 + 1)) {
                problems.push(format!("Genocchi relation λ={lambda} n={n}"));
                break;
            }
        }
    }
    conclude(7, "λ = 0 limits, Bernoulli values, Genocchi and derivative relations", problems, start.elapsed());
}

#[test]
fn criterion_8_mutation_sensitivity() {
    let start = Instant::now();
    let defects = [
        Defect::KernelIndexOffByOne,
        Defect::MonomialKernel,
        Defect::RecurrenceSignFlip,
        Defect::ClassicalDropBinomial,
        Defect::BernoulliDivisor,
    ];
    let points: Vec<GridPoint> = [(r(2, 1), r(1, 2)), (r(-1, 1), r(1, 2)), (r(2, 1), r(0, 1))]
        .into_iter()
        .map(|(u, lambda)| GridPoint { u, lambda })
        .collect();
    let mut problems = Vec::new();
    for id in IdentityId::ALL {
        let caught = defects.iter().find_map(|&defect| {
            let v = Verifier::new(Families::with_defect(defect));
            points.iter().find_map(|p| {
                let rep = v.check(id, p, &[1, 2], &[2, 3], 8);
                (rep.status == Status::Fail && rep.first_failure.is_some()).then_some(defect)
            })
        });
        match caught {
            Some(defect) => println!("    {id}: caught {defect:?}"),
            None => problems.push(format!("{id} caught no seeded defect")),
        }
    }
    conclude(8, "every checker detects a seeded defect", problems, start.elapsed());
}

#[test]
fn criterion_9_cli_contract() {
    let start = Instant::now();
    let mut problems = Vec::new();
    for (name, args, code) in common::CASES {
        let t = Instant::now();
        if let Err(e) = common::check_golden(name, args, *code) {
            problems.push(e);
        }
        if args.contains(&"all") && t.elapsed() > Duration::from_secs(60) {
            problems.push(format!("verify --identity all took {:.2?}", t.elapsed()));
        }
    }
    conclude(9, "CLI golden outputs, exit codes and verify-all runtime", problems, start.elapsed());
}
