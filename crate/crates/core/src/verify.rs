//! Exact checks of the identities satisfied by the degenerate Frobenius-Euler
//! family and its relatives.
//!
//! Every check compares canonical [`Poly`] values; identities in `x` are
//! compared coefficient-wise. Inadmissible parameter points are reported as
//! skipped, never as failures.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::egf::binom_kernel;
use crate::error::{Error, Result};
use crate::families::{appell_assemble, deg_genocchi_series, dfe_higher_series, Families};
use crate::numeric::{binomial_rows, genfall_table, Poly, Rational};
use crate::stirling::{classical_to_degenerate, degenerate_to_classical};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    #[serde(rename = "T1_expansion")]
    T1Expansion,
    #[serde(rename = "T1_shift")]
    T1Shift,
    #[serde(rename = "T1_delta")]
    T1Delta,
    #[serde(rename = "T2_reflection")]
    T2Reflection,
    #[serde(rename = "T3_distribution")]
    T3Distribution,
    #[serde(rename = "T4_addition")]
    T4Addition,
    #[serde(rename = "T5_h_to_H")]
    T5HToBigH,
    #[serde(rename = "T6_H_to_h")]
    T6BigHToH,
    #[serde(rename = "T7_order_reduction")]
    T7OrderReduction,
    #[serde(rename = "R_genocchi")]
    RGenocchi,
    #[serde(rename = "L_lambda_zero_limit")]
    LLambdaZeroLimit,
    #[serde(rename = "D_derivative_classical")]
    DDerivativeClassical,
    #[serde(rename = "B_bernoulli_limit")]
    BBernoulliLimit,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::T1Expansion,
        IdentityId::T1Shift,
        IdentityId::T1Delta,
        IdentityId::T2Reflection,
        IdentityId::T3Distribution,
        IdentityId::T4Addition,
        IdentityId::T5HToBigH,
        IdentityId::T6BigHToH,
        IdentityId::T7OrderReduction,
        IdentityId::RGenocchi,
        IdentityId::LLambdaZeroLimit,
        IdentityId::DDerivativeClassical,
        IdentityId::BBernoulliLimit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::T1Expansion => "T1_expansion",
            IdentityId::T1Shift => "T1_shift",
            IdentityId::T1Delta => "T1_delta",
            IdentityId::T2Reflection => "T2_reflection",
            IdentityId::T3Distribution => "T3_distribution",
            IdentityId::T4Addition => "T4_addition",
            IdentityId::T5HToBigH => "T5_h_to_H",
            IdentityId::T6BigHToH => "T6_H_to_h",
            IdentityId::T7OrderReduction => "T7_order_reduction",
            IdentityId::RGenocchi => "R_genocchi",
            IdentityId::LLambdaZeroLimit => "L_lambda_zero_limit",
            IdentityId::DDerivativeClassical => "D_derivative_classical",
            IdentityId::BBernoulliLimit => "B_bernoulli_limit",
        }
    }

    fn uses_orders(self) -> bool {
        matches!(
            self,
            IdentityId::T4Addition
                | IdentityId::T5HToBigH
                | IdentityId::T6BigHToH
                | IdentityId::T7OrderReduction
                | IdentityId::LLambdaZeroLimit
                | IdentityId::DDerivativeClassical
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// A `(u, λ)` pair; order `r` and multiplier `d` come from the grid axes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridPoint {
    pub u: Rational,
    pub lambda: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub points: Vec<GridPoint>,
    pub orders: Vec<u32>,
    pub ds: Vec<u32>,
}

impl Grid {
    /// Cartesian product of the `u` and `λ` axes, `u` outermost.
    pub fn from_axes(us: &[Rational], lambdas: &[Rational], orders: Vec<u32>, ds: Vec<u32>) -> Self {
        let points = us
            .iter()
            .flat_map(|u| {
                lambdas.iter().map(move |lambda| GridPoint {
                    u: u.clone(),
                    lambda: lambda.clone(),
                })
            })
            .collect();
        Grid { points, orders, ds }
    }

    pub fn default_us() -> Vec<Rational> {
        vec![
            Rational::from(2),
            Rational::from(-1),
            Rational::frac(1, 2),
            Rational::frac(-3, 5),
        ]
    }

    pub fn default_lambdas() -> Vec<Rational> {
        vec![
            Rational::zero(),
            Rational::one(),
            Rational::frac(1, 2),
            Rational::frac(-2, 3),
        ]
    }

    pub fn default_orders() -> Vec<u32> {
        vec![1, 2, 3]
    }

    pub fn default_ds() -> Vec<u32> {
        vec![1, 2, 3, 4]
    }
}

impl Default for Grid {
    /// `u ∈ {2, -1, 1/2, -3/5}`, `λ ∈ {0, 1, 1/2, -2/3}`, `r ∈ {1,2,3}`, `d ∈ {1,2,3,4}`.
    fn default() -> Self {
        Grid::from_axes(
            &Grid::default_us(),
            &Grid::default_lambdas(),
            Grid::default_orders(),
            Grid::default_ds(),
        )
    }
}

/// One evaluated sub-point of a report.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct Point {
    pub u: Rational,
    pub lambda: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Rational>,
}

impl Point {
    fn new(u: &Rational, lambda: &Rational) -> Self {
        Point {
            u: u.clone(),
            lambda: lambda.clone(),
            ..Point::default()
        }
    }

    fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    fn with_d(mut self, d: u32) -> Self {
        self.d = Some(d);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Params {
    pub u: Rational,
    pub lambda: Rational,
    pub max_n: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub orders: Vec<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ds: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// First disagreement: both sides as coefficient lists in ascending powers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub point: Point,
    pub n: usize,
    pub lhs: Poly,
    pub rhs: Poly,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkippedPoint {
    pub point: Point,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: IdentityId,
    pub params: Params,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Point>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<SkippedPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Default)]
struct Outcome {
    points: Vec<Point>,
    skipped: Vec<SkippedPoint>,
    failure: Option<Failure>,
}

impl Outcome {
    /// Records `point` and keeps the first mismatch between `lhs` and `rhs`.
    fn compare(&mut self, point: Point, lhs: &[Poly], rhs: &[Poly]) {
        if self.failure.is_none() {
            let len = lhs.len().max(rhs.len());
            let get = |s: &[Poly], n: usize| s.get(n).cloned().unwrap_or_default();
            if let Some(n) = (0..len).find(|&n| get(lhs, n) != get(rhs, n)) {
                self.failure = Some(Failure {
                    point: point.clone(),
                    n,
                    lhs: get(lhs, n),
                    rhs: get(rhs, n),
                });
            }
        }
        self.points.push(point);
    }

    fn skip(&mut self, point: Point, err: Error) {
        self.skipped.push(SkippedPoint {
            point,
            reason: err.to_string(),
        });
    }
}

fn non_one(u: &Rational) -> Result<()> {
    if u.is_one() {
        Err(Error::UEqualsOne)
    } else {
        Ok(())
    }
}

/// Reason a grid point does not apply to a λ = 0 or u = -1 identity.
#[derive(Debug)]
enum NotApplicable {
    Err(Error),
    Reason(&'static str),
}

impl From<Error> for NotApplicable {
    fn from(e: Error) -> Self {
        NotApplicable::Err(e)
    }
}

impl fmt::Display for NotApplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotApplicable::Err(e) => write!(f, "{e}"),
            NotApplicable::Reason(r) => f.write_str(r),
        }
    }
}

type CheckResult = std::result::Result<Outcome, NotApplicable>;

/// Runs the identity checks against a [`Families`] implementation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Verifier {
    families: Families,
}

impl Verifier {
    pub const fn new(families: Families) -> Self {
        Verifier { families }
    }

    pub fn families(&self) -> Families {
        self.families
    }

    /// Runs one identity at one `(u, λ)` point over the given `r` and `d` axes.
    pub fn check(
        &self,
        identity: IdentityId,
        point: &GridPoint,
        orders: &[u32],
        ds: &[u32],
        max_n: usize,
    ) -> VerifyReport {
        let GridPoint { u, lambda } = point;
        let result = match identity {
            IdentityId::T1Expansion => self.t1_expansion(u, lambda, max_n),
            IdentityId::T1Shift => self.t1_shift(u, lambda, max_n),
            IdentityId::T1Delta => self.t1_delta(u, lambda, max_n),
            IdentityId::T2Reflection => self.t2_reflection(u, lambda, max_n),
            IdentityId::T3Distribution => self.t3_distribution(u, lambda, ds, max_n),
            IdentityId::T4Addition => self.t4_addition(u, lambda, orders, max_n),
            IdentityId::T5HToBigH => self.t5_h_to_big_h(u, lambda, orders, max_n),
            IdentityId::T6BigHToH => self.t6_big_h_to_h(u, lambda, orders, max_n),
            IdentityId::T7OrderReduction => self.t7_order_reduction(u, lambda, orders, max_n),
            IdentityId::RGenocchi => self.r_genocchi(u, lambda, max_n),
            IdentityId::LLambdaZeroLimit => self.l_lambda_zero(u, lambda, orders, max_n),
            IdentityId::DDerivativeClassical => self.d_derivative(u, lambda, orders, max_n),
            IdentityId::BBernoulliLimit => self.b_bernoulli(u, lambda, max_n),
        };
        let params = Params {
            u: u.clone(),
            lambda: lambda.clone(),
            max_n,
            orders: if identity.uses_orders() { orders.to_vec() } else { Vec::new() },
            ds: if identity == IdentityId::T3Distribution { ds.to_vec() } else { Vec::new() },
        };
        let mut report = VerifyReport {
            identity,
            params,
            status: Status::Pass,
            reason: None,
            points: Vec::new(),
            skipped: Vec::new(),
            first_failure: None,
        };
        match result {
            Err(why) => {
                report.status = Status::Skipped;
                report.reason = Some(why.to_string());
            }
            Ok(outcome) => {
                report.status = if outcome.failure.is_some() {
                    Status::Fail
                } else if outcome.points.is_empty() {
                    Status::Skipped
                } else {
                    Status::Pass
                };
                if report.status == Status::Skipped {
                    report.reason = Some("no admissible sub-point".to_string());
                }
                report.points = outcome.points;
                report.skipped = outcome.skipped;
                report.first_failure = outcome.failure;
            }
        }
        report
    }

    /// Every identity over every grid point, ordered by identity then grid order.
    pub fn check_all(&self, grid: &Grid, max_n: usize) -> Vec<VerifyReport> {
        self.check_many(&IdentityId::ALL, grid, max_n)
    }

    pub fn check_many(&self, identities: &[IdentityId], grid: &Grid, max_n: usize) -> Vec<VerifyReport> {
        let jobs: Vec<(IdentityId, &GridPoint)> = identities
            .iter()
            .flat_map(|&id| grid.points.iter().map(move |p| (id, p)))
            .collect();
        let run = |&(id, p): &(IdentityId, &GridPoint)| self.check(id, p, &grid.orders, &grid.ds, max_n);
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            jobs.par_iter().map(run).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            jobs.iter().map(run).collect()
        }
    }

    // h_n(x|u) from its generating function against sum_l C(n,l) h_l(u) (x|λ)_{n-l}.
    fn t1_expansion(&self, u: &Rational, lambda: &Rational, max_n: usize) -> CheckResult {
        let numbers = self.families.dfe_numbers(u, lambda, max_n)?;
        let lhs = dfe_higher_series(1, u, lambda, &Poly::x(), max_n)?.into_entries();
        let rhs = appell_assemble(&numbers, &genfall_table(&Poly::x(), lambda, max_n));
        let mut out = Outcome::default();
        out.compare(Point::new(u, lambda), &lhs, &rhs);
        Ok(out)
    }

    // h_n(x+1|u) - u h_n(x|u) = (1-u) (x|λ)_n
    fn t1_shift(&self, u: &Rational, lambda: &Rational, max_n: usize) -> CheckResult {
        let polys = self.families.dfe_polys(max_n, u, lambda)?;
        let lhs: Vec<Poly> = polys.iter().map(|p| &p.shift_one() - &p.scale(u)).collect();
        let one_minus_u = Rational::one() - u;
        let rhs: Vec<Poly> = genfall_table(&Poly::x(), lambda, max_n)
            .iter()
            .map(|k| k.scale(&one_minus_u))
            .collect();
        let mut out = Outcome::default();
        out.compare(Point::new(u, lambda), &lhs, &rhs);
        Ok(out)
    }

    // h_n(1|u) - u h_n(u) = (1-u) δ_{0,n}
    fn t1_delta(&self, u: &Rational, lambda: &Rational, max_n: usize) -> CheckResult {
        let numbers = self.families.dfe_numbers(u, lambda, max_n)?;
        let polys = self.families.dfe_polys(max_n, u, lambda)?;
        let one = Rational::one();
        let lhs: Vec<Poly> = polys
            .iter()
            .zip(&numbers)
            .map(|(p, h)| Poly::constant(p.eval(&one) - u * h))
            .collect();
        let rhs: Vec<Poly> = (0..=max_n)
            .map(|n| if n == 0 { Poly::constant(&one - u) } else { Poly::zero() })
            .collect();
        let mut out = Outcome::default();
        out.compare(Point::new(u, lambda), &lhs, &rhs);
        Ok(out)
    }

    // (-1)^n h_{n,-λ}(-x|u) = h_{n,λ}(x+1|1/u)
    fn t2_reflection(&self, u: &Rational, lambda: &Rational, max_n: usize) -> CheckResult {
        non_one(u)?;
        let u_inv = u.recip().ok_or(Error::UZero)?;
        let neg_lambda = -lambda;
        let minus_one = Rational::from(-1);
        let lhs: Vec<Poly> = self
            .families
            .dfe_polys(max_n, u, &neg_lambda)?
            .iter()
            .enumerate()
            .map(|(n, p)| {
                p.substitute_affine(&Rational::zero(), &minus_one)
                    .scale(&minus_one.pow(n as i32))
            })
            .collect();
        let rhs: Vec<Poly> = self
            .families
            .dfe_polys(max_n, &u_inv, lambda)?
            .iter()
            .map(Poly::shift_one)
            .collect();
        let mut out = Outcome::default();
        out.compare(Point::new(u, lambda), &lhs, &rhs);
        Ok(out)
    }

    // h_{n,λ}(x|u) = d^n (u^{-1} - 1)/(1 - u^d) sum_a u^{d-a} h_{n,λ/d}((a+x)/d | u^d)
    fn t3_distribution(&self, u: &Rational, lambda: &Rational, ds: &[u32], max_n: usize) -> CheckResult {
        non_one(u)?;
        let lhs = self.families.dfe_polys(max_n, u, lambda)?;
        let one = Rational::one();
        let mut out = Outcome::default();
        for &d in ds {
            let point = Point::new(u, lambda).with_d(d);
            if d < 1 {
                out.skip(point, Error::BadD(d));
                continue;
            }
            let u_d = u.pow(d as i32);
            if u_d.is_one() {
                out.skip(point, Error::RootOfUnityLikeU { d });
                continue;
            }
            let d_r = Rational::from(d as i64);
            let inner = self.families.dfe_polys(max_n, &u_d, &(lambda / &d_r))?;
            // (u^{-1} - 1) u^{d-a} = (1 - u) u^{d-a-1}, also fine at u = 0
            let prefactor = (&one - u) / (&one - &u_d);
            let weights: Vec<Rational> = (0..d)
                .map(|a| &prefactor * u.pow((d - a - 1) as i32))
                .collect();
            let d_inv = d_r.recip().expect("d >= 1");
            let rhs: Vec<Poly> = inner
                .iter()
                .enumerate()
                .map(|(n, q)| {
                    let sum = (0..d).fold(Poly::zero(), |acc, a| {
                        let shifted = q.substitute_affine(&(Rational::from(a as i64) * &d_inv), &d_inv);
                        &acc + &shifted.scale(&weights[a as usize])
                    });
                    sum.scale(&d_r.pow(n as i32))
                })
                .collect();
            out.compare(point, &lhs, &rhs);
        }
        Ok(out)
    }

    // h^{(r)}_n(x+y|u) = sum_l C(n,l) h^{(r)}_l(x|u) (y|λ)_{n-l}
    fn t4_addition(&self, u: &Rational, lambda: &Rational, orders: &[u32], max_n: usize) -> CheckResult {
        non_one(u)?;
        let samples = [
            (Rational::frac(1, 2), Some(Rational::frac(1, 3))),
            (Rational::from(-1), Some(Rational::from(2))),
            (Rational::zero(), None),
        ];
        let y_kernel = genfall_table(&Poly::x(), lambda, max_n);
        let mut out = Outcome::default();
        for &r in orders {
            let polys = self.families.dfe_higher_polys(max_n, r, u, lambda)?;
            for (x0, y0) in &samples {
                // both sides as polynomials in y
                let lhs: Vec<Poly> = polys
                    .iter()
                    .map(|p| p.substitute_affine(x0, &Rational::one()))
                    .collect();
                let at_x: Vec<Rational> = polys.iter().map(|p| p.eval(x0)).collect();
                let rhs = appell_assemble(&at_x, &y_kernel);
                let mut point = Point::new(u, lambda).with_r(r);
                point.x = Some(x0.clone());
                match y0 {
                    Some(y) => {
                        point.y = Some(y.clone());
                        let ev = |s: &[Poly]| -> Vec<Poly> {
                            s.iter().map(|p| Poly::constant(p.eval(y))).collect()
                        };
                        out.compare(point, &ev(&lhs), &ev(&rhs));
                    }
                    None => out.compare(point, &lhs, &rhs),
                }
            }
        }
        Ok(out)
    }

    // H^{(r)}_m(x|u) = sum_n h^{(r)}_{n,λ}(x|u) λ^{m-n} S2(m,n)
    fn t5_h_to_big_h(&self, u: &Rational, lambda: &Rational, orders: &[u32], max_n: usize) -> CheckResult {
        non_one(u)?;
        let mut out = Outcome::default();
        for &r in orders {
            let degenerate = self.families.dfe_higher_polys(max_n, r, u, lambda)?;
            let classical = self.families.classical_fe_higher_polys(max_n, r, u)?;
            let lhs = degenerate_to_classical(&degenerate, lambda);
            out.compare(Point::new(u, lambda).with_r(r), &lhs, &classical);
        }
        Ok(out)
    }

    // h^{(r)}_{m,λ}(x|u) = sum_n H^{(r)}_n(x|u) λ^{m-n} S1(m,n)
    fn t6_big_h_to_h(&self, u: &Rational, lambda: &Rational, orders: &[u32], max_n: usize) -> CheckResult {
        non_one(u)?;
        let mut out = Outcome::default();
        for &r in orders {
            let classical = self.families.classical_fe_higher_polys(max_n, r, u)?;
            let degenerate = self.families.dfe_higher_polys(max_n, r, u, lambda)?;
            let lhs = classical_to_degenerate(&classical, lambda);
            out.compare(Point::new(u, lambda).with_r(r), &lhs, &degenerate);
        }
        Ok(out)
    }

    // (h^{(r)}_n(x+1|u) - u h^{(r)}_n(x|u)) / (1-u) = h^{(r-1)}_n(x|u), with h^{(0)}_n = (x|λ)_n
    fn t7_order_reduction(&self, u: &Rational, lambda: &Rational, orders: &[u32], max_n: usize) -> CheckResult {
        non_one(u)?;
        let scale = (Rational::one() - u).recip().expect("u != 1");
        let mut out = Outcome::default();
        for &r in orders {
            if r < 1 {
                out.skip(Point::new(u, lambda).with_r(r), Error::BadOrder(r));
                continue;
            }
            let upper = self.families.dfe_higher_polys(max_n, r, u, lambda)?;
            let lower = self.families.dfe_higher_polys_from_zero(max_n, r - 1, u, lambda)?;
            let lhs: Vec<Poly> = upper
                .iter()
                .map(|p| (&p.shift_one() - &p.scale(u)).scale(&scale))
                .collect();
            out.compare(Point::new(u, lambda).with_r(r), &lhs, &lower);
        }
        Ok(out)
    }

    // g_{n+1,λ}(x) from its generating function against (n+1) h_{n,λ}(x|-1); g_0 = 0.
    fn r_genocchi(&self, u: &Rational, lambda: &Rational, max_n: usize) -> CheckResult {
        if *u != Rational::from(-1) {
            return Err(NotApplicable::Reason("Genocchi relation fixes u = -1"));
        }
        let lhs = deg_genocchi_series(lambda, &Poly::x(), max_n + 1).into_entries();
        let rhs = self.families.deg_genocchi_polys(max_n + 1, lambda);
        let mut out = Outcome::default();
        out.compare(Point::new(u, lambda), &lhs, &rhs);
        Ok(out)
    }

    // h^{(r)}_{n,0}(x|u) = H^{(r)}_n(x|u)
    fn l_lambda_zero(&self, u: &Rational, lambda: &Rational, orders: &[u32], max_n: usize) -> CheckResult {
        require_lambda_zero(lambda)?;
        non_one(u)?;
        let mut out = Outcome::default();
        for &r in orders {
            let degenerate = self.families.dfe_higher_polys(max_n, r, u, lambda)?;
            let classical = self.families.classical_fe_higher_polys(max_n, r, u)?;
            out.compare(Point::new(u, lambda).with_r(r), &degenerate, &classical);
        }
        Ok(out)
    }

    // d/dx H^{(r)}_n(x|u) = n H^{(r)}_{n-1}(x|u)
    fn d_derivative(&self, u: &Rational, lambda: &Rational, orders: &[u32], max_n: usize) -> CheckResult {
        require_lambda_zero(lambda)?;
        non_one(u)?;
        let mut out = Outcome::default();
        for &r in orders {
            let polys = self.families.classical_fe_higher_polys(max_n, r, u)?;
            let lhs: Vec<Poly> = polys.iter().map(Poly::derivative).collect();
            let rhs: Vec<Poly> = (0..=max_n)
                .map(|n| match n {
                    0 => Poly::zero(),
                    _ => polys[n - 1].scale(&Rational::from(n as i64)),
                })
                .collect();
            out.compare(Point::new(u, lambda).with_r(r), &lhs, &rhs);
        }
        Ok(out)
    }

    // β_n(x|0) = B_n(x)
    fn b_bernoulli(&self, u: &Rational, lambda: &Rational, max_n: usize) -> CheckResult {
        require_lambda_zero(lambda)?;
        let lhs = self.families.deg_bernoulli_polys(max_n, lambda);
        let rhs = appell_assemble(
            &classical_bernoulli_numbers(max_n),
            &binom_kernel(&Poly::x(), &Rational::zero(), max_n).into_entries(),
        );
        let mut out = Outcome::default();
        out.compare(Point::new(u, lambda), &lhs, &rhs);
        Ok(out)
    }
}

fn require_lambda_zero(lambda: &Rational) -> std::result::Result<(), NotApplicable> {
    if lambda.is_zero() {
        Ok(())
    } else {
        Err(NotApplicable::Reason("identity applies at lambda = 0 only"))
    }
}

/// Bernoulli numbers from `sum_{k=0}^{n} C(n+1,k) B_k = 0`.
pub fn classical_bernoulli_numbers(max_n: usize) -> Vec<Rational> {
    let binom = binomial_rows(max_n + 1);
    let mut b: Vec<Rational> = vec![Rational::one()];
    for n in 1..=max_n {
        let s: Rational = (0..n).map(|k| &binom[n + 1][k] * &b[k]).sum();
        b.push(-(s / Rational::from(n as i64 + 1)));
    }
    b
}

pub fn check_all(grid: &Grid, max_n: usize) -> Vec<VerifyReport> {
    Verifier::default().check_all(grid, max_n)
}

pub fn check_t2_reflection(u: &Rational, lambda: &Rational, max_n: usize) -> Result<VerifyReport> {
    non_one(u)?;
    if u.is_zero() {
        return Err(Error::UZero);
    }
    let point = GridPoint { u: u.clone(), lambda: lambda.clone() };
    Ok(Verifier::default().check(IdentityId::T2Reflection, &point, &[], &[], max_n))
}

pub fn check_t3_distribution(u: &Rational, lambda: &Rational, d: u32, max_n: usize) -> Result<VerifyReport> {
    non_one(u)?;
    if d < 1 {
        return Err(Error::BadD(d));
    }
    if u.pow(d as i32).is_one() {
        return Err(Error::RootOfUnityLikeU { d });
    }
    let point = GridPoint { u: u.clone(), lambda: lambda.clone() };
    Ok(Verifier::default().check(IdentityId::T3Distribution, &point, &[], &[d], max_n))
}

pub fn check_t4_addition(u: &Rational, lambda: &Rational, r: u32, max_n: usize) -> Result<VerifyReport> {
    non_one(u)?;
    if r < 1 {
        return Err(Error::BadOrder(r));
    }
    let point = GridPoint { u: u.clone(), lambda: lambda.clone() };
    Ok(Verifier::default().check(IdentityId::T4Addition, &point, &[r], &[], max_n))
}

/// `r = 1` compares against `(x|λ)_n`, i.e. the shift identity of the order-1 family.
pub fn check_t7_order_reduction(u: &Rational, lambda: &Rational, r: u32, max_n: usize) -> Result<VerifyReport> {
    non_one(u)?;
    if r < 1 {
        return Err(Error::BadOrder(r));
    }
    let point = GridPoint { u: u.clone(), lambda: lambda.clone() };
    Ok(Verifier::default().check(IdentityId::T7OrderReduction, &point, &[r], &[], max_n))
}
