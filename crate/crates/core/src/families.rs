//! Degenerate Frobenius-Euler, degenerate Bernoulli and degenerate Genocchi
//! polynomials, plus the classical Frobenius-Euler family.
//!
//! Each family has a recurrence path (the methods on [`Families`] and the
//! free functions) and an independent generating-function path (the
//! `*_oracle` functions), which extracts coefficients from the truncated
//! series product.
//!
//! Recurrence for the degenerate Frobenius-Euler numbers: with
//! `h_n(1|u) - u h_n(u) = (1-u) δ_{0,n}` and the expansion
//! `h_n(1|u) = sum_l C(n,l) h_l(u) (1|λ)_{n-l}`, the top term solves to
//! `h_n = -1/(1-u) sum_{l<n} C(n,l) h_l (1|λ)_{n-l}`.

use serde::Serialize;

use crate::egf::{binom_kernel, EgfSeq};
use crate::error::{Error, Result};
use crate::numeric::{binomial_rows, genfall_table, Coeff, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    #[serde(rename = "dfe")]
    DegFrobeniusEuler,
    #[serde(rename = "dfe-r")]
    DegFrobeniusEulerOrderR,
    #[serde(rename = "dbern")]
    DegBernoulli,
    #[serde(rename = "dgen")]
    DegGenocchi,
    #[serde(rename = "cfe")]
    ClassicalFrobeniusEuler,
}

impl FamilyKind {
    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyKind::DegFrobeniusEuler => "dfe",
            FamilyKind::DegFrobeniusEulerOrderR => "dfe-r",
            FamilyKind::DegBernoulli => "dbern",
            FamilyKind::DegGenocchi => "dgen",
            FamilyKind::ClassicalFrobeniusEuler => "cfe",
        }
    }

    pub fn uses_u(self) -> bool {
        !matches!(self, FamilyKind::DegBernoulli | FamilyKind::DegGenocchi)
    }

    pub fn uses_lambda(self) -> bool {
        !matches!(self, FamilyKind::ClassicalFrobeniusEuler)
    }

    pub fn uses_order(self) -> bool {
        matches!(
            self,
            FamilyKind::DegFrobeniusEulerOrderR | FamilyKind::ClassicalFrobeniusEuler
        )
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilySpec {
    #[serde(rename = "name")]
    pub family: FamilyKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<Rational>,
    pub lambda: Rational,
    pub order: u32,
}

impl FamilySpec {
    /// Validates `u` and `r` against the family. `u` defaults to `-1` for
    /// Genocchi and is ignored for Bernoulli.
    pub fn new(family: FamilyKind, u: Option<Rational>, lambda: Rational, order: u32) -> Result<Self> {
        if order < 1 {
            return Err(Error::BadOrder(order));
        }
        let order = if family.uses_order() { order } else { 1 };
        let lambda = if family.uses_lambda() { lambda } else { Rational::zero() };
        let u = match family {
            FamilyKind::DegBernoulli => None,
            FamilyKind::DegGenocchi => Some(Rational::from(-1)),
            _ => {
                let u = u.ok_or(Error::UEqualsOne).and_then(check_u)?;
                Some(u)
            }
        };
        Ok(FamilySpec { family, u, lambda, order })
    }

    /// Polynomials `0..=max_n` of this family.
    pub fn polys(&self, max_n: usize) -> Result<Vec<Poly>> {
        let f = Families::exact();
        let u = || self.u.clone().expect("validated");
        match self.family {
            FamilyKind::DegFrobeniusEuler | FamilyKind::DegFrobeniusEulerOrderR => {
                f.dfe_higher_polys(max_n, self.order, &u(), &self.lambda)
            }
            FamilyKind::DegBernoulli => Ok(f.deg_bernoulli_polys(max_n, &self.lambda)),
            FamilyKind::DegGenocchi => Ok(f.deg_genocchi_polys(max_n, &self.lambda)),
            FamilyKind::ClassicalFrobeniusEuler => f.classical_fe_higher_polys(max_n, self.order, &u()),
        }
    }

    /// Numbers (values at `x = 0`) for `0..=max_n`.
    pub fn numbers(&self, max_n: usize) -> Result<NumberSeq> {
        let values = self
            .polys(max_n)?
            .iter()
            .map(|p| p.coeff(0))
            .collect();
        Ok(NumberSeq { values, spec: self.clone() })
    }
}

/// Family numbers `h_0..h_N` with the spec that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberSeq {
    pub values: Vec<Rational>,
    pub spec: FamilySpec,
}

fn check_u(u: Rational) -> Result<Rational> {
    if u.is_one() {
        Err(Error::UEqualsOne)
    } else {
        Ok(u)
    }
}

/// Seeded faults for measuring how sensitive the identity checkers are.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Defect {
    /// Number recurrence reads `(1|λ)_{n-l-1}` instead of `(1|λ)_{n-l}`.
    KernelIndexOffByOne,
    /// Polynomial assembly uses `x^k` in place of `(x|λ)_k`.
    MonomialKernel,
    /// Number recurrence drops the leading minus sign.
    RecurrenceSignFlip,
    /// Classical assembly forgets the binomial weights.
    ClassicalDropBinomial,
    /// Bernoulli recurrence divides by `n + 1` instead of `n`.
    BernoulliDivisor,
}

/// Recurrence-path constructors for every family.
///
/// [`Families::exact`] is the correct implementation; the free functions in
/// this module delegate to it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Families {
    defect: Option<Defect>,
}

impl Families {
    pub const fn exact() -> Self {
        Families { defect: None }
    }

    #[doc(hidden)]
    pub const fn with_defect(defect: Defect) -> Self {
        Families { defect: Some(defect) }
    }

    pub fn defect(&self) -> Option<Defect> {
        self.defect
    }

    fn has(&self, d: Defect) -> bool {
        self.defect == Some(d)
    }

    /// `sum_l C(n,l) c_l K_{n-l}` for `n = 0..=max_n`, where `K` is `(x|λ)_k`.
    fn assemble(&self, numbers: &[Rational], lambda: &Rational, max_n: usize) -> Vec<Poly> {
        let kernel_lambda = if self.has(Defect::MonomialKernel) {
            Rational::zero()
        } else {
            lambda.clone()
        };
        appell_assemble(numbers, &genfall_table(&Poly::x(), &kernel_lambda, max_n))
    }

    /// Degenerate Frobenius-Euler numbers `h_{n,λ}(u)` for `n = 0..=max_n`.
    pub fn dfe_numbers(&self, u: &Rational, lambda: &Rational, max_n: usize) -> Result<Vec<Rational>> {
        let u = check_u(u.clone())?;
        let one_minus_u = Rational::one() - &u;
        let mut factor = one_minus_u.recip().expect("u != 1");
        if !self.has(Defect::RecurrenceSignFlip) {
            factor = -factor;
        }
        let falling = genfall_table(&Rational::one(), lambda, max_n);
        let binom = binomial_rows(max_n);
        let off_by_one = self.has(Defect::KernelIndexOffByOne);
        let mut h: Vec<Rational> = Vec::with_capacity(max_n + 1);
        h.push(Rational::one());
        for n in 1..=max_n {
            let s: Rational = (0..n)
                .map(|l| {
                    let k = if off_by_one { n - l - 1 } else { n - l };
                    &binom[n][l] * &h[l] * &falling[k]
                })
                .sum();
            h.push(s * &factor);
        }
        Ok(h)
    }

    pub fn dfe_polys(&self, max_n: usize, u: &Rational, lambda: &Rational) -> Result<Vec<Poly>> {
        let h = self.dfe_numbers(u, lambda, max_n)?;
        Ok(self.assemble(&h, lambda, max_n))
    }

    pub fn dfe_poly(&self, n: usize, u: &Rational, lambda: &Rational) -> Result<Poly> {
        Ok(self.dfe_polys(n, u, lambda)?.pop().expect("nonempty"))
    }

    /// Order-`r` numbers: `r`-fold binomial self-convolution of the order-1 numbers.
    pub fn dfe_higher_numbers(&self, r: u32, u: &Rational, lambda: &Rational, max_n: usize) -> Result<Vec<Rational>> {
        if r < 1 {
            return Err(Error::BadOrder(r));
        }
        let h = self.dfe_numbers(u, lambda, max_n)?;
        Ok(self_convolve(&h, r))
    }

    pub fn dfe_higher_polys(&self, max_n: usize, r: u32, u: &Rational, lambda: &Rational) -> Result<Vec<Poly>> {
        let h = self.dfe_higher_numbers(r, u, lambda, max_n)?;
        Ok(self.assemble(&h, lambda, max_n))
    }

    pub fn dfe_higher_poly(&self, n: usize, r: u32, u: &Rational, lambda: &Rational) -> Result<Poly> {
        Ok(self.dfe_higher_polys(n, r, u, lambda)?.pop().expect("nonempty"))
    }

    /// Order-`r` polynomials with the order-0 convention `h^{(0)}_n(x) = (x|λ)_n`.
    pub fn dfe_higher_polys_from_zero(&self, max_n: usize, r: u32, u: &Rational, lambda: &Rational) -> Result<Vec<Poly>> {
        if r == 0 {
            check_u(u.clone())?;
            let mut delta = vec![Rational::zero(); max_n + 1];
            delta[0] = Rational::one();
            return Ok(self.assemble(&delta, lambda, max_n));
        }
        self.dfe_higher_polys(max_n, r, u, lambda)
    }

    /// Degenerate Bernoulli numbers `β_n(λ)`, `n = 0..=max_n`.
    ///
    /// Cross-multiplying the generating function gives
    /// `sum_{m=1}^n C(n,m) (1|λ)_m β_{n-m} = δ_{n,1}`; row `n` solves for `β_{n-1}`.
    pub fn deg_bernoulli_numbers(&self, lambda: &Rational, max_n: usize) -> Vec<Rational> {
        let falling = genfall_table(&Rational::one(), lambda, max_n + 1);
        let binom = binomial_rows(max_n + 1);
        let mut beta: Vec<Rational> = vec![Rational::one()];
        // row n = 1 reads (1|λ)_1 β_0 = 1
        debug_assert!(falling[1].is_one());
        for n in 2..=max_n + 1 {
            let s: Rational = (2..=n)
                .map(|m| &binom[n][m] * &falling[m] * &beta[n - m])
                .sum();
            let divisor = if self.has(Defect::BernoulliDivisor) { n + 1 } else { n };
            beta.push(-(s * Rational::frac(1, divisor as i64)));
        }
        beta
    }

    /// `β_n(x|λ) = sum_l C(n,l) β_{n-l}(λ) (x|λ)_l`, `n = 0..=max_n`.
    pub fn deg_bernoulli_polys(&self, max_n: usize, lambda: &Rational) -> Vec<Poly> {
        let beta = self.deg_bernoulli_numbers(lambda, max_n);
        self.assemble(&beta, lambda, max_n)
    }

    pub fn deg_bernoulli_poly(&self, n: usize, lambda: &Rational) -> Poly {
        self.deg_bernoulli_polys(n, lambda).pop().expect("nonempty")
    }

    /// `g_0 = 0`, `g_n(x) = n h_{n-1,λ}(x|-1)`.
    pub fn deg_genocchi_polys(&self, max_n: usize, lambda: &Rational) -> Vec<Poly> {
        let mut out = vec![Poly::zero()];
        if max_n == 0 {
            return out;
        }
        let h = self
            .dfe_polys(max_n - 1, &Rational::from(-1), lambda)
            .expect("u = -1 is admissible");
        out.extend(
            h.iter()
                .enumerate()
                .map(|(k, p)| p.scale(&Rational::from(k as i64 + 1))),
        );
        out
    }

    pub fn deg_genocchi_poly(&self, n: usize, lambda: &Rational) -> Poly {
        self.deg_genocchi_polys(n, lambda).pop().expect("nonempty")
    }

    /// Classical Frobenius-Euler numbers `H_n(u)` via
    /// `H_n = -1/(1-u) sum_{l<n} C(n,l) H_l`.
    pub fn classical_fe_numbers(&self, u: &Rational, max_n: usize) -> Result<Vec<Rational>> {
        let u = check_u(u.clone())?;
        let factor = -(Rational::one() - &u).recip().expect("u != 1");
        let binom = binomial_rows(max_n);
        let mut h: Vec<Rational> = vec![Rational::one()];
        for n in 1..=max_n {
            let s: Rational = (0..n).map(|l| &binom[n][l] * &h[l]).sum();
            h.push(s * &factor);
        }
        Ok(h)
    }

    /// `H^{(r)}_n(x|u) = sum_l C(n,l) H^{(r)}_l(u) x^{n-l}`.
    pub fn classical_fe_higher_polys(&self, max_n: usize, r: u32, u: &Rational) -> Result<Vec<Poly>> {
        if r < 1 {
            return Err(Error::BadOrder(r));
        }
        let numbers = self_convolve(&self.classical_fe_numbers(u, max_n)?, r);
        let binom = binomial_rows(max_n);
        let drop_binomial = self.has(Defect::ClassicalDropBinomial);
        Ok((0..=max_n)
            .map(|n| {
                Poly::new(
                    (0..=n)
                        .map(|k| {
                            let l = n - k;
                            if drop_binomial {
                                numbers[l].clone()
                            } else {
                                &binom[n][l] * &numbers[l]
                            }
                        })
                        .collect(),
                )
            })
            .collect())
    }

    pub fn classical_fe_polys(&self, max_n: usize, u: &Rational) -> Result<Vec<Poly>> {
        self.classical_fe_higher_polys(max_n, 1, u)
    }

    pub fn classical_fe_poly(&self, n: usize, u: &Rational) -> Result<Poly> {
        Ok(self.classical_fe_polys(n, u)?.pop().expect("nonempty"))
    }

    pub fn classical_fe_higher(&self, n: usize, r: u32, u: &Rational) -> Result<Poly> {
        Ok(self.classical_fe_higher_polys(n, r, u)?.pop().expect("nonempty"))
    }
}

/// `p_n = sum_l C(n,l) c_l K_{n-l}` for `n` up to the shorter input.
pub fn appell_assemble<T: Coeff>(numbers: &[Rational], kernel: &[T]) -> Vec<T> {
    let max_n = numbers.len().min(kernel.len()).saturating_sub(1);
    let binom = binomial_rows(max_n);
    (0..=max_n)
        .map(|n| {
            (0..=n).fold(T::zero(), |acc, l| {
                acc.add(&kernel[n - l].scale(&(&binom[n][l] * &numbers[l])))
            })
        })
        .collect()
}

fn self_convolve(h: &[Rational], r: u32) -> Vec<Rational> {
    let seq = EgfSeq::new(h.to_vec());
    let mut acc = seq.clone();
    for _ in 1..r {
        acc = acc.mul(&seq);
    }
    acc.into_entries()
}

pub fn dfe_numbers(u: &Rational, lambda: &Rational, max_n: usize) -> Result<NumberSeq> {
    let values = Families::exact().dfe_numbers(u, lambda, max_n)?;
    let spec = FamilySpec::new(FamilyKind::DegFrobeniusEuler, Some(u.clone()), lambda.clone(), 1)?;
    Ok(NumberSeq { values, spec })
}

pub fn dfe_poly(n: usize, u: &Rational, lambda: &Rational) -> Result<Poly> {
    Families::exact().dfe_poly(n, u, lambda)
}

pub fn dfe_higher_numbers(r: u32, u: &Rational, lambda: &Rational, max_n: usize) -> Result<NumberSeq> {
    let values = Families::exact().dfe_higher_numbers(r, u, lambda, max_n)?;
    let spec = FamilySpec::new(FamilyKind::DegFrobeniusEulerOrderR, Some(u.clone()), lambda.clone(), r)?;
    Ok(NumberSeq { values, spec })
}

pub fn dfe_higher_poly(n: usize, r: u32, u: &Rational, lambda: &Rational) -> Result<Poly> {
    Families::exact().dfe_higher_poly(n, r, u, lambda)
}

pub fn deg_bernoulli_numbers(lambda: &Rational, max_n: usize) -> NumberSeq {
    let values = Families::exact().deg_bernoulli_numbers(lambda, max_n);
    let spec = FamilySpec::new(FamilyKind::DegBernoulli, None, lambda.clone(), 1).expect("always admissible");
    NumberSeq { values, spec }
}

pub fn deg_bernoulli_poly(n: usize, lambda: &Rational) -> Poly {
    Families::exact().deg_bernoulli_poly(n, lambda)
}

pub fn deg_genocchi_poly(n: usize, lambda: &Rational) -> Poly {
    Families::exact().deg_genocchi_poly(n, lambda)
}

pub fn classical_fe_poly(n: usize, u: &Rational) -> Result<Poly> {
    Families::exact().classical_fe_poly(n, u)
}

pub fn classical_fe_higher(n: usize, r: u32, u: &Rational) -> Result<Poly> {
    Families::exact().classical_fe_higher(n, r, u)
}

// Generating-function oracles.

/// The scalar series `(1+λt)^{1/λ} - u`.
fn denominator_series(u: &Rational, lambda: &Rational, order: usize) -> EgfSeq<Rational> {
    let mut d = binom_kernel(&Rational::one(), lambda, order);
    let shifted = &d.entries()[0] - u;
    let mut entries = d.into_entries();
    entries[0] = shifted;
    d = EgfSeq::new(entries);
    d
}

/// EGF of `((1-u) / ((1+λt)^{1/λ} - u))^r`; the order-`r` number sequence.
pub fn dfe_number_series(r: u32, u: &Rational, lambda: &Rational, order: usize) -> Result<EgfSeq<Rational>> {
    let u = check_u(u.clone())?;
    let base = denominator_series(&u, lambda, order)
        .inv()?
        .scale(&(Rational::one() - &u));
    base.pow(r)
}

/// Full generating function of the order-`r` family at `x`.
pub fn dfe_higher_series<T: Coeff>(r: u32, u: &Rational, lambda: &Rational, x: &T, order: usize) -> Result<EgfSeq<T>> {
    let numbers = dfe_number_series(r, u, lambda, order)?;
    Ok(binom_kernel(x, lambda, order).mul_scalar_seq(&numbers))
}

/// `h_{n,λ}(x|u)` extracted from its generating function.
pub fn dfe_oracle<T: Coeff>(n: usize, u: &Rational, lambda: &Rational, x: &T) -> Result<T> {
    dfe_higher_oracle(n, 1, u, lambda, x)
}

pub fn dfe_higher_oracle<T: Coeff>(n: usize, r: u32, u: &Rational, lambda: &Rational, x: &T) -> Result<T> {
    let s = dfe_higher_series(r, u, lambda, x, n)?;
    Ok(s.entries()[n].clone())
}

/// EGF of `t / ((1+λt)^{1/λ} - 1) (1+λt)^{x/λ}`.
///
/// The division by `t` is done on the denominator: its entries after the
/// shift are `(1|λ)_{n+1} / (n+1)`.
pub fn deg_bernoulli_series<T: Coeff>(lambda: &Rational, x: &T, order: usize) -> EgfSeq<T> {
    let falling = genfall_table(&Rational::one(), lambda, order + 1);
    let shifted = EgfSeq::from_fn(order, |n| &falling[n + 1] * Rational::frac(1, n as i64 + 1));
    let numbers = shifted.inv().expect("constant term is 1");
    binom_kernel(x, lambda, order).mul_scalar_seq(&numbers)
}

/// EGF of `2t / ((1+λt)^{1/λ} + 1) (1+λt)^{x/λ}`.
pub fn deg_genocchi_series<T: Coeff>(lambda: &Rational, x: &T, order: usize) -> EgfSeq<T> {
    let denom = denominator_series(&Rational::from(-1), lambda, order);
    let numbers = denom.inv().expect("constant term is 2").scale(&Rational::from(2)).mul_t();
    binom_kernel(x, lambda, order).mul_scalar_seq(&numbers)
}
