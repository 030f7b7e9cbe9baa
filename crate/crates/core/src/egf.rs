//! Truncated exponential generating functions.
//!
//! An [`EgfSeq`] stores `a_n = n! [t^n] A(t)` for `n = 0..=N`. Products are
//! binomial convolutions, so formulas written against `t^n / n!` translate
//! directly. Every operation truncates to the smaller operand order.

use crate::error::{Error, Result};
use crate::numeric::{binomial_rows, genfall_table, Coeff, Poly, Rational};

#[derive(Clone, PartialEq, Debug)]
pub struct EgfSeq<C> {
    entries: Vec<C>,
}

impl<C: Coeff> EgfSeq<C> {
    /// Panics on an empty entry list; a series always has order `>= 0`.
    pub fn new(entries: Vec<C>) -> Self {
        assert!(!entries.is_empty(), "an EGF needs at least the constant entry");
        EgfSeq { entries }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        EgfSeq::new((0..=order).map(f).collect())
    }

    /// The constant series `c`.
    pub fn constant(c: C, order: usize) -> Self {
        let mut entries = vec![C::zero(); order + 1];
        entries[0] = c;
        EgfSeq { entries }
    }

    /// Multiplicative identity `[1, 0, ..., 0]`.
    pub fn identity(order: usize) -> Self {
        EgfSeq::constant(C::one(), order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        let mut entries = vec![C::zero(); order + 1];
        if order >= 1 {
            entries[1] = C::one();
        }
        EgfSeq { entries }
    }

    pub fn order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[C] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<C> {
        self.entries
    }

    pub fn get(&self, n: usize) -> Option<&C> {
        self.entries.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        EgfSeq::new(self.entries[..=order.min(self.order())].to_vec())
    }

    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> EgfSeq<D> {
        EgfSeq::new(self.entries.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        EgfSeq::from_fn(order, |n| self.entries[n].add(&rhs.entries[n]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        EgfSeq::from_fn(order, |n| self.entries[n].sub(&rhs.entries[n]))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Binomial convolution `(a b)_n = sum_k C(n,k) a_k b_{n-k}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.convolve(rhs, |a, b| a.mul(b))
    }

    /// Product with a scalar-coefficient series.
    pub fn mul_scalar_seq(&self, rhs: &EgfSeq<Rational>) -> Self {
        self.convolve(rhs, |a, b| a.scale(b))
    }

    fn convolve<D>(&self, rhs: &EgfSeq<D>, prod: impl Fn(&C, &D) -> C) -> Self {
        let order = self.order().min(rhs.entries.len() - 1);
        let binom = binomial_rows(order);
        EgfSeq::from_fn(order, |n| {
            (0..=n).fold(C::zero(), |acc, k| {
                let a = &self.entries[k];
                if a.is_zero() {
                    return acc;
                }
                acc.add(&prod(a, &rhs.entries[n - k]).scale(&binom[n][k]))
            })
        })
    }

    /// `r`-fold product of the series with itself, by repeated squaring.
    pub fn pow(&self, r: u32) -> Result<Self> {
        if r < 1 {
            return Err(Error::BadOrder(r));
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc.expect("r >= 1"))
    }

    /// The series `t A(t)`: entry `n` becomes `n a_{n-1}`.
    pub fn mul_t(&self) -> Self {
        EgfSeq::from_fn(self.order(), |n| {
            if n == 0 {
                C::zero()
            } else {
                self.entries[n - 1].scale(&Rational::from(n as i64))
            }
        })
    }

    /// `A(g(t))` for a scalar inner series with `g(0) = 0`.
    ///
    /// Horner form `a_0 + g (a_1 + g/2 (a_2 + g/3 (...)))`.
    pub fn compose(&self, inner: &EgfSeq<Rational>) -> Self {
        assert!(inner.entries[0].is_zero(), "inner series must vanish at t = 0");
        let order = self.order().min(inner.order());
        let mut acc = EgfSeq::constant(self.entries[order].clone(), order);
        for k in (0..order).rev() {
            let step = acc.mul_scalar_seq(inner).scale(&Rational::frac(1, k as i64 + 1));
            acc = step.add(&EgfSeq::constant(self.entries[k].clone(), order));
        }
        acc
    }

    /// `A((e^{λt} - 1) / λ)`.
    pub fn compose_scaled_exp(&self, lambda: &Rational, order: usize) -> Result<Self> {
        let inner = scaled_exp_inner(lambda, order)?;
        Ok(self.compose(&inner))
    }

    /// `A(log(1 + λt) / λ)`.
    pub fn compose_scaled_log(&self, lambda: &Rational, order: usize) -> Result<Self> {
        let inner = scaled_log_inner(lambda, order)?;
        Ok(self.compose(&inner))
    }
}

impl EgfSeq<Rational> {
    /// Reciprocal series by the triangular recurrence
    /// `b_0 = 1/a_0`, `b_n = -(1/a_0) sum_{k=1}^n C(n,k) a_k b_{n-k}`.
    pub fn inv(&self) -> Result<Self> {
        let a0_inv = self.entries[0].recip().ok_or(Error::ZeroConstantTerm)?;
        let order = self.order();
        let binom = binomial_rows(order);
        let mut b: Vec<Rational> = Vec::with_capacity(order + 1);
        b.push(a0_inv.clone());
        for n in 1..=order {
            let s: Rational = (1..=n)
                .filter(|&k| !self.entries[k].is_zero())
                .map(|k| &binom[n][k] * &self.entries[k] * &b[n - k])
                .sum();
            b.push(-(s * &a0_inv));
        }
        Ok(EgfSeq::new(b))
    }

    /// Lift scalar entries to constant polynomials.
    pub fn to_poly(&self) -> EgfSeq<Poly> {
        self.map(|c| Poly::constant(c.clone()))
    }
}

/// EGF of `(1 + λt)^{x/λ}`: entries `(x|λ)_m`, reading as `e^{xt}` at `λ = 0`.
pub fn binom_kernel<T: Coeff>(x: &T, lambda: &Rational, order: usize) -> EgfSeq<T> {
    EgfSeq::new(genfall_table(x, lambda, order))
}

/// EGF of `(e^{λt} - 1)/λ`: entries `0, 1, λ, λ^2, ...`.
pub fn scaled_exp_inner(lambda: &Rational, order: usize) -> Result<EgfSeq<Rational>> {
    if lambda.is_zero() {
        return Err(Error::LambdaZero);
    }
    Ok(EgfSeq::from_fn(order, |n| {
        if n == 0 {
            Rational::zero()
        } else {
            lambda.pow(n as i32 - 1)
        }
    }))
}

/// EGF of `log(1 + λt)/λ`: entries `0`, then `(-1)^{n-1} (n-1)! λ^{n-1}`.
pub fn scaled_log_inner(lambda: &Rational, order: usize) -> Result<EgfSeq<Rational>> {
    if lambda.is_zero() {
        return Err(Error::LambdaZero);
    }
    let mut entries = vec![Rational::zero()];
    let mut term = Rational::one();
    for n in 1..=order {
        entries.push(term.clone());
        term = -(term * lambda * Rational::from(n as i64));
    }
    Ok(EgfSeq::new(entries))
}
