//! Exact scalars, polynomials in `x`, and generalized falling factorials.

mod poly;
mod rational;

pub use poly::Poly;
pub use rational::Rational;

/// Commutative ring operations shared by scalar and polynomial coefficients.
///
/// Lets the series engine and the basis transforms run unchanged over
/// [`Rational`] and [`Poly`].
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn from_scalar(c: Rational) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn from_scalar(c: Rational) -> Self {
        c
    }
}

impl Coeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &Rational) -> Self {
        Poly::scale(self, c)
    }
    fn from_scalar(c: Rational) -> Self {
        Poly::constant(c)
    }
}

/// Generalized falling factorial `(x|λ)_n = x (x - λ) ... (x - (n-1)λ)`.
///
/// `n = 0` gives the empty product 1. Works for a scalar `x` or for the
/// symbolic `x` (pass [`Poly::x`]).
pub fn genfall<T: Coeff>(x: &T, lambda: &Rational, n: usize) -> T {
    (0..n).fold(T::one(), |acc, j| {
        let shift = T::from_scalar(lambda * Rational::from(j as i64));
        acc.mul(&x.sub(&shift))
    })
}

/// `(x|λ)_0, ..., (x|λ)_max` sharing the running product.
pub fn genfall_table<T: Coeff>(x: &T, lambda: &Rational, max: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = T::one();
    out.push(acc.clone());
    for j in 0..max {
        let shift = T::from_scalar(lambda * Rational::from(j as i64));
        acc = acc.mul(&x.sub(&shift));
        out.push(acc.clone());
    }
    out
}

/// Rows `0..=max` of Pascal's triangle as rationals.
pub fn binomial_rows(max: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let row = (0..=n)
            .map(|k| {
                if k == 0 || k == n {
                    Rational::one()
                } else {
                    &rows[n - 1][k - 1] + &rows[n - 1][k]
                }
            })
            .collect();
        rows.push(row);
    }
    rows
}
