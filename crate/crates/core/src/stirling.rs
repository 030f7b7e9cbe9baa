//! Stirling numbers and the λ-weighted transforms between the degenerate and
//! classical families.

use crate::error::{Error, Result};
use crate::numeric::{Coeff, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Signed, first kind: `(x)_n = sum_k S1(n,k) x^k`.
    FirstSigned,
    /// Second kind: `x^n = sum_k S2(n,k) (x)_k`.
    Second,
}

/// Triangle `S(n,k)`, `0 <= k <= n <= N`.
#[derive(Debug, Clone, PartialEq)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<Rational>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind, max_n: usize) -> Self {
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
        for n in 0..max_n {
            let prev = &rows[n];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_else(Rational::zero);
            let row = (0..=n + 1)
                .map(|k| {
                    let below = if k == 0 { Rational::zero() } else { at(k - 1) };
                    match kind {
                        StirlingKind::FirstSigned => below - at(k) * Rational::from(n as i64),
                        StirlingKind::Second => below + at(k) * Rational::from(k as i64),
                    }
                })
                .collect();
            rows.push(row);
        }
        StirlingTable { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }
}

fn checked(kind: StirlingKind, n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Err(Error::IndexOutOfTriangle { n, k });
    }
    Ok(StirlingTable::new(kind, n).get(n, k))
}

pub fn s1(n: usize, k: usize) -> Result<Rational> {
    checked(StirlingKind::FirstSigned, n, k)
}

pub fn s2(n: usize, k: usize) -> Result<Rational> {
    checked(StirlingKind::Second, n, k)
}

/// `(x|λ)_n` in the monomial basis: coefficient of `x^l` is `λ^{n-l} S1(n,l)`.
pub fn genfall_expand(n: usize, lambda: &Rational) -> Poly {
    let table = StirlingTable::new(StirlingKind::FirstSigned, n);
    Poly::new(
        (0..=n)
            .map(|l| lambda.pow((n - l) as i32) * table.get(n, l))
            .collect(),
    )
}

fn weighted_transform<T: Coeff>(seq: &[T], lambda: &Rational, kind: StirlingKind) -> Vec<T> {
    let max_m = match seq.len() {
        0 => return Vec::new(),
        len => len - 1,
    };
    let table = StirlingTable::new(kind, max_m);
    let powers: Vec<Rational> = (0..=max_m).map(|k| lambda.pow(k as i32)).collect();
    (0..=max_m)
        .map(|m| {
            (0..=m).fold(T::zero(), |acc, n| {
                let w = &powers[m - n] * table.get(m, n);
                if w.is_zero() {
                    acc
                } else {
                    acc.add(&seq[n].scale(&w))
                }
            })
        })
        .collect()
}

/// `out_m = sum_{n<=m} seq_n λ^{m-n} S2(m,n)`: degenerate family to classical.
pub fn degenerate_to_classical<T: Coeff>(seq: &[T], lambda: &Rational) -> Vec<T> {
    weighted_transform(seq, lambda, StirlingKind::Second)
}

/// `out_m = sum_{n<=m} seq_n λ^{m-n} S1(m,n)`: classical family to degenerate.
pub fn classical_to_degenerate<T: Coeff>(seq: &[T], lambda: &Rational) -> Vec<T> {
    weighted_transform(seq, lambda, StirlingKind::FirstSigned)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::genfall;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::frac(p, q)
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::frac(p, q))
    }

    fn poly_seq() -> impl Strategy<Value = Vec<Poly>> {
        prop::collection::vec(
            prop::collection::vec(small_rational(), 0..4).prop_map(Poly::new),
            1..=13,
        )
    }

    #[test]
    fn triangle_values() {
        for n in 0..8 {
            assert_eq!(s1(n, n).unwrap(), Rational::one());
            assert_eq!(s2(n, n).unwrap(), Rational::one());
        }
        assert_eq!(s1(3, 1).unwrap(), r(2, 1));
        assert_eq!(s1(3, 2).unwrap(), r(-3, 1));
        assert_eq!(s2(3, 2).unwrap(), r(3, 1));
        assert_eq!(s2(5, 0).unwrap(), Rational::zero());
        assert_eq!(s1(2, 3), Err(Error::IndexOutOfTriangle { n: 2, k: 3 }));
        assert_eq!(StirlingTable::new(StirlingKind::Second, 3).get(2, 5), Rational::zero());
    }

    /// Set partitions counted by brute force: restricted growth strings.
    fn count_partitions(n: usize, k: usize) -> u64 {
        fn go(pos: usize, n: usize, used: usize, k: usize) -> u64 {
            if pos == n {
                return (used == k) as u64;
            }
            (0..=used.min(k.saturating_sub(1)))
                .map(|b| go(pos + 1, n, used.max(b + 1), k))
                .sum()
        }
        if n == 0 {
            return (k == 0) as u64;
        }
        go(0, n, 0, k)
    }

    #[test]
    fn second_kind_counts_set_partitions() {
        let table = StirlingTable::new(StirlingKind::Second, 8);
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(table.get(n, k), Rational::from(count_partitions(n, k) as i64), "S2({n},{k})");
            }
        }
    }

    #[test]
    fn first_kind_matches_falling_factorial_expansion() {
        for n in 0..=12 {
            let direct = genfall(&Poly::x(), &Rational::one(), n);
            let table = StirlingTable::new(StirlingKind::FirstSigned, n);
            assert_eq!(direct.coeffs(), table.row(n));
        }
    }

    #[test]
    fn inverse_triangles() {
        let a = StirlingTable::new(StirlingKind::FirstSigned, 16);
        let b = StirlingTable::new(StirlingKind::Second, 16);
        for n in 0..=16 {
            for m in 0..=16 {
                let ab: Rational = (0..=16).map(|k| a.get(n, k) * b.get(k, m)).sum();
                let ba: Rational = (0..=16).map(|k| b.get(n, k) * a.get(k, m)).sum();
                let delta = if n == m { Rational::one() } else { Rational::zero() };
                assert_eq!(ab, delta);
                assert_eq!(ba, delta);
            }
        }
    }

    #[test]
    fn genfall_expand_examples() {
        assert_eq!(genfall_expand(0, &r(3, 1)), Poly::one());
        assert_eq!(genfall_expand(3, &Rational::one()), Poly::from_ints(&[0, 2, -3, 1]));
        assert_eq!(genfall_expand(4, &Rational::zero()), Poly::monomial(Rational::one(), 4));
        for n in 0..=12 {
            for lambda in [r(1, 2), r(-2, 3), r(5, 1)] {
                assert_eq!(genfall_expand(n, &lambda), genfall(&Poly::x(), &lambda, n));
            }
        }
    }

    #[test]
    fn zero_lambda_is_identity() {
        let seq: Vec<Poly> = (0..6).map(|k| Poly::monomial(r(k as i64 + 1, 3), k)).collect();
        assert_eq!(degenerate_to_classical(&seq, &Rational::zero()), seq);
        assert_eq!(classical_to_degenerate(&seq, &Rational::zero()), seq);
        let out = degenerate_to_classical(&seq, &r(7, 2));
        assert_eq!(out[1], seq[1]);
        assert!(degenerate_to_classical::<Poly>(&[], &r(1, 2)).is_empty());
    }

    proptest! {
        #[test]
        fn weighted_transforms_are_inverse(seq in poly_seq(), lambda in small_rational()) {
            let there = degenerate_to_classical(&seq, &lambda);
            prop_assert_eq!(classical_to_degenerate(&there, &lambda), seq.clone());
            let back = classical_to_degenerate(&seq, &lambda);
            prop_assert_eq!(degenerate_to_classical(&back, &lambda), seq);
        }
    }
}
