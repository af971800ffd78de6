//! Exact rational scalars, q-numbers, q-factorials and multi-indices.
//!
//! All scalar arithmetic in this crate is exact: coefficients are
//! arbitrary-precision rationals, always stored reduced. The basic number
//! `[u]_q` is implemented as the explicit sum `1 + q + ... + q^{u-1}` so that
//! `q = 1` is a valid deformation parameter and the classical theory is
//! recovered exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational scalar, the only number type in the core.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `q^e` for a non-negative integer exponent.
pub fn pow_u32(q: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    let mut base = q.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// The basic number `[u]_q = 1 + q + ... + q^{u-1}` (empty sum for `u = 0`).
pub fn q_int(u: u32, q: &Rational) -> Rational {
    let mut sum = Rational::zero();
    let mut pw = Rational::one();
    for _ in 0..u {
        sum += &pw;
        pw *= q;
    }
    sum
}

/// The q-factorial `[k]_q! = [1]_q [2]_q ... [k]_q`, with `[0]_q! = 1`.
pub fn q_factorial(k: u32, q: &Rational) -> Rational {
    let mut prod = Rational::one();
    for j in 1..=k {
        prod *= q_int(j, q);
    }
    prod
}

/// The q-binomial coefficient `[n]_q! / ([k]_q! [n-k]_q!)`.
pub fn q_binomial_coeff(n: u32, k: u32, q: &Rational) -> Result<Rational> {
    if k > n {
        return Err(Error::BinomialArgs { n, k });
    }
    Ok(q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q)))
}

/// Deformation parameter and ambient dimension, threaded through every
/// operation. The vector variable lives in `R^n`; the full space is `R^{n+1}`
/// with the extra coordinate `x0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QContext {
    q: Rational,
    n: usize,
}

impl QContext {
    /// Requires `q > 0` and `n >= 1`. `q = 1` is allowed here; the conjugate
    /// construction enforces `q > 1` itself.
    pub fn new(q: Rational, n: usize) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::InvalidContext(format!("q must be > 0, got {q}")));
        }
        if n < 1 {
            return Err(Error::InvalidContext("n must be >= 1".into()));
        }
        Ok(QContext { q, n })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn q_inv(&self) -> Rational {
        self.q.recip()
    }

    /// Dimension of the vector part `x̲`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of coordinates including `x0`.
    pub fn vars(&self) -> usize {
        self.n + 1
    }
}

/// Exponent vector `(a0, a1, ..., an)`; slot 0 is reserved for `x0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(vars: usize) -> Self {
        MultiIndex(vec![0; vars])
    }

    /// `x_i` as a multi-index.
    pub fn unit(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Copy with slot `i` increased by `d`.
    pub fn raised(&self, i: usize, d: u32) -> Self {
        let mut e = self.0.clone();
        e[i] += d;
        MultiIndex(e)
    }

    /// Copy with slot `i` decreased by `d`; caller guarantees `e[i] >= d`.
    pub fn lowered(&self, i: usize, d: u32) -> Self {
        let mut e = self.0.clone();
        e[i] -= d;
        MultiIndex(e)
    }

    pub fn add(&self, other: &MultiIndex) -> Self {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Graded-lex comparison: higher total degree first, then lexicographic
    /// with slot 0 most significant.
    pub fn grlex_cmp(&self, other: &MultiIndex) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// `[α]_q! = Π_i [α_i]_q!` over all slots.
pub fn q_multiindex_factorial(alpha: &MultiIndex, q: &Rational) -> Rational {
    let mut prod = Rational::one();
    for &a in &alpha.0 {
        prod *= q_factorial(a, q);
    }
    prod
}

/// Parses a rational from `p`, `-p` or `p/q` notation.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::InvalidContext(format!("invalid integer: {t}")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::InvalidContext("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_int_edge_cases() {
        let q = rat(4, 3);
        assert_eq!(q_int(0, &q), rat_int(0));
        assert_eq!(q_int(2, &q), rat(7, 3));
        assert_eq!(q_int(5, &rat_int(1)), rat_int(5));
    }

    #[test]
    fn q_int_recursion() {
        // [u]_q - q [u-1]_q = 1
        for q in [rat(4, 3), rat(1, 2), rat_int(2), rat_int(1)] {
            for u in 1..=12u32 {
                assert_eq!(q_int(u, &q) - &q * q_int(u - 1, &q), rat_int(1));
            }
        }
    }

    #[test]
    fn q_int_classical_limit() {
        for u in 0..=50u32 {
            assert_eq!(q_int(u, &rat_int(1)), rat_int(u as i64));
        }
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(q_factorial(0, &rat(4, 3)), rat_int(1));
        assert_eq!(q_factorial(3, &rat(4, 3)), rat(259, 27));
        assert_eq!(q_factorial(4, &rat_int(1)), rat_int(24));
    }

    #[test]
    fn q_multiindex_factorial_values() {
        let q = rat(4, 3);
        assert_eq!(
            q_multiindex_factorial(&MultiIndex(vec![0, 0, 0]), &q),
            rat_int(1)
        );
        assert_eq!(
            q_multiindex_factorial(&MultiIndex(vec![0, 2, 1]), &q),
            rat(7, 3)
        );
        assert_eq!(
            q_multiindex_factorial(&MultiIndex(vec![1, 1, 1]), &rat_int(1)),
            rat_int(1)
        );
    }

    #[test]
    fn q_binomial_values() {
        let q = rat(4, 3);
        assert_eq!(q_binomial_coeff(3, 3, &q).unwrap(), rat_int(1));
        assert_eq!(q_binomial_coeff(2, 1, &q).unwrap(), rat(7, 3));
        assert_eq!(q_binomial_coeff(4, 2, &rat_int(1)).unwrap(), rat_int(6));
        assert!(q_binomial_coeff(2, 3, &q).is_err());
    }

    #[test]
    fn q_pascal_rule() {
        // C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q
        for q in [rat(4, 3), rat(5, 7), rat_int(3)] {
            for n in 1..=12u32 {
                for k in 1..n {
                    let lhs = q_binomial_coeff(n, k, &q).unwrap();
                    let rhs = q_binomial_coeff(n - 1, k - 1, &q).unwrap()
                        + pow_u32(&q, k) * q_binomial_coeff(n - 1, k, &q).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn context_validation() {
        assert!(QContext::new(rat_int(0), 2).is_err());
        assert!(QContext::new(rat(-1, 2), 2).is_err());
        assert!(QContext::new(rat_int(1), 0).is_err());
        assert!(QContext::new(rat_int(1), 1).is_ok());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-47/64").unwrap(), rat(-47, 64));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("5").unwrap(), rat_int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
