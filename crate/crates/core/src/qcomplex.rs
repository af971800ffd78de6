//! Complex q-analytic polynomial toolkit: the Cauchy-Kovalevskaya extension
//! of real polynomials, complex q-binomials and the `∂̄_q` test.
//!
//! Complex numbers are rational pairs; `i` stays symbolic. The module
//! accepts any q > 0 even though the classical source convention is
//! 0 < q < 1.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::qcore::{pow_u32, q_factorial, q_int, Rational};

/// A polynomial in `x` and `y` with complex rational coefficients, sparse
/// and canonical (no zero coefficients stored).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexQPolynomial {
    q: Rational,
    terms: BTreeMap<(u32, u32), (Rational, Rational)>,
}

impl ComplexQPolynomial {
    pub fn zero(q: &Rational) -> Self {
        ComplexQPolynomial {
            q: q.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(q: &Rational) -> Self {
        let mut p = Self::zero(q);
        p.add_term(0, 0, Rational::one(), Rational::zero());
        p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &(Rational, Rational))> {
        self.terms.iter()
    }

    pub fn coeff(&self, xexp: u32, yexp: u32) -> (Rational, Rational) {
        self.terms
            .get(&(xexp, yexp))
            .cloned()
            .unwrap_or((Rational::zero(), Rational::zero()))
    }

    pub fn add_term(&mut self, xexp: u32, yexp: u32, re: Rational, im: Rational) {
        if re.is_zero() && im.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((xexp, yexp))
            .or_insert((Rational::zero(), Rational::zero()));
        entry.0 += re;
        entry.1 += im;
        if entry.0.is_zero() && entry.1.is_zero() {
            self.terms.remove(&(xexp, yexp));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), (re, im)) in &other.terms {
            out.add_term(a, b, re.clone(), im.clone());
        }
        out
    }

    /// Multiplies by the complex scalar `re + i·im`.
    pub fn scale_complex(&self, re: &Rational, im: &Rational) -> Self {
        let mut out = Self::zero(&self.q);
        for (&(a, b), (cre, cim)) in &self.terms {
            out.add_term(a, b, cre * re - cim * im, cre * im + cim * re);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.q);
        for (&(a1, b1), (re1, im1)) in &self.terms {
            for (&(a2, b2), (re2, im2)) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, re1 * re2 - im1 * im2, re1 * im2 + im1 * re2);
            }
        }
        out
    }
}

impl fmt::Display for ComplexQPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), (re, im)) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({re} + {im}i)")?;
            if a > 0 {
                write!(f, "*x^{a}")?;
            }
            if b > 0 {
                write!(f, "*y^{b}")?;
            }
        }
        Ok(())
    }
}

/// `i^k` as a rational pair.
fn i_power(k: u32) -> (Rational, Rational) {
    match k % 4 {
        0 => (Rational::one(), Rational::zero()),
        1 => (Rational::zero(), Rational::one()),
        2 => (-Rational::one(), Rational::zero()),
        _ => (Rational::zero(), -Rational::one()),
    }
}

/// Univariate q-derivative of real coefficients `f[m] x^m`.
fn univariate_q_derivative(f: &[Rational], q: &Rational) -> Vec<Rational> {
    if f.len() <= 1 {
        return vec![];
    }
    (1..f.len())
        .map(|m| &f[m] * q_int(m as u32, q))
        .collect()
}

/// Cauchy-Kovalevskaya extension of a real univariate polynomial `f0` (given
/// by its coefficients, constant first) to a q-analytic polynomial:
/// `p(x+iy) = Σ_k (1/[k]_q!) q^{k(k-1)/2} (iy)^k (D^q_x)^k f0(x)`.
/// The sum terminates exactly at `k = deg f0`.
pub fn ck_extend(f0: &[Rational], q: &Rational) -> ComplexQPolynomial {
    let mut out = ComplexQPolynomial::zero(q);
    let mut derivative: Vec<Rational> = f0.to_vec();
    let mut k = 0u32;
    while !derivative.iter().all(Zero::is_zero) {
        let factor = pow_u32(q, k * k.saturating_sub(1) / 2) / q_factorial(k, q);
        let (ire, iim) = i_power(k);
        for (m, c) in derivative.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c * &factor;
            out.add_term(m as u32, k, &scaled * &ire, &scaled * &iim);
        }
        derivative = univariate_q_derivative(&derivative, q);
        k += 1;
    }
    out
}

/// The complex q-binomial `z_q^k = (x+iy)(x+iqy)...(x+iq^{k-1}y)`, expanded.
pub fn q_binomial_z(k: u32, q: &Rational) -> ComplexQPolynomial {
    let mut out = ComplexQPolynomial::one(q);
    for j in 0..k {
        let mut factor = ComplexQPolynomial::zero(q);
        factor.add_term(1, 0, Rational::one(), Rational::zero());
        factor.add_term(0, 1, Rational::zero(), pow_u32(q, j));
        out = out.mul(&factor);
    }
    out
}

/// `∂̄_q = ½(∂^q_x + i ∂^{1/q}_y)`; a polynomial is q-analytic iff the
/// result is zero.
pub fn dbar_q(p: &ComplexQPolynomial) -> ComplexQPolynomial {
    let q = p.q().clone();
    let q_inv = q.recip();
    let half = Rational::new(1.into(), 2.into());
    let mut out = ComplexQPolynomial::zero(&q);
    for (&(a, b), (re, im)) in p.terms() {
        if a > 0 {
            let f = q_int(a, &q) * &half;
            out.add_term(a - 1, b, re * &f, im * &f);
        }
        if b > 0 {
            // i · ∂^{1/q}_y: multiply by i, so (re, im) ↦ (-im, re)
            let f = q_int(b, &q_inv) * &half;
            out.add_term(a, b - 1, -(im * &f), re * &f);
        }
    }
    out
}

/// Coefficients `(c1, c2)` with `x + i q^n y = c1 z + c2 z̄`:
/// `c1 = (1+q^n)/2`, `c2 = (1-q^n)/2`.
pub fn zq_split(n: u32, q: &Rational) -> (Rational, Rational) {
    let qn = pow_u32(q, n);
    let half = Rational::new(1.into(), 2.into());
    ((Rational::one() + &qn) * &half, (Rational::one() - &qn) * &half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{q_binomial_coeff, rat, rat_int};

    #[test]
    fn ck_extend_linear() {
        // f0 = x → x + iy
        let q = rat(1, 2);
        let p = ck_extend(&[rat_int(0), rat_int(1)], &q);
        let mut expected = ComplexQPolynomial::zero(&q);
        expected.add_term(1, 0, rat_int(1), rat_int(0));
        expected.add_term(0, 1, rat_int(0), rat_int(1));
        assert_eq!(p, expected);
    }

    #[test]
    fn ck_extend_quadratic() {
        // f0 = x² → (x+iy)(x+iqy)
        let q = rat(1, 2);
        let p = ck_extend(&[rat_int(0), rat_int(0), rat_int(1)], &q);
        assert_eq!(p, q_binomial_z(2, &q));
    }

    #[test]
    fn ck_extend_constant() {
        let q = rat(1, 2);
        assert_eq!(ck_extend(&[rat_int(1)], &q), ComplexQPolynomial::one(&q));
    }

    #[test]
    fn q_binomial_expansion() {
        // k = 2 → x² + i(1+q)xy - q y²
        let q = rat(1, 2);
        let p = q_binomial_z(2, &q);
        assert_eq!(p.coeff(2, 0), (rat_int(1), rat_int(0)));
        assert_eq!(p.coeff(1, 1), (rat_int(0), rat(3, 2)));
        assert_eq!(p.coeff(0, 2), (rat(-1, 2), rat_int(0)));
        assert_eq!(q_binomial_z(0, &q), ComplexQPolynomial::one(&q));
    }

    #[test]
    fn q_binomial_coefficients_formula() {
        // coefficient of x^{k-j} y^j is C(k,j)_q q^{j(j-1)/2} i^j
        let q = rat(2, 3);
        let k = 5u32;
        let p = q_binomial_z(k, &q);
        for j in 0..=k {
            let scale =
                q_binomial_coeff(k, j, &q).unwrap() * pow_u32(&q, j * j.saturating_sub(1) / 2);
            let (ire, iim) = i_power(j);
            assert_eq!(p.coeff(k - j, j), (&scale * ire, &scale * iim));
        }
    }

    #[test]
    fn ck_matches_product_formula() {
        for q in [rat(1, 2), rat(2, 3)] {
            for n in 0..=10u32 {
                let mut f0 = vec![rat_int(0); n as usize + 1];
                f0[n as usize] = rat_int(1);
                assert_eq!(ck_extend(&f0, &q), q_binomial_z(n, &q));
            }
        }
    }

    #[test]
    fn dbar_annihilates_q_binomials() {
        for q in [rat(1, 2), rat(2, 3)] {
            for k in 0..=10u32 {
                assert!(dbar_q(&q_binomial_z(k, &q)).is_zero());
            }
        }
    }

    #[test]
    fn dbar_of_x() {
        let q = rat(1, 2);
        let mut x = ComplexQPolynomial::zero(&q);
        x.add_term(1, 0, rat_int(1), rat_int(0));
        let d = dbar_q(&x);
        assert_eq!(d.coeff(0, 0), (rat(1, 2), rat_int(0)));
    }

    #[test]
    fn inverse_factorial_identity() {
        // 1/[k]_{1/q}! = q^{k(k-1)/2} / [k]_q!
        for q in [rat(1, 2), rat(4, 3)] {
            let q_inv = q.recip();
            for k in 0..=10u32 {
                assert_eq!(
                    q_factorial(k, &q_inv).recip(),
                    pow_u32(&q, k * k.saturating_sub(1) / 2) / q_factorial(k, &q)
                );
            }
        }
    }

    #[test]
    fn zq_split_values() {
        let q = rat(1, 2);
        assert_eq!(zq_split(0, &q), (rat_int(1), rat_int(0)));
        assert_eq!(zq_split(1, &q), (rat(3, 4), rat(1, 4)));
        assert_eq!(zq_split(7, &rat_int(1)), (rat_int(1), rat_int(0)));
    }
}
