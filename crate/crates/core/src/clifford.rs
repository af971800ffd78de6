//! The real Clifford algebra Cl(0,n+1) with generators `e0, ..., en`
//! satisfying `e_i e_j + e_j e_i = -2 δ_ij`.
//!
//! Basis blades are generator bitmasks (bit i set ⇔ `e_i` present, the empty
//! mask is the identity), with the blade product sign computed on the fly by
//! transposition counting.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::qcore::{pow_u32, rat_int, Rational};

/// A basis blade `e_A` as a bitmask over generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u64);

impl Blade {
    /// The identity blade `1`.
    pub const ONE: Blade = Blade(0);

    /// The generator `e_i`.
    pub fn e(i: usize) -> Blade {
        Blade(1 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Blade {
        let mut mask = 0u64;
        for &i in indices {
            mask |= 1 << i;
        }
        Blade(mask)
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    /// Generator indices present, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 & (1 << i) != 0)
    }

    /// Largest generator index present, if any.
    pub fn max_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Product of two basis blades: result mask is `a XOR b`, the sign is
/// `(-1)^t (-1)^c` with `t` the transpositions needed to sort the
/// concatenated index sequence and `c` the number of common generators
/// (each `e_i^2 = -1`).
pub fn blade_mul(a: Blade, b: Blade) -> (i32, Blade) {
    let mut swaps = 0u32;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    let squares = (a.0 & b.0).count_ones();
    let sign = if (swaps + squares) % 2 == 0 { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// An element of Cl(0,n+1): a finite sum of blades with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliffordElement {
    terms: BTreeMap<Blade, Rational>,
}

impl CliffordElement {
    pub fn zero() -> Self {
        CliffordElement::default()
    }

    pub fn one() -> Self {
        CliffordElement::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        CliffordElement::from_term(Blade::ONE, c)
    }

    /// The generator `e_i`.
    pub fn unit(i: usize) -> Self {
        CliffordElement::from_term(Blade::e(i), Rational::one())
    }

    pub fn from_term(blade: Blade, coeff: Rational) -> Self {
        let mut el = CliffordElement::zero();
        el.add_term(blade, coeff);
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the element is a multiple of the identity blade.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| *b == Blade::ONE)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, blade: Blade, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = CliffordElement::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = CliffordElement::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, c * s);
        }
        out
    }

    /// Bilinear extension of the blade product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = CliffordElement::zero();
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (sign, blade) = blade_mul(*ba, *bb);
                let mut c = ca * cb;
                if sign < 0 {
                    c = -c;
                }
                out.add_term(blade, c);
            }
        }
        out
    }

    /// Clifford conjugation: the anti-automorphism extending `ē_i = -e_i`.
    /// On a grade-r blade the combined reversal and sign flip is
    /// `(-1)^{r(r+1)/2}`.
    pub fn conjugate(&self) -> Self {
        let mut out = CliffordElement::zero();
        for (b, c) in &self.terms {
            let r = b.grade();
            let flip = (r * (r + 1) / 2) % 2 == 1;
            out.add_term(*b, if flip { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Coefficient of the identity blade.
    pub fn scalar_part(&self) -> Rational {
        self.coeff(Blade::ONE)
    }

    /// Squared norm `|λ|_0^2 = 2^{n+1} Σ_A λ_A^2`, exact. `vars = n + 1` is
    /// the number of generators.
    pub fn norm0_sq(&self, vars: usize) -> Rational {
        let mut sum = Rational::zero();
        for c in self.terms.values() {
            sum += c * c;
        }
        pow_u32(&rat_int(2), vars as u32) * sum
    }

    /// Splits `a = U + ē_0 V` with `U`, `V` free of `e_0`.
    pub fn split_e0(&self) -> (CliffordElement, CliffordElement) {
        let mut u = CliffordElement::zero();
        let mut v = CliffordElement::zero();
        for (b, c) in &self.terms {
            if b.contains(0) {
                // c e_0 e_S = -c ē_0 e_S
                v.add_term(Blade(b.0 & !1), -c.clone());
            } else {
                u.add_term(*b, c.clone());
            }
        }
        (u, v)
    }

    /// Largest generator index appearing in any blade.
    pub fn max_generator(&self) -> Option<usize> {
        self.terms.keys().filter_map(|b| b.max_index()).max()
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (b, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if *b == Blade::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag}*{b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::rat;

    #[test]
    fn blade_products() {
        let e1 = Blade::e(1);
        let e2 = Blade::e(2);
        assert_eq!(blade_mul(e1, e1), (-1, Blade::ONE));
        assert_eq!(blade_mul(e1, e2), (1, Blade::from_indices(&[1, 2])));
        assert_eq!(blade_mul(e2, e1), (-1, Blade::from_indices(&[1, 2])));
        // e0e1 · e1e2 = e0 (e1 e1) e2 = -e0e2
        assert_eq!(
            blade_mul(Blade::from_indices(&[0, 1]), Blade::from_indices(&[1, 2])),
            (-1, Blade::from_indices(&[0, 2]))
        );
    }

    #[test]
    fn anticommutation() {
        for i in 0..5 {
            for j in 0..5 {
                let ei = CliffordElement::unit(i);
                let ej = CliffordElement::unit(j);
                let sum = ei.mul(&ej).add(&ej.mul(&ei));
                let expected = if i == j {
                    CliffordElement::scalar(rat_int(-2))
                } else {
                    CliffordElement::zero()
                };
                assert_eq!(sum, expected);
            }
        }
    }

    #[test]
    fn identity_acts_as_one() {
        let a = CliffordElement::unit(1)
            .add(&CliffordElement::from_term(Blade::from_indices(&[0, 2]), rat(3, 4)));
        assert_eq!(CliffordElement::one().mul(&a), a);
        assert_eq!(a.mul(&CliffordElement::one()), a);
    }

    #[test]
    fn vector_square() {
        // (e1 + e2)^2 = -2
        let v = CliffordElement::unit(1).add(&CliffordElement::unit(2));
        assert_eq!(v.mul(&v), CliffordElement::scalar(rat_int(-2)));
    }

    #[test]
    fn conjugation_values() {
        assert_eq!(CliffordElement::one().conjugate(), CliffordElement::one());
        assert_eq!(
            CliffordElement::unit(1).conjugate(),
            CliffordElement::unit(1).neg()
        );
        let e12 = CliffordElement::from_term(Blade::from_indices(&[1, 2]), rat_int(1));
        assert_eq!(e12.conjugate(), e12.neg());
    }

    #[test]
    fn scalar_part_values() {
        let a = CliffordElement::scalar(rat_int(3)).add(&CliffordElement::unit(1).scale(&rat_int(2)));
        assert_eq!(a.scalar_part(), rat_int(3));
        let e12 = CliffordElement::from_term(Blade::from_indices(&[1, 2]), rat_int(1));
        assert_eq!(e12.scalar_part(), rat_int(0));
        let e1 = CliffordElement::unit(1);
        assert_eq!(e1.conjugate().mul(&e1).scalar_part(), rat_int(1));
    }

    #[test]
    fn norm0_values() {
        assert_eq!(CliffordElement::zero().norm0_sq(2), rat_int(0));
        assert_eq!(CliffordElement::one().norm0_sq(2), rat_int(4));
        let a = CliffordElement::unit(1).add(&CliffordElement::unit(2));
        assert_eq!(a.norm0_sq(3), rat_int(16));
    }

    #[test]
    fn split_examples() {
        let five = CliffordElement::scalar(rat_int(5));
        assert_eq!(five.split_e0(), (five.clone(), CliffordElement::zero()));

        let e0bar = CliffordElement::unit(0).neg();
        assert_eq!(
            e0bar.split_e0(),
            (CliffordElement::zero(), CliffordElement::one())
        );

        let e01 = CliffordElement::from_term(Blade::from_indices(&[0, 1]), rat_int(1));
        assert_eq!(
            e01.split_e0(),
            (CliffordElement::zero(), CliffordElement::unit(1).neg())
        );
    }

    #[test]
    fn split_round_trip() {
        let a = CliffordElement::from_term(Blade::from_indices(&[0, 2]), rat(3, 5))
            .add(&CliffordElement::unit(1))
            .add(&CliffordElement::scalar(rat(-7, 2)))
            .add(&CliffordElement::from_term(Blade::from_indices(&[0, 1, 2]), rat_int(2)));
        let (u, v) = a.split_e0();
        assert!(!u.terms().any(|(b, _)| b.contains(0)));
        assert!(!v.terms().any(|(b, _)| b.contains(0)));
        let e0bar = CliffordElement::unit(0).neg();
        assert_eq!(u.add(&e0bar.mul(&v)), a);
    }
}
