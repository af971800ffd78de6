//! Sparse Cl(0,n+1)-valued polynomials on `R^{n+1}` and the q-deformed
//! operators acting on them: axis scaling `γ_i`, q-partial derivatives, the
//! formal 1/q-antiderivative in `x0`, Dirac operators and Laplacians.
//!
//! Polynomial variables commute with all Clifford units; coefficients are
//! attached per term. Derivatives act on monomials by the exact rule
//! `∂^r x^m = [m]_r x^{m-1}`, which on polynomials agrees with the defining
//! difference quotient.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::clifford::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::qcore::{q_int, MultiIndex, QContext, Rational};

/// Which deformation parameter a derivative uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Deformation {
    /// `∂^q`
    Q,
    /// `∂^{1/q}`
    InvQ,
}

/// A sparse polynomial with Clifford coefficients; no zero coefficients are
/// ever stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordPolynomial {
    ctx: QContext,
    terms: BTreeMap<MultiIndex, CliffordElement>,
}

impl CliffordPolynomial {
    pub fn zero(ctx: &QContext) -> Self {
        CliffordPolynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &QContext, c: CliffordElement) -> Self {
        Self::monomial(ctx, MultiIndex::zero(ctx.vars()), c)
    }

    pub fn one(ctx: &QContext) -> Self {
        Self::constant(ctx, CliffordElement::one())
    }

    pub fn monomial(ctx: &QContext, alpha: MultiIndex, coeff: CliffordElement) -> Self {
        assert_eq!(alpha.len(), ctx.vars(), "multi-index arity mismatch");
        let mut p = Self::zero(ctx);
        p.add_term(alpha, coeff);
        p
    }

    /// The coordinate `x_i` as a polynomial.
    pub fn variable(ctx: &QContext, i: usize) -> Self {
        Self::monomial(ctx, MultiIndex::unit(ctx.vars(), i), CliffordElement::one())
    }

    /// The vector variable `x̲ = Σ_{i=1..n} x_i e_i`.
    pub fn vector_x(ctx: &QContext) -> Self {
        let mut p = Self::zero(ctx);
        for i in 1..=ctx.n() {
            p.add_term(MultiIndex::unit(ctx.vars(), i), CliffordElement::unit(i));
        }
        p
    }

    /// `|x̲|^2 = Σ_{i=1..n} x_i^2`; satisfies `x̲^2 = -|x̲|^2`.
    pub fn radius_sq(ctx: &QContext) -> Self {
        let mut p = Self::zero(ctx);
        for i in 1..=ctx.n() {
            let mut alpha = MultiIndex::zero(ctx.vars());
            alpha.0[i] = 2;
            p.add_term(alpha, CliffordElement::one());
        }
        p
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &CliffordElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> CliffordElement {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, alpha: MultiIndex, coeff: CliffordElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c.scale(s));
        }
        out
    }

    /// Left-multiplies every coefficient by the Clifford element `m`.
    pub fn left_mul(&self, m: &CliffordElement) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), m.mul(c));
        }
        out
    }

    /// Product of two polynomials: variables commute, coefficients multiply
    /// in operand order via the Clifford product.
    pub fn mul_poly(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (a1, c1) in &self.terms {
            for (a2, c2) in &other.terms {
                out.add_term(a1.add(a2), c1.mul(c2));
            }
        }
        out
    }

    /// Total degree of the highest stored term, `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|a| a.total_degree()).max()
    }

    /// Every stored multi-index has `α_0 = 0`.
    pub fn is_x_only(&self) -> bool {
        self.terms.keys().all(|a| a.get(0) == 0)
    }

    /// Every coefficient is a scalar blade.
    pub fn is_real_valued(&self) -> bool {
        self.terms.values().all(|c| c.is_scalar())
    }

    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|a| a.total_degree() == k)
    }

    /// Axis scaling `γ_i`: substitutes `x_i ↦ q x_i`, i.e. multiplies each
    /// term by `q^{α_i}`.
    pub fn gamma_scale(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ctx);
        let q = self.ctx.q().clone();
        for (a, c) in &self.terms {
            let factor = crate::qcore::pow_u32(&q, a.get(i));
            out.add_term(a.clone(), c.scale(&factor));
        }
        out
    }

    /// q-partial derivative in axis `i`: monomial rule
    /// `∂^r x_i^m = [m]_r x_i^{m-1}` with `r = q` or `1/q`.
    pub fn partial_q(&self, i: usize, deformation: Deformation) -> Self {
        let r = match deformation {
            Deformation::Q => self.ctx.q().clone(),
            Deformation::InvQ => self.ctx.q_inv(),
        };
        let mut out = Self::zero(&self.ctx);
        for (a, c) in &self.terms {
            let m = a.get(i);
            if m == 0 {
                continue;
            }
            out.add_term(a.lowered(i, 1), c.scale(&q_int(m, &r)));
        }
        out
    }

    /// Formal antiderivative in `x0` with respect to `∂^{1/q}_{x0}`:
    /// `x0^a ↦ x0^{a+1} / [a+1]_{1/q}`, constant of integration zero.
    pub fn antiderivative_x0(&self) -> Self {
        let q_inv = self.ctx.q_inv();
        let mut out = Self::zero(&self.ctx);
        for (a, c) in &self.terms {
            let denom = q_int(a.get(0) + 1, &q_inv);
            out.add_term(a.raised(0, 1), c.scale(&denom.recip()));
        }
        out
    }

    /// q-Dirac operator `D^q_x̲ = Σ_{i=1..n} e_i ∂^q_{x_i}`, units
    /// multiplying coefficients from the left.
    pub fn dirac_q(&self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for i in 1..=self.ctx.n() {
            out = out.add(&self.partial_q(i, Deformation::Q).left_mul(&CliffordElement::unit(i)));
        }
        out
    }

    /// The (1/q,q)-Dirac operator `e0 ∂^{1/q}_{x0} + D^q_x̲` on `R^{n+1}`.
    pub fn dirac_full(&self) -> Self {
        self.partial_q(0, Deformation::InvQ)
            .left_mul(&CliffordElement::unit(0))
            .add(&self.dirac_q())
    }

    /// q-Laplace operator `Δ^q_x̲ = Σ_{i=1..n} (∂^q_{x_i})^2`.
    pub fn laplace_q(&self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for i in 1..=self.ctx.n() {
            out = out.add(&self.partial_q(i, Deformation::Q).partial_q(i, Deformation::Q));
        }
        out
    }

    /// `(∂^{1/q}_{x0})^2 + Δ^q_x̲`; its null solutions are (1/q,q)-harmonic.
    pub fn laplace_full(&self) -> Self {
        self.partial_q(0, Deformation::InvQ)
            .partial_q(0, Deformation::InvQ)
            .add(&self.laplace_q())
    }

    /// Evaluation at `x0 = 0`: discards all terms with `α_0 > 0`.
    pub fn eval_x0_zero(&self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (a, c) in &self.terms {
            if a.get(0) == 0 {
                out.add_term(a.clone(), c.clone());
            }
        }
        out
    }

    /// Splits `P = U + ē_0 V` coefficient-wise.
    pub fn split_e0(&self) -> (Self, Self) {
        let mut u = Self::zero(&self.ctx);
        let mut v = Self::zero(&self.ctx);
        for (a, c) in &self.terms {
            let (cu, cv) = c.split_e0();
            u.add_term(a.clone(), cu);
            v.add_term(a.clone(), cv);
        }
        (u, v)
    }

    /// Flattened view: one `(α, blade, coefficient)` triple per stored
    /// blade, in graded-lex-descending term order.
    pub fn triples(&self) -> Vec<(MultiIndex, Blade, Rational)> {
        let mut out = Vec::new();
        for (a, c) in &self.terms {
            for (b, r) in c.terms() {
                out.push((a.clone(), *b, r.clone()));
            }
        }
        out.sort_by(|x, y| y.0.grlex_cmp(&x.0).then(x.1.cmp(&y.1)));
        out
    }
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, blade, coeff) in self.triples() {
            let (neg, mag) = if coeff.is_negative() {
                (true, -coeff.clone())
            } else {
                (false, coeff)
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (alpha.total_degree() == 0 && blade == Blade::ONE) {
                factors.push(mag.to_string());
            }
            for i in 0..alpha.len() {
                match alpha.get(i) {
                    0 => {}
                    1 => factors.push(format!("x{i}")),
                    e => factors.push(format!("x{i}^{e}")),
                }
            }
            if blade != Blade::ONE {
                factors.push(blade.to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// A polynomial together with its verified homogeneity degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    poly: CliffordPolynomial,
    degree: u32,
}

impl HomogeneousPolynomial {
    pub fn new(poly: CliffordPolynomial, degree: u32) -> Result<Self> {
        if !poly.is_homogeneous_of(degree) {
            return Err(Error::NotHomogeneous);
        }
        Ok(HomogeneousPolynomial { poly, degree })
    }

    /// Homogeneous zero polynomial of the given degree.
    pub fn zero(ctx: &QContext, degree: u32) -> Self {
        HomogeneousPolynomial {
            poly: CliffordPolynomial::zero(ctx),
            degree,
        }
    }

    pub fn poly(&self) -> &CliffordPolynomial {
        &self.poly
    }

    pub fn into_poly(self) -> CliffordPolynomial {
        self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}
