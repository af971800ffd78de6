//! Fischer inner product, Fischer decompositions of homogeneous polynomial
//! spaces in the vector variable, the exact q-Poisson solver, and exact
//! kernel bases of the q-operators.
//!
//! All decompositions are exact dense linear algebra over rationals on the
//! graded-lex monomial basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::clifford::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qcore::{q_multiindex_factorial, MultiIndex, QContext, Rational};
use crate::qpoly::{CliffordPolynomial, Deformation, HomogeneousPolynomial};

/// All multi-indices of the given total degree over `vars` slots, slot 0
/// forced to zero when `x_only`, in graded-lex order (slot 0 most
/// significant, lexicographically descending).
pub fn monomial_basis(vars: usize, degree: u32, x_only: bool) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0u32; vars];
    let start = if x_only { 1 } else { 0 };
    fn rec(current: &mut Vec<u32>, slot: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
        if slot == current.len() - 1 {
            current[slot] = remaining;
            out.push(MultiIndex(current.clone()));
            current[slot] = 0;
            return;
        }
        for d in (0..=remaining).rev() {
            current[slot] = d;
            rec(current, slot + 1, remaining - d, out);
        }
        current[slot] = 0;
    }
    if x_only && vars == 1 {
        return if degree == 0 { vec![MultiIndex(vec![0])] } else { vec![] };
    }
    if x_only {
        let mut rest = vec![0u32; vars - 1];
        let mut tmp = Vec::new();
        rec(&mut rest, 0, degree, &mut tmp);
        for m in tmp {
            let mut e = vec![0u32];
            e.extend(m.0);
            out.push(MultiIndex(e));
        }
    } else {
        rec(&mut current, start, degree, &mut out);
    }
    out
}

/// Ordered monomial basis of the degree-`k` homogeneous polynomials in the
/// vector variable (`α_0 = 0`), in graded-lex order.
#[derive(Debug, Clone)]
pub struct FischerBasis {
    degree: u32,
    n: usize,
    indices: Vec<MultiIndex>,
}

impl FischerBasis {
    pub fn new(n: usize, degree: u32) -> Self {
        FischerBasis {
            degree,
            n,
            indices: monomial_basis(n + 1, degree, true),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

fn require_x_only(p: &HomogeneousPolynomial) -> Result<()> {
    if !p.poly().is_x_only() {
        return Err(Error::NotXOnly);
    }
    Ok(())
}

/// Fischer inner product `⟨R1,R2⟩_{k,q} = Σ_α [α]_q! (ā¹_α a²_α)_0` on
/// homogeneous polynomials of equal degree in the vector variable.
///
/// In debug builds the coefficient formula is cross-checked against the
/// differential form `(R̄1(D^q) R2)_0`.
pub fn fischer_ip(r1: &HomogeneousPolynomial, r2: &HomogeneousPolynomial) -> Result<Rational> {
    require_x_only(r1)?;
    require_x_only(r2)?;
    if r1.degree() != r2.degree() {
        return Err(Error::DegreeMismatch(r1.degree(), r2.degree()));
    }
    let q = r1.poly().ctx().q().clone();
    let mut acc = Rational::zero();
    for (alpha, c1) in r1.poly().terms() {
        let c2 = r2.poly().coeff(alpha);
        if c2.is_zero() {
            continue;
        }
        acc += q_multiindex_factorial(alpha, &q) * c1.conjugate().mul(&c2).scalar_part();
    }
    debug_assert_eq!(acc, fischer_ip_differential(r1, r2));
    Ok(acc)
}

/// The differential form of the Fischer inner product: each monomial `x^α`
/// of the conjugated `R1` is replaced by `(∂^q)^α` and applied to `R2`.
pub fn fischer_ip_differential(
    r1: &HomogeneousPolynomial,
    r2: &HomogeneousPolynomial,
) -> Rational {
    let mut acc = CliffordElement::zero();
    let zero_index = MultiIndex::zero(r2.poly().ctx().vars());
    for (alpha, c1) in r1.poly().terms() {
        let mut derived = r2.poly().clone();
        for i in 0..alpha.len() {
            for _ in 0..alpha.get(i) {
                derived = derived.partial_q(i, Deformation::Q);
            }
        }
        acc = acc.add(&c1.conjugate().mul(&derived.coeff(&zero_index)));
    }
    acc.scalar_part()
}

/// Both sides of the two Fischer adjointness identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointnessReport {
    /// `⟨x̲ Q, P⟩_{k+1,q}`
    pub vector_lhs: Rational,
    /// `-⟨Q, D^q P⟩_{k,q}`
    pub vector_rhs: Rational,
    /// `⟨|x̲|² Q, R⟩_{k+2,q}`
    pub radius_lhs: Rational,
    /// `⟨Q, Δ^q R⟩_{k,q}`
    pub radius_rhs: Rational,
}

impl AdjointnessReport {
    pub fn holds(&self) -> bool {
        self.vector_lhs == self.vector_rhs && self.radius_lhs == self.radius_rhs
    }
}

/// Evaluates both adjointness identities for `Q` of degree `k`, `P` of
/// degree `k+1` and `R` of degree `k+2`:
/// `⟨x̲Q, P⟩ = -⟨Q, D^q P⟩` and `⟨|x̲|²Q, R⟩ = ⟨Q, Δ^q R⟩` (the second is
/// the first one applied twice; the signs cancel since x̲² = -|x̲|²).
pub fn check_adjointness(
    q_poly: &HomogeneousPolynomial,
    p: &HomogeneousPolynomial,
    r: &HomogeneousPolynomial,
) -> Result<AdjointnessReport> {
    require_x_only(q_poly)?;
    require_x_only(p)?;
    require_x_only(r)?;
    let k = q_poly.degree();
    if p.degree() != k + 1 {
        return Err(Error::DegreeMismatch(p.degree(), k + 1));
    }
    if r.degree() != k + 2 {
        return Err(Error::DegreeMismatch(r.degree(), k + 2));
    }
    let ctx = q_poly.poly().ctx();
    let x = CliffordPolynomial::vector_x(ctx);
    let r2 = CliffordPolynomial::radius_sq(ctx);

    let xq = HomogeneousPolynomial::new(x.mul_poly(q_poly.poly()), k + 1)?;
    let dp = HomogeneousPolynomial::new(p.poly().dirac_q(), k)?;
    let rq = HomogeneousPolynomial::new(r2.mul_poly(q_poly.poly()), k + 2)?;
    let lr = HomogeneousPolynomial::new(r.poly().laplace_q(), k)?;

    Ok(AdjointnessReport {
        vector_lhs: fischer_ip(&xq, p)?,
        vector_rhs: -fischer_ip(q_poly, &dp)?,
        radius_lhs: fischer_ip(&rq, r)?,
        radius_rhs: fischer_ip(q_poly, &lr)?,
    })
}

/// Solves `op(Σ c_j b_j) = target` exactly over the span of `domain`.
/// The codomain basis is enumerated from the images and the target.
fn solve_in_span(
    ctx: &QContext,
    domain: &[CliffordPolynomial],
    op: impl Fn(&CliffordPolynomial) -> CliffordPolynomial,
    target: &CliffordPolynomial,
) -> Result<CliffordPolynomial> {
    let images: Vec<CliffordPolynomial> = domain.iter().map(&op).collect();
    let mut codomain: BTreeMap<(MultiIndex, Blade), usize> = BTreeMap::new();
    for poly in images.iter().chain(std::iter::once(target)) {
        for (alpha, blade, _) in poly.triples() {
            let next = codomain.len();
            codomain.entry((alpha, blade)).or_insert(next);
        }
    }
    let mut matrix = Matrix::zeros(codomain.len(), domain.len());
    for (col, image) in images.iter().enumerate() {
        for (alpha, blade, coeff) in image.triples() {
            let row = codomain[&(alpha, blade)];
            matrix.set(row, col, coeff);
        }
    }
    let mut rhs = vec![Rational::zero(); codomain.len()];
    for (alpha, blade, coeff) in target.triples() {
        rhs[codomain[&(alpha, blade)]] = coeff;
    }
    let solution = matrix.solve(&rhs)?;
    let mut out = CliffordPolynomial::zero(ctx);
    for (c, basis_poly) in solution.iter().zip(domain) {
        if !c.is_zero() {
            out = out.add(&basis_poly.scale(c));
        }
    }
    // rref zeroes free variables, so verify the candidate actually solves
    // the system (guards against inconsistent underdetermined cases).
    if op(&out) != *target {
        return Err(Error::SingularSystem);
    }
    Ok(out)
}

/// All blades over the generators `e1..en`, optionally with `e0` adjoined
/// to each.
fn vector_blades(n: usize, with_e0: bool) -> Vec<Blade> {
    (0..1u64 << n)
        .map(|s| Blade((s << 1) | u64::from(with_e0)))
        .collect()
}

/// Monomial-times-blade basis of the Clifford-valued homogeneous
/// polynomials of the given degree in the vector variable.
fn clifford_basis(
    ctx: &QContext,
    degree: u32,
    blades: &[Blade],
) -> Vec<CliffordPolynomial> {
    let mut out = Vec::new();
    for alpha in monomial_basis(ctx.vars(), degree, true) {
        for &b in blades {
            out.push(CliffordPolynomial::monomial(
                ctx,
                alpha.clone(),
                CliffordElement::from_term(b, Rational::from_integer(1.into())),
            ));
        }
    }
    out
}

/// Solves the q-Poisson equation `Δ^q_x̲ h = g` for homogeneous `g` of
/// degree `d` in the vector variable, returning the unique solution of
/// degree `d+2` inside `|x̲|² P_d`.
pub fn solve_q_poisson(g: &HomogeneousPolynomial) -> Result<HomogeneousPolynomial> {
    require_x_only(g)?;
    let ctx = g.poly().ctx().clone();
    let d = g.degree();
    if g.is_zero() {
        return Ok(HomogeneousPolynomial::zero(&ctx, d + 2));
    }
    let r2 = CliffordPolynomial::radius_sq(&ctx);
    // Δ^q is blade-diagonal, so one scalar solve per blade suffices; the
    // domain is the image basis |x̲|² x^β for β of degree d.
    let scalar_domain = clifford_basis(&ctx, d, &[Blade::ONE]);
    let mut quotient = CliffordPolynomial::zero(&ctx);
    let mut per_blade: BTreeMap<Blade, CliffordPolynomial> = BTreeMap::new();
    for (alpha, blade, coeff) in g.poly().triples() {
        per_blade
            .entry(blade)
            .or_insert_with(|| CliffordPolynomial::zero(&ctx))
            .add_term(alpha, CliffordElement::scalar(coeff));
    }
    for (blade, component) in per_blade {
        let t = solve_in_span(
            &ctx,
            &scalar_domain,
            |p| r2.mul_poly(p).laplace_q(),
            &component,
        )?;
        quotient = quotient.add(&t.left_mul(&CliffordElement::from_term(
            blade,
            Rational::from_integer(1.into()),
        )));
    }
    HomogeneousPolynomial::new(r2.mul_poly(&quotient), d + 2)
}

/// Exact quotient `h / |x̲|²`; errors when `h` is not in `|x̲|² P`.
pub fn radius_sq_quotient(h: &HomogeneousPolynomial) -> Result<HomogeneousPolynomial> {
    require_x_only(h)?;
    let ctx = h.poly().ctx().clone();
    if h.is_zero() {
        return Ok(HomogeneousPolynomial::zero(&ctx, h.degree().saturating_sub(2)));
    }
    if h.degree() < 2 {
        return Err(Error::Internal("degree too low for |x|^2 quotient".into()));
    }
    let d = h.degree() - 2;
    let r2 = CliffordPolynomial::radius_sq(&ctx);
    let blades = blades_of(h.poly());
    let domain = clifford_basis(&ctx, d, &blades);
    let t = solve_in_span(&ctx, &domain, |p| r2.mul_poly(p), h.poly())?;
    HomogeneousPolynomial::new(t, d)
}

fn blades_of(p: &CliffordPolynomial) -> Vec<Blade> {
    let mut set = std::collections::BTreeSet::new();
    for (_, blade, _) in p.triples() {
        set.insert(blade);
    }
    set.into_iter().collect()
}

/// Fischer decomposition `P = H + |x̲|² Q` with `Δ^q H = 0`, for `P`
/// homogeneous of degree `k` in the vector variable. For `k < 2` the
/// decomposition is trivially `(P, 0)`.
pub fn decompose_harmonic(
    p: &HomogeneousPolynomial,
) -> Result<(HomogeneousPolynomial, HomogeneousPolynomial)> {
    require_x_only(p)?;
    let ctx = p.poly().ctx().clone();
    let k = p.degree();
    if k < 2 {
        return Ok((p.clone(), HomogeneousPolynomial::zero(&ctx, 0)));
    }
    let lap = HomogeneousPolynomial::new(p.poly().laplace_q(), k - 2)?;
    let h_part = solve_q_poisson(&lap)?;
    let q_part = radius_sq_quotient(&h_part)?;
    let h = HomogeneousPolynomial::new(p.poly().sub(h_part.poly()), k)?;
    Ok((h, q_part))
}

/// Fischer decomposition `P = M + x̲ Q` with `D^q M = 0`, for `P`
/// homogeneous of degree `k` in the vector variable. For `k < 1` the
/// decomposition is trivially `(P, 0)`.
pub fn decompose_monogenic(
    p: &HomogeneousPolynomial,
) -> Result<(HomogeneousPolynomial, HomogeneousPolynomial)> {
    require_x_only(p)?;
    let ctx = p.poly().ctx().clone();
    let k = p.degree();
    if k < 1 {
        return Ok((p.clone(), HomogeneousPolynomial::zero(&ctx, 0)));
    }
    let x = CliffordPolynomial::vector_x(&ctx);
    let target = p.poly().dirac_q();
    // Left multiplication by e_i never touches the e0 bit, so the e0-free
    // and e0-carrying blade sectors decouple and are solved separately.
    let mut q_sol = CliffordPolynomial::zero(&ctx);
    for with_e0 in [false, true] {
        let mut sector = CliffordPolynomial::zero(&ctx);
        for (alpha, blade, coeff) in target.triples() {
            if blade.contains(0) == with_e0 {
                sector.add_term(alpha, CliffordElement::from_term(blade, coeff));
            }
        }
        if sector.is_zero() {
            continue;
        }
        let domain = clifford_basis(&ctx, k - 1, &vector_blades(ctx.n(), with_e0));
        let sol = solve_in_span(&ctx, &domain, |t| x.mul_poly(t).dirac_q(), &sector)?;
        q_sol = q_sol.add(&sol);
    }
    let q_part = HomogeneousPolynomial::new(q_sol.clone(), k - 1)?;
    let m = HomogeneousPolynomial::new(p.poly().sub(&x.mul_poly(&q_sol)), k)?;
    Ok((m, q_part))
}

/// Operator whose homogeneous kernel is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelOperator {
    LaplaceQ,
    LaplaceFull,
    DiracQ,
    DiracFull,
}

impl KernelOperator {
    /// Whether the operator acts on polynomials in the vector variable only.
    pub fn is_x_only(self) -> bool {
        matches!(self, KernelOperator::LaplaceQ | KernelOperator::DiracQ)
    }

    pub fn apply(self, p: &CliffordPolynomial) -> CliffordPolynomial {
        match self {
            KernelOperator::LaplaceQ => p.laplace_q(),
            KernelOperator::LaplaceFull => p.laplace_full(),
            KernelOperator::DiracQ => p.dirac_q(),
            KernelOperator::DiracFull => p.dirac_full(),
        }
    }
}

/// Coefficient value space for kernel extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueSpace {
    /// Scalar (real) coefficients only.
    Scalar,
    /// The full Clifford coefficient algebra.
    Full,
}

/// Exact basis of the kernel of the operator restricted to homogeneous
/// degree-`k` polynomials, by null-space extraction from the operator
/// matrix on the monomial basis.
pub fn kernel_basis(
    operator: KernelOperator,
    degree: u32,
    value_space: ValueSpace,
    ctx: &QContext,
) -> Result<Vec<HomogeneousPolynomial>> {
    let x_only = operator.is_x_only();
    let blades = match (value_space, x_only) {
        (ValueSpace::Scalar, _) => vec![Blade::ONE],
        (ValueSpace::Full, true) => vector_blades(ctx.n(), false),
        (ValueSpace::Full, false) => {
            let mut b = vector_blades(ctx.n(), false);
            b.extend(vector_blades(ctx.n(), true));
            b.sort();
            b
        }
    };
    let mut domain = Vec::new();
    for alpha in monomial_basis(ctx.vars(), degree, x_only) {
        for &b in &blades {
            domain.push(CliffordPolynomial::monomial(
                ctx,
                alpha.clone(),
                CliffordElement::from_term(b, Rational::from_integer(1.into())),
            ));
        }
    }
    let images: Vec<CliffordPolynomial> = domain.iter().map(|p| operator.apply(p)).collect();
    let mut codomain: BTreeMap<(MultiIndex, Blade), usize> = BTreeMap::new();
    for image in &images {
        for (alpha, blade, _) in image.triples() {
            let next = codomain.len();
            codomain.entry((alpha, blade)).or_insert(next);
        }
    }
    let mut matrix = Matrix::zeros(codomain.len(), domain.len());
    for (col, image) in images.iter().enumerate() {
        for (alpha, blade, coeff) in image.triples() {
            matrix.set(codomain[&(alpha, blade)], col, coeff);
        }
    }
    let mut out = Vec::new();
    for vector in matrix.null_space() {
        let mut poly = CliffordPolynomial::zero(ctx);
        for (c, basis_poly) in vector.iter().zip(&domain) {
            if !c.is_zero() {
                poly = poly.add(&basis_poly.scale(c));
            }
        }
        out.push(HomogeneousPolynomial::new(poly, degree)?);
    }
    Ok(out)
}
