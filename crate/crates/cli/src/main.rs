//! `qclifford`: exact q-Clifford analysis from the command line.
//!
//! Exit codes: 0 success / true verdict, 1 false verdict (residual is
//! printed), 2 usage or parse errors.

mod json;
mod parse;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::json;

use qclifford_core::{
    check_harmonic_full, check_monogenic_full, construct_conjugate, decompose_harmonic,
    decompose_monogenic, fischer_ip, kernel_basis, parse_rational, q_binomial_z, solve_q_poisson,
    ck_extend, CliffordPolynomial, Error as CoreError, HomogeneousPolynomial,
    KernelOperator, QContext, Rational, ValueSpace,
};

use json::{complex_to_json, poly_from_json, PolyJson};

#[derive(Parser)]
#[command(name = "qclifford", version, about = "Exact q-Clifford analysis on polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecompositionKind {
    /// P = H + |x|^2 Q with laplace_q(H) = 0
    Harmonic,
    /// P = M + x Q with dirac_q(M) = 0
    Monogenic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperatorArg {
    LaplaceQ,
    LaplaceFull,
    DiracQ,
    DiracFull,
}

impl From<OperatorArg> for KernelOperator {
    fn from(op: OperatorArg) -> Self {
        match op {
            OperatorArg::LaplaceQ => KernelOperator::LaplaceQ,
            OperatorArg::LaplaceFull => KernelOperator::LaplaceFull,
            OperatorArg::DiracQ => KernelOperator::DiracQ,
            OperatorArg::DiracFull => KernelOperator::DiracFull,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ValueSpaceArg {
    Scalar,
    Full,
}

#[derive(Args)]
struct PolyArgs {
    /// Deformation parameter, an exact rational such as 4/3
    #[arg(long)]
    q: String,
    /// Number of vector variables x1..xn (x0 is always present)
    #[arg(long)]
    n: usize,
    /// Polynomial: grammar expression, JSON, or @file with either
    #[arg(long)]
    poly: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Run all internal cross-checks on the result
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check that ((d^{1/q}_{x0})^2 + Laplace^q_x) P = 0 exactly
    CheckHarmonic(PolyArgs),
    /// Check that (e0 d^{1/q}_{x0} + Dirac^q_x) F = 0 exactly
    CheckMonogenic(PolyArgs),
    /// Construct the conjugate V_k, h_{k+1}, H_{k+1} and F = U_k + conj(e0) V_k
    Conjugate(PolyArgs),
    /// Fischer decomposition of an x-only homogeneous polynomial
    FischerDecompose {
        #[command(flatten)]
        args: PolyArgs,
        #[arg(long, value_enum, default_value = "harmonic")]
        kind: DecompositionKind,
    },
    /// Solve Laplace^q_x h = g exactly, h in |x|^2 P
    Poisson(PolyArgs),
    /// Exact kernel basis of an operator at a fixed homogeneity degree
    KernelBasis {
        #[arg(long)]
        q: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        operator: OperatorArg,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value = "full")]
        value_space: ValueSpaceArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        verify: bool,
    },
    /// Cauchy-Kovalevskaya extension of a real polynomial in x0
    CkExtend {
        #[arg(long)]
        q: String,
        /// Real polynomial in x0 only, e.g. "x0^3 + 2*x0"
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        verify: bool,
    },
    /// Expanded complex q-binomial z_q^k = (x+iy)(x+iqy)...(x+iq^{k-1}y)
    Qbinomial {
        #[arg(long)]
        q: String,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
}

impl From<parse::ParseError> for Failure {
    fn from(e: parse::ParseError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        // A non-harmonic input to the conjugate pipeline is a false
        // verdict, not a usage error.
        let code = if matches!(e, CoreError::NotHarmonic(_)) { 1 } else { 2 };
        Failure { code, msg: e.to_string() }
    }
}

fn parse_q(q: &str) -> Result<Rational, Failure> {
    parse_rational(q).map_err(|e| Failure::usage(e.to_string()))
}

fn context(q: &str, n: usize) -> Result<QContext, Failure> {
    QContext::new(parse_q(q)?, n).map_err(Failure::from)
}

/// Resolves `--poly`: `@file` indirection, then JSON (leading '{' or '[')
/// or the text grammar.
fn read_poly(spec: &str, ctx: &QContext) -> Result<CliffordPolynomial, Failure> {
    let text = if let Some(path) = spec.strip_prefix('@') {
        fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?
    } else {
        spec.to_string()
    };
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(poly_from_json(&text, ctx)?)
    } else {
        Ok(parse::parse_poly(&text, ctx)?)
    }
}

fn homogeneous(p: CliffordPolynomial) -> Result<HomogeneousPolynomial, Failure> {
    let degree = p.degree().unwrap_or(0);
    HomogeneousPolynomial::new(p, degree)
        .map_err(|_| Failure::usage("polynomial must be homogeneous"))
}

fn emit(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> serde_json::Value) {
    match format {
        Format::Text => println!("{}", text()),
        Format::Json => println!("{}", value()),
    }
}

fn internal_check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure { code: 2, msg: format!("internal cross-check failed: {what}") })
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::CheckHarmonic(args) => {
            let ctx = context(&args.q, args.n)?;
            let p = read_poly(&args.poly, &ctx)?;
            let check = check_harmonic_full(&p);
            let ok = check.is_harmonic();
            emit(
                args.format,
                || {
                    if ok {
                        "harmonic: true".to_string()
                    } else {
                        format!("harmonic: false\nresidual = {}", check.residual)
                    }
                },
                || {
                    json!({
                        "harmonic": ok,
                        "residual": PolyJson::from_poly(&check.residual),
                    })
                },
            );
            Ok(u8::from(!ok))
        }
        Command::CheckMonogenic(args) => {
            let ctx = context(&args.q, args.n)?;
            let p = read_poly(&args.poly, &ctx)?;
            let check = check_monogenic_full(&p);
            let ok = check.is_monogenic();
            if args.verify {
                internal_check(
                    ok == (check.system_eq1.is_zero() && check.system_eq2.is_zero()),
                    "Dirac residual vs split system",
                )?;
            }
            emit(
                args.format,
                || {
                    if ok {
                        "monogenic: true".to_string()
                    } else {
                        format!(
                            "monogenic: false\nresidual = {}\nsystem eq1 = {}\nsystem eq2 = {}",
                            check.residual, check.system_eq1, check.system_eq2
                        )
                    }
                },
                || {
                    json!({
                        "monogenic": ok,
                        "residual": PolyJson::from_poly(&check.residual),
                        "system_eq1": PolyJson::from_poly(&check.system_eq1),
                        "system_eq2": PolyJson::from_poly(&check.system_eq2),
                    })
                },
            );
            Ok(u8::from(!ok))
        }
        Command::Conjugate(args) => {
            let ctx = context(&args.q, args.n)?;
            let u_k = homogeneous(read_poly(&args.poly, &ctx)?)?;
            let result = construct_conjugate(&u_k)?;
            let verdict = check_monogenic_full(&result.f);
            let ok = verdict.is_monogenic();
            if args.verify {
                internal_check(
                    check_harmonic_full(result.h_potential.poly()).is_harmonic(),
                    "H_{k+1} (1/q,q)-harmonic",
                )?;
                internal_check(
                    *result.v_k.poly() == result.h_potential.poly().dirac_q().neg(),
                    "V_k = -dirac_q(H_{k+1})",
                )?;
                let e0_bar = qclifford_core::CliffordElement::unit(0).neg();
                internal_check(
                    result.h_potential.poly().left_mul(&e0_bar).dirac_full() == result.f,
                    "F = dirac_full(conj(e0) H_{k+1})",
                )?;
            }
            emit(
                args.format,
                || {
                    format!(
                        "V_k = {}\nW = {}\nh_{{k+1}} = {}\nH_{{k+1}} = {}\nF = {}\nmonogenic: {ok}",
                        result.v_k.poly(),
                        result.w.poly(),
                        result.h_poisson.poly(),
                        result.h_potential.poly(),
                        result.f
                    )
                },
                || {
                    json!({
                        "v_k": PolyJson::from_poly(result.v_k.poly()),
                        "w": PolyJson::from_poly(result.w.poly()),
                        "h_poisson": PolyJson::from_poly(result.h_poisson.poly()),
                        "h_potential": PolyJson::from_poly(result.h_potential.poly()),
                        "f": PolyJson::from_poly(&result.f),
                        "monogenic": ok,
                    })
                },
            );
            Ok(u8::from(!ok))
        }
        Command::FischerDecompose { args, kind } => {
            let ctx = context(&args.q, args.n)?;
            let p = homogeneous(read_poly(&args.poly, &ctx)?)?;
            let (label, first, second) = match kind {
                DecompositionKind::Harmonic => {
                    let (h, q) = decompose_harmonic(&p)?;
                    if args.verify {
                        let r2 = CliffordPolynomial::radius_sq(&ctx);
                        internal_check(
                            h.poly().add(&r2.mul_poly(q.poly())) == *p.poly(),
                            "reassembly P = H + |x|^2 Q",
                        )?;
                        internal_check(h.poly().laplace_q().is_zero(), "laplace_q(H) = 0")?;
                        if !h.is_zero() && !q.is_zero() {
                            let r2q = HomogeneousPolynomial::new(
                                r2.mul_poly(q.poly()),
                                p.degree(),
                            )?;
                            internal_check(
                                fischer_ip(&h, &r2q)?.is_zero(),
                                "orthogonality <H, |x|^2 Q> = 0",
                            )?;
                        }
                    }
                    ("harmonic_part", h, q)
                }
                DecompositionKind::Monogenic => {
                    let (m, q) = decompose_monogenic(&p)?;
                    if args.verify {
                        let x = CliffordPolynomial::vector_x(&ctx);
                        internal_check(
                            m.poly().add(&x.mul_poly(q.poly())) == *p.poly(),
                            "reassembly P = M + x Q",
                        )?;
                        internal_check(m.poly().dirac_q().is_zero(), "dirac_q(M) = 0")?;
                        if !m.is_zero() && !q.is_zero() {
                            let xq =
                                HomogeneousPolynomial::new(x.mul_poly(q.poly()), p.degree())?;
                            internal_check(
                                fischer_ip(&m, &xq)?.is_zero(),
                                "orthogonality <M, x Q> = 0",
                            )?;
                        }
                    }
                    ("monogenic_part", m, q)
                }
            };
            emit(
                args.format,
                || format!("{label} = {}\ncofactor = {}", first.poly(), second.poly()),
                || {
                    json!({
                        label: PolyJson::from_poly(first.poly()),
                        "cofactor": PolyJson::from_poly(second.poly()),
                    })
                },
            );
            Ok(0)
        }
        Command::Poisson(args) => {
            let ctx = context(&args.q, args.n)?;
            let g = homogeneous(read_poly(&args.poly, &ctx)?)?;
            let h = solve_q_poisson(&g)?;
            if args.verify {
                internal_check(h.poly().laplace_q() == *g.poly(), "laplace_q(h) = g")?;
                internal_check(
                    qclifford_core::radius_sq_quotient(&h).is_ok(),
                    "h in |x|^2 P",
                )?;
            }
            emit(
                args.format,
                || format!("h = {}", h.poly()),
                || json!({ "h": PolyJson::from_poly(h.poly()) }),
            );
            Ok(0)
        }
        Command::KernelBasis { q, n, operator, degree, value_space, format, verify } => {
            let ctx = context(&q, n)?;
            let op = KernelOperator::from(operator);
            let space = match value_space {
                ValueSpaceArg::Scalar => ValueSpace::Scalar,
                ValueSpaceArg::Full => ValueSpace::Full,
            };
            let basis = kernel_basis(op, degree, space, &ctx)?;
            if verify {
                for element in &basis {
                    internal_check(op.apply(element.poly()).is_zero(), "operator kills basis")?;
                }
            }
            emit(
                format,
                || {
                    basis
                        .iter()
                        .map(|p| p.poly().to_string())
                        .collect::<Vec<_>>()
                        .join("\n")
                },
                || {
                    json!({
                        "basis": basis
                            .iter()
                            .map(|p| PolyJson::from_poly(p.poly()))
                            .collect::<Vec<_>>(),
                    })
                },
            );
            Ok(0)
        }
        Command::CkExtend { q, poly, format, verify } => {
            let q = parse_q(&q)?;
            let ctx = QContext::new(q.clone(), 1).map_err(Failure::from)?;
            let p = read_poly(&poly, &ctx)?;
            let degree = p.degree().unwrap_or(0) as usize;
            let mut coeffs = vec![Rational::from_integer(0.into()); degree + 1];
            for (alpha, blade, coeff) in p.triples() {
                if blade != qclifford_core::Blade::ONE || alpha.get(1) != 0 {
                    return Err(Failure::usage(
                        "ck-extend input must be a real polynomial in x0 only",
                    ));
                }
                coeffs[alpha.get(0) as usize] = coeff;
            }
            let extended = ck_extend(&coeffs, &q);
            if verify {
                internal_check(
                    qclifford_core::dbar_q(&extended).is_zero(),
                    "dbar_q annihilates the extension",
                )?;
            }
            emit(
                format,
                || extended.to_string(),
                || serde_json::to_value(complex_to_json(&extended)).unwrap(),
            );
            Ok(0)
        }
        Command::Qbinomial { q, k, format } => {
            let q = parse_q(&q)?;
            if !num_traits::Signed::is_positive(&q) {
                return Err(Failure::usage(format!("q must be > 0, got {q}")));
            }
            let z = q_binomial_z(k, &q);
            emit(
                format,
                || z.to_string(),
                || serde_json::to_value(complex_to_json(&z)).unwrap(),
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.msg);
            ExitCode::from(failure.code)
        }
    }
}
