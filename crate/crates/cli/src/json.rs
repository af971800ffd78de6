//! Stable JSON schemas for polynomials and command outputs.
//!
//! Clifford-valued polynomials:
//! `{"terms":[{"alpha":[3,0,0],"blade":"1","coeff":"-47/64"}, ...]}`
//! (`alpha` lists exponents for x0..xn, `blade` is the printed blade such
//! as `"e12"` or `"1"`, `coeff` is an exact rational string). A bare term
//! array is accepted on input as well.
//!
//! Complex q-polynomials:
//! `[{"xexp":2,"yexp":1,"re":"1/2","im":"-3"}, ...]`

use serde::{Deserialize, Serialize};

use qclifford_core::{
    parse_rational, CliffordElement, CliffordPolynomial, ComplexQPolynomial, MultiIndex, QContext,
};

use crate::parse::{parse_blade_str, ParseError};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub alpha: Vec<u32>,
    pub blade: String,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &CliffordPolynomial) -> Self {
        PolyJson {
            terms: p
                .triples()
                .into_iter()
                .map(|(alpha, blade, coeff)| TermJson {
                    alpha: alpha.0.clone(),
                    blade: blade.to_string(),
                    coeff: coeff.to_string(),
                })
                .collect(),
        }
    }

    pub fn into_poly(self, ctx: &QContext) -> Result<CliffordPolynomial, ParseError> {
        let mut out = CliffordPolynomial::zero(ctx);
        for term in self.terms {
            if term.alpha.len() != ctx.vars() {
                return Err(ParseError {
                    pos: 0,
                    msg: format!(
                        "alpha has {} entries, expected {} for n = {}",
                        term.alpha.len(),
                        ctx.vars(),
                        ctx.n()
                    ),
                });
            }
            let blade = if term.blade == "1" {
                qclifford_core::Blade::ONE
            } else if let Some(digits) = term.blade.strip_prefix('e') {
                parse_blade_str(digits, ctx.n(), 0)?
            } else {
                return Err(ParseError {
                    pos: 0,
                    msg: format!("invalid blade string {:?}", term.blade),
                });
            };
            let coeff = parse_rational(&term.coeff)
                .map_err(|e| ParseError { pos: 0, msg: e.to_string() })?;
            out = out.add(&CliffordPolynomial::monomial(
                ctx,
                MultiIndex(term.alpha),
                CliffordElement::from_term(blade, coeff),
            ));
        }
        Ok(out)
    }
}

/// Parses a JSON polynomial: either `{"terms":[...]}` or a bare term array.
pub fn poly_from_json(text: &str, ctx: &QContext) -> Result<CliffordPolynomial, ParseError> {
    let parsed: PolyJson = if text.trim_start().starts_with('[') {
        serde_json::from_str::<Vec<TermJson>>(text)
            .map(|terms| PolyJson { terms })
            .map_err(|e| ParseError { pos: 0, msg: e.to_string() })?
    } else {
        serde_json::from_str(text).map_err(|e| ParseError { pos: 0, msg: e.to_string() })?
    };
    parsed.into_poly(ctx)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexTermJson {
    pub xexp: u32,
    pub yexp: u32,
    pub re: String,
    pub im: String,
}

pub fn complex_to_json(p: &ComplexQPolynomial) -> Vec<ComplexTermJson> {
    p.terms()
        .map(|(&(a, b), (re, im))| ComplexTermJson {
            xexp: a,
            yexp: b,
            re: re.to_string(),
            im: im.to_string(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use qclifford_core::qcore::rat;

    #[test]
    fn poly_json_round_trip() {
        let ctx = QContext::new(rat(4, 3), 2).unwrap();
        let p = parse_poly("x0^3 - x0*x1^2 - 47/64*x0*x2^2 + 5*x1^2*x2*e12", &ctx).unwrap();
        let json = serde_json::to_string(&PolyJson::from_poly(&p)).unwrap();
        let back = poly_from_json(&json, &ctx).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn bare_array_accepted() {
        let ctx = QContext::new(rat(4, 3), 2).unwrap();
        let back =
            poly_from_json(r#"[{"alpha":[0,1,0],"blade":"e2","coeff":"-2/3"}]"#, &ctx).unwrap();
        assert_eq!(back, parse_poly("-2/3*x1*e2", &ctx).unwrap());
    }

    #[test]
    fn rejects_bad_arity_and_blade() {
        let ctx = QContext::new(rat(4, 3), 2).unwrap();
        assert!(poly_from_json(r#"[{"alpha":[1,0],"blade":"1","coeff":"1"}]"#, &ctx).is_err());
        assert!(poly_from_json(r#"[{"alpha":[1,0,0],"blade":"e9","coeff":"1"}]"#, &ctx).is_err());
    }
}
