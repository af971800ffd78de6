//! Text-format polynomial parser.
//!
//! Grammar (whitespace-insensitive):
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coeff? ('*'? factor)*
//! factor := var '^' int | var | blade
//! var    := 'x' digit+
//! blade  := 'e' digit+        (single ascending digits, e.g. e12 = e1e2)
//! coeff  := int ('/' int)?
//! ```
//! The parser is the exact inverse of the library `Display` printer on
//! canonical forms.

use std::fmt;

use num_traits::{One, Zero};
use qclifford_core::{
    blade_mul, Blade, CliffordElement, CliffordPolynomial, MultiIndex, QContext, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending character.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
        }
    }

    fn integer(&mut self) -> Result<Rational, ParseError> {
        match self.digits() {
            Some(d) => d
                .parse::<num_bigint::BigInt>()
                .map(Rational::from_integer)
                .map_err(|e| ParseError { pos: self.pos, msg: e.to_string() }),
            None => self.err("expected integer"),
        }
    }
}

/// Parses a blade token body (the digits after `e`) into a `Blade`,
/// enforcing ascending single-digit generator indices within range.
pub fn parse_blade_str(digits: &str, n: usize, pos: usize) -> Result<Blade, ParseError> {
    let mut indices = Vec::new();
    let mut last: Option<usize> = None;
    for (off, c) in digits.char_indices() {
        let i = match c.to_digit(10) {
            Some(d) => d as usize,
            None => {
                return Err(ParseError {
                    pos: pos + off,
                    msg: format!("invalid blade digit '{c}'"),
                })
            }
        };
        if let Some(prev) = last {
            if i <= prev {
                return Err(ParseError {
                    pos: pos + off,
                    msg: format!("blade digits must be strictly ascending, got e{digits}"),
                });
            }
        }
        if i > n {
            return Err(ParseError {
                pos: pos + off,
                msg: format!("blade generator e{i} out of range for n = {n}"),
            });
        }
        last = Some(i);
        indices.push(i);
    }
    Ok(Blade::from_indices(&indices))
}

fn parse_term(
    sc: &mut Scanner,
    ctx: &QContext,
    sign: i32,
) -> Result<(MultiIndex, CliffordElement), ParseError> {
    sc.skip_ws();
    let mut coeff = Rational::one();
    let mut saw_anything = false;
    if sc.peek().map_or(false, |c| c.is_ascii_digit()) {
        coeff = sc.integer()?;
        if sc.eat(b'/') {
            let den = sc.integer()?;
            if den.is_zero() {
                return sc.err("zero denominator");
            }
            coeff /= den;
        }
        saw_anything = true;
    }
    let mut exps = vec![0u32; ctx.vars()];
    let mut blade = Blade::ONE;
    let mut blade_sign = 1i32;
    loop {
        sc.skip_ws();
        let after_star = sc.eat(b'*');
        if after_star {
            sc.skip_ws();
        }
        match sc.peek() {
            Some(b'x') => {
                sc.pos += 1;
                let var_pos = sc.pos;
                let idx: usize = match sc.digits() {
                    Some(d) => d.parse().map_err(|_| ParseError {
                        pos: var_pos,
                        msg: "variable index too large".into(),
                    })?,
                    None => return sc.err("expected variable index after 'x'"),
                };
                if idx >= ctx.vars() {
                    return Err(ParseError {
                        pos: var_pos,
                        msg: format!("variable x{idx} out of range for n = {}", ctx.n()),
                    });
                }
                sc.skip_ws();
                let exp = if sc.eat(b'^') {
                    sc.skip_ws();
                    match sc.digits() {
                        Some(d) => d.parse::<u32>().map_err(|_| ParseError {
                            pos: sc.pos,
                            msg: "exponent too large".into(),
                        })?,
                        None => return sc.err("expected exponent after '^'"),
                    }
                } else {
                    1
                };
                exps[idx] += exp;
                saw_anything = true;
            }
            Some(b'e') => {
                sc.pos += 1;
                let blade_pos = sc.pos;
                let digits = match sc.digits() {
                    Some(d) => d,
                    None => return sc.err("expected generator digits after 'e'"),
                };
                let b = parse_blade_str(digits, ctx.n(), blade_pos)?;
                let (s, prod) = blade_mul(blade, b);
                blade = prod;
                blade_sign *= s;
                saw_anything = true;
            }
            _ => {
                if after_star {
                    return sc.err("expected factor after '*'");
                }
                break;
            }
        }
    }
    if !saw_anything {
        return sc.err("expected term");
    }
    let total = coeff * Rational::from_integer((sign * blade_sign).into());
    Ok((MultiIndex(exps), CliffordElement::from_term(blade, total)))
}

/// Parses a polynomial in the text grammar against the given context.
pub fn parse_poly(text: &str, ctx: &QContext) -> Result<CliffordPolynomial, ParseError> {
    let mut sc = Scanner::new(text);
    let mut out = CliffordPolynomial::zero(ctx);
    sc.skip_ws();
    if sc.peek().is_none() {
        return sc.err("empty polynomial");
    }
    let mut sign = if sc.eat(b'-') {
        -1
    } else {
        sc.eat(b'+');
        1
    };
    loop {
        let (alpha, coeff) = parse_term(&mut sc, ctx, sign)?;
        out = out.add(&CliffordPolynomial::monomial(ctx, alpha, coeff));
        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some(b'+') => {
                sc.pos += 1;
                sign = 1;
            }
            Some(b'-') => {
                sc.pos += 1;
                sign = -1;
            }
            Some(c) => return sc.err(format!("expected '+' or '-', got '{}'", c as char)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qclifford_core::qcore::rat;

    fn ctx() -> QContext {
        QContext::new(rat(4, 3), 2).unwrap()
    }

    #[test]
    fn parses_paper_example() {
        let c = ctx();
        let p = parse_poly("x0^3 - x0*x1^2 - 47/64*x0*x2^2", &c).unwrap();
        assert_eq!(p.to_string(), "x0^3 - x0*x1^2 - 47/64*x0*x2^2");
        assert!(p.is_homogeneous_of(3));
    }

    #[test]
    fn parses_constant_and_blade() {
        let c = ctx();
        assert_eq!(parse_poly("1", &c).unwrap().to_string(), "1");
        let p = parse_poly("3/4 * x1 * e12", &c).unwrap();
        assert_eq!(p.to_string(), "3/4*x1*e12");
    }

    #[test]
    fn blade_products_contract() {
        let c = ctx();
        // e1*e1 = -1, e2*e1 = -e12
        assert_eq!(parse_poly("e1*e1", &c).unwrap().to_string(), "-1");
        assert_eq!(parse_poly("e2*e1", &c).unwrap().to_string(), "-e12");
    }

    #[test]
    fn whitespace_insensitive() {
        let c = ctx();
        let a = parse_poly("x0^2+2*x1*x2", &c).unwrap();
        let b = parse_poly("  x0 ^ 2 + 2 x1 x2 ", &c).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_input() {
        let c = ctx();
        assert!(parse_poly("", &c).is_err());
        assert!(parse_poly("x3", &c).is_err()); // out of range for n = 2
        assert!(parse_poly("e21", &c).is_err()); // non-ascending
        assert!(parse_poly("e3", &c).is_err()); // generator out of range
        assert!(parse_poly("1/0", &c).is_err());
        assert!(parse_poly("x1 +", &c).is_err());
        assert!(parse_poly("2*", &c).is_err());
        assert!(parse_poly("x1 x2 $", &c).is_err());
    }

    #[test]
    fn error_position_points_at_offender() {
        let c = ctx();
        let e = parse_poly("x1 + x9", &c).unwrap_err();
        assert_eq!(e.pos, 6);
    }

    #[test]
    fn display_round_trip() {
        let c = ctx();
        for text in [
            "x0^3 - x0*x1^2 - 47/64*x0*x2^2",
            "-x1 + 5/7*x2^4*e02 - e012",
            "1",
            "-3/2",
            "x1*x2*e1 + x1*x2*e2",
        ] {
            let p = parse_poly(text, &c).unwrap();
            let reparsed = parse_poly(&p.to_string(), &c).unwrap();
            assert_eq!(p, reparsed);
        }
    }
}
