//! Canonical textual form for polynomials, and a parser for the same form.
//!
//! Rendering lists terms highest-first in graded-lex order, with explicit
//! `^` powers, `*` between factors, and rational coefficients as `p/q`:
//! `3/2*u^2*v - u + 5`. The parser accepts exactly sums of such terms (a
//! coefficient and/or a product of powered variables per term), so rendered
//! output always round-trips.

use num::{One, Signed, Zero};

use super::{MultiPoly, Rat};
use crate::error::{Error, Result};
use crate::figurate::Int;

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in self.terms.iter().rev() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
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
            let factors: Vec<String> = mono
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rat),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let numerator: String = chars[start..i].iter().collect();
            // optional /denominator (a rational coefficient, not division)
            let mut j = i;
            while j < chars.len() && chars[j].is_whitespace() {
                j += 1;
            }
            let mut den = None;
            if j < chars.len() && chars[j] == '/' {
                let mut k = j + 1;
                while k < chars.len() && chars[k].is_whitespace() {
                    k += 1;
                }
                let dstart = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                if k > dstart {
                    den = Some(chars[dstart..k].iter().collect::<String>());
                    i = k;
                }
            }
            let n: Int = numerator
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{numerator}`")))?;
            let d: Int = match den {
                None => Int::one(),
                Some(ds) => {
                    let d: Int =
                        ds.parse().map_err(|_| Error::Parse(format!("bad integer `{ds}`")))?;
                    if d.is_zero() {
                        return Err(Error::Parse("zero denominator in coefficient".into()));
                    }
                    d
                }
            };
            tokens.push(Token::Number(Rat::new(n, d)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
            {
                i += 1;
            }
            tokens.push(Token::Ident(chars[start..i].iter().collect()));
        } else {
            match c {
                '+' => tokens.push(Token::Plus),
                '-' => tokens.push(Token::Minus),
                '*' => tokens.push(Token::Star),
                '^' => tokens.push(Token::Caret),
                _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
            }
            i += 1;
        }
    }
    Ok(tokens)
}

/// Parses the canonical polynomial form: a signed sum of terms, each a
/// product of an optional rational coefficient and powered variables.
pub fn parse(input: &str) -> Result<MultiPoly> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut acc = MultiPoly::zero();
    let mut pos = 0;
    while pos < tokens.len() {
        let mut sign = Rat::one();
        loop {
            match tokens.get(pos) {
                Some(Token::Plus) => {
                    pos += 1;
                }
                Some(Token::Minus) => {
                    sign = -sign;
                    pos += 1;
                }
                _ => break,
            }
        }
        // parse one term: factor ('*' factor)*
        let mut coeff = sign;
        let mut exps: Vec<(String, u32)> = Vec::new();
        let mut expect_factor = true;
        loop {
            match tokens.get(pos) {
                Some(Token::Number(r)) if expect_factor => {
                    coeff *= r;
                    pos += 1;
                    expect_factor = false;
                }
                Some(Token::Ident(name)) if expect_factor => {
                    pos += 1;
                    let mut exp = 1u32;
                    if let Some(Token::Caret) = tokens.get(pos) {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Token::Number(r)) if r.is_integer() && !r.is_negative() => {
                                exp = num::ToPrimitive::to_u32(&r.to_integer()).ok_or_else(
                                    || Error::Parse("exponent too large".into()),
                                )?;
                                pos += 1;
                            }
                            _ => return Err(Error::Parse("expected exponent after `^`".into())),
                        }
                    }
                    exps.push((name.clone(), exp));
                    expect_factor = false;
                }
                Some(Token::Star) if !expect_factor => {
                    pos += 1;
                    expect_factor = true;
                }
                Some(tok) if expect_factor => {
                    return Err(Error::Parse(format!("expected a factor, found {tok:?}")));
                }
                _ => break,
            }
        }
        if expect_factor {
            return Err(Error::Parse("dangling operator".into()));
        }
        acc = acc + MultiPoly::from_terms([(coeff, exps)]);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_canonical() {
        let q = parse("y*x + x^2 - 1/2 + 3*x").unwrap();
        assert_eq!(q.to_string(), "x^2 + x*y + 3*x - 1/2");
    }

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(parse("x - x").unwrap().to_string(), "0");
    }

    #[test]
    fn leading_minus_and_unit_coeffs() {
        let q = parse("-u^2 + u - 1").unwrap();
        assert_eq!(q.to_string(), "-u^2 + u - 1");
        assert_eq!(parse(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn rational_coefficients() {
        let q = parse("3/2*u^2*v - u + 5").unwrap();
        assert_eq!(q.to_string(), "3/2*u^2*v - u + 5");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("").is_err());
        assert!(parse("x +").is_err());
        assert!(parse("x ^ y").is_err());
        assert!(parse("(x+1)").is_err());
        assert!(parse("3/0*x").is_err());
    }

    #[test]
    fn repeated_variable_in_term() {
        assert_eq!(parse("x*x*x").unwrap(), parse("x^3").unwrap());
    }
}
