//! Parser for the human-readable polynomial format.
//!
//! Grammar (whitespace-insensitive, juxtaposition is multiplication):
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor ([*] factor)*
//! factor := rational | name [^ uint]
//! ```

use num_traits::One;

use super::{parse_rational, MultiPoly, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Name(String),
    Caret,
    Star,
    Plus,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                // a fraction bar binds only digits on both sides
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Name(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

pub(super) fn parse_poly(s: &str, names: &[&str]) -> Result<MultiPoly> {
    let nvars = names.len();
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut result = MultiPoly::zero(nvars);
    let mut first = true;
    while pos < tokens.len() {
        let mut sign = Rational::one();
        match tokens[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(Error::Parse(format!("expected + or - at token {pos}"))),
        }
        first = false;
        let mut coeff = sign;
        let mut exps = vec![0u32; nvars];
        let mut factors = 0;
        loop {
            match tokens.get(pos) {
                Some(Token::Number(n)) => {
                    coeff *= parse_rational(n)?;
                    pos += 1;
                }
                Some(Token::Name(n)) => {
                    let idx = names
                        .iter()
                        .position(|v| v == n)
                        .ok_or_else(|| Error::Parse(format!("unknown variable {n:?}")))?;
                    pos += 1;
                    let mut e = 1u32;
                    if tokens.get(pos) == Some(&Token::Caret) {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Token::Number(k)) if !k.contains('/') => {
                                e = k.parse().map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
                                pos += 1;
                            }
                            _ => return Err(Error::Parse("expected exponent after ^".into())),
                        }
                    }
                    exps[idx] += e;
                }
                _ => return Err(Error::Parse(format!("expected a factor at token {pos}"))),
            }
            factors += 1;
            match tokens.get(pos) {
                Some(Token::Star) => pos += 1,
                Some(Token::Number(_)) | Some(Token::Name(_)) => {}
                _ => break,
            }
        }
        debug_assert!(factors > 0);
        result.add_term(super::Monomial(exps), coeff);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn accepts_loose_spellings() {
        let a = MultiPoly::parse("2*x1*x2 - x2^2 + 1/3", 2).unwrap();
        let b = MultiPoly::parse("2 * x1 x2 - x2^2 + 1/3", 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeff(&[0, 0]), ratio(1, 3));
        assert_eq!(a.coeff(&[1, 1]), rat(2));
    }

    #[test]
    fn collects_repeated_monomials() {
        let a = MultiPoly::parse("x1 + x1 - 2 * x1", 1).unwrap();
        assert!(a.is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(MultiPoly::parse("", 2).is_err());
        assert!(MultiPoly::parse("x3", 2).is_err());
        assert!(MultiPoly::parse("x1 ^", 2).is_err());
        assert!(MultiPoly::parse("x1 + + x2", 2).is_err());
        assert!(MultiPoly::parse("x1 $ x2", 2).is_err());
    }

    #[test]
    fn custom_names() {
        let p = MultiPoly::parse_with("a d - b c", &["a", "b", "c", "d"]).unwrap();
        assert_eq!(p.to_string_with(&["a", "b", "c", "d"]), "a d - b c");
    }
}
