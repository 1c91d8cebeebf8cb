//! Bit-exact text grammar for scalars.
//!
//! ```text
//! scalar := part [ '/' part ]          -- split at the first top-level '/'
//! part   := '(' sum ')' | sum
//! sum    := ['-'] term (('+'|'-') term)*
//! term   := INT | INT qpow | qpow      -- integer coefficients
//! qpow   := 'q' [ '^' ['-'] INT ]
//! ```
//!
//! Printing a canonical [`QScalar`] and parsing the result returns a
//! structurally identical value; whitespace is ignored on input.

use std::str::FromStr;

use super::laurent::{q_from_i64, LaurentPoly};
use super::qscalar::{QScalar, ScalarError};

fn err(text: &str, reason: impl Into<String>) -> ScalarError {
    ScalarError::Parse {
        text: text.to_string(),
        reason: reason.into(),
    }
}

/// Split at the first '/' that is not inside parentheses.
fn split_top_level_slash(s: &str) -> (&str, Option<&str>) {
    let mut depth = 0usize;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '/' if depth == 0 => return (&s[..idx], Some(&s[idx + 1..])),
            _ => {}
        }
    }
    (s, None)
}

/// Strip one pair of outer parentheses if they wrap the entire slice.
fn strip_outer_parens(s: &str) -> Result<&str, String> {
    let t = s.trim();
    if !t.starts_with('(') {
        return Ok(t);
    }
    let mut depth = 0usize;
    for (idx, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    if idx == t.len() - 1 {
                        return Ok(t[1..idx].trim());
                    }
                    return Err("unexpected text after closing parenthesis".into());
                }
            }
            _ => {}
        }
    }
    Err("unbalanced parentheses".into())
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            chars: s.chars().peekable(),
        }
    }
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }
    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.next()
    }
    fn integer(&mut self) -> Result<i64, String> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap());
        }
        if digits.is_empty() {
            return Err("expected an integer".into());
        }
        digits.parse::<i64>().map_err(|e| e.to_string())
    }
}

/// Parse one sum of integer-coefficient Laurent monomials.
fn parse_sum(s: &str) -> Result<LaurentPoly, String> {
    let mut cur = Cursor::new(s);
    let mut poly = LaurentPoly::zero();
    let mut first = true;
    loop {
        // sign / separator
        let sign = match cur.peek() {
            None if first => return Err("empty polynomial".into()),
            None => break,
            Some('+') => {
                cur.bump();
                1i64
            }
            Some('-') => {
                cur.bump();
                -1i64
            }
            Some(_) if first => 1i64,
            Some(c) => return Err(format!("expected '+' or '-', found '{c}'")),
        };
        first = false;
        // coefficient and/or q-power
        let coeff = match cur.peek() {
            Some(c) if c.is_ascii_digit() => cur.integer()?,
            Some('q') => 1,
            Some(c) => return Err(format!("expected a term, found '{c}'")),
            None => return Err("dangling sign".into()),
        };
        let exp = if cur.peek() == Some('q') {
            cur.bump();
            if cur.peek() == Some('^') {
                cur.bump();
                let neg = if cur.peek() == Some('-') {
                    cur.bump();
                    true
                } else {
                    false
                };
                let v = cur.integer()?;
                if neg {
                    -v
                } else {
                    v
                }
            } else {
                1
            }
        } else {
            0
        };
        poly.add_term(exp, &q_from_i64(sign * coeff));
    }
    Ok(poly)
}

fn parse_part(original: &str, s: &str) -> Result<LaurentPoly, ScalarError> {
    let inner = strip_outer_parens(s).map_err(|r| err(original, r))?;
    if inner.is_empty() {
        return Err(err(original, "empty part"));
    }
    parse_sum(inner).map_err(|r| err(original, r))
}

/// Parse the scalar grammar.
pub fn parse_qscalar(text: &str) -> Result<QScalar, ScalarError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(err(text, "empty input"));
    }
    let (num_s, den_s) = split_top_level_slash(t);
    let num = parse_part(text, num_s)?;
    match den_s {
        None => Ok(QScalar::from_poly(num)),
        Some(d) => {
            let den = parse_part(text, d)?;
            if den.is_zero() {
                return Err(err(text, "zero denominator"));
            }
            QScalar::new(num, den)
        }
    }
}

impl FromStr for QScalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_qscalar(s)
    }
}

impl<'de> serde::Deserialize<'de> for QScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_qscalar(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_round_trip() {
        for text in [
            "0",
            "1",
            "-1",
            "q",
            "-q",
            "q^2",
            "q^-3",
            "2q^3",
            "q^2-1",
            "q+q^-1",
            "q^-1/2",
            "(q^2-1)/(q+q^-1)",
            "7/3",
            "-3q^4+q",
            "(q^4+2q^2+1)/(q^3+q)",
        ] {
            let v: QScalar = text.parse().unwrap_or_else(|e| panic!("parse {text}: {e}"));
            let printed = v.to_string();
            let reparsed: QScalar = printed.parse().unwrap();
            assert_eq!(v, reparsed, "round trip through `{printed}` from `{text}`");
            // printing is canonical, so a second print is identical
            assert_eq!(printed, reparsed.to_string());
        }
    }

    #[test]
    fn canonical_text_is_stable() {
        let v: QScalar = "(q^2-1)/(q+q^-1)".parse().unwrap();
        assert_eq!(v.to_string(), "(q^3-q)/(q^2+1)");
        let w: QScalar = "(q^3-q)/(q^2+1)".parse().unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in ["", "q^", "q^^2", "(q", "q)", "1//2", "/2", "q+", "++q", "x"] {
            assert!(bad.parse::<QScalar>().is_err(), "should reject `{bad}`");
        }
    }

    #[test]
    fn whitespace_is_ignored() {
        let a: QScalar = " ( q^2 - 1 ) / ( q + q^-1 ) ".parse().unwrap();
        let b: QScalar = "(q^2-1)/(q+q^-1)".parse().unwrap();
        assert_eq!(a, b);
    }
}
