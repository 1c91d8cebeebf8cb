//! The expression text grammar used by the command-line tools and the
//! identity corpus files.
//!
//! Generators are written `Xp(i,n)`, `Xm(i,n)`, `K(i)`, `Kinv(i)`, `h(i,s)`,
//! `C2`, `C2inv`, `D`, `Dinv`; `qbr(a,b;u)` is the q-bracket `[a,b]_u` with
//! `u` in the scalar grammar; `*`, `+`, `-`, `/` combine subexpressions
//! (division only by pure scalars); integer and scalar literals such as `3`,
//! `q^-2`, `(q^2-1)` are scalars.  A parenthesized group is first tried as a
//! scalar literal and otherwise parsed as a subexpression, so canonical
//! scalar texts like `(3q^2/2)` embed directly.  Printing an element and
//! parsing it back is exact.
//!
//! Corpus files carry one identity per line as `LHS == RHS`; blank lines and
//! lines starting with `#` are skipped by the caller.

use crate::root::RootDatum;
use crate::scalar::parse_qscalar;

use super::{qbracket, AlgebraError, Element, Gen};

/// Parse an expression into a free-algebra element.
pub fn parse_element(rd: &RootDatum, text: &str) -> Result<Element, AlgebraError> {
    let mut p = Parser {
        rd,
        chars: text.chars().collect(),
        pos: 0,
        text,
    };
    let e = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err(&format!("unexpected input at offset {}", p.pos)));
    }
    Ok(e)
}

/// Parse a corpus line `LHS == RHS` into its two sides.
pub fn parse_identity_line(
    rd: &RootDatum,
    line: &str,
) -> Result<(Element, Element), AlgebraError> {
    let Some(split) = line.find("==") else {
        return Err(AlgebraError::Parse {
            text: line.to_string(),
            reason: "an identity line needs the form `LHS == RHS`".to_string(),
        });
    };
    let lhs = parse_element(rd, &line[..split])?;
    let rhs = parse_element(rd, &line[split + 2..])?;
    Ok((lhs, rhs))
}

struct Parser<'a> {
    rd: &'a RootDatum,
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: &str) -> AlgebraError {
        AlgebraError::Parse {
            text: self.text.to_string(),
            reason: reason.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: char) -> Result<(), AlgebraError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}' at offset {}", self.pos)))
        }
    }

    fn integer(&mut self) -> Result<i64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.err(&format!("expected an integer at offset {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>()
            .map_err(|_| self.err(&format!("integer out of range at offset {start}")))
    }

    /// expr := term (('+' | '-') term)*
    fn parse_expr(&mut self) -> Result<Element, AlgebraError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    /// term := factor (('*' | '/') factor)*
    fn parse_term(&mut self) -> Result<Element, AlgebraError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.parse_factor()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let divisor = self.parse_factor()?;
                    let c = divisor.as_scalar().ok_or(AlgebraError::BadDivision)?;
                    let inv = c.inv().map_err(|_| AlgebraError::BadDivision)?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    /// factor := '-' factor | primary
    fn parse_factor(&mut self) -> Result<Element, AlgebraError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.parse_factor()?.neg());
        }
        self.parse_primary()
    }

    fn parse_primary(&mut self) -> Result<Element, AlgebraError> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('(') => self.parse_group(),
            Some(c) if c.is_ascii_digit() => self.parse_scalar_atom(),
            Some(c) if c.is_ascii_alphabetic() => self.parse_name(),
            Some(c) => Err(self.err(&format!("unexpected character {c:?}"))),
        }
    }

    /// A parenthesized group: a scalar literal when its body is in the scalar
    /// grammar, a subexpression otherwise.
    fn parse_group(&mut self) -> Result<Element, AlgebraError> {
        self.expect('(')?;
        let body_start = self.pos;
        let mut depth = 1usize;
        while self.pos < self.chars.len() {
            match self.chars[self.pos] {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                _ => {}
            }
            self.pos += 1;
        }
        if depth != 0 {
            return Err(self.err("unbalanced parentheses"));
        }
        let body: String = self.chars[body_start..self.pos].iter().collect();
        self.pos += 1; // consume ')'
        if let Ok(c) = parse_qscalar(&body) {
            return Ok(Element::from_scalar(c));
        }
        let inner = parse_element(self.rd, &body)?;
        Ok(inner)
    }

    /// A scalar atom starting with a digit: `int`, `int q`, or `int q^int`.
    fn parse_scalar_atom(&mut self) -> Result<Element, AlgebraError> {
        let coeff = self.integer()?;
        let mut c = crate::scalar::QScalar::from_int(coeff);
        // A following bare `q` (not a name like `qbr`) is part of the atom.
        if self.chars.get(self.pos) == Some(&'q')
            && !self
                .chars
                .get(self.pos + 1)
                .is_some_and(|x| x.is_ascii_alphanumeric())
        {
            self.pos += 1;
            let e = self.parse_qpow_exponent()?;
            c = &c * &crate::scalar::QScalar::q_power(e);
        }
        Ok(Element::from_scalar(c))
    }

    fn parse_qpow_exponent(&mut self) -> Result<i64, AlgebraError> {
        if self.chars.get(self.pos) == Some(&'^') {
            self.pos += 1;
            self.integer()
        } else {
            Ok(1)
        }
    }

    fn parse_name(&mut self) -> Result<Element, AlgebraError> {
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric())
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match name.as_str() {
            "q" => {
                let e = self.parse_qpow_exponent()?;
                Ok(Element::from_scalar(crate::scalar::QScalar::q_power(e)))
            }
            "Xp" | "Xm" => {
                self.expect('(')?;
                let i = self.node_index()?;
                self.expect(',')?;
                let n = self.integer()?;
                self.expect(')')?;
                let g = if name == "Xp" {
                    Gen::xplus(i, n)
                } else {
                    Gen::xminus(i, n)
                };
                Ok(Element::from_gen(g))
            }
            "K" | "Kinv" => {
                self.expect('(')?;
                let i = self.node_index()?;
                self.expect(')')?;
                Ok(Element::from_gen(Gen::k(
                    i,
                    if name == "K" { 1 } else { -1 },
                )))
            }
            "h" => {
                self.expect('(')?;
                let i = self.node_index()?;
                self.expect(',')?;
                let s = self.integer()?;
                self.expect(')')?;
                if s == 0 {
                    return Err(self.err("h requires a nonzero loop degree"));
                }
                Ok(Element::from_gen(Gen::h(i, s)))
            }
            "C2" => Ok(Element::from_gen(Gen::c_half(1))),
            "C2inv" => Ok(Element::from_gen(Gen::c_half(-1))),
            "D" => Ok(Element::from_gen(Gen::d(1))),
            "Dinv" => Ok(Element::from_gen(Gen::d(-1))),
            "qbr" => self.parse_qbr(),
            other => Err(self.err(&format!("unknown name {other:?}"))),
        }
    }

    fn node_index(&mut self) -> Result<usize, AlgebraError> {
        let i = self.integer()?;
        if i < 1 || (i as usize) > self.rd.rank() {
            return Err(self.err(&format!(
                "node index {i} out of range 1..={}",
                self.rd.rank()
            )));
        }
        Ok(i as usize)
    }

    /// qbr := 'qbr' '(' expr ',' expr ';' scalar ')'
    fn parse_qbr(&mut self) -> Result<Element, AlgebraError> {
        self.expect('(')?;
        let a = self.parse_expr()?;
        self.expect(',')?;
        let b = self.parse_expr()?;
        self.expect(';')?;
        // The bracket scalar runs to the matching ')'.
        self.skip_ws();
        let start = self.pos;
        let mut depth = 1usize;
        while self.pos < self.chars.len() {
            match self.chars[self.pos] {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                _ => {}
            }
            self.pos += 1;
        }
        if depth != 0 {
            return Err(self.err("unbalanced parentheses in qbr"));
        }
        let scalar_text: String = self.chars[start..self.pos].iter().collect();
        self.pos += 1; // consume ')'
        let u = parse_qscalar(&scalar_text)?;
        qbracket(self.rd, &a, &b, &u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::composite_root_vector;
    use crate::scalar::QScalar;

    fn rd() -> RootDatum {
        RootDatum::new(2, 2).unwrap()
    }

    #[test]
    fn generators_parse() {
        let rd = rd();
        assert_eq!(
            parse_element(&rd, "Xp(1,-2)").unwrap(),
            Element::from_gen(Gen::xplus(1, -2))
        );
        assert_eq!(
            parse_element(&rd, "Xm(3,0)").unwrap(),
            Element::from_gen(Gen::xminus(3, 0))
        );
        assert_eq!(
            parse_element(&rd, "Kinv(2)").unwrap(),
            Element::from_gen(Gen::k(2, -1))
        );
        assert_eq!(
            parse_element(&rd, "h(1,-5)").unwrap(),
            Element::from_gen(Gen::h(1, -5))
        );
        assert_eq!(
            parse_element(&rd, "C2inv").unwrap(),
            Element::from_gen(Gen::c_half(-1))
        );
        assert_eq!(parse_element(&rd, "D").unwrap(), Element::from_gen(Gen::d(1)));
    }

    #[test]
    fn scalars_and_arithmetic() {
        let rd = rd();
        assert_eq!(
            parse_element(&rd, "3q^2*Xp(1,0)").unwrap(),
            Element::from_gen(Gen::xplus(1, 0)).scale(&(&QScalar::from_int(3) * &QScalar::q_power(2)))
        );
        assert_eq!(
            parse_element(&rd, "q^-1 * q * 7").unwrap(),
            Element::from_scalar(QScalar::from_int(7))
        );
        assert_eq!(
            parse_element(&rd, "1/2 * Xp(1,0) + 1/2 * Xp(1,0)").unwrap(),
            Element::from_gen(Gen::xplus(1, 0))
        );
        assert_eq!(
            parse_element(&rd, "(q^2-1)/(q-q^-1)").unwrap(),
            Element::from_scalar(parse_qscalar("q").unwrap())
        );
        assert_eq!(parse_element(&rd, "Xp(1,0) - Xp(1,0)").unwrap(), Element::zero());
        assert_eq!(
            parse_element(&rd, "-Xp(1,1)").unwrap(),
            Element::from_gen(Gen::xplus(1, 1)).neg()
        );
    }

    #[test]
    fn qbr_matches_the_library_bracket() {
        let rd = rd();
        let parsed = parse_element(&rd, "qbr(Xp(1,0), Xp(2,0); q)").unwrap();
        let built = composite_root_vector(&rd, 1, 2, 0).unwrap();
        assert_eq!(parsed, built);
        let nested = parse_element(&rd, "qbr(qbr(Xp(1,4), Xp(2,0); q), Xp(3,0); q^-1)").unwrap();
        assert_eq!(nested, composite_root_vector(&rd, 1, 3, 4).unwrap());
    }

    #[test]
    fn display_round_trips() {
        let rd = rd();
        let samples = [
            "0",
            "1",
            "Xp(1,0)",
            "qbr(Xp(1,0), Xp(2,0); q)",
            "(q^2-1)*K(1)*h(2,-1) + 3*Xm(3,2)",
            "qbr(Xp(2,0), Xp(2,1); 1) + (1/2)*C2*C2inv",
            "(-q)*D*Dinv + (3q^2/2)*Xp(1,-1)*Xm(1,1)",
        ];
        for s in samples {
            let e = parse_element(&rd, s).unwrap();
            let printed = e.to_string();
            let reparsed = parse_element(&rd, &printed)
                .unwrap_or_else(|err| panic!("reparse of {printed:?} failed: {err}"));
            assert_eq!(reparsed, e, "round trip through {printed:?}");
        }
    }

    #[test]
    fn identity_lines_split() {
        let rd = rd();
        let (lhs, rhs) = parse_identity_line(&rd, "Xp(1,0)*Xp(3,0) == Xp(3,0)*Xp(1,0)").unwrap();
        assert_eq!(lhs, Element::from_gens(&[Gen::xplus(1, 0), Gen::xplus(3, 0)]));
        assert_eq!(rhs, Element::from_gens(&[Gen::xplus(3, 0), Gen::xplus(1, 0)]));
        assert!(parse_identity_line(&rd, "Xp(1,0)").is_err());
    }

    #[test]
    fn malformed_input_is_rejected() {
        let rd = rd();
        for bad in [
            "",
            "Xp(1)",
            "Xp(0,0)",
            "Xp(4,0)",
            "h(1,0)",
            "K(1,2)",
            "qbr(Xp(1,0); q)",
            "qbr(Xp(1,0), Xp(2,0); 0)",
            "Xp(1,0) Xp(2,0)",
            "foo(1,0)",
            "(Xp(1,0)",
            "Xp(1,0)/Xp(2,0)",
            "Xp(1,0)/0",
            "qbr(Xp(1,0)+Xp(2,0), Xp(3,0); q)",
        ] {
            assert!(parse_element(&rd, bad).is_err(), "{bad:?} should fail");
        }
    }
}
