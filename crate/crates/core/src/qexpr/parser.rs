use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::{Factor, QExpression, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("invalid factor at byte {offset}: {reason}")]
    InvalidFactor { offset: usize, reason: &'static str },
    #[error("division at byte {offset} is not by a single monomial with coefficient 1 or -1")]
    NonMonomialDivisor { offset: usize },
}

impl ParseError {
    /// Byte offset of the offending token, for caret diagnostics.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::InvalidFactor { offset, .. }
            | ParseError::NonMonomialDivisor { offset } => *offset,
        }
    }

    /// The same error with its offset moved `by` bytes, for text embedded in a larger string.
    pub fn shifted(mut self, by: usize) -> Self {
        match &mut self {
            ParseError::Syntax { offset, .. }
            | ParseError::InvalidFactor { offset, .. }
            | ParseError::NonMonomialDivisor { offset } => *offset += by,
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Q,
    E,
    G,
    R,
    LParen,
    RParen,
    Comma,
    Caret,
    Plus,
    Minus,
    Star,
    Slash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Q => "'q'".into(),
            Tok::E => "'E'".into(),
            Tok::G => "'G'".into(),
            Tok::R => "'R'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Caret => "'^'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = text[start..i].parse::<BigInt>().expect("ascii digits");
            out.push((Tok::Int(n), start));
            continue;
        }
        let tok = match c {
            b'q' => Tok::Q,
            b'E' => Tok::E,
            b'G' => Tok::G,
            b'R' => Tok::R,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'^' => Tok::Caret,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    offset: i,
                    expected: vec!["a token"],
                    found: alloc::format!("{ch:?}"),
                });
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

/// Parses the expression grammar into a flat [`QExpression`].
pub fn parse(text: &str) -> Result<QExpression, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let terms = p.expr()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(QExpression { terms })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, t: Tok, what: &'static str) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(vec![what]))
        }
    }

    fn int(&mut self) -> Result<(BigInt, usize), ParseError> {
        let at = self.offset();
        match self.peek() {
            Tok::Int(_) => match self.bump() {
                Tok::Int(n) => Ok((n, at)),
                _ => unreachable!(),
            },
            _ => Err(self.error(vec!["integer"])),
        }
    }

    fn small(n: &BigInt, at: usize) -> Result<i64, ParseError> {
        n.to_i64().ok_or(ParseError::InvalidFactor {
            offset: at,
            reason: "integer out of range",
        })
    }

    fn positive_u32(&mut self, reason: &'static str) -> Result<(u32, usize), ParseError> {
        let (n, at) = self.int()?;
        match n.to_u32() {
            Some(v) if v >= 1 => Ok((v, at)),
            _ => Err(ParseError::InvalidFactor { offset: at, reason }),
        }
    }

    /// `['^' SINT]`
    fn signed_power(&mut self) -> Result<i64, ParseError> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let neg = self.eat(&Tok::Minus);
        let (n, at) = self.int().map_err(|_| self.error(vec!["integer", "'-'"]))?;
        let v = Self::small(&n, at)?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                terms.extend(self.term()?);
            } else if self.eat(&Tok::Minus) {
                terms.extend(self.term()?.into_iter().map(Term::negated));
            } else {
                return Ok(terms);
            }
        }
    }

    fn term(&mut self) -> Result<Vec<Term>, ParseError> {
        let neg = self.eat(&Tok::Minus);
        let mut acc = self.atom()?;
        loop {
            if self.eat(&Tok::Star) {
                let rhs = self.atom()?;
                acc = product(&acc, &rhs);
            } else if *self.peek() == Tok::Slash {
                let at = self.offset();
                self.bump();
                let rhs = self.atom()?;
                let inv = invert(rhs).ok_or(ParseError::NonMonomialDivisor { offset: at })?;
                acc = product(&acc, &[inv]);
            } else {
                break;
            }
        }
        if neg {
            acc = acc.into_iter().map(Term::negated).collect();
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Vec<Term>, ParseError> {
        if matches!(
            self.peek(),
            Tok::RParen
                | Tok::Comma
                | Tok::Caret
                | Tok::Plus
                | Tok::Minus
                | Tok::Star
                | Tok::Slash
                | Tok::Eof
        ) {
            return Err(self.error(vec!["integer", "'q'", "'E'", "'G'", "'R'", "'('"]));
        }
        match self.bump() {
            Tok::Int(n) => Ok(vec![Term::constant(n)]),
            Tok::Q => {
                let shift = if self.eat(&Tok::Caret) {
                    let (n, at) = self.int()?;
                    Self::small(&n, at)?
                } else {
                    1
                };
                Ok(vec![Term::new(1, shift, Vec::new())])
            }
            Tok::E => {
                let (base, _) = self.positive_u32("eta base must be a positive integer")?;
                let e = self.signed_power()?;
                Ok(vec![Term::new(1, 0, vec![Factor::eta(base, e)])])
            }
            Tok::G => {
                self.expect(Tok::LParen, "'('")?;
                let (a, a_at) = self.positive_u32("generalized eta residue must be positive")?;
                self.expect(Tok::Comma, "','")?;
                let (m, _) = self.positive_u32("generalized eta modulus must be positive")?;
                self.expect(Tok::RParen, "')'")?;
                if a > m {
                    return Err(ParseError::InvalidFactor {
                        offset: a_at,
                        reason: "generalized eta needs residue <= modulus",
                    });
                }
                let e = self.signed_power()?;
                Ok(vec![Term::new(1, 0, vec![Factor::gen_eta(a, m, e)])])
            }
            Tok::R => {
                self.expect(Tok::LParen, "'('")?;
                self.expect(Tok::Q, "'q'")?;
                self.expect(Tok::Caret, "'^'")?;
                let (k, _) = self.positive_u32("R argument power must be positive")?;
                self.expect(Tok::RParen, "')'")?;
                let e = self.signed_power()?;
                Ok(vec![Term::new(1, 0, vec![Factor::r(k, e)])])
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => unreachable!("checked above"),
        }
    }
}

fn product(a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.times(y));
        }
    }
    out
}

/// Inverse of a single monomial `±q^s * prod(factors)`.
fn invert(mut terms: Vec<Term>) -> Option<Term> {
    if terms.len() != 1 {
        return None;
    }
    let mut t = terms.pop()?;
    if !t.coeff.abs().is_one() {
        return None;
    }
    t.qshift = -t.qshift;
    for f in t.factors.iter_mut() {
        *f = f.with_exponent(-f.exponent());
    }
    Some(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramanujan_term() {
        let e = parse("5*E5^5/E1^6").unwrap();
        assert_eq!(
            e.terms,
            vec![Term::new(5, 0, vec![Factor::eta(5, 5), Factor::eta(1, -6)])]
        );
    }

    #[test]
    fn three_terms() {
        let e = parse("1/R(q^5) - q - q^2*R(q^5)").unwrap();
        assert_eq!(
            e.terms,
            vec![
                Term::new(1, 0, vec![Factor::r(5, -1)]),
                Term::new(-1, 1, vec![]),
                Term::new(-1, 2, vec![Factor::r(5, 1)]),
            ]
        );
    }

    #[test]
    fn gen_eta_atom() {
        let e = parse("G(2,5)").unwrap();
        assert_eq!(
            e.terms,
            vec![Term::new(1, 0, vec![Factor::gen_eta(2, 5, 1)])]
        );
        let e = parse(" G ( 1 , 5 ) ^ -3 ").unwrap();
        assert_eq!(e.terms[0].factors, vec![Factor::gen_eta(1, 5, -3)]);
    }

    #[test]
    fn parentheses_distribute() {
        let e = parse("E25^5/E5^6*(1/R(q^5)^4 + 5*q^4)").unwrap();
        assert_eq!(e.terms.len(), 2);
        assert_eq!(
            e.terms[1],
            Term::new(5, 4, vec![Factor::eta(25, 5), Factor::eta(5, -6)])
        );
        let e = parse("-(q - 2)").unwrap();
        assert_eq!(e.terms, vec![Term::new(-1, 1, vec![]), Term::constant(2)]);
    }

    #[test]
    fn division_by_monomial_group() {
        let e = parse("E1/(q*E25)").unwrap();
        assert_eq!(
            e.terms,
            vec![Term::new(
                1,
                -1,
                vec![Factor::eta(1, 1), Factor::eta(25, -1)]
            )]
        );
        let e = parse("E1/(-q)").unwrap();
        assert_eq!(e.terms[0].coeff, BigInt::from(-1));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = parse("5*E5^").unwrap_err();
        assert_eq!(err.offset(), 5);
        assert!(matches!(err, ParseError::Syntax { .. }));

        let err = parse("E1 + * E2").unwrap_err();
        assert_eq!(err.offset(), 5);
        match err {
            ParseError::Syntax {
                expected, found, ..
            } => {
                assert!(expected.contains(&"'E'"));
                assert_eq!(found, "'*'");
            }
            other => panic!("unexpected {other:?}"),
        }

        assert_eq!(parse("E1 )").unwrap_err().offset(), 3);
        assert_eq!(parse("E1 $").unwrap_err().offset(), 3);
        assert_eq!(parse("q^-1").unwrap_err().offset(), 2);
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(
            parse("E0").unwrap_err(),
            ParseError::InvalidFactor { offset: 1, .. }
        ));
        assert!(matches!(
            parse("G(6,5)").unwrap_err(),
            ParseError::InvalidFactor { offset: 2, .. }
        ));
        assert_eq!(
            parse("E1/(1+q)").unwrap_err(),
            ParseError::NonMonomialDivisor { offset: 2 }
        );
        assert_eq!(
            parse("E1/3").unwrap_err(),
            ParseError::NonMonomialDivisor { offset: 2 }
        );
    }

    #[test]
    fn big_coefficients_are_exact() {
        let e = parse("123456789012345678901234567890*q").unwrap();
        assert_eq!(
            e.terms[0].coeff,
            "123456789012345678901234567890".parse::<BigInt>().unwrap()
        );
    }
}
