//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := ['-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := base ('^' nonneg-integer)?
//! base    := identifier | rational-literal | '(' expr ')'
//! rational-literal := integer ('/' positive-integer)?
//! identifier := letter (letter | digit | '_')*
//! ```
//!
//! Whitespace is insignificant. Implicit multiplication (`2x`) is rejected.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::multi::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().unwrap()), start));
                continue;
            }
            l if l.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    ring: &'a MultiPoly,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    return Err(Error::BadExponent {
                        pos,
                        msg: "exponent must be an integer".into(),
                    });
                }
                let e = n.to_u32().ok_or_else(|| Error::BadExponent {
                    pos,
                    msg: format!("exponent {n} is too large"),
                })?;
                Ok(base.pow(e))
            }
            Tok::Minus => Err(Error::BadExponent {
                pos,
                msg: "exponent must be nonnegative".into(),
            }),
            t => Err(Error::BadExponent {
                pos,
                msg: format!("expected a nonnegative integer, found {}", describe(&t)),
            }),
        }
    }

    fn base(&mut self) -> Result<MultiPoly> {
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Ok(i) => Ok(self.ring.var_at(i)),
                Err(_) => Err(Error::UnknownIdentifier { name, pos }),
            },
            Tok::Int(n) => {
                let mut value = Rational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Int(d) if !d.is_zero() && !d.is_negative() => {
                            value /= Rational::from_integer(d);
                        }
                        Tok::Int(_) => {
                            return Err(Error::Syntax {
                                pos: dpos,
                                msg: "denominator must be positive".into(),
                            })
                        }
                        t => {
                            return Err(Error::Syntax {
                                pos: dpos,
                                msg: format!(
                                    "expected a positive integer denominator, found {}",
                                    describe(&t)
                                ),
                            })
                        }
                    }
                }
                if let Tok::Ident(_) | Tok::LParen = self.peek() {
                    return self.syntax("implicit multiplication is not allowed; use `*`");
                }
                Ok(self.ring.constant_like(value))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax(format!("expected `)`, found {}", describe(self.peek())));
                }
                self.bump();
                Ok(inner)
            }
            t => Err(Error::Syntax {
                pos,
                msg: format!("expected a variable, number or `(`, found {}", describe(&t)),
            }),
        }
    }
}

/// Parses `text` into a polynomial over the declared variables.
pub fn parse_expression<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<MultiPoly> {
    let ring = MultiPoly::zero(variables);
    let mut parser = Parser {
        toks: tokenize(text)?,
        at: 0,
        ring: &ring,
    };
    let out = parser.expr()?;
    if *parser.peek() != Tok::End {
        let t = parser.peek().clone();
        return parser.syntax(match t {
            Tok::Ident(_) | Tok::LParen => {
                "implicit multiplication is not allowed; use `*`".to_string()
            }
            t => format!("unexpected {}", describe(&t)),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{rat, ratio};

    const XZT: [&str; 3] = ["x", "z", "t"];

    #[test]
    fn example_family_equation() {
        let f = parse_expression("x*(z^2+x) - t*z^3", &XZT).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.coefficient(&[1, 2, 0]), rat(1));
        assert_eq!(f.coefficient(&[2, 0, 0]), rat(1));
        assert_eq!(f.coefficient(&[0, 3, 1]), rat(-1));
    }

    #[test]
    fn zero_and_identities() {
        assert!(parse_expression("0", &XZT).unwrap().is_zero());
        let z2 = parse_expression("(x+z)^2 - x^2 - 2*x*z", &XZT).unwrap();
        assert_eq!(z2, parse_expression("z^2", &XZT).unwrap());
    }

    #[test]
    fn literals_and_unary_minus() {
        let f = parse_expression("-3/6*x + (-z)", &XZT).unwrap();
        assert_eq!(f.coefficient(&[1, 0, 0]), ratio(-1, 2));
        assert_eq!(f.coefficient(&[0, 1, 0]), rat(-1));
        assert_eq!(
            parse_expression(" x ^ 2 ", &XZT)
                .unwrap()
                .coefficient(&[2, 0, 0]),
            rat(1)
        );
        assert_eq!(
            parse_expression("-x^2", &XZT)
                .unwrap()
                .coefficient(&[2, 0, 0]),
            rat(-1)
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_expression("2x", &XZT),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_expression("x + w", &XZT),
            Err(Error::UnknownIdentifier { pos: 4, .. })
        ));
        assert!(matches!(
            parse_expression("x^-1", &XZT),
            Err(Error::BadExponent { .. })
        ));
        assert!(matches!(
            parse_expression("x^1/2", &XZT),
            Err(Error::BadExponent { .. })
        ));
        assert!(matches!(
            parse_expression("x^z", &XZT),
            Err(Error::BadExponent { .. })
        ));
        assert!(matches!(
            parse_expression("x * -z", &XZT),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("x - - z", &XZT),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("(x + z", &XZT),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("1/0", &XZT),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("x/2", &XZT),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("", &XZT),
            Err(Error::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_expression("x $ z", &XZT),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_expression("x^2^3", &XZT),
            Err(Error::Syntax { .. })
        ));
    }
}
