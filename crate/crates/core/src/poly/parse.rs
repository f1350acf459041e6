//! Parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := ident ('^' uint)?
//! coeff  := uint | uint '/' uint
//! ```
//!
//! Powers always need a caret: `x^2` is a power, `x2` is the variable named `x2`.
//! Syntax is checked before names are resolved, so malformed input reports a
//! syntax error even when it also mentions unknown variables.

use num_traits::{One, Zero};

use super::{Monomial, PolyError, Polynomial, Ring};
use crate::exact::{BigInt, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Uint(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            pos: Pos { line: 1, column: 1 },
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Pos)>, PolyError> {
        let mut out = Vec::new();
        loop {
            while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                self.bump();
            }
            let start = self.pos;
            let Some(&c) = self.chars.peek() else {
                out.push((Tok::End, start));
                return Ok(out);
            };
            let tok = if c.is_ascii_alphabetic() {
                let mut name = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(name)
            } else if c.is_ascii_digit() {
                let mut digits = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Uint(digits.parse().expect("ascii digits"))
            } else {
                self.bump();
                match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    other => return Err(syntax(start, format!("unexpected character `{other}`"))),
                }
            };
            out.push((tok, start));
        }
    }
}

fn syntax(pos: Pos, message: impl Into<String>) -> PolyError {
    PolyError::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

struct Factor {
    name: String,
    exponent: u32,
    pos: Pos,
}

struct Term {
    coeff: Rational,
    factors: Vec<Factor>,
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].1
    }

    fn advance(&mut self) -> Tok {
        let t = self.tokens[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Vec<Term>, PolyError> {
        let mut terms = Vec::new();
        let negative = if *self.peek() == Tok::Minus {
            self.advance();
            true
        } else {
            false
        };
        let mut t = self.term()?;
        if negative {
            t.coeff = -t.coeff;
        }
        terms.push(t);
        loop {
            let negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                Tok::End => return Ok(terms),
                _ => return Err(syntax(self.pos(), "expected `+`, `-`, or end of input")),
            };
            self.advance();
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
        }
    }

    fn term(&mut self) -> Result<Term, PolyError> {
        let mut factors = Vec::new();
        let coeff = match self.peek().clone() {
            Tok::Uint(n) => {
                self.advance();
                if *self.peek() == Tok::Slash {
                    self.advance();
                    let pos = self.pos();
                    match self.advance() {
                        Tok::Uint(d) if !d.is_zero() => Rational::new(n, d),
                        Tok::Uint(_) => return Err(syntax(pos, "zero denominator")),
                        _ => return Err(syntax(pos, "expected denominator")),
                    }
                } else {
                    Rational::from_integer(n)
                }
            }
            Tok::Ident(_) => {
                factors.push(self.factor()?);
                Rational::one()
            }
            _ => return Err(syntax(self.pos(), "expected coefficient or variable")),
        };
        while *self.peek() == Tok::Star {
            self.advance();
            factors.push(self.factor()?);
        }
        Ok(Term { coeff, factors })
    }

    fn factor(&mut self) -> Result<Factor, PolyError> {
        let pos = self.pos();
        let Tok::Ident(name) = self.advance() else {
            return Err(syntax(pos, "expected variable"));
        };
        let mut exponent = 1;
        if *self.peek() == Tok::Caret {
            self.advance();
            let epos = self.pos();
            match self.advance() {
                Tok::Uint(e) => {
                    exponent = u32::try_from(e).map_err(|_| syntax(epos, "exponent too large"))?;
                }
                _ => return Err(syntax(epos, "expected exponent")),
            }
        }
        Ok(Factor {
            name,
            exponent,
            pos,
        })
    }
}

/// Parses `text` as a polynomial in the variables of `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let tokens = Lexer::new(text).tokens()?;
    let mut parser = Parser { tokens, at: 0 };
    let terms = parser.expr()?;
    let nvars = ring.nvars();
    let mut resolved = Vec::with_capacity(terms.len());
    for t in terms {
        let mut e = vec![0u32; nvars];
        for f in t.factors {
            let i = ring.index_of(&f.name).ok_or(PolyError::UnknownVariable {
                name: f.name,
                line: f.pos.line,
                column: f.pos.column,
            })?;
            e[i] += f.exponent;
        }
        resolved.push((Monomial::new(e), t.coeff));
    }
    Ok(Polynomial::from_terms(nvars, resolved))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caret_free_powers_are_rejected() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let err = parse_polynomial("x5+10x4y-2x4z", &r).unwrap_err();
        assert!(matches!(err, PolyError::Syntax { line: 1, column: 6, .. }), "{err:?}");
    }

    #[test]
    fn cubic() {
        let r = Ring::new(["x", "y"]).unwrap();
        let p = parse_polynomial("x^3+y^3+1", &r).unwrap();
        let mut exps: Vec<Vec<u32>> = p.terms().map(|(m, _)| m.exponents().to_vec()).collect();
        exps.sort();
        assert_eq!(exps, vec![vec![0, 0], vec![0, 3], vec![3, 0]]);
    }

    #[test]
    fn plucker_relation() {
        let names = ["p12", "p13", "p14", "p15", "p23", "p24", "p25", "p34", "p35", "p45"];
        let r = Ring::new(names).unwrap();
        let p = parse_polynomial("p12*p34 - p13*p24 + p14*p23", &r).unwrap();
        assert_eq!(p.len(), 3);
        for (_, c) in p.terms() {
            assert!(c.is_one() || (-c).is_one());
        }
    }

    #[test]
    fn rational_coefficients_and_whitespace() {
        let r = Ring::new(["x", "y"]).unwrap();
        let p = parse_polynomial(" -3/6 * x ^ 2\n + y*y - y^2", &r).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coefficient(&Monomial::new(vec![2, 0])), Rational::new((-1).into(), 2.into()));
    }

    #[test]
    fn errors_carry_positions() {
        let r = Ring::new(["x"]).unwrap();
        assert_eq!(
            parse_polynomial("x + w", &r).unwrap_err(),
            PolyError::UnknownVariable {
                name: "w".into(),
                line: 1,
                column: 5
            }
        );
        assert!(matches!(
            parse_polynomial("x +\n  * x", &r).unwrap_err(),
            PolyError::Syntax { line: 2, column: 3, .. }
        ));
        assert!(parse_polynomial("1/0", &r).is_err());
        assert!(parse_polynomial("", &r).is_err());
        assert!(parse_polynomial("x^", &r).is_err());
        assert!(parse_polynomial("--x", &r).is_err());
    }
}
