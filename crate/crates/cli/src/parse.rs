//! Bicomplex literals and arithmetic expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | atom
//! atom   := number [unit] | unit | 'e1' | 'e2' | '(' expr ')' | '[' expr ';' expr ']'
//! unit   := 'i' | 'j' | 'k'
//! ```
//!
//! `[z1; z2]` builds `e1 z1 + e2 z2`; both parts must be complex (no `j`, `k`).
//! Whitespace is ignored. Errors carry the byte offset of the offending token.

use bicomplex::{Bicomplex, Complex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

impl SyntaxError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        Self {
            offset,
            message: message.into(),
        }
    }

    /// The message followed by the input with a caret under the offset.
    pub fn annotate(&self, input: &str) -> String {
        let col = input[..self.offset.min(input.len())].chars().count();
        format!("{self}\n  {input}\n  {}^", " ".repeat(col))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Num(f64),
    Unit(char),
    E(u8),
    Op(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn next(&mut self) -> Result<(usize, Tok), SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((start, Tok::End));
        };
        let b = rest.as_bytes();
        if c.is_ascii_digit() || (c == '.' && b.get(1).is_some_and(u8::is_ascii_digit)) {
            return self.number(start).map(|n| (start, Tok::Num(n)));
        }
        self.pos += c.len_utf8();
        let tok = match c {
            'i' | 'j' | 'k' => Tok::Unit(c),
            'e' => match b.get(1) {
                Some(b'1') => {
                    self.pos += 1;
                    Tok::E(1)
                }
                Some(b'2') => {
                    self.pos += 1;
                    Tok::E(2)
                }
                _ => return Err(SyntaxError::new(start, "expected e1 or e2")),
            },
            '+' | '-' | '*' | '/' | '(' | ')' | '[' | ']' | ';' => Tok::Op(c),
            _ => return Err(SyntaxError::new(start, format!("unexpected character '{c}'"))),
        };
        Ok((start, tok))
    }

    fn number(&mut self, start: usize) -> Result<f64, SyntaxError> {
        let b = self.src.as_bytes();
        let mut p = start;
        let digits = |p: &mut usize| {
            while *p < b.len() && b[*p].is_ascii_digit() {
                *p += 1;
            }
        };
        digits(&mut p);
        if p < b.len() && b[p] == b'.' {
            p += 1;
            digits(&mut p);
        }
        if p < b.len() && (b[p] == b'e' || b[p] == b'E') {
            let mut q = p + 1;
            if q < b.len() && (b[q] == b'+' || b[q] == b'-') {
                q += 1;
            }
            if q < b.len() && b[q].is_ascii_digit() {
                p = q;
                digits(&mut p);
            }
        }
        self.pos = p;
        self.src[start..p]
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| SyntaxError::new(start, "invalid number"))
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    peeked: (usize, Tok),
    tol: f64,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, tol: f64) -> Result<Self, SyntaxError> {
        let mut lex = Lexer { src, pos: 0 };
        let peeked = lex.next()?;
        Ok(Self { lex, peeked, tol })
    }

    fn bump(&mut self) -> Result<(usize, Tok), SyntaxError> {
        let next = self.lex.next()?;
        Ok(std::mem::replace(&mut self.peeked, next))
    }

    fn expect(&mut self, op: char) -> Result<(), SyntaxError> {
        match self.bump()? {
            (_, Tok::Op(c)) if c == op => Ok(()),
            (at, _) => Err(SyntaxError::new(at, format!("expected '{op}'"))),
        }
    }

    fn expr(&mut self) -> Result<Bicomplex<f64>, SyntaxError> {
        let mut acc = self.term()?;
        while let (_, Tok::Op(c @ ('+' | '-'))) = self.peeked {
            self.bump()?;
            let rhs = self.term()?;
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Bicomplex<f64>, SyntaxError> {
        let mut acc = self.unary()?;
        while let (at, Tok::Op(c @ ('*' | '/'))) = self.peeked {
            self.bump()?;
            let rhs = self.unary()?;
            acc = if c == '*' {
                acc * rhs
            } else {
                let inv = rhs
                    .inverse(self.tol)
                    .map_err(|e| SyntaxError::new(at, format!("cannot divide: {e}")))?;
                acc * inv
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Bicomplex<f64>, SyntaxError> {
        match self.peeked {
            (_, Tok::Op('-')) => {
                self.bump()?;
                Ok(-self.unary()?)
            }
            (_, Tok::Op('+')) => {
                self.bump()?;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Bicomplex<f64>, SyntaxError> {
        let (at, tok) = self.bump()?;
        match tok {
            Tok::Num(x) => {
                if let (_, Tok::Unit(u)) = self.peeked {
                    self.bump()?;
                    Ok(unit(u, x))
                } else {
                    Ok(unit('1', x))
                }
            }
            Tok::Unit(u) => Ok(unit(u, 1.0)),
            Tok::E(1) => Ok(Bicomplex::e1()),
            Tok::E(_) => Ok(Bicomplex::e2()),
            Tok::Op('(') => {
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Op('[') => {
                let z1 = self.complex_part()?;
                self.expect(';')?;
                let z2 = self.complex_part()?;
                self.expect(']')?;
                Bicomplex::from_idempotent(z1, z2).map_err(|e| SyntaxError::new(at, e.to_string()))
            }
            Tok::End => Err(SyntaxError::new(at, "unexpected end of input")),
            Tok::Op(c) => Err(SyntaxError::new(at, format!("unexpected '{c}'"))),
        }
    }

    fn complex_part(&mut self) -> Result<Complex<f64>, SyntaxError> {
        let at = self.peeked.0;
        let v = self.expr()?;
        if v.w().norm() != 0.0 {
            return Err(SyntaxError::new(at, "idempotent components must be complex numbers a+bi"));
        }
        Ok(v.z())
    }
}

fn unit(u: char, x: f64) -> Bicomplex<f64> {
    let p = match u {
        'i' => [0.0, x, 0.0, 0.0],
        'j' => [0.0, 0.0, x, 0.0],
        'k' => [0.0, 0.0, 0.0, x],
        _ => [x, 0.0, 0.0, 0.0],
    };
    Bicomplex::from_parts(p[0], p[1], p[2], p[3]).expect("finite coefficients")
}

/// Evaluates an expression; `tol` is the zero tolerance used for division.
pub fn eval_expr(text: &str, tol: f64) -> Result<Bicomplex<f64>, SyntaxError> {
    let mut p = Parser::new(text, tol)?;
    let v = p.expr()?;
    match p.peeked {
        (_, Tok::End) => {}
        (at, _) => return Err(SyntaxError::new(at, "unexpected trailing input")),
    }
    if !v.is_finite() {
        return Err(SyntaxError::new(0, "result is not finite"));
    }
    Ok(v)
}

/// Parses a literal in basis form `a+bi+cj+dk` or idempotent form `[z1; z2]`.
pub fn parse_bicomplex(text: &str) -> Result<Bicomplex<f64>, SyntaxError> {
    eval_expr(text, <f64 as bicomplex::Scalar>::DEFAULT_TOL_ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(s: &str) -> [f64; 4] {
        parse_bicomplex(s).unwrap().parts()
    }

    #[test]
    fn basis_literals() {
        assert_eq!(parts("2+3i+0j+0k"), [2.0, 3.0, 0.0, 0.0]);
        assert_eq!(parts(" 1 + 1k "), [1.0, 0.0, 0.0, 1.0]);
        let z = parse_bicomplex("1+1k").unwrap();
        assert_eq!((z.z(), z.w()), (Complex::new(1.0, 0.0), Complex::new(0.0, 1.0)));
        assert_eq!(parts("-1.5e2j"), [0.0, 0.0, -150.0, 0.0]);
        assert_eq!(parts(".5-k"), [0.5, 0.0, 0.0, -1.0]);
    }

    #[test]
    fn idempotent_literal() {
        let z = parse_bicomplex("[2; 4]").unwrap();
        assert_eq!(z.idempotent(), (Complex::new(2.0, 0.0), Complex::new(4.0, 0.0)));
        let w = parse_bicomplex("[1+2i;-3i]").unwrap();
        assert!((w.z1() - Complex::new(1.0, 2.0)).norm() < 1e-15);
        assert!((w.z2() - Complex::new(0.0, -3.0)).norm() < 1e-15);
    }

    #[test]
    fn expressions() {
        assert!(eval_expr("(1+1k)*(1-1k)", 1e-10).unwrap().is_zero());
        assert_eq!(eval_expr("i*j", 1e-10).unwrap(), Bicomplex::k());
        assert_eq!(eval_expr("e1*e2", 1e-10).unwrap(), Bicomplex::zero());
        assert_eq!(eval_expr("e1+e2", 1e-10).unwrap(), Bicomplex::one());
        let q = eval_expr("(2+3j)/(2+3j)", 1e-10).unwrap();
        assert!(q.max_abs_diff(&Bicomplex::one()) < 1e-15);
        assert_eq!(parts("2e1"), [20.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn errors_have_offsets() {
        let e = parse_bicomplex("1 + x").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.annotate("1 + x").ends_with("      ^"));
        assert_eq!(parse_bicomplex("(1+i").unwrap_err().offset, 4);
        assert_eq!(parse_bicomplex("1 2").unwrap_err().offset, 2);
        assert_eq!(parse_bicomplex("[1; j]").unwrap_err().offset, 4);
        assert_eq!(parse_bicomplex("").unwrap_err().offset, 0);
        assert_eq!(eval_expr("1/e1", 1e-10).unwrap_err().offset, 1);
        assert!(parse_bicomplex("1e999").is_err());
    }
}
