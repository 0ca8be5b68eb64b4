//! Parser for scalar literals such as `1/2 - z^3`, `L*z^2 - z^-2` or
//! `(L1*L2*z - z^-1)^-1`.
//!
//! `z` is the generator ζ of the declared cyclotomic field, `L` (or `L1`,
//! `L2`, ...) are torus parameters. Products and quotients of binomials stay
//! factored; sums are expanded.

use super::{factored_combine, CombineOp, CycField, CycNum, FactoredValue, LaurentPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Zeta,
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v = text.parse().map_err(|_| parse_err(col, format!("integer {text} out of range")))?;
                out.push((Token::Int(v), col));
                continue;
            }
            'z' => out.push((Token::Zeta, col)),
            'L' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let idx = if start == i {
                    1
                } else {
                    let text: String = chars[start..i].iter().collect();
                    text.parse::<usize>().map_err(|_| parse_err(col, "bad torus index".into()))?
                };
                if idx == 0 {
                    return Err(parse_err(col, "torus parameters are numbered from L1".into()));
                }
                out.push((Token::Var(idx - 1), col));
                continue;
            }
            '+' => out.push((Token::Plus, col)),
            '-' => out.push((Token::Minus, col)),
            '*' => out.push((Token::Star, col)),
            '/' => out.push((Token::Slash, col)),
            '^' => out.push((Token::Caret, col)),
            '(' => out.push((Token::Open, col)),
            ')' => out.push((Token::Close, col)),
            _ => return Err(parse_err(col, format!("unexpected character '{c}'"))),
        }
        i += 1;
    }
    Ok(out)
}

fn parse_err(column: usize, message: String) -> Error {
    Error::Parse { line: 1, column, message }
}

/// Intermediate value: sums live as Laurent polynomials, products of
/// binomials as factored values.
#[derive(Clone)]
enum Value {
    Poly(LaurentPoly),
    Fact(FactoredValue),
}

impl Value {
    fn poly(self) -> Result<LaurentPoly> {
        match self {
            Value::Poly(p) => Ok(p),
            Value::Fact(f) => f.to_laurent().ok_or_else(|| {
                Error::UnsupportedSymbolic(format!("cannot add the non-polynomial value {f}"))
            }),
        }
    }

    fn fact(self) -> Result<FactoredValue> {
        match self {
            Value::Fact(f) => Ok(f),
            Value::Poly(p) => FactoredValue::from_laurent(&p),
        }
    }
}

struct Parser<'a> {
    tokens: &'a [(Token, usize)],
    pos: usize,
    field: &'a CycField,
    nvars: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            let sign = match t {
                Token::Plus => false,
                Token::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?.poly()?;
            let lhs = acc.poly()?;
            acc = Value::Poly(if sign { lhs.sub(&rhs) } else { lhs.add(&rhs) });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            let op = match t {
                Token::Star => CombineOp::Mul,
                Token::Slash => CombineOp::Div,
                _ => break,
            };
            self.pos += 1;
            let col = self.col();
            let rhs = self.unary()?;
            acc = combine(acc, rhs, op).map_err(|e| match e {
                Error::DivisionByZero => parse_err(col, "division by zero".into()),
                other => other,
            })?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(match self.unary()? {
                Value::Poly(p) => Value::Poly(p.neg()),
                Value::Fact(f) => {
                    let m = FactoredValue::constant(self.field.integer(-1), self.nvars)?;
                    Value::Fact(factored_combine(&m, &f, CombineOp::Mul))
                }
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.primary()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let col = self.col();
        let Some(Token::Int(k)) = self.peek().cloned() else {
            return Err(parse_err(col, "expected an integer exponent".into()));
        };
        self.pos += 1;
        let k = i32::try_from(k).map_err(|_| parse_err(col, "exponent out of range".into()))?;
        let k = if neg { -k } else { k };
        // Laurent monomials and nonnegative powers of polynomials stay expanded.
        if let Value::Poly(p) = &base {
            if p.terms().len() == 1 {
                let (e, c) = p.terms().iter().next().unwrap();
                let c = c.pow(k as i64).map_err(|_| parse_err(col, "zero to a negative power".into()))?;
                return Ok(Value::Poly(LaurentPoly::monomial(c, e.iter().map(|x| x * k).collect())));
            }
            if p.is_zero() {
                return if k > 0 {
                    Ok(base)
                } else {
                    Err(parse_err(col, "zero to a nonpositive power".into()))
                };
            }
        }
        Ok(Value::Fact(base.fact()?.pow(k)?))
    }

    fn primary(&mut self) -> Result<Value> {
        let col = self.col();
        let tok = self.peek().cloned().ok_or_else(|| parse_err(col, "unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(v) => Ok(Value::Poly(LaurentPoly::constant(self.field.integer(v), self.nvars))),
            Token::Zeta => Ok(Value::Poly(LaurentPoly::constant(self.field.zeta_pow(1), self.nvars))),
            Token::Var(i) => {
                if i >= self.nvars {
                    return Err(parse_err(
                        col,
                        if self.nvars == 0 {
                            "torus parameters are not allowed here".into()
                        } else {
                            format!("L{} exceeds the torus rank {}", i + 1, self.nvars)
                        },
                    ));
                }
                let mut e = vec![0; self.nvars];
                e[i] = 1;
                Ok(Value::Poly(LaurentPoly::monomial(self.field.one(), e)))
            }
            Token::Open => {
                let v = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(parse_err(self.col(), "expected ')'".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            other => Err(parse_err(col, format!("unexpected token {other:?}"))),
        }
    }
}

fn combine(a: Value, b: Value, op: CombineOp) -> Result<Value> {
    // Constant or monomial operands keep a sum expanded; otherwise factor.
    match (a, b) {
        (Value::Poly(p), Value::Poly(q)) if op == CombineOp::Mul && (p.terms().len() <= 1 || q.terms().len() <= 1) => {
            Ok(Value::Poly(p.mul(&q)))
        }
        (Value::Poly(p), Value::Poly(q)) if op == CombineOp::Div && q.terms().len() == 1 => {
            let (e, c) = q.terms().iter().next().unwrap();
            let inv = LaurentPoly::monomial(c.inverse()?, e.iter().map(|x| -x).collect());
            Ok(Value::Poly(p.mul(&inv)))
        }
        (_, Value::Poly(q)) if op == CombineOp::Div && q.is_zero() => Err(Error::DivisionByZero),
        (a, b) => {
            let fa = a.fact()?;
            let fb = b.fact()?;
            Ok(Value::Fact(factored_combine(&fa, &fb, op)))
        }
    }
}

fn parse_value(src: &str, field: &CycField, nvars: usize) -> Result<Value> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens: &tokens, pos: 0, field, nvars, end_col: src.chars().count() + 1 };
    let v = p.expr()?;
    if p.pos != tokens.len() {
        return Err(parse_err(p.col(), "trailing input".into()));
    }
    Ok(v)
}

/// Parses a literal without torus parameters into Q(ζ_n).
pub fn parse_cyc(src: &str, field: &CycField) -> Result<CycNum> {
    match parse_value(src, field, 0)? {
        Value::Poly(p) => Ok(p.as_constant().expect("no torus parameters")),
        Value::Fact(f) => Ok(f.as_constant().expect("no torus parameters").clone()),
    }
}

/// Parses a literal in `nvars` torus parameters into canonical factored form.
pub fn parse_factored(src: &str, field: &CycField, nvars: usize) -> Result<FactoredValue> {
    match parse_value(src, field, nvars)? {
        Value::Poly(p) if p.is_zero() => Err(Error::UnsupportedSymbolic(format!("'{src}' is zero"))),
        v => v.fact(),
    }
}

/// Parses a literal in `nvars` torus parameters into a Laurent polynomial.
pub fn parse_laurent(src: &str, field: &CycField, nvars: usize) -> Result<LaurentPoly> {
    parse_value(src, field, nvars)?.poly()
}

/// True if the literal mentions a torus parameter.
pub fn is_symbolic(src: &str) -> bool {
    src.contains('L')
}

/// The largest torus index `k` mentioned as `L` (= `L1`) or `Lk`, 0 if none.
pub fn torus_rank(src: &str) -> Result<usize> {
    Ok(tokenize(src)?
        .iter()
        .filter_map(|(t, _)| match t {
            Token::Var(i) => Some(i + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, Q};

    #[test]
    fn constants() {
        let f = CycField::new(5).unwrap();
        assert_eq!(parse_cyc("1/2 - z^3", &f).unwrap(), f.rational(Q::new(1.into(), 2.into())).sub(&f.zeta_pow(3)));
        assert_eq!(parse_cyc("z^-1", &f).unwrap(), f.zeta_pow(4));
        assert_eq!(parse_cyc("-(z^2 + z^3)", &f).unwrap(), parse_cyc("1 + z + z^4", &f).unwrap());
        assert_eq!(parse_cyc("(1 + z)^-1 * (1 + z)", &f).unwrap(), f.one());
        assert_eq!(parse_cyc("2^3/4", &f).unwrap(), f.integer(2));
    }

    #[test]
    fn errors_carry_columns() {
        let f = CycField::new(3).unwrap();
        match parse_cyc("1 + ?", &f) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_cyc("L", &f), Err(Error::Parse { .. })));
        assert!(matches!(parse_cyc("1/0", &f), Err(Error::Parse { .. })));
        assert!(matches!(parse_cyc("(1 + z", &f), Err(Error::Parse { .. })));
    }

    #[test]
    fn symbolic_round_trip() {
        let f = CycField::new(5).unwrap();
        let v = parse_factored("(L*z^2 - z^-2)*(L*z - z^-1)^-1", &f, 1).unwrap();
        assert_eq!(v.factors().len(), 2);
        let again = parse_factored(&v.to_literal(), &f, 1).unwrap();
        assert_eq!(again, v);
        let w = parse_factored("3*L1*L2^-1*(L1*L2*z^2 - z^-2)^2", &f, 2).unwrap();
        assert_eq!(parse_factored(&w.to_literal(), &f, 2).unwrap(), w);
    }

    #[test]
    fn binomials_are_recognized_in_any_orientation() {
        let f = CycField::new(7).unwrap();
        let a = parse_factored("L*z^3 - z^-3", &f, 1).unwrap();
        let b = parse_factored("-z^-3 + z^3*L", &f, 1).unwrap();
        assert_eq!(a, b);
        let c = parse_factored("z^-3 - L*z^3", &f, 1).unwrap();
        assert_eq!(c.constant_part(), &f.integer(-1));
    }
}
