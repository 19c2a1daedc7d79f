use num_bigint::BigInt;

use super::poly::{LaurentPoly, Param};
use super::{ArithError, Rational, Scalar};

const MAX_INPUT: usize = 1 << 16;
const MAX_DEPTH: usize = 256;
const MAX_DIGITS: usize = 2000;
const MAX_EXPONENT: i64 = 10_000;
const MAX_POWER_OF_SUM: i64 = 64;
const MAX_POWER_SPAN: i64 = 1024;

/// Parses the textual scalar format, e.g. `3/4`, `q^-2 + 3*q`, `(delta^2 - 1)/(delta)`.
pub fn parse_scalar(input: &str) -> Result<Scalar, ArithError> {
    if input.len() > MAX_INPUT {
        return Err(ArithError::Parse { pos: 0, msg: "input too long".into() });
    }
    let mut p = Parser { src: input, pos: 0, depth: 0, param: None };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != input.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
    param: Option<Param>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ArithError {
        ArithError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
    }

    fn enter(&mut self) -> Result<(), ArithError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Scalar, ArithError> {
        self.enter()?;
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.bump(c);
            let rhs = self.term()?;
            acc = if c == '+' { acc.checked_add(&rhs)? } else { acc.checked_sub(&rhs)? };
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ArithError> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.bump(c);
            let rhs = self.unary()?;
            acc = if c == '*' { acc.checked_mul(&rhs)? } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ArithError> {
        self.enter()?;
        let v = match self.peek() {
            Some('-') => {
                self.bump('-');
                -self.unary()?
            }
            Some('+') => {
                self.bump('+');
                self.unary()?
            }
            _ => self.power()?,
        };
        self.depth -= 1;
        Ok(v)
    }

    fn power(&mut self) -> Result<Scalar, ArithError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump('^');
        let neg = match self.peek() {
            Some('-') => {
                self.bump('-');
                true
            }
            Some('+') => {
                self.bump('+');
                false
            }
            _ => false,
        };
        let digits = self.digits()?;
        let e: i64 = digits.parse().ok().filter(|e| *e <= MAX_EXPONENT).ok_or_else(|| self.err("exponent too large"))?;
        let e = if neg { -e } else { e };
        if base.is_zero() && e < 0 {
            return Err(ArithError::DivisionByZero);
        }
        let monomial = match &base {
            Scalar::Rat(_) => true,
            Scalar::Func(f) => f.is_polynomial() && f.numerator().is_monomial(),
        };
        if let Scalar::Func(f) = &base {
            if monomial {
                let k = f.numerator().terms()[0].0;
                if (k * e).abs() > MAX_EXPONENT {
                    return Err(self.err("exponent too large"));
                }
            } else if e.abs() > MAX_POWER_OF_SUM || span(f) * e.abs() > MAX_POWER_SPAN {
                return Err(self.err("exponent too large for a non-monomial base"));
            }
        } else if let Scalar::Rat(r) = &base {
            let bits = r.numer().bits().max(r.denom().bits());
            if bits.saturating_mul(e.unsigned_abs()) > 64 * MAX_DIGITS as u64 {
                return Err(self.err("power too large"));
            }
        }
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> Result<&str, ArithError> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(|b| b.is_ascii_digit()).count();
        if len == 0 {
            return Err(self.err("expected digits"));
        }
        if len > MAX_DIGITS {
            return Err(self.err("integer literal too long"));
        }
        let start = self.pos;
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn atom(&mut self) -> Result<Scalar, ArithError> {
        match self.peek() {
            Some('(') => {
                self.bump('(');
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump(')');
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Scalar::Rat(Rational::from_integer(n)))
            }
            Some(_) => {
                let param = self.symbol()?;
                if let Some(p) = self.param {
                    if p != param {
                        return Err(ArithError::ParameterMismatch(p, param));
                    }
                }
                self.param = Some(param);
                Ok(Scalar::from_poly(LaurentPoly::monomial(param, Rational::from_integer(1.into()), 1)))
            }
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn symbol(&mut self) -> Result<Param, ArithError> {
        let rest = self.rest();
        let ident: String = rest.chars().take_while(|c| c.is_alphabetic() || *c == '_').collect();
        let param = match ident.as_str() {
            "q" => Param::Q,
            "delta" | "δ" => Param::Delta,
            "n" => Param::N,
            _ => return Err(self.err("unknown symbol")),
        };
        self.pos += ident.len();
        Ok(param)
    }
}

fn span(f: &super::RationalFunction) -> i64 {
    let width = |p: &LaurentPoly| p.max_exp().unwrap_or(0) - p.min_exp().unwrap_or(0);
    width(f.numerator()).max(width(f.denominator())).max(1)
}
