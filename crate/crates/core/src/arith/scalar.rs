use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{dense_exact_div, dense_gcd, pow_rational, LaurentPoly, Param};
use super::{ArithError, Rational};

/// Reduced quotient of Laurent polynomials in one parameter.
///
/// The denominator is monic with nonzero constant term and coprime to the numerator,
/// so any power of the parameter sits in the numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn param(&self) -> Param {
        self.num.param()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
}

/// An exact scalar: a rational number or a non-constant rational function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Func(RationalFunction),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(Rational::new(n.into(), d.into()))
    }

    pub fn var(param: Param) -> Self {
        Scalar::monomial(param, Rational::one(), 1)
    }

    pub fn monomial(param: Param, c: Rational, exp: i64) -> Self {
        Scalar::from_poly(LaurentPoly::monomial(param, c, exp))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        match p.as_constant() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Func(RationalFunction { den: LaurentPoly::constant(p.param(), Rational::one()), num: p }),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        if num.param() != den.param() {
            return Err(ArithError::ParameterMismatch(num.param(), den.param()));
        }
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn param(&self) -> Option<Param> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Func(f) => Some(f.param()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Func(_) => None,
        }
    }

    /// Numerator and denominator as polynomials in `param`.
    pub fn to_fraction(&self, param: Param) -> (LaurentPoly, LaurentPoly) {
        match self {
            Scalar::Rat(r) => (LaurentPoly::constant(param, r.clone()), LaurentPoly::constant(param, Rational::one())),
            Scalar::Func(f) => (f.num.clone(), f.den.clone()),
        }
    }

    /// True iff the scalar lies in the generic base ring: Z, Z[q, q^-1], Z[delta] or Z[n].
    pub fn is_integral(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_integer(),
            Scalar::Func(f) => {
                f.den.is_one()
                    && f.num.has_integer_coeffs()
                    && (f.param().is_laurent() || f.num.min_exp().unwrap_or(0) >= 0)
            }
        }
    }

    pub fn evaluate_at(&self, point: &Rational) -> Result<Rational, ArithError> {
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Func(f) => {
                let d = f.den.evaluate(point).ok_or(ArithError::PoleAtPoint)?;
                if d.is_zero() {
                    return Err(ArithError::PoleAtPoint);
                }
                let n = f.num.evaluate(point).ok_or(ArithError::PoleAtPoint)?;
                Ok(n / d)
            }
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        compatible(self, other)?;
        Ok(add(self, other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        compatible(self, other)?;
        Ok(add(self, &other.neg_ref()))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        compatible(self, other)?;
        Ok(mul(self, other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        compatible(self, other)?;
        Ok(mul(self, &other.checked_inv()?))
    }

    pub fn checked_inv(&self) -> Result<Scalar, ArithError> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Err(ArithError::DivisionByZero),
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Func(f) => Ok(normalize(f.den.clone(), f.num.clone())),
        }
    }

    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero scalar")
    }

    pub fn pow(&self, e: i64) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(pow_rational(r, e)),
            Scalar::Func(f) if f.den.is_one() && f.num.is_monomial() => {
                let (k, c) = &f.num.terms()[0];
                Scalar::monomial(f.param(), pow_rational(c, e), k * e)
            }
            _ => {
                let base = if e < 0 { self.inv() } else { self.clone() };
                let mut acc = Scalar::one();
                for _ in 0..e.unsigned_abs() {
                    acc = &acc * &base;
                }
                acc
            }
        }
    }

    /// Whether the scalar is ±1 or, over Z[q, q^-1], a signed power of q.
    pub fn is_unit_of_base(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_integer() && (r.is_one() || (-r).is_one()),
            Scalar::Func(f) => {
                f.param().is_laurent() && f.den.is_one() && f.num.is_monomial() && {
                    let c = &f.num.terms()[0].1;
                    c.is_one() || (-c).is_one()
                }
            }
        }
    }

    /// Rough size used to prefer cheap pivots during elimination.
    pub fn weight(&self) -> usize {
        match self {
            Scalar::Rat(r) => (r.numer().bits() + r.denom().bits()) as usize / 32,
            Scalar::Func(f) => 4 * (f.num.terms().len() + f.den.terms().len()),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Func(f) => Scalar::Func(RationalFunction { num: f.num.neg(), den: f.den.clone() }),
        }
    }
}

fn compatible(a: &Scalar, b: &Scalar) -> Result<(), ArithError> {
    match (a.param(), b.param()) {
        (Some(p), Some(q)) if p != q => Err(ArithError::ParameterMismatch(p, q)),
        _ => Ok(()),
    }
}

fn expect_compatible(a: &Scalar, b: &Scalar) {
    if let Err(e) = compatible(a, b) {
        panic!("{e}");
    }
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> Scalar {
    let param = num.param();
    if num.is_zero() {
        return Scalar::zero();
    }
    if den.is_monomial() {
        let (k, c) = &den.terms()[0];
        return Scalar::from_poly(num.scale_shift(&c.recip(), -k));
    }
    let (a, n_dense) = num.to_dense();
    let (b, d_dense) = den.to_dense();
    let g = dense_gcd(&n_dense, &d_dense);
    let (n_dense, mut d_dense) = if g.len() > 1 {
        (dense_exact_div(&n_dense, &g), dense_exact_div(&d_dense, &g))
    } else {
        (n_dense, d_dense)
    };
    let lead = d_dense.last().unwrap().clone();
    for c in d_dense.iter_mut() {
        *c = &*c / &lead;
    }
    let num = LaurentPoly::from_dense(param, a - b, n_dense).scale(&lead.recip());
    let den = LaurentPoly::from_dense(param, 0, d_dense);
    if den.is_one() {
        Scalar::from_poly(num)
    } else {
        Scalar::Func(RationalFunction { num, den })
    }
}

fn add(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
        (Scalar::Rat(x), Scalar::Func(f)) | (Scalar::Func(f), Scalar::Rat(x)) => {
            if x.is_zero() {
                return Scalar::Func(f.clone());
            }
            let num = f.num.add(&f.den.scale(x));
            if f.den.is_one() {
                Scalar::from_poly(num)
            } else {
                Scalar::Func(RationalFunction { num, den: f.den.clone() })
            }
        }
        (Scalar::Func(f), Scalar::Func(g)) => {
            if f.den == g.den {
                let num = f.num.add(&g.num);
                if f.den.is_one() {
                    Scalar::from_poly(num)
                } else {
                    normalize(num, f.den.clone())
                }
            } else {
                let num = f.num.mul(&g.den).add(&g.num.mul(&f.den));
                normalize(num, f.den.mul(&g.den))
            }
        }
    }
}

fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
        (Scalar::Rat(x), Scalar::Func(f)) | (Scalar::Func(f), Scalar::Rat(x)) => {
            if x.is_zero() {
                Scalar::zero()
            } else {
                Scalar::Func(RationalFunction { num: f.num.scale(x), den: f.den.clone() })
            }
        }
        (Scalar::Func(f), Scalar::Func(g)) => {
            if f.den.is_one() && g.den.is_one() {
                Scalar::from_poly(f.num.mul(&g.num))
            } else {
                normalize(f.num.mul(&g.num), f.den.mul(&g.den))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Func(rf) if rf.den.is_one() => rf.num.fmt_with(f),
            Scalar::Func(rf) => {
                f.write_str("(")?;
                rf.num.fmt_with(f)?;
                f.write_str(")/(")?;
                rf.den.fmt_with(f)?;
                f.write_str(")")
            }
        }
    }
}

impl std::str::FromStr for Scalar {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_scalar(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                expect_compatible(self, rhs);
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, |a: &Scalar, b: &Scalar| add(a, &b.neg_ref()));
binop!(Mul, mul, mul);
binop!(Div, div, |a: &Scalar, b: &Scalar| mul(a, &b.inv()));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}
