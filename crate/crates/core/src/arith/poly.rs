use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;

/// The indeterminate a scalar may depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Q,
    Delta,
    N,
}

impl Param {
    pub fn symbol(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::Delta => "delta",
            Param::N => "n",
        }
    }

    /// Whether the base ring inverts the indeterminate, as in Z[q, q^-1].
    pub fn is_laurent(self) -> bool {
        matches!(self, Param::Q)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Sparse Laurent polynomial with rational coefficients.
///
/// Terms are sorted by ascending exponent and never hold a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    param: Param,
    terms: Vec<(i64, Rational)>,
}

impl LaurentPoly {
    pub fn zero(param: Param) -> Self {
        LaurentPoly { param, terms: Vec::new() }
    }

    pub fn constant(param: Param, c: Rational) -> Self {
        let mut p = LaurentPoly::zero(param);
        if !c.is_zero() {
            p.terms.push((0, c));
        }
        p
    }

    pub fn monomial(param: Param, c: Rational, exp: i64) -> Self {
        let mut p = LaurentPoly::zero(param);
        if !c.is_zero() {
            p.terms.push((exp, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(param: Param, mut terms: Vec<(i64, Rational)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        LaurentPoly { param, terms: out }
    }

    pub fn param(&self) -> Param {
        self.param
    }

    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            param: self.param,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.param, other.param);
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a[i].1 + &b[j].1;
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { param: self.param, terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.param, other.param);
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero(self.param);
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.scale_shift(c, *e);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.scale_shift(c, *e);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut dense = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly::from_dense(self.param, lo, dense)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.scale_shift(c, 0)
    }

    /// Multiplies by `c * x^shift`.
    pub fn scale_shift(&self, c: &Rational, shift: i64) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.param);
        }
        LaurentPoly {
            param: self.param,
            terms: self.terms.iter().map(|(e, a)| (e + shift, a * c)).collect(),
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly {
            param: self.param,
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn evaluate(&self, x: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            if *e < 0 && x.is_zero() {
                return None;
            }
            acc += c * pow_rational(x, *e);
        }
        Some(acc)
    }

    /// Dense coefficients from the lowest exponent upwards.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rational>) {
        let lo = match self.min_exp() {
            Some(lo) => lo,
            None => return (0, Vec::new()),
        };
        let hi = self.max_exp().unwrap();
        let mut dense = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    pub(crate) fn from_dense(param: Param, lo: i64, dense: Vec<Rational>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        LaurentPoly { param, terms }
    }

    /// Clears rational denominators and content, returning a primitive integer polynomial
    /// with positive leading coefficient together with the scalar removed.
    pub fn primitive_part(&self) -> (Rational, LaurentPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut lcm_den = BigInt::one();
        for (_, c) in &self.terms {
            lcm_den = num_integer::Integer::lcm(&lcm_den, c.denom());
        }
        let ints: Vec<BigInt> = self.terms.iter().map(|(_, c)| (c * Rational::from(lcm_den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = num_integer::Integer::gcd(&g, v);
        }
        if self.leading_coeff().unwrap().is_negative() {
            g = -g;
        }
        let content = Rational::new(g.clone(), lcm_den);
        let terms = self
            .terms
            .iter()
            .zip(ints)
            .map(|((e, _), v)| (*e, Rational::from(v / &g)))
            .collect();
        (content, LaurentPoly { param: self.param, terms })
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *e == 0 {
                write!(f, "{}", mag)?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            f.write_str(self.param.symbol())?;
            if *e != 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

pub(crate) fn pow_rational(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow::pow(x.clone(), e as usize)
    } else {
        num_traits::pow::pow(x.recip(), (-e) as usize)
    }
}

/// Division with remainder of dense polynomials (lowest degree first) over Q.
fn dense_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let coef = rem.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            let v = &rem[shift + i] - &coef * bc;
            rem[shift + i] = v;
        }
        quot[shift] = coef;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn make_monic(v: &mut [Rational]) {
    if let Some(l) = v.last().cloned() {
        for c in v.iter_mut() {
            *c = &*c / &l;
        }
    }
}

/// Monic gcd of two ordinary polynomials given densely, lowest degree first.
pub(crate) fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        make_monic(&mut y);
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&mut x);
    x
}

/// Exact quotient of dense polynomials; the caller guarantees divisibility.
pub(crate) fn dense_exact_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (q, r) = dense_divrem(a, b);
    debug_assert!(r.is_empty());
    q
}
