//! Exact scalars: rationals and rational functions in named indeterminates.
//!
//! A [`ParamScalar`] is always stored in canonical form: numerator and
//! denominator are coprime, the denominator is monic with respect to the
//! graded-lex term order, and zero is `0/1`. Equality of values is therefore
//! structural equality.

mod parse;
mod poly;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use poly::{gcd, Assignment, Monomial, Poly, Ratio, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed scalar: {0}")]
    Malformed(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no value assigned to indeterminate `{0}`")]
    IncompleteAssignment(String),
    #[error("denominator vanishes at the evaluation point")]
    Pole,
}

/// An element of the field of rational functions over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: Poly,
    den: Poly,
}

impl Default for ParamScalar {
    fn default() -> Self {
        ParamScalar::zero()
    }
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        ParamScalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ParamScalar::from_ratio(Ratio::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(r: Ratio) -> Self {
        ParamScalar {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    pub fn frac(n: i64, d: i64) -> Self {
        ParamScalar::from_ratio(Ratio::new(n.into(), d.into()))
    }

    /// The indeterminate with the given name.
    pub fn var(name: &str) -> Self {
        ParamScalar {
            num: Poly::var(name),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        ParamScalar {
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::Malformed("zero denominator".into()));
        }
        Ok(reduce(num, den))
    }

    /// Re-derives the canonical form. Values built through this API are
    /// already canonical, so this is the identity on them.
    pub fn normalize(&self) -> Self {
        reduce(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when no indeterminate occurs.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Ratio> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.num
            .variables()
            .into_iter()
            .chain(self.den.variables())
            .map(|v| v.name().to_string())
            .collect()
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::Malformed("reciprocal of zero".into()));
        }
        let lc = self.num.leading_coeff().recip();
        Ok(ParamScalar {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    pub fn checked_div(&self, rhs: &ParamScalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: i32) -> Result<Self, ScalarError> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(ParamScalar {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Exact value at a point that assigns every indeterminate occurring here.
    pub fn evaluate(&self, point: &Assignment) -> Result<Ratio, ScalarError> {
        let missing = |v: Var| ScalarError::IncompleteAssignment(v.name().to_string());
        let n = self.num.evaluate(point).map_err(missing)?;
        let d = self.den.evaluate(point).map_err(missing)?;
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(n / d)
    }

    /// Substitutes the assigned indeterminates, leaving the others free.
    pub fn substitute(&self, point: &Assignment) -> Result<Self, ScalarError> {
        let d = self.den.partial_evaluate(point);
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(reduce(self.num.partial_evaluate(point), d))
    }

    /// Replaces each bound indeterminate by a scalar expression; unbound
    /// indeterminates stay free.
    pub fn compose(&self, bindings: &BTreeMap<String, ParamScalar>) -> Result<Self, ScalarError> {
        let eval = |p: &Poly| -> ParamScalar {
            let mut acc = ParamScalar::zero();
            for (mono, c) in p.terms() {
                let mut t = ParamScalar::from_ratio(c.clone());
                for (v, e) in mono.factors() {
                    let base = bindings
                        .get(v.name())
                        .cloned()
                        .unwrap_or_else(|| ParamScalar::var(v.name()));
                    t *= &base.pow(*e as i32).expect("positive power");
                }
                acc += &t;
            }
            acc
        };
        eval(&self.num).checked_div(&eval(&self.den))
    }
}

fn reduce(num: Poly, den: Poly) -> ParamScalar {
    if num.is_zero() {
        return ParamScalar::zero();
    }
    let (num, den) = if den.is_constant() {
        (num, den)
    } else {
        let g = gcd(&num, &den);
        if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        }
    };
    reduce_unit(num, den)
}

/// Scales a coprime pair so the denominator is monic.
fn reduce_unit(num: Poly, den: Poly) -> ParamScalar {
    let lc = den.leading_coeff();
    if lc.is_one() {
        ParamScalar { num, den }
    } else {
        let inv = lc.recip();
        ParamScalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

fn add_impl(a: &ParamScalar, b: &ParamScalar, negate_b: bool) -> ParamScalar {
    let bnum = if negate_b { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return ParamScalar {
            num: bnum,
            den: b.den.clone(),
        };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        let num = &a.num + &bnum;
        if a.den.is_one() {
            return ParamScalar { num, den: a.den.clone() };
        }
        return reduce(num, a.den.clone());
    }
    // n1 + n2/d stays reduced when n2/d is.
    if a.den.is_one() {
        return ParamScalar {
            num: &(&a.num * &b.den) + &bnum,
            den: b.den.clone(),
        };
    }
    if b.den.is_one() {
        return ParamScalar {
            num: &a.num + &(&bnum * &a.den),
            den: a.den.clone(),
        };
    }
    let g = gcd(&a.den, &b.den);
    let ad = a.den.div_exact(&g).expect("gcd divides");
    let bd = b.den.div_exact(&g).expect("gcd divides");
    let num = &(&a.num * &bd) + &(&bnum * &ad);
    if num.is_zero() {
        return ParamScalar::zero();
    }
    // Any common factor of num and a.den·bd divides g.
    let h = gcd(&num, &g);
    let (num, g) = if h.is_one() {
        (num, g)
    } else {
        (num.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
    };
    let den = &(&ad * &bd) * &g;
    reduce_unit(num, den)
}

fn mul_impl(a: &ParamScalar, b: &ParamScalar) -> ParamScalar {
    if a.is_zero() || b.is_zero() {
        return ParamScalar::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return ParamScalar {
            num: &a.num * &b.num,
            den: Poly::one(),
        };
    }
    let g1 = gcd(&a.num, &b.den);
    let g2 = gcd(&b.num, &a.den);
    let an = a.num.div_exact(&g1).expect("gcd divides");
    let bd = b.den.div_exact(&g1).expect("gcd divides");
    let bn = b.num.div_exact(&g2).expect("gcd divides");
    let ad = a.den.div_exact(&g2).expect("gcd divides");
    ParamScalar {
        num: &an * &bn,
        den: &ad * &bd,
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        add_impl(self, rhs, false)
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        add_impl(self, rhs, true)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        mul_impl(self, rhs)
    }
}

/// Panics on division by zero, like integer division; see
/// [`ParamScalar::checked_div`].
impl Div for &ParamScalar {
    type Output = ParamScalar;
    fn div(self, rhs: &ParamScalar) -> ParamScalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $f(self, rhs: ParamScalar) -> ParamScalar { (&self).$f(&rhs) }
        }
        impl $tr<&ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $f(self, rhs: &ParamScalar) -> ParamScalar { (&self).$f(rhs) }
        }
        impl $tr<ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $f(self, rhs: ParamScalar) -> ParamScalar { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&ParamScalar> for ParamScalar {
    fn add_assign(&mut self, rhs: &ParamScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ParamScalar> for ParamScalar {
    fn sub_assign(&mut self, rhs: &ParamScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&ParamScalar> for ParamScalar {
    fn mul_assign(&mut self, rhs: &ParamScalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        ParamScalar::from_int(n)
    }
}

impl From<Ratio> for ParamScalar {
    fn from(r: Ratio) -> Self {
        ParamScalar::from_ratio(r)
    }
}

impl Zero for ParamScalar {
    fn zero() -> Self {
        ParamScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ParamScalar {
    fn one() -> Self {
        ParamScalar::one()
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let bare = self.den.len() == 1
            && self
                .den
                .leading()
                .is_some_and(|(m, _)| m.factors().len() == 1 && m.degree() == 1);
        if bare {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamScalar({self})")
    }
}

impl FromStr for ParamScalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_scalar(s)
    }
}

impl Serialize for ParamScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ParamScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a rational literal such as `3`, `-2/7`.
pub fn parse_ratio(s: &str) -> Result<Ratio, ScalarError> {
    let v: ParamScalar = s.parse()?;
    v.as_constant()
        .ok_or_else(|| ScalarError::Malformed(format!("`{s}` is not a rational constant")))
}
