//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with indeterminates ranked by name (alphabetically
//! first is most significant). The map never stores a zero coefficient, so the
//! zero polynomial is the empty map and structural equality is mathematical
//! equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number with canonical sign and reduced terms.
pub type Ratio = BigRational;

/// A point assignment from indeterminate names to rational values.
pub type Assignment = BTreeMap<String, Ratio>;

/// A named indeterminate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A power product of indeterminates. Factors are sorted by name and every
/// exponent is positive; the empty product is the monomial 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| w == v)
            .map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == *v {
                let d = other.0[j].1;
                if d > *e {
                    return None;
                }
                if d < *e {
                    out.push((v.clone(), e - d));
                }
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < *v {
                return None;
            } else {
                out.push((v.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for (v, e) in &self.0 {
            let f = other.exponent(v);
            if f > 0 {
                out.push((v.clone(), (*e).min(f)));
            }
        }
        Monomial(out)
    }

    /// Splits off the power of `v`.
    fn split(&self, v: &Var) -> (u32, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for (w, e) in &self.0 {
            if w == v {
                exp = *e;
            } else {
                rest.push((w.clone(), *e));
            }
        }
        (exp, Monomial(rest))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Ratio>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Ratio::one())
    }

    pub fn constant(c: Ratio) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Ratio) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(name: &str) -> Self {
        Poly::term(Monomial::var(Var::new(name), 1), Ratio::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Ratio)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().is_some_and(Monomial::is_one),
            _ => false,
        }
    }

    pub fn constant_value(&self) -> Option<Ratio> {
        if self.is_zero() {
            Some(Ratio::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Ratio)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Ratio)> {
        self.terms.last_key_value()
    }

    pub fn leading_coeff(&self) -> Ratio {
        self.leading().map_or_else(Ratio::zero, |(_, c)| c.clone())
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map_or(0, |(m, _)| m.degree())
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Ratio) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Ratio) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Ratio) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn evaluate(&self, point: &Assignment) -> Result<Ratio, Var> {
        let mut acc = Ratio::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = point.get(v.name()).ok_or_else(|| v.clone())?;
                t *= num_traits::pow(x.clone(), *e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes the assigned indeterminates and keeps the rest symbolic.
    pub fn partial_evaluate(&self, point: &Assignment) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.factors() {
                match point.get(v.name()) {
                    Some(x) => t *= num_traits::pow(x.clone(), *e as usize),
                    None => rest.push((v.clone(), *e)),
                }
            }
            out.add_term(Monomial(rest), t);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        if d.is_constant() {
            return Some(self.scale(&lc.recip()));
        }
        let lc_inv = lc.recip();
        let mut q = Poly::zero();
        let mut r = self.clone();
        while let Some((rm, rc)) = r.leading() {
            let m = rm.div(lm)?;
            let c = rc * &lc_inv;
            r = &r - &d.mul_term(&m, &c);
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Coefficients of `self` viewed as a polynomial in `v`; index = degree.
    fn to_univariate(&self, v: &Var) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    fn from_univariate(coeffs: &[Poly], v: &Var) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let xe = Monomial::var(v.clone(), e as u32);
            for (m, a) in &c.terms {
                out.add_term(m.mul(&xe), a.clone());
            }
        }
        out
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    if a.len() == 1 || b.len() == 1 {
        let (single, other) = if a.len() == 1 { (a, b) } else { (b, a) };
        let mut g = single.leading().map(|(m, _)| m.clone()).unwrap_or_default();
        for m in other.terms.keys() {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        return Poly::term(g, Ratio::one());
    }

    let (va, vb) = (a.variables(), b.variables());
    // A variable present in only one argument can only contribute through
    // that argument's content with respect to it.
    if let Some(x) = va.symmetric_difference(&vb).next() {
        let (has, other) = if va.contains(x) { (a, b) } else { (b, a) };
        let mut g = other.monic();
        for c in has.to_univariate(x) {
            if g.is_one() {
                break;
            }
            g = gcd(&g, &c);
        }
        return g;
    }
    let x = va
        .iter()
        .min_by_key(|v| a.degree_in(v).max(b.degree_in(v)))
        .cloned()
        .expect("non-constant polynomials have variables");
    let ua = a.to_univariate(&x);
    let ub = b.to_univariate(&x);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = gcd(&ca, &cb);
    let mut pa = divide_coeffs(&ua, &ca);
    let mut pb = divide_coeffs(&ub, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_empty() {
        let r = pseudo_remainder(&pa, &pb);
        pa = pb;
        pb = primitive_part(r);
    }
    let g = if pa.len() <= 1 {
        Poly::one()
    } else {
        Poly::from_univariate(&pa, &x)
    };
    (&c * &g).monic()
}

fn content(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_coeffs(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
}

fn primitive_part(mut r: Vec<Poly>) -> Vec<Poly> {
    trim(&mut r);
    if r.is_empty() {
        return r;
    }
    let c = content(&r);
    divide_coeffs(&r, &c)
}

/// Pseudo-remainder of univariate polynomials over a polynomial ring;
/// requires `a.len() >= b.len()` and `b` nonzero.
fn pseudo_remainder(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lc;
        }
        for (i, bi) in b.iter().enumerate() {
            let k = i + dr - db;
            r[k] = &r[k] - &(&lr * bi);
        }
        trim(&mut r);
    }
    r
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Terms in descending monomial order, e.g. `2*p*u - q*v + 1/2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Ratio::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut out = Poly::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Ratio {
        Ratio::from_integer(n.into())
    }

    fn x() -> Poly {
        Poly::var("x")
    }
    fn y() -> Poly {
        Poly::var("y")
    }

    #[test]
    fn grlex_orders_by_degree_then_name() {
        let xy = Monomial::var(Var::new("x"), 1).mul(&Monomial::var(Var::new("y"), 1));
        let x2 = Monomial::var(Var::new("x"), 2);
        let y2 = Monomial::var(Var::new("y"), 2);
        let x1 = Monomial::var(Var::new("x"), 1);
        assert!(x2 > xy);
        assert!(xy > y2);
        assert!(y2 > x1);
        assert!(x1 > Monomial::one());
    }

    #[test]
    fn monomial_division() {
        let a = Monomial::var(Var::new("a"), 2).mul(&Monomial::var(Var::new("c"), 1));
        let b = Monomial::var(Var::new("a"), 1);
        let c = Monomial::var(Var::new("b"), 1);
        assert_eq!(a.div(&b), Some(Monomial::var(Var::new("a"), 1).mul(&Monomial::var(Var::new("c"), 1))));
        assert_eq!(a.div(&c), None);
        assert_eq!(b.div(&a), None);
    }

    #[test]
    fn exact_division_and_rejection() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p.div_exact(&(&x() + &y())), Some(&x() - &y()));
        assert_eq!(p.div_exact(&(&x() + &Poly::one())), None);
    }

    #[test]
    fn gcd_of_products() {
        let common = &(&x() * &y()) - &Poly::constant(int(3));
        let a = &common * &(&x() + &Poly::constant(int(2)));
        let b = &common * &(&y().pow(2) - &x());
        assert_eq!(gcd(&a, &b), common.monic());
        assert!(gcd(&x(), &y()).is_one());
        assert_eq!(gcd(&x().pow(3), &(&x().pow(2) * &y())), x().pow(2));
    }

    #[test]
    fn display_descending() {
        let p = &(&Poly::constant(int(2)) * &(&x() * &y())) - &y().pow(2);
        assert_eq!(p.to_string(), "2*x*y - y^2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn partial_evaluation_keeps_free_variables() {
        let p = &(&x() * &y()) + &x();
        let mut pt = Assignment::new();
        pt.insert("x".into(), int(2));
        assert_eq!(p.partial_evaluate(&pt), &(&Poly::constant(int(2)) * &y()) + &Poly::constant(int(2)));
        assert_eq!(p.evaluate(&pt), Err(Var::new("y")));
    }
}
