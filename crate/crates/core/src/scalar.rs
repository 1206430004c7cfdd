//! Scalars: rationals, the Laurent ring `Q[v, v^-1]` with `v^2 = q`, and its
//! specializations into `Q[v]/(v^2 - q0)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn rat(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn fmt_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Exact rational square root, if one exists.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Q::new(n, d))
}

/// An element `sum_m c_m v^m` of `Q[v, v^-1]`, where `v^2 = q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarQ {
    terms: BTreeMap<i32, Q>,
}

impl ScalarQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(int(1), 0)
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn monomial(c: Q, v_power: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(v_power, c);
        }
        Self { terms }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(int(1), k)
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::q_pow(1) - Self::one()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Q)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, v_power: i32) -> Q {
        self.terms.get(&v_power).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, v_power: i32, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(v_power).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&v_power);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect() }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, x)| (e + k, x.clone())).collect() }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, x)| (-e, x.clone())).collect() }
    }

    /// A single term `c v^k` with `c != 0` is a unit; returns its inverse.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(c.recip(), -k))
    }

    /// Exact quotient by a unit monomial, or `None`.
    pub fn div_unit(&self, other: &Self) -> Option<Self> {
        other.unit_inverse().map(|inv| self * &inv)
    }

    /// Substitute `v -> v0` in the field `spec`.
    pub fn specialize(&self, spec: &Specialization) -> QuadElt {
        let f = &spec.field;
        let mut acc = f.zero();
        for (k, c) in &self.terms {
            let vk = f.pow(&spec.v, *k);
            acc = f.add(&acc, &f.scale(&vk, c));
        }
        acc
    }

    /// Laurent polynomial in `q` if only even powers of `v` occur.
    pub fn as_q_laurent(&self) -> Option<BTreeMap<i32, Q>> {
        self.terms.iter().map(|(k, c)| (k % 2 == 0).then(|| (k / 2, c.clone()))).collect()
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_rational(c))?,
                _ => write!(f, "{}v^{}", fmt_rational(c), k)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ScalarQ {
    type Output = ScalarQ;
    fn add(mut self, rhs: ScalarQ) -> ScalarQ {
        self += &rhs;
        self
    }
}

impl AddAssign<&ScalarQ> for ScalarQ {
    fn add_assign(&mut self, rhs: &ScalarQ) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl SubAssign<&ScalarQ> for ScalarQ {
    fn sub_assign(&mut self, rhs: &ScalarQ) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c);
        }
    }
}

impl<'a> Sub<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for ScalarQ {
    type Output = ScalarQ;
    fn sub(mut self, rhs: ScalarQ) -> ScalarQ {
        self -= &rhs;
        self
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

impl<'a> Mul<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        let mut out = ScalarQ::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl Mul for ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: ScalarQ) -> ScalarQ {
        &self * &rhs
    }
}

/// An element `a + b v` of `Q[v]/(v^2 - d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElt {
    pub a: Q,
    pub b: Q,
}

impl QuadElt {
    pub fn rational(a: Q) -> Self {
        Self { a, b: Q::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl fmt::Display for QuadElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", fmt_rational(&self.a))
        } else {
            write!(f, "{} + {}v", fmt_rational(&self.a), fmt_rational(&self.b))
        }
    }
}

/// The ring `Q[v]/(v^2 - d)`. When `d` is not a rational square this is a
/// field; when it is, callers work with `v` specialized to a rational root and
/// every element has `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadField {
    pub d: Q,
}

impl QuadField {
    pub fn new(d: Q) -> Self {
        Self { d }
    }

    pub fn zero(&self) -> QuadElt {
        QuadElt::rational(Q::zero())
    }

    pub fn one(&self) -> QuadElt {
        QuadElt::rational(Q::one())
    }

    pub fn add(&self, x: &QuadElt, y: &QuadElt) -> QuadElt {
        QuadElt { a: &x.a + &y.a, b: &x.b + &y.b }
    }

    pub fn sub(&self, x: &QuadElt, y: &QuadElt) -> QuadElt {
        QuadElt { a: &x.a - &y.a, b: &x.b - &y.b }
    }

    pub fn neg(&self, x: &QuadElt) -> QuadElt {
        QuadElt { a: -&x.a, b: -&x.b }
    }

    pub fn mul(&self, x: &QuadElt, y: &QuadElt) -> QuadElt {
        if x.b.is_zero() && y.b.is_zero() {
            return QuadElt::rational(&x.a * &y.a);
        }
        QuadElt { a: &x.a * &y.a + &self.d * &x.b * &y.b, b: &x.a * &y.b + &x.b * &y.a }
    }

    pub fn scale(&self, x: &QuadElt, c: &Q) -> QuadElt {
        QuadElt { a: &x.a * c, b: &x.b * c }
    }

    pub fn inv(&self, x: &QuadElt) -> Result<QuadElt> {
        if x.b.is_zero() {
            if x.a.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(QuadElt::rational(x.a.recip()));
        }
        let norm = &x.a * &x.a - &self.d * &x.b * &x.b;
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadElt { a: &x.a / &norm, b: -&x.b / &norm })
    }

    pub fn pow(&self, x: &QuadElt, k: i32) -> QuadElt {
        let base = if k < 0 { self.inv(x).expect("power of a non-invertible element") } else { x.clone() };
        let mut acc = self.one();
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            e >>= 1;
        }
        acc
    }
}

/// A choice of value for `v` (and hence `q = v^2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub field: QuadField,
    pub v: QuadElt,
}

impl Specialization {
    /// `v = r` with `r` rational, so `q0 = r^2` and everything is rational.
    pub fn sqrt_q(r: Q) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { field: QuadField::new(&r * &r), v: QuadElt::rational(r) })
    }

    /// `q = q0`. A rational square root is used when one exists, otherwise `v`
    /// is adjoined formally.
    pub fn q(q0: Q) -> Result<Self> {
        if q0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match rational_sqrt(&q0) {
            Some(r) => Self::sqrt_q(r),
            None => Ok(Self { field: QuadField::new(q0), v: QuadElt { a: Q::zero(), b: Q::one() } }),
        }
    }

    pub fn q0(&self) -> Q {
        self.field.d.clone()
    }

    pub fn q_elt(&self) -> QuadElt {
        QuadElt::rational(self.q0())
    }

    pub fn label(&self) -> String {
        if self.v.is_rational() {
            format!("v={}", fmt_rational(&self.v.a))
        } else {
            format!("q={}", fmt_rational(&self.field.d))
        }
    }
}
