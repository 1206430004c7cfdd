//! Univariate polynomials and rational functions in `s` over a specialized
//! scalar field, used to solve linear systems along a one-parameter family
//! of torus points.

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::scalar::{QuadElt, QuadField};

/// Dense coefficient vector, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<QuadElt>);

impl Poly {
    fn trimmed(mut c: Vec<QuadElt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: QuadElt) -> Self {
        Self::trimmed(vec![c])
    }

    /// `c s^k`.
    pub fn monomial(f: &QuadField, c: QuadElt, k: usize) -> Self {
        let mut v = vec![f.zero(); k];
        v.push(c);
        Self::trimmed(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&QuadElt> {
        self.0.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, f: &QuadField, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = f.zero();
        Self::trimmed((0..n).map(|i| f.add(self.0.get(i).unwrap_or(&z), o.0.get(i).unwrap_or(&z))).collect())
    }

    pub fn neg(&self, f: &QuadField) -> Poly {
        Poly(self.0.iter().map(|c| f.neg(c)).collect())
    }

    pub fn sub(&self, f: &QuadField, o: &Poly) -> Poly {
        self.add(f, &o.neg(f))
    }

    pub fn mul(&self, f: &QuadField, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![f.zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = f.add(&out[i + j], &f.mul(a, b));
                }
            }
        }
        Self::trimmed(out)
    }

    pub fn scale(&self, f: &QuadField, c: &QuadElt) -> Poly {
        Self::trimmed(self.0.iter().map(|x| f.mul(x, c)).collect())
    }

    pub fn divrem(&self, f: &QuadField, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = f.inv(d.lead().unwrap())?;
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, b));
            }
            quot[k] = c;
        }
        Ok((Self::trimmed(quot), Self::trimmed(rem)))
    }

    pub fn monic(&self, f: &QuadField) -> Result<Poly> {
        match self.lead() {
            None => Ok(Poly::zero()),
            Some(l) => Ok(self.scale(f, &f.inv(l)?)),
        }
    }

    pub fn gcd(&self, f: &QuadField, o: &Poly) -> Result<Poly> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(f, &b)?;
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn eval(&self, f: &QuadField, x: &QuadElt) -> QuadElt {
        self.0.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }
}

/// `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl RatFn {
    /// `c s^k` for any integer `k`.
    pub fn laurent_monomial(f: &QuadField, c: QuadElt, k: i64) -> RatFn {
        if k >= 0 {
            RatFn { num: Poly::monomial(f, c, k as usize), den: Poly::constant(f.one()) }
        } else {
            RatFn { num: Poly::constant(c), den: Poly::monomial(f, f.one(), (-k) as usize) }
        }
    }

    /// Whether the denominator is a power of `s`, so this is a Laurent
    /// polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.0.len() == self.den.valuation().map_or(0, |v| v + 1)
    }

    pub fn eval(&self, f: &QuadField, x: &QuadElt) -> Result<QuadElt> {
        Ok(f.mul(&self.num.eval(f, x), &f.inv(&self.den.eval(f, x))?))
    }
}

/// The field `k(s)`.
#[derive(Clone, Debug)]
pub struct RatFnField {
    pub base: QuadField,
}

impl RatFnField {
    pub fn new(base: QuadField) -> Self {
        Self { base }
    }

    fn normalize(&self, num: Poly, den: Poly) -> RatFn {
        let f = &self.base;
        if num.is_zero() {
            return RatFn { num, den: Poly::constant(f.one()) };
        }
        let g = num.gcd(f, &den).expect("gcd over a field");
        let (n, _) = num.divrem(f, &g).expect("nonzero gcd");
        let (d, _) = den.divrem(f, &g).expect("nonzero gcd");
        let l = f.inv(d.lead().unwrap()).expect("nonzero leading coefficient");
        RatFn { num: n.scale(f, &l), den: d.scale(f, &l) }
    }

    pub fn from_poly(&self, p: Poly) -> RatFn {
        RatFn { num: p, den: Poly::constant(self.base.one()) }
    }
}

impl Field for RatFnField {
    type Elt = RatFn;

    fn zero(&self) -> RatFn {
        self.from_poly(Poly::zero())
    }

    fn one(&self) -> RatFn {
        self.from_poly(Poly::constant(self.base.one()))
    }

    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let f = &self.base;
        if a.den == b.den {
            return self.normalize(a.num.add(f, &b.num), a.den.clone());
        }
        self.normalize(a.num.mul(f, &b.den).add(f, &b.num.mul(f, &a.den)), a.den.mul(f, &b.den))
    }

    fn sub(&self, a: &RatFn, b: &RatFn) -> RatFn {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let f = &self.base;
        self.normalize(a.num.mul(f, &b.num), a.den.mul(f, &b.den))
    }

    fn neg(&self, a: &RatFn) -> RatFn {
        RatFn { num: a.num.neg(&self.base), den: a.den.clone() }
    }

    fn inv(&self, a: &RatFn) -> Result<RatFn> {
        if a.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.normalize(a.den.clone(), a.num.clone()))
    }

    fn is_zero(&self, a: &RatFn) -> bool {
        a.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, inverse, mat_mul};
    use crate::scalar::int;

    fn c(n: i64) -> QuadElt {
        QuadElt::rational(int(n))
    }

    #[test]
    fn poly_gcd_and_division() {
        let f = QuadField::new(int(4));
        // (s - 1)(s + 2) and (s - 1)(s - 3)
        let a = Poly(vec![c(-2), c(1), c(1)]);
        let b = Poly(vec![c(3), c(-4), c(1)]);
        assert_eq!(a.gcd(&f, &b).unwrap(), Poly(vec![c(-1), c(1)]));
        let (q, r) = a.divrem(&f, &Poly(vec![c(-1), c(1)])).unwrap();
        assert_eq!(q, Poly(vec![c(2), c(1)]));
        assert!(r.is_zero());
    }

    #[test]
    fn field_laws_and_laurent_detection() {
        let k = RatFnField::new(QuadField::new(int(-1)));
        let f = &k.base;
        let x = RatFn::laurent_monomial(f, c(3), -2);
        assert!(x.is_laurent());
        let y = k.add(&x, &k.one());
        assert!(y.is_laurent());
        let z = k.inv(&y).unwrap();
        assert!(!z.is_laurent());
        assert_eq!(k.mul(&y, &z), k.one());
        assert_eq!(y.eval(f, &c(1)).unwrap(), c(4));
    }

    #[test]
    fn matrix_inverse_over_rational_functions() {
        let k = RatFnField::new(QuadField::new(int(9)));
        let f = &k.base;
        let s = |e: i64| RatFn::laurent_monomial(f, c(1), e);
        let m = vec![vec![k.one(), s(1)], vec![s(-1), s(2)]];
        let inv = inverse(&k, &m).unwrap();
        assert_eq!(mat_mul(&k, &m, &inv, 2), identity(&k, 2));
    }
}
