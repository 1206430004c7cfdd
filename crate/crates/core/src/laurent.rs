//! The group algebra `Θ ≅ k[P]` over `Q[v, v^-1]`: multivariate Laurent
//! polynomials in the fundamental weights, with the `W_0`-action, exact
//! division, symmetrizers, and evaluation at torus points.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::root_data::{RootDatum, Weight, W0};
use crate::scalar::{QuadElt, ScalarQ, Specialization, Q};

/// `Σ_x c_x θ_x` with `c_x ∈ Q[v, v^-1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Weight, ScalarQ>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `θ_x`.
    pub fn monomial(x: Weight) -> Self {
        Self::term(x, ScalarQ::one())
    }

    pub fn term(x: Weight, c: ScalarQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(x, c);
        }
        Self { terms }
    }

    pub fn constant(rank: usize, c: ScalarQ) -> Self {
        Self::term(Weight::zero(rank), c)
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Weight) -> ScalarQ {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, x: Weight, c: &ScalarQ) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(x).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        let mut out = Self::zero();
        for (x, a) in &self.terms {
            out.add_term(*x, &(a * c));
        }
        out
    }

    /// Multiply by `θ_y`.
    pub fn shift(&self, y: &Weight) -> Self {
        Self { terms: self.terms.iter().map(|(x, c)| (*x + *y, c.clone())).collect() }
    }

    /// `w(f)`: `θ_x ↦ θ_{w(x)}`.
    pub fn act(&self, datum: &RootDatum, w: W0) -> Self {
        Self { terms: self.terms.iter().map(|(x, c)| (datum.act(w, x), c.clone())).collect() }
    }

    /// `θ_x ↦ θ_{-x}`.
    pub fn invert_weights(&self) -> Self {
        Self { terms: self.terms.iter().map(|(x, c)| (-*x, c.clone())).collect() }
    }

    pub fn is_w0_invariant(&self, datum: &RootDatum) -> bool {
        (0..datum.rank).all(|s| self.act(datum, datum.simple(s)) == *self)
    }

    /// Leading term in the lexicographic order on exponent vectors.
    fn leading(&self) -> Option<(&Weight, &ScalarQ)> {
        self.terms.iter().next_back()
    }

    fn trailing(&self) -> Option<(&Weight, &ScalarQ)> {
        self.terms.iter().next()
    }

    /// Exact quotient `self / g` in the Laurent ring. Lexicographic order on
    /// `Z^n` is compatible with addition, so long division by leading terms
    /// works; quotient terms must stay between `lt(f) - lt(g)` and
    /// `tt(f) - tt(g)`, otherwise `g` does not divide `f`.
    pub fn exact_divide(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        let Some((lg, lc)) = g.leading() else {
            return Err(Error::DivisionByZero);
        };
        let lc_inv = lc.unit_inverse().ok_or_else(|| Error::InexactDivision {
            witness: format!("leading coefficient {lc} of divisor is not a unit"),
        })?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (tg, _) = g.trailing().unwrap();
        let floor = *self.trailing().unwrap().0 - *tg;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((lm, c)) = rem.leading() {
            let qx = *lm - *lg;
            if qx < floor {
                return Err(Error::InexactDivision { witness: lm.to_string() });
            }
            let qc = c * &lc_inv;
            rem -= &g.shift(&qx).scale(&qc);
            quot.add_term(qx, &qc);
        }
        Ok(quot)
    }

    /// Substitute `v ↦ v_0` and `θ_x ↦ x(t)`.
    pub fn evaluate(&self, t: &TorusPoint) -> QuadElt {
        let f = &t.spec.field;
        let mut acc = f.zero();
        for (x, c) in &self.terms {
            let term = f.mul(&c.specialize(&t.spec), &t.character(x));
            acc = f.add(&acc, &term);
        }
        acc
    }

    /// Canonical one-line text form: monomials in increasing lexicographic
    /// order, `[coeff]θ(x1,...,xn)` joined by ` + `.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(|(x, c)| format!("[{c}]θ{x}")).collect::<Vec<_>>().join(" + ")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (x, c) in &rhs.terms {
            self.add_term(*x, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (x, c) in &rhs.terms {
            self.add_term(*x, &-c);
        }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(x, c)| (*x, -c)).collect() }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (x, a) in &self.terms {
            for (y, b) in &rhs.terms {
                out.add_term(*x + *y, &(a * b));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// A point `t` of the maximal torus, recorded by the values `x_i(t)` of the
/// fundamental weights, together with the specialization of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoint {
    pub coords: Vec<QuadElt>,
    pub spec: Specialization,
}

impl TorusPoint {
    pub fn new(coords: Vec<QuadElt>, spec: Specialization) -> Result<Self> {
        for c in &coords {
            spec.field.inv(c)?;
        }
        Ok(Self { coords, spec })
    }

    /// Coordinates of the form `c_i v^{m_i}`.
    pub fn from_v_monomials(coords: &[(Q, i32)], spec: Specialization) -> Result<Self> {
        let f = &spec.field;
        let vals = coords.iter().map(|(c, m)| f.scale(&f.pow(&spec.v, *m), c)).collect();
        Self::new(vals, spec)
    }

    pub fn rational(coords: &[Q], spec: Specialization) -> Result<Self> {
        Self::new(coords.iter().cloned().map(QuadElt::rational).collect(), spec)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// `x(t) = Π t_i^{x_i}`.
    pub fn character(&self, x: &Weight) -> QuadElt {
        let f = &self.spec.field;
        let mut acc = f.one();
        for (i, c) in self.coords.iter().enumerate() {
            let e = x.get(i);
            if e != 0 {
                acc = f.mul(&acc, &f.pow(c, e));
            }
        }
        acc
    }

    pub fn inverse(&self) -> TorusPoint {
        let f = &self.spec.field;
        TorusPoint {
            coords: self.coords.iter().map(|c| f.inv(c).expect("torus coordinates are invertible")).collect(),
            spec: self.spec.clone(),
        }
    }

    /// The point `w(t)`, characterized by `x(w(t)) = (w^{-1} x)(t)`.
    pub fn act(&self, datum: &RootDatum, w: W0) -> TorusPoint {
        let winv = datum.inv(w);
        let coords =
            (0..datum.rank).map(|i| self.character(&datum.act(winv, &Weight::fundamental(datum.rank, i)))).collect();
        TorusPoint { coords, spec: self.spec.clone() }
    }

    /// `α(t) ≠ 1` for every root `α`.
    pub fn is_regular(&self, datum: &RootDatum) -> bool {
        let one = self.spec.field.one();
        datum.positive_roots.iter().all(|a| self.character(a) != one)
    }

    pub fn label(&self) -> String {
        let cs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        format!("t=({}) {}", cs.join(", "), self.spec.label())
    }
}

/// `Σ_{w ∈ W_0} ε(w) θ_{w(x)}`.
pub fn alternating_sum(datum: &RootDatum, x: &Weight) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for w in 0..datum.order() {
        let sign = if datum.length(w).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(datum.act(w, x), &ScalarQ::from_int(sign));
    }
    out
}

/// `Π_{α > 0} (1 - θ_α)`.
pub fn positive_denominator(datum: &RootDatum) -> LaurentPoly {
    let one = LaurentPoly::one(datum.rank);
    datum.positive_roots.iter().fold(one.clone(), |acc, a| &acc * &(&one - &LaurentPoly::monomial(*a)))
}

/// `Π_{α > 0} (1 - q θ_α)`.
pub fn q_numerator(datum: &RootDatum) -> LaurentPoly {
    let one = LaurentPoly::one(datum.rank);
    datum.positive_roots.iter().fold(one.clone(), |acc, a| &acc * &(&one - &LaurentPoly::term(*a, ScalarQ::q_pow(1))))
}

/// `Σ_{w ∈ W_0} w(f · Π_{α>0} (1 - qθ_α)/(1 - θ_α))`.
///
/// With `Δ = Π_{α>0}(1-θ_α)` one has `w(Δ) = ε(w) θ_{wρ-ρ} Δ`, so the sum equals
/// `Σ_w ε(w) θ_{ρ-wρ} w(f Π(1-qθ_α)) / Δ`, an exact division.
pub fn weyl_ratio_sum(datum: &RootDatum, f: &LaurentPoly) -> Result<LaurentPoly> {
    let g = f * &q_numerator(datum);
    let mut num = LaurentPoly::zero();
    for w in 0..datum.order() {
        let sign = if datum.length(w).is_multiple_of(2) { 1 } else { -1 };
        let shift = datum.rho - datum.act(w, &datum.rho);
        num += &g.act(datum, w).shift(&shift).scale(&ScalarQ::from_int(sign));
    }
    let out = num.exact_divide(&positive_denominator(datum))?;
    debug_assert!(out.is_w0_invariant(datum));
    Ok(out)
}

/// `(A, B) = (-1)^ν θ_ρ Π_{α>0}(1-θ_α)^{-1} Σ_w (-1)^{l(w)} w(A B θ_ρ)`.
pub fn pairing_ab(datum: &RootDatum, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    let abr = (a * b).shift(&datum.rho);
    let mut alt = LaurentPoly::zero();
    for w in 0..datum.order() {
        let sign = if datum.length(w).is_multiple_of(2) { 1 } else { -1 };
        alt += &abr.act(datum, w).scale(&ScalarQ::from_int(sign));
    }
    let sign = if datum.nu.is_multiple_of(2) { 1 } else { -1 };
    let out = alt.shift(&datum.rho).exact_divide(&positive_denominator(datum))?.scale(&ScalarQ::from_int(sign));
    Ok(out)
}

/// Term-by-term evaluation of `Σ_w w(f Π(1-qθ_α)/(1-θ_α))` at a regular point,
/// with denominators evaluated directly. Independent of the exact-division route.
pub fn weyl_ratio_sum_at(datum: &RootDatum, f: &LaurentPoly, t: &TorusPoint) -> Result<QuadElt> {
    let field = &t.spec.field;
    let q = t.spec.q_elt();
    let one = field.one();
    let mut acc = field.zero();
    for w in 0..datum.order() {
        let tw = t.act(datum, datum.inv(w));
        // [w(g)](t) = g(w^{-1} t)
        let mut val = f.evaluate(&tw);
        for a in &datum.positive_roots {
            let ta = tw.character(a);
            let num = field.sub(&one, &field.mul(&q, &ta));
            let den = field.sub(&one, &ta);
            val = field.mul(&val, &field.mul(&num, &field.inv(&den)?));
        }
        acc = field.add(&acc, &val);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::RootType;
    use crate::scalar::{int, rat};

    fn m(c: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(Weight::new(c))
    }

    #[test]
    fn geometric_division() {
        let one = m(&[0]);
        let f = &one - &m(&[2]);
        let g = &one - &m(&[1]);
        assert_eq!(f.exact_divide(&g).unwrap(), &one + &m(&[1]));
        assert_eq!(f.exact_divide(&one).unwrap(), f);
        let bad = &one + &m(&[2]);
        assert!(matches!(bad.exact_divide(&g), Err(Error::InexactDivision { .. })));
    }

    #[test]
    fn weyl_character_by_division_a1() {
        let d = RootDatum::build(RootType::A1);
        let num = alternating_sum(&d, &d.rho.scaled(2));
        let den = alternating_sum(&d, &d.rho);
        assert_eq!(num.exact_divide(&den).unwrap(), &m(&[1]) + &m(&[-1]));
    }

    #[test]
    fn weyl_ratio_sum_a1_constant() {
        let d = RootDatum::build(RootType::A1);
        let r = weyl_ratio_sum(&d, &LaurentPoly::one(1)).unwrap();
        let expected = LaurentPoly::constant(1, ScalarQ::one() + ScalarQ::q_pow(1));
        assert_eq!(r, expected);
    }

    #[test]
    fn weyl_ratio_sum_is_invariant_and_degenerates_at_q_one() {
        let s = Specialization::q(int(1)).unwrap();
        for t in [RootType::A1, RootType::A2, RootType::B2, RootType::G2] {
            let d = RootDatum::build(t);
            let one = LaurentPoly::one(d.rank);
            let r = weyl_ratio_sum(&d, &one).unwrap();
            assert!(r.is_w0_invariant(&d));
            // at q = 1 the ratio is 1, so the sum is |W_0|
            let pt = TorusPoint::rational(&vec![int(2); d.rank], s.clone()).unwrap();
            assert_eq!(r.evaluate(&pt), QuadElt::rational(int(d.order() as i64)));
            for x in [Weight::new(&vec![1; d.rank]), Weight::fundamental(d.rank, 0).scaled(-2)] {
                let r = weyl_ratio_sum(&d, &LaurentPoly::monomial(x)).unwrap();
                assert!(r.is_w0_invariant(&d));
            }
        }
    }

    #[test]
    fn weyl_ratio_sum_matches_termwise_evaluation() {
        let s = Specialization::q(int(9)).unwrap();
        for t in [RootType::A1, RootType::A2, RootType::B2] {
            let d = RootDatum::build(t);
            let coords: Vec<Q> = [rat(2, 3), rat(5, 7), rat(11, 13)][..d.rank].to_vec();
            let pt = TorusPoint::rational(&coords, s.clone()).unwrap();
            assert!(pt.is_regular(&d));
            for x in [Weight::zero(d.rank), Weight::new(&vec![1; d.rank]), Weight::fundamental(d.rank, 0).scaled(-1)] {
                let f = LaurentPoly::monomial(x);
                let exact = weyl_ratio_sum(&d, &f).unwrap().evaluate(&pt);
                let direct = weyl_ratio_sum_at(&d, &f, &pt).unwrap();
                assert_eq!(exact, direct, "{t} {x}");
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let d = RootDatum::build(RootType::A1);
        let one = LaurentPoly::one(1);
        assert_eq!(pairing_ab(&d, &one, &one).unwrap(), one);
        let d = RootDatum::build(RootType::B2);
        let a = &m(&[1, 0]) + &m(&[0, -2]);
        let b = &m(&[2, 1]) - &m(&[-1, 0]);
        let p = pairing_ab(&d, &a, &b).unwrap();
        assert_eq!(p, pairing_ab(&d, &b, &a).unwrap());
        assert!(p.is_w0_invariant(&d));
    }

    #[test]
    fn evaluation_examples() {
        let s = Specialization::q(int(4)).unwrap();
        let t = TorusPoint::rational(&[int(3)], s).unwrap();
        assert_eq!(LaurentPoly::one(1).evaluate(&t), QuadElt::rational(int(1)));
        let f = &m(&[1]) + &m(&[-1]);
        assert_eq!(f.evaluate(&t), QuadElt::rational(rat(10, 3)));
    }

    #[test]
    fn evaluation_transports_action() {
        let s = Specialization::q(int(-1)).unwrap();
        let d = RootDatum::build(RootType::A2);
        let t = TorusPoint::from_v_monomials(&[(int(2), 1), (rat(1, 3), -1)], s).unwrap();
        let f = &(&m(&[1, 0]) + &m(&[2, -1]).scale(&ScalarQ::v_pow(1))) - &m(&[0, -3]);
        for w in 0..d.order() {
            assert_eq!(f.act(&d, w).evaluate(&t), f.evaluate(&t.act(&d, d.inv(w))));
        }
    }

    #[test]
    fn regularity() {
        let s = Specialization::q(int(4)).unwrap();
        let d = RootDatum::build(RootType::A1);
        assert!(TorusPoint::rational(&[int(3)], s.clone()).unwrap().is_regular(&d));
        assert!(!TorusPoint::rational(&[int(-1)], s).unwrap().is_regular(&d));
    }
}
