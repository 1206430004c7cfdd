//! The affine Hecke algebra in Bernstein form. Elements are kept in the
//! normal form `Σ_{w ∈ W_0} T_w f_w` with `f_w ∈ Θ` on the right, and
//! products use the commutation rule
//! `f T_s = T_s s(f) + (q - 1)(f - s(f)) / (1 - θ_{-α_s})`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::laurent::{weyl_ratio_sum, LaurentPoly};
use crate::root_data::{RootDatum, Weight, W0};
use crate::scalar::ScalarQ;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HeckeElt {
    coeffs: BTreeMap<W0, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `T_w f`.
    pub fn term(w: W0, f: LaurentPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !f.is_zero() {
            coeffs.insert(w, f);
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: W0) -> LaurentPoly {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&W0, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, w: W0, f: &LaurentPoly) {
        if f.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w).or_default();
        *e += f;
        if e.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn add(&self, o: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, f) in &o.coeffs {
            out.add_term(*w, f);
        }
        out
    }

    pub fn sub(&self, o: &HeckeElt) -> HeckeElt {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> HeckeElt {
        self.scale(&ScalarQ::from_int(-1))
    }

    pub fn scale(&self, c: &ScalarQ) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, f) in &self.coeffs {
            out.add_term(*w, &f.scale(c));
        }
        out
    }

    /// `h · g` for `g ∈ Θ`.
    pub fn mul_theta_right(&self, g: &LaurentPoly) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, f) in &self.coeffs {
            out.add_term(*w, &(f * g));
        }
        out
    }

    /// The coefficient of `T_e` when `h ∈ Θ`, else `None`.
    pub fn as_theta(&self) -> Option<LaurentPoly> {
        match self.coeffs.len() {
            0 => Some(LaurentPoly::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// First `(w, f_w, g_w)` where the two normal forms differ.
    pub fn first_difference(&self, o: &HeckeElt) -> Option<(W0, LaurentPoly, LaurentPoly)> {
        let keys: std::collections::BTreeSet<W0> = self.coeffs.keys().chain(o.coeffs.keys()).copied().collect();
        keys.into_iter().map(|w| (w, self.coeff(w), o.coeff(w))).find(|(_, a, b)| a != b)
    }

    /// Canonical text: `T[w] * (f_w)` for each nonzero coefficient in index order.
    pub fn to_canonical_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs.iter().map(|(w, f)| format!("T[{w}]*({f})")).collect::<Vec<_>>().join(" + ")
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

/// The sandwich identities relating `C`, `C′`, `θ_{±ρ}`, `A` and `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    /// `C θ_x C = v^{-ν} W(θ_x) C`.
    SphericalSandwich(Weight),
    /// `C′ θ_{-ρ} C = C′ B`.
    CprimeThetaMinusRhoC,
    /// `C′ θ_ρ C = C′ A`.
    CprimeThetaRhoC,
    /// `C θ_{-ρ} C′ = B C′`.
    CThetaMinusRhoCprime,
    /// `C θ_ρ C′ = A C′`.
    CThetaRhoCprime,
}

impl Formula {
    pub const FIXED: [Formula; 4] = [
        Formula::CprimeThetaMinusRhoC,
        Formula::CprimeThetaRhoC,
        Formula::CThetaMinusRhoCprime,
        Formula::CThetaRhoCprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::SphericalSandwich(_) => "spherical-sandwich",
            Formula::CprimeThetaMinusRhoC => "cprime-theta-minus-rho-c",
            Formula::CprimeThetaRhoC => "cprime-theta-rho-c",
            Formula::CThetaMinusRhoCprime => "c-theta-minus-rho-cprime",
            Formula::CThetaRhoCprime => "c-theta-rho-cprime",
        }
    }
}

/// Result of comparing the two sides of an identity in normal form.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: HeckeElt,
    pub rhs: HeckeElt,
    pub holds: bool,
    pub first_difference: Option<String>,
}

impl IdentityCheck {
    fn new(label: String, lhs: HeckeElt, rhs: HeckeElt) -> Self {
        let diff = lhs.first_difference(&rhs).map(|(w, a, b)| format!("coefficient of T[{w}]: {a} vs {b}"));
        Self { label, holds: diff.is_none(), first_difference: diff, lhs, rhs }
    }
}

/// `(I ⊆ R⁺) ↦ (|I|, α_I)` for all subsets.
fn subset_sums(datum: &RootDatum) -> Vec<(usize, Weight)> {
    let nu = datum.nu;
    (0u32..(1 << nu))
        .map(|mask| {
            let mut sum = Weight::zero(datum.rank);
            for k in 0..nu {
                if mask & (1 << k) != 0 {
                    sum = sum + datum.positive_roots[k];
                }
            }
            (mask.count_ones() as usize, sum)
        })
        .collect()
}

pub struct BernsteinAlgebra {
    datum: Arc<RootDatum>,
}

impl BernsteinAlgebra {
    pub fn new(datum: Arc<RootDatum>) -> Self {
        Self { datum }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn one(&self) -> HeckeElt {
        HeckeElt::term(0, LaurentPoly::one(self.rank()))
    }

    pub fn t(&self, w: W0) -> HeckeElt {
        HeckeElt::term(w, LaurentPoly::one(self.rank()))
    }

    pub fn t_simple(&self, s: usize) -> HeckeElt {
        self.t(self.datum.simple(s))
    }

    /// `θ_x` as `T_e θ_x`.
    pub fn theta_of(&self, x: Weight) -> HeckeElt {
        HeckeElt::term(0, LaurentPoly::monomial(x))
    }

    pub fn from_theta(&self, f: &LaurentPoly) -> HeckeElt {
        HeckeElt::term(0, f.clone())
    }

    /// `(f - s(f)) / (1 - θ_{-α_s})`, computed monomial by monomial.
    pub fn demazure_quotient(&self, f: &LaurentPoly, s: usize) -> LaurentPoly {
        let alpha = self.datum.simple_roots[s];
        let mut out = LaurentPoly::zero();
        for (x, c) in f.terms() {
            let k = x.get(s);
            if k > 0 {
                for j in 0..k {
                    out.add_term(*x - alpha.scaled(j), c);
                }
            } else if k < 0 {
                let neg = -c;
                for j in 1..=-k {
                    out.add_term(*x + alpha.scaled(j), &neg);
                }
            }
        }
        out
    }

    /// `T_w T_s` in the finite Hecke algebra, as `(w', coefficient)` pairs.
    fn finite_right(&self, w: W0, s: usize) -> Vec<(W0, ScalarQ)> {
        let ws = self.datum.mul(w, self.datum.simple(s));
        if self.datum.length(ws) > self.datum.length(w) {
            vec![(ws, ScalarQ::one())]
        } else {
            vec![(w, ScalarQ::q_minus_one()), (ws, ScalarQ::q_pow(1))]
        }
    }

    fn finite_left(&self, s: usize, w: W0) -> Vec<(W0, ScalarQ)> {
        let sw = self.datum.mul(self.datum.simple(s), w);
        if self.datum.length(sw) > self.datum.length(w) {
            vec![(sw, ScalarQ::one())]
        } else {
            vec![(w, ScalarQ::q_minus_one()), (sw, ScalarQ::q_pow(1))]
        }
    }

    /// `h · T_s`.
    pub fn mul_ts_right(&self, h: &HeckeElt, s: usize) -> HeckeElt {
        let sw = self.datum.simple(s);
        let qm1 = ScalarQ::q_minus_one();
        let mut out = HeckeElt::zero();
        for (w, f) in h.terms() {
            let sf = f.act(&self.datum, sw);
            for (u, c) in self.finite_right(*w, s) {
                out.add_term(u, &sf.scale(&c));
            }
            out.add_term(*w, &self.demazure_quotient(f, s).scale(&qm1));
        }
        out
    }

    /// `T_s · h`.
    pub fn mul_ts_left(&self, s: usize, h: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, f) in h.terms() {
            for (u, c) in self.finite_left(s, *w) {
                out.add_term(u, &f.scale(&c));
            }
        }
        out
    }

    /// `a · b`, using `a T_u` for every `u` in the support of `b`, built up
    /// along shortlex reduced words.
    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        let mut cache: HashMap<W0, HeckeElt> = HashMap::new();
        cache.insert(0, a.clone());
        let mut out = HeckeElt::zero();
        for (u, g) in b.terms() {
            let au = self.right_by_t(&mut cache, *u);
            out = out.add(&au.mul_theta_right(g));
        }
        out
    }

    fn right_by_t(&self, cache: &mut HashMap<W0, HeckeElt>, u: W0) -> HeckeElt {
        if let Some(h) = cache.get(&u) {
            return h.clone();
        }
        let word = &self.datum.weyl[u].word;
        let s = *word.last().unwrap();
        let parent = self.datum.mul(u, self.datum.simple(s));
        let p = self.right_by_t(cache, parent);
        let h = self.mul_ts_right(&p, s);
        cache.insert(u, h.clone());
        h
    }

    pub fn mul3(&self, a: &HeckeElt, b: &HeckeElt, c: &HeckeElt) -> HeckeElt {
        self.mul(&self.mul(a, b), c)
    }

    /// `C = q^{-ν/2} Σ_y T_y`.
    pub fn c_element(&self) -> HeckeElt {
        let d = &self.datum;
        let c = ScalarQ::v_pow(-(d.nu as i32));
        let mut out = HeckeElt::zero();
        for y in 0..d.order() {
            out.add_term(y, &LaurentPoly::constant(d.rank, c.clone()));
        }
        out
    }

    /// `C' = q^{ν/2} Σ_y (-1)^{ν - l(y)} q^{-l(y)} T_y`.
    pub fn cprime_element(&self) -> HeckeElt {
        let d = &self.datum;
        let nu = d.nu as i32;
        let mut out = HeckeElt::zero();
        for y in 0..d.order() {
            let l = d.length(y) as i32;
            let sign = if (nu - l) % 2 == 0 { 1 } else { -1 };
            let c = ScalarQ::v_pow(nu - 2 * l).scale(&crate::scalar::int(sign));
            out.add_term(y, &LaurentPoly::constant(d.rank, c));
        }
        out
    }

    /// `q^{ν/2} Σ_{I ⊆ R⁺} (-q)^{-|I|} θ_ρ θ_{-α_I}`.
    pub fn a_element_sum(&self) -> LaurentPoly {
        let d = &self.datum;
        let nu = d.nu as i32;
        let mut out = LaurentPoly::zero();
        for (k, sum) in subset_sums(d) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = ScalarQ::v_pow(nu - 2 * k as i32).scale(&crate::scalar::int(sign));
            out.add_term(d.rho - sum, &c);
        }
        out
    }

    /// `(-1)^ν q^{-ν/2} θ_ρ^{-1} Π_{α > 0}(1 - q θ_α)`.
    pub fn a_element_product(&self) -> LaurentPoly {
        let d = &self.datum;
        let sign = if d.nu.is_multiple_of(2) { 1 } else { -1 };
        crate::laurent::q_numerator(d)
            .shift(&-d.rho)
            .scale(&ScalarQ::v_pow(-(d.nu as i32)).scale(&crate::scalar::int(sign)))
    }

    /// The element `A`, with both closed forms computed and compared.
    pub fn a_element(&self) -> Result<LaurentPoly> {
        let a = self.a_element_sum();
        let b = self.a_element_product();
        if a != b {
            return Err(Error::Mismatch(format!("A: subset sum {a} vs product {b}")));
        }
        Ok(a)
    }

    /// `q^{-ν/2} Σ_{I ⊆ R⁺} (-q)^{|I|} θ_{-ρ} θ_{α_I}`, the Θ-factor of formulas (2) and (4).
    pub fn b_element(&self) -> LaurentPoly {
        let d = &self.datum;
        let nu = d.nu as i32;
        let mut out = LaurentPoly::zero();
        for (k, sum) in subset_sums(d) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = ScalarQ::v_pow(2 * k as i32 - nu).scale(&crate::scalar::int(sign));
            out.add_term(sum - d.rho, &c);
        }
        out
    }

    /// The anti-automorphism fixing every `T_s` and `θ_x`:
    /// `T_w f ↦ f T_{w^{-1}}`.
    pub fn tilde(&self, h: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, f) in h.terms() {
            out = out.add(&self.mul(&self.from_theta(f), &self.t(self.datum.inv(*w))));
        }
        out
    }

    /// `T_w^*` for `T_s^* = q - 1 - T_s`.
    fn star_t(&self, w: W0) -> HeckeElt {
        let mut h = self.one();
        for &s in &self.datum.weyl[w].word {
            let shifted = h.scale(&ScalarQ::q_minus_one());
            h = shifted.sub(&self.mul_ts_right(&h, s));
        }
        h
    }

    /// The automorphism `T_s ↦ q - 1 - T_s`, `θ_x ↦ θ_{-x}`.
    pub fn star(&self, h: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, f) in h.terms() {
            out = out.add(&self.star_t(*w).mul_theta_right(&f.invert_weights()));
        }
        out
    }

    /// Commutes with every `T_s` and every `θ_{x_i}`.
    pub fn is_central(&self, h: &HeckeElt) -> bool {
        let n = self.rank();
        (0..n).all(|s| {
            let t = self.t_simple(s);
            self.mul(&t, h) == self.mul(h, &t)
        }) && (0..n).all(|i| {
            let th = self.theta_of(Weight::fundamental(n, i));
            self.mul(&th, h) == self.mul(h, &th)
        })
    }

    /// `e_w = w(Σ_{α_i : w(α_i) < 0} x_i)`.
    pub fn steinberg_e(&self, w: W0) -> Weight {
        steinberg_e(&self.datum, w)
    }

    pub fn verify(&self, f: Formula) -> Result<IdentityCheck> {
        let d = &self.datum;
        let nu = d.nu as i32;
        let c = self.c_element();
        let cp = self.cprime_element();
        let rho = d.rho;
        let label = f.name().to_string();
        let check = match f {
            Formula::SphericalSandwich(x) => {
                let lhs = self.mul3(&c, &self.theta_of(x), &c);
                let z = weyl_ratio_sum(d, &LaurentPoly::monomial(x))?.scale(&ScalarQ::v_pow(-nu));
                let rhs = self.mul(&self.from_theta(&z), &c);
                IdentityCheck::new(format!("{label} x={x}"), lhs, rhs)
            }
            Formula::CprimeThetaMinusRhoC => {
                let lhs = self.mul3(&cp, &self.theta_of(-rho), &c);
                let rhs = self.mul(&cp, &self.from_theta(&self.b_element()));
                IdentityCheck::new(label, lhs, rhs)
            }
            Formula::CprimeThetaRhoC => {
                let lhs = self.mul3(&cp, &self.theta_of(rho), &c);
                let rhs = self.mul(&cp, &self.from_theta(&self.a_element()?));
                IdentityCheck::new(label, lhs, rhs)
            }
            Formula::CThetaMinusRhoCprime => {
                let lhs = self.mul3(&c, &self.theta_of(-rho), &cp);
                let rhs = self.mul(&self.from_theta(&self.b_element()), &cp);
                IdentityCheck::new(label, lhs, rhs)
            }
            Formula::CThetaRhoCprime => {
                let lhs = self.mul3(&c, &self.theta_of(rho), &cp);
                let rhs = self.mul(&self.from_theta(&self.a_element()?), &cp);
                IdentityCheck::new(label, lhs, rhs)
            }
        };
        Ok(check)
    }

    /// Finds `c` with `a = c · b` when `b ≠ 0`, comparing the first nonzero
    /// coefficient of `b` and then checking the whole element.
    pub fn scalar_ratio(&self, a: &HeckeElt, b: &HeckeElt) -> Option<ScalarQ> {
        let (w, bf) = b.terms().next()?;
        let af = a.coeff(*w);
        let (x, bc) = bf.terms().next()?;
        let ac = af.coeff(x);
        let c = ac.div_unit(bc)?;
        (b.scale(&c) == *a).then_some(c)
    }

    /// `C'θ_{-ρ}C` against `C'θ_ρC`: the scalar relating them, if any.
    pub fn cprime_rho_relation(&self) -> (HeckeElt, HeckeElt, Option<ScalarQ>) {
        let c = self.c_element();
        let cp = self.cprime_element();
        let lhs = self.mul3(&cp, &self.theta_of(-self.datum.rho), &c);
        let rhs = self.mul3(&cp, &self.theta_of(self.datum.rho), &c);
        let ratio = self.scalar_ratio(&lhs, &rhs);
        (lhs, rhs, ratio)
    }

    /// `C θ_I C'` for `θ_I = Π_{i ∈ I} θ_{x_i}`, one entry per subset of simple roots.
    pub fn c_theta_subset_cprime(&self) -> Vec<(Vec<usize>, HeckeElt)> {
        let n = self.rank();
        let c = self.c_element();
        let cp = self.cprime_element();
        (0u32..(1 << n))
            .map(|mask| {
                let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let x = idx.iter().fold(Weight::zero(n), |acc, &i| acc + Weight::fundamental(n, i));
                (idx, self.mul3(&c, &self.theta_of(x), &cp))
            })
            .collect()
    }
}

/// `e_w = w(Σ_{α_i : w(α_i) < 0} x_i)`.
pub fn steinberg_e(datum: &RootDatum, w: W0) -> Weight {
    let n = datum.rank;
    let mut x = Weight::zero(n);
    for i in 0..n {
        if !datum.maps_positive(w, datum.simple_root_index(i)) {
            x = x + Weight::fundamental(n, i);
        }
    }
    datum.act(w, &x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::RootType;

    fn alg(t: RootType) -> BernsteinAlgebra {
        BernsteinAlgebra::new(Arc::new(RootDatum::build(t)))
    }

    #[test]
    fn quadratic_relation() {
        for t in [RootType::A1, RootType::B2, RootType::G2] {
            let h = alg(t);
            for s in 0..h.rank() {
                let ts = h.t_simple(s);
                let expected = ts.scale(&ScalarQ::q_minus_one()).add(&h.one().scale(&ScalarQ::q_pow(1)));
                assert_eq!(h.mul(&ts, &ts), expected);
            }
        }
    }

    #[test]
    fn rank_one_commutation() {
        let h = alg(RootType::A1);
        let x = Weight::new(&[1]);
        let ts = h.t_simple(0);
        let lhs = h.mul(&ts, &h.theta_of(x)).sub(&h.mul(&h.theta_of(-x), &ts));
        let rhs = h.theta_of(x).scale(&ScalarQ::q_minus_one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_is_a_group_algebra() {
        let h = alg(RootType::A2);
        let x = Weight::new(&[2, -1]);
        let y = Weight::new(&[-1, 3]);
        assert_eq!(h.mul(&h.theta_of(x), &h.theta_of(y)), h.theta_of(x + y));
        assert_eq!(h.mul(&h.theta_of(x), &h.theta_of(-x)), h.one());
    }

    #[test]
    fn c_and_cprime_eigen_relations() {
        for t in [RootType::A1, RootType::A2, RootType::B2, RootType::G2] {
            let h = alg(t);
            let c = h.c_element();
            let cp = h.cprime_element();
            for s in 0..h.rank() {
                let ts = h.t_simple(s);
                assert_eq!(h.mul(&ts, &c), c.scale(&ScalarQ::q_pow(1)));
                assert_eq!(h.mul(&c, &ts), c.scale(&ScalarQ::q_pow(1)));
                assert_eq!(h.mul(&ts, &cp), cp.neg());
                assert_eq!(h.mul(&cp, &ts), cp.neg());
            }
        }
    }

    #[test]
    fn c_squared() {
        let h = alg(RootType::A1);
        let c = h.c_element();
        // C^2 = v^{-1}(1 + q) C
        let k = ScalarQ::v_pow(-1) * (ScalarQ::one() + ScalarQ::q_pow(1));
        assert_eq!(h.mul(&c, &c), c.scale(&k));
    }

    #[test]
    fn a_element_forms_agree() {
        for (t, terms) in [(RootType::A1, 2), (RootType::A2, 8), (RootType::B2, 16), (RootType::G2, 64)] {
            let h = alg(t);
            assert_eq!(subset_sums(&h.datum).len(), terms);
            h.a_element().unwrap();
        }
    }

    #[test]
    fn c_theta_rho_cprime_rank_one_by_hand() {
        let h = alg(RootType::A1);
        let rho = Weight::new(&[1]);
        let a = &LaurentPoly::term(rho, ScalarQ::v_pow(1)) - &LaurentPoly::term(-rho, ScalarQ::v_pow(-1));
        assert_eq!(h.a_element().unwrap(), a);
        assert!(h.verify(Formula::CThetaRhoCprime).unwrap().holds);
    }

    #[test]
    fn formulas_hold_in_rank_two() {
        for t in [RootType::A1, RootType::A2, RootType::B2] {
            let h = alg(t);
            for f in Formula::FIXED.into_iter().chain([Formula::SphericalSandwich(Weight::zero(h.rank()))]) {
                let r = h.verify(f).unwrap();
                assert!(r.holds, "{t} {}: {:?}", r.label, r.first_difference);
            }
            let x = Weight::new(&vec![1; h.rank()]).scaled(-1);
            assert!(h.verify(Formula::SphericalSandwich(x)).unwrap().holds);
        }
    }

    #[test]
    fn proper_subsets_kill() {
        for t in [RootType::A1, RootType::A2, RootType::B2] {
            let h = alg(t);
            for (idx, e) in h.c_theta_subset_cprime() {
                assert_eq!(e.is_zero(), idx.len() < h.rank(), "{t} {idx:?}");
            }
        }
    }

    #[test]
    fn involutions() {
        for t in [RootType::A1, RootType::A2, RootType::B2] {
            let h = alg(t);
            let c = h.c_element();
            let cp = h.cprime_element();
            assert_eq!(h.tilde(&c), c);
            assert_eq!(h.tilde(&cp), cp);
            let sign = ScalarQ::from_int(if h.datum.nu.is_multiple_of(2) { 1 } else { -1 });
            assert_eq!(h.star(&c), cp.scale(&sign));
            let x = h.mul(&h.t_simple(0), &h.theta_of(Weight::fundamental(h.rank(), h.rank() - 1)));
            let y = h.mul(&h.theta_of(Weight::fundamental(h.rank(), 0).scaled(-1)), &h.t(h.datum.longest));
            assert_eq!(h.star(&h.star(&x)), x);
            assert_eq!(h.tilde(&h.tilde(&y)), y);
            assert_eq!(h.tilde(&h.mul(&x, &y)), h.mul(&h.tilde(&y), &h.tilde(&x)));
            assert_eq!(h.star(&h.mul(&x, &y)), h.mul(&h.star(&x), &h.star(&y)));
        }
    }

    #[test]
    fn center() {
        let h = alg(RootType::A1);
        let x = Weight::new(&[1]);
        assert!(!h.is_central(&h.theta_of(x)));
        assert!(h.is_central(&h.theta_of(x).add(&h.theta_of(-x))));
        let h = alg(RootType::B2);
        let x = Weight::new(&[1, 0]);
        let orbit: LaurentPoly = (0..h.datum.order())
            .map(|w| h.datum.act(w, &x))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .fold(LaurentPoly::zero(), |acc, y| &acc + &LaurentPoly::monomial(y));
        assert!(h.is_central(&h.from_theta(&orbit)));
    }

    #[test]
    fn steinberg_weights() {
        let h = alg(RootType::A1);
        assert_eq!(h.steinberg_e(0), Weight::new(&[0]));
        assert_eq!(h.steinberg_e(1), Weight::new(&[-1]));
        let h = alg(RootType::A2);
        let w0 = h.datum.longest;
        assert_eq!(h.steinberg_e(w0), h.datum.act(w0, &Weight::new(&[1, 1])));
        assert_eq!(h.steinberg_e(w0), Weight::new(&[-1, -1]));
    }
}
