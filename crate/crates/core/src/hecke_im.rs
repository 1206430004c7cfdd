//! The affine Hecke algebra on the basis `{T_u : u ∈ W}`, Kazhdan–Lusztig
//! polynomials, the bases `C_u`, `C'_u`, and conversion to the Bernstein form.
//!
//! Naming follows the convention `C_u = q^{-l(u)/2} Σ_{y ≤ u} P_{y,u}(q) T_y`,
//! so `T_s C = q C` and `T_s C' = -C'` for the longest finite element.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hecke_bernstein::{BernsteinAlgebra, HeckeElt};
use crate::laurent::LaurentPoly;
use crate::linalg::rank;
use crate::root_data::{Weight, W0};
use crate::scalar::{int, rat, ScalarQ, Specialization};
use crate::weyl_affine::{AffineWeyl, ExtAffineElt, Simple};

/// Polynomial in `q` with integer coefficients, lowest degree first.
pub type QPoly = Vec<i64>;

fn qpoly_trim(mut p: QPoly) -> QPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn qpoly_add_shifted(acc: &mut QPoly, p: &[i64], shift: usize, factor: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += factor * c;
    }
}

/// `Σ c_u T_u` over the extended affine Weyl group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IMHeckeElt {
    terms: BTreeMap<ExtAffineElt, ScalarQ>,
}

impl IMHeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(u: ExtAffineElt) -> Self {
        Self::term(u, ScalarQ::one())
    }

    pub fn term(u: ExtAffineElt, c: ScalarQ) -> Self {
        let mut out = Self::zero();
        out.add_term(u, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtAffineElt, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &ExtAffineElt) -> ScalarQ {
        self.terms.get(u).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, u: ExtAffineElt, c: &ScalarQ) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(u).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&u);
        }
    }

    pub fn add(&self, o: &IMHeckeElt) -> IMHeckeElt {
        let mut out = self.clone();
        for (u, c) in &o.terms {
            out.add_term(*u, c);
        }
        out
    }

    pub fn sub(&self, o: &IMHeckeElt) -> IMHeckeElt {
        self.add(&o.scale(&ScalarQ::from_int(-1)))
    }

    pub fn scale(&self, c: &ScalarQ) -> IMHeckeElt {
        let mut out = IMHeckeElt::zero();
        for (u, a) in &self.terms {
            out.add_term(*u, &(a * c));
        }
        out
    }
}

/// Memoized Kazhdan–Lusztig polynomials `P_{y,u}` for `l(u) ≤ bound`.
pub struct KLTable {
    aff: Arc<AffineWeyl>,
    bound: usize,
    polys: HashMap<(ExtAffineElt, ExtAffineElt), QPoly>,
    lower: HashMap<ExtAffineElt, Arc<Vec<ExtAffineElt>>>,
}

impl KLTable {
    pub fn new(aff: Arc<AffineWeyl>, bound: usize) -> Self {
        Self { aff, bound, polys: HashMap::new(), lower: HashMap::new() }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// All memoized entries in a deterministic order.
    pub fn entries(&self) -> Vec<((ExtAffineElt, ExtAffineElt), QPoly)> {
        let mut v: Vec<_> = self.polys.iter().map(|(k, p)| (*k, p.clone())).collect();
        v.sort();
        v
    }

    pub fn insert_entries(&mut self, entries: impl IntoIterator<Item = ((ExtAffineElt, ExtAffineElt), QPoly)>) {
        self.polys.extend(entries);
    }

    /// `{z : z ≤ w}`, using `{z ≤ w} = {z ≤ sw} ∪ s{z ≤ sw}` for `s ∈ L(w)`.
    pub fn lower_interval(&mut self, w: &ExtAffineElt) -> Arc<Vec<ExtAffineElt>> {
        if let Some(v) = self.lower.get(w) {
            return v.clone();
        }
        let aff = self.aff.clone();
        let out = if aff.length(w) == 0 {
            vec![*w]
        } else {
            let s = first_left_descent(&aff, w);
            let se = aff.simple(s);
            let sw = aff.mul(&se, w);
            let below = self.lower_interval(&sw);
            let set: BTreeSet<ExtAffineElt> = below.iter().flat_map(|z| [*z, aff.mul(&se, z)]).collect();
            set.into_iter().collect()
        };
        let out = Arc::new(out);
        self.lower.insert(*w, out.clone());
        out
    }

    /// `μ(z, w)`: coefficient of `q^{(l(w) - l(z) - 1)/2}` in `P_{z,w}`.
    pub fn mu(&mut self, z: &ExtAffineElt, w: &ExtAffineElt) -> Result<i64> {
        let (lz, lw) = (self.aff.length(z), self.aff.length(w));
        if lz >= lw || (lw - lz) % 2 == 0 {
            return Ok(0);
        }
        let p = self.polynomial(z, w)?;
        Ok(p.get((lw - lz - 1) / 2).copied().unwrap_or(0))
    }

    pub fn polynomial(&mut self, y: &ExtAffineElt, w: &ExtAffineElt) -> Result<QPoly> {
        let aff = self.aff.clone();
        let lw = aff.length(w);
        if lw > self.bound {
            return Err(Error::LengthBoundExceeded { length: lw, bound: self.bound });
        }
        if y == w {
            return Ok(vec![1]);
        }
        if !aff.bruhat_leq(y, w) {
            return Ok(vec![]);
        }
        if let Some(p) = self.polys.get(&(*y, *w)) {
            return Ok(p.clone());
        }
        let s = first_left_descent(&aff, w);
        let se = aff.simple(s);
        let v = aff.mul(&se, w);
        let sy = aff.mul(&se, y);
        let c = usize::from(aff.length(&sy) < aff.length(y));
        let mut p: QPoly = Vec::new();
        let a = self.polynomial(&sy, &v)?;
        qpoly_add_shifted(&mut p, &a, 1 - c, 1);
        let b = self.polynomial(y, &v)?;
        qpoly_add_shifted(&mut p, &b, c, 1);
        let interval = self.lower_interval(&v);
        for z in interval.iter() {
            if z == &v || aff.length(&aff.mul(&se, z)) > aff.length(z) || !aff.bruhat_leq(y, z) {
                continue;
            }
            let m = self.mu(z, &v)?;
            if m == 0 {
                continue;
            }
            let shift = (lw - aff.length(z)) / 2;
            let pz = self.polynomial(y, z)?;
            qpoly_add_shifted(&mut p, &pz, shift, -m);
        }
        let p = qpoly_trim(p);
        self.polys.insert((*y, *w), p.clone());
        Ok(p)
    }
}

fn first_left_descent(aff: &AffineWeyl, w: &ExtAffineElt) -> Simple {
    *aff.simples().iter().find(|&&s| aff.is_left_descent(w, s)).expect("positive length has a left descent")
}

/// `Σ_k c_k q^k` as an element of `Q[v, v^{-1}]`, evaluated at `q^{sign}`.
fn qpoly_to_scalar(p: &[i64], sign: i32) -> ScalarQ {
    let mut out = ScalarQ::zero();
    for (k, c) in p.iter().enumerate() {
        out.add_term(2 * sign * k as i32, &int(*c));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    C,
    CPrime,
}

/// Outcome of the truncated kernel statement for one flavor.
#[derive(Clone, Debug)]
pub struct KernelCheck {
    pub flavor: Flavor,
    pub max_len: usize,
    pub checked: usize,
    pub outside_y0: usize,
    pub nonzero_outside_y0: Vec<ExtAffineElt>,
    pub y0_count: usize,
    pub y0_rank: usize,
}

impl KernelCheck {
    pub fn holds(&self) -> bool {
        self.nonzero_outside_y0.is_empty() && self.y0_rank == self.y0_count
    }
}

/// Rank of Bernstein elements after specializing `v = 7/3`. Full rank there
/// implies linear independence over `Q(v)`.
pub fn specialized_rank(elts: &[HeckeElt]) -> usize {
    let spec = Specialization::sqrt_q(rat(7, 3)).expect("nonzero");
    let mut cols: BTreeMap<(W0, Weight), usize> = BTreeMap::new();
    for h in elts {
        for (w, f) in h.terms() {
            for (x, _) in f.terms() {
                let n = cols.len();
                cols.entry((*w, *x)).or_insert(n);
            }
        }
    }
    let field = &spec.field;
    let rows: Vec<Vec<_>> = elts
        .iter()
        .map(|h| {
            let mut row = vec![field.zero(); cols.len()];
            for (w, f) in h.terms() {
                for (x, c) in f.terms() {
                    row[cols[&(*w, *x)]] = c.specialize(&spec);
                }
            }
            row
        })
        .collect();
    rank(field, &rows, cols.len())
}

pub struct IMAlgebra {
    aff: Arc<AffineWeyl>,
    bern: BernsteinAlgebra,
    kl: KLTable,
    to_b: HashMap<ExtAffineElt, HeckeElt>,
    theta_im: HashMap<Weight, IMHeckeElt>,
}

impl IMAlgebra {
    pub fn new(aff: Arc<AffineWeyl>, bound: usize) -> Self {
        let bern = BernsteinAlgebra::new(aff.datum().clone());
        let kl = KLTable::new(aff.clone(), bound);
        Self { aff, bern, kl, to_b: HashMap::new(), theta_im: HashMap::new() }
    }

    pub fn affine(&self) -> &Arc<AffineWeyl> {
        &self.aff
    }

    pub fn bernstein(&self) -> &BernsteinAlgebra {
        &self.bern
    }

    pub fn kl(&mut self) -> &mut KLTable {
        &mut self.kl
    }

    /// `h · T_s`.
    pub fn mul_simple_right(&self, h: &IMHeckeElt, s: Simple) -> IMHeckeElt {
        let se = self.aff.simple(s);
        let mut out = IMHeckeElt::zero();
        for (u, c) in h.terms() {
            let us = self.aff.mul(u, &se);
            if self.aff.length(&us) > self.aff.length(u) {
                out.add_term(us, c);
            } else {
                out.add_term(*u, &(c * &ScalarQ::q_minus_one()));
                out.add_term(us, &(c * &ScalarQ::q_pow(1)));
            }
        }
        out
    }

    /// `T_s · h`.
    pub fn mul_simple_left(&self, s: Simple, h: &IMHeckeElt) -> IMHeckeElt {
        let se = self.aff.simple(s);
        let mut out = IMHeckeElt::zero();
        for (u, c) in h.terms() {
            let su = self.aff.mul(&se, u);
            if self.aff.length(&su) > self.aff.length(u) {
                out.add_term(su, c);
            } else {
                out.add_term(*u, &(c * &ScalarQ::q_minus_one()));
                out.add_term(su, &(c * &ScalarQ::q_pow(1)));
            }
        }
        out
    }

    fn mul_omega_right(&self, h: &IMHeckeElt, omega: &ExtAffineElt) -> IMHeckeElt {
        let mut out = IMHeckeElt::zero();
        for (u, c) in h.terms() {
            out.add_term(self.aff.mul(u, omega), c);
        }
        out
    }

    pub fn mul(&self, a: &IMHeckeElt, b: &IMHeckeElt) -> IMHeckeElt {
        let mut out = IMHeckeElt::zero();
        for (u, c) in b.terms() {
            let word = self.aff.reduced_word(u);
            let mut h = self.mul_omega_right(a, &word.omega);
            for &s in &word.letters {
                h = self.mul_simple_right(&h, s);
            }
            out = out.add(&h.scale(c));
        }
        out
    }

    /// `T_u^{-1}`, from `T_s^{-1} = q^{-1} T_s + (q^{-1} - 1)` and `T_ω^{-1} = T_{ω^{-1}}`.
    pub fn t_inverse(&self, u: &ExtAffineElt) -> IMHeckeElt {
        let word = self.aff.reduced_word(u);
        let mut h = IMHeckeElt::basis(self.aff.identity());
        let qinv = ScalarQ::q_pow(-1);
        let qinv_m1 = &qinv - &ScalarQ::one();
        for &s in word.letters.iter().rev() {
            h = self.mul_simple_right(&h, s).scale(&qinv).add(&h.scale(&qinv_m1));
        }
        self.mul_omega_right(&h, &self.aff.inv(&word.omega))
    }

    pub fn c_basis(&mut self, u: &ExtAffineElt, flavor: Flavor) -> Result<IMHeckeElt> {
        let lu = self.aff.length(u) as i32;
        let interval = self.kl.lower_interval(u);
        let mut out = IMHeckeElt::zero();
        for y in interval.iter() {
            let p = self.kl.polynomial(y, u)?;
            if p.is_empty() {
                continue;
            }
            let ly = self.aff.length(y) as i32;
            let c = match flavor {
                Flavor::C => ScalarQ::v_pow(-lu) * qpoly_to_scalar(&p, 1),
                Flavor::CPrime => {
                    let sign = if (lu - ly) % 2 == 0 { 1 } else { -1 };
                    (ScalarQ::v_pow(lu - 2 * ly) * qpoly_to_scalar(&p, -1)).scale(&int(sign))
                }
            };
            out.add_term(*y, &c);
        }
        Ok(out)
    }

    /// `T_{w}^{-1}` for `w ∈ W_0`, in Bernstein form.
    fn finite_inverse_bernstein(&self, w: W0) -> HeckeElt {
        let d = self.aff.datum();
        let qinv = ScalarQ::q_pow(-1);
        let qinv_m1 = &qinv - &ScalarQ::one();
        let mut h = self.bern.one();
        for &s in d.weyl[w].word.iter().rev() {
            h = self.bern.mul_ts_right(&h, s).scale(&qinv).add(&h.scale(&qinv_m1));
        }
        h
    }

    /// `T_u = q^{l(t_x)/2} θ_x T_{w^{-1}}^{-1}` for `u = t_x w` with `x` dominant
    /// and `l(t_x) = l(u) + l(w^{-1})`.
    fn generator_to_bernstein(&self, u: &ExtAffineElt) -> Result<HeckeElt> {
        let d = self.aff.datum();
        let lt = self.aff.length(&self.aff.translation(u.x));
        if !u.x.is_dominant() || lt != self.aff.length(u) + d.length(u.w) {
            return Err(Error::Mismatch(format!("no dominant factorization for {u:?}")));
        }
        let theta = self.bern.from_theta(&LaurentPoly::term(u.x, ScalarQ::v_pow(lt as i32)));
        Ok(self.bern.mul(&theta, &self.finite_inverse_bernstein(d.inv(u.w))))
    }

    fn t_to_bernstein(&mut self, u: &ExtAffineElt) -> Result<HeckeElt> {
        if let Some(h) = self.to_b.get(u) {
            return Ok(h.clone());
        }
        let h = if self.aff.length(u) == 0 {
            self.generator_to_bernstein(u)?
        } else {
            let word = self.aff.reduced_word(u);
            let s = *word.letters.last().unwrap();
            let prefix = self.aff.mul(u, &self.aff.simple(s));
            let p = self.t_to_bernstein(&prefix)?;
            let ts = match s {
                Simple::Finite(i) => self.bern.t_simple(i),
                Simple::Affine => self.generator_to_bernstein(&self.aff.simple(s))?,
            };
            self.bern.mul(&p, &ts)
        };
        self.to_b.insert(*u, h.clone());
        Ok(h)
    }

    pub fn to_bernstein(&mut self, h: &IMHeckeElt) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero();
        for (u, c) in h.terms() {
            out = out.add(&self.t_to_bernstein(u)?.scale(c));
        }
        Ok(out)
    }

    /// `θ_x = q^{-l(t_y)/2} T_{t_y} q^{l(t_z)/2} T_{t_z}^{-1}` with `y, z`
    /// dominant and `x = y - z`.
    pub fn theta_in_im(&mut self, x: &Weight) -> IMHeckeElt {
        if let Some(h) = self.theta_im.get(x) {
            return h.clone();
        }
        let n = self.aff.rank();
        let y = Weight::new(&(0..n).map(|i| x.get(i).max(0)).collect::<Vec<_>>());
        let z = y - *x;
        let ty = self.aff.translation(y);
        let tz = self.aff.translation(z);
        let c = ScalarQ::v_pow(self.aff.length(&tz) as i32 - self.aff.length(&ty) as i32);
        let h = self.mul(&IMHeckeElt::basis(ty), &self.t_inverse(&tz)).scale(&c);
        self.theta_im.insert(*x, h.clone());
        h
    }

    pub fn from_bernstein(&mut self, h: &HeckeElt) -> IMHeckeElt {
        let mut out = IMHeckeElt::zero();
        for (w, f) in h.terms() {
            let tw = IMHeckeElt::basis(self.aff.finite(*w));
            let mut theta = IMHeckeElt::zero();
            for (x, c) in f.terms() {
                theta = theta.add(&self.theta_in_im(x).scale(c));
            }
            out = out.add(&self.mul(&tw, &theta));
        }
        out
    }

    /// For every `u` with `l(u) ≤ max_len`: `X_u · Y = 0` when `u ∉ Y_0`, and
    /// the `X_u · Y` for `u ∈ Y_0` are independent, where `(X, Y)` is
    /// `(C_u, C')` or `(C'_u, C)`.
    pub fn kernel_check(&mut self, max_len: usize, flavor: Flavor) -> Result<KernelCheck> {
        let (right, left_flavor) = match flavor {
            Flavor::C => (self.bern.cprime_element(), Flavor::C),
            Flavor::CPrime => (self.bern.c_element(), Flavor::CPrime),
        };
        let y0 = self.aff.enumerate_y0(max_len);
        let mut by_t: HashMap<ExtAffineElt, HeckeElt> = HashMap::new();
        let mut nonzero_outside = Vec::new();
        let mut images = Vec::new();
        let mut checked = 0;
        let mut outside = 0;
        for u in self.aff.ball(max_len).into_iter().flatten() {
            let cu = self.c_basis(&u, left_flavor)?;
            let mut image = HeckeElt::zero();
            for (y, c) in cu.terms() {
                if !by_t.contains_key(y) {
                    let ty = self.t_to_bernstein(y)?;
                    by_t.insert(*y, self.bern.mul(&ty, &right));
                }
                image = image.add(&by_t[y].scale(c));
            }
            checked += 1;
            if y0.contains(&u) {
                images.push(image);
            } else {
                outside += 1;
                if !image.is_zero() {
                    nonzero_outside.push(u);
                }
            }
        }
        let y0_rank = specialized_rank(&images);
        Ok(KernelCheck {
            flavor,
            max_len,
            checked,
            outside_y0: outside,
            nonzero_outside_y0: nonzero_outside,
            y0_count: images.len(),
            y0_rank,
        })
    }

    /// Ranks of `{θ_x C}` and `{θ_x C'}` over the weight box of radius `r`,
    /// together with the number of weights.
    pub fn cell_module_ranks(&self, r: i32) -> (usize, usize, usize) {
        let c = self.bern.c_element();
        let cp = self.bern.cprime_element();
        let weights = self.aff.weight_box(r);
        let a: Vec<HeckeElt> = weights.iter().map(|x| self.bern.mul(&self.bern.theta_of(*x), &c)).collect();
        let b: Vec<HeckeElt> = weights.iter().map(|x| self.bern.mul(&self.bern.theta_of(*x), &cp)).collect();
        (weights.len(), specialized_rank(&a), specialized_rank(&b))
    }
}
