//! Central-character quotients `H_t = H / Z_t`: reduction of `Θ` onto the
//! Steinberg basis, explicit `|W_0|^2`-dimensional models with left and right
//! actions, and the ideal, module and irreducibility computations built on them.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke_bernstein::{steinberg_e, BernsteinAlgebra, HeckeElt};
use crate::laurent::{pairing_ab, weyl_ratio_sum, LaurentPoly, TorusPoint};
use crate::linalg::{inverse, mat_vec, nullspace, EchelonBasis, Matrix};
use crate::ratfn::{RatFn, RatFnField};
use crate::root_data::{RootDatum, Weight};
use crate::scalar::{int, rat, QuadElt, QuadField, ScalarQ, Specialization, Q};

/// How `Θ` is reduced modulo `ker φ_t · Θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reduction {
    /// Solve the orbit-evaluation system at `t`; needs `t` regular.
    Regular,
    /// Solve along the curve `s ↦ t·s^{2ρ∨}` over `k(s)` and evaluate at `s = 1`.
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
    Both,
}

/// `t_i = v^{<x_i, 2ρ∨>}`, so that `α(t) = q` for every simple root.
pub fn principal_point(datum: &RootDatum, spec: &Specialization) -> TorusPoint {
    let coords: Vec<(Q, i32)> = datum.two_rho_vee.iter().map(|&a| (int(1), a)).collect();
    TorusPoint::from_v_monomials(&coords, spec.clone()).expect("powers of v are invertible")
}

/// All weights with coordinates in `[-r, r]`.
pub fn weight_box(rank: usize, r: i32) -> Vec<Weight> {
    let side = 2 * r + 1;
    (0..side.pow(rank as u32))
        .map(|mut k| {
            let mut c = vec![0; rank];
            for x in c.iter_mut() {
                *x = k % side - r;
                k /= side;
            }
            Weight::new(&c)
        })
        .collect()
}

/// Writes an element of `k = Q[v]/(v^2 - q0)` as a scalar `a + b v`.
pub fn lift_scalar(spec: &Specialization, x: &QuadElt) -> ScalarQ {
    if x.b.is_zero() {
        return ScalarQ::constant(x.a.clone());
    }
    debug_assert!(!spec.v.is_rational());
    &ScalarQ::constant(x.a.clone()) + &ScalarQ::monomial(x.b.clone(), 1)
}

enum Solver {
    Regular(Matrix<QuadElt>),
    Generic(RatFnField, Matrix<RatFn>),
}

/// Coordinates of `θ_x` modulo `ker φ_t · Θ` in the basis `{θ_{e_u}}`.
pub struct ThetaReducer {
    datum: Arc<RootDatum>,
    t: TorusPoint,
    method: Reduction,
    e: Vec<Weight>,
    solver: Solver,
    memo: Mutex<HashMap<Weight, Vec<QuadElt>>>,
}

impl ThetaReducer {
    pub fn new(datum: Arc<RootDatum>, t: TorusPoint, method: Reduction) -> Result<Self> {
        let n = datum.order();
        let e: Vec<Weight> = (0..n).map(|u| steinberg_e(&datum, u)).collect();
        let field = t.spec.field.clone();
        let solver = match method {
            Reduction::Regular => {
                if !t.is_regular(&datum) {
                    return Err(Error::NonRegularPoint);
                }
                let m: Matrix<QuadElt> = (0..n)
                    .map(|w| {
                        let wi = datum.inv(w);
                        e.iter().map(|y| t.character(&datum.act(wi, y))).collect()
                    })
                    .collect();
                Solver::Regular(inverse(&field, &m).ok_or(Error::NonRegularPoint)?)
            }
            Reduction::Generic => {
                let k = RatFnField::new(field.clone());
                let m: Matrix<RatFn> = (0..n)
                    .map(|w| {
                        let wi = datum.inv(w);
                        e.iter()
                            .map(|y| {
                                let z = datum.act(wi, y);
                                RatFn::laurent_monomial(&field, t.character(&z), z.dot(&datum.two_rho_vee) as i64)
                            })
                            .collect()
                    })
                    .collect();
                let inv = inverse(&k, &m)
                    .ok_or_else(|| Error::Mismatch("orbit matrix is singular along the curve".into()))?;
                Solver::Generic(k, inv)
            }
        };
        Ok(Self { datum, t, method, e, solver, memo: Mutex::new(HashMap::new()) })
    }

    pub fn method(&self) -> Reduction {
        self.method
    }

    pub fn point(&self) -> &TorusPoint {
        &self.t
    }

    pub fn steinberg_weights(&self) -> &[Weight] {
        &self.e
    }

    pub fn reduce_monomial(&self, x: &Weight) -> Result<Vec<QuadElt>> {
        if let Some(v) = self.memo.lock().unwrap().get(x) {
            return Ok(v.clone());
        }
        let d = &self.datum;
        let n = self.e.len();
        let field = &self.t.spec.field;
        let out = match &self.solver {
            Solver::Regular(minv) => {
                let b: Vec<QuadElt> = (0..n).map(|w| self.t.character(&d.act(d.inv(w), x))).collect();
                mat_vec(field, minv, &b)
            }
            Solver::Generic(k, minv) => {
                let b: Vec<RatFn> = (0..n)
                    .map(|w| {
                        let z = d.act(d.inv(w), x);
                        RatFn::laurent_monomial(field, self.t.character(&z), z.dot(&d.two_rho_vee) as i64)
                    })
                    .collect();
                mat_vec(k, minv, &b)
                    .iter()
                    .map(|c| {
                        if !c.is_laurent() {
                            return Err(Error::NonPolynomialCoefficient);
                        }
                        c.eval(field, &field.one())
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        self.memo.lock().unwrap().insert(*x, out.clone());
        Ok(out)
    }

    pub fn reduce(&self, f: &LaurentPoly) -> Result<Vec<QuadElt>> {
        let field = &self.t.spec.field;
        let mut out = vec![field.zero(); self.e.len()];
        for (x, c) in f.terms() {
            let c = c.specialize(&self.t.spec);
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(self.reduce_monomial(x)?) {
                *o = field.add(o, &field.mul(&c, &r));
            }
        }
        Ok(out)
    }
}

/// `H_t` with basis `T_w θ_{e_u}` at index `w·|W_0| + u`, and the operators of
/// left and right multiplication by the generators `T_s`, `θ_{x_i}`.
pub struct HtModel {
    datum: Arc<RootDatum>,
    bern: Arc<BernsteinAlgebra>,
    reducer: ThetaReducer,
    n: usize,
    left_gens: Vec<Matrix<QuadElt>>,
    right_gens: Vec<Matrix<QuadElt>>,
}

impl HtModel {
    /// Uses the regular reduction when `t` is regular unless a method is forced.
    pub fn build(bern: Arc<BernsteinAlgebra>, t: TorusPoint, method: Option<Reduction>) -> Result<Self> {
        let datum = bern.datum().clone();
        let method = method.unwrap_or(if t.is_regular(&datum) { Reduction::Regular } else { Reduction::Generic });
        let reducer = ThetaReducer::new(datum.clone(), t, method)?;
        let n = datum.order();
        let mut m = Self { datum, bern, reducer, n, left_gens: Vec::new(), right_gens: Vec::new() };
        let gens = m.generators();
        m.left_gens = gens.iter().map(|g| m.left_op(g)).collect::<Result<_>>()?;
        m.right_gens = gens.iter().map(|g| m.right_op(g)).collect::<Result<_>>()?;
        Ok(m)
    }

    /// `T_s` for each simple reflection, then `θ_{x_i}` for each fundamental weight.
    pub fn generators(&self) -> Vec<HeckeElt> {
        let r = self.datum.rank;
        (0..r)
            .map(|s| self.bern.t_simple(s))
            .chain((0..r).map(|i| self.bern.theta_of(Weight::fundamental(r, i))))
            .collect()
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn bernstein(&self) -> &BernsteinAlgebra {
        &self.bern
    }

    pub fn reducer(&self) -> &ThetaReducer {
        &self.reducer
    }

    pub fn point(&self) -> &TorusPoint {
        self.reducer.point()
    }

    pub fn spec(&self) -> &Specialization {
        &self.point().spec
    }

    pub fn field(&self) -> &QuadField {
        &self.point().spec.field
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn left_generators(&self) -> &[Matrix<QuadElt>] {
        &self.left_gens
    }

    pub fn right_generators(&self) -> &[Matrix<QuadElt>] {
        &self.right_gens
    }

    pub fn zero_vec(&self) -> Vec<QuadElt> {
        vec![self.field().zero(); self.dim()]
    }

    pub fn basis_elt(&self, j: usize) -> HeckeElt {
        let e = self.reducer.steinberg_weights()[j % self.n];
        HeckeElt::term(j / self.n, LaurentPoly::monomial(e))
    }

    /// Image of `h` in `H_t`.
    pub fn project(&self, h: &HeckeElt) -> Result<Vec<QuadElt>> {
        let f = self.field();
        let mut out = self.zero_vec();
        for (w, g) in h.terms() {
            for (u, c) in self.reducer.reduce(g)?.into_iter().enumerate() {
                let o = &mut out[w * self.n + u];
                *o = f.add(o, &c);
            }
        }
        Ok(out)
    }

    /// An element of `H` projecting to `v`.
    pub fn lift(&self, v: &[QuadElt]) -> HeckeElt {
        let mut h = HeckeElt::zero();
        for (j, c) in v.iter().enumerate() {
            if !c.is_zero() {
                h = h.add(&self.basis_elt(j).scale(&lift_scalar(self.spec(), c)));
            }
        }
        h
    }

    fn op_from_columns(&self, cols: Vec<Vec<QuadElt>>) -> Matrix<QuadElt> {
        let d = self.dim();
        (0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }

    /// Matrix of `v ↦ h v` (columns are images of basis vectors).
    pub fn left_op(&self, h: &HeckeElt) -> Result<Matrix<QuadElt>> {
        let cols =
            (0..self.dim()).map(|j| self.project(&self.bern.mul(h, &self.basis_elt(j)))).collect::<Result<Vec<_>>>()?;
        Ok(self.op_from_columns(cols))
    }

    /// Matrix of `v ↦ v h`.
    pub fn right_op(&self, h: &HeckeElt) -> Result<Matrix<QuadElt>> {
        let cols =
            (0..self.dim()).map(|j| self.project(&self.bern.mul(&self.basis_elt(j), h))).collect::<Result<Vec<_>>>()?;
        Ok(self.op_from_columns(cols))
    }

    pub fn apply(&self, op: &Matrix<QuadElt>, v: &[QuadElt]) -> Vec<QuadElt> {
        mat_vec(self.field(), op, v)
    }

    pub fn left_mul(&self, h: &HeckeElt, v: &[QuadElt]) -> Result<Vec<QuadElt>> {
        self.project(&self.bern.mul(h, &self.lift(v)))
    }

    pub fn right_mul(&self, v: &[QuadElt], h: &HeckeElt) -> Result<Vec<QuadElt>> {
        self.project(&self.bern.mul(&self.lift(v), h))
    }

    pub fn is_zero_vec(v: &[QuadElt]) -> bool {
        v.iter().all(|x| x.is_zero())
    }

    pub fn span(&self, vectors: &[Vec<QuadElt>]) -> EchelonBasis<QuadElt> {
        let mut b = EchelonBasis::new(self.dim());
        for v in vectors {
            b.insert(self.field(), v);
        }
        b
    }

    /// Smallest subspace containing `gens` and stable under the chosen side.
    pub fn submodule_span(&self, gens: &[Vec<QuadElt>], side: Side) -> EchelonBasis<QuadElt> {
        let f = self.field();
        let ops: Vec<&Matrix<QuadElt>> = match side {
            Side::Left => self.left_gens.iter().collect(),
            Side::Right => self.right_gens.iter().collect(),
            Side::Both => self.left_gens.iter().chain(&self.right_gens).collect(),
        };
        let mut basis = EchelonBasis::new(self.dim());
        let mut queue: VecDeque<Vec<QuadElt>> = VecDeque::new();
        for g in gens {
            if basis.insert(f, g) {
                queue.push_back(g.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for op in &ops {
                let w = self.apply(op, &v);
                if basis.insert(f, &w) {
                    queue.push_back(w);
                }
            }
        }
        basis
    }

    /// Whether a subspace is stable under the generators of a side.
    pub fn is_stable(&self, sub: &EchelonBasis<QuadElt>, side: Side) -> bool {
        let ops: Vec<&Matrix<QuadElt>> = match side {
            Side::Left => self.left_gens.iter().collect(),
            Side::Right => self.right_gens.iter().collect(),
            Side::Both => self.left_gens.iter().chain(&self.right_gens).collect(),
        };
        sub.rows.iter().all(|r| ops.iter().all(|op| sub.contains(self.field(), &self.apply(op, r))))
    }

    /// `span{π(x · T_w θ_{e_u} · y)}`, which is the image of `x H_t y`.
    pub fn sandwich(&self, x: &HeckeElt, y: &HeckeElt) -> Result<EchelonBasis<QuadElt>> {
        let mut b = EchelonBasis::new(self.dim());
        for j in 0..self.dim() {
            let v = self.project(&self.bern.mul3(x, &self.basis_elt(j), y))?;
            b.insert(self.field(), &v);
        }
        Ok(b)
    }

    /// Rank of the reductions of `θ_x` over a box of weights; equals `dim Θ_t`
    /// once the box contains the Steinberg weights.
    pub fn theta_rank(&self, r: i32) -> Result<usize> {
        let mut b = EchelonBasis::new(self.n);
        for x in weight_box(self.datum.rank, r) {
            b.insert(self.field(), &self.reducer.reduce_monomial(&x)?);
        }
        Ok(b.dim())
    }

    /// Largest absolute coordinate of a Steinberg weight.
    pub fn steinberg_radius(&self) -> i32 {
        let r = self.datum.rank;
        self.reducer
            .steinberg_weights()
            .iter()
            .flat_map(|e| (0..r).map(move |i| e.get(i).abs()))
            .max()
            .unwrap_or(0)
            .max(1)
    }

    /// Basic consistency of the model.
    pub fn self_check(&self) -> Result<ModelChecks> {
        let f = self.field();
        let r = self.datum.rank;
        let q = self.spec().q_elt();
        let quadratic = (0..r).all(|s| {
            let t = &self.left_gens[s];
            let d = self.dim();
            let tt = crate::linalg::mat_mul(f, t, t, d);
            (0..d).all(|i| {
                (0..d).all(|j| {
                    let mut rhs = f.mul(&f.sub(&q, &f.one()), &t[i][j]);
                    if i == j {
                        rhs = f.add(&rhs, &q);
                    }
                    tt[i][j] == rhs
                })
            })
        });
        let d = self.dim();
        let commute = self.left_gens.iter().all(|a| {
            self.right_gens.iter().all(|b| crate::linalg::mat_mul(f, a, b, d) == crate::linalg::mat_mul(f, b, a, d))
        });
        let steinberg_units = self.reducer.steinberg_weights().iter().enumerate().all(|(u, e)| {
            self.reducer
                .reduce_monomial(e)
                .map(|c| c.iter().enumerate().all(|(k, x)| *x == if k == u { f.one() } else { f.zero() }))
                .unwrap_or(false)
        });
        let mut central_scalars = true;
        for i in 0..r {
            let z = orbit_sum(&self.datum, &Weight::fundamental(r, i));
            let phi = z.evaluate(self.point());
            let mut diff = z.clone();
            diff -= &LaurentPoly::constant(r, lift_scalar(self.spec(), &phi));
            central_scalars &= Self::is_zero_vec(&self.reducer.reduce(&diff)?);
        }
        Ok(ModelChecks {
            dim: d,
            theta_dim: self.theta_rank(self.steinberg_radius())?,
            quadratic,
            left_right_commute: commute,
            steinberg_units,
            central_scalars,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelChecks {
    pub dim: usize,
    pub theta_dim: usize,
    pub quadratic: bool,
    pub left_right_commute: bool,
    pub steinberg_units: bool,
    pub central_scalars: bool,
}

impl ModelChecks {
    pub fn holds(&self, order: usize) -> bool {
        self.dim == order * order
            && self.theta_dim == order
            && self.quadratic
            && self.left_right_commute
            && self.steinberg_units
            && self.central_scalars
    }
}

/// `Σ_{y ∈ W_0 x} θ_y`, a central element.
pub fn orbit_sum(datum: &RootDatum, x: &Weight) -> LaurentPoly {
    let mut orbit: Vec<Weight> = (0..datum.order()).map(|w| datum.act(w, x)).collect();
    orbit.sort();
    orbit.dedup();
    let mut f = LaurentPoly::zero();
    for y in orbit {
        f.add_term(y, &ScalarQ::one());
    }
    f
}

/// Restriction of operators to a stable subspace, in the coordinates of its rows.
pub fn restrict(f: &QuadField, ops: &[Matrix<QuadElt>], sub: &EchelonBasis<QuadElt>) -> Option<Vec<Matrix<QuadElt>>> {
    let d = sub.dim();
    ops.iter()
        .map(|op| {
            let cols = sub.rows.iter().map(|r| sub.coordinates(f, &mat_vec(f, op, r))).collect::<Option<Vec<_>>>()?;
            Some((0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
        })
        .collect()
}

/// Dimension of the algebra generated by `ops` (with identity) on a
/// `d`-dimensional space; the module is absolutely irreducible iff this is `d^2`.
pub fn burnside_span(f: &QuadField, ops: &[Matrix<QuadElt>], d: usize) -> usize {
    if d == 0 {
        return 0;
    }
    let flat = |m: &Matrix<QuadElt>| m.iter().flatten().cloned().collect::<Vec<_>>();
    let mut basis = EchelonBasis::new(d * d);
    let id = crate::linalg::identity(f, d);
    basis.insert(f, &flat(&id));
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        for g in ops {
            // The residual spans the same space as the product with smaller entries.
            let r = basis.reduce(f, &flat(&crate::linalg::mat_mul(f, g, &a, d)));
            if basis.insert(f, &r) {
                queue.push_back(r.chunks(d).map(|c| c.to_vec()).collect());
            }
            if basis.dim() == d * d {
                return d * d;
            }
        }
    }
    basis.dim()
}

/// Primes below `2^31`, of both residues mod 4.
const PRIMES: [u64; 4] = [2147483647, 2147483629, 2147483587, 2147483549];

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Square root modulo an odd prime by Tonelli–Shanks.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let (mut m, mut c, mut t, mut r) = (s, pow_mod(z, q, p), pow_mod(a, q, p), pow_mod(a, q.div_ceil(2), p));
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r)
}

fn q_mod(x: &Q, p: u64) -> Option<u64> {
    let pb = num::BigInt::from(p);
    let n = ((x.numer() % &pb) + &pb) % &pb;
    let d = ((x.denom() % &pb) + &pb) % &pb;
    let (n, d): (u64, u64) = (n.try_into().ok()?, d.try_into().ok()?);
    if d == 0 {
        return None;
    }
    Some(n * pow_mod(d, p - 2, p) % p)
}

/// Image of `Q[v]/(v^2 - d)` in `F_p` under a chosen square root of `d`.
fn quad_to_modp(f: &QuadField, p: u64) -> Option<impl Fn(&QuadElt) -> Option<u64>> {
    let dm = q_mod(&f.d, p)?;
    let root = sqrt_mod(dm, p)?;
    Some(move |x: &QuadElt| Some((q_mod(&x.a, p)? + q_mod(&x.b, p)? * root) % p))
}

/// `burnside_span` over `F_p`; a lower bound for the exact value.
fn burnside_span_modp(ops: &[Vec<Vec<u64>>], d: usize, p: u64) -> usize {
    let mut rows: Vec<(usize, Vec<u64>)> = Vec::new();
    let reduce = |rows: &[(usize, Vec<u64>)], mut v: Vec<u64>| {
        for (piv, r) in rows {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + p - c * y % p) % p;
                }
            }
        }
        v
    };
    let mut id = vec![0; d * d];
    for i in 0..d {
        id[i * d + i] = 1;
    }
    let mut queue = VecDeque::new();
    let push = |rows: &mut Vec<(usize, Vec<u64>)>, v: Vec<u64>, queue: &mut VecDeque<Vec<u64>>| {
        let mut v = reduce(rows, v);
        if let Some(piv) = v.iter().position(|&x| x != 0) {
            let inv = pow_mod(v[piv], p - 2, p);
            v.iter_mut().for_each(|x| *x = *x * inv % p);
            queue.push_back(v.clone());
            rows.push((piv, v));
        }
    };
    push(&mut rows, id, &mut queue);
    while let Some(a) = queue.pop_front() {
        for g in ops {
            let mut prod = vec![0; d * d];
            for i in 0..d {
                for k in 0..d {
                    let gik = g[i][k];
                    if gik != 0 {
                        for j in 0..d {
                            prod[i * d + j] = (prod[i * d + j] + gik * a[k * d + j]) % p;
                        }
                    }
                }
            }
            push(&mut rows, prod, &mut queue);
            if rows.len() == d * d {
                return d * d;
            }
        }
    }
    rows.len()
}

/// Absolute irreducibility. A full span modulo a prime certifies a full span
/// over the field; otherwise the exact span is computed.
pub fn burnside_irreducible(f: &QuadField, ops: &[Matrix<QuadElt>], d: usize) -> bool {
    d > 0 && burnside_dimension(f, ops, d) == d * d
}

/// `burnside_span`, short-circuited by a modular certificate when it is full.
pub fn burnside_dimension(f: &QuadField, ops: &[Matrix<QuadElt>], d: usize) -> usize {
    for p in PRIMES {
        let Some(map) = quad_to_modp(f, p) else { continue };
        let Some(ops_p) = ops
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(&map).collect::<Option<Vec<_>>>()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        if burnside_span_modp(&ops_p, d, p) == d * d {
            return d * d;
        }
    }
    burnside_span(f, ops, d)
}

/// Per-type data shared by all torus points: `C`, `C′`, `θ_ρ`, `Cθ_ρC′`,
/// `C′θ_ρC`, `A`, and memoized `W(θ_x)`.
pub struct TypeContext {
    pub datum: Arc<RootDatum>,
    pub bern: Arc<BernsteinAlgebra>,
    pub c: HeckeElt,
    pub cp: HeckeElt,
    pub xi: HeckeElt,
    pub eta: HeckeElt,
    pub a: LaurentPoly,
    ratio_memo: Mutex<HashMap<Weight, LaurentPoly>>,
}

impl TypeContext {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        let bern = Arc::new(BernsteinAlgebra::new(datum.clone()));
        let c = bern.c_element();
        let cp = bern.cprime_element();
        let rho = bern.theta_of(datum.rho);
        let xi = bern.mul3(&c, &rho, &cp);
        let eta = bern.mul3(&cp, &rho, &c);
        let a = bern.a_element()?;
        Ok(Self { datum, bern, c, cp, xi, eta, a, ratio_memo: Mutex::new(HashMap::new()) })
    }

    /// `W(θ_x) = Σ_w w(θ_x Π (1 - qθ_α)/(1 - θ_α))`.
    pub fn ratio(&self, x: &Weight) -> Result<LaurentPoly> {
        if let Some(r) = self.ratio_memo.lock().unwrap().get(x) {
            return Ok(r.clone());
        }
        let r = weyl_ratio_sum(&self.datum, &LaurentPoly::monomial(*x))?;
        self.ratio_memo.lock().unwrap().insert(*x, r.clone());
        Ok(r)
    }

    pub fn model(&self, t: TorusPoint, method: Option<Reduction>) -> Result<HtModel> {
        HtModel::build(self.bern.clone(), t, method)
    }

    pub fn e(&self, u: usize) -> Weight {
        steinberg_e(&self.datum, u)
    }

    pub fn theta(&self, x: Weight) -> HeckeElt {
        self.bern.theta_of(x)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealDims {
    pub c_c: usize,
    pub c_cprime: usize,
    pub cprime_c: usize,
    pub cprime_cprime_at_inverse: usize,
}

impl IdealDims {
    pub fn all_zero(&self) -> bool {
        self.c_c == 0 && self.c_cprime == 0 && self.cprime_c == 0 && self.cprime_cprime_at_inverse == 0
    }

    pub fn all_nonzero(&self) -> bool {
        self.c_c > 0 && self.c_cprime > 0 && self.cprime_c > 0 && self.cprime_cprime_at_inverse > 0
    }
}

/// Dimensions of `CH_tC`, `CH_tC′`, `C′H_tC` and `C′H_{t⁻¹}C′`.
pub fn ideal_dims(ctx: &TypeContext, m: &HtModel, m_inv: &HtModel) -> Result<IdealDims> {
    Ok(IdealDims {
        c_c: m.sandwich(&ctx.c, &ctx.c)?.dim(),
        c_cprime: m.sandwich(&ctx.c, &ctx.cp)?.dim(),
        cprime_c: m.sandwich(&ctx.cp, &ctx.c)?.dim(),
        cprime_cprime_at_inverse: m_inv.sandwich(&ctx.cp, &ctx.cp)?.dim(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VanishingReport {
    pub point: String,
    pub reduction: Reduction,
    pub dims: IdealDims,
    /// `φ_t(W(θ_x))` vanishes for every `x` in the sample box.
    pub ratio_box_zero: bool,
    /// `φ_t(W(θ_{ρ+e_u}))` vanishes for every `u`.
    pub rho_shift_zero: bool,
    pub rho_shift_values: Vec<String>,
    pub generator_nonzero: bool,
    pub cprime_c_generator_nonzero: bool,
    pub simultaneous: bool,
    pub criteria_agree: bool,
    pub star_transport: bool,
}

impl VanishingReport {
    pub fn holds(&self) -> bool {
        self.simultaneous && self.criteria_agree && self.star_transport
    }
}

/// Direct ideal dimensions against the ratio and generator criteria at one point.
pub fn vanishing_criteria(ctx: &TypeContext, m: &HtModel, m_inv: &HtModel, box_radius: i32) -> Result<VanishingReport> {
    let dims = ideal_dims(ctx, m, m_inv)?;
    let t = m.point();
    let mut box_zero = true;
    for x in weight_box(ctx.datum.rank, box_radius) {
        box_zero &= ctx.ratio(&x)?.evaluate(t).is_zero();
    }
    let mut values = Vec::new();
    for u in 0..ctx.datum.order() {
        values.push(ctx.ratio(&(ctx.datum.rho + ctx.e(u)))?.evaluate(t));
    }
    let rho_zero = values.iter().all(|v| v.is_zero());
    let generator_nonzero = !HtModel::is_zero_vec(&m.project(&ctx.xi)?);
    let cprime_c_generator_nonzero = !HtModel::is_zero_vec(&m.project(&ctx.eta)?);
    let vanish = dims.c_c == 0;
    Ok(VanishingReport {
        point: t.label(),
        reduction: m.reducer().method(),
        simultaneous: dims.all_zero() || dims.all_nonzero(),
        criteria_agree: box_zero == vanish
            && rho_zero == vanish
            && generator_nonzero == (dims.c_cprime > 0)
            && cprime_c_generator_nonzero == (dims.cprime_c > 0),
        star_transport: dims.c_c == dims.cprime_cprime_at_inverse,
        dims,
        ratio_box_zero: box_zero,
        rho_shift_zero: rho_zero,
        rho_shift_values: values.iter().map(|v| v.to_string()).collect(),
        generator_nonzero,
        cprime_c_generator_nonzero,
    })
}

/// `Σ_w q0^{l(w)}`.
pub fn poincare_value(datum: &RootDatum, q0: &Q) -> Q {
    let mut acc = Q::zero();
    let mut pow = Q::one();
    for c in datum.poincare_polynomial() {
        acc += &pow * Q::from_integer(c.into());
        pow *= q0;
    }
    acc
}

/// Common eigenvalue `λ` with `op(ξ) = λ ξ` for every operator, if one exists.
fn common_eigenvalue(f: &QuadField, ops: &[&Matrix<QuadElt>], xi: &[QuadElt]) -> Option<QuadElt> {
    let p = xi.iter().position(|x| !x.is_zero())?;
    let inv = f.inv(&xi[p]).ok()?;
    let mut lambda: Option<QuadElt> = None;
    for op in ops {
        let y = mat_vec(f, op, xi);
        let l = f.mul(&y[p], &inv);
        if y.iter().zip(xi).any(|(a, b)| *a != f.mul(&l, b)) {
            return None;
        }
        match &lambda {
            Some(prev) if *prev != l => return None,
            _ => lambda = Some(l),
        }
    }
    lambda
}

#[derive(Clone, Debug, Serialize)]
pub struct PrincipalReport {
    pub point: String,
    pub q0: String,
    pub poincare_value: String,
    pub dim_c_cprime: usize,
    pub dim_cprime_c: usize,
    pub expected_dim: usize,
    pub two_sided: bool,
    /// Eigenvalues of left and right `T_s` on `Cθ_ρC′`.
    pub xi_eigenvalues: Option<(String, String)>,
    /// Eigenvalues of left and right `T_s` on `C′θ_ρC`.
    pub eta_eigenvalues: Option<(String, String)>,
    pub eigen_ok: bool,
    /// Sign `ε` with `(Aθ_x, θ_{e_u})(t) = ε q^{-ν/2} ρ(t) x(t) e_u(t) Σ q^{l(w)}`
    /// on all sampled `x, u`, when a single sign fits.
    pub pairing_sign: Option<i32>,
}

impl PrincipalReport {
    pub fn holds(&self) -> bool {
        self.dim_c_cprime == self.expected_dim
            && self.dim_cprime_c == self.expected_dim
            && (self.expected_dim == 0 || (self.two_sided && self.eigen_ok))
            && self.pairing_sign.is_some()
    }
}

/// Ideal dimensions, eigenvalues and pairing sign at the principal point for `spec`.
pub fn principal_report(ctx: &TypeContext, spec: &Specialization) -> Result<PrincipalReport> {
    let d = &ctx.datum;
    let t = principal_point(d, spec);
    let m = ctx.model(t.clone(), None)?;
    let f = m.field().clone();
    let q0 = spec.q0();
    let pv = poincare_value(d, &q0);
    let expected = usize::from(!pv.is_zero());
    let ccp = m.sandwich(&ctx.c, &ctx.cp)?;
    let cpc = m.sandwich(&ctx.cp, &ctx.c)?;
    let two_sided = m.is_stable(&ccp, Side::Both) && m.is_stable(&cpc, Side::Both);
    let r = d.rank;
    let eig = |v: &[QuadElt]| -> Option<(QuadElt, QuadElt)> {
        let l: Vec<&Matrix<QuadElt>> = m.left_generators()[..r].iter().collect();
        let rt: Vec<&Matrix<QuadElt>> = m.right_generators()[..r].iter().collect();
        Some((common_eigenvalue(&f, &l, v)?, common_eigenvalue(&f, &rt, v)?))
    };
    let xi = m.project(&ctx.xi)?;
    let eta = m.project(&ctx.eta)?;
    let xe = eig(&xi);
    let ee = eig(&eta);
    let q = spec.q_elt();
    let m1 = f.neg(&f.one());
    let eigen_ok = xe.as_ref() == Some(&(q.clone(), m1.clone())) && ee.as_ref() == Some(&(m1, q));
    let pairing_sign = pairing_sign(ctx, &t, &pv)?;
    let s = |p: Option<(QuadElt, QuadElt)>| p.map(|(a, b)| (a.to_string(), b.to_string()));
    Ok(PrincipalReport {
        point: t.label(),
        q0: crate::scalar::fmt_rational(&q0),
        poincare_value: crate::scalar::fmt_rational(&pv),
        dim_c_cprime: ccp.dim(),
        dim_cprime_c: cpc.dim(),
        expected_dim: expected,
        two_sided,
        xi_eigenvalues: s(xe),
        eta_eigenvalues: s(ee),
        eigen_ok,
        pairing_sign,
    })
}

/// Compares `(Aθ_x, θ_{e_u})(t)` with `q^{-ν/2} ρ(t) x(t) e_u(t) Σ q^{l(w)}`
/// over `x` in the unit box; returns the sign relating them, `None` if no
/// single sign fits. A value of `Σ q^{l(w)} = 0` fits any sign, reported as `1`.
pub fn pairing_sign(ctx: &TypeContext, t: &TorusPoint, pv: &Q) -> Result<Option<i32>> {
    let d = &ctx.datum;
    let f = &t.spec.field;
    let base = f.scale(&f.pow(&t.spec.v, -(d.nu as i32)), pv);
    let (mut plus, mut minus) = (true, true);
    for x in weight_box(d.rank, 1) {
        for u in 0..d.order() {
            let lhs = pairing_ab(d, &ctx.a.shift(&x), &LaurentPoly::monomial(ctx.e(u)))?.evaluate(t);
            let rhs = f.mul(&base, &t.character(&(d.rho + x + ctx.e(u))));
            plus &= lhs == rhs;
            minus &= lhs == f.neg(&rhs);
        }
    }
    Ok(if plus {
        Some(1)
    } else if minus {
        Some(-1)
    } else {
        None
    })
}

/// `dim H_tCθ_ρC′`, the span of `θ_{e_u}Cθ_ρC′`.
pub fn lt_dimension(ctx: &TypeContext, m: &HtModel) -> Result<usize> {
    let images = (0..ctx.datum.order())
        .map(|u| m.project(&ctx.bern.mul(&ctx.theta(ctx.e(u)), &ctx.xi)))
        .collect::<Result<Vec<_>>>()?;
    Ok(m.span(&images).dim())
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleReport {
    pub point: String,
    pub generator_nonzero: bool,
    pub dim_htc: usize,
    pub dim_lt: usize,
    pub closure_matches: bool,
    pub burnside_span: usize,
    pub irreducible: bool,
    pub c_lt_nonzero: bool,
    pub dim_m_t0: usize,
    pub m_t0_relation_matches_map: bool,
    pub m_t0_direct_matches: bool,
    pub quotient_matches: bool,
    pub dual_generator_nonzero: bool,
    pub dim_lt_dual: usize,
    pub dual_irreducible: bool,
    pub cprime_lt_dual_nonzero: bool,
}

impl ModuleReport {
    /// Only meaningful when the generator is nonzero; otherwise the kernel
    /// comparisons must still agree.
    pub fn holds(&self) -> bool {
        let kernels = self.m_t0_relation_matches_map && self.m_t0_direct_matches && self.quotient_matches;
        let main = !self.generator_nonzero
            || (self.closure_matches
                && self.irreducible
                && self.c_lt_nonzero
                && self.dim_htc == self.dim_lt + self.dim_m_t0);
        let dual = !self.dual_generator_nonzero || (self.dual_irreducible && self.cprime_lt_dual_nonzero);
        kernels && main && dual
    }
}

fn same_space(f: &QuadField, a: &EchelonBasis<QuadElt>, b: &EchelonBasis<QuadElt>) -> bool {
    let _ = f;
    a.canonical_rows() == b.canonical_rows()
}

fn span_cols(f: &QuadField, cols: usize, vs: &[Vec<QuadElt>]) -> EchelonBasis<QuadElt> {
    let mut b = EchelonBasis::new(cols);
    for v in vs {
        b.insert(f, v);
    }
    b
}

/// `L_t`, `M_{t,0}` and the dual module at one point.
pub fn module_report(ctx: &TypeContext, m: &HtModel) -> Result<ModuleReport> {
    let d = &ctx.datum;
    let n = d.order();
    let f = m.field().clone();
    let t = m.point();
    let xi = m.project(&ctx.xi)?;
    let generator_nonzero = !HtModel::is_zero_vec(&xi);

    let htc: Vec<Vec<QuadElt>> =
        (0..n).map(|u| m.project(&ctx.bern.mul(&ctx.theta(ctx.e(u)), &ctx.c))).collect::<Result<_>>()?;
    let dim_htc = m.span(&htc).dim();

    // Images θ_{e_u} C θ_ρ C′ of the basis of H_tC.
    let images: Vec<Vec<QuadElt>> =
        (0..n).map(|u| m.project(&ctx.bern.mul(&ctx.theta(ctx.e(u)), &ctx.xi))).collect::<Result<_>>()?;
    let lt = m.span(&images);
    let closure = m.submodule_span(std::slice::from_ref(&xi), Side::Left);
    let closure_matches = same_space(&f, &lt, &closure);
    let ops = restrict(&f, m.left_generators(), &lt);
    let burnside = ops.as_ref().map_or(0, |o| burnside_dimension(&f, o, lt.dim()));
    let irreducible = lt.dim() > 0 && burnside == lt.dim() * lt.dim();
    let c_lt_nonzero =
        lt.rows.iter().any(|r| m.left_mul(&ctx.c, r).map(|v| !HtModel::is_zero_vec(&v)).unwrap_or(false));

    // Kernel of θC ↦ θCθ_ρC′ in Θ_t coordinates.
    let map_cols: Matrix<QuadElt> = (0..m.dim()).map(|i| images.iter().map(|c| c[i].clone()).collect()).collect();
    let map_kernel = span_cols(&f, n, &nullspace(&f, &map_cols, n));

    // M_{t,0} relations: Σ_{u'} c_{u'} φ_t(W(θ_{e_u + e_u'})) = 0 for all u.
    let mut relations = Vec::with_capacity(n);
    for u in 0..n {
        let mut row = Vec::with_capacity(n);
        for u2 in 0..n {
            row.push(ctx.ratio(&(ctx.e(u) + ctx.e(u2)))?.evaluate(t));
        }
        relations.push(row);
    }
    let relation_kernel = span_cols(&f, n, &nullspace(&f, &relations, n));

    // Direct: C θ_{e_w} θ C = 0 for all w.
    let mut direct: Matrix<QuadElt> = vec![Vec::with_capacity(n); n * m.dim()];
    for u2 in 0..n {
        for w in 0..n {
            let v = m.project(&ctx.bern.mul3(&ctx.c, &ctx.theta(ctx.e(w) + ctx.e(u2)), &ctx.c))?;
            for (i, x) in v.into_iter().enumerate() {
                direct[w * m.dim() + i].push(x);
            }
        }
    }
    let direct_kernel = span_cols(&f, n, &nullspace(&f, &direct, n));

    let eta = m.project(&ctx.eta)?;
    let dual_generator_nonzero = !HtModel::is_zero_vec(&eta);
    let dual_images: Vec<Vec<QuadElt>> =
        (0..n).map(|u| m.project(&ctx.bern.mul(&ctx.theta(ctx.e(u)), &ctx.eta))).collect::<Result<_>>()?;
    let lt_dual = m.span(&dual_images);
    let dual_ops = restrict(&f, m.left_generators(), &lt_dual);
    let dual_irreducible = dual_ops.as_ref().is_some_and(|o| burnside_irreducible(&f, o, lt_dual.dim()));
    let cprime_lt_dual_nonzero =
        lt_dual.rows.iter().any(|r| m.left_mul(&ctx.cp, r).map(|v| !HtModel::is_zero_vec(&v)).unwrap_or(false));

    Ok(ModuleReport {
        point: t.label(),
        generator_nonzero,
        dim_htc,
        dim_lt: lt.dim(),
        closure_matches,
        burnside_span: burnside,
        irreducible,
        c_lt_nonzero,
        dim_m_t0: relation_kernel.dim(),
        m_t0_relation_matches_map: same_space(&f, &relation_kernel, &map_kernel),
        m_t0_direct_matches: same_space(&f, &direct_kernel, &map_kernel),
        quotient_matches: dim_htc == lt.dim() + map_kernel.dim(),
        dual_generator_nonzero,
        dim_lt_dual: lt_dual.dim(),
        dual_irreducible,
        cprime_lt_dual_nonzero,
    })
}

/// Polynomials over `Q` in variables indexed by position in the exponent vector.
#[derive(Clone, Debug, Default, PartialEq)]
struct MPoly(BTreeMap<Vec<u32>, Q>);

impl MPoly {
    fn constant(c: Q, nvars: usize) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(vec![0; nvars], c);
        }
        MPoly(m)
    }

    fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly(BTreeMap::from([(e, Q::one())]))
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, o: &MPoly) -> MPoly {
        let mut m = self.0.clone();
        for (e, c) in &o.0 {
            let s = m.get(e).cloned().unwrap_or_else(Q::zero) + c;
            if s.is_zero() {
                m.remove(e);
            } else {
                m.insert(e.clone(), s);
            }
        }
        MPoly(m)
    }

    fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::default();
        }
        MPoly(self.0.iter().map(|(e, x)| (e.clone(), x * c)).collect())
    }

    fn mul(&self, o: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &o.0 {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out = out.add(&MPoly(BTreeMap::from([(e, c1 * c2)])));
            }
        }
        out
    }
}

/// Coefficients `c_1..c_m` of `det(λ - X) = λ^m + c_1 λ^{m-1} + …` by
/// Faddeev–LeVerrier.
fn char_poly_coeffs(x: &[Vec<MPoly>], nvars: usize) -> Vec<MPoly> {
    let m = x.len();
    let zero = MPoly::default();
    let mat_mul = |a: &[Vec<MPoly>], b: &[Vec<MPoly>]| -> Vec<Vec<MPoly>> {
        (0..m)
            .map(|i| (0..m).map(|j| (0..m).fold(zero.clone(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))).collect())
            .collect()
    };
    let mut coeffs = Vec::new();
    let mut mk: Vec<Vec<MPoly>> = (0..m)
        .map(|i| (0..m).map(|j| MPoly::constant(if i == j { Q::one() } else { Q::zero() }, nvars)).collect())
        .collect();
    let mut c_prev = MPoly::constant(Q::one(), nvars);
    for k in 1..=m {
        if k > 1 {
            mk = mat_mul(x, &mk);
            for (i, row) in mk.iter_mut().enumerate() {
                row[i] = row[i].add(&c_prev);
            }
        }
        let xm = mat_mul(x, &mk);
        let tr = (0..m).fold(zero.clone(), |acc, i| acc.add(&xm[i][i]));
        let c = tr.scale(&rat(-1, k as i64));
        coeffs.push(c.clone());
        c_prev = c;
    }
    coeffs
}

#[derive(Clone, Debug, Serialize)]
pub struct LieReport {
    pub point: String,
    pub q0: String,
    /// Pairs `(j, k)` with `E_{jk}` in `g_{t,q}` (1-based).
    pub root_spaces: Vec<(usize, usize)>,
    pub includes_cartan: bool,
    pub has_semisimple: bool,
    /// Prediction of the criterion: `H_tCθ_ρC′ = 0`.
    pub predicts_zero: bool,
    pub q0_is_one: bool,
}

/// The criterion for `g_{t,q} = {X : Ad(t)X = qX}` inside trace-zero matrices.
pub fn lie_criterion_type_a(datum: &RootDatum, t: &TorusPoint) -> Result<LieReport> {
    if !datum.type_label.is_type_a() {
        return Err(Error::UnsupportedForType(datum.type_label.to_string()));
    }
    let f = &t.spec.field;
    let n = datum.rank;
    let m = n + 1;
    // Diagonal entries d_j of t in SL_{n+1}.
    let mut diag = Vec::with_capacity(m);
    for j in 0..m {
        let dj = if j == 0 {
            t.coords[0].clone()
        } else if j < n {
            f.mul(&t.coords[j], &f.inv(&t.coords[j - 1])?)
        } else {
            f.inv(&t.coords[n - 1])?
        };
        diag.push(dj);
    }
    let q = t.spec.q_elt();
    let q0_is_one = q == f.one();
    let mut roots = Vec::new();
    for j in 0..m {
        for k in 0..m {
            if j != k && f.mul(&diag[j], &f.inv(&diag[k])?) == q {
                roots.push((j, k));
            }
        }
    }
    let ncart = if q0_is_one { n } else { 0 };
    let nvars = roots.len() + ncart;
    let mut x: Vec<Vec<MPoly>> = vec![vec![MPoly::default(); m]; m];
    for (i, &(j, k)) in roots.iter().enumerate() {
        x[j][k] = MPoly::var(i, nvars);
    }
    for h in 0..ncart {
        let v = MPoly::var(roots.len() + h, nvars);
        x[h][h] = x[h][h].add(&v);
        x[h + 1][h + 1] = x[h + 1][h + 1].add(&v.scale(&int(-1)));
    }
    let has_semisimple = nvars > 0 && char_poly_coeffs(&x, nvars).iter().any(|c| !c.is_zero());
    Ok(LieReport {
        point: t.label(),
        q0: crate::scalar::fmt_rational(&t.spec.q0()),
        root_spaces: roots.iter().map(|&(j, k)| (j + 1, k + 1)).collect(),
        includes_cartan: q0_is_one,
        has_semisimple,
        predicts_zero: has_semisimple,
        q0_is_one,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PointKind {
    Principal,
    Identity,
    NonRegular,
    RootMinusOne,
    Random,
}

#[derive(Clone, Debug)]
pub struct SamplePoint {
    pub kind: PointKind,
    pub t: TorusPoint,
}

const GRID: [(i64, i64); 8] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (3, 1), (-1, 2), (1, 3)];

fn grid_points(rank: usize) -> Vec<Vec<Q>> {
    let g = GRID.len();
    (0..g.pow(rank as u32))
        .map(|mut k| {
            (0..rank)
                .map(|_| {
                    let (a, b) = GRID[k % g];
                    k /= g;
                    rat(a, b)
                })
                .collect()
        })
        .collect()
}

/// A deterministic sample of at least `count` torus points for one type:
/// principal points for `q0 ∈ {4, 9, -1}`, the identity, two non-regular
/// grid points, a point with `q0 = -1` and a root taking the value `-1`, and
/// random regular points `c_i v^{m_i}` drawn from `seed`.
pub fn sample_points(datum: &RootDatum, seed: u64, count: usize) -> Result<Vec<SamplePoint>> {
    let n = datum.rank;
    let mut out = Vec::new();
    for q0 in [int(4), int(9), int(-1)] {
        let spec = Specialization::q(q0)?;
        out.push(SamplePoint { kind: PointKind::Principal, t: principal_point(datum, &spec) });
    }
    let s4 = Specialization::q(int(4))?;
    let s9 = Specialization::q(int(9))?;
    out.push(SamplePoint { kind: PointKind::Identity, t: TorusPoint::rational(&vec![int(1); n], s4.clone())? });
    let grid = grid_points(n);
    let ones = vec![int(1); n];
    let nonregular: Vec<&Vec<Q>> = grid
        .iter()
        .filter(|c| **c != ones)
        .filter(|c| !TorusPoint::rational(c, s4.clone()).unwrap().is_regular(datum))
        .take(2)
        .collect();
    for (c, spec) in nonregular.into_iter().zip([s4.clone(), s9.clone()]) {
        out.push(SamplePoint { kind: PointKind::NonRegular, t: TorusPoint::rational(c, spec)? });
    }
    let sm1 = Specialization::q(int(-1))?;
    let minus_one = sm1.field.neg(&sm1.field.one());
    if let Some(c) = grid.iter().find(|c| {
        let t = TorusPoint::rational(c, sm1.clone()).unwrap();
        t.is_regular(datum) && datum.positive_roots.iter().any(|a| t.character(a) == minus_one)
    }) {
        out.push(SamplePoint { kind: PointKind::RootMinusOne, t: TorusPoint::rational(c, sm1)? });
    }
    let q_choices = [int(4), int(9), rat(1, 4), int(2), int(-1), rat(25, 4), int(3)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let spec = Specialization::q(q_choices[rng.gen_range(0..q_choices.len())].clone())?;
        let coords: Vec<(Q, i32)> = (0..n)
            .map(|_| {
                let mut c = rat(rng.gen_range(1..=6), rng.gen_range(1..=4));
                if rng.gen_bool(0.5) {
                    c = -c;
                }
                (c, rng.gen_range(-1..=1))
            })
            .collect();
        let t = TorusPoint::from_v_monomials(&coords, spec)?;
        if t.is_regular(datum) && !out.iter().any(|p| p.t == t) {
            out.push(SamplePoint { kind: PointKind::Random, t });
        }
    }
    Ok(out)
}

/// Whether the two reduction paths agree on the monomials of a weight box.
pub fn reductions_agree(datum: &Arc<RootDatum>, t: &TorusPoint, r: i32) -> Result<bool> {
    let reg = ThetaReducer::new(datum.clone(), t.clone(), Reduction::Regular)?;
    let gen = ThetaReducer::new(datum.clone(), t.clone(), Reduction::Generic)?;
    for x in weight_box(datum.rank, r) {
        if reg.reduce_monomial(&x)? != gen.reduce_monomial(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}
