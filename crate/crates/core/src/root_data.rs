//! Irreducible root systems of rank at most 3, in fundamental-weight
//! coordinates.
//!
//! Cartan conventions: entry `cartan[i][j] = <alpha_j, alpha_i^vee>`, so the
//! weight coordinates of the simple root `alpha_j` are column `j`.
//! In B2 the first simple root is long; in G2 the first simple root is short.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A1,
    A2,
    B2,
    G2,
    A3,
}

impl RootType {
    pub const ALL: [RootType; 5] = [RootType::A1, RootType::A2, RootType::B2, RootType::G2, RootType::A3];

    pub fn cartan(self) -> Vec<Vec<i32>> {
        match self {
            RootType::A1 => vec![vec![2]],
            RootType::A2 => vec![vec![2, -1], vec![-1, 2]],
            RootType::B2 => vec![vec![2, -1], vec![-2, 2]],
            RootType::G2 => vec![vec![2, -3], vec![-1, 2]],
            RootType::A3 => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        }
    }

    /// True for type A, where the Lie algebra is realized as `sl_{n+1}`.
    pub fn is_type_a(self) -> bool {
        matches!(self, RootType::A1 | RootType::A2 | RootType::A3)
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A1 => "A1",
            RootType::A2 => "A2",
            RootType::B2 => "B2",
            RootType::G2 => "G2",
            RootType::A3 => "A3",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(RootType::A1),
            "A2" => Ok(RootType::A2),
            "B2" => Ok(RootType::B2),
            "G2" => Ok(RootType::G2),
            "A3" => Ok(RootType::A3),
            _ => Err(Error::UnsupportedType(s.to_string())),
        }
    }
}

/// A point of the weight lattice `P`, in fundamental-weight coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: [i32; MAX_RANK],
    rank: u8,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        Self { coords: [0; MAX_RANK], rank: rank as u8 }
    }

    pub fn new(coords: &[i32]) -> Self {
        assert!(coords.len() <= MAX_RANK, "rank {} not supported", coords.len());
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Self { coords: c, rank: coords.len() as u8 }
    }

    /// The fundamental weight `x_i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coords[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.rank as usize]
    }

    pub fn get(&self, i: usize) -> i32 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.coords().iter().all(|&c| c <= 0)
    }

    pub fn scaled(&self, k: i32) -> Self {
        let mut out = *self;
        for c in out.coords.iter_mut() {
            *c *= k;
        }
        out
    }

    /// Dot product of the coordinate vector with `v`.
    pub fn dot(&self, v: &[i32]) -> i32 {
        self.coords().iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        for i in 0..MAX_RANK {
            self.coords[i] += rhs.coords[i];
        }
        self
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        for i in 0..MAX_RANK {
            self.coords[i] -= rhs.coords[i];
        }
        self
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub type IntMatrix = Vec<Vec<i32>>;

fn mat_vec(m: &IntMatrix, x: &Weight) -> Weight {
    let n = x.rank();
    let mut out = Weight::zero(n);
    for i in 0..n {
        out.coords[i] = (0..n).map(|j| m[i][j] * x.coords[j]).sum();
    }
    out
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// An element of the finite Weyl group `W_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteWeylElt {
    /// Reduced word in the simple reflections, read left to right.
    pub word: Vec<usize>,
    /// Action on weight coordinates (column vectors).
    pub matrix: IntMatrix,
    pub length: usize,
}

/// Index of an element of `W_0` inside [`RootDatum::weyl`]. Index 0 is the identity.
pub type W0 = usize;

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub type_label: RootType,
    pub rank: usize,
    pub cartan: IntMatrix,
    pub simple_roots: Vec<Weight>,
    /// Positive roots in weight coordinates.
    pub positive_roots: Vec<Weight>,
    /// Positive roots in the simple-root basis.
    pub positive_roots_simple: Vec<Vec<i32>>,
    /// Coroots of the positive roots, in the simple-coroot basis.
    pub positive_coroots: Vec<Vec<i32>>,
    pub rho: Weight,
    pub nu: usize,
    /// `2 rho^vee` in the simple-coroot basis.
    pub two_rho_vee: Vec<i32>,
    pub weyl: Vec<FiniteWeylElt>,
    pub longest: W0,
    mul_table: Vec<Vec<W0>>,
    inverse: Vec<W0>,
    simple_index: Vec<W0>,
    /// `root_image[w][k]`: index in the full root list of `w(root_k)`.
    /// Roots are numbered `0..nu` (positive) then `nu..2nu` (their negatives).
    root_image: Vec<Vec<usize>>,
    matrix_index: HashMap<IntMatrix, W0>,
}

impl RootDatum {
    pub fn build(type_label: RootType) -> Self {
        let cartan = type_label.cartan();
        let n = cartan.len();
        let simple_roots: Vec<Weight> =
            (0..n).map(|j| Weight::new(&(0..n).map(|i| cartan[i][j]).collect::<Vec<_>>())).collect();

        // Roots and coroots by closure of the simple ones under simple reflections.
        // A root is tracked in the simple-root basis together with its coroot in
        // the simple-coroot basis.
        let to_weight = |r: &[i32]| -> Vec<i32> { (0..n).map(|i| (0..n).map(|j| cartan[i][j] * r[j]).sum()).collect() };
        let reflect_root = |r: &[i32], s: usize| -> Vec<i32> {
            let pair = to_weight(r)[s];
            let mut out = r.to_vec();
            out[s] -= pair;
            out
        };
        let reflect_coroot = |c: &[i32], s: usize| -> Vec<i32> {
            // <alpha_s, c> = sum_i c_i <alpha_s, alpha_i^vee> = sum_i c_i cartan[i][s]
            let pair: i32 = (0..n).map(|i| c[i] * cartan[i][s]).sum();
            let mut out = c.to_vec();
            out[s] -= pair;
            out
        };
        let mut roots: Vec<(Vec<i32>, Vec<i32>)> = Vec::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            queue.push_back((e.clone(), e));
        }
        while let Some((r, c)) = queue.pop_front() {
            if roots.iter().any(|(x, _)| *x == r) {
                continue;
            }
            for s in 0..n {
                queue.push_back((reflect_root(&r, s), reflect_coroot(&c, s)));
            }
            roots.push((r, c));
        }
        let mut positive: Vec<(Vec<i32>, Vec<i32>)> =
            roots.into_iter().filter(|(r, _)| r.iter().all(|&x| x >= 0)).collect();
        positive.sort_by_key(|(r, _)| (r.iter().sum::<i32>(), r.clone()));
        let nu = positive.len();
        let positive_roots: Vec<Weight> = positive.iter().map(|(r, _)| Weight::new(&to_weight(r))).collect();
        let positive_roots_simple: Vec<Vec<i32>> = positive.iter().map(|(r, _)| r.clone()).collect();
        let positive_coroots: Vec<Vec<i32>> = positive.iter().map(|(_, c)| c.clone()).collect();
        let two_rho_vee: Vec<i32> = (0..n).map(|i| positive_coroots.iter().map(|c| c[i]).sum()).collect();
        let rho = Weight::new(&vec![1; n]);

        // W_0 by breadth-first search; right multiplication by s_i yields
        // shortlex reduced words.
        let identity: IntMatrix = (0..n).map(|i| (0..n).map(|j| i32::from(i == j)).collect()).collect();
        let simple_mats: Vec<IntMatrix> = (0..n)
            .map(|s| {
                let mut m = identity.clone();
                for i in 0..n {
                    m[i][s] -= simple_roots[s].get(i);
                }
                m
            })
            .collect();
        let mut weyl = vec![FiniteWeylElt { word: vec![], matrix: identity.clone(), length: 0 }];
        let mut matrix_index = HashMap::new();
        matrix_index.insert(identity, 0usize);
        let mut head = 0;
        while head < weyl.len() {
            for s in 0..n {
                let m = mat_mul(&weyl[head].matrix, &simple_mats[s]);
                if !matrix_index.contains_key(&m) {
                    let mut word = weyl[head].word.clone();
                    word.push(s);
                    let length = word.len();
                    matrix_index.insert(m.clone(), weyl.len());
                    weyl.push(FiniteWeylElt { word, matrix: m, length });
                }
            }
            head += 1;
        }
        let size = weyl.len();
        let mul_table: Vec<Vec<W0>> = (0..size)
            .map(|a| (0..size).map(|b| matrix_index[&mat_mul(&weyl[a].matrix, &weyl[b].matrix)]).collect())
            .collect();
        let inverse: Vec<W0> = (0..size).map(|a| (0..size).find(|&b| mul_table[a][b] == 0).unwrap()).collect();
        let simple_index: Vec<W0> = (0..n).map(|s| matrix_index[&simple_mats[s]]).collect();

        let mut all_roots = positive_roots.clone();
        all_roots.extend(positive_roots.iter().map(|r| -*r));
        let root_lookup: HashMap<Weight, usize> = all_roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let root_image: Vec<Vec<usize>> =
            weyl.iter().map(|w| all_roots.iter().map(|r| root_lookup[&mat_vec(&w.matrix, r)]).collect()).collect();
        let longest = (0..size).max_by_key(|&w| weyl[w].length).unwrap();

        Self {
            type_label,
            rank: n,
            cartan,
            simple_roots,
            positive_roots,
            positive_roots_simple,
            positive_coroots,
            rho,
            nu,
            two_rho_vee,
            weyl,
            longest,
            mul_table,
            inverse,
            simple_index,
            root_image,
            matrix_index,
        }
    }

    pub fn order(&self) -> usize {
        self.weyl.len()
    }

    pub fn identity(&self) -> W0 {
        0
    }

    pub fn mul(&self, a: W0, b: W0) -> W0 {
        self.mul_table[a][b]
    }

    pub fn inv(&self, a: W0) -> W0 {
        self.inverse[a]
    }

    pub fn simple(&self, s: usize) -> W0 {
        self.simple_index[s]
    }

    pub fn length(&self, w: W0) -> usize {
        self.weyl[w].length
    }

    pub fn index_of_matrix(&self, m: &IntMatrix) -> Option<W0> {
        self.matrix_index.get(m).copied()
    }

    /// `w(x)`.
    pub fn act(&self, w: W0, x: &Weight) -> Weight {
        mat_vec(&self.weyl[w].matrix, x)
    }

    /// `<x, beta^vee>` for the positive root with index `k`.
    pub fn pairing(&self, x: &Weight, k: usize) -> i32 {
        x.dot(&self.positive_coroots[k])
    }

    /// Whether `w(alpha_k)` is positive, `alpha_k` the `k`-th positive root.
    pub fn maps_positive(&self, w: W0, k: usize) -> bool {
        self.root_image[w][k] < self.nu
    }

    /// Whether `w(alpha_s)` is negative for the simple root `alpha_s`, i.e. `s` is a
    /// right descent of `w`.
    pub fn is_right_descent(&self, w: W0, s: usize) -> bool {
        self.length(self.mul(w, self.simple(s))) < self.length(w)
    }

    pub fn is_left_descent(&self, w: W0, s: usize) -> bool {
        self.length(self.mul(self.simple(s), w)) < self.length(w)
    }

    /// Index of a simple root among the positive roots.
    pub fn simple_root_index(&self, s: usize) -> usize {
        self.positive_roots.iter().position(|r| *r == self.simple_roots[s]).unwrap()
    }

    /// The positive root whose coroot is the highest coroot. It defines the
    /// affine simple reflection `s_0 = t_theta s_theta`. In simply-laced types it
    /// is the highest root; in B2 and G2 it is the highest short root.
    pub fn affine_root_index(&self) -> usize {
        (0..self.nu).max_by_key(|&k| self.positive_coroots[k].iter().sum::<i32>()).unwrap()
    }

    /// The reflection `s_beta` for the `k`-th positive root, as a `W_0` index.
    pub fn reflection(&self, k: usize) -> W0 {
        let n = self.rank;
        let root = self.positive_roots[k];
        let cor = &self.positive_coroots[k];
        // s(x) = x - <x, beta^vee> beta; column j is s(x_j)
        let m: IntMatrix = (0..n).map(|i| (0..n).map(|j| i32::from(i == j) - cor[j] * root.get(i)).collect()).collect();
        self.matrix_index[&m]
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversion_count(&self, w: W0) -> usize {
        (0..self.nu).filter(|&k| !self.maps_positive(w, k)).count()
    }

    /// `sum_{w in W_0} q^{l(w)}` as coefficients of `q^0, q^1, ...`.
    pub fn poincare_polynomial(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.nu + 1];
        for w in &self.weyl {
            out[w.length] += 1;
        }
        out
    }

    /// Checks `prod_{alpha>0} (1 - q^{1+<rho,alpha^vee>}) = P(q) prod_{alpha>0} (1 - q^{<rho,alpha^vee>})`
    /// as an identity of integer polynomials.
    pub fn poincare_product_identity_holds(&self) -> bool {
        let mut num = vec![1i64];
        let mut den = vec![1i64];
        for k in 0..self.nu {
            let h = self.pairing(&self.rho, k) as usize;
            num = poly_mul(&num, &one_minus_q_pow(h + 1));
            den = poly_mul(&den, &one_minus_q_pow(h));
        }
        trim(poly_mul(&self.poincare_polynomial(), &den)) == trim(num)
    }
}

fn one_minus_q_pow(k: usize) -> Vec<i64> {
    let mut p = vec![0; k + 1];
    p[0] = 1;
    p[k] -= 1;
    p
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Evaluate an integer polynomial in `q` at a rational point.
pub fn eval_int_poly(p: &[i64], x: &crate::scalar::Q) -> crate::scalar::Q {
    use num::Zero;
    p.iter().rev().fold(crate::scalar::Q::zero(), |acc, c| acc * x + crate::scalar::int(*c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_group_orders() {
        let expected = [
            (RootType::A1, 2, 1),
            (RootType::A2, 6, 3),
            (RootType::B2, 8, 4),
            (RootType::G2, 12, 6),
            (RootType::A3, 24, 6),
        ];
        for (t, order, nu) in expected {
            let d = RootDatum::build(t);
            assert_eq!(d.order(), order, "{t}");
            assert_eq!(d.nu, nu, "{t}");
            assert_eq!(d.length(d.longest), nu);
            assert_eq!(d.positive_roots.len(), nu);
        }
    }

    #[test]
    fn a2_positive_roots() {
        let d = RootDatum::build(RootType::A2);
        let mut simple: Vec<Vec<i32>> = d.positive_roots_simple.clone();
        simple.sort();
        assert_eq!(simple, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn sum_of_positive_roots_is_two_rho() {
        for t in RootType::ALL {
            let d = RootDatum::build(t);
            let sum = d.positive_roots.iter().fold(Weight::zero(d.rank), |a, b| a + *b);
            assert_eq!(sum, d.rho.scaled(2), "{t}");
        }
    }

    #[test]
    fn action_examples() {
        let a1 = RootDatum::build(RootType::A1);
        let s = a1.simple(0);
        assert_eq!(a1.act(s, &Weight::new(&[1])), Weight::new(&[-1]));
        let a2 = RootDatum::build(RootType::A2);
        assert_eq!(a2.act(a2.simple(0), &Weight::new(&[1, 0])), Weight::new(&[-1, 1]));
        assert_eq!(a2.act(0, &Weight::new(&[3, -2])), Weight::new(&[3, -2]));
    }

    #[test]
    fn longest_element_negates_positive_roots_and_maps_dominant_to_antidominant() {
        for t in RootType::ALL {
            let d = RootDatum::build(t);
            for k in 0..d.nu {
                assert!(!d.maps_positive(d.longest, k));
            }
            let x = Weight::new(&vec![2; d.rank][..]);
            assert!(d.act(d.longest, &x).is_antidominant());
        }
    }

    #[test]
    fn lengths_match_inversions_and_group_axioms() {
        for t in RootType::ALL {
            let d = RootDatum::build(t);
            for a in 0..d.order() {
                assert_eq!(d.length(a), d.inversion_count(a));
                assert_eq!(d.length(d.inv(a)), d.length(a));
                for b in 0..d.order() {
                    assert!(d.length(d.mul(a, b)) <= d.length(a) + d.length(b));
                }
            }
        }
    }

    #[test]
    fn poincare_polynomials() {
        assert_eq!(RootDatum::build(RootType::A1).poincare_polynomial(), vec![1, 1]);
        let a2 = RootDatum::build(RootType::A2).poincare_polynomial();
        assert_eq!(a2, vec![1, 2, 2, 1]);
        assert_eq!(eval_int_poly(&a2, &crate::scalar::int(-1)), crate::scalar::int(0));
        for t in RootType::ALL {
            assert!(RootDatum::build(t).poincare_product_identity_holds(), "{t}");
        }
    }

    #[test]
    fn affine_root_is_dominant_and_b2_uses_short_root() {
        let d = RootDatum::build(RootType::B2);
        let k = d.affine_root_index();
        assert!(d.positive_roots[k].is_dominant());
        assert_eq!(d.positive_coroots[k].iter().sum::<i32>(), 3);
    }

    #[test]
    fn parse_type() {
        assert_eq!("b2".parse::<RootType>().unwrap(), RootType::B2);
        assert!("E8".parse::<RootType>().is_err());
    }
}
