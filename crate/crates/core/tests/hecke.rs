use std::sync::Arc;

use hecke_core::hecke_bernstein::{BernsteinAlgebra, HeckeElt};
use hecke_core::hecke_im::{IMAlgebra, IMHeckeElt};
use hecke_core::laurent::LaurentPoly;
use hecke_core::quotient_ht::orbit_sum;
use hecke_core::root_data::{RootDatum, RootType, Weight};
use hecke_core::scalar::{int, ScalarQ};
use hecke_core::weyl_affine::{AffineWeyl, ExtAffineElt};
use proptest::prelude::*;

const TYPES: [RootType; 4] = [RootType::A1, RootType::A2, RootType::B2, RootType::G2];

/// Up to two terms `T_w c v^k θ_x` with `w` an index reduced mod `|W_0|`.
type Spec = Vec<(usize, Vec<i32>, i64, i32)>;

fn spec() -> impl Strategy<Value = Spec> {
    prop::collection::vec((0usize..24, prop::collection::vec(-1i32..=1, 2), -2i64..=2, -1i32..=1), 1..=2)
}

fn elt(d: &RootDatum, s: &Spec) -> HeckeElt {
    let mut h = HeckeElt::zero();
    for (w, x, c, k) in s {
        let f = LaurentPoly::term(Weight::new(&x[..d.rank]), ScalarQ::monomial(int(*c), *k));
        h.add_term(w % d.order(), &f);
    }
    h
}

fn check_associativity(t: RootType, a: &Spec, b: &Spec, c: &Spec) -> Result<(), TestCaseError> {
    let alg = BernsteinAlgebra::new(Arc::new(RootDatum::build(t)));
    let d = alg.datum().clone();
    let (a, b, c) = (elt(&d, a), elt(&d, b), elt(&d, c));
    prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)), "{}", t);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn associativity_a1(a in spec(), b in spec(), c in spec()) { check_associativity(RootType::A1, &a, &b, &c)?; }

    #[test]
    fn associativity_a2(a in spec(), b in spec(), c in spec()) { check_associativity(RootType::A2, &a, &b, &c)?; }

    #[test]
    fn associativity_b2(a in spec(), b in spec(), c in spec()) { check_associativity(RootType::B2, &a, &b, &c)?; }

    #[test]
    fn associativity_g2(a in spec(), b in spec(), c in spec()) { check_associativity(RootType::G2, &a, &b, &c)?; }
}

fn im_word() -> impl Strategy<Value = Vec<(usize, Vec<usize>, i64, i32)>> {
    prop::collection::vec((0usize..4, prop::collection::vec(0usize..4, 0..5), -2i64..=2, -1i32..=1), 1..=3)
}

fn im_elt(aff: &AffineWeyl, spec: &[(usize, Vec<usize>, i64, i32)]) -> IMHeckeElt {
    let mut h = IMHeckeElt::zero();
    for (om, letters, c, k) in spec {
        let omegas = aff.omega_elements();
        let mut u: ExtAffineElt = omegas[om % omegas.len()];
        for &l in letters {
            u = aff.mul(&u, &aff.simple(aff.simples()[l % aff.simples().len()]));
        }
        h.add_term(u, &ScalarQ::monomial(int(*c), *k));
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn presentations_agree(a in im_word(), b in im_word(), c in im_word()) {
        for t in [RootType::A1, RootType::A2, RootType::B2] {
            let aff = Arc::new(AffineWeyl::new(Arc::new(RootDatum::build(t))));
            let mut im = IMAlgebra::new(aff.clone(), 12);
            let (a, b, c) = (im_elt(&aff, &a), im_elt(&aff, &b), im_elt(&aff, &c));
            prop_assert_eq!(im.mul(&im.mul(&a, &b), &c), im.mul(&a, &im.mul(&b, &c)));
            let (ba, bb) = (im.to_bernstein(&a).unwrap(), im.to_bernstein(&b).unwrap());
            prop_assert_eq!(im.from_bernstein(&ba), a.clone());
            let prod = im.to_bernstein(&im.mul(&a, &b)).unwrap();
            prop_assert_eq!(prod, im.bernstein().mul(&ba, &bb));
        }
    }
}

#[test]
fn orbit_sums_are_central() {
    for t in TYPES {
        let d = Arc::new(RootDatum::build(t));
        let alg = BernsteinAlgebra::new(d.clone());
        for x in [Weight::fundamental(d.rank, 0), Weight::fundamental(d.rank, d.rank - 1), d.rho] {
            let z = alg.from_theta(&orbit_sum(&d, &x));
            assert!(alg.is_central(&z), "{t} {x}");
            for s in 0..d.rank {
                let ts = alg.t_simple(s);
                assert_eq!(alg.mul(&ts, &z), alg.mul(&z, &ts));
            }
        }
    }
}

#[test]
fn simple_generators_act_by_scalars_on_c_and_cprime() {
    for t in TYPES {
        let d = Arc::new(RootDatum::build(t));
        let alg = BernsteinAlgebra::new(d.clone());
        let (c, cp) = (alg.c_element(), alg.cprime_element());
        for s in 0..d.rank {
            let ts = alg.t_simple(s);
            assert_eq!(alg.mul(&ts, &c), c.scale(&ScalarQ::q_pow(1)), "{t}");
            assert_eq!(alg.mul(&c, &ts), c.scale(&ScalarQ::q_pow(1)), "{t}");
            assert_eq!(alg.mul(&ts, &cp), cp.scale(&ScalarQ::from_int(-1)), "{t}");
            assert_eq!(alg.mul(&cp, &ts), cp.scale(&ScalarQ::from_int(-1)), "{t}");
        }
    }
}

#[test]
fn kl_polynomials_are_nonnegative() {
    for (t, len) in [(RootType::A1, 8), (RootType::A2, 6), (RootType::B2, 5)] {
        let aff = Arc::new(AffineWeyl::new(Arc::new(RootDatum::build(t))));
        let mut im = IMAlgebra::new(aff.clone(), len);
        for layer in aff.ball(len) {
            for w in layer {
                let below = im.kl().lower_interval(&w);
                for y in below.iter() {
                    let p = im.kl().polynomial(y, &w).unwrap();
                    assert_eq!(p.first().copied(), Some(1), "{t} P({y:?}, {w:?})");
                    assert!(p.iter().all(|&c| c >= 0), "{t} P({y:?}, {w:?}) = {p:?}");
                }
            }
        }
    }
}

#[test]
fn cell_module_bases_are_independent() {
    for t in [RootType::A1, RootType::A2, RootType::B2] {
        let aff = Arc::new(AffineWeyl::new(Arc::new(RootDatum::build(t))));
        let im = IMAlgebra::new(aff, 4);
        let (n, rc, rcp) = im.cell_module_ranks(1);
        assert_eq!((rc, rcp), (n, n), "{t}");
    }
}
