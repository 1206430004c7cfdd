use std::sync::Arc;

use hecke_core::root_data::{RootDatum, RootType};
use hecke_core::weyl_affine::{AffineWeyl, ExtAffineElt};
use proptest::prelude::*;

fn group(t: RootType) -> AffineWeyl {
    AffineWeyl::new(Arc::new(RootDatum::build(t)))
}

/// An element built from an Ω-twist and a word in the simple reflections.
fn element(aff: &AffineWeyl, omega: usize, letters: &[usize]) -> ExtAffineElt {
    let om = aff.omega_elements();
    let mut u = om[omega % om.len()];
    for &l in letters {
        let s = aff.simples()[l % aff.simples().len()];
        u = aff.mul(&u, &aff.simple(s));
    }
    u
}

fn word() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0usize..8, prop::collection::vec(0usize..8, 0..8))
}

const TYPES: [RootType; 4] = [RootType::A1, RootType::A2, RootType::B2, RootType::G2];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn length_is_subadditive(a in word(), b in word()) {
        for t in TYPES {
            let aff = group(t);
            let u = element(&aff, a.0, &a.1);
            let v = element(&aff, b.0, &b.1);
            prop_assert!(aff.length(&aff.mul(&u, &v)) <= aff.length(&u) + aff.length(&v));
            prop_assert_eq!(aff.length(&aff.inv(&u)), aff.length(&u));
            prop_assert!(aff.length(&u) <= a.1.len());
        }
    }

    #[test]
    fn reduced_words_evaluate_back(a in word()) {
        for t in TYPES {
            let aff = group(t);
            let u = element(&aff, a.0, &a.1);
            let w = aff.reduced_word(&u);
            prop_assert_eq!(w.len(), aff.length(&u));
            prop_assert_eq!(aff.evaluate(&w), u);
        }
    }

    #[test]
    fn descents_shorten(a in word()) {
        for t in TYPES {
            let aff = group(t);
            let u = element(&aff, a.0, &a.1);
            for &s in aff.simples() {
                let us = aff.mul(&u, &aff.simple(s));
                let shorter = aff.length(&us) < aff.length(&u);
                prop_assert_eq!(aff.is_right_descent(&u, s), shorter);
                prop_assert_eq!(aff.length(&us).abs_diff(aff.length(&u)), 1);
            }
        }
    }

    #[test]
    fn canonical_factorization_is_unique_and_additive(a in word()) {
        for t in TYPES {
            let aff = group(t);
            let u = element(&aff, a.0, &a.1);
            let f = aff.factor_canonical(&u).unwrap();
            prop_assert_eq!(f.solutions, 1);
            prop_assert!(f.length_additive);
            prop_assert!(f.x.is_antidominant());
            let back = aff.mul(&aff.mul(&aff.finite(f.w), &aff.translation(f.x)), &aff.finite(f.v));
            prop_assert_eq!(back, u);
        }
    }
}

#[test]
fn affine_reflection_is_an_involution_of_length_one() {
    for t in TYPES {
        let aff = group(t);
        for &s in aff.simples() {
            let e = aff.simple(s);
            assert_eq!(aff.length(&e), 1, "{t} {s}");
            assert_eq!(aff.mul(&e, &e), aff.identity());
        }
        for om in aff.omega_elements() {
            assert_eq!(aff.length(om), 0);
        }
    }
}

#[test]
fn dominant_translation_lengths() {
    for t in TYPES {
        let aff = group(t);
        let d = aff.datum().clone();
        for x in aff.weight_box(2).into_iter().filter(|x| x.is_dominant()) {
            let expected: i32 = (0..d.nu).map(|k| d.pairing(&x, k)).sum();
            let tx = aff.translation(x);
            assert_eq!(aff.length(&tx) as i32, expected, "{t} {x}");
            let w0tx = aff.mul(&aff.finite(d.longest), &tx);
            assert_eq!(aff.length(&w0tx), d.nu + aff.length(&tx));
        }
    }
}

#[test]
fn bruhat_on_finite_group_is_subword_order() {
    for t in TYPES {
        let aff = group(t);
        let d = aff.datum().clone();
        // Subword closure of reduced words in W_0.
        for w in 0..d.order() {
            let word = &d.weyl[w].word;
            let mut below = std::collections::BTreeSet::new();
            for mask in 0u32..(1 << word.len()) {
                let mut e = d.identity();
                for (i, &s) in word.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        e = d.mul(e, d.simple(s));
                    }
                }
                below.insert(e);
            }
            for u in 0..d.order() {
                assert_eq!(aff.bruhat_leq(&aff.finite(u), &aff.finite(w)), below.contains(&u), "{t}");
            }
        }
    }
}
