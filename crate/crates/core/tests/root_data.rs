use hecke_core::root_data::{RootDatum, RootType, Weight};

#[test]
fn length_is_subadditive_and_inverse_invariant() {
    for t in RootType::ALL {
        let d = RootDatum::build(t);
        for w in 0..d.order() {
            assert_eq!(d.length(d.inv(w)), d.length(w), "{t}");
            assert_eq!(d.inversion_count(w), d.length(w), "{t}");
            for u in 0..d.order() {
                assert!(d.length(d.mul(w, u)) <= d.length(w) + d.length(u), "{t}");
            }
        }
    }
}

#[test]
fn multiplication_table_is_a_group() {
    for t in RootType::ALL {
        let d = RootDatum::build(t);
        let e = d.identity();
        for a in 0..d.order() {
            assert_eq!(d.mul(a, d.inv(a)), e);
            let row: std::collections::BTreeSet<_> = (0..d.order()).map(|b| d.mul(a, b)).collect();
            assert_eq!(row.len(), d.order(), "{t}: row {a} is not a permutation");
            for b in 0..d.order() {
                for c in 0..d.order() {
                    assert_eq!(d.mul(d.mul(a, b), c), d.mul(a, d.mul(b, c)));
                }
            }
        }
        // The action on weights is faithful.
        let probe = d.rho;
        let images: std::collections::BTreeSet<Weight> = (0..d.order()).map(|w| d.act(w, &probe)).collect();
        assert_eq!(images.len(), d.order(), "{t}");
    }
}

#[test]
fn positive_roots_sum_to_two_rho() {
    for t in RootType::ALL {
        let d = RootDatum::build(t);
        let mut sum = Weight::zero(d.rank);
        for a in &d.positive_roots {
            sum = sum + *a;
        }
        assert_eq!(sum, d.rho.scaled(2), "{t}");
    }
}

#[test]
fn group_orders_and_longest_element() {
    let expected = [
        (RootType::A1, 2, 1),
        (RootType::A2, 6, 3),
        (RootType::B2, 8, 4),
        (RootType::G2, 12, 6),
        (RootType::A3, 24, 6),
    ];
    for (t, order, nu) in expected {
        let d = RootDatum::build(t);
        assert_eq!((d.order(), d.nu), (order, nu), "{t}");
        assert_eq!(d.length(d.longest), nu);
        assert_eq!(d.act(d.longest, &d.rho), -d.rho);
    }
}
