use kummer_brauer::classify::{brauer_of_cxc, brauer_of_exe, brauer_of_y, cube_case_consistency, BrauerGroup};
use kummer_brauer::cubeclass::{
    choose_lambda, cube_class, distinct_cube_root_fields, is_cube, normalize_triple, rational, LambdaSource,
};
use kummer_brauer::hecke::jacobian_d;
use kummer_brauer::intmatrix::IntMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![1i64..100_000, -100_000i64..-1]
}

/// Fraction-free determinant.
fn bareiss_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k] == BigInt::from(0) {
            let Some(s) = (k + 1..n).find(|&i| a[i][k] != BigInt::from(0)) else { return 0.into() };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

proptest! {
    #[test]
    fn cube_class_ignores_cubes(n in nonzero(), d in 1i64..1000, k in 1i64..60) {
        let x = rational(n, d);
        let k3 = BigRational::from_integer(BigInt::from(k).pow(3));
        prop_assert_eq!(cube_class(&(&x * &k3)).unwrap(), cube_class(&x).unwrap());
        prop_assert_eq!(cube_class(&(&x / &k3)).unwrap(), cube_class(&x).unwrap());
    }

    #[test]
    fn cube_class_is_multiplicative(a in nonzero(), b in nonzero()) {
        let (x, y) = (rational(a, 1), rational(b, 1));
        prop_assert_eq!(cube_class(&(&x * &y)).unwrap(), cube_class(&x).unwrap().mul(&cube_class(&y).unwrap()));
        prop_assert!(cube_class(&(&x * &x * &x)).unwrap().is_trivial());
        prop_assert_eq!(cube_class(&(&x * &x)).unwrap(), cube_class(&x).unwrap().square());
    }

    #[test]
    fn cubes_detected(n in nonzero(), d in 1i64..2000) {
        let x = rational(n, d);
        prop_assert!(is_cube(&(&x * &x * &x)).unwrap());
        prop_assert_eq!(is_cube(&x).unwrap(), cube_class(&x).unwrap().is_trivial());
    }

    #[test]
    fn normalize_is_scale_invariant(a in nonzero(), b in nonzero(), c in nonzero(), k in 1i64..500) {
        let t = normalize_triple(a, b, c).unwrap();
        prop_assert_eq!(normalize_triple(k * a, -k * b, k * c).unwrap(), t);
        let g = num_integer::Integer::gcd(&t.a(), &num_integer::Integer::gcd(&t.b(), &t.c()));
        prop_assert_eq!(g, 1);
    }

    #[test]
    fn group_classification_agrees(a in 1i64..200, b in 1i64..200, c in 1i64..200) {
        let t = normalize_triple(a, b, c).unwrap();
        prop_assert!(cube_case_consistency(&t));
        let exe = brauer_of_exe(&jacobian_d(&t)).unwrap();
        if let Ok(y) = brauer_of_y(&t) {
            prop_assert_eq!(Ok(y), brauer_of_cxc(&t));
            prop_assert_ne!(exe, BrauerGroup::Z3);
            prop_assert_eq!(y == BrauerGroup::Z2, exe == BrauerGroup::Z2);
        } else {
            prop_assert_eq!(exe, BrauerGroup::Z3);
        }
    }

    #[test]
    fn smith_product_is_determinant(entries in proptest::collection::vec(-30i64..30, 16)) {
        let rows: Vec<Vec<i64>> = entries.chunks(4).map(<[i64]>::to_vec).collect();
        let det = bareiss_det(&rows).abs();
        let inv = IntMatrix::from_rows(&rows).smith_invariants();
        if det == BigInt::from(0) {
            prop_assert!(inv.len() < 4);
        } else {
            prop_assert_eq!(inv.len(), 4);
            prop_assert_eq!(inv.iter().product::<BigInt>(), det);
            for w in inv.windows(2) {
                prop_assert!(num_integer::Integer::is_multiple_of(&w[1], &w[0]));
            }
        }
    }
}

#[test]
fn lambda_choice_exhaustive() {
    for a in 1..=30i64 {
        for b in 1..=30i64 {
            for c in 1..=30i64 {
                let t = normalize_triple(a, b, c).unwrap();
                let abc = BigRational::from_integer(t.abc());
                let Ok(l) = choose_lambda(&t) else {
                    assert!(is_cube(&abc).unwrap());
                    continue;
                };
                let (x, y) = match l.source {
                    LambdaSource::AOverB => (t.a(), t.b()),
                    LambdaSource::BOverC => (t.b(), t.c()),
                    LambdaSource::COverA => (t.c(), t.a()),
                    LambdaSource::Given => unreachable!(),
                };
                assert_eq!(l.as_rational(), rational(x as i64, y as i64));
                assert!(distinct_cube_root_fields(&abc, &l.as_rational()).unwrap(), "{t} -> {l}");
            }
        }
    }
}
