mod common;

use common::{order_three_blocks, random_unimodular};
use kummer_brauer::nslattice::{
    cyclic_h1, image_is_primitive, intersection_pairing, inverse_graph, rho_action, EndElement, EndRing,
    KaniClass, LatticeAction,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Herm = [[EndElement; 2]; 2];

fn imaginary_params() -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for c in -20i64..=20 {
        for d in 1i64..=20 {
            if c * c - 4 * d < 0 {
                out.push((c, d));
            }
        }
    }
    out
}

/// `G X G^H` for the matrix `G` of `rho(P, Q) = (Q, -P - Q)` acting on
/// Hermitian matrices `[[b, f], [f^∨, a]]` over `End(E)`.
fn rosati_image(ring: &EndRing, x: &KaniClass) -> KaniClass {
    let z = |n: i64| EndElement::int(n);
    let add = |p: EndElement, q: EndElement| EndElement::new(p.u + q.u, p.v + q.v);
    let mm = |a: &Herm, b: &Herm| -> Herm {
        let mut out = [[z(0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = add(ring.mul(a[i][0], b[0][j]), ring.mul(a[i][1], b[1][j]));
            }
        }
        out
    };
    let g: Herm = [[z(0), z(1)], [z(-1), z(-1)]];
    let gh: Herm = [[z(0), z(-1)], [z(1), z(-1)]];
    let h: Herm = [[z(x.b), x.f], [ring.dual(x.f), z(x.a)]];
    let y = mm(&mm(&g, &h), &gh);
    assert_eq!(y[0][0].v, 0);
    assert_eq!(y[1][1].v, 0);
    assert_eq!(y[1][0], ring.dual(y[0][1]));
    KaniClass::new(y[1][1].u, y[0][0].u, y[0][1])
}

#[test]
fn rho_matrix_agrees_with_rosati_model() {
    let mut rng = StdRng::seed_from_u64(3);
    for (c, d) in imaginary_params() {
        let action = rho_action(Some((c, d))).unwrap();
        let ring = action.ring;
        for _ in 0..20 {
            let x = KaniClass::new(
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
                EndElement::new(rng.gen_range(-9..=9), rng.gen_range(-9..=9)),
            );
            assert_eq!(action.apply(&x), rosati_image(&ring, &x), "c = {c}, d = {d}, x = {x:?}");
        }
    }
    let action = rho_action(None).unwrap();
    for a in -3..=3 {
        for b in -3..=3 {
            for u in -3..=3 {
                let x = KaniClass::new(a, b, EndElement::int(u));
                assert_eq!(action.apply(&x), rosati_image(&EndRing::NonCm, &x));
            }
        }
    }
}

#[test]
fn set_theoretic_pullbacks() {
    // rho*(e') = e, rho*(e) = Γ_{-1}, rho*(Δ) = Γ^{-1}_{-2} on the non-CM part
    let action = rho_action(Some((1, 1))).unwrap();
    let ring = action.ring;
    assert_eq!(action.apply(&KaniClass::e_prime()), KaniClass::e());
    assert_eq!(action.apply(&KaniClass::e()), KaniClass::graph(&ring, EndElement::int(-1)));
    let diagonal = KaniClass::graph(&ring, EndElement::int(1));
    assert_eq!(action.apply(&diagonal), inverse_graph(&ring, EndElement::int(-2)).unwrap());
}

#[test]
fn rho_preserves_pairing_and_has_order_three() {
    let mut rng = StdRng::seed_from_u64(5);
    let mut actions = vec![rho_action(None).unwrap()];
    actions.extend([(1, 1), (0, 1), (1, 2), (-3, 7), (5, 19)].map(|p| rho_action(Some(p)).unwrap()));
    for action in &actions {
        assert!(action.has_order_three());
        let cm = matches!(action.ring, EndRing::Cm { .. });
        for _ in 0..500 {
            let mut gen = || {
                KaniClass::new(
                    rng.gen_range(-50..=50),
                    rng.gen_range(-50..=50),
                    EndElement::new(rng.gen_range(-50..=50), if cm { rng.gen_range(-50..=50) } else { 0 }),
                )
            };
            let (x, y) = (gen(), gen());
            assert_eq!(
                intersection_pairing(&action.ring, &action.apply(&x), &action.apply(&y)),
                intersection_pairing(&action.ring, &x, &y)
            );
        }
    }
}

#[test]
fn h1_vanishes_for_every_rho() {
    for (c, d) in imaginary_params() {
        let action = rho_action(Some((c, d))).unwrap();
        let h1 = cyclic_h1(&action).unwrap();
        assert!(h1.is_trivial(), "c = {c}, d = {d}");
        assert_eq!((h1.image_rank, h1.kernel_rank), (2, 2));
        assert!(image_is_primitive(&action));
    }
    let h1 = cyclic_h1(&rho_action(None).unwrap()).unwrap();
    assert!(h1.is_trivial());
}

#[test]
fn h1_of_random_order_three_lattices() {
    // H^1 is a conjugation invariant: Z/3 for each w-block, 0 for the
    // trivial and permutation blocks.
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..60 {
        let (t, w, c) = (rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3));
        if w + c == 0 {
            continue;
        }
        let m = order_three_blocks(t, w, c);
        let (u, u_inv) = random_unimodular(m.rows(), &mut rng);
        let conj = &(&u * &m) * &u_inv;
        let action = LatticeAction { ring: EndRing::NonCm, matrix: conj };
        let h1 = cyclic_h1(&action).unwrap();
        assert_eq!(h1.order(), Some(3u64.pow(w as u32)), "blocks ({t}, {w}, {c})");
        assert_eq!(h1.invariant_factors.iter().filter(|&&d| d == 3).count(), w);
        assert_eq!(h1.kernel_rank, 2 * w + 2 * c);
    }
}

