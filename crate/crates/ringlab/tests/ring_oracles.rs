//! Core-ring oracles: presentations validate against direct matrix models,
//! perturbed presentations fail with the exact witness, and the arithmetic
//! laws hold on sampled triples.

mod common;

use common::ModelRing;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringlab::construct::matrix_ring;
use ringlab::corpus::builtin;
use ringlab::parse::{parse_ring, serialize_ring};
use ringlab::ring::{validate_ring, Caps, FiniteRing, Law};

#[test]
fn corpus_rings_validate() {
    for r in builtin() {
        assert!(validate_ring(&r).ok(), "{}", r.name());
    }
}

#[test]
fn matrix_units_presentation_validates_against_the_model() {
    // M2(Z2) on the matrix-unit basis: the structure constants realize
    // E_ij E_kl = delta_jk E_il, checked exhaustively against the model.
    let r = matrix_ring(&ringlab::corpus::cyclic_ring(2), 2, &Caps::default()).unwrap();
    assert!(validate_ring(&r).ok());
    let model = ModelRing::matrices(2, 2);
    for a in &model.elems {
        for b in &model.elems {
            let expect = model.mul(a, b);
            let ra = common::full_matrix_coords(&r, a);
            let rb = common::full_matrix_coords(&r, b);
            let got = r.mul(&ra, &rb).unwrap();
            assert_eq!(got, common::full_matrix_coords(&r, &expect));
        }
    }
}

#[test]
fn triangular_presentation_matches_the_model() {
    let r = ringlab::construct::upper_triangular_ring(
        &ringlab::corpus::cyclic_ring(2),
        2,
        &Caps::default(),
    )
    .unwrap();
    let model = ModelRing::upper_triangular(2, 2);
    assert_eq!(r.order(), model.elems.len() as u64);
    for a in &model.elems {
        for b in &model.elems {
            let expect = model.mul(a, b);
            let got = r
                .mul(
                    &common::triangular_coords(&r, 2, a),
                    &common::triangular_coords(&r, 2, b),
                )
                .unwrap();
            assert_eq!(got, common::triangular_coords(&r, 2, &expect));
        }
    }
}

/// The negative-test set: perturbed presentations fail with exact witnesses.
#[test]
fn perturbed_presentations_fail_with_witnesses() {
    // identity law: one = (1) forces e1 e1 = e1
    let bad = FiniteRing::new("badid", vec![4], vec![1], vec![vec![2]]).unwrap();
    let rep = validate_ring(&bad);
    assert!(rep
        .violations
        .iter()
        .any(|v| v.law == Law::IdentityLeft && v.indices == vec![1]));

    // order compatibility: Z2 e1 + Z4 e2 with e1 = 1 demands 2 e2 = 0
    let bad = FiniteRing::new(
        "badorders",
        vec![2, 4],
        vec![1, 0],
        vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 0]],
    )
    .unwrap();
    let rep = validate_ring(&bad);
    assert!(rep
        .violations
        .iter()
        .any(|v| v.law == Law::OrderCompatibility && v.indices == vec![1, 2]));

    // associativity at the exact triple (2, 2, 2)
    let mut products = vec![vec![0u64; 3]; 9];
    products[0] = vec![1, 0, 0];
    products[1] = vec![0, 1, 0];
    products[2] = vec![0, 0, 1];
    products[3] = vec![0, 1, 0];
    products[4] = vec![0, 0, 1]; // e2 e2 = e3
    products[6] = vec![0, 0, 1];
    products[7] = vec![0, 1, 0]; // e3 e2 = e2
    let bad = FiniteRing::new("nonassoc", vec![2, 2, 2], vec![1, 0, 0], products).unwrap();
    let rep = validate_ring(&bad);
    assert!(rep
        .violations
        .iter()
        .any(|v| v.law == Law::Associativity && v.indices == vec![2, 2, 2]));
}

/// Bilinearity spot-check: 200 random triples per corpus ring.
#[test]
fn multiplication_is_bilinear_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for r in builtin() {
        for _ in 0..200 {
            let pick = |rng: &mut ChaCha8Rng| r.element_at(rng.gen_range(0..r.order()));
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let bc = r.add(&b, &c).unwrap();
            let left = r.mul(&a, &bc).unwrap();
            let right = r
                .add(&r.mul(&a, &b).unwrap(), &r.mul(&a, &c).unwrap())
                .unwrap();
            assert_eq!(left, right, "{}: a(b+c) = ab+ac", r.name());
            let left = r.mul(&bc, &a).unwrap();
            let right = r
                .add(&r.mul(&b, &a).unwrap(), &r.mul(&c, &a).unwrap())
                .unwrap();
            assert_eq!(left, right, "{}: (b+c)a = ba+ca", r.name());
        }
    }
}

/// Unit sets are closed under multiplication and contain 1, and the one-sided
/// inverse searches agree with the two-sided definition.
#[test]
fn unit_sets_are_multiplicative_groups() {
    for r in builtin().into_iter().filter(|r| r.order() <= 64) {
        let units = ringlab::ideals::units(&r);
        assert!(units.contains(&r, r.one()).unwrap(), "{}", r.name());
        for a in units.members() {
            for b in units.members() {
                let p = r.mul(a, b).unwrap();
                assert!(units.contains(&r, &p).unwrap(), "{}", r.name());
            }
            // two-sided inverse really exists
            let inv = ringlab::ring::unit_inverse(&r, a).unwrap().unwrap();
            assert_eq!(r.mul(a, &inv).unwrap(), *r.one());
            assert_eq!(r.mul(&inv, a).unwrap(), *r.one());
        }
        // elements with a right inverse coincide with the units
        for a in r.elements() {
            let has_right = r.elements().any(|b| r.mul(&a, &b).unwrap() == *r.one());
            assert_eq!(
                has_right,
                units.contains(&r, &a).unwrap(),
                "{}: one-sided inverses pick out exactly the units",
                r.name()
            );
        }
    }
}

#[test]
fn characteristic_two_arithmetic() {
    let t2z2 = ringlab::construct::upper_triangular_ring(
        &ringlab::corpus::cyclic_ring(2),
        2,
        &Caps::default(),
    )
    .unwrap();
    let e12 = t2z2.element(&[0, 1, 0]).unwrap();
    assert_eq!(t2z2.add(&e12, &e12).unwrap(), t2z2.zero());

    let z2xz2 = ringlab::construct::direct_product(
        &ringlab::corpus::cyclic_ring(2),
        &ringlab::corpus::cyclic_ring(2),
        &Caps::default(),
    )
    .unwrap();
    let both = z2xz2.element(&[1, 1]).unwrap();
    assert_eq!(z2xz2.neg(&both).unwrap(), both);
}

#[test]
fn corpus_roundtrip_is_byte_identical() {
    for r in builtin() {
        let text = serialize_ring(&r);
        let back = parse_ring(&text).unwrap();
        assert_eq!(serialize_ring(&back), text, "{}", r.name());
        assert_eq!(back.order(), r.order());
    }
}
