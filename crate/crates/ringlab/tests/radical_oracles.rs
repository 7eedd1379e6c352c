//! Radical, annihilator, and lattice oracles: every derived set is compared
//! against the independent matrix model or a frozen value computed from it.

mod common;

use common::ModelRing;
use ringlab::construct::{matrix_ring, upper_triangular_ring};
use ringlab::corpus::{builtin, cyclic_ring};
use ringlab::ideals::{
    annihilator, central_idempotents, generated, idempotents, is_nilpotent_ideal, jacobson_radical,
    maximal_right_ideals, nil_elements, right_ideals, sandwich, units, Side,
};
use ringlab::ring::{Caps, FiniteRing};
use ringlab::set::{ElementSet, SetKind};

fn caps() -> Caps {
    Caps::default()
}

fn m2z2() -> FiniteRing {
    matrix_ring(&cyclic_ring(2), 2, &caps()).unwrap()
}

fn t2z2() -> FiniteRing {
    upper_triangular_ring(&cyclic_ring(2), 2, &caps()).unwrap()
}

fn set_of(ring: &FiniteRing, coords: &[&[u64]]) -> Vec<ringlab::RingElement> {
    coords.iter().map(|c| ring.element(c).unwrap()).collect()
}

#[test]
fn jacobson_agrees_with_the_model() {
    // cyclic rings
    for m in [2u64, 3, 4, 6, 8, 12] {
        let model = ModelRing::zmod(m);
        let expect: Vec<u64> = model
            .jacobson()
            .iter()
            .map(|&i| model.elems[i][0])
            .collect();
        let r = cyclic_ring(m as u32);
        let got: Vec<u64> = jacobson_radical(&r, &caps())
            .unwrap()
            .members()
            .iter()
            .map(|e| e.coords()[0] as u64)
            .collect();
        assert_eq!(got, expect, "J(Z{m})");
    }

    // M2(Z2): the model scans inverses directly, the implementation walks
    // powers; the radical must come out identical.
    let model = ModelRing::matrices(2, 2);
    let r = m2z2();
    let expect: Vec<ringlab::RingElement> = model
        .jacobson()
        .iter()
        .map(|&i| common::full_matrix_coords(&r, &model.elems[i]))
        .collect();
    let got = jacobson_radical(&r, &caps()).unwrap();
    assert_eq!(got.members(), expect.as_slice());
    assert_eq!(got.len(), 1, "M2(Z2) is semisimple");

    // T2(Z2): J = {0, E12}
    let r = t2z2();
    let got = jacobson_radical(&r, &caps()).unwrap();
    assert_eq!(
        got.members(),
        set_of(&r, &[&[0, 0, 0], &[0, 1, 0]]).as_slice()
    );

    // T3(Z2) against the model
    let model = ModelRing::upper_triangular(3, 2);
    let r = upper_triangular_ring(&cyclic_ring(2), 3, &caps()).unwrap();
    let expect: Vec<ringlab::RingElement> = model
        .jacobson()
        .iter()
        .map(|&i| common::triangular_coords(&r, 3, &model.elems[i]))
        .collect();
    let got = jacobson_radical(&r, &caps()).unwrap();
    assert_eq!(got.len(), expect.len());
    for e in &expect {
        assert!(got.contains(&r, e).unwrap());
    }
}

#[test]
fn jacobson_of_m2z4_is_the_even_block() {
    // frozen: J(M2(Z4)) consists of the 16 matrices with every entry even
    let r = matrix_ring(&cyclic_ring(4), 2, &caps()).unwrap();
    let j = jacobson_radical(&r, &caps()).unwrap();
    assert_eq!(j.len(), 16);
    for e in j.members() {
        assert!(e.coords().iter().all(|&c| c % 2 == 0));
    }
}

#[test]
fn radical_is_a_two_sided_ideal_and_vanishes_in_the_quotient() {
    for r in builtin() {
        let j = jacobson_radical(&r, &caps()).unwrap();
        assert!(j.check_closure(&r).unwrap(), "{}", r.name());
        let q = ringlab::construct::quotient_ring(&r, &j, &caps()).unwrap();
        let jq = jacobson_radical(&q.ring, &caps()).unwrap();
        assert_eq!(jq.len(), 1, "J(R/J) = 0 for {}", r.name());
    }
}

#[test]
fn radical_contains_every_nilpotent_two_sided_ideal() {
    for r in builtin().into_iter().filter(|r| r.order() <= 64) {
        let j = jacobson_radical(&r, &caps()).unwrap();
        for ideal in right_ideals(&r, &caps()).unwrap() {
            let as_ideal = ElementSet::new(&r, SetKind::Ideal, ideal.members().to_vec()).unwrap();
            if !as_ideal.check_closure(&r).unwrap() {
                continue; // not two-sided
            }
            if is_nilpotent_ideal(&r, &as_ideal).unwrap().is_some() {
                for e in as_ideal.members() {
                    assert!(j.contains(&r, e).unwrap(), "{}", r.name());
                }
            }
        }
    }
}

#[test]
fn nilpotents_agree_with_the_model() {
    let model = ModelRing::matrices(2, 2);
    let r = m2z2();
    let expect: Vec<ringlab::RingElement> = model
        .nilpotents()
        .iter()
        .map(|&i| common::full_matrix_coords(&r, &model.elems[i]))
        .collect();
    let got = nil_elements(&r);
    assert_eq!(got.len(), 4);
    for e in &expect {
        assert!(got.contains(&r, e).unwrap());
    }
    // frozen: 0, E12, E21, and the all-ones matrix
    assert!(got
        .contains(&r, &r.element(&[1, 1, 1, 1]).unwrap())
        .unwrap());

    assert_eq!(nil_elements(&cyclic_ring(2)).len(), 1);
    assert_eq!(nil_elements(&cyclic_ring(4)).len(), 2);
}

#[test]
fn nilpotents_match_radical_on_commutative_corpus_rings() {
    for r in builtin() {
        if !ringlab::predicates::is_commutative(&r).holds {
            continue;
        }
        let n = nil_elements(&r);
        let j = jacobson_radical(&r, &caps()).unwrap();
        assert_eq!(n.members(), j.members(), "{}", r.name());
    }
}

#[test]
fn annihilator_examples() {
    // r(E11 R) = {0} in M2(Z2)
    let r = m2z2();
    let e11 = r.element(&[1, 0, 0, 0]).unwrap();
    let e11r = generated(
        &r,
        &ElementSet::new(&r, SetKind::Plain, vec![e11]).unwrap(),
        SetKind::RightIdeal,
        &caps(),
    )
    .unwrap();
    let ann = annihilator(&r, &e11r, Side::Right, &caps()).unwrap();
    assert_eq!(ann.members(), &[r.zero()]);

    // r({0}) is everything
    let zero_set = ElementSet::new(&r, SetKind::Plain, vec![r.zero()]).unwrap();
    assert_eq!(
        annihilator(&r, &zero_set, Side::Right, &caps())
            .unwrap()
            .len(),
        16
    );

    // in T2(Z2): E22 R = {0, E22}; its left annihilator is {0, E11} while its
    // right annihilator is {0, E11, E12, E11+E12}
    let t = t2z2();
    let e22 = t.element(&[0, 0, 1]).unwrap();
    let e22r = generated(
        &t,
        &ElementSet::new(&t, SetKind::Plain, vec![e22]).unwrap(),
        SetKind::RightIdeal,
        &caps(),
    )
    .unwrap();
    assert_eq!(
        e22r.members(),
        set_of(&t, &[&[0, 0, 0], &[0, 0, 1]]).as_slice()
    );
    let left = annihilator(&t, &e22r, Side::Left, &caps()).unwrap();
    assert_eq!(
        left.members(),
        set_of(&t, &[&[0, 0, 0], &[1, 0, 0]]).as_slice()
    );
    let right = annihilator(&t, &e22r, Side::Right, &caps()).unwrap();
    assert_eq!(
        right.members(),
        set_of(&t, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]).as_slice()
    );
    // the claimed one-sided closures hold
    assert!(left.check_closure(&t).unwrap());
    assert!(right.check_closure(&t).unwrap());
}

#[test]
fn sandwich_examples_in_t2z2() {
    let t = t2z2();
    let e11 = t.element(&[1, 0, 0]).unwrap();
    let e12 = t.element(&[0, 1, 0]).unwrap();
    let e22 = t.element(&[0, 0, 1]).unwrap();
    let s = sandwich(&t, &e22, &e11, &caps()).unwrap();
    assert_eq!(s.members(), &[t.zero()]);
    let s = sandwich(&t, &e11, &e22, &caps()).unwrap();
    assert_eq!(s.members(), &[t.zero(), e12.clone()]);
    let s = sandwich(&t, &t.zero(), &e11, &caps()).unwrap();
    assert_eq!(s.members(), &[t.zero()]);
}

#[test]
fn generated_ideal_examples() {
    // <E12> two-sided in M2(Z2) is everything: the ring is simple
    let r = m2z2();
    let e12 = ElementSet::new(&r, SetKind::Plain, vec![r.element(&[0, 1, 0, 0]).unwrap()]).unwrap();
    assert_eq!(
        generated(&r, &e12, SetKind::Ideal, &caps()).unwrap().len(),
        16
    );

    // <E12> two-sided in T2(Z2) is {0, E12}
    let t = t2z2();
    let e12 = ElementSet::new(&t, SetKind::Plain, vec![t.element(&[0, 1, 0]).unwrap()]).unwrap();
    let i = generated(&t, &e12, SetKind::Ideal, &caps()).unwrap();
    assert_eq!(
        i.members(),
        set_of(&t, &[&[0, 0, 0], &[0, 1, 0]]).as_slice()
    );
    // and it is nilpotent of index 2
    assert_eq!(is_nilpotent_ideal(&t, &i).unwrap(), Some(2));
}

#[test]
fn set_products_on_matrix_ideals() {
    // J(T2(Z2)) squares to zero; <E12> in M2(Z2) does not
    let t = t2z2();
    let j = jacobson_radical(&t, &caps()).unwrap();
    assert!(ringlab::ideals::set_product_is_zero(&t, &j, &j).unwrap());

    let m = m2z2();
    let e12 = ElementSet::new(&m, SetKind::Plain, vec![m.element(&[0, 1, 0, 0]).unwrap()]).unwrap();
    let full = generated(&m, &e12, SetKind::Ideal, &caps()).unwrap();
    assert!(!ringlab::ideals::set_product_is_zero(&m, &full, &full).unwrap());
}

#[test]
fn right_ideal_lattices_match_brute_force() {
    // M2(Z2): brute-force subset enumeration of all 2^16 subsets
    let model = ModelRing::matrices(2, 2);
    let expect = model.right_ideals_bruteforce();
    let r = m2z2();
    let got = right_ideals(&r, &caps()).unwrap();
    assert_eq!(got.len(), expect.len());
    assert_eq!(got.len(), 5, "0, R, and three maximal right ideals");

    // T2(Z2)
    let model = ModelRing::upper_triangular(2, 2);
    let expect = model.right_ideals_bruteforce();
    let t = t2z2();
    let got = right_ideals(&t, &caps()).unwrap();
    assert_eq!(got.len(), expect.len());

    // every enumerated ideal matches a brute-force one as an element set
    for ideal in &got {
        let mats: Vec<Vec<u64>> = ideal
            .members()
            .iter()
            .map(|e| {
                // triangular layout: positions (0,0), (0,1), (1,1)
                vec![
                    e.coords()[0] as u64,
                    e.coords()[1] as u64,
                    0,
                    e.coords()[2] as u64,
                ]
            })
            .collect();
        let as_indices: Vec<usize> = mats.iter().map(|m| model.index[m]).collect();
        assert!(
            expect.iter().any(|set| {
                set.len() == as_indices.len() && as_indices.iter().all(|i| set.contains(i))
            }),
            "lattice member not found by brute force"
        );
    }
}

#[test]
fn maximal_right_ideal_examples() {
    let z4 = cyclic_ring(4);
    let max = maximal_right_ideals(&z4, &caps()).unwrap();
    assert_eq!(max.len(), 1);
    assert_eq!(max[0].members(), set_of(&z4, &[&[0], &[2]]).as_slice());

    let z6 = cyclic_ring(6);
    let max = maximal_right_ideals(&z6, &caps()).unwrap();
    let mut sizes: Vec<usize> = max.iter().map(|m| m.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 3]); // (3) and (2)

    let z2 = cyclic_ring(2);
    let max = maximal_right_ideals(&z2, &caps()).unwrap();
    assert_eq!(max.len(), 1);
    assert_eq!(max[0].len(), 1);
}

#[test]
fn radical_equals_intersection_of_maximal_right_ideals() {
    for r in builtin() {
        let j = jacobson_radical(&r, &caps()).unwrap();
        let max = maximal_right_ideals(&r, &caps()).unwrap();
        let mut inter: Vec<ringlab::RingElement> = r.elements().collect();
        for m in &max {
            inter.retain(|e| m.contains(&r, e).unwrap());
        }
        let inter = ElementSet::new(&r, SetKind::Plain, inter).unwrap();
        assert_eq!(j.members(), inter.members(), "{}", r.name());
    }
}

#[test]
fn unit_counts_match_the_model() {
    let cases: Vec<(FiniteRing, ModelRing)> = vec![
        (cyclic_ring(12), ModelRing::zmod(12)),
        (m2z2(), ModelRing::matrices(2, 2)),
        (t2z2(), ModelRing::upper_triangular(2, 2)),
    ];
    for (r, model) in cases {
        assert_eq!(units(&r).len(), model.units().len(), "{}", r.name());
        assert_eq!(
            idempotents(&r).len(),
            model.idempotents().len(),
            "{}",
            r.name()
        );
    }
}

#[test]
fn idempotent_examples() {
    let z4 = cyclic_ring(4);
    assert_eq!(
        idempotents(&z4).members(),
        set_of(&z4, &[&[0], &[1]]).as_slice()
    );
    assert_eq!(units(&z4).members(), set_of(&z4, &[&[1], &[3]]).as_slice());
    let r = m2z2();
    assert_eq!(idempotents(&r).len(), 8);
    let central = central_idempotents(&r);
    assert_eq!(central.members(), &[r.zero(), r.one().clone()]);
}

#[test]
fn generated_is_idempotent_on_random_generators() {
    for r in builtin().into_iter().filter(|r| r.order() <= 64) {
        for seed in 0..4u64 {
            let g = r.element_at(seed * 7 % r.order());
            let gens = ElementSet::new(&r, SetKind::Plain, vec![g]).unwrap();
            for kind in [SetKind::RightIdeal, SetKind::LeftIdeal, SetKind::Ideal] {
                let once = generated(&r, &gens, kind, &caps()).unwrap();
                let twice = generated(&r, &once, kind, &caps()).unwrap();
                assert_eq!(once, twice, "{}", r.name());
            }
        }
    }
}
