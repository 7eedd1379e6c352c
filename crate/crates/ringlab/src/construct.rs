//! Ring extensions: matrix and triangular rings, quotients, products, corner
//! rings, trivializations, Dorroh-style ideal extensions, truncated (skew)
//! power series, and the finite localization check.
//!
//! Every construction emits a fresh structure-constant presentation with a
//! deterministic basis layout, so serialized outputs are byte-stable.

use crate::analysis::Analysis;
use crate::error::{Result, RingError};
use crate::present::{present, TableRing};
use crate::ring::{Caps, FiniteRing, RingElement};
use crate::set::ElementSet;

/// Output order of a construction carrying `copies` additive copies of the
/// base ring, checked against the cap.
fn checked_order(base: u64, copies: u32, caps: &Caps) -> Result<()> {
    let mut order: u128 = 1;
    for _ in 0..copies {
        order = order.saturating_mul(base as u128);
        if order > caps.max_order as u128 {
            return Err(RingError::OrderLimitExceeded {
                order,
                limit: caps.max_order,
            });
        }
    }
    Ok(())
}

/// `M_n(R)`: basis is one copy of R's basis per matrix position, with
/// `(e_i ⊗ E_pq)(e_j ⊗ E_uv) = δ_qu (e_i e_j) ⊗ E_pv`.
pub fn matrix_ring(ring: &FiniteRing, n: usize, caps: &Caps) -> Result<FiniteRing> {
    assert!(n >= 1, "matrix dimension must be positive");
    let positions: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).collect();
    let diag: Vec<usize> = (0..n).map(|p| p * n + p).collect();
    positional_ring(
        ring,
        &positions,
        &diag,
        |(_, q), (u, _)| q == u,
        |(p, _), (_, v)| (p, v),
        format!("M{n}({})", ring.name()),
        caps,
    )
}

/// `T_n(R)`: upper triangular positions only.
pub fn upper_triangular_ring(ring: &FiniteRing, n: usize, caps: &Caps) -> Result<FiniteRing> {
    assert!(n >= 1, "matrix dimension must be positive");
    let positions: Vec<(usize, usize)> = (0..n).flat_map(|p| (p..n).map(move |q| (p, q))).collect();
    let diag: Vec<usize> = (0..n)
        .map(|p| positions.iter().position(|&pq| pq == (p, p)).expect("diag"))
        .collect();
    positional_ring(
        ring,
        &positions,
        &diag,
        |(_, q), (u, _)| q == u,
        |(p, _), (_, v)| (p, v),
        format!("T{n}({})", ring.name()),
        caps,
    )
}

/// Matrices with a constant diagonal entry from R and arbitrary strictly
/// upper entries: one diagonal copy of R's basis plus one copy per strict
/// position.
pub fn scalar_plus_strict_upper(ring: &FiniteRing, n: usize, caps: &Caps) -> Result<FiniteRing> {
    assert!(n >= 1, "matrix dimension must be positive");
    let kb = ring.basis_count();
    // Position 0 stands for the whole diagonal; the rest are strict uppers.
    let mut positions: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
    for p in 0..n {
        for q in p + 1..n {
            positions.push((p, q));
        }
    }
    let slots = positions.len();
    checked_order(ring.order(), slots as u32, caps)?;

    let k = kb * slots;
    let gen = |slot: usize, i: usize| slot * kb + i;
    let mut products: Vec<Vec<u64>> = vec![vec![0u64; k]; k * k];
    let mut place = |gi: usize, gj: usize, slot: usize, coords: &[u32]| {
        let row = &mut products[gi * k + gj];
        for (l, &c) in coords.iter().enumerate() {
            row[gen(slot, l)] = c as u64;
        }
    };
    for i in 0..kb {
        for j in 0..kb {
            let prod = ring.basis_product(i, j).coords().to_vec();
            // diagonal x diagonal stays diagonal
            place(gen(0, i), gen(0, j), 0, &prod);
            for (s, &(p, q)) in positions.iter().enumerate().skip(1) {
                // scalar diagonal acts on every strict slot from both sides
                place(gen(0, i), gen(s, j), s, &prod);
                place(gen(s, i), gen(0, j), s, &prod);
                for (t, &(u, v)) in positions.iter().enumerate().skip(1) {
                    if q == u {
                        if let Some(target) = positions.iter().position(|&pv| pv == (p, v)) {
                            place(gen(s, i), gen(t, j), target, &prod);
                        }
                    }
                }
            }
        }
    }
    let mut one = vec![0u64; k];
    for (l, &c) in ring.one().coords().iter().enumerate() {
        one[gen(0, l)] = c as u64;
    }
    let orders: Vec<u32> = (0..slots)
        .flat_map(|_| ring.orders().iter().copied())
        .collect();
    FiniteRing::new(format!("SU{n}({})", ring.name()), orders, one, products)
}

/// Shared builder for rings indexed by matrix positions.
fn positional_ring(
    ring: &FiniteRing,
    positions: &[(usize, usize)],
    diagonal_slots: &[usize],
    links: impl Fn((usize, usize), (usize, usize)) -> bool,
    target: impl Fn((usize, usize), (usize, usize)) -> (usize, usize),
    name: String,
    caps: &Caps,
) -> Result<FiniteRing> {
    let kb = ring.basis_count();
    let slots = positions.len();
    checked_order(ring.order(), slots as u32, caps)?;
    let k = kb * slots;
    let gen = |slot: usize, i: usize| slot * kb + i;
    let mut products: Vec<Vec<u64>> = vec![vec![0u64; k]; k * k];
    for (s, &pq) in positions.iter().enumerate() {
        for (t, &uv) in positions.iter().enumerate() {
            if !links(pq, uv) {
                continue;
            }
            let slot = positions
                .iter()
                .position(|&x| x == target(pq, uv))
                .expect("product position exists");
            for i in 0..kb {
                for j in 0..kb {
                    let row = &mut products[gen(s, i) * k + gen(t, j)];
                    for (l, &c) in ring.basis_product(i, j).coords().iter().enumerate() {
                        row[gen(slot, l)] = c as u64;
                    }
                }
            }
        }
    }
    let mut one = vec![0u64; k];
    for &slot in diagonal_slots {
        for (l, &c) in ring.one().coords().iter().enumerate() {
            one[gen(slot, l)] = c as u64;
        }
    }
    let orders: Vec<u32> = (0..slots)
        .flat_map(|_| ring.orders().iter().copied())
        .collect();
    FiniteRing::new(name, orders, one, products)
}

/// `R x S` with componentwise operations.
pub fn direct_product(a: &FiniteRing, b: &FiniteRing, caps: &Caps) -> Result<FiniteRing> {
    let order = a.order() as u128 * b.order() as u128;
    caps.check_order(order)?;
    let ka = a.basis_count();
    let kb = b.basis_count();
    let k = ka + kb;
    let mut products: Vec<Vec<u64>> = vec![vec![0u64; k]; k * k];
    for i in 0..ka {
        for j in 0..ka {
            for (l, &c) in a.basis_product(i, j).coords().iter().enumerate() {
                products[i * k + j][l] = c as u64;
            }
        }
    }
    for i in 0..kb {
        for j in 0..kb {
            for (l, &c) in b.basis_product(i, j).coords().iter().enumerate() {
                products[(ka + i) * k + (ka + j)][ka + l] = c as u64;
            }
        }
    }
    let mut one = vec![0u64; k];
    for (l, &c) in a.one().coords().iter().enumerate() {
        one[l] = c as u64;
    }
    for (l, &c) in b.one().coords().iter().enumerate() {
        one[ka + l] = c as u64;
    }
    let orders: Vec<u32> = a
        .orders()
        .iter()
        .chain(b.orders().iter())
        .copied()
        .collect();
    FiniteRing::new(
        format!("({}x{})", a.name(), b.name()),
        orders,
        one,
        products,
    )
}

/// Trivial extension `R ∝ R`: the basis doubles, with
/// `(r, m)(r', m') = (rr', rm' + mr')`.
pub fn trivial_extension(ring: &FiniteRing, caps: &Caps) -> Result<FiniteRing> {
    caps.check_order(ring.order() as u128 * ring.order() as u128)?;
    let kb = ring.basis_count();
    let k = 2 * kb;
    let mut products: Vec<Vec<u64>> = vec![vec![0u64; k]; k * k];
    for i in 0..kb {
        for j in 0..kb {
            let prod = ring.basis_product(i, j).coords();
            for (l, &c) in prod.iter().enumerate() {
                products[i * k + j][l] = c as u64; // ring x ring
                products[i * k + (kb + j)][kb + l] = c as u64; // ring x module
                products[(kb + i) * k + j][kb + l] = c as u64; // module x ring
            }
        }
    }
    let mut one = vec![0u64; k];
    for (l, &c) in ring.one().coords().iter().enumerate() {
        one[l] = c as u64;
    }
    let orders: Vec<u32> = ring
        .orders()
        .iter()
        .chain(ring.orders().iter())
        .copied()
        .collect();
    FiniteRing::new(format!("TE({})", ring.name()), orders, one, products)
}

/// `R/I` with canonically chosen coset representatives (the minimal member of
/// each coset in element order), plus the projection map.
pub struct QuotientRing {
    pub ring: FiniteRing,
    image: Vec<RingElement>,
}

impl QuotientRing {
    pub fn project(&self, parent: &FiniteRing, a: &RingElement) -> Result<RingElement> {
        let i = parent.index_of(a)?;
        Ok(self.image[i as usize].clone())
    }
}

pub fn quotient_ring(ring: &FiniteRing, ideal: &ElementSet, _caps: &Caps) -> Result<QuotientRing> {
    let a = Analysis::unbounded(ring);
    let bits = ideal.to_bits(ring)?;
    if !a.is_two_sided_ideal(&bits) {
        return Err(RingError::MalformedTarget(
            "quotient needs a two-sided ideal".into(),
        ));
    }
    let n = a.count();
    let ideal_members: Vec<u32> = bits.iter().collect();
    let mut rep = vec![u32::MAX; n as usize];
    for x in 0..n {
        if rep[x as usize] != u32::MAX {
            continue;
        }
        for &h in &ideal_members {
            let y = a.add_idx(x, h);
            if rep[y as usize] == u32::MAX {
                rep[y as usize] = x;
            }
        }
    }
    let mut dense_of = std::collections::HashMap::new();
    let mut reps = Vec::new();
    for x in 0..n {
        if rep[x as usize] == x {
            dense_of.insert(x, reps.len() as u32);
            reps.push(x);
        }
    }
    assert_eq!(
        reps.len() as u64 * ideal.len() as u64,
        ring.order(),
        "cosets must partition the ring"
    );

    let add =
        |x: u32, y: u32| dense_of[&rep[a.add_idx(reps[x as usize], reps[y as usize]) as usize]];
    let mul =
        |x: u32, y: u32| dense_of[&rep[a.mul_idx(reps[x as usize], reps[y as usize]) as usize]];
    let table = TableRing {
        n: reps.len() as u32,
        add: &add,
        mul: &mul,
        one: dense_of[&rep[a.one_idx() as usize]],
    };
    let name = format!("quot({},{})", ring.name(), ideal.len());
    let p = present(&name, &table)?;
    let image = (0..n)
        .map(|x| {
            let dense = dense_of[&rep[x as usize]];
            p.ring
                .element(
                    &p.coords_of[dense as usize]
                        .iter()
                        .map(|&c| c as u64)
                        .collect::<Vec<_>>(),
                )
                .expect("quotient coords")
        })
        .collect();
    Ok(QuotientRing {
        ring: p.ring,
        image,
    })
}

/// `eRe` for an idempotent `e`, re-presented on a freshly derived basis, with
/// maps in both directions.
pub struct CornerRing {
    pub ring: FiniteRing,
    image: Vec<RingElement>,
    lift: Vec<RingElement>,
}

impl CornerRing {
    /// Image of a parent element: `e a e` in corner coordinates.
    pub fn compress(&self, parent: &FiniteRing, a: &RingElement) -> Result<RingElement> {
        let i = parent.index_of(a)?;
        Ok(self.image[i as usize].clone())
    }

    /// Parent element represented by a corner element.
    pub fn embed(&self, corner_elem: &RingElement) -> Result<RingElement> {
        let i = self.ring.index_of(corner_elem)?;
        Ok(self.lift[i as usize].clone())
    }
}

pub fn corner_ring(ring: &FiniteRing, e: &RingElement, _caps: &Caps) -> Result<CornerRing> {
    if ring.mul(e, e)? != *e {
        return Err(RingError::NotIdempotent(e.to_string()));
    }
    let a = Analysis::unbounded(ring);
    let ei = ring.index_of(e)? as u32;
    let n = a.count();
    let mut dense_of = std::collections::HashMap::new();
    let mut members = Vec::new();
    let mut corner_of = vec![0u32; n as usize];
    for x in 0..n {
        let eae = a.mul_idx(a.mul_idx(ei, x), ei);
        corner_of[x as usize] = eae;
    }
    for x in 0..n {
        let eae = corner_of[x as usize];
        if let std::collections::hash_map::Entry::Vacant(e) = dense_of.entry(eae) {
            e.insert(0u32);
            members.push(eae);
        }
    }
    members.sort_unstable();
    for (d, &m) in members.iter().enumerate() {
        dense_of.insert(m, d as u32);
    }

    let add = |x: u32, y: u32| dense_of[&a.add_idx(members[x as usize], members[y as usize])];
    let mul = |x: u32, y: u32| dense_of[&a.mul_idx(members[x as usize], members[y as usize])];
    let table = TableRing {
        n: members.len() as u32,
        add: &add,
        mul: &mul,
        one: dense_of[&ei],
    };
    let name = format!("cor({},{})", ring.name(), ei);
    let p = present(&name, &table)?;
    let coords_elem = |dense: u32| {
        p.ring
            .element(
                &p.coords_of[dense as usize]
                    .iter()
                    .map(|&c| c as u64)
                    .collect::<Vec<_>>(),
            )
            .expect("corner coords")
    };
    let image = (0..n)
        .map(|x| coords_elem(dense_of[&corner_of[x as usize]]))
        .collect();
    let lift = (0..members.len() as u64)
        .map(|idx| {
            let dense = p.id_of_index[idx as usize];
            ring.element_at(members[dense as usize] as u64)
        })
        .collect();
    Ok(CornerRing {
        ring: p.ring,
        image,
        lift,
    })
}

/// Ring endomorphism given by generator images.
#[derive(Clone, Debug)]
pub struct Endomorphism {
    name: String,
    images: Vec<Vec<u64>>,
}

impl Endomorphism {
    pub fn new(name: impl Into<String>, images: Vec<Vec<u64>>) -> Self {
        Endomorphism {
            name: name.into(),
            images,
        }
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        let k = ring.basis_count();
        let images = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j && ring.orders()[i] > 1 {
                            1u64
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Endomorphism {
            name: "id".into(),
            images,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn images(&self) -> &[Vec<u64>] {
        &self.images
    }
}

pub fn apply_endomorphism(
    ring: &FiniteRing,
    f: &Endomorphism,
    a: &RingElement,
) -> Result<RingElement> {
    if f.images.len() != ring.basis_count() {
        return Err(RingError::BadEndomorphism(format!(
            "{} images for {} generators",
            f.images.len(),
            ring.basis_count()
        )));
    }
    let mut acc = ring.zero();
    for (i, &c) in a.coords().iter().enumerate() {
        let img = ring.element(&f.images[i])?;
        acc = ring.add(&acc, &ring.scalar_mul(c as u64, &img)?)?;
    }
    Ok(acc)
}

/// `f(1) = 1`, order compatibility, and multiplicativity on basis pairs.
pub fn validate_endomorphism(ring: &FiniteRing, f: &Endomorphism) -> Result<()> {
    if f.images.len() != ring.basis_count() {
        return Err(RingError::BadEndomorphism(format!(
            "{} images for {} generators",
            f.images.len(),
            ring.basis_count()
        )));
    }
    for (i, img) in f.images.iter().enumerate() {
        let e = ring.element(img)?;
        if ring.scalar_mul(ring.orders()[i] as u64, &e)? != ring.zero() {
            return Err(RingError::BadEndomorphism(format!(
                "image of e{} is not killed by the generator order",
                i + 1
            )));
        }
    }
    if apply_endomorphism(ring, f, ring.one())? != *ring.one() {
        return Err(RingError::BadEndomorphism("f(1) != 1".into()));
    }
    for i in 0..ring.basis_count() {
        for j in 0..ring.basis_count() {
            let lhs = apply_endomorphism(ring, f, ring.basis_product(i, j))?;
            let fi = ring.element(&f.images[i])?;
            let fj = ring.element(&f.images[j])?;
            if lhs != ring.mul(&fi, &fj)? {
                return Err(RingError::BadEndomorphism(format!(
                    "f(e{} e{}) != f(e{}) f(e{})",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Truncation `R[x; f] / (x^k)`: `(a x^i)(b x^j) = a f^i(b) x^(i+j)`, zero
/// once the degree reaches `k`. The ideal generated by `x` is nilpotent of
/// index at most `k`.
pub fn truncated_skew_power_series(
    ring: &FiniteRing,
    f: &Endomorphism,
    k: usize,
    caps: &Caps,
) -> Result<FiniteRing> {
    assert!(k >= 1, "truncation degree must be positive");
    validate_endomorphism(ring, f)?;
    let kb = ring.basis_count();
    checked_order(ring.order(), k as u32, caps)?;
    let kk = kb * k;
    let gen = |deg: usize, i: usize| deg * kb + i;

    // f^p(e_j) for p < k
    let mut powers: Vec<Vec<RingElement>> = Vec::with_capacity(k);
    let first: Vec<RingElement> = (0..kb).map(|j| ring.basis_element(j)).collect();
    powers.push(first);
    for p in 1..k {
        let prev = &powers[p - 1];
        let next = prev
            .iter()
            .map(|e| apply_endomorphism(ring, f, e))
            .collect::<Result<Vec<_>>>()?;
        powers.push(next);
    }

    let mut products: Vec<Vec<u64>> = vec![vec![0u64; kk]; kk * kk];
    for p in 0..k {
        for q in 0..k {
            if p + q >= k {
                continue;
            }
            for i in 0..kb {
                let ei = ring.basis_element(i);
                for j in 0..kb {
                    let prod = ring.mul(&ei, &powers[p][j])?;
                    let row = &mut products[gen(p, i) * kk + gen(q, j)];
                    for (l, &c) in prod.coords().iter().enumerate() {
                        row[gen(p + q, l)] = c as u64;
                    }
                }
            }
        }
    }
    let mut one = vec![0u64; kk];
    for (l, &c) in ring.one().coords().iter().enumerate() {
        one[gen(0, l)] = c as u64;
    }
    let orders: Vec<u32> = (0..k).flat_map(|_| ring.orders().iter().copied()).collect();
    FiniteRing::new(
        format!("pow({},{},{})", ring.name(), f.name(), k),
        orders,
        one,
        products,
    )
}

/// Non-unital ring with bimodule actions of a companion unital ring, the
/// ingredient of the Dorroh-style ideal extension.
#[derive(Clone, Debug)]
pub struct NonUnitalRing {
    name: String,
    orders: Vec<u32>,
    products: Vec<Vec<u32>>,
    companion: usize,
    lact: Vec<Vec<u32>>,
    ract: Vec<Vec<u32>>,
}

impl NonUnitalRing {
    pub fn new(
        name: impl Into<String>,
        orders: Vec<u32>,
        products: Vec<Vec<u64>>,
        companion: usize,
        lact: Vec<Vec<u64>>,
        ract: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let m = orders.len();
        let reduce = |rows: Vec<Vec<u64>>, expect: usize| -> Result<Vec<Vec<u32>>> {
            if rows.len() != expect {
                return Err(RingError::DimensionMismatch {
                    expected: expect,
                    got: rows.len(),
                });
            }
            rows.into_iter()
                .map(|r| {
                    if r.len() != m {
                        return Err(RingError::DimensionMismatch {
                            expected: m,
                            got: r.len(),
                        });
                    }
                    Ok(r.iter()
                        .zip(&orders)
                        .map(|(&c, &d)| (c % d as u64) as u32)
                        .collect())
                })
                .collect()
        };
        let products = reduce(products, m * m)?;
        let lact = reduce(lact, companion * m)?;
        let ract = reduce(ract, m * companion)?;
        Ok(NonUnitalRing {
            name: name.into(),
            orders,
            products,
            companion,
            lact,
            ract,
        })
    }

    /// Ingredient with zero internal multiplication and both actions given by
    /// the companion ring's own products; the Dorroh extension of this is the
    /// trivial extension.
    pub fn zero_multiplication(ring: &FiniteRing) -> Self {
        let k = ring.basis_count();
        let coords = |e: &RingElement| e.coords().iter().map(|&c| c as u64).collect::<Vec<_>>();
        let mut lact = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                lact.push(coords(ring.basis_product(i, j)));
            }
        }
        NonUnitalRing::new(
            format!("zmul({})", ring.name()),
            ring.orders().to_vec(),
            vec![vec![0u64; k]; k * k],
            k,
            lact.clone(),
            lact,
        )
        .expect("dimensions are consistent by construction")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis_count(&self) -> usize {
        self.orders.len()
    }

    pub fn companion_basis_count(&self) -> usize {
        self.companion
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&d| d as u64).product()
    }

    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        &self.products[i * self.orders.len() + j]
    }

    pub fn left_action(&self, i: usize, j: usize) -> &[u32] {
        &self.lact[i * self.orders.len() + j]
    }

    pub fn right_action(&self, i: usize, j: usize) -> &[u32] {
        &self.ract[i * self.companion + j]
    }
}

/// The Dorroh-style ideal extension `R ⊕ S` with
/// `(r, v)(s, w) = (rs, r·w + v·s + vw)`.
///
/// Requires the bimodule axioms on basis triples, a unital action, and the
/// quasi-regularity hypothesis: every `s` has an `s'` with `s + s' + ss' = 0`.
/// A set `S` carrying its own identity `u` always fails the hypothesis at
/// `s = -u`.
pub fn dorroh_extension(ring: &FiniteRing, s: &NonUnitalRing, caps: &Caps) -> Result<FiniteRing> {
    validate_nonunital(ring, s)?;
    caps.check_order(ring.order() as u128 * s.order() as u128)?;

    let ext = assemble_dorroh(ring, s)?;

    // Quasi-regularity scan over the embedded copy of S: s' must solve
    // s + s' + s s' = 0.
    let kb = ring.basis_count();
    let m = s.basis_count();
    let s_elem = |coords: &[u32]| -> Result<RingElement> {
        let mut full = vec![0u64; kb + m];
        for (l, &c) in coords.iter().enumerate() {
            full[kb + l] = c as u64;
        }
        ext.element(&full)
    };
    let s_order = s.order();
    let mut found_all = true;
    let mut witness = None;
    'outer: for si in 0..s_order {
        let coords = mixed_radix(si, s.orders());
        let sv = s_elem(&coords)?;
        for ti in 0..s_order {
            let tv = s_elem(&mixed_radix(ti, s.orders()))?;
            let circ = ext.add(&ext.add(&sv, &tv)?, &ext.mul(&sv, &tv)?)?;
            if circ == ext.zero() {
                continue 'outer;
            }
        }
        found_all = false;
        witness = Some(sv);
        break;
    }
    if !found_all {
        return Err(RingError::QuasiRegularityFails(
            witness.expect("witness recorded").to_string(),
        ));
    }
    Ok(ext)
}

fn mixed_radix(mut idx: u64, orders: &[u32]) -> Vec<u32> {
    orders
        .iter()
        .map(|&d| {
            let c = (idx % d as u64) as u32;
            idx /= d as u64;
            c
        })
        .collect()
}

fn assemble_dorroh(ring: &FiniteRing, s: &NonUnitalRing) -> Result<FiniteRing> {
    let kb = ring.basis_count();
    let m = s.basis_count();
    let k = kb + m;
    let mut products: Vec<Vec<u64>> = vec![vec![0u64; k]; k * k];
    for i in 0..kb {
        for j in 0..kb {
            for (l, &c) in ring.basis_product(i, j).coords().iter().enumerate() {
                products[i * k + j][l] = c as u64;
            }
        }
        for j in 0..m {
            for (l, &c) in s.left_action(i, j).iter().enumerate() {
                products[i * k + (kb + j)][kb + l] = c as u64;
            }
        }
    }
    for i in 0..m {
        for j in 0..kb {
            for (l, &c) in s.right_action(i, j).iter().enumerate() {
                products[(kb + i) * k + j][kb + l] = c as u64;
            }
        }
        for j in 0..m {
            for (l, &c) in s.product(i, j).iter().enumerate() {
                products[(kb + i) * k + (kb + j)][kb + l] = c as u64;
            }
        }
    }
    let mut one = vec![0u64; k];
    for (l, &c) in ring.one().coords().iter().enumerate() {
        one[l] = c as u64;
    }
    let orders: Vec<u32> = ring
        .orders()
        .iter()
        .chain(s.orders().iter())
        .copied()
        .collect();
    FiniteRing::new(
        format!("dor({},{})", ring.name(), s.name()),
        orders,
        one,
        products,
    )
}

/// Associativity of S, additive-order compatibility, the bimodule axioms on
/// basis triples, and unitality of the action.
pub fn validate_nonunital(ring: &FiniteRing, s: &NonUnitalRing) -> Result<()> {
    if s.companion != ring.basis_count() {
        return Err(RingError::ActionIncompatible(format!(
            "action tables address {} companion generators, ring has {}",
            s.companion,
            ring.basis_count()
        )));
    }
    let m = s.basis_count();
    let sadd = |a: &[u32], b: &[u32]| -> Vec<u32> {
        a.iter()
            .zip(b)
            .zip(&s.orders)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    };
    let sscale = |c: u64, a: &[u32]| -> Vec<u32> {
        a.iter()
            .zip(&s.orders)
            .map(|(&x, &d)| ((c % d as u64) * x as u64 % d as u64) as u32)
            .collect()
    };
    let zero = vec![0u32; m];
    let bilinear = |table: &dyn Fn(usize, usize) -> Vec<u32>, a: &[u32], b: &[u32]| -> Vec<u32> {
        let mut acc = zero.clone();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                acc = sadd(&acc, &sscale(ai as u64 * bj as u64, &table(i, j)));
            }
        }
        acc
    };
    let smul = |a: &[u32], b: &[u32]| bilinear(&|i, j| s.product(i, j).to_vec(), a, b);
    let lact = |r: &[u32], x: &[u32]| bilinear(&|i, j| s.left_action(i, j).to_vec(), r, x);
    let ract = |x: &[u32], r: &[u32]| bilinear(&|i, j| s.right_action(i, j).to_vec(), x, r);

    for i in 0..m {
        for j in 0..m {
            let p = s.product(i, j);
            if sscale(s.orders[i] as u64, p) != zero || sscale(s.orders[j] as u64, p) != zero {
                return Err(RingError::ActionIncompatible(format!(
                    "product s{} s{} breaks additive-order compatibility",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    for i in 0..ring.basis_count() {
        for j in 0..m {
            let p = s.left_action(i, j);
            if sscale(ring.orders()[i] as u64, p) != zero || sscale(s.orders[j] as u64, p) != zero {
                return Err(RingError::ActionIncompatible(format!(
                    "left action e{} . s{} breaks additive-order compatibility",
                    i + 1,
                    j + 1
                )));
            }
            let q = s.right_action(j, i);
            if sscale(ring.orders()[i] as u64, q) != zero || sscale(s.orders[j] as u64, q) != zero {
                return Err(RingError::ActionIncompatible(format!(
                    "right action s{} . e{} breaks additive-order compatibility",
                    j + 1,
                    i + 1
                )));
            }
        }
    }

    let sgen = |i: usize| -> Vec<u32> {
        let mut v = zero.clone();
        if s.orders[i] > 1 {
            v[i] = 1;
        }
        v
    };
    let rgen = |i: usize| ring.basis_element(i).coords().to_vec();
    let one_r = ring.one().coords().to_vec();

    for j in 0..m {
        let sj = sgen(j);
        if lact(&one_r, &sj) != sj || ract(&sj, &one_r) != sj {
            return Err(RingError::ActionIncompatible(format!(
                "action of 1 is not the identity on s{}",
                j + 1
            )));
        }
    }

    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                let lhs = smul(&smul(&sgen(i), &sgen(j)), &sgen(l));
                let rhs = smul(&sgen(i), &smul(&sgen(j), &sgen(l)));
                if lhs != rhs {
                    return Err(RingError::ActionIncompatible(format!(
                        "S is not associative at (s{}, s{}, s{})",
                        i + 1,
                        j + 1,
                        l + 1
                    )));
                }
            }
        }
    }

    let kb = ring.basis_count();
    for i in 0..kb {
        let ri = rgen(i);
        for j in 0..kb {
            let rj = rgen(j);
            let rij = ring.basis_product(i, j).coords().to_vec();
            for l in 0..m {
                let sl = sgen(l);
                if lact(&rij, &sl) != lact(&ri, &lact(&rj, &sl)) {
                    return Err(RingError::ActionIncompatible(format!(
                        "(e{} e{}) . s{} != e{} . (e{} . s{})",
                        i + 1,
                        j + 1,
                        l + 1,
                        i + 1,
                        j + 1,
                        l + 1
                    )));
                }
                if ract(&ract(&sl, &ri), &rj) != ract(&sl, &rij) {
                    return Err(RingError::ActionIncompatible(format!(
                        "(s{} . e{}) . e{} != s{} . (e{} e{})",
                        l + 1,
                        i + 1,
                        j + 1,
                        l + 1,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for j in 0..m {
            let sj = sgen(j);
            for l in 0..m {
                let sl = sgen(l);
                if lact(&ri, &smul(&sj, &sl)) != smul(&lact(&ri, &sj), &sl) {
                    return Err(RingError::ActionIncompatible(format!(
                        "e{} . (s{} s{}) != (e{} . s{}) s{}",
                        i + 1,
                        j + 1,
                        l + 1,
                        i + 1,
                        j + 1,
                        l + 1
                    )));
                }
                if smul(&sj, &lact(&ri, &sl)) != smul(&ract(&sj, &ri), &sl) {
                    return Err(RingError::ActionIncompatible(format!(
                        "s{} (e{} . s{}) != (s{} . e{}) s{}",
                        j + 1,
                        i + 1,
                        l + 1,
                        j + 1,
                        i + 1,
                        l + 1
                    )));
                }
                if ract(&smul(&sj, &sl), &ri) != smul(&sj, &ract(&sl, &ri)) {
                    return Err(RingError::ActionIncompatible(format!(
                        "(s{} s{}) . e{} != s{} (s{} . e{})",
                        j + 1,
                        l + 1,
                        i + 1,
                        j + 1,
                        l + 1,
                        i + 1
                    )));
                }
            }
            for l in 0..kb {
                let rl = rgen(l);
                if ract(&lact(&ri, &sj), &rl) != lact(&ri, &ract(&sj, &rl)) {
                    return Err(RingError::ActionIncompatible(format!(
                        "(e{} . s{}) . e{} != e{} . (s{} . e{})",
                        i + 1,
                        j + 1,
                        l + 1,
                        i + 1,
                        j + 1,
                        l + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Certificate that every member of the localizing set was already invertible
/// and central, so the localization is the ring itself.
pub struct LocalizationCertificate {
    pub members: Vec<RingElement>,
    pub inverses: Vec<RingElement>,
}

/// Localization at a multiplicatively closed set of central regular elements.
/// In a finite ring every regular element is a unit, so the result is `R`
/// itself together with the certificate.
pub fn central_regular_localization(
    ring: &FiniteRing,
    set: &ElementSet,
    caps: &Caps,
) -> Result<(FiniteRing, LocalizationCertificate)> {
    let a = Analysis::new(ring, caps)?;
    let mut members = Vec::new();
    let mut inverses = Vec::new();
    for m in set.members() {
        let mi = ring.index_of(m)? as u32;
        if !a.is_central_idx(mi) {
            return Err(RingError::NotCentral(m.to_string()));
        }
        for r in 1..a.count() {
            if a.mul_idx(mi, r) == 0 || a.mul_idx(r, mi) == 0 {
                return Err(RingError::NotRegular(m.to_string()));
            }
        }
        // a central regular element of a finite ring is invertible
        let inv = crate::ring::unit_inverse(ring, m)?
            .expect("regular elements of a finite ring are units");
        members.push(m.clone());
        inverses.push(inv);
    }
    for x in set.members() {
        for y in set.members() {
            let p = ring.mul(x, y)?;
            if !set.contains(ring, &p)? {
                return Err(RingError::MalformedTarget(
                    "localizing set is not multiplicatively closed".into(),
                ));
            }
        }
    }
    Ok((ring.clone(), LocalizationCertificate { members, inverses }))
}

/// `I ∩ K = 0`, which makes `R` a subdirect product of `R/I` and `R/K`.
pub fn subdirect_check(ring: &FiniteRing, i: &ElementSet, k: &ElementSet) -> Result<bool> {
    let a = Analysis::unbounded(ring);
    for s in [i, k] {
        let bits = s.to_bits(ring)?;
        if !a.is_two_sided_ideal(&bits) {
            return Err(RingError::MalformedTarget(
                "subdirect check needs two-sided ideals".into(),
            ));
        }
    }
    let inter = i.to_bits(ring)?.intersection(&k.to_bits(ring)?);
    Ok(inter.len() == 1 && inter.contains(0))
}

/// Brute-force ring isomorphism over generator images, with pruning on
/// partial additive spans. Capped at order 64; intended for tests and small
/// sanity checks, not production scans.
pub fn ring_isomorphic(a: &FiniteRing, b: &FiniteRing) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.order() > 64 {
        return Err(RingError::OrderLimitExceeded {
            order: a.order() as u128,
            limit: 64,
        });
    }
    let bn = Analysis::unbounded(b);
    let k = a.basis_count();
    let mut images: Vec<u32> = Vec::with_capacity(k);

    fn extend_ok(
        a: &FiniteRing,
        b: &FiniteRing,
        bn: &Analysis,
        images: &mut Vec<u32>,
    ) -> Result<bool> {
        let k = a.basis_count();
        let depth = images.len();
        if depth == k {
            return full_check(a, b, images);
        }
        let d = a.orders()[depth] as u64;
        for cand in 0..b.order() as u32 {
            let e = b.element_at(cand as u64);
            if b.scalar_mul(d, &e)? != b.zero() {
                continue;
            }
            images.push(cand);
            // partial additive span must stay free over the assigned orders
            let span = bn.span(images.iter().copied());
            let expect: u64 = a.orders()[..images.len()]
                .iter()
                .map(|&o| o as u64)
                .product();
            if span.len() as u64 == expect && extend_ok(a, b, bn, images)? {
                return Ok(true);
            }
            images.pop();
        }
        Ok(false)
    }

    fn full_check(a: &FiniteRing, b: &FiniteRing, images: &[u32]) -> Result<bool> {
        let apply = |x: &RingElement| -> Result<RingElement> {
            let mut acc = b.zero();
            for (i, &c) in x.coords().iter().enumerate() {
                let img = b.element_at(images[i] as u64);
                acc = b.add(&acc, &b.scalar_mul(c as u64, &img)?)?;
            }
            Ok(acc)
        };
        if apply(a.one())? != *b.one() {
            return Ok(false);
        }
        for i in 0..a.basis_count() {
            for j in 0..a.basis_count() {
                let lhs = apply(a.basis_product(i, j))?;
                let rhs = b.mul(
                    &b.element_at(images[i] as u64),
                    &b.element_at(images[j] as u64),
                )?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        // injectivity on the full coordinate domain
        let mut seen = vec![false; b.order() as usize];
        for x in a.elements() {
            let y = apply(&x)?;
            let idx = b.index_of(&y)? as usize;
            if seen[idx] {
                return Ok(false);
            }
            seen[idx] = true;
        }
        Ok(true)
    }

    extend_ok(a, b, &bn, &mut images)
}
