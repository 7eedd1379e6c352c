//! Index-based enumeration kernel.
//!
//! `Analysis` pins a ring, decodes every element's coordinates once, and runs
//! the exhaustive scans (units, radical, nilpotents, idempotents, right-ideal
//! lattice) on `u32` element indices. Results are cached per ring; everything
//! is deterministic, so the cache is a pure memo.
//!
//! Two facts carry most of the performance:
//!
//! * products and sandwich values are additive in each slot, so a statement
//!   like `aRb = 0` or `bRa ⊆ J` only has to be checked on basis generators;
//! * `a` is a unit iff some positive power of `a` equals 1 (the units of a
//!   finite ring form a finite group), which Brent's cycle detection decides
//!   without scanning for an inverse.

use crate::bits::Bits;
use crate::error::{Result, RingError};
use crate::ring::{Caps, FiniteRing};
use std::cell::OnceCell;

const STACK_COORDS: usize = 32;

pub struct Analysis<'r> {
    ring: &'r FiniteRing,
    caps: Caps,
    n: u32,
    k: usize,
    coords: Vec<u32>,
    basis_idx: Vec<u32>,
    one_idx: u32,
    /// All generator orders are powers of two, so reduction is a mask.
    pow2: bool,
    /// When every generator order is 2, an element's index is the bitmask of
    /// its coordinates: index addition is XOR and multiplication is an XOR of
    /// per-generator lookup rows, `a b = XOR of tables[i][b] over the set
    /// bits i of a`.
    xor_tables: Option<Vec<Vec<u32>>>,
    units: OnceCell<Bits>,
    jacobson: OnceCell<Bits>,
    nilpotents: OnceCell<Bits>,
    idempotents: OnceCell<Vec<u32>>,
    lattice: OnceCell<Result<Vec<Bits>>>,
}

impl<'r> Analysis<'r> {
    pub fn new(ring: &'r FiniteRing, caps: &Caps) -> Result<Self> {
        caps.check_order(ring.order() as u128)?;
        Ok(Self::build(ring, *caps))
    }

    /// Analysis with the order cap lifted to the ring's own order, for
    /// operations whose contract does not allow a limit error.
    pub fn unbounded(ring: &'r FiniteRing) -> Self {
        let caps = Caps::default().with_max_order(ring.order());
        Self::build(ring, caps)
    }

    fn build(ring: &'r FiniteRing, caps: Caps) -> Self {
        let n = ring.order() as u32;
        let k = ring.basis_count();
        let mut coords = Vec::with_capacity(n as usize * k);
        for i in 0..n {
            coords.extend_from_slice(ring.element_at(i as u64).coords());
        }
        let basis_idx = (0..k)
            .map(|i| ring.index_of(&ring.basis_element(i)).expect("basis dims") as u32)
            .collect();
        let one_idx = ring.index_of(ring.one()).expect("one dims") as u32;
        let pow2 = ring.orders().iter().all(|&d| d.is_power_of_two());
        let mut analysis = Analysis {
            ring,
            caps,
            n,
            k,
            coords,
            basis_idx,
            one_idx,
            pow2,
            xor_tables: None,
            units: OnceCell::new(),
            jacobson: OnceCell::new(),
            nilpotents: OnceCell::new(),
            idempotents: OnceCell::new(),
            lattice: OnceCell::new(),
        };
        if ring.orders().iter().all(|&d| d == 2) && n <= 1 << 16 {
            let tables = (0..k)
                .map(|i| {
                    let gi = analysis.basis_idx[i];
                    (0..n).map(|b| analysis.mul_idx_generic(gi, b)).collect()
                })
                .collect();
            analysis.xor_tables = Some(tables);
        }
        analysis
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn count(&self) -> u32 {
        self.n
    }

    pub fn one_idx(&self) -> u32 {
        self.one_idx
    }

    pub fn basis_indices(&self) -> &[u32] {
        &self.basis_idx
    }

    pub fn coords_of(&self, i: u32) -> &[u32] {
        &self.coords[i as usize * self.k..][..self.k]
    }

    fn encode(&self, reduced: impl Iterator<Item = u32>) -> u32 {
        let mut idx = 0u64;
        for (c, w) in reduced.zip(weights(self.ring)) {
            idx += c as u64 * w;
        }
        idx as u32
    }

    pub fn add_idx(&self, a: u32, b: u32) -> u32 {
        if self.xor_tables.is_some() {
            return a ^ b;
        }
        let ca = self.coords_of(a);
        let cb = self.coords_of(b);
        let orders = self.ring.orders();
        self.encode((0..self.k).map(|i| {
            let s = ca[i] + cb[i];
            if s >= orders[i] {
                s - orders[i]
            } else {
                s
            }
        }))
    }

    pub fn neg_idx(&self, a: u32) -> u32 {
        if self.xor_tables.is_some() {
            return a;
        }
        let ca = self.coords_of(a);
        let orders = self.ring.orders();
        self.encode((0..self.k).map(|i| if ca[i] == 0 { 0 } else { orders[i] - ca[i] }))
    }

    pub fn sub_idx(&self, a: u32, b: u32) -> u32 {
        if self.xor_tables.is_some() {
            return a ^ b;
        }
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if let Some(tables) = &self.xor_tables {
            let mut acc = 0u32;
            let mut m = a;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                acc ^= tables[i][b as usize];
            }
            return acc;
        }
        self.mul_idx_generic(a, b)
    }

    fn mul_idx_generic(&self, a: u32, b: u32) -> u32 {
        let ca = self.coords_of(a);
        let cb = self.coords_of(b);
        let orders = self.ring.orders();
        if self.k <= STACK_COORDS {
            let mut acc = [0u64; STACK_COORDS];
            let acc = &mut acc[..self.k];
            self.ring.mul_into(ca, cb, acc);
            if self.pow2 {
                self.encode(
                    acc.iter()
                        .zip(orders)
                        .map(|(&v, &d)| (v & (d as u64 - 1)) as u32),
                )
            } else {
                self.encode(acc.iter().zip(orders).map(|(&v, &d)| (v % d as u64) as u32))
            }
        } else {
            let mut acc = vec![0u64; self.k];
            self.ring.mul_into(ca, cb, &mut acc);
            self.encode(acc.iter().zip(orders).map(|(&v, &d)| (v % d as u64) as u32))
        }
    }

    /// Zero test for a product, skipping the index encode.
    pub fn mul_is_zero(&self, a: u32, b: u32) -> bool {
        if self.xor_tables.is_some() {
            return self.mul_idx(a, b) == 0;
        }
        let ca = self.coords_of(a);
        let cb = self.coords_of(b);
        let orders = self.ring.orders();
        if self.k <= STACK_COORDS {
            let mut acc = [0u64; STACK_COORDS];
            let acc = &mut acc[..self.k];
            self.ring.mul_into(ca, cb, acc);
            if self.pow2 {
                acc.iter()
                    .zip(orders)
                    .all(|(&v, &d)| v & (d as u64 - 1) == 0)
            } else {
                acc.iter().zip(orders).all(|(&v, &d)| v % d as u64 == 0)
            }
        } else {
            self.mul_idx(a, b) == 0
        }
    }

    /// Extends the additive subgroup in `bits` by the generator `g`.
    pub(crate) fn extend_span(&self, bits: &mut Bits, g: u32) {
        if bits.contains(g) {
            return;
        }
        let mut mults = Vec::new();
        let mut x = g;
        while !bits.contains(x) {
            mults.push(x);
            x = self.add_idx(x, g);
        }
        let base: Vec<u32> = bits.iter().collect();
        for m in mults {
            for &s in &base {
                bits.insert(self.add_idx(s, m));
            }
        }
    }

    /// Additive subgroup generated by `gens`.
    pub(crate) fn span(&self, gens: impl IntoIterator<Item = u32>) -> Bits {
        let mut bits = Bits::new(self.n);
        bits.insert(0);
        for g in gens {
            self.extend_span(&mut bits, g);
        }
        bits
    }

    /// The right ideal `aR` as a bitset: additive span of `{a * e_i}`.
    pub(crate) fn right_ideal_span(&self, a: u32) -> Bits {
        let gens: Vec<u32> = self.basis_idx.iter().map(|&g| self.mul_idx(a, g)).collect();
        self.span(gens)
    }

    pub(crate) fn left_ideal_span(&self, a: u32) -> Bits {
        let gens: Vec<u32> = self.basis_idx.iter().map(|&g| self.mul_idx(g, a)).collect();
        self.span(gens)
    }

    /// The two-sided ideal `<a>` as a bitset: span of `{e_i * a * e_j}`.
    pub(crate) fn two_sided_span(&self, a: u32) -> Bits {
        let mut gens = Vec::with_capacity(self.k * self.k);
        for &gi in &self.basis_idx {
            let gia = self.mul_idx(gi, a);
            for &gj in &self.basis_idx {
                gens.push(self.mul_idx(gia, gj));
            }
        }
        self.span(gens)
    }

    /// `aRb = 0`, decided on basis generators: `a * e_i * b = 0` for all `i`.
    pub fn sandwich_is_zero(&self, a: u32, b: u32) -> bool {
        self.basis_idx
            .iter()
            .all(|&g| self.mul_is_zero(self.mul_idx(a, g), b))
    }

    /// First basis generator `e_i` with `a * e_i * b` outside `target`, if any.
    /// Since targets are additively closed, `aRb ⊆ target` iff none exists.
    pub(crate) fn sandwich_escapes(&self, a: u32, b: u32, target: &Bits) -> Option<u32> {
        self.basis_idx
            .iter()
            .find(|&&g| !target.contains(self.mul_idx(self.mul_idx(a, g), b)))
            .copied()
    }

    /// The set `{a r b : r in R}`: additive span of the basis sandwiches.
    pub(crate) fn sandwich_span(&self, a: u32, b: u32) -> Bits {
        let gens: Vec<u32> = self
            .basis_idx
            .iter()
            .map(|&g| self.mul_idx(self.mul_idx(a, g), b))
            .collect();
        self.span(gens)
    }

    /// Unit test by the power criterion: `a` is invertible iff some positive
    /// power of `a` equals 1. Brent's cycle detection bounds the walk.
    pub fn is_unit_idx(&self, a: u32) -> bool {
        if let Some(u) = self.units.get() {
            return u.contains(a);
        }
        self.is_unit_walk(a)
    }

    fn is_unit_walk(&self, a: u32) -> bool {
        let mut x = a;
        if x == self.one_idx {
            return true;
        }
        let mut checkpoint = x;
        let mut steps = 0u64;
        let mut limit = 1u64;
        loop {
            x = self.mul_idx(x, a);
            if x == self.one_idx {
                return true;
            }
            steps += 1;
            if x == checkpoint {
                return false;
            }
            if steps == limit {
                checkpoint = x;
                steps = 0;
                limit *= 2;
            }
        }
    }

    fn is_nilpotent_walk(&self, a: u32) -> bool {
        let mut x = a;
        if x == 0 {
            return true;
        }
        let mut checkpoint = x;
        let mut steps = 0u64;
        let mut limit = 1u64;
        loop {
            x = self.mul_idx(x, a);
            if x == 0 {
                return true;
            }
            steps += 1;
            if x == checkpoint {
                return false;
            }
            if steps == limit {
                checkpoint = x;
                steps = 0;
                limit *= 2;
            }
        }
    }

    pub(crate) fn units_bits(&self) -> &Bits {
        self.units.get_or_init(|| {
            let mut bits = Bits::new(self.n);
            for a in 0..self.n {
                if self.is_unit_walk(a) {
                    bits.insert(a);
                }
            }
            bits
        })
    }

    /// `J(R) = {a : 1 - ra is a unit for every r}`.
    ///
    /// Candidates start from `{a : 1 - a unit}` and are shrunk by the
    /// necessary condition that J is closed under basis multiplication on
    /// both sides; the few survivors then get the full quantifier scan.
    pub(crate) fn jacobson_bits(&self) -> &Bits {
        self.jacobson.get_or_init(|| {
            let units = self.units_bits().clone();
            let mut cand = Bits::new(self.n);
            for a in 0..self.n {
                if units.contains(self.sub_idx(self.one_idx, a)) {
                    cand.insert(a);
                }
            }
            loop {
                let mut removals = Vec::new();
                for a in cand.iter() {
                    let closed = self.basis_idx.iter().all(|&g| {
                        cand.contains(self.mul_idx(g, a)) && cand.contains(self.mul_idx(a, g))
                    });
                    if !closed {
                        removals.push(a);
                    }
                }
                if removals.is_empty() {
                    break;
                }
                for a in removals {
                    cand.remove(a);
                }
            }
            let mut jac = Bits::new(self.n);
            'outer: for a in cand.iter() {
                for r in 0..self.n {
                    let ra = self.mul_idx(r, a);
                    if !units.contains(self.sub_idx(self.one_idx, ra)) {
                        continue 'outer;
                    }
                }
                jac.insert(a);
            }
            jac
        })
    }

    pub(crate) fn nilpotent_bits(&self) -> &Bits {
        self.nilpotents.get_or_init(|| {
            let mut bits = Bits::new(self.n);
            for a in 0..self.n {
                if self.is_nilpotent_walk(a) {
                    bits.insert(a);
                }
            }
            bits
        })
    }

    pub fn idempotent_indices(&self) -> &[u32] {
        self.idempotents
            .get_or_init(|| (0..self.n).filter(|&a| self.mul_idx(a, a) == a).collect())
    }

    /// Centrality can be checked against basis generators only.
    pub fn is_central_idx(&self, a: u32) -> bool {
        self.basis_idx
            .iter()
            .all(|&g| self.mul_idx(a, g) == self.mul_idx(g, a))
    }

    pub fn central_idempotent_indices(&self) -> Vec<u32> {
        self.idempotent_indices()
            .iter()
            .copied()
            .filter(|&e| self.is_central_idx(e))
            .collect()
    }

    /// All right ideals: join-closure of the cyclic right ideals `aR`.
    /// Every right ideal of a finite ring is a finite sum of cyclic ones, so
    /// the closure is complete.
    pub(crate) fn right_ideal_lattice(&self) -> Result<&Vec<Bits>> {
        self.lattice
            .get_or_init(|| {
                self.caps.check_cubic(self.n as u128)?;
                let mut seen = std::collections::HashSet::new();
                let mut items: Vec<Bits> = Vec::new();
                for a in 0..self.n {
                    let cyc = self.right_ideal_span(a);
                    if seen.insert(cyc.clone()) {
                        items.push(cyc);
                    }
                }
                let mut i = 0;
                while i < items.len() {
                    for j in 0..i {
                        let mut join = items[i].clone();
                        for g in items[j].iter() {
                            self.extend_span(&mut join, g);
                        }
                        if seen.insert(join.clone()) {
                            items.push(join);
                        }
                        if items.len() > self.caps.lattice_bound {
                            return Err(RingError::LatticeExplosion {
                                bound: self.caps.lattice_bound,
                            });
                        }
                    }
                    i += 1;
                }
                items.sort_by(|a, b| {
                    a.len()
                        .cmp(&b.len())
                        .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect()))
                });
                Ok(items)
            })
            .as_ref()
            .map_err(clone_err)
    }

    pub(crate) fn maximal_right_ideals(&self) -> Result<Vec<Bits>> {
        let lattice = self.right_ideal_lattice()?;
        let proper: Vec<&Bits> = lattice
            .iter()
            .filter(|b| b.len() < self.n as usize)
            .collect();
        Ok(proper
            .iter()
            .filter(|b| {
                !proper
                    .iter()
                    .any(|c| b.len() < c.len() && b.is_subset_of(c))
            })
            .map(|b| (*b).clone())
            .collect())
    }

    /// Members of the right-ideal lattice that are also left-stable; these
    /// are exactly the two-sided ideals.
    pub(crate) fn two_sided_ideals(&self) -> Result<Vec<Bits>> {
        let lattice = self.right_ideal_lattice()?;
        Ok(lattice
            .iter()
            .filter(|b| self.is_left_stable(b))
            .cloned()
            .collect())
    }

    /// Full two-sided ideal check: contains 0, additively closed, stable
    /// under basis multiplication on both sides.
    pub(crate) fn is_two_sided_ideal(&self, bits: &Bits) -> bool {
        if !bits.contains(0) {
            return false;
        }
        let members: Vec<u32> = bits.iter().collect();
        for &x in &members {
            for &y in &members {
                if !bits.contains(self.add_idx(x, y)) {
                    return false;
                }
            }
        }
        self.is_left_stable(bits) && self.is_right_stable(bits)
    }

    pub(crate) fn is_left_stable(&self, bits: &Bits) -> bool {
        bits.iter().all(|m| {
            self.basis_idx
                .iter()
                .all(|&g| bits.contains(self.mul_idx(g, m)))
        })
    }

    pub(crate) fn is_right_stable(&self, bits: &Bits) -> bool {
        bits.iter().all(|m| {
            self.basis_idx
                .iter()
                .all(|&g| bits.contains(self.mul_idx(m, g)))
        })
    }
}

fn weights(ring: &FiniteRing) -> impl Iterator<Item = u64> + '_ {
    ring.orders().iter().scan(1u64, |w, &d| {
        let cur = *w;
        *w *= d as u64;
        Some(cur)
    })
}

fn clone_err(e: &RingError) -> RingError {
    match e {
        RingError::OrderLimitExceeded { order, limit } => RingError::OrderLimitExceeded {
            order: *order,
            limit: *limit,
        },
        RingError::LatticeExplosion { bound } => RingError::LatticeExplosion { bound: *bound },
        other => RingError::MalformedTarget(other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> FiniteRing {
        FiniteRing::new("Z4", vec![4], vec![1], vec![vec![1]]).unwrap()
    }

    fn z6() -> FiniteRing {
        FiniteRing::new("Z6", vec![6], vec![1], vec![vec![1]]).unwrap()
    }

    #[test]
    fn index_arithmetic_matches_element_arithmetic() {
        // z6 exercises the generic path; the order-8 char-2 triangular ring
        // exercises the XOR lookup-table path
        let t2z2 = FiniteRing::new(
            "T2Z2",
            vec![2, 2, 2],
            vec![1, 0, 1],
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 0],
                vec![0, 0, 0],
                vec![0, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 0],
                vec![0, 0, 0],
                vec![0, 0, 1],
            ],
        )
        .unwrap();
        for r in [z6(), t2z2] {
            let a = Analysis::new(&r, &Caps::default()).unwrap();
            let n = r.order() as u32;
            for i in 0..n {
                for j in 0..n {
                    let x = r.element_at(i as u64);
                    let y = r.element_at(j as u64);
                    assert_eq!(
                        a.add_idx(i, j) as u64,
                        r.index_of(&r.add(&x, &y).unwrap()).unwrap()
                    );
                    assert_eq!(
                        a.mul_idx(i, j) as u64,
                        r.index_of(&r.mul(&x, &y).unwrap()).unwrap()
                    );
                    assert_eq!(a.mul_is_zero(i, j), a.mul_idx(i, j) == 0);
                }
                assert_eq!(a.add_idx(i, a.neg_idx(i)), 0);
            }
        }
    }

    #[test]
    fn unit_walk_agrees_with_inverse_search() {
        for r in [z4(), z6()] {
            let a = Analysis::new(&r, &Caps::default()).unwrap();
            for i in 0..r.order() as u32 {
                let e = r.element_at(i as u64);
                let scan = crate::ring::is_unit(&r, &e).unwrap();
                assert_eq!(a.is_unit_idx(i), scan, "element {e} of {}", r.name());
            }
        }
    }

    #[test]
    fn jacobson_of_z4() {
        let r = z4();
        let a = Analysis::new(&r, &Caps::default()).unwrap();
        let j: Vec<u32> = a.jacobson_bits().iter().collect();
        assert_eq!(j, vec![0, 2]);
    }

    #[test]
    fn z4_lattice() {
        let r = z4();
        let a = Analysis::new(&r, &Caps::default()).unwrap();
        let lattice = a.right_ideal_lattice().unwrap();
        let sizes: Vec<usize> = lattice.iter().map(|b| b.len()).collect();
        assert_eq!(sizes, vec![1, 2, 4]);
        let max = a.maximal_right_ideals().unwrap();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn span_of_generator_is_cyclic_subgroup() {
        let r = z6();
        let a = Analysis::new(&r, &Caps::default()).unwrap();
        let s = a.span([2u32]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 4]);
        let s = a.span([2u32, 3u32]);
        assert_eq!(s.len(), 6);
    }
}
