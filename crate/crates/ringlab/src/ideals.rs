//! Annihilators, generated ideals, the Jacobson radical, and the right-ideal
//! lattice of a finite ring.

use crate::analysis::Analysis;
use crate::bits::Bits;
use crate::error::{Result, RingError};
use crate::ring::{Caps, FiniteRing, RingElement};
use crate::set::{require_additively_closed, ElementSet, SetKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// `r_R(X) = {a : Xa = 0}` or `l_R(X) = {b : bX = 0}`.
///
/// The result is a one-sided ideal of the matching side.
pub fn annihilator(
    ring: &FiniteRing,
    xs: &ElementSet,
    side: Side,
    caps: &Caps,
) -> Result<ElementSet> {
    let a = Analysis::new(ring, caps)?;
    let gens: Vec<u32> = xs
        .members()
        .iter()
        .map(|m| ring.index_of(m).map(|i| i as u32))
        .collect::<Result<Vec<_>>>()?;
    let mut bits = Bits::new(a.count());
    'cand: for y in 0..a.count() {
        for &x in &gens {
            let p = match side {
                Side::Right => a.mul_idx(x, y),
                Side::Left => a.mul_idx(y, x),
            };
            if p != 0 {
                continue 'cand;
            }
        }
        bits.insert(y);
    }
    let kind = match side {
        Side::Right => SetKind::RightIdeal,
        Side::Left => SetKind::LeftIdeal,
    };
    Ok(ElementSet::from_bits(ring, kind, &bits))
}

/// The set `{a r b : r in R}`.
pub fn sandwich(
    ring: &FiniteRing,
    a: &RingElement,
    b: &RingElement,
    caps: &Caps,
) -> Result<ElementSet> {
    let an = Analysis::new(ring, caps)?;
    let ia = ring.index_of(a)? as u32;
    let ib = ring.index_of(b)? as u32;
    let bits = an.sandwich_span(ia, ib);
    Ok(ElementSet::from_bits(ring, SetKind::Plain, &bits))
}

/// Smallest one- or two-sided ideal containing `gens`, computed as a worklist
/// closure; the result is re-checked for closure before it is returned.
pub fn generated(
    ring: &FiniteRing,
    gens: &ElementSet,
    kind: SetKind,
    caps: &Caps,
) -> Result<ElementSet> {
    if kind == SetKind::Plain {
        return Err(RingError::MalformedTarget(
            "generated() needs an ideal kind".into(),
        ));
    }
    let a = Analysis::new(ring, caps)?;
    let mut seed = Vec::new();
    for m in gens.members() {
        let i = ring.index_of(m)? as u32;
        match kind {
            SetKind::RightIdeal => {
                for &g in a.basis_indices() {
                    seed.push(a.mul_idx(i, g));
                }
            }
            SetKind::LeftIdeal => {
                for &g in a.basis_indices() {
                    seed.push(a.mul_idx(g, i));
                }
            }
            SetKind::Ideal => {
                for &gl in a.basis_indices() {
                    let li = a.mul_idx(gl, i);
                    for &gr in a.basis_indices() {
                        seed.push(a.mul_idx(li, gr));
                    }
                }
            }
            SetKind::Plain => unreachable!(),
        }
    }
    let bits = a.span(seed);

    // Certify the fixed point: the span must contain the generators and be
    // closed under addition and the requested multiplications.
    for m in gens.members() {
        assert!(
            bits.contains(ring.index_of(m)? as u32),
            "closure lost a generator"
        );
    }
    let right = matches!(kind, SetKind::RightIdeal | SetKind::Ideal);
    let left = matches!(kind, SetKind::LeftIdeal | SetKind::Ideal);
    assert!(!right || a.is_right_stable(&bits), "not right-stable");
    assert!(!left || a.is_left_stable(&bits), "not left-stable");
    if bits.len() <= 1024 {
        let members: Vec<u32> = bits.iter().collect();
        for &x in &members {
            for &y in &members {
                assert!(bits.contains(a.add_idx(x, y)), "not additively closed");
            }
        }
    }

    Ok(ElementSet::from_bits(ring, kind, &bits))
}

/// True iff `a b = 0` for all `a` in `A`, `b` in `B`.
///
/// For additively closed operands this elementwise test coincides with the
/// vanishing of the product of their additive closures, since every product
/// of sums expands into the tested products.
pub fn set_product_is_zero(ring: &FiniteRing, a: &ElementSet, b: &ElementSet) -> Result<bool> {
    for x in a.members() {
        for y in b.members() {
            if ring.mul(x, y)? != ring.zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `a b ∈ target` for all pairs. `target` must be additively
/// closed, which makes the elementwise test sufficient for the product of the
/// operands' additive closures as well.
pub fn set_product_in(
    ring: &FiniteRing,
    a: &ElementSet,
    b: &ElementSet,
    target: &ElementSet,
) -> Result<bool> {
    require_additively_closed(ring, target, "target")?;
    let bits = target.to_bits(ring)?;
    for x in a.members() {
        for y in b.members() {
            let p = ring.mul(x, y)?;
            if !bits.contains(ring.index_of(&p)? as u32) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `J(R) = {a : 1 - ra is a unit for all r}`, a two-sided ideal.
pub fn jacobson_radical(ring: &FiniteRing, caps: &Caps) -> Result<ElementSet> {
    let a = Analysis::new(ring, caps)?;
    Ok(ElementSet::from_bits(
        ring,
        SetKind::Ideal,
        a.jacobson_bits(),
    ))
}

/// `N(R) = {a : a^m = 0 for some m}`. Not closed under anything in general.
pub fn nil_elements(ring: &FiniteRing) -> ElementSet {
    let a = Analysis::unbounded(ring);
    ElementSet::from_bits(ring, SetKind::Plain, a.nilpotent_bits())
}

pub fn units(ring: &FiniteRing) -> ElementSet {
    let a = Analysis::unbounded(ring);
    ElementSet::from_bits(ring, SetKind::Plain, a.units_bits())
}

pub fn idempotents(ring: &FiniteRing) -> ElementSet {
    let a = Analysis::unbounded(ring);
    let mut bits = Bits::new(a.count());
    for &e in a.idempotent_indices() {
        bits.insert(e);
    }
    ElementSet::from_bits(ring, SetKind::Plain, &bits)
}

pub fn central_idempotents(ring: &FiniteRing) -> ElementSet {
    let a = Analysis::unbounded(ring);
    let mut bits = Bits::new(a.count());
    for e in a.central_idempotent_indices() {
        bits.insert(e);
    }
    ElementSet::from_bits(ring, SetKind::Plain, &bits)
}

/// All right ideals, via join-closure of the cyclic right ideals.
pub fn right_ideals(ring: &FiniteRing, caps: &Caps) -> Result<Vec<ElementSet>> {
    let a = Analysis::new(ring, caps)?;
    let lattice = a.right_ideal_lattice()?;
    Ok(lattice
        .iter()
        .map(|b| ElementSet::from_bits(ring, SetKind::RightIdeal, b))
        .collect())
}

pub fn maximal_right_ideals(ring: &FiniteRing, caps: &Caps) -> Result<Vec<ElementSet>> {
    let a = Analysis::new(ring, caps)?;
    Ok(a.maximal_right_ideals()?
        .iter()
        .map(|b| ElementSet::from_bits(ring, SetKind::RightIdeal, b))
        .collect())
}

/// Least `m` with `I^m = 0`, or `None` when `I` is not nilpotent.
///
/// `I^m` vanishes iff every product of `m` members does, so the scan works on
/// plain product sets; the additive span only decides stabilization. The
/// descending chain of spans halves at each strict step, so the index of a
/// nilpotent ideal is reached within `|I|` steps.
pub fn is_nilpotent_ideal(ring: &FiniteRing, ideal: &ElementSet) -> Result<Option<u32>> {
    let a = Analysis::unbounded(ring);
    let bits = ideal.to_bits(ring)?;
    if !a.is_two_sided_ideal(&bits) {
        return Err(RingError::MalformedTarget(
            "is_nilpotent_ideal needs a two-sided ideal".into(),
        ));
    }
    let gens: Vec<u32> = bits.iter().collect();
    let mut power = bits.clone();
    let mut m = 1u32;
    loop {
        if power.len() == 1 && power.contains(0) {
            return Ok(Some(m));
        }
        if m as usize > ideal.len() {
            return Ok(None);
        }
        let mut next = Bits::new(a.count());
        next.insert(0);
        for p in power.iter() {
            for &g in &gens {
                a.extend_span(&mut next, a.mul_idx(p, g));
            }
        }
        if next == power {
            return Ok(None);
        }
        power = next;
        m += 1;
    }
}
