//! Explicit element collections with a closure kind.

use crate::bits::Bits;
use crate::error::{Result, RingError};
use crate::ring::{FiniteRing, RingElement};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Plain,
    RightIdeal,
    LeftIdeal,
    Ideal,
}

impl SetKind {
    pub fn label(self) -> &'static str {
        match self {
            SetKind::Plain => "plain",
            SetKind::RightIdeal => "right-ideal",
            SetKind::LeftIdeal => "left-ideal",
            SetKind::Ideal => "ideal",
        }
    }
}

/// Deduplicated element collection, kept sorted in the ring's canonical
/// element order. The kind records which closure properties the producer
/// claims; closure itself is checked by tests, not trusted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    kind: SetKind,
    members: Vec<RingElement>,
}

impl ElementSet {
    pub fn new(ring: &FiniteRing, kind: SetKind, members: Vec<RingElement>) -> Result<Self> {
        let mut keyed = members
            .into_iter()
            .map(|m| Ok((ring.index_of(&m)?, m)))
            .collect::<Result<Vec<_>>>()?;
        keyed.sort_by_key(|(i, _)| *i);
        keyed.dedup_by_key(|(i, _)| *i);
        Ok(ElementSet {
            kind,
            members: keyed.into_iter().map(|(_, m)| m).collect(),
        })
    }

    pub(crate) fn from_bits(ring: &FiniteRing, kind: SetKind, bits: &Bits) -> Self {
        ElementSet {
            kind,
            members: bits.iter().map(|i| ring.element_at(i as u64)).collect(),
        }
    }

    pub(crate) fn to_bits(&self, ring: &FiniteRing) -> Result<Bits> {
        let mut bits = Bits::new(ring.order() as u32);
        for m in &self.members {
            bits.insert(ring.index_of(m)? as u32);
        }
        Ok(bits)
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn members(&self) -> &[RingElement] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, ring: &FiniteRing, e: &RingElement) -> Result<bool> {
        let idx = ring.index_of(e)?;
        Ok(self
            .members
            .binary_search_by_key(&idx, |m| ring.index_of(m).expect("member dims"))
            .is_ok())
    }

    /// One element per line in canonical order, preceded by a `kind:` header.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "kind: {}", self.kind.label());
        for m in &self.members {
            let _ = writeln!(out, "{m}");
        }
        out
    }

    /// True when the set contains 0 and is closed under pairwise addition
    /// (which in a finite group gives negation for free).
    pub fn is_additively_closed(&self, ring: &FiniteRing) -> Result<bool> {
        let bits = self.to_bits(ring)?;
        if !bits.contains(0) {
            return Ok(false);
        }
        for a in &self.members {
            for b in &self.members {
                let s = ring.add(a, b)?;
                if !bits.contains(ring.index_of(&s)? as u32) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Exhaustively checks the closure claimed by `kind`.
    pub fn check_closure(&self, ring: &FiniteRing) -> Result<bool> {
        if self.kind == SetKind::Plain {
            return Ok(true);
        }
        if !self.is_additively_closed(ring)? {
            return Ok(false);
        }
        let bits = self.to_bits(ring)?;
        let right = matches!(self.kind, SetKind::RightIdeal | SetKind::Ideal);
        let left = matches!(self.kind, SetKind::LeftIdeal | SetKind::Ideal);
        for m in &self.members {
            for i in 0..ring.basis_count() {
                let g = ring.basis_element(i);
                if right && !bits.contains(ring.index_of(&ring.mul(m, &g)?)? as u32) {
                    return Ok(false);
                }
                if left && !bits.contains(ring.index_of(&ring.mul(&g, m)?)? as u32) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Requires `target` to contain 0 and be additively closed, for operations
/// whose correctness depends on it.
pub fn require_additively_closed(ring: &FiniteRing, target: &ElementSet, what: &str) -> Result<()> {
    if !target.is_additively_closed(ring)? {
        return Err(RingError::MalformedTarget(format!(
            "{what} must contain 0 and be closed under addition"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> FiniteRing {
        FiniteRing::new("Z4", vec![4], vec![1], vec![vec![1]]).unwrap()
    }

    #[test]
    fn members_are_sorted_and_deduplicated() {
        let r = z4();
        let e = |c: u64| r.element(&[c]).unwrap();
        let s = ElementSet::new(&r, SetKind::Plain, vec![e(3), e(1), e(3), e(0)]).unwrap();
        assert_eq!(s.members(), &[e(0), e(1), e(3)]);
        assert!(s.contains(&r, &e(1)).unwrap());
        assert!(!s.contains(&r, &e(2)).unwrap());
    }

    #[test]
    fn serialization_has_kind_header() {
        let r = z4();
        let e = |c: u64| r.element(&[c]).unwrap();
        let s = ElementSet::new(&r, SetKind::Ideal, vec![e(0), e(2)]).unwrap();
        assert_eq!(s.to_text(), "kind: ideal\n(0)\n(2)\n");
    }

    #[test]
    fn closure_checks() {
        let r = z4();
        let e = |c: u64| r.element(&[c]).unwrap();
        let ideal = ElementSet::new(&r, SetKind::Ideal, vec![e(0), e(2)]).unwrap();
        assert!(ideal.check_closure(&r).unwrap());
        let not_closed = ElementSet::new(&r, SetKind::Ideal, vec![e(0), e(1)]).unwrap();
        assert!(!not_closed.check_closure(&r).unwrap());
        let no_zero = ElementSet::new(&r, SetKind::Plain, vec![e(1)]).unwrap();
        assert!(!no_zero.is_additively_closed(&r).unwrap());
    }
}
