//! Finite unital rings presented by structure constants.
//!
//! A ring is stored as a list of additive generator orders `d1..dk` together
//! with one coordinate vector per generator pair giving the product of two
//! basis generators. The additive group is `Z_{d1} x ... x Z_{dk}` and
//! multiplication is the bilinear extension of the product table, so
//! validation only has to look at basis pairs and triples instead of whole
//! Cayley tables.

use crate::error::{Result, RingError};
use std::fmt;

/// Enumeration and lattice limits.
///
/// `max_order` guards every operation that walks all ring elements,
/// `cubic_cap` the ones that walk the right-ideal lattice, and
/// `lattice_bound` aborts runaway ideal-lattice closures.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_order: u64,
    pub cubic_cap: u64,
    pub lattice_bound: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 4096,
            cubic_cap: 512,
            lattice_bound: 100_000,
        }
    }
}

impl Caps {
    /// Default caps with `max_order` taken from the `RINGLAB_MAX_ORDER`
    /// environment variable when set.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(v) = std::env::var("RINGLAB_MAX_ORDER") {
            if let Ok(n) = v.trim().parse::<u64>() {
                caps.max_order = n.max(1);
            }
        }
        caps
    }

    pub fn with_max_order(mut self, max_order: u64) -> Self {
        self.max_order = max_order.max(1);
        self
    }

    pub fn check_order(&self, order: u128) -> Result<()> {
        if order > self.max_order as u128 {
            return Err(RingError::OrderLimitExceeded {
                order,
                limit: self.max_order,
            });
        }
        Ok(())
    }

    pub(crate) fn check_cubic(&self, order: u128) -> Result<()> {
        if order > self.cubic_cap as u128 {
            return Err(RingError::OrderLimitExceeded {
                order,
                limit: self.cubic_cap,
            });
        }
        Ok(())
    }
}

/// Element of a [`FiniteRing`]: a coordinate vector relative to the ring's
/// basis, with every coordinate reduced modulo the generator's order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingElement {
    coords: Vec<u32>,
}

impl RingElement {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Parses the `(c1,...,ck)` form. Coordinates are not reduced here; use
    /// [`FiniteRing::element`] to attach one to a ring.
    pub fn parse(text: &str) -> Result<Vec<u64>> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| RingError::MalformedLine {
                line: 0,
                msg: format!("element {t:?} is not of the form (c1,...,ck)"),
            })?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u64>()
                    .map_err(|_| RingError::MalformedLine {
                        line: 0,
                        msg: format!("bad coordinate {c:?} in element {t:?}"),
                    })
            })
            .collect()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite associative unital ring presented by structure constants.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    name: String,
    orders: Vec<u32>,
    one: RingElement,
    /// Row-major `k*k` table; entry `i*k+j` is the product `e_i * e_j`.
    products: Vec<RingElement>,
    order: u64,
    /// Mixed-radix weights: index of an element is `sum c_i * weights[i]`,
    /// little-endian in the generator index.
    weights: Vec<u64>,
    /// Product table with zero coordinates stripped: `(generator, coefficient)`
    /// pairs per basis pair. Drives the bilinear multiplication kernel.
    sparse: Vec<Vec<(u32, u32)>>,
}

impl FiniteRing {
    /// Builds a ring value from raw parts, reducing all coordinates.
    ///
    /// This checks arities and computes the cached order; it does not check
    /// the ring laws. Call [`validate_ring`] for that.
    pub fn new(
        name: impl Into<String>,
        orders: Vec<u32>,
        one: Vec<u64>,
        products: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let k = orders.len();
        if orders.contains(&0) {
            return Err(RingError::MalformedLine {
                line: 0,
                msg: "generator orders must be >= 1".into(),
            });
        }
        if one.len() != k {
            return Err(RingError::DimensionMismatch {
                expected: k,
                got: one.len(),
            });
        }
        if products.len() != k * k {
            return Err(RingError::MissingProduct { i: 0, j: 0 });
        }
        let mut order: u128 = 1;
        let mut weights = Vec::with_capacity(k);
        for &d in &orders {
            weights.push(order as u64);
            order *= d as u128;
            if order > u64::MAX as u128 {
                return Err(RingError::OrderLimitExceeded {
                    order,
                    limit: u64::MAX,
                });
            }
        }
        let reduce = |v: &[u64]| -> Result<RingElement> {
            if v.len() != k {
                return Err(RingError::DimensionMismatch {
                    expected: k,
                    got: v.len(),
                });
            }
            Ok(RingElement {
                coords: v
                    .iter()
                    .zip(&orders)
                    .map(|(&c, &d)| (c % d as u64) as u32)
                    .collect(),
            })
        };
        let one = reduce(&one)?;
        let products = products
            .iter()
            .map(|p| reduce(p))
            .collect::<Result<Vec<_>>>()?;
        let sparse = products
            .iter()
            .map(|p| {
                p.coords
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(l, &c)| (l as u32, c))
                    .collect()
            })
            .collect();
        Ok(FiniteRing {
            name: name.into(),
            orders,
            one,
            products,
            order: order as u64,
            weights,
            sparse,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Number of basis generators.
    pub fn basis_count(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Cached `|R|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coords: vec![0; self.orders.len()],
        }
    }

    pub fn one(&self) -> &RingElement {
        &self.one
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        let mut z = self.zero();
        if self.orders[i] > 1 {
            z.coords[i] = 1;
        }
        z
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &RingElement {
        &self.products[i * self.orders.len() + j]
    }

    /// Attaches a coordinate vector to this ring, reducing modulo the orders.
    pub fn element(&self, coords: &[u64]) -> Result<RingElement> {
        if coords.len() != self.orders.len() {
            return Err(RingError::DimensionMismatch {
                expected: self.orders.len(),
                got: coords.len(),
            });
        }
        Ok(RingElement {
            coords: coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &d)| (c % d as u64) as u32)
                .collect(),
        })
    }

    pub fn parse_element(&self, text: &str) -> Result<RingElement> {
        self.element(&RingElement::parse(text)?)
    }

    fn check_dims(&self, a: &RingElement) -> Result<()> {
        if a.coords.len() != self.orders.len() {
            return Err(RingError::DimensionMismatch {
                expected: self.orders.len(),
                got: a.coords.len(),
            });
        }
        Ok(())
    }

    /// Coordinatewise sum modulo the generator orders.
    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        Ok(RingElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.orders)
                .map(|((&x, &y), &d)| {
                    let s = x + y;
                    if s >= d {
                        s - d
                    } else {
                        s
                    }
                })
                .collect(),
        })
    }

    /// Additive inverse: `b` with `a + b = 0`.
    pub fn neg(&self, a: &RingElement) -> Result<RingElement> {
        self.check_dims(a)?;
        Ok(RingElement {
            coords: a
                .coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &d)| if x == 0 { 0 } else { d - x })
                .collect(),
        })
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// `m * a` under repeated addition, computed coordinatewise.
    pub fn scalar_mul(&self, m: u64, a: &RingElement) -> Result<RingElement> {
        self.check_dims(a)?;
        Ok(RingElement {
            coords: a
                .coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &d)| ((m % d as u64) * x as u64 % d as u64) as u32)
                .collect(),
        })
    }

    /// Bilinear extension of the basis product table.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        let k = self.orders.len();
        let mut acc = vec![0u64; k];
        self.mul_into(&a.coords, &b.coords, &mut acc);
        Ok(RingElement {
            coords: acc
                .iter()
                .zip(&self.orders)
                .map(|(&v, &d)| (v % d as u64) as u32)
                .collect(),
        })
    }

    /// Accumulates the unreduced product coordinates of `a * b` into `acc`.
    pub(crate) fn mul_into(&self, a: &[u32], b: &[u32], acc: &mut [u64]) {
        let k = self.orders.len();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = i * k;
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = ai as u64 * bj as u64;
                for &(l, co) in &self.sparse[row + j] {
                    acc[l as usize] += c * co as u64;
                }
            }
        }
    }

    /// Canonical index of an element: mixed-radix value of its coordinates,
    /// little-endian in the generator index.
    pub fn index_of(&self, a: &RingElement) -> Result<u64> {
        self.check_dims(a)?;
        Ok(a.coords
            .iter()
            .zip(&self.weights)
            .map(|(&c, &w)| c as u64 * w)
            .sum())
    }

    pub fn element_at(&self, mut idx: u64) -> RingElement {
        debug_assert!(idx < self.order);
        let coords = self
            .orders
            .iter()
            .map(|&d| {
                let c = (idx % d as u64) as u32;
                idx /= d as u64;
                c
            })
            .collect();
        RingElement { coords }
    }

    /// All elements in canonical order. The first element is zero.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.order).map(|i| self.element_at(i))
    }

    /// Additive order of `a`: least `m >= 1` with `m * a = 0`.
    pub fn additive_order(&self, a: &RingElement) -> Result<u64> {
        self.check_dims(a)?;
        let mut m = 1u64;
        for (&c, &d) in a.coords.iter().zip(&self.orders) {
            let d = d as u64;
            let o = d / gcd(d, c as u64);
            m = m / gcd(m, o) * o;
        }
        Ok(m)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Enumerates all elements after checking the order cap.
pub fn enumerate_elements(ring: &FiniteRing, caps: &Caps) -> Result<Vec<RingElement>> {
    caps.check_order(ring.order() as u128)?;
    Ok(ring.elements().collect())
}

/// Searches both sides for an inverse: `Some(b)` with `a*b = b*a = 1`.
pub fn unit_inverse(ring: &FiniteRing, a: &RingElement) -> Result<Option<RingElement>> {
    for b in ring.elements() {
        if ring.mul(a, &b)? == *ring.one() && ring.mul(&b, a)? == *ring.one() {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

pub fn is_unit(ring: &FiniteRing, a: &RingElement) -> Result<bool> {
    Ok(unit_inverse(ring, a)?.is_some())
}

/// One ring-law violation, with the basis indices (1-based) witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub indices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    CoordinateRange,
    OrderCompatibility,
    Associativity,
    IdentityLeft,
    IdentityRight,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::CoordinateRange => "coordinate-range",
            Law::OrderCompatibility => "order-compatibility",
            Law::Associativity => "associativity",
            Law::IdentityLeft => "identity-left",
            Law::IdentityRight => "identity-right",
        };
        f.write_str(s)
    }
}

/// Outcome of [`validate_ring`]: `ok` holds exactly when `violations` is empty.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every ring law on the presentation.
///
/// Associativity and the identity laws are checked on basis generators only;
/// bilinearity extends them to all elements. Order compatibility
/// (`d_i * (e_i e_j) = 0` on both sides) is what makes the bilinear extension
/// well defined in the first place.
pub fn validate_ring(ring: &FiniteRing) -> ValidationReport {
    let k = ring.basis_count();
    let mut violations = Vec::new();

    // Stored vectors are reduced by construction, but a hand-built value could
    // have been made with unchecked coordinates; re-check the ranges.
    let in_range = |e: &RingElement| {
        e.coords()
            .iter()
            .zip(ring.orders())
            .all(|(&c, &d)| c < d || (d == 1 && c == 0))
    };
    if !in_range(ring.one()) {
        violations.push(Violation {
            law: Law::CoordinateRange,
            indices: vec![0],
        });
    }
    for i in 0..k {
        for j in 0..k {
            if !in_range(ring.basis_product(i, j)) {
                violations.push(Violation {
                    law: Law::CoordinateRange,
                    indices: vec![i + 1, j + 1],
                });
            }
        }
    }

    for i in 0..k {
        for j in 0..k {
            let p = ring.basis_product(i, j);
            let di = ring.orders()[i] as u64;
            let dj = ring.orders()[j] as u64;
            let left = ring.scalar_mul(di, p).expect("dims");
            let right = ring.scalar_mul(dj, p).expect("dims");
            if left != ring.zero() || right != ring.zero() {
                violations.push(Violation {
                    law: Law::OrderCompatibility,
                    indices: vec![i + 1, j + 1],
                });
            }
        }
    }

    for i in 0..k {
        let ei = ring.basis_element(i);
        if ring.mul(ring.one(), &ei).expect("dims") != ei {
            violations.push(Violation {
                law: Law::IdentityLeft,
                indices: vec![i + 1],
            });
        }
        if ring.mul(&ei, ring.one()).expect("dims") != ei {
            violations.push(Violation {
                law: Law::IdentityRight,
                indices: vec![i + 1],
            });
        }
    }

    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let el = ring.basis_element(l);
                let ei = ring.basis_element(i);
                let lhs = ring.mul(ring.basis_product(i, j), &el).expect("dims");
                let rhs = ring.mul(&ei, ring.basis_product(j, l)).expect("dims");
                if lhs != rhs {
                    violations.push(Violation {
                        law: Law::Associativity,
                        indices: vec![i + 1, j + 1, l + 1],
                    });
                }
            }
        }
    }

    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn z4() -> FiniteRing {
        FiniteRing::new("Z4", vec![4], vec![1], vec![vec![1]]).unwrap()
    }

    fn zero_ring() -> FiniteRing {
        FiniteRing::new("O", vec![], vec![], vec![]).unwrap()
    }

    #[test]
    fn z4_arithmetic() {
        let r = z4();
        let two = r.element(&[2]).unwrap();
        let three = r.element(&[3]).unwrap();
        assert_eq!(r.add(&two, &three).unwrap(), r.element(&[1]).unwrap());
        assert_eq!(r.neg(&three).unwrap(), r.element(&[1]).unwrap());
        assert_eq!(r.neg(&r.zero()).unwrap(), r.zero());
        assert_eq!(r.mul(&two, &three).unwrap(), two);
        assert_eq!(r.add(&two, &r.zero()).unwrap(), two);
    }

    #[test]
    fn z4_validates_and_enumerates() {
        let r = z4();
        assert!(validate_ring(&r).ok());
        let elems = enumerate_elements(&r, &Caps::default()).unwrap();
        assert_eq!(elems.len(), 4);
        assert_eq!(elems[0], r.zero());
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(r.index_of(e).unwrap(), i as u64);
        }
    }

    #[test]
    fn z4_units() {
        let r = z4();
        let three = r.element(&[3]).unwrap();
        let two = r.element(&[2]).unwrap();
        assert_eq!(unit_inverse(&r, &three).unwrap(), Some(three.clone()));
        assert!(!is_unit(&r, &two).unwrap());
        assert!(is_unit(&r, r.one()).unwrap());
    }

    #[test]
    fn identity_violation_carries_witness() {
        // one = (1) forces e1 = 1, so e1*e1 must be (1); (2) breaks both
        // identity laws at i = 1.
        let r = FiniteRing::new("bad", vec![4], vec![1], vec![vec![2]]).unwrap();
        let rep = validate_ring(&r);
        assert!(!rep.ok());
        assert!(rep
            .violations
            .iter()
            .any(|v| v.law == Law::IdentityLeft && v.indices == vec![1]));
    }

    #[test]
    fn order_compat_violation() {
        // Z2*e1 + Z4*e2 with e1 = 1 and e1*e2 = e2 demands 2*e2 = 0, which
        // fails since e2 has order 4.
        let r = FiniteRing::new(
            "bad2",
            vec![2, 4],
            vec![1, 0],
            vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 0]],
        )
        .unwrap();
        let rep = validate_ring(&r);
        assert!(rep
            .violations
            .iter()
            .any(|v| v.law == Law::OrderCompatibility && v.indices == vec![1, 2]));
    }

    #[test]
    fn associativity_violation() {
        // e2*e2 = e3, e3*e2 = e2, rest zero: (e2 e2) e2 = e2 but e2 (e2 e2) = 0.
        let mut products = vec![vec![0u64, 0, 0]; 9];
        products[0] = vec![1, 0, 0]; // e1 e1
        products[1] = vec![0, 1, 0]; // e1 e2
        products[2] = vec![0, 0, 1]; // e1 e3
        products[3] = vec![0, 1, 0]; // e2 e1
        products[4] = vec![0, 0, 1]; // e2 e2 = e3
        products[6] = vec![0, 0, 1]; // e3 e1
        products[7] = vec![0, 1, 0]; // e3 e2 = e2
        let r = FiniteRing::new("nonassoc", vec![2, 2, 2], vec![1, 0, 0], products).unwrap();
        let rep = validate_ring(&r);
        assert!(rep
            .violations
            .iter()
            .any(|v| v.law == Law::Associativity && v.indices == vec![2, 2, 2]));
    }

    #[test]
    fn zero_ring_is_permitted() {
        let r = zero_ring();
        assert_eq!(r.order(), 1);
        assert!(validate_ring(&r).ok());
        assert_eq!(r.elements().count(), 1);
        assert_eq!(*r.one(), r.zero());
        // In the zero ring 0 = 1 is a unit.
        assert!(is_unit(&r, &r.zero()).unwrap());
    }

    #[test]
    fn enumerate_respects_cap() {
        let r = z4();
        let caps = Caps::default().with_max_order(2);
        assert!(matches!(
            enumerate_elements(&r, &caps),
            Err(RingError::OrderLimitExceeded { .. })
        ));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let r = z4();
        let other = FiniteRing::new("Z2xZ2", vec![2, 2], vec![1, 1], {
            let mut p = vec![vec![0u64, 0]; 4];
            p[0] = vec![1, 0];
            p[3] = vec![0, 1];
            p
        })
        .unwrap();
        let e = other.element(&[1, 0]).unwrap();
        assert!(matches!(
            r.add(&e, &e),
            Err(RingError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn additive_order_matches_iteration() {
        let r = FiniteRing::new(
            "Z4xZ6",
            vec![4, 6],
            vec![1, 1],
            vec![vec![1, 0], vec![0, 0], vec![0, 0], vec![0, 1]],
        )
        .unwrap();
        for e in r.elements() {
            let o = r.additive_order(&e).unwrap();
            let mut acc = r.zero();
            for m in 1..=o {
                acc = r.add(&acc, &e).unwrap();
                if m < o {
                    assert_ne!(acc, r.zero());
                }
            }
            assert_eq!(acc, r.zero());
        }
    }
}
