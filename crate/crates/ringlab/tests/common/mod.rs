//! Independent reference model for oracle tests.
//!
//! Rings are materialized as explicit matrices over `Z_m` with direct modular
//! arithmetic and every derived notion (units, radical, annihilators, right
//! ideals, the pair predicates) computed straight from its definition by
//! exhaustion. Nothing here shares code with the structure-constant path
//! under test.

use std::collections::HashMap;

pub type Mat = Vec<u64>;

pub struct ModelRing {
    /// Matrix dimension.
    pub dim: usize,
    /// Entry modulus.
    pub modulus: u64,
    pub elems: Vec<Mat>,
    pub index: HashMap<Mat, usize>,
}

#[allow(dead_code)]
impl ModelRing {
    fn from_elems(dim: usize, modulus: u64, elems: Vec<Mat>) -> Self {
        let index = elems
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        ModelRing {
            dim,
            modulus,
            elems,
            index,
        }
    }

    /// `Z_m` as 1x1 matrices.
    pub fn zmod(m: u64) -> Self {
        let elems = (0..m).map(|x| vec![x]).collect();
        Self::from_elems(1, m, elems)
    }

    /// All of `M_n(Z_m)`.
    pub fn matrices(n: usize, m: u64) -> Self {
        let mut elems = vec![vec![]];
        for _ in 0..n * n {
            let mut next = Vec::new();
            for e in &elems {
                for v in 0..m {
                    let mut e2 = e.clone();
                    e2.push(v);
                    next.push(e2);
                }
            }
            elems = next;
        }
        Self::from_elems(n, m, elems)
    }

    /// Upper triangular subring of `M_n(Z_m)`.
    pub fn upper_triangular(n: usize, m: u64) -> Self {
        let full = Self::matrices(n, m);
        let elems = full
            .elems
            .into_iter()
            .filter(|e| (0..n).all(|p| (0..p).all(|q| e[p * n + q] == 0)))
            .collect();
        Self::from_elems(n, m, elems)
    }

    /// Constant diagonal plus arbitrary strictly upper entries.
    pub fn scalar_upper(n: usize, m: u64) -> Self {
        let full = Self::matrices(n, m);
        let elems = full
            .elems
            .into_iter()
            .filter(|e| {
                let d = e[0];
                (0..n).all(|p| {
                    (0..n).all(|q| {
                        if p == q {
                            e[p * n + q] == d
                        } else if p > q {
                            e[p * n + q] == 0
                        } else {
                            true
                        }
                    })
                })
            })
            .collect();
        Self::from_elems(n, m, elems)
    }

    pub fn zero(&self) -> Mat {
        vec![0; self.dim * self.dim]
    }

    pub fn one(&self) -> Mat {
        let mut e = self.zero();
        for p in 0..self.dim {
            e[p * self.dim + p] = 1;
        }
        e
    }

    pub fn add(&self, a: &Mat, b: &Mat) -> Mat {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + y) % self.modulus)
            .collect()
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.dim;
        let mut out = self.zero();
        for p in 0..n {
            for q in 0..n {
                let mut acc = 0u64;
                for t in 0..n {
                    acc += a[p * n + t] * b[t * n + q];
                }
                out[p * n + q] = acc % self.modulus;
            }
        }
        out
    }

    pub fn is_unit(&self, a: &Mat) -> bool {
        self.elems
            .iter()
            .any(|b| self.mul(a, b) == self.one() && self.mul(b, a) == self.one())
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.elems.len())
            .filter(|&i| self.is_unit(&self.elems[i]))
            .collect()
    }

    /// `{a : 1 - ra is a unit for all r}`, straight from the definition.
    pub fn jacobson(&self) -> Vec<usize> {
        (0..self.elems.len())
            .filter(|&i| {
                self.elems.iter().all(|r| {
                    let ra = self.mul(r, &self.elems[i]);
                    let neg: Mat = ra
                        .iter()
                        .map(|&x| (self.modulus - x) % self.modulus)
                        .collect();
                    self.is_unit(&self.add(&self.one(), &neg))
                })
            })
            .collect()
    }

    pub fn nilpotents(&self) -> Vec<usize> {
        (0..self.elems.len())
            .filter(|&i| {
                let mut p = self.elems[i].clone();
                for _ in 0..self.elems.len() {
                    if p == self.zero() {
                        return true;
                    }
                    p = self.mul(&p, &self.elems[i]);
                }
                p == self.zero()
            })
            .collect()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.elems.len())
            .filter(|&i| self.mul(&self.elems[i], &self.elems[i]) == self.elems[i])
            .collect()
    }

    /// Every right ideal, by filtering all subsets. Only feasible for tiny
    /// rings; that is the point of the oracle.
    pub fn right_ideals_bruteforce(&self) -> Vec<Vec<usize>> {
        let n = self.elems.len();
        assert!(n <= 16, "subset enumeration needs a tiny ring");
        let zero_pos = self.index[&self.zero()];
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask >> zero_pos & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = members.iter().all(|&i| {
                members.iter().all(|&j| {
                    let s = self.add(&self.elems[i], &self.elems[j]);
                    mask >> self.index[&s] & 1 == 1
                })
            }) && members.iter().all(|&i| {
                self.elems.iter().all(|r| {
                    let p = self.mul(&self.elems[i], r);
                    mask >> self.index[&p] & 1 == 1
                })
            });
            if closed {
                out.push(members);
            }
        }
        out
    }

    pub fn maximal_right_ideals_bruteforce(&self) -> Vec<Vec<usize>> {
        let all = self.right_ideals_bruteforce();
        let n = self.elems.len();
        all.iter()
            .filter(|i| i.len() < n)
            .filter(|i| {
                !all.iter()
                    .any(|j| j.len() < n && j.len() > i.len() && i.iter().all(|x| j.contains(x)))
            })
            .cloned()
            .collect()
    }

    /// Direct triple-loop reflexivity: no basis shortcut.
    pub fn is_reflexive(&self) -> bool {
        for a in &self.elems {
            for b in &self.elems {
                let arb_zero = self
                    .elems
                    .iter()
                    .all(|r| self.mul(&self.mul(a, r), b) == self.zero());
                if arb_zero {
                    let bra_zero = self
                        .elems
                        .iter()
                        .all(|r| self.mul(&self.mul(b, r), a) == self.zero());
                    if !bra_zero {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_j_reflexive(&self) -> bool {
        let jac: Vec<Mat> = self
            .jacobson()
            .iter()
            .map(|&i| self.elems[i].clone())
            .collect();
        for a in &self.elems {
            for b in &self.elems {
                let arb_zero = self
                    .elems
                    .iter()
                    .all(|r| self.mul(&self.mul(a, r), b) == self.zero());
                if arb_zero {
                    let bra_in_j = self
                        .elems
                        .iter()
                        .all(|r| jac.contains(&self.mul(&self.mul(b, r), a)));
                    if !bra_in_j {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_j_reversible(&self) -> bool {
        let jac: Vec<Mat> = self
            .jacobson()
            .iter()
            .map(|&i| self.elems[i].clone())
            .collect();
        for a in &self.elems {
            for b in &self.elems {
                if self.mul(a, b) == self.zero() && !jac.contains(&self.mul(b, a)) {
                    return false;
                }
            }
        }
        true
    }
}

use ringlab::ring::FiniteRing;

/// Index of the structure-constant element corresponding to a model matrix,
/// for rings built by `matrix_ring` over `Z_m` (entry layout `(p, q) ->
/// coordinate p*n + q`).
#[allow(dead_code)]
pub fn full_matrix_coords(ring: &FiniteRing, mat: &Mat) -> ringlab::RingElement {
    ring.element(mat).expect("layout matches")
}

/// Same for `upper_triangular_ring`, whose coordinates run over positions
/// `(0,0), (0,1), .., (1,1), ..` row by row.
#[allow(dead_code)]
pub fn triangular_coords(ring: &FiniteRing, dim: usize, mat: &Mat) -> ringlab::RingElement {
    let mut coords = Vec::new();
    for p in 0..dim {
        for q in p..dim {
            coords.push(mat[p * dim + q]);
        }
    }
    ring.element(&coords).expect("layout matches")
}
