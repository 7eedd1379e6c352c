//! Re-presentation of an explicitly tabulated finite ring by structure
//! constants.
//!
//! Quotients and corner rings are first materialized as element lists with
//! addition and multiplication given by closures over dense ids `0..n`. This
//! module finds an independent generating set of the additive group (so the
//! group is the direct sum of the generators' cyclic subgroups) and reads the
//! structure constants off the generator products.
//!
//! The decomposition is the classic exponent-first argument: pick a generator
//! `g` of maximal additive order (in a finite abelian group the maximal order
//! is the exponent), decompose the quotient by `<g>` recursively, and lift
//! each quotient generator `x` of order `m` to `x - (t/m) g` where
//! `m x = t g`; divisibility of `t` by `m` is exactly what the exponent
//! property guarantees. Generator picks break ties by smallest element id, so
//! presentations are canonical for a fixed input labeling.

use crate::error::Result;
use crate::ring::FiniteRing;

pub(crate) struct TableRing<'a> {
    pub n: u32,
    pub add: &'a dyn Fn(u32, u32) -> u32,
    pub mul: &'a dyn Fn(u32, u32) -> u32,
    /// Id of the multiplicative identity; additive zero must have id 0.
    pub one: u32,
}

pub(crate) struct Presented {
    pub ring: FiniteRing,
    /// Coordinates of each input id relative to the new basis.
    pub coords_of: Vec<Vec<u32>>,
    /// Input id of each new-basis coordinate vector, keyed by the presented
    /// ring's canonical element index.
    pub id_of_index: Vec<u32>,
}

impl<'a> TableRing<'a> {
    fn neg(&self, x: u32) -> u32 {
        let mut acc = (self.add)(x, x);
        let mut prev = x;
        // walk multiples until the cycle closes at 0: the last one is -x
        if x == 0 {
            return 0;
        }
        while acc != 0 {
            prev = acc;
            acc = (self.add)(acc, x);
        }
        prev
    }

    fn scalar(&self, m: u64, x: u32) -> u32 {
        let mut acc = 0u32;
        for _ in 0..m {
            acc = (self.add)(acc, x);
        }
        acc
    }
}

/// Additive order of `x` in the quotient defined by `rep`.
fn quotient_order(t: &TableRing, rep: &[u32], x: u32) -> u64 {
    let zero_rep = rep[0];
    let mut acc = x;
    let mut m = 1u64;
    while rep[acc as usize] != zero_rep {
        acc = (t.add)(acc, x);
        m += 1;
    }
    m
}

fn decompose(t: &TableRing, rep: &[u32]) -> Vec<(u32, u64)> {
    let mut elems: Vec<u32> = {
        let mut seen = vec![false; t.n as usize];
        let mut out = Vec::new();
        for x in 0..t.n {
            let r = rep[x as usize];
            if !seen[r as usize] {
                seen[r as usize] = true;
                out.push(r);
            }
        }
        out.sort_unstable();
        out
    };
    if elems.len() == 1 {
        return Vec::new();
    }

    let orders: Vec<u64> = elems.iter().map(|&x| quotient_order(t, rep, x)).collect();
    let max = *orders.iter().max().expect("nonempty");
    let pos = orders.iter().position(|&o| o == max).expect("max exists");
    let g = elems[pos];
    elems.clear();

    // Multiples of g, as representatives.
    let mut g_mults = Vec::with_capacity(max as usize);
    let mut acc = 0u32;
    for _ in 0..max {
        g_mults.push(rep[acc as usize]);
        acc = (t.add)(acc, g);
    }
    let mut in_gspan = vec![false; t.n as usize];
    for x in 0..t.n {
        if g_mults.contains(&rep[x as usize]) {
            in_gspan[x as usize] = true;
        }
    }
    let subgroup: Vec<u32> = (0..t.n).filter(|&x| in_gspan[x as usize]).collect();

    // Quotient by the preimage of <g>: ascending scan makes the first
    // unvisited member of each coset its representative.
    let mut new_rep = vec![u32::MAX; t.n as usize];
    for x in 0..t.n {
        if new_rep[x as usize] != u32::MAX {
            continue;
        }
        for &h in &subgroup {
            let y = (t.add)(x, h);
            if new_rep[y as usize] == u32::MAX {
                new_rep[y as usize] = x;
            }
        }
    }

    let deeper = decompose(t, &new_rep);
    let mut out = vec![(g, max)];
    for (x, m) in deeper {
        // m*x lands in <g> modulo the old equivalence; find which multiple.
        let mx = t.scalar(m, x);
        let target = rep[mx as usize];
        let tpos = g_mults
            .iter()
            .position(|&gm| gm == target)
            .expect("m*x must land in <g>") as u64;
        assert!(
            tpos.is_multiple_of(m),
            "exponent property violated: order {m}, landing multiple {tpos}"
        );
        let correction = t.scalar(tpos / m, g);
        let lift = (t.add)(x, t.neg(correction));
        debug_assert_eq!(quotient_order(t, rep, lift), m);
        out.push((lift, m));
    }
    out
}

/// Presents the tabulated ring by structure constants over a freshly derived
/// basis. Generators of additive order 1 are dropped, so the zero ring comes
/// out with an empty basis.
pub(crate) fn present(name: &str, t: &TableRing) -> Result<Presented> {
    let identity_rep: Vec<u32> = (0..t.n).collect();
    let gens: Vec<(u32, u64)> = decompose(t, &identity_rep)
        .into_iter()
        .filter(|&(_, o)| o > 1)
        .collect();
    let k = gens.len();

    // Multiples of each generator, for coordinate-to-id evaluation.
    let mults: Vec<Vec<u32>> = gens
        .iter()
        .map(|&(g, o)| {
            let mut row = Vec::with_capacity(o as usize);
            let mut acc = 0u32;
            for _ in 0..o {
                row.push(acc);
                acc = (t.add)(acc, g);
            }
            row
        })
        .collect();

    let orders: Vec<u32> = gens.iter().map(|&(_, o)| o as u32).collect();
    let total: u64 = orders.iter().map(|&o| o as u64).product();
    assert_eq!(total, t.n as u64, "basis does not span the additive group");

    let mut coords_of: Vec<Vec<u32>> = vec![Vec::new(); t.n as usize];
    let mut seen = vec![false; t.n as usize];
    let mut id_of_index = vec![0u32; t.n as usize];
    for idx in 0..total {
        let mut rem = idx;
        let mut coords = Vec::with_capacity(k);
        let mut id = 0u32;
        for (i, &o) in orders.iter().enumerate() {
            let c = (rem % o as u64) as u32;
            rem /= o as u64;
            coords.push(c);
            id = (t.add)(id, mults[i][c as usize]);
        }
        assert!(!seen[id as usize], "basis coordinates collide");
        seen[id as usize] = true;
        coords_of[id as usize] = coords;
        id_of_index[idx as usize] = id;
    }

    let coords64 =
        |id: u32| -> Vec<u64> { coords_of[id as usize].iter().map(|&c| c as u64).collect() };
    let mut products = Vec::with_capacity(k * k);
    for &(gi, _) in &gens {
        for &(gj, _) in &gens {
            products.push(coords64((t.mul)(gi, gj)));
        }
    }
    let one = coords64(t.one);
    let ring = FiniteRing::new(name, orders, one, products)?;
    Ok(Presented {
        ring,
        coords_of,
        id_of_index,
    })
}
