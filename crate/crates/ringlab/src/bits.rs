//! Small fixed-width bitset keyed by element index.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits {
    blocks: Vec<u64>,
    n: u32,
    count: u32,
}

impl Bits {
    pub fn new(n: u32) -> Self {
        Bits {
            blocks: vec![0; (n as usize).div_ceil(64)],
            n,
            count: 0,
        }
    }

    pub fn singleton(n: u32, i: u32) -> Self {
        let mut b = Bits::new(n);
        b.insert(i);
        b
    }

    /// Inserts `i`; returns true if it was not already present.
    pub fn insert(&mut self, i: u32) -> bool {
        debug_assert!(i < self.n);
        let (blk, bit) = (i as usize / 64, i % 64);
        let mask = 1u64 << bit;
        if self.blocks[blk] & mask == 0 {
            self.blocks[blk] |= mask;
            self.count += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, i: u32) -> bool {
        debug_assert!(i < self.n);
        let (blk, bit) = (i as usize / 64, i % 64);
        let mask = 1u64 << bit;
        if self.blocks[blk] & mask != 0 {
            self.blocks[blk] &= !mask;
            self.count -= 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, i: u32) -> bool {
        let (blk, bit) = (i as usize / 64, i % 64);
        self.blocks[blk] & (1u64 << bit) != 0
    }

    pub fn len(&self) -> usize {
        self.count as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &blk)| {
            let mut rem = blk;
            std::iter::from_fn(move || {
                if rem == 0 {
                    None
                } else {
                    let t = rem.trailing_zeros();
                    rem &= rem - 1;
                    Some(bi as u32 * 64 + t)
                }
            })
        })
    }

    pub fn is_subset_of(&self, other: &Bits) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Bits) -> Bits {
        let blocks: Vec<u64> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & b)
            .collect();
        let count = blocks.iter().map(|b| b.count_ones()).sum();
        Bits {
            blocks,
            n: self.n,
            count,
        }
    }
}
