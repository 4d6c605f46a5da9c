//! Compact storage for tables during enumeration.
//!
//! A level-`k` table is stored as one bit per non-root vertex of the binary
//! tree of depth `k`, in heap order (root 0, children of `c` at `2c+1` and
//! `2c+2`). The bit at vertex `c` is the output letter written on the edge
//! into `c`. This is `2^{k+1} - 2` bits instead of `2^k` words, and prefix
//! compatibility holds by construction.

use super::table::TransformTable;

pub(crate) fn vertex_count(level: u32) -> usize {
    (1usize << (level + 1)) - 1
}

pub(crate) fn word_count(level: u32) -> usize {
    vertex_count(level).div_ceil(64)
}

#[inline]
fn get(bits: &[u64], c: usize) -> u64 {
    (bits[c >> 6] >> (c & 63)) & 1
}

pub(crate) fn pack(table: &TransformTable, out: &mut [u64]) {
    let k = table.level();
    out.fill(0);
    for depth in 1..=k {
        let shift = k - depth;
        let base = (1usize << depth) - 1;
        for prefix in 0..(1u32 << depth) {
            let image = table.image(prefix << shift);
            let bit = u64::from((image >> shift) & 1);
            let c = base + prefix as usize;
            out[c >> 6] |= bit << (c & 63);
        }
    }
}

pub(crate) fn unpack(level: u32, bits: &[u64]) -> TransformTable {
    let mut images = vec![0u32];
    for depth in 1..=level {
        let base = (1usize << depth) - 1;
        let mut next = Vec::with_capacity(images.len() * 2);
        for (parent, &img) in images.iter().enumerate() {
            for x in 0..2 {
                let c = base + 2 * parent + x;
                next.push((img << 1) | get(bits, c) as u32);
            }
        }
        images = next;
    }
    TransformTable::from_outputs_unchecked(level, images)
}

/// Right multiplication by a fixed table `g`: for a packed `e`, the packed
/// `e ∘ g` has at vertex `c` the bit of `e` at `g`'s image of `c`.
pub(crate) struct RightMultiplier {
    source: Vec<u32>,
}

impl RightMultiplier {
    pub(crate) fn new(g: &TransformTable) -> Self {
        let k = g.level();
        let mut source = vec![0u32; vertex_count(k)];
        for depth in 1..=k {
            let shift = k - depth;
            let base = (1u32 << depth) - 1;
            for prefix in 0..(1u32 << depth) {
                let image = g.image(prefix << shift) >> shift;
                source[(base + prefix) as usize] = base + image;
            }
        }
        Self { source }
    }

    pub(crate) fn apply(&self, e: &[u64], out: &mut [u64]) {
        out.fill(0);
        for (word_idx, chunk) in self.source.chunks(64).enumerate() {
            let mut acc = 0u64;
            for (bit, &src) in chunk.iter().enumerate() {
                acc |= get(e, src as usize) << bit;
            }
            out[word_idx] = acc;
        }
        // The root has no incoming edge.
        out[0] &= !1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mealy::MealyAutomaton;

    #[test]
    fn pack_unpack_round_trip() {
        let i2 = MealyAutomaton::i2();
        for k in 0..=8 {
            for q in 0..2 {
                let t = TransformTable::from_automaton(&i2, q, k).unwrap();
                let mut bits = vec![0; word_count(k)];
                pack(&t, &mut bits);
                assert_eq!(unpack(k, &bits), t);
            }
        }
    }

    #[test]
    fn right_multiplication_matches_compose() {
        let i2 = MealyAutomaton::i2();
        let k = 7;
        let f0 = TransformTable::from_automaton(&i2, 0, k).unwrap();
        let f1 = TransformTable::from_automaton(&i2, 1, k).unwrap();
        let e = f1.compose(&f0).unwrap().compose(&f1).unwrap();
        let mut packed = vec![0; word_count(k)];
        pack(&e, &mut packed);
        let mut out = vec![0; word_count(k)];
        for g in [&f0, &f1] {
            RightMultiplier::new(g).apply(&packed, &mut out);
            assert_eq!(unpack(k, &out), e.compose(g).unwrap());
        }
    }
}
