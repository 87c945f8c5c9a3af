//! Dense bit encoding of piece sets over an indexed alphabet, used by the
//! abstraction searches. A piece `u` of length `l` over `m` letters has
//! index `offset[l] + value(u)` where `value` reads `u` in base `m`.

use std::collections::BTreeSet;

use crate::automata::Letter;
use crate::error::{Error, Result};
use crate::pieces::PieceSet;
use crate::symbol::Symbol;

const MAX_BITS: u128 = 1 << 22;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct PieceBits(Box<[u64]>);

#[derive(Debug)]
pub(crate) struct PieceSpace {
    m: usize,
    kappa: usize,
    /// `offsets[l]` is the first index of pieces of length `l`, for
    /// `1 <= l <= kappa + 1`.
    offsets: Vec<usize>,
}

impl PieceSpace {
    pub fn new(m: usize, kappa: usize) -> Result<Self> {
        let mut offsets = vec![0, 0];
        let mut total: u128 = 0;
        let mut layer: u128 = 1;
        for _ in 1..=kappa {
            layer = layer.saturating_mul(m as u128);
            total = total.saturating_add(layer);
            if total > MAX_BITS {
                return Err(Error::PieceSpaceTooLarge {
                    alphabet: m,
                    kappa,
                    bits: total,
                });
            }
            offsets.push(total as usize);
        }
        Ok(PieceSpace { m, kappa, offsets })
    }

    fn bits(&self) -> usize {
        self.offsets[self.kappa + 1]
    }

    pub fn empty(&self) -> PieceBits {
        PieceBits(vec![0u64; self.bits().div_ceil(64)].into_boxed_slice())
    }

    #[cfg(test)]
    fn get(s: &PieceBits, i: usize) -> bool {
        s.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn set(s: &mut PieceBits, i: usize) {
        s.0[i / 64] |= 1 << (i % 64);
    }

    /// Incremental rule on the bit encoding.
    pub fn extend(&self, s: &PieceBits, a: Letter) -> PieceBits {
        let mut out = s.clone();
        if self.kappa == 0 {
            return out;
        }
        Self::set(&mut out, self.offsets[1] + a);
        for l in 1..self.kappa {
            let (lo, hi) = (self.offsets[l], self.offsets[l + 1]);
            for i in iter_range(s, lo, hi) {
                Self::set(&mut out, hi + (i - lo) * self.m + a);
            }
        }
        out
    }

    pub fn decode(&self, s: &PieceBits, alphabet: &[Symbol]) -> PieceSet<Symbol> {
        let mut pieces = BTreeSet::new();
        for l in 1..=self.kappa {
            let (lo, hi) = (self.offsets[l], self.offsets[l + 1]);
            for i in iter_range(s, lo, hi) {
                let mut v = i - lo;
                let mut piece = vec![alphabet[0].clone(); l];
                for slot in piece.iter_mut().rev() {
                    *slot = alphabet[v % self.m].clone();
                    v /= self.m;
                }
                pieces.insert(piece);
            }
        }
        PieceSet::from_pieces(self.kappa, pieces)
    }

    #[cfg(test)]
    pub fn contains(&self, s: &PieceBits, piece: &[Letter]) -> bool {
        if piece.is_empty() {
            return true;
        }
        let v = piece.iter().fold(0, |acc, &a| acc * self.m + a);
        Self::get(s, self.offsets[piece.len()] + v)
    }
}

fn iter_range(s: &PieceBits, lo: usize, hi: usize) -> impl Iterator<Item = usize> + '_ {
    let first_block = lo / 64;
    let last_block = hi.div_ceil(64);
    (first_block..last_block).flat_map(move |b| {
        let mut block = s.0[b];
        std::iter::from_fn(move || {
            while block != 0 {
                let t = block.trailing_zeros() as usize;
                block &= block - 1;
                let i = b * 64 + t;
                if i >= lo && i < hi {
                    return Some(i);
                }
            }
            None
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pieces::pieces_up_to;
    use crate::symbol::word;

    #[test]
    fn bit_encoding_matches_explicit_sets() {
        let alphabet = word("abc");
        for kappa in 0..4 {
            let space = PieceSpace::new(3, kappa).unwrap();
            for w in ["", "a", "aca", "bbaccba", "abcabc", "ccc"] {
                let mut s = space.empty();
                for ch in w.chars() {
                    s = space.extend(&s, (ch as u8 - b'a') as usize);
                }
                assert_eq!(space.decode(&s, &alphabet), pieces_up_to(&word(w), kappa), "{w} {kappa}");
                assert!(space.contains(&s, &[]));
            }
        }
    }

    #[test]
    fn oversized_space_is_rejected() {
        assert!(matches!(
            PieceSpace::new(30, 6),
            Err(Error::PieceSpaceTooLarge { .. })
        ));
    }
}
