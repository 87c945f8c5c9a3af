use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::symbol::Symbol;
use crate::ul::{Product, UnambiguousProduct};

/// Self-product test on an encoded product: `masks[i]` is `Bi` over
/// letter positions, `letters[i]` is `a(i+1)`.
pub(crate) fn unambiguous(masks: &[u64], letters: &[usize], m: usize) -> bool {
    let k = letters.len();
    if k == 0 {
        return true;
    }
    let side = k + 1;
    let moves = |i: usize, c: usize| {
        let stay = (masks[i] >> c & 1 == 1).then_some(i);
        let go = (i < k && letters[i] == c).then_some(i + 1);
        stay.into_iter().chain(go)
    };
    let mut fwd = vec![false; side * side];
    let mut stack = vec![(0, 0)];
    fwd[0] = true;
    // reversed edges of the square, gathered during the forward pass
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); side * side];
    let mut all_pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..side {
        for j in 0..side {
            all_pairs.push((i, j));
        }
    }
    for &(i, j) in &all_pairs {
        for c in 0..m {
            for i2 in moves(i, c) {
                for j2 in moves(j, c) {
                    rev[i2 * side + j2].push(i * side + j);
                }
            }
        }
    }
    while let Some((i, j)) = stack.pop() {
        for c in 0..m {
            for i2 in moves(i, c) {
                for j2 in moves(j, c) {
                    if !fwd[i2 * side + j2] {
                        fwd[i2 * side + j2] = true;
                        stack.push((i2, j2));
                    }
                }
            }
        }
    }
    let mut back = vec![false; side * side];
    let last = k * side + k;
    back[last] = true;
    let mut stack = vec![last];
    while let Some(x) = stack.pop() {
        for &y in &rev[x] {
            if !back[y] {
                back[y] = true;
                stack.push(y);
            }
        }
    }
    all_pairs
        .iter()
        .all(|&(i, j)| i == j || !(fwd[i * side + j] && back[i * side + j]))
}

/// Bitmask automaton of one product: bit `i` of a state set means "in
/// block `i`".
#[derive(Clone, Debug)]
struct Encoded {
    masks: Vec<u64>,
    letters: Vec<usize>,
    /// Per letter: blocks looping on it.
    stay: Vec<u64>,
    /// Per letter: blocks leaving on it.
    go: Vec<u64>,
}

impl Encoded {
    fn new(masks: Vec<u64>, letters: Vec<usize>, m: usize) -> Self {
        let mut stay = vec![0u64; m];
        let mut go = vec![0u64; m];
        for c in 0..m {
            for (i, b) in masks.iter().enumerate() {
                if b >> c & 1 == 1 {
                    stay[c] |= 1 << i;
                }
            }
            for (i, &a) in letters.iter().enumerate() {
                if a == c {
                    go[c] |= 1 << i;
                }
            }
        }
        Encoded {
            masks,
            letters,
            stay,
            go,
        }
    }

    fn step(&self, s: u64, c: usize) -> u64 {
        (s & self.stay[c]) | ((s & self.go[c]) << 1)
    }

    fn accepts(&self, s: u64) -> bool {
        s >> self.letters.len() & 1 == 1
    }
}

/// The unambiguous products of size at most `kappa` over a sorted
/// alphabet, in canonical order: by size, then lexicographically on
/// `(B0, a1, B1, …, ak, Bk)` with sets read as bitmasks over letter
/// positions.
#[derive(Clone, Debug)]
pub struct ProductIndex {
    alphabet: Vec<Symbol>,
    kappa: usize,
    products: Vec<Encoded>,
}

/// Number of candidate products of size at most `kappa`.
fn candidate_count(m: usize, kappa: usize) -> u128 {
    let sets = 1u128.checked_shl(m as u32).unwrap_or(u128::MAX);
    let per_letter = sets.saturating_mul(m as u128);
    let mut total: u128 = 0;
    let mut layer = sets;
    for _ in 0..=kappa {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(per_letter);
    }
    total
}

impl ProductIndex {
    /// Enumerates and filters the candidates. Fails when their number
    /// exceeds a nonzero `budget`.
    pub fn new(alphabet: &[Symbol], kappa: usize, budget: usize) -> Result<Self> {
        let mut sorted = alphabet.to_vec();
        sorted.sort();
        sorted.dedup();
        let m = sorted.len();
        let count = candidate_count(m, kappa);
        if m > 63 || kappa > 62 || (budget > 0 && count > budget as u128) {
            return Err(Error::BudgetExceeded(count.min(usize::MAX as u128) as usize));
        }
        let mut products = Vec::new();
        for k in 0..=kappa {
            let mut masks = Vec::with_capacity(k + 1);
            let mut letters = Vec::with_capacity(k);
            extend(&mut masks, &mut letters, k, m, &mut products);
        }
        Ok(ProductIndex {
            alphabet: sorted,
            kappa,
            products,
        })
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn len(&self) -> usize {
        self.products.len()
    }

    pub fn is_empty(&self) -> bool {
        self.products.is_empty()
    }

    pub fn products(&self) -> Vec<UnambiguousProduct> {
        let set = |mask: u64| {
            (0..self.alphabet.len())
                .filter(|c| mask >> c & 1 == 1)
                .map(|c| self.alphabet[c].clone())
                .collect()
        };
        self.products
            .iter()
            .map(|e| {
                UnambiguousProduct(Product {
                    sets: e.masks.iter().map(|&b| set(b)).collect(),
                    letters: e.letters.iter().map(|&a| self.alphabet[a].clone()).collect(),
                })
            })
            .collect()
    }

    pub(crate) fn position(&self, a: &Symbol) -> Option<usize> {
        self.alphabet.binary_search(a).ok()
    }

    pub(crate) fn initial(&self) -> Vec<u64> {
        vec![1; self.products.len()]
    }

    pub(crate) fn step(&self, state: &[u64], c: usize) -> Vec<u64> {
        self.products
            .iter()
            .zip(state)
            .map(|(e, &s)| e.step(s, c))
            .collect()
    }

    pub(crate) fn bits(&self, state: &[u64]) -> UlAbstraction {
        UlAbstraction {
            kappa: self.kappa,
            bits: self
                .products
                .iter()
                .zip(state)
                .enumerate()
                .filter(|(_, (e, &s))| e.accepts(s))
                .map(|(i, _)| i)
                .collect(),
            len: self.products.len(),
        }
    }

    /// Membership of `w` in every product of the index.
    pub fn abstraction(&self, w: &[Symbol]) -> Result<UlAbstraction> {
        let mut state = self.initial();
        for a in w {
            let c = self
                .position(a)
                .ok_or_else(|| Error::UnknownSymbol(a.to_string()))?;
            state = self.step(&state, c);
        }
        Ok(self.bits(&state))
    }
}

/// Depth-first generation in canonical order, pruning ambiguous prefixes
/// (every extension of an ambiguous product is ambiguous).
fn extend(masks: &mut Vec<u64>, letters: &mut Vec<usize>, k: usize, m: usize, out: &mut Vec<Encoded>) {
    for b in 0..1u64 << m {
        masks.push(b);
        if unambiguous(masks, letters, m) {
            if letters.len() == k {
                out.push(Encoded::new(masks.clone(), letters.clone(), m));
            } else {
                for a in 0..m {
                    letters.push(a);
                    extend(masks, letters, k, m, out);
                    letters.pop();
                }
            }
        }
        masks.pop();
    }
}

/// Membership vector of a word over the canonical product enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UlAbstraction {
    pub kappa: usize,
    /// Indices of the products containing the word.
    pub bits: BitSet,
    /// Length of the enumeration.
    pub len: usize,
}

impl UlAbstraction {
    pub fn get(&self, i: usize) -> bool {
        self.bits.contains(i)
    }
}

impl Serialize for UlAbstraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        serializer.serialize_str(&s)
    }
}

/// All unambiguous products of size at most `kappa`, canonical order.
pub fn enumerate_unambiguous_products(
    alphabet: &[Symbol],
    kappa: usize,
    budget: usize,
) -> Result<Vec<UnambiguousProduct>> {
    Ok(ProductIndex::new(alphabet, kappa, budget)?.products())
}

/// Membership of `w` in each unambiguous product of size at most `kappa`
/// over `alphabet`.
pub fn ul_abstraction(w: &[Symbol], alphabet: &[Symbol], kappa: usize, budget: usize) -> Result<UlAbstraction> {
    ProductIndex::new(alphabet, kappa, budget)?.abstraction(w)
}

/// `w1 ≃κ w2`, decided over the letters of both words. Extra letters change
/// neither side: restricting an unambiguous product to fewer letters keeps
/// it unambiguous and preserves membership of these words.
pub fn ul_eq(w1: &[Symbol], w2: &[Symbol], kappa: usize, budget: usize) -> Result<bool> {
    let alphabet: Vec<Symbol> = w1.iter().chain(w2).cloned().collect();
    if alphabet.is_empty() {
        return Ok(true);
    }
    let index = ProductIndex::new(&alphabet, kappa, budget)?;
    Ok(index.abstraction(w1)? == index.abstraction(w2)?)
}
