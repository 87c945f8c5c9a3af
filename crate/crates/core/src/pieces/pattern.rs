use serde::Serialize;

use crate::symbol::Symbol;

/// Power of `w` as a `B`-pattern, `B = {b1 < … < br}` given in order: the
/// largest `p` with `w ∈ (B*b1B*…B*brB*)^p`. Zero when `w` uses a letter
/// outside `B` or when `order` is empty.
pub fn pattern_power<L: PartialEq>(w: &[L], order: &[L]) -> usize {
    if order.is_empty() || w.iter().any(|x| !order.contains(x)) {
        return 0;
    }
    // greedy earliest embedding of (b1…br)^p as a subsequence
    let mut matched = 0;
    for x in w {
        if *x == order[matched % order.len()] {
            matched += 1;
        }
    }
    matched / order.len()
}

/// The parameters `(B, p)` of a `p`-`B`-pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternQuery {
    /// Ordered, nonempty.
    pub b: Vec<Symbol>,
    pub p: usize,
}

impl PatternQuery {
    /// True iff `w ∈ (B*b1B*…B*brB*)^p`.
    pub fn matches(&self, w: &[Symbol]) -> bool {
        w.iter().all(|x| self.b.contains(x)) && pattern_power(w, &self.b) >= self.p
    }
}

/// Greedy decomposition `w = Π_{i≤l} (w_i · a_{((i−1) mod m)+1}) · w_{l+1}`
/// where each `w_i` avoids its target letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KDecomposition<L = Symbol> {
    pub factors: Vec<Vec<L>>,
    pub length: usize,
    pub power: usize,
    pub tail: Vec<L>,
}

impl<L: Clone> KDecomposition<L> {
    /// Reassembles the decomposed word.
    pub fn reconstruct(&self, order: &[L]) -> Vec<L> {
        let mut out = Vec::new();
        for (i, f) in self.factors.iter().enumerate() {
            out.extend(f.iter().cloned());
            out.push(order[i % order.len()].clone());
        }
        out.extend(self.tail.iter().cloned());
        out
    }
}

/// Computes the greedy decomposition of `w` along `order`. Each factor is
/// the longest prefix of the remainder avoiding the current target letter;
/// the scan stops when the target no longer occurs. `power = length / m`.
pub fn k_decomposition<L: PartialEq + Clone>(w: &[L], order: &[L]) -> KDecomposition<L> {
    let mut factors = Vec::new();
    let mut rest = w;
    if !order.is_empty() {
        loop {
            let target = &order[factors.len() % order.len()];
            match rest.iter().position(|x| x == target) {
                Some(i) => {
                    factors.push(rest[..i].to_vec());
                    rest = &rest[i + 1..];
                }
                None => break,
            }
        }
    }
    let length = factors.len();
    KDecomposition {
        factors,
        length,
        power: if order.is_empty() { 0 } else { length / order.len() },
        tail: rest.to_vec(),
    }
}
