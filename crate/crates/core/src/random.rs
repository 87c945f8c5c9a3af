//! Seeded random automata for self-checks and property tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automata::{Nfa, Transition};
use crate::symbol::Symbol;

/// Alphabet `a, b, c, …` of the given size (up to 26 letters, then `x26…`).
pub fn letters(size: usize) -> Vec<Symbol> {
    (0..size)
        .map(|i| {
            if i < 26 {
                Symbol::from((b'a' + i as u8) as char)
            } else {
                Symbol::new(&format!("x{i}"))
            }
        })
        .collect()
}

/// A random NFA with initial state `s0`, each transition present with
/// probability `edge_probability` and each state final with probability
/// `final_probability`.
pub fn random_nfa<R: Rng>(
    rng: &mut R,
    num_states: usize,
    alphabet: &[Symbol],
    edge_probability: f64,
    final_probability: f64,
) -> Nfa {
    let mut ts = Vec::new();
    for src in 0..num_states {
        for letter in 0..alphabet.len() {
            for dst in 0..num_states {
                if rng.gen_bool(edge_probability) {
                    ts.push(Transition { src, letter, dst });
                }
            }
        }
    }
    let accepting: Vec<usize> = (0..num_states)
        .filter(|_| rng.gen_bool(final_probability))
        .collect();
    Nfa::from_parts(
        alphabet.to_vec(),
        (0..num_states).map(|i| format!("s{i}")).collect(),
        [0],
        accepting,
        ts,
    )
    .expect("generated automaton is well-formed")
}

/// Reproducible corpus of NFA pairs over a common alphabet with
/// `1..=max_states` states each and `1..=max_alphabet` letters.
pub fn corpus(seed: u64, count: usize, max_states: usize, max_alphabet: usize) -> Vec<(Nfa, Nfa)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let alphabet = letters(rng.gen_range(1..=max_alphabet));
            let density = rng.gen_range(0.1..0.45);
            let n1 = rng.gen_range(1..=max_states);
            let n2 = rng.gen_range(1..=max_states);
            let a1 = random_nfa(&mut rng, n1, &alphabet, density / alphabet.len() as f64 * 2.0, 0.4);
            let a2 = random_nfa(&mut rng, n2, &alphabet, density / alphabet.len() as f64 * 2.0, 0.4);
            (a1, a2)
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
