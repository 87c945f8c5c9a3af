#![allow(dead_code)]

use std::collections::HashSet;

use regsep::automata::{parse_nfa, Dfa, Nfa};
use regsep::template::{Template, TemplateItem};
use regsep::random::{letters, random_nfa, rng};
use regsep::{Symbol, Word};

pub fn nested_pair() -> (Nfa, Nfa) {
    (
        parse_nfa(include_str!("../../fixtures/nested_a1.json")).unwrap(),
        parse_nfa(include_str!("../../fixtures/nested_a2.json")).unwrap(),
    )
}

pub fn fixture(name: &str) -> Nfa {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_nfa(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Every word over `alphabet` of length at most `max_len`, shortlex.
pub fn all_words(alphabet: &[Symbol], max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in alphabet {
                let mut v: Word = w.clone();
                v.push(s.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Random automaton from a seed: up to `max_states` states over the first
/// `alphabet` letters.
pub fn seeded_nfa(seed: u64, max_states: usize, alphabet: usize) -> Nfa {
    let mut r = rng(seed);
    use rand::Rng;
    let n = r.gen_range(1..=max_states);
    let density = r.gen_range(0.1..0.5);
    random_nfa(&mut r, n, &letters(alphabet), density, 0.4)
}

/// Every template of length `len` over `{a, b}`.
pub fn templates_over_ab(len: usize) -> Vec<Template> {
    let items = [
        TemplateItem::Letter('a'.into()),
        TemplateItem::Letter('b'.into()),
        TemplateItem::set(['a']),
        TemplateItem::set(['b']),
        TemplateItem::set(['a', 'b']),
    ];
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<TemplateItem>| {
                items.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|v| Template::new(v).unwrap()).collect()
}

/// Oracle: transformations of words of length `≤ n` for growing `n`, until
/// a length adds nothing new.
pub fn closure_size(d: &Dfa) -> usize {
    let mut seen: HashSet<Vec<usize>> = HashSet::from([(0..d.num_states()).collect()]);
    let mut layer: Vec<Vec<usize>> = seen.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for f in &layer {
            for l in 0..d.alphabet().len() {
                let g: Vec<usize> = f.iter().map(|&q| d.next(q, l).unwrap()).collect();
                if seen.insert(g.clone()) {
                    next.push(g);
                }
            }
        }
        layer = next;
    }
    seen.len()
}
