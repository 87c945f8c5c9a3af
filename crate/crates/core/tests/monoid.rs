mod common;

use std::collections::HashSet;

use common::{all_words, closure_size, fixture, seeded_nfa};
use proptest::prelude::*;
use regsep::automata::{determinize, parse_nfa, Dfa};
use regsep::monoid::*;
use regsep::{word, Error, Symbol, Word};

fn minimal(name: &str) -> Dfa {
    determinize(&fixture(name)).minimize()
}

/// Oracle: distinct transformations of all words up to `len`, computed by
/// running the DFA from every state.
fn brute_size(d: &Dfa, len: usize) -> usize {
    let words = all_words(d.alphabet(), len);
    let maps: HashSet<Vec<usize>> = words
        .iter()
        .map(|w| {
            (0..d.num_states())
                .map(|q| {
                    w.iter().fold(q, |s, a| d.next(s, d.letter(a).unwrap()).unwrap())
                })
                .collect()
        })
        .collect();
    maps.len()
}

fn check_laws(m: &FiniteMonoid) {
    let t = m.table();
    let e = m.identity();
    for x in 0..m.size() {
        assert_eq!(t[e][x], x);
        assert_eq!(t[x][e], x);
        for y in 0..m.size() {
            for z in 0..m.size() {
                assert_eq!(t[t[x][y]][z], t[x][t[y][z]]);
            }
        }
    }
}

#[test]
fn a_star_over_ab() {
    let d = minimal("a_star.json");
    assert_eq!(d.alphabet(), word("ab").as_slice());
    let m = transition_monoid(&d).unwrap();
    assert_eq!(m.size(), 2);
    assert_eq!(brute_size(&d, 4), 2);
    assert_eq!(m.accepting().collect::<Vec<_>>(), vec![m.identity()]);
    check_laws(&m);
}

#[test]
fn ab_star_has_six_elements() {
    let d = minimal("ab_star.json");
    let m = transition_monoid(&d).unwrap();
    assert_eq!(m.size(), 6);
    assert_eq!(brute_size(&d, 6), 6);
    check_laws(&m);
    for w in all_words(d.alphabet(), 8) {
        assert_eq!(m.is_accepting(evaluate(&m, &w).unwrap()), d.accepts(&w));
    }
    assert!(m.is_accepting(evaluate(&m, &word("ab")).unwrap()));
    assert!(!m.is_accepting(evaluate(&m, &word("a")).unwrap()));
    assert_eq!(evaluate(&m, &[]).unwrap(), m.identity());
}

#[test]
fn universal_language_has_trivial_monoid() {
    let all = parse_nfa(
        r#"{"alphabet":["a","b"],"states":["s"],"initial":["s"],"final":["s"],
            "transitions":[["s","a","s"],["s","b","s"]]}"#,
    )
    .unwrap();
    let m = syntactic_monoid(&all).unwrap();
    assert_eq!(m.size(), 1);
}

#[test]
fn errors() {
    let partial = regsep::automata::Dfa::from_nfa(&fixture("ab_star.json")).unwrap();
    assert!(!partial.is_complete());
    assert!(matches!(transition_monoid(&partial), Err(Error::IncompleteDfa)));
    let m = transition_monoid(&minimal("ab_star.json")).unwrap();
    assert!(matches!(evaluate(&m, &word("abz")), Err(Error::UnknownSymbol(_))));
}

#[test]
fn json_dump_has_the_table() {
    let m = transition_monoid(&minimal("a_star.json")).unwrap();
    let v = serde_json::to_value(&m).unwrap();
    assert_eq!(v["size"], 2);
    assert_eq!(v["table"].as_array().unwrap().len(), 2);
    assert_eq!(v["letter_image"]["a"], 0);
    assert_eq!(v["accepting"], serde_json::json!([0]));
}

#[test]
fn ul_kappa_bound_values() {
    assert_eq!(ul_kappa_bound(1, 1, 1).to_string(), "12");
    assert_eq!(ul_kappa_bound(2, 3, 2).to_string(), "117");
    assert_eq!(ul_kappa_bound(6, 6, 2).to_string(), "657");
}

fn words_over(alphabet: Vec<Symbol>, max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(proptest::sample::select(alphabet), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monoids_recognize_and_obey_the_laws(seed in any::<u64>()) {
        let a = seeded_nfa(seed, 4, 2);
        let d = determinize(&a).minimize();
        let m = transition_monoid(&d).unwrap();
        check_laws(&m);
        prop_assert_eq!(m.size(), closure_size(&d));
        for w in all_words(a.alphabet(), 8) {
            prop_assert_eq!(m.is_accepting(evaluate(&m, &w).unwrap()), a.accepts(&w));
        }
    }

    #[test]
    fn evaluation_is_a_morphism(seed in any::<u64>(), u in words_over(word("ab"), 8), v in words_over(word("ab"), 8)) {
        let d = determinize(&seeded_nfa(seed, 4, 2)).minimize();
        let m = transition_monoid(&d).unwrap();
        let uv: Word = u.iter().chain(&v).cloned().collect();
        prop_assert_eq!(
            evaluate(&m, &uv).unwrap(),
            m.mult(evaluate(&m, &u).unwrap(), evaluate(&m, &v).unwrap())
        );
    }
}
