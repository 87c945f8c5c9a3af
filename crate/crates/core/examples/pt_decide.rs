//! Polynomial-time PT-separability with a witness when the answer is no.
//!
//! The two automata below have a common loop {a,b} reached after the empty
//! prefix and a second loop {a} reached after reading c.

use regsep::automata::parse_nfa;
use regsep::pt::{decide_pt_separable, verify_witness, PtVerdict};

const A1: &str = include_str!("../fixtures/nested_a1.json");
const A2: &str = include_str!("../fixtures/nested_a2.json");

fn main() -> regsep::Result<()> {
    let (a1, a2) = (parse_nfa(A1)?, parse_nfa(A2)?);
    match decide_pt_separable(&a1, &a2) {
        PtVerdict::Separable => println!("separable"),
        PtVerdict::NotSeparable(w) => {
            println!("not separable");
            println!("  u = {:?}", w.pair.u.iter().map(|u| regsep::symbol::render_word(u)).collect::<Vec<_>>());
            println!("  B = {:?}", w.pair.b);
            println!("  path in A1: {}", w.path1.states().join(" "));
            println!("  path in A2: {}", w.path2.states().join(" "));
            println!("  verified: {}", verify_witness(&w, &a1, &a2));
        }
    }
    let a = regsep::automata::regex_to_nfa("a*")?;
    let b = regsep::automata::regex_to_nfa("bb*")?;
    println!("a* vs bb*: separable = {}", decide_pt_separable(&a, &b).is_separable());
    Ok(())
}
