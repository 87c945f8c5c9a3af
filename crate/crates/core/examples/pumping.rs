//! Turn a non-separability witness into word pairs that no PT[κ] language
//! can tell apart.

use regsep::automata::parse_nfa;
use regsep::pieces::kpeq;
use regsep::pt::{decide_pt_separable, pump_witness};
use regsep::symbol::render_word;

fn main() -> regsep::Result<()> {
    let a1 = parse_nfa(include_str!("../fixtures/nested_a1.json"))?;
    let a2 = parse_nfa(include_str!("../fixtures/nested_a2.json"))?;
    let verdict = decide_pt_separable(&a1, &a2);
    let w = verdict.witness().expect("the pair is not separable");
    for kappa in 1..=4 {
        let (w1, w2) = pump_witness(w, kappa)?;
        println!(
            "κ={kappa}: {} ∈ L1 {}, {} ∈ L2 {}, ~κ {}",
            render_word(&w1),
            a1.accepts(&w1),
            render_word(&w2),
            a2.accepts(&w2),
            kpeq(&w1, &w2, kappa)
        );
    }
    Ok(())
}
