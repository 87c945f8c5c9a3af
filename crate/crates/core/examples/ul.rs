//! Unambiguous products, UL abstractions, and the bounded UL search.

use std::collections::BTreeSet;

use regsep::automata::regex_to_nfa;
use regsep::pieces::DEFAULT_BUDGET;
use regsep::ul::{decide_ul_separable, is_unambiguous_product, Product, ProductIndex};
use regsep::{word, Symbol};

fn set(s: &str) -> BTreeSet<Symbol> {
    s.chars().map(Symbol::from).collect()
}

fn main() -> regsep::Result<()> {
    let p = Product::new(vec![set("b"), set("ab")], word("a"))?;
    println!("{{b}}* a {{a,b}}* unambiguous: {}", is_unambiguous_product(&p));
    let q = Product::new(vec![set("ab"), set("ab")], word("a"))?;
    println!("{{a,b}}* a {{a,b}}* unambiguous: {}", is_unambiguous_product(&q));

    let index = ProductIndex::new(&word("ab"), 1, DEFAULT_BUDGET)?;
    println!("{} unambiguous products of size ≤ 1 over {{a,b}}", index.len());
    println!("abstraction of abba: {}", serde_json::to_string(&index.abstraction(&word("abba"))?)?);

    let d = decide_ul_separable(&regex_to_nfa("(ab)*")?, &regex_to_nfa("(ba)*b")?, 2, DEFAULT_BUDGET)?;
    println!("{}", serde_json::to_string_pretty(&d)?);
    Ok(())
}
