use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;

use crate::symbol::{alphabet_of, Symbol};
use crate::template::{is_p_implementation, is_unambiguous_template, Template, TemplateItem};

/// `N_A = 2^(2^|A| · |A| · (p|A| + 1))`.
///
/// # Panics
/// When the exponent does not fit in a `u64`.
pub fn ramsey_template_bound(p: usize, alphabet_size: usize) -> BigUint {
    let m = alphabet_size as u64;
    let e = (1u64 << alphabet_size) * m * (p as u64 * m + 1);
    BigUint::one() << e
}

/// `|A| · p · ℓ`.
pub fn detectability_kappa(p: usize, ell: usize, alphabet_size: usize) -> usize {
    alphabet_size * p * ell
}

/// An item together with the factor of the word it covers.
struct Part {
    item: TemplateItem,
    factor: Vec<Symbol>,
}

fn letters(parts: &[Part]) -> BTreeSet<Symbol> {
    parts.iter().flat_map(|x| x.factor.iter().cloned()).collect()
}

/// Finds `i < j` such that parts `i..j` split into at least `need`
/// consecutive groups, each reading exactly the same letter set `B`, and
/// span two parts or more. Greedy extension with the shortest groups
/// finds the longest such chain from a given start and colour, so the
/// search is exact. Returns `(i, j, B)`.
fn find_chain(parts: &[Part], need: usize) -> Option<(usize, usize, BTreeSet<Symbol>)> {
    let n = parts.len();
    for i in 0..n {
        // candidate colours: alphabets of the prefixes of parts i..
        let mut colours: Vec<BTreeSet<Symbol>> = Vec::new();
        for j in i + 1..=n {
            let c = letters(&parts[i..j]);
            if colours.last() != Some(&c) {
                colours.push(c);
            }
        }
        for colour in colours {
            let (mut cur, mut groups) = (i, 0);
            'chain: while cur < n {
                for j in cur + 1..=n {
                    let c = letters(&parts[cur..j]);
                    if c == colour {
                        cur = j;
                        groups += 1;
                        continue 'chain;
                    }
                    if !c.is_subset(&colour) {
                        break;
                    }
                }
                break;
            }
            if groups >= need && cur - i >= 2 {
                return Some((i, cur, colour));
            }
        }
    }
    None
}

fn merge(parts: &mut Vec<Part>, i: usize, j: usize, colour: BTreeSet<Symbol>) {
    let factor = parts[i..j].iter().flat_map(|x| x.factor.clone()).collect();
    parts.splice(
        i..j,
        [Part {
            item: TemplateItem::Set(colour),
            factor,
        }],
    );
}

/// Merges the first ambiguous adjacency: comparable sets become their
/// union, a letter inside a neighbouring set joins it.
fn merge_ambiguity(parts: &mut Vec<Part>) -> bool {
    for i in 0..parts.len().saturating_sub(1) {
        let merged = match (&parts[i].item, &parts[i + 1].item) {
            (TemplateItem::Set(b), TemplateItem::Set(c)) if b.is_subset(c) || c.is_subset(b) => {
                Some(b | c)
            }
            (TemplateItem::Set(b), TemplateItem::Letter(a))
            | (TemplateItem::Letter(a), TemplateItem::Set(b))
                if b.contains(a) =>
            {
                Some(b.clone())
            }
            _ => None,
        };
        if let Some(colour) = merged {
            merge(parts, i, i + 2, colour);
            return true;
        }
    }
    false
}

/// An unambiguous template that `w` p-implements. Starting from the letter
/// template, repeatedly replaces a span that splits into at least
/// `max(1, p·|alph(w)|)` groups with the same letter set `B` by the set
/// item `B`, and merges ambiguous neighbours, until neither applies.
pub fn reduce_to_short_template(w: &[Symbol], p: usize) -> Template {
    let need = (p * alphabet_of(w).len()).max(1);
    let mut parts: Vec<Part> = w
        .iter()
        .map(|a| Part {
            item: TemplateItem::Letter(a.clone()),
            factor: vec![a.clone()],
        })
        .collect();
    loop {
        if merge_ambiguity(&mut parts) {
            continue;
        }
        match find_chain(&parts, need) {
            Some((i, j, colour)) => merge(&mut parts, i, j, colour),
            None => break,
        }
    }
    let t = Template::new(parts.into_iter().map(|x| x.item).collect())
        .expect("merged sets are nonempty");
    debug_assert!(is_unambiguous_template(&t));
    debug_assert!(is_p_implementation(w, &t, p).is_some());
    t
}
