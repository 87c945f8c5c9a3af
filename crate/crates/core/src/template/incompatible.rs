use crate::pieces::is_piece;
use crate::symbol::{alphabet_of, Symbol, Word};
use crate::template::{Template, TemplateItem};

/// `v_{T,p}`: letters as themselves, a set `{b1<…<bn}` as `(b1⋯bn)^p`.
pub fn template_piece(t: &Template, p: usize) -> Vec<Word> {
    t.items()
        .iter()
        .map(|item| match item {
            TemplateItem::Letter(a) => vec![a.clone()],
            TemplateItem::Set(b) => (0..p).flat_map(|_| b.iter().cloned()).collect(),
        })
        .collect()
}

/// Searches for a piece of `w` of the form `v1⋯vi · u · v(i+1)⋯vℓ` over
/// `v_{T,1}`, with `|u| ∈ {1, 2}`, where the first letter of `u` escapes
/// `t_i` and its last letter escapes `t_(i+1)` whenever those are sets.
/// The empty template has no such piece.
pub fn incompatible_piece_exists(w: &[Symbol], t: &Template) -> bool {
    if t.is_empty() {
        return false;
    }
    let blocks = template_piece(t, 1);
    let letters = alphabet_of(w);
    let mut inserts: Vec<Word> = letters.iter().map(|a| vec![a.clone()]).collect();
    for a in &letters {
        for b in &letters {
            inserts.push(vec![a.clone(), b.clone()]);
        }
    }
    let escapes = |item: Option<&TemplateItem>, a: &Symbol| match item {
        Some(TemplateItem::Set(b)) => !b.contains(a),
        _ => true,
    };
    let items = t.items();
    (0..=items.len()).any(|i| {
        let before = i.checked_sub(1).map(|k| &items[k]);
        inserts.iter().any(|u| {
            if !escapes(before, &u[0]) || !escapes(items.get(i), &u[u.len() - 1]) {
                return false;
            }
            let v: Word = blocks[..i]
                .iter()
                .flatten()
                .chain(u)
                .chain(blocks[i..].iter().flatten())
                .cloned()
                .collect();
            is_piece(&v, w)
        })
    })
}
