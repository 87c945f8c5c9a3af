use serde::Serialize;

use crate::pieces::pattern_power;
use crate::symbol::{Symbol, Word};
use crate::template::{Template, TemplateItem};

/// A decomposition `w = w1⋯wℓ` witnessing a p-implementation: letter items
/// match exactly, set items `B` get a factor over `B` with
/// `pattern_power ≥ p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Implementation {
    pub template: Template,
    pub p: usize,
    /// `ℓ + 1` nondecreasing positions from `0` to `|w|`.
    pub cut_points: Vec<usize>,
}

impl Implementation {
    pub fn factors<'w>(&self, w: &'w [Symbol]) -> Vec<&'w [Symbol]> {
        self.cut_points.windows(2).map(|c| &w[c[0]..c[1]]).collect()
    }
}

/// Dynamic programming over `(position, item)`. Among valid
/// decompositions, returns the one whose cut points are lexicographically
/// least.
pub fn is_p_implementation(w: &[Symbol], t: &Template, p: usize) -> Option<Implementation> {
    let n = w.len();
    let items = t.items();
    let l = items.len();
    // ok[k][i]: the suffix w[i..] implements items[k..]
    let mut ok = vec![vec![false; n + 1]; l + 1];
    ok[l][n] = true;
    for k in (0..l).rev() {
        for i in 0..=n {
            ok[k][i] = next_cuts(w, &items[k], p, i).any(|j| ok[k + 1][j]);
        }
    }
    if !ok[0][0] {
        return None;
    }
    let mut cut_points = vec![0];
    let mut i = 0;
    for k in 0..l {
        i = next_cuts(w, &items[k], p, i)
            .find(|&j| ok[k + 1][j])
            .expect("table marks a continuation");
        cut_points.push(i);
    }
    Some(Implementation {
        template: t.clone(),
        p,
        cut_points,
    })
}

/// End positions `j` such that `w[i..j]` implements `item`, increasing.
fn next_cuts<'a>(
    w: &'a [Symbol],
    item: &'a TemplateItem,
    p: usize,
    i: usize,
) -> Box<dyn Iterator<Item = usize> + 'a> {
    match item {
        TemplateItem::Letter(a) => Box::new((i < w.len() && w[i] == *a).then_some(i + 1).into_iter()),
        TemplateItem::Set(b) => {
            let order: Word = b.iter().cloned().collect();
            let inside = w[i..].iter().take_while(|x| b.contains(x)).count();
            Box::new((i..=i + inside).filter(move |&j| pattern_power(&w[i..j], &order) >= p))
        }
    }
}
