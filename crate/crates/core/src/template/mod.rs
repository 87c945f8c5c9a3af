//! ℓ-templates, their p-implementations, and the reduction of arbitrary
//! words to short unambiguous templates.

mod implementation;
mod incompatible;
mod reduce;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbol::Symbol;

pub use implementation::{is_p_implementation, Implementation};
pub use incompatible::{incompatible_piece_exists, template_piece};
pub use reduce::{detectability_kappa, ramsey_template_bound, reduce_to_short_template};

/// A template item: a single letter, or a nonempty set of letters. Sets
/// read their letters in symbol order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TemplateItem {
    Letter(Symbol),
    Set(BTreeSet<Symbol>),
}

impl TemplateItem {
    pub fn set<I: IntoIterator<Item = S>, S: Into<Symbol>>(letters: I) -> Self {
        TemplateItem::Set(letters.into_iter().map(Into::into).collect())
    }
}

/// A sequence of template items.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<TemplateItem>", into = "Vec<TemplateItem>")]
pub struct Template {
    items: Vec<TemplateItem>,
}

impl Template {
    /// Fails on an empty set item.
    pub fn new(items: Vec<TemplateItem>) -> Result<Self> {
        if items.iter().any(|t| matches!(t, TemplateItem::Set(b) if b.is_empty())) {
            return Err(Error::Schema("template set items must be nonempty".into()));
        }
        Ok(Template { items })
    }

    /// The letter-by-letter template of a word.
    pub fn of_word(w: &[Symbol]) -> Self {
        Template {
            items: w.iter().cloned().map(TemplateItem::Letter).collect(),
        }
    }

    pub fn items(&self) -> &[TemplateItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl TryFrom<Vec<TemplateItem>> for Template {
    type Error = Error;

    fn try_from(items: Vec<TemplateItem>) -> Result<Self> {
        Template::new(items)
    }
}

impl From<Template> for Vec<TemplateItem> {
    fn from(t: Template) -> Self {
        t.items
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match item {
                TemplateItem::Letter(a) => write!(f, "{a}")?,
                TemplateItem::Set(b) => {
                    let parts: Vec<&str> = b.iter().map(Symbol::as_str).collect();
                    write!(f, "{{{}}}", parts.join(","))?
                }
            }
        }
        Ok(())
    }
}

/// Parses the comma-separated text form, e.g. `a,{b,c},d,{a}`.
impl FromStr for Template {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |position: usize, message: &str| Error::Parse {
            position,
            message: message.into(),
        };
        let mut items = Vec::new();
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut i = 0;
        let name = |i: &mut usize| {
            let start = *i;
            while *i < chars.len() && !matches!(chars[*i].1, ',' | '{' | '}') {
                *i += 1;
            }
            chars[start..*i].iter().map(|(_, c)| c).collect::<String>()
        };
        while i < chars.len() {
            if chars[i].1 == '{' {
                i += 1;
                let mut set = BTreeSet::new();
                loop {
                    let pos = chars.get(i).map_or(s.len(), |c| c.0);
                    let n = name(&mut i);
                    if n.is_empty() {
                        return Err(err(pos, "expected a symbol"));
                    }
                    set.insert(Symbol::from(n.as_str()));
                    match chars.get(i).map(|c| c.1) {
                        Some(',') => i += 1,
                        Some('}') => {
                            i += 1;
                            break;
                        }
                        _ => return Err(err(pos, "unterminated set")),
                    }
                }
                items.push(TemplateItem::Set(set));
            } else {
                let pos = chars[i].0;
                let n = name(&mut i);
                if n.is_empty() {
                    return Err(err(pos, "expected a symbol or a set"));
                }
                items.push(TemplateItem::Letter(Symbol::from(n.as_str())));
            }
            match chars.get(i).map(|c| c.1) {
                None => break,
                Some(',') if i + 1 < chars.len() => i += 1,
                Some(_) => return Err(err(chars[i].0, "expected `,` between items")),
            }
        }
        Template::new(items)
    }
}

/// No adjacent pair of items can trade letters: two letters always pass,
/// two sets must be ⊆-incomparable, a letter must lie outside an adjacent
/// set.
pub fn is_unambiguous_template(t: &Template) -> bool {
    t.items.windows(2).all(|pair| match (&pair[0], &pair[1]) {
        (TemplateItem::Letter(_), TemplateItem::Letter(_)) => true,
        (TemplateItem::Set(b), TemplateItem::Set(c)) => !b.is_subset(c) && !c.is_subset(b),
        (TemplateItem::Set(b), TemplateItem::Letter(a))
        | (TemplateItem::Letter(a), TemplateItem::Set(b)) => !b.contains(a),
    })
}
