use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A letter of an alphabet, identified by its (nonempty) name.
///
/// Symbols order lexicographically by name. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

/// A finite sequence of symbols.
pub type Word = Vec<Symbol>;

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        let mut buf = [0u8; 4];
        Symbol::new(c.encode_utf8(&mut buf))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if s.is_empty() {
            return Err(serde::de::Error::custom("symbol names must be nonempty"));
        }
        Ok(Symbol::new(&s))
    }
}

/// Splits `s` into a word with one symbol per character.
pub fn word(s: &str) -> Word {
    s.chars().map(Symbol::from).collect()
}

/// Renders a word for display: plain concatenation when every symbol is a
/// single character, `·`-separated otherwise. The empty word renders as `ε`.
pub fn render_word(w: &[Symbol]) -> String {
    if w.is_empty() {
        return "ε".to_string();
    }
    if w.iter().all(|s| s.as_str().chars().count() == 1) {
        w.iter().map(Symbol::as_str).collect()
    } else {
        w.iter().map(Symbol::as_str).collect::<Vec<_>>().join("·")
    }
}

/// The set of symbols occurring in `w`, in order of first occurrence.
pub fn alphabet_of(w: &[Symbol]) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = Vec::new();
    for s in w {
        if !out.contains(s) {
            out.push(s.clone());
        }
    }
    out
}
