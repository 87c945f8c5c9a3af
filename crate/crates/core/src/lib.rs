pub mod automata;
pub mod bitset;
pub mod error;
pub mod symbol;

pub use error::{Error, Result};
pub use symbol::{word, Symbol, Word};
pub mod monoid;
pub mod pieces;
pub mod pt;
pub mod random;
pub mod report;
pub mod template;
pub mod ul;
