//! Regex front end. Grammar:
//!
//! ```text
//! expr   := term ('|' term)*
//! term   := factor+
//! factor := atom ('*' | '+')?
//! atom   := literal | '(' expr ')' | '()'
//! ```
//!
//! Every character other than `|*+()` is a literal symbol. The automaton is
//! the Glushkov (position) automaton, which has no ε-transitions: state `0`
//! is initial and state `i` stands for the `i`-th literal occurrence.

use crate::automata::nfa::{Nfa, Transition};
use crate::error::{Error, Result};
use crate::symbol::Symbol;

#[derive(Debug)]
enum Ast {
    Epsilon,
    Literal(usize),
    Concat(Vec<Ast>),
    Union(Vec<Ast>),
    Star(Box<Ast>),
    Plus(Box<Ast>),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    positions: &'a mut Vec<char>,
}

impl Parser<'_> {
    fn error<T>(&self, message: &str) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.to_string(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Ast::Union(terms)
        })
    }

    fn term(&mut self) -> Result<Ast> {
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            factors.push(self.factor()?);
        }
        match factors.len() {
            0 => self.error("expected a literal, '(' or '()'"),
            1 => Ok(factors.pop().unwrap()),
            _ => Ok(Ast::Concat(factors)),
        }
    }

    fn factor(&mut self) -> Result<Ast> {
        let atom = self.atom()?;
        Ok(match self.peek() {
            Some('*') => {
                self.pos += 1;
                Ast::Star(Box::new(atom))
            }
            Some('+') => {
                self.pos += 1;
                Ast::Plus(Box::new(atom))
            }
            _ => atom,
        })
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            None => self.error("unexpected end of pattern"),
            Some('(') => {
                self.pos += 1;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(Ast::Epsilon);
                }
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('*') | Some('+') => self.error("repetition operator without operand"),
            Some(')') | Some('|') => self.error("expected a literal, '(' or '()'"),
            Some(c) => {
                self.pos += 1;
                self.positions.push(c);
                Ok(Ast::Literal(self.positions.len()))
            }
        }
    }
}

/// nullable, first, last for a subexpression; follow is accumulated.
struct Glushkov {
    follow: Vec<Vec<usize>>,
}

impl Glushkov {
    fn visit(&mut self, ast: &Ast) -> (bool, Vec<usize>, Vec<usize>) {
        match ast {
            Ast::Epsilon => (true, vec![], vec![]),
            Ast::Literal(p) => (false, vec![*p], vec![*p]),
            Ast::Union(items) => {
                let (mut n, mut f, mut l): (bool, Vec<usize>, Vec<usize>) = (false, vec![], vec![]);
                for it in items {
                    let (n2, f2, l2) = self.visit(it);
                    n |= n2;
                    f.extend(f2);
                    l.extend(l2);
                }
                (n, f, l)
            }
            Ast::Concat(items) => {
                let (mut n, mut f, mut l): (bool, Vec<usize>, Vec<usize>) = (true, vec![], vec![]);
                for it in items {
                    let (n2, f2, l2) = self.visit(it);
                    for &x in &l {
                        self.follow[x].extend(f2.iter().copied());
                    }
                    if n {
                        f.extend(f2.iter().copied());
                    }
                    if n2 {
                        l.extend(l2);
                    } else {
                        l = l2;
                    }
                    n &= n2;
                }
                (n, f, l)
            }
            Ast::Star(inner) | Ast::Plus(inner) => {
                let (n, f, l) = self.visit(inner);
                for &x in &l {
                    self.follow[x].extend(f.iter().copied());
                }
                (n || matches!(ast, Ast::Star(_)), f, l)
            }
        }
    }
}

/// Parses `pattern` and returns its position automaton. The alphabet is the
/// set of literal characters in order of first appearance.
pub fn regex_to_nfa(pattern: &str) -> Result<Nfa> {
    let mut positions = Vec::new();
    let mut parser = Parser {
        chars: pattern.chars().collect(),
        pos: 0,
        positions: &mut positions,
    };
    let ast = parser.expr()?;
    if parser.pos < parser.chars.len() {
        return parser.error("unbalanced ')'");
    }
    let mut g = Glushkov {
        follow: vec![Vec::new(); positions.len() + 1],
    };
    let (nullable, first, last) = g.visit(&ast);

    let mut alphabet: Vec<Symbol> = Vec::new();
    for &c in &positions {
        let s = Symbol::from(c);
        if !alphabet.contains(&s) {
            alphabet.push(s);
        }
    }
    let letter = |p: usize| {
        let s = Symbol::from(positions[p - 1]);
        alphabet.iter().position(|a| *a == s).unwrap()
    };
    let mut ts = Vec::new();
    for &p in &first {
        ts.push(Transition {
            src: 0,
            letter: letter(p),
            dst: p,
        });
    }
    for (x, fs) in g.follow.iter().enumerate() {
        for &p in fs {
            ts.push(Transition {
                src: x,
                letter: letter(p),
                dst: p,
            });
        }
    }
    let mut accepting = last;
    if nullable {
        accepting.push(0);
    }
    let states = (0..=positions.len()).map(|i| i.to_string()).collect();
    Nfa::from_parts(alphabet.clone(), states, [0], accepting, ts)
}
