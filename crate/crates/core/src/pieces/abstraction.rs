use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::automata::{align, Dfa, Letter, Nfa, StateId};
use crate::error::{Error, Result};
use crate::pieces::space::{PieceBits, PieceSpace};
use crate::pieces::PieceSet;
use crate::symbol::{render_word, Symbol};

/// Default cap on explored `(state, piece set)` pairs.
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Interns piece sets of one space and memoizes their extensions.
struct Explorer<'a> {
    space: &'a PieceSpace,
    ids: HashMap<PieceBits, u32>,
    sets: Vec<PieceBits>,
    ext: HashMap<(u32, Letter), u32>,
}

impl<'a> Explorer<'a> {
    fn new(space: &'a PieceSpace) -> Self {
        let mut ex = Explorer {
            space,
            ids: HashMap::new(),
            sets: Vec::new(),
            ext: HashMap::new(),
        };
        ex.intern(space.empty());
        ex
    }

    fn intern(&mut self, s: PieceBits) -> u32 {
        if let Some(&id) = self.ids.get(&s) {
            return id;
        }
        let id = self.sets.len() as u32;
        self.sets.push(s.clone());
        self.ids.insert(s, id);
        id
    }

    fn step(&mut self, id: u32, a: Letter) -> u32 {
        if let Some(&next) = self.ext.get(&(id, a)) {
            return next;
        }
        let s = self.space.extend(&self.sets[id as usize], a);
        let next = self.intern(s);
        self.ext.insert((id, a), next);
        next
    }

    fn decode(&self, id: u32, alphabet: &[Symbol]) -> PieceSet {
        self.space.decode(&self.sets[id as usize], alphabet)
    }
}

struct Exploration {
    finals: BTreeSet<u32>,
    explored: usize,
    hit: Option<u32>,
}

fn check_budget(count: usize, budget: usize) -> Result<()> {
    if budget > 0 && count > budget {
        Err(Error::BudgetExceeded(count))
    } else {
        Ok(())
    }
}

/// Forward search over reachable `(state, piece set)` pairs. Stops at the
/// first accepting pair whose set lies in `stop`.
fn explore(
    nfa: &Nfa,
    ex: &mut Explorer,
    budget: usize,
    stop: Option<&BTreeSet<u32>>,
) -> Result<Exploration> {
    let mut seen: HashSet<(StateId, u32)> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut finals = BTreeSet::new();
    for &q in nfa.initial() {
        if seen.insert((q, 0)) {
            queue.push_back((q, 0));
        }
    }
    check_budget(seen.len(), budget)?;
    while let Some((q, id)) = queue.pop_front() {
        if nfa.is_accepting(q) {
            finals.insert(id);
            if stop.is_some_and(|s| s.contains(&id)) {
                return Ok(Exploration {
                    finals,
                    explored: seen.len(),
                    hit: Some(id),
                });
            }
        }
        for &(a, r) in nfa.successors(q) {
            let next = ex.step(id, a);
            if seen.insert((r, next)) {
                check_budget(seen.len(), budget)?;
                queue.push_back((r, next));
            }
        }
    }
    Ok(Exploration {
        finals,
        explored: seen.len(),
        hit: None,
    })
}

/// The κ-abstraction of a language: the piece sets of its words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbstractionSet {
    pub kappa: usize,
    pub sets: BTreeSet<PieceSet>,
    /// Number of `(state, piece set)` pairs visited.
    pub explored: usize,
}

/// `{ pieces_up_to(w, κ) : w ∈ L(a) }`. A `budget` of 0 means unbounded.
pub fn abstraction_set(a: &Nfa, kappa: usize, budget: usize) -> Result<AbstractionSet> {
    let space = PieceSpace::new(a.alphabet().len(), kappa)?;
    let mut ex = Explorer::new(&space);
    let run = explore(a, &mut ex, budget, None)?;
    Ok(AbstractionSet {
        kappa,
        sets: run.finals.iter().map(|&id| ex.decode(id, a.alphabet())).collect(),
        explored: run.explored,
    })
}

/// True iff the κ-abstractions of both languages are disjoint, i.e. some
/// union of `~κ`-classes separates them.
pub fn pt_separable_at(a1: &Nfa, a2: &Nfa, kappa: usize, budget: usize) -> Result<bool> {
    let (b1, b2) = align(a1, a2);
    let space = PieceSpace::new(b1.alphabet().len(), kappa)?;
    let mut ex = Explorer::new(&space);
    let first = explore(&b1, &mut ex, budget, None)?;
    if first.finals.is_empty() {
        return Ok(true);
    }
    let second = explore(&b2, &mut ex, budget, Some(&first.finals))?;
    Ok(second.hit.is_none())
}

/// Smallest `κ ≤ kappa_max` at which the languages are separable.
pub fn min_kappa(a1: &Nfa, a2: &Nfa, kappa_max: usize, budget: usize) -> Result<Option<usize>> {
    for kappa in 0..=kappa_max {
        if pt_separable_at(a1, a2, kappa, budget)? {
            return Ok(Some(kappa));
        }
    }
    Ok(None)
}

/// A κ-piecewise testable language containing a given language.
#[derive(Clone, Debug)]
pub struct Separator {
    pub dfa: Dfa,
    pub kappa: usize,
    /// Size of the κ-abstraction that the DFA accepts.
    pub num_abstractions: usize,
}

/// The union of the `~κ`-classes meeting `L(a1)`, as a complete DFA over
/// `alphabet` extended by any letters of `a1` it lacks. States are the
/// reachable piece sets.
pub fn separator(a1: &Nfa, alphabet: &[Symbol], kappa: usize, budget: usize) -> Result<Separator> {
    let mut letters = alphabet.to_vec();
    for s in a1.alphabet() {
        if !letters.contains(s) {
            letters.push(s.clone());
        }
    }
    let a = a1.over_alphabet(&letters);
    let space = PieceSpace::new(letters.len(), kappa)?;
    let mut ex = Explorer::new(&space);
    let finals = explore(&a, &mut ex, budget, None)?.finals;

    let mut index: HashMap<u32, StateId> = HashMap::from([(0, 0)]);
    let mut order = vec![0u32];
    let mut delta: Vec<Vec<Option<StateId>>> = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let id = order[i];
        let mut row = Vec::with_capacity(letters.len());
        for l in 0..letters.len() {
            let next = ex.step(id, l);
            let q = *index.entry(next).or_insert_with(|| {
                order.push(next);
                order.len() - 1
            });
            check_budget(order.len(), budget)?;
            row.push(Some(q));
        }
        delta.push(row);
        i += 1;
    }
    let names = order
        .iter()
        .map(|&id| {
            let set = ex.decode(id, &letters);
            let parts: Vec<String> = set.pieces().iter().map(|p| render_word(p)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let accepting = order.iter().map(|id| finals.contains(id)).collect();
    Ok(Separator {
        dfa: Dfa::new(letters, names, 0, accepting, delta)?,
        kappa,
        num_abstractions: finals.len(),
    })
}

/// [`separator`] over the alphabet of `a1`.
pub fn separator_dfa(a1: &Nfa, kappa: usize, budget: usize) -> Result<Dfa> {
    Ok(separator(a1, a1.alphabet(), kappa, budget)?.dfa)
}
