//! Command drivers behind the `regsep` binary. Each returns a [`Report`]
//! plus the side files it wants written; the binary only does IO.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::automata::{dfa_to_json, parse_nfa, product, regex_to_nfa, to_dot, Nfa};
use crate::error::{Error, Result};
use crate::monoid::{syntactic_monoid, ul_kappa_bound};
use crate::pieces::{kpeq, min_kappa, separator};
use crate::pt::{
    decide_pt_separable, kappa_bound_string, pump_witness, verify_witness, witness_edge_style,
    PtVerdict,
};
use crate::random::corpus;
use crate::symbol::render_word;
use crate::ul::decide_ul_separable;

pub const SCHEMA: &str = "regsep-report/1";

/// An input automaton with the text it was read from.
#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub text: String,
    pub nfa: Nfa,
}

impl Input {
    /// Parses an automaton JSON document.
    pub fn from_json(name: &str, text: &str) -> Result<Input> {
        Ok(Input {
            name: name.to_string(),
            text: text.to_string(),
            nfa: parse_nfa(text)?,
        })
    }

    /// Compiles a regular expression.
    pub fn from_regex(regex: &str) -> Result<Input> {
        Ok(Input {
            name: regex.to_string(),
            text: regex.to_string(),
            nfa: regex_to_nfa(regex)?,
        })
    }

    fn digest(&self) -> InputDigest {
        InputDigest {
            name: self.name.clone(),
            sha256: hex::encode(Sha256::digest(self.text.as_bytes())),
            states: self.nfa.num_states(),
            alphabet: self.nfa.alphabet().iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
    pub states: usize,
    pub alphabet: Vec<String>,
}

/// The JSON document printed for every command. Field order is fixed;
/// only `elapsed_ms` varies between identical runs.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub options: Value,
    pub inputs: Vec<InputDigest>,
    pub result: Value,
    pub budget: Option<usize>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// A file a command asks to have written next to its report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub path: PathBuf,
    pub contents: String,
}

#[derive(Clone, Debug)]
pub struct Output {
    pub report: Report,
    pub artifacts: Vec<Artifact>,
}

/// Exit status for a failed command: 3 for resource limits, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) | Error::PieceSpaceTooLarge { .. } | Error::MonoidTooLarge(_) => 3,
        _ => 2,
    }
}

struct Builder {
    command: &'static str,
    options: Value,
    inputs: Vec<InputDigest>,
    budget: Option<usize>,
    started: Instant,
    artifacts: Vec<Artifact>,
}

impl Builder {
    fn new(command: &'static str, options: Value, inputs: &[&Input], budget: Option<usize>) -> Self {
        Builder {
            command,
            options,
            inputs: inputs.iter().map(|i| i.digest()).collect(),
            budget,
            started: Instant::now(),
            artifacts: Vec::new(),
        }
    }

    fn artifact(&mut self, dir: &Path, name: &str, contents: String) {
        self.artifacts.push(Artifact {
            path: dir.join(name),
            contents,
        });
    }

    fn finish(self, result: Value) -> Output {
        Output {
            report: Report {
                schema: SCHEMA,
                command: self.command.to_string(),
                options: self.options,
                inputs: self.inputs,
                result,
                budget: self.budget,
                elapsed_ms: self.started.elapsed().as_millis(),
            },
            artifacts: self.artifacts,
        }
    }
}

fn pt_bound(a1: &Nfa, a2: &Nfa) -> String {
    let m = crate::automata::joint_alphabet(a1, a2).len();
    kappa_bound_string(a1.num_states(), a2.num_states(), m)
}

#[derive(Clone, Debug, Default)]
pub struct PtSeparateOptions {
    /// Include the full witness paths, not only the factorization pair.
    pub witness: bool,
    pub pump: Option<usize>,
    pub dot: Option<PathBuf>,
}

/// Decides separability by a piecewise testable language.
pub fn pt_separate(a1: &Input, a2: &Input, opts: &PtSeparateOptions) -> Result<Output> {
    let mut b = Builder::new(
        "pt-separate",
        json!({ "witness": opts.witness, "pump": opts.pump }),
        &[a1, a2],
        None,
    );
    let verdict = decide_pt_separable(&a1.nfa, &a2.nfa);
    let mut result = json!({
        "separable": verdict.is_separable(),
        "witness": Value::Null,
        "kappa_bound": pt_bound(&a1.nfa, &a2.nfa),
    });
    if let PtVerdict::NotSeparable(w) = &verdict {
        result["witness"] = if opts.witness {
            serde_json::to_value(w)?
        } else {
            json!({ "u": w.pair.u, "B": w.pair.b })
        };
        result["witness_verified"] = json!(verify_witness(w, &a1.nfa, &a2.nfa));
        if let Some(kappa) = opts.pump {
            let (w1, w2) = pump_witness(w, kappa)?;
            result["pumped"] = json!({
                "kappa": kappa,
                "w1": render_word(&w1),
                "w2": render_word(&w2),
                "w1_accepted": a1.nfa.accepts(&w1),
                "w2_accepted": a2.nfa.accepts(&w2),
                "kpeq": kpeq(&w1, &w2, kappa),
            });
        }
    }
    if let Some(dir) = &opts.dot {
        b.artifact(dir, "a1.dot", to_dot(&a1.nfa, "A1", None));
        b.artifact(dir, "a2.dot", to_dot(&a2.nfa, "A2", None));
        if let Some(w) = verdict.witness() {
            let s1 = witness_edge_style(&a1.nfa, &w.path1);
            let s2 = witness_edge_style(&a2.nfa, &w.path2);
            b.artifact(dir, "a1_witness.dot", to_dot(&a1.nfa, "A1", Some(&s1)));
            b.artifact(dir, "a2_witness.dot", to_dot(&a2.nfa, "A2", Some(&s2)));
        }
    }
    Ok(b.finish(result))
}

/// Least κ at which the κ-abstractions are disjoint. When found and
/// `separator_path` is set, the separator DFA is written there.
pub fn pt_min_kappa(
    a1: &Input,
    a2: &Input,
    kappa_max: usize,
    budget: usize,
    separator_path: Option<&Path>,
) -> Result<Output> {
    let mut b = Builder::new(
        "pt-min-kappa",
        json!({ "max": kappa_max, "separator": separator_path }),
        &[a1, a2],
        Some(budget),
    );
    let found = min_kappa(&a1.nfa, &a2.nfa, kappa_max, budget)?;
    let mut result = json!({ "kappa": found, "separator": Value::Null });
    match found {
        Some(kappa) => {
            if let Some(path) = separator_path {
                let alphabet = crate::automata::joint_alphabet(&a1.nfa, &a2.nfa);
                let sep = separator(&a1.nfa, &alphabet, kappa, budget)?;
                b.artifacts.push(Artifact {
                    path: path.to_path_buf(),
                    contents: separator_document(&sep.dfa, kappa, sep.num_abstractions)?,
                });
                result["separator"] = json!(path);
            }
        }
        None => {
            result["pt_separable"] = json!(decide_pt_separable(&a1.nfa, &a2.nfa).is_separable());
        }
    }
    Ok(b.finish(result))
}

/// The automaton document of a separator with its metadata object.
pub fn separator_document(dfa: &crate::automata::Dfa, kappa: usize, n: usize) -> Result<String> {
    let mut doc: Value = dfa_to_json(dfa);
    doc["metadata"] = json!({ "kappa": kappa, "num_abstractions": n });
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}

/// The κ-level separator `[L1]κ` and whether it excludes `L2`.
pub fn pt_separator(
    a1: &Input,
    a2: &Input,
    kappa: usize,
    budget: usize,
    dot: Option<&Path>,
) -> Result<Output> {
    let mut b = Builder::new("pt-separator", json!({ "kappa": kappa }), &[a1, a2], Some(budget));
    let alphabet = crate::automata::joint_alphabet(&a1.nfa, &a2.nfa);
    let sep = separator(&a1.nfa, &alphabet, kappa, budget)?;
    let excludes = product(&sep.dfa.to_nfa(), &a2.nfa).is_empty();
    if let Some(dir) = dot {
        b.artifact(dir, "separator.dot", to_dot(&sep.dfa.to_nfa(), "separator", None));
    }
    let automaton: Value =
        serde_json::from_str(&separator_document(&sep.dfa, kappa, sep.num_abstractions)?)?;
    Ok(b.finish(json!({
        "separates": excludes,
        "states": sep.dfa.num_states(),
        "automaton": automaton,
    })))
}

/// Scans UL levels up to `kappa_max`.
pub fn ul_separate(a1: &Input, a2: &Input, kappa_max: usize, budget: usize) -> Result<Output> {
    let b = Builder::new("ul-separate", json!({ "max_kappa": kappa_max }), &[a1, a2], Some(budget));
    let d = decide_ul_separable(&a1.nfa, &a2.nfa, kappa_max, budget)?;
    Ok(b.finish(serde_json::to_value(&d)?))
}

/// Both level bounds for a pair of automata, as decimal strings.
pub fn bounds(a1: &Input, a2: &Input) -> Result<Output> {
    let b = Builder::new("bounds", json!({}), &[a1, a2], None);
    let (x1, x2) = crate::automata::align(&a1.nfa, &a2.nfa);
    let m = x1.alphabet().len();
    let (m1, m2) = (syntactic_monoid(&x1)?.size(), syntactic_monoid(&x2)?.size());
    Ok(b.finish(json!({
        "alphabet_size": m,
        "pt": {
            "k1": a1.nfa.num_states(),
            "k2": a2.nfa.num_states(),
            "kappa_bound": pt_bound(&a1.nfa, &a2.nfa),
        },
        "ul": {
            "m1": m1,
            "m2": m2,
            "kappa_bound": ul_kappa_bound(m1, m2, m).to_string(),
        },
    })))
}

/// The transition monoid of the minimal DFA.
pub fn monoid(a: &Input) -> Result<Output> {
    let b = Builder::new("monoid", json!({}), &[a], None);
    let m = syntactic_monoid(&a.nfa)?;
    Ok(b.finish(serde_json::to_value(&m)?))
}

/// Cross-checks the decision procedure against the abstraction searches
/// on a seeded random corpus.
pub fn selfcheck(seed: u64, count: usize, budget: usize) -> Result<Output> {
    let b = Builder::new("selfcheck", json!({ "seed": seed, "count": count }), &[], Some(budget));
    let mut violations = Vec::new();
    let mut separable = 0;
    for (i, (a1, a2)) in corpus(seed, count, 4, 3).iter().enumerate() {
        for problem in check_pair(a1, a2, budget)? {
            violations.push(format!("pair {i}: {problem}"));
        }
        separable += decide_pt_separable(a1, a2).is_separable() as usize;
    }
    Ok(b.finish(json!({
        "pairs": count,
        "separable": separable,
        "ok": violations.is_empty(),
        "violations": violations,
    })))
}

/// Consistency checks on one pair, as human-readable failures.
pub fn check_pair(a1: &Nfa, a2: &Nfa, budget: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let verdict = decide_pt_separable(a1, a2);
    if verdict.is_separable() != decide_pt_separable(a2, a1).is_separable() {
        out.push("verdict is not symmetric".into());
    }
    match &verdict {
        PtVerdict::NotSeparable(w) => {
            if !verify_witness(w, a1, a2) {
                out.push("witness does not verify".into());
            }
            for kappa in 0..=3 {
                let (w1, w2) = pump_witness(w, kappa)?;
                if !(a1.accepts(&w1) && a2.accepts(&w2) && kpeq(&w1, &w2, kappa)) {
                    out.push(format!("pumped pair fails at κ={kappa}"));
                }
                if crate::pieces::pt_separable_at(a1, a2, kappa, budget)? {
                    out.push(format!("separable at κ={kappa} despite a witness"));
                }
            }
        }
        PtVerdict::Separable => {}
    }
    if let Some(kappa) = min_kappa(a1, a2, 4, budget)? {
        if !verdict.is_separable() {
            out.push(format!("abstractions separate at κ={kappa} but a witness was found"));
        }
        let alphabet = crate::automata::joint_alphabet(a1, a2);
        let sep = separator(a1, &alphabet, kappa, budget)?.dfa;
        if !product(a1, &sep.complement().to_nfa()).is_empty() {
            out.push("separator misses words of L1".into());
        }
        if !product(a2, &sep.to_nfa()).is_empty() {
            out.push("separator meets L2".into());
        }
    }
    Ok(out)
}
