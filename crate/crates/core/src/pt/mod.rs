//! Deciding separability by piecewise testable languages, with
//! certificates of non-separability.

mod bound;
mod decide;
mod loops;
mod summary;
mod witness;

pub use bound::{kappa_bound, kappa_bound_exponent, kappa_bound_string};
pub use decide::{decide_pt_separable, PtVerdict};
pub use loops::max_common_loop_alphabet;
pub use summary::{build_summary_automata, SummaryAutomata, SummaryLetter};
pub use witness::{
    pump_witness, verify_witness, witness_edge_style, FactorizationPair, Segment, SegmentKind,
    Step, Witness, WitnessPath,
};
