//! Ricci collineations: the Lie derivative of `Ric`, the `6×3` linear system
//! on left-invariant fields, and the harness that checks the classification
//! against recomputation.

mod catalog;
mod discrepancy;
mod system;
mod verify;

pub use catalog::{catalog, eval_basis, pair_id, CaseKind, Catalog, LinearForm, PairFixture, TheoremCase};
pub use discrepancy::{discrepancy_log, parse_log, CaseCorrection, DiscrepancyLog, TableEntry};
pub use system::{
    build_system, collineation_space, collineation_space_of, lie_derivative_ric, CollineationSystem, ROW_INDEX,
};
pub use verify::{
    check_laws, check_pair, check_pairs, render_table, verify_all, verify_case, verify_cases, CaseEntry,
    FixtureStatus, LawReport, Mismatch, PairReport, PairSample, Report, Verdict,
};
