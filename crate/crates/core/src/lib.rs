//! Finite loops given by Cayley tables.
//!
//! The crate builds Steiner loops from Steiner triple systems and from the
//! Bose construction on `Z_n × Z_3`, computes the usual loop properties, and
//! decides whether a loop satisfies the statement of Moufang's theorem: every
//! triple with trivial associator generates a subgroup. Loops that do so
//! without being Moufang are classified as MP.
//!
//! For Bose loops the classification is MP exactly when 7 is invertible
//! modulo `n`; [`experiment::run_experiment`] checks this exhaustively.
//!
//! ```
//! use loopsmith_core::{bose_loop, mp_status, BoseParams, MpKind};
//!
//! let p = BoseParams::new(5).unwrap();
//! assert_eq!(mp_status(&bose_loop(&p)).kind, MpKind::Mp);
//! ```

pub mod bose;
pub mod error;
pub mod experiment;
pub mod fixtures;
pub mod groups;
pub mod io;
pub mod mp;
pub mod product;
pub mod props;
pub mod scan;
pub mod sts;
pub mod subloop;
pub mod table;

pub use bose::{bose_counterexample, bose_loop, bose_mul, bose_sts, mp_criterion, BoseElement, BoseParams};
pub use error::{Error, Result};
pub use experiment::{run_experiment, ExperimentRow};
pub use io::{parse_loop, parse_sts, write_loop, write_report, write_sts, ReportDocument, ReportMode};
pub use mp::{
    all_theorem_witnesses, moufang_theorem_verdict, moufang_theorem_verdict_with, mp_status, mp_status_with, MpKind,
    MpVerdict, MpWitness, TheoremVerdict,
};
pub use product::direct_product;
pub use props::{
    exponent_two, inverses_profile, is_commutative, is_moufang, is_steiner, moufang_witness_with, IpWitness,
    MoufangIdentity, PropertyReport,
};
pub use scan::{ScanOptions, WitnessOrder};
pub use sts::{admissible_order, loop_to_sts, sts_to_loop, validate_sts, TripleSystem};
pub use subloop::{associativity_witness, generate_subloop, SubloopSet};
pub use table::{validate_table, Element, LoopTable, IDENTITY};
