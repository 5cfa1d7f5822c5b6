//! Fixture tables shipped with the crate.

use crate::io;
use crate::sts::TripleSystem;
use crate::table::LoopTable;

pub const STEINER10_TEXT: &str = include_str!("../fixtures/steiner10.loop");
pub const FANO_TEXT: &str = include_str!("../fixtures/fano.sts");

/// The Steiner loop of order 10.
pub fn steiner10() -> LoopTable {
    io::parse_loop(STEINER10_TEXT).expect("fixture parses")
}

/// The Fano plane, STS(7).
pub fn fano() -> TripleSystem {
    io::parse_sts(FANO_TEXT).expect("fixture parses")
}
