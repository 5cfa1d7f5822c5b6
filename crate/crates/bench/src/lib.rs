//! Workloads shared by the criterion benches.

use loopsmith_core::{bose_loop, BoseParams, LoopTable};

/// Bose loop for modulus `n`, panicking on an invalid modulus.
pub fn bose(n: usize) -> LoopTable {
    bose_loop(&BoseParams::new(n).expect("odd n >= 3"))
}

/// Moduli whose loops are MP (full scan) and FAILS (early exit).
pub const MP_MODULI: [usize; 3] = [5, 17, 33];
pub const FAILING_MODULI: [usize; 2] = [21, 49];
