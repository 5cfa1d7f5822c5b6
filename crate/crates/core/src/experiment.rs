//! Sweeps Bose-construction loops over a range of moduli and compares the
//! exhaustive MP classification with the invertibility-of-7 criterion.

use crate::bose::{bose_loop, mp_criterion, BoseParams};
use crate::mp::{mp_status_with, MpKind};
use crate::scan::ScanOptions;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentRow {
    pub n: usize,
    /// `3n + 1`.
    pub order: usize,
    /// `gcd(n, 7) = 1`.
    pub criterion: bool,
    pub brute_verdict: MpKind,
    /// `criterion ⟺ brute_verdict = MP`.
    pub agree: bool,
}

impl ExperimentRow {
    pub fn compute(p: &BoseParams, opts: &ScanOptions) -> Self {
        let criterion = mp_criterion(p);
        let brute_verdict = mp_status_with(&bose_loop(p), opts).kind;
        ExperimentRow {
            n: p.n(),
            order: p.loop_order(),
            criterion,
            brute_verdict,
            agree: criterion == (brute_verdict == MpKind::Mp),
        }
    }
}

/// One row per odd `n` in `min_n..=max_n`, skipping anything below 3.
pub fn run_experiment(min_n: usize, max_n: usize, opts: &ScanOptions) -> Vec<ExperimentRow> {
    (min_n.max(3)..=max_n)
        .filter(|n| n % 2 == 1)
        .map(|n| ExperimentRow::compute(&BoseParams::new(n).expect("odd n >= 3"), opts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep() {
        let rows = run_experiment(2, 13, &ScanOptions::default());
        let orders: Vec<_> = rows.iter().map(|r| (r.order, r.brute_verdict)).collect();
        assert_eq!(
            orders,
            vec![
                (10, MpKind::Mp),
                (16, MpKind::Mp),
                (22, MpKind::Fails),
                (28, MpKind::Mp),
                (34, MpKind::Mp),
                (40, MpKind::Mp)
            ]
        );
        assert!(rows.iter().all(|r| r.agree));
    }

    #[test]
    fn single_failing_row() {
        let rows = run_experiment(7, 7, &ScanOptions::sequential());
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].brute_verdict, MpKind::Fails);
        assert!(rows[0].agree && !rows[0].criterion);
    }
}
