//! Deciding whether a loop satisfies the statement of Moufang's theorem, and
//! the resulting MOUFANG / MP / FAILS classification.
//!
//! The theorem statement is checked over every ordered triple `(a,b,c)`,
//! including repeats and triples that contain the identity. For each triple
//! with trivial associator the subloop `⟨a,b,c⟩` is generated and tested for
//! full associativity. Results are cached per worker, first by generator set
//! and then by the generated subloop, so each distinct subloop is tested once.

use std::collections::HashMap;
use std::fmt;

use crate::props::{moufang_witness_with, MoufangIdentity};
use crate::scan::{collect_triples, find_triple, ScanOptions, WitnessOrder};
use crate::subloop::{closure, first_nonassociative, ElemSet};
use crate::table::{Element, LoopTable};

/// A triple with trivial associator whose generated subloop is not associative,
/// together with a non-associating triple inside that subloop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MpWitness {
    pub triple: [Element; 3],
    pub refuting: [Element; 3],
}

/// Outcome of checking the statement of Moufang's theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub holds: bool,
    pub witness: Option<MpWitness>,
    pub witness_order: WitnessOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MpKind {
    /// A Moufang loop (every group is one).
    Moufang,
    /// Not Moufang, but satisfies the statement of Moufang's theorem.
    Mp,
    /// Some associating triple generates a non-associative subloop.
    Fails,
}

impl MpKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MpKind::Moufang => "MOUFANG",
            MpKind::Mp => "MP",
            MpKind::Fails => "FAILS",
        }
    }
}

impl fmt::Display for MpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MpVerdict {
    pub kind: MpKind,
    /// Present exactly when `kind` is `Fails`.
    pub witness: Option<MpWitness>,
    pub witness_order: WitnessOrder,
}

const NONE: u32 = u32::MAX;

#[derive(Default)]
struct SubloopCache {
    by_generators: HashMap<[u32; 3], Option<[usize; 3]>>,
    by_subloop: HashMap<ElemSet, Option<[usize; 3]>>,
}

impl SubloopCache {
    /// First non-associating triple of `⟨a,b,c⟩`, or `None` if it is associative.
    fn check(&mut self, l: &LoopTable, a: usize, b: usize, c: usize) -> Option<[usize; 3]> {
        let mut key = [a, b, c].map(|x| if x == 0 { NONE } else { x as u32 });
        key.sort_unstable();
        if key[1] == key[2] {
            key[2] = NONE;
        }
        if key[0] == key[1] {
            key[1] = key[2];
            key[2] = NONE;
        }
        if let Some(&hit) = self.by_generators.get(&key) {
            return hit;
        }
        let gens = key.iter().filter(|&&g| g != NONE).map(|&g| g as usize);
        let (members, set) = closure(l, gens);
        let result = *self
            .by_subloop
            .entry(set)
            .or_insert_with(|| first_nonassociative(l, &members));
        self.by_generators.insert(key, result);
        result
    }
}

fn witness_at(l: &LoopTable, cache: &mut SubloopCache, a: usize, b: usize, c: usize) -> Option<MpWitness> {
    if !l.associates(a, b, c) {
        return None;
    }
    cache.check(l, a, b, c).map(|r| MpWitness {
        triple: [a + 1, b + 1, c + 1],
        refuting: r.map(|x| x + 1),
    })
}

fn is_associative(l: &LoopTable, opts: &ScanOptions) -> bool {
    find_triple(
        l.order(),
        opts,
        || (),
        |_, a, b, c| (!l.associates(a, b, c)).then_some(()),
    )
    .0
    .is_none()
}

/// Checks the statement of Moufang's theorem, stopping at the first witness.
pub fn moufang_theorem_verdict_with(l: &LoopTable, opts: &ScanOptions) -> TheoremVerdict {
    let default_order = if opts.is_sequential() {
        WitnessOrder::Lexicographic
    } else {
        WitnessOrder::Arbitrary
    };
    // every subloop of a group is a group
    if is_associative(l, opts) {
        return TheoremVerdict {
            holds: true,
            witness: None,
            witness_order: default_order,
        };
    }
    let (witness, witness_order) = find_triple(l.order(), opts, SubloopCache::default, |cache, a, b, c| {
        witness_at(l, cache, a, b, c)
    });
    TheoremVerdict {
        holds: witness.is_none(),
        witness,
        witness_order,
    }
}

/// [`moufang_theorem_verdict_with`] on the default (parallel) scan.
pub fn moufang_theorem_verdict(l: &LoopTable) -> TheoremVerdict {
    moufang_theorem_verdict_with(l, &ScanOptions::default())
}

/// Every failing triple, in lexicographic order.
pub fn all_theorem_witnesses(l: &LoopTable, opts: &ScanOptions) -> Vec<MpWitness> {
    collect_triples(l.order(), opts, SubloopCache::default, |cache, a, b, c| {
        witness_at(l, cache, a, b, c)
    })
}

/// Classifies a loop as MOUFANG, MP or FAILS.
///
/// Moufang loops also get the theorem verdict computed; it must hold.
pub fn mp_status_with(l: &LoopTable, opts: &ScanOptions) -> MpVerdict {
    let is_moufang = moufang_witness_with(l, MoufangIdentity::Third, opts).is_none();
    let verdict = moufang_theorem_verdict_with(l, opts);
    if is_moufang {
        assert!(
            verdict.holds,
            "Moufang loop violates Moufang's theorem: {:?}",
            verdict.witness
        );
        return MpVerdict {
            kind: MpKind::Moufang,
            witness: None,
            witness_order: verdict.witness_order,
        };
    }
    let kind = if verdict.holds { MpKind::Mp } else { MpKind::Fails };
    MpVerdict {
        kind,
        witness: verdict.witness,
        witness_order: verdict.witness_order,
    }
}

pub fn mp_status(l: &LoopTable) -> MpVerdict {
    mp_status_with(l, &ScanOptions::default())
}
