//! Steiner triple systems and their correspondence with Steiner loops.
//!
//! Points are labelled `1..=v`. In the associated loop point `p` becomes
//! element `p + 1`, and element `1` is the adjoined identity.

use crate::error::{Error, Result};
use crate::props;
use crate::table::LoopTable;

/// A validated Steiner triple system in canonical form: each block ascending,
/// blocks sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleSystem {
    points: usize,
    blocks: Vec<[usize; 3]>,
}

impl TripleSystem {
    /// Checks that every pair of distinct points lies in exactly one block.
    ///
    /// Reports the first bad block, then the first pair seen twice (in block
    /// order), then the lexicographically first uncovered pair.
    pub fn validate<B: AsRef<[usize]>>(v: usize, blocks: &[B]) -> Result<Self> {
        if v == 0 {
            return Err(Error::NoPoints);
        }
        let mut canonical = Vec::with_capacity(blocks.len());
        for block in blocks {
            let b = block.as_ref();
            let bad = |reason| Error::BadBlock {
                block: b.to_vec(),
                reason,
            };
            let [x, y, z] = <[usize; 3]>::try_from(b).map_err(|_| bad("a block needs exactly 3 points"))?;
            if [x, y, z].iter().any(|&p| p == 0 || p > v) {
                return Err(bad("point out of range"));
            }
            if x == y || y == z || x == z {
                return Err(bad("repeated point"));
            }
            let mut sorted = [x, y, z];
            sorted.sort_unstable();
            canonical.push(sorted);
        }

        let mut covered = vec![false; v * v];
        for &[a, b, c] in &canonical {
            for (p, q) in [(a, b), (a, c), (b, c)] {
                let slot = &mut covered[(p - 1) * v + (q - 1)];
                if *slot {
                    return Err(Error::PairDuplicated(p, q));
                }
                *slot = true;
            }
        }
        for p in 1..=v {
            for q in p + 1..=v {
                if !covered[(p - 1) * v + (q - 1)] {
                    return Err(Error::PairUncovered(p, q));
                }
            }
        }

        canonical.sort_unstable();
        Ok(TripleSystem {
            points: v,
            blocks: canonical,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn blocks(&self) -> &[[usize; 3]] {
        &self.blocks
    }
}

/// Free-function form of [`TripleSystem::validate`].
pub fn validate_sts<B: AsRef<[usize]>>(v: usize, blocks: &[B]) -> Result<TripleSystem> {
    TripleSystem::validate(v, blocks)
}

/// An STS(v) exists iff `v ≥ 1` and `v ≡ 1 or 3 (mod 6)`.
pub fn admissible_order(v: usize) -> bool {
    v >= 1 && matches!(v % 6, 1 | 3)
}

/// The Steiner loop of order `v + 1` of a triple system.
pub fn sts_to_loop(t: &TripleSystem) -> LoopTable {
    let k = t.points + 1;
    // 0-based: identity 0, point p -> p
    let mut products = vec![0u32; k * k];
    for x in 0..k {
        products[x] = x as u32;
        products[x * k] = x as u32;
    }
    for &[a, b, c] in &t.blocks {
        for (p, q, r) in [(a, b, c), (b, a, c), (a, c, b), (c, a, b), (b, c, a), (c, b, a)] {
            products[p * k + q] = r as u32;
        }
    }
    LoopTable::from_products(k, products).expect("a Steiner triple system yields a loop")
}

/// The triple system of a Steiner loop: blocks `{a, b, a·b}` shifted down by one.
pub fn loop_to_sts(l: &LoopTable) -> Result<TripleSystem> {
    if !props::is_steiner(l) {
        return Err(Error::NotSteiner);
    }
    if l.order() < 2 {
        return Err(Error::NoPoints);
    }
    let k = l.order();
    let mut blocks = Vec::with_capacity((k - 1) * (k - 2) / 6);
    for a in 1..k {
        for b in a + 1..k {
            let c = l.op(a, b);
            // each block is emitted once, from its two smallest points
            if c > b {
                blocks.push([a, b, c]);
            }
        }
    }
    TripleSystem::validate(k - 1, &blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, groups};

    const FANO: [[usize; 3]; 7] = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ];

    #[test]
    fn fano_and_small_systems() {
        let t = validate_sts(7, &FANO).unwrap();
        assert_eq!(t.blocks().len(), 7);
        assert!(validate_sts(3, &[[1, 2, 3]]).is_ok());
        let empty: [[usize; 3]; 0] = [];
        assert!(validate_sts(1, &empty).is_ok());
        assert_eq!(validate_sts(2, &empty), Err(Error::PairUncovered(1, 2)));
        assert_eq!(validate_sts(0, &empty), Err(Error::NoPoints));
    }

    #[test]
    fn fano_missing_block() {
        assert_eq!(validate_sts(7, &FANO[..6]), Err(Error::PairUncovered(3, 5)));
    }

    #[test]
    fn block_errors() {
        assert!(matches!(validate_sts(3, &[vec![1, 2]]), Err(Error::BadBlock { .. })));
        assert!(matches!(validate_sts(3, &[[1, 2, 2]]), Err(Error::BadBlock { .. })));
        assert!(matches!(validate_sts(3, &[[1, 2, 4]]), Err(Error::BadBlock { .. })));
        assert_eq!(
            validate_sts(3, &[[1, 2, 3], [3, 2, 1]]),
            Err(Error::PairDuplicated(1, 2))
        );
    }

    #[test]
    fn admissibility() {
        assert!(admissible_order(9));
        assert!(!admissible_order(8));
        assert!(admissible_order(1));
        assert!(!admissible_order(0));
        assert!(admissible_order(7));
        assert!(admissible_order(3));
    }

    #[test]
    fn klein_correspondence() {
        let t = validate_sts(3, &[[1, 2, 3]]).unwrap();
        assert_eq!(sts_to_loop(&t), groups::klein());
        assert_eq!(loop_to_sts(&groups::klein()).unwrap(), t);
        assert_eq!(loop_to_sts(&groups::cyclic(3)), Err(Error::NotSteiner));
        assert_eq!(loop_to_sts(&groups::cyclic(2)).unwrap().points(), 1);
        assert_eq!(loop_to_sts(&groups::trivial()), Err(Error::NoPoints));
    }

    #[test]
    fn fixture_gives_sts9() {
        let s = fixtures::steiner10();
        let t = loop_to_sts(&s).unwrap();
        assert_eq!((t.points(), t.blocks().len()), (9, 12));
        assert_eq!(sts_to_loop(&t), s);
    }

    #[test]
    fn fano_loop_is_steiner() {
        let l = sts_to_loop(&validate_sts(7, &FANO).unwrap());
        assert_eq!(l.order(), 8);
        assert!(props::is_steiner(&l));
        assert!(props::is_commutative(&l));
    }
}
