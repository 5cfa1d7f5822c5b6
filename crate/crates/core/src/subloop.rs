//! Subloops generated by a set of elements, and associativity checks on them.

use crate::error::Result;
use crate::table::{Element, LoopTable};

/// Membership bitset over 0-based element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub(crate) fn new(order: usize) -> Self {
        ElemSet {
            words: vec![0; order.div_ceil(64)],
        }
    }

    /// Returns true if `x` was not present.
    #[inline]
    pub(crate) fn insert(&mut self, x: usize) -> bool {
        let (w, bit) = (x / 64, 1u64 << (x % 64));
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }
}

/// Multiplicative closure of `gens ∪ {identity}`, 0-based.
///
/// Every pair `(i, j)` of members gets multiplied both ways once the later of
/// the two has been reached, so the result is closed. Returns members sorted.
pub(crate) fn closure(l: &LoopTable, gens: impl IntoIterator<Item = usize>) -> (Vec<usize>, ElemSet) {
    let mut set = ElemSet::new(l.order());
    let mut members = vec![0];
    set.insert(0);
    for g in gens {
        if set.insert(g) {
            members.push(g);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for p in [l.op(x, y), l.op(y, x)] {
                if set.insert(p) {
                    members.push(p);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    (members, set)
}

/// Lexicographically first non-associating triple among sorted 0-based `members`.
pub(crate) fn first_nonassociative(l: &LoopTable, members: &[usize]) -> Option<[usize; 3]> {
    for &p in members {
        for &q in members {
            let pq = l.op(p, q);
            for &r in members {
                if l.op(pq, r) != l.op(p, l.op(q, r)) {
                    return Some([p, q, r]);
                }
            }
        }
    }
    None
}

/// A multiplicatively closed subset of a loop together with the elements it was generated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubloopSet {
    parent_order: usize,
    members: Vec<Element>,
    generators: Vec<Element>,
}

impl SubloopSet {
    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// Members in increasing order; always starts with the identity.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// The subloop `⟨gens⟩`.
pub fn generate_subloop(l: &LoopTable, gens: &[Element]) -> Result<SubloopSet> {
    let mut zero_based = Vec::with_capacity(gens.len());
    for &g in gens {
        // range check via mul with the identity
        l.mul(g, 1)?;
        zero_based.push(g - 1);
    }
    let (members, _) = closure(l, zero_based);
    Ok(SubloopSet {
        parent_order: l.order(),
        members: members.into_iter().map(|x| x + 1).collect(),
        generators: gens.to_vec(),
    })
}

/// `None` if `s` is associative, otherwise its lexicographically first triple `(p,q,r)`
/// with `(p·q)·r ≠ p·(q·r)`.
pub fn associativity_witness(l: &LoopTable, s: &SubloopSet) -> Option<[Element; 3]> {
    debug_assert_eq!(s.parent_order, l.order());
    let members: Vec<usize> = s.members.iter().map(|&x| x - 1).collect();
    first_nonassociative(l, &members).map(|t| t.map(|x| x + 1))
}
