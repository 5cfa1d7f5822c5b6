//! Small group tables used as fixtures and as factors in direct products.

use crate::table::LoopTable;

/// The trivial loop of order 1.
pub fn trivial() -> LoopTable {
    cyclic(1)
}

/// The cyclic group `C_n` (element `i + 1` is the residue `i`).
pub fn cyclic(n: usize) -> LoopTable {
    assert!(n >= 1, "cyclic group needs n >= 1");
    LoopTable::from_fn(n, |a, b| (a + b) % n).expect("cyclic group table is a loop")
}

/// The Klein four-group `C_2 × C_2`.
pub fn klein() -> LoopTable {
    LoopTable::from_fn(4, |a, b| a ^ b).expect("Klein group table is a loop")
}

/// The symmetric group on three letters.
///
/// Elements are the permutations of `{0,1,2}` in lexicographic order, so the
/// identity comes first. Product is composition, `(p·q)(x) = p(q(x))`.
pub fn symmetric3() -> LoopTable {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    LoopTable::from_fn(6, |a, b| {
        let (p, q) = (perms[a], perms[b]);
        index([p[q[0]], p[q[1]], p[q[2]]])
    })
    .expect("S3 table is a loop")
}
