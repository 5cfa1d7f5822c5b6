//! Direct products of loops.

use crate::table::LoopTable;

/// `L1 × L2` with componentwise product. The pair `(a, b)` is element
/// `(a − 1)·k2 + b`, so `(1, 1)` is the identity.
pub fn direct_product(l1: &LoopTable, l2: &LoopTable) -> LoopTable {
    let k2 = l2.order();
    let k = l1.order() * k2;
    LoopTable::from_fn(k, |x, y| {
        let (a1, b1) = (x / k2, x % k2);
        let (a2, b2) = (y / k2, y % k2);
        l1.op(a1, a2) * k2 + l2.op(b1, b2)
    })
    .expect("product of loops is a loop")
}

/// Splits a product element back into its components.
pub fn split(k2: usize, element: usize) -> (usize, usize) {
    ((element - 1) / k2 + 1, (element - 1) % k2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    #[test]
    fn c2_squared_is_klein() {
        let c2 = groups::cyclic(2);
        assert_eq!(direct_product(&c2, &c2), groups::klein());
    }

    #[test]
    fn componentwise() {
        let (s3, c3) = (groups::symmetric3(), groups::cyclic(3));
        let p = direct_product(&s3, &c3);
        assert_eq!(p.order(), 18);
        for x in p.elements() {
            for y in p.elements() {
                let ((a1, b1), (a2, b2)) = (split(3, x), split(3, y));
                let z = p.mul(x, y).unwrap();
                assert_eq!(split(3, z), (s3.mul(a1, a2).unwrap(), c3.mul(b1, b2).unwrap()));
            }
        }
    }
}
