//! The Bose construction of Steiner triple systems on `Z_n × Z_3`, and the
//! Steiner loops it produces.
//!
//! Elements of the loop are the adjoined identity and the pairs `(x, i)` with
//! `x ∈ Z_n`, `i ∈ Z_3`. They are numbered `1` for the identity and
//! `2 + i·n + x` for `(x, i)`. The loop product is
//!
//! ```text
//! (x,i)·(x,j) = (x,k)            {i,j,k} = Z_3
//! (x,i)·(y,i) = ((x+y)/2, i+1)   x ≠ y
//! (x,i)·(y,i+1) = (2y−x, i)      x ≠ y
//! (x,i)·(y,i−1) = (2x−y, i−1)    x ≠ y
//! (x,i)·(x,i) = 1
//! ```
//!
//! Whether such a loop satisfies the statement of Moufang's theorem is
//! decided by whether 7 is a unit modulo `n`; see [`mp_criterion`].

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sts::TripleSystem;
use crate::table::{Element, LoopTable};

/// The modulus `n` of the construction together with `1/2 mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoseParams {
    n: usize,
    inv2: usize,
}

impl BoseParams {
    /// `n` must be odd and at least 3.
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::BadModulus(n as u64));
        }
        let inv2 = mod_inverse(2, n).expect("2 is a unit modulo an odd n");
        Ok(BoseParams { n, inv2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The inverse of 2 in `Z_n`.
    pub fn inv2(&self) -> usize {
        self.inv2
    }

    /// `3n + 1`.
    pub fn loop_order(&self) -> usize {
        3 * self.n + 1
    }

    pub fn encode(&self, e: BoseElement) -> Element {
        match e {
            BoseElement::Identity => 1,
            BoseElement::Pair(x, i) => {
                debug_assert!(x < self.n && i < 3);
                2 + i * self.n + x
            }
        }
    }

    pub fn decode(&self, element: Element) -> Result<BoseElement> {
        match element {
            1 => Ok(BoseElement::Identity),
            e if e >= 2 && e <= self.loop_order() => {
                let v = e - 2;
                Ok(BoseElement::Pair(v % self.n, v / self.n))
            }
            index => Err(Error::IndexOutOfRange {
                index,
                order: self.loop_order(),
            }),
        }
    }

    /// Builds `(x mod n, i mod 3)`.
    pub fn pair(&self, x: i64, i: i64) -> BoseElement {
        BoseElement::Pair(x.rem_euclid(self.n as i64) as usize, i.rem_euclid(3) as usize)
    }
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inverse(a: usize, m: usize) -> Option<usize> {
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as usize)
}

/// An element of a Bose-construction Steiner loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoseElement {
    Identity,
    /// `(x, i)` with `x < n`, `i < 3`.
    Pair(usize, usize),
}

impl std::fmt::Display for BoseElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoseElement::Identity => f.write_str("1"),
            BoseElement::Pair(x, i) => write!(f, "({x},{i})"),
        }
    }
}

/// The loop product on elements.
pub fn bose_mul(p: &BoseParams, e1: BoseElement, e2: BoseElement) -> BoseElement {
    use BoseElement::*;
    let n = p.n;
    match (e1, e2) {
        (Identity, e) | (e, Identity) => e,
        (Pair(x, i), Pair(y, j)) => {
            if x == y {
                if i == j {
                    Identity
                } else {
                    Pair(x, (6 - i - j) % 3)
                }
            } else if i == j {
                Pair((x + y) * p.inv2 % n, (i + 1) % 3)
            } else if j == (i + 1) % 3 {
                Pair((2 * y + n - x) % n, i)
            } else {
                Pair((2 * x + n - y) % n, j)
            }
        }
    }
}

/// Tabulates the Bose-construction Steiner loop of order `3n + 1`.
pub fn bose_loop(p: &BoseParams) -> LoopTable {
    let k = p.loop_order();
    let elems: Vec<BoseElement> = (1..=k).map(|e| p.decode(e).expect("in range")).collect();
    let mut products = vec![0u32; k * k];
    products.par_chunks_mut(k).enumerate().for_each(|(a, row)| {
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = (p.encode(bose_mul(p, elems[a], elems[b])) - 1) as u32;
        }
    });
    LoopTable::from_products(k, products).expect("Bose construction yields a loop")
}

/// The Bose triple system on `3n` points, point label `encode(e) − 1`.
pub fn bose_sts(p: &BoseParams) -> TripleSystem {
    let n = p.n;
    let point = |x: usize, i: usize| p.encode(BoseElement::Pair(x, i)) - 1;
    let mut blocks = Vec::with_capacity(n + 3 * n * (n - 1) / 2);
    for x in 0..n {
        blocks.push([point(x, 0), point(x, 1), point(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..n {
            for y in x + 1..n {
                blocks.push([point(x, i), point(y, i), point((x + y) * p.inv2 % n, (i + 1) % 3)]);
            }
        }
    }
    TripleSystem::validate(3 * n, &blocks).expect("Bose construction yields a Steiner triple system")
}

/// True iff 7 is invertible in `Z_n`, the condition under which the Bose loop is MP.
pub fn mp_criterion(p: &BoseParams) -> bool {
    p.n.gcd(&7) == 1
}

/// For `7 | n`: the triple `((0,1), (0,0), (a,0))` with the smallest `a ≠ 0`
/// such that `7a ≡ 0 (mod n)`. It associates, but `((0,1), (a,0), (0,0))` does not.
pub fn bose_counterexample(p: &BoseParams) -> Result<[BoseElement; 3]> {
    if mp_criterion(p) {
        return Err(Error::CriterionHolds(p.n));
    }
    let a = (1..p.n).find(|a| 7 * a % p.n == 0).expect("n shares a factor with 7");
    Ok([
        BoseElement::Pair(0, 1),
        BoseElement::Pair(0, 0),
        BoseElement::Pair(a, 0),
    ])
}
