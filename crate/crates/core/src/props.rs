//! Property predicates on loops: commutativity, inverse property, exponent 2,
//! Steiner and Moufang.

use std::fmt;

use crate::scan::{find_triple, ScanOptions};
use crate::table::{Element, LoopTable};

/// Why a loop fails the inverse property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IpWitness {
    /// `x` has different left and right inverses.
    TwoSidedInverse(Element),
    /// `x⁻¹(xy) ≠ y`.
    LeftInverse(Element, Element),
    /// `(yx)x⁻¹ ≠ y`.
    RightInverse(Element, Element),
}

impl IpWitness {
    pub fn elements(&self) -> Vec<Element> {
        match *self {
            IpWitness::TwoSidedInverse(x) => vec![x],
            IpWitness::LeftInverse(x, y) | IpWitness::RightInverse(x, y) => vec![x, y],
        }
    }
}

/// Left and right inverses of every element, 1-based, indexed by `x - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inverses {
    pub left: Vec<Element>,
    pub right: Vec<Element>,
}

pub fn inverses(l: &LoopTable) -> Inverses {
    let k = l.order();
    Inverses {
        // x^λ·x = 1 and x·x^ρ = 1
        left: (0..k).map(|x| l.rdiv(x, 0) + 1).collect(),
        right: (0..k).map(|x| l.ldiv(x, 0) + 1).collect(),
    }
}

/// Checks the inverse property; `None` means the loop is an IP loop.
pub fn inverse_property_witness(l: &LoopTable) -> Option<IpWitness> {
    let k = l.order();
    let inv = inverses(l);
    for x in 0..k {
        if inv.left[x] != inv.right[x] {
            return Some(IpWitness::TwoSidedInverse(x + 1));
        }
    }
    for x in 0..k {
        let xi = inv.left[x] - 1;
        for y in 0..k {
            if l.op(xi, l.op(x, y)) != y {
                return Some(IpWitness::LeftInverse(x + 1, y + 1));
            }
            if l.op(l.op(y, x), xi) != y {
                return Some(IpWitness::RightInverse(x + 1, y + 1));
            }
        }
    }
    None
}

/// `(has_ip, witness)`.
pub fn inverses_profile(l: &LoopTable) -> (bool, Option<IpWitness>) {
    let w = inverse_property_witness(l);
    (w.is_none(), w)
}

/// First `x` with `x·x ≠ 1`.
pub fn exponent_two_witness(l: &LoopTable) -> Option<Element> {
    (0..l.order()).find(|&x| l.op(x, x) != 0).map(|x| x + 1)
}

pub fn exponent_two(l: &LoopTable) -> bool {
    exponent_two_witness(l).is_none()
}

/// First pair with `a·b ≠ b·a`.
pub fn commutative_witness(l: &LoopTable) -> Option<(Element, Element)> {
    let k = l.order();
    (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .find(|&(a, b)| l.op(a, b) != l.op(b, a))
        .map(|(a, b)| (a + 1, b + 1))
}

pub fn is_commutative(l: &LoopTable) -> bool {
    commutative_witness(l).is_none()
}

/// A Steiner loop is an IP loop of exponent 2.
pub fn is_steiner(l: &LoopTable) -> bool {
    exponent_two(l) && inverse_property_witness(l).is_none()
}

/// Selects which Moufang identity to check, with `(x, y, z)` ranging over all ordered triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MoufangIdentity {
    /// `x(y(xz)) = ((xy)x)z`
    First,
    /// `y(x(zx)) = ((yx)z)x`
    Second,
    /// `(xy)(zx) = x((yz)x)`
    #[default]
    Third,
    /// All three.
    All,
}

impl MoufangIdentity {
    fn holds(self, l: &LoopTable, x: usize, y: usize, z: usize) -> bool {
        let m = |a, b| l.op(a, b);
        match self {
            MoufangIdentity::First => m(x, m(y, m(x, z))) == m(m(m(x, y), x), z),
            MoufangIdentity::Second => m(y, m(x, m(z, x))) == m(m(m(y, x), z), x),
            MoufangIdentity::Third => m(m(x, y), m(z, x)) == m(x, m(m(y, z), x)),
            MoufangIdentity::All => [Self::First, Self::Second, Self::Third]
                .iter()
                .all(|i| i.holds(l, x, y, z)),
        }
    }
}

/// Scans for a triple refuting the selected identity.
pub fn moufang_witness_with(l: &LoopTable, which: MoufangIdentity, opts: &ScanOptions) -> Option<[Element; 3]> {
    find_triple(
        l.order(),
        opts,
        || (),
        |_, x, y, z| (!which.holds(l, x, y, z)).then_some([x + 1, y + 1, z + 1]),
    )
    .0
}

/// Exhaustive sequential Moufang check; the witness is the lexicographically first refuting triple.
pub fn is_moufang(l: &LoopTable, which: MoufangIdentity) -> (bool, Option<[Element; 3]>) {
    let w = moufang_witness_with(l, which, &ScanOptions::sequential());
    (w.is_none(), w)
}

/// Every basic property of a loop, with a refuting witness for each one that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub is_commutative: bool,
    pub has_ip: bool,
    pub exponent_two: bool,
    pub is_steiner: bool,
    pub is_moufang: bool,
    pub commutative_witness: Option<(Element, Element)>,
    pub ip_witness: Option<IpWitness>,
    pub exponent_two_witness: Option<Element>,
    pub moufang_witness: Option<[Element; 3]>,
}

impl PropertyReport {
    pub fn of(l: &LoopTable) -> Self {
        let commutative_witness = commutative_witness(l);
        let ip_witness = inverse_property_witness(l);
        let exponent_two_witness = exponent_two_witness(l);
        let (is_moufang, moufang_witness) = is_moufang(l, MoufangIdentity::Third);
        PropertyReport {
            is_commutative: commutative_witness.is_none(),
            has_ip: ip_witness.is_none(),
            exponent_two: exponent_two_witness.is_none(),
            is_steiner: ip_witness.is_none() && exponent_two_witness.is_none(),
            is_moufang,
            commutative_witness,
            ip_witness,
            exponent_two_witness,
            moufang_witness,
        }
    }
}

impl fmt::Display for MoufangIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoufangIdentity::First => "x(y(xz)) = ((xy)x)z",
            MoufangIdentity::Second => "y(x(zx)) = ((yx)z)x",
            MoufangIdentity::Third => "(xy)(zx) = x((yz)x)",
            MoufangIdentity::All => "all Moufang identities",
        };
        f.write_str(s)
    }
}
