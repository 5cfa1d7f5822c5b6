//! Cayley-table representation of a finite loop.
//!
//! Elements are numbered `1..=order` with `1` the identity, exactly as they
//! appear in table files. Internally everything is stored 0-based in flat
//! row-major arrays, together with the two division tables, so that the
//! exhaustive scans elsewhere in the crate only ever do array lookups.

use std::fmt;

use crate::error::{Error, Result};

/// A loop element, numbered from 1. The identity is always `1`.
pub type Element = usize;

/// The identity element.
pub const IDENTITY: Element = 1;

/// A validated finite loop.
///
/// Immutable once built; share it freely between threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LoopTable {
    order: usize,
    products: Vec<u32>,
    left_div: Vec<u32>,
    right_div: Vec<u32>,
}

impl LoopTable {
    /// Validates a raw Cayley table (row `a`, column `b` holds `a·b`).
    ///
    /// Checks run in a fixed order: shape, entry range, columns, rows and
    /// finally the identity, so the first failing check decides the error.
    pub fn validate<R: AsRef<[i64]>>(raw: &[R]) -> Result<Self> {
        let order = raw.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        for (r, row) in raw.iter().enumerate() {
            let len = row.as_ref().len();
            if len != order {
                return Err(Error::NotSquare {
                    row: r + 1,
                    len,
                    expected: order,
                });
            }
        }
        let mut products = Vec::with_capacity(order * order);
        for (r, row) in raw.iter().enumerate() {
            for (c, &value) in row.as_ref().iter().enumerate() {
                if value < 1 || value > order as i64 {
                    return Err(Error::EntryOutOfRange {
                        row: r + 1,
                        col: c + 1,
                        value,
                        order,
                    });
                }
                products.push((value - 1) as u32);
            }
        }
        Self::from_products(order, products)
    }

    /// Builds a table from a 0-based product function, validating the result.
    pub(crate) fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut products = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                products.push(f(a, b) as u32);
            }
        }
        Self::from_products(order, products)
    }

    /// `products` is 0-based, row-major and already range-checked.
    pub(crate) fn from_products(order: usize, products: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        debug_assert_eq!(products.len(), order * order);

        let mut left_div = vec![u32::MAX; order * order];
        let mut right_div = vec![u32::MAX; order * order];

        // left_div[a][a·x] = x fills every slot exactly once iff row a is a permutation
        // (likewise right_div for columns).
        for col in 0..order {
            for row in 0..order {
                let p = products[row * order + col] as usize;
                let slot = &mut right_div[col * order + p];
                if *slot != u32::MAX {
                    return Err(Error::ColumnNotPermutation(col + 1));
                }
                *slot = row as u32;
            }
        }
        for row in 0..order {
            for col in 0..order {
                let p = products[row * order + col] as usize;
                let slot = &mut left_div[row * order + p];
                if *slot != u32::MAX {
                    return Err(Error::RowNotPermutation(row + 1));
                }
                *slot = col as u32;
            }
        }
        for x in 0..order {
            if products[x] as usize != x || products[x * order] as usize != x {
                return Err(Error::NoIdentity);
            }
        }

        Ok(LoopTable {
            order,
            products,
            left_div,
            right_div,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// All elements, `1..=order`.
    pub fn elements(&self) -> std::ops::RangeInclusive<Element> {
        1..=self.order
    }

    fn check(&self, index: Element) -> Result<usize> {
        if index == 0 || index > self.order {
            Err(Error::IndexOutOfRange {
                index,
                order: self.order,
            })
        } else {
            Ok(index - 1)
        }
    }

    /// `a·b`.
    pub fn mul(&self, a: Element, b: Element) -> Result<Element> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(self.op(a, b) + 1)
    }

    /// The unique `x` with `a·x = b`.
    pub fn left_divide(&self, a: Element, b: Element) -> Result<Element> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(self.ldiv(a, b) + 1)
    }

    /// The unique `x` with `x·a = b`.
    pub fn right_divide(&self, a: Element, b: Element) -> Result<Element> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(self.rdiv(a, b) + 1)
    }

    /// The associator `(a,b,c)`: the unique `u` with `(a·(b·c))·u = (a·b)·c`.
    pub fn associator(&self, a: Element, b: Element, c: Element) -> Result<Element> {
        let (a, b, c) = (self.check(a)?, self.check(b)?, self.check(c)?);
        Ok(self.assoc(a, b, c) + 1)
    }

    /// Row `a` of the table as 1-based elements.
    pub fn row(&self, a: Element) -> Result<Vec<Element>> {
        let a = self.check(a)?;
        Ok(self.products[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&p| p as usize + 1)
            .collect())
    }

    /// The whole table, row by row, as 1-based elements.
    pub fn rows(&self) -> impl Iterator<Item = Vec<Element>> + '_ {
        self.products
            .chunks(self.order)
            .map(|r| r.iter().map(|&p| p as usize + 1).collect())
    }

    // 0-based fast paths used by the scans. Callers guarantee range.

    #[inline]
    pub(crate) fn op(&self, a: usize, b: usize) -> usize {
        self.products[a * self.order + b] as usize
    }

    #[inline]
    pub(crate) fn ldiv(&self, a: usize, b: usize) -> usize {
        self.left_div[a * self.order + b] as usize
    }

    #[inline]
    pub(crate) fn rdiv(&self, a: usize, b: usize) -> usize {
        self.right_div[a * self.order + b] as usize
    }

    #[inline]
    pub(crate) fn assoc(&self, a: usize, b: usize, c: usize) -> usize {
        let left = self.op(self.op(a, b), c);
        let right = self.op(a, self.op(b, c));
        self.ldiv(right, left)
    }

    #[inline]
    pub(crate) fn associates(&self, a: usize, b: usize, c: usize) -> bool {
        self.op(self.op(a, b), c) == self.op(a, self.op(b, c))
    }
}

impl fmt::Debug for LoopTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LoopTable(order {})", self.order)?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Free-function form of [`LoopTable::validate`].
pub fn validate_table<R: AsRef<[i64]>>(raw: &[R]) -> Result<LoopTable> {
    LoopTable::validate(raw)
}
