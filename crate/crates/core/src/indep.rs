//! Independent sets of the path graph on vertices `1..=n`.
//!
//! An independent set is stored as an `n`-bit word with no two adjacent 1s.
//! Position 1 is the leftmost character of the string form, so for a fixed
//! `n` the numeric value of the mask orders sets lexicographically.

use std::fmt;

use crate::error::{Error, Result};

/// Default cap on `n` for full-enumeration operations.
///
/// At `n = 30` there are `F(32) = 2,178,309` independent sets, which keeps
/// every brute-force sweep in this crate comfortably in memory.
pub const DEFAULT_MAX_N: usize = 30;

/// Hard ceiling imposed by the 64-bit mask representation.
pub const ABSOLUTE_MAX_N: usize = 63;

/// An independent set of the path graph on `n` vertices.
///
/// Vertex `i` (1-based) is stored in bit `n - i`, so the mask read as a
/// binary numeral equals the string form read left to right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndependentSet {
    n: usize,
    bits: u64,
}

impl IndependentSet {
    /// Builds a set from a raw mask, rejecting adjacent vertices.
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n });
        }
        if n > ABSOLUTE_MAX_N {
            return Err(Error::Capacity {
                n,
                max: ABSOLUTE_MAX_N,
            });
        }
        if bits >> n != 0 {
            return Err(Error::Parse(format!(
                "mask {bits:#b} has bits beyond position {n}"
            )));
        }
        if bits & (bits >> 1) != 0 {
            return Err(Error::NotIndependent(format!("{bits:0width$b}", width = n)));
        }
        Ok(IndependentSet { n, bits })
    }

    /// The empty independent set.
    pub fn empty(n: usize) -> Result<Self> {
        IndependentSet::new(n, 0)
    }

    /// Parses the string form, e.g. `"1010100"`.
    pub fn parse(s: &str) -> Result<Self> {
        let n = s.len();
        let mut bits = 0u64;
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << (n - 1 - idx),
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} in independent set {s:?}"
                    )))
                }
            }
        }
        IndependentSet::new(n, bits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    /// Membership of vertex `i`; positions outside `1..=n` count as absent.
    pub fn contains(&self, i: usize) -> bool {
        if i >= 1 && i <= self.n {
            self.bits >> (self.n - i) & 1 == 1
        } else {
            false
        }
    }

    /// The vertices of the set in increasing order.
    pub fn vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.contains(i)).collect()
    }

    /// The toggle at vertex `i`: removes `i` if present, inserts it if the
    /// result stays independent, and otherwise does nothing.
    pub fn toggle(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.n {
            return Err(Error::VertexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(self.toggle_unchecked(i))
    }

    /// Same as [`toggle`](Self::toggle) for an index already known to be in
    /// range.
    pub(crate) fn toggle_unchecked(&self, i: usize) -> Self {
        let bit = 1u64 << (self.n - i);
        let bits = if self.bits & bit != 0 {
            self.bits & !bit
        } else {
            let left = if i > 1 { bit << 1 } else { 0 };
            let right = if i < self.n { bit >> 1 } else { 0 };
            if self.bits & (left | right) == 0 {
                self.bits | bit
            } else {
                self.bits
            }
        };
        IndependentSet { n: self.n, bits }
    }

    /// The set read right to left: vertex `i` maps to `n + 1 - i`.
    pub fn reverse(&self) -> Self {
        let bits = self.bits.reverse_bits() >> (64 - self.n);
        IndependentSet { n: self.n, bits }
    }

    /// Whether the set equals its own reverse.
    pub fn is_symmetrical(&self) -> bool {
        *self == self.reverse()
    }
}

impl fmt::Display for IndependentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.n)
    }
}

impl fmt::Debug for IndependentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndependentSet({self})")
    }
}

/// All independent sets of the `n`-vertex path in lexicographic order of
/// their string form; there are `F(n+2)` of them.
pub fn enumerate_independent_sets(n: usize) -> Result<Vec<IndependentSet>> {
    enumerate_independent_sets_with_limit(n, DEFAULT_MAX_N)
}

/// Enumeration with a caller-chosen capacity guard in place of
/// [`DEFAULT_MAX_N`].
pub fn enumerate_independent_sets_with_limit(
    n: usize,
    max_n: usize,
) -> Result<Vec<IndependentSet>> {
    if n < 2 {
        return Err(Error::TooSmall { n });
    }
    let max = max_n.min(ABSOLUTE_MAX_N);
    if n > max {
        return Err(Error::Capacity { n, max });
    }
    let mut out = Vec::new();
    // Depth-first with the 0 branch explored first, which yields lexicographic
    // order directly.
    fn go(n: usize, pos: usize, bits: u64, prev_one: bool, out: &mut Vec<IndependentSet>) {
        if pos > n {
            out.push(IndependentSet { n, bits });
            return;
        }
        go(n, pos + 1, bits, false, out);
        if !prev_one {
            go(n, pos + 1, bits | 1 << (n - pos), true, out);
        }
    }
    go(n, 1, 0, false, &mut out);
    Ok(out)
}
