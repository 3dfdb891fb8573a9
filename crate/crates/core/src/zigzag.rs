//! Order ideals of the zigzag poset, their toggle group, promotion and
//! rowmotion, and the bit-flip bijection that carries the independent-set
//! dynamics over.
//!
//! The zigzag poset on elements `a_1..a_n` has the even-indexed elements on
//! top: `a_(2i-1) < a_(2i)` and `a_(2i+1) < a_(2i)`. Ideals are stored in
//! the same bit layout as independent sets (bit `i` for `a_i`), so the
//! bijection is a flip of the odd positions.

use std::fmt;

use crate::error::{Error, Result};
use crate::indep::{enumerate_independent_sets, IndependentSet};
use crate::orbits::{homomesy_over, partition_masks, HomomesyVerdict, Rat, Statistic};
use crate::word::ToggleWord;

/// A downward-closed subset of the zigzag poset on `n` elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    n: usize,
    bits: u64,
}

impl OrderIdeal {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n });
        }
        if bits >> n != 0 {
            return Err(Error::Parse(format!(
                "mask {bits:#b} has bits beyond position {n}"
            )));
        }
        let ideal = OrderIdeal { n, bits };
        for i in (2..=n).step_by(2) {
            if ideal.contains(i) && !(ideal.contains(i - 1) && (i == n || ideal.contains(i + 1))) {
                return Err(Error::NotAnIdeal(ideal.to_string()));
            }
        }
        Ok(ideal)
    }

    pub fn empty(n: usize) -> Result<Self> {
        OrderIdeal::new(n, 0)
    }

    /// Parses the membership string, `'1'` meaning the element is present.
    pub fn parse(s: &str) -> Result<Self> {
        let n = s.len();
        let mut bits = 0u64;
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << (n - 1 - idx),
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} in ideal {s:?}"
                    )))
                }
            }
        }
        OrderIdeal::new(n, bits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    /// Membership of `a_i`; out-of-range positions count as absent.
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n && self.bits >> (self.n - i) & 1 == 1
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.contains(i)).collect()
    }

    /// The toggle at `a_i`: inserts or removes the element when the result
    /// is still downward closed, and otherwise does nothing. Unlike
    /// independent-set toggles, removal can be blocked (by a covering
    /// element still present).
    pub fn toggle(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.n {
            return Err(Error::VertexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(self.toggle_unchecked(i))
    }

    pub(crate) fn toggle_unchecked(&self, i: usize) -> Self {
        let bit = 1u64 << (self.n - i);
        let candidate = self.bits ^ bit;
        match OrderIdeal::new(self.n, candidate) {
            Ok(next) => next,
            Err(_) => *self,
        }
    }

    /// Two-row sketch of the zigzag with `*` for present elements and `o`
    /// for absent ones; the top line holds the even-indexed elements.
    pub fn render(&self) -> String {
        let mark = |i: usize| if self.contains(i) { '*' } else { 'o' };
        let mut top = String::new();
        let mut bottom = String::new();
        for i in 1..=self.n {
            let column = 2 * (i - 1);
            let line = if i % 2 == 0 { &mut top } else { &mut bottom };
            while line.len() < column {
                line.push(' ');
            }
            line.push(mark(i));
        }
        format!("{top}\n{bottom}")
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.n)
    }
}

impl fmt::Debug for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderIdeal({self})")
    }
}

/// Applies a word of ideal toggles right to left.
pub fn apply_ideal_word(ideal: &OrderIdeal, w: &ToggleWord) -> OrderIdeal {
    assert_eq!(
        ideal.n(),
        w.n(),
        "ideal and word have different element counts"
    );
    w.letters()
        .iter()
        .rev()
        .fold(*ideal, |acc, &i| acc.toggle_unchecked(i))
}

/// Promotion: toggle every element from `a_1` up to `a_n`.
pub fn promotion_word(n: usize) -> ToggleWord {
    ToggleWord::sweep(n)
}

/// Rowmotion as a toggle word: the top row (even indices) first, then the
/// bottom row (odd indices), each written descending.
pub fn rowmotion_word(n: usize) -> ToggleWord {
    assert!(n >= 2, "rowmotion needs at least two elements");
    let mut odds: Vec<usize> = (1..=n).step_by(2).collect();
    let mut evens: Vec<usize> = (2..=n).step_by(2).collect();
    odds.reverse();
    evens.reverse();
    let mut word = odds;
    word.extend(evens);
    ToggleWord::new(n, word).expect("rowmotion word is well formed")
}

/// Rank-by-rank rowmotion computed directly from the poset: the new ideal is
/// generated by the minimal elements of the complement. Kept as an
/// independent cross-check for the toggle word above.
pub fn rowmotion_direct(ideal: &OrderIdeal) -> OrderIdeal {
    let n = ideal.n();
    let mut bits = 0u64;
    for i in 1..=n {
        let minimal_missing = if i % 2 == 1 {
            !ideal.contains(i)
        } else {
            // An even element is minimal in the complement only when its
            // lower covers are both inside the ideal.
            !ideal.contains(i) && ideal.contains(i - 1) && (i == n || ideal.contains(i + 1))
        };
        if minimal_missing {
            bits |= 1 << (n - i);
            if i % 2 == 0 {
                // Close downward.
                bits |= 1 << (n - (i - 1));
                if i < n {
                    bits |= 1 << (n - (i + 1));
                }
            }
        }
    }
    OrderIdeal::new(n, bits).expect("downward closure yields an ideal")
}

/// The bijection from independent sets to ideals: `a_i` is present exactly
/// when `i` is odd and absent from the set, or even and present in it.
pub fn eta(s: &IndependentSet) -> OrderIdeal {
    let n = s.n();
    let odd_mask = odd_positions_mask(n);
    OrderIdeal::new(n, s.mask() ^ odd_mask).expect("the image of eta is downward closed")
}

/// Inverse of [`eta`]: flip the odd positions back.
pub fn eta_inverse(ideal: &OrderIdeal) -> IndependentSet {
    let n = ideal.n();
    let odd_mask = odd_positions_mask(n);
    IndependentSet::new(n, ideal.mask() ^ odd_mask)
        .expect("the preimage of an ideal is an independent set")
}

fn odd_positions_mask(n: usize) -> u64 {
    (1..=n).step_by(2).fold(0u64, |m, i| m | 1 << (n - i))
}

/// All ideals of the `n`-element zigzag in ascending mask order; there are
/// `F(n+2)` of them, the images of the independent sets under [`eta`].
pub fn enumerate_ideals(n: usize) -> Result<Vec<OrderIdeal>> {
    enumerate_ideals_with_limit(n, crate::indep::DEFAULT_MAX_N)
}

/// [`enumerate_ideals`] with a caller-chosen capacity guard.
pub fn enumerate_ideals_with_limit(n: usize, max_n: usize) -> Result<Vec<OrderIdeal>> {
    let mut ideals: Vec<OrderIdeal> =
        crate::indep::enumerate_independent_sets_with_limit(n, max_n)?
            .iter()
            .map(eta)
            .collect();
    ideals.sort_unstable();
    Ok(ideals)
}

/// One orbit of a toggle word acting on ideals, rotated to start at the
/// smallest member.
#[derive(Clone, PartialEq, Eq)]
pub struct IdealOrbit {
    word: ToggleWord,
    states: Vec<OrderIdeal>,
}

impl IdealOrbit {
    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn word(&self) -> &ToggleWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn states(&self) -> &[OrderIdeal] {
        &self.states
    }

    pub fn min_state(&self) -> OrderIdeal {
        self.states[0]
    }

    pub fn contains(&self, ideal: &OrderIdeal) -> bool {
        self.states.contains(ideal)
    }

    /// Entry `j-1` counts the states containing `a_j`.
    pub fn column_sums(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|j| self.states.iter().filter(|s| s.contains(j)).count())
            .collect()
    }
}

impl fmt::Debug for IdealOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealOrbit(len={}, min={})", self.len(), self.states[0])
    }
}

/// The orbit of one ideal under a word of ideal toggles.
pub fn ideal_orbit_of(ideal: &OrderIdeal, w: &ToggleWord) -> IdealOrbit {
    let mut states = vec![*ideal];
    let mut cur = apply_ideal_word(ideal, w);
    while cur != *ideal {
        states.push(cur);
        cur = apply_ideal_word(&cur, w);
    }
    let min_at = states
        .iter()
        .enumerate()
        .min_by_key(|(_, s)| *s)
        .map(|(i, _)| i)
        .expect("an orbit has at least one state");
    states.rotate_left(min_at);
    IdealOrbit {
        word: w.clone(),
        states,
    }
}

/// Partition of all ideals into orbits of `w`, ordered by smallest member.
pub fn all_ideal_orbits(n: usize, w: &ToggleWord) -> Result<Vec<IdealOrbit>> {
    all_ideal_orbits_with_limit(n, w, crate::indep::DEFAULT_MAX_N)
}

/// [`all_ideal_orbits`] with a caller-chosen capacity guard.
pub fn all_ideal_orbits_with_limit(
    n: usize,
    w: &ToggleWord,
    max_n: usize,
) -> Result<Vec<IdealOrbit>> {
    if w.n() != n {
        return Err(Error::Parse(format!(
            "word is on {} elements, expected {n}",
            w.n()
        )));
    }
    let ideals = enumerate_ideals_with_limit(n, max_n)?;
    let masks: Vec<u64> = ideals.iter().map(|i| i.mask()).collect();
    let cycles = partition_masks(&masks, |m| {
        apply_ideal_word(&OrderIdeal { n, bits: m }, w).mask()
    });
    Ok(cycles
        .into_iter()
        .map(|cycle| IdealOrbit {
            word: w.clone(),
            states: cycle
                .into_iter()
                .map(|m| OrderIdeal { n, bits: m })
                .collect(),
        })
        .collect())
}

/// Exact mean of a statistic over one ideal orbit, reading coefficient `j`
/// as the weight of the indicator of `a_j`.
pub fn ideal_orbit_average(orbit: &IdealOrbit, f: &Statistic) -> Rat {
    let total: Rat = orbit
        .states()
        .iter()
        .map(|s| {
            (1..=orbit.n())
                .filter(|&j| s.contains(j))
                .map(|j| f.coefficients()[j - 1])
                .sum::<Rat>()
        })
        .sum();
    total / Rat::from_integer(orbit.len() as i128)
}

/// Homomesy check on the ideal side, with the same first-two-witness rule as
/// the independent-set version.
pub fn check_ideal_homomesy(
    n: usize,
    w: &ToggleWord,
    f: &Statistic,
) -> Result<HomomesyVerdict<IdealOrbit>> {
    if f.n() != n {
        return Err(Error::Parse(format!(
            "statistic is on {} elements, expected {n}",
            f.n()
        )));
    }
    let orbits = all_ideal_orbits(n, w)?;
    Ok(homomesy_over(orbits, |o| ideal_orbit_average(o, f)))
}

/// Checks `eta(toggle_i(s)) = ideal_toggle_i(eta(s))` for every state and
/// vertex; returns the number of `(state, vertex)` pairs verified.
pub fn verify_eta_equivariance(n: usize) -> Result<usize> {
    let mut checked = 0;
    for s in enumerate_independent_sets(n)? {
        for i in 1..=n {
            let lhs = eta(&s.toggle(i)?);
            let rhs = eta(&s).toggle(i)?;
            if lhs != rhs {
                return Err(Error::Parse(format!(
                    "equivariance fails at state {s}, vertex {i}"
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
