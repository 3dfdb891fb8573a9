//! Orbits of toggle words, orbit boards, vertex-indicator statistics, and
//! exact homomesy verification.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use serde_json::json;

use crate::error::{Error, Result};
use crate::indep::IndependentSet;
use crate::word::ToggleWord;

/// Exact rational scalar used for all statistics and averages. Verdicts never
/// touch floating point.
pub type Rat = Ratio<i128>;

/// One orbit of a toggle word, stored as the cyclic sequence
/// `S^0, S^1, ..., S^(l-1)` rotated so that `S^0` is the lexicographically
/// smallest member.
#[derive(Clone, PartialEq, Eq)]
pub struct Orbit {
    word: ToggleWord,
    states: Vec<IndependentSet>,
}

impl Orbit {
    /// The orbit of `s` under `w`, found by iterating `w` until `s` recurs.
    pub fn orbit_of(s: &IndependentSet, w: &ToggleWord) -> Orbit {
        let mut states = vec![*s];
        let mut cur = w.apply(s);
        while cur != *s {
            states.push(cur);
            cur = w.apply(&cur);
        }
        Orbit::canonical(w.clone(), states)
    }

    /// Rotates a state cycle so the smallest member leads. The caller
    /// guarantees `w` maps each state to the next, cyclically.
    pub(crate) fn canonical(word: ToggleWord, mut states: Vec<IndependentSet>) -> Orbit {
        let min_at = states
            .iter()
            .enumerate()
            .min_by_key(|(_, s)| *s)
            .map(|(i, _)| i)
            .expect("an orbit has at least one state");
        states.rotate_left(min_at);
        Orbit { word, states }
    }

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

    pub fn states(&self) -> &[IndependentSet] {
        &self.states
    }

    /// The lexicographically smallest member.
    pub fn min_state(&self) -> IndependentSet {
        self.states[0]
    }

    pub fn contains(&self, s: &IndependentSet) -> bool {
        self.states.contains(s)
    }

    /// Column sums of the orbit board: entry `j-1` counts the states that
    /// contain vertex `j`.
    pub fn column_sums(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|j| self.states.iter().filter(|s| s.contains(j)).count())
            .collect()
    }

    /// Whether some member's reverse also lies in the orbit. For sweep
    /// orbits this is equivalent to every member's reverse lying in it.
    pub fn is_reversible(&self) -> bool {
        let masks: HashSet<u64> = self.states.iter().map(|s| s.mask()).collect();
        self.states
            .iter()
            .any(|s| masks.contains(&s.reverse().mask()))
    }

    /// Number of members equal to their own reverse.
    pub fn count_symmetrical(&self) -> usize {
        self.states.iter().filter(|s| s.is_symmetrical()).count()
    }

    /// Board view starting at the canonical (smallest) state.
    pub fn board(&self) -> OrbitBoard<'_> {
        OrbitBoard {
            orbit: self,
            offset: 0,
        }
    }

    /// Board view whose row 0 is `start`, if `start` belongs to the orbit.
    pub fn board_from(&self, start: &IndependentSet) -> Option<OrbitBoard<'_>> {
        let offset = self.states.iter().position(|s| s == start)?;
        Some(OrbitBoard {
            orbit: self,
            offset,
        })
    }

    /// JSON value with the shape
    /// `{ "n": .., "word": [..], "states": ["1010100", ..], "column_sums": [..] }`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n(),
            "word": self.word.letters(),
            "states": self.states.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "column_sums": self.column_sums(),
        })
    }
}

impl fmt::Debug for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orbit(len={}, min={})", self.len(), self.states[0])
    }
}

/// A cyclic matrix view of an orbit: `s(i, j)` is 1 when vertex `j` belongs
/// to the row-`i` state, with rows read modulo the orbit length and
/// out-of-bounds columns reading 0.
#[derive(Clone, Copy)]
pub struct OrbitBoard<'a> {
    orbit: &'a Orbit,
    offset: usize,
}

impl<'a> OrbitBoard<'a> {
    pub fn orbit(&self) -> &'a Orbit {
        self.orbit
    }

    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> usize {
        self.orbit.n()
    }

    /// Row `i` of this view (wrapping), as a state.
    pub fn row(&self, i: i64) -> IndependentSet {
        let l = self.orbit.len() as i64;
        let idx = (i.rem_euclid(l) as usize + self.offset) % self.orbit.len();
        self.orbit.states[idx]
    }

    /// Matrix accessor with wrapped rows and zero-padded columns.
    pub fn s(&self, i: i64, j: i64) -> u8 {
        if j < 1 || j > self.n() as i64 {
            return 0;
        }
        u8::from(self.row(i).contains(j as usize))
    }

    /// Rows in board order starting at this view's row 0.
    pub fn rows(&self) -> impl Iterator<Item = IndependentSet> + '_ {
        (0..self.len() as i64).map(move |i| self.row(i))
    }

    /// CSV rendering: a header row `1..n`, then one 0/1 row per state.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = (1..=self.n()).map(|j| j.to_string()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for state in self.rows() {
            let cells: Vec<&str> = (1..=self.n())
                .map(|j| if state.contains(j) { "1" } else { "0" })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Partition of a state space into orbits of a step map, each orbit rotated
/// to start at its smallest mask, listed in increasing order of that mask.
///
/// `all` must be sorted ascending; the sweep then meets every orbit at its
/// minimum first.
pub(crate) fn partition_masks(all: &[u64], step: impl Fn(u64) -> u64) -> Vec<Vec<u64>> {
    let mut visited: HashSet<u64> = HashSet::with_capacity(all.len());
    let mut orbits = Vec::new();
    for &start in all {
        if visited.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        visited.insert(start);
        let mut cur = step(start);
        while cur != start {
            visited.insert(cur);
            cycle.push(cur);
            cur = step(cur);
        }
        orbits.push(cycle);
    }
    orbits
}

/// All orbits of `w` on the independent sets of the `n`-vertex path,
/// ordered by smallest member. Their sizes add up to `F(n+2)`.
pub fn all_orbits(n: usize, w: &ToggleWord) -> Result<Vec<Orbit>> {
    all_orbits_with_limit(n, w, crate::indep::DEFAULT_MAX_N)
}

/// [`all_orbits`] with a caller-chosen capacity guard.
pub fn all_orbits_with_limit(n: usize, w: &ToggleWord, max_n: usize) -> Result<Vec<Orbit>> {
    if w.n() != n {
        return Err(Error::Parse(format!(
            "word is on {} vertices, expected {n}",
            w.n()
        )));
    }
    let sets = crate::indep::enumerate_independent_sets_with_limit(n, max_n)?;
    let masks: Vec<u64> = sets.iter().map(|s| s.mask()).collect();
    let cycles = partition_masks(&masks, |m| {
        w.apply(&IndependentSet::new(n, m).expect("orbit states stay independent"))
            .mask()
    });
    Ok(cycles
        .into_iter()
        .map(|cycle| Orbit {
            word: w.clone(),
            states: cycle
                .into_iter()
                .map(|m| IndependentSet::new(n, m).expect("orbit states stay independent"))
                .collect(),
        })
        .collect())
}

/// Same partition as [`all_orbits`], computed by sharding start states over
/// `threads` worker threads. Each orbit is reported exactly once, by the
/// shard owning its smallest member, so the merged result is identical for
/// every thread count.
pub fn all_orbits_parallel(n: usize, w: &ToggleWord, threads: usize) -> Result<Vec<Orbit>> {
    all_orbits_parallel_with_limit(n, w, threads, crate::indep::DEFAULT_MAX_N)
}

/// [`all_orbits_parallel`] with a caller-chosen capacity guard.
pub fn all_orbits_parallel_with_limit(
    n: usize,
    w: &ToggleWord,
    threads: usize,
    max_n: usize,
) -> Result<Vec<Orbit>> {
    if threads <= 1 {
        return all_orbits_with_limit(n, w, max_n);
    }
    if w.n() != n {
        return Err(Error::Parse(format!(
            "word is on {} vertices, expected {n}",
            w.n()
        )));
    }
    let sets = crate::indep::enumerate_independent_sets_with_limit(n, max_n)?;
    let chunk = sets.len().div_ceil(threads);
    let mut collected: Vec<Vec<Orbit>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for shard in sets.chunks(chunk) {
            let w = &w;
            handles.push(scope.spawn(move || {
                let mut local = Vec::new();
                'starts: for s in shard {
                    let mut states = vec![*s];
                    let mut cur = w.apply(s);
                    while cur != *s {
                        if cur < *s {
                            // A smaller member owns this orbit.
                            continue 'starts;
                        }
                        states.push(cur);
                        cur = w.apply(&cur);
                    }
                    local.push(Orbit {
                        word: (*w).clone(),
                        states,
                    });
                }
                local
            }));
        }
        for h in handles {
            collected.push(h.join().expect("orbit worker panicked"));
        }
    });
    let mut orbits: Vec<Orbit> = collected.into_iter().flatten().collect();
    orbits.sort_by_key(|o| o.min_state());
    Ok(orbits)
}

/// A statistic `sum_j c_j * chi_j` over the vertex indicator functions, with
/// exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Statistic {
    coeffs: Vec<Rat>,
}

impl Statistic {
    pub fn zero(n: usize) -> Self {
        Statistic {
            coeffs: vec![Rat::from_integer(0); n],
        }
    }

    /// The indicator of vertex `j`.
    pub fn chi(n: usize, j: usize) -> Result<Self> {
        if j < 1 || j > n {
            return Err(Error::VertexOutOfRange { index: j, n });
        }
        let mut coeffs = vec![Rat::from_integer(0); n];
        coeffs[j - 1] = Rat::from_integer(1);
        Ok(Statistic { coeffs })
    }

    pub fn from_coefficients(coeffs: Vec<Rat>) -> Self {
        Statistic { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Parses forms like `2x1+x2-x7` or `1/2x3-3x5`; whitespace is ignored.
    pub fn parse(n: usize, input: &str) -> Result<Self> {
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty statistic".into()));
        }
        if text == "0" {
            return Ok(Statistic::zero(n));
        }
        let bytes = text.as_bytes();
        let mut coeffs = vec![Rat::from_integer(0); n];
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1i128;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            }
            let numer = scan_number(bytes, &mut pos);
            let denom = if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                match scan_number(bytes, &mut pos) {
                    Some(d) if d != 0 => Some(d),
                    _ => return Err(Error::Parse(format!("bad denominator in {input:?}"))),
                }
            } else {
                None
            };
            if pos >= bytes.len() || bytes[pos] != b'x' {
                return Err(Error::Parse(format!(
                    "expected a term like `2x1` or `1/2x3` in {input:?}"
                )));
            }
            pos += 1;
            let index = scan_number(bytes, &mut pos)
                .ok_or_else(|| Error::Parse(format!("missing vertex index in {input:?}")))?;
            let j = index as usize;
            if j < 1 || j > n {
                return Err(Error::VertexOutOfRange { index: j, n });
            }
            let coeff = Rat::new(sign * numer.unwrap_or(1), denom.unwrap_or(1));
            coeffs[j - 1] += coeff;
        }
        Ok(Statistic { coeffs })
    }

    /// Exact value of the statistic on one state.
    pub fn evaluate(&self, s: &IndependentSet) -> Rat {
        assert_eq!(
            s.n(),
            self.n(),
            "state and statistic have different vertex counts"
        );
        (1..=self.n())
            .filter(|&j| s.contains(j))
            .map(|j| self.coeffs[j - 1])
            .sum()
    }

    /// Text form using the same mini-grammar accepted by [`parse`](Self::parse).
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.numer() == &0 {
                continue;
            }
            if !out.is_empty() && c.numer() > &0 {
                out.push('+');
            }
            if c == &Rat::from_integer(-1) {
                out.push('-');
            } else if c != &Rat::from_integer(1) {
                out.push_str(&c.to_string());
            }
            out.push('x');
            out.push_str(&(idx + 1).to_string());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn scan_number(bytes: &[u8], pos: &mut usize) -> Option<i128> {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return None;
    }
    std::str::from_utf8(&bytes[start..*pos]).ok()?.parse().ok()
}

impl Add for Statistic {
    type Output = Statistic;
    fn add(self, rhs: Statistic) -> Statistic {
        assert_eq!(self.n(), rhs.n());
        Statistic {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for Statistic {
    type Output = Statistic;
    fn sub(self, rhs: Statistic) -> Statistic {
        assert_eq!(self.n(), rhs.n());
        Statistic {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for Statistic {
    type Output = Statistic;
    fn neg(self) -> Statistic {
        Statistic {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul<i128> for Statistic {
    type Output = Statistic;
    fn mul(self, rhs: i128) -> Statistic {
        Statistic {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| a * Rat::from_integer(rhs))
                .collect(),
        }
    }
}

/// Exact mean of `f` over the states of an orbit.
pub fn orbit_average(orbit: &Orbit, f: &Statistic) -> Rat {
    let total: Rat = orbit.states().iter().map(|s| f.evaluate(s)).sum();
    total / Rat::from_integer(orbit.len() as i128)
}

/// Outcome of a homomesy check, generic over the orbit representation so the
/// zigzag side can reuse it.
#[derive(Clone, Debug)]
pub enum HomomesyVerdict<O> {
    /// Every orbit has the same average.
    Homomesic { constant: Rat },
    /// Two witness orbits with different averages, the first two in
    /// canonical orbit order.
    NotHomomesic { first: (O, Rat), second: (O, Rat) },
}

impl<O> HomomesyVerdict<O> {
    pub fn is_homomesic(&self) -> bool {
        matches!(self, HomomesyVerdict::Homomesic { .. })
    }

    pub fn constant(&self) -> Option<Rat> {
        match self {
            HomomesyVerdict::Homomesic { constant } => Some(*constant),
            HomomesyVerdict::NotHomomesic { .. } => None,
        }
    }
}

pub type HomomesyReport = HomomesyVerdict<Orbit>;

pub(crate) fn homomesy_over<O>(orbits: Vec<O>, average: impl Fn(&O) -> Rat) -> HomomesyVerdict<O> {
    let averages: Vec<Rat> = orbits.iter().map(&average).collect();
    let reference = averages[0];
    match averages.iter().position(|a| *a != reference) {
        None => HomomesyVerdict::Homomesic {
            constant: reference,
        },
        Some(at) => {
            let mut it = orbits.into_iter();
            let first = it.next().expect("at least one orbit");
            let second = it.nth(at - 1).expect("witness index in range");
            HomomesyVerdict::NotHomomesic {
                first: (first, reference),
                second: (second, averages[at]),
            }
        }
    }
}

/// Checks whether `f` averages to one constant over every orbit of `w`.
/// On failure the report carries the first two disagreeing orbits in
/// canonical order.
pub fn check_homomesy(n: usize, w: &ToggleWord, f: &Statistic) -> Result<HomomesyReport> {
    if f.n() != n {
        return Err(Error::Parse(format!(
            "statistic is on {} vertices, expected {n}",
            f.n()
        )));
    }
    let orbits = all_orbits(n, w)?;
    Ok(homomesy_over(orbits, |o| orbit_average(o, f)))
}
