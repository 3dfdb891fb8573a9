//! Toggle words, Coxeter words, and their correspondence with orientations
//! of the path graph.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::indep::{enumerate_independent_sets, IndependentSet};

/// A finite product of toggles, written left to right but applied right to
/// left: the last letter of `word` acts first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ToggleWord {
    n: usize,
    word: Vec<usize>,
}

impl ToggleWord {
    pub fn new(n: usize, word: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n });
        }
        for &i in &word {
            if i < 1 || i > n {
                return Err(Error::VertexOutOfRange { index: i, n });
            }
        }
        Ok(ToggleWord { n, word })
    }

    /// The left-to-right sweep: toggles vertex 1 first, then 2, ..., then n.
    pub fn sweep(n: usize) -> Self {
        ToggleWord {
            n,
            word: (1..=n).rev().collect(),
        }
    }

    /// Parses either the token `phi` (the left-to-right sweep) or a
    /// comma-separated list of vertex indices in written order, e.g.
    /// `"3,4,2,6,7,5,1"`.
    pub fn parse(n: usize, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.eq_ignore_ascii_case("phi") {
            return Ok(ToggleWord::sweep(n));
        }
        if spec.is_empty() {
            return ToggleWord::new(n, Vec::new());
        }
        let mut word = Vec::new();
        for tok in spec.split(',') {
            let idx: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex index {:?} in word", tok.trim())))?;
            word.push(idx);
        }
        ToggleWord::new(n, word)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The letters in written order (leftmost first).
    pub fn letters(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Applies the word to `s`, folding toggles from the last letter to the
    /// first. Panics if `s` lives on a different path graph.
    pub fn apply(&self, s: &IndependentSet) -> IndependentSet {
        assert_eq!(s.n(), self.n, "state and word have different vertex counts");
        self.word
            .iter()
            .rev()
            .fold(*s, |acc, &i| acc.toggle_unchecked(i))
    }

    /// The inverse word: since every toggle is an involution, this is just
    /// the letters in reverse order.
    pub fn inverse(&self) -> Self {
        ToggleWord {
            n: self.n,
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// The concatenation `self · other` (so `other` acts first).
    pub fn then_left(&self, other: &ToggleWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Parse(
                "cannot concatenate words on different n".into(),
            ));
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(ToggleWord { n: self.n, word })
    }

    /// Whether the two words act identically on every independent set.
    /// Distinct written forms can be equal as maps because non-adjacent
    /// toggles commute.
    pub fn same_action(&self, other: &ToggleWord) -> Result<bool> {
        if self.n != other.n {
            return Ok(false);
        }
        for s in enumerate_independent_sets(self.n)? {
            if self.apply(&s) != other.apply(&s) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The least `m >= 1` with `w^m` the identity map, computed as the lcm
    /// of the orbit sizes of the action.
    pub fn element_order(&self) -> Result<u128> {
        let orbits = crate::orbits::all_orbits(self.n, self)?;
        let mut order: u128 = 1;
        for orbit in &orbits {
            let len = orbit.len() as u128;
            let g = num_integer::gcd(order, len);
            order = (order / g)
                .checked_mul(len)
                .ok_or_else(|| Error::Overflow("element order".into()))?;
        }
        Ok(order)
    }
}

impl fmt::Display for ToggleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for ToggleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ToggleWord(n={}, {})", self.n, self)
    }
}

/// A toggle word that uses every vertex exactly once.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterWord(ToggleWord);

impl CoxeterWord {
    pub fn new(n: usize, word: Vec<usize>) -> Result<Self> {
        let inner = ToggleWord::new(n, word)?;
        let distinct: HashSet<usize> = inner.word.iter().copied().collect();
        if inner.word.len() != n || distinct.len() != n {
            return Err(Error::NotAPermutation(inner.to_string()));
        }
        Ok(CoxeterWord(inner))
    }

    pub fn sweep(n: usize) -> Self {
        CoxeterWord(ToggleWord::sweep(n))
    }

    pub fn parse(n: usize, spec: &str) -> Result<Self> {
        let inner = ToggleWord::parse(n, spec)?;
        CoxeterWord::new(n, inner.word)
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn letters(&self) -> &[usize] {
        self.0.letters()
    }

    pub fn word(&self) -> &ToggleWord {
        &self.0
    }

    pub fn into_word(self) -> ToggleWord {
        self.0
    }

    pub fn apply(&self, s: &IndependentSet) -> IndependentSet {
        self.0.apply(s)
    }

    pub fn same_action(&self, other: &CoxeterWord) -> Result<bool> {
        self.0.same_action(&other.0)
    }

    /// The orientation of the path graph encoding this word: the edge
    /// `{i, i+1}` points toward `i` exactly when the toggle at `i` appears to
    /// the right of the toggle at `i+1`. Commuting moves of the written form
    /// never swap an adjacent pair, so the orientation depends only on the
    /// group element.
    pub fn orientation(&self) -> Orientation {
        let n = self.n();
        let mut position = vec![0usize; n + 1];
        for (pos, &i) in self.letters().iter().enumerate() {
            position[i] = pos;
        }
        let dirs = (1..n)
            .map(|i| {
                if position[i] > position[i + 1] {
                    EdgeDirection::TowardLower
                } else {
                    EdgeDirection::TowardHigher
                }
            })
            .collect();
        Orientation { n, dirs }
    }

    /// A uniformly random Coxeter word drawn from the given generator.
    pub fn random<R: rand::Rng>(n: usize, rng: &mut R) -> Self {
        let mut word: Vec<usize> = (1..=n).collect();
        word.shuffle(rng);
        CoxeterWord(ToggleWord { n, word })
    }
}

impl fmt::Display for CoxeterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CoxeterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterWord(n={}, {})", self.n(), self.0)
    }
}

/// Deterministic sample of Coxeter words for a given seed.
pub fn random_coxeter_words(n: usize, count: usize, seed: u64) -> Vec<CoxeterWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| CoxeterWord::random(n, &mut rng))
        .collect()
}

/// Direction of one edge `{i, i+1}` of the path graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeDirection {
    TowardLower,
    TowardHigher,
}

/// An orientation of the path graph: one direction per edge `{i, i+1}`,
/// `i` in `1..=n-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Orientation {
    n: usize,
    dirs: Vec<EdgeDirection>,
}

impl Orientation {
    pub fn new(n: usize, dirs: Vec<EdgeDirection>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n });
        }
        if dirs.len() != n - 1 {
            return Err(Error::Parse(format!(
                "orientation on {n} vertices needs {} edges, got {}",
                n - 1,
                dirs.len()
            )));
        }
        Ok(Orientation { n, dirs })
    }

    /// The orientation of the left-to-right sweep: every edge toward its
    /// lower endpoint.
    pub fn all_toward_lower(n: usize) -> Self {
        Orientation {
            n,
            dirs: vec![EdgeDirection::TowardLower; n - 1],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Direction of edge `{e, e+1}` for `e` in `1..=n-1`.
    pub fn direction(&self, e: usize) -> EdgeDirection {
        self.dirs[e - 1]
    }

    fn points_away_from(&self, vertex: usize, edge: usize) -> bool {
        // Edge {edge, edge+1}; vertex is one of its endpoints.
        match self.dirs[edge - 1] {
            EdgeDirection::TowardLower => vertex == edge + 1,
            EdgeDirection::TowardHigher => vertex == edge,
        }
    }

    /// Vertices with every incident edge directed away (initial toggles).
    pub fn sources(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_source(v)).collect()
    }

    /// Vertices with every incident edge directed toward them (final
    /// toggles).
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.incident_edges(v).all(|e| self.points_away_from(v, e))
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.incident_edges(v).all(|e| !self.points_away_from(v, e))
    }

    fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> {
        let lo = if v > 1 { Some(v - 1) } else { None };
        let hi = if v < self.n { Some(v) } else { None };
        lo.into_iter().chain(hi)
    }

    /// Reverses every edge at `v`, turning a source into a sink or vice
    /// versa.
    pub fn flip_vertex(&self, v: usize) -> Result<Self> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange {
                index: v,
                n: self.n,
            });
        }
        let mut dirs = self.dirs.clone();
        for e in self.incident_edges(v) {
            dirs[e - 1] = match dirs[e - 1] {
                EdgeDirection::TowardLower => EdgeDirection::TowardHigher,
                EdgeDirection::TowardHigher => EdgeDirection::TowardLower,
            };
        }
        Ok(Orientation { n: self.n, dirs })
    }

    /// The canonical Coxeter word for this orientation: repeatedly remove the
    /// smallest-index vertex that is a source among the remaining vertices
    /// and write the removed vertices left to right. Every linear extension
    /// of the orientation yields the same group element; this fixes one
    /// representative deterministically.
    pub fn to_coxeter(&self) -> CoxeterWord {
        let n = self.n;
        let mut removed = vec![false; n + 1];
        let mut word = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (1..=n)
                .find(|&v| {
                    !removed[v]
                        && self.incident_edges(v).all(|e| {
                            let other = if e == v { v + 1 } else { v - 1 };
                            removed[other] || self.points_away_from(v, e)
                        })
                })
                .expect("an acyclic orientation always has a source");
            removed[v] = true;
            word.push(v);
        }
        CoxeterWord(ToggleWord { n, word })
    }

    /// ASCII rendering such as `1<-2<-3->4->5<-6->7`.
    pub fn ascii(&self) -> String {
        let mut out = String::new();
        for v in 1..=self.n {
            out.push_str(&v.to_string());
            if v < self.n {
                out.push_str(match self.dirs[v - 1] {
                    EdgeDirection::TowardLower => "<-",
                    EdgeDirection::TowardHigher => "->",
                });
            }
        }
        out
    }
}
