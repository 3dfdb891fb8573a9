//! Snake decomposition of sweep-orbit boards and the composition calculus
//! that reconstructs orbits and predicts their sizes.
//!
//! In an orbit board of the left-to-right sweep, the 1-cells split into
//! chains that enter at column 1 and leave at column n, moving either two
//! columns right within a row or one step diagonally right-and-down. Reading
//! those moves as parts 2 and 1 gives a composition of `n - 1` per snake,
//! and the multiset of compositions of an orbit is a single rotation class.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::cyclic;
use crate::error::{Error, Result};
use crate::indep::{IndependentSet, DEFAULT_MAX_N};
use crate::orbits::{Orbit, OrbitBoard};
use crate::word::ToggleWord;

/// A composition into parts 1 and 2, encoding one snake: part 2 is a move two
/// columns right, part 1 a move one column right and one row down.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnakeComposition {
    parts: Vec<u8>,
}

impl SnakeComposition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parse("a composition needs at least one part".into()));
        }
        if parts.iter().any(|&p| p != 1 && p != 2) {
            return Err(Error::Parse("composition parts must be 1 or 2".into()));
        }
        Ok(SnakeComposition { parts })
    }

    /// Parses a digit string such as `"221121"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                other => Err(Error::Parse(format!("bad composition digit {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        SnakeComposition::new(parts)
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts; a snake composition for the `n`-vertex path sums to
    /// `n - 1`.
    pub fn total(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The ambient vertex count `total + 1`.
    pub fn ambient_n(&self) -> usize {
        self.total() + 1
    }

    /// Number of parts equal to 1.
    pub fn n1(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Number of parts equal to 2.
    pub fn n2(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 2).count()
    }

    /// How many times the smallest repeated segment repeats; 1 means
    /// aperiodic.
    pub fn psi(&self) -> usize {
        self.parts.len() / cyclic::smallest_period(&self.parts)
    }

    pub fn is_aperiodic(&self) -> bool {
        self.psi() == 1
    }

    /// Left cyclic rotation: the composition of the next snake down the
    /// board.
    pub fn next_composition(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.rotate_left(1);
        SnakeComposition { parts }
    }

    /// Row offset from this snake's start to the next snake's start: 3 when
    /// the composition starts with 1, otherwise 2.
    pub fn next_start_offset(&self) -> usize {
        if self.parts[0] == 1 {
            3
        } else {
            2
        }
    }

    /// The parts in reverse order.
    pub fn reversed(&self) -> Self {
        SnakeComposition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    /// Canonical representative of the rotation class: the lexicographically
    /// least rotation.
    pub fn canonical(&self) -> Self {
        SnakeComposition {
            parts: cyclic::least_rotation(&self.parts),
        }
    }

    pub fn cyclically_equivalent(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Whether the reversed composition is a rotation of the original; via
    /// the orbit bijection this is exactly reversibility of the orbit.
    pub fn is_reversible_class(&self) -> bool {
        self.reversed().canonical() == self.canonical()
    }

    /// Size of the orbit this composition generates: `(3*N1 + 2*N2) / psi`.
    pub fn orbit_size(&self) -> usize {
        (3 * self.n1() + 2 * self.n2()) / self.psi()
    }
}

impl fmt::Display for SnakeComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.parts {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SnakeComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SnakeComposition({self})")
    }
}

/// One snake of an orbit board: its cells in travel order. Rows are stored
/// unreduced (monotonically nondecreasing from the start row); reduce modulo
/// the orbit length to get board coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snake {
    start_row: usize,
    cells: Vec<(usize, usize)>,
    composition: SnakeComposition,
}

impl Snake {
    pub fn start_row(&self) -> usize {
        self.start_row
    }

    /// `(row, column)` cells with unreduced rows.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Cells reduced to board coordinates.
    pub fn board_cells(&self, orbit_len: usize) -> Vec<(usize, usize)> {
        self.cells
            .iter()
            .map(|&(r, c)| (r % orbit_len, c))
            .collect()
    }

    pub fn composition(&self) -> &SnakeComposition {
        &self.composition
    }
}

/// Splits the 1-cells of a sweep-orbit board into snakes, ordered by start
/// row. Fails when the board was not generated by the left-to-right sweep,
/// in which case the chain rules break down.
pub fn snake_decompose(board: &OrbitBoard<'_>) -> Result<Vec<Snake>> {
    let n = board.n() as i64;
    let len = board.len();
    let mut snakes = Vec::new();
    let mut covered: HashSet<(usize, usize)> = HashSet::new();
    for start in 0..len {
        if board.s(start as i64, 1) == 0 {
            continue;
        }
        let mut cells = vec![(start, 1usize)];
        let mut parts = Vec::new();
        let (mut row, mut col) = (start as i64, 1i64);
        while col < n {
            let two_right = board.s(row, col + 2) == 1;
            let diagonal = board.s(row + 1, col + 1) == 1;
            match (two_right, diagonal) {
                (true, false) => {
                    parts.push(2);
                    col += 2;
                }
                (false, true) => {
                    parts.push(1);
                    row += 1;
                    col += 1;
                }
                (both, _) => {
                    let which = if both { "both" } else { "neither" };
                    return Err(Error::NotSweepBoard(format!(
                        "{which} successor cell of ({row},{col}) is set"
                    )));
                }
            }
            cells.push((row as usize, col as usize));
        }
        for &(r, c) in &cells {
            if !covered.insert((r % len, c)) {
                return Err(Error::NotSweepBoard(format!(
                    "cell ({},{c}) lies on two snakes",
                    r % len
                )));
            }
        }
        snakes.push(Snake {
            start_row: start,
            cells,
            composition: SnakeComposition::new(parts)?,
        });
    }
    let total_ones: usize = board.rows().map(|s| s.vertices().len()).sum();
    if covered.len() != total_ones {
        return Err(Error::NotSweepBoard(format!(
            "snakes cover {} cells but the board has {total_ones} ones",
            covered.len()
        )));
    }
    Ok(snakes)
}

/// Rebuilds the unique sweep orbit containing a snake with composition `c`,
/// together with the state laid on the seed row. Row 0 carries the seed
/// snake's head; successive snakes start `2` or `3` rows further down with
/// the rotated composition, and the board closes when the seed composition
/// recurs.
pub fn reconstruct_orbit(c: &SnakeComposition) -> (Orbit, IndependentSet) {
    let n = c.ambient_n();
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut comp = c.clone();
    let mut row = 0usize;
    loop {
        let (mut r, mut col) = (row, 1usize);
        cells.push((r, col));
        for &p in comp.parts() {
            match p {
                2 => col += 2,
                _ => {
                    r += 1;
                    col += 1;
                }
            }
            cells.push((r, col));
        }
        row += comp.next_start_offset();
        comp = comp.next_composition();
        if comp == *c {
            break;
        }
    }
    let orbit_len = row;
    let mut masks = vec![0u64; orbit_len];
    for (r, col) in cells {
        masks[r % orbit_len] |= 1 << (n - col);
    }
    let states: Vec<IndependentSet> = masks
        .iter()
        .map(|&m| {
            IndependentSet::new(n, m).expect("snake cells never put two adjacent vertices in a row")
        })
        .collect();
    let phi = ToggleWord::sweep(n);
    for i in 0..orbit_len {
        assert_eq!(
            phi.apply(&states[i]),
            states[(i + 1) % orbit_len],
            "reconstructed board is not a sweep orbit"
        );
    }
    let seed = states[0];
    (Orbit::canonical(phi, states), seed)
}

/// The sweep orbit generated by composition `c`; its length equals
/// [`SnakeComposition::orbit_size`].
pub fn orbit_from_composition(c: &SnakeComposition) -> Orbit {
    reconstruct_orbit(c).0
}

/// Canonical representatives of all rotation classes of compositions of
/// `total` into parts 1 and 2, in lexicographic order.
pub fn composition_classes(total: usize) -> Vec<SnakeComposition> {
    let mut classes = BTreeSet::new();
    let mut parts: Vec<u8> = Vec::new();
    fn go(remaining: usize, parts: &mut Vec<u8>, classes: &mut BTreeSet<SnakeComposition>) {
        if remaining == 0 {
            classes.insert(
                SnakeComposition {
                    parts: parts.clone(),
                }
                .canonical(),
            );
            return;
        }
        for p in [1u8, 2u8] {
            if remaining >= p as usize {
                parts.push(p);
                go(remaining - p as usize, parts, classes);
                parts.pop();
            }
        }
    }
    go(total, &mut parts, &mut classes);
    classes.into_iter().collect()
}

/// Orbit sizes on the `n`-vertex path predicted from compositions alone:
/// one size per rotation class of compositions of `n - 1`. Sorted ascending;
/// equals the size multiset of the actual sweep-orbit partition.
pub fn orbit_sizes_for_n(n: usize) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(Error::TooSmall { n });
    }
    if n > DEFAULT_MAX_N {
        return Err(Error::Capacity {
            n,
            max: DEFAULT_MAX_N,
        });
    }
    let mut sizes: Vec<usize> = composition_classes(n - 1)
        .iter()
        .map(|c| c.orbit_size())
        .collect();
    sizes.sort_unstable();
    Ok(sizes)
}

/// One row of the orbit-size classification table: an aperiodic rotation
/// class of a composition of the orbit size into parts 2 and 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeClass {
    /// The orbit size being classified.
    pub size: usize,
    /// Class representative as parts over {2, 3}, rotated to lead with the
    /// largest prefix (the table layout).
    pub class: Vec<u8>,
    /// The repeating snake-composition segment (3 becomes 1, 2 stays 2).
    pub snake_period: SnakeComposition,
    /// An orbit of this size exists on the `n`-vertex path exactly when
    /// `n = 1 (mod modulus)`.
    pub modulus: usize,
}

/// Classifies which paths carry an orbit of size `m`: one entry per aperiodic
/// rotation class of compositions of `m` into parts 2 and 3, sorted by
/// modulus then representative. The number of entries with
/// `n = 1 (mod modulus)` is the number of size-`m` orbits on that path.
pub fn sizes_table(m: usize) -> Vec<SizeClass> {
    let mut reps: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut parts: Vec<u8> = Vec::new();
    fn go(remaining: usize, parts: &mut Vec<u8>, reps: &mut BTreeSet<Vec<u8>>) {
        if remaining == 0 {
            if cyclic::smallest_period(parts) == parts.len() {
                reps.insert(cyclic::least_rotation(parts));
            }
            return;
        }
        for p in [2u8, 3u8] {
            if remaining >= p as usize {
                parts.push(p);
                go(remaining - p as usize, parts, reps);
                parts.pop();
            }
        }
    }
    go(m, &mut parts, &mut reps);
    let mut rows: Vec<SizeClass> = reps
        .into_iter()
        .map(|rep| {
            let threes = rep.iter().filter(|&&p| p == 3).count();
            let twos = rep.len() - threes;
            let display = cyclic::greatest_rotation(&rep);
            let snake_period = SnakeComposition::new(
                display
                    .iter()
                    .map(|&p| if p == 3 { 1 } else { 2 })
                    .collect(),
            )
            .expect("period is nonempty");
            SizeClass {
                size: m,
                class: display,
                snake_period,
                modulus: threes + 2 * twos,
            }
        })
        .collect();
    rows.sort_by(|a, b| {
        a.modulus
            .cmp(&b.modulus)
            .then_with(|| a.class.cmp(&b.class))
    });
    rows
}
