//! Closed-form counting formulas and the brute-force oracles that check
//! them.
//!
//! The formulas count independent sets, symmetrical sets, binary necklaces
//! and bracelets with no cyclic `11`, and sweep orbits. Every `oracle_*`
//! function recomputes the same quantity by direct enumeration; oracles are
//! for verification only and should never back production answers.

use std::collections::BTreeSet;

use crate::cyclic;
use crate::error::{Error, Result};
use crate::orbits::all_orbits;
use crate::snakes::SnakeComposition;
use crate::word::ToggleWord;

/// Fibonacci with `F(0) = 0`, `F(1) = 1`, overflow-checked.
pub fn fib(k: usize) -> Result<u128> {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..k {
        let next = a
            .checked_add(b)
            .ok_or_else(|| Error::Overflow(format!("F({k})")))?;
        a = b;
        b = next;
    }
    Ok(a)
}

/// Number of independent sets of the `n`-vertex path: `F(n+2)`.
pub fn count_independent_sets(n: usize) -> Result<u128> {
    fib(n + 2)
}

/// Number of symmetrical independent sets: `F(k+1)` on `2k` vertices and
/// `F(k+2)` on `2k-1` vertices.
pub fn count_symmetrical(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::TooSmall { n });
    }
    if n % 2 == 0 {
        fib(n / 2 + 1)
    } else {
        fib(n.div_ceil(2) + 2)
    }
}

/// Number of length-`len` binary strings with no `11` that do not both start
/// and end with 1: `F(len-1) + F(len+1)`. These are the strings that stay
/// `11`-free when read cyclically.
pub fn count_strings_no11_open(len: usize) -> Result<u128> {
    if len == 0 {
        return Err(Error::TooSmall { n: 0 });
    }
    Ok(fib(len - 1)? + fib(len + 1)?)
}

fn totient(n: u128) -> u128 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Number of binary necklaces of length `len` with no cyclic `11`, by the
/// divisor sum `(1/len) * sum_{d | len} totient(len/d) * (F(d-1) + F(d+1))`.
pub fn count_necklaces_no11(len: usize) -> Result<u128> {
    if len == 0 {
        return Err(Error::TooSmall { n: 0 });
    }
    let mut total: u128 = 0;
    for d in 1..=len {
        if len % d == 0 {
            let fixed = fib(d - 1)? + fib(d + 1)?;
            total = total
                .checked_add(totient((len / d) as u128) * fixed)
                .ok_or_else(|| Error::Overflow(format!("necklaces({len})")))?;
        }
    }
    debug_assert_eq!(total % len as u128, 0);
    Ok(total / len as u128)
}

/// Number of binary bracelets of length `len` with no cyclic `11`:
/// `(F(floor(len/2) + 2) + necklaces(len)) / 2`.
pub fn count_bracelets_no11(len: usize) -> Result<u128> {
    let sum = fib(len / 2 + 2)? + count_necklaces_no11(len)?;
    debug_assert_eq!(sum % 2, 0);
    Ok(sum / 2)
}

/// Number of `11`-free necklaces equal to their own reversal:
/// `F(floor(len/2) + 2)`.
pub fn count_self_reverse_necklaces(len: usize) -> Result<u128> {
    if len == 0 {
        return Err(Error::TooSmall { n: 0 });
    }
    fib(len / 2 + 2)
}

/// Number of sweep orbits on the `n`-vertex path: the necklace count at
/// length `n - 1`.
pub fn count_phi_orbits(n: usize) -> Result<u128> {
    if n < 2 {
        return Err(Error::TooSmall { n });
    }
    count_necklaces_no11(n - 1)
}

/// Number of reversible sweep orbits: `F(ceil(n/2) + 1)`.
pub fn count_reversible_orbits(n: usize) -> Result<u128> {
    if n < 2 {
        return Err(Error::TooSmall { n });
    }
    fib(n.div_ceil(2) + 1)
}

/// A rotation class of binary strings, identified by its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NecklaceClass {
    len: usize,
    representative: Vec<u8>,
    self_reverse: bool,
}

impl NecklaceClass {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The least rotation, as a 0/1 string.
    pub fn representative(&self) -> String {
        self.representative
            .iter()
            .map(|&b| if b == 1 { '1' } else { '0' })
            .collect()
    }

    /// Whether reversal maps the class to itself.
    pub fn is_self_reverse(&self) -> bool {
        self.self_reverse
    }
}

fn string_bits(len: usize, mask: u64) -> Vec<u8> {
    (0..len)
        .map(|i| (mask >> (len - 1 - i) & 1) as u8)
        .collect()
}

fn has_cyclic_11(bits: &[u8]) -> bool {
    let len = bits.len();
    if len == 1 {
        return bits[0] == 1;
    }
    (0..len).any(|i| bits[i] == 1 && bits[(i + 1) % len] == 1)
}

/// All `11`-free necklace classes of length `len`, by direct enumeration of
/// the `2^len` strings. Enumeration-grade; used for cross-checks and the
/// composition bijection.
pub fn necklace_classes_no11(len: usize) -> Result<Vec<NecklaceClass>> {
    if len == 0 {
        return Err(Error::TooSmall { n: 0 });
    }
    if len > 26 {
        return Err(Error::Capacity { n: len, max: 26 });
    }
    let mut reps: BTreeSet<Vec<u8>> = BTreeSet::new();
    for mask in 0u64..1 << len {
        let bits = string_bits(len, mask);
        if !has_cyclic_11(&bits) {
            reps.insert(cyclic::least_rotation(&bits));
        }
    }
    Ok(reps
        .into_iter()
        .map(|representative| {
            let reversed: Vec<u8> = representative.iter().rev().copied().collect();
            let self_reverse = cyclic::least_rotation(&reversed) == representative;
            NecklaceClass {
                len,
                representative,
                self_reverse,
            }
        })
        .collect())
}

/// Translates a `11`-free cyclic string starting with 0 into a composition
/// into parts 1 and 2: each `01` becomes a 2 and each remaining `0` a 1.
/// Strings starting with 1 have no corresponding composition.
pub fn necklace_to_composition(s: &str) -> Result<SnakeComposition> {
    let bits: Vec<u8> = s
        .chars()
        .map(|c| match c {
            '0' => Ok(0u8),
            '1' => Ok(1u8),
            other => Err(Error::Parse(format!("bad necklace character {other:?}"))),
        })
        .collect::<Result<Vec<u8>>>()?;
    if bits.is_empty() {
        return Err(Error::Parse("empty necklace string".into()));
    }
    if has_cyclic_11(&bits) {
        return Err(Error::Parse(format!("{s} contains a cyclic 11")));
    }
    if bits[0] == 1 {
        return Err(Error::Parse(format!(
            "{s} starts with 1 and has no corresponding composition"
        )));
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < bits.len() {
        if i + 1 < bits.len() && bits[i + 1] == 1 {
            parts.push(2);
            i += 2;
        } else {
            parts.push(1);
            i += 1;
        }
    }
    SnakeComposition::new(parts)
}

// ---------------------------------------------------------------------------
// Brute-force oracles.
// ---------------------------------------------------------------------------

const ORACLE_MAX_LEN: usize = 26;

fn oracle_guard(len: usize) -> Result<()> {
    if len == 0 {
        return Err(Error::TooSmall { n: 0 });
    }
    if len > ORACLE_MAX_LEN {
        return Err(Error::Capacity {
            n: len,
            max: ORACLE_MAX_LEN,
        });
    }
    Ok(())
}

/// Counts `11`-free strings of length `n` by filtering all `2^n` masks.
pub fn oracle_count_independent_sets(n: usize) -> Result<u128> {
    oracle_guard(n)?;
    Ok((0u64..1 << n).filter(|v| v & (v >> 1) == 0).count() as u128)
}

/// Counts palindromic `11`-free strings by filtering.
pub fn oracle_count_symmetrical(n: usize) -> Result<u128> {
    oracle_guard(n)?;
    Ok((0u64..1 << n)
        .filter(|v| v & (v >> 1) == 0)
        .filter(|&v| v.reverse_bits() >> (64 - n) == v)
        .count() as u128)
}

/// Counts `11`-free strings that do not both start and end with 1.
pub fn oracle_count_strings_no11_open(len: usize) -> Result<u128> {
    oracle_guard(len)?;
    let first = 1u64 << (len - 1);
    Ok((0u64..1 << len)
        .filter(|v| v & (v >> 1) == 0)
        .filter(|&v| !(v & first != 0 && v & 1 != 0))
        .count() as u128)
}

/// Counts cyclically-`11`-free necklaces by canonicalizing every string.
pub fn oracle_count_necklaces_no11(len: usize) -> Result<u128> {
    Ok(necklace_classes_no11(len)?.len() as u128)
}

/// Counts cyclically-`11`-free bracelets by canonicalizing under rotation
/// and reversal.
pub fn oracle_count_bracelets_no11(len: usize) -> Result<u128> {
    oracle_guard(len)?;
    let mut reps: BTreeSet<Vec<u8>> = BTreeSet::new();
    for mask in 0u64..1 << len {
        let bits = string_bits(len, mask);
        if !has_cyclic_11(&bits) {
            let fwd = cyclic::least_rotation(&bits);
            let rev: Vec<u8> = bits.iter().rev().copied().collect();
            let bwd = cyclic::least_rotation(&rev);
            reps.insert(fwd.min(bwd));
        }
    }
    Ok(reps.len() as u128)
}

/// Counts `11`-free necklaces closed under reversal.
pub fn oracle_count_self_reverse_necklaces(len: usize) -> Result<u128> {
    Ok(necklace_classes_no11(len)?
        .iter()
        .filter(|c| c.is_self_reverse())
        .count() as u128)
}

/// Counts general binary necklaces (no independence constraint).
pub fn oracle_count_necklaces_general(len: usize) -> Result<u128> {
    oracle_guard(len)?;
    let mut reps: BTreeSet<Vec<u8>> = BTreeSet::new();
    for mask in 0u64..1 << len {
        reps.insert(cyclic::least_rotation(&string_bits(len, mask)));
    }
    Ok(reps.len() as u128)
}

/// Counts general binary bracelets.
pub fn oracle_count_bracelets_general(len: usize) -> Result<u128> {
    oracle_guard(len)?;
    let mut reps: BTreeSet<Vec<u8>> = BTreeSet::new();
    for mask in 0u64..1 << len {
        let bits = string_bits(len, mask);
        let fwd = cyclic::least_rotation(&bits);
        let rev: Vec<u8> = bits.iter().rev().copied().collect();
        let bwd = cyclic::least_rotation(&rev);
        reps.insert(fwd.min(bwd));
    }
    Ok(reps.len() as u128)
}

/// Counts sweep orbits by actually partitioning the state space.
pub fn oracle_count_phi_orbits(n: usize) -> Result<u128> {
    Ok(all_orbits(n, &ToggleWord::sweep(n))?.len() as u128)
}

/// Counts reversible sweep orbits from the actual partition.
pub fn oracle_count_reversible_orbits(n: usize) -> Result<u128> {
    Ok(all_orbits(n, &ToggleWord::sweep(n))?
        .iter()
        .filter(|o| o.is_reversible())
        .count() as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snakes::composition_classes;

    #[test]
    fn fibonacci_indexing() {
        let values: Vec<u128> = (0..=10).map(|k| fib(k).unwrap()).collect();
        assert_eq!(values, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]);
        assert!(fib(200).is_err());
    }

    #[test]
    fn independent_set_counts() {
        assert_eq!(count_independent_sets(7).unwrap(), 34);
        assert_eq!(count_independent_sets(2).unwrap(), 3);
        assert_eq!(count_independent_sets(20).unwrap(), 17711);
        assert_eq!(oracle_count_independent_sets(20).unwrap(), 17711);
    }

    #[test]
    fn symmetrical_counts() {
        assert_eq!(count_symmetrical(6).unwrap(), 3);
        assert_eq!(count_symmetrical(7).unwrap(), 8);
        assert_eq!(count_symmetrical(1).unwrap(), 2);
        for n in 1..=16 {
            assert_eq!(
                count_symmetrical(n).unwrap(),
                oracle_count_symmetrical(n).unwrap()
            );
        }
    }

    #[test]
    fn open_string_counts() {
        assert_eq!(count_strings_no11_open(1).unwrap(), 1);
        assert_eq!(count_strings_no11_open(4).unwrap(), 7);
        assert_eq!(count_strings_no11_open(9).unwrap(), 76);
        for len in 1..=16 {
            assert_eq!(
                count_strings_no11_open(len).unwrap(),
                oracle_count_strings_no11_open(len).unwrap()
            );
        }
    }

    #[test]
    fn necklace_counts() {
        assert_eq!(count_necklaces_no11(9).unwrap(), 10);
        assert_eq!(count_necklaces_no11(6).unwrap(), 5);
        assert_eq!(count_necklaces_no11(1).unwrap(), 1);
        for len in 1..=16 {
            assert_eq!(
                count_necklaces_no11(len).unwrap(),
                oracle_count_necklaces_no11(len).unwrap(),
                "len = {len}"
            );
        }
    }

    #[test]
    fn bracelet_counts() {
        assert_eq!(count_bracelets_no11(6).unwrap(), 5);
        assert_eq!(count_bracelets_no11(9).unwrap(), 9);
        for len in 1..=16 {
            assert_eq!(
                count_bracelets_no11(len).unwrap(),
                oracle_count_bracelets_no11(len).unwrap(),
                "len = {len}"
            );
        }
    }

    #[test]
    fn self_reverse_counts() {
        assert_eq!(count_self_reverse_necklaces(9).unwrap(), 8);
        assert_eq!(count_self_reverse_necklaces(2).unwrap(), 2);
        assert_eq!(count_self_reverse_necklaces(6).unwrap(), 5);
        for len in 1..=16 {
            assert_eq!(
                count_self_reverse_necklaces(len).unwrap(),
                oracle_count_self_reverse_necklaces(len).unwrap(),
                "len = {len}"
            );
        }
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(count_phi_orbits(10).unwrap(), 10);
        assert_eq!(count_phi_orbits(7).unwrap(), 5);
        assert_eq!(count_phi_orbits(2).unwrap(), 1);
        assert_eq!(count_reversible_orbits(9).unwrap(), 8);
        assert_eq!(count_reversible_orbits(10).unwrap(), 8);
        assert_eq!(count_reversible_orbits(2).unwrap(), 1);
        for n in 2..=12 {
            assert_eq!(
                count_phi_orbits(n).unwrap(),
                oracle_count_phi_orbits(n).unwrap()
            );
            assert_eq!(
                count_reversible_orbits(n).unwrap(),
                oracle_count_reversible_orbits(n).unwrap()
            );
        }
    }

    #[test]
    fn listed_necklaces_of_length_nine() {
        // The ten classes of length 9, quoted by representative.
        let quoted = [
            "000000000",
            "100000000",
            "101000000",
            "100100000",
            "100010000",
            "101010000",
            "100100100",
            "101010100",
            "101001000",
            "000100101",
        ];
        let classes = necklace_classes_no11(9).unwrap();
        assert_eq!(classes.len(), 10);
        let canon: BTreeSet<String> = classes.iter().map(|c| c.representative()).collect();
        let quoted_canon: BTreeSet<String> = quoted
            .iter()
            .map(|s| {
                let bits: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
                NecklaceClass {
                    len: 9,
                    representative: cyclic::least_rotation(&bits),
                    self_reverse: false,
                }
                .representative()
            })
            .collect();
        assert_eq!(canon, quoted_canon);
        // Exactly the two chiral classes fail self-reversal.
        let chiral: Vec<&NecklaceClass> = classes.iter().filter(|c| !c.is_self_reverse()).collect();
        assert_eq!(chiral.len(), 2);
    }

    #[test]
    fn composition_translation_examples() {
        assert_eq!(
            necklace_to_composition("010010001").unwrap().to_string(),
            "212112"
        );
        assert_eq!(
            necklace_to_composition("000101001").unwrap().to_string(),
            "112212"
        );
        assert_eq!(necklace_to_composition("0").unwrap().to_string(), "1");
        assert!(necklace_to_composition("100100010").is_err());
        assert!(necklace_to_composition("0110").is_err());
    }

    #[test]
    fn necklaces_biject_with_composition_classes() {
        for len in 1..=15 {
            let classes = necklace_classes_no11(len).unwrap();
            let mut images = BTreeSet::new();
            for class in &classes {
                let comp = necklace_to_composition(&class.representative()).unwrap();
                assert_eq!(comp.total(), len);
                images.insert(comp.canonical());
            }
            let targets: BTreeSet<SnakeComposition> =
                composition_classes(len).into_iter().collect();
            assert_eq!(images, targets, "len = {len}");
        }
    }

    #[test]
    fn general_binary_oracles() {
        assert_eq!(oracle_count_necklaces_general(4).unwrap(), 6);
        assert_eq!(oracle_count_bracelets_general(4).unwrap(), 6);
        assert_eq!(oracle_count_necklaces_general(6).unwrap(), 14);
        assert_eq!(oracle_count_bracelets_general(6).unwrap(), 13);
    }
}
