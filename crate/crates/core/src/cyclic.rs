//! Canonical forms of sequences under cyclic rotation.

/// Index of the lexicographically least rotation of `seq`.
///
/// Plain doubled-sequence comparison; quadratic in the length, which is fine
/// for the short sequences handled here (compositions and necklace strings of
/// length at most a few dozen).
pub(crate) fn least_rotation_index<T: Ord>(seq: &[T]) -> usize {
    let k = seq.len();
    let mut best = 0;
    for cand in 1..k {
        for offset in 0..k {
            let a = &seq[(cand + offset) % k];
            let b = &seq[(best + offset) % k];
            if a < b {
                best = cand;
                break;
            }
            if a > b {
                break;
            }
        }
    }
    best
}

/// The lexicographically least rotation itself.
pub(crate) fn least_rotation<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let start = least_rotation_index(seq);
    rotated(seq, start)
}

/// The lexicographically greatest rotation; used for display layouts that
/// lead with the largest part.
pub(crate) fn greatest_rotation<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let k = seq.len();
    let mut best = 0;
    for cand in 1..k {
        for offset in 0..k {
            let a = &seq[(cand + offset) % k];
            let b = &seq[(best + offset) % k];
            if a > b {
                best = cand;
                break;
            }
            if a < b {
                break;
            }
        }
    }
    rotated(seq, best)
}

fn rotated<T: Clone>(seq: &[T], start: usize) -> Vec<T> {
    let k = seq.len();
    (0..k).map(|i| seq[(start + i) % k].clone()).collect()
}

/// Length of the smallest repeated segment whose copies tile `seq`.
pub(crate) fn smallest_period<T: PartialEq>(seq: &[T]) -> usize {
    let k = seq.len();
    (1..=k)
        .find(|&p| k % p == 0 && (p..k).all(|i| seq[i] == seq[i - p]))
        .unwrap_or(k)
}
