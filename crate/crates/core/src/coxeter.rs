//! Admissible conjugation of Coxeter words: initial/final toggle detection,
//! single conjugation steps, the walk from any Coxeter word to the
//! left-to-right sweep, and verification that each step preserves orbit
//! structure and indicator sums.

use crate::error::{Error, Result};
use crate::orbits::all_orbits;
use crate::word::{CoxeterWord, Orientation, ToggleWord};

/// Toggles that can be moved to the left end of the word by commuting moves:
/// the sources of the orientation.
pub fn initial_toggles(w: &CoxeterWord) -> Vec<usize> {
    w.orientation().sources()
}

/// Toggles that can be moved to the right end of the word: the sinks of the
/// orientation.
pub fn final_toggles(w: &CoxeterWord) -> Vec<usize> {
    w.orientation().sinks()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjugationKind {
    ByFinal,
    ByInitial,
}

/// One admissible conjugation `w -> t_k w t_k`, recorded with the words on
/// both sides (in their canonical spellings).
#[derive(Clone, Debug)]
pub struct ConjugationStep {
    pub toggle: usize,
    pub kind: ConjugationKind,
    pub word_before: CoxeterWord,
    pub word_after: CoxeterWord,
}

impl ConjugationStep {
    /// Orientation after this step.
    pub fn orientation_after(&self) -> Orientation {
        self.word_after.orientation()
    }
}

/// Conjugates `w` by the toggle at `k`, which must be initial or final in
/// `w`; the result's orientation differs from `w`'s exactly by flipping
/// vertex `k`. Conjugating by any other toggle would leave the set of
/// Coxeter elements, so it is rejected.
///
/// The returned word is the canonical spelling of the flipped orientation,
/// equal to `t_k w t_k` as a map.
pub fn admissible_conjugate(w: &CoxeterWord, k: usize) -> Result<CoxeterWord> {
    let orientation = w.orientation();
    if k < 1 || k > w.n() {
        return Err(Error::VertexOutOfRange { index: k, n: w.n() });
    }
    if !orientation.is_source(k) && !orientation.is_sink(k) {
        return Err(Error::NotInitialOrFinal { index: k });
    }
    Ok(orientation.flip_vertex(k)?.to_coxeter())
}

/// The conjugation walk from `w` to the sweep, plus the combined conjugator.
#[derive(Clone, Debug)]
pub struct SweepPath {
    pub steps: Vec<ConjugationStep>,
    /// Word `u` with the sweep equal to `u^-1 w u`; its letters are the step
    /// toggles in step order.
    pub conjugator: ToggleWord,
}

/// Walks `w` to the left-to-right sweep by repeatedly conjugating by the
/// largest final toggle. This always terminates; a step bound of `n^2 + n`
/// guards against implementation bugs.
pub fn path_to_sweep(w: &CoxeterWord) -> Result<SweepPath> {
    let n = w.n();
    let target = Orientation::all_toward_lower(n);
    let bound = n * n + n;
    let mut current = w.clone();
    let mut steps: Vec<ConjugationStep> = Vec::new();
    let mut conjugator: Vec<usize> = Vec::new();
    while current.orientation() != target {
        if steps.len() >= bound {
            return Err(Error::ConjugationBound { steps: bound });
        }
        let k = *final_toggles(&current)
            .last()
            .expect("an acyclic orientation always has a sink");
        let next = admissible_conjugate(&current, k)?;
        steps.push(ConjugationStep {
            toggle: k,
            kind: ConjugationKind::ByFinal,
            word_before: current.clone(),
            word_after: next.clone(),
        });
        conjugator.push(k);
        current = next;
    }
    Ok(SweepPath {
        steps,
        conjugator: ToggleWord::new(n, conjugator)?,
    })
}

/// Outcome of checking one admissible conjugation against the orbit
/// bijection it induces.
#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub orbit_pairs: usize,
    pub mismatches: Vec<String>,
}

impl CorrespondenceReport {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For `w' = t_k w t_k`, applying the toggle at `k` to each state of a
/// `w`-orbit must give a `w'`-orbit of the same size with the same column
/// sums. Checks every `w`-orbit.
pub fn verify_orbit_correspondence(w: &CoxeterWord, k: usize) -> Result<CorrespondenceReport> {
    let n = w.n();
    let conjugated = admissible_conjugate(w, k)?;
    let orbits = all_orbits(n, w.word())?;
    let mut mismatches = Vec::new();
    for orbit in &orbits {
        let mapped: Vec<_> = orbit
            .states()
            .iter()
            .map(|s| s.toggle(k).expect("k is a valid vertex"))
            .collect();
        for i in 0..mapped.len() {
            let next = mapped[(i + 1) % mapped.len()];
            if conjugated.apply(&mapped[i]) != next {
                mismatches.push(format!(
                    "image of orbit at {} is not an orbit of the conjugated word",
                    orbit.min_state()
                ));
                break;
            }
        }
        let image_orbit = crate::orbits::Orbit::orbit_of(&mapped[0], conjugated.word());
        if image_orbit.len() != orbit.len() {
            mismatches.push(format!(
                "orbit at {} maps to an orbit of a different size",
                orbit.min_state()
            ));
        }
        if image_orbit.column_sums() != orbit.column_sums() {
            mismatches.push(format!(
                "orbit at {} changes column sums under the bijection",
                orbit.min_state()
            ));
        }
    }
    Ok(CorrespondenceReport {
        orbit_pairs: orbits.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indep::{enumerate_independent_sets, IndependentSet};
    use crate::orbits::Orbit;
    use crate::word::random_coxeter_words;

    fn w7() -> CoxeterWord {
        CoxeterWord::parse(7, "3,4,2,6,7,5,1").unwrap()
    }

    #[test]
    fn initial_and_final_sets() {
        assert_eq!(initial_toggles(&w7()), vec![3, 6]);
        assert_eq!(final_toggles(&w7()), vec![1, 5, 7]);
        let sweep = CoxeterWord::sweep(5);
        assert_eq!(initial_toggles(&sweep), vec![5]);
        assert_eq!(final_toggles(&sweep), vec![1]);
        let two = CoxeterWord::new(2, vec![2, 1]).unwrap();
        assert_eq!(initial_toggles(&two), vec![2]);
    }

    #[test]
    fn conjugation_matches_worked_computation() {
        // t5 (t3 t2 t6 t4 t5 t7 t1) t5 = t5 t3 t2 t6 t4 t7 t1.
        let w = CoxeterWord::parse(7, "3,2,6,4,5,7,1").unwrap();
        let conjugated = admissible_conjugate(&w, 5).unwrap();
        let expected = CoxeterWord::parse(7, "5,3,2,6,4,7,1").unwrap();
        assert!(conjugated.same_action(&expected).unwrap());

        // Direct product check: t5 w t5 acts identically.
        let t5 = ToggleWord::new(7, vec![5]).unwrap();
        let product = t5.then_left(w.word()).unwrap().then_left(&t5).unwrap();
        assert!(conjugated.word().same_action(&product).unwrap());
    }

    #[test]
    fn conjugation_rejects_interior_toggles() {
        let w = CoxeterWord::parse(7, "3,2,6,4,5,7,1").unwrap();
        assert_eq!(
            admissible_conjugate(&w, 4),
            Err(Error::NotInitialOrFinal { index: 4 })
        );
    }

    #[test]
    fn conjugating_sweep_by_its_source() {
        let n = 6;
        let sweep = CoxeterWord::sweep(n);
        let conjugated = admissible_conjugate(&sweep, n).unwrap();
        // t_n phi t_n is the cyclic shift t_{n-1} ... t_1 t_n.
        let mut shifted: Vec<usize> = (1..n).rev().collect();
        shifted.push(n);
        let expected = CoxeterWord::new(n, shifted).unwrap();
        assert!(conjugated.same_action(&expected).unwrap());
    }

    #[test]
    fn conjugation_flips_exactly_one_vertex() {
        for w in random_coxeter_words(9, 10, 3) {
            let o = w.orientation();
            for k in initial_toggles(&w).into_iter().chain(final_toggles(&w)) {
                let conjugated = admissible_conjugate(&w, k).unwrap();
                assert_eq!(conjugated.orientation(), o.flip_vertex(k).unwrap());
            }
        }
    }

    #[test]
    fn walk_reproduces_quoted_conjugator() {
        let path = path_to_sweep(&w7()).unwrap();
        assert_eq!(path.conjugator.letters(), &[7, 5, 6, 7, 4, 5, 6, 7]);
        assert_eq!(path.steps.len(), 8);
        // The sweep equals u^-1 w u on every state.
        let u = &path.conjugator;
        let full = u
            .inverse()
            .then_left(w7().word())
            .unwrap()
            .then_left(u)
            .unwrap();
        assert!(full.same_action(&ToggleWord::sweep(7)).unwrap());
    }

    #[test]
    fn walk_from_sweep_is_empty() {
        let path = path_to_sweep(&CoxeterWord::sweep(8)).unwrap();
        assert!(path.steps.is_empty());
        assert!(path.conjugator.is_empty());
    }

    #[test]
    fn walk_on_two_vertices() {
        let w = CoxeterWord::new(2, vec![1, 2]).unwrap();
        let path = path_to_sweep(&w).unwrap();
        let u = &path.conjugator;
        let full = u
            .inverse()
            .then_left(w.word())
            .unwrap()
            .then_left(u)
            .unwrap();
        for s in enumerate_independent_sets(2).unwrap() {
            assert_eq!(full.apply(&s), ToggleWord::sweep(2).apply(&s));
        }
    }

    #[test]
    fn walks_terminate_for_random_words() {
        for n in [3usize, 5, 8, 10] {
            for w in random_coxeter_words(n, 15, 7) {
                let path = path_to_sweep(&w).unwrap();
                let u = &path.conjugator;
                let full = u
                    .inverse()
                    .then_left(w.word())
                    .unwrap()
                    .then_left(u)
                    .unwrap();
                assert!(full.same_action(&ToggleWord::sweep(n)).unwrap());
            }
        }
    }

    #[test]
    fn correspondence_on_worked_example() {
        let w = w7();
        for k in [1usize, 5, 7, 3, 6] {
            let report = verify_orbit_correspondence(&w, k).unwrap();
            assert!(report.all_match(), "k = {k}: {:?}", report.mismatches);
            assert_eq!(report.orbit_pairs, 5);
        }
        let report = verify_orbit_correspondence(&CoxeterWord::sweep(3), 3).unwrap();
        assert!(report.all_match());
    }

    #[test]
    fn shifted_orbit_shares_size_and_sums_with_sweep_orbit() {
        let start_w = IndependentSet::parse("1010010").unwrap();
        let orbit_w = Orbit::orbit_of(&start_w, w7().word());
        let sweep = ToggleWord::sweep(7);
        let start_phi = IndependentSet::parse("1010100").unwrap();
        let orbit_phi = Orbit::orbit_of(&start_phi, &sweep);
        assert_eq!(orbit_w.len(), 10);
        assert_eq!(orbit_w.len(), orbit_phi.len());
        assert_eq!(orbit_w.column_sums(), orbit_phi.column_sums());

        let rows: Vec<String> = orbit_w
            .board_from(&start_w)
            .unwrap()
            .rows()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(
            rows,
            [
                "1010010", "0000000", "1010101", "0000010", "1001000", "0100001", "0010100",
                "1000001", "0100100", "0001001",
            ]
        );

        // The walk to the sweep conjugates by t4 once, t5 and t6 twice, and
        // t7 three times; sliding each column up by that count turns one
        // board into the other.
        let board_w = orbit_w.board_from(&start_w).unwrap();
        let board_phi = orbit_phi.board_from(&start_phi).unwrap();
        let walk = path_to_sweep(&w7()).unwrap();
        let mut slide = vec![0i64; 8];
        for step in &walk.steps {
            slide[step.toggle] += 1;
        }
        assert_eq!(slide[1..].to_vec(), vec![0, 0, 0, 1, 2, 2, 3]);
        for j in 1..=7i64 {
            for i in 0..10i64 {
                assert_eq!(
                    board_phi.s(i, j),
                    board_w.s(i + slide[j as usize], j),
                    "column {j}, row {i}"
                );
            }
        }
    }

    #[test]
    fn toggling_elsewhere_fixes_other_indicators() {
        let k = 4;
        for s in enumerate_independent_sets(7).unwrap() {
            let t = s.toggle(k).unwrap();
            for j in 1..=7 {
                if j != k {
                    assert_eq!(s.contains(j), t.contains(j));
                }
            }
        }
    }

    #[test]
    fn orbit_size_multisets_agree_across_coxeter_words() {
        for n in [5usize, 8, 10, 12] {
            let sweep_sizes = {
                let mut v: Vec<usize> = all_orbits(n, &ToggleWord::sweep(n))
                    .unwrap()
                    .iter()
                    .map(|o| o.len())
                    .collect();
                v.sort_unstable();
                v
            };
            for w in random_coxeter_words(n, 8, 99) {
                let mut sizes: Vec<usize> = all_orbits(n, w.word())
                    .unwrap()
                    .iter()
                    .map(|o| o.len())
                    .collect();
                sizes.sort_unstable();
                assert_eq!(sizes, sweep_sizes, "n = {n}, w = {w}");
            }
        }
    }

    #[test]
    fn homomesy_verdicts_transfer_between_coxeter_words() {
        // Indicator-statistic verdicts (constant included) agree across
        // Coxeter words, whether or not the statistic is homomesic.
        use crate::orbits::{check_homomesy, Rat, Statistic};
        use rand::Rng;
        use rand::SeedableRng;

        let n = 7;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let sweep = CoxeterWord::sweep(n);
        let words = random_coxeter_words(n, 4, 21);
        let mut statistics: Vec<Statistic> = vec![
            Statistic::chi(n, 2).unwrap() - Statistic::chi(n, 6).unwrap(),
            Statistic::chi(n, 1).unwrap() * 2 + Statistic::chi(n, 2).unwrap(),
            Statistic::chi(n, 1).unwrap(),
            Statistic::chi(n, 3).unwrap() + Statistic::chi(n, 4).unwrap(),
        ];
        for _ in 0..10 {
            let coeffs = (0..n)
                .map(|_| Rat::new(rng.gen_range(-3i128..=3), rng.gen_range(1i128..=3)))
                .collect();
            statistics.push(Statistic::from_coefficients(coeffs));
        }
        for f in &statistics {
            let reference = check_homomesy(n, sweep.word(), f).unwrap();
            for w in &words {
                let verdict = check_homomesy(n, w.word(), f).unwrap();
                assert_eq!(
                    verdict.is_homomesic(),
                    reference.is_homomesic(),
                    "verdicts diverge for {} under {w}",
                    f.render()
                );
                assert_eq!(verdict.constant(), reference.constant());
            }
        }
    }

    #[test]
    fn alternating_word_orbits_are_all_or_nothing_symmetrical() {
        // Evens then odds: on odd paths each orbit is either entirely
        // symmetrical or has no symmetrical member at all.
        for n in [5usize, 7, 9, 11] {
            let mut word: Vec<usize> = (2..n).step_by(2).collect();
            word.extend((1..=n).step_by(2));
            let w = CoxeterWord::new(n, word).unwrap();
            for orbit in all_orbits(n, w.word()).unwrap() {
                let symmetrical = orbit.count_symmetrical();
                assert!(
                    symmetrical == 0 || symmetrical == orbit.len(),
                    "n = {n}, orbit at {} has {symmetrical}/{} symmetrical members",
                    orbit.min_state(),
                    orbit.len()
                );
            }
        }
    }
}
