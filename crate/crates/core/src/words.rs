//! Free-group algebra over generators x_1..x_k: crossing words, reduction,
//! cyclic-subgroup membership, abelianization, and the curve
//! reconfigurability decision read off crossing data.

use alloc::vec::Vec;

/// One letter: 1-based generator index and exponent +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Letter {
        debug_assert!(gen >= 1 && (exp == 1 || exp == -1));
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, exp: -self.exp }
    }
}

/// Word in the free group on k generators, stored unreduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    pub k: usize,
    pub letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(k: usize) -> FreeWord {
        FreeWord { k, letters: Vec::new() }
    }

    pub fn new(k: usize, letters: Vec<Letter>) -> FreeWord {
        debug_assert!(letters.iter().all(|l| l.gen >= 1 && l.gen <= k));
        FreeWord { k, letters }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        debug_assert_eq!(self.k, other.k);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { k: self.k, letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            k: self.k,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn power(gen: usize, e: i64, k: usize) -> FreeWord {
        let exp = if e >= 0 { 1 } else { -1 };
        FreeWord {
            k,
            letters: (0..e.unsigned_abs()).map(|_| Letter::new(gen, exp)).collect(),
        }
    }
}

/// Crossing record along a fixed path Q_j: which path crossed, with what
/// local sign, in order along Q_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingSequence {
    pub k: usize,
    /// (path index 1..=k, sign +1/-1) in order along Q_j.
    pub crossings: Vec<(usize, i8)>,
}

/// Literal product of the crossing letters.
pub fn word_from_crossings(cs: &CrossingSequence) -> FreeWord {
    FreeWord::new(
        cs.k,
        cs.crossings.iter().map(|&(i, e)| Letter::new(i, e)).collect(),
    )
}

/// Fully cancelled normal form (no adjacent x_i^{±1} x_i^{∓1}).
pub fn reduce(w: &FreeWord) -> FreeWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        match out.last() {
            Some(&top) if top.gen == l.gen && top.exp == -l.exp => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    FreeWord { k: w.k, letters: out }
}

/// Is w an element of the cyclic subgroup generated by x_j (including the
/// identity)?
pub fn in_cyclic_subgroup(w: &FreeWord, j: usize) -> bool {
    reduce(w).letters.iter().all(|l| l.gen == j)
}

/// Exponent sums per generator (1-based input, 0-based vector).
pub fn abelianize(w: &FreeWord) -> Vec<i64> {
    let mut v = alloc::vec![0i64; w.k];
    for l in &w.letters {
        v[l.gen - 1] += l.exp as i64;
    }
    v
}

/// The homomorphism sending x_j to x_i x_j x_i^{-1} and fixing the other
/// generators.
pub fn conjugating_hom(w: &FreeWord, i: usize, j: usize) -> FreeWord {
    let mut letters = Vec::with_capacity(3 * w.letters.len());
    for &l in &w.letters {
        if l.gen == j {
            // x_j^{±1} maps to x_i x_j^{±1} x_i^{-1} either way
            letters.push(Letter::new(i, 1));
            letters.push(l);
            letters.push(Letter::new(i, -1));
        } else {
            letters.push(l);
        }
    }
    FreeWord { k: w.k, letters }
}

/// Verdict of the curve-level decision, with the first failing index as a
/// witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveVerdict {
    pub reconfigurable: bool,
    /// First j whose word leaves the cyclic subgroup, with its reduced word.
    pub witness: Option<(usize, FreeWord)>,
}

/// Curves on a plane are reconfigurable iff every w_j lies in the subgroup
/// generated by x_j.
pub fn curves_reconfigurable(sequences: &[CrossingSequence]) -> CurveVerdict {
    for (idx, cs) in sequences.iter().enumerate() {
        let j = idx + 1;
        let w = word_from_crossings(cs);
        if !in_cyclic_subgroup(&w, j) {
            return CurveVerdict { reconfigurable: false, witness: Some((j, reduce(&w))) };
        }
    }
    CurveVerdict { reconfigurable: true, witness: None }
}

/// Crossing data matching the two published example words; used by tests
/// and the word pipeline demo.
pub fn example_counterexample_crossings() -> Vec<CrossingSequence> {
    // w_1 = x2 x1^-1 x2^-1 x1 x2^-1 x1^-1 x2
    // w_2 = x1 x2^-1 x1^-1 x2 x1^-1 x2^-1 x1
    alloc::vec![
        CrossingSequence {
            k: 2,
            crossings: alloc::vec![(2, 1), (1, -1), (2, -1), (1, 1), (2, -1), (1, -1), (2, 1)],
        },
        CrossingSequence {
            k: 2,
            crossings: alloc::vec![(1, 1), (2, -1), (1, -1), (2, 1), (1, -1), (2, -1), (1, 1)],
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(k: usize, letters: &[(usize, i8)]) -> FreeWord {
        FreeWord::new(k, letters.iter().map(|&(g, e)| Letter::new(g, e)).collect())
    }

    #[test]
    fn empty_crossing_sequence_gives_identity() {
        let cs = CrossingSequence { k: 3, crossings: vec![] };
        assert_eq!(word_from_crossings(&cs), FreeWord::identity(3));
    }

    #[test]
    fn example_words_match_published_letters() {
        let cs = example_counterexample_crossings();
        let w1 = word_from_crossings(&cs[0]);
        let w2 = word_from_crossings(&cs[1]);
        assert_eq!(
            w1,
            w(2, &[(2, 1), (1, -1), (2, -1), (1, 1), (2, -1), (1, -1), (2, 1)])
        );
        assert_eq!(
            w2,
            w(2, &[(1, 1), (2, -1), (1, -1), (2, 1), (1, -1), (2, -1), (1, 1)])
        );
        // both already reduced
        assert_eq!(reduce(&w1), w1);
        assert_eq!(reduce(&w2), w2);
        // the cross entries (the pairwise intersection numbers) vanish even
        // though the words are nontrivial; the own-generator entries do not
        assert_eq!(abelianize(&w1), vec![-1, 0]);
        assert_eq!(abelianize(&w2), vec![0, -1]);
        assert_eq!(abelianize(&w1)[1], 0);
        assert_eq!(abelianize(&w2)[0], 0);
        assert!(!in_cyclic_subgroup(&w1, 1));
        assert!(!in_cyclic_subgroup(&w2, 2));
        let verdict = curves_reconfigurable(&cs);
        assert!(!verdict.reconfigurable);
        assert_eq!(verdict.witness.as_ref().unwrap().0, 1);
    }

    #[test]
    fn reduce_cancels() {
        assert_eq!(reduce(&w(1, &[(1, 1), (1, -1)])), FreeWord::identity(1));
        assert_eq!(
            reduce(&w(2, &[(2, 1), (1, 1), (1, -1), (2, 1)])),
            w(2, &[(2, 1), (2, 1)])
        );
    }

    #[test]
    fn membership_examples() {
        assert!(in_cyclic_subgroup(&FreeWord::identity(2), 1));
        assert!(in_cyclic_subgroup(&w(2, &[(1, 1), (1, 1), (1, 1)]), 1));
        assert!(!in_cyclic_subgroup(&w(2, &[(1, 1), (2, 1)]), 1));
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(abelianize(&w(2, &[(1, 1), (2, 1), (1, -1)])), vec![0, 1]);
        assert_eq!(abelianize(&FreeWord::power(2, 5, 3)), vec![0, 5, 0]);
    }

    #[test]
    fn all_trivial_crossings_reconfigurable() {
        let cs = vec![
            CrossingSequence { k: 2, crossings: vec![] },
            CrossingSequence { k: 2, crossings: vec![(2, 1), (2, 1)] },
        ];
        assert!(curves_reconfigurable(&cs).reconfigurable);
    }

    #[test]
    fn membership_implies_zero_foreign_entries() {
        let cases = [
            w(3, &[(2, 1), (2, 1)]),
            w(3, &[(1, 1), (2, 1), (2, -1), (1, -1), (2, 1)]),
        ];
        for word in cases {
            if in_cyclic_subgroup(&word, 2) {
                let ab = abelianize(&word);
                for (idx, &e) in ab.iter().enumerate() {
                    if idx != 1 {
                        assert_eq!(e, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_stability() {
        // if reduce(w) = x_j^e then x_i^{-1} f_ij(w) x_i reduces back to x_j^e
        for e in [-3i64, -1, 0, 2, 5] {
            for (i, j) in [(1usize, 2usize), (2, 1), (3, 2)] {
                let word = FreeWord::power(j, e, 3);
                let mapped = conjugating_hom(&word, i, j);
                let conjugated = FreeWord::power(i, -1, 3)
                    .concat(&mapped)
                    .concat(&FreeWord::power(i, 1, 3));
                assert_eq!(reduce(&conjugated), reduce(&word), "e={e} i={i} j={j}");
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_word(k: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
            prop::collection::vec((1..=k, prop::bool::ANY), 0..max_len).prop_map(move |ls| {
                FreeWord::new(
                    k,
                    ls.into_iter()
                        .map(|(g, pos)| Letter::new(g, if pos { 1 } else { -1 }))
                        .collect(),
                )
            })
        }

        proptest! {
            #[test]
            fn reduce_is_idempotent(w in arb_word(3, 24)) {
                let r = reduce(&w);
                prop_assert_eq!(reduce(&r), r.clone());
            }

            #[test]
            fn reduce_respects_concat(u in arb_word(3, 16), v in arb_word(3, 16)) {
                let direct = reduce(&u.concat(&v));
                let split = reduce(&reduce(&u).concat(&reduce(&v)));
                prop_assert_eq!(direct, split);
            }

            #[test]
            fn abelianize_commutes_with_reduce(w in arb_word(3, 24)) {
                prop_assert_eq!(abelianize(&w), abelianize(&reduce(&w)));
            }

            #[test]
            fn inverse_cancels(w in arb_word(3, 16)) {
                prop_assert_eq!(reduce(&w.concat(&w.inverse())), FreeWord::identity(3));
            }
        }
    }
}
