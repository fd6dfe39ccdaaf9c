//! Periodic index sequences `ι`, adaptedness, and the derived combinatorics
//! `p_{i,j}`, `P(k)`, `ι^(i)`, `k^(±)` and the flat ↔ (row, letter) re-indexing.
//!
//! A sequence is stored as a finite word whose infinite right-to-left
//! repetition is `ι`: the word `3,1,2` denotes `ι = (⋯,3,1,2,3,1,2)`, so
//! `i_1 = 2`, `i_2 = 1`, `i_3 = 3` and so on, wrapping.

use crate::cartan::{Family, RootSystem};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct IotaSequence {
    rs: RootSystem,
    word: Vec<usize>,
    /// `ι^(i)` indexed by letter (1-based slot 0 unused).
    first_occurrence: Vec<usize>,
}

impl IotaSequence {
    /// Validates condition (`i_k ≠ i_{k+1}`, every letter infinitely often)
    /// for the induced infinite sequence: no two cyclically adjacent letters
    /// of the word are equal and every letter of `I` occurs.
    pub fn new(rs: RootSystem, word: Vec<usize>) -> Result<Self> {
        let n = rs.rank;
        if word.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        if let Some(&bad) = word.iter().find(|&&w| w < 1 || w > n) {
            return Err(Error::InvalidWord(format!("letter {bad} outside 1..={n}")));
        }
        let len = word.len();
        if len > 1 {
            for k in 0..len {
                if word[k] == word[(k + 1) % len] {
                    return Err(Error::InvalidWord(format!(
                        "cyclically adjacent repeated letter {} at position {}",
                        word[k], k
                    )));
                }
            }
        } else {
            return Err(Error::InvalidWord("single-letter word repeats adjacently".into()));
        }
        for i in 1..=n {
            if !word.contains(&i) {
                return Err(Error::InvalidWord(format!("letter {i} never occurs")));
            }
        }
        let mut first_occurrence = vec![0usize; n + 1];
        for k in 1..=len {
            let l = word[len - 1 - (k - 1) % len];
            if first_occurrence[l] == 0 {
                first_occurrence[l] = k;
            }
        }
        Ok(IotaSequence {
            rs,
            word,
            first_occurrence,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn family(&self) -> Family {
        self.rs.family
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn period(&self) -> usize {
        self.word.len()
    }

    /// `i_k` for flat index `k ≥ 1`.
    pub fn letter(&self, k: usize) -> usize {
        assert!(k >= 1, "flat indices start at 1");
        let len = self.word.len();
        self.word[len - 1 - (k - 1) % len]
    }

    /// `ι^(i)`: the first flat index carrying letter `i`.
    pub fn iota_first(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.rank(), "letter out of range");
        self.first_occurrence[i]
    }

    /// Previous flat index with the same letter, or 0 at a first occurrence.
    pub fn k_minus(&self, k: usize) -> usize {
        assert!(k >= 1);
        let i = self.letter(k);
        (1..k).rev().find(|&l| self.letter(l) == i).unwrap_or(0)
    }

    /// Next flat index with the same letter.
    pub fn k_plus(&self, k: usize) -> usize {
        assert!(k >= 1);
        let i = self.letter(k);
        (k + 1..=k + self.period())
            .find(|&l| self.letter(l) == i)
            .expect("letter recurs within one period")
    }

    /// Flat `k` to double index `(s, j)` with `i_k = j` and `j` occurring
    /// `s` times among `i_1, …, i_k`.
    pub fn flat_to_double(&self, k: usize) -> (usize, usize) {
        let j = self.letter(k);
        let len = self.period();
        let per_period = self.word.iter().filter(|&&w| w == j).count();
        let full = (k - 1) / len;
        let s_partial = (full * len + 1..=k).filter(|&l| self.letter(l) == j).count();
        (full * per_period + s_partial, j)
    }

    /// Double index `(s, j)` back to the flat index of the `s`-th occurrence
    /// of letter `j`.
    pub fn double_to_flat(&self, s: usize, j: usize) -> usize {
        assert!(s >= 1 && j >= 1 && j <= self.rank());
        let len = self.period();
        let per_period = self.word.iter().filter(|&&w| w == j).count();
        let full = (s - 1) / per_period;
        let mut remaining = s - full * per_period;
        for k in full * len + 1..=(full + 1) * len {
            if self.letter(k) == j {
                remaining -= 1;
                if remaining == 0 {
                    return k;
                }
            }
        }
        unreachable!("occurrence must lie within one period");
    }

    /// Smallest flat bound covering every letter's first `rows` occurrences.
    pub fn flat_window_for_rows(&self, rows: usize) -> usize {
        (1..=self.rank())
            .map(|j| self.double_to_flat(rows, j))
            .max()
            .unwrap()
    }

    /// The `{i,j}`-subsequence letters over the first `periods` periods.
    fn pair_subsequence(&self, i: usize, j: usize, periods: usize) -> Vec<usize> {
        (1..=periods * self.period())
            .map(|k| self.letter(k))
            .filter(|&l| l == i || l == j)
            .collect()
    }

    /// True iff for every Cartan-linked pair `{i,j}` the restricted
    /// subsequence strictly alternates. Alternation over two consecutive
    /// periods of a periodic word implies alternation of the infinite
    /// sequence.
    pub fn is_adapted(&self) -> bool {
        let n = self.rank();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.rs.a(i, j) == 0 {
                    continue;
                }
                let sub = self.pair_subsequence(i, j, 2);
                if sub.windows(2).any(|w| w[0] == w[1]) {
                    return false;
                }
            }
        }
        true
    }

    /// `p_{i,j}`: 1 if the `{i,j}`-subsequence ends with `i` on the `k = 1`
    /// side (equivalently `ι^(i) < ι^(j)`), else 0.
    pub fn p_value(&self, i: usize, j: usize) -> Result<u8> {
        if i == j || self.rs.a(i, j) == 0 {
            return Err(Error::BadPair {
                i,
                j,
                reason: "letters must be distinct and Cartan-linked".into(),
            });
        }
        if !self.is_adapted() {
            return Err(Error::NotAdapted(format!("p_{{{i},{j}}} requires an adapted sequence")));
        }
        Ok(if self.iota_first(i) < self.iota_first(j) { 1 } else { 0 })
    }

    /// `P(k)`: the cumulative shift entering every box form. `P(0) = P(1) =
    /// P(n+1) = 0`; for the type-D exception `k = n` the chain detours
    /// through `p_{n,n-2}`.
    pub fn p_shift(&self, k: usize) -> Result<i64> {
        let n = self.rank();
        if k > n + 1 {
            return Err(Error::IndexOutOfRange(k, format!("P is defined on 0..={}", n + 1)));
        }
        if k == 0 || k == 1 || k == n + 1 {
            return Ok(0);
        }
        let mut total = 0i64;
        if self.family() == Family::D && k == n {
            for t in 2..=n - 2 {
                total += self.p_value(t, t - 1)? as i64;
            }
            total += self.p_value(n, n - 2)? as i64;
        } else {
            for t in 2..=k {
                total += self.p_value(t, t - 1)? as i64;
            }
        }
        Ok(total)
    }

    /// Cyclic rotations of the word whose induced sequence starts with
    /// `i_1 = target`; used by the ε* transfer oracle.
    pub fn rotation_starting_with(&self, target: usize) -> Result<IotaSequence> {
        let len = self.period();
        for r in 0..len {
            // Rotate so position (len-1) holds an occurrence of `target`.
            let rotated: Vec<usize> = (0..len).map(|p| self.word[(p + r) % len]).collect();
            if rotated[len - 1] == target {
                return IotaSequence::new(self.rs.clone(), rotated);
            }
        }
        Err(Error::InvalidWord(format!("letter {target} not present in word")))
    }
}
