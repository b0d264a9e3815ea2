//! Permutations of `[n]`, the classical and difference statistics, and the
//! equivalent characterizations of bi-increasing permutations.
//!
//! Positions and values are 1-based in every public signature and text
//! format. Internally the word is stored in a zero-indexed `Vec`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{AtlasError, Result};

/// A permutation written as the word `π_1 π_2 … π_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking that it is a
    /// rearrangement of `1..=n` with `n >= 1`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(AtlasError::invalid("permutation", "length must be at least 1"));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(AtlasError::invalid(
                    "permutation",
                    format!("value {v} outside 1..={n}"),
                ));
            }
            if seen[v] {
                return Err(AtlasError::invalid("permutation", format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees the word is a permutation of `1..=n`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    /// Advances to the lexicographically next word; false at the last one.
    pub(crate) fn advance_lexicographic(&mut self) -> bool {
        let w = &mut self.word;
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
            return false;
        };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).expect("pivot has a successor");
        w.swap(i - 1, j);
        w[i..].reverse();
        true
    }

    /// Inserts the new maximum `n+1` before position `i` (1-based).
    pub(crate) fn push_max_at(&mut self, i: usize) {
        let m = self.word.len() + 1;
        self.word.insert(i - 1, m);
    }

    /// Removes the letter at position `i` (1-based).
    pub(crate) fn remove_at(&mut self, i: usize) {
        self.word.remove(i - 1);
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `π_i` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_excedance(&self, i: usize) -> bool {
        self.word[i - 1] > i
    }

    pub fn excedance_set(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.is_excedance(i)).collect()
    }

    /// Excedance letters in increasing order.
    pub fn excedance_letters(&self) -> Vec<usize> {
        let mut letters: Vec<usize> =
            (1..=self.len()).filter(|&i| self.is_excedance(i)).map(|i| self.at(i)).collect();
        letters.sort_unstable();
        letters
    }

    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.word[i - 1] > self.word[i]).collect()
    }

    pub fn fixed_point_set(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.at(i) == i).collect()
    }

    pub fn exc(&self) -> usize {
        self.word.iter().enumerate().filter(|&(i, &v)| v > i + 1).count()
    }

    pub fn des(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn fix(&self) -> usize {
        self.word.iter().enumerate().filter(|&(i, &v)| v == i + 1).count()
    }

    pub fn maj(&self) -> usize {
        self.word.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).sum()
    }

    pub fn dexc(&self) -> usize {
        self.word.iter().enumerate().filter(|&(i, &v)| v > i + 1).map(|(i, &v)| v - i - 1).sum()
    }

    pub fn ddes(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).map(|w| w[0] - w[1]).sum()
    }

    /// Inversion number, counted with a Fenwick tree in `O(n log n)`.
    pub fn inv(&self) -> usize {
        inversions(&self.word)
    }

    /// Denert's statistic: `inv(π_e) + inv(π_ne) + Σ excedances`.
    pub fn den(&self) -> usize {
        let r = self.restriction_words();
        inversions(&r.pi_e) + inversions(&r.pi_ne) + self.excedance_set().iter().sum::<usize>()
    }

    /// Largest excedance, or 0 when there is none.
    pub fn greatest_excedance(&self) -> usize {
        (1..=self.len()).rev().find(|&i| self.is_excedance(i)).unwrap_or(0)
    }

    pub fn stats(&self) -> StatBundle {
        let excedance_set = self.excedance_set();
        let descent_set = self.descent_set();
        let fixed_point_set = self.fixed_point_set();
        StatBundle {
            exc: excedance_set.len(),
            des: descent_set.len(),
            inv: self.inv(),
            maj: descent_set.iter().sum(),
            dexc: self.dexc(),
            ddes: self.ddes(),
            den: self.den(),
            fix: fixed_point_set.len(),
            excedance_letters: self.excedance_letters(),
            excedance_set,
            descent_set,
            fixed_point_set,
        }
    }

    pub fn restriction_words(&self) -> RestrictionWords {
        let mut r = RestrictionWords::default();
        for (i, &v) in self.word.iter().enumerate() {
            if v > i + 1 {
                r.pi_e.push(v);
            } else {
                r.pi_ne.push(v);
            }
            if i + 1 < self.len() && v > self.word[i + 1] {
                r.pi_d.push(v);
            } else {
                r.pi_nd.push(v);
            }
        }
        r
    }

    /// `c_i = |{j < i : π_j > π_i}|`.
    pub fn reverse_code(&self) -> Vec<usize> {
        let n = self.len();
        let mut tree = Fenwick::new(n);
        let mut code = Vec::with_capacity(n);
        for (i, &v) in self.word.iter().enumerate() {
            code.push(i - tree.prefix(v));
            tree.add(v);
        }
        code
    }

    pub fn is_bi_increasing(&self) -> bool {
        self.avoids_321()
    }

    pub fn is_bi_increasing_by(&self, method: BiIncMethod) -> bool {
        match method {
            BiIncMethod::InvEqDexc => self.inv() == self.dexc(),
            BiIncMethod::SortedRestrictions => {
                let r = self.restriction_words();
                is_increasing(&r.pi_e) && is_increasing(&r.pi_ne)
            }
            BiIncMethod::LetterCount => self.letter_count_condition(),
            BiIncMethod::Pattern321 => self.avoids_321(),
        }
    }

    fn letter_count_condition(&self) -> bool {
        let w = &self.word;
        (0..w.len()).all(|k| {
            let pos = k + 1;
            if w[k] > pos {
                w[k] - pos == w[k + 1..].iter().filter(|&&x| x < w[k]).count()
            } else {
                pos - w[k] == w[..k].iter().filter(|&&x| x > w[k]).count()
            }
        })
    }

    /// Linear-time 321 test: no middle letter has a larger letter to its
    /// left and a smaller letter to its right.
    fn avoids_321(&self) -> bool {
        let w = &self.word;
        let n = w.len();
        let mut suffix_min = vec![usize::MAX; n + 1];
        for i in (0..n).rev() {
            suffix_min[i] = suffix_min[i + 1].min(w[i]);
        }
        let mut prefix_max = 0;
        for j in 0..n {
            if prefix_max > w[j] && suffix_min[j + 1] < w[j] {
                return false;
            }
            prefix_max = prefix_max.max(w[j]);
        }
        true
    }

    /// True iff the descent-top word and its complement are both increasing,
    /// which happens exactly for bi-increasing permutations with `E = D`.
    pub fn exc_equals_des(&self) -> bool {
        let r = self.restriction_words();
        is_increasing(&r.pi_d) && is_increasing(&r.pi_nd)
    }

    /// Every occurrence of 231 extends to 3142 with the `1` placed between
    /// the `3` and the `4`.
    pub fn avoids_barred_3142(&self) -> bool {
        let w = &self.word;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                if w[j] < w[i] {
                    continue;
                }
                // smallest letter strictly between positions i and j
                let gap_min = w[i + 1..j].iter().copied().min().unwrap_or(usize::MAX);
                for k in j + 1..n {
                    if w[k] < w[i] && gap_min >= w[k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Splits the word after every non-descent.
    pub fn descent_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = Vec::new();
        let mut current = Vec::new();
        for (i, &v) in self.word.iter().enumerate() {
            current.push(v);
            if i + 1 == self.len() || v < self.word[i + 1] {
                blocks.push(std::mem::take(&mut current));
            }
        }
        blocks
    }

    /// Checks whether `π_i` exceeds every letter on its left and is exceeded
    /// by every letter on its right; for bi-increasing `π` this is exactly
    /// `π_i = i`.
    pub fn fixed_point_criterion(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.len() {
            return Err(AtlasError::OutOfRange(format!("position {i} outside 1..={}", self.len())));
        }
        self.require_bi_increasing()?;
        let v = self.at(i);
        Ok(self.word[..i - 1].iter().all(|&x| x < v) && self.word[i..].iter().all(|&x| x > v))
    }

    pub(crate) fn require_bi_increasing(&self) -> Result<()> {
        if self.is_bi_increasing() {
            Ok(())
        } else {
            Err(AtlasError::NotBiIncreasing(self.to_string()))
        }
    }

    /// Reconstructs the unique bi-increasing permutation with the given
    /// excedance set and excedance letters.
    ///
    /// Positions are paired with letters in sorted order and the remaining
    /// values fill the non-excedance positions increasingly. Fails unless the
    /// result really has exactly `positions` as its excedance set.
    pub fn from_excedances(n: usize, positions: &[usize], letters: &[usize]) -> Result<Self> {
        if positions.len() != letters.len() {
            return Err(AtlasError::Domain(format!(
                "{} excedances but {} excedance letters",
                positions.len(),
                letters.len()
            )));
        }
        let mut pos = positions.to_vec();
        let mut let_ = letters.to_vec();
        pos.sort_unstable();
        let_.sort_unstable();
        if pos.windows(2).any(|w| w[0] == w[1]) || let_.windows(2).any(|w| w[0] == w[1]) {
            return Err(AtlasError::Domain("repeated excedance or letter".into()));
        }
        if pos.iter().chain(&let_).any(|&x| x == 0 || x > n) {
            return Err(AtlasError::Domain(format!("excedance data outside 1..={n}")));
        }
        let mut word = vec![0; n];
        let mut used = vec![false; n + 1];
        for (&p, &l) in pos.iter().zip(&let_) {
            word[p - 1] = l;
            used[l] = true;
        }
        let mut rest = (1..=n).filter(|&v| !used[v]);
        for slot in word.iter_mut().filter(|s| **s == 0) {
            *slot = rest.next().expect("counts match");
        }
        let p = Permutation { word };
        if p.excedance_set() != pos {
            return Err(AtlasError::Domain(format!(
                "no bi-increasing permutation of length {n} has excedances {pos:?} with letters {let_:?}"
            )));
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = AtlasError;

    /// Whitespace-separated 1-based values, e.g. `"2 6 1 3 7 4 5 8 10 9"`.
    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| {
                    AtlasError::parse("perm: whitespace-separated positive integers", format!("bad token `{tok}`"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word).map_err(|e| AtlasError::parse("perm: rearrangement of 1..n", e.to_string()))
    }
}

/// All scalar statistics and index sets of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatBundle {
    pub exc: usize,
    pub des: usize,
    pub inv: usize,
    pub maj: usize,
    pub dexc: usize,
    pub ddes: usize,
    pub den: usize,
    pub fix: usize,
    pub excedance_set: Vec<usize>,
    pub descent_set: Vec<usize>,
    pub fixed_point_set: Vec<usize>,
    pub excedance_letters: Vec<usize>,
}

/// Subwords of excedance letters, non-excedance letters, descent tops, and
/// the remaining letters, each in order of appearance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RestrictionWords {
    pub pi_e: Vec<usize>,
    pub pi_ne: Vec<usize>,
    pub pi_d: Vec<usize>,
    pub pi_nd: Vec<usize>,
}

/// The four equivalent tests for being bi-increasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BiIncMethod {
    InvEqDexc,
    SortedRestrictions,
    LetterCount,
    Pattern321,
}

impl BiIncMethod {
    pub const ALL: [BiIncMethod; 4] = [
        BiIncMethod::InvEqDexc,
        BiIncMethod::SortedRestrictions,
        BiIncMethod::LetterCount,
        BiIncMethod::Pattern321,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BiIncMethod::InvEqDexc => "inv-eq-dexc",
            BiIncMethod::SortedRestrictions => "sorted-restrictions",
            BiIncMethod::LetterCount => "letter-count",
            BiIncMethod::Pattern321 => "pattern-321",
        }
    }
}

impl FromStr for BiIncMethod {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        BiIncMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| AtlasError::Unknown { what: "bi-increasing method", name: s.into() })
    }
}

/// Named scalar statistics usable in distribution tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Exc,
    Des,
    Inv,
    Maj,
    Dexc,
    Ddes,
    Den,
    Fix,
    /// Greatest excedance (0 if none).
    Gexc,
}

impl Statistic {
    pub const ALL: [Statistic; 9] = [
        Statistic::Exc,
        Statistic::Des,
        Statistic::Inv,
        Statistic::Maj,
        Statistic::Dexc,
        Statistic::Ddes,
        Statistic::Den,
        Statistic::Fix,
        Statistic::Gexc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Exc => "exc",
            Statistic::Des => "des",
            Statistic::Inv => "inv",
            Statistic::Maj => "maj",
            Statistic::Dexc => "dexc",
            Statistic::Ddes => "ddes",
            Statistic::Den => "den",
            Statistic::Fix => "fix",
            Statistic::Gexc => "gexc",
        }
    }

    pub fn of(self, p: &Permutation) -> usize {
        match self {
            Statistic::Exc => p.exc(),
            Statistic::Des => p.des(),
            Statistic::Inv => p.inv(),
            Statistic::Maj => p.maj(),
            Statistic::Dexc => p.dexc(),
            Statistic::Ddes => p.ddes(),
            Statistic::Den => p.den(),
            Statistic::Fix => p.fix(),
            Statistic::Gexc => p.greatest_excedance(),
        }
    }

    /// Parses a comma-separated list such as `"exc,dexc"`.
    pub fn parse_list(s: &str) -> Result<Vec<Statistic>> {
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl FromStr for Statistic {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| AtlasError::Unknown { what: "statistic", name: s.into() })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn is_increasing(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] < p[1])
}

/// Inversions of an arbitrary word over distinct positive integers.
pub fn inversions(word: &[usize]) -> usize {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut tree = Fenwick::new(max);
    let mut count = 0;
    for (seen, &v) in word.iter().enumerate() {
        count += seen - tree.prefix(v);
        tree.add(v);
    }
    count
}

struct Fenwick {
    tree: Vec<usize>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick { tree: vec![0; n + 1] }
    }

    fn add(&mut self, mut i: usize) {
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Number of inserted values `<= i`.
    fn prefix(&self, mut i: usize) -> usize {
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn inv_naive(w: &[usize]) -> usize {
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    fn has_321_naive(w: &[usize]) -> bool {
        let n = w.len();
        (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| w[i] > w[j] && w[j] > w[k])))
    }

    #[test]
    fn running_example_sets_and_differences() {
        let s = p("4 2 8 3 6 9 7 5 1 10").stats();
        assert_eq!(s.excedance_set, vec![1, 3, 5, 6]);
        assert_eq!(s.descent_set, vec![1, 3, 6, 7, 8]);
        assert_eq!(s.dexc, 12);
        assert_eq!(s.ddes, 15);
        assert_eq!(s.inv, 18);
        assert_eq!(s.maj, 25);
        assert_eq!(s.inv, inv_naive(&[4, 2, 8, 3, 6, 9, 7, 5, 1, 10]));
    }

    #[test]
    fn bi_increasing_example_stats() {
        let s = p("2 6 1 3 7 4 5 8 10 9").stats();
        assert_eq!((s.inv, s.dexc, s.des, s.ddes, s.exc), (8, 8, 3, 9, 4));
    }

    #[test]
    fn identity_and_singleton() {
        for n in 1..6 {
            let s = Permutation::identity(n).stats();
            assert_eq!((s.exc, s.des, s.inv, s.maj, s.dexc, s.ddes, s.den), (0, 0, 0, 0, 0, 0, 0));
            assert_eq!(s.fix, n);
        }
    }

    #[test]
    fn restriction_words_examples() {
        let r = p("4 2 8 3 6 9 7 5 1 10").restriction_words();
        assert_eq!(r.pi_e, vec![4, 8, 6, 9]);
        assert_eq!(r.pi_ne, vec![2, 3, 7, 5, 1, 10]);
        assert_eq!(r.pi_d, vec![4, 8, 9, 7, 5]);
        let r = p("2 6 1 3 7 4 5 8 10 9").restriction_words();
        assert_eq!(r.pi_e, vec![2, 6, 7, 10]);
        assert_eq!(r.pi_ne, vec![1, 3, 4, 5, 8, 9]);
        let r = Permutation::identity(4).restriction_words();
        assert!(r.pi_e.is_empty());
        assert_eq!(r.pi_ne, vec![1, 2, 3, 4]);
    }

    #[test]
    fn reverse_code_cases() {
        assert_eq!(Permutation::identity(5).reverse_code(), vec![0; 5]);
        assert_eq!(p("5 4 3 2 1").reverse_code(), vec![0, 1, 2, 3, 4]);
        let q = p("2 6 1 3 7 4 5 8 10 9");
        let w = q.word();
        let oracle: Vec<usize> = (0..w.len()).map(|i| w[..i].iter().filter(|&&x| x > w[i]).count()).collect();
        assert_eq!(q.reverse_code(), oracle);
        assert_eq!(oracle.iter().sum::<usize>(), 8);
    }

    #[test]
    fn bi_increasing_methods_on_examples() {
        for m in BiIncMethod::ALL {
            assert!(p("2 6 1 3 7 4 5 8 10 9").is_bi_increasing_by(m), "{}", m.name());
            assert!(!p("4 2 8 3 6 9 7 5 1 10").is_bi_increasing_by(m), "{}", m.name());
            assert!(Permutation::identity(6).is_bi_increasing_by(m));
        }
        assert!(has_321_naive(&[4, 2, 8, 3, 6, 9, 7, 5, 1, 10]));
        assert!("sideways".parse::<BiIncMethod>().is_err());
    }

    #[test]
    fn exc_equals_des_examples() {
        let q = p("3 1 7 2 4 5 6 8 10 9");
        assert!(q.exc_equals_des());
        assert_eq!((q.exc(), q.des()), (3, 3));
        assert!(!p("2 6 1 3 7 4 5 8 10 9").exc_equals_des());
        assert!(Permutation::identity(3).exc_equals_des());
    }

    #[test]
    fn barred_pattern_examples() {
        assert!(Permutation::identity(5).avoids_barred_3142());
        assert!(p("3 1 7 2 4 5 6 8 10 9").avoids_barred_3142());
        assert!(!p("2 6 1 3 7 4 5 8 10 9").avoids_barred_3142());
    }

    #[test]
    fn descent_block_examples() {
        let b = p("2 7 4 3 1 6 5 8 10 9").descent_blocks();
        assert_eq!(b, vec![vec![2], vec![7, 4, 3, 1], vec![6, 5], vec![8], vec![10, 9]]);
        assert_eq!(Permutation::identity(4).descent_blocks().len(), 4);
    }

    #[test]
    fn fixed_point_criterion_cases() {
        let q = p("2 6 1 3 7 4 5 8 10 9");
        assert!(q.fixed_point_criterion(8).unwrap());
        assert!(!q.fixed_point_criterion(1).unwrap());
        assert!(q.fixed_point_criterion(11).is_err());
        assert!(matches!(
            p("3 2 1").fixed_point_criterion(2),
            Err(AtlasError::NotBiIncreasing(_))
        ));
        let id = Permutation::identity(5);
        assert!((1..=5).all(|i| id.fixed_point_criterion(i).unwrap()));
    }

    #[test]
    fn from_excedances_round_trip_and_rejection() {
        let q = p("2 6 1 3 7 4 5 8 10 9");
        let back = Permutation::from_excedances(10, &q.excedance_set(), &q.excedance_letters()).unwrap();
        assert_eq!(back, q);
        // letter 2 cannot sit at position 2
        assert!(Permutation::from_excedances(3, &[2], &[2]).is_err());
    }

    #[test]
    fn construction_rejects_bad_words() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!("1 x 2".parse::<Permutation>().is_err());
        assert!(matches!("1 3".parse::<Permutation>(), Err(AtlasError::Parse { .. })));
    }

    #[test]
    fn statistic_names_parse() {
        assert_eq!(Statistic::parse_list("exc,dexc").unwrap(), vec![Statistic::Exc, Statistic::Dexc]);
        assert!(Statistic::parse_list("exc,foo").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
            (1..=max_n).prop_flat_map(|n| {
                Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(Permutation::from_word_unchecked)
            })
        }

        proptest! {
            #[test]
            fn fast_inv_matches_quadratic(q in arb_perm(40)) {
                prop_assert_eq!(q.inv(), inv_naive(q.word()));
                prop_assert_eq!(q.reverse_code().iter().sum::<usize>(), q.inv());
            }

            #[test]
            fn bundle_invariants(q in arb_perm(30)) {
                let s = q.stats();
                prop_assert_eq!(s.exc, s.excedance_set.len());
                prop_assert_eq!(s.maj, s.descent_set.iter().sum::<usize>());
                prop_assert!(s.exc == 0 || s.dexc >= s.exc);
                let r = q.restriction_words();
                prop_assert_eq!(r.pi_e.len(), s.exc);
                prop_assert_eq!(r.pi_d.len(), s.des);
                prop_assert_eq!(r.pi_e.len() + r.pi_ne.len(), q.len());
            }

            #[test]
            fn linear_321_matches_brute(q in arb_perm(12)) {
                prop_assert_eq!(q.is_bi_increasing(), !has_321_naive(q.word()));
            }

            #[test]
            fn inverse_preserves_inv_and_dexc(q in arb_perm(30)) {
                let i = q.inverse();
                prop_assert_eq!(i.inv(), q.inv());
                prop_assert_eq!(i.dexc(), q.dexc());
                prop_assert_eq!(i.exc(), q.len() - q.exc() - q.fix());
            }

            #[test]
            fn text_round_trip(q in arb_perm(20)) {
                prop_assert_eq!(q.to_string().parse::<Permutation>().unwrap(), q);
            }
        }
    }
}
