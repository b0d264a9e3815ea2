//! Permutation-to-permutation maps: Foata's φ, the bi-sorting map and its
//! classes, adjacent-transposition words, ψ, extremal constructions, and
//! insertion into active sites.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{AtlasError, Result};
use crate::perm::Permutation;

/// A product `s_{a_1} s_{a_2} … s_{a_m}` of adjacent transpositions, where
/// `s_i` exchanges the values `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratorWord {
    pub indices: Vec<usize>,
}

impl GeneratorWord {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        let indices = s
            .split_whitespace()
            .map(|tok| {
                tok.strip_prefix('s')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| AtlasError::parse("gens: tokens s<i> with i >= 1", format!("bad token `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorWord { indices })
    }
}

/// Position pairs `(i, j)`, `i < j`, whose exchange keeps a bi-increasing
/// permutation's excedance set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TranspositionSet {
    pub pairs: BTreeSet<(usize, usize)>,
}

impl TranspositionSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `|{j : (i, j) ∈ T}|` for each `i = 1..=n`.
    pub fn out_degrees(&self, n: usize) -> Vec<usize> {
        let mut deg = vec![0; n];
        for &(i, _) in &self.pairs {
            deg[i - 1] += 1;
        }
        deg
    }
}

/// Foata's first fundamental transformation, in the variant that carries
/// `(exc, dexc)` to `(des, ddes)`.
///
/// Each cycle is written starting at its maximum `m` as `m, π⁻¹(m), π⁻²(m), …`,
/// and cycles are concatenated by increasing maximum.
pub fn foata_phi(p: &Permutation) -> Permutation {
    let n = p.len();
    let inv = p.inverse();
    let mut seen = vec![false; n + 1];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = p.at(x);
        }
        cycles.push(cycle);
    }
    let mut heads: Vec<usize> = cycles.iter().map(|c| *c.iter().max().unwrap()).collect();
    heads.sort_unstable();
    let mut word = Vec::with_capacity(n);
    for m in heads {
        let mut x = m;
        loop {
            word.push(x);
            x = inv.at(x);
            if x == m {
                break;
            }
        }
    }
    Permutation::from_word_unchecked(word)
}

/// Inverse of [`foata_phi`]: cut the word before each left-to-right maximum
/// and close every block into a cycle.
pub fn foata_phi_inverse(w: &Permutation) -> Permutation {
    let n = w.len();
    let word = w.word();
    let mut out = vec![0; n];
    let mut start = 0;
    let mut max = 0;
    for (i, &v) in word.iter().enumerate() {
        if v > max && i > 0 {
            close_block(&word[start..i], &mut out);
            start = i;
        }
        max = max.max(v);
    }
    close_block(&word[start..], &mut out);
    Permutation::from_word_unchecked(out)
}

fn close_block(block: &[usize], out: &mut [usize]) {
    let l = block.len();
    for k in 1..l {
        out[block[k] - 1] = block[k - 1];
    }
    out[block[0] - 1] = block[l - 1];
}

/// Sorts the excedance letters and the non-excedance letters in place.
pub fn hat(p: &Permutation) -> Permutation {
    let r = p.restriction_words();
    let mut e = r.pi_e;
    let mut ne = r.pi_ne;
    e.sort_unstable();
    ne.sort_unstable();
    let (mut e, mut ne) = (e.into_iter(), ne.into_iter());
    let word = (1..=p.len())
        .map(|i| if p.is_excedance(i) { e.next() } else { ne.next() }.expect("counts match"))
        .collect();
    Permutation::from_word_unchecked(word)
}

pub fn transposition_set(p: &Permutation) -> Result<TranspositionSet> {
    p.require_bi_increasing()?;
    let n = p.len();
    let mut pairs = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let both_exc = p.is_excedance(i) && p.is_excedance(j) && j < p.at(i);
            let both_ne = !p.is_excedance(i) && !p.is_excedance(j) && i >= p.at(j);
            if both_exc || both_ne {
                pairs.insert((i, j));
            }
        }
    }
    Ok(TranspositionSet { pairs })
}

/// All `τ` with `hat(τ) = p`, found by breadth-first closure under the
/// position swaps listed in `T_p`.
pub fn equivalence_class(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    let t = transposition_set(p)?;
    let mut class = BTreeSet::new();
    let mut queue = VecDeque::new();
    class.insert(p.clone());
    queue.push_back(p.clone());
    while let Some(tau) = queue.pop_front() {
        for &(i, j) in &t.pairs {
            let mut w = tau.word().to_vec();
            w.swap(i - 1, j - 1);
            let next = Permutation::from_word_unchecked(w);
            if !class.contains(&next) && hat(&next) == *p {
                class.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(class)
}

/// `∏_i (|{j : (i, j) ∈ T_p}| + 1)`.
pub fn class_size(p: &Permutation) -> Result<BigUint> {
    let t = transposition_set(p)?;
    Ok(t.out_degrees(p.len()).into_iter().map(|d| BigUint::from(d + 1)).product())
}

/// Writes a bi-increasing permutation as a product of adjacent
/// transpositions of length `inv(p)`.
pub fn factorize(p: &Permutation) -> Result<GeneratorWord> {
    p.require_bi_increasing()?;
    let n = p.len();
    let mut tau = p.word().to_vec();
    let mut pos = vec![0; n + 1];
    for (i, &v) in tau.iter().enumerate() {
        pos[v] = i;
    }
    let mut indices = Vec::new();
    for i in 1..n {
        while tau[i - 1] > i {
            let a = tau[i - 1] - 1;
            indices.push(a);
            let (pa, pb) = (pos[a], pos[a + 1]);
            tau.swap(pa, pb);
            pos.swap(a, a + 1);
        }
    }
    debug_assert!(tau.iter().enumerate().all(|(i, &v)| v == i + 1));
    Ok(GeneratorWord { indices })
}

/// Evaluates a generator word in `S_n`, applying the rightmost factor first.
pub fn evaluate_word(w: &GeneratorWord, n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(AtlasError::OutOfRange("n must be at least 1".into()));
    }
    let mut word: Vec<usize> = (1..=n).collect();
    let mut pos: Vec<usize> = (0..=n).map(|v| v.saturating_sub(1)).collect();
    for &a in w.indices.iter().rev() {
        if a == 0 || a >= n {
            return Err(AtlasError::OutOfRange(format!("generator s{a} outside s1..s{}", n - 1)));
        }
        let (pa, pb) = (pos[a], pos[a + 1]);
        word.swap(pa, pb);
        pos.swap(a, a + 1);
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// The bijection on bi-increasing permutations carrying `ddes` to `dexc`.
///
/// Excedances that are also descents (`i`) contribute the position `π_{i+1}`,
/// the other excedances (`j`) contribute `π_j`; the excedance letters are
/// kept.
pub fn psi(p: &Permutation) -> Result<Permutation> {
    p.require_bi_increasing()?;
    let n = p.len();
    let mut positions = Vec::new();
    let mut letters = Vec::new();
    for i in p.excedance_set() {
        letters.push(p.at(i));
        if i < n && p.at(i) > p.at(i + 1) {
            positions.push(p.at(i + 1));
        } else {
            positions.push(p.at(i));
        }
    }
    Permutation::from_excedances(n, &positions, &letters)
}

/// The permutation with excedance set `I`, excedance letters `A`, and the
/// largest inversion number, built greedily from the last excedance down
/// and from the first non-excedance up.
pub fn max_inv_permutation(excedances: &[usize], letters: &[usize], n: usize) -> Result<Permutation> {
    let set = |xs: &[usize]| -> Result<BTreeSet<usize>> {
        let s: BTreeSet<usize> = xs.iter().copied().collect();
        if s.len() != xs.len() || s.iter().any(|&x| x == 0 || x > n) {
            return Err(AtlasError::Domain(format!("{xs:?} is not a subset of 1..={n}")));
        }
        Ok(s)
    };
    let ii = set(excedances)?;
    let mut aa = set(letters)?;
    if ii.len() != aa.len() {
        return Err(AtlasError::Domain("I and A differ in size".into()));
    }
    let mut word = vec![0; n];
    for &i in ii.iter().rev() {
        let a = *aa.range(i + 1..).next().ok_or_else(|| {
            AtlasError::Domain(format!("no excedance letter left above position {i}"))
        })?;
        aa.remove(&a);
        word[i - 1] = a;
    }
    let lset: BTreeSet<usize> = letters.iter().copied().collect();
    let mut bb: BTreeSet<usize> = (1..=n).filter(|v| !lset.contains(v)).collect();
    for j in (1..=n).filter(|j| !ii.contains(j)) {
        let b = *bb.range(..=j).next_back().ok_or_else(|| {
            AtlasError::Domain(format!("no non-excedance letter left at or below position {j}"))
        })?;
        bb.remove(&b);
        word[j - 1] = b;
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// `π^(0) = 1 2 … n, π^(1), …` with `dexc(π^(k)) = k` and
/// `inv(π^(k)) = 2k − exc(π^(k))`.
pub fn extremal_sequence(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(AtlasError::OutOfRange("n must be at least 1".into()));
    }
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut seq = vec![Permutation::from_word_unchecked(cur.clone())];
    while let Some(e) = (1..=n).find(|&e| e + cur[e - 1] < n + 1) {
        let a = cur[e - 1];
        cur[e - 1] = a + 1;
        if a != e {
            cur[a - 1] = a;
        }
        cur[a] = e;
        seq.push(Permutation::from_word_unchecked(cur.clone()));
    }
    Ok(seq)
}

/// Positions `i ∈ [n+1]` where inserting `n+1` before `π_i` keeps the
/// permutation 321-avoiding: everything after the greatest excedance.
pub fn active_sites(p: &Permutation) -> Result<Vec<usize>> {
    p.require_bi_increasing()?;
    Ok((p.greatest_excedance() + 1..=p.len() + 1).collect())
}

/// `π_1 ⋯ π_{i−1} (n+1) π_i ⋯ π_n` for an active site `i`.
pub fn insert_at_site(p: &Permutation, i: usize) -> Result<Permutation> {
    p.require_bi_increasing()?;
    let n = p.len();
    if i == 0 || i > n + 1 {
        return Err(AtlasError::OutOfRange(format!("site {i} outside 1..={}", n + 1)));
    }
    if i <= p.greatest_excedance() {
        return Err(AtlasError::Domain(format!("site {i} is not active for {p}")));
    }
    Ok(insert_unchecked(p.word(), i))
}

pub(crate) fn insert_unchecked(word: &[usize], i: usize) -> Permutation {
    let mut w = Vec::with_capacity(word.len() + 1);
    w.extend_from_slice(&word[..i - 1]);
    w.push(word.len() + 1);
    w.extend_from_slice(&word[i - 1..]);
    Permutation::from_word_unchecked(w)
}

/// Sends a bi-increasing `σ` with `exc = des` and a fixed point to a
/// bi-increasing derangement with `exc = des` one size larger: insert the
/// new maximum before the smallest fixed point, then sort the descent tops.
pub fn deutsch_insert(p: &Permutation) -> Result<Permutation> {
    if !p.exc_equals_des() {
        return Err(AtlasError::Domain(format!("{p} is not bi-increasing with exc = des")));
    }
    let i = *p
        .fixed_point_set()
        .first()
        .ok_or_else(|| AtlasError::Domain(format!("{p} has no fixed point")))?;
    let mut w = insert_unchecked(p.word(), i).into_word();
    let tops: Vec<usize> = (0..w.len() - 1).filter(|&k| w[k] > w[k + 1]).collect();
    let mut vals: Vec<usize> = tops.iter().map(|&k| w[k]).collect();
    vals.sort_unstable();
    for (&k, v) in tops.iter().zip(vals) {
        w[k] = v;
    }
    Permutation::new(w)
}
