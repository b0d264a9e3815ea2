//! Dyck and 2-Motzkin paths and the path-valued bijections.
//!
//! Dyck words use `U`/`D`; 2-Motzkin words use `u`, `d`, `s` (solid level
//! step) and `b` (broken level step). The height of a step is the ordinate
//! at its start.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bij;
use crate::error::{AtlasError, Result};
use crate::perm::Permutation;
use crate::polyomino::{self, ParallelogramPolyomino, StepPolyomino};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DyckStep {
    U,
    D,
}

/// A word over `{U, D}` that never dips below zero and ends at zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<DyckStep>,
}

impl DyckPath {
    pub fn new(steps: Vec<DyckStep>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == DyckStep::U { 1 } else { -1 };
            if h < 0 {
                return Err(AtlasError::invalid("Dyck path", format!("goes below zero at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(AtlasError::invalid("Dyck path", "does not return to zero"));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Runs of equal steps, starting with an `U` run.
    fn runs(&self) -> Vec<usize> {
        let mut runs: Vec<usize> = Vec::new();
        let mut last = None;
        for &s in &self.steps {
            if Some(s) == last {
                *runs.last_mut().unwrap() += 1;
            } else {
                runs.push(1);
                last = Some(s);
            }
        }
        runs
    }

    /// Heights of the peaks, left to right.
    pub fn peaks(&self) -> Vec<usize> {
        self.turns(DyckStep::U, DyckStep::D)
    }

    /// Heights of the valleys, left to right.
    pub fn valleys(&self) -> Vec<usize> {
        self.turns(DyckStep::D, DyckStep::U)
    }

    fn turns(&self, first: DyckStep, second: DyckStep) -> Vec<usize> {
        let mut h = 0usize;
        let mut out = Vec::new();
        for (i, &s) in self.steps.iter().enumerate() {
            if s == DyckStep::U {
                h += 1;
            } else {
                h -= 1;
            }
            if s == first && self.steps.get(i + 1) == Some(&second) {
                out.push(h);
            }
        }
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == DyckStep::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        const RULE: &str = "dyck: word over U, D";
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(DyckStep::U),
                'D' => Ok(DyckStep::D),
                _ => Err(AtlasError::parse(RULE, format!("unexpected letter `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps).map_err(|e| AtlasError::parse(RULE, e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotzkinStep {
    U,
    D,
    /// Solid level step.
    S,
    /// Broken level step.
    B,
}

impl MotzkinStep {
    pub fn letter(self) -> char {
        match self {
            MotzkinStep::U => 'u',
            MotzkinStep::D => 'd',
            MotzkinStep::S => 's',
            MotzkinStep::B => 'b',
        }
    }

    fn delta(self) -> i64 {
        match self {
            MotzkinStep::U => 1,
            MotzkinStep::D => -1,
            _ => 0,
        }
    }
}

/// A word over `{u, d, s, b}` that never dips below zero and ends at zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoMotzkinPath {
    steps: Vec<MotzkinStep>,
}

impl TwoMotzkinPath {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(AtlasError::invalid("2-Motzkin path", format!("goes below zero at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(AtlasError::invalid("2-Motzkin path", "does not return to zero"));
        }
        Ok(TwoMotzkinPath { steps })
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `h_i`, the ordinate at the start of step `i`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0i64;
        self.steps
            .iter()
            .map(|s| {
                let start = h;
                h += s.delta();
                start as usize
            })
            .collect()
    }

    pub fn count(&self, step: MotzkinStep) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// No broken step at height zero.
    pub fn is_star(&self) -> bool {
        self.steps.iter().zip(self.heights()).all(|(&s, h)| !(s == MotzkinStep::B && h == 0))
    }

    /// No broken step at all.
    pub fn is_plain(&self) -> bool {
        self.count(MotzkinStep::B) == 0
    }

    /// Positions (1-based) of the letters in `set`.
    fn positions(&self, set: &[MotzkinStep]) -> Vec<usize> {
        (1..=self.len()).filter(|&i| set.contains(&self.steps[i - 1])).collect()
    }

    fn require_star(&self) -> Result<()> {
        if self.is_star() {
            Ok(())
        } else {
            Err(AtlasError::Domain(format!("path {self} has a broken step at height 0")))
        }
    }
}

impl fmt::Display for TwoMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for TwoMotzkinPath {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        const RULE: &str = "motzkin2: word over u, d, s, b";
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'u' => Ok(MotzkinStep::U),
                'd' => Ok(MotzkinStep::D),
                's' => Ok(MotzkinStep::S),
                'b' => Ok(MotzkinStep::B),
                _ => Err(AtlasError::parse(RULE, format!("unexpected letter `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        TwoMotzkinPath::new(steps).map_err(|e| AtlasError::parse(RULE, e.to_string()))
    }
}

fn motzkin_unchecked(steps: Vec<MotzkinStep>) -> TwoMotzkinPath {
    debug_assert!(TwoMotzkinPath::new(steps.clone()).is_ok());
    TwoMotzkinPath { steps }
}

/// Step counts, heights, and adjacent-pair counts of a 2-Motzkin path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathStats {
    pub length: usize,
    pub up: usize,
    pub down: usize,
    pub solid: usize,
    pub broken: usize,
    pub height_sum: usize,
    pub level0_solid: usize,
    /// Occurrences of `dd`, `db`, `sd`, `sb`.
    pub falling_pairs: usize,
    /// Occurrences of `uu`, `us`, `bu`, `bs`.
    pub rising_pairs: usize,
    /// `1 + falling_pairs`, the rank of the matching skew diagram.
    pub rank_from_path: usize,
}

pub fn path_stats(c: &TwoMotzkinPath) -> PathStats {
    use MotzkinStep::*;
    let heights = c.heights();
    let pairs = |set: &[(MotzkinStep, MotzkinStep)]| {
        c.steps.windows(2).filter(|w| set.contains(&(w[0], w[1]))).count()
    };
    let falling = pairs(&[(D, D), (D, B), (S, D), (S, B)]);
    PathStats {
        length: c.len(),
        up: c.count(U),
        down: c.count(D),
        solid: c.count(S),
        broken: c.count(B),
        height_sum: heights.iter().sum(),
        level0_solid: c.steps.iter().zip(&heights).filter(|&(&s, &h)| s == S && h == 0).count(),
        falling_pairs: falling,
        rising_pairs: pairs(&[(U, U), (U, S), (B, U), (B, S)]),
        rank_from_path: 1 + falling,
    }
}

/// True iff the word is a `{u, s}` prefix followed by a `{d, b}` suffix.
pub fn is_partition_path(c: &TwoMotzkinPath) -> bool {
    let rising = |s: &MotzkinStep| matches!(s, MotzkinStep::U | MotzkinStep::S);
    let k = c.steps.iter().take_while(|s| rising(s)).count();
    c.steps[k..].iter().all(|s| !rising(s))
}

/// Billey–Jockusch–Stanley: `U^{α_1} D^{β_1} ⋯ U^{α_w} D^{β_w}` from the
/// step polyomino of `p`.
pub fn bjs(p: &Permutation) -> Result<DyckPath> {
    let sp = polyomino::perm_to_step(p)?;
    let mut steps = Vec::with_capacity(2 * p.len());
    for (&a, &b) in sp.alpha().iter().zip(sp.beta()) {
        steps.extend(std::iter::repeat_n(DyckStep::U, a));
        steps.extend(std::iter::repeat_n(DyckStep::D, b));
    }
    Ok(DyckPath { steps })
}

pub fn bjs_inverse(d: &DyckPath) -> Result<Permutation> {
    if d.is_empty() {
        return Err(AtlasError::Domain("the empty Dyck path has no permutation".into()));
    }
    let runs = d.runs();
    let alpha = runs.iter().step_by(2).copied().collect();
    let beta = runs.iter().skip(1).step_by(2).copied().collect();
    let sp = StepPolyomino::new(alpha, beta)?;
    polyomino::step_to_perm(&sp)
}

/// Delest–Viennot: peaks are column heights, valleys are one less than the
/// number of rows shared by adjacent columns.
pub fn delest_viennot(pp: &ParallelogramPolyomino) -> DyckPath {
    let spans = pp.column_spans();
    let heights: Vec<usize> = spans.iter().map(|(b, t)| t - b).collect();
    let mut steps = Vec::new();
    let mut level = 0;
    for i in 0..spans.len() {
        steps.extend(std::iter::repeat_n(DyckStep::U, heights[i] - level));
        let next = if i + 1 < spans.len() { spans[i].1 - spans[i + 1].0 - 1 } else { 0 };
        steps.extend(std::iter::repeat_n(DyckStep::D, heights[i] - next));
        level = next;
    }
    DyckPath { steps }
}

pub fn delest_viennot_inverse(d: &DyckPath) -> Result<ParallelogramPolyomino> {
    if d.is_empty() {
        return Err(AtlasError::Domain("the empty Dyck path has no polyomino".into()));
    }
    let peaks = d.peaks();
    let valleys = d.valleys();
    let w = peaks.len();
    let (mut bottom, mut top) = (0usize, peaks[0]);
    let mut gamma = vec![top];
    let mut delta = Vec::with_capacity(w);
    for i in 1..w {
        let next_bottom = top - (valleys[i - 1] + 1);
        delta.push(next_bottom - bottom);
        bottom = next_bottom;
        let next_top = bottom + peaks[i];
        gamma.push(next_top - top);
        top = next_top;
    }
    delta.push(top - bottom);
    ParallelogramPolyomino::new(gamma, delta)
}

/// Françon–Viennot projection: `c_{π_i}` records whether `π_i` is a double
/// ascent (`s`), double descent (`b`), peak (`d`) or valley (`u`), with
/// `π_0 = 0` and `π_{n+1} = n+1`.
pub fn francon_viennot(p: &Permutation) -> TwoMotzkinPath {
    fv_word(p, false)
}

/// [`francon_viennot`] restricted to its bijective domain: bi-increasing
/// permutations with as many excedances as descents.
pub fn francon_viennot_restricted(p: &Permutation) -> Result<TwoMotzkinPath> {
    p.require_bi_increasing()?;
    if !p.exc_equals_des() {
        return Err(AtlasError::Domain(format!("permutation {p} has exc != des")));
    }
    Ok(fv_word(p, false))
}

/// Françon–Viennot variant on bi-increasing permutations: a double ascent
/// at an excedance becomes `b`.
pub fn fv_extended(p: &Permutation) -> Result<TwoMotzkinPath> {
    p.require_bi_increasing()?;
    Ok(fv_word(p, true))
}

fn fv_word(p: &Permutation, mark_excedances: bool) -> TwoMotzkinPath {
    let n = p.len();
    let at = |i: usize| if i == 0 { 0 } else if i > n { n + 1 } else { p.at(i) };
    let mut steps = vec![MotzkinStep::S; n];
    for i in 1..=n {
        let (l, m, r) = (at(i - 1), at(i), at(i + 1));
        steps[m - 1] = match (l < m, m < r) {
            (true, true) if mark_excedances && p.is_excedance(i) => MotzkinStep::B,
            (true, true) => MotzkinStep::S,
            (false, false) => MotzkinStep::B,
            (true, false) => MotzkinStep::D,
            (false, true) => MotzkinStep::U,
        };
    }
    motzkin_unchecked(steps)
}

/// Rebuilds the word from letter classes: tops (`d`, `b`) are cut after
/// each `d`, bottoms (`u`, `s`) before each `u`, and the pieces interleave
/// as `Y_0 X_1 Y_1 X_2 Y_2 ⋯`.
fn fv_merge(c: &TwoMotzkinPath) -> Result<Permutation> {
    use MotzkinStep::*;
    let mut xs: Vec<Vec<usize>> = vec![Vec::new()];
    let mut ys: Vec<Vec<usize>> = vec![Vec::new()];
    for (v, &s) in (1..).zip(&c.steps) {
        match s {
            D | B => {
                xs.last_mut().unwrap().push(v);
                if s == D {
                    xs.push(Vec::new());
                }
            }
            U | S => {
                if s == U {
                    ys.push(Vec::new());
                }
                ys.last_mut().unwrap().push(v);
            }
        }
    }
    xs.pop();
    let mut word = Vec::with_capacity(c.len());
    word.extend(&ys[0]);
    for (x, y) in xs.iter().zip(&ys[1..]) {
        word.extend(x);
        word.extend(y);
    }
    if word.len() != c.len() {
        return Err(AtlasError::Domain(format!("path {c} does not encode a permutation")));
    }
    Permutation::new(word)
}

pub fn francon_viennot_inverse(c: &TwoMotzkinPath) -> Result<Permutation> {
    if c.is_empty() {
        return Err(AtlasError::Domain("the empty path has no permutation".into()));
    }
    if !c.is_plain() {
        return Err(AtlasError::Domain(format!("path {c} contains a broken step")));
    }
    let p = fv_merge(c)?;
    if francon_viennot(&p) != *c || !p.is_bi_increasing() || !p.exc_equals_des() {
        return Err(AtlasError::Domain(format!("path {c} is not the image of a permutation with exc = des")));
    }
    Ok(p)
}

pub fn fv_extended_inverse(c: &TwoMotzkinPath) -> Result<Permutation> {
    if c.is_empty() {
        return Err(AtlasError::Domain("the empty path has no permutation".into()));
    }
    c.require_star()?;
    let p = fv_merge(c)?;
    if !p.is_bi_increasing() || fv_word(&p, true) != *c {
        return Err(AtlasError::Domain(format!("path {c} is not the image of a bi-increasing permutation")));
    }
    Ok(p)
}

/// Foata–Zeilberger projection: position `i` is `u`, `b`, `d` or `s` as it
/// is an excedance only, both an excedance and an excedance letter, an
/// excedance letter only, or neither.
pub fn foata_zeilberger(p: &Permutation) -> TwoMotzkinPath {
    let n = p.len();
    let mut is_letter = vec![false; n + 1];
    for i in p.excedance_set() {
        is_letter[p.at(i)] = true;
    }
    let steps = (1..=n)
        .map(|i| match (p.is_excedance(i), is_letter[i]) {
            (true, true) => MotzkinStep::B,
            (true, false) => MotzkinStep::U,
            (false, true) => MotzkinStep::D,
            (false, false) => MotzkinStep::S,
        })
        .collect();
    motzkin_unchecked(steps)
}

/// The bi-increasing permutation with excedances at `{u, b}` positions and
/// excedance letters at `{d, b}` positions.
pub fn fz_inverse_bi(c: &TwoMotzkinPath) -> Result<Permutation> {
    use MotzkinStep::*;
    if c.is_empty() {
        return Err(AtlasError::Domain("the empty path has no permutation".into()));
    }
    c.require_star()?;
    Permutation::from_excedances(c.len(), &c.positions(&[U, B]), &c.positions(&[D, B]))
}

/// Sends `(γ, δ)` to the path with `d` on `A∖C`, `u` on `B∖C`, `b` on `C`
/// and `s` elsewhere, where `A = {γ_1+…+γ_i+i}`, `B = {δ_1+…+δ_i+i}` for
/// `i < w` and `C = A ∩ B`.
pub fn polyomino_to_2motzkin(pp: &ParallelogramPolyomino) -> TwoMotzkinPath {
    let n = pp.n();
    let w = pp.width();
    let mut in_a = vec![false; n + 1];
    let mut in_b = vec![false; n + 1];
    let (mut sg, mut sd) = (0, 0);
    for i in 1..w {
        sg += pp.gamma()[i - 1];
        sd += pp.delta()[i - 1];
        in_a[sg + i] = true;
        in_b[sd + i] = true;
    }
    let steps = (1..=n)
        .map(|i| match (in_a[i], in_b[i]) {
            (true, true) => MotzkinStep::B,
            (true, false) => MotzkinStep::D,
            (false, true) => MotzkinStep::U,
            (false, false) => MotzkinStep::S,
        })
        .collect();
    motzkin_unchecked(steps)
}

pub fn two_motzkin_to_polyomino(c: &TwoMotzkinPath) -> Result<ParallelogramPolyomino> {
    use MotzkinStep::*;
    if c.is_empty() {
        return Err(AtlasError::Domain("the empty path has no polyomino".into()));
    }
    c.require_star()?;
    let a = c.positions(&[D, B]);
    let b = c.positions(&[U, B]);
    let w = a.len() + 1;
    let h = c.len() + 1 - w;
    let diffs = |pos: &[usize]| {
        let mut out = Vec::with_capacity(w);
        let mut prev = 0;
        for (i, &x) in pos.iter().enumerate() {
            let s = x - (i + 1);
            out.push(s - prev);
            prev = s;
        }
        out.push(h - prev);
        out
    };
    ParallelogramPolyomino::new(diffs(&a), diffs(&b))
}

/// Deutsch–Shapiro encoding: read both border paths step by step and
/// record `u` (N, E), `d` (E, N), `b` (E, E), `s` (N, N) as (upper, lower).
/// The raw word has length `n+1`; dropping its first and last steps gives
/// the trimmed word of length `n−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeutschShapiro {
    pub raw: TwoMotzkinPath,
    pub trimmed: TwoMotzkinPath,
}

pub fn deutsch_shapiro(pp: &ParallelogramPolyomino) -> DeutschShapiro {
    let steps: Vec<MotzkinStep> = pp
        .upper_path()
        .chars()
        .zip(pp.lower_path().chars())
        .map(|pair| match pair {
            ('N', 'E') => MotzkinStep::U,
            ('E', 'N') => MotzkinStep::D,
            ('E', 'E') => MotzkinStep::B,
            _ => MotzkinStep::S,
        })
        .collect();
    let trimmed = steps[1..steps.len() - 1].to_vec();
    DeutschShapiro { raw: motzkin_unchecked(steps), trimmed: motzkin_unchecked(trimmed) }
}

/// Inverse of the trimmed Deutsch–Shapiro word.
pub fn deutsch_shapiro_inverse(c: &TwoMotzkinPath) -> Result<ParallelogramPolyomino> {
    use MotzkinStep::*;
    let mut upper = vec!['N'];
    let mut lower = vec!['E'];
    for &s in &c.steps {
        let (u, l) = match s {
            U => ('N', 'E'),
            D => ('E', 'N'),
            B => ('E', 'E'),
            S => ('N', 'N'),
        };
        upper.push(u);
        lower.push(l);
    }
    upper.push('E');
    lower.push('N');
    let mut gamma = vec![0];
    for &u in &upper {
        if u == 'N' {
            *gamma.last_mut().unwrap() += 1;
        } else {
            gamma.push(0);
        }
    }
    gamma.pop();
    let mut delta: Vec<usize> = Vec::new();
    for &l in &lower {
        if l == 'E' {
            delta.push(0);
        } else {
            *delta.last_mut().unwrap() += 1;
        }
    }
    ParallelogramPolyomino::new(gamma, delta)
}

/// `U (u ↦ UU, d ↦ DD, s ↦ UD, b ↦ DU) D`.
pub fn two_motzkin_to_dyck(c: &TwoMotzkinPath) -> DyckPath {
    use DyckStep::{D, U};
    let mut steps = Vec::with_capacity(2 * c.len() + 2);
    steps.push(U);
    for &s in &c.steps {
        steps.extend_from_slice(match s {
            MotzkinStep::U => &[U, U],
            MotzkinStep::D => &[D, D],
            MotzkinStep::S => &[U, D],
            MotzkinStep::B => &[D, U],
        });
    }
    steps.push(D);
    DyckPath { steps }
}

/// Visits every 2-Motzkin path of length `n` in `u < d < s < b` lexicographic
/// order; `star` skips broken steps at height 0 and `plain` skips broken
/// steps entirely.
pub fn for_each_two_motzkin(n: usize, star: bool, plain: bool, f: &mut dyn FnMut(&TwoMotzkinPath)) {
    fn rec(n: usize, h: usize, cur: &mut TwoMotzkinPath, star: bool, plain: bool, f: &mut dyn FnMut(&TwoMotzkinPath)) {
        let left = n - cur.steps.len();
        if left == 0 {
            if h == 0 {
                f(cur);
            }
            return;
        }
        for s in [MotzkinStep::U, MotzkinStep::D, MotzkinStep::S, MotzkinStep::B] {
            let ok = match s {
                MotzkinStep::U => h < left,
                MotzkinStep::D => h > 0,
                MotzkinStep::S => h < left,
                MotzkinStep::B => !plain && !(star && h == 0) && h < left,
            };
            if ok {
                cur.steps.push(s);
                rec(n, (h as i64 + s.delta()) as usize, cur, star, plain, f);
                cur.steps.pop();
            }
        }
    }
    rec(n, 0, &mut TwoMotzkinPath { steps: Vec::new() }, star, plain, f);
}

pub fn all_two_motzkin(n: usize, star: bool, plain: bool) -> Vec<TwoMotzkinPath> {
    let mut out = Vec::new();
    for_each_two_motzkin(n, star, plain, &mut |c| out.push(c.clone()));
    out
}

/// Number of paths [`for_each_two_motzkin`] would visit, by dynamic programming.
pub fn count_two_motzkin(n: usize, star: bool, plain: bool) -> BigUint {
    let mut row = vec![BigUint::zero(); n + 2];
    row[0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); n + 2];
        for h in 0..=n {
            if row[h].is_zero() {
                continue;
            }
            let level = if plain || (star && h == 0) { 1u32 } else { 2 };
            next[h] += &row[h] * level;
            next[h + 1] += &row[h];
            if h > 0 {
                next[h - 1] += &row[h];
            }
        }
        row = next;
    }
    row.swap_remove(0)
}

pub fn all_dyck(semilength: usize) -> Vec<DyckPath> {
    fn rec(m: usize, up: usize, down: usize, cur: &mut Vec<DyckStep>, out: &mut Vec<DyckPath>) {
        if up == m && down == m {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if up < m {
            cur.push(DyckStep::U);
            rec(m, up + 1, down, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push(DyckStep::D);
            rec(m, up, down + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(semilength, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Convenience wrapper: the path of `ψ(p)` under Foata–Zeilberger.
pub fn fz_of_psi(p: &Permutation) -> Result<TwoMotzkinPath> {
    Ok(foata_zeilberger(&bij::psi(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::enumerate::{bi_increasing, permutations};
    use crate::counting::numbers::{binomial, catalan, motzkin};
    use std::collections::BTreeSet;

    const EX: &str = "2 6 1 3 7 4 5 8 10 9";

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn m(s: &str) -> TwoMotzkinPath {
        s.parse().unwrap()
    }

    fn big(x: usize) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn bjs_example() {
        let d = bjs(&p(EX)).unwrap();
        assert_eq!(d.to_string(), "UDUUUUDUDDDUUUDDDDUD");
        assert_eq!(bjs_inverse(&d).unwrap(), p(EX));
        assert_eq!(bjs(&Permutation::identity(3)).unwrap().to_string(), "UUUDDD");
        assert!(bjs(&p("3 2 1")).is_err());
    }

    #[test]
    fn dv_example() {
        let q: ParallelogramPolyomino = "gamma=1,3,0,2,0 delta=0,0,2,3,1".parse().unwrap();
        let d = delest_viennot(&q);
        assert_eq!(d.to_string(), "UDUUUUDUDDDUUUDDDDUD");
        assert_eq!(delest_viennot_inverse(&d).unwrap(), q);
        let col: ParallelogramPolyomino = "gamma=3 delta=3".parse().unwrap();
        assert_eq!(delest_viennot(&col).to_string(), "UUUDDD");
    }

    #[test]
    fn bjs_valleys_and_dv_agree_on_b8() {
        for n in 1..=8 {
            for q in bi_increasing(n) {
                let d = bjs(&q).unwrap();
                assert_eq!(d.len(), 2 * n);
                assert_eq!(d.valleys().len(), q.exc());
                assert_eq!(d.valleys().iter().map(|v| v + 1).sum::<usize>(), q.dexc());
                let pp = polyomino::perm_to_parallelogram(&q).unwrap();
                assert_eq!(delest_viennot(&pp), d);
                assert_eq!(bjs_inverse(&d).unwrap(), q);
            }
        }
    }

    #[test]
    fn fv_examples() {
        assert_eq!(francon_viennot(&p("3 1 7 2 4 5 6 8 10 9")).to_string(), "uudsssdsud");
        assert_eq!(francon_viennot(&p("2 7 4 3 1 6 5 8 10 9")).to_string(), "usbbuddsud");
        assert_eq!(francon_viennot(&Permutation::identity(4)).to_string(), "ssss");
        assert_eq!(francon_viennot_inverse(&m("uudsssdsud")).unwrap(), p("3 1 7 2 4 5 6 8 10 9"));
        assert_eq!(francon_viennot_inverse(&m("sss")).unwrap(), Permutation::identity(3));
        assert!(francon_viennot_inverse(&m("ubd")).is_err());
    }

    #[test]
    fn fv_height_sum_is_ddes_on_s7() {
        for n in 1..=7 {
            for q in permutations(n) {
                let c = francon_viennot(&q);
                assert_eq!(path_stats(&c).height_sum, q.ddes());
            }
        }
    }

    #[test]
    fn fv_extended_example() {
        let c = fv_extended(&p(EX)).unwrap();
        assert_eq!(c.to_string(), "ubsusddsud");
        let st = path_stats(&c);
        assert_eq!((st.up, st.height_sum), (3, 9));
        assert_eq!(fv_extended_inverse(&c).unwrap(), p(EX));
        assert_eq!(fv_extended(&Permutation::identity(4)).unwrap().to_string(), "ssss");
        assert!(fv_extended_inverse(&m("bs")).is_err());
    }

    #[test]
    fn fv_extended_is_onto_star_paths() {
        for n in 1..=8 {
            let bn = bi_increasing(n);
            let image: BTreeSet<_> = bn
                .iter()
                .map(|q| {
                    let c = fv_extended(q).unwrap();
                    let st = path_stats(&c);
                    assert_eq!((st.up, st.height_sum), (q.des(), q.ddes()));
                    assert_eq!(st.broken, q.exc() - q.des());
                    assert_eq!(st.level0_solid, q.fix());
                    assert_eq!(fv_extended_inverse(&c).unwrap(), *q);
                    c
                })
                .collect();
            let star: BTreeSet<_> = all_two_motzkin(n, true, false).into_iter().collect();
            assert_eq!(image, star);
        }
    }

    #[test]
    fn plain_motzkin_restriction() {
        for n in 1..=9 {
            let plain = all_two_motzkin(n, true, true);
            assert_eq!(big(plain.len()), motzkin(n as u64));
            assert_eq!(count_two_motzkin(n, true, true), motzkin(n as u64));
            assert_eq!(count_two_motzkin(n, true, false), catalan(n as u64));
            assert_eq!(count_two_motzkin(n, false, false), catalan(n as u64 + 1));
            assert_eq!(big(all_two_motzkin(n, false, false).len()), catalan(n as u64 + 1));
            for c in &plain {
                let q = francon_viennot_inverse(c).unwrap();
                assert_eq!(francon_viennot(&q), *c);
            }
            for k in 0..=n / 2 {
                let count = plain.iter().filter(|c| c.count(MotzkinStep::U) == k).count();
                assert_eq!(big(count), binomial(n as u64, 2 * k as u64) * catalan(k as u64));
            }
        }
    }

    #[test]
    fn fz_example() {
        let c = foata_zeilberger(&p(EX));
        assert_eq!(c.to_string(), "ubssuddsud");
        let st = path_stats(&c);
        assert_eq!((st.up + st.broken, st.height_sum), (4, 8));
        assert_eq!(st.rank_from_path, 2);
        assert_eq!(fz_inverse_bi(&c).unwrap(), p(EX));
        assert_eq!(foata_zeilberger(&Permutation::identity(3)).to_string(), "sss");
        assert_eq!(fz_inverse_bi(&m("sss")).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn fz_transports_exc_and_dexc_on_s7() {
        for n in 1..=7 {
            for q in permutations(n) {
                let c = foata_zeilberger(&q);
                assert!(c.is_star());
                let st = path_stats(&c);
                assert_eq!((st.up + st.broken, st.height_sum), (q.exc(), q.dexc()));
            }
        }
    }

    #[test]
    fn fz_and_psi_relation_on_b8() {
        for n in 1..=8 {
            for q in bi_increasing(n) {
                assert_eq!(fz_of_psi(&q).unwrap(), fv_extended(&q).unwrap());
                let c = foata_zeilberger(&q);
                assert_eq!(fz_inverse_bi(&c).unwrap(), q);
                let pp = polyomino::perm_to_parallelogram(&q).unwrap();
                assert_eq!(polyomino_to_2motzkin(&pp), c);
            }
        }
    }

    #[test]
    fn abc_example() {
        let q: ParallelogramPolyomino = "gamma=1,3,0,2,0 delta=0,0,1,4,1".parse().unwrap();
        let c = polyomino_to_2motzkin(&q);
        assert_eq!(c.to_string(), "ubsusddsud");
        assert_eq!(two_motzkin_to_polyomino(&c).unwrap(), q);
        let col: ParallelogramPolyomino = "gamma=4 delta=4".parse().unwrap();
        assert_eq!(polyomino_to_2motzkin(&col).to_string(), "ssss");
    }

    #[test]
    fn abc_statistics_and_rank() {
        for n in 1..=10 {
            for q in polyomino::all_parallelograms(n) {
                let c = polyomino_to_2motzkin(&q);
                assert!(c.is_star());
                let st = path_stats(&c);
                let mt = q.metrics();
                assert_eq!(mt.width, 1 + st.up + st.broken);
                assert_eq!(st.height_sum, mt.area - mt.height);
                assert_eq!(st.level0_solid, mt.singleton_rows);
                let skew = polyomino::polyomino_to_skew(&q);
                assert_eq!(st.rank_from_path, polyomino::rank(&skew).unwrap());
                assert_eq!(1 + st.rising_pairs, st.rank_from_path);
                assert_eq!(is_partition_path(&c), q.is_partition());
                assert_eq!(two_motzkin_to_polyomino(&c).unwrap(), q);
            }
        }
    }

    #[test]
    fn deutsch_shapiro_example() {
        let q: ParallelogramPolyomino = "gamma=1,3,0,2,0 delta=0,0,2,3,1".parse().unwrap();
        let ds = deutsch_shapiro(&q);
        assert_eq!(ds.raw.to_string(), "ubussbdssbd");
        assert_eq!(ds.trimmed.to_string(), "bussbdssb");
        assert_eq!(deutsch_shapiro_inverse(&ds.trimmed).unwrap(), q);
        let cell: ParallelogramPolyomino = "gamma=1 delta=1".parse().unwrap();
        let ds = deutsch_shapiro(&cell);
        assert_eq!((ds.raw.to_string(), ds.trimmed.to_string()), ("ud".to_string(), String::new()));
    }

    #[test]
    fn deutsch_shapiro_is_a_bijection() {
        for n in 1..=10 {
            let image: BTreeSet<_> = polyomino::all_parallelograms(n)
                .iter()
                .map(|q| {
                    let ds = deutsch_shapiro(q);
                    let heights = ds.raw.heights();
                    assert!(heights[1..].iter().all(|&h| h >= 1));
                    let rank = polyomino::rank(&polyomino::polyomino_to_skew(q)).unwrap();
                    assert_eq!(ds.trimmed.count(MotzkinStep::D) + 1, rank);
                    assert_eq!(deutsch_shapiro_inverse(&ds.trimmed).unwrap(), *q);
                    // partitions are exactly the split-form words
                    assert_eq!(is_partition_path(&ds.trimmed), q.is_partition());
                    ds.trimmed
                })
                .collect();
            let all: BTreeSet<_> = all_two_motzkin(n - 1, false, false).into_iter().collect();
            assert_eq!(image, all);
        }
    }

    #[test]
    fn dyck_substitution() {
        assert_eq!(two_motzkin_to_dyck(&m("")).to_string(), "UD");
        assert_eq!(two_motzkin_to_dyck(&m("s")).to_string(), "UUDD");
        for n in 0..=9 {
            let image: BTreeSet<_> = all_two_motzkin(n, false, false).iter().map(two_motzkin_to_dyck).collect();
            assert_eq!(big(image.len()), catalan(n as u64 + 1));
            assert!(image.iter().all(|d| d.to_string().parse::<DyckPath>().is_ok()));
            assert_eq!(big(all_dyck(n + 1).len()), catalan(n as u64 + 1));
        }
    }

    #[test]
    fn partition_path_examples() {
        assert!("uudb".parse::<TwoMotzkinPath>().is_err());
        assert!(is_partition_path(&m("uudbd")));
        assert!(!is_partition_path(&m("ubsusddsud")));
        assert!(is_partition_path(&m("ssss")));
    }

    #[test]
    fn parse_errors() {
        assert!("ux".parse::<TwoMotzkinPath>().is_err());
        assert!("d".parse::<TwoMotzkinPath>().is_err());
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("DU".parse::<DyckPath>().is_err());
    }
}
