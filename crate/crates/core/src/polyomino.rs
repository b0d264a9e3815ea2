//! Step polyominoes, parallelogram polyominoes, staircase-bounded Young
//! diagrams, and connected skew diagrams.
//!
//! Polyominoes are stored by their border compositions. Cells are computed
//! on demand in a grid whose column `x` and row `y` are 0-based, with `y`
//! growing upward. Skew diagrams use English notation: row 1 is on top.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::perm::Permutation;

fn prefix_sums(xs: &[usize]) -> Vec<usize> {
    xs.iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_list(s: &str, rule: &'static str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| AtlasError::parse(rule, format!("bad number `{t}`"))))
        .collect()
}

/// Parses `k1=v1,v1' k2=v2,…` into the values for the two expected keys.
fn parse_keyed(s: &str, keys: [&str; 2], rule: &'static str) -> Result<[Vec<usize>; 2]> {
    let mut found: [Option<Vec<usize>>; 2] = [None, None];
    for tok in s.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| AtlasError::parse(rule, format!("expected key=value, got `{tok}`")))?;
        let slot = keys
            .iter()
            .position(|&key| key == k)
            .ok_or_else(|| AtlasError::parse(rule, format!("unexpected key `{k}`")))?;
        if found[slot].is_some() {
            return Err(AtlasError::parse(rule, format!("repeated key `{k}`")));
        }
        found[slot] = Some(parse_list(v, rule)?);
    }
    let [a, b] = found;
    match (a, b) {
        (Some(a), Some(b)) => Ok([a, b]),
        (None, _) => Err(AtlasError::parse(rule, format!("missing `{}=`", keys[0]))),
        (_, None) => Err(AtlasError::parse(rule, format!("missing `{}=`", keys[1]))),
    }
}

/// A step polyomino `(α, β)`: two compositions of `n` into `w` positive
/// parts with `α_1+…+α_i ≥ β_1+…+β_i` for every `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StepPolyomino {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl StepPolyomino {
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(AtlasError::invalid("step polyomino", m));
        if alpha.is_empty() || alpha.len() != beta.len() {
            return bad("alpha and beta must be non-empty and of equal length".into());
        }
        if alpha.iter().chain(&beta).any(|&x| x == 0) {
            return bad("parts must be positive".into());
        }
        let (sa, sb) = (prefix_sums(&alpha), prefix_sums(&beta));
        if sa.last() != sb.last() {
            return bad("alpha and beta must have the same sum".into());
        }
        if let Some(i) = (0..sa.len()).find(|&i| sa[i] < sb[i]) {
            return bad(format!("border paths cross: partial sum {} of alpha is below beta", i + 1));
        }
        Ok(StepPolyomino { alpha, beta })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    /// The common sum of `α` and `β`, one less than the height.
    pub fn n(&self) -> usize {
        self.alpha.iter().sum()
    }

    pub fn width(&self) -> usize {
        self.alpha.len()
    }

    pub fn height(&self) -> usize {
        self.n() + 1
    }

    /// `(bottom, top)` of column `j` (0-based) in the row grid.
    pub fn column_span(&self, j: usize) -> (usize, usize) {
        let bottom: usize = self.beta[..j].iter().sum();
        let top: usize = self.alpha[..=j].iter().sum::<usize>() + 1;
        (bottom, top)
    }

    pub fn column_heights(&self) -> Vec<usize> {
        (0..self.width()).map(|j| {
            let (b, t) = self.column_span(j);
            t - b
        }).collect()
    }

    pub fn area(&self) -> usize {
        self.column_heights().iter().sum()
    }

    /// Number of columns shared by rows `i` and `i+1`, for `i = 1..=n`.
    pub fn row_overlaps(&self) -> Vec<usize> {
        let spans: Vec<_> = (0..self.width()).map(|j| self.column_span(j)).collect();
        (1..=self.n())
            .map(|i| spans.iter().filter(|&&(b, t)| b < i && i < t).count())
            .collect()
    }
}

impl fmt::Display for StepPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} beta={}", join(&self.alpha), join(&self.beta))
    }
}

impl FromStr for StepPolyomino {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        const RULE: &str = "step: alpha=<parts> beta=<parts>";
        let [a, b] = parse_keyed(s, ["alpha", "beta"], RULE)?;
        StepPolyomino::new(a, b).map_err(|e| AtlasError::parse(RULE, e.to_string()))
    }
}

/// A parallelogram polyomino coded by the vertical runs `γ` of its upper
/// border `N^{γ_1} E N^{γ_2} E ⋯ N^{γ_w} E` and `δ` of its lower border
/// `E N^{δ_1} E N^{δ_2} ⋯ E N^{δ_w}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParallelogramPolyomino {
    gamma: Vec<usize>,
    delta: Vec<usize>,
}

impl ParallelogramPolyomino {
    pub fn new(gamma: Vec<usize>, delta: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(AtlasError::invalid("parallelogram polyomino", m));
        if gamma.is_empty() || gamma.len() != delta.len() {
            return bad("gamma and delta must be non-empty and of equal length".into());
        }
        let (sg, sd) = (prefix_sums(&gamma), prefix_sums(&delta));
        let h = *sg.last().unwrap();
        if h != *sd.last().unwrap() {
            return bad("gamma and delta must have the same sum".into());
        }
        if h == 0 {
            return bad("height must be at least 1".into());
        }
        if let Some(i) = (0..gamma.len() - 1).find(|&i| sg[i] <= sd[i]) {
            return bad(format!("columns {} and {} do not share a row", i + 1, i + 2));
        }
        Ok(ParallelogramPolyomino { gamma, delta })
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn width(&self) -> usize {
        self.gamma.len()
    }

    pub fn height(&self) -> usize {
        self.gamma.iter().sum()
    }

    pub fn perimeter(&self) -> usize {
        2 * (self.width() + self.height())
    }

    /// Half the perimeter minus one; the size of the matching permutation.
    pub fn n(&self) -> usize {
        self.width() + self.height() - 1
    }

    /// `(bottom, top)` rows of every column; the column occupies
    /// `bottom..top`.
    pub fn column_spans(&self) -> Vec<(usize, usize)> {
        let mut bottom = 0;
        let mut top = 0;
        (0..self.width())
            .map(|i| {
                if i > 0 {
                    bottom += self.delta[i - 1];
                }
                top += self.gamma[i];
                (bottom, top)
            })
            .collect()
    }

    pub fn column_heights(&self) -> Vec<usize> {
        self.column_spans().into_iter().map(|(b, t)| t - b).collect()
    }

    pub fn area(&self) -> usize {
        self.column_heights().iter().sum()
    }

    /// All cells `(x, y)` ordered by column, then row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.column_spans()
            .into_iter()
            .enumerate()
            .flat_map(|(x, (b, t))| (b..t).map(move |y| (x, y)))
            .collect()
    }

    /// Row lengths from the bottom row up.
    pub fn row_lengths(&self) -> Vec<usize> {
        let mut rows = vec![0; self.height()];
        for (b, t) in self.column_spans() {
            for r in &mut rows[b..t] {
                *r += 1;
            }
        }
        rows
    }

    /// Number of cells on each line `x + y = d`, `d = 0, 1, …`.
    pub fn diagonal_lengths(&self) -> Vec<usize> {
        let mut diag = vec![0; self.width() + self.height() - 1];
        for (x, y) in self.cells() {
            diag[x + y] += 1;
        }
        diag
    }

    pub fn metrics(&self) -> PolyominoMetrics {
        let rows = self.row_lengths();
        let area = self.area();
        PolyominoMetrics {
            width: self.width(),
            height: self.height(),
            perimeter: self.perimeter(),
            area,
            column_heights: self.column_heights(),
            singleton_rows: rows.iter().filter(|&&l| l == 1).count(),
            row_lengths: rows,
            diagonal_lengths: self.diagonal_lengths(),
            last_column_cells: *self.column_heights().last().unwrap(),
            cells_with_right_neighbor: area - self.height(),
        }
    }

    /// Upper border as a string over `N`, `E`.
    pub fn upper_path(&self) -> String {
        let mut s = String::new();
        for &g in &self.gamma {
            s.extend(std::iter::repeat_n('N', g));
            s.push('E');
        }
        s
    }

    /// Lower border as a string over `N`, `E`.
    pub fn lower_path(&self) -> String {
        let mut s = String::new();
        for &d in &self.delta {
            s.push('E');
            s.extend(std::iter::repeat_n('N', d));
        }
        s
    }

    /// True iff the polyomino is a Young diagram, i.e. its skew diagram has
    /// empty inner shape.
    pub fn is_partition(&self) -> bool {
        self.gamma[1..].iter().all(|&g| g == 0)
    }
}

impl fmt::Display for ParallelogramPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gamma={} delta={}", join(&self.gamma), join(&self.delta))
    }
}

impl FromStr for ParallelogramPolyomino {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        const RULE: &str = "parallelogram: gamma=<parts> delta=<parts>";
        let [g, d] = parse_keyed(s, ["gamma", "delta"], RULE)?;
        ParallelogramPolyomino::new(g, d).map_err(|e| AtlasError::parse(RULE, e.to_string()))
    }
}

/// Width, height, and cell-level counts of a parallelogram polyomino.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyominoMetrics {
    pub width: usize,
    pub height: usize,
    pub perimeter: usize,
    pub area: usize,
    pub column_heights: Vec<usize>,
    pub row_lengths: Vec<usize>,
    pub singleton_rows: usize,
    pub diagonal_lengths: Vec<usize>,
    pub last_column_cells: usize,
    pub cells_with_right_neighbor: usize,
}

/// A Young diagram `Λ` inside the staircase `(n−1, n−2, …, 1)`. The size `n`
/// is part of the value since the step polyomino depends on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StaircaseDiagram {
    n: usize,
    parts: Vec<usize>,
}

impl StaircaseDiagram {
    pub fn new(n: usize, parts: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(AtlasError::invalid("staircase diagram", m));
        if n == 0 {
            return bad("n must be at least 1".into());
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return bad("parts must be positive and weakly decreasing".into());
        }
        if let Some(r) = (1..=parts.len()).find(|&r| parts[r - 1] + r > n) {
            return bad(format!("part {r} exceeds the staircase bound {}", n.saturating_sub(r)));
        }
        Ok(StaircaseDiagram { n, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of outer corners, one less than the step polyomino's width.
    pub fn corners(&self) -> usize {
        let mut distinct = self.parts.clone();
        distinct.dedup();
        distinct.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for StaircaseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} parts={}", self.n, join(&self.parts))
    }
}

impl FromStr for StaircaseDiagram {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        const RULE: &str = "staircase: n=<size> parts=<parts>";
        let [n, parts] = parse_keyed(s, ["n", "parts"], RULE)?;
        if n.len() != 1 {
            return Err(AtlasError::parse(RULE, "n takes a single value"));
        }
        StaircaseDiagram::new(n[0], parts).map_err(|e| AtlasError::parse(RULE, e.to_string()))
    }
}

/// A skew diagram `outer / inner` in English notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SkewDiagram {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl SkewDiagram {
    /// Accepts any pair of partitions with `inner ⊆ outer`; zero parts are
    /// dropped.
    pub fn new(mut outer: Vec<usize>, mut inner: Vec<usize>) -> Result<Self> {
        let bad = |m: &str| Err(AtlasError::invalid("skew diagram", m));
        outer.retain(|&x| x > 0);
        inner.retain(|&x| x > 0);
        if outer.windows(2).any(|w| w[0] < w[1]) || inner.windows(2).any(|w| w[0] < w[1]) {
            return bad("parts must be weakly decreasing");
        }
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(i, o)| i > o) {
            return bad("inner shape is not contained in the outer shape");
        }
        Ok(SkewDiagram { outer, inner })
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    fn inner_at(&self, r: usize) -> usize {
        self.inner.get(r).copied().unwrap_or(0)
    }

    /// Non-empty, every row non-empty, and consecutive rows share a column.
    pub fn is_connected(&self) -> bool {
        let h = self.outer.len();
        h > 0
            && (0..h).all(|r| self.outer[r] > self.inner_at(r))
            && (0..h - 1).all(|r| self.outer[r + 1] > self.inner_at(r))
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(AtlasError::Domain(format!("skew diagram {self} is not connected")))
        }
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r < self.outer.len() && c >= self.inner_at(r) && c < self.outer[r]
    }

    /// Cells `(row, col)`, 0-based, English notation.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len()).flat_map(|r| (self.inner_at(r)..self.outer[r]).map(move |c| (r, c))).collect()
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "outer={} inner={}", join(&self.outer), join(&self.inner))
    }
}

impl FromStr for SkewDiagram {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        const RULE: &str = "skew: outer=<parts> inner=<parts>";
        let [o, i] = parse_keyed(s, ["outer", "inner"], RULE)?;
        SkewDiagram::new(o, i).map_err(|e| AtlasError::parse(RULE, e.to_string()))
    }
}

/// Lower and upper boundary words of a connected skew diagram, `1` for a
/// horizontal unit step and `0` for a vertical one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedCode {
    pub a: Vec<u8>,
    pub b: Vec<u8>,
}

impl fmt::Display for ReducedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |v: &[u8]| v.iter().map(|x| char::from(b'0' + x)).collect::<String>();
        write!(f, "a={} b={}", s(&self.a), s(&self.b))
    }
}

pub fn perm_to_step(p: &Permutation) -> Result<StepPolyomino> {
    p.require_bi_increasing()?;
    let n = p.len();
    let exc = p.excedance_set();
    let letters = p.excedance_letters();
    let mut alpha = Vec::with_capacity(exc.len() + 1);
    let mut beta = Vec::with_capacity(exc.len() + 1);
    let (mut prev_i, mut prev_a) = (0, 0);
    for (&i, &l) in exc.iter().zip(&letters) {
        beta.push(i - prev_i);
        alpha.push(l - 1 - prev_a);
        prev_i = i;
        prev_a = l - 1;
    }
    beta.push(n - prev_i);
    alpha.push(n - prev_a);
    Ok(StepPolyomino { alpha, beta })
}

pub fn step_to_perm(sp: &StepPolyomino) -> Result<Permutation> {
    let w = sp.width();
    let sa = prefix_sums(&sp.alpha);
    let sb = prefix_sums(&sp.beta);
    let positions = &sb[..w - 1];
    let letters: Vec<usize> = sa[..w - 1].iter().map(|s| s + 1).collect();
    Permutation::from_excedances(sp.n(), positions, &letters)
}

pub fn step_to_staircase(sp: &StepPolyomino) -> StaircaseDiagram {
    let n = sp.n();
    let w = sp.width();
    let sa = prefix_sums(&sp.alpha);
    let mut parts = Vec::new();
    for (&a, &b) in sa[..w - 1].iter().zip(&sp.beta) {
        parts.extend(std::iter::repeat_n(n - a, b));
    }
    StaircaseDiagram { n, parts }
}

pub fn staircase_to_step(d: &StaircaseDiagram) -> StepPolyomino {
    let n = d.n;
    let mut lambda: Vec<usize> = Vec::new();
    let mut beta: Vec<usize> = Vec::new();
    for &p in &d.parts {
        if lambda.last() == Some(&p) {
            *beta.last_mut().unwrap() += 1;
        } else {
            lambda.push(p);
            beta.push(1);
        }
    }
    beta.push(n - d.parts.len());
    let mut alpha = Vec::with_capacity(beta.len());
    let mut prev = n;
    for &l in &lambda {
        alpha.push(prev - l);
        prev = l;
    }
    alpha.push(prev);
    StepPolyomino::new(alpha, beta).expect("staircase bound implies dominance")
}

pub fn step_to_parallelogram(sp: &StepPolyomino) -> ParallelogramPolyomino {
    let w = sp.width();
    let gamma = (0..w).map(|i| if i == 0 { sp.alpha[0] } else { sp.alpha[i] - 1 }).collect();
    let delta = (0..w).map(|i| if i + 1 == w { sp.beta[i] } else { sp.beta[i] - 1 }).collect();
    ParallelogramPolyomino { gamma, delta }
}

pub fn parallelogram_to_step(pp: &ParallelogramPolyomino) -> StepPolyomino {
    let w = pp.width();
    let alpha = (0..w).map(|i| if i == 0 { pp.gamma[0] } else { pp.gamma[i] + 1 }).collect();
    let beta = (0..w).map(|i| if i + 1 == w { pp.delta[i] } else { pp.delta[i] + 1 }).collect();
    StepPolyomino { alpha, beta }
}

pub fn perm_to_parallelogram(p: &Permutation) -> Result<ParallelogramPolyomino> {
    Ok(step_to_parallelogram(&perm_to_step(p)?))
}

pub fn parallelogram_to_perm(pp: &ParallelogramPolyomino) -> Result<Permutation> {
    step_to_perm(&parallelogram_to_step(pp))
}

/// Reverses both border paths and exchanges `N` with `E`; the result is the
/// mirror image in the anti-diagonal, so width and height trade places.
pub fn rotate180(pp: &ParallelogramPolyomino) -> ParallelogramPolyomino {
    let flip = |path: String| -> Vec<char> {
        path.chars().rev().map(|c| if c == 'N' { 'E' } else { 'N' }).collect()
    };
    let upper = flip(pp.upper_path());
    let lower = flip(pp.lower_path());
    let mut gamma = vec![0];
    for c in upper {
        match c {
            'N' => *gamma.last_mut().unwrap() += 1,
            _ => gamma.push(0),
        }
    }
    gamma.pop();
    let mut delta: Vec<usize> = Vec::new();
    for c in lower {
        match c {
            'E' => delta.push(0),
            _ => *delta.last_mut().unwrap() += 1,
        }
    }
    ParallelogramPolyomino { gamma, delta }
}

/// `1^{δ_1} 2^{δ_2} ⋯ w^{δ_w} / 1^{γ_2} ⋯ (w−1)^{γ_w}`.
pub fn polyomino_to_skew(pp: &ParallelogramPolyomino) -> SkewDiagram {
    let spread = |mult: &[usize]| -> Vec<usize> {
        let mut parts = Vec::new();
        for (j, &m) in mult.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(j + 1, m));
        }
        parts
    };
    SkewDiagram { outer: spread(&pp.delta), inner: spread(&pp.gamma[1..]) }
}

pub fn skew_to_polyomino(sd: &SkewDiagram) -> Result<ParallelogramPolyomino> {
    sd.require_connected()?;
    let w = sd.outer[0];
    let h = sd.outer.len();
    let mut delta = vec![0; w];
    for &o in &sd.outer {
        delta[o - 1] += 1;
    }
    let mut gamma = vec![0; w];
    for &i in &sd.inner {
        gamma[i] += 1;
    }
    gamma[0] = h - sd.inner.len();
    ParallelogramPolyomino::new(gamma, delta)
}

/// Lower and upper border words, `E ↦ 1`, `N ↦ 0`.
pub fn reduced_code(sd: &SkewDiagram) -> Result<ReducedCode> {
    let pp = skew_to_polyomino(sd)?;
    let code = |s: String| s.bytes().map(|c| u8::from(c == b'E')).collect();
    Ok(ReducedCode { a: code(pp.lower_path()), b: code(pp.upper_path()) })
}

/// Number of columns `(a_i, b_i) = (0, 1)` in the reduced code.
pub fn rank(sd: &SkewDiagram) -> Result<usize> {
    let c = reduced_code(sd)?;
    Ok(c.a.iter().zip(&c.b).filter(|&(&a, &b)| a == 0 && b == 1).count())
}

/// Rank as total outside-diagonal length minus total inside-diagonal
/// length, computed from the cells.
pub fn rank_by_diagonals(sd: &SkewDiagram) -> Result<usize> {
    sd.require_connected()?;
    let run = |mut r: usize, mut c: usize| {
        let mut len = 0;
        while sd.contains(r, c) {
            len += 1;
            r += 1;
            c += 1;
        }
        len
    };
    let present = |r: Option<usize>, c: Option<usize>| match (r, c) {
        (Some(r), Some(c)) => sd.contains(r, c),
        _ => false,
    };
    let (mut outside, mut inside) = (0usize, 0usize);
    for (r, c) in sd.cells() {
        let up = present(r.checked_sub(1), Some(c));
        let left = present(Some(r), c.checked_sub(1));
        let diag = present(r.checked_sub(1), c.checked_sub(1));
        if !up && !left {
            outside += run(r, c);
        } else if up && left && !diag {
            inside += run(r, c);
        }
    }
    Ok(outside - inside)
}

/// Visits every parallelogram polyomino of perimeter `2n+2`, ordered by
/// width, then `γ`, then `δ`.
pub fn for_each_parallelogram(n: usize, f: &mut dyn FnMut(&ParallelogramPolyomino)) {
    for w in 1..=n {
        let h = n + 1 - w;
        let mut gs = Vec::new();
        weak_compositions(h, w, &mut Vec::new(), &mut gs);
        for g in gs {
            let sg = prefix_sums(&g);
            let mut q = ParallelogramPolyomino { gamma: g, delta: Vec::new() };
            let mut d = Vec::with_capacity(w);
            lower_borders(&sg, h, &mut d, 0, &mut |delta| {
                q.delta.clear();
                q.delta.extend_from_slice(delta);
                f(&q);
            });
        }
    }
}

pub fn all_parallelograms(n: usize) -> Vec<ParallelogramPolyomino> {
    let mut out = Vec::new();
    for_each_parallelogram(n, &mut |q| out.push(q.clone()));
    out
}

fn weak_compositions(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for x in 0..=total {
        cur.push(x);
        weak_compositions(total - x, parts - 1, cur, out);
        cur.pop();
    }
}

/// Extends `d` with all `δ` staying strictly below the upper partial sums.
fn lower_borders(sg: &[usize], h: usize, d: &mut Vec<usize>, sum: usize, emit: &mut dyn FnMut(&[usize])) {
    let i = d.len();
    if i + 1 == sg.len() {
        d.push(h - sum);
        emit(d);
        d.pop();
        return;
    }
    for x in 0..sg[i] - sum {
        d.push(x);
        lower_borders(sg, h, d, sum + x, emit);
        d.pop();
    }
}
