//! Exhaustive generation of `S_n` (lexicographic) and `B_n` (West's
//! generating tree over active sites), plus a parallel fold whose result
//! does not depend on the number of workers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AtlasError, Result};
use crate::perm::Permutation;

/// Largest `n` enumerated without `--force`.
pub const S_CAP: usize = 9;
pub const B_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// All permutations.
    S,
    /// Bi-increasing permutations.
    B,
}

impl Family {
    pub fn cap(self) -> usize {
        match self {
            Family::S => S_CAP,
            Family::B => B_CAP,
        }
    }

    pub fn check_cap(self, n: usize, force: bool) -> Result<()> {
        if n > self.cap() && !force {
            return Err(AtlasError::CapExceeded { family: self.to_string(), n, cap: self.cap() });
        }
        Ok(())
    }

    /// `n!` or `C_n`.
    pub fn size(self, n: usize) -> BigUint {
        match self {
            Family::S => (1..=n as u64).map(BigUint::from).product(),
            Family::B => crate::counting::numbers::catalan(n as u64),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::B => "B",
        })
    }
}

impl FromStr for Family {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Family::S),
            "B" | "b" => Ok(Family::B),
            _ => Err(AtlasError::Unknown { what: "family", name: s.into() }),
        }
    }
}

/// Worker count and cap override shared by enumeration entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub jobs: usize,
    pub force: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { jobs: 1, force: false }
    }
}

/// Visits `S_n` in lexicographic order.
pub fn for_each_permutation(n: usize, f: &mut dyn FnMut(&Permutation)) {
    let mut p = Permutation::identity(n);
    loop {
        f(&p);
        if !p.advance_lexicographic() {
            break;
        }
    }
}

/// Visits `B_n` depth-first through the generating tree.
pub fn for_each_bi_increasing(n: usize, f: &mut dyn FnMut(&Permutation)) {
    let mut p = Permutation::identity(1);
    grow(&mut p, 0, n, f);
}

fn grow(p: &mut Permutation, gexc: usize, n: usize, f: &mut dyn FnMut(&Permutation)) {
    let m = p.len();
    if m == n {
        f(p);
        return;
    }
    for i in gexc + 1..=m + 1 {
        p.push_max_at(i);
        grow(p, if i <= m { i } else { gexc }, n, f);
        p.remove_at(i);
    }
}

pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, &mut |p| out.push(p.clone()));
    out
}

pub fn bi_increasing(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_bi_increasing(n, &mut |p| out.push(p.clone()));
    out
}

pub fn for_each(family: Family, n: usize, f: &mut dyn FnMut(&Permutation)) {
    match family {
        Family::S => for_each_permutation(n, f),
        Family::B => for_each_bi_increasing(n, f),
    }
}

enum Task {
    /// Completions of a fixed prefix, in lexicographic order.
    Prefix(Vec<usize>),
    /// A node of the generating tree with its greatest excedance.
    Node(Permutation, usize),
}

fn tasks(family: Family, n: usize) -> Vec<Task> {
    match family {
        Family::S => {
            let k = n.min(2);
            let mut out = Vec::new();
            for_each_permutation(n, &mut |p| {
                let w = p.word();
                if w[k..].windows(2).all(|x| x[0] < x[1]) {
                    out.push(Task::Prefix(w[..k].to_vec()));
                }
            });
            out
        }
        Family::B => {
            let d = n.min(8);
            let mut out = Vec::new();
            for_each_bi_increasing(d, &mut |p| out.push(Task::Node(p.clone(), p.greatest_excedance())));
            out
        }
    }
}

fn run_task(task: &Task, n: usize, f: &mut dyn FnMut(&Permutation)) {
    match task {
        Task::Prefix(prefix) => {
            let mut word = prefix.clone();
            word.extend((1..=n).filter(|v| !prefix.contains(v)));
            let mut p = Permutation::from_word_unchecked(word);
            loop {
                f(&p);
                if !p.advance_lexicographic() || p.word()[..prefix.len()] != prefix[..] {
                    break;
                }
            }
        }
        Task::Node(p, gexc) => {
            let mut p = p.clone();
            grow(&mut p, *gexc, n, f);
        }
    }
}

/// Folds over a whole family with `jobs` workers.
///
/// The family is cut into a fixed list of subtrees; each subtree is folded
/// from `init()` and the partial results are merged left to right in list
/// order, so the outcome is the same for every worker count.
pub fn par_fold<T, I, F, M>(family: Family, n: usize, jobs: usize, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &Permutation) + Sync,
    M: Fn(T, T) -> T,
{
    let tasks = tasks(family, n);
    let work = |t: &Task| {
        let mut acc = init();
        run_task(t, n, &mut |p| fold(&mut acc, p));
        acc
    };
    let partials: Vec<T> = if jobs <= 1 {
        tasks.iter().map(work).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| tasks.par_iter().map(work).collect()),
            Err(_) => tasks.iter().map(work).collect(),
        }
    };
    partials.into_iter().fold(init(), merge)
}

/// `a_k(n)`: bi-increasing permutations with `exc − des <= k − 1`.
pub fn a_k_sequence(n: usize, k: usize, opts: EnumOptions) -> Result<BigUint> {
    if n == 0 || k == 0 {
        return Err(AtlasError::OutOfRange(format!("a_k(n) needs n, k >= 1, got n={n}, k={k}")));
    }
    Family::B.check_cap(n, opts.force)?;
    let count = par_fold(
        Family::B,
        n,
        opts.jobs,
        || 0u64,
        |acc, p| {
            if p.exc() < p.des() + k {
                *acc += 1;
            }
        },
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::numbers::{catalan, motzkin};
    use std::collections::BTreeSet;

    #[test]
    fn lexicographic_order_and_count() {
        let all = permutations(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(permutations(1), vec![Permutation::identity(1)]);
    }

    #[test]
    fn generating_tree_yields_exactly_the_avoiders() {
        for n in 1..=8 {
            let direct: BTreeSet<_> = bi_increasing(n).into_iter().collect();
            let filtered: BTreeSet<_> = permutations(n).into_iter().filter(|p| p.is_bi_increasing()).collect();
            assert_eq!(direct, filtered);
            assert_eq!(BigUint::from(direct.len()), catalan(n as u64));
        }
    }

    #[test]
    fn parallel_fold_is_independent_of_jobs() {
        for family in [Family::S, Family::B] {
            for n in [1, 2, 5, 7] {
                let collect = |jobs| {
                    par_fold(family, n, jobs, Vec::new, |v: &mut Vec<Permutation>, p| v.push(p.clone()), |mut a, b| {
                        a.extend(b);
                        a
                    })
                };
                let one = collect(1);
                assert_eq!(BigUint::from(one.len()), family.size(n));
                assert_eq!(one, collect(4));
            }
        }
    }

    #[test]
    fn caps() {
        assert!(Family::S.check_cap(9, false).is_ok());
        assert!(matches!(Family::S.check_cap(10, false), Err(AtlasError::CapExceeded { .. })));
        assert!(Family::B.check_cap(15, true).is_ok());
        assert!("X".parse::<Family>().is_err());
    }

    #[test]
    fn a_k_values() {
        let opts = EnumOptions::default();
        for n in 1..=8 {
            assert_eq!(a_k_sequence(n, 1, opts).unwrap(), motzkin(n as u64));
            assert_eq!(a_k_sequence(n, n.max(2) - 1, opts).unwrap(), catalan(n as u64));
            if n >= 3 {
                assert_eq!(a_k_sequence(n, n - 2, opts).unwrap(), catalan(n as u64) - 1u32);
            }
        }
    }
}
