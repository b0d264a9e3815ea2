//! Exhaustive verification suites. Each suite checks one family of identities
//! up to configurable sizes and reports the first counterexample it meets.
//! Reports depend only on the limits, never on the worker count.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::bij;
use crate::counting::enumerate::{par_fold, EnumOptions, Family};
use crate::counting::{distribution, numbers, series};
use crate::error::{AtlasError, Result};
use crate::paths::{self, MotzkinStep};
use crate::perm::{inversions, BiIncMethod, Permutation, Statistic};
use crate::polyomino;

/// Largest sizes per object family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// All permutations.
    pub s: usize,
    /// Bi-increasing permutations and the sequences they count.
    pub b: usize,
    /// Semi-perimeter minus one of parallelogram polyominoes.
    pub poly: usize,
}

impl Limits {
    pub fn uniform(n: usize) -> Self {
        Limits { s: n, b: n, poly: n }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Suite {
    pub name: &'static str,
    pub claim: &'static str,
    /// Family and size pairs subject to the enumeration caps.
    caps: fn(&Limits) -> Vec<(Family, usize)>,
    run: fn(&Limits, usize) -> Outcome,
}

/// What one suite found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub claim: &'static str,
    pub scope: String,
    pub cases: u64,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn line(&self) -> String {
        let head = format!("{} {}: {} [{}; {} cases]", if self.passed() { "PASS" } else { "FAIL" }, self.name, self.claim, self.scope, self.cases);
        match &self.failure {
            None => head,
            Some(f) => format!("{head}\n  counterexample: {f}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.suites {
            s.push_str(&r.line());
            s.push('\n');
        }
        let ok = self.suites.iter().filter(|r| r.passed()).count();
        s.push_str(&format!("{} suites, {} passed, {} failed\n", self.suites.len(), ok, self.suites.len() - ok));
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": crate::SCHEMA,
            "passed": self.passed(),
            "suites": self.suites.iter().map(|r| json!({
                "name": r.name,
                "claim": r.claim,
                "scope": r.scope,
                "cases": r.cases,
                "passed": r.passed(),
                "counterexample": r.failure,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Running tally of a suite: case count and the first failure.
#[derive(Debug, Default, Clone)]
struct Outcome {
    scope: String,
    cases: u64,
    failure: Option<String>,
}

impl Outcome {
    fn scoped(scope: String) -> Self {
        Outcome { scope, ..Outcome::default() }
    }

    fn ok(&self) -> bool {
        self.failure.is_none()
    }

    fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if self.ok() {
            self.cases += 1;
            if !cond {
                self.failure = Some(msg());
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        if self.ok() {
            self.cases += other.cases;
            self.failure = other.failure;
        }
    }
}

#[derive(Debug, Default)]
struct Tally {
    cases: u64,
    failure: Option<String>,
}

/// Applies `check` to every member of the family at size `n`.
fn each<F>(family: Family, n: usize, jobs: usize, check: F) -> Tally
where
    F: Fn(&Permutation) -> Option<String> + Sync,
{
    par_fold(
        family,
        n,
        jobs,
        Tally::default,
        |t, p| {
            t.cases += 1;
            if t.failure.is_none() {
                t.failure = check(p);
            }
        },
        |mut a, b| {
            a.cases += b.cases;
            if a.failure.is_none() {
                a.failure = b.failure;
            }
            a
        },
    )
}

fn fail_unless(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if cond { None } else { Some(msg()) }
}

fn table(family: Family, n: usize, stats: &[Statistic], jobs: usize) -> BTreeMap<Vec<usize>, BigUint> {
    distribution(family, n, stats, EnumOptions { jobs, force: true }).expect("valid table request").counts
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("fixed example parses")
}

const EXAMPLE: &str = "2 6 1 3 7 4 5 8 10 9";

fn inversion_split(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("S_n, n<={}", l.s));
    for n in 1..=l.s {
        out.absorb(each(Family::S, n, jobs, |p| {
            let r = p.restriction_words();
            let rhs = p.dexc() + inversions(&r.pi_e) + inversions(&r.pi_ne);
            fail_unless(p.inv() == rhs, || format!("{p}: inv {} != {rhs}", p.inv()))
        }));
    }
    out
}

fn foata_equidistribution(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("S_n, n<={}", l.s));
    for n in 1..=l.s {
        let a = table(Family::S, n, &[Statistic::Exc, Statistic::Dexc], jobs);
        let b = table(Family::S, n, &[Statistic::Des, Statistic::Ddes], jobs);
        out.check(a == b, || format!("n={n}: (exc,dexc) and (des,ddes) tables differ"));
        out.absorb(each(Family::S, n, jobs, |p| {
            let f = bij::foata_phi(p);
            fail_unless((p.exc(), p.dexc()) == (f.des(), f.ddes()) && bij::foata_phi_inverse(&f) == *p, || {
                format!("{p} -> {f}")
            })
        }));
    }
    out
}

const EXTREMAL_SIX: [(&str, usize, usize, usize); 10] = [
    ("1 2 3 4 5 6", 0, 0, 0),
    ("2 1 3 4 5 6", 1, 1, 1),
    ("3 2 1 4 5 6", 1, 2, 3),
    ("4 2 3 1 5 6", 1, 3, 5),
    ("5 2 3 4 1 6", 1, 4, 7),
    ("6 2 3 4 5 1", 1, 5, 9),
    ("6 3 2 4 5 1", 2, 6, 10),
    ("6 4 3 2 5 1", 2, 7, 12),
    ("6 5 3 4 2 1", 2, 8, 14),
    ("6 5 4 3 2 1", 3, 9, 15),
];

fn inversion_bounds(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("S_n, n<={}", l.s));
    for n in 1..=l.s {
        out.absorb(each(Family::S, n, jobs, |p| {
            let (inv, dexc) = (p.inv() as i64, p.dexc() as i64);
            let m = p.exc().max(n - p.exc() - p.fix()) as i64;
            let upper = 2 * dexc - p.exc() as i64;
            fail_unless(dexc <= inv && inv <= upper && inv <= 2 * dexc - m, || {
                format!("{p}: inv {inv}, dexc {dexc}, exc {}, fix {}", p.exc(), p.fix())
            })
        }));
        let seq = bij::extremal_sequence(n).expect("n >= 1");
        out.check(seq.len() == n * n / 4 + 1, || format!("n={n}: extremal sequence has {} terms", seq.len()));
        for (k, q) in seq.iter().enumerate() {
            out.check(q.dexc() == k && q.inv() + q.exc() == 2 * k, || format!("n={n}, step {k}: {q}"));
        }
    }
    let seq = bij::extremal_sequence(6).expect("n >= 1");
    out.check(seq.len() == EXTREMAL_SIX.len(), || "extremal table for n=6 has the wrong length".into());
    for (q, (w, e, k, i)) in seq.iter().zip(EXTREMAL_SIX) {
        out.check(*q == perm(w) && (q.exc(), q.dexc(), q.inv()) == (e, k, i), || format!("n=6 row {q}, expected {w}"));
    }
    out
}

fn characterizations(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("S_n, n<={}; B_n, n<={}", l.s, l.b));
    for n in 1..=l.s {
        out.absorb(each(Family::S, n, jobs, |p| {
            let first = p.is_bi_increasing_by(BiIncMethod::ALL[0]);
            fail_unless(BiIncMethod::ALL.iter().all(|&m| p.is_bi_increasing_by(m) == first), || {
                format!("{p}: methods disagree")
            })
        }));
    }
    for n in 1..=l.b {
        let t = each(Family::B, n, jobs, |p| {
            fail_unless(p.is_bi_increasing_by(BiIncMethod::SortedRestrictions), || format!("{p} generated but not bi-increasing"))
        });
        let count = t.cases;
        out.absorb(t);
        out.check(BigUint::from(count) == numbers::catalan(n as u64), || format!("|B_{n}| = {count}"));
    }
    out
}

#[derive(Default)]
struct RefinedCounts {
    by_exc: BTreeMap<usize, u64>,
    motzkin_by_des: BTreeMap<usize, u64>,
    derangements: u64,
    by_fixed_set: BTreeMap<u64, u64>,
}

fn refined_counts(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("B_n, n<={}", l.b));
    for n in 1..=l.b {
        let c = par_fold(
            Family::B,
            n,
            jobs,
            RefinedCounts::default,
            |c, p| {
                *c.by_exc.entry(p.exc()).or_default() += 1;
                if p.exc_equals_des() {
                    *c.motzkin_by_des.entry(p.des()).or_default() += 1;
                }
                let mask = p.fixed_point_set().iter().fold(0u64, |m, &i| m | 1 << (i - 1));
                if mask == 0 {
                    c.derangements += 1;
                }
                *c.by_fixed_set.entry(mask).or_default() += 1;
            },
            |mut a, b| {
                for (k, v) in b.by_exc {
                    *a.by_exc.entry(k).or_default() += v;
                }
                for (k, v) in b.motzkin_by_des {
                    *a.motzkin_by_des.entry(k).or_default() += v;
                }
                for (k, v) in b.by_fixed_set {
                    *a.by_fixed_set.entry(k).or_default() += v;
                }
                a.derangements += b.derangements;
                a
            },
        );
        let got = |m: &BTreeMap<usize, u64>, k| BigUint::from(m.get(&k).copied().unwrap_or(0));
        for e in 0..n {
            let want = numbers::narayana(n as u64, e as u64 + 1).expect("in range");
            out.check(got(&c.by_exc, e) == want, || format!("n={n}: exc={e} count {} != {want}", got(&c.by_exc, e)));
        }
        let motzkin: u64 = c.motzkin_by_des.values().sum();
        out.check(BigUint::from(motzkin) == numbers::motzkin(n as u64), || format!("n={n}: exc=des count {motzkin}"));
        for k in 0..=n / 2 {
            let want = numbers::binomial(n as u64, 2 * k as u64) * numbers::catalan(k as u64);
            out.check(got(&c.motzkin_by_des, k) == want, || format!("n={n}: exc=des={k} count"));
        }
        out.check(BigUint::from(c.derangements) == numbers::fine(n as u64), || format!("n={n}: {} derangements", c.derangements));
        for mask in 0..1u64 << n {
            let set: Vec<u64> = (1..=n as u64).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let want = numbers::fixed_point_set_count(n as u64, &set).expect("valid set");
            let have = BigUint::from(c.by_fixed_set.get(&mask).copied().unwrap_or(0));
            out.check(have == want, || format!("n={n}: fixed set {set:?} count {have} != {want}"));
        }
    }
    out
}

fn bjs_dv(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("B_n, n<={}", l.b));
    let word = paths::bjs(&perm(EXAMPLE)).map(|d| d.to_string());
    out.check(word.as_deref() == Ok("UDUUUUDUDDDUUUDDDDUD"), || format!("example word {word:?}"));
    for n in 1..=l.b {
        out.absorb(each(Family::B, n, jobs, |p| {
            let a = paths::bjs(p).expect("bi-increasing").to_string();
            let b = paths::delest_viennot(&polyomino::perm_to_parallelogram(p).expect("bi-increasing")).to_string();
            fail_unless(a == b, || format!("{p}: {a} vs {b}"))
        }));
    }
    out
}

fn francon_viennot(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("B_n and M*_n, n<={}", l.b));
    let golden = [
        (paths::fv_extended(&perm(EXAMPLE)).map(|c| c.to_string()), "ubsusddsud"),
        (Ok(paths::francon_viennot(&perm("3 1 7 2 4 5 6 8 10 9")).to_string()), "uudsssdsud"),
        (Ok(paths::francon_viennot(&perm("2 7 4 3 1 6 5 8 10 9")).to_string()), "usbbuddsud"),
    ];
    for (got, want) in golden {
        out.check(got.as_deref() == Ok(want), || format!("example path {got:?}, expected {want}"));
    }
    for n in 1..=l.b {
        let t = each(Family::B, n, jobs, |p| {
            let c = paths::fv_extended(p).expect("bi-increasing");
            let st = paths::path_stats(&c);
            let back = paths::fv_extended_inverse(&c);
            fail_unless(c.is_star() && (st.up, st.height_sum) == (p.des(), p.ddes()) && back.as_ref() == Ok(p), || {
                format!("{p} -> {c}")
            })
        });
        let count = t.cases;
        out.absorb(t);
        out.check(BigUint::from(count) == paths::count_two_motzkin(n, true, false), || format!("n={n}: |M*_n| differs"));
        let mut plain = Outcome::default();
        paths::for_each_two_motzkin(n, true, true, &mut |c| {
            let back = paths::francon_viennot_inverse(c);
            plain.check(back.as_ref().map(paths::francon_viennot).as_ref() == Ok(c), || format!("plain path {c}"));
        });
        out.check(BigUint::from(plain.cases) == numbers::motzkin(n as u64), || format!("n={n}: plain path count"));
        out.absorb(Tally { cases: plain.cases, failure: plain.failure });
    }
    out
}

fn foata_zeilberger(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("S_n, n<={}; B_n, n<={}", l.s, l.b));
    for n in 1..=l.s {
        out.absorb(each(Family::S, n, jobs, |p| {
            let c = paths::foata_zeilberger(p);
            let st = paths::path_stats(&c);
            fail_unless(c.is_star() && (st.up + st.broken, st.height_sum) == (p.exc(), p.dexc()), || format!("{p} -> {c}"))
        }));
    }
    for n in 1..=l.b {
        out.absorb(each(Family::B, n, jobs, |p| {
            let c = paths::foata_zeilberger(p);
            let back = paths::fz_inverse_bi(&c);
            let twisted = paths::fz_of_psi(p).expect("bi-increasing");
            let fvx = paths::fv_extended(p).expect("bi-increasing");
            fail_unless(back.as_ref() == Ok(p) && twisted == fvx, || format!("{p}: {c}, {twisted} vs {fvx}"))
        }));
    }
    out
}

fn encode(p: &Permutation) -> u64 {
    p.word().iter().fold(0u64, |acc, &v| (acc << 4) | v as u64)
}

fn psi_symmetry(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("B_n, n<={}", l.b));
    let psi = bij::psi(&perm(EXAMPLE)).map(|q| q.to_string());
    out.check(psi.as_deref() == Ok("2 6 1 7 3 4 5 8 10 9"), || format!("example image {psi:?}"));
    for n in 1..=l.b {
        let a = table(Family::B, n, &[Statistic::Dexc], jobs);
        let b = table(Family::B, n, &[Statistic::Ddes], jobs);
        out.check(a == b, || format!("n={n}: dexc and ddes tables differ"));
        let (tally, mut images) = par_fold(
            Family::B,
            n,
            jobs,
            || (Tally::default(), Vec::new()),
            |(t, imgs), p| {
                t.cases += 1;
                let q = bij::psi(p).expect("bi-increasing");
                imgs.push(encode(&q));
                if t.failure.is_none() && !(q.is_bi_increasing() && q.exc() == p.exc() && q.fix() == p.fix() && q.dexc() == p.ddes()) {
                    t.failure = Some(format!("{p} -> {q}"));
                }
            },
            |(mut ta, mut ia), (tb, ib)| {
                ta.cases += tb.cases;
                if ta.failure.is_none() {
                    ta.failure = tb.failure;
                }
                ia.extend(ib);
                (ta, ia)
            },
        );
        out.absorb(tally);
        images.sort_unstable();
        images.dedup();
        out.check(BigUint::from(images.len()) == numbers::catalan(n as u64), || format!("n={n}: psi is not injective"));
    }
    out
}

fn q_series(l: &Limits, jobs: usize) -> Outcome {
    let big_n = l.b;
    let big_k = big_n * big_n / 4;
    let mut out = Outcome::scoped(format!("x^n q^k, n<={big_n}, k<={big_k}"));
    let g = match series::dexc_generating_function(big_n, big_k) {
        Ok(g) => g,
        Err(e) => {
            out.check(false, || e.to_string());
            return out;
        }
    };
    out.check(g.coeff(0, 0).is_zero(), || "constant term is not zero".into());
    for n in 1..=big_n {
        let t = table(Family::B, n, &[Statistic::Dexc], jobs);
        for k in 0..=big_k {
            let want = BigInt::from(t.get(&vec![k]).cloned().unwrap_or_default());
            out.check(*g.coeff(n, k) == want, || format!("x^{n} q^{k}: {} != {want}", g.coeff(n, k)));
        }
        let col: BigInt = g.x_row(n).iter().sum();
        out.check(col == BigInt::from(numbers::catalan(n as u64)), || format!("x^{n} column sums to {col}"));
    }
    out
}

fn skew_rank(l: &Limits, _jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("perimeter <= {}", 2 * l.poly + 2));
    let q: polyomino::ParallelogramPolyomino = "gamma=1,3,0,2,0 delta=0,0,2,3,1".parse().expect("fixed example");
    let s = polyomino::polyomino_to_skew(&q);
    let code = polyomino::reduced_code(&s).map(|c| c.to_string());
    out.check(s.to_string() == "outer=5,4,4,4,3,3 inner=3,3,1,1,1", || format!("example skew {s}"));
    out.check(code.as_deref() == Ok("a=11100100010 b=01000110011"), || format!("example code {code:?}"));
    out.check(polyomino::rank(&s) == Ok(2), || "example rank".into());
    for n in 1..=l.poly {
        let mut partitions: BTreeMap<usize, u64> = BTreeMap::new();
        let mut skews: BTreeMap<usize, u64> = BTreeMap::new();
        let mut falling: BTreeMap<usize, u64> = BTreeMap::new();
        polyomino::for_each_parallelogram(n, &mut |q| {
            let s = polyomino::polyomino_to_skew(q);
            let r = polyomino::rank(&s).unwrap_or(0);
            let st = paths::path_stats(&paths::polyomino_to_2motzkin(q));
            let diag = polyomino::rank_by_diagonals(&s).unwrap_or(0);
            out.check(r >= 1 && r == st.rank_from_path && r == diag, || format!("{q}: ranks {r}, {}, {diag}", st.rank_from_path));
            *skews.entry(r).or_default() += 1;
            *falling.entry(st.falling_pairs).or_default() += 1;
            if q.is_partition() {
                *partitions.entry(r).or_default() += 1;
            }
        });
        for r in 1..=n {
            let p = BigUint::from(partitions.get(&r).copied().unwrap_or(0));
            let s = BigUint::from(skews.get(&r).copied().unwrap_or(0));
            let (wp, ws) = (
                numbers::partitions_by_rank(n as u64, r as u64).expect("in range"),
                numbers::skew_by_rank(n as u64, r as u64).expect("in range"),
            );
            out.check(p == wp && s == ws, || format!("n={n}, r={r}: {p} partitions, {s} skews"));
        }
        let mut downs: BTreeMap<usize, u64> = BTreeMap::new();
        paths::for_each_two_motzkin(n - 1, false, false, &mut |c| *downs.entry(c.count(MotzkinStep::D)).or_default() += 1);
        out.check(downs == falling, || format!("n={n}: down-step and falling-pair counts differ"));
    }
    out
}

const CLASS_EXAMPLE: [&str; 16] = [
    "2 6 1 3 7 4 5 8 10 9",
    "2 6 1 3 7 5 4 8 10 9",
    "2 6 3 4 7 1 5 8 10 9",
    "2 7 3 1 6 5 4 8 10 9",
    "2 7 1 3 6 4 5 8 10 9",
    "2 7 3 1 6 4 5 8 10 9",
    "2 6 3 1 7 5 4 8 10 9",
    "2 7 1 4 6 5 3 8 10 9",
    "2 6 3 1 7 4 5 8 10 9",
    "2 7 1 4 6 3 5 8 10 9",
    "2 6 1 4 7 5 3 8 10 9",
    "2 6 3 4 7 5 1 8 10 9",
    "2 6 1 4 7 3 5 8 10 9",
    "2 7 1 3 6 5 4 8 10 9",
    "2 7 3 4 6 1 5 8 10 9",
    "2 7 3 4 6 5 1 8 10 9",
];

/// Largest size at which classes are generated element by element.
const CLASS_GEN_MAX: usize = 8;

fn class_size(l: &Limits, jobs: usize) -> Outcome {
    let top = l.b.min(CLASS_GEN_MAX);
    let mut out = Outcome::scoped(format!("B_n, n<={top}"));
    let class = bij::equivalence_class(&perm(EXAMPLE)).unwrap_or_default();
    let listed: std::collections::BTreeSet<Permutation> = CLASS_EXAMPLE.iter().map(|s| perm(s)).collect();
    out.check(class == listed, || format!("example class has {} members", class.len()));
    for n in 1..=top {
        let (tally, total) = par_fold(
            Family::B,
            n,
            jobs,
            || (Tally::default(), BigUint::zero()),
            |(t, total), p| {
                t.cases += 1;
                let size = bij::class_size(p).expect("bi-increasing");
                *total += &size;
                if t.failure.is_some() {
                    return;
                }
                let pp = polyomino::perm_to_parallelogram(p).expect("bi-increasing");
                let diag: BigUint = pp.diagonal_lengths().iter().map(|&d| BigUint::from(d)).product();
                let over: BigUint = polyomino::perm_to_step(p)
                    .expect("bi-increasing")
                    .row_overlaps()
                    .iter()
                    .map(|&a| BigUint::from(a))
                    .product();
                let generated = bij::equivalence_class(p).map(|c| c.len()).unwrap_or(0);
                if !(size == diag && size == over && size == BigUint::from(generated)) {
                    t.failure = Some(format!("{p}: {size}, {diag}, {over}, {generated}"));
                }
            },
            |(mut ta, sa), (tb, sb)| {
                ta.cases += tb.cases;
                if ta.failure.is_none() {
                    ta.failure = tb.failure;
                }
                (ta, sa + sb)
            },
        );
        out.absorb(tally);
        out.check(total == Family::S.size(n), || format!("n={n}: class sizes sum to {total}"));
    }
    out
}

type Reflection = fn(usize, usize, usize) -> Option<(usize, usize)>;

/// `(e, k) ↦ (n−1−e, n−1−2e+k)`.
fn reflect(n: usize, e: usize, k: usize) -> Option<(usize, usize)> {
    let e2 = (n - 1).checked_sub(e)?;
    ((n - 1 + k).checked_sub(2 * e)).map(|k2| (e2, k2))
}

fn symmetric(t: &BTreeMap<Vec<usize>, BigUint>, n: usize, f: Reflection) -> std::result::Result<(), String> {
    for (key, v) in t {
        let image = f(n, key[0], key[1]).ok_or_else(|| format!("{key:?} reflects out of range"))?;
        let w = t.get(&vec![image.0, image.1]).cloned().unwrap_or_default();
        if *v != w {
            return Err(format!("{key:?}: {v} vs {image:?}: {w}"));
        }
    }
    Ok(())
}

fn reflections(l: &Limits, jobs: usize) -> Outcome {
    let mut out = Outcome::scoped(format!("S_n, n<={}; B_n, n<={}", l.s, l.b));
    for n in 1..=l.s {
        for stats in [[Statistic::Exc, Statistic::Dexc], [Statistic::Exc, Statistic::Inv]] {
            let t = table(Family::S, n, &stats, jobs);
            let r = symmetric(&t, n, reflect);
            out.check(r.is_ok(), || format!("S_{n} ({}, {}): {}", stats[0], stats[1], r.clone().unwrap_err()));
        }
    }
    for n in 1..=l.b {
        let t = table(Family::B, n, &[Statistic::Exc, Statistic::Dexc], jobs);
        let r = symmetric(&t, n, reflect);
        out.check(r.is_ok(), || format!("B_{n}: {}", r.clone().unwrap_err()));
        out.absorb(each(Family::B, n, jobs, |p| {
            let pp = polyomino::rotate180(&polyomino::perm_to_parallelogram(p).expect("bi-increasing"));
            let q = polyomino::parallelogram_to_perm(&pp).expect("valid polyomino");
            fail_unless(reflect(n, p.exc(), p.dexc()) == Some((q.exc(), q.dexc())), || format!("{p} -> {q}"))
        }));
    }
    out
}

pub const SUITES: [Suite; 13] = [
    Suite {
        name: "inversion-split",
        claim: "inv = dexc + inv(pi_e) + inv(pi_ne)",
        caps: |l| vec![(Family::S, l.s)],
        run: inversion_split,
    },
    Suite {
        name: "foata-equidistribution",
        claim: "(exc, dexc) and (des, ddes) are equidistributed, transported by Foata's map",
        caps: |l| vec![(Family::S, l.s)],
        run: foata_equidistribution,
    },
    Suite {
        name: "inversion-bounds",
        claim: "dexc <= inv <= 2 dexc - max(exc, n - exc - fix); extremal constructions",
        caps: |l| vec![(Family::S, l.s)],
        run: inversion_bounds,
    },
    Suite {
        name: "bi-increasing-characterizations",
        claim: "four bi-increasing tests agree; |B_n| = Catalan(n)",
        caps: |l| vec![(Family::S, l.s), (Family::B, l.b)],
        run: characterizations,
    },
    Suite {
        name: "refined-counts",
        claim: "Narayana exc rows, Motzkin exc = des counts, Fine derangements, fixed-set products",
        caps: |l| vec![(Family::B, l.b)],
        run: refined_counts,
    },
    Suite {
        name: "bjs-delest-viennot",
        claim: "bjs(p) = delest_viennot(perm_to_parallelogram(p))",
        caps: |l| vec![(Family::B, l.b)],
        run: bjs_dv,
    },
    Suite {
        name: "francon-viennot",
        claim: "fv_extended: B_n -> M*_n bijective with (up, height sum) = (des, ddes)",
        caps: |l| vec![(Family::B, l.b)],
        run: francon_viennot,
    },
    Suite {
        name: "foata-zeilberger",
        claim: "(u + b, height sum) = (exc, dexc); bijective on B_n; fz(psi(p)) = fv_extended(p)",
        caps: |l| vec![(Family::S, l.s), (Family::B, l.b)],
        run: foata_zeilberger,
    },
    Suite {
        name: "psi-symmetry",
        claim: "dexc and ddes equidistributed on B_n; psi preserves exc and fix",
        caps: |l| vec![(Family::B, l.b)],
        run: psi_symmetry,
    },
    Suite {
        name: "q-series",
        claim: "coefficients of J_1/J_0 count B_n by dexc",
        caps: |l| vec![(Family::B, l.b)],
        run: q_series,
    },
    Suite {
        name: "skew-rank",
        claim: "rank by reduced code = rank by path pairs = rank by diagonals; closed rank counts",
        caps: |l| vec![(Family::B, l.poly)],
        run: skew_rank,
    },
    Suite {
        name: "class-size",
        claim: "|[p]| = T-product = diagonal product = row-overlap product = generated class size",
        caps: |l| vec![(Family::B, l.b)],
        run: class_size,
    },
    Suite {
        name: "reflection-symmetries",
        claim: "(e, k) -> (n-1-e, n-1-2e+k) preserves (exc, dexc) and (exc, inv) tables",
        caps: |l| vec![(Family::S, l.s), (Family::B, l.b)],
        run: reflections,
    },
];

pub fn suite(name: &str) -> Result<&'static Suite> {
    SUITES.iter().find(|s| s.name == name).ok_or_else(|| AtlasError::Unknown { what: "suite", name: name.into() })
}

impl Suite {
    pub fn run(&self, limits: &Limits, opts: EnumOptions) -> Result<SuiteReport> {
        for (f, n) in (self.caps)(limits) {
            f.check_cap(n, opts.force)?;
        }
        let o = (self.run)(limits, opts.jobs.max(1));
        Ok(SuiteReport { name: self.name, claim: self.claim, scope: o.scope, cases: o.cases, failure: o.failure })
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn verify(name: &str, limits: &Limits, opts: EnumOptions) -> Result<Report> {
    let chosen: Vec<&Suite> = if name == "all" { SUITES.iter().collect() } else { vec![suite(name)?] };
    let suites = chosen.iter().map(|s| s.run(limits, opts)).collect::<Result<Vec<_>>>()?;
    Ok(Report { suites })
}
