//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::{Command, ExitCode};

use bijection_atlas::bij;
use bijection_atlas::counting::EnumOptions;
use bijection_atlas::verify::{suite, Limits};

struct Criterion {
    what: &'static str,
    check: Box<dyn Fn() -> Result<String, String>>,
}

fn run_suite(name: &'static str, limits: Limits) -> Result<String, String> {
    let opts = EnumOptions { jobs: 4, force: false };
    let r = suite(name).and_then(|s| s.run(&limits, opts)).map_err(|e| e.to_string())?;
    match r.failure {
        None => Ok(format!("{} [{}; {} cases]", r.name, r.scope, r.cases)),
        Some(f) => Err(format!("{}: {f}", r.name)),
    }
}

fn suite_criterion(what: &'static str, name: &'static str, s: usize, b: usize, poly: usize) -> Criterion {
    Criterion { what, check: Box::new(move || run_suite(name, Limits { s, b, poly })) }
}

fn extremal_reach() -> Result<String, String> {
    for n in 1..=8 {
        let seq = bij::extremal_sequence(n).map_err(|e| e.to_string())?;
        let last = seq.last().ok_or("empty sequence")?;
        if last.dexc() != n * n / 4 {
            return Err(format!("n={n}: final dexc {}", last.dexc()));
        }
        if let Some((k, q)) = seq.iter().enumerate().find(|(k, q)| q.inv() + q.exc() != 2 * k || q.dexc() != *k) {
            return Err(format!("n={n}, step {k}: {q}"));
        }
    }
    Ok("extremal sequences for n<=8".into())
}

fn determinism() -> Result<String, String> {
    let report = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_bijection-atlas"))
            .args(["verify", "--suite", "all", "--nmax", "6", "--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("jobs={jobs} exited with {:?}", out.status.code()));
        }
        Ok(out.stdout)
    };
    let (one, eight) = (report("1")?, report("8")?);
    if one == eight {
        Ok(format!("{} identical bytes", one.len()))
    } else {
        Err("reports differ between --jobs 1 and --jobs 8".into())
    }
}

fn main() -> ExitCode {
    let criteria = vec![
        suite_criterion("inv = dexc + inv(pi_e) + inv(pi_ne) on S_n, n<=7", "inversion-split", 7, 1, 1),
        suite_criterion("(exc,dexc) vs (des,ddes) tables and Foata transport, n<=7", "foata-equidistribution", 7, 1, 1),
        Criterion {
            what: "inversion bounds on S_7, extremal sequences to n=8, n=6 table",
            check: Box::new(|| {
                let a = run_suite("inversion-bounds", Limits { s: 7, b: 1, poly: 1 })?;
                Ok(format!("{a}; {}", extremal_reach()?))
            }),
        },
        suite_criterion("bi-increasing tests agree on S_8; |B_n| = Catalan(n), n<=11", "bi-increasing-characterizations", 8, 11, 1),
        suite_criterion("Narayana, Motzkin, Fine, and fixed-set counts on B_n, n<=10", "refined-counts", 1, 10, 1),
        suite_criterion("bjs = delest_viennot after perm_to_parallelogram on B_8", "bjs-delest-viennot", 1, 8, 1),
        suite_criterion("fv_extended bijective onto M*_n with (des, ddes), n<=9", "francon-viennot", 1, 9, 1),
        suite_criterion("Foata-Zeilberger statistics on S_7, bijectivity and psi identity on B_9", "foata-zeilberger", 7, 9, 1),
        suite_criterion("dexc and ddes agree on B_n, n<=10; psi preserves exc and fix", "psi-symmetry", 1, 10, 1),
        suite_criterion("J_1/J_0 coefficients at N=8, K=16 equal B_n dexc counts", "q-series", 1, 8, 1),
        suite_criterion("three rank computations agree up to perimeter 22; closed rank counts", "skew-rank", 1, 1, 10),
        suite_criterion("class size four ways on B_7; sizes sum to n!; 16-member example", "class-size", 1, 7, 1),
        suite_criterion("reflection symmetries on S_n, n<=8, and B_n, n<=10", "reflection-symmetries", 8, 10, 1),
        Criterion { what: "verify --suite all --nmax 6 is identical for --jobs 1 and 8", check: Box::new(determinism) },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        match (c.check)() {
            Ok(detail) => println!("PASS criterion {:>2}: {} ({detail})", i + 1, c.what),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {} ({why})", i + 1, c.what);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
