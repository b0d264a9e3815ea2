use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use bijection_atlas_ffi::*;

const EX: &str = "2 6 1 3 7 4 5 8 10 9";

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    ba_string_free(s);
    out
}

unsafe fn parse(word: &str) -> *mut BaPermutation {
    let mut p = ptr::null_mut();
    assert_eq!(ba_perm_parse(c(word).as_ptr(), &mut p), BaStatus::Ok);
    p
}

#[test]
fn statistics_through_handles() {
    unsafe {
        let p = parse(EX);
        assert_eq!(ba_perm_len(p), 10);
        for (name, want) in [("inv", 8), ("dexc", 8), ("des", 3), ("ddes", 9), ("exc", 4)] {
            let mut v = 0;
            assert_eq!(ba_perm_stat(p, c(name).as_ptr(), &mut v), BaStatus::Ok);
            assert_eq!(v, want, "{name}");
        }
        let mut bi = false;
        assert_eq!(ba_perm_is_bi_increasing(p, &mut bi), BaStatus::Ok);
        assert!(bi);
        let mut s = ptr::null_mut();
        assert_eq!(ba_perm_stats_json(p, &mut s), BaStatus::Ok);
        assert!(take(s).contains("\"dexc\":8"));

        let mut len = 0;
        assert_eq!(ba_perm_values(p, ptr::null_mut(), 0, &mut len), BaStatus::Ok);
        let mut buf = vec![0usize; len];
        assert_eq!(ba_perm_values(p, buf.as_mut_ptr(), len, &mut len), BaStatus::Ok);
        assert_eq!(buf, [2, 6, 1, 3, 7, 4, 5, 8, 10, 9]);
        ba_perm_free(p);
    }
}

#[test]
fn maps_and_class_size() {
    unsafe {
        let p = parse(EX);
        let mut q = ptr::null_mut();
        assert_eq!(ba_perm_psi(p, &mut q), BaStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(ba_perm_to_string(q, &mut s), BaStatus::Ok);
        assert_eq!(take(s), "2 6 1 7 3 4 5 8 10 9");
        ba_perm_free(q);

        let mut f = ptr::null_mut();
        let mut back = ptr::null_mut();
        assert_eq!(ba_perm_foata(p, &mut f), BaStatus::Ok);
        assert_eq!(ba_perm_foata_inverse(f, &mut back), BaStatus::Ok);
        assert_eq!(ba_perm_to_string(back, &mut s), BaStatus::Ok);
        assert_eq!(take(s), EX);
        ba_perm_free(f);
        ba_perm_free(back);

        let mut h = ptr::null_mut();
        assert_eq!(ba_perm_hat(p, &mut h), BaStatus::Ok);
        assert_eq!(ba_perm_len(h), 10);
        ba_perm_free(h);
        ba_perm_free(p);

        let id = parse("1 2 3 4");
        assert_eq!(ba_perm_class_size(id, &mut s), BaStatus::Ok);
        assert_eq!(take(s), "1");
        ba_perm_free(id);

        let vals = [1usize, 3, 2];
        let mut r = ptr::null_mut();
        assert_eq!(ba_perm_from_values(vals.as_ptr(), 3, &mut r), BaStatus::Ok);
        ba_perm_free(r);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ba_perm_parse(c("1 1").as_ptr(), &mut p), BaStatus::Parse);
        assert!(p.is_null());
        let dup = [1usize, 1];
        assert_eq!(ba_perm_from_values(dup.as_ptr(), 2, &mut p), BaStatus::Invalid);
        assert!(!ba_last_error().is_null());
        assert_eq!(ba_perm_parse(c("1 x").as_ptr(), &mut p), BaStatus::Parse);
        assert_eq!(ba_perm_parse(ptr::null(), &mut p), BaStatus::NullArgument);
        let msg = CStr::from_ptr(ba_last_error()).to_str().unwrap();
        assert!(msg.contains("null"), "{msg}");

        let bad = parse("3 2 1");
        let mut q = ptr::null_mut();
        assert_eq!(ba_perm_psi(bad, &mut q), BaStatus::NotBiIncreasing);
        let mut v = 0;
        assert_eq!(ba_perm_stat(bad, c("bogus").as_ptr(), &mut v), BaStatus::Unknown);
        assert_eq!(ba_perm_stat(bad, c("inv").as_ptr(), &mut v), BaStatus::Ok);
        assert_eq!(v, 3);
        assert!(ba_last_error().is_null());
        ba_perm_free(bad);

        let mut s = ptr::null_mut();
        assert_eq!(ba_distribution_json(c("S").as_ptr(), 12, c("exc").as_ptr(), 1, false, &mut s), BaStatus::CapExceeded);
        assert_eq!(ba_perm_len(ptr::null()), 0);
        ba_perm_free(ptr::null_mut());
        ba_string_free(ptr::null_mut());
    }
}

#[test]
fn conversions_counts_and_tables() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(ba_catalan(40, &mut s), BaStatus::Ok);
        assert_eq!(take(s), "2622127042276492108820");

        assert_eq!(ba_convert(c("perm").as_ptr(), c(EX).as_ptr(), c("dyck").as_ptr(), c("bjs").as_ptr(), &mut s), BaStatus::Ok);
        let dyck = take(s);
        assert_eq!(dyck, "UDUUUUDUDDDUUUDDDDUD");
        assert_eq!(ba_convert(c("dyck").as_ptr(), c(&dyck).as_ptr(), c("perm").as_ptr(), ptr::null(), &mut s), BaStatus::Ok);
        assert_eq!(take(s), EX);
        assert_eq!(ba_convert(c("perm").as_ptr(), c(EX).as_ptr(), c("motzkin2").as_ptr(), ptr::null(), &mut s), BaStatus::Invalid);

        assert_eq!(ba_describe_json(c("motzkin2").as_ptr(), c("ubssuddsud").as_ptr(), &mut s), BaStatus::Ok);
        assert!(take(s).contains("\"rank_from_path\":2"));

        assert_eq!(ba_distribution_json(c("B").as_ptr(), 4, c("exc").as_ptr(), 2, false, &mut s), BaStatus::Ok);
        let t = take(s);
        assert!(t.contains("\"total\":14"), "{t}");
    }
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(root.join("include/bijection_atlas.h")).unwrap();
    for name in ["ba_perm_parse", "ba_perm_psi", "ba_perm_class_size", "ba_convert", "ba_string_free", "BA_STATUS_CAP_EXCEEDED"] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let lib = target_dir().join("libbijection_atlas_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let exe = std::env::temp_dir().join(format!("ba_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-I")
        .arg(root.join("include"))
        .arg(root.join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("cc available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(out.stdout, b"ok\n");
}
