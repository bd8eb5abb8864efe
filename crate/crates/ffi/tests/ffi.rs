use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use ehrmat_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ehrmat_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ehrmat_last_error()) }.to_str().unwrap().to_owned()
}

fn polytope(json: &str) -> Result<*mut EhrmatPolytope, EhrmatStatus> {
    let text = CString::new(json).unwrap();
    let mut p = ptr::null_mut();
    match unsafe { ehrmat_polytope_from_json(text.as_ptr(), &mut p) } {
        EhrmatStatus::Ok => Ok(p),
        status => {
            assert!(p.is_null());
            Err(status)
        }
    }
}

fn compute(p: *const EhrmatPolytope, budget: u64) -> Result<*mut EhrmatEhrhart, EhrmatStatus> {
    let mut e = ptr::null_mut();
    match unsafe { ehrmat_compute_ehrhart(p, budget, &mut e) } {
        EhrmatStatus::Ok => Ok(e),
        status => Err(status),
    }
}

fn coefficients(e: *const EhrmatEhrhart) -> Vec<String> {
    let dim = unsafe { ehrmat_ehrhart_dim(e) };
    (0..=dim)
        .map(|i| {
            let mut s = ptr::null_mut();
            assert_eq!(unsafe { ehrmat_ehrhart_coefficient(e, i, &mut s) }, EhrmatStatus::Ok);
            take(s)
        })
        .collect()
}

const K4: &str = r#"{"name":"K4","family":"bases","kind":{"graphic":{"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}}}"#;

#[test]
fn k4_round_trip() {
    let p = polytope(K4).unwrap();
    let e = compute(p, 0).unwrap();
    assert_eq!(coefficients(e), ["1", "107/30", "21/4", "49/12", "7/4", "7/20"]);
    let hstar: Vec<String> = (0..=5)
        .map(|i| {
            let mut s = ptr::null_mut();
            assert_eq!(unsafe { ehrmat_ehrhart_hstar(e, i, &mut s) }, EhrmatStatus::Ok);
            take(s)
        })
        .collect();
    assert_eq!(hstar, ["1", "10", "20", "10", "1", "0"]);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ehrmat_ehrhart_normalized_volume(e, &mut s) }, EhrmatStatus::Ok);
    assert_eq!(take(s), "42");
    assert_eq!(unsafe { ehrmat_ehrhart_count(e, 2, &mut s) }, EhrmatStatus::Ok);
    assert_eq!(take(s), "101");
    assert_eq!(unsafe { ehrmat_ehrhart_hstar_unimodal(e) }, 1);
    unsafe {
        ehrmat_ehrhart_free(e);
        ehrmat_polytope_free(p);
    }
}

#[test]
fn uniform_constructor_matches_document() {
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { ehrmat_polytope_uniform(5, 2, EhrmatFamily::Polymatroid, &mut p) },
        EhrmatStatus::Ok
    );
    let via_table = compute(p, 0).unwrap();
    let q = polytope(r#"{"name":"u","family":"polymatroid","kind":{"uniform":{"n":5,"r":2}}}"#).unwrap();
    let via_doc = compute(q, 0).unwrap();
    assert_eq!(coefficients(via_table), coefficients(via_doc));
    unsafe {
        ehrmat_ehrhart_free(via_table);
        ehrmat_ehrhart_free(via_doc);
        ehrmat_polytope_free(p);
        ehrmat_polytope_free(q);
    }
    assert_eq!(
        unsafe { ehrmat_polytope_uniform(3, 4, EhrmatFamily::Bases, &mut p) },
        EhrmatStatus::InvalidDocument
    );
}

#[test]
fn error_codes_and_messages() {
    assert_eq!(polytope("not json"), Err(EhrmatStatus::InvalidDocument));
    assert!(last_error().contains("parse"));
    let not_matroid = r#"{"name":"x","family":"bases","kind":{"bases":{"n":3,"bases":[[1,2],[3]]}}}"#;
    assert_eq!(polytope(not_matroid), Err(EhrmatStatus::InvalidDocument));

    let bad_utf8 = [0xffu8, 0];
    let mut p = ptr::null_mut();
    let status = unsafe { ehrmat_polytope_from_json(bad_utf8.as_ptr().cast(), &mut p) };
    assert_eq!(status, EhrmatStatus::InvalidUtf8);

    assert_eq!(unsafe { ehrmat_polytope_from_json(ptr::null(), &mut p) }, EhrmatStatus::NullPointer);
    assert_eq!(compute(ptr::null(), 0), Err(EhrmatStatus::NullPointer));

    let p = polytope(K4).unwrap();
    assert_eq!(last_error(), "");
    assert_eq!(compute(p, 1), Err(EhrmatStatus::BudgetExceeded));
    assert!(!last_error().is_empty());
    let e = compute(p, 0).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ehrmat_ehrhart_coefficient(e, 6, &mut s) }, EhrmatStatus::OutOfRange);
    assert_eq!(unsafe { ehrmat_ehrhart_hstar(e, 6, &mut s) }, EhrmatStatus::OutOfRange);
    assert_eq!(unsafe { ehrmat_ehrhart_count(e, -1, &mut s) }, EhrmatStatus::OutOfRange);
    assert_eq!(unsafe { ehrmat_ehrhart_coefficient(e, 0, ptr::null_mut()) }, EhrmatStatus::NullPointer);
    assert!(s.is_null());
    assert_eq!(unsafe { ehrmat_ehrhart_dim(ptr::null()) }, 0);
    assert_eq!(unsafe { ehrmat_ehrhart_hstar_unimodal(ptr::null()) }, -1);
    unsafe {
        ehrmat_ehrhart_free(e);
        ehrmat_polytope_free(p);
        ehrmat_ehrhart_free(ptr::null_mut());
        ehrmat_polytope_free(ptr::null_mut());
        ehrmat_string_free(ptr::null_mut());
    }
}

#[test]
fn version_is_package_version() {
    let v = unsafe { CStr::from_ptr(ehrmat_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(crate_dir().join("include/ehrmat.h")).unwrap();
    for name in [
        "typedef struct EhrmatPolytope EhrmatPolytope;",
        "typedef struct EhrmatEhrhart EhrmatEhrhart;",
        "EHRMAT_STATUS_BUDGET_EXCEEDED = 4",
        "ehrmat_polytope_from_json",
        "ehrmat_polytope_uniform",
        "ehrmat_compute_ehrhart",
        "ehrmat_ehrhart_coefficient",
        "ehrmat_ehrhart_hstar",
        "ehrmat_ehrhart_count",
        "ehrmat_ehrhart_normalized_volume",
        "ehrmat_ehrhart_hstar_unimodal",
        "ehrmat_string_free",
        "ehrmat_last_error",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

fn static_library() -> PathBuf {
    // target/<profile>/deps/ffi-<hash> -> target/<profile>/libehrmat_ffi.a
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("libehrmat_ffi.a")
}

#[test]
fn c_program_links_and_runs() {
    let lib = static_library();
    assert!(lib.exists(), "{} was not built", lib.display());
    let out_dir = std::env::temp_dir().join(format!("ehrmat-ffi-c-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let exe = out_dir.join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap_or_else(|e| panic!("cannot run {cc}: {e}"));
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&exe).output().unwrap();
    std::fs::remove_dir_all(&out_dir).unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
