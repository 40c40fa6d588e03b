use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use spectop_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(spectop_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn module_handle_lifecycle() {
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(spectop_module_parse(c("Z: 2,3,5").as_ptr(), 0, &mut m), SpectopStatus::Ok);
        let mut n = 0usize;
        assert_eq!(spectop_module_order(m, &mut n), SpectopStatus::Ok);
        assert_eq!(n, 30);
        assert_eq!(spectop_module_submodule_count(m, &mut n), SpectopStatus::Ok);
        assert_eq!(n, 8);
        assert_eq!(spectop_module_spec_first_count(m, &mut n), SpectopStatus::Ok);
        assert_eq!(n, 3);
        let mut topf = false;
        assert_eq!(spectop_module_is_topf(m, &mut topf), SpectopStatus::Ok);
        assert!(topf);
        let mut s = ptr::null_mut();
        assert_eq!(spectop_module_report_json(m, 15, 0, &mut s), SpectopStatus::Ok);
        let json = CStr::from_ptr(s).to_str().unwrap().to_owned();
        spectop_string_free(s);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["flags"]["discrete"], true);
        spectop_module_free(m);
    }
}

#[test]
fn error_codes_match_the_cli() {
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(spectop_module_parse(c("Z: 1").as_ptr(), 0, &mut m), SpectopStatus::Parse);
        assert!(m.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(spectop_module_parse(c("Z: 64,64").as_ptr(), 0, &mut m), SpectopStatus::TooLarge);
        assert_eq!(spectop_module_parse(ptr::null(), 0, &mut m), SpectopStatus::NullArgument);
        let mut n = 0usize;
        assert_eq!(spectop_module_order(ptr::null(), &mut n), SpectopStatus::NullArgument);

        let mut l = ptr::null_mut();
        let chain = c(r#"{"elements":["0","x","1"],"leq":[["0","x"],["x","1"]]}"#);
        assert_eq!(spectop_lattice_from_json(chain.as_ptr(), c("1").as_ptr(), &mut l), SpectopStatus::InvalidPoints);
        assert_eq!(spectop_lattice_from_json(chain.as_ptr(), ptr::null(), &mut l), SpectopStatus::InvalidPoints);
        let vee = c(r#"{"elements":["a","b","c"],"leq":[["a","b"],["a","c"]]}"#);
        assert_eq!(spectop_lattice_from_json(vee.as_ptr(), c("a").as_ptr(), &mut l), SpectopStatus::NotALattice);
        assert_eq!(spectop_lattice_from_json(c("[").as_ptr(), c("a").as_ptr(), &mut l), SpectopStatus::Parse);
    }
}

#[test]
fn lattice_and_ring_reports() {
    let diamond = c(r#"{"lattice":{"elements":["0","a","b","c","1"],
        "leq":[["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]},"X":["a","b","c"]}"#);
    let mut l = ptr::null_mut();
    unsafe {
        assert_eq!(spectop_lattice_from_json(diamond.as_ptr(), ptr::null(), &mut l), SpectopStatus::Ok);
        let mut x_top = true;
        assert_eq!(spectop_lattice_is_x_top(l, &mut x_top), SpectopStatus::Ok);
        assert!(!x_top);
        let mut s = ptr::null_mut();
        assert_eq!(spectop_lattice_report_json(l, 15, 0, &mut s), SpectopStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v["witnesses"]["x_top"]["kind"], "variety_union");
        spectop_string_free(s);
        spectop_lattice_free(l);

        assert_eq!(spectop_ring_report_json(c("Zmod:12").as_ptr(), 15, 0, &mut s), SpectopStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v["flags"]["strongly_x_top"], true);
        spectop_string_free(s);
        spectop_module_free(ptr::null_mut());
        spectop_string_free(ptr::null_mut());
        assert_eq!(CStr::from_ptr(spectop_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/spectop.h");
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header])
        .output()
    else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn c_program_links_and_runs() {
    let deps = std::env::current_exe().unwrap();
    let target = deps.parent().unwrap().parent().unwrap();
    let lib = target.join("libspectop_ffi.a");
    if !lib.exists() {
        eprintln!("static library not built; skipping");
        return;
    }
    let dir = env!("CARGO_MANIFEST_DIR");
    let exe = target.join("spectop_ffi_smoke");
    let Ok(build) = Command::new("cc")
        .arg(format!("{dir}/tests/smoke.c"))
        .arg(format!("-I{dir}/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
    else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(build.status.success(), "{}", String::from_utf8_lossy(&build.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout), "firsts=3 topf=1 strongly=1\n");
}
