use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use serde_json::Value;
use symx_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(symx_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn from_json(text: &str) -> Result<*mut SymxDatum, SymxStatus> {
    let text = CString::new(text).unwrap();
    let mut d = ptr::null_mut();
    match unsafe { symx_datum_from_json(text.as_ptr(), &mut d) } {
        SymxStatus::Ok => Ok(d),
        status => Err(status),
    }
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { symx_string_free(p) };
    s
}

const MP8: &str = r#"{"n":8,"orientable":false,"h":2,"handles":[1,3],"boundary":[],"cones":[]}"#;
const MM8: &str = r#"{"n":8,"orientable":false,"h":2,"handles":[1,7],"boundary":[],"cones":[]}"#;

#[test]
fn classify_and_conjugacy() {
    let mp = from_json(MP8).unwrap();
    let mm = from_json(MM8).unwrap();
    let mut mask = 0;
    assert_eq!(unsafe { symx_classify(mp, &mut mask) }, SymxStatus::Ok);
    assert_eq!(mask, 1 << SymxExtType::MP as u32);
    assert_eq!(unsafe { symx_classify(mm, &mut mask) }, SymxStatus::Ok);
    assert_eq!(mask, 1 << SymxExtType::MM as u32);

    let mut same = true;
    assert_eq!(unsafe { symx_are_conjugate(mp, mm, &mut same) }, SymxStatus::Ok);
    assert!(!same);
    assert_eq!(
        unsafe { symx_same_cyclic_group(mp, mp, &mut same) },
        SymxStatus::Ok
    );
    assert!(same);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { symx_datum_invariant_json(mp, &mut out) }, SymxStatus::Ok);
    let inv: Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(inv["n"], 8);
    unsafe {
        symx_datum_free(mp);
        symx_datum_free(mm);
    }
}

#[test]
fn status_codes() {
    assert_eq!(from_json("{").unwrap_err(), SymxStatus::ParseError);
    assert!(!last_error().is_empty());

    let mut d = ptr::null_mut();
    let status = unsafe { symx_datum_from_json(ptr::null(), &mut d) };
    assert_eq!(status, SymxStatus::NullPointer);

    let bad = from_json(r#"{"n":4,"orientable":true,"h":0,"handles":[],"boundary":[],"cones":[1]}"#).unwrap();
    let mut valid = true;
    assert_eq!(unsafe { symx_datum_validate(bad, &mut valid) }, SymxStatus::Ok);
    assert!(!valid);
    assert!(last_error().contains("relation"), "{}", last_error());
    let mut g = 0;
    assert_eq!(unsafe { symx_datum_genus(bad, &mut g) }, SymxStatus::InvalidDatum);

    let mp = from_json(MP8).unwrap();
    let mut ok = false;
    assert_eq!(
        unsafe { symx_check(mp, SymxExtType::PM, &mut ok) },
        SymxStatus::TypeMismatch
    );
    assert_eq!(
        unsafe { symx_check(mp, SymxExtType::MP, &mut ok) },
        SymxStatus::Ok
    );
    assert!(ok);
    assert!(last_error().is_empty());
    assert_eq!(
        unsafe { symx_check(mp, SymxExtType::MP, ptr::null_mut()) },
        SymxStatus::NullPointer
    );

    let mut r = 0;
    assert_eq!(
        unsafe { symx_lens_torsion_image(5, 2, &mut r) },
        SymxStatus::InvalidArgument
    );
    assert_eq!(unsafe { symx_lens_torsion_image(6, 1, &mut r) }, SymxStatus::Ok);
    assert_eq!(r, 3);
    unsafe {
        symx_datum_free(bad);
        symx_datum_free(mp);
        symx_datum_free(ptr::null_mut());
        symx_string_free(ptr::null_mut());
    }
}

#[test]
fn arrays_and_enumeration() {
    let cones = [1u64, 5];
    let mut d = ptr::null_mut();
    let status = unsafe {
        symx_datum_new(
            6,
            true,
            0,
            ptr::null(),
            0,
            ptr::null(),
            0,
            cones.as_ptr(),
            2,
            &mut d,
        )
    };
    assert_eq!(status, SymxStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { symx_verdicts_json(d, &mut out) }, SymxStatus::Ok);
    let verdicts: Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(verdicts.as_array().unwrap().len(), 2);
    unsafe { symx_datum_free(d) };

    let status =
        unsafe { symx_datum_new(6, true, 1, ptr::null(), 0, ptr::null(), 0, ptr::null(), 0, &mut d) };
    assert_eq!(status, SymxStatus::InvalidArgument);

    assert_eq!(
        unsafe { symx_enumerate_json(1, SymxExtType::MM, 0, &mut out) },
        SymxStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { symx_enumerate_json(2, SymxExtType::PM, 0, &mut out) },
        SymxStatus::Ok
    );
    let rows: Value = serde_json::from_str(&take_string(out)).unwrap();
    let want = serde_json::to_value(symx::enumerate_extendable(2, symx::ExtType::PM, None).unwrap()).unwrap();
    assert_eq!(rows, want);
}

#[test]
fn lens_queries() {
    let mut yes = false;
    assert_eq!(
        unsafe { symx_lens_homeomorphic(7, 2, 7, 3, &mut yes) },
        SymxStatus::Ok
    );
    assert!(yes);
    assert_eq!(
        unsafe { symx_lens_admits_projective_plane(2, 1, &mut yes) },
        SymxStatus::Ok
    );
    assert!(yes);
    assert_eq!(
        unsafe { symx_lens_admits_klein_bottle(6, 1, &mut yes) },
        SymxStatus::Ok
    );
    assert!(!yes);
    let mut t = SymxTristate::Unknown;
    assert_eq!(unsafe { symx_lens_admits_genus3(6, 1, &mut t) }, SymxStatus::Ok);
    assert_eq!(t, SymxTristate::Yes);
    assert_eq!(
        unsafe { symx_lens_homeomorphic(6, 2, 6, 1, &mut yes) },
        SymxStatus::InvalidArgument
    );
}

#[test]
fn c_program_links_against_header() {
    let Some(cc) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libsymx_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let exe = std::env::temp_dir().join(format!("symx-smoke-{}", std::process::id()));
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
