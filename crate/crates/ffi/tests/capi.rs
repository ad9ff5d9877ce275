use std::ffi::{c_char, CStr, CString};
use std::ptr;

use divcodes_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(dc_last_error_message()) }.to_string_lossy().into_owned()
}

fn from_text(text: &str) -> (DcStatus, *mut DcCode) {
    let text = CString::new(text).unwrap();
    let mut code = ptr::null_mut();
    let status = unsafe { dc_code_from_text(text.as_ptr(), &mut code) };
    (status, code)
}

fn construct(family: &str, r: usize, param: usize, variant: Option<&str>) -> (DcStatus, *mut DcCode) {
    let family = CString::new(family).unwrap();
    let variant = variant.map(|v| CString::new(v).unwrap());
    let mut code = ptr::null_mut();
    let status = unsafe {
        dc_construct(
            family.as_ptr(),
            r,
            param,
            variant.as_ref().map_or(ptr::null(), |v| v.as_ptr()),
            &mut code,
        )
    };
    (status, code)
}

fn key(code: *const DcCode) -> String {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dc_code_canonical_key(code, &mut out) }, DcStatus::Ok);
    let s = unsafe { CStr::from_ptr(out) }.to_string_lossy().into_owned();
    unsafe { dc_string_free(out) };
    s
}

#[test]
fn simplex_round_trip() {
    let (status, code) = from_text("7 3\n1010101\n0110011\n0001111\n");
    assert_eq!(status, DcStatus::Ok);
    unsafe {
        assert_eq!(dc_code_length(code), 7);
        assert_eq!(dc_code_dimension(code), 3);
        let mut flag = false;
        assert_eq!(dc_code_is_projective(code, &mut flag), DcStatus::Ok);
        assert!(flag);
        assert_eq!(dc_code_is_divisible(code, 4, &mut flag), DcStatus::Ok);
        assert!(flag);
        assert_eq!(dc_code_is_divisible(code, 8, &mut flag), DcStatus::Ok);
        assert!(!flag);
        let mut counts = [0u64; 8];
        assert_eq!(dc_code_weight_distribution(code, counts.as_mut_ptr(), counts.len()), DcStatus::Ok);
        assert_eq!(counts, [1, 0, 0, 0, 7, 0, 0, 0]);
        assert_eq!(dc_code_weight_distribution(code, counts.as_mut_ptr(), 7), DcStatus::BufferTooSmall);

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(dc_code_to_text(code, &mut text), DcStatus::Ok);
        let s = CStr::from_ptr(text).to_str().unwrap().to_owned();
        dc_string_free(text);
        assert!(s.starts_with("7 3\n"));
        dc_code_free(code);
    }
}

#[test]
fn construct_matches_text_input() {
    let (status, built) = construct("simplex", 2, 0, None);
    assert_eq!(status, DcStatus::Ok);
    let (_, parsed) = from_text("7 3\n0001111\n0110011\n1010101\n");
    assert_eq!(key(built), key(parsed));
    unsafe {
        dc_code_free(built);
        dc_code_free(parsed);
    }

    let (status, tw) = construct("two_weight_45", 0, 0, None);
    assert_eq!(status, DcStatus::Ok);
    unsafe {
        assert_eq!(dc_code_length(tw), 45);
        assert_eq!(dc_code_dimension(tw), 8);
        dc_code_free(tw);
    }

    let (status, ex) = construct("example19", 2, 0, Some("iii"));
    assert_eq!(status, DcStatus::Ok);
    unsafe {
        assert_eq!(dc_code_dimension(ex), 8);
        dc_code_free(ex);
    }
}

#[test]
fn errors_are_reported() {
    let (status, code) = from_text("3 1\n1x1\n");
    assert_eq!(status, DcStatus::ParseError);
    assert!(code.is_null());
    assert!(last_error().contains("line 2, column 2"));

    let (status, _) = from_text("3 2\n110\n110\n");
    assert_eq!(status, DcStatus::InvalidParameter);
    assert!(last_error().contains("rank"));

    let (status, _) = construct("three_flats", 2, 1, None);
    assert_eq!(status, DcStatus::InvalidParameter);
    let (status, _) = construct("no_such_family", 2, 0, None);
    assert_eq!(status, DcStatus::InvalidParameter);

    unsafe {
        let mut flag = false;
        assert_eq!(dc_code_is_projective(ptr::null(), &mut flag), DcStatus::NullPointer);
        assert_eq!(dc_code_length(ptr::null()), 0);
        assert_eq!(dc_code_from_text(ptr::null(), ptr::null_mut()), DcStatus::NullPointer);
        dc_code_free(ptr::null_mut());
        dc_string_free(ptr::null_mut());
        assert_eq!(CStr::from_ptr(dc_status_name(DcStatus::BudgetExceeded)).to_str().unwrap(), "budget exceeded");
    }
}

#[test]
fn length_exclusion() {
    let mut excluded = false;
    unsafe {
        assert_eq!(dc_exclude_length(12, 4, &mut excluded), DcStatus::Ok);
        assert!(excluded);
        assert_eq!(dc_exclude_length(14, 4, &mut excluded), DcStatus::Ok);
        assert!(!excluded);
        assert_eq!(dc_exclude_length(0, 4, &mut excluded), DcStatus::InvalidParameter);
    }
    assert!(last_error().contains("positive"));
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/divcodes.h");
    for name in [
        "dc_code_from_text",
        "dc_construct",
        "dc_code_free",
        "dc_code_length",
        "dc_code_dimension",
        "dc_code_is_projective",
        "dc_code_is_divisible",
        "dc_code_weight_distribution",
        "dc_code_canonical_key",
        "dc_code_to_text",
        "dc_string_free",
        "dc_exclude_length",
        "dc_last_error_message",
        "dc_status_name",
        "typedef struct DcCode DcCode",
        "DC_STATUS_BUDGET_EXCEEDED = 5",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    // skipped where no C compiler is installed
    let Ok(cc) = std::process::Command::new("cc").arg("--version").output() else {
        return;
    };
    if !cc.status.success() {
        return;
    }
    let dir = env!("CARGO_MANIFEST_DIR");
    let src = std::env::temp_dir().join(format!("divcodes-header-{}.c", std::process::id()));
    std::fs::write(&src, "#include \"divcodes.h\"\nint main(void) { DcCode *c = 0; return (int)dc_code_length(c); }\n").unwrap();
    let out = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&src)
        .output()
        .unwrap();
    std::fs::remove_file(&src).ok();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
