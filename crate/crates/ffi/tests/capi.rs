use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use fillcurve_ffi::*;

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    fc_string_free(s);
    owned
}

#[test]
fn q2_curve_round_trip() {
    unsafe {
        let mut poly = ptr::null_mut();
        assert_eq!(fc_construct(2, false, &mut poly), FcStatus::Ok);
        let (mut a, mut b) = (0, 0);
        assert_eq!(fc_poly_bidegree(poly, &mut a, &mut b), FcStatus::Ok);
        assert_eq!((a, b), (4, 3));

        let mut filling = false;
        assert_eq!(fc_is_filling(poly, &mut filling), FcStatus::Ok);
        assert!(filling);
        let mut n = 0;
        assert_eq!(fc_count_points(poly, 1, &mut n), FcStatus::Ok);
        assert_eq!(n, 9);
        let mut verdict = FcVerdict::Inconclusive;
        assert_eq!(fc_certify_smooth(poly, &mut verdict), FcStatus::Ok);
        assert_eq!(verdict, FcVerdict::Smooth);
        let mut irr = false;
        assert_eq!(fc_is_abs_irreducible(poly, &mut irr), FcStatus::Ok);
        assert!(irr);
        let mut bound = 0;
        assert_eq!(fc_point_bound(2, 3, 7, &mut bound), FcStatus::Ok);
        assert_eq!(bound, n);

        // Reparse the printed text through a separately created field.
        let text = take_string(fc_poly_to_string(poly));
        let mut field = ptr::null_mut();
        assert_eq!(fc_field_new(2, &mut field), FcStatus::Ok);
        assert_eq!(fc_field_order(field), 2);
        let src = CString::new(text.clone()).unwrap();
        let mut again = ptr::null_mut();
        assert_eq!(fc_poly_parse(field, src.as_ptr(), &mut again), FcStatus::Ok);
        assert_eq!(take_string(fc_poly_to_string(again)), text);

        let (mut f, mut g) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(fc_decompose(poly, &mut f, &mut g), FcStatus::Ok);
        assert_eq!(fc_poly_bidegree(f, &mut a, &mut b), FcStatus::Ok);
        assert_eq!((a, b), (1, 3));
        assert_eq!(fc_poly_bidegree(g, &mut a, &mut b), FcStatus::Ok);
        assert_eq!((a, b), (4, 0));

        for p in [poly, again, f, g] {
            fc_poly_free(p);
        }
        fc_field_free(field);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut field = ptr::null_mut();
        assert_eq!(fc_field_new(6, &mut field), FcStatus::InvalidArgument);
        assert!(field.is_null());
        assert!(take_string(fc_last_error()).contains("prime power"));

        let spec = CString::new("p=3,e=2,mod=[1,0,1]").unwrap();
        assert_eq!(fc_field_parse(spec.as_ptr(), &mut field), FcStatus::Ok);
        assert_eq!(fc_field_order(field), 9);

        let bad = CString::new("X0 +").unwrap();
        let mut poly = ptr::null_mut();
        assert_eq!(
            fc_poly_parse(field, bad.as_ptr(), &mut poly),
            FcStatus::Parse
        );
        assert!(take_string(fc_last_error()).contains("syntax"));

        let plain = CString::new("X0*Y0").unwrap();
        assert_eq!(
            fc_poly_parse(field, plain.as_ptr(), &mut poly),
            FcStatus::Ok
        );
        let (mut f, mut g) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(fc_decompose(poly, &mut f, &mut g), FcStatus::NotFilling);

        assert_eq!(
            fc_poly_parse(ptr::null(), plain.as_ptr(), &mut poly),
            FcStatus::NullPointer
        );
        assert_eq!(fc_is_filling(poly, ptr::null_mut()), FcStatus::NullPointer);
        let mut out = 0;
        assert_eq!(fc_point_bound(2, 1, 3, &mut out), FcStatus::InvalidArgument);

        fc_poly_free(poly);
        fc_field_free(field);
        fc_poly_free(ptr::null_mut());
        fc_field_free(ptr::null_mut());
        fc_string_free(ptr::null_mut());
        assert!(fc_poly_to_string(ptr::null()).is_null());
    }
}

#[test]
fn census_document() {
    unsafe {
        let mut field = ptr::null_mut();
        assert_eq!(fc_field_new(2, &mut field), FcStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(fc_census_json(field, 3, 3, 2, &mut json), FcStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["candidates_scanned"], 127);
        assert_eq!(doc["n_irreducible"], 0);
        fc_field_free(field);
    }
}

/// The generated header must compile as C and declare every entry point.
#[test]
fn header_compiles() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/fillcurve.h")).unwrap();
    for name in [
        "fc_construct",
        "fc_census_json",
        "fc_last_error",
        "fc_string_free",
        "FC_STATUS_NOT_FILLING",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping compile check");
        return;
    };
    assert!(cc.status.success());
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"fillcurve.h\"\n\
         int main(void) {\n\
           FcPoly *p = NULL;\n\
           if (fc_construct(2, false, &p) != FC_STATUS_OK) return 1;\n\
           uint64_t n = 0;\n\
           fc_count_points(p, 1, &n);\n\
           fc_poly_free(p);\n\
           return n == 9 ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}
