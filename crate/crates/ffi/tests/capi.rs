use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::Path;
use std::process::Command;
use std::ptr;

use ribbonmod_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    rm_string_free(s);
    out
}

fn last_error() -> Option<String> {
    let p = rm_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn ribbon_exact_and_mod() {
    unsafe {
        let parts = [2u64, 2];
        let mut s = ptr::null_mut();
        assert_eq!(rm_ribbon(RmFamily::A, parts.as_ptr(), 2, &mut s), RmStatus::Ok);
        assert_eq!(take_string(s), "5");
        assert!(last_error().is_none());

        // 20 parts of 1: all descents, one element
        let ones = [1u64; 20];
        assert_eq!(rm_ribbon(RmFamily::A, ones.as_ptr(), 20, &mut s), RmStatus::Ok);
        assert_eq!(take_string(s), "1");

        let mut r = 0u64;
        assert_eq!(rm_ribbon_mod(RmFamily::A, parts.as_ptr(), 2, 3, &mut r), RmStatus::Ok);
        assert_eq!(r, 2);

        let signed = [0u64, 3];
        assert_eq!(rm_ribbon(RmFamily::B, signed.as_ptr(), 2, &mut s), RmStatus::Ok);
        let exact: u64 = take_string(s).parse().unwrap();
        assert_eq!(rm_ribbon_mod(RmFamily::B, signed.as_ptr(), 2, 5, &mut r), RmStatus::Ok);
        assert_eq!(r, exact % 5);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let parts = [2u64, 2];
        let mut r = 0u64;
        assert_eq!(rm_ribbon_mod(RmFamily::A, parts.as_ptr(), 2, 4, &mut r), RmStatus::NotPrime);
        assert!(last_error().unwrap().contains("not a prime"));

        let zero = [0u64, 2];
        let mut s = ptr::null_mut();
        assert_eq!(
            rm_ribbon(RmFamily::A, zero.as_ptr(), 2, &mut s),
            RmStatus::InvalidComposition
        );
        assert_eq!(rm_ribbon(RmFamily::A, ptr::null(), 2, &mut s), RmStatus::NullPointer);
        assert_eq!(
            rm_ribbon(RmFamily::A, parts.as_ptr(), 2, ptr::null_mut()),
            RmStatus::NullPointer
        );

        let mut v = ptr::null_mut();
        assert_eq!(rm_cvec(RmFamily::A, 13, 5, RmMethod::Closed, &mut v), RmStatus::NoClosedForm);
        assert!(v.is_null());

        let bad = CString::new("Z9").unwrap();
        assert_eq!(rm_coxeter_ribbon(bad.as_ptr(), 0, &mut s), RmStatus::UnknownGroup);
        let e6 = CString::new("E6").unwrap();
        assert_eq!(rm_coxeter_ribbon(e6.as_ptr(), 1 << 6, &mut s), RmStatus::InvalidArgument);

        // success clears the message
        assert_eq!(rm_ribbon_mod(RmFamily::A, parts.as_ptr(), 2, 3, &mut r), RmStatus::Ok);
        assert!(last_error().is_none());
    }
}

#[test]
fn cvec_handle() {
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(rm_cvec(RmFamily::A, 5, 3, RmMethod::Auto, &mut v), RmStatus::Ok);
        assert_eq!(rm_vector_len(v), 3);
        let counts: Vec<u64> = (0..3)
            .map(|i| {
                let mut c = 0;
                assert_eq!(rm_vector_count_u64(v, i, &mut c), RmStatus::Ok);
                c
            })
            .collect();
        assert_eq!(counts, vec![6, 8, 2]);
        let mut s = ptr::null_mut();
        assert_eq!(rm_vector_count(v, 1, &mut s), RmStatus::Ok);
        assert_eq!(take_string(s), "8");
        let mut c = 0;
        assert_eq!(rm_vector_count_u64(v, 3, &mut c), RmStatus::InvalidArgument);
        assert!(!rm_vector_method(v).is_null());
        rm_vector_free(v);

        // methods agree; the theorem route reaches sizes naive cannot
        for fam in [RmFamily::A, RmFamily::B, RmFamily::D] {
            let mut a = ptr::null_mut();
            let mut b = ptr::null_mut();
            assert_eq!(rm_cvec(fam, 12, 5, RmMethod::Naive, &mut a), RmStatus::Ok);
            assert_eq!(rm_cvec(fam, 12, 5, RmMethod::Theorem, &mut b), RmStatus::Ok);
            for i in 0..5 {
                let (mut x, mut y) = (ptr::null_mut(), ptr::null_mut());
                rm_vector_count(a, i, &mut x);
                rm_vector_count(b, i, &mut y);
                assert_eq!(take_string(x), take_string(y));
            }
            rm_vector_free(a);
            rm_vector_free(b);
        }

        assert_eq!(rm_cvec(RmFamily::A, 686, 7, RmMethod::Theorem, &mut v), RmStatus::Ok);
        assert_eq!(rm_vector_count_u64(v, 1, &mut c), RmStatus::Capacity);
        rm_vector_free(v);

        assert_eq!(rm_vector_len(ptr::null()), 0);
        assert!(rm_vector_method(ptr::null()).is_null());
        rm_vector_free(ptr::null_mut());
        rm_string_free(ptr::null_mut());
    }
}

#[test]
fn coxeter_and_macdonald() {
    unsafe {
        let h3 = CString::new("H3").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(rm_coxeter_ribbon(h3.as_ptr(), 0, &mut s), RmStatus::Ok);
        assert_eq!(take_string(s), "1");

        let mut hist = [0u64; 8];
        let mut len = 0usize;
        assert_eq!(
            rm_coxeter_histogram(h3.as_ptr(), 5, hist.as_mut_ptr(), hist.len(), &mut len),
            RmStatus::Ok
        );
        assert_eq!(len, 5);
        assert_eq!(hist[..5].iter().sum::<u64>(), 8);

        // capacity query
        assert_eq!(rm_coxeter_histogram(h3.as_ptr(), 7, ptr::null_mut(), 0, &mut len), RmStatus::Ok);
        assert_eq!(len, 7);

        assert_eq!(rm_macdonald(6, 2, &mut s), RmStatus::Ok);
        assert_eq!(take_string(s), "8");
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(rm_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/ribbonmod.h");
    assert!(header.exists());
    let src = std::env::temp_dir().join(format!("ribbonmod_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        format!("#include \"{}\"\nint main(void) {{ return RM_STATUS_OK; }}\n", header.display()),
    )
    .unwrap();
    let status = match Command::new("cc").args(["-std=c99", "-Wall", "-fsyntax-only"]).arg(&src).status() {
        Ok(s) => s,
        Err(_) => {
            eprintln!("no C compiler found; skipping");
            return;
        }
    };
    let _ = std::fs::remove_file(&src);
    assert!(status.success());
}
