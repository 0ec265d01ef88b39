//! Exercises the C ABI from Rust through raw pointers, as a C caller would.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use renner_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    renner_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let e = renner_last_error();
    assert!(!e.is_null());
    CStr::from_ptr(e).to_str().unwrap().to_owned()
}

#[test]
fn version_matches_the_crate() {
    let v = unsafe { CStr::from_ptr(renner_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn reduce_through_a_context_handle() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(renner_context_new(RennerMonoidKind::Symplectic, 2, &mut ctx), RennerStatus::Ok);
        assert!(renner_last_error().is_null());
        let mut count = 0;
        assert_eq!(renner_context_element_count(ctx, &mut count), RennerStatus::Ok);
        assert_eq!(count, 57);

        let element = CString::new("0,3,0,0").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(renner_reduce(ctx, element.as_ptr(), &mut out), RennerStatus::Ok);
        assert_eq!(take(out), r#"{"(0)":"q^3"}"#);

        let bad = CString::new("1,0,0,4").unwrap();
        assert_eq!(renner_reduce(ctx, bad.as_ptr(), &mut out), RennerStatus::NotInMonoid);
        assert!(last_error().contains("not in the monoid"));
        let garbage = CString::new("1,x").unwrap();
        assert_eq!(renner_reduce(ctx, garbage.as_ptr(), &mut out), RennerStatus::Parse);
        let short = CString::new("1,2").unwrap();
        assert_eq!(renner_reduce(ctx, short.as_ptr(), &mut out), RennerStatus::Parse);
        renner_context_free(ctx);
    }
}

#[test]
fn table_handles_expose_labels_and_entries() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(renner_table_new(RennerMonoidKind::Rook, 2, RennerTableKind::Aq, 0, &mut t), RennerStatus::Ok);
        assert_eq!((renner_table_rows(t), renner_table_cols(t)), (4, 4));
        let mut s = ptr::null_mut();
        assert_eq!(renner_table_row_label(t, 1, &mut s), RennerStatus::Ok);
        assert_eq!(take(s), "(2)");
        assert_eq!(renner_table_col_label(t, 2, &mut s), RennerStatus::Ok);
        assert_eq!(take(s), "(1)");
        assert_eq!(renner_table_entry(t, 1, 2, &mut s), RennerStatus::Ok);
        assert_eq!(take(s), "q-1");
        assert_eq!(renner_table_entry(t, 4, 0, &mut s), RennerStatus::IndexOutOfRange);
        assert_eq!(renner_table_col_label(t, 9, &mut s), RennerStatus::IndexOutOfRange);
        assert_eq!(renner_table_to_json(t, &mut s), RennerStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(json["metadata"]["tableKind"], "Aq");
        renner_table_free(t);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(renner_context_new(RennerMonoidKind::Rook, 0, &mut ctx), RennerStatus::UnsupportedSize);
        assert_eq!(renner_context_new(RennerMonoidKind::Rook, 5, &mut ctx), RennerStatus::UnsupportedSize);
        assert!(ctx.is_null());
        assert_eq!(renner_context_new(RennerMonoidKind::Rook, 2, ptr::null_mut()), RennerStatus::NullArgument);

        let mut t = ptr::null_mut();
        let s = renner_table_new(RennerMonoidKind::Symplectic, 9, RennerTableKind::M, 0, &mut t);
        assert_eq!(s, RennerStatus::UnsupportedSize);
        assert!(last_error().contains("work bound"));
        assert!(t.is_null());
        assert_eq!(renner_table_new(RennerMonoidKind::Rook, 2, RennerTableKind::M, 1, &mut t), RennerStatus::UnsupportedSize);

        let mut out = ptr::null_mut();
        assert_eq!(renner_reduce(ptr::null(), c"1".as_ptr(), &mut out), RennerStatus::NullArgument);
        assert_eq!(renner_table_to_json(ptr::null(), &mut out), RennerStatus::NullArgument);
        assert_eq!(renner_table_rows(ptr::null()), 0);

        let invalid = [0xffu8 as c_char, 0];
        renner_context_new(RennerMonoidKind::Rook, 1, &mut ctx);
        assert_eq!(renner_reduce(ctx, invalid.as_ptr(), &mut out), RennerStatus::InvalidUtf8);
        renner_context_free(ctx);

        // freeing null is a no-op
        renner_string_free(ptr::null_mut());
        renner_table_free(ptr::null_mut());
        renner_context_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_exported_function() {
    let header = include_str!("../include/renner_ffi.h");
    let source = include_str!("../src/lib.rs");
    let exported: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 12);
    for f in exported {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct RennerTable RennerTable;"));
}
