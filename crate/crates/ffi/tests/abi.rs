use std::ffi::{c_char, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use suborbit_lab_ffi::*;

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 256];
    let n = unsafe { sl_last_error_message(buf.as_mut_ptr(), buf.len()) };
    let bytes: Vec<u8> = buf[..n.min(255)].iter().map(|&c| c as u8).collect();
    String::from_utf8(bytes).unwrap()
}

fn group_from(expr: &str) -> *mut SlPermGroup {
    let src = CString::new(expr).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sl_perm_group_from_expression(src.as_ptr(), &mut g) }, SlStatus::Ok);
    g
}

#[test]
fn cyclic_group_from_images() {
    let images = [1u32, 2, 3, 0];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(sl_perm_group_new(4, images.as_ptr(), 1, &mut g), SlStatus::Ok);
        let (mut order, mut degree, mut transitive) = (0u64, 0usize, false);
        assert_eq!(sl_perm_group_order(g, &mut order), SlStatus::Ok);
        assert_eq!(sl_perm_group_degree(g, &mut degree), SlStatus::Ok);
        assert_eq!(sl_perm_group_is_transitive(g, &mut transitive), SlStatus::Ok);
        assert_eq!((order, degree, transitive), (4, 4, true));

        let mut p = ptr::null_mut();
        assert_eq!(sl_suborbit_profile_new(g, 0, &mut p), SlStatus::Ok);
        let (mut a, mut b) = (0u64, 0u64);
        assert_eq!(sl_suborbit_profile_ratio(p, &mut a, &mut b), SlStatus::Ok);
        assert_eq!((a, b), (1, 1));
        let mut ones = 0usize;
        sl_suborbit_profile_part_count(p, 1, &mut ones);
        assert_eq!(ones, 4);
        sl_suborbit_profile_free(p);
        sl_perm_group_free(g);
    }
}

#[test]
fn extremal_profile_over_the_boundary() {
    let g = group_from("cosets(h12)");
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(sl_suborbit_profile_new(g, 0, &mut p), SlStatus::Ok);
        let (mut a, mut b, mut d) = (0u64, 0u64, 0usize);
        sl_suborbit_profile_ratio(p, &mut a, &mut b);
        sl_suborbit_profile_fixed_points(p, &mut d);
        assert_eq!((a, b, d), (5, 6, 8));

        let mut len = 0usize;
        assert_eq!(sl_suborbit_profile_part(p, 2, ptr::null_mut(), 0, &mut len), SlStatus::Ok);
        assert_eq!(len, 32);
        let mut points = vec![0u32; len];
        assert_eq!(sl_suborbit_profile_part(p, 2, points.as_mut_ptr(), len, &mut len), SlStatus::Ok);
        assert!(points.windows(2).all(|w| w[0] < w[1]));
        sl_suborbit_profile_free(p);
        sl_perm_group_free(g);
    }
}

#[test]
fn tables() {
    let src = CString::new("central(dihedral(8),dihedral(8),2,2)").unwrap();
    let mut t = ptr::null_mut();
    unsafe {
        assert_eq!(sl_group_table_construct(src.as_ptr(), &mut t), SlStatus::Ok);
        let (mut n, mut c, mut x) = (0usize, 0usize, 0u32);
        sl_group_table_order(t, &mut n);
        sl_group_table_c_of_r(t, &mut c);
        assert_eq!(n, 32);
        // D8 o D8 has 19 involutions, so 20 elements square to 1.
        assert_eq!(c, (32 + 20) / 2);
        assert_eq!(sl_group_table_mul(t, 0, 5, &mut x), SlStatus::Ok);
        assert_eq!(x, 5);
        assert_eq!(sl_group_table_mul(t, 32, 0, &mut x), SlStatus::OutOfRange);
        sl_group_table_free(t);

        let perm = CString::new("holomorph(5)").unwrap();
        assert_eq!(sl_group_table_construct(perm.as_ptr(), &mut t), SlStatus::WrongKind);
    }
}

#[test]
fn conjecture_arithmetic() {
    let (mut ok, mut a, mut b) = (false, 0u64, 0u64);
    unsafe {
        assert_eq!(sl_conjecture_check(5, 6, &mut ok, &mut a, &mut b), SlStatus::Ok);
        assert!(ok);
        assert_eq!((a, b), (3, 2));
        sl_conjecture_check(13, 21, &mut ok, &mut a, &mut b);
        assert!(!ok);
        assert_eq!((a, b), (21, 5));
        sl_conjecture_check(1, 3, &mut ok, &mut a, &mut b);
        assert!(ok);
        assert_eq!((a, b), (0, 0));
        assert_eq!(sl_conjecture_check(3, 2, &mut ok, &mut a, &mut b), SlStatus::InvalidArgument);
        assert_eq!(sl_conjecture_check(1, 0, &mut ok, &mut a, &mut b), SlStatus::InvalidArgument);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = [0u32, 0, 1];
        assert_eq!(sl_perm_group_new(3, bad.as_ptr(), 1, &mut g), SlStatus::InvalidPermutation);
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(sl_perm_group_new(3, ptr::null(), 1, &mut g), SlStatus::NullPointer);
        assert_eq!(sl_perm_group_new(0, ptr::null(), 0, &mut g), SlStatus::InvalidArgument);
        assert_eq!(sl_perm_group_order(ptr::null(), ptr::null_mut()), SlStatus::NullPointer);

        let intransitive = [1u32, 0, 2];
        assert_eq!(sl_perm_group_new(3, intransitive.as_ptr(), 1, &mut g), SlStatus::Ok);
        let mut p = ptr::null_mut();
        assert_eq!(sl_suborbit_profile_new(g, 0, &mut p), SlStatus::NotTransitive);
        assert!(last_error().contains("transitive"));
        sl_perm_group_free(g);

        let src = CString::new("nope(3)").unwrap();
        assert_eq!(sl_perm_group_from_expression(src.as_ptr(), &mut g), SlStatus::Expression);
        assert_eq!(sl_perm_group_from_expression(ptr::null(), &mut g), SlStatus::NullPointer);

        // Success clears the message.
        sl_perm_group_free(group_from("cyclic(3)"));
        assert_eq!(last_error(), "");

        sl_perm_group_free(ptr::null_mut());
        sl_suborbit_profile_free(ptr::null_mut());
        sl_group_table_free(ptr::null_mut());
    }
}

#[test]
fn gl42_scan() {
    let (mut passed, mut nonconforming) = (false, 0usize);
    assert_eq!(unsafe { sl_verify_gl42(&mut passed, &mut nonconforming) }, SlStatus::Ok);
    assert!(passed);
    assert_eq!(nonconforming, 2);
}

const C_SMOKE: &str = r#"
#include "suborbit_lab.h"
int probe(void) {
    uint32_t images[4] = {1, 2, 3, 0};
    SlPermGroup *g = NULL;
    SlProfile *p = NULL;
    uint64_t a = 0, b = 0;
    if (sl_perm_group_new(4, images, 1, &g) != SL_STATUS_OK) return 1;
    if (sl_suborbit_profile_new(g, 0, &p) != SL_STATUS_OK) return 2;
    sl_suborbit_profile_ratio(p, &a, &b);
    sl_suborbit_profile_free(p);
    sl_perm_group_free(g);
    return a == b ? 0 : 3;
}
"#;

#[test]
fn header_compiles_as_c() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include.join("suborbit_lab.h").exists());
    let dir = std::env::temp_dir().join(format!("suborbit_lab_ffi_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let source = dir.join("smoke.c");
    std::fs::write(&source, C_SMOKE).unwrap();
    let Ok(status) = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&source)
        .status()
    else {
        eprintln!("no C compiler; header not compiled");
        return;
    };
    assert!(status.success());
}
