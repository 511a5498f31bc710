use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use gonograph_ffi::*;

fn strip(n: usize) -> *mut GonoGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { gono_graph_strip(n, &mut g) }, GonoStatus::Ok);
    g
}

fn last_error() -> String {
    let p = gono_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn counts_on_strip() {
    let g = strip(8);
    unsafe {
        assert_eq!(gono_graph_vertex_count(g), 9);
        let mut x = 0i64;
        assert_eq!(gono_graph_genus(g, &mut x), GonoStatus::Ok);
        assert_eq!(x, 7);
        assert_eq!(gono_spanning_tree_count(g, &mut x), GonoStatus::Ok);
        assert_eq!(x, 987);
        assert_eq!(gono_two_forest_count(g, 1, 3, &mut x), GonoStatus::Ok);
        assert_eq!(x, 466);
        gono_graph_free(g);
    }
}

#[test]
fn rank_and_gonality() {
    let g = strip(8);
    unsafe {
        let d = [3i64, 2, 0, 0, 0, 0, 0, 0, 0];
        let mut r = 0i64;
        assert_eq!(gono_rank(g, d.as_ptr(), d.len(), &mut r), GonoStatus::Ok);
        assert_eq!(r, 1);
        assert_eq!(
            gono_rank(g, d.as_ptr(), 3, &mut r),
            GonoStatus::InvalidArgument
        );

        let mut degree = 0i64;
        let mut witness = [0i64; 9];
        assert_eq!(
            gono_gonality(g, 1, &mut degree, witness.as_mut_ptr()),
            GonoStatus::Ok
        );
        assert_eq!(degree, 5);
        assert_eq!(witness.iter().sum::<i64>(), 5);
        assert_eq!(gono_rank(g, witness.as_ptr(), 9, &mut r), GonoStatus::Ok);
        assert!(r >= 1);
        gono_graph_free(g);
    }
}

#[test]
fn cyclic_model_and_sumsets() {
    let g = strip(3);
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(gono_set_from_graph(g, &mut a), GonoStatus::Ok);
        assert_eq!(gono_set_modulus(a), 8);
        let mut buf = [0u64; 8];
        let mut n = 0usize;
        assert_eq!(
            gono_set_elements(a, buf.as_mut_ptr(), buf.len(), &mut n),
            GonoStatus::Ok
        );
        assert_eq!(&buf[..n], &[0, 3, 4, 5]);
        assert_eq!(
            gono_set_elements(a, buf.as_mut_ptr(), 2, &mut n),
            GonoStatus::BufferTooSmall
        );
        assert_eq!(n, 4);

        let mut two = ptr::null_mut();
        assert_eq!(gono_set_sumset(a, 2, &mut two), GonoStatus::Ok);
        assert_eq!(gono_set_len(two), 8);

        let (mut m, mut found) = (0u32, false);
        assert_eq!(
            gono_set_covering_number(a, &mut m, &mut found),
            GonoStatus::Ok
        );
        assert!(found);
        assert_eq!(m, 2);

        let (mut d, mut w) = (0u32, 0u64);
        assert_eq!(gono_set_gonality(a, 1, &mut d, &mut w), GonoStatus::Ok);
        assert_eq!(d, 2);

        gono_set_free(two);
        gono_set_free(a);
        gono_graph_free(g);
    }
}

#[test]
fn explicit_sets_and_errors() {
    unsafe {
        let xs = [0u64, 1, 5];
        let mut s = ptr::null_mut();
        assert_eq!(
            gono_set_new(0, xs.as_ptr(), 3, &mut s),
            GonoStatus::InvalidArgument
        );
        assert!(s.is_null());
        assert_eq!(gono_set_new(7, xs.as_ptr(), 3, &mut s), GonoStatus::Ok);
        let (mut d, mut w) = (0u32, 0u64);
        assert_eq!(
            gono_set_gonality(s, 0, &mut d, &mut w),
            GonoStatus::InvalidArgument
        );
        gono_set_free(s);

        let mut x = 0i64;
        assert_eq!(
            gono_spanning_tree_count(ptr::null(), &mut x),
            GonoStatus::NullPointer
        );
        assert!(last_error().contains("null"));
        assert_eq!(gono_fib(20, &mut x), GonoStatus::Ok);
        assert_eq!(x, 6765);
        assert_eq!(gono_fib(100, &mut x), GonoStatus::Overflow);

        // K4 has a non-cyclic Jacobian
        let mut k4 = ptr::null_mut();
        let edges: Vec<u32> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            .iter()
            .flat_map(|&(u, v)| [u, v, 1])
            .collect();
        assert_eq!(
            gono_graph_from_edges(4, edges.as_ptr(), 6, &mut k4),
            GonoStatus::Ok
        );
        let mut a = ptr::null_mut();
        assert_eq!(gono_set_from_graph(k4, &mut a), GonoStatus::NonCyclicModel);
        gono_graph_free(k4);

        let mut g = ptr::null_mut();
        let bad = CString::new("{\"vertices\": 3").unwrap();
        assert_eq!(
            gono_graph_from_json(bad.as_ptr(), &mut g),
            GonoStatus::Parse
        );
        let split = CString::new("{\"vertices\":3,\"edges\":[[0,1,1]]}").unwrap();
        assert_eq!(gono_graph_from_json(split.as_ptr(), &mut g), GonoStatus::Ok);
        assert_eq!(
            gono_spanning_tree_count(g, &mut x),
            GonoStatus::Disconnected
        );
        gono_graph_free(g);
    }
}

#[test]
fn json_round_trip() {
    let g = strip(4);
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(gono_graph_to_json(g, &mut json), GonoStatus::Ok);
        let mut h = ptr::null_mut();
        assert_eq!(gono_graph_from_json(json, &mut h), GonoStatus::Ok);
        let (mut a, mut b) = (0i64, 0i64);
        gono_spanning_tree_count(g, &mut a);
        gono_spanning_tree_count(h, &mut b);
        assert_eq!((a, b), (21, 21));
        gono_string_free(json);
        gono_graph_free(h);
        gono_graph_free(g);
    }
}

#[test]
fn header_declares_every_export() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/gonograph.h")).unwrap();
    let source = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let mut count = 0;
    for line in source.lines() {
        if let Some(rest) = line.split("extern \"C\" fn ").nth(1) {
            let name = rest.split('(').next().unwrap();
            assert!(
                header.contains(&format!("{name}(")),
                "{name} missing from header"
            );
            count += 1;
        }
    }
    assert!(count >= 20);
}

/// Compiles and runs a C program against the header and static library,
/// when a C compiler is available.
#[test]
fn c_program_links_against_staticlib() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    // test binaries live in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libgonograph_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
