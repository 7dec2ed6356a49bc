use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use periscope_ffi::*;

fn from_g6(s: &str) -> *mut PeriGraph {
    let c = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { peri_graph_from_graph6(c.as_ptr(), &mut g) }, PeriStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = peri_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn triangle_round_trip() {
    let g = from_g6("Bw");
    unsafe {
        assert_eq!(peri_graph_vertex_count(g), 3);
        assert_eq!(peri_graph_edge_count(g), 3);
        let mut s = ptr::null_mut();
        assert_eq!(peri_graph_to_graph6(g, &mut s), PeriStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "Bw");
        peri_string_free(s);
        let mut idx = PeriIndices::default();
        assert_eq!(peri_compute_indices(g, &mut idx), PeriStatus::Ok);
        assert_eq!(idx, PeriIndices { n: 3, peri: 0, eperi: 0, espr: 6, mo: 0, mo_star: 0, nt: 0, irr: 0 });
        peri_graph_free(g);
    }
}

#[test]
fn edges_match_core() {
    let edges = [0usize, 1, 1, 2, 2, 3];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(peri_graph_from_edges(4, edges.as_ptr(), 3, &mut g), PeriStatus::Ok);
        let mut idx = PeriIndices::default();
        assert_eq!(peri_compute_indices(g, &mut idx), PeriStatus::Ok);
        let core = periscope::IndexReport::compute(&periscope::constructions::path(4).unwrap(), false).unwrap();
        assert_eq!(idx.nt, 10);
        assert_eq!(idx.peri, core.peri);
        assert_eq!(idx.espr, core.espr);
        assert_eq!(idx.irr, core.irr);
        peri_graph_free(g);
    }
}

#[test]
fn generate_and_ultra() {
    let fam = CString::new("rhombic_dodecahedron").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(peri_generate(fam.as_ptr(), ptr::null(), 0, &mut g), PeriStatus::Ok);
        assert_eq!(peri_graph_vertex_count(g), 14);
        let mut ultra = false;
        assert_eq!(peri_is_ultra_nt_balanced(g, &mut ultra), PeriStatus::Ok);
        assert!(ultra);
        peri_graph_free(g);

        let fam = CString::new("balanced_spider").unwrap();
        let params = [3usize, 1];
        assert_eq!(peri_generate(fam.as_ptr(), params.as_ptr(), 2, &mut g), PeriStatus::Ok);
        let mut idx = PeriIndices::default();
        assert_eq!(peri_compute_indices(g, &mut idx), PeriStatus::Ok);
        assert_eq!(idx.nt, 12);
        let mut ultra = true;
        assert_eq!(peri_is_ultra_nt_balanced(g, &mut ultra), PeriStatus::Ok);
        assert!(!ultra);
        peri_graph_free(g);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(peri_graph_from_graph6(ptr::null(), &mut g), PeriStatus::NullPointer);
        assert!(g.is_null());
        let bad = CString::new("B").unwrap();
        assert_eq!(peri_graph_from_graph6(bad.as_ptr(), &mut g), PeriStatus::InvalidGraph6);
        assert!(last_error().contains("graph6"));

        let self_loop = [1usize, 1];
        assert_eq!(peri_graph_from_edges(3, self_loop.as_ptr(), 1, &mut g), PeriStatus::InvalidGraph);
        let out_of_range = [0usize, 5];
        assert_eq!(peri_graph_from_edges(3, out_of_range.as_ptr(), 1, &mut g), PeriStatus::InvalidGraph);
        assert_eq!(peri_graph_from_edges(3, ptr::null(), 1, &mut g), PeriStatus::NullPointer);

        let fam = CString::new("no_such_family").unwrap();
        assert_eq!(peri_generate(fam.as_ptr(), ptr::null(), 0, &mut g), PeriStatus::InvalidArgument);
        let fam = CString::new("path").unwrap();
        assert_eq!(peri_generate(fam.as_ptr(), ptr::null(), 0, &mut g), PeriStatus::InvalidArgument);

        let disconnected = [0usize, 1];
        assert_eq!(peri_graph_from_edges(3, disconnected.as_ptr(), 1, &mut g), PeriStatus::Ok);
        let mut idx = PeriIndices::default();
        assert_eq!(peri_compute_indices(g, &mut idx), PeriStatus::Disconnected);
        assert_eq!(peri_compute_indices(g, ptr::null_mut()), PeriStatus::NullPointer);
        peri_graph_free(g);

        assert_eq!(peri_compute_indices(ptr::null(), &mut idx), PeriStatus::NullPointer);
        assert_eq!(peri_graph_vertex_count(ptr::null()), 0);
        peri_graph_free(ptr::null_mut());
        peri_string_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_thread_local() {
    let bad = CString::new("~").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { peri_graph_from_graph6(bad.as_ptr(), &mut g) }, PeriStatus::InvalidGraph6);
    std::thread::spawn(|| assert!(peri_last_error_message().is_null()))
        .join()
        .unwrap();
    assert!(!last_error().is_empty());
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/periscope.h")
}

#[test]
fn header_declares_api() {
    let h = std::fs::read_to_string(header()).unwrap();
    for name in [
        "typedef struct PeriGraph PeriGraph;",
        "PERI_STATUS_OK = 0",
        "PERI_STATUS_DISCONNECTED",
        "peri_graph_from_graph6",
        "peri_graph_from_edges",
        "peri_generate",
        "peri_graph_free",
        "peri_graph_vertex_count",
        "peri_graph_edge_count",
        "peri_graph_to_graph6",
        "peri_string_free",
        "peri_compute_indices",
        "peri_is_ultra_nt_balanced",
        "peri_last_error_message",
    ] {
        assert!(h.contains(name), "missing {name}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "periscope.h"

int main(void) {
    PeriGraph *g = NULL;
    if (peri_graph_from_graph6("Bw", &g) != PERI_STATUS_OK) return 1;
    PeriIndices idx;
    if (peri_compute_indices(g, &idx) != PERI_STATUS_OK) return 2;
    peri_graph_free(g);
    if (peri_graph_from_graph6("B", &g) != PERI_STATUS_INVALID_GRAPH6) return 3;
    printf("%llu %llu\n", (unsigned long long)idx.n, (unsigned long long)idx.espr);
    return 0;
}
"#;

#[test]
fn c_program_links_against_static_library() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("libperiscope_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let bin = dir.path().join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3 6\n");
}
