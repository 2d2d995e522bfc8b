use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(crate_dir().join("include/cayley.h")).unwrap();
    for item in [
        "typedef struct CayleyTable CayleyTable;",
        "typedef struct CayleySeries CayleySeries;",
        "CAYLEY_STATUS_OK = 0",
        "CAYLEY_STATUS_ORACLE_LIMIT = 3",
        "CayleyStatus cayley_table_new(uint64_t max_n, CayleyTable **out);",
        "CayleyStatus cayley_series_coeff(const CayleySeries *series, size_t power, char **out);",
        "const char *cayley_last_error_message(void);",
    ] {
        assert!(header.contains(item), "missing: {item}");
    }
}

/// Compiles, links and runs `c/smoke.c` when a C compiler and the static
/// library are both present.
#[test]
fn c_smoke_program() {
    let Some(target) = std::env::current_exe()
        .ok()
        .and_then(|p| p.parent().and_then(Path::parent).map(Path::to_path_buf))
    else {
        return;
    };
    let lib = target.join("libcayley_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let exe = target.join("cayley_ffi_smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
