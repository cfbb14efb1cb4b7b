//! Compiles and runs a small C program against include/gkit.h and the
//! static library, proving the header and ABI actually work from C.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "gkit.h"

int main(void) {
    GkitExpansion *e = NULL;
    if (gkit_expand("24", 3, &e) != GKIT_STATUS_OK) return 1;

    char *text = NULL;
    if (gkit_expansion_to_string(e, &text) != GKIT_STATUS_OK) return 2;
    if (strcmp(text, "C(6,3)+C(3,2)+C(1,1)") != 0) return 3;
    gkit_string_free(text);

    char *shifted = NULL;
    if (gkit_expansion_shift(e, -1, 0, &shifted) != GKIT_STATUS_OK) return 4;
    if (strcmp(shifted, "11") != 0) return 5;
    gkit_string_free(shifted);
    gkit_expansion_free(e);

    GkitVerdict verdict;
    if (gkit_gors_test("24", "19", &verdict, NULL) != GKIT_STATUS_OK) return 6;
    if (verdict != GKIT_VERDICT_ELIMINATED) return 7;

    GkitCandidate *c = NULL;
    if (gkit_perazzo_hilbert_function(3, 4, 0, &c) != GKIT_STATUS_OK) return 8;
    bool flag = false;
    if (gkit_candidate_is_gorenstein_shape(c, &flag) != GKIT_STATUS_OK || !flag) return 9;
    gkit_candidate_free(c);

    GkitExpansion *bad = NULL;
    if (gkit_expand("24", 0, &bad) != GKIT_STATUS_INVALID_ARGUMENT) return 10;
    if (gkit_last_error() == NULL) return 11;

    printf("c-smoke ok\n");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let cc_available = Command::new("cc")
        .arg("--version")
        .output()
        .map(|o| o.status.success())
        .unwrap_or(false);
    if !cc_available {
        eprintln!("skipping: no C compiler on PATH");
        return;
    }

    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");
    assert!(include_dir.join("gkit.h").exists(), "header not generated");

    // The static library lands next to the test binary's deps directory.
    let mut lib_dir = std::env::current_exe().unwrap();
    lib_dir.pop(); // test binary name
    lib_dir.pop(); // deps/
    let lib = lib_dir.join("libgkit_capi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());

    let work = std::env::temp_dir().join("gkit-capi-c-smoke");
    std::fs::create_dir_all(&work).unwrap();
    let source = work.join("smoke.c");
    let binary = work.join("smoke");
    std::fs::write(&source, C_PROGRAM).unwrap();

    let compile = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include_dir)
        .arg(lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc runs");
    assert!(
        compile.status.success(),
        "compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("program runs");
    assert!(
        run.status.success(),
        "smoke program exited {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stdout)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "c-smoke ok");
}
