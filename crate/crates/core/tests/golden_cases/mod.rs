//! Golden-file cases for the command-line binary.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub args: &'static [&'static str],
    pub exit: i32,
    /// Expected stdout file under `tests/golden`, if checked.
    pub stdout: Option<&'static str>,
    /// Expected stderr file under `tests/golden`, if checked.
    pub stderr: Option<&'static str>,
}

const fn ok(args: &'static [&'static str], stdout: &'static str) -> Case {
    Case {
        args,
        exit: 0,
        stdout: Some(stdout),
        stderr: None,
    }
}

pub const CASES: &[Case] = &[
    ok(
        &["map", "6,3", "--d", "2", "--pi", "0,1"],
        "map_6_3_dual.txt",
    ),
    ok(
        &["unmap", "5,4", "--d", "2", "--pi", "0,1"],
        "unmap_5_4_dual.txt",
    ),
    ok(&["map", "8,1", "--dual"], "map_8_1_dual.txt"),
    ok(&["unmap", "6,3", "--dual"], "unmap_6_3_dual.txt"),
    ok(
        &["map", "5,3,1", "--d", "2", "--pi", "0,1"],
        "map_5_3_1_dual.txt",
    ),
    ok(
        &["unmap", "5,3,1", "--d", "2", "--pi", "0,1"],
        "unmap_5_3_1_dual.txt",
    ),
    ok(
        &["map", "-", "--d", "3", "--pi", "2,0,1"],
        "map_empty_d3.txt",
    ),
    ok(
        &["unmap", "-", "--d", "2", "--pi", "1,0"],
        "unmap_empty_bressoud.txt",
    ),
    ok(
        &["map", "8,1", "--dual", "--trace"],
        "map_8_1_dual_trace.txt",
    ),
    ok(
        &["unmap", "5,4", "--dual", "--trace"],
        "unmap_5_4_dual_trace.txt",
    ),
    ok(&["map", "6,3", "--dual", "--json"], "map_6_3_dual_json.txt"),
    ok(&["enumerate", "4"], "enumerate_4.txt"),
    ok(&["enumerate", "4", "--count"], "enumerate_4_count.txt"),
    ok(
        &["enumerate", "4", "--filter", "even-part-count", "--count"],
        "enumerate_4_even_part_count.txt",
    ),
    ok(
        &["enumerate", "9", "--filter", "d-distinct", "--d", "2"],
        "enumerate_9_d_distinct_2.txt",
    ),
    ok(&["render", "5,4,1"], "render_5_4_1.txt"),
    ok(&["render", "-"], "render_empty.txt"),
    ok(&["render", "4,4,2,1,1"], "render_4_4_2_1_1.txt"),
    Case {
        args: &["map", "5,4,1", "--d", "2", "--pi", "0,1"],
        exit: 3,
        stdout: None,
        stderr: Some("map_5_4_1_stderr.txt"),
    },
    Case {
        args: &["unmap", "2,1", "--d", "2", "--pi", "0,1"],
        exit: 4,
        stdout: None,
        stderr: Some("unmap_2_1_stderr.txt"),
    },
    Case {
        args: &["map", "1,2", "--d", "2"],
        exit: 2,
        stdout: None,
        stderr: None,
    },
    Case {
        args: &["render", "x"],
        exit: 2,
        stdout: None,
        stderr: None,
    },
    Case {
        args: &["enumerate", "4", "--filter", "bogus"],
        exit: 2,
        stdout: None,
        stderr: None,
    },
    Case {
        args: &["unmap", "4,4", "--dual"],
        exit: 3,
        stdout: None,
        stderr: None,
    },
];

pub fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_binary(args: &[&str]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_bressoud"))
        .args(args)
        .output()
        .expect("binary runs");
    Outcome {
        exit: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs one case, returning a description of the first mismatch.
pub fn check(case: &Case) -> Result<(), String> {
    let got = run_binary(case.args);
    if got.exit != case.exit {
        return Err(format!(
            "{:?}: exit {} (want {}), stderr {:?}",
            case.args, got.exit, case.exit, got.stderr
        ));
    }
    if let Some(file) = case.stdout {
        let want = golden(file);
        if got.stdout != want {
            return Err(format!(
                "{:?}: stdout {:?}, want {:?}",
                case.args, got.stdout, want
            ));
        }
    }
    if let Some(file) = case.stderr {
        let want = golden(file);
        if got.stderr != want {
            return Err(format!(
                "{:?}: stderr {:?}, want {:?}",
                case.args, got.stderr, want
            ));
        }
    }
    Ok(())
}
