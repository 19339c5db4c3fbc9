//! Helpers for driving the `rootconf` binary from integration tests.

#![allow(dead_code)]

use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct BinOutput {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

/// Runs the binary with `stdin` as input. With `full_stdout`, stdout is
/// `/dev/full` so every write fails.
pub fn run_bin(args: &[&str], stdin: &str, full_stdout: bool) -> BinOutput {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rootconf"));
    cmd.args(args).stdin(Stdio::piped()).stderr(Stdio::piped());
    if full_stdout {
        let dev_full: File = OpenOptions::new().write(true).open("/dev/full").expect("/dev/full");
        cmd.stdout(dev_full);
    } else {
        cmd.stdout(Stdio::piped());
    }
    let mut child = cmd.spawn().expect("spawn rootconf");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    let out = child.wait_with_output().expect("wait rootconf");
    BinOutput {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: out.stderr,
    }
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
    pub code: i32,
}

pub enum GoldenOutcome {
    Ok,
    Fail(String),
}

impl GoldenCase {
    fn stdin_text(&self) -> String {
        self.stdin
            .map(|f| fs::read_to_string(golden_dir().join(f)).expect("golden stdin"))
            .unwrap_or_default()
    }

    /// Runs twice and compares both stdouts to the golden file. Setting
    /// `UPDATE_GOLDEN=1` rewrites the file instead.
    pub fn check(&self) -> GoldenOutcome {
        let input = self.stdin_text();
        let first = run_bin(self.args, &input, false);
        let second = run_bin(self.args, &input, false);
        if first.code != self.code {
            return GoldenOutcome::Fail(format!(
                "exit {} != {}; stderr: {}",
                first.code,
                self.code,
                String::from_utf8_lossy(&first.stderr)
            ));
        }
        if first.stdout != second.stdout || first.stderr != second.stderr {
            return GoldenOutcome::Fail("output differs between runs".into());
        }
        let path = golden_dir().join(format!("{}.out", self.name));
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            fs::write(&path, &first.stdout).expect("write golden");
            return GoldenOutcome::Ok;
        }
        match fs::read(&path) {
            Ok(want) if want == first.stdout => GoldenOutcome::Ok,
            Ok(_) => GoldenOutcome::Fail(format!(
                "stdout differs from {}:\n{}",
                path.display(),
                String::from_utf8_lossy(&first.stdout)
            )),
            Err(e) => GoldenOutcome::Fail(format!("{}: {e}", path.display())),
        }
    }
}

pub fn golden_cases() -> Vec<GoldenCase> {
    vec![
        GoldenCase {
            name: "classify_cubic",
            args: &["classify", "--cubic", "-6", "11", "-6"],
            stdin: None,
            code: 0,
        },
        GoldenCase {
            name: "classify_cubic_double_json",
            args: &["classify", "--json", "--cubic", "-5", "7", "-3"],
            stdin: None,
            code: 0,
        },
        GoldenCase {
            name: "classify_quartic_cross_check",
            args: &["classify", "--cross-check", "--quartic", "-7", "17", "-17", "6"],
            stdin: None,
            code: 0,
        },
        GoldenCase {
            name: "classify_quartic_triple_json",
            args: &["classify", "--json", "--quartic", "-1", "0", "0", "0"],
            stdin: None,
            code: 0,
        },
        GoldenCase {
            name: "classify_quartic_double_pair",
            args: &["classify", "--quartic", "0", "2", "0", "1"],
            stdin: None,
            code: 0,
        },
        GoldenCase {
            name: "batch_text",
            args: &["batch"],
            stdin: Some("batch.in"),
            code: 2,
        },
        GoldenCase {
            name: "batch_json_cross_check",
            args: &["batch", "--json", "--cross-check"],
            stdin: Some("batch.in"),
            code: 2,
        },
        GoldenCase {
            name: "sample_cubic",
            args: &["sample", "--cubic", "--box", "p=-2:2:3", "--box", "q=-2:2:3", "--box", "r=-1:1:3"],
            stdin: None,
            code: 0,
        },
        GoldenCase {
            name: "sample_quartic",
            args: &["sample", "--quartic", "--box", "q=-2:2:5", "--box", "s=0:1/4:2"],
            stdin: None,
            code: 0,
        },
        GoldenCase {
            name: "verify_constructed",
            args: &["verify", "constructed", "5", "--seed", "42"],
            stdin: None,
            code: 0,
        },
        GoldenCase {
            name: "verify_random",
            args: &["verify", "random", "40", "--seed", "1"],
            stdin: None,
            code: 0,
        },
    ]
}
