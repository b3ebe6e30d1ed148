//! Golden cases: `NAME.args` holds one argument per line, `NAME.stdout` the
//! expected output and `NAME.status` the exit code. Set `BLESS=1` to rewrite
//! the expectations from the current binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn run(args: &[String]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coherence"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs")
}

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    dir: PathBuf,
}

impl Case {
    fn expected(&self, ext: &str) -> Option<String> {
        fs::read_to_string(self.dir.join(format!("{}.{ext}", self.name))).ok()
    }

    /// Runs the case; `Err` describes the first mismatch.
    pub fn check(&self) -> Result<(), String> {
        let out = run(&self.args);
        let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
        let status = out
            .status
            .code()
            .map_or("signal".to_string(), |c| c.to_string());
        if std::env::var_os("BLESS").is_some() {
            fs::write(self.dir.join(format!("{}.stdout", self.name)), &stdout).unwrap();
            fs::write(
                self.dir.join(format!("{}.status", self.name)),
                format!("{status}\n"),
            )
            .unwrap();
        }
        let want_out = self.expected("stdout").ok_or("missing .stdout")?;
        let want_status = self.expected("status").ok_or("missing .status")?;
        if stdout != want_out {
            return Err(format!(
                "stdout differs:\n--- want\n{want_out}--- got\n{stdout}"
            ));
        }
        if status != want_status.trim() {
            return Err(format!("exit status {status}, want {}", want_status.trim()));
        }
        Ok(())
    }
}

pub fn cases() -> Vec<Case> {
    let dir = crate_dir().join("tests/golden");
    let mut names: Vec<String> = fs::read_dir(&dir)
        .expect("golden directory")
        .filter_map(|e| {
            let p = e.ok()?.path();
            (p.extension()? == "args").then(|| p.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let text = fs::read_to_string(dir.join(format!("{name}.args"))).unwrap();
            Case {
                args: text.lines().map(String::from).collect(),
                name,
                dir: dir.clone(),
            }
        })
        .collect()
}

/// One malformed invocation per line, arguments separated by tabs.
pub fn malformed() -> Vec<Vec<String>> {
    let text = fs::read_to_string(crate_dir().join("tests/malformed.txt")).unwrap();
    text.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').map(String::from).collect())
        .collect()
}

/// `Err` if the invocation does not fail cleanly with exit code 2.
pub fn check_malformed(args: &[String]) -> Result<(), String> {
    let out = run(args);
    let stderr = String::from_utf8_lossy(&out.stderr);
    if out.status.code() != Some(2) {
        return Err(format!("{args:?}: exit {:?}", out.status.code()));
    }
    if stderr.contains("panicked") || stderr.trim().is_empty() {
        return Err(format!("{args:?}: stderr {stderr:?}"));
    }
    if !out.stdout.is_empty() {
        return Err(format!("{args:?}: wrote to stdout"));
    }
    Ok(())
}

#[allow(dead_code)]
pub fn subcommand(case: &Case) -> &str {
    case.args.first().map_or("", |s| s.as_str())
}
