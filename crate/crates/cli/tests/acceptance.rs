//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::{Command, ExitCode};

use kfc::selftest::{line, run_criterion, CRITERIA};

const KFC: &str = env!("CARGO_BIN_EXE_kfc");

/// Runs the binary twice per invocation and compares stdout byte for byte.
fn binary_determinism() -> Result<usize, String> {
    let invocations: [&[&str]; 5] = [
        &["--json", "hfk", "--fixture", "FIG8"],
        &["--json", "triangles", "--fixture", "TREF_A"],
        &["--json", "blocks", "--fixture", "TREF_B"],
        &["--json", "splice", "--details", "--fixture", "TREF_A", "--fixture", "FIG8"],
        &["--json", "cfd", "--simplify", "--truncate", "1", "--fixture", "FIG8"],
    ];
    for args in invocations {
        let run = || Command::new(KFC).args(args).output().map_err(|e| e.to_string());
        let (first, second) = (run()?, run()?);
        if !first.status.success() || first.stdout != second.stdout {
            return Err(format!("kfc {} is not reproducible", args.join(" ")));
        }
    }
    Ok(invocations.len())
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (number, _) in CRITERIA {
        let mut result = run_criterion(number);
        if number == 10 {
            match binary_determinism() {
                Ok(count) => result.detail.push_str(&format!("; {count} binary runs byte-identical")),
                Err(message) => {
                    result.passed = false;
                    result.detail = message;
                }
            }
        }
        if !result.passed {
            failed += 1;
        }
        println!("{}", line(&result));
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
