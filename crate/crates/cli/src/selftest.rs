//! The acceptance suite, runnable in-process and through `kfc selftest`.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use blocks::{admissible_change, normalize, normalize_with_details, AdmissibleChange};
use bypass::{composite_identities_check, nilpotency_check, Bypass, Vertex};
use cfd::{build_cfd, simplify, simplify_with, Counts};
use knotcx::{fixtures, random, KnotComplex};
use splice::{assemble, hat_estimates};

use crate::commands::{self, block_law_checks, hfk_ranks, CfdFormat};
use crate::input::Source;
use crate::{CliError, Outcome, Report};

/// Regression values of the splice rank for ordered fixture pairs.
const SPLICE_RANKS: [(&str, &str, usize); 9] = [
    ("TREF_A", "TREF_A", 7),
    ("TREF_A", "TREF_B", 9),
    ("TREF_A", "FIG8", 9),
    ("TREF_B", "TREF_A", 9),
    ("TREF_B", "TREF_B", 7),
    ("TREF_B", "FIG8", 9),
    ("FIG8", "TREF_A", 9),
    ("FIG8", "TREF_B", 9),
    ("FIG8", "FIG8", 9),
];

/// Regression values of the reduced type-D generator counts `(ι0, ι1)`.
const CFD_COUNTS: [(&str, usize, usize); 4] = [("UNKNOT", 0, 1), ("TREF_A", 4, 3), ("TREF_B", 4, 3), ("FIG8", 4, 5)];

const PERFORMANCE_LIMIT: Duration = Duration::from_secs(60);

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "fixture validation"),
    (2, "knot Floer ranks"),
    (3, "surgery formula"),
    (4, "exact triangles"),
    (5, "composite identities"),
    (6, "nilpotency and nonvanishing blocks"),
    (7, "block laws"),
    (8, "splice"),
    (9, "type-D module"),
    (10, "determinism"),
    (11, "performance"),
];

type Check = Result<(bool, String), CliError>;

fn fixture(name: &str) -> KnotComplex {
    fixtures::by_name(name).expect("bundled fixture")
}

fn all_fixtures() -> Vec<KnotComplex> {
    fixtures::ALL.iter().map(|n| fixture(n)).collect()
}

/// Collects failure messages; passes when there are none.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn expect(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if !ok {
            self.0.push(message());
        }
    }

    fn finish(self, summary: String) -> (bool, String) {
        if self.0.is_empty() {
            (true, summary)
        } else {
            (false, self.0.join("; "))
        }
    }
}

fn fixture_validation() -> Check {
    let mut failures = Failures::default();
    for name in fixtures::ALL {
        let source = Source::fixture(name)?;
        let report = knotcx::validate(&source.data()?);
        failures.expect(report.is_valid(), || format!("{name}: {report}"));
    }
    Ok(failures.finish("UNKNOT, TREF_A, TREF_B, FIG8 valid".into()))
}

fn knot_floer_ranks() -> Check {
    let expected: [(&str, &[(i64, usize)]); 4] = [
        ("UNKNOT", &[(0, 1)]),
        ("TREF_A", &[(-1, 1), (0, 1), (1, 1)]),
        ("TREF_B", &[(-1, 1), (0, 1), (1, 1)]),
        ("FIG8", &[(-1, 1), (0, 3), (1, 1)]),
    ];
    let mut failures = Failures::default();
    for (name, ranks) in expected {
        let actual = hfk_ranks(&fixture(name));
        failures.expect(actual == ranks, || format!("{name}: {actual:?}"));
    }
    Ok(failures.finish("(1), (1,1,1), (1,1,1), (1,3,1)".into()))
}

fn surgery_formula() -> Check {
    let mut failures = Failures::default();
    let unknot = surgery::profile(&fixture("UNKNOT"), 1);
    failures.expect(unknot.total() == 1, || format!("UNKNOT total {}", unknot.total()));
    let mut totals = Vec::new();
    for (name, total, window) in [("TREF_A", 5, [1, 3, 1]), ("TREF_B", 3, [1, 1, 1])] {
        let profile = surgery::profile(&fixture(name), 1);
        failures.expect(profile.total() == total, || format!("{name} total {}", profile.total()));
        failures.expect(profile.window(-1, 1) == window, || format!("{name} profile {:?}", profile.window(-1, 1)));
        totals.push(profile.total());
    }
    totals.sort_unstable();
    failures.expect(totals == [3, 5] && totals.iter().all(|t| t % 2 == 1), || {
        format!("trefoil totals {totals:?} do not split as one minimal (3) and one other (5)")
    });
    Ok(failures.finish("totals 1, 5 (1,3,1), 3 (1,1,1)".into()))
}

fn exact_triangles() -> Check {
    let mut failures = Failures::default();
    for knot in all_fixtures() {
        let bypass = Bypass::new(&knot);
        for s in -3..=3 {
            let triangle = bypass.triangle(&knot, s)?;
            let bad = triangle.exactness_failures();
            failures.expect(bad.is_empty(), || format!("{} s={s}: {bad:?}", knot.name()));
        }
    }
    Ok(failures.finish("both triangles exact for s in [-3, 3]".into()))
}

fn composite_identities() -> Check {
    let mut failures = Failures::default();
    let mut count = 0;
    for knot in all_fixtures() {
        let bypass = Bypass::new(&knot);
        let (lo, hi) = bypass.window();
        for s in lo..=hi {
            let check = composite_identities_check(&knot, &bypass, s)?;
            failures.expect(check.holds(), || format!("{} s={s}: {check:?}", knot.name()));
            count += 1;
        }
    }
    Ok(failures.finish(format!("{count} gradings checked")))
}

fn nilpotency() -> Check {
    let mut failures = Failures::default();
    for knot in all_fixtures() {
        let bypass = Bypass::new(&knot);
        let result = nilpotency_check(&knot, &bypass)?;
        failures.expect(result.holds(), || format!("{}: six-fold composite not nilpotent", knot.name()));
        let bd = normalize(&knot)?;
        for v in Vertex::ALL {
            failures.expect(bd.x_nilpotency(v).is_some(), || format!("{}: X_{} not nilpotent", knot.name(), v.name()));
        }
        if knot.genus() == 1 {
            for v in Vertex::ALL {
                failures.expect(!bd.blocks(v).b.is_zero(), || format!("{}: B_{} = 0", knot.name(), v.name()));
            }
        }
    }
    Ok(failures.finish("composites and X nilpotent; B nonzero in genus 1".into()))
}

fn block_laws() -> Check {
    let mut failures = Failures::default();
    let mut knots = all_fixtures();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    knots.extend((0..50).map(|k| random::random_complex(&mut rng, 8, &format!("random{k}"))));
    for knot in &knots {
        let details = normalize_with_details(knot, &Bypass::new(knot))?;
        for (law, ok, detail) in block_law_checks(&details) {
            failures.expect(ok, || format!("{}: {law} {detail}", knot.name()));
        }
    }
    Ok(failures.finish(format!("{} complexes", knots.len())))
}

fn splice_properties() -> Check {
    let mut failures = Failures::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (a, b, frozen) in SPLICE_RANKS {
        let (p, q) = (normalize(&fixture(a))?, normalize(&fixture(b))?);
        let profile = assemble(&p, &q)?.profile;
        failures.expect(profile.i == frozen, || format!("{a} x {b}: i = {}, expected {frozen}", profile.i));
        failures.expect(profile.i % 2 == 1 && profile.i > 1, || format!("{a} x {b}: i = {}", profile.i));
        let hats = hat_estimates(&p, &q);
        failures.expect(hats.k_hat <= profile.k && hats.c_hat <= profile.c, || {
            format!("{a} x {b}: estimates {hats:?} exceed k={}, c={}", profile.k, profile.c)
        });
        for _ in 0..100 {
            let p2 = admissible_change(&p, &AdmissibleChange::random(&p, &mut rng))?;
            let q2 = admissible_change(&q, &AdmissibleChange::random(&q, &mut rng))?;
            let i = assemble(&p2, &q2)?.i();
            if i != profile.i {
                failures.expect(false, || format!("{a} x {b}: basis change gives i = {i}"));
                break;
            }
        }
    }
    Ok(failures.finish("9 ordered pairs, i in {7, 9}, 100 basis changes each".into()))
}

fn cfd_counts(knot: &KnotComplex, rng: &mut ChaCha8Rng, failures: &mut Failures) -> Result<Option<Counts>, CliError> {
    let mut seen = Vec::new();
    for t in 0..=2 {
        let module = build_cfd(knot, t)?;
        let reduced = simplify(&module);
        failures.expect(reduced.check_typing().is_ok(), || format!("{} T={t}: reduced typing", knot.name()));
        failures.expect(reduced.check_structure().is_ok(), || format!("{} T={t}: reduced structure", knot.name()));
        if t == 0 {
            let shuffled = simplify_with(&module, rng).counts();
            failures.expect(shuffled == reduced.counts(), || {
                format!("{}: random order gives {shuffled:?}, fixed order {:?}", knot.name(), reduced.counts())
            });
        }
        seen.push(reduced.counts());
    }
    let stable = seen.windows(2).all(|w| w[0] == w[1]);
    failures.expect(stable, || format!("{}: counts vary with truncation {seen:?}", knot.name()));
    Ok(stable.then_some(seen[0]))
}

fn type_d_module() -> Check {
    let mut failures = Failures::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (name, iota0, iota1) in CFD_COUNTS {
        if let Some(counts) = cfd_counts(&fixture(name), &mut rng, &mut failures)? {
            failures.expect(counts == Counts { iota0, iota1 }, || format!("{name}: reduced counts {counts:?}"));
        }
    }
    let mut gen = ChaCha8Rng::seed_from_u64(10);
    for k in 0..25 {
        let knot = random::random_complex(&mut gen, 6, &format!("random{k}"));
        cfd_counts(&knot, &mut rng, &mut failures)?;
    }
    Ok(failures.finish("4 fixtures and 25 random complexes, T in {0, 1, 2}".into()))
}

/// JSON reports of a fixed set of commands.
pub fn sample_reports() -> Result<Vec<String>, CliError> {
    let one = |name: &str| Source::fixture(name).map(|s| vec![s]);
    let pair = vec![Source::fixture("TREF_A")?, Source::fixture("FIG8")?];
    let outcomes: Vec<Outcome> = vec![
        commands::validate(&one("FIG8")?)?,
        commands::hfk(&one("FIG8")?)?,
        commands::surgery(&one("TREF_A")?, 1, None)?,
        commands::triangles(&one("TREF_B")?)?,
        commands::blocks(&one("TREF_A")?)?,
        commands::splice(&pair, true)?,
        commands::cfd(&one("TREF_A")?, 1, true, CfdFormat::Json)?,
    ];
    Ok(outcomes.iter().map(|o| o.report.to_json()).collect())
}

fn determinism() -> Check {
    let first = sample_reports()?;
    let second = sample_reports()?;
    let differing: Vec<usize> = (0..first.len()).filter(|&k| first[k] != second[k]).collect();
    Ok(if differing.is_empty() {
        (true, format!("{} reports byte-identical", first.len()))
    } else {
        (false, format!("reports {differing:?} differ between runs"))
    })
}

fn performance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let first = random::random_complex_exact(&mut rng, 51, "BIG1");
    let second = random::random_complex_exact(&mut rng, 51, "BIG2");
    let start = Instant::now();
    let i = splice::splice_rank(&first, &second)?;
    let elapsed = start.elapsed();
    Ok((elapsed < PERFORMANCE_LIMIT, format!("two 51-generator complexes, i = {i}, limit 60 s")))
}

/// Runs one criterion by number.
pub fn run_criterion(number: u8) -> CriterionResult {
    let (_, name) = CRITERIA[usize::from(number) - 1];
    let start = Instant::now();
    let outcome = match number {
        1 => fixture_validation(),
        2 => knot_floer_ranks(),
        3 => surgery_formula(),
        4 => exact_triangles(),
        5 => composite_identities(),
        6 => nilpotency(),
        7 => block_laws(),
        8 => splice_properties(),
        9 => type_d_module(),
        10 => determinism(),
        11 => performance(),
        _ => Err(CliError::Usage(format!("no criterion {number}"))),
    };
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, e.to_string()));
    CriterionResult { number, name, passed, detail, elapsed: start.elapsed() }
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(|&(n, _)| run_criterion(n)).collect()
}

/// One line per criterion.
pub fn line(result: &CriterionResult) -> String {
    format!(
        "{} criterion {:>2} ({}): {} [{:.1} s]",
        if result.passed { "PASS" } else { "FAIL" },
        result.number,
        result.name,
        result.detail,
        result.elapsed.as_secs_f64()
    )
}

pub fn selftest() -> Outcome {
    let results = run_all();
    let summary = json!({
        "criteria": results.len(),
        "passed": results.iter().filter(|r| r.passed).count(),
    });
    let mut report = Report::new("selftest", Vec::new(), summary);
    let mut text = String::new();
    for result in &results {
        report.check(&format!("criterion {} ({})", result.number, result.name), result.passed, result.detail.clone());
        let _ = writeln!(text, "{}", line(result));
    }
    Outcome { report, text }
}
