//! The subcommands. Each returns a report and its human-readable rendering.

use std::fmt::Write as _;

use serde_json::{json, Value};

use blocks::{classify, normalize_with_details, shifted_zero_mismatches, BlockData, MatrixClass, Normalization};
use bypass::{composite_identities_check, nilpotency_check, Bypass, Vertex};
use cfd::{build_cfd, simplify, TypeDModule};
use f2linalg::rank;
use knotcx::KnotComplex;
use splice::{assemble, block_bounds, hat_estimates, special_pair_class, BoundCase, SpecialClass, PATTERNS};

use crate::input::{invalid_report_json, Source};
use crate::{matrix_json, matrix_rows, CliError, Outcome, Report};

fn digests(sources: &[Source]) -> Vec<crate::InputDigest> {
    sources.iter().map(Source::digest).collect()
}

fn exactly<'a>(sources: &'a [Source], count: usize, command: &str) -> Result<&'a [Source], CliError> {
    if sources.len() == count {
        Ok(sources)
    } else {
        Err(CliError::Usage(format!("{command} takes exactly {count} input(s), got {}", sources.len())))
    }
}

fn at_least_one(sources: &[Source], command: &str) -> Result<(), CliError> {
    if sources.is_empty() {
        Err(CliError::Usage(format!("{command} needs a FILE or --fixture NAME")))
    } else {
        Ok(())
    }
}

/// Validation of every input; invalid inputs give FAIL checks, not errors.
pub fn validate(sources: &[Source]) -> Result<Outcome, CliError> {
    at_least_one(sources, "validate")?;
    let mut results = Vec::new();
    let mut checks = Vec::new();
    let mut text = String::new();
    for source in sources {
        let data = source.data()?;
        let report = knotcx::validate(&data);
        let mut detail = report.to_string();
        if report.is_valid() {
            if let Err(e) = KnotComplex::new(&data) {
                detail = e.to_string();
            }
        }
        let ok = detail == "valid";
        results.push(json!({
            "name": source.name,
            "generators": data.generators.len(),
            "valid": ok,
            "violations": invalid_report_json(&report),
        }));
        checks.push((format!("validate {}", source.name), ok, detail));
        if ok {
            let _ = writeln!(text, "{}: valid ({} generators)", source.name, data.generators.len());
        } else {
            let _ = writeln!(text, "{}: invalid", source.name);
            for v in &report.violations {
                let _ = writeln!(text, "  {v}");
            }
        }
    }
    let mut report = Report::new("validate", digests(sources), Value::Array(results));
    for (name, ok, detail) in checks {
        report.check(&name, ok, detail);
    }
    text.push_str(&report.check_lines());
    Ok(Outcome { report, text })
}

pub fn hfk_ranks(knot: &KnotComplex) -> Vec<(i64, usize)> {
    let g = knot.genus() as i64;
    (-g..=g).map(|s| (s, knot.hfk_rank(s))).collect()
}

pub fn hfk(sources: &[Source]) -> Result<Outcome, CliError> {
    at_least_one(sources, "hfk")?;
    let mut results = Vec::new();
    let mut text = String::new();
    for source in sources {
        let knot = source.knot()?;
        let ranks = hfk_ranks(&knot);
        let total: usize = ranks.iter().map(|&(_, r)| r).sum();
        results.push(json!({
            "name": source.name,
            "genus": knot.genus(),
            "ranks": ranks.iter().map(|&(s, rank)| json!({ "s": s, "rank": rank })).collect::<Vec<_>>(),
            "total": total,
        }));
        let _ = writeln!(text, "{}: genus {}, total rank {total}", source.name, knot.genus());
        for (s, r) in ranks {
            let _ = writeln!(text, "  s={s:>3}  rank {r}");
        }
    }
    let report = Report::new("hfk", digests(sources), Value::Array(results));
    Ok(Outcome { report, text })
}

pub fn surgery(sources: &[Source], n: u32, s: Option<i64>) -> Result<Outcome, CliError> {
    at_least_one(sources, "surgery")?;
    let mut results = Vec::new();
    let mut text = String::new();
    for source in sources {
        let knot = source.knot()?;
        let ranks = match s {
            Some(s) => vec![(s, surgery::h_n(&knot, n, s))],
            None => surgery::profile(&knot, n).ranks,
        };
        let total: usize = ranks.iter().map(|&(_, r)| r).sum();
        results.push(json!({
            "name": source.name,
            "n": n,
            "ranks": ranks.iter().map(|&(s, rank)| json!({ "s": s, "rank": rank })).collect::<Vec<_>>(),
            "total": total,
        }));
        let _ = writeln!(text, "{}: n={n}, total {total}", source.name);
        for (s, r) in ranks {
            let _ = writeln!(text, "  s={s:>3}  rank {r}");
        }
    }
    let report = Report::new("surgery", digests(sources), Value::Array(results));
    Ok(Outcome { report, text })
}

pub fn triangles(sources: &[Source]) -> Result<Outcome, CliError> {
    at_least_one(sources, "triangles")?;
    let mut results = Vec::new();
    let mut checks = Vec::new();
    let mut text = String::new();
    for source in sources {
        let knot = source.knot()?;
        let bypass = Bypass::new(&knot);
        let (lo, hi) = bypass.triangle_range();
        let mut rows = Vec::new();
        let mut inexact = Vec::new();
        let _ = writeln!(text, "{}: genus {}", source.name, bypass.genus());
        let _ = writeln!(text, "    s  H0 H1 Hinf | f_inf f_0 f_1 fbar_inf fbar_0 fbar_1 | exact");
        for s in lo..=hi {
            let t = bypass.triangle(&knot, s)?;
            let maps = [&t.f_inf, &t.f_0, &t.f_1, &t.fbar_inf, &t.fbar_0, &t.fbar_1].map(rank);
            let exact = t.is_exact();
            if !exact {
                inexact.push(s);
            }
            rows.push(json!({
                "s": s,
                "h0": t.h0,
                "h1": t.h1,
                "hinf": t.hinf,
                "map_ranks": {
                    "f_inf": maps[0], "f_0": maps[1], "f_1": maps[2],
                    "fbar_inf": maps[3], "fbar_0": maps[4], "fbar_1": maps[5],
                },
                "exact": exact,
            }));
            let _ = writeln!(
                text,
                "  {s:>3}  {:>2} {:>2} {:>4} | {:>5} {:>3} {:>3} {:>8} {:>6} {:>6} | {}",
                t.h0,
                t.h1,
                t.hinf,
                maps[0],
                maps[1],
                maps[2],
                maps[3],
                maps[4],
                maps[5],
                if exact { "yes" } else { "no" }
            );
        }
        let (wlo, whi) = bypass.window();
        let mut composite_failures = Vec::new();
        for s in wlo..=whi {
            if !composite_identities_check(&knot, &bypass, s)?.holds() {
                composite_failures.push(s);
            }
        }
        let nilpotency = nilpotency_check(&knot, &bypass)?;
        results.push(json!({
            "name": source.name,
            "genus": bypass.genus(),
            "levels": rows,
            "composite_identities_failing": composite_failures,
            "nilpotency": { "bound": nilpotency.bound, "index": nilpotency.index },
        }));
        checks.push((
            format!("exactness {}", source.name),
            inexact.is_empty(),
            if inexact.is_empty() { format!("s in [{lo}, {hi}]") } else { format!("not exact at s = {inexact:?}") },
        ));
        checks.push((
            format!("composite identities {}", source.name),
            composite_failures.is_empty(),
            if composite_failures.is_empty() {
                format!("s in [{wlo}, {whi}]")
            } else {
                format!("fail at s = {composite_failures:?}")
            },
        ));
        checks.push((
            format!("nilpotency {}", source.name),
            nilpotency.holds(),
            match nilpotency.index {
                Some(p) => format!("power {p} vanishes (bound {})", nilpotency.bound),
                None => format!("no power up to {} vanishes", nilpotency.bound),
            },
        ));
    }
    let mut report = Report::new("triangles", digests(sources), Value::Array(results));
    for (name, ok, detail) in checks {
        report.check(&name, ok, detail);
    }
    text.push_str(&report.check_lines());
    Ok(Outcome { report, text })
}

/// Named pass/fail checks of the block laws on one normalization.
pub fn block_law_checks(details: &Normalization) -> Vec<(&'static str, bool, String)> {
    let bd = &details.blocks;
    let maps = &details.maps;
    let [t0, t1, tinf] = &details.raw_taus;
    let involutions: Vec<_> =
        Vertex::ALL.iter().filter(|&&v| !(bd.tau(v) * bd.tau(v)).is_identity()).map(|v| v.name()).collect();
    let conjugation = maps.fbar_0 == &(tinf * &maps.f_0) * t1
        && maps.fbar_1 == &(t0 * &maps.f_1) * tinf
        && maps.fbar_inf == &(t1 * &maps.f_inf) * t0;
    let parity = bd.a1 % 2 == bd.ainf % 2 && bd.a1 % 2 != bd.a0 % 2;
    let shapes = bd.zero.b.shape() == (bd.ainf, bd.a1)
        && bd.one.b.shape() == (bd.a0, bd.ainf)
        && bd.infinity.b.shape() == (bd.a1, bd.a0);
    let not_nilpotent: Vec<_> =
        Vertex::ALL.iter().filter(|&&v| bd.x_nilpotency(v).is_none()).map(|v| v.name()).collect();
    vec![
        (
            "tau involution",
            involutions.is_empty(),
            if involutions.is_empty() { String::new() } else { format!("tau^2 != Id at {involutions:?}") },
        ),
        ("conjugation", conjugation, String::new()),
        ("parity", parity, format!("a0={}, a1={}, ainf={}", bd.a0, bd.a1, bd.ainf)),
        (
            "B shapes",
            shapes,
            format!("B_0 {:?}, B_1 {:?}, B_inf {:?}", bd.zero.b.shape(), bd.one.b.shape(), bd.infinity.b.shape()),
        ),
        (
            "X nilpotent",
            not_nilpotent.is_empty(),
            if not_nilpotent.is_empty() { String::new() } else { format!("not nilpotent at {not_nilpotent:?}") },
        ),
    ]
}

fn class_json(class: &MatrixClass) -> Value {
    json!({
        "rows": class.rows,
        "cols": class.cols,
        "rank": class.rank,
        "injective": class.injective,
        "surjective": class.surjective,
        "full_rank": class.full_rank,
        "kernel": class.k,
        "cokernel": class.c,
    })
}

fn blocks_json(bd: &BlockData) -> Value {
    let mut blocks = serde_json::Map::new();
    let mut xs = serde_json::Map::new();
    for v in Vertex::ALL {
        let b = bd.blocks(v);
        for (letter, m) in [("A", &b.a), ("B", &b.b), ("C", &b.c), ("D", &b.d)] {
            blocks.insert(format!("{letter}_{}", v.name()), matrix_json(m));
        }
        xs.insert(
            format!("X_{}", v.name()),
            json!({ "matrix": matrix_json(bd.x(v)), "nilpotency": bd.x_nilpotency(v) }),
        );
    }
    let classes = classify(bd);
    json!({
        "a": { "0": bd.a0, "1": bd.a1, "inf": bd.ainf },
        "blocks": blocks,
        "x": xs,
        "classification": {
            "B_0": class_json(&classes.zero),
            "B_1": class_json(&classes.one),
            "B_inf": class_json(&classes.infinity),
            "full_rank": classes.full_rank,
        },
    })
}

pub fn blocks(sources: &[Source]) -> Result<Outcome, CliError> {
    at_least_one(sources, "blocks")?;
    let mut results = Vec::new();
    let mut checks = Vec::new();
    let mut text = String::new();
    for source in sources {
        let knot = source.knot()?;
        let bypass = Bypass::new(&knot);
        let details = normalize_with_details(&knot, &bypass)?;
        let bd = &details.blocks;
        let mismatches = shifted_zero_mismatches(&bypass);
        let mut value = blocks_json(bd);
        value["name"] = json!(source.name);
        value["shifted_zero_mismatches"] = Value::Array(
            mismatches
                .iter()
                .map(|&(s, here, there)| json!({ "s": s, "rank": here, "rank_at_one_minus_s": there }))
                .collect(),
        );
        results.push(value);

        let _ = writeln!(text, "{}: a0={} a1={} ainf={}", source.name, bd.a0, bd.a1, bd.ainf);
        for v in Vertex::ALL {
            let b = bd.blocks(v);
            for (letter, m) in [("A", &b.a), ("B", &b.b), ("C", &b.c), ("D", &b.d)] {
                let _ =
                    writeln!(text, "  {letter}_{} ({}x{}): {}", v.name(), m.rows(), m.cols(), matrix_rows(m).join(" "));
            }
        }
        let classes = classify(bd);
        for v in Vertex::ALL {
            let x = bd.x(v);
            let nil = bd.x_nilpotency(v).map_or("none".to_string(), |p| p.to_string());
            let c = classes.get(v);
            let _ = writeln!(
                text,
                "  X_{} ({}x{}) nilpotency {nil}; B_{} rank {} injective {} surjective {}",
                v.name(),
                x.rows(),
                x.cols(),
                v.name(),
                c.rank,
                c.injective,
                c.surjective
            );
        }
        let _ = writeln!(text, "  all B full rank: {}", classes.full_rank);
        if !mismatches.is_empty() {
            let _ = writeln!(
                text,
                "  note: the shift s -> 1-s on H_0 mismatches ranks at s = {:?}; the duality uses s -> -1-s",
                mismatches.iter().map(|m| m.0).collect::<Vec<_>>()
            );
        }
        for (name, ok, detail) in block_law_checks(&details) {
            checks.push((format!("{name} {}", source.name), ok, detail));
        }
    }
    let mut report = Report::new("blocks", digests(sources), Value::Array(results));
    for (name, ok, detail) in checks {
        report.check(&name, ok, detail);
    }
    text.push_str(&report.check_lines());
    Ok(Outcome { report, text })
}

/// Whether the complex has knot Floer homology of total rank above one.
pub fn is_nontrivial(knot: &KnotComplex) -> bool {
    hfk_ranks(knot).iter().map(|&(_, r)| r).sum::<usize>() > 1
}

fn special_json(class: SpecialClass) -> Value {
    match class {
        SpecialClass::NotSpecial { i } => json!({ "special": false, "i": i }),
        SpecialClass::Case { case, swapped } => {
            json!({ "special": true, "case": format!("{case:?}"), "swapped": swapped })
        }
        SpecialClass::None => json!({ "special": true, "case": null }),
    }
}

pub fn splice(sources: &[Source], details: bool) -> Result<Outcome, CliError> {
    let sources = exactly(sources, 2, "splice")?;
    let first = sources[0].knot()?;
    let second = sources[1].knot()?;
    let bd1 = blocks::normalize(&first)?;
    let bd2 = blocks::normalize(&second)?;
    let matrix = assemble(&bd1, &bd2)?;
    let profile = matrix.profile;
    let hats = hat_estimates(&bd1, &bd2);
    let nontrivial = is_nontrivial(&first) && is_nontrivial(&second);

    let mut results = json!({
        "first": sources[0].name,
        "second": sources[1].name,
        "i": profile.i,
        "k": profile.k,
        "c": profile.c,
        "k_hat": hats.k_hat,
        "c_hat": hats.c_hat,
        "a_first": { "0": bd1.a0, "1": bd1.a1, "inf": bd1.ainf },
        "a_second": { "0": bd2.a0, "1": bd2.a1, "inf": bd2.ainf },
        "row_dims": matrix.row_dims,
        "col_dims": matrix.col_dims,
        "both_nontrivial": nontrivial,
    });
    let mut text = format!(
        "{} x {}: i={} k={} c={} k_hat={} c_hat={}\n  row blocks {:?}, column blocks {:?}\n",
        sources[0].name,
        sources[1].name,
        profile.i,
        profile.k,
        profile.c,
        hats.k_hat,
        hats.c_hat,
        matrix.row_dims,
        matrix.col_dims
    );
    if details {
        let special = special_pair_class(&bd1, &bd2)?;
        let mut bounds = Vec::new();
        for pattern in PATTERNS {
            for case in [BoundCase::K, BoundCase::C] {
                let label =
                    format!("({},{},{}) {case:?}", pattern.circle.name(), pattern.bullet.name(), pattern.star.name());
                match block_bounds(&bd1, &bd2, pattern, case) {
                    Ok(r) => {
                        let _ = writeln!(
                            text,
                            "  bound {label}: claimed k>={} c>={}, satisfied {}",
                            r.claimed_k,
                            r.claimed_c,
                            r.satisfied()
                        );
                        bounds.push(json!({
                            "pattern": label,
                            "claimed_k": r.claimed_k,
                            "claimed_c": r.claimed_c,
                            "satisfied": r.satisfied(),
                        }));
                    }
                    Err(e) => bounds.push(json!({ "pattern": label, "hypothesis": e.to_string() })),
                }
            }
        }
        let _ = writeln!(text, "  special pair: {}", special_json(special));
        let _ = writeln!(text, "  matrix ({}x{}):", matrix.matrix.rows(), matrix.matrix.cols());
        for row in matrix_rows(&matrix.matrix) {
            let _ = writeln!(text, "    {row}");
        }
        results["special"] = special_json(special);
        results["bounds"] = Value::Array(bounds);
        results["matrix"] = matrix_json(&matrix.matrix);
    }
    let mut report = Report::new("splice", digests(sources), results);
    report.check("parity", profile.i % 2 == 1, format!("i = {}", profile.i));
    if nontrivial {
        report.check("nontrivial splice", profile.i > 1, format!("i = {}", profile.i));
    }
    report.check("kernel estimate", hats.k_hat <= profile.k, format!("k_hat = {} <= k = {}", hats.k_hat, profile.k));
    report.check("cokernel estimate", hats.c_hat <= profile.c, format!("c_hat = {} <= c = {}", hats.c_hat, profile.c));
    text.push_str(&report.check_lines());
    Ok(Outcome { report, text })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfdFormat {
    Json,
    Dot,
}

pub fn cfd(sources: &[Source], truncation: u32, reduce: bool, format: CfdFormat) -> Result<Outcome, CliError> {
    let sources = exactly(sources, 1, "cfd")?;
    let knot = sources[0].knot()?;
    let built = build_cfd(&knot, truncation)?;
    let module: TypeDModule = if reduce { simplify(&built) } else { built };
    let counts = module.counts();
    let (lo, hi) = cfd::window(&knot, truncation);
    let module_value: Value = serde_json::from_str(&module.to_json()).expect("module JSON parses");
    let coefficients: serde_json::Map<String, Value> =
        module.coefficient_counts().into_iter().map(|(b, n)| (b.name().to_string(), json!(n))).collect();
    let results = json!({
        "name": sources[0].name,
        "truncation": truncation,
        "window": [lo, hi],
        "simplified": reduce,
        "counts": { "iota0": counts.iota0, "iota1": counts.iota1, "total": counts.total() },
        "coefficients": coefficients,
        "module": module_value,
    });
    let mut report = Report::new("cfd", digests(sources), results);
    let typing = module.check_typing();
    report.check("idempotent typing", typing.is_ok(), typing.err().map_or(String::new(), |e| e.to_string()));
    let failures = module.structure_failures();
    report.check(
        "structure equation",
        failures.is_empty(),
        if failures.is_empty() { String::new() } else { format!("{} failing pairs", failures.len()) },
    );
    let text = match format {
        CfdFormat::Json => module.to_json_pretty() + "\n",
        CfdFormat::Dot => module.to_dot(),
    };
    Ok(Outcome { report, text })
}

/// Report for inputs that failed validation, emitted with exit status 1.
pub fn invalid_input(command: &str, sources: &[Source], name: &str, violations: &knotcx::ValidationReport) -> Outcome {
    let mut report =
        Report::new(command, digests(sources), json!({ "name": name, "violations": invalid_report_json(violations) }));
    report.check(&format!("validate {name}"), false, violations.to_string());
    let text = report.check_lines();
    Outcome { report, text }
}
