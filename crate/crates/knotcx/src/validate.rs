//! Structural checks on complex data: ids, grading compatibility, the full
//! family of `d² = 0` relations, and the conjugation symmetry.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::data::ComplexData;

/// One violated invariant, with the witnessing generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Error)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    #[error("duplicate generator id {id}")]
    DuplicateId { id: String },
    #[error("diff entry {index} refers to unknown generator {id}")]
    UnknownGenerator { index: usize, id: String },
    #[error("duplicate diff entry {from} -> {to} in bidegree ({a},{b})")]
    DuplicateEntry { from: String, to: String, a: u32, b: u32 },
    #[error("grading mismatch at generator {from}: entry to {to} in bidegree ({a},{b}) needs s({to}) = {expected}, found {actual}")]
    GradingMismatch { from: String, to: String, a: u32, b: u32, expected: i64, actual: i64 },
    #[error("d^2 != 0 at generator {generator} in bidegree ({a},{b}): coefficient of {target} is 1")]
    NonZeroSquare { generator: String, a: u32, b: u32, target: String },
    #[error("involution has no image for generator {id}")]
    InvolutionMissing { id: String },
    #[error("involution maps {id} to unknown generator {image}")]
    InvolutionUnknown { id: String, image: String },
    #[error("involution is not an involution at {id}: {id} -> {image} -> {back}")]
    InvolutionNotInvolutive { id: String, image: String, back: String },
    #[error("involution does not negate the grading at {id}: s({id}) = {s}, s({image}) = {image_s}")]
    InvolutionGrading { id: String, image: String, s: i64, image_s: i64 },
    #[error("involution does not intertwine d^({a},{b}) at generator {generator}: entry to {target} has no mirror in d^({b},{a})")]
    InvolutionDifferential { generator: String, a: u32, b: u32, target: String },
}

/// All violations found in one pass.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (idx, v) in self.violations.iter().enumerate() {
            if idx > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every invariant of a knot complex and reports all violations.
pub fn validate(data: &ComplexData) -> ValidationReport {
    let mut violations = Vec::new();
    let mut grading: HashMap<&str, i64> = HashMap::new();
    for g in &data.generators {
        if grading.insert(g.id.as_str(), g.s).is_some() {
            violations.push(Violation::DuplicateId { id: g.id.clone() });
        }
    }

    let mut structurally_sound = true;
    let mut seen = BTreeSet::new();
    for (index, e) in data.diff.iter().enumerate() {
        for id in [&e.from, &e.to] {
            if !grading.contains_key(id.as_str()) {
                violations.push(Violation::UnknownGenerator { index, id: id.clone() });
                structurally_sound = false;
            }
        }
        if !seen.insert((e.from.as_str(), e.to.as_str(), e.a, e.b)) {
            violations.push(Violation::DuplicateEntry { from: e.from.clone(), to: e.to.clone(), a: e.a, b: e.b });
        }
    }

    if structurally_sound {
        for e in &data.diff {
            let expected = grading[e.from.as_str()] - i64::from(e.a) + i64::from(e.b);
            let actual = grading[e.to.as_str()];
            if expected != actual {
                violations.push(Violation::GradingMismatch {
                    from: e.from.clone(),
                    to: e.to.clone(),
                    a: e.a,
                    b: e.b,
                    expected,
                    actual,
                });
            }
        }
        check_square(data, &seen, &mut violations);
    }

    check_involution(data, &grading, &seen, structurally_sound, &mut violations);
    ValidationReport { violations }
}

fn check_square(data: &ComplexData, entries: &BTreeSet<(&str, &str, u32, u32)>, out: &mut Vec<Violation>) {
    let mut outgoing: BTreeMap<&str, Vec<(&str, u32, u32)>> = BTreeMap::new();
    for &(from, to, a, b) in entries {
        outgoing.entry(from).or_default().push((to, a, b));
    }
    for g in &data.generators {
        let mut square: BTreeMap<(u32, u32, &str), bool> = BTreeMap::new();
        for &(mid, a1, b1) in outgoing.get(g.id.as_str()).map(Vec::as_slice).unwrap_or(&[]) {
            for &(end, a2, b2) in outgoing.get(mid).map(Vec::as_slice).unwrap_or(&[]) {
                *square.entry((a1 + a2, b1 + b2, end)).or_insert(false) ^= true;
            }
        }
        for ((a, b, target), odd) in square {
            if odd {
                out.push(Violation::NonZeroSquare { generator: g.id.clone(), a, b, target: target.to_string() });
            }
        }
    }
}

fn check_involution(
    data: &ComplexData,
    grading: &HashMap<&str, i64>,
    entries: &BTreeSet<(&str, &str, u32, u32)>,
    structurally_sound: bool,
    out: &mut Vec<Violation>,
) {
    let iota = &data.involution;
    let mut sound = true;
    for g in &data.generators {
        match iota.get(&g.id) {
            None => {
                out.push(Violation::InvolutionMissing { id: g.id.clone() });
                sound = false;
            }
            Some(image) if !grading.contains_key(image.as_str()) => {
                out.push(Violation::InvolutionUnknown { id: g.id.clone(), image: image.clone() });
                sound = false;
            }
            Some(_) => {}
        }
    }
    for (id, image) in iota {
        if !grading.contains_key(id.as_str()) {
            out.push(Violation::InvolutionUnknown { id: id.clone(), image: image.clone() });
            sound = false;
        }
    }
    if !sound {
        return;
    }
    for g in &data.generators {
        let image = &iota[&g.id];
        let back = &iota[image];
        if back != &g.id {
            out.push(Violation::InvolutionNotInvolutive { id: g.id.clone(), image: image.clone(), back: back.clone() });
        }
        let image_s = grading[image.as_str()];
        if image_s != -g.s {
            out.push(Violation::InvolutionGrading { id: g.id.clone(), image: image.clone(), s: g.s, image_s });
        }
    }
    if !structurally_sound {
        return;
    }
    for &(from, to, a, b) in entries {
        let mirror = (iota[from].as_str(), iota[to].as_str(), b, a);
        if !entries.contains(&mirror) {
            out.push(Violation::InvolutionDifferential { generator: from.to_string(), a, b, target: to.to_string() });
        }
    }
}
