//! Validated, indexed knot complexes.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::data::{ComplexData, DiffEntryData, GeneratorData};
use crate::strata::{strata, Stratum};
use crate::validate::{validate, ValidationReport};

/// Failure to obtain a valid complex.
#[derive(Debug, Error)]
pub enum KnotError {
    #[error("malformed complex JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported schema version {0} (expected 1)")]
    Schema(u32),
    #[error("complex {name} is invalid: {report}")]
    Invalid { name: String, report: ValidationReport },
}

/// One nonzero component of `d^{a,b}`, with generators given by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Entry {
    pub from: usize,
    pub to: usize,
    pub a: u32,
    pub b: u32,
}

/// A validated knot complex. Generators are indexed in input order.
#[derive(Clone, Debug)]
pub struct KnotComplex {
    name: String,
    ids: Vec<String>,
    grading: Vec<i64>,
    iota: Vec<usize>,
    entries: Vec<Entry>,
    outgoing: Vec<Vec<usize>>,
    index: HashMap<String, usize>,
}

impl KnotComplex {
    /// Validates and indexes parsed data.
    pub fn new(data: &ComplexData) -> Result<Self, KnotError> {
        if let Some(version) = data.schema {
            if version != 1 {
                return Err(KnotError::Schema(version));
            }
        }
        let report = validate(data);
        if !report.is_valid() {
            return Err(KnotError::Invalid { name: data.name.clone(), report });
        }
        let index: HashMap<String, usize> =
            data.generators.iter().enumerate().map(|(idx, g)| (g.id.clone(), idx)).collect();
        let ids: Vec<String> = data.generators.iter().map(|g| g.id.clone()).collect();
        let grading = data.generators.iter().map(|g| g.s).collect();
        let iota = ids.iter().map(|id| index[&data.involution[id]]).collect();
        let mut entries: Vec<Entry> =
            data.diff.iter().map(|e| Entry { from: index[&e.from], to: index[&e.to], a: e.a, b: e.b }).collect();
        entries.sort();
        let mut outgoing = vec![Vec::new(); ids.len()];
        for (idx, e) in entries.iter().enumerate() {
            outgoing[e.from].push(idx);
        }
        Ok(Self { name: data.name.clone(), ids, grading, iota, entries, outgoing, index })
    }

    /// Parses and validates JSON text.
    pub fn from_json(text: &str) -> Result<Self, KnotError> {
        Self::new(&ComplexData::from_json(text)?)
    }

    /// Converts back to the serializable form.
    pub fn to_data(&self) -> ComplexData {
        ComplexData {
            schema: None,
            name: self.name.clone(),
            generators: self
                .ids
                .iter()
                .zip(&self.grading)
                .map(|(id, &s)| GeneratorData { id: id.clone(), s })
                .collect(),
            diff: self
                .entries
                .iter()
                .map(|e| DiffEntryData { from: self.ids[e.from].clone(), to: self.ids[e.to].clone(), a: e.a, b: e.b })
                .collect(),
            involution: self
                .ids
                .iter()
                .enumerate()
                .map(|(idx, id)| (id.clone(), self.ids[self.iota[idx]].clone()))
                .collect::<BTreeMap<_, _>>(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, generator: usize) -> &str {
        &self.ids[generator]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Alexander grading of a generator.
    pub fn grading(&self, generator: usize) -> i64 {
        self.grading[generator]
    }

    /// The conjugation involution.
    pub fn iota(&self, generator: usize) -> usize {
        self.iota[generator]
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Entries leaving `generator`.
    pub fn outgoing(&self, generator: usize) -> impl Iterator<Item = &Entry> + '_ {
        self.outgoing[generator].iter().map(move |&idx| &self.entries[idx])
    }

    /// Smallest and largest Alexander grading, or `(0, 0)` when empty.
    pub fn grading_range(&self) -> (i64, i64) {
        let min = self.grading.iter().copied().min().unwrap_or(0);
        let max = self.grading.iter().copied().max().unwrap_or(0);
        (min, max)
    }

    /// Swaps the roles of the two filtrations: gradings negate and `d^{a,b}` becomes `d^{b,a}`.
    pub fn puncture_swap(&self) -> Self {
        let mut data = self.to_data();
        for g in &mut data.generators {
            g.s = -g.s;
        }
        for e in &mut data.diff {
            std::mem::swap(&mut e.a, &mut e.b);
        }
        Self::new(&data).expect("swapping the filtrations preserves validity")
    }

    /// Rank of the knot Floer homology in Alexander grading `s`.
    pub fn hfk_rank(&self, s: i64) -> usize {
        strata(self, Stratum::Point { i: 0, j: -s }).homology_rank()
    }

    /// Largest `|s|` with nonzero knot Floer homology.
    pub fn genus(&self) -> u64 {
        let (min, max) = self.grading_range();
        (min..=max).filter(|&s| self.hfk_rank(s) > 0).map(i64::unsigned_abs).max().unwrap_or(0)
    }
}
