//! Type-D modules over the torus algebra: storage, checks and export.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{Basis, Element, Idempotent};
use crate::CfdError;

/// Where a generator came from in the build.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    /// `M` or `L`.
    pub summand: String,
    /// `C0`, `C1` or `Cinf`.
    pub part: String,
    pub s: i64,
    /// Cone piece (`A`, `B`, `T`) or `plain`.
    pub piece: String,
    pub generator: String,
    pub i: i64,
    pub j: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generator {
    pub label: String,
    pub idempotent: Idempotent,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

/// A module generated by `generators`, with `delta` holding the coefficient
/// of `to` in `δ(from)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TypeDModule {
    pub generators: Vec<Generator>,
    pub delta: BTreeMap<(usize, usize), Element>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryData {
    from: String,
    coefficient: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleData {
    generators: Vec<Generator>,
    delta: Vec<EntryData>,
}

/// A nonzero coefficient in `δ∘δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFailure {
    pub from: usize,
    pub to: usize,
    pub residue: Element,
    /// `(middle, first coefficient, second coefficient)` for every length-2 path.
    pub paths: Vec<(usize, Element, Element)>,
}

/// Generator counts per idempotent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub iota0: usize,
    pub iota1: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.iota0 + self.iota1
    }
}

impl TypeDModule {
    pub fn new(generators: Vec<Generator>) -> Self {
        Self { generators, delta: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Adds `coefficient` to the entry `from → to`, dropping zero sums.
    pub fn add_entry(&mut self, from: usize, to: usize, coefficient: Element) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.delta.entry((from, to)).or_default();
        *slot += coefficient;
        if slot.is_zero() {
            self.delta.remove(&(from, to));
        }
    }

    pub fn counts(&self) -> Counts {
        let iota0 = self.generators.iter().filter(|g| g.idempotent == Idempotent::Zero).count();
        Counts { iota0, iota1: self.generators.len() - iota0 }
    }

    /// Every basis term of every entry satisfies `a = ι(from)·a·ι(to)`.
    pub fn check_typing(&self) -> Result<(), CfdError> {
        for (&(from, to), &coefficient) in &self.delta {
            let expected = (self.generators[from].idempotent, self.generators[to].idempotent);
            if let Some(bad) = coefficient.terms().find(|b| b.idempotents() != expected) {
                return Err(CfdError::Typing {
                    from: self.generators[from].label.clone(),
                    to: self.generators[to].label.clone(),
                    coefficient: bad.to_string(),
                });
            }
        }
        Ok(())
    }

    /// All nonzero coefficients of `δ∘δ`. The algebra has no differential.
    pub fn structure_failures(&self) -> Vec<StructureFailure> {
        let mut outgoing: HashMap<usize, Vec<(usize, Element)>> = HashMap::new();
        for (&(from, to), &c) in &self.delta {
            outgoing.entry(from).or_default().push((to, c));
        }
        let mut squares: BTreeMap<(usize, usize), Element> = BTreeMap::new();
        for (&(from, middle), &first) in &self.delta {
            for &(to, second) in outgoing.get(&middle).map(Vec::as_slice).unwrap_or(&[]) {
                *squares.entry((from, to)).or_default() += first * second;
            }
        }
        squares
            .into_iter()
            .filter(|(_, residue)| !residue.is_zero())
            .map(|((from, to), residue)| {
                let paths = outgoing[&from]
                    .iter()
                    .filter_map(|&(middle, first)| self.delta.get(&(middle, to)).map(|&second| (middle, first, second)))
                    .collect();
                StructureFailure { from, to, residue, paths }
            })
            .collect()
    }

    pub fn check_structure(&self) -> Result<(), CfdError> {
        match self.structure_failures().into_iter().next() {
            None => Ok(()),
            Some(failure) => {
                let label = |g: usize| self.generators[g].label.clone();
                let paths = failure
                    .paths
                    .iter()
                    .map(|&(m, a, b)| {
                        format!("{} -[{a}]-> {} -[{b}]-> {}", label(failure.from), label(m), label(failure.to))
                    })
                    .collect();
                Err(CfdError::StructureEquation {
                    from: label(failure.from),
                    to: label(failure.to),
                    residue: failure.residue.to_string(),
                    paths,
                })
            }
        }
    }

    /// Number of entries per basis element.
    pub fn coefficient_counts(&self) -> BTreeMap<Basis, usize> {
        let mut counts = BTreeMap::new();
        for c in self.delta.values() {
            for b in c.terms() {
                *counts.entry(b).or_insert(0) += 1;
            }
        }
        counts
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_data()).expect("module data serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_data()).expect("module data serializes")
    }

    fn to_data(&self) -> ModuleData {
        let delta = self
            .delta
            .iter()
            .flat_map(|(&(from, to), c)| {
                c.terms().map(move |b| EntryData {
                    from: self.generators[from].label.clone(),
                    coefficient: b.name().to_string(),
                    to: self.generators[to].label.clone(),
                })
            })
            .collect();
        ModuleData { generators: self.generators.clone(), delta }
    }

    pub fn from_json(text: &str) -> Result<Self, CfdError> {
        let data: ModuleData = serde_json::from_str(text)?;
        let mut index = HashMap::new();
        for (n, g) in data.generators.iter().enumerate() {
            if index.insert(g.label.clone(), n).is_some() {
                return Err(CfdError::DuplicateGenerator(g.label.clone()));
            }
        }
        let lookup =
            |label: &str| index.get(label).copied().ok_or_else(|| CfdError::UnknownGenerator(label.to_string()));
        let mut module = TypeDModule::new(data.generators.clone());
        for entry in &data.delta {
            let basis: Basis = entry.coefficient.parse()?;
            module.add_entry(lookup(&entry.from)?, lookup(&entry.to)?, basis.into());
        }
        module.check_typing()?;
        Ok(module)
    }

    /// Labeled directed multigraph; one edge per basis term.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cfd {\n");
        for (n, g) in self.generators.iter().enumerate() {
            let shape = match g.idempotent {
                Idempotent::Zero => "circle",
                Idempotent::One => "box",
            };
            writeln!(out, "  n{n} [label={:?}, shape={shape}];", g.label).unwrap();
        }
        for (&(from, to), c) in &self.delta {
            for b in c.terms() {
                writeln!(out, "  n{from} -> n{to} [label=\"{}\"];", b.edge_label()).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}
