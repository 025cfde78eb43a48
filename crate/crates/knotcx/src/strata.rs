//! Subquotient complexes `C{…}` cut out by conditions on `(i, j)`, and the flip map.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::chain::{Cell, ChainComplex, ChainMap, Label};
use crate::complex::KnotComplex;

/// A region of the `(i, j)` plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stratum {
    /// `{i = i, j = j}`
    Point { i: i64, j: i64 },
    /// `{i ≤ i_max, j = j}`
    ColumnBelow { i_max: i64, j: i64 },
    /// `{i = i, j ≤ j_max}`
    RowBelow { i: i64, j_max: i64 },
    /// `{i = i}`
    Vertical { i: i64 },
    /// `{j = j}`
    Horizontal { j: i64 },
}

impl Stratum {
    /// The unique label of `generator` in this region, if any.
    pub fn label_for(self, generator: usize, s: i64) -> Option<Label> {
        // Labels satisfy j = i − s.
        let label = match self {
            Stratum::Point { i, j } => (i - s == j).then(|| Label::new(generator, i, j))?,
            Stratum::ColumnBelow { i_max, j } => {
                let i = j + s;
                (i <= i_max).then(|| Label::new(generator, i, j))?
            }
            Stratum::RowBelow { i, j_max } => {
                let j = i - s;
                (j <= j_max).then(|| Label::new(generator, i, j))?
            }
            Stratum::Vertical { i } => Label::new(generator, i, i - s),
            Stratum::Horizontal { j } => Label::new(generator, j + s, j),
        };
        Some(label)
    }

    pub fn contains(self, label: Label, s: i64) -> bool {
        self.label_for(label.generator, s) == Some(label)
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Stratum::Point { i, j } => write!(f, "i={i},j={j}"),
            Stratum::ColumnBelow { i_max, j } => write!(f, "i<={i_max},j={j}"),
            Stratum::RowBelow { i, j_max } => write!(f, "i={i},j<={j_max}"),
            Stratum::Vertical { i } => write!(f, "i={i}"),
            Stratum::Horizontal { j } => write!(f, "j={j}"),
        }
    }
}

/// A stratum description that does not match a supported shape.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unsupported stratum {0:?}; expected one of i=A,j=B | i<=A,j=B | i=A,j<=B | i=A | j=B")]
pub struct StratumParseError(pub String);

#[derive(Clone, Copy, PartialEq, Eq)]
enum Var {
    I,
    J,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Eq,
    Le,
}

fn parse_condition(text: &str) -> Option<(Var, Rel, i64)> {
    let text = text.trim();
    let (var, rest) = match text.chars().next()? {
        'i' => (Var::I, &text[1..]),
        'j' => (Var::J, &text[1..]),
        _ => return None,
    };
    let rest = rest.trim_start();
    let (rel, value) = match rest.strip_prefix("<=").or_else(|| rest.strip_prefix('≤')) {
        Some(v) => (Rel::Le, v),
        None => (Rel::Eq, rest.strip_prefix('=')?),
    };
    let value = value.trim().replace('−', "-");
    Some((var, rel, value.parse().ok()?))
}

impl FromStr for Stratum {
    type Err = StratumParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let error = || StratumParseError(text.to_string());
        let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
        let conditions: Vec<_> = trimmed.split(',').map(parse_condition).collect::<Option<_>>().ok_or_else(error)?;
        match conditions.as_slice() {
            [(Var::I, Rel::Eq, i)] => Ok(Stratum::Vertical { i: *i }),
            [(Var::J, Rel::Eq, j)] => Ok(Stratum::Horizontal { j: *j }),
            [(Var::I, ri, i), (Var::J, rj, j)] | [(Var::J, rj, j), (Var::I, ri, i)] => match (ri, rj) {
                (Rel::Eq, Rel::Eq) => Ok(Stratum::Point { i: *i, j: *j }),
                (Rel::Le, Rel::Eq) => Ok(Stratum::ColumnBelow { i_max: *i, j: *j }),
                (Rel::Eq, Rel::Le) => Ok(Stratum::RowBelow { i: *i, j_max: *j }),
                (Rel::Le, Rel::Le) => Err(error()),
            },
            _ => Err(error()),
        }
    }
}

/// The induced complex on the labels in `stratum`, one label per qualifying
/// generator in generator order. Entries leaving the stratum are dropped.
pub fn strata(knot: &KnotComplex, stratum: Stratum) -> ChainComplex {
    let cells: Vec<Cell> =
        (0..knot.len()).filter_map(|x| stratum.label_for(x, knot.grading(x)).map(Cell::plain)).collect();
    let mut positions = vec![None; knot.len()];
    for (idx, cell) in cells.iter().enumerate() {
        positions[cell.label.generator] = Some(idx);
    }
    let mut entries = Vec::new();
    for (source, cell) in cells.iter().enumerate() {
        let label = cell.label;
        for e in knot.outgoing(label.generator) {
            let image = Label::new(e.to, label.i - i64::from(e.a), label.j - i64::from(e.b));
            if let Some(target) = positions[e.to] {
                if cells[target].label == image {
                    entries.push((source, target));
                }
            }
        }
    }
    ChainComplex::from_entries(cells, entries)
}

/// The flip map `C{i=0} → C{j=0}`, `[x,0,−s(x)] ↦ [ιx, s(ιx), 0]`.
pub fn flip_map(knot: &KnotComplex) -> (ChainComplex, ChainComplex, ChainMap) {
    let source = strata(knot, Stratum::Vertical { i: 0 });
    let target = strata(knot, Stratum::Horizontal { j: 0 });
    let map = ChainMap::from_cell_map(&source, &target, |cell| Some(flip_cell(knot, cell.label)));
    (source, target, map)
}

/// Image of a `C{i=0}` label under the flip.
pub fn flip_cell(knot: &KnotComplex, label: Label) -> Cell {
    let image = knot.iota(label.generator);
    Cell::plain(Label::new(image, knot.grading(image), 0))
}
