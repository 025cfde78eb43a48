//! Random valid complexes of homology-sphere type, for property tests and benchmarks.
//!
//! Building blocks are symmetric staircases, acyclic boxes and acyclic pairs,
//! combined by direct sums and tensor products and then disguised by random
//! conjugation-equivariant filtered changes of basis.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::KnotComplex;
use crate::data::{ComplexData, DiffEntryData, GeneratorData};

/// A working model: `diff[x]` is the set of terms `(y, a, b)` with `y` in `d^{a,b}(x)`.
#[derive(Clone, Debug, Default)]
pub struct Model {
    pub ids: Vec<String>,
    pub grading: Vec<i64>,
    pub iota: Vec<usize>,
    pub diff: Vec<BTreeSet<(usize, u32, u32)>>,
}

impl Model {
    fn with_generators(ids: Vec<String>, grading: Vec<i64>, iota: Vec<usize>) -> Self {
        let diff = vec![BTreeSet::new(); ids.len()];
        Self { ids, grading, iota, diff }
    }

    fn add(&mut self, from: usize, to: usize, a: u32, b: u32) {
        self.diff[from].insert((to, a, b));
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn to_data(&self, name: &str) -> ComplexData {
        ComplexData {
            schema: None,
            name: name.to_string(),
            generators: self
                .ids
                .iter()
                .zip(&self.grading)
                .map(|(id, &s)| GeneratorData { id: id.clone(), s })
                .collect(),
            diff: self
                .diff
                .iter()
                .enumerate()
                .flat_map(|(x, terms)| {
                    terms.iter().map(move |&(y, a, b)| DiffEntryData {
                        from: self.ids[x].clone(),
                        to: self.ids[y].clone(),
                        a,
                        b,
                    })
                })
                .collect(),
            involution: self
                .ids
                .iter()
                .enumerate()
                .map(|(x, id)| (id.clone(), self.ids[self.iota[x]].clone()))
                .collect(),
        }
    }

    pub fn from_complex(knot: &KnotComplex) -> Self {
        let mut model = Self::with_generators(
            knot.ids().to_vec(),
            (0..knot.len()).map(|x| knot.grading(x)).collect(),
            (0..knot.len()).map(|x| knot.iota(x)).collect(),
        );
        for e in knot.entries() {
            model.add(e.from, e.to, e.a, e.b);
        }
        model
    }
}

/// Which staircase generators are sources.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StaircaseOrientation {
    EvenSources,
    OddSources,
}

/// A symmetric staircase with step lengths `half` followed by their mirror image.
pub fn staircase(half: &[u32], orientation: StaircaseOrientation) -> Model {
    let lengths: Vec<u32> = half.iter().copied().chain(half.iter().rev().copied()).collect();
    let count = lengths.len() + 1;
    let top: i64 = half.iter().map(|&l| i64::from(l)).sum();
    let mut grading = Vec::with_capacity(count);
    let mut s = top;
    grading.push(s);
    for &l in &lengths {
        s -= i64::from(l);
        grading.push(s);
    }
    let ids = (0..count).map(|t| format!("z{t}")).collect();
    let iota = (0..count).map(|t| count - 1 - t).collect();
    let mut model = Model::with_generators(ids, grading, iota);
    let parity = match orientation {
        StaircaseOrientation::EvenSources => 0,
        StaircaseOrientation::OddSources => 1,
    };
    for t in (parity..count).step_by(2) {
        if t + 1 < count {
            model.add(t, t + 1, lengths[t], 0);
        }
        if t > 0 {
            model.add(t, t - 1, 0, lengths[t - 1]);
        }
    }
    model
}

/// An acyclic square `u → p, r → q` of side `n` centred at grading zero.
pub fn acyclic_box(side: u32) -> Model {
    let n = i64::from(side);
    let ids = ["u", "p", "r", "q"].iter().map(|s| s.to_string()).collect();
    let mut model = Model::with_generators(ids, vec![0, n, -n, 0], vec![0, 2, 1, 3]);
    model.add(0, 1, 0, side);
    model.add(0, 2, side, 0);
    model.add(1, 3, side, 0);
    model.add(2, 3, 0, side);
    model
}

/// A conjugation-fixed acyclic pair at grading zero.
pub fn fixed_pair() -> Model {
    let mut model = Model::with_generators(vec!["x".into(), "y".into()], vec![0, 0], vec![0, 1]);
    model.add(0, 1, 0, 0);
    model
}

/// Two acyclic pairs at gradings `±s`, exchanged by conjugation.
pub fn swapped_pairs(s: i64) -> Model {
    let ids = ["x", "y", "xc", "yc"].iter().map(|v| v.to_string()).collect();
    let mut model = Model::with_generators(ids, vec![s, s, -s, -s], vec![2, 3, 0, 1]);
    model.add(0, 1, 0, 0);
    model.add(2, 3, 0, 0);
    model
}

/// Direct sum; generator ids are prefixed to stay distinct.
pub fn direct_sum(parts: &[(&str, &Model)]) -> Model {
    let mut sum = Model::default();
    for (prefix, part) in parts {
        let offset = sum.len();
        sum.ids.extend(part.ids.iter().map(|id| format!("{prefix}{id}")));
        sum.grading.extend(&part.grading);
        sum.iota.extend(part.iota.iter().map(|&x| x + offset));
        sum.diff.extend(
            part.diff.iter().map(|terms| terms.iter().map(|&(y, a, b)| (y + offset, a, b)).collect::<BTreeSet<_>>()),
        );
    }
    sum
}

/// Tensor product with the Leibniz differential and diagonal conjugation.
pub fn tensor(left: &Model, right: &Model) -> Model {
    let width = right.len();
    let pair = |x: usize, y: usize| x * width + y;
    let mut ids = Vec::new();
    let mut grading = Vec::new();
    let mut iota = Vec::new();
    for x in 0..left.len() {
        for y in 0..width {
            ids.push(format!("{}.{}", left.ids[x], right.ids[y]));
            grading.push(left.grading[x] + right.grading[y]);
            iota.push(pair(left.iota[x], right.iota[y]));
        }
    }
    let mut model = Model::with_generators(ids, grading, iota);
    for x in 0..left.len() {
        for y in 0..width {
            for &(x2, a, b) in &left.diff[x] {
                model.add(pair(x, y), pair(x2, y), a, b);
            }
            for &(y2, a, b) in &right.diff[y] {
                model.add(pair(x, y), pair(x, y2), a, b);
            }
        }
    }
    model
}

type Terms = BTreeMap<(usize, u32, u32), bool>;

fn toggle_term(terms: &mut Terms, key: (usize, u32, u32)) {
    *terms.entry(key).or_insert(false) ^= true;
}

fn apply(map: &[BTreeSet<(usize, u32, u32)>], input: &Terms) -> Terms {
    let mut out = Terms::new();
    for (&(x, a, b), &present) in input {
        if present {
            for &(y, a2, b2) in &map[x] {
                toggle_term(&mut out, (y, a + a2, b + b2));
            }
        }
    }
    out
}

/// Replaces the differential by `Φ∂Φ` for a random equivariant filtered
/// involution `Φ = 1 + N`. Returns false if no admissible term was found.
pub fn scramble_step<R: Rng + ?Sized>(model: &mut Model, rng: &mut R, max_extra: u32) -> bool {
    let n = model.len();
    if n < 2 {
        return false;
    }
    for _ in 0..32 {
        let x = rng.gen_range(0..n);
        let y = rng.gen_range(0..n);
        if y == x || y == model.iota[x] {
            continue;
        }
        let diff = model.grading[x] - model.grading[y];
        let base_a = diff.max(0) as u32;
        let a = base_a + rng.gen_range(0..=max_extra);
        let b = (i64::from(a) - diff) as u32;
        let mut nilpotent = vec![BTreeSet::new(); n];
        nilpotent[x].insert((y, a, b));
        nilpotent[model.iota[x]].insert((model.iota[y], b, a));
        let phi: Vec<BTreeSet<_>> = (0..n)
            .map(|g| {
                let mut terms: Terms = nilpotent[g].iter().map(|&t| (t, true)).collect();
                toggle_term(&mut terms, (g, 0, 0));
                terms.into_iter().filter(|&(_, p)| p).map(|(t, _)| t).collect()
            })
            .collect();
        let new_diff = (0..n)
            .map(|g| {
                let start: Terms = [((g, 0, 0), true)].into_iter().collect();
                let out = apply(&phi, &apply(&model.diff, &apply(&phi, &start)));
                out.into_iter().filter(|&(_, p)| p).map(|(t, _)| t).collect()
            })
            .collect();
        model.diff = new_diff;
        return true;
    }
    false
}

/// Renames generators to `g0, g1, …` after a random permutation.
pub fn shuffle_ids<R: Rng + ?Sized>(model: &Model, rng: &mut R) -> Model {
    let n = model.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut position = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let mut out = Model::with_generators(
        (0..n).map(|k| format!("g{k}")).collect(),
        order.iter().map(|&old| model.grading[old]).collect(),
        order.iter().map(|&old| position[model.iota[old]]).collect(),
    );
    for (new, &old) in order.iter().enumerate() {
        for &(y, a, b) in &model.diff[old] {
            out.add(new, position[y], a, b);
        }
    }
    out
}

fn random_staircase<R: Rng + ?Sized>(rng: &mut R, count: usize, max_step: u32) -> Model {
    debug_assert!(count % 2 == 1);
    let half: Vec<u32> = (0..count / 2).map(|_| rng.gen_range(1..=max_step)).collect();
    let orientation =
        if rng.gen_bool(0.5) { StaircaseOrientation::EvenSources } else { StaircaseOrientation::OddSources };
    staircase(&half, orientation)
}

fn random_core<R: Rng + ?Sized>(rng: &mut R, budget: usize, max_step: u32) -> Model {
    let odd_up_to = |limit: usize| (limit.max(1) - 1) / 2;
    let tensor_fits = budget >= 9;
    if tensor_fits && rng.gen_bool(0.5) {
        let left = 2 * rng.gen_range(1..=odd_up_to(budget / 3)) + 1;
        let right_max = budget / left;
        let right = 2 * rng.gen_range(1..=odd_up_to(right_max).max(1)) + 1;
        if left * right <= budget {
            let l = random_staircase(rng, left, max_step);
            let r = random_staircase(rng, right, max_step);
            return tensor(&l, &r);
        }
    }
    let count = 2 * rng.gen_range(0..=odd_up_to(budget)) + 1;
    random_staircase(rng, count, max_step)
}

/// A random valid complex with exactly `generators` generators and `ĤF` of rank one.
/// `generators` must be odd.
pub fn random_complex_exact<R: Rng + ?Sized>(rng: &mut R, generators: usize, name: &str) -> KnotComplex {
    assert!(generators % 2 == 1, "a rank-one complex has an odd number of generators");
    let max_step = if generators > 15 { 2 } else { 3 };
    let core = random_core(rng, generators, max_step);
    let mut parts = vec![("c", core)];
    let mut remaining = generators - parts[0].1.len();
    let (min_s, max_s) = {
        let g = &parts[0].1.grading;
        (*g.iter().min().unwrap_or(&0), *g.iter().max().unwrap_or(&0))
    };
    let span = max_s.max(-min_s).max(1);
    let mut filler = 0;
    while remaining > 0 {
        let piece = match rng.gen_range(0..3) {
            0 if remaining >= 4 => acyclic_box(rng.gen_range(1..=span as u32)),
            1 if remaining >= 4 => swapped_pairs(rng.gen_range(1..=span)),
            _ => fixed_pair(),
        };
        remaining -= piece.len();
        parts.push(if filler % 2 == 0 { ("f", piece) } else { ("h", piece) });
        filler += 1;
    }
    let prefixed: Vec<(String, &Model)> = parts.iter().enumerate().map(|(k, (p, m))| (format!("{p}{k}_"), m)).collect();
    let refs: Vec<(&str, &Model)> = prefixed.iter().map(|(p, m)| (p.as_str(), *m)).collect();
    let mut model = direct_sum(&refs);
    let steps = generators.min(40) + rng.gen_range(0..=generators.min(10));
    for _ in 0..steps {
        scramble_step(&mut model, rng, 1);
    }
    let model = shuffle_ids(&model, rng);
    KnotComplex::new(&model.to_data(name)).expect("random construction yields a valid complex")
}

/// A random valid rank-one complex with at most `max_generators` generators.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, max_generators: usize, name: &str) -> KnotComplex {
    let max_odd = if max_generators % 2 == 1 { max_generators } else { max_generators.saturating_sub(1) };
    let generators = 2 * rng.gen_range(0..=max_odd / 2) + 1;
    random_complex_exact(rng, generators, name)
}
