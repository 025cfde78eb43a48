use blocks::{admissible_change, classify, normalize, random_invertible, AdmissibleChange, BlockData};
use bypass::Vertex;
use f2linalg::F2Matrix;
use knotcx::fixtures;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splice::{
    assemble, block_bounds, hat_estimates, special_pair_class, splice_rank, BoundCase, HatEstimates, SpecialCase,
    SpecialClass, SpliceError, PATTERNS,
};

const NONTRIVIAL: [&str; 3] = ["TREF_A", "TREF_B", "FIG8"];

fn blocks_of(name: &str) -> BlockData {
    normalize(&fixtures::by_name(name).unwrap()).unwrap()
}

/// Dense reference evaluator that reads the grid from text.
mod oracle {
    use blocks::BlockData;

    pub type Dense = Vec<Vec<u8>>;

    const GRID: [[&str; 6]; 6] = [
        ["Dinf1 B11 * B12 A02", "B11 A01 * I", "B11 B01 * I", "Dinf1 A11 * B12 A02", "I * B12 B02", "0"],
        ["I * Binf2 B12", "D11 A01 * Binf2 A12", "D11 B01 * Binf2 A12", "0", "B01 Binf1 * I", "B01 Ainf1 * I"],
        ["I * Dinf2 B12", "I * I + D11 A01 * Dinf2 A12", "D11 B01 * Dinf2 A12", "0", "0", "0"],
        [
            "Binf1 B11 * I",
            "0",
            "I * B02 Binf2",
            "Binf1 A11 * I",
            "D01 Binf1 * B02 Ainf2 + X11 Binf1 * B02 X12",
            "D01 Ainf1 * B02 Ainf2 + X11 Ainf1 * B02 X12",
        ],
        ["Dinf1 B11 * D12 A02", "0", "0", "I * I + Dinf1 A11 * D12 A02", "I * D12 B02", "0"],
        [
            "0",
            "0",
            "I * D02 Binf2",
            "0",
            "D01 Binf1 * D02 Ainf2 + X11 Binf1 * D02 X12",
            "I * I + D01 Ainf1 * D02 Ainf2 + X11 Ainf1 * D02 X12",
        ],
    ];

    fn dense(m: &f2linalg::F2Matrix) -> Dense {
        (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c) as u8).collect()).collect()
    }

    /// Named block of a package. Shapes come from the a-values since empty
    /// rows lose their column count.
    fn block(bd: &BlockData, token: &str) -> (Dense, (usize, usize)) {
        let (kind, vertex) = token.split_at(1);
        let (a0, a1, ai) = (bd.a0, bd.a1, bd.ainf);
        // (top, bottom) splits: H0 = (ainf, a1), H1 = (a0, ainf), Hinf = (a1, a0)
        let (tau, top, bottom) = match vertex {
            "0" => (&bd.tau0, ai, a1),
            "1" => (&bd.tau1, a0, ai),
            "inf" => (&bd.tauinf, a1, a0),
            _ => panic!("bad vertex {token}"),
        };
        let t = dense(tau);
        let cut = |r0: usize, r1: usize, c0: usize, c1: usize| -> (Dense, (usize, usize)) {
            ((r0..r1).map(|r| t[r][c0..c1].to_vec()).collect(), (r1 - r0, c1 - c0))
        };
        let n = top + bottom;
        match kind {
            "A" => cut(0, top, 0, top),
            "B" => cut(0, top, top, n),
            "C" => cut(top, n, 0, top),
            "D" => cut(top, n, top, n),
            "X" => {
                let order: [&str; 3] = match vertex {
                    "0" => ["B1", "B0", "Binf"],
                    "1" => ["Binf", "B1", "B0"],
                    _ => ["B0", "Binf", "B1"],
                };
                let mut acc = block(bd, order[0]);
                for name in &order[1..] {
                    acc = mul(&acc, &block(bd, name));
                }
                acc
            }
            _ => panic!("bad block {token}"),
        }
    }

    fn mul(a: &(Dense, (usize, usize)), b: &(Dense, (usize, usize))) -> (Dense, (usize, usize)) {
        assert_eq!(a.1 .1, b.1 .0, "inner dimensions");
        let (n, m, p) = (a.1 .0, a.1 .1, b.1 .1);
        let out =
            (0..n).map(|i| (0..p).map(|j| (0..m).fold(0, |s, k| s ^ (a.0[i][k] & b.0[k][j]))).collect()).collect();
        (out, (n, p))
    }

    fn kron(a: &(Dense, (usize, usize)), b: &(Dense, (usize, usize))) -> (Dense, (usize, usize)) {
        let (r, c) = (a.1 .0 * b.1 .0, a.1 .1 * b.1 .1);
        let out = (0..r)
            .map(|i| (0..c).map(|j| a.0[i / b.1 .0][j / b.1 .1] & b.0[i % b.1 .0][j % b.1 .1]).collect())
            .collect();
        (out, (r, c))
    }

    fn identity(n: usize) -> (Dense, (usize, usize)) {
        ((0..n).map(|i| (0..n).map(|j| (i == j) as u8).collect()).collect(), (n, n))
    }

    /// Product of one side; `None` for a bare identity. Tokens end in the knot index.
    fn side(text: &str, first: &BlockData, second: &BlockData) -> Option<(Dense, (usize, usize))> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["I"] {
            return None;
        }
        let mut acc: Option<(Dense, (usize, usize))> = None;
        for token in tokens {
            let (name, knot) = token.split_at(token.len() - 1);
            let bd = if knot == "1" { first } else { second };
            let m = block(bd, name);
            acc = Some(match acc {
                None => m,
                Some(a) => mul(&a, &m),
            });
        }
        acc
    }

    /// Returns the matrix and its shape.
    pub fn splice(first: &BlockData, second: &BlockData) -> (Dense, (usize, usize)) {
        let (a1, b1) = ([first.a0, first.a1, first.ainf], [second.a0, second.a1, second.ainf]);
        let (z, o, f) = (0, 1, 2);
        // Row and column dimensions from the a-values.
        let rows = [a1[z] * b1[z], a1[f] * b1[o], a1[f] * b1[z], a1[o] * b1[f], a1[z] * b1[f], a1[o] * b1[o]];
        let cols = [a1[f] * b1[f], a1[f] * b1[z], a1[o] * b1[z], a1[z] * b1[f], a1[z] * b1[o], a1[o] * b1[o]];
        let total = (rows.iter().sum::<usize>(), cols.iter().sum::<usize>());
        let mut out = vec![vec![0u8; total.1]; total.0];
        let mut r0 = 0;
        for (r, row) in GRID.iter().enumerate() {
            let mut c0 = 0;
            for (c, text) in row.iter().enumerate() {
                if *text != "0" {
                    for term in text.split('+') {
                        let (left, right) = term.split_once('*').unwrap();
                        let (l, rt) = (side(left, first, second), side(right, first, second));
                        let block = match (l, rt) {
                            (Some(l), Some(rt)) => kron(&l, &rt),
                            (None, Some(rt)) => {
                                kron(&identity(rows[r].checked_div(rt.1 .0).unwrap_or(cols[c] / rt.1 .1.max(1))), &rt)
                            }
                            (Some(l), None) => {
                                kron(&l, &identity(rows[r].checked_div(l.1 .0).unwrap_or(cols[c] / l.1 .1.max(1))))
                            }
                            (None, None) => identity(rows[r]),
                        };
                        assert_eq!(block.1, (rows[r], cols[c]), "entry ({r},{c}) term {term}");
                        for i in 0..rows[r] {
                            for j in 0..cols[c] {
                                out[r0 + i][c0 + j] ^= block.0[i][j];
                            }
                        }
                    }
                }
                c0 += cols[c];
            }
            r0 += rows[r];
        }
        (out, total)
    }

    pub fn rank((m, (rows, cols)): &(Dense, (usize, usize))) -> usize {
        let mut m = m.clone();
        let mut rank = 0;
        for col in 0..*cols {
            let Some(p) = (rank..*rows).find(|&r| m[r][col] == 1) else { continue };
            m.swap(rank, p);
            for r in 0..*rows {
                if r != rank && m[r][col] == 1 {
                    let pivot = m[rank].clone();
                    m[r].iter_mut().zip(pivot).for_each(|(x, y)| *x ^= y);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// A random involution of size `n` with at least one swapped pair when possible.
fn random_involution(n: usize, rng: &mut ChaCha8Rng) -> F2Matrix {
    let pairs = if n >= 2 { rng.gen_range(0..=n / 2) } else { 0 };
    let mut j = F2Matrix::identity(n);
    for p in 0..pairs {
        let (a, b) = (2 * p, 2 * p + 1);
        j.set(a, a, false);
        j.set(b, b, false);
        j.set(a, b, true);
        j.set(b, a, true);
    }
    let p = random_invertible(n, rng);
    let inv = f2linalg::inverse(&p).unwrap();
    &(&p * &j) * &inv
}

/// Random block package satisfying parity, `τ² = Id` and nilpotent `X_v`.
fn random_package(rng: &mut ChaCha8Rng, max: usize) -> BlockData {
    loop {
        let a0 = rng.gen_range(0..=max);
        let a1 = rng.gen_range(0..=max);
        let ainf = rng.gen_range(0..=max);
        let n = |v| {
            let (t, b) = BlockData::split(a0, a1, ainf, v);
            t + b
        };
        let taus = [n(Vertex::Zero), n(Vertex::One), n(Vertex::Infinity)].map(|d| random_involution(d, rng));
        let [t0, t1, ti] = taus;
        if let Ok(bd) = BlockData::from_taus(a0, a1, ainf, t0, t1, ti) {
            if bd.law_failures().is_empty() {
                return bd;
            }
        }
    }
}

#[test]
fn unknot_with_unknot() {
    let u = blocks_of("UNKNOT");
    let m = assemble(&u, &u).unwrap();
    assert_eq!(m.row_dims, [1, 0, 0, 0, 0, 0]);
    assert_eq!(m.col_dims, [0; 6]);
    assert_eq!(m.i(), 1);
}

#[test]
fn block_dimensions_follow_a_values() {
    let names = ["UNKNOT", "TREF_A", "TREF_B", "FIG8"];
    for a in names {
        for b in names {
            let (p, q) = (blocks_of(a), blocks_of(b));
            let m = assemble(&p, &q).unwrap();
            let rows = [p.a0 * q.a0, p.ainf * q.a1, p.ainf * q.a0, p.a1 * q.ainf, p.a0 * q.ainf, p.a1 * q.a1];
            let cols = [p.ainf * q.ainf, p.ainf * q.a0, p.a1 * q.a0, p.a0 * q.ainf, p.a0 * q.a1, p.a1 * q.a1];
            assert_eq!(m.row_dims, rows, "{a} {b}");
            assert_eq!(m.col_dims, cols, "{a} {b}");
            let (rows, cols) = m.matrix.shape();
            assert_eq!((rows + cols) % 2, 1, "{a} {b}: rows - cols is odd");
        }
    }
}

#[test]
fn assembly_matches_text_oracle() {
    let names = ["UNKNOT", "TREF_A", "TREF_B", "FIG8"];
    for a in names {
        for b in names {
            let (p, q) = (blocks_of(a), blocks_of(b));
            let m = assemble(&p, &q).unwrap();
            let reference = oracle::splice(&p, &q);
            assert_eq!(m.matrix.shape(), reference.1, "{a} {b}");
            for r in 0..reference.1 .0 {
                for c in 0..reference.1 .1 {
                    assert_eq!(m.matrix.get(r, c) as u8, reference.0[r][c], "{a} {b} entry ({r},{c})");
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5b1);
    for _ in 0..40 {
        let (p, q) = (random_package(&mut rng, 3), random_package(&mut rng, 3));
        let m = assemble(&p, &q).unwrap();
        let reference = oracle::splice(&p, &q);
        assert_eq!(m.profile.rank, oracle::rank(&reference));
    }
}

#[test]
fn fixture_pairs_frozen() {
    // (first, second, i, k, c)
    let expect = [
        ("TREF_A", "TREF_A", 7, 5, 2),
        ("TREF_A", "TREF_B", 9, 5, 4),
        ("TREF_A", "FIG8", 9, 4, 5),
        ("TREF_B", "TREF_A", 9, 5, 4),
        ("TREF_B", "TREF_B", 7, 3, 4),
        ("TREF_B", "FIG8", 9, 5, 4),
        ("FIG8", "TREF_A", 9, 4, 5),
        ("FIG8", "TREF_B", 9, 5, 4),
        ("FIG8", "FIG8", 9, 4, 5),
    ];
    for (a, b, i, k, c) in expect {
        let (p, q) = (blocks_of(a), blocks_of(b));
        let m = assemble(&p, &q).unwrap();
        assert_eq!((m.i(), m.profile.k, m.profile.c), (i, k, c), "{a} {b}");
        assert_eq!(oracle::rank(&oracle::splice(&p, &q)), m.profile.rank, "{a} {b}");
        assert!(i % 2 == 1 && i > 1, "{a} {b}");
        let hat = hat_estimates(&p, &q);
        assert!(hat.k_hat <= k && hat.c_hat <= c, "{a} {b}: {hat:?}");
    }
    let tref_a = fixtures::by_name("TREF_A").unwrap();
    let tref_b = fixtures::by_name("TREF_B").unwrap();
    let fig8 = fixtures::by_name("FIG8").unwrap();
    assert_eq!(splice_rank(&tref_a, &tref_b).unwrap(), 9);
    assert_eq!(splice_rank(&fig8, &tref_a).unwrap(), 9);
}

#[test]
fn symmetry_and_unknot_reported() {
    let names = ["UNKNOT", "TREF_A", "TREF_B", "FIG8"];
    let mut asymmetric = Vec::new();
    for a in names {
        for b in names {
            let forward = assemble(&blocks_of(a), &blocks_of(b)).unwrap().i();
            let backward = assemble(&blocks_of(b), &blocks_of(a)).unwrap().i();
            if forward != backward {
                asymmetric.push((a, b, forward, backward));
            }
        }
    }
    println!("asymmetric pairs: {asymmetric:?}");
    for name in names {
        let i = assemble(&blocks_of("UNKNOT"), &blocks_of(name)).unwrap().i();
        println!("UNKNOT x {name}: i = {i}");
    }
}

#[test]
fn admissible_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for a in NONTRIVIAL {
        for b in NONTRIVIAL {
            let (p, q) = (blocks_of(a), blocks_of(b));
            let base = assemble(&p, &q).unwrap().i();
            for _ in 0..100 {
                let p2 = admissible_change(&p, &AdmissibleChange::random(&p, &mut rng)).unwrap();
                let q2 = admissible_change(&q, &AdmissibleChange::random(&q, &mut rng)).unwrap();
                assert_eq!(assemble(&p2, &q2).unwrap().i(), base, "{a} {b}");
            }
        }
    }
}

#[test]
fn hat_estimates_arithmetic() {
    let class = |m: F2Matrix| blocks::MatrixClass::of(&m);
    let full = blocks::Classification {
        zero: class(F2Matrix::identity(2)),
        one: class(F2Matrix::identity(2)),
        infinity: class(F2Matrix::identity(2)),
        full_rank: true,
    };
    assert_eq!(HatEstimates::from_classes(&full, &full), HatEstimates { k_hat: 0, c_hat: 0 });
    let mut first = full;
    first.one = class(F2Matrix::from_rows(2, &[[1, 0], [0, 0]]));
    let mut second = full;
    second.one = class(F2Matrix::zeros(2, 2));
    let hat = HatEstimates::from_classes(&first, &second);
    assert_eq!(hat.k_hat, 2);
}

#[test]
fn fixture_pairs_are_not_special() {
    for a in NONTRIVIAL {
        for b in NONTRIVIAL {
            let class = special_pair_class(&blocks_of(a), &blocks_of(b)).unwrap();
            assert!(matches!(class, SpecialClass::NotSpecial { .. }), "{a} {b}: {class:?}");
        }
    }
}

#[test]
fn synthetic_special_pair_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    let mut found_g = 0;
    let mut reported = Vec::new();
    for _ in 0..4000 {
        let p = random_package(&mut rng, 2);
        let q = random_package(&mut rng, 2);
        let i = assemble(&p, &q).unwrap().i();
        if i != 1 {
            continue;
        }
        let class = special_pair_class(&p, &q).unwrap();
        if classify(&p).full_rank {
            assert_eq!(class, SpecialClass::Case { case: SpecialCase::G, swapped: false });
            found_g += 1;
        } else {
            reported.push(class);
        }
    }
    assert!(found_g > 0, "search found no special pair with a full-rank first side");
    println!("full-rank first side: {found_g}; other special pairs: {reported:?}");
}

fn satisfies(bd: &BlockData, pattern: splice::Pattern, case: BoundCase) -> bool {
    let c = classify(bd);
    let inj = case == BoundCase::K;
    let ok = |v: Vertex, injective: bool| {
        let m = c.get(v);
        if injective {
            m.injective
        } else {
            m.surjective
        }
    };
    ok(pattern.circle, inj) && ok(pattern.bullet, inj) && ok(pattern.star, !inj)
}

#[test]
fn bound_inequalities_on_synthetic_data() {
    // First side with every B block nonzero, as for a nontrivial knot.
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    let mut checked = [[0usize; 2]; 3];
    for _ in 0..60_000 {
        let p = random_package(&mut rng, 4);
        if Vertex::ALL.iter().any(|&v| p.blocks(v).b.is_zero()) {
            continue;
        }
        for (n, pattern) in PATTERNS.iter().enumerate() {
            for (m, case) in [BoundCase::K, BoundCase::C].into_iter().enumerate() {
                if !satisfies(&p, *pattern, case) {
                    continue;
                }
                let q = random_package(&mut rng, 3);
                let report = block_bounds(&p, &q, *pattern, case).unwrap();
                assert!(report.satisfied(), "{pattern:?} {case:?}: {report:?}");
                checked[n][m] += 1;
            }
        }
        if checked.iter().flatten().all(|&c| c >= 8) {
            break;
        }
    }
    assert!(checked.iter().flatten().all(|&c| c >= 8), "too few samples: {checked:?}");
}

#[test]
fn bound_inequalities_on_random_knots() {
    let mut rng = ChaCha8Rng::seed_from_u64(65);
    let packages: Vec<BlockData> = (0..80)
        .map(|n| normalize(&knotcx::random::random_complex(&mut rng, 13, &format!("r{n}"))).unwrap())
        .filter(|bd| (bd.a0, bd.a1, bd.ainf) != (1, 0, 0))
        .collect();
    let mut hits = 0;
    for p in &packages {
        for q in packages.iter().take(12) {
            for pattern in PATTERNS {
                for case in [BoundCase::K, BoundCase::C] {
                    if let Ok(report) = block_bounds(p, q, pattern, case) {
                        hits += 1;
                        assert!(report.satisfied(), "{pattern:?} {case:?}: {report:?}");
                    }
                }
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn bounds_with_trivial_first_side_reported() {
    // Every hypothesis holds vacuously for the unknot; the cokernel bound of
    // case C exceeds the actual cokernel.
    let report = block_bounds(&blocks_of("UNKNOT"), &blocks_of("TREF_A"), PATTERNS[0], BoundCase::C).unwrap();
    assert_eq!((report.actual_k, report.actual_c), (0, 1));
    assert!(!report.satisfied());
    println!("UNKNOT x TREF_A, case C (0,1,inf): {report:?}");
}

#[test]
fn bound_inequalities_on_fixtures() {
    let mut hits = 0;
    for a in NONTRIVIAL {
        for b in ["UNKNOT", "TREF_A", "TREF_B", "FIG8"] {
            let (p, q) = (blocks_of(a), blocks_of(b));
            for pattern in PATTERNS {
                for case in [BoundCase::K, BoundCase::C] {
                    match block_bounds(&p, &q, pattern, case) {
                        Ok(report) => {
                            hits += 1;
                            assert!(report.satisfied(), "{a} {b} {pattern:?} {case:?}: {report:?}");
                        }
                        Err(SpliceError::Hypothesis { .. }) => {}
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn bound_hypothesis_error_names_matrix() {
    // FIG8 has a rank-one 2×3 B_∞, neither injective nor surjective.
    let fig8 = blocks_of("FIG8");
    let err = block_bounds(&fig8, &fig8, PATTERNS[0], BoundCase::K).unwrap_err();
    match err {
        SpliceError::Hypothesis { matrix, required } => {
            assert!(matrix.starts_with("B_"), "{matrix}");
            assert!(required == "injective" || required == "surjective");
        }
        other => panic!("unexpected {other}"),
    }
}
