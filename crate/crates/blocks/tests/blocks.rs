use blocks::{
    admissible_change, classify, normalize, normalize_with_details, random_invertible, shifted_zero_mismatches, tau,
    AdmissibleChange, BlockData, BlockError, MatrixClass,
};
use bypass::{Bypass, GlobalMaps, Vertex};
use f2linalg::{inverse, rank_profile, F2Matrix};
use knotcx::{fixtures, random, KnotComplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> KnotComplex {
    fixtures::by_name(name).unwrap()
}

fn blocks_of(name: &str) -> BlockData {
    normalize(&fixture(name)).unwrap()
}

#[test]
fn raw_tau_examples() {
    let unknot = fixture("UNKNOT");
    let bypass = Bypass::new(&unknot);
    let maps = GlobalMaps::build(&unknot, &bypass).unwrap();
    assert_eq!(tau(&unknot, &bypass, &maps, Vertex::Infinity).unwrap(), F2Matrix::identity(1));

    let tref = fixture("TREF_A");
    let bypass = Bypass::new(&tref);
    let maps = GlobalMaps::build(&tref, &bypass).unwrap();
    let t = tau(&tref, &bypass, &maps, Vertex::Infinity).unwrap();
    assert_eq!(maps.gradings(Vertex::Infinity), vec![-1, 0, 1]);
    assert_eq!(t, F2Matrix::from_rows(3, &[[0, 0, 1], [0, 1, 0], [1, 0, 0]]));
    for name in fixtures::ALL {
        let knot = fixture(name);
        let bypass = Bypass::new(&knot);
        let maps = GlobalMaps::build(&knot, &bypass).unwrap();
        for v in Vertex::ALL {
            let t = tau(&knot, &bypass, &maps, v).unwrap();
            assert!((&t * &t).is_identity(), "{name} tau_{}", v.name());
        }
    }
}

#[test]
fn frozen_ranks() {
    let expect = [("UNKNOT", (1, 0, 0)), ("TREF_A", (2, 1, 3)), ("TREF_B", (1, 2, 2)), ("FIG8", (3, 2, 2))];
    for (name, (a0, a1, ainf)) in expect {
        let bd = blocks_of(name);
        assert_eq!((bd.a0, bd.a1, bd.ainf), (a0, a1, ainf), "{name}");
    }
}

#[test]
fn unknot_blocks_are_degenerate() {
    let bd = blocks_of("UNKNOT");
    assert_eq!(bd.zero.b.shape(), (0, 0));
    assert_eq!(bd.one.b.shape(), (1, 0));
    assert_eq!(bd.infinity.b.shape(), (0, 1));
    let class = classify(&bd);
    for v in Vertex::ALL {
        let c = class.get(v);
        assert!(c.injective && c.surjective && c.full_rank);
    }
}

fn check_laws(knot: &KnotComplex) {
    let details = normalize_with_details(knot, &Bypass::new(knot)).unwrap();
    let bd = &details.blocks;
    assert_eq!(bd.a1 % 2, bd.ainf % 2);
    assert_ne!(bd.a1 % 2, bd.a0 % 2);
    assert_eq!(bd.zero.b.shape(), (bd.ainf, bd.a1));
    assert_eq!(bd.one.b.shape(), (bd.a0, bd.ainf));
    assert_eq!(bd.infinity.b.shape(), (bd.a1, bd.a0));
    for v in Vertex::ALL {
        assert!((bd.tau(v) * bd.tau(v)).is_identity());
    }
    assert_eq!(bd.x0, &(&bd.one.b * &bd.zero.b) * &bd.infinity.b);
    assert_eq!(bd.x1, &(&bd.infinity.b * &bd.one.b) * &bd.zero.b);
    assert_eq!(bd.xinf, &(&bd.zero.b * &bd.infinity.b) * &bd.one.b);
    let bound = 2 * knot.genus() as usize + 2;
    for v in Vertex::ALL {
        assert!(bd.x_nilpotency(v).unwrap() <= bound);
    }
    let maps = &details.maps;
    let [t0, t1, tinf] = &details.raw_taus;
    assert_eq!(maps.fbar_0, &(tinf * &maps.f_0) * t1);
    assert_eq!(maps.fbar_1, &(t0 * &maps.f_1) * tinf);
    assert_eq!(maps.fbar_inf, &(t1 * &maps.f_inf) * t0);
}

#[test]
fn laws_on_fixtures() {
    for name in fixtures::ALL {
        check_laws(&fixture(name));
    }
    for name in ["TREF_A", "TREF_B", "FIG8"] {
        let bd = blocks_of(name);
        for v in Vertex::ALL {
            assert!(!bd.blocks(v).b.is_zero(), "{name} B_{}", v.name());
        }
    }
    let fig8 = blocks_of("FIG8");
    for v in Vertex::ALL {
        assert!(fig8.x_nilpotency(v).unwrap() <= 2);
    }
}

#[test]
fn laws_on_random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..50 {
        check_laws(&random::random_complex(&mut rng, 8, &format!("R{k}")));
    }
}

#[test]
fn printed_shift_is_inconsistent_for_nontrivial_knots() {
    assert!(shifted_zero_mismatches(&Bypass::new(&fixture("UNKNOT"))).is_empty());
    for name in ["TREF_A", "TREF_B", "FIG8"] {
        assert!(!shifted_zero_mismatches(&Bypass::new(&fixture(name))).is_empty());
    }
}

#[test]
fn classification_of_synthetic_zero_block() {
    let id = F2Matrix::identity(2);
    let bd = BlockData::from_taus(1, 1, 1, id.clone(), id.clone(), id).unwrap();
    let class = classify(&bd);
    assert!(!class.full_rank);
    assert_eq!((class.one.k, class.one.c), (bd.ainf, bd.a0));
    assert_eq!(MatrixClass::of(&F2Matrix::zeros(0, 3)).k, 3);
}

#[test]
fn from_taus_rejects_bad_input() {
    let id = F2Matrix::identity(2);
    let err = BlockData::from_taus(1, 1, 1, id.clone(), id.clone(), F2Matrix::identity(3)).unwrap_err();
    assert!(matches!(err, BlockError::Shape { .. }));
    let not_involution = F2Matrix::from_rows(2, &[[1, 1], [1, 0]]);
    let err = BlockData::from_taus(1, 1, 1, id.clone(), id, not_involution).unwrap_err();
    assert!(matches!(err, BlockError::TauNotInvolution { .. }));
}

#[test]
fn admissible_changes() {
    let bd = blocks_of("TREF_A");
    assert_eq!(admissible_change(&bd, &AdmissibleChange::identity(&bd)).unwrap(), bd);
    let before = classify(&bd);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let changed = admissible_change(&bd, &AdmissibleChange::random(&bd, &mut rng)).unwrap();
        for v in Vertex::ALL {
            assert!((changed.tau(v) * changed.tau(v)).is_identity());
            assert_eq!(rank_profile(&changed.blocks(v).b), rank_profile(&bd.blocks(v).b));
            assert!(changed.x_nilpotency(v).is_some());
        }
        assert_eq!(classify(&changed), before);
    }
    let mut bad = AdmissibleChange::identity(&bd);
    bad.p0 = F2Matrix::zeros(2, 2);
    assert!(matches!(admissible_change(&bd, &bad), Err(BlockError::NotInvertible { what: "P_0" })));
    let mut bad = AdmissibleChange::identity(&bd);
    bad.y1 = F2Matrix::zeros(1, 1);
    assert!(matches!(admissible_change(&bd, &bad), Err(BlockError::Shape { .. })));
}

/// All invertible matrices of size `n` (small `n` only).
fn general_linear(n: usize) -> Vec<F2Matrix> {
    let bits = n * n;
    (0u32..1 << bits)
        .map(|mask| F2Matrix::from_fn(n, n, |r, c| mask >> (r * n + c) & 1 == 1))
        .filter(f2linalg::is_invertible)
        .collect()
}

fn all_matrices(rows: usize, cols: usize) -> Vec<F2Matrix> {
    (0u32..1 << (rows * cols))
        .map(|mask| F2Matrix::from_fn(rows, cols, |r, c| mask >> (r * cols + c) & 1 == 1))
        .collect()
}

/// `[[0,0,I_r],[0,*,0],[I_r,0,0]]` on the split `(r, n−2r, r)`.
fn has_swap_form(tau: &F2Matrix, r: usize) -> bool {
    let n = tau.rows();
    let middle = r..n - r;
    (0..n).all(|row| {
        (0..n).all(|col| {
            let expected = if row < r {
                col == n - r + row
            } else if row >= n - r {
                col == row - (n - r)
            } else {
                middle.contains(&col) && tau.get(row, col)
            };
            tau.get(row, col) == expected
        })
    })
}

/// Searches the admissible changes acting on one vertex for the standard swap form.
fn swap_form_reachable(bd: &BlockData, vertex: Vertex, r: usize) -> bool {
    let (top, bottom) = BlockData::split(bd.a0, bd.a1, bd.ainf, vertex);
    let tau = bd.tau(vertex);
    for p_top in general_linear(top) {
        for p_bottom in general_linear(bottom) {
            for y in all_matrices(bottom, top) {
                let mut full = F2Matrix::zeros(top + bottom, top + bottom);
                full.paste(0, 0, &p_top);
                full.paste(top, 0, &y);
                full.paste(top, top, &p_bottom);
                let conj = &(&inverse(&full).unwrap() * tau) * &full;
                if has_swap_form(&conj, r) {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn canonical_swap_forms_exist() {
    // Injective-injective-surjective pattern: tau at the first vertex reaches
    // [[0,0,I],[0,*,0],[I,0,0]] with I the size of the bottom block.
    let tref_b = blocks_of("TREF_B");
    let class = classify(&tref_b);
    assert!(class.infinity.injective && class.zero.injective && class.one.surjective);
    let (_, bottom) = BlockData::split(tref_b.a0, tref_b.a1, tref_b.ainf, Vertex::Infinity);
    assert!(swap_form_reachable(&tref_b, Vertex::Infinity, bottom));

    // Surjective-surjective-injective pattern: tau at the second vertex reaches
    // the same shape with I the size of the top block.
    let tref_a = blocks_of("TREF_A");
    let class = classify(&tref_a);
    assert!(class.one.surjective && class.infinity.surjective && class.zero.injective);
    let (top, _) = BlockData::split(tref_a.a0, tref_a.a1, tref_a.ainf, Vertex::Infinity);
    assert!(swap_form_reachable(&tref_a, Vertex::Infinity, top));
    let (top, _) = BlockData::split(tref_b.a0, tref_b.a1, tref_b.ainf, Vertex::One);
    assert!(swap_form_reachable(&tref_b, Vertex::One, top));
}

#[test]
fn random_admissible_helpers() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 0..6 {
        assert!(f2linalg::is_invertible(&random_invertible(n, &mut rng)));
    }
}
