use bypass::{chain_f, composite_identities_check, nilpotency_check, Bypass, ChainBypass, GlobalMaps, Vertex};
use f2linalg::{rank, rank_profile, F2Matrix, F2Vector};
use knotcx::{fixtures, random, Cell, KnotComplex, Label, Piece};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> KnotComplex {
    fixtures::by_name(name).unwrap()
}

fn all_fixtures() -> Vec<KnotComplex> {
    fixtures::ALL.iter().map(|n| fixture(n)).collect()
}

#[test]
fn chain_map_examples() {
    let (source, target, map) = chain_f(&fixture("UNKNOT"), 0, ChainBypass::Inclusion);
    assert_eq!(map.matrix.shape(), (3, 2));
    assert_eq!(rank(&map.matrix), 2);
    assert!(map.is_chain_map(&source, &target));

    let tref = fixture("TREF_A");
    let (source, target, map) = chain_f(&tref, 0, ChainBypass::Quotient);
    assert!(map.is_chain_map(&source, &target));
    assert_eq!(rank(&map.matrix), 1);
    assert_eq!(target.dim(), 1);
    assert_eq!(tref.id(target.cells()[0].label.generator), "b");
    assert_eq!(rank_profile(&map.matrix).c, 0);
}

#[test]
fn short_exact_sequences() {
    for knot in all_fixtures() {
        let g = knot.genus() as i64;
        for s in -g - 2..=g + 2 {
            let maps: Vec<_> = ChainBypass::ALL.iter().map(|&w| chain_f(&knot, s, w)).collect();
            for (source, target, map) in &maps {
                assert!(map.is_chain_map(source, target), "{} s={s}", knot.name());
            }
            for (sub, quot) in [(0, 1), (2, 3)] {
                let inc = &maps[sub].2.matrix;
                let proj = &maps[quot].2.matrix;
                assert!((proj * inc).is_zero());
                assert_eq!(rank(inc), inc.cols());
                assert_eq!(rank(proj), proj.rows());
                assert_eq!(rank(inc) + rank(proj), inc.rows());
            }
        }
    }
}

#[test]
fn triangles_exact_on_fixtures() {
    for knot in all_fixtures() {
        let bypass = Bypass::new(&knot);
        bypass.check_vanishing().unwrap();
        for s in -3..=3 {
            let t = bypass.triangle(&knot, s).unwrap();
            assert!(t.is_exact(), "{} s={s}: {:?}", knot.name(), t.exactness_failures());
            assert_eq!(t.h0, rank(&t.f_inf) + rank(&t.f_1));
        }
    }
}

#[test]
fn support_windows() {
    for knot in all_fixtures() {
        let bypass = Bypass::new(&knot);
        let g = bypass.genus();
        let (lo, hi) = bypass.range();
        for s in lo..=hi {
            let level = bypass.level(s).unwrap();
            if !(-g..g).contains(&s) {
                assert_eq!(level.rank(Vertex::Zero), 0);
            }
            if !(-g..=g).contains(&s) {
                assert_eq!(level.rank(Vertex::One), 0);
                assert_eq!(level.rank(Vertex::Infinity), 0);
            }
        }
    }
}

#[test]
fn unknot_connecting_map_is_empty() {
    let knot = fixture("UNKNOT");
    let bypass = Bypass::new(&knot);
    let f1 = bypass.f_1(&knot, 0).unwrap();
    assert_eq!(f1.shape(), (0, 1));
}

#[test]
fn tref_bar_connecting_map_by_hand() {
    let knot = fixture("TREF_A");
    let bypass = Bypass::new(&knot);
    let a = knot.index_of("a").unwrap();
    let b = knot.index_of("b").unwrap();
    let level = bypass.level(1).unwrap();
    let below = bypass.level(0).unwrap();
    assert_eq!(level.hinf.rank(), 1);
    let expected =
        below.m0.vector_of(&[Cell::new(Piece::A, Label::new(b, 0, 0)), Cell::new(Piece::T, Label::new(a, 1, 0))]);
    let class = below.h0.class_of(&expected).unwrap();
    assert!(!class.is_zero());
    assert_eq!(bypass.fbar_1(&knot, 1).unwrap().column(0), class);
}

/// Chain-level route: push the representative through the explicit formulas and
/// compare with `d^{a,b}` up to boundaries in the target stratum.
fn chain_level_descending(knot: &KnotComplex, bypass: &Bypass, s: i64) -> bool {
    let level = bypass.level(s).unwrap();
    let below = bypass.level(s - 1).unwrap();
    for rep in level.hinf.representatives() {
        let mut lifted = F2Vector::zeros(level.m1.dim());
        for idx in rep.ones() {
            let label = level.infinity.cells()[idx].label;
            lifted.toggle(level.m1.position(&Cell::new(Piece::A, label)).unwrap());
        }
        let image = level.m1.boundary().mul_vec(&lifted);
        // Into M(i_0^{s-1}), then include into M(i_1^{s-1}), then project to C{i=s-1, j=0}.
        let mut projected = F2Vector::zeros(below.infinity.dim());
        for idx in image.ones() {
            let cell = level.m1.cells()[idx];
            assert!(below.m0.position(&cell).is_some());
            if cell.piece == Piece::A && cell.label.i == s - 1 {
                projected.toggle(below.infinity.position(&Cell::plain(cell.label)).unwrap());
            }
        }
        for idx in rep.ones() {
            let x = level.infinity.cells()[idx].label.generator;
            for e in knot.outgoing(x).filter(|e| (e.a, e.b) == (1, 0)) {
                let cell = Cell::plain(Label::new(e.to, s - 1, 0));
                projected.toggle(below.infinity.position(&cell).unwrap());
            }
        }
        let boundary = below.infinity.boundary();
        let augmented = boundary.hstack(&F2Matrix::from_columns(boundary.rows(), &[projected]));
        if rank(&augmented) != rank(boundary) {
            return false;
        }
    }
    true
}

#[test]
fn composite_identities_on_fixtures() {
    for knot in all_fixtures() {
        let bypass = Bypass::new(&knot);
        let (lo, hi) = bypass.window();
        for s in lo..=hi {
            let check = composite_identities_check(&knot, &bypass, s).unwrap();
            assert!(check.holds(), "{} s={s}: {check:?}", knot.name());
            assert!(chain_level_descending(&knot, &bypass, s));
        }
    }
}

#[test]
fn nilpotency_on_fixtures() {
    let unknot = fixture("UNKNOT");
    let n = nilpotency_check(&unknot, &Bypass::new(&unknot)).unwrap();
    assert_eq!(n.index, Some(1));
    for name in ["TREF_A", "TREF_B", "FIG8"] {
        let knot = fixture(name);
        let n = nilpotency_check(&knot, &Bypass::new(&knot)).unwrap();
        assert!(n.holds() && n.index.unwrap() <= 3, "{name}: {n:?}");
    }
}

#[test]
fn global_maps_shapes() {
    let knot = fixture("FIG8");
    let bypass = Bypass::new(&knot);
    let maps = GlobalMaps::build(&knot, &bypass).unwrap();
    let d0 = maps.total_dim(Vertex::Zero);
    let d1 = maps.total_dim(Vertex::One);
    let dinf = maps.total_dim(Vertex::Infinity);
    assert_eq!(maps.f_inf.shape(), (d1, d0));
    assert_eq!(maps.fbar_1.shape(), (d0, dinf));
    assert_eq!(dinf, 5);
    assert!((&maps.f_0 * &maps.f_inf).is_zero());
    assert!((&maps.fbar_0 * &maps.fbar_inf).is_zero());
}

#[test]
fn random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for k in 0..30 {
        let knot = random::random_complex(&mut rng, 8, &format!("R{k}"));
        let bypass = Bypass::new(&knot);
        bypass.check_vanishing().unwrap();
        let (lo, hi) = bypass.window();
        for s in lo..=hi {
            assert!(bypass.triangle(&knot, s).unwrap().is_exact());
            assert!(composite_identities_check(&knot, &bypass, s).unwrap().holds());
        }
        assert!(nilpotency_check(&knot, &bypass).unwrap().holds());
    }
}
