use knotcx::fixtures;
use knotcx::random::{self, StaircaseOrientation};
use knotcx::{flip_map, strata, validate, Cell, ComplexData, KnotComplex, KnotError, Label, Stratum, Violation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> KnotComplex {
    fixtures::by_name(name).unwrap()
}

fn labels(knot: &KnotComplex, complex: &knotcx::ChainComplex) -> Vec<(String, i64, i64)> {
    complex.cells().iter().map(|c| (knot.id(c.label.generator).to_string(), c.label.i, c.label.j)).collect()
}

fn lab(id: &str, i: i64, j: i64) -> (String, i64, i64) {
    (id.to_string(), i, j)
}

#[test]
fn fixtures_validate() {
    for name in fixtures::ALL {
        let data = ComplexData::from_json(fixtures::source(name).unwrap()).unwrap();
        let report = validate(&data);
        assert!(report.is_valid(), "{name}: {report}");
    }
}

#[test]
fn grading_mismatch_names_generator() {
    let mut data = ComplexData::from_json(fixtures::TREF_A).unwrap();
    let entry = data.diff.iter_mut().find(|e| e.from == "a").unwrap();
    entry.a = 0;
    let report = validate(&data);
    assert!(report.violations.iter().any(|v| matches!(v, Violation::GradingMismatch { from, .. } if from == "a")));
    assert!(matches!(KnotComplex::new(&data), Err(KnotError::Invalid { .. })));
}

#[test]
fn square_and_involution_violations_are_reported() {
    let mut data = ComplexData::from_json(fixtures::FIG8).unwrap();
    data.diff.retain(|e| !(e.from == "r" && e.to == "q"));
    let report = validate(&data);
    assert!(report.violations.iter().any(|v| matches!(v, Violation::NonZeroSquare { generator, a: 1, b: 1, target }
        if generator == "u" && target == "q")));
    assert!(report
        .violations
        .iter()
        .any(|v| matches!(v, Violation::InvolutionDifferential { generator, .. } if generator == "p")));

    let mut data = ComplexData::from_json(fixtures::TREF_A).unwrap();
    data.involution.insert("b".into(), "a".into());
    assert!(!validate(&data).is_valid());

    let mut data = ComplexData::from_json(fixtures::UNKNOT).unwrap();
    data.generators.push(data.generators[0].clone());
    assert!(validate(&data).violations.iter().any(|v| matches!(v, Violation::DuplicateId { .. })));
}

#[test]
fn duplicate_entries_are_rejected() {
    let mut data = ComplexData::from_json(fixtures::TREF_A).unwrap();
    data.diff.push(data.diff[0].clone());
    assert!(validate(&data).violations.iter().any(|v| matches!(v, Violation::DuplicateEntry { .. })));
}

#[test]
fn unknown_fields_and_schema() {
    assert!(ComplexData::from_json(r#"{"name":"x","generators":[],"diff":[],"involution":{},"extra":1}"#).is_err());
    let err = KnotComplex::from_json(r#"{"schema":2,"name":"x","generators":[],"diff":[],"involution":{}}"#);
    assert!(matches!(err, Err(KnotError::Schema(2))));
    assert!(KnotComplex::from_json(r#"{"schema":1,"name":"x","generators":[],"diff":[],"involution":{}}"#).is_ok());
}

#[test]
fn strata_examples() {
    let unknot = fixture("UNKNOT");
    let c = strata(&unknot, Stratum::Horizontal { j: 0 });
    assert_eq!(labels(&unknot, &c), vec![lab("b", 0, 0)]);
    assert!(c.boundary().is_zero());

    let tref = fixture("TREF_A");
    let c = strata(&tref, Stratum::Vertical { i: 0 });
    assert_eq!(labels(&tref, &c), vec![lab("a", 0, -1), lab("b", 0, 0), lab("c", 0, 1)]);
    assert_eq!(c.boundary().nonzero_entries(), vec![(1, 2)]);

    let c = strata(&tref, Stratum::ColumnBelow { i_max: 0, j: 0 });
    let mut got = labels(&tref, &c);
    got.sort();
    assert_eq!(got, vec![lab("b", 0, 0), lab("c", -1, 0)]);
    assert!(c.boundary().is_zero());
}

#[test]
fn stratum_parsing() {
    assert_eq!("i=0".parse::<Stratum>().unwrap(), Stratum::Vertical { i: 0 });
    assert_eq!("{i<=2, j=0}".parse::<Stratum>().unwrap(), Stratum::ColumnBelow { i_max: 2, j: 0 });
    assert_eq!("j<=-1,i=0".parse::<Stratum>().unwrap(), Stratum::RowBelow { i: 0, j_max: -1 });
    assert_eq!("i=1,j=-2".parse::<Stratum>().unwrap(), Stratum::Point { i: 1, j: -2 });
    assert!("i<=0,j<=0".parse::<Stratum>().is_err());
    assert!("k=0".parse::<Stratum>().is_err());
    for s in [Stratum::Vertical { i: -3 }, Stratum::RowBelow { i: 0, j_max: 4 }] {
        assert_eq!(s.to_string().parse::<Stratum>().unwrap(), s);
    }
}

#[test]
fn flip_examples() {
    let tref = fixture("TREF_A");
    let (source, target, map) = flip_map(&tref);
    assert!(map.is_chain_map(&source, &target));
    assert!(f2linalg::is_invertible(&map.matrix));
    let image = |id: &str, j: i64| {
        let x = tref.index_of(id).unwrap();
        let col = source.position(&Cell::plain(Label::new(x, 0, j))).unwrap();
        let row = map.matrix.column(col).first_one().unwrap();
        let c = target.cells()[row].label;
        (tref.id(c.generator).to_string(), c.i, c.j)
    };
    assert_eq!(image("a", -1), lab("c", -1, 0));
    assert_eq!(image("b", 0), lab("b", 0, 0));
    assert_eq!(image("c", 1), lab("a", 1, 0));

    let fig8 = fixture("FIG8");
    let (source, target, map) = flip_map(&fig8);
    assert!(map.is_chain_map(&source, &target));
    for (from, to) in [("w", "w"), ("p", "r"), ("u", "u")] {
        let x = fig8.index_of(from).unwrap();
        let col = source.cells().iter().position(|c| c.label.generator == x).unwrap();
        let row = map.matrix.column(col).first_one().unwrap();
        assert_eq!(fig8.id(target.cells()[row].label.generator), to);
    }
}

#[test]
fn genus_and_hfk() {
    assert_eq!(fixture("UNKNOT").genus(), 0);
    assert_eq!(fixture("TREF_A").genus(), 1);
    assert_eq!(fixture("TREF_B").genus(), 1);
    assert_eq!(fixture("FIG8").genus(), 1);
    let fig8 = fixture("FIG8");
    assert_eq!([-1, 0, 1].map(|s| fig8.hfk_rank(s)), [1, 3, 1]);
}

#[test]
fn puncture_swap_examples() {
    let unknot = fixture("UNKNOT");
    assert_eq!(unknot.puncture_swap().to_data(), unknot.to_data());
    let tref = fixture("TREF_A");
    assert_eq!(tref.puncture_swap().puncture_swap().to_data(), tref.to_data());
    let swapped = tref.puncture_swap();
    let a = swapped.index_of("a").unwrap();
    let c = swapped.index_of("c").unwrap();
    assert_eq!((swapped.grading(a), swapped.grading(c)), (-1, 1));
    let entries: Vec<_> = swapped.entries().iter().map(|e| (swapped.id(e.from), swapped.id(e.to), e.a, e.b)).collect();
    assert!(entries.contains(&("a", "b", 0, 1)));
    assert!(entries.contains(&("c", "b", 1, 0)));
}

fn check_properties(knot: &KnotComplex) {
    let (min, max) = knot.grading_range();
    let mut strata_list = vec![Stratum::Vertical { i: 0 }, Stratum::Horizontal { j: 0 }];
    for p in min - 1..=max + 1 {
        for q in min - 1..=max + 1 {
            strata_list.push(Stratum::Point { i: p, j: q });
            strata_list.push(Stratum::ColumnBelow { i_max: p, j: q });
            strata_list.push(Stratum::RowBelow { i: p, j_max: q });
        }
        strata_list.push(Stratum::Vertical { i: p });
        strata_list.push(Stratum::Horizontal { j: p });
    }
    for stratum in strata_list {
        let c = strata(knot, stratum);
        assert!(c.squares_to_zero(), "{} {stratum}", knot.name());
        assert!(c.labels_graded(|x| knot.grading(x)));
    }
    let vertical = strata(knot, Stratum::Vertical { i: 0 }).homology_rank();
    let horizontal = strata(knot, Stratum::Horizontal { j: 0 }).homology_rank();
    assert_eq!(vertical, horizontal);
    let hfk_total: usize = (min..=max).map(|s| knot.hfk_rank(s)).sum();
    assert_eq!(hfk_total % 2, vertical % 2);
    assert_eq!(knot.puncture_swap().genus(), knot.genus());
    let (source, target, map) = flip_map(knot);
    assert!(map.is_chain_map(&source, &target));
}

#[test]
fn properties_on_fixtures() {
    for name in fixtures::ALL {
        check_properties(&fixture(name));
    }
}

#[test]
fn random_complexes_are_valid_rank_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..60 {
        let knot = random::random_complex(&mut rng, 9, &format!("R{k}"));
        assert!(knot.len() <= 9 && knot.len() % 2 == 1);
        assert_eq!(strata(&knot, Stratum::Vertical { i: 0 }).homology_rank(), 1);
        check_properties(&knot);
    }
}

#[test]
fn random_exact_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let knot = random::random_complex_exact(&mut rng, 51, "BIG");
        assert_eq!(knot.len(), 51);
        assert_eq!(strata(&knot, Stratum::Vertical { i: 0 }).homology_rank(), 1);
    }
}

#[test]
fn staircase_builders() {
    let s = random::staircase(&[1], StaircaseOrientation::EvenSources);
    let knot = KnotComplex::new(&s.to_data("S")).unwrap();
    assert_eq!([-1, 0, 1].map(|s| knot.hfk_rank(s)), [1, 1, 1]);
    let product = random::tensor(&s, &random::staircase(&[2], StaircaseOrientation::OddSources));
    let knot = KnotComplex::new(&product.to_data("P")).unwrap();
    assert_eq!(knot.len(), 9);
    assert_eq!(knot.genus(), 3);
    let boxed = random::direct_sum(&[("s", &s), ("b", &random::acyclic_box(2))]);
    let knot = KnotComplex::new(&boxed.to_data("B")).unwrap();
    assert_eq!(strata(&knot, Stratum::Vertical { i: 0 }).homology_rank(), 1);
}
