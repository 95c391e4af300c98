use krdemazure::alcove::ChainOrder;
use krdemazure::cartan::ClassicalWeight;
use krdemazure::crystal::{components, verify_isomorphism, FilterMode};
use krdemazure::experiments::*;
use krdemazure::kr::Fixture;
use krdemazure::Error;

const CAP: usize = 1 << 20;

fn spec(t: &str, f: &[(usize, i64)]) -> TensorSpec {
    TensorSpec::new(t, f)
}

fn sizes_of(r: &Report, label: &str) -> Vec<usize> {
    r.witnesses
        .iter()
        .find_map(|w| match w {
            Witness::ComponentSizes { label: l, sizes } if l == label => Some(sizes.clone()),
            _ => None,
        })
        .unwrap_or_else(|| panic!("no sizes for {label}"))
}

#[test]
fn reduction_type_c_example() {
    let r = check_reduction(
        &spec("C2", &[(1, 1), (1, 1)]),
        &spec("C2", &[(1, 2)]),
        1,
        FilterMode::Head,
        CAP,
    )
    .unwrap();
    assert!(r.passed(), "{:?}", r.witnesses);
    assert_eq!(sizes_of(&r, "left"), vec![5, 11]);
    assert_eq!(sizes_of(&r, "right"), vec![11]);
}

#[test]
fn reduction_witness_revalidates() {
    let (b, b2) = (spec("A2", &[(1, 2)]), spec("A2", &[(1, 1), (1, 1)]));
    let r = check_reduction(&b, &b2, 2, FilterMode::Tail, CAP).unwrap();
    assert!(r.passed());
    let map = r
        .witnesses
        .iter()
        .find_map(|w| match w {
            Witness::Isomorphism { map, .. } => Some(map.clone()),
            _ => None,
        })
        .unwrap();
    let left = build_view(&b, 2, View::Dual, CAP).unwrap();
    let right = build_view(&b2, 2, View::Dual, CAP).unwrap();
    assert!(left.is_connected());
    let top = ClassicalWeight(vec![2, 0]);
    let pick = |g: &krdemazure::CrystalGraph| {
        let u = g.nodes_of_weight(&top)[0];
        components(g).into_iter().find(|k| k.nodes.contains(&u)).unwrap().graph
    };
    assert!(verify_isomorphism(&pick(&left), &pick(&right), &map));
}

#[test]
fn reduction_is_reflexive() {
    for (t, f) in [("A2", vec![(1, 1), (2, 1)]), ("A3", vec![(2, 2)]), ("C2", vec![(1, 1), (1, 1)])] {
        let s = spec(t, &f);
        for mode in [FilterMode::Head, FilterMode::Tail] {
            let r = check_reduction(&s, &s, 2, mode, CAP).unwrap();
            assert!(r.passed(), "{t} {f:?} {mode:?}");
        }
    }
}

#[test]
fn reduction_preconditions() {
    let e = check_reduction(&spec("A2", &[(1, 1)]), &spec("A2", &[(2, 1)]), 1, FilterMode::Head, CAP);
    assert!(matches!(e, Err(Error::Precondition(_))));
    let e = check_reduction(&spec("A2", &[(1, 2)]), &spec("A2", &[(1, 1), (1, 1)]), 1, FilterMode::Head, CAP);
    assert!(matches!(e, Err(Error::Precondition(m)) if m.contains("B^{1,2}")));
    let e = check_reduction(&spec("C2", &[(2, 1)]), &spec("C2", &[(2, 1)]), 1, FilterMode::Head, CAP);
    assert!(matches!(e, Err(Error::UnsupportedFactor { r: 2, .. })));
}

#[test]
fn bmin_examples() {
    let r = check_bmin(&spec("C2", &[(1, 1), (1, 1)]), 1, CAP).unwrap();
    assert!(r.passed());
    assert_eq!(sizes_of(&r, "demazure"), vec![5, 11]);
    let census = r
        .witnesses
        .iter()
        .find_map(|w| match w {
            Witness::WeightMultiset { label, weights } if label == "highest weight census" => Some(weights.clone()),
            _ => None,
        })
        .unwrap();
    assert_eq!(census.len(), 2);
    assert!(check_bmin(&spec("A2", &[(1, 1), (2, 1)]), 1, CAP).unwrap().passed());
    assert!(check_bmin(&spec("A2", &[]), 1, CAP).unwrap().passed());
    assert!(check_bmin_fixture(Fixture::B12).unwrap().passed());
    assert!(matches!(
        check_bmin(&spec("A2", &[(2, 2)]), 1, CAP),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn qsystem_size_ledgers() {
    for (n, a, m, level, lhs, rhs) in [(2, 1, 2, 2, 9, vec![6, 3]), (3, 2, 2, 2, 36, vec![20, 16])] {
        let r = check_qsystem_type_a(n, a, m, level, CAP).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples().collect::<Vec<_>>());
        assert_eq!(r.witnesses[0], Witness::SizeLedger { lhs, rhs });
    }
    let r = check_qsystem_type_a(2, 1, 1, 1, CAP).unwrap();
    assert!(r.passed());
    assert_eq!(r.witnesses[0], Witness::SizeLedger { lhs: 1, rhs: vec![0, 1] });
    assert!(check_qsystem_type_a(2, 1, 3, 2, CAP).is_err());
}

#[test]
fn character_qsystem_examples() {
    let r = check_character_qsystem(2, 1, 1).unwrap();
    assert!(r.passed());
    assert_eq!(r.witnesses[0], Witness::SizeLedger { lhs: 9, rhs: vec![9] });
    assert!(check_character_qsystem(3, 2, 2).unwrap().passed());
    assert!(check_character_qsystem(3, 3, 1).unwrap().passed());
}

#[test]
fn alcove_correspondence_examples() {
    let r = check_alcove_correspondence("A2", &ClassicalWeight(vec![1, 0]), 1, ChainOrder::Lex, CAP).unwrap();
    assert!(r.passed());
    assert_eq!(sizes_of(&r, "alcove"), vec![3]);
    let r = check_alcove_correspondence("A2", &ClassicalWeight(vec![2, 0]), 2, ChainOrder::Lex, CAP).unwrap();
    assert!(r.passed());
    let audit = r
        .witnesses
        .iter()
        .find_map(|w| match w {
            Witness::EdgeAudit { removed, added, .. } => Some((*removed, *added)),
            _ => None,
        })
        .unwrap();
    assert_eq!(audit, (0, 0));
    assert!(matches!(
        check_alcove_correspondence("C2", &ClassicalWeight(vec![1, 0]), 1, ChainOrder::Lex, CAP),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn figure_check_passes() {
    let r = check_figure().unwrap();
    assert!(r.passed(), "{:?}", r.counterexamples().collect::<Vec<_>>());
    assert_eq!(sizes_of(&r, "left"), vec![5, 11]);
    assert_eq!(sizes_of(&r, "left edges by color"), vec![1, 8, 6]);
    assert_eq!(sizes_of(&r, "right edges by color"), vec![1, 6, 4]);
}

#[test]
fn batches_are_ordered_and_deterministic() {
    let specs = vec![
        CheckSpec::Figure,
        CheckSpec::Qchar { n: 2, a: 1, m: 2 },
        CheckSpec::Qsystem { n: 2, a: 2, m: 2, level: 2 },
        CheckSpec::Alcove {
            cartan: "A2".into(),
            lambda: vec![1, 1],
            level: 1,
            order: ChainOrder::Lex,
        },
        CheckSpec::BminFixture { fixture: Fixture::Tensor11 },
    ];
    let render = |rs: Vec<krdemazure::Result<Report>>| -> Vec<String> {
        rs.into_iter().map(|r| r.unwrap().to_json()).collect()
    };
    let a = render(run_batch(&specs, CAP));
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let b = render(pool.install(|| run_batch(&specs, CAP)));
    assert_eq!(a, b);
    let names: Vec<String> = a
        .iter()
        .map(|j| serde_json::from_str::<Report>(j).unwrap().name)
        .collect();
    assert_eq!(names, ["figure", "qchar", "qsystem", "alcove", "bmin"]);
}

#[test]
fn check_specs_round_trip_through_json() {
    let s = CheckSpec::Reduction {
        left: spec("A2", &[(1, 2)]),
        right: spec("A2", &[(1, 1), (1, 1)]),
        level: 2,
        mode: FilterMode::Tail,
    };
    let text = serde_json::to_string(&s).unwrap();
    assert_eq!(serde_json::from_str::<CheckSpec>(&text).unwrap(), s);
}
