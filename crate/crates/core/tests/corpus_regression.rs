use homalg::corpus::{entries, load_example, published_table, run_check, Object, PUBLISHED_TABLES};
use homalg::structures::Verdict;
use homalg::Error;
use num_rational::BigRational;

#[test]
fn every_recorded_verdict_is_reproduced() {
    for entry in entries() {
        for e in &entry.expected {
            let report = run_check(entry.name, e.check).unwrap();
            assert_eq!(
                report.verdict, e.verdict,
                "{} {:?}: {:?}",
                entry.name, e.check, report.first_violations()
            );
        }
    }
}

#[test]
fn only_alpha4_contradicts_the_literature() {
    let flagged: Vec<_> = entries()
        .into_iter()
        .filter(|e| e.expected.iter().any(|x| x.literature_disagrees))
        .map(|e| e.name)
        .collect();
    assert_eq!(flagged, ["alpha4"]);
}

#[test]
fn printed_tables_load() {
    for name in PUBLISHED_TABLES {
        published_table(name).unwrap();
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[test]
fn bindings_substitute_and_reject_vanishing_denominators() {
    let b = |k: &str, v: i64| (k.to_string(), q(v));
    let rational = load_example("malcev5", &[b("b", 1), b("a4", 0), b("a5", 1), b("lambda2", 0)]).unwrap();
    assert!(matches!(rational, Object::Algebra(_)));
    let rb = load_example("rb5", &[b("b", 1), b("a5", 2)]).unwrap().operator().unwrap();
    assert_eq!(rb.matrix.get(1, 3).as_rational(), Some(BigRational::new((-1).into(), 2.into())));
    assert!(matches!(load_example("rb5", &[b("a5", 0)]), Err(Error::DenominatorVanishes(ref d)) if d == "a5"));
    assert!(matches!(load_example("nope", &[]), Err(Error::UnknownExample(_))));
    assert!(matches!(load_example("rb5", &[b("zz", 1)]), Err(Error::UnknownParameter(_))));
}

#[test]
fn corrupted_fixture_fails() {
    let alg = homalg::corpus::algebra("corrupted-malcev4");
    let r = homalg::checkers::check_structure(&alg, homalg::identity::StructureClass::HomMalcev).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
}
