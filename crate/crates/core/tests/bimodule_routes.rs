//! The pre-alternative bimodule equations are checked twice: verbatim and
//! through the semidirect product. This pins an instance where the two disagree.

mod oracle;

use homalg::checkers::check_module;
use homalg::constructions::semidirect;
use homalg::identity::ModuleClass;
use homalg::structures::{HomAlgebra, ModuleSpec, ProductTensor};
use homalg::{Matrix, Scalar};

fn one_by_one(c: i64) -> Matrix {
    Matrix::from_rows(vec![vec![Scalar::from_int(c)]]).unwrap()
}

/// `e ≺ e = e`, `e ≻ e = 0`; on `V = span(v)`: `e ≻ v = v`, `v ≻ e = v`,
/// `e ≺ v = -v`, `v ≺ e = 0`.
fn instance() -> (HomAlgebra, ModuleSpec) {
    let t = |c: i64| ProductTensor::from_constants(vec![vec![vec![Scalar::from_int(c)]]]).unwrap();
    let alg = HomAlgebra::new(
        1,
        vec![],
        vec![("prec".into(), t(1)), ("succ".into(), t(0))],
        Matrix::identity(1),
    )
    .unwrap();
    let actions = [("Lsucc", 1), ("Rsucc", 1), ("Lprec", -1), ("Rprec", 0)]
        .iter()
        .map(|(l, c)| (l.to_string(), vec![one_by_one(*c)]))
        .collect();
    (alg, ModuleSpec::new(1, Matrix::identity(1), actions).unwrap())
}

#[test]
fn semidirect_product_is_pre_alternative_by_the_oracle() {
    let (alg, module) = instance();
    let sum = oracle::Alg::from_engine(&semidirect(&alg, &module, ModuleClass::PreAltBimodule).unwrap());
    for id in ["pre-alt-1", "pre-alt-2", "pre-alt-3", "pre-alt-4"] {
        assert_eq!(oracle::first_violation(id, &sum), None, "{id}");
    }
}

#[test]
fn verbatim_equations_fail_and_the_report_is_flagged() {
    let (alg, module) = instance();
    let report = check_module(&alg, &module, ModuleClass::PreAltBimodule).unwrap();
    assert!(!report.passed());
    let failing: Vec<&str> = report.first_violations().iter().map(|v| v.identity.as_str()).collect();
    assert_eq!(failing, ["pabm-4", "pabm-5", "pabm-6"]);
    assert_eq!(
        report.flags,
        ["bimodule equations fail but the semidirect product passes hom-pre-alternative"]
    );
    assert_eq!(report.violations_of("semidirect:hom-pre-alternative").count(), 0);
    // (v ≻ e) ≺ e + (e ≺ v) ≻ e - e ≺ (v ∗ e) - v ≻ (e ∗ e) = -v
    let v = report.violations_of("pabm-4").next().unwrap();
    assert_eq!(v.residual.0, [Scalar::from_int(-1)]);
}
