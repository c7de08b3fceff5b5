//! Class-level verification: structures, modules, operators and symplectic forms.

use crate::constructions::{check_module_shape, semidirect};
use crate::exactnum::{Matrix, Scalar, Vector};
use crate::identity::{check_identity, CheckOptions, ModuleClass, StructureClass};
use crate::structures::{
    act, check_multiplicative, matrix_scalars, Basis, HomAlgebra, LinearOperator, ModuleSpec, Report, Violation,
};
use crate::Error;

/// Multiplicativity of every product the class needs, then every catalog identity.
pub fn check_structure(alg: &HomAlgebra, class: StructureClass) -> Result<Report, Error> {
    check_structure_with(alg, class, CheckOptions::default())
}

pub fn check_structure_with(alg: &HomAlgebra, class: StructureClass, options: CheckOptions) -> Result<Report, Error> {
    let mut report = Report::new();
    for label in class.required_products() {
        alg.require(label)?;
        report.merge(check_multiplicative(alg, label)?);
    }
    let augmented = class.augment(alg)?;
    for entry in class.catalog() {
        if options.stop_early && !report.passed() {
            break;
        }
        let expr = entry.parse()?;
        report.merge(check_identity(&entry.id, &expr, &augmented, None, options)?);
    }
    report.assume_from(alg.scalars(), alg.params());
    Ok(report)
}

/// Compatibility equations of a module, β-commutation first.
///
/// For pre-alternative bimodules the equations are also checked through the
/// semidirect product; if the two routes disagree the report carries a flag and
/// the semidirect violations.
pub fn check_module(alg: &HomAlgebra, module: &ModuleSpec, class: ModuleClass) -> Result<Report, Error> {
    check_module_with(alg, module, class, CheckOptions::default())
}

pub fn check_module_with(
    alg: &HomAlgebra,
    module: &ModuleSpec,
    class: ModuleClass,
    options: CheckOptions,
) -> Result<Report, Error> {
    check_module_shape(alg, module)?;
    for label in class.required_actions() {
        module.action(label)?;
    }
    let algebra_class = class.algebra_class();
    for label in algebra_class.required_products() {
        alg.require(label)?;
    }
    let augmented = algebra_class.augment(alg)?;
    let mut report = Report::new();
    for entry in class.catalog() {
        if options.stop_early && !report.passed() {
            break;
        }
        let expr = entry.parse()?;
        report.merge(check_identity(&entry.id, &expr, &augmented, Some(module), options)?);
    }
    if class == ModuleClass::PreAltBimodule && !(options.stop_early && !report.passed()) {
        let verbatim_pass = report.passed();
        let sd = semidirect(alg, module, class)?;
        let sd_report = check_structure_with(&sd, StructureClass::HomPreAlternative, options)?;
        if sd_report.passed() != verbatim_pass {
            report.flags.push(format!(
                "bimodule equations {} but the semidirect product {} hom-pre-alternative",
                if verbatim_pass { "hold" } else { "fail" },
                if sd_report.passed() { "passes" } else { "fails" },
            ));
            let n = alg.dim();
            let relabel = |b: &Basis| match b {
                Basis::Alg(i) if *i >= n => Basis::Mod(i - n),
                other => *other,
            };
            let mut extra = sd_report.violations.clone();
            for v in &mut extra {
                v.identity = format!("semidirect:{}", v.identity);
                v.tuple = v.tuple.iter().map(relabel).collect();
            }
            report.record("semidirect:hom-pre-alternative", sd_report.total_tuples(), extra);
        }
    }
    report.assume_from(alg.scalars().chain(module.scalars()), alg.params());
    Ok(report)
}

fn square(op: &LinearOperator, n: usize) -> Result<&Matrix, Error> {
    if op.matrix.shape() != (n, n) {
        return Err(Error::ShapeMismatch(format!(
            "operator `{}` is {}x{}, expected {n}x{n}",
            op.name,
            op.matrix.rows(),
            op.matrix.cols()
        )));
    }
    Ok(&op.matrix)
}

/// `lhs - rhs` column by column; one violation per differing column.
fn compare_columns(id: &str, lhs: &Matrix, rhs: &Matrix, sort: fn(usize) -> Basis) -> Result<Report, Error> {
    let diff = lhs.sub(rhs)?;
    let violations = (0..diff.cols())
        .filter_map(|j| {
            let r = diff.column(j);
            (!r.is_zero()).then(|| Violation {
                identity: id.to_string(),
                tuple: vec![sort(j)],
                residual: r,
            })
        })
        .collect();
    let mut report = Report::new();
    report.record(id, diff.cols(), violations);
    Ok(report)
}

/// Bilinear condition `f(i, j) = 0` over all pairs of `k` basis vectors.
fn check_pairs(id: &str, k: usize, sort: fn(usize) -> Basis, f: impl Fn(usize, usize) -> Vector) -> Report {
    let mut violations = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let r = f(i, j);
            if !r.is_zero() {
                violations.push(Violation {
                    identity: id.to_string(),
                    tuple: vec![sort(i), sort(j)],
                    residual: r,
                });
            }
        }
    }
    let mut report = Report::new();
    report.record(id, k * k, violations);
    report
}

/// `R∘α = α∘R` and `R(x)∘R(y) = R(R(x)∘y + x∘R(y))` for every product of the class.
pub fn check_rota_baxter(alg: &HomAlgebra, class: StructureClass, r: &LinearOperator) -> Result<Report, Error> {
    let n = alg.dim();
    let rm = square(r, n)?;
    let mut report = compare_columns(
        "rota-baxter:twist",
        &rm.mul(alg.twist())?,
        &alg.twist().mul(rm)?,
        Basis::Alg,
    )?;
    let re: Vec<Vector> = (0..n).map(|j| rm.column(j)).collect();
    for label in class.required_products() {
        let t = alg.require(label)?;
        report.merge(check_pairs(&format!("rota-baxter:{label}"), n, Basis::Alg, |i, j| {
            let lhs = t.eval(&re[i], &re[j]);
            let mixed = t.eval(&re[i], &alg.basis(j)).add(&t.eval(&alg.basis(i), &re[j]));
            lhs.sub(&rm.apply(&mixed).expect("square"))
        }));
    }
    report.assume_from(alg.scalars().chain(matrix_scalars(rm)), alg.params());
    Ok(report)
}

/// `α∘T = T∘β` and the class's O-operator equations on all pairs of module basis vectors.
pub fn check_o_operator(
    alg: &HomAlgebra,
    module: &ModuleSpec,
    class: StructureClass,
    t: &LinearOperator,
) -> Result<Report, Error> {
    check_module_shape(alg, module)?;
    let (n, m) = (alg.dim(), module.mdim());
    if t.matrix.shape() != (n, m) {
        return Err(Error::ShapeMismatch(format!(
            "operator `{}` is {}x{}, expected {n}x{m}",
            t.name,
            t.matrix.rows(),
            t.matrix.cols()
        )));
    }
    let tm = &t.matrix;
    let mut report = compare_columns(
        "o-operator:twist",
        &alg.twist().mul(tm)?,
        &tm.mul(module.twist())?,
        Basis::Mod,
    )?;
    let ta: Vec<Vector> = (0..m).map(|j| tm.column(j)).collect();
    let vb: Vec<Vector> = (0..m).map(|j| Vector::basis(m, j)).collect();
    // (product label, left action, right action, sign of the right term)
    let equations: Vec<(&str, &str, &str, i64)> = match class {
        StructureClass::HomMalcev => vec![("bracket", "rho", "rho", -1)],
        StructureClass::HomAlternative => vec![("star", "ell", "r", 1)],
        StructureClass::HomPreMalcev => vec![("dot", "ell", "r", 1)],
        StructureClass::HomPreAlternative => vec![("succ", "Lsucc", "Rsucc", 1), ("prec", "Lprec", "Rprec", 1)],
        other => return Err(Error::Invalid(format!("no O-operator equations for {other}"))),
    };
    for (label, left, right, sign) in equations {
        let p = alg.require(label)?;
        let (lm, rm) = (module.action(left)?, module.action(right)?);
        let s = Scalar::from_int(sign);
        report.merge(check_pairs(&format!("o-operator:{label}"), m, Basis::Mod, |a, b| {
            let lhs = p.eval(&ta[a], &ta[b]);
            let mut inner = act(&lm, &ta[a], &vb[b]);
            inner.add_scaled(&s, &act(&rm, &ta[b], &vb[a]));
            lhs.sub(&tm.apply(&inner).expect("shape"))
        }));
    }
    report.assume_from(
        alg.scalars().chain(module.scalars()).chain(matrix_scalars(tm)),
        alg.params(),
    );
    Ok(report)
}

/// `R1 R2 = R2 R1`.
pub fn check_commuting(r1: &LinearOperator, r2: &LinearOperator) -> Result<Report, Error> {
    if r1.matrix.shape() != r2.matrix.shape() || !r1.matrix.is_square() {
        return Err(Error::ShapeMismatch("operators must be square of equal size".into()));
    }
    compare_columns(
        "commuting",
        &r1.matrix.mul(&r2.matrix)?,
        &r2.matrix.mul(&r1.matrix)?,
        Basis::Alg,
    )
}

/// Antisymmetry, invertibility, `ω(αx, αy) = ω(x, y)` and the cyclic condition
/// `ω([x,y], αz) + ω([y,z], αx) + ω([z,x], αy) = 0`. `omega` is the Gram matrix.
pub fn check_symplectic(alg: &HomAlgebra, omega: &LinearOperator) -> Result<Report, Error> {
    let n = alg.dim();
    let om = square(omega, n)?;
    let br = alg.require("bracket")?;
    let a = alg.twist();
    let scalar = |s: Scalar| Vector(vec![s]);
    let form = |u: &Vector, v: &Vector| -> Scalar {
        let ov = om.apply(v).expect("square");
        u.iter().zip(ov.iter()).fold(Scalar::zero(), |acc, (p, q)| &acc + &(p * q))
    };

    let mut report = check_pairs("symplectic:antisymmetry", n, Basis::Alg, |i, j| {
        scalar(om.get(i, j) + om.get(j, i))
    });

    let det = om.determinant()?;
    let mut nondegenerate = Vec::new();
    if det.is_zero() {
        nondegenerate.push(Violation {
            identity: "symplectic:nondegenerate".into(),
            tuple: vec![],
            residual: scalar(det),
        });
    }
    report.record("symplectic:nondegenerate", 1, nondegenerate);

    let ae: Vec<Vector> = (0..n).map(|i| a.column(i)).collect();
    report.merge(check_pairs("symplectic:invariance", n, Basis::Alg, |i, j| {
        scalar(form(&ae[i], &ae[j]) - om.get(i, j))
    }));

    let mut cyclic = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = form(br.get(i, j), &ae[k]) + form(br.get(j, k), &ae[i]) + form(br.get(k, i), &ae[j]);
                if !s.is_zero() {
                    cyclic.push(Violation {
                        identity: "symplectic:cyclic".into(),
                        tuple: vec![Basis::Alg(i), Basis::Alg(j), Basis::Alg(k)],
                        residual: scalar(s),
                    });
                }
            }
        }
    }
    report.record("symplectic:cyclic", n * n * n, cyclic);
    report.assume_from(alg.scalars().chain(matrix_scalars(om)), alg.params());
    Ok(report)
}
