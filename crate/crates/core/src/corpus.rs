//! Built-in examples: the 4- and 5-dimensional Malcev algebras with their
//! Rota-Baxter operators and twisting maps, the dual numbers, a symplectic
//! abelian plane, and the multiplication tables they are expected to produce.

use num_rational::BigRational;

use crate::checkers::{check_rota_baxter, check_structure, check_symplectic};
use crate::exactnum::{parse_scalar, Matrix, Scalar};
use crate::identity::StructureClass;
use crate::structures::{check_morphism, HomAlgebra, LinearOperator, ModuleSpec, ProductTensor, Report, Verdict};
use crate::Error;

/// Names accepted by [`load_example`].
pub const EXAMPLES: [&str; 9] = [
    "malcev4",
    "rb4",
    "alpha4",
    "malcev5",
    "rb5",
    "alpha5",
    "dualnum-assoc",
    "rb-dualnum",
    "sympl2-abelian",
];

/// Extra fixtures used by the test-suite: a corrupted copy of `malcev4`
/// (only `[e2,e3]` changed to `e4`), upper triangular 2x2 matrices and a
/// Rota-Baxter operator on them, an automorphism commuting with it, and the
/// non-abelian 2-dimensional Lie algebra.
pub const FIXTURES: [&str; 5] = ["corrupted-malcev4", "tri2-assoc", "rb-tri2", "alpha-tri2", "sympl2-lie"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(HomAlgebra),
    Module(ModuleSpec),
    Operator(LinearOperator),
}

impl Object {
    pub fn algebra(self) -> Result<HomAlgebra, Error> {
        match self {
            Object::Algebra(a) => Ok(a),
            _ => Err(Error::Invalid("example is not an algebra".into())),
        }
    }

    pub fn operator(self) -> Result<LinearOperator, Error> {
        match self {
            Object::Operator(o) => Ok(o),
            _ => Err(Error::Invalid("example is not an operator".into())),
        }
    }

    pub fn params(&self) -> Vec<String> {
        match self {
            Object::Algebra(a) => a.params().to_vec(),
            Object::Module(_) | Object::Operator(_) => Vec::new(),
        }
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

pub fn params4() -> Vec<String> {
    names(&["a4", "lambda1", "b3"])
}

pub fn params5() -> Vec<String> {
    names(&["b", "a4", "a5", "lambda2"])
}

/// Parameter list an example's scalars are written against.
pub fn example_params(name: &str) -> Result<Vec<String>, Error> {
    Ok(match name {
        "malcev4" | "rb4" | "alpha4" | "corrupted-malcev4" => params4(),
        "malcev5" | "rb5" | "alpha5" => params5(),
        "sympl2-abelian" => names(&["t"]),
        "tri2-assoc" | "rb-tri2" => names(&["mu"]),
        "alpha-tri2" => vec![],
        "dualnum-assoc" | "rb-dualnum" | "sympl2-lie" => vec![],
        _ => return Err(Error::UnknownExample(name.to_string())),
    })
}

fn s(text: &str, params: &[String]) -> Scalar {
    parse_scalar(text, params).expect("built-in scalar")
}

/// Structure constants from `(i, j, k, coefficient)` with 1-based indices: `e_i ∘ e_j ∋ c e_k`.
pub fn table(n: usize, params: &[String], entries: &[(usize, usize, usize, &str)]) -> ProductTensor {
    let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for &(i, j, k, coef) in entries {
        c[i - 1][j - 1][k - 1] = s(coef, params);
    }
    ProductTensor::from_constants(c).expect("square table")
}

/// Matrix from `(row, column, coefficient)` with 1-based indices; column `j` is the image of `e_j`.
pub fn matrix(n: usize, params: &[String], entries: &[(usize, usize, &str)]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for &(r, c, coef) in entries {
        m.set(r - 1, c - 1, s(coef, params));
    }
    m
}

/// `[e_i, e_j]` for `i < j`, extended antisymmetrically.
fn antisymmetric(n: usize, params: &[String], upper: &[(usize, usize, usize, &str)]) -> ProductTensor {
    let mut entries: Vec<(usize, usize, usize, String)> = Vec::new();
    for &(i, j, k, c) in upper {
        entries.push((i, j, k, c.to_string()));
        entries.push((j, i, k, format!("-({c})")));
    }
    let borrowed: Vec<(usize, usize, usize, &str)> = entries.iter().map(|(i, j, k, c)| (*i, *j, *k, c.as_str())).collect();
    table(n, params, &borrowed)
}

fn malcev4_bracket(corrupt: bool) -> ProductTensor {
    let p = params4();
    let mut t = antisymmetric(4, &p, &[(1, 2, 2, "-1"), (1, 3, 3, "-1"), (1, 4, 4, "1"), (2, 3, 4, "2")]);
    if corrupt {
        let mut c = t.to_constants();
        c[1][2] = vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()];
        t = ProductTensor::from_constants(c).expect("shape");
    }
    t
}

fn malcev5_bracket() -> ProductTensor {
    antisymmetric(5, &params5(), &[(1, 4, 2, "1"), (2, 5, 3, "1")])
}

fn build(name: &str) -> Result<Object, Error> {
    let p = example_params(name)?;
    Ok(match name {
        "malcev4" => Object::Algebra(HomAlgebra::classical(p, "bracket", malcev4_bracket(false))),
        "corrupted-malcev4" => Object::Algebra(HomAlgebra::classical(p, "bracket", malcev4_bracket(true))),
        "rb4" => Object::Operator(LinearOperator::new(
            "R",
            matrix(4, &p, &[(1, 1, "1"), (4, 1, "a4/2"), (3, 2, "lambda1")]),
        )),
        "alpha4" => Object::Operator(LinearOperator::new(
            "alpha",
            matrix(
                4,
                &p,
                &[(1, 1, "1"), (4, 1, "a4"), (2, 2, "-1"), (3, 2, "b3"), (3, 3, "-1"), (4, 4, "-1")],
            ),
        )),
        "malcev5" => Object::Algebra(HomAlgebra::classical(p, "bracket", malcev5_bracket())),
        "rb5" => Object::Operator(LinearOperator::new(
            "R",
            matrix(
                5,
                &p,
                &[(1, 1, "1"), (4, 1, "a4"), (5, 1, "a5"), (3, 2, "b"), (2, 4, "-b/a5")],
            ),
        )),
        "alpha5" => Object::Operator(LinearOperator::new(
            "alpha",
            matrix(
                5,
                &p,
                &[
                    (1, 1, "1"),
                    (2, 2, "1"),
                    (3, 3, "1"),
                    (3, 4, "lambda2"),
                    (4, 4, "1"),
                    (3, 5, "a4/a5*lambda2"),
                    (5, 5, "1"),
                ],
            ),
        )),
        // Q[x]/(x²) with basis 1 = e1, x = e2.
        "dualnum-assoc" => Object::Algebra(HomAlgebra::classical(
            p.clone(),
            "star",
            table(2, &p, &[(1, 1, 1, "1"), (1, 2, 2, "1"), (2, 1, 2, "1")]),
        )),
        "rb-dualnum" => Object::Operator(LinearOperator::new("R", matrix(2, &p, &[(2, 1, "1")]))),
        "sympl2-abelian" => Object::Algebra(HomAlgebra::new(
            2,
            p.clone(),
            vec![("bracket".into(), ProductTensor::zero(2))],
            matrix(2, &p, &[(1, 1, "t"), (2, 2, "1/t")]),
        )?),
        // The non-abelian 2-dimensional Lie algebra [e1, e2] = e1.
        "sympl2-lie" => Object::Algebra(HomAlgebra::classical(
            p.clone(),
            "bracket",
            antisymmetric(2, &p, &[(1, 2, 1, "1")]),
        )),
        // Upper triangular 2x2 matrices: e1 = E11, e2 = E12, e3 = E22.
        "tri2-assoc" => Object::Algebra(HomAlgebra::classical(
            p.clone(),
            "star",
            table(3, &p, &[(1, 1, 1, "1"), (1, 2, 2, "1"), (2, 3, 2, "1"), (3, 3, 3, "1")]),
        )),
        "rb-tri2" => Object::Operator(LinearOperator::new("R", matrix(3, &p, &[(2, 1, "1"), (2, 3, "mu")]))),
        // Conjugation by 1 + E12.
        "alpha-tri2" => Object::Operator(LinearOperator::new(
            "alpha",
            matrix(3, &p, &[(1, 1, "1"), (2, 1, "-1"), (2, 2, "1"), (2, 3, "1"), (3, 3, "1")]),
        )),
        _ => return Err(Error::UnknownExample(name.to_string())),
    })
}

/// Build an example, substituting the given parameter values.
pub fn load_example(name: &str, bindings: &[(String, BigRational)]) -> Result<Object, Error> {
    let obj = build(name)?;
    if bindings.is_empty() {
        return Ok(obj);
    }
    let params = example_params(name)?;
    let mut values = vec![None; params.len()];
    for (k, v) in bindings {
        let i = params
            .iter()
            .position(|p| p == k)
            .ok_or_else(|| Error::UnknownParameter(k.clone()))?;
        values[i] = Some(v.clone());
    }
    let out = match obj {
        Object::Algebra(a) => a.substitute(&values).map(Object::Algebra),
        Object::Module(m) => m.substitute(&values).map(Object::Module),
        Object::Operator(o) => o.substitute(&values).map(Object::Operator),
    };
    out.map_err(|e| e.named(&params))
}

pub fn algebra(name: &str) -> HomAlgebra {
    build(name).and_then(Object::algebra).expect("built-in algebra")
}

pub fn operator(name: &str) -> LinearOperator {
    build(name).and_then(Object::operator).expect("built-in operator")
}

/// Multiplication tables printed for the two Malcev examples, keyed by name.
/// Each is an algebra carrying one product (two for the M-dendriform tables)
/// and the twist it is stated with.
pub fn published_table(name: &str) -> Result<HomAlgebra, Error> {
    let p4 = params4();
    let p5 = params5();
    let alpha4 = operator("alpha4").matrix;
    let alpha5 = operator("alpha5").matrix;
    let mk = |n: usize, p: &[String], products: Vec<(&str, ProductTensor)>, twist: Matrix| {
        HomAlgebra::new(
            n,
            p.to_vec(),
            products.into_iter().map(|(l, t)| (l.to_string(), t)).collect(),
            twist,
        )
    };
    // −α(e2) = e2 − b3 e3 and α(e2) = −e2 + b3 e3
    match name {
        "pre-malcev4" => mk(
            4,
            &p4,
            vec![(
                "dot",
                table(
                    4,
                    &p4,
                    &[
                        (1, 1, 4, "-a4/2"),
                        (1, 2, 2, "-1"),
                        (1, 3, 3, "-1"),
                        (1, 4, 4, "1"),
                        (2, 1, 3, "lambda1"),
                        (2, 2, 4, "-2*lambda1"),
                    ],
                ),
            )],
            Matrix::identity(4),
        ),
        "twisted-malcev4" => mk(
            4,
            &p4,
            vec![(
                "bracket",
                table(
                    4,
                    &p4,
                    &[
                        (1, 2, 2, "1"),
                        (1, 2, 3, "-b3"),
                        (1, 3, 3, "1"),
                        (1, 4, 4, "-1"),
                        (2, 1, 2, "-1"),
                        (2, 1, 3, "b3"),
                        (2, 3, 4, "-2"),
                        (3, 1, 3, "-1"),
                        (3, 2, 4, "2"),
                        (4, 1, 4, "1"),
                    ],
                ),
            )],
            alpha4,
        ),
        "twisted-pre-malcev4" => mk(
            4,
            &p4,
            vec![(
                "dot",
                table(
                    4,
                    &p4,
                    &[
                        (1, 1, 4, "a4/2"),
                        (1, 2, 2, "1"),
                        (1, 2, 3, "-b3"),
                        (1, 3, 3, "1"),
                        (1, 4, 4, "-1"),
                        (2, 1, 3, "-lambda1"),
                        (2, 2, 4, "2*lambda1"),
                    ],
                ),
            )],
            alpha4,
        ),
        "twisted-mdend4" => mk(
            4,
            &p4,
            vec![
                ("tright", table(4, &p4, &[(1, 2, 3, "lambda1"), (2, 1, 3, "-lambda1")])),
                (
                    "tleft",
                    table(
                        4,
                        &p4,
                        &[(1, 1, 4, "a4/2"), (1, 2, 2, "1"), (1, 2, 3, "-b3"), (1, 3, 3, "1"), (1, 4, 4, "-1")],
                    ),
                ),
            ],
            alpha4,
        ),
        "malcev5" => mk(5, &p5, vec![("bracket", malcev5_bracket())], Matrix::identity(5)),
        "pre-malcev5" | "twisted-pre-malcev5" => mk(
            5,
            &p5,
            vec![(
                "dot",
                table(
                    5,
                    &p5,
                    &[(1, 1, 2, "-a4"), (1, 2, 3, "-a5"), (1, 4, 2, "1"), (4, 5, 3, "-b/a5")],
                ),
            )],
            if name == "pre-malcev5" { Matrix::identity(5) } else { alpha5 },
        ),
        "twisted-malcev5" => mk(5, &p5, vec![("bracket", malcev5_bracket())], alpha5),
        "twisted-mdend5" => mk(
            5,
            &p5,
            vec![
                ("tright", table(5, &p5, &[(1, 4, 3, "b"), (4, 1, 3, "-b")])),
                (
                    "tleft",
                    table(
                        5,
                        &p5,
                        &[(1, 1, 2, "-a4"), (1, 2, 3, "-a5"), (1, 4, 2, "1"), (1, 5, 3, "-b*a4/a5")],
                    ),
                ),
            ],
            alpha5,
        ),
        _ => Err(Error::UnknownExample(name.to_string())),
    }
}

pub const PUBLISHED_TABLES: [&str; 9] = [
    "pre-malcev4",
    "twisted-malcev4",
    "twisted-pre-malcev4",
    "twisted-mdend4",
    "malcev5",
    "pre-malcev5",
    "twisted-malcev5",
    "twisted-pre-malcev5",
    "twisted-mdend5",
];

/// A check recorded against a corpus entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Structure(StructureClass),
    /// The entry is a Rota-Baxter operator on the named algebra.
    RotaBaxter(&'static str, StructureClass),
    /// The entry is an endomorphism of the named algebra.
    Morphism(&'static str),
    Symplectic,
}

#[derive(Clone, Debug)]
pub struct Expectation {
    pub check: Check,
    pub verdict: Verdict,
    /// Set when the verdict differs from what the source literature states.
    pub literature_disagrees: bool,
}

pub struct ExampleEntry {
    pub name: &'static str,
    pub expected: Vec<Expectation>,
}

fn expect(check: Check, verdict: Verdict) -> Expectation {
    Expectation {
        check,
        verdict,
        literature_disagrees: false,
    }
}

/// Expected verdicts for every example. The checkers are the authority; an
/// entry that contradicts the literature is marked.
pub fn entries() -> Vec<ExampleEntry> {
    use Verdict::{Fail, Pass};
    vec![
        ExampleEntry {
            name: "malcev4",
            expected: vec![expect(Check::Structure(StructureClass::HomMalcev), Pass)],
        },
        ExampleEntry {
            name: "rb4",
            expected: vec![
                expect(Check::RotaBaxter("malcev4", StructureClass::HomMalcev), Pass),
                expect(Check::Morphism("malcev4"), Pass),
            ],
        },
        ExampleEntry {
            name: "alpha4",
            // α(e4) = -e4 breaks α[e2,e3] = [αe2, αe3]
            expected: vec![Expectation {
                check: Check::Morphism("malcev4"),
                verdict: Fail,
                literature_disagrees: true,
            }],
        },
        ExampleEntry {
            name: "malcev5",
            expected: vec![expect(Check::Structure(StructureClass::HomMalcev), Pass)],
        },
        ExampleEntry {
            name: "rb5",
            expected: vec![expect(Check::RotaBaxter("malcev5", StructureClass::HomMalcev), Pass)],
        },
        ExampleEntry {
            name: "alpha5",
            expected: vec![expect(Check::Morphism("malcev5"), Pass)],
        },
        ExampleEntry {
            name: "dualnum-assoc",
            expected: vec![expect(Check::Structure(StructureClass::HomAlternative), Pass)],
        },
        ExampleEntry {
            name: "rb-dualnum",
            expected: vec![expect(Check::RotaBaxter("dualnum-assoc", StructureClass::HomAlternative), Pass)],
        },
        ExampleEntry {
            name: "sympl2-abelian",
            expected: vec![
                expect(Check::Structure(StructureClass::HomMalcev), Pass),
                expect(Check::Symplectic, Pass),
            ],
        },
    ]
}

/// Run one recorded check. The symplectic check pairs an algebra with its standard form.
pub fn run_check(name: &str, check: Check) -> Result<Report, Error> {
    match check {
        Check::Structure(class) => check_structure(&algebra(name), class),
        Check::RotaBaxter(alg, class) => check_rota_baxter(&algebra(alg), class, &operator(name)),
        Check::Morphism(alg) => {
            let a = algebra(alg);
            check_morphism(&operator(name), &a, &a)
        }
        Check::Symplectic => check_symplectic(&algebra(name), &standard_form()),
    }
}

/// `ω(e1, e2) = 1`.
pub fn standard_form() -> LinearOperator {
    LinearOperator::new("omega", matrix(2, &[], &[(1, 2, "1"), (2, 1, "-1")]))
}
