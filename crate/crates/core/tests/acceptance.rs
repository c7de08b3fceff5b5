//! One line per acceptance criterion, plus informational lines that do not gate.
//!
//! Criteria that cannot hold for the published data stay red here. The process
//! exits nonzero only when a criterion's outcome differs from the one recorded
//! in `KNOWN_RED` (a regression, or a red criterion turning green unexpectedly).

mod oracle;

use std::time::Instant;

use homalg::checkers::{check_module, check_rota_baxter, check_structure, check_symplectic};
use homalg::constructions::{
    adjoint, coadjoint, commuting_rb_split, derive_structure, dual_rep, left_mult, o_induced, rb_split,
    regular_bimodule, semidirect, yau_twist, DeriveRule, SplitRule,
};
use homalg::corpus::{algebra, load_example, operator, published_table, Object};
use homalg::identity::{eval_at_basis, m_dendriform_3_as_printed, ModuleClass, StructureClass};
use homalg::structures::{check_morphism, Basis, HomAlgebra, LinearOperator, ModuleSpec, Report};
use homalg::{Scalar, Vector};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const KNOWN_RED: [usize; 4] = [4, 6, 7, 11];

type Outcome = Result<(), String>;
type Criterion = (usize, &'static str, fn() -> Outcome);

struct Steps(Vec<String>);

impl Steps {
    fn new() -> Self {
        Steps(Vec::new())
    }

    fn require(&mut self, what: &str, ok: bool) {
        if !ok {
            self.0.push(what.to_string());
        }
    }

    fn report(&mut self, what: &str, r: &Report) {
        if !r.passed() {
            let first = r.first_violations();
            let v = first[0];
            self.0.push(format!(
                "{what} ({} violations; first {} at ({}))",
                r.violations.len(),
                v.identity,
                v.tuple.iter().map(Basis::to_string).collect::<Vec<_>>().join(",")
            ));
        }
    }

    fn done(self) -> Outcome {
        if self.0.is_empty() {
            Ok(())
        } else {
            Err(self.0.join("; "))
        }
    }
}

fn same_tables(got: &HomAlgebra, want: &HomAlgebra) -> bool {
    got.twist() == want.twist()
        && want
            .products()
            .all(|(label, t)| got.product(label).map(|g| g == t).unwrap_or(false))
}

fn structure(alg: &HomAlgebra, class: StructureClass) -> Report {
    check_structure(alg, class).expect("structure check runs")
}

/// Criteria 1-3: the algebra, its Rota-Baxter operator and the pre-Malcev splitting.
fn untwisted_chain(steps: &mut Steps, alg: &HomAlgebra, r: &LinearOperator, split_table: &str) {
    let rep = structure(alg, StructureClass::HomMalcev);
    steps.report("hom-malcev", &rep);
    let n = alg.dim();
    steps.require(
        "tuple bound",
        rep.checked.iter().all(|(_, k)| *k <= n.pow(4)),
    );
    steps.report(
        "rota-baxter",
        &check_rota_baxter(alg, StructureClass::HomMalcev, r).unwrap(),
    );
    let split = rb_split(alg, SplitRule::MalcevToPreMalcev, r).unwrap();
    steps.require(
        &format!("split equals {split_table}"),
        same_tables(&split, &published_table(split_table).unwrap()),
    );
    steps.report("split hom-pre-malcev", &structure(&split, StructureClass::HomPreMalcev));
}

/// Criterion 4: morphism, Yau twist, twisted Rota-Baxter and twisted splitting.
fn twist_chain(steps: &mut Steps, alg: &HomAlgebra, r: &LinearOperator, a: &LinearOperator, prefix: &str) -> HomAlgebra {
    steps.report("twist is a morphism", &check_morphism(a, alg, alg).unwrap());
    let twisted = yau_twist(alg, a).unwrap();
    steps.require(
        &format!("Yau twist equals twisted-{prefix} bracket table"),
        same_tables(&twisted, &published_table(&format!("twisted-malcev{prefix}")).unwrap()),
    );
    steps.report("twisted hom-malcev", &structure(&twisted, StructureClass::HomMalcev));
    steps.report(
        "twisted rota-baxter",
        &check_rota_baxter(&twisted, StructureClass::HomMalcev, r).unwrap(),
    );
    let split = rb_split(&twisted, SplitRule::MalcevToPreMalcev, r).unwrap();
    steps.require(
        "twisted split equals printed table",
        same_tables(&split, &published_table(&format!("twisted-pre-malcev{prefix}")).unwrap()),
    );
    steps.report("twisted split hom-pre-malcev", &structure(&split, StructureClass::HomPreMalcev));
    twisted
}

/// Criterion 5: M-dendriform splitting by a commuting pair and its two pre-Malcev shadows.
fn mdend_chain(steps: &mut Steps, twisted: &HomAlgebra, r: &LinearOperator, prefix: &str) {
    let md = commuting_rb_split(twisted, r, r).unwrap();
    steps.require(
        "M-dendriform tables equal printed ones",
        same_tables(&md, &published_table(&format!("twisted-mdend{prefix}")).unwrap()),
    );
    steps.report("hom-m-dendriform", &structure(&md, StructureClass::HomMDendriform));
    let horizontal = derive_structure(&md, DeriveRule::MdendHorizontal)
        .unwrap()
        .select(&[("dot", "dot")])
        .unwrap();
    let vertical = derive_structure(&md, DeriveRule::MdendVertical)
        .unwrap()
        .select(&[("diamond", "dot")])
        .unwrap();
    steps.report("horizontal hom-pre-malcev", &structure(&horizontal, StructureClass::HomPreMalcev));
    steps.report("vertical hom-pre-malcev", &structure(&vertical, StructureClass::HomPreMalcev));
    let bracket = |a: &HomAlgebra| {
        derive_structure(a, DeriveRule::Commutator)
            .unwrap()
            .product("bracket")
            .unwrap()
            .clone()
    };
    steps.require("commutator brackets agree", bracket(&horizontal) == bracket(&vertical));
}

fn criterion_1() -> Outcome {
    let mut s = Steps::new();
    let rep = structure(&algebra("malcev4"), StructureClass::HomMalcev);
    s.report("hom-malcev", &rep);
    s.require("at most 4^4 tuples per identity", rep.checked.iter().all(|(_, k)| *k <= 256));
    s.done()
}

fn criterion_2() -> Outcome {
    let mut s = Steps::new();
    s.report(
        "rota-baxter",
        &check_rota_baxter(&algebra("malcev4"), StructureClass::HomMalcev, &operator("rb4")).unwrap(),
    );
    s.done()
}

fn criterion_3() -> Outcome {
    let mut s = Steps::new();
    let split = rb_split(&algebra("malcev4"), SplitRule::MalcevToPreMalcev, &operator("rb4")).unwrap();
    s.require("split equals printed table", same_tables(&split, &published_table("pre-malcev4").unwrap()));
    s.report("hom-pre-malcev", &structure(&split, StructureClass::HomPreMalcev));
    s.done()
}

fn criterion_4() -> Outcome {
    let mut s = Steps::new();
    twist_chain(&mut s, &algebra("malcev4"), &operator("rb4"), &operator("alpha4"), "4");
    s.done()
}

fn criterion_5() -> Outcome {
    let mut s = Steps::new();
    let twisted = yau_twist(&algebra("malcev4"), &operator("alpha4")).unwrap();
    mdend_chain(&mut s, &twisted, &operator("rb4"), "4");
    s.done()
}

fn criterion_6() -> Outcome {
    let mut s = Steps::new();
    let (alg, r, a) = (algebra("malcev5"), operator("rb5"), operator("alpha5"));
    s.require(
        "bracket equals printed table",
        same_tables(&alg, &published_table("malcev5").unwrap()),
    );
    untwisted_chain(&mut s, &alg, &r, "pre-malcev5");
    let twisted = twist_chain(&mut s, &alg, &r, &a, "5");
    mdend_chain(&mut s, &twisted, &r, "5");
    s.done()
}

fn criterion_7() -> Outcome {
    let mut s = Steps::new();
    let twisted = yau_twist(&algebra("malcev4"), &operator("alpha4")).unwrap();
    let ad = adjoint(&twisted).unwrap();
    let dual = dual_rep(&twisted, &ad).unwrap();
    s.report(
        "dual passes malcev-representation",
        &check_module(&twisted, &dual, ModuleClass::MalcevRepresentation).unwrap(),
    );
    s.require("dual of dual is the original", dual_rep(&twisted, &dual).unwrap() == ad);
    s.done()
}

/// Module instances of each class drawn from the corpus.
fn module_instances() -> Vec<(String, HomAlgebra, ModuleSpec, ModuleClass)> {
    let mut out = Vec::new();
    let m4 = algebra("malcev4");
    let m5 = algebra("malcev5");
    let y4 = yau_twist(&m4, &operator("alpha4")).unwrap();
    let y5 = yau_twist(&m5, &operator("alpha5")).unwrap();
    use ModuleClass::*;
    for (name, alg) in [("malcev4", &m4), ("malcev5", &m5), ("twisted malcev4", &y4), ("twisted malcev5", &y5)] {
        out.push((format!("adjoint {name}"), alg.clone(), adjoint(alg).unwrap(), MalcevRepresentation));
        if let Ok(co) = coadjoint(alg) {
            out.push((format!("coadjoint {name}"), alg.clone(), co, MalcevRepresentation));
        }
    }
    let pm = |alg: &HomAlgebra, r: &str| rb_split(alg, SplitRule::MalcevToPreMalcev, &operator(r)).unwrap();
    for (name, alg) in [
        ("pre-malcev4", pm(&m4, "rb4")),
        ("pre-malcev5", pm(&m5, "rb5")),
        ("twisted pre-malcev4", pm(&y4, "rb4")),
        ("twisted pre-malcev5", pm(&y5, "rb5")),
    ] {
        out.push((format!("regular {name}"), alg.clone(), regular_bimodule(&alg, PreMalcevBimodule).unwrap(), PreMalcevBimodule));
        out.push((format!("left multiplication {name}"), alg.clone(), left_mult(&alg).unwrap(), PreMalcevBimodule));
    }
    let tri = algebra("tri2-assoc");
    let tri_twisted = yau_twist(&tri, &operator("alpha-tri2")).unwrap();
    for (name, alg, r) in [
        ("dual numbers", algebra("dualnum-assoc"), "rb-dualnum"),
        ("triangular", tri.clone(), "rb-tri2"),
        ("twisted triangular", tri_twisted.clone(), "rb-tri2"),
    ] {
        out.push((format!("regular {name}"), alg.clone(), regular_bimodule(&alg, AltBimodule).unwrap(), AltBimodule));
        let pa = rb_split(&alg, SplitRule::AltToPreAlt, &operator(r)).unwrap();
        out.push((format!("regular pre-alt {name}"), pa.clone(), regular_bimodule(&pa, PreAltBimodule).unwrap(), PreAltBimodule));
    }
    out
}

fn criterion_8() -> Outcome {
    let mut s = Steps::new();
    for (name, alg, module, class) in module_instances() {
        let report = check_module(&alg, &module, class).unwrap();
        let verbatim_pass = !report.violations.iter().any(|v| !v.identity.starts_with("semidirect:"));
        let sd = semidirect(&alg, &module, class).unwrap();
        let sd_pass = structure(&sd, class.algebra_class()).passed();
        if verbatim_pass != sd_pass {
            let flagged = class == ModuleClass::PreAltBimodule && !report.flags.is_empty() && !report.passed();
            s.require(
                &format!(
                    "{name} ({class}): module {} but semidirect {}{}",
                    if verbatim_pass { "passes" } else { "fails" },
                    if sd_pass { "passes" } else { "fails" },
                    if flagged { ", flagged" } else { ", not flagged" }
                ),
                false,
            );
        }
    }
    s.done()
}

fn criterion_9() -> Outcome {
    let mut s = Steps::new();
    let m4 = algebra("malcev4");
    let m5 = algebra("malcev5");
    let y4 = yau_twist(&m4, &operator("alpha4")).unwrap();
    let y5 = yau_twist(&m5, &operator("alpha5")).unwrap();
    let tri = algebra("tri2-assoc");
    let tri_twisted = yau_twist(&tri, &operator("alpha-tri2")).unwrap();
    let pairs: Vec<(&str, HomAlgebra, LinearOperator, StructureClass)> = vec![
        ("malcev4", m4, operator("rb4"), StructureClass::HomMalcev),
        ("malcev5", m5, operator("rb5"), StructureClass::HomMalcev),
        ("twisted malcev4", y4, operator("rb4"), StructureClass::HomMalcev),
        ("twisted malcev5", y5, operator("rb5"), StructureClass::HomMalcev),
        ("dual numbers", algebra("dualnum-assoc"), operator("rb-dualnum"), StructureClass::HomAlternative),
        ("triangular", tri, operator("rb-tri2"), StructureClass::HomAlternative),
        ("twisted triangular", tri_twisted, operator("rb-tri2"), StructureClass::HomAlternative),
    ];
    let mut skipped = Vec::new();
    for (name, alg, r, class) in pairs {
        if !structure(&alg, class).passed() || !check_rota_baxter(&alg, class, &r).unwrap().passed() {
            skipped.push(name);
            continue;
        }
        let n = alg.dim();
        let rule = SplitRule::for_class(class).unwrap();
        let split = rb_split(&alg, rule, &r).unwrap();
        s.report(&format!("{name} split {}", rule.target()), &structure(&split, rule.target()));
        // R is an O-operator for the regular representation; T = R
        let (module, mclass) = match class {
            StructureClass::HomMalcev => (adjoint(&alg).unwrap(), StructureClass::HomMalcev),
            _ => (regular_bimodule(&alg, ModuleClass::AltBimodule).unwrap(), StructureClass::HomAlternative),
        };
        let induced = o_induced(&alg, &module, mclass, &r).unwrap();
        s.report(&format!("{name} O-operator induced {}", rule.target()), &structure(&induced, rule.target()));
        let (big, small): (&str, Vec<&str>) = match class {
            StructureClass::HomMalcev => ("bracket", vec!["dot"]),
            _ => ("star", vec!["prec", "succ"]),
        };
        let big_t = alg.product(big).unwrap();
        for i in 0..n {
            for j in 0..n {
                let (ri, rj) = (r.matrix.column(i), r.matrix.column(j));
                let rhs = big_t.eval(&ri, &rj);
                for (label, source) in [("split", &split), ("induced", &induced)] {
                    let combined = if class == StructureClass::HomMalcev {
                        let d = source.product("dot").unwrap();
                        d.get(i, j).sub(d.get(j, i))
                    } else {
                        small.iter().fold(Vector::zeros(n), |acc, l| acc.add(source.product(l).unwrap().get(i, j)))
                    };
                    if r.matrix.apply(&combined).unwrap() != rhs {
                        s.require(&format!("{name} {label}: R is not a homomorphism at (e{},e{})", i + 1, j + 1), false);
                    }
                }
            }
        }
    }
    // Pre-Malcev to M-dendriform: R acting on its own splitting
    for (name, alg, r) in [("malcev4", algebra("malcev4"), operator("rb4")), ("malcev5", algebra("malcev5"), operator("rb5"))] {
        let pm = rb_split(&alg, SplitRule::MalcevToPreMalcev, &r).unwrap();
        if !check_rota_baxter(&pm, StructureClass::HomPreMalcev, &r).unwrap().passed() {
            skipped.push(name);
            continue;
        }
        let md = rb_split(&pm, SplitRule::PreMalcevToMdend, &r).unwrap();
        s.report(&format!("{name} pre-Malcev split"), &structure(&md, StructureClass::HomMDendriform));
        let n = alg.dim();
        let (tr, tl, dot) = (md.product("tright").unwrap(), md.product("tleft").unwrap(), pm.product("dot").unwrap());
        for i in 0..n {
            for j in 0..n {
                let lhs = r.matrix.apply(&tr.get(i, j).add(tl.get(i, j))).unwrap();
                if lhs != dot.eval(&r.matrix.column(i), &r.matrix.column(j)) {
                    s.require(&format!("{name}: R(x▶y + x◀y) != R(x)·R(y) at (e{},e{})", i + 1, j + 1), false);
                }
            }
        }
    }
    if !skipped.is_empty() {
        println!("  (not Rota-Baxter pairs, skipped: {})", skipped.join(", "));
    }
    s.done()
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn bind(name: &str, values: &[(&str, i64)]) -> Object {
    let b: Vec<(String, BigRational)> = values.iter().map(|(k, v)| (k.to_string(), rational(*v))).collect();
    load_example(name, &b).unwrap()
}

fn criterion_10() -> Outcome {
    let b4 = [("a4", 2), ("lambda1", 3), ("b3", 5)];
    let b5 = [("b", 1), ("a4", 2), ("a5", 1), ("lambda2", 0)];
    let m4 = bind("malcev4", &b4).algebra().unwrap();
    let r4 = bind("rb4", &b4).operator().unwrap();
    let a4 = bind("alpha4", &b4).operator().unwrap();
    let m5 = bind("malcev5", &b5).algebra().unwrap();
    let r5 = bind("rb5", &b5).operator().unwrap();
    let a5 = bind("alpha5", &b5).operator().unwrap();
    let bad = bind("corrupted-malcev4", &b4).algebra().unwrap();
    let y4 = yau_twist(&m4, &a4).unwrap();
    let y5 = yau_twist(&m5, &a5).unwrap();
    let split = |a: &HomAlgebra, r| rb_split(a, SplitRule::MalcevToPreMalcev, r).unwrap();
    let instances: Vec<(HomAlgebra, StructureClass)> = vec![
        (m4.clone(), StructureClass::HomMalcev),
        (bad, StructureClass::HomMalcev),
        (y4.clone(), StructureClass::HomMalcev),
        (m5.clone(), StructureClass::HomMalcev),
        (split(&m4, &r4), StructureClass::HomPreMalcev),
        (split(&y4, &r4), StructureClass::HomPreMalcev),
        (split(&y5, &r5), StructureClass::HomPreMalcev),
        (commuting_rb_split(&y4, &r4, &r4).unwrap(), StructureClass::HomMDendriform),
        (commuting_rb_split(&y5, &r5, &r5).unwrap(), StructureClass::HomMDendriform),
        (algebra("dualnum-assoc"), StructureClass::HomAlternative),
        (yau_twist(&algebra("tri2-assoc"), &operator("alpha-tri2")).unwrap(), StructureClass::HomAlternative),
    ];
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut mismatches = Vec::new();
    let mut nonzero = 0;
    for _ in 0..100 {
        let (alg, class) = &instances[rng.gen_range(0..instances.len())];
        let catalog = class.catalog();
        let entry = &catalog[rng.gen_range(0..catalog.len())];
        let expr = entry.parse().unwrap();
        let tuple: Vec<usize> = (0..expr.arity()).map(|_| rng.gen_range(0..alg.dim())).collect();
        let basis: Vec<Basis> = tuple.iter().map(|&i| Basis::Alg(i)).collect();
        let engine = eval_at_basis(&expr, &class.augment(alg).unwrap(), None, &basis).unwrap();
        let o = oracle::Alg::from_engine(alg);
        let vs: Vec<oracle::V> = tuple.iter().map(|&i| o.e(i)).collect();
        let want = oracle::residual(&entry.id, &o, &vs);
        let got: Vec<BigRational> = engine.iter().map(|s| s.as_rational().unwrap()).collect();
        if got.iter().any(|c| *c != rational(0)) {
            nonzero += 1;
        }
        if got != want {
            mismatches.push(format!("{} at {:?}", entry.id, tuple));
        }
    }
    println!("  (100 samples, {nonzero} with nonzero residual)");
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(format!("engine and oracle disagree: {}", mismatches.join(", ")))
    }
}

fn criterion_11() -> Outcome {
    let mut s = Steps::new();
    let bad = algebra("corrupted-malcev4");
    let rep = structure(&bad, StructureClass::HomMalcev);
    s.require("corrupted fixture fails hom-malcev", !rep.passed());
    // documented counterexamples, recomputed by the oracle
    let b4 = [("a4", 2), ("lambda1", 3), ("b3", 5)];
    let o = oracle::Alg::from_engine(&bind("corrupted-malcev4", &b4).algebra().unwrap());
    for id in ["malcev-antisymmetry", "malcev-identity"] {
        let (tuple, residual) = oracle::first_violation(id, &o).expect("oracle finds a violation");
        let engine = rep.violations_of(id).next();
        let matches = engine.is_some_and(|v| {
            v.tuple == tuple.iter().map(|&i| Basis::Alg(i)).collect::<Vec<_>>()
                && v.residual.iter().map(|c| c.as_rational().unwrap()).collect::<Vec<_>>() == residual
        });
        s.require(&format!("first {id} counterexample matches the oracle"), matches);
    }
    let lie = algebra("sympl2-lie");
    let omega = homalg::corpus::standard_form();
    let sym = check_symplectic(&lie, &omega).unwrap();
    let at_triple = sym
        .violations_of("symplectic:cyclic")
        .any(|v| v.tuple == [Basis::Alg(0), Basis::Alg(1), Basis::Alg(0)]);
    s.require(
        "dim-2 Lie algebra with ω(e1,e2)=1 fails check_symplectic at (e1,e2,e1); it passes every symplectic condition",
        at_triple,
    );
    s.done()
}

/// Variants that diagnose the red criteria. Not gating.
fn informational() {
    // α(e4) = +e4 makes the 4-dimensional twist a morphism
    let mut fixed = operator("alpha4");
    fixed.matrix.set(3, 3, Scalar::one());
    let m4 = algebra("malcev4");
    let r4 = operator("rb4");
    let twisted = yau_twist(&m4, &fixed).unwrap();
    let ok = |r: Report| if r.passed() { "pass" } else { "fail" };
    println!(
        "info: alpha4 with alpha(e4)=+e4: morphism {}, twisted hom-malcev {}, twisted rota-baxter {}, twisted split hom-pre-malcev {}, adjoint dual malcev-representation {}",
        ok(check_morphism(&fixed, &m4, &m4).unwrap()),
        ok(structure(&twisted, StructureClass::HomMalcev)),
        ok(check_rota_baxter(&twisted, StructureClass::HomMalcev, &r4).unwrap()),
        ok(structure(&rb_split(&twisted, SplitRule::MalcevToPreMalcev, &r4).unwrap(), StructureClass::HomPreMalcev)),
        {
            let ad = adjoint(&twisted).unwrap();
            ok(check_module(&twisted, &dual_rep(&twisted, &ad).unwrap(), ModuleClass::MalcevRepresentation).unwrap())
        },
    );
    println!(
        "info: the printed twisted 4-dim bracket table forces alpha(e4)=-e4: matches with +e4 variant: {}",
        same_tables(&twisted, &published_table("twisted-malcev4").unwrap())
    );
    // α5 with the e3-coefficient of α(e5) negated commutes with R5
    let m5 = algebra("malcev5");
    let r5 = operator("rb5");
    let a5 = operator("alpha5");
    let rb = check_rota_baxter(&yau_twist(&m5, &a5).unwrap(), StructureClass::HomMalcev, &r5).unwrap();
    let v = rb.violations_of("rota-baxter:twist").next().map(|v| {
        let params = homalg::corpus::params5();
        format!("{} residual ({})", v.tuple[0], v.residual.iter().map(|s| s.render(&params)).collect::<Vec<_>>().join(", "))
    });
    println!("info: R5 and alpha5 commute: {} {}", rb.violations_of("rota-baxter:twist").next().is_none(), v.unwrap_or_default());
    let mut a5neg = a5.clone();
    a5neg.matrix.set(2, 4, -a5.matrix.get(2, 4));
    let y5neg = yau_twist(&m5, &a5neg).unwrap();
    println!(
        "info: alpha5 with alpha(e5) e3-coefficient negated: morphism {}, twisted rota-baxter {}",
        ok(check_morphism(&a5neg, &m5, &m5).unwrap()),
        ok(check_rota_baxter(&y5neg, StructureClass::HomMalcev, &r5).unwrap()),
    );
    // third M-dendriform relation as printed
    let md = commuting_rb_split(&m4, &r4, &r4).unwrap();
    let printed = m_dendriform_3_as_printed();
    let rep = homalg::identity::check_identity(
        &printed.id,
        &printed.parse().unwrap(),
        &StructureClass::HomMDendriform.augment(&md).unwrap(),
        None,
        Default::default(),
    )
    .unwrap();
    println!(
        "info: third M-dendriform relation as printed on the classical 4-dim splitting: {} ({} violations)",
        ok(rep.clone()),
        rep.violations.len()
    );
}

fn main() {
    let start = Instant::now();
    let criteria: [Criterion; 11] = [
        (1, "malcev4 is hom-Malcev", criterion_1),
        (2, "R4 is Rota-Baxter on malcev4", criterion_2),
        (3, "R4 splits malcev4 into the printed pre-Malcev table", criterion_3),
        (4, "alpha4 twist chain", criterion_4),
        (5, "commuting M-dendriform splitting of twisted malcev4", criterion_5),
        (6, "5-dimensional chain", criterion_6),
        (7, "dual of the adjoint of twisted malcev4", criterion_7),
        (8, "module axioms agree with semidirect products", criterion_8),
        (9, "splitting soundness and homomorphism laws", criterion_9),
        (10, "engine residuals agree with the brute-force oracle", criterion_10),
        (11, "negative controls", criterion_11),
    ];
    let mut unexpected = Vec::new();
    let mut red = Vec::new();
    for (k, title, f) in criteria {
        let t = Instant::now();
        let outcome = f();
        let took = t.elapsed();
        match &outcome {
            Ok(()) => println!("criterion {k}: PASS  {title} [{took:.1?}]"),
            Err(why) => println!("criterion {k}: FAIL  {title}: {why} [{took:.1?}]"),
        }
        if outcome.is_err() {
            red.push(k.to_string());
        }
        if outcome.is_ok() == KNOWN_RED.contains(&k) {
            unexpected.push(k);
        }
    }
    informational();
    println!(
        "acceptance: {} of 11 criteria pass; red: {} ({:.1?})",
        11 - red.len(),
        red.join(", "),
        start.elapsed()
    );
    if !unexpected.is_empty() {
        println!("acceptance: outcome changed for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
