//! Constructions between classes: derived products, Rota-Baxter and O-operator
//! splittings, semidirect products, dual representations and Yau twists.

use std::fmt;
use std::str::FromStr;

use crate::exactnum::{Matrix, Scalar, Vector};
use crate::identity::{ModuleClass, StructureClass};
use crate::structures::{act, HomAlgebra, LinearOperator, ModuleSpec, ProductTensor};
use crate::Error;

macro_rules! named_enum {
    ($name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self, Error> {
                $name::ALL
                    .iter()
                    .copied()
                    .find(|r| r.name() == s)
                    .ok_or_else(|| Error::Invalid(format!("unknown rule `{s}`")))
            }
        }
    };
}

named_enum!(DeriveRule {
    Commutator => "commutator",
    PreAltSum => "pre-alt-sum",
    PreAltToPreMalcev => "pre-alt-to-pre-malcev",
    MdendHorizontal => "mdend-horizontal",
    MdendVertical => "mdend-vertical",
    QuadriHorizontal => "quadri-horizontal",
    QuadriVertical => "quadri-vertical",
    QuadriToMdend => "quadri-to-mdend",
});

named_enum!(SplitRule {
    MalcevToPreMalcev => "malcev-to-pre-malcev",
    AltToPreAlt => "alt-to-pre-alt",
    PreMalcevToMdend => "pre-malcev-to-mdend",
    PreAltToQuadri => "pre-alt-to-quadri",
});

named_enum!(DescendRule {
    AltToMalcev => "alt-to-malcev",
    PreMalcevEll => "pre-malcev-ell",
    PreMalcevToMalcev => "pre-malcev-to-malcev",
    PreAltToPreMalcev => "pre-alt-to-pre-malcev",
});

impl SplitRule {
    /// The split a Rota-Baxter operator performs on an algebra of `class`.
    pub fn for_class(class: StructureClass) -> Result<SplitRule, Error> {
        match class {
            StructureClass::HomMalcev => Ok(SplitRule::MalcevToPreMalcev),
            StructureClass::HomAlternative => Ok(SplitRule::AltToPreAlt),
            StructureClass::HomPreMalcev => Ok(SplitRule::PreMalcevToMdend),
            StructureClass::HomPreAlternative => Ok(SplitRule::PreAltToQuadri),
            other => Err(Error::Invalid(format!("no Rota-Baxter splitting for {other}"))),
        }
    }

    pub fn source(self) -> StructureClass {
        match self {
            SplitRule::MalcevToPreMalcev => StructureClass::HomMalcev,
            SplitRule::AltToPreAlt => StructureClass::HomAlternative,
            SplitRule::PreMalcevToMdend => StructureClass::HomPreMalcev,
            SplitRule::PreAltToQuadri => StructureClass::HomPreAlternative,
        }
    }

    pub fn target(self) -> StructureClass {
        match self {
            SplitRule::MalcevToPreMalcev => StructureClass::HomPreMalcev,
            SplitRule::AltToPreAlt => StructureClass::HomPreAlternative,
            SplitRule::PreMalcevToMdend => StructureClass::HomMDendriform,
            SplitRule::PreAltToQuadri => StructureClass::HomAltQuadri,
        }
    }
}

fn table(n: usize, f: impl Fn(usize, usize) -> Vector) -> ProductTensor {
    ProductTensor::from_fn(n, f)
}

/// `Σ sign · t(i, j)` or `t(j, i)`.
fn combo(alg: &HomAlgebra, terms: &[(i64, &str, bool)]) -> Result<ProductTensor, Error> {
    let tensors = terms
        .iter()
        .map(|(_, l, _)| alg.require(l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(table(alg.dim(), |i, j| {
        let mut v = Vector::zeros(alg.dim());
        for ((c, _, swapped), t) in terms.iter().zip(&tensors) {
            let e = if *swapped { t.get(j, i) } else { t.get(i, j) };
            v.add_scaled(&Scalar::from_int(*c), e);
        }
        v
    }))
}

/// Add the products defined by `rule` to a copy of `alg`.
pub fn derive_structure(alg: &HomAlgebra, rule: DeriveRule) -> Result<HomAlgebra, Error> {
    let added: Vec<(&str, ProductTensor)> = match rule {
        DeriveRule::Commutator => {
            let src = if alg.has_product("dot") { "dot" } else { "star" };
            vec![("bracket", combo(alg, &[(1, src, false), (-1, src, true)])?)]
        }
        DeriveRule::PreAltSum => vec![("star", combo(alg, &[(1, "prec", false), (1, "succ", false)])?)],
        DeriveRule::PreAltToPreMalcev => vec![("dot", combo(alg, &[(1, "succ", false), (-1, "prec", true)])?)],
        DeriveRule::MdendHorizontal => vec![("dot", combo(alg, &[(1, "tleft", false), (1, "tright", false)])?)],
        DeriveRule::MdendVertical => vec![("diamond", combo(alg, &[(1, "tleft", false), (-1, "tright", true)])?)],
        DeriveRule::QuadriHorizontal => vec![
            ("succ", combo(alg, &[(1, "ne", false), (1, "se", false)])?),
            ("prec", combo(alg, &[(1, "nw", false), (1, "sw", false)])?),
        ],
        DeriveRule::QuadriVertical => vec![
            ("vee", combo(alg, &[(1, "se", false), (1, "sw", false)])?),
            ("wedge", combo(alg, &[(1, "ne", false), (1, "nw", false)])?),
        ],
        DeriveRule::QuadriToMdend => vec![
            ("tright", combo(alg, &[(1, "ne", false), (-1, "sw", true)])?),
            ("tleft", combo(alg, &[(1, "se", false), (-1, "nw", true)])?),
        ],
    };
    let mut out = alg.clone();
    for (label, t) in added {
        out = out.with_product(label, t);
    }
    Ok(out)
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

fn images(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

fn fresh(alg: &HomAlgebra, products: Vec<(&str, ProductTensor)>) -> HomAlgebra {
    HomAlgebra::new(
        alg.dim(),
        alg.params().to_vec(),
        products.into_iter().map(|(l, t)| (l.to_string(), t)).collect(),
        alg.twist().clone(),
    )
    .expect("shapes preserved")
}

/// Products induced by a Rota-Baxter operator `r`. The result carries only the split products.
pub fn rb_split(alg: &HomAlgebra, rule: SplitRule, r: &LinearOperator) -> Result<HomAlgebra, Error> {
    let n = alg.dim();
    let rm = square(r, n)?;
    let re = images(rm);
    let basis: Vec<Vector> = (0..n).map(|i| alg.basis(i)).collect();
    // x ∘ R(y) and R(x) ∘ y for a stored product
    let right = |label: &str| -> Result<ProductTensor, Error> {
        let t = alg.require(label)?;
        Ok(table(n, |i, j| t.eval(&basis[i], &re[j])))
    };
    let left = |label: &str| -> Result<ProductTensor, Error> {
        let t = alg.require(label)?;
        Ok(table(n, |i, j| t.eval(&re[i], &basis[j])))
    };
    let products = match rule {
        SplitRule::MalcevToPreMalcev => vec![("dot", left("bracket")?)],
        SplitRule::AltToPreAlt => vec![("prec", right("star")?), ("succ", left("star")?)],
        SplitRule::PreMalcevToMdend => vec![("tright", right("dot")?), ("tleft", left("dot")?)],
        SplitRule::PreAltToQuadri => vec![
            ("ne", right("succ")?),
            ("se", left("succ")?),
            ("sw", left("prec")?),
            ("nw", right("prec")?),
        ],
    };
    Ok(fresh(alg, products))
}

/// `x ▶ y = [R1 x, R2 y]`, `x ◀ y = [R1 R2 x, y]` on a Malcev bracket.
pub fn commuting_rb_split(alg: &HomAlgebra, r1: &LinearOperator, r2: &LinearOperator) -> Result<HomAlgebra, Error> {
    let n = alg.dim();
    let (m1, m2) = (square(r1, n)?, square(r2, n)?);
    let br = alg.require("bracket")?;
    let (i1, i2, i12) = (images(m1), images(m2), images(&m1.mul(m2)?));
    let basis: Vec<Vector> = (0..n).map(|i| alg.basis(i)).collect();
    Ok(fresh(
        alg,
        vec![
            ("tright", table(n, |i, j| br.eval(&i1[i], &i2[j]))),
            ("tleft", table(n, |i, j| br.eval(&i12[i], &basis[j]))),
        ],
    ))
}

fn check_operator_shape(alg: &HomAlgebra, module: &ModuleSpec, t: &LinearOperator) -> Result<(), Error> {
    if t.matrix.shape() != (alg.dim(), module.mdim()) {
        return Err(Error::ShapeMismatch(format!(
            "operator `{}` is {}x{}, expected {}x{}",
            t.name,
            t.matrix.rows(),
            t.matrix.cols(),
            alg.dim(),
            module.mdim()
        )));
    }
    check_module_shape(alg, module)
}

pub(crate) fn check_module_shape(alg: &HomAlgebra, module: &ModuleSpec) -> Result<(), Error> {
    match module.algebra_dim() {
        Some(k) if k != alg.dim() => Err(Error::ShapeMismatch(format!(
            "module actions are indexed by {k} basis vectors, algebra has dimension {}",
            alg.dim()
        ))),
        _ => Ok(()),
    }
}

/// Structure on the module carrier induced by an O-operator `t: V → A`; twist is β.
pub fn o_induced(
    alg: &HomAlgebra,
    module: &ModuleSpec,
    class: StructureClass,
    t: &LinearOperator,
) -> Result<HomAlgebra, Error> {
    check_operator_shape(alg, module, t)?;
    let m = module.mdim();
    let ta = images(&t.matrix);
    let vb: Vec<Vector> = (0..m).map(|i| Vector::basis(m, i)).collect();
    // a∘b = X(T a) b  or  a∘b = X(T b) a
    let by_left = |label: &str| -> Result<ProductTensor, Error> {
        let ms = module.action(label)?;
        Ok(table(m, |i, j| act(&ms, &ta[i], &vb[j])))
    };
    let by_right = |label: &str| -> Result<ProductTensor, Error> {
        let ms = module.action(label)?;
        Ok(table(m, |i, j| act(&ms, &ta[j], &vb[i])))
    };
    let products = match class {
        StructureClass::HomMalcev => vec![("dot", by_left("rho")?)],
        StructureClass::HomAlternative => vec![("succ", by_left("ell")?), ("prec", by_right("r")?)],
        StructureClass::HomPreMalcev => vec![("tright", by_right("r")?), ("tleft", by_left("ell")?)],
        StructureClass::HomPreAlternative => vec![
            ("se", by_left("Lsucc")?),
            ("ne", by_right("Rsucc")?),
            ("sw", by_left("Lprec")?),
            ("nw", by_right("Rprec")?),
        ],
        other => return Err(Error::Invalid(format!("no O-operator construction for {other}"))),
    };
    HomAlgebra::new(
        m,
        alg.params().to_vec(),
        products.into_iter().map(|(l, p)| (l.to_string(), p)).collect(),
        module.twist().clone(),
    )
}

/// The algebra `A ⊕ V` with twist `α ⊕ β`.
pub fn semidirect(alg: &HomAlgebra, module: &ModuleSpec, class: ModuleClass) -> Result<HomAlgebra, Error> {
    check_module_shape(alg, module)?;
    let (n, m) = (alg.dim(), module.mdim());
    let d = n + m;
    let embed_a = |v: &Vector| v.concat(&Vector::zeros(m));
    let embed_v = |v: &Vector| Vector::zeros(n).concat(v);
    let vb: Vec<Vector> = (0..m).map(|i| Vector::basis(m, i)).collect();
    let ab: Vec<Vector> = (0..n).map(|i| alg.basis(i)).collect();
    // x∘y from `label`, plus left(x) b + sign * right(y) a
    let build = |label: &str, left: &[Matrix], right: &[Matrix], sign: i64| -> Result<ProductTensor, Error> {
        let t = alg.require(label)?;
        let s = Scalar::from_int(sign);
        Ok(table(d, |i, j| match (i < n, j < n) {
            (true, true) => embed_a(t.get(i, j)),
            (true, false) => embed_v(&act(left, &ab[i], &vb[j - n])),
            (false, true) => embed_v(&act(right, &ab[j], &vb[i - n]).scale(&s)),
            (false, false) => Vector::zeros(d),
        }))
    };
    let products = match class {
        ModuleClass::MalcevRepresentation => {
            let rho = module.action("rho")?;
            vec![("bracket", build("bracket", &rho, &rho, -1)?)]
        }
        ModuleClass::AltBimodule => vec![("star", build("star", &module.action("ell")?, &module.action("r")?, 1)?)],
        ModuleClass::PreMalcevBimodule => vec![("dot", build("dot", &module.action("ell")?, &module.action("r")?, 1)?)],
        ModuleClass::PreAltBimodule => vec![
            ("prec", build("prec", &module.action("Lprec")?, &module.action("Rprec")?, 1)?),
            ("succ", build("succ", &module.action("Lsucc")?, &module.action("Rsucc")?, 1)?),
        ],
    };
    HomAlgebra::new(
        d,
        alg.params().to_vec(),
        products.into_iter().map(|(l, p)| (l.to_string(), p)).collect(),
        alg.twist().direct_sum(module.twist()),
    )
}

/// Matrices of `x ↦ e_i ∘ x` (left) or `x ↦ x ∘ e_i` (right).
fn multiplications(alg: &HomAlgebra, label: &str, left: bool) -> Result<Vec<Matrix>, Error> {
    let t = alg.require(label)?;
    let n = alg.dim();
    Ok((0..n)
        .map(|i| {
            let cols: Vec<Vector> = (0..n)
                .map(|j| if left { t.get(i, j).clone() } else { t.get(j, i).clone() })
                .collect();
            Matrix::from_columns(n, &cols)
        })
        .collect())
}

/// `ρ(e_i) = [e_i, -]` with β = α.
pub fn adjoint(alg: &HomAlgebra) -> Result<ModuleSpec, Error> {
    ModuleSpec::new(
        alg.dim(),
        alg.twist().clone(),
        vec![("rho".into(), multiplications(alg, "bracket", true)?)],
    )
}

/// Left multiplications of `dot` as `ell`, with `r = 0`; the derived `rho` is `L`.
pub fn left_mult(alg: &HomAlgebra) -> Result<ModuleSpec, Error> {
    let n = alg.dim();
    ModuleSpec::new(
        n,
        alg.twist().clone(),
        vec![
            ("ell".into(), multiplications(alg, "dot", true)?),
            ("r".into(), vec![Matrix::zeros(n, n); n]),
        ],
    )
}

/// The algebra acting on itself by left and right multiplications.
pub fn regular_bimodule(alg: &HomAlgebra, class: ModuleClass) -> Result<ModuleSpec, Error> {
    let actions = match class {
        ModuleClass::MalcevRepresentation => return adjoint(alg),
        ModuleClass::AltBimodule => vec![
            ("ell".to_string(), multiplications(alg, "star", true)?),
            ("r".to_string(), multiplications(alg, "star", false)?),
        ],
        ModuleClass::PreMalcevBimodule => vec![
            ("ell".to_string(), multiplications(alg, "dot", true)?),
            ("r".to_string(), multiplications(alg, "dot", false)?),
        ],
        ModuleClass::PreAltBimodule => vec![
            ("Lsucc".to_string(), multiplications(alg, "succ", true)?),
            ("Rsucc".to_string(), multiplications(alg, "succ", false)?),
            ("Lprec".to_string(), multiplications(alg, "prec", true)?),
            ("Rprec".to_string(), multiplications(alg, "prec", false)?),
        ],
    };
    ModuleSpec::new(alg.dim(), alg.twist().clone(), actions)
}

/// Dual representation on `V*`: `ρ⋆(x) = -(β⁻² ρ(α x))ᵀ` with twist `(β⁻¹)ᵀ`.
pub fn dual_rep(alg: &HomAlgebra, module: &ModuleSpec) -> Result<ModuleSpec, Error> {
    check_module_shape(alg, module)?;
    let rho = module.action("rho")?;
    let beta_inv = module.twist().inverse()?;
    let beta_inv2 = beta_inv.mul(&beta_inv)?;
    let alpha = alg.twist();
    let mats = (0..alg.dim())
        .map(|i| {
            let r = crate::structures::action_matrix(&rho, &alpha.column(i), module.mdim());
            Ok(beta_inv2.mul(&r)?.transpose().neg())
        })
        .collect::<Result<Vec<_>, Error>>()?;
    ModuleSpec::new(module.mdim(), beta_inv.transpose(), vec![("rho".into(), mats)])
}

pub fn coadjoint(alg: &HomAlgebra) -> Result<ModuleSpec, Error> {
    dual_rep(alg, &adjoint(alg)?)
}

/// New actions from differences of the stored ones.
pub fn module_descend(module: &ModuleSpec, rule: DescendRule) -> Result<ModuleSpec, Error> {
    let diff = |a: &str, b: &str| -> Result<Vec<Matrix>, Error> {
        let (x, y) = (module.action(a)?, module.action(b)?);
        x.iter().zip(&y).map(|(p, q)| p.sub(q)).collect()
    };
    let actions = match rule {
        DescendRule::AltToMalcev | DescendRule::PreMalcevToMalcev => vec![("rho".to_string(), diff("ell", "r")?)],
        DescendRule::PreMalcevEll => vec![("rho".to_string(), module.action("ell")?)],
        DescendRule::PreAltToPreMalcev => vec![
            ("ell".to_string(), diff("Lsucc", "Rprec")?),
            ("r".to_string(), diff("Rsucc", "Lprec")?),
        ],
    };
    ModuleSpec::new(module.mdim(), module.twist().clone(), actions)
}

/// Every product `μ` becomes `f∘μ`; the twist becomes `f∘α`.
pub fn yau_twist(alg: &HomAlgebra, f: &LinearOperator) -> Result<HomAlgebra, Error> {
    let n = alg.dim();
    let fm = square(f, n)?;
    let products = alg
        .products()
        .map(|(label, t)| {
            let p = table(n, |i, j| fm.apply(t.get(i, j)).expect("square"));
            (label.to_string(), p)
        })
        .collect();
    HomAlgebra::new(n, alg.params().to_vec(), products, fm.mul(alg.twist())?)
}

/// `ρ̃(x) = ρ(f x) ∘ g` for every stored action; the twist becomes `g∘β`.
pub fn twist_module(
    alg: &HomAlgebra,
    module: &ModuleSpec,
    f: &LinearOperator,
    g: &LinearOperator,
) -> Result<ModuleSpec, Error> {
    check_module_shape(alg, module)?;
    let fm = square(f, alg.dim())?;
    let gm = square(g, module.mdim())?;
    let actions = module
        .actions()
        .map(|(label, ms)| {
            let twisted = (0..alg.dim())
                .map(|i| {
                    crate::structures::action_matrix(ms, &fm.column(i), module.mdim()).mul(gm)
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok((label.to_string(), twisted))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    ModuleSpec::new(module.mdim(), gm.mul(module.twist())?, actions)
}

/// `x ▶ᵗ y = -(y ▶ x)`, `x ◀ᵗ y = x ◀ y`.
pub fn transpose_mdend(alg: &HomAlgebra) -> Result<HomAlgebra, Error> {
    let tright = alg.require("tright")?;
    alg.require("tleft")?;
    let t = table(alg.dim(), |i, j| tright.get(j, i).neg());
    Ok(alg.clone().with_product("tright", t))
}

/// The product `·` with `ω(x·y, α z) = ω(α y, [z, x])` for all `z`, added as `dot`.
/// `omega` is the Gram matrix `ω(e_i, e_j)`.
pub fn symplectic_product(alg: &HomAlgebra, omega: &LinearOperator) -> Result<HomAlgebra, Error> {
    let n = alg.dim();
    let om = square(omega, n)?;
    let br = alg.require("bracket")?;
    let a = alg.twist();
    // ω(w, α e_k) = (Ωα)ᵀ w, so w = ((Ωα)ᵀ)⁻¹ b
    let solve = om.mul(a)?.transpose().inverse()?;
    let form = |u: &Vector, v: &Vector| -> Scalar {
        let ov = om.apply(v).expect("square");
        u.iter().zip(ov.iter()).fold(Scalar::zero(), |acc, (p, q)| &acc + &(p * q))
    };
    let alpha_e: Vec<Vector> = (0..n).map(|i| a.column(i)).collect();
    let product = ProductTensor::try_from_fn(n, |i, j| {
        let b = Vector((0..n).map(|k| form(&alpha_e[j], br.get(k, i))).collect());
        solve.apply(&b)
    })?;
    Ok(alg.clone().with_product("dot", product))
}

/// `x·y = T(ρ(x) T⁻¹ y)` for an invertible O-operator `t: V → A` (added as `dot`).
pub fn transport(alg: &HomAlgebra, module: &ModuleSpec, t: &LinearOperator) -> Result<HomAlgebra, Error> {
    check_operator_shape(alg, module, t)?;
    let tinv = t.matrix.inverse()?;
    let rho = module.action("rho")?;
    let n = alg.dim();
    let product = ProductTensor::try_from_fn(n, |i, j| {
        let b = tinv.column(j);
        t.matrix.apply(&act(&rho, &alg.basis(i), &b))
    })?;
    Ok(alg.clone().with_product("dot", product))
}
