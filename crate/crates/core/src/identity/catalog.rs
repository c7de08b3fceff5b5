//! Defining identities of each structure and module class, written in the identity DSL.
//!
//! Non-multilinear axioms appear in polarized form (as(x,x,y) = 0 becomes
//! as(x,y,z) + as(y,x,z) = 0), valid in characteristic zero.

use std::fmt;
use std::str::FromStr;

use super::ast::{IdentityExpr, VarDecls};
use super::parser::parse_identity;
use crate::exactnum::Scalar;
use crate::structures::{HomAlgebra, ProductTensor};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureClass {
    HomMalcev,
    HomAlternative,
    HomPreLie,
    HomPreMalcev,
    HomPreAlternative,
    HomMDendriform,
    HomAltQuadri,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleClass {
    MalcevRepresentation,
    AltBimodule,
    PreMalcevBimodule,
    PreAltBimodule,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub source: String,
}

impl CatalogEntry {
    fn new(id: &str, source: String) -> Self {
        CatalogEntry {
            id: id.to_string(),
            source,
        }
    }

    pub fn parse(&self) -> Result<IdentityExpr, Error> {
        parse_identity(&self.source, &VarDecls::default(), &[])
    }
}

/// A product defined as a signed sum of stored products, possibly with swapped arguments.
struct DerivedProduct {
    label: &'static str,
    terms: &'static [(i64, &'static str, bool)],
}

impl StructureClass {
    pub const ALL: [StructureClass; 7] = [
        StructureClass::HomMalcev,
        StructureClass::HomAlternative,
        StructureClass::HomPreLie,
        StructureClass::HomPreMalcev,
        StructureClass::HomPreAlternative,
        StructureClass::HomMDendriform,
        StructureClass::HomAltQuadri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureClass::HomMalcev => "hom-malcev",
            StructureClass::HomAlternative => "hom-alternative",
            StructureClass::HomPreLie => "hom-pre-lie",
            StructureClass::HomPreMalcev => "hom-pre-malcev",
            StructureClass::HomPreAlternative => "hom-pre-alternative",
            StructureClass::HomMDendriform => "hom-m-dendriform",
            StructureClass::HomAltQuadri => "hom-alt-quadri",
        }
    }

    /// Stored products the class is defined on.
    pub fn required_products(self) -> &'static [&'static str] {
        match self {
            StructureClass::HomMalcev => &["bracket"],
            StructureClass::HomAlternative => &["star"],
            StructureClass::HomPreLie | StructureClass::HomPreMalcev => &["dot"],
            StructureClass::HomPreAlternative => &["prec", "succ"],
            StructureClass::HomMDendriform => &["tright", "tleft"],
            StructureClass::HomAltQuadri => &["ne", "se", "sw", "nw"],
        }
    }

    fn derived(self) -> &'static [DerivedProduct] {
        match self {
            StructureClass::HomMalcev | StructureClass::HomAlternative | StructureClass::HomPreLie => &[],
            StructureClass::HomPreMalcev => &[DerivedProduct {
                label: "bracket",
                terms: &[(1, "dot", false), (-1, "dot", true)],
            }],
            StructureClass::HomPreAlternative => &[DerivedProduct {
                label: "star",
                terms: &[(1, "prec", false), (1, "succ", false)],
            }],
            StructureClass::HomMDendriform => &[
                DerivedProduct {
                    label: "dot",
                    terms: &[(1, "tleft", false), (1, "tright", false)],
                },
                DerivedProduct {
                    label: "diamond",
                    terms: &[(1, "tleft", false), (-1, "tright", true)],
                },
                DerivedProduct {
                    label: "bracket",
                    terms: &[(1, "tleft", false), (1, "tright", false), (-1, "tleft", true), (-1, "tright", true)],
                },
            ],
            StructureClass::HomAltQuadri => &[
                DerivedProduct {
                    label: "succ",
                    terms: &[(1, "ne", false), (1, "se", false)],
                },
                DerivedProduct {
                    label: "prec",
                    terms: &[(1, "nw", false), (1, "sw", false)],
                },
                DerivedProduct {
                    label: "vee",
                    terms: &[(1, "se", false), (1, "sw", false)],
                },
                DerivedProduct {
                    label: "wedge",
                    terms: &[(1, "ne", false), (1, "nw", false)],
                },
                DerivedProduct {
                    label: "star",
                    terms: &[(1, "ne", false), (1, "se", false), (1, "sw", false), (1, "nw", false)],
                },
            ],
        }
    }

    /// Copy of `alg` restricted to the class's products, with the derived
    /// products (`bracket`, `star`, `dot`, ...) the catalog refers to added.
    pub fn augment(self, alg: &HomAlgebra) -> Result<HomAlgebra, Error> {
        let labels: Vec<(&str, &str)> = self.required_products().iter().map(|l| (*l, *l)).collect();
        let mut out = alg.select(&labels)?;
        for d in self.derived() {
            let t = combine(alg, d.terms)?;
            out = out.with_product(d.label, t);
        }
        Ok(out)
    }

    pub fn catalog(self) -> Vec<CatalogEntry> {
        match self {
            StructureClass::HomMalcev => vec![
                CatalogEntry::new("malcev-antisymmetry", "p(bracket,x,y) + p(bracket,y,x)".into()),
                CatalogEntry::new(
                    "malcev-identity",
                    "p(bracket,A(p(bracket,x,z)),A(p(bracket,y,t))) \
                     - p(bracket,p(bracket,p(bracket,x,y),A(z)),A2(t)) \
                     - p(bracket,p(bracket,p(bracket,y,z),A(t)),A2(x)) \
                     - p(bracket,p(bracket,p(bracket,z,t),A(x)),A2(y)) \
                     - p(bracket,p(bracket,p(bracket,t,x),A(y)),A2(z))"
                        .into(),
                ),
            ],
            StructureClass::HomAlternative => {
                let a = |x, y, z| assoc(("star", "star"), ("star", "star"), x, y, z);
                vec![
                    CatalogEntry::new("left-alternative", join(&[(false, a("x", "y", "z")), (false, a("y", "x", "z"))])),
                    CatalogEntry::new("right-alternative", join(&[(false, a("x", "y", "z")), (false, a("x", "z", "y"))])),
                ]
            }
            StructureClass::HomPreLie => {
                let a = |x, y, z| assoc(("dot", "dot"), ("dot", "dot"), x, y, z);
                vec![CatalogEntry::new(
                    "pre-lie",
                    join(&[(false, a("x", "y", "z")), (true, a("y", "x", "z"))]),
                )]
            }
            StructureClass::HomPreMalcev => vec![CatalogEntry::new(
                "pre-malcev",
                "p(dot,p(bracket,A(y),A(z)),A(p(dot,x,t))) \
                 + p(dot,p(bracket,p(bracket,x,y),A(z)),A2(t)) \
                 + p(dot,A2(y),p(dot,p(bracket,x,z),A(t))) \
                 - p(dot,A2(x),p(dot,A(y),p(dot,z,t))) \
                 + p(dot,A2(z),p(dot,A(x),p(dot,y,t)))"
                    .into(),
            )],
            StructureClass::HomPreAlternative => {
                // as(outer-left, inner-left; outer-right, inner-right)
                let mid = |x, y, z| assoc(("prec", "succ"), ("succ", "prec"), x, y, z);
                let left = |x, y, z| assoc(("prec", "prec"), ("prec", "star"), x, y, z);
                let right = |x, y, z| assoc(("succ", "star"), ("succ", "succ"), x, y, z);
                vec![
                    CatalogEntry::new("pre-alt-1", join(&[(false, mid("x", "y", "z")), (false, left("y", "x", "z"))])),
                    CatalogEntry::new("pre-alt-2", join(&[(false, mid("x", "y", "z")), (false, right("x", "z", "y"))])),
                    CatalogEntry::new("pre-alt-3", join(&[(false, right("x", "y", "z")), (false, right("y", "x", "z"))])),
                    CatalogEntry::new("pre-alt-4", join(&[(false, left("x", "y", "z")), (false, left("x", "z", "y"))])),
                ]
            }
            StructureClass::HomMDendriform => m_dendriform_catalog(),
            StructureClass::HomAltQuadri => quadri_catalog(),
        }
    }
}

/// Signed sum of stored products, read from `alg`.
fn combine(alg: &HomAlgebra, terms: &[(i64, &str, bool)]) -> Result<ProductTensor, Error> {
    let mut parts = Vec::new();
    for (c, label, swapped) in terms {
        let t = alg.require(label)?;
        parts.push((Scalar::from_int(*c), if *swapped { t.opposite() } else { t.clone() }));
    }
    let refs: Vec<(Scalar, &ProductTensor)> = parts.iter().map(|(c, t)| (c.clone(), t)).collect();
    Ok(ProductTensor::linear_combination(&refs, alg.dim()))
}

/// Hom-associator with mixed products: `(x ∘1 y) ∘2 α(z) − α(x) ∘3 (y ∘4 z)`
/// where `left = (∘2, ∘1)` and `right = (∘3, ∘4)`.
fn assoc(left: (&str, &str), right: (&str, &str), x: &str, y: &str, z: &str) -> [(bool, String); 2] {
    [
        (false, format!("p({},p({},{x},{y}),A({z}))", left.0, left.1)),
        (true, format!("p({},A({x}),p({},{y},{z}))", right.0, right.1)),
    ]
}

fn join(parts: &[(bool, [(bool, String); 2])]) -> String {
    let mut out = String::new();
    for (negate, terms) in parts {
        for (neg, t) in terms {
            let minus = neg ^ negate;
            if out.is_empty() {
                if minus {
                    out.push('-');
                }
            } else {
                out.push_str(if minus { " - " } else { " + " });
            }
            out.push_str(t);
        }
    }
    out
}

fn m_dendriform_catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new(
            "m-dendriform-1",
            "p(tright,p(diamond,A(z),p(diamond,y,x)),A2(t)) \
             - p(tright,A2(x),p(dot,A(y),p(dot,z,t))) \
             + p(tleft,A2(z),p(tright,A(x),p(dot,y,t))) \
             + p(tleft,A(p(bracket,y,z)),A(p(tright,x,t))) \
             - p(tleft,A2(y),p(tright,p(diamond,z,x),A(t)))"
                .into(),
        ),
        CatalogEntry::new(
            "m-dendriform-2",
            "p(tleft,A2(z),p(tleft,A(x),p(tright,y,t))) \
             - p(tright,p(diamond,A(z),p(diamond,x,y)),A2(t)) \
             - p(tleft,A2(x),p(tright,A(y),p(dot,z,t))) \
             - p(tright,A(p(diamond,z,y)),A(p(dot,x,t))) \
             + p(tright,A2(y),p(dot,p(bracket,x,z),A(t)))"
                .into(),
        ),
        // First term as used when the relations are regrouped into the
        // pre-Malcev identity; the printed `α²z ◀ (αx ◀ (y ◀ t))` fails on the
        // 4-dimensional splitting example.
        CatalogEntry::new("m-dendriform-3", M_DENDRIFORM_3.replace("{first}", "p(tright,A2(z),p(dot,A(x),p(dot,y,t)))")),
        CatalogEntry::new(
            "m-dendriform-4",
            "p(tleft,p(bracket,p(bracket,x,y),A(z)),A2(t)) \
             - p(tleft,A2(x),p(tleft,A(y),p(tleft,z,t))) \
             + p(tleft,A2(z),p(tleft,A(x),p(tleft,y,t))) \
             + p(tleft,A(p(bracket,y,z)),A(p(tleft,x,t))) \
             + p(tleft,A2(y),p(tleft,p(bracket,x,z),A(t)))"
                .into(),
        ),
    ]
}

const M_DENDRIFORM_3: &str = "{first} \
     + p(tright,p(diamond,p(bracket,x,y),A(z)),A2(t)) \
     - p(tleft,A2(x),p(tleft,A(y),p(tright,z,t))) \
     + p(tright,A(p(diamond,y,z)),A(p(dot,x,t))) \
     + p(tleft,A2(y),p(tright,p(diamond,x,z),A(t)))";

/// The third M-dendriform relation with its first term exactly as printed in the literature.
pub fn m_dendriform_3_as_printed() -> CatalogEntry {
    CatalogEntry::new(
        "m-dendriform-3-printed",
        M_DENDRIFORM_3.replace("{first}", "p(tleft,A2(z),p(tleft,A(x),p(tleft,y,t)))"),
    )
}

fn quadri_catalog() -> Vec<CatalogEntry> {
    // The nine α-associators of a quadri-algebra.
    let r = |x, y, z| assoc(("nw", "nw"), ("nw", "star"), x, y, z);
    let l = |x, y, z| assoc(("se", "star"), ("se", "se"), x, y, z);
    let m = |x, y, z| assoc(("nw", "se"), ("se", "nw"), x, y, z);
    let n = |x, y, z| assoc(("nw", "ne"), ("ne", "prec"), x, y, z);
    let w = |x, y, z| assoc(("nw", "sw"), ("sw", "wedge"), x, y, z);
    let s = |x, y, z| assoc(("sw", "succ"), ("se", "sw"), x, y, z);
    let e = |x, y, z| assoc(("ne", "vee"), ("se", "ne"), x, y, z);
    let ne = |x, y, z| assoc(("ne", "wedge"), ("ne", "succ"), x, y, z);
    let sw = |x, y, z| assoc(("sw", "prec"), ("sw", "vee"), x, y, z);
    let pair = |id: &str, a: [(bool, String); 2], b: [(bool, String); 2]| {
        CatalogEntry::new(id, join(&[(false, a), (false, b)]))
    };
    vec![
        pair("quadri-1", r("x", "y", "z"), m("y", "x", "z")),
        pair("quadri-2", r("x", "y", "z"), r("x", "z", "y")),
        pair("quadri-3", n("x", "y", "z"), w("y", "x", "z")),
        pair("quadri-4", n("x", "y", "z"), ne("x", "z", "y")),
        pair("quadri-5", ne("x", "y", "z"), e("y", "x", "z")),
        pair("quadri-6", w("x", "y", "z"), sw("x", "z", "y")),
        pair("quadri-7", sw("x", "y", "z"), s("y", "x", "z")),
        pair("quadri-8", m("x", "y", "z"), l("x", "z", "y")),
        pair("quadri-9", l("x", "y", "z"), l("y", "x", "z")),
    ]
}

impl ModuleClass {
    pub const ALL: [ModuleClass; 4] = [
        ModuleClass::MalcevRepresentation,
        ModuleClass::AltBimodule,
        ModuleClass::PreMalcevBimodule,
        ModuleClass::PreAltBimodule,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModuleClass::MalcevRepresentation => "malcev-representation",
            ModuleClass::AltBimodule => "alt-bimodule",
            ModuleClass::PreMalcevBimodule => "pre-malcev-bimodule",
            ModuleClass::PreAltBimodule => "pre-alt-bimodule",
        }
    }

    /// The structure class of the acting algebra.
    pub fn algebra_class(self) -> StructureClass {
        match self {
            ModuleClass::MalcevRepresentation => StructureClass::HomMalcev,
            ModuleClass::AltBimodule => StructureClass::HomAlternative,
            ModuleClass::PreMalcevBimodule => StructureClass::HomPreMalcev,
            ModuleClass::PreAltBimodule => StructureClass::HomPreAlternative,
        }
    }

    /// Action labels a module of this class must provide (`rho` may be given
    /// directly or derived from `ell` and `r`).
    pub fn required_actions(self) -> &'static [&'static str] {
        match self {
            ModuleClass::MalcevRepresentation => &["rho"],
            ModuleClass::AltBimodule | ModuleClass::PreMalcevBimodule => &["ell", "r"],
            ModuleClass::PreAltBimodule => &["Lsucc", "Rsucc", "Lprec", "Rprec"],
        }
    }

    pub fn catalog(self) -> Vec<CatalogEntry> {
        let commute = |label: &str| {
            CatalogEntry::new(
                &format!("beta-commutation-{label}"),
                format!("act({label},A(x),B(v)) - B(act({label},x,v))"),
            )
        };
        let mut out: Vec<CatalogEntry> = self.required_actions().iter().map(|l| commute(l)).collect();
        let eq = |id: &str, src: &str| CatalogEntry::new(id, src.split_whitespace().collect::<Vec<_>>().join(" "));
        match self {
            ModuleClass::MalcevRepresentation => out.push(eq(
                "representation",
                "act(rho,p(bracket,p(bracket,x,y),A(z)),B2(v)) \
                 - act(rho,A2(x),act(rho,A(y),act(rho,z,v))) \
                 + act(rho,A2(z),act(rho,A(x),act(rho,y,v))) \
                 - act(rho,A2(y),act(rho,p(bracket,z,x),B(v))) \
                 + act(rho,A(p(bracket,y,z)),act(rho,A(x),B(v)))",
            )),
            ModuleClass::AltBimodule => out.extend([
                eq(
                    "left-square",
                    "act(ell,p(star,x,y) + p(star,y,x),B(v)) \
                     - act(ell,A(x),act(ell,y,v)) - act(ell,A(y),act(ell,x,v))",
                ),
                eq(
                    "right-square",
                    "act(r,p(star,x,y) + p(star,y,x),B(v)) \
                     - act(r,A(x),act(r,y,v)) - act(r,A(y),act(r,x,v))",
                ),
                eq(
                    "middle-right",
                    "act(r,A(y),act(ell,x,v)) - act(ell,A(x),act(r,y,v)) \
                     - act(r,p(star,x,y),B(v)) + act(r,A(y),act(r,x,v))",
                ),
                eq(
                    "middle-left",
                    "act(ell,p(star,y,x),B(v)) - act(ell,A(y),act(ell,x,v)) \
                     - act(ell,A(y),act(r,x,v)) + act(r,A(x),act(ell,y,v))",
                ),
            ]),
            ModuleClass::PreMalcevBimodule => out.extend([
                // The fourth term enters with a minus sign, as the module
                // component of the semidirect product requires.
                eq(
                    "bimodule-2",
                    "act(r,A2(x),act(rho,A(y),act(rho,z,v))) \
                     - act(r,p(dot,A(z),p(dot,y,x)),B2(v)) \
                     + act(ell,A2(y),act(r,p(dot,z,x),B(v))) \
                     - act(ell,A(p(bracket,y,z)),act(r,A(x),B(v))) \
                     - act(ell,A2(z),act(r,A(x),act(rho,y,v)))",
                ),
                eq(
                    "bimodule-3",
                    "act(ell,A2(y),act(ell,A(z),act(r,x,v))) \
                     - act(r,A2(x),act(rho,A(y),act(rho,z,v))) \
                     - act(ell,A2(z),act(r,p(dot,y,x),B(v))) \
                     - act(r,A(p(dot,z,x)),act(rho,A(y),B(v))) \
                     + act(r,p(dot,p(bracket,z,y),A(x)),B2(v))",
                ),
                eq(
                    "bimodule-4",
                    "act(r,p(dot,A(y),p(dot,z,x)),B2(v)) \
                     + act(r,A2(x),act(rho,p(bracket,y,z),B(v))) \
                     - act(ell,A2(y),act(ell,A(z),act(r,x,v))) \
                     + act(r,A(p(dot,y,x)),act(rho,A(z),B(v))) \
                     + act(ell,A2(z),act(r,A(x),act(rho,y,v)))",
                ),
                eq(
                    "bimodule-5",
                    "act(ell,p(bracket,p(bracket,x,y),A(z)),B2(v)) \
                     - act(ell,A2(x),act(ell,A(y),act(ell,z,v))) \
                     + act(ell,A2(z),act(ell,A(x),act(ell,y,v))) \
                     + act(ell,A(p(bracket,y,z)),act(ell,A(x),B(v))) \
                     + act(ell,A2(y),act(ell,p(bracket,x,z),B(v)))",
                ),
            ]),
            ModuleClass::PreAltBimodule => out.extend(pre_alt_bimodule_equations()),
        }
        out
    }
}

/// The ten pre-alternative bimodule equations as `lhs - rhs`. `L` and `R` are
/// `Lprec + Lsucc` and `Rprec + Rsucc`.
fn pre_alt_bimodule_equations() -> Vec<CatalogEntry> {
    let eq = |id: &str, src: &str| CatalogEntry::new(id, src.split_whitespace().collect::<Vec<_>>().join(" "));
    vec![
        eq(
            "pabm-1",
            "act(Lsucc,p(star,x,y) + p(star,y,x),B(v)) \
             - act(Lsucc,A(x),act(Lsucc,y,v)) - act(Lsucc,A(y),act(Lsucc,x,v))",
        ),
        eq(
            "pabm-2",
            "act(Rsucc,A(y),act(L,x,v) + act(R,x,v)) \
             - act(Lsucc,A(x),act(Rsucc,y,v)) - act(Rsucc,p(succ,x,y),B(v))",
        ),
        eq(
            "pabm-3",
            "act(Rprec,A(y),act(Lsucc,x,v)) + act(Rprec,A(y),act(Rprec,x,v)) \
             - act(Lsucc,A(x),act(Rprec,y,v)) - act(Rprec,p(star,x,y),B(v))",
        ),
        eq(
            "pabm-4",
            "act(Rprec,A(y),act(Rsucc,x,v)) + act(Rsucc,A(y),act(Lprec,x,v)) \
             - act(Lprec,A(x),act(R,y,v)) - act(Rsucc,p(star,x,y),B(v))",
        ),
        eq(
            "pabm-5",
            "act(Lprec,p(prec,y,x),B(v)) + act(Lprec,p(succ,x,y),B(v)) \
             - act(Lprec,A(y),act(L,x,v)) - act(Lsucc,A(y),act(Lsucc,x,v))",
        ),
        // L≻(y) without α, as printed.
        eq(
            "pabm-6",
            "act(Rprec,A(x),act(Lsucc,y,v)) + act(Lsucc,p(succ,y,x),B(v)) \
             - act(Lsucc,y,act(Rprec,x,v)) - act(Lsucc,A(y),act(Lsucc,x,v))",
        ),
        eq(
            "pabm-7",
            "act(Rprec,A(x),act(Rsucc,y,v)) + act(Rsucc,A(y),act(R,x,v)) \
             - act(Rsucc,p(prec,y,x),B(v)) - act(Rsucc,p(succ,x,y),B(v))",
        ),
        // The printed last term R≻(y) repeats y; R≻(x) restores multilinearity.
        eq(
            "pabm-8",
            "act(Lprec,p(succ,y,x),B(v)) + act(Rsucc,A(x),act(L,y,v)) \
             - act(Lsucc,A(y),act(Lprec,x,v)) - act(Lsucc,A(y),act(Rsucc,x,v))",
        ),
        eq(
            "pabm-9",
            "act(Rprec,A(x),act(Rprec,y,v)) + act(Rprec,A(y),act(Rprec,x,v)) \
             - act(Rprec,p(star,x,y) + p(star,y,x),B(v))",
        ),
        eq(
            "pabm-10",
            "act(Rprec,A(y),act(Lprec,x,v)) + act(Lprec,p(prec,x,y),B(v)) \
             - act(Lprec,A(x),act(R,y,v) + act(L,y,v))",
        ),
    ]
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        StructureClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let known: Vec<&str> = StructureClass::ALL.iter().map(|c| c.name()).collect();
            Error::Invalid(format!("unknown structure class `{s}`; expected one of {}", known.join(", ")))
        })
    }
}

impl FromStr for ModuleClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        ModuleClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let known: Vec<&str> = ModuleClass::ALL.iter().map(|c| c.name()).collect();
            Error::Invalid(format!("unknown module class `{s}`; expected one of {}", known.join(", ")))
        })
    }
}
