//! Brute-force evaluation with plain big rationals at fixed parameter values.
//! Shares nothing with the engine beyond reading structure constants out of it.
#![allow(dead_code)]

use std::collections::BTreeMap;

use homalg::structures::HomAlgebra;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
pub type V = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Structure constants `c[i][j][k]` and twist `a[k][j]` (coefficient of `e_k` in `α e_j`).
pub struct Alg {
    pub n: usize,
    pub c: BTreeMap<String, Vec<Vec<Vec<Q>>>>,
    pub a: Vec<Vec<Q>>,
}

impl Alg {
    /// Panics unless every constant is a rational number.
    pub fn from_engine(alg: &HomAlgebra) -> Alg {
        let n = alg.dim();
        let c = alg
            .products()
            .map(|(l, t)| {
                let consts = t
                    .to_constants()
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|v| v.into_iter().map(|s| s.as_rational().expect("rational")).collect())
                            .collect()
                    })
                    .collect();
                (l.to_string(), consts)
            })
            .collect();
        let a = (0..n)
            .map(|k| (0..n).map(|j| alg.twist().get(k, j).as_rational().expect("rational")).collect())
            .collect();
        Alg { n, c, a }
    }

    pub fn e(&self, i: usize) -> V {
        (0..self.n).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
    }

    pub fn mul(&self, label: &str, x: &V, y: &V) -> V {
        let c = &self.c[label];
        let mut out = vec![Q::zero(); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.n {
                    out[k] += &xy * &c[i][j][k];
                }
            }
        }
        out
    }

    pub fn alpha(&self, x: &V) -> V {
        (0..self.n)
            .map(|k| (0..self.n).fold(Q::zero(), |s, j| s + &self.a[k][j] * &x[j]))
            .collect()
    }

    pub fn alpha2(&self, x: &V) -> V {
        self.alpha(&self.alpha(x))
    }
}

pub fn add(x: &V, y: &V) -> V {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &V, y: &V) -> V {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// `Σ ± terms`.
fn signed(terms: &[(i64, V)]) -> V {
    let n = terms[0].1.len();
    let mut out = vec![Q::zero(); n];
    for (s, v) in terms {
        for k in 0..n {
            out[k] += q(*s) * &v[k];
        }
    }
    out
}

/// Residual of a named identity at explicit vectors. Derived products are
/// formed here from the stored ones.
pub fn residual(name: &str, alg: &Alg, v: &[V]) -> V {
    let a = |x: &V| alg.alpha(x);
    let a2 = |x: &V| alg.alpha2(x);
    match name {
        "malcev-antisymmetry" => {
            let b = |x: &V, y: &V| alg.mul("bracket", x, y);
            add(&b(&v[0], &v[1]), &b(&v[1], &v[0]))
        }
        "malcev-identity" => {
            let b = |x: &V, y: &V| alg.mul("bracket", x, y);
            let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
            // Σ over the cyclic shifts (x,y,z,t) → (y,z,t,x) of [[[x,y],αz],α²t]
            let jac = |x: &V, y: &V, z: &V, t: &V| b(&b(&b(x, y), &a(z)), &a2(t));
            signed(&[
                (1, b(&a(&b(x, z)), &a(&b(y, t)))),
                (-1, jac(x, y, z, t)),
                (-1, jac(y, z, t, x)),
                (-1, jac(z, t, x, y)),
                (-1, jac(t, x, y, z)),
            ])
        }
        "pre-malcev" => {
            let d = |x: &V, y: &V| alg.mul("dot", x, y);
            let b = |x: &V, y: &V| sub(&d(x, y), &d(y, x));
            let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
            signed(&[
                (1, d(&b(&a(y), &a(z)), &a(&d(x, t)))),
                (1, d(&b(&b(x, y), &a(z)), &a2(t))),
                (1, d(&a2(y), &d(&b(x, z), &a(t)))),
                (-1, d(&a2(x), &d(&a(y), &d(z, t)))),
                (1, d(&a2(z), &d(&a(x), &d(y, t)))),
            ])
        }
        "left-alternative" | "right-alternative" => {
            let m = |x: &V, y: &V| alg.mul("star", x, y);
            let asc = |x: &V, y: &V, z: &V| sub(&m(&m(x, y), &a(z)), &m(&a(x), &m(y, z)));
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            if name == "left-alternative" {
                add(&asc(x, y, z), &asc(y, x, z))
            } else {
                add(&asc(x, y, z), &asc(x, z, y))
            }
        }
        m if m.starts_with("pre-alt-") => {
            let l = |x: &V, y: &V| alg.mul("prec", x, y);
            let r = |x: &V, y: &V| alg.mul("succ", x, y);
            let st = |x: &V, y: &V| add(&l(x, y), &r(x, y));
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            match m {
                "pre-alt-1" => signed(&[
                    (1, l(&r(x, y), &a(z))),
                    (-1, r(&a(x), &l(y, z))),
                    (1, l(&l(y, x), &a(z))),
                    (-1, l(&a(y), &st(x, z))),
                ]),
                "pre-alt-2" => signed(&[
                    (1, l(&r(x, y), &a(z))),
                    (-1, r(&a(x), &l(y, z))),
                    (1, r(&st(x, z), &a(y))),
                    (-1, r(&a(x), &r(z, y))),
                ]),
                "pre-alt-3" => signed(&[
                    (1, r(&st(x, y), &a(z))),
                    (-1, r(&a(x), &r(y, z))),
                    (1, r(&st(y, x), &a(z))),
                    (-1, r(&a(y), &r(x, z))),
                ]),
                "pre-alt-4" => signed(&[
                    (1, l(&l(x, y), &a(z))),
                    (-1, l(&a(x), &st(y, z))),
                    (1, l(&l(x, z), &a(y))),
                    (-1, l(&a(x), &st(z, y))),
                ]),
                _ => panic!("no oracle for {name}"),
            }
        }
        m if m.starts_with("m-dendriform-") => {
            let r = |x: &V, y: &V| alg.mul("tright", x, y);
            let l = |x: &V, y: &V| alg.mul("tleft", x, y);
            let d = |x: &V, y: &V| add(&l(x, y), &r(x, y));
            let dm = |x: &V, y: &V| sub(&l(x, y), &r(y, x));
            let b = |x: &V, y: &V| sub(&d(x, y), &d(y, x));
            let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
            match m {
                "m-dendriform-1" => signed(&[
                    (1, r(&dm(&a(z), &dm(y, x)), &a2(t))),
                    (-1, r(&a2(x), &d(&a(y), &d(z, t)))),
                    (1, l(&a2(z), &r(&a(x), &d(y, t)))),
                    (1, l(&a(&b(y, z)), &a(&r(x, t)))),
                    (-1, l(&a2(y), &r(&dm(z, x), &a(t)))),
                ]),
                "m-dendriform-2" => signed(&[
                    (1, l(&a2(z), &l(&a(x), &r(y, t)))),
                    (-1, r(&dm(&a(z), &dm(x, y)), &a2(t))),
                    (-1, l(&a2(x), &r(&a(y), &d(z, t)))),
                    (-1, r(&a(&dm(z, y)), &a(&d(x, t)))),
                    (1, r(&a2(y), &d(&b(x, z), &a(t)))),
                ]),
                "m-dendriform-3" => signed(&[
                    (1, r(&a2(z), &d(&a(x), &d(y, t)))),
                    (1, r(&dm(&b(x, y), &a(z)), &a2(t))),
                    (-1, l(&a2(x), &l(&a(y), &r(z, t)))),
                    (1, r(&a(&dm(y, z)), &a(&d(x, t)))),
                    (1, l(&a2(y), &r(&dm(x, z), &a(t)))),
                ]),
                "m-dendriform-4" => signed(&[
                    (1, l(&b(&b(x, y), &a(z)), &a2(t))),
                    (-1, l(&a2(x), &l(&a(y), &l(z, t)))),
                    (1, l(&a2(z), &l(&a(x), &l(y, t)))),
                    (1, l(&a(&b(y, z)), &a(&l(x, t)))),
                    (1, l(&a2(y), &l(&b(x, z), &a(t)))),
                ]),
                _ => panic!("no oracle for {name}"),
            }
        }
        _ => panic!("no oracle for {name}"),
    }
}

pub fn arity(name: &str) -> usize {
    match name {
        "malcev-antisymmetry" => 2,
        "left-alternative" | "right-alternative" => 3,
        m if m.starts_with("pre-alt-") => 3,
        _ => 4,
    }
}

/// Every basis tuple of the given arity, lexicographically; returns the first nonzero residual.
pub fn first_violation(name: &str, alg: &Alg) -> Option<(Vec<usize>, V)> {
    let k = arity(name);
    let total = alg.n.pow(k as u32);
    (0..total).find_map(|mut idx| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = idx % alg.n;
            idx /= alg.n;
        }
        let vs: Vec<V> = t.iter().map(|&i| alg.e(i)).collect();
        let r = residual(name, alg, &vs);
        r.iter().any(|c| !c.is_zero()).then_some((t, r))
    })
}
