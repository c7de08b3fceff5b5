//! Hom-algebras as structure constants, modules as action matrices, and reports.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::exactnum::{Matrix, Scalar, Vector};
use crate::Error;

/// A bilinear product on an `n`-dimensional space: `get(i, j)` is `e_i ∘ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTensor {
    n: usize,
    entries: Vec<Vector>,
}

impl ProductTensor {
    pub fn zero(n: usize) -> Self {
        ProductTensor {
            n,
            entries: vec![Vector::zeros(n); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert_eq!(v.dim(), n, "product value has wrong dimension");
                entries.push(v);
            }
        }
        ProductTensor { n, entries }
    }

    pub fn try_from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<Vector, Error>,
    ) -> Result<Self, Error> {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j)?);
            }
        }
        ProductTensor::from_entries(n, entries)
    }

    /// From nested arrays `c[i][j][k]`.
    pub fn from_constants(c: Vec<Vec<Vec<Scalar>>>) -> Result<Self, Error> {
        let n = c.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in c {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "product row has {} entries, expected {n}",
                    row.len()
                )));
            }
            for v in row {
                entries.push(Vector(v));
            }
        }
        ProductTensor::from_entries(n, entries)
    }

    fn from_entries(n: usize, entries: Vec<Vector>) -> Result<Self, Error> {
        if let Some(v) = entries.iter().find(|v| v.dim() != n) {
            return Err(Error::ShapeMismatch(format!(
                "product value of length {}, expected {n}",
                v.dim()
            )));
        }
        Ok(ProductTensor { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.entries[i * self.n + j]
    }

    pub fn to_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).0.clone()).collect())
            .collect()
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.n);
        for (i, xi) in x.nonzero() {
            for (j, yj) in y.nonzero() {
                let e = self.get(i, j);
                if !e.is_zero() {
                    out.add_scaled(&(xi * yj), e);
                }
            }
        }
        out
    }

    /// `x ∘' y = y ∘ x`
    pub fn opposite(&self) -> ProductTensor {
        ProductTensor::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn linear_combination(terms: &[(Scalar, &ProductTensor)], n: usize) -> ProductTensor {
        ProductTensor::from_fn(n, |i, j| {
            let mut v = Vector::zeros(n);
            for (c, t) in terms {
                v.add_scaled(c, t.get(i, j));
            }
            v
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vector::is_zero)
    }

    pub fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.entries.iter().flat_map(|v| v.iter())
    }

    pub fn substitute(&self, values: &[Option<BigRational>]) -> Result<Self, Error> {
        Ok(ProductTensor {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|v| v.substitute(values))
                .collect::<Result<_, _>>()?,
        })
    }
}

/// A vector space with labelled bilinear products and a twisting map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    dim: usize,
    params: Vec<String>,
    products: BTreeMap<String, ProductTensor>,
    twist: Matrix,
}

impl HomAlgebra {
    /// Validating constructor.
    pub fn new(
        dim: usize,
        params: Vec<String>,
        products: Vec<(String, ProductTensor)>,
        twist: Matrix,
    ) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::ShapeMismatch("dimension must be positive".into()));
        }
        if twist.shape() != (dim, dim) {
            return Err(Error::ShapeMismatch(format!(
                "twist is {}x{}, expected {dim}x{dim}",
                twist.rows(),
                twist.cols()
            )));
        }
        let mut map = BTreeMap::new();
        for (label, t) in products {
            if t.dim() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "product `{label}` has dimension {}, expected {dim}",
                    t.dim()
                )));
            }
            if map.insert(label.clone(), t).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
        }
        Ok(HomAlgebra {
            dim,
            params,
            products: map,
            twist,
        })
    }

    /// Untwisted algebra (α = identity) with a single product.
    pub fn classical(params: Vec<String>, label: &str, product: ProductTensor) -> Self {
        let n = product.dim();
        HomAlgebra::new(n, params, vec![(label.to_string(), product)], Matrix::identity(n))
            .expect("consistent shapes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.products.keys().map(String::as_str)
    }

    pub fn products(&self) -> impl Iterator<Item = (&str, &ProductTensor)> {
        self.products.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn has_product(&self, label: &str) -> bool {
        self.products.contains_key(label)
    }

    pub fn product(&self, label: &str) -> Result<&ProductTensor, Error> {
        self.products
            .get(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Like [`HomAlgebra::product`] but reports a missing product as such.
    pub fn require(&self, label: &str) -> Result<&ProductTensor, Error> {
        self.products
            .get(label)
            .ok_or_else(|| Error::MissingProduct(label.to_string()))
    }

    pub fn product_eval(&self, label: &str, x: &Vector, y: &Vector) -> Result<Vector, Error> {
        let t = self.product(label)?;
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::ShapeMismatch("argument dimension".into()));
        }
        Ok(t.eval(x, y))
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim, i)
    }

    /// Add or replace a product.
    pub fn with_product(mut self, label: &str, t: ProductTensor) -> Self {
        assert_eq!(t.dim(), self.dim);
        self.products.insert(label.to_string(), t);
        self
    }

    pub fn with_twist(mut self, twist: Matrix) -> Result<Self, Error> {
        if twist.shape() != (self.dim, self.dim) {
            return Err(Error::ShapeMismatch("twist shape".into()));
        }
        self.twist = twist;
        Ok(self)
    }

    /// Keep only the listed products, renamed: `(from, to)`.
    pub fn select(&self, labels: &[(&str, &str)]) -> Result<Self, Error> {
        let mut products = Vec::new();
        for (from, to) in labels {
            products.push((to.to_string(), self.require(from)?.clone()));
        }
        HomAlgebra::new(self.dim, self.params.clone(), products, self.twist.clone())
    }

    /// Same algebra with a different parameter list (for merging workspaces).
    pub fn with_params(mut self, params: Vec<String>) -> Self {
        self.params = params;
        self
    }

    pub fn substitute(&self, values: &[Option<BigRational>]) -> Result<Self, Error> {
        Ok(HomAlgebra {
            dim: self.dim,
            params: self.params.clone(),
            products: self
                .products
                .iter()
                .map(|(k, t)| Ok((k.clone(), t.substitute(values)?)))
                .collect::<Result<_, Error>>()?,
            twist: self.twist.substitute(values)?,
        })
    }

    /// Every scalar in the structure constants and the twist.
    pub fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.products
            .values()
            .flat_map(|t| t.scalars())
            .chain(matrix_scalars(&self.twist))
    }
}

pub(crate) fn matrix_scalars(m: &Matrix) -> impl Iterator<Item = &Scalar> {
    (0..m.rows()).flat_map(move |r| m.row(r).iter())
}

/// Action labels accepted in module files.
pub const ACTION_LABELS: [&str; 7] = ["rho", "ell", "r", "Lsucc", "Rsucc", "Lprec", "Rprec"];

/// A module (representation or bimodule): twisting map β and, per action label,
/// one `m×m` matrix for each algebra basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    mdim: usize,
    twist: Matrix,
    actions: BTreeMap<String, Vec<Matrix>>,
}

impl ModuleSpec {
    pub fn new(mdim: usize, twist: Matrix, actions: Vec<(String, Vec<Matrix>)>) -> Result<Self, Error> {
        if mdim == 0 {
            return Err(Error::ShapeMismatch("module dimension must be positive".into()));
        }
        if twist.shape() != (mdim, mdim) {
            return Err(Error::ShapeMismatch(format!(
                "beta is {}x{}, expected {mdim}x{mdim}",
                twist.rows(),
                twist.cols()
            )));
        }
        let mut map = BTreeMap::new();
        let mut n = None;
        for (label, ms) in actions {
            if !ACTION_LABELS.contains(&label.as_str()) {
                return Err(Error::Invalid(format!("unknown action label `{label}`")));
            }
            if *n.get_or_insert(ms.len()) != ms.len() {
                return Err(Error::ShapeMismatch(format!(
                    "action `{label}` has {} matrices, other actions have {}",
                    ms.len(),
                    n.unwrap()
                )));
            }
            if let Some(m) = ms.iter().find(|m| m.shape() != (mdim, mdim)) {
                return Err(Error::ShapeMismatch(format!(
                    "action `{label}` matrix is {}x{}, expected {mdim}x{mdim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if map.insert(label.clone(), ms).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
        }
        Ok(ModuleSpec {
            mdim,
            twist,
            actions: map,
        })
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.actions.keys().map(String::as_str)
    }

    pub fn actions(&self) -> impl Iterator<Item = (&str, &[Matrix])> {
        self.actions.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    /// Number of algebra basis vectors the actions are indexed by (if any action exists).
    pub fn algebra_dim(&self) -> Option<usize> {
        self.actions.values().next().map(Vec::len)
    }

    pub fn has_action(&self, label: &str) -> bool {
        self.actions.contains_key(label)
    }

    /// A stored action, or one of the derived ones: `rho = ell - r`,
    /// `L = Lprec + Lsucc`, `R = Rprec + Rsucc`.
    pub fn action(&self, label: &str) -> Result<Vec<Matrix>, Error> {
        if let Some(ms) = self.actions.get(label) {
            return Ok(ms.clone());
        }
        let combine = |a: &str, b: &str, sign: i64| -> Result<Vec<Matrix>, Error> {
            let x = self.stored(a)?;
            let y = self.stored(b)?;
            x.iter()
                .zip(y)
                .map(|(p, q)| p.add(&q.scale(&Scalar::from_int(sign))))
                .collect()
        };
        match label {
            "rho" => combine("ell", "r", -1),
            "L" => combine("Lprec", "Lsucc", 1),
            "R" => combine("Rprec", "Rsucc", 1),
            _ => Err(Error::MissingAction(label.to_string())),
        }
    }

    fn stored(&self, label: &str) -> Result<&Vec<Matrix>, Error> {
        self.actions
            .get(label)
            .ok_or_else(|| Error::MissingAction(label.to_string()))
    }

    pub fn with_action(mut self, label: &str, ms: Vec<Matrix>) -> Self {
        self.actions.insert(label.to_string(), ms);
        self
    }

    pub fn substitute(&self, values: &[Option<BigRational>]) -> Result<Self, Error> {
        Ok(ModuleSpec {
            mdim: self.mdim,
            twist: self.twist.substitute(values)?,
            actions: self
                .actions
                .iter()
                .map(|(k, ms)| {
                    Ok((
                        k.clone(),
                        ms.iter().map(|m| m.substitute(values)).collect::<Result<_, Error>>()?,
                    ))
                })
                .collect::<Result<_, Error>>()?,
        })
    }

    pub fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.actions
            .values()
            .flat_map(|ms| ms.iter().flat_map(matrix_scalars))
            .chain(matrix_scalars(&self.twist))
    }
}

/// Apply the action family `ms` of `x` to `v`: `Σ x_i ms[i] v`.
pub fn act(ms: &[Matrix], x: &Vector, v: &Vector) -> Vector {
    let mut out = Vector::zeros(v.dim());
    for (i, xi) in x.nonzero() {
        let w = ms[i].apply(v).expect("action shape");
        out.add_scaled(xi, &w);
    }
    out
}

/// Operator matrix `Σ x_i ms[i]`.
pub fn action_matrix(ms: &[Matrix], x: &Vector, m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (i, xi) in x.nonzero() {
        out = out.add(&ms[i].scale(xi)).expect("action shape");
    }
    out
}

/// A named linear map (Rota-Baxter operator, O-operator, morphism, bilinear form).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    pub name: String,
    pub matrix: Matrix,
}

impl LinearOperator {
    pub fn new(name: &str, matrix: Matrix) -> Self {
        LinearOperator {
            name: name.to_string(),
            matrix,
        }
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, Error> {
        self.matrix.apply(v)
    }

    pub fn substitute(&self, values: &[Option<BigRational>]) -> Result<Self, Error> {
        Ok(LinearOperator {
            name: self.name.clone(),
            matrix: self.matrix.substitute(values)?,
        })
    }
}

/// Which space a tuple entry ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// `e_{i+1}` of the algebra
    Alg(usize),
    /// `v_{i+1}` of the module
    Mod(usize),
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Alg(i) => write!(f, "e{}", i + 1),
            Basis::Mod(i) => write!(f, "v{}", i + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub tuple: Vec<Basis>,
    pub residual: Vector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of a check. `verdict` is `Pass` exactly when `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    /// Denominators assumed nonzero, rendered as text.
    pub assumptions: Vec<String>,
    /// Identities checked and how many tuples each one ranged over.
    pub checked: Vec<(String, usize)>,
    /// Notes that need a reader's attention, e.g. disagreeing verification routes.
    pub flags: Vec<String>,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Report {
            verdict: Verdict::Pass,
            violations: Vec::new(),
            assumptions: Vec::new(),
            checked: Vec::new(),
            flags: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn record(&mut self, identity: &str, tuples: usize, mut violations: Vec<Violation>) {
        self.checked.push((identity.to_string(), tuples));
        self.violations.append(&mut violations);
        self.finish();
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
        self.checked.extend(other.checked);
        self.flags.extend(other.flags);
        for a in other.assumptions {
            if !self.assumptions.contains(&a) {
                self.assumptions.push(a);
            }
        }
        self.finish();
    }

    pub fn assume_from<'a>(&mut self, scalars: impl Iterator<Item = &'a Scalar>, params: &[String]) {
        for s in scalars {
            let d = s.denominator();
            if !d.is_one() {
                let text = format!("{} != 0", d.render(params));
                if !self.assumptions.contains(&text) {
                    self.assumptions.push(text);
                }
            }
        }
        self.assumptions.sort();
    }

    fn finish(&mut self) {
        self.violations
            .sort_by(|a, b| a.identity.cmp(&b.identity).then_with(|| a.tuple.cmp(&b.tuple)));
        self.verdict = if self.violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }

    /// First violation of each identity, in report order.
    pub fn first_violations(&self) -> Vec<&Violation> {
        let mut seen = Vec::<&str>::new();
        let mut out = Vec::new();
        for v in &self.violations {
            if !seen.contains(&v.identity.as_str()) {
                seen.push(&v.identity);
                out.push(v);
            }
        }
        out
    }

    pub fn total_tuples(&self) -> usize {
        self.checked.iter().map(|(_, n)| n).sum()
    }

    pub fn violations_of(&self, identity: &str) -> impl Iterator<Item = &Violation> {
        let id = identity.to_string();
        self.violations.iter().filter(move |v| v.identity == id)
    }
}

/// Check `α(e_i ∘ e_j) = α(e_i) ∘ α(e_j)` on all basis pairs. Residual is `α(x∘y) − α(x)∘α(y)`.
pub fn check_multiplicative(alg: &HomAlgebra, label: &str) -> Result<Report, Error> {
    let t = alg.product(label)?;
    let a = alg.twist();
    let n = alg.dim();
    let images: Vec<Vector> = (0..n).map(|i| a.column(i)).collect();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = a.apply(t.get(i, j))?;
            let rhs = t.eval(&images[i], &images[j]);
            let r = lhs.sub(&rhs);
            if !r.is_zero() {
                violations.push(Violation {
                    identity: format!("multiplicative:{label}"),
                    tuple: vec![Basis::Alg(i), Basis::Alg(j)],
                    residual: r,
                });
            }
        }
    }
    let mut report = Report::new();
    report.record(&format!("multiplicative:{label}"), n * n, violations);
    report.assume_from(alg.scalars(), alg.params());
    Ok(report)
}

/// Check that `f` is a morphism `src → dst`: `f(x)∘'f(y) = f(x∘y)` for every
/// product label of `src`, and `f∘α = α'∘f`.
pub fn check_morphism(f: &LinearOperator, src: &HomAlgebra, dst: &HomAlgebra) -> Result<Report, Error> {
    let (n, m) = (src.dim(), dst.dim());
    if f.matrix.shape() != (m, n) {
        return Err(Error::ShapeMismatch(format!(
            "morphism is {}x{}, expected {m}x{n}",
            f.matrix.rows(),
            f.matrix.cols()
        )));
    }
    let images: Vec<Vector> = (0..n).map(|i| f.matrix.column(i)).collect();
    let mut report = Report::new();
    for (label, t) in src.products() {
        let t2 = dst.require(label)?;
        let id = format!("morphism:{label}");
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = t2.eval(&images[i], &images[j]);
                let rhs = f.apply(t.get(i, j))?;
                let r = lhs.sub(&rhs);
                if !r.is_zero() {
                    violations.push(Violation {
                        identity: id.clone(),
                        tuple: vec![Basis::Alg(i), Basis::Alg(j)],
                        residual: r,
                    });
                }
            }
        }
        report.record(&id, n * n, violations);
    }
    let lhs = f.matrix.mul(src.twist())?;
    let rhs = dst.twist().mul(&f.matrix)?;
    let mut violations = Vec::new();
    for i in 0..n {
        let r = lhs.column(i).sub(&rhs.column(i));
        if !r.is_zero() {
            violations.push(Violation {
                identity: "morphism:twist".into(),
                tuple: vec![Basis::Alg(i)],
                residual: r,
            });
        }
    }
    report.record("morphism:twist", n, violations);
    report.assume_from(
        src.scalars().chain(dst.scalars()).chain(matrix_scalars(&f.matrix)),
        src.params(),
    );
    Ok(report)
}
