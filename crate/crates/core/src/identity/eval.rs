use std::collections::HashMap;

use rayon::prelude::*;

use super::ast::{IdentityExpr, Node, Sort};
use crate::exactnum::{Matrix, Vector};
use crate::structures::{act, Basis, HomAlgebra, ModuleSpec, ProductTensor, Report, Violation};
use crate::Error;

/// Labels, actions and twist powers resolved once per identity.
struct Context<'a> {
    products: HashMap<&'a str, &'a ProductTensor>,
    actions: HashMap<&'a str, Vec<Matrix>>,
    alpha: Vec<Matrix>,
    beta: Vec<Matrix>,
}

impl<'a> Context<'a> {
    fn new(expr: &'a IdentityExpr, alg: &'a HomAlgebra, module: Option<&'a ModuleSpec>) -> Result<Self, Error> {
        let mut ctx = Context {
            products: HashMap::new(),
            actions: HashMap::new(),
            alpha: vec![Matrix::identity(alg.dim())],
            beta: vec![],
        };
        if let Some(m) = module {
            ctx.beta.push(Matrix::identity(m.mdim()));
        }
        ctx.resolve(&expr.root, alg, module)?;
        if expr.vars.iter().any(|(_, s)| *s == Sort::Module) && module.is_none() {
            return Err(Error::MissingModule);
        }
        Ok(ctx)
    }

    fn resolve(&mut self, node: &'a Node, alg: &'a HomAlgebra, module: Option<&'a ModuleSpec>) -> Result<(), Error> {
        match node {
            Node::Var(_) => Ok(()),
            Node::TwistA(k, c) => {
                while self.alpha.len() <= *k as usize {
                    let next = alg.twist().mul(self.alpha.last().unwrap())?;
                    self.alpha.push(next);
                }
                self.resolve(c, alg, module)
            }
            Node::TwistB(k, c) => {
                let m = module.ok_or(Error::MissingModule)?;
                while self.beta.len() <= *k as usize {
                    let next = m.twist().mul(self.beta.last().unwrap())?;
                    self.beta.push(next);
                }
                self.resolve(c, alg, module)
            }
            Node::Prod(label, l, r) => {
                self.products.insert(label, alg.product(label)?);
                self.resolve(l, alg, module)?;
                self.resolve(r, alg, module)
            }
            Node::Act(label, l, r) => {
                let m = module.ok_or(Error::MissingModule)?;
                if !self.actions.contains_key(label.as_str()) {
                    let ms = m.action(label)?;
                    if ms.len() != alg.dim() {
                        return Err(Error::ShapeMismatch(format!(
                            "action `{label}` has {} matrices for a {}-dimensional algebra",
                            ms.len(),
                            alg.dim()
                        )));
                    }
                    self.actions.insert(label, ms);
                }
                self.resolve(l, alg, module)?;
                self.resolve(r, alg, module)
            }
            Node::Scale(_, c) => self.resolve(c, alg, module),
            Node::Sum(ts) => ts.iter().try_for_each(|(_, t)| self.resolve(t, alg, module)),
        }
    }

    fn eval(&self, node: &Node, env: &HashMap<&str, Vector>) -> Vector {
        match node {
            Node::Var(v) => env[v.as_str()].clone(),
            Node::TwistA(k, c) => self.alpha[*k as usize].apply(&self.eval(c, env)).expect("shape"),
            Node::TwistB(k, c) => self.beta[*k as usize].apply(&self.eval(c, env)).expect("shape"),
            Node::Prod(label, l, r) => self.products[label.as_str()].eval(&self.eval(l, env), &self.eval(r, env)),
            Node::Act(label, l, r) => act(&self.actions[label.as_str()], &self.eval(l, env), &self.eval(r, env)),
            Node::Scale(s, c) => self.eval(c, env).scale(s),
            Node::Sum(ts) => {
                let mut it = ts.iter();
                let (neg, first) = it.next().expect("nonempty sum");
                let mut acc = self.eval(first, env);
                if *neg {
                    acc = acc.neg();
                }
                for (neg, t) in it {
                    let v = self.eval(t, env);
                    acc = if *neg { acc.sub(&v) } else { acc.add(&v) };
                }
                acc
            }
        }
    }
}

/// Evaluate on explicit vectors, one per variable of `expr` in order.
pub fn eval_identity(
    expr: &IdentityExpr,
    alg: &HomAlgebra,
    module: Option<&ModuleSpec>,
    assignment: &[Vector],
) -> Result<Vector, Error> {
    if assignment.len() != expr.vars.len() {
        return Err(Error::Invalid(format!(
            "{} values for {} variables",
            assignment.len(),
            expr.vars.len()
        )));
    }
    let ctx = Context::new(expr, alg, module)?;
    for ((name, sort), v) in expr.vars.iter().zip(assignment) {
        let want = match sort {
            Sort::Algebra => alg.dim(),
            Sort::Module => module.map_or(0, ModuleSpec::mdim),
        };
        if v.dim() != want {
            return Err(Error::ShapeMismatch(format!("value for `{name}` has length {}", v.dim())));
        }
    }
    let env = expr
        .vars
        .iter()
        .map(|(n, _)| n.as_str())
        .zip(assignment.iter().cloned())
        .collect();
    Ok(ctx.eval(&expr.root, &env))
}

/// Evaluate at basis vectors.
pub fn eval_at_basis(
    expr: &IdentityExpr,
    alg: &HomAlgebra,
    module: Option<&ModuleSpec>,
    tuple: &[Basis],
) -> Result<Vector, Error> {
    let m = module.map_or(0, ModuleSpec::mdim);
    let values: Vec<Vector> = tuple
        .iter()
        .map(|b| match b {
            Basis::Alg(i) => Vector::basis(alg.dim(), *i),
            Basis::Mod(i) => Vector::basis(m, *i),
        })
        .collect();
    eval_identity(expr, alg, module, &values)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Stop at the first (lexicographically smallest) violation; class checks
    /// also skip the identities after the first failing one.
    pub stop_early: bool,
}

/// Evaluate `expr` on every basis tuple, in lexicographic order.
pub fn check_identity(
    id: &str,
    expr: &IdentityExpr,
    alg: &HomAlgebra,
    module: Option<&ModuleSpec>,
    options: CheckOptions,
) -> Result<Report, Error> {
    let ctx = Context::new(expr, alg, module)?;
    let n = alg.dim();
    let m = module.map_or(0, ModuleSpec::mdim);
    let radices: Vec<usize> = expr
        .vars
        .iter()
        .map(|(_, s)| if *s == Sort::Algebra { n } else { m })
        .collect();
    let total: usize = radices.iter().product();
    let alg_basis: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mod_basis: Vec<Vector> = (0..m).map(|i| Vector::basis(m, i)).collect();

    let at = |index: usize| -> Option<Violation> {
        let mut rem = index;
        let mut tuple = vec![Basis::Alg(0); radices.len()];
        for k in (0..radices.len()).rev() {
            let d = rem % radices[k];
            rem /= radices[k];
            tuple[k] = match expr.vars[k].1 {
                Sort::Algebra => Basis::Alg(d),
                Sort::Module => Basis::Mod(d),
            };
        }
        let env: HashMap<&str, Vector> = expr
            .vars
            .iter()
            .zip(&tuple)
            .map(|((name, _), b)| {
                let v = match b {
                    Basis::Alg(i) => alg_basis[*i].clone(),
                    Basis::Mod(i) => mod_basis[*i].clone(),
                };
                (name.as_str(), v)
            })
            .collect();
        let residual = ctx.eval(&expr.root, &env);
        (!residual.is_zero()).then(|| Violation {
            identity: id.to_string(),
            tuple,
            residual,
        })
    };

    let violations: Vec<Violation> = if options.stop_early {
        (0..total).into_par_iter().find_map_first(at).into_iter().collect()
    } else {
        (0..total)
            .into_par_iter()
            .map(at)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    let mut report = Report::new();
    report.record(id, total, violations);
    Ok(report)
}
