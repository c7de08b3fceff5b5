use std::collections::BTreeSet;
use std::fmt;

use crate::exactnum::Scalar;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sort {
    Algebra,
    Module,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::Algebra => "algebra",
            Sort::Module => "module",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Var(String),
    /// `α^k(child)`
    TwistA(u32, Box<Node>),
    /// `β^k(child)`
    TwistB(u32, Box<Node>),
    Prod(String, Box<Node>, Box<Node>),
    /// Action of an algebra element on a module element.
    Act(String, Box<Node>, Box<Node>),
    Scale(Scalar, Box<Node>),
    /// Signed terms; `true` means subtracted.
    Sum(Vec<(bool, Node)>),
}

/// Variable names and their sorts, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarDecls(Vec<(String, Sort)>);

impl Default for VarDecls {
    /// `x, y, z, t, u, w` range over the algebra, `v` over the module.
    fn default() -> Self {
        let mut d: Vec<_> = ["x", "y", "z", "t", "u", "w"]
            .iter()
            .map(|s| (s.to_string(), Sort::Algebra))
            .collect();
        d.push(("v".to_string(), Sort::Module));
        VarDecls(d)
    }
}

impl VarDecls {
    pub fn new(decls: Vec<(String, Sort)>) -> Self {
        VarDecls(decls)
    }

    pub fn sort_of(&self, name: &str) -> Option<Sort> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, s)| *s)
    }

    fn position(&self, name: &str) -> usize {
        self.0.iter().position(|(n, _)| n == name).unwrap_or(usize::MAX)
    }
}

/// A parsed, sort-checked, multilinear identity. `vars` lists the variables in
/// declaration order; tuples are enumerated in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityExpr {
    pub root: Node,
    pub vars: Vec<(String, Sort)>,
    pub sort: Sort,
}

impl IdentityExpr {
    /// Validate a tree built by hand or by the parser.
    pub fn new(root: Node, decls: &VarDecls, params: &[String]) -> Result<Self, Error> {
        let sort = sort_of(&root, decls)?;
        let vars = check_multilinear(&root, params)?;
        let mut vars: Vec<(String, Sort)> = vars
            .into_iter()
            .map(|v| {
                let s = decls.sort_of(&v).expect("sort-checked");
                (v, s)
            })
            .collect();
        vars.sort_by_key(|(v, _)| decls.position(v));
        Ok(IdentityExpr { root, vars, sort })
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }
}

fn sort_of(node: &Node, decls: &VarDecls) -> Result<Sort, Error> {
    let expect = |child: &Node, want: Sort, what: &str| -> Result<(), Error> {
        let got = sort_of(child, decls)?;
        if got == want {
            Ok(())
        } else {
            Err(Error::Sort(format!("{what} expects a {want} argument, got {got}")))
        }
    };
    match node {
        Node::Var(name) => decls
            .sort_of(name)
            .ok_or_else(|| Error::Sort(format!("undeclared variable `{name}`"))),
        Node::TwistA(_, c) => {
            expect(c, Sort::Algebra, "A")?;
            Ok(Sort::Algebra)
        }
        Node::TwistB(_, c) => {
            expect(c, Sort::Module, "B")?;
            Ok(Sort::Module)
        }
        Node::Prod(_, l, r) => {
            expect(l, Sort::Algebra, "p")?;
            expect(r, Sort::Algebra, "p")?;
            Ok(Sort::Algebra)
        }
        Node::Act(_, a, m) => {
            expect(a, Sort::Algebra, "act")?;
            expect(m, Sort::Module, "act")?;
            Ok(Sort::Module)
        }
        Node::Scale(_, c) => sort_of(c, decls),
        Node::Sum(terms) => {
            let first = sort_of(&terms[0].1, decls)?;
            for (_, t) in &terms[1..] {
                if sort_of(t, decls)? != first {
                    return Err(Error::Sort("sum mixes algebra and module terms".into()));
                }
            }
            Ok(first)
        }
    }
}

/// Expand into additive monomials (as variable lists with their source term)
/// and require each variable exactly once per monomial, with the same set everywhere.
fn check_multilinear(root: &Node, params: &[String]) -> Result<BTreeSet<String>, Error> {
    let mut monomials = Vec::new();
    for term in top_terms(root) {
        for m in monomials_of(term) {
            monomials.push((m, term));
        }
    }
    let mut expected: Option<BTreeSet<String>> = None;
    for (m, term) in &monomials {
        let mut set = BTreeSet::new();
        for v in m {
            if !set.insert(v.clone()) {
                return Err(Error::NotMultilinear {
                    var: v.clone(),
                    monomial: render_node(term, params),
                });
            }
        }
        match &expected {
            None => expected = Some(set),
            Some(e) if *e != set => {
                let var = e.symmetric_difference(&set).next().expect("sets differ").clone();
                return Err(Error::NotMultilinear {
                    var,
                    monomial: render_node(term, params),
                });
            }
            Some(_) => {}
        }
    }
    Ok(expected.unwrap_or_default())
}

fn top_terms(node: &Node) -> Vec<&Node> {
    match node {
        Node::Sum(ts) => ts.iter().flat_map(|(_, t)| top_terms(t)).collect(),
        Node::Scale(_, c) => top_terms(c),
        n => vec![n],
    }
}

fn monomials_of(node: &Node) -> Vec<Vec<String>> {
    match node {
        Node::Var(v) => vec![vec![v.clone()]],
        Node::TwistA(_, c) | Node::TwistB(_, c) | Node::Scale(_, c) => monomials_of(c),
        Node::Prod(_, l, r) | Node::Act(_, l, r) => {
            let (ls, rs) = (monomials_of(l), monomials_of(r));
            let mut out = Vec::new();
            for a in &ls {
                for b in &rs {
                    out.push(a.iter().chain(b).cloned().collect());
                }
            }
            out
        }
        Node::Sum(ts) => ts.iter().flat_map(|(_, t)| monomials_of(t)).collect(),
    }
}

/// Text in the identity grammar; parsing it back gives the same tree.
pub fn render_node(node: &Node, params: &[String]) -> String {
    let mut out = String::new();
    write_node(node, params, &mut out);
    out
}

fn write_node(node: &Node, params: &[String], out: &mut String) {
    match node {
        Node::Var(v) => out.push_str(v),
        Node::TwistA(k, c) | Node::TwistB(k, c) => {
            out.push(if matches!(node, Node::TwistA(..)) { 'A' } else { 'B' });
            if *k != 1 {
                out.push_str(&k.to_string());
            }
            out.push('(');
            write_node(c, params, out);
            out.push(')');
        }
        Node::Prod(label, l, r) | Node::Act(label, l, r) => {
            out.push_str(if matches!(node, Node::Prod(..)) { "p(" } else { "act(" });
            out.push_str(label);
            out.push(',');
            write_node(l, params, out);
            out.push(',');
            write_node(r, params, out);
            out.push(')');
        }
        Node::Scale(s, c) => {
            out.push('(');
            out.push_str(&s.render(params));
            out.push_str(")*");
            write_node(c, params, out);
        }
        Node::Sum(terms) => {
            for (i, (neg, t)) in terms.iter().enumerate() {
                match (i, neg) {
                    (0, true) => out.push('-'),
                    (0, false) => {}
                    (_, true) => out.push_str(" - "),
                    (_, false) => out.push_str(" + "),
                }
                write_node(t, params, out);
            }
        }
    }
}
