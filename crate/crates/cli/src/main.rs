mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homalg::checkers::{
    check_commuting, check_module_with, check_o_operator, check_rota_baxter, check_structure_with, check_symplectic,
};
use homalg::constructions::{
    coadjoint, commuting_rb_split, derive_structure, dual_rep, o_induced, rb_split, semidirect, twist_module,
    yau_twist, DeriveRule, SplitRule,
};
use homalg::corpus::{example_params, load_example, Object, EXAMPLES, FIXTURES};
use homalg::identity::{check_identity, parse_identity, parse_identity_file, CheckOptions, ModuleClass, Sort, StructureClass, VarDecls};
use homalg::io;
use homalg::structures::{check_morphism, HomAlgebra, LinearOperator, ModuleSpec, Report};
use homalg::{parse_scalar, BigRational, Error, Scalar};
use serde_json::Value;

use render::{render_algebra, render_map, render_report, Space};

#[derive(Parser)]
#[command(name = "homalg", version, about = "Exact verification and constructions for finite-dimensional Hom-algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Table, global = true)]
    emit: Emit,
    /// Accept results whose coefficients divide by parameters; the denominators are listed.
    #[arg(long, global = true)]
    assume_nonzero: bool,
    /// Parameter values, e.g. `--set a4=2,b3=1/2`.
    #[arg(long = "set", value_name = "K=V", value_delimiter = ',', global = true)]
    set: Vec<String>,
    /// Stop at the first violation.
    #[arg(long, global = true)]
    stop_early: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpKind {
    RotaBaxter,
    OOperator,
    Morphism,
    Commuting,
    Symplectic,
}

fn structure_class(s: &str) -> Result<StructureClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn module_class(s: &str) -> Result<ModuleClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra against every identity of a class.
    Check {
        #[arg(long, value_parser = structure_class)]
        class: StructureClass,
        algebra: PathBuf,
    },
    /// Check an operator: rota-baxter ALG OP, o-operator ALG MODULE OP,
    /// morphism SRC OP [DST], commuting OP OP, symplectic ALG FORM.
    CheckOp {
        #[arg(long, value_enum)]
        kind: OpKind,
        #[arg(long, value_parser = structure_class)]
        class: Option<StructureClass>,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Check a module over an algebra.
    CheckModule {
        #[arg(long, value_parser = module_class)]
        class: ModuleClass,
        algebra: PathBuf,
        module: PathBuf,
    },
    /// Add derived products (commutator, mdend-horizontal, ...).
    Derive {
        #[arg(long)]
        rule: DeriveRule,
        algebra: PathBuf,
    },
    /// Split by a Rota-Baxter operator, by two commuting ones (`--rule
    /// malcev-to-mdend`), or by an O-operator on `--module`.
    Split {
        #[arg(long)]
        rule: String,
        algebra: PathBuf,
        #[arg(required = true, num_args = 1..=2)]
        operators: Vec<PathBuf>,
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Yau twist of an algebra by MAP, or of a module by MAP and `--module-map`.
    Twist {
        #[arg(long)]
        map: PathBuf,
        algebra: PathBuf,
        #[arg(long, requires = "module_map")]
        module: Option<PathBuf>,
        #[arg(long)]
        module_map: Option<PathBuf>,
    },
    /// Dual of a representation; the coadjoint one when no module is given.
    Dual { algebra: PathBuf, module: Option<PathBuf> },
    /// Semidirect product of an algebra and a module.
    Semidirect {
        #[arg(long, value_parser = module_class)]
        class: ModuleClass,
        algebra: PathBuf,
        module: PathBuf,
    },
    /// Export a built-in example.
    Example { name: String },
    /// Check an identity (or `@file` of `id: expr` lines) on an algebra.
    Identity {
        source: String,
        algebra: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
    },
}

/// Exit status 3 for mathematical failures, 2 for bad input.
struct Failure {
    error: Error,
    source: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, source: None }
    }
}

type Run = Result<(String, bool), Failure>;

struct Inputs {
    params: Vec<String>,
    bindings: Vec<Option<BigRational>>,
}

fn read(path: &Path) -> Result<Value, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    io::parse_json(&text).map_err(|e| Error::At {
        path: path.display().to_string(),
        inner: Box::new(e),
    })
}

fn in_file(path: &Path, e: Error) -> Error {
    Error::At {
        path: path.display().to_string(),
        inner: Box::new(e),
    }
}

impl Inputs {
    /// Merge the parameter lists of all files and resolve `--set`.
    fn new(values: &[(&Path, &Value)], set: &[String]) -> Result<Self, Error> {
        let mut params = Vec::new();
        for (path, v) in values {
            let declared = io::declared_params(v).map_err(|e| in_file(path, e))?;
            params = io::merge_params(&params, &declared);
        }
        let bindings = parse_bindings(set, &params)?;
        Ok(Inputs { params, bindings })
    }

    fn bound(&self) -> bool {
        self.bindings.iter().any(Option::is_some)
    }

    fn algebra(&self, path: &Path, v: &Value) -> Result<HomAlgebra, Error> {
        let a = io::algebra_from_value(v, &self.params).map_err(|e| in_file(path, e))?;
        if self.bound() {
            a.substitute(&self.bindings).map_err(|e| e.named(&self.params))
        } else {
            Ok(a)
        }
    }

    fn module(&self, path: &Path, v: &Value) -> Result<ModuleSpec, Error> {
        let m = io::module_from_value(v, &self.params).map_err(|e| in_file(path, e))?;
        if self.bound() {
            m.substitute(&self.bindings).map_err(|e| e.named(&self.params))
        } else {
            Ok(m)
        }
    }

    fn operator(&self, path: &Path, v: &Value) -> Result<LinearOperator, Error> {
        let o = io::operator_from_value(v, &self.params).map_err(|e| in_file(path, e))?;
        if self.bound() {
            o.substitute(&self.bindings).map_err(|e| e.named(&self.params))
        } else {
            Ok(o)
        }
    }
}

fn parse_bindings(set: &[String], params: &[String]) -> Result<Vec<Option<BigRational>>, Error> {
    let mut out = vec![None; params.len()];
    for item in set {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Invalid(format!("expected K=V, found `{item}`")))?;
        let i = params
            .iter()
            .position(|p| p == k.trim())
            .ok_or_else(|| Error::UnknownParameter(k.trim().to_string()))?;
        let value = parse_scalar(v.trim(), &[])?
            .as_rational()
            .ok_or_else(|| Error::Invalid(format!("`{v}` is not a rational number")))?;
        out[i] = Some(value);
    }
    Ok(out)
}

fn named_bindings(set: &[String], params: &[String]) -> Result<Vec<(String, BigRational)>, Error> {
    Ok(parse_bindings(set, params)?
        .into_iter()
        .zip(params)
        .filter_map(|(v, p)| v.map(|v| (p.clone(), v)))
        .collect())
}

#[derive(Clone, Copy)]
struct Ctx {
    emit: Emit,
    assume_nonzero: bool,
    options: CheckOptions,
}

impl Ctx {
    /// Results that divide by parameters need `--assume-nonzero`.
    fn denominators<'a>(&self, scalars: impl Iterator<Item = &'a Scalar>, params: &[String]) -> Result<Vec<String>, Error> {
        let mut r = Report::new();
        r.assume_from(scalars, params);
        self.accept(&r.assumptions)?;
        Ok(r.assumptions)
    }

    fn accept(&self, assumptions: &[String]) -> Result<(), Error> {
        if assumptions.is_empty() || self.assume_nonzero {
            return Ok(());
        }
        Err(Error::Assumes(assumptions.join(", ")))
    }

    fn report(&self, report: &Report, params: &[String], space: impl Fn(&str) -> Space) -> Run {
        self.accept(&report.assumptions)?;
        let text = match self.emit {
            Emit::Json => pretty(&io::report_to_value(report, params)),
            Emit::Table => render_report(report, space, params),
        };
        Ok((text, report.passed()))
    }

    fn algebra(&self, alg: &HomAlgebra) -> Run {
        let assumptions = self.denominators(alg.scalars(), alg.params())?;
        let text = match self.emit {
            Emit::Json => pretty(&io::algebra_to_value(alg)),
            Emit::Table => with_assumptions(render_algebra(alg), &assumptions),
        };
        Ok((text, true))
    }

    fn module(&self, module: &ModuleSpec, params: &[String]) -> Run {
        let assumptions = self.denominators(module.scalars(), params)?;
        let text = match self.emit {
            Emit::Json => pretty(&io::module_to_value(module, params)),
            Emit::Table => {
                let mut out = String::new();
                if !module.twist().is_identity() {
                    out.push_str(&render_map("beta", module.twist(), Space::Module, Space::Module, params));
                }
                for (label, ms) in module.actions() {
                    for (i, m) in ms.iter().enumerate() {
                        out.push_str(&render_map(&format!("{label}(e{})", i + 1), m, Space::Module, Space::Module, params));
                    }
                }
                with_assumptions(out, &assumptions)
            }
        };
        Ok((text, true))
    }

    fn operator(&self, op: &LinearOperator, params: &[String]) -> Run {
        let assumptions = self.denominators(op.matrix.to_rows().iter().flatten(), params)?;
        let text = match self.emit {
            Emit::Json => pretty(&io::operator_to_value(op, params)),
            Emit::Table => with_assumptions(
                render_map(&op.name, &op.matrix, Space::Algebra, Space::Algebra, params),
                &assumptions,
            ),
        };
        Ok((text, true))
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn with_assumptions(mut text: String, assumptions: &[String]) -> String {
    for a in assumptions {
        text.push_str(&format!("assuming {a}\n"));
    }
    text
}

fn residual_space(n: usize, module_check: bool) -> impl Fn(&str) -> Space {
    move |id: &str| {
        if id.starts_with("symplectic:") {
            Space::Scalar
        } else if id.starts_with("semidirect:") {
            Space::Sum(n)
        } else if module_check {
            Space::Module
        } else {
            Space::Algebra
        }
    }
}

fn need<'a>(files: &'a [PathBuf], count: &[usize], what: &str) -> Result<&'a [PathBuf], Error> {
    if count.contains(&files.len()) {
        Ok(files)
    } else {
        Err(Error::Invalid(format!("{what} takes {count:?} files, got {}", files.len())))
    }
}

fn run(cli: Cli) -> Run {
    let ctx = Ctx {
        emit: cli.emit,
        assume_nonzero: cli.assume_nonzero,
        options: CheckOptions {
            stop_early: cli.stop_early,
        },
    };
    match cli.command {
        Command::Check { class, algebra } => {
            let v = read(&algebra)?;
            let inp = Inputs::new(&[(&algebra, &v)], &cli.set)?;
            let alg = inp.algebra(&algebra, &v)?;
            let report = check_structure_with(&alg, class, ctx.options)?;
            ctx.report(&report, alg.params(), residual_space(alg.dim(), false))
        }
        Command::CheckModule { class, algebra, module } => {
            let (va, vm) = (read(&algebra)?, read(&module)?);
            let inp = Inputs::new(&[(&algebra, &va), (&module, &vm)], &cli.set)?;
            let alg = inp.algebra(&algebra, &va)?;
            let m = inp.module(&module, &vm)?;
            let report = check_module_with(&alg, &m, class, ctx.options)?;
            ctx.report(&report, alg.params(), residual_space(alg.dim(), true))
        }
        Command::CheckOp { kind, class, files } => {
            let values = files.iter().map(|f| read(f)).collect::<Result<Vec<_>, _>>()?;
            let pairs: Vec<(&Path, &Value)> = files.iter().map(PathBuf::as_path).zip(&values).collect();
            let inp = Inputs::new(&pairs, &cli.set)?;
            let class = || class.ok_or_else(|| Error::Invalid("--class is required for this kind".into()));
            let (report, n) = match kind {
                OpKind::RotaBaxter => {
                    need(&files, &[2], "rota-baxter")?;
                    let alg = inp.algebra(pairs[0].0, pairs[0].1)?;
                    let r = inp.operator(pairs[1].0, pairs[1].1)?;
                    (check_rota_baxter(&alg, class()?, &r)?, alg.dim())
                }
                OpKind::OOperator => {
                    need(&files, &[3], "o-operator")?;
                    let alg = inp.algebra(pairs[0].0, pairs[0].1)?;
                    let m = inp.module(pairs[1].0, pairs[1].1)?;
                    let t = inp.operator(pairs[2].0, pairs[2].1)?;
                    (check_o_operator(&alg, &m, class()?, &t)?, alg.dim())
                }
                OpKind::Morphism => {
                    need(&files, &[2, 3], "morphism")?;
                    let src = inp.algebra(pairs[0].0, pairs[0].1)?;
                    let f = inp.operator(pairs[1].0, pairs[1].1)?;
                    let dst = match pairs.get(2) {
                        Some((p, v)) => inp.algebra(p, v)?,
                        None => src.clone(),
                    };
                    (check_morphism(&f, &src, &dst)?, dst.dim())
                }
                OpKind::Commuting => {
                    need(&files, &[2], "commuting")?;
                    let r1 = inp.operator(pairs[0].0, pairs[0].1)?;
                    let r2 = inp.operator(pairs[1].0, pairs[1].1)?;
                    (check_commuting(&r1, &r2)?, r1.matrix.rows())
                }
                OpKind::Symplectic => {
                    need(&files, &[2], "symplectic")?;
                    let alg = inp.algebra(pairs[0].0, pairs[0].1)?;
                    let omega = inp.operator(pairs[1].0, pairs[1].1)?;
                    (check_symplectic(&alg, &omega)?, alg.dim())
                }
            };
            ctx.report(&report, &inp.params, residual_space(n, false))
        }
        Command::Derive { rule, algebra } => {
            let v = read(&algebra)?;
            let inp = Inputs::new(&[(&algebra, &v)], &cli.set)?;
            ctx.algebra(&derive_structure(&inp.algebra(&algebra, &v)?, rule)?)
        }
        Command::Split {
            rule,
            algebra,
            operators,
            module,
        } => {
            let mut paths = vec![algebra.clone()];
            paths.extend(module.iter().cloned());
            paths.extend(operators.iter().cloned());
            let values = paths.iter().map(|f| read(f)).collect::<Result<Vec<_>, _>>()?;
            let pairs: Vec<(&Path, &Value)> = paths.iter().map(PathBuf::as_path).zip(&values).collect();
            let inp = Inputs::new(&pairs, &cli.set)?;
            let alg = inp.algebra(pairs[0].0, pairs[0].1)?;
            let ops_start = if module.is_some() { 2 } else { 1 };
            let ops = pairs[ops_start..]
                .iter()
                .map(|(p, v)| inp.operator(p, v))
                .collect::<Result<Vec<_>, _>>()?;
            let out = if rule == "malcev-to-mdend" {
                if ops.len() != 2 || module.is_some() {
                    return Err(Error::Invalid("malcev-to-mdend takes two operators and no module".into()).into());
                }
                commuting_rb_split(&alg, &ops[0], &ops[1])?
            } else {
                let rule: SplitRule = rule.parse()?;
                if ops.len() != 1 {
                    return Err(Error::Invalid(format!("{rule} takes one operator")).into());
                }
                match module {
                    Some(_) => {
                        let m = inp.module(pairs[1].0, pairs[1].1)?;
                        o_induced(&alg, &m, rule.source(), &ops[0])?
                    }
                    None => rb_split(&alg, rule, &ops[0])?,
                }
            };
            ctx.algebra(&out)
        }
        Command::Twist {
            map,
            algebra,
            module,
            module_map,
        } => {
            let mut paths = vec![algebra.clone(), map.clone()];
            if let (Some(m), Some(g)) = (&module, &module_map) {
                paths.push(m.clone());
                paths.push(g.clone());
            }
            let values = paths.iter().map(|f| read(f)).collect::<Result<Vec<_>, _>>()?;
            let pairs: Vec<(&Path, &Value)> = paths.iter().map(PathBuf::as_path).zip(&values).collect();
            let inp = Inputs::new(&pairs, &cli.set)?;
            let alg = inp.algebra(pairs[0].0, pairs[0].1)?;
            let f = inp.operator(pairs[1].0, pairs[1].1)?;
            if pairs.len() == 4 {
                let m = inp.module(pairs[2].0, pairs[2].1)?;
                let g = inp.operator(pairs[3].0, pairs[3].1)?;
                ctx.module(&twist_module(&alg, &m, &f, &g)?, &inp.params)
            } else {
                ctx.algebra(&yau_twist(&alg, &f)?)
            }
        }
        Command::Dual { algebra, module } => {
            let va = read(&algebra)?;
            let vm = module.as_ref().map(|m| read(m)).transpose()?;
            let mut pairs = vec![(algebra.as_path(), &va)];
            if let (Some(p), Some(v)) = (&module, &vm) {
                pairs.push((p.as_path(), v));
            }
            let inp = Inputs::new(&pairs, &cli.set)?;
            let alg = inp.algebra(&algebra, &va)?;
            let dual = match (&module, &vm) {
                (Some(p), Some(v)) => dual_rep(&alg, &inp.module(p, v)?)?,
                _ => coadjoint(&alg)?,
            };
            ctx.module(&dual, &inp.params)
        }
        Command::Semidirect { class, algebra, module } => {
            let (va, vm) = (read(&algebra)?, read(&module)?);
            let inp = Inputs::new(&[(&algebra, &va), (&module, &vm)], &cli.set)?;
            let alg = inp.algebra(&algebra, &va)?;
            let m = inp.module(&module, &vm)?;
            ctx.algebra(&semidirect(&alg, &m, class)?)
        }
        Command::Example { name } => {
            if !EXAMPLES.contains(&name.as_str()) && !FIXTURES.contains(&name.as_str()) {
                return Err(Error::UnknownExample(name).into());
            }
            // a stored example is data, not a derived result
            let ctx = Ctx {
                assume_nonzero: true,
                ..ctx
            };
            let params = example_params(&name)?;
            let bindings = named_bindings(&cli.set, &params)?;
            match load_example(&name, &bindings)? {
                Object::Algebra(a) => ctx.algebra(&a),
                Object::Module(m) => ctx.module(&m, &params),
                Object::Operator(o) => ctx.operator(&o, &params),
            }
        }
        Command::Identity { source, algebra, module } => {
            let va = read(&algebra)?;
            let vm = module.as_ref().map(|m| read(m)).transpose()?;
            let mut pairs = vec![(algebra.as_path(), &va)];
            if let (Some(p), Some(v)) = (&module, &vm) {
                pairs.push((p.as_path(), v));
            }
            let inp = Inputs::new(&pairs, &cli.set)?;
            let alg = inp.algebra(&algebra, &va)?;
            let m = match (&module, &vm) {
                (Some(p), Some(v)) => Some(inp.module(p, v)?),
                _ => None,
            };
            let decls = VarDecls::default();
            let (text, identities) = match source.strip_prefix('@') {
                Some(file) => {
                    let text = fs::read_to_string(file).map_err(|e| Error::Invalid(format!("{file}: {e}")))?;
                    let ids = parse_identity_file(&text, &decls, &inp.params);
                    (text, ids)
                }
                None => {
                    let id = parse_identity(&source, &decls, &inp.params).map(|e| vec![("identity".to_string(), e)]);
                    (source.clone(), id)
                }
            };
            let identities = identities.map_err(|error| Failure {
                error,
                source: Some(text),
            })?;
            let mut report = Report::new();
            let mut module_valued = Vec::new();
            for (id, expr) in &identities {
                if expr.sort == Sort::Module {
                    module_valued.push(id.clone());
                }
                report.merge(check_identity(id, expr, &alg, m.as_ref(), ctx.options)?);
            }
            report.assume_from(alg.scalars(), alg.params());
            ctx.report(&report, &inp.params, move |id| {
                if module_valued.iter().any(|m| m == id) {
                    Space::Module
                } else {
                    Space::Algebra
                }
            })
        }
    }
}

/// The offending line of `source` with a caret under `position`.
fn caret(source: &str, position: usize) -> String {
    let position = position.min(source.len());
    let start = source[..position].rfind('\n').map_or(0, |i| i + 1);
    let end = source[position..].find('\n').map_or(source.len(), |i| position + i);
    let column = source[start..position].chars().count();
    format!("  {}\n  {}^", &source[start..end], " ".repeat(column))
}

fn threads() {
    if let Some(n) = std::env::var("HOMALG_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if n > 0 {
            // fails only if a pool already exists
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    threads();
    match run(cli) {
        Ok((text, pass)) => {
            print!("{text}");
            ExitCode::from(if pass { 0 } else { 1 })
        }
        Err(Failure { error, source }) => {
            eprintln!("error: {error}");
            if let (Error::Syntax { position, .. }, Some(src)) = (&error, &source) {
                eprintln!("{}", caret(src, *position));
            }
            if let Error::Assumes(_) = error {
                eprintln!("rerun with --assume-nonzero to accept");
            }
            ExitCode::from(if error.is_input_error() { 2 } else { 3 })
        }
    }
}
