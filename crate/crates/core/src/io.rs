//! JSON files for algebras, modules, operators and reports.
//!
//! Scalars are strings in the scalar grammar (plain JSON integers are accepted
//! too). Matrices are row-major with column `j` the image of `e_j`.
//!
//! ```text
//! algebra:  {"dim": n, "params": [..], "twist": [[..]], "products": {"bracket": [[[..]]]}}
//! module:   {"dim": m, "params": [..], "beta": [[..]], "actions": {"rho": [n matrices]}}
//! operator: {"name": "R", "params": [..], "matrix": [[..]]}
//! ```

use serde_json::{json, Map, Value};

use crate::exactnum::{is_identifier, parse_scalar, Matrix, Scalar};
use crate::structures::{HomAlgebra, LinearOperator, ModuleSpec, ProductTensor, Report, Verdict};
use crate::Error;

fn at(path: &str, inner: Error) -> Error {
    match inner {
        Error::At { .. } => inner,
        other => Error::At {
            path: path.to_string(),
            inner: Box::new(other),
        },
    }
}

pub fn parse_json(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, Error> {
    v.as_object()
        .ok_or_else(|| at(path, Error::Invalid("expected an object".into())))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, Error> {
    v.as_array()
        .ok_or_else(|| at(path, Error::Invalid("expected an array".into())))
}

fn sized<'a>(v: &'a Value, len: usize, path: &str) -> Result<&'a Vec<Value>, Error> {
    let a = array(v, path)?;
    if a.len() != len {
        return Err(at(
            path,
            Error::ShapeMismatch(format!("expected {len} entries, found {}", a.len())),
        ));
    }
    Ok(a)
}

fn scalar(v: &Value, params: &[String], path: &str) -> Result<Scalar, Error> {
    match v {
        Value::String(s) => parse_scalar(s, params).map_err(|e| at(path, e)),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_int(n.as_i64().unwrap())),
        _ => Err(at(path, Error::Invalid("expected a scalar string".into()))),
    }
}

fn matrix(v: &Value, rows: usize, cols: usize, params: &[String], path: &str) -> Result<Matrix, Error> {
    let mut m = Matrix::zeros(rows, cols);
    for (r, row) in sized(v, rows, path)?.iter().enumerate() {
        let p = format!("{path}[{r}]");
        for (c, x) in sized(row, cols, &p)?.iter().enumerate() {
            m.set(r, c, scalar(x, params, &format!("{p}[{c}]"))?);
        }
    }
    Ok(m)
}

fn dim(obj: &Map<String, Value>, key: &str) -> Result<Option<usize>, Error> {
    match obj.get(key) {
        None => Ok(None),
        Some(v) => v
            .as_u64()
            .map(|d| Some(d as usize))
            .ok_or_else(|| at(key, Error::Invalid("expected a nonnegative integer".into()))),
    }
}

/// The `params` list a file declares (empty when absent).
pub fn declared_params(v: &Value) -> Result<Vec<String>, Error> {
    let Some(p) = v.get("params") else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for (i, name) in array(p, "params")?.iter().enumerate() {
        let path = format!("params[{i}]");
        let s = name
            .as_str()
            .ok_or_else(|| at(&path, Error::Invalid("expected a string".into())))?;
        if !is_identifier(s) {
            return Err(at(&path, Error::Invalid(format!("`{s}` is not an identifier"))));
        }
        if out.iter().any(|q| q == s) {
            return Err(at(&path, Error::DuplicateLabel(s.to_string())));
        }
        out.push(s.to_string());
    }
    Ok(out)
}

/// `base` followed by the names of `more` it does not contain yet.
pub fn merge_params(base: &[String], more: &[String]) -> Vec<String> {
    let mut out = base.to_vec();
    for p in more {
        if !out.contains(p) {
            out.push(p.clone());
        }
    }
    out
}

/// Read an algebra, parsing scalars against `params`, which must include the
/// file's own declaration (see [`merge_params`]). The result carries `params`.
pub fn algebra_from_value(v: &Value, params: &[String]) -> Result<HomAlgebra, Error> {
    let obj = object(v, "algebra")?;
    let products = obj
        .get("products")
        .ok_or_else(|| Error::Invalid("algebra file needs `products`".into()))?;
    let products = object(products, "products")?;
    let n = match dim(obj, "dim")? {
        Some(n) => n,
        None => products
            .values()
            .next()
            .and_then(Value::as_array)
            .map_or(0, Vec::len),
    };
    let mut out = Vec::new();
    for (label, table) in products {
        let path = format!("products.{label}");
        let mut c = Vec::with_capacity(n);
        for (i, row) in sized(table, n, &path)?.iter().enumerate() {
            let mut r = Vec::with_capacity(n);
            for (j, cell) in sized(row, n, &format!("{path}[{i}]"))?.iter().enumerate() {
                let cp = format!("{path}[{i}][{j}]");
                let coeffs = sized(cell, n, &cp)?
                    .iter()
                    .enumerate()
                    .map(|(k, x)| scalar(x, params, &format!("{cp}[{k}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                r.push(coeffs);
            }
            c.push(r);
        }
        out.push((label.clone(), ProductTensor::from_constants(c)?));
    }
    let twist = match obj.get("twist") {
        Some(t) => matrix(t, n, n, params, "twist")?,
        None => Matrix::identity(n),
    };
    HomAlgebra::new(n, params.to_vec(), out, twist)
}

pub fn module_from_value(v: &Value, params: &[String]) -> Result<ModuleSpec, Error> {
    let obj = object(v, "module")?;
    let beta_rows = obj.get("beta").and_then(Value::as_array).map(Vec::len);
    let m = dim(obj, "dim")?
        .or(beta_rows)
        .ok_or_else(|| Error::Invalid("module file needs `dim` or `beta`".into()))?;
    let beta = match obj.get("beta") {
        Some(b) => matrix(b, m, m, params, "beta")?,
        None => Matrix::identity(m),
    };
    let actions = obj
        .get("actions")
        .ok_or_else(|| Error::Invalid("module file needs `actions`".into()))?;
    let mut out = Vec::new();
    for (label, list) in object(actions, "actions")? {
        let path = format!("actions.{label}");
        let ms = array(list, &path)?
            .iter()
            .enumerate()
            .map(|(i, mv)| matrix(mv, m, m, params, &format!("{path}[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        out.push((label.clone(), ms));
    }
    ModuleSpec::new(m, beta, out)
}

/// Operators may be rectangular (O-operators map the module into the algebra).
pub fn operator_from_value(v: &Value, params: &[String]) -> Result<LinearOperator, Error> {
    let obj = object(v, "operator")?;
    let rows_v = obj
        .get("matrix")
        .ok_or_else(|| Error::Invalid("operator file needs `matrix`".into()))?;
    let rows = array(rows_v, "matrix")?;
    let cols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
    let m = matrix(rows_v, rows.len(), cols, params, "matrix")?;
    let name = obj.get("name").and_then(Value::as_str).unwrap_or("T");
    Ok(LinearOperator::new(name, m))
}

fn render_matrix(m: &Matrix, params: &[String]) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(|s| Value::String(s.render(params))).collect()))
            .collect(),
    )
}

pub fn algebra_to_value(alg: &HomAlgebra) -> Value {
    let p = alg.params();
    let mut products = Map::new();
    for (label, t) in alg.products() {
        let n = t.dim();
        let table: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| Value::Array(t.get(i, j).iter().map(|s| Value::String(s.render(p))).collect()))
                        .collect(),
                )
            })
            .collect();
        products.insert(label.to_string(), Value::Array(table));
    }
    json!({
        "dim": alg.dim(),
        "params": p,
        "twist": render_matrix(alg.twist(), p),
        "products": products,
    })
}

pub fn module_to_value(module: &ModuleSpec, params: &[String]) -> Value {
    let mut actions = Map::new();
    for (label, ms) in module.actions() {
        actions.insert(
            label.to_string(),
            Value::Array(ms.iter().map(|m| render_matrix(m, params)).collect()),
        );
    }
    json!({
        "dim": module.mdim(),
        "params": params,
        "beta": render_matrix(module.twist(), params),
        "actions": actions,
    })
}

pub fn operator_to_value(op: &LinearOperator, params: &[String]) -> Value {
    json!({
        "name": op.name,
        "params": params,
        "matrix": render_matrix(&op.matrix, params),
    })
}

pub fn report_to_value(report: &Report, params: &[String]) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "identity": v.identity,
                "tuple": v.tuple.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                "residual": v.residual.iter().map(|s| s.render(params)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let checked: Vec<Value> = report
        .checked
        .iter()
        .map(|(id, n)| json!({"identity": id, "tuples": n}))
        .collect();
    json!({
        "verdict": match report.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        },
        "checked": checked,
        "violations": violations,
        "assumptions": report.assumptions,
        "flags": report.flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn reads_integers_and_strings() {
        let v = parse_json(r#"{"dim": 1, "products": {"star": [[["2"]]]}, "twist": [[1]]}"#).unwrap();
        let a = algebra_from_value(&v, &[]).unwrap();
        assert_eq!(a.product("star").unwrap().get(0, 0).0[0], Scalar::from_int(2));
    }

    #[test]
    fn errors_carry_the_json_path() {
        let p = names(&["a"]);
        let v = parse_json(r#"{"dim": 1, "products": {"star": [[["a +"]]]}}"#).unwrap();
        let err = algebra_from_value(&v, &p).unwrap_err();
        assert_eq!(
            err.to_string(),
            "products.star[0][0][0]: syntax error at position 3: unexpected end of input"
        );
        assert!(err.is_input_error());
        let v = parse_json(r#"{"dim": 2, "products": {"star": [[["0","0"]]]}}"#).unwrap();
        assert!(matches!(algebra_from_value(&v, &p), Err(Error::At { .. })));
    }

    #[test]
    fn undeclared_parameters_are_rejected() {
        let v = parse_json(r#"{"matrix": [["b"]]}"#).unwrap();
        let err = operator_from_value(&v, &names(&["a"])).unwrap_err();
        assert!(matches!(err, Error::At { ref inner, .. } if matches!(**inner, Error::UnknownParameter(_))));
    }

    #[test]
    fn merged_params_keep_order() {
        assert_eq!(merge_params(&names(&["a", "b"]), &names(&["c", "a"])), names(&["a", "b", "c"]));
    }

    #[test]
    fn malformed_json() {
        assert!(matches!(parse_json("{"), Err(Error::Json(_))));
    }
}
