//! Plain-text tables and report summaries.

use homalg::structures::{HomAlgebra, Report, Violation};
use homalg::{Error, Matrix, Scalar, Vector};

/// Which basis names a residual is written in.
#[derive(Clone, Copy, Debug)]
pub enum Space {
    Algebra,
    Module,
    /// `A ⊕ V` with `A` of the given dimension.
    Sum(usize),
    Scalar,
}

fn term(c: &Scalar, basis: &str, params: &[String]) -> (bool, String) {
    if c.is_one() {
        return (false, basis.to_string());
    }
    if (-c).is_one() {
        return (true, basis.to_string());
    }
    if c.is_negative_term() {
        let text = (-c).render(params);
        return (true, format!("{}*{basis}", wrap(&text, &-c)));
    }
    let text = c.render(params);
    (false, format!("{}*{basis}", wrap(&text, c)))
}

fn wrap(text: &str, c: &Scalar) -> String {
    if c.is_single_term() {
        text.to_string()
    } else {
        format!("({text})")
    }
}

/// `e2 - b3*e3`, `-b/a5*e2`, `0`.
pub fn render_combination(v: &Vector, names: impl Fn(usize) -> String, params: &[String]) -> String {
    let mut out = String::new();
    for (k, c) in v.nonzero() {
        let (neg, t) = term(c, &names(k), params);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&t);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

pub fn render_vector(v: &Vector, space: Space, params: &[String]) -> String {
    match space {
        Space::Algebra => render_combination(v, |k| format!("e{}", k + 1), params),
        Space::Module => render_combination(v, |k| format!("v{}", k + 1), params),
        Space::Sum(n) => render_combination(
            v,
            |k| if k < n { format!("e{}", k + 1) } else { format!("v{}", k - n + 1) },
            params,
        ),
        Space::Scalar => v.iter().map(|s| s.render(params)).collect::<Vec<_>>().join(", "),
    }
}

fn grid(corner: &str, cols: &[String], rows: &[(String, Vec<String>)]) -> String {
    let mut widths: Vec<usize> = std::iter::once(corner.chars().count())
        .chain(cols.iter().map(|c| c.chars().count()))
        .collect();
    for (head, cells) in rows {
        widths[0] = widths[0].max(head.chars().count());
        for (k, c) in cells.iter().enumerate() {
            widths[k + 1] = widths[k + 1].max(c.chars().count());
        }
    }
    let line = |first: &str, rest: &[String]| {
        let mut s = format!("{first:<w$}", w = widths[0]);
        for (k, c) in rest.iter().enumerate() {
            s.push_str(&format!(" | {c:<w$}", w = widths[k + 1]));
        }
        s.trim_end().to_string()
    };
    let mut out = line(corner, cols);
    out.push('\n');
    out.push_str(
        &widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .join("-+-"),
    );
    out.push('\n');
    for (head, cells) in rows {
        out.push_str(&line(head, cells));
        out.push('\n');
    }
    out
}

/// Multiplication table of one product: row `e_i`, column `e_j` holds `e_i ∘ e_j`.
pub fn render_table(alg: &HomAlgebra, label: &str) -> Result<String, Error> {
    let t = alg.product(label)?;
    let n = alg.dim();
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let rows: Vec<(String, Vec<String>)> = (0..n)
        .map(|i| {
            let cells = (0..n)
                .map(|j| render_vector(t.get(i, j), Space::Algebra, alg.params()))
                .collect();
            (names[i].clone(), cells)
        })
        .collect();
    Ok(grid(label, &names, &rows))
}

/// Images of basis vectors, one row per `e_j`.
pub fn render_map(name: &str, m: &Matrix, from: Space, to: Space, params: &[String]) -> String {
    let mut out = String::new();
    for j in 0..m.cols() {
        let src = render_vector(&Vector::basis(m.cols(), j), from, params);
        out.push_str(&format!("{name}({src}) = {}\n", render_vector(&m.column(j), to, params)));
    }
    out
}

/// Twist followed by every product table.
pub fn render_algebra(alg: &HomAlgebra) -> String {
    let mut out = String::new();
    if !alg.twist().is_identity() {
        out.push_str(&render_map("alpha", alg.twist(), Space::Algebra, Space::Algebra, alg.params()));
        out.push('\n');
    }
    let labels: Vec<&str> = alg.labels().collect();
    for (k, label) in labels.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&render_table(alg, label).expect("label exists"));
    }
    out
}

fn tuple(v: &Violation) -> String {
    v.tuple.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ")
}

/// `PASS (n checks, t tuples)` or a failure summary with the first
/// counterexample of every failing identity.
pub fn render_report(report: &Report, residual_space: impl Fn(&str) -> Space, params: &[String]) -> String {
    let checks = report.checked.len();
    let tuples = report.total_tuples();
    let mut out = if report.passed() {
        format!("PASS ({checks} checks, {tuples} tuples)\n")
    } else {
        let failing = report.first_violations().len();
        format!(
            "FAIL ({} violations in {failing} of {checks} checks, {tuples} tuples)\n",
            report.violations.len()
        )
    };
    for v in report.first_violations() {
        let more = report.violations_of(&v.identity).count() - 1;
        out.push_str(&format!(
            "  {} at ({}): {}",
            v.identity,
            tuple(v),
            render_vector(&v.residual, residual_space(&v.identity), params)
        ));
        if more > 0 {
            out.push_str(&format!("  (+{more} more)"));
        }
        out.push('\n');
    }
    for a in &report.assumptions {
        out.push_str(&format!("assuming {a}\n"));
    }
    for f in &report.flags {
        out.push_str(&format!("flag: {f}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use homalg::parse_scalar;

    fn v(params: &[String], cs: &[&str]) -> Vector {
        Vector(cs.iter().map(|c| parse_scalar(c, params).unwrap()).collect())
    }

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn cells() {
        let p = names(&["a4", "b3", "b", "a5"]);
        let r = |cs: &[&str]| render_vector(&v(&p, cs), Space::Algebra, &p);
        assert_eq!(r(&["0", "0", "0", "2"]), "2*e4");
        assert_eq!(r(&["0", "1", "-b3", "0"]), "e2 - b3*e3");
        assert_eq!(r(&["0", "-b/a5", "0", "0"]), "-b/a5*e2");
        assert_eq!(r(&["0", "0", "0", "0"]), "0");
        assert_eq!(r(&["-1", "0", "0", "-a4/2"]), "-e1 - a4/2*e4");
        assert_eq!(r(&["a4 + 1", "0", "0", "0"]), "(a4 + 1)*e1");
        assert_eq!(r(&["0", "1 - a4", "0", "0"]), "(-a4 + 1)*e2");
    }

    #[test]
    fn zero_product_is_a_grid_of_zeros() {
        let alg = HomAlgebra::classical(vec![], "dot", homalg::structures::ProductTensor::zero(2));
        let t = render_table(&alg, "dot").unwrap();
        assert_eq!(t, "dot | e1 | e2\n----+----+---\ne1  | 0  | 0\ne2  | 0  | 0\n");
        assert!(matches!(render_table(&alg, "star"), Err(Error::UnknownLabel(_))));
    }
}
