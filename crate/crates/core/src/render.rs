//! Output formats for the command-line tables: JSON, CSV, LaTeX and plain
//! text. JSON and CSV always write rationals as `p/q`; plain text and LaTeX
//! drop the `/1` of integers.

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{to_display_string, to_fraction_string, Rational};
use crate::basis::{BasisExpansion, BasisMatrix};
use crate::polynomial::Polynomial;
use crate::sequences::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    #[default]
    Plain,
}

/// Entry of the matrix whose computed value differs from the printed
/// cubic table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixDiscrepancy {
    pub row: usize,
    pub column: usize,
    pub printed: String,
    pub computed: String,
    pub note: &'static str,
}

/// Known misprints in the printed change-of-basis tables, as
/// `(row, column, printed value)` with 1-based indices.
pub const PRINTED_MATRIX_ERRATA: [(usize, usize, i64); 1] = [(1, 4, -1)];

pub fn matrix_discrepancies(m: &BasisMatrix) -> Vec<MatrixDiscrepancy> {
    PRINTED_MATRIX_ERRATA
        .iter()
        .filter(|(i, j, _)| *i <= m.order() && *j <= m.order())
        .map(|&(i, j, printed)| MatrixDiscrepancy {
            row: i,
            column: j,
            printed: to_fraction_string(&Rational::from_integer(printed.into())),
            computed: to_fraction_string(m.get(i, j)),
            note: "printed cubic table lists G_4(x) with constant term -1; the Appell expansion gives +1",
        })
        .collect()
}

fn latex(r: &Rational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let sign = if r.numer().sign() == num_bigint::Sign::Minus { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
}

fn latex_poly(p: &Polynomial) -> String {
    // `x^10` needs braces in TeX.
    let text = p.to_string();
    let mut out = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '^' {
            let mut exp = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                exp.push(*d);
                chars.next();
            }
            out.push_str(&format!("^{{{exp}}}"));
        } else {
            out.push(c);
        }
    }
    out
}

fn symbol(family: Family) -> &'static str {
    match family {
        Family::Bernoulli => "B",
        Family::Euler => "E",
        Family::Genocchi => "G",
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

pub fn numbers(family: Family, values: &[Rational], format: Format) -> String {
    match format {
        Format::Json => pretty(json!({
            "family": family.name(),
            "values": values
                .iter()
                .enumerate()
                .map(|(n, v)| json!({"n": n, "value": to_fraction_string(v)}))
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (n, v) in values.iter().enumerate() {
                s.push_str(&format!("{n},{}\n", to_fraction_string(v)));
            }
            s
        }
        Format::Latex => {
            let mut s = format!("\\begin{{tabular}}{{rr}}\n$n$ & ${}_n$ \\\\\n\\hline\n", symbol(family));
            for (n, v) in values.iter().enumerate() {
                s.push_str(&format!("{n} & ${}$ \\\\\n", latex(v)));
            }
            s.push_str("\\end{tabular}\n");
            s
        }
        Format::Plain => values
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{n} {}\n", to_display_string(v)))
            .collect(),
    }
}

pub fn polynomials(family: Family, polys: &[Polynomial], format: Format) -> String {
    match format {
        Format::Json => pretty(json!({
            "family": family.name(),
            "polynomials": polys
                .iter()
                .enumerate()
                .map(|(n, p)| json!({"n": n, "coeffs": p.to_fraction_strings()}))
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("n,k,coefficient\n");
            for (n, p) in polys.iter().enumerate() {
                for (k, c) in p.coeffs().iter().enumerate() {
                    s.push_str(&format!("{n},{k},{}\n", to_fraction_string(c)));
                }
            }
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{align*}\n");
            for (n, p) in polys.iter().enumerate() {
                s.push_str(&format!("{}_{{{n}}}(x) &= {} \\\\\n", symbol(family), latex_poly(p)));
            }
            s.push_str("\\end{align*}\n");
            s
        }
        Format::Plain => polys
            .iter()
            .enumerate()
            .map(|(n, p)| format!("{}_{n}(x) = {p}\n", symbol(family)))
            .collect(),
    }
}

pub fn expansion(e: &BasisExpansion, format: Format) -> String {
    let element = |k: usize| match e.kind {
        crate::basis::BasisKind::Power => format!("x^{k}"),
        crate::basis::BasisKind::Bernoulli => format!("B_{k}(x)"),
        crate::basis::BasisKind::Euler => format!("E_{k}(x)"),
        crate::basis::BasisKind::Genocchi => format!("G_{k}(x)"),
    };
    match format {
        Format::Json => pretty(json!({
            "basis": e.kind.name(),
            "start": e.start,
            "coefficients": e.coefficients.iter().map(to_fraction_string).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("k,coefficient\n");
            for (k, c) in e.indexed() {
                s.push_str(&format!("{k},{}\n", to_fraction_string(c)));
            }
            s
        }
        Format::Latex => {
            let terms: Vec<String> = e
                .indexed()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(k, c)| format!("{} {}", latex(c), element(k).replace(&format!("_{k}"), &format!("_{{{k}}}"))))
                .collect();
            let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            format!("p(x) = {body}\n")
        }
        Format::Plain => e
            .indexed()
            .map(|(k, c)| format!("a_{k} = {}\n", to_display_string(c)))
            .collect(),
    }
}

pub fn matrix(m: &BasisMatrix, format: Format) -> String {
    match format {
        Format::Json => pretty(json!({
            "n": m.n,
            "entries": m
                .entries
                .iter()
                .map(|row| row.iter().map(to_fraction_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "metadata": { "discrepancies": matrix_discrepancies(m) },
        })),
        Format::Csv => m
            .entries
            .iter()
            .map(|row| row.iter().map(to_fraction_string).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
        Format::Latex => {
            let mut s = String::from("\\begin{pmatrix}\n");
            let rows: Vec<String> = m
                .entries
                .iter()
                .map(|row| row.iter().map(latex).collect::<Vec<_>>().join(" & "))
                .collect();
            s.push_str(&rows.join(" \\\\\n"));
            s.push_str("\n\\end{pmatrix}\n");
            s
        }
        Format::Plain => {
            let cells: Vec<Vec<String>> =
                m.entries.iter().map(|row| row.iter().map(to_display_string).collect()).collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            cells
                .iter()
                .map(|row| {
                    row.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ") + "\n"
                })
                .collect()
        }
    }
}

/// A grid of moment values: `values[i][j]` belongs to `(ms[i], ns[j])`.
pub struct Grid<'a> {
    pub kind: &'a str,
    pub ms: Vec<usize>,
    pub ns: Vec<usize>,
    pub values: Vec<Vec<Rational>>,
}

pub fn grid(g: &Grid<'_>, format: Format) -> String {
    match format {
        Format::Json => pretty(json!({
            "kind": g.kind,
            "m": g.ms,
            "n": g.ns,
            "values": g
                .values
                .iter()
                .map(|row| row.iter().map(to_fraction_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("m");
            for n in &g.ns {
                s.push_str(&format!(",n={n}"));
            }
            s.push('\n');
            for (m, row) in g.ms.iter().zip(&g.values) {
                s.push_str(&m.to_string());
                for v in row {
                    s.push(',');
                    s.push_str(&to_fraction_string(v));
                }
                s.push('\n');
            }
            s
        }
        Format::Latex => {
            let mut s = format!("\\begin{{tabular}}{{r|{}}}\n$m \\backslash n$", "r".repeat(g.ns.len()));
            for n in &g.ns {
                s.push_str(&format!(" & {n}"));
            }
            s.push_str(" \\\\\n\\hline\n");
            for (m, row) in g.ms.iter().zip(&g.values) {
                s.push_str(&m.to_string());
                for v in row {
                    s.push_str(&format!(" & ${}$", latex(v)));
                }
                s.push_str(" \\\\\n");
            }
            s.push_str("\\end{tabular}\n");
            s
        }
        Format::Plain => {
            let mut s = String::new();
            for (m, row) in g.ms.iter().zip(&g.values) {
                for (n, v) in g.ns.iter().zip(row) {
                    s.push_str(&format!("{}({m},{n}) = {}\n", g.kind, to_display_string(v)));
                }
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::basis::genocchi_change_matrix;

    #[test]
    fn latex_scalars() {
        assert_eq!(latex(&rat(-1, 2).unwrap()), "-\\frac{1}{2}");
        assert_eq!(latex(&int(17)), "17");
        assert_eq!(latex_poly(&Polynomial::monomial(int(3), 10)), "3x^{10}");
    }

    #[test]
    fn quadratic_matrix_latex() {
        let s = matrix(&genocchi_change_matrix(2), Format::Latex);
        assert_eq!(s, "\\begin{pmatrix}\n1 & -1 & 0 \\\\\n0 & 2 & -3 \\\\\n0 & 0 & 3\n\\end{pmatrix}\n");
    }

    #[test]
    fn cubic_discrepancy_only_from_order_four() {
        assert!(matrix_discrepancies(&genocchi_change_matrix(2)).is_empty());
        let d = matrix_discrepancies(&genocchi_change_matrix(3));
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].row, d[0].column, d[0].printed.as_str(), d[0].computed.as_str()), (1, 4, "-1/1", "1/1"));
    }

    #[test]
    fn number_formats() {
        let vals = vec![int(1), rat(-1, 2).unwrap()];
        assert_eq!(numbers(Family::Euler, &vals, Format::Plain), "0 1\n1 -1/2\n");
        assert_eq!(numbers(Family::Euler, &vals, Format::Csv), "n,value\n0,1/1\n1,-1/2\n");
    }
}
