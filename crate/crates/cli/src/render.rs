//! CSV, JSON and LaTeX emitters. Floating-point columns are derived here
//! from the exact values in the reports.

use num_traits::ToPrimitive;
use qhopf::bundles::Side;
use serde_json::{json, Value};

use crate::config::{Mode, QValue};
use crate::report::{tally, SpectralReport};
use crate::CliError;

/// Table metadata for one row: family, condition on the degree and
/// the eigenvalue formula, each as plain text and LaTeX.
pub struct RowInfo {
    pub family: &'static str,
    pub condition: &'static str,
    pub formula: &'static str,
    pub family_tex: &'static str,
    pub condition_tex: &'static str,
    pub formula_tex: &'static str,
}

const LEFT_ROWS: [RowInfo; 9] = [
    RowInfo { family: "1", condition: "n = 0", formula: "0", family_tex: r"\mathbb{1}", condition_tex: "0", formula_tex: "0" },
    RowInfo {
        family: "alpha^m gamma^k",
        condition: "m+k = n",
        formula: "1/2 [n] q^4",
        family_tex: r"\alpha^{m}\gamma^{k}",
        condition_tex: "m+k=n",
        formula_tex: r"\tfrac{1}{2}[n]\,q^{4}",
    },
    RowInfo {
        family: "alpha*^N, gamma*^N",
        condition: "n = -N < 0",
        formula: "1/2 [N] q^(2(1-N))",
        family_tex: r"\alpha^{*N},\ \gamma^{*N}",
        condition_tex: r"n=-N<0",
        formula_tex: r"\tfrac{1}{2}[N]\,q^{2(1-N)}",
    },
    RowInfo {
        family: "alpha*^m gamma*^l",
        condition: "m+l = N = -n",
        formula: "1/2 [N] q^(2(1-N))",
        family_tex: r"\alpha^{*m}\gamma^{*l}",
        condition_tex: r"m+l=N=-n",
        formula_tex: r"\tfrac{1}{2}[N]\,q^{2(1-N)}",
    },
    RowInfo {
        family: "alpha^m gamma*^l",
        condition: "m-l = n",
        formula: "1/2 ([l][m+1] q^(2(1-l)) + [m][l+1] q^(2(2-l)))",
        family_tex: r"\alpha^{m}\gamma^{*l}",
        condition_tex: "m-l=n",
        formula_tex: r"\tfrac{1}{2}\big([l][m+1]\,q^{2(1-l)}+[m][l+1]\,q^{2(2-l)}\big)",
    },
    RowInfo {
        family: "alpha*^m gamma^k",
        condition: "k-m = n",
        formula: "1/2 ([m][k+1] q^(2(1-m)) + [k][m+1] q^(2(2-m)))",
        family_tex: r"\alpha^{*m}\gamma^{k}",
        condition_tex: "k-m=n",
        formula_tex: r"\tfrac{1}{2}\big([m][k+1]\,q^{2(1-m)}+[k][m+1]\,q^{2(2-m)}\big)",
    },
    RowInfo {
        family: "p(gamma^k gamma*^l)",
        condition: "k-l = n",
        formula: "1/2 ([l] q^(2(1-l)) + [k] q^4 + 2[l][k] q^(2(2-l)))",
        family_tex: r"p(\gamma^{k}\gamma^{*l})",
        condition_tex: "k-l=n",
        formula_tex: r"\tfrac{1}{2}\big([l]\,q^{2(1-l)}+[k]\,q^{4}+2[l][k]\,q^{2(2-l)}\big)",
    },
    RowInfo {
        family: "p(alpha^m gamma^k gamma*^l)",
        condition: "m+k-l = n",
        formula: "1/2 ([m][l+1] q^(4-2l) + [k][l+1] q^(4+2m-2l) + [l][m+1] q^(2-2l) + [l][k] q^(4+2m-2l))",
        family_tex: r"p(\alpha^{m}\gamma^{k}\gamma^{*l})",
        condition_tex: "m+k-l=n",
        formula_tex: r"\tfrac{1}{2}\big([m][l+1]\,q^{4-2l}+[k][l+1]\,q^{4+2m-2l}+[l][m+1]\,q^{2-2l}+[l][k]\,q^{4+2m-2l}\big)",
    },
    RowInfo {
        family: "p(alpha*^m gamma^k gamma*^l)",
        condition: "k-m-l = n",
        formula: "1/2 ([m][k+1] q^(2-2m) + [l][k+1] q^(2-2m-2l) + [k][m+1] q^(4-2m) + [l][k] q^(4-2m-2l))",
        family_tex: r"p(\alpha^{*m}\gamma^{k}\gamma^{*l})",
        condition_tex: "k-m-l=n",
        formula_tex: r"\tfrac{1}{2}\big([m][k+1]\,q^{2-2m}+[l][k+1]\,q^{2-2m-2l}+[k][m+1]\,q^{4-2m}+[l][k]\,q^{4-2m-2l}\big)",
    },
];

const RIGHT_ROWS: [RowInfo; 9] = [
    RowInfo { family: "1", condition: "n = 0", formula: "0", family_tex: r"\mathbb{1}", condition_tex: "0", formula_tex: "0" },
    RowInfo {
        family: "alpha^m gamma^k",
        condition: "m+k = n, m,k > 0",
        formula: "1/2 [n] q^(2(1-n))",
        family_tex: r"\alpha^{m}\gamma^{k}",
        condition_tex: r"m+k=n,\ m,k>0",
        formula_tex: r"\tfrac{1}{2}[n]\,q^{2(1-n)}",
    },
    RowInfo {
        family: "alpha^n, gamma^n",
        condition: "n > 0",
        formula: "1/2 [n] q^(2(1-n))",
        family_tex: r"\alpha^{n},\ \gamma^{n}",
        condition_tex: "n>0",
        formula_tex: r"\tfrac{1}{2}[n]\,q^{2(1-n)}",
    },
    RowInfo {
        family: "alpha*^m gamma*^l",
        condition: "m+l = N = -n",
        formula: "1/2 [N] q^4",
        family_tex: r"\alpha^{*m}\gamma^{*l}",
        condition_tex: r"m+l=N=-n",
        formula_tex: r"\tfrac{1}{2}[N]\,q^{4}",
    },
    RowInfo {
        family: "alpha^m gamma*^l",
        condition: "m-l = n",
        formula: "1/2 ([m][l+1] q^(2(1-m)) + [l][m+1] q^(2(2-m)))",
        family_tex: r"\alpha^{m}\gamma^{*l}",
        condition_tex: "m-l=n",
        formula_tex: r"\tfrac{1}{2}\big([m][l+1]\,q^{2(1-m)}+[l][m+1]\,q^{2(2-m)}\big)",
    },
    RowInfo {
        family: "alpha*^m gamma^k",
        condition: "k-m = n",
        formula: "1/2 ([k][m+1] q^(2(1-k)) + [m][k+1] q^(2(2-k)))",
        family_tex: r"\alpha^{*m}\gamma^{k}",
        condition_tex: "k-m=n",
        formula_tex: r"\tfrac{1}{2}\big([k][m+1]\,q^{2(1-k)}+[m][k+1]\,q^{2(2-k)}\big)",
    },
    RowInfo {
        family: "p^(gamma^k gamma*^l)",
        condition: "k-l = n",
        formula: "1/2 ([l] q^(2(2-k)) + [k] q^(2(1-n)) + [l][k] (1+q^4) q^(2(1-k)))",
        family_tex: r"\hat p(\gamma^{k}\gamma^{*l})",
        condition_tex: "k-l=n",
        formula_tex: r"\tfrac{1}{2}\big([l]\,q^{2(2-k)}+[k]\,q^{2(1-n)}+[l][k](1+q^{4})\,q^{2(1-k)}\big)",
    },
    RowInfo {
        family: "p^(alpha^m gamma^k gamma*^l)",
        condition: "m+k-l = n",
        formula: "1/2 ([m][l+1] q^(2-2m-2k) + [k][l+1] q^(2-2k) + [l][m+1] q^(4-2m-2k) + [l][k] q^(6-2k))",
        family_tex: r"\hat p(\alpha^{m}\gamma^{k}\gamma^{*l})",
        condition_tex: "m+k-l=n",
        formula_tex: r"\tfrac{1}{2}\big([m][l+1]\,q^{2-2m-2k}+[k][l+1]\,q^{2-2k}+[l][m+1]\,q^{4-2m-2k}+[l][k]\,q^{6-2k}\big)",
    },
    RowInfo {
        family: "p^(alpha*^m gamma^k gamma*^l)",
        condition: "k-m-l = n",
        formula: "1/2 ([m][k+1] q^(4-2k+2l) + [l][k+1] q^(4-2k) + [k][m+1] q^(2-2k+2l) + [k][l] q^(2-2k))",
        family_tex: r"\hat p(\alpha^{*m}\gamma^{k}\gamma^{*l})",
        condition_tex: "k-m-l=n",
        formula_tex: r"\tfrac{1}{2}\big([m][k+1]\,q^{4-2k+2l}+[l][k+1]\,q^{4-2k}+[k][m+1]\,q^{2-2k+2l}+[k][l]\,q^{2-2k}\big)",
    },
];

pub fn row_info(side: Side, row: u8) -> &'static RowInfo {
    let rows = match side {
        Side::Left => &LEFT_ROWS,
        Side::Right => &RIGHT_ROWS,
    };
    &rows[(row as usize).clamp(1, 9) - 1]
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.12e}")
}

/// Float values of one entry at the report's sample points, derived from
/// the exact data.
fn samples(report: &SpectralReport, e: &crate::report::SpectralEntry) -> Result<Vec<(String, f64, f64)>, CliError> {
    let mut out = Vec::new();
    match report.mode {
        Mode::Exact => {
            for qs in &report.q_values {
                let q: QValue = qs.parse().map_err(CliError::Config)?;
                let table = e.table.evaluate_rational(&q.value)?.to_f64().unwrap_or(f64::NAN);
                let computed = match &e.computed {
                    Some(c) => c.evaluate_rational(&q.value)?.to_f64().unwrap_or(f64::NAN),
                    None => f64::NAN,
                };
                out.push((qs.clone(), computed, table));
            }
        }
        Mode::Numeric => {
            for p in &e.points {
                let parse = |s: &str| s.parse::<num_rational::BigRational>().ok().and_then(|r| r.to_f64()).unwrap_or(f64::NAN);
                out.push((p.q.clone(), parse(&p.computed), parse(&p.table)));
            }
        }
    }
    Ok(out)
}

pub fn spectrum_csv(report: &SpectralReport) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let mut header: Vec<String> = ["n", "side", "row", "family", "leading", "computed", "table", "match"].iter().map(|s| s.to_string()).collect();
    for q in &report.q_values {
        header.push(format!("computed@q={q}"));
        header.push(format!("table@q={q}"));
    }
    w.write_record(&header)?;
    for (b, e) in report.entries() {
        let mut rec = vec![
            b.n.to_string(),
            b.side.name().to_string(),
            e.row.to_string(),
            e.family.clone(),
            e.leading.to_string(),
            e.computed.as_ref().map(|c| c.to_string()).unwrap_or_default(),
            e.table.to_string(),
            e.matched.to_string(),
        ];
        for (_, c, t) in samples(report, e)? {
            rec.push(fmt_f64(c));
            rec.push(fmt_f64(t));
        }
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn spectrum_json(report: &SpectralReport) -> Result<String, CliError> {
    let mut v = serde_json::to_value(report)?;
    let mut derived = Vec::new();
    for (_, e) in report.entries() {
        let s: Vec<Value> = samples(report, e)?.into_iter().map(|(q, c, t)| json!({"q": q, "computed": c, "table": t})).collect();
        derived.push(s);
    }
    let mut it = derived.into_iter();
    if let Some(blocks) = v.get_mut("blocks").and_then(Value::as_array_mut) {
        for b in blocks {
            if let Some(entries) = b.get_mut("entries").and_then(Value::as_array_mut) {
                for e in entries {
                    e["samples"] = Value::Array(it.next().unwrap_or_default());
                }
            }
        }
    }
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn side_title(side: Side) -> &'static str {
    match side {
        Side::Left => r"Left Laplacian $\nabla^{\star_L}_n\nabla_n$",
        Side::Right => r"Right Laplacian $\hat\nabla^{\star_R}_n\hat\nabla_n$",
    }
}

pub fn spectrum_latex(report: &SpectralReport) -> Result<String, CliError> {
    let mut out = String::new();
    for side in [Side::Left, Side::Right] {
        let blocks: Vec<_> = report.blocks.iter().filter(|b| b.side == side).collect();
        if blocks.is_empty() {
            continue;
        }
        out.push_str("\\begin{table}\n\\centering\n\\begin{tabular}{|c|c|c|c|c|}\n\\hline\n");
        out.push_str("$n$ & $T(1)$ & row & eigenvalue & match \\\\\\hline\n");
        for b in blocks {
            for e in &b.entries {
                let value = match &e.computed {
                    Some(c) => format!("${}$", c.to_latex()),
                    None => e.points.iter().map(|p| format!("{} @ ${}$", p.computed, p.q)).collect::<Vec<_>>().join("; "),
                };
                let mark = if e.matched { r"\checkmark" } else { r"\texttimes" };
                out.push_str(&format!("${}$ & ${}$ & {} & {} & {} \\\\\\hline\n", b.n, e.leading.to_latex(), e.row, value, mark));
            }
        }
        out.push_str(&format!(
            "\\end{{tabular}}\n\\caption{{{}, filtration $N = {}$.}}\n\\end{{table}}\n\n",
            side_title(side),
            report.filtration
        ));
    }
    Ok(out)
}

/// The closed-form table layout: one line per row with its family, degree
/// condition and eigenvalue formula, plus how many computed eigenvalues
/// fell in the row and matched.
pub fn table_latex(report: &SpectralReport) -> String {
    let t = tally(report);
    let mut out = String::new();
    for side in [Side::Left, Side::Right] {
        let (head, lam) = match side {
            Side::Left => ("T(1)", r"\lambda"),
            Side::Right => (r"\hat T(1)", r"\hat\lambda"),
        };
        out.push_str("\\begin{table}\n\\centering\n\\begin{tabular}{|c|c|c|c|}\n\\hline\n");
        out.push_str(&format!("${head}$ & $n\\in\\mathbb{{Z}}$ & ${lam}$ & checked \\\\\\hline\n"));
        for row in 1..=9u8 {
            let info = row_info(side, row);
            let r = t.iter().find(|x| x.side == side && x.row == row).expect("all rows tallied");
            out.push_str(&format!(
                "${}$ & ${}$ & ${}$ & {}/{} \\\\\\hline\n",
                info.family_tex, info.condition_tex, info.formula_tex, r.matched, r.checked
            ));
        }
        out.push_str(&format!(
            "\\end{{tabular}}\n\\caption{{{}: closed forms, checked for $n\\in[{}]$ at filtration $N={}$.}}\n\\end{{table}}\n\n",
            side_title(side),
            n_span(report),
            report.filtration
        ));
    }
    out
}

fn n_span(report: &SpectralReport) -> String {
    let lo = report.blocks.iter().map(|b| b.n).min().unwrap_or(0);
    let hi = report.blocks.iter().map(|b| b.n).max().unwrap_or(0);
    format!("{lo},{hi}")
}

pub fn table_csv(report: &SpectralReport) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(["side", "row", "family", "condition", "formula", "checked", "matched"])?;
    for r in tally(report) {
        let info = row_info(r.side, r.row);
        w.write_record([
            r.side.name(),
            &r.row.to_string(),
            info.family,
            info.condition,
            info.formula,
            &r.checked.to_string(),
            &r.matched.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn table_json(report: &SpectralReport) -> Result<String, CliError> {
    let rows: Vec<Value> = tally(report)
        .into_iter()
        .map(|r| {
            let info = row_info(r.side, r.row);
            json!({
                "side": r.side,
                "row": r.row,
                "family": info.family,
                "condition": info.condition,
                "formula": info.formula,
                "checked": r.checked,
                "matched": r.matched,
            })
        })
        .collect();
    Ok(serde_json::to_string_pretty(&json!({ "filtration": report.filtration, "rows": rows }))? + "\n")
}

/// Generic CSV of `(key, value)` records.
pub fn pairs_csv(header: [&str; 2], rows: &[(String, String)]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header)?;
    for (k, v) in rows {
        w.write_record([k, v])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Generic two-column LaTeX table.
pub fn pairs_latex(header: [&str; 2], rows: &[(String, String)]) -> String {
    let mut out = String::from("\\begin{tabular}{|l|l|}\n\\hline\n");
    out.push_str(&format!("{} & {} \\\\\\hline\n", header[0], header[1]));
    for (k, v) in rows {
        out.push_str(&format!("{} & \\verb|{}| \\\\\\hline\n", escape_tex(k), v.replace('|', "/")));
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn escape_tex(s: &str) -> String {
    s.replace('_', r"\_").replace('^', r"\^{}").replace('*', r"$^*$")
}
