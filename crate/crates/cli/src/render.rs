//! Text, CSV, LaTeX and JSON renderings of a computed family.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

/// One family, flattened into records for text and CSV, with an optional
/// triangle layout that text and LaTeX prefer, and its JSON form.
pub struct Rendered {
    pub headers: Vec<&'static str>,
    pub records: Vec<Vec<String>>,
    pub grid: Option<Vec<Vec<String>>>,
    pub json: Value,
}

impl Rendered {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON value serializes");
                s.push('\n');
                s
            }
            Format::Csv => csv_text(&self.headers, &self.records),
            Format::Text => match &self.grid {
                Some(grid) => aligned(grid),
                None => {
                    let mut rows = vec![self.headers.iter().map(|h| h.to_string()).collect()];
                    rows.extend(self.records.iter().cloned());
                    aligned(&rows)
                }
            },
            Format::Latex => match &self.grid {
                Some(grid) => latex_grid(grid),
                None => latex_records(&self.headers, &self.records),
            },
        }
    }
}

pub fn csv_text(headers: &[&str], records: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("write to memory");
    for r in records {
        w.write_record(r).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("CSV of UTF-8 fields")
}

/// Columns padded to their widest cell, two spaces apart.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (j, cell) in r.iter().enumerate() {
            if j > 0 {
                line.push_str("  ");
            }
            let pad = widths[j] - cell.chars().count();
            line.push_str(&" ".repeat(pad));
            line.push_str(cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn tex(cell: &str) -> String {
    cell.replace('ε', "\\varepsilon ")
}

fn latex_records(headers: &[&str], records: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(headers.len()));
    let _ = writeln!(out, "{} \\\\ \\hline", headers.iter().map(|h| format!("${h}$")).collect::<Vec<_>>().join(" & "));
    for r in records {
        let cells: Vec<String> = r.iter().map(|c| format!("${}$", tex(c))).collect();
        let _ = writeln!(out, "{} \\\\", cells.join(" & "));
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// A centred triangle: row `n` is indented so that entries of consecutive
/// rows interleave, as in a Pascal-style layout.
fn latex_grid(grid: &[Vec<String>]) -> String {
    let width = grid.iter().map(Vec::len).max().unwrap_or(0);
    let cols = 2 * width.max(1) - 1;
    let mut out = String::new();
    let _ = writeln!(out, "\\begin{{tabular}}{{{}}}", "c".repeat(cols));
    for row in grid {
        let lead = width - row.len();
        let mut cells = vec![String::new(); cols];
        for (i, v) in row.iter().enumerate() {
            cells[lead + 2 * i] = v.clone();
        }
        let _ = writeln!(out, "{} \\\\", cells.join(" & ").trim_end());
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Rendered {
        Rendered {
            headers: vec!["n", "poly"],
            records: vec![
                vec!["0".into(), "1".into()],
                vec!["1".into(), "1+q, 2".into()],
            ],
            grid: None,
            json: serde_json::json!({"x": 1}),
        }
    }

    #[test]
    fn text_is_aligned() {
        assert_eq!(sample().render(Format::Text), "n    poly\n0       1\n1  1+q, 2\n");
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(sample().render(Format::Csv), "n,poly\n0,1\n1,\"1+q, 2\"\n");
    }

    #[test]
    fn latex_triangle_interleaves() {
        let grid = vec![vec!["1".to_string()], vec!["1".to_string(), "1".to_string()]];
        let r = Rendered { headers: vec![], records: vec![], grid: Some(grid), json: Value::Null };
        assert_eq!(
            r.render(Format::Latex),
            "\\begin{tabular}{ccc}\n & 1 & \\\\\n1 &  & 1 \\\\\n\\end{tabular}\n"
        );
    }
}
