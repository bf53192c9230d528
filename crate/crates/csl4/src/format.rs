//! Plain/CSV/JSON emitters. All output is deterministic: fixed column
//! orders, canonical module bases, decimal strings for exact integers.

use std::fmt::Write as _;

use csl4_core::zmodule::FreeModule;
use csl4_core::CslError;

use crate::FormatArg;

/// Rational entries of the canonical basis as `p/q` strings (or plain
/// integers when the denominator is 1), one inner list per basis vector.
fn basis_strings(module: &FreeModule) -> Vec<Vec<String>> {
    module
        .basis_columns()
        .iter()
        .map(|col| col.iter().map(|x| x.to_string()).collect())
        .collect()
}

pub fn module_plain(module: &FreeModule) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "ambient_dim={} rank={}",
        module.ambient_dim(),
        module.rank()
    );
    for col in basis_strings(module) {
        let _ = writeln!(s, "{}", col.join(" "));
    }
    s
}

pub fn module_csv(module: &FreeModule) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ambient_dim,rank");
    let _ = writeln!(s, "{},{}", module.ambient_dim(), module.rank());
    for col in basis_strings(module) {
        let _ = writeln!(s, "{}", col.join(","));
    }
    s
}

/// The JSON schema used for module files:
/// {"ambient_dim": n, "rank": k, "basis": [[rational strings]]},
/// HNF-canonical on write.
pub fn module_json(module: &FreeModule) -> String {
    let basis: Vec<serde_json::Value> = basis_strings(module)
        .into_iter()
        .map(|col| {
            serde_json::Value::Array(col.into_iter().map(serde_json::Value::String).collect())
        })
        .collect();
    let v = serde_json::json!({
        "ambient_dim": module.ambient_dim(),
        "rank": module.rank(),
        "basis": basis,
    });
    format!("{v}\n")
}

/// Small column-oriented table with the three output formats.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: &[String]) {
        assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells.to_vec());
    }

    pub fn render(&self, fmt: FormatArg) -> Result<String, CslError> {
        Ok(match fmt {
            FormatArg::Plain => {
                let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
                for row in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.len());
                    }
                }
                let mut s = String::new();
                let fmt_row = |cells: &[String], widths: &[usize]| -> String {
                    cells
                        .iter()
                        .zip(widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let _ = writeln!(s, "{}", fmt_row(&self.header, &widths));
                for row in &self.rows {
                    let _ = writeln!(s, "{}", fmt_row(row, &widths));
                }
                s
            }
            FormatArg::Csv => {
                let mut s = String::new();
                let _ = writeln!(s, "{}", self.header.join(","));
                for row in &self.rows {
                    let _ = writeln!(s, "{}", row.join(","));
                }
                s
            }
            FormatArg::Json => {
                let rows: Vec<serde_json::Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: serde_json::Map<String, serde_json::Value> = self
                            .header
                            .iter()
                            .cloned()
                            .zip(row.iter().map(|c| serde_json::Value::String(c.clone())))
                            .collect();
                        serde_json::Value::Object(obj)
                    })
                    .collect();
                format!("{}\n", serde_json::Value::Array(rows))
            }
        })
    }
}
