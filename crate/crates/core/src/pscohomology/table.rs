//! JSON, text and LaTeX renderings of cohomology tables. The grids put the
//! lambda-degree in columns and the total degree `g + k` in rows, so that
//! classes of equal dimension share a row; a bullet marks a computed cell
//! without cohomology.

use serde::{Deserialize, Serialize};

use super::CohomologyTable;
use crate::json::{module_terms, ModuleTerm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub lambda_degree: usize,
    pub theta_degree: usize,
    pub modules: Vec<ModuleTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyJson {
    pub field: String,
    pub n_max: usize,
    pub classes: Vec<ClassJson>,
}

impl CohomologyTable {
    pub fn to_json(&self) -> CohomologyJson {
        CohomologyJson {
            field: self.field.clone(),
            n_max: self.n_max,
            classes: self
                .cells
                .iter()
                .map(|(&(g, k), m)| ClassJson { lambda_degree: g, theta_degree: k, modules: module_terms(m) })
                .collect(),
        }
    }

    /// `(columns, rows)` of the grid: one past the last occupied
    /// lambda-degree and total degree, within the computed range.
    fn extent(&self) -> (usize, usize) {
        let cols = self.cells.keys().map(|&(g, _)| g + 2).max().unwrap_or(1).min(self.n_max + 1);
        let rows = self.cells.keys().map(|&(g, k)| g + k + 2).max().unwrap_or(1).min(self.n_max + 1);
        (cols, rows)
    }

    fn grid(&self, empty: &str) -> Vec<Vec<String>> {
        let (cols, rows) = self.extent();
        (0..rows)
            .map(|n| {
                (0..cols.min(n + 1))
                    .map(|g| self.get(g, n - g).map_or_else(|| empty.to_string(), |m| m.to_string()))
                    .collect()
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let (cols, _) = self.extent();
        let grid = self.grid(".");
        let width = grid.iter().flatten().map(String::len).max().unwrap_or(1).max(8);
        let mut out = format!("zero-mode cohomology: {} field, total degree <= {}\n", self.field, self.n_max);
        out.push_str(&format!("{:>4} ", "n"));
        for g in 0..cols {
            out.push_str(&format!(" {:^width$}", format!("lambda^{g}")));
        }
        out.push('\n');
        for (n, row) in grid.iter().enumerate() {
            let mut line = format!("{n:>4} ");
            for cell in row {
                line.push_str(&format!(" {cell:^width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let (cols, _) = self.extent();
        let grid = self.grid("\\bullet");
        let mut out = format!("\\begin{{array}}{{r{}}}\n", "c".repeat(cols));
        let header: Vec<String> = (0..cols).map(|g| format!("\\lambda^{g}")).collect();
        out.push_str(&format!(" & {} \\\\\n", header.join(" & ")));
        for (n, row) in grid.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|c| c.replace('+', "\\oplus ")).collect();
            out.push_str(&format!("{n} & {} \\\\\n", cells.join(" & ")));
        }
        out.push_str("\\end{array}\n");
        out
    }
}
