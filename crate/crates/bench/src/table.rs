//! Comparison tables: one row per statistic, one column per campaign.

use std::fmt::Write as _;

use molpb::front_io::format_sig17;

use crate::campaign::CampaignSummary;
use crate::error::{BenchError, Result};

pub const ROW_LABELS: [&str; 9] = [
    "Ave.GD", "Ave.MS", "Ave.RGD", "Ave.S", "Std.GD", "Std.MS", "Std.RGD", "Std.S", "PT",
];

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    /// `(label, one value per column)`.
    pub rows: Vec<(String, Vec<f64>)>,
}

/// Builds the table. Columns are named by algorithm, or `algorithm:problem`
/// when the summaries cover more than one problem.
pub fn tabulate(summaries: &[CampaignSummary]) -> Result<Table> {
    if summaries.is_empty() {
        return Err(BenchError::Config("nothing to tabulate".into()));
    }
    let mixed = summaries.iter().any(|s| s.problem != summaries[0].problem);
    let columns = summaries
        .iter()
        .map(|s| {
            if mixed {
                format!("{}:{}", s.algorithm, s.problem)
            } else {
                s.algorithm.to_string()
            }
        })
        .collect();
    let values = |s: &CampaignSummary| {
        let st = &s.stats;
        [
            st.gd.mean,
            st.max_spread.mean,
            st.rgd.mean,
            st.spacing.mean,
            st.gd.std,
            st.max_spread.std,
            st.rgd.std,
            st.spacing.std,
            s.total_wall_ms,
        ]
    };
    let per_column: Vec<[f64; 9]> = summaries.iter().map(values).collect();
    let rows = ROW_LABELS
        .iter()
        .enumerate()
        .map(|(k, label)| (label.to_string(), per_column.iter().map(|c| c[k]).collect()))
        .collect();
    Ok(Table { columns, rows })
}

/// `v` with six significant digits, in plain notation for moderate
/// magnitudes and scientific otherwise.
pub fn format_sig6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..6).contains(&exp) {
        format!("{:.*}", (5 - exp) as usize, v)
    } else {
        format!("{v:.5e}")
    }
}

impl Table {
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|(_, vals)| vals.iter().map(|&v| format_sig6(v)).collect())
            .collect();
        let label_w = self
            .rows
            .iter()
            .map(|(l, _)| l.len())
            .max()
            .unwrap_or(0)
            .max("metric".len());
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(c, name)| {
                cells
                    .iter()
                    .map(|r| r[c].len())
                    .max()
                    .unwrap_or(0)
                    .max(name.len())
            })
            .collect();
        let mut out = format!("{:<label_w$}", "metric");
        for (name, w) in self.columns.iter().zip(&widths) {
            let _ = write!(out, "  {name:>w$}");
        }
        out.push('\n');
        for ((label, _), row) in self.rows.iter().zip(&cells) {
            let _ = write!(out, "{label:<label_w$}");
            for (cell, w) in row.iter().zip(&widths) {
                let _ = write!(out, "  {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("metric");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (label, vals) in &self.rows {
            out.push_str(label);
            for &v in vals {
                out.push(',');
                out.push_str(&format_sig17(v));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Table::to_csv`].
    pub fn parse_csv(text: &str) -> Result<Table> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| BenchError::Config("empty table CSV".into()))?;
        let mut head = header.split(',');
        if head.next() != Some("metric") {
            return Err(BenchError::Config(
                "table CSV must start with a metric column".into(),
            ));
        }
        let columns: Vec<String> = head.map(str::to_string).collect();
        let mut rows = Vec::new();
        for (n, line) in lines.enumerate() {
            let mut fields = line.split(',');
            let label = fields.next().unwrap_or_default().to_string();
            let vals = fields
                .map(|s| {
                    s.parse::<f64>().map_err(|_| {
                        BenchError::Config(format!("table CSV line {}: bad number {s:?}", n + 2))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != columns.len() {
                return Err(BenchError::Config(format!(
                    "table CSV line {}: wrong column count",
                    n + 2
                )));
            }
            rows.push((label, vals));
        }
        Ok(Table { columns, rows })
    }
}
