//! Emitted documents and their JSON and CSV encodings.

use std::io::Write;

use degstir::identities::CheckReport;
use degstir::{LambdaPoly, Rational};
use serde::{Deserialize, Serialize};

/// How λ appears in emitted tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaMode {
    Sym,
    Value(Rational),
}

impl LambdaMode {
    pub fn label(&self) -> String {
        match self {
            LambdaMode::Sym => "sym".to_string(),
            LambdaMode::Value(v) => v.to_string(),
        }
    }

    pub fn cell(&self, p: &LambdaPoly) -> Cell {
        match self {
            LambdaMode::Sym => Cell::Sym(p.to_coeff_strings()),
            LambdaMode::Value(v) => Cell::Value(p.eval(v).to_string()),
        }
    }
}

impl std::str::FromStr for LambdaMode {
    type Err = degstir::Error;

    fn from_str(s: &str) -> degstir::Result<Self> {
        if s == "sym" {
            Ok(LambdaMode::Sym)
        } else {
            s.parse().map(LambdaMode::Value)
        }
    }
}

/// A table entry: coefficient list (lowest power of λ first) or an evaluated
/// rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Sym(Vec<String>),
    Value(String),
}

impl Cell {
    /// CSV form: coefficients joined by `;`.
    pub fn csv_field(&self) -> String {
        match self {
            Cell::Sym(coeffs) => coeffs.join(";"),
            Cell::Value(v) => v.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rv: Option<String>,
    pub n: usize,
    pub lambda: String,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentRow {
    pub n: usize,
    pub moment: Cell,
    pub cumulant: Cell,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentsDoc {
    pub rv: String,
    pub n: usize,
    pub lambda: String,
    pub rows: Vec<MomentRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRow {
    pub x: String,
    pub values: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub family: String,
    pub rv: String,
    pub n: usize,
    pub lambda: String,
    pub rows: Vec<SequenceRow>,
}

/// A flat table for CSV output.
pub struct Table {
    pub header: Vec<&'static str>,
    pub records: Vec<Vec<String>>,
}

pub trait Document: Serialize {
    fn table(&self) -> Table;
}

impl Document for TriangleDoc {
    fn table(&self) -> Table {
        let records = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(k, cell)| vec![n.to_string(), k.to_string(), cell.csv_field()])
            })
            .collect();
        Table {
            header: vec!["n", "k", "value"],
            records,
        }
    }
}

impl Document for MomentsDoc {
    fn table(&self) -> Table {
        let records = self
            .rows
            .iter()
            .map(|r| vec![r.n.to_string(), r.moment.csv_field(), r.cumulant.csv_field()])
            .collect();
        Table {
            header: vec!["n", "moment", "cumulant"],
            records,
        }
    }
}

impl Document for SequenceDoc {
    fn table(&self) -> Table {
        let records = self
            .rows
            .iter()
            .flat_map(|row| {
                row.values
                    .iter()
                    .enumerate()
                    .map(|(n, cell)| vec![row.x.clone(), n.to_string(), cell.csv_field()])
            })
            .collect();
        Table {
            header: vec!["x", "n", "value"],
            records,
        }
    }
}

impl Document for CheckReport {
    fn table(&self) -> Table {
        let records = self
            .checks
            .iter()
            .map(|c| {
                let verdict = serde_json::to_value(c.verdict).expect("verdict serializes");
                vec![
                    c.id.clone(),
                    verdict.as_str().unwrap_or_default().to_string(),
                    c.passed.to_string(),
                    c.failed.to_string(),
                    c.skipped.to_string(),
                ]
            })
            .collect();
        Table {
            header: vec!["id", "verdict", "passed", "failed", "skipped"],
            records,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Compact JSON followed by a newline.
pub fn to_json<D: Serialize>(doc: &D) -> serde_json::Result<String> {
    let mut s = serde_json::to_string(doc)?;
    s.push('\n');
    Ok(s)
}

pub fn to_csv<D: Document>(doc: &D) -> anyhow::Result<String> {
    let table = doc.table();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.header)?;
    for record in &table.records {
        w.write_record(record)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn render<D: Document>(doc: &D, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(to_json(doc)?),
        Format::Csv => to_csv(doc),
    }
}

pub fn write_out(text: &str, out: Option<&std::path::Path>) -> anyhow::Result<()> {
    use anyhow::Context;
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells() {
        let p = LambdaPoly::from_integers(&[1, -1]);
        assert_eq!(LambdaMode::Sym.cell(&p), Cell::Sym(vec!["1".into(), "-1".into()]));
        let half: LambdaMode = "1/2".parse().unwrap();
        assert_eq!(half.cell(&p), Cell::Value("1/2".into()));
        assert_eq!(half.label(), "1/2");
        assert!("x".parse::<LambdaMode>().is_err());
        assert_eq!(LambdaMode::Sym.cell(&LambdaPoly::zero()).csv_field(), "0");
        assert_eq!(Cell::Sym(vec!["0".into(), "1/2".into()]).csv_field(), "0;1/2");
    }

    #[test]
    fn json_round_trip() {
        let doc = TriangleDoc {
            family: "s2-prob".into(),
            rv: Some("const:1".into()),
            n: 1,
            lambda: "sym".into(),
            rows: vec![vec![Cell::Sym(vec!["1".into()])], vec![Cell::Sym(vec!["0".into()]), Cell::Sym(vec!["1".into()])]],
        };
        let text = to_json(&doc).unwrap();
        let back: TriangleDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_json(&back).unwrap(), text);
    }

    #[test]
    fn csv_quotes_nothing_needlessly() {
        let doc = MomentsDoc {
            rv: "normal:0,1".into(),
            n: 1,
            lambda: "sym".into(),
            rows: vec![MomentRow {
                n: 1,
                moment: Cell::Sym(vec!["0".into()]),
                cumulant: Cell::Sym(vec!["0".into(), "-1/2".into()]),
            }],
        };
        assert_eq!(to_csv(&doc).unwrap(), "n,moment,cumulant\n1,0,0;-1/2\n");
    }
}
