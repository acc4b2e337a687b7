//! Tabular reports and their text, CSV and JSON renderings.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AngleUnit {
    Deg,
    Rad,
}

impl AngleUnit {
    pub fn label(self) -> &'static str {
        match self {
            AngleUnit::Deg => "deg",
            AngleUnit::Rad => "rad",
        }
    }

    pub fn to_rad(self, x: f64) -> f64 {
        match self {
            AngleUnit::Deg => x.to_radians(),
            AngleUnit::Rad => x,
        }
    }

    pub fn rad_to_unit(self, x: f64) -> f64 {
        match self {
            AngleUnit::Deg => x.to_degrees(),
            AngleUnit::Rad => x,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OutputSpec {
    pub format: Format,
    pub unit: AngleUnit,
    /// Significant digits, 1..=17.
    pub precision: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Printed to the requested number of significant digits.
    Num(f64),
    /// Printed with a fixed number of decimals regardless of precision.
    Fixed(f64, usize),
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, columns: Vec<String>) -> Self {
        Report {
            command,
            columns,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render<W: Write>(&self, out: &OutputSpec, w: &mut W) -> std::io::Result<()> {
        match out.format {
            Format::Text => self.render_text(out, w),
            Format::Csv => self.render_csv(out, w),
            Format::Json => self.render_json(out, w),
        }
    }

    fn render_text<W: Write>(&self, out: &OutputSpec, w: &mut W) -> std::io::Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| format_cell(c, out.precision)).collect())
            .collect();
        if cells.len() == 1 {
            let width = self.columns.iter().map(|c| c.len()).max().unwrap_or(0);
            for (name, value) in self.columns.iter().zip(&cells[0]) {
                writeln!(w, "{name:<width$}  {value}")?;
            }
        } else {
            let widths: Vec<usize> = (0..self.columns.len())
                .map(|j| {
                    cells
                        .iter()
                        .map(|r| r[j].len())
                        .chain([self.columns[j].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |items: &[String]| {
                items
                    .iter()
                    .zip(&widths)
                    .map(|(s, &n)| format!("{s:>n$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(w, "{}", line(&self.columns))?;
            for r in &cells {
                writeln!(w, "{}", line(r))?;
            }
        }
        for note in &self.notes {
            writeln!(w, "note: {note}")?;
        }
        Ok(())
    }

    fn render_csv<W: Write>(&self, out: &OutputSpec, w: &mut W) -> std::io::Result<()> {
        let mut wr = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(w);
        wr.write_record(&self.columns)?;
        for r in &self.rows {
            wr.write_record(r.iter().map(|c| format_cell(c, out.precision)))?;
        }
        wr.flush()
    }

    fn render_json<W: Write>(&self, out: &OutputSpec, w: &mut W) -> std::io::Result<()> {
        #[derive(Serialize)]
        struct Doc<'a> {
            command: &'a str,
            unit: &'a str,
            precision: usize,
            columns: &'a [String],
            rows: Vec<Map<String, Value>>,
            notes: &'a [String],
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                self.columns
                    .iter()
                    .cloned()
                    .zip(r.iter().map(|c| json_cell(c, out.precision)))
                    .collect()
            })
            .collect();
        let doc = Doc {
            command: self.command,
            unit: out.unit.label(),
            precision: out.precision,
            columns: &self.columns,
            rows,
            notes: &self.notes,
        };
        serde_json::to_writer_pretty(&mut *w, &doc)?;
        writeln!(w)
    }
}

/// `x` to `digits` significant digits, positional for moderate exponents and
/// scientific otherwise, with trailing zeros dropped.
pub fn format_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn format_cell(c: &Cell, precision: usize) -> String {
    match c {
        Cell::Num(x) => format_sig(*x, precision),
        Cell::Fixed(x, d) => format!("{x:.d$}"),
        Cell::Int(i) => i.to_string(),
        Cell::Text(s) => s.clone(),
    }
}

fn json_cell(c: &Cell, precision: usize) -> Value {
    match c {
        Cell::Int(i) => Value::from(*i),
        Cell::Text(s) => Value::from(s.as_str()),
        Cell::Num(_) | Cell::Fixed(..) => {
            // the printed digits, so JSON and CSV agree exactly
            let printed: f64 = format_cell(c, precision).parse().unwrap_or(f64::NAN);
            Number::from_f64(printed).map_or(Value::Null, Value::Number)
        }
    }
}
