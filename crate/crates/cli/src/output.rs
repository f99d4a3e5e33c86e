use std::collections::BTreeMap;

use serde_json::Value;

use crate::args::Format;
use crate::error::Result;
use crate::record::OutputRecord;

/// A CSV table: header row plus data rows, all ASCII.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields"))
    }
}

/// Everything a subcommand produced, in each output format.
#[derive(Clone, Debug)]
pub struct Output {
    pub record: OutputRecord,
    pub plain: String,
    pub table: Table,
    /// Process exit status: 0 success, 1 a check failed.
    pub status: u8,
}

impl Output {
    pub fn new(command: &str, inputs: BTreeMap<String, Value>, results: Value) -> Self {
        Self {
            record: OutputRecord::new(command, inputs, results),
            plain: String::new(),
            table: Table::default(),
            status: 0,
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Plain => self.plain.clone(),
            Format::Json => serde_json::to_string_pretty(&self.record)? + "\n",
            Format::Csv => self.table.to_csv()?,
        })
    }
}

/// Builds an `inputs` map from `(key, value)` pairs.
#[macro_export]
macro_rules! inputs {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut m = std::collections::BTreeMap::<String, serde_json::Value>::new();
        $(m.insert($k.to_string(), serde_json::json!($v));)*
        m
    }};
}
