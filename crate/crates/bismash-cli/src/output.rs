//! Row tables and their CSV / JSON encodings.

use std::fs::File;
use std::io::{BufWriter, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::{CliError, Common};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A cell: exact values travel as strings, small integers as numbers.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<Option<usize>> for Cell {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Cell::Empty, Cell::from)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

/// Fixed column set plus rows, in emission order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &'static [&'static str]) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

fn write_csv(table: &Table, sink: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(table.columns)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::csv))?;
    }
    w.flush()?;
    Ok(())
}

fn write_json(table: &Table, sink: &mut dyn Write) -> Result<(), CliError> {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> =
                table.columns.iter().zip(row).map(|(k, v)| (k.to_string(), v.json())).collect();
            Value::Object(obj)
        })
        .collect();
    serde_json::to_writer_pretty(&mut *sink, &rows)?;
    writeln!(sink)?;
    Ok(())
}

pub(crate) fn emit(table: &Table, common: &Common, out: &mut dyn Write) -> Result<(), CliError> {
    let mut file;
    let sink: &mut dyn Write = match &common.out {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => out,
    };
    match common.format {
        Format::Csv => write_csv(table, sink)?,
        Format::Json => write_json(table, sink)?,
    }
    sink.flush()?;
    Ok(())
}
