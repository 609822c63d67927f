use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::de::DeserializeOwned;

use crate::error::{bail, MetricError, Result};
use crate::model::{parse_table, DataTable, TableSchema};

/// Files and `key=value` parameters handed to `compute`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Inputs {
    pub paths: Vec<PathBuf>,
    pub schema: Option<PathBuf>,
    pub params: BTreeMap<String, String>,
}

/// Splits `key=value`.
pub fn parse_param(s: &str) -> Result<(String, String)> {
    match s.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
        _ => bail!(Param, "expected key=value, got {s:?}"),
    }
}

/// `<dir>/<stem>.roles.json` next to a CSV file.
pub fn sidecar_path(csv: &Path) -> PathBuf {
    let stem = csv
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    csv.with_file_name(format!("{stem}.roles.json"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| MetricError::Io(format!("{}: {e}", path.display())))
}

impl Inputs {
    pub fn path(&self, i: usize) -> Result<&Path> {
        match self.paths.get(i) {
            Some(p) => Ok(p),
            None => bail!(
                Param,
                "expected at least {} --in file(s), got {}",
                i + 1,
                self.paths.len()
            ),
        }
    }

    pub fn text(&self, i: usize) -> Result<String> {
        read(self.path(i)?)
    }

    pub fn json<T: DeserializeOwned>(&self, i: usize) -> Result<T> {
        let path = self.path(i)?;
        serde_json::from_str(&read(path)?)
            .map_err(|e| MetricError::Schema(format!("{}: {e}", path.display())))
    }

    /// Parses input `i` with one of the model parsers, prefixing errors with the path.
    pub fn parsed<T>(&self, i: usize, parse: impl Fn(&str) -> Result<T>) -> Result<T> {
        parse(&self.text(i)?)
    }

    pub fn optional<T>(&self, i: usize, parse: impl Fn(&str) -> Result<T>) -> Result<Option<T>> {
        if i < self.paths.len() {
            self.parsed(i, parse).map(Some)
        } else {
            Ok(None)
        }
    }

    /// CSV input `i` with its role sidecar: `--schema` for the first table,
    /// otherwise `<stem>.roles.json` beside the file.
    pub fn table(&self, i: usize) -> Result<DataTable> {
        let csv = self.path(i)?;
        let schema_path = match (&self.schema, i) {
            (Some(s), 0) => s.clone(),
            _ => sidecar_path(csv),
        };
        if !schema_path.exists() {
            bail!(
                Schema,
                "no role schema for {}: expected {}",
                csv.display(),
                schema_path.display()
            );
        }
        let schema = TableSchema::parse(&read(&schema_path)?)?;
        parse_table(&read(csv)?, &schema)
    }

    /// Every input from `from` onwards as a table.
    pub fn tables_from(&self, from: usize) -> Result<Vec<DataTable>> {
        (from..self.paths.len()).map(|i| self.table(i)).collect()
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    pub fn opt<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.raw(key) {
            None => Ok(None),
            Some(v) => match v.parse::<T>() {
                Ok(x) => Ok(Some(x)),
                Err(_) => bail!(Param, "parameter {key}={v:?} is not valid"),
            },
        }
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        match self.opt(key)? {
            Some(x) => Ok(x),
            None => bail!(Param, "missing parameter {key}"),
        }
    }

    pub fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T> {
        Ok(self.opt(key)?.unwrap_or(default))
    }

    /// Comma-separated list parameter.
    pub fn list<T: FromStr>(&self, key: &str) -> Result<Vec<T>> {
        let Some(v) = self.raw(key) else {
            bail!(Param, "missing parameter {key}");
        };
        v.split(',')
            .map(|s| match s.trim().parse::<T>() {
                Ok(x) => Ok(x),
                Err(_) => bail!(Param, "parameter {key} has invalid item {s:?}"),
            })
            .collect()
    }
}
