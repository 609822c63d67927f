use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{bail, MetricError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColumnRole {
    Identifier,
    #[serde(alias = "quasi_identifier", alias = "qi")]
    QuasiIdentifier,
    Sensitive,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ColumnKind {
    #[default]
    Categorical,
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub kind: ColumnKind,
    pub role: ColumnRole,
}

impl Column {
    pub fn new(name: impl Into<String>, kind: ColumnKind, role: ColumnRole) -> Self {
        Self {
            name: name.into(),
            kind,
            role,
        }
    }

    pub fn qi(name: impl Into<String>) -> Self {
        Self::new(name, ColumnKind::Categorical, ColumnRole::QuasiIdentifier)
    }

    pub fn sensitive(name: impl Into<String>, kind: ColumnKind) -> Self {
        Self::new(name, kind, ColumnRole::Sensitive)
    }
}

/// One table cell: the raw text plus its numeric value for numeric columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    raw: String,
    number: Option<f64>,
}

impl Cell {
    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn number(&self) -> Option<f64> {
        self.number
    }

    pub fn key(&self) -> CellKey {
        match self.number {
            // -0.0 and 0.0 group together
            Some(v) => CellKey::Num(if v == 0.0 { 0.0 } else { v }),
            None => CellKey::Text(self.raw.clone()),
        }
    }
}

/// Hashable, totally ordered grouping key for a cell value.
#[derive(Debug, Clone)]
pub enum CellKey {
    Num(f64),
    Text(String),
}

impl PartialEq for CellKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for CellKey {}

impl std::hash::Hash for CellKey {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            CellKey::Num(v) => {
                0u8.hash(state);
                v.to_bits().hash(state);
            }
            CellKey::Text(s) => {
                1u8.hash(state);
                s.hash(state);
            }
        }
    }
}

impl PartialOrd for CellKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CellKey {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (CellKey::Num(a), CellKey::Num(b)) => a.total_cmp(b),
            (CellKey::Text(a), CellKey::Text(b)) => a.cmp(b),
            (CellKey::Num(_), CellKey::Text(_)) => Ordering::Less,
            (CellKey::Text(_), CellKey::Num(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for CellKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellKey::Num(v) => write!(f, "{v}"),
            CellKey::Text(s) => f.write_str(s),
        }
    }
}

/// Role/kind sidecar for a CSV file: `{"roles":{col:role},"kinds":{col:kind}}`.
///
/// Columns without a role are `plain`; columns without a kind are categorical.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSchema {
    #[serde(default)]
    pub roles: BTreeMap<String, ColumnRole>,
    #[serde(default)]
    pub kinds: BTreeMap<String, ColumnKind>,
}

impl TableSchema {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Rows of typed columns, each column carrying a privacy role.
#[derive(Debug, Clone, PartialEq)]
pub struct DataTable {
    columns: Vec<Column>,
    rows: Vec<Vec<Cell>>,
}

fn parse_cell(raw: &str, column: &Column, row: usize) -> Result<Cell> {
    if raw.is_empty() {
        bail!(
            Shape,
            "row {row}: missing value in column {:?}",
            column.name
        );
    }
    let number = match column.kind {
        ColumnKind::Categorical => None,
        ColumnKind::Numeric => match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            _ => bail!(
                Schema,
                "row {row}: column {:?} is numeric but holds {raw:?}",
                column.name
            ),
        },
    };
    Ok(Cell {
        raw: raw.to_string(),
        number,
    })
}

impl DataTable {
    pub fn new(columns: Vec<Column>, rows: Vec<Vec<String>>) -> Result<Self> {
        if columns.is_empty() {
            bail!(Schema, "table has no columns");
        }
        super::distribution::check_distinct(
            &columns.iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
            "table columns",
        )?;
        if rows.is_empty() {
            bail!(Empty, "table has no rows");
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != columns.len() {
                    bail!(
                        Shape,
                        "row {i} has {} fields, expected {}",
                        row.len(),
                        columns.len()
                    );
                }
                row.iter()
                    .zip(&columns)
                    .map(|(raw, col)| parse_cell(raw, col, i))
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { columns, rows })
    }

    /// Builds a table from string literals; convenient in tests and examples.
    pub fn from_str_rows(columns: Vec<Column>, rows: &[&[&str]]) -> Result<Self> {
        Self::new(
            columns,
            rows.iter()
                .map(|r| r.iter().map(|s| s.to_string()).collect())
                .collect(),
        )
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cell(&self, row: usize, col: usize) -> &Cell {
        &self.rows[row][col]
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    pub fn require_column(&self, name: &str) -> Result<usize> {
        self.column_index(name)
            .ok_or_else(|| MetricError::Schema(format!("unknown column {name:?}")))
    }

    pub fn indices_with_role(&self, role: ColumnRole) -> Vec<usize> {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| c.role == role)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn quasi_identifiers(&self) -> Result<Vec<usize>> {
        let qi = self.indices_with_role(ColumnRole::QuasiIdentifier);
        if qi.is_empty() {
            bail!(Schema, "table has no quasi-identifier columns");
        }
        Ok(qi)
    }

    /// The single sensitive column.
    pub fn sensitive_column(&self) -> Result<usize> {
        match self.indices_with_role(ColumnRole::Sensitive).as_slice() {
            [one] => Ok(*one),
            [] => bail!(Schema, "table has no sensitive column"),
            many => bail!(
                Schema,
                "expected one sensitive column, found {}",
                many.len()
            ),
        }
    }

    pub fn key(&self, row: usize, cols: &[usize]) -> Vec<CellKey> {
        cols.iter().map(|&c| self.rows[row][c].key()).collect()
    }

    /// Interprets `raw` as a value of column `col` (numeric parse when needed).
    pub fn key_for_value(&self, col: usize, raw: &str) -> Result<CellKey> {
        Ok(parse_cell(raw, &self.columns[col], 0)?.key())
    }

    /// Numeric values of a column; fails for categorical columns.
    pub fn numeric_column(&self, col: usize) -> Result<Vec<f64>> {
        if self.columns[col].kind != ColumnKind::Numeric {
            bail!(Schema, "column {:?} is not numeric", self.columns[col].name);
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r[col].number.unwrap_or(f64::NAN))
            .collect())
    }

    /// Groups rows by their values in `cols`, in first-appearance order.
    pub fn group_by(&self, cols: &[usize]) -> Vec<EquivalenceClass> {
        let mut index: HashMap<Vec<CellKey>, usize> = HashMap::new();
        let mut classes: Vec<EquivalenceClass> = Vec::new();
        for r in 0..self.rows.len() {
            let key = self.key(r, cols);
            match index.get(&key) {
                Some(&i) => classes[i].row_indices.push(r),
                None => {
                    index.insert(key.clone(), classes.len());
                    classes.push(EquivalenceClass {
                        qi_key: key,
                        row_indices: vec![r],
                    });
                }
            }
        }
        classes
    }
}

/// Rows sharing a full quasi-identifier tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub qi_key: Vec<CellKey>,
    pub row_indices: Vec<usize>,
}

impl EquivalenceClass {
    pub fn len(&self) -> usize {
        self.row_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row_indices.is_empty()
    }
}

/// Partitions the table by its full quasi-identifier tuple.
pub fn equivalence_classes(table: &DataTable) -> Result<Vec<EquivalenceClass>> {
    let qi = table.quasi_identifiers()?;
    Ok(table.group_by(&qi))
}

/// Parses an RFC-4180 CSV with a header row, applying the role sidecar.
pub fn parse_table(csv_text: &str, schema: &TableSchema) -> Result<DataTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(csv_text.as_bytes());
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| MetricError::Schema(format!("csv header: {e}")))?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();
    for name in schema.roles.keys().chain(schema.kinds.keys()) {
        if !header.contains(name) {
            bail!(
                Schema,
                "schema names column {name:?} which is not in the CSV header"
            );
        }
    }
    let columns: Vec<Column> = header
        .iter()
        .map(|name| Column {
            name: name.clone(),
            kind: schema.kinds.get(name).copied().unwrap_or_default(),
            role: schema.roles.get(name).copied().unwrap_or(ColumnRole::Plain),
        })
        .collect();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| MetricError::Schema(format!("csv: {e}")))?;
        rows.push(record.iter().map(|s| s.to_string()).collect());
    }
    DataTable::new(columns, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CSV: &str =
        "zip,age,disease\n47677,29,flu\n47602,22,cancer\n47678,27,flu\n47905,43,gastritis\n";

    fn schema() -> TableSchema {
        TableSchema::parse(r#"{"roles":{"zip":"quasi-identifier","disease":"sensitive"},"kinds":{"age":"numeric"}}"#)
            .unwrap()
    }

    #[test]
    fn parses_four_rows() {
        let t = parse_table(CSV, &schema()).unwrap();
        assert_eq!(t.n_rows(), 4);
        assert_eq!(t.columns()[0].role, ColumnRole::QuasiIdentifier);
        assert_eq!(t.columns()[1].kind, ColumnKind::Numeric);
        assert_eq!(t.cell(1, 1).number(), Some(22.0));
        assert_eq!(t.sensitive_column().unwrap(), 2);
    }

    #[test]
    fn ragged_row_is_shape_error() {
        let err = parse_table("zip,age,disease\n1,2\n", &schema()).unwrap_err();
        assert_eq!(err.code(), "E_SHAPE");
        let err = parse_table("zip,age,disease\n1,,flu\n", &schema()).unwrap_err();
        assert_eq!(err.code(), "E_SHAPE");
    }

    #[test]
    fn non_numeric_value_is_schema_error() {
        let err = parse_table("zip,age,disease\n1,abc,flu\n", &schema()).unwrap_err();
        assert_eq!(err.code(), "E_SCHEMA");
    }

    #[test]
    fn role_for_unknown_column() {
        let s = TableSchema::parse(r#"{"roles":{"nosuch":"sensitive"}}"#).unwrap();
        assert_eq!(parse_table(CSV, &s).unwrap_err().code(), "E_SCHEMA");
    }

    #[test]
    fn quoted_fields() {
        let t = parse_table("zip,age,disease\n\"47,677\",29,\"flu, mild\"\n", &schema()).unwrap();
        assert_eq!(t.cell(0, 0).raw(), "47,677");
        assert_eq!(t.cell(0, 2).raw(), "flu, mild");
    }

    fn qi_table(values: &[&str]) -> DataTable {
        let rows: Vec<Vec<String>> = values.iter().map(|v| vec![v.to_string()]).collect();
        DataTable::new(vec![Column::qi("q")], rows).unwrap()
    }

    #[test]
    fn equivalence_class_examples() {
        let all_same = equivalence_classes(&qi_table(&["a", "a", "a", "a"])).unwrap();
        assert_eq!(all_same.len(), 1);
        assert_eq!(all_same[0].len(), 4);

        let distinct = equivalence_classes(&qi_table(&["a", "b", "c"])).unwrap();
        assert_eq!(
            distinct.iter().map(|c| c.len()).collect::<Vec<_>>(),
            vec![1, 1, 1]
        );

        let mixed = equivalence_classes(&qi_table(&["a", "a", "b"])).unwrap();
        let mut sizes: Vec<usize> = mixed.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn needs_quasi_identifier() {
        let t = DataTable::from_str_rows(
            vec![Column::sensitive("s", ColumnKind::Categorical)],
            &[&["x"]],
        )
        .unwrap();
        assert_eq!(equivalence_classes(&t).unwrap_err().code(), "E_SCHEMA");
    }

    #[test]
    fn numeric_keys_compare_by_value() {
        let t = DataTable::from_str_rows(
            vec![Column::new(
                "n",
                ColumnKind::Numeric,
                ColumnRole::QuasiIdentifier,
            )],
            &[&["1"], &["1.0"], &["2"]],
        )
        .unwrap();
        assert_eq!(equivalence_classes(&t).unwrap().len(), 2);
    }
}
