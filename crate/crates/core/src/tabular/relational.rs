use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{bail, Result};
use crate::model::{equivalence_classes, CellKey, ColumnRole, DataTable, Value};

/// One release of a table, with the owner of every row.
#[derive(Debug, Clone, PartialEq)]
pub struct Release {
    pub table: DataTable,
    pub owners: Vec<String>,
}

impl Release {
    pub fn new(table: DataTable, owners: Vec<String>) -> Result<Self> {
        if owners.len() != table.n_rows() {
            bail!(Shape, "{} owners for {} rows", owners.len(), table.n_rows());
        }
        Ok(Self { table, owners })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MInvariance {
    pub holds: bool,
    /// Smallest class size when the conditions hold, otherwise 0.
    pub m: usize,
}

impl MInvariance {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("holds".into(), Value::Bool(self.holds)),
            ("m".into(), Value::Count(self.m as u64)),
        ])
    }
}

/// Distinct sensitive values per class, and each owner's class signature
/// unchanged across the releases the owner appears in.
pub fn m_invariance(releases: &[Release]) -> Result<MInvariance> {
    if releases.is_empty() {
        bail!(Empty, "no releases");
    }
    let mut min_size = usize::MAX;
    let mut distinct = true;
    let mut signatures: HashMap<&str, BTreeSet<CellKey>> = HashMap::new();
    let mut consistent = true;
    for rel in releases {
        let t = &rel.table;
        let s = t.sensitive_column()?;
        for class in equivalence_classes(t)? {
            min_size = min_size.min(class.len());
            let sig: BTreeSet<CellKey> = class
                .row_indices
                .iter()
                .map(|&r| t.cell(r, s).key())
                .collect();
            if sig.len() != class.len() {
                distinct = false;
            }
            for &r in &class.row_indices {
                match signatures.get(rel.owners[r].as_str()) {
                    Some(prev) if *prev != sig => consistent = false,
                    Some(_) => {}
                    None => {
                        signatures.insert(rel.owners[r].as_str(), sig.clone());
                    }
                }
            }
        }
    }
    let holds = distinct && consistent;
    Ok(MInvariance {
        holds,
        m: if holds { min_size } else { 0 },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Multirelational {
    /// Smallest number of distinct owners sharing a quasi-identifier class.
    pub k: usize,
    /// Fewest joined rows belonging to any single owner.
    pub min_owner_rows: usize,
    /// Every owner contributes at least `k` joined rows.
    pub row_conjunct_holds: bool,
}

impl Multirelational {
    pub fn to_value(&self) -> Value {
        Value::Record(vec![
            ("k".into(), Value::Count(self.k as u64)),
            (
                "min_owner_rows".into(),
                Value::Count(self.min_owner_rows as u64),
            ),
            (
                "row_conjunct_holds".into(),
                Value::Bool(self.row_conjunct_holds),
            ),
        ])
    }
}

/// Inner-joins the persons table with every relation on `join_keys`, then
/// measures k-anonymity at the owner level.
///
/// Owners are identified by the persons table's identifier column, or by the
/// join key values when it has none. Quasi-identifiers are the union over
/// all joined tables.
pub fn multirelational_k(
    persons: &DataTable,
    relations: &[DataTable],
    join_keys: &[String],
) -> Result<Multirelational> {
    if join_keys.is_empty() {
        bail!(Schema, "no join keys given");
    }
    let key_cols = |t: &DataTable| -> Result<Vec<usize>> {
        join_keys.iter().map(|k| t.require_column(k)).collect()
    };
    let p_keys = key_cols(persons)?;
    let owner_cols = match persons.indices_with_role(ColumnRole::Identifier).as_slice() {
        [] => p_keys.clone(),
        ids => ids.to_vec(),
    };
    let p_qi: Vec<usize> = persons
        .indices_with_role(ColumnRole::QuasiIdentifier)
        .into_iter()
        .filter(|c| !p_keys.contains(c))
        .collect();

    // joined row: (owner, join key, qi values so far)
    let mut joined: Vec<(Vec<CellKey>, Vec<CellKey>, Vec<CellKey>)> = (0..persons.n_rows())
        .map(|r| {
            (
                persons.key(r, &owner_cols),
                persons.key(r, &p_keys),
                persons.key(r, &p_qi),
            )
        })
        .collect();
    let mut any_qi = !p_qi.is_empty()
        || p_keys
            .iter()
            .any(|&c| persons.columns()[c].role == ColumnRole::QuasiIdentifier);

    for rel in relations {
        let r_keys = key_cols(rel)?;
        let r_qi: Vec<usize> = rel
            .indices_with_role(ColumnRole::QuasiIdentifier)
            .into_iter()
            .filter(|c| !r_keys.contains(c))
            .collect();
        any_qi |= !r_qi.is_empty();
        let mut index: HashMap<Vec<CellKey>, Vec<usize>> = HashMap::new();
        for r in 0..rel.n_rows() {
            index.entry(rel.key(r, &r_keys)).or_default().push(r);
        }
        let mut next = Vec::new();
        for (owner, key, qi) in joined {
            if let Some(rows) = index.get(&key) {
                for &r in rows {
                    let mut q = qi.clone();
                    q.extend(rel.key(r, &r_qi));
                    next.push((owner.clone(), key.clone(), q));
                }
            }
        }
        joined = next;
    }
    if !any_qi {
        bail!(Schema, "no quasi-identifier columns in the joined tables");
    }
    if joined.is_empty() {
        bail!(Empty, "join produced no rows");
    }

    let key_is_qi: Vec<bool> = p_keys
        .iter()
        .map(|&c| persons.columns()[c].role == ColumnRole::QuasiIdentifier)
        .collect();
    let mut classes: HashMap<Vec<CellKey>, HashSet<Vec<CellKey>>> = HashMap::new();
    let mut owner_rows: HashMap<Vec<CellKey>, usize> = HashMap::new();
    for (owner, key, qi) in joined {
        let mut full: Vec<CellKey> = key
            .into_iter()
            .zip(&key_is_qi)
            .filter(|(_, q)| **q)
            .map(|(k, _)| k)
            .collect();
        full.extend(qi);
        *owner_rows.entry(owner.clone()).or_default() += 1;
        classes.entry(full).or_default().insert(owner);
    }
    let k = classes.values().map(|o| o.len()).min().unwrap_or(0);
    let min_owner_rows = owner_rows.values().copied().min().unwrap_or(0);
    Ok(Multirelational {
        k,
        min_owner_rows,
        row_conjunct_holds: min_owner_rows >= k,
    })
}

/// Largest confidence `|D[x,y]| / |D[x]|` over value combinations.
pub fn xy_privacy(t: &DataTable, x_cols: &[String], y_cols: &[String]) -> Result<f64> {
    if x_cols.is_empty() || y_cols.is_empty() {
        bail!(Schema, "both column groups must be non-empty");
    }
    if x_cols.iter().any(|c| y_cols.contains(c)) {
        bail!(Schema, "column groups must be disjoint");
    }
    let xs: Vec<usize> = x_cols
        .iter()
        .map(|c| t.require_column(c))
        .collect::<Result<_>>()?;
    let ys: Vec<usize> = y_cols
        .iter()
        .map(|c| t.require_column(c))
        .collect::<Result<_>>()?;
    let mut x_counts: HashMap<Vec<CellKey>, usize> = HashMap::new();
    let mut xy_counts: HashMap<(Vec<CellKey>, Vec<CellKey>), usize> = HashMap::new();
    for r in 0..t.n_rows() {
        let x = t.key(r, &xs);
        *xy_counts.entry((x.clone(), t.key(r, &ys))).or_default() += 1;
        *x_counts.entry(x).or_default() += 1;
    }
    Ok(xy_counts
        .iter()
        .map(|((x, _), n)| *n as f64 / x_counts[x] as f64)
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Column, ColumnKind};

    fn release(rows: &[(&str, &str, &str)]) -> Release {
        let t = DataTable::new(
            vec![
                Column::new("owner", ColumnKind::Categorical, ColumnRole::Identifier),
                Column::qi("q"),
                Column::sensitive("s", ColumnKind::Categorical),
            ],
            rows.iter()
                .map(|(o, q, s)| vec![o.to_string(), q.to_string(), s.to_string()])
                .collect(),
        )
        .unwrap();
        let owners = rows.iter().map(|(o, _, _)| o.to_string()).collect();
        Release::new(t, owners).unwrap()
    }

    #[test]
    fn m_invariance_examples() {
        let dup = release(&[("1", "a", "x"), ("2", "a", "x")]);
        assert_eq!(
            m_invariance(&[dup]).unwrap(),
            MInvariance { holds: false, m: 0 }
        );
        let ok = release(&[
            ("1", "a", "x"),
            ("2", "a", "y"),
            ("3", "b", "x"),
            ("4", "b", "y"),
        ]);
        assert_eq!(
            m_invariance(std::slice::from_ref(&ok)).unwrap(),
            MInvariance { holds: true, m: 2 }
        );
        let changed = release(&[
            ("1", "a", "x"),
            ("2", "a", "z"),
            ("3", "b", "x"),
            ("4", "b", "y"),
        ]);
        assert!(!m_invariance(&[ok.clone(), changed]).unwrap().holds);
        // a new owner joining an unchanged class keeps the invariant
        let grown = release(&[
            ("1", "a", "x"),
            ("5", "a", "y"),
            ("3", "b", "x"),
            ("4", "b", "y"),
        ]);
        assert!(m_invariance(&[ok, grown]).unwrap().holds);
        assert_eq!(m_invariance(&[]).unwrap_err().code(), "E_EMPTY");
    }

    fn persons(rows: &[(&str, &str)]) -> DataTable {
        DataTable::new(
            vec![
                Column::new("pid", ColumnKind::Categorical, ColumnRole::Identifier),
                Column::qi("zip"),
            ],
            rows.iter()
                .map(|(a, b)| vec![a.to_string(), b.to_string()])
                .collect(),
        )
        .unwrap()
    }

    fn visits(rows: &[(&str, &str)]) -> DataTable {
        DataTable::new(
            vec![
                Column::new("pid", ColumnKind::Categorical, ColumnRole::Plain),
                Column::qi("ward"),
            ],
            rows.iter()
                .map(|(a, b)| vec![a.to_string(), b.to_string()])
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn multirelational_examples() {
        let keys = vec!["pid".to_string()];
        let p = persons(&[("1", "a"), ("2", "b")]);
        let v = visits(&[("1", "w1"), ("2", "w2")]);
        assert_eq!(multirelational_k(&p, &[v], &keys).unwrap().k, 1);

        let p = persons(&[("1", "a"), ("2", "a")]);
        let v = visits(&[("1", "w1"), ("2", "w1"), ("1", "w2"), ("2", "w2")]);
        let m = multirelational_k(&p, &[v], &keys).unwrap();
        assert_eq!(m.k, 2);
        assert_eq!(m.min_owner_rows, 2);
        assert!(m.row_conjunct_holds);

        // owner 3 has no visits and drops out of the inner join
        let p = persons(&[("1", "a"), ("2", "a"), ("3", "a")]);
        let v = visits(&[("1", "w1"), ("2", "w1")]);
        assert_eq!(multirelational_k(&p, &[v], &keys).unwrap().k, 2);

        let v = visits(&[("9", "w1")]);
        assert_eq!(
            multirelational_k(&p, &[v], &keys).unwrap_err().code(),
            "E_EMPTY"
        );
        assert_eq!(
            multirelational_k(&p, &[], &["nosuch".to_string()])
                .unwrap_err()
                .code(),
            "E_SCHEMA"
        );
    }

    fn xy_table(rows: &[(&str, &str)]) -> DataTable {
        DataTable::new(
            vec![
                Column::qi("x"),
                Column::sensitive("y", ColumnKind::Categorical),
            ],
            rows.iter()
                .map(|(a, b)| vec![a.to_string(), b.to_string()])
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn xy_examples() {
        let x = vec!["x".to_string()];
        let y = vec!["y".to_string()];
        assert_eq!(
            xy_privacy(&xy_table(&[("a", "1"), ("b", "2")]), &x, &y).unwrap(),
            1.0
        );
        let t = xy_table(&[("a", "0"), ("a", "1"), ("b", "0"), ("b", "1")]);
        assert_eq!(xy_privacy(&t, &x, &y).unwrap(), 0.5);
        let t = xy_table(&[("a", "0"), ("a", "0"), ("a", "0"), ("a", "1")]);
        assert_eq!(xy_privacy(&t, &x, &y).unwrap(), 0.75);
        assert_eq!(xy_privacy(&t, &x, &x).unwrap_err().code(), "E_SCHEMA");
    }
}
