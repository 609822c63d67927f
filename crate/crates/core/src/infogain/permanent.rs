use std::collections::HashMap;

use serde::Deserialize;

use crate::error::{bail, Result};
use crate::model::entropy_bits;

pub const MAX_PERMANENT_N: usize = 20;
pub const MAX_ENUMERATION_N: usize = 12;

/// Square 0/1 sender-receiver feasibility matrix.
///
/// `classes`, when present, labels every perfect matching in the order
/// produced by [`perfect_matchings`].
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyMatrix {
    bits: Vec<Vec<u8>>,
    classes: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct RawAdjacency {
    n: usize,
    bits: Vec<Vec<u8>>,
    #[serde(default)]
    classes: Option<Vec<String>>,
}

impl AdjacencyMatrix {
    pub fn new(bits: Vec<Vec<u8>>, classes: Option<Vec<String>>) -> Result<Self> {
        let n = bits.len();
        if n == 0 {
            bail!(Shape, "adjacency matrix is empty");
        }
        if bits.iter().any(|r| r.len() != n) {
            bail!(Shape, "adjacency matrix must be square");
        }
        if bits.iter().flatten().any(|b| *b > 1) {
            bail!(Param, "adjacency entries must be 0 or 1");
        }
        Ok(Self { bits, classes })
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[Vec<u8>] {
        &self.bits
    }

    pub fn classes(&self) -> Option<&[String]> {
        self.classes.as_deref()
    }
}

/// Parses `{"n":int,"bits":[[0/1...]...],"classes":[label...]?}`.
pub fn parse_adjacency(text: &str) -> Result<AdjacencyMatrix> {
    let raw: RawAdjacency = serde_json::from_str(text)?;
    if raw.n != raw.bits.len() {
        bail!(
            Shape,
            "n={} but the matrix has {} rows",
            raw.n,
            raw.bits.len()
        );
    }
    AdjacencyMatrix::new(raw.bits, raw.classes)
}

/// Ryser's inclusion–exclusion formula over Gray-code column subsets.
pub fn matrix_permanent(a: &AdjacencyMatrix) -> Result<u64> {
    let n = a.n();
    if n > MAX_PERMANENT_N {
        bail!(
            Param,
            "permanent limited to n <= {MAX_PERMANENT_N}, got {n}"
        );
    }
    let mut row_sums = vec![0i64; n];
    let mut total: i128 = 0;
    let mut in_set = vec![false; n];
    for g in 1u64..(1u64 << n) {
        // Gray code step flips exactly one column in or out of the subset
        let col = g.trailing_zeros() as usize;
        let sign = if in_set[col] { -1 } else { 1 };
        in_set[col] = !in_set[col];
        for (s, row) in row_sums.iter_mut().zip(&a.bits) {
            *s += sign * row[col] as i64;
        }
        let size = (g ^ (g >> 1)).count_ones() as usize;
        let prod: i128 = row_sums.iter().map(|s| *s as i128).product();
        if (n - size).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(total as u64)
}

/// Perfect matchings as receiver-per-sender vectors, lexicographic order.
pub fn perfect_matchings(a: &AdjacencyMatrix) -> Result<Vec<Vec<usize>>> {
    let n = a.n();
    if n > MAX_ENUMERATION_N {
        bail!(
            Param,
            "matching enumeration limited to n <= {MAX_ENUMERATION_N}, got {n}"
        );
    }
    fn go(
        a: &[Vec<u8>],
        row: usize,
        used: &mut [bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == a.len() {
            out.push(cur.clone());
            return;
        }
        for col in 0..a.len() {
            if a[row][col] == 1 && !used[col] {
                used[col] = true;
                cur.push(col);
                go(a, row + 1, used, cur, out);
                cur.pop();
                used[col] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&a.bits, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    Ok(out)
}

fn log2_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).log2()).sum()
}

/// Entropy of matching-class frequencies normalized by `log2 n!`.
///
/// Without class labels every perfect matching is its own class.
pub fn system_anonymity_level(a: &AdjacencyMatrix) -> Result<f64> {
    let n = a.n();
    if n == 1 {
        return Ok(0.0);
    }
    let h = match a.classes() {
        None => {
            let per = matrix_permanent(a)?;
            if per == 0 {
                bail!(Domain, "adjacency matrix has no perfect matching");
            }
            (per as f64).log2()
        }
        Some(labels) => {
            let matchings = perfect_matchings(a)?;
            if matchings.is_empty() {
                bail!(Domain, "adjacency matrix has no perfect matching");
            }
            if labels.len() != matchings.len() {
                bail!(
                    Shape,
                    "{} class labels for {} perfect matchings",
                    labels.len(),
                    matchings.len()
                );
            }
            let mut counts: HashMap<&str, usize> = HashMap::new();
            for l in labels {
                *counts.entry(l.as_str()).or_default() += 1;
            }
            let per = matchings.len() as f64;
            let freqs: Vec<f64> = counts.values().map(|c| *c as f64 / per).collect();
            entropy_bits(&freqs)
        }
    };
    Ok((h / log2_factorial(n)).clamp(0.0, 1.0))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn brute_permanent(bits: &[Vec<u8>]) -> u64 {
        fn go(bits: &[Vec<u8>], row: usize, used: &mut Vec<bool>) -> u64 {
            if row == bits.len() {
                return 1;
            }
            let mut total = 0;
            for col in 0..bits.len() {
                if bits[row][col] == 1 && !used[col] {
                    used[col] = true;
                    total += go(bits, row + 1, used);
                    used[col] = false;
                }
            }
            total
        }
        go(bits, 0, &mut vec![false; bits.len()])
    }

    fn identity(n: usize) -> AdjacencyMatrix {
        AdjacencyMatrix::new(
            (0..n)
                .map(|i| (0..n).map(|j| (i == j) as u8).collect())
                .collect(),
            None,
        )
        .unwrap()
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(matrix_permanent(&identity(5)).unwrap(), 1);
        let ones = AdjacencyMatrix::new(vec![vec![1; 3]; 3], None).unwrap();
        assert_eq!(matrix_permanent(&ones).unwrap(), 6);
        let big = AdjacencyMatrix::new(vec![vec![1; 20]; 20], None).unwrap();
        assert_eq!(matrix_permanent(&big).unwrap(), 2_432_902_008_176_640_000);
        let too_big = AdjacencyMatrix::new(vec![vec![1; 21]; 21], None).unwrap();
        assert_eq!(matrix_permanent(&too_big).unwrap_err().code(), "E_PARAM");
    }

    #[test]
    fn permanent_matches_brute_force_on_fixed_6x6() {
        let bits = vec![
            vec![1, 0, 1, 1, 0, 0],
            vec![0, 1, 1, 0, 1, 0],
            vec![1, 1, 0, 0, 0, 1],
            vec![0, 0, 1, 1, 1, 0],
            vec![1, 0, 0, 1, 0, 1],
            vec![0, 1, 0, 0, 1, 1],
        ];
        let a = AdjacencyMatrix::new(bits.clone(), None).unwrap();
        assert_eq!(matrix_permanent(&a).unwrap(), brute_permanent(&bits));
        assert_eq!(
            perfect_matchings(&a).unwrap().len() as u64,
            brute_permanent(&bits)
        );
    }

    #[test]
    fn anonymity_level_examples() {
        assert_eq!(system_anonymity_level(&identity(1)).unwrap(), 0.0);
        let ones = AdjacencyMatrix::new(vec![vec![1; 2]; 2], None).unwrap();
        assert!((system_anonymity_level(&ones).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(system_anonymity_level(&identity(3)).unwrap(), 0.0);
        let none = AdjacencyMatrix::new(vec![vec![1, 1], vec![0, 0]], None).unwrap();
        assert_eq!(
            system_anonymity_level(&none).unwrap_err().code(),
            "E_DOMAIN"
        );
    }

    #[test]
    fn anonymity_level_with_classes() {
        // 6 matchings of K3,3 grouped as 3+3 gives H = 1 bit
        let labels = ["a", "a", "a", "b", "b", "b"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let a = AdjacencyMatrix::new(vec![vec![1; 3]; 3], Some(labels)).unwrap();
        let expected = 1.0 / (6f64).log2();
        assert!((system_anonymity_level(&a).unwrap() - expected).abs() < 1e-12);
        let short = AdjacencyMatrix::new(vec![vec![1; 3]; 3], Some(vec!["a".into()])).unwrap();
        assert_eq!(
            system_anonymity_level(&short).unwrap_err().code(),
            "E_SHAPE"
        );
    }

    #[test]
    fn matchings_in_lexicographic_order() {
        let a = AdjacencyMatrix::new(vec![vec![1; 3]; 3], None).unwrap();
        let m = perfect_matchings(&a).unwrap();
        assert_eq!(m[0], vec![0, 1, 2]);
        assert_eq!(m[5], vec![2, 1, 0]);
    }

    #[test]
    fn parses_file_shape() {
        let a = parse_adjacency(r#"{"n":2,"bits":[[1,1],[1,1]]}"#).unwrap();
        assert_eq!(a.n(), 2);
        assert_eq!(
            parse_adjacency(r#"{"n":3,"bits":[[1,1],[1,1]]}"#)
                .unwrap_err()
                .code(),
            "E_SHAPE"
        );
    }
}
