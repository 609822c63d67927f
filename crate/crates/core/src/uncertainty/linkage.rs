use std::collections::BTreeSet;

use serde::Deserialize;

use crate::error::{bail, Result};
use crate::model::{entropy_bits, normalize_mass, Value};

/// A set partition of user ids, stored in canonical order.
pub type Partition = Vec<Vec<String>>;

/// Probability distribution over set partitions of the same users.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionDistribution {
    partitions: Vec<(Partition, f64)>,
}

fn canonical(blocks: Vec<Vec<String>>) -> Result<Partition> {
    let mut seen = BTreeSet::new();
    let mut out: Vec<Vec<String>> = Vec::with_capacity(blocks.len());
    for block in blocks {
        if block.is_empty() {
            bail!(Param, "partition contains an empty block");
        }
        let mut sorted = block;
        sorted.sort();
        for id in &sorted {
            if !seen.insert(id.clone()) {
                bail!(Param, "user {id} appears twice in a partition");
            }
        }
        out.push(sorted);
    }
    out.sort();
    Ok(out)
}

impl PartitionDistribution {
    pub fn new(entries: Vec<(Vec<Vec<String>>, f64)>) -> Result<Self> {
        if entries.is_empty() {
            bail!(Distribution, "partition distribution has no entries");
        }
        let mut probs = Vec::with_capacity(entries.len());
        let mut partitions = Vec::with_capacity(entries.len());
        let mut universe: Option<BTreeSet<String>> = None;
        for (blocks, p) in entries {
            let part = canonical(blocks)?;
            let users: BTreeSet<String> = part.iter().flatten().cloned().collect();
            match &universe {
                None => universe = Some(users),
                Some(u) if *u != users => bail!(Param, "partitions cover different user sets"),
                _ => {}
            }
            if partitions.contains(&part) {
                bail!(Param, "duplicate partition {part:?}");
            }
            partitions.push(part);
            probs.push(p);
        }
        let probs = normalize_mass(&probs, "partition distribution")?;
        Ok(Self {
            partitions: partitions.into_iter().zip(probs).collect(),
        })
    }

    pub fn partitions(&self) -> &[(Partition, f64)] {
        &self.partitions
    }

    pub fn entropy(&self) -> f64 {
        let probs: Vec<f64> = self.partitions.iter().map(|(_, p)| *p).collect();
        entropy_bits(&probs)
    }
}

#[derive(Deserialize)]
struct RawEntry {
    blocks: Vec<Vec<String>>,
    p: f64,
}

#[derive(Deserialize)]
struct RawPartitions {
    partitions: Vec<RawEntry>,
}

/// Parses `{"partitions":[{"blocks":[["u1","u2"],["u3"]],"p":0.5}...]}`.
pub fn parse_partitions(text: &str) -> Result<PartitionDistribution> {
    let raw: RawPartitions = serde_json::from_str(text)?;
    PartitionDistribution::new(
        raw.partitions
            .into_iter()
            .map(|e| (e.blocks, e.p))
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unlinkability {
    pub h_bits: f64,
    pub ratio: Option<f64>,
}

impl Unlinkability {
    pub fn to_value(&self) -> Value {
        let mut fields = vec![("h_bits".to_string(), Value::Real(self.h_bits))];
        if let Some(r) = self.ratio {
            fields.push(("ratio".to_string(), Value::Real(r)));
        }
        Value::Record(fields)
    }
}

/// Entropy over partitions, and its ratio to the prior's entropy when given.
pub fn unlinkability_degree(
    posterior: &PartitionDistribution,
    prior: Option<&PartitionDistribution>,
) -> Result<Unlinkability> {
    let h_bits = posterior.entropy();
    let ratio = match prior {
        None => None,
        Some(prior) => {
            let h0 = prior.entropy();
            if h0 <= 0.0 {
                bail!(Param, "prior partition entropy is zero");
            }
            Some(h_bits / h0)
        }
    };
    Ok(Unlinkability { h_bits, ratio })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Every set partition of `ids`, by recursive placement. Only sane for small n.
    pub(crate) fn all_partitions(ids: &[&str]) -> Vec<Vec<Vec<String>>> {
        assert!(ids.len() <= 10);
        fn go(ids: &[&str], acc: &mut Vec<Vec<String>>, out: &mut Vec<Vec<Vec<String>>>) {
            let Some((first, rest)) = ids.split_first() else {
                out.push(acc.clone());
                return;
            };
            for i in 0..acc.len() {
                acc[i].push(first.to_string());
                go(rest, acc, out);
                acc[i].pop();
            }
            acc.push(vec![first.to_string()]);
            go(rest, acc, out);
            acc.pop();
        }
        let mut out = Vec::new();
        go(ids, &mut Vec::new(), &mut out);
        out
    }

    fn blocks(b: &[&[&str]]) -> Vec<Vec<String>> {
        b.iter()
            .map(|blk| blk.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn bell_numbers() {
        let ids = ["a", "b", "c", "d", "e"];
        let counts: Vec<usize> = (1..=5).map(|n| all_partitions(&ids[..n]).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52]);
    }

    #[test]
    fn examples() {
        let single = PartitionDistribution::new(vec![(blocks(&[&["1", "2"]]), 1.0)]).unwrap();
        assert_eq!(unlinkability_degree(&single, None).unwrap().h_bits, 0.0);

        let two = PartitionDistribution::new(vec![
            (blocks(&[&["1", "2"]]), 0.5),
            (blocks(&[&["1"], &["2"]]), 0.5),
        ])
        .unwrap();
        let u = unlinkability_degree(&two, Some(&two)).unwrap();
        assert!((u.h_bits - 1.0).abs() < 1e-12);
        assert_eq!(u.ratio, Some(1.0));

        assert_eq!(
            unlinkability_degree(&two, Some(&single))
                .unwrap_err()
                .code(),
            "E_PARAM"
        );
    }

    #[test]
    fn uniform_over_all_partitions() {
        let parts = all_partitions(&["a", "b", "c", "d"]);
        let n = parts.len();
        let d =
            PartitionDistribution::new(parts.into_iter().map(|p| (p, 1.0 / n as f64)).collect())
                .unwrap();
        assert!((d.entropy() - (15f64).log2()).abs() < 1e-12);
    }

    #[test]
    fn canonical_order_detects_duplicates() {
        let err = PartitionDistribution::new(vec![
            (blocks(&[&["2", "1"], &["3"]]), 0.5),
            (blocks(&[&["3"], &["1", "2"]]), 0.5),
        ])
        .unwrap_err();
        assert_eq!(err.code(), "E_PARAM");
        let err = PartitionDistribution::new(vec![
            (blocks(&[&["1", "2"]]), 0.5),
            (blocks(&[&["1"], &["3"]]), 0.5),
        ])
        .unwrap_err();
        assert_eq!(err.code(), "E_PARAM");
    }

    #[test]
    fn parses_file_shape() {
        let d = parse_partitions(r#"{"partitions":[{"blocks":[["u1","u2"]],"p":0.25},{"blocks":[["u1"],["u2"]],"p":0.75}]}"#).unwrap();
        assert_eq!(d.partitions().len(), 2);
        assert!(parse_partitions(r#"{"partitions":[{"blocks":[["u1"]],"p":0.4}]}"#).is_err());
    }
}
