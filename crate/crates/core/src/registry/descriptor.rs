use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{bail, MetricError, Result};
use crate::model::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    Uncertainty,
    InformationGain,
    Similarity,
    Indistinguishability,
    Success,
    Error,
    Time,
    Accuracy,
}

impl Category {
    pub const ALL: [Category; 8] = [
        Category::Uncertainty,
        Category::InformationGain,
        Category::Similarity,
        Category::Indistinguishability,
        Category::Success,
        Category::Error,
        Category::Time,
        Category::Accuracy,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Category::Uncertainty => "uncertainty",
            Category::InformationGain => "information-gain",
            Category::Similarity => "similarity",
            Category::Indistinguishability => "indistinguishability",
            Category::Success => "success",
            Category::Error => "error",
            Category::Time => "time",
            Category::Accuracy => "accuracy",
        }
    }
}

impl FromStr for Category {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        match Category::ALL.iter().find(|c| c.as_str() == norm) {
            Some(c) => Ok(*c),
            None => bail!(Param, "unknown category {s:?}"),
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DataSource {
    Published,
    Observable,
    Repurposed,
    Other,
}

impl DataSource {
    pub const ALL: [DataSource; 4] = [
        DataSource::Published,
        DataSource::Observable,
        DataSource::Repurposed,
        DataSource::Other,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            DataSource::Published => "published",
            DataSource::Observable => "observable",
            DataSource::Repurposed => "repurposed",
            DataSource::Other => "other",
        }
    }

    /// Short form used in tabular listings.
    pub fn abbrev(&self) -> &'static str {
        match self {
            DataSource::Published => "pub",
            DataSource::Observable => "obs",
            DataSource::Repurposed => "rep",
            DataSource::Other => "oth",
        }
    }
}

impl FromStr for DataSource {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase();
        match DataSource::ALL
            .iter()
            .find(|d| d.as_str() == norm || d.abbrev() == norm)
        {
            Some(d) => Ok(*d),
            None => bail!(Param, "unknown data source {s:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InputKind {
    Estimate,
    Resources,
    Truth,
    Prior,
    Parameters,
}

impl InputKind {
    pub const ALL: [InputKind; 5] = [
        InputKind::Estimate,
        InputKind::Resources,
        InputKind::Truth,
        InputKind::Prior,
        InputKind::Parameters,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            InputKind::Estimate => "estimate",
            InputKind::Resources => "resources",
            InputKind::Truth => "truth",
            InputKind::Prior => "prior",
            InputKind::Parameters => "parameters",
        }
    }
}

impl FromStr for InputKind {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase();
        match InputKind::ALL.iter().find(|k| k.as_str() == norm) {
            Some(k) => Ok(*k),
            None => bail!(Param, "unknown input kind {s:?}"),
        }
    }
}

/// One end of a value range: a number, infinity, or a symbolic bound such
/// as `|D|` that depends on the input.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    Num(f64),
    Inf,
    Symbol(String),
}

impl Endpoint {
    fn render(&self) -> String {
        match self {
            Endpoint::Num(v) => format!("{v}"),
            Endpoint::Inf => "inf".into(),
            Endpoint::Symbol(s) => s.clone(),
        }
    }

    fn parse(s: &str) -> Endpoint {
        let s = s.trim();
        match s {
            "inf" | "∞" => Endpoint::Inf,
            _ => match s.parse::<f64>() {
                Ok(v) => Endpoint::Num(v),
                Err(_) => Endpoint::Symbol(s.to_string()),
            },
        }
    }

    fn numeric(&self) -> Option<f64> {
        match self {
            Endpoint::Num(v) => Some(*v),
            Endpoint::Inf => Some(f64::INFINITY),
            Endpoint::Symbol(_) => None,
        }
    }
}

impl Serialize for Endpoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Endpoint::Num(v) => s.serialize_f64(*v),
            other => s.serialize_str(&other.render()),
        }
    }
}

impl<'de> Deserialize<'de> for Endpoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => Ok(Endpoint::Num(n.as_f64().unwrap_or(f64::NAN))),
            serde_json::Value::String(s) => Ok(Endpoint::parse(&s)),
            other => Err(serde::de::Error::custom(format!(
                "bad range endpoint {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
    #[serde(default)]
    pub lo_open: bool,
    #[serde(default)]
    pub hi_open: bool,
}

impl Interval {
    pub fn closed(lo: Endpoint, hi: Endpoint) -> Self {
        Self {
            lo,
            hi,
            lo_open: false,
            hi_open: false,
        }
    }

    /// Whether `v` lies inside; symbolic ends do not constrain.
    pub fn contains(&self, v: f64) -> bool {
        let lo_ok = match self.lo.numeric() {
            Some(lo) if self.lo_open => v > lo,
            Some(lo) => v >= lo,
            None => true,
        };
        let hi_ok = match self.hi.numeric() {
            Some(hi) if self.hi_open && hi.is_finite() => v < hi,
            Some(hi) => v <= hi,
            None => true,
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_open { ']' } else { '[' },
            self.lo.render(),
            self.hi.render(),
            if self.hi_open { '[' } else { ']' }
        )
    }
}

impl FromStr for Interval {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (Some(first), Some(last)) = (s.chars().next(), s.chars().last()) else {
            bail!(Schema, "empty interval");
        };
        let lo_open = match first {
            '[' => false,
            ']' | '(' => true,
            _ => bail!(Schema, "interval {s:?} must start with [ or ]"),
        };
        let hi_open = match last {
            ']' => false,
            '[' | ')' => true,
            _ => bail!(Schema, "interval {s:?} must end with ] or ["),
        };
        let Some((lo, hi)) = s[1..s.len() - 1].split_once(',') else {
            bail!(Schema, "interval {s:?} lacks a comma");
        };
        Ok(Interval {
            lo: Endpoint::parse(lo),
            hi: Endpoint::parse(hi),
            lo_open,
            hi_open,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamRange {
    pub param: String,
    #[serde(flatten)]
    pub range: Interval,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ValueRange {
    Interval(Interval),
    Boolean,
    PerParameter { params: Vec<ParamRange> },
}

impl ValueRange {
    /// Out-of-range test for numeric values and for records carrying the
    /// per-parameter fields. Anything else is accepted.
    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (ValueRange::Interval(iv), v) => match v.as_real() {
                Some(x) if matches!(v, Value::Real(_) | Value::Count(_)) => iv.contains(x),
                _ => true,
            },
            (ValueRange::Boolean, _) => true,
            (ValueRange::PerParameter { params }, v) => {
                params.iter().all(|p| match v.field(&p.param) {
                    Some(f) => f.as_real().is_none_or(|x| p.range.contains(x)),
                    None => true,
                })
            }
        }
    }
}

impl fmt::Display for ValueRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueRange::Interval(iv) => write!(f, "{iv}"),
            ValueRange::Boolean => f.write_str("true,false"),
            ValueRange::PerParameter { params } => {
                let parts: Vec<String> = params
                    .iter()
                    .map(|p| format!("{}:{}", p.param, p.range))
                    .collect();
                f.write_str(&parts.join(";"))
            }
        }
    }
}

impl FromStr for ValueRange {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "true,false" {
            return Ok(ValueRange::Boolean);
        }
        if s.contains(';')
            || s.split_once(':')
                .is_some_and(|(k, _)| !k.contains('[') && !k.contains(']'))
        {
            let params = s
                .split(';')
                .map(|part| match part.split_once(':') {
                    Some((k, r)) => Ok(ParamRange {
                        param: k.trim().to_string(),
                        range: r.parse()?,
                    }),
                    None => bail!(Schema, "per-parameter range {part:?} lacks a name"),
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(ValueRange::PerParameter { params });
        }
        Ok(ValueRange::Interval(s.parse()?))
    }
}

/// Whether high or low values indicate high privacy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Polarity {
    #[serde(rename = "H")]
    High,
    #[serde(rename = "L")]
    Low,
}

impl Polarity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Polarity::High => "H",
            Polarity::Low => "L",
        }
    }
}

impl FromStr for Polarity {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "H" => Ok(Polarity::High),
            "L" => Ok(Polarity::Low),
            _ => bail!(Schema, "direction must be H or L, got {s:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Direction {
    Single(Polarity),
    PerParameter(Vec<(String, Polarity)>),
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Single(p) => f.write_str(p.as_str()),
            Direction::PerParameter(ps) => {
                let parts: Vec<String> = ps
                    .iter()
                    .map(|(k, p)| format!("{k}:{}", p.as_str()))
                    .collect();
                f.write_str(&parts.join(";"))
            }
        }
    }
}

impl FromStr for Direction {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self> {
        if !s.contains(':') {
            return Ok(Direction::Single(s.parse()?));
        }
        let parts = s
            .split(';')
            .map(|part| match part.split_once(':') {
                Some((k, p)) => Ok((k.trim().to_string(), p.parse()?)),
                None => bail!(Schema, "per-parameter direction {part:?} lacks a name"),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Direction::PerParameter(parts))
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse()
            .map_err(|e: MetricError| serde::de::Error::custom(e.to_string()))
    }
}

/// Catalog entry for one metric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricDescriptor {
    pub id: String,
    pub name: String,
    pub category: Category,
    pub value_range: ValueRange,
    pub direction: Direction,
    pub data_sources: BTreeSet<DataSource>,
    /// Inputs the metric cannot be computed without.
    pub inputs: BTreeSet<InputKind>,
    /// Inputs the metric can use but does not require.
    #[serde(default)]
    pub optional_inputs: BTreeSet<InputKind>,
    #[serde(default)]
    pub caveats: Vec<String>,
    pub implemented: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub op_ref: Option<String>,
}

impl MetricDescriptor {
    /// Required and optional inputs in the compact `estimate,prior?` form.
    pub fn inputs_label(&self) -> String {
        InputKind::ALL
            .iter()
            .filter_map(|k| {
                if self.inputs.contains(k) {
                    Some(k.as_str().to_string())
                } else if self.optional_inputs.contains(k) {
                    Some(format!("{}?", k.as_str()))
                } else {
                    None
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn sources_label(&self) -> String {
        self.data_sources
            .iter()
            .map(|d| d.abbrev())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_round_trip_through_text() {
        for s in [
            "[0,inf]",
            "]0,inf]",
            "[1,|D|]",
            "[0,H_0(X)]",
            "true,false",
            "k:[0,inf];alpha:[0,1]",
            "]0,1]",
        ] {
            let r: ValueRange = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!(matches!(
            "[0,1]".parse::<ValueRange>().unwrap(),
            ValueRange::Interval(_)
        ));
    }

    #[test]
    fn directions_round_trip() {
        for s in ["H", "L", "k:H;alpha:L"] {
            assert_eq!(s.parse::<Direction>().unwrap().to_string(), s);
        }
        assert_eq!("X".parse::<Direction>().unwrap_err().code(), "E_SCHEMA");
    }

    #[test]
    fn containment() {
        let r: ValueRange = "]0,1]".parse().unwrap();
        assert!(!r.contains(&Value::Real(0.0)));
        assert!(r.contains(&Value::Real(1.0)));
        assert!(!r.contains(&Value::Real(1.5)));
        let r: ValueRange = "[1,|D|]".parse().unwrap();
        assert!(r.contains(&Value::Count(1000)));
        assert!(!r.contains(&Value::Count(0)));
        let r: ValueRange = "k:[0,inf];alpha:[0,1]".parse().unwrap();
        let ok = Value::Record(vec![
            ("k".into(), Value::Count(2)),
            ("alpha".into(), Value::Real(0.5)),
        ]);
        let bad = Value::Record(vec![
            ("k".into(), Value::Count(2)),
            ("alpha".into(), Value::Real(1.5)),
        ]);
        assert!(r.contains(&ok));
        assert!(!r.contains(&bad));
    }

    #[test]
    fn json_shapes() {
        let r: ValueRange = "]0,inf]".parse().unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"kind":"interval","lo":0.0,"hi":"inf","lo_open":true,"hi_open":false})
        );
        let back: ValueRange = serde_json::from_value(j).unwrap();
        assert_eq!(back, r);
    }
}
