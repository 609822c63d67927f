use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Number};

use crate::error::{bail, Result};

/// Result payload of a metric evaluation.
///
/// Non-finite reals serialize as the strings `"inf"`, `"-inf"` and `"nan"`
/// because JSON has no literal for them.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Count(u64),
    Bool(bool),
    Enum(String),
    Series(Vec<f64>),
    Record(Vec<(String, Value)>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Bits,
    Probability,
    Count,
    Seconds,
    Ratio,
    Dimensionless,
    Boolean,
    Enum,
}

impl Unit {
    pub fn as_str(&self) -> &'static str {
        match self {
            Unit::Bits => "bits",
            Unit::Probability => "probability",
            Unit::Count => "count",
            Unit::Seconds => "seconds",
            Unit::Ratio => "ratio",
            Unit::Dimensionless => "dimensionless",
            Unit::Boolean => "boolean",
            Unit::Enum => "enum",
        }
    }
}

fn real_to_json(v: f64) -> serde_json::Value {
    // empty float sums come out as -0.0
    let v = if v == 0.0 { 0.0 } else { v };
    match Number::from_f64(v) {
        Some(n) => serde_json::Value::Number(n),
        None if v.is_nan() => json!("nan"),
        None if v > 0.0 => json!("inf"),
        None => json!("-inf"),
    }
}

fn real_from_json(v: &serde_json::Value) -> Option<f64> {
    match v {
        serde_json::Value::Number(n) => n.as_f64(),
        serde_json::Value::String(s) => match s.as_str() {
            "inf" => Some(f64::INFINITY),
            "-inf" => Some(f64::NEG_INFINITY),
            "nan" => Some(f64::NAN),
            _ => None,
        },
        _ => None,
    }
}

impl Value {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Real(v) => real_to_json(*v),
            Value::Count(c) => json!(c),
            Value::Bool(b) => json!(b),
            Value::Enum(s) => json!(s),
            Value::Series(xs) => {
                serde_json::Value::Array(xs.iter().map(|x| real_to_json(*x)).collect())
            }
            Value::Record(fields) => {
                let mut m = Map::new();
                for (k, v) in fields {
                    m.insert(k.clone(), v.to_json());
                }
                serde_json::Value::Object(m)
            }
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        Ok(match v {
            serde_json::Value::Bool(b) => Value::Bool(*b),
            serde_json::Value::Number(n) => match n.as_u64() {
                Some(c) if !n.to_string().contains('.') => Value::Count(c),
                _ => Value::Real(n.as_f64().unwrap_or(f64::NAN)),
            },
            serde_json::Value::String(s) => match real_from_json(v) {
                Some(x) => Value::Real(x),
                None => Value::Enum(s.clone()),
            },
            serde_json::Value::Array(xs) => Value::Series(
                xs.iter()
                    .map(|x| {
                        real_from_json(x).ok_or_else(|| {
                            crate::MetricError::Schema("series entry is not a number".into())
                        })
                    })
                    .collect::<Result<_>>()?,
            ),
            serde_json::Value::Object(m) => Value::Record(
                m.iter()
                    .map(|(k, v)| Ok((k.clone(), Value::from_json(v)?)))
                    .collect::<Result<_>>()?,
            ),
            serde_json::Value::Null => bail!(Schema, "metric value cannot be null"),
        })
    }

    pub fn as_real(&self) -> Option<f64> {
        match self {
            Value::Real(v) => Some(*v),
            Value::Count(c) => Some(*c as f64),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn field(&self, name: &str) -> Option<&Value> {
        match self {
            Value::Record(fields) => fields.iter().find(|(k, _)| k == name).map(|(_, v)| v),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Real(v) => write!(f, "{}", if *v == 0.0 { 0.0 } else { *v }),
            Value::Count(c) => write!(f, "{c}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Enum(s) => f.write_str(s),
            Value::Series(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Record(fields) => {
                let parts: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// A computed metric: registry key, value, unit and a range flag.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricValue {
    pub metric_id: String,
    pub value: Value,
    pub unit: Unit,
    /// Set when the value falls outside the registry's declared range.
    pub out_of_range: bool,
    /// Secondary outputs (e.g. the signed Pearson coefficient).
    pub details: Vec<(String, Value)>,
}

impl MetricValue {
    pub fn new(metric_id: impl Into<String>, value: Value, unit: Unit) -> Self {
        Self {
            metric_id: metric_id.into(),
            value,
            unit,
            out_of_range: false,
            details: Vec::new(),
        }
    }

    pub fn with_detail(mut self, name: &str, value: Value) -> Self {
        self.details.push((name.to_string(), value));
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = Map::new();
        m.insert("metric".into(), json!(self.metric_id));
        m.insert("value".into(), self.value.to_json());
        m.insert("unit".into(), json!(self.unit.as_str()));
        m.insert("out_of_range".into(), json!(self.out_of_range));
        if !self.details.is_empty() {
            m.insert(
                "details".into(),
                Value::Record(self.details.clone()).to_json(),
            );
        }
        serde_json::Value::Object(m)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = match v.as_object() {
            Some(o) => o,
            None => bail!(Schema, "metric value must be a JSON object"),
        };
        let metric_id = match obj.get("metric").and_then(|m| m.as_str()) {
            Some(s) => s.to_string(),
            None => bail!(Schema, "metric value lacks a \"metric\" string"),
        };
        let value = Value::from_json(obj.get("value").unwrap_or(&serde_json::Value::Null))?;
        let unit: Unit = serde_json::from_value(obj.get("unit").cloned().unwrap_or_default())?;
        let out_of_range = obj
            .get("out_of_range")
            .and_then(|b| b.as_bool())
            .unwrap_or(false);
        let details = match obj.get("details") {
            Some(d) => match Value::from_json(d)? {
                Value::Record(fields) => fields,
                _ => bail!(Schema, "\"details\" must be an object"),
            },
            None => Vec::new(),
        };
        Ok(Self {
            metric_id,
            value,
            unit,
            out_of_range,
            details,
        })
    }
}

impl Serialize for MetricValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MetricValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        MetricValue::from_json(&v).map_err(serde::de::Error::custom)
    }
}
