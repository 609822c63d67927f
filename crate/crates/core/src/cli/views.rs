use std::fmt::Write as _;

use super::Format;
use crate::model::MetricValue;
use crate::registry::{MetricDescriptor, Recommendation};

fn csv_line(fields: &[String]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(fields).expect("in-memory csv");
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn json_line<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub(super) fn list(rows: &[&MetricDescriptor], format: Format) -> String {
    match format {
        Format::Json => json_line(rows),
        Format::Csv => {
            let mut s = csv_line(
                &["id", "category", "direction", "range", "implemented"].map(String::from),
            );
            for d in rows {
                s += &csv_line(&[
                    d.id.clone(),
                    d.category.to_string(),
                    d.direction.to_string(),
                    d.value_range.to_string(),
                    d.implemented.to_string(),
                ]);
            }
            s
        }
        Format::Text => {
            let width = rows.iter().map(|d| d.id.len()).max().unwrap_or(2);
            let mut s = String::new();
            for d in rows {
                let mark = if d.implemented {
                    ""
                } else {
                    "  (not computable)"
                };
                let _ = writeln!(
                    s,
                    "{:width$}  {:22} {:14} {}{mark}",
                    d.id,
                    d.category.as_str(),
                    d.direction.to_string(),
                    d.value_range
                );
            }
            s
        }
    }
}

pub(super) fn describe(d: &MetricDescriptor, format: Format) -> String {
    match format {
        Format::Json => json_line(d),
        Format::Csv => {
            let header = [
                "id",
                "name",
                "category",
                "range",
                "direction",
                "sources",
                "inputs",
                "implemented",
                "op_ref",
            ];
            csv_line(&header.map(String::from))
                + &csv_line(&[
                    d.id.clone(),
                    d.name.clone(),
                    d.category.to_string(),
                    d.value_range.to_string(),
                    d.direction.to_string(),
                    d.sources_label(),
                    d.inputs_label(),
                    d.implemented.to_string(),
                    d.op_ref.clone().unwrap_or_default(),
                ])
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{} ({})", d.name, d.id);
            let _ = writeln!(s, "  category:     {}", d.category);
            let _ = writeln!(s, "  range:        {}", d.value_range);
            let _ = writeln!(s, "  private when: {}", d.direction);
            let _ = writeln!(s, "  sources:      {}", d.sources_label());
            let _ = writeln!(s, "  inputs:       {}", d.inputs_label());
            match &d.op_ref {
                Some(op) => {
                    let _ = writeln!(s, "  operation:    {op}");
                }
                None => {
                    let _ = writeln!(s, "  operation:    none (not computable)");
                }
            }
            if let Some(hint) = super::param_hint(&d.id) {
                let _ = writeln!(s, "  parameters:   {hint}");
            }
            for c in &d.caveats {
                let _ = writeln!(s, "  caveat: {c}");
            }
            s
        }
    }
}

pub(super) fn metric_value(v: &MetricValue, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&v.to_json()).expect("json") + "\n",
        Format::Csv => {
            let mut header = ["metric", "value", "unit", "out_of_range"]
                .map(String::from)
                .to_vec();
            let mut row = vec![
                v.metric_id.clone(),
                v.value.to_string(),
                v.unit.as_str().to_string(),
                v.out_of_range.to_string(),
            ];
            for (k, x) in &v.details {
                header.push(k.clone());
                row.push(x.to_string());
            }
            csv_line(&header) + &csv_line(&row)
        }
        Format::Text => {
            let mut s = format!("{} = {} {}\n", v.metric_id, v.value, v.unit.as_str());
            for (k, x) in &v.details {
                let _ = writeln!(s, "  {k} = {x}");
            }
            if v.out_of_range {
                s += "  warning: value lies outside the catalogued range\n";
            }
            s
        }
    }
}

pub(super) fn recommendation(r: &Recommendation, format: Format) -> String {
    match format {
        Format::Json => json_line(r),
        Format::Csv => {
            let mut s = csv_line(&["kind".into(), "text".into()]);
            for (kind, items) in [
                ("metric", &r.metrics),
                ("warning", &r.warnings),
                ("note", &r.notes),
            ] {
                for it in items {
                    s += &csv_line(&[kind.to_string(), it.clone()]);
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::from("Recommended metrics:\n");
            for m in &r.metrics {
                let _ = writeln!(s, "  {m}");
            }
            for w in &r.warnings {
                let _ = writeln!(s, "warning: {w}");
            }
            for n in &r.notes {
                let _ = writeln!(s, "note: {n}");
            }
            s
        }
    }
}
