//! Command-line front end: `list`, `describe`, `compute`, `advise`, `export`.

mod dispatch;
mod inputs;
mod views;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use dispatch::{compute, param_hint};
pub use inputs::{parse_param, sidecar_path, Inputs};

use crate::error::{bail, MetricError, Result};
use crate::registry::{self, AdvisorAnswers, Category, DataSource, InputKind, QUESTIONS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "privmetrics",
    version,
    about = "Compute privacy metrics and browse the metric catalog"
)]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized helpers; no metric is randomized.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalogued metrics.
    List {
        #[arg(long)]
        category: Option<String>,
        /// Only metrics that can be computed.
        #[arg(long)]
        implemented: bool,
    },
    /// Show one metric's descriptor.
    Describe { id: String },
    /// Compute a metric on input files.
    Compute {
        id: String,
        #[arg(long = "in")]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        schema: Option<PathBuf>,
        #[arg(long = "param", value_parser = param_arg)]
        params: Vec<(String, String)>,
    },
    /// Recommend metrics from answers to the selection questions.
    Advise {
        #[arg(long)]
        answers: Option<PathBuf>,
    },
    /// Dump the catalog as JSON.
    Export {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn param_arg(s: &str) -> std::result::Result<(String, String), String> {
    parse_param(s).map_err(|e| e.detail().to_string())
}

fn error_json(e: &MetricError) -> String {
    serde_json::json!({"error": e.code(), "detail": e.detail()}).to_string()
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split([',', ';']).map(str::trim).filter(|t| !t.is_empty())
}

fn yes(s: &str) -> bool {
    matches!(
        s.trim().to_ascii_lowercase().as_str(),
        "y" | "yes" | "true" | "1"
    )
}

/// Prompts for the eight answers, echoing each question to `prompt`.
///
/// Q1 takes category names and/or `guarantee`; Q2 yes/no; Q3 and Q4 comma
/// lists where a blank line leaves the filter off; Q5 to Q8 free text.
pub fn prompt_answers(input: &mut dyn BufRead, prompt: &mut dyn Write) -> Result<AdvisorAnswers> {
    let hints = [
        "categories, or 'guarantee'",
        "adversary model required? y/n",
        "data sources, blank for any",
        "available inputs, blank for any",
        "free text",
        "free text",
        "free text",
        "free text",
    ];
    let mut lines = Vec::with_capacity(8);
    for (i, (q, hint)) in QUESTIONS.iter().zip(hints).enumerate() {
        writeln!(prompt, "Q{}. {q}\n   [{hint}] > ", i + 1)?;
        prompt.flush()?;
        let mut line = String::new();
        input.read_line(&mut line)?;
        lines.push(line.trim().to_string());
    }
    let mut a = AdvisorAnswers::default();
    for tok in split_list(&lines[0]) {
        if tok.eq_ignore_ascii_case("guarantee") {
            a.q1_guarantee = true;
        } else {
            a.q1_categories.insert(tok.parse::<Category>()?);
        }
    }
    a.q2_adversary_required = yes(&lines[1]);
    if !lines[2].is_empty() {
        a.q3_sources = Some(
            split_list(&lines[2])
                .map(str::parse)
                .collect::<Result<BTreeSet<DataSource>>>()?,
        );
    }
    if !lines[3].is_empty() {
        a.q4_inputs_available = Some(
            split_list(&lines[3])
                .map(str::parse)
                .collect::<Result<BTreeSet<InputKind>>>()?,
        );
    }
    a.q5_audience = lines[4].clone();
    a.q6_related = lines[5].clone();
    a.q7_quality = lines[6].clone();
    a.q8_impl = lines[7].clone();
    Ok(a)
}

fn execute(
    inv: Invocation,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    let reg = registry::registry();
    let text = match inv.command {
        Command::List {
            category,
            implemented,
        } => {
            let cat = category.map(|c| c.parse::<Category>()).transpose()?;
            let rows: Vec<_> = reg
                .all()
                .filter(|d| cat.is_none_or(|c| d.category == c) && (!implemented || d.implemented))
                .collect();
            views::list(&rows, inv.format)
        }
        Command::Describe { id } => views::describe(reg.lookup(&id)?, inv.format),
        Command::Compute {
            id,
            inputs,
            schema,
            params,
        } => {
            let mut inp = Inputs {
                paths: inputs,
                schema,
                ..Default::default()
            };
            for (k, v) in params {
                if inp.params.insert(k.clone(), v).is_some() {
                    bail!(Param, "parameter {k} given twice");
                }
            }
            views::metric_value(&compute(&id, &inp)?, inv.format)
        }
        Command::Advise { answers } => {
            let a = match answers {
                Some(path) => {
                    let body = std::fs::read_to_string(&path)
                        .map_err(|e| MetricError::Io(format!("{}: {e}", path.display())))?;
                    serde_json::from_str(&body)?
                }
                None => prompt_answers(stdin, err)?,
            };
            views::recommendation(&registry::filter_metrics(reg, &a)?, inv.format)
        }
        Command::Export { out: Some(path) } => {
            std::fs::write(&path, reg.export_json() + "\n")
                .map_err(|e| MetricError::Io(format!("{}: {e}", path.display())))?;
            return Ok(());
        }
        Command::Export { out: None } => reg.export_json() + "\n",
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = match Invocation::try_parse_from(args) {
        Ok(inv) => inv,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let me = MetricError::Param(e.render().to_string().trim().to_string());
            let _ = writeln!(err, "{}", error_json(&me));
            return me.exit_code();
        }
    };
    match execute(inv, stdin, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", error_json(&e));
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("privmetrics").chain(args.iter().copied()),
            &mut input,
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn unknown_describe_exits_2() {
        let (code, _, err) = call(&["describe", "nosuch"], "");
        assert_eq!(code, 2);
        assert!(err.contains("\"E_UNKNOWN\""));
    }

    #[test]
    fn bad_flag_is_a_param_error() {
        let (code, _, err) = call(&["list", "--bogus"], "");
        assert_eq!(code, 2);
        assert!(err.contains("E_PARAM"));
    }

    #[test]
    fn interactive_advise_echoes_questions() {
        let (code, out, err) = call(
            &["advise", "--format", "json"],
            "guarantee\nn\n\n\nboard\n\n\n\n",
        );
        assert_eq!(code, 0, "{err}");
        for q in QUESTIONS {
            assert!(err.contains(q));
        }
        let r: registry::Recommendation = serde_json::from_str(&out).unwrap();
        assert!(r.metrics.contains(&"differential_privacy".to_string()));
        assert_eq!(r.notes, ["audience: board"]);
    }

    #[test]
    fn interactive_empty_q1_fails() {
        let (code, _, err) = call(&["advise"], "\n\n\n\n\n\n\n\n");
        assert_eq!(code, 2);
        assert!(err.contains("E_PARAM"));
    }
}
