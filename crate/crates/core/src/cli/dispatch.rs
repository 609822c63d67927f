use serde::Deserialize;
use serde_json::Value as Json;

use super::inputs::Inputs;
use crate::adversary as adv;
use crate::error::{bail, Result};
use crate::indist;
use crate::infogain as info;
use crate::model::{
    parse_distribution, parse_joint, parse_mechanism, parse_trace, DiscreteDistribution,
    FiniteMechanism, MetricValue, Region, Trace, TracePayload, Unit, Value,
};
use crate::registry;
use crate::tabular as tab;
use crate::uncertainty as unc;

#[derive(Deserialize)]
struct Members {
    members: Vec<Json>,
}

#[derive(Deserialize)]
struct Values {
    values: Vec<f64>,
}

#[derive(Deserialize)]
struct Xy {
    x: Vec<f64>,
    y: Vec<f64>,
}

#[derive(Deserialize)]
struct ProbsWeights {
    probs: Vec<f64>,
    weights: Vec<f64>,
}

#[derive(Deserialize)]
struct WeightsValues {
    weights: Vec<f64>,
    values: Vec<f64>,
}

#[derive(Deserialize)]
struct Regions {
    regions: Vec<DiscreteDistribution>,
    reference: DiscreteDistribution,
}

#[derive(Deserialize)]
struct Scores {
    sensitivities: Vec<f64>,
    visibilities: Vec<f64>,
}

#[derive(Deserialize)]
struct Features {
    protected: Vec<f64>,
    original: Vec<f64>,
}

#[derive(Deserialize)]
struct Clusters {
    original: Vec<Json>,
    protected: Vec<Json>,
}

#[derive(Deserialize)]
struct Points {
    points: Vec<Vec<f64>>,
    guess: Vec<f64>,
    target_index: usize,
}

#[derive(Deserialize)]
struct Histories {
    histories: Vec<tab::LocationHistory>,
    requests: Vec<(f64, String)>,
}

#[derive(Deserialize)]
struct Trials {
    trials: Vec<bool>,
}

#[derive(Deserialize)]
struct Matrix {
    matrix: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct Posteriors {
    posteriors: Vec<f64>,
}

#[derive(Deserialize)]
struct Similarities {
    similarities: Vec<f64>,
}

#[derive(Deserialize)]
struct Hypotheses {
    hypotheses: Vec<Vec<(f64, f64)>>,
}

#[derive(Deserialize)]
struct Paired {
    truths: Vec<Vec<f64>>,
    observations: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct RegionPair {
    r_u: Region,
    #[serde(default)]
    r_s: Option<Region>,
}

#[derive(Deserialize)]
struct SamplePair {
    f1: Vec<f64>,
    f2: Vec<f64>,
}

#[derive(Deserialize)]
struct Conditioned {
    channels: Vec<FiniteMechanism>,
    pz: Vec<f64>,
}

fn key(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn real(x: f64) -> Value {
    Value::Real(x)
}

fn count(n: usize) -> Value {
    Value::Count(n as u64)
}

fn numeric_trace(inp: &Inputs, i: usize) -> Result<Trace<f64>> {
    let t = inp.parsed(i, parse_trace)?;
    let samples = t
        .samples()
        .iter()
        .map(|(time, v)| match v {
            TracePayload::Number(x) => Ok((*time, *x)),
            TracePayload::Distribution(_) => bail!(Schema, "trace samples must be numbers here"),
        })
        .collect::<Result<Vec<_>>>()?;
    Trace::new(samples)
}

fn neighbors(inp: &Inputs, m: &FiniteMechanism) -> Result<indist::NeighborRelation> {
    match inp.optional(1, |text| indist::parse_neighbors(text, m))? {
        Some(nr) => Ok(nr),
        None => Ok(indist::NeighborRelation::complete(m)),
    }
}

/// A computed value with its unit and secondary outputs.
struct Out {
    value: Value,
    unit: Unit,
    details: Vec<(String, Value)>,
}

impl Out {
    fn new(value: Value, unit: Unit) -> Self {
        Out {
            value,
            unit,
            details: Vec::new(),
        }
    }

    fn with(mut self, name: &str, v: Value) -> Self {
        self.details.push((name.to_string(), v));
        self
    }

    fn with_opt(self, name: &str, v: Option<f64>) -> Self {
        match v {
            Some(x) => self.with(name, real(x)),
            None => self,
        }
    }
}

fn evaluate(id: &str, inp: &Inputs) -> Result<Out> {
    use Unit::*;
    let out = match id {
        // uncertainty
        "anonymity_set_size" => {
            let m: Members = inp.json(0)?;
            Out::new(
                count(unc::anonymity_set_size(m.members.iter().map(key))),
                Count,
            )
        }
        "asymmetric_entropy" => {
            let d = inp.parsed(0, parse_distribution)?;
            Out::new(
                real(unc::asymmetric_entropy(&d, &inp.list::<f64>("peaks")?)?),
                Dimensionless,
            )
        }
        "conditional_entropy" => {
            let j = inp.parsed(0, parse_joint)?;
            Out::new(real(unc::conditional_entropy(&j, false)?), Bits)
        }
        "normalized_conditional_entropy" => {
            let j = inp.parsed(0, parse_joint)?;
            Out::new(real(unc::conditional_entropy(&j, true)?), Ratio)
        }
        "conditional_privacy" => {
            let j = inp.parsed(0, parse_joint)?;
            Out::new(
                real(unc::inherent_privacy(unc::conditional_entropy(&j, false)?)?),
                Count,
            )
        }
        "cross_entropy" => {
            let p = inp.parsed(0, parse_distribution)?;
            let q = inp.parsed(1, parse_distribution)?;
            Out::new(real(unc::cross_entropy(&p, &q)?), Bits)
        }
        "cumulative_entropy" => {
            let v: Values = inp.json(0)?;
            Out::new(real(unc::cumulative_entropy(&v.values)?), Bits)
        }
        "unlinkability_degree" => {
            let post = inp.parsed(0, unc::parse_partitions)?;
            let prior = inp.optional(1, unc::parse_partitions)?;
            let u = unc::unlinkability_degree(&post, prior.as_ref())?;
            Out::new(real(u.h_bits), Bits).with_opt("ratio", u.ratio)
        }
        "shannon_entropy" => Out::new(
            real(unc::shannon_entropy(&inp.parsed(0, parse_distribution)?)),
            Bits,
        ),
        "bayes_entropy" => {
            let m = inp.parsed(0, unc::parse_tracking_model)?;
            Out::new(Value::Series(unc::bayes_entropy_series(&m)?), Bits)
        }
        "genomic_privacy" => {
            let g: ProbsWeights = inp.json(0)?;
            Out::new(real(unc::genomic_privacy(&g.probs, &g.weights)?), Bits)
        }
        "inherent_privacy" => {
            let d = inp.parsed(0, parse_distribution)?;
            Out::new(
                real(unc::inherent_privacy(unc::shannon_entropy(&d))?),
                Count,
            )
        }
        "max_entropy" => Out::new(
            real(unc::max_entropy(&inp.parsed(0, parse_distribution)?)),
            Bits,
        ),
        "min_entropy" => Out::new(
            real(unc::min_entropy(&inp.parsed(0, parse_distribution)?)),
            Bits,
        ),
        "normalized_entropy" => Out::new(
            real(unc::normalized_entropy(
                &inp.parsed(0, parse_distribution)?,
            )?),
            Ratio,
        ),
        "protection_level" => {
            let r: Regions = inp.json(0)?;
            let v = unc::protection_level(&r.regions, &r.reference, inp.get_or("t_common", 1)?)?;
            Out::new(real(v), Ratio)
        }
        "quantile_entropy" => {
            let d = inp.parsed(0, parse_distribution)?;
            Out::new(real(unc::quantile_entropy(&d, inp.get("c")?)?), Bits)
        }
        "renyi_entropy" => {
            let d = inp.parsed(0, parse_distribution)?;
            Out::new(real(unc::renyi_entropy(&d, inp.get("alpha")?)?), Bits)
        }
        "user_centric_privacy" => {
            let spec = unc::DecaySpec::new(inp.get("h0")?, inp.get("lambda")?, inp.get("t_last")?)?;
            Out::new(real(unc::user_centric_privacy(&spec, inp.get("t")?)?), Bits)
        }
        // information gain
        "leaked_count" => {
            let m: Members = inp.json(0)?;
            Out::new(count(info::leaked_count(m.members.iter().map(key))), Count)
        }
        "conditional_mutual_information" => {
            let t = inp.parsed(0, info::parse_triple)?;
            Out::new(real(info::conditional_mutual_information(&t)), Bits)
        }
        "conditional_privacy_loss" => {
            let mi = info::mutual_information(&inp.parsed(0, parse_joint)?);
            Out::new(real(mi.cpl), Probability).with("mi", real(mi.mi))
        }
        "belief_increase" => {
            let b = info::belief_increase_check(
                inp.get("prior")?,
                inp.get("posterior")?,
                inp.get("delta")?,
            )?;
            Out::new(Value::Bool(b.breached), Boolean).with("gap", real(b.gap))
        }
        "surprisal" => Out::new(real(info::surprisal(inp.get("p")?)?), Bits),
        "max_information_leakage" => Out::new(
            real(info::max_information_leakage(&inp.parsed(0, parse_joint)?)),
            Bits,
        ),
        "mutual_information" => {
            let mi = info::mutual_information(&inp.parsed(0, parse_joint)?);
            Out::new(real(mi.mi), Bits)
                .with_opt("nmi", mi.nmi)
                .with("cpl", real(mi.cpl))
        }
        "normalized_mutual_information" => Out::new(
            real(info::normalized_mutual_information(
                &inp.parsed(0, parse_joint)?,
            )?),
            Ratio,
        ),
        "pearson_correlation" => {
            let xy: Xy = inp.json(0)?;
            let p = info::pearson_abs(&xy.x, &xy.y)?;
            Out::new(real(p.abs), Dimensionless).with("signed", real(p.signed))
        }
        "privacy_score" => {
            let s: Scores = inp.json(0)?;
            Out::new(
                real(info::privacy_score(&s.sensitivities, &s.visibilities)?),
                Dimensionless,
            )
        }
        "feature_reduction" => {
            let f: Features = inp.json(0)?;
            let window = inp.opt::<usize>("window")?;
            let protected = info::FeatureSeries::new(f.protected, window)?;
            let original = info::FeatureSeries::new(f.original, window)?;
            Out::new(
                real(info::feature_mass_reduction(&protected, &original)?),
                Ratio,
            )
        }
        "relative_entropy" => {
            let p = inp.parsed(0, parse_distribution)?;
            let q = inp.parsed(1, parse_distribution)?;
            Out::new(real(info::kl_divergence(&p, &q)?), Bits)
        }
        "loss_of_anonymity" => {
            let raw: Json = inp.json(0)?;
            let cap = if raw.get("channels").is_some() {
                let c: Conditioned = serde_json::from_value(raw)?;
                info::relative_channel_capacity(&info::ConditionedChannels::new(c.channels, c.pz)?)?
            } else {
                info::channel_capacity(&serde_json::from_value(raw)?)?
            };
            Out::new(real(cap.bits), Bits)
                .with("input", Value::Series(cap.input))
                .with("iterations", count(cap.iterations))
        }
        "system_anonymity_level" => {
            let a = inp.parsed(0, info::parse_adjacency)?;
            Out::new(real(info::system_anonymity_level(&a)?), Ratio)
        }
        // similarity
        "alpha_k_anonymity" => {
            let Some(value) = inp.raw("value") else {
                bail!(
                    Param,
                    "missing parameter value (the sensitive value to bound)"
                );
            };
            Out::new(
                tab::alpha_k_anonymity(&inp.table(0)?, value)?.to_value(),
                Dimensionless,
            )
        }
        "ct_isolation" => {
            let p: Points = inp.json(0)?;
            let iso = tab::ct_isolation(
                &p.points,
                &p.guess,
                p.target_index,
                inp.get("c")?,
                inp.opt("t")?,
            )?;
            let out = Out::new(count(iso.ball_count), Count).with("delta", real(iso.delta));
            match iso.isolated {
                Some(b) => out.with("isolated", Value::Bool(b)),
                None => out,
            }
        }
        "cluster_similarity" => {
            let c: Clusters = inp.json(0)?;
            let a: Vec<String> = c.original.iter().map(key).collect();
            let b: Vec<String> = c.protected.iter().map(key).collect();
            Out::new(real(tab::cluster_similarity(&a, &b)?), Ratio)
        }
        "r_squared" => {
            let v: Values = inp.json(0)?;
            Out::new(real(tab::r_squared_transitions(&v.values)?), Dimensionless)
        }
        "em_anonymity" => {
            let eps: f64 = inp.get("epsilon")?;
            let m = tab::em_anonymity(&inp.table(0)?, eps)?;
            Out::new(
                Value::Record(vec![("epsilon".into(), real(eps)), ("m".into(), real(m))]),
                Dimensionless,
            )
        }
        "haplotype_snp_test" => {
            let mode = match inp.raw("mode").unwrap_or("aggregate") {
                "aggregate" => tab::HaplotypeMode::Aggregate,
                "statistics" => tab::HaplotypeMode::Statistics,
                other => bail!(Param, "mode must be aggregate or statistics, got {other:?}"),
            };
            let safe = tab::haplotype_safety(
                inp.get("n")?,
                inp.get("l")?,
                inp.get("alpha")?,
                mode,
                inp.get_or("base", 2.0)?,
            )?;
            Out::new(Value::Bool(safe), Boolean)
        }
        "historical_k_anonymity" => {
            let h: Histories = inp.json(0)?;
            Out::new(count(tab::historical_k(&h.histories, &h.requests)?), Count)
        }
        "k_anonymity" => Out::new(count(tab::k_anonymity(&inp.table(0)?)?), Count),
        "ke_anonymity" => {
            let ke = tab::ke_anonymity(&inp.table(0)?)?;
            Out::new(count(ke.k), Count).with("e", real(ke.e))
        }
        "l_diversity" => {
            let mode = match inp.raw("mode").unwrap_or("entropy") {
                "entropy" => tab::DiversityMode::Entropy,
                "recursive" => tab::DiversityMode::Recursive { c: inp.get("c")? },
                other => bail!(Param, "mode must be entropy or recursive, got {other:?}"),
            };
            Out::new(real(tab::l_diversity(&inp.table(0)?, mode)?), Count)
        }
        "m_invariance" => {
            let tables = inp.tables_from(0)?;
            if tables.is_empty() {
                bail!(Param, "expected one --in table per release");
            }
            let releases = tables
                .into_iter()
                .map(|t| {
                    let ids = t.indices_with_role(crate::model::ColumnRole::Identifier);
                    let Some(&c) = ids.first() else {
                        bail!(
                            Schema,
                            "each release needs an identifier column naming the row owner"
                        );
                    };
                    let owners = (0..t.n_rows())
                        .map(|r| t.cell(r, c).raw().to_string())
                        .collect();
                    tab::Release::new(t, owners)
                })
                .collect::<Result<Vec<_>>>()?;
            let m = tab::m_invariance(&releases)?;
            Out::new(count(m.m), Count).with("holds", Value::Bool(m.holds))
        }
        "multirelational_k_anonymity" => {
            let persons = inp.table(0)?;
            let relations = inp.tables_from(1)?;
            let mk = tab::multirelational_k(&persons, &relations, &inp.list::<String>("keys")?)?;
            Out::new(count(mk.k), Count)
                .with("min_owner_rows", count(mk.min_owner_rows))
                .with("row_conjunct_holds", Value::Bool(mk.row_conjunct_holds))
        }
        "t_closeness" => Out::new(real(tab::t_closeness(&inp.table(0)?)?), Dimensionless),
        "normalized_variance" => {
            let xy: Xy = inp.json(0)?;
            Out::new(real(tab::normalized_variance(&xy.x, &xy.y)?), Ratio)
        }
        "xy_privacy" => {
            let t = inp.table(0)?;
            let v = tab::xy_privacy(&t, &inp.list::<String>("x")?, &inp.list::<String>("y")?)?;
            Out::new(real(v), Probability)
        }
        // time
        "max_tracking_time" => Out::new(
            real(adv::max_tracking_time(
                &numeric_trace(inp, 0)?,
                inp.opt("end")?,
            )?),
            Seconds,
        ),
        "mean_time_to_confusion" => {
            let c = adv::time_to_confusion(
                &numeric_trace(inp, 0)?,
                inp.get("delta")?,
                inp.opt("end")?,
            )?;
            Out::new(real(c.mean_run), Seconds).with("cumulative", real(c.cumulative))
        }
        "time_until_success" => {
            let rounds =
                adv::batch_mix_rounds(inp.get("m")?, inp.get("l")?, inp.get("n")?, inp.get("b")?)?;
            Out::new(real(rounds), Count)
        }
        // indistinguishability
        "approximate_dp" => {
            let m = inp.parsed(0, parse_mechanism)?;
            let eps: f64 = inp.get("epsilon")?;
            let delta = indist::adp_delta(&m, &neighbors(inp, &m)?, eps)?;
            Out::new(
                Value::Record(vec![
                    ("epsilon".into(), real(eps)),
                    ("delta".into(), real(delta)),
                ]),
                Dimensionless,
            )
        }
        "cryptographic_game" => {
            let g = inp.parsed(0, indist::parse_transcript)?;
            let a = indist::game_advantage(&g, inp.get("epsilon")?)?;
            Out::new(Value::Bool(a.holds), Boolean)
                .with("advantage", real(a.advantage))
                .with("ci95", Value::Series(vec![a.ci95.0, a.ci95.1]))
        }
        "differential_privacy" => {
            let m = inp.parsed(0, parse_mechanism)?;
            Out::new(
                real(indist::dp_epsilon(&m, &neighbors(inp, &m)?).eps_eff),
                Dimensionless,
            )
        }
        "distributional_privacy" => {
            let ok = indist::distributional_privacy(
                inp.get("l1")?,
                inp.get("l2")?,
                inp.get_or("prior_ratio", 1.0)?,
                inp.get("epsilon")?,
            )?;
            Out::new(Value::Bool(ok), Boolean)
        }
        "geo_indistinguishability" => {
            let g = inp.parsed(0, indist::parse_geo)?;
            Out::new(
                real(indist::geo_indistinguishability(&g).eps_eff),
                Dimensionless,
            )
        }
        "information_privacy" => {
            let p = indist::information_privacy(&inp.parsed(0, parse_joint)?, inp.get("epsilon")?)?;
            Out::new(Value::Bool(p.holds), Boolean).with("eps_min", real(p.eps_min))
        }
        "unconditional_privacy" => {
            let a = indist::unconditional_privacy(&inp.parsed(0, indist::parse_transcript)?)?;
            Out::new(Value::Bool(a.holds), Boolean)
                .with("advantage", real(a.advantage))
                .with("ci95", Value::Series(vec![a.ci95.0, a.ci95.1]))
        }
        // success
        "success_rate" => {
            let t: Trials = inp.json(0)?;
            Out::new(real(adv::success_rate(&t.trials)?), Probability)
        }
        "dg_privacy" => {
            let ok = adv::dg_privacy_check(
                inp.get("prior")?,
                inp.get("posterior")?,
                inp.get("d")?,
                inp.get("gamma")?,
            )?;
            Out::new(Value::Bool(ok), Boolean)
        }
        "degrees_of_anonymity" => {
            let d = inp.parsed(0, parse_distribution)?;
            let Some(target) = inp.raw("target") else {
                bail!(Param, "missing parameter target");
            };
            let deg = adv::degrees_of_anonymity(&d, target, inp.get("theta")?, inp.opt("alpha")?)?;
            let p = d.prob_of(target).unwrap_or_default();
            Out::new(deg.to_value(), Enum).with("probability", real(p))
        }
        "delta_presence" => {
            let p = adv::delta_presence(&inp.table(0)?, &inp.table(1)?)?;
            Out::new(real(p.delta_max), Probability).with("delta_min", real(p.delta_min))
        }
        "hiding_property" => {
            let m: Matrix = inp.json(0)?;
            let h = adv::hiding_property(&m.matrix, inp.get("theta")?)?;
            Out::new(real(h.max_p), Probability).with("hidden", Value::Bool(h.hidden))
        }
        "privacy_breach_level" => {
            let p: Posteriors = inp.json(0)?;
            let b = adv::privacy_breach_check(&p.posteriors, inp.get("rho")?)?;
            Out::new(real(b.max_post), Probability).with("breached", Value::Bool(b.breached))
        }
        "path_compromise" => {
            let p = adv::path_compromise_probability(
                inp.get("compromised")?,
                inp.get("relays")?,
                inp.get("length")?,
            )?;
            Out::new(real(p), Probability)
        }
        "expected_estimation_error" => {
            let e = inp.parsed(0, adv::parse_estimate)?;
            Out::new(real(adv::expected_estimation_error(&e)), Dimensionless)
        }
        "record_linkage_success" => {
            let s: Similarities = inp.json(0)?;
            let ok =
                adv::record_linkage_check(&s.similarities, inp.get("theta")?, inp.get("omega")?)?;
            Out::new(Value::Bool(ok), Boolean)
        }
        // error
        "distance_error_expectation" => {
            let h: Hypotheses = inp.json(0)?;
            let v = adv::distance_error_expectation(
                &h.hypotheses,
                inp.get_or("n_users", 1)?,
                h.hypotheses.len(),
            )?;
            Out::new(real(v), Dimensionless)
        }
        "mean_squared_error" => {
            let p: Paired = inp.json(0)?;
            Out::new(
                real(adv::mean_squared_error(&p.truths, &p.observations)?),
                Dimensionless,
            )
        }
        "pct_incorrect" => Out::new(
            real(adv::pct_incorrect(
                inp.get("incorrect")?,
                inp.get("total")?,
            )?),
            Ratio,
        ),
        "health_privacy" => {
            let w: WeightsValues = inp.json(0)?;
            Out::new(
                real(adv::health_privacy(&w.weights, &w.values)?),
                Dimensionless,
            )
        }
        // accuracy
        "obfuscated_region_accuracy" => Out::new(
            real(adv::obfuscation_accuracy(
                inp.get("r_opt")?,
                inp.get("r_min")?,
            )?),
            Ratio,
        ),
        "confidence_interval_width" => {
            let c: f64 = inp.get("c")?;
            let raw: Json = inp.json(0)?;
            let w = if raw.get("values").is_some() {
                let v: Values = serde_json::from_value(raw)?;
                adv::confidence_interval_width_samples(&v.values, c)?
            } else {
                adv::confidence_interval_width(&serde_json::from_value(raw)?, c)?
            };
            Out::new(real(w), Dimensionless)
        }
        "sensitive_region_coverage" => {
            let r: RegionPair = inp.json(0)?;
            let Some(r_s) = r.r_s else {
                bail!(Schema, "coverage needs both r_u and r_s");
            };
            Out::new(real(adv::sensitive_region_coverage(&r.r_u, &r_s)?), Ratio)
        }
        "uncertainty_region_size" => {
            let r: RegionPair = inp.json(0)?;
            let rp =
                adv::region_privacy(&r.r_u, r.r_s.as_ref(), inp.opt("r_opt")?, inp.opt("r_min")?)?;
            Out::new(real(rp.size), Dimensionless)
                .with_opt("coverage", rp.coverage)
                .with_opt("accuracy", rp.accuracy)
        }
        "event_unobservability" => {
            let s: SamplePair = inp.json(0)?;
            let u = adv::event_unobservability(
                &s.f1,
                &s.f2,
                inp.get("p1")?,
                inp.get("p2")?,
                inp.get("alpha")?,
                inp.get("epsilon")?,
            )?;
            Out::new(real(u.d_area), Dimensionless).with("holds", Value::Bool(u.holds))
        }
        "tp_privacy_violation" => {
            let v = adv::tp_violation_check(inp.get("without")?, inp.get("with")?, inp.get("p")?)?;
            Out::new(Value::Bool(v), Boolean)
        }
        other => bail!(Unknown, "no computation registered for {other:?}"),
    };
    Ok(out)
}

/// Runs an implemented metric on CLI inputs and flags range violations.
pub fn compute(id: &str, inp: &Inputs) -> Result<MetricValue> {
    let d = registry::lookup(id)?;
    if !d.implemented {
        bail!(
            Param,
            "{id} is catalogued but not computable by this library"
        );
    }
    let out = evaluate(id, inp)?;
    let mut mv = MetricValue::new(id, out.value, out.unit);
    mv.out_of_range = !d.value_range.contains(&mv.value);
    mv.details = out.details;
    Ok(mv)
}

/// Parameters a metric reads, for help text.
pub fn param_hint(id: &str) -> Option<&'static str> {
    Some(match id {
        "asymmetric_entropy" => "peaks=w1,w2,...",
        "protection_level" => "t_common=N",
        "quantile_entropy" => "c=PERCENT",
        "renyi_entropy" => "alpha=A (0, 1, inf allowed)",
        "user_centric_privacy" => "h0=, lambda=, t_last=, t=",
        "belief_increase" => "prior=, posterior=, delta=",
        "surprisal" => "p=",
        "feature_reduction" => "window=N (optional)",
        "alpha_k_anonymity" => "value=SENSITIVE_VALUE",
        "ct_isolation" => "c=, t=N (optional)",
        "em_anonymity" => "epsilon=",
        "haplotype_snp_test" => "n=, l=, alpha=, mode=aggregate|statistics, base=2",
        "l_diversity" => "mode=entropy|recursive, c=",
        "multirelational_k_anonymity" => "keys=col1,col2",
        "xy_privacy" => "x=cols, y=cols",
        "max_tracking_time" => "end=T (optional)",
        "mean_time_to_confusion" => "delta=, end=T (optional)",
        "time_until_success" => "m=, l=, n=, b=",
        "approximate_dp" => "epsilon=",
        "cryptographic_game" => "epsilon=",
        "distributional_privacy" => "l1=, l2=, prior_ratio=1, epsilon=",
        "information_privacy" => "epsilon=",
        "dg_privacy" => "prior=, posterior=, d=, gamma=",
        "degrees_of_anonymity" => "target=LABEL, theta=, alpha=0.5",
        "hiding_property" => "theta=",
        "privacy_breach_level" => "rho=",
        "path_compromise" => "compromised=, relays=, length=",
        "record_linkage_success" => "theta=, omega=",
        "distance_error_expectation" => "n_users=1",
        "pct_incorrect" => "incorrect=, total=",
        "obfuscated_region_accuracy" => "r_opt=, r_min=",
        "confidence_interval_width" => "c=PERCENT",
        "uncertainty_region_size" => "r_opt=, r_min= (optional)",
        "event_unobservability" => "p1=, p2=, alpha=, epsilon=",
        "tp_privacy_violation" => "without=, with=, p=",
        _ => return None,
    })
}
