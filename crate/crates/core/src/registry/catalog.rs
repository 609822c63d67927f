use std::collections::BTreeSet;

use super::descriptor::{Category, DataSource, InputKind, MetricDescriptor};

/// Attached to every metric that measures properties of the data only.
pub const NO_ADVERSARY: &str =
    "No adversary model: the value depends on the data alone, so an adversary with \
     relevant prior knowledge may do better than the value suggests.";

const OUTLIERS: &str =
    "Outlier sensitive: many unlikely candidates can keep the value high while one \
     candidate stands out.";

struct Row {
    id: &'static str,
    name: &'static str,
    category: Category,
    range: &'static str,
    direction: &'static str,
    sources: &'static str,
    inputs: &'static str,
    op: Option<&'static str>,
    caveats: &'static [&'static str],
}

use Category::*;

const ROWS: &[Row] = &[
    // uncertainty
    Row {
        id: "anonymity_set_size",
        name: "Anonymity set size",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate",
        op: Some("uncertainty::anonymity_set_size"),
        caveats: &["Counts members without regard to how likely each one is."],
    },
    Row {
        id: "asymmetric_entropy",
        name: "Asymmetric entropy",
        category: Uncertainty,
        range: "[0,1]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,prior",
        op: Some("uncertainty::asymmetric_entropy"),
        caveats: &[
            "Peak positions encode prior expectations and must be chosen per outcome.",
            "Each summand lies in [0,1]; the sum over n outcomes can reach n.",
        ],
    },
    Row {
        id: "conditional_entropy",
        name: "Conditional entropy",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,prior",
        op: Some("uncertainty::conditional_entropy"),
        caveats: &[OUTLIERS],
    },
    Row {
        id: "conditional_privacy",
        name: "Conditional privacy",
        category: Uncertainty,
        range: "[1,inf]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,prior",
        op: Some("uncertainty::inherent_privacy[conditional]"),
        caveats: &[],
    },
    Row {
        id: "cross_entropy",
        name: "Cross-entropy",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "pub",
        inputs: "estimate,truth",
        op: Some("uncertainty::cross_entropy"),
        caveats: &["Infinite when the model assigns zero mass to a possible outcome."],
    },
    Row {
        id: "cumulative_entropy",
        name: "Cumulative entropy",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate",
        op: Some("uncertainty::cumulative_entropy"),
        caveats: &["Assumes the per-zone entropies are independent contributions."],
    },
    Row {
        id: "unlinkability_degree",
        name: "Degree of unlinkability",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,prior?",
        op: Some("uncertainty::unlinkability_degree"),
        caveats: &["Partitions must be supplied explicitly; enumerating all of them grows with the Bell numbers."],
    },
    Row {
        id: "shannon_entropy",
        name: "Entropy",
        category: Uncertainty,
        range: "[0,H_0(X)]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate",
        op: Some("uncertainty::shannon_entropy"),
        caveats: &[OUTLIERS, "Absolute values are hard to compare across populations of different size."],
    },
    Row {
        id: "bayes_entropy",
        name: "Entropy + Bayes",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate,prior",
        op: Some("uncertainty::bayes_entropy_series"),
        caveats: &["Quality depends on the transition and observation models fed to the belief update."],
    },
    Row {
        id: "genomic_privacy",
        name: "Genomic privacy",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "pub",
        inputs: "estimate,parameters",
        op: Some("uncertainty::genomic_privacy"),
        caveats: &["Severity weights are subjective ratings."],
    },
    Row {
        id: "inherent_privacy",
        name: "Inherent privacy",
        category: Uncertainty,
        range: "[1,|X|]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate",
        op: Some("uncertainty::inherent_privacy"),
        caveats: &[OUTLIERS],
    },
    Row {
        id: "max_entropy",
        name: "Max-entropy (Hartley)",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate",
        op: Some("uncertainty::max_entropy"),
        caveats: &["Depends only on the support size, not on the probabilities."],
    },
    Row {
        id: "min_entropy",
        name: "Min-entropy",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "L",
        sources: "obs,pub",
        inputs: "estimate",
        op: Some("uncertainty::min_entropy"),
        caveats: &[
            "Catalogued with low values indicating privacy, while a larger min-entropy means a less likely best guess; check which reading a study uses.",
        ],
    },
    Row {
        id: "normalized_conditional_entropy",
        name: "Normalized conditional entropy",
        category: Uncertainty,
        range: "[0,1]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,prior",
        op: Some("uncertainty::conditional_entropy[normalized]"),
        caveats: &["Undefined when X is constant."],
    },
    Row {
        id: "normalized_entropy",
        name: "Normalized entropy",
        category: Uncertainty,
        range: "[0,1]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate",
        op: Some("uncertainty::normalized_entropy"),
        caveats: &["Normalization hides the population size: a pair and a crowd can score the same."],
    },
    Row {
        id: "protection_level",
        name: "Protection level",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate,parameters",
        op: Some("uncertainty::protection_level"),
        caveats: &[],
    },
    Row {
        id: "quantile_entropy",
        name: "Quantiles on entropy",
        category: Uncertainty,
        range: "[0,H_0(X)]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,parameters",
        op: Some("uncertainty::quantile_entropy"),
        caveats: &[],
    },
    Row {
        id: "renyi_entropy",
        name: "Rényi entropy",
        category: Uncertainty,
        range: "[0,inf]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,parameters",
        op: Some("uncertainty::renyi_entropy"),
        caveats: &["The order alpha changes the meaning: 0 counts the support, infinity tracks the best guess."],
    },
    Row {
        id: "user_centric_privacy",
        name: "User-centric privacy",
        category: Uncertainty,
        range: "[0,H_0(U)]",
        direction: "H",
        sources: "obs",
        inputs: "estimate,parameters",
        op: Some("uncertainty::user_centric_privacy"),
        caveats: &["The decay rate is a modelling assumption about how fast privacy erodes."],
    },
    // information gain
    Row {
        id: "leaked_count",
        name: "Amount of leaked information",
        category: InformationGain,
        range: "[0,inf]",
        direction: "L",
        sources: "pub,oth",
        inputs: "truth",
        op: Some("infogain::leaked_count"),
        caveats: &["All items count equally regardless of sensitivity."],
    },
    Row {
        id: "conditional_mutual_information",
        name: "Conditional mutual information",
        category: InformationGain,
        range: "[0,inf]",
        direction: "L",
        sources: "obs,pub",
        inputs: "estimate,truth,prior",
        op: Some("infogain::conditional_mutual_information"),
        caveats: &[],
    },
    Row {
        id: "conditional_privacy_loss",
        name: "Conditional privacy loss",
        category: InformationGain,
        range: "[0,1]",
        direction: "L",
        sources: "obs,pub",
        inputs: "estimate,truth",
        op: Some("infogain::mutual_information[cpl]"),
        caveats: &[],
    },
    Row {
        id: "belief_increase",
        name: "Increase in adversary's belief",
        category: InformationGain,
        range: "true,false",
        direction: "L",
        sources: "obs,pub",
        inputs: "estimate,prior,parameters",
        op: Some("infogain::belief_increase_check"),
        caveats: &[],
    },
    Row {
        id: "surprisal",
        name: "Information surprisal",
        category: InformationGain,
        range: "]0,inf]",
        direction: "L",
        sources: "pub",
        inputs: "estimate,truth",
        op: Some("infogain::surprisal"),
        caveats: &["A certain outcome gives 0, which falls outside the open lower bound."],
    },
    Row {
        id: "max_information_leakage",
        name: "Maximum information leakage",
        category: InformationGain,
        range: "[0,inf]",
        direction: "L",
        sources: "obs,pub",
        inputs: "estimate",
        op: Some("infogain::max_information_leakage"),
        caveats: &[],
    },
    Row {
        id: "mutual_information",
        name: "Mutual information",
        category: InformationGain,
        range: "[0,inf]",
        direction: "L",
        sources: "obs,pub",
        inputs: "estimate,truth",
        op: Some("infogain::mutual_information"),
        caveats: &["An average over outcomes; single realizations can leak far more."],
    },
    Row {
        id: "normalized_mutual_information",
        name: "Normalized mutual information",
        category: InformationGain,
        range: "[0,1]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,truth",
        op: Some("infogain::normalized_mutual_information"),
        caveats: &["Undefined when X is constant."],
    },
    Row {
        id: "pearson_correlation",
        name: "Pearson's correlation coefficient",
        category: InformationGain,
        range: "[0,1]",
        direction: "L",
        sources: "obs,rep",
        inputs: "truth",
        op: Some("infogain::pearson_abs"),
        caveats: &[
            "The coefficient itself ranges over [-1,1]; the absolute value is reported and the signed value is kept as a detail.",
            "Captures only linear dependence.",
        ],
    },
    Row {
        id: "privacy_score",
        name: "Privacy score",
        category: InformationGain,
        range: "[0,inf]",
        direction: "L",
        sources: "pub",
        inputs: "parameters",
        op: Some("infogain::privacy_score"),
        caveats: &["Sensitivity and visibility estimates are model outputs, not observations."],
    },
    Row {
        id: "feature_reduction",
        name: "Reduction in observable features",
        category: InformationGain,
        range: "[0,1]",
        direction: "L",
        sources: "obs,rep",
        inputs: "truth",
        op: Some("infogain::feature_mass_reduction"),
        caveats: &[],
    },
    Row {
        id: "relative_entropy",
        name: "Relative entropy",
        category: InformationGain,
        range: "[0,inf]",
        direction: "H",
        sources: "obs,pub",
        inputs: "estimate,truth",
        op: Some("infogain::kl_divergence"),
        caveats: &[
            "Catalogued with high values indicating privacy, yet the divergence is often read as information revealed to the adversary; the stored direction is kept as catalogued.",
        ],
    },
    Row {
        id: "loss_of_anonymity",
        name: "(Relative) loss of anonymity",
        category: InformationGain,
        range: "[0,H(X)]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,truth,prior?",
        op: Some("infogain::channel_capacity"),
        caveats: &["A worst case over input distributions, computed iteratively."],
    },
    Row {
        id: "system_anonymity_level",
        name: "System anonymity level",
        category: InformationGain,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate,truth",
        op: Some("infogain::system_anonymity_level"),
        caveats: &["Counting perfect matchings is #P-hard; inputs are limited to small systems."],
    },
    // similarity
    Row {
        id: "alpha_k_anonymity",
        name: "(α,k)-anonymity",
        category: Similarity,
        range: "k:[0,inf];alpha:[0,1]",
        direction: "k:H;alpha:L",
        sources: "pub",
        inputs: "parameters",
        op: Some("tabular::alpha_k_anonymity"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "ct_isolation",
        name: "(c,t)-isolation",
        category: Similarity,
        range: "[0,inf]",
        direction: "H",
        sources: "pub",
        inputs: "estimate,truth,parameters",
        op: Some("tabular::ct_isolation"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "cluster_similarity",
        name: "Cluster similarity",
        category: Similarity,
        range: "[0,1]",
        direction: "L",
        sources: "obs,rep",
        inputs: "truth",
        op: Some("tabular::cluster_similarity"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "r_squared",
        name: "Coefficient of determination R²",
        category: Similarity,
        range: "[0,1]",
        direction: "L",
        sources: "obs,rep",
        inputs: "truth",
        op: Some("tabular::r_squared_transitions"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "em_anonymity",
        name: "(ε,m)-anonymity",
        category: Similarity,
        range: "epsilon:[0,1];m:[1,inf]",
        direction: "epsilon:H;m:H",
        sources: "pub",
        inputs: "parameters",
        op: Some("tabular::em_anonymity"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "haplotype_snp_test",
        name: "Haplotype-SNP test",
        category: Similarity,
        range: "true,false",
        direction: "H",
        sources: "pub",
        inputs: "parameters",
        op: Some("tabular::haplotype_safety"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "historical_k_anonymity",
        name: "Historical k-anonymity",
        category: Similarity,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "truth,parameters",
        op: Some("tabular::historical_k"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "k_anonymity",
        name: "k-anonymity",
        category: Similarity,
        range: "[1,|D|]",
        direction: "H",
        sources: "pub",
        inputs: "parameters",
        op: Some("tabular::k_anonymity"),
        caveats: &[
            NO_ADVERSARY,
            "Does not stop attribute disclosure: a class whose rows share one sensitive value reveals it.",
        ],
    },
    Row {
        id: "ke_anonymity",
        name: "(k,e)-anonymity",
        category: Similarity,
        range: "[0,inf]",
        direction: "H",
        sources: "pub",
        inputs: "parameters",
        op: Some("tabular::ke_anonymity"),
        caveats: &[NO_ADVERSARY, "Requires a numeric sensitive attribute."],
    },
    Row {
        id: "l_diversity",
        name: "ℓ-diversity",
        category: Similarity,
        range: "[0,inf]",
        direction: "H",
        sources: "pub",
        inputs: "parameters",
        op: Some("tabular::l_diversity"),
        caveats: &[
            NO_ADVERSARY,
            "Ignores how semantically close distinct sensitive values are and how skewed the overall distribution is.",
        ],
    },
    Row {
        id: "m_invariance",
        name: "m-invariance",
        category: Similarity,
        range: "[0,inf]",
        direction: "H",
        sources: "pub",
        inputs: "parameters",
        op: Some("tabular::m_invariance"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "multirelational_k_anonymity",
        name: "Multirelational k-anonymity",
        category: Similarity,
        range: "[0,inf]",
        direction: "H",
        sources: "pub",
        inputs: "truth,parameters",
        op: Some("tabular::multirelational_k"),
        caveats: &[NO_ADVERSARY],
    },
    Row {
        id: "t_closeness",
        name: "t-closeness",
        category: Similarity,
        range: "[0,inf]",
        direction: "L",
        sources: "pub",
        inputs: "truth,parameters",
        op: Some("tabular::t_closeness"),
        caveats: &[
            NO_ADVERSARY,
            "Distance is the Earth Mover's Distance between each class's sensitive-value distribution and the whole table's; the ground distance (ordered or equal) changes the value.",
        ],
    },
    Row {
        id: "normalized_variance",
        name: "Normalized variance",
        category: Similarity,
        range: "[0,1]",
        direction: "H",
        sources: "pub",
        inputs: "truth",
        op: Some("tabular::normalized_variance"),
        caveats: &[
            NO_ADVERSARY,
            "The ratio exceeds 1 when perturbation noise is anti-correlated with the data; such results are flagged out of range rather than clamped.",
        ],
    },
    Row {
        id: "xy_privacy",
        name: "(X,Y)-privacy",
        category: Similarity,
        range: "]0,1]",
        direction: "L",
        sources: "pub",
        inputs: "truth,parameters",
        op: Some("tabular::xy_privacy"),
        caveats: &[NO_ADVERSARY],
    },
    // time
    Row {
        id: "max_tracking_time",
        name: "Maximum tracking time",
        category: Time,
        range: "[0,inf]",
        direction: "L",
        sources: "obs",
        inputs: "estimate",
        op: Some("adversary::max_tracking_time"),
        caveats: &["Counts only time with a singleton anonymity set, so it tends to overstate privacy."],
    },
    Row {
        id: "mean_time_to_confusion",
        name: "Mean time to confusion",
        category: Time,
        range: "[0,inf]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,parameters",
        op: Some("adversary::time_to_confusion"),
        caveats: &["Both the mean run length and the cumulative time below the threshold are reported."],
    },
    Row {
        id: "time_until_success",
        name: "Time until adversary's success",
        category: Time,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate,truth,parameters?",
        op: Some("adversary::batch_mix_rounds"),
        caveats: &["Depends on how success is defined; the batch-mix round count is one instance."],
    },
    // indistinguishability
    Row {
        id: "approximate_dp",
        name: "Approximate differential privacy",
        category: Indistinguishability,
        range: "epsilon:[0,inf];delta:[0,inf]",
        direction: "epsilon:L;delta:L",
        sources: "pub",
        inputs: "truth,parameters",
        op: Some("indist::adp_delta"),
        caveats: &[],
    },
    Row {
        id: "computational_dp",
        name: "Computational differential privacy",
        category: Indistinguishability,
        range: "[0,inf]",
        direction: "L",
        sources: "pub",
        inputs: "estimate,resources,truth,parameters",
        op: None,
        caveats: &["Not computable here: the definition is asymptotic in a security parameter against bounded adversaries."],
    },
    Row {
        id: "cryptographic_game",
        name: "Cryptographic game",
        category: Indistinguishability,
        range: "true,false",
        direction: "H",
        sources: "obs",
        inputs: "estimate,truth,parameters",
        op: Some("indist::game_advantage"),
        caveats: &["Empirical transcripts only bound the advantage statistically."],
    },
    Row {
        id: "differential_privacy",
        name: "Differential privacy",
        category: Indistinguishability,
        range: "[0,inf]",
        direction: "L",
        sources: "pub",
        inputs: "truth,parameters",
        op: Some("indist::dp_epsilon"),
        caveats: &["A worst-case bound over neighboring inputs; it says little about typical leakage."],
    },
    Row {
        id: "distributed_dp",
        name: "Distributed differential privacy",
        category: Indistinguishability,
        range: "epsilon:[0,inf];delta:[0,inf]",
        direction: "epsilon:L;delta:L",
        sources: "pub,rep",
        inputs: "truth,parameters",
        op: None,
        caveats: &["Not computable here: conditioning on compromised participants' randomness is outside the finite-mechanism model."],
    },
    Row {
        id: "distributional_privacy",
        name: "Distributional privacy",
        category: Indistinguishability,
        range: "[0,inf]",
        direction: "L",
        sources: "pub,rep",
        inputs: "truth,parameters",
        op: Some("indist::distributional_privacy"),
        caveats: &["Evaluated for a single observed response sequence."],
    },
    Row {
        id: "geo_indistinguishability",
        name: "Geo-indistinguishability",
        category: Indistinguishability,
        range: "[0,inf]",
        direction: "L",
        sources: "obs",
        inputs: "truth,parameters",
        op: Some("indist::geo_indistinguishability"),
        caveats: &["Reported as the largest log-ratio of output probabilities per unit distance."],
    },
    Row {
        id: "information_privacy",
        name: "Information privacy",
        category: Indistinguishability,
        range: "true,false",
        direction: "H",
        sources: "obs",
        inputs: "estimate,parameters",
        op: Some("indist::information_privacy"),
        caveats: &[],
    },
    Row {
        id: "observational_equivalence",
        name: "Observational equivalence",
        category: Indistinguishability,
        range: "true,false",
        direction: "H",
        sources: "obs",
        inputs: "estimate,truth",
        op: None,
        caveats: &["Not computable here: deciding equivalence of processes needs a process-calculus verifier."],
    },
    Row {
        id: "unconditional_privacy",
        name: "Unconditional / computational privacy",
        category: Indistinguishability,
        range: "true,false",
        direction: "L",
        sources: "obs",
        inputs: "estimate,truth,parameters",
        op: Some("indist::unconditional_privacy"),
        caveats: &["The unconditional form tolerates no advantage at all; the computational form is the cryptographic game."],
    },
    // success
    Row {
        id: "success_rate",
        name: "Adversary's success rate",
        category: Success,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,truth,parameters?",
        op: Some("adversary::success_rate"),
        caveats: &[],
    },
    Row {
        id: "dg_privacy",
        name: "(d,γ)-privacy",
        category: Success,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,prior,parameters",
        op: Some("adversary::dg_privacy_check"),
        caveats: &[
            "The ratio condition lower-bounds posterior over prior, which reads oddly for a guarantee; it is implemented as stated.",
        ],
    },
    Row {
        id: "degrees_of_anonymity",
        name: "Degrees of anonymity",
        category: Success,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,truth,parameters",
        op: Some("adversary::degrees_of_anonymity"),
        caveats: &["Blind to the size of the anonymity set: one degree can hide very different success chances."],
    },
    Row {
        id: "delta_presence",
        name: "δ-presence",
        category: Success,
        range: "[0,1]",
        direction: "L",
        sources: "pub",
        inputs: "estimate,prior,parameters",
        op: Some("adversary::delta_presence"),
        caveats: &["Assumes publisher and adversary hold the same external table."],
    },
    Row {
        id: "hiding_property",
        name: "Hiding property",
        category: Success,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,parameters",
        op: Some("adversary::hiding_property"),
        caveats: &[],
    },
    Row {
        id: "privacy_breach_level",
        name: "Privacy breach level",
        category: Success,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,prior,parameters",
        op: Some("adversary::privacy_breach_check"),
        caveats: &[],
    },
    Row {
        id: "path_compromise",
        name: "Probability of path compromise",
        category: Success,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,resources,truth",
        op: Some("adversary::path_compromise_probability"),
        caveats: &["Assumes uniform, independent relay choice; guard persistence and bandwidth weighting are ignored."],
    },
    Row {
        id: "expected_estimation_error",
        name: "Adversary's expected estimation error",
        category: Success,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,truth",
        op: Some("adversary::expected_estimation_error"),
        caveats: &[
            "Catalogued as a success metric with low values indicating privacy, although a larger expected error means a less accurate adversary.",
            "With a euclidean ground metric the value is a distance and can exceed 1.",
        ],
    },
    // error
    Row {
        id: "distance_error_expectation",
        name: "Expectation of distance error",
        category: Error,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate,truth",
        op: Some("adversary::distance_error_expectation"),
        caveats: &[],
    },
    Row {
        id: "mean_squared_error",
        name: "Mean squared error",
        category: Error,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate,truth",
        op: Some("adversary::mean_squared_error"),
        caveats: &[],
    },
    Row {
        id: "pct_incorrect",
        name: "Percentage incorrectly classified",
        category: Error,
        range: "[0,1]",
        direction: "H",
        sources: "obs,rep",
        inputs: "estimate,truth",
        op: Some("adversary::pct_incorrect"),
        caveats: &[],
    },
    // accuracy
    Row {
        id: "obfuscated_region_accuracy",
        name: "Accuracy of obfuscated region",
        category: Accuracy,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "parameters",
        op: Some("adversary::obfuscation_accuracy"),
        caveats: &[],
    },
    Row {
        id: "confidence_interval_width",
        name: "Confidence interval width",
        category: Accuracy,
        range: "[0,inf]",
        direction: "H",
        sources: "pub,obs",
        inputs: "estimate,parameters",
        op: Some("adversary::confidence_interval_width"),
        caveats: &["For perturbed data the width can help reconstruct the original distribution."],
    },
    Row {
        id: "sensitive_region_coverage",
        name: "Coverage of sensitive region",
        category: Accuracy,
        range: "[0,1]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,parameters",
        op: Some("adversary::sensitive_region_coverage"),
        caveats: &[],
    },
    Row {
        id: "uncertainty_region_size",
        name: "Size of uncertainty region",
        category: Accuracy,
        range: "[0,inf]",
        direction: "H",
        sources: "obs",
        inputs: "estimate",
        op: Some("adversary::region_privacy"),
        caveats: &[],
    },
    Row {
        id: "event_unobservability",
        name: "Statistically strong event unobservability",
        category: Accuracy,
        range: "[0,inf]",
        direction: "L",
        sources: "obs",
        inputs: "estimate,parameters",
        op: Some("adversary::event_unobservability"),
        caveats: &["Only meaningful for distribution families with a single parameter."],
    },
    Row {
        id: "tp_privacy_violation",
        name: "(t,p) privacy violation",
        category: Accuracy,
        range: "[0,1]",
        direction: "L",
        sources: "pub",
        inputs: "estimate,truth,prior,parameters",
        op: Some("adversary::tp_violation_check"),
        caveats: &[],
    },
];

/// Metrics described alongside the others but without a catalogued row of
/// ranges and inputs; their entries are filled in by analogy.
const EXTRA_ROWS: &[Row] = &[
    Row {
        id: "health_privacy",
        name: "Health privacy",
        category: Error,
        range: "[0,inf]",
        direction: "H",
        sources: "pub",
        inputs: "estimate,parameters",
        op: Some("adversary::health_privacy"),
        caveats: &["Unit, range and direction follow the chosen base metric; the entry assumes an error-style base."],
    },
    Row {
        id: "record_linkage_success",
        name: "Record linkage success",
        category: Success,
        range: "true,false",
        direction: "L",
        sources: "pub",
        inputs: "estimate,truth,parameters",
        op: Some("adversary::record_linkage_check"),
        caveats: &[],
    },
];

fn build(row: &Row) -> MetricDescriptor {
    let data_sources = row
        .sources
        .split(',')
        .map(|s| s.parse::<DataSource>().expect("catalog data source"))
        .collect();
    let mut inputs = BTreeSet::new();
    let mut optional_inputs = BTreeSet::new();
    for part in row.inputs.split(',') {
        match part.strip_suffix('?') {
            Some(opt) => optional_inputs.insert(opt.parse::<InputKind>().expect("catalog input")),
            None => inputs.insert(part.parse::<InputKind>().expect("catalog input")),
        };
    }
    MetricDescriptor {
        id: row.id.to_string(),
        name: row.name.to_string(),
        category: row.category,
        value_range: row.range.parse().expect("catalog range"),
        direction: row.direction.parse().expect("catalog direction"),
        data_sources,
        inputs,
        optional_inputs,
        caveats: row.caveats.iter().map(|c| c.to_string()).collect(),
        implemented: row.op.is_some(),
        op_ref: row.op.map(str::to_string),
    }
}

/// Every descriptor in catalog order (tabulated rows, then extras).
pub(crate) fn descriptors() -> Vec<MetricDescriptor> {
    ROWS.iter().chain(EXTRA_ROWS).map(build).collect()
}

/// Ids of the catalogued rows, excluding the extras.
pub fn tabulated_ids() -> Vec<&'static str> {
    ROWS.iter().map(|r| r.id).collect()
}
