use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{bail, Result};
use crate::model::{entropy_bits, DiscreteDistribution, JointDistribution};

/// Switch to the Shannon limit when `|alpha - 1|` is this small.
pub const RENYI_SHANNON_BAND: f64 = 1e-6;

/// Number of distinct members of an anonymity set.
pub fn anonymity_set_size<T, I>(members: I) -> usize
where
    T: Hash + Eq,
    I: IntoIterator<Item = T>,
{
    members.into_iter().collect::<HashSet<_>>().len()
}

/// Shannon entropy in bits.
pub fn shannon_entropy(d: &DiscreteDistribution) -> f64 {
    entropy_bits(d.probs())
}

/// Rényi entropy of order `alpha` in bits. `f64::INFINITY` gives min-entropy.
pub fn renyi_entropy(d: &DiscreteDistribution, alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha < 0.0 {
        bail!(Param, "Rényi order must be >= 0, got {alpha}");
    }
    if alpha == 0.0 {
        return Ok((d.len() as f64).log2());
    }
    if alpha.is_infinite() {
        return Ok(min_entropy(d));
    }
    if (alpha - 1.0).abs() <= RENYI_SHANNON_BAND {
        return Ok(shannon_entropy(d));
    }
    // log2 Σ p^α, factored around the largest mass so large orders don't underflow
    let max = d.max_prob();
    let scaled: f64 = d
        .probs()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| (p / max).powf(alpha))
        .sum();
    let log_sum = alpha * max.log2() + scaled.log2();
    Ok((log_sum / (1.0 - alpha)).max(0.0))
}

/// Hartley entropy `log2 |X|`.
pub fn max_entropy(d: &DiscreteDistribution) -> f64 {
    (d.len() as f64).log2()
}

/// `-log2 max p`.
pub fn min_entropy(d: &DiscreteDistribution) -> f64 {
    (-d.max_prob().log2()).max(0.0)
}

/// Entropy divided by the Hartley entropy of the same alphabet.
pub fn normalized_entropy(d: &DiscreteDistribution) -> Result<f64> {
    if d.len() < 2 {
        bail!(Param, "normalized entropy needs at least two outcomes");
    }
    Ok((shannon_entropy(d) / max_entropy(d)).clamp(0.0, 1.0))
}

/// Asymmetric entropy with per-outcome peak positions `peaks`.
///
/// Each term `p(1-p) / ((1-2w)p + w^2)` reaches 1 at `p = w`. The terms
/// are summed without normalization.
pub fn asymmetric_entropy(d: &DiscreteDistribution, peaks: &[f64]) -> Result<f64> {
    if peaks.len() != d.len() {
        bail!(
            Param,
            "{} peak positions for {} outcomes",
            peaks.len(),
            d.len()
        );
    }
    let mut total = 0.0;
    for (&p, &w) in d.probs().iter().zip(peaks) {
        if !(w > 0.0 && w < 1.0) {
            bail!(Param, "peak position {w} outside (0,1)");
        }
        let denom = (1.0 - 2.0 * w) * p + w * w;
        if denom == 0.0 {
            bail!(Domain, "zero denominator at p={p}, w={w}");
        }
        total += p * (1.0 - p) / denom;
    }
    Ok(total)
}

/// Entropy of the outcomes whose probability is at least `c`, renormalized.
pub fn quantile_entropy(d: &DiscreteDistribution, c: f64) -> Result<f64> {
    if !(c > 0.0 && c <= 1.0) {
        bail!(Param, "threshold {c} outside (0,1]");
    }
    let kept: Vec<f64> = d
        .probs()
        .iter()
        .copied()
        .filter(|&p| p >= c - 1e-12)
        .collect();
    if kept.is_empty() {
        bail!(Empty, "no outcome has probability >= {c}");
    }
    let total: f64 = kept.iter().sum();
    let renorm: Vec<f64> = kept.iter().map(|p| p / total).collect();
    Ok(entropy_bits(&renorm))
}

/// `H(X|Y)` in bits, or `H(X|Y)/H(X)` when `normalized`.
pub fn conditional_entropy(j: &JointDistribution, normalized: bool) -> Result<f64> {
    let py = j.marginal_y();
    let mut h = 0.0;
    for row in j.matrix() {
        for (&pxy, &pyv) in row.iter().zip(&py) {
            if pxy > 0.0 {
                h -= pxy * (pxy / pyv).log2();
            }
        }
    }
    let hx = entropy_bits(&j.marginal_x());
    let h = h.clamp(0.0, hx.max(0.0));
    if normalized {
        if hx <= 0.0 {
            bail!(Param, "normalized conditional entropy needs H(X) > 0");
        }
        return Ok((h / hx).clamp(0.0, 1.0));
    }
    Ok(h)
}

/// `2^h`: the effective anonymity set size for `h` bits of uncertainty.
///
/// Passing a conditional entropy yields conditional privacy.
pub fn inherent_privacy(h: f64) -> Result<f64> {
    if h.is_nan() || h < 0.0 {
        bail!(Param, "entropy must be >= 0, got {h}");
    }
    Ok(h.exp2())
}

/// `-Σ p log2 q`, infinite when `q` misses an outcome that `p` supports.
pub fn cross_entropy(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<f64> {
    let mut h = 0.0;
    for (pp, qq) in p.aligned_with(q)? {
        if pp > 0.0 {
            if qq == 0.0 {
                return Ok(f64::INFINITY);
            }
            h -= pp * qq.log2();
        }
    }
    Ok(h.max(0.0))
}

/// Sum of the entropies gathered in consecutive mix zones.
pub fn cumulative_entropy(per_zone: &[f64]) -> Result<f64> {
    if let Some(h) = per_zone.iter().find(|h| h.is_nan() || **h < 0.0) {
        bail!(Param, "zone entropy {h} is negative");
    }
    Ok(per_zone.iter().sum())
}

/// Severity-weighted surprisal of SNP occurrence probabilities.
pub fn genomic_privacy(snp_probs: &[f64], weights: &[f64]) -> Result<f64> {
    if snp_probs.len() != weights.len() {
        bail!(
            Shape,
            "{} probabilities for {} weights",
            snp_probs.len(),
            weights.len()
        );
    }
    let mut total = 0.0;
    for (&p, &w) in snp_probs.iter().zip(weights) {
        if p.is_nan() || p > 1.0 {
            bail!(Param, "SNP probability {p} outside (0,1]");
        }
        if p <= 0.0 {
            bail!(Domain, "SNP probability must be positive, got {p}");
        }
        if w.is_nan() || w < 0.0 {
            bail!(Param, "severity weight {w} is negative");
        }
        total -= p.log2() * w;
    }
    Ok(total.max(0.0))
}

/// Average region popularity along a trajectory relative to a reference region.
///
/// Popularity is `2^H(R)`; the sum is divided by `t_common * 2^H(reference)`.
pub fn protection_level(
    trajectory_regions: &[DiscreteDistribution],
    reference: &DiscreteDistribution,
    t_common: usize,
) -> Result<f64> {
    if t_common < 1 {
        bail!(Param, "common user count must be >= 1");
    }
    if trajectory_regions.is_empty() {
        bail!(Empty, "no trajectory regions");
    }
    let popularity: f64 = trajectory_regions
        .iter()
        .map(|r| shannon_entropy(r).exp2())
        .sum();
    Ok(popularity / (t_common as f64 * shannon_entropy(reference).exp2()))
}
