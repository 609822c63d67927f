use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{bail, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HaplotypeMode {
    Aggregate,
    Statistics,
}

/// Whether aggregate data or test statistics over `n` participants and `l`
/// variations can be published. `log_base` defaults to 2 in callers.
pub fn haplotype_safety(
    n: u64,
    l: u64,
    alpha: f64,
    mode: HaplotypeMode,
    log_base: f64,
) -> Result<bool> {
    if n < 2 {
        bail!(Param, "need at least two participants, got {n}");
    }
    if !(log_base > 0.0 && log_base != 1.0 && log_base.is_finite()) {
        bail!(Param, "invalid log base {log_base}");
    }
    let log = ((n + 1) as f64).ln() / log_base.ln();
    let denom = match mode {
        HaplotypeMode::Aggregate => log,
        HaplotypeMode::Statistics => {
            if alpha.is_nan() {
                bail!(Param, "alpha is NaN");
            }
            log - 1.0 + alpha
        }
    };
    if denom <= 0.0 {
        bail!(Param, "threshold denominator {denom} is not positive");
    }
    Ok(haplotype_threshold(n, denom) > l as f64)
}

fn haplotype_threshold(n: u64, denom: f64) -> f64 {
    2.0 * (n - 1) as f64 / denom
}

/// Fraction of positions whose clusters agree after the best relabeling.
///
/// The label bijection is found exhaustively for up to eight clusters and
/// greedily (largest overlap first) beyond that.
pub fn cluster_similarity<A, B>(original: &[A], protected: &[B]) -> Result<f64>
where
    A: Hash + Eq + Clone,
    B: Hash + Eq + Clone,
{
    if original.len() != protected.len() {
        bail!(
            Shape,
            "{} original vs {} protected assignments",
            original.len(),
            protected.len()
        );
    }
    if original.is_empty() {
        bail!(Empty, "no assignments");
    }
    fn index<K: Hash + Eq>(labels: &mut HashMap<K, usize>, v: K) -> usize {
        let n = labels.len();
        *labels.entry(v).or_insert(n)
    }
    let mut la: HashMap<A, usize> = HashMap::new();
    let mut lb: HashMap<B, usize> = HashMap::new();
    let pairs: Vec<(usize, usize)> = original
        .iter()
        .zip(protected)
        .map(|(a, b)| (index(&mut la, a.clone()), index(&mut lb, b.clone())))
        .collect();
    let (na, nb) = (la.len(), lb.len());
    let mut overlap = vec![vec![0usize; nb]; na];
    for (a, b) in pairs {
        overlap[a][b] += 1;
    }
    let matched = if na.max(nb) <= 8 {
        best_assignment(&overlap)
    } else {
        greedy_assignment(&overlap)
    };
    Ok(matched as f64 / original.len() as f64)
}

/// Maximum total overlap over injective maps from the smaller label set.
pub(crate) fn best_assignment(overlap: &[Vec<usize>]) -> usize {
    let na = overlap.len();
    let nb = overlap.first().map_or(0, |r| r.len());
    let transposed: Vec<Vec<usize>>;
    let m: &[Vec<usize>] = if na <= nb {
        overlap
    } else {
        transposed = (0..nb)
            .map(|j| (0..na).map(|i| overlap[i][j]).collect())
            .collect();
        &transposed
    };
    fn go(m: &[Vec<usize>], row: usize, used: &mut Vec<bool>) -> usize {
        if row == m.len() {
            return 0;
        }
        let mut best = 0;
        for col in 0..used.len() {
            if !used[col] {
                used[col] = true;
                best = best.max(m[row][col] + go(m, row + 1, used));
                used[col] = false;
            }
        }
        best
    }
    let width = m.first().map_or(0, |r| r.len());
    go(m, 0, &mut vec![false; width])
}

fn greedy_assignment(overlap: &[Vec<usize>]) -> usize {
    let mut cells: Vec<(usize, usize, usize)> = overlap
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (*v, i, j)))
        .collect();
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut used_a = vec![false; overlap.len()];
    let mut used_b = vec![false; overlap.first().map_or(0, |r| r.len())];
    let mut total = 0;
    for (v, i, j) in cells {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            total += v;
        }
    }
    total
}

/// `1 - SS_E / (SS_R + SS_E)` for a least-squares line over the time index.
pub fn r_squared_transitions(series: &[f64]) -> Result<f64> {
    if series.len() < 3 {
        bail!(Param, "need at least three points, got {}", series.len());
    }
    let n = series.len() as f64;
    let mean_t = (n - 1.0) / 2.0;
    let mean_y = series.iter().sum::<f64>() / n;
    let (mut stt, mut sty) = (0.0, 0.0);
    for (i, y) in series.iter().enumerate() {
        let dt = i as f64 - mean_t;
        stt += dt * dt;
        sty += dt * (y - mean_y);
    }
    let slope = sty / stt;
    let (mut ss_e, mut ss_r) = (0.0, 0.0);
    for (i, y) in series.iter().enumerate() {
        let fit = mean_y + slope * (i as f64 - mean_t);
        ss_e += (y - fit) * (y - fit);
        ss_r += (fit - mean_y) * (fit - mean_y);
    }
    if ss_e + ss_r == 0.0 {
        bail!(Degenerate, "constant series has no variability to explain");
    }
    Ok((1.0 - ss_e / (ss_r + ss_e)).clamp(0.0, 1.0))
}

fn variance(v: &[f64]) -> f64 {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n
}

/// `σ²(X - Y) / σ²(X)`, unclamped.
pub fn normalized_variance(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        bail!(
            Shape,
            "{} original vs {} perturbed values",
            x.len(),
            y.len()
        );
    }
    if x.len() < 2 {
        bail!(Param, "need at least two values");
    }
    let vx = variance(x);
    if vx == 0.0 {
        bail!(Degenerate, "original data has zero variance");
    }
    let diff: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    Ok(variance(&diff) / vx)
}
