use crate::error::{bail, Result};
use crate::model::{normalize_mass, FiniteMechanism};

pub const CAPACITY_TOLERANCE: f64 = 1e-9;
pub const CAPACITY_MAX_ITERATIONS: usize = 10_000;

/// Capacity estimate with the input distribution that attains it.
#[derive(Debug, Clone, PartialEq)]
pub struct Capacity {
    pub bits: f64,
    pub input: Vec<f64>,
    pub iterations: usize,
}

/// Per-input divergence `D(W(.|x) || q)` in bits.
fn divergences(w: &[Vec<f64>], p: &[f64]) -> Vec<f64> {
    let ny = w[0].len();
    let mut q = vec![0.0; ny];
    for (row, px) in w.iter().zip(p) {
        for (qy, wy) in q.iter_mut().zip(row) {
            *qy += px * wy;
        }
    }
    w.iter()
        .map(|row| {
            row.iter()
                .zip(&q)
                .filter(|(wy, _)| **wy > 0.0)
                .map(|(wy, qy)| wy * (wy / qy).log2())
                .sum()
        })
        .collect()
}

/// `(lower, upper, D)`: `log2 Σ p(x) 2^D_x ≤ C ≤ max_x D_x`.
fn bounds(w: &[Vec<f64>], p: &[f64]) -> (f64, f64, Vec<f64>) {
    let d = divergences(w, p);
    let lower = p
        .iter()
        .zip(&d)
        .map(|(px, dx)| px * dx.exp2())
        .sum::<f64>()
        .log2();
    let upper = d.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (lower, upper, d)
}

/// Newton's method on `D_x(p) = C` for `x` in `support`, `Σ p = 1`.
///
/// Blahut–Arimoto closes its bound gap only sublinearly when an input's
/// optimal mass is zero; solving the equalizer conditions on a guessed
/// support gets there directly. `None` when the guess leads nowhere.
fn polish(w: &[Vec<f64>], p: &[f64], support: &[usize]) -> Option<Vec<f64>> {
    use nalgebra::{DMatrix, DVector};
    let k = support.len();
    let mass: f64 = support.iter().map(|&i| p[i]).sum();
    let mut x: Vec<f64> = support.iter().map(|&i| p[i] / mass).collect();
    let mut full = vec![0.0; p.len()];
    let spread = |x: &[f64], full: &mut Vec<f64>| {
        full.iter_mut().for_each(|v| *v = 0.0);
        support.iter().zip(x).for_each(|(&i, v)| full[i] = *v);
    };
    spread(&x, &mut full);
    let d = divergences(w, &full);
    let mut c: f64 = support.iter().zip(&x).map(|(&i, v)| v * d[i]).sum();
    let ny = w[0].len();
    for _ in 0..50 {
        spread(&x, &mut full);
        let mut q = vec![0.0; ny];
        for (row, px) in w.iter().zip(&full) {
            q.iter_mut().zip(row).for_each(|(qy, wy)| *qy += px * wy);
        }
        let d = divergences(w, &full);
        let mut f = DVector::zeros(k + 1);
        for (r, &i) in support.iter().enumerate() {
            f[r] = d[i] - c;
        }
        f[k] = x.iter().sum::<f64>() - 1.0;
        if !f.iter().all(|v| v.is_finite()) {
            return None;
        }
        if f.amax() < 1e-15 {
            break;
        }
        let mut jac = DMatrix::zeros(k + 1, k + 1);
        for (r, &i) in support.iter().enumerate() {
            for (s, &j) in support.iter().enumerate() {
                let dot: f64 = (0..ny)
                    .filter(|&y| q[y] > 0.0)
                    .map(|y| w[i][y] * w[j][y] / q[y])
                    .sum();
                jac[(r, s)] = -dot / std::f64::consts::LN_2;
            }
            jac[(r, k)] = -1.0;
            jac[(k, r)] = 1.0;
        }
        let step = jac.lu().solve(&(-f))?;
        let mut t = 1.0;
        while t > 1e-6 && x.iter().zip(step.iter()).any(|(v, s)| v + t * s <= 0.0) {
            t /= 2.0;
        }
        x.iter_mut().zip(step.iter()).for_each(|(v, s)| *v += t * s);
        c += t * step[k];
        if x.iter().any(|v| !(*v > 0.0)) {
            return None;
        }
    }
    spread(&x, &mut full);
    Some(full)
}

/// Blahut–Arimoto on a row-stochastic matrix, from the uniform input.
///
/// Stops once the upper bound `max_x D_x` and the lower bound
/// `log2 Σ p(x) 2^D_x` are within tolerance. At doubling iteration counts
/// the current iterate seeds a Newton solve on candidate supports; its
/// result is accepted only if it meets the same bound test.
pub fn blahut_arimoto(w: &[Vec<f64>]) -> Result<Capacity> {
    if w.is_empty() || w[0].is_empty() {
        bail!(Shape, "channel must have at least one input and one output");
    }
    let n = w.len();
    let done = |lower: f64, input: Vec<f64>, iterations: usize| Capacity {
        bits: lower.max(0.0),
        input,
        iterations,
    };
    let mut p = vec![1.0 / n as f64; n];
    for it in 1..=CAPACITY_MAX_ITERATIONS {
        let (lower, upper, d) = bounds(w, &p);
        if upper - lower < CAPACITY_TOLERANCE {
            return Ok(done(lower, p, it));
        }
        if it >= 16 && (it.is_power_of_two() || it % 1024 == 0) {
            for support in candidate_supports(&p) {
                if let Some(cand) = polish(w, &p, &support) {
                    let (lo, up, _) = bounds(w, &cand);
                    if up - lo < CAPACITY_TOLERANCE {
                        return Ok(done(lo, cand, it));
                    }
                }
            }
        }
        let scaled: Vec<f64> = p.iter().zip(&d).map(|(px, dx)| px * dx.exp2()).collect();
        let z: f64 = scaled.iter().sum();
        p = scaled.into_iter().map(|v| v / z).collect();
    }
    bail!(
        Converge,
        "capacity bounds still apart after {CAPACITY_MAX_ITERATIONS} iterations"
    )
}

/// Inputs ranked by mass: every prefix for small alphabets, mass
/// thresholds for large ones.
fn candidate_supports(p: &[f64]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p[b].total_cmp(&p[a]));
    if p.len() <= 24 {
        return (1..=p.len()).rev().map(|k| order[..k].to_vec()).collect();
    }
    let top = p[order[0]];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for tau in [1e-9, 1e-7, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1] {
        let s: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&i| p[i] >= tau * top)
            .collect();
        if out.last() != Some(&s) {
            out.push(s);
        }
    }
    out
}

/// `max_p I(X;Y)` for a finite channel.
pub fn channel_capacity(channel: &FiniteMechanism) -> Result<Capacity> {
    blahut_arimoto(channel.matrix())
}

/// Channels indexed by revealed information `z`, sharing an input alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionedChannels {
    channels: Vec<FiniteMechanism>,
    pz: Vec<f64>,
}

impl ConditionedChannels {
    pub fn new(channels: Vec<FiniteMechanism>, pz: Vec<f64>) -> Result<Self> {
        if channels.is_empty() {
            bail!(Empty, "no conditioning channels");
        }
        if channels.len() != pz.len() {
            bail!(
                Shape,
                "{} channels for {} p(z) entries",
                channels.len(),
                pz.len()
            );
        }
        if channels.iter().any(|c| c.inputs() != channels[0].inputs()) {
            bail!(Shape, "conditioning channels must share one input alphabet");
        }
        let pz = normalize_mass(&pz, "p(z)")?;
        Ok(Self { channels, pz })
    }

    pub fn channels(&self) -> &[FiniteMechanism] {
        &self.channels
    }

    pub fn pz(&self) -> &[f64] {
        &self.pz
    }

    /// `W'((z,y)|x) = p(z) W_z(y|x)`. With `Z` independent of `X`,
    /// `I(X; Z,Y)` under this channel equals `Σ_z p(z) I_z(X;Y)`.
    pub fn combined(&self) -> Vec<Vec<f64>> {
        (0..self.channels[0].inputs().len())
            .map(|x| {
                self.channels
                    .iter()
                    .zip(&self.pz)
                    .flat_map(|(c, pz)| c.row(x).iter().map(move |w| pz * w))
                    .collect()
            })
            .collect()
    }

    /// `Σ_z p(z) I_z` at a fixed input distribution.
    pub fn average_information(&self, input: &[f64]) -> f64 {
        mutual_information_at(&self.combined(), input)
    }
}

/// `I(X;Y)` in bits for input `p` through channel `w`.
pub fn mutual_information_at(w: &[Vec<f64>], p: &[f64]) -> f64 {
    divergences(w, p)
        .iter()
        .zip(p)
        .map(|(d, px)| px * d)
        .sum::<f64>()
        .max(0.0)
}

/// `max_p I(X;Y|Z)` over one input distribution shared by every `z`.
pub fn relative_channel_capacity(c: &ConditionedChannels) -> Result<Capacity> {
    blahut_arimoto(&c.combined())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn hb(q: f64) -> f64 {
        if q == 0.0 || q == 1.0 {
            0.0
        } else {
            -q * q.log2() - (1.0 - q) * (1.0 - q).log2()
        }
    }

    pub(crate) fn bsc(q: f64) -> FiniteMechanism {
        FiniteMechanism::from_matrix(vec![vec![1.0 - q, q], vec![q, 1.0 - q]]).unwrap()
    }

    /// Exhaustive 1/64 grid over the input simplex, for at most four inputs.
    pub(crate) fn grid_capacity(w: &[Vec<f64>]) -> f64 {
        assert!(w.len() <= 4);
        const STEPS: usize = 64;
        let n = w.len();
        let mut best = 0.0f64;
        let mut counts = vec![0usize; n];
        fn walk(i: usize, left: usize, counts: &mut Vec<usize>, w: &[Vec<f64>], best: &mut f64) {
            if i + 1 == counts.len() {
                counts[i] = left;
                let p: Vec<f64> = counts.iter().map(|c| *c as f64 / STEPS as f64).collect();
                *best = best.max(mutual_information_at(w, &p));
                return;
            }
            for c in 0..=left {
                counts[i] = c;
                walk(i + 1, left - c, counts, w, best);
            }
        }
        walk(0, STEPS, &mut counts, w, &mut best);
        best
    }

    #[test]
    fn identity_and_constant_channels() {
        let id = FiniteMechanism::from_matrix(
            (0..4)
                .map(|i| (0..4).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
                .collect(),
        )
        .unwrap();
        assert!((channel_capacity(&id).unwrap().bits - 2.0).abs() < 1e-12);
        let constant = FiniteMechanism::from_matrix(vec![vec![0.3, 0.7]; 3]).unwrap();
        assert!(channel_capacity(&constant).unwrap().bits.abs() < 1e-12);
    }

    #[test]
    fn bsc_matches_closed_form() {
        let c = channel_capacity(&bsc(0.11)).unwrap().bits;
        assert!((c - (1.0 - hb(0.11))).abs() < 1e-9);
        assert!((c - 0.500084041835472).abs() < 1e-9);
    }

    #[test]
    fn asymmetric_channel_beats_grid() {
        // Z-channel: capacity input is not uniform
        let w = vec![vec![1.0, 0.0], vec![0.4, 0.6]];
        let ba = blahut_arimoto(&w).unwrap();
        let grid = grid_capacity(&w);
        assert!(ba.bits >= grid - 1e-9);
        assert!(ba.bits - grid < 1e-3);
        assert!((mutual_information_at(&w, &ba.input) - ba.bits).abs() < 1e-8);
    }

    #[test]
    fn relative_capacity_against_grid() {
        let c = ConditionedChannels::new(
            vec![
                FiniteMechanism::from_matrix(vec![vec![0.9, 0.1], vec![0.2, 0.8], vec![0.5, 0.5]])
                    .unwrap(),
                FiniteMechanism::from_matrix(vec![vec![0.5, 0.5], vec![0.1, 0.9], vec![0.7, 0.3]])
                    .unwrap(),
            ],
            vec![0.6, 0.4],
        )
        .unwrap();
        let ba = relative_channel_capacity(&c).unwrap();
        let grid = grid_capacity(&c.combined());
        assert!(ba.bits >= grid - 1e-9);
        assert!(ba.bits - grid < 1e-3);
        // average of per-z informations at the optimizer
        let per_z: f64 = c
            .channels()
            .iter()
            .zip(c.pz())
            .map(|(ch, pz)| pz * mutual_information_at(ch.matrix(), &ba.input))
            .sum();
        assert!((per_z - ba.bits).abs() < 1e-8);
    }

    #[test]
    fn conditioning_shape_errors() {
        let a = bsc(0.1);
        let b = FiniteMechanism::from_matrix(vec![vec![1.0]; 3]).unwrap();
        assert_eq!(
            ConditionedChannels::new(vec![a.clone(), b], vec![0.5, 0.5])
                .unwrap_err()
                .code(),
            "E_SHAPE"
        );
        assert_eq!(
            ConditionedChannels::new(vec![a], vec![0.5, 0.5])
                .unwrap_err()
                .code(),
            "E_SHAPE"
        );
    }
}
