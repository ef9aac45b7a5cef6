//! Fusion-ring data and quantum dimensions.

use serde::{Deserialize, Serialize};

use super::FusionError;

/// Associativity is checked in O(rank⁵); larger rings are refused.
pub const MAX_RANK: usize = 32;

const POWER_TOL: f64 = 1e-12;
const POWER_MAX_ITERS: usize = 100_000;

/// Labels, duality and fusion coefficients `N[i][j][k] = N^{ij}_k`.
/// `labels[0]` is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionRingData {
    pub labels: Vec<String>,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<u32>>>,
}

impl FusionRingData {
    /// Builds and validates.
    pub fn new(
        labels: Vec<String>,
        dual: Vec<usize>,
        n: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self, FusionError> {
        let r = FusionRingData { labels, dual, n };
        r.validate()?;
        Ok(r)
    }

    /// Parses JSON and validates.
    pub fn from_json(s: &str) -> Result<Self, FusionError> {
        let r: FusionRingData =
            serde_json::from_str(s).map_err(|e| FusionError::Json(e.to_string()))?;
        r.validate()?;
        Ok(r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ring serializes")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn validate(&self) -> Result<(), FusionError> {
        let r = self.rank();
        let bad = |m: String| Err(FusionError::InvalidRing(m));
        if r == 0 {
            return bad("no labels".into());
        }
        if r > MAX_RANK {
            return bad(format!("rank {r} exceeds {MAX_RANK}"));
        }
        if self.dual.len() != r {
            return bad(format!(
                "dual has {} entries, expected {r}",
                self.dual.len()
            ));
        }
        if self.n.len() != r
            || self
                .n
                .iter()
                .any(|m| m.len() != r || m.iter().any(|v| v.len() != r))
        {
            return bad(format!("N must be {r}x{r}x{r}"));
        }
        for (i, &j) in self.dual.iter().enumerate() {
            if j >= r || self.dual[j] != i {
                return bad(format!("dual is not an involution at {i}"));
            }
        }
        if self.dual[0] != 0 {
            return bad("unit is not self-dual".into());
        }
        let n = &self.n;
        for i in 0..r {
            for j in 0..r {
                let d = u32::from(i == j);
                if n[i][0][j] != d || n[0][i][j] != d {
                    return bad(format!("unit axiom fails at ({i}, {j})"));
                }
                if n[i][j][0] != u32::from(j == self.dual[i]) {
                    return bad(format!("N^({i},{j})_0 disagrees with dual"));
                }
            }
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let lhs: u64 = (0..r).map(|e| n[a][b][e] as u64 * n[e][c][d] as u64).sum();
                        let rhs: u64 = (0..r).map(|f| n[a][f][d] as u64 * n[b][c][f] as u64).sum();
                        if lhs != rhs {
                            return bad(format!("associativity fails at ({a},{b},{c},{d})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// True when every coefficient is 0 or 1.
    pub fn multiplicity_free(&self) -> bool {
        self.n.iter().flatten().flatten().all(|&v| v <= 1)
    }

    /// Labels `k` with `N^{ij}_k > 0`.
    pub fn fuse(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&k| self.n[i][j][k] > 0).collect()
    }

    /// Fibonacci: `τ ⊗ τ = 1 ⊕ τ`.
    pub fn fibonacci() -> Self {
        FusionRingData {
            labels: vec!["1".into(), "tau".into()],
            dual: vec![0, 1],
            n: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]],
        }
    }

    /// Ising with label order `(1, σ, ψ)`.
    pub fn ising() -> Self {
        FusionRingData {
            labels: vec!["1".into(), "sigma".into(), "psi".into()],
            dual: vec![0, 1, 2],
            n: vec![
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]],
                vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
            ],
        }
    }

    pub fn trivial() -> Self {
        FusionRingData {
            labels: vec!["1".into()],
            dual: vec![0],
            n: vec![vec![vec![1]]],
        }
    }
}

/// Quantum dimensions indexed like the ring's labels.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QDimVector {
    pub d: Vec<f64>,
    /// Largest `|d_i d_j - Σ_k N^{ij}_k d_k|`.
    pub residual: f64,
    /// Every `d_i` is 1 or at least √2 (within 1e-9).
    pub unitary_sane: bool,
}

/// Perron-Frobenius dimensions by power iteration on `I + Σ_i N_i`.
///
/// The regular element is irreducible for any fusion ring, and the shift by
/// `I` removes periodic oscillation.
pub fn qdims(ring: &FusionRingData) -> Result<QDimVector, FusionError> {
    let r = ring.rank();
    let mut m = vec![vec![0.0f64; r]; r];
    for (j, row) in m.iter_mut().enumerate() {
        row[j] += 1.0;
        for i in 0..r {
            for (k, x) in row.iter_mut().enumerate() {
                *x += ring.n[i][j][k] as f64;
            }
        }
    }
    let apply = |v: &[f64]| -> Vec<f64> {
        m.iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    };
    let mut v = vec![1.0 / (r as f64).sqrt(); r];
    let mut converged = false;
    let mut last = f64::INFINITY;
    for _ in 0..POWER_MAX_ITERS {
        let w = apply(&v);
        let lambda: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
        let resid = w
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt()
            / lambda;
        if converged && resid >= last {
            // round-off floor reached
            break;
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        v = w.into_iter().map(|x| x / norm).collect();
        converged |= resid < POWER_TOL;
        last = resid;
    }
    if !converged {
        return Err(FusionError::NotConverged(POWER_MAX_ITERS));
    }
    if v.iter().any(|&x| x <= 0.0 || !x.is_finite()) {
        return Err(FusionError::NonPositive);
    }
    let d: Vec<f64> = v.iter().map(|x| x / v[0]).collect();
    let mut residual = 0.0f64;
    for i in 0..r {
        for j in 0..r {
            let s: f64 = (0..r).map(|k| ring.n[i][j][k] as f64 * d[k]).sum();
            residual = residual.max((d[i] * d[j] - s).abs());
        }
    }
    let unitary_sane = d
        .iter()
        .all(|&x| (x - 1.0).abs() < 1e-9 || x >= std::f64::consts::SQRT_2 - 1e-9);
    Ok(QDimVector {
        d,
        residual,
        unitary_sane,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_rings_validate() {
        for r in [
            FusionRingData::fibonacci(),
            FusionRingData::ising(),
            FusionRingData::trivial(),
        ] {
            r.validate().unwrap();
            assert!(r.multiplicity_free());
        }
    }

    #[test]
    fn dims_examples() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let f = qdims(&FusionRingData::fibonacci()).unwrap();
        assert!(
            (f.d[1] - phi).abs() < 1e-12 && f.residual < 1e-9 && f.unitary_sane,
            "{f:?}"
        );
        let i = qdims(&FusionRingData::ising()).unwrap();
        assert!((i.d[1] - 2f64.sqrt()).abs() < 1e-12 && (i.d[2] - 1.0).abs() < 1e-12);
        assert_eq!(qdims(&FusionRingData::trivial()).unwrap().d, vec![1.0]);
    }

    #[test]
    fn rejects_broken_rings() {
        let mut r = FusionRingData::fibonacci();
        r.n[1][1][0] = 0;
        assert!(r.validate().is_err());
        let mut r = FusionRingData::ising();
        r.dual = vec![0, 2, 1];
        assert!(r.validate().is_err());
        // τ⊗τ = 1 alone gives Z/2, valid; τ⊗τ = τ alone breaks the dual axiom
        let mut r = FusionRingData::fibonacci();
        r.n[1][1] = vec![1, 0];
        assert!(r.validate().is_ok());
        assert!(FusionRingData::from_json(r#"{"labels":[],"dual":[],"N":[]}"#).is_err());
        assert!(FusionRingData::from_json("{").is_err());
    }

    #[test]
    fn non_associative_rejected() {
        // rank 3, a⊗a = 1 + b, a⊗b = a, b⊗b = 1 + a is not associative
        let r = FusionRingData {
            labels: vec!["1".into(), "a".into(), "b".into()],
            dual: vec![0, 1, 2],
            n: vec![
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]],
                vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 1, 0]],
            ],
        };
        assert!(matches!(r.validate(), Err(FusionError::InvalidRing(_))));
    }

    #[test]
    fn json_round_trip() {
        let r = FusionRingData::ising();
        assert_eq!(FusionRingData::from_json(&r.to_json()).unwrap(), r);
    }
}
