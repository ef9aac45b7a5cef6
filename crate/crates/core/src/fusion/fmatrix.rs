//! Closed-form `F^{qqq}_q` for `q ⊗ q = 1 ⊕ x_1 ⊕ … ⊕ x_k`, `k ≤ 2`, and the
//! identities it must satisfy.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::report::Report;

use super::FusionError;

const DIM_TOL: f64 = 1e-9;
const IDENTITY_TOL: f64 = 1e-10;
const SPECTRUM_TOL: f64 = 1e-9;

/// Which of the two `k = 2` solutions: `R_x R_y = -1` or `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FVariant {
    Dubrovnik,
    Kauffman,
}

impl FVariant {
    pub fn name(self) -> &'static str {
        match self {
            FVariant::Dubrovnik => "dubrovnik",
            FVariant::Kauffman => "kauffman",
        }
    }

    /// Trace of `F` at `k = 2`.
    pub fn trace(self) -> f64 {
        match self {
            FVariant::Dubrovnik => 1.0,
            FVariant::Kauffman => -1.0,
        }
    }
}

impl std::str::FromStr for FVariant {
    type Err = FusionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dubrovnik" => Ok(FVariant::Dubrovnik),
            "kauffman" => Ok(FVariant::Kauffman),
            other => Err(FusionError::UnknownVariant(other.to_string())),
        }
    }
}

/// `F^{qqq}_q` indexed by `{0, x_1, …, x_k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QqqFMatrix {
    dq: f64,
    /// `d_λ` with `d_0 = 1`.
    dl: Vec<f64>,
    kappa: i8,
    variant: Option<FVariant>,
    m: DMatrix<f64>,
}

/// Builds the closed-form matrix. `dims = [d_q, d_{x_1}, …, d_{x_k}]`;
/// `variant` only matters when `k = 2`.
pub fn f_matrix(dims: &[f64], kappa: i8, variant: FVariant) -> Result<QqqFMatrix, FusionError> {
    if kappa != 1 && kappa != -1 {
        return Err(FusionError::BadKappa(kappa));
    }
    let (&dq, xs) = dims.split_first().ok_or(FusionError::UnsupportedRank(0))?;
    let k = xs.len();
    if k > 2 {
        return Err(FusionError::UnsupportedRank(k));
    }
    if dims.iter().any(|&d| !(d.is_finite() && d > 0.0)) {
        return Err(FusionError::NonPositive);
    }
    let excess = dq * dq - 1.0 - xs.iter().sum::<f64>();
    if excess.abs() >= DIM_TOL {
        return Err(FusionError::DimensionConstraint { excess });
    }
    if k == 2 && kappa == -1 {
        return Err(FusionError::AntisymmetricK2);
    }
    let kf = f64::from(kappa);
    let mut dl = vec![1.0];
    dl.extend_from_slice(xs);
    let n = k + 1;
    let mut m = DMatrix::zeros(n, n);
    for l in 0..n {
        m[(0, l)] = kf * dl[l].sqrt() / dq;
        m[(l, 0)] = m[(0, l)];
    }
    match k {
        1 => m[(1, 1)] = -kf / dq,
        2 => {
            let (s, c) = match variant {
                FVariant::Dubrovnik => (-1.0, kf * dq - 1.0),
                FVariant::Kauffman => (1.0, kf * dq + 1.0),
            };
            let den = c * dq;
            for i in 1..3 {
                for j in 1..3 {
                    let v = s * (dl[i] * dl[j]).sqrt() / den;
                    m[(i, j)] = kf * if i == j { v - s } else { v };
                }
            }
        }
        _ => {}
    }
    Ok(QqqFMatrix {
        dq,
        dl,
        kappa,
        variant: (k == 2).then_some(variant),
        m,
    })
}

impl QqqFMatrix {
    pub fn dq(&self) -> f64 {
        self.dq
    }

    /// `d_λ` for `λ ∈ {0, x_1, …}`.
    pub fn label_dims(&self) -> &[f64] {
        &self.dl
    }

    pub fn kappa(&self) -> i8 {
        self.kappa
    }

    pub fn variant(&self) -> Option<FVariant> {
        self.variant
    }

    /// Number of summands in `q ⊗ q`.
    pub fn size(&self) -> usize {
        self.dl.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.size())
            .map(|i| self.m.row(i).iter().copied().collect())
            .collect()
    }

    pub fn trace(&self) -> f64 {
        self.m.trace()
    }

    /// Eigenvalues of the rotation operator `κF`, ascending.
    pub fn rotation_spectrum(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(&self.m * f64::from(self.kappa))
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// `(dim V_1, dim V_{-1})` of `κF`, counted from the spectrum.
    pub fn eigen_multiplicities(&self) -> (usize, usize) {
        let ev = self.rotation_spectrum();
        let plus = ev
            .iter()
            .filter(|e| (*e - 1.0).abs() < SPECTRUM_TOL)
            .count();
        let minus = ev
            .iter()
            .filter(|e| (*e + 1.0).abs() < SPECTRUM_TOL)
            .count();
        (plus, minus)
    }

    /// Checks the closed-form matrix against every identity it must obey.
    pub fn verify(&self) -> Report {
        verify_f_identities(self)
    }
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |a, x| a.max(x.abs()))
}

/// Signed cycle type `(n, b, f)` of a (P1) basis with at most one 2-cycle that
/// realizes the multiplicities `(m_plus, m_minus)`; `None` if none exists.
pub fn cycle_type(m_plus: usize, m_minus: usize) -> Option<(usize, usize, usize)> {
    let n_total = m_plus + m_minus;
    if n_total < 2 {
        // only 1-cycles
        return Some((n_total, m_plus, m_minus));
    }
    let (b, f) = (m_plus.checked_sub(1)?, m_minus.checked_sub(1)?);
    Some((1 + b + f, b, f))
}

/// First row, column sums, symmetry, involutivity, orthogonality, trace bound,
/// spectrum of `κF` and its multiplicities.
pub fn verify_f_identities(f: &QqqFMatrix) -> Report {
    let n = f.size();
    let kf = f64::from(f.kappa);
    let mut r = Report::new(format!(
        "F identities (d_q = {}, kappa = {}{})",
        f.dq,
        f.kappa,
        f.variant
            .map(|v| format!(", {}", v.name()))
            .unwrap_or_default()
    ));
    let row0 = (0..n)
        .map(|l| (f.m[(0, l)] - kf * f.dl[l].sqrt() / f.dq).abs())
        .fold(0.0, f64::max);
    r.numeric("first row f_0l = kappa sqrt(d_l)/d_q", row0, IDENTITY_TOL);
    let colsum = (0..n)
        .map(|l| {
            let s: f64 = (0..n).map(|p| f.dl[p].sqrt() / f.dq * f.m[(p, l)]).sum();
            (kf * s - if l == 0 { 1.0 } else { 0.0 }).abs()
        })
        .fold(0.0, f64::max);
    r.numeric(
        "column sums kappa sum_p sqrt(d_p)/d_q f_pl = delta_l0",
        colsum,
        IDENTITY_TOL,
    );
    r.numeric(
        "real symmetric",
        max_abs(&(&f.m - f.m.transpose())),
        IDENTITY_TOL,
    );
    let id = DMatrix::<f64>::identity(n, n);
    r.numeric(
        "involutive F^2 = I",
        max_abs(&(&f.m * &f.m - &id)),
        IDENTITY_TOL,
    );
    r.numeric(
        "orthogonal F^T F = I",
        max_abs(&(f.m.transpose() * &f.m - &id)),
        IDENTITY_TOL,
    );
    let tr = f.trace();
    r.exact(
        "|trace| < N",
        n == 1 || tr.abs() < n as f64 - IDENTITY_TOL,
        format!("trace {tr:.12}, N = {n}"),
    );
    if let Some(v) = f.variant {
        r.numeric(
            format!("trace = {} ({})", v.trace(), v.name()),
            (tr - v.trace()).abs(),
            IDENTITY_TOL,
        );
    }
    let ev = f.rotation_spectrum();
    let dev = ev.iter().map(|e| (e.abs() - 1.0).abs()).fold(0.0, f64::max);
    r.numeric("spectrum of kappa F in {+1, -1}", dev, SPECTRUM_TOL);
    let (mp, mm) = f.eigen_multiplicities();
    let ktr = kf * tr;
    let expect_p = ((n as f64 + ktr) / 2.0).round() as usize;
    let expect_m = n - expect_p.min(n);
    let mut ok = mp == expect_p && mm == expect_m;
    let mut detail = format!("dim V_1 = {mp}, dim V_-1 = {mm}");
    match cycle_type(mp, mm) {
        Some((cn, b, fneg)) => {
            ok &= cn - fneg == mp && cn - b == mm && 2 * cn - b - fneg == n;
            detail.push_str(&format!(", cycle type n = {cn}, b = {b}, f = {fneg}"));
        }
        None => ok = false,
    }
    if let Some(v) = f.variant {
        let want = match v {
            FVariant::Dubrovnik => (2, 1),
            FVariant::Kauffman => (1, 2),
        };
        ok &= (mp, mm) == want;
    }
    r.exact("eigenvalue multiplicities (n - f, n - b)", ok, detail);
    r
}
