//! Relations between braiding eigenvalues `R^{qq}_λ`, the twist and `d_q`.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::skein::KauffmanVariant;

use super::FusionError;

const TOL: f64 = 1e-9;

fn check_unit(z: Complex64) -> Result<(), FusionError> {
    if (z.norm() - 1.0).abs() >= TOL {
        return Err(FusionError::NotUnit(z.norm()));
    }
    Ok(())
}

fn check_kappa(kappa: i8) -> Result<f64, FusionError> {
    match kappa {
        1 | -1 => Ok(f64::from(kappa)),
        k => Err(FusionError::BadKappa(k)),
    }
}

/// Outcome for `q ⊗ q = 1 ⊕ x` with `R^{qq} = diag(α, β)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct K1Consistency {
    pub alpha: Complex64,
    pub d_q: f64,
    pub theta: Complex64,
    /// `|ϑ - (α + β d_x)/d_q|` with `d_x = d_q² - 1`.
    pub twist_residual: f64,
}

/// `α = -β⁻³`, `d_q = -κ(β² + β⁻²)`, `ϑ = κα⁻¹`.
pub fn skein_consistency_k1(beta: Complex64, kappa: i8) -> Result<K1Consistency, FusionError> {
    check_unit(beta)?;
    let kf = check_kappa(kappa)?;
    let alpha = -beta.powi(-3);
    let dc = -kf * (beta.powi(2) + beta.powi(-2));
    if dc.im.abs() >= TOL || dc.re <= TOL {
        return Err(FusionError::NotPositiveDim(dc.re));
    }
    let d_q = dc.re;
    if (d_q - 1.0).abs() >= TOL && d_q < std::f64::consts::SQRT_2 - TOL {
        return Err(FusionError::ForbiddenDim(d_q));
    }
    let theta = kf * alpha.inv();
    let via_sum = (alpha + beta * (d_q * d_q - 1.0)) / d_q;
    Ok(K1Consistency {
        alpha,
        d_q,
        theta,
        twist_residual: (theta - via_sum).norm(),
    })
}

/// Outcome for `q ⊗ q = 1 ⊕ x ⊕ y` with `R^{qq} = diag(α, β, γ)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum K2Consistency {
    Classified {
        variant: KauffmanVariant,
        d_q: f64,
        /// From `u = κϑ = α⁻¹`: `κ((u ∓ u⁻¹)/(β+γ) ± 1)`.
        d_closed_form: f64,
        /// The case formula with `γ`.
        d_gamma: f64,
        /// The case formula with `β`.
        d_beta: f64,
        theta: Complex64,
    },
    /// `β + γ = 0`: the crossing is `±` its mirror.
    Degenerate {
        relation: &'static str,
        alpha_admissible: bool,
    },
}

/// Classifies `(β, γ)` and computes `d_q` three ways.
///
/// `βγ = -1` gives the Dubrovnik relation, `βγ = +1` the Kauffman one; `κ = -1`
/// selects the twin. For `κ = -1` the horizontal twist `u = κϑ` enters the
/// closed form in place of `ϑ`; with `ϑ = κα⁻¹` this is `u = α⁻¹` throughout.
pub fn skein_consistency_k2(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    kappa: i8,
) -> Result<K2Consistency, FusionError> {
    for z in [alpha, beta, gamma] {
        check_unit(z)?;
    }
    let kf = check_kappa(kappa)?;
    if (beta - gamma).norm() < TOL {
        return Err(FusionError::EqualEigenvalues);
    }
    let bg = beta * gamma;
    let dub = (bg + 1.0).norm() < TOL;
    let kau = (bg - 1.0).norm() < TOL;
    if !dub && !kau {
        return Err(FusionError::NotEigenPair(bg));
    }
    let z = beta + gamma;
    if z.norm() < TOL {
        let (relation, set) = if dub {
            (
                "L+ = L-",
                [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
            )
        } else {
            (
                "L+ = -L-",
                [Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)],
            )
        };
        return Ok(K2Consistency::Degenerate {
            relation,
            alpha_admissible: set.iter().any(|s| (alpha - s).norm() < TOL),
        });
    }
    let u = alpha.inv();
    let theta = kf * u;
    let ai = alpha.inv();
    let (d_closed_form, d_gamma, d_beta) = if dub {
        let th = kf * ((u - u.inv()) / z + 1.0);
        // βγ = -1: untwisted for κ = 1, twin for κ = -1
        let case = |g: Complex64| {
            if kappa == 1 {
                (ai - alpha) / (g - g.inv()) + 1.0
            } else {
                (alpha - ai) / (g - g.inv()) - 1.0
            }
        };
        (th, case(gamma), case(beta))
    } else {
        let th = kf * ((u + u.inv()) / z - 1.0);
        // βγ = 1: untwisted for κ = 1, twin for κ = -1
        let case = |g: Complex64| {
            if kappa == 1 {
                (ai + alpha) / (g + g.inv()) - 1.0
            } else {
                -(ai + alpha) / (g + g.inv()) + 1.0
            }
        };
        (th, case(gamma), case(beta))
    };
    for v in [d_closed_form, d_gamma, d_beta] {
        if v.im.abs() >= TOL {
            return Err(FusionError::NotPositiveDim(v.re));
        }
    }
    let spread = [d_closed_form.re, d_gamma.re, d_beta.re];
    let (lo, hi) = spread
        .iter()
        .fold((f64::MAX, f64::MIN), |(l, h), x| (l.min(*x), h.max(*x)));
    if hi - lo >= TOL {
        return Err(FusionError::Disagree(spread));
    }
    if d_closed_form.re <= TOL {
        return Err(FusionError::NotPositiveDim(d_closed_form.re));
    }
    let variant = match (dub, kappa) {
        (true, 1) => KauffmanVariant::Dubrovnik,
        (false, 1) => KauffmanVariant::Kauffman,
        (true, _) => KauffmanVariant::DubrovnikTwin,
        (false, _) => KauffmanVariant::KauffmanTwin,
    };
    Ok(K2Consistency::Classified {
        variant,
        d_q: d_closed_form.re,
        d_closed_form: d_closed_form.re,
        d_gamma: d_gamma.re,
        d_beta: d_beta.re,
        theta,
    })
}

/// Random `(α, β, γ, κ)` realizing `variant` with `d_q ∈ (1, 5)`.
///
/// Draws `β` on the unit circle, sets `γ = ∓β⁻¹` and solves the variant's
/// case relation for a unit `α`, retrying until one exists.
pub fn random_admissible_k2<R: Rng>(
    rng: &mut R,
    variant: KauffmanVariant,
) -> (Complex64, Complex64, Complex64, i8) {
    let kappa: i8 = if variant.is_twin() { -1 } else { 1 };
    let dub = matches!(
        variant,
        KauffmanVariant::Dubrovnik | KauffmanVariant::DubrovnikTwin
    );
    loop {
        let beta = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
        let gamma = if dub { -beta.inv() } else { beta.inv() };
        let d: f64 = rng.gen_range(1.0..5.0);
        if (beta - gamma).norm() < 1e-3 || (beta + gamma).norm() < 1e-3 || d - 1.0 < 1e-3 {
            continue;
        }
        let pick = |rng: &mut R, part: f64, imaginary: bool| -> Option<Complex64> {
            if part.abs() > 1.0 {
                return None;
            }
            let other = (1.0 - part * part).sqrt() * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            Some(if imaginary {
                Complex64::new(other, part)
            } else {
                Complex64::new(part, other)
            })
        };
        // α⁻¹ - α = -2i Im α and α⁻¹ + α = 2 Re α
        let g = gamma;
        let alpha = match (dub, kappa) {
            // (d - 1)(γ - γ⁻¹) = α⁻¹ - α
            (true, 1) => pick(rng, -((d - 1.0) * (g - g.inv())).im / 2.0, true),
            // (d + 1)(γ - γ⁻¹) = α - α⁻¹
            (true, _) => pick(rng, ((d + 1.0) * (g - g.inv())).im / 2.0, true),
            // (d + 1)(γ + γ⁻¹) = α⁻¹ + α
            (false, 1) => pick(rng, ((d + 1.0) * (g + g.inv())).re / 2.0, false),
            // (1 - d)(γ + γ⁻¹) = α⁻¹ + α
            (false, _) => pick(rng, ((1.0 - d) * (g + g.inv())).re / 2.0, false),
        };
        if let Some(a) = alpha {
            return (a, beta, gamma, kappa);
        }
    }
}
