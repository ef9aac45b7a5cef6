//! Skein evaluators: the two-term bracket family, the four-term
//! Dubrovnik/Kauffman family, the trivial `α^w` invariants, and cross-checks.
//!
//! Every evaluator maps a closed loop to its loop value δ rather than 1.

mod bracket;
mod fourterm;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::{DiagramError, MorseDiagram};
use crate::laurent::{GaussInt, LaurentPoly, PolyError};
use crate::report::Report;

pub use bracket::{state_counts, two_term_state_sum, BracketParams, STATE_SUM_MAX_CROSSINGS};
pub use fourterm::{kauffman_poly, FourTermEvaluator, KauffmanVariant, Strategy, DEFAULT_CAP};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SkeinError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{crossings} crossings exceed the recursion cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error("{crossings} crossings exceed the state-sum limit of {max}")]
    TooManyCrossings { crossings: usize, max: usize },
    #[error("alpha must be one of 1, -1, i, -i")]
    NotFourthRoot,
    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),
}

/// `α^{local writhe}`: every crossing collapses to `α^{±1}` times a smoothing
/// and every loop is worth 1.
pub fn trivial_eval(d: &MorseDiagram, alpha: &GaussInt) -> Result<GaussInt, SkeinError> {
    d.ensure_closed()?;
    alpha
        .unit_pow(d.local_writhe())
        .ok_or(SkeinError::NotFourthRoot)
}

/// `val · a^{-w}`: removes the framing dependence of a framed value.
pub fn normalize_writhe(val: &LaurentPoly, w: i64) -> LaurentPoly {
    val * &LaurentPoly::var_pow("a", -w)
}

/// An evaluator selected by name.
#[derive(Debug, Clone, PartialEq)]
pub enum Invariant {
    Bracket,
    BracketTwin,
    HomflyFramed,
    Kauffman(KauffmanVariant),
    Trivial(GaussInt),
}

impl Invariant {
    /// Names accepted by [`Invariant::from_str`].
    pub const NAMES: [&'static str; 8] = [
        "bracket",
        "bracket-twin",
        "homfly-framed",
        "dubrovnik",
        "kauffman",
        "dubrovnik-twin",
        "kauffman-twin",
        "trivial:+1|-1|+i|-i",
    ];

    /// Twin four-term evaluators rest on an open conjecture for k=2.
    pub fn is_experimental(&self) -> bool {
        matches!(self, Invariant::Kauffman(v) if v.is_twin())
    }

    pub fn evaluate(&self, d: &MorseDiagram, cap: usize) -> Result<LaurentPoly, SkeinError> {
        match self {
            Invariant::Bracket => two_term_state_sum(d, &BracketParams::bracket()),
            Invariant::BracketTwin => two_term_state_sum(d, &BracketParams::twin()),
            Invariant::HomflyFramed => two_term_state_sum(d, &BracketParams::homfly()),
            Invariant::Kauffman(v) => FourTermEvaluator::new(*v).with_cap(cap).eval(d),
            Invariant::Trivial(alpha) => Ok(LaurentPoly::constant(trivial_eval(d, alpha)?)),
        }
    }
}

impl FromStr for Invariant {
    type Err = SkeinError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "bracket" => Invariant::Bracket,
            "bracket-twin" => Invariant::BracketTwin,
            "homfly-framed" => Invariant::HomflyFramed,
            "dubrovnik" => Invariant::Kauffman(KauffmanVariant::Dubrovnik),
            "kauffman" => Invariant::Kauffman(KauffmanVariant::Kauffman),
            "dubrovnik-twin" => Invariant::Kauffman(KauffmanVariant::DubrovnikTwin),
            "kauffman-twin" => Invariant::Kauffman(KauffmanVariant::KauffmanTwin),
            "trivial:+1" | "trivial:1" => Invariant::Trivial(GaussInt::from(1)),
            "trivial:-1" => Invariant::Trivial(GaussInt::from(-1)),
            "trivial:+i" | "trivial:i" => Invariant::Trivial(GaussInt::i()),
            "trivial:-i" => Invariant::Trivial(GaussInt::new(0, -1)),
            other => return Err(SkeinError::UnknownInvariant(other.to_string())),
        })
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::Bracket => f.write_str("bracket"),
            Invariant::BracketTwin => f.write_str("bracket-twin"),
            Invariant::HomflyFramed => f.write_str("homfly-framed"),
            Invariant::Kauffman(v) => f.write_str(v.name()),
            Invariant::Trivial(a) => {
                let s = match a.to_string().as_str() {
                    "1" => "+1".to_string(),
                    "i" => "+i".to_string(),
                    other => other.to_string(),
                };
                write!(f, "trivial:{s}")
            }
        }
    }
}

/// Right-hand side of the Lickorish relation:
/// `i^{-w} (-1)^c · Kauffman(D)(i a, -i z)` with `w` the oriented writhe.
pub fn lickorish_rhs(d: &MorseDiagram, kauffman: &LaurentPoly) -> Result<LaurentPoly, SkeinError> {
    let w = d.oriented_writhe()?;
    let c = d.component_count()? as i64;
    let img = kauffman
        .substitute_scaled("a", &GaussInt::i(), "a", 1)?
        .substitute_scaled("z", &GaussInt::new(0, -1), "z", 1)?;
    let sign = GaussInt::i_pow(-w) * GaussInt::from(if c % 2 == 0 { 1 } else { -1 });
    Ok(img.scale(&sign))
}

/// Compares the Dubrovnik value with the transformed Kauffman value.
pub fn lickorish_check(d: &MorseDiagram) -> Result<Report, SkeinError> {
    let mut r = Report::new(format!("lickorish relation on {d}"));
    let dub = kauffman_poly(d, KauffmanVariant::Dubrovnik)?;
    let kauf = kauffman_poly(d, KauffmanVariant::Kauffman)?;
    let rhs = lickorish_rhs(d, &kauf)?;
    let ok = dub == rhs;
    r.exact(
        "dubrovnik = i^-w (-1)^c kauffman(ia, -iz)",
        ok,
        if ok {
            String::new()
        } else {
            format!("lhs {dub}, rhs {rhs}")
        },
    );
    Ok(r)
}

/// Checks `Kauffman(D)(-A³, A + A⁻¹) = ⟨D⟩`, clearing the `z` denominators
/// on both sides.
pub fn specialization_check(d: &MorseDiagram, kauffman: &LaurentPoly) -> Result<bool, SkeinError> {
    let bracket = two_term_state_sum(d, &BracketParams::bracket())?;
    let n = -kauffman.min_exponent("z");
    let cleared = kauffman * &LaurentPoly::var_pow("z", n);
    let a = -LaurentPoly::var_pow("A", 3);
    let z = &LaurentPoly::var("A") + &LaurentPoly::var_pow("A", -1);
    let lhs = cleared.substitute("a", &a)?.substitute("z", &z)?;
    let rhs = &bracket * &z.pow(n)?;
    Ok(lhs == rhs)
}

/// For each `(D, D', k)`, checks `twin(D') = (-1)^k twin(D)` exactly.
pub fn twin_sign_check(pairs: &[(MorseDiagram, MorseDiagram, i64)]) -> Result<Report, SkeinError> {
    let mut r = Report::new("twin bracket sign behaviour under framed isotopy");
    let prm = BracketParams::twin();
    for (i, (d, d2, k)) in pairs.iter().enumerate() {
        let v = two_term_state_sum(d, &prm)?;
        let v2 = two_term_state_sum(d2, &prm)?;
        let expect = if k.rem_euclid(2) == 0 {
            v.clone()
        } else {
            -v.clone()
        };
        let ok = v2 == expect;
        r.exact(
            format!("pair {i} (k = {k})"),
            ok,
            if ok {
                String::new()
            } else {
                format!("{d} -> {v}; {d2} -> {v2}")
            },
        );
    }
    Ok(r)
}
