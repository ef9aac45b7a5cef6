//! `End(q ⊗ q)` in the unnormalized jack basis `{jack_0 = cupcap, jack_{x_i}}`.
//!
//! Composition: `jack_λ ∘ jack_μ = δ_λμ (d_q/√d_λ) jack_λ`.
//! Closure: `qtrace(jack_λ) = d_q √d_λ`.
//! Rotation: `φ(jack_λ) = bone_λ = κ Σ_ρ f_ρλ jack_ρ`.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use serde::Serialize;

use crate::report::Report;

use super::fmatrix::{FVariant, QqqFMatrix};
use super::FusionError;

const TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EndQ2Element {
    pub dq: f64,
    /// `d_λ` with `d_0 = 1`.
    pub dl: Vec<f64>,
    pub c: Vec<f64>,
}

impl EndQ2Element {
    pub fn zero(dq: f64, dl: &[f64]) -> Self {
        EndQ2Element {
            dq,
            dl: dl.to_vec(),
            c: vec![0.0; dl.len()],
        }
    }

    pub fn zero_like(f: &QqqFMatrix) -> Self {
        Self::zero(f.dq(), f.label_dims())
    }

    pub fn jack(f: &QqqFMatrix, l: usize) -> Self {
        let mut e = Self::zero_like(f);
        e.c[l] = 1.0;
        e
    }

    pub fn cupcap(f: &QqqFMatrix) -> Self {
        Self::jack(f, 0)
    }

    /// `id = Σ_λ (√d_λ/d_q) jack_λ`.
    pub fn identity(f: &QqqFMatrix) -> Self {
        let mut e = Self::zero_like(f);
        for (c, d) in e.c.iter_mut().zip(f.label_dims()) {
            *c = d.sqrt() / f.dq();
        }
        e
    }

    /// Minimal idempotent `P_λ = (√d_λ/d_q) jack_λ`.
    pub fn projector(f: &QqqFMatrix, l: usize) -> Self {
        let mut e = Self::jack(f, l);
        e.c[l] = f.label_dims()[l].sqrt() / f.dq();
        e
    }

    pub fn from_coeffs(f: &QqqFMatrix, c: Vec<f64>) -> Result<Self, FusionError> {
        if c.len() != f.size() {
            return Err(FusionError::DimsMismatch);
        }
        Ok(EndQ2Element {
            dq: f.dq(),
            dl: f.label_dims().to_vec(),
            c,
        })
    }

    fn same_space(&self, o: &EndQ2Element) -> Result<(), FusionError> {
        let eq = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(1.0);
        if self.dl.len() != o.dl.len()
            || !eq(self.dq, o.dq)
            || self.dl.iter().zip(&o.dl).any(|(a, b)| !eq(*a, *b))
        {
            return Err(FusionError::DimsMismatch);
        }
        Ok(())
    }

    fn check_f(&self, f: &QqqFMatrix) -> Result<(), FusionError> {
        self.same_space(&EndQ2Element::zero_like(f))
    }

    pub fn scale(&self, s: f64) -> Self {
        EndQ2Element {
            c: self.c.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    pub fn compose(&self, o: &EndQ2Element) -> Result<Self, FusionError> {
        self.same_space(o)?;
        let c = self
            .c
            .iter()
            .zip(&o.c)
            .zip(&self.dl)
            .map(|((a, b), d)| a * b * self.dq / d.sqrt())
            .collect();
        Ok(EndQ2Element { c, ..self.clone() })
    }

    /// Closure of the element: `Σ_λ c_λ d_q √d_λ`.
    pub fn qtrace(&self) -> f64 {
        self.c
            .iter()
            .zip(&self.dl)
            .map(|(c, d)| c * self.dq * d.sqrt())
            .sum()
    }

    /// `qtrace(x ∘ y)`, the trace pairing.
    pub fn pairing(&self, o: &EndQ2Element) -> Result<f64, FusionError> {
        Ok(self.compose(o)?.qtrace())
    }

    /// The π/2 rotation: `κF` acting on jack coordinates.
    pub fn rotate(&self, f: &QqqFMatrix) -> Result<Self, FusionError> {
        self.check_f(f)?;
        let kf = f64::from(f.kappa());
        let n = self.c.len();
        let c = (0..n)
            .map(|r| kf * (0..n).map(|l| f.get(r, l) * self.c[l]).sum::<f64>())
            .collect();
        Ok(EndQ2Element { c, ..self.clone() })
    }

    pub fn max_abs_diff(&self, o: &EndQ2Element) -> f64 {
        self.c
            .iter()
            .zip(&o.c)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn norm(&self) -> f64 {
        self.c.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

macro_rules! linear_op {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for &EndQ2Element {
            type Output = EndQ2Element;
            fn $m(self, o: &EndQ2Element) -> EndQ2Element {
                assert_eq!(self.c.len(), o.c.len(), "elements of different spaces");
                EndQ2Element {
                    c: self.c.iter().zip(&o.c).map(|(a, b)| a $op b).collect(),
                    ..self.clone()
                }
            }
        }
        impl $tr for EndQ2Element {
            type Output = EndQ2Element;
            fn $m(self, o: EndQ2Element) -> EndQ2Element {
                (&self).$m(&o)
            }
        }
    };
}
linear_op!(Add, add, +);
linear_op!(Sub, sub, -);

impl Neg for EndQ2Element {
    type Output = EndQ2Element;
    fn neg(self) -> EndQ2Element {
        self.scale(-1.0)
    }
}

impl Mul<&EndQ2Element> for f64 {
    type Output = EndQ2Element;
    fn mul(self, e: &EndQ2Element) -> EndQ2Element {
        e.scale(self)
    }
}

/// `bone_λ = κ Σ_ρ f_ρλ jack_ρ`; for `λ = 0` this is the identity.
pub fn bone_in_jacks(lambda: usize, f: &QqqFMatrix) -> Result<EndQ2Element, FusionError> {
    if lambda >= f.size() {
        return Err(FusionError::BadLabel(lambda));
    }
    EndQ2Element::jack(f, lambda).rotate(f)
}

/// `qtrace(bone_j ∘ jack_i)`; equals `κ d_q² f_ij`.
pub fn pretzel(f: &QqqFMatrix, i: usize, j: usize) -> Result<f64, FusionError> {
    Ok(bone_in_jacks(j, f)?
        .compose(&EndQ2Element::jack(f, i))?
        .qtrace())
}

/// `ν^{xy}_z = (d_z/(d_x d_y))^{1/4}` and `Θ(x,y,z) = √(d_x d_y d_z)`.
pub fn vertex_normalization(dx: f64, dy: f64, dz: f64) -> (f64, f64) {
    ((dz / (dx * dy)).powf(0.25), (dx * dy * dz).sqrt())
}

/// `J_λ = jack_λ + bone_λ`.
pub fn jj(f: &QqqFMatrix, l: usize) -> Result<EndQ2Element, FusionError> {
    Ok(EndQ2Element::jack(f, l) + bone_in_jacks(l, f)?)
}

/// `J'_λ = bone_λ - jack_λ`.
pub fn jj_dual(f: &QqqFMatrix, l: usize) -> Result<EndQ2Element, FusionError> {
    Ok(bone_in_jacks(l, f)? - EndQ2Element::jack(f, l))
}

/// `(J⁺_{xy}, J⁻_{xy}) = √d_x J_x ± √d_y J'_y`.
pub fn jj_pm(
    f: &QqqFMatrix,
    x: usize,
    y: usize,
) -> Result<(EndQ2Element, EndQ2Element), FusionError> {
    let (dx, dy) = (f.label_dims()[x].sqrt(), f.label_dims()[y].sqrt());
    let a = jj(f, x)?.scale(dx);
    let b = jj_dual(f, y)?.scale(dy);
    Ok((&a + &b, &a - &b))
}

/// Determinant of the Gram matrix of the unit-normalized vectors under the
/// trace pairing; 1 for orthogonal sets, 0 for dependent ones.
pub fn gram_determinant(v: &[EndQ2Element]) -> Result<f64, FusionError> {
    let n = v.len();
    let mut g = DMatrix::zeros(n, n);
    let norms = v
        .iter()
        .map(|x| x.pairing(x).map(f64::sqrt))
        .collect::<Result<Vec<_>, _>>()?;
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = v[i].pairing(&v[j])? / (norms[i] * norms[j]);
        }
    }
    Ok(g.determinant())
}

/// Rank of a set of elements, via singular values above `1e-9`.
pub fn span_rank(v: &[EndQ2Element]) -> usize {
    if v.is_empty() {
        return 0;
    }
    let rows = v[0].c.len();
    let m = DMatrix::from_fn(rows, v.len(), |r, c| {
        v[c].c[r] / v[c].norm().max(f64::MIN_POSITIVE)
    });
    m.singular_values().iter().filter(|s| **s > 1e-9).count()
}

/// Builds `J±_{xy}` and the three-element bases for a `k = 2` matrix and
/// checks independence, `φ(J⁺) = J⁻`, the eigenspace spans, their
/// dimensions, and the `x ↔ y` swap.
pub fn new_bases(f: &QqqFMatrix) -> Result<Report, FusionError> {
    let variant = f
        .variant()
        .ok_or(FusionError::UnsupportedRank(f.size() - 1))?;
    let mut r = Report::new(format!("new bases of End(q^2) ({})", variant.name()));
    for (x, y, tag) in [(1, 2, "x,y"), (2, 1, "y,x")] {
        let (jp, jm) = jj_pm(f, x, y)?;
        let id = EndQ2Element::identity(f);
        let cc = EndQ2Element::cupcap(f);
        let (third, third_name) = match variant {
            FVariant::Dubrovnik => (&id + &cc, "id + cupcap"),
            FVariant::Kauffman => (&id - &cc, "id - cupcap"),
        };
        let g2 = gram_determinant(&[jp.clone(), jm.clone()])?;
        r.exact(
            format!("[{tag}] J+ and J- linearly independent"),
            g2 > 1e-6,
            format!("normalized Gram determinant {g2:.6e}"),
        );
        r.numeric(
            format!("[{tag}] rotate(J+) = J-"),
            jp.rotate(f)?.max_abs_diff(&jm),
            TOL,
        );
        r.numeric(
            format!("[{tag}] rotate(J-) = J+"),
            jm.rotate(f)?.max_abs_diff(&jp),
            TOL,
        );
        let basis = [jp.clone(), jm.clone(), third.clone()];
        let g3 = gram_determinant(&basis)?;
        r.exact(
            format!("[{tag}] {{J+, J-, {third_name}}} is a basis"),
            g3 > 1e-6,
            format!("normalized Gram determinant {g3:.6e}"),
        );
        let jx = jj(f, x)?;
        let jdy = jj_dual(f, y)?;
        let (v1, vm1): (Vec<EndQ2Element>, Vec<EndQ2Element>) = match variant {
            FVariant::Dubrovnik => (vec![jx, third], vec![jdy]),
            FVariant::Kauffman => (vec![jx], vec![jdy, third]),
        };
        let fix = v1
            .iter()
            .map(|e| e.rotate(f).map(|re| re.max_abs_diff(e)))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .fold(0.0, f64::max);
        let neg = vm1
            .iter()
            .map(|e| e.rotate(f).map(|re| re.max_abs_diff(&e.scale(-1.0))))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .fold(0.0, f64::max);
        r.numeric(
            format!("[{tag}] rotate fixes the V_1 spanning set"),
            fix,
            TOL,
        );
        r.numeric(
            format!("[{tag}] rotate negates the V_-1 spanning set"),
            neg,
            TOL,
        );
        let dims = (span_rank(&v1), span_rank(&vm1));
        let spectral = f.eigen_multiplicities();
        let want = match variant {
            FVariant::Dubrovnik => (2, 1),
            FVariant::Kauffman => (1, 2),
        };
        // the basis action: J+ <-> J- is the 2-cycle, the third element a signed 1-cycle
        let (b, fneg) = match variant {
            FVariant::Dubrovnik => (1, 0),
            FVariant::Kauffman => (0, 1),
        };
        let n = 2;
        r.exact(
            format!("[{tag}] eigenspace dims"),
            dims == want && spectral == want && (n - fneg, n - b) == want,
            format!(
                "spans {dims:?}, spectrum {spectral:?}, (n - f, n - b) = ({}, {})",
                n - fneg,
                n - b
            ),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::super::fmatrix::f_matrix;
    use super::*;

    fn fib() -> QqqFMatrix {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        f_matrix(&[phi, phi], 1, FVariant::Dubrovnik).unwrap()
    }

    fn d221(v: FVariant) -> QqqFMatrix {
        f_matrix(&[2.0, 2.0, 1.0], 1, v).unwrap()
    }

    #[test]
    fn cupcap_squares_to_loop() {
        let f = fib();
        let cc = EndQ2Element::cupcap(&f);
        assert!(cc.compose(&cc).unwrap().max_abs_diff(&cc.scale(f.dq())) < 1e-14);
        assert!((cc.qtrace() - f.dq()).abs() < 1e-14);
    }

    #[test]
    fn projectors() {
        let f = d221(FVariant::Dubrovnik);
        for l in 0..3 {
            let p = EndQ2Element::projector(&f, l);
            assert!(p.compose(&p).unwrap().max_abs_diff(&p) < 1e-14);
            assert!((p.qtrace() - f.label_dims()[l]).abs() < 1e-14);
        }
        let jx = EndQ2Element::jack(&f, 1);
        let jy = EndQ2Element::jack(&f, 2);
        assert_eq!(jx.compose(&jy).unwrap().norm(), 0.0);
        assert!((EndQ2Element::identity(&f).qtrace() - 4.0).abs() < 1e-14);
    }

    #[test]
    fn rotation_swaps_identity_and_cupcap() {
        for f in [fib(), d221(FVariant::Dubrovnik), d221(FVariant::Kauffman)] {
            let id = EndQ2Element::identity(&f);
            let cc = EndQ2Element::cupcap(&f);
            assert!(cc.rotate(&f).unwrap().max_abs_diff(&id) < 1e-14);
            assert!(id.rotate(&f).unwrap().max_abs_diff(&cc) < 1e-14);
            assert!(bone_in_jacks(0, &f).unwrap().max_abs_diff(&id) < 1e-14);
        }
    }

    #[test]
    fn bone_examples() {
        let f = fib();
        let b0 = bone_in_jacks(0, &f).unwrap();
        assert!((b0.c[0] - 1.0 / f.dq()).abs() < 1e-14);
        assert!((b0.c[1] - f.label_dims()[1].sqrt() / f.dq()).abs() < 1e-14);
        let s = f_matrix(&[2f64.sqrt(), 1.0], 1, FVariant::Dubrovnik).unwrap();
        let bx = bone_in_jacks(1, &s).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert!((bx.c[0] - h).abs() < 1e-14 && (bx.c[1] + h).abs() < 1e-14);
        let bx = bone_in_jacks(1, &d221(FVariant::Dubrovnik)).unwrap();
        let h = 2f64.sqrt() / 2.0;
        assert!(
            (bx.c[0] - h).abs() < 1e-14 && bx.c[1].abs() < 1e-14 && (bx.c[2] + h).abs() < 1e-14
        );
        assert!(bone_in_jacks(5, &f).is_err());
    }

    #[test]
    fn pretzel_matches_f() {
        let f = d221(FVariant::Kauffman);
        for i in 0..3 {
            for j in 0..3 {
                let p = pretzel(&f, i, j).unwrap();
                assert!((p - 4.0 * f.get(i, j)).abs() < 1e-12);
                assert!((p - pretzel(&f, j, i).unwrap()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn dims_mismatch() {
        let a = EndQ2Element::identity(&fib());
        let b = EndQ2Element::identity(&d221(FVariant::Dubrovnik));
        assert_eq!(a.compose(&b), Err(FusionError::DimsMismatch));
        assert!(a.rotate(&d221(FVariant::Dubrovnik)).is_err());
    }

    #[test]
    fn new_bases_both_variants() {
        for v in [FVariant::Dubrovnik, FVariant::Kauffman] {
            let r = new_bases(&d221(v)).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(new_bases(&fib()).is_err());
    }

    #[test]
    fn wrong_third_element_is_dependent() {
        // id - cupcap and J'_y both span V_-1, and J'_y is (J+ - J-)/(2√d_y)
        let f = d221(FVariant::Dubrovnik);
        let (jp, jm) = jj_pm(&f, 1, 2).unwrap();
        let id = EndQ2Element::identity(&f);
        let cc = EndQ2Element::cupcap(&f);
        let g = gram_determinant(&[jp, jm, &id - &cc]).unwrap();
        assert!(g.abs() < 1e-9, "{g}");
    }

    #[test]
    fn normalization_identity() {
        let (nu, theta) = vertex_normalization(2.0, 3.0, 5.0);
        assert!((nu * nu * theta - 5.0).abs() < 1e-12);
    }
}
