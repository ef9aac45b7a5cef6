//! Exact multivariate Laurent polynomials over the Gaussian integers.
//!
//! Every skein value in this crate lives in `ℤ[i][x₁^±1, …, x_k^±1]`. Terms are
//! kept in a canonical order (see [`Monomial`]'s `Ord`), which fixes both the text
//! and JSON serializations.

mod gauss;
mod json;
mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;
use smallvec::SmallVec;
use thiserror::Error;

pub use gauss::GaussInt;
pub use json::JsonTerm;
pub use text::ParsePolyError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("variable `{0}` has no assigned value")]
    Unassigned(String),
    #[error("variable `{0}` is assigned zero but occurs with a negative exponent")]
    ZeroAssignment(String),
    #[error("scale must be one of 1, -1, i, -i")]
    NotAUnitScale,
    #[error("power must be 1 or -1")]
    BadPower,
    #[error("`{0}` is not a unit of the Laurent ring")]
    NotInvertible(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("invalid variable name `{0}`")]
    BadVariable(String),
}

/// An interned variable name. Ordering is alphabetical on the name.
#[derive(Clone, Copy)]
pub struct Var(&'static str);

fn interner() -> &'static Mutex<HashSet<&'static str>> {
    static INTERNER: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    INTERNER.get_or_init(|| Mutex::new(HashSet::new()))
}

impl Var {
    /// Interns `name`. Panics on names that are not identifiers or that collide
    /// with the imaginary unit `i`; use [`Var::try_new`] for untrusted input.
    pub fn new(name: &str) -> Var {
        Var::try_new(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(name: &str) -> Result<Var, PolyError> {
        if !is_identifier(name) || name == "i" {
            return Err(PolyError::BadVariable(name.to_string()));
        }
        let mut set = interner().lock().expect("variable interner poisoned");
        if let Some(s) = set.get(name) {
            return Ok(Var(s));
        }
        let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
        set.insert(leaked);
        Ok(Var(leaked))
    }

    pub fn name(&self) -> &'static str {
        self.0
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for Var {
    fn eq(&self, other: &Var) -> bool {
        std::ptr::eq(self.0, other.0) || self.0 == other.0
    }
}
impl Eq for Var {}

impl std::hash::Hash for Var {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Var) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Var {
    fn cmp(&self, other: &Var) -> Ordering {
        if std::ptr::eq(self.0, other.0) {
            Ordering::Equal
        } else {
            self.0.cmp(other.0)
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// A product of variable powers; variables sorted by name, no zero exponents.
///
/// The canonical term order compares monomials variable by variable in
/// alphabetical order, placing the higher exponent first (an absent variable
/// has exponent 0). So `A^2 < 1 < A^-2` and `a^2*z^-1 < a < z^-1`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(SmallVec<[(Var, i64); 3]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, exp: i64) -> Monomial {
        let mut m = Monomial::one();
        if exp != 0 {
            m.0.push((v, exp));
        }
        m
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i64)>) -> Monomial {
        let mut acc: BTreeMap<Var, i64> = BTreeMap::new();
        for (v, e) in pairs {
            let slot = acc.entry(v).or_insert(0);
            *slot = slot.checked_add(e).expect("exponent overflow");
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, i64)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponent(&self, v: Var) -> i64 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1.checked_add(b[j].1)?;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Some(Monomial(out))
    }

    pub fn checked_pow(&self, k: i64) -> Option<Monomial> {
        if k == 0 {
            return Some(Monomial::one());
        }
        let mut out = SmallVec::with_capacity(self.0.len());
        for &(v, e) in &self.0 {
            out.push((v, e.checked_mul(k)?));
        }
        Some(Monomial(out))
    }

    pub fn pow(&self, k: i64) -> Monomial {
        self.checked_pow(k).expect("exponent overflow")
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            let (ea, eb) = match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => {
                    i += 1;
                    (e, 0)
                }
                (None, Some(&(_, e))) => {
                    j += 1;
                    (0, e)
                }
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (ea, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (0, eb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (ea, eb)
                    }
                },
            };
            if ea != eb {
                // higher exponent sorts first
                return eb.cmp(&ea);
            }
        }
    }
}

/// Exact Laurent polynomial with Gaussian-integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, GaussInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(GaussInt::one())
    }

    pub fn constant(c: GaussInt) -> Self {
        LaurentPoly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::constant(GaussInt::from(n))
    }

    /// The imaginary unit as a constant polynomial.
    pub fn i() -> Self {
        LaurentPoly::constant(GaussInt::i())
    }

    pub fn term(c: GaussInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// The single variable `name`.
    pub fn var(name: &str) -> Self {
        LaurentPoly::var_pow(name, 1)
    }

    pub fn var_pow(name: &str, exp: i64) -> Self {
        LaurentPoly::term(GaussInt::one(), Monomial::var(Var::new(name), exp))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn add_term(&mut self, m: Monomial, c: &GaussInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &GaussInt, mono: &Monomial) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), k * c))
                .collect(),
        }
    }

    /// If `self` is `c·m` with `c` a unit of `ℤ[i]`, returns `(c, m)`.
    pub fn as_unit(&self) -> Option<(GaussInt, Monomial)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        c.is_unit().then(|| (c.clone(), m.clone()))
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// Multiplicative inverse; exists only for unit monomials.
    pub fn inverse(&self) -> Result<Self, PolyError> {
        let (c, m) = self
            .as_unit()
            .ok_or_else(|| PolyError::NotInvertible(self.to_string()))?;
        Ok(LaurentPoly::term(
            c.unit_inverse().expect("unit"),
            m.inverse(),
        ))
    }

    /// `self^k`; negative `k` requires `self` to be a unit.
    pub fn pow(&self, k: i64) -> Result<Self, PolyError> {
        self.try_pow(k)
    }

    /// Like [`LaurentPoly::pow`], reporting exponent overflow instead of panicking.
    pub fn try_pow(&self, k: i64) -> Result<Self, PolyError> {
        if k < 0 {
            let k = k.checked_neg().ok_or(PolyError::ExponentOverflow)?;
            return self.inverse()?.try_pow(k);
        }
        if let Some((c, m)) = self.as_unit() {
            let m = m.checked_pow(k).ok_or(PolyError::ExponentOverflow)?;
            return Ok(LaurentPoly::term(c.unit_pow(k).expect("unit"), m));
        }
        if self.is_zero() {
            return Ok(if k == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            });
        }
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Product that reports exponent overflow instead of panicking.
    pub fn try_mul(&self, rhs: &LaurentPoly) -> Result<Self, PolyError> {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.checked_mul(mb).ok_or(PolyError::ExponentOverflow)?;
                out.add_term(m, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Replaces every `var^k` by `scale^k · target^(power·k)`.
    pub fn substitute_scaled(
        &self,
        var: &str,
        scale: &GaussInt,
        target: &str,
        power: i64,
    ) -> Result<Self, PolyError> {
        if !scale.is_unit() {
            return Err(PolyError::NotAUnitScale);
        }
        if power != 1 && power != -1 {
            return Err(PolyError::BadPower);
        }
        let v = Var::try_new(var)?;
        let t = Var::try_new(target)?;
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exponent(v);
            let rest = Monomial(m.iter().filter(|&(w, _)| w != v).collect());
            let mono = rest.mul(&Monomial::var(t, power * k));
            let coeff = c * &scale.unit_pow(k).expect("unit");
            out.add_term(mono, &coeff);
        }
        Ok(out)
    }

    /// Replaces `var` by an arbitrary polynomial. Negative powers of `var` need
    /// `replacement` to be a unit.
    pub fn substitute(&self, var: &str, replacement: &LaurentPoly) -> Result<Self, PolyError> {
        let v = Var::try_new(var)?;
        let mut cache: HashMap<i64, LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exponent(v);
            if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(k) {
                e.insert(replacement.pow(k)?);
            }
            let rest = Monomial(m.iter().filter(|&(w, _)| w != v).collect());
            out = &out + &cache[&k].mul_monomial(c, &rest);
        }
        Ok(out)
    }

    /// Most negative exponent of `var` (0 if none is negative).
    pub fn min_exponent(&self, var: &str) -> i64 {
        let v = Var::new(var);
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .min()
            .unwrap_or(0)
            .min(0)
    }

    /// Floating-point evaluation at the given assignment.
    pub fn eval_complex(
        &self,
        assignment: &HashMap<String, Complex64>,
    ) -> Result<Complex64, PolyError> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let (re, im) = c.to_f64_pair();
            let mut t = Complex64::new(re, im);
            for (v, e) in m.iter() {
                let x = assignment
                    .get(v.name())
                    .ok_or_else(|| PolyError::Unassigned(v.name().to_string()))?;
                if *x == Complex64::new(0.0, 0.0) {
                    if e < 0 {
                        return Err(PolyError::ZeroAssignment(v.name().to_string()));
                    }
                    t = Complex64::new(0.0, 0.0);
                    continue;
                }
                t *= x.powi(i32::try_from(e).map_err(|_| PolyError::ExponentOverflow)?);
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, &c);
        }
        self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl From<GaussInt> for LaurentPoly {
    fn from(c: GaussInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn additive_inverse() {
        assert!((&p("a") + &p("-a")).is_zero());
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("a + a^-1") + &p("a - a^-1"), p("2*a"));
        let dub = p("(a - a^-1)*z^-1 + 1");
        let kauf = p("(a + a^-1)*z^-1 - 1");
        assert_eq!(&dub + &kauf, p("2*a*z^-1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("a + a^-1") * &p("a - a^-1"), p("a^2 - a^-2"));
        assert_eq!(&p("i*A") * &p("i*A"), p("-A^2"));
        let s = p("A + A^-1");
        assert_eq!(&s * &s, p("A^2 + 2 + A^-2"));
    }

    #[test]
    fn substitute_scaled_examples() {
        let i = GaussInt::i();
        assert_eq!(
            p("a^2").substitute_scaled("a", &i, "a", 1).unwrap(),
            p("-a^2")
        );
        assert_eq!(
            p("a + a^-1").substitute_scaled("a", &i, "a", 1).unwrap(),
            p("i*a - i*a^-1")
        );
    }

    #[test]
    fn substitute_scaled_dubrovnik_loop() {
        // a -> i a, z -> -i z applied term by term by hand:
        // a z^-1 -> (i a)(-i z)^-1 = (i / -i) a z^-1 = -a z^-1
        // a^-1 z^-1 -> (-i a^-1)(i z^-1) = a^-1 z^-1
        let dub = p("(a - a^-1)*z^-1 + 1");
        let img = dub
            .substitute_scaled("a", &GaussInt::i(), "a", 1)
            .unwrap()
            .substitute_scaled("z", &GaussInt::new(0, -1), "z", 1)
            .unwrap();
        assert_eq!(img, p("-a*z^-1 - a^-1*z^-1 + 1"));
        // which is minus the Kauffman loop value: the (-1)^c factor of the Lickorish relation
        assert_eq!(img, -p("(a + a^-1)*z^-1 - 1"));
    }

    #[test]
    fn substitute_scaled_rejects_bad_args() {
        assert_eq!(
            p("a").substitute_scaled("a", &GaussInt::from(2), "a", 1),
            Err(PolyError::NotAUnitScale)
        );
        assert_eq!(
            p("a").substitute_scaled("a", &GaussInt::one(), "a", 2),
            Err(PolyError::BadPower)
        );
    }

    #[test]
    fn substitute_general() {
        let k = p("a^2 + z");
        let out = k.substitute("z", &p("A + A^-1")).unwrap();
        assert_eq!(out, p("a^2 + A + A^-1"));
        assert!(p("z^-1").substitute("z", &p("A + A^-1")).is_err());
        assert_eq!(p("z^-1").substitute("z", &p("-A^3")).unwrap(), p("-A^-3"));
    }

    #[test]
    fn eval_examples() {
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 5.0);
        let mut asg = HashMap::new();
        asg.insert("A".to_string(), w);
        let v = p("-A^2 - A^-2").eval_complex(&asg).unwrap();
        assert!((v - Complex64::new((1.0 + 5f64.sqrt()) / 2.0, 0.0)).norm() < 1e-12);
        assert_eq!(p("5").eval_complex(&asg).unwrap(), Complex64::new(5.0, 0.0));
        asg.insert("A".to_string(), Complex64::new(0.0, 2.0));
        assert!(
            (p("A*A^-1").eval_complex(&asg).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-15
        );
    }

    #[test]
    fn eval_errors() {
        let asg = HashMap::new();
        assert_eq!(
            p("b").eval_complex(&asg),
            Err(PolyError::Unassigned("b".into()))
        );
        let mut asg = HashMap::new();
        asg.insert("b".to_string(), Complex64::new(0.0, 0.0));
        assert_eq!(
            p("b^-1").eval_complex(&asg),
            Err(PolyError::ZeroAssignment("b".into()))
        );
    }

    #[test]
    fn inverse_and_pow() {
        assert_eq!(p("-i*a^2*b").inverse().unwrap(), p("i*a^-2*b^-1"));
        assert!(p("a + 1").inverse().is_err());
        assert_eq!(p("a + 1").pow(2).unwrap(), p("a^2 + 2*a + 1"));
        assert_eq!(p("-a").pow(-3).unwrap(), p("-a^-3"));
    }

    #[test]
    fn canonical_order() {
        let q = p("1 + A^-2 + A^2");
        let ms: Vec<String> = q.terms().map(|(m, _)| format!("{m:?}")).collect();
        assert_eq!(q.to_string(), "A^2 + 1 + A^-2");
        assert_eq!(ms.len(), 3);
    }

    #[test]
    fn rejects_imaginary_unit_as_variable() {
        assert!(Var::try_new("i").is_err());
        assert!(Var::try_new("2x").is_err());
    }
}
