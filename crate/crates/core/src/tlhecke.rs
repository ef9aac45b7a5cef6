//! Temperley-Lieb algebra TL_n(δ) on noncrossing pairings, the braid
//! representation σ_i ↦ a + b·U_i, and Markov-trace closure.
//!
//! Multiplication stacks top to bottom: `x.mul(y)` draws `x` above `y`. Braid
//! words read the same way, first letter at the top.
//!
//! Boundary labels in JSON are 1-based and circular: top points `1..n` left to
//! right, then bottom points `n+1..2n` right to left. So in TL_2 the identity is
//! `[[1,4],[2,3]]` and `U_1` is `[[1,2],[3,4]]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::BraidWord;
use crate::laurent::{LaurentPoly, PolyError};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TlError {
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("braid weight is not invertible: {0}")]
    NotInvertible(#[from] PolyError),
    #[error("invalid pairing: {0}")]
    BadPairing(String),
}

/// A noncrossing perfect matching of `n` top and `n` bottom points.
/// Index `i < n` is top point `i`, index `n + i` is bottom point `i`, both
/// counted from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarPairing {
    n: usize,
    partner: Vec<usize>,
}

impl PlanarPairing {
    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0; 2 * n];
        for i in 0..n {
            partner[i] = n + i;
            partner[n + i] = i;
        }
        PlanarPairing { n, partner }
    }

    /// The generator `U_i` (1-based `i`, `1 ≤ i < n`).
    pub fn u(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "U_{i} needs 1 <= i < {n}");
        let mut p = PlanarPairing::identity(n);
        let (l, r) = (i - 1, i);
        p.partner[l] = r;
        p.partner[r] = l;
        p.partner[n + l] = n + r;
        p.partner[n + r] = n + l;
        p
    }

    pub fn from_partner(n: usize, partner: Vec<usize>) -> Result<Self, TlError> {
        let p = PlanarPairing { n, partner };
        p.validate()?;
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, idx: usize) -> usize {
        self.partner[idx]
    }

    fn circular(&self, idx: usize) -> usize {
        if idx < self.n {
            idx
        } else {
            3 * self.n - 1 - idx
        }
    }

    fn from_circular(n: usize, c: usize) -> usize {
        if c < n {
            c
        } else {
            3 * n - 1 - c
        }
    }

    fn validate(&self) -> Result<(), TlError> {
        let m = 2 * self.n;
        if self.partner.len() != m {
            return Err(TlError::BadPairing(format!("expected {m} points")));
        }
        for (i, &j) in self.partner.iter().enumerate() {
            if j >= m || j == i || self.partner[j] != i {
                return Err(TlError::BadPairing("not a perfect matching".into()));
            }
        }
        // noncrossing: in circular order the pairs nest like parentheses
        let mut stack = Vec::new();
        for c in 0..m {
            let idx = PlanarPairing::from_circular(self.n, c);
            let mate = self.circular(self.partner[idx]);
            if mate > c {
                stack.push(c);
            } else if stack.pop() != Some(mate) {
                return Err(TlError::BadPairing("pairs cross".into()));
            }
        }
        Ok(())
    }

    /// All noncrossing pairings on `2n` points; there are Catalan(n) of them.
    pub fn enumerate(n: usize) -> Vec<PlanarPairing> {
        fn rec(
            lo: usize,
            hi: usize,
            acc: &mut Vec<(usize, usize)>,
            out: &mut Vec<Vec<(usize, usize)>>,
            rest: &mut Vec<(usize, usize)>,
        ) {
            // matches points lo..hi (circular), then continues with `rest` ranges
            if lo >= hi {
                match rest.pop() {
                    None => out.push(acc.clone()),
                    Some((l, h)) => {
                        rec(l, h, acc, out, rest);
                        rest.push((l, h));
                    }
                }
                return;
            }
            let mut k = lo + 1;
            while k < hi {
                acc.push((lo, k));
                rest.push((k + 1, hi));
                rec(lo + 1, k, acc, out, rest);
                rest.pop();
                acc.pop();
                k += 2;
            }
        }
        let mut out = Vec::new();
        rec(0, 2 * n, &mut Vec::new(), &mut out, &mut Vec::new());
        out.into_iter()
            .map(|pairs| {
                let mut partner = vec![0; 2 * n];
                for (a, b) in pairs {
                    let (x, y) = (Self::from_circular(n, a), Self::from_circular(n, b));
                    partner[x] = y;
                    partner[y] = x;
                }
                PlanarPairing { n, partner }
            })
            .collect()
    }

    /// Stack `self` on top of `other`: the resulting pairing and the number
    /// of closed loops formed in the middle.
    pub fn stack(&self, other: &PlanarPairing) -> (PlanarPairing, usize) {
        let n = self.n;
        debug_assert_eq!(n, other.n);
        let mut partner = vec![usize::MAX; 2 * n];
        let mut mid_seen = vec![false; n];
        // follow a path from an outer point; outer = self top (i) or other bottom (n+i)
        let follow = |start_top: bool, i: usize, mid_seen: &mut Vec<bool>| -> usize {
            // (in_self, idx) where idx indexes that pairing's points
            let (mut in_self, mut idx) = if start_top { (true, i) } else { (false, n + i) };
            loop {
                let pairing = if in_self { self } else { other };
                let j = pairing.partner[idx];
                if in_self {
                    if j < n {
                        return j;
                    }
                    mid_seen[j - n] = true;
                    in_self = false;
                    idx = j - n;
                } else {
                    if j >= n {
                        return j;
                    }
                    mid_seen[j] = true;
                    in_self = true;
                    idx = n + j;
                }
            }
        };
        for i in 0..n {
            if partner[i] == usize::MAX {
                let end = follow(true, i, &mut mid_seen);
                partner[i] = end;
                partner[end] = i;
            }
            if partner[n + i] == usize::MAX {
                let end = follow(false, i, &mut mid_seen);
                partner[n + i] = end;
                partner[end] = n + i;
            }
        }
        let mut loops = 0;
        for m in 0..n {
            if mid_seen[m] {
                continue;
            }
            loops += 1;
            // alternate: self bottom m -> self partner (a middle point) -> other top -> ...
            let mut cur = m;
            loop {
                mid_seen[cur] = true;
                let a = self.partner[n + cur] - n;
                mid_seen[a] = true;
                let b = other.partner[a];
                if b == m {
                    break;
                }
                cur = b;
            }
        }
        (PlanarPairing { n, partner }, loops)
    }

    /// Loops formed by joining top `i` to bottom `i` for every `i`.
    pub fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut cur = s;
            loop {
                seen[cur] = true;
                let mate = self.partner[cur];
                seen[mate] = true;
                // through the closure arc
                let next = if mate < n { mate + n } else { mate - n };
                if next == s {
                    break;
                }
                cur = next;
            }
        }
        loops
    }

    /// 1-based circular label pairs, each sorted, listed by first label.
    pub fn to_labels(&self) -> Vec<[usize; 2]> {
        let mut out: Vec<[usize; 2]> = (0..2 * self.n)
            .filter_map(|i| {
                let (a, b) = (self.circular(i) + 1, self.circular(self.partner[i]) + 1);
                (a < b).then_some([a, b])
            })
            .collect();
        out.sort();
        out
    }

    pub fn from_labels(n: usize, pairs: &[[usize; 2]]) -> Result<Self, TlError> {
        let mut partner = vec![usize::MAX; 2 * n];
        if pairs.len() != n {
            return Err(TlError::BadPairing(format!("expected {n} pairs")));
        }
        for &[a, b] in pairs {
            if a == 0 || b == 0 || a > 2 * n || b > 2 * n {
                return Err(TlError::BadPairing(format!(
                    "label out of range in [{a},{b}]"
                )));
            }
            let (x, y) = (Self::from_circular(n, a - 1), Self::from_circular(n, b - 1));
            if partner[x] != usize::MAX || partner[y] != usize::MAX || x == y {
                return Err(TlError::BadPairing("point matched twice".into()));
            }
            partner[x] = y;
            partner[y] = x;
        }
        PlanarPairing::from_partner(n, partner)
    }
}

/// Number of basis pairings of TL_n, by enumeration.
pub fn tl_dim(n: usize) -> usize {
    PlanarPairing::enumerate(n).len()
}

/// A linear combination of pairings with Laurent coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    combo: BTreeMap<PlanarPairing, LaurentPoly>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TlTermJson {
    pub pairing: Vec<[usize; 2]>,
    pub coeff: LaurentPoly,
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        TLElement {
            n,
            combo: BTreeMap::new(),
        }
    }

    pub fn basis(p: PlanarPairing) -> Self {
        TLElement::term(p, LaurentPoly::one())
    }

    pub fn term(p: PlanarPairing, c: LaurentPoly) -> Self {
        let mut e = TLElement::zero(p.n);
        e.add_term(p, c);
        e
    }

    pub fn identity(n: usize) -> Self {
        TLElement::basis(PlanarPairing::identity(n))
    }

    pub fn u(n: usize, i: usize) -> Self {
        TLElement::basis(PlanarPairing::u(n, i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarPairing, &LaurentPoly)> {
        self.combo.iter()
    }

    pub fn coefficient(&self, p: &PlanarPairing) -> LaurentPoly {
        self.combo.get(p).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, p: PlanarPairing, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.combo.entry(p.clone()).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.combo.remove(&p);
        }
    }

    pub fn add(&self, other: &TLElement) -> Result<TLElement, TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (p, c) in &other.combo {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TLElement) -> Result<TLElement, TlError> {
        self.add(&other.scale(&LaurentPoly::int(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> TLElement {
        let mut out = TLElement::zero(self.n);
        for (p, k) in &self.combo {
            out.add_term(p.clone(), k * c);
        }
        out
    }

    /// `self` stacked on top of `other`; each closed loop contributes `delta`.
    pub fn mul(&self, other: &TLElement, delta: &LaurentPoly) -> Result<TLElement, TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch(self.n, other.n));
        }
        let mut by_loops: BTreeMap<(PlanarPairing, usize), LaurentPoly> = BTreeMap::new();
        for (p, cp) in &self.combo {
            for (q, cq) in &other.combo {
                let (r, loops) = p.stack(q);
                let slot = by_loops.entry((r, loops)).or_default();
                *slot = &*slot + &(cp * cq);
            }
        }
        let mut powers: Vec<LaurentPoly> = vec![LaurentPoly::one()];
        let mut out = TLElement::zero(self.n);
        for ((r, loops), c) in by_loops {
            while powers.len() <= loops {
                let next = powers.last().expect("nonempty") * delta;
                powers.push(next);
            }
            out.add_term(r, &c * &powers[loops]);
        }
        Ok(out)
    }

    /// Markov-trace closure: `Σ coeff · delta^loops`.
    pub fn trace_closure(&self, delta: &LaurentPoly) -> LaurentPoly {
        let mut counts: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (p, c) in &self.combo {
            let slot = counts.entry(p.closure_loops()).or_default();
            *slot = &*slot + c;
        }
        counts
            .into_iter()
            .map(|(l, c)| &c * &delta.pow(l as i64).expect("nonnegative power"))
            .sum()
    }

    pub fn to_json_terms(&self) -> Vec<TlTermJson> {
        self.combo
            .iter()
            .map(|(p, c)| TlTermJson {
                pairing: p.to_labels(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(n: usize, terms: &[TlTermJson]) -> Result<TLElement, TlError> {
        let mut out = TLElement::zero(n);
        for t in terms {
            out.add_term(PlanarPairing::from_labels(n, &t.pairing)?, t.coeff.clone());
        }
        Ok(out)
    }
}

/// Image of one braid letter: `a + bb·U` for σ, `a⁻¹ + bb⁻¹·U` for σ⁻¹.
pub fn zeta_letter(
    n: usize,
    g: i64,
    a: &LaurentPoly,
    bb: &LaurentPoly,
) -> Result<TLElement, TlError> {
    let i = g.unsigned_abs() as usize;
    let (x, y) = if g > 0 {
        (a.clone(), bb.clone())
    } else {
        (a.inverse()?, bb.inverse()?)
    };
    TLElement::term(PlanarPairing::identity(n), x).add(&TLElement::term(PlanarPairing::u(n, i), y))
}

/// ζ(b): the product of letter images in word order.
pub fn zeta(
    b: &BraidWord,
    a: &LaurentPoly,
    bb: &LaurentPoly,
    delta: &LaurentPoly,
) -> Result<TLElement, TlError> {
    a.inverse()?;
    bb.inverse()?;
    let n = b.strands();
    let mut acc = TLElement::identity(n);
    for &g in b.word() {
        acc = acc.mul(&zeta_letter(n, g, a, bb)?, delta)?;
    }
    Ok(acc)
}

/// The loop value making ζ a homomorphism: `-(a·bb⁻¹ + a⁻¹·bb)`.
pub fn hecke_delta(a: &LaurentPoly, bb: &LaurentPoly) -> Result<LaurentPoly, TlError> {
    let s = &(a * &bb.inverse()?) + &(&a.inverse()? * bb);
    Ok(-s)
}

fn word(n: usize, w: &[i64]) -> BraidWord {
    BraidWord::new(n, w.to_vec()).expect("letters in range")
}

/// Relation defects `(family, name, lhs - rhs)`: 0 braid, 1 inverse, 2 Hecke,
/// 3 far commutation.
fn relation_defects(
    n: usize,
    a: &LaurentPoly,
    bb: &LaurentPoly,
    delta: &LaurentPoly,
) -> Result<Vec<(u8, String, TLElement)>, TlError> {
    let z = |w: &[i64]| zeta(&word(n, w), a, bb, delta);
    let mut out = Vec::new();
    for i in 1..n as i64 {
        if i + 1 < n as i64 {
            let d = z(&[i, i + 1, i])?.sub(&z(&[i + 1, i, i + 1])?)?;
            out.push((
                0,
                format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1),
                d,
            ));
        }
        for j in (i + 2)..n as i64 {
            let d = z(&[i, j])?.sub(&z(&[j, i])?)?;
            out.push((3, format!("s{i} s{j} = s{j} s{i}"), d));
        }
        let id = TLElement::identity(n);
        out.push((1, format!("s{i} s{i}^-1 = 1"), z(&[i, -i])?.sub(&id)?));
        out.push((1, format!("s{i}^-1 s{i} = 1"), z(&[-i, i])?.sub(&id)?));
        let s = z(&[i])?;
        let c = a.inverse()? * (bb * bb);
        let left = s.add(&TLElement::identity(n).scale(&c))?;
        let right = s.sub(&TLElement::identity(n).scale(a))?;
        out.push((2, format!("hecke at s{i}"), left.mul(&right, delta)?));
    }
    Ok(out)
}

/// Checks (i) braid relations and far commutation, (ii) σσ⁻¹ = 1 and
/// (iii) the Hecke relation `(ζ(σ) + a⁻¹bb²)(ζ(σ) - a) = 0`, all exactly.
pub fn braid_relation_check(
    n: usize,
    a: &LaurentPoly,
    bb: &LaurentPoly,
    delta: &LaurentPoly,
) -> Result<Report, TlError> {
    let mut r = Report::new(format!("zeta relations in TL_{n}, delta = {delta}"));
    let defects = relation_defects(n, a, bb, delta)?;
    let families = ["braid relations", "inverse relations", "hecke relation"];
    for (fam, label) in families.iter().enumerate() {
        let bad: Vec<&String> = defects
            .iter()
            // far commutation (3) counts with the braid relations
            .filter(|(f, _, d)| (*f as usize == fam || (fam == 0 && *f == 3)) && !d.is_zero())
            .map(|(_, name, _)| name)
            .collect();
        let detail = if bad.is_empty() {
            String::new()
        } else {
            format!(
                "fails: {}",
                bad.iter()
                    .map(|s| s.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        };
        r.exact(*label, bad.is_empty(), detail);
    }
    Ok(r)
}

/// Splits `p` by powers of the variable `var`.
fn by_power(p: &LaurentPoly, var: &str) -> BTreeMap<i64, LaurentPoly> {
    let v = crate::laurent::Var::new(var);
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let k = m.exponent(v);
        let rest = crate::laurent::Monomial::from_pairs(m.iter().filter(|&(w, _)| w != v));
        let slot = out.entry(k).or_default();
        *slot = &*slot + &LaurentPoly::term(c.clone(), rest);
    }
    out
}

/// Shows with a free loop variable `d` that every relation defect is a
/// nonzero polynomial of degree at most one in `d` vanishing exactly at
/// `d = -(a·bb⁻¹ + a⁻¹·bb)`: the relations hold iff δ takes that value.
pub fn delta_iff_check(n: usize, a: &LaurentPoly, bb: &LaurentPoly) -> Result<Report, TlError> {
    let d = LaurentPoly::var("d");
    let root = hecke_delta(a, bb)?;
    let mut r = Report::new(format!("relations in TL_{n} hold iff delta = {root}"));
    for (fam, name, defect) in relation_defects(n, a, bb, &d)? {
        if fam == 3 {
            // far commutation holds for every δ
            let ok = defect.is_zero();
            r.exact(
                name,
                ok,
                if ok {
                    "independent of delta"
                } else {
                    "nonzero defect"
                },
            );
            continue;
        }
        let mut ok = !defect.is_zero();
        let mut detail = String::new();
        for (_, coeff) in defect.terms() {
            let parts = by_power(coeff, "d");
            if parts.keys().any(|&k| !(0..=1).contains(&k)) {
                ok = false;
                detail = format!("degree in d outside 0..=1: {coeff}");
            }
            let c0 = parts.get(&0).cloned().unwrap_or_default();
            let c1 = parts.get(&1).cloned().unwrap_or_default();
            if c1.is_zero() && !c0.is_zero() {
                ok = false;
                detail = format!("defect independent of d: {coeff}");
            }
            if !(&c0 + &(&c1 * &root)).is_zero() {
                ok = false;
                detail = format!("does not vanish at the root: {coeff}");
            }
        }
        r.exact(name, ok, detail);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn catalan_dims() {
        let cat = [1, 1, 2, 5, 14, 42, 132, 429];
        for n in 1..=7 {
            assert_eq!(tl_dim(n), cat[n], "n = {n}");
        }
    }

    #[test]
    fn u_squared_is_delta_u() {
        let d = p("d");
        let u = TLElement::u(2, 1);
        assert_eq!(u.mul(&u, &d).unwrap(), u.scale(&d));
    }

    #[test]
    fn u1_u2_u1_is_u1() {
        let d = p("d");
        let (u1, u2) = (TLElement::u(3, 1), TLElement::u(3, 2));
        let prod = u1.mul(&u2, &d).unwrap().mul(&u1, &d).unwrap();
        assert_eq!(prod, u1);
    }

    #[test]
    fn identity_is_neutral() {
        let d = p("d");
        for q in PlanarPairing::enumerate(4) {
            let x = TLElement::basis(q);
            assert_eq!(TLElement::identity(4).mul(&x, &d).unwrap(), x);
            assert_eq!(x.mul(&TLElement::identity(4), &d).unwrap(), x);
        }
    }

    #[test]
    fn traces_in_tl2() {
        let d = p("d");
        assert_eq!(TLElement::identity(2).trace_closure(&d), p("d^2"));
        assert_eq!(TLElement::u(2, 1).trace_closure(&d), d);
    }

    #[test]
    fn zeta_single_letter() {
        let (a, b) = (p("a"), p("b"));
        let delta = hecke_delta(&a, &b).unwrap();
        let z = zeta(&word(2, &[1]), &a, &b, &delta).unwrap();
        let expect = TLElement::term(PlanarPairing::identity(2), a.clone())
            .add(&TLElement::term(PlanarPairing::u(2, 1), b.clone()))
            .unwrap();
        assert_eq!(z, expect);
        assert_eq!(
            zeta(&word(2, &[1, -1]), &a, &b, &delta).unwrap(),
            TLElement::identity(2)
        );
        let off = &delta + &LaurentPoly::one();
        let z = zeta(&word(2, &[1, -1]), &a, &b, &off).unwrap();
        assert_eq!(z.coefficient(&PlanarPairing::u(2, 1)), LaurentPoly::one());
    }

    #[test]
    fn zeta_rejects_non_units() {
        let d = p("d");
        assert!(zeta(&word(2, &[1]), &p("a + 1"), &p("b"), &d).is_err());
    }

    #[test]
    fn relation_checks() {
        let (a, b) = (p("a"), p("b"));
        let delta = hecke_delta(&a, &b).unwrap();
        assert!(braid_relation_check(3, &a, &b, &delta).unwrap().passed());
        let r = braid_relation_check(3, &a, &b, &LaurentPoly::zero()).unwrap();
        assert!(!r.check("inverse relations").unwrap().passed);
        let a2 = p("a");
        let b2 = p("a^-1");
        let d2 = p("-a^2 - a^-2");
        assert!(braid_relation_check(2, &a2, &b2, &d2).unwrap().passed());
    }

    #[test]
    fn iff_in_tl3() {
        let r = delta_iff_check(3, &p("a"), &p("b")).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn labels_round_trip() {
        assert_eq!(PlanarPairing::identity(2).to_labels(), vec![[1, 4], [2, 3]]);
        assert_eq!(PlanarPairing::u(2, 1).to_labels(), vec![[1, 2], [3, 4]]);
        for q in PlanarPairing::enumerate(4) {
            assert_eq!(PlanarPairing::from_labels(4, &q.to_labels()).unwrap(), q);
        }
        assert!(PlanarPairing::from_labels(2, &[[1, 3], [2, 4]]).is_err());
        assert!(PlanarPairing::from_labels(2, &[[1, 1], [2, 4]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let (a, b) = (p("a"), p("b"));
        let delta = hecke_delta(&a, &b).unwrap();
        let z = zeta(&word(3, &[1, -2, 1]), &a, &b, &delta).unwrap();
        let s = serde_json::to_string(&z.to_json_terms()).unwrap();
        let back: Vec<TlTermJson> = serde_json::from_str(&s).unwrap();
        assert_eq!(TLElement::from_json_terms(3, &back).unwrap(), z);
    }
}
