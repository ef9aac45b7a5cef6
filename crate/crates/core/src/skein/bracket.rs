//! Two-term state sum: `Pos = a·Id + b·CupCap`, `Neg = a⁻¹·Id + b⁻¹·CupCap`,
//! each closed loop worth `δ = -(a·b⁻¹ + a⁻¹·b)`.

use std::collections::HashMap;

use crate::diagram::{MorseDiagram, SegmentGraph, Slice};
use crate::laurent::LaurentPoly;

use super::SkeinError;

/// Largest crossing count the state sum will expand (2^n states).
pub const STATE_SUM_MAX_CROSSINGS: usize = 24;

/// The two smoothing weights of the bracket family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketParams {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
}

impl BracketParams {
    pub fn new(a: LaurentPoly, b: LaurentPoly) -> Result<Self, SkeinError> {
        a.inverse()?;
        b.inverse()?;
        Ok(BracketParams { a, b })
    }

    /// Kauffman bracket: `a = A`, `b = A⁻¹`, loop `-A² - A⁻²`.
    pub fn bracket() -> Self {
        BracketParams {
            a: LaurentPoly::var("A"),
            b: LaurentPoly::var_pow("A", -1),
        }
    }

    /// Twin bracket: `a = A`, `b = -A⁻¹`, loop `A² + A⁻²`.
    pub fn twin() -> Self {
        BracketParams {
            a: LaurentPoly::var("A"),
            b: -LaurentPoly::var_pow("A", -1),
        }
    }

    /// Framed HOMFLY-PT specialization with free units `a`, `b`.
    pub fn homfly() -> Self {
        BracketParams {
            a: LaurentPoly::var("a"),
            b: LaurentPoly::var("b"),
        }
    }

    pub fn delta(&self) -> LaurentPoly {
        let ab = &self.a * &self.b.inverse().expect("checked unit");
        let ba = &self.a.inverse().expect("checked unit") * &self.b;
        -(ab + ba)
    }
}

struct Dsu(Vec<u32>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n as u32).collect())
    }
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let up = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = up;
            x = up;
        }
        x
    }
    /// Returns true when two classes merged.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra as usize] = rb;
        true
    }
}

/// Per crossing: sign and the arcs at its four corners (tl, tr, bl, br).
struct Skeleton {
    arcs: usize,
    crossings: Vec<(i64, [u32; 4])>,
}

fn skeleton(d: &MorseDiagram) -> Result<Skeleton, SkeinError> {
    let g = SegmentGraph::new(d)?;
    let widths = d.widths();
    let mut dsu = Dsu::new(g.segment_count());
    let id = |t: usize, j: usize| g.id(t, j) as u32;
    let mut corners = Vec::new();
    for (t, s) in d.slices().iter().enumerate() {
        let w = widths[t];
        match *s {
            Slice::Cup(p) => {
                for j in 1..=w {
                    dsu.union(id(t, j), id(t + 1, if j < p { j } else { j + 2 }));
                }
                dsu.union(id(t + 1, p), id(t + 1, p + 1));
            }
            Slice::Cap(p) => {
                dsu.union(id(t, p), id(t, p + 1));
                for j in (1..=w).filter(|&j| j != p && j != p + 1) {
                    dsu.union(id(t, j), id(t + 1, if j < p { j } else { j - 2 }));
                }
            }
            Slice::Pos(p) | Slice::Neg(p) => {
                for j in (1..=w).filter(|&j| j != p && j != p + 1) {
                    dsu.union(id(t, j), id(t + 1, j));
                }
                corners.push((
                    s.sign(),
                    [id(t, p), id(t, p + 1), id(t + 1, p), id(t + 1, p + 1)],
                ));
            }
        }
    }
    let mut compact: HashMap<u32, u32> = HashMap::new();
    let mut crossings = Vec::with_capacity(corners.len());
    for (sign, cs) in corners {
        let mut out = [0u32; 4];
        for (k, c) in cs.iter().enumerate() {
            let r = dsu.find(*c);
            let next = compact.len() as u32;
            out[k] = *compact.entry(r).or_insert(next);
        }
        crossings.push((sign, out));
    }
    // arcs touching no crossing are free loops
    let mut roots: Vec<u32> = (0..g.segment_count() as u32).map(|x| dsu.find(x)).collect();
    roots.sort_unstable();
    roots.dedup();
    let free = roots.iter().filter(|r| !compact.contains_key(r)).count();
    Ok(Skeleton {
        arcs: compact.len() + free,
        crossings,
    })
}

/// State counts keyed by `(exponent of a, exponent of b, loops)`.
pub fn state_counts(d: &MorseDiagram) -> Result<HashMap<(i64, i64, usize), u64>, SkeinError> {
    let sk = skeleton(d)?;
    let m = sk.crossings.len();
    if m > STATE_SUM_MAX_CROSSINGS {
        return Err(SkeinError::TooManyCrossings {
            crossings: m,
            max: STATE_SUM_MAX_CROSSINGS,
        });
    }
    let mut counts = HashMap::new();
    let mut dsu = Dsu::new(sk.arcs);
    for state in 0u64..(1u64 << m) {
        for (i, x) in dsu.0.iter_mut().enumerate() {
            *x = i as u32;
        }
        let mut loops = sk.arcs;
        let (mut ea, mut eb) = (0i64, 0i64);
        for (k, &(sign, [tl, tr, bl, br])) in sk.crossings.iter().enumerate() {
            if state >> k & 1 == 0 {
                ea += sign;
                loops -= dsu.union(tl, bl) as usize;
                loops -= dsu.union(tr, br) as usize;
            } else {
                eb += sign;
                loops -= dsu.union(tl, tr) as usize;
                loops -= dsu.union(bl, br) as usize;
            }
        }
        *counts.entry((ea, eb, loops)).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Sum over all smoothing states of the weight times `δ^loops`.
/// A crossingless loop evaluates to δ.
pub fn two_term_state_sum(d: &MorseDiagram, p: &BracketParams) -> Result<LaurentPoly, SkeinError> {
    let counts = state_counts(d)?;
    let delta = p.delta();
    let mut cache_d: HashMap<usize, LaurentPoly> = HashMap::new();
    let mut out = LaurentPoly::zero();
    let mut keys: Vec<_> = counts.into_iter().collect();
    keys.sort();
    for ((ea, eb, loops), n) in keys {
        let dl = cache_d
            .entry(loops)
            .or_insert_with(|| delta.pow(loops as i64).expect("nonnegative"))
            .clone();
        let w = &p.a.pow(ea)? * &p.b.pow(eb)?;
        out = out + (&w * &dl).scale(&crate::laurent::GaussInt::from(n as i64));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::BraidWord;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn braid(n: usize, w: &[i64]) -> MorseDiagram {
        BraidWord::new(n, w.to_vec()).unwrap().closure()
    }

    /// Direct recursion on the first crossing; shares nothing with the
    /// skeleton/union-find path above.
    fn naive(d: &MorseDiagram, prm: &BracketParams) -> LaurentPoly {
        use crate::diagram::Resolution;
        match d.crossing_indices().first() {
            None => prm
                .delta()
                .pow(d.component_count().unwrap() as i64)
                .unwrap(),
            Some(&i) => {
                let s = d.slices()[i].sign();
                let (wa, wb) = (prm.a.pow(s).unwrap(), prm.b.pow(s).unwrap());
                let id = naive(&d.resolve_crossing(i, Resolution::SmoothId).unwrap(), prm);
                let cc = naive(
                    &d.resolve_crossing(i, Resolution::SmoothCupCap).unwrap(),
                    prm,
                );
                &(&wa * &id) + &(&wb * &cc)
            }
        }
    }

    #[test]
    fn unknot_is_loop_value() {
        let u = MorseDiagram::unknot();
        assert_eq!(
            two_term_state_sum(&u, &BracketParams::bracket()).unwrap(),
            p("-A^2 - A^-2")
        );
        assert_eq!(
            two_term_state_sum(&u, &BracketParams::twin()).unwrap(),
            p("A^2 + A^-2")
        );
    }

    #[test]
    fn bracket_kink() {
        let v = two_term_state_sum(&braid(2, &[1]), &BracketParams::bracket()).unwrap();
        assert_eq!(v, p("-A^3 * (-A^2 - A^-2)"));
    }

    #[test]
    fn empty_diagram_is_one() {
        assert_eq!(
            two_term_state_sum(&MorseDiagram::empty(), &BracketParams::bracket()).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn matches_naive_recursion() {
        let prm = BracketParams::homfly();
        for w in [vec![1, 1, 1], vec![1, -2, 1, -2], vec![2, 2, -1, 2], vec![]] {
            let d = braid(3, &w);
            assert_eq!(
                two_term_state_sum(&d, &prm).unwrap(),
                naive(&d, &prm),
                "{w:?}"
            );
        }
        let horiz: MorseDiagram = "cup@1 cup@2 cup@1 x-@2 cap@3 cap@2 cap@1".parse().unwrap();
        assert_eq!(
            two_term_state_sum(&horiz, &prm).unwrap(),
            naive(&horiz, &prm)
        );
    }

    #[test]
    fn rejects_open_diagram() {
        let d: MorseDiagram = "cup@1".parse().unwrap();
        assert!(two_term_state_sum(&d, &BracketParams::bracket()).is_err());
    }
}
