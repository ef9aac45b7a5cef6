//! Generators of framed-isotopic diagram pairs: Reidemeister-II insertions,
//! Reidemeister-III rewirings, far commutations and crossing rotations.
//!
//! Every move here is a regular isotopy of the planar diagram. Only rotations
//! change the local writhe, by 2 each.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{BraidWord, MorseDiagram, Slice};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotateSide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Insert `x±@pos x∓@pos` before slice `at`.
    R2 {
        at: usize,
        pos: usize,
        positive_first: bool,
    },
    /// Rewrite the three crossings starting at slice `at`.
    R3 { at: usize },
    /// Swap two adjacent crossings on disjoint strand pairs.
    Commute { at: usize },
    /// Replace a crossing by its quarter-turned form.
    Rotate { at: usize, side: RotateSide },
}

#[derive(Debug, Clone)]
pub struct IsotopicPair {
    pub before: MorseDiagram,
    pub after: MorseDiagram,
    pub moves: Vec<Move>,
    /// Half the change in local writhe.
    pub k: i64,
}

pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let word = if strands < 2 {
        Vec::new()
    } else {
        (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands) as i64;
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect()
    };
    BraidWord::new(strands, word).expect("letters in range")
}

/// Quarter-turn a crossing: `x±@p` becomes `cup@p x∓@(p+1) cap@(p+2)` (left)
/// or `cup@(p+2) x∓@(p+1) cap@p` (right). The local sign flips.
pub fn rotate_crossing(d: &MorseDiagram, at: usize, side: RotateSide) -> Option<MorseDiagram> {
    let s = *d.slices().get(at)?;
    if !s.is_crossing() {
        return None;
    }
    let p = s.position();
    let mid = match s {
        Slice::Pos(_) => Slice::Neg(p + 1),
        _ => Slice::Pos(p + 1),
    };
    let with = match side {
        RotateSide::Left => [Slice::Cup(p), mid, Slice::Cap(p + 2)],
        RotateSide::Right => [Slice::Cup(p + 2), mid, Slice::Cap(p)],
    };
    d.replace(at..at + 1, &with).ok()
}

type R3Side = [(usize, i64); 3];

/// Three-crossing braid relations on positions `(p, p+1)`, each as
/// `(lhs, rhs)` with entries `(offset, sign)`.

const R3_RULES: [(R3Side, R3Side); 6] = [
    ([(0, 1), (1, 1), (0, 1)], [(1, 1), (0, 1), (1, 1)]),
    ([(0, -1), (1, -1), (0, -1)], [(1, -1), (0, -1), (1, -1)]),
    ([(0, 1), (1, 1), (0, -1)], [(1, -1), (0, 1), (1, 1)]),
    ([(1, 1), (0, 1), (1, -1)], [(0, -1), (1, 1), (0, 1)]),
    ([(0, 1), (1, -1), (0, -1)], [(1, -1), (0, -1), (1, 1)]),
    ([(1, 1), (0, -1), (1, -1)], [(0, -1), (1, -1), (0, 1)]),
];

fn crossing(pos: usize, sign: i64) -> Slice {
    if sign > 0 {
        Slice::Pos(pos)
    } else {
        Slice::Neg(pos)
    }
}

fn match_r3(window: &[Slice]) -> Option<[Slice; 3]> {
    if window.len() != 3 || !window.iter().all(Slice::is_crossing) {
        return None;
    }
    let base = window.iter().map(Slice::position).min()?;
    let got: Vec<(usize, i64)> = window
        .iter()
        .map(|s| (s.position() - base, s.sign()))
        .collect();
    for (lhs, rhs) in R3_RULES.iter() {
        for (from, to) in [(lhs, rhs), (rhs, lhs)] {
            if got[..] == from[..] {
                let out = to.map(|(o, s)| crossing(base + o, s));
                return Some(out);
            }
        }
    }
    None
}

impl Move {
    pub fn apply(&self, d: &MorseDiagram) -> Option<MorseDiagram> {
        match *self {
            Move::R2 {
                at,
                pos,
                positive_first,
            } => {
                let (a, b) = if positive_first {
                    (Slice::Pos(pos), Slice::Neg(pos))
                } else {
                    (Slice::Neg(pos), Slice::Pos(pos))
                };
                d.splice(at, &[a, b]).ok()
            }
            Move::R3 { at } => {
                let window = d.slices().get(at..at + 3)?;
                let with = match_r3(window)?;
                d.replace(at..at + 3, &with).ok()
            }
            Move::Commute { at } => {
                let pair = d.slices().get(at..at + 2)?;
                let (x, y) = (pair[0], pair[1]);
                if !x.is_crossing() || !y.is_crossing() || x.position().abs_diff(y.position()) < 2 {
                    return None;
                }
                d.replace(at..at + 2, &[y, x]).ok()
            }
            Move::Rotate { at, side } => rotate_crossing(d, at, side),
        }
    }

    /// Every move of each kind that applies to `d`.
    pub fn candidates(d: &MorseDiagram) -> Vec<Move> {
        let slices = d.slices();
        let widths = d.widths();
        let mut out = Vec::new();
        for (at, &w) in widths.iter().enumerate() {
            for pos in 1..w {
                for positive_first in [true, false] {
                    out.push(Move::R2 {
                        at,
                        pos,
                        positive_first,
                    });
                }
            }
        }
        for at in 0..slices.len() {
            if at + 3 <= slices.len() && match_r3(&slices[at..at + 3]).is_some() {
                out.push(Move::R3 { at });
            }
            if at + 2 <= slices.len() && (Move::Commute { at }).apply(d).is_some() {
                out.push(Move::Commute { at });
            }
            if slices[at].is_crossing() {
                out.push(Move::Rotate {
                    at,
                    side: RotateSide::Left,
                });
                out.push(Move::Rotate {
                    at,
                    side: RotateSide::Right,
                });
            }
        }
        out
    }
}

/// Applies `steps` random moves to `base`, drawing the move kind uniformly
/// among the kinds available at each step.
pub fn random_isotopic_pair<R: Rng>(
    rng: &mut R,
    base: &MorseDiagram,
    steps: usize,
) -> IsotopicPair {
    let mut cur = base.clone();
    let mut moves = Vec::with_capacity(steps);
    for _ in 0..steps {
        let cands = Move::candidates(&cur);
        let mut kinds: Vec<u8> = cands.iter().map(kind_of).collect();
        kinds.sort_unstable();
        kinds.dedup();
        let Some(&kind) = kinds.choose(rng) else {
            break;
        };
        let of_kind: Vec<&Move> = cands.iter().filter(|m| kind_of(m) == kind).collect();
        let m = (*of_kind.choose(rng).expect("nonempty")).clone();
        cur = m.apply(&cur).expect("candidate applies");
        moves.push(m);
    }
    let dw = cur.local_writhe() - base.local_writhe();
    debug_assert!(dw % 2 == 0);
    IsotopicPair {
        before: base.clone(),
        after: cur,
        moves,
        k: dw / 2,
    }
}

fn kind_of(m: &Move) -> u8 {
    match m {
        Move::R2 { .. } => 0,
        Move::R3 { .. } => 1,
        Move::Commute { .. } => 2,
        Move::Rotate { .. } => 3,
    }
}
