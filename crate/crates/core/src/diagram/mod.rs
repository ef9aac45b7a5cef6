//! Closed unoriented link diagrams as top-to-bottom words of elementary slices.
//!
//! A slice acts on adjacent strands at a 1-based position `p`; every other
//! strand passes straight through. Widths start at 0: `Cup(p)` adds the pair
//! `p, p+1`, `Cap(p)` removes it, crossings keep the width.
//!
//! Crossing sign is the sign as drawn. With both strands running downward, the
//! over strand of `Pos(p)` joins top `p+1` to bottom `p`; in `Neg(p)` it joins
//! top `p` to bottom `p+1`.

mod moves;
mod text;
mod trace;

use thiserror::Error;

pub use moves::{
    random_braid, random_isotopic_pair, rotate_crossing, IsotopicPair, Move, RotateSide,
};
pub use text::{parse_diagram_json, DiagramJson, ParseDiagramError};
pub use trace::{Cursor, Passage, SegmentGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("slice {index} ({slice}) does not fit width {width}")]
    BadPosition {
        index: usize,
        slice: Slice,
        width: usize,
    },
    #[error("diagram is not closed (final width {0})")]
    NotClosed(usize),
    #[error("slice index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("slice {0} is not a crossing")]
    NotACrossing(usize),
    #[error("braid letter {letter} exceeds the {strands}-strand bound")]
    BadLetter { letter: i64, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
}

/// One elementary piece of a Morse diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slice {
    Cup(usize),
    Cap(usize),
    Pos(usize),
    Neg(usize),
}

impl Slice {
    pub fn position(&self) -> usize {
        match *self {
            Slice::Cup(p) | Slice::Cap(p) | Slice::Pos(p) | Slice::Neg(p) => p,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, Slice::Pos(_) | Slice::Neg(_))
    }

    /// +1 for `Pos`, -1 for `Neg`, 0 otherwise.
    pub fn sign(&self) -> i64 {
        match self {
            Slice::Pos(_) => 1,
            Slice::Neg(_) => -1,
            _ => 0,
        }
    }

    /// Width after this slice, or `None` if it does not fit `width`.
    pub fn apply_width(&self, width: usize) -> Option<usize> {
        match *self {
            Slice::Cup(p) => (p >= 1 && p <= width + 1).then_some(width + 2),
            Slice::Cap(p) => (p >= 1 && p < width).then(|| width - 2),
            Slice::Pos(p) | Slice::Neg(p) => (p >= 1 && p < width).then_some(width),
        }
    }

    pub fn switched(&self) -> Slice {
        match *self {
            Slice::Pos(p) => Slice::Neg(p),
            Slice::Neg(p) => Slice::Pos(p),
            s => s,
        }
    }
}

/// A braid word on `strands` strands. Letter `g > 0` is σ_g, `g < 0` is σ_|g|⁻¹.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i64>) -> Result<Self, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::NoStrands);
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(DiagramError::BadLetter { letter: g, strands });
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i64] {
        &self.word
    }

    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|g| g.signum()).sum()
    }

    /// Image in the symmetric group: `perm[i]` is where the strand starting at
    /// position `i` (0-based) ends.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let p = g.unsigned_abs() as usize - 1;
            at.swap(p, p + 1);
        }
        // at[pos] = strand currently at pos
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of cycles of [`BraidWord::permutation`].
    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }

    /// Every word on `strands` strands of length at most `max_len`, shortest
    /// first, letters ordered 1, -1, 2, -2, ...
    pub fn enumerate(strands: usize, max_len: usize) -> Vec<BraidWord> {
        let letters: Vec<i64> = (1..strands as i64).flat_map(|g| [g, -g]).collect();
        let mut out = vec![BraidWord {
            strands,
            word: Vec::new(),
        }];
        let mut frontier = vec![Vec::new()];
        for _ in 0..max_len {
            if letters.is_empty() {
                break;
            }
            let mut next = Vec::with_capacity(frontier.len() * letters.len());
            for w in &frontier {
                for &g in &letters {
                    let mut v: Vec<i64> = w.clone();
                    v.push(g);
                    next.push(v);
                }
            }
            out.extend(next.iter().map(|w| BraidWord {
                strands,
                word: w.clone(),
            }));
            frontier = next;
        }
        out
    }

    /// Trace closure: nested cups, the word as crossings, nested caps.
    /// Braid strand `i` returns along position `2n+1-i`.
    pub fn closure(&self) -> MorseDiagram {
        let n = self.strands;
        let mut slices = Vec::with_capacity(2 * n + self.word.len());
        slices.extend((1..=n).map(Slice::Cup));
        for &g in &self.word {
            let p = g.unsigned_abs() as usize;
            slices.push(if g > 0 { Slice::Pos(p) } else { Slice::Neg(p) });
        }
        slices.extend((1..=n).rev().map(Slice::Cap));
        MorseDiagram::new(slices).expect("braid closure is well formed")
    }
}

/// A validated Morse word starting at width 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorseDiagram {
    slices: Vec<Slice>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    /// Flip Pos and Neg.
    Switch,
    /// Delete the crossing.
    SmoothId,
    /// Replace the crossing with `Cap(p)` followed by `Cup(p)`.
    SmoothCupCap,
}

impl MorseDiagram {
    pub fn new(slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let mut w = 0usize;
        for (index, s) in slices.iter().enumerate() {
            w = s.apply_width(w).ok_or(DiagramError::BadPosition {
                index,
                slice: *s,
                width: w,
            })?;
        }
        Ok(MorseDiagram { slices })
    }

    /// The empty diagram (no strands at all).
    pub fn empty() -> Self {
        MorseDiagram { slices: Vec::new() }
    }

    pub fn unknot() -> Self {
        MorseDiagram {
            slices: vec![Slice::Cup(1), Slice::Cap(1)],
        }
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    /// `widths()[t]` is the width above slice `t`; the last entry is the final width.
    pub fn widths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut w = 0;
        out.push(w);
        for s in &self.slices {
            w = s.apply_width(w).expect("validated");
            out.push(w);
        }
        out
    }

    pub fn final_width(&self) -> usize {
        *self.widths().last().expect("nonempty")
    }

    pub fn is_closed(&self) -> bool {
        self.final_width() == 0
    }

    pub fn ensure_closed(&self) -> Result<(), DiagramError> {
        match self.final_width() {
            0 => Ok(()),
            w => Err(DiagramError::NotClosed(w)),
        }
    }

    pub fn crossing_indices(&self) -> Vec<usize> {
        (0..self.slices.len())
            .filter(|&i| self.slices[i].is_crossing())
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.is_crossing()).count()
    }

    /// Signed crossing count as drawn: #Pos - #Neg.
    pub fn local_writhe(&self) -> i64 {
        self.slices.iter().map(Slice::sign).sum()
    }

    /// Writhe under the canonical orientation of [`SegmentGraph`]. Independent
    /// of orientation for knots; for links it may change by multiples of 4.
    pub fn oriented_writhe(&self) -> Result<i64, DiagramError> {
        Ok(SegmentGraph::new(self)?.oriented_writhe())
    }

    pub fn component_count(&self) -> Result<usize, DiagramError> {
        Ok(SegmentGraph::new(self)?.component_count())
    }

    pub fn resolve_crossing(&self, index: usize, mode: Resolution) -> Result<Self, DiagramError> {
        let s = *self
            .slices
            .get(index)
            .ok_or(DiagramError::IndexOutOfRange(index))?;
        if !s.is_crossing() {
            return Err(DiagramError::NotACrossing(index));
        }
        let mut slices = self.slices.clone();
        match mode {
            Resolution::Switch => slices[index] = s.switched(),
            Resolution::SmoothId => {
                slices.remove(index);
            }
            Resolution::SmoothCupCap => {
                let p = s.position();
                slices[index] = Slice::Cap(p);
                slices.insert(index + 1, Slice::Cup(p));
            }
        }
        // every resolution keeps the width chain intact
        Ok(MorseDiagram { slices })
    }

    /// Same diagram with every crossing made positive; two diagrams with equal
    /// unsigned forms differ only by crossing switches.
    pub fn unsigned_form(&self) -> Vec<Slice> {
        self.slices
            .iter()
            .map(|s| match *s {
                Slice::Neg(p) => Slice::Pos(p),
                s => s,
            })
            .collect()
    }

    /// Disjoint union: `other` placed to the right of `self`.
    pub fn disjoint_union(&self, other: &MorseDiagram) -> Result<Self, DiagramError> {
        self.ensure_closed()?;
        other.ensure_closed()?;
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        Ok(MorseDiagram { slices })
    }

    /// Splice `insert` (which must preserve width) in before slice `at`.
    pub fn splice(&self, at: usize, insert: &[Slice]) -> Result<Self, DiagramError> {
        if at > self.slices.len() {
            return Err(DiagramError::IndexOutOfRange(at));
        }
        let mut slices = self.slices[..at].to_vec();
        slices.extend_from_slice(insert);
        slices.extend_from_slice(&self.slices[at..]);
        let out = MorseDiagram::new(slices)?;
        if out.final_width() != self.final_width() {
            return Err(DiagramError::NotClosed(out.final_width()));
        }
        Ok(out)
    }

    /// Replace slices `range` by `with`, revalidating the result.
    pub fn replace(
        &self,
        range: std::ops::Range<usize>,
        with: &[Slice],
    ) -> Result<Self, DiagramError> {
        if range.end > self.slices.len() || range.start > range.end {
            return Err(DiagramError::IndexOutOfRange(range.end));
        }
        let mut slices = self.slices[..range.start].to_vec();
        slices.extend_from_slice(with);
        slices.extend_from_slice(&self.slices[range.end..]);
        MorseDiagram::new(slices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(n: usize, w: &[i64]) -> BraidWord {
        BraidWord::new(n, w.to_vec()).unwrap()
    }

    #[test]
    fn closure_of_empty_word_is_unknot() {
        let d = braid(1, &[]).closure();
        assert_eq!(d, MorseDiagram::unknot());
        assert_eq!(d.component_count().unwrap(), 1);
    }

    #[test]
    fn closure_component_counts() {
        assert_eq!(braid(2, &[1]).closure().component_count().unwrap(), 1);
        assert_eq!(braid(2, &[1, 1]).closure().component_count().unwrap(), 2);
        assert_eq!(braid(2, &[1, 1, 1]).closure().component_count().unwrap(), 1);
        assert_eq!(braid(3, &[]).closure().component_count().unwrap(), 3);
    }

    #[test]
    fn local_writhe_examples() {
        assert_eq!(braid(3, &[1, -2]).closure().local_writhe(), 0);
        assert_eq!(braid(2, &[1, 1, 1]).closure().local_writhe(), 3);
        assert_eq!(braid(1, &[]).closure().local_writhe(), 0);
    }

    #[test]
    fn validation() {
        assert!(MorseDiagram::new(vec![Slice::Cap(1)]).is_err());
        assert!(MorseDiagram::new(vec![Slice::Cup(1), Slice::Pos(2)]).is_err());
        assert!(MorseDiagram::new(vec![Slice::Cup(2)]).is_err());
        assert!(MorseDiagram::new(vec![Slice::Cup(0)]).is_err());
        let open = MorseDiagram::new(vec![Slice::Cup(1)]).unwrap();
        assert_eq!(open.ensure_closed(), Err(DiagramError::NotClosed(2)));
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(2, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn resolve_examples() {
        let d = braid(2, &[1]).closure();
        let idx = d.crossing_indices()[0];
        assert_eq!(
            d.resolve_crossing(idx, Resolution::Switch).unwrap(),
            braid(2, &[-1]).closure()
        );
        let id = d.resolve_crossing(idx, Resolution::SmoothId).unwrap();
        assert_eq!(id, braid(2, &[]).closure());
        assert_eq!(id.component_count().unwrap(), 2);
        // the two smoothings of a kink give two loops and one loop
        let cc = d.resolve_crossing(idx, Resolution::SmoothCupCap).unwrap();
        assert_eq!(cc.to_string(), "cup@1 cup@2 cap@1 cup@1 cap@2 cap@1");
        assert_eq!(cc.component_count().unwrap(), 1);
        assert_eq!(
            d.resolve_crossing(0, Resolution::Switch),
            Err(DiagramError::NotACrossing(0))
        );
        assert_eq!(
            d.resolve_crossing(99, Resolution::Switch),
            Err(DiagramError::IndexOutOfRange(99))
        );
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(BraidWord::enumerate(1, 7).len(), 1);
        assert_eq!(BraidWord::enumerate(2, 7).len(), 255);
        assert_eq!(BraidWord::enumerate(3, 2).len(), 1 + 4 + 16);
    }

    #[test]
    fn permutation_of_braid() {
        assert_eq!(braid(3, &[1, 2]).permutation(), vec![2, 0, 1]);
        assert_eq!(braid(2, &[1, 1]).cycle_count(), 2);
    }
}
