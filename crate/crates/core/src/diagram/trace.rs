//! Strand tracing through a closed Morse diagram.
//!
//! A segment `(t, j)` is the strand at position `j` (1-based) on level `t`,
//! the gap between slices `t-1` and `t`. Walking a segment downward enters
//! slice `t`; walking it upward enters slice `t-1`.

use super::{DiagramError, MorseDiagram, Slice};

/// One pass of a walk through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub slice: usize,
    pub over: bool,
    pub down: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cursor {
    pub level: usize,
    pub pos: usize,
    pub down: bool,
}

pub struct SegmentGraph<'a> {
    slices: &'a [Slice],
    widths: Vec<usize>,
    offsets: Vec<usize>,
    /// component index of each segment, components numbered by first segment
    comp: Vec<usize>,
    /// lowest segment of each component
    roots: Vec<(usize, usize)>,
}

impl<'a> SegmentGraph<'a> {
    pub fn new(d: &'a MorseDiagram) -> Result<Self, DiagramError> {
        d.ensure_closed()?;
        let widths = d.widths();
        let mut offsets = Vec::with_capacity(widths.len() + 1);
        let mut acc = 0;
        for &w in &widths {
            offsets.push(acc);
            acc += w;
        }
        offsets.push(acc);
        let mut g = SegmentGraph {
            slices: d.slices(),
            widths,
            offsets,
            comp: vec![usize::MAX; acc],
            roots: Vec::new(),
        };
        for t in 0..g.widths.len() {
            for j in 1..=g.widths[t] {
                if g.comp[g.id(t, j)] == usize::MAX {
                    let c = g.roots.len();
                    g.roots.push((t, j));
                    let start = Cursor {
                        level: t,
                        pos: j,
                        down: true,
                    };
                    let mut cur = start;
                    loop {
                        let id = g.id(cur.level, cur.pos);
                        g.comp[id] = c;
                        cur = g.step(cur).0;
                        if cur == start {
                            break;
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn segment_count(&self) -> usize {
        self.comp.len()
    }

    pub fn id(&self, level: usize, pos: usize) -> usize {
        self.offsets[level] + pos - 1
    }

    /// Inverse of [`SegmentGraph::id`].
    pub fn locate(&self, id: usize) -> (usize, usize) {
        let t = self.offsets.partition_point(|&o| o <= id) - 1;
        (t, id - self.offsets[t] + 1)
    }

    pub fn component_count(&self) -> usize {
        self.roots.len()
    }

    pub fn component_of(&self, level: usize, pos: usize) -> usize {
        self.comp[self.id(level, pos)]
    }

    /// Segment ids of each component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.roots.len()];
        for (id, &c) in self.comp.iter().enumerate() {
            out[c].push(id);
        }
        out
    }

    /// Advance along the current segment into the next one.
    pub fn step(&self, c: Cursor) -> (Cursor, Option<Passage>) {
        let Cursor {
            level: t,
            pos: j,
            down,
        } = c;
        if down {
            let s = self.slices[t];
            let next = |level, pos, down| Cursor { level, pos, down };
            match s {
                Slice::Cup(p) => (next(t + 1, if j < p { j } else { j + 2 }, true), None),
                Slice::Cap(p) => {
                    if j == p {
                        (next(t, p + 1, false), None)
                    } else if j == p + 1 {
                        (next(t, p, false), None)
                    } else {
                        (next(t + 1, if j < p { j } else { j - 2 }, true), None)
                    }
                }
                Slice::Pos(p) | Slice::Neg(p) => {
                    if j == p || j == p + 1 {
                        let to = if j == p { p + 1 } else { p };
                        // over strand of Pos joins top p+1 to bottom p
                        let over = (j == p + 1) == matches!(s, Slice::Pos(_));
                        (
                            next(t + 1, to, true),
                            Some(Passage {
                                slice: t,
                                over,
                                down: true,
                            }),
                        )
                    } else {
                        (next(t + 1, j, true), None)
                    }
                }
            }
        } else {
            let s = self.slices[t - 1];
            let next = |level, pos, down| Cursor { level, pos, down };
            match s {
                Slice::Cup(p) => {
                    if j == p {
                        (next(t, p + 1, true), None)
                    } else if j == p + 1 {
                        (next(t, p, true), None)
                    } else {
                        (next(t - 1, if j < p { j } else { j - 2 }, false), None)
                    }
                }
                Slice::Cap(p) => (next(t - 1, if j < p { j } else { j + 2 }, false), None),
                Slice::Pos(p) | Slice::Neg(p) => {
                    if j == p || j == p + 1 {
                        let to = if j == p { p + 1 } else { p };
                        // moving up from bottom j to top `to`
                        let over = (to == p + 1) == matches!(s, Slice::Pos(_));
                        (
                            next(t - 1, to, false),
                            Some(Passage {
                                slice: t - 1,
                                over,
                                down: false,
                            }),
                        )
                    } else {
                        (next(t - 1, j, false), None)
                    }
                }
            }
        }
    }

    /// Crossing passages met on one full circuit from `start`.
    pub fn walk(&self, start: Cursor) -> Vec<Passage> {
        let mut out = Vec::new();
        let mut cur = start;
        loop {
            let (next, passage) = self.step(cur);
            out.extend(passage);
            cur = next;
            if cur == start {
                return out;
            }
        }
    }

    /// Starting cursors of the canonical traversal: components in order of
    /// their lowest segment, each entered there heading down.
    pub fn canonical_starts(&self) -> Vec<Cursor> {
        self.roots
            .iter()
            .map(|&(level, pos)| Cursor {
                level,
                pos,
                down: true,
            })
            .collect()
    }

    /// Sum of oriented crossing signs for the traversal given by `starts`.
    pub fn oriented_writhe_with(&self, starts: &[Cursor]) -> i64 {
        let mut dir: Vec<Option<bool>> = vec![None; self.slices.len()];
        let mut total = 0;
        for &s in starts {
            for p in self.walk(s) {
                match dir[p.slice] {
                    None => dir[p.slice] = Some(p.down),
                    Some(d) => {
                        let same = if d == p.down { 1 } else { -1 };
                        total += self.slices[p.slice].sign() * same;
                    }
                }
            }
        }
        total
    }

    pub fn oriented_writhe(&self) -> i64 {
        self.oriented_writhe_with(&self.canonical_starts())
    }

    /// First crossing met as an under-pass before any over-pass, walking the
    /// components from `starts` in order. `None` means the diagram is descending.
    pub fn first_bad_crossing(&self, starts: &[Cursor]) -> Option<usize> {
        let mut seen = vec![false; self.slices.len()];
        for &s in starts {
            for p in self.walk(s) {
                if !seen[p.slice] {
                    if !p.over {
                        return Some(p.slice);
                    }
                    seen[p.slice] = true;
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::BraidWord;

    #[test]
    fn hopf_has_two_components_and_writhe_two() {
        let d = BraidWord::new(2, vec![1, 1]).unwrap().closure();
        let g = SegmentGraph::new(&d).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.oriented_writhe(), 2);
    }

    #[test]
    fn braid_closure_writhe_is_local_writhe() {
        for w in [vec![1, 1, 1], vec![1, -2, 1, -2], vec![-1, -1, 2]] {
            let d = BraidWord::new(3, w).unwrap().closure();
            assert_eq!(d.oriented_writhe().unwrap(), d.local_writhe());
        }
    }

    #[test]
    fn horizontal_crossing_flips_writhe() {
        // a single crossing between a strand going down and one going up
        let d = MorseDiagram::new(vec![
            Slice::Cup(1),
            Slice::Cup(2),
            Slice::Cup(1),
            Slice::Neg(2),
            Slice::Cap(3),
            Slice::Cap(2),
            Slice::Cap(1),
        ])
        .unwrap();
        assert_eq!(d.local_writhe(), -1);
        assert_eq!(d.component_count().unwrap(), 1);
        assert_eq!(d.oriented_writhe().unwrap(), 1);
    }

    #[test]
    fn every_segment_visited_once() {
        let d = BraidWord::new(3, vec![1, 2, -1, 2]).unwrap().closure();
        let g = SegmentGraph::new(&d).unwrap();
        let total: usize = g.components().iter().map(Vec::len).sum();
        assert_eq!(total, g.segment_count());
        for id in 0..g.segment_count() {
            let (t, j) = g.locate(id);
            assert_eq!(g.id(t, j), id);
        }
    }

    #[test]
    fn each_crossing_passed_twice() {
        let d = BraidWord::new(3, vec![1, 2, 2, -1]).unwrap().closure();
        let g = SegmentGraph::new(&d).unwrap();
        let mut over = vec![0; d.len()];
        let mut under = vec![0; d.len()];
        for s in g.canonical_starts() {
            for p in g.walk(s) {
                if p.over {
                    over[p.slice] += 1;
                } else {
                    under[p.slice] += 1;
                }
            }
        }
        for i in d.crossing_indices() {
            assert_eq!((over[i], under[i]), (1, 1));
        }
    }
}
