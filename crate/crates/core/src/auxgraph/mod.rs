//! The implicit auxiliary graph over gridline vertices.
//!
//! A window of side `n` is cut by `k + 1` vertical and `k + 1` horizontal
//! gridlines, spaced `b = n / k` apart, into `k^2` closed blocks. The vertices
//! of the auxiliary graph are the lattice points on some gridline. Nothing in
//! this module stores the graph: vertex membership, block membership and the
//! order along a gridline are arithmetic, and edges are decided on demand by a
//! caller-supplied reachability callback on the block window.

mod edge;
mod order;

use arrayvec::ArrayVec;

pub use edge::{h_edge, is_corner_pair, next_neighbor, straight_walk, AuxGraph};
pub use order::{ccw_cmp, Segment};

use crate::error::{Error, Result};
use crate::grid::Vertex;

/// Decomposition parameters: side `n`, divisor `k`, block side `b = n / k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuxParams {
    n: usize,
    k: usize,
    b: usize,
}

impl AuxParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 || n == 0 || !n.is_multiple_of(k) {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(AuxParams { n, k, b: n / k })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn block_side(&self) -> usize {
        self.b
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v.x <= self.n && v.y <= self.n
    }

    /// Number of auxiliary vertices: `2(k+1)(n+1) - (k+1)^2`.
    pub fn vertex_count(&self) -> usize {
        let lines = self.k + 1;
        2 * lines * (self.n + 1) - lines * lines
    }

    #[inline]
    pub fn is_vertex(&self, v: Vertex) -> bool {
        v.x.is_multiple_of(self.b) || v.y.is_multiple_of(self.b)
    }

    /// On both a vertical and a horizontal gridline.
    #[inline]
    pub fn is_intersection(&self, v: Vertex) -> bool {
        v.x.is_multiple_of(self.b) && v.y.is_multiple_of(self.b)
    }

    pub fn block(&self, col: usize, row: usize) -> BlockRef {
        debug_assert!(col < self.k && row < self.k);
        BlockRef {
            col,
            row,
            id: row * self.k + col + 1,
        }
    }

    pub fn block_origin(&self, block: BlockRef) -> Vertex {
        Vertex::new(block.col * self.b, block.row * self.b)
    }

    pub fn block_contains(&self, block: BlockRef, v: Vertex) -> bool {
        let o = self.block_origin(block);
        (o.x..=o.x + self.b).contains(&v.x) && (o.y..=o.y + self.b).contains(&v.y)
    }

    /// The unique block holding a vertex that is on no gridline.
    pub fn interior_block(&self, v: Vertex) -> BlockRef {
        debug_assert!(!self.is_vertex(v));
        self.block(v.x / self.b, v.y / self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Vertical,
    Horizontal,
}

/// Gridline `index` (1-based) of an axis. Vertical `i` is the column
/// `x = (i-1) b`; horizontal `i` is the row `y = (i-1) b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gridline {
    pub axis: Axis,
    pub index: usize,
}

impl Gridline {
    pub fn vertical(index: usize) -> Self {
        Gridline {
            axis: Axis::Vertical,
            index,
        }
    }

    pub fn horizontal(index: usize) -> Self {
        Gridline {
            axis: Axis::Horizontal,
            index,
        }
    }

    /// The fixed coordinate of the line.
    pub fn offset(&self, p: &AuxParams) -> usize {
        (self.index - 1) * p.b
    }

    pub fn contains(&self, p: &AuxParams, v: Vertex) -> bool {
        let c = match self.axis {
            Axis::Vertical => v.x,
            Axis::Horizontal => v.y,
        };
        p.contains(v) && c == self.offset(p)
    }
}

/// The gridlines through a vertex: at most one per axis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GridlineSet {
    pub vertical: Option<Gridline>,
    pub horizontal: Option<Gridline>,
}

impl GridlineSet {
    pub fn is_empty(&self) -> bool {
        self.vertical.is_none() && self.horizontal.is_none()
    }

    pub fn len(&self) -> usize {
        self.vertical.is_some() as usize + self.horizontal.is_some() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = Gridline> {
        self.vertical.into_iter().chain(self.horizontal)
    }

    pub fn shares_with(&self, other: &GridlineSet) -> bool {
        (self.vertical.is_some() && self.vertical == other.vertical)
            || (self.horizontal.is_some() && self.horizontal == other.horizontal)
    }
}

pub fn on_gridlines(p: &AuxParams, v: Vertex) -> GridlineSet {
    debug_assert!(p.contains(v));
    GridlineSet {
        vertical: v
            .x
            .is_multiple_of(p.b)
            .then(|| Gridline::vertical(v.x / p.b + 1)),
        horizontal: v
            .y
            .is_multiple_of(p.b)
            .then(|| Gridline::horizontal(v.y / p.b + 1)),
    }
}

/// A block by column `col` and row `row` (both `0..k`). Ids run row-major
/// from the south-west block: `id = row * k + col + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockRef {
    pub col: usize,
    pub row: usize,
    pub id: usize,
}

/// Every block whose closed square contains `v`.
pub fn blocks_of(p: &AuxParams, v: Vertex) -> ArrayVec<BlockRef, 4> {
    debug_assert!(p.contains(v));
    let span = |c: usize| -> ArrayVec<usize, 2> {
        let mut out = ArrayVec::new();
        let q = c / p.b;
        if c.is_multiple_of(p.b) {
            if q > 0 {
                out.push(q - 1);
            }
            if q < p.k {
                out.push(q);
            }
        } else {
            out.push(q);
        }
        out
    };
    let mut out = ArrayVec::new();
    for col in span(v.x) {
        for row in span(v.y) {
            out.push(p.block(col, row));
        }
    }
    out
}

/// The order along a gridline: "below" on vertical lines, "right of" on
/// horizontal ones.
pub fn precedes(p: &AuxParams, line: Gridline, a: Vertex, b: Vertex) -> Result<bool> {
    for v in [a, b] {
        if !line.contains(p, v) {
            return Err(Error::NotOnGridline { vertex: v, line });
        }
    }
    Ok(match line.axis {
        Axis::Vertical => a.y < b.y,
        Axis::Horizontal => a.x > b.x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p93() -> AuxParams {
        AuxParams::new(9, 3).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(AuxParams::new(9, 3).is_ok());
        assert!(AuxParams::new(10, 3).is_err());
        assert!(AuxParams::new(9, 1).is_err());
        assert_eq!(p93().block_side(), 3);
        assert_eq!(p93().vertex_count(), 2 * 4 * 10 - 16);
    }

    #[test]
    fn gridline_membership() {
        let p = p93();
        let s = on_gridlines(&p, Vertex::new(3, 5));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![Gridline::vertical(2)]);
        let s = on_gridlines(&p, Vertex::new(3, 3));
        assert_eq!(
            s.iter().collect::<Vec<_>>(),
            vec![Gridline::vertical(2), Gridline::horizontal(2)]
        );
        assert!(on_gridlines(&p, Vertex::new(1, 2)).is_empty());
        assert_eq!(Gridline::vertical(2).offset(&p), 3);
    }

    #[test]
    fn vertex_count_matches_enumeration() {
        for (n, k) in [(9, 3), (12, 4), (12, 2), (16, 4)] {
            let p = AuxParams::new(n, k).unwrap();
            let count = (0..=n)
                .flat_map(|y| (0..=n).map(move |x| Vertex::new(x, y)))
                .filter(|&v| !on_gridlines(&p, v).is_empty())
                .count();
            assert_eq!(count, p.vertex_count());
        }
    }

    #[test]
    fn block_membership() {
        let p = p93();
        let ids = |v| {
            let mut ids: Vec<_> = blocks_of(&p, v).iter().map(|b| b.id).collect();
            ids.sort();
            ids
        };
        assert_eq!(ids(Vertex::new(1, 1)), vec![1]);
        assert_eq!(blocks_of(&p, Vertex::new(1, 1))[0], p.block(0, 0));
        assert_eq!(ids(Vertex::new(3, 1)), vec![1, 2]);
        assert_eq!(ids(Vertex::new(3, 3)), vec![1, 2, 4, 5]);
        assert_eq!(ids(Vertex::new(0, 0)), vec![1]);
        assert_eq!(ids(Vertex::new(9, 9)), vec![9]);
        assert_eq!(ids(Vertex::new(9, 4)), vec![6]);
        assert_eq!(p.block(1, 0).id, 2);
        assert_eq!(p.block(0, 1).id, 4);
        for b in blocks_of(&p, Vertex::new(3, 3)) {
            assert!(p.block_contains(b, Vertex::new(3, 3)));
        }
    }

    #[test]
    fn gridline_order() {
        let p = p93();
        let v = Gridline::vertical(2);
        let h = Gridline::horizontal(2);
        assert!(precedes(&p, v, Vertex::new(3, 1), Vertex::new(3, 5)).unwrap());
        assert!(!precedes(&p, v, Vertex::new(3, 5), Vertex::new(3, 1)).unwrap());
        assert!(precedes(&p, h, Vertex::new(7, 3), Vertex::new(2, 3)).unwrap());
        assert!(!precedes(&p, h, Vertex::new(2, 3), Vertex::new(2, 3)).unwrap());
        assert!(precedes(&p, v, Vertex::new(4, 1), Vertex::new(3, 5)).is_err());
    }
}
