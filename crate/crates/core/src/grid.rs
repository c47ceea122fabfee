//! Layered grid graphs and rectangular windows over them.

use std::fmt;

use crate::error::{Error, Result};

/// A lattice point. `x` grows eastward, `y` grows northward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
}

impl Vertex {
    pub const fn new(x: usize, y: usize) -> Self {
        Vertex { x, y }
    }

    /// Componentwise `self <= other`. Every directed path in a layered grid
    /// graph moves from a vertex to one that dominates it.
    #[inline]
    pub fn dominated_by(self, other: Vertex) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    #[inline]
    pub fn aligned_with(self, other: Vertex) -> bool {
        self.x == other.x || self.y == other.y
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl From<(usize, usize)> for Vertex {
    fn from((x, y): (usize, usize)) -> Self {
        Vertex { x, y }
    }
}

/// A directed graph on the `(n+1) x (n+1)` lattice `{0..=n}^2` whose edges
/// point one unit north or one unit east.
///
/// Stored as two bit planes indexed row-major (`y * (n+1) + x`). The graph is
/// immutable once built; [`GraphBuilder`] is the only way to set bits.
#[derive(Clone, PartialEq, Eq)]
pub struct LayeredGridGraph {
    n: usize,
    north: Vec<u64>,
    east: Vec<u64>,
}

impl fmt::Debug for LayeredGridGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LayeredGridGraph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

#[inline]
fn get_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

impl LayeredGridGraph {
    /// Side length; the lattice has `(n+1)^2` vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn index(&self, x: usize, y: usize) -> usize {
        y * (self.n + 1) + x
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v.x <= self.n && v.y <= self.n
    }

    /// Edge `(x,y) -> (x,y+1)`. Out-of-lattice coordinates have no edges.
    #[inline]
    pub fn has_north(&self, x: usize, y: usize) -> bool {
        x <= self.n && y < self.n && get_bit(&self.north, self.index(x, y))
    }

    /// Edge `(x,y) -> (x+1,y)`.
    #[inline]
    pub fn has_east(&self, x: usize, y: usize) -> bool {
        x < self.n && y <= self.n && get_bit(&self.east, self.index(x, y))
    }

    pub fn edge_count(&self) -> usize {
        self.north
            .iter()
            .chain(self.east.iter())
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// All edges as `(tail, head)` pairs, row-major by tail, north before east.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for y in 0..=self.n {
            for x in 0..=self.n {
                if self.has_north(x, y) {
                    out.push((Vertex::new(x, y), Vertex::new(x, y + 1)));
                }
                if self.has_east(x, y) {
                    out.push((Vertex::new(x, y), Vertex::new(x + 1, y)));
                }
            }
        }
        out
    }

    /// A view over the whole lattice.
    pub fn view(&self) -> SubgridView<'_> {
        SubgridView {
            graph: self,
            origin: Vertex::new(0, 0),
            side: self.n,
            limit: Vertex::new(self.n, self.n),
        }
    }

    /// A square window with south-west corner `origin` and side `side`.
    pub fn subview(&self, origin: Vertex, side: usize) -> Result<SubgridView<'_>> {
        self.view().subview(origin, side)
    }
}

/// Mutable staging area for a [`LayeredGridGraph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    north: Vec<u64>,
    east: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let cells = (n + 1) * (n + 1);
        let words = cells.div_ceil(64);
        GraphBuilder {
            n,
            north: vec![0; words],
            east: vec![0; words],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sets the north edge out of `(x, y)`. Fails if it would leave the lattice.
    pub fn set_north(&mut self, x: usize, y: usize, on: bool) -> Result<()> {
        if x > self.n || y >= self.n {
            return Err(Error::EdgeOutOfLattice {
                from: Vertex::new(x, y),
                dir: "north",
                n: self.n,
            });
        }
        let i = y * (self.n + 1) + x;
        set_bit(&mut self.north, i, on);
        Ok(())
    }

    /// Sets the east edge out of `(x, y)`. Fails if it would leave the lattice.
    pub fn set_east(&mut self, x: usize, y: usize, on: bool) -> Result<()> {
        if x >= self.n || y > self.n {
            return Err(Error::EdgeOutOfLattice {
                from: Vertex::new(x, y),
                dir: "east",
                n: self.n,
            });
        }
        let i = y * (self.n + 1) + x;
        set_bit(&mut self.east, i, on);
        Ok(())
    }

    pub fn build(self) -> LayeredGridGraph {
        LayeredGridGraph {
            n: self.n,
            north: self.north,
            east: self.east,
        }
    }
}

fn set_bit(words: &mut [u64], i: usize, on: bool) {
    if on {
        words[i / 64] |= 1 << (i % 64);
    } else {
        words[i / 64] &= !(1 << (i % 64));
    }
}

/// A square window into a [`LayeredGridGraph`], addressed in local
/// coordinates `0..=side`.
///
/// Only edges with both endpoints inside the window are visible. A view may
/// also be padded past its base graph (see [`SubgridView::padded`]); vertices
/// beyond `limit` (in base coordinates) carry no edges.
#[derive(Clone, Copy)]
pub struct SubgridView<'g> {
    graph: &'g LayeredGridGraph,
    origin: Vertex,
    side: usize,
    limit: Vertex,
}

impl fmt::Debug for SubgridView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgridView")
            .field("origin", &self.origin)
            .field("side", &self.side)
            .field("limit", &self.limit)
            .finish()
    }
}

impl<'g> SubgridView<'g> {
    #[inline]
    pub fn graph(&self) -> &'g LayeredGridGraph {
        self.graph
    }

    #[inline]
    pub fn origin(&self) -> Vertex {
        self.origin
    }

    #[inline]
    pub fn side(&self) -> usize {
        self.side
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v.x <= self.side && v.y <= self.side
    }

    pub fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::OutOfView {
                vertex: v,
                side: self.side,
            })
        }
    }

    /// Not past the clip of a padded window.
    #[inline]
    pub(crate) fn unclipped(&self, v: Vertex) -> bool {
        let b = self.to_base(v);
        b.x <= self.limit.x && b.y <= self.limit.y
    }

    /// Local-to-base coordinate translation.
    #[inline]
    pub fn to_base(&self, v: Vertex) -> Vertex {
        Vertex::new(self.origin.x + v.x, self.origin.y + v.y)
    }

    #[inline]
    pub fn has_north(&self, x: usize, y: usize) -> bool {
        if x > self.side || y >= self.side {
            return false;
        }
        let gx = self.origin.x + x;
        let gy = self.origin.y + y;
        gx <= self.limit.x && gy < self.limit.y && self.graph.has_north(gx, gy)
    }

    #[inline]
    pub fn has_east(&self, x: usize, y: usize) -> bool {
        if x >= self.side || y > self.side {
            return false;
        }
        let gx = self.origin.x + x;
        let gy = self.origin.y + y;
        gx < self.limit.x && gy <= self.limit.y && self.graph.has_east(gx, gy)
    }

    /// A square sub-window in local coordinates. It must lie inside this view.
    pub fn subview(&self, origin: Vertex, side: usize) -> Result<SubgridView<'g>> {
        if origin.x + side > self.side || origin.y + side > self.side {
            return Err(Error::WindowOutOfRange {
                origin,
                side,
                outer: self.side,
            });
        }
        Ok(self.window(origin, side))
    }

    #[inline]
    pub(crate) fn window(&self, origin: Vertex, side: usize) -> SubgridView<'g> {
        debug_assert!(origin.x + side <= self.side && origin.y + side <= self.side);
        let base = self.to_base(origin);
        SubgridView {
            graph: self.graph,
            origin: base,
            side,
            limit: Vertex::new(
                self.limit.x.min(base.x + side),
                self.limit.y.min(base.y + side),
            ),
        }
    }

    /// Logically enlarges the window to `side` (>= current side). The added
    /// rows and columns have no edges, and no edge crosses into them.
    pub fn padded(&self, side: usize) -> SubgridView<'g> {
        debug_assert!(side >= self.side);
        let top = self.to_base(Vertex::new(self.side, self.side));
        SubgridView {
            graph: self.graph,
            origin: self.origin,
            side,
            limit: Vertex::new(self.limit.x.min(top.x), self.limit.y.min(top.y)),
        }
    }
}
