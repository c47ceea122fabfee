//! Edges of the auxiliary graph and counter-clockwise neighbor enumeration.

use crate::error::{Error, Result};
use crate::grid::{SubgridView, Vertex};

use super::order::{boundary_segments, ccw_cmp};
use super::{blocks_of, on_gridlines, AuxParams, BlockRef};

/// Decides reachability along a single row or column of `g`.
///
/// A monotone path between two vertices on one line must use every edge of
/// the line between them, so the walk only remembers its current position.
pub fn straight_walk(g: &SubgridView<'_>, u: Vertex, v: Vertex) -> Result<bool> {
    g.check(u)?;
    g.check(v)?;
    if u.x == v.x {
        if v.y < u.y {
            return Ok(false);
        }
        Ok((u.y..v.y).all(|y| g.has_north(u.x, y)))
    } else if u.y == v.y {
        if v.x < u.x {
            return Ok(false);
        }
        Ok((u.x..v.x).all(|x| g.has_east(x, u.y)))
    } else {
        Err(Error::NotAligned { u, v })
    }
}

/// Both are corners of `block` (and distinct). Corner pairs are the only
/// same-gridline pairs admitted as edges.
pub fn is_corner_pair(p: &AuxParams, block: BlockRef, u: Vertex, v: Vertex) -> bool {
    let o = p.block_origin(block);
    let b = p.block_side();
    let corner = |w: Vertex| (w.x == o.x || w.x == o.x + b) && (w.y == o.y || w.y == o.y + b);
    u != v && corner(u) && corner(v)
}

/// Whether `(u, v)` is an edge of the auxiliary graph over `g`.
///
/// `reach_fn` answers reachability inside a block window (local coordinates).
pub fn h_edge<'g, F>(
    p: &AuxParams,
    g: &SubgridView<'g>,
    u: Vertex,
    v: Vertex,
    reach_fn: &mut F,
) -> Result<bool>
where
    F: FnMut(&SubgridView<'g>, Vertex, Vertex) -> bool,
{
    let aux = AuxGraph::plain(*p, *g)?;
    for w in [u, v] {
        if !p.contains(w) || !p.is_vertex(w) {
            return Err(Error::NotAuxVertex(w));
        }
    }
    Ok(aux.literal_edge(u, v, reach_fn))
}

/// Next neighbor of `curr` after `prev` in counter-clockwise order, in the
/// plain auxiliary graph.
pub fn next_neighbor<'g, F>(
    p: &AuxParams,
    g: &SubgridView<'g>,
    curr: Vertex,
    prev: Option<Vertex>,
    reach_fn: &mut F,
) -> Result<Option<Vertex>>
where
    F: FnMut(&SubgridView<'g>, Vertex, Vertex) -> bool,
{
    AuxGraph::plain(*p, *g)?.next_neighbor(curr, prev, reach_fn)
}

/// The auxiliary graph of one window, optionally augmented for a query
/// `source -> target`.
///
/// Augmentation adds:
/// * for a source on no gridline, edges to the boundary vertices of its block
///   that it reaches inside the block;
/// * for a target on no gridline, edges into it from the boundary vertices of
///   its block that reach it (and from the source, if it shares the block);
/// * for a source on exactly one gridline, an edge along that gridline to the
///   gridline crossing just above (or right of) it;
/// * for a target on exactly one gridline, an edge along that gridline from
///   the gridline crossing just below (or left of) it.
///
/// The last two cover paths that begin or end with a run along a gridline,
/// which the plain edge rule excludes.
#[derive(Clone, Copy, Debug)]
pub struct AuxGraph<'g> {
    params: AuxParams,
    view: SubgridView<'g>,
    source: Option<Vertex>,
    target: Option<Vertex>,
}

impl<'g> AuxGraph<'g> {
    pub fn plain(params: AuxParams, view: SubgridView<'g>) -> Result<Self> {
        if view.side() != params.n() {
            return Err(Error::InvalidParams {
                n: view.side(),
                k: params.k(),
            });
        }
        Ok(AuxGraph {
            params,
            view,
            source: None,
            target: None,
        })
    }

    pub fn augmented(
        params: AuxParams,
        view: SubgridView<'g>,
        source: Vertex,
        target: Vertex,
    ) -> Result<Self> {
        view.check(source)?;
        view.check(target)?;
        let mut aux = Self::plain(params, view)?;
        aux.source = Some(source);
        aux.target = Some(target);
        Ok(aux)
    }

    #[inline]
    pub fn params(&self) -> &AuxParams {
        &self.params
    }

    #[inline]
    pub fn view(&self) -> &SubgridView<'g> {
        &self.view
    }

    pub fn source(&self) -> Option<Vertex> {
        self.source
    }

    pub fn target(&self) -> Option<Vertex> {
        self.target
    }

    /// In the vertex set of the augmented graph.
    pub fn contains(&self, v: Vertex) -> bool {
        self.params.contains(v)
            && (self.params.is_vertex(v) || Some(v) == self.source || Some(v) == self.target)
    }

    pub fn block_view(&self, block: BlockRef) -> SubgridView<'g> {
        self.view
            .window(self.params.block_origin(block), self.params.block_side())
    }

    fn off_grid(&self, v: Option<Vertex>) -> Option<Vertex> {
        v.filter(|&v| !self.params.is_vertex(v))
    }

    /// The gridline crossing that ends the segment through a vertex on
    /// exactly one gridline, in the direction of increasing coordinate.
    fn segment_end(&self, a: Vertex) -> Option<Vertex> {
        let b = self.params.block_side();
        match (a.x.is_multiple_of(b), a.y.is_multiple_of(b)) {
            (true, false) => Some(Vertex::new(a.x, (a.y / b + 1) * b)),
            (false, true) => Some(Vertex::new((a.x / b + 1) * b, a.y)),
            _ => None,
        }
    }

    /// The crossing that starts the segment through a single-gridline vertex.
    fn segment_start(&self, a: Vertex) -> Option<Vertex> {
        let b = self.params.block_side();
        match (a.x.is_multiple_of(b), a.y.is_multiple_of(b)) {
            (true, false) => Some(Vertex::new(a.x, a.y / b * b)),
            (false, true) => Some(Vertex::new(a.x / b * b, a.y)),
            _ => None,
        }
    }

    /// The geometric successor of `after` among the positions that may hold
    /// an out-neighbor of `curr`. No edge is tested.
    pub fn next_candidate(&self, curr: Vertex, after: Option<Vertex>) -> Option<Vertex> {
        let p = &self.params;
        let b = p.block_side();
        let mut best: Option<Vertex> = None;
        let mut offer = |w: Option<Vertex>| {
            if let Some(w) = w {
                if best.is_none_or(|x| ccw_cmp(curr, w, x).is_lt()) {
                    best = Some(w);
                }
            }
        };
        let target_point = |block: BlockRef| {
            self.off_grid(self.target).filter(|&t| {
                t != curr
                    && curr.dominated_by(t)
                    && p.block_contains(block, t)
                    && after.is_none_or(|a| ccw_cmp(curr, t, a).is_gt())
            })
        };

        if Some(curr) == self.source && !p.is_vertex(curr) {
            let block = p.interior_block(curr);
            for seg in boundary_segments(curr, p.block_origin(block), b) {
                offer(seg.successor(curr, after));
            }
            offer(target_point(block));
            return best;
        }
        for block in blocks_of(p, curr) {
            for seg in boundary_segments(curr, p.block_origin(block), b) {
                offer(seg.successor(curr, after));
            }
            offer(target_point(block));
        }
        best
    }

    /// Whether `w` is a position `next_candidate` could return for `curr`.
    pub fn is_candidate(&self, curr: Vertex, w: Vertex) -> bool {
        if w == curr || !curr.dominated_by(w) || !self.contains(w) || !self.contains(curr) {
            return false;
        }
        let p = &self.params;
        if Some(curr) == self.source && !p.is_vertex(curr) {
            let block = p.interior_block(curr);
            return p.block_contains(block, w);
        }
        if !p.is_vertex(curr) {
            return false;
        }
        blocks_of(p, curr)
            .iter()
            .any(|&blk| p.block_contains(blk, w))
    }

    /// The plain edge rule: `u` and `w` share a block, do not share a
    /// gridline unless they are a corner pair of that block, and `w` is
    /// reachable from `u` inside the block.
    pub(crate) fn literal_edge<F>(&self, u: Vertex, w: Vertex, reach_fn: &mut F) -> bool
    where
        F: FnMut(&SubgridView<'g>, Vertex, Vertex) -> bool,
    {
        if u == w || !u.dominated_by(w) {
            return false;
        }
        let p = &self.params;
        let shares = on_gridlines(p, u).shares_with(&on_gridlines(p, w));
        for block in blocks_of(p, u) {
            if !p.block_contains(block, w) {
                continue;
            }
            if shares && !is_corner_pair(p, block, u, w) {
                continue;
            }
            return self.reach_in_block(block, u, w, reach_fn);
        }
        false
    }

    fn reach_in_block<F>(&self, block: BlockRef, u: Vertex, w: Vertex, reach_fn: &mut F) -> bool
    where
        F: FnMut(&SubgridView<'g>, Vertex, Vertex) -> bool,
    {
        let o = self.params.block_origin(block);
        let view = self.block_view(block);
        reach_fn(
            &view,
            Vertex::new(u.x - o.x, u.y - o.y),
            Vertex::new(w.x - o.x, w.y - o.y),
        )
    }

    /// Edge test in the (possibly augmented) graph. Returns false for pairs
    /// that are not candidates.
    pub fn edge<F>(&self, u: Vertex, w: Vertex, reach_fn: &mut F) -> bool
    where
        F: FnMut(&SubgridView<'g>, Vertex, Vertex) -> bool,
    {
        if u == w || !u.dominated_by(w) {
            return false;
        }
        let p = &self.params;
        let off_source = self.off_grid(self.source);
        let off_target = self.off_grid(self.target);

        if Some(u) == off_source {
            let block = p.interior_block(u);
            if !p.block_contains(block, w) {
                return false;
            }
            if !p.is_vertex(w) && Some(w) != off_target {
                return false;
            }
            return self.reach_in_block(block, u, w, reach_fn);
        }
        if Some(w) == off_target {
            let block = p.interior_block(w);
            if !p.is_vertex(u) || !p.block_contains(block, u) {
                return false;
            }
            return self.reach_in_block(block, u, w, reach_fn);
        }
        if !p.is_vertex(u) || !p.is_vertex(w) {
            return false;
        }
        if self.literal_edge(u, w, reach_fn) {
            return true;
        }
        let run = (Some(u) == self.source && self.segment_end(u) == Some(w))
            || (Some(w) == self.target && self.segment_start(w) == Some(u));
        if run {
            let block = blocks_of(p, u)
                .into_iter()
                .find(|&blk| p.block_contains(blk, w))
                .expect("segment lies on a block side");
            return self.reach_in_block(block, u, w, reach_fn);
        }
        false
    }

    /// Next out-neighbor of `curr` strictly after `prev` in counter-clockwise
    /// order, or the first one when `prev` is `None`.
    pub fn next_neighbor<F>(
        &self,
        curr: Vertex,
        prev: Option<Vertex>,
        reach_fn: &mut F,
    ) -> Result<Option<Vertex>>
    where
        F: FnMut(&SubgridView<'g>, Vertex, Vertex) -> bool,
    {
        if !self.contains(curr) {
            return Err(Error::NotAuxVertex(curr));
        }
        if let Some(prev) = prev {
            if !self.is_candidate(curr, prev) {
                return Err(Error::NotANeighbor { curr, prev });
            }
        }
        let mut after = prev;
        while let Some(w) = self.next_candidate(curr, after) {
            if self.edge(curr, w, reach_fn) {
                return Ok(Some(w));
            }
            after = Some(w);
        }
        Ok(None)
    }
}
