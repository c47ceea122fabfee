//! Depth-first search over the auxiliary graph with per-gridline markers.

use std::collections::HashMap;

use crate::auxgraph::{on_gridlines, AuxGraph, AuxParams, GridlineSet};
use crate::grid::Vertex;

/// Highest visited vertex per vertical gridline and leftmost visited vertex
/// per horizontal gridline. `None` admits everything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkerArrays {
    a_v: Vec<Option<Vertex>>,
    a_h: Vec<Option<Vertex>>,
}

impl MarkerArrays {
    pub fn new(k: usize) -> Self {
        MarkerArrays {
            a_v: vec![None; k + 1],
            a_h: vec![None; k + 1],
        }
    }

    /// Tracked words: one per entry.
    pub fn words(&self) -> usize {
        self.a_v.len() + self.a_h.len()
    }

    pub fn vertical(&self, index: usize) -> Option<Vertex> {
        self.a_v[index - 1]
    }

    pub fn horizontal(&self, index: usize) -> Option<Vertex> {
        self.a_h[index - 1]
    }

    fn admits_vertical(&self, i: usize, w: Vertex) -> bool {
        self.a_v[i - 1].is_none_or(|m| m.y < w.y)
    }

    fn admits_horizontal(&self, i: usize, w: Vertex) -> bool {
        self.a_h[i - 1].is_none_or(|m| m.x > w.x)
    }

    /// Some marker on a line through `w` has `w` strictly beyond it.
    pub fn admits(&self, lines: &GridlineSet, w: Vertex) -> bool {
        lines
            .vertical
            .is_some_and(|l| self.admits_vertical(l.index, w))
            || lines
                .horizontal
                .is_some_and(|l| self.admits_horizontal(l.index, w))
    }

    /// Advances every marker that admits `w` to `w`. Markers only move
    /// strictly up (vertical) or strictly left (horizontal).
    pub fn advance(&mut self, lines: &GridlineSet, w: Vertex) {
        if let Some(l) = lines.vertical {
            if self.admits_vertical(l.index, w) {
                self.a_v[l.index - 1] = Some(w);
            }
        }
        if let Some(l) = lines.horizontal {
            if self.admits_horizontal(l.index, w) {
                self.a_h[l.index - 1] = Some(w);
            }
        }
    }
}

/// The DFS stack: a directed path in the auxiliary graph starting at the
/// source.
#[derive(Clone, Debug, Default)]
pub struct TraversalStack {
    frames: Vec<Vertex>,
    capacity: usize,
}

impl TraversalStack {
    /// Room for `2k + 3` frames: the longest auxiliary path plus one
    /// augmented endpoint on each side.
    pub fn for_divisor(k: usize) -> Self {
        let capacity = 2 * k + 3;
        TraversalStack {
            frames: Vec::with_capacity(capacity),
            capacity,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn top(&self) -> Option<Vertex> {
        self.frames.last().copied()
    }

    pub fn push(&mut self, v: Vertex) {
        self.frames.push(v);
    }

    pub fn pop(&mut self) -> Option<Vertex> {
        self.frames.pop()
    }

    pub fn frames(&self) -> &[Vertex] {
        &self.frames
    }
}

/// Knobs for [`algo_lggr`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LggrOptions {
    /// Skip the edge query for candidates the markers would reject anyway.
    /// The push/pop sequence is unchanged; only edge queries are saved.
    pub prune_before_query: bool,
    /// Record every pushed vertex to check that none is pushed twice.
    pub audit: bool,
    /// Test the markers before comparing a neighbor with the target.
    /// Deliberately wrong; exists so tests can check that the differential
    /// harness notices.
    #[doc(hidden)]
    pub late_target_check: bool,
}

impl Default for LggrOptions {
    fn default() -> Self {
        LggrOptions {
            prune_before_query: true,
            audit: false,
            late_target_check: false,
        }
    }
}

/// Callbacks from [`algo_lggr`] into its caller.
pub trait LggrHost<'g> {
    /// Edge test in `aux`. Normally recurses into a block.
    fn edge(&mut self, aux: &AuxGraph<'g>, from: Vertex, to: Vertex) -> bool;

    fn on_push(&mut self, _stack: &TraversalStack) {}

    fn on_pop(&mut self, _stack: &TraversalStack) {}
}

/// Adapts a plain closure into an [`LggrHost`].
pub struct EdgeFn<F>(pub F);

impl<'g, F> LggrHost<'g> for EdgeFn<F>
where
    F: FnMut(&AuxGraph<'g>, Vertex, Vertex) -> bool,
{
    fn edge(&mut self, aux: &AuxGraph<'g>, from: Vertex, to: Vertex) -> bool {
        (self.0)(aux, from, to)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LggrOutcome {
    pub reachable: bool,
    pub pushes: u64,
    pub pops: u64,
    pub edge_queries: u64,
    pub peak_stack: usize,
    /// Vertices pushed more than once (only counted when auditing).
    pub repeated_pushes: u64,
}

/// Decides whether `v` is reachable from `u` in `aux`.
///
/// Neighbors of the top of the stack are tried in counter-clockwise order.
/// A neighbor equal to `v` ends the search. Any other neighbor is pushed only
/// if it lies strictly above the marker of its vertical gridline or strictly
/// left of the marker of its horizontal gridline; the admitting markers then
/// move to it. When a vertex runs out of neighbors it is popped and its parent
/// resumes after it.
pub fn algo_lggr<'g, H: LggrHost<'g>>(
    aux: &AuxGraph<'g>,
    u: Vertex,
    v: Vertex,
    host: &mut H,
    opts: LggrOptions,
) -> LggrOutcome {
    let p: &AuxParams = aux.params();
    let mut out = LggrOutcome::default();
    let mut markers = MarkerArrays::new(p.k());
    let mut stack = TraversalStack::for_divisor(p.k());
    let mut seen: Option<HashMap<Vertex, u32>> = opts.audit.then(HashMap::new);

    let lines_of = |w: Vertex| {
        if p.is_vertex(w) {
            on_gridlines(p, w)
        } else {
            GridlineSet::default()
        }
    };
    // Off-grid vertices (only the augmented endpoints) have no marker.
    let admitted = |m: &MarkerArrays, w: Vertex| {
        let lines = lines_of(w);
        lines.is_empty() || m.admits(&lines, w)
    };

    stack.push(u);
    out.pushes += 1;
    out.peak_stack = 1;
    if let Some(seen) = seen.as_mut() {
        seen.insert(u, 1);
    }
    host.on_push(&stack);

    let mut prev: Option<Vertex> = None;
    while let Some(curr) = stack.top() {
        let mut after = prev;
        let mut next = None;
        while let Some(cand) = aux.next_candidate(curr, after) {
            after = Some(cand);
            if opts.late_target_check {
                if !admitted(&markers, cand) {
                    continue;
                }
                out.edge_queries += 1;
                if !host.edge(aux, curr, cand) {
                    continue;
                }
                if cand == v {
                    out.reachable = true;
                    return out;
                }
                next = Some(cand);
                break;
            }
            if cand != v && opts.prune_before_query && !admitted(&markers, cand) {
                continue;
            }
            out.edge_queries += 1;
            if !host.edge(aux, curr, cand) {
                continue;
            }
            if cand == v {
                out.reachable = true;
                return out;
            }
            if admitted(&markers, cand) {
                next = Some(cand);
                break;
            }
        }

        match next {
            None => {
                stack.pop();
                out.pops += 1;
                host.on_pop(&stack);
                prev = Some(curr);
            }
            Some(w) => {
                markers.advance(&lines_of(w), w);
                stack.push(w);
                out.pushes += 1;
                out.peak_stack = out.peak_stack.max(stack.len());
                if let Some(seen) = seen.as_mut() {
                    let c = seen.entry(w).or_insert(0);
                    *c += 1;
                    if *c > 1 {
                        out.repeated_pushes += 1;
                    }
                }
                host.on_push(&stack);
                prev = None;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auxgraph::Gridline;
    use crate::generate::{gen_family, gen_random, Family};
    use crate::grid::SubgridView;
    use crate::oracle::oracle_reach;

    fn oracle_edge<'g>(aux: &AuxGraph<'g>, a: Vertex, b: Vertex) -> bool {
        aux.edge(a, b, &mut |view: &SubgridView<'g>, x, y| {
            oracle_reach(view, x, y).unwrap()
        })
    }

    fn run(
        g: &crate::grid::LayeredGridGraph,
        k: usize,
        u: Vertex,
        v: Vertex,
        opts: LggrOptions,
    ) -> LggrOutcome {
        let p = AuxParams::new(g.n(), k).unwrap();
        let aux = AuxGraph::augmented(p, g.view(), u, v).unwrap();
        algo_lggr(&aux, u, v, &mut EdgeFn(oracle_edge), opts)
    }

    #[test]
    fn markers_move_monotonically() {
        let mut m = MarkerArrays::new(3);
        let lines = GridlineSet {
            vertical: Some(Gridline::vertical(2)),
            horizontal: None,
        };
        assert!(m.admits(&lines, Vertex::new(3, 1)));
        m.advance(&lines, Vertex::new(3, 4));
        assert!(!m.admits(&lines, Vertex::new(3, 1)));
        assert!(!m.admits(&lines, Vertex::new(3, 4)));
        assert!(m.admits(&lines, Vertex::new(3, 5)));

        let both = GridlineSet {
            vertical: Some(Gridline::vertical(3)),
            horizontal: Some(Gridline::horizontal(2)),
        };
        let h = GridlineSet {
            vertical: None,
            horizontal: Some(Gridline::horizontal(2)),
        };
        m.advance(&h, Vertex::new(1, 3));
        // (6,3) is right of the horizontal marker but its vertical line is unvisited
        assert!(m.admits(&both, Vertex::new(6, 3)));
        m.advance(&both, Vertex::new(6, 3));
        assert_eq!(m.horizontal(2), Some(Vertex::new(1, 3)));
        assert_eq!(m.vertical(3), Some(Vertex::new(6, 3)));
        assert!(!m.admits(&both, Vertex::new(6, 3)));
        assert_eq!(m.words(), 8);
    }

    #[test]
    fn full_grid_corner_to_corner() {
        let g = gen_family(Family::Full, 9);
        let out = run(
            &g,
            3,
            Vertex::new(0, 0),
            Vertex::new(9, 9),
            LggrOptions::default(),
        );
        assert!(out.reachable);
        assert!(out.peak_stack <= 2 * 3 + 1);
    }

    #[test]
    fn empty_grid() {
        let g = gen_family(Family::Empty, 9);
        let out = run(
            &g,
            3,
            Vertex::new(0, 0),
            Vertex::new(9, 9),
            LggrOptions::default(),
        );
        assert!(!out.reachable);
        assert_eq!(out.pushes, 1);
        assert_eq!(out.pops, 1);
    }

    #[test]
    fn differential_on_boundary_pairs() {
        let p = AuxParams::new(12, 3).unwrap();
        let boundary: Vec<Vertex> = (0..=12)
            .flat_map(|y| (0..=12).map(move |x| Vertex::new(x, y)))
            .filter(|&w| p.is_vertex(w))
            .collect();
        let opts = LggrOptions {
            audit: true,
            ..Default::default()
        };
        for seed in 0..200u64 {
            let g = gen_random(12, 0.6, 0.6, seed);
            // a deterministic sample of pairs per instance keeps this quick
            for i in 0..20usize {
                let u = boundary[(seed as usize * 31 + i * 17) % boundary.len()];
                let v = boundary[(seed as usize * 7 + i * 53 + 11) % boundary.len()];
                let out = run(&g, 3, u, v, opts);
                let truth = oracle_reach(&g.view(), u, v).unwrap();
                assert_eq!(out.reachable, truth, "seed {seed} {u} -> {v}");
                assert_eq!(out.repeated_pushes, 0);
            }
        }
    }

    #[test]
    fn pruning_preserves_the_traversal() {
        for seed in 0..30u64 {
            let g = gen_random(12, 0.55, 0.55, seed);
            let (u, v) = (Vertex::new(0, 0), Vertex::new(12, 12));
            let pruned = run(&g, 3, u, v, LggrOptions::default());
            let faithful = run(
                &g,
                3,
                u,
                v,
                LggrOptions {
                    prune_before_query: false,
                    ..Default::default()
                },
            );
            assert_eq!(pruned.reachable, faithful.reachable);
            assert_eq!(pruned.pushes, faithful.pushes);
            assert_eq!(pruned.pops, faithful.pops);
            assert_eq!(pruned.peak_stack, faithful.peak_stack);
            assert!(pruned.edge_queries <= faithful.edge_queries);
        }
    }
}
