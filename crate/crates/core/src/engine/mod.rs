//! Space-bounded reachability: the recursion over blocks, the base case and
//! the divisor schedule.

mod lggr;

use std::collections::HashMap;

pub use lggr::{
    algo_lggr, EdgeFn, LggrHost, LggrOptions, LggrOutcome, MarkerArrays, TraversalStack,
};

use crate::auxgraph::{straight_walk, AuxGraph, AuxParams};
use crate::error::{Error, Result};
use crate::grid::{LayeredGridGraph, SubgridView, Vertex};
use crate::metrics::{Metrics, FRAME_WORDS, LEVEL_LOCAL_WORDS, WALK_WORDS};

/// `k = clamp(round(n^(epsilon/2)), 2, n)`.
pub fn choose_k(n: usize, epsilon: f64) -> usize {
    assert!(n >= 2, "side must be at least 2");
    assert!(
        epsilon > 0.0 && epsilon <= 1.0,
        "epsilon must lie in (0, 1]"
    );
    let k = (n as f64).powf(epsilon / 2.0).round() as usize;
    k.clamp(2, n)
}

/// Where the divisor `k` comes from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum KSchedule {
    /// `k` from [`choose_k`]. With `fixed`, it is computed once from the
    /// top-level side and reused at every level; otherwise it is recomputed
    /// from each level's side.
    Epsilon { epsilon: f64, fixed: bool },
    /// The same explicit `k` at every level.
    Explicit(usize),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EngineConfig {
    pub schedule: KSchedule,
    /// Sides at or below this run the base-case search. `None` means the
    /// current level's `k`.
    pub base_side_max: Option<usize>,
    /// Cache edge answers in a hash table. Faster, but the table is not
    /// tracked space; never used for bound checks.
    pub untracked_memo: bool,
    pub lggr: LggrOptions,
}

impl EngineConfig {
    pub fn epsilon(epsilon: f64) -> Self {
        EngineConfig {
            schedule: KSchedule::Epsilon {
                epsilon,
                fixed: false,
            },
            base_side_max: None,
            untracked_memo: false,
            lggr: LggrOptions::default(),
        }
    }

    /// `k` from `epsilon` at the top level, then held fixed.
    pub fn fixed_epsilon(epsilon: f64) -> Self {
        EngineConfig {
            schedule: KSchedule::Epsilon {
                epsilon,
                fixed: true,
            },
            ..Self::epsilon(epsilon)
        }
    }

    pub fn explicit_k(k: usize) -> Self {
        EngineConfig {
            schedule: KSchedule::Explicit(k),
            ..Self::epsilon(1.0)
        }
    }

    pub fn with_audit(mut self, audit: bool) -> Self {
        self.lggr.audit = audit;
        self
    }

    pub fn with_memo(mut self, memo: bool) -> Self {
        self.untracked_memo = memo;
        self
    }

    pub fn validate(&self) -> Result<()> {
        match self.schedule {
            KSchedule::Epsilon { epsilon, .. } => {
                if !(epsilon > 0.0 && epsilon <= 1.0) {
                    return Err(Error::InvalidConfig(format!(
                        "epsilon must lie in (0, 1], got {epsilon}"
                    )));
                }
            }
            KSchedule::Explicit(k) => {
                if k < 2 {
                    return Err(Error::InvalidConfig(format!(
                        "k must be at least 2, got {k}"
                    )));
                }
            }
        }
        if let Some(b) = self.base_side_max {
            if b < 2 {
                return Err(Error::InvalidConfig(format!(
                    "base_side_max must be at least 2, got {b}"
                )));
            }
        }
        Ok(())
    }

    /// Divisor for the top level of a graph of side `n`.
    pub fn top_k(&self, n: usize) -> usize {
        match self.schedule {
            KSchedule::Epsilon { epsilon, .. } => choose_k(n.max(2), epsilon),
            KSchedule::Explicit(k) => k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Answer {
    pub reachable: bool,
    pub metrics: Metrics,
}

/// Decides whether `t` is reachable from `s` in `g`.
pub fn reach(g: &LayeredGridGraph, s: Vertex, t: Vertex, cfg: &EngineConfig) -> Result<Answer> {
    cfg.validate()?;
    let view = g.view();
    view.check(s)?;
    view.check(t)?;
    let mut engine = Engine::new(cfg, g.n());
    let reachable = engine.reach_recursive(&view, s, t);
    debug_assert_eq!(engine.metrics.tracked_words(), 0);
    Ok(Answer {
        reachable,
        metrics: engine.metrics,
    })
}

/// Reachability inside a window, with the same dispatch as [`reach`].
/// Coordinates are local to `g`.
pub fn reach_recursive(
    g: &SubgridView<'_>,
    u: Vertex,
    v: Vertex,
    cfg: &EngineConfig,
    metrics: &mut Metrics,
) -> Result<bool> {
    cfg.validate()?;
    g.check(u)?;
    g.check(v)?;
    let mut engine = Engine::new(cfg, g.side());
    engine.metrics = std::mem::take(metrics);
    engine.metrics.n = g.side();
    engine.metrics.k_top = engine.top_k;
    let r = engine.reach_recursive(g, u, v);
    *metrics = engine.metrics;
    Ok(r)
}

/// Depth-first search with a visited map over the whole window.
pub fn base_dfs(g: &SubgridView<'_>, u: Vertex, v: Vertex) -> bool {
    base_dfs_counted(g, u, v, &mut Metrics::default())
}

fn base_dfs_counted(g: &SubgridView<'_>, u: Vertex, v: Vertex, m: &mut Metrics) -> bool {
    m.base_case_calls += 1;
    let w = g.side() + 1;
    let cells = w * w;
    m.track(cells);
    let mut seen = vec![false; cells];
    let mut stack = vec![u];
    seen[u.y * w + u.x] = true;
    m.track(1);
    let mut held = 1;
    let mut found = u == v;
    while let Some(x) = stack.pop() {
        m.release(1);
        held -= 1;
        if found {
            break;
        }
        m.base_expansions += 1;
        for (ok, next) in [
            (g.has_north(x.x, x.y), Vertex::new(x.x, x.y + 1)),
            (g.has_east(x.x, x.y), Vertex::new(x.x + 1, x.y)),
        ] {
            if ok && !seen[next.y * w + next.x] {
                if next == v {
                    found = true;
                }
                seen[next.y * w + next.x] = true;
                stack.push(next);
                m.track(1);
                held += 1;
            }
        }
    }
    m.release(held + cells);
    found
}

struct Engine<'c> {
    cfg: &'c EngineConfig,
    top_k: usize,
    depth: usize,
    metrics: Metrics,
    memo: Option<HashMap<(Vertex, Vertex), bool>>,
}

/// Per-level state handed to [`algo_lggr`] as its host.
struct Level<'e, 'c> {
    engine: &'e mut Engine<'c>,
    bound: usize,
}

impl<'g> LggrHost<'g> for Level<'_, '_> {
    fn edge(&mut self, aux: &AuxGraph<'g>, from: Vertex, to: Vertex) -> bool {
        let engine = &mut *self.engine;
        engine.metrics.edge_queries += 1;
        engine.depth += 1;
        let r = aux.edge(from, to, &mut |view: &SubgridView<'g>, a, b| {
            // A monotone path stays in the bounding box of its endpoints, so
            // inside the clip the answer in a block is the global one.
            let key = (view.unclipped(a) && view.unclipped(b))
                .then(|| (view.to_base(a), view.to_base(b)));
            if let (Some(memo), Some(key)) = (engine.memo.as_ref(), key) {
                if let Some(&hit) = memo.get(&key) {
                    return hit;
                }
            }
            let r = engine.reach_recursive(view, a, b);
            if let (Some(memo), Some(key)) = (engine.memo.as_mut(), key) {
                memo.insert(key, r);
            }
            r
        });
        engine.depth -= 1;
        r
    }

    fn on_push(&mut self, stack: &TraversalStack) {
        let m = &mut self.engine.metrics;
        m.pushes += 1;
        m.track(FRAME_WORDS);
        m.record_stack(self.engine.depth, stack.len());
        if stack.len() > self.bound {
            m.stack_bound_violations += 1;
        }
    }

    fn on_pop(&mut self, _stack: &TraversalStack) {
        let m = &mut self.engine.metrics;
        m.pops += 1;
        m.release(FRAME_WORDS);
    }
}

impl<'c> Engine<'c> {
    fn new(cfg: &'c EngineConfig, n: usize) -> Self {
        let top_k = cfg.top_k(n);
        Engine {
            cfg,
            top_k,
            depth: 0,
            metrics: Metrics::new(n, top_k),
            memo: cfg.untracked_memo.then(HashMap::new),
        }
    }

    fn level_k(&self, side: usize) -> usize {
        match self.cfg.schedule {
            KSchedule::Epsilon {
                epsilon,
                fixed: false,
            } => choose_k(side.max(2), epsilon),
            KSchedule::Epsilon { fixed: true, .. } | KSchedule::Explicit(_) => self.top_k,
        }
    }

    fn reach_recursive(&mut self, g: &SubgridView<'_>, u: Vertex, v: Vertex) -> bool {
        self.metrics.record_call(self.depth);
        if u == v {
            return true;
        }
        if !u.dominated_by(v) {
            return false;
        }
        if u.aligned_with(v) {
            self.metrics.track(WALK_WORDS);
            self.metrics.walk_steps += (v.x - u.x + v.y - u.y) as u64;
            let r = straight_walk(g, u, v).expect("aligned endpoints inside the window");
            self.metrics.release(WALK_WORDS);
            return r;
        }
        let side = g.side();
        let k = self.level_k(side);
        let base_max = self.cfg.base_side_max.unwrap_or(k);
        if side <= base_max {
            return base_dfs_counted(g, u, v, &mut self.metrics);
        }

        let padded = side.div_ceil(k) * k;
        let view = g.padded(padded);
        let params = AuxParams::new(padded, k).expect("padded side is a multiple of k");
        let aux = AuxGraph::augmented(params, view, u, v).expect("endpoints inside the window");
        let both_on_grid = params.is_vertex(u) && params.is_vertex(v);
        let bound = if both_on_grid { 2 * k + 1 } else { 2 * k + 3 };

        let depth = self.depth;
        self.metrics.record_k(depth, k);
        self.metrics.lggr_invocations += 1;
        let level_words = 2 * (k + 1) + LEVEL_LOCAL_WORDS;
        self.metrics.track(level_words);

        let opts = self.cfg.lggr;
        let out = {
            let mut host = Level {
                engine: self,
                bound,
            };
            algo_lggr(&aux, u, v, &mut host, opts)
        };

        let live_frames = (out.pushes - out.pops) as usize;
        self.metrics
            .release(live_frames * FRAME_WORDS + level_words);
        self.metrics.visit_once_violations += out.repeated_pushes;
        let vertex_bound = params.vertex_count() as u64 + 2;
        if out.pushes > vertex_bound {
            self.metrics.push_bound_violations += 1;
        }
        out.reachable
    }
}
