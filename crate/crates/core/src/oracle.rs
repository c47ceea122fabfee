//! Full-memory reachability, used as ground truth.

use std::collections::VecDeque;

use crate::error::Result;
use crate::grid::{SubgridView, Vertex};

/// Breadth-first search over the view with a visited bitmap. Coordinates are
/// local to the view.
pub fn oracle_reach(view: &SubgridView<'_>, s: Vertex, t: Vertex) -> Result<bool> {
    view.check(s)?;
    view.check(t)?;
    if s == t {
        return Ok(true);
    }
    if !s.dominated_by(t) {
        return Ok(false);
    }
    let w = view.side() + 1;
    let mut seen = vec![false; w * w];
    let mut queue = VecDeque::new();
    seen[s.y * w + s.x] = true;
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        let mut step = |next: Vertex| {
            let i = next.y * w + next.x;
            if !seen[i] {
                seen[i] = true;
                queue.push_back(next);
            }
        };
        if view.has_north(v.x, v.y) {
            step(Vertex::new(v.x, v.y + 1));
        }
        if view.has_east(v.x, v.y) {
            step(Vertex::new(v.x + 1, v.y));
        }
    }
    Ok(seen[t.y * w + t.x])
}

/// Every vertex reachable from `s` in the view, as a row-major bitmap.
pub fn reachable_set(view: &SubgridView<'_>, s: Vertex) -> Vec<bool> {
    let w = view.side() + 1;
    let mut seen = vec![false; w * w];
    let mut stack = vec![s];
    seen[s.y * w + s.x] = true;
    while let Some(v) = stack.pop() {
        for (ok, next) in [
            (view.has_north(v.x, v.y), Vertex::new(v.x, v.y + 1)),
            (view.has_east(v.x, v.y), Vertex::new(v.x + 1, v.y)),
        ] {
            if ok && !seen[next.y * w + next.x] {
                seen[next.y * w + next.x] = true;
                stack.push(next);
            }
        }
    }
    seen
}
