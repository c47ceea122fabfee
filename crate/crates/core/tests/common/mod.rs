//! Test-only helpers: the materialized auxiliary graph and small searches.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use gridreach::auxgraph::{AuxGraph, AuxParams};
use gridreach::oracle::oracle_reach;
use gridreach::{SubgridView, Vertex};

pub fn oracle_fn<'g>() -> impl FnMut(&SubgridView<'g>, Vertex, Vertex) -> bool {
    |view: &SubgridView<'g>, a, b| oracle_reach(view, a, b).unwrap()
}

pub fn aux_vertices(p: &AuxParams) -> Vec<Vertex> {
    let mut out = Vec::new();
    for y in 0..=p.n() {
        for x in 0..=p.n() {
            let v = Vertex::new(x, y);
            if p.is_vertex(v) {
                out.push(v);
            }
        }
    }
    out
}

/// All edges of the plain auxiliary graph, sorted.
pub fn explicit_h<'g, F>(
    p: AuxParams,
    g: SubgridView<'g>,
    reach_fn: &mut F,
) -> Vec<(Vertex, Vertex)>
where
    F: FnMut(&SubgridView<'g>, Vertex, Vertex) -> bool,
{
    let aux = AuxGraph::plain(p, g).unwrap();
    let mut edges = Vec::new();
    for u in aux_vertices(&p) {
        let mut after = None;
        while let Some(w) = aux.next_candidate(u, after) {
            if aux.edge(u, w, reach_fn) {
                edges.push((u, w));
            }
            after = Some(w);
        }
    }
    edges.sort_by_key(|&(a, b)| (a.x, a.y, b.x, b.y));
    edges
}

/// One `"x1,y1 -> x2,y2"` line per edge.
pub fn serialize_edges(edges: &[(Vertex, Vertex)]) -> String {
    edges.iter().map(|(a, b)| format!("{a} -> {b}\n")).collect()
}

pub fn adjacency(edges: &[(Vertex, Vertex)]) -> HashMap<Vertex, Vec<Vertex>> {
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
    }
    adj
}

/// Vertices reachable from `s` in `adj`, optionally with one extra edge out
/// of `s`.
pub fn bfs(
    adj: &HashMap<Vertex, Vec<Vertex>>,
    s: Vertex,
    extra: Option<Vertex>,
) -> HashSet<Vertex> {
    let mut seen = HashSet::from([s]);
    let mut queue = VecDeque::from([s]);
    if let Some(e) = extra {
        if seen.insert(e) {
            queue.push_back(e);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// For a vertex on exactly one gridline: the crossings that end and start
/// its gridline segment.
pub fn segment_ends(p: &AuxParams, a: Vertex) -> Option<(Vertex, Vertex)> {
    let b = p.block_side();
    match (a.x.is_multiple_of(b), a.y.is_multiple_of(b)) {
        (true, false) => Some((
            Vertex::new(a.x, (a.y / b + 1) * b),
            Vertex::new(a.x, a.y / b * b),
        )),
        (false, true) => Some((
            Vertex::new((a.x / b + 1) * b, a.y),
            Vertex::new(a.x / b * b, a.y),
        )),
        _ => None,
    }
}
