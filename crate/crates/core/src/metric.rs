//! Word length in the generators `x0, x1` computed from the canonical diagram.
//!
//! Every vertex of a canonical diagram lies on its longest positive path, so
//! vertices are numbered `0..=L`. Each node of either forest covering leaves
//! `[a, a + w)` is an edge of the diagram between vertices `a` and `a + w`.
//!
//! A vertex is *active* if it is the initial point of a cell or of a
//! nontrivial bridge (a path shared by the top and bottom boundary with cells
//! to its right), and *special* if it is active and at distance at least 2
//! from vertex 0. The norm is `#cells + 2 * #special`.

use std::collections::{BTreeSet, VecDeque};

use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::words::{GenWord, Letter, TWO_GENERATORS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramGraph {
    pub vertex_count: usize,
    /// Deduplicated arcs `(a, b)` with `a < b`.
    pub arcs: BTreeSet<(usize, usize)>,
}

impl DiagramGraph {
    /// Breadth-first distances from vertex 0.
    pub fn distances_from_origin(&self) -> Vec<usize> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.arcs {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut dist = vec![usize::MAX; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        dist[0] = 0;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

pub fn diagram_graph(d: &Diagram) -> DiagramGraph {
    let arcs = d.top().spans().into_iter().chain(d.bottom().spans()).map(|(a, w)| (a, a + w)).collect();
    DiagramGraph { vertex_count: d.leaf_count() + 1, arcs }
}

pub fn active_vertices(d: &Diagram) -> BTreeSet<usize> {
    let mut active: BTreeSet<usize> = d.top().caret_starts().into_iter().collect();
    active.extend(d.bottom().caret_starts());
    let Some(&last_cell) = active.iter().next_back() else {
        return active;
    };
    // A bare leaf root in both forests is a one-edge bridge; it is nontrivial
    // when some cell starts strictly to its right.
    let bottom_bare: BTreeSet<usize> = d.bottom().root_leaves().into_iter().collect();
    active.extend(d.top().root_leaves().into_iter().filter(|v| bottom_bare.contains(v) && *v < last_cell));
    active
}

pub fn special_vertices(d: &Diagram) -> BTreeSet<usize> {
    let dist = diagram_graph(d).distances_from_origin();
    active_vertices(d).into_iter().filter(|&v| dist[v] >= 2).collect()
}

/// Length of a shortest word in `x0^{±1}, x1^{±1}` representing `d`.
pub fn norm(d: &Diagram) -> usize {
    d.cell_count() + 2 * special_vertices(d).len()
}

/// Norms of `d·x0`, `d·x0^-1`, `d·x1`, `d·x1^-1`.
pub fn neighbor_norms(d: &Diagram) -> [usize; 4] {
    TWO_GENERATORS.map(|a| norm(&d.mul_letter(a)))
}

/// True when the norm strictly decreases under right multiplication by each
/// of the four generator letters. The identity is rejected.
pub fn is_dead(d: &Diagram) -> Result<bool> {
    if d.is_identity() {
        return Err(Error::Domain("the identity has no dead-vertex status".into()));
    }
    let n = norm(d);
    Ok(neighbor_norms(d).iter().all(|&m| m < n))
}

/// Greedy descent to the identity: repeatedly step to a neighbor of smaller
/// norm. By the unit-step property this takes exactly `norm(d)` steps; the
/// returned word represents `d` and has length `norm(d)`.
pub fn geodesic(d: &Diagram) -> GenWord {
    let mut current = d.clone();
    let mut n = norm(&current);
    // Letters a_1, a_2, ... with d·a_1·a_2··· = 1, so d = ...a_2^-1 a_1^-1.
    let mut path: Vec<Letter> = Vec::with_capacity(n);
    while n > 0 {
        let (letter, next, m) = TWO_GENERATORS
            .iter()
            .map(|&a| {
                let e = current.mul_letter(a);
                let m = norm(&e);
                (a, e, m)
            })
            .find(|(_, _, m)| *m < n)
            .expect("a nonidentity element has a descending neighbor");
        path.push(letter);
        current = next;
        n = m;
    }
    GenWord::new(path).inverse()
}
