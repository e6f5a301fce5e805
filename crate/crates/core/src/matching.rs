//! Maximum bipartite matching (Hopcroft–Karp) and the König minimum vertex
//! cover derived from it.
//!
//! Left and right vertices are both indexed `0..n`. All scans run in
//! ascending index order, so results are deterministic for a given
//! adjacency. The augmenting-path search is iterative; alternating paths in
//! large sparse graphs can be far longer than a thread stack allows.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;
const INF: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct BipartiteMatching {
    /// `mate_left[u]` is the right vertex matched to left `u`, or `None`.
    pub mate_left: Vec<Option<usize>>,
    pub mate_right: Vec<Option<usize>>,
    pub size: usize,
}

/// Maximum matching of the bipartite graph whose left vertex `u` is adjacent
/// to the right vertices `adj[u]`. `n_right` bounds the right side.
pub fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> BipartiteMatching {
    let n_left = adj.len();
    let mut mate_l = vec![NIL; n_left];
    let mut mate_r = vec![NIL; n_right];
    let mut dist = vec![INF; n_left];
    let mut size = 0;

    // Greedy warm start.
    for u in 0..n_left {
        if let Some(&v) = adj[u].iter().find(|&&v| mate_r[v] == NIL) {
            mate_l[u] = v;
            mate_r[v] = u;
            size += 1;
        }
    }

    let mut queue = VecDeque::new();
    let mut cursor = vec![0usize; n_left];
    let mut stack: Vec<usize> = Vec::new();
    loop {
        // BFS layering from free left vertices.
        queue.clear();
        for u in 0..n_left {
            if mate_l[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_r[v];
                if w == NIL {
                    found = true;
                } else if dist[w] == INF {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }

        // Layered DFS for a maximal set of vertex-disjoint shortest paths.
        cursor.iter_mut().for_each(|c| *c = 0);
        for root in 0..n_left {
            if mate_l[root] != NIL {
                continue;
            }
            stack.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                if cursor[u] == adj[u].len() {
                    dist[u] = INF;
                    stack.pop();
                    continue;
                }
                let v = adj[u][cursor[u]];
                let w = mate_r[v];
                if w == NIL {
                    // Augment along the stack: each level u_i takes the right
                    // vertex at its cursor.
                    for &x in stack.iter().rev() {
                        let vx = adj[x][cursor[x]];
                        mate_l[x] = vx;
                        mate_r[vx] = x;
                    }
                    for &x in &stack {
                        dist[x] = INF;
                    }
                    size += 1;
                    break;
                } else if dist[w] != INF && dist[w] == dist[u] + 1 {
                    stack.push(w);
                } else {
                    cursor[u] += 1;
                }
            }
        }
    }

    let wrap = |m: Vec<usize>| m.into_iter().map(|x| (x != NIL).then_some(x)).collect();
    BipartiteMatching { mate_left: wrap(mate_l), mate_right: wrap(mate_r), size }
}

/// Minimum vertex cover via König: with `Z` the set reachable from free left
/// vertices along alternating paths, the cover is `(L \ Z) ∪ (R ∩ Z)`.
/// Returns `(left_in_cover, right_in_cover)`.
pub fn konig_cover(adj: &[Vec<usize>], n_right: usize, m: &BipartiteMatching) -> (Vec<bool>, Vec<bool>) {
    let n_left = adj.len();
    let mut seen_l = vec![false; n_left];
    let mut seen_r = vec![false; n_right];
    let mut queue = VecDeque::new();
    for (u, mate) in m.mate_left.iter().enumerate() {
        if mate.is_none() {
            seen_l[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if m.mate_left[u] == Some(v) || seen_r[v] {
                continue;
            }
            seen_r[v] = true;
            if let Some(w) = m.mate_right[v] {
                if !seen_l[w] {
                    seen_l[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (seen_l.iter().map(|&s| !s).collect(), seen_r)
}
