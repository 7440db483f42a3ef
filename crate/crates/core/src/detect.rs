//! Subgraph searches: `K5` variants, fixed-length cycles, hamiltonian cycles.
//!
//! `K5⁻` and `W4` are matched as subgraphs (not induced), so a 5-set
//! qualifies by its induced edge count: 10 for `K5`, at least 9 for `K5⁻`,
//! and for `W4` at least 8 with the (at most two) missing edges disjoint.

use alloc::vec;
use alloc::vec::Vec;

use crate::budget::{Budget, BudgetExceeded};
use crate::embed::RotationGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum K5Variant {
    K5,
    K5Minus,
    W4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    K5,
    K5Minus,
    W4,
    Cycle(usize),
}

impl From<K5Variant> for Pattern {
    fn from(v: K5Variant) -> Self {
        match v {
            K5Variant::K5 => Pattern::K5,
            K5Variant::K5Minus => Pattern::K5Minus,
            K5Variant::W4 => Pattern::W4,
        }
    }
}

/// A pattern occurrence; `witness` is the 5-set (sorted) or the cycle in
/// traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternHit {
    pub pattern: Pattern,
    pub witness: Vec<usize>,
}

impl PatternHit {
    /// Re-checks the witness against `g` by direct edge inspection.
    pub fn revalidate(&self, g: &RotationGraph) -> bool {
        match self.pattern {
            Pattern::K5 => five_set_matches(g, &self.witness, K5Variant::K5),
            Pattern::K5Minus => five_set_matches(g, &self.witness, K5Variant::K5Minus),
            Pattern::W4 => five_set_matches(g, &self.witness, K5Variant::W4),
            Pattern::Cycle(len) => self.witness.len() == len && is_cycle(g, &self.witness),
        }
    }
}

/// `order` lists distinct vertices, consecutive ones (cyclically) adjacent.
pub fn is_cycle(g: &RotationGraph, order: &[usize]) -> bool {
    let k = order.len();
    if k < 3 || order.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == k && (0..k).all(|i| g.has_edge(order[i], order[(i + 1) % k]))
}

fn missing_pairs(g: &RotationGraph, set: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if !g.has_edge(set[i], set[j]) {
                out.push((set[i], set[j]));
            }
        }
    }
    out
}

fn five_set_matches(g: &RotationGraph, set: &[usize], which: K5Variant) -> bool {
    if set.len() != 5 || set.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != 5 {
        return false;
    }
    let missing = missing_pairs(g, &s);
    match which {
        K5Variant::K5 => missing.is_empty(),
        K5Variant::K5Minus => missing.len() <= 1,
        K5Variant::W4 => match missing.as_slice() {
            [] | [_] => true,
            [(a, b), (c, d)] => a != c && a != d && b != c && b != d,
            _ => false,
        },
    }
}

/// First 5-set (lexicographic in vertex index) containing `which` as a
/// subgraph.
pub fn find_k5_variant(g: &RotationGraph, which: K5Variant) -> Option<PatternHit> {
    let min_deg = match which {
        K5Variant::K5 => 4,
        _ => 3,
    };
    let cand: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= min_deg).collect();
    let max_missing = match which {
        K5Variant::K5 => 0,
        K5Variant::K5Minus => 1,
        K5Variant::W4 => 2,
    };
    let mut chosen = Vec::with_capacity(5);
    if pick_five(g, &cand, 0, &mut chosen, 0, max_missing, which) {
        Some(PatternHit {
            pattern: which.into(),
            witness: chosen,
        })
    } else {
        None
    }
}

fn pick_five(
    g: &RotationGraph,
    cand: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    missing: usize,
    max_missing: usize,
    which: K5Variant,
) -> bool {
    if chosen.len() == 5 {
        return five_set_matches(g, chosen, which);
    }
    let need = 5 - chosen.len();
    for i in from..cand.len() {
        if cand.len() - i < need {
            break;
        }
        let v = cand[i];
        let extra = chosen.iter().filter(|&&u| !g.has_edge(u, v)).count();
        if missing + extra > max_missing {
            continue;
        }
        chosen.push(v);
        if pick_five(g, cand, i + 1, chosen, missing + extra, max_missing, which) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A cycle of exactly `len` vertices, if one exists.
///
/// Cycles are searched from their smallest vertex `s` through vertices
/// larger than `s`, and only in the orientation whose second vertex is
/// smaller than its last, so each cycle is met once. BFS distances back to
/// `s` prune paths that cannot close in time.
pub fn has_cycle_of_length(
    g: &RotationGraph,
    len: usize,
    budget: &mut Budget,
) -> Result<Option<PatternHit>, BudgetExceeded> {
    let n = g.vertex_count();
    if len < 3 || len > n {
        return Ok(None);
    }
    let mut on_path = vec![false; n];
    let mut dist = vec![usize::MAX; n];
    for s in 0..n {
        if n - s < len {
            break;
        }
        distances_within(g, s, &mut dist);
        let mut path = vec![s];
        on_path[s] = true;
        let found = extend_cycle(g, len, &dist, &mut path, &mut on_path, budget)?;
        on_path[s] = false;
        if found {
            return Ok(Some(PatternHit {
                pattern: Pattern::Cycle(len),
                witness: path,
            }));
        }
    }
    Ok(None)
}

// BFS from s inside the vertex set {v >= s}
fn distances_within(g: &RotationGraph, s: usize, dist: &mut [usize]) {
    dist.iter_mut().for_each(|d| *d = usize::MAX);
    dist[s] = 0;
    let mut queue = vec![s];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in g.rotation(v) {
            if w >= s && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
}

fn extend_cycle(
    g: &RotationGraph,
    len: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    budget: &mut Budget,
) -> Result<bool, BudgetExceeded> {
    budget.tick()?;
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == len {
        return Ok(g.has_edge(last, s) && path[1] < last);
    }
    // after adding w, the walk back from w to s must use len - path.len() edges
    let remaining = len - path.len();
    for w in g.sorted_neighbors(last) {
        if w <= s || on_path[w] || dist[w] > remaining {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend_cycle(g, len, dist, path, on_path, budget)? {
            return Ok(true);
        }
        on_path[w] = false;
        path.pop();
    }
    Ok(false)
}

/// Every cycle of `g` (as a vertex sequence starting at its smallest
/// vertex), restricted to vertices accepted by `allow`, up to `max_len`.
pub fn enumerate_cycles<F: Fn(usize) -> bool>(
    g: &RotationGraph,
    allow: F,
    max_len: usize,
    budget: &mut Budget,
    mut visit: impl FnMut(&[usize]),
) -> Result<(), BudgetExceeded> {
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    for s in 0..n {
        if !allow(s) {
            continue;
        }
        let mut path = vec![s];
        on_path[s] = true;
        walk_cycles(g, &allow, max_len, &mut path, &mut on_path, budget, &mut visit)?;
        on_path[s] = false;
    }
    Ok(())
}

fn walk_cycles<F: Fn(usize) -> bool>(
    g: &RotationGraph,
    allow: &F,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    budget: &mut Budget,
    visit: &mut impl FnMut(&[usize]),
) -> Result<(), BudgetExceeded> {
    budget.tick()?;
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() >= 3 && path[1] < last && g.has_edge(last, s) {
        visit(path);
    }
    if path.len() == max_len {
        return Ok(());
    }
    for w in g.sorted_neighbors(last) {
        if w <= s || on_path[w] || !allow(w) {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        walk_cycles(g, allow, max_len, path, on_path, budget, visit)?;
        on_path[w] = false;
        path.pop();
    }
    Ok(())
}

/// A hamiltonian cycle starting at vertex 0, found by backtracking that
/// extends the path towards the neighbour with the fewest free neighbours.
pub fn find_hamiltonian_cycle(
    g: &RotationGraph,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>, BudgetExceeded> {
    let n = g.vertex_count();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Ok(None);
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut path = vec![0];
    if ham_extend(g, &mut path, &mut used, budget)? {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn ham_extend(
    g: &RotationGraph,
    path: &mut Vec<usize>,
    used: &mut [bool],
    budget: &mut Budget,
) -> Result<bool, BudgetExceeded> {
    budget.tick()?;
    let n = g.vertex_count();
    let last = *path.last().unwrap();
    if path.len() == n {
        return Ok(g.has_edge(last, path[0]));
    }
    // every free vertex still needs two usable neighbours
    for v in 0..n {
        if used[v] {
            continue;
        }
        let usable = g
            .rotation(v)
            .iter()
            .filter(|&&w| !used[w] || w == last || w == path[0])
            .count();
        if usable < 2 {
            return Ok(false);
        }
    }
    let free_degree = |v: usize, used: &[bool]| g.rotation(v).iter().filter(|&&w| !used[w]).count();
    let mut next: Vec<usize> = g.sorted_neighbors(last).filter(|&w| !used[w]).collect();
    next.sort_by_key(|&w| (free_degree(w, used), w));
    for w in next {
        used[w] = true;
        path.push(w);
        if ham_extend(g, path, used, budget)? {
            return Ok(true);
        }
        path.pop();
        used[w] = false;
    }
    Ok(false)
}
