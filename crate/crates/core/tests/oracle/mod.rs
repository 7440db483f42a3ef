//! Reference implementations used to cross-check the library. They favour
//! obviousness over speed and share no code with the crate under test.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use toroid_core::RotationGraph;

/// Adjacency matrix view of a graph.
#[derive(Clone, Debug)]
pub struct Adj {
    pub n: usize,
    pub m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn new(n: usize) -> Self {
        Adj { n, m: vec![vec![false; n]; n] }
    }

    pub fn from_graph(g: &RotationGraph) -> Self {
        let mut a = Adj::new(g.vertex_count());
        for v in 0..g.vertex_count() {
            for &w in g.rotation(v) {
                a.m[v][w] = true;
            }
        }
        a
    }

    pub fn add(&mut self, u: usize, v: usize) {
        self.m[u][v] = true;
        self.m[v][u] = true;
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.m[u][v] {
                    e.push((u, v));
                }
            }
        }
        e
    }

    pub fn degree(&self, v: usize) -> usize {
        self.m[v].iter().filter(|&&b| b).count()
    }

    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.n {
                if self.m[v][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn without(&self, x: usize) -> Adj {
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != x).collect();
        let mut a = Adj::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                a.m[i][j] = self.m[u][v];
            }
        }
        a
    }

    pub fn to_graph(&self) -> RotationGraph {
        RotationGraph::from_index_edges(self.n, &self.edges()).unwrap()
    }
}

/// Face lengths of the rotation system: leave `v` along the neighbour
/// before the one we arrived from.
pub fn face_lengths(g: &RotationGraph) -> Vec<usize> {
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut lengths = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.rotation(u) {
            if used.contains(&(u, v)) {
                continue;
            }
            let (mut a, mut b) = (u, v);
            let mut len = 0;
            while used.insert((a, b)) {
                len += 1;
                let rot = g.rotation(b);
                let i = rot.iter().position(|&x| x == a).unwrap();
                let next = rot[(i + rot.len() - 1) % rot.len()];
                a = b;
                b = next;
            }
            lengths.push(len);
        }
    }
    lengths
}

/// Vertices in breadth-first order from 0 (then any unreached ones), so
/// that each vertex after the first meets an already-colored neighbour.
pub fn bfs_order(a: &Adj) -> Vec<usize> {
    let mut order = Vec::with_capacity(a.n);
    let mut seen = vec![false; a.n];
    for root in 0..a.n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in 0..a.n {
                if a.m[v][w] && !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

/// Backtracking list coloring along [`bfs_order`].
pub fn list_colorable_backtrack(a: &Adj, lists: &[Vec<u32>]) -> bool {
    fn go(a: &Adj, lists: &[Vec<u32>], order: &[usize], i: usize, c: &mut Vec<Option<u32>>) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for &col in &lists[v] {
            if (0..a.n).all(|u| !a.m[u][v] || c[u] != Some(col)) {
                c[v] = Some(col);
                if go(a, lists, order, i + 1, c) {
                    return true;
                }
                c[v] = None;
            }
        }
        false
    }
    go(a, lists, &bfs_order(a), 0, &mut vec![None; a.n])
}

pub fn colorable(a: &Adj, k: usize) -> bool {
    let lists = vec![(0..k as u32).collect::<Vec<_>>(); a.n];
    list_colorable_backtrack(a, &lists)
}

pub fn chromatic(a: &Adj) -> usize {
    (0..=a.n).find(|&k| colorable(a, k)).unwrap()
}

/// Largest number of edges induced by a 5-vertex subset.
pub fn densest_five(a: &Adj) -> usize {
    let mut best = 0;
    let n = a.n;
    for s in 0u32..(1 << n) {
        if s.count_ones() != 5 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
        let mut e = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                e += a.m[vs[i]][vs[j]] as usize;
            }
        }
        best = best.max(e);
    }
    best
}

/// Lengths of all cycles up to `max`.
pub fn cycle_lengths(a: &Adj, max: usize) -> BTreeSet<usize> {
    fn go(a: &Adj, s: usize, v: usize, len: usize, max: usize, on: &mut Vec<bool>, out: &mut BTreeSet<usize>) {
        for w in 0..a.n {
            if !a.m[v][w] {
                continue;
            }
            if w == s && len >= 3 {
                out.insert(len);
            }
            if w > s && !on[w] && len < max {
                on[w] = true;
                go(a, s, w, len + 1, max, on, out);
                on[w] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut on = vec![false; a.n];
    for s in 0..a.n {
        on[s] = true;
        go(a, s, s, 1, max, &mut on, &mut out);
        on[s] = false;
    }
    out
}

pub fn is_hamiltonian_cycle(a: &Adj, cyc: &[usize]) -> bool {
    let set: BTreeSet<usize> = cyc.iter().copied().collect();
    cyc.len() == a.n && set.len() == a.n && (0..a.n).all(|i| a.m[cyc[i]][cyc[(i + 1) % a.n]])
}

/// Tries every combination of list entries.
pub fn list_colorable(a: &Adj, lists: &[Vec<u32>]) -> bool {
    let n = a.n;
    let mut idx = vec![0usize; n];
    loop {
        let ok = a.edges().iter().all(|&(u, v)| lists[u][idx[u]] != lists[v][idx[v]]);
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// No vertex disconnects the graph, and it has at least 3 vertices.
pub fn two_connected(a: &Adj) -> bool {
    a.n >= 3 && a.connected() && (0..a.n).all(|x| a.without(x).connected())
}

/// A 2-connected graph is colorable from degree-sized lists unless it is
/// complete or an odd cycle.
pub fn block_degree_choosable(a: &Adj) -> bool {
    assert!(two_connected(a));
    let m = a.edges().len();
    let complete = m == a.n * (a.n - 1) / 2;
    let odd_cycle = m == a.n && a.n % 2 == 1 && (0..a.n).all(|v| a.degree(v) == 2);
    !(complete || odd_cycle)
}

/// Edge-mask representatives of the connected graphs on `n` vertices, one
/// per isomorphism class (the smallest mask of each orbit).
pub fn connected_classes(n: usize) -> Vec<Adj> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permutations(n, &mut Vec::new(), &mut perms);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| index(p[i], p[j])).collect())
        .collect();
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut out = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for map in &maps {
            let mut img = 0;
            for (b, &to) in map.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    img |= 1 << to;
                }
            }
            seen[img] = true;
        }
        let mut a = Adj::new(n);
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                a.add(i, j);
            }
        }
        if a.connected() {
            out.push(a);
        }
    }
    out
}

fn permutations(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for i in 0..n {
        if !cur.contains(&i) {
            cur.push(i);
            permutations(n, cur, out);
            cur.pop();
        }
    }
}

