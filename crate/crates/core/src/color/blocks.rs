use alloc::vec;
use alloc::vec::Vec;

use crate::embed::RotationGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockShape {
    Complete,
    OddCycle,
    Other,
}

/// A maximal 2-connected subgraph (or a bridge, or an isolated vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn shape(&self) -> BlockShape {
        let k = self.vertices.len();
        let m = self.edges.len();
        if m == k * (k - 1) / 2 {
            BlockShape::Complete
        } else if k >= 3 && k % 2 == 1 && m == k {
            // a 2-connected graph with as many edges as vertices is a cycle
            BlockShape::OddCycle
        } else {
            BlockShape::Other
        }
    }
}

struct Tarjan<'a> {
    g: &'a RotationGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    out: Vec<Block>,
}

impl Tarjan<'_> {
    fn dfs(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        for &w in self.g.rotation(v) {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w] == 0 {
                self.stack.push((v, w));
                self.dfs(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut edges = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        edges.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    self.out.push(block_from_edges(edges));
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

fn block_from_edges(edges: Vec<(usize, usize)>) -> Block {
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    edges.dedup();
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Block { vertices, edges }
}

/// Block decomposition; isolated vertices form single-vertex blocks.
pub fn blocks(g: &RotationGraph) -> Vec<Block> {
    let n = g.vertex_count();
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if t.disc[v] == 0 {
            if g.degree(v) == 0 {
                t.time += 1;
                t.disc[v] = t.time;
                t.out.push(Block {
                    vertices: vec![v],
                    edges: Vec::new(),
                });
            } else {
                t.dfs(v, None);
            }
        }
    }
    t.out
}

/// Every block is a complete graph or an odd cycle.
pub fn is_gallai_tree(g: &RotationGraph) -> bool {
    blocks(g).iter().all(|b| b.shape() != BlockShape::Other)
}

/// Degree-choosable iff every component has a block that is neither
/// complete nor an odd cycle. No search is involved.
pub fn is_degree_choosable(g: &RotationGraph) -> bool {
    let bs = blocks(g);
    g.components().iter().all(|comp| {
        bs.iter()
            .any(|b| b.shape() == BlockShape::Other && comp.binary_search(&b.vertices[0]).is_ok())
    })
}
