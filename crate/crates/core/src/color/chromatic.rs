use alloc::vec;
use alloc::vec::Vec;

use super::{adjacency_masks, Color, ColorError, Coloring, SearchLimits};
use crate::budget::{Budget, BudgetExceeded};
use crate::embed::RotationGraph;

/// Size of a largest clique (Bron–Kerbosch with pivoting). At most 64
/// vertices.
pub fn clique_number(g: &RotationGraph, budget: &mut Budget) -> Result<usize, BudgetExceeded> {
    assert!(g.vertex_count() <= 64, "clique search is mask based");
    let adj = adjacency_masks(g);
    let all = if g.vertex_count() == 64 { u64::MAX } else { (1u64 << g.vertex_count()) - 1 };
    let mut best = 0;
    bron_kerbosch(&adj, 0, all, 0, &mut best, budget)?;
    Ok(best)
}

fn bron_kerbosch(
    adj: &[u64],
    size: usize,
    mut p: u64,
    mut x: u64,
    best: &mut usize,
    budget: &mut Budget,
) -> Result<(), BudgetExceeded> {
    budget.tick()?;
    if p == 0 {
        if x == 0 {
            *best = (*best).max(size);
        }
        return Ok(());
    }
    if size + p.count_ones() as usize <= *best {
        return Ok(());
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(adj, size + 1, p & adj[v], x & adj[v], best, budget)?;
        p &= !(1u64 << v);
        x |= 1u64 << v;
    }
    Ok(())
}

struct Dsatur<'a> {
    adj: &'a [u64],
    k: usize,
    color: Vec<Color>,
    // count[v * (k + 1) + c]: neighbours of v colored c
    count: Vec<u16>,
    forbidden: Vec<u64>,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: Color) {
        self.color[v] = c;
        let mut nb = self.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let slot = w * (self.k + 1) + c as usize;
            self.count[slot] += 1;
            if self.count[slot] == 1 {
                self.forbidden[w] |= 1u64 << (c - 1);
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        let mut nb = self.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let slot = w * (self.k + 1) + c as usize;
            self.count[slot] -= 1;
            if self.count[slot] == 0 {
                self.forbidden[w] &= !(1u64 << (c - 1));
            }
        }
    }

    fn select(&self) -> Option<usize> {
        let mut best: Option<(u32, u32, usize)> = None;
        for v in 0..self.color.len() {
            if self.color[v] != 0 {
                continue;
            }
            let sat = self.forbidden[v].count_ones();
            let free = {
                let mut nb = self.adj[v];
                let mut c = 0;
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if self.color[w] == 0 {
                        c += 1;
                    }
                }
                c
            };
            let better = match best {
                None => true,
                Some((s, f, _)) => (sat, free) > (s, f),
            };
            if better {
                best = Some((sat, free, v));
            }
        }
        best.map(|b| b.2)
    }

    fn search(&mut self, max_used: usize, budget: &mut Budget) -> Result<bool, BudgetExceeded> {
        budget.tick()?;
        let Some(v) = self.select() else {
            return Ok(true);
        };
        // colors above max_used + 1 are interchangeable with max_used + 1
        let top = self.k.min(max_used + 1);
        for c in 1..=top {
            if self.forbidden[v] & (1u64 << (c - 1)) != 0 {
                continue;
            }
            self.assign(v, c as Color);
            if self.search(max_used.max(c), budget)? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// A proper coloring with colors `1..=k`, if one exists.
pub fn k_coloring(g: &RotationGraph, k: usize, budget: &mut Budget) -> Result<Option<Coloring>, BudgetExceeded> {
    assert!(g.vertex_count() <= 64, "coloring search is mask based");
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new())));
    }
    if k == 0 {
        return Ok(None);
    }
    let k = k.min(n);
    let adj = adjacency_masks(g);
    let mut s = Dsatur {
        adj: &adj,
        k,
        color: vec![0; n],
        count: vec![0; n * (k + 1)],
        forbidden: vec![0; n],
    };
    if s.search(0, budget)? {
        Ok(Some(Coloring::new(s.color)))
    } else {
        Ok(None)
    }
}

/// Chromatic number and a coloring that attains it.
pub fn optimal_coloring(g: &RotationGraph, limits: &SearchLimits) -> Result<(usize, Coloring), ColorError> {
    let mut budget = limits.check(g)?;
    if g.vertex_count() == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let lower = clique_number(g, &mut budget)?;
    for k in lower.max(1)..=g.vertex_count() {
        if let Some(c) = k_coloring(g, k, &mut budget)? {
            return Ok((k, c));
        }
    }
    unreachable!("n colors always suffice")
}

pub fn chromatic_number(g: &RotationGraph, limits: &SearchLimits) -> Result<usize, ColorError> {
    optimal_coloring(g, limits).map(|(k, _)| k)
}
