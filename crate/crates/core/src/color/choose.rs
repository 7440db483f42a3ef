//! Exhaustive `f`-choosability.
//!
//! A list assignment up to renaming of colors is a multiset of *color
//! classes*: for each color, the set of vertices whose list contains it.
//! The search builds that multiset directly. Vertices are processed in BFS
//! order; the next class always contains the first vertex `v` whose list
//! is not yet full, and classes added for the same `v` come in
//! non-increasing bitmask order, so each assignment is produced once.
//!
//! Two exact cuts keep the enumeration small:
//!
//! * if the vertices whose lists are already complete cannot be colored,
//!   every completion is bad and a witness is returned at once;
//! * every class added later is a fresh color confined to unfinished
//!   vertices. If some partial coloring from the current lists leaves the
//!   uncolored vertices greedily colorable whatever fresh colors arrive,
//!   every completion is good and the subtree is skipped.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{adjacency_masks, Color, ColorError, ListAssignment, SearchLimits};
use crate::budget::{Budget, BudgetExceeded};
use crate::embed::RotationGraph;

/// Outcome of a choosability search; `witness` is a bad assignment when
/// the graph is not choosable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Choosability {
    pub choosable: bool,
    pub witness: Option<ListAssignment>,
}

// leaves examined per "all completions colorable" probe
const PROBE_LEAVES: u32 = 256;

struct Search<'b> {
    adj: Vec<u64>,
    size: Vec<usize>,
    residual: Vec<usize>,
    lists: Vec<Vec<Color>>,
    columns: Vec<u64>,
    all: u64,
    budget: &'b mut Budget,
}

impl Search<'_> {
    fn unfinished(&self) -> u64 {
        (0..self.size.len())
            .filter(|&i| self.residual[i] > 0)
            .fold(0u64, |m, i| m | (1u64 << i))
    }

    fn apply(&mut self, col: u64) {
        self.columns.push(col);
        let c = self.columns.len() as Color;
        let mut m = col;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            self.residual[i] -= 1;
            self.lists[i].push(c);
        }
    }

    fn undo(&mut self) {
        let col = self.columns.pop().unwrap();
        let mut m = col;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            self.residual[i] += 1;
            self.lists[i].pop();
        }
    }

    fn search(&mut self) -> Result<Option<Vec<Vec<Color>>>, BudgetExceeded> {
        self.budget.tick()?;
        let unfinished = self.unfinished();
        let finished = self.all & !unfinished;
        let mut colors = vec![0 as Color; self.size.len()];
        if !self.color_subset(finished, &mut colors)? {
            return Ok(Some(self.complete_with_fresh_colors()));
        }
        if unfinished == 0 {
            return Ok(None);
        }
        if self.completions_colorable()? {
            return Ok(None);
        }
        let v = unfinished.trailing_zeros();
        let rest = unfinished & !(1u64 << v);
        let cap = match self.columns.last() {
            Some(&c) if c.trailing_zeros() == v => c,
            _ => u64::MAX,
        };
        let mut sub = rest;
        loop {
            let col = sub | (1u64 << v);
            if col <= cap {
                self.apply(col);
                if let Some(w) = self.search()? {
                    return Ok(Some(w));
                }
                self.undo();
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        Ok(None)
    }

    fn complete_with_fresh_colors(&self) -> Vec<Vec<Color>> {
        let mut lists = self.lists.clone();
        let mut next = self.columns.len() as Color;
        for (i, l) in lists.iter_mut().enumerate() {
            for _ in 0..self.residual[i] {
                next += 1;
                l.push(next);
            }
        }
        lists
    }

    fn free_colors(&self, i: usize, colors: &[Color]) -> impl Iterator<Item = Color> + '_ {
        let adj = self.adj[i];
        let used: Vec<Color> = (0..colors.len())
            .filter(|&j| adj & (1u64 << j) != 0 && colors[j] != 0)
            .map(|j| colors[j])
            .collect();
        self.lists[i].iter().copied().filter(move |c| !used.contains(c))
    }

    /// Colors every vertex of `mask` from the current lists.
    fn color_subset(&mut self, mask: u64, colors: &mut [Color]) -> Result<bool, BudgetExceeded> {
        self.budget.tick()?;
        let mut pick: Option<(usize, usize)> = None;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            if colors[i] != 0 {
                continue;
            }
            let k = self.free_colors(i, colors).count();
            if k == 0 {
                return Ok(false);
            }
            if pick.is_none_or(|(b, _)| k < b) {
                pick = Some((k, i));
            }
        }
        let Some((_, i)) = pick else {
            return Ok(true);
        };
        let options: Vec<Color> = self.free_colors(i, colors).collect();
        for c in options {
            colors[i] = c;
            if self.color_subset(mask, colors)? {
                return Ok(true);
            }
        }
        colors[i] = 0;
        Ok(false)
    }

    /// Sound test that every completion of the current partial assignment
    /// is colorable: color some vertices from their current lists and check
    /// that the rest can be colored greedily in a degeneracy order, counting
    /// only conflicts with colors they may already hold.
    fn completions_colorable(&mut self) -> Result<bool, BudgetExceeded> {
        let n = self.size.len();
        let mut colors = vec![0 as Color; n];
        let mut leaves = 0u32;
        self.probe(0, &mut colors, &mut leaves)
    }

    fn probe(&mut self, i: usize, colors: &mut [Color], leaves: &mut u32) -> Result<bool, BudgetExceeded> {
        if *leaves >= PROBE_LEAVES {
            return Ok(false);
        }
        if i == self.size.len() {
            *leaves += 1;
            self.budget.tick()?;
            return Ok(self.peels(colors));
        }
        let options: Vec<Color> = self.free_colors(i, colors).collect();
        for c in options {
            colors[i] = c;
            if self.probe(i + 1, colors, leaves)? {
                colors[i] = 0;
                return Ok(true);
            }
        }
        colors[i] = 0;
        self.probe(i + 1, colors, leaves)
    }

    fn peels(&self, colors: &[Color]) -> bool {
        let n = self.size.len();
        let mut rest: u64 = (0..n).filter(|&i| colors[i] == 0).fold(0, |m, i| m | (1u64 << i));
        let avail: Vec<usize> = (0..n)
            .map(|i| {
                if colors[i] != 0 {
                    return 0;
                }
                let mut hit: Vec<Color> = (0..n)
                    .filter(|&j| self.adj[i] & (1u64 << j) != 0 && colors[j] != 0)
                    .map(|j| colors[j])
                    .filter(|c| self.lists[i].contains(c))
                    .collect();
                hit.sort_unstable();
                hit.dedup();
                self.size[i] - hit.len()
            })
            .collect();
        loop {
            if rest == 0 {
                return true;
            }
            let mut m = rest;
            let mut removed = false;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                if avail[i] > (self.adj[i] & rest).count_ones() as usize {
                    rest &= !(1u64 << i);
                    removed = true;
                }
            }
            if !removed {
                return false;
            }
        }
    }
}

fn bfs_order(g: &RotationGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.sorted_neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

/// Relabel colors by first appearance, scanning vertices in index order and
/// each sorted list in order.
fn canonical_lists(lists: Vec<Vec<Color>>) -> Vec<Vec<Color>> {
    let mut map: BTreeMap<Color, Color> = BTreeMap::new();
    let mut out = Vec::with_capacity(lists.len());
    for mut l in lists {
        l.sort_unstable();
        let mut relabeled: Vec<Color> = l
            .into_iter()
            .map(|c| {
                let next = map.len() as Color + 1;
                *map.entry(c).or_insert(next)
            })
            .collect();
        relabeled.sort_unstable();
        out.push(relabeled);
    }
    out
}

/// Decides whether every assignment with `|L(v)| = sizes[v]` admits an
/// `L`-coloring. Exhaustive; capped by `limits`.
pub fn is_f_choosable(g: &RotationGraph, sizes: &[usize], limits: &SearchLimits) -> Result<Choosability, ColorError> {
    let mut budget = limits.check(g)?;
    let n = g.vertex_count();
    if sizes.len() != n {
        return Err(ColorError::LengthMismatch {
            expected: n,
            found: sizes.len(),
        });
    }
    if let Some(v) = sizes.iter().position(|&s| s == 0) {
        return Err(ColorError::EmptyList(v));
    }
    if n == 0 {
        return Ok(Choosability {
            choosable: true,
            witness: None,
        });
    }
    let order = bfs_order(g);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let orig_adj = adjacency_masks(g);
    let adj: Vec<u64> = order
        .iter()
        .map(|&v| {
            let mut m = orig_adj[v];
            let mut out = 0u64;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                out |= 1u64 << rank[w];
            }
            out
        })
        .collect();
    let size: Vec<usize> = order.iter().map(|&v| sizes[v]).collect();
    let mut search = Search {
        adj,
        residual: size.clone(),
        size,
        lists: vec![Vec::new(); n],
        columns: Vec::new(),
        all: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        budget: &mut budget,
    };
    match search.search()? {
        None => Ok(Choosability {
            choosable: true,
            witness: None,
        }),
        Some(ranked) => {
            let mut lists = vec![Vec::new(); n];
            for (i, l) in ranked.into_iter().enumerate() {
                lists[order[i]] = l;
            }
            let witness = ListAssignment::new(canonical_lists(lists))?;
            Ok(Choosability {
                choosable: false,
                witness: Some(witness),
            })
        }
    }
}

/// Uniform `k`-choosability.
pub fn is_k_choosable(g: &RotationGraph, k: usize, limits: &SearchLimits) -> Result<Choosability, ColorError> {
    is_f_choosable(g, &vec![k; g.vertex_count()], limits)
}
