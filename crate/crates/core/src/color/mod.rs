//! Exact coloring solvers.
//!
//! * [`chromatic_number`]: DSATUR branch and bound with a clique lower bound.
//! * [`solve_list_coloring`]: backtracking over the smallest remaining list.
//! * [`is_f_choosable`]: exhaustive search over list assignments up to
//!   color permutation.
//! * [`is_degree_choosable`]: the structural test via block decomposition.

use alloc::vec::Vec;

use crate::budget::{Budget, BudgetExceeded};
use crate::embed::RotationGraph;

mod blocks;
mod chromatic;
mod choose;
mod lists;

pub use blocks::{blocks, is_degree_choosable, is_gallai_tree, Block, BlockShape};
pub use chromatic::{chromatic_number, clique_number, k_coloring, optimal_coloring};
pub use choose::{is_f_choosable, is_k_choosable, Choosability};
pub use lists::solve_list_coloring;

/// Color identifier; only equality is meaningful.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColorError {
    #[error("{vertices} vertices exceeds the search cap of {limit}")]
    TooManyVertices { vertices: usize, limit: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("expected {expected} entries (one per vertex), found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex index {0} has an empty list")]
    EmptyList(usize),
}

/// Caps for the exponential solvers. Exceeding either is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_vertices: usize,
    pub max_nodes: u64,
}

impl SearchLimits {
    pub const CHROMATIC_MAX_VERTICES: usize = 64;
    pub const CHOOSABILITY_MAX_VERTICES: usize = 9;
    pub const DEFAULT_MAX_NODES: u64 = 50_000_000;

    pub fn chromatic() -> Self {
        SearchLimits {
            max_vertices: Self::CHROMATIC_MAX_VERTICES,
            max_nodes: Self::DEFAULT_MAX_NODES,
        }
    }

    pub fn choosability() -> Self {
        SearchLimits {
            max_vertices: Self::CHOOSABILITY_MAX_VERTICES,
            max_nodes: Self::DEFAULT_MAX_NODES,
        }
    }

    pub fn with_max_vertices(mut self, cap: usize) -> Self {
        self.max_vertices = cap;
        self
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = nodes;
        self
    }

    fn check(&self, g: &RotationGraph) -> Result<Budget, ColorError> {
        // the mask-based solvers index vertices by bits of a u64
        let limit = self.max_vertices.min(64);
        if g.vertex_count() > limit {
            return Err(ColorError::TooManyVertices {
                vertices: g.vertex_count(),
                limit,
            });
        }
        Ok(Budget::new(self.max_nodes))
    }
}

/// A list of available colors for every vertex (by index).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    /// Lists are sorted and deduplicated; each must be nonempty.
    pub fn new(mut lists: Vec<Vec<Color>>) -> Result<Self, ColorError> {
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(ColorError::EmptyList(v));
            }
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex gets `1..=k`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment {
            lists: (0..n).map(|_| (1..=k as Color).collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    /// All lists identical.
    pub fn is_uniform(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }

    fn covers(&self, g: &RotationGraph) -> Result<(), ColorError> {
        if self.lists.len() != g.vertex_count() {
            return Err(ColorError::LengthMismatch {
                expected: g.vertex_count(),
                found: self.lists.len(),
            });
        }
        Ok(())
    }
}

/// A color per vertex (by index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring { colors }
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Endpoints of every edge differ.
    pub fn is_proper(&self, g: &RotationGraph) -> bool {
        self.colors.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Proper, and every vertex takes a color from its own list.
    pub fn is_list_coloring(&self, g: &RotationGraph, lists: &ListAssignment) -> bool {
        self.is_proper(g)
            && lists.len() == self.colors.len()
            && self
                .colors
                .iter()
                .enumerate()
                .all(|(v, c)| lists.list(v).binary_search(c).is_ok())
    }

    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

pub(crate) fn adjacency_masks(g: &RotationGraph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.rotation(v).iter().fold(0u64, |m, &w| m | (1u64 << w)))
        .collect()
}
