//! The two sharpness families, with rotation systems on the torus.
//!
//! `G_s` chains `s` copies of `K5` minus an edge: the degree-3 ends `x_i`
//! and `z_{i+1}` of consecutive copies are identified and the closing edge
//! `x_s z_1` is added. Any 4-coloring gives every cut vertex the color of
//! `z_1`, so the closing edge rules it out. Cycles avoiding that edge stay
//! inside one copy (length at most 5) and cycles through it have length at
//! least `2s + 1`.
//!
//! `G'_s` chains `2s + 1` copies of `K4`, consecutive copies sharing a pair
//! of vertices, and adds an apex `z` joined to the two free pairs at the
//! ends. The pairs alternate between two complementary color sets in any
//! 4-coloring, and since the chain has odd length the apex sees all four.
//!
//! Both embeddings start from a planar drawing of the chain. The one edge
//! that makes the graph nonplanar is then laid through two different faces,
//! merging them, which lowers the Euler characteristic from 2 to 0. The
//! generators check the result rather than assume it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::budget::{Budget, BudgetExceeded};
use crate::color::{optimal_coloring, ColorError, Coloring, SearchLimits};
use crate::detect::{find_hamiltonian_cycle, find_k5_variant, has_cycle_of_length, K5Variant, PatternHit};
use crate::embed::{summarize_embedding, GraphError, RotationBuilder, RotationGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Chained `K5` minus an edge; no cycles of length 6 through `2s`.
    Gs,
    /// Chained `K4` with an apex; no `K5` minus an edge, hamiltonian.
    GPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub s: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum FamilyError {
    #[error("parameter s = {s} is below the minimum {min}")]
    ParameterTooSmall { s: usize, min: usize },
    #[error("expected {expected_vertices} vertices and {expected_edges} edges, found {vertices} and {edges}")]
    CountMismatch {
        expected_vertices: usize,
        expected_edges: usize,
        vertices: usize,
        edges: usize,
    },
    #[error("certificate failed: {0}")]
    CheckFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Color(#[from] ColorError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

impl FamilySpec {
    pub fn gs(s: usize) -> Self {
        FamilySpec { family: Family::Gs, s }
    }

    pub fn gprime(s: usize) -> Self {
        FamilySpec {
            family: Family::GPrime,
            s,
        }
    }

    pub fn min_s(&self) -> usize {
        match self.family {
            Family::Gs => 2,
            Family::GPrime => 1,
        }
    }

    /// For `G_s`: the largest `k` such that no cycle length in `6..=k`
    /// occurs, namely `2s`.
    pub fn k(&self) -> Option<usize> {
        (self.family == Family::Gs).then_some(2 * self.s)
    }

    pub fn vertex_count(&self) -> usize {
        match self.family {
            Family::Gs => 4 * self.s + 1,
            Family::GPrime => 4 * self.s + 5,
        }
    }

    pub fn edge_count(&self) -> usize {
        match self.family {
            Family::Gs => 9 * self.s + 1,
            Family::GPrime => 10 * self.s + 10,
        }
    }

    pub fn generate(&self) -> Result<RotationGraph, FamilyError> {
        match self.family {
            Family::Gs => generate_gs(self.s),
            Family::GPrime => generate_gprime(self.s),
        }
    }
}

fn is_torus(g: &RotationGraph) -> bool {
    summarize_embedding(g).is_ok_and(|s| s.euler_characteristic == 0)
}

fn is_planar_embedding(b: &RotationBuilder) -> Result<bool, GraphError> {
    Ok(summarize_embedding(&b.build()?).is_ok_and(|s| s.euler_characteristic == 2))
}

/// Adds `a b` through every pair of corners in turn, keeping the first
/// result for which `finish` yields a torus embedding.
fn close_on_torus(
    b: &RotationBuilder,
    a: usize,
    c: usize,
    mut finish: impl FnMut(&mut RotationBuilder) -> bool,
) -> Result<RotationGraph, FamilyError> {
    for &a_out in b.rotation(a) {
        for &c_out in b.rotation(c) {
            let mut trial = b.clone();
            trial.insert_edge(a, Some(a_out), c, Some(c_out));
            if !finish(&mut trial) {
                continue;
            }
            let g = trial.build()?;
            if is_torus(&g) {
                return Ok(g);
            }
        }
    }
    Err(FamilyError::CheckFailed("no corner pair gives a torus embedding".into()))
}

/// `G_s` for `s >= 2`.
///
/// Copy `i` has vertices `z_i, a_i, b_i, c_i, x_i` with `x_i z_i` missing;
/// `x_i` doubles as `z_{i+1}`, so the ids are `z1`, `x1..xs` and
/// `a_i, b_i, c_i`.
pub fn generate_gs(s: usize) -> Result<RotationGraph, FamilyError> {
    if s < 2 {
        return Err(FamilyError::ParameterTooSmall { s, min: 2 });
    }
    let mut b = RotationBuilder::new();
    let ends: Vec<usize> = (0..=s)
        .map(|i| b.vertex(&if i == 0 { String::from("z1") } else { format!("x{i}") }))
        .collect();
    let mut rot: Vec<Vec<usize>> = Vec::new();
    let mut end_rot: Vec<Vec<usize>> = alloc::vec![Vec::new(); s + 1];
    for i in 1..=s {
        let (z, x) = (ends[i - 1], ends[i]);
        let p = b.vertex(&format!("a{i}"));
        let q = b.vertex(&format!("b{i}"));
        let r = b.vertex(&format!("c{i}"));
        // triangle p q r counterclockwise around x, z outside it
        rot.push(alloc::vec![p, z, q, x, r]);
        rot.push(alloc::vec![q, r, x, p, z]);
        rot.push(alloc::vec![r, p, x, q, z]);
        end_rot[i].extend([p, q, r]);
        end_rot[i - 1].extend([p, r, q]);
    }
    for entry in rot {
        b.set_rotation(entry[0], entry[1..].to_vec());
    }
    for (i, order) in end_rot.into_iter().enumerate() {
        b.set_rotation(ends[i], order);
    }
    if !is_planar_embedding(&b)? {
        return Err(FamilyError::CheckFailed("chain of blocks is not drawn in the plane".into()));
    }
    close_on_torus(&b, ends[s], ends[0], |_| true)
}

/// `G'_s` for `s >= 1`.
///
/// Pairs `x_j, y_j` for `j = 0..=2s+1`; copy `j` of `K4` spans pairs
/// `j - 1` and `j`. The apex `z` is joined to `x0, y0` and to the last
/// pair.
pub fn generate_gprime(s: usize) -> Result<RotationGraph, FamilyError> {
    if s < 1 {
        return Err(FamilyError::ParameterTooSmall { s, min: 1 });
    }
    let last = 2 * s + 1;
    let mut b = RotationBuilder::new();
    let xs: Vec<usize> = (0..=last).map(|j| b.vertex(&format!("x{j}"))).collect();
    let ys: Vec<usize> = (0..=last).map(|j| b.vertex(&format!("y{j}"))).collect();
    let z = b.vertex("z");
    let (a, bb, c, d) = (xs[0], ys[0], xs[1], ys[1]);
    b.set_rotation(a, alloc::vec![bb, d, c]);
    b.set_rotation(bb, alloc::vec![c, d, a]);
    b.set_rotation(c, alloc::vec![a, d, bb]);
    b.set_rotation(d, alloc::vec![a, bb, c]);
    let stuck = || FamilyError::CheckFailed("no common face while drawing the chain".into());
    for j in 2..=last {
        let (u, w, p, q) = (xs[j - 1], ys[j - 1], xs[j], ys[j]);
        // p goes into a face along u w, then q into a face at p, u and w
        b.insert_edge(u, Some(w), p, None);
        if !b.insert_edge_in_common_face(p, w) {
            return Err(stuck());
        }
        b.insert_edge(p, Some(u), q, None);
        if !(b.insert_edge_in_common_face(q, u) && b.insert_edge_in_common_face(q, w)) {
            return Err(stuck());
        }
    }
    b.insert_edge(xs[0], Some(ys[0]), z, None);
    if !b.insert_edge_in_common_face(z, ys[0]) {
        return Err(stuck());
    }
    if !is_planar_embedding(&b)? {
        return Err(FamilyError::CheckFailed("chain with apex is not drawn in the plane".into()));
    }
    let y_last = ys[last];
    close_on_torus(&b, z, xs[last], |t| t.insert_edge_in_common_face(z, y_last))
}

/// Everything recorded while certifying a generated graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCertificate {
    pub spec: FamilySpec,
    pub chromatic_number: usize,
    /// A proper coloring with `chromatic_number` colors.
    pub coloring: Coloring,
    pub genus: u64,
    /// `G_s` only: a `K5` minus an edge.
    pub k5_minus: Option<PatternHit>,
    /// `G_s` only: cycle lengths shown absent, `6..=2s`.
    pub absent_cycle_lengths: Vec<usize>,
    /// `G'_s` only.
    pub hamiltonian_cycle: Option<Vec<usize>>,
}

/// Checks the family's defining properties on `g`. Any failed property is
/// an error.
pub fn certify_family(g: &RotationGraph, spec: FamilySpec, limits: &SearchLimits) -> Result<FamilyCertificate, FamilyError> {
    let fail = |what: &str| Err(FamilyError::CheckFailed(what.into()));
    if spec.s < spec.min_s() {
        return Err(FamilyError::ParameterTooSmall {
            s: spec.s,
            min: spec.min_s(),
        });
    }
    if g.vertex_count() != spec.vertex_count() || g.edge_count() != spec.edge_count() {
        return Err(FamilyError::CountMismatch {
            expected_vertices: spec.vertex_count(),
            expected_edges: spec.edge_count(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
    }
    let genus = match summarize_embedding(g) {
        Ok(summary) => summary.genus,
        Err(_) => return fail("graph is disconnected"),
    };
    if genus != Some(1) {
        return fail("embedding is not on the torus");
    }
    let (chromatic_number, coloring) = optimal_coloring(g, limits)?;
    if chromatic_number != 5 || !coloring.is_proper(g) {
        return fail("chromatic number is not 5");
    }
    let mut budget = Budget::new(limits.max_nodes);
    let mut cert = FamilyCertificate {
        spec,
        chromatic_number,
        coloring,
        genus: 1,
        k5_minus: None,
        absent_cycle_lengths: Vec::new(),
        hamiltonian_cycle: None,
    };
    match spec.family {
        Family::Gs => {
            if find_k5_variant(g, K5Variant::K5).is_some() {
                return fail("contains K5");
            }
            cert.k5_minus = find_k5_variant(g, K5Variant::K5Minus);
            if cert.k5_minus.is_none() {
                return fail("no K5 minus an edge");
            }
            for len in 6..=2 * spec.s {
                if has_cycle_of_length(g, len, &mut budget)?.is_some() {
                    return Err(FamilyError::CheckFailed(format!("contains a {len}-cycle")));
                }
                cert.absent_cycle_lengths.push(len);
            }
        }
        Family::GPrime => {
            if find_k5_variant(g, K5Variant::K5Minus).is_some() {
                return fail("contains K5 minus an edge");
            }
            cert.hamiltonian_cycle = find_hamiltonian_cycle(g, &mut budget)?;
            if cert.hamiltonian_cycle.is_none() {
                return fail("no hamiltonian cycle");
            }
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::is_cycle;

    #[test]
    fn counts_and_genus() {
        for s in 2..=6 {
            let g = generate_gs(s).unwrap();
            let spec = FamilySpec::gs(s);
            assert_eq!((g.vertex_count(), g.edge_count()), (spec.vertex_count(), spec.edge_count()));
            let sum = summarize_embedding(&g).unwrap();
            assert_eq!((sum.f_count, sum.genus), (5 * s, Some(1)));
        }
        for s in 1..=4 {
            let g = generate_gprime(s).unwrap();
            let spec = FamilySpec::gprime(s);
            assert_eq!((g.vertex_count(), g.edge_count()), (spec.vertex_count(), spec.edge_count()));
            assert_eq!(summarize_embedding(&g).unwrap().genus, Some(1));
        }
    }

    #[test]
    fn parameters_are_checked() {
        assert!(matches!(generate_gs(1), Err(FamilyError::ParameterTooSmall { .. })));
        assert!(matches!(generate_gprime(0), Err(FamilyError::ParameterTooSmall { .. })));
    }

    #[test]
    fn certificates_pass_on_small_members() {
        let limits = SearchLimits::chromatic();
        let c = certify_family(&generate_gs(3).unwrap(), FamilySpec::gs(3), &limits).unwrap();
        assert_eq!(c.absent_cycle_lengths, [6]);
        let g = generate_gprime(1).unwrap();
        let c = certify_family(&g, FamilySpec::gprime(1), &limits).unwrap();
        let ham = c.hamiltonian_cycle.unwrap();
        assert_eq!(ham.len(), 9);
        assert!(is_cycle(&g, &ham));
    }

    #[test]
    fn wrong_graph_is_rejected() {
        let k5 = RotationGraph::from_index_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert!(matches!(
            certify_family(&k5, FamilySpec::gs(1), &SearchLimits::chromatic()),
            Err(FamilyError::ParameterTooSmall { .. })
        ));
        assert!(matches!(
            certify_family(&k5, FamilySpec::gs(2), &SearchLimits::chromatic()),
            Err(FamilyError::CountMismatch { .. })
        ));
    }

    #[test]
    fn block_ends_share_a_color_in_every_4_coloring() {
        // one block on its own: z a b c x with x z missing
        let block = RotationGraph::from_index_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        let mut seen = 0;
        for code in 0..4u32.pow(5) {
            let colors: Vec<u32> = (0..5).map(|i| code / 4u32.pow(i) % 4).collect();
            if Coloring::new(colors.clone()).is_proper(&block) {
                seen += 1;
                assert_eq!(colors[0], colors[4]);
            }
        }
        assert_eq!(seen, 24);
    }
}
