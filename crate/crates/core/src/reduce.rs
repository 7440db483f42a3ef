//! Reducible configurations for a minimal non-4-choosable embedded graph.
//!
//! Five kinds are recognised:
//!
//! 1. an induced even cycle whose vertices all have degree 4 in `G`;
//! 2. a cycle plus exactly one chord, induced, all vertices of degree 4;
//! 3. an induced `W4` whose degrees in `G` are `4, 4, 4, 4, 5`;
//! 4. a 5-face incident to a vertex of degree 1;
//! 5. a 6-face incident to a vertex of degree 1.
//!
//! For the first three, deleting `S` and coloring the rest leaves every
//! vertex of `S` at least as many colors as its degree inside `G[S]`, so
//! degree-choosability of `G[S]` certifies the configuration. The last two
//! simply violate minimum degree 4.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::{Budget, BudgetExceeded};
use crate::color::{is_degree_choosable, is_f_choosable, ColorError, SearchLimits};
use crate::embed::{FaceSet, RotationGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReducibleKind {
    EvenCycle,
    ChordedCycle,
    W4Degrees44445,
    FiveFaceWithPendant,
    SixFaceWithPendant,
}

impl ReducibleKind {
    pub fn label(self) -> &'static str {
        match self {
            ReducibleKind::EvenCycle => "even-cycle",
            ReducibleKind::ChordedCycle => "chorded-cycle",
            ReducibleKind::W4Degrees44445 => "w4-44445",
            ReducibleKind::FiveFaceWithPendant => "5face-pendant",
            ReducibleKind::SixFaceWithPendant => "6face-pendant",
        }
    }

    fn needs_coloring(self) -> bool {
        matches!(
            self,
            ReducibleKind::EvenCycle | ReducibleKind::ChordedCycle | ReducibleKind::W4Degrees44445
        )
    }
}

/// One occurrence. `vertices` is the set `S`: in cycle order for the
/// cycle kinds, sorted otherwise. `face` and `pendant` are set for the
/// face kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleHit {
    pub kind: ReducibleKind,
    pub vertices: Vec<usize>,
    pub face: Option<usize>,
    pub pendant: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertMethod {
    /// Every degree-sized assignment was enumerated.
    Exhaustive,
    /// Block structure: some block is neither complete nor an odd cycle.
    Structural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `G[S]` is colorable from any lists of the given sizes (its degrees).
    DegreeChoosable { sizes: Vec<usize>, method: CertMethod },
    /// A vertex of degree 1 cannot occur when the minimum degree is 4.
    MinDegreeViolation,
}

#[derive(Debug, thiserror::Error)]
pub enum ReduceError {
    #[error("structure does not match the {0:?} configuration")]
    KindMismatch(ReducibleKind),
    #[error("induced graph is not degree-choosable")]
    NotCertified,
    #[error(transparent)]
    Color(#[from] ColorError),
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn induced_edge_count(g: &RotationGraph, s: &[usize]) -> usize {
    let mut m = 0;
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            if g.has_edge(a, b) {
                m += 1;
            }
        }
    }
    m
}

impl ReducibleHit {
    /// Checks the hit against the raw graph: degrees in `G`, induced edges
    /// and face membership.
    pub fn revalidate(&self, g: &RotationGraph, faces: &FaceSet) -> bool {
        let s = &self.vertices;
        let distinct = sorted(s.clone());
        if distinct.windows(2).any(|w| w[0] == w[1]) || s.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        let m = induced_edge_count(g, s);
        let all_deg4 = s.iter().all(|&v| g.degree(v) == 4);
        let is_cycle = s.len() >= 3 && crate::detect::is_cycle(g, s);
        match self.kind {
            ReducibleKind::EvenCycle => all_deg4 && is_cycle && s.len().is_multiple_of(2) && m == s.len(),
            ReducibleKind::ChordedCycle => all_deg4 && is_cycle && s.len() >= 4 && m == s.len() + 1,
            ReducibleKind::W4Degrees44445 => {
                let mut d: Vec<usize> = s.iter().map(|&v| g.degree(v)).collect();
                d.sort_unstable();
                s.len() == 5 && d == [4, 4, 4, 4, 5] && is_w4(g, s)
            }
            ReducibleKind::FiveFaceWithPendant | ReducibleKind::SixFaceWithPendant => {
                let want = if self.kind == ReducibleKind::FiveFaceWithPendant { 5 } else { 6 };
                match (self.face, self.pendant) {
                    (Some(f), Some(p)) if f < faces.len() => {
                        let face = faces.face(f);
                        face.degree() == want
                            && g.degree(p) == 1
                            && face.contains_vertex(p)
                            && *s == face.vertex_set()
                    }
                    _ => false,
                }
            }
        }
    }

    /// Certificate for this hit, computed on `G[S]`.
    pub fn certify(&self, g: &RotationGraph, limits: &SearchLimits) -> Result<Certificate, ReduceError> {
        certify_reducibility(self.kind, &g.induced(&sorted(self.vertices.clone())), limits)
    }
}

/// Induced subgraph on five vertices is `K5` minus two disjoint edges.
fn is_w4(g: &RotationGraph, s: &[usize]) -> bool {
    if s.len() != 5 || induced_edge_count(g, s) != 8 {
        return false;
    }
    let mut missing = Vec::new();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            if !g.has_edge(a, b) {
                missing.push((a, b));
            }
        }
    }
    let (a, b) = (missing[0], missing[1]);
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// All reducible configurations of `g` under its embedding.
pub fn find_reducible(g: &RotationGraph, faces: &FaceSet, budget: &mut Budget) -> Result<Vec<ReducibleHit>, BudgetExceeded> {
    let mut hits = Vec::new();
    cycle_hits(g, budget, &mut hits)?;
    w4_hits(g, &mut hits);
    for (f, face) in faces.faces().iter().enumerate() {
        let kind = match face.degree() {
            5 => ReducibleKind::FiveFaceWithPendant,
            6 => ReducibleKind::SixFaceWithPendant,
            _ => continue,
        };
        let vs = face.vertex_set();
        if let Some(&p) = vs.iter().find(|&&v| g.degree(v) == 1) {
            hits.push(ReducibleHit {
                kind,
                vertices: vs,
                face: Some(f),
                pendant: Some(p),
            });
        }
    }
    Ok(hits)
}

/// Cycles through degree-4 vertices whose vertex set induces at most one
/// chord. Chords are counted while the path grows, which keeps the search
/// small even on 4-regular inputs.
fn cycle_hits(g: &RotationGraph, budget: &mut Budget, hits: &mut Vec<ReducibleHit>) -> Result<(), BudgetExceeded> {
    let n = g.vertex_count();
    let allowed: Vec<bool> = (0..n).map(|v| g.degree(v) == 4).collect();
    let mut on_path = vec![false; n];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in 0..n {
        if !allowed[s] {
            continue;
        }
        let mut path = vec![s];
        on_path[s] = true;
        extend_cycle(g, &allowed, &mut path, &mut on_path, 0, budget, &mut |cycle, chords| {
            let kind = match chords {
                0 if cycle.len() % 2 == 0 => ReducibleKind::EvenCycle,
                1 if cycle.len() >= 4 => ReducibleKind::ChordedCycle,
                _ => return,
            };
            if seen.insert(sorted(cycle.to_vec())) {
                hits.push(ReducibleHit {
                    kind,
                    vertices: cycle.to_vec(),
                    face: None,
                    pendant: None,
                });
            }
        })?;
        on_path[s] = false;
    }
    Ok(())
}

fn extend_cycle(
    g: &RotationGraph,
    allowed: &[bool],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    extra: usize,
    budget: &mut Budget,
    visit: &mut impl FnMut(&[usize], usize),
) -> Result<(), BudgetExceeded> {
    budget.tick()?;
    let s = path[0];
    let last = *path.last().unwrap();
    // `extra` counts induced edges beyond the path edges; if the path can
    // close, one of them is the closing edge
    let closes = path.len() >= 3 && g.has_edge(last, s);
    if closes && path[1] < last {
        visit(path, extra - 1);
    }
    for w in g.sorted_neighbors(last) {
        if w <= s || on_path[w] || !allowed[w] {
            continue;
        }
        let back = path[..path.len() - 1].iter().filter(|&&p| g.has_edge(w, p)).count();
        let total = extra + back;
        // once w is appended, only an edge w-s can still become the closing edge
        let chords = total - usize::from(g.has_edge(w, s) && path.len() >= 2);
        if chords > 1 {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend_cycle(g, allowed, path, on_path, total, budget, visit)?;
        on_path[w] = false;
        path.pop();
    }
    Ok(())
}

fn w4_hits(g: &RotationGraph, hits: &mut Vec<ReducibleHit>) {
    let ok = |v: usize| matches!(g.degree(v), 4 | 5);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for hub in 0..g.vertex_count() {
        if !ok(hub) {
            continue;
        }
        let nb: Vec<usize> = g.sorted_neighbors(hub).filter(|&v| ok(v)).collect();
        let k = nb.len();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    for d in c + 1..k {
                        let mut s = vec![hub, nb[a], nb[b], nb[c], nb[d]];
                        s.sort_unstable();
                        let mut degs: Vec<usize> = s.iter().map(|&v| g.degree(v)).collect();
                        degs.sort_unstable();
                        if degs == [4, 4, 4, 4, 5] && is_w4(g, &s) && seen.insert(s.clone()) {
                            hits.push(ReducibleHit {
                                kind: ReducibleKind::W4Degrees44445,
                                vertices: s,
                                face: None,
                                pendant: None,
                            });
                        }
                    }
                }
            }
        }
    }
}

fn structure_matches(kind: ReducibleKind, h: &RotationGraph) -> bool {
    let n = h.vertex_count();
    let m = h.edge_count();
    let degs: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    match kind {
        ReducibleKind::EvenCycle => n >= 4 && n.is_multiple_of(2) && m == n && h.is_connected() && degs.iter().all(|&d| d == 2),
        ReducibleKind::ChordedCycle => {
            let ends: Vec<usize> = (0..n).filter(|&v| degs[v] == 3).collect();
            if n < 4 || m != n + 1 || ends.len() != 2 || degs.iter().any(|&d| d != 2 && d != 3) {
                return false;
            }
            if !h.has_edge(ends[0], ends[1]) {
                return false;
            }
            // dropping the chord leaves one cycle through everything
            let rest: Vec<(usize, usize)> = h
                .edges()
                .into_iter()
                .filter(|&e| e != (ends[0], ends[1]))
                .collect();
            RotationGraph::from_index_edges(n, &rest).is_ok_and(|c| c.is_connected())
        }
        ReducibleKind::W4Degrees44445 => n == 5 && is_w4(h, &[0, 1, 2, 3, 4]),
        ReducibleKind::FiveFaceWithPendant => n <= 5 && degs.contains(&1),
        ReducibleKind::SixFaceWithPendant => n <= 6 && degs.contains(&1),
    }
}

/// Certifies a configuration from its induced graph `G[S]`.
///
/// For the coloring kinds the exhaustive choosability search is used when
/// `G[S]` fits `limits`, and the block-structure test otherwise.
pub fn certify_reducibility(
    kind: ReducibleKind,
    structure: &RotationGraph,
    limits: &SearchLimits,
) -> Result<Certificate, ReduceError> {
    if !structure_matches(kind, structure) {
        return Err(ReduceError::KindMismatch(kind));
    }
    if !kind.needs_coloring() {
        return Ok(Certificate::MinDegreeViolation);
    }
    let sizes: Vec<usize> = (0..structure.vertex_count()).map(|v| structure.degree(v)).collect();
    let (ok, method) = if structure.vertex_count() <= limits.max_vertices {
        (is_f_choosable(structure, &sizes, limits)?.choosable, CertMethod::Exhaustive)
    } else {
        (is_degree_choosable(structure), CertMethod::Structural)
    };
    if ok {
        Ok(Certificate::DegreeChoosable { sizes, method })
    } else {
        Err(ReduceError::NotCertified)
    }
}
