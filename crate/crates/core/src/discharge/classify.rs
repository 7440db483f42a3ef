//! Vertex and face classes used by the transfer rules.

use alloc::vec::Vec;

use crate::embed::{FaceSet, RotationGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// Degree 4, on a 4-face and on exactly two 3-faces.
    Special,
    /// Degree 4 with exactly three 3-face corners.
    Bad3,
    /// Degree 4 with four 3-face corners.
    Bad4,
    /// Everything else.
    Good,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexClass {
    pub degree: usize,
    /// Corners of `v` on 3-faces.
    pub triangles: usize,
    pub kind: VertexKind,
}

impl VertexClass {
    pub fn is_bad(&self) -> bool {
        matches!(self.kind, VertexKind::Bad3 | VertexKind::Bad4)
    }

    pub fn is_special(&self) -> bool {
        self.kind == VertexKind::Special
    }

    pub fn is_good(&self) -> bool {
        self.kind == VertexKind::Good
    }
}

/// `source` is responsible for the adjacent bad vertex `target`; the edge
/// between them lies on `triangles` 3-faces (1 or 2; always 2 when the
/// source has degree 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Responsibility {
    pub source: usize,
    pub target: usize,
    pub triangles: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub vertices: Vec<VertexClass>,
    /// Sorted by `(source, target)`.
    pub responsibilities: Vec<Responsibility>,
    /// Per face: degree at least 7.
    pub great: Vec<bool>,
    /// Per face: a 6-face visiting some vertex twice.
    pub degenerate6: Vec<bool>,
}

impl Classification {
    pub fn vertex(&self, v: usize) -> &VertexClass {
        &self.vertices[v]
    }

    /// Targets `u` is responsible for, in target order.
    pub fn targets_of(&self, u: usize) -> impl Iterator<Item = &Responsibility> + '_ {
        self.responsibilities.iter().filter(move |r| r.source == u)
    }

    pub fn adjacent_to_bad(&self, g: &RotationGraph, v: usize) -> bool {
        g.sorted_neighbors(v).any(|w| self.vertices[w].is_bad())
    }
}

/// Number of 3-faces on the two sides of edge `uv`.
pub fn edge_triangles(g: &RotationGraph, faces: &FaceSet, u: usize, v: usize) -> usize {
    faces
        .edge_sides(g, u, v)
        .map_or(0, |sides| sides.iter().filter(|&&f| faces.face(f).degree() == 3).count())
}

pub fn classify(g: &RotationGraph, faces: &FaceSet) -> Classification {
    let n = g.vertex_count();
    let vertices: Vec<VertexClass> = (0..n)
        .map(|v| {
            let around = faces.faces_around(v);
            let degree = g.degree(v);
            let triangles = around.iter().filter(|&&f| faces.face(f).degree() == 3).count();
            let on_square = around.iter().any(|&f| faces.face(f).degree() == 4);
            let kind = match (degree, triangles) {
                (4, 3) => VertexKind::Bad3,
                (4, 4) => VertexKind::Bad4,
                (4, 2) if on_square => VertexKind::Special,
                _ => VertexKind::Good,
            };
            VertexClass {
                degree,
                triangles,
                kind,
            }
        })
        .collect();
    let mut responsibilities = Vec::new();
    for u in 0..n {
        let du = vertices[u].degree;
        for v in g.sorted_neighbors(u) {
            if !vertices[v].is_bad() {
                continue;
            }
            let t = edge_triangles(g, faces, u, v);
            let responsible = if du >= 5 { t == 1 || t == 2 } else { du == 4 && t == 2 };
            if responsible {
                responsibilities.push(Responsibility {
                    source: u,
                    target: v,
                    triangles: t,
                });
            }
        }
    }
    let great = faces.faces().iter().map(|f| f.degree() >= 7).collect();
    let degenerate6 = faces.faces().iter().map(|f| f.degree() == 6 && f.is_degenerate()).collect();
    Classification {
        vertices,
        responsibilities,
        great,
        degenerate6,
    }
}
