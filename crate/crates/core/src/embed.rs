//! Rotation systems, face tracing and Euler characteristic.
//!
//! A [`RotationGraph`] is a simple undirected graph together with a cyclic
//! (counterclockwise) neighbour order at every vertex. Vertices are addressed
//! internally by index; indices follow the lexicographic order of the string
//! ids, so every derived output is deterministic.
//!
//! Faces are traced with a single corner rule: after arriving at `v` along
//! the dart `(u, v)`, leave along the neighbour that *precedes* `u` in the
//! rotation of `v`. The opposite convention yields the mirror embedding and
//! the same face lengths.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("vertex `{vertex}` lists unknown neighbour `{neighbor}`")]
    UnknownVertex { vertex: String, neighbor: String },
    #[error("vertex `{0}` lists itself as a neighbour")]
    SelfLoop(String),
    #[error("vertex `{vertex}` lists neighbour `{neighbor}` more than once")]
    DuplicateNeighbor { vertex: String, neighbor: String },
    #[error("`{from}` lists `{to}` as a neighbour but `{to}` does not list `{from}`")]
    Asymmetric { from: String, to: String },
    #[error("edge endpoint {0} out of range")]
    IndexOutOfRange(usize),
    #[error("new rotation at `{0}` is not a permutation of its neighbours")]
    NotAPermutation(String),
}

/// An embedding only has a genus when it is connected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbedError {
    #[error("graph is disconnected ({components} components); the embedding genus is undefined")]
    Disconnected { components: usize },
}

/// A vertex or a face of an embedded graph, by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

/// Simple graph with a cyclic neighbour order at each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationGraph {
    ids: Vec<String>,
    rotation: Vec<Vec<usize>>,
    // per vertex: (neighbour, position in rotation), sorted by neighbour
    lookup: Vec<Vec<(usize, usize)>>,
    edge_count: usize,
}

impl RotationGraph {
    /// Builds a graph from `(id, counterclockwise neighbour ids)` records and
    /// checks every invariant of a simple rotation system.
    pub fn from_rotations<I, S, T>(records: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (S, Vec<T>)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let records: Vec<(String, Vec<String>)> = records
            .into_iter()
            .map(|(v, ns)| {
                (
                    v.as_ref().to_string(),
                    ns.iter().map(|n| n.as_ref().to_string()).collect(),
                )
            })
            .collect();

        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (v, _) in &records {
            if index.insert(v.as_str(), 0).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        let ids: Vec<String> = index.keys().map(|s| s.to_string()).collect();
        let mut rotation = vec![Vec::new(); ids.len()];
        for (v, ns) in &records {
            let vi = index[v.as_str()];
            let mut rot = Vec::with_capacity(ns.len());
            for n in ns {
                let ni = *index.get(n.as_str()).ok_or_else(|| GraphError::UnknownVertex {
                    vertex: v.clone(),
                    neighbor: n.clone(),
                })?;
                if ni == vi {
                    return Err(GraphError::SelfLoop(v.clone()));
                }
                rot.push(ni);
            }
            rotation[vi] = rot;
        }
        Self::from_parts(ids, rotation)
    }

    /// Builds a graph on ids `0..n` (zero padded so that lexicographic and
    /// numeric order agree) whose rotations list neighbours in increasing
    /// order. Any rotation system is a valid embedding, so this is the
    /// canonical way to feed abstract graphs to the coloring code.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let width = format!("{}", n.saturating_sub(1)).len();
        let ids: Vec<String> = (0..n).map(|i| format!("{:0width$}", i, width = width)).collect();
        let mut rotation = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::IndexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(ids[u].clone()));
            }
            rotation[u].push(v);
            rotation[v].push(u);
        }
        for r in &mut rotation {
            r.sort_unstable();
        }
        Self::from_parts(ids, rotation)
    }

    /// `ids` must be strictly increasing; `rotation[v]` holds indices.
    fn from_parts(ids: Vec<String>, rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        let mut lookup = Vec::with_capacity(ids.len());
        for (v, rot) in rotation.iter().enumerate() {
            let mut l: Vec<(usize, usize)> = rot.iter().enumerate().map(|(p, &n)| (n, p)).collect();
            l.sort_unstable();
            for w in l.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(GraphError::DuplicateNeighbor {
                        vertex: ids[v].clone(),
                        neighbor: ids[w[0].0].clone(),
                    });
                }
            }
            if let Some(&(n, _)) = l.iter().find(|&&(n, _)| n == v) {
                return Err(GraphError::SelfLoop(ids[n].clone()));
            }
            lookup.push(l);
        }
        let mut darts = 0usize;
        for (v, rot) in rotation.iter().enumerate() {
            for &n in rot {
                if lookup[n].binary_search_by_key(&v, |&(x, _)| x).is_err() {
                    return Err(GraphError::Asymmetric {
                        from: ids[v].clone(),
                        to: ids[n].clone(),
                    });
                }
            }
            darts += rot.len();
        }
        Ok(RotationGraph {
            ids,
            rotation,
            lookup,
            edge_count: darts / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    /// Counterclockwise neighbour order of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Position of `w` in the rotation of `v`.
    pub fn position(&self, v: usize, w: usize) -> Option<usize> {
        self.lookup[v]
            .binary_search_by_key(&w, |&(x, _)| x)
            .ok()
            .map(|i| self.lookup[v][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.ids.len() && self.lookup[u].binary_search_by_key(&v, |&(x, _)| x).is_ok()
    }

    /// Neighbours of `v` in increasing index order.
    pub fn sorted_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.lookup[v].iter().map(|&(n, _)| n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.vertex_count() {
            for w in self.sorted_neighbors(u) {
                if u < w {
                    out.push((u, w));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.rotation[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced by `vertices`, keeping ids and the restriction
    /// of each rotation.
    pub fn induced(&self, vertices: &[usize]) -> RotationGraph {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut map = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let ids = keep.iter().map(|&v| self.ids[v].clone()).collect();
        let rotation = keep
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&w| map[w] != usize::MAX)
                    .map(|&w| map[w])
                    .collect()
            })
            .collect();
        Self::from_parts(ids, rotation).expect("induced subgraph of a valid graph is valid")
    }

    /// Same embedding with every id passed through `rename`.
    pub fn relabel<F: FnMut(&str) -> String>(&self, mut rename: F) -> Result<RotationGraph, GraphError> {
        let names: Vec<String> = self.ids.iter().map(|s| rename(s)).collect();
        Self::from_rotations((0..self.vertex_count()).map(|v| {
            (
                names[v].clone(),
                self.rotation[v].iter().map(|&w| names[w].clone()).collect::<Vec<_>>(),
            )
        }))
    }

    /// Same graph with the rotation of `v` started `shift` places later.
    pub fn with_rotation_shifted(&self, v: usize, shift: usize) -> RotationGraph {
        let mut g = self.clone();
        let d = g.rotation[v].len();
        if d > 0 {
            g.rotation[v].rotate_left(shift % d);
            for (p, &w) in g.rotation[v].iter().enumerate() {
                let i = g.lookup[v].binary_search_by_key(&w, |&(x, _)| x).unwrap();
                g.lookup[v][i].1 = p;
            }
        }
        g
    }

    /// Same embedding with every rotation started at its smallest neighbour,
    /// so that equal rotation systems compare equal.
    pub fn with_canonical_starts(&self) -> RotationGraph {
        let mut g = self.clone();
        for v in 0..g.vertex_count() {
            if let Some(start) = (0..g.rotation[v].len()).min_by_key(|&i| g.rotation[v][i]) {
                g = g.with_rotation_shifted(v, start);
            }
        }
        g
    }

    /// Same graph with the rotation at `v` replaced by `order`, which must be
    /// a permutation of the current neighbours.
    pub fn with_rotation(&self, v: usize, order: Vec<usize>) -> Result<RotationGraph, GraphError> {
        let mut rotation = self.rotation.clone();
        let mut a = order.clone();
        let mut b = rotation[v].clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(GraphError::NotAPermutation(self.ids[v].clone()));
        }
        rotation[v] = order;
        Self::from_parts(self.ids.clone(), rotation)
    }

    pub fn trace_faces(&self) -> FaceSet {
        FaceSet::trace(self)
    }
}

/// A closed boundary walk, as a cyclic sequence of darts `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    darts: Vec<(usize, usize)>,
}

impl Face {
    /// Face degree: the length of the boundary walk.
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    pub fn darts(&self) -> &[(usize, usize)] {
        &self.darts
    }

    /// Corner vertices in walk order (repeated vertices appear repeatedly).
    pub fn walk(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&(t, _)| t)
    }

    pub fn corner_count(&self, v: usize) -> usize {
        self.darts.iter().filter(|&&(t, _)| t == v).count()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.darts.iter().any(|&(t, _)| t == v)
    }

    /// Distinct incident vertices, sorted.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.walk().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Some vertex occurs at two corners of the walk.
    pub fn is_degenerate(&self) -> bool {
        self.vertex_set().len() < self.degree()
    }

    /// Contains the undirected edge `uv` on its boundary.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.darts.iter().any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }
}

/// All faces of a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    // around[v][i] = face containing the dart (v, rotation(v)[i]); that face
    // has its corner at v between rotation(v)[i + 1] and rotation(v)[i].
    around: Vec<Vec<usize>>,
}

// face walks, and per vertex the face of each outgoing dart in rotation order
type Walks = (Vec<Vec<(usize, usize)>>, Vec<Vec<usize>>);

fn trace_walks(rotation: &[Vec<usize>], position: impl Fn(usize, usize) -> usize) -> Walks {
    let n = rotation.len();
    let mut around: Vec<Vec<usize>> = rotation.iter().map(|r| vec![usize::MAX; r.len()]).collect();
    let mut walks = Vec::new();
    for u in 0..n {
        let mut order: Vec<(usize, usize)> = rotation[u].iter().enumerate().map(|(p, &w)| (w, p)).collect();
        order.sort_unstable();
        for (_, p0) in order {
            if around[u][p0] != usize::MAX {
                continue;
            }
            let fi = walks.len();
            let mut walk = Vec::new();
            let (mut t, mut p) = (u, p0);
            loop {
                if around[t][p] != usize::MAX {
                    break;
                }
                around[t][p] = fi;
                let h = rotation[t][p];
                walk.push((t, h));
                let d = rotation[h].len();
                let back = position(h, t);
                p = (back + d - 1) % d;
                t = h;
            }
            walks.push(walk);
        }
    }
    (walks, around)
}

impl FaceSet {
    /// Traces every face. Faces are ordered by their smallest dart and each
    /// walk starts at that dart.
    pub fn trace(g: &RotationGraph) -> FaceSet {
        let (walks, around) = trace_walks(&g.rotation, |v, w| g.position(v, w).unwrap());
        FaceSet {
            faces: walks.into_iter().map(|darts| Face { darts }).collect(),
            around,
        }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    /// Faces around `v` in rotation order; entry `i` lies between the
    /// neighbours `rotation(v)[i]` and `rotation(v)[i + 1]`. Consecutive
    /// entries share the edge to `rotation(v)[i + 1]`.
    pub fn faces_around(&self, v: usize) -> &[usize] {
        &self.around[v]
    }

    /// Face containing the dart `(u, v)`.
    pub fn face_of_dart(&self, g: &RotationGraph, u: usize, v: usize) -> Option<usize> {
        g.position(u, v).map(|p| self.around[u][p])
    }

    /// The two faces on either side of the edge `uv` (possibly equal).
    pub fn edge_sides(&self, g: &RotationGraph, u: usize, v: usize) -> Option<[usize; 2]> {
        Some([self.face_of_dart(g, u, v)?, self.face_of_dart(g, v, u)?])
    }

    /// Number of corners of `v` on face `f`.
    pub fn corner_count(&self, v: usize, f: usize) -> usize {
        self.around[v].iter().filter(|&&x| x == f).count()
    }

    pub fn degree_sum(&self) -> usize {
        self.faces.iter().map(Face::degree).sum()
    }
}

/// Counts and Euler characteristic of a connected embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingSummary {
    pub v_count: usize,
    pub e_count: usize,
    pub f_count: usize,
    pub euler_characteristic: i64,
    /// Orientable genus `(2 - chi) / 2`.
    pub genus: Option<u64>,
}

impl EmbeddingSummary {
    pub fn of(g: &RotationGraph, faces: &FaceSet) -> Result<Self, EmbedError> {
        let comps = g.components().len();
        if comps > 1 {
            return Err(EmbedError::Disconnected { components: comps });
        }
        let v = g.vertex_count();
        let e = g.edge_count();
        // a lone vertex bounds one face with an empty walk
        let f = if e == 0 && v > 0 { 1 } else { faces.len() };
        let chi = v as i64 - e as i64 + f as i64;
        let genus = if chi <= 2 && (2 - chi) % 2 == 0 {
            Some(((2 - chi) / 2) as u64)
        } else {
            None
        };
        Ok(EmbeddingSummary {
            v_count: v,
            e_count: e,
            f_count: f,
            euler_characteristic: chi,
            genus,
        })
    }
}

/// Traces faces and summarises a connected embedding.
pub fn summarize_embedding(g: &RotationGraph) -> Result<EmbeddingSummary, EmbedError> {
    EmbeddingSummary::of(g, &g.trace_faces())
}

/// Mutable rotation system used to assemble embeddings edge by edge.
///
/// Indices are insertion order, not lexicographic order; [`build`] produces
/// the validated, lexicographically indexed [`RotationGraph`].
///
/// [`build`]: RotationBuilder::build
#[derive(Debug, Clone, Default)]
pub struct RotationBuilder {
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    rotation: Vec<Vec<usize>>,
}

impl RotationBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `id` if missing and returns its builder index.
    pub fn vertex(&mut self, id: &str) -> usize {
        if let Some(&i) = self.index.get(id) {
            return i;
        }
        let i = self.ids.len();
        self.ids.push(id.to_string());
        self.index.insert(id.to_string(), i);
        self.rotation.push(Vec::new());
        i
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn set_rotation(&mut self, v: usize, order: Vec<usize>) {
        self.rotation[v] = order;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    /// Inserts `w` into the rotation of `v` directly after `after`, or
    /// appends it when `after` is `None`.
    fn insert_after(&mut self, v: usize, after: Option<usize>, w: usize) {
        match after.and_then(|a| self.rotation[v].iter().position(|&x| x == a)) {
            Some(p) => self.rotation[v].insert(p + 1, w),
            None => self.rotation[v].push(w),
        }
    }

    /// Adds the edge `ab` through the corners given by the darts
    /// `a -> a_out` and `b -> b_out`: `b` is placed right after `a_out` in
    /// the rotation of `a`, and symmetrically. When both darts lie on one
    /// face, that face is split in two; otherwise two faces are merged.
    pub fn insert_edge(&mut self, a: usize, a_out: Option<usize>, b: usize, b_out: Option<usize>) {
        self.insert_after(a, a_out, b);
        self.insert_after(b, b_out, a);
    }

    /// Boundary walks of the current rotation system (builder indices).
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let rot = &self.rotation;
        trace_walks(rot, |v, w| rot[v].iter().position(|&x| x == w).unwrap()).0
    }

    /// Adds `ab` inside the first face (in trace order) that has a corner at
    /// both endpoints, splitting it. Returns `false` if no face qualifies.
    pub fn insert_edge_in_common_face(&mut self, a: usize, b: usize) -> bool {
        if self.rotation[a].is_empty() || self.rotation[b].is_empty() {
            return false;
        }
        for walk in self.faces() {
            let at_a = walk.iter().find(|&&(t, _)| t == a).map(|&(_, h)| h);
            let at_b = walk.iter().find(|&&(t, _)| t == b).map(|&(_, h)| h);
            if let (Some(x), Some(y)) = (at_a, at_b) {
                self.insert_edge(a, Some(x), b, Some(y));
                return true;
            }
        }
        false
    }

    pub fn build(&self) -> Result<RotationGraph, GraphError> {
        RotationGraph::from_rotations(
            self.ids
                .iter()
                .zip(&self.rotation)
                .map(|(id, rot)| (id.as_str(), rot.iter().map(|&w| self.ids[w].as_str()).collect::<Vec<_>>())),
        )
    }
}
