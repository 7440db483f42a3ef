//! Embedded graphs shared by the integration tests: the two families,
//! the platonic solids, torus grids, a torus `K7`, random planar graphs
//! and random rotation systems.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toroid_core::embed::RotationBuilder;
use toroid_core::families::FamilySpec;
use toroid_core::RotationGraph;

pub struct Named {
    pub name: String,
    pub graph: RotationGraph,
}

fn named(name: impl Into<String>, graph: RotationGraph) -> Named {
    Named { name: name.into(), graph }
}

fn id(v: usize) -> String {
    format!("v{v:03}")
}

/// Graph on `0..n` with the given neighbour cycles.
pub fn from_rotations(rot: &[Vec<usize>]) -> RotationGraph {
    RotationGraph::from_rotations(
        rot.iter()
            .enumerate()
            .map(|(v, ns)| (id(v), ns.iter().map(|&w| id(w)).collect::<Vec<_>>())),
    )
    .unwrap()
}

/// Rotation system whose faces are the given oriented boundary cycles.
/// A face `.. p v q ..` makes `q` precede `p` around `v`.
pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> RotationGraph {
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (p, v, q) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            assert!(succ[v].insert(q, p).is_none(), "faces are not consistently oriented");
        }
    }
    let rot: Vec<Vec<usize>> = succ
        .iter()
        .map(|s| {
            let Some((&first, _)) = s.iter().next() else { return Vec::new() };
            let mut cyc = vec![first];
            let mut x = s[&first];
            while x != first {
                cyc.push(x);
                x = s[&x];
            }
            assert_eq!(cyc.len(), s.len(), "vertex link is not a single cycle");
            cyc
        })
        .collect();
    from_rotations(&rot)
}

/// The embedded dual: one vertex per face, neighbours in boundary order.
pub fn dual(g: &RotationGraph) -> RotationGraph {
    let faces = g.trace_faces();
    let rot: Vec<Vec<usize>> = faces
        .faces()
        .iter()
        .map(|f| f.darts().iter().map(|&(u, v)| faces.face_of_dart(g, v, u).unwrap()).collect())
        .collect();
    from_rotations(&rot)
}

pub fn tetrahedron() -> RotationGraph {
    from_faces(4, &[vec![0, 2, 1], vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]])
}

pub fn cube() -> RotationGraph {
    from_faces(
        8,
        &[
            vec![4, 5, 6, 7],
            vec![0, 3, 2, 1],
            vec![0, 1, 5, 4],
            vec![1, 2, 6, 5],
            vec![2, 3, 7, 6],
            vec![3, 0, 4, 7],
        ],
    )
}

pub fn octahedron() -> RotationGraph {
    let mut f = Vec::new();
    for i in 0..4 {
        let (a, b) = (1 + i, 1 + (i + 1) % 4);
        f.push(vec![0, a, b]);
        f.push(vec![5, b, a]);
    }
    from_faces(6, &f)
}

pub fn icosahedron() -> RotationGraph {
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut f = Vec::new();
    for i in 0..5 {
        f.push(vec![0, u(i), u(i + 1)]);
        f.push(vec![u(i), l(i), u(i + 1)]);
        f.push(vec![l(i), l(i + 1), u(i + 1)]);
        f.push(vec![11, l(i + 1), l(i)]);
    }
    from_faces(12, &f)
}

pub fn dodecahedron() -> RotationGraph {
    dual(&icosahedron())
}

/// `C_m x C_n` on the torus; with `diagonals` every square is split into
/// two triangles (a 6-regular triangulation).
pub fn torus_grid(m: usize, n: usize, diagonals: bool) -> RotationGraph {
    let at = |i: usize, j: usize| (i % m) * n + j % n;
    let rot: Vec<Vec<usize>> = (0..m * n)
        .map(|v| {
            let (i, j) = (v / n, v % n);
            if diagonals {
                vec![
                    at(i + 1, j),
                    at(i + 1, j + 1),
                    at(i, j + 1),
                    at(i + m - 1, j),
                    at(i + m - 1, j + n - 1),
                    at(i, j + n - 1),
                ]
            } else {
                vec![at(i + 1, j), at(i, j + 1), at(i + m - 1, j), at(i, j + n - 1)]
            }
        })
        .collect();
    from_rotations(&rot)
}

/// The triangulation of the torus by `K7`.
pub fn torus_k7() -> RotationGraph {
    let rot: Vec<Vec<usize>> = (0..7).map(|i| [1, 3, 2, 6, 4, 5].iter().map(|d| (i + d) % 7).collect()).collect();
    from_rotations(&rot)
}

pub fn wheel(rim: usize) -> RotationGraph {
    let mut f: Vec<Vec<usize>> = (0..rim).map(|i| vec![rim, i, (i + 1) % rim]).collect();
    f.push((0..rim).rev().collect());
    from_faces(rim + 1, &f)
}

/// Random connected planar graph: pendant vertices attached in corners,
/// then chords added inside faces.
pub fn random_planar(rng: &mut ChaCha8Rng, n: usize, chords: usize) -> RotationGraph {
    let mut b = RotationBuilder::new();
    let ids: Vec<usize> = (0..n).map(|v| b.vertex(&id(v))).collect();
    b.insert_edge(ids[0], None, ids[1], None);
    for v in 2..n {
        let a = ids[rng.gen_range(0..v)];
        let after = *b.rotation(a).choose(rng).unwrap();
        b.insert_edge(a, Some(after), ids[v], None);
    }
    for _ in 0..chords {
        let x = rng.gen_range(0..n);
        let y = rng.gen_range(0..n);
        if x == y || b.has_edge(ids[x], ids[y]) {
            continue;
        }
        // pick a random face with corners at both ends
        let walks: Vec<Vec<(usize, usize)>> = b
            .faces()
            .into_iter()
            .filter(|w| w.iter().any(|&(t, _)| t == ids[x]) && w.iter().any(|&(t, _)| t == ids[y]))
            .collect();
        if let Some(w) = walks.choose(rng) {
            let ax = w.iter().find(|&&(t, _)| t == ids[x]).unwrap().1;
            let ay = w.iter().find(|&&(t, _)| t == ids[y]).unwrap().1;
            b.insert_edge(ids[x], Some(ax), ids[y], Some(ay));
        }
    }
    b.build().unwrap()
}

/// Random graph with random rotations (usually of high genus).
pub fn random_rotation_system(rng: &mut ChaCha8Rng, n: usize, p: f64) -> RotationGraph {
    let mut rot = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                rot[u].push(v);
                rot[v].push(u);
            }
        }
    }
    for r in &mut rot {
        r.shuffle(rng);
    }
    from_rotations(&rot)
}

/// The shared corpus (deterministic).
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for s in 2..=6 {
        out.push(named(format!("G_{s}"), FamilySpec::gs(s).generate().unwrap()));
    }
    for s in 1..=3 {
        out.push(named(format!("G'_{s}"), FamilySpec::gprime(s).generate().unwrap()));
    }
    out.push(named("tetrahedron", tetrahedron()));
    out.push(named("cube", cube()));
    out.push(named("octahedron", octahedron()));
    out.push(named("dodecahedron", dodecahedron()));
    out.push(named("icosahedron", icosahedron()));
    out.push(named("torus-K7", torus_k7()));
    for (m, n) in [(3, 3), (3, 4), (4, 5)] {
        out.push(named(format!("torus-grid-{m}x{n}"), torus_grid(m, n, false)));
        out.push(named(format!("torus-triangulation-{m}x{n}"), torus_grid(m, n, true)));
    }
    for rim in 4..=7 {
        out.push(named(format!("wheel-{rim}"), wheel(rim)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x70_201d);
    for i in 0..15 {
        let n = rng.gen_range(4..=14);
        let chords = rng.gen_range(0..3 * n);
        out.push(named(format!("random-planar-{i}"), random_planar(&mut rng, n, chords)));
    }
    for i in 0..25 {
        let n = rng.gen_range(3..=12);
        let p = [0.25, 0.45, 0.7][i % 3];
        out.push(named(format!("random-rotation-{i}"), random_rotation_system(&mut rng, n, p)));
    }
    out
}
