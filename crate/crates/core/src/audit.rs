//! Literal checks of the structural statements about a minimal
//! counterexample: 6-faces, runs of consecutive faces around a vertex,
//! special and bad vertices, and responsibility counts.
//!
//! Every check is evaluated on every input; the verdict is then gated.
//! A check is `VACUOUS` when a global hypothesis fails (see
//! [`crate::gate`]), and the checks marked "needs irreducible" are also
//! `VACUOUS` when a reducible configuration is present, since their
//! justification uses minimality. Otherwise the verdict is `PASS` or
//! `FAIL` by the statement itself.
//!
//! | id | statement | needs irreducible |
//! |----|-----------|-------------------|
//! | `degen6-i` | every 6-face visits some vertex twice | |
//! | `degen6-ii` | on a 6-face with consecutive `w x y z`, `xz` not an edge implies `wy` an edge and `y` met twice | |
//! | `degen6-iii` | same window, `w != z` implies `x` or `y` met twice | |
//! | `degen6-iv` | no 6-face occupies two consecutive corners of a vertex | |
//! | `adj4faces` | 4-faces `v u2 x u3` and `u1 v u2 y` with `u1` outside `{v, u2, u3, x}` force `y = u3` | |
//! | `faces303` | faces `3, k, 3` in a row with `k != 3` force `k >= 6` | |
//! | `faces3340` | faces `3, 3, 4, k` in a row force `k >= 6` | |
//! | `faces3303` | at a 5-vertex, faces `3, 3, k, 3` force `k >= 7` | yes |
//! | `faces4434` | no 5-vertex sees faces `4, 4, 3, 4` in a row | |
//! | `faces44444` | no 5-vertex sees only 4-faces | |
//! | `special-adjacent` | the two 3-faces at a special vertex are consecutive | |
//! | `4face-oneSpecial` | a 4-face meets at most one special vertex | |
//! | `faces3454` | at a 4-vertex, faces `3, 4, 5+, 4` keep special vertices off both 4-faces | |
//! | `4vertex-304` | at a non-special 4-vertex with faces `3, a, 4, b`: one of `a, b` is `6+` and the other is `5+`, or is 4 with the middle 4-face free of special vertices | |
//! | `4vertex-335` | at a 4-vertex, faces `3, 3, 5, 5+` force the last to be `7+` and the 5-face to meet a `5+`-vertex | yes |
//! | `4vertex-4444` | a 4-vertex on four 4-faces has two of them free of special vertices | |
//! | `4bad` | around a 4-bad vertex, faces across its triangles are great | |
//! | `3bad-triangle` | around a 3-bad vertex, faces across its triangles are not triangles | |
//! | `3bad-bigface` | a 3-bad vertex lies on a great face or a degenerate 6-face | yes |
//! | `3bad-6` | a 3-bad vertex on a degenerate 6-face has only great faces across its faces | yes |
//! | `3bad-7` | a 3-bad vertex on a great face has faces of length `6+` across its triangles | yes |
//! | `3bad-7-44` | as above with both middle neighbours of degree 4: those faces are great | yes |
//! | `bad-adjacent` | no two bad vertices are adjacent | |
//! | `responsibleVertices` | a vertex is responsible for at most `d/2` bad vertices | |
//! | `2responsibleVertices` | and responsible through two triangles for at most `d/3` | |
//!
//! "Faces across" a face at `v` are the faces on the other side of its
//! edges that do not themselves contain `v`. Runs of consecutive faces are
//! read around `v` in both directions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::{Budget, BudgetExceeded};
use crate::discharge::{classify, Classification, VertexKind};
use crate::embed::{Element, FaceSet, RotationGraph};
use crate::gate::{GateFailure, Hypotheses, Verdict};
use crate::reduce::{find_reducible, ReducibleHit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Degen6I,
    Degen6II,
    Degen6III,
    Degen6IV,
    Adj4Faces,
    Faces303,
    Faces3340,
    Faces3303,
    Faces4434,
    Faces44444,
    SpecialAdjacent,
    FourFaceOneSpecial,
    Faces3454,
    FourVertex304,
    FourVertex335,
    FourVertex4444,
    FourBad,
    ThreeBadTriangle,
    ThreeBadBigFace,
    ThreeBad6,
    ThreeBad7,
    ThreeBad744,
    BadAdjacent,
    Responsible,
    TwoResponsible,
}

impl Check {
    pub const ALL: [Check; 25] = [
        Check::Degen6I,
        Check::Degen6II,
        Check::Degen6III,
        Check::Degen6IV,
        Check::Adj4Faces,
        Check::Faces303,
        Check::Faces3340,
        Check::Faces3303,
        Check::Faces4434,
        Check::Faces44444,
        Check::SpecialAdjacent,
        Check::FourFaceOneSpecial,
        Check::Faces3454,
        Check::FourVertex304,
        Check::FourVertex335,
        Check::FourVertex4444,
        Check::FourBad,
        Check::ThreeBadTriangle,
        Check::ThreeBadBigFace,
        Check::ThreeBad6,
        Check::ThreeBad7,
        Check::ThreeBad744,
        Check::BadAdjacent,
        Check::Responsible,
        Check::TwoResponsible,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::Degen6I => "degen6-i",
            Check::Degen6II => "degen6-ii",
            Check::Degen6III => "degen6-iii",
            Check::Degen6IV => "degen6-iv",
            Check::Adj4Faces => "adj4faces",
            Check::Faces303 => "faces303",
            Check::Faces3340 => "faces3340",
            Check::Faces3303 => "faces3303",
            Check::Faces4434 => "faces4434",
            Check::Faces44444 => "faces44444",
            Check::SpecialAdjacent => "special-adjacent",
            Check::FourFaceOneSpecial => "4face-oneSpecial",
            Check::Faces3454 => "faces3454",
            Check::FourVertex304 => "4vertex-304",
            Check::FourVertex335 => "4vertex-335",
            Check::FourVertex4444 => "4vertex-4444",
            Check::FourBad => "4bad",
            Check::ThreeBadTriangle => "3bad-triangle",
            Check::ThreeBadBigFace => "3bad-bigface",
            Check::ThreeBad6 => "3bad-6",
            Check::ThreeBad7 => "3bad-7",
            Check::ThreeBad744 => "3bad-7-44",
            Check::BadAdjacent => "bad-adjacent",
            Check::Responsible => "responsibleVertices",
            Check::TwoResponsible => "2responsibleVertices",
        }
    }

    pub fn from_id(id: &str) -> Option<Check> {
        Check::ALL.iter().copied().find(|c| c.id() == id)
    }

    /// Whether the statement is only expected when no reducible
    /// configuration is present.
    pub fn needs_irreducible(self) -> bool {
        matches!(
            self,
            Check::Faces3303
                | Check::FourVertex335
                | Check::ThreeBadBigFace
                | Check::ThreeBad6
                | Check::ThreeBad7
                | Check::ThreeBad744
        )
    }
}

/// Why a check did not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VacuousReason {
    Hypothesis(GateFailure),
    Reducible(ReducibleHit),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: Check,
    pub verdict: Verdict,
    /// Configurations matching the statement's premise.
    pub scope: usize,
    /// First configuration violating the statement, found whatever the
    /// verdict.
    pub violation: Option<Vec<Element>>,
    pub reason: Option<VacuousReason>,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub hypotheses: Hypotheses,
    pub reducible: Vec<ReducibleHit>,
    pub checks: Vec<CheckOutcome>,
}

impl AuditReport {
    pub fn outcome(&self, check: Check) -> &CheckOutcome {
        self.checks.iter().find(|c| c.check == check).expect("every check is evaluated")
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> + '_ {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }
}

/// Renders a witness as `v:<id>` / `f:<walk>` tokens.
pub fn describe_elements(g: &RotationGraph, faces: &FaceSet, elements: &[Element]) -> String {
    elements
        .iter()
        .map(|e| match *e {
            Element::Vertex(v) => format!("v:{}", g.id(v)),
            Element::Face(f) => {
                let walk: Vec<&str> = faces.face(f).walk().map(|v| g.id(v)).collect();
                format!("f:{}", walk.join("-"))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run_audit(g: &RotationGraph, budget: &mut Budget) -> Result<AuditReport, BudgetExceeded> {
    let faces = g.trace_faces();
    let hypotheses = Hypotheses::evaluate(g, &faces, budget)?;
    let reducible = find_reducible(g, &faces, budget)?;
    let ctx = Ctx::new(g, &faces);
    let gate = hypotheses.failure().or_else(|| {
        // an empty graph has no minimum degree to speak of
        hypotheses.min_degree.is_none().then_some(GateFailure::LowDegree { vertex: 0, degree: 0 })
    });
    let checks = Check::ALL
        .iter()
        .map(|&check| {
            let (scope, violation) = ctx.evaluate(check);
            let reason = match (&gate, reducible.first()) {
                (Some(fail), _) => Some(VacuousReason::Hypothesis(fail.clone())),
                (None, Some(hit)) if check.needs_irreducible() => Some(VacuousReason::Reducible(hit.clone())),
                _ => None,
            };
            let verdict = match (&reason, &violation) {
                (Some(_), _) => Verdict::Vacuous,
                (None, None) => Verdict::Pass,
                (None, Some(_)) => Verdict::Fail,
            };
            CheckOutcome {
                check,
                verdict,
                scope,
                violation,
                reason,
            }
        })
        .collect();
    Ok(AuditReport {
        hypotheses,
        reducible,
        checks,
    })
}

/// A face at a corner of `v`, between the neighbours `left` and `right`.
#[derive(Debug, Clone, Copy)]
struct Corner {
    face: usize,
    left: usize,
    right: usize,
}

struct Ctx<'a> {
    g: &'a RotationGraph,
    faces: &'a FaceSet,
    classes: Classification,
}

struct Tally {
    scope: usize,
    violation: Option<Vec<Element>>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            scope: 0,
            violation: None,
        }
    }

    fn note(&mut self, ok: bool, witness: impl FnOnce() -> Vec<Element>) {
        self.scope += 1;
        if !ok && self.violation.is_none() {
            self.violation = Some(witness());
        }
    }
}

impl<'a> Ctx<'a> {
    fn new(g: &'a RotationGraph, faces: &'a FaceSet) -> Self {
        Ctx {
            g,
            faces,
            classes: classify(g, faces),
        }
    }

    fn fdeg(&self, f: usize) -> usize {
        self.faces.face(f).degree()
    }

    fn vdeg(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    fn special(&self, v: usize) -> bool {
        self.classes.vertex(v).is_special()
    }

    fn kind(&self, v: usize) -> VertexKind {
        self.classes.vertex(v).kind
    }

    fn face_has_special(&self, f: usize) -> bool {
        self.faces.face(f).walk().any(|v| self.special(v))
    }

    fn corners(&self, v: usize) -> Vec<Corner> {
        let rot = self.g.rotation(v);
        let d = rot.len();
        self.faces
            .faces_around(v)
            .iter()
            .enumerate()
            .map(|(i, &face)| Corner {
                face,
                left: rot[i],
                right: rot[(i + 1) % d],
            })
            .collect()
    }

    /// Runs of `k` consecutive corner faces of `v`, read both ways.
    fn runs(&self, v: usize, k: usize) -> Vec<Vec<usize>> {
        let around = self.faces.faces_around(v);
        let d = around.len();
        let mut out = Vec::new();
        if k == 0 || k > d {
            return out;
        }
        for start in 0..d {
            out.push((0..k).map(|j| around[(start + j) % d]).collect());
            out.push((0..k).map(|j| around[(start + d - j) % d]).collect());
        }
        out
    }

    /// Faces on the far side of the edges of `f` that avoid `v`.
    fn across(&self, f: usize, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in self.faces.face(f).darts() {
            if let Some(other) = self.faces.face_of_dart(self.g, b, a) {
                if !self.faces.face(other).contains_vertex(v) {
                    out.push(other);
                }
            }
        }
        out
    }

    fn evaluate(&self, check: Check) -> (usize, Option<Vec<Element>>) {
        let mut t = Tally::new();
        let n = self.g.vertex_count();
        let vf = |v: usize, fs: &[usize]| {
            let mut w = vec![Element::Vertex(v)];
            w.extend(fs.iter().map(|&f| Element::Face(f)));
            w
        };
        match check {
            Check::Degen6I => {
                for f in (0..self.faces.len()).filter(|&f| self.fdeg(f) == 6) {
                    t.note(self.faces.face(f).is_degenerate(), || vec![Element::Face(f)]);
                }
            }
            Check::Degen6II | Check::Degen6III => {
                for f in (0..self.faces.len()).filter(|&f| self.fdeg(f) == 6) {
                    let face = self.faces.face(f);
                    let walk: Vec<usize> = face.walk().collect();
                    let twice = |x: usize| face.corner_count(x) >= 2;
                    for start in 0..6 {
                        for dir in [1usize, 5] {
                            let at = |j: usize| walk[(start + dir * j) % 6];
                            let (w, x, y, z) = (at(0), at(1), at(2), at(3));
                            let witness = || {
                                let mut e = vec![Element::Face(f)];
                                e.extend([w, x, y, z].map(Element::Vertex));
                                e
                            };
                            if check == Check::Degen6II {
                                if !self.g.has_edge(x, z) {
                                    t.note(self.g.has_edge(w, y) && twice(y), witness);
                                }
                            } else if w != z {
                                t.note(twice(x) || twice(y), witness);
                            }
                        }
                    }
                }
            }
            Check::Degen6IV => {
                for v in 0..n {
                    let around = self.faces.faces_around(v);
                    let d = around.len();
                    for i in 0..d {
                        let (a, b) = (around[i], around[(i + 1) % d]);
                        if d >= 2 && self.fdeg(a) == 6 {
                            t.note(a != b, || vf(v, &[a]));
                        }
                    }
                }
            }
            Check::Adj4Faces => {
                for v in 0..n {
                    let cs: Vec<(Corner, usize)> = self
                        .corners(v)
                        .into_iter()
                        .filter(|c| self.fdeg(c.face) == 4)
                        .map(|c| (c, self.opposite(c, v)))
                        .collect();
                    for (i, &(a, x)) in cs.iter().enumerate() {
                        for (j, &(b, y)) in cs.iter().enumerate() {
                            if i == j {
                                continue;
                            }
                            // A = v u2 x u3 and B = u1 v u2 y share u2
                            for (u2, u3) in [(a.left, a.right), (a.right, a.left)] {
                                for (u1, u2b) in [(b.left, b.right), (b.right, b.left)] {
                                    if u2b != u2 || [v, u2, u3, x].contains(&u1) {
                                        continue;
                                    }
                                    t.note(y == u3, || {
                                        vec![Element::Vertex(v), Element::Face(a.face), Element::Face(b.face)]
                                    });
                                }
                            }
                        }
                    }
                }
            }
            Check::Faces303 => self.scan_runs(&mut t, 3, |_, r| {
                let d: Vec<usize> = r.iter().map(|&f| self.fdeg(f)).collect();
                (d[0] == 3 && d[2] == 3 && d[1] != 3).then(|| d[1] >= 6)
            }),
            Check::Faces3340 => self.scan_runs(&mut t, 4, |_, r| {
                let d: Vec<usize> = r.iter().map(|&f| self.fdeg(f)).collect();
                (d[0] == 3 && d[1] == 3 && d[2] == 4).then(|| d[3] >= 6)
            }),
            Check::Faces3303 => self.scan_runs(&mut t, 4, |v, r| {
                let d: Vec<usize> = r.iter().map(|&f| self.fdeg(f)).collect();
                (self.vdeg(v) == 5 && d[0] == 3 && d[1] == 3 && d[3] == 3).then(|| d[2] >= 7)
            }),
            Check::Faces4434 => self.scan_runs(&mut t, 4, |v, r| {
                let d: Vec<usize> = r.iter().map(|&f| self.fdeg(f)).collect();
                (self.vdeg(v) == 5).then(|| d != [4, 4, 3, 4])
            }),
            Check::Faces44444 => {
                for v in (0..n).filter(|&v| self.vdeg(v) == 5) {
                    let around = self.faces.faces_around(v);
                    t.note(!around.iter().all(|&f| self.fdeg(f) == 4), || vf(v, around));
                }
            }
            Check::SpecialAdjacent => {
                for v in (0..n).filter(|&v| self.special(v)) {
                    let around = self.faces.faces_around(v);
                    let d = around.len();
                    let tri: Vec<usize> = (0..d).filter(|&i| self.fdeg(around[i]) == 3).collect();
                    let ok = tri.len() == 2 && ((tri[0] + 1) % d == tri[1] || (tri[1] + 1) % d == tri[0]);
                    t.note(ok, || vf(v, around));
                }
            }
            Check::FourFaceOneSpecial => {
                for f in (0..self.faces.len()).filter(|&f| self.fdeg(f) == 4) {
                    let specials: Vec<usize> =
                        self.faces.face(f).vertex_set().into_iter().filter(|&v| self.special(v)).collect();
                    t.note(specials.len() <= 1, || {
                        let mut w = vec![Element::Face(f)];
                        w.extend(specials.iter().map(|&v| Element::Vertex(v)));
                        w
                    });
                }
            }
            Check::Faces3454 => self.scan_runs(&mut t, 4, |v, r| {
                let d: Vec<usize> = r.iter().map(|&f| self.fdeg(f)).collect();
                (self.vdeg(v) == 4 && d[0] == 3 && d[1] == 4 && d[2] >= 5 && d[3] == 4)
                    .then(|| !self.face_has_special(r[1]) && !self.face_has_special(r[3]))
            }),
            Check::FourVertex304 => self.scan_runs(&mut t, 4, |v, r| {
                let d: Vec<usize> = r.iter().map(|&f| self.fdeg(f)).collect();
                if self.vdeg(v) != 4 || self.special(v) || d[0] != 3 || d[2] != 4 {
                    return None;
                }
                let free = !self.face_has_special(r[2]);
                let holds = [(d[1], d[3]), (d[3], d[1])]
                    .iter()
                    .any(|&(di, dj)| di >= 6 && (dj >= 5 || (dj == 4 && free)));
                Some(holds)
            }),
            Check::FourVertex335 => self.scan_runs(&mut t, 4, |v, r| {
                let d: Vec<usize> = r.iter().map(|&f| self.fdeg(f)).collect();
                (self.vdeg(v) == 4 && d[0] == 3 && d[1] == 3 && d[2] == 5 && d[3] >= 5).then(|| {
                    d[3] >= 7 && self.faces.face(r[2]).walk().any(|u| self.vdeg(u) >= 5)
                })
            }),
            Check::FourVertex4444 => {
                for v in (0..n).filter(|&v| self.vdeg(v) == 4) {
                    let around = self.faces.faces_around(v);
                    if !around.iter().all(|&f| self.fdeg(f) == 4) {
                        continue;
                    }
                    let mut free: Vec<usize> =
                        around.iter().copied().filter(|&f| !self.face_has_special(f)).collect();
                    free.sort_unstable();
                    free.dedup();
                    t.note(free.len() >= 2, || vf(v, around));
                }
            }
            Check::FourBad | Check::ThreeBadTriangle | Check::ThreeBad7 | Check::ThreeBad744 => {
                for v in 0..n {
                    let kind = self.kind(v);
                    let around = self.faces.faces_around(v);
                    let on_great = around.iter().any(|&f| self.classes.great[f]);
                    let applies = match check {
                        Check::FourBad => kind == VertexKind::Bad4,
                        Check::ThreeBadTriangle => kind == VertexKind::Bad3,
                        Check::ThreeBad7 => kind == VertexKind::Bad3 && on_great,
                        _ => kind == VertexKind::Bad3 && on_great && self.middle_neighbours_are_4(v),
                    };
                    if !applies {
                        continue;
                    }
                    for &tri in around.iter().filter(|&&f| self.fdeg(f) == 3) {
                        for far in self.across(tri, v) {
                            let d = self.fdeg(far);
                            let ok = match check {
                                Check::FourBad | Check::ThreeBad744 => d >= 7,
                                Check::ThreeBadTriangle => d != 3,
                                _ => d >= 6,
                            };
                            t.note(ok, || vf(v, &[tri, far]));
                        }
                    }
                }
            }
            Check::ThreeBadBigFace => {
                for v in (0..n).filter(|&v| self.kind(v) == VertexKind::Bad3) {
                    let around = self.faces.faces_around(v);
                    let ok = around
                        .iter()
                        .any(|&f| self.classes.great[f] || self.classes.degenerate6[f]);
                    t.note(ok, || vf(v, around));
                }
            }
            Check::ThreeBad6 => {
                for v in (0..n).filter(|&v| self.kind(v) == VertexKind::Bad3) {
                    let around = self.faces.faces_around(v);
                    if !around.iter().any(|&f| self.classes.degenerate6[f]) {
                        continue;
                    }
                    for &near in around {
                        for far in self.across(near, v) {
                            t.note(self.classes.great[far], || vf(v, &[near, far]));
                        }
                    }
                }
            }
            Check::BadAdjacent => {
                for (u, w) in self.g.edges() {
                    if self.classes.vertex(u).is_bad() {
                        t.note(!self.classes.vertex(w).is_bad(), || vec![Element::Vertex(u), Element::Vertex(w)]);
                    }
                }
            }
            Check::Responsible | Check::TwoResponsible => {
                for v in 0..n {
                    let count = self
                        .classes
                        .targets_of(v)
                        .filter(|r| check == Check::Responsible || r.triangles == 2)
                        .count();
                    let cap = self.vdeg(v) / if check == Check::Responsible { 2 } else { 3 };
                    if count > 0 {
                        t.note(count <= cap, || {
                            let mut w = vec![Element::Vertex(v)];
                            w.extend(
                                self.classes
                                    .targets_of(v)
                                    .filter(|r| check == Check::Responsible || r.triangles == 2)
                                    .map(|r| Element::Vertex(r.target)),
                            );
                            w
                        });
                    }
                }
            }
        }
        (t.scope, t.violation)
    }

    /// The vertex opposite `v` on a 4-face corner.
    fn opposite(&self, c: Corner, v: usize) -> usize {
        // the face contains the dart (v, left); two steps on is opposite
        let darts = self.faces.face(c.face).darts();
        let k = darts.iter().position(|&d| d == (v, c.left)).expect("corner dart lies on its face");
        darts[(k + 2) % darts.len()].0
    }

    /// The two neighbours of a 3-bad vertex not on its non-triangular face
    /// both have degree 4.
    fn middle_neighbours_are_4(&self, v: usize) -> bool {
        let corners = self.corners(v);
        let Some(big) = corners.iter().find(|c| self.fdeg(c.face) != 3) else {
            return false;
        };
        self.g
            .sorted_neighbors(v)
            .filter(|&u| u != big.left && u != big.right)
            .all(|u| self.vdeg(u) == 4)
    }

    fn scan_runs(&self, t: &mut Tally, k: usize, mut test: impl FnMut(usize, &[usize]) -> Option<bool>) {
        for v in 0..self.g.vertex_count() {
            for run in self.runs(v, k) {
                if let Some(ok) = test(v, &run) {
                    t.note(ok, || {
                        let mut w = vec![Element::Vertex(v)];
                        w.extend(run.iter().map(|&f| Element::Face(f)));
                        w
                    });
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::planar_k4;

    fn octahedron() -> RotationGraph {
        // antipodal pairs (n, s), (e, w), (f, b); planar rotations
        RotationGraph::from_rotations([
            ("n", vec!["e", "f", "w", "b"]),
            ("s", vec!["e", "b", "w", "f"]),
            ("e", vec!["n", "b", "s", "f"]),
            ("w", vec!["n", "f", "s", "b"]),
            ("f", vec!["n", "e", "s", "w"]),
            ("b", vec!["n", "w", "s", "e"]),
        ])
        .unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::from_id(c.id()), Some(c));
        }
    }

    #[test]
    fn k4_is_vacuous_on_degree() {
        let r = run_audit(&planar_k4(), &mut Budget::default()).unwrap();
        assert!(r.checks.iter().all(|c| c.verdict == Verdict::Vacuous));
        assert!(matches!(
            r.checks[0].reason,
            Some(VacuousReason::Hypothesis(GateFailure::LowDegree { .. }))
        ));
    }

    #[test]
    fn octahedron_is_vacuous_on_six_cycle() {
        let g = octahedron();
        assert_eq!(g.trace_faces().len(), 8);
        let r = run_audit(&g, &mut Budget::default()).unwrap();
        assert!(r.checks.iter().all(|c| c.verdict == Verdict::Vacuous));
        assert!(matches!(
            r.checks[0].reason,
            Some(VacuousReason::Hypothesis(GateFailure::SixCycle(_)))
        ));
        // every vertex is 4-bad and all are adjacent
        let bad = r.outcome(Check::BadAdjacent);
        assert!(bad.violation.is_some());
        assert!(r.outcome(Check::FourBad).violation.is_some());
    }

    #[test]
    fn runs_cover_both_directions() {
        let g = octahedron();
        let faces = g.trace_faces();
        let ctx = Ctx::new(&g, &faces);
        let runs = ctx.runs(0, 3);
        assert_eq!(runs.len(), 8);
        assert!(ctx.runs(0, 5).is_empty());
    }
}
