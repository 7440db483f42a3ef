//! Final-charge checklist over a whole embedded graph.

use alloc::vec::Vec;

use num_traits::Signed;

use super::{discharge, euler_total, face_shares, ratio, ChargeLedger, Classification, Rational, VertexKind};
use crate::budget::{Budget, BudgetExceeded};
use crate::embed::{Element, FaceSet, RotationGraph};
use crate::gate::{Hypotheses, Verdict};
use crate::reduce::{find_reducible, ReducibleHit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// 4-faces end nonnegative and pay at least 3/5 (2/5 next to a
    /// special vertex) to each non-special degree-4 corner.
    FourFace,
    /// 5-faces end nonnegative and pay at least 6/7 (4/5 with no corner of
    /// degree 5 or more) to each degree-4 corner.
    FiveFace,
    /// Degree at least 6: nonnegative, positive when no neighbour is bad.
    SixVertex,
    /// Degree 5: nonnegative, positive when no neighbour is bad.
    FiveVertex,
    /// Good degree-4 vertices end nonnegative.
    GoodFourVertex,
    /// Special vertices end nonnegative.
    Special,
    /// 3-bad vertices on a face of degree at least 7 end positive.
    ThreeBadGreat,
    /// 3-bad vertices on a degenerate 6-face end positive.
    ThreeBadDegenerateSix,
    /// 4-bad vertices end positive.
    FourBad,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::FourFace,
        Claim::FiveFace,
        Claim::SixVertex,
        Claim::FiveVertex,
        Claim::GoodFourVertex,
        Claim::Special,
        Claim::ThreeBadGreat,
        Claim::ThreeBadDegenerateSix,
        Claim::FourBad,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::FourFace => "4face",
            Claim::FiveFace => "5face",
            Claim::SixVertex => "6vertex",
            Claim::FiveVertex => "5vertex",
            Claim::GoodFourVertex => "good4vertex",
            Claim::Special => "special",
            Claim::ThreeBadGreat => "3bad-great",
            Claim::ThreeBadDegenerateSix => "3bad-degen6",
            Claim::FourBad => "4bad",
        }
    }
}

/// `scope` counts elements the claim speaks about; `violation` is the first
/// element breaking it, recorded even when the verdict is vacuous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub verdict: Verdict,
    pub scope: usize,
    pub violation: Option<Element>,
}

#[derive(Debug, Clone)]
pub struct DischargeReport {
    pub hypotheses: Hypotheses,
    pub reducible: Vec<ReducibleHit>,
    pub classes: Classification,
    pub ledger: ChargeLedger,
    pub initial_total: Rational,
    pub final_total: Rational,
    /// `6E - 6V - 6F`.
    pub euler_total: Rational,
    pub negative: Vec<Element>,
    pub claims: Vec<ClaimOutcome>,
}

impl DischargeReport {
    pub fn conserved(&self) -> bool {
        self.initial_total == self.final_total && self.ledger.balances()
    }

    pub fn matches_euler(&self) -> bool {
        self.initial_total == self.euler_total
    }

    /// The claims apply only when every hypothesis holds and no reducible
    /// configuration is present.
    pub fn premises_hold(&self) -> bool {
        self.hypotheses.hold() && self.reducible.is_empty()
    }
}

pub fn verify_discharge(g: &RotationGraph, budget: &mut Budget) -> Result<DischargeReport, BudgetExceeded> {
    let faces = g.trace_faces();
    let hypotheses = Hypotheses::evaluate(g, &faces, budget)?;
    let reducible = find_reducible(g, &faces, budget)?;
    let (classes, ledger) = discharge(g, &faces);
    let premises = hypotheses.hold() && reducible.is_empty();
    let claims = Claim::ALL
        .iter()
        .map(|&claim| {
            let (scope, violation) = check_claim(claim, g, &faces, &classes, &ledger);
            let verdict = match (premises, violation) {
                (false, _) => Verdict::Vacuous,
                (true, None) => Verdict::Pass,
                (true, Some(_)) => Verdict::Fail,
            };
            ClaimOutcome {
                claim,
                verdict,
                scope,
                violation,
            }
        })
        .collect();
    Ok(DischargeReport {
        initial_total: ledger.initial_total(),
        final_total: ledger.final_total(),
        euler_total: euler_total(g, &faces),
        negative: ledger.negative(),
        hypotheses,
        reducible,
        classes,
        ledger,
        claims,
    })
}

fn check_claim(
    claim: Claim,
    g: &RotationGraph,
    faces: &FaceSet,
    classes: &Classification,
    ledger: &ChargeLedger,
) -> (usize, Option<Element>) {
    let mut scope = 0;
    let mut violation = None;
    let mut note = |ok: bool, e: Element| {
        scope += 1;
        if !ok && violation.is_none() {
            violation = Some(e);
        }
    };
    let vfinal = |v: usize| &ledger.vertex_final[v];
    match claim {
        Claim::FourFace | Claim::FiveFace => {
            let d = if claim == Claim::FourFace { 4 } else { 5 };
            for f in (0..faces.len()).filter(|&f| faces.face(f).degree() == d) {
                let corners: Vec<usize> = faces.face(f).walk().collect();
                let (_, shares) = face_shares(faces, classes, f);
                let floor = if d == 4 {
                    if corners.iter().any(|&v| classes.vertex(v).is_special()) {
                        ratio(2, 5)
                    } else {
                        ratio(3, 5)
                    }
                } else if corners.iter().any(|&v| classes.vertex(v).degree >= 5) {
                    ratio(6, 7)
                } else {
                    ratio(4, 5)
                };
                let paid_enough = corners.iter().zip(&shares).all(|(&v, s)| {
                    let c = classes.vertex(v);
                    c.degree != 4 || (d == 4 && c.is_special()) || *s >= floor
                });
                note(!ledger.face_final[f].is_negative() && paid_enough, Element::Face(f));
            }
        }
        Claim::SixVertex | Claim::FiveVertex => {
            for v in 0..g.vertex_count() {
                let deg = classes.vertex(v).degree;
                let in_scope = if claim == Claim::SixVertex { deg >= 6 } else { deg == 5 };
                if !in_scope {
                    continue;
                }
                let c = vfinal(v);
                let ok = !c.is_negative() && (classes.adjacent_to_bad(g, v) || c.is_positive());
                note(ok, Element::Vertex(v));
            }
        }
        Claim::GoodFourVertex | Claim::Special => {
            for v in 0..g.vertex_count() {
                let c = classes.vertex(v);
                let in_scope = c.degree == 4
                    && if claim == Claim::Special { c.is_special() } else { c.is_good() };
                if in_scope {
                    note(!vfinal(v).is_negative(), Element::Vertex(v));
                }
            }
        }
        Claim::ThreeBadGreat | Claim::ThreeBadDegenerateSix | Claim::FourBad => {
            for v in 0..g.vertex_count() {
                let c = classes.vertex(v);
                let around = faces.faces_around(v);
                let in_scope = match claim {
                    Claim::ThreeBadGreat => c.kind == VertexKind::Bad3 && around.iter().any(|&f| classes.great[f]),
                    Claim::ThreeBadDegenerateSix => {
                        c.kind == VertexKind::Bad3 && around.iter().any(|&f| classes.degenerate6[f])
                    }
                    _ => c.kind == VertexKind::Bad4,
                };
                if in_scope {
                    note(vfinal(v).is_positive(), Element::Vertex(v));
                }
            }
        }
    }
    (scope, violation)
}
