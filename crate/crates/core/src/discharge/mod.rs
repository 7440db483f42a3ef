//! The charge system: initial charges `d(v) - 6` and `2d(f) - 6`, six
//! transfer rules, exact conservation and the final-charge checklist.
//!
//! Rules run in two synchronous phases. Faces pay vertices first, from
//! their initial charge and per corner (a vertex met twice by a walk is paid
//! twice):
//!
//! * `R1` a 4-face pays 1 to each special corner, 1/5 to each corner of
//!   degree at least 5, and splits what is left evenly over the remaining
//!   degree-4 corners;
//! * `R2` a 5-face pays 4/7 to each corner of degree at least 5 and splits
//!   the rest over the degree-4 corners;
//! * `R3` a face of degree at least 6 pays `mu(f) / d(f)` per corner.
//!
//! A face with nobody to split a remainder among keeps it. Then vertices
//! pay bad vertices, reading the charges left by the first phase:
//!
//! * `R4` a good degree-4 vertex splits its positive charge evenly over the
//!   bad vertices it is responsible for;
//! * `R5` a vertex of degree at least 5 pays 1 to each bad vertex it is
//!   2-responsible for;
//! * `R6` and 2/7 to each bad vertex it is 1-responsible for.

mod claims;
mod classify;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use claims::{verify_discharge, Claim, ClaimOutcome, DischargeReport};
pub use crate::gate::Verdict;
pub use classify::{classify, edge_triangles, Classification, Responsibility, VertexClass, VertexKind};

use crate::embed::{Element, FaceSet, RotationGraph};

/// Exact charge values.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `p/q` with an explicit denominator, also for integers.
pub fn ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub source: Element,
    pub target: Element,
    pub amount: Rational,
    pub rule: Rule,
}

/// Charges indexed by vertex, then by face, plus every transfer made.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub vertex_initial: Vec<Rational>,
    pub face_initial: Vec<Rational>,
    pub vertex_final: Vec<Rational>,
    pub face_final: Vec<Rational>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn initial(&self, e: Element) -> &Rational {
        match e {
            Element::Vertex(v) => &self.vertex_initial[v],
            Element::Face(f) => &self.face_initial[f],
        }
    }

    pub fn final_charge(&self, e: Element) -> &Rational {
        match e {
            Element::Vertex(v) => &self.vertex_final[v],
            Element::Face(f) => &self.face_final[f],
        }
    }

    pub fn initial_total(&self) -> Rational {
        self.vertex_initial.iter().chain(&self.face_initial).sum()
    }

    pub fn final_total(&self) -> Rational {
        self.vertex_final.iter().chain(&self.face_final).sum()
    }

    /// Elements whose final charge is negative, vertices first.
    pub fn negative(&self) -> Vec<Element> {
        let vs = (0..self.vertex_final.len()).map(Element::Vertex);
        let fs = (0..self.face_final.len()).map(Element::Face);
        vs.chain(fs).filter(|&e| self.final_charge(e).is_negative()).collect()
    }

    /// `final = initial - outflow + inflow` for every element.
    pub fn balances(&self) -> bool {
        let mut v = self.vertex_initial.clone();
        let mut f = self.face_initial.clone();
        for t in &self.transfers {
            for (e, sign) in [(t.source, -1), (t.target, 1)] {
                let slot = match e {
                    Element::Vertex(i) => &mut v[i],
                    Element::Face(i) => &mut f[i],
                };
                if sign < 0 {
                    *slot -= &t.amount;
                } else {
                    *slot += &t.amount;
                }
            }
        }
        v == self.vertex_final && f == self.face_final
    }
}

/// Ledger holding only the initial charges (final = initial, no transfers).
pub fn initial_charges(g: &RotationGraph, faces: &FaceSet) -> ChargeLedger {
    let vertex_initial: Vec<Rational> = (0..g.vertex_count()).map(|v| int(g.degree(v) as i64 - 6)).collect();
    let face_initial: Vec<Rational> = faces.faces().iter().map(|f| int(2 * f.degree() as i64 - 6)).collect();
    ChargeLedger {
        vertex_final: vertex_initial.clone(),
        face_final: face_initial.clone(),
        vertex_initial,
        face_initial,
        transfers: Vec::new(),
    }
}

/// `6E - 6V - 6F` for the embedding.
pub fn euler_total(g: &RotationGraph, faces: &FaceSet) -> Rational {
    int(6 * g.edge_count() as i64 - 6 * g.vertex_count() as i64 - 6 * faces.len() as i64)
}

/// What face `f` pays each of its corners (in walk order) under R1-R3.
pub fn face_shares(faces: &FaceSet, classes: &Classification, f: usize) -> (Option<Rule>, Vec<Rational>) {
    let face = faces.face(f);
    let d = face.degree();
    let mu = int(2 * d as i64 - 6);
    let corners: Vec<usize> = face.walk().collect();
    let mut shares = vec![Rational::zero(); d];
    let rule = match d {
        4 | 5 => {
            let (rule, big_share) = if d == 4 { (Rule::R1, ratio(1, 5)) } else { (Rule::R2, ratio(4, 7)) };
            let mut rest = mu;
            let mut takers = Vec::new();
            for (i, &v) in corners.iter().enumerate() {
                let c = classes.vertex(v);
                if d == 4 && c.is_special() {
                    shares[i] = int(1);
                } else if c.degree >= 5 {
                    shares[i] = big_share.clone();
                } else if c.degree == 4 {
                    takers.push(i);
                    continue;
                } else {
                    continue;
                }
                rest -= &shares[i];
            }
            if !takers.is_empty() {
                let each = rest / int(takers.len() as i64);
                for i in takers {
                    shares[i] = each.clone();
                }
            }
            Some(rule)
        }
        _ if d >= 6 => {
            let each = mu / int(d as i64);
            shares.iter_mut().for_each(|s| *s = each.clone());
            Some(Rule::R3)
        }
        _ => None,
    };
    (rule, shares)
}

/// Runs both phases on top of `ledger` (normally fresh from
/// [`initial_charges`]).
pub fn apply_rules(g: &RotationGraph, faces: &FaceSet, classes: &Classification, ledger: ChargeLedger) -> ChargeLedger {
    let mut ledger = ledger;
    let transfer = |ledger: &mut ChargeLedger, source: Element, target: Element, amount: Rational, rule: Rule| {
        if amount.is_zero() {
            return;
        }
        match source {
            Element::Vertex(v) => ledger.vertex_final[v] -= &amount,
            Element::Face(f) => ledger.face_final[f] -= &amount,
        }
        match target {
            Element::Vertex(v) => ledger.vertex_final[v] += &amount,
            Element::Face(f) => ledger.face_final[f] += &amount,
        }
        ledger.transfers.push(Transfer {
            source,
            target,
            amount,
            rule,
        });
    };

    for f in 0..faces.len() {
        let (rule, shares) = face_shares(faces, classes, f);
        let Some(rule) = rule else { continue };
        let corners: Vec<usize> = faces.face(f).walk().collect();
        for (v, share) in corners.into_iter().zip(shares) {
            transfer(&mut ledger, Element::Face(f), Element::Vertex(v), share, rule);
        }
    }

    let after_faces = ledger.vertex_final.clone();
    for u in 0..g.vertex_count() {
        let c = classes.vertex(u);
        let targets: Vec<Responsibility> = classes.targets_of(u).copied().collect();
        if targets.is_empty() {
            continue;
        }
        if c.degree == 4 && c.is_good() {
            let excess = if after_faces[u].is_positive() {
                after_faces[u].clone()
            } else {
                Rational::zero()
            };
            let each = excess / int(targets.len() as i64);
            for r in &targets {
                transfer(&mut ledger, Element::Vertex(u), Element::Vertex(r.target), each.clone(), Rule::R4);
            }
        } else if c.degree >= 5 {
            for r in &targets {
                let (amount, rule) = if r.triangles == 2 { (int(1), Rule::R5) } else { (ratio(2, 7), Rule::R6) };
                transfer(&mut ledger, Element::Vertex(u), Element::Vertex(r.target), amount, rule);
            }
        }
    }
    ledger
}

/// Classification plus the full ledger for `g`'s embedding.
pub fn discharge(g: &RotationGraph, faces: &FaceSet) -> (Classification, ChargeLedger) {
    let classes = classify(g, faces);
    let ledger = apply_rules(g, faces, &classes, initial_charges(g, faces));
    (classes, ledger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::{cycle, planar_k4};

    #[test]
    fn initial_values() {
        let g = planar_k4();
        let faces = g.trace_faces();
        let l = initial_charges(&g, &faces);
        assert!(l.vertex_initial.iter().all(|c| *c == int(-3)));
        assert!(l.face_initial.iter().all(|c| c.is_zero()));
        assert_eq!(l.initial_total(), int(-12));
        assert_eq!(euler_total(&g, &faces), int(-12));
    }

    #[test]
    fn cycle_faces_pay_per_corner() {
        let g = cycle(8);
        let faces = g.trace_faces();
        let (_, l) = discharge(&g, &faces);
        // mu(f) = 10 over 8 corners, twice per vertex
        assert!(l.vertex_final.iter().all(|c| *c == int(-4) + ratio(10, 8) * int(2)));
        assert!(l.face_final.iter().all(|c| c.is_zero()));
        assert_eq!(l.final_total(), l.initial_total());
        assert!(l.balances());
    }

    #[test]
    fn ratio_strings() {
        assert_eq!(ratio_string(&ratio(6, 14)), "3/7");
        assert_eq!(ratio_string(&int(-2)), "-2/1");
    }
}
