//! The global hypotheses shared by the discharging and audit checklists:
//! connected, no `K5⁻`, no 6-cycle, minimum degree at least 4 and an
//! embedding of genus at most 1.

use core::fmt;

use crate::budget::{Budget, BudgetExceeded};
use crate::detect::{find_k5_variant, has_cycle_of_length, K5Variant, PatternHit};
use crate::embed::{EmbeddingSummary, FaceSet, RotationGraph};

/// Which hypothesis failed first, with its evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateFailure {
    Disconnected { components: usize },
    K5Minus(PatternHit),
    SixCycle(PatternHit),
    LowDegree { vertex: usize, degree: usize },
    GenusTooLarge { euler_characteristic: i64 },
}

impl GateFailure {
    /// Short description with vertex ids from `g`.
    pub fn describe(&self, g: &RotationGraph) -> alloc::string::String {
        use alloc::format;
        let names = |vs: &[usize]| {
            vs.iter()
                .map(|&v| g.id(v))
                .collect::<alloc::vec::Vec<_>>()
                .join(",")
        };
        match self {
            GateFailure::Disconnected { components } => format!("disconnected({components})"),
            GateFailure::K5Minus(hit) => format!("K5-minus-present:{}", names(&hit.witness)),
            GateFailure::SixCycle(hit) => format!("6-cycle-present:{}", names(&hit.witness)),
            GateFailure::LowDegree { vertex, degree } => format!("min-degree<4:{}(deg={degree})", g.id(*vertex)),
            GateFailure::GenusTooLarge { euler_characteristic } => {
                format!("genus>1:chi={euler_characteristic}")
            }
        }
    }
}

impl fmt::Display for GateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateFailure::Disconnected { .. } => "disconnected",
            GateFailure::K5Minus(_) => "K5-minus present",
            GateFailure::SixCycle(_) => "6-cycle present",
            GateFailure::LowDegree { .. } => "minimum degree below 4",
            GateFailure::GenusTooLarge { .. } => "embedding genus above 1",
        })
    }
}

/// Evaluation of every hypothesis (not just the first failing one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypotheses {
    pub components: usize,
    pub k5_minus: Option<PatternHit>,
    pub six_cycle: Option<PatternHit>,
    /// A vertex of minimum degree and its degree.
    pub min_degree: Option<(usize, usize)>,
    pub euler_characteristic: i64,
}

impl Hypotheses {
    pub fn evaluate(g: &RotationGraph, faces: &FaceSet, budget: &mut Budget) -> Result<Self, BudgetExceeded> {
        let components = g.components().len();
        let k5_minus = find_k5_variant(g, K5Variant::K5Minus);
        let six_cycle = has_cycle_of_length(g, 6, budget)?;
        let min_degree = (0..g.vertex_count()).map(|v| (v, g.degree(v))).min_by_key(|&(_, d)| d);
        let euler_characteristic = match EmbeddingSummary::of(g, faces) {
            Ok(s) => s.euler_characteristic,
            // per-component sum; only consulted once connectivity holds
            Err(_) => g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64,
        };
        Ok(Hypotheses {
            components,
            k5_minus,
            six_cycle,
            min_degree,
            euler_characteristic,
        })
    }

    pub fn connected(&self) -> bool {
        self.components <= 1
    }

    pub fn min_degree_ok(&self) -> bool {
        self.min_degree.is_some_and(|(_, d)| d >= 4)
    }

    pub fn genus_ok(&self) -> bool {
        self.euler_characteristic >= 0
    }

    /// The first failing hypothesis, in a fixed order.
    pub fn failure(&self) -> Option<GateFailure> {
        if !self.connected() {
            return Some(GateFailure::Disconnected {
                components: self.components,
            });
        }
        if let Some((vertex, degree)) = self.min_degree.filter(|&(_, d)| d < 4) {
            return Some(GateFailure::LowDegree { vertex, degree });
        }
        if let Some(hit) = &self.k5_minus {
            return Some(GateFailure::K5Minus(hit.clone()));
        }
        if let Some(hit) = &self.six_cycle {
            return Some(GateFailure::SixCycle(hit.clone()));
        }
        if !self.genus_ok() {
            return Some(GateFailure::GenusTooLarge {
                euler_characteristic: self.euler_characteristic,
            });
        }
        None
    }

    pub fn hold(&self) -> bool {
        self.min_degree.is_some() && self.failure().is_none()
    }
}

/// Outcome of one checklist item.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Vacuous => "VACUOUS",
        }
    }
}
