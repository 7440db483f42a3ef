//! Plain-text reports. Each report is a block of human-readable lines,
//! optionally followed by a `---` line and `key=value` pairs for scripts.
//! Element names: `v:<id>` for vertices, `f:<id>-<id>-...` for faces (the
//! boundary walk from its first dart).

use std::fmt::{self, Display, Write as _};

use toroid_core::audit::{describe_elements, AuditReport, VacuousReason};
use toroid_core::discharge::{ratio_string, DischargeReport, Verdict};
use toroid_core::reduce::ReducibleHit;
use toroid_core::{Element, FaceSet, RotationGraph};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    text: String,
    machine: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn line(&mut self, line: impl Display) {
        let _ = writeln!(self.text, "{line}");
    }

    pub fn key(&mut self, key: impl Into<String>, value: impl Display) {
        self.machine.push((key.into(), value.to_string()));
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn machine(&self) -> &[(String, String)] {
        &self.machine
    }

    pub fn value(&self, key: &str) -> Option<&str> {
        self.machine.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)?;
        if !self.machine.is_empty() {
            f.write_str("---\n")?;
            for (k, v) in &self.machine {
                writeln!(f, "{k}={v}")?;
            }
        }
        Ok(())
    }
}

pub fn element_name(g: &RotationGraph, faces: &FaceSet, e: Element) -> String {
    describe_elements(g, faces, &[e])
}

pub fn vertex_list(g: &RotationGraph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.id(v)).collect::<Vec<_>>().join(",")
}

pub fn describe_hit(g: &RotationGraph, faces: &FaceSet, hit: &ReducibleHit) -> String {
    let mut s = format!("{} {}", hit.kind.label(), vertex_list(g, &hit.vertices));
    if let Some(f) = hit.face {
        let _ = write!(s, " face={}", element_name(g, faces, Element::Face(f)));
    }
    if let Some(p) = hit.pendant {
        let _ = write!(s, " pendant={}", g.id(p));
    }
    s
}

fn reason(g: &RotationGraph, r: &VacuousReason) -> String {
    match r {
        VacuousReason::Hypothesis(fail) => fail.describe(g),
        VacuousReason::Reducible(hit) => format!("reducible:{}:{}", hit.kind.label(), vertex_list(g, &hit.vertices)),
    }
}

/// `CHECK <id> <verdict> [witness...]` per check.
pub fn audit_report(g: &RotationGraph, faces: &FaceSet, audit: &AuditReport) -> Report {
    let mut r = Report::new();
    for c in &audit.checks {
        let witness = match (c.verdict, &c.violation, &c.reason) {
            (Verdict::Fail, Some(els), _) => describe_elements(g, faces, els),
            (Verdict::Vacuous, _, Some(why)) => reason(g, why),
            _ => String::new(),
        };
        if witness.is_empty() {
            r.line(format_args!("CHECK {} {}", c.check.id(), c.verdict.label()));
        } else {
            r.line(format_args!("CHECK {} {} {}", c.check.id(), c.verdict.label(), witness));
        }
    }
    let count = |v: Verdict| audit.checks.iter().filter(|c| c.verdict == v).count();
    r.key("checks", audit.checks.len());
    r.key("pass", count(Verdict::Pass));
    r.key("fail", count(Verdict::Fail));
    r.key("vacuous", count(Verdict::Vacuous));
    r.key("hypotheses", if audit.hypotheses.hold() { "hold" } else { "fail" });
    r.key("reducible", audit.reducible.len());
    for c in &audit.checks {
        r.key(format!("scope.{}", c.check.id()), c.scope);
    }
    r
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Totals, premise status, per-claim verdicts and final charges; with
/// `trace`, one `RULE` line per transfer first.
pub fn discharge_report(g: &RotationGraph, faces: &FaceSet, d: &DischargeReport, trace: bool) -> Report {
    let mut r = Report::new();
    let name = |e: Element| element_name(g, faces, e);
    if trace {
        for t in &d.ledger.transfers {
            r.line(format_args!(
                "RULE {} {} -> {} {}",
                t.rule,
                name(t.source),
                name(t.target),
                ratio_string(&t.amount)
            ));
        }
    }
    r.line(format_args!("initial total: {}", ratio_string(&d.initial_total)));
    r.line(format_args!("final total: {}", ratio_string(&d.final_total)));
    r.line(format_args!("6E-6V-6F: {}", ratio_string(&d.euler_total)));
    r.line(format_args!("CONSERVATION {}", pass(d.conserved())));
    r.line(format_args!("EULER {}", pass(d.matches_euler())));
    match d.hypotheses.failure() {
        Some(fail) => r.line(format_args!("HYPOTHESES VACUOUS {}", fail.describe(g))),
        None if d.hypotheses.hold() => r.line("HYPOTHESES PASS"),
        None => r.line("HYPOTHESES VACUOUS empty-graph"),
    }
    if d.reducible.is_empty() {
        r.line("REDUCIBLE none");
    }
    for hit in &d.reducible {
        r.line(format_args!("REDUCIBLE {}", describe_hit(g, faces, hit)));
    }
    for c in &d.claims {
        let mut line = format!("CLAIM {} {} scope={}", c.claim.id(), c.verdict.label(), c.scope);
        if let (Verdict::Fail, Some(e)) = (c.verdict, c.violation) {
            let _ = write!(line, " {}", name(e));
        }
        r.line(line);
    }
    if d.negative.is_empty() {
        r.line("NEGATIVE none");
    } else {
        let names: Vec<String> = d.negative.iter().map(|&e| name(e)).collect();
        r.line(format_args!("NEGATIVE {}", names.join(" ")));
    }
    let elements = (0..g.vertex_count())
        .map(Element::Vertex)
        .chain((0..faces.len()).map(Element::Face));
    for e in elements {
        r.line(format_args!(
            "CHARGE {} {} -> {}",
            name(e),
            ratio_string(d.ledger.initial(e)),
            ratio_string(d.ledger.final_charge(e))
        ));
    }
    r.key("initial_total", ratio_string(&d.initial_total));
    r.key("final_total", ratio_string(&d.final_total));
    r.key("euler_total", ratio_string(&d.euler_total));
    r.key("conservation", pass(d.conserved()));
    r.key("euler", pass(d.matches_euler()));
    r.key("hypotheses", if d.hypotheses.hold() { "PASS" } else { "VACUOUS" });
    r.key("reducible", d.reducible.len());
    r.key("transfers", d.ledger.transfers.len());
    r.key("negative", d.negative.len());
    for c in &d.claims {
        r.key(format!("claim.{}", c.claim.id()), c.verdict.label());
    }
    r
}
