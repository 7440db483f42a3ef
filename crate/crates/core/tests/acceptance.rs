//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

mod corpus;
mod oracle;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toroid_core::audit::run_audit;
use toroid_core::color::{
    chromatic_number, is_degree_choosable, is_f_choosable, is_k_choosable, solve_list_coloring, ColorError,
    ListAssignment, SearchLimits,
};
use toroid_core::detect::{find_hamiltonian_cycle, find_k5_variant, has_cycle_of_length, K5Variant};
use toroid_core::discharge::{
    apply_rules, discharge, face_shares, initial_charges, int, ratio, verify_discharge, Classification, Rational, Rule,
    VertexClass, VertexKind,
};
use toroid_core::embed::summarize_embedding;
use toroid_core::families::FamilySpec;
use toroid_core::reduce::{certify_reducibility, CertMethod, Certificate, ReducibleKind};
use toroid_core::{Budget, Element, RotationGraph};

use oracle::Adj;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn family_gs() -> Outcome {
    let limits = SearchLimits::chromatic();
    let wide = SearchLimits::choosability().with_max_vertices(64);
    for s in 3..=5 {
        let g = FamilySpec::gs(s).generate().map_err(|e| e.to_string())?;
        let a = Adj::from_graph(&g);
        let chi = chromatic_number(&g, &limits).map_err(|e| e.to_string())?;
        ensure(chi == 5, || format!("G_{s}: chromatic number {chi}"))?;
        ensure(!oracle::colorable(&a, 4) && oracle::colorable(&a, 5), || format!("G_{s}: oracle disagrees on 5"))?;
        let c = is_k_choosable(&g, 4, &wide).map_err(|e| e.to_string())?;
        let w = c.witness.as_ref().ok_or(format!("G_{s}: reported 4-choosable"))?;
        ensure(!c.choosable && w.is_uniform() && w.list(0).len() == 4, || format!("G_{s}: witness not uniform"))?;
        ensure(!oracle::list_colorable_backtrack(&a, w.lists()), || format!("G_{s}: witness is colorable"))?;
        let lengths = oracle::cycle_lengths(&a, 2 * s);
        let mut b = Budget::default();
        for len in 6..=2 * s {
            let found = has_cycle_of_length(&g, len, &mut b).map_err(|e| e.to_string())?;
            ensure(found.is_none() && !lengths.contains(&len), || format!("G_{s}: has a {len}-cycle"))?;
        }
        ensure(find_k5_variant(&g, K5Variant::K5).is_none(), || format!("G_{s}: K5 found"))?;
        ensure(find_k5_variant(&g, K5Variant::K5Minus).is_some(), || format!("G_{s}: K5-minus missing"))?;
        let dense = oracle::densest_five(&a);
        ensure(dense == 9, || format!("G_{s}: densest 5-set has {dense} edges"))?;
    }
    Ok("s=3..5: chi=5, uniform 4-list witness, no 6..2s cycles, K5 absent, K5-minus present".into())
}

fn family_gprime() -> Outcome {
    for s in 1..=2 {
        let g = FamilySpec::gprime(s).generate().map_err(|e| e.to_string())?;
        let a = Adj::from_graph(&g);
        let chi = chromatic_number(&g, &SearchLimits::chromatic()).map_err(|e| e.to_string())?;
        ensure(chi == 5 && oracle::chromatic(&a) == 5, || format!("G'_{s}: chromatic number {chi}"))?;
        ensure(find_k5_variant(&g, K5Variant::K5Minus).is_none(), || format!("G'_{s}: K5-minus found"))?;
        ensure(oracle::densest_five(&a) <= 8, || format!("G'_{s}: oracle finds K5-minus"))?;
        let h = find_hamiltonian_cycle(&g, &mut Budget::default())
            .map_err(|e| e.to_string())?
            .ok_or(format!("G'_{s}: no hamiltonian cycle"))?;
        ensure(oracle::is_hamiltonian_cycle(&a, &h), || format!("G'_{s}: bad hamiltonian cycle"))?;
    }
    Ok("s=1,2: chi=5, K5-minus absent, hamiltonian".into())
}

fn embeddings() -> Outcome {
    let mut notes = Vec::new();
    for (name, spec) in [("G_4", FamilySpec::gs(4)), ("G'_1", FamilySpec::gprime(1))] {
        let g = spec.generate().map_err(|e| e.to_string())?;
        let s = summarize_embedding(&g).map_err(|e| e.to_string())?;
        let lengths = oracle::face_lengths(&g);
        let total: usize = lengths.iter().sum();
        ensure(s.euler_characteristic == 0 && s.genus == Some(1), || format!("{name}: chi {}", s.euler_characteristic))?;
        ensure(lengths.len() == s.f_count, || format!("{name}: oracle traces {} faces", lengths.len()))?;
        ensure(total == 2 * s.e_count && g.trace_faces().degree_sum() == total, || format!("{name}: degree sum {total}"))?;
        notes.push(format!("{name} V={} E={} F={}", s.v_count, s.e_count, s.f_count));
    }
    Ok(format!("{}; chi=0, sum d(f)=2E", notes.join(", ")))
}

fn degree_choosability() -> Outcome {
    let limits = SearchLimits::choosability();
    let mut per_order = Vec::new();
    let mut checked = 0;
    for n in 1..=6 {
        let classes = oracle::connected_classes(n);
        per_order.push(classes.len());
        for a in &classes {
            let g = a.to_graph();
            let sizes: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
            let exhaustive = match is_f_choosable(&g, &sizes, &limits) {
                Ok(c) => c.choosable,
                // a lone vertex gets an empty list
                Err(ColorError::EmptyList(_)) => false,
                Err(e) => return Err(e.to_string()),
            };
            let structural = is_degree_choosable(&g);
            ensure(exhaustive == structural, || format!("disagreement on {:?}", a.edges()))?;
            checked += 1;
        }
    }
    ensure(per_order == [1, 1, 2, 6, 21, 112], || format!("class counts {per_order:?}"))?;
    Ok(format!("{checked} classes (orders 1..6: {per_order:?}), 0 disagreements"))
}

fn cycle_adj(k: usize) -> Adj {
    let mut a = Adj::new(k);
    for i in 0..k {
        a.add(i, (i + 1) % k);
    }
    a
}

fn reducibility() -> Outcome {
    let limits = SearchLimits::choosability();
    let mut cases: Vec<(ReducibleKind, String, Adj)> = Vec::new();
    for k in [4, 6, 8] {
        cases.push((ReducibleKind::EvenCycle, format!("C{k}"), cycle_adj(k)));
    }
    for k in 4..=8 {
        for j in 2..=k / 2 {
            let mut a = cycle_adj(k);
            a.add(0, j);
            cases.push((ReducibleKind::ChordedCycle, format!("C{k}+0-{j}"), a));
        }
    }
    let mut w4 = Adj::new(5);
    for i in 0..4 {
        w4.add(i, (i + 1) % 4);
        w4.add(4, i);
    }
    cases.push((ReducibleKind::W4Degrees44445, "W4".into(), w4));
    for (kind, name, a) in &cases {
        ensure(oracle::block_degree_choosable(a), || format!("{name}: oracle says not degree-choosable"))?;
        match certify_reducibility(*kind, &a.to_graph(), &limits) {
            Ok(Certificate::DegreeChoosable {
                method: CertMethod::Exhaustive,
                ..
            }) => {}
            other => return Err(format!("{name}: {other:?}")),
        }
    }
    Ok(format!("{} structures certified exhaustively, 0 failures", cases.len()))
}

fn sum(values: &[Rational]) -> Rational {
    values.iter().fold(int(0), |acc, x| acc + x)
}

fn discharge_exactness() -> Outcome {
    let corpus = corpus::corpus();
    let mut connected = 0;
    for item in &corpus {
        let g = &item.graph;
        let faces = g.trace_faces();
        let (_, ledger) = discharge(g, &faces);
        // independent totals from the oracle's face lengths
        let lengths = oracle::face_lengths(g);
        let vertex_sum: i64 = (0..g.vertex_count()).map(|v| g.degree(v) as i64 - 6).sum();
        let face_sum: i64 = lengths.iter().map(|&d| 2 * d as i64 - 6).sum();
        let mu = int(vertex_sum + face_sum);
        let initial = sum(&ledger.vertex_initial) + sum(&ledger.face_initial);
        let fin = sum(&ledger.vertex_final) + sum(&ledger.face_final);
        ensure(initial == mu && fin == mu, || format!("{}: totals {initial} / {fin} vs {mu}", item.name))?;
        // replay the transfers element by element
        let mut vertex = ledger.vertex_initial.clone();
        let mut face = ledger.face_initial.clone();
        for t in &ledger.transfers {
            for (e, sign) in [(t.source, -1), (t.target, 1)] {
                let slot = match e {
                    Element::Vertex(v) => &mut vertex[v],
                    Element::Face(f) => &mut face[f],
                };
                *slot += int(sign) * &t.amount;
            }
        }
        ensure(vertex == ledger.vertex_final && face == ledger.face_final, || format!("{}: replay differs", item.name))?;
        if oracle::Adj::from_graph(g).connected() {
            connected += 1;
            let e = g.edge_count() as i64;
            let euler = int(6 * e - 6 * g.vertex_count() as i64 - 6 * lengths.len() as i64);
            ensure(mu == euler, || format!("{}: total {mu} vs 6E-6V-6F {euler}", item.name))?;
        }
    }
    ensure(corpus.len() >= 50, || format!("corpus has only {} graphs", corpus.len()))?;
    Ok(format!("{} graphs ({connected} connected): exact conservation and Euler identity", corpus.len()))
}

/// Face 0 of `g` is paid out under synthetic vertex classes.
fn shares_with(g: &RotationGraph, classes: Vec<VertexClass>, face: usize) -> (Option<Rule>, Vec<(usize, Rational)>) {
    let faces = g.trace_faces();
    let cls = Classification {
        vertices: classes,
        responsibilities: Vec::new(),
        great: faces.faces().iter().map(|f| f.degree() >= 7).collect(),
        degenerate6: faces.faces().iter().map(|f| f.degree() == 6 && f.is_degenerate()).collect(),
    };
    let (rule, shares) = face_shares(&faces, &cls, face);
    let walk: Vec<usize> = faces.face(face).walk().collect();
    (rule, walk.into_iter().zip(shares).collect())
}

fn class(degree: usize, kind: VertexKind) -> VertexClass {
    VertexClass {
        degree,
        triangles: 0,
        kind,
    }
}

fn rule_arithmetic() -> Outcome {
    let good = |d| class(d, VertexKind::Good);
    let c4 = cycle_adj(4).to_graph();
    let c5 = cycle_adj(5).to_graph();
    let check = |got: &[(usize, Rational)], want: &dyn Fn(usize) -> Rational, name: &str| -> Result<(), String> {
        for (v, r) in got {
            ensure(*r == want(*v), || format!("{name}: vertex {v} gets {r}"))?;
        }
        Ok(())
    };

    // 4-face with three 4-vertices and one 5-vertex
    let (rule, s) = shares_with(&c4, vec![good(5), good(4), good(4), good(4)], 0);
    ensure(rule == Some(Rule::R1), || "4-face rule".into())?;
    check(&s, &|v| if v == 0 { ratio(1, 5) } else { ratio(3, 5) }, "4-face")?;
    // same with one special vertex: the other two 4-vertices get 2/5
    let (_, s) = shares_with(&c4, vec![good(5), class(4, VertexKind::Special), good(4), good(4)], 0);
    check(
        &s,
        &|v| match v {
            0 => ratio(1, 5),
            1 => int(1),
            _ => ratio(2, 5),
        },
        "4-face with special",
    )?;
    // 5-face with one 5-vertex, then with none
    let (rule, s) = shares_with(&c5, vec![good(5), good(4), good(4), good(4), good(4)], 0);
    ensure(rule == Some(Rule::R2), || "5-face rule".into())?;
    check(&s, &|v| if v == 0 { ratio(4, 7) } else { ratio(6, 7) }, "5-face")?;
    let (_, s) = shares_with(&c5, vec![good(4); 5], 0);
    check(&s, &|_| ratio(4, 5), "5-face without 5+")?;
    // great faces: cycles C7..C12
    for d in 7..=12 {
        let g = cycle_adj(d).to_graph();
        let (rule, s) = shares_with(&g, vec![good(2); d], 0);
        ensure(rule == Some(Rule::R3), || "great-face rule".into())?;
        let want = ratio(2 * d as i64 - 6, d as i64);
        ensure(want >= ratio(8, 7), || format!("{d}-face share below 8/7"))?;
        check(&s, &|_| want.clone(), "great face")?;
    }
    // degenerate 6-face: two triangles sharing a vertex, outer walk y a b y c d
    let bowtie = corpus::from_faces(5, &[vec![0, 1, 2], vec![0, 3, 4], vec![0, 2, 1, 0, 4, 3]]);
    let faces = bowtie.trace_faces();
    let outer = (0..faces.len()).find(|&f| faces.face(f).degree() == 6).ok_or("no 6-face")?;
    ensure(faces.face(outer).is_degenerate(), || "6-face not degenerate".into())?;
    let ledger = apply_rules(
        &bowtie,
        &faces,
        &toroid_core::discharge::classify(&bowtie, &faces),
        initial_charges(&bowtie, &faces),
    );
    let paid: Vec<&Rational> = ledger
        .transfers
        .iter()
        .filter(|t| t.source == Element::Face(outer))
        .map(|t| &t.amount)
        .collect();
    ensure(paid.len() == 6 && paid.iter().all(|&r| *r == int(1)), || format!("degenerate 6-face pays {paid:?}"))?;
    Ok("3/5, 2/5, 6/7, 4/5, (2d-6)/d >= 8/7 for d=7..12, degenerate 6-face 1".into())
}

fn audit_soundness() -> Outcome {
    let corpus = corpus::corpus();
    let mut hypotheses_hold = 0;
    let mut in_scope = 0;
    for item in &corpus {
        let report = run_audit(&item.graph, &mut Budget::default()).map_err(|e| e.to_string())?;
        if !report.hypotheses.hold() {
            ensure(report.failures().next().is_none(), || format!("{}: FAIL despite failed hypotheses", item.name))?;
            continue;
        }
        hypotheses_hold += 1;
        for c in report.failures() {
            ensure(c.check.needs_irreducible() && !report.reducible.is_empty(), || {
                format!("{}: {} FAIL on a graph meeting every hypothesis", item.name, c.check.id())
            })?;
        }
        if report.reducible.is_empty() {
            in_scope += 1;
        }
        let d = verify_discharge(&item.graph, &mut Budget::default()).map_err(|e| e.to_string())?;
        ensure(d.hypotheses == report.hypotheses, || format!("{}: gate mismatch", item.name))?;
    }
    Ok(format!(
        "{} graphs audited; {hypotheses_hold} meet every hypothesis, {in_scope} also irreducible; no FAIL",
        corpus.len()
    ))
}

fn list_coloring() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9_001);
    let (mut yes, mut no, mut total) = (0, 0, 0);
    while total < 1200 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.2..0.9);
        let mut a = Adj::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    a.add(u, v);
                }
            }
        }
        let palette = rng.gen_range(2..=6);
        let lists: Vec<Vec<u32>> = (0..n)
            .map(|_| {
                let k = rng.gen_range(1..=palette.min(4));
                let mut l: Vec<u32> = (1..=palette).collect();
                for i in (1..l.len()).rev() {
                    l.swap(i, rng.gen_range(0..=i));
                }
                l.truncate(k as usize);
                l.sort_unstable();
                l
            })
            .collect();
        let product: u64 = lists.iter().map(|l| l.len() as u64).product();
        if product > 1_000_000 {
            continue;
        }
        total += 1;
        let g = a.to_graph();
        let la = ListAssignment::new(lists.clone()).unwrap();
        let got = solve_list_coloring(&g, &la).map_err(|e| e.to_string())?;
        let want = oracle::list_colorable(&a, &lists);
        ensure(got.is_some() == want, || format!("instance {total}: solver {} oracle {want}", got.is_some()))?;
        if let Some(c) = got {
            ensure(c.is_list_coloring(&g, &la), || format!("instance {total}: invalid coloring"))?;
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok(format!("{total} instances ({yes} colorable, {no} not), 0 disagreements"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("family G_s", family_gs),
        ("family G'_s", family_gprime),
        ("torus embeddings", embeddings),
        ("degree-choosability equivalence", degree_choosability),
        ("reducibility certificates", reducibility),
        ("discharging exactness", discharge_exactness),
        ("rule arithmetic", rule_arithmetic),
        ("audit soundness", audit_soundness),
        ("list-coloring equivalence", list_coloring),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}) [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
