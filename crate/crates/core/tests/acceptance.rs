//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use petgraph::algo::toposort;
use petgraph::graph::DiGraph;

use prepro::algebra::koszulity_probe;
use prepro::grading::{degree_zero_part, finiteness_check, Finiteness, SearchOptions};
use prepro::koszul::{koszul_dims, koszul_space, top_form};
use prepro::linalg::rat;
use prepro::mckay::{air_grading, mckay_presentation, skew_superpotential, CyclicGroupSpec};
use prepro::preprojective::build_preprojective_with_basis;
use prepro::presentations::{commutative_polynomial, polynomial_xy, three_vertex_example};
use prepro::quiver::{find_cycles, power, PathVector};
use prepro::{
    check_superpotential, derivation_quotient, is_zero_in_quotient, gorenstein_parameter, grading_search, lift_grading_sum,
    shuffle_product, tensor_presentation, validate_grading, QuadraticPresentation, Superpotential, WeightGrading,
};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn spec(s: &str) -> CyclicGroupSpec {
    s.parse().expect("valid spec")
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_1() -> Outcome {
    let p = three_vertex_example();
    let q0 = p.quiver();
    ensure(koszul_space(&p, 2) == prepro::algebra::relation_span(&p, 2), "K_2 differs from the relation span")?;
    let basis = p.relations().to_vec();
    let pp = build_preprojective_with_basis(&p, 2, basis).map_err(|e| e.to_string())?;
    let q = pp.presentation.quiver();
    ensure(pp.new_arrows.len() == 3, format!("{} new arrows", pp.new_arrows.len()))?;
    let (one, three) = (q0.vertex_by_label("1").unwrap(), q0.vertex_by_label("3").unwrap());
    for &a in &pp.new_arrow_ids() {
        ensure(q.arrow(a).source == three && q.arrow(a).target == one, "new arrow is not 3 -> 1")?;
    }
    let aq: Vec<&str> = vec!["a_q1", "a_q2", "a_q3"];
    let path = |w: [&str; 2]| q.path_by_labels(&w).expect("composable");
    let diff = |x: [&str; 2], y: [&str; 2]| PathVector::from_terms([(path(x), rat(1)), (path(y), rat(-1))]);
    let expected = vec![
        diff([aq[1], "f"], [aq[0], "e"]),
        diff([aq[0], "d"], [aq[2], "f"]),
        diff([aq[2], "e"], [aq[1], "d"]),
        diff(["b", aq[0]], ["c", aq[1]]),
        diff(["c", aq[2]], ["a", aq[0]]),
        diff(["a", aq[1]], ["b", aq[2]]),
    ];
    let new_span = QuadraticPresentation::from_spanning(q.clone(), &pp.new_relations).map_err(|e| e.to_string())?;
    let want = QuadraticPresentation::from_spanning(q.clone(), &expected).map_err(|e| e.to_string())?;
    ensure(new_span.relation_blocks() == want.relation_blocks(), "new relation span differs")?;
    let mut all = p.relations().to_vec();
    all.extend(expected);
    let full = QuadraticPresentation::from_spanning(q.clone(), &all).map_err(|e| e.to_string())?;
    ensure(full.relation_blocks() == pp.presentation.relation_blocks(), "full relation span differs")
}

fn criterion_2() -> Outcome {
    for n in 1..=5 {
        let dims = koszul_dims(&commutative_polynomial(n), n + 2).dims();
        let want: Vec<usize> = (0..=n + 2).map(|l| binomial(n, l)).collect();
        ensure(dims == want, format!("n = {n}: {dims:?} != {want:?}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let s = spec("5:1,1,3");
    let p = mckay_presentation(&s);
    let q = p.quiver();
    ensure(
        (q.vertex_count(), q.arrow_count(), p.relation_count()) == (5, 15, 15),
        "vertex/arrow/relation counts",
    )?;
    let g = air_grading(&s);
    let ones: BTreeSet<&str> = g.arrows_of_degree(1).into_iter().map(|a| q.arrow(a).label.as_str()).collect();
    let want: BTreeSet<&str> = ["x1^4", "x2^4", "x3^2", "x3^3", "x3^4"].into_iter().collect();
    ensure(ones == want, format!("AIR degree-1 set {ones:?}"))?;
    let zero: BTreeSet<usize> = g.arrows_of_degree(0).into_iter().collect();
    ensure(find_cycles(q, &zero).is_empty(), "degree-0 subquiver has a cycle")?;
    let mut graph = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..q.vertex_count()).map(|_| graph.add_node(())).collect();
    for &a in &zero {
        graph.add_edge(nodes[q.arrow(a).source], nodes[q.arrow(a).target], ());
    }
    ensure(toposort(&graph, None).is_ok(), "toposort of degree-0 subquiver failed")?;
    let w = skew_superpotential(&s).map_err(|e| e.to_string())?;
    let v = validate_grading(&p, &w, &g).map_err(|e| e.to_string())?;
    ensure(v.relations_homogeneous, "AIR grading not homogeneous")?;
    ensure(v.superpotential_degrees.keys().eq([1].iter()), format!("term degrees {:?}", v.superpotential_degrees))?;
    ensure(v.gorenstein_parameter == Some(1), "Gorenstein parameter is not 1")?;
    let p0 = degree_zero_part(&p, &g).map_err(|e| e.to_string())?;
    match finiteness_check(&p0, 12) {
        Finiteness::Finite { .. } => Ok(()),
        other => Err(format!("degree-0 part: {other:?}")),
    }
}

fn criterion_4() -> Outcome {
    let s = spec("3:1,2,1,2");
    let p = mckay_presentation(&s);
    let w = skew_superpotential(&s).map_err(|e| e.to_string())?;
    let pruned = grading_search(&p, &w, &SearchOptions::default()).map_err(|e| e.to_string())?;
    let brute =
        grading_search(&p, &w, &SearchOptions { brute: true, ..Default::default() }).map_err(|e| e.to_string())?;
    ensure(brute.assignments == 4096, "assignment count")?;
    ensure(pruned.valid == brute.valid, "brute-force and pruned searches disagree")?;
    ensure(pruned.finite_count == 0, format!("{} gradings with finite degree-0 part", pruned.finite_count))?;
    ensure(!pruned.valid.is_empty(), "no valid gradings at all")?;
    for v in &pruned.valid {
        match &v.verdict.degree0_finiteness {
            Some(Finiteness::Infinite { witness, checked_to: 12 }) => {
                ensure(witness.is_closed() && v.grading.path_degree(witness) == 0, "bad witness")?;
                for m in 1..=12 / witness.len() {
                    let pw = PathVector::from_path(power(witness, m));
                    ensure(!is_zero_in_quotient(&p, &pw).map_err(|e| e.to_string())?, "witness power vanishes")?;
                }
            }
            other => return Err(format!("grading {:?}: {other:?}", v.grading.degrees())),
        }
    }
    ensure(
        pruned.summary.starts_with("no preprojective structure found: 0 valid gradings with finite degree-0 part"),
        "summary line",
    )
}

fn criterion_5() -> Outcome {
    let xy = polynomial_xy();
    let (t, map) = tensor_presentation(&xy, &xy);
    let w1 = Superpotential::new(xy.quiver().clone(), xy.relations()[0].clone()).map_err(|e| e.to_string())?;
    let s = shuffle_product(&w1, &w1, &map).map_err(|e| e.to_string())?;
    ensure(check_superpotential(t.quiver(), s.form()).is_superpotential(), "shuffle is not a superpotential")?;
    ensure(s.term_count() == 24, format!("{} shuffle terms", s.term_count()))?;
    let top = top_form(&t, 4);
    let top = top.generator().ok_or("tensor presentation has no top form")?;
    ensure(s.ratio_to(top).is_some(), "shuffle is not a scalar multiple of the top form")
}

fn criterion_6() -> Outcome {
    let s = spec("3:1,2");
    let p = mckay_presentation(&s);
    let (t, map) = tensor_presentation(&p, &p);
    let q = t.quiver();
    ensure((q.vertex_count(), q.arrow_count(), t.relation_count()) == (9, 36, 54), "tensor counts")?;
    let w = skew_superpotential(&s).map_err(|e| e.to_string())?;
    let shuffled = shuffle_product(&w, &w, &map).map_err(|e| e.to_string())?;
    let air = air_grading(&s);
    let both = lift_grading_sum(&air, &air, &map);
    ensure(gorenstein_parameter(&t, &shuffled, &both) == Some(2), "sum of AIR gradings: parameter is not 2")?;
    let half = lift_grading_sum(&air, &WeightGrading::zero(air.len()), &map);
    ensure(gorenstein_parameter(&t, &shuffled, &half) == Some(1), "AIR plus zero grading: parameter is not 1")
}

fn criterion_7() -> Outcome {
    for name in ["3:1,1,1", "5:1,1,3", "3:1,2,1,2"] {
        let s = spec(name);
        let w = skew_superpotential(&s).map_err(|e| e.to_string())?;
        let dq = derivation_quotient(&w).map_err(|e| e.to_string())?;
        ensure(
            dq.relation_blocks() == mckay_presentation(&s).relation_blocks(),
            format!("{name}: derivation quotient differs"),
        )?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut cases: Vec<(String, QuadraticPresentation)> = vec![("3-vertex example".into(), three_vertex_example())];
    for name in ["3:1,2", "3:1,1,1", "5:1,1,3", "3:1,2,1,2"] {
        cases.push((name.to_string(), mckay_presentation(&spec(name))));
    }
    for (name, p) in cases {
        let v = koszulity_probe(&p, 8);
        ensure(v.passed(), format!("{name}: {v}"))?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let failures = common::run_property_suites(64);
    ensure(failures.is_empty(), failures.join("; "))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome, Duration)> = vec![
        ("1 preprojective algebra of the 3-vertex example", criterion_1, Duration::from_secs(1)),
        ("2 dim K_l = C(n, l) for n-loop commutative quivers, n <= 5", criterion_2, Duration::from_secs(5)),
        ("3 McKay 1/5(1,1,3): counts, AIR grading, parameter 1, finite degree 0", criterion_3, Duration::from_secs(5)),
        ("4 1/3(1,2,1,2): no {0,1} grading with finite degree-0 part", criterion_4, Duration::from_secs(30)),
        ("5 shuffle of two k[x,y] superpotentials is the top form", criterion_5, Duration::from_secs(1)),
        ("6 Gorenstein parameters 2 and 1 on 1/3(1,2) x 1/3(1,2)", criterion_6, Duration::from_secs(5)),
        ("7 derivation quotients of skew superpotentials", criterion_7, Duration::from_secs(10)),
        ("8 Koszulity probe through degree 8", criterion_8, Duration::from_secs(20)),
        ("9 property suites", criterion_9, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, bound) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(()) if elapsed > bound => Err(format!("took {elapsed:.2?}, bound {bound:?}")),
            other => other,
        };
        match outcome {
            Ok(()) => println!("[PASS] {name} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {name} ({elapsed:.2?}): {e}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
