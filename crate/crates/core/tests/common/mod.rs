//! Shared strategies and property checks for the property suite and the
//! acceptance target.
#![allow(dead_code)]

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use prepro::io::{format_rational, parse_rational, presentation_document, Document};
use prepro::linalg::{kernel, rank, rat, ratio, rref, RationalMatrix, Subspace};
use prepro::mckay::{air_grading, mckay_presentation, CyclicGroupSpec};
use prepro::quiver::{Path, PathVector, Quiver};
use prepro::{signed_cyclic_shift, QuadraticPresentation};

pub fn matrix(rows: &[Vec<i64>], cols: usize) -> RationalMatrix {
    RationalMatrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
        .expect("rows sized to cols")
}

/// Up to `max_rows` rows of length `cols` with entries in `-2..=2`.
pub fn small_rows(cols: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, cols), 0..=max_rows)
}

pub fn subspace_pair() -> impl Strategy<Value = (usize, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    (1usize..=8).prop_flat_map(|d| (Just(d), small_rows(d, 6), small_rows(d, 6)))
}

pub fn check_dimension_law(d: usize, a: &[Vec<i64>], b: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let sa = Subspace::row_space(&matrix(a, d));
    let sb = Subspace::row_space(&matrix(b, d));
    let sum = sa.sum(&sb).unwrap();
    let cap = sa.intersect(&sb).unwrap();
    prop_assert_eq!(sum.dim() + cap.dim(), sa.dim() + sb.dim());
    prop_assert!(cap.is_subspace_of(&sa).unwrap() && cap.is_subspace_of(&sb).unwrap());
    prop_assert!(sa.is_subspace_of(&sum).unwrap());
    let m = matrix(a, d);
    let k = kernel(&m);
    prop_assert_eq!(k.dim() + rank(&m), d);
    for v in k.basis().row_vecs() {
        prop_assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
    }
    let (r, _) = rref(&m);
    prop_assert_eq!(rref(&r).0, r);
    Ok(())
}

/// Two vertices, loops `x` at 0 and `y` at 1, arrows `a, b: 0 -> 1`, `c, d: 1 -> 0`.
pub fn two_vertex_quiver() -> Quiver {
    Quiver::new(
        vec!["0", "1"],
        vec![(0, 0, "x"), (1, 1, "y"), (0, 1, "a"), (0, 1, "b"), (1, 0, "c"), (1, 0, "d")],
    )
    .unwrap()
}

/// Walk from `start` making `choices`; returns the path.
pub fn walk(q: &Quiver, start: usize, choices: &[u8]) -> Path {
    let mut at = start;
    let mut acting = Vec::new();
    for &c in choices {
        let outs = q.out_arrows(at);
        let a = outs[c as usize % outs.len()];
        acting.push(a);
        at = q.arrow(a).target;
    }
    acting.reverse();
    if acting.is_empty() {
        Path::trivial(start)
    } else {
        q.path(&acting).unwrap()
    }
}

/// Closed walk of length `n` based at `start` in [`two_vertex_quiver`].
pub fn closed_walk(q: &Quiver, start: usize, choices: &[u8], closing: u8) -> Path {
    let open = walk(q, start, choices);
    let at = open.target();
    let candidates: Vec<usize> =
        q.out_arrows(at).iter().copied().filter(|&a| q.arrow(a).target == start).collect();
    let a = candidates[closing as usize % candidates.len()];
    q.arrow_path(a).compose(&open).unwrap()
}

pub fn closed_vector() -> impl Strategy<Value = Vec<(usize, Vec<u8>, u8, i64)>> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec((0usize..2, prop::collection::vec(any::<u8>(), n - 1), any::<u8>(), -3i64..=3), 1..5)
    })
}

pub fn check_shift_order(terms: &[(usize, Vec<u8>, u8, i64)]) -> Result<(), TestCaseError> {
    let q = two_vertex_quiver();
    let v = PathVector::from_terms(
        terms.iter().map(|(s, ch, cl, c)| (closed_walk(&q, *s, ch, *cl), rat(*c))),
    );
    let Some(n) = v.length() else { return Ok(()) };
    let mut w = v.clone();
    for k in 1..=n {
        w = signed_cyclic_shift(&q, &w).unwrap();
        if k < n && n > 1 {
            // Intermediate shifts stay closed and homogeneous.
            prop_assert_eq!(w.length(), Some(n));
        }
    }
    prop_assert_eq!(w, v);
    Ok(())
}

pub fn walk_vector() -> impl Strategy<Value = (usize, Vec<(Vec<u8>, i64)>)> {
    (0usize..4, 0usize..2).prop_flat_map(|(len, start)| {
        (Just(start), prop::collection::vec((prop::collection::vec(any::<u8>(), len), -3i64..=3), 1..4))
    })
}

fn to_vector(q: &Quiver, start: usize, terms: &[(Vec<u8>, i64)]) -> PathVector {
    PathVector::from_terms(terms.iter().map(|(ch, c)| (walk(q, start, ch), rat(*c))))
}

pub fn check_associativity(
    u: &(usize, Vec<(Vec<u8>, i64)>),
    v: &(usize, Vec<(Vec<u8>, i64)>),
    w: &(usize, Vec<(Vec<u8>, i64)>),
) -> Result<(), TestCaseError> {
    let q = two_vertex_quiver();
    let (u, v, w) = (to_vector(&q, u.0, &u.1), to_vector(&q, v.0, &v.1), to_vector(&q, w.0, &w.1));
    let left = u.concatenate(&v).concatenate(&w);
    let right = u.concatenate(&v.concatenate(&w));
    prop_assert_eq!(&left, &right);
    if let (Some(a), Some(b), Some(c), Some(l)) = (u.length(), v.length(), w.length(), left.length()) {
        prop_assert_eq!(l, a + b + c);
    }
    Ok(())
}

pub fn presentation_input() -> impl Strategy<Value = (u32, Vec<u32>, Vec<(i64, i64)>, bool)> {
    (1u32..=5, 1usize..=3).prop_flat_map(|(r, n)| {
        (
            Just(r),
            prop::collection::vec(0..r, n),
            prop::collection::vec((-9i64..=9, 1i64..=7), 0..=3 * r as usize),
            any::<bool>(),
        )
    })
}

pub fn check_json_round_trip(r: u32, weights: &[u32], scales: &[(i64, i64)], graded: bool) -> Result<(), TestCaseError> {
    let s = CyclicGroupSpec::new(r, weights.to_vec()).unwrap();
    let base = mckay_presentation(&s);
    let relations: Vec<PathVector> = base
        .relations()
        .iter()
        .enumerate()
        .map(|(i, v)| match scales.get(i) {
            Some(&(n, d)) if n != 0 => v.scale(&ratio(n, d)),
            _ => v.clone(),
        })
        .collect();
    let p = QuadraticPresentation::new(base.quiver().clone(), relations).unwrap();
    let g = graded.then(|| air_grading(&s));
    let doc = presentation_document(&p, None, g.as_ref());
    let text = doc.to_json();
    let back = Document::from_json(&text).unwrap();
    prop_assert_eq!(&back, &doc);
    prop_assert_eq!(back.to_json(), text);
    let (p2, _, g2) = back.presentation_parts().unwrap();
    prop_assert_eq!(p2, p);
    prop_assert_eq!(g2, g);
    for &(n, d) in scales {
        let x = ratio(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }
    Ok(())
}

/// Runs all four property suites with `cases` cases each; returns failures.
pub fn run_property_suites(cases: u32) -> Vec<String> {
    let mut failures = Vec::new();
    let runner = || TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    if let Err(e) = runner().run(&subspace_pair(), |(d, a, b)| check_dimension_law(d, &a, &b)) {
        failures.push(format!("dimension law: {e}"));
    }
    if let Err(e) = runner().run(&closed_vector(), |t| check_shift_order(&t)) {
        failures.push(format!("shift order: {e}"));
    }
    if let Err(e) = runner().run(&(walk_vector(), walk_vector(), walk_vector()), |(u, v, w)| {
        check_associativity(&u, &v, &w)
    }) {
        failures.push(format!("associativity: {e}"));
    }
    if let Err(e) = runner().run(&presentation_input(), |(r, w, s, g)| check_json_round_trip(r, &w, &s, g)) {
        failures.push(format!("json round trip: {e}"));
    }
    failures
}
