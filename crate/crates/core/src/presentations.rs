//! Small named presentations used throughout examples and tests.

use crate::algebra::QuadraticPresentation;
use crate::linalg::rat;
use crate::quiver::{PathVector, Quiver};

/// One vertex with loops `x1, ..., xn`.
pub fn loops(n: usize) -> Quiver {
    Quiver::new(vec!["0"], (1..=n).map(|i| (0, 0, format!("x{i}"))).collect()).expect("valid quiver")
}

/// One vertex with loops `x` and `y`.
pub fn two_loops() -> Quiver {
    Quiver::new(vec!["0"], vec![(0, 0, "x"), (0, 0, "y")]).expect("valid quiver")
}

/// `k[x1, ..., xn]`: `n` loops with the commutators `xj xi - xi xj` for `i < j`.
pub fn commutative_polynomial(n: usize) -> QuadraticPresentation {
    let q = loops(n);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            relations.push(PathVector::from_terms([
                (q.path(&[j, i]).expect("loops compose"), rat(1)),
                (q.path(&[i, j]).expect("loops compose"), rat(-1)),
            ]));
        }
    }
    QuadraticPresentation::new(q, relations).expect("commutators are independent")
}

/// `k[x, y]` with arrows labelled `x`, `y` and relation `xy - yx`.
pub fn polynomial_xy() -> QuadraticPresentation {
    let q = two_loops();
    let rel = PathVector::from_terms([
        (q.path_by_labels(&["x", "y"]).expect("loops compose"), rat(1)),
        (q.path_by_labels(&["y", "x"]).expect("loops compose"), rat(-1)),
    ]);
    QuadraticPresentation::new(q, vec![rel]).expect("single relation")
}

/// The 3-vertex quiver `1 -a,b,c-> 2 -d,e,f-> 3` with relations
/// `q1 = db - ea`, `q2 = fa - dc`, `q3 = ec - fb`, in that order.
pub fn three_vertex_example() -> QuadraticPresentation {
    let q = Quiver::new(
        vec!["1", "2", "3"],
        vec![(0, 1, "a"), (0, 1, "b"), (0, 1, "c"), (1, 2, "d"), (1, 2, "e"), (1, 2, "f")],
    )
    .expect("valid quiver");
    let binomial = |p: [&str; 2], m: [&str; 2]| {
        PathVector::from_terms([
            (q.path_by_labels(&p).expect("composable"), rat(1)),
            (q.path_by_labels(&m).expect("composable"), rat(-1)),
        ])
    };
    let relations = vec![
        binomial(["d", "b"], ["e", "a"]),
        binomial(["f", "a"], ["d", "c"]),
        binomial(["e", "c"], ["f", "b"]),
    ];
    QuadraticPresentation::new(q, relations).expect("independent relations")
}
