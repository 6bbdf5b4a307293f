//! Tensor products of quadratic presentations.
//!
//! Product vertex `(v1, v2)` has id `v1 * |V2| + v2`. Arrows `(a1, v2)` come
//! first with id `a1 * |V2| + v2`, followed by arrows `(v1, a2)` with id
//! `|A1| * |V2| + v1 * |A2| + a2`.

use crate::algebra::QuadraticPresentation;
use crate::grading::WeightGrading;
use crate::linalg::rat;
use crate::quiver::{ArrowId, Path, PathVector, Quiver, VertexId};

/// Which factor an arrow of the product quiver comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowOrigin {
    Left { arrow: ArrowId, vertex: VertexId },
    Right { vertex: VertexId, arrow: ArrowId },
}

/// Identifies the product quiver with pairs of factor data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMap {
    left: Quiver,
    right: Quiver,
    product: Quiver,
}

impl TensorMap {
    pub fn new(left: Quiver, right: Quiver) -> Self {
        let (n1, n2) = (left.vertex_count(), right.vertex_count());
        let mut vertex_labels = Vec::with_capacity(n1 * n2);
        for v1 in left.vertices() {
            for v2 in right.vertices() {
                vertex_labels.push(format!("({},{})", v1.label, v2.label));
            }
        }
        let mut arrows = Vec::with_capacity(left.arrow_count() * n2 + n1 * right.arrow_count());
        for a in left.arrows() {
            for v2 in right.vertices() {
                arrows.push((a.source * n2 + v2.id, a.target * n2 + v2.id, format!("({},e{})", a.label, v2.label)));
            }
        }
        for v1 in left.vertices() {
            for a in right.arrows() {
                arrows.push((v1.id * n2 + a.source, v1.id * n2 + a.target, format!("(e{},{})", v1.label, a.label)));
            }
        }
        let product = Quiver::new(vertex_labels, arrows).unwrap_or_else(|_| {
            // Labels can only clash for unusual factor labels; fall back to ids.
            let mut arrows = Vec::new();
            for a in left.arrows() {
                for v2 in 0..n2 {
                    arrows.push((a.source * n2 + v2, a.target * n2 + v2, format!("L{}_{}", a.id, v2)));
                }
            }
            for v1 in 0..n1 {
                for a in right.arrows() {
                    arrows.push((v1 * n2 + a.source, v1 * n2 + a.target, format!("R{}_{}", v1, a.id)));
                }
            }
            Quiver::new((0..n1 * n2).map(|v| v.to_string()).collect(), arrows).expect("ids are unique")
        });
        Self { left, right, product }
    }

    pub fn left(&self) -> &Quiver {
        &self.left
    }

    pub fn right(&self) -> &Quiver {
        &self.right
    }

    pub fn quiver(&self) -> &Quiver {
        &self.product
    }

    pub fn vertex(&self, v1: VertexId, v2: VertexId) -> VertexId {
        v1 * self.right.vertex_count() + v2
    }

    pub fn vertex_pair(&self, v: VertexId) -> (VertexId, VertexId) {
        let n2 = self.right.vertex_count();
        (v / n2, v % n2)
    }

    pub fn left_arrow(&self, a1: ArrowId, v2: VertexId) -> ArrowId {
        a1 * self.right.vertex_count() + v2
    }

    pub fn right_arrow(&self, v1: VertexId, a2: ArrowId) -> ArrowId {
        self.left.arrow_count() * self.right.vertex_count() + v1 * self.right.arrow_count() + a2
    }

    pub fn origin(&self, a: ArrowId) -> ArrowOrigin {
        let split = self.left.arrow_count() * self.right.vertex_count();
        if a < split {
            let n2 = self.right.vertex_count();
            ArrowOrigin::Left { arrow: a / n2, vertex: a % n2 }
        } else {
            let m2 = self.right.arrow_count();
            ArrowOrigin::Right { vertex: (a - split) / m2, arrow: (a - split) % m2 }
        }
    }

    /// A left-factor path placed at right-factor vertex `v2`.
    pub fn lift_left(&self, p: &Path, v2: VertexId) -> Path {
        p.map_arrows(self.vertex(p.source(), v2), self.vertex(p.target(), v2), |a| self.left_arrow(a, v2))
    }

    /// A right-factor path placed at left-factor vertex `v1`.
    pub fn lift_right(&self, v1: VertexId, p: &Path) -> Path {
        p.map_arrows(self.vertex(v1, p.source()), self.vertex(v1, p.target()), |a| self.right_arrow(v1, a))
    }
}

/// Presentation of `A1 ⊗ A2`: both factors' relations lifted to every
/// vertex of the other factor, then one commutator
/// `(a1, t2)(s1, a2) - (t1, a2)(a1, s2)` per pair of arrows.
pub fn tensor_presentation(
    p1: &QuadraticPresentation,
    p2: &QuadraticPresentation,
) -> (QuadraticPresentation, TensorMap) {
    let t = TensorMap::new(p1.quiver().clone(), p2.quiver().clone());
    let mut relations = Vec::new();
    for v2 in 0..t.right.vertex_count() {
        for r in p1.relations() {
            relations.push(r.map_paths(|p| t.lift_left(p, v2)));
        }
    }
    for v1 in 0..t.left.vertex_count() {
        for r in p2.relations() {
            relations.push(r.map_paths(|p| t.lift_right(v1, p)));
        }
    }
    for a1 in t.left.arrows() {
        for a2 in t.right.arrows() {
            let first = t
                .product
                .path(&[t.left_arrow(a1.id, a2.target), t.right_arrow(a1.source, a2.id)])
                .expect("commutator terms compose");
            let second = t
                .product
                .path(&[t.right_arrow(a1.target, a2.id), t.left_arrow(a1.id, a2.source)])
                .expect("commutator terms compose");
            relations.push(PathVector::from_terms([(first, rat(1)), (second, rat(-1))]));
        }
    }
    let p = QuadraticPresentation::new(t.product.clone(), relations).expect("tensor relations are independent");
    (p, t)
}

/// Grading on the product: `(a1, v2) ↦ g1(a1)`, `(v1, a2) ↦ g2(a2)`.
pub fn lift_grading_sum(g1: &WeightGrading, g2: &WeightGrading, t: &TensorMap) -> WeightGrading {
    let degrees = (0..t.product.arrow_count())
        .map(|a| match t.origin(a) {
            ArrowOrigin::Left { arrow, .. } => g1.degree(arrow),
            ArrowOrigin::Right { arrow, .. } => g2.degree(arrow),
        })
        .collect();
    WeightGrading::new(degrees)
}
