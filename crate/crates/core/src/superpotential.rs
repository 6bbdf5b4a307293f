//! Superpotentials, path derivatives, derivation quotients and shuffles.
//!
//! The cyclic shift is signed: a single rotation of a length-`n` term picks
//! up `(-1)^(n-1)`, so `x⊗y - y⊗x` is a fixed point.

use num_traits::{One, Zero};

use crate::algebra::QuadraticPresentation;
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use crate::quiver::{Path, PathVector, Quiver};
use crate::tensor::TensorMap;

/// A closed, homogeneous, signed-cyclically symmetric path vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superpotential {
    quiver: Quiver,
    form: PathVector,
    degree: usize,
}

impl Superpotential {
    /// Validates `form` on `quiver`.
    pub fn new(quiver: Quiver, form: PathVector) -> Result<Self> {
        let check = check_superpotential(&quiver, &form);
        if !check.is_superpotential() {
            return Err(Error::NotSuperpotential(check.to_string()));
        }
        let degree = form.length().expect("checked homogeneous");
        Ok(Self { quiver, form, degree })
    }

    /// The degree-0 unit `Σ_v e_v`.
    pub fn unit(quiver: Quiver) -> Self {
        let form = PathVector::from_terms((0..quiver.vertex_count()).map(|v| (Path::trivial(v), Rational::one())));
        Self { quiver, form, degree: 0 }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn form(&self) -> &PathVector {
        &self.form
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn term_count(&self) -> usize {
        self.form.len()
    }

    /// Same form scaled so the lexicographically first path has coefficient +1.
    pub fn normalized(&self) -> Self {
        Self { quiver: self.quiver.clone(), form: self.form.normalized(), degree: self.degree }
    }

    /// The scalar `c` with `self = c · other`, if there is one.
    pub fn ratio_to(&self, other: &Superpotential) -> Option<Rational> {
        let (p, c) = other.form.leading()?;
        let k = self.form.coefficient(p) / c;
        (!k.is_zero() && self.form == other.form.scale(&k)).then_some(k)
    }
}

/// Signed rotation moving the first-acting arrow of every term to the
/// last-acting position.
pub fn signed_cyclic_shift(q: &Quiver, v: &PathVector) -> Result<PathVector> {
    let n = match v.length() {
        Some(n) => n,
        None if v.is_zero() => return Ok(PathVector::zero()),
        None => return Err(Error::NotHomogeneous),
    };
    if v.paths().any(|p| !p.is_closed()) {
        return Err(Error::NotClosed);
    }
    if n == 0 {
        return Ok(v.clone());
    }
    let sign = if n % 2 == 0 { rat(-1) } else { rat(1) };
    Ok(PathVector::from_terms(v.terms().map(|(p, c)| (p.rotate(q), c * &sign))))
}

/// Outcome of [`check_superpotential`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperpotentialCheck {
    pub nonzero: bool,
    pub homogeneous: bool,
    pub closed: bool,
    /// `e_v ω = ω e_v` for every vertex; equivalent to every term being closed.
    pub commutes_with_idempotents: bool,
    pub shift_fixed: bool,
}

impl SuperpotentialCheck {
    pub fn is_superpotential(&self) -> bool {
        self.nonzero && self.homogeneous && self.closed && self.commutes_with_idempotents && self.shift_fixed
    }
}

impl std::fmt::Display for SuperpotentialCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut failed = Vec::new();
        if !self.nonzero {
            failed.push("zero");
        }
        if !self.homogeneous {
            failed.push("not homogeneous");
        }
        if !self.closed {
            failed.push("has open paths");
        }
        if !self.shift_fixed {
            failed.push("not fixed by the signed cyclic shift");
        }
        if failed.is_empty() {
            write!(f, "superpotential")
        } else {
            write!(f, "{}", failed.join(", "))
        }
    }
}

pub fn check_superpotential(q: &Quiver, v: &PathVector) -> SuperpotentialCheck {
    let nonzero = !v.is_zero();
    let homogeneous = v.length().is_some();
    let closed = v.paths().all(Path::is_closed);
    let commutes_with_idempotents = v.paths().all(|p| {
        (0..q.vertex_count()).all(|e| (p.target() == e) == (p.source() == e))
    });
    let shift_fixed = homogeneous && closed && signed_cyclic_shift(q, v).map(|s| &s == v).unwrap_or(false);
    SuperpotentialCheck { nonzero, homogeneous, closed, commutes_with_idempotents, shift_fixed }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Strip a written prefix (the last-acting arrows).
    Left,
    /// Strip a written suffix (the first-acting arrows).
    Right,
}

/// `δ_p w`: the part of `w` following `p` on the given side.
pub fn derive(w: &Superpotential, p: &Path, side: Side) -> PathVector {
    derive_vector(&w.quiver, &w.form, p, side)
}

/// [`derive`] for an arbitrary homogeneous path vector.
pub fn derive_vector(q: &Quiver, v: &PathVector, p: &Path, side: Side) -> PathVector {
    let k = p.len();
    let mut out = PathVector::zero();
    for (term, c) in v.terms() {
        if term.len() < k {
            continue;
        }
        match side {
            Side::Left => {
                let (head, rest) = term.split_at(k, q);
                if &head == p {
                    out.add_term(rest, c.clone());
                }
            }
            Side::Right => {
                let (rest, tail) = term.split_at(term.len() - k, q);
                if &tail == p {
                    out.add_term(rest, c.clone());
                }
            }
        }
    }
    out
}

/// The quadratic presentation spanned by `{δ_p w : |p| = n - 2}` (left derivatives).
pub fn derivation_quotient(w: &Superpotential) -> Result<QuadraticPresentation> {
    if w.degree < 2 {
        return Err(Error::Precondition(format!(
            "derivation quotient needs degree at least 2, got {}",
            w.degree
        )));
    }
    let mut by_prefix: std::collections::BTreeMap<Path, PathVector> = Default::default();
    for (term, c) in w.form.terms() {
        let (head, rest) = term.split_at(w.degree - 2, &w.quiver);
        by_prefix.entry(head).or_default().add_term(rest, c.clone());
    }
    let derivatives: Vec<PathVector> = by_prefix.into_values().collect();
    QuadraticPresentation::from_spanning(w.quiver.clone(), &derivatives)
}

/// `w1 ⧢ w2` on the tensor product quiver described by `t`.
pub fn shuffle_product(w1: &Superpotential, w2: &Superpotential, t: &TensorMap) -> Result<Superpotential> {
    if w1.quiver != *t.left() || w2.quiver != *t.right() {
        return Err(Error::NonComposableLift("superpotential quivers differ from the tensor factors".into()));
    }
    let (n1, n2) = (w1.degree, w2.degree);
    let masks = shuffles(n1, n2);
    let mut form = PathVector::zero();
    for (p1, c1) in w1.form.terms() {
        for (p2, c2) in w2.form.terms() {
            let coef = c1 * c2;
            for mask in &masks {
                let (path, odd) = lift_shuffle(t, p1, p2, mask)?;
                form.add_term(path, if odd { -coef.clone() } else { coef.clone() });
            }
        }
    }
    Superpotential::new(t.quiver().clone(), form)
}

/// Interleavings of `n1` left letters and `n2` right letters, in written
/// order; `true` marks a left letter.
fn shuffles(n1: usize, n2: usize) -> Vec<Vec<bool>> {
    fn go(n1: usize, n2: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if n1 == 0 && n2 == 0 {
            out.push(cur.clone());
            return;
        }
        if n1 > 0 {
            cur.push(true);
            go(n1 - 1, n2, cur, out);
            cur.pop();
        }
        if n2 > 0 {
            cur.push(false);
            go(n1, n2 - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n1, n2, &mut Vec::with_capacity(n1 + n2), &mut out);
    out
}

/// Routes an interleaving of `p1` and `p2` through the product quiver,
/// starting from the pair of base vertices. The sign counts right letters
/// written before left letters.
fn lift_shuffle(t: &TensorMap, p1: &Path, p2: &Path, mask: &[bool]) -> Result<(Path, bool)> {
    let (mut i1, mut i2) = (p1.len(), p2.len());
    let (mut x1, mut x2) = (p1.source(), p2.source());
    let start = t.vertex(x1, x2);
    let mut acting = Vec::with_capacity(mask.len());
    for &left in mask.iter().rev() {
        if left {
            i1 -= 1;
            let a = t.left().arrow(p1.arrows()[i1]);
            if a.source != x1 {
                return Err(Error::NonComposableLift(format!("left arrow {} does not start at the current vertex", a.label)));
            }
            acting.push(t.left_arrow(a.id, x2));
            x1 = a.target;
        } else {
            i2 -= 1;
            let a = t.right().arrow(p2.arrows()[i2]);
            if a.source != x2 {
                return Err(Error::NonComposableLift(format!("right arrow {} does not start at the current vertex", a.label)));
            }
            acting.push(t.right_arrow(x1, a.id));
            x2 = a.target;
        }
    }
    let mut inversions = 0usize;
    let mut rights_seen = 0usize;
    for &left in mask {
        if left {
            inversions += rights_seen;
        } else {
            rights_seen += 1;
        }
    }
    let path = if acting.is_empty() {
        Path::trivial(start)
    } else {
        acting.reverse();
        t.quiver()
            .path(&acting)
            .ok_or_else(|| Error::NonComposableLift("lifted word does not compose".into()))?
    };
    Ok((path, inversions % 2 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{loops, polynomial_xy, two_loops};

    fn commutator(q: &Quiver, a: &str, b: &str) -> PathVector {
        PathVector::from_terms([
            (q.path_by_labels(&[a, b]).unwrap(), rat(1)),
            (q.path_by_labels(&[b, a]).unwrap(), rat(-1)),
        ])
    }

    #[test]
    fn commutator_is_fixed() {
        let q = two_loops();
        let w = commutator(&q, "x", "y");
        assert_eq!(signed_cyclic_shift(&q, &w).unwrap(), w);
        assert!(check_superpotential(&q, &w).is_superpotential());
    }

    #[test]
    fn symmetric_sum_is_not_a_superpotential() {
        let q = two_loops();
        let v = PathVector::from_terms([
            (q.path_by_labels(&["x", "y"]).unwrap(), rat(1)),
            (q.path_by_labels(&["y", "x"]).unwrap(), rat(1)),
        ]);
        let check = check_superpotential(&q, &v);
        assert!(check.closed && check.homogeneous && !check.shift_fixed);
    }

    #[test]
    fn single_two_cycle_shifts_with_sign() {
        let q = Quiver::new(vec!["0", "1"], vec![(0, 1, "a"), (1, 0, "b")]).unwrap();
        let ab = PathVector::from_path(q.path_by_labels(&["a", "b"]).unwrap());
        let ba = q.path_by_labels(&["b", "a"]).unwrap();
        assert_eq!(signed_cyclic_shift(&q, &ab).unwrap(), PathVector::from_term(ba, rat(-1)));
    }

    #[test]
    fn open_paths_are_rejected() {
        let q = Quiver::new(vec!["0", "1"], vec![(0, 1, "a")]).unwrap();
        let v = PathVector::from_path(q.arrow_path(0));
        assert_eq!(signed_cyclic_shift(&q, &v), Err(Error::NotClosed));
    }

    #[test]
    fn left_derivative_of_commutator() {
        let q = two_loops();
        let w = Superpotential::new(q.clone(), commutator(&q, "x", "y")).unwrap();
        let x = q.arrow_path(0);
        let y = q.arrow_path(1);
        assert_eq!(derive(&w, &x, Side::Left), PathVector::from_path(y.clone()));
        assert_eq!(derive(&w, &x, Side::Right), PathVector::from_term(y, rat(-1)));
        let xx = q.path(&[0, 0]).unwrap();
        assert!(derive(&w, &xx, Side::Left).is_zero());
    }

    #[test]
    fn derivation_quotient_of_commutator() {
        let q = two_loops();
        let w = Superpotential::new(q.clone(), commutator(&q, "x", "y")).unwrap();
        let p = derivation_quotient(&w).unwrap();
        assert_eq!(p.canonical_relations(), polynomial_xy().canonical_relations());
    }

    #[test]
    fn shuffle_orders() {
        assert_eq!(shuffles(2, 2).len(), 6);
        assert_eq!(shuffles(3, 0), vec![vec![true; 3]]);
    }

    #[test]
    fn unit_is_neutral_for_shuffle() {
        let p = polynomial_xy();
        let one = crate::algebra::QuadraticPresentation::free(loops(0));
        let (_, t) = crate::tensor::tensor_presentation(&p, &one);
        let w = Superpotential::new(p.quiver().clone(), p.relations()[0].clone()).unwrap();
        let s = shuffle_product(&w, &Superpotential::unit(one.quiver().clone()), &t).unwrap();
        assert_eq!(s.degree(), 2);
        assert_eq!(s.term_count(), 2);
    }
}
