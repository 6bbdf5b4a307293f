//! Higher preprojective presentations.
//!
//! For each basis vector `q: i -> j` of `K_n` a new arrow `a_q: j -> i` is
//! added. Write `q = Σ_a q_a ⊗ a` with `a` acting first and
//! `q_a ∈ K_{n-1}`; the coordinate of `q_a` on a basis vector `p` of
//! `K_{n-1}` is the coefficient of `a` in `δ^L_p q`. `δ^R_p q` is defined the
//! same way from `q = Σ_a a ⊗ q'_a`. For each `p` the new relation is
//!
//! ```text
//! Σ_q (δ^L_p q) a_q + (-1)^n Σ_q a_q (δ^R_p q)
//! ```
//!
//! For `n = 2` on a quiver where no arrow is both first- and last-acting in
//! `K_2`, one of the two sums vanishes for every `p`.

use std::collections::BTreeMap;

use crate::algebra::{koszulity_probe, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::grading::WeightGrading;
use crate::koszul::{koszul_sequence, KoszulSpace};
use crate::linalg::rat;
use crate::quiver::{coordinates, span_basis, ArrowId, PathVector, Quiver, VertexId};
use crate::superpotential::{signed_cyclic_shift, Superpotential};

/// Degree bound used for the Hilbert-series check in the precondition.
const PROBE_EXTRA_DEGREES: usize = 2;

#[derive(Clone, Debug)]
pub struct PreprojectivePresentation {
    pub presentation: QuadraticPresentation,
    /// Degree `n` of the Koszul space the new arrows come from.
    pub n: usize,
    /// `K_n` basis vector `q` and the arrow `a_q` added for it, in basis order.
    pub new_arrows: Vec<(PathVector, ArrowId)>,
    /// Old arrows degree 0, new arrows degree 1.
    pub grading: WeightGrading,
    /// `Σ_q (δ^L_p q) a_q` for each basis vector `p` of `K_{n-1}` (zeros kept).
    pub left_relations: Vec<PathVector>,
    /// `Σ_q a_q (δ^R_p q)` for each basis vector `p` of `K_{n-1}` (zeros kept).
    pub right_relations: Vec<PathVector>,
    /// The combined relations before reduction, one per `p`.
    pub new_relations: Vec<PathVector>,
}

impl PreprojectivePresentation {
    pub fn new_arrow_ids(&self) -> Vec<ArrowId> {
        self.new_arrows.iter().map(|(_, a)| *a).collect()
    }
}

/// Builds the preprojective presentation using the canonical basis of `K_n`.
pub fn build_preprojective(p: &QuadraticPresentation, n: usize) -> Result<PreprojectivePresentation> {
    let seq = checked_sequence(p, n)?;
    let basis = seq[n].basis();
    assemble(p, n, &seq[n - 1], basis)
}

/// Same as [`build_preprojective`] with a caller-chosen basis of `K_n`; each
/// vector must lie in a single `(source, target)` block.
pub fn build_preprojective_with_basis(
    p: &QuadraticPresentation,
    n: usize,
    basis: Vec<PathVector>,
) -> Result<PreprojectivePresentation> {
    let seq = checked_sequence(p, n)?;
    let k = &seq[n];
    if basis.len() != k.dim() {
        return Err(Error::Precondition(format!("expected {} basis vectors of K_{n}, got {}", k.dim(), basis.len())));
    }
    for (i, q) in basis.iter().enumerate() {
        let Some((s, t, _)) = q.homogeneity() else {
            return Err(Error::Precondition(format!("basis vector {i} is not homogeneous")));
        };
        if coordinates(k.block(s, t), q).is_none() {
            return Err(Error::Precondition(format!("basis vector {i} is not in K_{n}")));
        }
    }
    if span_basis(&basis).len() != basis.len() {
        return Err(Error::Precondition("basis vectors are linearly dependent".into()));
    }
    assemble(p, n, &seq[n - 1], basis)
}

fn checked_sequence(p: &QuadraticPresentation, n: usize) -> Result<Vec<KoszulSpace>> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let seq = koszul_sequence(p, n + 1);
    let table = || {
        seq.iter().map(|k| format!("dim K_{} = {}", k.degree(), k.dim())).collect::<Vec<_>>().join(", ")
    };
    if seq[n].is_zero() || !seq[n + 1].is_zero() {
        return Err(Error::Precondition(format!(
            "need K_{n} != 0 and K_{} = 0; got {}",
            n + 1,
            table()
        )));
    }
    let verdict = koszulity_probe(p, n + PROBE_EXTRA_DEGREES);
    if !verdict.passed() {
        return Err(Error::Precondition(format!("Koszulity probe: {verdict}")));
    }
    Ok(seq)
}

fn assemble(
    p: &QuadraticPresentation,
    n: usize,
    k_prev: &KoszulSpace,
    basis: Vec<PathVector>,
) -> Result<PreprojectivePresentation> {
    let q = p.quiver();
    let old_arrows = q.arrow_count();
    let mut arrows: Vec<(VertexId, VertexId, String)> =
        q.arrows().iter().map(|a| (a.source, a.target, a.label.clone())).collect();
    let mut new_arrows = Vec::with_capacity(basis.len());
    for (i, g) in basis.iter().enumerate() {
        let (s, t, _) = g.homogeneity().expect("K_n basis vectors are homogeneous");
        let mut label = format!("a_q{}", i + 1);
        while q.arrow_by_label(&label).is_some() {
            label.push('\'');
        }
        arrows.push((t, s, label));
        new_arrows.push((g.clone(), old_arrows + i));
    }
    let labels: Vec<String> = q.vertices().iter().map(|v| v.label.clone()).collect();
    let extended = Quiver::new(labels, arrows)?;

    // Index of every K_{n-1} basis vector, in block order.
    let mut offsets: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    let mut count = 0;
    for (&block, b) in k_prev.blocks() {
        offsets.insert(block, count);
        count += b.len();
    }
    let mut left = vec![PathVector::zero(); count];
    let mut right = vec![PathVector::zero(); count];
    for (g, aq) in &new_arrows {
        let aq_path = extended.arrow_path(*aq);
        for (side, target) in [(Side::First, &mut left), (Side::Last, &mut right)] {
            for (a, rest) in peel(q, g, side) {
                let Some((s, t, _)) = rest.homogeneity() else { continue };
                let coords = coordinates(k_prev.block(s, t), &rest)
                    .ok_or_else(|| Error::Precondition("K_n is not contained in K_{n-1} ⊗ V".into()))?;
                let a_path = extended.arrow_path(a);
                let term = match side {
                    Side::First => a_path.compose(&aq_path),
                    Side::Last => aq_path.compose(&a_path),
                }
                .expect("new arrow composes with the peeled arrow");
                for (k, c) in coords.into_iter().enumerate() {
                    target[offsets[&(s, t)] + k].add_term(term.clone(), c);
                }
            }
        }
    }
    let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
    let combined: Vec<PathVector> =
        left.iter().zip(&right).map(|(l, r)| l.add(&r.scale(&sign))).collect();
    let mut all = p.relations().to_vec();
    all.extend(combined.iter().filter(|v| !v.is_zero()).cloned());
    let presentation = QuadraticPresentation::from_spanning(extended.clone(), &all)?;
    let degrees = (0..extended.arrow_count()).map(|a| u32::from(a >= old_arrows)).collect();
    Ok(PreprojectivePresentation {
        presentation,
        n,
        new_arrows,
        grading: WeightGrading::new(degrees),
        left_relations: left,
        right_relations: right,
        new_relations: combined,
    })
}

#[derive(Clone, Copy)]
enum Side {
    /// Peel the first-acting arrow: `q = Σ_a q_a ⊗ a`.
    First,
    /// Peel the last-acting arrow: `q = Σ_a a ⊗ q'_a`.
    Last,
}

fn peel(q: &Quiver, g: &PathVector, side: Side) -> BTreeMap<ArrowId, PathVector> {
    let mut out: BTreeMap<ArrowId, PathVector> = BTreeMap::new();
    for (path, c) in g.terms() {
        let l = path.len();
        let (a, rest) = match side {
            Side::First => {
                let (rest, tail) = path.split_at(l - 1, q);
                (tail.arrows()[0], rest)
            }
            Side::Last => {
                let (head, rest) = path.split_at(1, q);
                (head.arrows()[0], rest)
            }
        };
        out.entry(a).or_default().add_term(rest, c.clone());
    }
    out
}

/// `Σ_q Σ_{l=0..n} S^l(q a_q)` with `S` the signed cyclic shift.
pub fn preprojective_superpotential(pp: &PreprojectivePresentation) -> Result<Superpotential> {
    let q = pp.presentation.quiver();
    let mut form = PathVector::zero();
    for (g, aq) in &pp.new_arrows {
        let aq_path = q.arrow_path(*aq);
        let mut current =
            PathVector::from_terms(g.terms().map(|(p, c)| (p.compose(&aq_path).expect("a_q closes q"), c.clone())));
        for _ in 0..=pp.n {
            form = form.add(&current);
            current = signed_cyclic_shift(q, &current)?;
        }
    }
    Superpotential::new(q.clone(), form)
}
