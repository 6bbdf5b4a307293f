//! Quadratic presentations `T_S V / <M>` over `S = k^{Q_0}`.
//!
//! Graded components are computed degree by degree. Each degree keeps a set
//! of standard paths spanning `A_d` and, for every standard path `s` of
//! degree `d - 1` and arrow `a` composable with it, the normal form of `a s`.
//! This uses `A_d = (V ⊗ A_{d-1}) / image(M ⊗ A_{d-2})`, so only standard
//! paths are ever expanded and the cost tracks `dim A_d`, not the number of
//! paths.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel, rref_with_pivots, Rational, RationalMatrix, Subspace};
use crate::quiver::{enumerate_paths, span_basis, ArrowId, Path, PathVector, Quiver, VertexId};

/// A quiver with homogeneous length-2 relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    quiver: Quiver,
    relations: Vec<PathVector>,
}

impl QuadraticPresentation {
    /// Validates that every relation is nonzero, has a single `(source, target)`
    /// block, has length 2, and that the relations are linearly independent.
    pub fn new(quiver: Quiver, relations: Vec<PathVector>) -> Result<Self> {
        for (i, r) in relations.iter().enumerate() {
            match r.homogeneity() {
                Some((_, _, 2)) => {}
                Some((_, _, l)) => {
                    return Err(Error::InvalidPresentation(format!(
                        "relation {i} has length {l}, expected 2"
                    )))
                }
                None if r.is_zero() => {
                    return Err(Error::InvalidPresentation(format!("relation {i} is zero")))
                }
                None => {
                    return Err(Error::InvalidPresentation(format!(
                        "relation {i} is not homogeneous"
                    )))
                }
            }
            for p in r.paths() {
                if quiver.path(p.arrows()).as_ref() != Some(p) {
                    return Err(Error::InvalidPresentation(format!(
                        "relation {i} uses a path not in the quiver"
                    )));
                }
            }
        }
        if span_basis(&relations).len() != relations.len() {
            return Err(Error::InvalidPresentation("relations are linearly dependent".into()));
        }
        Ok(Self { quiver, relations })
    }

    /// Like [`new`](Self::new) but first reduces the relations to their
    /// canonical independent basis.
    pub fn from_spanning(quiver: Quiver, relations: &[PathVector]) -> Result<Self> {
        Self::new(quiver, span_basis(relations))
    }

    /// Tensor algebra of the quiver.
    pub fn free(quiver: Quiver) -> Self {
        Self { quiver, relations: Vec::new() }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Relations in the order they were given.
    pub fn relations(&self) -> &[PathVector] {
        &self.relations
    }

    /// Canonical basis of the relation space: RREF per `(source, target)`
    /// block, blocks in order. Equal for two presentations iff their relation
    /// spans agree on every vertex pair.
    pub fn canonical_relations(&self) -> Vec<PathVector> {
        relation_blocks(&self.relations).into_values().flatten().collect()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    /// Canonical relation basis grouped by block.
    pub fn relation_blocks(&self) -> BTreeMap<(VertexId, VertexId), Vec<PathVector>> {
        relation_blocks(&self.relations)
    }
}

pub(crate) fn relation_blocks(
    relations: &[PathVector],
) -> BTreeMap<(VertexId, VertexId), Vec<PathVector>> {
    let mut grouped: BTreeMap<(VertexId, VertexId), Vec<PathVector>> = BTreeMap::new();
    for r in relations {
        for (block, part) in r.split_blocks() {
            grouped.entry(block).or_default().push(part);
        }
    }
    grouped
        .into_iter()
        .map(|(b, vs)| (b, span_basis(&vs)))
        .filter(|(_, vs)| !vs.is_empty())
        .collect()
}

/// Position map for an ordered path basis.
#[derive(Clone, Debug)]
pub struct PathBasis {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl PathBasis {
    pub fn new(paths: Vec<Path>) -> Self {
        let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self { paths, index }
    }

    /// All paths of length `l` in enumeration order.
    pub fn of_length(q: &Quiver, l: usize) -> Self {
        Self::new(enumerate_paths(q, l, None, None))
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Dense coordinates; `None` if `v` uses a path outside the basis.
    pub fn dense(&self, v: &PathVector) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.len()];
        for (p, c) in v.terms() {
            out[self.index_of(p)?] = c.clone();
        }
        Some(out)
    }

    pub fn sparse(&self, v: &[Rational]) -> PathVector {
        PathVector::from_terms(self.paths.iter().cloned().zip(v.iter().cloned()))
    }

    pub fn subspace(&self, vectors: &[PathVector]) -> Subspace {
        let rows = vectors.iter().map(|v| self.dense(v).expect("vector inside the path basis")).collect();
        Subspace::from_vectors(self.len(), rows).expect("rows sized to the basis")
    }

    pub fn vectors(&self, s: &Subspace) -> Vec<PathVector> {
        (0..s.dim()).map(|i| self.sparse(s.basis().row(i))).collect()
    }
}

/// `Σ_μ V^{⊗μ} ⊗ M ⊗ V^{⊗(l-μ-2)}` inside the length-`l` path space, in the
/// basis of [`enumerate_paths`] order.
pub fn relation_span(p: &QuadraticPresentation, l: usize) -> Subspace {
    let basis = PathBasis::of_length(p.quiver(), l);
    basis.subspace(&padded_relations(p, l))
}

/// Generators of `V^{⊗μ} ⊗ M ⊗ V^{⊗(l-μ-2)}` for a single `μ`: each relation
/// with a length-`μ` path composed after it and a length-`(l-μ-2)` path before.
pub fn padded_relation_vectors(p: &QuadraticPresentation, l: usize, mu: usize) -> Vec<PathVector> {
    assert!(l >= 2 && mu + 2 <= l);
    let q = p.quiver();
    let mut out = Vec::new();
    for m in p.relations() {
        let (s, t, _) = m.homogeneity().expect("validated relation");
        for left in enumerate_paths(q, mu, Some(t), None) {
            for right in enumerate_paths(q, l - mu - 2, None, Some(s)) {
                let lv = PathVector::from_path(left.clone());
                let rv = PathVector::from_path(right);
                out.push(lv.concatenate(m).concatenate(&rv));
            }
        }
    }
    out
}

fn padded_relations(p: &QuadraticPresentation, l: usize) -> Vec<PathVector> {
    if l < 2 {
        return Vec::new();
    }
    (0..=l - 2).flat_map(|mu| padded_relation_vectors(p, l, mu)).collect()
}

/// Graded dimensions of one degree: `dims[target][source] = dim e_target A_d e_source`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub degree: usize,
    pub dims: Vec<Vec<usize>>,
    pub total: usize,
}

#[derive(Clone, Debug)]
struct Level {
    standard: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Normal form of `arrow · standard_{d-1}[i]` keyed by `(arrow, i)`.
    reduction: HashMap<(ArrowId, usize), Vec<(usize, Rational)>>,
}

/// Normal forms in the quotient up to a fixed degree.
#[derive(Clone, Debug)]
pub struct NormalForms<'a> {
    pres: &'a QuadraticPresentation,
    levels: Vec<Level>,
}

impl<'a> NormalForms<'a> {
    pub fn new(pres: &'a QuadraticPresentation, max_degree: usize) -> Self {
        let mut nf = Self { pres, levels: Vec::new() };
        let q = pres.quiver();
        let trivial: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
        nf.levels.push(Level {
            index: trivial.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect(),
            standard: trivial,
            reduction: HashMap::new(),
        });
        while nf.levels.len() <= max_degree {
            nf.push_level();
        }
        nf
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn presentation(&self) -> &QuadraticPresentation {
        self.pres
    }

    /// Standard paths forming a basis of `A_d`.
    pub fn standard_paths(&self, d: usize) -> &[Path] {
        &self.levels[d].standard
    }

    pub fn dim(&self, d: usize) -> usize {
        self.levels[d].standard.len()
    }

    pub fn graded_dims(&self, d: usize) -> GradedDims {
        let n = self.pres.quiver().vertex_count();
        let mut dims = vec![vec![0; n]; n];
        for p in &self.levels[d].standard {
            dims[p.target()][p.source()] += 1;
        }
        GradedDims { degree: d, dims, total: self.dim(d) }
    }

    fn push_level(&mut self) {
        let d = self.levels.len();
        let q = self.pres.quiver();
        let prev = &self.levels[d - 1];
        // Candidates a·s grouped by block.
        let mut blocks: BTreeMap<(VertexId, VertexId), Vec<(ArrowId, usize)>> = BTreeMap::new();
        for (i, s) in prev.standard.iter().enumerate() {
            for &a in q.out_arrows(s.target()) {
                blocks.entry((s.source(), q.arrow(a).target)).or_default().push((a, i));
            }
        }
        let mut relations_by_block: BTreeMap<(VertexId, VertexId), Vec<BTreeMap<(ArrowId, usize), Rational>>> =
            BTreeMap::new();
        if d >= 2 {
            let before = &self.levels[d - 2];
            for m in self.pres.relations() {
                let (ms, mt, _) = m.homogeneity().expect("validated relation");
                for (ti, t) in before.standard.iter().enumerate() {
                    if t.target() != ms {
                        continue;
                    }
                    let mut vec: BTreeMap<(ArrowId, usize), Rational> = BTreeMap::new();
                    for (path, c) in m.terms() {
                        let (outer, inner) = (path.arrows()[0], path.arrows()[1]);
                        let inner_nf = self.reduce_one(d - 1, inner, ti);
                        for (si, lambda) in inner_nf {
                            let e = vec.entry((outer, si)).or_insert_with(Rational::zero);
                            *e += c * lambda;
                        }
                    }
                    vec.retain(|_, c| !c.is_zero());
                    if !vec.is_empty() {
                        relations_by_block.entry((t.source(), mt)).or_default().push(vec);
                    }
                }
            }
        }

        let mut standard = Vec::new();
        // (arrow, prev idx) -> either Standard(path) or Combination of candidate keys.
        let mut pending: Vec<((ArrowId, usize), Vec<((ArrowId, usize), Rational)>)> = Vec::new();
        for (block, mut cands) in blocks {
            let path_of = |&(a, i): &(ArrowId, usize)| {
                q.arrow_path(a).compose(&prev.standard[i]).expect("composable candidate")
            };
            // Descending path order: pivots land on the largest paths and the
            // smallest ones stay standard.
            cands.sort_by_key(|k| std::cmp::Reverse(path_of(k)));
            let rels = relations_by_block.remove(&block).unwrap_or_default();
            if rels.is_empty() {
                for k in &cands {
                    standard.push(path_of(k));
                    pending.push((*k, vec![(*k, Rational::one())]));
                }
                continue;
            }
            let col: HashMap<(ArrowId, usize), usize> = cands.iter().enumerate().map(|(j, k)| (*k, j)).collect();
            let rows: Vec<Vec<Rational>> = rels
                .iter()
                .map(|r| {
                    let mut row = vec![Rational::zero(); cands.len()];
                    for (k, c) in r {
                        row[col[k]] = c.clone();
                    }
                    row
                })
                .collect();
            let m = RationalMatrix::from_rows(cands.len(), rows).expect("rows sized to candidates");
            let (r, pivots) = rref_with_pivots(&m);
            let mut pivot_row = vec![None; cands.len()];
            for (row, &p) in pivots.iter().enumerate() {
                pivot_row[p] = Some(row);
            }
            for (j, k) in cands.iter().enumerate() {
                match pivot_row[j] {
                    None => {
                        standard.push(path_of(k));
                        pending.push((*k, vec![(*k, Rational::one())]));
                    }
                    Some(row) => {
                        let combo = (0..cands.len())
                            .filter(|&c| c != j && pivot_row[c].is_none() && !r[(row, c)].is_zero())
                            .map(|c| (cands[c], -r[(row, c)].clone()))
                            .collect();
                        pending.push((*k, combo));
                    }
                }
            }
        }
        standard.sort();
        let index: HashMap<Path, usize> = standard.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let reduction = pending
            .into_iter()
            .map(|(k, combo)| {
                let nf = combo
                    .into_iter()
                    .map(|((a, i), c)| {
                        let p = q.arrow_path(a).compose(&prev.standard[i]).expect("composable candidate");
                        (index[&p], c)
                    })
                    .collect();
                (k, nf)
            })
            .collect();
        self.levels.push(Level { standard, index, reduction });
    }

    /// Normal form (over standard paths of degree `d`) of `arrow · standard_{d-1}[i]`.
    fn reduce_one(&self, d: usize, arrow: ArrowId, i: usize) -> Vec<(usize, Rational)> {
        self.levels[d].reduction.get(&(arrow, i)).cloned().unwrap_or_default()
    }

    /// Normal form of a path as sparse coordinates over the standard basis of its degree.
    pub fn normal_form_path(&self, p: &Path) -> BTreeMap<usize, Rational> {
        assert!(p.len() <= self.max_degree(), "degree {} not computed", p.len());
        let mut current: BTreeMap<usize, Rational> = BTreeMap::new();
        current.insert(self.levels[0].index[&Path::trivial(p.source())], Rational::one());
        for (step, &a) in p.arrows().iter().rev().enumerate() {
            let d = step + 1;
            let mut next: BTreeMap<usize, Rational> = BTreeMap::new();
            for (i, c) in &current {
                for (j, x) in self.reduce_one(d, a, *i) {
                    *next.entry(j).or_insert_with(Rational::zero) += c * &x;
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
            if current.is_empty() {
                break;
            }
        }
        current
    }

    /// Normal form of a length-homogeneous vector.
    pub fn normal_form(&self, v: &PathVector) -> Result<PathVector> {
        let Some(d) = v.length() else {
            return if v.is_zero() { Ok(PathVector::zero()) } else { Err(Error::NotHomogeneous) };
        };
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (p, c) in v.terms() {
            for (i, x) in self.normal_form_path(p) {
                *acc.entry(i).or_insert_with(Rational::zero) += c * x;
            }
        }
        Ok(PathVector::from_terms(
            acc.into_iter().map(|(i, c)| (self.levels[d].standard[i].clone(), c)),
        ))
    }

    pub fn is_zero(&self, v: &PathVector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    pub fn is_standard(&self, p: &Path) -> bool {
        self.levels.get(p.len()).is_some_and(|l| l.index.contains_key(p))
    }
}

/// Per-vertex-pair and total dimension of `A_l`.
pub fn graded_dim(p: &QuadraticPresentation, l: usize) -> GradedDims {
    NormalForms::new(p, l).graded_dims(l)
}

/// Graded dimensions for degrees `0..=d_max`.
pub fn hilbert_table(p: &QuadraticPresentation, d_max: usize) -> Vec<GradedDims> {
    let nf = NormalForms::new(p, d_max);
    (0..=d_max).map(|d| nf.graded_dims(d)).collect()
}

/// Whether a length-homogeneous vector vanishes in the quotient.
pub fn is_zero_in_quotient(p: &QuadraticPresentation, v: &PathVector) -> Result<bool> {
    match v.length() {
        None if v.is_zero() => Ok(true),
        None => Err(Error::NotHomogeneous),
        Some(l) if l < 2 => Ok(v.is_zero()),
        Some(l) => NormalForms::new(p, l).is_zero(v),
    }
}

/// Quadratic dual: arrows reversed (`a ↦ a*`), relations the annihilator of
/// `M` under the pairing of `a* b*` with `b a`.
pub fn quadratic_dual(p: &QuadraticPresentation) -> QuadraticPresentation {
    let q = p.quiver();
    let dual_quiver = Quiver::new(
        q.vertices().iter().map(|v| v.label.clone()).collect(),
        q.arrows().iter().map(|a| (a.target, a.source, format!("{}*", a.label))).collect(),
    )
    .expect("reversing arrows keeps the quiver valid");
    let blocks = p.relation_blocks();
    let mut dual_relations = Vec::new();
    // Original block (s -> t) pairs with dual block (t -> s).
    for s in 0..q.vertex_count() {
        for t in 0..q.vertex_count() {
            let paths = enumerate_paths(q, 2, Some(s), Some(t));
            if paths.is_empty() {
                continue;
            }
            let basis = PathBasis::new(paths);
            let m = basis.subspace(blocks.get(&(s, t)).map(Vec::as_slice).unwrap_or(&[]));
            let perp = m.orthogonal_complement();
            for v in basis.vectors(&perp) {
                dual_relations.push(v.map_paths(|path| {
                    let w = path.arrows();
                    dual_quiver.path(&[w[1], w[0]]).expect("reversed path composes")
                }));
            }
        }
    }
    QuadraticPresentation::from_spanning(dual_quiver, &dual_relations)
        .expect("annihilator basis is independent")
}

/// Outcome of the Hilbert-series test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum KoszulVerdict {
    /// The numerical identity holds through `d_max`. Necessary for Koszulity, not sufficient.
    Pass { d_max: usize },
    /// The identity fails first at `degree`.
    Fail { degree: usize },
}

impl KoszulVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, KoszulVerdict::Pass { .. })
    }
}

impl fmt::Display for KoszulVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KoszulVerdict::Pass { d_max } => write!(
                f,
                "pass through degree {d_max} (numerical condition only; necessary, not sufficient, for Koszulity)"
            ),
            KoszulVerdict::Fail { degree } => write!(f, "fail at degree {degree}: not Koszul"),
        }
    }
}

/// Checks `Σ_{i+j=d} (-1)^i H^!_i H_j = 0` for `1 <= d <= d_max`, where
/// `H_j[t][s] = dim e_t A_j e_s` and `H^!_i` counts dual paths transposed back
/// to the original orientation.
pub fn koszulity_probe(p: &QuadraticPresentation, d_max: usize) -> KoszulVerdict {
    let dual = quadratic_dual(p);
    let a = hilbert_table(p, d_max);
    let b = hilbert_table(&dual, d_max);
    let n = p.quiver().vertex_count();
    for d in 1..=d_max {
        let mut acc = vec![vec![0i128; n]; n];
        for i in 0..=d {
            let sign: i128 = if i % 2 == 0 { 1 } else { -1 };
            let bang = &b[i].dims; // bang[x][y]: dual paths y -> x, i.e. original x -> y.
            let dims = &a[d - i].dims;
            for t in 0..n {
                for m in 0..n {
                    let e = bang[m][t] as i128;
                    if e == 0 {
                        continue;
                    }
                    for s in 0..n {
                        acc[t][s] += sign * e * dims[m][s] as i128;
                    }
                }
            }
        }
        if acc.iter().flatten().any(|&x| x != 0) {
            return KoszulVerdict::Fail { degree: d };
        }
    }
    KoszulVerdict::Pass { d_max }
}

/// Orthogonal complement of the relation space inside one length-2 block,
/// returned as functionals over that block's paths.
pub(crate) fn relation_annihilator(
    p: &QuadraticPresentation,
    blocks: &BTreeMap<(VertexId, VertexId), Vec<PathVector>>,
    block: (VertexId, VertexId),
) -> Vec<PathVector> {
    let paths = enumerate_paths(p.quiver(), 2, Some(block.0), Some(block.1));
    if paths.is_empty() {
        return Vec::new();
    }
    let basis = PathBasis::new(paths);
    let m = basis.subspace(blocks.get(&block).map(Vec::as_slice).unwrap_or(&[]));
    basis.vectors(&kernel(m.basis()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::presentations::{commutative_polynomial, three_vertex_example, two_loops};

    #[test]
    fn polynomial_ring_dims() {
        let p = commutative_polynomial(2);
        let dims: Vec<usize> = hilbert_table(&p, 4).iter().map(|g| g.total).collect();
        assert_eq!(dims, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn free_algebra_dims() {
        let p = QuadraticPresentation::free(two_loops());
        let dims: Vec<usize> = hilbert_table(&p, 5).iter().map(|g| g.total).collect();
        assert_eq!(dims, vec![1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn three_vertex_dims() {
        let p = three_vertex_example();
        let dims: Vec<usize> = hilbert_table(&p, 4).iter().map(|g| g.total).collect();
        assert_eq!(dims, vec![3, 6, 6, 0, 0]);
        let g2 = graded_dim(&p, 2);
        assert_eq!(g2.dims[2][0], 6);
        let g0 = graded_dim(&p, 0);
        assert_eq!(g0.dims, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn relation_span_dims() {
        let p = commutative_polynomial(2);
        assert_eq!(relation_span(&p, 2).dim(), 1);
        assert_eq!(relation_span(&p, 3).dim(), 4);
        assert_eq!(relation_span(&three_vertex_example(), 2).dim(), 3);
    }

    #[test]
    fn quotient_membership() {
        let p = commutative_polynomial(2);
        let q = p.quiver();
        let xy = q.path(&[0, 1]).unwrap();
        let yx = q.path(&[1, 0]).unwrap();
        let xx = q.path(&[0, 0]).unwrap();
        let comm = PathVector::from_terms([(xy, rat(1)), (yx, rat(-1))]);
        assert!(is_zero_in_quotient(&p, &comm).unwrap());
        assert!(!is_zero_in_quotient(&p, &PathVector::from_path(xx.clone())).unwrap());
        let mixed = PathVector::from_path(xx).add(&PathVector::from_path(q.arrow_path(0)));
        assert_eq!(is_zero_in_quotient(&p, &mixed), Err(Error::NotHomogeneous));
    }

    #[test]
    fn dual_of_polynomial_ring_is_exterior() {
        let p = commutative_polynomial(2);
        let d = quadratic_dual(&p);
        assert_eq!(d.relation_count(), 3);
        let dims: Vec<usize> = hilbert_table(&d, 3).iter().map(|g| g.total).collect();
        assert_eq!(dims, vec![1, 2, 1, 0]);
    }

    #[test]
    fn dual_of_free_algebra() {
        let p = QuadraticPresentation::free(two_loops());
        let d = quadratic_dual(&p);
        assert_eq!(d.relation_count(), 4);
        let dims: Vec<usize> = hilbert_table(&d, 3).iter().map(|g| g.total).collect();
        assert_eq!(dims, vec![1, 2, 0, 0]);
    }

    #[test]
    fn double_dual_recovers_relations() {
        for p in [commutative_polynomial(3), three_vertex_example()] {
            let dd = quadratic_dual(&quadratic_dual(&p));
            assert_eq!(dd.canonical_relations(), p.canonical_relations());
        }
    }

    #[test]
    fn probe_passes_on_known_koszul_algebras() {
        assert!(koszulity_probe(&commutative_polynomial(2), 8).passed());
        assert!(koszulity_probe(&three_vertex_example(), 8).passed());
        assert!(koszulity_probe(&QuadraticPresentation::free(two_loops()), 6).passed());
    }

    #[test]
    fn invalid_relations_are_rejected() {
        let q = two_loops();
        let x = PathVector::from_path(q.arrow_path(0));
        assert!(QuadraticPresentation::new(q.clone(), vec![x]).is_err());
        let xx = PathVector::from_path(q.path(&[0, 0]).unwrap());
        assert!(QuadraticPresentation::new(q.clone(), vec![xx.clone(), xx.scale(&rat(2))]).is_err());
        assert!(QuadraticPresentation::new(q, vec![PathVector::zero()]).is_err());
    }
}
