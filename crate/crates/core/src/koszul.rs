//! Koszul spaces `K_l = ⋂_μ V^{⊗μ} ⊗ M ⊗ V^{⊗(l-μ-2)}`.
//!
//! The intersection is built recursively as `K_l = (K_{l-1} ⊗ V) ∩ (V^{⊗(l-2)} ⊗ M)`
//! one `(source, target)` block at a time. Membership in `V^{⊗(l-2)} ⊗ M` is
//! tested with the annihilator of `M` on the two first-acting arrows, so the
//! linear systems only have `dim K_{l-1} · #arrows` unknowns.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{relation_annihilator, PathBasis, QuadraticPresentation};
use crate::linalg::{kernel, Rational, RationalMatrix, Subspace};
use crate::quiver::{span_basis, Path, PathVector, VertexId};
use crate::superpotential::{signed_cyclic_shift, Superpotential};

/// `K_l` stored as a canonical basis per `(source, target)` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulSpace {
    degree: usize,
    blocks: BTreeMap<(VertexId, VertexId), Vec<PathVector>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDim {
    pub source: VertexId,
    pub target: VertexId,
    pub dim: usize,
}

impl KoszulSpace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.blocks.values().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn blocks(&self) -> &BTreeMap<(VertexId, VertexId), Vec<PathVector>> {
        &self.blocks
    }

    pub fn block(&self, source: VertexId, target: VertexId) -> &[PathVector] {
        self.blocks.get(&(source, target)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn block_dims(&self) -> Vec<BlockDim> {
        self.blocks
            .iter()
            .map(|(&(source, target), b)| BlockDim { source, target, dim: b.len() })
            .collect()
    }

    /// All basis vectors, blocks in `(source, target)` order.
    pub fn basis(&self) -> Vec<PathVector> {
        self.blocks.values().flatten().cloned().collect()
    }
}

/// Computes `K_0, ..., K_{l_max}`.
pub fn koszul_sequence(p: &QuadraticPresentation, l_max: usize) -> Vec<KoszulSpace> {
    let q = p.quiver();
    let mut out = Vec::with_capacity(l_max + 1);
    out.push(KoszulSpace {
        degree: 0,
        blocks: (0..q.vertex_count())
            .map(|v| ((v, v), vec![PathVector::from_path(Path::trivial(v))]))
            .collect(),
    });
    if l_max == 0 {
        return out;
    }
    let mut arrows: BTreeMap<(VertexId, VertexId), Vec<PathVector>> = BTreeMap::new();
    for a in q.arrows() {
        arrows.entry((a.source, a.target)).or_default().push(PathVector::from_path(q.arrow_path(a.id)));
    }
    out.push(KoszulSpace { degree: 1, blocks: arrows });
    let relation_blocks = p.relation_blocks();
    let mut annihilators: HashMap<(VertexId, VertexId), Vec<PathVector>> = HashMap::new();
    for l in 2..=l_max {
        let next = extend(p, &out[l - 1], &relation_blocks, &mut annihilators);
        out.push(next);
    }
    out
}

fn extend(
    p: &QuadraticPresentation,
    prev: &KoszulSpace,
    relation_blocks: &BTreeMap<(VertexId, VertexId), Vec<PathVector>>,
    annihilators: &mut HashMap<(VertexId, VertexId), Vec<PathVector>>,
) -> KoszulSpace {
    let q = p.quiver();
    let l = prev.degree + 1;
    // Candidates k ⊗ a with a acting first, grouped by the block of k ⊗ a.
    let mut candidates: BTreeMap<(VertexId, VertexId), Vec<PathVector>> = BTreeMap::new();
    for (&(mid, target), basis) in &prev.blocks {
        for &a in q.in_arrows(mid) {
            let av = PathVector::from_path(q.arrow_path(a));
            let source = q.arrow(a).source;
            for k in basis {
                candidates.entry((source, target)).or_default().push(k.concatenate(&av));
            }
        }
    }
    let mut blocks = BTreeMap::new();
    for (block, gens) in candidates {
        // Constraint rows keyed by (prefix, suffix block, functional index).
        let mut rows: BTreeMap<(Path, usize), Vec<Rational>> = BTreeMap::new();
        for (col, g) in gens.iter().enumerate() {
            let mut by_prefix: BTreeMap<Path, PathVector> = BTreeMap::new();
            for (path, c) in g.terms() {
                let (prefix, suffix) = path.split_at(l - 2, q);
                by_prefix.entry(prefix).or_default().add_term(suffix, c.clone());
            }
            for (prefix, inner) in by_prefix {
                let suffix_block = (block.0, prefix.source());
                let phis = annihilators
                    .entry(suffix_block)
                    .or_insert_with(|| relation_annihilator(p, relation_blocks, suffix_block));
                for (fi, phi) in phis.iter().enumerate() {
                    let value = inner
                        .terms()
                        .fold(Rational::zero(), |acc, (s, c)| acc + c * phi.coefficient(s));
                    if !value.is_zero() {
                        let row = rows
                            .entry((prefix.clone(), fi))
                            .or_insert_with(|| vec![Rational::zero(); gens.len()]);
                        row[col] += value;
                    }
                }
            }
        }
        let solutions = if rows.is_empty() {
            Subspace::full(gens.len())
        } else {
            let m = RationalMatrix::from_rows(gens.len(), rows.into_values().collect())
                .expect("rows sized to the generators");
            kernel(&m)
        };
        let vectors: Vec<PathVector> = solutions
            .basis()
            .row_vecs()
            .into_iter()
            .map(|coeffs| {
                gens.iter()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .fold(PathVector::zero(), |acc, (g, c)| acc.add(&g.scale(&c)))
            })
            .collect();
        let basis = span_basis(&vectors);
        if !basis.is_empty() {
            blocks.insert(block, basis);
        }
    }
    KoszulSpace { degree: l, blocks }
}

/// `K_l` as a per-block basis.
pub fn koszul_blocks(p: &QuadraticPresentation, l: usize) -> KoszulSpace {
    koszul_sequence(p, l).pop().expect("sequence is nonempty")
}

/// `K_l` as a subspace of the length-`l` path space (basis in
/// [`enumerate_paths`](crate::quiver::enumerate_paths) order).
pub fn koszul_space(p: &QuadraticPresentation, l: usize) -> Subspace {
    let k = koszul_blocks(p, l);
    PathBasis::of_length(p.quiver(), l).subspace(&k.basis())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulRow {
    pub l: usize,
    pub dim: usize,
    pub blocks: Vec<BlockDim>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulTable {
    pub rows: Vec<KoszulRow>,
    /// First degree `l` with `K_l != 0` after some earlier `K_j = 0`.
    pub vanishing_violation: Option<usize>,
}

impl KoszulTable {
    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.dim).collect()
    }
}

/// Dimension table of `K_0, ..., K_{l_max}`, with monotone vanishing checked.
pub fn koszul_dims(p: &QuadraticPresentation, l_max: usize) -> KoszulTable {
    let rows: Vec<KoszulRow> = koszul_sequence(p, l_max)
        .iter()
        .map(|k| KoszulRow { l: k.degree(), dim: k.dim(), blocks: k.block_dims() })
        .collect();
    let mut seen_zero = false;
    let mut vanishing_violation = None;
    for r in &rows {
        if r.dim == 0 {
            seen_zero = true;
        } else if seen_zero && vanishing_violation.is_none() {
            vanishing_violation = Some(r.l);
        }
    }
    KoszulTable { rows, vanishing_violation }
}

/// Why `K_n` is not a single cyclic generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopFormReport {
    pub degree: usize,
    pub blocks: Vec<BlockDim>,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub enum TopForm {
    Generator(Superpotential),
    Report(TopFormReport),
}

impl TopForm {
    pub fn generator(&self) -> Option<&Superpotential> {
        match self {
            TopForm::Generator(w) => Some(w),
            TopForm::Report(_) => None,
        }
    }
}

/// The superpotential generating `K_n`, when `K_n` has a one-dimensional
/// closed block at every vertex and nothing else.
///
/// The per-vertex generators are only defined up to scalars; the relative
/// scalars are fixed by requiring invariance under the signed cyclic shift,
/// and the result is scaled so its lexicographically first path has
/// coefficient +1.
pub fn top_form(p: &QuadraticPresentation, n: usize) -> TopForm {
    let q = p.quiver();
    let k = koszul_blocks(p, n);
    let report = |reason: &str| {
        TopForm::Report(TopFormReport { degree: n, blocks: k.block_dims(), reason: reason.to_string() })
    };
    if k.blocks.keys().any(|&(s, t)| s != t) {
        return report("K_n has components between distinct vertices");
    }
    if k.blocks.values().any(|b| b.len() != 1) {
        return report("K_n has a closed component of dimension other than 1");
    }
    if k.blocks.len() != q.vertex_count() {
        return report("K_n vanishes at some vertex");
    }
    let gens: Vec<&PathVector> = k.blocks.values().map(|b| &b[0]).collect();
    // Solve (S - 1)(Σ c_v g_v) = 0 for the scalars c_v.
    let mut columns = Vec::with_capacity(gens.len());
    for g in &gens {
        let shifted = match signed_cyclic_shift(q, g) {
            Ok(s) => s,
            Err(_) => return report("K_n generator is not a closed homogeneous vector"),
        };
        columns.push(shifted.sub(g));
    }
    let support: Vec<Path> = {
        let mut s: Vec<Path> = columns.iter().flat_map(|c| c.paths().cloned()).collect();
        s.sort();
        s.dedup();
        s
    };
    let coefficients: Vec<Vec<Rational>> = if support.is_empty() {
        vec![vec![Rational::one(); gens.len()]]
    } else {
        let rows: Vec<Vec<Rational>> =
            support.iter().map(|path| columns.iter().map(|c| c.coefficient(path)).collect()).collect();
        let m = RationalMatrix::from_rows(gens.len(), rows).expect("rows sized to the generators");
        let sol = kernel(&m);
        if sol.dim() == 0 {
            return report("no combination of the K_n generators is fixed by the signed cyclic shift");
        }
        sol.basis().row_vecs()
    };
    // Sum of kernel basis vectors; one vector when the quiver is connected.
    let mut form = PathVector::zero();
    for coeffs in coefficients {
        for (g, c) in gens.iter().zip(coeffs) {
            form = form.add(&g.scale(&c));
        }
    }
    match Superpotential::new(q.clone(), form.normalized()) {
        Ok(w) => TopForm::Generator(w),
        Err(_) => report("candidate generator failed the superpotential check"),
    }
}
