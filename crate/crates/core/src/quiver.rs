//! Quivers, paths and formal rational combinations of paths.
//!
//! Composition is right-to-left: a path is stored as the arrow sequence
//! `[a_l, ..., a_1]` in written order, so `a_1` (the last entry) acts first.
//! The path `db` in a quiver `1 -b-> 2 -d-> 3` is `[d, b]` and runs `1 -> 3`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rref_with_pivots, Rational, RationalMatrix};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: ArrowId,
    pub source: VertexId,
    pub target: VertexId,
    pub label: String,
}

/// A finite directed multigraph. Vertex and arrow ids are their positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    out_arrows: Vec<Vec<ArrowId>>,
    in_arrows: Vec<Vec<ArrowId>>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(source, target, label)` arrows.
    pub fn new<S: Into<String>, T: Into<String>>(
        vertex_labels: Vec<S>,
        arrows: Vec<(VertexId, VertexId, T)>,
    ) -> Result<Self> {
        let vertices: Vec<Vertex> = vertex_labels
            .into_iter()
            .enumerate()
            .map(|(id, l)| Vertex { id, label: l.into() })
            .collect();
        if vertices.is_empty() {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        let n = vertices.len();
        let arrows: Vec<Arrow> = arrows
            .into_iter()
            .enumerate()
            .map(|(id, (source, target, l))| Arrow { id, source, target, label: l.into() })
            .collect();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.label.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex label {}", v.label)));
            }
        }
        seen.clear();
        for a in &arrows {
            if a.source >= n || a.target >= n {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} references a missing vertex",
                    a.label
                )));
            }
            if !seen.insert(a.label.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow label {}", a.label)));
            }
        }
        let mut out_arrows = vec![Vec::new(); n];
        let mut in_arrows = vec![Vec::new(); n];
        for a in &arrows {
            out_arrows[a.source].push(a.id);
            in_arrows[a.target].push(a.id);
        }
        Ok(Self { vertices, arrows, out_arrows, in_arrows })
    }

    /// `n` vertices labelled `0..n` and the given unlabelled arrows (named `a0, a1, ...`).
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::new(
            (0..n).map(|i| i.to_string()).collect(),
            edges.iter().enumerate().map(|(k, &(s, t))| (s, t, format!("a{k}"))).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id]
    }

    pub fn out_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v]
    }

    pub fn in_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.in_arrows[v]
    }

    pub fn arrow_by_label(&self, label: &str) -> Option<ArrowId> {
        self.arrows.iter().find(|a| a.label == label).map(|a| a.id)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().find(|v| v.label == label).map(|v| v.id)
    }

    /// Single-arrow path.
    pub fn arrow_path(&self, id: ArrowId) -> Path {
        let a = &self.arrows[id];
        Path { source: a.source, target: a.target, arrows: vec![id] }
    }

    /// Path from arrow ids in written order (`[a_l, ..., a_1]`), or `None`
    /// if consecutive arrows do not compose.
    pub fn path(&self, written: &[ArrowId]) -> Option<Path> {
        let (&first_acting, _) = written.split_last()?;
        let mut at = self.arrows.get(first_acting)?.source;
        for &a in written.iter().rev() {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some(Path { source: self.arrows[first_acting].source, target: at, arrows: written.to_vec() })
    }

    /// Path from arrow labels in written order, e.g. `["d", "b"]` for `db`.
    pub fn path_by_labels(&self, labels: &[&str]) -> Option<Path> {
        let ids: Option<Vec<_>> = labels.iter().map(|l| self.arrow_by_label(l)).collect();
        self.path(&ids?)
    }

    /// Readable form of a path in written order, e.g. `d*b`.
    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.source].label);
        }
        p.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*")
    }

    pub fn format_vector(&self, v: &PathVector) -> String {
        if v.is_zero() {
            return "0".into();
        }
        v.terms()
            .map(|(p, c)| format!("({c}){}", self.format_path(p)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A path in a quiver: either a trivial path `e_v` or a composable arrow sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Self { source: v, target: v, arrows: Vec::new() }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn is_closed(&self) -> bool {
        self.source == self.target
    }

    /// Arrow ids in written order; the last one acts first.
    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn block(&self) -> (VertexId, VertexId) {
        (self.source, self.target)
    }

    /// `self ∘ other`: `other` acts first. `None` when the endpoints do not match.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if other.target != self.source {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.len() + other.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: other.source, target: self.target, arrows })
    }

    /// Splits the written sequence at `k`: the left part (last acting, length `k`)
    /// and the right part (first acting).
    pub fn split_at(&self, k: usize, quiver: &Quiver) -> (Path, Path) {
        assert!(k <= self.len());
        let mid = if k == 0 {
            self.target
        } else if k == self.len() {
            self.source
        } else {
            quiver.arrow(self.arrows[k - 1]).source
        };
        let left = Path { source: mid, target: self.target, arrows: self.arrows[..k].to_vec() };
        let right = Path { source: self.source, target: mid, arrows: self.arrows[k..].to_vec() };
        (left, right)
    }

    /// Moves the first-acting arrow to the last-acting position (unsigned rotation).
    pub fn rotate(&self, quiver: &Quiver) -> Path {
        debug_assert!(self.is_closed());
        let mut arrows = self.arrows.clone();
        if let Some(last) = arrows.pop() {
            arrows.insert(0, last);
            let first = quiver.arrow(arrows[arrows.len() - 1]).source;
            Path { source: first, target: first, arrows }
        } else {
            self.clone()
        }
    }

    /// Path with arrow ids renamed.
    pub fn map_arrows(&self, source: VertexId, target: VertexId, f: impl Fn(ArrowId) -> ArrowId) -> Path {
        Path { source, target, arrows: self.arrows.iter().map(|&a| f(a)).collect() }
    }
}

impl Ord for Path {
    /// Length, then lexicographic by arrow ids in written order, then endpoints
    /// (which only matter for trivial paths).
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All paths of the given length, optionally with fixed endpoints, in
/// lexicographic order of their written arrow sequences.
pub fn enumerate_paths(
    q: &Quiver,
    length: usize,
    source: Option<VertexId>,
    target: Option<VertexId>,
) -> Vec<Path> {
    if length == 0 {
        return (0..q.vertex_count())
            .filter(|&v| source.is_none_or(|s| s == v) && target.is_none_or(|t| t == v))
            .map(Path::trivial)
            .collect();
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(length);
    // Build written order left to right: the first written arrow is the last acting one.
    fn extend(
        q: &Quiver,
        remaining: usize,
        stack: &mut Vec<ArrowId>,
        source: Option<VertexId>,
        target: Option<VertexId>,
        out: &mut Vec<Path>,
    ) {
        if remaining == 0 {
            let p = q.path(stack).expect("stack is composable by construction");
            if source.is_none_or(|s| s == p.source) {
                out.push(p);
            }
            return;
        }
        for a in q.arrows() {
            match stack.last() {
                None => {
                    if target.is_some_and(|t| t != a.target) {
                        continue;
                    }
                }
                Some(&prev) => {
                    if q.arrow(prev).source != a.target {
                        continue;
                    }
                }
            }
            stack.push(a.id);
            extend(q, remaining - 1, stack, source, target, out);
            stack.pop();
        }
    }
    extend(q, length, &mut stack, source, target, &mut out);
    out
}

/// A finite formal rational combination of paths with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug, Hash)]
pub struct PathVector {
    terms: BTreeMap<Path, Rational>,
}

impl PathVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::from_term(p, Rational::one())
    }

    pub fn from_term(p: Path, c: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(p, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Path, Rational)>) -> Self {
        let mut v = Self::zero();
        for (p, c) in terms {
            v.add_term(p, c);
        }
        v
    }

    pub fn add_term(&mut self, p: Path, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Rational)> {
        self.terms.iter()
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn coefficient(&self, p: &Path) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lexicographically first term.
    pub fn leading(&self) -> Option<(&Path, &Rational)> {
        self.terms.iter().next()
    }

    pub fn add(&self, other: &PathVector) -> PathVector {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PathVector) -> PathVector {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> PathVector {
        if c.is_zero() {
            return PathVector::zero();
        }
        PathVector { terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    /// Bilinear extension of composition (`other` acts first); non-composable
    /// products are dropped.
    pub fn concatenate(&self, other: &PathVector) -> PathVector {
        let mut out = PathVector::zero();
        for (p, a) in self.terms() {
            for (q, b) in other.terms() {
                if let Some(pq) = p.compose(q) {
                    out.add_term(pq, a * b);
                }
            }
        }
        out
    }

    /// Common `(source, target, length)` of all terms, if any.
    pub fn homogeneity(&self) -> Option<(VertexId, VertexId, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let key = (first.source, first.target, first.len());
        it.all(|p| (p.source, p.target, p.len()) == key).then_some(key)
    }

    /// Common length of all terms, if any.
    pub fn length(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let l = it.next()?.len();
        it.all(|p| p.len() == l).then_some(l)
    }

    /// Scales so that the lexicographically first path has coefficient +1.
    pub fn normalized(&self) -> PathVector {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => PathVector::zero(),
        }
    }

    /// Groups terms by `(source, target)`.
    pub fn split_blocks(&self) -> BTreeMap<(VertexId, VertexId), PathVector> {
        let mut out: BTreeMap<_, PathVector> = BTreeMap::new();
        for (p, c) in self.terms() {
            out.entry(p.block()).or_default().add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn map_paths(&self, f: impl Fn(&Path) -> Path) -> PathVector {
        PathVector::from_terms(self.terms().map(|(p, c)| (f(p), c.clone())))
    }
}

impl fmt::Display for PathVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(p, c)| {
                let word: Vec<String> = p.arrows.iter().map(|a| a.to_string()).collect();
                format!("{c}[{}]", word.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Canonical RREF basis of the span of `vectors`: pivots on lexicographically
/// smallest paths, each pivot coefficient +1, sorted by pivot.
pub fn span_basis(vectors: &[PathVector]) -> Vec<PathVector> {
    let support: BTreeSet<&Path> = vectors.iter().flat_map(|v| v.paths()).collect();
    if support.is_empty() {
        return Vec::new();
    }
    let columns: Vec<&Path> = support.into_iter().collect();
    let index: BTreeMap<&Path, usize> = columns.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| {
            let mut row = vec![Rational::zero(); columns.len()];
            for (p, c) in v.terms() {
                row[index[p]] = c.clone();
            }
            row
        })
        .collect();
    let m = RationalMatrix::from_rows(columns.len(), rows).expect("rows sized to the support");
    let (r, _) = rref_with_pivots(&m);
    (0..r.rows())
        .map(|i| {
            PathVector::from_terms(
                r.row(i).iter().enumerate().map(|(j, c)| (columns[j].clone(), c.clone())),
            )
        })
        .collect()
}

/// Coordinates of `v` in a basis produced by [`span_basis`], or `None` when
/// `v` is not in the span.
pub fn coordinates(basis: &[PathVector], v: &PathVector) -> Option<Vec<Rational>> {
    let coords: Vec<Rational> = basis
        .iter()
        .map(|b| v.coefficient(b.leading().expect("basis vectors are nonzero").0))
        .collect();
    let mut rest = v.clone();
    for (b, c) in basis.iter().zip(&coords) {
        rest = rest.sub(&b.scale(c));
    }
    rest.is_zero().then_some(coords)
}

/// All elementary (vertex-simple) oriented cycles using only `allowed` arrows.
///
/// Each cycle is reported once, based at its smallest vertex. Parallel arrows
/// give distinct cycles.
pub fn find_cycles(q: &Quiver, allowed: &BTreeSet<ArrowId>) -> Vec<Path> {
    let mut cycles = Vec::new();
    let n = q.vertex_count();
    for start in 0..n {
        let mut on_path = vec![false; n];
        let mut acting = Vec::new();
        on_path[start] = true;
        walk(q, allowed, start, start, &mut on_path, &mut acting, &mut cycles);
    }
    fn walk(
        q: &Quiver,
        allowed: &BTreeSet<ArrowId>,
        start: VertexId,
        at: VertexId,
        on_path: &mut [bool],
        acting: &mut Vec<ArrowId>,
        cycles: &mut Vec<Path>,
    ) {
        for &a in q.out_arrows(at) {
            if !allowed.contains(&a) {
                continue;
            }
            let t = q.arrow(a).target;
            if t == start {
                acting.push(a);
                let written: Vec<ArrowId> = acting.iter().rev().copied().collect();
                cycles.push(q.path(&written).expect("walk is composable"));
                acting.pop();
            } else if t > start && !on_path[t] {
                on_path[t] = true;
                acting.push(a);
                walk(q, allowed, start, t, on_path, acting, cycles);
                acting.pop();
                on_path[t] = false;
            }
        }
    }
    cycles
}

/// Repeated composition `c^m` of a closed path.
pub fn power(c: &Path, m: usize) -> Path {
    assert!(c.is_closed());
    let mut out = Path::trivial(c.source);
    for _ in 0..m {
        out = c.compose(&out).expect("closed path composes with itself");
    }
    out
}
