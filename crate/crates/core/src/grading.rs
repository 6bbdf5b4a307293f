//! Arrow gradings: validation, degree-0 parts, finiteness and exhaustive search.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{NormalForms, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::quiver::{find_cycles, power, ArrowId, Path, PathVector, Quiver};
use crate::superpotential::Superpotential;

/// Nonnegative integer degree per arrow, indexed by arrow id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightGrading {
    degrees: Vec<u32>,
}

impl WeightGrading {
    pub fn new(degrees: Vec<u32>) -> Self {
        Self { degrees }
    }

    pub fn zero(arrows: usize) -> Self {
        Self { degrees: vec![0; arrows] }
    }

    /// Degree 1 on exactly the listed arrows.
    pub fn indicator(arrows: usize, ones: &[ArrowId]) -> Self {
        let mut degrees = vec![0; arrows];
        for &a in ones {
            degrees[a] = 1;
        }
        Self { degrees }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree(&self, a: ArrowId) -> u32 {
        self.degrees[a]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn path_degree(&self, p: &Path) -> u32 {
        p.arrows().iter().map(|&a| self.degrees[a]).sum()
    }

    pub fn arrows_of_degree(&self, d: u32) -> Vec<ArrowId> {
        (0..self.degrees.len()).filter(|&a| self.degrees[a] == d).collect()
    }

    fn check_len(&self, q: &Quiver) -> Result<()> {
        if self.degrees.len() != q.arrow_count() {
            return Err(Error::DimensionMismatch { left: self.degrees.len(), right: q.arrow_count() });
        }
        Ok(())
    }
}

/// Outcome of the bounded finite-dimensionality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Finiteness {
    /// Graded dimensions vanish from some length on; `dim` is the total.
    Finite { dim: usize },
    /// Every power of `witness` up to length `checked_to` is nonzero.
    Infinite { witness: Path, checked_to: usize },
    /// Neither certificate found within `bound`.
    Inconclusive { bound: usize },
}

impl Finiteness {
    pub fn is_finite(&self) -> bool {
        matches!(self, Finiteness::Finite { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationViolation {
    /// Index into the canonical relation basis.
    pub relation: usize,
    pub term_degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingVerdict {
    pub relations_homogeneous: bool,
    pub first_violation: Option<RelationViolation>,
    /// Term degree ↦ number of superpotential terms of that degree.
    pub superpotential_degrees: BTreeMap<u32, usize>,
    pub gorenstein_parameter: Option<u32>,
    pub degree0_finiteness: Option<Finiteness>,
}

/// Checks relation homogeneity on the canonical relation basis and reads off
/// superpotential term degrees. Finiteness is left unset.
pub fn validate_grading(p: &QuadraticPresentation, w: &Superpotential, g: &WeightGrading) -> Result<GradingVerdict> {
    g.check_len(p.quiver())?;
    let first_violation = p.canonical_relations().iter().enumerate().find_map(|(i, r)| {
        let term_degrees: Vec<u32> = r.paths().map(|t| g.path_degree(t)).collect();
        term_degrees.windows(2).any(|d| d[0] != d[1]).then_some(RelationViolation { relation: i, term_degrees })
    });
    let mut superpotential_degrees = BTreeMap::new();
    for t in w.form().paths() {
        *superpotential_degrees.entry(g.path_degree(t)).or_insert(0) += 1;
    }
    let relations_homogeneous = first_violation.is_none();
    let gorenstein_parameter = if relations_homogeneous && superpotential_degrees.len() == 1 {
        superpotential_degrees.keys().next().copied()
    } else {
        None
    };
    Ok(GradingVerdict {
        relations_homogeneous,
        first_violation,
        superpotential_degrees,
        gorenstein_parameter,
        degree0_finiteness: None,
    })
}

/// [`validate_grading`] plus the finiteness verdict of the degree-0 part
/// (when relations are homogeneous). Witness paths use the ids of `p`.
pub fn validate_grading_with_finiteness(
    p: &QuadraticPresentation,
    w: &Superpotential,
    g: &WeightGrading,
    l_max: usize,
) -> Result<GradingVerdict> {
    let mut v = validate_grading(p, w, g)?;
    if v.relations_homogeneous {
        v.degree0_finiteness = Some(degree_zero_finiteness(p, g, l_max)?);
    }
    Ok(v)
}

pub fn gorenstein_parameter(p: &QuadraticPresentation, w: &Superpotential, g: &WeightGrading) -> Option<u32> {
    validate_grading(p, w, g).ok()?.gorenstein_parameter
}

/// Degree-0 part: all vertices, the degree-0 arrows (renumbered in order,
/// labels kept) and the degree-0 relations.
pub fn degree_zero_part(p: &QuadraticPresentation, g: &WeightGrading) -> Result<QuadraticPresentation> {
    degree_zero_part_with_map(p, g).map(|(p0, _)| p0)
}

/// [`degree_zero_part`] together with the original id of each kept arrow.
pub fn degree_zero_part_with_map(
    p: &QuadraticPresentation,
    g: &WeightGrading,
) -> Result<(QuadraticPresentation, Vec<ArrowId>)> {
    let q = p.quiver();
    g.check_len(q)?;
    let kept = g.arrows_of_degree(0);
    let mut new_id = vec![None; q.arrow_count()];
    for (i, &a) in kept.iter().enumerate() {
        new_id[a] = Some(i);
    }
    let q0 = Quiver::new(
        q.vertices().iter().map(|v| v.label.clone()).collect(),
        kept.iter().map(|&a| {
            let arrow = q.arrow(a);
            (arrow.source, arrow.target, arrow.label.clone())
        })
        .collect(),
    )?;
    let mut relations = Vec::new();
    for r in p.canonical_relations() {
        let degrees: BTreeSet<u32> = r.paths().map(|t| g.path_degree(t)).collect();
        if degrees.len() > 1 {
            return Err(Error::NotHomogeneous);
        }
        if degrees.contains(&0) {
            relations.push(r.map_paths(|t| {
                t.map_arrows(t.source(), t.target(), |a| new_id[a].expect("degree-0 term uses degree-0 arrows"))
            }));
        }
    }
    Ok((QuadraticPresentation::new(q0, relations)?, kept))
}

/// Bounded test for `dim p0 < ∞`.
///
/// `Finite` when the graded dimension reaches 0 at some length `<= l_max`.
/// Otherwise `Infinite` when an elementary cycle `c` has every power with
/// `m·|c| <= l_max` nonzero in the quotient, else `Inconclusive`.
pub fn finiteness_check(p0: &QuadraticPresentation, l_max: usize) -> Finiteness {
    let nf = NormalForms::new(p0, l_max);
    let mut total = 0;
    for d in 0..=l_max {
        let dim = nf.dim(d);
        if dim == 0 {
            return Finiteness::Finite { dim: total };
        }
        total += dim;
    }
    let q = p0.quiver();
    let all: BTreeSet<ArrowId> = (0..q.arrow_count()).collect();
    let mut cycles = find_cycles(q, &all);
    cycles.sort();
    for c in cycles {
        if c.len() > l_max {
            break;
        }
        let survives = (1..=l_max / c.len()).all(|m| {
            !nf.is_zero(&PathVector::from_path(power(&c, m))).expect("powers are homogeneous")
        });
        if survives {
            return Finiteness::Infinite { witness: c, checked_to: l_max };
        }
    }
    Finiteness::Inconclusive { bound: l_max }
}

fn degree_zero_finiteness(p: &QuadraticPresentation, g: &WeightGrading, l_max: usize) -> Result<Finiteness> {
    let (p0, kept) = degree_zero_part_with_map(p, g)?;
    Ok(match finiteness_check(&p0, l_max) {
        Finiteness::Infinite { witness, checked_to } => Finiteness::Infinite {
            witness: witness.map_arrows(witness.source(), witness.target(), |a| kept[a]),
            checked_to,
        },
        other => other,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub l_max: usize,
    /// Largest arrow count accepted.
    pub limit: usize,
    /// Enumerate all `2^m` assignments instead of the pruned search.
    pub brute: bool,
    /// Worker cap; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { l_max: 12, limit: 24, brute: false, threads: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidGrading {
    pub grading: WeightGrading,
    pub verdict: GradingVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub arrows: usize,
    pub assignments: u64,
    pub brute: bool,
    pub l_max: usize,
    pub valid: Vec<ValidGrading>,
    pub finite_count: usize,
    pub summary: String,
}

impl SearchReport {
    pub fn valid_count(&self) -> usize {
        self.valid.len()
    }
}

/// Constraint data for {0,1} assignments.
struct Constraints {
    /// Pairs of arrow lists whose degrees must agree, keyed by the largest arrow id involved.
    equal_by_last: Vec<Vec<([ArrowId; 2], [ArrowId; 2])>>,
    /// Arrow multisets of superpotential terms; each must total exactly 1.
    terms: Vec<Vec<ArrowId>>,
    /// Terms touching each arrow.
    terms_by_arrow: Vec<Vec<usize>>,
    /// Terms whose largest arrow is the key.
    terms_by_last: Vec<Vec<usize>>,
}

impl Constraints {
    fn new(p: &QuadraticPresentation, w: &Superpotential) -> Self {
        let m = p.quiver().arrow_count();
        let mut equal_by_last = vec![Vec::new(); m];
        for r in p.canonical_relations() {
            let paths: Vec<[ArrowId; 2]> = r.paths().map(|t| [t.arrows()[0], t.arrows()[1]]).collect();
            for pair in paths.windows(2) {
                let last = pair[0].iter().chain(&pair[1]).copied().max().expect("nonempty");
                equal_by_last[last].push((pair[0], pair[1]));
            }
        }
        let terms: Vec<Vec<ArrowId>> = w.form().paths().map(|t| t.arrows().to_vec()).collect();
        let mut terms_by_arrow = vec![Vec::new(); m];
        let mut terms_by_last = vec![Vec::new(); m];
        for (i, t) in terms.iter().enumerate() {
            let distinct: BTreeSet<ArrowId> = t.iter().copied().collect();
            for &a in &distinct {
                terms_by_arrow[a].push(i);
            }
            if let Some(&last) = distinct.iter().next_back() {
                terms_by_last[last].push(i);
            }
        }
        Self { equal_by_last, terms, terms_by_arrow, terms_by_last }
    }

    fn satisfied(&self, bits: &[u8]) -> bool {
        let deg = |ps: &[ArrowId; 2]| bits[ps[0]] + bits[ps[1]];
        self.equal_by_last.iter().flatten().all(|(x, y)| deg(x) == deg(y))
            && self.terms.iter().all(|t| t.iter().map(|&a| bits[a] as usize).sum::<usize>() == 1)
    }

    /// Checks everything decided once arrows `0..=k` are assigned.
    fn consistent_after(&self, bits: &[u8], k: ArrowId) -> bool {
        let deg = |ps: &[ArrowId; 2]| bits[ps[0]] + bits[ps[1]];
        if !self.equal_by_last[k].iter().all(|(x, y)| deg(x) == deg(y)) {
            return false;
        }
        for &t in &self.terms_by_arrow[k] {
            let partial: usize = self.terms[t].iter().filter(|&&a| a <= k).map(|&a| bits[a] as usize).sum();
            if partial > 1 {
                return false;
            }
        }
        self.terms_by_last[k].iter().all(|&t| self.terms[t].iter().map(|&a| bits[a] as usize).sum::<usize>() == 1)
    }
}

fn bits_of(mask: u64, m: usize) -> Vec<u8> {
    (0..m).map(|a| ((mask >> a) & 1) as u8).collect()
}

fn search_brute(c: &Constraints, m: usize) -> Vec<Vec<u8>> {
    (0..1u64 << m)
        .into_par_iter()
        .map(|mask| bits_of(mask, m))
        .filter(|bits| c.satisfied(bits))
        .collect()
}

fn search_pruned(c: &Constraints, m: usize) -> Vec<Vec<u8>> {
    fn dfs(c: &Constraints, m: usize, bits: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let k = bits.len();
        if k == m {
            out.push(bits.clone());
            return;
        }
        for b in [0u8, 1] {
            bits.push(b);
            if c.consistent_after(bits, k) {
                dfs(c, m, bits, out);
            }
            bits.pop();
        }
    }
    // Independent subtrees for the first few arrows.
    let split = m.min(6);
    (0..1u64 << split)
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let mut bits = Vec::with_capacity(m);
            let mut ok = true;
            for k in 0..split {
                bits.push(((prefix >> k) & 1) as u8);
                if !c.consistent_after(&bits, k) {
                    ok = false;
                    break;
                }
            }
            let mut out = Vec::new();
            if ok {
                dfs(c, m, &mut bits, &mut out);
            }
            out
        })
        .collect()
}

/// Enumerates `{0,1}`-gradings with homogeneous relations and every
/// superpotential term of degree exactly 1, attaching finiteness verdicts.
/// Output is sorted by degree vector.
pub fn grading_search(p: &QuadraticPresentation, w: &Superpotential, opts: &SearchOptions) -> Result<SearchReport> {
    let m = p.quiver().arrow_count();
    if m > opts.limit || m >= 64 {
        return Err(Error::SearchLimit { arrows: m, limit: opts.limit });
    }
    let run = || -> Result<SearchReport> {
        let c = Constraints::new(p, w);
        let mut found = if opts.brute { search_brute(&c, m) } else { search_pruned(&c, m) };
        found.sort();
        let valid: Vec<ValidGrading> = found
            .into_par_iter()
            .map(|bits| {
                let grading = WeightGrading::new(bits.into_iter().map(u32::from).collect());
                let verdict = validate_grading_with_finiteness(p, w, &grading, opts.l_max)?;
                Ok(ValidGrading { grading, verdict })
            })
            .collect::<Result<_>>()?;
        let finite_count = valid
            .iter()
            .filter(|v| v.verdict.degree0_finiteness.as_ref().is_some_and(Finiteness::is_finite))
            .count();
        let summary = if finite_count == 0 {
            format!("no preprojective structure found: 0 valid gradings with finite degree-0 part ({} valid in total)", valid.len())
        } else {
            format!("preprojective structure found: {finite_count} valid gradings with finite degree-0 part ({} valid in total)", valid.len())
        };
        Ok(SearchReport { arrows: m, assignments: 1u64 << m, brute: opts.brute, l_max: opts.l_max, valid, finite_count, summary })
    };
    match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}
