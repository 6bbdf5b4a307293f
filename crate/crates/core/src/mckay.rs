//! McKay quivers of cyclic groups `1/r(a_1, ..., a_n)`.
//!
//! Vertices are `Z_r`. Arrow `x_i^l: l -> l + a_i` has id `(i - 1) * r + l`
//! and label `x{i}^{l}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::QuadraticPresentation;
use crate::error::{Error, Result};
use crate::grading::WeightGrading;
use crate::linalg::rat;
use crate::quiver::{ArrowId, Path, PathVector, Quiver};
use crate::superpotential::Superpotential;

/// The cyclic group generated by `diag(ζ^{a_1}, ..., ζ^{a_n})`, `ζ` a primitive `r`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicGroupSpec {
    r: u32,
    weights: Vec<u32>,
}

impl CyclicGroupSpec {
    pub fn new(r: u32, weights: Vec<u32>) -> Result<Self> {
        if r == 0 {
            return Err(Error::Parse("group order must be at least 1".into()));
        }
        if weights.is_empty() {
            return Err(Error::Parse("at least one weight is required".into()));
        }
        if let Some(a) = weights.iter().find(|&&a| a >= r) {
            return Err(Error::Parse(format!("weight {a} is not below the order {r}")));
        }
        Ok(Self { r, weights })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// `Σ a_i ≡ 0 (mod r)`.
    pub fn is_special_linear(&self) -> bool {
        self.weights.iter().map(|&a| a as u64).sum::<u64>() % self.r as u64 == 0
    }

    pub fn arrow_id(&self, i: usize, l: u32) -> ArrowId {
        i * self.r as usize + l as usize
    }

    /// Weights of the generator `g^k`, reduced into `[0, r)`.
    pub fn power(&self, k: u32) -> CyclicGroupSpec {
        let r = self.r as u64;
        CyclicGroupSpec {
            r: self.r,
            weights: self.weights.iter().map(|&a| (a as u64 * k as u64 % r) as u32).collect(),
        }
    }
}

impl fmt::Display for CyclicGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        write!(f, "{}:{}", self.r, w.join(","))
    }
}

impl FromStr for CyclicGroupSpec {
    type Err = Error;

    /// Parses `"r:a1,a2,...,an"`.
    fn from_str(s: &str) -> Result<Self> {
        let (r, w) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected r:a1,...,an, got {s:?}")))?;
        let r: u32 = r.trim().parse().map_err(|_| Error::Parse(format!("bad group order {r:?}")))?;
        let weights = w
            .split(',')
            .map(|a| a.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad weight {a:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, weights)
    }
}

/// McKay quiver with the commutator relations
/// `x_{i'}^{l+a_i} x_i^l - x_i^{l+a_{i'}} x_{i'}^l` for every `l` and `i < i'`.
pub fn mckay_presentation(s: &CyclicGroupSpec) -> QuadraticPresentation {
    let r = s.r;
    let q = mckay_quiver(s);
    let mut relations = Vec::new();
    for l in 0..r {
        for i in 0..s.n() {
            for j in i + 1..s.n() {
                let (ai, aj) = (s.weights[i], s.weights[j]);
                let first = q
                    .path(&[s.arrow_id(j, (l + ai) % r), s.arrow_id(i, l)])
                    .expect("commutator terms compose");
                let second = q
                    .path(&[s.arrow_id(i, (l + aj) % r), s.arrow_id(j, l)])
                    .expect("commutator terms compose");
                relations.push(PathVector::from_terms([(first, rat(1)), (second, rat(-1))]));
            }
        }
    }
    QuadraticPresentation::new(q, relations).expect("commutators are independent")
}

pub fn mckay_quiver(s: &CyclicGroupSpec) -> Quiver {
    let r = s.r;
    let mut arrows = Vec::with_capacity(s.n() * r as usize);
    for (i, &a) in s.weights.iter().enumerate() {
        for l in 0..r {
            arrows.push((l as usize, ((l + a) % r) as usize, format!("x{}^{}", i + 1, l)));
        }
    }
    Quiver::new((0..r).map(|l| l.to_string()).collect(), arrows).expect("valid quiver")
}

/// Permutations of `0..n` with their signs.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((cur.clone(), odd));
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            go(rest, cur, odd ^ (k % 2 == 1), out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::with_capacity(n), false, &mut out);
    out
}

/// Route a word of arrow types (written order) starting at vertex `l`.
fn route(s: &CyclicGroupSpec, q: &Quiver, types: &[usize], l: u32) -> Path {
    let mut at = l;
    let mut acting = Vec::with_capacity(types.len());
    for &t in types.iter().rev() {
        acting.push(s.arrow_id(t, at));
        at = (at + s.weights[t]) % s.r;
    }
    acting.reverse();
    q.path(&acting).expect("routed word composes")
}

/// `Σ_l Σ_σ (-1)^σ σ(x_n ⊗ ... ⊗ x_1)`, each word routed from vertex `l`.
pub fn skew_superpotential(s: &CyclicGroupSpec) -> Result<Superpotential> {
    if !s.is_special_linear() {
        return Err(Error::Precondition(format!("{s} is not in SL(n): weights do not sum to 0 mod r")));
    }
    let q = mckay_quiver(s);
    let n = s.n();
    let mut form = PathVector::zero();
    // Written order x_n ... x_1 is the identity word.
    for (perm, odd) in signed_permutations(n) {
        let word: Vec<usize> = perm.iter().map(|&k| n - 1 - k).collect();
        for l in 0..s.r {
            form.add_term(route(s, &q, &word, l), if odd { rat(-1) } else { rat(1) });
        }
    }
    Superpotential::new(q, form)
}

/// Degree 1 exactly on the arrows `x_i^l` with `l + a_i >= r`.
pub fn air_grading(s: &CyclicGroupSpec) -> WeightGrading {
    let mut degrees = Vec::with_capacity(s.n() * s.r as usize);
    for &a in &s.weights {
        for l in 0..s.r {
            degrees.push(u32::from(l + a >= s.r));
        }
    }
    WeightGrading::new(degrees)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub k: u32,
    pub weights: Vec<u32>,
    /// All weights coprime to `r` and in `(0, r)`, and they sum to `r`.
    pub air_conditions: bool,
    /// Some weight is 0.
    pub condition_a: bool,
    /// The weights sum to more than `r`.
    pub condition_b: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupVerdict {
    PreprojectiveGradingExists,
    Embeds,
    Unknown,
    NotSpecialLinear,
}

impl fmt::Display for GroupVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupVerdict::PreprojectiveGradingExists => "preprojective-grading-exists",
            GroupVerdict::Embeds => "embeds",
            GroupVerdict::Unknown => "unknown",
            GroupVerdict::NotSpecialLinear => "not-special-linear",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub spec: String,
    pub r: u32,
    pub n: usize,
    pub special_linear: bool,
    pub generators: Vec<GeneratorRecord>,
    /// Some generator satisfies the AIR conditions.
    pub air: bool,
    /// Some generator has a zero weight.
    pub condition_a: bool,
    /// Every generator has weight sum above `r`.
    pub condition_b: bool,
    /// Whether the group embeds block-diagonally into `SL(n_1) × SL(n_2)`;
    /// `None` when undecided.
    pub embeds: Option<bool>,
    pub verdict: GroupVerdict,
}

/// Classifies `s` by running over the generators `g^k`, `gcd(k, r) = 1`.
pub fn classify_group(s: &CyclicGroupSpec) -> Classification {
    let r = s.r;
    let generators: Vec<GeneratorRecord> = (1..=r)
        .filter(|&k| gcd(k, r) == 1)
        .map(|k| {
            let g = s.power(k);
            let sum: u64 = g.weights.iter().map(|&a| a as u64).sum();
            GeneratorRecord {
                k,
                air_conditions: g.weights.iter().all(|&a| a > 0 && gcd(a, r) == 1) && sum == r as u64,
                condition_a: g.weights.contains(&0),
                condition_b: sum > r as u64,
                weights: g.weights,
            }
        })
        .collect();
    let special_linear = s.is_special_linear();
    let air = generators.iter().any(|g| g.air_conditions);
    let condition_a = generators.iter().any(|g| g.condition_a);
    let condition_b = generators.iter().all(|g| g.condition_b);
    let n = s.n();
    let embeds = if !special_linear || n < 2 {
        None
    } else if condition_a || (condition_b && n <= 4) {
        Some(true)
    } else if !condition_b {
        Some(false)
    } else {
        None
    };
    let verdict = if !special_linear {
        GroupVerdict::NotSpecialLinear
    } else if air {
        GroupVerdict::PreprojectiveGradingExists
    } else if embeds == Some(true) {
        GroupVerdict::Embeds
    } else {
        GroupVerdict::Unknown
    };
    Classification {
        spec: s.to_string(),
        r,
        n,
        special_linear,
        generators,
        air,
        condition_a,
        condition_b,
        embeds,
        verdict,
    }
}

/// Special linear specs with `r <= r_max` and `n` weights, weights
/// nondecreasing, ordered by `r` then weights.
pub fn specs_in_range(r_max: u32, n: usize) -> Vec<CyclicGroupSpec> {
    fn go(r: u32, n: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<CyclicGroupSpec>) {
        if cur.len() == n {
            let spec = CyclicGroupSpec { r, weights: cur.clone() };
            if spec.is_special_linear() {
                out.push(spec);
            }
            return;
        }
        for a in min..r {
            cur.push(a);
            go(r, n, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for r in 1..=r_max {
        go(r, n, 0, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::koszul_dims;
    use crate::superpotential::derivation_quotient;

    fn spec(s: &str) -> CyclicGroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(spec("5:1,1,3").to_string(), "5:1,1,3");
        assert!("5:1,6".parse::<CyclicGroupSpec>().is_err());
        assert!("5".parse::<CyclicGroupSpec>().is_err());
        assert!("x:1".parse::<CyclicGroupSpec>().is_err());
    }

    #[test]
    fn counts() {
        let p = mckay_presentation(&spec("5:1,1,3"));
        assert_eq!(p.quiver().vertex_count(), 5);
        assert_eq!(p.quiver().arrow_count(), 15);
        assert_eq!(p.relation_count(), 15);
        let k = mckay_presentation(&spec("1:0"));
        assert_eq!((k.quiver().vertex_count(), k.quiver().arrow_count(), k.relation_count()), (1, 1, 0));
    }

    #[test]
    fn air_grading_sets() {
        let s = spec("5:1,1,3");
        let g = air_grading(&s);
        let q = mckay_quiver(&s);
        let labels: Vec<&str> = g.arrows_of_degree(1).into_iter().map(|a| q.arrow(a).label.as_str()).collect();
        assert_eq!(labels, vec!["x1^4", "x2^4", "x3^2", "x3^3", "x3^4"]);
        let s = spec("3:1,2");
        let q = mckay_quiver(&s);
        let labels: Vec<&str> =
            air_grading(&s).arrows_of_degree(1).into_iter().map(|a| q.arrow(a).label.as_str()).collect();
        assert_eq!(labels, vec!["x1^2", "x2^1", "x2^2"]);
    }

    #[test]
    fn koszul_dims_of_one_third_one_two() {
        let t = koszul_dims(&mckay_presentation(&spec("3:1,2")), 3);
        assert_eq!(t.dims(), vec![3, 6, 3, 0]);
        assert!(t.rows[2].blocks.iter().all(|b| b.source == b.target && b.dim == 1));
    }

    #[test]
    fn skew_superpotential_term_counts() {
        assert_eq!(skew_superpotential(&spec("3:1,2,1,2")).unwrap().term_count(), 72);
        assert_eq!(skew_superpotential(&spec("2:1,1")).unwrap().term_count(), 4);
        assert!(skew_superpotential(&spec("5:1,1")).is_err());
    }

    #[test]
    fn derivation_quotient_recovers_relations() {
        let s = spec("3:1,1,1");
        let dq = derivation_quotient(&skew_superpotential(&s).unwrap()).unwrap();
        assert_eq!(dq.canonical_relations(), mckay_presentation(&s).canonical_relations());
    }

    #[test]
    fn classification() {
        let c = classify_group(&spec("5:1,1,3"));
        assert!(c.air);
        assert_eq!(c.verdict, GroupVerdict::PreprojectiveGradingExists);
        let c = classify_group(&spec("3:1,2,1,2"));
        assert!(!c.air && c.condition_b);
        assert_eq!(c.embeds, Some(true));
        assert_eq!(c.verdict, GroupVerdict::Embeds);
        let c = classify_group(&spec("4:0,1,3"));
        assert!(c.condition_a);
        assert_eq!(c.verdict, GroupVerdict::Embeds);
        assert_eq!(classify_group(&spec("5:1,1")).verdict, GroupVerdict::NotSpecialLinear);
    }

    #[test]
    fn range_enumeration() {
        let specs = specs_in_range(3, 2);
        let names: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, vec!["1:0,0", "2:0,0", "2:1,1", "3:0,0", "3:1,2"]);
    }
}
