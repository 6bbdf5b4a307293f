//! JSON documents, DOT export and the command implementations behind the binary.
//!
//! Every document carries `schema_version: "1"` and a `kind` tag. Rationals
//! are written as `"num/den"` strings; paths as arrow ids in written order,
//! with an explicit `vertex` for trivial paths.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{koszulity_probe, KoszulVerdict, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::grading::{grading_search, GradingVerdict, SearchOptions, SearchReport, WeightGrading};
use crate::koszul::{koszul_dims, top_form, KoszulTable, TopForm};
use crate::linalg::Rational;
use crate::mckay::{air_grading, classify_group, mckay_presentation, skew_superpotential, specs_in_range};
use crate::mckay::{Classification, CyclicGroupSpec};
use crate::preprojective::{build_preprojective, preprojective_superpotential};
use crate::quiver::{ArrowId, Path, PathVector, Quiver, VertexId};
use crate::superpotential::{shuffle_product, Superpotential};
use crate::tensor::{lift_grading_sum, tensor_presentation};

pub const SCHEMA_VERSION: &str = "1";

pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: VertexId,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub id: ArrowId,
    pub source: VertexId,
    pub target: VertexId,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<VertexDoc>,
    pub arrows: Vec<ArrowDoc>,
}

impl QuiverDoc {
    pub fn new(q: &Quiver, grading: Option<&WeightGrading>) -> Self {
        Self {
            vertices: q.vertices().iter().map(|v| VertexDoc { id: v.id, label: v.label.clone() }).collect(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowDoc {
                    id: a.id,
                    source: a.source,
                    target: a.target,
                    label: a.label.clone(),
                    degree: grading.map(|g| g.degree(a.id)),
                })
                .collect(),
        }
    }

    /// The quiver, plus the grading when every arrow carries a degree.
    pub fn to_quiver(&self) -> Result<(Quiver, Option<WeightGrading>)> {
        for (i, v) in self.vertices.iter().enumerate() {
            if v.id != i {
                return Err(Error::Parse(format!("vertex ids must be 0..n in order; found {} at {i}", v.id)));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.id != i {
                return Err(Error::Parse(format!("arrow ids must be 0..m in order; found {} at {i}", a.id)));
            }
        }
        let q = Quiver::new(
            self.vertices.iter().map(|v| v.label.clone()).collect(),
            self.arrows.iter().map(|a| (a.source, a.target, a.label.clone())).collect(),
        )?;
        let degrees: Vec<Option<u32>> = self.arrows.iter().map(|a| a.degree).collect();
        let grading = if !degrees.is_empty() && degrees.iter().all(Option::is_some) {
            Some(WeightGrading::new(degrees.into_iter().flatten().collect()))
        } else if degrees.iter().any(Option::is_some) {
            return Err(Error::Parse("either every arrow or no arrow must carry a degree".into()));
        } else {
            None
        };
        Ok((q, grading))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coef: String,
    pub path: Vec<ArrowId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<VertexId>,
}

pub fn vector_to_terms(v: &PathVector) -> Vec<TermDoc> {
    v.terms()
        .map(|(p, c)| TermDoc {
            coef: format_rational(c),
            path: p.arrows().to_vec(),
            vertex: p.is_trivial().then_some(p.source()),
        })
        .collect()
}

pub fn terms_to_vector(q: &Quiver, terms: &[TermDoc]) -> Result<PathVector> {
    let mut v = PathVector::zero();
    for t in terms {
        let path = if t.path.is_empty() {
            let vertex = t.vertex.ok_or_else(|| Error::Parse("trivial path needs a vertex".into()))?;
            if vertex >= q.vertex_count() {
                return Err(Error::Parse(format!("vertex {vertex} out of range")));
            }
            Path::trivial(vertex)
        } else {
            q.path(&t.path).ok_or_else(|| Error::Parse(format!("arrows {:?} do not form a path", t.path)))?
        };
        v.add_term(path, parse_rational(&t.coef)?);
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub quiver: QuiverDoc,
    pub relations: Vec<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superpotential: Option<Vec<TermDoc>>,
}

impl PresentationDoc {
    pub fn new(p: &QuadraticPresentation, w: Option<&Superpotential>, g: Option<&WeightGrading>) -> Self {
        Self {
            quiver: QuiverDoc::new(p.quiver(), g),
            relations: p.relations().iter().map(vector_to_terms).collect(),
            superpotential: w.map(|w| vector_to_terms(w.form())),
        }
    }

    pub fn to_parts(&self) -> Result<(QuadraticPresentation, Option<Superpotential>, Option<WeightGrading>)> {
        let (q, g) = self.quiver.to_quiver()?;
        let relations = self.relations.iter().map(|r| terms_to_vector(&q, r)).collect::<Result<Vec<_>>>()?;
        let w = match &self.superpotential {
            Some(terms) => Some(Superpotential::new(q.clone(), terms_to_vector(&q, terms)?)?),
            None => None,
        };
        Ok((QuadraticPresentation::new(q, relations)?, w, g))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewArrowDoc {
    pub arrow: ArrowId,
    pub label: String,
    /// The `K_n` basis vector the arrow was added for.
    pub generator: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationEntry {
    pub input: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub record: Option<Classification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Quiver {
        quiver: QuiverDoc,
    },
    Presentation {
        presentation: PresentationDoc,
    },
    Superpotential {
        quiver: QuiverDoc,
        superpotential: Vec<TermDoc>,
    },
    Grading {
        grading: WeightGrading,
    },
    Verdict {
        verdict: GradingVerdict,
    },
    Preprojective {
        n: usize,
        presentation: PresentationDoc,
        new_arrows: Vec<NewArrowDoc>,
    },
    KoszulDims {
        table: KoszulTable,
        probe: KoszulVerdict,
    },
    Classification {
        records: Vec<ClassificationEntry>,
    },
    Report {
        report: SearchReport,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: String,
    #[serde(flatten)]
    pub payload: Payload,
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Self { schema_version: SCHEMA_VERSION.to_string(), payload }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema_version {:?}", doc.schema_version)));
        }
        Ok(doc)
    }

    /// Presentation, superpotential and grading carried by a presentation-like document.
    pub fn presentation_parts(&self) -> Result<(QuadraticPresentation, Option<Superpotential>, Option<WeightGrading>)> {
        match &self.payload {
            Payload::Presentation { presentation } | Payload::Preprojective { presentation, .. } => {
                presentation.to_parts()
            }
            Payload::Quiver { quiver } => {
                let (q, g) = quiver.to_quiver()?;
                Ok((QuadraticPresentation::free(q), None, g))
            }
            _ => Err(Error::Parse("document does not contain a presentation".into())),
        }
    }
}

pub fn presentation_document(p: &QuadraticPresentation, w: Option<&Superpotential>, g: Option<&WeightGrading>) -> Document {
    Document::new(Payload::Presentation { presentation: PresentationDoc::new(p, w, g) })
}

/// Graphviz source; degree-0 arrows black, positive-degree arrows red.
pub fn dot_export(q: &Quiver, g: Option<&WeightGrading>) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in q.vertices() {
        let _ = writeln!(out, "  v{} [label=\"{}\"];", v.id, escape(&v.label));
    }
    for a in q.arrows() {
        let color = match g.map(|g| g.degree(a.id)) {
            Some(d) if d > 0 => "red",
            _ => "black",
        };
        let _ = writeln!(
            out,
            "  v{} -> v{} [label=\"{}\", color={color}, fontcolor={color}];",
            a.source,
            a.target,
            escape(&a.label)
        );
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `mckay` command.
pub fn cmd_mckay(spec: &str, with_superpotential: bool, air: bool) -> Result<Document> {
    let s: CyclicGroupSpec = spec.parse()?;
    let p = mckay_presentation(&s);
    let w = if with_superpotential { Some(skew_superpotential(&s)?) } else { None };
    let g = air.then(|| air_grading(&s));
    Ok(presentation_document(&p, w.as_ref(), g.as_ref()))
}

/// `prepro` command. Without `n`, uses the largest `l <= l_max` with `K_l != 0`.
pub fn cmd_prepro(input: &Document, n: Option<usize>, l_max: usize) -> Result<Document> {
    let (p, _, _) = input.presentation_parts()?;
    let n = match n {
        Some(n) => n,
        None => {
            let dims = koszul_dims(&p, l_max).dims();
            match dims.iter().rposition(|&d| d > 0) {
                Some(n) if n < l_max && n >= 1 => n,
                _ => {
                    return Err(Error::Precondition(format!(
                        "cannot infer n from Koszul dimensions {dims:?}"
                    )))
                }
            }
        }
    };
    let pp = build_preprojective(&p, n)?;
    let w = preprojective_superpotential(&pp)?;
    let q = pp.presentation.quiver();
    Ok(Document::new(Payload::Preprojective {
        n,
        presentation: PresentationDoc::new(&pp.presentation, Some(&w), Some(&pp.grading)),
        new_arrows: pp
            .new_arrows
            .iter()
            .map(|(g, a)| NewArrowDoc { arrow: *a, label: q.arrow(*a).label.clone(), generator: vector_to_terms(g) })
            .collect(),
    }))
}

/// `tensor` command. The superpotential (shuffle) and grading (sum) are
/// included when both inputs carry them.
pub fn cmd_tensor(a: &Document, b: &Document) -> Result<Document> {
    let (p1, w1, g1) = a.presentation_parts()?;
    let (p2, w2, g2) = b.presentation_parts()?;
    let (p, t) = tensor_presentation(&p1, &p2);
    let w = match (w1, w2) {
        (Some(w1), Some(w2)) => Some(shuffle_product(&w1, &w2, &t)?),
        _ => None,
    };
    let g = match (g1, g2) {
        (Some(g1), Some(g2)) => Some(lift_grading_sum(&g1, &g2, &t)),
        _ => None,
    };
    Ok(presentation_document(&p, w.as_ref(), g.as_ref()))
}

/// `koszul-dims` command.
pub fn cmd_koszul_dims(input: &Document, l_max: usize, d_max: usize) -> Result<Document> {
    let (p, _, _) = input.presentation_parts()?;
    Ok(Document::new(Payload::KoszulDims { table: koszul_dims(&p, l_max), probe: koszulity_probe(&p, d_max) }))
}

/// `grading-search` command. Without a superpotential in the input, the
/// generator of the top nonzero Koszul space is used when it exists.
pub fn cmd_grading_search(input: &Document, opts: &SearchOptions) -> Result<Document> {
    let (p, w, _) = input.presentation_parts()?;
    if p.quiver().arrow_count() > opts.limit {
        return Err(Error::SearchLimit { arrows: p.quiver().arrow_count(), limit: opts.limit });
    }
    let w = match w {
        Some(w) => w,
        None => {
            let dims = koszul_dims(&p, opts.l_max).dims();
            let n = dims.iter().rposition(|&d| d > 0).unwrap_or(0);
            if n < 2 || n == opts.l_max {
                return Err(Error::Precondition("input has no superpotential and none could be derived".into()));
            }
            match top_form(&p, n) {
                TopForm::Generator(w) => w,
                TopForm::Report(r) => return Err(Error::Precondition(format!("no superpotential: {}", r.reason))),
            }
        }
    };
    let report = grading_search(&p, &w, opts)?;
    Ok(Document::new(Payload::Report { report }))
}

/// Expands one `classify` argument: a spec `r:a1,...` or a range
/// `r<=R,n=N` (also `r≤R`).
pub fn expand_classify_arg(arg: &str) -> Result<Vec<CyclicGroupSpec>> {
    let t = arg.trim();
    if let Some(rest) = t.strip_prefix("r<=").or_else(|| t.strip_prefix("r≤")) {
        let (r, n) = rest
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected r<=R,n=N, got {arg:?}")))?;
        let n = n
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("expected n=N in {arg:?}")))?;
        let r: u32 = r.trim().parse().map_err(|_| Error::Parse(format!("bad bound in {arg:?}")))?;
        let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad n in {arg:?}")))?;
        return Ok(specs_in_range(r, n));
    }
    Ok(vec![t.parse()?])
}

/// `classify` command. Bad arguments become error records.
pub fn cmd_classify(args: &[String]) -> Document {
    let mut inputs: Vec<std::result::Result<CyclicGroupSpec, (String, String)>> = Vec::new();
    for a in args {
        match expand_classify_arg(a) {
            Ok(specs) => inputs.extend(specs.into_iter().map(Ok)),
            Err(e) => inputs.push(Err((a.clone(), e.to_string()))),
        }
    }
    let records = inputs
        .into_par_iter()
        .map(|i| match i {
            Ok(s) => ClassificationEntry { input: s.to_string(), record: Some(classify_group(&s)), error: None },
            Err((input, error)) => ClassificationEntry { input, record: None, error: Some(error) },
        })
        .collect();
    Document::new(Payload::Classification { records })
}

/// `dot` command.
pub fn cmd_dot(input: &Document) -> Result<String> {
    let (p, _, g) = input.presentation_parts()?;
    Ok(dot_export(p.quiver(), g.as_ref()))
}

/// Counts of arrows per DOT color, for quick checks.
pub fn dot_color_counts(dot: &str) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for line in dot.lines().filter(|l| l.contains("->")) {
        if let Some(rest) = line.split("color=").nth(1) {
            let color: String = rest.chars().take_while(|c| c.is_alphanumeric()).collect();
            *out.entry(color).or_insert(0) += 1;
        }
    }
    out
}
