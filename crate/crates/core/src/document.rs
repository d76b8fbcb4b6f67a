//! On-disk format for (marked) dessins, plus Graphviz export.
//!
//! A document is JSON with darts numbered from 1:
//!
//! ```json
//! {
//!   "degree": 3,
//!   "sigma_black": [],
//!   "sigma_white": [[1, 2, 3]],
//!   "marks": {
//!     "0":        { "kind": "black", "cycle": [1] },
//!     "1":        { "kind": "black", "cycle": [2] },
//!     "lambda":   { "kind": "black", "cycle": [3] },
//!     "infinity": { "kind": "face",  "cycle": [1, 3, 2] }
//!   }
//! }
//! ```
//!
//! `sigma_black` and `sigma_white` list the non-trivial cycles only; fixed
//! points are implied. `marks` is optional. Writing always emits cycles
//! starting at their smallest dart, ordered by that dart, so a document
//! written by this module reads back to an identical value and re-serializes
//! byte for byte.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypermap::{Dessin, Feature, FeatureKind, HypermapError, MarkLabel, MarkedDessin};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("dart 0 appears in {0}; darts are numbered from 1")]
    ZeroDart(&'static str),
    #[error("sigma_{which}: {source}")]
    Permutation {
        which: &'static str,
        source: PermError,
    },
    #[error(transparent)]
    Dessin(#[from] HypermapError),
    #[error("the document carries no marks")]
    MissingMarks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FeatureDocument {
    pub kind: FeatureKind,
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarksDocument {
    #[serde(rename = "0")]
    pub zero: FeatureDocument,
    #[serde(rename = "1")]
    pub one: FeatureDocument,
    pub lambda: FeatureDocument,
    pub infinity: FeatureDocument,
}

impl MarksDocument {
    pub fn get(&self, label: MarkLabel) -> &FeatureDocument {
        match label {
            MarkLabel::Zero => &self.zero,
            MarkLabel::One => &self.one,
            MarkLabel::Lambda => &self.lambda,
            MarkLabel::Infinity => &self.infinity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DessinDocument {
    pub degree: usize,
    pub sigma_black: Vec<Vec<usize>>,
    pub sigma_white: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marks: Option<MarksDocument>,
}

fn nontrivial_cycles(p: &Permutation) -> Vec<Vec<usize>> {
    p.cycles()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| c.into_iter().map(|x| x + 1).collect())
        .collect()
}

fn feature_doc(f: &Feature) -> FeatureDocument {
    FeatureDocument {
        kind: f.kind,
        cycle: f.cycle.iter().map(|x| x + 1).collect(),
    }
}

fn zero_based(
    cycles: &[Vec<usize>],
    which: &'static str,
) -> Result<Vec<Vec<usize>>, DocumentError> {
    cycles
        .iter()
        .map(|c| {
            c.iter()
                .map(|&x| x.checked_sub(1).ok_or(DocumentError::ZeroDart(which)))
                .collect()
        })
        .collect()
}

impl DessinDocument {
    pub fn from_dessin(d: &Dessin) -> Self {
        DessinDocument {
            degree: d.degree(),
            sigma_black: nontrivial_cycles(d.black()),
            sigma_white: nontrivial_cycles(d.white()),
            marks: None,
        }
    }

    pub fn from_marked(m: &MarkedDessin) -> Self {
        let mut doc = Self::from_dessin(m.dessin());
        doc.marks = Some(MarksDocument {
            zero: feature_doc(m.mark(MarkLabel::Zero)),
            one: feature_doc(m.mark(MarkLabel::One)),
            lambda: feature_doc(m.mark(MarkLabel::Lambda)),
            infinity: feature_doc(m.mark(MarkLabel::Infinity)),
        });
        doc
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// Both rotations as permutations, without the transitivity check.
    pub fn permutations(&self) -> Result<(Permutation, Permutation), DocumentError> {
        let conv = |cycles: &[Vec<usize>], which| -> Result<Permutation, DocumentError> {
            let cycles = zero_based(cycles, which)?;
            Permutation::from_cycles(self.degree, &cycles)
                .map_err(|source| DocumentError::Permutation { which, source })
        };
        Ok((
            conv(&self.sigma_black, "black")?,
            conv(&self.sigma_white, "white")?,
        ))
    }

    pub fn to_dessin(&self) -> Result<Dessin, DocumentError> {
        let (b, w) = self.permutations()?;
        Ok(Dessin::new(self.degree, b, w)?)
    }

    pub fn to_marked(&self) -> Result<MarkedDessin, DocumentError> {
        let d = self.to_dessin()?;
        let marks = self.marks.as_ref().ok_or(DocumentError::MissingMarks)?;
        let mut features = Vec::with_capacity(4);
        for label in MarkLabel::ALL {
            let f = marks.get(label);
            let cycle = zero_based(std::slice::from_ref(&f.cycle), "marks")?.remove(0);
            features.push(Feature::new(f.kind, cycle));
        }
        let features: [Feature; 4] = features.try_into().expect("four labels");
        Ok(MarkedDessin::new(d, features)?)
    }

    /// The same dessin re-serialized in the canonical layout: cycles start
    /// at their smallest dart and are sorted, fixed points are dropped.
    pub fn normalized(&self) -> Result<Self, DocumentError> {
        Ok(match self.marks {
            Some(_) => Self::from_marked(&self.to_marked()?),
            None => Self::from_dessin(&self.to_dessin()?),
        })
    }
}

/// Graphviz rendering of the bipartite graph: one filled node `b<i>` per
/// black vertex, one hollow node `w<i>` per white vertex (both numbered by
/// their smallest dart), one edge per dart. Vertex marks become external
/// labels; face marks are listed in the graph label.
pub fn to_dot(d: &Dessin, marks: Option<&MarkedDessin>) -> String {
    let black = d.black().cycle_index();
    let white = d.white().cycle_index();
    let mut out = String::from("graph dessin {\n");
    out.push_str("  node [shape=circle, width=0.25, label=\"\"];\n");
    let vertex_mark = |kind: FeatureKind, cycle: &[usize]| -> Option<MarkLabel> {
        let m = marks?;
        MarkLabel::ALL.into_iter().find(|&l| {
            let f = m.mark(l);
            f.kind == kind && f.cycle.first() == cycle.first()
        })
    };
    for (kind, prefix, style) in [
        (FeatureKind::Black, "b", "style=filled, fillcolor=black"),
        (FeatureKind::White, "w", "style=solid, fillcolor=white"),
    ] {
        for (i, cycle) in d.permutation(kind).cycles().iter().enumerate() {
            let xlabel = vertex_mark(kind, cycle)
                .map(|l| format!(", xlabel=\"{}\"", l.key()))
                .unwrap_or_default();
            writeln!(out, "  {prefix}{} [{style}{xlabel}];", i + 1).unwrap();
        }
    }
    for x in 0..d.degree() {
        writeln!(
            out,
            "  b{} -- w{} [label=\"{}\"];",
            black[x] + 1,
            white[x] + 1,
            x + 1
        )
        .unwrap();
    }
    if let Some(m) = marks {
        let faces: Vec<String> = MarkLabel::ALL
            .into_iter()
            .filter(|&l| m.mark(l).kind == FeatureKind::Face)
            .map(|l| {
                let darts: Vec<String> = m
                    .mark(l)
                    .cycle
                    .iter()
                    .map(|x| (x + 1).to_string())
                    .collect();
                format!("{} = face ({})", l.key(), darts.join(" "))
            })
            .collect();
        if !faces.is_empty() {
            writeln!(out, "  label=\"{}\";", faces.join(", ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const STAR: &str = r#"{
  "degree": 3,
  "sigma_black": [],
  "sigma_white": [[1, 2, 3]],
  "marks": {
    "0": { "kind": "black", "cycle": [1] },
    "1": { "kind": "black", "cycle": [2] },
    "lambda": { "kind": "black", "cycle": [3] },
    "infinity": { "kind": "face", "cycle": [1, 3, 2] }
  }
}"#;

    #[test]
    fn parse_marked_star() {
        let doc = DessinDocument::from_json(STAR).unwrap();
        let m = doc.to_marked().unwrap();
        assert_eq!(m.dessin().to_string(), "E=3 black=() white=(1 2 3)");
        assert_eq!(DessinDocument::from_marked(&m), doc);
        let again = DessinDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
        assert_eq!(again.to_json(), doc.to_json());
    }

    #[test]
    fn normalization() {
        let messy = r#"{"degree": 4, "sigma_black": [[4, 3], [1]], "sigma_white": [[3, 1, 2]]}"#;
        let doc = DessinDocument::from_json(messy)
            .unwrap()
            .normalized()
            .unwrap();
        assert_eq!(doc.sigma_black, vec![vec![3, 4]]);
        assert_eq!(doc.sigma_white, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn marks_are_optional() {
        let doc = DessinDocument::from_json(
            r#"{"degree": 2, "sigma_black": [], "sigma_white": [[1, 2]]}"#,
        )
        .unwrap();
        assert!(doc.to_dessin().is_ok());
        assert!(matches!(doc.to_marked(), Err(DocumentError::MissingMarks)));
        assert!(!doc.to_json().contains("marks"));
    }

    #[test]
    fn rejects_bad_documents() {
        let zero = r#"{"degree": 2, "sigma_black": [], "sigma_white": [[0, 1]]}"#;
        assert!(matches!(
            DessinDocument::from_json(zero).unwrap().to_dessin(),
            Err(DocumentError::ZeroDart("white"))
        ));
        let repeated = r#"{"degree": 3, "sigma_black": [[1, 2], [2, 3]], "sigma_white": []}"#;
        assert!(matches!(
            DessinDocument::from_json(repeated).unwrap().to_dessin(),
            Err(DocumentError::Permutation { which: "black", .. })
        ));
        let split = r#"{"degree": 4, "sigma_black": [[1, 2], [3, 4]], "sigma_white": []}"#;
        assert!(matches!(
            DessinDocument::from_json(split).unwrap().to_dessin(),
            Err(DocumentError::Dessin(HypermapError::NotConnected { .. }))
        ));
        assert!(matches!(
            DessinDocument::from_json(r#"{"degree": 1}"#),
            Err(DocumentError::Json(_))
        ));
        assert!(DessinDocument::from_json(
            r#"{"degree": 1, "sigma_black": [], "sigma_white": [], "extra": 1}"#
        )
        .is_err());
    }

    #[test]
    fn dot_shapes() {
        let m = DessinDocument::from_json(STAR)
            .unwrap()
            .to_marked()
            .unwrap();
        let dot = to_dot(m.dessin(), Some(&m));
        assert_eq!(dot.matches("fillcolor=").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("xlabel=\"lambda\""));
        assert!(dot.contains("infinity = face (1 3 2)"));

        let path = Dessin::parse(2, "()", "(1 2)").unwrap();
        let dot = to_dot(&path, None);
        assert_eq!(dot.matches("fillcolor=").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 2);
    }
}
