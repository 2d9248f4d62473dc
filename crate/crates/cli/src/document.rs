//! JSON documents read and written by the CLI.

use std::str::FromStr;

use decorated_cospans::report::LawReport;
use decorated_cospans::{
    Cospan, DecoratedCospan, Edge, FinFunction, FinSet, LabeledGraph, RatGraph, RatSubspace, Rational, Subspace,
};
use serde::{Deserialize, Serialize};

/// A cospan with an optional decoration on its apex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDocument {
    pub left_foot: usize,
    pub right_foot: usize,
    pub apex: usize,
    pub left_leg: Vec<usize>,
    pub right_leg: Vec<usize>,
    pub decoration: DecorationDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum DecorationDocument {
    None,
    /// `(src, tgt, label)` triples.
    Graph { edges: Vec<(usize, usize, String)> },
    /// Basis rows over `(φ_0.., ι_0..)`.
    Linsub { rows: Vec<Vec<String>> },
}

/// A subspace of boundary states on `X + Y`; coordinates are the potentials
/// on `X + Y` followed by the currents on `X + Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BehaviorDocument {
    pub left_foot: usize,
    pub right_foot: usize,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoDocument {
    pub isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bijection: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivDocument {
    pub equivalent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReportDocument {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub reports: Vec<LawReport>,
}

/// A parsed circuit file.
#[derive(Debug, Clone, PartialEq)]
pub enum Circuit {
    Plain(Cospan),
    Graph(DecoratedCospan<RatGraph>),
    Linsub(DecoratedCospan<RatSubspace>),
}

impl Circuit {
    pub fn kind(&self) -> &'static str {
        match self {
            Circuit::Plain(_) => "none",
            Circuit::Graph(_) => "graph",
            Circuit::Linsub(_) => "linsub",
        }
    }

    pub fn cospan(&self) -> &Cospan {
        match self {
            Circuit::Plain(c) => c,
            Circuit::Graph(d) => &d.cospan,
            Circuit::Linsub(d) => &d.cospan,
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed != s {
        return Err(format!("malformed rational {s:?}"));
    }
    Rational::from_str(s).map_err(|_| format!("malformed rational {s:?}"))
}

fn format_rows(s: &Subspace<Rational>) -> Vec<Vec<String>> {
    s.basis().iter_rows().map(|r| r.iter().map(format_rational).collect()).collect()
}

fn parse_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Rational>>, String> {
    rows.iter().map(|r| r.iter().map(|x| parse_rational(x)).collect()).collect()
}

impl CircuitDocument {
    pub fn from_circuit(c: &Circuit) -> Self {
        let cospan = c.cospan();
        let decoration = match c {
            Circuit::Plain(_) => DecorationDocument::None,
            Circuit::Graph(d) => DecorationDocument::Graph {
                edges: d
                    .decoration
                    .sorted_edges()
                    .into_iter()
                    .map(|e| (e.src, e.tgt, format_rational(&e.label)))
                    .collect(),
            },
            Circuit::Linsub(d) => DecorationDocument::Linsub { rows: format_rows(&d.decoration) },
        };
        CircuitDocument {
            left_foot: cospan.left_foot().size(),
            right_foot: cospan.right_foot().size(),
            apex: cospan.apex().size(),
            left_leg: cospan.left().table().to_vec(),
            right_leg: cospan.right().table().to_vec(),
            decoration,
        }
    }

    pub fn to_circuit(&self) -> Result<Circuit, String> {
        let e = |e: decorated_cospans::Error| e.to_string();
        let apex = FinSet::new(self.apex).map_err(e)?;
        let left = FinFunction::with_domain(self.left_foot, self.apex, self.left_leg.clone()).map_err(e)?;
        let right = FinFunction::with_domain(self.right_foot, self.apex, self.right_leg.clone()).map_err(e)?;
        let cospan = Cospan::new(left, right).map_err(e)?;
        Ok(match &self.decoration {
            DecorationDocument::None => Circuit::Plain(cospan),
            DecorationDocument::Graph { edges } => {
                let edges = edges
                    .iter()
                    .map(|(s, t, r)| Ok(Edge::new(*s, *t, parse_rational(r)?)))
                    .collect::<Result<Vec<_>, String>>()?;
                let decoration = LabeledGraph::new(apex, edges).map_err(e)?;
                Circuit::Graph(DecoratedCospan { cospan, decoration })
            }
            DecorationDocument::Linsub { rows } => {
                let decoration = Subspace::from_canonical_rows(2 * self.apex, parse_rows(rows)?).map_err(e)?;
                Circuit::Linsub(DecoratedCospan { cospan, decoration })
            }
        })
    }
}

impl BehaviorDocument {
    pub fn new(left_foot: FinSet, right_foot: FinSet, s: &RatSubspace) -> Self {
        BehaviorDocument { left_foot: left_foot.size(), right_foot: right_foot.size(), rows: format_rows(s) }
    }

    pub fn to_subspace(&self) -> Result<RatSubspace, String> {
        let ambient = 2 * (self.left_foot + self.right_foot);
        Subspace::from_canonical_rows(ambient, parse_rows(&self.rows)?).map_err(|e| e.to_string())
    }
}

/// Pretty JSON with a trailing newline.
pub fn render<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize");
    out.push('\n');
    out
}
