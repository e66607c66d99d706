//! JSON file formats and DOT export.
//!
//! Every document is written as compact JSON followed by a newline, with
//! edges and entries in canonical order, so writing what was read gives back
//! the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::de::Error as _;
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::explore::ExplorationReport;
use crate::extension::Precoloring;
use crate::families::{EdgeKind, ProductGraph};
use crate::graph::{EdgeId, Graph};
use crate::oracle::{ObstructionCertificate, Verdict};

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    name: String,
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<ProductMeta>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ProductMeta {
    left: usize,
    right: usize,
    edge_kinds: Vec<KindRecord>,
}

/// `["L", base_u, base_v, w]` or `["F", u, right_w, right_z]`.
#[derive(Debug)]
struct KindRecord(EdgeKind);

impl Serialize for KindRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (tag, a, b, c) = match self.0 {
            EdgeKind::Layer { base, right } => ("L", base.lo(), base.hi(), right),
            EdgeKind::Fiber { base, right } => ("F", base, right.lo(), right.hi()),
        };
        let mut t = s.serialize_tuple(4)?;
        t.serialize_element(tag)?;
        t.serialize_element(&a)?;
        t.serialize_element(&b)?;
        t.serialize_element(&c)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for KindRecord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (tag, a, b, c) = <(String, usize, usize, usize)>::deserialize(d)?;
        let pair = |x, y| EdgeId::new(x, y).map_err(D::Error::custom);
        match tag.as_str() {
            "L" => Ok(KindRecord(EdgeKind::Layer {
                base: pair(a, b)?,
                right: c,
            })),
            "F" => Ok(KindRecord(EdgeKind::Fiber {
                base: a,
                right: pair(b, c)?,
            })),
            other => Err(D::Error::custom(format!("unknown edge kind `{other}`"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    u: usize,
    v: usize,
    color: Color,
}

#[derive(Debug, Serialize, Deserialize)]
struct ColoringDoc {
    palette_size: Color,
    assignment: Vec<Entry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PrecoloringDoc {
    palette_size: Color,
    entries: Vec<Entry>,
}

#[derive(Debug, Serialize)]
struct ReportDoc {
    instances: u64,
    extendable: u64,
    counterexamples: Vec<PrecoloringDoc>,
    budget_used: u64,
    seed: u64,
    inconclusive: u64,
    exhaustive: bool,
}

#[derive(Debug, Serialize)]
struct VerdictDoc {
    extendable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<ColoringDoc>,
}

#[derive(Debug, Serialize)]
struct WitnessDoc {
    edge: [usize; 2],
    witness: [usize; 2],
}

#[derive(Debug, Serialize)]
struct CertificateDoc {
    hub: usize,
    color: Color,
    witnesses: Vec<WitnessDoc>,
}

fn finish<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn graph_doc(g: &Graph) -> GraphDoc {
    GraphDoc {
        name: g.name().to_string(),
        vertices: g.labels().to_vec(),
        edges: g.edges().iter().map(|e| [e.lo(), e.hi()]).collect(),
        product: None,
    }
}

fn graph_from_doc(doc: &GraphDoc) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = doc.edges.iter().map(|&[a, b]| (a, b)).collect();
    Ok(Graph::new(doc.vertices.clone(), &pairs)?.with_name(doc.name.clone()))
}

pub fn write_graph(g: &Graph) -> String {
    finish(&graph_doc(g))
}

/// Reads a graph document; product metadata, if present, is ignored.
pub fn read_graph(text: &str) -> Result<Graph> {
    graph_from_doc(&serde_json::from_str(text)?)
}

pub fn write_product(p: &ProductGraph) -> String {
    let mut doc = graph_doc(p.graph());
    doc.product = Some(ProductMeta {
        left: p.left_order(),
        right: p.right_order(),
        edge_kinds: p.edge_kinds().iter().map(|&k| KindRecord(k)).collect(),
    });
    finish(&doc)
}

pub fn read_product(text: &str) -> Result<ProductGraph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let graph = graph_from_doc(&doc)?;
    let meta = doc
        .product
        .ok_or_else(|| Error::Format("graph document has no product metadata".into()))?;
    ProductGraph::from_parts(
        graph,
        meta.left,
        meta.right,
        meta.edge_kinds.into_iter().map(|k| k.0).collect(),
    )
}

fn entries<'a>(items: impl Iterator<Item = (EdgeId, Color)> + 'a) -> Vec<Entry> {
    items
        .map(|(e, color)| Entry {
            u: e.lo(),
            v: e.hi(),
            color,
        })
        .collect()
}

fn entry_map(entries: Vec<Entry>) -> Result<BTreeMap<EdgeId, Color>> {
    let mut map = BTreeMap::new();
    for Entry { u, v, color } in entries {
        let e = EdgeId::new(u, v)?;
        if map.insert(e, color).is_some() {
            return Err(Error::Format(format!("edge {e} listed twice")));
        }
    }
    Ok(map)
}

fn coloring_doc(c: &EdgeColoring) -> ColoringDoc {
    ColoringDoc {
        palette_size: c.palette_size(),
        assignment: entries(c.iter()),
    }
}

pub fn write_coloring(c: &EdgeColoring) -> String {
    finish(&coloring_doc(c))
}

pub fn read_coloring(text: &str) -> Result<EdgeColoring> {
    let doc: ColoringDoc = serde_json::from_str(text)?;
    Ok(EdgeColoring::from_assignment(
        doc.palette_size,
        entry_map(doc.assignment)?,
    ))
}

fn precoloring_doc(p: &Precoloring) -> PrecoloringDoc {
    PrecoloringDoc {
        palette_size: p.palette_size(),
        entries: entries(p.iter()),
    }
}

pub fn write_precoloring(p: &Precoloring) -> String {
    finish(&precoloring_doc(p))
}

pub fn read_precoloring(text: &str) -> Result<Precoloring> {
    let doc: PrecoloringDoc = serde_json::from_str(text)?;
    Ok(Precoloring::with_entries(
        doc.palette_size,
        entry_map(doc.entries)?,
    ))
}

pub fn write_report(r: &ExplorationReport) -> String {
    finish(&ReportDoc {
        instances: r.instances,
        extendable: r.extendable,
        counterexamples: r.counterexamples.iter().map(precoloring_doc).collect(),
        budget_used: r.budget_used,
        seed: r.seed,
        inconclusive: r.inconclusive,
        exhaustive: r.exhaustive,
    })
}

/// `{"extendable":true,"coloring":{..}}` or `{"extendable":false}`.
pub fn write_verdict(v: &Verdict) -> String {
    finish(&VerdictDoc {
        extendable: v.is_extendable(),
        coloring: match v {
            Verdict::Extendable(c) => Some(coloring_doc(c)),
            Verdict::NotExtendable => None,
        },
    })
}

pub fn write_certificate(c: &ObstructionCertificate) -> String {
    finish(&CertificateDoc {
        hub: c.hub,
        color: c.color,
        witnesses: c
            .witnesses
            .iter()
            .map(|&(e, w)| WitnessDoc {
                edge: [e.lo(), e.hi()],
                witness: [w.lo(), w.hi()],
            })
            .collect(),
    })
}

/// Fixed DOT color names; color `c` uses entry `(c - 1) % 16`.
pub const DOT_PALETTE: [&str; 16] = [
    "red",
    "blue",
    "green3",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan3",
    "gold",
    "navy",
    "darkgreen",
    "crimson",
    "teal",
    "olive",
    "orchid",
    "gray40",
];

pub fn dot_color(c: Color) -> &'static str {
    DOT_PALETTE[(c as usize + DOT_PALETTE.len() - 1) % DOT_PALETTE.len()]
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &Graph, coloring: Option<&EdgeColoring>) -> String {
    let mut out = String::new();
    let name = if g.name().is_empty() { "G" } else { g.name() };
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    for v in 0..g.order() {
        writeln!(out, "  {v} [label={}];", quote(g.label(v))).unwrap();
    }
    for &e in g.edges() {
        match coloring.and_then(|c| c.get(e)) {
            Some(c) => writeln!(
                out,
                "  {} -- {} [color={}, label=\"{c}\"];",
                e.lo(),
                e.hi(),
                quote(dot_color(c))
            )
            .unwrap(),
            None => writeln!(out, "  {} -- {};", e.lo(), e.hi()).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
