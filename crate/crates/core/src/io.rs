//! Text and JSON formats for hypergraphs and complexes.
//!
//! Text: one edge (or facet) per line as whitespace-separated labels, `#`
//! starts a comment, and an optional first line `vertices: a b c` declares
//! the vertex set so isolated vertices survive. A facet line `{}` stands for
//! the empty face.
//!
//! Labels that are all integers below 64 become vertex ids directly. Any
//! other label set is numbered densely in sorted order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A vertex label as it appears in a document.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Id(u64),
    Name(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Id(n) => write!(f, "{n}"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

impl Label {
    fn parse(s: &str) -> Label {
        match s.parse::<u64>() {
            Ok(n) if n.to_string() == s => Label::Id(n),
            _ => Label::Name(s.to_string()),
        }
    }

    fn text(&self) -> String {
        match self {
            Label::Id(n) => n.to_string(),
            Label::Name(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphDocument {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub vertices: Vec<Label>,
    pub edges: Vec<Vec<Label>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub vertices: Vec<Label>,
    pub facets: Vec<Vec<Label>>,
}

/// Two-way mapping between labels and vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels {
    to_id: HashMap<Label, u32>,
    names: HashMap<u32, Label>,
}

impl Labels {
    /// Identity labelling for the given ids.
    pub fn identity(vertices: VertexSet) -> Self {
        Self::assign(vertices.iter().map(|v| Label::Id(v as u64)).collect())
            .expect("ids below 64 map to themselves")
    }

    fn assign(all: BTreeSet<Label>) -> Result<Self> {
        if all.len() > MAX_VERTICES {
            return Err(Error::CapacityExceeded(format!(
                "{} distinct labels, at most {MAX_VERTICES} supported",
                all.len()
            )));
        }
        let direct = all
            .iter()
            .all(|l| matches!(l, Label::Id(n) if (*n as usize) < MAX_VERTICES));
        let mut out = Labels::default();
        for (i, l) in all.into_iter().enumerate() {
            let id = match l {
                Label::Id(n) if direct => n as u32,
                _ => i as u32,
            };
            out.names.insert(id, l.clone());
            out.to_id.insert(l, id);
        }
        Ok(out)
    }

    pub fn id(&self, label: &Label) -> Option<u32> {
        self.to_id.get(label).copied()
    }

    /// Parses a textual label such as `3` or `a`.
    pub fn id_of(&self, text: &str) -> Option<u32> {
        self.id(&Label::parse(text))
    }

    pub fn label(&self, id: u32) -> Label {
        self.names.get(&id).cloned().unwrap_or(Label::Id(id as u64))
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<String> = s.iter().map(|v| self.label(v).text()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Resolves a comma or whitespace separated list of labels.
    pub fn parse_set(&self, text: &str) -> Result<VertexSet> {
        let mut out = VertexSet::EMPTY;
        let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
        for (column, tok) in tokens(trimmed, |c| c.is_whitespace() || c == ',') {
            let id = self.id_of(tok).ok_or_else(|| Error::Parse {
                line: 1,
                column,
                message: format!("unknown vertex label `{tok}`"),
            })?;
            out.insert(id);
        }
        Ok(out)
    }
}

/// A parsed hypergraph together with its labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeled<T> {
    pub name: String,
    pub value: T,
    pub labels: Labels,
}

fn tokens(line: &str, sep: impl Fn(char) -> bool) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if sep(ch) {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

struct RawSets {
    header: Option<Vec<Label>>,
    sets: Vec<(usize, Vec<(usize, Label)>)>,
}

fn parse_lines(text: &str, allow_empty_set: bool) -> Result<RawSets> {
    let mut raw = RawSets {
        header: None,
        sets: Vec::new(),
    };
    for (ln, line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if let Some(rest) = content.trim_start().strip_prefix("vertices:") {
            if raw.header.is_some() || !raw.sets.is_empty() {
                let column = line.find("vertices:").unwrap_or(0) + 1;
                return Err(Error::Parse {
                    line: line_no,
                    column,
                    message: "`vertices:` must be the first line".into(),
                });
            }
            raw.header = Some(
                tokens(rest, char::is_whitespace)
                    .into_iter()
                    .map(|(_, t)| Label::parse(t))
                    .collect(),
            );
            continue;
        }
        if allow_empty_set && content.trim() == "{}" {
            raw.sets.push((line_no, Vec::new()));
            continue;
        }
        let mut set = Vec::new();
        for (column, tok) in tokens(content, char::is_whitespace) {
            let label = Label::parse(tok);
            if set.iter().any(|(_, l)| *l == label) {
                return Err(Error::Parse {
                    line: line_no,
                    column,
                    message: format!("label `{tok}` repeated on one line"),
                });
            }
            set.push((column, label));
        }
        raw.sets.push((line_no, set));
    }
    Ok(raw)
}

fn resolve(raw: &RawSets) -> Result<(Labels, Option<VertexSet>, Vec<VertexSet>)> {
    let mut all: BTreeSet<Label> = raw.header.iter().flatten().cloned().collect();
    if let Some(header) = &raw.header {
        for (line, set) in &raw.sets {
            if let Some((column, l)) = set.iter().find(|(_, l)| !header.contains(l)) {
                return Err(Error::Parse {
                    line: *line,
                    column: *column,
                    message: format!("label `{}` not declared in `vertices:`", l.text()),
                });
            }
        }
    }
    for (_, set) in &raw.sets {
        all.extend(set.iter().map(|(_, l)| l.clone()));
    }
    let labels = Labels::assign(all)?;
    let header = raw
        .header
        .as_ref()
        .map(|h| h.iter().map(|l| labels.id(l).expect("assigned")).collect());
    let sets = raw
        .sets
        .iter()
        .map(|(_, s)| s.iter().map(|(_, l)| labels.id(l).expect("assigned")).collect())
        .collect();
    Ok((labels, header, sets))
}

pub fn parse_hypergraph_text(text: &str) -> Result<Labeled<Hypergraph>> {
    let raw = parse_lines(text, false)?;
    let (labels, header, edges) = resolve(&raw)?;
    let vertices = header.unwrap_or_else(|| edges.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e)));
    Ok(Labeled {
        name: String::new(),
        value: Hypergraph::new(vertices, edges)?,
        labels,
    })
}

pub fn parse_complex_text(text: &str) -> Result<Labeled<SimplicialComplex>> {
    let raw = parse_lines(text, true)?;
    let (labels, _, facets) = resolve(&raw)?;
    Ok(Labeled {
        name: String::new(),
        value: SimplicialComplex::from_facets(facets)?,
        labels,
    })
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn raw_from_document(vertices: &[Label], sets: &[Vec<Label>]) -> RawSets {
    RawSets {
        header: (!vertices.is_empty()).then(|| vertices.to_vec()),
        sets: sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i + 1, s.iter().map(|l| (1, l.clone())).collect()))
            .collect(),
    }
}

pub fn hypergraph_from_document(doc: &HypergraphDocument) -> Result<Labeled<Hypergraph>> {
    let raw = raw_from_document(&doc.vertices, &doc.edges);
    let (labels, header, edges) = resolve(&raw)?;
    let vertices = header.unwrap_or_else(|| edges.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e)));
    Ok(Labeled {
        name: doc.name.clone(),
        value: Hypergraph::new(vertices, edges)?,
        labels,
    })
}

pub fn complex_from_document(doc: &ComplexDocument) -> Result<Labeled<SimplicialComplex>> {
    let raw = raw_from_document(&doc.vertices, &doc.facets);
    let (labels, _, facets) = resolve(&raw)?;
    Ok(Labeled {
        name: doc.name.clone(),
        value: SimplicialComplex::from_facets(facets)?,
        labels,
    })
}

pub fn parse_hypergraph_json(text: &str) -> Result<Labeled<Hypergraph>> {
    hypergraph_from_document(&serde_json::from_str(text).map_err(json_error)?)
}

pub fn parse_complex_json(text: &str) -> Result<Labeled<SimplicialComplex>> {
    complex_from_document(&serde_json::from_str(text).map_err(json_error)?)
}

fn looks_like_json(text: &str) -> bool {
    let t = text.trim_start();
    t.starts_with('{') && t[1..].trim_start().starts_with('"')
}

/// Parses either format, choosing JSON when the input is a JSON object.
pub fn parse_hypergraph(text: &str) -> Result<Labeled<Hypergraph>> {
    if looks_like_json(text) {
        parse_hypergraph_json(text)
    } else {
        parse_hypergraph_text(text)
    }
}

pub fn parse_complex(text: &str) -> Result<Labeled<SimplicialComplex>> {
    if looks_like_json(text) {
        parse_complex_json(text)
    } else {
        parse_complex_text(text)
    }
}

fn label_list(labels: &Labels, s: VertexSet) -> Vec<Label> {
    s.iter().map(|v| labels.label(v)).collect()
}

pub fn hypergraph_document(name: &str, c: &Hypergraph, labels: &Labels) -> HypergraphDocument {
    HypergraphDocument {
        name: name.to_string(),
        vertices: label_list(labels, c.vertices()),
        edges: c.edges().iter().map(|&e| label_list(labels, e)).collect(),
    }
}

pub fn complex_document(name: &str, d: &SimplicialComplex, labels: &Labels) -> ComplexDocument {
    ComplexDocument {
        name: name.to_string(),
        vertices: label_list(labels, d.vertices()),
        facets: d.facets().iter().map(|&f| label_list(labels, f)).collect(),
    }
}

fn text_line(labels: &Labels, s: VertexSet) -> String {
    if s.is_empty() {
        return "{}".into();
    }
    s.iter().map(|v| labels.label(v).text()).collect::<Vec<_>>().join(" ")
}

/// Canonical text form; the header is written only when some vertex is
/// isolated.
pub fn emit_hypergraph_text(c: &Hypergraph, labels: &Labels) -> String {
    let mut out = String::new();
    if !c.isolated_vertices().is_empty() {
        out.push_str("vertices: ");
        out.push_str(&text_line(labels, c.vertices()));
        out.push('\n');
    }
    for &e in c.edges() {
        out.push_str(&text_line(labels, e));
        out.push('\n');
    }
    out
}

pub fn emit_complex_text(d: &SimplicialComplex, labels: &Labels) -> String {
    d.facets()
        .iter()
        .map(|&f| text_line(labels, f) + "\n")
        .collect()
}

pub fn emit_hypergraph_json(name: &str, c: &Hypergraph, labels: &Labels) -> String {
    serde_json::to_string_pretty(&hypergraph_document(name, c, labels)).expect("serializable")
}

pub fn emit_complex_json(name: &str, d: &SimplicialComplex, labels: &Labels) -> String {
    serde_json::to_string_pretty(&complex_document(name, d, labels)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn text_examples() {
        let p = parse_hypergraph_text("1 2\n2 3\n").unwrap();
        assert_eq!(p.value.edges(), &[set(&[1, 2]), set(&[2, 3])]);
        assert_eq!(p.value.vertices(), set(&[1, 2, 3]));

        let h = parse_hypergraph_text("vertices: 1 2 3 4\n1 2\n").unwrap();
        assert_eq!(h.value.vertices(), set(&[1, 2, 3, 4]));
        assert_eq!(h.value.isolated_vertices(), set(&[3, 4]));

        assert_eq!(parse_hypergraph_text("1\n").map(|p| p.value), Err(Error::EdgeTooSmall(set(&[1]))));
    }

    #[test]
    fn named_labels_are_dense() {
        let p = parse_hypergraph_text("# triangle\nb a\nc b\na c\n").unwrap();
        assert_eq!(p.value.vertices(), set(&[0, 1, 2]));
        assert_eq!(p.labels.label(0), Label::Name("a".into()));
        assert_eq!(p.labels.format_set(set(&[0, 2])), "{a,c}");
        assert_eq!(p.labels.parse_set("a,c").unwrap(), set(&[0, 2]));
    }

    #[test]
    fn large_numbers_are_relabelled() {
        let p = parse_hypergraph_text("100 200\n").unwrap();
        assert_eq!(p.value.vertices(), set(&[0, 1]));
        assert_eq!(p.labels.label(1), Label::Id(200));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_hypergraph_text("1 2\n3 3\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse { line: 2, column: 3, message: "label `3` repeated on one line".into() }
        );
        let e = parse_hypergraph_text("vertices: 1 2\n1 5\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 3, .. }));
        let e = parse_hypergraph_text("1 2\nvertices: 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 1, .. }));
        let e = parse_hypergraph_json("{\"edges\": [[1, 2]").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn round_trips() {
        let p = parse_hypergraph("vertices: 1 2 3 4 7 9\n2 3\n1 2\n3 4 7\n").unwrap();
        let text = emit_hypergraph_text(&p.value, &p.labels);
        assert_eq!(text, "vertices: 1 2 3 4 7 9\n1 2\n2 3\n3 4 7\n");
        assert_eq!(parse_hypergraph(&text).unwrap().value, p.value);
        let json = emit_hypergraph_json("x", &p.value, &p.labels);
        let back = parse_hypergraph(&json).unwrap();
        assert_eq!(back.value, p.value);
        assert_eq!(back.name, "x");
    }

    #[test]
    fn complexes() {
        let d = parse_complex("1 2\n2 3\n").unwrap();
        assert_eq!(d.value.facets().len(), 2);
        let e = parse_complex("{}\n").unwrap();
        assert!(e.value.is_empty_face_complex());
        assert_eq!(emit_complex_text(&e.value, &e.labels), "{}\n");
        let json = emit_complex_json("k", &d.value, &d.labels);
        assert_eq!(parse_complex(&json).unwrap().value, d.value);
    }
}
