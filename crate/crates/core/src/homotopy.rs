//! Homotopy types of independence complexes of triangulated hypergraphs,
//! and the properly-splitted recognizer.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chains::{
    c_max_disjoint, first_decomposition_vertex, is_properly_connected, is_triangulated,
    uniform_size, Occurrence,
};
use crate::complex::independence_complex;
use crate::error::{Error, Result};
use crate::ext::ExtInt;
use crate::homology::conn_h;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Either contractible or a wedge of spheres. The complex `{∅}` is the
/// sphere of dimension `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HomotopyType {
    Contractible,
    /// Sphere dimensions in ascending order, never empty.
    WedgeOfSpheres(Vec<i64>),
}

impl HomotopyType {
    pub fn sphere(dim: i64) -> Self {
        HomotopyType::WedgeOfSpheres(vec![dim])
    }

    pub fn wedge(mut dims: Vec<i64>) -> Self {
        if dims.is_empty() {
            return HomotopyType::Contractible;
        }
        dims.sort_unstable();
        HomotopyType::WedgeOfSpheres(dims)
    }

    pub fn dims(&self) -> &[i64] {
        match self {
            HomotopyType::Contractible => &[],
            HomotopyType::WedgeOfSpheres(d) => d,
        }
    }

    /// Number of spheres of each dimension `-1..=max`.
    pub fn betti_profile(&self) -> Vec<usize> {
        let dims = self.dims();
        let top = dims.iter().copied().max().unwrap_or(-1);
        let mut out = vec![0; (top + 2) as usize];
        for &k in dims {
            out[(k + 1) as usize] += 1;
        }
        out
    }
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyType::Contractible => write!(f, "contractible"),
            HomotopyType::WedgeOfSpheres(dims) => {
                let parts: Vec<String> = dims.iter().map(|k| format!("S^{k}")).collect();
                write!(f, "{}", parts.join(" v "))
            }
        }
    }
}

/// `D_C(v) = {I ∈ Ind(C) : I ∪ {v} ∈ C}`. A proper subset of an edge
/// contains no edge, so these are exactly the sets `E \ {v}` with `v ∈ E`.
pub fn d_set(c: &Hypergraph, v: u32) -> Result<Vec<VertexSet>> {
    if !c.vertices().contains(v) {
        return Err(Error::VertexNotPresent(v));
    }
    Ok(c.edges()
        .iter()
        .filter(|e| e.contains(v))
        .map(|e| e.without(v))
        .collect())
}

/// How much of the precondition `homotopy_type_triangulated` verifies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Validation {
    /// Uniformity and proper connectivity up front, then the local
    /// condition of each chosen vertex.
    #[default]
    Lazy,
    /// Additionally the full triangulated check before recursing.
    Strict,
}

pub fn homotopy_type_triangulated(c: &Hypergraph) -> Result<HomotopyType> {
    homotopy_type_with(c, Validation::Lazy)
}

pub fn homotopy_type_with(c: &Hypergraph, validation: Validation) -> Result<HomotopyType> {
    let d = uniform_size(c)?;
    if !is_properly_connected(c)? {
        return Err(Error::NotProperlyConnected);
    }
    if validation == Validation::Strict && !is_triangulated(c)? {
        return Err(Error::NotTriangulated);
    }
    let mut memo = HashMap::new();
    synthesize(c, d, &mut memo)
}

fn synthesize(
    c: &Hypergraph,
    d: Option<usize>,
    memo: &mut HashMap<Hypergraph, HomotopyType>,
) -> Result<HomotopyType> {
    if c.vertices().is_empty() {
        return Ok(HomotopyType::sphere(-1));
    }
    if c.is_empty() {
        return Ok(HomotopyType::Contractible);
    }
    if let Some(t) = memo.get(c) {
        return Ok(t.clone());
    }
    let d = d.expect("a hypergraph with edges has an edge size");
    let v = first_decomposition_vertex(c, Some(d), Occurrence::EdgeMembership)?
        .ok_or(Error::NotTriangulated)?;
    let mut dims = Vec::new();
    for i in d_set(c, v)? {
        assert_eq!(i.len(), d - 1, "decomposition faces have d - 1 vertices");
        // Σ(S^{d-3} * T): the join shifts by d − 2, the suspension by one.
        let t = synthesize(&c.contract_unchecked(i.with(v)), Some(d), memo)?;
        dims.extend(t.dims().iter().map(|k| k + d as i64 - 1));
    }
    let t = HomotopyType::wedge(dims);
    memo.insert(c.clone(), t.clone());
    Ok(t)
}

/// `(d − 1)·c_C − 1` with `c_C` the maximum number of pairwise
/// `(d + 1)`-disjoint edges; `-1` without edges.
pub fn max_dimension_bound(c: &Hypergraph) -> Result<i64> {
    let Some(d) = uniform_size(c)? else { return Ok(-1) };
    if !is_properly_connected(c)? {
        return Err(Error::NotProperlyConnected);
    }
    let cc = c_max_disjoint(c, d as u64 + 1)?;
    Ok((d as i64 - 1) * cc as i64 - 1)
}

/// Witness that a hypergraph is properly-splitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitTree {
    /// No edges left.
    Leaf,
    Split {
        edge: VertexSet,
        deleted: Box<SplitTree>,
        contracted: Box<SplitTree>,
    },
}

impl SplitTree {
    /// Split edges in preorder.
    pub fn edges(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<VertexSet>) {
        if let SplitTree::Split {
            edge,
            deleted,
            contracted,
        } = self
        {
            out.push(*edge);
            deleted.collect(out);
            contracted.collect(out);
        }
    }
}

pub fn is_properly_splitted(c: &Hypergraph) -> Result<bool> {
    Ok(properly_splitted_witness(c)?.is_some())
}

/// Either the edgeless case, or an edge `F` with
/// `conn_h(Ind(C:F)) ≥ conn_h(Ind(C)) − |F| + 1` such that `C − F` and
/// `C:F` are properly-splitted.
pub fn properly_splitted_witness(c: &Hypergraph) -> Result<Option<SplitTree>> {
    let mut search = SplitSearch::default();
    search.run(c)
}

#[derive(Default)]
struct SplitSearch {
    verdicts: HashMap<Hypergraph, Option<SplitTree>>,
    conn: HashMap<Hypergraph, ExtInt>,
}

impl SplitSearch {
    fn conn_h(&mut self, c: &Hypergraph) -> Result<ExtInt> {
        if let Some(&k) = self.conn.get(c) {
            return Ok(k);
        }
        let k = conn_h(&independence_complex(c)?)?;
        self.conn.insert(c.clone(), k);
        Ok(k)
    }

    fn run(&mut self, c: &Hypergraph) -> Result<Option<SplitTree>> {
        if c.is_empty() {
            return Ok(Some(SplitTree::Leaf));
        }
        if let Some(v) = self.verdicts.get(c) {
            return Ok(v.clone());
        }
        let whole = self.conn_h(c)?;
        let mut found = None;
        for &f in c.edges() {
            let contracted = c.contract_unchecked(f);
            let needed = whole.shift(1 - f.len() as i64);
            if self.conn_h(&contracted)? < needed {
                continue;
            }
            let Some(dt) = self.run(&c.delete_edge_unchecked(f))? else { continue };
            let Some(ct) = self.run(&contracted)? else { continue };
            found = Some(SplitTree::Split {
                edge: f,
                deleted: Box::new(dt),
                contracted: Box::new(ct),
            });
            break;
        }
        self.verdicts.insert(c.clone(), found.clone());
        Ok(found)
    }
}
