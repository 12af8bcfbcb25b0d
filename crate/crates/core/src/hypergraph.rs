//! Hypergraphs and the two edge operations that drive every recursion in
//! this crate: deletion `C - F` and contraction `C : F`.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{canonicalize, minimal_sets, VertexSet, MAX_VERTICES};

/// A finite vertex set together with a family of pairwise incomparable
/// edges, each of cardinality at least two.
///
/// Edges are kept in canonical order (size, then lexicographic), so two
/// hypergraphs with the same vertices and edges compare and hash equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertices: VertexSet,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validates and canonicalizes a hypergraph.
    pub fn new(vertices: VertexSet, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            if e.len() < 2 {
                return Err(Error::EdgeTooSmall(e));
            }
            if !e.is_subset(vertices) {
                return Err(Error::EdgeOutsideVertexSet(e));
            }
        }
        edges.sort_by(VertexSet::canonical_cmp);
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    return Err(Error::ComparableEdges(a, b));
                }
            }
        }
        Ok(Hypergraph { vertices, edges })
    }

    /// Builds a hypergraph from raw vertex ids and raw edge lists.
    pub fn validate(raw_vertices: &[u64], raw_edges: &[Vec<u64>]) -> Result<Self> {
        let to_set = |ids: &[u64]| -> Result<VertexSet> {
            ids.iter()
                .map(|&v| {
                    if (v as usize) < MAX_VERTICES {
                        Ok(v as u32)
                    } else {
                        Err(Error::VertexOutOfRange(v))
                    }
                })
                .collect::<Result<Vec<u32>>>()
                .map(|ids| ids.into_iter().collect())
        };
        let vertices = to_set(raw_vertices)?;
        let edges = raw_edges
            .iter()
            .map(|e| to_set(e))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(vertices, edges)
    }

    /// Caller guarantees the invariants; edges are re-sorted.
    pub(crate) fn from_parts_unchecked(vertices: VertexSet, mut edges: Vec<VertexSet>) -> Self {
        canonicalize(&mut edges);
        debug_assert!(edges.iter().all(|e| e.len() >= 2 && e.is_subset(vertices)));
        Hypergraph { vertices, edges }
    }

    /// The hypergraph on `vertices` without edges.
    pub fn edgeless(vertices: VertexSet) -> Self {
        Hypergraph {
            vertices,
            edges: Vec::new(),
        }
    }

    /// Shorthand for tests and fixtures: vertex set is the union of the
    /// edges plus `extra`.
    pub fn from_edges(edges: &[&[u32]], extra: &[u32]) -> Result<Self> {
        let edges: Vec<VertexSet> = edges.iter().map(|e| e.iter().collect()).collect();
        let vertices = edges
            .iter()
            .fold(extra.iter().collect::<VertexSet>(), |acc, e| acc.union(*e));
        Hypergraph::new(vertices, edges)
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search_by(|x| x.canonical_cmp(&e)).is_ok()
    }

    fn require_edge(&self, f: VertexSet) -> Result<()> {
        if self.contains_edge(f) {
            Ok(())
        } else {
            Err(Error::EdgeNotPresent(f))
        }
    }

    /// The common edge size, if all edges have the same size. `None` for the
    /// edgeless hypergraph.
    pub fn uniformity(&self) -> Option<usize> {
        let d = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == d).then_some(d)
    }

    /// `C - F`.
    pub fn delete_edge(&self, f: VertexSet) -> Result<Hypergraph> {
        self.require_edge(f)?;
        Ok(self.delete_edge_unchecked(f))
    }

    pub(crate) fn delete_edge_unchecked(&self, f: VertexSet) -> Hypergraph {
        Hypergraph {
            vertices: self.vertices,
            edges: self.edges.iter().copied().filter(|&e| e != f).collect(),
        }
    }

    /// `N_C(F)`: the union of `E \ F` over edges `E` with `|E \ F| = 1`.
    pub fn neighbor_set(&self, f: VertexSet) -> Result<VertexSet> {
        self.require_edge(f)?;
        Ok(self.neighbor_set_unchecked(f))
    }

    pub(crate) fn neighbor_set_unchecked(&self, f: VertexSet) -> VertexSet {
        self.edges
            .iter()
            .map(|e| e.difference(f))
            .filter(|d| d.len() == 1)
            .fold(VertexSet::EMPTY, VertexSet::union)
    }

    /// `C : F`: the inclusion-minimal sets among `{E \ F : E ∈ C - F}` that
    /// have at least two vertices, on the vertex set `V \ (F ∪ N_C(F))`.
    pub fn contract(&self, f: VertexSet) -> Result<Hypergraph> {
        self.require_edge(f)?;
        Ok(self.contract_unchecked(f))
    }

    pub(crate) fn contract_unchecked(&self, f: VertexSet) -> Hypergraph {
        let residues: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|&&e| e != f)
            .map(|e| {
                let r = e.difference(f);
                debug_assert!(!r.is_empty(), "edge {e} contained in {f}");
                r
            })
            .collect();
        let neighbors = residues
            .iter()
            .filter(|r| r.len() == 1)
            .fold(VertexSet::EMPTY, |acc, r| acc.union(*r));
        // Singletons stay in the family until after minimality so that they
        // remove every residue through a neighbour.
        let edges: Vec<VertexSet> = minimal_sets(residues)
            .into_iter()
            .filter(|r| r.len() >= 2)
            .collect();
        Hypergraph {
            vertices: self.vertices.difference(f.union(neighbors)),
            edges,
        }
    }

    /// `C_A`: the edges of `C` contained in `A`, on the vertex set `A`.
    pub fn induced(&self, a: VertexSet) -> Result<Hypergraph> {
        if !a.is_subset(self.vertices) {
            return Err(Error::NotASubset(a));
        }
        Ok(self.induced_unchecked(a))
    }

    pub(crate) fn induced_unchecked(&self, a: VertexSet) -> Hypergraph {
        Hypergraph {
            vertices: a,
            edges: self.edges.iter().copied().filter(|e| e.is_subset(a)).collect(),
        }
    }

    /// The `d`-complete hypergraph on `a`: every `d`-subset is an edge.
    pub fn d_complete(a: VertexSet, d: usize) -> Result<Hypergraph> {
        if d < 2 {
            return Err(Error::InvalidArgument(format!(
                "d-complete hypergraphs need d >= 2, got {d}"
            )));
        }
        let mut edges = Vec::new();
        if a.len() >= d {
            let members: Vec<u32> = a.iter().collect();
            k_subsets(&members, d, &mut |s| edges.push(s));
        }
        Ok(Hypergraph::from_parts_unchecked(a, edges))
    }

    pub fn degree(&self, v: u32) -> Result<usize> {
        if !self.vertices.contains(v) {
            return Err(Error::VertexNotPresent(v));
        }
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// Maximal degree, with `Δ = 1` on the empty vertex set and `0` for a
    /// non-empty edgeless hypergraph.
    pub fn max_degree(&self) -> usize {
        if self.vertices.is_empty() {
            return 1;
        }
        self.vertices
            .iter()
            .map(|v| self.edges.iter().filter(|e| e.contains(v)).count())
            .max()
            .unwrap_or(0)
    }

    /// Vertices sharing at least one edge with `x`.
    pub fn vertex_neighborhood(&self, x: u32) -> Result<VertexSet> {
        if !self.vertices.contains(x) {
            return Err(Error::VertexNotPresent(x));
        }
        Ok(self.vertex_neighborhood_unchecked(x))
    }

    pub(crate) fn vertex_neighborhood_unchecked(&self, x: u32) -> VertexSet {
        self.edges
            .iter()
            .filter(|e| e.contains(x))
            .fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
            .without(x)
    }

    /// Vertices covered by no edge.
    pub fn isolated_vertices(&self) -> VertexSet {
        let covered = self
            .edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc.union(*e));
        self.vertices.difference(covered)
    }

    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let overlap = self.vertices.intersection(other.vertices);
        if !overlap.is_empty() {
            return Err(Error::OverlappingVertexSets(overlap));
        }
        let edges = self.edges.iter().chain(&other.edges).copied().collect();
        Ok(Hypergraph::from_parts_unchecked(
            self.vertices.union(other.vertices),
            edges,
        ))
    }

    /// Renames vertex `i` to `map[i]`. `map` must be injective on the
    /// vertex set.
    pub fn relabel(&self, map: &[u32]) -> Result<Hypergraph> {
        let image = |s: VertexSet| -> Result<VertexSet> {
            s.iter()
                .map(|v| {
                    map.get(v as usize)
                        .copied()
                        .ok_or(Error::VertexNotPresent(v))
                })
                .collect::<Result<Vec<u32>>>()
                .map(|ids| ids.into_iter().collect())
        };
        let vertices = image(self.vertices)?;
        if vertices.len() != self.vertices.len() {
            return Err(Error::InvalidArgument("relabelling is not injective".into()));
        }
        let edges = self.edges.iter().map(|&e| image(e)).collect::<Result<Vec<_>>>()?;
        Ok(Hypergraph::from_parts_unchecked(vertices, edges))
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph {{ V = {}, E = [", self.vertices)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "] }}")
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Calls `emit` for every `k`-subset of `items`.
pub(crate) fn k_subsets(items: &[u32], k: usize, emit: &mut impl FnMut(VertexSet)) {
    fn go(items: &[u32], k: usize, acc: VertexSet, emit: &mut impl FnMut(VertexSet)) {
        if k == 0 {
            emit(acc);
            return;
        }
        if items.len() < k {
            return;
        }
        go(&items[1..], k - 1, acc.with(items[0]), emit);
        go(&items[1..], k, acc, emit);
    }
    go(items, k, VertexSet::EMPTY, emit);
}
