//! Simplicial complexes stored by their facets, independence complexes and
//! the standard operations on complexes.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{canonicalize, maximal_sets, VertexSet};

/// Default vertex limit for face enumeration.
pub const DEFAULT_COMPLEX_VERTEX_LIMIT: usize = 25;

/// A simplicial complex given by its facets.
///
/// The vertex set is the union of the facets, so every vertex is a face.
/// The complex `{∅}` has the single facet `∅`; the void complex (no faces at
/// all) cannot be represented.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    pub fn from_facets(facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let facets = maximal_sets(facets.into_iter().collect());
        if facets.is_empty() {
            return Err(Error::VoidComplex);
        }
        let vertices = facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        Ok(SimplicialComplex { vertices, facets })
    }

    /// `{∅}`, the complex whose only face is the empty set.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            vertices: VertexSet::EMPTY,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `vertices` (or `{∅}` when `vertices` is empty).
    pub fn simplex(vertices: VertexSet) -> Self {
        SimplicialComplex {
            vertices,
            facets: vec![vertices],
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_empty_face_complex(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    pub fn contains_face(&self, sigma: VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// True when a vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        let common = self
            .facets
            .iter()
            .fold(self.vertices, |acc, f| acc.intersection(*f));
        !common.is_empty()
    }

    /// Every face, including `∅`, grouped by dimension: index `k` holds the
    /// faces with `k` vertices. Faces within a group are sorted.
    pub fn faces_by_size(&self, limit: usize) -> Result<Vec<Vec<VertexSet>>> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s) && seen.len() > limit {
                    return Err(Error::CapacityExceeded(format!(
                        "complex has more than {limit} faces"
                    )));
                }
            }
        }
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); top + 1];
        for s in seen {
            by_size[s.len()].push(s);
        }
        for group in &mut by_size {
            group.sort();
        }
        Ok(by_size)
    }

    /// `Δ_U`, the faces contained in `U`.
    pub fn induced_subcomplex(&self, u: VertexSet) -> Result<SimplicialComplex> {
        if !u.is_subset(self.vertices) {
            return Err(Error::NotASubset(u));
        }
        SimplicialComplex::from_facets(self.facets.iter().map(|f| f.intersection(u)))
    }

    /// `link_Δ(σ) = {τ ∈ Δ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`.
    pub fn link(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::NotAFace(sigma));
        }
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .filter(|f| sigma.is_subset(**f))
                .map(|f| f.difference(sigma)),
        )
    }

    /// `del_Δ(σ) = {τ ∈ Δ : σ ⊄ τ}`. Deleting `∅` leaves the void complex,
    /// which is reported as an error.
    pub fn deletion(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::NotAFace(sigma));
        }
        let mut out = Vec::new();
        for &f in &self.facets {
            if sigma.is_subset(f) {
                out.extend(sigma.iter().map(|x| f.without(x)));
            } else {
                out.push(f);
            }
        }
        SimplicialComplex::from_facets(out)
    }

    /// Join of complexes on disjoint vertex sets.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let overlap = self.vertices.intersection(other.vertices);
        if !overlap.is_empty() {
            return Err(Error::OverlappingVertexSets(overlap));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(*b));
            }
        }
        canonicalize(&mut facets);
        Ok(SimplicialComplex {
            vertices: self.vertices.union(other.vertices),
            facets,
        })
    }

    /// Union of two complexes (as face sets).
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets.iter().chain(&other.facets).copied())
            .expect("union of non-void complexes is non-void")
    }

    /// The hypergraph `C(Δ)` of inclusion-minimal non-faces, on the vertex
    /// set of `Δ`.
    pub fn minimal_nonfaces(&self) -> Hypergraph {
        // A minimal non-face N is σ ∪ {v} with σ = N \ {max N} a face and
        // v > max σ; enumerate faces and test each extension.
        let mut out = Vec::new();
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            for sigma in f.subsets() {
                if !seen.insert(sigma) {
                    continue;
                }
                let above = match sigma.max() {
                    Some(m) => self.vertices.difference(VertexSet::range(m as usize + 1)),
                    None => self.vertices,
                };
                for v in above.iter() {
                    let n = sigma.with(v);
                    if !self.contains_face(n)
                        && n.iter().all(|x| self.contains_face(n.without(x)))
                    {
                        out.push(n);
                    }
                }
            }
        }
        Hypergraph::from_parts_unchecked(self.vertices, out)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex {{ V = {}, facets = [", self.vertices)?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "] }}")
    }
}

/// `Ind(C)` with the default vertex limit.
pub fn independence_complex(c: &Hypergraph) -> Result<SimplicialComplex> {
    independence_complex_with_limit(c, DEFAULT_COMPLEX_VERTEX_LIMIT)
}

/// `Ind(C)`: the complex of vertex sets containing no edge, returned by its
/// facets (the maximal independent sets).
pub fn independence_complex_with_limit(c: &Hypergraph, limit: usize) -> Result<SimplicialComplex> {
    if c.vertex_count() > limit {
        return Err(Error::CapacityExceeded(format!(
            "independence complex on {} vertices (limit {limit})",
            c.vertex_count()
        )));
    }
    let order: Vec<u32> = c.vertices().iter().collect();
    let mut facets = Vec::new();
    let mut search = MisSearch {
        order: &order,
        edges: c.edges(),
        out: &mut facets,
    };
    search.go(0, VertexSet::EMPTY, VertexSet::EMPTY);
    if facets.is_empty() {
        facets.push(VertexSet::EMPTY);
    }
    canonicalize(&mut facets);
    Ok(SimplicialComplex {
        vertices: c.vertices(),
        facets,
    })
}

struct MisSearch<'a> {
    order: &'a [u32],
    edges: &'a [VertexSet],
    out: &'a mut Vec<VertexSet>,
}

impl MisSearch<'_> {
    /// `chosen` is independent; `excluded` vertices must end up blocked.
    fn go(&mut self, i: usize, chosen: VertexSet, excluded: VertexSet) {
        if i == self.order.len() {
            let maximal = excluded
                .iter()
                .all(|v| self.blocked(v, chosen));
            if maximal {
                self.out.push(chosen);
            }
            return;
        }
        let v = self.order[i];
        let with_v = chosen.with(v);
        if !self.edges.iter().any(|e| e.contains(v) && e.is_subset(with_v)) {
            self.go(i + 1, with_v, excluded);
        }
        // Excluding v only helps if some edge through v can still be
        // completed by chosen and not-yet-decided vertices.
        let reachable = chosen.union(self.order[i + 1..].iter().collect());
        if self
            .edges
            .iter()
            .any(|e| e.contains(v) && e.without(v).is_subset(reachable))
        {
            self.go(i + 1, chosen, excluded.with(v));
        }
    }

    fn blocked(&self, v: u32, chosen: VertexSet) -> bool {
        self.edges
            .iter()
            .any(|e| e.contains(v) && e.without(v).is_subset(chosen))
    }
}
