//! Domination parameters of complexes and hypergraphs.

use crate::complex::{independence_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ext::ExtNat;
use crate::hypergraph::{k_subsets, Hypergraph};
use crate::vertex_set::VertexSet;

/// Largest ground set the subset searches accept.
pub const MAX_SEARCH_VERTICES: usize = 24;
pub const MAX_SEARCH_EDGES: usize = 40;

/// Vertices `v` with a face `σ ⊆ A` such that `σ ∪ {v}` is not a face.
pub fn sp_tilde(delta: &SimplicialComplex, a: VertexSet) -> Result<VertexSet> {
    if !a.is_subset(delta.vertices()) {
        return Err(Error::NotASubset(a));
    }
    Ok(sp_tilde_unchecked(delta, a))
}

// Faces inside A are the subsets of the facets of Δ_A, and enlarging σ
// only makes σ ∪ {v} harder to be a face, so facets of Δ_A suffice.
fn sp_tilde_unchecked(delta: &SimplicialComplex, a: VertexSet) -> VertexSet {
    let traces: Vec<VertexSet> = {
        let mut t: Vec<VertexSet> = delta.facets().iter().map(|f| f.intersection(a)).collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    let mut out = VertexSet::EMPTY;
    for v in delta.vertices() {
        if traces
            .iter()
            .any(|&s| !s.contains(v) && !delta.contains_face(s.with(v)))
        {
            out.insert(v);
        }
    }
    out
}

/// Minimum `|A|` with `sp̃(A) = V` and the first such `A` in
/// size-then-lexicographic order.
pub fn gamma_tilde_witness(delta: &SimplicialComplex) -> Result<(ExtNat, Option<VertexSet>)> {
    let v = delta.vertices();
    if v.len() > MAX_SEARCH_VERTICES {
        return Err(Error::CapacityExceeded(format!(
            "domination search over {} vertices",
            v.len()
        )));
    }
    let items: Vec<u32> = v.iter().collect();
    for k in 0..=items.len() {
        let mut found = None;
        k_subsets(&items, k, &mut |a| {
            if found.is_none() && sp_tilde_unchecked(delta, a) == v {
                found = Some(a);
            }
        });
        if let Some(a) = found {
            return Ok((ExtNat::Finite(k as u64), Some(a)));
        }
    }
    Ok((ExtNat::Infinite, None))
}

pub fn gamma_tilde(delta: &SimplicialComplex) -> Result<ExtNat> {
    Ok(gamma_tilde_witness(delta)?.0)
}

/// `⌈γ̃(Ind(C)) / 2⌉`.
pub fn k_bound(c: &Hypergraph) -> Result<ExtNat> {
    Ok(gamma_tilde(&independence_complex(c)?)?.half_ceil())
}

/// Every non-isolated vertex lies in an edge of `family` or has a neighbour
/// that does.
pub fn is_edgewise_dominant(c: &Hypergraph, family: &[VertexSet]) -> Result<bool> {
    if let Some(&e) = family.iter().find(|&&e| !c.contains_edge(e)) {
        return Err(Error::NotSubfamily(e));
    }
    Ok(dominated(c, family) == c.vertices().difference(c.isolated_vertices()))
}

fn dominated(c: &Hypergraph, family: &[VertexSet]) -> VertexSet {
    let covered = family.iter().fold(VertexSet::EMPTY, |acc, &e| acc.union(e));
    let mut out = covered;
    for &e in c.edges() {
        if !e.is_disjoint(covered) {
            out = out.union(e);
        }
    }
    out
}

/// Smallest edgewise dominant subfamily size, with the first witness.
pub fn epsilon_witness(c: &Hypergraph) -> Result<(ExtNat, Vec<VertexSet>)> {
    if c.len() > MAX_SEARCH_EDGES {
        return Err(Error::CapacityExceeded(format!(
            "edgewise domination search over {} edges",
            c.len()
        )));
    }
    let target = c.vertices().difference(c.isolated_vertices());
    let idx: Vec<u32> = (0..c.len() as u32).collect();
    for k in 0..=c.len() {
        let mut found = None;
        k_subsets(&idx, k, &mut |s| {
            if found.is_none() {
                let family: Vec<VertexSet> = s.iter().map(|i| c.edges()[i as usize]).collect();
                if dominated(c, &family) == target {
                    found = Some(family);
                }
            }
        });
        if let Some(f) = found {
            return Ok((ExtNat::Finite(k as u64), f));
        }
    }
    unreachable!("the whole edge set is edgewise dominant")
}

pub fn epsilon(c: &Hypergraph) -> Result<ExtNat> {
    Ok(epsilon_witness(c)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> VertexSet {
        v.iter().collect()
    }

    fn hg(edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::from_edges(edges, &[]).unwrap()
    }

    fn c4() -> Hypergraph {
        hg(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1]])
    }

    #[test]
    fn sp_tilde_examples() {
        let ind = independence_complex(&c4()).unwrap();
        assert_eq!(sp_tilde(&ind, set(&[1, 2])).unwrap(), set(&[1, 2, 3, 4]));
        let simplex = SimplicialComplex::simplex(set(&[1, 2, 3]));
        assert_eq!(sp_tilde(&simplex, set(&[1, 2])).unwrap(), VertexSet::EMPTY);
        let s0 = SimplicialComplex::from_facets([set(&[1]), set(&[2])]).unwrap();
        assert_eq!(sp_tilde(&s0, set(&[1])).unwrap(), set(&[2]));
        assert_eq!(sp_tilde(&s0, set(&[7])), Err(Error::NotASubset(set(&[7]))));
    }

    #[test]
    fn gamma_tilde_examples() {
        assert_eq!(gamma_tilde(&independence_complex(&c4()).unwrap()).unwrap(), ExtNat::Finite(2));
        assert_eq!(gamma_tilde(&SimplicialComplex::simplex(set(&[1, 2]))).unwrap(), ExtNat::Infinite);
        let k3 = hg(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(gamma_tilde(&independence_complex(&k3).unwrap()).unwrap(), ExtNat::Finite(2));
    }

    #[test]
    fn k_bound_examples() {
        assert_eq!(k_bound(&c4()).unwrap(), ExtNat::Finite(1));
        assert_eq!(k_bound(&hg(&[&[1, 2]])).unwrap(), ExtNat::Finite(1));
        assert_eq!(k_bound(&Hypergraph::edgeless(set(&[1, 2]))).unwrap(), ExtNat::Infinite);
    }

    #[test]
    fn epsilon_examples() {
        let c = c4();
        assert!(is_edgewise_dominant(&c, &[set(&[1, 2])]).unwrap());
        assert_eq!(epsilon(&c).unwrap(), ExtNat::Finite(1));
        assert_eq!(epsilon(&Hypergraph::edgeless(set(&[1, 2]))).unwrap(), ExtNat::ZERO);
        assert_eq!(epsilon(&hg(&[&[1, 2], &[5, 6]])).unwrap(), ExtNat::Finite(2));
        assert_eq!(
            is_edgewise_dominant(&c, &[set(&[1, 3])]),
            Err(Error::NotSubfamily(set(&[1, 3])))
        );
    }
}
