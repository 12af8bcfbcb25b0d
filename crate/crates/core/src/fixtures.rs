//! Named example hypergraphs and complexes.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Facets of a ℤ-acyclic but non-contractible complex on ten vertices.
pub const LUTZ_FACETS: [[u32; 3]; 31] = [
    [1, 2, 4], [1, 2, 5], [1, 3, 6], [1, 3, 8], [1, 3, 10], [1, 4, 8], [1, 4, 9], [1, 5, 7],
    [1, 5, 10], [1, 6, 7], [1, 6, 9], [2, 3, 5], [2, 3, 7], [2, 3, 8], [2, 4, 6], [2, 4, 10],
    [2, 6, 7], [2, 6, 8], [2, 8, 10], [3, 5, 6], [3, 5, 9], [3, 7, 9], [3, 7, 10], [4, 5, 6],
    [4, 5, 7], [4, 5, 8], [4, 7, 9], [4, 7, 10], [5, 8, 9], [5, 8, 10], [6, 8, 9],
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Hypergraph(Hypergraph),
    Complex(SimplicialComplex),
}

pub const FIXTURE_NAMES: &[&str] = &[
    "lutz-acyclic",
    "c4",
    "c5",
    "path(n)",
    "complete(n,d)",
    "counterexample(k)",
];

pub fn lutz_acyclic() -> SimplicialComplex {
    SimplicialComplex::from_facets(LUTZ_FACETS.iter().map(|f| f.iter().collect()))
        .expect("fixture facets are nonempty")
}

/// Cycle graph on `1..=n`, `n >= 3`.
pub fn cycle(n: u32) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges = (1..=n).map(|i| [i, i % n + 1].iter().collect());
    Hypergraph::new(VertexSet::from_iter(1..=n), edges)
}

/// Path graph on `1..=n`.
pub fn path(n: u32) -> Result<Hypergraph> {
    check_range(n)?;
    let edges = (1..n).map(|i| [i, i + 1].iter().collect());
    Hypergraph::new(VertexSet::from_iter(1..=n), edges)
}

/// All `d`-subsets of `1..=n`.
pub fn complete(n: u32, d: usize) -> Result<Hypergraph> {
    check_range(n)?;
    let items: Vec<u32> = (1..=n).collect();
    Hypergraph::d_complete(items.iter().collect(), d)
}

/// The family `C(Δ) ∪ {F} ∪ C^z` over the acyclic fixture, where
/// `F = {1, 11, ..., 9 + k}` meets the fixture in `z = 1` and `C^z` joins
/// every other fixture vertex to every new vertex of `F`.
pub fn build_counterexample_family(k: u32) -> Result<Hypergraph> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("counterexample needs k >= 3, got {k}")));
    }
    check_range(9 + k)?;
    let base = lutz_acyclic().minimal_nonfaces();
    let fresh: Vec<u32> = (11..=9 + k).collect();
    let mut edges = base.edges().to_vec();
    edges.push(VertexSet::singleton(1).union(fresh.iter().collect()));
    for x in 2..=10 {
        for &y in &fresh {
            edges.push([x, y].iter().collect());
        }
    }
    Hypergraph::new(VertexSet::from_iter(1..=9 + k), edges)
}

fn check_range(n: u32) -> Result<()> {
    if n as usize >= crate::vertex_set::MAX_VERTICES {
        Err(Error::CapacityExceeded(format!("{n} vertices")))
    } else {
        Ok(())
    }
}

/// Resolves `lutz-acyclic`, `c4`, `c5`, `cycle(n)`, `path(n)`,
/// `complete(n,d)` and `counterexample(k)`.
pub fn fixture(name: &str) -> Result<Fixture> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let name = name.trim();
    match name {
        "lutz-acyclic" => return Ok(Fixture::Complex(lutz_acyclic())),
        "c4" => return cycle(4).map(Fixture::Hypergraph),
        "c5" => return cycle(5).map(Fixture::Hypergraph),
        _ => {}
    }
    let (head, rest) = name.split_once('(').ok_or_else(unknown)?;
    let args: Vec<u32> = rest
        .strip_suffix(')')
        .ok_or_else(unknown)?
        .split(',')
        .map(|a| a.trim().parse::<u32>().map_err(|_| unknown()))
        .collect::<Result<_>>()?;
    let h = match (head.trim(), args.as_slice()) {
        ("cycle", &[n]) => cycle(n)?,
        ("path", &[n]) => path(n)?,
        ("complete", &[n, d]) => complete(n, d as usize)?,
        ("counterexample", &[k]) => build_counterexample_family(k)?,
        _ => return Err(unknown()),
    };
    Ok(Fixture::Hypergraph(h))
}
