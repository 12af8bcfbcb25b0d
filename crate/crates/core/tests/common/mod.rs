//! Brute-force reference implementations used to cross-check the library.
//! Complexes are plain lists of faces as bitmasks over vertex ids.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use hyperconn::{ExtNat, Hypergraph, SimplicialComplex, VertexSet};

pub type Faces = BTreeSet<u64>;

fn subsets_of(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = Some(mask);
    std::iter::from_fn(move || {
        let s = sub?;
        sub = if s == 0 { None } else { Some((s - 1) & mask) };
        Some(s)
    })
}

/// Every subset of `V(C)` containing no edge.
pub fn independent_sets(c: &Hypergraph) -> Faces {
    let edges: Vec<u64> = c.edges().iter().map(|e| e.bits()).collect();
    subsets_of(c.vertices().bits())
        .filter(|&s| edges.iter().all(|&e| e & s != e))
        .collect()
}

/// Every face of a complex given by facets.
pub fn faces_of(delta: &SimplicialComplex) -> Faces {
    delta.facets().iter().flat_map(|f| subsets_of(f.bits())).collect()
}

pub fn link(faces: &Faces, sigma: u64) -> Faces {
    faces
        .iter()
        .filter(|&&t| t & sigma == 0 && faces.contains(&(t | sigma)))
        .copied()
        .collect()
}

pub fn join(a: &Faces, b: &Faces) -> Faces {
    a.iter().flat_map(|&x| b.iter().map(move |&y| x | y)).collect()
}

/// Inclusion-minimal subsets of `vertices` that are not faces.
pub fn minimal_nonfaces(faces: &Faces, vertices: u64) -> Vec<u64> {
    subsets_of(vertices)
        .filter(|&s| {
            !faces.contains(&s) && VertexSet::from_bits(s).iter().all(|v| faces.contains(&(s & !(1 << v))))
        })
        .collect()
}

/// `C:F` straight from the definition: `N` collects the single leftover
/// vertex of each edge with `|E \ F| = 1`, and the contraction keeps the
/// minimal sets among `E \ F` for edges avoiding `N`.
pub fn contraction(c: &Hypergraph, f: VertexSet) -> (u64, Vec<u64>) {
    let f = f.bits();
    let mut n = 0u64;
    for e in c.edges() {
        let rest = e.bits() & !f;
        if rest.count_ones() == 1 {
            n |= rest;
        }
    }
    let ground = c.vertices().bits() & !(f | n);
    let residues: Vec<u64> = c
        .edges()
        .iter()
        .map(|e| e.bits() & !f)
        .filter(|&r| r & !ground == 0 && r != 0)
        .collect();
    let mut minimal: Vec<u64> = residues
        .iter()
        .copied()
        .filter(|&r| !residues.iter().any(|&s| s != r && s & r == s))
        .collect();
    minimal.sort_unstable();
    minimal.dedup();
    (ground, minimal)
}

const PRIME: u64 = 1_000_003;

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else { continue };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let k = rows[r][col];
                for j in 0..cols {
                    rows[r][j] = (rows[r][j] + p * p - k * rows[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Reduced Betti numbers over `F_p`, indexed by dimension + 1. Trailing
/// zeros are trimmed.
pub fn reduced_betti_mod(faces: &Faces, p: u64) -> Vec<usize> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let by_size: Vec<Vec<u64>> = (0..=top + 1)
        .map(|k| faces.iter().copied().filter(|f| f.count_ones() as usize == k).collect())
        .collect();
    // boundary from size k to size k - 1
    let rank_of = |k: usize| -> usize {
        if k == 0 || k > top || by_size[k].is_empty() || by_size[k - 1].is_empty() {
            return 0;
        }
        let index = |f: u64| by_size[k - 1].binary_search(&f).expect("faces are closed");
        let rows: Vec<Vec<u64>> = by_size[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0u64; by_size[k - 1].len()];
                for (i, v) in VertexSet::from_bits(f).iter().enumerate() {
                    row[index(f & !(1 << v))] = if i % 2 == 0 { 1 } else { p - 1 };
                }
                row
            })
            .collect();
        rank_mod(rows, p)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(rank_of).collect();
    let mut betti: Vec<usize> = (0..=top)
        .map(|k| by_size[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect();
    while betti.last() == Some(&0) {
        betti.pop();
    }
    betti
}

/// Reduced Betti numbers over ℚ for complexes too small to carry
/// torsion of order `PRIME`.
pub fn reduced_betti(faces: &Faces) -> Vec<usize> {
    reduced_betti_mod(faces, PRIME)
}

/// Total domination number of a graph; `None` with an isolated vertex.
pub fn total_domination(c: &Hypergraph) -> Option<usize> {
    let v = c.vertices().bits();
    let open = |x: u32| -> u64 {
        c.edges()
            .iter()
            .filter(|e| e.contains(x))
            .fold(0, |acc, e| acc | e.bits())
            & !(1 << x)
    };
    subsets_of(v)
        .filter(|&s| VertexSet::from_bits(s).iter().fold(0, |acc, x| acc | open(x)) == v)
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Edge distance in a graph: BFS in its line graph.
pub fn line_graph_distance(c: &Hypergraph, f: VertexSet, g: VertexSet) -> ExtNat {
    let edges = c.edges();
    let start = edges.iter().position(|&e| e == f).expect("f is an edge");
    let mut dist = vec![usize::MAX; edges.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        if edges[i] == g {
            return ExtNat::Finite(dist[i] as u64);
        }
        for j in 0..edges.len() {
            if dist[j] == usize::MAX && !edges[i].is_disjoint(edges[j]) {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    ExtNat::Infinite
}

/// Chordality by repeated removal of simplicial vertices.
pub fn is_chordal(c: &Hypergraph) -> bool {
    let adjacent = |a: u32, b: u32| c.contains_edge([a, b].iter().collect());
    let mut alive: Vec<u32> = c.vertices().iter().collect();
    while !alive.is_empty() {
        let simplicial = alive.iter().position(|&v| {
            let nb: Vec<u32> = alive.iter().copied().filter(|&u| u != v && adjacent(u, v)).collect();
            nb.iter().all(|&a| nb.iter().all(|&b| a == b || adjacent(a, b)))
        });
        match simplicial {
            Some(i) => {
                alive.remove(i);
            }
            None => return false,
        }
    }
    true
}

pub fn ext_sum(a: ExtNat, b: ExtNat) -> ExtNat {
    match (a, b) {
        (ExtNat::Finite(x), ExtNat::Finite(y)) => ExtNat::Finite(x + y),
        _ => ExtNat::Infinite,
    }
}
