//! Proper chains, edge distance, and the recognizers built on them:
//! properly-connected, splitting edges, decomposition vertices and
//! triangulated hypergraphs.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ext::ExtNat;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Largest edge count for chain searches (edge sets are `u128` masks).
pub const MAX_CHAIN_EDGES: usize = 128;
/// Largest edge count for the disjointness search (`u64` masks).
pub const MAX_DISJOINT_EDGES: usize = 64;
/// Vertex cap for the exhaustive triangulated check.
pub const DEFAULT_TRIANGULATED_VERTEX_LIMIT: usize = 16;

/// `(E_0, x_1, E_1, ..., x_n, E_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProperChain {
    pub edges: Vec<VertexSet>,
    pub pivots: Vec<u32>,
}

impl ProperChain {
    pub fn single(e: VertexSet) -> Self {
        ProperChain {
            edges: vec![e],
            pivots: Vec::new(),
        }
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }
}

/// Pairwise distances certifying that `edges` are pairwise `t`-disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointnessCertificate {
    pub edges: Vec<VertexSet>,
    pub t: u64,
    pub distances: Vec<(VertexSet, VertexSet, ExtNat)>,
}

fn is_step(a: VertexSet, b: VertexSet) -> bool {
    a.intersection(b).len() + 1 == b.len()
}

fn require_edges(c: &Hypergraph, edges: &[VertexSet]) -> Result<()> {
    match edges.iter().find(|&&e| !c.contains_edge(e)) {
        Some(&e) => Err(Error::EdgeNotPresent(e)),
        None => Ok(()),
    }
}

fn distinct<T: Ord + Copy>(xs: impl Iterator<Item = T>) -> bool {
    let mut v: Vec<T> = xs.collect();
    let n = v.len();
    v.sort_unstable();
    v.dedup();
    v.len() == n
}

pub fn is_proper_chain(c: &Hypergraph, chain: &ProperChain) -> Result<bool> {
    require_edges(c, &chain.edges)?;
    Ok(proper_unchecked(chain))
}

fn proper_unchecked(chain: &ProperChain) -> bool {
    let e = &chain.edges;
    if e.is_empty() || chain.pivots.len() + 1 != e.len() {
        return false;
    }
    if !distinct(e.iter().copied()) || !distinct(chain.pivots.iter().copied()) {
        return false;
    }
    e.windows(2).zip(&chain.pivots).all(|(w, &x)| {
        w[0].contains(x) && w[1].contains(x) && is_step(w[0], w[1])
    })
}

/// Whether an edge sequence admits distinct pivots `x_i ∈ E_{i-1} ∩ E_i`
/// and satisfies the step condition; returns such pivots.
pub fn pivots_for(edges: &[VertexSet]) -> Option<Vec<u32>> {
    if edges.is_empty() || !distinct(edges.iter().copied()) {
        return None;
    }
    if !edges.windows(2).all(|w| is_step(w[0], w[1])) {
        return None;
    }
    let slots: Vec<VertexSet> = edges.windows(2).map(|w| w[0].intersection(w[1])).collect();
    distinct_representatives(&slots)
}

/// A system of distinct representatives by augmenting paths.
fn distinct_representatives(slots: &[VertexSet]) -> Option<Vec<u32>> {
    let mut owner: HashMap<u32, usize> = HashMap::new();
    let mut pick = vec![u32::MAX; slots.len()];
    fn augment(
        i: usize,
        slots: &[VertexSet],
        seen: &mut VertexSet,
        owner: &mut HashMap<u32, usize>,
        pick: &mut [u32],
    ) -> bool {
        for x in slots[i] {
            if seen.contains(x) {
                continue;
            }
            seen.insert(x);
            let free = match owner.get(&x) {
                None => true,
                Some(&j) => augment(j, slots, seen, owner, pick),
            };
            if free {
                owner.insert(x, i);
                pick[i] = x;
                return true;
            }
        }
        false
    }
    for i in 0..slots.len() {
        let mut seen = VertexSet::EMPTY;
        if !augment(i, slots, &mut seen, &mut owner, &mut pick) {
            return None;
        }
    }
    Some(pick)
}

/// Proper, and no strict subsequence from `E_0` to `E_n` is a proper chain
/// for any choice of pivots.
pub fn is_irredundant(c: &Hypergraph, chain: &ProperChain) -> Result<bool> {
    require_edges(c, &chain.edges)?;
    if !proper_unchecked(chain) {
        return Ok(false);
    }
    Ok(!has_shortcut(&chain.edges, None))
}

/// Some strict subsequence keeping both ends is a proper chain. With
/// `within`, its pivots must also be drawn from that set.
fn has_shortcut(edges: &[VertexSet], within: Option<VertexSet>) -> bool {
    let n = edges.len();
    if n <= 2 {
        return false;
    }
    let interior = n - 2;
    let full = (1u64 << interior) - 1;
    (0..full).any(|mask| {
        let mut sub = vec![edges[0]];
        sub.extend((0..interior).filter(|i| mask >> i & 1 == 1).map(|i| edges[i + 1]));
        sub.push(edges[n - 1]);
        if !sub.windows(2).all(|w| is_step(w[0], w[1])) {
            return false;
        }
        let slots: Vec<VertexSet> = sub
            .windows(2)
            .map(|w| {
                let s = w[0].intersection(w[1]);
                within.map_or(s, |p| s.intersection(p))
            })
            .collect();
        distinct_representatives(&slots).is_some()
    })
}

/// Precomputed step graph of a hypergraph.
struct StepGraph<'a> {
    edges: &'a [VertexSet],
    next: Vec<Vec<usize>>,
}

impl<'a> StepGraph<'a> {
    fn new(c: &'a Hypergraph) -> Result<Self> {
        let edges = c.edges();
        if edges.len() > MAX_CHAIN_EDGES {
            return Err(Error::CapacityExceeded(format!(
                "chain search over {} edges",
                edges.len()
            )));
        }
        let next = edges
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                (0..edges.len())
                    .filter(|&j| j != i && is_step(a, edges[j]))
                    .collect()
            })
            .collect();
        Ok(StepGraph { edges, next })
    }

    fn index(&self, e: VertexSet) -> Result<usize> {
        self.edges
            .binary_search_by(|x| x.canonical_cmp(&e))
            .map_err(|_| Error::EdgeNotPresent(e))
    }

    /// Step counts to `target` ignoring pivots; a lower bound on chain length.
    fn relaxed_distances(&self, target: usize) -> Vec<usize> {
        let m = self.edges.len();
        let mut prev: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (i, ns) in self.next.iter().enumerate() {
            for &j in ns {
                prev[j].push(i);
            }
        }
        let mut dist = vec![usize::MAX; m];
        dist[target] = 0;
        let mut queue = VecDeque::from([target]);
        while let Some(j) = queue.pop_front() {
            for &i in &prev[j] {
                if dist[i] == usize::MAX {
                    dist[i] = dist[j] + 1;
                    queue.push_back(i);
                }
            }
        }
        dist
    }

    /// Shortest proper chain from `from` to `to` with at most `cap` steps.
    fn shortest(&self, from: usize, to: usize, cap: usize) -> Option<ProperChain> {
        if from == to {
            return Some(ProperChain::single(self.edges[from]));
        }
        let h = self.relaxed_distances(to);
        if h[from] == usize::MAX || h[from] > cap {
            return None;
        }
        let mut bound = h[from];
        loop {
            let mut path = vec![from];
            let mut pivots = Vec::new();
            let mut cut = false;
            if self.deepen(&h, to, bound, 1u128 << from, VertexSet::EMPTY, &mut path, &mut pivots, &mut cut) {
                return Some(ProperChain {
                    edges: path.iter().map(|&i| self.edges[i]).collect(),
                    pivots,
                });
            }
            if !cut || bound >= cap {
                return None;
            }
            bound += 1;
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn deepen(
        &self,
        h: &[usize],
        to: usize,
        bound: usize,
        used: u128,
        used_pivots: VertexSet,
        path: &mut Vec<usize>,
        pivots: &mut Vec<u32>,
        cut: &mut bool,
    ) -> bool {
        let cur = *path.last().expect("path starts with the source");
        let steps = path.len() - 1;
        for &j in &self.next[cur] {
            if used >> j & 1 == 1 || h[j] == usize::MAX {
                continue;
            }
            if steps + 1 + h[j] > bound {
                *cut = true;
                continue;
            }
            let shared = self.edges[cur].intersection(self.edges[j]).difference(used_pivots);
            for x in shared {
                path.push(j);
                pivots.push(x);
                if j == to
                    || self.deepen(h, to, bound, used | 1u128 << j, used_pivots.with(x), path, pivots, cut)
                {
                    return true;
                }
                path.pop();
                pivots.pop();
            }
        }
        false
    }
}

/// Length of a shortest proper chain from `f` to `g`; a shortest one is
/// irredundant because any proper subsequence would be shorter.
pub fn edge_distance(c: &Hypergraph, f: VertexSet, g: VertexSet) -> Result<ExtNat> {
    Ok(edge_distance_witness(c, f, g)?.0)
}

pub fn edge_distance_witness(
    c: &Hypergraph,
    f: VertexSet,
    g: VertexSet,
) -> Result<(ExtNat, Option<ProperChain>)> {
    let sg = StepGraph::new(c)?;
    let (i, j) = (sg.index(f)?, sg.index(g)?);
    Ok(match sg.shortest(i, j, usize::MAX) {
        Some(ch) => (ExtNat::Finite(ch.len() as u64), Some(ch)),
        None => (ExtNat::Infinite, None),
    })
}

/// Common edge size, `None` when there are no edges.
pub fn uniform_size(c: &Hypergraph) -> Result<Option<usize>> {
    if c.is_empty() {
        return Ok(None);
    }
    c.uniformity().map(Some).ok_or(Error::NotUniform)
}

/// `d`-uniform with `dist(F, G) = d − |F ∩ G|` whenever `F ∩ G ≠ ∅`.
pub fn is_properly_connected(c: &Hypergraph) -> Result<bool> {
    Ok(properly_connected_witness(c)?.is_none())
}

/// The first intersecting pair violating the distance law, if any.
pub fn properly_connected_witness(c: &Hypergraph) -> Result<Option<(VertexSet, VertexSet)>> {
    let Some(d) = uniform_size(c)? else { return Ok(None) };
    let sg = StepGraph::new(c)?;
    let e = c.edges();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let common = e[i].intersection(e[j]).len();
            // Each step replaces one vertex, so no chain is shorter than d − |F ∩ G|.
            if common > 0 && sg.shortest(i, j, d - common).is_none() {
                return Ok(Some((e[i], e[j])));
            }
        }
    }
    Ok(None)
}

fn require_properly_connected(c: &Hypergraph) -> Result<Option<usize>> {
    let d = uniform_size(c)?;
    if !is_properly_connected(c)? {
        return Err(Error::NotProperlyConnected);
    }
    Ok(d)
}

/// Maximum number of pairwise `t`-disjoint edges.
pub fn c_max_disjoint(c: &Hypergraph, t: u64) -> Result<usize> {
    Ok(c_max_disjoint_certificate(c, t)?.edges.len())
}

pub fn c_max_disjoint_certificate(c: &Hypergraph, t: u64) -> Result<DisjointnessCertificate> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let m = c.len();
    if m > MAX_DISJOINT_EDGES {
        return Err(Error::CapacityExceeded(format!("disjointness search over {m} edges")));
    }
    let sg = StepGraph::new(c)?;
    let cap = usize::try_from(t - 1).unwrap_or(usize::MAX);
    let mut conflict = vec![0u64; m];
    for i in 0..m {
        for j in i + 1..m {
            if sg.shortest(i, j, cap).is_some() {
                conflict[i] |= 1 << j;
                conflict[j] |= 1 << i;
            }
        }
    }
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut best = 0u64;
    max_independent(&conflict, 0, all, &mut best);
    let chosen: Vec<usize> = (0..m).filter(|&i| best >> i & 1 == 1).collect();
    let mut distances = Vec::new();
    for (a, &i) in chosen.iter().enumerate() {
        for &j in &chosen[a + 1..] {
            let d = sg
                .shortest(i, j, usize::MAX)
                .map_or(ExtNat::Infinite, |ch| ExtNat::Finite(ch.len() as u64));
            distances.push((c.edges()[i], c.edges()[j], d));
        }
    }
    Ok(DisjointnessCertificate {
        edges: chosen.iter().map(|&i| c.edges()[i]).collect(),
        t,
        distances,
    })
}

fn max_independent(adj: &[u64], current: u64, candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    max_independent(adj, current | 1 << v, candidates & !adj[v] & !(1 << v), best);
    max_independent(adj, current, candidates & !(1 << v), best);
}

/// Some `z ∈ F` has `(F \ {z}) ∪ {x} ∈ C` for every `x ∈ N_C(F)`.
pub fn is_splitting_edge(c: &Hypergraph, f: VertexSet) -> Result<bool> {
    Ok(splitting_vertex(c, f)?.is_some())
}

/// A vertex `z` witnessing that `f` is a splitting edge.
pub fn splitting_vertex(c: &Hypergraph, f: VertexSet) -> Result<Option<u32>> {
    let n = c.neighbor_set(f)?;
    require_properly_connected(c)?;
    Ok(f.iter()
        .find(|&z| n.iter().all(|x| c.contains_edge(f.without(z).with(x)))))
}

/// `{G ∈ C : dist(F, G) ≥ d + 1}` on `V \ (F ∪ N_C(F))`.
pub fn hypergraph_geq(c: &Hypergraph, f: VertexSet) -> Result<Hypergraph> {
    let n = c.neighbor_set(f)?;
    let d = require_properly_connected(c)?.expect("hypergraph has the edge f");
    let sg = StepGraph::new(c)?;
    let i = sg.index(f)?;
    let edges: Vec<VertexSet> = (0..c.len())
        .filter(|&j| j != i && sg.shortest(i, j, d).is_none())
        .map(|j| c.edges()[j])
        .collect();
    Hypergraph::new(c.vertices().difference(f.union(n)), edges)
        .map_err(|_| Error::NotProperlyConnected)
}

/// Reading of "appears at most twice" used by the chain condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Occurrence {
    /// `v` lies in at most two edges of the chain.
    #[default]
    EdgeMembership,
    /// `v` is used as a pivot at most twice (trivially true, pivots are
    /// distinct); kept for comparison.
    Pivot,
}

/// Searches for a proper irredundant chain in which `v` lies in at least
/// three edges.
pub fn chain_violation(c: &Hypergraph, v: u32, max_len: usize) -> Result<Option<ProperChain>> {
    let sg = StepGraph::new(c)?;
    let mut search = ViolationSearch {
        sg: &sg,
        v,
        max_len,
        path: Vec::new(),
        pivots: Vec::new(),
    };
    for start in 0..c.len() {
        search.path = vec![start];
        search.pivots.clear();
        if search.extend(1u128 << start, VertexSet::EMPTY) {
            return Ok(Some(ProperChain {
                edges: search.path.iter().map(|&i| sg.edges[i]).collect(),
                pivots: search.pivots.clone(),
            }));
        }
    }
    Ok(None)
}

struct ViolationSearch<'a, 'b> {
    sg: &'b StepGraph<'a>,
    v: u32,
    max_len: usize,
    path: Vec<usize>,
    pivots: Vec<u32>,
}

impl ViolationSearch<'_, '_> {
    fn edges(&self) -> Vec<VertexSet> {
        self.path.iter().map(|&i| self.sg.edges[i]).collect()
    }

    fn extend(&mut self, used: u128, used_pivots: VertexSet) -> bool {
        if self.pivots.len() >= self.max_len {
            return false;
        }
        let cur = *self.path.last().expect("nonempty path");
        for &j in &self.sg.next[cur] {
            if used >> j & 1 == 1 {
                continue;
            }
            let shared = self.sg.edges[cur]
                .intersection(self.sg.edges[j])
                .difference(used_pivots);
            for x in shared {
                self.path.push(j);
                self.pivots.push(x);
                let pivots = used_pivots.with(x);
                let edges = self.edges();
                // A shortcut using only pivots of this prefix splices into
                // every extension, so none of them is irredundant.
                if !has_shortcut(&edges, Some(pivots)) {
                    let hits = edges.iter().filter(|e| e.contains(self.v)).count();
                    if hits >= 3 && !has_shortcut(&edges, None) {
                        return true;
                    }
                    if self.extend(used | 1u128 << j, pivots) {
                        return true;
                    }
                }
                self.path.pop();
                self.pivots.pop();
            }
        }
        false
    }
}

/// `C_{N(v)}` is the complete `d`-uniform hypergraph on `N(v)`.
fn has_complete_neighborhood(c: &Hypergraph, v: u32, d: usize) -> bool {
    let nb = c.vertex_neighborhood_unchecked(v);
    let induced = c.induced_unchecked(nb);
    let expected = Hypergraph::d_complete(nb, d).expect("d is at least two");
    induced == expected
}

/// `v` has a complete neighbourhood and satisfies the chain condition.
pub fn is_decomposition_vertex(c: &Hypergraph, v: u32, occurrence: Occurrence) -> Result<bool> {
    if !c.vertices().contains(v) {
        return Err(Error::VertexNotPresent(v));
    }
    let d = uniform_size(c)?;
    decomposition_unchecked(c, v, d, occurrence)
}

fn decomposition_unchecked(
    c: &Hypergraph,
    v: u32,
    d: Option<usize>,
    occurrence: Occurrence,
) -> Result<bool> {
    let Some(d) = d else { return Ok(true) };
    if !has_complete_neighborhood(c, v, d) {
        return Ok(false);
    }
    Ok(match occurrence {
        Occurrence::Pivot => true,
        Occurrence::EdgeMembership => chain_violation(c, v, c.len())?.is_none(),
    })
}

/// Smallest vertex with a complete neighbourhood that lies in at most two
/// edges of every proper irredundant chain.
pub fn find_decomposition_vertex(c: &Hypergraph) -> Result<Option<u32>> {
    find_decomposition_vertex_with(c, Occurrence::EdgeMembership)
}

pub fn find_decomposition_vertex_with(
    c: &Hypergraph,
    occurrence: Occurrence,
) -> Result<Option<u32>> {
    let d = require_properly_connected(c)?;
    first_decomposition_vertex(c, d, occurrence)
}

pub(crate) fn first_decomposition_vertex(
    c: &Hypergraph,
    d: Option<usize>,
    occurrence: Occurrence,
) -> Result<Option<u32>> {
    for v in c.vertices() {
        if decomposition_unchecked(c, v, d, occurrence)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Every nonempty induced subhypergraph has a decomposition vertex.
pub fn is_triangulated(c: &Hypergraph) -> Result<bool> {
    Ok(triangulated_witness(c, DEFAULT_TRIANGULATED_VERTEX_LIMIT, Occurrence::EdgeMembership)?
        .is_none())
}

/// The first vertex subset `A` (by bitmask) whose induced subhypergraph has
/// no decomposition vertex, if any.
pub fn triangulated_witness(
    c: &Hypergraph,
    vertex_limit: usize,
    occurrence: Occurrence,
) -> Result<Option<VertexSet>> {
    let d = require_properly_connected(c)?;
    let n = c.vertex_count();
    if n > vertex_limit {
        return Err(Error::CapacityExceeded(format!(
            "triangulated check over {n} vertices (limit {vertex_limit})"
        )));
    }
    let mut seen: HashSet<Vec<VertexSet>> = HashSet::new();
    for a in c.vertices().subsets() {
        if a.is_empty() {
            continue;
        }
        let sub = c.induced_unchecked(a);
        // An isolated vertex is always a decomposition vertex.
        if !sub.isolated_vertices().is_empty() || !seen.insert(sub.edges().to_vec()) {
            continue;
        }
        if first_decomposition_vertex(&sub, d, occurrence)?.is_none() {
            return Ok(Some(a));
        }
    }
    Ok(None)
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
    fn proper_chain_examples() {
        let c = hg(&[&[1, 2, 3], &[2, 3, 4]]);
        let chain = |x| ProperChain {
            edges: vec![set(&[1, 2, 3]), set(&[2, 3, 4])],
            pivots: vec![x],
        };
        assert!(is_proper_chain(&c, &chain(2)).unwrap());
        assert!(!is_proper_chain(&c, &chain(4)).unwrap());
        assert!(is_proper_chain(&c, &ProperChain::single(set(&[1, 2, 3]))).unwrap());
        let d = hg(&[&[1, 2, 3], &[3, 4, 5]]);
        let bad = ProperChain {
            edges: vec![set(&[1, 2, 3]), set(&[3, 4, 5])],
            pivots: vec![3],
        };
        assert!(!is_proper_chain(&d, &bad).unwrap());
        assert_eq!(
            is_proper_chain(&c, &ProperChain::single(set(&[1, 4]))),
            Err(Error::EdgeNotPresent(set(&[1, 4])))
        );
    }

    #[test]
    fn irredundancy() {
        let k3 = hg(&[&[1, 2], &[2, 3], &[1, 3]]);
        let long = ProperChain {
            edges: vec![set(&[1, 2]), set(&[2, 3]), set(&[1, 3])],
            pivots: vec![2, 3],
        };
        assert!(is_proper_chain(&k3, &long).unwrap());
        assert!(!is_irredundant(&k3, &long).unwrap());
        let p = hg(&[&[1, 2], &[2, 3], &[3, 4]]);
        let path = ProperChain {
            edges: vec![set(&[1, 2]), set(&[2, 3]), set(&[3, 4])],
            pivots: vec![2, 3],
        };
        assert!(is_irredundant(&p, &path).unwrap());
    }

    #[test]
    fn distances() {
        let c = hg(&[&[1, 2, 3], &[2, 3, 4]]);
        assert_eq!(edge_distance(&c, set(&[1, 2, 3]), set(&[2, 3, 4])).unwrap(), ExtNat::Finite(1));
        assert_eq!(edge_distance(&c, set(&[1, 2, 3]), set(&[1, 2, 3])).unwrap(), ExtNat::ZERO);
        let far = hg(&[&[1, 2], &[3, 4]]);
        assert_eq!(edge_distance(&far, set(&[1, 2]), set(&[3, 4])).unwrap(), ExtNat::Infinite);
        let p5 = hg(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]);
        let (d, w) = edge_distance_witness(&p5, set(&[1, 2]), set(&[4, 5])).unwrap();
        assert_eq!(d, ExtNat::Finite(3));
        assert!(is_irredundant(&p5, &w.unwrap()).unwrap());
    }

    #[test]
    fn properly_connected_examples() {
        assert!(is_properly_connected(&c4()).unwrap());
        assert!(!is_properly_connected(&hg(&[&[1, 2, 3], &[3, 4, 5]])).unwrap());
        let closed = hg(&[&[1, 2, 3], &[1, 2, 4], &[1, 4, 5], &[2, 4, 5]]);
        assert!(is_properly_connected(&closed).unwrap());
        assert_eq!(is_properly_connected(&hg(&[&[1, 2], &[2, 3, 4]])), Err(Error::NotUniform));
    }

    #[test]
    fn disjointness() {
        assert_eq!(c_max_disjoint(&hg(&[&[1, 2], &[3, 4]]), 3).unwrap(), 2);
        assert_eq!(c_max_disjoint(&hg(&[&[1, 2]]), 3).unwrap(), 1);
        assert_eq!(c_max_disjoint(&hg(&[&[1, 2], &[2, 3], &[3, 4]]), 3).unwrap(), 1);
        let cert = c_max_disjoint_certificate(&hg(&[&[1, 2], &[3, 4]]), 3).unwrap();
        assert!(cert.distances.iter().all(|&(_, _, d)| d >= ExtNat::Finite(3)));
    }

    #[test]
    fn splitting_edges() {
        let star = hg(&[&[1, 2], &[1, 3], &[1, 4]]);
        assert!(is_splitting_edge(&star, set(&[1, 2])).unwrap());
        assert!(!is_splitting_edge(&c4(), set(&[1, 2])).unwrap());
        assert!(is_splitting_edge(&hg(&[&[1, 2]]), set(&[1, 2])).unwrap());
    }

    #[test]
    fn geq_subhypergraph() {
        let p5 = hg(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]);
        let g = hypergraph_geq(&p5, set(&[1, 2])).unwrap();
        assert_eq!(g.edges(), &[set(&[4, 5])]);
        assert_eq!(g, p5.contract(set(&[1, 2])).unwrap());
        assert!(hypergraph_geq(&hg(&[&[1, 2]]), set(&[1, 2])).unwrap().is_empty());
    }

    #[test]
    fn triangulated_examples() {
        assert!(!is_triangulated(&c4()).unwrap());
        let k3 = hg(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(is_triangulated(&k3).unwrap());
        assert_eq!(find_decomposition_vertex(&k3).unwrap(), Some(1));
        let tree = hg(&[&[1, 2], &[2, 3], &[2, 4], &[4, 5]]);
        assert!(is_triangulated(&tree).unwrap());
        assert_eq!(find_decomposition_vertex(&c4()).unwrap(), None);
    }
}
