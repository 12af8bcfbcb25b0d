//! The recursive connectivity bound ψ.
//!
//! `psi` answers threshold queries "is ψ(C) ≥ t?" over a table of proven
//! lower and upper bounds per hypergraph, which lets a refutation stop at
//! the first edge whose contraction is too small. The exact value is then
//! the largest threshold that holds. `psi_naive` evaluates the max-min
//! recursion literally and serves as an oracle.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::ext::ExtNat;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_PSI_BUDGET: u64 = 1_000_000;
pub const DEFAULT_NAIVE_BUDGET: u64 = 5_000_000;

const INF: u64 = u64::MAX;

fn to_ext(v: u64) -> ExtNat {
    if v == INF {
        ExtNat::Infinite
    } else {
        ExtNat::Finite(v)
    }
}

/// Result of an exact ψ evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiOutcome {
    pub value: ExtNat,
    /// An edge attaining the maximum, `None` for the base cases.
    pub argmax: Option<VertexSet>,
    /// Search nodes expanded.
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug)]
struct Bounds {
    lo: u64,
    hi: u64,
}

/// Memoized threshold search. Reusing one solver across related queries
/// keeps the bound table warm.
#[derive(Debug)]
pub struct PsiSolver {
    budget: u64,
    nodes: u64,
    table: FxHashMap<Hypergraph, Bounds>,
}

impl Default for PsiSolver {
    fn default() -> Self {
        Self::new(DEFAULT_PSI_BUDGET)
    }
}

impl PsiSolver {
    pub fn new(budget: u64) -> Self {
        PsiSolver {
            budget,
            nodes: 0,
            table: FxHashMap::default(),
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn cached(&self) -> usize {
        self.table.len()
    }

    pub fn psi(&mut self, c: &Hypergraph) -> Result<ExtNat> {
        if let Some(v) = base_value(c) {
            return Ok(to_ext(v));
        }
        // V ≠ ∅ gives ψ ≥ 1, and a finite ψ never exceeds |V|.
        let n = c.vertex_count() as u64;
        let mut value = 1;
        while value < n && self.at_least(c, value + 1)? {
            value += 1;
        }
        if value == n && self.at_least(c, INF)? {
            return Ok(ExtNat::Infinite);
        }
        Ok(ExtNat::Finite(value))
    }

    /// `ψ(C) ≥ t`, with `t` an extended threshold.
    pub fn psi_at_least(&mut self, c: &Hypergraph, t: ExtNat) -> Result<bool> {
        self.at_least(c, t.finite().unwrap_or(INF))
    }

    /// Exact value together with an edge attaining it.
    pub fn evaluate(&mut self, c: &Hypergraph) -> Result<PsiOutcome> {
        let start = self.nodes;
        let value = self.psi(c)?;
        let mut argmax = None;
        if base_value(c).is_none() {
            let t = value.finite().unwrap_or(INF);
            for &f in c.edges() {
                if self.at_least(&c.contract_unchecked(f), lower(t, f))?
                    && self.at_least(&c.delete_edge_unchecked(f), t)?
                {
                    argmax = Some(f);
                    break;
                }
            }
        }
        Ok(PsiOutcome {
            value,
            argmax,
            nodes: self.nodes - start,
        })
    }

    /// `min(ψ(C−F), ψ(C:F) + |F| − 1)` for one edge.
    pub fn branch_value(&mut self, c: &Hypergraph, f: VertexSet) -> Result<ExtNat> {
        if !c.contains_edge(f) {
            return Err(Error::EdgeNotPresent(f));
        }
        let deleted = self.psi(&c.delete_edge_unchecked(f))?;
        let contracted = self.psi(&c.contract_unchecked(f))? + (f.len() as u64 - 1);
        Ok(deleted.min(contracted))
    }

    fn at_least(&mut self, c: &Hypergraph, t: u64) -> Result<bool> {
        if t == 0 {
            return Ok(true);
        }
        if let Some(v) = base_value(c) {
            return Ok(v >= t);
        }
        let n = c.vertex_count() as u64;
        let t = if t > n { INF } else { t };
        if t == 1 {
            return Ok(true);
        }
        let mut bounds = self
            .table
            .get(c)
            .copied()
            .unwrap_or(Bounds { lo: 1, hi: INF });
        if bounds.lo >= t {
            return Ok(true);
        }
        if bounds.hi < t {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }

        let mut holds = false;
        if c.edges().iter().all(|&f| lower(t, f) <= 1) {
            holds = deletions_reach_base(c, t);
        } else {
            for &f in c.edges() {
            if !self.at_least(&c.contract_unchecked(f), lower(t, f))? {
                continue;
            }
                if self.at_least(&c.delete_edge_unchecked(f), t)? {
                    holds = true;
                    break;
                }
            }
        }
        if holds {
            bounds.lo = t;
        } else {
            // ψ < ∞ means ψ ≤ n.
            bounds.hi = if t == INF { n } else { t - 1 };
        }
        self.table.insert(c.clone(), bounds);
        Ok(holds)
    }
}

/// Threshold for the contraction branch: `t − |F| + 1`.
fn lower(t: u64, f: VertexSet) -> u64 {
    if t == INF {
        INF
    } else {
        t.saturating_sub(f.len() as u64 - 1)
    }
}

/// `ψ(C) ≥ t` when every edge has `t − |F| + 1 ≤ 1`. The contraction
/// side then only asks for `F ∪ N(F) ≠ V`, which stays true as edges are
/// deleted, so deleting admissible edges in any order reaches the same
/// final hypergraph and the question is whether it has an isolated vertex.
fn deletions_reach_base(c: &Hypergraph, t: u64) -> bool {
    let v = c.vertices();
    let mut edges = c.edges().to_vec();
    loop {
        let covered = edges.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e));
        if covered != v {
            return true;
        }
        let admissible = edges.iter().position(|&f| {
            lower(t, f) == 0 || {
                let reach = edges
                    .iter()
                    .map(|&e| e.difference(f))
                    .filter(|d| d.len() == 1)
                    .fold(f, VertexSet::union);
                reach != v
            }
        });
        match admissible {
            Some(i) => {
                edges.swap_remove(i);
            }
            None => return false,
        }
    }
}

/// ψ when it is determined without recursion. An isolated vertex lies in
/// no edge and no neighbourhood, so it survives every deletion and
/// contraction and every leaf of the recursion is infinite.
fn base_value(c: &Hypergraph) -> Option<u64> {
    if c.vertices().is_empty() {
        Some(0)
    } else if c.is_empty() || !c.isolated_vertices().is_empty() {
        Some(INF)
    } else {
        None
    }
}

/// ψ with the default budget.
pub fn psi(c: &Hypergraph) -> Result<ExtNat> {
    PsiSolver::default().psi(c)
}

pub fn psi_with_budget(c: &Hypergraph, budget: u64) -> Result<ExtNat> {
    PsiSolver::new(budget).psi(c)
}

/// Literal max-min recursion: no table, no pruning, no shortcuts.
pub fn psi_naive(c: &Hypergraph) -> Result<ExtNat> {
    psi_naive_with_budget(c, DEFAULT_NAIVE_BUDGET)
}

pub fn psi_naive_with_budget(c: &Hypergraph, budget: u64) -> Result<ExtNat> {
    let mut nodes = 0;
    naive(c, budget, &mut nodes)
}

fn naive(c: &Hypergraph, budget: u64, nodes: &mut u64) -> Result<ExtNat> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    if c.vertices().is_empty() {
        return Ok(ExtNat::ZERO);
    }
    if c.is_empty() {
        return Ok(ExtNat::Infinite);
    }
    let mut best = ExtNat::ZERO;
    for &f in c.edges() {
        let deleted = naive(&c.delete_edge_unchecked(f), budget, nodes)?;
        let contracted = naive(&c.contract_unchecked(f), budget, nodes)? + (f.len() as u64 - 1);
        best = best.max(deleted.min(contracted));
    }
    Ok(best)
}

/// `f(C) = ⌊(n − 1) / (2Δ) + 1⌋`, infinite for an edgeless hypergraph on a
/// nonempty vertex set and `0` on the empty vertex set.
pub fn degree_bound(c: &Hypergraph) -> ExtNat {
    let n = c.vertex_count() as u64;
    if n == 0 {
        return ExtNat::ZERO;
    }
    if c.is_empty() {
        return ExtNat::Infinite;
    }
    let delta = c.max_degree() as u64;
    ExtNat::Finite((n - 1 + 2 * delta) / (2 * delta))
}
