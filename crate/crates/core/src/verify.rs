//! Exhaustive and randomized checks of the connectivity, domination and
//! homotopy-type theorems over generated instance pools.
//!
//! Instances are generated sequentially from one seeded stream and then
//! evaluated independently (in parallel with the `parallel` feature), so a
//! seed always yields the same report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chains::{
    c_max_disjoint, find_decomposition_vertex, hypergraph_geq, is_properly_connected,
    is_splitting_edge, is_triangulated, uniform_size,
};
use crate::complex::{independence_complex, SimplicialComplex};
use crate::domination::{epsilon, gamma_tilde};
use crate::error::{Error, Result};
use crate::ext::ExtNat;
use crate::fixtures::complete;
use crate::generate::{grown_uniform, RandomModel};
use crate::graphs::{all_chordal_graphs, all_graphs, SmallGraph};
use crate::homology::{reduced_homology, HomologyProfile};
use crate::homotopy::{homotopy_type_triangulated, is_properly_splitted, max_dimension_bound};
use crate::hypergraph::Hypergraph;
use crate::io::{hypergraph_document, hypergraph_from_document, HypergraphDocument, Labels};
use crate::psi::{
    degree_bound, psi_naive_with_budget, psi_with_budget, DEFAULT_NAIVE_BUDGET, DEFAULT_PSI_BUDGET,
};
use crate::vertex_set::VertexSet;

pub const PSI_BUDGET_VAR: &str = "HYPERCONN_PSI_BUDGET";
pub const NAIVE_BUDGET_VAR: &str = "HYPERCONN_NAIVE_BUDGET";

/// Node budgets for the ψ solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub psi_budget: u64,
    pub naive_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            psi_budget: DEFAULT_PSI_BUDGET,
            naive_budget: DEFAULT_NAIVE_BUDGET,
        }
    }
}

impl Limits {
    /// Defaults overridden by `HYPERCONN_PSI_BUDGET` and
    /// `HYPERCONN_NAIVE_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let read = |var: &str, default: u64| -> Result<u64> {
            match std::env::var(var) {
                Ok(v) => v.trim().parse().map_err(|_| {
                    Error::InvalidArgument(format!("{var} must be a non-negative integer, got `{v}`"))
                }),
                Err(_) => Ok(default),
            }
        };
        Ok(Limits {
            psi_budget: read(PSI_BUDGET_VAR, DEFAULT_PSI_BUDGET)?,
            naive_budget: read(NAIVE_BUDGET_VAR, DEFAULT_NAIVE_BUDGET)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Psi,
    Bound,
    Structure,
    MayerVietoris,
    Join,
    Domination,
    ProperlyConnected,
    Triangulated,
    Splitted,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Psi,
        Suite::Bound,
        Suite::Structure,
        Suite::MayerVietoris,
        Suite::Join,
        Suite::Domination,
        Suite::ProperlyConnected,
        Suite::Triangulated,
        Suite::Splitted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Psi => "psi",
            Suite::Bound => "bound",
            Suite::Structure => "structure",
            Suite::MayerVietoris => "mayer-vietoris",
            Suite::Join => "join",
            Suite::Domination => "domination",
            Suite::ProperlyConnected => "properly-connected",
            Suite::Triangulated => "triangulated",
            Suite::Splitted => "splitted",
        }
    }

    /// Comma-separated suite names, or `all`.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::InvalidArgument("no suites selected".into()));
        }
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The individual statements being checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// The memoized ψ solver agrees with the literal recursion.
    PsiAgreement,
    /// `conn_h(Ind C) ≥ ψ(C) − 2`.
    ConnectivityBound,
    /// `Ind(C:F) = link_{Ind(C−F)}(F)`.
    ContractionIsLink,
    /// `Ind(C−F) = Ind(C) ∪ (F̄ * Ind(C:F))`.
    DeletionDecomposition,
    /// `|C−F| = |C| − 1` and `|C:F| ≤ |C| − 1`.
    EdgeCounts,
    /// `β_i(Ind C) ≤ β_i(Ind(C−F)) + β_{i−|F|+1}(Ind(C:F))`.
    MayerVietoris,
    /// ψ of the minimal non-faces of a join is the sum of the ψ values.
    JoinAdditivity,
    /// `γ̃(Ind C) · Δ(C) ≥ |V|`.
    GammaVertexBound,
    /// `conn_h(Ind C) ≥ ⌈γ̃/2⌉ − 2`.
    GammaConnectivity,
    /// `conn_h(Ind C) ≥ ε(C) − 2`.
    EpsilonConnectivity,
    /// `⌈γ̃/2⌉`, `ε` and the degree bound are at most ψ.
    BoundsBelowPsi,
    /// For graphs, γ̃ of the independence complex is the total domination number.
    TotalDomination,
    /// `C:F` equals the induced subhypergraph on `V \ (F ∪ N(F))` and the
    /// edges at distance at least `d + 1`.
    ContractionIdentities,
    /// `c_C ≥ c_{C:F} + 1`.
    DisjointnessDrop,
    /// `C:F` is properly-connected.
    ContractionProperlyConnected,
    /// The synthesized wedge has the Betti numbers of `Ind C` and there is
    /// no torsion.
    WedgeMatchesHomology,
    /// Sphere dimensions are at most `(d − 1)c_C − 1`.
    SphereDimensionBound,
    /// `ψ = conn_h + 2` on triangulated hypergraphs.
    TriangulatedPsi,
    /// Edges through a decomposition vertex are splitting edges.
    SplittingEdges,
    /// Triangulated hypergraphs are properly-splitted.
    TriangulatedSplitted,
    /// Both implications between `conn_h` of `C`, `C−F` and `C:F`.
    ContractionConnectivity,
    /// `ψ = conn_h + 2` on properly-splitted hypergraphs.
    SplittedPsi,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::PsiAgreement => "psi-agreement",
            Theorem::ConnectivityBound => "connectivity-bound",
            Theorem::ContractionIsLink => "contraction-is-link",
            Theorem::DeletionDecomposition => "deletion-decomposition",
            Theorem::EdgeCounts => "edge-counts",
            Theorem::MayerVietoris => "mayer-vietoris",
            Theorem::JoinAdditivity => "join-additivity",
            Theorem::GammaVertexBound => "gamma-vertex-bound",
            Theorem::GammaConnectivity => "gamma-connectivity",
            Theorem::EpsilonConnectivity => "epsilon-connectivity",
            Theorem::BoundsBelowPsi => "bounds-below-psi",
            Theorem::TotalDomination => "total-domination",
            Theorem::ContractionIdentities => "contraction-identities",
            Theorem::DisjointnessDrop => "disjointness-drop",
            Theorem::ContractionProperlyConnected => "contraction-properly-connected",
            Theorem::WedgeMatchesHomology => "wedge-matches-homology",
            Theorem::SphereDimensionBound => "sphere-dimension-bound",
            Theorem::TriangulatedPsi => "triangulated-psi",
            Theorem::SplittingEdges => "splitting-edges",
            Theorem::TriangulatedSplitted => "triangulated-splitted",
            Theorem::ContractionConnectivity => "contraction-connectivity",
            Theorem::SplittedPsi => "splitted-psi",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// A resource limit stopped the check.
    Skip(String),
    Fail(String),
}

fn judge(ok: bool, details: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(details())
    }
}

/// Resource errors become skips; anything else is a failure.
fn guarded(f: impl FnOnce() -> Result<Verdict>) -> Verdict {
    match f() {
        Ok(v) => v,
        Err(e) if e.is_resource_error() => Verdict::Skip(e.to_string()),
        Err(e) => Verdict::Fail(format!("unexpected error: {e}")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pool {
    /// All graphs up to isomorphism.
    Graphs,
    /// All chordal graphs up to isomorphism.
    ChordalGraphs,
    /// Mixed 2- and 3-edges, at most five edges.
    SmallMixed,
    /// Random 3-uniform hypergraphs.
    Uniform3,
    /// Random hypergraphs, uniform of size 2 or 3.
    Random,
    /// Pairs with at most four edges each, on disjoint vertex sets.
    JoinPairs,
    /// Grown 3-uniform hypergraphs that are properly-connected.
    GrownConnected,
    /// Grown 3-uniform hypergraphs that are also triangulated.
    GrownTriangulated,
}

impl Pool {
    pub fn name(self) -> &'static str {
        match self {
            Pool::Graphs => "graphs",
            Pool::ChordalGraphs => "chordal-graphs",
            Pool::SmallMixed => "small-mixed",
            Pool::Uniform3 => "random-3-uniform",
            Pool::Random => "random",
            Pool::JoinPairs => "join-pairs",
            Pool::GrownConnected => "grown-properly-connected",
            Pool::GrownTriangulated => "grown-triangulated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub pool: Pool,
    pub hypergraph: Hypergraph,
    /// Second operand for the join checks.
    pub partner: Option<Hypergraph>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_vertices: usize,
    pub samples: usize,
    pub suites: Vec<Suite>,
    pub edge_probability: f64,
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            max_vertices: 7,
            samples: 200,
            suites: Suite::ALL.to_vec(),
            edge_probability: 0.3,
            limits: Limits::default(),
        }
    }
}

/// Outcome counts for one theorem.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

impl Tally {
    fn record(&mut self, v: &Verdict) {
        self.checked += 1;
        match v {
            Verdict::Pass => self.passed += 1,
            Verdict::Skip(_) => self.skipped += 1,
            Verdict::Fail(_) => self.failed += 1,
        }
    }
}

/// A failing check with everything needed to rerun it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub theorem: Theorem,
    pub suite: Suite,
    pub pool: Pool,
    pub instance: HypergraphDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<HypergraphDocument>,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub max_vertices: usize,
    pub samples: usize,
    pub suites: Vec<Suite>,
    /// Instances evaluated per suite and pool, keyed `suite/pool`.
    pub instances: BTreeMap<String, u64>,
    pub tallies: BTreeMap<Theorem, Tally>,
    pub first_counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.first_counterexample.is_none()
    }

    pub fn total_failures(&self) -> u64 {
        self.tallies.values().map(|t| t.failed).sum()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suites: Vec<&str> = self.suites.iter().map(|s| s.name()).collect();
        writeln!(
            f,
            "seed {}, max vertices {}, samples {}, suites {}",
            self.seed,
            self.max_vertices,
            self.samples,
            suites.join(",")
        )?;
        writeln!(f, "instances:")?;
        for (k, n) in &self.instances {
            writeln!(f, "  {k:<44} {n:>6}")?;
        }
        writeln!(
            f,
            "{:<32} {:>8} {:>8} {:>8} {:>8}",
            "theorem", "checked", "passed", "failed", "skipped"
        )?;
        for (t, c) in &self.tallies {
            writeln!(
                f,
                "{:<32} {:>8} {:>8} {:>8} {:>8}",
                t.name(),
                c.checked,
                c.passed,
                c.failed,
                c.skipped
            )?;
        }
        match &self.first_counterexample {
            None => write!(f, "result: all checks passed"),
            Some(cx) => write!(
                f,
                "result: {} failure(s); first: {} in suite {} on {}: {}",
                self.total_failures(),
                cx.theorem,
                cx.suite,
                cx.pool.name(),
                cx.details
            ),
        }
    }
}

/// Builds the instance pools for `config`, in a fixed order.
pub fn generate(config: &VerifyConfig) -> Vec<(Suite, Instance)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.max_vertices.max(1);
    let m = config.samples;
    let p = config.edge_probability;
    let pool = |pool, hypergraph| Instance {
        pool,
        hypergraph,
        partner: None,
    };

    // Every pool is drawn even when its suites are not selected, so a seed
    // means the same instances whatever the suite selection.
    let graphs: Vec<Hypergraph> = all_graphs(n.min(6)).iter().map(SmallGraph::to_hypergraph).collect();
    let chordal: Vec<Hypergraph> = all_chordal_graphs(n.min(7))
        .iter()
        .map(SmallGraph::to_hypergraph)
        .collect();
    let small = RandomModel {
        max_vertices: n,
        edge_sizes: vec![2, 3],
        edge_probability: p,
        max_edges: Some(5),
    };
    let small_mixed: Vec<Hypergraph> = (0..3 * m).map(|_| small.sample(&mut rng)).collect();
    let uniform3 = RandomModel::uniform(n, 3, p);
    let uniform: Vec<Hypergraph> = (0..m.div_ceil(2) * 3).map(|_| uniform3.sample(&mut rng)).collect();
    let random: Vec<Hypergraph> = (0..m.div_ceil(2) * 3)
        .map(|_| {
            let d = rng.gen_range(2..=3);
            RandomModel::uniform(n, d, p).sample(&mut rng)
        })
        .collect();
    let pair_model = RandomModel {
        max_edges: Some(4),
        ..small.clone()
    };
    let pairs: Vec<(Hypergraph, Hypergraph)> = (0..m.div_ceil(2))
        .map(|_| {
            let a = pair_model.sample(&mut rng);
            let b = pair_model.sample(&mut rng);
            (a, b)
        })
        .collect();
    let (grown_connected, grown_triangulated) = grown_pools(&mut rng, n, m.div_ceil(4));

    let mut out = Vec::new();
    for &suite in &config.suites {
        match suite {
            Suite::Psi => out.extend(small_mixed.iter().map(|c| (suite, pool(Pool::SmallMixed, c.clone())))),
            Suite::Bound | Suite::Domination => {
                out.extend(graphs.iter().map(|c| (suite, pool(Pool::Graphs, c.clone()))));
                out.extend(uniform.iter().map(|c| (suite, pool(Pool::Uniform3, c.clone()))));
            }
            Suite::Structure | Suite::MayerVietoris => {
                out.extend(random.iter().map(|c| (suite, pool(Pool::Random, c.clone()))))
            }
            Suite::Join => out.extend(pairs.iter().map(|(a, b)| {
                (
                    suite,
                    Instance {
                        pool: Pool::JoinPairs,
                        hypergraph: a.clone(),
                        partner: Some(b.clone()),
                    },
                )
            })),
            Suite::ProperlyConnected => {
                out.extend(graphs.iter().map(|c| (suite, pool(Pool::Graphs, c.clone()))));
                out.extend(
                    grown_connected
                        .iter()
                        .map(|c| (suite, pool(Pool::GrownConnected, c.clone()))),
                );
            }
            Suite::Triangulated => {
                out.extend(chordal.iter().map(|c| (suite, pool(Pool::ChordalGraphs, c.clone()))));
                out.extend(
                    grown_triangulated
                        .iter()
                        .map(|c| (suite, pool(Pool::GrownTriangulated, c.clone()))),
                );
            }
            Suite::Splitted => {
                let small_enough = |c: &&Hypergraph| c.len() <= SPLIT_SEARCH_EDGES;
                out.extend(
                    graphs
                        .iter()
                        .filter(small_enough)
                        .map(|c| (suite, pool(Pool::Graphs, c.clone()))),
                );
                out.extend(
                    chordal
                        .iter()
                        .filter(small_enough)
                        .map(|c| (suite, pool(Pool::ChordalGraphs, c.clone()))),
                );
                out.extend(
                    grown_triangulated
                        .iter()
                        .filter(small_enough)
                        .map(|c| (suite, pool(Pool::GrownTriangulated, c.clone()))),
                );
                out.extend(random.iter().map(|c| (suite, pool(Pool::Random, c.clone()))));
            }
        }
    }
    out
}

/// Edge count above which the properly-splitted search is not attempted.
const SPLIT_SEARCH_EDGES: usize = 10;

/// 3-complete hypergraphs first, then grown ones, until `target`
/// triangulated instances are found or attempts run out.
fn grown_pools(rng: &mut ChaCha8Rng, n: usize, target: usize) -> (Vec<Hypergraph>, Vec<Hypergraph>) {
    let mut connected = Vec::new();
    let mut triangulated = Vec::new();
    if n < 3 {
        return (connected, triangulated);
    }
    let top = n.min(10);
    let mut candidates: Vec<Hypergraph> = (3..=top.min(6) as u32)
        .map(|k| complete(k, 3).expect("k >= 3"))
        .collect();
    let mut attempts = 0;
    while triangulated.len() < target && attempts < 40 * target.max(1) {
        let c = match candidates.pop() {
            Some(c) => c,
            None => {
                attempts += 1;
                let v = rng.gen_range(3..=top);
                grown_uniform(rng, 3, v)
            }
        };
        if connected.contains(&c) || !matches!(is_properly_connected(&c), Ok(true)) {
            continue;
        }
        if matches!(is_triangulated(&c), Ok(true)) {
            triangulated.push(c.clone());
        }
        connected.push(c);
    }
    (connected, triangulated)
}

/// Runs the checks of `suite` on one instance.
pub fn check_instance(suite: Suite, inst: &Instance, limits: &Limits) -> Vec<(Theorem, Verdict)> {
    let c = &inst.hypergraph;
    match suite {
        Suite::Psi => vec![(Theorem::PsiAgreement, check_psi_agreement(c, limits))],
        Suite::Bound => vec![(Theorem::ConnectivityBound, check_bound(c, limits))],
        Suite::Structure => check_structure(c),
        Suite::MayerVietoris => check_mayer_vietoris(c),
        Suite::Join => {
            let partner = inst.partner.clone().unwrap_or_else(|| Hypergraph::edgeless(VertexSet::EMPTY));
            vec![(Theorem::JoinAdditivity, check_join(c, &partner, limits))]
        }
        Suite::Domination => check_domination(c, limits),
        Suite::ProperlyConnected => check_properly_connected(c),
        Suite::Triangulated => check_triangulated(c, limits),
        Suite::Splitted => check_splitted(inst, limits),
    }
}

fn ind_homology(c: &Hypergraph) -> Result<HomologyProfile> {
    reduced_homology(&independence_complex(c)?)
}

fn check_psi_agreement(c: &Hypergraph, limits: &Limits) -> Verdict {
    guarded(|| {
        let fast = psi_with_budget(c, limits.psi_budget)?;
        let slow = psi_naive_with_budget(c, limits.naive_budget)?;
        Ok(judge(fast == slow, || format!("psi = {fast}, literal recursion = {slow}")))
    })
}

fn check_bound(c: &Hypergraph, limits: &Limits) -> Verdict {
    guarded(|| {
        let conn = ind_homology(c)?.conn_h();
        let psi = psi_with_budget(c, limits.psi_budget)?;
        Ok(judge(conn >= psi.minus(2), || format!("conn_h = {conn}, psi = {psi}")))
    })
}

fn check_structure(c: &Hypergraph) -> Vec<(Theorem, Verdict)> {
    let ind = match independence_complex(c) {
        Ok(ind) => ind,
        Err(e) => {
            let v = guarded(|| Err(e));
            return vec![
                (Theorem::ContractionIsLink, v.clone()),
                (Theorem::DeletionDecomposition, v.clone()),
                (Theorem::EdgeCounts, v),
            ];
        }
    };
    let mut out = Vec::new();
    for &f in c.edges() {
        let del = c.delete_edge(f).expect("f is an edge");
        let con = c.contract(f).expect("f is an edge");
        let complexes = independence_complex(&del).and_then(|d| Ok((d, independence_complex(&con)?)));
        out.push((
            Theorem::ContractionIsLink,
            guarded(|| {
                let (ind_del, ind_con) = complexes.clone()?;
                let link = ind_del.link(f)?;
                Ok(judge(link == ind_con, || {
                    format!("F = {f}: link = {:?}, Ind(C:F) = {:?}", link.facets(), ind_con.facets())
                }))
            }),
        ));
        out.push((
            Theorem::DeletionDecomposition,
            guarded(|| {
                let (ind_del, ind_con) = complexes.clone()?;
                let rhs = ind.union(&SimplicialComplex::simplex(f).join(&ind_con)?);
                Ok(judge(rhs == ind_del, || {
                    format!("F = {f}: union = {:?}, Ind(C-F) = {:?}", rhs.facets(), ind_del.facets())
                }))
            }),
        ));
        out.push((
            Theorem::EdgeCounts,
            judge(del.len() + 1 == c.len() && con.len() < c.len(), || {
                format!("F = {f}: |C| = {}, |C-F| = {}, |C:F| = {}", c.len(), del.len(), con.len())
            }),
        ));
    }
    out
}

fn check_mayer_vietoris(c: &Hypergraph) -> Vec<(Theorem, Verdict)> {
    let whole = ind_homology(c);
    c.edges()
        .iter()
        .map(|&f| {
            let v = guarded(|| {
                let h = whole.clone()?;
                let hd = ind_homology(&c.delete_edge(f)?)?;
                let hc = ind_homology(&c.contract(f)?)?;
                let shift = f.len() as i64 - 1;
                let bad = (-1..=h.top_dim()).find(|&i| h.betti(i) > hd.betti(i) + hc.betti(i - shift));
                Ok(judge(bad.is_none(), || {
                    let i = bad.unwrap_or_default();
                    format!(
                        "F = {f}, i = {i}: {} > {} + {}",
                        h.betti(i),
                        hd.betti(i),
                        hc.betti(i - shift)
                    )
                }))
            });
            (Theorem::MayerVietoris, v)
        })
        .collect()
}

/// Shifts `b` onto vertices above those of `a`.
fn disjoint_copy(a: &Hypergraph, b: &Hypergraph) -> Result<Hypergraph> {
    let offset = a.vertices().max().map_or(0, |m| m + 1);
    let top = b.vertices().max().map_or(0, |m| m + 1);
    let map: Vec<u32> = (0..top).map(|v| v + offset).collect();
    b.relabel(&map)
}

fn check_join(a: &Hypergraph, b: &Hypergraph, limits: &Limits) -> Verdict {
    guarded(|| {
        let b = disjoint_copy(a, b)?;
        let joined = independence_complex(a)?
            .join(&independence_complex(&b)?)?
            .minimal_nonfaces();
        let lhs = psi_with_budget(&joined, limits.psi_budget)?;
        let pa = psi_with_budget(a, limits.psi_budget)?;
        let pb = psi_with_budget(&b, limits.psi_budget)?;
        Ok(judge(lhs == pa + pb, || {
            format!("psi(join) = {lhs}, psi(C1) = {pa}, psi(C2) = {pb}")
        }))
    })
}

fn check_domination(c: &Hypergraph, limits: &Limits) -> Vec<(Theorem, Verdict)> {
    let ind = independence_complex(c);
    let conn = ind.clone().and_then(|i| reduced_homology(&i)).map(|h| h.conn_h());
    let gamma = ind.clone().and_then(|i| gamma_tilde(&i));
    let eps = epsilon(c);
    let psi = psi_with_budget(c, limits.psi_budget);
    let n = c.vertex_count() as u64;
    let delta = c.max_degree() as u64;
    let mut out = vec![
        (
            Theorem::GammaVertexBound,
            guarded(|| {
                let g = gamma.clone()?;
                let ok = g.finite().is_none_or(|g| g * delta >= n);
                Ok(judge(ok, || format!("gamma = {g}, max degree = {delta}, n = {n}")))
            }),
        ),
        (
            Theorem::GammaConnectivity,
            guarded(|| {
                let (conn, k) = (conn.clone()?, gamma.clone()?.half_ceil());
                Ok(judge(conn >= k.minus(2), || format!("conn_h = {conn}, k = {k}")))
            }),
        ),
        (
            Theorem::EpsilonConnectivity,
            guarded(|| {
                let (conn, e) = (conn.clone()?, eps.clone()?);
                Ok(judge(conn >= e.minus(2), || format!("conn_h = {conn}, epsilon = {e}")))
            }),
        ),
        (
            Theorem::BoundsBelowPsi,
            guarded(|| {
                let (k, e, p) = (gamma.clone()?.half_ceil(), eps.clone()?, psi.clone()?);
                let deg = degree_bound(c);
                Ok(judge(k <= p && e <= p && deg <= p, || {
                    format!("k = {k}, epsilon = {e}, degree bound = {deg}, psi = {p}")
                }))
            }),
        ),
    ];
    if let Some(g) = SmallGraph::from_hypergraph(c) {
        out.push((
            Theorem::TotalDomination,
            guarded(|| {
                let ours = gamma.clone()?;
                let oracle = g
                    .total_domination_number()
                    .map_or(ExtNat::Infinite, |t| ExtNat::Finite(t as u64));
                Ok(judge(ours == oracle, || format!("gamma = {ours}, total domination = {oracle}")))
            }),
        ));
    }
    out
}

fn check_properly_connected(c: &Hypergraph) -> Vec<(Theorem, Verdict)> {
    let d = match uniform_size(c) {
        Ok(Some(d)) => d as u64,
        // Edgeless: nothing to contract.
        Ok(None) => return Vec::new(),
        Err(e) => return vec![(Theorem::ContractionIdentities, guarded(|| Err(e)))],
    };
    let whole = c_max_disjoint(c, d + 1);
    let mut out = Vec::new();
    for &f in c.edges() {
        let con = c.contract(f).expect("f is an edge");
        out.push((
            Theorem::ContractionIdentities,
            guarded(|| {
                let rest = c.vertices().difference(f.union(c.neighbor_set(f)?));
                let induced = c.induced(rest)?;
                let geq = hypergraph_geq(c, f)?;
                Ok(judge(con == induced && con == geq, || {
                    format!("F = {f}: C:F = {con}, induced = {induced}, distance >= d+1 = {geq}")
                }))
            }),
        ));
        out.push((
            Theorem::DisjointnessDrop,
            guarded(|| {
                let (cc, cf) = (whole.clone()?, c_max_disjoint(&con, d + 1)?);
                Ok(judge(cc > cf, || format!("F = {f}: c_C = {cc}, c_(C:F) = {cf}")))
            }),
        ));
        out.push((
            Theorem::ContractionProperlyConnected,
            guarded(|| Ok(judge(is_properly_connected(&con)?, || format!("F = {f}: C:F = {con}")))),
        ));
    }
    out
}

fn check_triangulated(c: &Hypergraph, limits: &Limits) -> Vec<(Theorem, Verdict)> {
    let homology = ind_homology(c);
    let wedge = homotopy_type_triangulated(c);
    let mut out = vec![
        (
            Theorem::WedgeMatchesHomology,
            guarded(|| {
                let (h, t) = (homology.clone()?, wedge.clone()?);
                let profile = t.betti_profile();
                let top = h.top_dim().max(profile.len() as i64 - 2);
                let same = (-1..=top).all(|i| h.betti(i) == profile.get((i + 1) as usize).copied().unwrap_or(0));
                Ok(judge(same && !h.has_torsion(), || {
                    let groups: Vec<String> = h.iter().map(|(i, g)| format!("H{i} = {g}")).collect();
                    format!("wedge {t}, homology {}", groups.join(", "))
                }))
            }),
        ),
        (
            Theorem::SphereDimensionBound,
            guarded(|| {
                let (t, bound) = (wedge.clone()?, max_dimension_bound(c)?);
                Ok(judge(t.dims().iter().all(|&k| k <= bound), || {
                    format!("wedge {t}, bound {bound}")
                }))
            }),
        ),
        (
            Theorem::TriangulatedPsi,
            guarded(|| {
                let conn = homology.clone()?.conn_h();
                let psi = psi_with_budget(c, limits.psi_budget)?;
                Ok(judge(psi.minus(2) == conn, || format!("psi = {psi}, conn_h = {conn}")))
            }),
        ),
    ];
    if !c.is_empty() {
        out.push((
            Theorem::SplittingEdges,
            guarded(|| {
                let Some(v) = find_decomposition_vertex(c)? else {
                    return Ok(Verdict::Fail("no decomposition vertex".into()));
                };
                for &e in c.edges().iter().filter(|e| e.contains(v)) {
                    if !is_splitting_edge(c, e)? {
                        return Ok(Verdict::Fail(format!("v = {v}: edge {e} is not splitting")));
                    }
                }
                Ok(Verdict::Pass)
            }),
        ));
    }
    out
}

fn check_splitted(inst: &Instance, limits: &Limits) -> Vec<(Theorem, Verdict)> {
    let c = &inst.hypergraph;
    let mut out = Vec::new();
    let conn = |h: &Hypergraph| ind_homology(h).map(|p| p.conn_h());
    let whole = conn(c);
    for &f in c.edges() {
        out.push((
            Theorem::ContractionConnectivity,
            guarded(|| {
                let k = whole.clone()?;
                let kd = conn(&c.delete_edge(f)?)?;
                let kc = conn(&c.contract(f)?)?;
                let threshold = k.shift(1 - f.len() as i64);
                let first = kd <= k || kc >= threshold;
                let second = kc < threshold || kd >= k;
                Ok(judge(first && second, || {
                    format!("F = {f}: conn_h(C) = {k}, conn_h(C-F) = {kd}, conn_h(C:F) = {kc}")
                }))
            }),
        ));
    }
    if c.len() > SPLIT_SEARCH_EDGES {
        return out;
    }
    let splitted = is_properly_splitted(c);
    if matches!(inst.pool, Pool::ChordalGraphs | Pool::GrownTriangulated) {
        out.push((
            Theorem::TriangulatedSplitted,
            guarded(|| Ok(judge(splitted.clone()?, || format!("{c} is not properly-splitted")))),
        ));
    }
    if let Ok(true) = splitted {
        out.push((
            Theorem::SplittedPsi,
            guarded(|| {
                let k = whole.clone()?;
                let psi = psi_with_budget(c, limits.psi_budget)?;
                Ok(judge(psi.minus(2) == k, || format!("psi = {psi}, conn_h = {k}")))
            }),
        ));
    }
    out
}

fn evaluate(items: &[(Suite, Instance)], limits: &Limits) -> Vec<Vec<(Theorem, Verdict)>> {
    #[cfg(feature = "parallel")]
    let it = items.par_iter();
    #[cfg(not(feature = "parallel"))]
    let it = items.iter();
    it.map(|(s, inst)| check_instance(*s, inst, limits)).collect()
}

fn document(c: &Hypergraph) -> HypergraphDocument {
    hypergraph_document("instance", c, &Labels::identity(c.vertices()))
}

pub fn run(config: &VerifyConfig) -> VerificationReport {
    let items = generate(config);
    let verdicts = evaluate(&items, &config.limits);
    let mut report = VerificationReport {
        seed: config.seed,
        max_vertices: config.max_vertices,
        samples: config.samples,
        suites: config.suites.clone(),
        instances: BTreeMap::new(),
        tallies: BTreeMap::new(),
        first_counterexample: None,
    };
    for ((suite, inst), vs) in items.iter().zip(verdicts) {
        *report
            .instances
            .entry(format!("{}/{}", suite.name(), inst.pool.name()))
            .or_default() += 1;
        for (theorem, v) in vs {
            report.tallies.entry(theorem).or_default().record(&v);
            if let (Verdict::Fail(details), None) = (&v, &report.first_counterexample) {
                report.first_counterexample = Some(Counterexample {
                    theorem,
                    suite: *suite,
                    pool: inst.pool,
                    instance: document(&inst.hypergraph),
                    partner: inst.partner.as_ref().map(document),
                    details: details.clone(),
                });
            }
        }
    }
    report
}

/// Reruns the suite of a recorded counterexample and returns the verdicts
/// for its theorem.
pub fn replay(cx: &Counterexample, limits: &Limits) -> Result<Vec<Verdict>> {
    let inst = Instance {
        pool: cx.pool,
        hypergraph: hypergraph_from_document(&cx.instance)?.value,
        partner: match &cx.partner {
            Some(doc) => Some(hypergraph_from_document(doc)?.value),
            None => None,
        },
    };
    Ok(check_instance(cx.suite, &inst, limits)
        .into_iter()
        .filter(|(t, _)| *t == cx.theorem)
        .map(|(_, v)| v)
        .collect())
}
