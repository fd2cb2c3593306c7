//! Exact k-forcing number, k-power domination number and domination number.
//!
//! Every solver works component by component and sums the results. Within a component the
//! candidate sets are enumerated by increasing cardinality; the first size with a hit is the
//! minimum because every smaller size was exhausted.
//!
//! For power domination on a component with maximum degree at least `k + 2`, some minimum
//! k-power dominating set uses only vertices of degree at least `k + 2`, so the search pool is
//! restricted to those vertices. A component with maximum degree at most `k + 1` is
//! power-dominated by any single vertex.

use serde::{Deserialize, Serialize};

use crate::enumerate::{binomial, first_of_size, run_with_workers, Budget, SearchConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::propagation::{is_k_forcing_set, is_k_power_dominating_set, Mode, Propagator};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parameter {
    #[serde(rename = "Zk")]
    ForcingNumber,
    #[serde(rename = "gammaPk")]
    PowerDomination,
    #[serde(rename = "gamma")]
    Domination,
}

impl std::str::FromStr for Parameter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zk" | "Zk" => Ok(Parameter::ForcingNumber),
            "pdk" | "gammaPk" => Ok(Parameter::PowerDomination),
            "gamma" => Ok(Parameter::Domination),
            other => Err(format!("unknown parameter {other:?} (expected zk|pdk|gamma)")),
        }
    }
}

/// A minimum set together with how it was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub parameter: Parameter,
    pub k: usize,
    pub value: usize,
    pub witness: VertexSet,
    /// Candidate sets tested, counted in sequential lexicographic order up to the witness.
    pub nodes_explored: u128,
    /// The restricted candidate pool, when degree pruning or a caller restriction applied.
    pub pruned_pool: Option<VertexSet>,
}

/// `Z_k(G)`.
pub fn min_k_forcing(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<SolveResult> {
    run_with_workers(cfg.workers, || min_k_forcing_in(g, k, cfg))
}

/// `γ_{P,k}(G)`.
pub fn min_k_power_dominating(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<SolveResult> {
    run_with_workers(cfg.workers, || min_k_power_dominating_in(g, k, cfg, None))
}

/// `γ(G)`, by plain enumeration over every vertex.
pub fn min_dominating(g: &Graph, cfg: &SearchConfig) -> Result<SolveResult> {
    run_with_workers(cfg.workers, || {
        let mut r = solve(g, 0, Mode::Power, cfg, None, |_, _| PoolChoice::Full)?;
        r.parameter = Parameter::Domination;
        Ok(r)
    })
}

pub fn solve_parameter(g: &Graph, parameter: Parameter, k: usize, cfg: &SearchConfig) -> Result<SolveResult> {
    match parameter {
        Parameter::ForcingNumber => min_k_forcing(g, k, cfg),
        Parameter::PowerDomination => min_k_power_dominating(g, k, cfg),
        Parameter::Domination => min_dominating(g, cfg),
    }
}

pub(crate) fn min_k_forcing_in(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<SolveResult> {
    solve(g, k, Mode::Forcing, cfg, None, |_, _| PoolChoice::Full)
}

/// Power domination restricted to candidates inside `allowed` (when given).
pub(crate) fn min_k_power_dominating_in(
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
    allowed: Option<&VertexSet>,
) -> Result<SolveResult> {
    let pruning = cfg.pruning;
    solve(g, k, Mode::Power, cfg, allowed, move |_comp, max_deg| {
        if !pruning {
            PoolChoice::Full
        } else if max_deg <= k + 1 {
            PoolChoice::AnySingle
        } else {
            PoolChoice::MinDegree(k + 2)
        }
    })
    .map(|mut r| {
        r.parameter = Parameter::PowerDomination;
        r
    })
}

/// Forcing restricted to candidates inside `allowed`, searching only the given per-component
/// sizes. Returns `None` when some component has no such set at its size.
pub(crate) fn forcing_set_inside(
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
    allowed: &VertexSet,
    sizes: &[usize],
) -> Result<Option<VertexSet>> {
    let mut budget = Budget::new(cfg.budget);
    let mut witness = VertexSet::new();
    for (comp, &size) in g.components().iter().zip(sizes) {
        let pool: Vec<usize> = comp.intersection(allowed).into_vec();
        budget.reserve(binomial(pool.len(), size))?;
        let (hit, explored) = first_of_size(&pool, size, cfg.parallel(), || {
            let mut p = Propagator::new(g);
            let target = comp.clone();
            move |c: &[usize]| {
                p.run(k, Mode::Forcing, c);
                p.last_run_covers(target.as_slice())
            }
        });
        budget.charge(explored);
        match hit {
            Some(h) => witness = witness.union(&h.into()),
            None => return Ok(None),
        }
    }
    Ok(Some(witness))
}

/// Per-component minimum values of the last solve, for callers that need the split.
pub(crate) fn component_values(g: &Graph, k: usize, mode: Mode, cfg: &SearchConfig) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for comp in g.components() {
        let (h, _) = g.induced_subgraph(&comp)?;
        let r = match mode {
            Mode::Forcing => min_k_forcing_in(&h, k, cfg)?,
            Mode::Power => min_k_power_dominating_in(&h, k, cfg, None)?,
        };
        out.push(r.value);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
enum PoolChoice {
    Full,
    AnySingle,
    MinDegree(usize),
}

fn solve<F>(
    g: &Graph,
    k: usize,
    mode: Mode,
    cfg: &SearchConfig,
    allowed: Option<&VertexSet>,
    choose: F,
) -> Result<SolveResult>
where
    F: Fn(&VertexSet, usize) -> PoolChoice,
{
    if let Some(a) = allowed {
        g.check_set(a)?;
    }
    let parameter = match mode {
        Mode::Forcing => Parameter::ForcingNumber,
        Mode::Power => Parameter::PowerDomination,
    };
    let mut budget = Budget::new(cfg.budget);
    let mut value = 0;
    let mut witness = VertexSet::new();
    let mut explored_total = 0u128;
    let mut restricted = false;
    let mut pruned_pool = VertexSet::new();

    for comp in g.components() {
        let max_deg = comp.iter().map(|v| g.degree(v)).max().unwrap_or(0);
        let in_allowed = |v: usize| allowed.is_none_or(|a| a.contains(v));
        let choice = choose(&comp, max_deg);
        let pool: Vec<usize> = match choice {
            PoolChoice::Full => comp.iter().filter(|&v| in_allowed(v)).collect(),
            PoolChoice::AnySingle => {
                let v = comp.iter().find(|&v| in_allowed(v)).ok_or_else(|| {
                    Error::Precondition(format!("no allowed candidate in component starting at {:?}", comp.first()))
                })?;
                let mut p = Propagator::new(g);
                p.run(k, mode, &[v]);
                if !p.last_run_covers(comp.as_slice()) {
                    return Err(Error::Internal(format!("single vertex {v} failed on a low-degree component")));
                }
                value += 1;
                witness.insert(v);
                explored_total += 1;
                continue;
            }
            PoolChoice::MinDegree(d) => comp.iter().filter(|&v| g.degree(v) >= d && in_allowed(v)).collect(),
        };
        if pool.len() < comp.len() {
            restricted = true;
        }
        pruned_pool = pruned_pool.union(&pool.iter().copied().collect());

        let mut found = None;
        for size in 1..=pool.len() {
            budget.reserve(binomial(pool.len(), size))?;
            let (hit, explored) = first_of_size(&pool, size, cfg.parallel(), || {
                let mut p = Propagator::new(g);
                let target = comp.clone();
                move |c: &[usize]| {
                    p.run(k, mode, c);
                    p.last_run_covers(target.as_slice())
                }
            });
            budget.charge(explored);
            if let Some(h) = hit {
                found = Some(h);
                break;
            }
        }
        let hit = found.ok_or_else(|| {
            Error::HypothesisNotMet(format!(
                "no candidate set within the allowed pool covers the component containing {}",
                comp.first().unwrap_or(0)
            ))
        })?;
        value += hit.len();
        witness = witness.union(&hit.into());
    }
    explored_total += budget.spent();
    Ok(SolveResult {
        parameter,
        k,
        value,
        witness,
        nodes_explored: explored_total,
        pruned_pool: restricted.then_some(pruned_pool),
    })
}

/// External `S`-private neighbors of `v`: neighbors outside `S` adjacent to no other member.
pub fn external_private_neighbors(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet> {
    g.check_set(s)?;
    if !s.contains(v) {
        return Err(Error::Precondition(format!("vertex {v} is not in the set")));
    }
    let mut others = s.clone();
    others.remove(v);
    let seen_by_others = g.closed_neighborhood_unchecked(&others);
    Ok(g.adj(v).iter().copied().filter(|&x| !s.contains(x) && !seen_by_others.contains(x)).collect())
}

/// A minimum k-power dominating set in which every member has at least `k + 1` external private
/// neighbors. Requires a connected graph with maximum degree at least `k + 2`.
pub fn min_k_pds_with_external_privates(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<SolveResult> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if g.max_degree() < k + 2 {
        return Err(Error::Precondition(format!("maximum degree {} is below k + 2 = {}", g.max_degree(), k + 2)));
    }
    run_with_workers(cfg.workers, || {
        let base = min_k_power_dominating_in(g, k, cfg, None)?;
        let size = base.value;
        // a member with k+1 external private neighbors has degree at least k+1
        let pool: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > k).collect();
        let mut budget = Budget::new(cfg.budget);
        budget.charge(base.nodes_explored);
        budget.reserve(binomial(pool.len(), size))?;
        let (hit, explored) = first_of_size(&pool, size, cfg.parallel(), || {
            let mut p = Propagator::new(g);
            move |c: &[usize]| {
                if !p.observes_all(k, Mode::Power, c) {
                    return false;
                }
                let s: VertexSet = c.iter().copied().collect();
                c.iter().all(|&v| external_private_neighbors(g, &s, v).map(|e| e.len() > k).unwrap_or(false))
            }
        });
        budget.charge(explored);
        let witness = hit.ok_or_else(|| {
            Error::Internal(format!(
                "no minimum {k}-power dominating set of size {size} has k+1 external private neighbors per member"
            ))
        })?;
        Ok(SolveResult {
            parameter: Parameter::PowerDomination,
            k,
            value: size,
            witness: witness.into(),
            nodes_explored: budget.spent(),
            pruned_pool: (pool.len() < g.order()).then(|| pool.into_iter().collect()),
        })
    })
}

/// `Σ (deg u + 1 - k)` over the members of `s`.
pub fn private_neighbor_forcing_bound(g: &Graph, k: usize, s: &VertexSet) -> usize {
    s.iter().map(|u| (g.degree(u) + 1).saturating_sub(k)).sum()
}

/// Builds a k-forcing set from a k-power dominating set whose members each have at least `k + 1`
/// external private neighbors: the union of the closed neighborhoods of the members, each with
/// its `k` smallest external private neighbors removed.
pub fn forcing_set_from_pds(g: &Graph, k: usize, s: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    if !is_k_power_dominating_set(g, k, s)? {
        return Err(Error::Precondition(format!("{{{s}}} is not a {k}-power dominating set")));
    }
    let mut b = VertexSet::new();
    for u in s {
        let privates = external_private_neighbors(g, s, u)?;
        if privates.len() <= k {
            return Err(Error::DeficientPrivates { vertex: u, found: privates.len(), needed: k + 1 });
        }
        let excluded: VertexSet = privates.iter().take(k).collect();
        let mut closed = g.neighbors(u)?;
        closed.insert(u);
        b = b.union(&closed.difference(&excluded));
    }
    if !is_k_forcing_set(g, k, &b)? {
        return Err(Error::Internal(format!("constructed set {{{b}}} is not {k}-forcing")));
    }
    Ok(b)
}
