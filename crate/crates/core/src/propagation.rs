//! Synchronous k-forcing and k-power-domination closure.
//!
//! Round `i + 1` adds `N(v)` for every observed `v` with between `1` and `k` unobserved
//! neighbors in round `i`; all such forces fire simultaneously. Forcing starts from the seed
//! itself, power domination from its closed neighborhood.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Forcing,
    Power,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "forcing" => Ok(Mode::Forcing),
            "power" => Ok(Mode::Power),
            other => Err(format!("unknown mode {other:?} (expected forcing|power)")),
        }
    }
}

/// Round-by-round record of a closure computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropagationTrace {
    pub mode: Mode,
    pub k: usize,
    /// `rounds[i]` is the observed set after round `i`; strictly increasing.
    pub rounds: Vec<VertexSet>,
    /// `forcers[i]` lists every `(forcing vertex, newly observed vertex)` pair of the
    /// transition from `rounds[i]` to `rounds[i + 1]`.
    pub forcers: Vec<Vec<(usize, usize)>>,
    pub success: bool,
}

impl PropagationTrace {
    /// The fixpoint.
    pub fn terminal(&self) -> &VertexSet {
        self.rounds.last().expect("a trace always records round 0")
    }
}

pub fn forcing_closure(g: &Graph, k: usize, t: &VertexSet) -> Result<PropagationTrace> {
    g.check_set(t)?;
    Ok(synchronous(g, k, Mode::Forcing, t.clone()))
}

pub fn power_closure(g: &Graph, k: usize, s: &VertexSet) -> Result<PropagationTrace> {
    g.check_set(s)?;
    Ok(synchronous(g, k, Mode::Power, g.closed_neighborhood_unchecked(s)))
}

pub fn closure(g: &Graph, k: usize, mode: Mode, seed: &VertexSet) -> Result<PropagationTrace> {
    match mode {
        Mode::Forcing => forcing_closure(g, k, seed),
        Mode::Power => power_closure(g, k, seed),
    }
}

fn synchronous(g: &Graph, k: usize, mode: Mode, start: VertexSet) -> PropagationTrace {
    let n = g.order();
    let mut observed = vec![false; n];
    let mut white: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for v in &start {
        observed[v] = true;
    }
    for v in &start {
        for &w in g.adj(v) {
            white[w] -= 1;
        }
    }
    let mut active: Vec<usize> = start.iter().filter(|&v| white[v] > 0).collect();
    let mut rounds = vec![start];
    let mut forcers = Vec::new();
    let mut newly_mark = vec![false; n];

    loop {
        let mut pairs = Vec::new();
        let mut newly = Vec::new();
        for &v in &active {
            if (1..=k).contains(&white[v]) {
                for &w in g.adj(v) {
                    if !observed[w] {
                        pairs.push((v, w));
                        if !newly_mark[w] {
                            newly_mark[w] = true;
                            newly.push(w);
                        }
                    }
                }
            }
        }
        if newly.is_empty() {
            break;
        }
        for &w in &newly {
            newly_mark[w] = false;
            observed[w] = true;
            for &x in g.adj(w) {
                white[x] -= 1;
            }
        }
        active.extend_from_slice(&newly);
        active.retain(|&v| white[v] > 0);
        active.sort_unstable();
        let next: VertexSet = rounds.last().unwrap().iter().chain(newly).collect();
        rounds.push(next);
        forcers.push(pairs);
    }
    let success = rounds.last().unwrap().len() == n;
    PropagationTrace { mode, k, rounds, forcers, success }
}

/// Reusable worklist engine that only computes how much of the graph a seed observes.
///
/// The fixpoint of the rule does not depend on the order in which forces fire, so this agrees
/// with the terminal set of the synchronous trace while avoiding per-round bookkeeping.
pub(crate) struct Propagator<'g> {
    g: &'g Graph,
    observed: Vec<bool>,
    white: Vec<usize>,
    queue: Vec<usize>,
    count: usize,
}

impl<'g> Propagator<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Propagator { g, observed: vec![false; n], white: vec![0; n], queue: Vec::new(), count: 0 }
    }

    /// Number of vertices observed at the fixpoint.
    pub(crate) fn run(&mut self, k: usize, mode: Mode, seed: &[usize]) -> usize {
        let g = self.g;
        self.observed.fill(false);
        for (v, w) in self.white.iter_mut().enumerate() {
            *w = g.degree(v);
        }
        self.queue.clear();
        self.count = 0;
        for &v in seed {
            self.observe(v, k);
            if mode == Mode::Power {
                for &w in g.adj(v) {
                    self.observe(w, k);
                }
            }
        }
        while let Some(v) = self.queue.pop() {
            if (1..=k).contains(&self.white[v]) {
                for &w in g.adj(v) {
                    self.observe(w, k);
                }
            }
        }
        self.count
    }

    pub(crate) fn observes_all(&mut self, k: usize, mode: Mode, seed: &[usize]) -> bool {
        self.run(k, mode, seed) == self.g.order()
    }

    /// Whether every member of `target` is observed at the fixpoint of the last `run`.
    pub(crate) fn last_run_covers(&self, target: &[usize]) -> bool {
        target.iter().all(|&v| self.observed[v])
    }

    fn observe(&mut self, w: usize, k: usize) {
        if self.observed[w] {
            return;
        }
        self.observed[w] = true;
        self.count += 1;
        if (1..=k).contains(&self.white[w]) {
            self.queue.push(w);
        }
        for &x in self.g.adj(w) {
            self.white[x] -= 1;
            if self.observed[x] && self.white[x] == k && k > 0 {
                self.queue.push(x);
            }
        }
    }
}

pub fn is_k_forcing_set(g: &Graph, k: usize, t: &VertexSet) -> Result<bool> {
    g.check_set(t)?;
    Ok(Propagator::new(g).observes_all(k, Mode::Forcing, t.as_slice()))
}

pub fn is_k_power_dominating_set(g: &Graph, k: usize, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(Propagator::new(g).observes_all(k, Mode::Power, s.as_slice()))
}

/// Whether `a` k-forces every vertex of `x`, with propagation running in all of `g`.
pub fn is_k_forcing_set_of(g: &Graph, k: usize, a: &VertexSet, x: &VertexSet) -> Result<bool> {
    relative(g, k, Mode::Forcing, a, x)
}

/// Whether `a` k-power-dominates every vertex of `x`, with propagation running in all of `g`.
pub fn is_k_power_dominating_set_of(g: &Graph, k: usize, a: &VertexSet, x: &VertexSet) -> Result<bool> {
    relative(g, k, Mode::Power, a, x)
}

fn relative(g: &Graph, k: usize, mode: Mode, a: &VertexSet, x: &VertexSet) -> Result<bool> {
    g.check_set(x)?;
    g.check_set(a)?;
    if !a.is_subset(x) {
        return Err(Error::Precondition(format!("seed set {{{a}}} is not contained in target {{{x}}}")));
    }
    let mut p = Propagator::new(g);
    p.run(k, mode, a.as_slice());
    Ok(p.last_run_covers(x.as_slice()))
}

/// Definition-literal closure used to cross-check the engines above.
///
/// Each round recomputes every vertex's unobserved-neighbor count from scratch with ordered
/// sets and no incremental state.
pub mod reference {
    use std::collections::BTreeSet;

    use crate::graph::Graph;

    use super::Mode;

    /// Rounds and forcing pairs of the closure from `seed`.
    #[allow(clippy::type_complexity, clippy::len_zero)]
    pub fn closure_rounds(
        g: &Graph,
        k: usize,
        mode: Mode,
        seed: &[usize],
    ) -> (Vec<BTreeSet<usize>>, Vec<BTreeSet<(usize, usize)>>) {
        let nbhd = |v: usize| -> BTreeSet<usize> { g.adj(v).iter().copied().collect() };
        let mut current: BTreeSet<usize> = seed.iter().copied().collect();
        if mode == Mode::Power {
            let mut closed = current.clone();
            for &v in &current {
                closed.extend(nbhd(v));
            }
            current = closed;
        }
        let mut rounds = vec![current.clone()];
        let mut pairs = Vec::new();
        loop {
            let mut next = current.clone();
            let mut step = BTreeSet::new();
            for &v in &current {
                let unobserved: BTreeSet<usize> = nbhd(v).difference(&current).copied().collect();
                if 1 <= unobserved.len() && unobserved.len() <= k {
                    for &w in &unobserved {
                        step.insert((v, w));
                    }
                    next.extend(nbhd(v));
                }
            }
            if next == current {
                break;
            }
            rounds.push(next.clone());
            pairs.push(step);
            current = next;
        }
        (rounds, pairs)
    }
}
