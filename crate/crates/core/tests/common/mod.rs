//! Brute-force oracles shared by the integration suites. None of them use the crate's solvers or
//! its worklist engine.
#![allow(dead_code)]

use kforce_core::propagation::reference::closure_rounds;
use kforce_core::{Graph, Mode};

/// Seeded corpus of random connected graphs with `3..=max_n` vertices.
pub fn corpus(count: u64, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|seed| {
            let n = max_n - seed as usize % (max_n - 2);
            let prob = 0.2 + 0.1 * (seed % 5) as f64;
            kforce_core::generators::random_connected(n, prob, seed).unwrap()
        })
        .collect()
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Whether the literal closure from `seed` observes every vertex.
pub fn covers(g: &Graph, k: usize, mode: Mode, seed: &[usize]) -> bool {
    let (rounds, _) = closure_rounds(g, k, mode, seed);
    rounds.last().map_or(0, |r| r.len()) == g.order()
}

/// Minimum size of a seed whose closure is everything, over all `2^n` subsets.
pub fn brute_minimum(g: &Graph, k: usize, mode: Mode) -> usize {
    let n = g.order();
    assert!(n <= 16, "oracle is exponential");
    (0u32..1 << n)
        .filter(|&m| covers(g, k, mode, &members(m, n)))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("V always works")
}

/// Domination number from closed neighborhoods alone.
pub fn brute_domination(g: &Graph) -> usize {
    let n = g.order();
    let closed: Vec<u32> = (0..n).map(|v| g.adj(v).iter().fold(1u32 << v, |acc, &w| acc | 1 << w)).collect();
    let full = (1u32 << n) - 1;
    (0u32..1 << n)
        .filter(|&m| members(m, n).iter().fold(0, |acc, &v| acc | closed[v]) == full)
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("V dominates")
}
