//! Cardinality-ordered subset search with deterministic parallel work partitioning.
//!
//! Candidates of one size are visited in lexicographic order of their sorted index tuples. The
//! parallel path splits the candidates by their leading element; each task stops at its own
//! first hit and the aggregate keeps the hit with the smallest leading element, so the reported
//! subset is the lexicographically first one regardless of scheduling.

use crate::error::{Error, Result};

/// Default cap on the number of candidate sets a single search may test.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Search limits shared by every exact solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of candidate sets a search may enumerate.
    pub budget: u64,
    /// Worker threads; `1` runs sequentially.
    pub workers: usize,
    /// Restrict power-domination candidates to vertices of degree at least `k + 2` when the
    /// component admits it.
    pub pruning: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, workers: 1, pruning: true }
    }
}

impl SearchConfig {
    pub fn with_workers(self, workers: usize) -> Self {
        SearchConfig { workers: workers.max(1), ..self }
    }

    pub fn with_budget(self, budget: u64) -> Self {
        SearchConfig { budget, ..self }
    }

    pub fn without_pruning(self) -> Self {
        SearchConfig { pruning: false, ..self }
    }

    pub(crate) fn parallel(&self) -> bool {
        cfg!(feature = "parallel") && self.workers > 1
    }
}

/// Runs `f` on a dedicated pool of `workers` threads, or inline when sequential.
pub fn run_with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    if workers > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            return pool.install(f);
        }
    }
    let _ = workers;
    f()
}

/// Maps `f` over `items`, concurrently when `parallel`, keeping input order.
pub(crate) fn ordered_map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let _ = parallel;
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

/// `C(n, r)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Zero-based lexicographic rank of a strictly increasing index tuple among all
/// `comb.len()`-subsets of `0..m`.
pub fn lex_rank(comb: &[usize], m: usize) -> u128 {
    let r = comb.len();
    let mut rank = 0u128;
    let mut prev = 0usize;
    for (i, &c) in comb.iter().enumerate() {
        for skipped in prev..c {
            rank += binomial(m - skipped - 1, r - i - 1);
        }
        prev = c + 1;
    }
    rank
}

/// Tracks how many candidates a search is allowed to consume.
pub(crate) struct Budget {
    limit: u64,
    spent: u128,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, spent: 0 }
    }

    /// Reserves a full sweep of `count` candidates, failing up front when it would not fit.
    pub(crate) fn reserve(&mut self, count: u128) -> Result<()> {
        let needed = self.spent.saturating_add(count);
        if needed > self.limit as u128 {
            return Err(Error::BudgetExceeded { needed, budget: self.limit });
        }
        Ok(())
    }

    pub(crate) fn charge(&mut self, count: u128) {
        self.spent = self.spent.saturating_add(count);
    }

    pub(crate) fn spent(&self) -> u128 {
        self.spent
    }
}

/// Lexicographically first `size`-subset of `pool` accepted by the tester, returned as pool
/// elements together with the number of candidates tested up to and including it.
///
/// `make_tester` builds one tester per worker so testers can own scratch buffers.
pub(crate) fn first_of_size<M, T>(
    pool: &[usize],
    size: usize,
    parallel: bool,
    make_tester: M,
) -> (Option<Vec<usize>>, u128)
where
    M: Fn() -> T + Sync,
    T: FnMut(&[usize]) -> bool,
{
    let m = pool.len();
    if size > m {
        return (None, 0);
    }
    if size == 0 {
        let hit = make_tester()(&[]);
        return (hit.then(Vec::new), 1);
    }
    let leads = m - size + 1;
    let found = if parallel {
        first_parallel(pool, size, leads, &make_tester)
    } else {
        let mut tester = make_tester();
        (0..leads).find_map(|lead| search_lead(pool, size, lead, &mut tester))
    };
    match found {
        Some(idx) => {
            let explored = lex_rank(&idx, m) + 1;
            (Some(idx.into_iter().map(|i| pool[i]).collect()), explored)
        }
        None => (None, binomial(m, size)),
    }
}

#[cfg(feature = "parallel")]
fn first_parallel<M, T>(pool: &[usize], size: usize, leads: usize, make_tester: &M) -> Option<Vec<usize>>
where
    M: Fn() -> T + Sync,
    T: FnMut(&[usize]) -> bool,
{
    use rayon::prelude::*;
    (0..leads)
        .into_par_iter()
        .map_init(make_tester, |tester, lead| search_lead(pool, size, lead, tester))
        .find_first(Option::is_some)
        .flatten()
}

#[cfg(not(feature = "parallel"))]
fn first_parallel<M, T>(pool: &[usize], size: usize, leads: usize, make_tester: &M) -> Option<Vec<usize>>
where
    M: Fn() -> T + Sync,
    T: FnMut(&[usize]) -> bool,
{
    let mut tester = make_tester();
    (0..leads).find_map(|lead| search_lead(pool, size, lead, &mut tester))
}

/// First accepted index tuple whose leading index is `lead`.
fn search_lead<T>(pool: &[usize], size: usize, lead: usize, tester: &mut T) -> Option<Vec<usize>>
where
    T: FnMut(&[usize]) -> bool,
{
    let m = pool.len();
    let mut idx: Vec<usize> = (lead..lead + size).collect();
    let mut members: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        if tester(&members) {
            return Some(idx);
        }
        // advance positions 1.. only; position 0 stays at `lead`
        let mut pos = size;
        loop {
            if pos <= 1 {
                return None;
            }
            pos -= 1;
            if idx[pos] < m - size + pos {
                break;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
        for j in pos..size {
            members[j] = pool[idx[j]];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_combinations(m: usize, r: usize) -> Vec<Vec<usize>> {
        if r == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..m {
            for rest in all_combinations(m, r - 1) {
                if rest.first().is_none_or(|&x| x > first) {
                    let mut c = vec![first];
                    c.extend(rest);
                    out.push(c);
                }
            }
        }
        out
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(60, 4), 487_635);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 0), 1);
    }

    #[test]
    fn rank_matches_enumeration_order() {
        for m in 1..8 {
            for r in 1..=m {
                for (i, c) in all_combinations(m, r).iter().enumerate() {
                    assert_eq!(lex_rank(c, m), i as u128, "m={m} r={r} {c:?}");
                }
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree_on_first_hit() {
        let pool: Vec<usize> = (10..22).collect();
        for r in 1..6 {
            for target in all_combinations(12, r).iter().step_by(7) {
                let want: Vec<usize> = target.iter().map(|&i| pool[i]).collect();
                // accept anything lexicographically at or after the target with a matching sum
                let sum: usize = want.iter().sum();
                let make = || {
                    let want = want.clone();
                    move |c: &[usize]| c >= &want[..] && c.iter().sum::<usize>() == sum
                };
                let seq = first_of_size(&pool, r, false, make);
                let par = run_with_workers(4, || first_of_size(&pool, r, true, make));
                assert_eq!(seq, par);
                assert_eq!(seq.0.as_deref(), Some(&want[..]));
            }
        }
    }

    #[test]
    fn exhausted_search_counts_every_candidate() {
        let pool: Vec<usize> = (0..9).collect();
        let (hit, explored) = first_of_size(&pool, 3, false, || |_: &[usize]| false);
        assert!(hit.is_none());
        assert_eq!(explored, 84);
    }

    #[test]
    fn budget_refuses_oversized_sweeps() {
        let mut b = Budget::new(100);
        b.reserve(60).unwrap();
        b.charge(60);
        assert!(matches!(b.reserve(41), Err(Error::BudgetExceeded { needed: 101, budget: 100 })));
        assert_eq!(b.spent(), 60);
    }
}
