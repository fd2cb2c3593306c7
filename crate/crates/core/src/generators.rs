//! Graph families: Sierpiński graphs, the contraction and bound tightness gadgets, standard
//! families, and seeded random connected graphs.
//!
//! Vertex-id conventions:
//!
//! * `sierpinski(p, n)`: the label `s_n … s_1` has id `Σ s_i p^(i-1)`, so the leftmost digit is
//!   the most significant and every prefix block is a contiguous id range.
//! * `gadget_uq`: the first `K_{q+2}` occupies `0..q+2` with `x = q+1`; the second occupies
//!   `q+2..2q+4` with `y = q+2`.
//! * `gadget_lq`: id `0` is the single-vertex minimum set. (k ≥ 2): `0` is the pendant of `v_1`,
//!   the cycle `v_1..v_2q` is `1..=2q`, the pendants of `v_2..v_2q` follow in order, then the
//!   `q+1` leaves on `0`. (k = 1): path `v_0..v_6` is `0..7`, the `q` leaves on `v_0` follow.
//! * `gadget_tkc`: center `0`, star leaves `1..=c`, then `k+2` leaves per star leaf in order.
//! * `gadget_gpr`: path `0..r`, then `p` pendants per path vertex in order.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest Sierpiński graph the generator will build.
pub const SIERPINSKI_CAP: usize = 1 << 20;

/// Rejection-sampling attempts before [`random_connected`] gives up.
pub const RANDOM_RETRY_CAP: usize = 10_000;

/// A Sierpiński vertex label `s_n s_(n-1) … s_1`, stored most significant digit first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SierpinskiLabel {
    pub digits: Vec<usize>,
}

impl SierpinskiLabel {
    pub fn new(p: usize, digits: Vec<usize>) -> Result<Self> {
        if let Some(&d) = digits.iter().find(|&&d| d >= p) {
            return Err(Error::Precondition(format!("digit {d} is not below p = {p}")));
        }
        Ok(SierpinskiLabel { digits })
    }

    pub fn from_id(p: usize, n: usize, mut id: usize) -> Self {
        let mut digits = vec![0; n];
        for d in digits.iter_mut().rev() {
            *d = id % p;
            id /= p;
        }
        SierpinskiLabel { digits }
    }

    pub fn to_id(&self, p: usize) -> usize {
        self.digits.iter().fold(0, |acc, &d| acc * p + d)
    }

    /// Parses `"012"` (p ≤ 10) or `"0.11.2"` (dot-separated digits).
    pub fn parse(p: usize, s: &str) -> Result<Self> {
        let digits: Option<Vec<usize>> = if s.contains('.') {
            s.split('.').map(|t| t.parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let digits = digits.ok_or_else(|| Error::Precondition(format!("bad Sierpiński label {s:?}")))?;
        SierpinskiLabel::new(p, digits)
    }

    pub fn render(&self, p: usize) -> String {
        if p <= 10 {
            self.digits.iter().map(|d| char::from(b'0' + *d as u8)).collect()
        } else {
            self.digits.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
        }
    }
}

impl fmt::Display for SierpinskiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.digits.iter().map(usize::to_string).collect();
        f.write_str(&joined.join(if self.digits.iter().any(|&d| d > 9) { "." } else { "" }))
    }
}

/// The Sierpiński graph `S_p^n`, with vertex labels attached.
pub fn sierpinski(p: usize, n: usize) -> Result<Graph> {
    if p < 2 || n < 1 {
        return Err(Error::Precondition(format!("Sierpiński graphs need p >= 2 and n >= 1, got p={p}, n={n}")));
    }
    let order = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if order > SIERPINSKI_CAP as u128 {
        return Err(Error::SizeCap { order, cap: SIERPINSKI_CAP });
    }
    let order = order as usize;
    // pw[i] = p^i
    let pw: Vec<usize> = (0..=n).map(|i| p.pow(i as u32)).collect();
    let mut edges = Vec::new();
    for id in 0..order {
        let s = SierpinskiLabel::from_id(p, n, id);
        // digit s_i lives at s.digits[n - i]
        let digit = |i: usize| s.digits[n - i];
        for r in 1..=n {
            // s_1..s_(r-1) must all equal some a != s_r
            let a = if r == 1 { None } else { Some(digit(1)) };
            if let Some(a) = a {
                if (1..r).any(|i| digit(i) != a) || a == digit(r) {
                    continue;
                }
            }
            let high = id / pw[r];
            let sr = digit(r);
            let targets: Vec<usize> = match a {
                None => (0..p).filter(|&t| t != sr).collect(),
                Some(a) => vec![a],
            };
            for tr in targets {
                // t_i = s_r for i < r
                let low: usize = (0..r - 1).map(|i| sr * pw[i]).sum();
                let t = high * pw[r] + tr * pw[r - 1] + low;
                if id < t {
                    edges.push((id, t));
                }
            }
        }
    }
    let labels = (0..order).map(|id| Some(SierpinskiLabel::from_id(p, n, id).render(p))).collect();
    Graph::from_edges_dedup(order, edges)?.with_labels(labels)
}

/// `sS_p^i`: the vertices of `S_p^n` whose leftmost digits equal `prefix`.
pub fn prefix_block(g: &Graph, p: usize, n: usize, prefix: &[usize]) -> Result<VertexSet> {
    if p < 2 || g.order() as u128 != (p as u128).pow(n as u32) {
        return Err(Error::Precondition(format!("graph of order {} is not S_{p}^{n}", g.order())));
    }
    if prefix.len() >= n {
        return Err(Error::Precondition(format!("prefix length {} must be below n = {n}", prefix.len())));
    }
    let label = SierpinskiLabel::new(p, prefix.to_vec())?;
    let width = p.pow((n - prefix.len()) as u32);
    let start = label.to_id(p) * width;
    Ok((start..start + width).collect())
}

/// All prefixes of the given length, in lexicographic order.
pub fn prefixes(p: usize, len: usize) -> Vec<Vec<usize>> {
    (0..p.pow(len as u32)).map(|id| SierpinskiLabel::from_id(p, len, id).digits).collect()
}

/// Two copies of `K_{q+2}` joined by the edge `{x, y}`, and `X = V(G') \ {y}`.
pub fn gadget_uq(k: usize, q: usize) -> Result<(Graph, VertexSet)> {
    if k < 1 || q < k {
        return Err(Error::Precondition(format!("U_q needs k >= 1 and q >= k, got k={k}, q={q}")));
    }
    let m = q + 2;
    let mut edges = clique_edges(0, m);
    edges.extend(clique_edges(m, m));
    let (x, y) = uq_bridge(q);
    edges.push((x, y));
    let g = Graph::from_edges(2 * m, edges)?;
    Ok((g, (m + 1..2 * m).collect()))
}

/// The bridge endpoints `(x, y)` of `U_q`.
pub fn uq_bridge(q: usize) -> (usize, usize) {
    (q + 1, q + 2)
}

/// The lower-bound tightness gadget `L_q` and its contraction set.
///
/// For `k = 1` the path `v_0 … v_6` has 7 vertices. The contraction is only tight when `q >= 2`;
/// with `q = 1` the single leaf on `v_0` is forced from the contracted vertex.
pub fn gadget_lq(k: usize, q: usize) -> Result<(Graph, VertexSet)> {
    if k < 1 || q < k {
        return Err(Error::Precondition(format!("L_q needs k >= 1 and q >= k, got k={k}, q={q}")));
    }
    if k == 1 {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
        edges.extend((7..7 + q).map(|l| (0, l)));
        let g = Graph::from_edges(7 + q, edges)?;
        return Ok((g, VertexSet::from([1, 3, 5])));
    }
    let c = 2 * q;
    // cycle vertex v_i has id i
    let mut edges: Vec<(usize, usize)> = (1..=c).map(|i| (i, i % c + 1)).collect();
    edges.push((0, 1));
    edges.extend((2..=c).map(|i| (i, c + i - 1)));
    edges.extend((2 * c..=2 * c + q).map(|l| (0, l)));
    let g = Graph::from_edges(2 * c + q + 1, edges)?;
    Ok((g, (1..=c).collect()))
}

/// `T_{k,c}`: `K_{1,c}` with `k+2` leaves on each star leaf; `X` = vertices of degree > 1.
pub fn gadget_tkc(k: usize, c: usize) -> Result<(Graph, VertexSet)> {
    if k < 1 || c < 1 {
        return Err(Error::Precondition(format!("T_(k,c) needs k >= 1 and c >= 1, got k={k}, c={c}")));
    }
    let mut edges: Vec<(usize, usize)> = (1..=c).map(|i| (0, i)).collect();
    let mut next = c + 1;
    for hub in 1..=c {
        for _ in 0..k + 2 {
            edges.push((hub, next));
            next += 1;
        }
    }
    let g = Graph::from_edges(next, edges)?;
    let x = (0..g.order()).filter(|&v| g.degree(v) > 1).collect();
    Ok((g, x))
}

/// `G_{p,r}`: a path of order `r` with `p` pendants on every path vertex.
pub fn gadget_gpr(k: usize, p: usize, r: usize) -> Result<Graph> {
    if k < 1 || r < 2 {
        return Err(Error::Precondition(format!("G_(p,r) needs k >= 1 and r >= 2, got k={k}, r={r}")));
    }
    if p + 3 <= 3 * r + k {
        return Err(Error::Precondition(format!("G_(p,r) needs p > 3r + k - 3, got p={p}, r={r}, k={k}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..r - 1).map(|i| (i, i + 1)).collect();
    for i in 0..r {
        edges.extend((0..p).map(|j| (i, r + i * p + j)));
    }
    Graph::from_edges(r + r * p, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StandardFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n}` with the center at id 0.
    Star(usize),
    /// `K_{a,b}` with the first side at `0..a`.
    CompleteBipartite(usize, usize),
}

pub fn standard_family(family: StandardFamily) -> Result<Graph> {
    use StandardFamily::*;
    match family {
        Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Cycle(n) if n < 3 => Err(Error::Precondition(format!("cycles need at least 3 vertices, got {n}"))),
        Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
        Complete(n) => Graph::from_edges(n, clique_edges(0, n)),
        Star(n) => Graph::from_edges(n + 1, (1..=n).map(|i| (0, i))),
        CompleteBipartite(a, b) => Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))),
    }
}

/// Erdős–Rényi `G(n, prob)` sample conditioned on connectivity, reproducible from `seed`.
pub fn random_connected(n: usize, prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::Precondition(format!("edge probability {prob} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_RETRY_CAP {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < prob {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Precondition(format!("no connected sample of G({n}, {prob}) within {RANDOM_RETRY_CAP} attempts")))
}

fn clique_edges(offset: usize, m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i + 1..m).map(move |j| (offset + i, offset + j))).collect()
}
