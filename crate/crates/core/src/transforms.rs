//! Pendant augmentation, contraction bounds and partition bounds.
//!
//! For `X ⊆ V`, the augmented graph `X̂` is `G[X]` with, at every `x ∈ X`, one new pendant per
//! neighbor of `x` outside `X`, so that each core vertex keeps its degree from `G`. The bounds
//! computed here combine exact values on `G/X` and `X̂` (or on the `X̂_i` of a partition) and
//! lift witness sets back to `G`, where they are re-verified.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::enumerate::{ordered_map, run_with_workers, SearchConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::propagation::{is_k_forcing_set, is_k_power_dominating_set, Mode};
use crate::set::VertexSet;
use crate::solvers::{component_values, forcing_set_inside, min_k_forcing_in, min_k_power_dominating_in, Parameter};

/// `X̂` and how its vertices relate to `G`.
#[derive(Clone, Debug)]
pub struct XHatResult {
    pub graph: Graph,
    /// `0..|X|`, in the order of `X`.
    pub core_ids: VertexSet,
    /// Pendant ids added at each core vertex.
    pub pendant_map: Vec<VertexSet>,
    /// Original id of each core vertex.
    pub core_to_original: Vec<usize>,
}

impl XHatResult {
    /// Original ids of the core members of `s`; pendants are dropped.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter(|&v| v < self.core_to_original.len()).map(|v| self.core_to_original[v]).collect()
    }

    pub fn pendant_count(&self) -> usize {
        self.graph.order() - self.core_ids.len()
    }
}

/// Closed interval of possible values together with a witness certifying the upper end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInterval {
    pub lower: usize,
    pub upper: usize,
    pub lower_ref: String,
    pub upper_ref: String,
    pub witness_upper: Option<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionBounds {
    pub parameter: Parameter,
    pub k: usize,
    pub interval: BoundInterval,
    /// Exact value on `G/X`.
    pub contracted_value: usize,
    /// The additive upper term: the value on `X̂`, or `c(G[X])` for the low-degree bound.
    pub side_value: usize,
    /// `|N[X] \ X|`.
    pub boundary_size: usize,
}

/// k-forcing contraction bounds; the interval is only present when some minimum k-forcing set of
/// `X̂` avoids the pendants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZfContractionBounds {
    pub k: usize,
    pub hypothesis_met: bool,
    pub hypothesis_detail: String,
    pub interval: Option<BoundInterval>,
    pub contracted_value: usize,
    pub xhat_value: usize,
    pub boundary_size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneCheck {
    pub value_g: usize,
    pub value_gx: usize,
    pub holds: bool,
}

/// A partition of the vertex set into nonempty, pairwise disjoint parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionSpec {
    pub parts: Vec<VertexSet>,
}

impl PartitionSpec {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        PartitionSpec { parts }
    }

    /// Parses a JSON array of arrays of vertex ids.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<usize>> = serde_json::from_str(text)
            .map_err(|e| Error::InvalidPartition(format!("expected a JSON array of id arrays: {e}")))?;
        for (i, part) in raw.iter().enumerate() {
            let mut sorted = part.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidPartition(format!("part {i} repeats a vertex")));
            }
        }
        Ok(PartitionSpec { parts: raw.into_iter().map(VertexSet::from).collect() })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        let mut owner = vec![None; n];
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition(format!("part {i} is empty")));
            }
            for v in part {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("part {i} contains {v}, graph order is {n}")));
                }
                if let Some(j) = owner[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} is in parts {j} and {i}")));
                }
                owner[v] = Some(i);
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no part")));
        }
        Ok(())
    }
}

/// Per-part outcome of a partition bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartReport {
    pub index: usize,
    pub part_size: usize,
    pub xhat_order: usize,
    pub value: usize,
    /// A minimum set of `X̂_i` inside the part, in original ids.
    pub witness: Option<VertexSet>,
    /// Some minimum k-power dominating set of `X̂_i` lies inside the part.
    pub pds_inside_part: Option<bool>,
    /// Some minimum k-forcing set of `X̂_i` lies inside the part.
    pub forcing_inside_part: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionBound {
    pub parameter: Parameter,
    pub k: usize,
    pub hypothesis_met: bool,
    pub bound: Option<usize>,
    pub witness: Option<VertexSet>,
    pub witness_verified: bool,
    pub parts: Vec<PartReport>,
}

impl PartitionBound {
    pub fn strip_timings(&mut self) {
        for p in &mut self.parts {
            p.elapsed_ms = None;
        }
    }
}

pub fn build_xhat(g: &Graph, x: &VertexSet) -> Result<XHatResult> {
    let (core, map) = g.induced_subgraph(x)?;
    let m = x.len();
    let mut edges: Vec<(usize, usize)> = core.edges().collect();
    let mut pendant_map = Vec::with_capacity(m);
    let mut next = m;
    for (i, v) in x.iter().enumerate() {
        let outside = g.adj(v).iter().filter(|&&w| map.to_new(w).is_none()).count();
        pendant_map.push((next..next + outside).collect::<VertexSet>());
        edges.extend((next..next + outside).map(|p| (i, p)));
        next += outside;
    }
    let mut labels: Vec<Option<String>> = core.labels().to_vec();
    labels.resize(next, None);
    let graph = Graph::from_edges(next, edges)?.with_labels(labels)?;
    Ok(XHatResult { graph, core_ids: VertexSet::full(m), pendant_map, core_to_original: x.iter().collect() })
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Precondition("graph must be connected".into()))
    }
}

fn require_degree_at_most(g: &Graph, x: &VertexSet, limit: usize) -> Result<()> {
    match x.iter().find(|&v| g.degree(v) > limit) {
        Some(v) => Err(Error::HypothesisNotMet(format!("vertex {v} in X has degree {} > {limit}", g.degree(v)))),
        None => Ok(()),
    }
}

/// Bounds on `γ_{P,k}(G)` from `G/X` and `X̂`: `[γ(G/X) - 1, γ(G/X) + γ(X̂)]`.
pub fn pd_contraction_bounds(g: &Graph, k: usize, x: &VertexSet, cfg: &SearchConfig) -> Result<ContractionBounds> {
    require_connected(g)?;
    run_with_workers(cfg.workers, || {
        let c = g.contract(x)?;
        let on_contracted = min_k_power_dominating_in(&c.graph, k, cfg, None)?;
        let xhat = build_xhat(g, x)?;
        let on_xhat = min_k_power_dominating_in(&xhat.graph, k, cfg, Some(&xhat.core_ids))?;
        let witness = c.id_map.map_back(&on_contracted.witness).union(&xhat.lift(&on_xhat.witness));
        if !is_k_power_dominating_set(g, k, &witness)? {
            return Err(Error::Internal(format!("lifted witness {{{witness}}} is not {k}-power dominating")));
        }
        Ok(ContractionBounds {
            parameter: Parameter::PowerDomination,
            k,
            interval: BoundInterval {
                lower: on_contracted.value.saturating_sub(1).max(1),
                upper: on_contracted.value + on_xhat.value,
                lower_ref: "pd-contraction-lower".into(),
                upper_ref: "pd-contraction-upper".into(),
                witness_upper: Some(witness),
            },
            contracted_value: on_contracted.value,
            side_value: on_xhat.value,
            boundary_size: g.boundary(x)?.len(),
        })
    })
}

/// The contraction bound for sets of low degree: `[γ(G/X) - 1, γ(G/X) + c(G[X])]`, requiring
/// `deg(x) ≤ k + 1` on `X`.
pub fn pd_low_degree_bounds(g: &Graph, k: usize, x: &VertexSet, cfg: &SearchConfig) -> Result<ContractionBounds> {
    require_connected(g)?;
    g.check_set(x)?;
    require_degree_at_most(g, x, k + 1)?;
    run_with_workers(cfg.workers, || {
        let c = g.contract(x)?;
        let on_contracted = min_k_power_dominating_in(&c.graph, k, cfg, None)?;
        let (gx, map) = g.induced_subgraph(x)?;
        let reps: VertexSet =
            gx.components().iter().filter_map(|comp| comp.first()).filter_map(|v| map.to_old(v)).collect();
        let witness = c.id_map.map_back(&on_contracted.witness).union(&reps);
        if !is_k_power_dominating_set(g, k, &witness)? {
            return Err(Error::Internal(format!("lifted witness {{{witness}}} is not {k}-power dominating")));
        }
        Ok(ContractionBounds {
            parameter: Parameter::PowerDomination,
            k,
            interval: BoundInterval {
                lower: on_contracted.value.saturating_sub(1).max(1),
                upper: on_contracted.value + reps.len(),
                lower_ref: "pd-contraction-lower".into(),
                upper_ref: "pd-low-degree-upper".into(),
                witness_upper: Some(witness),
            },
            contracted_value: on_contracted.value,
            side_value: reps.len(),
            boundary_size: g.boundary(x)?.len(),
        })
    })
}

/// `γ_{P,1}(G/X) ≤ γ_{P,1}(G)` for a connected `G[X]` whose vertices have degree at most 2.
pub fn pd_contraction_monotone_k1(g: &Graph, x: &VertexSet, cfg: &SearchConfig) -> Result<MonotoneCheck> {
    require_connected(g)?;
    let (gx, _) = g.induced_subgraph(x)?;
    if !gx.is_connected() {
        return Err(Error::HypothesisNotMet("G[X] is not connected".into()));
    }
    require_degree_at_most(g, x, 2)?;
    run_with_workers(cfg.workers, || {
        let value_g = min_k_power_dominating_in(g, 1, cfg, None)?.value;
        let c = g.contract(x)?;
        let value_gx = min_k_power_dominating_in(&c.graph, 1, cfg, None)?.value;
        Ok(MonotoneCheck { value_g, value_gx, holds: value_gx <= value_g })
    })
}

/// k-forcing contraction bounds. Checks first whether some minimum k-forcing set of `X̂` uses
/// only core vertices; without that there is no interval.
pub fn zf_contraction_bounds(g: &Graph, k: usize, x: &VertexSet, cfg: &SearchConfig) -> Result<ZfContractionBounds> {
    require_connected(g)?;
    run_with_workers(cfg.workers, || {
        let c = g.contract(x)?;
        let boundary_size = g.boundary(x)?.len();
        let on_contracted = min_k_forcing_in(&c.graph, k, cfg)?;
        let xhat = build_xhat(g, x)?;
        let (xhat_value, inside) = forcing_inside_core(&xhat, k, cfg)?;
        let Some(core_set) = inside else {
            return Ok(ZfContractionBounds {
                k,
                hypothesis_met: false,
                hypothesis_detail: format!(
                    "every minimum {k}-forcing set of the augmented graph (size {xhat_value}) uses a pendant"
                ),
                interval: None,
                contracted_value: on_contracted.value,
                xhat_value,
                boundary_size,
            });
        };
        let z = on_contracted.value as i64;
        let lower = if boundary_size <= k { z - 1 } else { z - boundary_size as i64 + k as i64 };
        let candidate = c.id_map.map_back(&on_contracted.witness).union(&xhat.lift(&core_set));
        let witness_upper = is_k_forcing_set(g, k, &candidate)?.then_some(candidate);
        Ok(ZfContractionBounds {
            k,
            hypothesis_met: true,
            hypothesis_detail: format!("a minimum {k}-forcing set of the augmented graph avoids the pendants"),
            interval: Some(BoundInterval {
                lower: lower.max(1) as usize,
                upper: on_contracted.value + xhat_value,
                lower_ref: if boundary_size <= k {
                    "zf-contraction-lower-small-boundary"
                } else {
                    "zf-contraction-lower"
                }
                .into(),
                upper_ref: "zf-contraction-upper".into(),
                witness_upper,
            }),
            contracted_value: on_contracted.value,
            xhat_value,
            boundary_size,
        })
    })
}

/// The k-forcing contraction bound for sets whose vertices have degree at most `k`, with
/// `c(G[X])` in place of `Z_k(X̂)`. Gated on the same pendant-free minimum forcing set of `X̂`.
pub fn zf_low_degree_bounds(g: &Graph, k: usize, x: &VertexSet, cfg: &SearchConfig) -> Result<ZfContractionBounds> {
    require_connected(g)?;
    g.check_set(x)?;
    require_degree_at_most(g, x, k)?;
    let mut r = zf_contraction_bounds(g, k, x, cfg)?;
    let Some(interval) = r.interval.as_mut() else {
        return Ok(r);
    };
    let (gx, map) = g.induced_subgraph(x)?;
    let reps: VertexSet =
        gx.components().iter().filter_map(|comp| comp.first()).filter_map(|v| map.to_old(v)).collect();
    let c = g.contract(x)?;
    let on_contracted = run_with_workers(cfg.workers, || min_k_forcing_in(&c.graph, k, cfg))?;
    let candidate = c.id_map.map_back(&on_contracted.witness).union(&reps);
    interval.upper = r.contracted_value + reps.len();
    interval.upper_ref = "zf-low-degree-upper".into();
    interval.witness_upper = is_k_forcing_set(g, k, &candidate)?.then_some(candidate);
    Ok(r)
}

/// `Z_k(X̂)` and, when one exists, a minimum k-forcing set of `X̂` made of core vertices.
fn forcing_inside_core(xhat: &XHatResult, k: usize, cfg: &SearchConfig) -> Result<(usize, Option<VertexSet>)> {
    let sizes = component_values(&xhat.graph, k, Mode::Forcing, cfg)?;
    let inside = forcing_set_inside(&xhat.graph, k, cfg, &xhat.core_ids, &sizes)?;
    Ok((sizes.iter().sum(), inside))
}

/// `γ_{P,k}(G) ≤ Σ γ_{P,k}(X̂_i)`, solving the parts concurrently and verifying the union of the
/// per-part witnesses on `G`.
pub fn pd_partition_bound(g: &Graph, k: usize, parts: &PartitionSpec, cfg: &SearchConfig) -> Result<PartitionBound> {
    require_connected(g)?;
    parts.validate(g)?;
    run_with_workers(cfg.workers, || {
        let reports = map_parts(parts, cfg, |index, part| {
            let start = Instant::now();
            let xhat = build_xhat(g, part)?;
            let r = min_k_power_dominating_in(&xhat.graph, k, cfg, Some(&xhat.core_ids))?;
            Ok(PartReport {
                index,
                part_size: part.len(),
                xhat_order: xhat.graph.order(),
                value: r.value,
                witness: Some(xhat.lift(&r.witness)),
                pds_inside_part: Some(true),
                forcing_inside_part: None,
                elapsed_ms: Some(start.elapsed().as_secs_f64() * 1e3),
            })
        })?;
        let bound = reports.iter().map(|r| r.value).sum();
        let witness = reports.iter().filter_map(|r| r.witness.as_ref()).fold(VertexSet::new(), |acc, w| acc.union(w));
        if !is_k_power_dominating_set(g, k, &witness)? {
            return Err(Error::Internal(format!("union witness {{{witness}}} is not {k}-power dominating")));
        }
        Ok(PartitionBound {
            parameter: Parameter::PowerDomination,
            k,
            hypothesis_met: true,
            bound: Some(bound),
            witness: Some(witness),
            witness_verified: true,
            parts: reports,
        })
    })
}

/// `Z_k(G) ≤ Σ Z_k(X̂_i)`, emitted only when every `X̂_i` has a minimum k-forcing set inside its
/// part. Each part also reports whether a minimum k-power dominating set of `X̂_i` lies inside it.
pub fn zf_partition_bound(g: &Graph, k: usize, parts: &PartitionSpec, cfg: &SearchConfig) -> Result<PartitionBound> {
    require_connected(g)?;
    parts.validate(g)?;
    run_with_workers(cfg.workers, || {
        let reports = map_parts(parts, cfg, |index, part| {
            let start = Instant::now();
            let xhat = build_xhat(g, part)?;
            let (value, inside) = forcing_inside_core(&xhat, k, cfg)?;
            let unrestricted = min_k_power_dominating_in(&xhat.graph, k, &cfg.without_pruning(), None)?.value;
            let restricted =
                min_k_power_dominating_in(&xhat.graph, k, &cfg.without_pruning(), Some(&xhat.core_ids))?.value;
            Ok(PartReport {
                index,
                part_size: part.len(),
                xhat_order: xhat.graph.order(),
                value,
                forcing_inside_part: Some(inside.is_some()),
                witness: inside.map(|s| xhat.lift(&s)),
                pds_inside_part: Some(restricted == unrestricted),
                elapsed_ms: Some(start.elapsed().as_secs_f64() * 1e3),
            })
        })?;
        let hypothesis_met = reports.iter().all(|r| r.forcing_inside_part == Some(true));
        if !hypothesis_met {
            return Ok(PartitionBound {
                parameter: Parameter::ForcingNumber,
                k,
                hypothesis_met,
                bound: None,
                witness: None,
                witness_verified: false,
                parts: reports,
            });
        }
        let bound = reports.iter().map(|r| r.value).sum();
        let witness = reports.iter().filter_map(|r| r.witness.as_ref()).fold(VertexSet::new(), |acc, w| acc.union(w));
        let witness_verified = is_k_forcing_set(g, k, &witness)?;
        Ok(PartitionBound {
            parameter: Parameter::ForcingNumber,
            k,
            hypothesis_met,
            bound: Some(bound),
            witness: Some(witness),
            witness_verified,
            parts: reports,
        })
    })
}

/// Runs `f` on every part, concurrently when configured, returning results in part order.
fn map_parts<F>(parts: &PartitionSpec, cfg: &SearchConfig, f: F) -> Result<Vec<PartReport>>
where
    F: Fn(usize, &VertexSet) -> Result<PartReport> + Sync,
{
    ordered_map(&parts.parts, cfg.parallel(), f).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, StandardFamily};
    use crate::solvers::{min_k_forcing, min_k_power_dominating};

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn xhat_preserves_core_degrees() {
        let g = generators::random_connected(9, 0.35, 7).unwrap();
        let x = VertexSet::from([0, 2, 3, 7]);
        let xh = build_xhat(&g, &x).unwrap();
        xh.graph.validate().unwrap();
        for (i, v) in x.iter().enumerate() {
            assert_eq!(xh.graph.degree(i), g.degree(v));
            assert_eq!(xh.pendant_map[i].len(), g.adj(v).iter().filter(|&&w| !x.contains(w)).count());
            for p in &xh.pendant_map[i] {
                assert_eq!(xh.graph.adj(p), &[i]);
            }
        }
    }

    #[test]
    fn xhat_of_whole_graph_is_the_graph() {
        let g = generators::sierpinski(3, 2).unwrap();
        let xh = build_xhat(&g, &g.vertices()).unwrap();
        assert_eq!(xh.graph, g);
        assert_eq!(xh.pendant_count(), 0);
        assert!(matches!(build_xhat(&g, &VertexSet::new()), Err(Error::EmptySet)));
    }

    #[test]
    fn xhat_of_uq_is_triangle_with_pendants() {
        let (u2, x) = generators::gadget_uq(2, 2).unwrap();
        let xh = build_xhat(&u2, &x).unwrap();
        assert_eq!((xh.graph.order(), xh.graph.size()), (6, 6));
        assert!(xh.pendant_map.iter().all(|p| p.len() == 1));
        assert_eq!(min_k_power_dominating(&xh.graph, 2, &cfg()).unwrap().value, 1);
    }

    #[test]
    fn xhat_of_sierpinski_block() {
        let g = generators::sierpinski(3, 4).unwrap();
        let block = generators::prefix_block(&g, 3, 4, &[0]).unwrap();
        let xh = build_xhat(&g, &block).unwrap();
        // pendants sit at 0111 and 0222; 0000 is an extreme vertex of S_3^4
        let with_pendant: Vec<&str> = (0..27)
            .filter(|&i| !xh.pendant_map[i].is_empty())
            .map(|i| g.label(xh.core_to_original[i]).unwrap())
            .collect();
        assert_eq!(with_pendant, vec!["0111", "0222"]);
        let block = generators::prefix_block(&g, 3, 4, &[1]).unwrap();
        let xh = build_xhat(&g, &block).unwrap();
        assert_eq!(xh.pendant_count(), 2);
    }

    #[test]
    fn uq_meets_upper_bound() {
        let (u2, x) = generators::gadget_uq(2, 2).unwrap();
        let b = pd_contraction_bounds(&u2, 2, &x, &cfg()).unwrap();
        assert_eq!((b.contracted_value, b.side_value), (1, 1));
        assert_eq!((b.interval.lower, b.interval.upper), (1, 2));
        let w = b.interval.witness_upper.unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(min_k_power_dominating(&u2, 2, &cfg()).unwrap().value, b.interval.upper);
    }

    #[test]
    fn lq_meets_lower_bound() {
        for k in [1, 2] {
            let (l, x) = generators::gadget_lq(k, 2).unwrap();
            let b = pd_contraction_bounds(&l, k, &x, &cfg()).unwrap();
            assert_eq!(b.contracted_value, 2, "k={k}");
            assert_eq!(b.interval.lower, 1);
            assert_eq!(min_k_power_dominating(&l, k, &cfg()).unwrap().value, 1);
        }
        // with a single leaf on v_0 the k = 1 contraction does not increase the value
        let (l, x) = generators::gadget_lq(1, 1).unwrap();
        let c = l.contract(&x).unwrap();
        assert_eq!(min_k_power_dominating(&c.graph, 1, &cfg()).unwrap().value, 1);
    }

    #[test]
    fn tkc_gap() {
        let (t, x) = generators::gadget_tkc(1, 3).unwrap();
        let b = pd_contraction_bounds(&t, 1, &x, &cfg()).unwrap();
        assert_eq!((b.contracted_value, b.side_value), (1, 3));
        assert_eq!(min_k_power_dominating(&t, 1, &cfg()).unwrap().value, 3);
    }

    #[test]
    fn low_degree_bounds() {
        let p = generators::standard_family(StandardFamily::Path(8)).unwrap();
        let x: VertexSet = (1..7).collect();
        let b = pd_low_degree_bounds(&p, 1, &x, &cfg()).unwrap();
        assert_eq!(b.contracted_value, 1);
        assert_eq!((b.interval.lower, b.interval.upper), (1, 2));

        // singleton X of degree ≤ k+1
        let g = generators::random_connected(8, 0.3, 42).unwrap();
        let v = (0..8).find(|&v| g.degree(v) <= 2).unwrap();
        let b = pd_low_degree_bounds(&g, 1, &VertexSet::from([v]), &cfg()).unwrap();
        assert_eq!(b.side_value, 1);
        assert_eq!(b.interval.upper, b.contracted_value + 1);

        let star = generators::standard_family(StandardFamily::Star(4)).unwrap();
        let err = pd_low_degree_bounds(&star, 1, &VertexSet::from([0]), &cfg()).unwrap_err();
        assert!(err.to_string().contains("vertex 0"));
    }

    #[test]
    fn monotone_k1() {
        for n in 3..9 {
            let p = generators::standard_family(StandardFamily::Path(n)).unwrap();
            let x: VertexSet = (1..n - 1).collect();
            let m = pd_contraction_monotone_k1(&p, &x, &cfg()).unwrap();
            assert_eq!((m.value_g, m.value_gx, m.holds), (1, 1, true));
        }
        // C_6 with a pendant at 0, X = three consecutive cycle vertices of degree 2
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 6));
        let g = Graph::from_edges(7, edges).unwrap();
        let m = pd_contraction_monotone_k1(&g, &VertexSet::from([2, 3, 4]), &cfg()).unwrap();
        assert!(m.holds);
        assert!(pd_contraction_monotone_k1(&g, &VertexSet::from([1, 3]), &cfg()).is_err());
    }

    #[test]
    fn zf_bounds_hypothesis() {
        // single vertex of degree ≥ k+1: X̂ is a star whose minimum forcing sets need a leaf
        let star = generators::standard_family(StandardFamily::Star(4)).unwrap();
        let b = zf_contraction_bounds(&star, 1, &VertexSet::from([0]), &cfg()).unwrap();
        assert!(!b.hypothesis_met);
        assert!(b.interval.is_none());

        // interior of a path: X̂ is a longer path, forced only from its pendant ends
        let p = generators::standard_family(StandardFamily::Path(6)).unwrap();
        assert!(!zf_contraction_bounds(&p, 1, &VertexSet::from([1, 2]), &cfg()).unwrap().hypothesis_met);

        // end segment of a path: boundary of size 1
        let b = zf_contraction_bounds(&p, 1, &VertexSet::from([0, 1]), &cfg()).unwrap();
        assert!(b.hypothesis_met);
        let i = b.interval.unwrap();
        assert_eq!(i.lower_ref, "zf-contraction-lower-small-boundary");
        assert!(i.witness_upper.is_some());

        // triangle with pendants at two corners; X = triangle, boundary of size 2
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
        let b = zf_contraction_bounds(&g, 1, &VertexSet::from([0, 1, 2]), &cfg()).unwrap();
        assert!(b.hypothesis_met);
        assert_eq!((b.boundary_size, b.xhat_value), (2, 2));
        let i = b.interval.unwrap();
        assert_eq!(i.lower_ref, "zf-contraction-lower");
        let z = min_k_forcing(&g, 1, &cfg()).unwrap().value;
        assert!(i.lower <= z && z <= i.upper);
    }

    #[test]
    fn zf_low_degree() {
        // end segment of a path, k = 2: every vertex of X has degree at most 2
        let p = generators::standard_family(StandardFamily::Path(7)).unwrap();
        let x = VertexSet::from([0, 1, 2]);
        let b = zf_low_degree_bounds(&p, 2, &x, &cfg()).unwrap();
        let i = b.interval.unwrap();
        assert_eq!(i.upper_ref, "zf-low-degree-upper");
        assert_eq!(i.upper, b.contracted_value + 1);
        let z = min_k_forcing(&p, 2, &cfg()).unwrap().value;
        assert!(i.lower <= z && z <= i.upper);
        assert!(i.witness_upper.is_some());
        let err = zf_low_degree_bounds(&p, 1, &x, &cfg()).unwrap_err();
        assert!(matches!(err, Error::HypothesisNotMet(_)));
    }

    #[test]
    fn partition_validation() {
        let g = generators::standard_family(StandardFamily::Path(4)).unwrap();
        let ok = PartitionSpec::from_json("[[0,1],[2,3]]").unwrap();
        ok.validate(&g).unwrap();
        for bad in ["[[0,1],[1,2,3]]", "[[0,1],[2]]", "[[0,1],[],[2,3]]", "[[0,1,2,3,4]]"] {
            let spec = PartitionSpec::from_json(bad).unwrap();
            assert!(matches!(spec.validate(&g), Err(Error::InvalidPartition(_))), "{bad}");
        }
        assert!(PartitionSpec::from_json("[[0,0]]").is_err());
        assert!(PartitionSpec::from_json("{}").is_err());
    }

    #[test]
    fn trivial_partition_is_exact() {
        let g = generators::sierpinski(3, 3).unwrap();
        let spec = PartitionSpec::new(vec![g.vertices()]);
        let b = pd_partition_bound(&g, 1, &spec, &cfg()).unwrap();
        assert_eq!(b.bound, Some(3));
        let z = zf_partition_bound(&g, 1, &spec, &cfg()).unwrap();
        assert_eq!(z.bound, Some(min_k_forcing(&g, 1, &cfg()).unwrap().value));
    }

    #[test]
    fn singleton_parts_on_clique() {
        let k5 = generators::standard_family(StandardFamily::Complete(5)).unwrap();
        let spec = PartitionSpec::new((0..5).map(VertexSet::singleton).collect());
        let b = pd_partition_bound(&k5, 1, &spec, &cfg()).unwrap();
        assert_eq!(b.bound, Some(5));
        let z = zf_partition_bound(&k5, 1, &spec, &cfg()).unwrap();
        assert!(!z.hypothesis_met);
        assert!(z.parts.iter().all(|p| p.forcing_inside_part == Some(false)));
        assert!(z.parts.iter().all(|p| p.pds_inside_part == Some(true)));
        assert!(z.bound.is_none());
    }

    #[test]
    fn sierpinski_blocks_partition() {
        let g = generators::sierpinski(3, 3).unwrap();
        let spec = PartitionSpec::new(
            generators::prefixes(3, 1).iter().map(|p| generators::prefix_block(&g, 3, 3, p).unwrap()).collect(),
        );
        let z = zf_partition_bound(&g, 1, &spec, &cfg()).unwrap();
        if z.hypothesis_met {
            assert!(z.witness_verified);
            assert!(z.bound.unwrap() >= min_k_forcing(&g, 1, &cfg()).unwrap().value);
        }
        let seq = pd_partition_bound(&g, 1, &spec, &cfg()).unwrap();
        let par = pd_partition_bound(&g, 1, &spec, &cfg().with_workers(3)).unwrap();
        let (mut a, mut b) = (seq.clone(), par);
        a.strip_timings();
        b.strip_timings();
        assert_eq!(a, b);
        assert!(seq.bound.unwrap() >= 3);
    }
}
