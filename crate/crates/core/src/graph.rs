//! Immutable simple undirected graphs and the surgery operations on them.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{IdMap, VertexSet};

/// Simple undirected graph on the vertex ids `0..n`, with optional per-vertex labels.
///
/// Adjacency lists are sorted. A graph always has at least one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
    edges: usize,
}

/// Maximum degree, minimum degree and the per-vertex degree sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    pub degrees: Vec<usize>,
}

/// The graph `G/X`: `G - X` plus a new vertex adjacent to `N[X] \ X`.
#[derive(Clone, Debug)]
pub struct ContractionResult {
    pub graph: Graph,
    /// Id of the vertex that replaced `X`; always the largest id.
    pub contracted_vertex: usize,
    pub id_map: IdMap,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops and duplicate edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edges = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::InvalidEdge { u: a, v: b, reason: "duplicate edge" });
            }
            edges += list.len();
        }
        Ok(Graph { adj, labels: vec![None; n], edges: edges / 2 })
    }

    /// Builds a graph from edges that may repeat; duplicates collapse to one edge.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Graph::from_edges(n, list)
    }

    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Graph> {
        if labels.len() != self.order() {
            return Err(Error::Precondition(format!(
                "{} labels supplied for a graph of order {}",
                labels.len(),
                self.order()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Vertex id carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    /// Sorted adjacency list of `v`. Panics when `v` is out of range.
    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, order: self.order() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_sorted_unchecked(self.adj[v].clone()))
    }

    /// Closed neighborhood `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.closed_neighborhood_unchecked(s))
    }

    pub(crate) fn closed_neighborhood_unchecked(&self, s: &VertexSet) -> VertexSet {
        let mut mark = vec![false; self.order()];
        for v in s {
            mark[v] = true;
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        collect_marked(&mark)
    }

    /// Open neighborhood of a set, `N(S)`, which may intersect `S`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut mark = vec![false; self.order()];
        for v in s {
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        Ok(collect_marked(&mark))
    }

    /// `N[X] \ X`.
    pub fn boundary(&self, x: &VertexSet) -> Result<VertexSet> {
        Ok(self.closed_neighborhood(x)?.difference(x))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        // order >= 1 is a construction invariant
        let max = degrees.iter().copied().max().unwrap_or(0);
        let min = degrees.iter().copied().min().unwrap_or(0);
        DegreeStats { max, min, degrees }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `G[X]`, re-indexed to `0..|X|` preserving relative order.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, IdMap)> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(x)?;
        let mut to_new = vec![None; self.order()];
        for (i, v) in x.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let adj: Vec<Vec<usize>> = x.iter().map(|v| self.adj[v].iter().filter_map(|&w| to_new[w]).collect()).collect();
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let labels = x.iter().map(|v| self.labels[v].clone()).collect();
        let to_old = x.iter().map(Some).collect();
        Ok((Graph { adj, labels, edges }, IdMap::new(to_new, to_old)))
    }

    /// `G - X = G[V \ X]`.
    pub fn delete_vertices(&self, x: &VertexSet) -> Result<(Graph, IdMap)> {
        self.check_set(x)?;
        let rest = x.complement(self.order());
        if rest.is_empty() {
            return Err(Error::WouldBeEmpty);
        }
        self.induced_subgraph(&rest)
    }

    /// Contraction `G/X`. `G[X]` need not be connected; `X = V` yields `K_1`.
    pub fn contract(&self, x: &VertexSet) -> Result<ContractionResult> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(x)?;
        let rest = x.complement(self.order());
        let boundary = self.boundary(x)?;
        let vx = rest.len();
        let mut to_new = vec![None; self.order()];
        for (i, v) in rest.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let mut adj: Vec<Vec<usize>> = rest
            .iter()
            .map(|v| {
                let mut list: Vec<usize> = self.adj[v].iter().filter_map(|&w| to_new[w]).collect();
                if boundary.contains(v) {
                    list.push(vx);
                }
                list
            })
            .collect();
        adj.push(boundary.iter().filter_map(|w| to_new[w]).collect());
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let mut labels: Vec<Option<String>> = rest.iter().map(|v| self.labels[v].clone()).collect();
        labels.push(None);
        let mut to_old: Vec<Option<usize>> = rest.iter().map(Some).collect();
        to_old.push(None);
        Ok(ContractionResult {
            graph: Graph { adj, labels, edges },
            contracted_vertex: vx,
            id_map: IdMap::new(to_new, to_old),
        })
    }

    /// Contraction of a single edge `{u, v}`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<ContractionResult> {
        if !self.has_edge(u, v) {
            return Err(Error::Precondition(format!("{{{u}, {v}}} is not an edge")));
        }
        self.contract(&VertexSet::from([u, v]))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + off).collect()));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Graph { adj, labels, edges: self.edges + other.edges }
    }

    /// Checks the simple-graph invariants: sorted, loop-free, duplicate-free, symmetric adjacency.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if self.labels.len() != n {
            return Err(Error::Internal("label vector length mismatch".into()));
        }
        let mut count = 0;
        for (u, list) in self.adj.iter().enumerate() {
            if !list.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Internal(format!("adjacency of {u} is not strictly sorted")));
            }
            for &v in list {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, order: n });
                }
                if v == u {
                    return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::InvalidEdge { u, v, reason: "asymmetric adjacency" });
                }
            }
            count += list.len();
        }
        if count != 2 * self.edges {
            return Err(Error::Internal("edge count mismatch".into()));
        }
        Ok(())
    }
}

fn collect_marked(mark: &[bool]) -> VertexSet {
    VertexSet::from_sorted_unchecked(mark.iter().enumerate().filter(|(_, &m)| m).map(|(v, _)| v).collect())
}
