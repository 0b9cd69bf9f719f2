//! Simple graphs on `{1, ..., n}`, labelings, and enumeration.

mod edge_list;
mod enumerate;
mod labeling;
mod vertex_set;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use enumerate::{enumerate_graphs, ENUMERATION_BOUND};
pub use labeling::{
    find_closed_labeling, find_weakly_closed_labeling, is_closed, is_closed_under, is_weakly_closed,
    is_weakly_closed_under, Labeling, SEARCH_BOUND,
};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph on `{1, ..., n}`, stored as adjacency masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph",
                max: MAX_VERTICES,
                got: n,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Domain(format!("loop at vertex {u}")));
        }
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::Domain(format!("vertex {w} outside 1..{}", self.n)));
            }
        }
        self.adj[u - 1] = self.adj[u - 1].with(v);
        self.adj[v - 1] = self.adj[v - 1].with(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("graph size");
        for v in 1..=n {
            g.adj[v - 1] = VertexSet::full(n).without(v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("graph size")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n, 1).unwrap();
        g
    }

    /// Complete multipartite graph; part `k` gets the next `sizes[k]` labels.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let n = sizes.iter().sum();
        let mut g = Graph::empty(n).expect("graph size");
        let mut part = Vec::with_capacity(n);
        for (k, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat(k).take(s));
        }
        for u in 1..=n {
            for v in u + 1..=n {
                if part[u - 1] != part[v - 1] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::complete_multipartite(&[a, b])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|u| self.adj[u - 1].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v - 1]))
    }

    /// Connected components of the subgraph induced on `t`, ordered by their
    /// smallest vertex.
    pub fn components(&self, t: VertexSet) -> Vec<VertexSet> {
        let mut left = t.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v - 1]);
                }
                frontier = next.intersection(left).difference(comp);
                comp = comp.union(frontier);
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(self.vertices()).len() <= 1
    }

    /// Image of the graph under `lab`: edge `{u, v}` becomes `{lab(u), lab(v)}`.
    pub fn relabel(&self, lab: &Labeling) -> Result<Graph> {
        if lab.len() != self.n {
            return Err(Error::Domain(format!(
                "labeling of {} vertices applied to a graph on {}",
                lab.len(),
                self.n
            )));
        }
        Graph::from_edges(
            self.n,
            self.edges().into_iter().map(|(u, v)| (lab.apply(u), lab.apply(v))),
        )
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 1..=self.n {
            g.adj[v - 1] = VertexSet::full(self.n).without(v).difference(self.adj[v - 1]);
        }
        g
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "G(n={}; {})", self.n, edges.join(" "))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let r = Repr::deserialize(d)?;
        Graph::from_edges(r.n, r.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn components_of_induced_subgraphs() {
        assert_eq!(Graph::path(3).components(set(&[1, 3])), vec![set(&[1]), set(&[3])]);
        assert_eq!(Graph::complete(4).components(set(&[1, 2, 3])), vec![set(&[1, 2, 3])]);
        assert_eq!(Graph::cycle(4).components(set(&[1, 2, 3])), vec![set(&[1, 2, 3])]);
        assert!(Graph::empty(0).unwrap().components(VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn constructors() {
        assert_eq!(Graph::cycle(4).edges(), vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::complete_bipartite(1, 3).edges(), vec![(1, 2), (1, 3), (1, 4)]);
        assert!(Graph::complete(4).is_clique(set(&[1, 2, 4])));
        assert!(!Graph::path(3).is_clique(set(&[1, 2, 3])));
        assert_eq!(Graph::cycle(5).complement().edge_count(), 5);
    }

    #[test]
    fn invalid_edges() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 4)]).is_err());
        assert!(matches!(Graph::empty(65), Err(Error::Capacity { .. })));
    }

    #[test]
    fn serializes_as_edge_list() {
        let json = serde_json::to_string(&Graph::path(3)).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), Graph::path(3));
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }
}
