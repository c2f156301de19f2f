//! Simple undirected graphs as immutable values, plus the graph algebra used
//! throughout: disjoint union, join, vertex/edge deletion and contraction.
//!
//! Vertices are `0..n`. Every operation returns a fresh `Graph`; relabeling
//! after a deletion or contraction is a compact shift-down of the labels
//! above the removed vertex.

use std::fmt;

use crate::bitset::VertexSet;

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: VertexId, n: usize },
    #[error("edge {{{u},{v}}} is not in the graph")]
    EdgeNotFound { u: VertexId, v: VertexId },
    #[error("cannot contract vertex {0} with itself")]
    InvalidContraction(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph `O_n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![VertexSet::with_capacity(n); n],
        }
    }

    /// The complete graph `K_k`.
    pub fn complete(k: usize) -> Self {
        let mut g = Graph::empty(k);
        for u in 0..k {
            for v in u + 1..k {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    /// The cycle `C_n`; for `n < 3` this degenerates to the path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.link(0, n - 1);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.link(i, (i + 1) % 5);
            g.link(i, i + 5);
            g.link(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Builds a graph from an edge list. Repeated pairs collapse (set
    /// semantics); loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    fn link(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    fn unlink(&mut self, u: VertexId, v: VertexId) {
        if self.adj[u].contains(v) {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
            self.m -= 1;
        }
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, u: VertexId) -> Result<&VertexSet, GraphError> {
        self.check(u)?;
        Ok(&self.adj[u])
    }

    pub fn degree(&self, u: VertexId) -> Result<usize, GraphError> {
        Ok(self.neighbors(u)?.len())
    }

    /// Unchecked neighbourhood access for hot loops.
    pub(crate) fn adj(&self, u: VertexId) -> &VertexSet {
        &self.adj[u]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// Disjoint union; `h`'s vertices are shifted up by `self.n()`.
    pub fn union(&self, h: &Graph) -> Graph {
        let off = self.n;
        let mut g = Graph::empty(self.n + h.n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in h.edges() {
            g.link(u + off, v + off);
        }
        g
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Graph {
        let mut g = self.union(h);
        for u in 0..self.n {
            for v in 0..h.n {
                g.link(u, self.n + v);
            }
        }
        g
    }

    /// `G + v`: one new isolated vertex, labelled `n`.
    pub fn add_isolated(&self) -> Graph {
        self.union(&Graph::empty(1))
    }

    /// `G - w`. Labels above `w` shift down by one.
    pub fn delete_vertex(&self, w: VertexId) -> Result<Graph, GraphError> {
        self.check(w)?;
        let relabel = |x: VertexId| if x > w { x - 1 } else { x };
        let mut g = Graph::empty(self.n - 1);
        for (u, v) in self.edges().filter(|&(u, v)| u != w && v != w) {
            g.link(relabel(u), relabel(v));
        }
        Ok(g)
    }

    pub fn delete_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeNotFound { u, v });
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Adds the edge `{u, v}`; a no-op if it is already present.
    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// `G / uv`: identifies `u` and `v` (adjacent or not). The merged vertex
    /// keeps label `min(u, v)` and receives `N(u) ∪ N(v) - {u, v}`; labels
    /// above `max(u, v)` shift down by one.
    pub fn contract(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::InvalidContraction(u));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |x: VertexId| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                g.link(a, b);
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adj[v].iter() {
                if pos[w] != usize::MAX && pos[w] > i {
                    g.link(i, pos[w]);
                }
            }
        }
        g
    }

    /// Applies a relabelling: old vertex `x` becomes `perm[x]`.
    pub fn permute(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn component_vertex_sets(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for y in self.adj[x].iter() {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as standalone graphs, ordered by smallest
    /// original vertex label.
    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_vertex_sets().iter().map(|c| self.induced(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_vertex_sets().len() == 1
    }

    /// True when the neighbourhood of `w` is a clique.
    pub fn is_simplicial(&self, w: VertexId) -> bool {
        let nbrs = &self.adj[w];
        let d = nbrs.len();
        nbrs.iter().all(|x| self.adj[x].intersection_len(nbrs) + 1 == d)
    }

    /// Checks the structural invariants: symmetric adjacency, no loops,
    /// endpoints in range and a consistent edge count.
    pub fn validate(&self) -> Result<(), String> {
        if self.adj.len() != self.n {
            return Err(format!("adjacency has {} rows for n = {}", self.adj.len(), self.n));
        }
        let mut half = 0;
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v >= self.n {
                    return Err(format!("edge {u}-{v} leaves the vertex range"));
                }
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if !self.adj[v].contains(u) {
                    return Err(format!("edge {u}-{v} is not symmetric"));
                }
                half += 1;
            }
        }
        if half != 2 * self.m {
            return Err(format!("edge count {} disagrees with adjacency ({})", self.m, half / 2));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_empty() {
        assert_eq!(Graph::complete(0).n(), 0);
        assert_eq!(Graph::complete(3).edge_count(), 3);
        assert_eq!(Graph::complete(9).edge_count(), 36);
        assert_eq!(Graph::empty(5).edge_count(), 0);
        assert_eq!(Graph::empty(2).union(&Graph::empty(3)), Graph::empty(5));
    }

    #[test]
    fn union_and_join() {
        let g = Graph::complete(2).union(&Graph::complete(1));
        assert_eq!((g.n(), g.edge_count()), (3, 1));
        let g = Graph::complete(3).union(&Graph::complete(3));
        assert_eq!((g.n(), g.edge_count()), (6, 6));
        assert_eq!(g.connected_components().len(), 2);

        assert_eq!(Graph::complete(1).join(&Graph::complete(1)), Graph::complete(2));
        assert_eq!(Graph::complete(3).join(&Graph::complete(4)), Graph::complete(7));
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(c4.degrees(), vec![2; 4]);
        assert_eq!(c4, Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn add_isolated_vertex() {
        assert_eq!(Graph::empty(0).add_isolated(), Graph::complete(1));
        let g = Graph::complete(3).add_isolated();
        assert_eq!((g.n(), g.edge_count()), (4, 3));
        assert_eq!(g.degree(3), Ok(0));
    }

    #[test]
    fn vertex_deletion() {
        for w in 0..3 {
            assert_eq!(Graph::complete(3).delete_vertex(w).unwrap(), Graph::complete(2));
        }
        assert_eq!(Graph::path(3).delete_vertex(1).unwrap(), Graph::empty(2));
        assert_eq!(Graph::complete(1).delete_vertex(0).unwrap(), Graph::empty(0));
        assert_eq!(
            Graph::complete(2).delete_vertex(2),
            Err(GraphError::InvalidVertex { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn edge_deletion() {
        assert_eq!(Graph::complete(2).delete_edge(0, 1).unwrap(), Graph::empty(2));
        // K_3 minus {0,1} is the path 0-2-1.
        let p = Graph::complete(3).delete_edge(0, 1).unwrap();
        assert_eq!(p, Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(p.edge_count(), 2);
        assert_eq!(
            Graph::empty(3).delete_edge(0, 1),
            Err(GraphError::EdgeNotFound { u: 0, v: 1 })
        );
    }

    #[test]
    fn contraction() {
        assert_eq!(Graph::complete(3).contract(0, 1).unwrap(), Graph::complete(2));
        assert_eq!(Graph::cycle(4).contract(1, 2).unwrap(), Graph::complete(3));
        assert_eq!(Graph::cycle(4).contract(0, 0), Err(GraphError::InvalidContraction(0)));
        // non-adjacent identification of the ends of P_3 gives K_2
        assert_eq!(Graph::path(3).contract(0, 2).unwrap(), Graph::complete(2));
        // merged vertex at min label, labels above max shift down
        let g = Graph::from_edges(5, [(1, 4), (3, 4), (0, 2)]).unwrap();
        let c = g.contract(4, 1).unwrap();
        assert_eq!(c, Graph::from_edges(4, [(1, 3), (0, 2)]).unwrap());
    }

    #[test]
    fn neighbors_and_degrees() {
        assert!(Graph::complete(5).degrees().iter().all(|&d| d == 4));
        assert!(Graph::empty(3).neighbors(0).unwrap().is_empty());
        let p = Graph::petersen();
        assert_eq!(p.degrees().iter().sum::<usize>(), 2 * p.edge_count());
        assert!(Graph::empty(3).neighbors(3).is_err());
    }

    #[test]
    fn components() {
        let g = Graph::complete(3).union(&Graph::complete(2));
        assert_eq!(g.connected_components(), vec![Graph::complete(3), Graph::complete(2)]);
        assert_eq!(Graph::empty(3).connected_components(), vec![Graph::complete(1); 3]);
        assert_eq!(Graph::cycle(5).connected_components(), vec![Graph::cycle(5)]);
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn loops_rejected() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::from_edges(3, [(1, 3)]).is_err());
    }

    #[test]
    fn simplicial_detection() {
        let g = Graph::complete(4).add_isolated().add_edge(4, 0).unwrap();
        assert!(g.is_simplicial(4));
        assert!(!g.is_simplicial(0));
        assert!(!Graph::cycle(4).is_simplicial(0));
    }
}
