//! Memoization keys for graphs.
//!
//! Up to a size threshold the key is a true canonical form found by
//! individualization-refinement with automorphism pruning, so isomorphic
//! graphs share a key. Above the threshold the vertices are only ordered by
//! colour refinement (ties broken by label); such keys still separate
//! non-isomorphic graphs but may split an isomorphism class, and the engine
//! does not memoize them.

use crate::graph::Graph;

pub const DEFAULT_EXACT_THRESHOLD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Whether the key came from the exact canonical search.
    pub fn is_exact(&self) -> bool {
        self.0.first() == Some(&0)
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_key_with_threshold(g, DEFAULT_EXACT_THRESHOLD)
}

pub fn canonical_key_with_threshold(g: &Graph, exact_threshold: usize) -> CanonicalKey {
    let (tag, order) = if g.n() <= exact_threshold {
        (0u8, canonical_order(g))
    } else {
        let mut cells = vec![(0..g.n()).collect::<Vec<_>>()];
        refine(g, &mut cells);
        (1u8, cells.concat())
    };
    let mut bytes = vec![tag];
    bytes.extend_from_slice(&(g.n() as u32).to_le_bytes());
    bytes.extend(encode(g, &order));
    CanonicalKey(bytes)
}

/// A canonical vertex ordering: `order[i]` is the vertex placed at position
/// `i`. Isomorphic graphs yield the same relabelled graph under their orders.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let mut search = Search {
        g,
        best: None,
        first: None,
        generators: Vec::new(),
    };
    search.descend(vec![(0..g.n()).collect()], &mut Vec::new());
    search.best.map(|(_, order)| order).unwrap_or_default()
}

/// Upper-triangle adjacency bits, column by column, under `order`.
fn encode(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = vec![0u8; (n * n.saturating_sub(1) / 2).div_ceil(8)];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                out[bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    out
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Cells split by their count profile into each current cell, sorted by
/// profile, so the result is equivariant under relabelling.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for ci in 0..cells.len() {
            if cells[ci].len() < 2 {
                continue;
            }
            let mut sigs: Vec<(Vec<usize>, usize)> = cells[ci]
                .iter()
                .map(|&v| {
                    let nbrs = g.adj(v);
                    let sig = cells
                        .iter()
                        .map(|c| c.iter().filter(|&&w| nbrs.contains(w)).count())
                        .collect();
                    (sig, v)
                })
                .collect();
            sigs.sort();
            if sigs.first().map(|s| &s.0) == sigs.last().map(|s| &s.0) {
                continue;
            }
            let mut parts: Vec<Vec<usize>> = Vec::new();
            let mut prev: Option<&Vec<usize>> = None;
            for (sig, v) in &sigs {
                if prev != Some(sig) {
                    parts.push(Vec::new());
                    prev = Some(sig);
                }
                parts.last_mut().unwrap().push(*v);
            }
            cells.splice(ci..=ci, parts);
            continue 'outer;
        }
        break;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.concat());
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target].clone() {
            if !explored.is_empty() {
                let orbits = self.orbits_fixing(prefix);
                if explored.iter().any(|&e| orbits.same(e, v)) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let code = encode(self.g, &order);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == code {
                // maps this leaf's labelling onto the reference labelling
                let mut gamma = vec![0; order.len()];
                for (pos, &v) in order.iter().enumerate() {
                    gamma[v] = reference.1[pos];
                }
                if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                    self.generators.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((code.clone(), order.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
            self.best = Some((code, order));
        }
    }

    fn orbits_fixing(&self, prefix: &[usize]) -> Orbits {
        let mut orbits = Orbits::new(self.g.n());
        for gen in &self.generators {
            if prefix.iter().all(|&p| gen[p] == p) {
                for (x, &y) in gen.iter().enumerate() {
                    orbits.merge(x, y);
                }
            }
        }
        orbits
    }
}

struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&self, a: usize, b: usize) -> bool {
        let root = |mut x: usize| {
            while self.parent[x] != x {
                x = self.parent[x];
            }
            x
        };
        root(a) == root(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_square_shares_key() {
        let a = Graph::cycle(4);
        let b = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        assert!(canonical_key(&a).is_exact());
    }

    #[test]
    fn distinct_edge_counts_differ() {
        assert_ne!(canonical_key(&Graph::complete(3)), canonical_key(&Graph::path(3)));
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for g in [
            Graph::empty(12),
            Graph::complete(12),
            Graph::empty(6).join(&Graph::empty(6)),
            Graph::cycle(12),
            Graph::complete(3)
                .union(&Graph::complete(3))
                .union(&Graph::complete(3))
                .union(&Graph::complete(3)),
        ] {
            let order = canonical_order(&g);
            let mut sorted = order.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..g.n()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn above_threshold_key_is_not_exact() {
        let k = canonical_key_with_threshold(&Graph::cycle(5), 4);
        assert!(!k.is_exact());
        assert_ne!(k, canonical_key_with_threshold(&Graph::path(5), 4));
    }
}
