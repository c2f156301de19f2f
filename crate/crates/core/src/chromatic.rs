//! Chromatic polynomials by deletion–contraction, and the brute-force
//! oracles used to check them.
//!
//! The engine applies the subtractive identity `P(G) = P(G - uv) - P(G / uv)`
//! after a fixed sequence of reductions: isolated vertices, connected
//! components, complete graphs, trees, and simplicial vertices (a vertex
//! whose neighbourhood is a clique of size `d` contributes a factor `λ - d`).
//! Subproblems on at most `exact_canonical_threshold` vertices are memoized
//! under their canonical key.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key_with_threshold, CanonicalKey, DEFAULT_EXACT_THRESHOLD};
use crate::graph::{Graph, VertexId};
use crate::poly::{falling_factorial, FallingFactorialForm, IntPolynomial, PolyError};

/// Largest `λ^n` the colouring oracle will enumerate.
pub const COLORING_ORACLE_LIMIT: u64 = 100_000_000;
/// Largest vertex count the partition oracle will enumerate.
pub const PARTITION_ORACLE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChromaticError {
    #[error("brute-force oracle refused: {0}")]
    OracleTooLarge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgePolicy {
    /// Edge whose endpoints have the largest degree sum.
    MaxDegreeSum,
    /// An edge at a minimum-degree vertex, towards its highest-degree neighbour.
    #[default]
    MinDegree,
    /// Lexicographically first edge.
    First,
}

impl EdgePolicy {
    pub fn select(self, g: &Graph) -> Option<(VertexId, VertexId)> {
        let deg = g.degrees();
        match self {
            EdgePolicy::First => g.edges().next(),
            EdgePolicy::MaxDegreeSum => g.edges().max_by(|&(a, b), &(c, d)| {
                (deg[a] + deg[b])
                    .cmp(&(deg[c] + deg[d]))
                    .then_with(|| (c, d).cmp(&(a, b)))
            }),
            EdgePolicy::MinDegree => {
                let u = (0..g.n()).filter(|&v| deg[v] > 0).min_by_key(|&v| (deg[v], v))?;
                let v = g.adj(u).iter().max_by_key(|&w| (deg[w], std::cmp::Reverse(w)))?;
                Some((u.min(v), u.max(v)))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub memo_enabled: bool,
    pub exact_canonical_threshold: usize,
    pub edge_policy: EdgePolicy,
    /// Optional second-level store shared by every engine built from this
    /// config. Only consulted when `memo_enabled` is set.
    #[serde(skip)]
    pub store: Option<SharedStore>,
}

#[derive(Clone)]
pub struct SharedStore(pub Arc<dyn PolyStore>);

impl std::fmt::Debug for SharedStore {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("SharedStore(..)")
    }
}

impl PartialEq for SharedStore {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for SharedStore {}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            memo_enabled: true,
            exact_canonical_threshold: DEFAULT_EXACT_THRESHOLD,
            edge_policy: EdgePolicy::default(),
            store: None,
        }
    }
}

impl EngineConfig {
    pub fn without_memo() -> Self {
        EngineConfig {
            memo_enabled: false,
            ..Self::default()
        }
    }
}

/// Persistent polynomial store consulted after the in-memory memo.
pub trait PolyStore: Send + Sync {
    fn get(&self, key: &CanonicalKey) -> Option<IntPolynomial>;
    fn put(&self, key: &CanonicalKey, poly: &IntPolynomial);
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub branches: u64,
    pub memo_hits: u64,
    pub store_hits: u64,
}

pub struct ChromaticEngine {
    config: EngineConfig,
    memo: HashMap<CanonicalKey, IntPolynomial>,
    stats: EngineStats,
}

impl ChromaticEngine {
    pub fn new(config: EngineConfig) -> Self {
        ChromaticEngine {
            config,
            memo: HashMap::new(),
            stats: EngineStats::default(),
        }
    }

    pub fn with_store(mut self, store: Arc<dyn PolyStore>) -> Self {
        self.config.store = Some(SharedStore(store));
        self
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    pub fn polynomial(&mut self, g: &Graph) -> IntPolynomial {
        self.compute(g.clone())
    }

    fn compute(&mut self, g: Graph) -> IntPolynomial {
        let n = g.n();
        if n == 0 {
            return IntPolynomial::one();
        }

        let deg = g.degrees();
        let isolated = deg.iter().filter(|&&d| d == 0).count();
        if isolated > 0 {
            let rest: Vec<VertexId> = (0..n).filter(|&v| deg[v] > 0).collect();
            let core = self.compute(g.induced(&rest));
            return &core * &IntPolynomial::monomial(isolated);
        }

        let comps = g.component_vertex_sets();
        if comps.len() > 1 {
            return comps.iter().fold(IntPolynomial::one(), |acc, c| {
                let p = self.compute(g.induced(c));
                &acc * &p
            });
        }

        if g.is_complete() {
            return IntPolynomial::falling(n);
        }
        if g.edge_count() == n - 1 {
            return tree_polynomial(n);
        }
        if let Some(w) = (0..n).find(|&w| g.is_simplicial(w)) {
            let rest = g.delete_vertex(w).expect("vertex in range");
            return self.compute(rest).mul_linear(deg[w] as i64);
        }

        let key = (self.config.memo_enabled && n <= self.config.exact_canonical_threshold)
            .then(|| canonical_key_with_threshold(&g, self.config.exact_canonical_threshold));
        if let Some(key) = &key {
            if let Some(p) = self.memo.get(key) {
                self.stats.memo_hits += 1;
                return p.clone();
            }
            if let Some(p) = self.config.store.as_ref().and_then(|s| s.0.get(key)) {
                self.stats.store_hits += 1;
                self.memo.insert(key.clone(), p.clone());
                return p;
            }
        }

        self.stats.branches += 1;
        let (u, v) = self
            .config
            .edge_policy
            .select(&g)
            .expect("non-complete connected graph has edges");
        let deleted = self.compute(g.delete_edge(u, v).expect("selected edge exists"));
        let contracted = self.compute(g.contract(u, v).expect("distinct endpoints"));
        let p = &deleted - &contracted;

        if let Some(key) = key {
            if let Some(s) = &self.config.store {
                s.0.put(&key, &p);
            }
            self.memo.insert(key, p.clone());
        }
        p
    }
}

/// λ(λ-1)^{n-1}, the chromatic polynomial of every tree on `n ≥ 1` vertices.
fn tree_polynomial(n: usize) -> IntPolynomial {
    &IntPolynomial::lambda() * &IntPolynomial::linear(1).pow(n - 1)
}

pub fn chromatic_polynomial(g: &Graph, config: &EngineConfig) -> IntPolynomial {
    ChromaticEngine::new(config.clone()).polynomial(g)
}

/// α(G, k) for k = 1..n, read off the engine's polynomial.
pub fn alpha(g: &Graph, config: &EngineConfig) -> Result<FallingFactorialForm, ChromaticError> {
    Ok(chromatic_polynomial(g, config).to_falling_basis(g.n())?)
}

/// Smallest positive integer at which `p` does not vanish, i.e. the
/// chromatic number when `p` is a chromatic polynomial of a graph with at
/// least one vertex. Zero for the constant polynomial.
pub fn chromatic_number(p: &IntPolynomial) -> usize {
    let deg = p.degree().unwrap_or(0);
    (1..=deg).find(|&x| !p.eval_i64(x as i64).is_zero()).unwrap_or(0)
}

/// Counts proper colourings with colours `0..lambda` by enumerating every
/// assignment. Refuses when `lambda^n` exceeds [`COLORING_ORACLE_LIMIT`].
pub fn count_colorings_bruteforce(g: &Graph, lambda: u64) -> Result<BigInt, ChromaticError> {
    let n = g.n();
    let total = (0..n).try_fold(1u64, |acc, _| {
        acc.checked_mul(lambda).filter(|&t| t <= COLORING_ORACLE_LIMIT)
    });
    let total = total.ok_or_else(|| {
        ChromaticError::OracleTooLarge(format!("{lambda}^{n} assignments exceed {COLORING_ORACLE_LIMIT}"))
    })?;
    if total == 0 {
        return Ok(BigInt::zero());
    }
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let mut colors = vec![0u64; n];
    let mut count: u64 = 0;
    loop {
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(BigInt::from(count));
            }
            colors[i] += 1;
            if colors[i] < lambda {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// α(G, k) by enumerating every set partition of the vertex set (restricted
/// growth strings) and keeping those whose blocks are all independent.
pub fn alpha_bruteforce(g: &Graph) -> Result<FallingFactorialForm, ChromaticError> {
    let n = g.n();
    if n > PARTITION_ORACLE_MAX_N {
        return Err(ChromaticError::OracleTooLarge(format!(
            "partition enumeration on {n} vertices exceeds {PARTITION_ORACLE_MAX_N}"
        )));
    }
    let mut counts = vec![0u64; n];
    if n == 0 {
        return Ok(FallingFactorialForm::new(Vec::new()));
    }
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let mut block = vec![0usize; n];
    let mut max_before = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| block[u] != block[v]) {
            let k = block.iter().max().unwrap() + 1;
            counts[k - 1] += 1;
        }
        // next restricted growth string: block[0] = 0, block[i] ≤ 1 + max(block[..i])
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(FallingFactorialForm::new(
                    counts.into_iter().map(BigInt::from).collect(),
                ));
            }
            if block[i] <= max_before[i] {
                block[i] += 1;
                for j in i + 1..n {
                    block[j] = 0;
                    max_before[j] = max_before[j - 1].max(block[j - 1]);
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Colourings from `lambda` colours using exactly `k` of them:
/// α(G, k)·(λ)_k.
pub fn colorings_with_exactly_k(
    g: &Graph,
    k: usize,
    lambda: i64,
    config: &EngineConfig,
) -> Result<BigInt, ChromaticError> {
    if k == 0 || k > g.n() {
        return Err(ChromaticError::InvalidArgument(format!(
            "k = {k} must lie in 1..={}",
            g.n()
        )));
    }
    Ok(alpha(g, config)?.get(k) * falling_factorial(lambda, k))
}
