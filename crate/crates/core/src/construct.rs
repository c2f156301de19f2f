//! The two-vertex attachment family.
//!
//! `G₀` is any graph on `k + s - 2` vertices containing a clique `K_k`
//! (`k = i + j`). `G₁` adds vertices `u` and `v`: `u` is joined to `i + t`
//! clique vertices, `v` to `j` clique vertices, the two windows overlap in
//! exactly `t` vertices and together cover the clique, and `u ~ v`.
//! `G₂ = (G₁ - v) ∪ K₁` and `G₃` keeps only one of `v`'s edges.
//!
//! With `n = k + s`, the closed forms are
//!
//! ```text
//! P(G₁, λ) = P(G₀, λ)·[(λ - i - t)(λ - j) - (λ - k)]
//! P(G₂, λ) = P(G₀, λ)·λ·(λ - i - t)
//! τ(G₁, G₂, n)      = P(G₀, n)P(G₀, n-1)·bracket
//! τ(G₁, G₁ - uv, n) = P(G₀, n)P(G₀, n-1)·(i(t - j) + s(s - 1))
//! ```
//!
//! where `bracket = j³ + 2(s-t-1)j² + (t² + 2t - 2ts + s² - s)j + s² - s + (t - j)i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chromatic::{ChromaticEngine, EngineConfig};
use crate::graph::{Graph, VertexId};
use crate::mean::tau_from_polynomials;
use crate::poly::IntPolynomial;
use crate::rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("theorem precondition t < j fails (t = {t}, j = {j})")]
    ThresholdPrecondition { t: u64, j: u64 },
    #[error("built instance violates invariant: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    pub i: u64,
    pub j: u64,
    pub s: u64,
    pub t: u64,
}

impl FamilyParams {
    pub fn new(i: u64, j: u64, s: u64, t: u64) -> Result<Self, ConstructionError> {
        let p = FamilyParams { i, j, s, t };
        p.validate()?;
        Ok(p)
    }

    pub fn k(&self) -> u64 {
        self.i + self.j
    }

    pub fn n(&self) -> u64 {
        self.k() + self.s
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let fail = |m: &str| Err(ConstructionError::InvalidParams(m.to_owned()));
        if self.i < 1 {
            return fail("i >= 1");
        }
        if self.j < 1 {
            return fail("j >= 1");
        }
        if self.s < 2 {
            return fail("s >= 2");
        }
        if self.t > self.j {
            return fail("t <= j");
        }
        if self.i + self.t > self.k() {
            return fail("i + t <= k");
        }
        Ok(())
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={} j={} s={} t={}", self.i, self.j, self.s, self.t)
    }
}

/// How the `s - 2` vertices of `G₀` outside the clique are wired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum G0Mode {
    /// Isolated vertices.
    #[default]
    CliquePlusIsolated,
    /// A path hanging off clique vertex 0.
    CliquePlusPath,
}

impl FromStr for G0Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "clique-plus-isolated" | "isolated" => Ok(G0Mode::CliquePlusIsolated),
            "clique-plus-path" | "path" => Ok(G0Mode::CliquePlusPath),
            other => Err(format!("unknown G0 mode {other:?}")),
        }
    }
}

impl fmt::Display for G0Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            G0Mode::CliquePlusIsolated => "clique-plus-isolated",
            G0Mode::CliquePlusPath => "clique-plus-path",
        })
    }
}

/// `G₀` on `k + s - 2` vertices with the clique on `0..k`.
pub fn build_g0(params: &FamilyParams, mode: G0Mode) -> Result<Graph, ConstructionError> {
    params.validate()?;
    let k = params.k() as usize;
    let extra = params.s as usize - 2;
    let mut g = Graph::complete(k).union(&Graph::empty(extra));
    if mode == G0Mode::CliquePlusPath {
        let mut prev = 0;
        for x in k..k + extra {
            g = g.add_edge(prev, x).expect("in range");
            prev = x;
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub params: FamilyParams,
    pub mode: G0Mode,
    pub g0: Graph,
    pub g1: Graph,
    pub g2: Graph,
    pub g3: Graph,
    pub u: VertexId,
    pub v: VertexId,
    pub clique: Vec<VertexId>,
}

/// Builds `G₀..G₃`. `u = n - 2` is joined to clique vertices `0..i+t`,
/// `v = n - 1` to `i..k`, and `u ~ v`. `G₃` keeps `v`'s edge to its
/// lowest-labelled neighbour.
pub fn build_instance(params: &FamilyParams, mode: G0Mode) -> Result<FamilyInstance, ConstructionError> {
    let g0 = build_g0(params, mode)?;
    let (i, j, t, k) = (
        params.i as usize,
        params.j as usize,
        params.t as usize,
        params.k() as usize,
    );
    let u = g0.n();
    let v = u + 1;
    let mut g1 = g0.add_isolated().add_isolated();
    let link = |g: Graph, a, b| g.add_edge(a, b).expect("in range");
    for x in 0..i + t {
        g1 = link(g1, u, x);
    }
    for x in i..i + j {
        g1 = link(g1, v, x);
    }
    g1 = link(g1, u, v);

    let g2 = g1.delete_vertex(v).expect("v in range").add_isolated();
    let keep = g1.adj(v).iter().next().expect("v has neighbours");
    let g3 = g1
        .adj(v)
        .iter()
        .filter(|&w| w != keep)
        .fold(g1.clone(), |g, w| g.delete_edge(v, w).expect("edge exists"));

    let inst = FamilyInstance {
        params: *params,
        mode,
        g0,
        g1,
        g2,
        g3,
        u,
        v,
        clique: (0..k).collect(),
    };
    inst.check_invariants()?;
    Ok(inst)
}

impl FamilyInstance {
    pub fn n(&self) -> usize {
        self.g1.n()
    }

    /// `G₁ - uv`.
    pub fn g1_minus_uv(&self) -> Graph {
        self.g1.delete_edge(self.u, self.v).expect("uv is an edge")
    }

    pub fn check_invariants(&self) -> Result<(), ConstructionError> {
        let p = &self.params;
        let fail = |m: String| Err(ConstructionError::Invariant(m));
        let k = p.k() as usize;
        if self.g0.n() != k + p.s as usize - 2 {
            return fail(format!("|V(G0)| = {} != k + s - 2", self.g0.n()));
        }
        for (a, &x) in self.clique.iter().enumerate() {
            for &y in &self.clique[a + 1..] {
                if !self.g0.has_edge(x, y) {
                    return fail(format!("clique edge {x}-{y} missing from G0"));
                }
            }
        }
        let g1 = &self.g1;
        if g1.n() != self.g0.n() + 2 || !g1.has_edge(self.u, self.v) {
            return fail("G1 must add adjacent u and v to G0".into());
        }
        if g1.degree(self.u).unwrap() != (p.i + p.t + 1) as usize {
            return fail(format!("deg(u) = {} != i + t + 1", g1.degree(self.u).unwrap()));
        }
        if g1.degree(self.v).unwrap() != (p.j + 1) as usize {
            return fail(format!("deg(v) = {} != j + 1", g1.degree(self.v).unwrap()));
        }
        let (nu, nv) = (g1.adj(self.u), g1.adj(self.v));
        let inter = nu.intersection_len(nv);
        let union = nu.len() + nv.len() - inter;
        if union != k + 2 {
            return fail(format!("|N(u) ∪ N(v)| = {union} != k + 2"));
        }
        if inter != p.t as usize {
            return fail(format!("|N(u) ∩ N(v)| = {inter} != t"));
        }
        let expected_g2 = g1.delete_vertex(self.v).unwrap().add_isolated();
        if self.g2 != expected_g2 {
            return fail("G2 != (G1 - v) ∪ K1".into());
        }
        let g3 = &self.g3;
        if g3.n() != g1.n() || g3.degree(self.v).unwrap() != 1 {
            return fail("G3 must keep exactly one edge at v".into());
        }
        let g3_rest = g3.delete_vertex(self.v).unwrap();
        if g3_rest != g1.delete_vertex(self.v).unwrap() || !g3.adj(self.v).is_subset(g1.adj(self.v)) {
            return fail("G3 must differ from G1 only at v".into());
        }
        Ok(())
    }
}

/// P(G₁, λ) = P(G₀, λ)·[(λ - i - t)(λ - j) - (λ - k)].
pub fn closed_form_p_g1(params: &FamilyParams, p_g0: &IntPolynomial) -> IntPolynomial {
    let (i, j, t, k) = (params.i as i64, params.j as i64, params.t as i64, params.k() as i64);
    let bracket = &IntPolynomial::linear(i + t) * &IntPolynomial::linear(j) - IntPolynomial::linear(k);
    p_g0 * &bracket
}

/// P(G₂, λ) = P(G₀, λ)·λ·(λ - i - t).
pub fn closed_form_p_g2(params: &FamilyParams, p_g0: &IntPolynomial) -> IntPolynomial {
    let (i, t) = (params.i as i64, params.t as i64);
    p_g0.mul_linear(0).mul_linear(i + t)
}

/// The integer factor of τ(G₁, G₂, n) once P(G₀, n)P(G₀, n-1) is divided out.
pub fn theorem5_bracket(params: &FamilyParams) -> BigInt {
    let [i, j, s, t] = [params.i, params.j, params.s, params.t].map(BigInt::from);
    let two = BigInt::from(2);
    let one = BigInt::from(1);
    &j * &j * &j
        + &two * (&s - &t - &one) * &j * &j
        + (&t * &t + &two * &t - &two * &t * &s + &s * &s - &s) * &j
        + &s * &s
        - &s
        + (&t - &j) * &i
}

/// The value `i` has to exceed for the bracket to turn negative:
/// `(j³ + 2(s-t-1)j² + (t² + 2t - 2ts + s² - s)j + s² - s) / (j - t)`.
pub fn theorem5_threshold(j: u64, s: u64, t: u64) -> Result<ExactRational, ConstructionError> {
    if t >= j {
        return Err(ConstructionError::ThresholdPrecondition { t, j });
    }
    // bracket is affine in i: bracket(i) = c + (t - j)i, so c = bracket(0)
    let c = theorem5_bracket(&FamilyParams { i: 0, j, s, t });
    Ok(ExactRational::new(c, BigInt::from(j - t)).expect("j > t"))
}

/// i(t - j) + s(s - 1), the factor of τ(G₁, G₁ - uv, n).
pub fn remark_bracket(params: &FamilyParams) -> BigInt {
    let [i, j, s, t] = [params.i, params.j, params.s, params.t].map(BigInt::from);
    &i * (&t - &j) + &s * (&s - BigInt::from(1))
}

/// τ(G₀ + w, H, n) where `H` joins `w` to vertex `attach` of `G₀` and
/// `n = |V(G₀)| + 1`. Checks the engine's value against the closed form
/// `-P(G₀, n)P(G₀, n-1)` and returns it.
pub fn lemma7_tau_at(g0: &Graph, attach: VertexId, config: &EngineConfig) -> BigInt {
    assert!(attach < g0.n(), "attachment vertex must lie in G0");
    let n = g0.n() as i64 + 1;
    let mut engine = ChromaticEngine::new(config.clone());
    let p0 = engine.polynomial(g0);
    let closed = -(p0.eval_i64(n) * p0.eval_i64(n - 1));
    let g = g0.add_isolated();
    let h = g.add_edge(g0.n(), attach).expect("in range");
    let pg = engine.polynomial(&g);
    let ph = engine.polynomial(&h);
    let engine_tau = tau_from_polynomials(&pg, &ph, n).value;
    assert_eq!(engine_tau, closed, "pendant-vertex τ disagrees with its closed form");
    closed
}

/// [`lemma7_tau_at`] with `w` joined to vertex 0.
pub fn lemma7_tau(g0: &Graph) -> BigInt {
    lemma7_tau_at(g0, 0, &EngineConfig::default())
}
