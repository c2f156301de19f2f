//! Mean colour numbers and the τ comparator.
//!
//! For an `n`-vertex graph, μ(G) = n(1 - P(G, n-1)/P(G, n)). Two graphs of
//! the same order compare by the sign of
//! τ(G₁, G₂, λ) = P(G₁,λ)P(G₂,λ-1) - P(G₁,λ-1)P(G₂,λ) at λ = n.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chromatic::{alpha_bruteforce, ChromaticEngine, ChromaticError, EngineConfig};
use crate::graph::Graph;
use crate::poly::{falling_factorial, FallingFactorialForm, IntPolynomial};
use crate::rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MeanError {
    #[error("mean colour number is undefined for the graph with no vertices")]
    UndefinedMu,
    #[error("cannot compare mean colour numbers of graphs with {0} and {1} vertices")]
    IncomparableOrders(usize, usize),
    #[error(transparent)]
    Chromatic(#[from] ChromaticError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuValue {
    pub value: ExactRational,
    pub n: usize,
    #[serde(with = "crate::decimal")]
    pub p_n: BigInt,
    #[serde(with = "crate::decimal")]
    pub p_n_minus_1: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauValue {
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
    pub lambda: i64,
}

impl TauValue {
    pub fn sign(&self) -> Ordering {
        self.value.cmp(&BigInt::zero())
    }
}

/// μ from a chromatic polynomial of an `n`-vertex graph.
pub fn mu_from_polynomial(n: usize, p: &IntPolynomial) -> Result<MuValue, MeanError> {
    if n == 0 {
        return Err(MeanError::UndefinedMu);
    }
    let p_n = p.eval_i64(n as i64);
    let p_n_minus_1 = p.eval_i64(n as i64 - 1);
    assert!(p_n.is_positive(), "an {n}-vertex graph always has {n}-colourings");
    let value = ExactRational::new(BigInt::from(n) * (&p_n - &p_n_minus_1), p_n.clone()).expect("nonzero denominator");
    Ok(MuValue {
        value,
        n,
        p_n,
        p_n_minus_1,
    })
}

pub fn mu_with(engine: &mut ChromaticEngine, g: &Graph) -> Result<MuValue, MeanError> {
    if g.n() == 0 {
        return Err(MeanError::UndefinedMu);
    }
    mu_from_polynomial(g.n(), &engine.polynomial(g))
}

pub fn mu(g: &Graph) -> Result<MuValue, MeanError> {
    mu_with(&mut ChromaticEngine::new(EngineConfig::default()), g)
}

/// μ as the average number of colours used over all proper `n`-colourings:
/// Σ k·α(G,k)(n)_k / Σ α(G,k)(n)_k.
pub fn mu_from_alpha(alpha: &FallingFactorialForm) -> Result<MuValue, MeanError> {
    let n = alpha.n;
    if n == 0 {
        return Err(MeanError::UndefinedMu);
    }
    let weighted = |x: i64| -> (BigInt, BigInt) {
        (1..=n).fold((BigInt::zero(), BigInt::zero()), |(num, den), k| {
            let colourings = alpha.get(k) * falling_factorial(x, k);
            (num + &colourings * BigInt::from(k), den + colourings)
        })
    };
    let (num, p_n) = weighted(n as i64);
    let (_, p_n_minus_1) = weighted(n as i64 - 1);
    let value = ExactRational::new(num, p_n.clone()).ok_or(MeanError::UndefinedMu)?;
    Ok(MuValue {
        value,
        n,
        p_n,
        p_n_minus_1,
    })
}

/// μ straight from its definition, with α taken from partition enumeration
/// rather than from the deletion–contraction engine.
pub fn mu_via_definition(g: &Graph) -> Result<MuValue, MeanError> {
    if g.n() == 0 {
        return Err(MeanError::UndefinedMu);
    }
    mu_from_alpha(&alpha_bruteforce(g)?)
}

pub fn tau_from_polynomials(p1: &IntPolynomial, p2: &IntPolynomial, lambda: i64) -> TauValue {
    let value = p1.eval_i64(lambda) * p2.eval_i64(lambda - 1) - p1.eval_i64(lambda - 1) * p2.eval_i64(lambda);
    TauValue { value, lambda }
}

pub fn tau_with(engine: &mut ChromaticEngine, g1: &Graph, g2: &Graph, lambda: i64) -> TauValue {
    let p1 = engine.polynomial(g1);
    let p2 = engine.polynomial(g2);
    tau_from_polynomials(&p1, &p2, lambda)
}

pub fn tau(g1: &Graph, g2: &Graph, lambda: i64) -> TauValue {
    tau_with(&mut ChromaticEngine::new(EngineConfig::default()), g1, g2, lambda)
}

/// Orders μ(G₁) against μ(G₂) by the sign of τ(G₁, G₂, n). Debug builds
/// also compare the exact rationals and insist the two agree.
pub fn compare_mu_with(engine: &mut ChromaticEngine, g1: &Graph, g2: &Graph) -> Result<Ordering, MeanError> {
    let n = g1.n();
    if n != g2.n() {
        return Err(MeanError::IncomparableOrders(n, g2.n()));
    }
    if n == 0 {
        return Err(MeanError::UndefinedMu);
    }
    let p1 = engine.polynomial(g1);
    let p2 = engine.polynomial(g2);
    let ord = tau_from_polynomials(&p1, &p2, n as i64).sign();
    if cfg!(debug_assertions) {
        let direct = mu_from_polynomial(n, &p1)?
            .value
            .cmp(&mu_from_polynomial(n, &p2)?.value);
        assert_eq!(ord, direct, "τ sign disagrees with the rational μ comparison");
    }
    Ok(ord)
}

pub fn compare_mu(g1: &Graph, g2: &Graph) -> Result<Ordering, MeanError> {
    compare_mu_with(&mut ChromaticEngine::new(EngineConfig::default()), g1, g2)
}
