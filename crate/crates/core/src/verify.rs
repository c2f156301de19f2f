//! End-to-end checks of the attachment family, threshold scans and
//! exhaustive small-graph hunts.
//!
//! Every report is computed twice where a closed form exists: once from
//! engine polynomials, once from the factored formulas in [`crate::construct`].
//! Disagreement between the two is an [`VerifyError::Inconsistent`] error,
//! never a silently wrong report.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonicalKey};
use crate::chromatic::{chromatic_number, ChromaticEngine, EngineConfig};
use crate::construct::{
    build_instance, closed_form_p_g1, closed_form_p_g2, remark_bracket, theorem5_bracket, theorem5_threshold,
    ConstructionError, FamilyInstance, FamilyParams, G0Mode,
};
use crate::format::emit_graph6;
use crate::graph::Graph;
use crate::mean::{mu_from_polynomial, mu_with, tau_from_polynomials, MeanError};
use crate::poly::IntPolynomial;
use crate::rational::ExactRational;

/// Largest order accepted by [`hunt_conjectures`].
pub const HUNT_MAX_N: usize = 7;
/// Labelled graphs per checkpoint record.
pub const CHECKPOINT_INTERVAL: u64 = 100_000;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Mean(#[from] MeanError),
    #[error("instance {0} is not a counterexample; the vertex-edge chain needs one")]
    NotACounterexample(FamilyParams),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("hunt on {n} vertices exceeds the exhaustive limit of {HUNT_MAX_N}")]
    HuntTooLarge { n: usize },
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    CounterexampleConfirmed,
    BoundaryEqual,
    NotACounterexample,
}

impl Verdict {
    /// From the sign of a τ value: negative means μ(G₁) is strictly smaller.
    pub fn from_tau(tau: &BigInt) -> Self {
        match tau.sign() {
            num_bigint::Sign::Minus => Verdict::CounterexampleConfirmed,
            num_bigint::Sign::NoSign => Verdict::BoundaryEqual,
            num_bigint::Sign::Plus => Verdict::NotACounterexample,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Claim {
    #[serde(rename = "5")]
    Theorem5,
    #[serde(rename = "8")]
    Theorem8,
    #[serde(rename = "remark")]
    Remark,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceInfo {
    pub i: u64,
    pub j: u64,
    pub s: u64,
    pub t: u64,
    pub k: u64,
    pub g0_mode: G0Mode,
}

impl InstanceInfo {
    fn new(p: &FamilyParams, mode: G0Mode) -> Self {
        InstanceInfo {
            i: p.i,
            j: p.j,
            s: p.s,
            t: p.t,
            k: p.k(),
            g0_mode: mode,
        }
    }
}

/// All exact quantities of one verified instance. Integers are decimal
/// strings in JSON, rationals are `"num/den"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Claim,
    pub instance: InstanceInfo,
    pub n: usize,
    /// The factor that decides this report's verdict: the G₁/G₂ bracket for
    /// theorems 5 and 8, `i(t-j) + s(s-1)` for the remark.
    #[serde(with = "crate::decimal")]
    pub bracket: BigInt,
    /// Strict threshold on `i` when `t < j`.
    pub threshold: Option<ExactRational>,
    #[serde(with = "crate::decimal")]
    pub p_g0_n: BigInt,
    #[serde(with = "crate::decimal")]
    pub p_g0_n_minus_1: BigInt,
    #[serde(with = "crate::decimal::option")]
    pub tau_g1_g2: Option<BigInt>,
    #[serde(with = "crate::decimal::option")]
    pub tau_g2_g3: Option<BigInt>,
    #[serde(with = "crate::decimal::option")]
    pub tau_g1_g3: Option<BigInt>,
    #[serde(with = "crate::decimal::option")]
    pub tau_g1_g1_minus_uv: Option<BigInt>,
    pub mu_g1: ExactRational,
    pub mu_g2: Option<ExactRational>,
    pub mu_g3: Option<ExactRational>,
    pub mu_g1_minus_uv: Option<ExactRational>,
    /// `-P(G₁-v, n)P(G₁-v, n-1)`, the pendant-vertex closed form for τ(G₂, G₃, n).
    #[serde(with = "crate::decimal::option")]
    pub lemma7_closed_form: Option<BigInt>,
    pub closed_form_match: bool,
    pub chromatic_number_g1: usize,
    /// Whether the threshold condition predicts a strict counterexample.
    pub predicted_counterexample: bool,
    pub verdict: Verdict,
}

impl VerificationReport {
    /// True when the report contradicts something the closed forms or the
    /// threshold theorem assert.
    pub fn refutes_claim(&self) -> bool {
        !self.closed_form_match || (self.predicted_counterexample && self.verdict != Verdict::CounterexampleConfirmed)
    }
}

fn inconsistent(msg: impl Into<String>) -> VerifyError {
    VerifyError::Inconsistent(msg.into())
}

struct Evaluated {
    inst: FamilyInstance,
    engine: ChromaticEngine,
    p0: IntPolynomial,
    p1: IntPolynomial,
    p2: IntPolynomial,
    scale: BigInt,
    p_g0_n: BigInt,
    p_g0_n_minus_1: BigInt,
}

fn evaluate(params: &FamilyParams, mode: G0Mode, config: &EngineConfig) -> Result<Evaluated, VerifyError> {
    let inst = build_instance(params, mode)?;
    let mut engine = ChromaticEngine::new(config.clone());
    let n = inst.n() as i64;
    let p0 = engine.polynomial(&inst.g0);
    let p1 = engine.polynomial(&inst.g1);
    let p2 = engine.polynomial(&inst.g2);
    let p_g0_n = p0.eval_i64(n);
    let p_g0_n_minus_1 = p0.eval_i64(n - 1);
    if !p_g0_n.is_positive() || !p_g0_n_minus_1.is_positive() {
        return Err(inconsistent("P(G0, n) and P(G0, n-1) must be positive"));
    }
    Ok(Evaluated {
        scale: &p_g0_n * &p_g0_n_minus_1,
        inst,
        engine,
        p0,
        p1,
        p2,
        p_g0_n,
        p_g0_n_minus_1,
    })
}

fn threshold_prediction(params: &FamilyParams) -> (Option<ExactRational>, bool) {
    match theorem5_threshold(params.j, params.s, params.t) {
        Ok(th) => {
            let above = th.cmp_integer(&BigInt::from(params.i)) == Ordering::Less;
            (Some(th), above)
        }
        Err(_) => (None, false),
    }
}

/// Builds the instance and compares μ(G₁) with μ(G₂ = (G₁ - v) ∪ K₁).
pub fn verify_theorem5(
    params: &FamilyParams,
    mode: G0Mode,
    config: &EngineConfig,
) -> Result<VerificationReport, VerifyError> {
    let ev = evaluate(params, mode, config)?;
    let n = ev.inst.n();

    let closed_form_match = closed_form_p_g1(params, &ev.p0) == ev.p1 && closed_form_p_g2(params, &ev.p0) == ev.p2;

    let tau = tau_from_polynomials(&ev.p1, &ev.p2, n as i64).value;
    let bracket = theorem5_bracket(params);
    if tau != &ev.scale * &bracket {
        return Err(inconsistent(format!(
            "τ(G1,G2,{n}) = {tau} but P(G0,n)P(G0,n-1)·bracket = {}",
            &ev.scale * &bracket
        )));
    }
    let mu1 = mu_from_polynomial(n, &ev.p1)?;
    let mu2 = mu_from_polynomial(n, &ev.p2)?;
    if tau.sign() != sign_of(mu1.value.cmp(&mu2.value)) {
        return Err(inconsistent("sign of τ(G1,G2,n) disagrees with μ(G1) vs μ(G2)"));
    }
    let (threshold, predicted) = threshold_prediction(params);

    Ok(VerificationReport {
        theorem: Claim::Theorem5,
        instance: InstanceInfo::new(params, mode),
        n,
        bracket,
        threshold,
        p_g0_n: ev.p_g0_n,
        p_g0_n_minus_1: ev.p_g0_n_minus_1,
        verdict: Verdict::from_tau(&tau),
        tau_g1_g2: Some(tau),
        tau_g2_g3: None,
        tau_g1_g3: None,
        tau_g1_g1_minus_uv: None,
        mu_g1: mu1.value,
        mu_g2: Some(mu2.value),
        mu_g3: None,
        mu_g1_minus_uv: None,
        lemma7_closed_form: None,
        closed_form_match,
        chromatic_number_g1: chromatic_number(&ev.p1),
        predicted_counterexample: predicted,
    })
}

fn sign_of(o: Ordering) -> num_bigint::Sign {
    match o {
        Ordering::Less => num_bigint::Sign::Minus,
        Ordering::Equal => num_bigint::Sign::NoSign,
        Ordering::Greater => num_bigint::Sign::Plus,
    }
}

/// Extends a confirmed G₁/G₂ counterexample to G₃, the graph keeping one
/// edge at `v`: τ(G₂, G₃, n) must match the pendant-vertex closed form and
/// both τ(G₂, G₃, n) and τ(G₁, G₃, n) must be negative.
pub fn verify_theorem8(
    params: &FamilyParams,
    mode: G0Mode,
    config: &EngineConfig,
) -> Result<VerificationReport, VerifyError> {
    let mut report = verify_theorem5(params, mode, config)?;
    if report.verdict != Verdict::CounterexampleConfirmed {
        return Err(VerifyError::NotACounterexample(*params));
    }
    let mut ev = evaluate(params, mode, config)?;
    let n = ev.inst.n();
    let p3 = ev.engine.polynomial(&ev.inst.g3);

    let g1_minus_v = ev.inst.g1.delete_vertex(ev.inst.v).expect("v in range");
    let p_rest = ev.engine.polynomial(&g1_minus_v);
    let closed = -(p_rest.eval_i64(n as i64) * p_rest.eval_i64(n as i64 - 1));

    let tau23 = tau_from_polynomials(&ev.p2, &p3, n as i64).value;
    if tau23 != closed {
        return Err(inconsistent(format!(
            "τ(G2,G3,{n}) = {tau23} but the pendant closed form gives {closed}"
        )));
    }
    let tau13 = tau_from_polynomials(&ev.p1, &p3, n as i64).value;
    let mu3 = mu_from_polynomial(n, &p3)?;
    if tau13.sign() != sign_of(report.mu_g1.cmp(&mu3.value)) {
        return Err(inconsistent("sign of τ(G1,G3,n) disagrees with μ(G1) vs μ(G3)"));
    }
    report.theorem = Claim::Theorem8;
    if !(tau23.is_negative() && tau13.is_negative()) {
        report.verdict = Verdict::NotACounterexample;
    }
    report.tau_g2_g3 = Some(tau23);
    report.tau_g1_g3 = Some(tau13);
    report.mu_g3 = Some(mu3.value);
    report.lemma7_closed_form = Some(closed);
    Ok(report)
}

/// Compares μ(G₁) with its spanning subgraph μ(G₁ - uv).
pub fn verify_remark(
    params: &FamilyParams,
    mode: G0Mode,
    config: &EngineConfig,
) -> Result<VerificationReport, VerifyError> {
    if params.t >= params.j {
        return Err(ConstructionError::ThresholdPrecondition {
            t: params.t,
            j: params.j,
        }
        .into());
    }
    let mut ev = evaluate(params, mode, config)?;
    let n = ev.inst.n();
    let h = ev.inst.g1_minus_uv();
    let ph = ev.engine.polynomial(&h);
    let closed_form_match = closed_form_p_g1(params, &ev.p0) == ev.p1 && closed_form_p_g2(params, &ev.p0) == ev.p2;

    let tau = tau_from_polynomials(&ev.p1, &ph, n as i64).value;
    let bracket = remark_bracket(params);
    if tau != &ev.scale * &bracket {
        return Err(inconsistent(format!(
            "τ(G1,G1-uv,{n}) = {tau} but P(G0,n)P(G0,n-1)·bracket = {}",
            &ev.scale * &bracket
        )));
    }
    let mu1 = mu_from_polynomial(n, &ev.p1)?;
    let muh = mu_from_polynomial(n, &ph)?;
    if tau.sign() != sign_of(mu1.value.cmp(&muh.value)) {
        return Err(inconsistent("sign of τ(G1,G1-uv,n) disagrees with the μ comparison"));
    }
    // i(t-j) + s(s-1) < 0 exactly when i > s(s-1)/(j-t)
    let s = params.s;
    let threshold = ExactRational::new(s * (s - 1), params.j - params.t).expect("j > t");
    let predicted = threshold.cmp_integer(&BigInt::from(params.i)) == Ordering::Less;

    Ok(VerificationReport {
        theorem: Claim::Remark,
        instance: InstanceInfo::new(params, mode),
        n,
        bracket,
        threshold: Some(threshold),
        p_g0_n: ev.p_g0_n,
        p_g0_n_minus_1: ev.p_g0_n_minus_1,
        tau_g1_g2: None,
        tau_g2_g3: None,
        tau_g1_g3: None,
        verdict: Verdict::from_tau(&tau),
        tau_g1_g1_minus_uv: Some(tau),
        mu_g1: mu1.value,
        mu_g2: None,
        mu_g3: None,
        mu_g1_minus_uv: Some(muh.value),
        lemma7_closed_form: None,
        closed_form_match,
        chromatic_number_g1: chromatic_number(&ev.p1),
        predicted_counterexample: predicted,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub j: u64,
    pub s: u64,
    pub t: u64,
    pub threshold: ExactRational,
    pub minimal_i: u64,
    pub minimal_n: u64,
    #[serde(with = "crate::decimal")]
    pub bracket_at_minimal: BigInt,
    #[serde(with = "crate::decimal")]
    pub bracket_below_minimal: BigInt,
    pub verified: bool,
}

/// One row per admissible `(j, s, t)` with `1 ≤ j ≤ j_max`, `2 ≤ s ≤ s_max`,
/// `0 ≤ t ≤ min(t_max, j - 1)`. Each row's minimal instance is re-run
/// through [`verify_theorem5`].
pub fn scan_thresholds(
    j_max: u64,
    s_max: u64,
    t_max: u64,
    mode: G0Mode,
    config: &EngineConfig,
) -> Result<Vec<ThresholdRow>, VerifyError> {
    let mut triples = Vec::new();
    for j in 1..=j_max {
        for s in 2..=s_max {
            for t in 0..=t_max.min(j - 1) {
                triples.push((j, s, t));
            }
        }
    }
    triples
        .into_par_iter()
        .map(|(j, s, t)| {
            let threshold = theorem5_threshold(j, s, t)?;
            let above = threshold.next_integer_above();
            let minimal_i =
                u64::try_from(above.max(BigInt::from(1))).map_err(|_| inconsistent("threshold does not fit in u64"))?;
            let params = FamilyParams::new(minimal_i, j, s, t)?;
            let below = FamilyParams {
                i: minimal_i - 1,
                ..params
            };
            let report = verify_theorem5(&params, mode, config)?;
            Ok(ThresholdRow {
                j,
                s,
                t,
                threshold,
                minimal_i,
                minimal_n: params.n(),
                bracket_at_minimal: report.bracket.clone(),
                bracket_below_minimal: theorem5_bracket(&below),
                verified: report.verdict == Verdict::CounterexampleConfirmed && !report.refutes_claim(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conjecture {
    /// μ(G) ≥ μ((G - w) ∪ K₁) for every vertex `w` with `d(w) ≥ 1`.
    C2,
    /// μ(G) ≥ μ(H) where `H` keeps one of the `d(w) ≥ 2` edges at `w`.
    C3,
    /// μ(G) ≥ μ(G - e) for every edge `e`.
    #[serde(rename = "SPANNING")]
    Spanning,
}

impl std::str::FromStr for Conjecture {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "c2" => Ok(Conjecture::C2),
            "c3" => Ok(Conjecture::C3),
            "spanning" => Ok(Conjecture::Spanning),
            other => Err(format!("unknown conjecture {other:?}")),
        }
    }
}

/// Which vertex or edge a violation was found at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Choice {
    Vertex { w: usize },
    VertexKeep { w: usize, keep: usize },
    Edge { u: usize, v: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
struct RawViolation {
    mask: u64,
    choice: Choice,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub derived_graph6: String,
    pub choice: Choice,
    pub mu_g: ExactRational,
    pub mu_h: ExactRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntResult {
    pub n: usize,
    pub conjecture: Conjecture,
    pub graphs_scanned: u64,
    /// Violations before isomorphism de-duplication.
    pub labeled_violations: u64,
    /// One representative per isomorphism class of `(G, H)`, sorted by key.
    pub violations: Vec<Violation>,
}

/// Labelled graphs on `n` vertices indexed by edge bitmask. Pair `(a, b)`
/// with `a < b` is bit `b(b-1)/2 + a`, so graphs whose edges avoid the top
/// vertices occupy a prefix of the index space.
struct LabeledTable {
    n: usize,
    /// `(P(G, n), P(G, n-1))` per mask.
    values: Vec<(i64, i64)>,
}

fn pair_index(a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    b * (b - 1) / 2 + a
}

fn pair_of(index: usize) -> (usize, usize) {
    let mut b = 1;
    while (b + 1) * b / 2 <= index {
        b += 1;
    }
    (index - b * (b - 1) / 2, b)
}

fn mask_to_graph(n: usize, mask: u64) -> Graph {
    let edges = (0..64).filter(|&bit| mask >> bit & 1 == 1).map(pair_of);
    Graph::from_edges(n, edges).expect("mask within range")
}

impl LabeledTable {
    /// Fills the table by deletion–contraction on the highest set bit. The
    /// contraction of that edge only involves vertices below its larger
    /// endpoint, so both subproblems have smaller masks.
    fn build(n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        let size = 1usize << pairs;
        let (l1, l2) = (n as i64, n as i64 - 1);
        let mut values = vec![(0i64, 0i64); size];
        values[0] = (l1.pow(n as u32), l2.pow(n as u32));
        for mask in 1..size as u64 {
            let top = 63 - mask.leading_zeros() as usize;
            let (a, b) = pair_of(top);
            let del = values[(mask & !(1 << top)) as usize];
            let con = values[contract_mask(mask, a, b) as usize];
            // the contraction has n-1 vertices; its n-vertex image carries one
            // extra isolated vertex, i.e. an extra factor λ
            debug_assert!(con.0 % l1 == 0 && (l2 == 0 || con.1 % l2 == 0));
            let con = (con.0 / l1, if l2 == 0 { 0 } else { con.1 / l2 });
            values[mask as usize] = (del.0 - con.0, del.1 - con.1);
        }
        LabeledTable { n, values }
    }

    fn get(&self, mask: u64) -> (i64, i64) {
        self.values[mask as usize]
    }

    fn mu(&self, mask: u64) -> ExactRational {
        let (pn, pn1) = self.get(mask);
        ExactRational::new(BigInt::from(self.n as i64) * BigInt::from(pn - pn1), pn).expect("P(G,n) > 0")
    }

    /// Sign of τ(G, H, n).
    fn tau_sign(&self, g: u64, h: u64) -> Ordering {
        let (gn, gn1) = self.get(g);
        let (hn, hn1) = self.get(h);
        (gn as i128 * hn1 as i128).cmp(&(gn1 as i128 * hn as i128))
    }
}

/// Identifies `b` into `a` (`a < b`), shifting labels above `b` down.
fn contract_mask(mask: u64, a: usize, b: usize) -> u64 {
    let relabel = |x: usize| {
        if x == b {
            a
        } else if x > b {
            x - 1
        } else {
            x
        }
    };
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (x, y) = pair_of(bit);
        let (x, y) = (relabel(x), relabel(y));
        if x != y {
            out |= 1 << pair_index(x, y);
        }
    }
    out
}

fn incident_bits(n: usize, w: usize) -> Vec<(usize, u64)> {
    (0..n)
        .filter(|&x| x != w)
        .map(|x| (x, 1u64 << pair_index(w, x)))
        .collect()
}

fn violations_at(table: &LabeledTable, conjecture: Conjecture, mask: u64) -> Vec<RawViolation> {
    let n = table.n;
    let mut found = Vec::new();
    match conjecture {
        Conjecture::C2 | Conjecture::C3 => {
            for w in 0..n {
                let incident: Vec<(usize, u64)> = incident_bits(n, w)
                    .into_iter()
                    .filter(|&(_, b)| mask & b != 0)
                    .collect();
                let all: u64 = incident.iter().map(|&(_, b)| b).fold(0, |a, b| a | b);
                let stripped = mask & !all;
                if conjecture == Conjecture::C2 {
                    // (G - w) ∪ K₁ has the same polynomial as G with w's edges removed
                    if !incident.is_empty() && table.tau_sign(mask, stripped) == Ordering::Less {
                        found.push(RawViolation {
                            mask,
                            choice: Choice::Vertex { w },
                        });
                    }
                } else if incident.len() >= 2 {
                    for &(keep, bit) in &incident {
                        if table.tau_sign(mask, stripped | bit) == Ordering::Less {
                            found.push(RawViolation {
                                mask,
                                choice: Choice::VertexKeep { w, keep },
                            });
                        }
                    }
                }
            }
        }
        Conjecture::Spanning => {
            let mut rest = mask;
            while rest != 0 {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if table.tau_sign(mask, mask & !(1 << bit)) == Ordering::Less {
                    let (u, v) = pair_of(bit);
                    found.push(RawViolation {
                        mask,
                        choice: Choice::Edge { u, v },
                    });
                }
            }
        }
    }
    found
}

/// The graph a violation compares against, in the original labelling
/// (`(G - w) ∪ K₁` keeps `w` as the isolated vertex).
fn derived_graph(g: &Graph, choice: Choice) -> Graph {
    match choice {
        Choice::Vertex { w } => {
            let nbrs: Vec<usize> = g.adj(w).iter().collect();
            nbrs.into_iter().fold(g.clone(), |h, x| h.delete_edge(w, x).unwrap())
        }
        Choice::VertexKeep { w, keep } => {
            let nbrs: Vec<usize> = g.adj(w).iter().filter(|&x| x != keep).collect();
            nbrs.into_iter().fold(g.clone(), |h, x| h.delete_edge(w, x).unwrap())
        }
        Choice::Edge { u, v } => g.delete_edge(u, v).unwrap(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CheckpointRecord {
    n: usize,
    conjecture: Conjecture,
    next_mask: u64,
    graphs_scanned: u64,
    violations: Vec<RawViolation>,
}

/// Reads the last consistent state from a checkpoint file, if any.
fn resume(path: &Path, n: usize, conjecture: Conjecture) -> Result<(u64, Vec<RawViolation>), VerifyError> {
    if !path.exists() {
        return Ok((0, Vec::new()));
    }
    let mut next = 0;
    let mut raw = Vec::new();
    for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: CheckpointRecord =
            serde_json::from_str(&line).map_err(|e| VerifyError::Checkpoint(format!("line {}: {e}", i + 1)))?;
        if rec.n != n || rec.conjecture != conjecture {
            return Err(VerifyError::Checkpoint(format!(
                "line {} belongs to a different hunt (n = {}, {:?})",
                i + 1,
                rec.n,
                rec.conjecture
            )));
        }
        next = next.max(rec.next_mask);
        raw.extend(rec.violations);
    }
    Ok((next, raw))
}

/// Exhaustive scan of all `2^C(n,2)` labelled graphs on `n ≤ 7` vertices
/// for strict violations of `conjecture`. With a checkpoint path, progress
/// is appended every [`CHECKPOINT_INTERVAL`] graphs and a rerun resumes
/// from the last record.
pub fn hunt_conjectures(
    n: usize,
    conjecture: Conjecture,
    checkpoint: Option<&Path>,
) -> Result<HuntResult, VerifyError> {
    hunt_conjectures_with_interval(n, conjecture, checkpoint, CHECKPOINT_INTERVAL)
}

/// [`hunt_conjectures`] with a custom number of graphs per checkpoint record.
pub fn hunt_conjectures_with_interval(
    n: usize,
    conjecture: Conjecture,
    checkpoint: Option<&Path>,
    interval: u64,
) -> Result<HuntResult, VerifyError> {
    assert!(interval > 0, "checkpoint interval must be positive");
    if n > HUNT_MAX_N {
        return Err(VerifyError::HuntTooLarge { n });
    }
    let table = LabeledTable::build(n);
    let total = table.values.len() as u64;
    let (mut next, mut raw) = match checkpoint {
        Some(p) => resume(p, n, conjecture)?,
        None => (0, Vec::new()),
    };
    let mut writer = match checkpoint {
        Some(p) => Some(OpenOptions::new().create(true).append(true).open(p)?),
        None => None,
    };
    while next < total {
        let end = (next + interval).min(total);
        let chunk: Vec<RawViolation> = (next..end)
            .into_par_iter()
            .flat_map_iter(|mask| violations_at(&table, conjecture, mask))
            .collect();
        if let Some(w) = writer.as_mut() {
            let rec = CheckpointRecord {
                n,
                conjecture,
                next_mask: end,
                graphs_scanned: end,
                violations: chunk.clone(),
            };
            serde_json::to_writer(&mut *w, &rec).map_err(std::io::Error::from)?;
            w.write_all(b"\n")?;
            w.flush()?;
        }
        raw.extend(chunk);
        next = end;
    }

    let labeled_violations = raw.len() as u64;
    let mut classes: BTreeMap<(CanonicalKey, CanonicalKey), Violation> = BTreeMap::new();
    for rv in raw {
        let g = mask_to_graph(n, rv.mask);
        let h = derived_graph(&g, rv.choice);
        let key = (canonical_key(&g), canonical_key(&h));
        if classes.contains_key(&key) {
            continue;
        }
        let mask_h = graph_mask(&h);
        classes.insert(
            key,
            Violation {
                graph6: emit_graph6(&g),
                derived_graph6: emit_graph6(&h),
                choice: rv.choice,
                mu_g: table.mu(rv.mask),
                mu_h: table.mu(mask_h),
            },
        );
    }
    let violations: Vec<Violation> = classes.into_values().collect();
    violations.par_iter().try_for_each(reverify)?;
    Ok(HuntResult {
        n,
        conjecture,
        graphs_scanned: total,
        labeled_violations,
        violations,
    })
}

fn graph_mask(g: &Graph) -> u64 {
    g.edges().fold(0, |m, (a, b)| m | 1 << pair_index(a, b))
}

/// Recomputes both μ values from scratch with memoization off.
pub fn reverify(v: &Violation) -> Result<(), VerifyError> {
    let parse = |s: &str| crate::format::parse_graph6(s).map_err(|e| inconsistent(e.to_string()));
    let (g, h) = (parse(&v.graph6)?, parse(&v.derived_graph6)?);
    let mut engine = ChromaticEngine::new(EngineConfig::without_memo());
    let mu_g = mu_with(&mut engine, &g)?.value;
    let mu_h = mu_with(&mut engine, &h)?.value;
    if mu_g != v.mu_g || mu_h != v.mu_h || mu_g >= mu_h {
        return Err(inconsistent(format!(
            "violation {} -> {} does not re-verify ({mu_g} vs {mu_h})",
            v.graph6, v.derived_graph6
        )));
    }
    Ok(())
}
