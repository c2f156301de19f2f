use std::fs;
use std::path::Path;

use chromex::chromatic::{ChromaticEngine, EngineConfig};
use chromex::construct::{build_instance, theorem5_threshold, FamilyParams, G0Mode};
use chromex::format::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6_document};
use chromex::mean::{mu_with, tau_from_polynomials, MeanError};
use chromex::verify::{
    hunt_conjectures, scan_thresholds, verify_remark, verify_theorem5, verify_theorem8, Conjecture, ThresholdRow,
    VerifyError,
};
use chromex::Graph;
use serde::Serialize;

use crate::{Command, ConjectureArg, FamilyArgs, FormatArg, G0ModeArg, TheoremArg, WhichGraph};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("resource guard: {0}")]
    Guard(String),
    /// Carries the report that contradicts the claim so it still gets printed.
    #[error("claim refuted")]
    Refuted(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Refuted(_) | CliError::Inconsistent(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::HuntTooLarge { .. } => CliError::Guard(e.to_string()),
            VerifyError::Inconsistent(m) => CliError::Inconsistent(m),
            VerifyError::Mean(m) => m.into(),
            VerifyError::Io(_) | VerifyError::Checkpoint(_) => CliError::Io(e.to_string()),
            VerifyError::Construction(_) | VerifyError::NotACounterexample(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<MeanError> for CliError {
    fn from(e: MeanError) -> Self {
        match e {
            MeanError::Chromatic(chromex::chromatic::ChromaticError::OracleTooLarge(m)) => CliError::Guard(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn read_graphs(path: &Path, format: FormatArg) -> Result<Vec<Graph>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let parsed = match format {
        FormatArg::Edgelist => parse_edgelist(&text).map(|g| vec![g]),
        FormatArg::Graph6 => parse_graph6_document(&text),
    };
    let graphs = parsed.map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    if graphs.is_empty() {
        return Err(CliError::Parse(format!("{}: no graphs in file", path.display())));
    }
    Ok(graphs)
}

fn read_single(path: &Path, format: FormatArg) -> Result<Graph, CliError> {
    let mut graphs = read_graphs(path, format)?;
    if graphs.len() != 1 {
        return Err(CliError::Usage(format!(
            "{}: expected exactly one graph",
            path.display()
        )));
    }
    Ok(graphs.remove(0))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

/// A single document prints pretty; several print one compact line each.
fn render_all<T: Serialize>(items: &[T]) -> String {
    if let [one] = items {
        return to_json(one);
    }
    items
        .iter()
        .map(|x| serde_json::to_string(x).expect("serializable") + "\n")
        .collect()
}

fn family(args: &FamilyArgs) -> Result<(FamilyParams, G0Mode), CliError> {
    let params = FamilyParams::new(args.i, args.j, args.s, args.t).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((params, g0_mode(args.g0_mode)))
}

fn g0_mode(arg: G0ModeArg) -> G0Mode {
    match arg {
        G0ModeArg::CliquePlusIsolated => G0Mode::CliquePlusIsolated,
        G0ModeArg::CliquePlusPath => G0Mode::CliquePlusPath,
    }
}

#[derive(Serialize)]
struct Evaluation {
    x: String,
    value: String,
}

#[derive(Serialize)]
struct PolyOutput {
    n: usize,
    m: usize,
    coefficients: chromex::IntPolynomial,
    polynomial: String,
    evaluations: Vec<Evaluation>,
}

#[derive(Serialize)]
struct MuOutput {
    n: usize,
    mu: String,
    mu_decimal_display_only: String,
    p_n: String,
    p_n_minus_1: String,
}

#[derive(Serialize)]
struct ScanCsvRow {
    j: u64,
    s: u64,
    t: u64,
    threshold: String,
    minimal_i: u64,
    minimal_n: u64,
    bracket_at_minimal: String,
    bracket_below_minimal: String,
    verified: bool,
}

pub fn render_scan_csv(rows: &[ThresholdRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(ScanCsvRow {
            j: r.j,
            s: r.s,
            t: r.t,
            threshold: r.threshold.to_string(),
            minimal_i: r.minimal_i,
            minimal_n: r.minimal_n,
            bracket_at_minimal: r.bracket_at_minimal.to_string(),
            bracket_below_minimal: r.bracket_below_minimal.to_string(),
            verified: r.verified,
        })
        .expect("in-memory csv");
    }
    if rows.is_empty() {
        w.write_record([
            "j",
            "s",
            "t",
            "threshold",
            "minimal_i",
            "minimal_n",
            "bracket_at_minimal",
            "bracket_below_minimal",
            "verified",
        ])
        .expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn run(command: Command, config: &EngineConfig) -> Result<String, CliError> {
    match command {
        Command::Poly { input, format, eval } => {
            let mut engine = ChromaticEngine::new(config.clone());
            let outputs: Vec<PolyOutput> = read_graphs(&input, format)?
                .iter()
                .map(|g| {
                    let p = engine.polynomial(g);
                    PolyOutput {
                        n: g.n(),
                        m: g.edge_count(),
                        polynomial: p.to_string(),
                        evaluations: eval
                            .iter()
                            .map(|&x| Evaluation {
                                x: x.to_string(),
                                value: p.eval_i64(x).to_string(),
                            })
                            .collect(),
                        coefficients: p,
                    }
                })
                .collect();
            Ok(render_all(&outputs))
        }
        Command::Mu { input, format } => {
            let mut engine = ChromaticEngine::new(config.clone());
            let outputs = read_graphs(&input, format)?
                .iter()
                .map(|g| {
                    let m = mu_with(&mut engine, g)?;
                    Ok(MuOutput {
                        n: m.n,
                        mu: m.value.to_string(),
                        mu_decimal_display_only: m.value.to_decimal_string(12),
                        p_n: m.p_n.to_string(),
                        p_n_minus_1: m.p_n_minus_1.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(render_all(&outputs))
        }
        Command::Tau { g1, g2, lambda, format } => {
            let (g1, g2) = (read_single(&g1, format)?, read_single(&g2, format)?);
            let mut engine = ChromaticEngine::new(config.clone());
            let (p1, p2) = (engine.polynomial(&g1), engine.polynomial(&g2));
            Ok(format!("{}\n", tau_from_polynomials(&p1, &p2, lambda).value))
        }
        Command::Construct {
            family: args,
            emit,
            format,
            output,
        } => {
            let (params, mode) = family(&args)?;
            let inst = build_instance(&params, mode).map_err(|e| CliError::Usage(e.to_string()))?;
            let g = match emit {
                WhichGraph::G0 => &inst.g0,
                WhichGraph::G1 => &inst.g1,
                WhichGraph::G2 => &inst.g2,
                WhichGraph::G3 => &inst.g3,
            };
            let text = match format {
                FormatArg::Edgelist => emit_edgelist(g),
                FormatArg::Graph6 => emit_graph6(g) + "\n",
            };
            match output {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Verify { family: args, theorem } => {
            let (params, mode) = family(&args)?;
            let result = match theorem {
                TheoremArg::Five => verify_theorem5(&params, mode, config),
                TheoremArg::Eight => verify_theorem8(&params, mode, config),
                TheoremArg::Remark => verify_remark(&params, mode, config),
            };
            let report = match result {
                Err(VerifyError::NotACounterexample(p)) => {
                    let predicted = theorem5_threshold(p.j, p.s, p.t)
                        .map(|th| th.cmp_integer(&p.i.into()).is_lt())
                        .unwrap_or(false);
                    let msg = format!("instance {p} is not a counterexample, which the vertex-edge chain requires");
                    return Err(if predicted {
                        CliError::Inconsistent(msg)
                    } else {
                        CliError::Usage(msg)
                    });
                }
                other => other?,
            };
            let text = to_json(&report);
            if report.refutes_claim() {
                Err(CliError::Refuted(text))
            } else {
                Ok(text)
            }
        }
        Command::Scan {
            j_max,
            s_max,
            t_max,
            g0_mode: mode,
            csv,
        } => {
            if j_max < 1 || s_max < 2 {
                return Err(CliError::Usage("scan needs --j-max >= 1 and --s-max >= 2".into()));
            }
            let rows = scan_thresholds(j_max, s_max, t_max, g0_mode(mode), config)?;
            let text = if csv { render_scan_csv(&rows) } else { to_json(&rows) };
            if rows.iter().all(|r| r.verified) {
                Ok(text)
            } else {
                Err(CliError::Refuted(text))
            }
        }
        Command::Hunt {
            n,
            conjecture,
            checkpoint,
        } => {
            let tag = match conjecture {
                ConjectureArg::C2 => Conjecture::C2,
                ConjectureArg::C3 => Conjecture::C3,
                ConjectureArg::Spanning => Conjecture::Spanning,
            };
            Ok(to_json(&hunt_conjectures(n, tag, checkpoint.as_deref())?))
        }
    }
}
