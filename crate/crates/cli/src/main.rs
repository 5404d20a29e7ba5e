//! Batch command-line front end: diagram parsing, state enumeration, circle
//! ring dumps, Rasmussen-invariant evaluation, chirality certificates, state
//! transport, and the verification suites. All structured output is JSON
//! (TSV for histogram tables); output is deterministic for identical inputs.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse/usage error. Errors are
//! reported as a JSON object on stdout.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use moystates::circlering::CircleRing;
use moystates::diagrams::{ColoredBraid, KnottedMoyGraph, PdDocument};
use moystates::invariants::{chirality_certificate, s_invariant, ChiralityVerdict};
use moystates::statecalc::{self, transport, GradedStateSet};
use moystates::symkit::RootSet;
use moystates::verify;
use moystates::Rational;

#[derive(Parser)]
#[command(
    name = "moystates",
    version,
    about = "Exact state calculus for colored link diagrams and MOY graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct DiagramInput {
    /// Inline braid word, e.g. "-1 -1 -1" (requires --b and --colors).
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Strand count for --braid.
    #[arg(long)]
    b: Option<usize>,
    /// Comma-separated component colors for --braid, e.g. "1,2".
    #[arg(long)]
    colors: Option<String>,
    /// Input file: PD JSON (first byte '{') or the braid text format.
    #[arg(long)]
    input: Option<String>,
    /// Read the diagram from stdin (same sniffing as --input).
    #[arg(long)]
    stdin: bool,
}

#[derive(Args, Clone)]
struct SigmaOpts {
    /// Number of roots N (defaults to env MOYSTATES_N, then the diagram).
    #[arg(long = "N")]
    n: Option<usize>,
    /// Root set override: comma-separated rationals, e.g. "0,1,1/2"
    /// (defaults to env MOYSTATES_SIGMA, then {0,...,N-1}).
    #[arg(long)]
    sigma: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate states (or quasi-states) of a colored diagram.
    States {
        #[command(flatten)]
        input: DiagramInput,
        #[command(flatten)]
        sigma: SigmaOpts,
        /// Enumerate quasi-states instead of states.
        #[arg(long)]
        quasi: bool,
        /// Output count and histogram only (omit the state list).
        #[arg(long)]
        histogram: bool,
        /// Re-emit the parsed diagram as canonical PD JSON and exit.
        #[arg(long)]
        emit_pd: bool,
        /// Output format: json (default) or tsv (histogram table).
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Dump an m-colored circle ring: dimension, bases, ζ pairing.
    CircleRing {
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Rasmussen invariant of a braid closure colored uniformly by m.
    Sinv {
        /// Braid word, e.g. "-1 -1 -1".
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "N")]
        n: Option<usize>,
        /// Slice genus hint g* for the |s| ≤ 2m(N−m)g* bound.
        #[arg(long)]
        genus_hint: Option<i64>,
    },
    /// Chirality certificate for a knot given as a braid closure.
    Chirality {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        b: usize,
        #[arg(long = "N")]
        n: Option<usize>,
    },
    /// Run a named verification suite (or "all").
    Verify {
        /// One of: interpolation, circle-ring, idempotents, moves, bounds, all.
        suite: String,
        /// Seed for the randomized properties.
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Transport a state through a local move.
    Transport {
        /// One of: edge-split, edge-merge, chi0, chi1, circle-create,
        /// circle-annihilate, saddle.
        #[arg(long = "move")]
        mv: String,
        #[command(flatten)]
        sigma: SigmaOpts,
        /// Subset arguments as comma-separated root indices ("" for empty):
        /// edge-split: --omega, --m; edge-merge/saddle: --e1, --e2;
        /// chi1: --e1, --e2, --e3, --e4; chi0: --e1, --e4, --e-prime;
        /// circle-create: --m; circle-annihilate: --omega.
        #[arg(long)]
        omega: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        e1: Option<String>,
        #[arg(long)]
        e2: Option<String>,
        #[arg(long)]
        e3: Option<String>,
        #[arg(long)]
        e4: Option<String>,
        #[arg(long)]
        e_prime: Option<String>,
    },
}

enum CliError {
    /// Malformed input: exit code 2.
    Parse(String),
    /// Valid syntax, invalid semantics: exit code 1.
    Domain(String),
}

impl CliError {
    fn report(&self) -> (Value, u8) {
        match self {
            CliError::Parse(msg) => (json!({"error": {"kind": "parse", "message": msg}}), 2),
            CliError::Domain(msg) => (json!({"error": {"kind": "domain", "message": msg}}), 1),
        }
    }
}

fn parse_err(e: impl ToString) -> CliError {
    CliError::Parse(e.to_string())
}

fn domain_err(e: impl ToString) -> CliError {
    CliError::Domain(e.to_string())
}

fn env_default_n() -> Option<usize> {
    std::env::var("MOYSTATES_N").ok()?.parse().ok()
}

fn env_default_sigma() -> Option<String> {
    std::env::var("MOYSTATES_SIGMA").ok()
}

fn parse_sigma_list(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(parse_err))
        .collect()
}

/// Resolves (N, Σ): explicit flags beat env vars beat defaults. N must be
/// at least 2 and Σ must list N distinct rationals.
fn resolve_sigma(
    n_flag: Option<usize>,
    sigma_flag: Option<&str>,
    fallback_n: Option<usize>,
) -> Result<RootSet, CliError> {
    let sigma_text = sigma_flag.map(str::to_string).or_else(env_default_sigma);
    let n = n_flag.or_else(env_default_n);
    if let Some(text) = sigma_text {
        let roots = parse_sigma_list(&text)?;
        if let Some(n) = n.or(fallback_n) {
            if roots.len() != n {
                return Err(CliError::Domain(format!(
                    "sigma lists {} roots but N = {n}",
                    roots.len()
                )));
            }
        }
        return RootSet::new(roots).map_err(domain_err);
    }
    let n = n
        .or(fallback_n)
        .ok_or_else(|| CliError::Parse("N is required (flag --N or env MOYSTATES_N)".into()))?;
    if n < 2 {
        return Err(CliError::Domain(format!("N must be ≥ 2, got {n}")));
    }
    if n > moystates::symkit::MAX_ROOTS {
        return Err(CliError::Domain(format!(
            "N must be ≤ {}, got {n}",
            moystates::symkit::MAX_ROOTS
        )));
    }
    Ok(RootSet::standard(n))
}

fn load_diagram(input: &DiagramInput, n_opt: Option<usize>) -> Result<KnottedMoyGraph, CliError> {
    let sources = input.braid.is_some() as u8 + input.input.is_some() as u8 + input.stdin as u8;
    if sources != 1 {
        return Err(CliError::Parse(
            "exactly one input source required: --braid, --input, or --stdin".into(),
        ));
    }
    if let Some(word) = &input.braid {
        let b = input
            .b
            .ok_or_else(|| CliError::Parse("--braid requires --b".into()))?;
        let colors_text = input
            .colors
            .as_deref()
            .ok_or_else(|| CliError::Parse("--braid requires --colors".into()))?;
        let colors: Vec<usize> = colors_text
            .split(',')
            .map(|t| t.trim().parse().map_err(parse_err))
            .collect::<Result<_, _>>()?;
        let n = n_opt
            .or_else(env_default_n)
            .ok_or_else(|| CliError::Parse("N is required".into()))?;
        let braid = moystates::diagrams::parse_braid(b, word, &colors, n).map_err(parse_err)?;
        return Ok(braid.closure());
    }
    let text = if input.stdin {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(parse_err)?;
        buf
    } else {
        std::fs::read_to_string(input.input.as_ref().unwrap()).map_err(parse_err)?
    };
    if text.trim_start().starts_with('{') {
        let (graph, _) = PdDocument::parse(&text)
            .map_err(parse_err)?
            .to_graph()
            .map_err(domain_err)?;
        Ok(graph)
    } else {
        Ok(ColoredBraid::parse_file(&text)
            .map_err(parse_err)?
            .closure())
    }
}

fn histogram_json(set: &GradedStateSet) -> Value {
    let map: BTreeMap<String, usize> = set
        .histogram()
        .iter()
        .map(|(h, c)| (h.to_string(), *c))
        .collect();
    json!(map)
}

fn parse_mask(text: &str, sigma: &RootSet) -> Result<u32, CliError> {
    let mut mask = 0u32;
    for tok in text.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let i: usize = tok.parse().map_err(parse_err)?;
        if i >= sigma.n() {
            return Err(CliError::Domain(format!(
                "root index {i} out of range 0..{}",
                sigma.n()
            )));
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::States {
            input,
            sigma,
            quasi,
            histogram,
            emit_pd,
            format,
        } => {
            let graph = load_diagram(&input, sigma.n)?;
            if emit_pd {
                return Ok(PdDocument::from_graph(&graph).emit());
            }
            let roots = resolve_sigma(sigma.n, sigma.sigma.as_deref(), Some(graph.n()))?;
            if quasi {
                let qs = statecalc::enumerate_quasi_states(&graph, &roots).map_err(domain_err)?;
                let states: Vec<Vec<Vec<usize>>> = qs.iter().map(|s| s.index_lists()).collect();
                let out = json!({"count": qs.len(), "states": states});
                return Ok(serde_json::to_string_pretty(&out).unwrap());
            }
            let set = statecalc::enumerate_states(&graph, &roots).map_err(domain_err)?;
            match format.as_str() {
                "tsv" => {
                    let mut lines = vec!["h\tcount".to_string()];
                    for (h, c) in set.histogram() {
                        lines.push(format!("{h}\t{c}"));
                    }
                    Ok(lines.join("\n"))
                }
                "json" => {
                    let out = if histogram {
                        json!({"count": set.count(), "histogram": histogram_json(&set)})
                    } else {
                        let states: Vec<Vec<Vec<usize>>> =
                            set.states().iter().map(|s| s.index_lists()).collect();
                        json!({
                            "count": set.count(),
                            "histogram": histogram_json(&set),
                            "states": states,
                        })
                    };
                    Ok(serde_json::to_string_pretty(&out).unwrap())
                }
                other => Err(CliError::Parse(format!("unknown format {other:?}"))),
            }
        }

        Command::CircleRing { n, m, sigma } => {
            let roots = resolve_sigma(n, sigma.as_deref(), None)?;
            let ring = CircleRing::new(m, roots.clone()).map_err(domain_err)?;
            let matrix_json = |mat: &moystates::linalg::RatMatrix| -> Value {
                json!(mat
                    .to_rows()
                    .iter()
                    .map(|row| row.iter().map(Rational::to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>())
            };
            let pairing = ring.zeta_pairing_matrix().map_err(domain_err)?;
            let out = json!({
                "N": ring.n(),
                "m": ring.m(),
                "sigma": roots.roots().iter().map(Rational::to_string).collect::<Vec<_>>(),
                "dimension": ring.dimension(),
                "quantum_shift": ring.quantum_shift(),
                "subsets": ring.subsets().iter().map(|&s| mask_indices(s)).collect::<Vec<_>>(),
                "schur_basis": ring.schur_basis().iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                "schur_evaluation_matrix": matrix_json(ring.change_of_basis_matrix()),
                "difference_evaluation_matrix": matrix_json(ring.difference_basis_matrix()),
                "zeta_pairing_matrix": matrix_json(&pairing),
            });
            Ok(serde_json::to_string_pretty(&out).unwrap())
        }

        Command::Sinv {
            braid,
            b,
            m,
            n,
            genus_hint,
        } => {
            let n = n
                .or_else(env_default_n)
                .ok_or_else(|| CliError::Parse("N is required".into()))?;
            let word: Vec<i64> = braid
                .split_whitespace()
                .map(|t| t.parse().map_err(parse_err))
                .collect::<Result<_, _>>()?;
            let braid = ColoredBraid::uniform(b, word, m, n).map_err(parse_err)?;
            let result = s_invariant(&braid, m, n, genus_hint).map_err(domain_err)?;
            Ok(serde_json::to_string_pretty(&result).unwrap())
        }

        Command::Chirality { braid, b, n } => {
            let n = n
                .or_else(env_default_n)
                .ok_or_else(|| CliError::Parse("N is required".into()))?;
            let word: Vec<i64> = braid
                .split_whitespace()
                .map(|t| t.parse().map_err(parse_err))
                .collect::<Result<_, _>>()?;
            let braid = ColoredBraid::uniform(b, word, 1, n).map_err(parse_err)?;
            let verdict = chirality_certificate(&braid).map_err(domain_err)?;
            let out = json!({
                "verdict": match verdict {
                    ChiralityVerdict::Chiral => "chiral",
                    ChiralityVerdict::Inconclusive => "inconclusive",
                },
                "self_linking": braid.self_linking(),
            });
            Ok(serde_json::to_string_pretty(&out).unwrap())
        }

        Command::Verify { suite, seed } => {
            let names: Vec<&str> = if suite == "all" {
                verify::SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut reports = Vec::new();
            for name in names {
                let report = verify::run_suite(name, seed)
                    .ok_or_else(|| CliError::Parse(format!("unknown suite {name:?}")))?;
                for p in &report.properties {
                    eprintln!(
                        "[{}] {}/{}: {}",
                        if p.passed { "pass" } else { "FAIL" },
                        report.suite,
                        p.name,
                        p.detail
                    );
                }
                reports.push(report);
            }
            let all_passed = reports.iter().all(|r| r.passed());
            let out = serde_json::to_string_pretty(&reports).unwrap();
            if all_passed {
                Ok(out)
            } else {
                emit(&out);
                Err(CliError::Domain("verification failed".into()))
            }
        }

        Command::Transport {
            mv,
            sigma,
            omega,
            m,
            e1,
            e2,
            e3,
            e4,
            e_prime,
        } => {
            let roots = resolve_sigma(sigma.n, sigma.sigma.as_deref(), None)?;
            let need = |opt: &Option<String>, name: &str| -> Result<u32, CliError> {
                let text = opt
                    .as_ref()
                    .ok_or_else(|| CliError::Parse(format!("move {mv:?} requires --{name}")))?;
                parse_mask(text, &roots)
            };
            let results: Vec<Vec<Vec<usize>>> = match mv.as_str() {
                "edge-split" => {
                    let omega = need(&omega, "omega")?;
                    let m = m.ok_or_else(|| CliError::Parse("edge-split requires --m".into()))?;
                    transport::edge_split(omega, m)
                        .map_err(domain_err)?
                        .into_iter()
                        .map(|(a, b)| vec![mask_indices(a), mask_indices(b)])
                        .collect()
                }
                "edge-merge" => {
                    let merged = transport::edge_merge(need(&e1, "e1")?, need(&e2, "e2")?)
                        .map_err(domain_err)?;
                    vec![vec![mask_indices(merged)]]
                }
                "chi1" => transport::chi1(
                    need(&e1, "e1")?,
                    need(&e2, "e2")?,
                    need(&e3, "e3")?,
                    need(&e4, "e4")?,
                )
                .map_err(domain_err)?
                .into_iter()
                .map(|v| vec![mask_indices(v)])
                .collect(),
                "chi0" => transport::chi0(
                    need(&e1, "e1")?,
                    need(&e4, "e4")?,
                    need(&e_prime, "e-prime")?,
                )
                .map_err(domain_err)?
                .into_iter()
                .map(|v| vec![mask_indices(v)])
                .collect(),
                "circle-create" => {
                    let m =
                        m.ok_or_else(|| CliError::Parse("circle-create requires --m".into()))?;
                    transport::circle_create(&roots, m)
                        .into_iter()
                        .map(|v| vec![mask_indices(v)])
                        .collect()
                }
                "circle-annihilate" => {
                    let _ = need(&omega, "omega")?;
                    vec![vec![]]
                }
                "saddle" => transport::saddle(need(&e1, "e1")?, need(&e2, "e2")?)
                    .into_iter()
                    .map(|v| vec![mask_indices(v)])
                    .collect(),
                other => return Err(CliError::Parse(format!("unknown move {other:?}"))),
            };
            let out = json!({"count": results.len(), "results": results});
            Ok(serde_json::to_string_pretty(&out).unwrap())
        }
    }
}

/// Prints to stdout, tolerating a closed pipe (e.g. piping into `head`).
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            emit(&output);
            ExitCode::SUCCESS
        }
        Err(err) => {
            let (value, code) = err.report();
            emit(&serde_json::to_string_pretty(&value).unwrap());
            ExitCode::from(code)
        }
    }
}
