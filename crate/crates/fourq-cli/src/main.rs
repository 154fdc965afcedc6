//! `fourq`: invariant fingerprints, orbit comparisons, and marginal
//! diagnostics for four-qubit pure states.
//!
//! Every subcommand prints exactly one JSON document to standard output
//! with a fixed key order and deterministic float rendering, so identical
//! invocations are byte-identical. Exit codes: 0 for success (including an
//! inconclusive comparison), 1 for a negative verdict (NotEquivalent, a
//! failed witness check), 2 for usage or input errors.

use clap::{value_parser, Arg, ArgAction, ArgGroup, ArgMatches, Command};
use serde::Serialize;

use fourq_core::{
    apply_quartet, compare_fingerprints, fingerprint, inv_n, max_entanglement_report, named_state,
    orbit_invariance_report, parse_subset, partial_trace, verify_witness, ComplexTolerance,
    EquivalenceVerdict, LocalOperatorQuartet, PureState4,
};

fn state_input_args(cmd: Command) -> Command {
    cmd.arg(
        Arg::new("state")
            .long("state")
            .value_name("FILE")
            .help("Path to a fourq-state-v1 JSON file"),
    )
    .arg(
        Arg::new("named")
            .long("named")
            .value_name("NAME")
            .help("Catalog state name (see `fourq catalog list`)"),
    )
    .group(
        ArgGroup::new("input")
            .args(["state", "named"])
            .required(true),
    )
}

fn tolerance_args(cmd: Command) -> Command {
    cmd.arg(
        Arg::new("abs-tol")
            .long("abs-tol")
            .value_name("X")
            .value_parser(value_parser!(f64))
            .help("Absolute tolerance for zero classification"),
    )
    .arg(
        Arg::new("rel-tol")
            .long("rel-tol")
            .value_name("Y")
            .value_parser(value_parser!(f64))
            .help("Relative tolerance for rescaling consistency"),
    )
}

fn cli() -> Command {
    Command::new("fourq")
        .about("Polynomial invariants and orbit checks for four-qubit pure states")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .subcommand(state_input_args(
            Command::new("invariants").about("Print the invariant fingerprint of a state"),
        ))
        .subcommand(tolerance_args(
            Command::new("compare")
                .about("Compare two states' fingerprints up to determinant rescaling")
                .arg(
                    Arg::new("state")
                        .long("state")
                        .value_name("FILE")
                        .action(ArgAction::Append)
                        .help("Path to a fourq-state-v1 JSON file"),
                )
                .arg(
                    Arg::new("named")
                        .long("named")
                        .value_name("NAME")
                        .action(ArgAction::Append)
                        .help("Catalog state name"),
                ),
        ))
        .subcommand(
            state_input_args(
                Command::new("apply").about("Apply one single-qubit gate per qubit to a state"),
            )
            .arg(
                Arg::new("ops")
                    .long("ops")
                    .value_name("G,G,G,G")
                    .required(true)
                    .help("Comma-separated gates for qubits 1..4 (I, X, Y, Z, H)"),
            ),
        )
        .subcommand(
            Command::new("check-witness")
                .about("Check whether a gate quartet maps one state onto another up to scale")
                .arg(
                    Arg::new("ops")
                        .long("ops")
                        .value_name("G,G,G,G")
                        .required(true)
                        .help("Comma-separated gates for qubits 1..4 (I, X, Y, Z, H)"),
                )
                .arg(
                    Arg::new("a")
                        .value_name("STATE_A")
                        .required(true)
                        .help("Catalog name or state file path"),
                )
                .arg(
                    Arg::new("b")
                        .value_name("STATE_B")
                        .required(true)
                        .help("Catalog name or state file path"),
                ),
        )
        .subcommand(
            state_input_args(
                Command::new("marginals")
                    .about("Print marginal purities (all singles and pairs, or one subset)"),
            )
            .arg(
                Arg::new("subset")
                    .long("subset")
                    .value_name("QUBITS")
                    .help("Kept qubits, e.g. 1,2 (commas optional)"),
            ),
        )
        .subcommand(
            state_input_args(
                Command::new("orbit-test")
                    .about("Sweep random determinant-1 quartets and report invariant drift"),
            )
            .arg(
                Arg::new("samples")
                    .long("samples")
                    .value_name("K")
                    .required(true)
                    .value_parser(value_parser!(u64).range(1..))
                    .help("Number of random quartets"),
            )
            .arg(
                Arg::new("seed")
                    .long("seed")
                    .value_name("S")
                    .required(true)
                    .value_parser(value_parser!(u64))
                    .help("Base seed for the quartet substreams"),
            ),
        )
        .subcommand(
            Command::new("catalog")
                .about("List or print the built-in reference states")
                .subcommand_required(true)
                .subcommand(Command::new("list").about("List catalog names and provenance"))
                .subcommand(
                    Command::new("show")
                        .about("Print a catalog state as fourq-state-v1 JSON")
                        .arg(Arg::new("name").value_name("NAME").required(true)),
                ),
        )
}

fn load_state_file(path: &str) -> Result<PureState4, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    PureState4::from_json(&text).map_err(|e| format!("{path}: {e}"))
}

/// Resolves a `--state FILE` / `--named NAME` pair on a subcommand that
/// takes exactly one state.
fn load_single_state(matches: &ArgMatches) -> Result<PureState4, String> {
    if let Some(path) = matches.get_one::<String>("state") {
        load_state_file(path)
    } else {
        let name = matches.get_one::<String>("named").expect("group required");
        named_state(name).map_err(|e| e.to_string())
    }
}

/// Resolves a positional that may be either a catalog name or a file path.
/// Catalog names win; anything else is treated as a path.
fn load_name_or_file(text: &str) -> Result<PureState4, String> {
    match named_state(text) {
        Ok(state) => Ok(state),
        Err(_) => load_state_file(text).map_err(|e| {
            format!("{text} is neither a catalog state name nor a readable state file ({e})")
        }),
    }
}

/// Collects the two states of `compare` in command-line order, however they
/// are spread across `--state` and `--named`.
fn load_compare_states(matches: &ArgMatches) -> Result<[PureState4; 2], String> {
    let mut ordered: Vec<(usize, PureState4)> = Vec::new();
    if let Some(indices) = matches.indices_of("state") {
        let values = matches
            .get_many::<String>("state")
            .expect("indices imply values");
        for (idx, path) in indices.zip(values) {
            ordered.push((idx, load_state_file(path)?));
        }
    }
    if let Some(indices) = matches.indices_of("named") {
        let values = matches
            .get_many::<String>("named")
            .expect("indices imply values");
        for (idx, name) in indices.zip(values) {
            ordered.push((idx, named_state(name).map_err(|e| e.to_string())?));
        }
    }
    ordered.sort_by_key(|(idx, _)| *idx);
    if ordered.len() != 2 {
        return Err(format!(
            "compare needs exactly two states (via --state/--named), found {}",
            ordered.len()
        ));
    }
    let mut it = ordered.into_iter();
    let first = it.next().expect("length checked").1;
    let second = it.next().expect("length checked").1;
    Ok([first, second])
}

fn tolerance_from(matches: &ArgMatches) -> Result<ComplexTolerance, String> {
    let defaults = ComplexTolerance::default();
    let abs = matches
        .get_one::<f64>("abs-tol")
        .copied()
        .unwrap_or(defaults.abs_tol);
    let rel = matches
        .get_one::<f64>("rel-tol")
        .copied()
        .unwrap_or(defaults.rel_tol);
    ComplexTolerance::new(abs, rel).map_err(|e| e.to_string())
}

/// Writes one output line. A broken pipe (the reader closed early, e.g.
/// `fourq catalog list | head`) is a normal way for a consumer to stop
/// listening, so it exits 0 instead of panicking mid-write.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let result = out
        .write_all(text.as_bytes())
        .and_then(|()| out.write_all(b"\n"))
        .and_then(|()| out.flush());
    if let Err(e) = result {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(2);
    }
}

fn print_pretty<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("output types serialize");
    emit(&text);
}

/// Fingerprint document: the four fingerprint components plus the dependent
/// third degree-4 determinant under its reporting key.
#[derive(Serialize)]
struct InvariantsDoc {
    #[serde(rename = "H")]
    h: [f64; 2],
    #[serde(rename = "L")]
    l: [f64; 2],
    #[serde(rename = "M")]
    m: [f64; 2],
    #[serde(rename = "Dxt")]
    dxt: [f64; 2],
    #[serde(rename = "N3")]
    n3: [f64; 2],
}

#[derive(Serialize)]
struct SubsetPurityDoc {
    subset: String,
    purity: f64,
}

fn run_invariants(matches: &ArgMatches) -> Result<i32, String> {
    let state = load_single_state(matches)?;
    let f = fingerprint(&state);
    let n = inv_n(&state);
    print_pretty(&InvariantsDoc {
        h: [f.h.re, f.h.im],
        l: [f.l.re, f.l.im],
        m: [f.m.re, f.m.im],
        dxt: [f.dxt.re, f.dxt.im],
        n3: [n.re, n.im],
    });
    Ok(0)
}

fn run_compare(matches: &ArgMatches) -> Result<i32, String> {
    let [a, b] = load_compare_states(matches)?;
    let tol = tolerance_from(matches)?;
    let verdict = compare_fingerprints(&fingerprint(&a), &fingerprint(&b), tol);
    print_pretty(&verdict);
    Ok(match verdict {
        EquivalenceVerdict::NotEquivalent { .. } => 1,
        _ => 0,
    })
}

fn run_apply(matches: &ArgMatches) -> Result<i32, String> {
    let state = load_single_state(matches)?;
    let ops = matches.get_one::<String>("ops").expect("required");
    let quartet = LocalOperatorQuartet::parse(ops).map_err(|e| e.to_string())?;
    let moved = apply_quartet(&quartet, &state).map_err(|e| e.to_string())?;
    emit(&moved.to_json());
    Ok(0)
}

fn run_check_witness(matches: &ArgMatches) -> Result<i32, String> {
    let ops = matches.get_one::<String>("ops").expect("required");
    let quartet = LocalOperatorQuartet::parse(ops).map_err(|e| e.to_string())?;
    let a = load_name_or_file(matches.get_one::<String>("a").expect("required"))?;
    let b = load_name_or_file(matches.get_one::<String>("b").expect("required"))?;
    let ok = verify_witness(&quartet, &a, &b, ComplexTolerance::default());
    emit(if ok { "true" } else { "false" });
    Ok(if ok { 0 } else { 1 })
}

fn run_marginals(matches: &ArgMatches) -> Result<i32, String> {
    let state = load_single_state(matches)?;
    match matches.get_one::<String>("subset") {
        None => print_pretty(&max_entanglement_report(&state)),
        Some(raw) => {
            let digits: String = raw.chars().filter(|c| *c != ',' && *c != ' ').collect();
            let kept = parse_subset(&digits).map_err(|e| e.to_string())?;
            let rho = partial_trace(&state, &kept).map_err(|e| e.to_string())?;
            let subset = rho.kept().iter().map(u8::to_string).collect::<String>();
            print_pretty(&SubsetPurityDoc {
                subset,
                purity: rho.purity(),
            });
        }
    }
    Ok(0)
}

fn run_orbit_test(matches: &ArgMatches) -> Result<i32, String> {
    let state = load_single_state(matches)?;
    let samples = *matches.get_one::<u64>("samples").expect("required") as usize;
    let seed = *matches.get_one::<u64>("seed").expect("required");
    print_pretty(&orbit_invariance_report(&state, samples, seed));
    Ok(0)
}

fn run_catalog(matches: &ArgMatches) -> Result<i32, String> {
    match matches.subcommand() {
        Some(("list", _)) => {
            print_pretty(&fourq_core::catalog_entries());
            Ok(0)
        }
        Some(("show", sub)) => {
            let name = sub.get_one::<String>("name").expect("required");
            let state = named_state(name).map_err(|e| e.to_string())?;
            emit(&state.to_json());
            Ok(0)
        }
        _ => unreachable!("subcommand required"),
    }
}

fn run() -> Result<i32, String> {
    let matches = cli().get_matches();
    match matches.subcommand() {
        Some(("invariants", sub)) => run_invariants(sub),
        Some(("compare", sub)) => run_compare(sub),
        Some(("apply", sub)) => run_apply(sub),
        Some(("check-witness", sub)) => run_check_witness(sub),
        Some(("marginals", sub)) => run_marginals(sub),
        Some(("orbit-test", sub)) => run_orbit_test(sub),
        Some(("catalog", sub)) => run_catalog(sub),
        _ => unreachable!("subcommand required"),
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
