//! `dnkin`: command-line front end for the dihedral quantum kinematics
//! library.
//!
//! Subcommands construct, dump and verify every object the library builds:
//!
//! - `group <n> [--table]`: Cayley table of `D_n` and the group-axiom
//!   verdicts.
//! - `rep <n> <V1|V2> <element> [--oracle] [--format json|csv]`: one
//!   representation matrix with its unitarity verdict; `--oracle` also runs
//!   the block-rule induction and reports entrywise agreement.
//! - `verify <n> [--rep V1|V2|both] [--tol t]`: the full identity suite;
//!   exit code 0 only if every verdict passes.
//! - `coherent <n> <k> <a> <element> [--rep] [--probabilities]
//!   [--overlaps-with n k a element]`: a coherent state with optional
//!   probability profile and overlap value.
//!
//! Reports go to stdout (JSON with sorted keys by default, CSV for raw
//! matrix/vector dumps), diagnostics to stderr. Exit codes: 0 all verdicts
//! pass, 1 at least one numeric check failed, 2 usage or parse error.

mod report;

use clap::{Parser, Subcommand, ValueEnum};

use dihedral_kinematics::coherent::{
    coherent_state, coherent_state_via_weyl, overlap, overlap_formula, position_probability,
    position_probability_formula, WeylLabel,
};
use dihedral_kinematics::dihedral::{enumerate_group, DihedralElement};
use dihedral_kinematics::kinematics::{induce_rep, rep_closed_form, RepLabel};
use dihedral_kinematics::linalg::{max_norm_diff, max_norm_diff_vec, unitarity_deviation};
use dihedral_kinematics::verify::{self, full_suite, tolerances};
use dihedral_kinematics::Error;

use report::ReportDocument;

#[derive(Parser)]
#[command(
    name = "dnkin",
    version,
    about = "Quantum kinematics on Z_n with dihedral symmetry: construct, dump and verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepArg {
    #[value(name = "V1", alias = "v1")]
    V1,
    #[value(name = "V2", alias = "v2")]
    V2,
}

impl From<RepArg> for RepLabel {
    fn from(arg: RepArg) -> Self {
        match arg {
            RepArg::V1 => RepLabel::V1,
            RepArg::V2 => RepLabel::V2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepChoice {
    #[value(name = "V1", alias = "v1")]
    V1,
    #[value(name = "V2", alias = "v2")]
    V2,
    #[value(name = "both")]
    Both,
}

impl RepChoice {
    fn labels(self) -> Vec<RepLabel> {
        match self {
            RepChoice::V1 => vec![RepLabel::V1],
            RepChoice::V2 => vec![RepLabel::V2],
            RepChoice::Both => vec![RepLabel::V1, RepLabel::V2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Cayley table of D_n and exhaustive group-axiom verdicts
    Group {
        /// polygon order (n >= 2)
        n: usize,
        /// include the 2n x 2n multiplication table in the payload
        #[arg(long)]
        table: bool,
    },
    /// Dump one induced-representation matrix V_l(g)
    Rep {
        /// polygon order (n >= 2)
        n: usize,
        /// which induced representation
        #[arg(value_enum)]
        rep: RepArg,
        /// group element spec such as R3 or M0
        element: String,
        /// also run the block-rule induction oracle and compare entrywise
        #[arg(long)]
        oracle: bool,
        /// output format for the matrix payload
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the full identity verification suite
    Verify {
        /// polygon order (n >= 2)
        n: usize,
        /// representation(s) to verify
        #[arg(long, value_enum, default_value_t = RepChoice::Both)]
        rep: RepChoice,
        /// tolerance overriding every check's default
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Construct a coherent state |a, g>^(k)
    Coherent {
        /// polygon order (n >= 2)
        n: usize,
        /// vacuum family index (0 <= k < n)
        k: usize,
        /// phase index of the Weyl label (0 <= a < n)
        a: usize,
        /// group element spec such as R1 or M0
        element: String,
        /// which kinematics the state belongs to
        #[arg(long, value_enum, default_value_t = RepArg::V1)]
        rep: RepArg,
        /// include the position probability profile and its closed-form check
        #[arg(long)]
        probabilities: bool,
        /// second state (n k a element) to take the overlap with
        #[arg(long, num_args = 4, value_names = ["N", "K", "A", "ELEMENT"])]
        overlaps_with: Option<Vec<String>>,
        /// output format for the state payload
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            match err {
                Error::InvalidOrder(n) => eprintln!("error: n must be >= 2 (got {n})"),
                other => eprintln!("error: {other}"),
            }
            2
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Group { n, table } => cmd_group(n, table),
        Command::Rep {
            n,
            rep,
            element,
            oracle,
            format,
        } => cmd_rep(n, rep.into(), &element, oracle, format),
        Command::Verify { n, rep, tol } => cmd_verify(n, rep, tol),
        Command::Coherent {
            n,
            k,
            a,
            element,
            rep,
            probabilities,
            overlaps_with,
            format,
        } => cmd_coherent(
            n,
            k,
            a,
            &element,
            rep.into(),
            probabilities,
            overlaps_with,
            format,
        ),
    }
}

fn exit_code(report: &ReportDocument) -> i32 {
    if report.all_pass() {
        0
    } else {
        1
    }
}

fn cmd_group(n: usize, table: bool) -> Result<i32, Error> {
    let axioms = verify::group_axiom_report(n)?;
    let mut report = ReportDocument::new("group");
    report.parameter("n", n);
    report.parameter("table", table);
    report.verdict(
        "associativity",
        axioms.associativity_violations as f64,
        tolerances::EXACT,
    );
    report.verdict(
        "identity",
        axioms.identity_violations as f64,
        tolerances::EXACT,
    );
    report.verdict(
        "inverse",
        axioms.inverse_violations as f64,
        tolerances::EXACT,
    );

    if table {
        let group = enumerate_group(n)?;
        let names: Vec<String> = group.iter().map(|g| g.to_string()).collect();
        let mut rows = Vec::with_capacity(group.len());
        for a in &group {
            let mut row = Vec::with_capacity(group.len());
            for b in &group {
                row.push(serde_json::Value::String(a.multiply(b)?.to_string()));
            }
            rows.push(serde_json::Value::Array(row));
        }
        report.payload = Some(serde_json::json!({
            "elements": names,
            "cayley_table": rows,
        }));
    }

    println!("{}", report.to_json());
    Ok(exit_code(&report))
}

fn cmd_rep(
    n: usize,
    rep: RepLabel,
    element: &str,
    oracle: bool,
    format: Format,
) -> Result<i32, Error> {
    let g = DihedralElement::parse(element, n)?;
    let matrix = rep_closed_form(rep, &g);

    let mut report = ReportDocument::new("rep");
    report.parameter("n", n);
    report.parameter("rep", rep.to_string());
    report.parameter("element", g.to_string());
    report.verdict("unitarity", unitarity_deviation(&matrix), tolerances::UNITARY);
    if oracle {
        let induced = induce_rep(rep.inducing_irrep(), &g);
        report.verdict(
            "oracle_agreement",
            max_norm_diff(&matrix, &induced),
            tolerances::EXACT,
        );
    }

    match format {
        Format::Json => {
            report.payload = Some(serde_json::json!({
                "matrix": report::matrix_value(&matrix),
            }));
            println!("{}", report.to_json());
        }
        Format::Csv => {
            // payload on stdout, verdict diagnostics on stderr
            print!("{}", report::matrix_csv(&matrix));
            eprintln!("{}", report.to_json());
        }
    }
    Ok(exit_code(&report))
}

fn cmd_verify(n: usize, rep: RepChoice, tol: Option<f64>) -> Result<i32, Error> {
    let labels = rep.labels();
    let checks = full_suite(n, &labels, tol)?;

    let mut report = ReportDocument::new("verify");
    report.parameter("n", n);
    report.parameter(
        "rep",
        match rep {
            RepChoice::V1 => "V1",
            RepChoice::V2 => "V2",
            RepChoice::Both => "both",
        },
    );
    match tol {
        Some(t) => report.parameter("tol", t),
        None => report.parameter("tol", "per-check defaults"),
    }
    for check in &checks {
        report.verdicts.push(report::Verdict::from(check));
    }

    println!("{}", report.to_json());
    Ok(exit_code(&report))
}

#[allow(clippy::too_many_arguments)]
fn cmd_coherent(
    n: usize,
    k: usize,
    a: usize,
    element: &str,
    rep: RepLabel,
    probabilities: bool,
    overlaps_with: Option<Vec<String>>,
    format: Format,
) -> Result<i32, Error> {
    let g = DihedralElement::parse(element, n)?;
    let label = WeylLabel::new(a, g, rep)?;
    let state = coherent_state(&label, k)?;

    let mut report = ReportDocument::new("coherent");
    report.parameter("n", n);
    report.parameter("k", k);
    report.parameter("a", a);
    report.parameter("element", g.to_string());
    report.parameter("rep", rep.to_string());

    let norm_sqr: f64 = state.components().iter().map(|z| z.norm_sqr()).sum();
    report.verdict(
        "unit_norm",
        (norm_sqr - 1.0).abs(),
        tolerances::VACUUM_NORM,
    );
    let via_weyl = coherent_state_via_weyl(&label, k)?;
    report.verdict(
        "weyl_consistency",
        max_norm_diff_vec(state.components(), via_weyl.components()),
        tolerances::STATE_CONSISTENCY,
    );

    let mut payload = serde_json::Map::new();
    payload.insert(
        "state".to_string(),
        report::vector_value(state.components()),
    );

    if probabilities {
        let profile: Vec<f64> = (0..n)
            .map(|j| position_probability(j, &state))
            .collect::<Result<_, _>>()?;
        let mut worst: f64 = 0.0;
        for (j, &p) in profile.iter().enumerate() {
            let closed = position_probability_formula(n, &g, j)?;
            worst = worst.max((p - closed).abs());
        }
        report.verdict("probability_closed_form", worst, tolerances::PROBABILITY);
        let total: f64 = profile.iter().sum();
        report.verdict(
            "probability_normalization",
            (total - 1.0).abs(),
            tolerances::VACUUM_NORM,
        );
        payload.insert(
            "probabilities".to_string(),
            serde_json::json!(profile),
        );
    }

    if let Some(other_spec) = overlaps_with {
        let (other_label, other_k) = parse_overlap_spec(&other_spec, rep)?;
        let other = coherent_state(&other_label, other_k)?;
        let direct = overlap(&state, &other)?;
        let closed = overlap_formula(&label, &other_label, k)?;
        report.verdict(
            "overlap_closed_form",
            (direct - closed).norm(),
            tolerances::OVERLAP,
        );
        payload.insert("overlap".to_string(), report::complex_value(direct));
        report.parameter(
            "overlaps_with",
            format!(
                "n={} k={} a={} element={}",
                other_label.order(),
                other_k,
                other_label.a(),
                other_label.g()
            ),
        );
    }

    match format {
        Format::Json => {
            report.payload = Some(serde_json::Value::Object(payload));
            println!("{}", report.to_json());
        }
        Format::Csv => {
            print!("{}", report::vector_csv(state.components()));
            eprintln!("{}", report.to_json());
        }
    }
    Ok(exit_code(&report))
}

fn parse_overlap_spec(spec: &[String], rep: RepLabel) -> Result<(WeylLabel, usize), Error> {
    let parse_index = |s: &str| -> Result<usize, Error> {
        s.parse::<usize>()
            .map_err(|_| Error::ParseElement(s.to_string()))
    };
    let n = parse_index(&spec[0])?;
    let k = parse_index(&spec[1])?;
    let a = parse_index(&spec[2])?;
    let g = DihedralElement::parse(&spec[3], n)?;
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, order: n });
    }
    Ok((WeylLabel::new(a, g, rep)?, k))
}
