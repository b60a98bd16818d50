//! Command-line interface for right-hexagon geometry.
//!
//! Exit codes: 0 success; 1 a requested check failed; 2 domain error
//! (infeasible lengths, bad position, zero input); 3 limit not converged;
//! 64 usage or parse error; 70 internal consistency failure.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hexatlas::formats::{
    self, parse_rational, parse_triple, parse_weights, reorder_to_canonical, trace_csv, ChartDto,
    CheckReportDto, ComplexDto, FoliationDto, HexagonDto, LimitDto,
};
use hexatlas::seqtext::parse_sequence_spec;
use hexatlas_core::{
    boundary_limit, diverges, pmf_cell_complex, ArcTriple, ChartCoords, Divergence, Error as CoreError,
    FoliationClass, HexagonLengths, Rational, TeichPoint, Tolerances,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_NOT_CONVERGED: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_INTERNAL: u8 = 70;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "hexatlas", version, about = "Right-angled hyperbolic hexagons, measured foliations, and boundary limits")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    format: Format,

    /// Iteration bound for limit computations.
    #[arg(long, global = true, default_value_t = 40)]
    nmax: u32,

    /// Emit the per-step CSV trace of limit computations.
    #[arg(long, global = true)]
    trace: bool,

    #[command(flatten)]
    tol: TolArgs,

    #[command(subcommand)]
    command: Command,
}

/// Per-invariant tolerance overrides.
#[derive(Debug, Args)]
struct TolArgs {
    /// Cauchy tolerance of limit extrapolation.
    #[arg(long = "tol-converge", global = true, default_value_t = 1e-6)]
    converge: f64,
    #[arg(long = "tol-side-relation", global = true)]
    side_relation: Option<f64>,
    #[arg(long = "tol-law-of-sines", global = true)]
    law_of_sines: Option<f64>,
    #[arg(long = "tol-perp-product", global = true)]
    perp_product: Option<f64>,
    #[arg(long = "tol-feet", global = true)]
    feet: Option<f64>,
    #[arg(long = "tol-pentagon", global = true)]
    pentagon: Option<f64>,
}

impl TolArgs {
    fn hexagon_tolerances(&self) -> Result<Tolerances, CliFailure> {
        let mut tol = Tolerances::default();
        for (slot, value) in [
            (&mut tol.side_relation, self.side_relation),
            (&mut tol.law_of_sines, self.law_of_sines),
            (&mut tol.perp_product, self.perp_product),
            (&mut tol.feet, self.feet),
            (&mut tol.pentagon, self.pentagon),
        ] {
            if let Some(v) = value {
                if !v.is_finite() || v <= 0.0 {
                    return Err(usage("tolerances must be positive"));
                }
                *slot = v;
            }
        }
        Ok(tol)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve right hexagons.
    Hexagon {
        #[command(subcommand)]
        cmd: HexagonCmd,
    },
    /// Chart computations for measured foliations.
    Foliation {
        #[command(subcommand)]
        cmd: FoliationCmd,
    },
    /// The chart atlas and its cell complex.
    Atlas {
        #[command(subcommand)]
        cmd: AtlasCmd,
    },
    /// Teichmueller-space functionals and boundary limits.
    Teich {
        #[command(subcommand)]
        cmd: TeichCmd,
    },
    /// The doubled hexagon (pair of pants).
    Pants {
        #[command(subcommand)]
        cmd: PantsCmd,
    },
}

#[derive(Debug, Subcommand)]
enum HexagonCmd {
    /// Solve the hexagon realizing three arc lengths.
    Solve {
        /// Arc triple, e.g. `a,b,c` or `a,b,gamma`.
        #[arg(long)]
        triple: String,
        /// Lengths bound to the triple entries, in the order given.
        #[arg(long)]
        lengths: String,
    },
}

#[derive(Debug, Subcommand)]
enum FoliationCmd {
    /// Recover the foliation with given chart coordinates.
    Chart {
        #[arg(long)]
        triple: String,
        /// Three rationals `p/q`, bound to the triple entries in order.
        #[arg(long)]
        coords: String,
    },
    /// Piecewise-linear coordinate change between charts.
    Transition {
        #[arg(long)]
        triple: String,
        #[arg(long)]
        coords: String,
        /// Target triple.
        #[arg(long)]
        to: String,
    },
    /// List the charts containing a foliation.
    Classify {
        /// Weight list, e.g. `alpha=1` or `A=1/2,B=1/2`.
        #[arg(long)]
        weights: String,
    },
}

#[derive(Debug, Subcommand)]
enum AtlasCmd {
    /// Write the cell complex of the projective foliation sphere.
    Export {
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Verify the sphere invariants and transition coherence.
    Check {
        /// Check a previously exported complex instead of the built-in one.
        #[arg(long)]
        complex: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum TeichCmd {
    /// Classify a degenerating family and follow it to the boundary.
    Limit {
        /// Family spec, e.g. `a=n;b=n;c=n`.
        #[arg(long)]
        seq: String,
        /// Cauchy tolerance at nmax (defaults to --tol-converge).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Project a hexagon or foliation into projective 6-space.
    Embed {
        #[arg(long)]
        triple: Option<String>,
        #[arg(long)]
        lengths: Option<String>,
        #[arg(long)]
        weights: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum PantsCmd {
    /// Cuff lengths of the pair of pants doubling a hexagon.
    Double {
        #[arg(long)]
        triple: String,
        #[arg(long)]
        lengths: String,
    },
}

/// A failed run: message plus process exit code.
struct CliFailure {
    code: u8,
    message: String,
}

fn usage(msg: impl Into<String>) -> CliFailure {
    CliFailure { code: EXIT_USAGE, message: msg.into() }
}

fn core_failure(e: CoreError) -> CliFailure {
    let code = match e {
        CoreError::NotConverged { .. } => EXIT_NOT_CONVERGED,
        CoreError::Inconsistent(_) => EXIT_INTERNAL,
        CoreError::InvalidTriple => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    };
    CliFailure { code, message: e.to_string() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful exits; everything
            // else is a usage error.
            if e.use_stderr() {
                let _ = write!(std::io::stderr(), "{e}");
                return ExitCode::from(EXIT_USAGE);
            }
            let _ = write!(std::io::stdout(), "{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliFailure> {
    match &cli.command {
        Command::Hexagon { cmd: HexagonCmd::Solve { triple, lengths } } => {
            cmd_hexagon_solve(cli, triple, lengths)
        }
        Command::Foliation { cmd } => match cmd {
            FoliationCmd::Chart { triple, coords } => cmd_foliation_chart(cli, triple, coords),
            FoliationCmd::Transition { triple, coords, to } => {
                cmd_foliation_transition(cli, triple, coords, to)
            }
            FoliationCmd::Classify { weights } => cmd_foliation_classify(cli, weights),
        },
        Command::Atlas { cmd } => match cmd {
            AtlasCmd::Export { out } => cmd_atlas_export(cli, out.as_deref()),
            AtlasCmd::Check { complex } => cmd_atlas_check(cli, complex.as_deref()),
        },
        Command::Teich { cmd } => match cmd {
            TeichCmd::Limit { seq, tol } => cmd_teich_limit(cli, seq, *tol),
            TeichCmd::Embed { triple, lengths, weights } => {
                cmd_teich_embed(cli, triple.as_deref(), lengths.as_deref(), weights.as_deref())
            }
        },
        Command::Pants { cmd: PantsCmd::Double { triple, lengths } } => {
            cmd_pants_double(cli, triple, lengths)
        }
    }
}

fn parse_lengths(spec: &str) -> Result<[f64; 3], CliFailure> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(usage(format!("expected three comma-separated lengths, got {spec:?}")));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad length {part:?}")))?;
    }
    Ok(out)
}

/// Parses a triple plus values bound to the user's entry order, returning
/// them in canonical class order.
fn triple_with_values<T: Clone, E: std::fmt::Display>(
    triple_spec: &str,
    values_spec: &str,
    parse: impl Fn(&str) -> Result<[T; 3], E>,
) -> Result<(ArcTriple, [T; 3]), CliFailure> {
    let (triple, user_order) = parse_triple(triple_spec).map_err(usage)?;
    let values = parse(values_spec).map_err(|e| usage(e.to_string()))?;
    Ok((triple, reorder_to_canonical(&triple, &user_order, &values)))
}

fn parse_coords(spec: &str) -> Result<[Rational; 3], String> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated rationals, got {spec:?}"));
    }
    Ok([
        parse_rational(parts[0])?,
        parse_rational(parts[1])?,
        parse_rational(parts[2])?,
    ])
}

fn emit(text: String) -> Result<ExitCode, CliFailure> {
    println!("{text}");
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// hexagon
// ---------------------------------------------------------------------------

fn cmd_hexagon_solve(cli: &Cli, triple: &str, lengths: &str) -> Result<ExitCode, CliFailure> {
    let (t, lengths) = triple_with_values(triple, lengths, |s| parse_lengths(s).map_err(|f| f.message))?;
    let hexagon = HexagonLengths::solve_from_triple(&t, lengths).map_err(core_failure)?;
    hexagon.validate_with(&cli.tol.hexagon_tolerances()?).map_err(core_failure)?;
    let dto = HexagonDto::from(&hexagon);
    match cli.format {
        Format::Json => emit(serde_json::to_string(&dto).expect("serializable")),
        Format::Csv => {
            let mut s = String::from("a,b,c,A,B,C,alpha,beta,gamma\n");
            let row = [
                hexagon.a, hexagon.b, hexagon.c, hexagon.opp_a, hexagon.opp_b, hexagon.opp_c,
                hexagon.alpha, hexagon.beta, hexagon.gamma,
            ];
            s.push_str(&row.map(formats::format_f64).join(","));
            emit(s)
        }
        Format::Pretty => {
            let s = &dto.sides;
            let p = &dto.perp;
            emit(format!(
                "sides: a={} C={} b={} A={} c={} B={}\nperp:  alpha={} beta={} gamma={}",
                formats::format_f64(s.a),
                formats::format_f64(s.opp_c),
                formats::format_f64(s.b),
                formats::format_f64(s.opp_a),
                formats::format_f64(s.c),
                formats::format_f64(s.opp_b),
                formats::format_f64(p.alpha),
                formats::format_f64(p.beta),
                formats::format_f64(p.gamma),
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// foliation
// ---------------------------------------------------------------------------

fn chart_from_args(triple: &str, coords: &str) -> Result<ChartCoords, CliFailure> {
    let (t, coords) = triple_with_values(triple, coords, parse_coords)?;
    ChartCoords::new(t, coords).map_err(core_failure)
}

fn cmd_foliation_chart(cli: &Cli, triple: &str, coords: &str) -> Result<ExitCode, CliFailure> {
    let cc = chart_from_args(triple, coords)?;
    let foliation = cc.to_foliation().map_err(core_failure)?;
    render_foliation(cli, &foliation)
}

fn render_foliation(cli: &Cli, foliation: &FoliationClass) -> Result<ExitCode, CliFailure> {
    let dto = FoliationDto::from(foliation);
    match cli.format {
        Format::Json => emit(serde_json::to_string(&dto).expect("serializable")),
        Format::Csv => {
            let mut s = String::from("class,weight\n");
            for (name, value) in &dto.weights {
                s.push_str(&format!("{name},{value}\n"));
            }
            emit(s.trim_end().to_string())
        }
        Format::Pretty => {
            let parts: Vec<String> =
                dto.weights.iter().map(|(n, v)| format!("{n}={v}")).collect();
            emit(format!("weights: {}", parts.join(" ")))
        }
    }
}

fn cmd_foliation_transition(
    cli: &Cli,
    triple: &str,
    coords: &str,
    to: &str,
) -> Result<ExitCode, CliFailure> {
    let cc = chart_from_args(triple, coords)?;
    let (target, _) = parse_triple(to).map_err(usage)?;
    let out = cc.transition(&target).map_err(core_failure)?;
    let dto = ChartDto::from(&out);
    match cli.format {
        Format::Json => emit(serde_json::to_string(&dto).expect("serializable")),
        Format::Csv => emit(format!(
            "triple,coords,region\n\"{}\",\"{}\",{}",
            dto.triple.join(","),
            dto.coords.join(","),
            dto.region
        )),
        Format::Pretty => emit(format!(
            "triple: {}\ncoords: {}\nregion: {}",
            dto.triple.join(","),
            dto.coords.join(","),
            dto.region
        )),
    }
}

fn cmd_foliation_classify(cli: &Cli, weights: &str) -> Result<ExitCode, CliFailure> {
    let foliation = parse_weights(weights).map_err(usage)?;
    let charts = foliation.charts_containing().map_err(core_failure)?;
    let names: Vec<[String; 3]> =
        charts.iter().map(|t| t.classes().map(|c| c.name().to_string())).collect();
    match cli.format {
        Format::Json => emit(serde_json::to_string(&names).expect("serializable")),
        Format::Csv | Format::Pretty => {
            let lines: Vec<String> = names.iter().map(|n| n.join(",")).collect();
            emit(lines.join("\n"))
        }
    }
}

// ---------------------------------------------------------------------------
// atlas
// ---------------------------------------------------------------------------

fn cmd_atlas_export(cli: &Cli, out: Option<&std::path::Path>) -> Result<ExitCode, CliFailure> {
    let complex = pmf_cell_complex();
    let dto = ComplexDto::from(&complex);
    let text = match cli.format {
        Format::Json => serde_json::to_string(&dto).expect("serializable"),
        Format::Csv => {
            let mut s = String::from("kind,members\n");
            for v in &dto.vertices {
                s.push_str(&format!("vertex,{v}\n"));
            }
            for e in &dto.edges {
                s.push_str(&format!("edge,{}\n", e.join("+")));
            }
            for f in &dto.faces {
                s.push_str(&format!("face,{}\n", f.join("+")));
            }
            s.trim_end().to_string()
        }
        Format::Pretty => format!(
            "vertices: {}\nedges: {}\nfaces: {}\nchi: {}",
            dto.vertices.len(),
            dto.edges.len(),
            dto.faces.len(),
            complex.euler_characteristic()
        ),
    };
    match out {
        Some(path) => {
            std::fs::write(path, text + "\n").map_err(|e| CliFailure {
                code: EXIT_DOMAIN,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            Ok(ExitCode::SUCCESS)
        }
        None => emit(text),
    }
}

/// A deterministic transition-coherence sample: for every census triple as a
/// band support, compose transitions through the first charts containing it.
fn cocycle_check() -> CheckReportDto {
    let mut failures = 0usize;
    let mut total = 0usize;
    for support in hexatlas_core::compatible_triples() {
        let [c1, c2, c3] = support.classes();
        let f = FoliationClass::new([
            (c1, Rational::from_integer(1.into())),
            (c2, Rational::from_integer(2.into())),
            (c3, Rational::from_integer(3.into())),
        ])
        .expect("census triples are disjoint supports");
        let charts = match f.charts_containing() {
            Ok(c) => c,
            Err(_) => {
                failures += 1;
                continue;
            }
        };
        for t1 in charts.iter().take(3) {
            let cc1 = f.to_chart(t1).expect("contained");
            for t2 in charts.iter().take(3) {
                for t3 in charts.iter().take(3) {
                    total += 1;
                    let via = cc1.transition(t2).and_then(|v| v.transition(t3));
                    let direct = cc1.transition(t3);
                    match (via, direct) {
                        (Ok(x), Ok(y)) if x == y => {}
                        _ => failures += 1,
                    }
                }
            }
        }
    }
    CheckReportDto {
        name: String::from("transition-cocycle"),
        passed: failures == 0,
        detail: format!("{failures} failures over {total} compositions"),
    }
}

fn cmd_atlas_check(cli: &Cli, source: Option<&std::path::Path>) -> Result<ExitCode, CliFailure> {
    let complex = match source {
        None => pmf_cell_complex(),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliFailure {
                code: EXIT_DOMAIN,
                message: format!("cannot read {}: {e}", path.display()),
            })?;
            let dto: ComplexDto = serde_json::from_str(&text)
                .map_err(|e| usage(format!("bad complex JSON: {e}")))?;
            match dto.to_complex() {
                Ok(c) => c,
                Err(message) => {
                    // Unparseable faces are themselves a failed check.
                    report_checks(
                        cli,
                        &[CheckReportDto {
                            name: String::from("parse"),
                            passed: false,
                            detail: message,
                        }],
                    )?;
                    return Ok(ExitCode::from(EXIT_CHECK_FAILED));
                }
            }
        }
    };
    let mut checks: Vec<CheckReportDto> = complex.check().iter().map(CheckReportDto::from).collect();
    checks.push(cocycle_check());
    let all_passed = checks.iter().all(|c| c.passed);
    report_checks(cli, &checks)?;
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(EXIT_CHECK_FAILED) })
}

fn report_checks(cli: &Cli, checks: &[CheckReportDto]) -> Result<(), CliFailure> {
    match cli.format {
        Format::Json => {
            println!("{}", serde_json::to_string(checks).expect("serializable"));
        }
        Format::Csv | Format::Pretty => {
            for c in checks {
                println!(
                    "{}: {} ({})",
                    c.name,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.detail
                );
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// teich
// ---------------------------------------------------------------------------

fn cmd_teich_limit(cli: &Cli, seq: &str, tol: Option<f64>) -> Result<ExitCode, CliFailure> {
    let spec = parse_sequence_spec(seq).map_err(usage)?;
    if cli.nmax < 2 {
        return Err(usage("--nmax must be at least 2"));
    }
    let classification = diverges(&spec).map_err(core_failure)?;
    if classification == Divergence::Bounded {
        let dto = LimitDto::bounded();
        return match cli.format {
            Format::Json => emit(serde_json::to_string(&dto).expect("serializable")),
            Format::Csv | Format::Pretty => {
                emit(String::from("classification: bounded (does not tend to infinity)"))
            }
        };
    }
    let tol = tol.unwrap_or(cli.tol.converge);
    let report = match boundary_limit(&spec, cli.nmax, tol) {
        Ok(report) => report,
        Err(e) => {
            // The classification and witness are known regardless; report
            // them before failing so slow-converging families still show
            // where they are headed.
            let dto = LimitDto::from_divergence(&classification);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&dto).expect("serializable")),
                Format::Csv | Format::Pretty => {
                    if let Some(witness) = &dto.witness {
                        println!("classification: diverges\nwitness: {}", witness.join(","));
                    }
                }
            }
            return Err(core_failure(e));
        }
    };
    let dto = LimitDto::from_report(&report);
    match cli.format {
        Format::Json => {
            let mut value = serde_json::to_value(&dto).expect("serializable");
            if cli.trace {
                let rows: Vec<Vec<serde_json::Value>> = report
                    .steps
                    .iter()
                    .map(|s| {
                        let mut row = vec![serde_json::json!(s.n)];
                        row.extend(s.lengths.iter().map(|v| serde_json::json!(v)));
                        row.extend(s.normalized.iter().map(|v| serde_json::json!(v)));
                        row
                    })
                    .collect();
                value["trace"] = serde_json::json!(rows);
            }
            emit(value.to_string())
        }
        Format::Csv => emit(trace_csv(&report).trim_end().to_string()),
        Format::Pretty => {
            let mut text = format!(
                "classification: diverges\nwitness: {}\nlimit: ({})\nchart: {}\ncollar_at_nmax: {}",
                dto.witness.as_ref().expect("diverging").join(","),
                dto.limit
                    .expect("diverging")
                    .map(formats::format_f64)
                    .join(", "),
                dto.chart.as_ref().expect("diverging").join(","),
                formats::format_f64(dto.collar_at_nmax.expect("diverging")),
            );
            if cli.trace {
                text.push('\n');
                text.push_str(trace_csv(&report).trim_end());
            }
            emit(text)
        }
    }
}

fn cmd_teich_embed(
    cli: &Cli,
    triple: Option<&str>,
    lengths: Option<&str>,
    weights: Option<&str>,
) -> Result<ExitCode, CliFailure> {
    let (kind, values) = match (triple, lengths, weights) {
        (Some(t), Some(l), None) => {
            let (t, lengths) =
                triple_with_values(t, l, |s| parse_lengths(s).map_err(|f| f.message))?;
            let point = TeichPoint::from_triple(&t, lengths).map_err(core_failure)?;
            ("hexagon", point.projective_embed().values())
        }
        (None, None, Some(w)) => {
            let foliation = parse_weights(w).map_err(usage)?;
            let embedded =
                hexatlas_core::projective_embed_foliation(&foliation).map_err(core_failure)?;
            ("foliation", embedded.values())
        }
        _ => {
            return Err(usage(
                "pass either --triple with --lengths (hexagon) or --weights (foliation)",
            ))
        }
    };
    match cli.format {
        Format::Json => emit(
            serde_json::json!({"kind": kind, "embed": values}).to_string(),
        ),
        Format::Csv => emit(format!(
            "kind,a,b,c,A,B,C\n{kind},{}",
            values.map(formats::format_f64).join(",")
        )),
        Format::Pretty => emit(format!(
            "kind: {kind}\nembed: ({})",
            values.map(formats::format_f64).join(", ")
        )),
    }
}

// ---------------------------------------------------------------------------
// pants
// ---------------------------------------------------------------------------

fn cmd_pants_double(cli: &Cli, triple: &str, lengths: &str) -> Result<ExitCode, CliFailure> {
    let (t, lengths) =
        triple_with_values(triple, lengths, |s| parse_lengths(s).map_err(|f| f.message))?;
    let point = TeichPoint::from_triple(&t, lengths).map_err(core_failure)?;
    let cuffs = point.pants_double();
    match cli.format {
        Format::Json => emit(serde_json::json!({ "cuffs": cuffs }).to_string()),
        Format::Csv => emit(format!(
            "cuff_a,cuff_b,cuff_c\n{}",
            cuffs.map(formats::format_f64).join(",")
        )),
        Format::Pretty => emit(format!(
            "cuffs: ({})",
            cuffs.map(formats::format_f64).join(", ")
        )),
    }
}

// Keep the derived command tree honest.
#[test]
fn cli_definition_is_consistent() {
    use clap::CommandFactory;
    Cli::command().debug_assert();
}
