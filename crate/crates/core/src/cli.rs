//! The `tripack` command line.
//!
//! Exit codes: 0 ok, 1 input error, 2 invalid arrangement, 3 invalid packing,
//! 4 oracle mismatch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bench::{self, BenchConfig};
use crate::dp::{solve_unchecked, Solution, Triangle, TrianglePacking};
use crate::error::Error;
use crate::gen::{generate, GenParams, GenSpec, Model};
use crate::graph::{
    build_overlap_graph, sweep_maximal_cliques, validate_arrangement, CliqueArrangement,
    IntervalInstance,
};
use crate::oracle::{
    brute_force_max_packing_with_guard, verify_packing, PackingViolation, DEFAULT_GUARD,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_ARRANGEMENT: u8 = 2;
pub const EXIT_PACKING: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "tripack",
    version,
    about = "Maximum triangle packing in interval graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an interval file and print the packing report.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Shorthand for `--format json`.
        #[arg(long, conflicts_with = "format")]
        json: bool,
    },
    /// Write a generated interval file.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        /// Output path; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a packing file against an interval file.
    Verify { instance: PathBuf, packing: PathBuf },
    /// Compare the solver with the exhaustive oracle.
    Oracle {
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// Time the solver over a range of sizes and print a CSV table.
    Bench {
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value = "nested-cliques", value_parser = parse_model)]
        model: Model,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    /// One triangle per line, ready for `verify`.
    Packing,
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long, value_parser = parse_model)]
    pub model: Model,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub range: Option<u64>,
    #[arg(long)]
    pub length: Option<u64>,
    #[arg(long)]
    pub blocks: Option<usize>,
    #[arg(long)]
    pub shared: Option<usize>,
}

impl From<&ParamArgs> for GenParams {
    fn from(a: &ParamArgs) -> Self {
        GenParams {
            range: a.range,
            length: a.length,
            blocks: a.blocks,
            shared: a.shared,
        }
    }
}

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Machine-readable solve output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveReport {
    pub count: usize,
    pub triangles: Vec<[String; 3]>,
    pub t: usize,
    pub clique_sizes: Vec<usize>,
    pub elapsed_ms: f64,
    pub diagnostic_flags: Vec<String>,
}

impl SolveReport {
    pub fn new(
        instance: &IntervalInstance,
        arrangement: &CliqueArrangement,
        solution: &Solution,
    ) -> Self {
        SolveReport {
            count: solution.count,
            triangles: solution
                .packing
                .triangles()
                .iter()
                .map(|t| triangle_names(instance, t))
                .collect(),
            t: arrangement.len(),
            clique_sizes: arrangement.clique_sizes(),
            elapsed_ms: solution.elapsed.as_secs_f64() * 1e3,
            diagnostic_flags: solution
                .diagnostics
                .iter()
                .map(ToString::to_string)
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("count {}\nt {}\nclique_sizes", self.count, self.t);
        for s in &self.clique_sizes {
            out.push_str(&format!(" {s}"));
        }
        out.push_str(&format!("\nelapsed_ms {:.3}\n", self.elapsed_ms));
        for flag in &self.diagnostic_flags {
            out.push_str(&format!("flag {flag}\n"));
        }
        for [a, b, c] in &self.triangles {
            out.push_str(&format!("triangle {a} {b} {c}\n"));
        }
        out
    }
}

fn triangle_names(instance: &IntervalInstance, t: &Triangle) -> [String; 3] {
    t.vertices().map(|v| instance.name(v).to_string())
}

/// One `a b c` line per triangle.
pub fn packing_to_text(instance: &IntervalInstance, packing: &TrianglePacking) -> String {
    packing
        .triangles()
        .iter()
        .map(|t| triangle_names(instance, t).join(" ") + "\n")
        .collect()
}

/// A parsed packing file. Lines naming a vertex twice cannot become a
/// [`Triangle`] and are kept aside as `(line, vertex name)`.
#[derive(Debug, Clone, Default)]
pub struct ParsedPacking {
    pub packing: TrianglePacking,
    pub repeated: Vec<(usize, String)>,
}

pub fn parse_packing(instance: &IntervalInstance, text: &str) -> Result<ParsedPacking, Error> {
    let mut triangles = Vec::new();
    let mut repeated = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b, c] = fields[..] else {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("expected three vertex names, found {}", fields.len()),
            });
        };
        let lookup = |name: &str| {
            instance.vertex_by_name(name).ok_or_else(|| Error::Parse {
                line: idx + 1,
                message: format!("unknown vertex `{name}`"),
            })
        };
        let (va, vb, vc) = (lookup(a)?, lookup(b)?, lookup(c)?);
        match Triangle::new(va, vb, vc) {
            Some(t) => triangles.push(t),
            None => {
                let dup = if va == vb || va == vc { a } else { b };
                repeated.push((idx + 1, dup.to_string()));
            }
        }
    }
    Ok(ParsedPacking {
        packing: TrianglePacking::new(triangles),
        repeated,
    })
}

fn read_instance(path: &Path) -> Result<IntervalInstance, Error> {
    fs::read_to_string(path)?.parse()
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArrangement(_) => EXIT_ARRANGEMENT,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

/// Parses `args` (including the program name), runs the command writing to
/// `out`, and returns the exit code. Errors go to standard error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Solve {
            input,
            format,
            json,
        } => cmd_solve(&input, if json { Format::Json } else { format }, out),
        Command::Gen { spec, output } => cmd_gen(&spec, output.as_deref(), out),
        Command::Verify { instance, packing } => cmd_verify(&instance, &packing, out),
        Command::Oracle { instance, guard } => cmd_oracle(&instance, guard, out),
        Command::Bench {
            sizes,
            model,
            seed,
            reps,
            params,
        } => {
            let config = BenchConfig {
                sizes,
                model,
                seed,
                reps,
                params: GenParams::from(&params),
            };
            let rows = bench::run(&config)?;
            emit(out, &bench::to_csv(&rows))
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).map_err(Error::from)?;
    Ok(EXIT_OK)
}

/// Sweep, validate against the overlap graph, then solve.
pub fn solve_instance(instance: &IntervalInstance) -> Result<(CliqueArrangement, Solution), Error> {
    let arrangement = sweep_maximal_cliques(instance)?;
    let report = validate_arrangement(&build_overlap_graph(instance), &arrangement);
    if !report.is_valid() {
        return Err(Error::InvalidArrangement(report));
    }
    let solution = solve_unchecked(&arrangement);
    Ok((arrangement, solution))
}

fn cmd_solve(input: &Path, format: Format, out: &mut dyn Write) -> CmdResult {
    let instance = read_instance(input)?;
    let (arrangement, solution) = solve_instance(&instance)?;
    let report = SolveReport::new(&instance, &arrangement, &solution);
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Packing => packing_to_text(&instance, &solution.packing),
    };
    emit(out, &text)
}

fn cmd_gen(args: &SpecArgs, output: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let spec =
        GenSpec::new(args.model, args.n, args.seed).with_params(GenParams::from(&args.params));
    let instance = generate(&spec)?;
    let text = format!(
        "# model={} n={} seed={}\n{}",
        spec.model,
        spec.n,
        spec.seed,
        instance.to_text()
    );
    match output {
        Some(path) => {
            fs::write(path, text).map_err(Error::from)?;
            Ok(EXIT_OK)
        }
        None => emit(out, &text),
    }
}

fn cmd_verify(instance_path: &Path, packing_path: &Path, out: &mut dyn Write) -> CmdResult {
    let instance = read_instance(instance_path)?;
    let parsed = parse_packing(
        &instance,
        &fs::read_to_string(packing_path).map_err(Error::from)?,
    )?;
    let graph = build_overlap_graph(&instance);
    let report = verify_packing(&graph, &parsed.packing);
    let mut lines = Vec::new();
    for (line, name) in &parsed.repeated {
        lines.push(format!(
            "violation: vertex {name} repeated within the triangle on line {line}"
        ));
    }
    for v in &report.violations {
        lines.push(match v {
            PackingViolation::SharedVertex { vertex } => {
                format!(
                    "violation: vertex {} is used by more than one triangle",
                    instance.name(*vertex)
                )
            }
            PackingViolation::NotAdjacent { u, v, .. } => {
                format!(
                    "violation: {} and {} are not adjacent",
                    instance.name(*u),
                    instance.name(*v)
                )
            }
            PackingViolation::VertexOutOfRange { vertex } => {
                format!("violation: unknown vertex {vertex}")
            }
        });
    }
    if lines.is_empty() {
        emit(out, &format!("valid: {} triangles\n", parsed.packing.len()))
    } else {
        emit(out, &(lines.join("\n") + "\n"))?;
        Ok(EXIT_PACKING)
    }
}

fn cmd_oracle(path: &Path, guard: usize, out: &mut dyn Write) -> CmdResult {
    let instance = read_instance(path)?;
    let graph = build_overlap_graph(&instance);
    let oracle = brute_force_max_packing_with_guard(&graph, guard)?;
    let (_, solution) = solve_instance(&instance)?;
    let verdict = if oracle.count == solution.count {
        "MATCH"
    } else {
        "MISMATCH"
    };
    emit(
        out,
        &format!(
            "oracle {}\ndp {}\nexplored {}\n{verdict}\n",
            oracle.count, solution.count, oracle.explored
        ),
    )?;
    Ok(if oracle.count == solution.count {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
