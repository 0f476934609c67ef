//! `pxk`: groups of projectivities, balancedness and polytope colorings from
//! the command line.
//!
//! Exit status is 0 on success, 1 on bad input and 2 when two computations
//! that must agree do not.

mod input;
mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pxk::coloring::{chromatic_number, is_balanced, one_skeleton, BalanceMethod, Coloring, EXACT_LIMIT};
use pxk::projectivity::{projectivity, verify_generation, FacetPath, GenerationCheck};
use pxk::{io, Error, SimplePolytope, SimplicialComplex, Vertex};

use input::{Input, Object, Options};
use report::{AnalysisReport, SCHEMA_VERSION};

pub enum Failure {
    Usage(String),
    Pxk(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Pxk(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Pxk(Error::TheoremViolation(_)) => 2,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Pxk(e) => e.to_string(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "pxk", version, about = "Groups of projectivities of simplicial complexes and simple polytopes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Allow the 600-cell and 120-cell builders.
    #[arg(long, global = true)]
    slow: bool,
    /// Analyse up to N inputs at once.
    #[arg(long, value_name = "N", default_value_t = 1, global = true)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report on complexes: connectivity, parity census, groups, balancedness.
    ///
    /// Each input is a file, `-` for stdin, or a builder reference such as
    /// `anti_torus_A` or `simplex_boundary:3`. Polytope inputs get the
    /// polytope report.
    Analyze {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Base facet as its vertices, e.g. "1 2 4". Defaults to the least facet.
        #[arg(long)]
        base: Option<String>,
    },
    /// Report on simple polytopes, including the dual complex and coloring invariants.
    Polytope {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Base vertex label. Defaults to the least vertex.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Balancedness and chromatic numbers.
    Color {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Join of two complexes, with the vertices of the second renamed on clashes.
    Join {
        left: String,
        right: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Barycentric subdivision.
    Sd {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Writes a built-in complex or polytope.
    ///
    /// Complexes use the line format, or JSON with `--format json`;
    /// polytopes are always JSON. `PXK_SEED` overrides the seed of
    /// `random_pure`.
    Gen {
        /// Builder name; `list` prints the catalogue.
        name: String,
        params: Vec<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Projectivity along a facet path.
    ///
    /// PATH is a JSON array of facets, inline or in a file. With `--loops`,
    /// also checks whether those loops and the odd-face loops generate the
    /// whole group at the start facet of PATH.
    Path {
        input: String,
        path: String,
        #[arg(long)]
        loops: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("pxk: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn options(cli: &Cli) -> Result<Options, Failure> {
    Ok(Options { slow: cli.slow, seed: input::seed_from_env()? })
}

fn run(cli: Cli) -> Result<String, Failure> {
    let opts = options(&cli)?;
    let format = cli.format;
    match &cli.command {
        Command::Analyze { inputs, base } => {
            batch(inputs, cli.jobs, format, |arg| analyze_input(input::load(arg, &opts)?, base.as_deref(), None))
        }
        Command::Polytope { inputs, vertex } => batch(inputs, cli.jobs, format, |arg| {
            let inp = input::load(arg, &opts)?;
            if matches!(inp.object, Object::Complex(_)) {
                return Err(Failure::Usage(format!("{arg}: not a polytope")));
            }
            analyze_input(inp, None, vertex.as_deref())
        }),
        Command::Color { inputs } => batch(inputs, cli.jobs, format, |arg| color(arg, &opts)),
        Command::Join { left, right, output } => {
            let l = complex_of(input::load(left, &opts)?)?;
            let r = complex_of(input::load(right, &opts)?)?;
            emit_complex(&l.join(&r).complex, format, output.as_ref())
        }
        Command::Sd { input, output } => {
            let c = complex_of(input::load(input, &opts)?)?;
            emit_complex(&c.barycentric_subdivision().complex, format, output.as_ref())
        }
        Command::Gen { name, params, output } => {
            if name == "list" {
                let mut out = String::new();
                for (n, p) in pxk::builders::BUILDERS {
                    let _ = writeln!(out, "{n} {p}");
                }
                return Ok(out.replace(" \n", "\n"));
            }
            let spec = input::builder_spec(name, params.clone(), &opts)?;
            match input::build(&spec)? {
                Object::Complex(c) => emit_complex(&c, format, output.as_ref()),
                Object::Polytope(p) => write_or_return(io::polytope_to_json(&p), output.as_ref()),
            }
        }
        Command::Path { input, path, loops } => path_command(input, path, loops.as_deref(), &opts, format),
    }
}

/// Runs `f` on each input with up to `jobs` threads. Outputs keep input
/// order; several JSON reports form an array.
fn batch<F>(inputs: &[String], jobs: usize, format: Format, f: F) -> Result<String, Failure>
where
    F: Fn(&str) -> Result<Rendered, Failure> + Sync,
{
    let jobs = jobs.max(1);
    let mut results: Vec<Option<Result<Rendered, Failure>>> = (0..inputs.len()).map(|_| None).collect();
    for (chunk_inputs, chunk_results) in inputs.chunks(jobs).zip(results.chunks_mut(jobs)) {
        std::thread::scope(|s| {
            let handles: Vec<_> = chunk_inputs.iter().map(|arg| s.spawn(|| f(arg))).collect();
            for (slot, h) in chunk_results.iter_mut().zip(handles) {
                *slot = Some(h.join().unwrap_or_else(|_| Err(Failure::Usage("analysis thread panicked".into()))));
            }
        });
    }
    let results: Vec<Result<Rendered, Failure>> = results.into_iter().map(Option::unwrap).collect();
    if inputs.len() == 1 {
        let r = results.into_iter().next().unwrap()?;
        return Ok(match format {
            Format::Json => r.json,
            Format::Text => r.text,
        });
    }
    let mut worst: Option<Failure> = None;
    let mut ok = Vec::new();
    for (arg, r) in inputs.iter().zip(results) {
        match r {
            Ok(r) => ok.push(r),
            Err(f) => {
                eprintln!("pxk: {arg}: {}", f.message());
                if worst.as_ref().is_none_or(|w| f.code() > w.code()) {
                    worst = Some(f);
                }
            }
        }
    }
    if let Some(w) = worst {
        return Err(Failure::Usage(format!("{} of {} inputs failed", inputs.len() - ok.len(), inputs.len()))
            .with_code(w.code()));
    }
    Ok(match format {
        Format::Json => {
            let items: Vec<&str> = ok.iter().map(|r| r.json.trim_end()).collect();
            format!("[\n{}\n]\n", items.join(",\n"))
        }
        Format::Text => ok.iter().map(|r| r.text.as_str()).collect::<Vec<_>>().join("\n"),
    })
}

impl Failure {
    /// Keeps the exit status of the worst failure in a batch.
    fn with_code(self, code: u8) -> Failure {
        if code == 2 {
            Failure::Pxk(Error::TheoremViolation(self.message()))
        } else {
            self
        }
    }
}

struct Rendered {
    text: String,
    json: String,
}

fn complex_of(inp: Input) -> Result<SimplicialComplex, Failure> {
    match inp.object {
        Object::Complex(c) => Ok(c),
        Object::Polytope(_) => Err(Failure::Usage(format!("{}: expected a complex, got a polytope", inp.source))),
    }
}

fn vertex_of(p: &SimplePolytope, label: Option<&str>) -> Result<usize, Failure> {
    match label {
        None => Ok(0),
        Some(s) => {
            let v = Vertex::parse(s)?;
            p.vertex_index(&v).ok_or(Failure::Pxk(Error::UnknownVertex(v)))
        }
    }
}

fn analyze_input(inp: Input, base: Option<&str>, vertex: Option<&str>) -> Result<Rendered, Failure> {
    let (kind, complex, polytope) = match &inp.object {
        Object::Complex(c) => {
            if vertex.is_some() {
                return Err(Failure::Usage("--vertex needs a polytope input".into()));
            }
            let b = match base {
                Some(s) => report::parse_facet(c, s)?,
                None => 0,
            };
            ("complex", report::complex_report(c, b)?, None)
        }
        Object::Polytope(p) => {
            if base.is_some() {
                return Err(Failure::Usage("--base needs a complex input; use --vertex for polytopes".into()));
            }
            let (c, pr) = report::polytope_report(p, vertex_of(p, vertex)?)?;
            ("polytope", c, Some(pr))
        }
    };
    let r = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        source: inp.source,
        digest: inp.digest,
        kind,
        complex,
        polytope,
    };
    Ok(Rendered { text: r.to_text(), json: r.to_json() })
}

#[derive(Serialize)]
struct ColorReport {
    schema_version: &'static str,
    source: String,
    digest: String,
    /// For polytopes, the complex is the dual.
    kind: &'static str,
    balanced: bool,
    method: BalanceMethod,
    coloring: Option<Coloring>,
    skeleton_chromatic_number: usize,
    skeleton_chromatic_exact: bool,
    facet_coloring: Option<FacetColoring>,
}

#[derive(Serialize)]
struct FacetColoring {
    gamma: usize,
    exact: bool,
    colors: Vec<(Vertex, usize)>,
}

fn color(arg: &str, opts: &Options) -> Result<Rendered, Failure> {
    let inp = input::load(arg, opts)?;
    let (kind, complex, facets) = match &inp.object {
        Object::Complex(c) => ("complex", c.clone(), None),
        Object::Polytope(p) => {
            let g = p.gamma()?;
            let colors = p.facets().iter().cloned().zip(g.coloring.iter().copied()).collect();
            ("polytope", p.dual().complex, Some(FacetColoring { gamma: g.colors, exact: g.exact, colors }))
        }
    };
    let balance = is_balanced(&complex);
    if let Some(c) = &balance.coloring {
        if !c.is_proper(&complex) {
            return Err(Failure::Pxk(Error::TheoremViolation("balancedness witness is not proper".into())));
        }
    }
    let skeleton = one_skeleton(&complex);
    let cap = complex.num_vertices().max(1);
    let chi = chromatic_number(&skeleton, cap)?;
    let d1 = usize::try_from(complex.dim() + 1).unwrap_or(0);
    if chi.exact && (chi.colors == d1) != balance.balanced && complex.is_pure() {
        return Err(Failure::Pxk(Error::TheoremViolation(format!(
            "balanced = {} but the 1-skeleton needs {} colors",
            balance.balanced, chi.colors
        ))));
    }
    let r = ColorReport {
        schema_version: SCHEMA_VERSION,
        source: inp.source,
        digest: inp.digest,
        kind,
        balanced: balance.balanced,
        method: balance.method,
        coloring: balance.coloring,
        skeleton_chromatic_number: chi.colors,
        skeleton_chromatic_exact: chi.exact,
        facet_coloring: facets,
    };
    let mut text = String::new();
    let subject = if kind == "polytope" { "dual complex" } else { "complex" };
    let _ = writeln!(text, "{subject}: {}", if r.balanced { "balanced" } else { "not balanced" });
    if let Some(c) = &r.coloring {
        let pairs: Vec<String> = c.as_map().iter().map(|(v, k)| format!("{v}:{k}")).collect();
        let _ = writeln!(text, "  coloring: {}", pairs.join(" "));
    }
    let bound = if r.skeleton_chromatic_exact { "" } else { " (upper bound)" };
    let _ = writeln!(text, "1-skeleton chromatic number: {}{bound}", r.skeleton_chromatic_number);
    if complex.num_vertices() > EXACT_LIMIT {
        let _ = writeln!(text, "note: more than {EXACT_LIMIT} vertices; chromatic number from greedy coloring");
    }
    if let Some(f) = &r.facet_coloring {
        let bound = if f.exact { "" } else { " (upper bound)" };
        let _ = writeln!(text, "gamma: {}{bound}", f.gamma);
        let pairs: Vec<String> = f.colors.iter().map(|(v, k)| format!("{v}:{k}")).collect();
        let _ = writeln!(text, "  facet coloring: {}", pairs.join(" "));
    }
    let json = serde_json::to_string_pretty(&r).expect("report serializes") + "\n";
    Ok(Rendered { text, json })
}

fn emit_complex(c: &SimplicialComplex, format: Format, output: Option<&PathBuf>) -> Result<String, Failure> {
    let body = match format {
        Format::Text => io::complex_to_lines(c),
        Format::Json => io::complex_to_json(c),
    };
    write_or_return(body, output)
}

fn write_or_return(body: String, output: Option<&PathBuf>) -> Result<String, Failure> {
    match output {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(body),
    }
}

#[derive(Serialize)]
struct PathReport {
    schema_version: &'static str,
    source: String,
    digest: String,
    path: Vec<pxk::Simplex>,
    closed: bool,
    /// Each vertex of the first facet with its image in the last.
    map: Vec<(Vertex, Vertex)>,
    /// Cycle notation on the first facet, for closed paths.
    permutation: Option<String>,
    generation: Option<GenerationCheck>,
}

fn path_command(arg: &str, path: &str, loops: Option<&str>, opts: &Options, format: Format) -> Result<String, Failure> {
    let inp = input::load(arg, opts)?;
    let source = inp.source.clone();
    let digest = inp.digest.clone();
    let complex = match inp.object {
        Object::Complex(c) => c,
        Object::Polytope(p) => p.dual().complex,
    };
    let simplices = io::parse_facet_path(&input::json_argument(path)?)?;
    let fp = FacetPath::from_simplices(&complex, &simplices)?;
    let proj = projectivity(&complex, &fp)?;
    let ground = complex.facet(fp.start())?.vertices().to_vec();
    let permutation = proj.to_permutation().map(|p| p.to_cycle_string(&ground));
    let generation = match loops {
        Some(l) => {
            let paths = io::parse_facet_paths(&input::json_argument(l)?)?
                .iter()
                .map(|s| FacetPath::from_simplices(&complex, s))
                .collect::<Result<Vec<_>, _>>()?;
            Some(verify_generation(&complex, fp.start(), &paths)?)
        }
        None => None,
    };
    let r = PathReport {
        schema_version: SCHEMA_VERSION,
        source,
        digest,
        closed: fp.is_closed(),
        map: proj.pairs(&complex),
        path: simplices,
        permutation,
        generation,
    };
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            let pairs: Vec<String> = r.map.iter().map(|(a, b)| format!("{a}->{b}")).collect();
            let _ = writeln!(out, "projectivity: {}", pairs.join(" "));
            if let Some(p) = &r.permutation {
                let _ = writeln!(out, "closed loop: {p}");
            }
            if let Some(g) = &r.generation {
                let _ = writeln!(out, "loops: {}", g.loop_projectivities.join(" "));
                let _ = writeln!(
                    out,
                    "generate with the odd-face subgroup: {} (order {} of {})",
                    g.holds, g.generated_order, g.pi_order
                );
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::Usage("x".into()).code(), 1);
        assert_eq!(Failure::Pxk(Error::NotPure).code(), 1);
        assert_eq!(Failure::Pxk(Error::TheoremViolation("x".into())).code(), 2);
        assert_eq!(Failure::Usage("x".into()).with_code(2).code(), 2);
    }
}
