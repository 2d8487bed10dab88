use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use simploc::contractibility::audit_ball_retraction;
use simploc::diagrams::{
    audit_diagram_5large, audit_hl_valences, find_minimal_diagram, gauss_bonnet_check, is_reduced, kappa_prime,
    DiagramMap, DiscDiagram, Filling,
};
use simploc::largeness::{is_k_large, is_locally_k_large};
use simploc::location::is_m_located;
use simploc::metric::{check_downward_link_propositions, check_small_ball_hypotheses, distances, NamedVerdict};
use simploc::{complex::is_flag, Complex, Cycle, Generator, Verdict, VertexId, Witness};

#[derive(Parser)]
#[command(name = "simploc", version, about = "Curvature and contractibility checks for finite flag complexes")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "SIMPLOC_THREADS")]
    threads: Option<usize>,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// Record wall-clock time per phase (makes reports nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Flag,
    KLarge,
    LocallyKLarge,
    MLocated,
    SmallBall,
    DownwardLinks,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks on a complex (a JSON file or a generator name).
    Check {
        input: String,
        #[arg(long, value_delimiter = ',', required = true)]
        checks: Vec<Check>,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, default_value_t = 7)]
        m: usize,
        /// Basepoint for downward links.
        #[arg(long, default_value_t = 0)]
        x: VertexId,
        #[arg(long, default_value_t = simploc::metric::DEFAULT_RADIUS_LIMIT)]
        radius: usize,
    },
    /// Write the canonical JSON of a named complex, e.g. `cycle:6`, `icosahedron`.
    Generate { name: String, out: Option<PathBuf> },
    /// Search for a minimal disc diagram filling a cycle.
    Fill {
        input: String,
        /// Comma-separated vertices of the boundary cycle.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<VertexId>,
        #[arg(long, default_value_t = 20)]
        max_area: usize,
        /// Write the filling as a diagram-map file.
        #[arg(long)]
        map_out: Option<PathBuf>,
    },
    /// Curvature and valence audits of a disc diagram, optionally of a map.
    AuditDiagram {
        diagram: PathBuf,
        /// Diagram-map file whose domain is the diagram.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Target complex, overriding the reference stored in the map.
        #[arg(long, requires = "map")]
        target: Option<String>,
    },
    /// Sweep the downward-link assertions around a basepoint.
    DownwardLinks {
        input: String,
        #[arg(long, default_value_t = 0)]
        x: VertexId,
        #[arg(long, default_value_t = simploc::metric::DEFAULT_RADIUS_LIMIT)]
        radius: usize,
    },
    /// Audit the retraction of span(A ∪ B_{n-1}(x)) onto B_{n-1}(x).
    RetractAudit {
        input: String,
        #[arg(long, default_value_t = 0)]
        x: VertexId,
        #[arg(long)]
        n: usize,
        /// Vertices of A; defaults to the whole sphere S_n(x).
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<VertexId>>,
    },
}

#[derive(Serialize)]
struct Phase {
    name: String,
    millis: u128,
}

#[derive(Serialize)]
struct RunReport {
    tool_version: &'static str,
    input_digest: String,
    command: Vec<String>,
    verdicts: Vec<NamedVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    artifact: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings: Option<Vec<Phase>>,
}

struct Run {
    digest: Sha256,
    verdicts: Vec<NamedVerdict>,
    artifact: Option<serde_json::Value>,
    timings: Option<Vec<Phase>>,
}

impl Run {
    fn new(timings: bool) -> Self {
        Run { digest: Sha256::new(), verdicts: Vec::new(), artifact: None, timings: timings.then(Vec::new) }
    }

    fn timed<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if let Some(t) = &mut self.timings {
            t.push(Phase { name: name.to_string(), millis: start.elapsed().as_millis() });
        }
        out
    }

    fn verdict(&mut self, name: &str, verdict: Verdict) {
        self.verdicts.push(NamedVerdict::new(name, verdict));
    }

    fn load_complex(&mut self, input: &str) -> Result<Complex> {
        let (c, text) = load(input)?;
        self.digest.update(text.as_bytes());
        Ok(c)
    }

    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        self.digest.update(text.as_bytes());
        Ok(text)
    }

    fn finish(self, command: Vec<String>) -> RunReport {
        RunReport {
            tool_version: env!("CARGO_PKG_VERSION"),
            input_digest: format!("sha256:{}", hex::encode(self.digest.finalize())),
            command,
            verdicts: self.verdicts,
            artifact: self.artifact,
            timings: self.timings,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        if n == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let command = recorded_command(std::env::args().skip(1));
    let mut run = Run::new(cli.timings);
    let ok = match cli.command {
        Command::Generate { name, out } => return generate(&name, out.as_deref()),
        Command::Check { input, checks, k, m, x, radius } => {
            let c = run.load_complex(&input)?;
            check(&mut run, &c, &checks, k, m, x, radius)?
        }
        Command::Fill { input, cycle, max_area, map_out } => {
            let c = run.load_complex(&input)?;
            let cycle = Cycle::in_complex(&c, cycle)?;
            let filling = run.timed("fill", || find_minimal_diagram(&c, &cycle, max_area))?;
            match filling {
                Filling::Found(map) => {
                    run.verdict("filling", Verdict::Pass);
                    run.verdict("reduced", is_reduced(&map));
                    let json = map.to_json(&input);
                    if let Some(p) = map_out {
                        std::fs::write(&p, &json).with_context(|| format!("writing {}", p.display()))?;
                    }
                    run.artifact = Some(serde_json::from_str(&json)?);
                }
                other => {
                    let name = match other {
                        Filling::Unfillable => "unfillable",
                        _ => "exceeds_max_area",
                    };
                    run.verdict(
                        "filling",
                        Verdict::fail(Witness::Assertion {
                            name: name.into(),
                            vertices: cycle.vertices().to_vec(),
                            detail: None,
                        }),
                    );
                }
            }
            run.verdicts.iter().all(|v| v.verdict.is_pass())
        }
        Command::AuditDiagram { diagram, map, target } => audit_diagram(&mut run, &diagram, map.as_deref(), target)?,
        Command::DownwardLinks { input, x, radius } => {
            let c = run.load_complex(&input)?;
            let report = run.timed("sweep", || check_downward_link_propositions(&c, x, radius))?;
            run.verdict("downward_links", report.verdict());
            run.artifact = Some(serde_json::to_value(&report)?);
            report.verdict().is_pass()
        }
        Command::RetractAudit { input, x, n, a } => {
            let c = run.load_complex(&input)?;
            let a = match a {
                Some(a) => a,
                None => {
                    let f = distances(&c, x)?;
                    c.vertices().filter(|&v| f.get(v) == Some(n)).collect()
                }
            };
            let report = run.timed("retraction", || audit_ball_retraction(&c, x, n, &a))?;
            let pass = report.verdict.is_pass();
            run.verdict("ball_retraction", report.verdict.clone());
            run.artifact = Some(serde_json::to_value(&report)?);
            pass
        }
    };
    let report = run.finish(command);
    let text = serde_json::to_string_pretty(&report)? + "\n";
    print!("{text}");
    if let Some(p) = &cli.json_out {
        std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(ok)
}

/// The arguments minus those that configure the run without changing its
/// outcome, so reports agree across thread counts.
fn recorded_command(args: impl Iterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip_value = false;
    for a in args {
        if std::mem::take(&mut skip_value) {
            continue;
        }
        if a == "--threads" {
            skip_value = true;
        } else if a != "--timings" && !a.starts_with("--threads=") {
            out.push(a);
        }
    }
    out
}

/// Reads a complex from a file, or builds it when `input` is not a file
/// but a generator name; also returns the text that was digested.
fn load(input: &str) -> Result<(Complex, String)> {
    let path = Path::new(input);
    if !path.exists() {
        if let Ok(g) = input.parse::<Generator>() {
            let c = g.build()?;
            let json = c.to_json();
            return Ok((c, json));
        }
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
    let c = Complex::from_json(&text).with_context(|| format!("parsing {input}"))?;
    Ok((c, text))
}

fn generate(name: &str, out: Option<&Path>) -> Result<bool> {
    let g: Generator = name.parse()?;
    let json = g.build()?.to_json() + "\n";
    match out {
        Some(p) => std::fs::write(p, json).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{json}"),
    }
    Ok(true)
}

fn check(run: &mut Run, c: &Complex, checks: &[Check], k: usize, m: usize, x: VertexId, radius: usize) -> Result<bool> {
    for &check in checks {
        let (name, verdict) = match check {
            Check::Flag => ("flag".to_string(), run.timed("flag", || is_flag(c))),
            Check::KLarge => (format!("{k}-large"), run.timed("k-large", || is_k_large(c, k))?),
            Check::LocallyKLarge => {
                (format!("locally-{k}-large"), run.timed("locally-k-large", || is_locally_k_large(c, k))?)
            }
            Check::MLocated => (format!("{m}-located"), run.timed("m-located", || is_m_located(c, m))?),
            Check::SmallBall => ("small-ball".to_string(), run.timed("small-ball", || check_small_ball_hypotheses(c))),
            Check::DownwardLinks => {
                let report = run.timed("downward-links", || check_downward_link_propositions(c, x, radius))?;
                (format!("downward-links(x={x},r={radius})"), report.verdict())
            }
        };
        run.verdict(&name, verdict);
    }
    Ok(run.verdicts.iter().all(|v| v.verdict.is_pass()))
}

fn audit_diagram(run: &mut Run, path: &Path, map: Option<&Path>, target: Option<String>) -> Result<bool> {
    let text = run.read(path)?;
    let disc = DiscDiagram::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    run.verdict("gauss_bonnet", gauss_bonnet_check(&disc));
    run.verdict("hl_valences", audit_hl_valences(&disc));
    run.verdict("diagram_5large", audit_diagram_5large(&disc));
    let report = kappa_prime(&disc, None);
    if !report.sums_hold() {
        bail!("curvature sums are {} and {}, not 6", report.sum_kappa, report.sum_kappa_prime);
    }
    if let Some(map_path) = map {
        let map_text = run.read(map_path)?;
        let base = map_path.parent().map(Path::to_path_buf).unwrap_or_default();
        let map = DiagramMap::from_json(&map_text, |stored| {
            let reference = target.unwrap_or_else(|| stored.to_string());
            let (c, text) = resolve_target(&reference, &base).map_err(|e| simploc::Error::Parse(format!("{e:#}")))?;
            run.digest.update(text.as_bytes());
            Ok(c)
        })
        .with_context(|| format!("parsing {}", map_path.display()))?;
        if map.domain().triangles() != disc.triangles() {
            return Err(anyhow!("the map's domain is not the given diagram"));
        }
        run.verdict("reduced", is_reduced(&map));
    }
    run.artifact = Some(serde_json::to_value(&report)?);
    Ok(run.verdicts.iter().all(|v| v.verdict.is_pass()))
}

/// A map's target reference is a generator name, an absolute path, or a
/// path relative to the map file.
fn resolve_target(reference: &str, base: &Path) -> Result<(Complex, String)> {
    let candidate = base.join(reference);
    if !Path::new(reference).exists() && candidate.exists() {
        return load(candidate.to_str().ok_or_else(|| anyhow!("non-UTF-8 path"))?);
    }
    load(reference)
}
