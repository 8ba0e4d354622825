//! Command-line surface. `run` returns the process exit code so the whole
//! tool can be driven in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use compfactor_core::builder::find_factor_capped;
use compfactor_core::extremal::{self, floor_k_half};
use compfactor_core::factor::{
    check_thm11, check_thm13, check_thm14, check_thm15, deficiency_capped, extremal_edge_threshold,
    independence_number_capped,
};
use compfactor_core::spectral::{check_thm12, laplacian_spectrum, DEFAULT_TOL};
use compfactor_core::verdict::Status;
use compfactor_core::{
    enumerate_catalog, BlockKind, ConditionVerdict, DeficiencyReport, FactorCertificate, Graph,
    Limits, Theorem, VertexSet, Witness,
};
use serde::{Deserialize, Serialize};

use crate::format::{parse_auto, parse_graph6, write_edge_list, write_graph6};
use crate::sweep::{sweep, SweepConfig, SweepReport};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_NOT_APPLICABLE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Largest catalog order the `catalog` command will enumerate.
pub const CATALOG_MAX_ORDER: usize = 16;

#[derive(Debug, Parser)]
#[command(
    name = "compfactor",
    version,
    about = "Star and tree-family component factors of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one criterion on a graph.
    Check(CheckArgs),
    /// Maximum of 2·i(G−S) − (2k+1)|S| with a maximizer.
    Deficiency(GraphArgs),
    /// Search for an explicit factor.
    Factor(GraphArgs),
    /// List the tree-family members up to an order.
    Catalog(CatalogArgs),
    /// Emit an extremal graph.
    Extremal(ExtremalArgs),
    /// Laplacian eigenvalues, descending.
    Spectrum(SpectrumArgs),
    /// Run every criterion and the factor search over a graph6 file.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Graph in graph6 form; takes precedence over --file.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File in graph6 or edge-list form.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct Caps {
    /// Order cap for the deficiency search.
    #[arg(long, default_value_t = Limits::default().deficiency)]
    pub cap_deficiency: usize,
    /// Order cap for independence-number searches.
    #[arg(long, default_value_t = Limits::default().alpha)]
    pub cap_alpha: usize,
    /// Order cap for connectivity checks.
    #[arg(long, default_value_t = Limits::default().connectivity)]
    pub cap_connectivity: usize,
    /// Order cap for the explicit factor search.
    #[arg(long, default_value_t = Limits::default().factor)]
    pub cap_factor: usize,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits {
            deficiency: self.cap_deficiency,
            alpha: self.cap_alpha,
            connectivity: self.cap_connectivity,
            factor: self.cap_factor,
        }
    }
}

fn parse_k(s: &str) -> Result<usize, String> {
    let k: usize = s.parse().map_err(|e| format!("{e}"))?;
    if k < 2 {
        return Err("k must be at least 2".into());
    }
    Ok(k)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(x.is_finite() && x > 0.0) {
        return Err("tolerance must be positive and finite".into());
    }
    Ok(x)
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    Theorem::parse(s).ok_or_else(|| "expected one of 11, 12, 13, 14, 15".into())
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[arg(short, value_parser = parse_k)]
    pub k: usize,
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[arg(long, value_parser = parse_theorem)]
    pub thm: Theorem,
    /// Connectivity parameter for the edge-count condition.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_parser = parse_tol, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub graph: GraphArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CatalogArgs {
    #[arg(short, value_parser = parse_k)]
    pub k: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=CATALOG_MAX_ORDER as u64))]
    pub max_order: u64,
    /// Write one Graphviz file per member into this directory.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ExtremalArgs {
    #[command(subcommand)]
    pub kind: ExtremalKind,
    /// Check the designed failures and the absence of a factor.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Emit the edge-list format instead of graph6.
    #[arg(long, global = true)]
    pub edges: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum ExtremalKind {
    /// Edge-count sharpness graph K_t ∨ (K_{n₁} ∪ (⌊(k+1/2)t⌋+1)K₁).
    R31 {
        #[arg(short)]
        n: usize,
        #[arg(short, value_parser = parse_k)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Degree sharpness graph K_δ ∨ (⌊(k+1/2)δ⌋+1)K₁, δ odd.
    R41 {
        #[arg(short, value_parser = parse_k)]
        k: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Independence sharpness graph K_{2+2t} ∨ ((1+t)(2k+1)+1)K₁.
    R51 {
        #[arg(short, value_parser = parse_k)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// K_s ∨ (K_{n₁} ∪ (⌊(k+1/2)s⌋+1)K₁).
    G1 {
        #[arg(short)]
        n: usize,
        #[arg(short, value_parser = parse_k)]
        k: usize,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_parser = parse_tol, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// File with one graph6 string per line.
    pub file: PathBuf,
    #[arg(short, value_parser = parse_k)]
    pub k: usize,
    #[arg(long, value_parser = parse_tol, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub caps: Caps,
}

/// Input problems (exit 3) as opposed to usage problems (exit 64).
#[derive(Debug, thiserror::Error)]
#[error("{0:#}")]
struct InputError(anyhow::Error);

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct UsageError(String);

fn input<T, E: Into<anyhow::Error>>(r: Result<T, E>) -> anyhow::Result<T> {
    r.map_err(|e| InputError(e.into()).into())
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Reads the graph named by `--graph6` or `--file`.
pub fn load_graph(src: &Source) -> anyhow::Result<Graph> {
    if let Some(s) = &src.graph6 {
        return input(parse_graph6(s).context("parsing --graph6"));
    }
    let Some(path) = &src.file else {
        return Err(usage("one of --graph6 or --file is required"));
    };
    let text = input(
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display())),
    )?;
    input(parse_auto(&text).with_context(|| format!("parsing {}", path.display())))
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.is::<UsageError>() {
                EXIT_USAGE
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match cmd {
        Command::Check(a) => cmd_check(&a, out),
        Command::Deficiency(a) => cmd_deficiency(&a, out),
        Command::Factor(a) => cmd_factor(&a, out),
        Command::Catalog(a) => cmd_catalog(&a, out),
        Command::Extremal(a) => cmd_extremal(&a, out, err),
        Command::Spectrum(a) => cmd_spectrum(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
    }
}

fn fmt_set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn fmt_list(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// Twelve significant digits in fixed notation.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.11}");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<usize>,
    pub verdict: ConditionVerdict,
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::ViolatingSet {
            set,
            isolated,
            value,
        } => {
            format!(
                "S = {}, i(G-S) = {isolated}, 2i - (2k+1)|S| = {value}",
                fmt_set(set)
            )
        }
        Witness::Eigenvalues { mu1, mu_n_minus_1 } => {
            format!(
                "mu_1 = {}, mu_(n-1) = {}",
                sig12(*mu1),
                sig12(*mu_n_minus_1)
            )
        }
        Witness::EdgeCount { edges, threshold } => {
            format!("edges = {edges}, threshold = {threshold}")
        }
        Witness::IndependentSet { vertices, degrees } => {
            format!(
                "independent set {} with degrees {}",
                fmt_list(vertices),
                fmt_list(degrees)
            )
        }
        Witness::LowDegreeIndependence {
            set_size,
            low_degree_alpha,
        } => format!(
            "required set size {set_size}, largest low-degree independent set {low_degree_alpha}"
        ),
        Witness::DegreeIndependence { min_degree, alpha } => {
            format!("min degree = {min_degree}, alpha = {alpha}")
        }
    }
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let g = load_graph(&a.graph.source)?;
    let k = a.graph.k;
    let limits = a.graph.caps.limits();
    let verdict = match a.thm {
        Theorem::T11 => input(check_thm11(&g, k, &limits))?,
        Theorem::T12 => input(check_thm12(&g, k, a.tol))?,
        Theorem::T13 => {
            let t = a.t.ok_or_else(|| usage("--t is required for --thm 13"))?;
            input(check_thm13(&g, k, t, &limits))?
        }
        Theorem::T14 => input(check_thm14(&g, k, &limits))?,
        Theorem::T15 => input(check_thm15(&g, k, &limits))?,
    };
    let code = match verdict.holds() {
        Some(true) => EXIT_HOLDS,
        Some(false) => EXIT_FAILS,
        None => EXIT_NOT_APPLICABLE,
    };
    let report = CheckReport {
        graph6: write_graph6(&g).ok(),
        n: g.order(),
        m: g.size(),
        t: (a.thm == Theorem::T13).then_some(a.t).flatten(),
        verdict,
    };
    if a.graph.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(code);
    }
    let v = &report.verdict;
    writeln!(
        out,
        "condition {} with k = {k} on n = {}, m = {}",
        v.theorem, report.n, report.m
    )?;
    match &v.status {
        Status::NotApplicable { reason } => writeln!(out, "not applicable: {reason}")?,
        Status::Evaluated { holds, witness } => {
            let conclusion = match (v.theorem.is_exact(), holds) {
                (true, true) => "holds: a factor exists",
                (true, false) => "fails: no factor exists",
                (false, true) => "holds: a factor exists",
                (false, false) => "fails: no conclusion (the condition is only sufficient)",
            };
            writeln!(out, "{conclusion}")?;
            writeln!(out, "witness: {}", witness_text(witness))?;
        }
    }
    Ok(code)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeficiencyOutput {
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub has_factor: bool,
    pub report: DeficiencyReport,
}

fn cmd_deficiency(a: &GraphArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let g = load_graph(&a.source)?;
    let report = input(deficiency_capped(&g, a.k, a.caps.limits().deficiency))?;
    let o = DeficiencyOutput {
        graph6: write_graph6(&g).ok(),
        n: g.order(),
        m: g.size(),
        has_factor: report.has_factor(),
        report,
    };
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&o)?)?;
    } else {
        writeln!(out, "deficiency {} (k = {})", o.report.value, a.k)?;
        writeln!(out, "maximizer S = {}", fmt_set(&o.report.best_set))?;
        writeln!(out, "i(G-S) = {}", o.report.isolated)?;
        let verdict = if o.has_factor {
            "factor exists"
        } else {
            "no factor"
        };
        writeln!(out, "{verdict}")?;
    }
    Ok(0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorOutput {
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub factor: Option<FactorCertificate>,
    /// The exact criterion's violating set when no factor exists.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violating: Option<DeficiencyReport>,
}

fn fmt_edges(edges: &[(usize, usize)]) -> String {
    let items: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    items.join(" ")
}

fn cmd_factor(a: &GraphArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let g = load_graph(&a.source)?;
    let limits = a.caps.limits();
    if g.order() > limits.factor {
        return input(Err(compfactor_core::Error::TooLarge {
            order: g.order(),
            cap: limits.factor,
        }));
    }
    let catalog = input(enumerate_catalog(a.k, g.order().max(1)))?;
    let factor = input(find_factor_capped(&g, a.k, &catalog, limits.factor))?;
    let violating = match factor {
        Some(_) => None,
        None => Some(input(deficiency_capped(&g, a.k, limits.deficiency))?),
    };
    let o = FactorOutput {
        graph6: write_graph6(&g).ok(),
        n: g.order(),
        m: g.size(),
        k: a.k,
        factor,
        violating,
    };
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&o)?)?;
    } else if let Some(cert) = &o.factor {
        writeln!(out, "factor with {} blocks", cert.blocks.len())?;
        for b in &cert.blocks {
            let kind = match &b.kind {
                BlockKind::Star(j) => format!("star K_1,{j}"),
                BlockKind::Member(code) => format!("tree {code}"),
            };
            writeln!(
                out,
                "{kind}: vertices {} edges {}",
                fmt_set(&b.vertices),
                fmt_edges(&b.edges)
            )?;
        }
    } else {
        writeln!(out, "NO FACTOR")?;
        if let Some(r) = &o.violating {
            writeln!(
                out,
                "violating set S = {}: i(G-S) = {}, 2i - (2k+1)|S| = {}",
                fmt_set(&r.best_set),
                r.isolated,
                r.value
            )?;
        }
    }
    Ok(if o.factor.is_some() { 0 } else { 1 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub order: usize,
    pub code: String,
    pub base_graph6: String,
    pub base_order: usize,
    pub leaves: usize,
}

fn dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in 0..g.order() {
        s.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

fn cmd_catalog(a: &CatalogArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let catalog = input(enumerate_catalog(a.k, a.max_order as usize))?;
    let mut entries = Vec::new();
    for (order, code, w) in catalog.iter() {
        entries.push(CatalogEntry {
            order,
            code: code.to_owned(),
            base_graph6: write_graph6(&w.base)?,
            base_order: w.base.order(),
            leaves: compfactor_core::tree::decode_code(code)?
                .degrees()
                .into_iter()
                .filter(|&d| d == 1)
                .count(),
        });
        if let Some(dir) = &a.dot {
            let idx = entries.iter().filter(|e| e.order == order).count();
            input(
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display())),
            )?;
            let member = compfactor_core::tree::construct_tr(w, a.k);
            let path = dir.join(format!("t{order}_{idx}.dot"));
            input(
                std::fs::write(&path, dot(&member, &format!("t{order}_{idx}")))
                    .with_context(|| format!("writing {}", path.display())),
            )?;
        }
    }
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&entries)?)?;
    } else {
        writeln!(
            out,
            "{} members for k = {} up to order {}",
            entries.len(),
            a.k,
            a.max_order
        )?;
        for e in &entries {
            writeln!(
                out,
                "order {:>2}  leaves {:>2}  base {} (order {})  code {}",
                e.order, e.leaves, e.base_graph6, e.base_order, e.code
            )?;
        }
    }
    Ok(0)
}

fn cmd_extremal(a: &ExtremalArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let built = match a.kind {
        ExtremalKind::R31 { n, k, t } => extremal::remark31(n, k, t),
        ExtremalKind::R41 { k, delta } => extremal::remark41(k, delta),
        ExtremalKind::R51 { k, t } => extremal::remark51(k, t),
        ExtremalKind::G1 { n, k, s } => extremal::g1(n, k, s),
    };
    let g = built.map_err(|e| usage(e.to_string()))?;
    if a.edges {
        write!(out, "{}", write_edge_list(&g))?;
    } else {
        let s = write_graph6(&g).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "{s}")?;
    }
    if a.verify {
        match verify_extremal(&a.kind, &g) {
            Ok(lines) => {
                for l in lines {
                    writeln!(err, "verified: {l}")?;
                }
            }
            Err(e) => {
                writeln!(err, "verification failed: {e:#}")?;
                return Ok(EXIT_FAILS);
            }
        }
    }
    Ok(0)
}

/// Checks the designed properties of an extremal graph: the relevant
/// condition fails and the designed `S` violates the exact criterion.
pub fn verify_extremal(kind: &ExtremalKind, g: &Graph) -> anyhow::Result<Vec<String>> {
    let limits = Limits::default();
    let mut notes = Vec::new();
    let (k, s) = match *kind {
        ExtremalKind::R31 { n, k, t } => {
            let threshold = extremal_edge_threshold(n, k, t)?;
            if g.size() != threshold {
                bail!("m = {} but threshold = {threshold}", g.size());
            }
            notes.push(format!("m = {} = threshold({n}, {k}, {t})", g.size()));
            let v = check_thm13(g, k, t, &limits)?;
            if v.implies_factor() {
                bail!("edge-count condition unexpectedly holds");
            }
            (k, t)
        }
        ExtremalKind::R41 { k, delta } => {
            let n = g.order();
            if (2 * k + 3) * delta != 2 * n - 1 {
                bail!(
                    "(2k+3)·delta = {} but 2n - 1 = {}",
                    (2 * k + 3) * delta,
                    2 * n - 1
                );
            }
            notes.push(format!("(2k+3)·delta = {} = 2n - 1", (2 * k + 3) * delta));
            let v = check_thm14(g, k, &limits)?;
            let leaves: Vec<usize> = (delta..n).collect();
            match v.witness() {
                Some(Witness::IndependentSet { vertices, .. })
                    if v.holds() == Some(false) && *vertices == leaves =>
                {
                    notes.push(format!(
                        "degree condition fails at independent set {}",
                        fmt_list(vertices)
                    ));
                }
                _ => bail!("degree condition did not fail at the leaf set: {v:?}"),
            }
            (k, delta)
        }
        ExtremalKind::R51 { k, t } => {
            let delta = g.min_degree()?;
            let alpha = independence_number_capped(g, limits.alpha)?;
            if delta != 2 + 2 * t
                || alpha != (1 + t) * (2 * k + 1) + 1
                || (2 * k + 1) * delta + 2 != 2 * alpha
            {
                bail!("delta = {delta}, alpha = {alpha} do not satisfy (2k+1)·delta = 2·alpha - 2");
            }
            notes.push(format!(
                "delta = {delta}, alpha = {alpha}, (2k+1)·delta = 2·alpha - 2"
            ));
            if check_thm15(g, k, &limits)?.implies_factor() {
                bail!("degree-independence condition unexpectedly holds");
            }
            (k, 2 + 2 * t)
        }
        ExtremalKind::G1 { k, s, .. } => (k, s),
    };
    let designed = VertexSet::full(s);
    let (rest, _) = g.delete_vertices(&designed);
    let i = rest.isolated_count();
    let value = 2 * i as i64 - (2 * k as i64 + 1) * s as i64;
    if i != floor_k_half(k, s) + 1 || value <= 0 {
        bail!("designed set gives i = {i}, value {value}");
    }
    notes.push(format!(
        "S = clique part: i(G-S) = {i}, 2i - (2k+1)|S| = {value} > 0"
    ));
    let report = deficiency_capped(g, k, limits.deficiency)?;
    if report.has_factor() {
        bail!("deficiency search reports a factor");
    }
    notes.push(format!(
        "deficiency = {} at S = {}",
        report.value,
        fmt_set(&report.best_set)
    ));
    Ok(notes)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumOutput {
    pub graph6: Option<String>,
    pub eigenvalues: Vec<f64>,
}

fn cmd_spectrum(a: &SpectrumArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let g = load_graph(&a.source)?;
    let spec = input(laplacian_spectrum(&g, a.tol))?;
    let values: Vec<f64> = spec
        .values
        .iter()
        .map(|&x| if x.abs() < a.tol { 0.0 } else { x })
        .collect();
    if a.json {
        let o = SpectrumOutput {
            graph6: write_graph6(&g).ok(),
            eigenvalues: values,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&o)?)?;
    } else {
        for x in values {
            writeln!(out, "{}", sig12(x))?;
        }
    }
    Ok(0)
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let text = input(
        std::fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file.display())),
    )?;
    let cfg = SweepConfig {
        k: a.k,
        tol: a.tol,
        limits: a.caps.limits(),
    };
    let report = input(sweep(&text, &cfg))?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        write_sweep_text(&report, out)?;
    }
    Ok(report.exit_code())
}

fn write_sweep_text(r: &SweepReport, out: &mut dyn Write) -> anyhow::Result<()> {
    for row in &r.rows {
        match (&row.result, &row.error) {
            (Some(res), _) => {
                let conds: Vec<String> = res
                    .verdicts
                    .iter()
                    .filter(|v| !v.theorem.is_exact())
                    .map(|v| {
                        let mark = match v.holds() {
                            Some(true) => "+",
                            Some(false) => "-",
                            None => ".",
                        };
                        format!("{}{mark}", v.theorem)
                    })
                    .collect();
                let search = match res.factor_search {
                    crate::sweep::SearchOutcome::Found => "found",
                    crate::sweep::SearchOutcome::Absent => "absent",
                    crate::sweep::SearchOutcome::Skipped => "skipped",
                };
                let flag = if res.counterexample {
                    "  COUNTEREXAMPLE"
                } else if res.disagreement {
                    "  DISAGREEMENT"
                } else {
                    ""
                };
                writeln!(
                    out,
                    "{:>6}  {}  n={} m={} deficiency={} factor={} search={} [{}]{flag}",
                    row.line,
                    row.graph6,
                    res.n,
                    res.m,
                    res.deficiency,
                    if res.has_factor { "yes" } else { "no" },
                    search,
                    conds.join(" ")
                )?;
            }
            (None, Some(e)) => writeln!(out, "{:>6}  {}  error: {e}", row.line, row.graph6)?,
            (None, None) => unreachable!("row without result or error"),
        }
    }
    let s = &r.summary;
    writeln!(
        out,
        "graphs {}  errors {}  with factor {}  counterexamples {}  disagreements {}",
        s.graphs, s.errors, s.with_factor, s.counterexamples, s.disagreements
    )?;
    for c in &s.conditions {
        writeln!(
            out,
            "condition {:<10} applicable {:>6}  holds {:>6}",
            c.condition, c.applicable, c.holds
        )?;
    }
    Ok(())
}
