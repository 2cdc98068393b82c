//! `origami` command-line front end.
//!
//! ```text
//! origami <plot|pairwise|weighted|area|example|serve> [flags]
//! ```
//!
//! Installed or symlinked under the name `snowflake`, the binary behaves
//! identically. Exit status is 0 on success, 1 on I/O failure and 2 on
//! invalid input or usage.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::api;
use crate::data::{dataset_to_csv, embedded_example, read_dataset, write_area_report};
use crate::error::OrigamiError;
use crate::geometry::{area_calculation, resolve_aux, standardize_weights, Dataset};
use crate::render::{render_pairwise, render_single, render_weighted, OptionsPatch, RenderOptions};

#[derive(Debug, Parser)]
#[command(
    name = "origami",
    version,
    about = "Origami (snowflake) plots: radar charts whose area ignores attribute order"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Plot one object, or every object with `--object all`.
    Plot(PlotArgs),
    /// Overlay two objects on shared axes.
    Pairwise(PairwiseArgs),
    /// Overlay an object with its weighted profile.
    Weighted(WeightedArgs),
    /// Write raw and normalized areas of every object as CSV.
    Area(AreaArgs),
    /// Write the bundled SUCRA example dataset as CSV.
    Example(OutArgs),
    /// Run the JSON render service.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
struct DataArgs {
    /// CSV file with a header row and object names in the first column; `-` reads stdin.
    #[arg(long)]
    input: String,
    /// Largest value on the scale.
    #[arg(long, default_value_t = 1.0)]
    scale_max: f64,
    /// Auxiliary point radius; defaults to half the dataset minimum.
    #[arg(long)]
    aux: Option<f64>,
}

#[derive(Debug, Args)]
struct OutArgs {
    /// Output path; `-` writes to stdout.
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Object to plot, or `all` to write one SVG per object into `--out`.
    #[arg(long)]
    object: String,
    /// Output file (`-` for stdout), or a directory with `--object all`.
    #[arg(long)]
    out: Option<String>,
    #[command(flatten)]
    style: StyleArgs,
}

#[derive(Debug, Args)]
struct PairwiseArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long)]
    object1: String,
    #[arg(long)]
    object2: String,
    #[command(flatten)]
    out: OutArgs,
    #[command(flatten)]
    style: StyleArgs,
}

#[derive(Debug, Args)]
struct WeightedArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long)]
    object: String,
    /// Comma-separated positive weights summing to 1, one per attribute.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    weights: Vec<f64>,
    #[command(flatten)]
    out: OutArgs,
    #[command(flatten)]
    style: StyleArgs,
}

#[derive(Debug, Args)]
struct AreaArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args)]
struct ServeArgs {
    #[arg(long, env = "ORIGAMI_PORT", default_value_t = api::DEFAULT_PORT)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    host: IpAddr,
    /// Directory with the browser front end, served at `/`.
    #[arg(long)]
    static_dir: Option<PathBuf>,
}

/// Chart styling flags. Unset flags keep their defaults.
#[derive(Debug, Args)]
struct StyleArgs {
    /// 0 none, 1 centre labels, 2 labels around the chart, 3 both.
    #[arg(long)]
    axistype: Option<u32>,
    /// Number of grid segments.
    #[arg(long)]
    seg: Option<u32>,
    /// Point symbol: 16 filled circle, 32 none.
    #[arg(long)]
    pty: Option<u32>,
    /// Data line type: 1 solid, 2 dashed, 3 dotted.
    #[arg(long)]
    plty: Option<u32>,
    /// Data line width.
    #[arg(long)]
    plwd: Option<f64>,
    /// Hatch density in lines per inch.
    #[arg(long)]
    pdensity: Option<f64>,
    /// Hatch angle in degrees.
    #[arg(long)]
    pangle: Option<f64>,
    /// Grid line type, as for `--plty`.
    #[arg(long)]
    cglty: Option<u32>,
    /// Grid line width.
    #[arg(long)]
    cglwd: Option<f64>,
    /// Grid colour, `rgb(r,g,b[,a])` or `#RRGGBB`.
    #[arg(long = "cgl-col", alias = "cglcol")]
    cglcol: Option<String>,
    /// Axis label colour.
    #[arg(long = "axislab-col", alias = "axislabcol")]
    axislabcol: Option<String>,
    /// Chart title.
    #[arg(long)]
    title: Option<String>,
    /// Whether the centre represents zero.
    #[arg(long)]
    centerzero: Option<bool>,
    /// Attribute label size multiplier.
    #[arg(long)]
    vlcex: Option<f64>,
    /// Centre axis label size multiplier.
    #[arg(long)]
    calcex: Option<f64>,
    /// Around-chart axis label size multiplier.
    #[arg(long)]
    palcex: Option<f64>,
    /// Comma-separated centre axis labels, `seg + 1` of them.
    #[arg(long, value_delimiter = ',')]
    caxislabels: Option<Vec<String>>,
    /// Primary outline colour.
    #[arg(long, alias = "pcol1")]
    pcol: Option<String>,
    /// Primary fill colour.
    #[arg(long, alias = "pfcol1")]
    pfcol: Option<String>,
    /// Second (or weighted) outline colour.
    #[arg(long)]
    pcol2: Option<String>,
    /// Second (or weighted) fill colour.
    #[arg(long)]
    pfcol2: Option<String>,
    /// Canvas width in pixels.
    #[arg(long)]
    width: Option<u32>,
    /// Canvas height in pixels.
    #[arg(long)]
    height: Option<u32>,
}

impl StyleArgs {
    fn patch(&self) -> OptionsPatch {
        OptionsPatch {
            axistype: self.axistype,
            seg: self.seg,
            pty: self.pty,
            plty: self.plty,
            plwd: self.plwd,
            pdensity: self.pdensity,
            pangle: self.pangle,
            cglty: self.cglty,
            cglwd: self.cglwd,
            cglcol: self.cglcol.clone(),
            axislabcol: self.axislabcol.clone(),
            title: self.title.clone(),
            centerzero: self.centerzero,
            vlcex: self.vlcex,
            calcex: self.calcex,
            palcex: self.palcex,
            caxislabels: self.caxislabels.clone(),
            pcol: self.pcol.clone(),
            pfcol: self.pfcol.clone(),
            pcol2: self.pcol2.clone(),
            pfcol2: self.pfcol2.clone(),
            width: self.width,
            height: self.height,
        }
    }

    fn options(&self) -> Result<RenderOptions, CliError> {
        Ok(self.patch().apply(&RenderOptions::default())?)
    }
}

#[derive(Debug)]
enum CliError {
    Io(String, io::Error),
    Usage(String),
    Invalid(OrigamiError),
}

impl From<OrigamiError> for CliError {
    fn from(e: OrigamiError) -> Self {
        CliError::Invalid(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(..) => 1,
            CliError::Usage(_) | CliError::Invalid(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(what, e) => write!(f, "{what}: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Invalid(e) => write!(f, "{} ({})", e, e.code()),
        }
    }
}

/// Standard streams, swappable for tests.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let (mut i, mut o, mut e) = (stdin.lock(), stdout.lock(), stderr.lock());
    run_with(
        args,
        Streams {
            stdin: &mut i,
            stdout: &mut o,
            stderr: &mut e,
        },
    )
}

/// The program name shown in help: `snowflake` when invoked under that
/// name, `origami` otherwise.
pub fn program_name(argv0: Option<&OsString>) -> &'static str {
    let stem = argv0
        .and_then(|a| Path::new(a).file_stem())
        .map(|s| s.to_string_lossy().to_lowercase());
    match stem {
        Some(s) if s.starts_with("snowflake") => "snowflake",
        _ => "origami",
    }
}

pub fn run_with<I, T>(args: I, io: Streams<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let name = program_name(args.first());
    let cmd = <Cli as clap::CommandFactory>::command()
        .name(name)
        .bin_name(name);
    let cli = match cmd
        .try_get_matches_from(&args)
        .and_then(|m| <Cli as clap::FromArgMatches>::from_arg_matches(&m))
    {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { io.stderr } else { io.stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, io.stdin, io.stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(io.stderr, "{name}: error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Plot(a) => {
            let ds = load(&a.data, stdin)?;
            let opts = a.style.options()?;
            let aux = resolve_aux(&ds, a.data.aux)?;
            if a.object.trim() == "all" && ds.object_index("all").is_err() {
                let dir = PathBuf::from(a.out.as_deref().unwrap_or("."));
                if dir.as_os_str() == "-" {
                    return Err(CliError::Usage(
                        "--object all writes one file per object; --out must be a directory".into(),
                    ));
                }
                fs::create_dir_all(&dir)
                    .map_err(|e| CliError::Io(format!("creating {}", dir.display()), e))?;
                for name in ds.object_names() {
                    let svg = render_single(&ds, name, aux, &opts)?;
                    let path = dir.join(format!("{}.svg", slug(name)));
                    fs::write(&path, svg)
                        .map_err(|e| CliError::Io(format!("writing {}", path.display()), e))?;
                    log::info!("wrote {}", path.display());
                }
                Ok(())
            } else {
                let svg = render_single(&ds, &a.object, aux, &opts)?;
                emit(a.out.as_deref().unwrap_or("-"), &svg, stdout)
            }
        }
        Command::Pairwise(a) => {
            let ds = load(&a.data, stdin)?;
            let opts = a.style.options()?;
            let aux = resolve_aux(&ds, a.data.aux)?;
            let svg = render_pairwise(&ds, &a.object1, &a.object2, aux, &opts)?;
            emit(&a.out.out, &svg, stdout)
        }
        Command::Weighted(a) => {
            let ds = load(&a.data, stdin)?;
            let wv = standardize_weights(&a.weights, ds.n_attributes())?;
            let opts = a.style.options()?;
            let aux = resolve_aux(&ds, a.data.aux)?;
            let svg = render_weighted(&ds, &a.object, &wv, aux, &opts)?;
            emit(&a.out.out, &svg, stdout)
        }
        Command::Area(a) => {
            let ds = load(&a.data, stdin)?;
            let aux = resolve_aux(&ds, a.data.aux)?;
            let report = area_calculation(&ds, aux)?;
            emit(&a.out.out, &write_area_report(&report), stdout)
        }
        Command::Example(a) => emit(&a.out, &dataset_to_csv(&embedded_example()), stdout),
        Command::Serve(a) => {
            let addr = SocketAddr::new(a.host, a.port);
            let runtime = tokio::runtime::Runtime::new()
                .map_err(|e| CliError::Io("starting runtime".into(), e))?;
            runtime
                .block_on(api::serve(addr, a.static_dir))
                .map_err(|e| CliError::Io(format!("serving on {addr}"), e))
        }
    }
}

fn load(args: &DataArgs, stdin: &mut dyn Read) -> Result<Dataset, CliError> {
    let mut text = String::new();
    if args.input == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io("reading stdin".into(), e))?;
    } else {
        text = fs::read_to_string(&args.input)
            .map_err(|e| CliError::Io(format!("reading {}", args.input), e))?;
    }
    Ok(read_dataset(&text, args.scale_max)?)
}

fn emit(out: &str, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    if out == "-" {
        stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| CliError::Io("writing stdout".into(), e))
    } else {
        fs::write(out, text).map_err(|e| CliError::Io(format!("writing {out}"), e))
    }
}

/// File-name friendly form of an object name.
pub fn slug(name: &str) -> String {
    let mut out = String::with_capacity(name.len());
    for c in name.chars() {
        if c.is_alphanumeric() {
            out.extend(c.to_lowercase());
        } else if !out.ends_with('-') && !out.is_empty() {
            out.push('-');
        }
    }
    while out.ends_with('-') {
        out.pop();
    }
    if out.is_empty() {
        out.push_str("object");
    }
    out
}
