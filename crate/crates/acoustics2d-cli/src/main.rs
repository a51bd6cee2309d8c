//! Command-line front end for the experiment harness.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use acoustics2d::{
    spectral_radius, stationarity_determinant, AcousticConfig, BoundaryKind, SchemeKind,
};
use acoustics2d_cli::experiment::{parse_boundary, parse_scheme, scheme_slug};
use acoustics2d_cli::{
    load_config, run_experiment, ExperimentConfig, ExperimentKind, RunSummary,
};

/// 2D linear-acoustics laboratory: batch experiments, stability scans and
/// stationarity tables for a multidimensional Godunov scheme and its
/// dimensionally split counterpart.
#[derive(Parser)]
#[command(name = "acoustics2d-cli", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Overrides shared by the experiment subcommands. Every config-file key
/// has a flag of the same name; unset flags keep the config or preset
/// value.
#[derive(Args, Debug, Default)]
struct Overrides {
    /// Scheme: multidim or split.
    #[arg(long, value_parser = parse_scheme)]
    scheme: Option<SchemeKind>,
    /// Square grid: set both nx and ny.
    #[arg(long)]
    n: Option<usize>,
    /// Cells in x.
    #[arg(long)]
    nx: Option<usize>,
    /// Cells in y.
    #[arg(long)]
    ny: Option<usize>,
    /// Left domain edge.
    #[arg(long)]
    x0: Option<f64>,
    /// Right domain edge.
    #[arg(long)]
    x1: Option<f64>,
    /// Bottom domain edge.
    #[arg(long)]
    y0: Option<f64>,
    /// Top domain edge.
    #[arg(long)]
    y1: Option<f64>,
    /// Courant number.
    #[arg(long)]
    cfl: Option<f64>,
    /// Wave-speed parameter ε (effective speed is c/ε).
    #[arg(long, alias = "eps")]
    epsilon: Option<f64>,
    /// Sound speed c.
    #[arg(long)]
    c: Option<f64>,
    /// End time.
    #[arg(long = "tend", alias = "t-end")]
    t_end: Option<f64>,
    /// Boundary: zero_gradient or periodic.
    #[arg(long, value_parser = parse_boundary)]
    boundary: Option<BoundaryKind>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Vortex core radius r0.
    #[arg(long)]
    vortex_radius: Option<f64>,
    /// Plane-wave mode count in x.
    #[arg(long)]
    mode_mx: Option<i64>,
    /// Plane-wave mode count in y.
    #[arg(long)]
    mode_my: Option<i64>,
    /// Polar quadrature order for reference solutions.
    #[arg(long)]
    quad_polar: Option<usize>,
    /// Radial quadrature order for reference solutions.
    #[arg(long)]
    quad_radial: Option<usize>,
    /// Evaluate reference solutions where available.
    #[arg(long)]
    reference: Option<bool>,
    /// Also write a legacy structured-points dump.
    #[arg(long)]
    vtk: Option<bool>,
}

impl Overrides {
    fn apply(&self, cfg: &mut ExperimentConfig) {
        macro_rules! set {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field.clone() { cfg.$field = v; })*
            };
        }
        if let Some(n) = self.n {
            cfg.nx = n;
            cfg.ny = n;
        }
        set!(scheme, nx, ny, x0, x1, y0, y1, cfl, epsilon, c, t_end, boundary, out);
        set!(vortex_radius, mode_mx, mode_my, quad_polar, quad_radial, reference, vtk);
    }
}

/// Parameters of the symbol-analysis subcommands. The symbol depends on
/// the Courant ratios only, and square cells make both equal to `cfl`.
#[derive(Args, Debug)]
struct SymbolArgs {
    /// Scheme: multidim or split.
    #[arg(long, value_parser = parse_scheme, default_value = "multidim")]
    scheme: SchemeKind,
    /// Courant number (both ratios on the square-cell convention).
    #[arg(long, default_value_t = 0.5)]
    cfl: f64,
    /// Wave-speed parameter ε (tabulated for completeness; the symbol is
    /// independent of it).
    #[arg(long, alias = "eps", default_value_t = 1.0)]
    epsilon: f64,
    /// Sound speed c.
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    /// Samples per frequency axis over [−π, π).
    #[arg(long, default_value_t = 128)]
    n: usize,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

impl SymbolArgs {
    fn config(&self) -> Result<AcousticConfig, acoustics2d::Error> {
        AcousticConfig::new(self.c, self.epsilon, 1.0, 1.0, self.cfl, true)
    }

    fn thetas(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| -std::f64::consts::PI + std::f64::consts::TAU * i as f64 / self.n as f64)
            .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a config file.
    Run {
        /// Config file (flat `key = value` with optional `[section]` headers).
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Corner dam-break preset (101×101 on [−1, 1]², CFL 0.99, t_end 0.25).
    Riemann {
        /// Use the sign-checkerboard variant instead of the corner data.
        #[arg(long)]
        sign_xy: bool,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Stationary-vortex preset (51×51 on [−0.5, 0.5]², ε = 0.01, t_end 1).
    Vortex {
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Tabulate the amplification spectral radius over frequency space.
    Stability {
        #[command(flatten)]
        args: SymbolArgs,
    },
    /// Tabulate det(G − I) over frequency space: a nonzero value at a
    /// frequency means the scheme holds no stationary mode there.
    Stationarity {
        #[command(flatten)]
        args: SymbolArgs,
    },
}

fn print_run(s: &RunSummary) {
    println!(
        "{} ({}): {} steps to t = {:.6}, wall {:.3}s",
        s.config.experiment,
        scheme_slug(s.config.scheme),
        s.steps,
        s.t_final,
        s.wall_seconds
    );
    println!("artifacts in {}", s.out_dir.display());
}

fn write_table(
    path: &PathBuf,
    header: &str,
    rows: impl Iterator<Item = String>,
) -> acoustics2d_cli::Result<()> {
    use std::io::Write;
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir).map_err(|e| acoustics2d_cli::Error::Io {
                path: dir.into(),
                source: e,
            })?;
        }
    }
    let file = std::fs::File::create(path).map_err(|e| acoustics2d_cli::Error::Io {
        path: path.clone(),
        source: e,
    })?;
    let mut w = std::io::BufWriter::new(file);
    let io = |e| acoustics2d_cli::Error::Io {
        path: path.clone(),
        source: e,
    };
    writeln!(w, "{header}").map_err(io)?;
    for row in rows {
        writeln!(w, "{row}").map_err(io)?;
    }
    w.flush().map_err(io)
}

fn main_inner() -> acoustics2d_cli::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { config, overrides } => {
            let mut cfg = load_config(&config)?;
            overrides.apply(&mut cfg);
            print_run(&run_experiment(&cfg)?);
        }
        Command::Riemann { sign_xy, overrides } => {
            let kind = if sign_xy {
                ExperimentKind::RiemannSignXY
            } else {
                ExperimentKind::RiemannCorner
            };
            let mut cfg = ExperimentConfig::preset(kind);
            overrides.apply(&mut cfg);
            print_run(&run_experiment(&cfg)?);
        }
        Command::Vortex { overrides } => {
            let mut cfg = ExperimentConfig::preset(ExperimentKind::Vortex);
            overrides.apply(&mut cfg);
            print_run(&run_experiment(&cfg)?);
        }
        Command::Stability { args } => {
            let cfg = args.config()?;
            let thetas = args.thetas();
            let mut max_rho = f64::NEG_INFINITY;
            let mut argmax = (0.0, 0.0);
            let mut rows = Vec::with_capacity(args.n * args.n);
            for &ty in &thetas {
                for &tx in &thetas {
                    let rho = spectral_radius(&acoustics2d::symbol(args.scheme, cfg, tx, ty));
                    if rho > max_rho {
                        max_rho = rho;
                        argmax = (tx, ty);
                    }
                    rows.push(format!("{tx:.16e},{ty:.16e},{rho:.16e}"));
                }
            }
            write_table(&args.out, "theta_x,theta_y,rho", rows.into_iter())?;
            println!(
                "{} at cfl {}: max rho = {:.12} at theta = ({:.6}, {:.6}); table in {}",
                scheme_slug(args.scheme),
                args.cfl,
                max_rho,
                argmax.0,
                argmax.1,
                args.out.display()
            );
        }
        Command::Stationarity { args } => {
            let cfg = args.config()?;
            let thetas = args.thetas();
            let mut max_abs = f64::NEG_INFINITY;
            let mut rows = Vec::with_capacity(args.n * args.n);
            for &ty in &thetas {
                for &tx in &thetas {
                    let det = stationarity_determinant(args.scheme, cfg, tx, ty);
                    let a = det.norm();
                    max_abs = max_abs.max(a);
                    rows.push(format!(
                        "{tx:.16e},{ty:.16e},{:.16e},{:.16e},{a:.16e}",
                        det.re, det.im
                    ));
                }
            }
            write_table(&args.out, "theta_x,theta_y,det_re,det_im,det_abs", rows.into_iter())?;
            println!(
                "{} at cfl {}: |det(G - I)| up to {:.6e}; table in {}",
                scheme_slug(args.scheme),
                args.cfl,
                max_abs,
                args.out.display()
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match main_inner() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
