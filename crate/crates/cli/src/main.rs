//! `ads-spin1`: spectra, radial-mode tables, and closed-form verification
//! for spin-1 spherical waves on a constant-curvature background.
//!
//! Exit codes: 0 success, 1 verification/selftest failure, 2 invalid flags.

mod classes;
mod commands;
mod error;

use clap::{Parser, Subcommand};
use commands::OutputFormat;

#[derive(Parser)]
#[command(
    name = "ads-spin1",
    version,
    about = "Spin-1 spherical waves on a constant-curvature background: \
             spectra, mode profiles, and residual verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the quantized energy of one mode.
    Spectrum {
        /// Mass-squared parameter (> 0); exact dyadics like 0.75, 2, 6
        /// give bit-exact energies.
        #[arg(long, conflicts_with = "massless")]
        mass_sq: Option<f64>,
        /// Use the massless tensor counting instead of a mass.
        #[arg(long)]
        massless: bool,
        /// Wave family: j, j_minus, or j_plus.
        #[arg(long = "type", default_value = "j")]
        wave_type: String,
        /// Radial quantum number.
        #[arg(long)]
        n: u32,
        /// Total angular momentum.
        #[arg(long)]
        j: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        /// Output scale: energies divide by this radius.
        #[arg(long, default_value_t = 1.0)]
        curvature_radius: f64,
    },
    /// Enumerate every (family, n, j) reaching each level N = 2n + nu.
    Table {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Mass used for the epsilon column; 0 gives the formal value N + 2.
        #[arg(long, default_value_t = 0.0)]
        mass_sq: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[arg(long, default_value_t = 1.0)]
        curvature_radius: f64,
    },
    /// Tabulate the radial components of one constructed mode.
    Mode {
        /// Mode class: j, j_minus, j_plus, j0, massless_j, gauge_j0,
        /// photon, five_dim_j, five_dim_j_minus, five_dim_j_plus.
        #[arg(long = "type")]
        class: String,
        #[arg(long)]
        mass_sq: Option<f64>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: Option<u32>,
        /// Log-spaced evaluation grid as min,max,points.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        /// Output scale: the r column multiplies by this radius.
        #[arg(long, default_value_t = 1.0)]
        curvature_radius: f64,
    },
    /// Build one photon mode: frequency, branch parameters, and profiles.
    Photon {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u32,
        #[arg(long, default_value_t = 0)]
        m: i32,
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[arg(long, default_value_t = 1.0)]
        curvature_radius: f64,
    },
    /// Run residual checks for one mode; JSON report to stdout, exit 1 on
    /// any residual above the tolerance.
    Verify {
        /// Compact mode string, e.g. j:2:0:1 (class:mass_sq:n:j),
        /// j0:2:1, massless_j:0:2, gauge_j0:1, photon:0:1,
        /// five_dim_j_plus:2:1:2.
        #[arg(long)]
        mode: String,
        /// "all" or a comma-separated list of equation identifiers.
        #[arg(long, default_value = "all")]
        equations: String,
        #[arg(long)]
        grid: Option<String>,
        /// Residual tolerance; ADS_SPIN1_TOL overrides the default.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Map chart coordinates onto the embedding hyperboloid.
    Embed {
        /// Static chart tuple t,r,theta,phi (repeatable).
        #[arg(long = "static")]
        static_points: Vec<String>,
        /// Conformal chart tuple x0,x1,x2,x3 (repeatable).
        #[arg(long = "conformal")]
        conformal_points: Vec<String>,
        /// Append this many seeded random static-chart points.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 17)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
    },
    /// Dump the 10x10 matrix algebra as JSON ([re, im] entries, row-major).
    DumpAlgebra,
    /// Run the full invariant suite with fixed grids; byte-identical output.
    Selftest,
}

fn dispatch(command: &Command) -> Result<(), error::CliError> {
    match command {
        Command::Spectrum { mass_sq, massless, wave_type, n, j, format, curvature_radius } => {
            commands::spectrum(*mass_sq, *massless, wave_type, *n, *j, *format, *curvature_radius)
        }
        Command::Table { n_max, mass_sq, format, curvature_radius } => {
            commands::table(*n_max, *mass_sq, *format, *curvature_radius)
        }
        Command::Mode { class, mass_sq, n, j, grid, format, curvature_radius } => {
            commands::mode(class, *mass_sq, *n, *j, grid.as_deref(), *format, *curvature_radius)
        }
        Command::Photon { n, j, m, grid, format, curvature_radius } => {
            commands::photon(*n, *j, *m, grid.as_deref(), *format, *curvature_radius)
        }
        Command::Verify { mode, equations, grid, tol } => {
            commands::verify(mode, equations, grid.as_deref(), *tol)
        }
        Command::Embed { static_points, conformal_points, count, seed, format } => {
            commands::embed(static_points, conformal_points, *count, *seed, *format)
        }
        Command::DumpAlgebra => commands::dump_algebra(),
        Command::Selftest => commands::selftest(),
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
