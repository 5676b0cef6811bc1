use clap::{Args, Parser, Subcommand};
use ddpb_cli::*;
use ddpb_core::par::{init_pool, Execution};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ddpb", version, about = "Nonlinear Poisson-Boltzmann solvation energies by domain decomposition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Inputs {
    /// Molecule in PQR format.
    #[arg(long)]
    pqr: PathBuf,
    /// Flat key = value configuration; defaults apply when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve once and print a JSON report.
    Solve(Inputs),
    /// Solve once per value of a config key and print CSV.
    Sweep {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        vary: String,
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<String>,
    },
    /// NPB and LPB reaction potentials of a one-atom molecule along a ray.
    Compare {
        #[command(flatten)]
        inputs: Inputs,
        /// Sampling radii in the configured length unit.
        #[arg(long, value_delimiter = ',')]
        radii: Option<Vec<f64>>,
    },
    /// Energies of a two-atom molecule with the second atom rotated about the first.
    Rotate {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = 21)]
        n_angles: usize,
        /// Coordinate plane of the rotation: xy, yz or xz.
        #[arg(long, default_value = "xy")]
        plane: String,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("ddpb: {msg}");
    ExitCode::from(EXIT_USAGE as u8)
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn run(cli: Cli) -> ExitCode {
    let exec = Execution::default();
    let load = |i: &Inputs| load_inputs(&i.pqr, i.config.as_deref());
    match cli.command {
        Command::Solve(inputs) => {
            let (cfg, atoms) = match load(&inputs) {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            let (report, status) = match solve(&cfg, &atoms, exec) {
                Ok(o) => (solve_report(&cfg, &atoms, &o), exit_code(o.status())),
                Err(e) => (error_report(Some(&cfg), &e), error_exit_code(&e)),
            };
            let text = serde_json::to_string_pretty(&report).unwrap_or_default() + "\n";
            if let Err(e) = emit(&inputs.out, &text) {
                return usage(e);
            }
            code(status)
        }
        Command::Sweep { inputs, vary, values } => {
            let (cfg, atoms) = match load(&inputs) {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            let rows = match sweep(&cfg, &atoms, &vary, &values, exec) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            if let Err(e) = emit(&inputs.out, &sweep_csv(&cfg, &vary, &rows)) {
                return usage(e);
            }
            code(exit_code(worst_status(rows.iter().map(SweepRow::status))))
        }
        Command::Compare { inputs, radii } => {
            let (cfg, atoms) = match load(&inputs) {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            let radii = radii.unwrap_or_else(|| default_radii(&cfg, &atoms[0]));
            match compare(&cfg, &atoms, &radii, exec) {
                Ok(gaps) => match emit(&inputs.out, &compare_csv(&cfg, &gaps)) {
                    Ok(()) => code(EXIT_CONVERGED),
                    Err(e) => usage(e),
                },
                Err(e) => {
                    eprintln!("ddpb: {e}");
                    code(error_exit_code(&e))
                }
            }
        }
        Command::Rotate { inputs, n_angles, plane } => {
            let Some(plane) = Plane::parse(&plane) else {
                return usage(format!("plane must be xy|yz|xz, got {plane:?}"));
            };
            let (cfg, atoms) = match load(&inputs) {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            let rows = match rotate(&cfg, &atoms, n_angles, plane, exec) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            if let Err(e) = emit(&inputs.out, &rotate_csv(&cfg, plane, &rows)) {
                return usage(e);
            }
            code(exit_code(worst_status(rows.iter().map(|(_, r)| r.status()))))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { code(EXIT_USAGE) } else { code(EXIT_CONVERGED) };
        }
    };
    if let Ok(v) = std::env::var("DDPB_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => {
                if let Err(e) = init_pool(n) {
                    return usage(format!("DDPB_THREADS: {e}"));
                }
            }
            _ => return usage(format!("DDPB_THREADS must be an integer >= 1, got {v:?}")),
        }
    }
    run(cli)
}
