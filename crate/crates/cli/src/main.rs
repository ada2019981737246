use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fullsupport::cartan::{CartanType, RootSystem};
use fullsupport::counting;
use fullsupport_cli::render::{self, OutputFormat};
use fullsupport_cli::{census_table, verify, MAX_RANK};

// Usage errors exit with 2 through clap.
const EXIT_DISAGREE: u8 = 1;

#[derive(Parser)]
#[command(
    name = "fullsupport",
    version,
    about = "Count roots of full support and check the product formulas that predict them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and full-support census for one type, e.g. `info E8`.
    Info {
        #[arg(value_parser = parse_type)]
        cartan_type: CartanType,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Census table over every admissible type up to a rank.
    Table {
        #[arg(long, default_value_t = MAX_RANK, value_parser = clap::value_parser!(u8).range(1..=MAX_RANK as i64))]
        max_rank: u8,
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
    },
    /// Run the verification suite; exits 0 iff every check passes.
    Verify {
        #[arg(long, default_value_t = MAX_RANK, value_parser = clap::value_parser!(u8).range(1..=MAX_RANK as i64))]
        max_rank: u8,
        /// Add oracle checks (explicit Weyl groups, intersection posets) up to rank 4.
        #[arg(long)]
        deep: bool,
    },
}

fn parse_type(s: &str) -> Result<CartanType, String> {
    s.parse::<CartanType>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Info {
            cartan_type,
            format,
        } => {
            let report = match counting::full_census(&RootSystem::from_type(cartan_type)) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {cartan_type}: {e}");
                    return ExitCode::from(EXIT_DISAGREE);
                }
            };
            match format {
                None => print!("{}", render::detail(&report)),
                Some(f) => print!("{}", render::render(std::slice::from_ref(&report), f)),
            }
            exit_for(report.agree)
        }
        Command::Table { max_rank, format } => {
            let mut reports = Vec::new();
            let mut ok = true;
            for (t, result) in census_table(usize::from(max_rank)) {
                match result {
                    Ok(r) => {
                        ok &= r.agree;
                        reports.push(r);
                    }
                    Err(e) => {
                        eprintln!("error: {t}: {e}");
                        ok = false;
                    }
                }
            }
            print!("{}", render::render(&reports, format));
            exit_for(ok)
        }
        Command::Verify { max_rank, deep } => {
            let summary = verify::run(usize::from(max_rank), deep);
            print!("{summary}");
            exit_for(summary.all_passed())
        }
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREE)
    }
}
