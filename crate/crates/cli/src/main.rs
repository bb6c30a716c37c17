use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use ospq::verify::{self, CheckReport, Config, Status, Suite};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Classical,
    RMatrix,
    Ybe,
    Rtt,
    Orthogonality,
    Hopf,
    BorelRll,
    BorelAnsatz,
    BorelCoproduct,
    All,
}

impl Command {
    fn suites(self) -> Vec<Suite> {
        match self {
            Command::Classical => vec![Suite::Classical],
            Command::RMatrix => vec![Suite::RMatrix],
            Command::Ybe => vec![Suite::Ybe],
            Command::Rtt => vec![Suite::Rtt],
            Command::Orthogonality => vec![Suite::Orthogonality],
            Command::Hopf => vec![Suite::Hopf],
            Command::BorelRll => vec![Suite::BorelRll],
            Command::BorelAnsatz => vec![Suite::BorelAnsatz],
            Command::BorelCoproduct => vec![Suite::BorelCoproduct],
            Command::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact verification of the quantum supergroup, its R-matrix and the dual Borel algebra.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Truncation order on the weight of Borel series.
    #[arg(long, default_value_t = ospq::borel::DEFAULT_TRUNCATION, value_parser = clap::value_parser!(u32).range(4..=64))]
    truncation: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the rational values of p used in accelerated span passes.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory receiving text artifacts.
    #[arg(long)]
    export: Option<PathBuf>,
}

fn print_text(reports: &[CheckReport]) {
    for r in reports {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        println!("{tag} {} ({} ms) {}", r.name, r.elapsed_ms, r.details);
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    println!("{} checks, {} failed", reports.len(), failed);
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let config = Config::new(args.truncation, args.seed);
    let suites = args.command.suites();
    if let Some(dir) = &args.export {
        match verify::export(&suites, dir, &config) {
            Ok(paths) => eprintln!("wrote {} files to {}", paths.len(), dir.display()),
            Err(e) => {
                eprintln!("export failed: {e}");
                return ExitCode::from(2);
            }
        }
    }
    let reports = verify::run(&suites, &config);
    match args.format {
        Format::Text => print_text(&reports),
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize")),
    }
    if verify::all_pass(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
