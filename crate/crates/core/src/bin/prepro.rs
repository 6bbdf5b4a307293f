use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use prepro::io::{
    cmd_classify, cmd_dot, cmd_grading_search, cmd_koszul_dims, cmd_mckay, cmd_prepro, cmd_tensor, Document,
};
use prepro::{Error, SearchOptions};

#[derive(Parser)]
#[command(name = "prepro", version, about = "Preprojective structures on quiver algebras")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// McKay quiver presentation of 1/r(a1,...,an), given as "r:a1,...,an".
    Mckay {
        spec: String,
        #[arg(long)]
        with_superpotential: bool,
        /// Attach the AIR grading as arrow degrees.
        #[arg(long)]
        air: bool,
    },
    /// Higher preprojective presentation of a presentation document.
    Prepro {
        input: PathBuf,
        /// Degree of the Koszul space to use; inferred when omitted.
        #[arg(short)]
        n: Option<usize>,
        #[arg(long, default_value_t = 12)]
        l_max: usize,
    },
    /// Tensor product of two presentation documents.
    Tensor { left: PathBuf, right: PathBuf },
    /// Koszul space dimensions and the Hilbert-series probe.
    KoszulDims {
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        l_max: usize,
        #[arg(long, default_value_t = 8)]
        d_max: usize,
    },
    /// Exhaustive search for {0,1} arrow gradings of Gorenstein parameter 1.
    GradingSearch {
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        l_max: usize,
        #[arg(long, default_value_t = 24)]
        limit: usize,
        /// Enumerate every assignment instead of pruning.
        #[arg(long)]
        brute: bool,
    },
    /// Classify cyclic groups; arguments are specs or ranges "r<=R,n=N".
    Classify {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Graphviz rendering of a document's quiver.
    Dot { input: PathBuf },
}

fn read_document(path: &PathBuf) -> Result<Document, Error> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    Document::from_json(&text)
}

fn run(cli: &Cli) -> Result<String, Error> {
    Ok(match &cli.command {
        Command::Mckay { spec, with_superpotential, air } => cmd_mckay(spec, *with_superpotential, *air)?.to_json(),
        Command::Prepro { input, n, l_max } => cmd_prepro(&read_document(input)?, *n, *l_max)?.to_json(),
        Command::Tensor { left, right } => cmd_tensor(&read_document(left)?, &read_document(right)?)?.to_json(),
        Command::KoszulDims { input, l_max, d_max } => {
            cmd_koszul_dims(&read_document(input)?, *l_max, *d_max)?.to_json()
        }
        Command::GradingSearch { input, l_max, limit, brute } => {
            let opts = SearchOptions { l_max: *l_max, limit: *limit, brute: *brute, threads: None };
            cmd_grading_search(&read_document(input)?, &opts)?.to_json()
        }
        Command::Classify { specs } => cmd_classify(specs).to_json(),
        Command::Dot { input } => cmd_dot(&read_document(input)?)?,
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SearchLimit { .. } => 4,
        Error::Precondition(_) | Error::NotSuperpotential(_) | Error::NotClosed | Error::NonComposableLift(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("PREPRO_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let output = match run(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, output),
        None => {
            print!("{output}");
            Ok(())
        }
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
