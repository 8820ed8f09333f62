use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pilab_cli::commands::{self, CommandOutput, MethodArg};

#[derive(Parser)]
#[command(
    name = "pilab",
    version,
    about = "Exact-arithmetic toolkit for polynomial identities of finite-dimensional superalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads (default: all cores). Reports do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit the JSON mirror of the report instead of CSV.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum MethodFlag {
    Auto,
    Exact,
    Modular,
}

impl From<MethodFlag> for MethodArg {
    fn from(m: MethodFlag) -> MethodArg {
        match m {
            MethodFlag::Auto => MethodArg::Auto,
            MethodFlag::Exact => MethodArg::Exact,
            MethodFlag::Modular => MethodArg::Modular,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit a builtin algebra (s2, s-t, p-tilde) as an interchange document
    Build {
        /// Builtin name: s2 | s-t | p-tilde
        algebra: String,
        /// Matrix size for the s-t and p-tilde builtins
        #[arg(long)]
        t: Option<usize>,
    },
    /// Check axioms and structural facts of an algebra
    Verify {
        /// Builtin name or path to an algebra document
        algebra: String,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Codimension of the degree-n multilinear quotient
    Codim {
        algebra: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodFlag::Auto)]
        method: MethodFlag,
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long)]
        max_cols: Option<usize>,
    },
    /// Graded codimensions: one split with --k, otherwise all splits plus
    /// the binomially weighted total
    GradedCodim {
        algebra: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodFlag::Auto)]
        method: MethodFlag,
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long)]
        max_cols: Option<usize>,
    },
    /// Multiplicity decomposition of the degree-n quotient; --k selects the
    /// graded split with k even variables
    Cocharacter {
        algebra: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long)]
        max_cols: Option<usize>,
        /// Lift the degree budget from 5 to 6
        #[arg(long)]
        slow: bool,
    },
    /// Total multiplicity with the dimension-based polynomial bound
    Colength {
        algebra: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long)]
        max_cols: Option<usize>,
        #[arg(long)]
        slow: bool,
    },
    /// Irreducible dimensions by the hook-length formula; --m checks the
    /// four-row rectangle lower bound
    Hook {
        /// Partition, e.g. --lambda 2,2,2,2
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<usize>>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// The multilinear witness polynomial in 2m alternating quadruples
    Fm {
        #[arg(long)]
        m: usize,
        /// Evaluate under the distinguished assignment into the builtin s2
        #[arg(long)]
        eval: bool,
        /// Right-multiply the evaluated value this many times by `a`
        #[arg(long)]
        pad: Option<usize>,
        /// Expand the alternation eagerly (m <= 2) and report the term count
        #[arg(long)]
        expand: bool,
    },
    /// Search standard tableaux for a symmetrizer image that stays off the
    /// identity ideal (requires --slow)
    SymmetrizerCheck {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        slow: bool,
    },
    /// Codimension roots table up to degree n
    ExpEstimate {
        algebra: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Use graded codimension totals instead of the plain sequence
        #[arg(long)]
        graded: bool,
        #[arg(long, value_enum, default_value_t = MethodFlag::Auto)]
        method: MethodFlag,
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long)]
        max_cols: Option<usize>,
    },
    /// Run the whole verification battery; --slow includes the symmetrizer
    /// witness search
    CheckPaper {
        #[arg(long)]
        slow: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli.command, cli.json) {
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
        Ok(output) => {
            if let Err(e) = write_body(&cli.out, &output.body) {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            if output.failures > 0 {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

fn write_body(out: &Option<PathBuf>, body: &str) -> Result<(), String> {
    match out {
        None => {
            print!("{body}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
        Some(path) => std::fs::write(path, body)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

fn dispatch(command: &Command, json: bool) -> Result<CommandOutput, String> {
    match command {
        Command::Build { algebra, t } => commands::run_build(algebra, *t),
        Command::Verify { algebra, t } => commands::run_verify(algebra, *t),
        Command::Codim {
            algebra,
            t,
            n,
            method,
            max_rows,
            max_cols,
        } => commands::run_codim(
            algebra,
            *t,
            *n,
            (*method).into(),
            &commands::budget_from(*max_rows, *max_cols),
            json,
        ),
        Command::GradedCodim {
            algebra,
            t,
            n,
            k,
            method,
            max_rows,
            max_cols,
        } => commands::run_graded_codim(
            algebra,
            *t,
            *n,
            *k,
            (*method).into(),
            &commands::budget_from(*max_rows, *max_cols),
            json,
        ),
        Command::Cocharacter {
            algebra,
            t,
            n,
            k,
            max_rows,
            max_cols,
            slow,
        } => commands::run_cocharacter(
            algebra,
            *t,
            *n,
            *k,
            &commands::budget_from(*max_rows, *max_cols),
            *slow,
            json,
        ),
        Command::Colength {
            algebra,
            t,
            n,
            max_rows,
            max_cols,
            slow,
        } => commands::run_colength(
            algebra,
            *t,
            *n,
            &commands::budget_from(*max_rows, *max_cols),
            *slow,
            json,
        ),
        Command::Hook { lambda, m } => commands::run_hook(lambda.clone(), *m, json),
        Command::Fm {
            m,
            eval,
            pad,
            expand,
        } => commands::run_fm(*m, *eval, *pad, *expand),
        Command::SymmetrizerCheck { m, slow } => commands::run_symmetrizer_check(*m, *slow),
        Command::ExpEstimate {
            algebra,
            t,
            n,
            graded,
            method,
            max_rows,
            max_cols,
        } => commands::run_exp_estimate(
            algebra,
            *t,
            *n,
            *graded,
            (*method).into(),
            &commands::budget_from(*max_rows, *max_cols),
            json,
        ),
        Command::CheckPaper { slow } => {
            let exe = std::env::current_exe().ok();
            commands::run_check_paper(*slow, exe.as_deref())
        }
    }
}
