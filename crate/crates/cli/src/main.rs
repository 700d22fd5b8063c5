use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

use commands::Output;

/// Exact polynomial divisibility over Z and quadratic rings of integers.
#[derive(Debug, Parser)]
#[command(name = "dringkit", version)]
struct Cli {
    /// Emit a single JSON document on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RingArg {
    /// Coefficient ring: Z or "Q(sqrt d)" for a norm-Euclidean d.
    #[arg(long, default_value = "Z")]
    ring: String,
}

#[derive(Debug, Args)]
struct Window {
    #[arg(long, default_value_t = -20, allow_negative_numbers = true)]
    from: i64,
    #[arg(long, default_value_t = 20, allow_negative_numbers = true)]
    to: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide g | f for a primitive nonconstant g, with a quotient or an
    /// evaluation witness.
    Divides {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        ring: RingArg,
        /// Witness search bound (default 1000 over Z, 20 over quadratic rings).
        #[arg(long)]
        bound: Option<u64>,
        /// Replace g by its primitive part before certifying.
        #[arg(long)]
        primitive: bool,
    },
    /// Pseudo-division lc(g)^s·f = g·q + r.
    Pseudodiv {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        ring: RingArg,
    },
    /// Content and primitive part.
    Content {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[command(flatten)]
        ring: RingArg,
    },
    /// Norm polynomial p·p_σ over Z.
    Normpoly {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        ring: String,
    },
    /// Pointwise divisibility g(k) | f(k) over an integer window.
    Evalcheck {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        window: Window,
    },
    /// Primes p ≤ L for which f has a root mod p.
    Sf {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        limit: u64,
    },
    /// The pairs p_n, q_n, optionally certifying p_n | q_2n.
    Cheb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = -10, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        to: i64,
    },
    /// Checks that k^2 + 1 is a unit of Z[W] for random k.
    Zwdemo {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Defaults to $DRINGKIT_SEED, else 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Checks g(b) | f(b) ⇒ N(g)(b) | N(f)(b) on an integer window.
    Transfer {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        window: Window,
    },
}

fn run(cmd: Command) -> dringkit::Result<Output> {
    match cmd {
        Command::Divides { f, g, ring, bound, primitive } => {
            commands::divides(&ring.ring, &f, &g, bound, primitive)
        }
        Command::Pseudodiv { f, g, ring } => commands::pseudodiv(&ring.ring, &f, &g),
        Command::Content { p, ring } => commands::content(&ring.ring, &p),
        Command::Normpoly { p, ring } => commands::normpoly(&ring, &p),
        Command::Evalcheck { f, g, ring, window } => {
            commands::evalcheck(&ring.ring, &f, &g, window.from, window.to)
        }
        Command::Sf { f, limit } => commands::sf(&f, limit),
        Command::Cheb { n, certify, from, to } => commands::cheb(n, certify, from, to),
        Command::Zwdemo { trials, seed } => {
            let seed = match seed {
                Some(s) => s,
                None => env_seed()?,
            };
            commands::zwdemo(trials, seed)
        }
        Command::Transfer { f, g, ring, window } => {
            commands::transfer(&ring, &f, &g, window.from, window.to)
        }
    }
}

fn env_seed() -> dringkit::Result<u64> {
    match std::env::var("DRINGKIT_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| dringkit::Error::Syntax {
            pos: 0,
            msg: format!("DRINGKIT_SEED={v:?} is not an unsigned integer"),
        }),
        Err(_) => Ok(0),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json values serialize") + "\n"
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
