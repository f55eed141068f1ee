use clap::{Parser, Subcommand};

use snla_cli::*;

#[derive(Parser)]
#[command(name = "snla")]
#[command(about = "Exact-arithmetic toolkit for symplectic Novikov Lie algebras")]
#[command(version)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Full symplectic Novikov report for an algebra file
    Check { file: String },
    /// Emit the associated left-symmetric product of an algebra file
    Product { file: String },
    /// Symplectic connection, curvature flatness and Ricci tensor
    Curvature { file: String },
    /// Symplectic reduction by an isotropic ideal
    Reduce {
        file: String,
        /// Ideal spanning vector as comma-separated rationals; repeatable
        #[arg(long = "ideal", required = true)]
        ideal: Vec<String>,
    },
    /// Central symplectic oxidation by a (phi, lambda) data file
    Oxidize {
        file: String,
        #[arg(long)]
        data: String,
    },
    /// Decompose an algebra with nontrivial center as a central oxidation
    Decompose { file: String },
    /// Cotangent algebra of a left-symmetric product file
    Cotangent { file: String },
    /// Member of the split two-parameter family
    Irreducible {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        m: usize,
        /// h x m matrix: rows separated by ';', entries by ','
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        lambdabar: String,
    },
    /// Catalog of low-dimensional examples
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entry names
    List,
    /// Emit all entries at default parameters in the standard JSON formats
    Dump,
    /// Show one entry (instantiated at default or given parameters)
    Show {
        name: String,
        /// Parameter bindings such as lambda=1/2,a=3
        #[arg(long)]
        params: Option<String>,
    },
    /// Verify every entry against its defining equations
    Verify {
        /// Parameter bindings such as lambda=1/2,a=3 (otherwise the full
        /// sample set is used)
        #[arg(long)]
        params: Option<String>,
    },
}

/// Writes to stdout, exiting quietly when the consumer closed the pipe.
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(s.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Commands::Check { file } => cmd_check(file),
        Commands::Product { file } => cmd_product(file),
        Commands::Curvature { file } => cmd_curvature(file),
        Commands::Reduce { file, ideal } => cmd_reduce(file, ideal),
        Commands::Oxidize { file, data } => cmd_oxidize(file, data),
        Commands::Decompose { file } => cmd_decompose(file),
        Commands::Cotangent { file } => cmd_cotangent(file),
        Commands::Irreducible {
            h,
            m,
            lambda,
            lambdabar,
        } => cmd_irreducible(*h, *m, lambda, lambdabar),
        Commands::Catalog { action } => match action {
            CatalogAction::List => cmd_catalog_list(),
            CatalogAction::Dump => cmd_catalog_dump(),
            CatalogAction::Show { name, params } => match parse_params(params.as_deref()) {
                Ok(p) => cmd_catalog_show(name, &p),
                Err(e) => error_outcome(&e),
            },
            CatalogAction::Verify { params } => match parse_params(params.as_deref()) {
                Ok(p) => cmd_catalog_verify(&p),
                Err(e) => error_outcome(&e),
            },
        },
    };
    if cli.json {
        let mut s = serde_json::to_string_pretty(&outcome.json).expect("reports serialize");
        s.push('\n');
        emit(&s);
    } else {
        emit(&outcome.text);
        if !outcome.text.ends_with('\n') {
            emit("\n");
        }
    }
    std::process::exit(outcome.exit);
}
