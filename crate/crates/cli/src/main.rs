use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use aqcc::exec::RayonExecutor;
use aqcc::report::{CodeReport, CosetsReport, Format, Output, ParamsReport};
use aqcc::search::SearchRoute;
use aqcc::{config, search, table1};
use aqcc_core::aqec::{trade_dimension, Deriver, Purity};
use aqcc_core::cyclic::{CyclicCode, DefiningSet};
use aqcc_core::descriptor::CodeDescriptor;
use aqcc_core::galois::ModulusTable;
use aqcc_core::polyring::{cyclotomic_cosets, parse_set, CodeSpace, Poly};
use aqcc_core::weights::{WeightEngine, DEFAULT_BUDGET};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "aqcc", version, about = "Cyclic codes and the asymmetric quantum codes built from them")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Maximum number of codewords enumerated per weight search.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,
    /// Worker threads for weight searches (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,
    /// Modulus overrides, one `p=2 m=4 modulus=x^4 + x + 1` per line.
    /// Defaults to the file named by AQCC_MODULUS_TABLE.
    #[arg(long, value_name = "PATH", global = true)]
    modulus_table: Option<PathBuf>,
    /// Compare side weights with full-code minimum weights.
    #[arg(long, value_enum, default_value_t = PurityArg::Auto, global = true)]
    purity: PurityArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PurityArg {
    /// Only for n <= 31.
    Auto,
    Always,
    Never,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the q-cyclotomic cosets modulo n.
    Cosets {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
    },
    /// Build a code from a descriptor such as `bch:n=15,q=2,delta=5` or `q=2 n=15 T={1,2,4,8}`.
    Code {
        #[arg(required = true, num_args = 1..)]
        descriptor: Vec<String>,
        /// Fail instead of falling back to the BCH bound.
        #[arg(long)]
        exact: bool,
        #[arg(long, conflicts_with = "exact")]
        no_distance: bool,
    },
    /// Derive quantum code parameters.
    Derive {
        #[command(subcommand)]
        route: DeriveRoute,
    },
    /// Audit the published parameter table.
    Table1 {
        /// Rows to audit, e.g. `1,2,5`; all by default.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
    },
    /// Derive codes from every cyclic code of length n.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value_t = SearchRoute::Css)]
        route: SearchRoute,
        #[arg(long)]
        max_results: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum DeriveRoute {
    /// CSS code from a nested pair with C2^⊥ ⊆ C1.
    Css {
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    /// C2^⊥ generated by f(x) g1(x).
    ExtendPoly {
        #[arg(long)]
        c1: String,
        #[arg(long)]
        f: String,
    },
    /// T(C2) = T(C1^⊥) minus T ∪ T^-1.
    ExtendSet {
        #[arg(long)]
        c1: String,
        #[arg(long = "T", value_name = "SET")]
        t: String,
    },
    /// Subsystem codes from C1 and C1 ∩ C1^⊥.
    Subsystem {
        #[arg(long)]
        c1: String,
        /// Also list the codes obtained by trading this many logical qudits into the gauge.
        #[arg(long, default_value_t = 0)]
        trade: u32,
    },
}

fn code(desc: &str, table: &ModulusTable) -> anyhow::Result<CyclicCode> {
    let parsed: CodeDescriptor = desc.parse()?;
    parsed.build(table).with_context(|| format!("building {desc}"))
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    let table = config::load_table(cli.modulus_table.as_deref())?;
    let executor = RayonExecutor::new(cli.workers)?;
    let engine = WeightEngine::new(cli.budget, &executor);
    let purity = match cli.purity {
        PurityArg::Auto => Purity::Auto,
        PurityArg::Always => Purity::Always,
        PurityArg::Never => Purity::Never,
    };
    let deriver = Deriver::new(engine, purity);
    Ok(match cli.command {
        Command::Cosets { n, q } => Output::Cosets(CosetsReport::new(n, q, &cyclotomic_cosets(n, q)?)),
        Command::Code { descriptor, exact, no_distance } => {
            let c = code(&descriptor.join(" "), &table)?;
            let d = match (no_distance, exact) {
                (true, _) => None,
                (false, true) => Some(engine.min_weight(&c)?),
                (false, false) => Some(engine.min_weight_or_bound(&c)?),
            };
            Output::Code(CodeReport::new(&c, d.as_ref()))
        }
        Command::Derive { route } => match route {
            DeriveRoute::Css { c1, c2 } => {
                Output::Params((&deriver.css(&code(&c1, &table)?, &code(&c2, &table)?)?).into())
            }
            DeriveRoute::ExtendPoly { c1, f } => {
                let c1 = code(&c1, &table)?;
                let f = Poly::parse(c1.space().base(), &f)?;
                Output::Params((&deriver.extend_by_polynomial(&c1, &f)?.1).into())
            }
            DeriveRoute::ExtendSet { c1, t } => {
                let c1 = code(&c1, &table)?;
                let t = DefiningSet::new(c1.n(), c1.q(), parse_set(&t)?)?;
                Output::Params((&deriver.extend_by_defining_set(&c1, &t)?.1).into())
            }
            DeriveRoute::Subsystem { c1, trade } => {
                let (a, b) = deriver.subsystem_euclidean(&code(&c1, &table)?)?;
                let mut list: Vec<ParamsReport> = vec![(&a).into(), (&b).into()];
                for start in [a, b] {
                    let mut cur = start;
                    for _ in 0..trade {
                        let Ok(next) = trade_dimension(&cur) else { break };
                        list.push((&next).into());
                        cur = next;
                    }
                }
                Output::ParamsList(list)
            }
        },
        Command::Table1 { rows } => Output::Audit(table1::audit(&rows, &deriver, &table)?),
        Command::Search { n, q, route, max_results } => {
            let space = CodeSpace::with_table(n, q, &table)?;
            Output::ParamsList(search::search(&space, route, &deriver, max_results)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli).and_then(|out| out.render(format)) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(aqcc::exit_code(&err))
        }
    }
}
