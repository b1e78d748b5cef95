use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kstirling::bijections::{
    pathdiagram_to_tree, port_pathdiagram_to_tree, port_tree_to_pathdiagram, tree_to_pathdiagram,
};
use kstirling::enumerate::{enum_kary_trees, enum_ports, enum_stirling, RandomSampler};
use kstirling::io::{
    parse_kary_diagram, parse_kary_tree, parse_permutation, parse_port, parse_port_diagram,
};
use kstirling::localtypes::{classic_name, local_types, node_types, LocalType, TypeHistogram};
use kstirling::series::{cf_series, cf_series_with_height};
use kstirling::stats::{block_profile, lr_profile, outdegree_profile};
use kstirling::verify::{run_suites, Suite};
use kstirling::{
    count_kary_trees, count_port, count_stirling, perm_to_tree, tree_to_perm, Execution,
    ObjectClass,
};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;

#[derive(Parser)]
#[command(
    name = "kstirling",
    version,
    about = "k-Stirling permutations, increasing trees and their local types"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Stirling,
    Kary,
    Port,
}

impl From<Class> for ObjectClass {
    fn from(c: Class) -> Self {
        match c {
            Class::Stirling => ObjectClass::Stirling,
            Class::Kary => ObjectClass::Kary,
            Class::Port => ObjectClass::Port,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    Perm,
    Tree,
    Pathdiagram,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatKind {
    Outdeg,
    Lr,
    Block,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Counts,
    Gessel,
    Types,
    Pathdiagram,
    Series,
    Words,
    Stats,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact number of objects of size N.
    Count {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Print every object of size N, one per line.
    Enumerate {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Print uniformly random objects drawn from one seeded stream.
    Random {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Read a permutation or tree from stdin and print its local or node types.
    Classify {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Read an object from stdin and print it in another encoding.
    Convert {
        #[arg(long, value_enum)]
        from: Form,
        #[arg(long, value_enum)]
        to: Form,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Use `port` for plane-oriented recursive trees.
        #[arg(long, value_enum, default_value = "kary")]
        class: Class,
    },
    /// Print the type generating function truncated at t^MAX_DEG.
    Series {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        max_deg: u32,
        #[arg(long)]
        all_ones: bool,
        #[arg(long)]
        mark_last_leaf: bool,
        /// Height bound; defaults to k · max-deg.
        #[arg(long)]
        h: Option<usize>,
    },
    /// Run verification suites; exit code 2 if any property fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        sequential: bool,
    },
    /// Read an object from stdin and print one of its statistic profiles.
    Stats {
        #[arg(long, value_enum)]
        class: StatKind,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_stdin() -> Result<String, String> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| format!("reading stdin: {e}"))?;
    Ok(s)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn run(command: Command) -> CliResult {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let write_err = |e: io::Error| format!("writing output: {e}");
    match command {
        Command::Count { class, k, n } => {
            let c = match class {
                Class::Stirling => count_stirling(n, k),
                Class::Kary => count_kary_trees(n, k),
                Class::Port => count_port(n).map_err(err)?,
            };
            writeln!(out, "{c}").map_err(write_err)?;
        }
        Command::Enumerate { class, k, n } => match class {
            Class::Stirling => {
                for x in enum_stirling(n, k).map_err(err)? {
                    writeln!(out, "{x}").map_err(write_err)?;
                }
            }
            Class::Kary => {
                for x in enum_kary_trees(n, k).map_err(err)? {
                    writeln!(out, "{x}").map_err(write_err)?;
                }
            }
            Class::Port => {
                for x in enum_ports(n).map_err(err)? {
                    writeln!(out, "{x}").map_err(write_err)?;
                }
            }
        },
        Command::Random {
            class,
            k,
            n,
            seed,
            count,
        } => {
            let mut sampler = RandomSampler::new(seed);
            for _ in 0..count {
                let x = sampler.sample(class.into(), n, k).map_err(err)?;
                writeln!(out, "{x}").map_err(write_err)?;
            }
        }
        Command::Classify { k, json } => {
            let text = read_stdin()?;
            let (types, label) = if text.contains('(') || text.trim() == "_" {
                (node_types(&parse_kary_tree(&text, k).map_err(err)?), "node")
            } else {
                (
                    local_types(&parse_permutation(&text, k).map_err(err)?),
                    "letter",
                )
            };
            let hist = TypeHistogram::from_types(k, &types);
            if json {
                let v = serde_json::json!({ "types": types, "histogram": hist });
                writeln!(out, "{v}").map_err(write_err)?;
            } else {
                for (i, ty) in types.iter().enumerate() {
                    write!(out, "{label} {}: {ty}", i + 1).map_err(write_err)?;
                    if let Some(name) = classic(*ty, label == "node") {
                        write!(out, " {name}").map_err(write_err)?;
                    }
                    writeln!(out).map_err(write_err)?;
                }
                writeln!(out, "histogram: {hist}").map_err(write_err)?;
            }
        }
        Command::Convert { from, to, k, class } => {
            let text = read_stdin()?;
            let s = match class {
                Class::Port => convert_port(&text, from, to)?,
                _ => convert_kary(&text, from, to, k)?,
            };
            writeln!(out, "{s}").map_err(write_err)?;
        }
        Command::Series {
            k,
            max_deg,
            all_ones,
            mark_last_leaf,
            h,
        } => {
            if k == 0 {
                return Err(kstirling::Error::ZeroMultiplicity.to_string());
            }
            let mut s = match h {
                Some(h) => cf_series_with_height(k, max_deg, h),
                None => cf_series(k, max_deg),
            };
            if mark_last_leaf {
                s = s.mark_last_leaf();
            }
            if all_ones {
                s = s.specialize_all_ones();
            }
            write!(out, "{s}").map_err(write_err)?;
        }
        Command::Verify {
            suite,
            max_n,
            sequential,
        } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Counts => vec![Suite::Counts],
                SuiteArg::Gessel => vec![Suite::Gessel],
                SuiteArg::Types => vec![Suite::Types],
                SuiteArg::Pathdiagram => vec![Suite::PathDiagram],
                SuiteArg::Series => vec![Suite::Series],
                SuiteArg::Words => vec![Suite::Words],
                SuiteArg::Stats => vec![Suite::Stats],
            };
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::best()
            };
            let reports = run_suites(&suites, max_n, exec);
            let mut all = true;
            for r in &reports {
                write!(out, "{r}").map_err(write_err)?;
                all &= r.passed();
            }
            writeln!(out, "{}", if all { "ALL PASS" } else { "SOME FAILED" }).map_err(write_err)?;
            out.flush().map_err(write_err)?;
            if !all {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
        Command::Stats { class, k, json } => {
            let text = read_stdin()?;
            let (profile, aux) = match class {
                StatKind::Outdeg => (outdegree_profile(&parse_port(&text).map_err(err)?), None),
                StatKind::Lr => {
                    let p = lr_profile(&parse_kary_tree(&text, k).map_err(err)?).map_err(err)?;
                    (p.profile, Some(p.center_leaf_nodes))
                }
                StatKind::Block => (
                    block_profile(&parse_permutation(&text, k).map_err(err)?).map_err(err)?,
                    None,
                ),
            };
            if json {
                let mut v = serde_json::to_value(&profile).map_err(err)?;
                if let Some(a) = aux {
                    v["center_leaf_nodes"] = a.into();
                }
                writeln!(out, "{v}").map_err(write_err)?;
            } else {
                writeln!(out, "{profile}").map_err(write_err)?;
                if let Some(a) = aux {
                    writeln!(out, "center_leaf_nodes: {a}").map_err(write_err)?;
                }
            }
        }
    }
    out.flush().map_err(write_err)?;
    Ok(ExitCode::SUCCESS)
}

fn classic(ty: LocalType, node: bool) -> Option<&'static str> {
    let c = classic_name(ty).ok()?;
    Some(if node { c.node_name() } else { c.name() })
}

fn convert_kary(text: &str, from: Form, to: Form, k: usize) -> Result<String, String> {
    let tree = match from {
        Form::Perm => perm_to_tree(&parse_permutation(text, k).map_err(err)?),
        Form::Tree => parse_kary_tree(text, k).map_err(err)?,
        Form::Pathdiagram => {
            pathdiagram_to_tree(&parse_kary_diagram(text).map_err(err)?, k).map_err(err)?
        }
    };
    Ok(match to {
        Form::Perm => tree_to_perm(&tree).to_string(),
        Form::Tree => tree.to_string(),
        Form::Pathdiagram => tree_to_pathdiagram(&tree).map_err(err)?.to_string(),
    })
}

fn convert_port(text: &str, from: Form, to: Form) -> Result<String, String> {
    let tree = match from {
        Form::Tree => parse_port(text).map_err(err)?,
        Form::Pathdiagram => {
            port_pathdiagram_to_tree(&parse_port_diagram(text).map_err(err)?).map_err(err)?
        }
        Form::Perm => return Err("PORTs have no permutation encoding".into()),
    };
    Ok(match to {
        Form::Tree => tree.to_string(),
        Form::Pathdiagram => port_tree_to_pathdiagram(&tree).to_string(),
        Form::Perm => return Err("PORTs have no permutation encoding".into()),
    })
}
