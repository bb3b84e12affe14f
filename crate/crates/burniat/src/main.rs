use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use burniat::builtin;
use burniat::cohomology::{self, H1Verdict};
use burniat::collections::{self, BlockedCollection, Status};
use burniat::delpezzo;
use burniat::effectivity::{self, Verdict};
use burniat::picard::{derive_torsion_change, DivClass};

const COORD_LIMIT: i64 = 1_000_000;

#[derive(Parser)]
#[command(name = "burniat", version, about = "Exceptional collections on a Burniat surface: verification, search, reports")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct InputArgs {
    /// Built-in dataset: table2-upsilon, table2-upsilon-prime, sigma-delpezzo
    #[arg(long)]
    builtin: Option<String>,
    /// JSON file with an array of divisor classes
    #[arg(long)]
    collection: Option<PathBuf>,
    /// Block sizes, e.g. 2,3,1
    #[arg(long, value_delimiter = ',')]
    blocks: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify that a collection is exceptional with orthogonal blocks
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        depth: u32,
        /// Print the reduction script of every certificate
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads (evaluation is currently single-threaded)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Exhaustive search over torsion lifts of a numerical collection
    Search {
        /// JSON file with 6 divisor classes; torsion parts are ignored
        #[arg(long)]
        numerical: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        blocks: Option<Vec<usize>>,
        #[arg(long, default_value_t = 10)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the 6x6 table of (hom, ext1, ext2) triples
    ExtTable {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Endomorphism-algebra and K-theory reports for a verified collection
    Report {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify the 1+3+2 block collection on the del Pezzo surface
    DpCheck {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Prove a single vanishing statement for one divisor class
    Prove {
        /// Inline JSON, e.g. '{"d":2,"a0":1,"b0":0,"c0":0,"t":[1,1,0,1,0,0]}'
        #[arg(long)]
        class: String,
        /// Goal: h0 or h1
        #[arg(long, default_value = "h0")]
        goal: String,
        #[arg(long, default_value_t = 10)]
        depth: u32,
        #[arg(long)]
        trace: bool,
    },
    /// Re-derive the torsion coordinate-change formulas from the table data
    DeriveChange,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, String> {
    match cmd {
        Cmd::Verify {
            input,
            depth,
            trace,
            format,
            jobs,
        } => {
            if jobs == 0 {
                return Err("--jobs must be at least 1".into());
            }
            if depth == 0 {
                return Err("--depth must be at least 1".into());
            }
            if input.builtin.as_deref() == Some("sigma-delpezzo") {
                return dp_check(format);
            }
            let c = load_collection(&input)?;
            verify(&c, depth, trace, format)
        }
        Cmd::Search {
            numerical,
            blocks,
            depth,
            format,
        } => {
            let (free, blocks) = match numerical {
                Some(path) => {
                    let classes = load_classes(&path)?;
                    let free: [DivClass; 6] = classes
                        .try_into()
                        .map_err(|_| "search needs exactly 6 classes".to_string())?;
                    (free, blocks.ok_or("search needs --blocks")?)
                }
                None => {
                    let c = builtin::upsilon();
                    let free: [DivClass; 6] = std::array::from_fn(|i| c.classes()[i]);
                    (free, blocks.unwrap_or_else(|| builtin::BLOCK_SIZES.to_vec()))
                }
            };
            let result =
                collections::search_lifts(&free, &blocks, depth).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", to_json(&result)?),
                _ => {
                    for ((u, v), size) in &result.admissible_sizes {
                        println!("pair (L{}, L{}): {size} admissible torsion differences", u + 1, v + 1);
                    }
                    for a in &result.assignments {
                        let bits: Vec<String> = a
                            .iter()
                            .map(|t| t.0.iter().map(|b| b.to_string()).collect())
                            .collect();
                        println!("{}", bits.join(" "));
                    }
                    println!("certified lifts: {}", result.assignments.len());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ExtTable {
            input,
            depth,
            format,
        } => {
            let c = load_collection(&input)?;
            let table = collections::ext_table(&c, depth).map_err(|e| e.to_string())?;
            let mut unresolved = false;
            match format {
                Format::Json => println!("{}", to_json(&table)?),
                Format::Csv => {
                    println!("i,j,hom,ext1,ext2");
                    for (i, row) in table.iter().enumerate() {
                        for (j, comp) in row.iter().enumerate() {
                            match comp.dims() {
                                Some((h, e1, e2)) => {
                                    println!("{},{},{h},{e1},{e2}", i + 1, j + 1)
                                }
                                None => {
                                    unresolved = true;
                                    println!("{},{},?,?,?", i + 1, j + 1);
                                }
                            }
                        }
                    }
                }
                Format::Text => {
                    for (i, row) in table.iter().enumerate() {
                        let cells: Vec<String> = row
                            .iter()
                            .map(|comp| match comp.dims() {
                                Some((h, e1, e2)) => format!("({h},{e1},{e2})"),
                                None => {
                                    unresolved = true;
                                    "(?,?,?)".into()
                                }
                            })
                            .collect();
                        println!("L{}: {}", i + 1, cells.join(" "));
                    }
                }
            }
            Ok(if unresolved {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Cmd::Report {
            input,
            depth,
            format,
        } => {
            let c = load_collection(&input)?;
            let algebra = collections::algebra_report(&c, depth).map_err(|e| e.to_string())?;
            let k0 = collections::k0_report(&c);
            match format {
                Format::Json => {
                    println!("{}", to_json(&serde_json::json!({ "algebra": algebra, "k0": k0 }))?)
                }
                _ => {
                    println!("vertices: {}", algebra.vertices);
                    for (i, j, m) in &algebra.arrows {
                        println!("degree-2 arrows L{i} -> L{j}: {m}");
                    }
                    println!(
                        "total degree-2 arrows: {} over {} pairs",
                        algebra.total_arrows, algebra.arrow_pairs
                    );
                    println!("degree-0 dimension: {}", algebra.degree0_dimension);
                    println!(
                        "degrees in {{0,2}}: {}; compositions vanish: {}; higher products vanish: {}",
                        algebra.degrees_in_0_and_2,
                        algebra.compositions_vanish,
                        algebra.higher_products_vanish
                    );
                    println!("gram det: {}", k0.gram_det);
                    println!("K0(X) = {}", k0.k0_x);
                    println!("K0(D) = {}", k0.k0_d);
                    println!("K0(A) = {}", k0.k0_a);
                    println!(
                        "HH: X dim {}, D dim {}, A dim {}",
                        k0.hh_x_dim, k0.hh_d_dim, k0.hh_a_dim
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::DpCheck { format } => dp_check(format),
        Cmd::Prove {
            class,
            goal,
            depth,
            trace,
        } => {
            let d: DivClass =
                serde_json::from_str(&class).map_err(|e| format!("bad class: {e}"))?;
            check_range(&[d])?;
            match goal.as_str() {
                "h0" => match effectivity::prove_h0_zero(d, depth.max(1)) {
                    Verdict::Proven(cert) => {
                        if trace {
                            println!("{}", cert.trace("D"));
                        } else {
                            println!("{}", to_json(&cert)?);
                        }
                        Ok(ExitCode::SUCCESS)
                    }
                    Verdict::Refuted(cert) => {
                        println!("{}", to_json(&cert)?);
                        eprintln!("refuted: the class is effective");
                        Ok(ExitCode::from(3))
                    }
                    Verdict::Unknown => {
                        eprintln!("unknown at depth {depth}");
                        Ok(ExitCode::from(2))
                    }
                },
                "h1" => match cohomology::prove_h1_zero(d, depth.max(1)) {
                    H1Verdict::Proven(chain) => {
                        if trace {
                            let steps: Vec<&str> =
                                chain.steps.iter().map(|c| c.name()).collect();
                            println!("H1-CHAIN tau={} steps={}", chain.tau, steps.join(","));
                        } else {
                            println!("{}", to_json(&chain)?);
                        }
                        Ok(ExitCode::SUCCESS)
                    }
                    H1Verdict::Unknown => {
                        eprintln!("unknown at chain length {depth}");
                        Ok(ExitCode::from(2))
                    }
                },
                other => Err(format!("unknown goal {other}; use h0 or h1")),
            }
        }
        Cmd::DeriveChange => {
            let formulas = derive_torsion_change().map_err(|e| e.to_string())?;
            for f in formulas {
                println!("{}", f.render());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify(c: &BlockedCollection, depth: u32, trace: bool, format: Format) -> Result<ExitCode, String> {
    let report = collections::verify_collection(c, depth).map_err(|e| e.to_string())?;
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        _ => {
            println!("status: {:?}", report.status);
            for row in &report.numerical {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                println!("chi: {}", cells.join(" "));
            }
            for (i, row) in report.table.iter().enumerate() {
                let cells: Vec<String> = row
                    .iter()
                    .map(|comp| match comp.dims() {
                        Some((h, e1, e2)) => format!("({h},{e1},{e2})"),
                        None => "(?,?,?)".into(),
                    })
                    .collect();
                println!("L{}: {}", i + 1, cells.join(" "));
            }
            if trace {
                for (i, row) in report.table.iter().enumerate() {
                    for (j, comp) in row.iter().enumerate() {
                        if let Some(cert) = &comp.hom_cert {
                            println!("{}", cert.trace(&format!("L{}-L{}", j + 1, i + 1)));
                        }
                        if let Some(cert) = &comp.ext2_cert {
                            println!("{}", cert.trace(&format!("K-(L{}-L{})", j + 1, i + 1)));
                        }
                        if let Some(chain) = &comp.ext1_chain {
                            if !chain.steps.is_empty() {
                                let steps: Vec<&str> =
                                    chain.steps.iter().map(|c| c.name()).collect();
                                println!(
                                    "H1-CHAIN L{}-L{}: tau={} steps={}",
                                    j + 1,
                                    i + 1,
                                    chain.tau,
                                    steps.join(",")
                                );
                            }
                        }
                    }
                }
            }
            for g in &report.open_goals {
                println!("open ({},{}): {}", g.i + 1, g.j + 1, g.what);
            }
            for g in &report.failed_goals {
                println!("failed ({},{}): {}", g.i + 1, g.j + 1, g.what);
            }
        }
    }
    Ok(match report.status {
        Status::Verified => ExitCode::SUCCESS,
        Status::Inconclusive => ExitCode::from(2),
        Status::Failed => ExitCode::from(3),
    })
}

fn dp_check(format: Format) -> Result<ExitCode, String> {
    let report = delpezzo::verify_sigma();
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        _ => {
            for (i, row) in report.hom.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                println!("hom E{}: {}", i + 1, cells.join(" "));
            }
            println!(
                "exceptional: {}; strong: {}; blocks orthogonal: {}; hom table: {}",
                report.exceptional, report.strong, report.blocks_orthogonal, report.hom_table_ok
            );
        }
    }
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn load_collection(input: &InputArgs) -> Result<BlockedCollection, String> {
    if let Some(name) = &input.builtin {
        return builtin::by_name(name).ok_or_else(|| format!("unknown builtin {name}"));
    }
    let path = input
        .collection
        .as_ref()
        .ok_or("need --builtin or --collection")?;
    let classes = load_classes(path)?;
    let blocks = input.blocks.clone().ok_or("need --blocks with --collection")?;
    BlockedCollection::new(classes, blocks).map_err(|e| e.to_string())
}

fn load_classes(path: &PathBuf) -> Result<Vec<DivClass>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let classes: Vec<DivClass> =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    check_range(&classes)?;
    Ok(classes)
}

fn check_range(classes: &[DivClass]) -> Result<(), String> {
    for c in classes {
        for v in [c.d, c.a0, c.b0, c.c0] {
            if v.abs() > COORD_LIMIT {
                return Err(format!("coordinate out of range: |{v}| > {COORD_LIMIT}"));
            }
        }
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}
