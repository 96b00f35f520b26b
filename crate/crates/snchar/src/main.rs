//! Command-line frontend: evaluate characters, tabulate them over all
//! classes, count tableaux, draw skew diagrams, and run verification
//! suites.
//!
//! Plain text by default, `--json` for machine-readable output; every
//! computed value is printed as an exact decimal string. Exit codes:
//! 0 success, 1 verification failure, 2 argument or parse error, 3 size
//! mismatch between arguments.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use snchar::{
    verify_berele_regev, verify_gamma, verify_lambda, verify_orthogonality, verify_pieri,
    VerifyReport,
};
use snchar_core::characters::{CharacterValueTable, Evaluator, LineSkewKey};
use snchar_core::combinatorics::{partitions_of, Bicomposition, Partition};
use snchar_core::diagrams::build_skew_for_bicomposition;
use snchar_core::regev::{gamma_closed, gamma_direct, LambdaParams};
use snchar_core::tableaux::{count_by_weight, s_kl, tableaux, Alphabet};
use snchar_core::{Error, Int};

/// Default cap on `n`, overridable through the `SNCHAR_MAX_N` environment
/// variable; a guard against accidentally huge computations.
const DEFAULT_MAX_N: u32 = 20;

#[derive(Parser)]
#[command(
    name = "snchar",
    about = "Exact symmetric-group character computations",
    disable_version_flag = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the irreducible character of a shape on a class
    Chi {
        /// Shape partition, e.g. "3,1"
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        /// Cycle type, e.g. "2,1,1"
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Evaluate the skew character of a bicomposition
    Psi {
        /// Bicomposition, e.g. "4,0,5|2,3" ("-" for an empty side)
        #[arg(long, allow_hyphen_values = true)]
        bicomp: String,
        /// Cycle type; omit to tabulate over all classes
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
        /// Print the full value table even when --class is given
        #[arg(long)]
        table: bool,
    },
    /// The hook-sum character: closed form and direct sum, flagged if they differ
    Gamma {
        #[arg(long)]
        n: u32,
        /// Cycle type; omit to tabulate over all classes
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
    },
    /// The product character, by one or all of its three routes
    Lambda {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        /// Cycle type; omit to tabulate over all classes
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
        #[arg(long, value_enum, default_value_t = Route::Product)]
        route: Route,
    },
    /// Count semistandard (k,l)-tableaux of a shape
    Skl {
        /// Shape partition, e.g. "2,1"
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        /// Also print the per-weight counts
        #[arg(long)]
        weights: bool,
        /// Also print every tableau in one-line form
        #[arg(long)]
        dump: bool,
    },
    /// Run a verification suite and print its JSON report
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest group size to sweep; each suite has its own default
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Draw the canonical skew diagram of a bicomposition
    Render {
        /// Bicomposition, e.g. "4,0,5|2,3"
        #[arg(long, allow_hyphen_values = true)]
        bicomp: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Product,
    Skew,
    Tableaux,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Gamma,
    Lambda,
    Pieri,
    Orthogonality,
    BereleRegev,
}

impl Suite {
    /// Sweep bound used when --max-n is omitted.
    fn default_max_n(self) -> u32 {
        match self {
            Suite::Gamma => 12,
            Suite::Lambda => 8,
            Suite::Pieri => 10,
            Suite::Orthogonality => 8,
            Suite::BereleRegev => 6,
        }
    }
}

/// A diagnostic plus the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeMismatch { .. } => 3,
            Error::InvalidPartition | Error::InvalidSkewShape | Error::GammaUndefinedForEmpty => 2,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn max_n_cap() -> Result<u32, Failure> {
    match std::env::var("SNCHAR_MAX_N") {
        Ok(raw) => raw.trim().parse::<u32>().map_err(|_| {
            Failure::new(
                2,
                format!("SNCHAR_MAX_N must be a non-negative integer, got {raw:?}"),
            )
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_N),
        Err(e) => Err(Failure::new(2, format!("SNCHAR_MAX_N unreadable: {e}"))),
    }
}

fn check_cap(n: u32) -> Result<(), Failure> {
    let cap = max_n_cap()?;
    if n > cap {
        return Err(Failure::new(
            2,
            format!("n = {n} exceeds the SNCHAR_MAX_N cap of {cap}"),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Chi { shape, class } => run_chi(&shape, &class, json),
        Command::Psi {
            bicomp,
            class,
            table,
        } => run_psi(&bicomp, class.as_deref(), table, json),
        Command::Gamma { n, class } => run_gamma(n, class.as_deref(), json),
        Command::Lambda {
            n,
            k,
            l,
            class,
            route,
        } => run_lambda(n, k, l, class.as_deref(), route, json),
        Command::Skl {
            shape,
            k,
            l,
            weights,
            dump,
        } => run_skl(&shape, k, l, weights, dump, json),
        Command::Verify { suite, max_n } => run_verify(suite, max_n),
        Command::Render { bicomp } => run_render(&bicomp, json),
    }
}

fn run_chi(shape: &str, class: &str, json_out: bool) -> Result<ExitCode, Failure> {
    let alpha: Partition = shape.parse()?;
    let nu: Partition = class.parse()?;
    check_cap(alpha.n())?;
    let value = Evaluator::new().chi(&alpha, &nu)?;
    if json_out {
        print_json(&json!({
            "shape": alpha.to_string(),
            "class": nu.to_string(),
            "value": value.to_string(),
        }));
    } else {
        println!("{value}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_psi(
    bicomp: &str,
    class: Option<&str>,
    table: bool,
    json_out: bool,
) -> Result<ExitCode, Failure> {
    let b: Bicomposition = bicomp.parse()?;
    check_cap(b.n())?;
    let key = LineSkewKey::from_bicomposition(&b);
    let mut ev = Evaluator::new();
    match class {
        Some(class) if !table => {
            let nu: Partition = class.parse()?;
            let value = ev.psi_line(&key, &nu)?;
            if json_out {
                print_json(&json!({
                    "bicomp": b.to_string(),
                    "class": nu.to_string(),
                    "value": value.to_string(),
                }));
            } else {
                println!("{value}");
            }
        }
        _ => {
            let t = ev.psi_table(&key, b.n())?;
            if json_out {
                print_json(&json!({
                    "bicomp": b.to_string(),
                    "n": b.n(),
                    "rows": table_rows_json(&t),
                }));
            } else {
                print_table_rows(&t);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_gamma(n: u32, class: Option<&str>, json_out: bool) -> Result<ExitCode, Failure> {
    check_cap(n)?;
    let mut ev = Evaluator::new();
    let classes: Vec<Partition> = match class {
        Some(class) => vec![class.parse()?],
        None => partitions_of(n), // already descending lexicographic
    };
    let single = class.is_some();
    let mut all_match = true;
    let mut rows = Vec::new();
    for nu in &classes {
        let closed = gamma_closed(n, nu)?;
        let direct = gamma_direct(&mut ev, n, nu)?;
        all_match &= closed == direct;
        rows.push((nu, closed, direct));
    }
    if json_out {
        let row_values: Vec<serde_json::Value> = rows
            .iter()
            .map(|(nu, closed, direct)| {
                json!({
                    "class": nu.to_string(),
                    "closed": closed.to_string(),
                    "direct": direct.to_string(),
                    "match": closed == direct,
                })
            })
            .collect();
        if single {
            let only = row_values.into_iter().next().expect("one class requested");
            print_json(&json!({ "n": n, "result": only }));
        } else {
            print_json(&json!({ "n": n, "rows": row_values }));
        }
    } else {
        for (nu, closed, direct) in &rows {
            let body = if closed == direct {
                format!("{closed}")
            } else {
                format!("closed={closed} direct={direct} MISMATCH")
            };
            if single {
                println!("{body}");
            } else {
                println!("{nu} {body}");
            }
        }
    }
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_lambda(
    n: u32,
    k: u32,
    l: u32,
    class: Option<&str>,
    route: Route,
    json_out: bool,
) -> Result<ExitCode, Failure> {
    check_cap(n)?;
    let params = LambdaParams::new(n, k, l);
    let routes: &[Route] = match route {
        Route::All => &[Route::Product, Route::Skew, Route::Tableaux],
        _ => std::slice::from_ref(&route),
    };
    let mut ev = Evaluator::new();
    let classes: Vec<Partition> = match class {
        Some(class) => vec![class.parse()?],
        None => partitions_of(n),
    };
    let single = class.is_some();
    let mut rows = Vec::new();
    for nu in &classes {
        let mut values = Vec::new();
        for r in routes {
            let v = match r {
                Route::Product => snchar_core::regev::lambda_product(params, nu)?,
                Route::Skew => snchar_core::regev::lambda_via_skew(&mut ev, params, nu)?,
                Route::Tableaux => snchar_core::regev::lambda_via_tableaux(&mut ev, params, nu)?,
                Route::All => unreachable!("expanded above"),
            };
            values.push((*r, v));
        }
        rows.push((nu, values));
    }
    if json_out {
        let row_values: Vec<serde_json::Value> = rows
            .iter()
            .map(|(nu, values)| {
                let mut obj = serde_json::Map::new();
                obj.insert("class".to_string(), json!(nu.to_string()));
                let mut vals = serde_json::Map::new();
                for (r, v) in values {
                    vals.insert(route_name(*r).to_string(), json!(v.to_string()));
                }
                obj.insert("values".to_string(), serde_json::Value::Object(vals));
                serde_json::Value::Object(obj)
            })
            .collect();
        print_json(&json!({ "n": n, "k": k, "l": l, "rows": row_values }));
    } else {
        for (nu, values) in &rows {
            if single {
                // one value per line, routes in product/skew/tableaux order
                for (_, v) in values {
                    println!("{v}");
                }
            } else {
                let joined: Vec<String> = values.iter().map(|(_, v)| v.to_string()).collect();
                println!("{} {}", nu, joined.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn route_name(route: Route) -> &'static str {
    match route {
        Route::Product => "product",
        Route::Skew => "skew",
        Route::Tableaux => "tableaux",
        Route::All => "all",
    }
}

fn run_skl(
    shape: &str,
    k: u32,
    l: u32,
    weights: bool,
    dump: bool,
    json_out: bool,
) -> Result<ExitCode, Failure> {
    let alpha: Partition = shape.parse()?;
    check_cap(alpha.n())?;
    let ab = Alphabet::new(k, l);
    let total = s_kl(&alpha, &ab);
    if json_out {
        let mut obj = serde_json::Map::new();
        obj.insert("shape".to_string(), json!(alpha.to_string()));
        obj.insert("k".to_string(), json!(k));
        obj.insert("l".to_string(), json!(l));
        obj.insert("total".to_string(), json!(total.to_string()));
        if weights {
            let rows: Vec<serde_json::Value> = count_by_weight(&alpha, &ab)
                .iter()
                .map(|(w, c)| json!({"weight": w.to_string(), "count": c.to_string()}))
                .collect();
            obj.insert("weights".to_string(), serde_json::Value::Array(rows));
        }
        if dump {
            let ts: Vec<serde_json::Value> = tableaux(&alpha, &ab)
                .iter()
                .map(|t| json!(t.to_string()))
                .collect();
            obj.insert("tableaux".to_string(), serde_json::Value::Array(ts));
        }
        print_json(&serde_json::Value::Object(obj));
    } else {
        println!("{total}");
        if weights {
            for (w, c) in count_by_weight(&alpha, &ab) {
                println!("{w} {c}");
            }
        }
        if dump {
            for t in tableaux(&alpha, &ab) {
                println!("{t}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(suite: Suite, max_n: Option<u32>) -> Result<ExitCode, Failure> {
    let max_n = max_n.unwrap_or(suite.default_max_n());
    check_cap(max_n)?;
    let report: VerifyReport = match suite {
        Suite::Gamma => verify_gamma(max_n),
        Suite::Lambda => verify_lambda(max_n),
        Suite::Pieri => verify_pieri(max_n),
        Suite::Orthogonality => verify_orthogonality(max_n),
        Suite::BereleRegev => verify_berele_regev(max_n),
    }?;
    let rendered = serde_json::to_string_pretty(&report)
        .map_err(|e| Failure::new(1, format!("report serialization failed: {e}")))?;
    println!("{rendered}");
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_render(bicomp: &str, json_out: bool) -> Result<ExitCode, Failure> {
    let b: Bicomposition = bicomp.parse()?;
    check_cap(b.n())?;
    let shape = build_skew_for_bicomposition(&b);
    if json_out {
        let rendered = shape.render_ascii();
        let rows: Vec<serde_json::Value> = rendered.lines().map(|line| json!(line)).collect();
        print_json(&json!({
            "bicomp": b.to_string(),
            "outer": shape.outer().to_string(),
            "inner": shape.inner().to_string(),
            "rows": rows,
        }));
    } else {
        println!("{}", shape.render_ascii());
    }
    Ok(ExitCode::SUCCESS)
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON value serialization cannot fail")
    );
}

fn print_table_rows(table: &CharacterValueTable) {
    for (nu, v) in table.rows_desc_lex() {
        println!("{nu} {v}");
    }
}

fn table_rows_json(table: &CharacterValueTable) -> Vec<serde_json::Value> {
    table
        .rows_desc_lex()
        .map(|(nu, v): (&Partition, Int)| {
            json!({"class": nu.to_string(), "value": v.to_string()})
        })
        .collect()
}
