//! Command-line interface: cuspidal orders, decompositions, geometry
//! queries, the elimination criterion, and reference-table checks.
//!
//! All JSON output renders numbers as decimal strings and fixes the
//! field order, so identical inputs produce byte-identical documents.

use clap::{Parser, Subcommand};
use modcurve::cuspidal::h0;
use modcurve::geometry::cusps::cusp_set;
use modcurve::geometry::curve_data;
use modcurve::geometry::point_count::point_count;
use modcurve::lvalues::winding_flags;
use modcurve::modsym::{decompose, SymbolSpace};
use modcurve::pipeline::{
    check_decomposition_table, check_order_table, evaluate_criterion, report_json, Cache,
    FinalVerdict, RowCheck,
};
use modcurve::Result;

#[derive(Parser)]
#[command(
    name = "modcurve",
    version,
    about = "Exact computations on the modular curves X0(N) and their Jacobians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order of the cuspidal subgroup of J0(N) for a square-free level
    H0 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Decomposition of J0(N) into simple pieces with central-value flags
    Decompose {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Index, elliptic-point counts, cusp count, and genus of X0(N)
    Genus {
        #[arg(long)]
        n: u64,
    },
    /// Cusp classes of X0(N) with widths and field degrees
    Cusps {
        #[arg(long)]
        n: u64,
    },
    /// Number of points of X0(N) over the field with p^r elements
    Points {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
    },
    /// Elimination criterion for a (level, prime) pair
    Criterion {
        #[arg(long)]
        n: u64,
        /// Prime to test (default 3)
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Check an embedded reference table (1 = orders, 2 = decompositions)
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::H0 { n, json } => run_h0(n, json),
        Command::Decompose { n, json } => run_decompose(n, json),
        Command::Genus { n } => run_genus(n),
        Command::Cusps { n } => run_cusps(n),
        Command::Points { n, p, r } => run_points(n, p, r),
        Command::Criterion { n, p, json } => run_criterion(n, p.unwrap_or(3), json),
        Command::Tables { which, json } => run_tables(which, json),
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn string_array<I: IntoIterator<Item = String>>(items: I) -> String {
    let quoted: Vec<String> = items.into_iter().map(|s| quote(&s)).collect();
    format!("[{}]", quoted.join(","))
}

fn factored(factors: &[(u64, u32)]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn run_h0(n: u64, json: bool) -> Result<i32> {
    let order = h0(n)?;
    if json {
        let pars = &order.parameters;
        println!(
            "{{\"version\":\"1\",\"level\":{},\"order\":{},\"factored\":{},\
             \"parameters\":{{\"primes\":{},\"gcd12\":{},\"a2\":{},\"a3\":{}}}}}",
            quote(&n.to_string()),
            quote(&order.value.to_string()),
            quote(&factored(&order.factors)),
            string_array(pars.primes.iter().map(u64::to_string)),
            quote(&pars.gcd12.to_string()),
            quote(&pars.a2.to_string()),
            quote(&pars.a3.to_string()),
        );
    } else {
        let pars = &order.parameters;
        println!("h0({n}) = {} = {}", order.value, factored(&order.factors));
        println!(
            "parameters: primes {:?}, gcd12 {}, a2 {}, a3 {}",
            pars.primes, pars.gcd12, pars.a2, pars.a3
        );
    }
    Ok(0)
}

fn run_decompose(n: u64, json: bool) -> Result<i32> {
    let space = SymbolSpace::new(n)?;
    let dec = decompose(n)?;
    let flags = winding_flags(&space, &dec)?;
    let flag_mark = |b: bool| if b { "T" } else { "F" };
    if json {
        let pieces: Vec<String> = dec
            .factors
            .iter()
            .zip(&flags.flags)
            .map(|(f, &flag)| {
                format!(
                    "{{\"new_level\":{},\"dimension\":{},\"multiplicity\":{},\"flag\":{}}}",
                    quote(&f.new_level.to_string()),
                    quote(&f.dimension.to_string()),
                    quote(&f.multiplicity.to_string()),
                    quote(flag_mark(flag)),
                )
            })
            .collect();
        println!(
            "{{\"version\":\"1\",\"level\":{},\"genus\":{},\"pieces\":[{}],\
             \"dims\":{},\"flags\":{}}}",
            quote(&n.to_string()),
            quote(&dec.genus.to_string()),
            pieces.join(","),
            string_array(dec.flattened_dimensions().iter().map(u64::to_string)),
            string_array(flags.expanded(&dec).iter().map(|&b| flag_mark(b).to_string())),
        );
    } else {
        println!("X0({n}): genus {}, {} pieces", dec.genus, dec.factor_count());
        for (f, &flag) in dec.factors.iter().zip(&flags.flags) {
            println!(
                "  level {} dim {} x{} flag {}",
                f.new_level,
                f.dimension,
                f.multiplicity,
                flag_mark(flag)
            );
        }
        let dims: Vec<String> =
            dec.flattened_dimensions().iter().map(u64::to_string).collect();
        let marks: Vec<&str> =
            flags.expanded(&dec).iter().map(|&b| flag_mark(b)).collect();
        println!("flattened: dims [{}] flags [{}]", dims.join(","), marks.join(","));
    }
    Ok(0)
}

fn run_genus(n: u64) -> Result<i32> {
    let data = curve_data(n)?;
    println!(
        "X0({n}): index {}, nu2 {}, nu3 {}, cusps {}, genus {}",
        data.index, data.nu2, data.nu3, data.nu_infinity, data.genus
    );
    Ok(0)
}

fn run_cusps(n: u64) -> Result<i32> {
    let cusps = cusp_set(n)?;
    println!("X0({n}): {} cusp classes", cusps.classes.len());
    for class in &cusps.classes {
        println!(
            "  {}/{} width {} degree {}",
            class.representative.numerator(),
            class.representative.denominator(),
            class.width,
            class.field_degree
        );
    }
    Ok(0)
}

fn run_points(n: u64, p: u64, r: u32) -> Result<i32> {
    let count = point_count(n, p, r)?;
    println!("#X0({n}) over F_{{{p}^{r}}} = {count}");
    Ok(0)
}

fn run_criterion(n: u64, p: u64, json: bool) -> Result<i32> {
    let report = evaluate_criterion(n, p)?;
    if json {
        println!("{}", report_json(&report));
    } else {
        println!("criterion for level {n} at prime {p}");
        for c in &report.conditions {
            let inputs: Vec<String> =
                c.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("  {:<11} {} ({})", c.verdict.label(), c.name, inputs.join(", "));
        }
        println!("verdict: {}", report.verdict.label());
    }
    Ok(match report.verdict {
        FinalVerdict::Eliminated => 0,
        FinalVerdict::NotEstablished => 2,
    })
}

fn run_tables(which: u8, json: bool) -> Result<i32> {
    let checks = match which {
        1 => check_order_table()?,
        _ => check_decomposition_table(&Cache::from_env())?,
    };
    let all_pass = checks.iter().all(|c| c.pass);
    if json {
        let rows: Vec<String> = checks.iter().map(row_json).collect();
        println!(
            "{{\"version\":\"1\",\"table\":{},\"rows\":[{}],\"pass\":{}}}",
            quote(&which.to_string()),
            rows.join(","),
            quote(if all_pass { "true" } else { "false" }),
        );
    } else {
        for c in &checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            println!("{status} level {}: computed {} expected {}", c.level, c.computed, c.expected);
        }
        println!("table {which}: {}", if all_pass { "all rows match" } else { "MISMATCH" });
    }
    Ok(if all_pass { 0 } else { 2 })
}

fn row_json(c: &RowCheck) -> String {
    format!(
        "{{\"level\":{},\"expected\":{},\"computed\":{},\"pass\":{}}}",
        quote(&c.level.to_string()),
        quote(&c.expected),
        quote(&c.computed),
        quote(if c.pass { "true" } else { "false" }),
    )
}
