use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use quadtower::exactfield::rational::Rational;
use quadtower::symbols::{hilbert_symbol, relevant_places, Place};
use quadtower::tower::{self, TowerFragment};
use quadtower::twogroup::{catalog, FiniteTwoGroup, Perm};
use quadtower::{Error, Result};

#[derive(Parser)]
#[command(
    name = "quadtower",
    about = "Exact-arithmetic toolkit for quadratic extension towers, square-class groups and finite 2-group series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert symbols of a pair of nonzero rationals, per place
    Symbol {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// restrict to one place: "real" or a prime p
        #[arg(long)]
        place: Option<String>,
    },
    /// The descending square-commutator series of a finite 2-group
    Series {
        /// catalog name (e.g. "D4") or permutation generators in cycle
        /// notation, e.g. "(1 2 3 4),(1 3)"
        #[arg(long)]
        group: String,
    },
    /// Function-field square-class checks: trivial intersection and the
    /// injected-parity witness
    Example1,
    /// Run verification suites over a tower fragment
    Verify {
        /// lemmas | example1 | prop1 | prop2 | groups | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// fragment descriptor: "Q{2,-1}", "F3", "Q(i)(t)"
        #[arg(long, default_value = "Q{2,-1}")]
        fragment: String,
        /// write the full JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Symbol { a, b, place } => cmd_symbol(&a, &b, place.as_deref()),
        Command::Series { group } => cmd_series(&group),
        Command::Example1 => {
            let report = tower::function_field_suite()?;
            print_report(&report);
            Ok(report.all_pass())
        }
        Command::Verify {
            suite,
            fragment,
            json,
        } => cmd_verify(&suite, &fragment, json.as_deref()),
    }
}

fn parse_rational_arg(text: &str) -> Result<Rational> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Parse(format!("'{text}' is not a rational number")))
}

fn parse_place(text: &str) -> Result<Place> {
    if text.eq_ignore_ascii_case("real") {
        return Ok(Place::Real);
    }
    let p: u64 = text
        .parse()
        .map_err(|_| Error::Parse(format!("place must be 'real' or a prime, got '{text}'")))?;
    Ok(Place::Prime(p))
}

fn cmd_symbol(a: &str, b: &str, place: Option<&str>) -> Result<bool> {
    let ra = parse_rational_arg(a)?;
    let rb = parse_rational_arg(b)?;
    let places = match place {
        Some(p) => vec![parse_place(p)?],
        None => relevant_places(&ra, &rb)?,
    };
    let mut table = Vec::new();
    for v in places {
        let s = hilbert_symbol(&ra, &rb, v)?;
        table.push(json!({ "place": v.to_string(), "symbol": s }));
    }
    let out = json!({ "a": a, "b": b, "places": table });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(true)
}

/// Split "(1 2 3 4),(1 3)" into generator strings at top-level commas.
fn split_generators(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                if !current.trim().is_empty() {
                    out.push(current.trim().to_owned());
                }
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        out.push(current.trim().to_owned());
    }
    out
}

fn group_from_arg(arg: &str) -> Result<FiniteTwoGroup> {
    if !arg.contains('(') {
        return catalog::named_group(arg);
    }
    let gen_texts = split_generators(arg);
    let n = gen_texts
        .iter()
        .flat_map(|g| {
            g.split(|c: char| !c.is_ascii_digit())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().unwrap_or(0))
        })
        .max()
        .ok_or_else(|| Error::Parse("no generators given".to_owned()))?;
    let gens: Vec<Perm> = gen_texts
        .iter()
        .map(|g| Perm::from_cycles(g, n))
        .collect::<Result<_>>()?;
    FiniteTwoGroup::from_generators(n, &gens)
}

fn cmd_series(group: &str) -> Result<bool> {
    let g = group_from_arg(group)?;
    let report = g.tower_series()?;
    println!("group order {}", g.order());
    for level in &report.levels {
        println!(
            "level {}: subgroup order {}, quotient order {}, quotient exponent {}, quotient class {}",
            level.n,
            level.subgroup_order,
            level.quotient_order,
            level.quotient_exponent,
            level.quotient_class
        );
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&report.levels).expect("serializable")
    );
    Ok(true)
}

fn print_report(report: &tower::Report) {
    println!("suite {} ({} ms)", report.suite, report.elapsed_ms);
    for c in &report.checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        println!("  [{verdict}] {}: {}", c.check, c.detail);
    }
}

fn cmd_verify(suite: &str, fragment: &str, json_path: Option<&std::path::Path>) -> Result<bool> {
    let fragment = TowerFragment::parse(fragment)?;
    let reports = tower::run_suite(suite, &fragment)?;
    let mut all = true;
    for r in &reports {
        print_report(r);
        all &= r.all_pass();
    }
    if let Some(path) = json_path {
        let body = serde_json::to_string_pretty(&reports).expect("serializable");
        std::fs::write(path, body).map_err(|e| Error::Parse(format!("writing report: {e}")))?;
    }
    println!("{}", if all { "all checks passed" } else { "FAILURES present" });
    Ok(all)
}
