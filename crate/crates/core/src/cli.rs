//! The `catdeg` command line.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or validation errors. Text output is the default; `--json` switches every
//! subcommand to a stable JSON document.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::block::{
    atoms, catenary_set_sample_with, factorizations_block, theorem_fullset_witness,
};
use crate::catenary::{
    betti_elements, catenary_degree, catenary_set_scan, sandwich_with, BettiReport,
};
use crate::factorization::{delta_set_monoid, factorizations};
use crate::families::{arithmetic_family, largecat_family, unique_betti_family, FamilyPrediction};
use crate::monoid::NumericalMonoid;
use crate::output::{scan_records, to_csv, to_svg};
use crate::verify::{default_window, run_suite, VerifyOptions, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "CATDEG_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "catdeg",
    version,
    about = "Catenary degrees and factorization invariants of numerical and block monoids"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators, Frobenius number, Apéry set and Betti elements.
    Info {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Catenary degree of one element: GENERATORS... ELEMENT.
    Catenary {
        #[arg(num_args = 2.., required = true, allow_negative_numbers = true)]
        values: Vec<i64>,
    },
    /// All factorizations of one element: GENERATORS... ELEMENT.
    Factorize {
        #[arg(num_args = 2.., required = true, allow_negative_numbers = true)]
        values: Vec<i64>,
    },
    /// Delta set of the monoid over a window, or of one element.
    Delta {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
        /// Window end (default F(S) + 2 n_k + 200).
        #[arg(long)]
        to: Option<i64>,
        /// Report the length and delta set of this element instead.
        #[arg(long)]
        element: Option<i64>,
    },
    /// Betti elements with their factorizations and catenary degrees.
    Betti {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Catenary degrees of every element up to a window end.
    Scan {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
        /// Window end (default F(S) + 2 n_k + 200).
        #[arg(long)]
        to: Option<i64>,
        /// Write `element,catenary,num_factorizations,is_betti` rows here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write a scatter plot here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Block monoid of the cyclic group of order N.
    Block {
        order: usize,
        /// Build the sequence with catenary degree J.
        #[arg(long, conflicts_with = "sample")]
        witness: Option<usize>,
        /// Catenary degrees of all zero-sum sequences up to length L.
        #[arg(long)]
        sample: Option<u64>,
    },
    /// A family monoid with its predicted and computed invariants.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Run the verification harness.
    Verify {
        #[arg(long, default_value = "paper", value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Largest k for the <2k+1, 6k-5, 6k-1> family.
        #[arg(long, default_value_t = 8)]
        k_max: i64,
        /// Random monoids in the sandwich sweep.
        #[arg(long, default_value_t = 20)]
        monoids: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// <k, k+(c-2), ..., k+(k-1)(c-2)>.
    Arithmetic { k: i64, c: i64 },
    /// <2k+1, 6k-5, 6k-1>.
    Largecat { k: i64 },
    /// <P/p_k, ..., P/p_1> for distinct primes p_1 < ... < p_k.
    UniqueBetti {
        #[arg(required = true)]
        primes: Vec<i64>,
    },
}

/// Errors that map to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    exit: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            exit: EXIT_OK,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(output) => {
            let _ = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&output.json).unwrap()
                )
            } else {
                write!(out, "{}", output.text)
            };
            output.exit
        }
        Err(UsageError(msg)) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "error": msg }));
            }
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Applies the `CATDEG_THREADS` cap to the global worker pool.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn execute(command: &Command) -> Result<Output, UsageError> {
    match command {
        Command::Info { generators } => info(generators),
        Command::Catenary { values } => {
            let (s, n) = split_element(values)?;
            catenary(&s, n)
        }
        Command::Factorize { values } => {
            let (s, n) = split_element(values)?;
            factorize(&s, n)
        }
        Command::Delta {
            generators,
            to,
            element,
        } => delta(&NumericalMonoid::new(generators)?, *to, *element),
        Command::Betti { generators } => {
            let s = NumericalMonoid::new(generators)?;
            let report = betti_elements(&s);
            let mut text = format!("S = {s}\n");
            text.push_str(&betti_text(&report));
            Ok(Output::ok(text, betti_json(&report)))
        }
        Command::Scan {
            generators,
            to,
            csv,
            svg,
        } => scan(
            &NumericalMonoid::new(generators)?,
            *to,
            csv.as_ref(),
            svg.as_ref(),
        ),
        Command::Block {
            order,
            witness,
            sample,
        } => block(*order, *witness, *sample),
        Command::Family { family } => family_cmd(family),
        Command::Verify {
            suite,
            k_max,
            monoids,
            seed,
        } => {
            let mut options = VerifyOptions {
                k_max: *k_max,
                random_monoids: *monoids,
                ..VerifyOptions::default()
            };
            if let Some(seed) = seed {
                options.seed = *seed;
            }
            verify(suite, &options)
        }
    }
}

fn split_element(values: &[i64]) -> Result<(NumericalMonoid, i64), UsageError> {
    let (&n, gens) = values
        .split_last()
        .ok_or_else(|| UsageError("expected generators followed by an element".into()))?;
    Ok((NumericalMonoid::new(gens)?, n))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn betti_text(report: &BettiReport) -> String {
    let mut text = format!(
        "Betti elements (complete up to {}): {}\n",
        report.search_bound,
        report.betti.len()
    );
    for r in &report.betti {
        text.push_str(&format!(
            "  {:>8}  c = {:<4} components = {:<3} Z = {{{}}}\n",
            r.element,
            r.catenary,
            r.components,
            join(r.factorizations.iter())
        ));
    }
    text
}

fn betti_json(report: &BettiReport) -> Value {
    json!({
        "generators": report.monoid.generators(),
        "search_bound": report.search_bound,
        "betti": report.betti.iter().map(|r| json!({
            "element": r.element,
            "catenary": r.catenary,
            "components": r.components,
            "factorizations": r.factorizations.factorizations(),
        })).collect::<Vec<_>>(),
    })
}

fn info(generators: &[i64]) -> Result<Output, UsageError> {
    let s = NumericalMonoid::new(generators)?;
    let report = betti_elements(&s);
    let text = format!(
        "S = {s}\nembedding dimension: {}\nFrobenius number: {}\nApéry set (mod {}): {{{}}}\n{}",
        s.embedding_dimension(),
        s.frobenius(),
        s.multiplicity(),
        join(s.apery()),
        betti_text(&report)
    );
    let json = json!({
        "generators": s.generators(),
        "embedding_dimension": s.embedding_dimension(),
        "frobenius": s.frobenius(),
        "apery": s.apery(),
        "betti_search_bound": report.search_bound,
        "betti": report.elements(),
        "betti_catenary": report.catenary_degrees(),
    });
    Ok(Output::ok(text, json))
}

fn catenary(s: &NumericalMonoid, n: i64) -> Result<Output, UsageError> {
    let z = factorizations(s, n)?;
    let c = catenary_degree(&z)?;
    let range = z.distance_range();
    let mut text = format!("S = {s}, n = {n}\n|Z(n)| = {}\n", z.len());
    for f in &z {
        text.push_str(&format!("  {f}  length {}\n", f.length()));
    }
    if let Some((lo, hi)) = range {
        text.push_str(&format!("pairwise distance: min {lo}, max {hi}\n"));
    }
    text.push_str(&format!("catenary degree: {c}\n"));
    let json = json!({
        "generators": s.generators(),
        "element": n,
        "factorizations": z.factorizations(),
        "num_factorizations": z.len(),
        "min_distance": range.map(|r| r.0),
        "max_distance": range.map(|r| r.1),
        "catenary": c,
    });
    Ok(Output::ok(text, json))
}

fn factorize(s: &NumericalMonoid, n: i64) -> Result<Output, UsageError> {
    let z = factorizations(s, n)?;
    let mut text = format!("S = {s}, n = {n}\n|Z(n)| = {}\n", z.len());
    for f in &z {
        text.push_str(&format!("  {f}  length {}\n", f.length()));
    }
    let lengths = z.length_set().ok();
    if let Some(l) = &lengths {
        text.push_str(&format!("length set: {{{}}}\n", join(l)));
    }
    let json = json!({
        "generators": s.generators(),
        "element": n,
        "factorizations": z.factorizations(),
        "lengths": lengths,
    });
    Ok(Output::ok(text, json))
}

fn delta(s: &NumericalMonoid, to: Option<i64>, element: Option<i64>) -> Result<Output, UsageError> {
    if let Some(n) = element {
        let z = factorizations(s, n)?;
        let lengths = z.length_set()?;
        let deltas = z.delta_set()?;
        let text = format!(
            "S = {s}, n = {n}\nlength set: {{{}}}\ndelta set: {{{}}}\n",
            join(&lengths),
            join(&deltas)
        );
        let json = json!({
            "generators": s.generators(),
            "element": n,
            "lengths": lengths,
            "delta": deltas,
        });
        return Ok(Output::ok(text, json));
    }
    let window = to.unwrap_or_else(|| default_window(s));
    let deltas = delta_set_monoid(s, window);
    let text = format!(
        "S = {s}\ndelta set over [0, {window}]: {{{}}}\n",
        join(&deltas)
    );
    let json = json!({
        "generators": s.generators(),
        "window": window,
        "delta": deltas,
    });
    Ok(Output::ok(text, json))
}

fn scan(
    s: &NumericalMonoid,
    to: Option<i64>,
    csv: Option<&PathBuf>,
    svg: Option<&PathBuf>,
) -> Result<Output, UsageError> {
    let window = to.unwrap_or_else(|| default_window(s));
    if window < 0 {
        return Err(UsageError(format!("window end {window} is negative")));
    }
    let result = catenary_set_scan(s, window);
    let report = betti_elements(s);
    let records = scan_records(&result, &report);
    if let Some(path) = csv {
        fs::write(path, to_csv(&records))
            .map_err(|e| UsageError(format!("writing {}: {e}", path.display())))?;
    }
    if let Some(path) = svg {
        fs::write(path, to_svg(s, &records))
            .map_err(|e| UsageError(format!("writing {}: {e}", path.display())))?;
    }
    let mut checked = 0usize;
    let mut passed = 0usize;
    for (&n, &c) in &result.per_element {
        if c > 0 {
            checked += 1;
            if sandwich_with(s, &report, n, c)
                .map(|r| r.ok)
                .unwrap_or(false)
            {
                passed += 1;
            }
        }
    }
    let text = format!(
        "S = {s}, window [0, {window}]\ncatenary set: {{{}}}\nmin nonzero: {}\nmax: {}\nBetti elements: {{{}}}\nsandwich bound holds at {passed}/{checked} elements\n",
        join(&result.cset),
        result.min_nonzero().map_or("none".to_string(), |m| m.to_string()),
        result.max(),
        join(report.elements()),
    );
    let json = json!({
        "generators": s.generators(),
        "window": window,
        "cset": result.cset,
        "min_nonzero": result.min_nonzero(),
        "max": result.max(),
        "betti": report.elements(),
        "sandwich_checked": checked,
        "sandwich_passed": passed,
        "csv": csv.map(|p| p.display().to_string()),
        "svg": svg.map(|p| p.display().to_string()),
    });
    Ok(Output::ok(text, json))
}

fn block(order: usize, witness: Option<usize>, sample: Option<u64>) -> Result<Output, UsageError> {
    let table = atoms(order)?;
    let mut text = format!("B(Z_{order}): {} atoms\n", table.len());
    let mut json = json!({ "order": order, "atom_count": table.len() });
    if let Some(j) = witness {
        let a = theorem_fullset_witness(order, j)?;
        let z = factorizations_block(&table, &a)?;
        let c = catenary_degree(&z)?;
        let rendered: Vec<Vec<String>> = z
            .iter()
            .map(|f| {
                f.counts()
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &m)| {
                        std::iter::repeat_n(table.atoms()[i].to_string(), m as usize)
                    })
                    .collect()
            })
            .collect();
        text.push_str(&format!("witness j = {j}: A = {a}\n|Z(A)| = {}\n", z.len()));
        for atoms in &rendered {
            text.push_str(&format!("  {}\n", atoms.join(" * ")));
        }
        text.push_str(&format!("catenary degree: {c}\n"));
        json["witness"] = json!({
            "j": j,
            "sequence": a.multiplicity(),
            "factorizations": rendered,
            "num_factorizations": z.len(),
            "catenary": c,
        });
    }
    if witness.is_none() || sample.is_some() {
        let max_length = sample.unwrap_or(2 * order as u64);
        let cset = catenary_set_sample_with(&table, max_length)?;
        text.push_str(&format!(
            "catenary degrees of zero-sum sequences of length <= {max_length}: {{{}}}\n",
            join(&cset)
        ));
        json["sample"] = json!({ "max_length": max_length, "cset": cset });
    }
    Ok(Output::ok(text, json))
}

fn family_cmd(family: &FamilyCommand) -> Result<Output, UsageError> {
    let prediction: FamilyPrediction = match family {
        FamilyCommand::Arithmetic { k, c } => arithmetic_family(*k, *c)?,
        FamilyCommand::Largecat { k } => largecat_family(*k)?,
        FamilyCommand::UniqueBetti { primes } => unique_betti_family(primes)?,
    };
    let s = &prediction.monoid;
    let report = betti_elements(s);
    let scan = catenary_set_scan(s, default_window(s));
    let special: Vec<Value> = prediction
        .special_elements
        .iter()
        .map(|e| {
            let z = factorizations(s, e.element).expect("family elements are nonnegative");
            json!({
                "element": e.element,
                "predicted_catenary": e.catenary,
                "catenary": catenary_degree(&z).ok(),
                "predicted_factorizations": e.factorization_count,
                "num_factorizations": z.len(),
            })
        })
        .collect();
    let predicted: Vec<u64> = prediction.predicted_cset_members.iter().copied().collect();
    let text = format!(
        "{}: S = {s}\npredicted catenary set {}: {{{}}}\ncomputed catenary set on [0, {}]: {{{}}}\nBetti elements: {{{}}} with catenary degrees {{{}}}\n{}",
        prediction.name,
        if prediction.cset_is_exact { "(exact)" } else { "(members)" },
        join(&predicted),
        scan.window,
        join(&scan.cset),
        join(report.elements()),
        join(report.catenary_degrees()),
        special
            .iter()
            .map(|v| format!(
                "  s = {}: c = {} (predicted {}), |Z| = {} (predicted {})\n",
                v["element"], v["catenary"], v["predicted_catenary"], v["num_factorizations"], v["predicted_factorizations"]
            ))
            .collect::<String>()
    );
    let json = json!({
        "name": prediction.name,
        "generators": s.generators(),
        "predicted_cset": predicted,
        "cset_is_exact": prediction.cset_is_exact,
        "predicted_betti": prediction.predicted_betti,
        "window": scan.window,
        "cset": scan.cset,
        "betti": report.elements(),
        "betti_catenary": report.catenary_degrees(),
        "special_elements": special,
    });
    Ok(Output::ok(text, json))
}

fn verify(suite: &str, options: &VerifyOptions) -> Result<Output, UsageError> {
    let outcomes = run_suite(suite, options)?;
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut text = String::new();
    for o in &outcomes {
        text.push_str(&format!(
            "[{}] {:<26} {} ({})\n",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.claim,
            o.detail
        ));
    }
    text.push_str(&format!(
        "{} checks, {} passed, {failed} failed\n",
        outcomes.len(),
        outcomes.len() - failed
    ));
    let json = json!({
        "suite": suite,
        "checks": outcomes,
        "passed": outcomes.len() - failed,
        "failed": failed,
    });
    Ok(Output {
        text,
        json,
        exit: if failed == 0 {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
    })
}
