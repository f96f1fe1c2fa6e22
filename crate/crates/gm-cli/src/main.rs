//! `gmlat`: discriminant lattices of Gushel–Mukai fourfolds on the command
//! line — discriminant groups, Fourier–Mukai counts, twisted decompositions,
//! and range verification suites.
//!
//! Exit codes: 0 success, 1 verification-suite property failure,
//! 2 usage or input error.

mod report;
mod suites;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use gm_catalog::{gram_ld, marking_group};
use gm_counting::{twisted_report, untwisted_counts};
use gm_lattice::form::FiniteQuadraticForm;
use gm_lattice::json as shape;
use gm_lattice::DEFAULT_CANDIDATE_CAP;

use report::Report;
use suites::Suite;

#[derive(Parser)]
#[command(name = "gmlat", version, about = "Exact lattice checks for Gushel-Mukai fourfolds")]
struct Cli {
    /// Cap on short-vector enumeration work (exceeding it is an error).
    #[arg(long, global = true, default_value_t = DEFAULT_CANDIDATE_CAP)]
    max_candidates: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gram matrix and discriminant group of L_d, the marking-group
    /// generator, and its -id verification.
    Disc {
        d: u64,
        /// Embedding variant (2 exists only for d = 2 mod 8).
        #[arg(long, default_value_t = 1)]
        variant: u8,
        #[arg(long)]
        json: bool,
    },
    /// Untwisted Fourier-Mukai partner and fiber counts for discriminant d.
    Count {
        d: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Square decompositions d' = d r^2 and twisted counts.
    Twisted {
        d_prime: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Also list the untwisted r = 1 slot.
        #[arg(long)]
        include_r1: bool,
    },
    /// Run a verification suite over a discriminant range.
    Verify {
        range_start: u64,
        range_end: u64,
        /// One of: disc-structure | marking-group | glue-extension |
        /// k3-association | surjectivity | mukai
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    // Die quietly on SIGPIPE (e.g. when piped into `head`) instead of
    // panicking on a failed stdout write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Disc { d, variant, json } => cmd_disc(d, variant, json, cli.max_candidates),
        Command::Count { d, json, csv } => cmd_count(d, json, csv),
        Command::Twisted { d_prime, json, csv, include_r1 } => {
            cmd_twisted(d_prime, json, csv, include_r1)
        }
        Command::Verify { range_start, range_end, suite, json } => {
            cmd_verify(range_start, range_end, &suite, json, cli.max_candidates)
        }
    };
    std::process::exit(code);
}

fn fail(cmd: &str, inputs: Value, msg: String, json: bool) -> i32 {
    if json {
        println!("{}", Report::error(cmd, inputs, msg).to_json());
    } else {
        eprintln!("error: {msg}");
    }
    2
}

fn render_rat_text(r: &gm_lattice::Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn cmd_disc(d: u64, variant: u8, json: bool, cap: usize) -> i32 {
    let inputs = json!({ "d": d, "variant": variant });
    let lattice = match gram_ld(d, variant) {
        Ok(l) => l,
        Err(e) => return fail("disc", inputs, e.to_string(), json),
    };
    let form = FiniteQuadraticForm::of(&lattice);
    let group = match marking_group(d, variant, cap) {
        Ok(g) => g,
        Err(e) => return fail("disc", inputs, e.to_string(), json),
    };
    let gamma = &group[1];
    let action = gamma.disc_action(&form).expect("marking group acts on Disc(L_d)");
    let minus_id_verdict = action.is_minus_identity();

    if json {
        let results = json!({
            "lattice": shape::lattice_value(&lattice),
            "disc": shape::form_value(&form),
            "marking_group_order": group.len(),
            "gamma_prime": shape::matrix_value(gamma.matrix()),
            "acts_as_minus_id": minus_id_verdict,
        });
        println!("{}", Report::ok("disc", inputs, results).to_json());
    } else {
        println!("L_{d} (variant {variant})");
        println!("gram:");
        for i in 0..lattice.rank() {
            let row: Vec<String> =
                (0..lattice.rank()).map(|j| lattice.gram()[(i, j)].to_string()).collect();
            println!("  [ {} ]", row.join(" "));
        }
        let factors: Vec<String> =
            form.invariant_factors().iter().map(|f| format!("Z/{f}")).collect();
        if factors.is_empty() {
            println!("disc group: trivial");
        } else {
            println!("disc group: {} (order {})", factors.join(" + "), form.order());
        }
        for (i, g) in form.generators().iter().enumerate() {
            let coords: Vec<String> = g.iter().map(render_rat_text).collect();
            let value = match form.q_values() {
                Some(qs) => format!("q = {}", render_rat_text(&qs[i])),
                None => format!(
                    "b = {}",
                    render_rat_text(&form.b_matrix()[(i, i)])
                ),
            };
            println!("  generator {}: ({})  {}", i + 1, coords.join(", "), value);
        }
        println!("G'(L_{d}) order: {}", group.len());
        println!("gamma' rows:");
        for i in 0..3 {
            let row: Vec<String> = (0..3).map(|j| gamma.matrix()[(i, j)].to_string()).collect();
            println!("  [ {} ]", row.join(" "));
        }
        println!("acts as -id on Disc(L_{d}): {}", if minus_id_verdict { "PASS" } else { "FAIL" });
    }
    0
}

fn cmd_count(d: u64, json: bool, csv: bool) -> i32 {
    let inputs = json!({ "d": d });
    let rep = match untwisted_counts(d) {
        Ok(r) => r,
        Err(e) => return fail("count", inputs, e.to_string(), json),
    };
    if json {
        let results = json!({
            "d": rep.d,
            "satisfies_star_star": rep.satisfies_star_star,
            "tau": rep.tau,
            "m": rep.m,
            "fiber_count": rep.fiber_count,
            "multiplicity_factor": rep.multiplicity_factor,
        });
        println!("{}", Report::ok("count", inputs, results).to_json());
    } else if csv {
        println!("d,satisfies_star_star,tau,m,fiber_count,multiplicity_factor");
        println!(
            "{},{},{},{},{},{}",
            rep.d, rep.satisfies_star_star, rep.tau, rep.m, rep.fiber_count, rep.multiplicity_factor
        );
    } else {
        println!("d = {}: (**) holds, tau = {}", rep.d, rep.tau);
        println!("FM partners of the associated K3: m = {}", rep.m);
        println!(
            "fibers with FM-partner elements: {} ({} map)",
            rep.fiber_count,
            if rep.multiplicity_factor == 1 { "birational" } else { "two-to-one" }
        );
    }
    0
}

fn cmd_twisted(d_prime: u64, json: bool, csv: bool, include_r1: bool) -> i32 {
    let inputs = json!({ "d_prime": d_prime, "include_r1": include_r1 });
    if d_prime == 0 {
        return fail("twisted", inputs, "d' must be positive".into(), json);
    }
    let rep = twisted_report(d_prime, include_r1);
    if json {
        let decs: Vec<Value> = rep
            .decompositions
            .iter()
            .map(|dc| {
                json!({
                    "d": dc.d,
                    "r": dc.r,
                    "m_prime": dc.counts.as_ref().map(|c| c.m_prime),
                    "fiber_lower_bound": dc.counts.as_ref().map(|c| c.fiber_lower_bound),
                    "note": dc.note,
                })
            })
            .collect();
        let results = json!({
            "d_prime": rep.d_prime,
            "satisfies_star_star_prime": rep.satisfies_star_star_prime,
            "decompositions": decs,
        });
        println!("{}", Report::ok("twisted", inputs, results).to_json());
    } else if csv {
        println!("d_prime,satisfies_star_star_prime,d,r,m_prime,fiber_lower_bound,note");
        if rep.decompositions.is_empty() {
            println!("{},{},,,,,", rep.d_prime, rep.satisfies_star_star_prime);
        }
        for dc in &rep.decompositions {
            println!(
                "{},{},{},{},{},{},{}",
                rep.d_prime,
                rep.satisfies_star_star_prime,
                dc.d,
                dc.r,
                dc.counts.as_ref().map_or(String::new(), |c| c.m_prime.to_string()),
                dc.counts.as_ref().map_or(String::new(), |c| c.fiber_lower_bound.to_string()),
                dc.note.as_deref().unwrap_or(""),
            );
        }
    } else {
        println!(
            "d' = {}: (**') {}",
            rep.d_prime,
            if rep.satisfies_star_star_prime { "holds" } else { "fails" }
        );
        if rep.decompositions.is_empty() {
            println!("no decompositions d' = d r^2 with d satisfying (**) and r >= 2");
        }
        for dc in &rep.decompositions {
            match (&dc.counts, &dc.note) {
                (Some(c), _) => println!(
                    "  d = {}, r = {}: m' = {}, fibers >= {}",
                    dc.d, dc.r, c.m_prime, c.fiber_lower_bound
                ),
                (None, Some(note)) => println!("  d = {}, r = {}: {}", dc.d, dc.r, note),
                _ => unreachable!(),
            }
        }
    }
    0
}

fn cmd_verify(start: u64, end: u64, suite_name: &str, json: bool, cap: usize) -> i32 {
    let inputs = json!({ "range_start": start, "range_end": end, "suite": suite_name });
    let Some(suite) = Suite::parse(suite_name) else {
        return fail(
            "verify",
            inputs,
            format!("unknown suite '{suite_name}'; expected one of: {}", Suite::all_names()),
            json,
        );
    };
    if start > end {
        return fail("verify", inputs, format!("empty range {start}..{end}"), json);
    }
    if end > suite.max_d() {
        return fail(
            "verify",
            inputs,
            format!("suite {} is bounded at d <= {}, got {end}", suite.name(), suite.max_d()),
            json,
        );
    }
    let results = suites::run_suite(suite, start, end, cap);
    let failures = results.iter().filter(|c| !c.pass).count();
    if json {
        let cases: Vec<Value> = results
            .iter()
            .map(|c| json!({ "case": c.label, "pass": c.pass, "detail": c.detail }))
            .collect();
        let payload = json!({
            "suite": suite.name(),
            "cases": cases,
            "total": results.len(),
            "failures": failures,
        });
        println!("{}", Report::ok("verify", inputs, payload).to_json());
    } else {
        for c in &results {
            println!("{} {} {}", c.label, if c.pass { "PASS" } else { "FAIL" }, c.detail);
        }
        println!(
            "suite {}: {}/{} pass",
            suite.name(),
            results.len() - failures,
            results.len()
        );
    }
    if failures > 0 {
        1
    } else {
        0
    }
}
