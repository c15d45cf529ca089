mod parse;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use nonsep_core::netmap::{degree_report_with, DegreeReport};
use nonsep_core::nonsep::search_group_with;
use nonsep_core::verify::{self, Suite};
use nonsep_core::{
    constant_pullback_from_lattice, lattice_quotient, set_size_bound, NonsepChecker,
    SearchOptions, SearchReport, Sublattice, DEFAULT_SIZE_BOUND,
};

#[derive(Parser)]
#[command(name = "nonsep", version, about = "Nonseparating subsets of Z/a + Z/b and NET map degree reports")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, env = "NONSEP_SIZE_BOUND", default_value_t = DEFAULT_SIZE_BOUND,
          value_parser = clap::value_parser!(u64).range(4..=(1 << 31)))]
    size_bound: u64,
    /// Print nothing; only the exit status is meaningful.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// Omit elapsed times so output is reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Scan every H-set instead of one per class orbit.
    #[arg(long, global = true)]
    full: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether four pair classes form a nonseparating set.
    Check {
        /// Group as `a,b`; normalized to invariant factors.
        #[arg(long)]
        group: String,
        /// Class representatives `x,y;x,y;x,y;x,y` in invariant-factor coordinates.
        #[arg(long = "h")]
        h: String,
    },
    /// Exhaustively search a group for nonseparating sets.
    Search {
        #[arg(long)]
        group: String,
    },
    /// List orbit representatives and orbit sizes of nonseparating sets.
    Classify {
        #[arg(long)]
        group: String,
    },
    /// Report whether some NET map of degree d can have constant pullback.
    Degree { d: u64 },
    /// Quotient Z^2 / 2L for the lattice spanned by the columns of a matrix.
    Lattice {
        /// Row-major entries `m00,m01,m10,m11`.
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        /// Points `x,y;...` of Z^2 to project and test.
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
    },
    /// Run a built-in verification suite: examples, appendix or theorems.
    Verify { suite: String },
}

struct Output {
    code: u8,
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = &cli.opts;
    match run(&cli) {
        Ok(out) => {
            if !opts.quiet {
                if opts.json {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("json values serialize"));
                } else {
                    print!("{}", out.text);
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if !opts.quiet {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let opts = &cli.opts;
    set_size_bound(opts.size_bound)?;
    let search = SearchOptions { jobs: opts.jobs.map(|j| j as usize), symmetry_reduced: !opts.full };
    match &cli.command {
        Command::Check { group, h } => check(group, h),
        Command::Search { group } => {
            let g = parse::group(group)?;
            let r = search_group_with(&g, &search)?;
            Ok(search_output(&r, opts, false))
        }
        Command::Classify { group } => {
            let g = parse::group(group)?;
            let r = search_group_with(&g, &search)?;
            Ok(search_output(&r, opts, true))
        }
        Command::Degree { d } => {
            let r = degree_report_with(*d, &search)?;
            Ok(degree_output(&r, opts))
        }
        Command::Lattice { matrix, points } => lattice(matrix, points.as_deref()),
        Command::Verify { suite } => run_verify(suite),
    }
}

fn check(group: &str, h: &str) -> Result<Output> {
    let g = parse::group(group)?;
    let h = parse::hset(&g, h)?;
    let v = NonsepChecker::new(&g)?.check(&h);
    let mut text = format!("group: {g}\nH: {h}\n");
    match &v.witness {
        None => text.push_str("verdict: nonseparating\n"),
        Some(w) => {
            text.push_str("verdict: separating\n");
            text.push_str(&format!("witness: {}\ncoset numbers: {}\n", w.context, w.coset_numbers));
        }
    }
    Ok(Output {
        code: if v.nonseparating { 0 } else { 1 },
        text,
        json: json!({
            "group": g,
            "hset": parse::element_list(&h),
            "nonseparating": v.nonseparating,
            "witness": v.witness,
        }),
    })
}

fn search_json(r: &SearchReport, opts: &GlobalOpts) -> Value {
    let mut v = serde_json::to_value(r).expect("reports serialize");
    if !opts.no_timing {
        v["elapsed_ms"] = json!(r.elapsed.as_secs_f64() * 1e3);
    }
    v
}

fn search_text(r: &SearchReport, opts: &GlobalOpts, table: bool) -> String {
    let mut s = format!(
        "group: {} (order {})\nH-sets scanned: {}{}\n",
        r.group,
        r.group.order(),
        r.hsets_scanned,
        if r.symmetry_reduced { " (one per class orbit)" } else { "" }
    );
    s.push_str(&format!(
        "nonseparating: {} orbit(s), {} set(s) in total\n",
        r.orbits.len(),
        r.total_nonseparating()
    ));
    if table && !r.orbits.is_empty() {
        s.push_str(&format!("{:>4}  {:>6}  representative\n", "#", "size"));
        for (i, o) in r.orbits.iter().enumerate() {
            s.push_str(&format!("{:>4}  {:>6}  {}\n", i + 1, o.size, o.rep));
        }
    } else {
        for o in &r.orbits {
            s.push_str(&format!("  {}\n", o.rep));
        }
    }
    if !opts.no_timing {
        s.push_str(&format!("elapsed: {:.3} ms\n", r.elapsed.as_secs_f64() * 1e3));
    }
    s
}

fn search_output(r: &SearchReport, opts: &GlobalOpts, table: bool) -> Output {
    Output {
        code: if r.found.is_empty() { 1 } else { 0 },
        text: search_text(r, opts, table),
        json: search_json(r, opts),
    }
}

fn degree_output(r: &DegreeReport, opts: &GlobalOpts) -> Output {
    let mut text = format!("degree: {}\n", r.degree);
    for g in &r.per_group {
        text.push_str(&format!(
            "  {:<16} {} scanned, {} nonseparating orbit(s)\n",
            g.group.to_string(),
            g.hsets_scanned,
            g.orbits.len()
        ));
    }
    text.push_str(&format!("constant pullback possible: {}\n", if r.possible { "yes" } else { "no" }));
    if let Some(w) = &r.witness {
        let b = w.lattice.basis();
        text.push_str(&format!(
            "witness: lattice columns ({},{}), ({},{}) gives {} with H = {}\n",
            b[0][0], b[1][0], b[0][1], b[1][1], w.group, w.hset
        ));
    }
    if let Some(c) = &r.caveat {
        text.push_str(&format!("note: {c}\n"));
    }
    let mut json = serde_json::to_value(r).expect("reports serialize");
    if let Some(groups) = json["per_group"].as_array_mut() {
        for (v, g) in groups.iter_mut().zip(&r.per_group) {
            *v = search_json(g, opts);
        }
    }
    Output { code: if r.possible { 0 } else { 1 }, text, json }
}

fn lattice(matrix: &str, points: Option<&str>) -> Result<Output> {
    let l = Sublattice::new(parse::matrix(matrix)?)?;
    let q = lattice_quotient(&l)?;
    let mut text = format!(
        "degree: {}\nquotient Z^2/2L: {}\nU = {:?}\nV = {:?}\n",
        l.covolume(),
        q.group,
        q.u,
        q.v
    );
    let mut json = json!({
        "lattice": l.basis(),
        "degree": l.covolume(),
        "group": q.group,
        "u": q.u,
        "v": q.v,
    });
    let mut code = 0;
    if let Some(p) = points {
        let pts = parse::points(p)?;
        let v = constant_pullback_from_lattice(&l, &pts)?;
        text.push_str(&format!("H: {}\nconstant pullback: {}\n", v.hset, if v.constant { "yes" } else { "no" }));
        if let Some(w) = &v.witness {
            text.push_str(&format!("witness: {}\ncoset numbers: {}\n", w.context, w.coset_numbers));
        }
        json["hset"] = json!(parse::element_list(&v.hset));
        json["constant"] = json!(v.constant);
        json["witness"] = json!(v.witness);
        code = if v.constant { 0 } else { 1 };
    }
    Ok(Output { code, text, json })
}

fn run_verify(name: &str) -> Result<Output> {
    let suite: Suite = name.parse()?;
    let outcomes = verify::run(suite)?;
    let all = outcomes.iter().all(|o| o.passed);
    let mut text = String::new();
    for o in &outcomes {
        text.push_str(&format!("{} {}: {}\n", if o.passed { "PASS" } else { "FAIL" }, o.item, o.detail));
    }
    text.push_str(&format!(
        "{suite}: {}/{} passed\n",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    ));
    Ok(Output {
        code: if all { 0 } else { 1 },
        text,
        json: json!({ "suite": suite.to_string(), "passed": all, "outcomes": outcomes }),
    })
}

