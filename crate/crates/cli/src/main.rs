//! `warpdeg`: warping degrees of knot diagrams from the command line.
//!
//! Exit status is 0 on success, 1 for input or parse errors and 2 when a
//! `--check`, `torus` or `verify` run finds a mismatch.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use warpdeg::analysis::{
    builtin_records, lemma_suite, load_records, reproduce_table, torus_report,
};
use warpdeg::generators::braid_closure;
use warpdeg::{
    diagram_to_dt, dt_to_diagram, emit_report, is_warping, parse_dt, parse_gauss,
    warping_degree_at, warping_profile, BasePoint, BraidWord, Diagram, Report,
};

#[derive(Parser)]
#[command(
    name = "warpdeg",
    version,
    about = "Warping degrees of oriented knot diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Warping degrees, span, alternation and slack of a diagram
    Compute {
        #[command(flatten)]
        input: DiagramInput,
        /// Also report d(D_a) for the base point at this gap
        #[arg(long)]
        base: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// d(D_a) at every base-point gap
    Profile {
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long)]
        json: bool,
    },
    /// Check the warping degree formulas on the standard T(p,q) diagram
    Torus {
        p: u32,
        q: u32,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the warping-degree table of knots up to nine crossings
    Table {
        /// Line-delimited JSON knot records [default: $WARPDEG_DATA, else built in]
        #[arg(long)]
        data: Option<PathBuf>,
        /// Exit with status 2 if any unflagged row mismatches
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively check the warping-degree identities on all Gauss words
    Verify {
        #[arg(long, default_value_t = 6)]
        max_crossings: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Convert DT or braid input to Gauss text, or Gauss text to a DT code
    Convert {
        #[command(flatten)]
        input: DiagramInput,
        /// Gap where DT labelling starts (Gauss input only)
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DiagramInput {
    /// Gauss word, e.g. O1U2O3U1O2U3
    #[arg(long)]
    gauss: Option<String>,
    /// DT code, e.g. "4 6 2"
    #[arg(long, allow_hyphen_values = true)]
    dt: Option<String>,
    /// Braid word "1 2 1" or torus shorthand "p:q"
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Strand count for --braid
    #[arg(long, requires = "braid")]
    strands: Option<usize>,
}

impl DiagramInput {
    fn diagram(&self) -> warpdeg::Result<Diagram> {
        if let Some(g) = &self.gauss {
            parse_gauss(g)
        } else if let Some(dt) = &self.dt {
            Ok(dt_to_diagram(&parse_dt(dt)?))
        } else {
            let text = self.braid.as_deref().unwrap_or_default();
            braid_closure(&BraidWord::parse(text, self.strands)?)
        }
    }
}

enum Failure {
    Input(String),
    Check,
}

impl From<warpdeg::Error> for Failure {
    fn from(e: warpdeg::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn tick(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

#[derive(Serialize)]
struct BaseReport {
    gap: usize,
    warping_degree_at: usize,
    report: Report,
}

fn compute(input: &DiagramInput, base: Option<usize>, as_json: bool, out: &mut String) -> Outcome {
    let diagram = input.diagram()?;
    let report = Report::compute(&diagram)?;
    let at = base
        .map(|g| warping_degree_at(&diagram, BasePoint(g)).map(|v| (g, v)))
        .transpose()?;
    if as_json {
        match at {
            Some((gap, value)) => writeln!(
                out,
                "{}",
                json(&BaseReport {
                    gap,
                    warping_degree_at: value,
                    report
                })
            ),
            None => writeln!(out, "{}", emit_report(&report)),
        }
        .unwrap();
        return Ok(());
    }
    let _ = writeln!(out, "diagram             {diagram}");
    let _ = writeln!(out, "crossings c(D)      {}", report.crossings);
    let _ = writeln!(out, "warping degree d(D) {}", report.d);
    let _ = writeln!(out, "reversed d(-D)      {}", report.d_reversed);
    let _ = writeln!(out, "span                {}", report.span);
    let _ = writeln!(out, "alternating         {}", yes_no(report.alternating));
    let _ = writeln!(out, "slack c-d-d'-1      {}", report.slack);
    if let Some((gap, value)) = at {
        let warping: Vec<String> = diagram
            .crossings()
            .filter(|&id| is_warping(&diagram, BasePoint(gap), id).unwrap_or(false))
            .map(|id| id.to_string())
            .collect();
        let _ = writeln!(out, "base gap {gap}: d(D_a) = {value}");
        let _ = writeln!(out, "warping crossings   {}", warping.join(" "));
    }
    Ok(())
}

#[derive(Serialize)]
struct ProfileOut<'a> {
    values: &'a [usize],
    min: usize,
    max: usize,
    span: usize,
}

fn profile(input: &DiagramInput, as_json: bool, out: &mut String) -> Outcome {
    let diagram = input.diagram()?;
    let p = warping_profile(&diagram)?;
    if as_json {
        let _ = writeln!(
            out,
            "{}",
            json(&ProfileOut {
                values: p.values(),
                min: p.min(),
                max: p.max(),
                span: p.span(),
            })
        );
    } else {
        let cells: Vec<String> = p
            .values()
            .iter()
            .enumerate()
            .map(|(g, v)| format!("{g}:{v}"))
            .collect();
        let _ = writeln!(out, "gap {}", cells.join(" "));
        let _ = writeln!(out, "min {} max {} span {}", p.min(), p.max(), p.span());
    }
    Ok(())
}

fn torus(p: u32, q: u32, as_json: bool, out: &mut String) -> Outcome {
    let r = torus_report(p, q)?;
    if as_json {
        let _ = writeln!(out, "{}", json(&r));
    } else {
        let _ = writeln!(out, "T({p},{q}) standard diagram, c = {}", r.crossings);
        let _ = writeln!(
            out,
            "d = {} d' = {}  (p−1)(q−1)/2 = {} {}",
            r.d,
            r.d_reversed,
            r.predicted_d,
            tick(r.d == r.predicted_d && r.d_reversed == r.predicted_d)
        );
        let _ = writeln!(
            out,
            "c−d−d' = {} = p−1 {}",
            r.gap,
            tick(r.gap == p as i64 - 1)
        );
    }
    if r.holds {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn table(data: Option<PathBuf>, check: bool, as_json: bool, out: &mut String) -> Outcome {
    let path = data.or_else(|| std::env::var_os("WARPDEG_DATA").map(PathBuf::from));
    let records = match &path {
        Some(p) => load_records(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        None => builtin_records(),
    };
    let t = reproduce_table(&records)?;
    if as_json {
        let _ = writeln!(out, "{}", json(&t));
    } else {
        let _ = writeln!(out, "{t}");
    }
    if check && t.unexplained() > 0 {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn verify(max: usize, jobs: usize, as_json: bool, out: &mut String) -> Outcome {
    let start = Instant::now();
    let r = lemma_suite(max, jobs)?;
    eprintln!("verified in {:.2?} with {jobs} job(s)", start.elapsed());
    if as_json {
        let _ = writeln!(out, "{}", json(&r));
    } else {
        for (n, words) in &r.words_by_crossings {
            let _ = writeln!(out, "n = {n}: {words} words");
        }
        let _ = writeln!(out, "{} words checked", r.words_checked);
        for t in &r.properties {
            let _ = writeln!(
                out,
                "{:<22} {:>10} checked {:>6} failed  {}",
                t.property.name(),
                t.checked,
                t.failed,
                if t.failed == 0 { "pass" } else { "FAIL" }
            );
        }
        for ce in &r.counterexamples {
            let _ = writeln!(out, "counterexample {}: {}", ce.property, ce.word);
        }
    }
    if r.all_pass() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn convert(input: &DiagramInput, base: usize, out: &mut String) -> Outcome {
    let diagram = input.diagram()?;
    if input.gauss.is_some() {
        let _ = writeln!(out, "{}", diagram_to_dt(&diagram, BasePoint(base))?);
    } else {
        let _ = writeln!(out, "{diagram}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let outcome = match cli.command {
        Command::Compute { input, base, json } => compute(&input, base, json, &mut out),
        Command::Profile { input, json } => profile(&input, json, &mut out),
        Command::Torus { p, q, json } => torus(p, q, json, &mut out),
        Command::Table { data, check, json } => table(data, check, json, &mut out),
        Command::Verify {
            max_crossings,
            jobs,
            json,
        } => verify(max_crossings, jobs, json, &mut out),
        Command::Convert { input, base } => convert(&input, base, &mut out),
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check) => ExitCode::from(2),
    }
}
