//! The `dehnq` command line: presentation emitters, condition checking,
//! reversing, divisor enumeration, coloring counts, bounded enumeration and
//! enveloping groups, over files or built-in presentations.
//!
//! Exit codes: 0 success, 1 verification failure, 2 budget exhausted,
//! 3 input error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dehnq_core::catalog;
use dehnq_core::centralizer::{emit_centralizer_presentation, verify_conjugacy_data, QuotientSpec};
use dehnq_core::conditions::{check_conditions, Side, Verdict};
use dehnq_core::divisors::{divisor_index, enumerate_divisors, phi};
use dehnq_core::error::Error;
use dehnq_core::finite::env::{enveloping_presentation, group_from_images};
use dehnq_core::finite::enumerate::{enumerate_quandle, EnumerateOutcome};
use dehnq_core::finite::hom::hom_count;
use dehnq_core::finite::quandle::FiniteQuandle;
use dehnq_core::format::{self, PresentationFile};
use dehnq_core::garside::{compute_alpha_beta, emit_left_presentation, emit_right_presentation};
use dehnq_core::reversing::{reverse, Budget, Strategy, DEFAULT_BUDGET};
use dehnq_core::simplify::{simplify_presentation, SimplifyOptions};
use dehnq_core::words::{GroupWord, Letter, Sign};
use dehnq_core::QuandlePresentation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "dehnq", version, about = "Dehn quandle presentations from group and monoid presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SideArg {
    Right,
    Left,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Leftmost,
    Rightmost,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the Dehn quandle presentation through the reversing route.
    GarsidePresent {
        file: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long)]
        simplify: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit the Dehn quandle presentation through the centralizer route.
    CentralizerPresent {
        file: String,
        #[arg(long)]
        simplify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the lattice conditions and classify the presentation type.
    CheckConditions {
        file: String,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Reverse a signed word into a fraction of positive words.
    Reverse {
        file: String,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "leftmost")]
        strategy: StrategyArg,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the divisors of the declared Garside element.
    Divisors {
        file: String,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Count quandle homomorphisms into a finite target.
    HomCount {
        qfile: String,
        #[arg(long)]
        target: String,
    },
    /// Enumerate the presented quandle if it is small and finite.
    Enumerate {
        qfile: String,
        #[arg(long, default_value_t = 1000)]
        max_elements: usize,
        #[arg(long, default_value_t = 2_000_000)]
        max_steps: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print the enveloping group presentation of a quandle presentation.
    Env { qfile: String },
    /// List built-in presentations or emit one as a file.
    Builtin {
        #[command(subcommand)]
        what: BuiltinCmd,
    },
}

#[derive(Subcommand, Debug)]
enum BuiltinCmd {
    List,
    Emit { name: String },
}

/// Result of one invocation: exit code plus captured output streams.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn classify(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::NotClosed => EXIT_BUDGET,
        Error::NotADivisor { .. }
        | Error::NotAGenerator { .. }
        | Error::InvalidComplement(_)
        | Error::RelatorViolated { .. } => EXIT_VERIFICATION,
        _ => EXIT_INPUT,
    }
}

fn load_file(arg: &str) -> Result<PresentationFile, Error> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return catalog::builtin(name);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Unsupported(format!("cannot read {arg}: {e}")))?;
    format::parse(&text)
}

fn load_target(arg: &str) -> Result<FiniteQuandle, Error> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return catalog::builtin_target(name);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Unsupported(format!("cannot read {arg}: {e}")))?;
    format::parse_table(&text)
}

fn env_budget() -> u64 {
    std::env::var("DQ_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn budget_of(flag: Option<u64>) -> u64 {
    flag.unwrap_or_else(env_budget)
}

fn term_json(t: &dehnq_core::QuandleTerm, f: &PresentationFile) -> Value {
    json!({
        "base": f.symbols.name(t.base),
        "tail": t.tail.iter().map(|l| json!({
            "g": f.symbols.name(l.gen),
            "s": l.sign.as_i8(),
        })).collect::<Vec<_>>(),
    })
}

fn presentation_json(q: &QuandlePresentation, f: &PresentationFile) -> Value {
    let q = q.canonicalized();
    json!({
        "generators": q.symbols.names(),
        "relations": q.relations.iter().map(|r| json!({
            "lhs": term_json(&r.lhs, f),
            "rhs": term_json(&r.rhs, f),
        })).collect::<Vec<_>>(),
    })
}

fn print_presentation(out: &mut String, q: &QuandlePresentation) {
    let q = q.canonicalized();
    let _ = writeln!(out, "generators: {}", q.symbols.names().join(" "));
    for r in &q.relations {
        let _ = writeln!(out, "rel {}", r.display(&q.symbols));
    }
}

fn parse_word(f: &PresentationFile, text: &str) -> Result<GroupWord, Error> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, sign) = match tok.strip_suffix("^-1") {
            Some(base) => (base, Sign::Neg),
            None => (tok, Sign::Pos),
        };
        let gen = f.symbols.lookup(name).ok_or(Error::UnknownGenerator {
            name: name.to_string(),
            line: 1,
            col: 1,
        })?;
        letters.push(Letter { gen, sign });
    }
    Ok(GroupWord(letters))
}

/// Evaluate every relation in the conjugation quandle of each declared
/// finite quotient; any violation is a verification failure.
fn soundness_check(
    q: &QuandlePresentation,
    quotients: &[QuotientSpec],
    out: &mut Outcome,
) -> Result<(), i32> {
    for spec in quotients {
        let (group, images) = group_from_images(spec.images.clone()).map_err(|e| {
            let _ = writeln!(out.stderr, "error: {e}");
            classify(&e)
        })?;
        for rel in &q.relations {
            let eval = |t: &dehnq_core::QuandleTerm| {
                let mut x = images[t.base.index()];
                for l in &t.tail {
                    let y = images[l.gen.index()];
                    x = match l.sign {
                        Sign::Pos => group.conjugate(x, y),
                        Sign::Neg => group.mul(group.mul(group.inv(y), x), y),
                    };
                }
                x
            };
            if eval(&rel.lhs) != eval(&rel.rhs) {
                let _ = writeln!(
                    out.stderr,
                    "verification failure: relation {} does not hold in quotient {}",
                    rel.display(&q.symbols),
                    spec.name
                );
                return Err(EXIT_VERIFICATION);
            }
        }
    }
    Ok(())
}

fn simplify_and_log(q: QuandlePresentation, out: &mut Outcome) -> QuandlePresentation {
    let (s, log) = simplify_presentation(&q, &SimplifyOptions::default());
    for (old, new) in &log.replaced {
        let _ = writeln!(out.stderr, "rewrote: {old}  ->  {new}");
    }
    for d in &log.dropped {
        let _ = writeln!(out.stderr, "dropped (rederived): {d}");
    }
    s
}

/// Run a command line. The first argument vector entry is the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let mut out = Outcome::default();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; anything else is an
            // input error.
            let rendered = e.render().to_string();
            if e.use_stderr() {
                out.stderr = rendered;
                out.code = EXIT_INPUT;
            } else {
                out.stdout = rendered;
                out.code = EXIT_OK;
            }
            return out;
        }
    };
    out.code = match dispatch(cli.command, &mut out) {
        Ok(()) => EXIT_OK,
        Err(code) => code,
    };
    out
}

fn fail(out: &mut Outcome, e: Error) -> i32 {
    let _ = writeln!(out.stderr, "error: {e}");
    classify(&e)
}

fn dispatch(cmd: Command, out: &mut Outcome) -> Result<(), i32> {
    match cmd {
        Command::GarsidePresent { file, side, simplify, json, budget } => {
            let f = load_file(&file).map_err(|e| fail(out, e))?;
            let m = f.to_monoid().map_err(|e| fail(out, e))?;
            let budget = budget_of(budget);
            let q = match side {
                SideArg::Right => {
                    let tables = compute_alpha_beta(&m, budget).map_err(|e| fail(out, e))?;
                    emit_right_presentation(&m, &tables)
                }
                SideArg::Left => emit_left_presentation(&m, budget).map_err(|e| fail(out, e))?,
            };
            let q = if simplify { simplify_and_log(q, out) } else { q };
            soundness_check(&q, &f.quotients, out)?;
            if json {
                let _ = writeln!(out.stdout, "{}", presentation_json(&q, &f));
            } else {
                print_presentation(&mut out.stdout, &q);
            }
            Ok(())
        }
        Command::CentralizerPresent { file, simplify, json } => {
            let f = load_file(&file).map_err(|e| fail(out, e))?;
            let g = f.to_group().map_err(|e| fail(out, e))?;
            let cent = f.centralizer_data();
            let conj = f.conjugacy_data();
            let report = verify_conjugacy_data(&g, &cent, &conj, &f.quotients)
                .map_err(|e| fail(out, e))?;
            if !report.all_ok() {
                let _ = writeln!(
                    out.stderr,
                    "verification failure: centralizer or conjugator data does not hold in a declared quotient"
                );
                return Err(EXIT_VERIFICATION);
            }
            if !f.quotients.is_empty() {
                let _ = writeln!(
                    out.stderr,
                    "hypotheses verified in {} finite quotient(s); this is a necessary check, not a proof",
                    f.quotients.len()
                );
            }
            let q = emit_centralizer_presentation(&g, &cent, &conj).map_err(|e| fail(out, e))?;
            let q = if simplify { simplify_and_log(q, out) } else { q };
            soundness_check(&q, &f.quotients, out)?;
            if json {
                let _ = writeln!(out.stdout, "{}", presentation_json(&q, &f));
            } else {
                print_presentation(&mut out.stdout, &q);
            }
            Ok(())
        }
        Command::CheckConditions { file, budget, side } => {
            let f = load_file(&file).map_err(|e| fail(out, e))?;
            let m = f.to_monoid().map_err(|e| fail(out, e))?;
            let side = match side {
                SideArg::Right => Side::Right,
                SideArg::Left => Side::Left,
            };
            let report =
                check_conditions(&m, side, budget_of(budget)).map_err(|e| fail(out, e))?;
            for line in report.lines() {
                let _ = writeln!(out.stdout, "{line}");
            }
            if report.label.is_some() {
                Ok(())
            } else if report.residue_divides_lcm == Verdict::Fail
                || report.second_residue_in_gens == Verdict::Fail
            {
                Err(EXIT_VERIFICATION)
            } else {
                Err(EXIT_BUDGET)
            }
        }
        Command::Reverse { file, word, strategy, budget, json } => {
            let f = load_file(&file).map_err(|e| fail(out, e))?;
            let m = f.to_monoid().map_err(|e| fail(out, e))?;
            let comp = m.complement().map_err(|e| fail(out, e.clone()))?;
            let w = parse_word(&f, &word).map_err(|e| fail(out, e))?;
            let strategy = match strategy {
                StrategyArg::Leftmost => Strategy::Leftmost,
                StrategyArg::Rightmost => Strategy::Rightmost,
            };
            let mut b = Budget::new(budget_of(budget));
            let fr = reverse(&w, comp, &mut b, strategy).map_err(|e| fail(out, e))?;
            if json {
                let _ = writeln!(
                    out.stdout,
                    "{}",
                    json!({
                        "numerator": fr.numerator.0.iter().map(|g| f.symbols.name(*g)).collect::<Vec<_>>(),
                        "denominator": fr.denominator.0.iter().map(|g| f.symbols.name(*g)).collect::<Vec<_>>(),
                    })
                );
            } else {
                let _ = writeln!(
                    out.stdout,
                    "numerator: {}",
                    fr.numerator.display(&f.symbols)
                );
                let _ = writeln!(
                    out.stdout,
                    "denominator: {}",
                    fr.denominator.display(&f.symbols)
                );
            }
            Ok(())
        }
        Command::Divisors { file, budget, json } => {
            let f = load_file(&file).map_err(|e| fail(out, e))?;
            let m = f.to_monoid().map_err(|e| fail(out, e))?;
            let budget = budget_of(budget);
            let ds = enumerate_divisors(&m, budget).map_err(|e| fail(out, e))?;
            // The divisor permutation, with endpoints pinned.
            let mut phi_images = Vec::new();
            for d in &ds.left {
                let img = phi(d, &m, budget).map_err(|e| fail(out, e))?;
                let idx = divisor_index(&img, &ds.left, &m, budget)
                    .map_err(|e| fail(out, e))?
                    .ok_or_else(|| {
                        let _ = writeln!(out.stderr, "verification failure: phi image escapes the divisor set");
                        EXIT_VERIFICATION
                    })?;
                phi_images.push(idx);
            }
            if json {
                let _ = writeln!(
                    out.stdout,
                    "{}",
                    json!({
                        "count": ds.count(),
                        "left_equals_right": ds.left_equals_right,
                        "divisors": ds.left.iter().map(|d| d.display(&f.symbols).to_string()).collect::<Vec<_>>(),
                        "phi": phi_images,
                    })
                );
            } else {
                let _ = writeln!(out.stdout, "divisors: {}", ds.count());
                for (i, d) in ds.left.iter().enumerate() {
                    let _ = writeln!(
                        out.stdout,
                        "  [{i}] {}  phi -> [{}]",
                        d.display(&f.symbols),
                        phi_images[i]
                    );
                }
                let _ = writeln!(
                    out.stdout,
                    "left divisors equal right divisors: {}",
                    ds.left_equals_right
                );
            }
            if !ds.left_equals_right {
                let _ = writeln!(
                    out.stderr,
                    "verification failure: left and right divisor sets differ"
                );
                return Err(EXIT_VERIFICATION);
            }
            let mut seen = vec![false; phi_images.len()];
            for &i in &phi_images {
                seen[i] = true;
            }
            if !seen.iter().all(|&x| x) {
                let _ = writeln!(out.stderr, "verification failure: phi is not a bijection");
                return Err(EXIT_VERIFICATION);
            }
            Ok(())
        }
        Command::HomCount { qfile, target } => {
            let f = load_file(&qfile).map_err(|e| fail(out, e))?;
            let q = f.to_quandle().map_err(|e| fail(out, e))?;
            let t = load_target(&target).map_err(|e| fail(out, e))?;
            let count = hom_count(&q, &t);
            let _ = writeln!(out.stdout, "{count}");
            Ok(())
        }
        Command::Enumerate { qfile, max_elements, max_steps, json } => {
            let f = load_file(&qfile).map_err(|e| fail(out, e))?;
            let q = f.to_quandle().map_err(|e| fail(out, e))?;
            match enumerate_quandle(&q, max_elements, max_steps).map_err(|e| fail(out, e))? {
                EnumerateOutcome::Closed { quandle, generator_images } => {
                    if json {
                        let n = quandle.order();
                        let table: Vec<Vec<usize>> = (0..n)
                            .map(|x| (0..n).map(|y| quandle.op(x, y)).collect())
                            .collect();
                        let _ = writeln!(
                            out.stdout,
                            "{}",
                            json!({ "order": n, "table": table, "generators": generator_images })
                        );
                    } else {
                        let _ = writeln!(out.stdout, "order {}", quandle.order());
                        let _ = write!(out.stdout, "{}", format::print_table(&f.name, &quandle));
                        let imgs: Vec<String> =
                            generator_images.iter().map(|i| i.to_string()).collect();
                        let _ = writeln!(out.stdout, "generators -> {}", imgs.join(" "));
                    }
                    Ok(())
                }
                EnumerateOutcome::Exhausted { live_elements, steps } => {
                    let _ = writeln!(
                        out.stderr,
                        "exhausted after {steps} steps with {live_elements} live elements"
                    );
                    Err(EXIT_BUDGET)
                }
            }
        }
        Command::Env { qfile } => {
            let f = load_file(&qfile).map_err(|e| fail(out, e))?;
            let q = f.to_quandle().map_err(|e| fail(out, e))?;
            let g = enveloping_presentation(&q);
            let _ = writeln!(out.stdout, "generators: {}", g.symbols.names().join(" "));
            for r in &g.relators {
                let _ = writeln!(out.stdout, "relator {}", r.display(&g.symbols));
            }
            Ok(())
        }
        Command::Builtin { what } => match what {
            BuiltinCmd::List => {
                for name in catalog::builtin_names() {
                    let _ = writeln!(out.stdout, "{name}");
                }
                Ok(())
            }
            BuiltinCmd::Emit { name } => {
                let f = catalog::builtin(&name).map_err(|e| fail(out, e))?;
                let _ = write!(out.stdout, "{}", format::print(&f));
                Ok(())
            }
        },
    }
}
