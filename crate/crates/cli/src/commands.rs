use std::io::Read;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cyclerank::approx::{crank_approx, ApproxConfig, BaseThreshold, SeparatorMode};
use cyclerank::automata::{
    binarize, parse_dfa, parse_regex, regex_to_nfa, regex_to_nfa_over, sh, star_height_bidet, trim,
    underlying_digraph, walk_language_automaton,
};
use cyclerank::cyclerank::crank_bruteforce_with_limit;
use cyclerank::dfvs::{min_dfvs, minimal_dfvs_enumerate};
use cyclerank::elimination::validate_forest;
use cyclerank::widths::{check_bounds, dpw_exact_with_limit, snum_exact_with_limit};
use cyclerank::{
    count_sc_subsets, crank_exact, crank_exact_with, generate, parse_digraph_report, parse_forest,
    sc_subset_bound, Digraph, Error, ExactConfig, Result,
};

use crate::report::Report;
use crate::{
    ApproxArgs, BenchCommand, Command, CrankCommand, DfvsCommand, ForestCommand, ReduceCommand,
    SeparatorArg, ShCommand,
};

pub struct Outcome {
    pub report: Report,
    pub warnings: Vec<String>,
    /// Set when the command ran but its check failed (exit code 2).
    pub failure: Option<String>,
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Syntax { .. } | Error::Input(_) => 1,
        Error::Domain(_) | Error::Precondition(_) => 2,
        Error::Capacity { .. } | Error::Resource(_) => 3,
    }
}

struct Context {
    report: Report,
    warnings: Vec<String>,
    failure: Option<String>,
}

impl Context {
    fn read(&self, path: &Path) -> Result<String> {
        let mut text = String::new();
        let result = if path.as_os_str() == "-" {
            std::io::stdin().read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        result.map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Ok(text)
    }

    fn graph(&mut self, path: &Path) -> Result<Digraph> {
        let text = self.read(path)?;
        let parsed = parse_digraph_report(&text).map_err(|e| with_path(path, e))?;
        if parsed.duplicates > 0 {
            self.warnings.push(format!(
                "{}: {} duplicate edges ignored",
                path.display(),
                parsed.duplicates
            ));
        }
        Ok(parsed.graph)
    }
}

fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{msg} (in {})", path.display()),
        },
        e => e,
    }
}

pub fn run(command: Command) -> Result<Outcome> {
    let mut cx = Context {
        report: Report::new(),
        warnings: Vec::new(),
        failure: None,
    };
    match command {
        Command::Crank(c) => crank(&mut cx, c)?,
        Command::Forest(ForestCommand::Validate { graph, forest }) => {
            let g = cx.graph(&graph)?;
            let f = parse_forest(&cx.read(&forest)?).map_err(|e| with_path(&forest, e))?;
            let validation = validate_forest(&g, &f);
            if validation.is_ok() {
                cx.report.field("valid", "yes").field("height", f.height());
            } else {
                cx.report.field("valid", "no");
                cx.report.block("violation", validation.to_string());
                cx.failure = Some(format!(
                    "the forest is invalid ({} violations)",
                    validation.violations.len()
                ));
            }
        }
        Command::Dpw { graph, limit } => {
            let g = cx.graph(&graph)?;
            let r = dpw_exact_with_limit(&g, limit)?;
            let layout: Vec<String> = r.layout.iter().map(usize::to_string).collect();
            cx.report
                .field("dpw", r.width)
                .field("layout", layout.join(" "))
                .block("bag", &r.decomposition);
        }
        Command::Snum { graph, limit } => {
            let g = cx.graph(&graph)?;
            let r = snum_exact_with_limit(&g, limit)?;
            cx.report
                .field("snum", r.value)
                .field("target", &r.witness.target)
                .field("separator", &r.witness.separator);
        }
        Command::Bounds { graph } => {
            let g = cx.graph(&graph)?;
            let b = check_bounds(&g)?;
            cx.report
                .text(&b)
                .kv("n", b.n)
                .kv("snum", b.snum)
                .kv("dpw", b.dpw)
                .kv("crank", b.crank)
                .kv(
                    "rk-1",
                    b.rk_minus_one.map_or("-".to_string(), |r| r.to_string()),
                )
                .kv("chain", if b.chain_holds() { "ok" } else { "violated" });
            if let Some(c) = b.closed_form {
                cx.report.kv("closed-form", format!("{c:.3}"));
            }
            if !b.chain_holds() {
                cx.failure = Some(format!("chain violated: {}", b.failures.join(", ")));
            }
        }
        Command::Dfvs(DfvsCommand::Min { graph }) => {
            let g = cx.graph(&graph)?;
            let r = min_dfvs(&g)?;
            cx.report
                .field("size", r.minimum_size)
                .field("set", &r.minimum_set)
                .field("forced", &r.forced);
        }
        Command::Dfvs(DfvsCommand::Enumerate { graph, cap }) => {
            let g = cx.graph(&graph)?;
            let sets = minimal_dfvs_enumerate(&g, cap)?;
            cx.report.field("minimal", sets.len());
            for s in &sets {
                cx.report.block("set", s);
            }
        }
        Command::CountSc { graph } => {
            let g = cx.graph(&graph)?;
            let count = count_sc_subsets(&g)?;
            let d = g.max_outdegree();
            cx.report
                .field("nontrivial", count.nontrivial)
                .field("total", count.total)
                .field("max-outdegree", d);
            if d >= 1 {
                let bound = sc_subset_bound(g.vertex_count(), d)?;
                cx.report
                    .field("bound", format!("{bound:.1}"))
                    .field("within-bound", yes_no(count.total as f64 <= bound));
            }
        }
        Command::Sh(ShCommand::Regex {
            expr,
            alphabet,
            nfa,
        }) => {
            let alphabet: Option<Vec<char>> = alphabet.map(|a| a.chars().collect());
            let r = parse_regex(&expr, alphabet.as_deref())?;
            cx.report.field("sh", sh(&r));
            if nfa {
                let a = match &alphabet {
                    Some(al) => regex_to_nfa_over(&r, al)?,
                    None => regex_to_nfa(&r),
                };
                let crank = crank_exact(&underlying_digraph(&a))?;
                cx.report
                    .field("nfa-states", a.state_count())
                    .field("nfa-crank", crank.value);
                cx.report.block("nfa", &a);
            }
        }
        Command::Sh(ShCommand::Bidet { automaton }) => {
            let a = parse_dfa(&cx.read(&automaton)?).map_err(|e| with_path(&automaton, e))?;
            let r = star_height_bidet(&a)?;
            cx.report
                .field("sh", r.value)
                .field("trimmed-states", r.trimmed.state_count())
                .block("forest", &r.witness);
        }
        Command::Reduce(ReduceCommand::Walk { graph, vertex }) => {
            let g = cx.graph(&graph)?;
            let a = walk_language_automaton(&g, vertex)?;
            cx.report.block("automaton", &*a);
        }
        Command::Reduce(ReduceCommand::Binarize {
            automaton,
            trim: do_trim,
        }) => {
            let a = parse_dfa(&cx.read(&automaton)?).map_err(|e| with_path(&automaton, e))?;
            let mut b = binarize(&a)?;
            if do_trim {
                b = trim(&b).dfa;
            }
            cx.report.block("automaton", &*b);
        }
        Command::Bench(BenchCommand::Crank {
            n,
            outdeg,
            trials,
            seed,
            regular,
            no_timing,
        }) => bench(
            &mut cx,
            BenchParams {
                n,
                outdeg,
                trials,
                seed,
                regular,
                no_timing,
            },
        )?,
    }
    Ok(Outcome {
        report: cx.report,
        warnings: cx.warnings,
        failure: cx.failure,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn crank(cx: &mut Context, command: CrankCommand) -> Result<()> {
    match command {
        CrankCommand::Exact {
            graph,
            memo_limit,
            dot,
        } => {
            let g = cx.graph(&graph)?;
            let r = crank_exact_with(&g, &ExactConfig { memo_limit })?;
            cx.report
                .field("crank", r.value)
                .kv("memoized", r.stats.memoized);
            if dot {
                cx.report.block("dot", r.witness.to_dot());
            } else {
                cx.report.block("forest", &r.witness);
            }
        }
        CrankCommand::Brute { graph, limit } => {
            let g = cx.graph(&graph)?;
            cx.report
                .field("crank", crank_bruteforce_with_limit(&g, limit)?);
        }
        CrankCommand::Approx { graph, options } => {
            let g = cx.graph(&graph)?;
            let r = crank_approx(&g, &approx_config(&options)?)?;
            cx.report.field("height", r.height);
            for (depth, sizes) in r.separator_sizes.iter().enumerate() {
                let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
                cx.report
                    .field(&format!("separators.{depth}"), sizes.join(" "));
            }
            cx.report.block("forest", &r.forest);
        }
    }
    Ok(())
}

fn approx_config(args: &ApproxArgs) -> Result<ApproxConfig> {
    let base_threshold = match args.base_threshold.as_str() {
        "auto" => BaseThreshold::Auto,
        t => match t.parse::<usize>() {
            Ok(t) if t > 0 => BaseThreshold::Fixed(t),
            _ => {
                return Err(Error::Input(format!(
                    "--base-threshold must be a positive integer or `auto`, got `{t}`"
                )))
            }
        },
    };
    Ok(ApproxConfig {
        base_threshold,
        separator_mode: match args.separator {
            SeparatorArg::Exact => SeparatorMode::Exact,
            SeparatorArg::Greedy => SeparatorMode::Greedy,
        },
        exact_separator_limit: args.exact_separator_limit,
    })
}

struct BenchParams {
    n: usize,
    outdeg: Option<usize>,
    trials: usize,
    seed: u64,
    regular: bool,
    no_timing: bool,
}

fn bench(cx: &mut Context, params: BenchParams) -> Result<()> {
    let BenchParams {
        n,
        outdeg,
        trials,
        seed,
        regular,
        no_timing,
    } = params;
    cyclerank::bitgraph::BitGraph::new(&Digraph::empty(n))?;
    let d = outdeg.unwrap_or(n.saturating_sub(1)).max(1);
    if outdeg == Some(0) {
        return Err(Error::Input("--outdeg must be at least 1".into()));
    }
    let bound = sc_subset_bound(n, d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    cx.report
        .field("n", n)
        .field("outdeg", d)
        .field("trials", trials)
        .field("seed", seed)
        .field("regular", yes_no(regular))
        .field("bound", format!("{bound:.1}"));
    let mut max_memo = 0;
    let mut total_ms = 0.0;
    for trial in 0..trials {
        let g = if regular {
            generate::strongly_connected_regular(&mut rng, n, d)
        } else {
            generate::strongly_connected(&mut rng, n, d)
        };
        let r = crank_exact(&g)?;
        max_memo = max_memo.max(r.stats.memoized);
        let ms = r.stats.elapsed.as_secs_f64() * 1000.0;
        total_ms += ms;
        let mut line = format!(
            "{trial} crank {} edges {} memo {}",
            r.value,
            g.edge_count(),
            r.stats.memoized
        );
        if !no_timing {
            line.push_str(&format!(" ms {ms:.1}"));
        }
        cx.report.field("trial", line);
    }
    let within = max_memo as f64 <= bound;
    cx.report
        .field("max-memo", max_memo)
        .field("within-bound", yes_no(within));
    if !no_timing {
        cx.report.field("total-ms", format!("{total_ms:.1}"));
    }
    if !within {
        cx.failure = Some(format!("memo size {max_memo} exceeds the bound {bound:.1}"));
    }
    Ok(())
}
