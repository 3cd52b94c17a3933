//! The batch command-line interface.
//!
//! Subcommands: `parse`, `nf`, `eq`, `oracle-eq`, `eta`, `pm2`,
//! `markov apply`, `markov search`, `closure inv`, `selftest`. The strand
//! count is always explicit (`-n`, and `-m` for the second word of a Markov
//! search). Exit codes: 0 ok/equal, 1 error, 2 unequal, 3 unknown.
//!
//! Output is deterministic: identical invocations produce identical bytes,
//! with randomized checks seeded through `--seed`.

use std::collections::BTreeMap;

use serde_json::json;

use crate::markov::{apply_move, markov_search, random_legal_move, MarkovMove};
use crate::oracle::{bfs_equal, relation_set, Verdict};
use crate::ring::{equal_pm_capped, eta_capped, pm2_canonical, DEFAULT_TERM_CAP};
use crate::rng::{random_word, Rng};
use crate::word::{parse, render, Word};
use crate::{closure, garside, Error};

/// Outcome of one invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Success; for decision commands, the positive answer.
    Ok,
    /// A decision command answered in the negative.
    Unequal,
    /// A bounded search was inconclusive.
    Unknown,
    /// Bad invocation or failed precondition.
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Unequal => 2,
            Status::Unknown => 3,
        }
    }
}

/// What an invocation produced: a status, text for stdout, and an optional
/// one-line diagnostic for stderr.
#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub output: String,
    pub diagnostic: Option<String>,
}

impl CommandResult {
    fn ok(output: impl Into<String>) -> Self {
        CommandResult {
            status: Status::Ok,
            output: output.into(),
            diagnostic: None,
        }
    }

    fn with_status(status: Status, output: impl Into<String>) -> Self {
        CommandResult {
            status,
            output: output.into(),
            diagnostic: None,
        }
    }

    fn error(message: impl Into<String>) -> Self {
        CommandResult {
            status: Status::Error,
            output: String::new(),
            diagnostic: Some(format!("error: {}", message.into())),
        }
    }
}

impl From<Error> for CommandResult {
    fn from(e: Error) -> Self {
        CommandResult::error(e.to_string())
    }
}

/// Flags that take a value; boolean flags stand alone.
const VALUE_FLAGS: &[&str] = &[
    "-n", "-m", "--depth", "--maxlen", "--budget", "--cap", "--seed", "--max-n",
];
const BOOL_FLAGS: &[&str] = &["--json", "--word"];

struct Invocation {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
}

impl Invocation {
    fn parse(args: &[String]) -> Result<Self, String> {
        let mut positional = Vec::new();
        let mut flags = BTreeMap::new();
        let mut iter = args.iter();
        while let Some(arg) = iter.next() {
            let flag_like =
                arg.starts_with('-') && !arg.chars().nth(1).is_some_and(|c| c.is_ascii_digit());
            if flag_like && arg.len() > 1 {
                if VALUE_FLAGS.contains(&arg.as_str()) {
                    let value = iter
                        .next()
                        .ok_or_else(|| format!("flag {arg} expects a value"))?;
                    flags.insert(arg.clone(), value.clone());
                } else if BOOL_FLAGS.contains(&arg.as_str()) {
                    flags.insert(arg.clone(), String::new());
                } else {
                    return Err(format!("unknown flag {arg}"));
                }
            } else {
                positional.push(arg.clone());
            }
        }
        Ok(Invocation { positional, flags })
    }

    fn has(&self, flag: &str) -> bool {
        self.flags.contains_key(flag)
    }

    fn uint(&self, flag: &str) -> Result<Option<usize>, String> {
        match self.flags.get(flag) {
            None => Ok(None),
            Some(v) => v
                .parse::<usize>()
                .map(Some)
                .map_err(|_| format!("flag {flag} expects a nonnegative integer, got `{v}`")),
        }
    }

    fn u64_flag(&self, flag: &str) -> Result<Option<u64>, String> {
        match self.flags.get(flag) {
            None => Ok(None),
            Some(v) => v
                .parse::<u64>()
                .map(Some)
                .map_err(|_| format!("flag {flag} expects a 64-bit integer, got `{v}`")),
        }
    }

    fn strands(&self) -> Result<usize, String> {
        self.uint("-n")?
            .ok_or_else(|| "missing required flag -n <strands>".to_string())
    }

    fn word(&self, index: usize, strands: usize) -> Result<Word, Error> {
        let text = self.positional.get(index).cloned().unwrap_or_default();
        parse(&text, strands)
    }

    fn expect_positional(&self, count: usize, usage: &str) -> Result<(), String> {
        if self.positional.len() != count {
            return Err(format!(
                "expected {count} positional argument(s), got {}; usage: {usage}",
                self.positional.len()
            ));
        }
        Ok(())
    }
}

/// Parses one move of the mini-language against the current strand count:
/// `M1:s1,S2`, `M2:3`, `M3:+`, `M3:-d`, `M4`, `M4:d`.
pub fn parse_move(spec: &str, strands: usize) -> Result<MarkovMove, String> {
    let (head, arg) = match spec.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (spec, None),
    };
    match (head, arg) {
        ("M1", Some(tokens)) => {
            let text = tokens.replace(',', " ");
            let by = parse(&text, strands).map_err(|e| e.to_string())?;
            Ok(MarkovMove::Conjugate { by })
        }
        ("M1", None) => Err("M1 needs a conjugator, e.g. M1:s1".to_string()),
        ("M2", Some(k)) => {
            let split = k
                .parse::<usize>()
                .map_err(|_| format!("M2 split must be an integer, got `{k}`"))?;
            Ok(MarkovMove::CyclicShift { split })
        }
        ("M2", None) => Err("M2 needs a split, e.g. M2:3".to_string()),
        ("M3", Some("+")) => Ok(MarkovMove::Stabilize { positive: true }),
        ("M3", Some("-")) => Ok(MarkovMove::Stabilize { positive: false }),
        ("M3", Some("+d")) => Ok(MarkovMove::Destabilize { positive: true }),
        ("M3", Some("-d")) => Ok(MarkovMove::Destabilize { positive: false }),
        ("M4", None) => Ok(MarkovMove::StabilizePre),
        ("M4", Some("d")) => Ok(MarkovMove::DestabilizePre),
        _ => Err(format!("unrecognized move `{spec}`")),
    }
}

/// Dispatches an argument vector (without the program name).
pub fn run(args: &[String]) -> CommandResult {
    let Some(command) = args.first().map(String::as_str) else {
        return CommandResult::error(
            "missing subcommand; one of parse, nf, eq, oracle-eq, eta, pm2, markov, closure, selftest",
        );
    };
    let rest = &args[1..];
    match command {
        "parse" => cmd_parse(rest),
        "nf" => cmd_nf(rest),
        "eq" => cmd_eq(rest),
        "oracle-eq" => cmd_oracle_eq(rest),
        "eta" => cmd_eta(rest),
        "pm2" => cmd_pm2(rest),
        "markov" => match rest.first().map(String::as_str) {
            Some("apply") => cmd_markov_apply(&rest[1..]),
            Some("search") => cmd_markov_search(&rest[1..]),
            _ => CommandResult::error("markov expects a mode: apply or search"),
        },
        "closure" => match rest.first().map(String::as_str) {
            Some("inv") => cmd_closure_inv(&rest[1..]),
            _ => CommandResult::error("closure expects the mode inv"),
        },
        "selftest" => cmd_selftest(rest),
        other => CommandResult::error(format!("unknown subcommand `{other}`")),
    }
}

macro_rules! try_cli {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => return CommandResult::error(e),
        }
    };
}

macro_rules! try_op {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => return CommandResult::from(e),
        }
    };
}

fn cmd_parse(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    try_cli!(inv.expect_positional(1, "parse -n <strands> \"<word>\""));
    let n = try_cli!(inv.strands());
    let word = try_op!(inv.word(0, n));
    CommandResult::ok(render(&word))
}

fn cmd_nf(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    try_cli!(inv.expect_positional(1, "nf -n <strands> \"<word>\" [--word]"));
    let n = try_cli!(inv.strands());
    let word = try_op!(inv.word(0, n));
    let nf = try_op!(garside::normal_form(&word));
    if inv.has("--word") {
        CommandResult::ok(render(&garside::nf_to_word(&nf)))
    } else {
        CommandResult::ok(nf.serialize())
    }
}

fn cmd_eq(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    try_cli!(inv.expect_positional(2, "eq -n <strands> \"<u>\" \"<v>\" [--json] [--cap T]"));
    let n = try_cli!(inv.strands());
    let u = try_op!(inv.word(0, n));
    let v = try_op!(inv.word(1, n));
    let cap = try_cli!(inv.uint("--cap")).unwrap_or(DEFAULT_TERM_CAP);
    let equal = try_op!(equal_pm_capped(&u, &v, cap));
    let output = if inv.has("--json") {
        json!({ "equal": equal, "strands": n }).to_string()
    } else if equal {
        "equal".to_string()
    } else {
        "unequal".to_string()
    };
    CommandResult::with_status(if equal { Status::Ok } else { Status::Unequal }, output)
}

fn cmd_oracle_eq(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    try_cli!(inv.expect_positional(
        2,
        "oracle-eq -n <strands> \"<u>\" \"<v>\" [--depth D] [--maxlen M]"
    ));
    let n = try_cli!(inv.strands());
    let u = try_op!(inv.word(0, n));
    let v = try_op!(inv.word(1, n));
    let depth = try_cli!(inv.uint("--depth")).unwrap_or(6);
    let maxlen = try_cli!(inv.uint("--maxlen")).unwrap_or(u.len().max(v.len()) + 4);
    let verdict = try_op!(bfs_equal(&u, &v, depth, maxlen));
    match verdict {
        Verdict::Equal => CommandResult::ok("equal"),
        Verdict::Unknown => CommandResult::with_status(Status::Unknown, "unknown"),
    }
}

fn cmd_eta(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    try_cli!(inv.expect_positional(1, "eta -n <strands> \"<word>\" [--json] [--cap T]"));
    let n = try_cli!(inv.strands());
    let word = try_op!(inv.word(0, n));
    let cap = try_cli!(inv.uint("--cap")).unwrap_or(DEFAULT_TERM_CAP);
    let image = try_op!(eta_capped(&word, cap));
    if inv.has("--json") {
        let mut terms: Vec<(String, i64)> =
            image.terms().map(|(nf, c)| (nf.serialize(), c)).collect();
        terms.sort();
        let terms: Vec<_> = terms
            .into_iter()
            .map(|(nf, c)| json!({ "coeff": c, "nf": nf }))
            .collect();
        CommandResult::ok(json!({ "strands": n, "terms": terms }).to_string())
    } else {
        CommandResult::ok(image.render())
    }
}

fn cmd_pm2(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    try_cli!(inv.expect_positional(1, "pm2 -n 2 \"<word>\""));
    let n = try_cli!(inv.strands());
    let word = try_op!(inv.word(0, n));
    let (sigma_sum, pre_count) = try_op!(pm2_canonical(&word));
    CommandResult::ok(format!("{sigma_sum} {pre_count}"))
}

fn cmd_markov_apply(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    if inv.positional.is_empty() {
        return CommandResult::error(
            "usage: markov apply -n <strands> \"<word>\" <move> [<move> ...]",
        );
    }
    let n = try_cli!(inv.strands());
    let mut word = try_op!(inv.word(0, n));
    for spec in &inv.positional[1..] {
        let mv = try_cli!(parse_move(spec, word.strands()));
        word = try_op!(apply_move(&word, &mv));
    }
    if inv.has("--json") {
        CommandResult::ok(json!({ "strands": word.strands(), "word": render(&word) }).to_string())
    } else {
        CommandResult::ok(format!("n: {}\nword: {}", word.strands(), render(&word)))
    }
}

fn cmd_markov_search(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    try_cli!(inv.expect_positional(
        2,
        "markov search -n <strands> [-m <strands>] \"<from>\" \"<to>\" [--budget K] [--cap L]"
    ));
    let n = try_cli!(inv.strands());
    let m = try_cli!(inv.uint("-m")).unwrap_or(n);
    let from = try_op!(inv.word(0, n));
    let to = try_op!(parse(&inv.positional[1], m));
    let budget = try_cli!(inv.uint("--budget")).unwrap_or(5);
    let cap = try_cli!(inv.uint("--cap")).unwrap_or(from.len().max(to.len()) + 2 * budget + 2);
    match markov_search(&from, &to, budget, cap) {
        Some(moves) => {
            let rendered: Vec<String> = moves.iter().map(MarkovMove::render).collect();
            CommandResult::ok(format!("found: {}", rendered.join(" ")))
        }
        None => CommandResult::with_status(Status::Unknown, "inconclusive"),
    }
}

fn cmd_closure_inv(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    try_cli!(inv.expect_positional(1, "closure inv -n <strands> \"<word>\" [--cap K]"));
    let n = try_cli!(inv.strands());
    let word = try_op!(inv.word(0, n));
    let cap = try_cli!(inv.uint("--cap")).unwrap_or(closure::DEFAULT_RESOLUTION_CAP);
    let profile = try_op!(closure::linking_profile_capped(&word, cap));
    let entries: Vec<_> = profile
        .entries()
        .iter()
        .map(|e| {
            json!({
                "components": e.component_count,
                "doubled_linkings": e.doubled_linkings,
                "weight": e.weight.to_string(),
            })
        })
        .collect();
    CommandResult::ok(
        json!({
            "components": closure::component_count(&word),
            "profile": entries,
        })
        .to_string(),
    )
}

fn cmd_selftest(args: &[String]) -> CommandResult {
    let inv = try_cli!(Invocation::parse(args));
    let max_n = try_cli!(inv.uint("--max-n")).unwrap_or(5).max(2);
    let seed = try_cli!(inv.u64_flag("--seed")).unwrap_or(0xbead_cafe);
    let mut lines = Vec::new();

    // Relation suite: every defining relation instance decided equal.
    let mut instances = 0usize;
    for n in 2..=max_n {
        for rel in try_op!(relation_set(n)) {
            instances += 1;
            match equal_pm_capped(&rel.lhs, &rel.rhs, DEFAULT_TERM_CAP) {
                Ok(true) => {}
                Ok(false) => {
                    return CommandResult::error(format!(
                        "relation {:?} failed at n={n}: {} vs {}",
                        rel.tag,
                        render(&rel.lhs),
                        render(&rel.rhs)
                    ))
                }
                Err(e) => return CommandResult::from(e),
            }
        }
    }
    lines.push(format!(
        "relations n=2..{max_n}: {instances} instances equal"
    ));

    // Seeded spot checks.
    let mut rng = Rng::new(seed);
    for _ in 0..100 {
        let n = 2 + rng.below(3) as usize;
        let u = random_word(&mut rng, n, 6, 3);
        let v = random_word(&mut rng, n, 6, 3);
        let uv = try_op!(crate::word::concat(&u, &v));
        let lhs = try_op!(eta_capped(&uv, DEFAULT_TERM_CAP));
        let rhs = try_op!(try_op!(eta_capped(&u, DEFAULT_TERM_CAP))
            .mul(&try_op!(eta_capped(&v, DEFAULT_TERM_CAP))));
        if lhs != rhs {
            return CommandResult::error(format!(
                "desingularization not multiplicative on {} | {}",
                render(&u),
                render(&v)
            ));
        }
    }
    lines.push("desingularization homomorphism: 100 random pairs".to_string());

    for _ in 0..100 {
        let n = 2 + rng.below(3) as usize;
        let word = random_word(&mut rng, n, 6, 3);
        let mv = random_legal_move(&mut rng, &word);
        let moved = try_op!(apply_move(&word, &mv));
        let before = (
            closure::component_count(&word),
            try_op!(closure::linking_profile(&word)),
        );
        let after = (
            closure::component_count(&moved),
            try_op!(closure::linking_profile(&moved)),
        );
        if before != after {
            return CommandResult::error(format!(
                "closure invariants changed under {} on {}",
                mv.render(),
                render(&word)
            ));
        }
    }
    lines.push("markov invariance: 100 random moves".to_string());
    lines.push(format!("seed: {seed}"));
    lines.push("selftest: PASS".to_string());
    CommandResult::ok(lines.join("\n"))
}
