//! The `christoffel` command line.
//!
//! Exit status 0 means the computation finished, whatever the boolean answer.
//! Argument errors exit with 2, violated preconditions with 3 and oracle
//! disagreements (under `--oracle` or `oracle-check`) with 4.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::arith::{gcd, lcm};
use crate::beatty::{
    beatty_disjoint_exists, beatty_slice, fraenkel_word, letter_frequencies, BeattySpec,
    FraenkelIndex,
};
use crate::christoffel::{
    cayley_graph, christoffel_path, christoffel_word, letter_positions, modular_complement,
    ChristoffelSpec, PositionSet, Step,
};
use crate::error::Error;
use crate::money::{
    boundary_word_with, frobenius_number, nonrepresentable_count, representable, shifted_cayley,
    CoinPair,
};
use crate::oracle::{
    oracle_beatty_disjoint, oracle_frobenius, oracle_superimposable, validate_shift,
};
use crate::superimpose::{
    analyze, collapse_merge, interval_family, merge_pipeline, merge_superimposition,
    reversal_superimposition_criterion, SuperimpositionProblem,
};
use crate::words::{
    conjugate, decimate, is_balanced, is_circularly_balanced, is_primitive, make_word, projection,
    reverse, DecimationSpec, Direction, OrderedAlphabet, Word,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "christoffel",
    version,
    about = "Christoffel words and their superimpositions"
)]
pub struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Christoffel word C(n, alpha).
    Gen(GenArgs),
    /// Positions of the low letter, optionally with the Cayley graph and lattice path.
    Positions(PositionsArgs),
    /// Balance, circular balance and primitivity of a word.
    Balance(BalanceArgs),
    /// Decide, count and witness the superimposition of C(n, q*a) and C(m, q*b).
    Superimpose(SuperimposeArgs),
    /// Remove p out of every q occurrences of a letter.
    Decimate(DecimateArgs),
    /// Merge two perfectly superimposed words and collapse the filler.
    Merge(MergeArgs),
    /// Frobenius number of two coins.
    Frobenius(FrobeniusArgs),
    /// Boundary word of the money-problem quadrant.
    Boundary(BoundaryArgs),
    /// The Fraenkel word Fr_k.
    Fraenkel(FraenkelArgs),
    /// Beatty sequence slices and the disjointness criterion.
    Beatty(BeattyArgs),
    /// Sweep all problems up to a size against the brute-force oracle.
    OracleCheck(OracleCheckArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: usize,
    /// Low and high letter.
    #[arg(long, default_value = "a,x")]
    letters: String,
    /// Reverse the word.
    #[arg(long)]
    reverse: bool,
    /// Rotate left by this many letters (after reversing).
    #[arg(long, allow_hyphen_values = true)]
    shift: Option<i64>,
}

#[derive(Debug, Args)]
pub struct PositionsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: usize,
    /// Include the Cayley graph traversal.
    #[arg(long)]
    cayley: bool,
    /// Include the lattice path (R for right, U for up).
    #[arg(long)]
    path: bool,
    /// Cross-check the positions against the word itself.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Args)]
pub struct BalanceArgs {
    #[arg(long)]
    word: String,
    /// Alphabet in increasing order; defaults to the sorted letters of the word.
    #[arg(long)]
    letters: Option<String>,
    /// Also print the projection onto this letter.
    #[arg(long)]
    project: Option<char>,
    #[arg(long, default_value_t = 'x')]
    filler: char,
}

#[derive(Debug, Args)]
pub struct SuperimposeArgs {
    #[arg(long)]
    n: usize,
    /// Reduced low-letter count of the first word.
    #[arg(long)]
    a: usize,
    /// Length of the second word; defaults to n.
    #[arg(long)]
    m: Option<usize>,
    /// Reduced low-letter count of the second word.
    #[arg(long)]
    b: usize,
    #[arg(long, default_value_t = 1)]
    q: usize,
    /// Include the number of valid shifts of the longer word.
    #[arg(long)]
    count: bool,
    /// Include the canonical shift of the reversed second word.
    #[arg(long)]
    shift: bool,
    /// Include every lift of the canonical shift.
    #[arg(long)]
    lifts: bool,
    /// Include the offsets M(r) and the intervals I_r.
    #[arg(long)]
    intervals: bool,
    /// Include the Bezout test for C(n, qa) against the reversal of C(n, qb).
    #[arg(long)]
    reversal: bool,
    /// Cross-check against the brute-force oracle.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Args)]
pub struct DecimateArgs {
    #[arg(long)]
    word: String,
    #[arg(long)]
    letters: Option<String>,
    /// Letter to remove.
    #[arg(long)]
    letter: char,
    /// Removed occurrences per block; negative counts blocks from the left.
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    /// Block size.
    #[arg(long)]
    q: usize,
}

#[derive(Debug, Args)]
pub struct MergeArgs {
    /// First word (marked letter and filler).
    #[arg(long, requires = "v", conflicts_with_all = ["n", "a", "b"])]
    u: Option<String>,
    /// Second word (marked letter and filler).
    #[arg(long, requires = "u")]
    v: Option<String>,
    /// Build C(n, a) and the reversal of C(n, b) instead.
    #[arg(long, requires_all = ["a", "b"])]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// First marked letter, second marked letter, filler.
    #[arg(long, default_value = "a,b,z")]
    letters: String,
}

#[derive(Debug, Args)]
pub struct FrobeniusArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    /// Also decide whether this amount can be paid.
    #[arg(long)]
    amount: Option<u64>,
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    /// Letters for right and up moves.
    #[arg(long, default_value = "α,β")]
    letters: String,
    /// Also print the walk values.
    #[arg(long)]
    cayley: bool,
}

#[derive(Debug, Args)]
pub struct FraenkelArgs {
    #[arg(long)]
    k: u32,
    /// Include letter frequencies.
    #[arg(long)]
    frequencies: bool,
    /// Include the circular balance check.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args)]
pub struct BeattyArgs {
    /// Slope p/q of the sequence to slice.
    #[arg(long, conflicts_with = "disjoint", requires_all = ["from", "to"])]
    slope: Option<String>,
    /// Offset t/d of the sliced sequence.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    offset: String,
    #[arg(long, allow_hyphen_values = true)]
    from: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    to: Option<i64>,
    /// Two slopes p1/q1 p2/q2 whose sequences should be made disjoint.
    #[arg(long, num_args = 2, value_names = ["P1/Q1", "P2/Q2"], required_unless_present = "slope")]
    disjoint: Option<Vec<String>>,
    /// Offset grid denominator for the oracle; defaults to lcm(q1, q2).
    #[arg(long)]
    grid: Option<i64>,
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Args)]
pub struct OracleCheckArgs {
    /// Largest word length in the sweep.
    #[arg(long, default_value_t = 24)]
    max: usize,
}

/// What a finished invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Precondition(Error),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// A verb's result: the JSON document and, when it differs from the generic
/// `key: value` listing, a dedicated text form.
struct Payload {
    json: Value,
    text: Option<String>,
}

impl Payload {
    fn generic(json: Value) -> Self {
        Self { json, text: None }
    }

    fn with_text(json: Value, text: String) -> Self {
        Self {
            json,
            text: Some(text),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match execute(&cli.command) {
        Ok(payload) => Outcome {
            code: EXIT_OK,
            stdout: render(&payload.json, payload.text.as_deref(), cli.json),
            stderr: String::new(),
        },
        Err(Failure::Precondition(e)) => Outcome {
            code: EXIT_PRECONDITION,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Disagreement(msg)) => Outcome {
            code: EXIT_DISAGREEMENT,
            stdout: String::new(),
            stderr: format!("oracle disagreement: {msg}\n"),
        },
    }
}

/// Renders a payload; text falls back to one `key: value` line per field.
pub fn render(json: &Value, text: Option<&str>, as_json: bool) -> String {
    if as_json {
        return format!("{json}\n");
    }
    if let Some(text) = text {
        return format!("{text}\n");
    }
    match json {
        Value::Object(map) => map
            .iter()
            .map(|(key, value)| format!("{key}: {}\n", plain(value)))
            .collect(),
        other => format!("{}\n", plain(other)),
    }
}

fn plain(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|item| {
                if item.is_array() {
                    item.to_string()
                } else {
                    plain(item)
                }
            })
            .collect::<Vec<_>>()
            .join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", plain(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn execute(command: &Command) -> Run<Payload> {
    match command {
        Command::Gen(args) => gen(args),
        Command::Positions(args) => positions(args),
        Command::Balance(args) => balance(args),
        Command::Superimpose(args) => superimpose(args),
        Command::Decimate(args) => decimate_verb(args),
        Command::Merge(args) => merge(args),
        Command::Frobenius(args) => frobenius(args),
        Command::Boundary(args) => boundary(args),
        Command::Fraenkel(args) => fraenkel(args),
        Command::Beatty(args) => beatty(args),
        Command::OracleCheck(args) => oracle_check(args),
    }
}

fn letter_list(spec: &str, count: usize) -> Run<Vec<char>> {
    let alphabet = OrderedAlphabet::parse(spec)?;
    if alphabet.len() != count {
        return Err(Error::InvalidLetterToken {
            token: format!("{spec} (expected {count} letters)"),
        }
        .into());
    }
    Ok(alphabet.letters().to_vec())
}

/// Uses the explicit alphabet if given, otherwise the sorted letters of `word`.
fn parse_word(word: &str, letters: Option<&str>) -> Run<Word> {
    let alphabet = match letters {
        Some(spec) => OrderedAlphabet::parse(spec)?,
        None => {
            let mut seen: Vec<char> = word.chars().collect();
            seen.sort_unstable();
            seen.dedup();
            OrderedAlphabet::new(seen)?
        }
    };
    Ok(make_word(word, &alphabet)?)
}

fn gen(args: &GenArgs) -> Run<Payload> {
    let [low, high] = letter_list(&args.letters, 2)?[..] else {
        unreachable!()
    };
    let mut word = christoffel_word(&ChristoffelSpec::new(args.n, args.alpha, low, high)?);
    if args.reverse {
        word = reverse(&word);
    }
    if let Some(k) = args.shift {
        word = conjugate(&word, k)?;
    }
    let text = word.to_string();
    let json = json!({ "n": args.n, "alpha": args.alpha, "word": text });
    Ok(Payload::with_text(json, text))
}

fn positions(args: &PositionsArgs) -> Run<Payload> {
    let spec = ChristoffelSpec::ax(args.n, args.alpha)?;
    let set = letter_positions(&spec);
    if args.oracle {
        let direct = PositionSet::of_letter(&christoffel_word(&spec), spec.low());
        if direct != set {
            return Err(Failure::Disagreement(format!(
                "positions {:?} but the word has {:?}",
                set.to_vec(),
                direct.to_vec()
            )));
        }
    }
    let complement = (spec.power() == 1 && args.n >= 2)
        .then(|| modular_complement(args.alpha, args.n))
        .transpose()?;
    let mut map = Map::new();
    map.insert("n".into(), json!(args.n));
    map.insert("alpha".into(), json!(args.alpha));
    map.insert("complement".into(), json!(complement));
    map.insert("positions".into(), json!(set.to_vec()));
    let mut lines = vec![join(set.residues().iter(), " ")];
    if args.cayley {
        let order = cayley_graph(&spec)?.vertex_order();
        lines.push(join(order.iter(), " -> "));
        map.insert("cayley".into(), json!(order));
    }
    if args.path {
        let path = christoffel_path(spec.alpha(), spec.beta())?;
        let steps: String = path
            .steps()
            .iter()
            .map(|s| match s {
                Step::Right => 'R',
                Step::Up => 'U',
            })
            .collect();
        lines.push(steps.clone());
        map.insert("path".into(), json!(steps));
    }
    Ok(Payload::with_text(Value::Object(map), lines.join("\n")))
}

fn join<T: ToString>(items: impl Iterator<Item = T>, sep: &str) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn balance(args: &BalanceArgs) -> Run<Payload> {
    let word = parse_word(&args.word, args.letters.as_deref())?;
    let mut map = Map::new();
    map.insert("word".into(), json!(word.to_string()));
    map.insert("balanced".into(), json!(is_balanced(&word)));
    map.insert(
        "circularly_balanced".into(),
        json!(is_circularly_balanced(&word)),
    );
    map.insert("primitive".into(), json!(is_primitive(&word)?));
    if let Some(letter) = args.project {
        let projected = projection(&word, letter, args.filler)?;
        map.insert("projection".into(), json!(projected.to_string()));
        map.insert(
            "projection_circularly_balanced".into(),
            json!(is_circularly_balanced(&projected)),
        );
    }
    Ok(Payload::generic(Value::Object(map)))
}

fn superimpose(args: &SuperimposeArgs) -> Run<Payload> {
    let m = args.m.unwrap_or(args.n);
    let problem = SuperimpositionProblem::new(args.n, m, args.q, args.a, args.b)?;
    let report = analyze(&problem)?;
    let mut map = Map::new();
    map.insert("superimposable".into(), json!(report.superimposable));
    map.insert("x".into(), json!(report.bezout.x));
    map.insert("y".into(), json!(report.bezout.y));
    if args.count {
        map.insert("count".into(), json!(report.count));
    }
    if args.shift || args.lifts {
        map.insert(
            "canonical_shift".into(),
            json!(report.canonical_shift.map(|s| s.shift)),
        );
        map.insert("reversed".into(), json!(report.reversed_form));
    }
    if args.lifts {
        map.insert(
            "lifts".into(),
            json!(report.canonical_shift.map(|s| s.lifts())),
        );
    }
    if args.intervals {
        let family = interval_family(&problem);
        map.insert("offsets".into(), json!(family.offsets));
        let intervals: Vec<[i64; 2]> = family
            .i_intervals
            .iter()
            .map(|&(lo, hi)| [lo, hi])
            .collect();
        map.insert("intervals".into(), json!(intervals));
    }
    if args.reversal {
        if m != args.n {
            return Err(Error::LengthMismatch {
                left: args.n,
                right: m,
            }
            .into());
        }
        let criterion =
            reversal_superimposition_criterion(args.n, problem.a_total(), problem.b_total())?;
        map.insert("reversal".into(), json!(criterion));
    }
    if args.oracle {
        let (u, v) = (problem.first_word(), problem.second_word());
        let oracle = oracle_superimposable(&u, &v)?;
        if oracle.decision != report.superimposable || oracle.witnesses.len() as u64 != report.count
        {
            return Err(Failure::Disagreement(format!(
                "formula says {} with {} shifts, oracle found {} shifts",
                report.superimposable,
                report.count,
                oracle.witnesses.len()
            )));
        }
        if let Some(shift) = report.canonical_shift {
            if !validate_shift(&u, &reverse(&v), shift.shift)? {
                return Err(Failure::Disagreement(format!(
                    "canonical shift {} fails",
                    shift.shift
                )));
            }
        }
        map.insert("oracle_count".into(), json!(oracle.witnesses.len()));
    }
    Ok(Payload::generic(Value::Object(map)))
}

fn decimate_verb(args: &DecimateArgs) -> Run<Payload> {
    let word = parse_word(&args.word, args.letters.as_deref())?;
    let direction = if args.p < 0 {
        Direction::LeftToRight
    } else {
        Direction::RightToLeft
    };
    let spec = DecimationSpec::new(
        args.p.unsigned_abs() as usize,
        args.q,
        direction,
        args.letter,
    )?;
    let out = decimate(&word, &spec)?;
    let text = out.to_string();
    let json = json!({
        "input": word.to_string(),
        "output": text,
        "removed": word.len() - out.len(),
    });
    Ok(Payload::with_text(json, text))
}

fn merge(args: &MergeArgs) -> Run<Payload> {
    let letters = letter_list(&args.letters, 3)?;
    let [a, b, z] = [letters[0], letters[1], letters[2]];
    let (u, v, merged, collapsed, target) = match (&args.u, &args.v, args.n) {
        (Some(u), Some(v), _) => {
            let u = make_word(u, &OrderedAlphabet::new([a, z])?)?;
            let v = make_word(v, &OrderedAlphabet::new([b, z])?)?;
            let merged = merge_superimposition(&u, &v)?;
            let collapsed = collapse_merge(&merged, z)?;
            (u, v, merged, collapsed, None)
        }
        (_, _, Some(n)) => {
            let (alpha, beta) = (
                args.a.expect("required by clap"),
                args.b.expect("required by clap"),
            );
            let stages = merge_pipeline(n, alpha, beta, [a, b, z])?;
            let target = christoffel_word(&ChristoffelSpec::new(alpha + beta, alpha, a, b)?);
            (
                stages.u,
                stages.v,
                stages.merged,
                stages.collapsed,
                Some(target),
            )
        }
        _ => {
            return Err(Error::InvalidProblem {
                reason: "merge needs either --u and --v or --n, --a and --b".into(),
            }
            .into())
        }
    };
    let mut map = Map::new();
    map.insert("u".into(), json!(u.to_string()));
    map.insert("v".into(), json!(v.to_string()));
    map.insert("merged".into(), json!(merged.to_string()));
    map.insert("collapsed".into(), json!(collapsed.to_string()));
    if let Some(target) = target {
        map.insert("christoffel".into(), json!(target == collapsed));
    }
    Ok(Payload::generic(Value::Object(map)))
}

fn frobenius(args: &FrobeniusArgs) -> Run<Payload> {
    let coins = CoinPair::new(args.a, args.b)?;
    let (g, count) = (frobenius_number(&coins), nonrepresentable_count(&coins));
    if args.oracle && args.a >= 2 && args.b >= 2 {
        let sieve = oracle_frobenius(&coins);
        if sieve != (g, count) {
            return Err(Failure::Disagreement(format!(
                "formula gives ({g}, {count}), sieve gives {sieve:?}"
            )));
        }
    }
    let mut text = format!("g({},{}) = {g}; non-representable: {count}", args.a, args.b);
    let mut map = Map::new();
    map.insert("a".into(), json!(args.a));
    map.insert("b".into(), json!(args.b));
    map.insert("frobenius".into(), json!(g));
    map.insert("nonrepresentable".into(), json!(count));
    if let Some(amount) = args.amount {
        let ok = representable(&coins, amount);
        text.push_str(&format!("\nrepresentable({amount}) = {ok}"));
        map.insert("amount".into(), json!(amount));
        map.insert("representable".into(), json!(ok));
    }
    Ok(Payload::with_text(Value::Object(map), text))
}

fn boundary(args: &BoundaryArgs) -> Run<Payload> {
    let [right, up] = letter_list(&args.letters, 2)?[..] else {
        unreachable!()
    };
    let coins = CoinPair::new(args.a, args.b)?;
    let walk = boundary_word_with(&coins, right, up)?;
    let mut text = walk.word().to_string();
    let json = json!({
        "a": args.a,
        "b": args.b,
        "word": text,
        "values": walk.values(),
    });
    if args.cayley {
        let values = if args.a >= 2 && args.b >= 2 {
            shifted_cayley(&coins)?
        } else {
            walk.values().to_vec()
        };
        text.push('\n');
        text.push_str(&join(values.iter(), " -> "));
    }
    Ok(Payload::with_text(json, text))
}

fn fraenkel(args: &FraenkelArgs) -> Run<Payload> {
    let word = fraenkel_word(FraenkelIndex::new(args.k)?);
    let mut text = word.to_string();
    let mut map = Map::new();
    map.insert("k".into(), json!(args.k));
    map.insert("word".into(), json!(text));
    if args.frequencies {
        let freqs = letter_frequencies(&word);
        text.push('\n');
        text.push_str(&join(freqs.iter().map(|(c, k)| format!("{c}:{k}")), " "));
        let obj: Map<String, Value> = freqs
            .iter()
            .map(|(c, k)| (c.to_string(), json!(k)))
            .collect();
        map.insert("frequencies".into(), Value::Object(obj));
    }
    if args.check {
        let ok = is_circularly_balanced(&word);
        text.push_str(&format!("\ncircularly balanced: {ok}"));
        map.insert("circularly_balanced".into(), json!(ok));
    }
    Ok(Payload::with_text(Value::Object(map), text))
}

fn parse_fraction(s: &str) -> Run<(i64, i64)> {
    let bad = || Error::InvalidProblem {
        reason: format!("{s:?} is not a fraction p/q"),
    };
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        ),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if q <= 0 {
        return Err(Error::NonPositive {
            what: "denominator",
            value: q,
        }
        .into());
    }
    Ok((p, q))
}

fn beatty(args: &BeattyArgs) -> Run<Payload> {
    if let Some(slope) = &args.slope {
        let (p, q) = parse_fraction(slope)?;
        let (t, d) = parse_fraction(&args.offset)?;
        let spec = BeattySpec::new(p, q, Ratio::new(t, d))?;
        let (from, to) = (
            args.from.expect("required by clap"),
            args.to.expect("required by clap"),
        );
        let terms = beatty_slice(&spec, from, to)?;
        let json = json!({
            "slope": spec.slope().to_string(),
            "offset": spec.offset().to_string(),
            "from": from,
            "to": to,
            "terms": terms,
        });
        return Ok(Payload::with_text(json, join(terms.iter(), " ")));
    }
    let slopes = args.disjoint.as_ref().expect("required by clap");
    let (p1, q1) = parse_fraction(&slopes[0])?;
    let (p2, q2) = parse_fraction(&slopes[1])?;
    let exists = beatty_disjoint_exists(p1, q1, p2, q2)?;
    let mut map = Map::new();
    map.insert("slopes".into(), json!([slopes[0], slopes[1]]));
    map.insert("disjoint".into(), json!(exists));
    if args.oracle {
        let d = args.grid.unwrap_or(lcm(q1 as u64, q2 as u64) as i64);
        let witness = oracle_beatty_disjoint(p1, q1, p2, q2, d)?;
        if witness.is_some() != exists {
            return Err(Failure::Disagreement(format!(
                "criterion says {exists}, offset search on grid 1/{d} says {}",
                witness.is_some()
            )));
        }
        let offsets = witness.map(|w| [w.offset1.to_string(), w.offset2.to_string()]);
        map.insert("offsets".into(), json!(offsets));
    }
    Ok(Payload::generic(Value::Object(map)))
}

fn oracle_check(args: &OracleCheckArgs) -> Run<Payload> {
    let max = args.max;
    let (mut instances, mut superimposable) = (0u64, 0u64);
    let mut failures = Vec::new();
    let words = |len: usize, marked: char| -> Vec<Option<Word>> {
        (0..len)
            .map(|k| {
                (k >= 1 && gcd(k as u64, len as u64) == 1)
                    .then(|| christoffel_word(&ChristoffelSpec::new(len, k, marked, 'x').unwrap()))
            })
            .collect()
    };
    let firsts: Vec<_> = (0..=max).map(|n| words(n, 'a')).collect();
    let seconds: Vec<_> = (0..=max).map(|m| words(m, 'b')).collect();
    for (n, first) in firsts.iter().enumerate().skip(2) {
        for (m, second) in seconds.iter().enumerate().skip(2) {
            for (a, u) in first
                .iter()
                .enumerate()
                .filter_map(|(a, u)| Some((a, u.as_ref()?)))
            {
                for (b, v) in second
                    .iter()
                    .enumerate()
                    .filter_map(|(b, v)| Some((b, v.as_ref()?)))
                {
                    let problem = SuperimpositionProblem::from_totals(n, a, m, b)?;
                    let report = analyze(&problem)?;
                    let oracle = oracle_superimposable(u, v)?;
                    instances += 1;
                    superimposable += u64::from(oracle.decision);
                    if report.superimposable != oracle.decision
                        || report.count != oracle.witnesses.len() as u64
                    {
                        failures.push(format!("C({n},{a}) vs C({m},{b})"));
                    }
                }
            }
        }
    }
    if !failures.is_empty() {
        return Err(Failure::Disagreement(format!(
            "{} of {instances} problems, first: {}",
            failures.len(),
            failures[0]
        )));
    }
    Ok(Payload::generic(json!({
        "max": max,
        "instances": instances,
        "superimposable": superimposable,
        "disagreements": 0,
    })))
}
