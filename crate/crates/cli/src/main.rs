//! `algame`: outcomes, nimbers and winning moves for quotient games on
//! abelian groups, finite groups and finite commutative rings.

mod play;

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;
use std::rc::Rc;

use algame::abelian::{
    canonicalize, nimber_bruteforce, nimber_formula, outcome_classifier, winning_move, FinGenAbGroup,
};
use algame::engine::{NimPile, Rule, SelectiveCompound, Solver, SolverConfig, DEFAULT_MAX_POSITIONS};
use algame::finite_group::{parse_group, GameKind, GroupPosition};
use algame::finite_ring::{parse_ring, RingPosition};
use algame::mixed::{parse_compound, Component};
use algame::{verify, Error, Ordinal};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "algame", version, about = "Impartial quotient games on algebraic structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print N or P for the starting position.
    Outcome(Query),
    /// Print the Sprague–Grundy value.
    Nimber(Query),
    /// Print a winning first move.
    Move(Query),
    /// List the options of the starting position.
    Options(Query),
    /// Tab-separated table of α(Z/p^n ⊕ Z/p^m).
    Table {
        #[arg(long, default_value_t = 11)]
        max_n: u32,
        #[arg(long, default_value_t = 14)]
        max_m: u32,
    },
    /// Run a verification suite (or `all`).
    Verify { suite: String },
    /// Play against the engine; you move first.
    Play(Query),
}

#[derive(Args)]
struct Query {
    #[command(flatten)]
    target: TargetArgs,
    #[arg(long, value_enum, default_value_t = RuleArg::Normal)]
    rule: RuleArg,
    /// Which group game `--group` plays.
    #[arg(long, value_enum, default_value_t = GameArg::Quotient)]
    game: GameArg,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_POSITIONS)]
    max_positions: usize,
    /// Memo cache file, read before solving and rewritten afterwards.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TargetArgs {
    /// e.g. "Z/4 + Z/8", "(Z/2)^3 + Z"
    #[arg(long)]
    abelian: Option<String>,
    /// e.g. "D4", "SG16_3", "S4", "D4xC2"
    #[arg(long)]
    group: Option<String>,
    /// e.g. "GF(3)", "Z/12", "SqZero(2,2)xGF(2)"
    #[arg(long)]
    ring: Option<String>,
    /// A single Nim pile.
    #[arg(long)]
    nim: Option<u64>,
    /// `;`-separated components, e.g. "*1; ab:Z/4; ring:GF(2)"
    #[arg(long)]
    compound: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Normal,
    Misere,
}

impl From<RuleArg> for Rule {
    fn from(r: RuleArg) -> Rule {
        match r {
            RuleArg::Normal => Rule::Normal,
            RuleArg::Misere => Rule::Misere,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GameArg {
    Quotient,
    Subgroup,
}

pub(crate) enum Target {
    Abelian(FinGenAbGroup),
    Group(GroupPosition),
    Ring(RingPosition),
    Nim(NimPile),
    Compound(SelectiveCompound<Component>),
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidInput(_) => 2,
            Error::Unsupported(_) | Error::InfiniteOptions(_) => 3,
            Error::ResourceLimit(_) => 4,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CliResult<u8> {
    match command {
        Command::Outcome(q) => outcome(&q),
        Command::Nimber(q) => nimber(&q),
        Command::Move(q) => first_move(&q),
        Command::Options(q) => options(&q),
        Command::Table { max_n, max_m } => table(max_n, max_m),
        Command::Verify { suite } => verify_suite(&suite),
        Command::Play(q) => {
            let target = parse_target(&q)?;
            let mut solver = make_solver(&q)?;
            let stdin = std::io::stdin();
            play::session(target, q.rule.into(), &mut solver, &mut stdin.lock(), &mut std::io::stdout())?;
            Ok(0)
        }
    }
}

fn input_text(q: &Query) -> String {
    let t = &q.target;
    t.abelian
        .clone()
        .or_else(|| t.group.clone())
        .or_else(|| t.ring.clone())
        .or_else(|| t.nim.map(|n| format!("*{n}")))
        .or_else(|| t.compound.clone())
        .unwrap_or_default()
}

fn parse_target(q: &Query) -> CliResult<Target> {
    let t = &q.target;
    if let Some(s) = &t.abelian {
        return Ok(Target::Abelian(s.parse()?));
    }
    if let Some(s) = &t.group {
        let kind = match q.game {
            GameArg::Quotient => GameKind::Quotient,
            GameArg::Subgroup => GameKind::Subgroup,
        };
        return Ok(Target::Group(GroupPosition::start(Rc::new(parse_group(s)?), kind)?));
    }
    if let Some(s) = &t.ring {
        return Ok(Target::Ring(RingPosition::start(Rc::new(parse_ring(s)?))));
    }
    if let Some(n) = t.nim {
        return Ok(Target::Nim(NimPile::new(n)));
    }
    let s = t.compound.as_deref().expect("clap requires one target");
    Ok(Target::Compound(parse_compound(s)?))
}

fn make_solver(q: &Query) -> CliResult<Solver> {
    let mut solver = Solver::with_config(SolverConfig {
        max_positions: q.max_positions,
        ..SolverConfig::default()
    });
    if let Some(path) = &q.cache {
        if path.exists() {
            let file = File::open(path).map_err(Error::from)?;
            solver.memo_mut().load(BufReader::new(file))?;
        }
    }
    Ok(solver)
}

fn save_cache(q: &Query, solver: &Solver) -> CliResult<()> {
    if let Some(path) = &q.cache {
        let file = File::create(path).map_err(Error::from)?;
        solver.memo().save(BufWriter::new(file))?;
    }
    Ok(())
}

fn emit(q: &Query, field: &str, value: &str) {
    if q.json {
        let rule: Rule = q.rule.into();
        let doc = json!({ "input": input_text(q), "rule": rule.to_string(), field: value });
        println!("{doc}");
    } else {
        println!("{value}");
    }
}

fn outcome(q: &Query) -> CliResult<u8> {
    let rule: Rule = q.rule.into();
    let mut solver = make_solver(q)?;
    let o = match parse_target(q)? {
        Target::Abelian(a) => outcome_classifier(&a),
        Target::Group(g) => solver.outcome(&g)?,
        Target::Ring(r) => solver.outcome(&r)?,
        Target::Nim(n) => solver.outcome(&n)?,
        Target::Compound(c) => solver.outcome(&c)?,
    };
    save_cache(q, &solver)?;
    emit(q, "outcome", &o.under(rule).to_string());
    Ok(0)
}

fn nimber(q: &Query) -> CliResult<u8> {
    let mut solver = make_solver(q)?;
    let v: Ordinal = match parse_target(q)? {
        Target::Abelian(a) if a.is_finite() => nimber_bruteforce(&a, &mut solver)?,
        Target::Abelian(a) => nimber_formula(&a)?,
        Target::Group(g) => solver.nimber(&g)?,
        Target::Ring(r) => solver.nimber(&r)?,
        Target::Nim(n) => solver.nimber(&n)?,
        Target::Compound(c) => solver.nimber(&c)?,
    };
    save_cache(q, &solver)?;
    emit(q, "nimber", &v.to_string());
    Ok(0)
}

fn no_winning_move(rule: Rule) -> Failure {
    Failure {
        code: 3,
        message: format!("no winning move: the position is a {rule} P-position"),
    }
}

fn first_move(q: &Query) -> CliResult<u8> {
    let rule: Rule = q.rule.into();
    let mut solver = make_solver(q)?;
    let text = match parse_target(q)? {
        Target::Abelian(a) => {
            if outcome_classifier(&a).under(rule).is_p() {
                return Err(no_winning_move(rule));
            }
            winning_move(&a, rule)?.to_string()
        }
        Target::Group(g) => {
            let (i, _) = solver.winning_option(&g, rule)?.ok_or_else(|| no_winning_move(rule))?;
            let (elt, _) = &g.moves()[i];
            g.group().label(*elt)
        }
        Target::Ring(r) => {
            let (i, _) = solver.winning_option(&r, rule)?.ok_or_else(|| no_winning_move(rule))?;
            let (elt, _) = &r.moves()[i];
            r.ring().format_element(*elt)
        }
        Target::Nim(n) => {
            let (_, to) = solver.winning_option(&n, rule)?.ok_or_else(|| no_winning_move(rule))?;
            format!("*{}", to.size)
        }
        Target::Compound(c) => {
            let (_, to) = solver.winning_option(&c, rule)?.ok_or_else(|| no_winning_move(rule))?;
            describe_compound(&to)
        }
    };
    save_cache(q, &solver)?;
    emit(q, "move", &text);
    Ok(0)
}

fn describe_compound(c: &SelectiveCompound<Component>) -> String {
    use algame::engine::GamePosition;
    let parts: Vec<String> = c.components.iter().map(GamePosition::canonical_key).collect();
    parts.join("; ")
}

fn options(q: &Query) -> CliResult<u8> {
    use algame::engine::GamePosition;
    let lines: Vec<String> = match parse_target(q)? {
        Target::Abelian(a) => a.options()?.iter().map(ToString::to_string).collect(),
        Target::Group(g) => g
            .moves()
            .iter()
            .map(|(elt, p)| {
                let quotient = g.group().order() / p.subgroup().order();
                format!("{}\t{}", g.group().label(*elt), quotient)
            })
            .collect(),
        Target::Ring(r) => r
            .moves()
            .iter()
            .map(|(elt, p)| {
                let quotient = r.ring().size() / p.ideal().size();
                format!("{}\t{}", r.ring().format_element(*elt), quotient)
            })
            .collect(),
        Target::Nim(n) => n.options().iter().map(|p| format!("*{}", p.size)).collect(),
        Target::Compound(c) => c.options().iter().map(describe_compound).collect(),
    };
    if q.json {
        let rule: Rule = q.rule.into();
        println!("{}", json!({ "input": input_text(q), "rule": rule.to_string(), "options": lines }));
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    Ok(0)
}

fn table(max_n: u32, max_m: u32) -> CliResult<u8> {
    if max_n > max_m {
        return Err(Error::InvalidInput(format!("need max-n <= max-m, got {max_n} > {max_m}")).into());
    }
    if max_m > 40 {
        return Err(Error::ResourceLimit("max-m above 40 overflows the group orders".into()).into());
    }
    let mut solver = Solver::new();
    let header: Vec<String> = (0..=max_m).map(|m| m.to_string()).collect();
    println!("n\\m\t{}", header.join("\t"));
    for n in 0..=max_n {
        let mut cells = vec![n.to_string()];
        for m in 0..=max_m {
            if m < n {
                cells.push(String::new());
                continue;
            }
            let a = canonicalize(&[1u64 << n, 1u64 << m]);
            cells.push(nimber_bruteforce(&a, &mut solver)?.to_string());
        }
        println!("{}", cells.join("\t"));
    }
    Ok(0)
}

fn verify_suite(suite: &str) -> CliResult<u8> {
    let mut ok = true;
    for report in verify::run(suite)? {
        print!("{report}");
        ok &= report.passed();
    }
    Ok(if ok { 0 } else { 1 })
}
