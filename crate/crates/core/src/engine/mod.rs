//! Generic impartial-game solver.
//!
//! Positions are anything implementing [`GamePosition`]. The [`Solver`]
//! walks the option graph depth-first with an explicit stack and records,
//! for every canonical key it meets, the normal and misère outcome and
//! (optionally) the nimber.

mod compound;
mod memo;
mod nim;

use std::collections::HashSet;
use std::fmt;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::ordinal::{mex_u64, Ordinal};

pub use compound::{compound, compound_misere_outcome, compound_normal_outcome, SelectiveCompound};
pub use memo::{MemoEntry, MemoTable};
pub use nim::NimPile;

/// Default cap on the number of distinct positions a solver may record.
pub const DEFAULT_MAX_POSITIONS: usize = 10_000_000;

/// A position in an impartial game.
///
/// Two positions with the same `canonical_key` must describe the same game.
/// Keys of different position types should not collide, so implementations
/// prefix them with a short tag.
pub trait GamePosition: Clone {
    fn canonical_key(&self) -> String;

    fn options(&self) -> Vec<Self>;

    fn is_terminal(&self) -> bool {
        self.options().is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OutcomeClass {
    /// The next player wins.
    N,
    /// The previous player wins.
    P,
}

impl OutcomeClass {
    pub fn is_p(self) -> bool {
        self == OutcomeClass::P
    }

    pub fn is_n(self) -> bool {
        self == OutcomeClass::N
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeClass::N => "N",
            OutcomeClass::P => "P",
        })
    }
}

impl std::str::FromStr for OutcomeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" => Ok(OutcomeClass::N),
            "P" => Ok(OutcomeClass::P),
            _ => Err(Error::Parse(format!("expected N or P, got {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Normal,
    Misere,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Normal => "normal",
            Rule::Misere => "misere",
        })
    }
}

impl std::str::FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "normal" => Ok(Rule::Normal),
            "misere" | "misère" => Ok(Rule::Misere),
            _ => Err(Error::Parse(format!("unknown play rule {s:?}"))),
        }
    }
}

/// Outcome of a position under both play rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Outcome {
    pub normal: OutcomeClass,
    pub misere: OutcomeClass,
}

impl Outcome {
    pub const TERMINAL: Outcome = Outcome {
        normal: OutcomeClass::P,
        misere: OutcomeClass::N,
    };

    pub fn new(normal: OutcomeClass, misere: OutcomeClass) -> Self {
        Outcome { normal, misere }
    }

    pub fn under(&self, rule: Rule) -> OutcomeClass {
        match rule {
            Rule::Normal => self.normal,
            Rule::Misere => self.misere,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub max_positions: usize,
    /// Track nimbers as well as outcomes.
    pub nimbers: bool,
    /// When set, options are visited in a seeded random order. Results must
    /// not depend on it.
    pub shuffle_seed: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_positions: DEFAULT_MAX_POSITIONS,
            nimbers: true,
            shuffle_seed: None,
        }
    }
}

struct Frame<P> {
    key: String,
    terminal: bool,
    options: Vec<P>,
    option_keys: Vec<String>,
    next: usize,
}

/// Memoizing solver. One solver may be shared by positions of several types
/// as long as their keys do not collide.
pub struct Solver {
    config: SolverConfig,
    memo: MemoTable,
    rng: Option<StdRng>,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new()
    }
}

impl Solver {
    pub fn new() -> Self {
        Solver::with_config(SolverConfig::default())
    }

    pub fn with_config(config: SolverConfig) -> Self {
        let rng = config.shuffle_seed.map(StdRng::seed_from_u64);
        Solver {
            config,
            memo: MemoTable::new(),
            rng,
        }
    }

    pub fn outcome_only() -> Self {
        Solver::with_config(SolverConfig {
            nimbers: false,
            ..SolverConfig::default()
        })
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    pub fn memo_mut(&mut self) -> &mut MemoTable {
        &mut self.memo
    }

    pub fn outcome<P: GamePosition>(&mut self, pos: &P) -> Result<Outcome> {
        Ok(self.solve(pos, self.config.nimbers)?.outcome)
    }

    /// Nimber of `pos`, always finite for positions with finitely many options.
    pub fn nimber<P: GamePosition>(&mut self, pos: &P) -> Result<Ordinal> {
        let entry = self.solve(pos, true)?;
        Ok(Ordinal::finite(entry.nimber.expect("nimber requested")))
    }

    /// First option, in the position's own enumeration order, that is a
    /// P-position under `rule`.
    pub fn winning_option<P: GamePosition>(
        &mut self,
        pos: &P,
        rule: Rule,
    ) -> Result<Option<(usize, P)>> {
        for (i, opt) in pos.options().into_iter().enumerate() {
            if self.solve(&opt, false)?.outcome.under(rule).is_p() {
                return Ok(Some((i, opt)));
            }
        }
        Ok(None)
    }

    pub fn solve<P: GamePosition>(&mut self, root: &P, need_nimber: bool) -> Result<MemoEntry> {
        let need_nimber = need_nimber || self.config.nimbers;
        let root_key = root.canonical_key();
        if let Some(e) = self.lookup(&root_key, need_nimber) {
            return Ok(e);
        }
        let mut in_progress: HashSet<String> = HashSet::new();
        let mut stack: Vec<Frame<P>> = Vec::new();
        self.check_cap(0)?;
        in_progress.insert(root_key.clone());
        stack.push(self.open(root.clone(), root_key.clone()));

        loop {
            let depth = stack.len();
            let Some(frame) = stack.last_mut() else { break };
            if frame.next < frame.options.len() {
                let i = frame.next;
                frame.next += 1;
                let child_key = &frame.option_keys[i];
                if self.lookup(child_key, need_nimber).is_some() {
                    continue;
                }
                if in_progress.contains(child_key) {
                    return Err(Error::InvalidInput(format!(
                        "option graph is not well-founded at {child_key}"
                    )));
                }
                let child = frame.options[i].clone();
                let child_key = child_key.clone();
                self.check_cap(depth)?;
                in_progress.insert(child_key.clone());
                let child_frame = self.open(child, child_key);
                stack.push(child_frame);
            } else {
                let frame = stack.pop().expect("non-empty stack");
                let entry = self.combine(&frame, need_nimber);
                in_progress.remove(&frame.key);
                self.memo.insert(frame.key, entry)?;
            }
        }
        Ok(self
            .lookup(&root_key, need_nimber)
            .expect("root solved"))
    }

    fn lookup(&self, key: &str, need_nimber: bool) -> Option<MemoEntry> {
        self.memo
            .get(key)
            .filter(|e| !need_nimber || e.nimber.is_some())
            .copied()
    }

    fn check_cap(&self, in_flight: usize) -> Result<()> {
        if self.memo.len() + in_flight >= self.config.max_positions {
            return Err(Error::ResourceLimit(format!(
                "more than {} positions",
                self.config.max_positions
            )));
        }
        Ok(())
    }

    fn open<P: GamePosition>(&mut self, pos: P, key: String) -> Frame<P> {
        let mut options = pos.options();
        let terminal = options.is_empty();
        debug_assert_eq!(terminal, pos.is_terminal(), "terminal test disagrees at {key}");
        if let Some(rng) = self.rng.as_mut() {
            options.shuffle(rng);
        }
        let option_keys = options.iter().map(GamePosition::canonical_key).collect();
        Frame {
            key,
            terminal,
            options,
            option_keys,
            next: 0,
        }
    }

    fn combine<P>(&self, frame: &Frame<P>, need_nimber: bool) -> MemoEntry {
        if frame.terminal {
            return MemoEntry {
                outcome: Outcome::TERMINAL,
                nimber: Some(0),
            };
        }
        let children: Vec<MemoEntry> = frame
            .option_keys
            .iter()
            .map(|k| *self.memo.get(k).expect("option solved before parent"))
            .collect();
        let normal = if children.iter().any(|c| c.outcome.normal.is_p()) {
            OutcomeClass::N
        } else {
            OutcomeClass::P
        };
        let misere = if children.iter().any(|c| c.outcome.misere.is_p()) {
            OutcomeClass::N
        } else {
            OutcomeClass::P
        };
        let nimber = need_nimber.then(|| {
            mex_u64(children.iter().map(|c| c.nimber.expect("child nimber")))
        });
        MemoEntry {
            outcome: Outcome { normal, misere },
            nimber,
        }
    }
}
