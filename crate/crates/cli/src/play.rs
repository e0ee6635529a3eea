//! Interactive play: the human moves first, the engine answers with a
//! winning move whenever it has one.

use std::io::{BufRead, Write};

use algame::abelian::{outcome_classifier, parse_element, winning_move, FinGenAbGroup};
use algame::engine::{GamePosition, Rule, Solver};
use algame::finite_group::GroupPosition;
use algame::finite_ring::{parse_ring_element, RingPosition};
use algame::{Error, Result};

use crate::Target;

trait Playable: Sized {
    fn show(&self) -> String;
    fn over(&self) -> bool;
    fn human(&self, text: &str) -> Result<Self>;
    /// The engine's move, as text, and the resulting position.
    fn reply(&self, solver: &mut Solver, rule: Rule) -> Result<(String, Self)>;
}

impl Playable for FinGenAbGroup {
    fn show(&self) -> String {
        self.to_string()
    }

    fn over(&self) -> bool {
        self.is_trivial()
    }

    fn human(&self, text: &str) -> Result<Self> {
        self.quotient_by_element(&parse_element(self, text)?)
    }

    fn reply(&self, _: &mut Solver, rule: Rule) -> Result<(String, Self)> {
        let x = if outcome_classifier(self).under(rule).is_n() {
            winning_move(self, rule)?
        } else {
            self.elements()?.swap_remove(1)
        };
        Ok((x.to_string(), self.quotient_by_element(&x)?))
    }
}

impl Playable for GroupPosition {
    fn show(&self) -> String {
        let g = self.group();
        let labels: Vec<String> = self.subgroup().elements().iter().map(|&e| g.label(e as usize)).collect();
        format!("{} mod {{{}}}", g.name(), labels.join(", "))
    }

    fn over(&self) -> bool {
        self.is_terminal()
    }

    fn human(&self, text: &str) -> Result<Self> {
        self.play(self.group().find_element(text)?)
    }

    fn reply(&self, solver: &mut Solver, rule: Rule) -> Result<(String, Self)> {
        let i = solver.winning_option(self, rule)?.map_or(0, |(i, _)| i);
        let (g, next) = self.moves().swap_remove(i);
        Ok((self.group().label(g), next))
    }
}

impl Playable for RingPosition {
    fn show(&self) -> String {
        let r = self.ring();
        let elts: Vec<String> = self.ideal().elements().iter().map(|&e| r.format_element(e as usize)).collect();
        format!("{} mod ({})", r.name(), elts.join(" | "))
    }

    fn over(&self) -> bool {
        self.is_terminal()
    }

    fn human(&self, text: &str) -> Result<Self> {
        self.play(parse_ring_element(self.ring(), text)?)
    }

    fn reply(&self, solver: &mut Solver, rule: Rule) -> Result<(String, Self)> {
        let i = solver.winning_option(self, rule)?.map_or(0, |(i, _)| i);
        let (a, next) = self.moves().swap_remove(i);
        Ok((self.ring().format_element(a), next))
    }
}

pub(crate) fn session(target: Target, rule: Rule, solver: &mut Solver, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<()> {
    match target {
        Target::Abelian(a) if a.is_finite() => run(a, rule, solver, input, out),
        Target::Abelian(a) => Err(Error::Unsupported(format!("{a} is infinite; play needs a finite group"))),
        Target::Group(g) => run(g, rule, solver, input, out),
        Target::Ring(r) => run(r, rule, solver, input, out),
        Target::Nim(_) | Target::Compound(_) => {
            Err(Error::Unsupported("play supports abelian groups, groups and rings".into()))
        }
    }
}

/// Announces the result when `mover` faces a finished game.
fn finish(out: &mut dyn Write, rule: Rule, mover: &str) -> Result<()> {
    let human_wins = match rule {
        Rule::Normal => mover == "engine",
        Rule::Misere => mover == "you",
    };
    let winner = if human_wins { "you win" } else { "engine wins" };
    writeln!(out, "game over ({rule} play, {mover} cannot move): {winner}")?;
    Ok(())
}

fn run<P: Playable>(mut pos: P, rule: Rule, solver: &mut Solver, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<()> {
    loop {
        writeln!(out, "position: {}", pos.show())?;
        if pos.over() {
            return finish(out, rule, "you");
        }
        let next = loop {
            write!(out, "your move> ")?;
            out.flush()?;
            let mut line = String::new();
            if input.read_line(&mut line)? == 0 {
                writeln!(out)?;
                writeln!(out, "session aborted")?;
                return Ok(());
            }
            match pos.human(line.trim()) {
                Ok(p) => break p,
                Err(e) => writeln!(out, "invalid move: {e}")?,
            }
        };
        pos = next;
        writeln!(out, "position: {}", pos.show())?;
        if pos.over() {
            return finish(out, rule, "engine");
        }
        let (text, next) = pos.reply(solver, rule)?;
        writeln!(out, "engine plays {text}")?;
        pos = next;
    }
}
