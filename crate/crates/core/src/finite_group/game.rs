use std::collections::BTreeSet;
use std::rc::Rc;

use super::{FiniteGroup, Subgroup};
use crate::engine::{GamePosition, Outcome, Solver};
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

pub const QUOTIENT_GAME_MAX_ORDER: usize = 512;
pub const SUBGROUP_GAME_MAX_ORDER: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameKind {
    /// Positions are normal subgroups `N`, standing for `G/N`; a move adds
    /// the normal closure of one element.
    Quotient,
    /// Positions are subgroups `U`; a move adds one element.
    Subgroup,
}

/// A position in one of the two games on a fixed group.
#[derive(Clone, Debug)]
pub struct GroupPosition {
    group: Rc<FiniteGroup>,
    kind: GameKind,
    sub: Subgroup,
    /// Generators of `sub` (as a plain subgroup), kept to make closures cheap.
    gens: Vec<usize>,
}

impl GroupPosition {
    pub fn start(group: Rc<FiniteGroup>, kind: GameKind) -> Result<Self> {
        let cap = match kind {
            GameKind::Quotient => QUOTIENT_GAME_MAX_ORDER,
            GameKind::Subgroup => SUBGROUP_GAME_MAX_ORDER,
        };
        if group.order() > cap {
            return Err(Error::ResourceLimit(format!(
                "group of order {} exceeds the {kind:?} game limit {cap}",
                group.order()
            )));
        }
        let sub = group.trivial_subgroup();
        Ok(GroupPosition { group, kind, sub, gens: Vec::new() })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    /// The position after choosing `g`; `g` must lie outside the current subgroup.
    pub fn play(&self, g: usize) -> Result<Self> {
        if g >= self.group.order() {
            return Err(Error::InvalidInput(format!("no element {g}")));
        }
        if self.sub.contains(g) {
            return Err(Error::InvalidInput(format!(
                "{} is already in the subgroup",
                self.group.label(g)
            )));
        }
        Ok(self.extend(g))
    }

    fn extend(&self, g: usize) -> Self {
        let mut gens = self.gens.clone();
        match self.kind {
            GameKind::Quotient => gens.extend(self.group.conjugacy_class(g)),
            GameKind::Subgroup => gens.push(g),
        }
        gens.sort_unstable();
        gens.dedup();
        let sub = self.group.generated_subgroup(&gens);
        GroupPosition { group: Rc::clone(&self.group), kind: self.kind, sub, gens }
    }

    /// One element per distinct option, in increasing id order, paired with
    /// the resulting position.
    pub fn moves(&self) -> Vec<(usize, GroupPosition)> {
        let n = self.group.order();
        let mut covered = vec![false; n];
        for &h in self.sub.elements() {
            covered[h as usize] = true;
        }
        let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
        let mut out = Vec::new();
        for g in 0..n {
            if covered[g] {
                continue;
            }
            // the result only depends on the coset gU
            for &h in self.sub.elements() {
                covered[self.group.mul(g, h as usize)] = true;
            }
            let next = self.extend(g);
            if seen.insert(next.sub.clone()) {
                out.push((g, next));
            }
        }
        out
    }
}

impl GamePosition for GroupPosition {
    fn canonical_key(&self) -> String {
        let tag = match self.kind {
            GameKind::Quotient => "gq",
            GameKind::Subgroup => "gs",
        };
        format!("{tag}[{}]:{}", self.group.name(), self.sub.key())
    }

    fn options(&self) -> Vec<Self> {
        self.moves().into_iter().map(|(_, p)| p).collect()
    }

    fn is_terminal(&self) -> bool {
        self.sub.order() == self.group.order()
    }
}

fn solve(g: &FiniteGroup, kind: GameKind, nimber: bool) -> Result<(Outcome, Option<Ordinal>)> {
    let start = GroupPosition::start(Rc::new(g.clone()), kind)?;
    let mut solver = Solver::outcome_only();
    if nimber {
        let value = solver.nimber(&start)?;
        Ok((solver.outcome(&start)?, Some(value)))
    } else {
        Ok((solver.outcome(&start)?, None))
    }
}

/// Outcome of the quotient game starting from `g` itself.
pub fn quotient_game_outcome(g: &FiniteGroup) -> Result<Outcome> {
    Ok(solve(g, GameKind::Quotient, false)?.0)
}

pub fn quotient_game_nimber(g: &FiniteGroup) -> Result<Ordinal> {
    Ok(solve(g, GameKind::Quotient, true)?.1.expect("requested"))
}

/// Outcome of the subgroup game starting from the trivial subgroup.
pub fn subgroup_game_outcome(g: &FiniteGroup) -> Result<Outcome> {
    Ok(solve(g, GameKind::Subgroup, false)?.0)
}

pub fn subgroup_game_nimber(g: &FiniteGroup) -> Result<Ordinal> {
    Ok(solve(g, GameKind::Subgroup, true)?.1.expect("requested"))
}
