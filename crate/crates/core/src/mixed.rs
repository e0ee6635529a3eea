//! Positions of any of the supported games behind one type, so that
//! selective compounds can mix Nim piles, abelian groups, groups and rings.

use std::rc::Rc;

use crate::abelian::{FinGenAbGroup, FiniteAbelian};
use crate::engine::{compound, GamePosition, NimPile, SelectiveCompound};
use crate::error::{Error, Result};
use crate::finite_group::{parse_group, GameKind, GroupPosition};
use crate::finite_ring::{parse_ring, RingPosition};

#[derive(Clone, Debug)]
pub enum Component {
    Nim(NimPile),
    Abelian(FiniteAbelian),
    Group(GroupPosition),
    Ring(RingPosition),
}

impl GamePosition for Component {
    fn canonical_key(&self) -> String {
        match self {
            Component::Nim(p) => p.canonical_key(),
            Component::Abelian(a) => a.canonical_key(),
            Component::Group(g) => g.canonical_key(),
            Component::Ring(r) => r.canonical_key(),
        }
    }

    fn options(&self) -> Vec<Self> {
        match self {
            Component::Nim(p) => p.options().into_iter().map(Component::Nim).collect(),
            Component::Abelian(a) => a.options().into_iter().map(Component::Abelian).collect(),
            Component::Group(g) => g.options().into_iter().map(Component::Group).collect(),
            Component::Ring(r) => r.options().into_iter().map(Component::Ring).collect(),
        }
    }

    fn is_terminal(&self) -> bool {
        match self {
            Component::Nim(p) => p.is_terminal(),
            Component::Abelian(a) => a.is_terminal(),
            Component::Group(g) => g.is_terminal(),
            Component::Ring(r) => r.is_terminal(),
        }
    }
}

/// Parses one component: `*<n>` or `nim:<n>`, `ab:<abelian spec>`,
/// `group:<group spec>` (quotient game), `subgroup:<group spec>`, `ring:<ring spec>`.
pub fn parse_component(text: &str) -> Result<Component> {
    let text = text.trim();
    if let Some(n) = text.strip_prefix('*').or_else(|| text.strip_prefix("nim:")) {
        let n = n.trim().parse().map_err(|_| Error::Parse(format!("bad Nim pile {text:?}")))?;
        return Ok(Component::Nim(NimPile::new(n)));
    }
    let (kind, spec) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected kind:spec, got {text:?}")))?;
    match kind.trim() {
        "ab" | "abelian" => {
            let a: FinGenAbGroup = spec.parse()?;
            if !a.is_finite() {
                return Err(Error::InfiniteOptions(format!("{a} has infinitely many options")));
            }
            Ok(Component::Abelian(FiniteAbelian::new(a)?))
        }
        "group" => Ok(Component::Group(GroupPosition::start(Rc::new(parse_group(spec)?), GameKind::Quotient)?)),
        "subgroup" => Ok(Component::Group(GroupPosition::start(Rc::new(parse_group(spec)?), GameKind::Subgroup)?)),
        "ring" => Ok(Component::Ring(RingPosition::start(Rc::new(parse_ring(spec)?)))),
        other => Err(Error::Parse(format!("unknown component kind {other:?}"))),
    }
}

/// Parses `;`-separated components into their selective compound.
pub fn parse_compound(text: &str) -> Result<SelectiveCompound<Component>> {
    let parts: Vec<Component> = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_component)
        .collect::<Result<_>>()?;
    if parts.is_empty() {
        return Err(Error::Parse("empty compound".into()));
    }
    Ok(compound(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Solver;
    use crate::ordinal::Ordinal;

    #[test]
    fn mixed_compounds() {
        let mut solver = Solver::new();
        let g = parse_compound("*1; *2").unwrap();
        assert_eq!(solver.nimber(&g).unwrap(), Ordinal::finite(3));
        let h = parse_compound("ab:Z/2; ring:GF(2)").unwrap();
        assert_eq!(solver.nimber(&h).unwrap(), Ordinal::finite(2));
        let k = parse_compound("group:C2xC2; nim:0").unwrap();
        assert_eq!(solver.nimber(&k).unwrap(), Ordinal::zero());
        for bad in ["", "*x", "ab:Z", "foo:1", "ring:GF(4)"] {
            assert!(parse_compound(bad).is_err(), "{bad:?}");
        }
    }
}
