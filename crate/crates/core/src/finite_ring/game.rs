use std::collections::BTreeSet;
use std::rc::Rc;

use super::{FiniteCommRing, Ideal};
use crate::engine::{GamePosition, Outcome, Solver};
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// The ring `R/I`, represented by the ideal `I` of a fixed ring `R`.
#[derive(Clone, Debug)]
pub struct RingPosition {
    ring: Rc<FiniteCommRing>,
    ideal: Ideal,
}

impl RingPosition {
    pub fn start(ring: Rc<FiniteCommRing>) -> Self {
        let ideal = ring.zero_ideal();
        RingPosition { ring, ideal }
    }

    pub fn ring(&self) -> &FiniteCommRing {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The position after quotienting by `a`, which must be non-zero in `R/I`.
    pub fn play(&self, a: usize) -> Result<Self> {
        let ideal = self.ring.ideal_extend(&self.ideal, a)?;
        Ok(RingPosition { ring: Rc::clone(&self.ring), ideal })
    }

    /// One element per distinct option, in increasing id order.
    pub fn moves(&self) -> Vec<(usize, RingPosition)> {
        let n = self.ring.size();
        let mut covered = vec![false; n];
        for &i in self.ideal.elements() {
            covered[i as usize] = true;
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for a in 0..n {
            if covered[a] {
                continue;
            }
            // I + ⟨a⟩ only depends on a + I
            for &i in self.ideal.elements() {
                covered[self.ring.add(a, i as usize)] = true;
            }
            let ideal = self.ring.extend_unchecked(&self.ideal, a);
            if seen.insert(ideal.clone()) {
                out.push((a, RingPosition { ring: Rc::clone(&self.ring), ideal }));
            }
        }
        out
    }
}

impl GamePosition for RingPosition {
    fn canonical_key(&self) -> String {
        format!("ri[{}]:{}", self.ring.name(), self.ideal.key())
    }

    fn options(&self) -> Vec<Self> {
        self.moves().into_iter().map(|(_, p)| p).collect()
    }

    fn is_terminal(&self) -> bool {
        self.ideal.size() == self.ring.size()
    }
}

/// Outcome of the ideal game from `R` itself. Normal play is N for every
/// non-zero ring (quotient by 1); this is checked on the computed result.
pub fn ring_game_outcome(r: &FiniteCommRing) -> Result<Outcome> {
    let outcome = Solver::outcome_only().outcome(&RingPosition::start(Rc::new(r.clone())))?;
    if !r.is_zero_ring() && outcome.normal.is_p() {
        return Err(Error::Validation(format!("{} came out normal P", r.name())));
    }
    Ok(outcome)
}

pub fn ring_nimber(r: &FiniteCommRing) -> Result<Ordinal> {
    Solver::new().nimber(&RingPosition::start(Rc::new(r.clone())))
}
