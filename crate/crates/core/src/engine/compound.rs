use super::{GamePosition, Outcome, OutcomeClass};

/// Selective compound `G_1 ∨ … ∨ G_n`: a move picks a non-empty set of
/// unfinished components and moves in each of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectiveCompound<P> {
    pub components: Vec<P>,
}

pub fn compound<P: GamePosition>(components: Vec<P>) -> SelectiveCompound<P> {
    assert!(!components.is_empty(), "a compound needs at least one component");
    SelectiveCompound { components }
}

impl<P: GamePosition> GamePosition for SelectiveCompound<P> {
    /// Component keys are sorted, so reordering components shares one entry.
    fn canonical_key(&self) -> String {
        let mut keys: Vec<String> = self.components.iter().map(|c| c.canonical_key()).collect();
        keys.sort();
        let mut out = String::from("V(");
        for k in keys {
            out.push_str(&format!("{}:{k}", k.len()));
        }
        out.push(')');
        out
    }

    /// Enumerated by subset bitmask (ascending), then lexicographically over
    /// the chosen components' option lists.
    fn options(&self) -> Vec<Self> {
        let per_component: Vec<Vec<P>> = self.components.iter().map(|c| c.options()).collect();
        let active: Vec<usize> = (0..self.components.len())
            .filter(|&i| !per_component[i].is_empty())
            .collect();
        assert!(active.len() < 32, "compound too wide");
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << active.len()) {
            let chosen: Vec<usize> = active
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &i)| i)
                .collect();
            let mut picks = vec![0usize; chosen.len()];
            'product: loop {
                let mut next = self.components.clone();
                for (slot, &i) in chosen.iter().enumerate() {
                    next[i] = per_component[i][picks[slot]].clone();
                }
                out.push(SelectiveCompound { components: next });
                for slot in (0..chosen.len()).rev() {
                    picks[slot] += 1;
                    if picks[slot] < per_component[chosen[slot]].len() {
                        continue 'product;
                    }
                    picks[slot] = 0;
                }
                break;
            }
        }
        out
    }

    fn is_terminal(&self) -> bool {
        self.components.iter().all(GamePosition::is_terminal)
    }
}

/// Normal P exactly when every component is normal P.
pub fn compound_normal_outcome(components: &[Outcome]) -> OutcomeClass {
    if components.iter().all(|o| o.normal.is_p()) {
        OutcomeClass::P
    } else {
        OutcomeClass::N
    }
}

/// Misère P exactly when a single component is unfinished and it is misère P,
/// or at least two are unfinished and every component is normal P.
pub fn compound_misere_outcome(components: &[(bool, Outcome)]) -> OutcomeClass {
    let live: Vec<&Outcome> = components
        .iter()
        .filter(|(terminal, _)| !terminal)
        .map(|(_, o)| o)
        .collect();
    let p = match live.len() {
        0 => false,
        1 => live[0].misere.is_p(),
        _ => components.iter().all(|(_, o)| o.normal.is_p()),
    };
    if p {
        OutcomeClass::P
    } else {
        OutcomeClass::N
    }
}
