//! Identification of small groups, for reporting only; the solvers never
//! compare groups up to isomorphism.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::FiniteGroup;
use crate::abelian::FinGenAbGroup;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupType {
    Abelian(FinGenAbGroup),
    /// `D_n`, of order `2n`, `n ≥ 3`.
    Dihedral(usize),
    /// `Dic_n`, of order `4n`, `n ≥ 2`.
    Dicyclic(usize),
    Other { order: usize, name: String },
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::Abelian(a) => write!(f, "{a}"),
            GroupType::Dihedral(n) => write!(f, "D{n}"),
            GroupType::Dicyclic(2) => write!(f, "Q8"),
            GroupType::Dicyclic(n) => write!(f, "Dic{n}"),
            GroupType::Other { order, name } => write!(f, "{name} (order {order})"),
        }
    }
}

/// Recognizes abelian, dihedral and dicyclic groups by exhibiting
/// generators that satisfy the defining relations.
pub fn identify(g: &FiniteGroup) -> GroupType {
    if g.is_abelian() {
        return GroupType::Abelian(g.to_abelian().expect("abelian"));
    }
    let n = g.order();
    let orders: Vec<usize> = (0..n).map(|a| g.element_order(a)).collect();
    let inverts = |s: usize, r: usize| g.conjugate(s, r) == g.inv(r);
    if n % 2 == 0 {
        let half = n / 2;
        if let Some(r) = (0..n).find(|&r| orders[r] == half) {
            let rotations = g.generated_subgroup(&[r]);
            if (0..n).any(|s| !rotations.contains(s) && orders[s] == 2 && inverts(s, r)) {
                return GroupType::Dihedral(half);
            }
        }
    }
    if n % 4 == 0 {
        let m = n / 4;
        for a in (0..n).filter(|&a| orders[a] == 2 * m) {
            let cyclic = g.generated_subgroup(&[a]);
            let an = g.pow(a, m as u64);
            if (0..n).any(|x| !cyclic.contains(x) && g.mul(x, x) == an && inverts(x, a)) {
                return GroupType::Dicyclic(m);
            }
        }
    }
    GroupType::Other { order: n, name: g.name().to_string() }
}

/// Isomorphism types of `G/⟨⟨g⟩⟩` for `g ≠ 1`.
pub fn quotient_types(g: &FiniteGroup) -> BTreeSet<GroupType> {
    let mut closures = BTreeSet::new();
    for a in 1..g.order() {
        closures.insert(g.normal_closure(&[a]));
    }
    closures
        .iter()
        .map(|n| identify(&g.quotient_group(n).expect("normal closure is normal")))
        .collect()
}

/// Brute-force isomorphism test: map a small generating set of `g` to
/// elements of `h` with matching orders and check the induced map.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order()
        || g.is_abelian() != h.is_abelian()
        || g.order_profile() != h.order_profile()
    {
        return false;
    }
    if g.is_abelian() {
        return g.to_abelian().ok() == h.to_abelian().ok();
    }
    let gens = generating_set(g);
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &mut images)
}

/// Greedy generators, largest element order first.
fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by_key(|&a| std::cmp::Reverse(g.element_order(a)));
    let mut gens = Vec::new();
    let mut current = g.trivial_subgroup();
    for a in by_order {
        if current.order() == g.order() {
            break;
        }
        if !current.contains(a) {
            gens.push(a);
            current = g.generated_subgroup(&gens);
        }
    }
    gens
}

fn search(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &mut Vec<usize>) -> bool {
    let Some(map) = extend_map(g, h, &gens[..images.len()], images) else {
        return false;
    };
    if images.len() == gens.len() {
        return is_homomorphism(g, h, &map);
    }
    let target_order = g.element_order(gens[images.len()]);
    for b in 0..h.order() {
        if h.element_order(b) == target_order {
            images.push(b);
            if search(g, h, gens, images) {
                return true;
            }
            images.pop();
        }
    }
    false
}

/// The map on `⟨gens⟩` induced by `images`, if it is well defined and injective.
fn extend_map(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn is_homomorphism(g: &FiniteGroup, h: &FiniteGroup, map: &[usize]) -> bool {
    map.iter().all(|&v| v != usize::MAX)
        && (0..g.order()).all(|a| (0..g.order()).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])))
}
