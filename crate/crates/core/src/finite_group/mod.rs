//! Finite groups given by multiplication tables.
//!
//! Element `0` is always the identity. Subgroups are sorted id lists; the
//! two games in [`game`] use subgroups of a fixed group as positions, so no
//! isomorphism testing is needed while solving.

mod constructors;
mod game;
mod iso;
mod parse;

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use crate::abelian::number_theory::factorize;
use crate::abelian::{canonicalize, FinGenAbGroup};
use crate::error::{Error, Result};

pub use constructors::order16;
pub use game::{
    quotient_game_nimber, quotient_game_outcome, subgroup_game_nimber, subgroup_game_outcome,
    GameKind, GroupPosition, QUOTIENT_GAME_MAX_ORDER, SUBGROUP_GAME_MAX_ORDER,
};
pub use iso::{identify, is_isomorphic, quotient_types, GroupType};
pub use parse::parse_group;

/// Full O(n³) axiom validation runs up to this order.
pub const VALIDATION_MAX_ORDER: usize = 512;
/// Permutation groups are associative by construction and may be larger.
pub const PERMUTATION_MAX_ORDER: usize = 5040;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
}

/// A subgroup as a sorted list of element ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<u32>,
}

impl Subgroup {
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&(g as u32)).is_ok()
    }

    pub fn key(&self) -> String {
        let ids: Vec<String> = self.elements.iter().map(u32::to_string).collect();
        ids.join(",")
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major `n × n` table and validates the axioms.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n > VALIDATION_MAX_ORDER {
            return Err(Error::ResourceLimit(format!(
                "table of order {n} exceeds validation limit {VALIDATION_MAX_ORDER}"
            )));
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::Validation("multiplication table is not square".into()));
            }
            mul.extend(row.iter().map(|&v| v as u32));
        }
        let g = Self::from_flat(name.into(), n, mul)?;
        g.check_associative()?;
        Ok(g)
    }

    /// Identity, closure, Latin-square and inverse checks; associativity is
    /// left to the caller.
    fn from_flat(name: String, n: usize, mul: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("a group has at least one element".into()));
        }
        if mul.iter().any(|&v| v as usize >= n) {
            return Err(Error::Validation("table entry out of range".into()));
        }
        for x in 0..n {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return Err(Error::Validation("element 0 is not the identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = mul[a * n + b] as usize;
                if seen[c] {
                    return Err(Error::Validation(format!("row {a} repeats {c}")));
                }
                seen[c] = true;
                if c == 0 {
                    inv[a] = b as u32;
                }
            }
        }
        for a in 0..n {
            if mul[inv[a] as usize * n + a] != 0 {
                return Err(Error::Validation(format!("{a} has no two-sided inverse")));
            }
        }
        Ok(FiniteGroup { name, order: n, mul, inv, labels: None })
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul[a * n + b] as usize;
                for c in 0..n {
                    let bc = self.mul[b * n + c] as usize;
                    if self.mul[ab * n + c] != self.mul[a * n + bc] {
                        return Err(Error::Validation(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    /// Short name of the construction recipe, e.g. `D4xC2`. Used in memo keys.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let (mut result, mut base, mut k) = (0, a, k);
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Element id by label or by decimal id.
    pub fn find_element(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == text) {
                return Ok(i);
            }
        }
        match text.parse::<usize>() {
            Ok(i) if i < self.order => Ok(i),
            _ => Err(Error::Parse(format!("no element {text:?} in {}", self.name))),
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn conjugacy_class(&self, g: usize) -> Vec<usize> {
        let mut class: Vec<usize> = (0..self.order).map(|x| self.conjugate(x, g)).collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { elements: (0..self.order as u32).collect() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    /// Least subgroup containing `seed`, by breadth-first closure under
    /// right multiplication by the seed (enough in a finite group).
    pub fn generated_subgroup(&self, seed: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let gens: Vec<usize> = seed.iter().copied().filter(|&g| g != 0).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup {
            elements: (0..self.order as u32).filter(|&i| member[i as usize]).collect(),
        }
    }

    /// Least normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[usize]) -> Subgroup {
        let mut conjugates: Vec<usize> = seed.iter().flat_map(|&g| self.conjugacy_class(g)).collect();
        conjugates.sort_unstable();
        conjugates.dedup();
        self.generated_subgroup(&conjugates)
    }

    pub fn is_subgroup(&self, elements: &[u32]) -> bool {
        let set: HashSet<u32> = elements.iter().copied().collect();
        set.contains(&0)
            && elements.iter().all(|&a| {
                set.contains(&self.inv[a as usize])
                    && elements.iter().all(|&b| set.contains(&(self.mul(a as usize, b as usize) as u32)))
            })
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        (0..self.order).all(|x| sub.elements.iter().all(|&h| sub.contains(self.conjugate(x, h as usize))))
    }

    /// Checks and wraps an id list as a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut ids: Vec<u32> = elements.iter().map(|&e| e as u32).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.iter().any(|&i| i as usize >= self.order) || !self.is_subgroup(&ids) {
            return Err(Error::InvalidInput("not a subgroup".into()));
        }
        Ok(Subgroup { elements: ids })
    }

    /// Group on the cosets of `n`, ordered by their least element.
    pub fn quotient_group(&self, n: &Subgroup) -> Result<FiniteGroup> {
        if !self.is_subgroup(&n.elements) || !self.is_normal(n) {
            return Err(Error::InvalidInput(format!("subgroup is not normal in {}", self.name)));
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &h in &n.elements {
                coset_of[self.mul(g, h as usize)] = reps.len();
            }
            reps.push(g);
        }
        let k = reps.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                mul.push(coset_of[self.mul(a, b)] as u32);
            }
        }
        // induced from an associative table, so associative
        let labels = reps.iter().map(|&r| format!("{}N", self.label(r))).collect();
        Ok(Self::from_flat(format!("{}/[{}]", self.name, n.key()), k, mul)?.with_labels(labels))
    }

    /// Invariant factors of an abelian group, from the number of elements
    /// killed by each prime power.
    pub fn to_abelian(&self) -> Result<FinGenAbGroup> {
        if !self.is_abelian() {
            return Err(Error::InvalidInput(format!("{} is not abelian", self.name)));
        }
        let mut orders = Vec::new();
        for (p, e) in factorize(self.order as u64) {
            // s[k] = log_p #{x : p^k x = 0} = Σ_i min(e_i, k)
            let mut s = vec![0u32];
            let mut pk = 1u64;
            for _ in 1..=e {
                pk *= p;
                let count = (0..self.order).filter(|&x| self.pow(x, pk) == 0).count() as u64;
                s.push(count.ilog(p));
            }
            // #{i : e_i >= k} = s[k] - s[k-1]
            let mut at_least: BTreeMap<u32, u32> = BTreeMap::new();
            for k in 1..s.len() {
                at_least.insert(k as u32, s[k] - s[k - 1]);
            }
            for k in 1..=e {
                let here = at_least[&k] - at_least.get(&(k + 1)).copied().unwrap_or(0);
                for _ in 0..here {
                    orders.push(p.pow(k));
                }
            }
        }
        Ok(canonicalize(&orders))
    }

    /// Multiset of element orders, as a sorted list.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}
