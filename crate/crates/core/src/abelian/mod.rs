//! The game of finitely generated abelian groups.
//!
//! A position is a group `Z/d_1 ⊕ … ⊕ Z/d_s ⊕ Z^r` in invariant-factor form;
//! a move quotients by the cyclic subgroup of a non-zero element. For finite
//! groups the options are exactly the divisor chains interleaving the
//! current one, which turns the game into pure number theory.

mod classify;
mod nimber;
pub mod number_theory;
mod parse;
pub mod snf;

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::engine::GamePosition;
use crate::error::{Error, Result};
use number_theory::{factorize, gcd, lcm};

pub use parse::parse_element;
pub use classify::{is_elementary_abelian, is_square, outcome_classifier, winning_move};
pub use nimber::{
    conjectured_nimber_3gen, length, nimber_2gen_formula, nimber_bruteforce, nimber_formula,
    omega_reduce, Conjecture3Gen,
};

/// `Z/torsion[0] ⊕ … ⊕ Z/torsion[s-1] ⊕ Z^rank` with `torsion` a divisor
/// chain of entries ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FinGenAbGroup {
    torsion: Vec<u64>,
    rank: u32,
}

/// Coordinates of an element: torsion residues first, then free coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbElement {
    pub residues: Vec<i64>,
    pub free_coords: Vec<i64>,
}

impl AbElement {
    pub fn new(residues: Vec<i64>, free_coords: Vec<i64>) -> Self {
        AbElement {
            residues,
            free_coords,
        }
    }

    /// Splits a flat coordinate list according to `group`'s shape.
    pub fn from_coords(group: &FinGenAbGroup, coords: &[i64]) -> Result<Self> {
        let s = group.torsion.len();
        if coords.len() != s + group.rank as usize {
            return Err(Error::InvalidInput(format!(
                "element has {} coordinates, {group} needs {}",
                coords.len(),
                s + group.rank as usize
            )));
        }
        Ok(AbElement::new(coords[..s].to_vec(), coords[s..].to_vec()))
    }

    pub fn coords(&self) -> Vec<i64> {
        self.residues.iter().chain(&self.free_coords).copied().collect()
    }
}

impl fmt::Display for AbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FinGenAbGroup {
    pub fn trivial() -> Self {
        FinGenAbGroup::default()
    }

    /// Free abelian group of the given rank.
    pub fn free(rank: u32) -> Self {
        FinGenAbGroup {
            torsion: Vec::new(),
            rank,
        }
    }

    /// Builds from an existing divisor chain, checking it.
    pub fn from_chain(torsion: Vec<u64>, rank: u32) -> Result<Self> {
        if torsion.iter().any(|&d| d < 2) {
            return Err(Error::InvalidInput(format!("chain {torsion:?} has an entry < 2")));
        }
        if torsion.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidInput(format!("{torsion:?} is not a divisor chain")));
        }
        Ok(FinGenAbGroup { torsion, rank })
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.rank == 0
    }

    /// Number of coordinates of an element.
    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.rank as usize
    }

    /// Group order, `None` when infinite or too large for u64.
    pub fn order(&self) -> Option<u64> {
        if self.rank > 0 {
            return None;
        }
        self.torsion.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }

    /// The torsion subgroup.
    pub fn torsion_part(&self) -> FinGenAbGroup {
        FinGenAbGroup {
            torsion: self.torsion.clone(),
            rank: 0,
        }
    }

    /// `self ⊕ other`, re-canonicalized.
    pub fn direct_sum(&self, other: &FinGenAbGroup) -> FinGenAbGroup {
        let mut orders: Vec<u64> = self.torsion.iter().chain(&other.torsion).copied().collect();
        orders.extend(std::iter::repeat_n(0, (self.rank + other.rank) as usize));
        canonicalize(&orders)
    }

    pub fn zero(&self) -> AbElement {
        AbElement::new(vec![0; self.torsion.len()], vec![0; self.rank as usize])
    }

    /// Reduces torsion residues into `[0, d_i)`.
    pub fn reduce(&self, x: &AbElement) -> Result<AbElement> {
        self.check_shape(x)?;
        let residues = x
            .residues
            .iter()
            .zip(&self.torsion)
            .map(|(&v, &d)| v.rem_euclid(d as i64))
            .collect();
        Ok(AbElement::new(residues, x.free_coords.clone()))
    }

    pub fn is_zero(&self, x: &AbElement) -> Result<bool> {
        let r = self.reduce(x)?;
        Ok(r.residues.iter().chain(&r.free_coords).all(|&v| v == 0))
    }

    /// Order of `x`, or `None` when it has infinite order.
    pub fn element_order(&self, x: &AbElement) -> Result<Option<u64>> {
        let r = self.reduce(x)?;
        if r.free_coords.iter().any(|&v| v != 0) {
            return Ok(None);
        }
        Ok(Some(r.residues.iter().zip(&self.torsion).fold(1u64, |acc, (&v, &d)| {
            lcm(acc, d / gcd(v as u64, d))
        })))
    }

    /// All elements of a finite group, lexicographic in their coordinates.
    pub fn elements(&self) -> Result<Vec<AbElement>> {
        if self.rank > 0 {
            return Err(Error::InfiniteOptions(format!("{self} is infinite")));
        }
        let total = self
            .order()
            .filter(|&n| n <= 1 << 24)
            .ok_or_else(|| Error::ResourceLimit(format!("{self} has too many elements")))?;
        let mut out = Vec::with_capacity(total as usize);
        let mut cur = vec![0i64; self.torsion.len()];
        for _ in 0..total {
            out.push(AbElement::new(cur.clone(), Vec::new()));
            for i in (0..cur.len()).rev() {
                cur[i] += 1;
                if cur[i] < self.torsion[i] as i64 {
                    break;
                }
                cur[i] = 0;
            }
        }
        Ok(out)
    }

    fn check_shape(&self, x: &AbElement) -> Result<()> {
        if x.residues.len() != self.torsion.len() || x.free_coords.len() != self.rank as usize {
            return Err(Error::InvalidInput(format!(
                "element {x} does not have the shape of {self}"
            )));
        }
        Ok(())
    }

    /// `self / ⟨x⟩` via the Smith form of the relation matrix.
    pub fn quotient_by_element(&self, x: &AbElement) -> Result<FinGenAbGroup> {
        if self.is_zero(x)? {
            return Err(Error::InvalidInput("cannot quotient by the zero element".into()));
        }
        let cols = self.num_generators();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.torsion.len() + 1);
        for (i, &d) in self.torsion.iter().enumerate() {
            let mut row = vec![BigInt::zero(); cols];
            row[i] = BigInt::from(d);
            rows.push(row);
        }
        rows.push(x.coords().into_iter().map(BigInt::from).collect());
        let diag = snf::smith_diagonal(&rows);
        let nonzero: Vec<&BigInt> = diag.iter().filter(|d| !d.is_zero()).collect();
        let rank = (cols - nonzero.len()) as u32;
        let mut torsion = Vec::new();
        for d in nonzero {
            let d = d
                .to_u64()
                .ok_or_else(|| Error::Unsupported(format!("invariant factor {d} exceeds u64")))?;
            if d > 1 {
                torsion.push(d);
            }
        }
        FinGenAbGroup::from_chain(torsion, rank)
    }

    /// Every option as a divisor chain `m` aligned with the torsion chain `n`:
    /// `n_{i-1} | m_i | n_i` (with `n_0 = 1`) and `m ≠ n`.
    pub fn option_chains(&self) -> Result<Vec<Vec<u64>>> {
        if self.rank > 0 {
            return Err(Error::InfiniteOptions(format!(
                "{self} has infinitely many options"
            )));
        }
        let n = &self.torsion;
        let choices: Vec<Vec<u64>> = (0..n.len())
            .map(|i| {
                let below = if i == 0 { 1 } else { n[i - 1] };
                number_theory::divisors(n[i] / below)
                    .into_iter()
                    .map(|d| below * d)
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; n.len()];
        loop {
            let m: Vec<u64> = idx.iter().enumerate().map(|(i, &k)| choices[i][k]).collect();
            if &m != n {
                out.push(m);
            }
            let mut i = n.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }

    /// All isomorphism classes `self / ⟨x⟩` for `x ≠ 0`, sorted.
    pub fn options(&self) -> Result<Vec<FinGenAbGroup>> {
        let set: BTreeSet<FinGenAbGroup> = self
            .option_chains()?
            .into_iter()
            .map(|m| FinGenAbGroup {
                torsion: m.into_iter().filter(|&d| d > 1).collect(),
                rank: 0,
            })
            .collect();
        Ok(set.into_iter().collect())
    }

    /// The element `m_1 ⊕ m_1·m_2/n_1 ⊕ … ⊕ m_1·(m_2/n_1)⋯(m_s/n_{s-1})`,
    /// whose quotient realizes the option chain `m`.
    pub fn option_witness(&self, m: &[u64]) -> Result<AbElement> {
        let n = &self.torsion;
        if self.rank > 0 || m.len() != n.len() {
            return Err(Error::InvalidInput(format!("{m:?} is not aligned with {self}")));
        }
        for i in 0..n.len() {
            let below = if i == 0 { 1 } else { n[i - 1] };
            if m[i] % below != 0 || n[i] % m[i] != 0 {
                return Err(Error::InvalidInput(format!("{m:?} does not interleave {n:?}")));
            }
        }
        let mut residues = Vec::with_capacity(n.len());
        let mut coeff: u128 = 1;
        for i in 0..n.len() {
            coeff = if i == 0 {
                m[0] as u128
            } else {
                coeff * (m[i] / n[i - 1]) as u128
            };
            residues.push((coeff % n[i] as u128) as i64);
        }
        Ok(AbElement::new(residues, Vec::new()))
    }
}

/// Invariant-factor form of `⊕ Z/orders[i]`, where an order of 0 stands for
/// `Z` and an order of 1 is dropped.
pub fn canonicalize(orders: &[u64]) -> FinGenAbGroup {
    let rank = orders.iter().filter(|&&d| d == 0).count() as u32;
    let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &d in orders.iter().filter(|&&d| d > 1) {
        for (p, e) in factorize(d) {
            exponents.entry(p).or_default().push(e);
        }
    }
    let s = exponents.values().map(Vec::len).max().unwrap_or(0);
    for list in exponents.values_mut() {
        list.sort_unstable_by(|a, b| b.cmp(a));
    }
    // the j-th largest invariant factor collects the j-th largest exponent per prime
    let mut torsion: Vec<u64> = (0..s)
        .map(|j| {
            exponents
                .iter()
                .filter_map(|(&p, list)| list.get(j).map(|&e| number_theory::pow(p, e)))
                .product()
        })
        .collect();
    torsion.reverse();
    FinGenAbGroup { torsion, rank }
}

/// Every divisor chain of order at most `max_order`, including the trivial one.
pub fn all_finite_groups(max_order: u64) -> Vec<FinGenAbGroup> {
    fn extend(chain: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<FinGenAbGroup>) {
        out.push(FinGenAbGroup {
            torsion: chain.clone(),
            rank: 0,
        });
        let last = chain.last().copied().unwrap_or(2);
        let mut next = if chain.is_empty() { 2 } else { last };
        while order * next <= max {
            chain.push(next);
            extend(chain, order * next, max, out);
            chain.pop();
            next += if chain.is_empty() { 1 } else { last };
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out.sort_by_key(|g| (g.order(), g.clone()));
    out
}

impl fmt::Display for FinGenAbGroup {
    /// `Z/2 + Z/12 + Z`; the trivial group is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .torsion
            .iter()
            .map(|d| format!("Z/{d}"))
            .chain(std::iter::repeat_n("Z".to_string(), self.rank as usize))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// A finite abelian group seen as a game position; the options are the
/// isomorphism classes of its cyclic quotients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelian(FinGenAbGroup);

impl FiniteAbelian {
    pub fn new(group: FinGenAbGroup) -> Result<Self> {
        if group.rank > 0 {
            return Err(Error::InfiniteOptions(format!(
                "{group} is infinite; brute force needs a finite group"
            )));
        }
        Ok(FiniteAbelian(group))
    }

    pub fn group(&self) -> &FinGenAbGroup {
        &self.0
    }
}

impl GamePosition for FiniteAbelian {
    fn canonical_key(&self) -> String {
        let parts: Vec<String> = self.0.torsion.iter().map(u64::to_string).collect();
        format!("ab:{}", parts.join("|"))
    }

    fn options(&self) -> Vec<Self> {
        self.0
            .options()
            .expect("finite by construction")
            .into_iter()
            .map(FiniteAbelian)
            .collect()
    }

    fn is_terminal(&self) -> bool {
        self.0.is_trivial()
    }
}
