//! Finite commutative unital rings.
//!
//! The additive group is `⊕ Z/k_i` with basis `e_i`; multiplication is given
//! by structure constants `e_i·e_j`. Elements are coordinate vectors,
//! numbered in mixed-radix order with the first coordinate varying fastest.
//! Ideals are sorted id lists.

mod constructors;
mod game;
mod parse;

use std::fmt;

use crate::error::{Error, Result};

pub use game::{ring_game_outcome, ring_nimber, RingPosition};
pub use parse::{parse_ring, parse_ring_element};

/// Largest ring for which tables are built.
pub const MAX_RING_SIZE: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCommRing {
    name: String,
    additive_orders: Vec<u64>,
    one: Vec<u64>,
    basis_products: Vec<Vec<Vec<u64>>>,
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

/// An ideal as a sorted list of element ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    elements: Vec<u32>,
}

impl Ideal {
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&(a as u32)).is_ok()
    }

    pub fn key(&self) -> String {
        let ids: Vec<String> = self.elements.iter().map(u32::to_string).collect();
        ids.join(",")
    }

    fn from_mask(mask: &[bool]) -> Self {
        Ideal {
            elements: (0..mask.len() as u32).filter(|&i| mask[i as usize]).collect(),
        }
    }
}

impl FiniteCommRing {
    /// Validates the structure constants on basis triples and builds the
    /// addition and multiplication tables.
    pub fn from_structure_constants(
        name: impl Into<String>,
        additive_orders: Vec<u64>,
        one: Vec<u64>,
        basis_products: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self> {
        let k = additive_orders.len();
        if additive_orders.contains(&0) {
            return Err(Error::InvalidInput("additive orders must be positive".into()));
        }
        let size = additive_orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o as usize).filter(|&s| s <= MAX_RING_SIZE))
            .ok_or_else(|| Error::ResourceLimit(format!("ring larger than {MAX_RING_SIZE} elements")))?;
        let shape_ok = one.len() == k
            && basis_products.len() == k
            && basis_products.iter().all(|row| row.len() == k && row.iter().all(|v| v.len() == k));
        if !shape_ok {
            return Err(Error::InvalidInput(format!("structure constants must be {k} x {k} x {k}")));
        }
        let reduce = |v: &[u64]| -> Vec<u64> { v.iter().zip(&additive_orders).map(|(&x, &o)| x % o).collect() };
        let one = reduce(&one);
        let basis_products: Vec<Vec<Vec<u64>>> =
            basis_products.iter().map(|row| row.iter().map(|v| reduce(v)).collect()).collect();
        let mut ring = FiniteCommRing {
            name: name.into(),
            additive_orders,
            one,
            basis_products,
            size,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
        };
        ring.check_basis_axioms()?;
        ring.build_tables();
        Ok(ring)
    }

    fn unit_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1 % self.additive_orders[i];
        v
    }

    fn check_basis_axioms(&self) -> Result<()> {
        let k = self.rank();
        let zero = vec![0u64; k];
        for i in 0..k {
            // k_i e_i = 0 forces k_i (e_i e_j) = 0
            for j in 0..k {
                let scaled: Vec<u64> = self.basis_products[i][j].iter().map(|&x| x * self.additive_orders[i]).collect();
                if self.reduce_vec(&scaled) != zero {
                    return Err(Error::Validation(format!("e{i}*e{j} is not killed by {}", self.additive_orders[i])));
                }
                if self.basis_products[i][j] != self.basis_products[j][i] {
                    return Err(Error::Validation(format!("e{i}*e{j} != e{j}*e{i}")));
                }
            }
            let ei = self.unit_vector(i);
            if self.mul_vec(&self.one, &ei) != ei {
                return Err(Error::Validation(format!("1*e{i} != e{i}")));
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let left = self.mul_vec(&self.basis_products[i][j], &self.unit_vector(l));
                    let right = self.mul_vec(&self.unit_vector(i), &self.basis_products[j][l]);
                    if left != right {
                        return Err(Error::Validation(format!("(e{i}e{j})e{l} != e{i}(e{j}e{l})")));
                    }
                }
            }
        }
        Ok(())
    }

    fn reduce_vec(&self, v: &[u64]) -> Vec<u64> {
        v.iter().zip(&self.additive_orders).map(|(&x, &o)| x % o).collect()
    }

    fn mul_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.rank();
        let mut out = vec![0u64; k];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                if b[j] == 0 {
                    continue;
                }
                let c = a[i] * b[j];
                for (l, &e) in self.basis_products[i][j].iter().enumerate() {
                    out[l] = (out[l] + c % self.additive_orders[l] * e) % self.additive_orders[l];
                }
            }
        }
        out
    }

    fn build_tables(&mut self) {
        let n = self.size;
        let coords: Vec<Vec<u64>> = (0..n).map(|a| self.coords(a)).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &coords {
            for b in &coords {
                let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                add.push(self.id_of(&self.reduce_vec(&sum)) as u32);
                mul.push(self.id_of(&self.mul_vec(a, b)) as u32);
            }
        }
        self.neg = (0..n)
            .map(|a| {
                let v: Vec<u64> = coords[a].iter().zip(&self.additive_orders).map(|(&x, &o)| (o - x) % o).collect();
                self.id_of(&v) as u32
            })
            .collect();
        self.add = add;
        self.mul = mul;
    }

    /// Checks every ring axiom on all elements; `O(n³)`.
    pub fn validate_exhaustive(&self) -> Result<()> {
        let n = self.size;
        let one = self.one_id();
        for a in 0..n {
            if self.mul(one, a) != a || self.add(0, a) != a || self.add(a, self.neg(a)) != 0 {
                return Err(Error::Validation(format!("unit, zero or negation fails at {a}")));
            }
            for b in 0..n {
                if self.mul(a, b) != self.mul(b, a) || self.add(a, b) != self.add(b, a) {
                    return Err(Error::Validation(format!("not commutative at ({a}, {b})")));
                }
                for c in 0..n {
                    let assoc = self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
                    let add_assoc = self.add(self.add(a, b), c) == self.add(a, self.add(b, c));
                    let distrib = self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c));
                    if !(assoc && add_assoc && distrib) {
                        return Err(Error::Validation(format!("axiom fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.additive_orders.len()
    }

    pub fn additive_orders(&self) -> &[u64] {
        &self.additive_orders
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn basis_products(&self) -> &[Vec<Vec<u64>>] {
        &self.basis_products
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn coords(&self, mut a: usize) -> Vec<u64> {
        self.additive_orders
            .iter()
            .map(|&o| {
                let c = a as u64 % o;
                a /= o as usize;
                c
            })
            .collect()
    }

    /// Id of a reduced coordinate vector.
    pub fn id_of(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.additive_orders)
            .rev()
            .fold(0usize, |acc, (&c, &o)| acc * o as usize + c as usize)
    }

    pub fn one_id(&self) -> usize {
        self.id_of(&self.one)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn format_element(&self, a: usize) -> String {
        let c: Vec<String> = self.coords(a).iter().map(u64::to_string).collect();
        c.join(",")
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal { elements: vec![0] }
    }

    pub fn whole(&self) -> Ideal {
        Ideal { elements: (0..self.size as u32).collect() }
    }

    /// `⟨a⟩ = {r·a : r ∈ R}`.
    pub fn principal_ideal(&self, a: usize) -> Ideal {
        let mut mask = vec![false; self.size];
        for r in 0..self.size {
            mask[self.mul(r, a)] = true;
        }
        Ideal::from_mask(&mask)
    }

    /// `I + ⟨a⟩`; `a` must lie outside `I`.
    pub fn ideal_extend(&self, ideal: &Ideal, a: usize) -> Result<Ideal> {
        if a >= self.size {
            return Err(Error::InvalidInput(format!("no element {a}")));
        }
        if ideal.contains(a) {
            return Err(Error::InvalidInput(format!("{} is already in the ideal", self.format_element(a))));
        }
        Ok(self.extend_unchecked(ideal, a))
    }

    pub(crate) fn extend_unchecked(&self, ideal: &Ideal, a: usize) -> Ideal {
        let multiples = self.principal_ideal(a);
        let mut mask = vec![false; self.size];
        for &i in &ideal.elements {
            for &m in &multiples.elements {
                mask[self.add(i as usize, m as usize)] = true;
            }
        }
        Ideal::from_mask(&mask)
    }

    /// Checks zero, additive closure, negation and absorption.
    pub fn is_ideal(&self, elements: &[u32]) -> bool {
        let mut mask = vec![false; self.size];
        for &e in elements {
            mask[e as usize] = true;
        }
        mask[0]
            && elements.iter().all(|&a| {
                let a = a as usize;
                mask[self.neg(a)]
                    && elements.iter().all(|&b| mask[self.add(a, b as usize)])
                    && (0..self.size).all(|r| mask[self.mul(r, a)])
            })
    }

    pub fn has_nontrivial_idempotent(&self) -> bool {
        let one = self.one_id();
        (0..self.size).any(|e| e != 0 && e != one && self.mul(e, e) == e)
    }

    pub fn is_field(&self) -> bool {
        let one = self.one_id();
        self.size > 1 && (1..self.size).all(|a| (0..self.size).any(|b| self.mul(a, b) == one))
    }

    pub(crate) fn renamed(mut self, name: String) -> Self {
        self.name = name;
        self
    }
}

impl fmt::Display for FiniteCommRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (size {})", self.name, self.size)
    }
}
