use std::collections::HashMap;

use super::FiniteCommRing;
use crate::abelian::number_theory::{is_prime, pow};
use crate::error::{Error, Result};

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    Ok(())
}

/// Structure constants for a monomial algebra over `F_p`: `basis[0]` must be
/// the unit and `product(i, j)` returns the index of `b_i·b_j`, if non-zero.
fn monomial_algebra(
    name: String,
    p: u64,
    dim: usize,
    product: impl Fn(usize, usize) -> Option<usize>,
) -> Result<FiniteCommRing> {
    let mut table = vec![vec![vec![0u64; dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if let Some(l) = product(i, j) {
                table[i][j][l] = 1;
            }
        }
    }
    let mut one = vec![0u64; dim];
    one[0] = 1;
    FiniteCommRing::from_structure_constants(name, vec![p; dim], one, table)
}

impl FiniteCommRing {
    pub fn z_mod(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("Z/0 is infinite".into()));
        }
        Self::from_structure_constants(format!("Z/{n}"), vec![n], vec![1], vec![vec![vec![1]]])
    }

    pub fn gf_p(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(Self::z_mod(p)?.renamed(format!("GF({p})")))
    }

    /// `R × S`, basis of `R` first.
    pub fn product(r: &FiniteCommRing, s: &FiniteCommRing) -> Result<Self> {
        let (a, b) = (r.rank(), s.rank());
        let k = a + b;
        let mut table = vec![vec![vec![0u64; k]; k]; k];
        for i in 0..a {
            for j in 0..a {
                table[i][j][..a].copy_from_slice(&r.basis_products()[i][j]);
            }
        }
        for i in 0..b {
            for j in 0..b {
                table[a + i][a + j][a..].copy_from_slice(&s.basis_products()[i][j]);
            }
        }
        let orders = r.additive_orders().iter().chain(s.additive_orders()).copied().collect();
        let one = r.one().iter().chain(s.one()).copied().collect();
        Self::from_structure_constants(format!("{}x{}", r.name(), s.name()), orders, one, table)
    }

    /// `F_p ⊕ V` with `dim V = d` and `V·V = 0`.
    pub fn square_zero_extension(p: u64, d: usize) -> Result<Self> {
        check_prime(p)?;
        monomial_algebra(format!("SqZero({p},{d})"), p, d + 1, |i, j| match (i, j) {
            (0, x) | (x, 0) => Some(x),
            _ => None,
        })
    }

    /// `Z/p^n[X]/⟨X², p^{n-1}X⟩`, additive orders `[p^n, p^{n-1}]`.
    pub fn dual_truncated(p: u64, n: u32) -> Result<Self> {
        check_prime(p)?;
        if n == 0 {
            return Err(Error::InvalidInput("need n >= 1".into()));
        }
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]];
        Self::from_structure_constants(
            format!("DualTrunc({p},{n})"),
            vec![pow(p, n), pow(p, n - 1)],
            vec![1, 0],
            table,
        )
    }

    /// `Z/m[X]/⟨X²⟩`.
    pub fn dual_numbers(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("Z/0 is infinite".into()));
        }
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]];
        Self::from_structure_constants(format!("Dual({m})"), vec![m, m], vec![1, 0], table)
    }

    /// `F_p[X, Y]/⟨Y² − X³, X^a, X^b·Y⟩`, with basis `X^i` for
    /// `i < min(a, b + 3)` followed by `X^i·Y` for `i < min(a, b)`.
    pub fn cusp_quotient(p: u64, a: usize, b: usize) -> Result<Self> {
        check_prime(p)?;
        if a == 0 {
            return Err(Error::InvalidInput("X^0 = 1 gives the zero ring; need a >= 1".into()));
        }
        let plain = a.min(b + 3);
        let with_y = a.min(b);
        let index = |i: usize, y: bool| if y { plain + i } else { i };
        let monomial = |t: usize| if t < plain { (t, false) } else { (t - plain, true) };
        monomial_algebra(format!("CuspQ({p},{a},{b})"), p, plain + with_y, |s, t| {
            let ((i, yi), (j, yj)) = (monomial(s), monomial(t));
            match (yi, yj) {
                (false, false) => (i + j < plain).then(|| index(i + j, false)),
                (true, true) => (i + j + 3 < plain).then(|| index(i + j + 3, false)),
                _ => (i + j < with_y).then(|| index(i + j, true)),
            }
        })
    }

    /// `F_p[X, Y]/⟨Y² − X³, X^{n+1}, X^n·Y⟩`.
    pub fn cusp_truncation(p: u64, n: usize) -> Result<Self> {
        Ok(Self::cusp_quotient(p, n + 1, n)?.renamed(format!("Cusp({p},{n})")))
    }

    /// `F_p[X, Y]` modulo the monomials `X^a·Y^b` for `(a, b)` in `generators`.
    /// Must include a pure power of each variable so the quotient is finite.
    pub fn monomial_quotient(p: u64, generators: &[(usize, usize)]) -> Result<Self> {
        check_prime(p)?;
        let x_bound = generators.iter().filter(|g| g.1 == 0).map(|g| g.0).min();
        let y_bound = generators.iter().filter(|g| g.0 == 0).map(|g| g.1).min();
        let (Some(xb), Some(yb)) = (x_bound, y_bound) else {
            return Err(Error::InvalidInput("need pure powers of X and Y among the generators".into()));
        };
        let in_ideal = |i: usize, j: usize| generators.iter().any(|&(a, b)| i >= a && j >= b);
        let basis: Vec<(usize, usize)> = (0..yb)
            .flat_map(|j| (0..xb).map(move |i| (i, j)))
            .filter(|&(i, j)| !in_ideal(i, j))
            .collect();
        if basis.is_empty() {
            return Err(Error::InvalidInput("the ideal contains 1".into()));
        }
        let index: HashMap<(usize, usize), usize> = basis.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let gens: Vec<String> = generators.iter().map(|(a, b)| format!("{a}.{b}")).collect();
        monomial_algebra(format!("MonQ({p};{})", gens.join(";")), p, basis.len(), |s, t| {
            let (i, j) = (basis[s].0 + basis[t].0, basis[s].1 + basis[t].1);
            index.get(&(i, j)).copied()
        })
    }

    /// `F_p[X, Y]/⟨X^n, XY, Y^m⟩`.
    pub fn monomial_ring(p: u64, n: usize, m: usize) -> Result<Self> {
        Ok(Self::monomial_quotient(p, &[(n, 0), (1, 1), (0, m)])?.renamed(format!("Mon({p},{n},{m})")))
    }
}
