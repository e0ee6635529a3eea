//! Nimbers of abelian groups: brute force over divisor chains, and the
//! closed forms for cyclic, 2-generated and rank-one groups.

use super::number_theory::{big_omega, is_prime, pow, triangular};
use super::{FinGenAbGroup, FiniteAbelian};
use crate::engine::Solver;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// Length of the torsion part: `Σ Ω(d_i)`.
pub fn length(a: &FinGenAbGroup) -> u64 {
    a.torsion.iter().map(|&d| big_omega(d) as u64).sum()
}

/// Nimber by exhaustive search over the option lattice.
pub fn nimber_bruteforce(a: &FinGenAbGroup, solver: &mut Solver) -> Result<Ordinal> {
    solver.nimber(&FiniteAbelian::new(a.clone())?)
}

/// Nimber of `Z/p^n ⊕ Z/p^m` for `n ≤ m`.
pub fn nimber_2gen_formula(n: u64, m: u64) -> Result<u64> {
    if n > m {
        return Err(Error::InvalidInput(format!("need n <= m, got ({n}, {m})")));
    }
    let k = m - n;
    let dk = triangular(k);
    Ok(if n <= dk {
        n + m
    } else {
        dk + (n - dk - 1) % (k + 1)
    })
}

/// The chain `p^{Ω(n_1)} | … | p^{Ω(n_s)}`.
pub fn omega_reduce(a: &FinGenAbGroup, p: u64) -> Result<FinGenAbGroup> {
    if a.rank > 0 {
        return Err(Error::Unsupported(format!("{a} is infinite")));
    }
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let torsion = a.torsion.iter().map(|&d| pow(p, big_omega(d))).collect();
    FinGenAbGroup::from_chain(torsion, 0)
}

/// Closed-form nimber for the families with a known formula: finite groups
/// with at most two invariant factors, `Z`, and `Z/n ⊕ Z`.
pub fn nimber_formula(a: &FinGenAbGroup) -> Result<Ordinal> {
    let omega = |d: u64| big_omega(d) as u64;
    match (a.rank, a.torsion.as_slice()) {
        (0, []) => Ok(Ordinal::zero()),
        (0, [n]) => Ok(Ordinal::finite(omega(*n))),
        (0, [n, m]) => Ok(Ordinal::finite(nimber_2gen_formula(omega(*n), omega(*m))?)),
        (1, []) => Ok(Ordinal::omega()),
        (1, [n]) => Ok(Ordinal::new(1u32, omega(*n))),
        _ => Err(Error::Unsupported(format!("no nimber formula for {a}"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conjecture3Gen {
    pub value: u64,
    /// Whether the inputs fall in the branch believed to hold without exception.
    pub trusted: bool,
}

/// Empirical three-branch formula for `Z/p^{n1} ⊕ Z/p^{n2} ⊕ Z/p^{n3}`.
/// Known to have exceptions outside the trusted branch; never used by the
/// solver.
pub fn conjectured_nimber_3gen(n1: u64, n2: u64, n3: u64) -> Result<Conjecture3Gen> {
    if !(n1 <= n2 && n2 <= n3) {
        return Err(Error::InvalidInput(format!(
            "need n1 <= n2 <= n3, got ({n1}, {n2}, {n3})"
        )));
    }
    let k = n3 - n2 + n1;
    let lower = triangular(k);
    let upper = triangular(k + 1);
    let value = if n2 <= lower {
        n1 + n2 + n3
    } else if n2 <= upper {
        n1 + n2 - 1
    } else {
        lower + (n2 - lower - 1) % (k + 1)
    };
    Ok(Conjecture3Gen {
        value,
        trusted: n2 > upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::canonicalize;

    fn g(spec: &str) -> FinGenAbGroup {
        spec.parse().unwrap()
    }

    /// Independent recursion on exponent pairs: options of (n, m) are the
    /// (n', m') with n' <= n <= m' <= m, (n', m') != (n, m).
    fn alpha_pairs(limit: usize) -> Vec<Vec<u64>> {
        let mut table = vec![vec![0u64; limit + 1]; limit + 1];
        for m in 0..=limit {
            for n in 0..=m {
                let mut seen = Vec::new();
                for n2 in 0..=n {
                    for m2 in n..=m {
                        if (n2, m2) != (n, m) {
                            seen.push(table[n2][m2]);
                        }
                    }
                }
                table[n][m] = crate::ordinal::mex_u64(seen);
            }
        }
        table
    }

    #[test]
    fn two_gen_formula_examples() {
        assert_eq!(nimber_2gen_formula(4, 8).unwrap(), 12);
        assert_eq!(nimber_2gen_formula(6, 8).unwrap(), 5);
        for m in 0..30 {
            assert_eq!(nimber_2gen_formula(0, m).unwrap(), m);
        }
        assert!(nimber_2gen_formula(3, 2).is_err());
    }

    #[test]
    fn two_gen_formula_matches_pair_recursion() {
        let table = alpha_pairs(16);
        for m in 0..=16u64 {
            for n in 0..=m {
                assert_eq!(nimber_2gen_formula(n, m).unwrap(), table[n as usize][m as usize], "({n},{m})");
            }
        }
    }

    #[test]
    fn bruteforce_examples() {
        let mut solver = Solver::new();
        assert_eq!(nimber_bruteforce(&g("0"), &mut solver).unwrap(), Ordinal::zero());
        assert_eq!(nimber_bruteforce(&g("Z/12"), &mut solver).unwrap(), Ordinal::finite(3));
        let p4p8 = canonicalize(&[16, 256]);
        assert_eq!(nimber_bruteforce(&p4p8, &mut solver).unwrap(), Ordinal::finite(12));
        // pair recursion gives α(2, 3) = 1 for Ω(6) = 2, Ω(12) = 3
        let table = alpha_pairs(3);
        assert_eq!(table[2][3], 1);
        assert_eq!(nimber_bruteforce(&g("Z/6 + Z/12"), &mut solver).unwrap(), Ordinal::finite(1));
        assert!(matches!(
            nimber_bruteforce(&g("Z"), &mut solver),
            Err(Error::InfiniteOptions(_))
        ));
    }

    #[test]
    fn omega_reduce_examples() {
        assert_eq!(omega_reduce(&g("Z/6 + Z/12"), 2).unwrap(), g("Z/4 + Z/8"));
        assert_eq!(omega_reduce(&g("Z/9 + Z/27"), 3).unwrap(), g("Z/9 + Z/27"));
        assert_eq!(omega_reduce(&g("Z/5"), 2).unwrap(), g("Z/2"));
        assert!(omega_reduce(&g("Z/5"), 4).is_err());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(nimber_formula(&g("Z")).unwrap(), Ordinal::omega());
        assert_eq!(nimber_formula(&g("Z/4 + Z")).unwrap(), Ordinal::new(1u32, 2u32));
        assert_eq!(nimber_formula(&g("Z/6 + Z/12")).unwrap(), Ordinal::finite(1));
        assert_eq!(nimber_formula(&g("Z/12")).unwrap(), Ordinal::finite(3));
        for unsupported in ["Z/2 + Z/2 + Z/2", "Z + Z", "Z/2 + Z/2 + Z"] {
            assert!(matches!(nimber_formula(&g(unsupported)), Err(Error::Unsupported(_))));
        }
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(
            conjectured_nimber_3gen(1, 2, 2).unwrap(),
            Conjecture3Gen { value: 2, trusted: false }
        );
        assert_eq!(
            conjectured_nimber_3gen(1, 8, 8).unwrap(),
            Conjecture3Gen { value: 1, trusted: true }
        );
        for n in 0..12 {
            for m in n..14 {
                let c = conjectured_nimber_3gen(0, n, m).unwrap();
                assert_eq!(c.value, nimber_2gen_formula(n, m).unwrap(), "(0,{n},{m})");
            }
        }
        assert!(conjectured_nimber_3gen(2, 1, 3).is_err());
    }
}
