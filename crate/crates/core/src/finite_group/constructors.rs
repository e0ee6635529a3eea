use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{FiniteGroup, PERMUTATION_MAX_ORDER};
use crate::abelian::number_theory::is_prime;
use crate::abelian::FinGenAbGroup;
use crate::error::{Error, Result};

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1")
    }

    /// `Z/n`, element `i` is `i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclic group of order 0".into()));
        }
        Self::from_table(format!("C{n}"), table(n, |a, b| (a + b) % n))
    }

    /// `D_n` of order `2n`; `r^i s^j` has id `i + n·j`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("dihedral group D0".into()));
        }
        let t = table(2 * n, |a, b| {
            let (i, j) = (a % n, a / n);
            let (k, l) = (b % n, b / n);
            let k = if j == 1 { (n - k) % n } else { k };
            (i + k) % n + n * ((j + l) % 2)
        });
        let labels = (0..2 * n)
            .map(|a| match (a % n, a / n) {
                (0, 0) => "1".to_string(),
                (i, 0) => format!("r^{i}"),
                (0, _) => "s".to_string(),
                (i, _) => format!("r^{i}s"),
            })
            .collect();
        Ok(Self::from_table(format!("D{n}"), t)?.with_labels(labels))
    }

    /// `Dic_n` of order `4n`: `a^{2n} = 1`, `x² = a^n`, `x a x⁻¹ = a⁻¹`.
    /// `a^i x^j` has id `i + 2n·j`.
    pub fn dicyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("dicyclic group Dic0".into()));
        }
        let m = 2 * n;
        let t = table(2 * m, |a, b| {
            let (i, j) = (a % m, a / m);
            let (k, l) = (b % m, b / m);
            let k = if j == 1 { (m - k) % m } else { k };
            let mut e = i + k;
            if j == 1 && l == 1 {
                e += n;
            }
            e % m + m * ((j + l) % 2)
        });
        let labels = (0..2 * m)
            .map(|e| match (e % m, e / m) {
                (0, 0) => "1".to_string(),
                (i, 0) => format!("a^{i}"),
                (0, _) => "x".to_string(),
                (i, _) => format!("a^{i}x"),
            })
            .collect();
        Ok(Self::from_table(format!("Dic{n}"), t)?.with_labels(labels))
    }

    /// `S_n` on `{0, …, n-1}`, elements in lexicographic one-line order.
    pub fn symmetric(n: usize) -> Result<Self> {
        check_degree(n)?;
        let perms = all_permutations(n);
        Self::from_permutation_list(format!("S{n}"), perms)
    }

    /// `A_n`, the even permutations in lexicographic one-line order.
    pub fn alternating(n: usize) -> Result<Self> {
        check_degree(n)?;
        let perms = all_permutations(n).into_iter().filter(|p| is_even(p)).collect();
        Self::from_permutation_list(format!("A{n}"), perms)
    }

    /// The permutation group generated by `generators` (0-based images).
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for g in generators {
            let mut sorted = g.clone();
            sorted.sort_unstable();
            if g.len() != degree || sorted != (0..degree).collect::<Vec<_>>() {
                return Err(Error::InvalidInput(format!("{g:?} is not a permutation of degree {degree}")));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = compose(&p, g);
                if !seen.contains(&q) {
                    if seen.len() >= PERMUTATION_MAX_ORDER {
                        return Err(Error::ResourceLimit(format!(
                            "permutation group larger than {PERMUTATION_MAX_ORDER}"
                        )));
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        let gens: Vec<String> = generators.iter().map(|g| one_line(g)).collect();
        Self::from_permutation_list(format!("Perm{degree}[{}]", gens.join(";")), seen.into_iter().collect())
    }

    /// `perms` must be closed under composition, sorted, identity first.
    fn from_permutation_list(name: String, perms: Vec<Vec<usize>>) -> Result<Self> {
        let n = perms.len();
        if n > PERMUTATION_MAX_ORDER {
            return Err(Error::ResourceLimit(format!("group of order {n} is too large")));
        }
        let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut mul = Vec::with_capacity(n * n);
        for p in &perms {
            for q in &perms {
                let r = compose(p, q);
                let id = index
                    .get(r.as_slice())
                    .ok_or_else(|| Error::Validation("permutations not closed".into()))?;
                mul.push(*id as u32);
            }
        }
        let labels = perms.iter().map(|p| one_line(p)).collect();
        // composition of maps is associative, so the O(n³) check is skipped
        Ok(Self::from_flat(name, n, mul)?.with_labels(labels))
    }

    /// `G × H`; `(g, h)` has id `g·|H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        let m = h.order();
        let t = table(g.order() * m, |a, b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m));
        let labels = (0..g.order() * m)
            .map(|a| format!("({},{})", g.label(a / m), h.label(a % m)))
            .collect();
        Ok(Self::from_table(format!("{}x{}", g.name(), h.name()), t)?.with_labels(labels))
    }

    /// `A ⋊ Z/m` where the generator of `Z/m` acts by the automorphism
    /// `sigma` (given as the image of each element id). `(a, k)` has id
    /// `a + |A|·k` and `(a₁,k₁)(a₂,k₂) = (a₁·σ^{k₁}(a₂), k₁+k₂)`.
    pub fn semidirect_by_cyclic(a: &FiniteGroup, sigma: &[usize], m: usize) -> Result<Self> {
        let n = a.order();
        if sigma.len() != n || m == 0 {
            return Err(Error::InvalidInput("sigma must map every element".into()));
        }
        let mut hit = vec![false; n];
        for &s in sigma {
            if s >= n || std::mem::replace(&mut hit[s], true) {
                return Err(Error::Validation("sigma is not a bijection".into()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if sigma[a.mul(x, y)] != a.mul(sigma[x], sigma[y]) {
                    return Err(Error::Validation("sigma is not a homomorphism".into()));
                }
            }
        }
        // powers[k][x] = σ^k(x)
        let mut powers: Vec<Vec<usize>> = vec![(0..n).collect()];
        for k in 1..=m {
            powers.push(powers[k - 1].iter().map(|&x| sigma[x]).collect());
        }
        if powers[m] != powers[0] {
            return Err(Error::Validation(format!("sigma^{m} is not the identity")));
        }
        let t = table(n * m, |p, q| {
            let (a1, k1) = (p % n, p / n);
            let (a2, k2) = (q % n, q / n);
            a.mul(a1, powers[k1][a2]) + n * ((k1 + k2) % m)
        });
        let tag: Vec<String> = sigma.iter().map(usize::to_string).collect();
        Self::from_table(format!("{}:C{m}[{}]", a.name(), tag.join(",")), t)
    }

    /// The non-abelian group `Z/q ⋊ Z/p` for primes `p | q − 1`.
    pub fn nonabelian_pq(p: usize, q: usize) -> Result<Self> {
        if !is_prime(p as u64) || !is_prime(q as u64) || (q - 1) % p != 0 {
            return Err(Error::InvalidInput(format!("need primes p | q - 1, got ({p}, {q})")));
        }
        let r = (2..q)
            .find(|&r| crate::abelian::number_theory::pow(r as u64, p as u32) % q as u64 == 1)
            .expect("(Z/q)^× is cyclic of order q - 1");
        let cq = Self::cyclic(q)?;
        let sigma: Vec<usize> = (0..q).map(|x| x * r % q).collect();
        let mut g = Self::semidirect_by_cyclic(&cq, &sigma, p)?;
        g.name = format!("PQ({p},{q})");
        Ok(g)
    }

    /// Direct product of the cyclic invariant factors of a finite group.
    pub fn from_abelian(a: &FinGenAbGroup) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::InfiniteOptions(format!("{a} is infinite")));
        }
        let mut g = Self::trivial();
        for &d in a.torsion() {
            let c = Self::cyclic(d as usize)?;
            g = if g.order() == 1 { c } else { Self::direct_product(&g, &c)? };
        }
        g.name = a.to_string().replace(' ', "");
        Ok(g)
    }

    fn renamed(mut self, name: String) -> Self {
        self.name = name;
        self
    }
}

/// `SmallGroup(16, id)` for every `id` in `1..=14`.
pub fn order16(id: usize) -> Result<FiniteGroup> {
    let c = FiniteGroup::cyclic;
    let x = |g: FiniteGroup, h: FiniteGroup| FiniteGroup::direct_product(&g, &h);
    let group = match id {
        1 => c(16)?,
        2 => x(c(4)?, c(4)?)?,
        3 => {
            // (Z/4 × Z/2) ⋊ Z/2 with a ↦ ab, b ↦ b; (i, j) has id 2i + j
            let a = x(c(4)?, c(2)?)?;
            let sigma: Vec<usize> = (0..8).map(|e| {
                let (i, j) = (e / 2, e % 2);
                2 * i + (i + j) % 2
            }).collect();
            FiniteGroup::semidirect_by_cyclic(&a, &sigma, 2)?
        }
        4 => FiniteGroup::semidirect_by_cyclic(&c(4)?, &[0, 3, 2, 1], 4)?,
        5 => x(c(8)?, c(2)?)?,
        6 => FiniteGroup::semidirect_by_cyclic(&c(8)?, &(0..8).map(|i| 5 * i % 8).collect::<Vec<_>>(), 2)?,
        7 => FiniteGroup::dihedral(8)?,
        8 => FiniteGroup::semidirect_by_cyclic(&c(8)?, &(0..8).map(|i| 3 * i % 8).collect::<Vec<_>>(), 2)?,
        9 => FiniteGroup::dicyclic(4)?,
        10 => x(x(c(4)?, c(2)?)?, c(2)?)?,
        11 => x(FiniteGroup::dihedral(4)?, c(2)?)?,
        12 => x(FiniteGroup::dicyclic(2)?, c(2)?)?,
        13 => {
            // central product D4 ∘ C4: identify r² ∈ D4 with 2 ∈ C4
            let d4c4 = x(FiniteGroup::dihedral(4)?, c(4)?)?;
            let central = d4c4.subgroup(&[0, 2 * 4 + 2])?;
            d4c4.quotient_group(&central)?
        }
        14 => x(x(x(c(2)?, c(2)?)?, c(2)?)?, c(2)?)?,
        _ => return Err(Error::InvalidInput(format!("no group of order 16 with id {id}"))),
    };
    debug_assert_eq!(group.order(), 16);
    Ok(group.renamed(format!("SG16_{id}")))
}

fn check_degree(n: usize) -> Result<()> {
    if n > 7 {
        return Err(Error::ResourceLimit(format!("degree {n} > 7")));
    }
    Ok(())
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions: usize = (0..p.len())
        .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
        .sum();
    inversions % 2 == 0
}

/// `(p ∘ q)(x) = p(q(x))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn one_line(p: &[usize]) -> String {
    if p.len() <= 10 {
        p.iter().map(|d| d.to_string()).collect()
    } else {
        let parts: Vec<String> = p.iter().map(usize::to_string).collect();
        parts.join(".")
    }
}
