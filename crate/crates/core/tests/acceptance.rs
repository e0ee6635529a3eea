//! Acceptance criteria, one PASS/FAIL line each. Oracles are local to this
//! file wherever the library would otherwise be checked against itself: a
//! separate divisor-chain game solver, prime factorization by trial
//! division, quotient invariants by element counting, and the compound
//! outcome rules restated from their definitions.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::rc::Rc;
use std::time::{Duration, Instant};

use algame::abelian::{
    all_finite_groups, canonicalize, conjectured_nimber_3gen, nimber_2gen_formula, nimber_bruteforce,
    nimber_formula, omega_reduce, outcome_classifier, winning_move, AbElement, FinGenAbGroup, FiniteAbelian,
};
use algame::engine::{compound, GamePosition, NimPile, Outcome, OutcomeClass, Rule, Solver, SolverConfig};
use algame::finite_group::{order16, quotient_game_outcome, quotient_types, subgroup_game_outcome, FiniteGroup, GroupType};
use algame::finite_ring::{ring_game_outcome, FiniteCommRing, RingPosition};
use algame::mixed::Component;
use algame::{Error, Ordinal};

type Outcome3 = Result<String, String>;

// ---------------------------------------------------------------- oracles

fn omega(mut n: u64) -> u64 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        while n % d == 0 {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    count + u64::from(n > 1)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && omega(n) == 1
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn tri(k: u64) -> u64 {
    k * (k + 1) / 2
}

/// The divisor-chain game on its own: positions are chains `n_1 | … | n_s`
/// without 1s, options interleave `n_{i-1} | m_i | n_i`.
#[derive(Default)]
struct ChainGame {
    memo: HashMap<Vec<u64>, (bool, bool, u64)>,
}

impl ChainGame {
    fn options(chain: &[u64]) -> BTreeSet<Vec<u64>> {
        let mut out = BTreeSet::new();
        let mut partial: Vec<Vec<u64>> = vec![vec![]];
        for (i, &n) in chain.iter().enumerate() {
            let below = if i == 0 { 1 } else { chain[i - 1] };
            let choices: Vec<u64> = divisors(n).into_iter().filter(|m| m % below == 0).collect();
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    choices.iter().map(move |&m| {
                        let mut q = p.clone();
                        q.push(m);
                        q
                    })
                })
                .collect();
        }
        for m in partial {
            if m != chain {
                out.insert(m.into_iter().filter(|&d| d > 1).collect());
            }
        }
        out
    }

    /// (normal P, misère P, nimber)
    fn solve(&mut self, chain: &[u64]) -> (bool, bool, u64) {
        if let Some(&v) = self.memo.get(chain) {
            return v;
        }
        let opts = Self::options(chain);
        let vals: Vec<(bool, bool, u64)> = opts.iter().map(|o| self.solve(o)).collect();
        let normal_p = vals.iter().all(|v| !v.0);
        let misere_p = !opts.is_empty() && vals.iter().all(|v| !v.1);
        let nims: BTreeSet<u64> = vals.iter().map(|v| v.2).collect();
        let nimber = (0..).find(|k| !nims.contains(k)).unwrap();
        let v = (normal_p, misere_p, nimber);
        self.memo.insert(chain.to_vec(), v);
        v
    }

    fn outcome(&mut self, chain: &[u64]) -> Outcome {
        let (n, m, _) = self.solve(chain);
        Outcome::new(class(n), class(m))
    }
}

fn class(p: bool) -> OutcomeClass {
    if p {
        OutcomeClass::P
    } else {
        OutcomeClass::N
    }
}

fn pp(exps: &[u32]) -> FinGenAbGroup {
    canonicalize(&exps.iter().map(|&e| 2u64.pow(e)).collect::<Vec<_>>())
}

/// `A/⟨x⟩` by counting, for each prime power `p^k`, the cosets killed by it.
fn quotient_by_counting(a: &FinGenAbGroup, x: &AbElement) -> FinGenAbGroup {
    let d = a.torsion();
    let elements = a.elements().unwrap();
    let add = |u: &[i64], v: &[i64]| -> Vec<i64> { u.iter().zip(v).zip(d).map(|((p, q), &n)| (p + q).rem_euclid(n as i64)).collect() };
    let scale = |k: u64, u: &[i64]| -> Vec<i64> { u.iter().zip(d).map(|(p, &n)| (p * k as i64).rem_euclid(n as i64)).collect() };
    let xs = a.reduce(x).unwrap().coords();
    let mut h = BTreeSet::new();
    let mut cur = vec![0i64; d.len()];
    loop {
        if !h.insert(cur.clone()) {
            break;
        }
        cur = add(&cur, &xs);
    }
    let order = elements.len() as u64 / h.len() as u64;
    let mut orders = Vec::new();
    for p in (2..=order).filter(|&p| is_prime(p) && order % p == 0) {
        // c_k = log_p #{y + H : p^k y ∈ H}
        let mut c = vec![0u32];
        let mut pk = 1u64;
        loop {
            pk *= p;
            let count = elements.iter().filter(|y| h.contains(&scale(pk, &y.coords()))).count() as u64 / h.len() as u64;
            let ck = (count as f64).log(p as f64).round() as u32;
            if ck == *c.last().unwrap() {
                break;
            }
            c.push(ck);
        }
        // c_k − c_{k−1} summands have exponent ≥ k
        for k in 1..c.len() {
            let at_least_k = c[k] - c[k - 1];
            let at_least_next = if k + 1 < c.len() { c[k + 1] - c[k] } else { 0 };
            for _ in 0..(at_least_k - at_least_next) {
                orders.push(p.pow(k as u32));
            }
        }
    }
    canonicalize(&orders)
}

/// Compound outcome rules, restated: normal P iff every component is normal
/// P; misère with one live component follows it, with several it is P iff
/// every component is normal P; a finished compound is misère N.
fn compound_rule(parts: &[(bool, Outcome)]) -> Outcome {
    let normal_p = parts.iter().all(|(_, o)| o.normal.is_p());
    let live: Vec<&Outcome> = parts.iter().filter(|(t, _)| !t).map(|(_, o)| o).collect();
    let misere_p = match live.len() {
        0 => false,
        1 => live[0].misere.is_p(),
        _ => normal_p,
    };
    Outcome::new(class(normal_p), class(misere_p))
}

fn component_outcome(c: &Component, chains: &mut ChainGame) -> (bool, Outcome) {
    match c {
        Component::Nim(p) => (p.size == 0, Outcome::new(class(p.size == 0), class(p.size == 1))),
        Component::Abelian(a) => (a.group().is_trivial(), chains.outcome(a.group().torsion())),
        _ => unreachable!("pool holds Nim piles and abelian groups"),
    }
}

fn failures(total: usize, fails: Vec<String>) -> Outcome3 {
    if fails.is_empty() {
        Ok(format!("{total} cases"))
    } else {
        let shown: Vec<&str> = fails.iter().take(5).map(String::as_str).collect();
        Err(format!("{}/{total} failed: {}", fails.len(), shown.join("; ")))
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

// ---------------------------------------------------------------- criteria

const FIGURE1: [&[u64]; 12] = [
    &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
    &[0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    &[0, 1, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16],
    &[0, 2, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17],
    &[0, 1, 3, 11, 12, 13, 14, 15, 16, 17, 18],
    &[0, 2, 4, 13, 14, 15, 16, 17, 18, 19],
    &[0, 1, 5, 15, 16, 17, 18, 19, 20],
    &[0, 2, 3, 6, 18, 19, 20, 21],
    &[0, 1, 4, 7, 20, 21, 22],
    &[0, 2, 5, 8, 22, 23],
    &[0, 1, 3, 9, 24],
    &[0, 2, 4, 6],
];

fn figure1() -> Outcome3 {
    let mut solver = Solver::new();
    let (mut total, mut fails) = (0, Vec::new());
    for (n, row) in FIGURE1.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let m = n + j;
            total += 1;
            let got = nimber_bruteforce(&pp(&[n as u32, m as u32]), &mut solver).map_err(err)?;
            if got != Ordinal::finite(want) {
                fails.push(format!("alpha({n},{m}) = {got}, printed {want}"));
            }
        }
    }
    failures(total, fails)
}

fn two_generator() -> Outcome3 {
    let mut solver = Solver::new();
    let mut chains = ChainGame::default();
    let (mut total, mut fails) = (0, Vec::new());
    for n in 0..=20u32 {
        for m in n..=20u32 {
            total += 1;
            let a = pp(&[n, m]);
            let brute = nimber_bruteforce(&a, &mut solver).map_err(err)?;
            let local = chains.solve(a.torsion()).2;
            let formula = nimber_2gen_formula(n as u64, m as u64).map_err(err)?;
            if brute != Ordinal::finite(formula) || local != formula {
                fails.push(format!("({n},{m}): formula {formula}, brute {brute}, local {local}"));
            }
        }
    }
    failures(total, fails)
}

fn classifier() -> Outcome3 {
    let mut solver = Solver::outcome_only();
    let mut chains = ChainGame::default();
    let groups = all_finite_groups(256);
    let mut fails = Vec::new();
    for a in &groups {
        let local = chains.outcome(a.torsion());
        let brute = solver.outcome(&FiniteAbelian::new(a.clone()).unwrap()).map_err(err)?;
        let formula = outcome_classifier(a);
        if local != formula || brute != formula {
            fails.push(format!("{a}: classifier {formula:?}, local {local:?}, engine {brute:?}"));
        }
    }
    failures(groups.len(), fails)
}

fn winning_moves() -> Outcome3 {
    let mut chains = ChainGame::default();
    let mut cases: Vec<FinGenAbGroup> = all_finite_groups(256);
    for n in 1..=50 {
        cases.push(FinGenAbGroup::from_chain(if n == 1 { vec![] } else { vec![n] }, 1).unwrap());
    }
    for r in 1..=3 {
        cases.push(FinGenAbGroup::free(r));
    }
    let (mut total, mut fails) = (0, Vec::new());
    for a in &cases {
        for rule in [Rule::Normal, Rule::Misere] {
            if a.is_trivial() || outcome_classifier(a).under(rule).is_p() {
                continue;
            }
            total += 1;
            let x = winning_move(a, rule).map_err(err)?;
            let q = a.quotient_by_element(&x).map_err(err)?;
            let p_by_classifier = outcome_classifier(&q).under(rule).is_p();
            // finite case: the quotient must be P in the independent game too
            let p_by_search = !a.is_finite() || chains.outcome(q.torsion()).under(rule).is_p();
            let sizes_ok = match (a.order(), q.order(), a.element_order(&x).unwrap()) {
                (Some(na), Some(nq), Some(k)) => na == nq * k,
                _ => true,
            };
            if !(p_by_classifier && p_by_search && sizes_ok) {
                fails.push(format!("{a} {rule}: {x} gives {q}"));
            }
        }
    }
    failures(total, fails)
}

fn options_by_elements() -> Outcome3 {
    let groups = all_finite_groups(128);
    let mut fails = Vec::new();
    for a in &groups {
        let listed: BTreeSet<Vec<u64>> = ChainGame::options(a.torsion());
        let library: BTreeSet<Vec<u64>> = a.options().map_err(err)?.iter().map(|g| g.torsion().to_vec()).collect();
        let mut realized = BTreeSet::new();
        for x in a.elements().map_err(err)?.iter().skip(1) {
            let by_count = quotient_by_counting(a, x);
            if a.quotient_by_element(x).map_err(err)? != by_count {
                fails.push(format!("{a} / <{x}> disagrees with counting"));
            }
            realized.insert(by_count.torsion().to_vec());
        }
        if listed != realized || library != realized {
            fails.push(format!("{a}: {} listed, {} realized", listed.len(), realized.len()));
        }
    }
    failures(groups.len(), fails)
}

fn omega_invariance() -> Outcome3 {
    let mut solver = Solver::new();
    let mut chains = ChainGame::default();
    let groups = all_finite_groups(200);
    let mut fails = Vec::new();
    for a in &groups {
        let reduced: Vec<u64> = a.torsion().iter().map(|&d| 2u64.pow(omega(d) as u32)).collect();
        let lib_reduced = omega_reduce(a, 2).map_err(err)?;
        let x = nimber_bruteforce(a, &mut solver).map_err(err)?;
        let y = chains.solve(&reduced).2;
        if lib_reduced.torsion() != reduced.as_slice() || x != Ordinal::finite(y) {
            fails.push(format!("{a}: {x} vs reduced {y}"));
        }
    }
    failures(groups.len(), fails)
}

fn cyclic_and_rank_one() -> Outcome3 {
    let mut solver = Solver::new();
    let mut fails = Vec::new();
    for n in 1..=10_000u64 {
        let v = nimber_bruteforce(&canonicalize(&[n]), &mut solver).map_err(err)?;
        if v != Ordinal::finite(omega(n)) {
            fails.push(format!("Z/{n}: {v}"));
        }
    }
    if nimber_formula(&FinGenAbGroup::free(1)).map_err(err)? != Ordinal::omega() {
        fails.push("Z".into());
    }
    for n in 2..=50u64 {
        let a = FinGenAbGroup::from_chain(vec![n], 1).unwrap();
        if nimber_formula(&a).map_err(err)? != Ordinal::new(1u32, omega(n)) {
            fails.push(a.to_string());
        }
    }
    for spec in ["Z + Z", "(Z/2)^3", "Z/2 + Z/2 + Z", "Z/3 + Z/9 + Z/27", "Z + Z + Z"] {
        let a: FinGenAbGroup = spec.parse().unwrap();
        if !matches!(nimber_formula(&a), Err(Error::Unsupported(_))) {
            fails.push(format!("{spec} not rejected"));
        }
    }
    if !matches!(nimber_bruteforce(&FinGenAbGroup::free(1), &mut solver), Err(Error::InfiniteOptions(_))) {
        fails.push("brute force accepted Z".into());
    }
    failures(10_000 + 50 + 6, fails)
}

const LATTICE_TABLE: [&str; 6] = ["NPNPNP", "PNNNNN", "NNPNPN", "PNNNNN", "NNPNPN", "PNNNNN"];

fn compounds() -> Outcome3 {
    let mut pool: Vec<Component> = (0..=4).map(|n| Component::Nim(NimPile::new(n))).collect();
    pool.extend(all_finite_groups(32).into_iter().map(|a| Component::Abelian(FiniteAbelian::new(a).unwrap())));
    let mut chains = ChainGame::default();
    let mut solver = Solver::outcome_only();
    let (mut total, mut fails) = (0, Vec::new());
    let mut check = |parts: Vec<&Component>, solver: &mut Solver, fails: &mut Vec<String>| -> Result<(), String> {
        let brute = solver.outcome(&compound(parts.iter().map(|c| (*c).clone()).collect())).map_err(err)?;
        let rule: Vec<(bool, Outcome)> = parts.iter().map(|c| component_outcome(c, &mut chains)).collect();
        if brute != compound_rule(&rule) {
            let keys: Vec<String> = parts.iter().map(|c| c.canonical_key()).collect();
            fails.push(keys.join(" v "));
        }
        Ok(())
    };
    for i in 0..pool.len() {
        for j in i..pool.len() {
            total += 1;
            check(vec![&pool[i], &pool[j]], &mut solver, &mut fails)?;
            for k in j..pool.len() {
                total += 1;
                check(vec![&pool[i], &pool[j], &pool[k]], &mut solver, &mut fails)?;
            }
        }
    }

    for (n, row) in LATTICE_TABLE.iter().enumerate() {
        for (m, want) in row.chars().enumerate() {
            total += 1;
            let two = FiniteAbelian::new(canonicalize(&vec![2; n])).unwrap();
            let three = FiniteAbelian::new(canonicalize(&vec![3; m])).unwrap();
            let direct = FiniteAbelian::new(two.group().direct_sum(three.group())).unwrap();
            let a = solver.outcome(&compound(vec![two, three])).map_err(err)?.misere;
            let b = solver.outcome(&direct).map_err(err)?.misere;
            let got = if a.is_p() { 'P' } else { 'N' };
            if a != b || got != want {
                fails.push(format!("table ({n},{m}) = {got}, printed {want}"));
            }
        }
    }

    let mut nim = Solver::new();
    let one = NimPile::new(1);
    let h = NimPile::with_extra_options(1, vec![NimPile::new(2)]);
    for (parts, want) in [
        (vec![one.clone(), one.clone()], 2),
        (vec![one.clone(), NimPile::new(2)], 3),
        (vec![one.clone(), h.clone()], 4),
    ] {
        total += 1;
        let v = nim.nimber(&compound(parts)).map_err(err)?;
        if v != Ordinal::finite(want) {
            fails.push(format!("nim compound {v}, expected {want}"));
        }
    }
    failures(total, fails)
}

fn is_klein(g: &FiniteGroup) -> bool {
    g.order() == 4 && (0..4).all(|x| g.mul(x, x) == 0)
}

fn groups() -> Outcome3 {
    let mut fails = Vec::new();
    let mut catalogue: Vec<FiniteGroup> = (3..=7).map(|n| FiniteGroup::dihedral(n).unwrap()).collect();
    catalogue.push(FiniteGroup::dicyclic(2).unwrap());
    catalogue.push(FiniteGroup::dicyclic(3).unwrap());
    catalogue.push(FiniteGroup::alternating(4).unwrap());
    for q in [3, 5, 7] {
        catalogue.push(FiniteGroup::nonabelian_pq(2, q).unwrap());
    }
    for g in &catalogue {
        let o = quotient_game_outcome(g).map_err(err)?;
        if g.is_abelian() || g.order() > 15 || !o.normal.is_n() {
            fails.push(format!("{} is {:?}", g.name(), o.normal));
        }
    }

    let mut p_ids = Vec::new();
    for id in [3, 4, 6, 7, 8, 9, 11, 12, 13] {
        let g = order16(id).map_err(err)?;
        if g.order() != 16 || g.is_abelian() {
            fails.push(format!("SG16_{id} is not non-abelian of order 16"));
        }
        if quotient_game_outcome(&g).map_err(err)?.normal.is_p() {
            p_ids.push(id);
        }
    }
    if p_ids != [3, 4] {
        fails.push(format!("order-16 P ids {p_ids:?}"));
    }

    let d6 = FiniteGroup::dihedral(6).unwrap();
    let r2 = d6.mul(1, 1);
    let q = d6.quotient_group(&d6.normal_closure(&[r2])).map_err(err)?;
    if !is_klein(&q) {
        fails.push("D6 / <<r^2>>".into());
    }
    for n in 2..=6 {
        let g = FiniteGroup::dicyclic(n).unwrap();
        let x = 2 * n;
        let seed = if n % 2 == 0 { g.mul(1, 1) } else { x };
        let q = g.quotient_group(&g.normal_closure(&[seed])).map_err(err)?;
        let ok = if n % 2 == 0 { is_klein(&q) } else { q.order() == 1 };
        if !ok {
            fails.push(format!("Dic{n} quotient has order {}", q.order()));
        }
        let gc = FiniteGroup::direct_product(&g, &FiniteGroup::cyclic(2).unwrap()).unwrap();
        if !is_klein(&gc.quotient_group(&gc.normal_closure(&[2])).map_err(err)?) {
            fails.push(format!("Dic{n} x C2 / <<(a,0)>>"));
        }
    }

    let types = quotient_types(&order16(3).map_err(err)?);
    let want: BTreeSet<GroupType> = [
        GroupType::Abelian(canonicalize(&[2])),
        GroupType::Abelian(canonicalize(&[4])),
        GroupType::Abelian(canonicalize(&[4, 2])),
        GroupType::Dihedral(4),
    ]
    .into();
    if types != want {
        fails.push(format!("SG16_3 quotients {types:?}"));
    }
    failures(catalogue.len() + 9 + 1 + 10 + 1, fails)
}

fn subgroup_games() -> Outcome3 {
    let mut fails = Vec::new();
    for n in 1..=25 {
        let o = subgroup_game_outcome(&FiniteGroup::dihedral(n).unwrap()).map_err(err)?;
        if o.normal.is_p() != is_prime(n as u64) {
            fails.push(format!("D{n}"));
        }
    }
    for n in 1..=5 {
        let o = subgroup_game_outcome(&FiniteGroup::symmetric(n).unwrap()).map_err(err)?;
        if o.normal.is_p() != (n != 2) {
            fails.push(format!("S{n}"));
        }
    }
    let spots = [
        (FiniteGroup::symmetric(3).unwrap(), true),
        (FiniteGroup::dihedral(5).unwrap(), true),
        (FiniteGroup::alternating(4).unwrap(), true),
        (FiniteGroup::dihedral(4).unwrap(), false),
        (FiniteGroup::dihedral(6).unwrap(), false),
        (FiniteGroup::dicyclic(2).unwrap(), false),
    ];
    for (g, p) in &spots {
        if subgroup_game_outcome(g).map_err(err)?.normal.is_p() != *p {
            fails.push(format!("{} spot check", g.name()));
        }
    }
    failures(25 + 5 + spots.len(), fails)
}

struct RingRecord {
    name: String,
    misere_p: bool,
    nimber: u64,
    idempotent: bool,
}

fn solve_ring(r: &FiniteCommRing, log: &mut Vec<RingRecord>) -> Result<(bool, u64), String> {
    let outcome = ring_game_outcome(r).map_err(err)?;
    let entry = Solver::new().solve(&RingPosition::start(Rc::new(r.clone())), true).map_err(err)?;
    if entry.outcome != outcome {
        return Err(format!("{}: solvers disagree", r.name()));
    }
    let nimber = entry.nimber.unwrap();
    log.push(RingRecord {
        name: r.name().to_string(),
        misere_p: outcome.misere.is_p(),
        nimber,
        idempotent: r.has_nontrivial_idempotent(),
    });
    Ok((outcome.misere.is_p(), nimber))
}

fn rings(log: &mut Vec<RingRecord>) -> Outcome3 {
    type R = FiniteCommRing;
    let mut expected: Vec<(R, bool)> = Vec::new();
    for p in [2u64, 3] {
        let f = R::gf_p(p).unwrap();
        expected.push((R::z_mod(p * p).unwrap(), false));
        expected.push((R::product(&f, &f).unwrap(), false));
        expected.push((R::dual_numbers(p).unwrap(), false));
        expected.push((f, true));
        for d in 0..=4 {
            expected.push((R::square_zero_extension(p, d).unwrap(), d % 2 == 0));
        }
    }
    for n in 0..=3 {
        expected.push((R::cusp_truncation(2, n).unwrap(), true));
    }
    for n in 0..=2 {
        expected.push((R::cusp_quotient(2, n + 3, n).unwrap(), false));
        expected.push((R::cusp_quotient(2, n + 1, n + 1).unwrap(), false));
    }
    expected.push((R::monomial_quotient(2, &[(3, 0), (0, 2)]).unwrap(), false));
    for (p, n) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2)] {
        expected.push((R::dual_truncated(p, n).unwrap(), true));
    }
    for n in 2..=3 {
        expected.push((R::monomial_ring(2, n, n).unwrap(), true));
    }
    expected.push((R::monomial_ring(2, 2, 3).unwrap(), false));
    expected.push((R::monomial_ring(2, 3, 2).unwrap(), false));

    let mut fails = Vec::new();
    for (r, want_p) in &expected {
        let (got_p, _) = solve_ring(r, log)?;
        if got_p != *want_p {
            fails.push(format!("{} misere {}", r.name(), if got_p { 'P' } else { 'N' }));
        }
    }
    failures(expected.len(), fails)
}

fn ring_nimbers(log: &mut Vec<RingRecord>) -> Outcome3 {
    type R = FiniteCommRing;
    let mut fails = Vec::new();
    for m in 1..=256u64 {
        let (_, v) = solve_ring(&R::z_mod(m).unwrap(), log)?;
        if v != omega(m) {
            fails.push(format!("Z/{m}: {v}"));
        }
    }
    let f2 = R::gf_p(2).unwrap();
    let sq = R::square_zero_extension(2, 2).unwrap();
    for (r, want) in [(R::product(&f2, &f2).unwrap(), 2), (R::product(&sq, &f2).unwrap(), 4)] {
        let (_, v) = solve_ring(&r, log)?;
        if v != want {
            fails.push(format!("{}: {v}", r.name()));
        }
    }
    failures(258, fails)
}

/// The three-branch formula, restated with `k = n3 − n2 + n1`.
fn conjecture(n1: u64, n2: u64, n3: u64) -> (u64, bool) {
    let k = n3 - n2 + n1;
    let (lo, hi) = (tri(k), tri(k + 1));
    if n2 <= lo {
        (n1 + n2 + n3, false)
    } else if n2 <= hi {
        (n1 + n2 - 1, false)
    } else {
        (lo + (n2 - lo - 1) % (k + 1), true)
    }
}

fn three_generator() -> Outcome3 {
    let mut solver = Solver::new();
    let (mut total, mut fails) = (0, Vec::new());
    let (mut others, mut other_diff) = (0, 0);
    for n1 in 0..=12u32 {
        for n2 in n1..=12u32 {
            for n3 in n2..=12u32 {
                let (value, trusted) = conjecture(n1 as u64, n2 as u64, n3 as u64);
                let lib = conjectured_nimber_3gen(n1 as u64, n2 as u64, n3 as u64).map_err(err)?;
                if (lib.value, lib.trusted) != (value, trusted) {
                    fails.push(format!("library formula differs at ({n1},{n2},{n3})"));
                }
                let brute = nimber_bruteforce(&pp(&[n1, n2, n3]), &mut solver).map_err(err)?;
                if trusted {
                    total += 1;
                    if brute != Ordinal::finite(value) {
                        fails.push(format!("({n1},{n2},{n3}): brute {brute}, formula {value}"));
                    }
                } else {
                    others += 1;
                    if brute != Ordinal::finite(value) {
                        other_diff += 1;
                        println!("# 3-gen ({n1},{n2},{n3}): brute {brute}, formula {value} (untrusted branch)");
                    }
                }
            }
        }
    }
    failures(total, fails).map(|s| format!("{s}; untrusted branches differ in {other_diff}/{others} (reported only)"))
}

fn properties(log: &[RingRecord]) -> Outcome3 {
    let mut fails = Vec::new();
    let mut solver = Solver::new();
    let groups = all_finite_groups(256);
    for a in &groups {
        let v = nimber_bruteforce(a, &mut solver).map_err(err)?;
        let ell: u64 = a.torsion().iter().map(|&d| omega(d)).sum();
        if v > Ordinal::finite(ell) {
            fails.push(format!("{a}: {v} exceeds length {ell}"));
        }
    }
    for rec in log {
        if rec.misere_p && rec.idempotent {
            fails.push(format!("{} misere P with an idempotent", rec.name));
        }
        if rec.misere_p != (rec.nimber == 1) {
            fails.push(format!("{} misere/nimber-1 mismatch", rec.name));
        }
    }
    let g = Rc::new(FiniteGroup::dihedral(6).unwrap());
    let gp = algame::finite_group::GroupPosition::start(g, algame::finite_group::GameKind::Quotient).map_err(err)?;
    solver.solve(&gp, true).map_err(err)?;
    solver.solve(&RingPosition::start(Rc::new(FiniteCommRing::z_mod(72).unwrap())), true).map_err(err)?;
    for (key, e) in solver.memo().iter() {
        if e.nimber.is_some_and(|v| (v == 0) != e.outcome.normal.is_p()) {
            fails.push(format!("{key}: nimber vs outcome"));
        }
    }

    let sample: Vec<FinGenAbGroup> = all_finite_groups(64);
    let compounds: Vec<_> = [(1u64, 2u64), (2, 3), (4, 4)]
        .iter()
        .map(|&(x, y)| {
            compound(vec![
                Component::Nim(NimPile::new(x)),
                Component::Abelian(FiniteAbelian::new(canonicalize(&[2, 2 * y])).unwrap()),
            ])
        })
        .collect();
    let rings = [FiniteCommRing::z_mod(48).unwrap(), FiniteCommRing::square_zero_extension(2, 3).unwrap()];
    for seed in [7u64, 99, 12345] {
        let mut shuffled = Solver::with_config(SolverConfig { shuffle_seed: Some(seed), ..SolverConfig::default() });
        for a in &sample {
            let pos = FiniteAbelian::new(a.clone()).unwrap();
            if shuffled.solve(&pos, true).map_err(err)? != solver.solve(&pos, true).map_err(err)? {
                fails.push(format!("{a} seed {seed}"));
            }
        }
        for c in &compounds {
            if shuffled.solve(c, true).map_err(err)? != solver.solve(c, true).map_err(err)? {
                fails.push(format!("compound seed {seed}"));
            }
        }
        for r in &rings {
            let pos = RingPosition::start(Rc::new(r.clone()));
            if shuffled.solve(&pos, true).map_err(err)? != solver.solve(&pos, true).map_err(err)? {
                fails.push(format!("{} seed {seed}", r.name()));
            }
        }
    }
    failures(groups.len() + log.len() + solver.memo().len() + 3 * (sample.len() + 5), fails)
}

fn main() -> ExitCode {
    let mut log = Vec::new();
    type Criterion<'a> = (&'a str, Option<u64>, Box<dyn FnOnce(&mut Vec<RingRecord>) -> Outcome3>);
    let criteria: Vec<Criterion> = vec![
        ("figure-1", Some(10), Box::new(|_| figure1())),
        ("two-generator-formula", Some(60), Box::new(|_| two_generator())),
        ("outcome-classifier", Some(60), Box::new(|_| classifier())),
        ("winning-moves", None, Box::new(|_| winning_moves())),
        ("options-by-elements", None, Box::new(|_| options_by_elements())),
        ("omega-reduction", None, Box::new(|_| omega_invariance())),
        ("cyclic-and-rank-one", None, Box::new(|_| cyclic_and_rank_one())),
        ("selective-compounds", None, Box::new(|_| compounds())),
        ("group-quotient-game", Some(30), Box::new(|_| groups())),
        ("subgroup-game", Some(120), Box::new(|_| subgroup_games())),
        ("ring-outcomes", Some(120), Box::new(rings)),
        ("ring-nimbers", None, Box::new(ring_nimbers)),
        ("three-generator-report", Some(120), Box::new(|_| three_generator())),
        ("properties", None, Box::new(|log: &mut Vec<RingRecord>| properties(log))),
    ];
    let mut all_ok = true;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = run(&mut log);
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(secs)) = (&result, limit) {
            if elapsed > Duration::from_secs(secs) {
                result = Err(format!("{detail}, but took {elapsed:.1?} (limit {secs} s)"));
            }
        }
        let (status, detail) = match &result {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        all_ok &= result.is_ok();
        println!("{status} criterion-{} {name}: {detail} [{elapsed:.2?}]", i + 1);
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
