//! Closed-form outcomes and explicit winning moves.

use super::number_theory::factorize;
use super::{AbElement, FinGenAbGroup};
use crate::engine::{Outcome, OutcomeClass, Rule};
use crate::error::{Error, Result};

/// `A ≅ B ⊕ B`: even rank, and the torsion chain (left-padded with a 1 when
/// its length is odd) pairs up as `n_1 = n_2, n_3 = n_4, …`.
pub fn is_square(a: &FinGenAbGroup) -> bool {
    if a.rank % 2 != 0 {
        return false;
    }
    let mut chain: Vec<u64> = a.torsion.clone();
    if chain.len() % 2 == 1 {
        chain.insert(0, 1);
    }
    chain.chunks(2).all(|pair| pair[0] == pair[1])
}

/// `Some((p, dim))` when `a ≅ (Z/p)^dim` (the trivial group has dimension 0
/// and reports `p = 0`).
pub fn is_elementary_abelian(a: &FinGenAbGroup) -> Option<(u64, usize)> {
    if a.rank > 0 {
        return None;
    }
    match a.torsion.first() {
        None => Some((0, 0)),
        Some(&p) => {
            let prime = factorize(p) == [(p, 1)];
            (prime && a.torsion.iter().all(|&d| d == p)).then_some((p, a.torsion.len()))
        }
    }
}

/// Outcome under both rules, for any finitely generated abelian group.
///
/// Normal P iff square. Misère P iff finite elementary abelian of odd
/// dimension, or a square that is not finite elementary abelian.
pub fn outcome_classifier(a: &FinGenAbGroup) -> Outcome {
    let square = is_square(a);
    let elementary = is_elementary_abelian(a);
    let normal = if square { OutcomeClass::P } else { OutcomeClass::N };
    let misere_p = match elementary {
        Some((_, dim)) => dim % 2 == 1,
        None => square,
    };
    let misere = if misere_p { OutcomeClass::P } else { OutcomeClass::N };
    Outcome { normal, misere }
}

/// An element whose quotient is a P-position under `rule`.
pub fn winning_move(a: &FinGenAbGroup, rule: Rule) -> Result<AbElement> {
    if a.is_trivial() {
        return Err(Error::InvalidInput("the trivial group has no moves".into()));
    }
    if outcome_classifier(a).under(rule).is_p() {
        return Err(Error::InvalidInput(format!("{a} is a {rule} P-position")));
    }
    let x = match rule {
        Rule::Normal => normal_move(a),
        Rule::Misere => misere_move(a)?,
    };
    let q = a.quotient_by_element(&x)?;
    if !outcome_classifier(&q).under(rule).is_p() {
        return Err(Error::Validation(format!(
            "move {x} from {a} leads to {q}, which is not {rule} P"
        )));
    }
    Ok(x)
}

/// Coefficients of the move to a square for the chain `n_1 | … | n_L`.
///
/// Even `L`: `0, n_1, c_3, c_3, c_5, c_5, …` with `c_3 = n_1 n_3 / n_2`, and so on.
/// Odd `L`: `1, c_2, c_2, c_4, c_4, …` with `c_2 = n_2 / n_1`, and so on.
/// The last entry of the chain is never read, so it may stand for a `Z`
/// summand (order 0).
fn square_move_coefficients(chain: &[u64]) -> Vec<u64> {
    let len = chain.len();
    let mut x = vec![0u64; len];
    if len == 0 {
        return x;
    }
    let (mut c, first_pair) = if len % 2 == 0 {
        x[1] = chain[0];
        (chain[0], 2)
    } else {
        x[0] = 1;
        (1, 1)
    };
    let mut i = first_pair;
    while i + 1 < len {
        // 0-based slot i pairs with i+1 and picks up the ratio chain[i]/chain[i-1]
        c *= chain[i] / chain[i - 1];
        x[i] = c;
        x[i + 1] = c;
        i += 2;
    }
    x
}

fn normal_move(a: &FinGenAbGroup) -> AbElement {
    let s = a.torsion.len();
    let r = a.rank as usize;
    if r % 2 == 0 {
        let coeffs = square_move_coefficients(&a.torsion);
        let residues = reduce(&coeffs, &a.torsion);
        AbElement::new(residues, vec![0; r])
    } else {
        let mut chain = a.torsion.clone();
        chain.push(0);
        let coeffs = square_move_coefficients(&chain);
        let residues = reduce(&coeffs[..s], &a.torsion);
        let mut free = vec![0i64; r];
        free[0] = coeffs[s] as i64;
        AbElement::new(residues, free)
    }
}

fn reduce(coeffs: &[u64], torsion: &[u64]) -> Vec<i64> {
    coeffs.iter().zip(torsion).map(|(&c, &d)| (c % d) as i64).collect()
}

fn misere_move(a: &FinGenAbGroup) -> Result<AbElement> {
    let s = a.torsion.len();
    if is_elementary_abelian(a).is_some() {
        // even dimension: drop one generator
        let mut residues = vec![0i64; s];
        residues[0] = 1;
        return Ok(AbElement::new(residues, Vec::new()));
    }
    let x = normal_move(a);
    let q = a.quotient_by_element(&x)?;
    if is_elementary_abelian(&q).is_none() {
        return Ok(x);
    }
    // the square was elementary, so n_1 = … = n_{s-1} = p
    let p = a
        .torsion
        .first()
        .map_or(2, |&d| factorize(d)[0].0) as i64;
    if a.rank == 0 {
        // (Z/p)^{s-1} ⊕ Z/n with p | n, n ≠ p
        let mut residues = vec![0i64; s];
        residues[s - 1] = if s % 2 == 0 { 1 } else { p };
        Ok(AbElement::new(residues, Vec::new()))
    } else {
        // (Z/p)^s ⊕ Z
        let mut free = vec![0i64; a.rank as usize];
        free[0] = if s % 2 == 1 { 1 } else { p };
        Ok(AbElement::new(vec![0; s], free))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinGenAbGroup;

    fn g(spec: &str) -> FinGenAbGroup {
        spec.parse().unwrap()
    }

    #[test]
    fn squares() {
        assert!(is_square(&g("Z/2 + Z/2")));
        assert!(is_square(&g("Z + Z")));
        assert!(!is_square(&g("Z/4 + Z/8")));
        assert!(is_square(&g("0")));
        assert!(!is_square(&g("Z/3")));
        assert!(is_square(&g("Z/2 + Z/6 + Z/6 + Z/2")));
        assert!(!is_square(&g("Z/2 + Z")));
    }

    #[test]
    fn classifier_examples() {
        use OutcomeClass::*;
        assert_eq!(outcome_classifier(&g("(Z/5)^3")).misere, P);
        assert_eq!(outcome_classifier(&g("(Z/5)^2")), Outcome::new(P, N));
        assert_eq!(outcome_classifier(&g("Z + Z")), Outcome::new(P, P));
        assert_eq!(outcome_classifier(&g("0")), Outcome::TERMINAL);
        assert_eq!(outcome_classifier(&g("Z/4 + Z/8")), Outcome::new(N, N));
        assert_eq!(outcome_classifier(&g("Z")), Outcome::new(N, N));
        assert_eq!(outcome_classifier(&g("Z/2 + Z/6 + Z/6")).misere, N);
    }

    #[test]
    fn winning_move_examples() {
        let coords = |spec: &str, rule| winning_move(&g(spec), rule).unwrap().coords();
        assert_eq!(coords("Z/4 + Z/8 + Z/40", Rule::Normal), vec![1, 2, 2]);
        assert_eq!(coords("Z/4 + Z/8", Rule::Normal), vec![0, 4]);
        assert_eq!(coords("Z/7", Rule::Normal), vec![1]);
        assert_eq!(coords("Z/2 + Z", Rule::Normal), vec![0, 2]);
        assert_eq!(coords("Z", Rule::Normal), vec![1]);
        assert_eq!(coords("Z/8", Rule::Misere), vec![2]);
        assert_eq!(coords("Z", Rule::Misere), vec![2]);
        assert_eq!(coords("Z/3 + Z", Rule::Misere), vec![0, 1]);
        assert_eq!(coords("(Z/3)^2 + Z", Rule::Misere), vec![0, 0, 3]);
        assert_eq!(coords("Z/2 + Z/4", Rule::Misere), vec![0, 1]);
        assert_eq!(coords("Z/3 + Z/3 + Z/6", Rule::Misere), vec![0, 0, 3]);
        assert!(winning_move(&g("Z/4 + Z/4"), Rule::Normal).is_err());
        assert!(winning_move(&g("0"), Rule::Misere).is_err());
        assert!(winning_move(&g("Z/3"), Rule::Misere).is_err());
    }
}
