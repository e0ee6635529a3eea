use std::str::FromStr;

use super::{canonicalize, AbElement, FinGenAbGroup};
use crate::error::{Error, Result};

impl FromStr for FinGenAbGroup {
    type Err = Error;

    /// `term (+ term)*` with `term` one of `Z`, `Z/<n>`, `(Z/<n>)^<k>`,
    /// plus `0` for the trivial group. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty group spec".into()));
        }
        if text == "0" {
            return Ok(FinGenAbGroup::trivial());
        }
        let mut orders = Vec::new();
        for term in text.split('+') {
            let (base, power) = match term.strip_prefix('(') {
                Some(rest) => {
                    let (inner, exp) = rest
                        .split_once(")^")
                        .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
                    (inner, parse_int(exp, term)?)
                }
                None => (term, 1),
            };
            let order = match base {
                "Z" => 0,
                _ => {
                    let n = base
                        .strip_prefix("Z/")
                        .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
                    let n = parse_int(n, term)?;
                    if n == 0 {
                        return Err(Error::Parse(format!("Z/0 is written Z in {term:?}")));
                    }
                    n
                }
            };
            for _ in 0..power {
                orders.push(order);
            }
        }
        Ok(canonicalize(&orders))
    }
}

fn parse_int(t: &str, context: &str) -> Result<u64> {
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected a number in {context:?}")));
    }
    t.parse()
        .map_err(|_| Error::Parse(format!("number out of range in {context:?}")))
}

/// Comma-separated integers, torsion coordinates first.
pub fn parse_element(group: &FinGenAbGroup, text: &str) -> Result<AbElement> {
    let coords: Vec<i64> = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad coordinate {t:?}")))
        })
        .collect::<Result<_>>()?;
    AbElement::from_coords(group, &coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let a: FinGenAbGroup = "Z/4 + Z/8".parse().unwrap();
        assert_eq!(a.torsion(), &[4, 8]);
        let b: FinGenAbGroup = "(Z/2)^3 + Z".parse().unwrap();
        assert_eq!((b.torsion(), b.rank()), (&[2u64, 2, 2][..], 1));
        let c: FinGenAbGroup = "Z/6+Z/4".parse().unwrap();
        assert_eq!(c.torsion(), &[2, 12]);
        let d: FinGenAbGroup = "Z/1".parse().unwrap();
        assert!(d.is_trivial());
        for bad in ["", "Z/", "Z/0", "Q", "(Z/2)^", "(Z/2", "Z/2 +", "Z/-3", "Z/x"] {
            assert!(bad.parse::<FinGenAbGroup>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn elements() {
        let a: FinGenAbGroup = "Z/4 + Z/8 + Z".parse().unwrap();
        let x = parse_element(&a, "1, 2,-3").unwrap();
        assert_eq!((x.residues, x.free_coords), (vec![1, 2], vec![-3]));
        assert!(parse_element(&a, "1,2").is_err());
        assert!(parse_element(&a, "1,a,2").is_err());
    }
}
