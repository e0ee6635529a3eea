use super::FiniteCommRing;
use crate::error::{Error, Result};

/// Parses `Z/<n>`, `GF(<p>)`, `SqZero(<p>,<d>)`, `Cusp(<p>,<n>)`,
/// `DualTrunc(<p>,<n>)`, `Mon(<p>,<n>,<m>)` and `x`-separated products, or a
/// JSON object `{"additive_orders": [...], "one": [...], "basis_products": [[[...]]]}`.
pub fn parse_ring(spec: &str) -> Result<FiniteCommRing> {
    let text: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if text.starts_with('{') {
        return parse_json(&text);
    }
    if text.is_empty() {
        return Err(Error::Parse("empty ring spec".into()));
    }
    let mut factors = text.split('x').map(parse_factor);
    let mut r = factors.next().expect("split yields one item")?;
    for s in factors {
        r = FiniteCommRing::product(&r, &s?)?;
    }
    Ok(r)
}

fn parse_factor(t: &str) -> Result<FiniteCommRing> {
    let num = |s: &str| -> Result<u64> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("expected a number in {t:?}")));
        }
        s.parse().map_err(|_| Error::Parse(format!("number out of range in {t:?}")))
    };
    if let Some(n) = t.strip_prefix("Z/") {
        return FiniteCommRing::z_mod(num(n)?);
    }
    let (head, rest) = t
        .split_once('(')
        .ok_or_else(|| Error::Parse(format!("unknown ring {t:?}")))?;
    let args = rest
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("missing ')' in {t:?}")))?
        .split(',')
        .map(num)
        .collect::<Result<Vec<u64>>>()?;
    let arity = |k: usize| -> Result<()> {
        if args.len() != k {
            return Err(Error::Parse(format!("{head} takes {k} arguments")));
        }
        Ok(())
    };
    match head {
        "GF" => {
            arity(1)?;
            FiniteCommRing::gf_p(args[0])
        }
        "SqZero" => {
            arity(2)?;
            FiniteCommRing::square_zero_extension(args[0], args[1] as usize)
        }
        "Cusp" => {
            arity(2)?;
            FiniteCommRing::cusp_truncation(args[0], args[1] as usize)
        }
        "DualTrunc" => {
            arity(2)?;
            FiniteCommRing::dual_truncated(args[0], args[1] as u32)
        }
        "Mon" => {
            arity(3)?;
            FiniteCommRing::monomial_ring(args[0], args[1] as usize, args[2] as usize)
        }
        _ => Err(Error::Parse(format!("unknown ring {t:?}"))),
    }
}

fn parse_json(text: &str) -> Result<FiniteCommRing> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let bad = || Error::Parse("expected {\"additive_orders\", \"one\", \"basis_products\"}".into());
    let ints = |v: &serde_json::Value| -> Result<Vec<u64>> {
        v.as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().ok_or_else(bad))
            .collect()
    };
    let orders = ints(v.get("additive_orders").ok_or_else(bad)?)?;
    let one = ints(v.get("one").ok_or_else(bad)?)?;
    let products = v
        .get("basis_products")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(bad)?
        .iter()
        .map(|row| row.as_array().ok_or_else(bad)?.iter().map(ints).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    FiniteCommRing::from_structure_constants(format!("Ring{text}"), orders, one, products)
}

/// Comma-separated coordinates over the additive basis.
pub fn parse_ring_element(r: &FiniteCommRing, text: &str) -> Result<usize> {
    let coords = text
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>().map_err(|_| Error::Parse(format!("bad coordinate {t:?}")))
        })
        .collect::<Result<Vec<i64>>>()?;
    if coords.len() != r.rank() {
        return Err(Error::InvalidInput(format!(
            "element has {} coordinates, {} needs {}",
            coords.len(),
            r.name(),
            r.rank()
        )));
    }
    let reduced: Vec<u64> = coords
        .iter()
        .zip(r.additive_orders())
        .map(|(&c, &o)| c.rem_euclid(o as i64) as u64)
        .collect();
    Ok(r.id_of(&reduced))
}
