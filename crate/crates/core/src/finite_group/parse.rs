use super::{order16, FiniteGroup};
use crate::error::{Error, Result};

/// Parses `C<n>`, `D<n>`, `Dic<n>`, `S<n>`, `A<n>`, `Q8`, `SG16_<id>`,
/// `PQ(<p>,<q>)` and `x`-separated products of these, or a JSON object
/// `{"degree": d, "generators": [[...], ...]}`.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let text: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if text.starts_with('{') {
        return parse_json(&text);
    }
    if text.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let mut factors = text.split('x').map(parse_factor);
    let mut g = factors.next().expect("split yields one item")?;
    for h in factors {
        g = FiniteGroup::direct_product(&g, &h?)?;
    }
    Ok(g)
}

fn parse_factor(t: &str) -> Result<FiniteGroup> {
    let num = |s: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("expected a number in {t:?}")));
        }
        s.parse().map_err(|_| Error::Parse(format!("number out of range in {t:?}")))
    };
    if t == "Q8" {
        return FiniteGroup::dicyclic(2);
    }
    if let Some(id) = t.strip_prefix("SG16_") {
        return order16(num(id)?);
    }
    if let Some(args) = t.strip_prefix("PQ(").and_then(|r| r.strip_suffix(')')) {
        let (p, q) = args
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected PQ(p,q), got {t:?}")))?;
        return FiniteGroup::nonabelian_pq(num(p)?, num(q)?);
    }
    if let Some(n) = t.strip_prefix("Dic") {
        return FiniteGroup::dicyclic(num(n)?);
    }
    let (head, n) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
    match head {
        "C" => FiniteGroup::cyclic(num(n)?),
        "D" => FiniteGroup::dihedral(num(n)?),
        "S" => FiniteGroup::symmetric(num(n)?),
        "A" => FiniteGroup::alternating(num(n)?),
        _ => Err(Error::Parse(format!("unknown group {t:?}"))),
    }
}

fn parse_json(text: &str) -> Result<FiniteGroup> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let bad = || Error::Parse("expected {\"degree\": d, \"generators\": [[...], ...]}".into());
    let degree = v.get("degree").and_then(serde_json::Value::as_u64).ok_or_else(bad)? as usize;
    let generators = v
        .get("generators")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(bad)?
        .iter()
        .map(|g| {
            g.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(bad))
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(degree, &generators)
}
