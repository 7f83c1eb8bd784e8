//! Text syntax shared by the command line and the browser demo.

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem, Weight};
use crate::type_a::epsilon_weight;
use crate::weyl::{AffineWeylElt, WeylElt};

fn int_list(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {p:?}"))))
        .collect()
}

/// `w:c1,…,cn` (fundamental coordinates) or `eps:i` (type A).
pub fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("w:") {
        let v = int_list(rest)?;
        rs.check_rank(v.len())?;
        Ok(Weight(v))
    } else if let Some(rest) = s.strip_prefix("eps:") {
        let i = rest.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index {rest:?}")))?;
        epsilon_weight(rs, i)
    } else {
        Err(Error::Parse(format!("weight {s:?}: expected w:c1,...,cn or eps:i")))
    }
}

/// Whitespace-separated 1-based simple reflections, `e` or `w0`.
pub fn parse_elt(rs: &RootSystem, s: &str) -> Result<WeylElt> {
    let s = s.trim();
    match s {
        "w0" => return Ok(WeylElt::longest(rs)),
        "" | "e" => return Ok(WeylElt::identity(rs)),
        _ => {}
    }
    let word = s
        .split_whitespace()
        .map(|p| match p.parse::<usize>() {
            Ok(i) if (1..=rs.rank()).contains(&i) => Ok(i - 1),
            Ok(i) => Err(Error::IndexOutOfRange { index: i, max: rs.rank() }),
            Err(_) => Err(Error::Parse(format!("bad reflection index {p:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    WeylElt::from_word(rs, &word)
}

/// Root-lattice coordinates `c1,…,cn`, returned as a weight.
pub fn parse_root_coords(rs: &RootSystem, s: &str) -> Result<Weight> {
    let v = int_list(s)?;
    rs.check_rank(v.len())?;
    Ok(rs.root_to_weight(&Root(v)))
}

/// `WORD | t: c1,…,cn`, or just `WORD`.
pub fn parse_affine(rs: &RootSystem, s: &str) -> Result<AffineWeylElt> {
    match s.split_once('|') {
        None => Ok(AffineWeylElt::finite(rs, parse_elt(rs, s)?)),
        Some((word, t)) => {
            let t = t.trim();
            let coords = t.strip_prefix("t:").ok_or_else(|| Error::Parse(format!("expected 't: …' in {s:?}")))?;
            AffineWeylElt::new(rs, parse_elt(rs, word)?, parse_root_coords(rs, coords)?)
        }
    }
}
