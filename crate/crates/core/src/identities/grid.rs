//! Parameter grids such as `N<=15,r<=2,a<=3,b<=3` or `m<=6,x=1/2|1|3|7/3`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{format_rat, parse_rat, Rat};

/// Maximum number of cases a single identity may expand to.
pub const GUARD_CASES: usize = 50_000;

#[derive(Clone, Debug, PartialEq)]
pub enum GridSpec {
    /// `name<=hi`; the lower end is the parameter's own minimum.
    UpTo(i64),
    /// `lo<=name<=hi` or `name=lo..hi`.
    Range(i64, i64),
    /// `name=v1|v2|…`.
    List(Vec<Rat>),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Grid {
    entries: Vec<(String, GridSpec)>,
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| Error::Parse(format!("expected an integer, got `{s}`")))
}

fn parse_item(item: &str) -> Result<(String, GridSpec)> {
    let pieces: Vec<&str> = item.split("<=").map(str::trim).collect();
    match pieces.as_slice() {
        [name, hi] => return Ok((name.to_string(), GridSpec::UpTo(parse_int(hi)?))),
        [lo, name, hi] => return Ok((name.to_string(), GridSpec::Range(parse_int(lo)?, parse_int(hi)?))),
        [_] => {}
        _ => return Err(Error::Parse(format!("bad grid entry `{item}`"))),
    }
    let (name, value) = item
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("bad grid entry `{item}`")))?;
    let (name, value) = (name.trim(), value.trim());
    if name.is_empty() {
        return Err(Error::Parse(format!("bad grid entry `{item}`")));
    }
    let spec = if let Some((lo, hi)) = value.split_once("..") {
        GridSpec::Range(parse_int(lo)?, parse_int(hi)?)
    } else {
        GridSpec::List(value.split('|').map(parse_rat).collect::<Result<_>>()?)
    };
    Ok((name.to_string(), spec))
}

impl Grid {
    pub fn parse(s: &str) -> Result<Grid> {
        let mut g = Grid::default();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (name, spec) = parse_item(item)?;
            if g.entries.iter().any(|(n, _)| *n == name) {
                return Err(Error::Parse(format!("grid names `{name}` twice")));
            }
            g.entries.push((name, spec));
        }
        Ok(g)
    }

    /// The default grid with entries replaced by those of `overrides`, which may only
    /// name parameters the default grid has.
    pub fn with_defaults(default: &str, overrides: &str) -> Result<Grid> {
        let mut g = Grid::parse(default)?;
        for (name, spec) in Grid::parse(overrides)?.entries {
            match g.entries.iter_mut().find(|(n, _)| *n == name) {
                Some(slot) => slot.1 = spec,
                None => {
                    let known: Vec<&str> = g.entries.iter().map(|(n, _)| n.as_str()).collect();
                    return Err(Error::Parse(format!(
                        "unknown grid parameter `{name}` (expected one of: {})",
                        known.join(", ")
                    )));
                }
            }
        }
        Ok(g)
    }

    fn spec(&self, name: &str) -> Result<&GridSpec> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| Error::Parse(format!("grid lacks `{name}`")))
    }

    /// Integer values of `name`, clipped below at `min`.
    pub fn ints(&self, name: &str, min: i64) -> Result<Vec<i64>> {
        let (lo, hi) = match self.spec(name)? {
            GridSpec::UpTo(hi) => (min, *hi),
            GridSpec::Range(lo, hi) => ((*lo).max(min), *hi),
            GridSpec::List(vals) => {
                let mut out = Vec::new();
                for v in vals {
                    if !v.is_integer() {
                        return Err(Error::Parse(format!("`{name}` must be an integer, got {}", format_rat(v))));
                    }
                    let i: i64 = v
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Parse(format!("`{name}` out of range")))?;
                    if i < min {
                        return Err(Error::Precondition(format!("`{name}` must be at least {min}, got {i}")));
                    }
                    out.push(i);
                }
                return Ok(out);
            }
        };
        if hi.saturating_sub(lo) >= GUARD_CASES as i64 {
            return Err(Error::Guard(format!("range of `{name}` exceeds {GUARD_CASES} values")));
        }
        Ok((lo..=hi).collect())
    }

    pub fn rats(&self, name: &str) -> Result<Vec<Rat>> {
        match self.spec(name)? {
            GridSpec::List(v) => Ok(v.clone()),
            _ => Ok(self.ints(name, 0)?.into_iter().map(|i| Rat::from_integer(i.into())).collect()),
        }
    }
}

/// Fails when the product of the given sizes exceeds the guard.
pub fn guard(sizes: &[usize]) -> Result<()> {
    let mut total: usize = 1;
    for &s in sizes {
        total = total.saturating_mul(s);
    }
    if total > GUARD_CASES {
        return Err(Error::Guard(format!("grid has {total} cases, more than {GUARD_CASES}")));
    }
    Ok(())
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, spec)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match spec {
                GridSpec::UpTo(hi) => write!(f, "{name}<={hi}")?,
                GridSpec::Range(lo, hi) => write!(f, "{name}={lo}..{hi}")?,
                GridSpec::List(v) => {
                    let vals: Vec<String> = v.iter().map(format_rat).collect();
                    write!(f, "{name}={}", vals.join("|"))?
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn parse_and_render() {
        let g = Grid::parse("N<=15, 2<=r<=3, x=1/2|1|7/3, k=0..2").unwrap();
        assert_eq!(g.to_string(), "N<=15,r=2..3,x=1/2|1|7/3,k=0..2");
        assert_eq!(g.ints("N", 1).unwrap().len(), 15);
        assert_eq!(g.ints("r", 0).unwrap(), vec![2, 3]);
        assert_eq!(g.ints("k", 1).unwrap(), vec![1, 2]);
        assert_eq!(g.rats("x").unwrap(), vec![rat(1, 2), rat(1, 1), rat(7, 3)]);
        assert!(g.ints("x", 0).is_err());
        assert!(g.ints("missing", 0).is_err());
        assert!(Grid::parse("N<=a").is_err());
        assert!(Grid::parse("N").is_err());
        assert!(Grid::parse("N<=1,N<=2").is_err());
        assert_eq!(Grid::parse("").unwrap(), Grid::default());
    }

    #[test]
    fn overrides_and_guards() {
        let g = Grid::with_defaults("N<=15,r<=2", "r=1").unwrap();
        assert_eq!(g.to_string(), "N<=15,r=1");
        assert!(Grid::with_defaults("N<=15", "z<=2").is_err());
        let big = Grid::parse("N<=1000000").unwrap();
        assert!(matches!(big.ints("N", 0), Err(Error::Guard(_))));
        assert!(guard(&[1000, 1000]).is_err());
        assert!(guard(&[100, 100]).is_ok());
    }
}
