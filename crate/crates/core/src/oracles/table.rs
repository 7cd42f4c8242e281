use std::fmt;
use std::str::FromStr;

use crate::coloring::Coloring;
use crate::error::{domain, Error, Result};
use crate::profile::Natural;

/// An explicit `r`-coloring of `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableColoring {
    r: u32,
    table: Vec<u32>,
}

impl TableColoring {
    pub fn new(r: u32, table: Vec<u32>) -> Result<Self> {
        if r == 0 {
            return domain("a coloring needs at least one color");
        }
        if let Some(c) = table.iter().find(|&&c| c >= r) {
            return domain(format!("color {c} out of range for r = {r}"));
        }
        Ok(TableColoring { r, table })
    }

    pub fn constant(r: u32, n: usize, color: u32) -> Result<Self> {
        TableColoring::new(r, vec![color; n])
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Size of the colored interval.
    pub fn n(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Color of `i` in `[1, n]`.
    pub fn at(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|j| self.table.get(j)).copied()
    }

    /// Bit-exact text form: `r n` on the first line, the `n` colors on the
    /// second. No trailing newline.
    pub fn to_text(&self) -> String {
        let colors: Vec<String> = self.table.iter().map(u32::to_string).collect();
        format!("{} {}\n{}", self.r, self.n(), colors.join(" "))
    }
}

impl fmt::Display for TableColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for TableColoring {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("table coloring: {msg}"));
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("missing header line"))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        let [r, n] = head.as_slice() else {
            return Err(bad("header must be `r n`"));
        };
        let r: u32 = r.parse().map_err(|_| bad("bad color count"))?;
        let n: usize = n.parse().map_err(|_| bad("bad length"))?;
        let colors: Vec<u32> = lines
            .next()
            .unwrap_or("")
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(&format!("bad color {t:?}"))))
            .collect::<Result<_>>()?;
        if colors.len() != n {
            return Err(bad(&format!("expected {n} colors, found {}", colors.len())));
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(bad("trailing content"));
        }
        TableColoring::new(r, colors).map_err(|e| bad(&e.to_string()))
    }
}

impl Coloring for TableColoring {
    fn colors(&self) -> u32 {
        self.r
    }

    fn color(&self, n: &Natural) -> Result<u32> {
        let outside = || Error::OutsideColoring {
            value: n.to_string(),
            domain: format!("[1, {}]", self.n()),
        };
        let i: usize = n.try_into().map_err(|_| outside())?;
        self.at(i).ok_or_else(outside)
    }

    fn describe(&self) -> String {
        format!("table:{}x{}", self.r, self.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let c = TableColoring::new(2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(c.to_text(), "2 4\n0 1 1 0");
        assert_eq!(c.to_text().parse::<TableColoring>().unwrap(), c);
        assert_eq!("2 4\n0 1 1 0\n".parse::<TableColoring>().unwrap(), c);
        let empty = TableColoring::new(2, vec![]).unwrap();
        assert_eq!(empty.to_text(), "2 0\n");
        assert_eq!(empty.to_text().parse::<TableColoring>().unwrap(), empty);
    }

    #[test]
    fn malformed_text() {
        for bad in ["", "2", "2 3\n0 1", "2 2\n0 2", "x 1\n0", "2 1\n0\n1"] {
            assert!(bad.parse::<TableColoring>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn domain_is_enforced() {
        let c = TableColoring::new(2, vec![0, 1]).unwrap();
        assert_eq!(c.color(&Natural::from(2u8)).unwrap(), 1);
        assert!(c.color(&Natural::from(3u8)).is_err());
        assert!(c.color(&Natural::from(0u8)).is_err());
        assert!(TableColoring::new(0, vec![]).is_err());
    }
}
