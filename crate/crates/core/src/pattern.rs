//! Pattern families describing which sum lengths must share a color.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// A family of length sets, instantiated by [`PatternParams`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LengthPattern {
    /// `{a, b, a+b}`
    Schur,
    /// `{a, a+b, ..., a+(len-1)b}`
    Vdw { len: usize },
    /// `{a, a+b, ..., a+(len-1)b} ∪ {s·b}`
    Brauer { len: usize, s: usize },
    /// Non-empty subset sums of `{i_1 < ... < i_len}`.
    Folkman { len: usize },
    /// A fixed non-empty set of lengths.
    Explicit(BTreeSet<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PatternParams {
    Pair { a: usize, b: usize },
    Indices { indices: Vec<usize> },
    None,
}

impl LengthPattern {
    pub fn validate(&self) -> Result<()> {
        match self {
            LengthPattern::Schur => Ok(()),
            LengthPattern::Vdw { len } | LengthPattern::Folkman { len } if *len == 0 => {
                domain("pattern length must be at least 1")
            }
            LengthPattern::Brauer { len, s } if *len == 0 || *s == 0 => {
                domain("brauer length and multiplier must be at least 1")
            }
            LengthPattern::Explicit(set) if set.is_empty() || set.contains(&0) => {
                domain("explicit length set must be non-empty and positive")
            }
            _ => Ok(()),
        }
    }

    fn uses_pair(&self) -> bool {
        matches!(
            self,
            LengthPattern::Schur | LengthPattern::Vdw { .. } | LengthPattern::Brauer { .. }
        )
    }

    /// Admissible parameters whose instance lies in `[1, limit]`, in
    /// lexicographic order: `(a, b)` for pair families, the sorted index
    /// tuple for Folkman.
    pub fn params_within(&self, limit: usize, require_distinct: bool) -> ParamIter {
        let mut out = Vec::new();
        match self {
            LengthPattern::Schur | LengthPattern::Vdw { .. } | LengthPattern::Brauer { .. } => {
                for a in 1..=limit {
                    for b in 1..=limit {
                        if require_distinct && a == b {
                            continue;
                        }
                        let p = PatternParams::Pair { a, b };
                        match self.instance_max(&p) {
                            Some(m) if m <= limit => out.push(p),
                            _ => {}
                        }
                    }
                }
            }
            LengthPattern::Folkman { len } => {
                let mut cur = Vec::with_capacity(*len);
                folkman_tuples(*len, limit, 1, 0, &mut cur, &mut out);
            }
            LengthPattern::Explicit(set) => {
                if set.last().is_some_and(|&m| m <= limit) {
                    out.push(PatternParams::None);
                }
            }
        }
        ParamIter {
            inner: out.into_iter(),
        }
    }

    fn instance_max(&self, params: &PatternParams) -> Option<usize> {
        instantiate_pattern(self, params).ok()?.last().copied()
    }
}

// Folkman index tuples i_1 < ... < i_len with i_1 + ... + i_len <= limit.
fn folkman_tuples(
    len: usize,
    limit: usize,
    from: usize,
    sum: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<PatternParams>,
) {
    if cur.len() == len {
        out.push(PatternParams::Indices {
            indices: cur.clone(),
        });
        return;
    }
    let left = len - cur.len();
    let mut i = from;
    // the remaining left-1 indices are each > i
    while sum + left * i + left * (left - 1) / 2 <= limit {
        cur.push(i);
        folkman_tuples(len, limit, i + 1, sum + i, cur, out);
        cur.pop();
        i += 1;
    }
}

pub struct ParamIter {
    inner: std::vec::IntoIter<PatternParams>,
}

impl Iterator for ParamIter {
    type Item = PatternParams;
    fn next(&mut self) -> Option<PatternParams> {
        self.inner.next()
    }
}

/// The finite set of sum lengths `A` named by a pattern and its parameters.
pub fn instantiate_pattern(
    pattern: &LengthPattern,
    params: &PatternParams,
) -> Result<BTreeSet<usize>> {
    instantiate_pattern_with(pattern, params, false)
}

/// Like [`instantiate_pattern`], optionally rejecting `a = b`.
pub fn instantiate_pattern_with(
    pattern: &LengthPattern,
    params: &PatternParams,
    require_distinct: bool,
) -> Result<BTreeSet<usize>> {
    pattern.validate()?;
    match (pattern, params) {
        (p, PatternParams::Pair { a, b }) if p.uses_pair() => {
            let (a, b) = (*a, *b);
            if a == 0 || b == 0 {
                return domain("a and b must be positive");
            }
            if require_distinct && a == b {
                return domain("a and b must differ");
            }
            let progression = |len: usize| (0..len).map(move |i| a + i * b);
            Ok(match pattern {
                LengthPattern::Schur => [a, b, a + b].into(),
                LengthPattern::Vdw { len } => progression(*len).collect(),
                LengthPattern::Brauer { len, s } => {
                    progression(*len).chain(std::iter::once(s * b)).collect()
                }
                _ => unreachable!(),
            })
        }
        (LengthPattern::Folkman { len }, PatternParams::Indices { indices }) => {
            if indices.len() != *len {
                return domain(format!("folkman:{len} needs {len} indices"));
            }
            if indices.first() == Some(&0) || indices.windows(2).any(|w| w[0] >= w[1]) {
                return domain("folkman indices must be positive and strictly increasing");
            }
            let mut sums = BTreeSet::new();
            for mask in 1u64..(1u64 << indices.len()) {
                sums.insert(
                    indices
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, v)| v)
                        .sum(),
                );
            }
            Ok(sums)
        }
        (LengthPattern::Explicit(set), PatternParams::None) => Ok(set.clone()),
        _ => domain(format!(
            "parameters {params:?} do not match pattern {pattern}"
        )),
    }
}

impl fmt::Display for LengthPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthPattern::Schur => write!(f, "schur"),
            LengthPattern::Vdw { len } => write!(f, "vdw:{len}"),
            LengthPattern::Brauer { len, s } => write!(f, "brauer:{len}:{s}"),
            LengthPattern::Folkman { len } => write!(f, "folkman:{len}"),
            LengthPattern::Explicit(set) => {
                let parts: Vec<String> = set.iter().map(|k| k.to_string()).collect();
                write!(f, "explicit:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for LengthPattern {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed pattern spec {spec:?}"));
        let positive = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(bad()),
            }
        };
        let mut parts = spec.split(':');
        let kind = parts.next().ok_or_else(bad)?;
        let args: Vec<&str> = parts.collect();
        let pattern = match (kind, args.as_slice()) {
            ("schur", []) => LengthPattern::Schur,
            ("vdw", [l]) => LengthPattern::Vdw { len: positive(l)? },
            ("brauer", [l, s]) => LengthPattern::Brauer {
                len: positive(l)?,
                s: positive(s)?,
            },
            ("folkman", [l]) => LengthPattern::Folkman { len: positive(l)? },
            ("explicit", [ks]) => LengthPattern::Explicit(
                ks.split(',')
                    .map(|k| positive(k.trim()))
                    .collect::<Result<_>>()?,
            ),
            _ => return Err(bad()),
        };
        Ok(pattern)
    }
}

impl Serialize for LengthPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LengthPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
