//! The level-size sequence `F_0, F_1, ..., F_N` that designates a cobweb poset.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Finite prefix of a designating sequence.
///
/// `F_0` is either 1 (a single root) or 0 (empty root level, only reachable
/// through `custom:`); every later level is non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSequence {
    values: Vec<u64>,
    name: Option<String>,
}

/// Parsed form of the `--seq` grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    Fibonacci,
    Naturals,
    Constant(u64),
    Custom(Vec<u64>),
}

impl FromStr for SequenceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedSpec(s.to_string());
        let s = s.trim();
        match s {
            "fibonacci" => return Ok(SequenceSpec::Fibonacci),
            "naturals" => return Ok(SequenceSpec::Naturals),
            _ => {}
        }
        if let Some(c) = s.strip_prefix("constant:") {
            let c: i128 = c.trim().parse().map_err(|_| malformed())?;
            if c < 1 {
                return Err(Error::InvalidSequence(format!(
                    "constant level size must be at least 1, got {c}"
                )));
            }
            let c = u64::try_from(c).map_err(|_| malformed())?;
            return Ok(SequenceSpec::Constant(c));
        }
        if let Some(list) = s.strip_prefix("custom:") {
            let mut values = Vec::new();
            for item in list.split(',') {
                let v: i128 = item.trim().parse().map_err(|_| malformed())?;
                if v < 0 {
                    return Err(Error::InvalidSequence(format!("negative entry {v}")));
                }
                values.push(u64::try_from(v).map_err(|_| malformed())?);
            }
            return Ok(SequenceSpec::Custom(values));
        }
        Err(malformed())
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Fibonacci => f.write_str("fibonacci"),
            SequenceSpec::Naturals => f.write_str("naturals"),
            SequenceSpec::Constant(c) => write!(f, "constant:{c}"),
            SequenceSpec::Custom(values) => {
                f.write_str("custom:")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FSequence {
    /// Validates an explicit list of level sizes.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSequence("sequence is empty".into()));
        }
        if values[0] > 1 {
            return Err(Error::InvalidSequence(format!(
                "F_0 must be 0 or 1, got {}",
                values[0]
            )));
        }
        if let Some(n) = values.iter().skip(1).position(|&v| v == 0) {
            return Err(Error::InvalidSequence(format!(
                "zero level size at n={}",
                n + 1
            )));
        }
        Ok(FSequence { values, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Generates `F_0..=F_max_level` from a parsed spec.
    ///
    /// A custom list is truncated to `max_level + 1` entries and must be at
    /// least that long.
    pub fn generate(spec: &SequenceSpec, max_level: usize) -> Result<Self> {
        let len = max_level
            .checked_add(1)
            .ok_or_else(|| Error::InvalidSequence("max level too large".into()))?;
        let values = match spec {
            SequenceSpec::Fibonacci => {
                let mut values = Vec::with_capacity(len);
                values.push(1u64);
                let (mut prev, mut cur) = (1u64, Some(1u64));
                for _ in 1..len {
                    let v = cur.ok_or_else(|| {
                        Error::InvalidSequence("fibonacci level size overflows u64".into())
                    })?;
                    values.push(v);
                    cur = prev.checked_add(v);
                    prev = v;
                }
                values
            }
            SequenceSpec::Naturals => std::iter::once(1)
                .chain((1..len).map(|n| n as u64))
                .collect(),
            SequenceSpec::Constant(c) => std::iter::once(1)
                .chain(std::iter::repeat_n(*c, len - 1))
                .collect(),
            SequenceSpec::Custom(list) => {
                if list.len() < len {
                    return Err(Error::InvalidSequence(format!(
                        "custom list has {} entries, need {}",
                        list.len(),
                        len
                    )));
                }
                list[..len].to_vec()
            }
        };
        Ok(FSequence::new(values)?.with_name(spec.to_string()))
    }

    /// `make_sequence("fibonacci", 4)` and friends.
    pub fn parse(spec: &str, max_level: usize) -> Result<Self> {
        FSequence::generate(&spec.parse()?, max_level)
    }

    pub fn value_at(&self, n: usize) -> Result<u64> {
        self.values.get(n).copied().ok_or(Error::LevelOutOfRange {
            index: n,
            max: self.max_level(),
        })
    }

    /// `F_n`, panicking when out of range. For internal use on validated ranks.
    pub(crate) fn f(&self, n: usize) -> u64 {
        self.values[n]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn max_level(&self) -> usize {
        self.values.len() - 1
    }

    /// Lowest non-empty level: 1 in the `F_0 = 0` case, otherwise 0.
    pub fn min_rank(&self) -> usize {
        if self.values[0] == 0 {
            1
        } else {
            0
        }
    }

    /// Restricts to `F_0..=F_max_level`.
    pub fn truncate(&self, max_level: usize) -> Result<Self> {
        if max_level > self.max_level() {
            return Err(Error::LevelOutOfRange {
                index: max_level,
                max: self.max_level(),
            });
        }
        Ok(FSequence {
            values: self.values[..=max_level].to_vec(),
            name: self.name.clone(),
        })
    }
}
