//! Partitions of an enumerated candidate space into independent shards.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Shard `index` of `count`: candidate `i` belongs to it when `i % count == index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shard {
    index: u64,
    count: u64,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: u64, count: u64) -> Result<Self> {
        if count == 0 || index >= count {
            return Err(Error::Precondition(format!(
                "invalid shard {index}/{count}"
            )));
        }
        Ok(Shard { index, count })
    }

    pub fn index(self) -> u64 {
        self.index
    }

    pub fn count(self) -> u64 {
        self.count
    }

    pub fn contains(self, i: u128) -> bool {
        i % self.count as u128 == self.index as u128
    }

    /// Splits this shard into `parts` shards, returning part `k`.
    pub fn refine(self, k: u64, parts: u64) -> Result<Shard> {
        if k >= parts {
            return Err(Error::Precondition(format!("part {k} of {parts}")));
        }
        Shard::new(self.index + self.count * k, self.count * parts)
    }

    /// The `count` shards covering everything.
    pub fn all(count: u64) -> Result<Vec<Shard>> {
        (0..count).map(|i| Shard::new(i, count)).collect()
    }
}

impl Default for Shard {
    fn default() -> Self {
        Shard::WHOLE
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

impl FromStr for Shard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("shard must look like i/n, got {s:?}"));
        let (i, n) = s.split_once('/').ok_or_else(bad)?;
        let i = i.trim().parse().map_err(|_| bad())?;
        let n = n.trim().parse().map_err(|_| bad())?;
        Shard::new(i, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_cover() {
        let s: Shard = "1/3".parse().unwrap();
        assert_eq!(s.to_string(), "1/3");
        assert!("3/3".parse::<Shard>().is_err());
        assert!("x".parse::<Shard>().is_err());
        let shards = Shard::all(3).unwrap();
        for i in 0..20u128 {
            assert_eq!(shards.iter().filter(|s| s.contains(i)).count(), 1);
            let parts: Vec<Shard> = (0..2).map(|k| s.refine(k, 2).unwrap()).collect();
            assert_eq!(
                parts.iter().filter(|p| p.contains(i)).count(),
                usize::from(s.contains(i))
            );
        }
    }
}
