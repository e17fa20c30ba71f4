use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Non-decreasing sequence of non-negative integers indexing an exceptional
/// Hermite family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::PartitionSyntax(format!("{parts:?} is not non-decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Even length with equal consecutive pairs. The empty partition qualifies.
    pub fn is_double(&self) -> bool {
        self.parts.len().is_multiple_of(2) && self.parts.chunks(2).all(|c| c[0] == c[1])
    }

    /// Hermite degrees `λ_i + i - 1` (1-based `i`) entering the Wronskian of η.
    pub fn wronskian_degrees(&self) -> Vec<u64> {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as u64 + i as u64)
            .collect()
    }

    /// Degree of the last Wronskian entry for the exceptional polynomial of
    /// degree `n`, i.e. `n - |λ| + r`, checked against the excluded set.
    pub fn last_degree(&self, n: u64) -> Result<u64> {
        let idx = n as i64 - self.weight() as i64 + self.len() as i64;
        let inadmissible = |index| Error::InadmissibleDegree {
            partition: self.to_string(),
            n: n as i64,
            index,
        };
        if idx < 0 {
            return Err(inadmissible(idx));
        }
        let idx = idx as u64;
        if self.wronskian_degrees().contains(&idx) {
            return Err(inadmissible(idx as i64));
        }
        Ok(idx)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated literal such as `1,1,3,3`; surrounding parentheses and
    /// whitespace are tolerated, and an empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::PartitionSyntax(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cli_literal() {
        let p: Partition = "1,1,3,3".parse().unwrap();
        assert_eq!(p.parts(), &[1, 1, 3, 3]);
        assert_eq!(p.weight(), 8);
        assert_eq!(p.to_string(), "(1,1,3,3)");
        assert_eq!(" (2, 2) ".parse::<Partition>().unwrap().parts(), &[2, 2]);
        assert!("".parse::<Partition>().unwrap().is_empty());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn double_predicate() {
        assert!(Partition::new(vec![1, 1, 3, 3]).unwrap().is_double());
        assert!(Partition::empty().is_double());
        assert!(!Partition::new(vec![1, 2]).unwrap().is_double());
        assert!(!Partition::new(vec![1, 1, 1]).unwrap().is_double());
    }

    #[test]
    fn wronskian_index_set() {
        let p = Partition::new(vec![2, 2, 3, 3]).unwrap();
        assert_eq!(p.wronskian_degrees(), vec![2, 3, 5, 6]);
        assert_eq!(p.last_degree(10).unwrap(), 4);
        // n = 12 gives index 6, which is excluded
        assert!(matches!(
            p.last_degree(12),
            Err(Error::InadmissibleDegree { index: 6, .. })
        ));
        // n - |λ| + r = 0 is accepted
        assert_eq!(p.last_degree(6).unwrap(), 0);
        assert!(p.last_degree(5).is_err());
    }

    #[test]
    fn serde_as_plain_array() {
        let p = Partition::new(vec![1, 1]).unwrap();
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, "[1,1]");
        assert!(serde_json::from_str::<Partition>("[2,1]").is_err());
    }
}
