use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Non-negative reduced fraction. All proportions are carried exactly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(Ratio<u64>);

impl ExactRatio {
    /// Returns `None` when `den` is zero.
    pub fn new(num: u64, den: u64) -> Option<Self> {
        (den != 0).then(|| Self(Ratio::new(num, den)))
    }

    pub fn from_integer(n: u64) -> Self {
        Self(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_one(&self) -> bool {
        self.numer() == 1 && self.denom() == 1
    }

    /// Strictly between `lo` and `hi`.
    pub fn strictly_between(&self, lo: ExactRatio, hi: ExactRatio) -> bool {
        lo < *self && *self < hi
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRatio {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: u64 = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: u64 = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        ExactRatio::new(n, d).ok_or_else(|| format!("zero denominator in {s:?}"))
    }
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRatio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_orders() {
        let r = ExactRatio::new(40, 48).unwrap();
        assert_eq!(r.to_string(), "5/6");
        assert!(ExactRatio::new(5, 6).unwrap() < ExactRatio::one());
        assert!(ExactRatio::new(0, 0).is_none());
        assert_eq!("10/12".parse::<ExactRatio>().unwrap(), r);
        assert_eq!("1".parse::<ExactRatio>().unwrap(), ExactRatio::one());
    }

    #[test]
    fn serializes_as_fraction_string() {
        let r = ExactRatio::new(1, 4).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"1/4\"");
        let back: ExactRatio = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
