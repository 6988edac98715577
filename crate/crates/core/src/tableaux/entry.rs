use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TableauError;

/// A tableau letter. Code `2i` is the unprimed letter `i`, code `2i - 1` is `i'`.
///
/// Ordering by code gives `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Entry(pub u32);

impl Entry {
    pub fn unprimed(i: u32) -> Entry {
        Entry(2 * i)
    }

    pub fn primed(i: u32) -> Entry {
        Entry(2 * i - 1)
    }

    pub fn code(self) -> u32 {
        self.0
    }

    /// The variable index `⌈a⌉` this entry contributes to the weight.
    pub fn letter(self) -> u32 {
        self.0.div_ceil(2)
    }

    pub fn is_primed(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn toggled(self) -> Entry {
        if self.is_primed() {
            Entry(self.0 + 1)
        } else {
            Entry(self.0 - 1)
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.letter())
        } else {
            write!(f, "{}", self.letter())
        }
    }
}

impl FromStr for Entry {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (digits, primed) = match t.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (t, false),
        };
        let i: u32 = digits
            .parse()
            .ok()
            .filter(|&i| i > 0)
            .ok_or_else(|| TableauError::InvalidEntry(s.to_string()))?;
        Ok(if primed { Entry::primed(i) } else { Entry::unprimed(i) })
    }
}

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_and_order() {
        assert!(Entry::primed(1) < Entry::unprimed(1));
        assert!(Entry::unprimed(1) < Entry::primed(2));
        assert_eq!(Entry::primed(3).letter(), 3);
        assert_eq!(Entry::unprimed(3).letter(), 3);
        assert_eq!(Entry::primed(2).to_string(), "2'");
        assert_eq!("2'".parse::<Entry>().unwrap(), Entry::primed(2));
        assert_eq!("5".parse::<Entry>().unwrap(), Entry::unprimed(5));
        assert!("0".parse::<Entry>().is_err());
        assert_eq!(Entry::primed(4).toggled(), Entry::unprimed(4));
    }
}
