use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::{Field, GradedFreeModule};

/// Castelnuovo–Mumford style regularity value: an integer, or minus infinity for
/// the zero module (and for sheaves with no higher cohomology in any twist).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regularity {
    MinusInfinity,
    Finite(i64),
}

impl Regularity {
    pub fn finite(self) -> Option<i64> {
        match self {
            Regularity::Finite(v) => Some(v),
            Regularity::MinusInfinity => None,
        }
    }
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regularity::Finite(v) => write!(f, "{v}"),
            Regularity::MinusInfinity => write!(f, "-infinity"),
        }
    }
}

impl Serialize for Regularity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Regularity::Finite(v) => s.serialize_i64(*v),
            Regularity::MinusInfinity => s.serialize_str("-infinity"),
        }
    }
}

/// Graded Betti numbers `β_{i,j}`: the number of generators of degree `j` in `F_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_modules<K: Field>(modules: &[GradedFreeModule<K>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, f) in modules.iter().enumerate() {
            for &a in f.degrees() {
                *entries.entry((i, a)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max (j - i)` over nonzero entries.
    pub fn regularity(&self) -> Regularity {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .map_or(Regularity::MinusInfinity, Regularity::Finite)
    }
}

/// Regularity of the module read off a minimal resolution's Betti table.
pub fn module_regularity(b: &BettiTable) -> Regularity {
    b.regularity()
}

impl fmt::Display for BettiTable {
    /// Macaulay2 layout: columns are homological degrees, rows are `j - i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero module)");
        }
        let max_i = self.entries.keys().map(|k| k.0).max().unwrap();
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
            r.sort();
            r.dedup();
            r
        };
        let (lo, hi) = (rows[0], *rows.last().unwrap());
        write!(f, "{:>6}", "")?;
        for i in 0..=max_i {
            write!(f, "{i:>5}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..=max_i {
            let t: usize = self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum();
            write!(f, "{t:>5}")?;
        }
        writeln!(f)?;
        for row in lo..=hi {
            write!(f, "{:>6}", format!("{row}:"))?;
            for i in 0..=max_i {
                match self.get(i, row + i as i64) {
                    0 => write!(f, "{:>5}", ".")?,
                    v => write!(f, "{v:>5}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
