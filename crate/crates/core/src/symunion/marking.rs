use std::fmt;
use std::str::FromStr;

use super::SymUnionError;
use crate::codes::{FormatRegistry, GaussCode, StrandId};

/// What replaces the trivial tangle inside a marked disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Disk {
    /// The ∞-tangle disk; exactly one per diagram.
    Infinity,
    /// A twist disk with a nonzero number of half twists on the axis.
    Twist(i64),
}

/// A disk placed on the edge at `gap` of the partial diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Marking {
    pub gap: usize,
    pub disk: Disk,
}

impl Marking {
    pub fn infinity(gap: usize) -> Self {
        Marking { gap, disk: Disk::Infinity }
    }

    pub fn twist(n: i64, gap: usize) -> Self {
        Marking { gap, disk: Disk::Twist(n) }
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.disk {
            Disk::Infinity => write!(f, "inf@{}", self.gap),
            Disk::Twist(n) => write!(f, "twist({n})@{}", self.gap),
        }
    }
}

/// A partial-knot diagram with its disk markings, stored sorted by gap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedDiagram {
    base: GaussCode,
    markings: Vec<Marking>,
}

impl MarkedDiagram {
    pub fn new(base: GaussCode, mut markings: Vec<Marking>) -> Result<Self, SymUnionError> {
        let n = base.len();
        markings.sort_by_key(|m| m.gap);
        if let Some(m) = markings.iter().find(|m| m.gap >= n) {
            return Err(SymUnionError::InvalidMarking(format!("gap {} out of range 0..{n}", m.gap)));
        }
        if let Some(w) = markings.windows(2).find(|w| w[0].gap == w[1].gap) {
            return Err(SymUnionError::InvalidMarking(format!("two disks at gap {}", w[0].gap)));
        }
        if markings.iter().any(|m| m.disk == Disk::Twist(0)) {
            return Err(SymUnionError::InvalidMarking("twist(0) is not allowed".into()));
        }
        let infinities = markings.iter().filter(|m| m.disk == Disk::Infinity).count();
        if infinities != 1 {
            return Err(SymUnionError::InvalidMarking(format!("need exactly one inf disk, found {infinities}")));
        }
        Ok(MarkedDiagram { base, markings })
    }

    pub fn base(&self) -> &GaussCode {
        &self.base
    }

    pub fn markings(&self) -> &[Marking] {
        &self.markings
    }

    pub fn infinity(&self) -> Marking {
        *self.markings.iter().find(|m| m.disk == Disk::Infinity).expect("validated")
    }

    /// Twist parameters in gap order.
    pub fn twists(&self) -> Vec<i64> {
        self.markings
            .iter()
            .filter_map(|m| match m.disk {
                Disk::Twist(n) => Some(n),
                Disk::Infinity => None,
            })
            .collect()
    }

    /// All twists are ±1 and no strand carries two disks.
    pub fn is_normalized(&self) -> bool {
        if self.twists().iter().any(|n| n.abs() != 1) {
            return false;
        }
        let (_, table) = self.base.to_coloring_code();
        let mut strands: Vec<StrandId> = self.markings.iter().map(|m| table.strand_of_gap(m.gap)).collect();
        strands.sort();
        strands.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for m in &self.markings {
            write!(f, "; {m}")?;
        }
        Ok(())
    }
}

fn parse_marking(token: &str) -> Result<Marking, SymUnionError> {
    let bad = || SymUnionError::Parse(format!("bad marking `{token}`"));
    let (disk, gap) = token.split_once('@').ok_or_else(bad)?;
    let gap: usize = gap.trim().parse().map_err(|_| bad())?;
    let disk = disk.trim().to_ascii_lowercase();
    if disk == "inf" {
        return Ok(Marking::infinity(gap));
    }
    let n = disk
        .strip_prefix("twist(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.trim().parse::<i64>().ok())
        .ok_or_else(bad)?;
    Ok(Marking::twist(n, gap))
}

impl FromStr for MarkedDiagram {
    type Err = SymUnionError;

    /// `<code>; inf@<gap>; twist(<n>)@<gap>; ...` where the code is Gauss or PD.
    fn from_str(text: &str) -> Result<Self, SymUnionError> {
        let mut parts = text.split(';').map(str::trim).filter(|s| !s.is_empty());
        let code = parts.next().ok_or_else(|| SymUnionError::Parse("empty marked diagram".into()))?;
        let base = FormatRegistry::default().parse_auto(code)?;
        let markings = parts.map(parse_marking).collect::<Result<Vec<_>, _>>()?;
        MarkedDiagram::new(base, markings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m: MarkedDiagram = "O1U2O3U1O2U3; twist(1)@2; inf@0".parse().unwrap();
        assert_eq!(m.to_string(), "O1U2O3U1O2U3; inf@0; twist(1)@2");
        assert_eq!(m.twists(), vec![1]);
        assert_eq!(m.infinity().gap, 0);
        assert_eq!(m.to_string().parse::<MarkedDiagram>().unwrap(), m);
        let pd: MarkedDiagram = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]; INF@1; Twist(-3)@4".parse().unwrap();
        assert_eq!(pd.twists(), vec![-3]);
    }

    #[test]
    fn rejects_bad_markings() {
        for text in [
            "O1U2O3U1O2U3",
            "O1U2O3U1O2U3; inf@0; inf@1",
            "O1U2O3U1O2U3; inf@0; twist(0)@2",
            "O1U2O3U1O2U3; inf@0; twist(1)@0",
            "O1U2O3U1O2U3; inf@6",
            "O1U2O3U1O2U3; inf@x",
            "O1U2O3U1O2U3; loop@1",
        ] {
            assert!(text.parse::<MarkedDiagram>().is_err(), "{text}");
        }
        assert!(matches!("O1U1O2; inf@0".parse::<MarkedDiagram>(), Err(SymUnionError::Code(_))));
    }

    #[test]
    fn normalized_check() {
        let ok: MarkedDiagram = "O1U2O3U1O2U3; inf@0; twist(1)@2".parse().unwrap();
        assert!(ok.is_normalized());
        // gaps 0 and 1 both lie on the strand O1 U2
        let shared: MarkedDiagram = "O1U2O3U1O2U3; inf@0; twist(1)@1".parse().unwrap();
        assert!(!shared.is_normalized());
        let big: MarkedDiagram = "O1U2O3U1O2U3; inf@0; twist(3)@2".parse().unwrap();
        assert!(!big.is_normalized());
    }
}
