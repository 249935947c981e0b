//! Bundled named knots, one `name<TAB>gauss<TAB>notes` record per line.

use std::sync::OnceLock;

use crate::codes::{parse_gauss, GaussCode};
use crate::symunion::MarkedDiagram;

const DATA: &str = include_str!("../data/knots.tsv");
const MARKED: &str = include_str!("../data/marked.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub gauss: String,
    pub notes: String,
}

impl KnotRecord {
    pub fn code(&self) -> GaussCode {
        parse_gauss(&self.gauss).expect("bundled codes are checked by tests")
    }
}

fn parse_table(text: &str) -> Vec<KnotRecord> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut f = l.splitn(3, '\t');
            let name = f.next().unwrap_or_default().to_string();
            let gauss = f.next().unwrap_or_default().to_string();
            let notes = f.next().unwrap_or_default().to_string();
            KnotRecord { name, gauss, notes }
        })
        .collect()
}

pub fn records() -> &'static [KnotRecord] {
    static TABLE: OnceLock<Vec<KnotRecord>> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(DATA))
}

/// Bundled marked diagrams as `(name, diagram)`.
pub fn marked_diagrams() -> Vec<(String, MarkedDiagram)> {
    parse_table(MARKED)
        .into_iter()
        .map(|r| {
            let m = r.gauss.parse().unwrap_or_else(|e| panic!("bundled marked diagram {}: {e}", r.name));
            (r.name, m)
        })
        .collect()
}

pub fn lookup(name: &str) -> Option<&'static KnotRecord> {
    records().iter().find(|r| r.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_formed() {
        let recs = records();
        assert!(recs.len() >= 8);
        let mut names: Vec<&str> = recs.iter().map(|r| r.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), recs.len());
        for r in recs {
            assert!(parse_gauss(&r.gauss).is_ok(), "{}", r.name);
            assert!(r.name.contains('_') || r.name.chars().all(|c| c.is_ascii_lowercase()), "{}", r.name);
            assert_eq!(r.code().to_coloring_code().0.component_count(), 1);
        }
    }

    #[test]
    fn marked_bundle() {
        let all = marked_diagrams();
        assert!(all.len() >= 10);
        assert!(all.iter().any(|(_, m)| m.twists().len() >= 2 && m.twists().iter().any(|&n| n < 0)));
    }

    #[test]
    fn parses_fields() {
        let t = parse_table("# header\na_1\tO1U1\tsome note\n\nb_2\tO1U1\n");
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].notes, "some note");
        assert_eq!(t[1].notes, "");
        assert!(lookup("3_1").is_some());
        assert!(lookup("3_2").is_none());
    }
}
