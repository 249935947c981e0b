//! Regression suite over the bundled table: named-knot values, the
//! construction, oracle agreement and the family certificate.

use std::time::{Duration, Instant};

use crate::codes::{connected_sum, ColoringCode, GaussCode};
use crate::coloring::{coloring_nullity, count_colorings, determinant, enumerate_colorings, is_p_colorable};
use crate::obstruct::{corollary_family, Outcome};
use crate::symunion::{
    all_colorings_compatible, build_direct, build_symmetric_union, reduced_block_matrix, search_incompatible,
    union_coloring_matrix, MarkedDiagram, Marking, SymUnionDiagram,
};
use crate::table;
use crate::zplinalg::rank_mod_p;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
const LIMIT: u64 = 10_000_000;
/// Enough for every candidate vector of a 12-strand diagram at p = 5.
const ORACLE_LIMIT: u64 = 244_140_625;

type Check = Result<String, String>;

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn named(name: &str) -> Result<ColoringCode, String> {
    table::lookup(name)
        .map(|r| r.code().to_coloring_code().0)
        .ok_or_else(|| format!("{name} is not in the bundled table"))
}

fn expect<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what} = {got}, expected {want}"))
    }
}

fn nullity(m: &crate::zplinalg::IntMatrix, p: u64) -> usize {
    m.cols() - rank_mod_p(m, p).expect("prime")
}

fn bundled_codes() -> Vec<(String, ColoringCode)> {
    table::records().iter().map(|r| (r.name.clone(), r.code().to_coloring_code().0)).collect()
}

fn c1_named_values() -> Check {
    let mut worst = Duration::ZERO;
    let mut timed = |f: &mut dyn FnMut() -> Result<(), String>| {
        let t = Instant::now();
        let r = f();
        worst = worst.max(t.elapsed());
        r
    };
    timed(&mut || expect("col_3(3_1)", count_colorings(&named("3_1")?, 3).unwrap(), big(9)))?;
    timed(&mut || expect("col_3(6_1)", count_colorings(&named("6_1")?, 3).unwrap(), big(9)))?;
    timed(&mut || expect("col_3(9_46)", count_colorings(&named("9_46")?, 3).unwrap(), big(27)))?;
    timed(&mut || expect("det(8_10)", determinant(&named("8_10")?), big(27)))?;
    timed(&mut || expect("col_3(8_10)", count_colorings(&named("8_10")?, 3).unwrap(), big(9)))?;
    timed(&mut || expect("det(12n_642)", determinant(&named("12n_642")?), big(27)))?;
    timed(&mut || expect("col_3(12n_642)", count_colorings(&named("12n_642")?, 3).unwrap(), big(81)))?;
    if worst >= Duration::from_secs(1) {
        return Err(format!("slowest check took {worst:?}"));
    }
    Ok("3_1, 6_1, 9_46, 8_10, 12n_642 values match".into())
}

fn c2_construction() -> Check {
    for (text, det, col) in [("O1U2O3U1O2U3; inf@0; twist(1)@2", 9, 9), ("O1U2O3U1O2U3; inf@0; twist(3)@2", 9, 27)] {
        let m: MarkedDiagram = text.parse().map_err(|e| format!("{e}"))?;
        let u = build_symmetric_union(&m).map_err(|e| format!("{e}"))?;
        expect(&format!("det [{text}]"), determinant(&u.code), big(det))?;
        expect(&format!("col_3 [{text}]"), count_colorings(&u.code, 3).unwrap(), big(col))?;
    }
    Ok("twist(1): det 9 col_3 9; twist(3): det 9 col_3 27".into())
}

fn c3_block_matrix() -> Check {
    let bundle = table::marked_diagrams();
    let multi = bundle.iter().any(|(_, m)| m.twists().len() >= 2);
    let mixed = bundle.iter().any(|(_, m)| m.twists().iter().any(|&n| n > 0) && m.twists().iter().any(|&n| n < 0));
    if bundle.len() < 10 || !multi || !mixed {
        return Err("marked bundle lacks coverage".into());
    }
    for (name, m) in &bundle {
        let u = build_symmetric_union(m).map_err(|e| format!("{name}: {e}"))?;
        let m1 = union_coloring_matrix(&u);
        let m5 = reduced_block_matrix(m);
        for p in PRIMES {
            expect(&format!("{name} p={p}: nullity(M5) vs nullity(M1)"), nullity(&m5, p), nullity(&m1, p))?;
        }
    }
    Ok(format!("{} marked diagrams x {} primes", bundle.len(), PRIMES.len()))
}

fn random_marked(rng: &mut StdRng, base: &GaussCode) -> MarkedDiagram {
    let n = base.len();
    let mut gaps: Vec<usize> = (0..n).collect();
    gaps.shuffle(rng);
    let twists = rng.gen_range(0..=3.min(n - 1));
    let mut marks = vec![Marking::infinity(gaps[0])];
    for &g in &gaps[1..=twists] {
        let mag = rng.gen_range(1..=3);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        marks.push(Marking::twist(sign * mag, g));
    }
    MarkedDiagram::new(base.clone(), marks).expect("distinct gaps, one inf")
}

fn c4_bounds() -> Check {
    let mut rng = StdRng::seed_from_u64(20);
    let bases: Vec<GaussCode> = table::records().iter().map(|r| r.code()).collect();
    let cases = 120;
    for _ in 0..cases {
        let base = bases.choose(&mut rng).expect("bundle is not empty");
        let m = random_marked(&mut rng, base);
        let (j, _) = base.to_coloring_code();
        let u = build_symmetric_union(&m).map_err(|e| format!("[{m}]: {e}"))?;
        let dj = determinant(&j);
        expect(&format!("det [{m}]"), determinant(&u.code), &dj * &dj)?;
        for p in PRIMES {
            let cj = count_colorings(&j, p).unwrap();
            let ck = count_colorings(&u.code, p).unwrap();
            if !(cj <= ck && &ck * p <= &cj * &cj) {
                return Err(format!("[{m}] p={p}: col_p(J)={cj}, col_p(K)={ck}"));
            }
        }
    }
    Ok(format!("{cases} random marked diagrams, primes {PRIMES:?}"))
}

fn c5_brute_force() -> Check {
    let mut checked = 0;
    for (name, code) in bundled_codes() {
        if code.strand_count() > 12 {
            continue;
        }
        for p in [2, 3, 5] {
            let listed = enumerate_colorings(&code, p, ORACLE_LIMIT).map_err(|e| format!("{name}: {e}"))?.len();
            let counted = count_colorings(&code, p).unwrap();
            let power = big(p).pow(coloring_nullity(&code, p).unwrap() as u32);
            expect(&format!("{name} p={p}: enumerated"), big(listed as u64), counted.clone())?;
            expect(&format!("{name} p={p}: p^nullity"), power, counted)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (diagram, prime) pairs"))
}

fn c6_connected_sum() -> Check {
    let codes: Vec<(String, GaussCode)> = table::records().iter().map(|r| (r.name.clone(), r.code())).collect();
    let mut pairs = 0;
    for (n1, a) in &codes {
        for (n2, b) in &codes {
            let s = connected_sum(a, b, 0, 0).map_err(|e| e.to_string())?.to_coloring_code().0;
            let (ca, cb) = (a.to_coloring_code().0, b.to_coloring_code().0);
            for p in [3, 5, 7] {
                let lhs = count_colorings(&s, p).unwrap() * p;
                let rhs = count_colorings(&ca, p).unwrap() * count_colorings(&cb, p).unwrap();
                expect(&format!("{n1} # {n2}, p={p}"), lhs, rhs)?;
            }
            pairs += 1;
        }
    }
    // a summand that is not 3-colorable leaves col_3 unchanged
    let t = table::lookup("3_1").unwrap().code();
    let f = table::lookup("4_1").unwrap().code();
    let s = connected_sum(&t, &f, 2, 5).map_err(|e| e.to_string())?.to_coloring_code().0;
    expect("col_3(3_1 # 4_1)", count_colorings(&s, 3).unwrap(), count_colorings(&t.to_coloring_code().0, 3).unwrap())?;
    Ok(format!("{pairs} ordered pairs at p in [3, 5, 7], plus 3_1 # 4_1"))
}

fn c7_det_divisibility() -> Check {
    let mut codes = bundled_codes();
    for (name, m) in table::marked_diagrams() {
        let u = build_symmetric_union(&m).map_err(|e| format!("{name}: {e}"))?;
        codes.push((format!("union {name}"), u.code));
    }
    for (name, code) in &codes {
        let d = determinant(code);
        for p in PRIMES {
            let colorable = is_p_colorable(code, p).map_err(|e| format!("{name}: {e}"))?;
            expect(&format!("{name} p={p}: colorable vs p | det"), colorable, (&d % p) == big(0))?;
        }
    }
    Ok(format!("{} diagrams x {} primes", codes.len(), PRIMES.len()))
}

fn c8_family() -> Check {
    let cert = corollary_family(&[3, 5]).map_err(|e| e.to_string())?;
    expect("members", cert.members.len(), 4)?;
    expect("common det", cert.common_det.clone(), big(50625))?;
    for mb in &cert.members {
        expect(&format!("det {:?}", mb.bits), mb.det.clone(), big(50625))?;
        let c3 = &mb.cols[&3];
        let c5 = &mb.cols[&5];
        let want3 = if mb.bits[0] == 0 { 9 } else { 243 };
        let want5 = if mb.bits[1] == 0 { 25 } else { 3125 };
        expect(&format!("col_3 {:?}", mb.bits), c3.clone(), big(want3))?;
        expect(&format!("col_5 {:?}", mb.bits), c5.clone(), big(want5))?;
    }
    expect("pairs", cert.pairwise_verdicts.len(), 6)?;
    for ((a, b), v) in &cert.pairwise_verdicts {
        if !matches!(v.outcome, Outcome::IntervalDisjoint { .. }) {
            return Err(format!("pair ({a}, {b}) got {:?}", v.outcome));
        }
    }
    Ok("4 members, det 50625, 6 disjoint pairs".into())
}

fn compatible(u: &SymUnionDiagram) -> Result<bool, String> {
    Ok(all_colorings_compatible(u, 3, LIMIT).map_err(|e| e.to_string())?.0)
}

fn c9_compatibility() -> Check {
    let trefoil = table::lookup("3_1").unwrap().code();
    let hits = search_incompatible(&trefoil, 3, &[1, -1], LIMIT).map_err(|e| e.to_string())?;
    let Some(hit) = hits.first() else {
        return Err("no incompatible presentation found".into());
    };
    let fig: MarkedDiagram = "O1U2O3U1O2U3; inf@0; twist(1)@2".parse().unwrap();
    let u = build_symmetric_union(&fig).map_err(|e| e.to_string())?;
    if !compatible(&u)? {
        return Err("6_1 presentation has an incompatible 3-coloring".into());
    }
    Ok(format!(
        "{} hits, first [{}] (det {}, col_3 {}); 6_1 presentation compatible",
        hits.len(),
        hit.diagram,
        hit.determinant,
        hit.col
    ))
}

fn c10_normalization() -> Check {
    let mut checked = 0;
    for (name, m) in table::marked_diagrams() {
        if m.twists().iter().all(|n| n.abs() <= 1) {
            continue;
        }
        let a = build_symmetric_union(&m).map_err(|e| format!("{name}: {e}"))?;
        let b = build_direct(&m).map_err(|e| format!("{name}: {e}"))?;
        expect(&format!("{name}: det"), determinant(&a.code), determinant(&b.code))?;
        for p in PRIMES {
            expect(
                &format!("{name} p={p}: col"),
                count_colorings(&a.code, p).unwrap(),
                count_colorings(&b.code, p).unwrap(),
            )?;
        }
        checked += 1;
    }
    if checked == 0 {
        return Err("no bundled diagram has |n| > 1".into());
    }
    Ok(format!("{checked} diagrams with |n| > 1"))
}

/// One named check with a wall-clock budget.
#[derive(Clone, Copy)]
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub budget: Duration,
    check: fn() -> Check,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Criterion {
    /// Runs the check. A panic or a budget overrun counts as a failure.
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(self.check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(msg) if elapsed > self.budget => (false, format!("{msg}; took {elapsed:.2?}, budget {:?}", self.budget)),
            Ok(msg) => (true, msg),
            Err(msg) => (false, msg),
        };
        CriterionResult { id: self.id, title: self.title, passed, detail, elapsed }
    }
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {mark}  {} ({:.2?}): {}", self.id, self.title, self.elapsed, self.detail)
    }
}

pub fn criteria() -> Vec<Criterion> {
    type Entry = (&'static str, fn() -> Check, u64);
    let table: [Entry; 10] = [
        ("named-knot values", c1_named_values, 7),
        ("construction regression", c2_construction, 1),
        ("block-matrix nullity oracle", c3_block_matrix, 10),
        ("bound property suite", c4_bounds, 60),
        ("brute-force oracle equivalence", c5_brute_force, 30),
        ("connected-sum law", c6_connected_sum, 10),
        ("determinant divisibility consistency", c7_det_divisibility, 10),
        ("two-prime family certificate", c8_family, 120),
        ("compatibility search", c9_compatibility, 60),
        ("normalization invariance", c10_normalization, 10),
    ];
    table
        .into_iter()
        .enumerate()
        .map(|(i, (title, check, secs))| Criterion { id: i + 1, title, budget: Duration::from_secs(secs), check })
        .collect()
}
