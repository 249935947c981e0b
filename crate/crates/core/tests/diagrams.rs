use knotcolor::codes::{connected_sum, insert_kink, parse_gauss, parse_pd, torus_two_bridge, GaussCode, Handedness};
use knotcolor::coloring::{
    check_coloring, coloring_matrix, coloring_nullity, count_colorings, determinant, enumerate_colorings,
    ColoringVector,
};
use knotcolor::symunion::{
    build_direct, build_symmetric_union, reduced_block_matrix, union_coloring_matrix, MarkedDiagram, Marking,
};
use knotcolor::table;
use knotcolor::zplinalg::{det_integer, rank_mod_p};
use num_bigint::BigUint;
use num_traits::Signed;
use proptest::prelude::*;

/// PD codes and determinants as listed by KnotInfo.
const KNOTINFO: [(&str, &str, u32); 7] = [
    ("3_1", "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]", 3),
    ("4_1", "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]", 5),
    ("5_1", "PD[X[2,8,3,7],X[4,10,5,9],X[6,2,7,1],X[8,4,9,3],X[10,6,1,5]]", 5),
    ("6_1", "PD[X[1,7,2,6],X[3,10,4,11],X[5,3,6,2],X[7,1,8,12],X[9,4,10,5],X[11,9,12,8]]", 9),
    (
        "8_10",
        "PD[X[2,14,3,13],X[4,9,5,10],X[6,11,7,12],X[8,15,9,16],X[10,5,11,6],X[12,2,13,1],X[14,7,15,8],X[16,4,1,3]]",
        27,
    ),
    (
        "9_46",
        "PD[X[2,10,3,9],X[3,14,4,15],X[6,17,7,18],X[8,11,9,12],X[10,2,11,1],X[13,4,14,5],X[15,13,16,12],X[16,7,17,8],X[18,5,1,6]]",
        9,
    ),
    (
        "12n_642",
        "PD[X[1,5,2,4],X[3,14,4,15],X[18,5,19,6],X[16,7,17,8],X[20,9,21,10],X[24,11,1,12],X[22,13,23,14],X[15,2,16,3],X[6,17,7,18],X[10,19,11,20],X[8,21,9,22],X[12,23,13,24]]",
        27,
    ),
];

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn invariants(g: &GaussCode) -> (BigUint, Vec<BigUint>) {
    let (c, _) = g.to_coloring_code();
    (determinant(&c), PRIMES.iter().map(|&p| count_colorings(&c, p).unwrap()).collect())
}

fn base() -> impl Strategy<Value = GaussCode> {
    (0..table::records().len()).prop_map(|i| table::records()[i].code())
}

/// A bundled knot with a few Reidemeister I kinks added.
fn kinked() -> impl Strategy<Value = GaussCode> {
    (base(), prop::collection::vec((any::<u32>(), any::<bool>()), 0..4)).prop_map(|(mut g, kinks)| {
        for (at, pos) in kinks {
            let hand = if pos { Handedness::Positive } else { Handedness::Negative };
            g = insert_kink(&g, at as usize % g.len(), hand).unwrap();
        }
        g
    })
}

fn rotate(g: &GaussCode, by: usize) -> GaussCode {
    let n = g.len();
    GaussCode::new((0..n).map(|i| g.passes()[(i + by) % n]).collect()).unwrap()
}

fn marked() -> impl Strategy<Value = MarkedDiagram> {
    (kinked(), any::<u64>(), prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..3)).prop_map(
        |(g, seed, twists)| {
            let n = g.len();
            let start = seed as usize % n;
            let gaps: Vec<usize> = (0..n).map(|i| (start + i * 7) % n).collect();
            let mut seen = Vec::new();
            for q in gaps {
                if !seen.contains(&q) {
                    seen.push(q);
                }
            }
            let mut marks = vec![Marking::infinity(seen[0])];
            for (t, &q) in twists.iter().zip(seen.iter().skip(1)) {
                marks.push(Marking::twist(*t, q));
            }
            MarkedDiagram::new(g, marks).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kinks_do_not_change_invariants(g in base(), at in any::<u32>(), pos in any::<bool>()) {
        let hand = if pos { Handedness::Positive } else { Handedness::Negative };
        let k = insert_kink(&g, at as usize % g.len(), hand).unwrap();
        prop_assert_eq!(k.crossing_count(), g.crossing_count() + 1);
        prop_assert_eq!(invariants(&k), invariants(&g));
    }

    #[test]
    fn text_round_trip(g in kinked()) {
        let back = parse_gauss(&g.to_string()).unwrap();
        prop_assert_eq!(&back, &g.canonical_numbering());
        prop_assert_eq!(parse_gauss(&back.to_string()).unwrap(), back);
    }

    #[test]
    fn basepoint_does_not_matter(g in kinked(), by in any::<u32>()) {
        let r = rotate(&g, by as usize % g.len());
        prop_assert_eq!(invariants(&r), invariants(&g));
    }

    #[test]
    fn any_minor_gives_the_determinant(g in kinked(), i in any::<u32>(), j in any::<u32>()) {
        let (c, _) = g.to_coloring_code();
        let m = coloring_matrix(&c);
        let n = m.rows();
        prop_assume!(n > 1);
        let d = det_integer(&m.minor(i as usize % n, j as usize % n)).unwrap();
        prop_assert_eq!(d.abs().to_biguint().unwrap(), determinant(&c));
    }

    #[test]
    fn connected_sum_multiplies(a in kinked(), b in kinked(), ga in any::<u32>(), gb in any::<u32>()) {
        let s = connected_sum(&a, &b, ga as usize % a.len(), gb as usize % b.len()).unwrap();
        let (ia, ib, is) = (invariants(&a), invariants(&b), invariants(&s));
        prop_assert_eq!(&is.0, &(&ia.0 * &ib.0));
        for (k, &p) in PRIMES.iter().enumerate() {
            prop_assert_eq!(&is.1[k] * p, &ia.1[k] * &ib.1[k]);
        }
    }

    #[test]
    fn colorings_match_determinant(g in kinked()) {
        let (c, _) = g.to_coloring_code();
        let det = determinant(&c);
        for p in PRIMES {
            let nullity = coloring_nullity(&c, p).unwrap();
            prop_assert!(nullity >= 1);
            prop_assert_eq!(nullity == 1, &det % p != BigUint::from(0u32));
        }
    }

    #[test]
    fn enumerated_colorings_are_valid(g in kinked()) {
        let (c, _) = g.to_coloring_code();
        prop_assume!(c.strand_count() <= 10);
        for p in [3, 5] {
            let all = enumerate_colorings(&c, p, 10_000_000).unwrap();
            for v in &all {
                prop_assert!(check_coloring(&c, v).is_ok());
            }
            for color in 0..p {
                prop_assert!(all.contains(&ColoringVector::constant(p, c.strand_count(), color)));
            }
        }
    }

    #[test]
    fn union_constructions_agree(m in marked()) {
        let a = build_symmetric_union(&m).unwrap();
        let b = build_direct(&m).unwrap();
        let (j, _) = m.base().to_coloring_code();
        let dj = determinant(&j);
        prop_assert_eq!(determinant(&a.code), &dj * &dj);
        prop_assert_eq!(determinant(&b.code), &dj * &dj);
        let m1 = union_coloring_matrix(&a);
        let m5 = reduced_block_matrix(&m);
        for p in [2, 3, 5, 7, 11, 13] {
            let n1 = m1.cols() - rank_mod_p(&m1, p).unwrap();
            let n5 = m5.cols() - rank_mod_p(&m5, p).unwrap();
            prop_assert_eq!(n1, n5, "p = {}", p);
            prop_assert_eq!(coloring_nullity(&b.code, p).unwrap(), n1);
        }
    }
}

#[test]
fn pd_and_gauss_agree_with_knotinfo() {
    for (name, pd, det) in KNOTINFO {
        let from_pd = parse_pd(pd).unwrap();
        let from_table = table::lookup(name).unwrap().code();
        assert_eq!(from_pd.crossing_count(), from_table.crossing_count(), "{name}");
        let (d_pd, cols_pd) = invariants(&from_pd);
        assert_eq!(d_pd, BigUint::from(det), "{name}");
        assert_eq!((d_pd, cols_pd), invariants(&from_table), "{name}");
    }
}

#[test]
fn table_is_well_formed() {
    let recs = table::records();
    for (i, r) in recs.iter().enumerate() {
        assert!(recs[..i].iter().all(|o| o.name != r.name), "duplicate {}", r.name);
        let (c, _) = r.code().to_coloring_code();
        assert_eq!(c.component_count(), 1, "{}", r.name);
    }
}

#[test]
fn torus_knots_have_determinant_q() {
    // (q, 2) torus knots are two-bridge with determinant q, so col_p is p^2 when p | q
    for q in [3usize, 5, 7, 9, 15, 25, 81, 625] {
        let (c, _) = torus_two_bridge(q).unwrap().to_coloring_code();
        assert_eq!(determinant(&c), BigUint::from(q), "q = {q}");
        for p in [3u64, 5, 7] {
            let want = if (q as u64).is_multiple_of(p) { p * p } else { p };
            assert_eq!(count_colorings(&c, p).unwrap(), BigUint::from(want), "q = {q}, p = {p}");
        }
    }
}
