use std::fmt;

use super::normalize::normalize_with_origin;
use super::{Disk, MarkedDiagram, SymUnionError};
use crate::codes::{ColoringCode, GaussCode, Pass, Role, StrandId, StrandTable};
use crate::coloring::coloring_matrix;
use crate::zplinalg::IntMatrix;

/// Name of a union strand in terms of the partial diagram it came from.
///
/// `A`/`B` are the halves of a marked strand before and after its disk, the
/// starred forms live on the mirror side, `T(j)` is the strand passing over
/// the axis crossings of twist disk `j` (1-based), and `Plain` strands are
/// copies of unmarked strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrandLabel {
    A(StrandId),
    B(StrandId),
    AStar(StrandId),
    BStar(StrandId),
    T(usize),
    Plain(StrandId),
    PlainStar(StrandId),
}

impl fmt::Display for StrandLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StrandLabel::A(s) => write!(f, "a{}", s.0 + 1),
            StrandLabel::B(s) => write!(f, "b{}", s.0 + 1),
            StrandLabel::AStar(s) => write!(f, "a{}*", s.0 + 1),
            StrandLabel::BStar(s) => write!(f, "b{}*", s.0 + 1),
            StrandLabel::T(j) => write!(f, "t{j}"),
            StrandLabel::Plain(s) => write!(f, "s{}", s.0 + 1),
            StrandLabel::PlainStar(s) => write!(f, "s{}*", s.0 + 1),
        }
    }
}

/// A symmetric union `D ⊔ -D(n_1, ..., n_k)` at the incidence level.
///
/// Crossings `1..=r` come from `D`, `r+1..=2r` are their mirror copies and
/// the rest sit on the axis.
#[derive(Debug, Clone)]
pub struct SymUnionDiagram {
    /// The marked diagram the union was built from (normalized unless built
    /// through [`build_direct`]).
    pub source: MarkedDiagram,
    pub gauss: GaussCode,
    pub code: ColoringCode,
    pub table: StrandTable,
    pub labels: Vec<StrandLabel>,
    /// Strand of `source.base()` each union strand descends from.
    pub ancestors: Vec<StrandId>,
    /// Strand of the caller's original base each `source` strand descends from.
    pub origin: Vec<StrandId>,
    /// Crossing ids on the axis, one list per twist disk in gap order.
    pub axis_crossings: Vec<Vec<usize>>,
    /// Crossings of `source.base()`.
    pub r: usize,
    /// Total axis crossings.
    pub k: usize,
}

impl SymUnionDiagram {
    pub fn crossing_count(&self) -> usize {
        self.code.crossing_count()
    }

    pub fn is_axis_crossing(&self, id: usize) -> bool {
        id > 2 * self.r
    }
}

#[derive(Debug, Clone, Copy)]
enum Side {
    Front,
    Mirror,
}

/// Where the edge entering a union pass comes from.
#[derive(Debug, Clone, Copy)]
enum EdgeSource {
    /// `gap` is the base edge. When that edge carries a disk, `before` says
    /// which side of the disk this piece lies on.
    Segment {
        side: Side,
        gap: usize,
        before: bool,
    },
    Axis {
        marking: usize,
    },
}

const T_END: usize = 0;
const B_END: usize = 1;

fn endpoint(kind: usize, j: usize, side: usize) -> usize {
    (j * 2 + side) * 2 + kind
}

type Strip = Vec<(Pass, EdgeSource)>;

/// Builds the union after normalizing `m`.
pub fn build_symmetric_union(m: &MarkedDiagram) -> Result<SymUnionDiagram, SymUnionError> {
    let norm = normalize_with_origin(m);
    let mut u = build_raw(&norm.diagram)?;
    let (_, input_table) = m.base().to_coloring_code();
    let (_, norm_table) = norm.diagram.base().to_coloring_code();
    u.origin =
        norm_table.spans().iter().map(|span| input_table.strand_of_gap(norm.gap_origin[span.positions[0]])).collect();
    Ok(u)
}

/// Builds the union from `m` as given, with a chain of `|n|` axis crossings
/// per twist disk.
pub fn build_direct(m: &MarkedDiagram) -> Result<SymUnionDiagram, SymUnionError> {
    build_raw(m)
}

fn build_raw(m: &MarkedDiagram) -> Result<SymUnionDiagram, SymUnionError> {
    let base = m.base();
    let n = base.len();
    let r = base.crossing_count();
    let marks = m.markings();
    let count = marks.len();

    // segment j runs from marking j up to marking j+1
    let seg_len: Vec<usize> = (0..count)
        .map(|j| match (marks[(j + 1) % count].gap + n - marks[j].gap) % n {
            0 => n,
            len => len,
        })
        .collect();

    let mut tangle: Vec<Option<(usize, Strip)>> = vec![None; 4 * count];
    let mut link = |a: usize, b: usize, strip: Strip| {
        let mut back = strip.clone();
        back.reverse();
        tangle[a] = Some((b, strip));
        tangle[b] = Some((a, back));
    };
    let mut next_id = 2 * r + 1;
    let mut axis_crossings = Vec::new();
    let mut axis_disk = Vec::new();
    for (j, mk) in marks.iter().enumerate() {
        let (tl, bl) = (endpoint(T_END, j, 0), endpoint(B_END, j, 0));
        let (tr, br) = (endpoint(T_END, j, 1), endpoint(B_END, j, 1));
        match mk.disk {
            Disk::Infinity => {
                link(tl, tr, Vec::new());
                link(bl, br, Vec::new());
            }
            Disk::Twist(t) => {
                let k = t.unsigned_abs() as usize;
                let ids: Vec<usize> = (next_id..next_id + k).collect();
                next_id += k;
                axis_disk.extend(std::iter::repeat_n(axis_crossings.len(), k));
                axis_crossings.push(ids.clone());
                let (first, second) = if t > 0 { (Role::Under, Role::Over) } else { (Role::Over, Role::Under) };
                let src = EdgeSource::Axis { marking: j };
                let left: Strip = ids
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| (Pass { crossing: x, role: if i % 2 == 0 { first } else { second } }, src))
                    .collect();
                let right: Strip = ids
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| (Pass { crossing: x, role: if i % 2 == 0 { second } else { first } }, src))
                    .collect();
                if k.is_multiple_of(2) {
                    link(tl, bl, left);
                    link(tr, br, right);
                } else {
                    link(tl, br, left);
                    link(tr, bl, right);
                }
            }
        }
    }

    let j0 = marks.iter().position(|mk| mk.disk == Disk::Infinity).expect("validated");
    let mut strip: Strip = Vec::with_capacity(4 * r + next_id);
    let mut visited = vec![false; 2 * count];
    let mut cur = endpoint(B_END, j0, 0);
    loop {
        let (kind, side, j) = (cur % 2, (cur / 2) % 2, cur / 4);
        let (seg, forward, end) = if kind == B_END {
            (j, true, endpoint(T_END, (j + 1) % count, side))
        } else {
            let seg = (j + count - 1) % count;
            (seg, false, endpoint(B_END, seg, side))
        };
        if visited[seg * 2 + side] {
            break;
        }
        visited[seg * 2 + side] = true;
        let shift = if side == 0 { 0 } else { r };
        let side_tag = if side == 0 { Side::Front } else { Side::Mirror };
        let mut offsets: Vec<usize> = (0..seg_len[seg]).collect();
        if !forward {
            offsets.reverse();
        }
        for t in offsets {
            let q = (marks[seg].gap + t) % n;
            let p = base.passes()[q];
            let gap = if forward { q } else { (q + 1) % n };
            strip.push((
                Pass { crossing: p.crossing + shift, role: p.role },
                EdgeSource::Segment { side: side_tag, gap, before: !forward },
            ));
        }
        let (other, mut passes) = tangle[end].clone().expect("every endpoint is linked");
        if let Some(first) = passes.first_mut() {
            // the edge into the tangle is the end of the segment just walked
            let cut = if forward { (seg + 1) % count } else { seg };
            first.1 = EdgeSource::Segment { side: side_tag, gap: marks[cut].gap, before: forward };
        }
        strip.extend(passes);
        cur = other;
    }
    let seen = visited.iter().filter(|&&v| v).count();
    if seen != 2 * count {
        return Err(SymUnionError::NotAKnot { visited: seen, segments: 2 * count });
    }

    let gauss = GaussCode::new(strip.iter().map(|(p, _)| *p).collect())
        .map_err(|e| SymUnionError::Internal(format!("union code invalid: {e}")))?;
    let (code, table) = gauss.to_coloring_code();
    if code.component_count() != 1 {
        return Err(SymUnionError::NotAKnot { visited: seen, segments: 2 * count });
    }

    let (_, base_table) = base.to_coloring_code();
    let edge_gap = |src: EdgeSource| match src {
        EdgeSource::Segment { gap, .. } => gap,
        EdgeSource::Axis { marking } => marks[marking].gap,
    };
    let ancestors: Vec<StrandId> =
        table.spans().iter().map(|span| base_table.strand_of_gap(edge_gap(strip[span.positions[0]].1))).collect();
    debug_assert!(table.spans().iter().enumerate().all(|(k, span)| span
        .positions
        .iter()
        .all(|&pos| base_table.strand_of_gap(edge_gap(strip[pos].1)) == ancestors[k])));

    let mut over_axis: Vec<Option<usize>> = vec![None; code.strand_count()];
    for (i, rec) in code.crossings().iter().enumerate() {
        if i + 1 > 2 * r {
            over_axis[rec.over.0] = Some(axis_disk[i - 2 * r] + 1);
        }
    }
    let marking_on = |s: StrandId| marks.iter().find(|mk| base_table.strand_of_gap(mk.gap) == s);
    let labels = table
        .spans()
        .iter()
        .enumerate()
        .map(|(k, span)| {
            if let Some(j) = over_axis[k] {
                return StrandLabel::T(j);
            }
            let sources: Vec<EdgeSource> = span.positions.iter().map(|&pos| strip[pos].1).collect();
            let pick = |want_front: bool| {
                sources.iter().find_map(|s| match *s {
                    EdgeSource::Segment { side, gap, before } if matches!(side, Side::Front) == want_front => {
                        Some((gap, before))
                    }
                    _ => None,
                })
            };
            let (front, (gap, tie_before)) = match (pick(true), pick(false)) {
                (Some(e), _) => (true, e),
                (None, Some(e)) => (false, e),
                (None, None) => {
                    let EdgeSource::Axis { marking } = sources[0] else { unreachable!() };
                    let disk = marks[..marking].iter().filter(|mk| mk.disk != Disk::Infinity).count();
                    return StrandLabel::T(disk + 1);
                }
            };
            let s = base_table.strand_of_gap(gap);
            let before = marking_on(s).map(|mk| {
                let (eo, mo) = (base_table.gap_offset(gap), base_table.gap_offset(mk.gap));
                eo < mo || (eo == mo && tie_before)
            });
            match (front, before) {
                (true, None) => StrandLabel::Plain(s),
                (false, None) => StrandLabel::PlainStar(s),
                (true, Some(true)) => StrandLabel::A(s),
                (true, Some(false)) => StrandLabel::B(s),
                (false, Some(true)) => StrandLabel::AStar(s),
                (false, Some(false)) => StrandLabel::BStar(s),
            }
        })
        .collect();

    let k = next_id - 2 * r - 1;
    Ok(SymUnionDiagram {
        source: m.clone(),
        gauss,
        code,
        table,
        labels,
        ancestors,
        origin: (0..r).map(StrandId).collect(),
        axis_crossings,
        r,
        k,
    })
}

/// The union's coloring matrix.
pub fn union_coloring_matrix(u: &SymUnionDiagram) -> IntMatrix {
    coloring_matrix(&u.code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{count_colorings, determinant};
    use num_bigint::BigUint;

    fn build(text: &str) -> SymUnionDiagram {
        build_symmetric_union(&text.parse().unwrap()).unwrap()
    }

    #[test]
    fn six_one_presentation() {
        let u = build("O1U2O3U1O2U3; inf@0; twist(1)@2");
        assert_eq!(u.crossing_count(), 7);
        assert_eq!(determinant(&u.code), BigUint::from(9u32));
        assert_eq!(count_colorings(&u.code, 3).unwrap(), BigUint::from(9u32));
        assert_eq!(u.axis_crossings, vec![vec![7]]);
        assert_eq!(u.labels.iter().filter(|l| matches!(l, StrandLabel::T(1))).count(), 1);
    }

    #[test]
    fn axis_rows_are_fox_rows() {
        let u = build("O1U2O3U1O2U3; inf@3; twist(-1)@0; twist(1)@5");
        let m = union_coloring_matrix(&u);
        for ids in &u.axis_crossings {
            for &id in ids {
                let mut row = m.row(id - 1).to_vec();
                row.retain(|&x| x != 0);
                row.sort();
                assert_eq!(row, vec![-2, 1, 1]);
            }
        }
    }

    #[test]
    fn pure_sum_without_twists() {
        let u = build("O1U2O3U1O2U3; inf@0");
        assert_eq!(u.crossing_count(), 6);
        assert_eq!(u.k, 0);
        assert_eq!(count_colorings(&u.code, 3).unwrap(), BigUint::from(27u32));
        assert!(u.labels.iter().all(|l| !matches!(l, StrandLabel::T(_))));
    }

    #[test]
    fn direct_chain_matches_normalized() {
        let m: MarkedDiagram = "O1U2O3U1O2U3; inf@0; twist(3)@2".parse().unwrap();
        let direct = build_direct(&m).unwrap();
        let norm = build_symmetric_union(&m).unwrap();
        assert_eq!(direct.crossing_count(), 9);
        assert_eq!(norm.crossing_count(), 13);
        assert_eq!(determinant(&direct.code), determinant(&norm.code));
        assert_eq!(count_colorings(&direct.code, 3).unwrap(), BigUint::from(27u32));
        assert_eq!(count_colorings(&norm.code, 3).unwrap(), BigUint::from(27u32));
    }

    #[test]
    fn labels_are_consistent_with_ancestors() {
        let u = build("O1U2O3U1O2U3O4U5O6U4O5U6; inf@4; twist(1)@0; twist(-1)@9");
        for (label, anc) in u.labels.iter().zip(&u.ancestors) {
            match *label {
                StrandLabel::A(s) | StrandLabel::B(s) | StrandLabel::AStar(s) | StrandLabel::BStar(s) => {
                    assert_eq!(s, *anc)
                }
                StrandLabel::Plain(s) | StrandLabel::PlainStar(s) => assert_eq!(s, *anc),
                StrandLabel::T(_) => {}
            }
        }
    }
}
