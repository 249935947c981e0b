use super::{normalize_markings, Disk, MarkedDiagram, Marking};
use crate::codes::{splice, Handedness, Role, StrandId, StrandTable};
use crate::coloring::coloring_matrix;
use crate::zplinalg::IntMatrix;

/// Makes the strand through the ∞-disk start right at the disk, so the part
/// of it before the disk has one under-incidence and no over-incidences.
fn isolate_infinity(m: MarkedDiagram) -> MarkedDiagram {
    let g0 = m.infinity().gap;
    let (_, table) = m.base().to_coloring_code();
    if table.gap_offset(g0) == 0 {
        return m;
    }
    let id = m.base().crossing_count() + 1;
    let spliced = splice(m.base(), &[(g0, Handedness::Positive.passes(id).to_vec())]).expect("gap in range");
    let markings = m
        .markings()
        .iter()
        .map(|mk| Marking { gap: if mk.gap >= g0 { mk.gap + 2 } else { mk.gap }, disk: mk.disk })
        .collect();
    MarkedDiagram::new(spliced.code, markings).expect("shifted markings stay valid")
}

/// Incidence columns of the two halves of the strand cut at `gap`: `a`
/// before the cut, `b` after. `a + b` is the strand's column.
fn split_column(base: &crate::codes::GaussCode, table: &StrandTable, gap: usize) -> (StrandId, Vec<i64>, Vec<i64>) {
    let r = base.crossing_count();
    let s = table.strand_of_gap(gap);
    let span = table.span(s);
    let cut = table.gap_offset(gap);
    let mut a = vec![0i64; r];
    let mut b = vec![0i64; r];
    a[span.origin - 1] += 1;
    b[span.terminal - 1] += 1;
    for (idx, &pos) in span.positions.iter().enumerate() {
        let pass = base.passes()[pos];
        if pass.role == Role::Over {
            let half = if idx < cut { &mut a } else { &mut b };
            half[pass.crossing - 1] -= 2;
        }
    }
    (s, a, b)
}

/// Disk at a marked gap and the two halves its column splits into.
type SplitColumn = (Disk, Vec<i64>, Vec<i64>);

/// The `2r × 2r` block matrix `[[M_D, A], [0, M_D']]` with the same mod-p
/// nullity as the union's coloring matrix.
///
/// The diagram is normalized, and if needed a kink is added so the ∞-disk
/// strand `s_1` starts at the disk. Columns are `(s_i, 0)` for every strand
/// with `s_1` first, then `(a_1, 0)`, then for each other strand
/// `(-b_i, s_i)` under a `+1` disk, `(-a_i, s_i)` under a `-1` disk and
/// `(0, s_i)` if unmarked. Rows are ordered so `a_1` is the first unit vector.
pub fn reduced_block_matrix(m: &MarkedDiagram) -> IntMatrix {
    let m = isolate_infinity(normalize_markings(m));
    let base = m.base();
    let r = base.crossing_count();
    let (cc, table) = base.to_coloring_code();
    let md = coloring_matrix(&cc);

    let mut split: Vec<Option<SplitColumn>> = vec![None; r];
    for mk in m.markings() {
        let (s, a, b) = split_column(base, &table, mk.gap);
        split[s.0] = Some((mk.disk, a, b));
    }
    let s1 = table.strand_of_gap(m.infinity().gap).0;
    let a1 = split[s1].as_ref().expect("infinity strand is split").1.clone();
    let pivot_row = a1.iter().position(|&x| x != 0).expect("a_1 has one incidence");

    let order: Vec<usize> = std::iter::once(s1).chain((0..r).filter(|&s| s != s1)).collect();
    let mut cols: Vec<Vec<i64>> = Vec::with_capacity(2 * r);
    for &s in &order {
        let mut c = md.column(s);
        c.extend(std::iter::repeat_n(0, r));
        cols.push(c);
    }
    let mut c = a1;
    c.extend(std::iter::repeat_n(0, r));
    cols.push(c);
    for &s in &order[1..] {
        let top = match &split[s] {
            Some((Disk::Twist(t), a, b)) => {
                let half = if *t > 0 { b } else { a };
                half.iter().map(|x| -x).collect()
            }
            _ => vec![0; r],
        };
        let mut c = top;
        c.extend(md.column(s));
        cols.push(c);
    }

    let row_order: Vec<usize> = std::iter::once(pivot_row).chain((0..r).filter(|&i| i != pivot_row)).collect();
    let mut out = IntMatrix::zeros(2 * r, 2 * r);
    for (j, col) in cols.iter().enumerate() {
        for offset in [0, r] {
            for (i, &src) in row_order.iter().enumerate() {
                out[(offset + i, j)] = col[offset + src];
            }
        }
    }
    out
}
