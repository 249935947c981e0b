use std::fmt;

use super::{CodeError, GaussCode, Role};

/// Index of a strand (arc running from one under-pass to the next), 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrandId(pub usize);

impl fmt::Display for StrandId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0 + 1)
    }
}

/// Incidence data of one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingRecord {
    pub over: StrandId,
    pub under_in: StrandId,
    pub under_out: StrandId,
}

/// Per-crossing incidence records, the data that defines a coloring matrix.
///
/// Crossing `i` (0-based) is row `i` of the coloring matrix; strand `j` is
/// column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringCode {
    crossings: Vec<CrossingRecord>,
}

impl ColoringCode {
    /// Checks that there are as many strands as crossings and that each strand
    /// ends at exactly one crossing and starts at exactly one crossing.
    pub fn new(crossings: Vec<CrossingRecord>) -> Result<Self, CodeError> {
        let r = crossings.len();
        if r == 0 {
            return Err(CodeError::Empty);
        }
        let mut ins = vec![0u32; r];
        let mut outs = vec![0u32; r];
        for c in &crossings {
            for s in [c.over, c.under_in, c.under_out] {
                if s.0 >= r {
                    return Err(CodeError::IndexOutOfRange { index: s.0, len: r });
                }
            }
            ins[c.under_in.0] += 1;
            outs[c.under_out.0] += 1;
        }
        if let Some(s) = (0..r).find(|&s| ins[s] != 1 || outs[s] != 1) {
            return Err(CodeError::BadParameter(format!(
                "strand {} must end and start at exactly one crossing",
                StrandId(s)
            )));
        }
        Ok(ColoringCode { crossings })
    }

    pub fn crossings(&self) -> &[CrossingRecord] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn strand_count(&self) -> usize {
        self.crossings.len()
    }

    /// Successor map: the strand that continues after `s` passes under.
    pub fn successor(&self) -> Vec<StrandId> {
        let mut next = vec![StrandId(0); self.strand_count()];
        for c in &self.crossings {
            next[c.under_in.0] = c.under_out;
        }
        next
    }

    /// Number of cycles of the successor permutation.
    pub fn component_count(&self) -> usize {
        let next = self.successor();
        let mut seen = vec![false; next.len()];
        let mut cycles = 0;
        for start in 0..next.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                s = next[s].0;
            }
        }
        cycles
    }
}

/// Where one strand sits in the Gauss sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandSpan {
    /// Pass positions covered, in traversal order, ending with the under-pass
    /// that terminates the strand.
    pub positions: Vec<usize>,
    /// Crossing id (1-based) where the strand ends as `under_in`.
    pub terminal: usize,
    /// Crossing id (1-based) where the strand starts as `under_out`.
    pub origin: usize,
    /// Crossing ids the strand passes over, in order.
    pub overs: Vec<usize>,
}

/// Derived view linking a [`GaussCode`] to its [`ColoringCode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandTable {
    spans: Vec<StrandSpan>,
    position_strand: Vec<StrandId>,
}

impl StrandTable {
    pub fn spans(&self) -> &[StrandSpan] {
        &self.spans
    }

    pub fn span(&self, s: StrandId) -> &StrandSpan {
        &self.spans[s.0]
    }

    /// Strand owning the pass at `position`.
    pub fn strand_at(&self, position: usize) -> StrandId {
        self.position_strand[position]
    }

    /// Strand containing the edge at gap `g` (the edge entering pass `g`).
    pub fn strand_of_gap(&self, gap: usize) -> StrandId {
        self.position_strand[gap % self.position_strand.len()]
    }

    /// Offset of gap `g` within its strand: 0 when the gap is the first edge
    /// after the strand's origin under-pass.
    pub fn gap_offset(&self, gap: usize) -> usize {
        let n = self.position_strand.len();
        let gap = gap % n;
        let span = self.span(self.strand_of_gap(gap));
        span.positions.iter().position(|&p| p == gap).expect("gap lies in its strand")
    }
}

pub(super) fn to_coloring_code(code: &GaussCode) -> (ColoringCode, StrandTable) {
    let passes = code.passes();
    let n = passes.len();
    let r = code.crossing_count();
    let unders: Vec<usize> = (0..n).filter(|&i| passes[i].is_under()).collect();

    let mut position_strand = vec![StrandId(0); n];
    let mut spans = Vec::with_capacity(r);
    for (k, &end) in unders.iter().enumerate() {
        let start = (unders[(k + r - 1) % r] + 1) % n;
        let mut positions = Vec::new();
        let mut overs = Vec::new();
        let mut i = start;
        loop {
            position_strand[i] = StrandId(k);
            positions.push(i);
            if i == end {
                break;
            }
            if passes[i].role == Role::Over {
                overs.push(passes[i].crossing);
            }
            i = (i + 1) % n;
        }
        spans.push(StrandSpan {
            positions,
            terminal: passes[end].crossing,
            origin: passes[unders[(k + r - 1) % r]].crossing,
            overs,
        });
    }

    let mut records = vec![None; r];
    let mut over_of = vec![StrandId(0); r];
    for (i, p) in passes.iter().enumerate() {
        if p.role == Role::Over {
            over_of[p.crossing - 1] = position_strand[i];
        }
    }
    for (k, &u) in unders.iter().enumerate() {
        let c = passes[u].crossing - 1;
        records[c] = Some(CrossingRecord { over: over_of[c], under_in: StrandId(k), under_out: StrandId((k + 1) % r) });
    }
    let crossings = records.into_iter().map(|c| c.expect("every crossing has an under-pass")).collect();
    (
        ColoringCode::new(crossings).expect("a valid Gauss code yields a valid coloring code"),
        StrandTable { spans, position_strand },
    )
}
