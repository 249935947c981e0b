use super::{Disk, MarkedDiagram, Marking};
use crate::codes::{GaussCode, Handedness, Pass, Role};

#[derive(Debug, Clone, Copy)]
enum Item {
    /// A pass and the original gap whose edge it sits on.
    Pass(Pass, usize),
    Mark(Disk),
}

/// Normalized diagram plus, for each of its gaps, the gap of the input
/// diagram whose edge it subdivides.
pub(crate) struct Normalized {
    pub diagram: MarkedDiagram,
    pub gap_origin: Vec<usize>,
}

/// Rewrites `m` so every twist is ±1 and no strand meets two disks.
///
/// A `twist(n)` with `|n| > 1` becomes `|n|` disks of sign `n` with a kink
/// between neighbours. Then, wherever two disks follow each other with no
/// under-pass in between, a kink is inserted right before the later one.
/// Kinks are positive. Input that is already normalized comes back unchanged.
pub fn normalize_markings(m: &MarkedDiagram) -> MarkedDiagram {
    normalize_with_origin(m).diagram
}

pub(crate) fn normalize_with_origin(m: &MarkedDiagram) -> Normalized {
    let base = m.base();
    let mut next_id = base.crossing_count() + 1;
    let mut kink = |origin: usize| {
        let id = next_id;
        next_id += 1;
        Handedness::Positive.passes(id).map(|p| Item::Pass(p, origin))
    };

    let mut items = Vec::new();
    for (q, &pass) in base.passes().iter().enumerate() {
        if let Some(mk) = m.markings().iter().find(|mk| mk.gap == q) {
            match mk.disk {
                Disk::Twist(n) if n.abs() > 1 => {
                    items.push(Item::Mark(Disk::Twist(n.signum())));
                    for _ in 1..n.abs() {
                        items.extend(kink(q));
                        items.push(Item::Mark(Disk::Twist(n.signum())));
                    }
                }
                disk => items.push(Item::Mark(disk)),
            }
        }
        items.push(Item::Pass(pass, q));
    }

    let len = items.len();
    let crowded: Vec<bool> = (0..len)
        .map(|i| {
            if !matches!(items[i], Item::Mark(_)) {
                return false;
            }
            for back in 1..len {
                match items[(i + len - back) % len] {
                    Item::Mark(_) => return true,
                    Item::Pass(p, _) if p.role == Role::Under => return false,
                    Item::Pass(..) => {}
                }
            }
            false
        })
        .collect();

    let mut passes = Vec::new();
    let mut gap_origin = Vec::new();
    let mut markings = Vec::new();
    for i in 0..len {
        match items[i] {
            Item::Pass(p, origin) => {
                passes.push(p);
                gap_origin.push(origin);
            }
            Item::Mark(disk) => {
                if crowded[i] {
                    let origin = (i..len)
                        .find_map(|j| match items[j] {
                            Item::Pass(_, o) => Some(o),
                            Item::Mark(_) => None,
                        })
                        .expect("every disk precedes a pass");
                    for it in kink(origin) {
                        if let Item::Pass(p, o) = it {
                            passes.push(p);
                            gap_origin.push(o);
                        }
                    }
                }
                markings.push(Marking { gap: passes.len(), disk });
            }
        }
    }
    let code = GaussCode::new(passes).expect("kink insertion keeps the code valid");
    let diagram = MarkedDiagram::new(code, markings).expect("normalization keeps markings valid");
    Normalized { diagram, gap_origin }
}
