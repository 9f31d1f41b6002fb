//! Dumbbells DB(c1, c2, l): two cycles joined by a path of length `l`
//! (`l > 0`), sharing one vertex (`l = 0`) or sharing a path of length `-l`
//! (`l < 0`).

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::bounds;
use crate::graph::Graph;
use crate::search::{is_thrackleable, Decision, SearchOptions};
use crate::{DumbbellError, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DumbbellSpec {
    pub c1: u32,
    pub c2: u32,
    pub l: i64,
}

impl DumbbellSpec {
    /// Checks `c1, c2 > 2` and `l > -min(c1, c2)`.
    pub fn new(c1: u32, c2: u32, l: i64) -> Result<Self, DumbbellError> {
        if c1 < 3 || c2 < 3 {
            return Err(DumbbellError::InvalidParameters(format!(
                "cycle lengths must exceed 2, got {c1} and {c2}"
            )));
        }
        if l <= -(c1.min(c2) as i64) {
            return Err(DumbbellError::InvalidParameters(format!(
                "l = {l} must exceed -{}",
                c1.min(c2)
            )));
        }
        Ok(DumbbellSpec { c1, c2, l })
    }

    pub fn vertex_count(&self) -> usize {
        (self.c1 as i64 + self.c2 as i64 + self.l - 1) as usize
    }

    pub fn edge_count(&self) -> usize {
        (self.c1 as i64 + self.c2 as i64 + self.l) as usize
    }

    /// Lengths of the three internally disjoint paths of the theta graph
    /// (only meaningful for `l < 0`).
    fn theta_paths(&self) -> [i64; 3] {
        let s = -self.l;
        [s, self.c1 as i64 - s, self.c2 as i64 - s]
    }
}

impl fmt::Display for DumbbellSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DB({},{},{})", self.c1, self.c2, self.l)
    }
}

struct Builder {
    g: Graph,
    next: usize,
}

impl Builder {
    /// Adds a path of `len` edges from `from`, through fresh vertices, ending
    /// at `to` (or at a fresh vertex). Returns the last vertex.
    fn path(&mut self, from: usize, to: Option<usize>, len: usize) -> Result<usize, GraphError> {
        let mut prev = from;
        for i in 0..len {
            let cur = match to {
                Some(t) if i + 1 == len => t,
                _ => {
                    self.next += 1;
                    self.next - 1
                }
            };
            self.g.add_edge(prev, cur)?;
            prev = cur;
        }
        Ok(prev)
    }
}

/// Builds the dumbbell. Vertex 0 is the junction on the first cycle. For
/// `l < 0`, vertices `0..=-l` form the shared path.
pub fn make_dumbbell(spec: DumbbellSpec) -> Result<Graph, DumbbellError> {
    let spec = DumbbellSpec::new(spec.c1, spec.c2, spec.l)?;
    let degenerate = || DumbbellError::DegenerateDumbbell(spec.c1 as i64, spec.c2 as i64, spec.l);
    let mut b = Builder {
        g: Graph::new(spec.vertex_count()),
        next: 1,
    };
    if spec.l >= 0 {
        b.path(0, Some(0), spec.c1 as usize).map_err(|_| degenerate())?;
        let j = b.path(0, None, spec.l as usize).map_err(|_| degenerate())?;
        b.path(j, Some(j), spec.c2 as usize).map_err(|_| degenerate())?;
    } else {
        let [s, p1, p2] = spec.theta_paths();
        if [s, p1, p2].iter().filter(|&&x| x == 1).count() > 1 {
            return Err(degenerate());
        }
        let j = b.path(0, None, s as usize).map_err(|_| degenerate())?;
        b.path(j, Some(0), p1 as usize).map_err(|_| degenerate())?;
        b.path(j, Some(0), p2 as usize).map_err(|_| degenerate())?;
    }
    let g = b.g;
    debug_assert_eq!(g.edge_count(), spec.edge_count());
    Ok(g)
}

/// Canonical representative: `c1 <= c2` and `l >= -c1/2`. For a shared
/// path, the shortest of the three theta paths becomes the shared one.
pub fn normalize(spec: DumbbellSpec) -> DumbbellSpec {
    if spec.l >= 0 {
        let (c1, c2) = (spec.c1.min(spec.c2), spec.c1.max(spec.c2));
        return DumbbellSpec { c1, c2, l: spec.l };
    }
    let mut p = spec.theta_paths();
    p.sort_unstable();
    DumbbellSpec {
        c1: (p[0] + p[1]) as u32,
        c2: (p[0] + p[2]) as u32,
        l: -p[0],
    }
}

fn check_campaign_parameters(c: u32, l: i64) -> Result<(), DumbbellError> {
    if c < 6 || !c.is_multiple_of(2) || l < -1 {
        return Err(DumbbellError::InvalidParameters(format!(
            "need even c >= 6 and l >= -1, got c = {c}, l = {l}"
        )));
    }
    Ok(())
}

/// Every DB(c1, c2, l') with even `6 <= c1 <= c2 <= c` and
/// `-c1/2 <= l' <= l`, ordered by `(c1, c2, l')`.
pub fn required_set(c: u32, l: i64) -> Result<Vec<DumbbellSpec>, DumbbellError> {
    check_campaign_parameters(c, l)?;
    let mut out = Vec::new();
    for c1 in (6..=c).step_by(2) {
        for c2 in (c1..=c).step_by(2) {
            for lp in -(c1 as i64 / 2)..=l {
                out.push(DumbbellSpec { c1, c2, l: lp });
            }
        }
    }
    Ok(out)
}

/// Closed-form size of the required set:
/// `(6lc^2 + c^3 - 36lc + 48l + 12c^2 - 100c + 144) / 48`.
pub fn required_count_closed_form(c: u32, l: i64) -> Result<i128, DumbbellError> {
    check_campaign_parameters(c, l)?;
    let (c, l) = (c as i128, l as i128);
    let num = 6 * l * c * c + c * c * c - 36 * l * c + 48 * l + 12 * c * c - 100 * c + 144;
    debug_assert_eq!(num % 48, 0);
    Ok(num / 48)
}

#[derive(Clone, Debug)]
pub struct CampaignItem {
    pub spec: DumbbellSpec,
    pub decision: Decision,
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub c: u32,
    pub l: i64,
    pub items: Vec<CampaignItem>,
    pub certified: bool,
    /// `tau(c, l)` when certified.
    pub bound: Option<BigRational>,
}

impl CampaignReport {
    pub fn from_items(c: u32, l: i64, items: Vec<CampaignItem>) -> Self {
        let certified = !items.is_empty() && items.iter().all(|it| it.decision.is_not_thrackleable());
        let bound = if certified {
            bounds::tau(c as i64, l).ok()
        } else {
            None
        };
        CampaignReport {
            c,
            l,
            items,
            certified,
            bound,
        }
    }
}

/// Decides every required dumbbell in order of increasing size.
pub fn run_campaign(c: u32, l: i64, opts: &SearchOptions) -> Result<CampaignReport, DumbbellError> {
    let mut specs = required_set(c, l)?;
    specs.sort_by_key(|s| (s.edge_count(), *s));
    let mut items = Vec::with_capacity(specs.len());
    for spec in specs {
        let g = make_dumbbell(spec)?;
        let decision = is_thrackleable(&g, opts);
        items.push(CampaignItem { spec, decision });
    }
    Ok(CampaignReport::from_items(c, l, items))
}
