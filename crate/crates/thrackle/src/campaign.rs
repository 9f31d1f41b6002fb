//! Verification campaigns with per-item timing and a shared time budget.

use std::time::Instant;

use thrackle_core::bounds;
use thrackle_core::dumbbell::{make_dumbbell, required_set, CampaignItem, CampaignReport};
use thrackle_core::search::{Decision, Outcome, SearchOptions, SearchStats};
use thrackle_core::DumbbellError;

use crate::format::write_campaign;
use crate::parallel::{decide, RunOptions};

#[derive(Clone, Debug)]
pub struct CampaignRun {
    pub report: CampaignReport,
    /// Wall time per item, in report order.
    pub millis: Vec<u128>,
}

impl CampaignRun {
    /// Report text in the campaign format.
    pub fn to_text(&self) -> String {
        let tau = bounds::tau(self.report.c as i64, self.report.l).expect("campaign parameters are valid");
        write_campaign(&self.report, &self.millis, &tau)
    }
}

/// Decides every required dumbbell, smallest first. Items not started
/// before the deadline are reported inconclusive with zero nodes.
pub fn run_campaign(c: u32, l: i64, opts: &SearchOptions, run: &RunOptions) -> Result<CampaignRun, DumbbellError> {
    bounds::tau(c as i64, l).map_err(|e| DumbbellError::InvalidParameters(e.to_string()))?;
    let mut specs = required_set(c, l)?;
    specs.sort_by_key(|s| (s.edge_count(), *s));
    let mut items = Vec::with_capacity(specs.len());
    let mut millis = Vec::with_capacity(specs.len());
    for spec in specs {
        let started = Instant::now();
        let decision = if run.deadline.is_some_and(|d| started >= d) {
            Decision {
                outcome: Outcome::Inconclusive { nodes: 0 },
                stats: SearchStats::default(),
            }
        } else {
            if run.progress.is_some() {
                eprintln!("campaign DB({},{},{})", spec.c1, spec.c2, spec.l);
            }
            decide(&make_dumbbell(spec)?, opts, run)
        };
        millis.push(started.elapsed().as_millis());
        items.push(CampaignItem { spec, decision });
    }
    Ok(CampaignRun {
        report: CampaignReport::from_items(c, l, items),
        millis,
    })
}
