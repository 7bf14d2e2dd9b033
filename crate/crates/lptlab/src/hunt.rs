//! Resumable search for a connected chordal graph with lpt > 1.
//!
//! Labeled graphs are streamed size by size in edge-mask order. The cursor
//! (size and next mask) is the whole search state, so it can be written to a
//! file at any point and picked up later.

use std::path::Path;

use lptlab_core::catalog::LabeledGraphs;
use lptlab_core::chordal::is_chordal;
use lptlab_core::graph6::write_graph6;
use lptlab_core::transversal::lpt_with_budget;
use serde::{Deserialize, Serialize};

use crate::{HarnessError, Result};

pub const CHECKPOINT_EVERY: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntState {
    /// Size currently being scanned.
    pub n: usize,
    /// Next edge mask to examine at that size.
    pub mask: u64,
    pub examined: u64,
    pub chordal_connected: u64,
    /// Graph6 of every instance found so far.
    pub found: Vec<String>,
}

impl Default for HuntState {
    fn default() -> Self {
        HuntState { n: 1, mask: 0, examined: 0, chordal_connected: 0, found: Vec::new() }
    }
}

impl HuntState {
    /// The saved state at `path`, or a fresh one if the file does not exist.
    pub fn load_or_new(path: &Path) -> Result<Self> {
        match std::fs::read_to_string(path) {
            Ok(text) => Ok(serde_json::from_str(&text)?),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(HuntState::default()),
            Err(e) => Err(e.into()),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string_pretty(self)? + "\n")?;
        std::fs::rename(tmp, path)?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HuntOutcome {
    Found {
        graph6: String,
        lpt: usize,
    },
    /// Every size up to the cap was scanned.
    Exhausted,
    /// The per-invocation mask limit was reached.
    Paused,
}

#[derive(Clone, Copy, Debug)]
pub struct HuntConfig {
    pub n_max: usize,
    pub budget: u64,
    /// Masks to examine in this invocation.
    pub limit: Option<u64>,
}

/// Advances `state` until a hit, the size cap, or the limit. `checkpoint` is
/// called periodically and before returning.
pub fn hunt_chordal_lpt2(
    state: &mut HuntState,
    cfg: HuntConfig,
    mut checkpoint: impl FnMut(&HuntState) -> Result<()>,
) -> Result<HuntOutcome> {
    let mut budget_left = cfg.limit.unwrap_or(u64::MAX);
    while state.n <= cfg.n_max {
        let mut stream = LabeledGraphs::new(state.n, state.mask)?;
        while stream.cursor() < stream.total() {
            if budget_left == 0 {
                state.mask = stream.cursor();
                checkpoint(state)?;
                return Ok(HuntOutcome::Paused);
            }
            budget_left -= 1;
            let g = stream.next().expect("cursor below total");
            state.examined += 1;
            if g.is_connected() && is_chordal(&g).is_some() {
                state.chordal_connected += 1;
                let lpt = lpt_with_budget(&g, cfg.budget).map_err(HarnessError::from)?.size;
                if lpt > 1 {
                    let graph6 = write_graph6(&g)?;
                    state.mask = stream.cursor();
                    state.found.push(graph6.clone());
                    checkpoint(state)?;
                    return Ok(HuntOutcome::Found { graph6, lpt });
                }
            }
            if state.examined.is_multiple_of(CHECKPOINT_EVERY) {
                state.mask = stream.cursor();
                checkpoint(state)?;
            }
        }
        state.n += 1;
        state.mask = 0;
    }
    checkpoint(state)?;
    Ok(HuntOutcome::Exhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lptlab_core::paths::DEFAULT_BUDGET;

    #[test]
    fn paused_runs_match_an_uninterrupted_one() {
        let cfg = HuntConfig { n_max: 5, budget: DEFAULT_BUDGET, limit: None };
        let mut whole = HuntState::default();
        assert_eq!(hunt_chordal_lpt2(&mut whole, cfg, |_| Ok(())).unwrap(), HuntOutcome::Exhausted);

        let mut pieces = HuntState::default();
        let step = HuntConfig { limit: Some(97), ..cfg };
        let mut rounds = 0;
        while hunt_chordal_lpt2(&mut pieces, step, |_| Ok(())).unwrap() == HuntOutcome::Paused {
            rounds += 1;
        }
        assert!(rounds > 5);
        assert_eq!(pieces, whole);
        // 1 + 2 + 8 + 64 + 1024 labeled graphs
        assert_eq!(whole.examined, 1099);
        assert!(whole.found.is_empty());
    }
}
