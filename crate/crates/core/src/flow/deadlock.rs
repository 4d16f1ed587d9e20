use alloc::collections::{BTreeSet, VecDeque};

use super::{FiniteFlow, FlowIndex};
use crate::ids::StateId;
use crate::{Error, Result};

/// Non-final states reachable from `init` (or `init` itself) with no path
/// leaving them.
pub fn deadlocks(
    x: &FiniteFlow,
    init: &StateId,
    finals: &BTreeSet<StateId>,
) -> Result<BTreeSet<StateId>> {
    if let Some(s) = core::iter::once(init)
        .chain(finals)
        .find(|s| !x.skeleton().contains(*s))
    {
        return Err(Error::UnknownState(s.clone()));
    }
    let idx = FlowIndex::new(x);
    let stuck = |s: &StateId| idx.state(s).is_none_or(|i| idx.starting_at(i).is_empty());

    let mut reached: BTreeSet<&StateId> = BTreeSet::from([init]);
    let mut queue: VecDeque<usize> = idx.state(init).into_iter().collect();
    while let Some(s) = queue.pop_front() {
        for &p in idx.starting_at(s) {
            if reached.insert(&idx.states[idx.tgt[p]]) {
                queue.push_back(idx.tgt[p]);
            }
        }
    }
    Ok(reached
        .into_iter()
        .filter(|s| !finals.contains(*s) && stuck(s))
        .cloned()
        .collect())
}
