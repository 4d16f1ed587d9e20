use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::FiniteFlow;
use crate::ids::{PathId, StateId};
use crate::partition::UnionFind;

/// Dense-index view of a flow for the search kernels.
///
/// Paths are numbered in id order and states in name order, so index order
/// agrees with lexicographic order everywhere. Entries referring to unknown
/// paths are dropped.
pub(crate) struct FlowIndex<'a> {
    pub ids: Vec<PathId>,
    pub pos: BTreeMap<&'a PathId, usize>,
    pub states: Vec<StateId>,
    pub state_pos: BTreeMap<&'a StateId, usize>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// Per path `x`, `(y, x*y)` sorted by `y`.
    pub comp: Vec<Vec<(usize, usize)>>,
    pub adjacent: Vec<(usize, usize)>,
    by_source: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
}

impl<'a> FlowIndex<'a> {
    pub fn new(flow: &'a FiniteFlow) -> Self {
        let mut state_pos: BTreeMap<&StateId, usize> = BTreeMap::new();
        for s in flow.skeleton.iter() {
            state_pos.insert(s, 0);
        }
        for (s, t) in flow.paths.values() {
            state_pos.insert(s, 0);
            state_pos.insert(t, 0);
        }
        let mut states = Vec::with_capacity(state_pos.len());
        for (i, (s, slot)) in state_pos.iter_mut().enumerate() {
            *slot = i;
            states.push((*s).clone());
        }

        let pos: BTreeMap<&PathId, usize> =
            flow.paths.keys().enumerate().map(|(i, p)| (p, i)).collect();
        let ids: Vec<PathId> = flow.paths.keys().cloned().collect();
        let src: Vec<usize> = flow.paths.values().map(|(s, _)| state_pos[s]).collect();
        let tgt: Vec<usize> = flow.paths.values().map(|(_, t)| state_pos[t]).collect();

        let mut comp = alloc::vec![Vec::new(); ids.len()];
        for ((a, b), ab) in &flow.compose {
            if let (Some(&a), Some(&b), Some(&ab)) = (pos.get(a), pos.get(b), pos.get(ab)) {
                comp[a].push((b, ab));
            }
        }
        for row in &mut comp {
            row.sort_unstable();
        }
        let adjacent = flow
            .adjacency
            .iter()
            .filter_map(|(a, b)| Some((*pos.get(a)?, *pos.get(b)?)))
            .collect();

        let mut by_source = alloc::vec![Vec::new(); states.len()];
        let mut by_target = alloc::vec![Vec::new(); states.len()];
        for i in 0..ids.len() {
            by_source[src[i]].push(i);
            by_target[tgt[i]].push(i);
        }

        FlowIndex {
            ids,
            pos,
            states,
            state_pos,
            src,
            tgt,
            comp,
            adjacent,
            by_source,
            by_target,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        let row = &self.comp[a];
        row.binary_search_by_key(&b, |&(y, _)| y)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn starting_at(&self, state: usize) -> &[usize] {
        &self.by_source[state]
    }

    pub fn ending_at(&self, state: usize) -> &[usize] {
        &self.by_target[state]
    }

    pub fn path(&self, id: &PathId) -> Option<usize> {
        self.pos.get(id).copied()
    }

    pub fn state(&self, id: &StateId) -> Option<usize> {
        self.state_pos.get(id).copied()
    }

    /// adj*-components.
    pub fn components(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.len());
        for &(a, b) in &self.adjacent {
            uf.union(a, b);
        }
        uf
    }
}
