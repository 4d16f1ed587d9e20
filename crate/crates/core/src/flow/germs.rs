use alloc::vec::Vec;
use core::fmt;

use super::{FiniteFlow, FlowIndex};
use crate::ids::{PathId, StateId};
use crate::partition::UnionFind;
use crate::{Error, Result};

/// Which end of the paths the germs are taken at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GermSign {
    /// Paths starting at the state, `γ ≡ γ*γ'`.
    Minus,
    /// Paths ending at the state, `γ ≡ γ'*γ`.
    Plus,
}

impl fmt::Display for GermSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GermSign::Minus => "minus",
            GermSign::Plus => "plus",
        })
    }
}

/// Germ classes at a state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermSet {
    pub state: StateId,
    pub sign: GermSign,
    /// Each class sorted, classes ordered by their smallest member.
    pub classes: Vec<Vec<PathId>>,
}

impl GermSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.classes.len() == 1
    }
}

/// Paths starting (`Minus`) or ending (`Plus`) at `state`, identified with
/// their extensions away from it.
pub fn germs(x: &FiniteFlow, state: &StateId, sign: GermSign) -> Result<GermSet> {
    if !x.skeleton().contains(state) {
        return Err(Error::UnknownState(state.clone()));
    }
    let idx = FlowIndex::new(x);
    let members: Vec<usize> = match idx.state(state) {
        Some(s) => match sign {
            GermSign::Minus => idx.starting_at(s).to_vec(),
            GermSign::Plus => idx.ending_at(s).to_vec(),
        },
        None => Vec::new(),
    };
    // members is sorted by path index; local positions keep that order.
    let local = |p: usize| members.binary_search(&p).ok();
    let mut uf = UnionFind::new(members.len());
    for (i, &g) in members.iter().enumerate() {
        match sign {
            GermSign::Minus => {
                for &(_, ext) in &idx.comp[g] {
                    if let Some(j) = local(ext) {
                        uf.union(i, j);
                    }
                }
            }
            GermSign::Plus => {
                for &y in idx.ending_at(idx.src[g]) {
                    if let Some(j) = idx.compose(y, g).and_then(local) {
                        uf.union(i, j);
                    }
                }
            }
        }
    }
    let classes = uf
        .classes()
        .into_iter()
        .map(|c| c.into_iter().map(|i| idx.ids[members[i]].clone()).collect())
        .collect();
    Ok(GermSet {
        state: state.clone(),
        sign,
        classes,
    })
}
