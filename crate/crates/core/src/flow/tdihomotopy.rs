use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use core::fmt;

use super::{germs, is_isomorphism, restrict, FiniteFlow, FlowIndex, FlowMorphism, GermSign};
use crate::ids::{PathId, StateId};
use crate::Result;

/// Verdict on one of the three conditions, with the first counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub holds: bool,
    pub detail: Option<String>,
}

impl ConditionOutcome {
    fn ok() -> Self {
        ConditionOutcome {
            holds: true,
            detail: None,
        }
    }

    fn fail(detail: String) -> Self {
        ConditionOutcome {
            holds: false,
            detail: Some(detail),
        }
    }
}

/// The three T-dihomotopy conditions, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TDihomotopyReport {
    /// `x` is isomorphic, through `f`, to `y` restricted to `f(x⁰)`.
    pub restriction: ConditionOutcome,
    /// Each state outside `f(x⁰)` has exactly one germ on each side.
    pub singleton_germs: ConditionOutcome,
    /// Each path outside the image extends on both sides into the image.
    pub extension: ConditionOutcome,
}

impl TDihomotopyReport {
    pub fn holds(&self) -> bool {
        self.conditions().iter().all(|c| c.holds)
    }

    pub fn conditions(&self) -> [&ConditionOutcome; 3] {
        [&self.restriction, &self.singleton_germs, &self.extension]
    }
}

impl fmt::Display for TDihomotopyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |c: &ConditionOutcome| if c.holds { "ok" } else { "fail" };
        write!(
            f,
            "T-dihomotopy: {} (1 {}, 2 {}, 3 {})",
            if self.holds() { "yes" } else { "no" },
            verdict(&self.restriction),
            verdict(&self.singleton_germs),
            verdict(&self.extension),
        )
    }
}

/// Evaluates whether the morphism `f: x -> y` is a T-dihomotopy.
///
/// Fails with [`crate::Error::InvalidMorphism`] if `f` is not a morphism.
pub fn check_t_dihomotopy(
    f: &FlowMorphism,
    x: &FiniteFlow,
    y: &FiniteFlow,
) -> Result<TDihomotopyReport> {
    f.check(x, y)?;
    let image_states: BTreeSet<StateId> = f.state_map.values().cloned().collect();

    let restricted = restrict(y, &image_states)?;
    let restriction = if is_isomorphism(f, x, &restricted) {
        ConditionOutcome::ok()
    } else {
        ConditionOutcome::fail(String::from(
            "the corestriction to the restricted codomain is not an isomorphism",
        ))
    };

    let mut singleton_germs = ConditionOutcome::ok();
    'states: for alpha in y.skeleton().difference(&image_states) {
        for sign in [GermSign::Minus, GermSign::Plus] {
            let g = germs(y, alpha, sign)?;
            if !g.is_singleton() {
                singleton_germs =
                    ConditionOutcome::fail(format!("state `{alpha}` has {} {sign} germs", g.len()));
                break 'states;
            }
        }
    }

    let image: BTreeSet<&PathId> = f.path_map.values().collect();
    let yi = FlowIndex::new(y);
    let in_image = |p: usize| image.contains(&yi.ids[p]);
    let mut extension = ConditionOutcome::ok();
    for gamma in (0..yi.len()).filter(|&p| !in_image(p)) {
        // `None` stands for the identity at the corresponding endpoint.
        let lefts = core::iter::once(None).chain(yi.ending_at(yi.src[gamma]).iter().map(Some));
        let found = lefts.into_iter().any(|u| {
            let Some(ugamma) = (match u {
                None => Some(gamma),
                Some(&u) => yi.compose(u, gamma),
            }) else {
                return false;
            };
            in_image(ugamma)
                || yi
                    .starting_at(yi.tgt[gamma])
                    .iter()
                    .any(|&v| yi.compose(ugamma, v).is_some_and(in_image))
        });
        if !found {
            extension = ConditionOutcome::fail(format!(
                "path `{}` does not extend into the image",
                yi.ids[gamma]
            ));
            break;
        }
    }

    Ok(TDihomotopyReport {
        restriction,
        singleton_germs,
        extension,
    })
}
