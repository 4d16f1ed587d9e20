use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{validate_flow, FiniteFlow, FlowIndex};
use crate::ids::{PathId, StateId};
use crate::{Error, Result};

/// Default cap on candidate assignments for the exhaustive searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// A map of flows: states to states and paths to paths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlowMorphism {
    pub state_map: BTreeMap<StateId, StateId>,
    pub path_map: BTreeMap<PathId, PathId>,
}

impl FlowMorphism {
    pub fn identity(x: &FiniteFlow) -> Self {
        FlowMorphism {
            state_map: x
                .skeleton()
                .iter()
                .map(|s| (s.clone(), s.clone()))
                .collect(),
            path_map: x.paths().map(|(p, _, _)| (p.clone(), p.clone())).collect(),
        }
    }

    /// `self` followed by `next`; `None` if some image is unmapped by `next`.
    pub fn then(&self, next: &FlowMorphism) -> Option<FlowMorphism> {
        Some(FlowMorphism {
            state_map: self
                .state_map
                .iter()
                .map(|(k, v)| Some((k.clone(), next.state_map.get(v)?.clone())))
                .collect::<Option<_>>()?,
            path_map: self
                .path_map
                .iter()
                .map(|(k, v)| Some((k.clone(), next.path_map.get(v)?.clone())))
                .collect::<Option<_>>()?,
        })
    }

    /// Checks every morphism condition; the error names the first failure.
    pub fn check(&self, x: &FiniteFlow, y: &FiniteFlow) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidMorphism(msg));
        for s in x.skeleton() {
            match self.state_map.get(s) {
                None => return bad(format!("state `{s}` is not mapped")),
                Some(t) if !y.skeleton().contains(t) => {
                    return bad(format!("state `{s}` maps outside the codomain (`{t}`)"))
                }
                Some(_) => {}
            }
        }
        for (p, s, t) in x.paths() {
            let Some(q) = self.path_map.get(p) else {
                return bad(format!("path `{p}` is not mapped"));
            };
            let Some((qs, qt)) = y.endpoints(q) else {
                return bad(format!("path `{p}` maps outside the codomain (`{q}`)"));
            };
            if self.state_map.get(s) != Some(qs) || self.state_map.get(t) != Some(qt) {
                return bad(format!("endpoints of `{p}` are not preserved"));
            }
        }
        for (a, b, ab) in x.composites() {
            let (fa, fb, fab) = (&self.path_map[a], &self.path_map[b], &self.path_map[ab]);
            if y.composite(fa, fb) != Some(fab) {
                return bad(format!("f(`{a}` * `{b}`) != f(`{a}`) * f(`{b}`)"));
            }
        }
        let yi = FlowIndex::new(y);
        let mut uf = yi.components();
        for (a, b) in x.adjacency() {
            let fa = yi.path(&self.path_map[a]).expect("checked above");
            let fb = yi.path(&self.path_map[b]).expect("checked above");
            if !uf.same(fa, fb) {
                return bad(format!("adjacent `{a}`, `{b}` map to different components"));
            }
        }
        Ok(())
    }
}

/// True iff `f` is a morphism of flows `x -> y`.
pub fn is_flow_morphism(f: &FlowMorphism, x: &FiniteFlow, y: &FiniteFlow) -> bool {
    f.check(x, y).is_ok()
}

/// Whether two morphisms `x -> y` are S-homotopic: equal on the 0-skeleton,
/// and every path sent into the same adj*-component of `y` by both.
pub fn s_homotopic(
    f: &FlowMorphism,
    g: &FlowMorphism,
    x: &FiniteFlow,
    y: &FiniteFlow,
) -> Result<bool> {
    f.check(x, y)?;
    g.check(x, y)?;
    if f.state_map != g.state_map {
        return Ok(false);
    }
    let yi = FlowIndex::new(y);
    let mut uf = yi.components();
    Ok(x.paths().all(|(p, _, _)| {
        let a = yi.path(&f.path_map[p]).expect("checked");
        let b = yi.path(&g.path_map[p]).expect("checked");
        uf.same(a, b)
    }))
}

/// True iff `f` is a morphism with an inverse morphism: bijective on states
/// and paths, reflecting composition and adj*-components.
pub fn is_isomorphism(f: &FlowMorphism, x: &FiniteFlow, y: &FiniteFlow) -> bool {
    if f.check(x, y).is_err() {
        return false;
    }
    let inverse_states: BTreeMap<&StateId, &StateId> =
        f.state_map.iter().map(|(k, v)| (v, k)).collect();
    let inverse: BTreeMap<&PathId, &PathId> = f.path_map.iter().map(|(k, v)| (v, k)).collect();
    if inverse_states.len() != x.skeleton().len()
        || inverse_states.len() != y.skeleton().len()
        || inverse.len() != x.path_count()
        || inverse.len() != y.path_count()
    {
        return false;
    }
    for (u, v, uv) in y.composites() {
        if x.composite(inverse[u], inverse[v]) != Some(inverse[uv]) {
            return false;
        }
    }
    let xi = FlowIndex::new(x);
    let mut uf = xi.components();
    y.adjacency().all(|(u, v)| {
        let a = xi.path(inverse[u]).expect("bijective");
        let b = xi.path(inverse[v]).expect("bijective");
        uf.same(a, b)
    })
}

enum Check {
    Compose(usize, usize, usize),
    Adjacent(usize, usize),
}

/// Backtracking enumeration of morphisms `x -> y` whose state map is a
/// bijection. Candidates are tried in index order, so results come out in
/// lexicographic order of (state map, path map).
struct MorphismSearch<'s, 'a> {
    x: &'s FlowIndex<'a>,
    y: &'s FlowIndex<'a>,
    y_component: Vec<usize>,
    injective_paths: bool,
    /// Only pair states with equal (in, out) path counts.
    match_degrees: bool,
    order: Vec<usize>,
    forced: Vec<Option<(usize, usize)>>,
    checks: Vec<Vec<Check>>,
    y_by_ends: BTreeMap<(usize, usize), Vec<usize>>,
    state_img: Vec<usize>,
    path_img: Vec<usize>,
    state_used: Vec<bool>,
    path_used: Vec<bool>,
    explored: &'s mut u64,
    budget: u64,
}

impl<'s, 'a> MorphismSearch<'s, 'a> {
    fn new(
        x: &'s FlowIndex<'a>,
        y: &'s FlowIndex<'a>,
        injective_paths: bool,
        match_degrees: bool,
        explored: &'s mut u64,
        budget: u64,
    ) -> Self {
        let n = x.len();
        // Generators first, then composites as soon as both factors are
        // placed; whatever is left (composition cycles) goes last, unforced.
        let mut is_result = alloc::vec![false; n];
        for row in &x.comp {
            for &(_, ab) in row {
                is_result[ab] = true;
            }
        }
        let mut rank = alloc::vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut forced = Vec::with_capacity(n);
        for p in 0..n {
            if !is_result[p] {
                rank[p] = order.len();
                order.push(p);
                forced.push(None);
            }
        }
        loop {
            let mut progress = false;
            for a in 0..n {
                for &(b, ab) in &x.comp[a] {
                    if rank[a] != usize::MAX && rank[b] != usize::MAX && rank[ab] == usize::MAX {
                        rank[ab] = order.len();
                        order.push(ab);
                        forced.push(Some((a, b)));
                        progress = true;
                    }
                }
            }
            if !progress {
                break;
            }
        }
        for (p, r) in rank.iter_mut().enumerate() {
            if *r == usize::MAX {
                *r = order.len();
                order.push(p);
                forced.push(None);
            }
        }

        let mut checks: Vec<Vec<Check>> = (0..n).map(|_| Vec::new()).collect();
        for a in 0..n {
            for &(b, ab) in &x.comp[a] {
                let k = rank[a].max(rank[b]).max(rank[ab]);
                checks[k].push(Check::Compose(a, b, ab));
            }
        }
        for &(a, b) in &x.adjacent {
            checks[rank[a].max(rank[b])].push(Check::Adjacent(a, b));
        }

        let mut y_by_ends: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for q in 0..y.len() {
            y_by_ends.entry((y.src[q], y.tgt[q])).or_default().push(q);
        }
        let mut uf = y.components();
        let y_component = (0..y.len()).map(|q| uf.find(q)).collect();

        MorphismSearch {
            x,
            y,
            y_component,
            injective_paths,
            match_degrees,
            order,
            forced,
            checks,
            y_by_ends,
            state_img: alloc::vec![usize::MAX; x.states.len()],
            path_img: alloc::vec![usize::MAX; n],
            state_used: alloc::vec![false; y.states.len()],
            path_used: alloc::vec![false; y.len()],
            explored,
            budget,
        }
    }

    fn tick(&mut self) -> Result<()> {
        *self.explored += 1;
        if *self.explored > self.budget {
            return Err(Error::BudgetExhausted {
                explored: *self.explored - 1,
            });
        }
        Ok(())
    }

    /// Calls `emit` on every morphism until it returns false. Returns false
    /// if stopped early.
    fn run(&mut self, emit: &mut dyn FnMut(&[usize], &[usize]) -> bool) -> Result<bool> {
        if self.x.states.len() != self.y.states.len() {
            return Ok(true);
        }
        self.assign_state(0, emit)
    }

    fn degree(ix: &FlowIndex<'_>, s: usize) -> (usize, usize) {
        (ix.ending_at(s).len(), ix.starting_at(s).len())
    }

    fn assign_state(
        &mut self,
        k: usize,
        emit: &mut dyn FnMut(&[usize], &[usize]) -> bool,
    ) -> Result<bool> {
        if k == self.x.states.len() {
            return self.assign_path(0, emit);
        }
        for t in 0..self.y.states.len() {
            if self.state_used[t] {
                continue;
            }
            if self.match_degrees && Self::degree(self.x, k) != Self::degree(self.y, t) {
                continue;
            }
            self.tick()?;
            self.state_img[k] = t;
            self.state_used[t] = true;
            let go_on = self.assign_state(k + 1, emit)?;
            self.state_used[t] = false;
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn assign_path(
        &mut self,
        k: usize,
        emit: &mut dyn FnMut(&[usize], &[usize]) -> bool,
    ) -> Result<bool> {
        if k == self.order.len() {
            return Ok(emit(&self.state_img, &self.path_img));
        }
        let p = self.order[k];
        let candidates: Vec<usize> = match self.forced[k] {
            Some((a, b)) => self
                .y
                .compose(self.path_img[a], self.path_img[b])
                .into_iter()
                .collect(),
            None => {
                let ends = (self.state_img[self.x.src[p]], self.state_img[self.x.tgt[p]]);
                self.y_by_ends.get(&ends).cloned().unwrap_or_default()
            }
        };
        for q in candidates {
            if self.injective_paths && self.path_used[q] {
                continue;
            }
            if self.y.src[q] != self.state_img[self.x.src[p]]
                || self.y.tgt[q] != self.state_img[self.x.tgt[p]]
            {
                continue;
            }
            self.tick()?;
            self.path_img[p] = q;
            if !self.checks_hold(k) {
                continue;
            }
            self.path_used[q] = true;
            let go_on = self.assign_path(k + 1, emit)?;
            self.path_used[q] = false;
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn checks_hold(&self, k: usize) -> bool {
        let img = &self.path_img;
        self.checks[k].iter().all(|c| match *c {
            Check::Compose(a, b, ab) => self.y.compose(img[a], img[b]) == Some(img[ab]),
            Check::Adjacent(a, b) => self.y_component[img[a]] == self.y_component[img[b]],
        })
    }
}

fn to_morphism(
    x: &FlowIndex<'_>,
    y: &FlowIndex<'_>,
    states: &[usize],
    paths: &[usize],
) -> FlowMorphism {
    FlowMorphism {
        state_map: states
            .iter()
            .enumerate()
            .map(|(i, &t)| (x.states[i].clone(), y.states[t].clone()))
            .collect(),
        path_map: paths
            .iter()
            .enumerate()
            .map(|(i, &q)| (x.ids[i].clone(), y.ids[q].clone()))
            .collect(),
    }
}

/// Searches for morphisms `f: x -> y`, `g: y -> x` with `g∘f` S-homotopic to
/// the identity of `x` and `f∘g` to the identity of `y`.
///
/// Returns the first witness in lexicographic order, `None` once the search
/// space is exhausted, or [`Error::BudgetExhausted`] if more than `budget`
/// candidates would be needed to decide.
pub fn s_equivalent(
    x: &FiniteFlow,
    y: &FiniteFlow,
    budget: u64,
) -> Result<Option<(FlowMorphism, FlowMorphism)>> {
    validate_flow(x).into_result()?;
    validate_flow(y).into_result()?;
    // S-homotopic maps agree on states, so both state maps are bijections
    // inverse to each other.
    if x.skeleton().len() != y.skeleton().len() {
        return Ok(None);
    }
    let xi = FlowIndex::new(x);
    let yi = FlowIndex::new(y);
    let mut explored = 0u64;

    let mut forward: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    MorphismSearch::new(&xi, &yi, false, false, &mut explored, budget).run(&mut |s, p| {
        forward.push((s.to_vec(), p.to_vec()));
        true
    })?;
    let mut backward: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    MorphismSearch::new(&yi, &xi, false, false, &mut explored, budget).run(&mut |s, p| {
        backward.entry(s.to_vec()).or_default().push(p.to_vec());
        true
    })?;

    let x_comp: Vec<usize> = {
        let mut uf = xi.components();
        (0..xi.len()).map(|i| uf.find(i)).collect()
    };
    let y_comp: Vec<usize> = {
        let mut uf = yi.components();
        (0..yi.len()).map(|i| uf.find(i)).collect()
    };

    for (fs, fp) in &forward {
        let mut gs = alloc::vec![0; fs.len()];
        for (i, &t) in fs.iter().enumerate() {
            gs[t] = i;
        }
        let Some(gps) = backward.get(&gs) else {
            continue;
        };
        for gp in gps {
            explored += 1;
            if explored > budget {
                return Err(Error::BudgetExhausted {
                    explored: explored - 1,
                });
            }
            let gf_ok = (0..xi.len()).all(|p| x_comp[gp[fp[p]]] == x_comp[p]);
            let fg_ok = gf_ok && (0..yi.len()).all(|q| y_comp[fp[gp[q]]] == y_comp[q]);
            if fg_ok {
                return Ok(Some((
                    to_morphism(&xi, &yi, fs, fp),
                    to_morphism(&yi, &xi, &gs, gp),
                )));
            }
        }
    }
    Ok(None)
}

/// Exhaustive isomorphism search with pruning on cardinalities and on the
/// (in, out) path counts of states.
pub fn find_isomorphism(
    x: &FiniteFlow,
    y: &FiniteFlow,
    budget: u64,
) -> Result<Option<FlowMorphism>> {
    if x.skeleton().len() != y.skeleton().len()
        || x.path_count() != y.path_count()
        || x.composite_count() != y.composite_count()
        || x.path_components().len() != y.path_components().len()
    {
        return Ok(None);
    }
    let xi = FlowIndex::new(x);
    let yi = FlowIndex::new(y);
    let fingerprint = |ix: &FlowIndex<'_>| {
        let mut v: Vec<_> = (0..ix.states.len())
            .map(|s| MorphismSearch::degree(ix, s))
            .collect();
        v.sort_unstable();
        v
    };
    if fingerprint(&xi) != fingerprint(&yi) {
        return Ok(None);
    }
    let mut explored = 0u64;
    let mut found = None;
    MorphismSearch::new(&xi, &yi, true, true, &mut explored, budget).run(&mut |s, p| {
        let f = to_morphism(&xi, &yi, s, p);
        if is_isomorphism(&f, x, y) {
            found = Some(f);
            false
        } else {
            true
        }
    })?;
    Ok(found)
}
