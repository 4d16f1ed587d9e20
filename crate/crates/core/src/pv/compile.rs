use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{PvProgram, StepKind};
use crate::globular::{Edge, ExecPath, GlobularComplex};
use crate::ids::{EdgeId, SquareId, StateId};

/// Name of the product state where process `k` has done `pos[k]` steps,
/// e.g. `p0:1,p1:0`.
pub fn state_name(pos: &[usize]) -> StateId {
    let mut s = String::new();
    for (k, i) in pos.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "p{k}:{i}");
    }
    StateId::new(s)
}

fn edge_name(pos: &[usize], k: usize) -> EdgeId {
    EdgeId::new(format!("{}/p{k}", state_name(pos)))
}

/// Per process, per position: how many units of each resource it holds.
struct Holdings {
    names: Vec<String>,
    caps: Vec<u32>,
    held: Vec<Vec<Vec<u32>>>,
}

impl Holdings {
    fn new(prog: &PvProgram) -> Self {
        let names: Vec<String> = prog.resources.keys().cloned().collect();
        let caps = prog.resources.values().copied().collect();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let held = prog
            .processes
            .iter()
            .map(|steps| {
                let mut cur = vec![0u32; names.len()];
                let mut rows = vec![cur.clone()];
                for s in steps {
                    match &s.kind {
                        StepKind::Acquire(r) => cur[index[r.as_str()]] += 1,
                        StepKind::Release(r) => cur[index[r.as_str()]] -= 1,
                        StepKind::Act(_) => {}
                    }
                    rows.push(cur.clone());
                }
                rows
            })
            .collect();
        Holdings { names, caps, held }
    }

    fn permitted(&self, pos: &[usize]) -> bool {
        (0..self.names.len()).all(|r| {
            let used: u64 = pos
                .iter()
                .enumerate()
                .map(|(k, &i)| u64::from(self.held[k][i][r]))
                .sum();
            used <= u64::from(self.caps[r])
        })
    }
}

/// Geometric semantics of a program: states are the permitted position
/// tuples, edges are single steps between permitted states, and squares fill
/// every pair of steps by different processes whose four corners are
/// permitted. The all-finished tuple is final when permitted.
pub fn pv_to_complex(prog: &PvProgram) -> GlobularComplex {
    let h = Holdings::new(prog);
    let lens: Vec<usize> = prog.processes.iter().map(Vec::len).collect();
    let n = lens.len();
    let mut c = GlobularComplex::new();

    let mut tuples = Vec::new();
    let mut pos = vec![0usize; n];
    'tuples: loop {
        if h.permitted(&pos) {
            tuples.push(pos.clone());
        }
        // Mixed-radix increment, last process fastest.
        let mut k = n;
        loop {
            if k == 0 {
                break 'tuples;
            }
            k -= 1;
            if pos[k] < lens[k] {
                pos[k] += 1;
                pos[k + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }

    for t in &tuples {
        c.add_state(state_name(t));
    }
    let step = |t: &[usize], k: usize| -> Option<Vec<usize>> {
        if t[k] >= lens[k] {
            return None;
        }
        let mut u = t.to_vec();
        u[k] += 1;
        h.permitted(&u).then_some(u)
    };
    for t in &tuples {
        for k in 0..n {
            if let Some(u) = step(t, k) {
                c.insert_edge(Edge {
                    id: edge_name(t, k),
                    source: state_name(t),
                    target: state_name(&u),
                    label: Some(format!("{}", prog.processes[k][t[k]].kind)),
                })
                .expect("edge names are unique per state and process");
            }
        }
    }
    for t in &tuples {
        for k in 0..n {
            let Some(tk) = step(t, k) else { continue };
            for l in k + 1..n {
                let Some(tl) = step(t, l) else { continue };
                let Some(tkl) = step(&tk, l) else { continue };
                let left = ExecPath::new(vec![edge_name(t, k), edge_name(&tk, l)]);
                let right = ExecPath::new(vec![edge_name(t, l), edge_name(&tl, k)]);
                let id = SquareId::new(format!("{}/p{k}|p{l}", state_name(t)));
                debug_assert_eq!(tkl, {
                    let mut v = tl.clone();
                    v[k] += 1;
                    v
                });
                c.add_square(id, left, right)
                    .expect("square names are unique per state and pair");
            }
        }
    }
    let end = prog.final_state();
    if c.has_state(&end) {
        c.add_final(end);
    }
    c
}
