//! Brute-force interleaving oracle for PV programs.
//!
//! Works directly on schedules (sequences of process indices) and resource
//! counters. Shares no code with the library: no complexes, no flows.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    P,
    V,
    A,
}

#[derive(Clone, Debug)]
pub struct OracleProgram {
    pub capacities: BTreeMap<String, u32>,
    /// `(op, resource-or-label)` per step.
    pub processes: Vec<Vec<(Op, String)>>,
}

impl OracleProgram {
    pub fn new(caps: &[(&str, u32)], procs: &[&[(Op, &str)]]) -> Self {
        OracleProgram {
            capacities: caps.iter().map(|(n, c)| (n.to_string(), *c)).collect(),
            processes: procs
                .iter()
                .map(|p| p.iter().map(|(o, r)| (*o, r.to_string())).collect())
                .collect(),
        }
    }

    fn permitted(&self, pos: &[usize]) -> bool {
        let mut usage: BTreeMap<&str, i64> = BTreeMap::new();
        for (proc, &upto) in self.processes.iter().zip(pos) {
            for (op, name) in &proc[..upto] {
                match op {
                    Op::P => *usage.entry(name).or_default() += 1,
                    Op::V => *usage.entry(name).or_default() -= 1,
                    Op::A => {}
                }
            }
        }
        usage
            .iter()
            .all(|(name, used)| *used <= i64::from(self.capacities[*name]))
    }

    fn is_final(&self, pos: &[usize]) -> bool {
        pos.iter().zip(&self.processes).all(|(&i, p)| i == p.len())
    }

    fn step(&self, pos: &[usize], k: usize) -> Option<Vec<usize>> {
        if pos[k] >= self.processes[k].len() {
            return None;
        }
        let mut next = pos.to_vec();
        next[k] += 1;
        self.permitted(&next).then_some(next)
    }

    /// Every permitted state tuple, reachable or not.
    pub fn permitted_states(&self) -> usize {
        let mut count = 0;
        let mut pos = vec![0usize; self.processes.len()];
        loop {
            if self.permitted(&pos) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == pos.len() {
                    return count;
                }
                if pos[k] < self.processes[k].len() {
                    pos[k] += 1;
                    break;
                }
                pos[k] = 0;
                k += 1;
            }
        }
    }

    /// Reachable, non-final states with no enabled step (BFS from the origin).
    pub fn deadlocks(&self) -> Vec<Vec<usize>> {
        let start = vec![0usize; self.processes.len()];
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        let mut dead = Vec::new();
        while let Some(pos) = queue.pop_front() {
            let succ: Vec<_> = (0..pos.len()).filter_map(|k| self.step(&pos, k)).collect();
            if succ.is_empty() && !self.is_final(&pos) {
                dead.push(pos.clone());
            }
            for s in succ {
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        dead.sort();
        dead
    }

    /// All complete schedules from the origin to the all-finished state.
    pub fn schedules(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut word = Vec::new();
        let start = vec![0usize; self.processes.len()];
        self.extend(&start, &mut word, &mut out);
        out
    }

    fn extend(&self, pos: &[usize], word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if self.is_final(pos) {
            out.push(word.clone());
            return;
        }
        for k in 0..pos.len() {
            if let Some(next) = self.step(pos, k) {
                word.push(k);
                self.extend(&next, word, out);
                word.pop();
            }
        }
    }

    fn valid_schedule(&self, word: &[usize]) -> bool {
        let mut pos = vec![0usize; self.processes.len()];
        for &k in word {
            match self.step(&pos, k) {
                Some(next) => pos = next,
                None => return false,
            }
        }
        true
    }

    /// Classes of complete schedules under swaps of adjacent steps of
    /// distinct processes that stay inside the permitted region.
    pub fn schedule_classes(&self) -> Vec<BTreeSet<Vec<usize>>> {
        let all: BTreeSet<Vec<usize>> = self.schedules().into_iter().collect();
        let mut unvisited = all.clone();
        let mut classes = Vec::new();
        while let Some(seed) = unvisited.iter().next().cloned() {
            unvisited.remove(&seed);
            let mut class = BTreeSet::from([seed.clone()]);
            let mut queue = VecDeque::from([seed]);
            while let Some(w) = queue.pop_front() {
                for i in 0..w.len().saturating_sub(1) {
                    if w[i] == w[i + 1] {
                        continue;
                    }
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    if self.valid_schedule(&swapped) && unvisited.remove(&swapped) {
                        class.insert(swapped.clone());
                        queue.push_back(swapped);
                    }
                }
            }
            classes.push(class);
        }
        classes
    }
}

pub fn mutex() -> OracleProgram {
    OracleProgram::new(
        &[("a", 1)],
        &[&[(Op::P, "a"), (Op::V, "a")], &[(Op::P, "a"), (Op::V, "a")]],
    )
}

pub fn swiss_flag() -> OracleProgram {
    OracleProgram::new(
        &[("a", 1), ("b", 1)],
        &[
            &[(Op::P, "a"), (Op::P, "b"), (Op::V, "b"), (Op::V, "a")],
            &[(Op::P, "b"), (Op::P, "a"), (Op::V, "a"), (Op::V, "b")],
        ],
    )
}

pub fn dining_philosophers() -> OracleProgram {
    OracleProgram::new(
        &[("f0", 1), ("f1", 1), ("f2", 1)],
        &[
            &[(Op::P, "f0"), (Op::P, "f1"), (Op::V, "f1"), (Op::V, "f0")],
            &[(Op::P, "f1"), (Op::P, "f2"), (Op::V, "f2"), (Op::V, "f1")],
            &[(Op::P, "f2"), (Op::P, "f0"), (Op::V, "f0"), (Op::V, "f2")],
        ],
    )
}

pub const MUTEX_SRC: &str = "res a 1;\nproc: P(a).V(a)\nproc: P(a).V(a)\n";
pub const SWISS_FLAG_SRC: &str =
    "res a 1; res b 1;\nproc: P(a).P(b).V(b).V(a)\nproc: P(b).P(a).V(a).V(b)\n";
pub const DINING_SRC: &str = "res f0 1; res f1 1; res f2 1;\n\
proc: P(f0).P(f1).V(f1).V(f0)\n\
proc: P(f1).P(f2).V(f2).V(f1)\n\
proc: P(f2).P(f0).V(f0).V(f2)\n";
