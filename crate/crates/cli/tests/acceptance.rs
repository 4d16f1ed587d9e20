//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod support;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use dihomo::{dot, format, load, Model, Query};
use dihomo_core::{
    check_t_dihomotopy, deadlocks, find_isomorphism, germs, glob_discrete, glob_flow, parse_pv,
    path_classes, pv_to_complex, realize, realize_morphism, s_equivalent, subdivide_edge,
    validate_complex, validate_flow, ExecPath, FiniteFlow, GermSign, GlobularComplex, PathId,
    StateId, DEFAULT_SEARCH_BUDGET,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::pv_oracle::{self, Op, OracleProgram};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------------------
// Random complexes, generated without the library's path machinery.

/// Paths of a DAG given as `(id, src, tgt)` edges, by depth-first search.
fn dag_paths(edges: &[(String, usize, usize)]) -> Vec<(Vec<String>, usize, usize)> {
    fn walk(
        edges: &[(String, usize, usize)],
        start: usize,
        at: usize,
        word: &mut Vec<String>,
        out: &mut Vec<(Vec<String>, usize, usize)>,
    ) {
        for (id, s, t) in edges {
            if *s == at {
                word.push(id.clone());
                out.push((word.clone(), start, *t));
                walk(edges, start, *t, word, out);
                word.pop();
            }
        }
    }
    let mut out = Vec::new();
    let starts: BTreeSet<usize> = edges.iter().map(|e| e.1).collect();
    for s in starts {
        walk(edges, s, s, &mut Vec::new(), &mut out);
    }
    out
}

fn random_complex(
    rng: &mut ChaCha8Rng,
    max_states: usize,
    max_edges: usize,
    max_squares: usize,
) -> GlobularComplex {
    let n = rng.gen_range(1..=max_states);
    let mut edges = Vec::new();
    if n > 1 {
        for k in 0..rng.gen_range(0..=max_edges) {
            let a = rng.gen_range(0..n - 1);
            let b = rng.gen_range(a + 1..n);
            edges.push((format!("e{k}"), a, b));
        }
    }
    let paths = dag_paths(&edges);
    let mut parallel = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        for q in &paths[i + 1..] {
            if (p.1, p.2) == (q.1, q.2) {
                parallel.push((p.0.clone(), q.0.clone()));
            }
        }
    }
    let mut c = GlobularComplex::new();
    for i in 0..n {
        c.add_state(format!("s{i}"));
    }
    for (id, a, b) in &edges {
        c.add_edge(id.as_str(), format!("s{a}"), format!("s{b}"))
            .unwrap();
    }
    if !parallel.is_empty() {
        for k in 0..rng.gen_range(0..=max_squares) {
            let (l, r) = &parallel[rng.gen_range(0..parallel.len())];
            let side = |w: &Vec<String>| w.iter().map(|e| e.as_str().into()).collect::<ExecPath>();
            c.add_square(format!("q{k}"), side(l), side(r)).unwrap();
        }
    }
    c
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let (mut paths, mut pairs, mut squares) = (0, 0, 0);
    for i in 0..256 {
        let c = random_complex(&mut rng, 8, 12, 4);
        ensure!(validate_complex(&c).is_ok(), "complex {i} is invalid");
        let x = realize(&c).map_err(|e| format!("complex {i}: {e}"))?;
        let report = validate_flow(&x);
        ensure!(report.is_ok(), "complex {i}: {:?}", report.violations);
        ensure!(
            x.skeleton() == c.states(),
            "complex {i}: skeleton differs from states"
        );
        paths += x.path_count();
        pairs += x.composable_pair_count();
        squares += c.square_count();
    }
    Ok(format!(
        "256 complexes, {paths} paths, {pairs} composable pairs, {squares} squares, 0 violations"
    ))
}

fn criterion_2() -> Outcome {
    for n in 1..=6 {
        let z: Vec<String> = (0..n).map(|i| format!("z{i}")).collect();
        let x = realize(&glob_discrete(z.iter().map(String::as_str)).unwrap())
            .map_err(|e| e.to_string())?;
        let g = glob_flow(z.iter().map(String::as_str)).unwrap();
        ensure!(
            x.composable_pair_count() == 0,
            "|Z|={n}: composable pairs in the realization"
        );
        ensure!(
            g.composable_pair_count() == 0,
            "|Z|={n}: composable pairs in the globe"
        );
        let iso = find_isomorphism(&x, &g, DEFAULT_SEARCH_BUDGET).map_err(|e| e.to_string())?;
        ensure!(iso.is_some(), "|Z|={n}: no isomorphism found");
    }
    Ok("|Z| = 1..6 isomorphic, 0 composable pairs".into())
}

/// Germ classes by brute force: the prefix (minus) or suffix (plus)
/// relation on edge words, closed transitively with Floyd-Warshall.
fn germ_oracle(x: &FiniteFlow, state: &StateId, sign: GermSign) -> BTreeSet<BTreeSet<PathId>> {
    let members: Vec<(PathId, Vec<String>)> = x
        .paths()
        .filter(|(_, s, t)| match sign {
            GermSign::Minus => *s == state,
            GermSign::Plus => *t == state,
        })
        .map(|(p, _, _)| (p.clone(), p.as_str().split('*').map(String::from).collect()))
        .collect();
    let n = members.len();
    let mut r = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&members[i].1, &members[j].1);
            let extends = a.len() <= b.len()
                && match sign {
                    GermSign::Minus => b[..a.len()] == a[..],
                    GermSign::Plus => b[b.len() - a.len()..] == a[..],
                };
            if extends {
                r[i][j] = true;
                r[j][i] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| r[i][j])
                .map(|j| members[j].0.clone())
                .collect()
        })
        .collect()
}

fn grid() -> GlobularComplex {
    let mut c = GlobularComplex::new();
    for s in ["00", "10", "01", "11"] {
        c.add_state(s);
    }
    c.add_edge("h0", "00", "10").unwrap();
    c.add_edge("v1", "10", "11").unwrap();
    c.add_edge("v0", "00", "01").unwrap();
    c.add_edge("h1", "01", "11").unwrap();
    let side = |w: [&str; 2]| w.into_iter().map(Into::into).collect::<ExecPath>();
    c.add_square("sq", side(["h0", "v1"]), side(["v0", "h1"]))
        .unwrap();
    c.add_final("11");
    c
}

fn chain(n: usize) -> GlobularComplex {
    let mut c = GlobularComplex::new();
    for i in 0..=n {
        c.add_state(format!("s{i}"));
    }
    for i in 1..=n {
        c.add_edge(format!("e{i}"), format!("s{}", i - 1), format!("s{i}"))
            .unwrap();
    }
    c
}

fn criterion_3() -> Outcome {
    let mut cases: Vec<(String, GlobularComplex)> =
        (1..=6).map(|n| (format!("chain {n}"), chain(n))).collect();
    cases.push(("2x2 grid".into(), grid()));
    let mut checked = 0;
    for (name, c) in &cases {
        let x = realize(c).map_err(|e| e.to_string())?;
        for s in c.states() {
            for sign in [GermSign::Minus, GermSign::Plus] {
                let got: BTreeSet<BTreeSet<PathId>> = germs(&x, s, sign)
                    .map_err(|e| e.to_string())?
                    .classes
                    .into_iter()
                    .map(|c| c.into_iter().collect())
                    .collect();
                let want = germ_oracle(&x, s, sign);
                ensure!(
                    got == want,
                    "{name}, {sign} germs at {s}: {got:?} != {want:?}"
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} germ sets equal to the closure oracle"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut done = 0;
    while done < 50 {
        let c = random_complex(&mut rng, 6, 8, 3);
        if c.edge_count() == 0 {
            continue;
        }
        let edges: Vec<_> = c.edges().map(|e| e.id.clone()).collect();
        let e = &edges[rng.gen_range(0..edges.len())];
        let (d, m) = subdivide_edge(&c, e).map_err(|err| err.to_string())?;
        let f = realize_morphism(&m, &c, &d).map_err(|err| err.to_string())?;
        let (x, y) = (realize(&c).unwrap(), realize(&d).unwrap());
        let report = check_t_dihomotopy(&f, &x, &y).map_err(|err| err.to_string())?;
        ensure!(
            report.conditions().iter().all(|c| c.holds),
            "subdividing {e} in complex {done}: {report}"
        );
        done += 1;
    }
    Ok("50 subdivisions, conditions 1, 2 and 3 each hold".into())
}

fn criterion_5() -> Outcome {
    let edge = realize(&glob_discrete(["c"]).unwrap()).unwrap();
    let mut bigon = glob_discrete(["a", "b"]).unwrap();
    let side = |e: &str| std::iter::once(e.into()).collect::<ExecPath>();
    bigon.add_square("q", side("a"), side("b")).unwrap();
    let filled = realize(&bigon).unwrap();
    let open = realize(&glob_discrete(["a", "b"]).unwrap()).unwrap();

    let witness = s_equivalent(&filled, &edge, DEFAULT_SEARCH_BUDGET).map_err(|e| e.to_string())?;
    ensure!(witness.is_some(), "no witness for the filled pair");
    // A budget of 10^3 candidates must suffice for the negative answer.
    match s_equivalent(&open, &edge, 1_000) {
        Ok(None) => {}
        Ok(Some(_)) => return Err("unfilled pair reported equivalent".into()),
        Err(e) => return Err(format!("unfilled pair: {e}")),
    }
    Ok("witness with the square, none without it (budget 1000)".into())
}

struct CorpusEntry {
    name: &'static str,
    src: &'static str,
    oracle: OracleProgram,
}

fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "mutex",
            src: pv_oracle::MUTEX_SRC,
            oracle: pv_oracle::mutex(),
        },
        CorpusEntry {
            name: "swiss flag",
            src: pv_oracle::SWISS_FLAG_SRC,
            oracle: pv_oracle::swiss_flag(),
        },
        CorpusEntry {
            name: "dining philosophers",
            src: pv_oracle::DINING_SRC,
            oracle: pv_oracle::dining_philosophers(),
        },
        // Three processes, at most two inside at once: probes whether
        // pairwise squares capture every commutation.
        CorpusEntry {
            name: "three-way semaphore",
            src: "res a 2; proc: P(a).V(a) proc: P(a).V(a) proc: P(a).V(a)",
            oracle: OracleProgram::new(
                &[("a", 2)],
                &[
                    &[(Op::P, "a"), (Op::V, "a")],
                    &[(Op::P, "a"), (Op::V, "a")],
                    &[(Op::P, "a"), (Op::V, "a")],
                ],
            ),
        },
    ]
}

fn tuple_name(pos: &[usize]) -> StateId {
    let parts: Vec<String> = pos
        .iter()
        .enumerate()
        .map(|(k, i)| format!("p{k}:{i}"))
        .collect();
    StateId::new(parts.join(","))
}

fn criterion_6() -> Outcome {
    let expected = [
        ("mutex", None, Some(2)),
        ("swiss flag", Some(1), None),
        ("dining philosophers", Some(1), None),
        ("three-way semaphore", Some(0), None),
    ];
    let mut summary = Vec::new();
    for (entry, (name, want_dead, want_classes)) in corpus().into_iter().zip(expected) {
        assert_eq!(entry.name, name);
        let started = Instant::now();
        let prog = parse_pv(entry.src).map_err(|e| e.to_string())?;
        let c = pv_to_complex(&prog);
        let x = realize(&c).map_err(|e| e.to_string())?;
        let (init, end) = (prog.initial_state(), prog.final_state());
        let dead = deadlocks(&x, &init, c.finals()).map_err(|e| e.to_string())?;
        let classes = path_classes(&c, &init, &end).map_err(|e| e.to_string())?;
        let elapsed = started.elapsed();

        let oracle_dead: BTreeSet<StateId> = entry
            .oracle
            .deadlocks()
            .iter()
            .map(|p| tuple_name(p))
            .collect();
        let oracle_classes = entry.oracle.schedule_classes();
        ensure!(
            dead == oracle_dead,
            "{name}: deadlocks {dead:?} != oracle {oracle_dead:?}"
        );
        ensure!(
            classes.len() == oracle_classes.len(),
            "{name}: {} classes != oracle {}",
            classes.len(),
            oracle_classes.len()
        );
        ensure!(
            c.states().len() == entry.oracle.permitted_states(),
            "{name}: {} states != oracle {}",
            c.states().len(),
            entry.oracle.permitted_states()
        );
        let schedules = entry.oracle.schedules().len();
        let paths: usize = classes.iter().map(Vec::len).sum();
        ensure!(
            paths == schedules,
            "{name}: {paths} init-final paths != oracle {schedules}"
        );
        if let Some(n) = want_dead {
            ensure!(
                dead.len() == n,
                "{name}: {} deadlocks, expected {n}",
                dead.len()
            );
        }
        if let Some(n) = want_classes {
            ensure!(
                classes.len() == n,
                "{name}: {} classes, expected {n}",
                classes.len()
            );
        }
        let dot_nodes = dot::complex_to_dot(&c)
            .lines()
            .filter(|l| l.trim_start().starts_with('"') && !l.contains(" -> "))
            .count();
        ensure!(
            dot_nodes == c.states().len(),
            "{name}: DOT has {dot_nodes} nodes"
        );
        ensure!(
            elapsed < Duration::from_secs(10),
            "{name}: took {elapsed:?}"
        );
        summary.push(format!(
            "{name}: {} deadlock(s), {} class(es) in {:.0?}",
            dead.len(),
            classes.len(),
            elapsed
        ));
    }
    Ok(summary.join("; "))
}

/// Every pair of states: square-move classes equal adj*-components.
fn homotopy_agreement(c: &GlobularComplex) -> Result<(), String> {
    let x = realize(c).map_err(|e| e.to_string())?;
    let mut by_ends: BTreeMap<(&StateId, &StateId), Vec<Vec<PathId>>> = BTreeMap::new();
    for comp in x.path_components() {
        let ends = x.endpoints(&comp[0]).expect("component members are paths");
        by_ends.entry(ends).or_default().push(comp);
    }
    for a in c.states() {
        for b in c.states() {
            let mut classes: Vec<Vec<PathId>> = path_classes(c, a, b)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|cl| {
                    let mut ids: Vec<PathId> = cl.iter().map(ExecPath::path_id).collect();
                    ids.sort();
                    ids
                })
                .collect();
            classes.sort();
            let mut comps = by_ends.remove(&(a, b)).unwrap_or_default();
            comps.sort();
            ensure!(classes == comps, "{a} -> {b}: {classes:?} != {comps:?}");
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut entries: Vec<(String, GlobularComplex)> = corpus()
        .into_iter()
        .map(|e| (e.name.to_string(), pv_to_complex(&parse_pv(e.src).unwrap())))
        .collect();
    entries.push(("2x2 grid".into(), grid()));
    entries.push(("chain 4".into(), chain(4)));
    entries.push(("globe {a,b}".into(), glob_discrete(["a", "b"]).unwrap()));
    for (name, c) in &entries {
        homotopy_agreement(c).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} corpus entries, all state pairs", entries.len()))
}

// ---------------------------------------------------------------------------
// CLI determinism.

struct Run {
    code: Option<i32>,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

fn run_cli(args: &[&str], dir: &Path) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_dihomo"))
        .args(args)
        .current_dir(dir)
        .env_remove(dihomo::BUDGET_VAR)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code(),
        stdout: out.stdout,
        stderr: out.stderr,
    }
}

fn criterion_8() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let write = |name: &str, text: &str| std::fs::write(d.join(name), text).unwrap();
    write("mutex.pv", pv_oracle::MUTEX_SRC);
    write("swiss.pv", pv_oracle::SWISS_FLAG_SRC);
    write("dining.pv", pv_oracle::DINING_SRC);
    write(
        "grid.json",
        &format::to_json(&format::ComplexDoc::from_complex(&grid())),
    );
    let mut bigon = glob_discrete(["a", "b"]).unwrap();
    let side = |e: &str| std::iter::once(e.into()).collect::<ExecPath>();
    bigon.add_square("q", side("a"), side("b")).unwrap();
    write(
        "bigon.json",
        &format::to_json(&format::ComplexDoc::from_complex(&bigon)),
    );
    write(
        "glob.json",
        &format::to_json(&format::ComplexDoc::from_complex(
            &glob_discrete(["a", "b"]).unwrap(),
        )),
    );
    write(
        "edge.json",
        &format::to_json(&format::ComplexDoc::from_complex(
            &glob_discrete(["c"]).unwrap(),
        )),
    );
    write(
        "cyclic.json",
        r#"{"states": ["u", "v"], "edges": [{"id": "a", "src": "u", "tgt": "v"}, {"id": "b", "src": "v", "tgt": "u"}]}"#,
    );

    // Produces the files later commands read.
    let setup: &[&[&str]] = &[
        &["realize", "--pv", "swiss.pv", "-o", "swiss.flow.json"],
        &[
            "subdivide",
            "grid.json",
            "--edge",
            "h0",
            "-o",
            "sub.json",
            "--morphism",
            "sub.morphism.json",
        ],
    ];
    for args in setup {
        let r = run_cli(args, d);
        ensure!(
            r.code == Some(0),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&r.stderr)
        );
    }

    let commands: &[(&[&str], i32, &str)] = &[
        (&["compile", "mutex.pv"], 0, "\"states\""),
        (&["realize", "grid.json"], 0, "\"h0*v1\""),
        (&["realize", "--pv", "swiss.pv"], 0, "\"skeleton\""),
        (&["realize", "cyclic.json"], 2, "cyclic 1-skeleton"),
        (&["validate", "grid.json"], 0, "ok: 4 states"),
        (&["validate", "swiss.flow.json"], 0, "ok: 20 states"),
        (&["dot", "grid.json"], 0, "digraph complex"),
        (
            &["dot", "--realized", "--pv", "mutex.pv"],
            0,
            "digraph flow",
        ),
        (
            &[
                "subdivide",
                "grid.json",
                "--edge",
                "v1",
                "--morphism",
                "v1.morphism.json",
            ],
            0,
            "v1.mid",
        ),
        (
            &["analyze", "--pv", "mutex.pv", "--classes", "init", "final"],
            0,
            "2 classes\n",
        ),
        (
            &["analyze", "--pv", "dining.pv", "--deadlocks"],
            0,
            "1 deadlock\n",
        ),
        (
            &[
                "analyze",
                "swiss.flow.json",
                "--deadlocks",
                "--init",
                "p0:0,p1:0",
                "--final",
                "p0:4,p1:4",
            ],
            0,
            "1 deadlock\n  p0:1,p1:1\n",
        ),
        (
            &["analyze", "glob.json", "--germs", "0", "--minus"],
            0,
            "2 germs\n",
        ),
        (
            &["analyze", "grid.json", "--germs", "11", "--plus"],
            0,
            "germ",
        ),
        (
            &["analyze", "sub.json", "--t-check", "sub.morphism.json"],
            0,
            "T-dihomotopy: yes (1 ok, 2 ok, 3 ok)\n",
        ),
        (
            &["analyze", "bigon.json", "--s-equiv", "edge.json"],
            0,
            "S-equivalent: yes\n",
        ),
        (
            &["analyze", "glob.json", "--s-equiv", "edge.json"],
            0,
            "S-equivalent: no\n",
        ),
    ];
    for (args, code, needle) in commands {
        let first = run_cli(args, d);
        let second = run_cli(args, d);
        ensure!(
            first.code == Some(*code),
            "{args:?} exited {:?}: {}",
            first.code,
            String::from_utf8_lossy(&first.stderr)
        );
        ensure!(
            first.stdout == second.stdout
                && first.stderr == second.stderr
                && first.code == second.code,
            "{args:?} is not deterministic"
        );
        let text = format!(
            "{}{}",
            String::from_utf8_lossy(&first.stdout),
            String::from_utf8_lossy(&first.stderr)
        );
        ensure!(
            text.contains(needle),
            "{args:?} output lacks {needle:?}: {text}"
        );
    }

    // Written files are reproducible too.
    let again = run_cli(
        &[
            "subdivide",
            "grid.json",
            "--edge",
            "h0",
            "-o",
            "sub2.json",
            "--morphism",
            "sub2.morphism.json",
        ],
        d,
    );
    ensure!(again.code == Some(0), "second subdivide failed");
    for (a, b) in [
        ("sub.json", "sub2.json"),
        ("sub.morphism.json", "sub2.morphism.json"),
    ] {
        ensure!(
            std::fs::read(d.join(a)).unwrap() == std::fs::read(d.join(b)).unwrap(),
            "{a} differs from {b}"
        );
    }

    // The binary prints what the library returns.
    let model = load(&d.join("mutex.pv"), true).map_err(|e| e.to_string())?;
    let lib = dihomo::cmd_analyze(
        &model,
        &Query::Classes {
            from: "init".into(),
            to: "final".into(),
        },
    )
    .map_err(|e| e.to_string())?;
    let bin = run_cli(
        &["analyze", "--pv", "mutex.pv", "--classes", "init", "final"],
        d,
    );
    ensure!(
        bin.stdout == lib.as_bytes(),
        "binary output differs from library output"
    );
    let flow = std::fs::read_to_string(d.join("swiss.flow.json")).unwrap();
    let Model::Flow(x) = load(&d.join("swiss.flow.json"), false).map_err(|e| e.to_string())? else {
        return Err("realize did not write a flow".into());
    };
    ensure!(validate_flow(&x).is_ok(), "re-read flow fails validation");
    ensure!(
        flow == dihomo::cmd_realize(&Model::Flow(x)).unwrap(),
        "flow file is not canonical"
    );

    // Budget exhaustion has its own exit code.
    let exhausted = Command::new(env!("CARGO_BIN_EXE_dihomo"))
        .args(["analyze", "bigon.json", "--s-equiv", "edge.json"])
        .current_dir(d)
        .env(dihomo::BUDGET_VAR, "1")
        .output()
        .unwrap();
    ensure!(
        exhausted.status.code() == Some(3),
        "budget exhaustion exited {:?}",
        exhausted.status.code()
    );

    Ok(format!(
        "{} commands byte-identical across runs",
        commands.len() + setup.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("flow axioms on random realizations", criterion_1),
        ("glob coherence", criterion_2),
        ("germ oracle", criterion_3),
        ("T-dihomotopy of subdivisions", criterion_4),
        ("S-equivalence of the curated pair", criterion_5),
        ("PV corpus against the interleaving oracle", criterion_6),
        ("square-move classes equal adj*-components", criterion_7),
        ("CLI determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = started.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{took:.1?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{took:.1?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
