//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every criterion has zero tolerance and a pinned wall-clock
//! bound.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wbo_core::balance::{apply_eulerian_reversal, is_ell_bounded, BalanceChecker};
use wbo_core::connectivity::{arc_disjoint_paths, lambda_directed, lambda_matrix, lambda_undirected};
use wbo_core::oracle::generate::{complete4, k33, prism, theta};
use wbo_core::oracle::{
    all_vertex_covers, find_circuit, min_vertex_cover, nash_williams_witness, perturb_by_eulerian,
    random_cubic_multigraph,
};
use wbo_core::reduction::convenient::convenient_from_mask;
use wbo_core::reduction::{
    build_partial_f, build_ubbbo, build_ubwbo, check_vfasf, convenientize, cover_to_orientation, decide_ubwbo,
    is_convenient, lift_orientation, orientation_to_cover, restrict_orientation, CvcInstance, ReductionArtifact,
};
use wbo_core::{EdgeId, MixedGraph, Orientation, VertexId};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ubwbo(h: MixedGraph, k: usize) -> ReductionArtifact {
    build_ubwbo(&CvcInstance::new(h, k).expect("cubic")).expect("builds")
}

fn named() -> Vec<(&'static str, MixedGraph)> {
    vec![
        ("theta", theta()),
        ("K4", complete4()),
        ("K33", k33()),
        ("prism", prism()),
    ]
}

fn construction_sizes() -> Outcome {
    let mut checked = 0;
    for n in 1..=4 {
        for seed in 0..25 {
            let art = ubwbo(ok(random_cubic_multigraph(n, seed))?, 1);
            let g = art.graph();
            ensure!(
                g.vertex_count() == 30 * n + 2,
                "n={n} seed={seed}: |V|={}",
                g.vertex_count()
            );
            ensure!(g.edge_count() == 65 * n, "n={n} seed={seed}: |E|={}", g.edge_count());
            let deg = |v| g.degree(v).unwrap();
            ensure!(deg(art.hub()) == 16 * n, "d(a)={}", deg(art.hub()));
            ensure!(deg(art.sink()) == 12 * n, "d(b)={}", deg(art.sink()));
            for v in art.p_vertices().into_iter().chain(art.z_vertices()) {
                ensure!(deg(v) == 3, "d({v})={}", deg(v));
            }
            for eg in art.edge_gadgets() {
                ensure!(
                    deg(eg.x) == 4 && deg(eg.y) == 6,
                    "x/y degrees {} {}",
                    deg(eg.x),
                    deg(eg.y)
                );
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} instances"))
}

fn hub_connectivity() -> Outcome {
    let mut graphs: Vec<MixedGraph> = vec![theta(), complete4(), k33(), prism()];
    graphs.push(ok(random_cubic_multigraph(3, 1))?);
    let mut calls = 0;
    for h in graphs {
        let art = ubwbo(h, 1);
        let g = art.graph();
        for s in g.vertices().filter(|&s| s != art.hub()) {
            let lam = ok(lambda_undirected(g, s, art.hub()))?;
            ensure!(lam == g.degree(s).unwrap(), "λ({s},a)={lam} d={}", g.degree(s).unwrap());
            calls += 1;
        }
    }
    Ok(format!("{calls} flow calls"))
}

fn forward_map_minimum_covers() -> Outcome {
    for (name, h) in named().into_iter().take(3) {
        let (size, u) = ok(min_vertex_cover(&h))?;
        let art = ubwbo(h, size);
        let o = ok(cover_to_orientation(&art, &u))?;
        ensure!(ok(is_convenient(&o, &art))?, "{name}: not convenient");
        ensure!(ok(is_ell_bounded(&o, art.ell()))?, "{name}: not bounded");
        let checker = BalanceChecker::new(art.graph().clone());
        ensure!(ok(checker.is_well_balanced(&o))?, "{name}: not well-balanced");
    }
    Ok("theta, K4, K33".into())
}

fn local_condition_equivalence() -> Outcome {
    let mut positives = 0;
    let mut total = 0;
    let mut run = |art: &ReductionArtifact, masks: Vec<u64>| -> Result<(), String> {
        let f = ok(build_partial_f(art))?;
        let checker = BalanceChecker::new(art.graph().clone());
        for m in masks {
            let o = ok(convenient_from_mask(art, &f, m))?;
            let local = ok(check_vfasf(&o, art))?;
            let full = ok(checker.is_well_balanced(&o))?;
            ensure!(local == full, "n={} mask {m}: local {local}, full {full}", art.n());
            positives += usize::from(full);
            total += 1;
        }
        Ok(())
    };
    run(&ubwbo(theta(), 1), (0..64).collect())?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let masks = sample(&mut rng, 1 << 12, 1000).into_iter().map(|m| m as u64).collect();
    run(&ubwbo(complete4(), 3), masks)?;
    Ok(format!("{total} orientations, {positives} well-balanced"))
}

fn convenientize_perturbed() -> Outcome {
    let mut runs = 0;
    let mut repaired = 0;
    for (name, h) in named().into_iter().take(2) {
        let (size, u) = ok(min_vertex_cover(&h))?;
        let art = ubwbo(h, size);
        let checker = BalanceChecker::new(art.graph().clone());
        let base = ok(cover_to_orientation(&art, &u))?;
        for i in 0..50u64 {
            let mut d = base.clone();
            for j in 0..1 + i % 3 {
                d = ok(perturb_by_eulerian(&d, 1000 * i + j))?;
            }
            repaired += usize::from(!ok(is_convenient(&d, &art))?);
            let (c, _) = ok(convenientize(&d, &art))?;
            ensure!(ok(is_convenient(&c, &art))?, "{name} run {i}: not convenient");
            ensure!(ok(is_ell_bounded(&c, art.ell()))?, "{name} run {i}: not bounded");
            ensure!(ok(checker.is_well_balanced(&c))?, "{name} run {i}: not well-balanced");
            ensure!(
                c.out_degrees() == d.out_degrees(),
                "{name} run {i}: out-degrees changed"
            );
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, {repaired} inputs not convenient"))
}

fn cover_round_trip() -> Outcome {
    let mut covers = 0;
    for (name, h) in named().into_iter().take(3) {
        let art = ubwbo(h.clone(), h.vertex_count());
        for u in ok(all_vertex_covers(&h))? {
            let back = ok(orientation_to_cover(&ok(cover_to_orientation(&art, &u))?, &art))?;
            ensure!(back == u, "{name}: {u:?} came back as {back:?}");
            covers += 1;
        }
    }
    Ok(format!("{covers} covers"))
}

fn decision_equivalence() -> Outcome {
    let mut cases = 0;
    for (name, h) in named() {
        let tau = ok(min_vertex_cover(&h))?.0;
        for k in 0..=h.vertex_count() {
            let d = ok(decide_ubwbo(&CvcInstance::new(h.clone(), k).unwrap()))?;
            ensure!(
                d.positive == (tau <= k),
                "{name} k={k}: search {} cover {}",
                d.positive,
                tau <= k
            );
            cases += 1;
        }
    }
    Ok(format!("{cases} (instance, k) pairs"))
}

fn best_balanced_lift() -> Outcome {
    let mut lifts = 0;
    for (name, h) in named().into_iter().take(3) {
        let covers = ok(all_vertex_covers(&h))?;
        let tau = covers.iter().map(BTreeSet::len).min().unwrap();
        let top = if name == "K33" { tau + 1 } else { h.vertex_count() };
        for k in tau..=top {
            let inst = CvcInstance::new(h.clone(), k).unwrap();
            let (wb, bb) = (build_ubwbo(&inst).unwrap(), build_ubbbo(&inst).unwrap());
            let bb_checker = BalanceChecker::new(bb.graph().clone());
            let wb_checker = BalanceChecker::new(wb.graph().clone());
            for u in covers.iter().filter(|u| u.len() <= k) {
                let d = ok(cover_to_orientation(&wb, u))?;
                let up = ok(lift_orientation(&d, &bb))?;
                ensure!(
                    ok(bb_checker.is_best_balanced(&up))?,
                    "{name} k={k}: lift not best-balanced"
                );
                ensure!(ok(is_ell_bounded(&up, bb.ell()))?, "{name} k={k}: lift not bounded");
                let out_a = up.out_degree(bb.hub());
                ensure!(out_a == 8 * inst.n() + k, "{name} k={k}: d+(a)={out_a}");
                let down = ok(restrict_orientation(&up, &bb))?;
                ensure!(
                    ok(wb_checker.is_well_balanced(&down))?,
                    "{name} k={k}: restriction not well-balanced"
                );
                ensure!(
                    ok(is_ell_bounded(&down, wb.ell()))?,
                    "{name} k={k}: restriction not bounded"
                );
                lifts += 1;
            }
        }
    }
    Ok(format!("{lifts} lifts"))
}

fn random_digraph(rng: &mut ChaCha8Rng, max_v: usize, max_a: usize) -> MixedGraph {
    let nv = rng.gen_range(2..=max_v);
    let na = rng.gen_range(0..=max_a);
    let mut d = MixedGraph::with_vertices(nv);
    for _ in 0..na {
        let t = rng.gen_range(0..nv);
        let h = (t + rng.gen_range(1..nv)) % nv;
        d.add_arc(VertexId(t), VertexId(h)).unwrap();
    }
    d
}

fn strongly_connected(d: &MixedGraph) -> bool {
    let m = lambda_matrix(d);
    m.values().all(|&l| l >= 1)
}

fn eulerian_reversal_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    let mut arcs_reversed = 0;
    while done < 100 {
        let d = random_digraph(&mut rng, 10, 30);
        if d.vertex_count() < 3 || !strongly_connected(&d) {
            continue;
        }
        // union of up to three arc-disjoint circuits
        let mut chosen: BTreeSet<EdgeId> = BTreeSet::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut rest = MixedGraph::new();
            for v in d.vertices() {
                rest.insert_vertex(v).unwrap();
            }
            for (e, t, h) in d.arcs().filter(|(e, _, _)| !chosen.contains(e)) {
                rest.insert_arc(e, t, h).unwrap();
            }
            match find_circuit(&ok(Orientation::from_digraph(&rest))?, rng.gen()) {
                Ok(c) => chosen.extend(c),
                Err(_) => break,
            }
        }
        let o = ok(Orientation::from_digraph(&d))?;
        let r = ok(apply_eulerian_reversal(&o, &chosen))?;
        ensure!(r.out_degrees() == o.out_degrees(), "out-degree vector changed");
        let after = ok(r.to_digraph())?;
        ensure!(lambda_matrix(&after) == lambda_matrix(&d), "λ matrix changed");
        arcs_reversed += chosen.len();
        done += 1;
    }
    Ok(format!("{done} reversals, {arcs_reversed} arcs"))
}

/// All simple u→v paths as arc lists.
fn simple_paths(d: &MixedGraph, u: VertexId, v: VertexId) -> Vec<Vec<usize>> {
    let arcs: Vec<(usize, usize, usize)> = d.arcs().map(|(e, t, h)| (e.0, t.0, h.0)).collect();
    let mut out = Vec::new();
    let mut stack = vec![(u.0, vec![u.0], Vec::new())];
    while let Some((at, seen, path)) = stack.pop() {
        if at == v.0 {
            out.push(path);
            continue;
        }
        for &(e, t, h) in &arcs {
            if t == at && !seen.contains(&h) {
                let mut s = seen.clone();
                s.push(h);
                let mut p: Vec<usize> = path.clone();
                p.push(e);
                stack.push((h, s, p));
            }
        }
    }
    out
}

/// Largest family of pairwise arc-disjoint paths, by exhaustive search.
fn max_packing(paths: &[u32], used: u32) -> usize {
    match paths.split_first() {
        None => 0,
        Some((&p, rest)) => {
            let skip = max_packing(rest, used);
            if p & used == 0 {
                skip.max(1 + max_packing(rest, used | p))
            } else {
                skip
            }
        }
    }
}

/// Smallest number of arcs leaving a vertex set that holds `u` but not `v`.
fn brute_min_cut(d: &MixedGraph, u: VertexId, v: VertexId) -> usize {
    let nv = d.vertex_count();
    (0..1u32 << nv)
        .filter(|s| s >> u.0 & 1 == 1 && s >> v.0 & 1 == 0)
        .map(|s| {
            d.arcs()
                .filter(|(_, t, h)| s >> t.0 & 1 == 1 && s >> h.0 & 1 == 0)
                .count()
        })
        .min()
        .unwrap()
}

fn menger_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut max_seen = 0;
    for i in 0..200 {
        let d = random_digraph(&mut rng, 8, 16);
        let nv = d.vertex_count();
        let u = VertexId(rng.gen_range(0..nv));
        let v = VertexId((u.0 + rng.gen_range(1..nv)) % nv);
        let masks: Vec<u32> = simple_paths(&d, u, v)
            .into_iter()
            .map(|p| p.into_iter().fold(0, |m, e| m | 1 << e))
            .collect();
        let brute = max_packing(&masks, 0);
        let lam = ok(lambda_directed(&d, u, v))?;
        ensure!(lam == brute, "digraph {i}: λ={lam}, brute force {brute}");
        ensure!(brute_min_cut(&d, u, v) == brute, "digraph {i}: cut and packing differ");
        let paths = ok(arc_disjoint_paths(&d, u, v))?;
        ensure!(paths.len() == lam, "digraph {i}: {} paths, λ={lam}", paths.len());
        ok(paths.validate(&d))?;
        max_seen = max_seen.max(lam);
    }
    Ok(format!("200 digraphs, max λ {max_seen}"))
}

fn connected(nv: usize, edges: &[(usize, usize)]) -> bool {
    let mut comp: Vec<usize> = (0..nv).collect();
    fn root(c: &mut [usize], x: usize) -> usize {
        if c[x] == x {
            x
        } else {
            let r = root(c, c[x]);
            c[x] = r;
            r
        }
    }
    for &(a, b) in edges {
        let (ra, rb) = (root(&mut comp, a), root(&mut comp, b));
        comp[ra] = rb;
    }
    (0..nv).all(|x| root(&mut comp, x) == root(&mut comp, 0))
}

/// Every connected labelled simple graph on 2..=5 vertices with at most 8
/// edges, then seeded random connected multigraphs on up to 8 vertices.
fn graph_catalog() -> Vec<MixedGraph> {
    let mut seen: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::new();
    for nv in 2..=5 {
        let pairs: Vec<(usize, usize)> = (0..nv).flat_map(|a| (a + 1..nv).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            if edges.len() <= 8 && connected(nv, &edges) {
                seen.insert((nv, edges));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut extra = 0;
    while extra < 200 {
        let nv = rng.gen_range(2..=8);
        let m = rng.gen_range(nv - 1..=8);
        let mut edges: Vec<(usize, usize)> = (0..m)
            .map(|_| {
                let a = rng.gen_range(0..nv);
                let b = (a + rng.gen_range(1..nv)) % nv;
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort();
        if connected(nv, &edges) && seen.insert((nv, edges)) {
            extra += 1;
        }
    }
    seen.into_iter()
        .map(|(nv, edges)| {
            let mut g = MixedGraph::with_vertices(nv);
            for (a, b) in edges {
                g.add_edge(VertexId(a), VertexId(b)).unwrap();
            }
            g
        })
        .collect()
}

fn best_balanced_existence() -> Outcome {
    let catalog = graph_catalog();
    ensure!(catalog.len() >= 500, "catalog has only {} graphs", catalog.len());
    for (i, g) in catalog.iter().enumerate() {
        let w = ok(nash_williams_witness(g))?;
        let Some(w) = w else {
            return Err(format!("graph {i} has no best-balanced witness"));
        };
        let checker = BalanceChecker::new(Arc::new(g.clone()));
        ensure!(
            ok(checker.is_best_balanced(&w))?,
            "graph {i}: witness fails the checker"
        );
    }
    Ok(format!("{} graphs", catalog.len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("construction sizes and degree table", 1, construction_sizes),
        ("hub connectivity equals degree", 10, hub_connectivity),
        ("forward map on minimum covers", 30, forward_map_minimum_covers),
        (
            "local root conditions match well-balancedness",
            120,
            local_condition_equivalence,
        ),
        (
            "convenientize after eulerian perturbation",
            120,
            convenientize_perturbed,
        ),
        ("cover round trip", 60, cover_round_trip),
        ("decision agrees with minimum vertex cover", 300, decision_equivalence),
        ("best-balanced lift and restriction", 120, best_balanced_lift),
        (
            "eulerian reversal keeps degrees and connectivity",
            60,
            eulerian_reversal_invariance,
        ),
        ("max-flow agrees with brute-force path packing", 60, menger_oracle),
        (
            "best-balanced orientation exists on small graphs",
            300,
            best_balanced_existence,
        ),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > Duration::from_secs(*limit) => {
                Err(format!("{detail}; took {took:.2?}, limit {limit}s"))
            }
            other => other,
        };
        let (verdict, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        failures += usize::from(outcome.is_err());
        println!("{verdict} {:>2} {name}: {detail} ({took:.2?})", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
