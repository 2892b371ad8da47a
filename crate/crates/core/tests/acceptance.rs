//! Acceptance suite: one pass/fail line per criterion. Time limits and sample sizes are pinned
//! below; every numeric comparison is exact.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use geodex::classify::{
    brute_force_automorphism_count, brute_force_geodesic_level, divisibility_check,
    geodesic_level, GeodesicOptions,
};
use geodex::families;
use geodex::golden::{check_row, golden_row, GOLDEN_ROWS};
use geodex::graph::DistanceRegularity;
use geodex::io::{encode_graph6, parse_graph6, read_graphs, AnalyzeOptions, GraphSource};
use geodex::{are_isomorphic, automorphism_group, BigUint, Graph, IntersectionArray, Permutation};

const SEED: u64 = 0x6765_6f64_6578;
const BIG_CAP: usize = 20_000;

const LIMIT_TABLE_VALENCY_3: Duration = Duration::from_secs(1);
const LIMIT_TABLE_VALENCY_4_TO_6: Duration = Duration::from_secs(60);
const LIMIT_ISOMORPHISMS: Duration = Duration::from_secs(30);
const LIMIT_ORACLE: Duration = Duration::from_secs(120);
const LIMIT_SCALE: Duration = Duration::from_secs(60);

/// Geodesics per level the brute-force comparison may enumerate.
const ORACLE_GEODESIC_BUDGET: usize = 400;
const ORACLE_MIN_GRAPHS: usize = 20;
const BRUTE_AUT_MAX_N: usize = 9;
const BRUTE_AUT_SAMPLES: usize = 300;
const JOHNSON_RELABELINGS: usize = 20;
const GRAPH6_SAMPLES: usize = 200;
const GRAPH6_MAX_N: usize = 40;

/// Optional directory with `g68_12.g6` and `g280_9.g6`.
const FIXTURE_ENV: &str = "GEODEX_FIXTURES";

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn build(id: &str) -> Graph {
    GraphSource::from_family_id(id)
        .and_then(|s| s.build(BIG_CAP))
        .unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn array_of(g: &Graph) -> Option<IntersectionArray> {
    match g.intersection_array().ok()? {
        DistanceRegularity::Regular(a) => Some(a),
        DistanceRegularity::NotRegular(_) => None,
    }
}

fn rows_reproduce(sources: &[&str]) -> Result<(), String> {
    let mut failures = Vec::new();
    for s in sources {
        let row = golden_row(s).ok_or_else(|| format!("no reference row {s}"))?;
        let check = check_row(row, BIG_CAP, AnalyzeOptions::default());
        if !check.passed() {
            failures.push(format!("{}: {}", row.label, check.mismatches.join("; ")));
        }
    }
    ensure(failures.is_empty(), || failures.join(" | "))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rows = [
        "family:complete:4",
        "family:complete-bipartite:3",
        "family:odd:3",
        "family:hamming:3:2",
        "family:pg2:2",
        "family:ag2:3",
    ];
    rows_reproduce(&rows)?;
    within(LIMIT_TABLE_VALENCY_3, start)?;
    Ok(format!("{} rows in {:.2?}", rows.len(), start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let rows = [
        "family:complete:5",
        "family:complete:6",
        "family:complete:7",
        "family:complete-bipartite:4",
        "family:complete-bipartite:5",
        "family:complete-bipartite:6",
        "family:crown:5",
        "family:crown:6",
        "family:crown:7",
        "family:hamming:4:2",
        "family:hamming:5:2",
        "family:hamming:6:2",
        "family:hamming:2:3",
        "family:hamming:2:4",
        "family:folded-cube:5",
        "family:folded-cube:6",
        "family:odd:4",
        "family:odd:5",
        "family:odd:6",
        "family:doubled-odd:4",
        "family:doubled-odd:5",
        "family:doubled-odd:6",
        "family:johnson:5:2",
        "family:johnson:6:2",
        "family:multipartite:3:2",
        "family:multipartite:3:3",
        "family:multipartite:4:2",
        "family:pg2:3",
        "family:pg2:4",
        "family:pg2:5",
        "family:ag2:4",
        "family:ag2:5",
        "family:paley:13",
        "family:g22-6",
    ];
    rows_reproduce(&rows)?;
    within(LIMIT_TABLE_VALENCY_4_TO_6, start)?;
    Ok(format!("{} rows in {:.2?}", rows.len(), start.elapsed()))
}

fn level_and_diameter(g: &Graph) -> (usize, usize) {
    let a = automorphism_group(g).group;
    let arr = array_of(g);
    let out = geodesic_level(g, &a, arr.as_ref(), GeodesicOptions::default()).unwrap();
    (out.level, out.diameter)
}

fn criterion_3() -> Outcome {
    let mut cases: Vec<(String, Graph, (usize, usize))> = vec![
        ("P(13)".into(), build("family:paley:13"), (1, 2)),
        ("P(17)".into(), build("family:paley:17"), (1, 2)),
        ("P(25)".into(), build("family:paley:25"), (1, 2)),
        ("G22,6".into(), families::g22_6(), (2, 3)),
        ("G64,8".into(), families::g64_8(), (2, 4)),
    ];
    let mut note = String::from("fixtures for G68,12 and G280,9 not supplied");
    if let Ok(dir) = std::env::var(FIXTURE_ENV) {
        let dir = std::path::PathBuf::from(dir);
        let mut found = Vec::new();
        for (file, want) in [("g68_12.g6", (2, 3)), ("g280_9.g6", (3, 4))] {
            let path = dir.join(file);
            if path.exists() {
                let g = read_graphs(&path, None).map_err(|e| e.to_string())?.remove(0);
                cases.push((file.into(), g, want));
                found.push(file);
            }
        }
        note = format!("fixtures checked: {found:?}");
    }
    for (label, g, want) in &cases {
        let got = level_and_diameter(g);
        ensure(got == *want, || {
            format!("{label}: (level, d) = {got:?}, expected {want:?}")
        })?;
    }
    Ok(format!("{} graphs; {note}", cases.len()))
}

/// A bijection carrying every edge of `a` onto an edge of `b`, with equal edge counts.
fn verified_map(a: &Graph, b: &Graph, phi: &Permutation) -> bool {
    phi.degree() == a.order()
        && a.size() == b.size()
        && a.edges().all(|(u, v)| b.is_adjacent(phi.apply(u), phi.apply(v)))
}

fn random_relabel(g: &Graph, rng: &mut StdRng) -> Graph {
    let mut images: Vec<usize> = (0..g.order()).collect();
    images.shuffle(rng);
    g.relabel(&Permutation::from_images(images).unwrap())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut pairs: Vec<(String, Graph, Graph)> = vec![
        ("P(5) ~ C5".into(), build("family:paley:5"), build("family:cycle:5")),
        ("P(9) ~ H(2,3)".into(), build("family:paley:9"), build("family:hamming:2:3")),
        (
            "ag2_cayley(11) ~ AG(2,11)".into(),
            families::ag2_cayley(11).unwrap(),
            build("family:ag2:11"),
        ),
        (
            "ag2_cayley(13) ~ AG(2,13)".into(),
            families::ag2_cayley(13).unwrap(),
            build("family:ag2:13"),
        ),
    ];
    let j63 = build("family:johnson:6:3");
    for k in 0..JOHNSON_RELABELINGS {
        let shuffled = random_relabel(&j63, &mut rng);
        pairs.push((format!("J(6,3) relabeling {k}"), j63.clone(), shuffled));
    }
    for (label, a, b) in &pairs {
        let phi = are_isomorphic(a, b).ok_or_else(|| format!("{label}: no isomorphism found"))?;
        ensure(verified_map(a, b, &phi), || format!("{label}: map fails verification"))?;
    }
    within(LIMIT_ISOMORPHISMS, start)?;
    Ok(format!("{} verified maps in {:.2?}", pairs.len(), start.elapsed()))
}

fn expect_array(label: &str, g: &Graph, b: Vec<usize>, c: Vec<usize>) -> Result<(), String> {
    let want = IntersectionArray::new(b, c).map_err(|e| format!("{label}: {e}"))?;
    let got = array_of(g);
    ensure(got.as_ref() == Some(&want), || {
        format!("{label}: array {got:?}, expected {want}")
    })
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for d in 2..=6 {
        for n in 2..=5 {
            let g = families::hamming(d, n, BIG_CAP).map_err(|e| e.to_string())?;
            let b = (0..d).map(|i| (d - i) * (n - 1)).collect();
            let c = (1..=d).collect();
            expect_array(&format!("H({d},{n})"), &g, b, c)?;
            count += 1;
        }
    }
    for (n, k) in [(5, 2), (6, 2), (6, 3), (7, 3)] {
        let g = families::johnson(n, k, BIG_CAP).map_err(|e| e.to_string())?;
        let b = (0..k).map(|i| (k - i) * (n - k - i)).collect();
        let c = (1..=k).map(|i| i * i).collect();
        expect_array(&format!("J({n},{k})"), &g, b, c)?;
        count += 1;
    }
    for d in [5, 6, 7] {
        let g = families::folded_cube(d, BIG_CAP).map_err(|e| e.to_string())?;
        let k = d / 2;
        let b = (0..k).map(|i| d - i).collect();
        let mut c: Vec<usize> = (1..k).collect();
        c.push(if d % 2 == 1 { k } else { d });
        expect_array(&format!("folded {d}-cube"), &g, b, c)?;
        count += 1;
    }
    for q in [3usize, 4, 5, 7, 8, 9] {
        let g = families::ag2_minus_parallel(q as u64, BIG_CAP).map_err(|e| e.to_string())?;
        expect_array(
            &format!("AG(2,{q})"),
            &g,
            vec![q, q - 1, q - 1, 1],
            vec![1, 1, q - 1, q],
        )?;
        count += 1;
    }
    Ok(format!("{count} closed-form arrays"))
}

/// Deterministic random graph with edge probability `p`.
fn random_graph(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Every constructed graph used for the structural checks: the reference rows, a few extra
/// family members, and some graphs that are not vertex transitive.
fn constructed_suite() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = GOLDEN_ROWS
        .iter()
        .map(|r| (r.label.to_string(), build(r.source)))
        .collect();
    for id in [
        "family:cycle:7",
        "family:paley:5",
        "family:paley:9",
        "family:johnson:6:3",
        "family:johnson:7:3",
        "family:hamming:3:3",
        "family:grassmann:2:4:2",
        "family:multipartite:3:4",
        "family:ag2:2",
    ] {
        out.push((id.to_string(), build(id)));
    }
    out.push((
        "prism C3xK2".into(),
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap(),
    ));
    out.push((
        "pendant C4".into(),
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap(),
    ));
    out.push((
        "path P5".into(),
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap(),
    ));
    out
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (label, g) in constructed_suite() {
        let a = automorphism_group(&g).group;
        let arr = array_of(&g);
        let fast = geodesic_level(&g, &a, arr.as_ref(), GeodesicOptions::default()).unwrap();
        match brute_force_geodesic_level(&g, &a, fast.diameter, ORACLE_GEODESIC_BUDGET) {
            Ok(level) => {
                ensure(level == fast.level, || {
                    format!("{label}: geodesic level {}, brute force {level}", fast.level)
                })?;
                checked += 1;
            }
            Err(geodex::classify::ClassifyError::BudgetExceeded { .. }) => {}
            Err(e) => return Err(format!("{label}: {e}")),
        }
    }
    ensure(checked >= ORACLE_MIN_GRAPHS, || {
        format!("only {checked} graphs within the geodesic budget")
    })?;

    let mut rng = StdRng::seed_from_u64(SEED ^ 6);
    let mut small = 0;
    for k in 0..BRUTE_AUT_SAMPLES {
        let n = 1 + k % BRUTE_AUT_MAX_N;
        let p = [0.2, 0.5, 0.8][k % 3];
        let g = random_graph(n, p, &mut rng);
        let brute = brute_force_automorphism_count(&g).unwrap();
        let fast = automorphism_group(&g).order();
        ensure(fast == BigUint::from(brute), || {
            format!("random graph {k} (n = {n}): |Aut| {fast}, brute force {brute}")
        })?;
        small += 1;
    }
    within(LIMIT_ORACLE, start)?;
    Ok(format!(
        "{checked} graphs against geodesic orbits, {small} random graphs against bijection counts, {:.2?}",
        start.elapsed()
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 7);
    let suite = constructed_suite();
    let mut gt_graphs = 0;
    for (label, g) in &suite {
        let a = automorphism_group(g).group;
        let product = a
            .orbit_lengths()
            .iter()
            .fold(BigUint::from(1u32), |acc, &l| acc * BigUint::from(l));
        ensure(product == a.order(), || format!("{label}: BSGS orbit product != order"))?;

        let orbit = a.orbit(0).map_err(|e| e.to_string())?;
        let stab = a.stabilizer_tower(&[0]).map_err(|e| e.to_string())?.order(1);
        ensure(BigUint::from(orbit.len()) * stab.clone() == a.order(), || {
            format!("{label}: |orbit| |A_u| != |A|")
        })?;

        if g.is_connected() && g.order() >= 2 {
            let report = geodex::classify::classify(g, label).map_err(|e| e.to_string())?;
            if report.gt {
                if let Some(arr) = &report.intersection_array {
                    ensure(
                        divisibility_check(arr, report.geodesic_level, &report.stabilizer_order),
                        || format!("{label}: divisibility fails"),
                    )?;
                    gt_graphs += 1;
                }
            }
            ensure(!report.gt || report.dt, || format!("{label}: GT without DT"))?;
        }

        if g.order() <= 400 {
            let co = g.complement();
            let ca = automorphism_group(&co).group;
            ensure(ca.order() == a.order(), || format!("{label}: complement order differs"))?;
            ensure(a.generators().iter().all(|p| co.is_automorphism(p)), || {
                format!("{label}: automorphism not preserved by the complement")
            })?;
        }

        let cover = g.bipartite_double_cover();
        let law = g.is_connected() && !g.is_bipartite();
        ensure(cover.is_connected() == law, || format!("{label}: double-cover law fails"))?;
    }
    for k in 0..50 {
        let g = random_graph(3 + k % 8, 0.4, &mut rng);
        let cover = g.bipartite_double_cover();
        ensure(cover.is_connected() == (g.is_connected() && !g.is_bipartite()), || {
            format!("random graph {k}: double-cover law fails")
        })?;
    }
    for k in 0..GRAPH6_SAMPLES {
        let n = rng.gen_range(0..=GRAPH6_MAX_N);
        let g = random_graph(n, rng.gen_range(0.0..1.0), &mut rng);
        let text = encode_graph6(&g).map_err(|e| e.to_string())?;
        let back = parse_graph6(text.as_bytes()).map_err(|e| format!("sample {k}: {e}"))?;
        ensure(back == g, || format!("graph6 sample {k} does not round-trip"))?;
    }
    Ok(format!(
        "{} graphs, {gt_graphs} GT divisibility checks, {GRAPH6_SAMPLES} graph6 round-trips",
        suite.len()
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let g = families::doubled_grassmann(2, 2, BIG_CAP).map_err(|e| e.to_string())?;
    ensure(g.order() == 310, || format!("{} vertices, expected 310", g.order()))?;
    let r = geodex::classify::classify(&g, "2.G2^5(2)").map_err(|e| e.to_string())?;
    let want: IntersectionArray = "{7, 6, 6, 4, 4; 1, 1, 3, 3, 7}".parse().unwrap();
    ensure(r.intersection_array.as_ref() == Some(&want), || {
        format!("array {:?}", r.intersection_array)
    })?;
    ensure(r.gt, || "not geodesic transitive".into())?;
    within(LIMIT_SCALE, start)?;
    Ok(format!("310 vertices, GT, {:.2?}", start.elapsed()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("golden rows, valency 3", criterion_1),
        ("golden rows, valency 4 to 6", criterion_2),
        ("distance but not geodesic transitive exceptions", criterion_3),
        ("isomorphism claims", criterion_4),
        ("closed-form intersection arrays", criterion_5),
        ("oracle equivalence", criterion_6),
        ("invariant suites", criterion_7),
        ("scale check", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
