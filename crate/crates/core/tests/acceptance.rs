//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use graph_divisibility::chromatic::chromatic_number_exact;
use graph_divisibility::clique::clique_number;
use graph_divisibility::coloring::{
    color_via_perfect_division, color_via_two_division, BoundKind, ClassHint,
};
use graph_divisibility::corpus::{generate_with, random_candidate, CorpusSpec, Filter, Source};
use graph_divisibility::divisibility::{
    classify_against_c5, dominating_pair, perfect_divide, two_divide,
    two_divisibility_counterexample, verify_perfect_division, verify_two_division, C5Relation,
};
use graph_divisibility::exec::Execution;
use graph_divisibility::graph::families::cycle;
use graph_divisibility::harness::{
    cmd_classify, cmd_color, cmd_conjecture, cmd_divide, Mode, RunOptions, RunReport, WeightSpec,
};
use graph_divisibility::io::emit_graph6;
use graph_divisibility::recognition::{
    all_c5, find_bull, find_c5, find_homogeneous_set, find_odd_antihole, find_odd_hole, find_p5,
    is_homogeneous, is_perfect, is_prime,
};
use graph_divisibility::{Budget, Graph, WeightFn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const EXEC: Execution = Execution::Parallel;

fn corpus(min_n: usize, max_n: usize, filter: &str) -> Vec<Graph> {
    let spec = CorpusSpec::new(Source::Exhaustive { min_n, max_n })
        .filtered(filter.parse::<Filter>().unwrap());
    generate_with(&spec, &Budget::default(), EXEC).unwrap()
}

/// Collects the failures of a parallel sweep, keeping at most a few.
fn failures<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Result<(), String> + Sync + Send,
) -> Vec<String> {
    EXEC.map(items, check)
        .into_iter()
        .filter_map(Result::err)
        .take(5)
        .collect()
}

fn verdict(failed: Vec<String>, detail: String) -> Result<String, String> {
    if failed.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; first failures: {}", failed.join(" | ")))
    }
}

fn two_division_sweep() -> Result<String, String> {
    let graphs = corpus(2, 8, "connected,p5free,c5free");
    let failed = failures(&graphs, |g| {
        let d = two_divide(g).map_err(|e| format!("{}: {e}", emit_graph6(g)))?;
        verify_two_division(g, &d.division).map_err(|v| format!("{}: {v}", emit_graph6(g)))
    });
    verdict(
        failed,
        format!(
            "{} connected (P5, C5)-free graphs, 2 <= n <= 8",
            graphs.len()
        ),
    )
}

fn power_of_two_colouring() -> Result<String, String> {
    let graphs = corpus(2, 8, "connected,p5free,c5free");
    let failed = failures(&graphs, |g| {
        let id = emit_graph6(g);
        let out = color_via_two_division(g).map_err(|e| format!("{id}: {e}"))?;
        let omega = clique_number(g).value;
        let used = out.coloring.palette_size();
        let (chi, _) = chromatic_number_exact(g).map_err(|e| format!("{id}: {e}"))?;
        let bound = 1usize << (omega - 1);
        if !out.coloring.is_proper(g) || !out.blocks_are_consistent(g.order()) {
            return Err(format!("{id}: improper colouring"));
        }
        if used > bound || used < chi || out.certificate.bound_value != bound as u64 {
            return Err(format!("{id}: used {used}, chi {chi}, bound {bound}"));
        }
        Ok(())
    });
    verdict(
        failed,
        format!("{} graphs, chi <= used <= 2^(omega-1)", graphs.len()),
    )
}

const WEIGHTINGS: usize = 25;

fn random_weights(n: usize, seed: u64, stream: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    (0..n).map(|_| rng.random_range(0..=5)).collect()
}

/// Every graph obtained from a prime member of the class by adding a true or
/// false twin to one vertex. The twin pair is a homogeneous set and the
/// class is preserved because P5, the bull and odd holes are prime.
fn twin_instances(primes: &[Graph]) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in primes.iter().filter(|g| g.order() >= 4) {
        for v in 0..g.order() {
            for adjacent in [true, false] {
                out.push(g.with_twin(v, adjacent).unwrap());
            }
        }
    }
    out
}

fn weighted_perfect_division() -> Result<String, String> {
    let class = "bullfree,oddholefree|p5free";
    let graphs = corpus(1, 8, class);
    let primes: Vec<Graph> = graphs
        .iter()
        .filter(|g| g.order() <= 7 && is_prime(g))
        .cloned()
        .collect();
    let twins = twin_instances(&primes);
    let filter: Filter = class.parse().unwrap();
    let escaped = twins
        .iter()
        .filter(|g| !filter.matches(g, &Budget::default()).unwrap())
        .count();
    if escaped > 0 {
        return Err(format!("{escaped} twin substitutions left the class"));
    }
    let mut items: Vec<(&Graph, Vec<u64>)> = Vec::new();
    for (i, g) in graphs.iter().chain(&twins).enumerate() {
        for k in 0..WEIGHTINGS {
            items.push((g, random_weights(g.order(), 3, (i * WEIGHTINGS + k) as u64)));
        }
    }
    for g in &twins {
        items.push((g, vec![1; g.order()]));
    }
    let results = EXEC.map(&items, |(g, w)| {
        let id = emit_graph6(g);
        let w = WeightFn::new(g, w.clone()).unwrap();
        let out = perfect_divide(g, &w).map_err(|e| format!("{id} {:?}: {e}", w.as_slice()))?;
        verify_perfect_division(g, &w, &out.division)
            .map_err(|v| format!("{id} {:?}: {v}", w.as_slice()))?;
        Ok(out.log.has_quotient())
    });
    let quotient_runs = results.iter().filter(|r| matches!(r, Ok(true))).count();
    let twin_quotients = EXEC
        .map(&twins, |g| {
            perfect_divide(g, &WeightFn::unit(g.order())).map(|o| o.log.has_quotient())
        })
        .into_iter()
        .filter(|r| matches!(r, Ok(true)))
        .count();
    let mut failed: Vec<String> = results
        .into_iter()
        .filter_map(Result::err)
        .take(5)
        .collect();
    if twin_quotients < 50 {
        failed.push(format!(
            "only {twin_quotients} twin-substitution runs took the quotient path"
        ));
    }
    verdict(
        failed,
        format!(
            "{} divisions ({} corpus graphs, {} twin substitutions); {} via quotient, {} unit-weight twin runs via quotient",
            items.len(),
            graphs.len(),
            twins.len(),
            quotient_runs,
            twin_quotients
        ),
    )
}

fn quadratic_colouring() -> Result<String, String> {
    let graphs = corpus(1, 8, "bullfree,oddholefree|p5free");
    let mut failed = failures(&graphs, |g| {
        let id = emit_graph6(g);
        let out =
            color_via_perfect_division(g, ClassHint::Detect).map_err(|e| format!("{id}: {e}"))?;
        let omega = clique_number(g).value as usize;
        let bound = omega * (omega + 1) / 2;
        let used = out.coloring.palette_size();
        if !out.coloring.is_proper(g) || !out.blocks_are_consistent(g.order()) || used > bound {
            return Err(format!("{id}: used {used}, bound {bound}"));
        }
        Ok(())
    });
    let c5 = color_via_perfect_division(&cycle(5), ClassHint::Detect).map_err(|e| e.to_string())?;
    if c5.certificate.colors_used != 3
        || c5.certificate.bound_value != BoundKind::Quadratic.value(2)
    {
        failed.push(format!("C5 used {} colours", c5.certificate.colors_used));
    }
    verdict(
        failed,
        format!(
            "{} graphs within C(omega+1, 2); C5 uses exactly 3",
            graphs.len()
        ),
    )
}

fn prime_non_neighbourhoods() -> Result<String, String> {
    let graphs = corpus(1, 8, "bullfree,oddholefree,prime");
    let failed = failures(&graphs, |g| {
        for v in 0..g.order() {
            let m = g.non_neighborhood(v).unwrap();
            let (h, _) = g.induced_subgraph(&m).unwrap();
            if !is_perfect(&h).unwrap() {
                return Err(format!("{}: M({v}) is not perfect", emit_graph6(g)));
            }
        }
        Ok(())
    });
    verdict(
        failed,
        format!(
            "{} prime bull-free odd-hole-free graphs, every vertex",
            graphs.len()
        ),
    )
}

fn c5_attachments() -> Result<String, String> {
    let graphs: Vec<Graph> = corpus(5, 8, "p5free,bullfree,not-c5free");
    let prime = graphs.iter().filter(|g| is_prime(g)).count();
    let failed = failures(&graphs, |g| {
        let id = emit_graph6(g);
        for c in all_c5(g) {
            for v in (0..g.order()).filter(|v| !c.vertices.contains(v)) {
                if let C5Relation::Violation(w) = classify_against_c5(g, &c, v).unwrap() {
                    return Err(format!(
                        "{id}: vertex {v} against {:?} gives {w:?}",
                        c.vertices
                    ));
                }
            }
            if is_prime(g) && dominating_pair(g, &c).unwrap().is_none() {
                return Err(format!("{id}: no dominating pair on {:?}", c.vertices));
            }
        }
        Ok(())
    });
    verdict(
        failed,
        format!(
            "{} (P5, bull)-free graphs with a C5, {prime} prime; every C5 and outside vertex",
            graphs.len()
        ),
    )
}

fn two_divisibility_and_odd_holes() -> Result<String, String> {
    let budget = Budget::default();
    let mut failed = Vec::new();
    for k in [5, 7, 9] {
        if two_divisibility_counterexample(&cycle(k), &budget)
            .unwrap()
            .is_none()
        {
            failed.push(format!("C{k} reported 2-divisible"));
        }
    }
    let mut sample = Vec::new();
    let mut attempt = 0u64;
    let odd_holed: Filter = "not-oddholefree".parse().unwrap();
    while sample.len() < 200 {
        let n = 5 + (attempt % 5) as usize;
        let g = random_candidate(n, 0.5, 11, attempt);
        attempt += 1;
        if odd_holed.matches(&g, &budget).unwrap() {
            sample.push(g);
        }
    }
    failed.extend(failures(
        &sample,
        |g| match two_divisibility_counterexample(g, &budget) {
            Ok(Some(_)) => Ok(()),
            Ok(None) => Err(format!(
                "{} has an odd hole but is 2-divisible",
                emit_graph6(g)
            )),
            Err(e) => Err(e.to_string()),
        },
    ));
    let free = corpus(1, 7, "oddholefree");
    let results = EXEC.map(&free, |g| {
        two_divisibility_counterexample(g, &budget).map(|c| c.map(|s| (g.clone(), s)))
    });
    for r in results {
        match r {
            Ok(None) => {}
            Ok(Some((g, s))) => {
                let artifact = std::env::temp_dir().join("odd-hole-free-counterexample.json");
                let body = serde_json::json!({ "graph6": emit_graph6(&g), "obstruction": s });
                std::fs::write(&artifact, body.to_string()).ok();
                println!(
                    "[FAIL] conjecture counterexample {} saved to {}",
                    emit_graph6(&g),
                    artifact.display()
                );
                std::process::exit(2);
            }
            Err(e) => failed.push(e.to_string()),
        }
    }
    verdict(
        failed,
        format!("C5, C7, C9 and {} odd-holed samples not 2-divisible; {} odd-hole-free graphs (n <= 7) 2-divisible", sample.len(), free.len()),
    )
}

fn agree(g: &Graph) -> Result<(), String> {
    let id = emit_graph6(g);
    let m = common::matrix(g);
    let finders = [
        ("P5", find_p5(g), common::P5),
        ("C5", find_c5(g), common::C5),
        ("bull", find_bull(g), common::BULL),
    ];
    for (name, found, pattern) in finders {
        let naive = common::first_embedding(&m, pattern);
        if found.map(|e| e.vertices) != naive {
            return Err(format!("{id}: {name} finder disagrees with enumeration"));
        }
    }
    let hole = find_odd_hole(g).unwrap();
    if hole.as_ref().is_some_and(|h| !h.is_valid_in(g))
        || hole.is_some() != common::has_odd_hole(&m)
    {
        return Err(format!("{id}: odd hole finder disagrees"));
    }
    let antihole = find_odd_antihole(g).unwrap();
    if antihole.as_ref().is_some_and(|h| !h.is_valid_in(g))
        || antihole.is_some() != common::has_odd_antihole(&m)
    {
        return Err(format!("{id}: odd antihole finder disagrees"));
    }
    if g.order() <= 7 && is_perfect(g).unwrap() != common::is_perfect_by_definition(&m) {
        return Err(format!(
            "{id}: perfection disagrees with chi = omega on induced subgraphs"
        ));
    }
    Ok(())
}

fn finders_against_enumeration() -> Result<String, String> {
    let all = corpus(0, 7, "");
    let mut failed = failures(&all, agree);
    let random: Vec<Graph> = (0..1000u64)
        .map(|i| {
            random_candidate(
                1 + (i % 9) as usize,
                [0.3, 0.5, 0.7][(i / 9 % 3) as usize],
                21,
                i,
            )
        })
        .collect();
    failed.extend(failures(&random, agree));
    let modular: Vec<Graph> = (0..500u64)
        .map(|i| {
            random_candidate(
                4 + (i % 7) as usize,
                [0.2, 0.5, 0.8][(i / 7 % 3) as usize],
                31,
                i,
            )
        })
        .collect();
    let non_prime = modular
        .iter()
        .filter(|g| find_homogeneous_set(g).is_some())
        .count();
    failed.extend(failures(&modular, |g| {
        let m = common::matrix(g);
        let found = find_homogeneous_set(g);
        let valid = found.as_ref().is_none_or(|x| {
            let mask = x.iter().fold(0u32, |a, v| a | 1 << v);
            x.len() >= 2
                && x.len() < g.order()
                && is_homogeneous(g, x)
                && common::is_homogeneous_mask(&m, mask)
        });
        if !valid || found.is_some() != common::has_homogeneous_set(&m) {
            return Err(format!(
                "{}: homogeneous set search disagrees",
                emit_graph6(g)
            ));
        }
        Ok(())
    }));
    verdict(
        failed,
        format!(
            "{} exhaustive graphs (n <= 7), 1000 random (n <= 9); homogeneous sets on 500 random (n <= 10, {non_prime} non-prime)",
            all.len()
        ),
    )
}

fn full_run(exec: Execution) -> Vec<RunReport> {
    let opts = RunOptions {
        exec,
        ..RunOptions::default()
    };
    let spec = CorpusSpec::new(Source::Random {
        n: 8,
        p: 0.5,
        count: 60,
    })
    .seeded(42);
    let random = generate_with(&spec, &Budget::default(), exec).unwrap();
    let class = corpus(1, 6, "bullfree,oddholefree|p5free");
    let weights = WeightSpec::Lines(vec![vec![2, 0, 1, 3, 5, 4]]);
    let six: Vec<Graph> = class.iter().filter(|g| g.order() == 6).cloned().collect();
    let params = serde_json::to_value(&spec).unwrap();
    vec![
        cmd_classify(&random, &opts, params.clone()),
        cmd_divide(&random, Mode::Two, &WeightSpec::Unit, &opts, params.clone()).unwrap(),
        cmd_divide(&six, Mode::Perfect, &weights, &opts, Value::Null).unwrap(),
        cmd_color(&class, Mode::Perfect, &opts, Value::Null),
        cmd_color(&random, Mode::Two, &opts, params),
        cmd_conjecture(6, 50, 42, &opts, Value::Null).unwrap(),
    ]
}

fn without_timestamp(r: &RunReport) -> String {
    r.to_json()
        .lines()
        .filter(|l| !l.trim_start().starts_with("\"generated_at\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn report_determinism() -> Result<String, String> {
    let a = full_run(Execution::Parallel);
    let b = full_run(Execution::Sequential);
    let c = full_run(Execution::Parallel);
    let mut failed = Vec::new();
    let mut bytes = 0;
    for ((x, y), z) in a.iter().zip(&b).zip(&c) {
        bytes += x.to_json().len();
        if without_timestamp(x) != without_timestamp(y)
            || without_timestamp(x) != without_timestamp(z)
        {
            failed.push(format!("{} reports differ", x.command));
        }
    }
    verdict(
        failed,
        format!(
            "{} reports ({bytes} bytes) identical across three runs",
            a.len()
        ),
    )
}

type Criterion = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("2-division of (P5, C5)-free graphs", two_division_sweep),
        ("colouring within 2^(omega-1)", power_of_two_colouring),
        ("perfect weight division", weighted_perfect_division),
        ("colouring within C(omega+1, 2)", quadratic_colouring),
        (
            "perfect non-neighbourhoods in prime odd-hole-free graphs",
            prime_non_neighbourhoods,
        ),
        ("C5 attachments and dominating pairs", c5_attachments),
        (
            "2-divisibility oracle and odd holes",
            two_divisibility_and_odd_holes,
        ),
        ("finders against enumeration", finders_against_enumeration),
        ("report determinism", report_determinism),
    ];
    let mut ok = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("[PASS] {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                ok = false;
                println!("[FAIL] {name}: {detail} ({secs:.1}s)");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
