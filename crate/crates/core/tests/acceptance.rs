//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails or exceeds its time budget.

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use keysym::configuration::{class_census, count_configurations, extend, ConfigurationMap};
use keysym::matcher::{best_configuration, top_k_configurations, ScoreMatrix};
use keysym::partition::{
    admissible_partitions, class_size, dominance_compare, lex_compare, partitions_of,
};
use keysym::permutation::compose;
use keysym::schema::{build_vocabulary, parse_schema};
use keysym::tableau::{
    act_on_tabloid, enumerate_tabloids, representation_matrix, tabloid_count, tabloid_of,
    Tableau, TabloidBasis,
};
use keysym::{DominanceRelation, Partition, Permutation, DEFAULT_ENUMERATION_CAP as CAP};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn worked_example() -> Result<(), String> {
    let config = ConfigurationMap::new(8, vec![4, 7, 6, 1, 3]).map_err(|e| e.to_string())?;
    let ext = extend(&config);
    let cycles = ext.permutation().to_string();
    ensure!(cycles == "(3,6,5)(1,4)(2,7)(8)", "cycle notation {cycles}");
    let class = ext.class();
    ensure!(class.to_string() == "(3,2,2,1)", "partition {class}");
    let size = class_size(&class).unwrap();
    ensure!(size == 1680, "class size {size}");
    let count = count_configurations(5, 8).unwrap();
    ensure!(count == 6720, "configuration count {count}");
    Ok(())
}

fn admissible_example() -> Result<(), String> {
    let want = [
        "(4,1,1,1,1)",
        "(3,2,1,1,1)",
        "(3,1,1,1,1,1)",
        "(2,2,2,1,1)",
        "(2,2,1,1,1,1)",
        "(2,1,1,1,1,1,1)",
        "(1,1,1,1,1,1,1,1)",
    ];
    let got: Vec<String> = admissible_partitions(3, 8)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    ensure!(got == want, "admissible partitions {got:?}");

    use DominanceRelation::*;
    let dom = |a: &str, b: &str| dominance_compare(&p(a), &p(b)).unwrap();
    // first two bullets: chains
    for chain in [&want[0..3], &want[3..7]] {
        for w in chain.windows(2) {
            ensure!(dom(w[0], w[1]) == Dominates, "{} should dominate {}", w[0], w[1]);
        }
    }
    ensure!(
        dom("(3,1,1,1,1,1)", "(2,2,2,1,1)") == Incomparable,
        "(3,1,1,1,1,1) vs (2,2,2,1,1) should be incomparable"
    );
    ensure!(dom("(3,2,1,1,1)", "(2,2,2,1,1)") == Dominates, "(3,2,1,1,1) over (2,2,2,1,1)");
    ensure!(dom("(3,1,1,1,1,1)", "(2,2,1,1,1,1)") == Dominates, "(3,1,1,1,1,1) over (2,2,1,1,1,1)");
    for w in want.windows(2) {
        ensure!(
            lex_compare(&p(w[0]), &p(w[1])).unwrap() == Ordering::Greater,
            "lex chain at {}",
            w[0]
        );
    }
    Ok(())
}

fn tabloid_example() -> Result<(), String> {
    let shape = p("(3,2)");
    let count = tabloid_count(&shape).unwrap();
    ensure!(count == 10, "tabloid count {count}");

    let t1 = Tableau::new(vec![vec![1, 2, 3], vec![4, 5]]).unwrap();
    let class_of_t1 = (1..=5)
        .permutations(5)
        .map(|fill| Tableau::new(vec![fill[..3].to_vec(), fill[3..].to_vec()]).unwrap())
        .filter(|t| tabloid_of(t) == tabloid_of(&t1))
        .count();
    ensure!(class_of_t1 == 12, "tableaux row equivalent to t1: {class_of_t1}");

    let basis = enumerate_tabloids(&shape, CAP).unwrap();
    let pi = Permutation::parse_cycles(5, "(1,3,5)(2)(4)").unwrap();
    let image = act_on_tabloid(&pi, &basis[0]).unwrap();
    let idx = basis.iter().position(|b| *b == image).unwrap() + 1;
    ensure!(idx == 8, "image of t1 is t{idx}");
    ensure!(image.to_string() == "2,3,5/1,4", "t8 is {image}");
    Ok(())
}

fn census_oracle() -> Result<(), String> {
    for v in 1..=7 {
        for n in 0..=v {
            let census = class_census(n, v, CAP).map_err(|e| e.to_string())?;
            let total: u128 = census.iter().map(|(_, c)| c).sum();
            let expected = factorial(v) / factorial(v - n);
            ensure!(total == expected, "N={n} V={v}: census total {total} != {expected}");
            let admissible = admissible_partitions(n, v).unwrap();
            for (class, _) in &census {
                ensure!(admissible.contains(class), "N={n} V={v}: {class} not admissible");
            }
            let realized: Vec<Partition> = census.into_iter().map(|(c, _)| c).collect();
            ensure!(realized == admissible, "N={n} V={v}: realized set differs");
        }
    }
    Ok(())
}

fn class_sizes_sum() -> Result<(), String> {
    for n in 1..=12 {
        let sum: u128 = partitions_of(n).iter().map(|l| class_size(l).unwrap()).sum();
        ensure!(sum == factorial(n), "n={n}: Σ class sizes {sum}");
    }
    Ok(())
}

fn refinement() -> Result<(), String> {
    for n in 1..=10 {
        let all = partitions_of(n);
        for a in &all {
            for b in &all {
                if dominance_compare(a, b).unwrap() == DominanceRelation::Dominates {
                    ensure!(
                        lex_compare(a, b).unwrap() != Ordering::Less,
                        "{a} dominates {b} but is lexicographically smaller"
                    );
                }
            }
        }
    }
    Ok(())
}

fn representation_homomorphism() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for n in 1..=5 {
        let mut points: Vec<usize> = (1..=n).collect();
        let mut random_perm = |rng: &mut ChaCha8Rng| {
            points.shuffle(rng);
            Permutation::from_images(points.clone()).unwrap()
        };
        for shape in partitions_of(n) {
            let basis = TabloidBasis::new(&shape, CAP).unwrap();
            for _ in 0..50 {
                let pi = random_perm(&mut rng);
                let sigma = random_perm(&mut rng);
                let x_pi = representation_matrix(&pi, &shape, CAP).unwrap();
                let x_sigma = representation_matrix(&sigma, &shape, CAP).unwrap();
                let x_prod =
                    representation_matrix(&compose(&pi, &sigma).unwrap(), &shape, CAP).unwrap();
                for m in [&x_pi, &x_sigma, &x_prod] {
                    ensure!(m.is_permutation_matrix(), "{shape}: not a permutation matrix");
                }
                ensure!(
                    x_pi.multiply(&x_sigma).unwrap() == x_prod,
                    "{shape}: X({pi}∘{sigma}) != X({pi})X({sigma})"
                );
            }
            let all_perms: Vec<Permutation> = (1..=n)
                .permutations(n)
                .map(|v| Permutation::from_images(v).unwrap())
                .collect();
            for tb in basis.tabloids() {
                let mut orbit: Vec<_> = all_perms
                    .iter()
                    .map(|g| act_on_tabloid(g, tb).unwrap())
                    .collect();
                orbit.sort();
                orbit.dedup();
                ensure!(orbit.len() == basis.len(), "{shape}: orbit of {tb} is not everything");
            }
        }
    }
    Ok(())
}

fn assignment_optimality() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    for n in 1..=4 {
        for v in n..=7 {
            for trial in 0..100 {
                let rows: Vec<Vec<f64>> = (0..n)
                    .map(|_| (0..v).map(|_| rng.gen_range(0.0..=1.0)).collect())
                    .collect();
                let m = ScoreMatrix::new(rows.clone(), v).unwrap();
                let mut all: Vec<(f64, Vec<usize>)> = (1..=v)
                    .permutations(n)
                    .map(|t| (t.iter().enumerate().map(|(i, &j)| rows[i][j - 1]).sum(), t))
                    .collect();
                all.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(&b.1)));

                let best = best_configuration(&m);
                ensure!(
                    (best.score - all[0].0).abs() <= 1e-12,
                    "N={n} V={v} trial {trial}: best {} vs max {}",
                    best.score,
                    all[0].0
                );
                let k = rng.gen_range(1..=20);
                let top = top_k_configurations(&m, k);
                ensure!(top.len() == k.min(all.len()), "N={n} V={v}: top-{k} length {}", top.len());
                for (rank, (got, want)) in top.iter().zip(&all).enumerate() {
                    ensure!(
                        (got.score - want.0).abs() <= 1e-12 && got.config.targets() == want.1.as_slice(),
                        "N={n} V={v} trial {trial}: rank {} is {:?} ({}) expected {:?} ({})",
                        rank + 1,
                        got.config.targets(),
                        got.score,
                        want.1,
                        want.0
                    );
                }
            }
        }
    }
    Ok(())
}

fn vocabulary_formula() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    for trial in 0..50 {
        let tables = rng.gen_range(0..8);
        let mut arity_sum = 0;
        let mut text = String::from("# generated\n");
        for t in 0..tables {
            let arity = rng.gen_range(0..6);
            arity_sum += arity;
            let attrs = (0..arity)
                .map(|a| format!("attr{a}:{}", ["Int", "Text", "Date", "Real"][rng.gen_range(0..4)]))
                .join(",");
            text.push_str(&format!("Rel{t}({attrs})\n\n"));
        }
        let first = build_vocabulary(&parse_schema(&text).map_err(|e| e.to_string())?);
        let second = build_vocabulary(&parse_schema(&text).unwrap());
        ensure!(
            first.len() == 2 * arity_sum + tables,
            "trial {trial}: |V_D| = {} expected {}",
            first.len(),
            2 * arity_sum + tables
        );
        ensure!(first == second, "trial {trial}: vocabulary differs across reparses");
        ensure!(
            first.terms().iter().enumerate().all(|(i, t)| t.index == i + 1),
            "trial {trial}: indices not consecutive"
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, Check); 9] = [
        (1, "worked example: extension, partition, class size, count", Duration::from_secs(1), worked_example),
        (2, "admissible partitions N=3 V=8 and dominance claims", Duration::from_secs(1), admissible_example),
        (3, "tabloids of (3,2): count, row-equivalence class, action", Duration::from_secs(1), tabloid_example),
        (4, "census oracle for V <= 7", Duration::from_secs(60), census_oracle),
        (5, "class sizes sum to n! for n <= 12", Duration::from_secs(5), class_sizes_sum),
        (6, "dominance refines into lexicographic order for n <= 10", Duration::from_secs(10), refinement),
        (7, "representation homomorphism and cyclicity for n <= 5", Duration::from_secs(30), representation_homomorphism),
        (8, "assignment optimality and top-k prefix", Duration::from_secs(60), assignment_optimality),
        (9, "vocabulary size formula and determinism", Duration::from_secs(5), vocabulary_formula),
    ];
    let mut failures = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= budget {
                Ok(())
            } else {
                Err(format!("took {elapsed:?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("criterion {id}: PASS  {name} ({} ms)", elapsed.as_millis()),
            Err(why) => {
                failures += 1;
                println!("criterion {id}: FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
