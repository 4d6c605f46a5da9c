//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use i2_growth::mealy::{minimize, MealyAutomaton};
use i2_growth::numeric::ln_big;
use i2_growth::rewrite::{
    applicable_rewrites, count_normal_forms, normal_forms_of_length, reduce_traced,
    verify_left_zero, verify_relation, width, Gen, GenWord, I2Tables, Relation, Rewrite,
};
use i2_growth::semigroup::{
    ball_growth_oracle, hausdorff_sequence, quotient_order, quotient_order_formula,
    spherical_growth_oracle, DEFAULT_MAX_ELEMENTS,
};
use i2_growth::series::{
    ln_richmond_asymptote, odd_distinct_partitions, psi_sum_form, GrowthAsymptotes,
    GrowthCoefficients,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64, what: &str) -> Result<(), String> {
    ensure(elapsed.as_secs() < limit_secs, || {
        format!("{what} took {elapsed:.1?}, limit {limit_secs}s")
    })
}

fn random_word(rng: &mut StdRng, max_len: usize) -> GenWord {
    let len = rng.random_range(0..=max_len);
    GenWord::new(
        (0..len)
            .map(|_| if rng.random() { Gen::F1 } else { Gen::F0 })
            .collect(),
    )
}

fn quotient_orders() -> Outcome {
    let start = Instant::now();
    for n in 1..=12u32 {
        let got = quotient_order(n, DEFAULT_MAX_ELEMENTS).map_err(|e| e.to_string())?;
        let want = quotient_order_formula(n);
        ensure(BigUint::from(got) == want, || format!("n = {n}: {got} elements, formula {want}"))?;
    }
    within(start.elapsed(), 60, "levels 1..12")?;
    Ok(format!("|S_n| = 2+(2n-1)2^n for n = 1..12 in {:.1?}", start.elapsed()))
}

fn series_vs_oracle() -> Outcome {
    let g = GrowthCoefficients::compute(12).map_err(|e| e.to_string())?;
    let i2 = MealyAutomaton::i2();
    for n in 1..=12 {
        let sphere = spherical_growth_oracle(&i2, n, DEFAULT_MAX_ELEMENTS).map_err(|e| e.to_string())?;
        let ball = ball_growth_oracle(&i2, n, DEFAULT_MAX_ELEMENTS).map_err(|e| e.to_string())?;
        ensure(BigUint::from(sphere.value) == g.aut[n], || {
            format!("n = {n}: oracle Γ = {}, series {}", sphere.value, g.aut[n])
        })?;
        ensure(BigUint::from(ball.value) == g.ball[n], || {
            format!("n = {n}: oracle γ_S = {}, series {}", ball.value, g.ball[n])
        })?;
    }
    let first: Vec<String> = (1..=6).map(|n| g.aut[n].to_string()).collect();
    ensure(first == ["2", "4", "6", "9", "13", "18"], || format!("Γ(1..6) = {first:?}"))?;
    Ok("Γ and γ_S match the stabilized oracles for n = 1..12".into())
}

fn normal_form_census() -> Outcome {
    let delta = GrowthCoefficients::compute(20).map_err(|e| e.to_string())?.delta;
    let frozen = [1u32, 2, 3, 4, 5, 7, 9, 11, 13, 16];
    for n in 0..=20 {
        let listed = normal_forms_of_length(n).len() as u64;
        let counted = count_normal_forms(n);
        ensure(BigUint::from(listed) == delta[n] && counted == listed, || {
            format!("n = {n}: listed {listed}, counted {counted}, δ = {}", delta[n])
        })?;
        if n < frozen.len() {
            ensure(delta[n] == BigUint::from(frozen[n]), || format!("δ({n}) = {}", delta[n]))?;
        }
    }
    Ok("normal forms of length n number δ(n) for n = 0..20".into())
}

fn rewriting_soundness() -> Outcome {
    let start = Instant::now();
    let tables = I2Tables::new(12).map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut total_steps = 0;
    for i in 0..100_000 {
        let w = random_word(&mut rng, 40);
        let r = reduce_traced(&w);
        ensure(r.steps <= w.len() / 2, || {
            format!("word {i} ({w}): {} steps for length {}", r.steps, w.len())
        })?;
        ensure(tables.table(&w) == tables.table(&r.normal_form.to_word()), || {
            format!("word {i} ({w}): table differs from {}", r.normal_form)
        })?;
        total_steps += r.steps;
    }
    within(start.elapsed(), 120, "10^5 words")?;
    Ok(format!(
        "10^5 words, {total_steps} relation applications, in {:.1?}",
        start.elapsed()
    ))
}

fn relation_suite() -> Outcome {
    for p in 0..=6 {
        ensure(verify_relation(p, 12).map_err(|e| e.to_string())?, || {
            format!("r_{p} fails at level 12")
        })?;
    }
    for n in 1..=8 {
        let got = verify_left_zero(n).map_err(|e| e.to_string())?;
        ensure(got == (true, true), || format!("left zero at n = {n}: {got:?}"))?;
    }
    Ok("r_0..r_6 hold at level 12; left zeros hold for n = 1..8".into())
}

fn psi_identity() -> Outcome {
    let start = Instant::now();
    let order = 2000;
    let product = odd_distinct_partitions(order);
    let sum = psi_sum_form(order);
    ensure(product.first_difference(&sum).is_none(), || {
        format!("Ψ forms differ at X^{}", product.first_difference(&sum).unwrap())
    })?;
    // compute() already checks each sequence against its closed formula.
    let g = GrowthCoefficients::compute(order).map_err(|e| e.to_string())?;
    let back = g.ball.mul_one_minus_x().ok_or("γ_S is not nondecreasing")?;
    ensure(back == g.delta, || "Δ ≠ (1-X)Γ_S".into())?;
    ensure(g.delta.div_one_minus_x_pow(2) == g.aut, || "Γ ≠ Δ/(1-X²)".into())?;
    ensure(g.delta.prefix_sums() == g.ball, || "Γ_S ≠ Δ/(1-X)".into())?;
    within(start.elapsed(), 30, "N = 2000")?;
    Ok(format!("identities hold to N = 2000 in {:.1?}", start.elapsed()))
}

fn growth_ratios() -> Outcome {
    let g = GrowthCoefficients::compute(10_000).map_err(|e| e.to_string())?;
    let ns = [100usize, 1000, 10_000];
    let mut report = Vec::new();
    for (name, pick) in [("γ_S", 0usize), ("Γ", 1), ("δ", 2)] {
        let devs: Vec<f64> = ns
            .iter()
            .map(|&n| {
                let a = GrowthAsymptotes::with_q(n, &g.q[n]);
                let (exact, ln_main) = match pick {
                    0 => (&g.ball[n], a.ln_ball_q_form),
                    1 => (&g.aut[n], a.ln_aut_q_form),
                    _ => (&g.delta[n], a.ln_delta_q_form),
                };
                (a.ratio(exact, ln_main) - 1.0).abs()
            })
            .collect();
        ensure(devs[2] < 0.05, || format!("{name}: |ratio-1| = {} at n = 10^4", devs[2]))?;
        ensure(devs[2] < devs[1] && devs[2] < devs[0], || {
            format!("{name}: |ratio-1| not smallest at 10^4: {devs:?}")
        })?;
        report.push(format!("{name} {:.2e}", devs[2]));
    }
    Ok(format!("|ratio-1| at n = 10^4: {}", report.join(", ")))
}

fn q_asymptote() -> Outcome {
    let q = odd_distinct_partitions(10_000);
    let devs: Vec<f64> = [100usize, 1000, 10_000]
        .iter()
        .map(|&n| {
            let ln_main = ln_richmond_asymptote(&[1], 2, 1, n as f64).expect("coprime");
            ((ln_big(&q[n]) - ln_main).exp() - 1.0).abs()
        })
        .collect();
    ensure(devs[0] > devs[1] && devs[1] > devs[2], || {
        format!("|ratio-1| not decreasing: {devs:?}")
    })?;
    ensure(devs[2] < 0.1, || {
        format!(
            "|ratio-1| = {:.4} at n = 10^4 (decreasing: {:.4}, {:.4}, {:.4}); \
             the ratio tends to 2^(-5/4) = {:.4}, not 1",
            devs[2],
            devs[0],
            devs[1],
            devs[2],
            2f64.powf(-1.25)
        )
    })?;
    Ok(format!("|ratio-1| = {:.4} at n = 10^4", devs[2]))
}

fn hausdorff() -> Outcome {
    let seq = hausdorff_sequence(20);
    ensure(seq.windows(2).all(|w| w[1] < w[0]), || format!("not decreasing: {seq:?}"))?;
    ensure(seq[19] < 0.01, || format!("term(20) = {}", seq[19]))?;
    Ok(format!("strictly decreasing, term(20) = {:.3e}", seq[19]))
}

/// A random word with an occurrence of one side of a random `r_p` planted in
/// the middle, so that long relations get exercised too.
fn planted_word(rng: &mut StdRng) -> GenWord {
    let p = rng.random_range(0..=5);
    let r = Relation::R(p);
    let side = if rng.random() { r.lhs() } else { r.rhs() };
    random_word(rng, 12)
        .concat(&side)
        .concat(&random_word(rng, 12))
}

fn width_invariance() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let mut by_relation = [0usize; 7];
    for i in 0..10_000 {
        let w = planted_word(&mut rng);
        let rewrites = applicable_rewrites(&w, 5);
        // Pick a relation kind first so that the many f0² insertion points
        // do not drown out the rest.
        let mut kinds: Vec<Relation> = rewrites.iter().map(|r| r.relation).collect();
        kinds.sort_by_key(|r| match r {
            Relation::Involution => 0,
            Relation::R(p) => p + 1,
        });
        kinds.dedup();
        let kind = kinds[rng.random_range(0..kinds.len())];
        let options: Vec<&Rewrite> = rewrites.iter().filter(|r| r.relation == kind).collect();
        let rewrite = options[rng.random_range(0..options.len())];
        let v = rewrite.apply(&w).ok_or("listed rewrite did not apply")?;
        ensure(width(&v) == width(&w), || {
            format!("triple {i}: {w} -> {v} by {rewrite:?} changes width {} -> {}", width(&w), width(&v))
        })?;
        by_relation[match kind {
            Relation::Involution => 0,
            Relation::R(p) => p as usize + 1,
        }] += 1;
    }
    Ok(format!(
        "10^4 rewrites preserve width (f0², r_0..r_5: {by_relation:?})"
    ))
}

fn random_automaton(rng: &mut StdRng) -> MealyAutomaton {
    let n = rng.random_range(1..=4);
    let transition = (0..2 * n).map(|_| rng.random_range(0..n)).collect();
    let output = (0..2 * n).map(|_| rng.random_range(0..2)).collect();
    MealyAutomaton::new(2, n, transition, output).expect("valid tables")
}

fn product_and_minimize() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0011);
    let words: Vec<Vec<usize>> = (0..=6u32)
        .flat_map(|len| (0..1u32 << len).map(move |b| (0..len).map(|i| (b >> i & 1) as usize).collect()))
        .collect();
    for trial in 0..200 {
        let a = random_automaton(&mut rng);
        let b = random_automaton(&mut rng);
        let ab = a.product(&b).map_err(|e| e.to_string())?;
        for q1 in 0..a.state_count() {
            for q2 in 0..b.state_count() {
                for w in &words {
                    let inner = b.apply(q2, w).map_err(|e| e.to_string())?;
                    let composed = a.apply(q1, &inner).map_err(|e| e.to_string())?;
                    let direct = ab.apply(q1 * b.state_count() + q2, w).map_err(|e| e.to_string())?;
                    ensure(direct == composed, || {
                        format!("trial {trial}: product state ({q1},{q2}) on {w:?}")
                    })?;
                }
            }
        }
    }
    let aut = GrowthCoefficients::compute(10).map_err(|e| e.to_string())?.aut;
    let i2 = MealyAutomaton::i2();
    for n in 1..=10 {
        let states = minimize(&i2.power(n).map_err(|e| e.to_string())?).state_count();
        ensure(BigUint::from(states) == aut[n], || {
            format!("minimize(I2^{n}) has {states} states, Γ({n}) = {}", aut[n])
        })?;
    }
    Ok("product semantics on 200 random pairs; minimize(I2^n) = Γ(n) for n = 1..10".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("quotient orders", quotient_orders),
        ("series vs oracle", series_vs_oracle),
        ("normal-form census", normal_form_census),
        ("rewriting soundness", rewriting_soundness),
        ("relation suite", relation_suite),
        ("psi identity", psi_identity),
        ("growth asymptotics", growth_ratios),
        ("q asymptote", q_asymptote),
        ("hausdorff sequence", hausdorff),
        ("width invariance", width_invariance),
        ("product/minimize laws", product_and_minimize),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
