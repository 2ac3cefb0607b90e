//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#![allow(clippy::single_range_in_vec_init)]

mod common;

use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{poly_mul, symmetric_group, Poly, ROracle};
use wsc_core::category_o::{kac_character_verma_expansion, re_expand, to_parabolic_verma_basis, typicality};
use wsc_core::character::FormalCharacter;
use wsc_core::kl::{Descent, KlTable};
use wsc_core::levi::Levi;
use wsc_core::nilpotent::GradingTable;
use wsc_core::pipeline::{run, Job, ModuleKind};
use wsc_core::scalar::Scalar;
use wsc_core::structure::{battery, build_battery_datum, verify_datum};
use wsc_core::superalgebra::{Algebra, Weight};
use wsc_core::weyl::WeylGroup;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn wsc(args: &[&str]) -> (String, i32) {
    wsc_env(args, &[])
}

fn wsc_env(args: &[&str], env: &[(&str, &str)]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_wsc"))
        .args(args)
        .envs(env.iter().copied())
        .env_remove("WSC_DEPTH")
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("run wsc");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap_or(-1))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn structure_battery() -> Outcome {
    let start = Instant::now();
    let (mut passed, mut skipped) = (0, 0);
    for (alg, p) in battery(5) {
        let nd = build_battery_datum(&alg, &p).map_err(|e| format!("{alg} {p}: {e}"))?;
        match verify_datum(&nd, 16) {
            Ok(r) if r.pass => passed += 1,
            Ok(r) => {
                let bad: Vec<_> = r.checks.iter().filter(|c| !c.pass).map(|c| c.identity.clone()).collect();
                return Err(format!("{alg} {p}: {bad:?}"));
            }
            Err(e) if e.name() == "OddDimensionalOddPart" => skipped += 1,
            Err(e) => return Err(format!("{alg} {p}: {e}")),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 30.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{passed} orbits pass, {skipped} skipped as odd, {secs:.2}s"))
}

fn kl_oracle() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    let mut saw_one_plus_q = false;
    for n in [3, 4] {
        let group = WeylGroup::of_blocks(vec![0..n], 5040).map_err(|e| e.to_string())?;
        let elements = symmetric_group(n);
        let mut oracle = ROracle::new();
        for descent in [Descent::Left, Descent::Right] {
            let mut table = KlTable::new(&group, descent);
            for w in &elements {
                let column = oracle.column(&elements, w);
                for (x, expected) in &column {
                    let got = table.polynomial(x, w).map_err(|e| e.to_string())?;
                    ensure(&got == expected, || format!("P[{},{}] = {got:?}, oracle {expected:?}", x.one_line(), w.one_line()))?;
                    ensure(n != 3 || got == vec![1], || format!("S3 value {got:?}"))?;
                    saw_one_plus_q |= got == vec![1, 1];
                    pairs += 1;
                }
            }
        }
    }
    ensure(saw_one_plus_q, || "no 1+q in S4".into())?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{pairs} Bruhat pairs agree, S4 contains 1+q, {secs:.2}s"))
}

fn int_exponents(ch: &FormalCharacter) -> Poly {
    ch.terms
        .iter()
        .map(|(w, &c)| {
            let v = w.0.iter().map(|s| {
                assert!(s.is_integer());
                i64::try_from(s.to_integer()).unwrap()
            });
            (v.collect(), c)
        })
        .collect()
}

fn distinguished() -> Outcome {
    let lambdas = ["5,1|-3", "2,0|1", "3,3|0", "1,1|-5", "0,-2|4", "4,0|7", "6,2|-1"];
    for l in lambdas {
        let job = Job {
            algebra: "gl(2|1)".into(),
            nilpotent: "2|1".into(),
            levi: None,
            theta: None,
            lambda: Some(l.into()),
            table: None,
            depth: 20,
            kind: ModuleKind::W,
            orbit_size: None,
            swap_lagrangian: false,
        };
        let r = run(&job).map_err(|e| format!("{l}: {e}"))?;
        let (soergel, wtilde, w) = (&r.raw[0], &r.raw[1], &r.raw[2]);
        let ints: Vec<i64> = l.split(['|', ',']).map(|s| s.parse().unwrap()).collect();
        let dim_even = (ints[0] - ints[1] + 1) as i128;
        ensure(soergel.is_polynomial(), || format!("{l}: not a polynomial"))?;
        ensure(soergel.eval_at_one() == Some(4 * dim_even), || format!("{l}: {:?} != 4*{dim_even}", soergel.eval_at_one()))?;
        ensure(w.is_polynomial() && w.terms.values().all(|&c| c > 0), || format!("{l}: quotient {w}"))?;
        ensure(r.clifford_weights.len() == 1, || format!("{l}: clifford weights {:?}", r.clifford_weights))?;
        let mu: Vec<i64> = r.clifford_weights[0].iter().map(|s| s.parse().unwrap()).collect();
        let one_plus: Poly = [(vec![0; mu.len()], 1), (mu, 1)].into_iter().collect();
        ensure(poly_mul(&int_exponents(w), &one_plus) == int_exponents(wtilde), || format!("{l}: w (1+e^mu) != wtilde"))?;
        let (a, b) = (wtilde.eval_at_one().unwrap(), w.eval_at_one().unwrap());
        ensure(a == 2 * b && r.dimension_factor == 2, || format!("{l}: ratio {a}/{b}, factor {}", r.dimension_factor))?;
    }
    Ok(format!("{} weights: polynomial, Kac identity, exact nonnegative division, ratio 2", lambdas.len()))
}

fn window(ch: &FormalCharacter, theta: &[Scalar], floor: &Scalar) -> Vec<(Vec<Scalar>, i128)> {
    ch.terms
        .iter()
        .filter(|(w, _)| &w.0.iter().zip(theta).map(|(a, b)| a * b).sum::<Scalar>() >= floor)
        .map(|(w, &c)| (w.0.clone(), c))
        .collect()
}

fn truncation_stability() -> Outcome {
    let jobs = [
        ("gl(3|1)", "2,1|1", "2+1|1", "1/3,-2/3,0", "2,1,0|5"),
        ("gl(2|2)", "2|1,1", "2|1+1", "0,1,0", "3,1|2,5"),
    ];
    let mut compared = 0;
    for (alg, nil, levi, theta, lambda) in jobs {
        let job = |depth| Job {
            algebra: alg.into(),
            nilpotent: nil.into(),
            levi: Some(levi.into()),
            theta: Some(theta.into()),
            lambda: Some(lambda.into()),
            table: None,
            depth,
            kind: ModuleKind::W,
            orbit_size: None,
            swap_lagrangian: false,
        };
        let short = run(&job(20)).map_err(|e| e.to_string())?;
        let long = run(&job(30)).map_err(|e| e.to_string())?;
        let floor: Scalar = short.truncation_floor.as_deref().ok_or("no floor")?.parse().map_err(|_| "floor")?;
        let theta: Vec<Scalar> = theta.split(',').map(|s| s.parse().unwrap()).collect();
        ensure(short.raw.len() == 3 && long.raw.len() == 3, || "missing characters".into())?;
        for (a, b) in short.raw.iter().zip(&long.raw) {
            let (wa, wb) = (window(a, &theta, &floor), window(b, &theta, &floor));
            ensure(!wa.is_empty() && wa == wb, || format!("{alg} {nil}: depth 20 and 30 differ above {floor}"))?;
            compared += wa.len();
        }
    }
    Ok(format!("{compared} coefficients agree in the depth-20 window"))
}

fn composition(rng: &mut StdRng, k: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = k;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    parts
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

fn typical_oracle(m: usize, n: usize, eps: &[i64], delta: &[i64]) -> bool {
    // 2(λ+ρ) with ρ = ρ0 − ρ1 in the standard positive system
    let e: Vec<i64> = (0..m).map(|i| 2 * eps[i] + (m as i64 - 2 * i as i64 - 1) - n as i64).collect();
    let d: Vec<i64> = (0..n).map(|j| 2 * delta[j] + (n as i64 - 2 * j as i64 - 1) + m as i64).collect();
    e.iter().all(|x| d.iter().all(|y| x + y != 0))
}

fn round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let shapes = [(2, 1), (1, 2), (2, 2), (3, 1), (3, 2)];
    let mut done = Vec::new();
    while done.len() < 10 {
        let (m, n) = shapes[done.len() % shapes.len()];
        let mut eps: Vec<i64> = (0..m).map(|_| rng.gen_range(-4..=4)).collect();
        let mut delta: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        eps.sort_unstable_by(|a, b| b.cmp(a));
        delta.sort_unstable_by(|a, b| b.cmp(a));
        if !typical_oracle(m, n, &eps, &delta) {
            continue;
        }
        let alg = Algebra::parse(&format!("gl({m}|{n})")).map_err(|e| e.to_string())?;
        let lambda = Weight::from_ints(m, &eps, &delta);
        ensure(typicality(&alg.datum, &lambda), || format!("{lambda} should be typical"))?;
        let vc = kac_character_verma_expansion(&alg.datum, &lambda).map_err(|e| e.to_string())?;
        let proper = format!("{}|{}", join(&composition(&mut rng, m)), join(&composition(&mut rng, n)));
        for levi in [Levi::full(m, n), Levi::parse(&proper, m, n).map_err(|e| e.to_string())?] {
            let rho0 = &alg.datum.rho0;
            let entries = to_parabolic_verma_basis(&vc, &levi, rho0).map_err(|e| format!("{lambda} {levi}: {e}"))?;
            let back = re_expand(&entries, &levi, rho0).map_err(|e| e.to_string())?;
            ensure(back == vc, || format!("{lambda} over {levi}: round trip differs"))?;
        }
        done.push(format!("gl({m}|{n}) {lambda}"));
    }
    Ok(format!("{} typical weights over g0 and a random Levi", done.len()))
}

fn error_name(stdout: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(stdout).unwrap_or_default();
    v["error"]["name"].as_str().unwrap_or("").to_string()
}

fn error_paths() -> Outcome {
    let base = ["--json", "char", "--algebra", "gl(2|1)", "--nilpotent", "2|1"];
    let (out, code) = wsc(&[&base[..], &["--lambda", "1,0|-2"]].concat());
    ensure(code == 23 && error_name(&out) == "AtypicalWeight", || format!("atypical: exit {code}, {out}"))?;

    let odd_in_battery = battery(5)
        .into_iter()
        .filter(|(a, p)| build_battery_datum(a, p).map(|nd| nd.grading.check_odd_part_even().is_err()).unwrap_or(true))
        .count();
    ensure(odd_in_battery == 0, || format!("{odd_in_battery} battery orbits have odd g(-1)_1"))?;
    let odd = GradingTable::from_dims(&[((-1, true), 1), ((1, true), 1), ((0, false), 2)]);
    match odd.check_odd_part_even() {
        Err(e) if e.name() == "OddDimensionalOddPart" && e.exit_code() == 15 => {}
        other => return Err(format!("odd guard: {other:?}")),
    }

    let (out, code) = wsc(&[&base[..], &["--lambda", "5,1|-3", "--orbit-size", "2"]].concat());
    ensure(code == 26 && error_name(&out) == "NonIntegralDivision", || format!("orbit size: exit {code}, {out}"))?;
    Ok(format!("AtypicalWeight=23, OddDimensionalOddPart=15 (guard; {odd_in_battery} odd orbits in battery), NonIntegralDivision=26"))
}

fn examples() -> Vec<Vec<&'static str>> {
    let e: [&[&str]; 11] = [
        &["orbit", "--algebra", "gl(2|1)", "--nilpotent", "2|1"],
        &["orbit", "--algebra", "gl(2|1)", "--nilpotent", "1,1|1"],
        &["orbit", "--algebra", "gl(3|1)", "--nilpotent", "2,1|1"],
        &["char", "--algebra", "gl(2|1)", "--nilpotent", "2|1", "--lambda", "5,1|-3"],
        &["char", "--algebra", "gl(2|1)", "--nilpotent", "2|1", "--lambda", "1,0|-2"],
        &["char", "--algebra", "gl(2|1)", "--nilpotent", "2|1", "--table", "tests/data/gl21_atypical_table.json"],
        &["char", "--batch", "tests/data/batch.json"],
        &["kac-char", "--algebra", "gl(2|1)", "--lambda", "5,1|-3"],
        &["verify", "--max-size", "4"],
        &["kl", "--table", "3"],
        &["kl", "--x", "2134", "--w", "1324"],
    ];
    e.iter().map(|a| [&["--json"][..], a].concat()).collect()
}

fn determinism() -> Outcome {
    let list = examples();
    for args in &list {
        let (a, ca) = wsc_env(args, &[("RAYON_NUM_THREADS", "1")]);
        let (b, cb) = wsc_env(args, &[("RAYON_NUM_THREADS", "4")]);
        let (c, cc) = wsc(args);
        ensure(a == b && b == c && ca == cb && cb == cc, || format!("{args:?} differs between runs"))?;
        ensure(serde_json::from_str::<serde_json::Value>(&a).is_ok_and(|v| v["schema"] == 1), || format!("{args:?}: bad json"))?;
    }
    Ok(format!("{} examples byte-identical over 3 runs", list.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("structure battery", structure_battery),
        ("KL oracle equivalence", kl_oracle),
        ("distinguished pipeline", distinguished),
        ("truncation stability", truncation_stability),
        ("round trip", round_trip),
        ("error paths", error_paths),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(f) {
            Ok(Ok(detail)) => println!("PASS {} {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {} {name}: panicked", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
