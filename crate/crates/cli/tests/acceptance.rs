//! Acceptance gate. Each criterion runs at its stated bound and time limit
//! and prints one PASS/FAIL line; the process fails if any criterion fails.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use menage_cli::record::OutputRecord;
use menage_cli::verify::{self, Formulas, Suite};
use menage_core::{
    domino_count, domino_count_alt, factorial, menage_count, tait_count, tait_count_direct,
    tait_sequence, ExactInteger, IncrementalTerms, Result,
};
use menage_oracles::{brute_menage, brute_tait, enumerate_domino_placements, ie_term_sum};
use num_bigint::BigInt;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> std::result::Result<Duration, String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:?}, limit {limit:?}"))?;
    Ok(spent)
}

fn domino_formula_vs_enumeration() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for m in 3..=16u64 {
        for r in 0..=m / 2 {
            let counted = enumerate_domino_placements(m, r).unwrap().count();
            let formula = domino_count(m, r).map_err(|e| e.to_string())?;
            ensure(formula == BigInt::from(counted), || {
                format!("m={m} r={r}: {formula} vs {counted}")
            })?;
            cases += 1;
        }
    }
    let fixture = enumerate_domino_placements(16, 3).unwrap().count();
    ensure(fixture == 352, || format!("m=16 r=3 enumerated {fixture}"))?;
    let spent = within(start, Duration::from_secs(10))?;
    Ok(format!(
        "{cases} cases, 16-cycle with 3 dominos = 352, {spent:?}"
    ))
}

fn closed_form_identity() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for m in 3..=200u64 {
        for r in 1..=m / 2 {
            let (a, b) = (domino_count(m, r), domino_count_alt(m, r));
            ensure(a.is_ok() && a == b, || {
                format!("m={m} r={r}: {a:?} vs {b:?}")
            })?;
            cases += 1;
        }
    }
    let spent = within(start, Duration::from_secs(5))?;
    Ok(format!("{cases} cases, {spent:?}"))
}

fn touchard_vs_permutations() -> Outcome {
    let start = Instant::now();
    let expected = [0u32, 1, 2, 13, 80, 579, 4738];
    for (n, want) in (2..=8u64).zip(expected) {
        let brute = brute_tait(n).unwrap();
        let formula = tait_count(n).map_err(|e| e.to_string())?;
        ensure(brute == BigInt::from(want), || {
            format!("oracle n={n} gave {brute}")
        })?;
        ensure(formula == brute, || {
            format!("n={n}: formula {formula}, oracle {brute}")
        })?;
    }
    let spent = within(start, Duration::from_secs(30))?;
    Ok(format!("n=2..8 -> 0,1,2,13,80,579,4738, {spent:?}"))
}

fn menage_vs_seatings() -> Outcome {
    let mut values = Vec::new();
    for n in 2..=5u64 {
        let start = Instant::now();
        let brute = brute_menage(n).unwrap();
        let spent = start.elapsed();
        let formula = menage_count(n).map_err(|e| e.to_string())?;
        ensure(formula == brute, || {
            format!("n={n}: formula {formula}, oracle {brute}")
        })?;
        if n == 5 {
            ensure(spent < Duration::from_secs(120), || {
                format!("n=5 took {spent:?}")
            })?;
        }
        values.push(brute.to_string());
    }
    Ok(format!("n=2..5 -> {}", values.join(",")))
}

fn inclusion_exclusion_identity() -> Outcome {
    for n in 2..=7u64 {
        let mut signed = BigInt::default();
        for r in 0..=n {
            let incidences = ie_term_sum(n, r).unwrap();
            let closed = domino_count(2 * n, r).unwrap() * factorial(n - r);
            ensure(incidences == closed, || {
                format!("n={n} r={r}: {incidences} vs {closed}")
            })?;
            if r % 2 == 0 {
                signed += incidences;
            } else {
                signed -= incidences;
            }
        }
        let brute = brute_tait(n).unwrap();
        ensure(signed == brute, || {
            format!("n={n}: signed sum {signed}, oracle {brute}")
        })?;
    }
    Ok("n=2..7, every r, and the signed sums".into())
}

fn exact_division_soundness() -> Outcome {
    // Structural: the divisor of the closed form divides its numerator.
    for n in 2..=200u64 {
        let m = 2 * n;
        for r in 0..=n {
            let scaled = menage_core::binomial(m - r, r as i64) * m;
            ensure((scaled % (m - r)) == BigInt::default(), || {
                format!("n={n} r={r}")
            })?;
        }
        for step in IncrementalTerms::new(n).map_err(|e| e.to_string())? {
            step.map_err(|e| format!("n={n}: {e}"))?;
        }
        tait_count(n).map_err(|e| format!("n={n}: {e}"))?;
    }
    // Runtime-asserted beyond: every division in these runs is checked.
    for n in [1_000u64, 2_500, 5_000, 7_500, 10_000] {
        for step in IncrementalTerms::new(n).map_err(|e| e.to_string())? {
            step.map_err(|e| format!("n={n}: {e}"))?;
        }
        tait_count(n).map_err(|e| format!("n={n}: {e}"))?;
        for r in [0, 1, n / 3, n / 2, n - 1, n] {
            domino_count(2 * n, r).map_err(|e| format!("n={n} r={r}: {e}"))?;
        }
    }
    Ok("n<=200 exhaustively; n up to 10000 with runtime checks".into())
}

fn performance() -> Outcome {
    let start = Instant::now();
    let (n, last) = tait_sequence(10_000)
        .map_err(|e| e.to_string())?
        .last()
        .unwrap()
        .map_err(|e| e.to_string())?;
    let spent = within(start, Duration::from_secs(10))?;
    ensure(n == 10_000, || format!("last n was {n}"))?;
    let direct = tait_count_direct(10_000).map_err(|e| e.to_string())?;
    ensure(last == direct, || {
        "n=10000: incremental and direct differ".into()
    })?;
    for n in [100u64, 1_000] {
        let incremental = tait_count(n).map_err(|e| e.to_string())?;
        let direct = tait_count_direct(n).map_err(|e| e.to_string())?;
        ensure(incremental == direct, || {
            format!("n={n}: incremental and direct differ")
        })?;
    }
    Ok(format!(
        "tait(10000) via incremental path in {spent:?}; matches direct at 100, 1000, 10000"
    ))
}

fn menage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_menage"))
        .args(args)
        .output()
        .expect("run menage binary")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

fn bumped(v: Result<ExactInteger>, hit: bool) -> Result<ExactInteger> {
    v.map(|x| if hit { x + 1 } else { x })
}

fn perturbations() -> Vec<(&'static str, Formulas)> {
    let s = Formulas::standard();
    vec![
        (
            "factorial",
            Formulas {
                factorial: |k| factorial(k) + u32::from(k == 6),
                ..s
            },
        ),
        (
            "binomial",
            Formulas {
                binomial: |a, b| menage_core::binomial(a, b) + u32::from((a, b) == (10, 3)),
                ..s
            },
        ),
        (
            "domino_count",
            Formulas {
                domino_count: |m, r| bumped(domino_count(m, r), (m, r) == (12, 3)),
                ..s
            },
        ),
        (
            "domino_count_alt",
            Formulas {
                domino_count_alt: |m, r| bumped(domino_count_alt(m, r), (m, r) == (9, 2)),
                ..s
            },
        ),
        (
            "touchard_term",
            Formulas {
                touchard_term: |n, r| bumped(menage_core::touchard_term(n, r), (n, r) == (4, 2)),
                ..s
            },
        ),
        (
            "tait_count",
            Formulas {
                tait_count: |n| bumped(tait_count(n), n == 6),
                ..s
            },
        ),
        (
            "tait_count_direct",
            Formulas {
                tait_count_direct: |n| bumped(tait_count_direct(n), n == 7),
                ..s
            },
        ),
        (
            "tait_breakdown",
            Formulas {
                tait_breakdown: |n| {
                    menage_core::tait_breakdown(n).map(|mut b| {
                        if n == 5 {
                            b.total += 1;
                        }
                        b
                    })
                },
                ..s
            },
        ),
        (
            "menage_count",
            Formulas {
                menage_count: |n| bumped(menage_count(n), n == 4),
                ..s
            },
        ),
    ]
}

fn cli_contract() -> Outcome {
    let cases: [(&[&str], i32); 9] = [
        (&["count", "menage", "3"], 0),
        (&["count", "dominos", "16", "3"], 0),
        (&["count", "tait", "1"], 2),
        (&["count", "dominos", "2", "1"], 2),
        (&["table", "4", "2"], 2),
        (&["verify", "5", "bogus-suite"], 2),
        (&["bench", "1"], 2),
        (&["enumerate", "placements", "21", "1"], 2),
        (&["verify", "8", "all"], 0),
    ];
    for (args, want) in cases {
        let out = menage(args);
        ensure(code(&out) == want, || {
            format!("{args:?} exited {}, want {want}", code(&out))
        })?;
    }
    let out = menage(&["count", "menage", "3"]);
    ensure(out.stdout == b"12\n", || {
        "count menage 3 did not print 12".into()
    })?;
    let out = menage(&["count", "tait", "1"]);
    ensure(
        String::from_utf8_lossy(&out.stderr).contains("n >= 2"),
        || "n=1 diagnostic lacks domain".into(),
    )?;

    // csv round trip
    let out = menage(&["table", "2", "40", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    ensure(lines.next() == Some("n,tait,menage"), || {
        "csv header".into()
    })?;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        let n: u64 = fields[0].parse().map_err(|_| format!("bad n in {line}"))?;
        let tait: BigInt = fields[1]
            .parse()
            .map_err(|_| format!("bad tait in {line}"))?;
        let men: BigInt = fields[2]
            .parse()
            .map_err(|_| format!("bad menage in {line}"))?;
        ensure(
            tait == tait_count(n).unwrap() && men == menage_count(n).unwrap(),
            || format!("csv row {line} does not round-trip"),
        )?;
    }

    // json round trip, with terms
    let out = menage(&["table", "2", "30", "--format", "json", "--terms"]);
    let records: Vec<OutputRecord> =
        serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(records.len() == 29, || {
        format!("{} json records", records.len())
    })?;
    for rec in &records {
        let tait: BigInt = rec.tait.parse().map_err(|_| "bad tait".to_string())?;
        let men: BigInt = rec.menage.parse().map_err(|_| "bad menage".to_string())?;
        ensure(
            tait == tait_count(rec.n).unwrap() && men == menage_count(rec.n).unwrap(),
            || format!("json record n={} does not round-trip", rec.n),
        )?;
        let sum: BigInt = rec
            .terms
            .iter()
            .flatten()
            .map(|t| t.term.parse::<BigInt>().unwrap())
            .sum();
        ensure(sum == tait, || {
            format!("json terms for n={} do not sum to tait", rec.n)
        })?;
    }

    // mutation smoke test: every single perturbed formula is caught
    for (name, formulas) in perturbations() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let exit = menage_cli::verify(8, Suite::All, &formulas, &mut out, &mut err)
            .map_err(|e| e.to_string())?;
        ensure(exit.code() == 1, || {
            format!("perturbed {name} was not caught")
        })?;
        ensure(!verify::run(8, Suite::All, &formulas).all_passed(), || {
            name.to_string()
        })?;
    }
    Ok("exit codes 0/1/2, csv and json round trips, 9/9 perturbations caught".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "domino formula vs enumeration",
            domino_formula_vs_enumeration,
        ),
        ("closed-form domino identity", closed_form_identity),
        (
            "Touchard formula vs permutation oracle",
            touchard_vs_permutations,
        ),
        ("menage formula vs seating oracle", menage_vs_seatings),
        ("inclusion-exclusion identity", inclusion_exclusion_identity),
        ("exact-division soundness", exact_division_soundness),
        ("performance", performance),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("PASS AC{} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL AC{} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
