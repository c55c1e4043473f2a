//! Verification suites binding the closed forms to each other and to the
//! brute-force oracles.
//!
//! The formulas under test are taken from a [`Formulas`] table rather than
//! called directly, so a test can swap in a deliberately broken entry and
//! confirm that some check catches it.

use std::fmt;

use menage_core::{ExactInteger, Result, TouchardBreakdown};
use menage_oracles::{brute_menage, brute_tait, enumerate_domino_placements, ie_term_sum};
use num_bigint::BigInt;

/// The closed-form operations exercised by the suites.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub factorial: fn(u64) -> ExactInteger,
    pub binomial: fn(u64, i64) -> ExactInteger,
    pub domino_count: fn(u64, u64) -> Result<ExactInteger>,
    pub domino_count_alt: fn(u64, u64) -> Result<ExactInteger>,
    pub touchard_term: fn(u64, u64) -> Result<ExactInteger>,
    pub tait_count: fn(u64) -> Result<ExactInteger>,
    pub tait_count_direct: fn(u64) -> Result<ExactInteger>,
    pub tait_breakdown: fn(u64) -> Result<TouchardBreakdown>,
    pub menage_count: fn(u64) -> Result<ExactInteger>,
}

impl Formulas {
    pub fn standard() -> Self {
        Self {
            factorial: menage_core::factorial,
            binomial: menage_core::binomial,
            domino_count: menage_core::domino_count,
            domino_count_alt: menage_core::domino_count_alt,
            touchard_term: menage_core::touchard_term,
            tait_count: menage_core::tait_count,
            tait_count_direct: menage_core::tait_count_direct,
            tait_breakdown: menage_core::tait_breakdown,
            menage_count: menage_core::menage_count,
        }
    }
}

impl fmt::Debug for Formulas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Formulas { .. }")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Formulas,
    Oracles,
    Ie,
    All,
}

/// Largest `n` each suite accepts.
pub const FORMULAS_MAX_N: u64 = 100;
pub const TAIT_ORACLE_MAX_N: u64 = 8;
pub const MENAGE_ORACLE_MAX_N: u64 = 5;
pub const PLACEMENT_ORACLE_MAX_M: u64 = 16;
pub const IE_MAX_N: u64 = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}", self.name),
            Some(why) => write!(f, "FAIL {}: {}", self.name, why),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub warnings: Vec<String>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - self.failures(),
            self.failures()
        )
    }

    fn clamp(&mut self, suite: &str, what: &str, requested: u64, limit: u64) -> u64 {
        if requested > limit {
            self.warnings.push(format!(
                "warning: {suite}: clamping {what} from {requested} to the oracle bound {limit}"
            ));
            limit
        } else {
            requested
        }
    }

    // Runs `cases`, recording the first disagreement under one check name.
    fn check<I, F>(&mut self, name: String, cases: I, mut test: F)
    where
        I: IntoIterator,
        F: FnMut(I::Item) -> std::result::Result<(), String>,
    {
        let failure = cases.into_iter().find_map(|case| test(case).err());
        self.checks.push(CheckResult { name, failure });
    }
}

fn compare(
    what: String,
    got: Result<BigInt>,
    want: Result<BigInt>,
) -> std::result::Result<(), String> {
    match (got, want) {
        (Ok(g), Ok(w)) if g == w => Ok(()),
        (Ok(g), Ok(w)) => Err(format!("{what}: {g} != {w}")),
        (Err(e), _) | (_, Err(e)) => Err(format!("{what}: {e}")),
    }
}

fn oracle<T>(r: menage_oracles::Result<T>) -> T {
    r.expect("oracle called within its bounds")
}

/// Runs `suite` with couple counts up to `max_n` (`max_n >= 2`), clamping to
/// each check's bound.
pub fn run(max_n: u64, suite: Suite, f: &Formulas) -> Report {
    debug_assert!(max_n >= 2);
    let mut report = Report::default();
    if matches!(suite, Suite::Formulas | Suite::All) {
        formulas_suite(&mut report, max_n, f);
    }
    if matches!(suite, Suite::Oracles | Suite::All) {
        oracles_suite(&mut report, max_n, f);
    }
    if matches!(suite, Suite::Ie | Suite::All) {
        ie_suite(&mut report, max_n, f);
    }
    report
}

fn formulas_suite(report: &mut Report, max_n: u64, f: &Formulas) {
    let n_max = report.clamp("formulas", "n", max_n, FORMULAS_MAX_N);
    let m_max = 2 * n_max;

    report.check(
        format!("factorial recurrence k=1..{m_max}"),
        1..=m_max,
        |k| {
            compare(
                format!("{k}!"),
                Ok((f.factorial)(k)),
                Ok((f.factorial)(k - 1) * k),
            )
        },
    );
    report.check(
        format!("binomial Pascal rule a=1..{m_max}"),
        1..=m_max,
        |a| {
            (0..=a as i64 + 1).try_for_each(|b| {
                compare(
                    format!("C({a},{b})"),
                    Ok((f.binomial)(a, b)),
                    Ok((f.binomial)(a - 1, b - 1) + (f.binomial)(a - 1, b)),
                )
            })
        },
    );
    report.check(
        format!("domino exact divisibility m=3..{m_max}"),
        3..=m_max,
        |m| {
            (0..=m / 2).try_for_each(|r| {
                let scaled = (f.binomial)(m - r, r as i64) * m;
                if (&scaled % (m - r)) == BigInt::default() {
                    Ok(())
                } else {
                    Err(format!(
                        "m={m} r={r}: {m}*C({},{r}) not divisible by {}",
                        m - r,
                        m - r
                    ))
                }
            })
        },
    );
    report.check(
        format!("domino closed forms agree m=3..{m_max}"),
        3..=m_max,
        |m| {
            (1..=m / 2).try_for_each(|r| {
                compare(
                    format!("m={m} r={r}"),
                    (f.domino_count)(m, r),
                    (f.domino_count_alt)(m, r),
                )
            })
        },
    );
    report.check(
        format!("domino boundary values m=3..{m_max}"),
        3..=m_max,
        |m| {
            compare(
                format!("d({m},0)"),
                (f.domino_count)(m, 0),
                Ok(BigInt::from(1)),
            )?;
            if m % 2 == 0 {
                compare(
                    format!("d({m},{})", m / 2),
                    (f.domino_count)(m, m / 2),
                    Ok(BigInt::from(2)),
                )?;
            }
            Ok(())
        },
    );
    report.check(
        format!("breakdown consistency n=2..{n_max}"),
        2..=n_max,
        |n| {
            let b = (f.tait_breakdown)(n).map_err(|e| format!("n={n}: {e}"))?;
            let mut sum = BigInt::default();
            for (i, t) in b.terms.iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                if t.r != i as u64 || t.sign != sign {
                    return Err(format!("n={n}: term {i} has r={} sign={}", t.r, t.sign));
                }
                let product = &t.domino_count * &t.tail_factorial * sign;
                compare(
                    format!("n={n} r={i} product"),
                    Ok(t.term_value.clone()),
                    Ok(product),
                )?;
                compare(
                    format!("n={n} r={i} tail"),
                    Ok(t.tail_factorial.clone()),
                    Ok((f.factorial)(n - t.r)),
                )?;
                compare(
                    format!("n={n} r={i} term"),
                    Ok(t.term_value.clone()),
                    (f.touchard_term)(n, t.r),
                )?;
                sum += &t.term_value;
            }
            if b.terms.len() as u64 != n + 1 {
                return Err(format!("n={n}: {} terms", b.terms.len()));
            }
            compare(format!("n={n} total"), Ok(b.total.clone()), Ok(sum))?;
            compare(
                format!("n={n} total vs tait"),
                Ok(b.total),
                (f.tait_count)(n),
            )
        },
    );
    report.check(
        format!("incremental equals direct n=2..{n_max}"),
        2..=n_max,
        |n| {
            compare(
                format!("n={n}"),
                (f.tait_count)(n),
                (f.tait_count_direct)(n),
            )
        },
    );
}

fn oracles_suite(report: &mut Report, max_n: u64, f: &Formulas) {
    let m_max = report.clamp(
        "oracles",
        "cycle length 2n",
        2 * max_n,
        PLACEMENT_ORACLE_MAX_M,
    );
    for m in 3..=m_max {
        report.check(format!("placement enumeration m={m}"), 0..=m / 2 + 1, |r| {
            let counted = enumerate_domino_placements(m, r)
                .expect("within bounds")
                .count();
            compare(
                format!("m={m} r={r}"),
                (f.domino_count)(m, r),
                Ok(BigInt::from(counted)),
            )
        });
    }
    let tait_max = report.clamp("oracles", "n for permutations", max_n, TAIT_ORACLE_MAX_N);
    for n in 2..=tait_max {
        report.check(format!("tait oracle n={n}"), [n], |n| {
            compare(
                format!("n={n}"),
                (f.tait_count)(n),
                Ok(oracle(brute_tait(n))),
            )
        });
    }
    let menage_max = report.clamp("oracles", "n for seatings", max_n, MENAGE_ORACLE_MAX_N);
    for n in 2..=menage_max {
        report.check(format!("menage oracle n={n}"), [n], |n| {
            let brute = oracle(brute_menage(n));
            compare(format!("n={n}"), (f.menage_count)(n), Ok(brute.clone()))?;
            let via_tait = (f.factorial)(n) * oracle(brute_tait(n)) * 2;
            compare(format!("n={n} 2*n!*tait"), Ok(brute), Ok(via_tait))
        });
    }
}

fn ie_suite(report: &mut Report, max_n: u64, f: &Formulas) {
    let n_max = report.clamp("ie", "n", max_n, IE_MAX_N);
    for n in 2..=n_max {
        report.check(format!("inclusion-exclusion terms n={n}"), 0..=n, |r| {
            let expected = (f.domino_count)(2 * n, r).map(|d| d * (f.factorial)(n - r));
            compare(
                format!("n={n} r={r}"),
                Ok(oracle(ie_term_sum(n, r))),
                expected,
            )
        });
        report.check(format!("inclusion-exclusion telescopes n={n}"), [n], |n| {
            let mut signed = BigInt::default();
            for r in 0..=n {
                let term = oracle(ie_term_sum(n, r));
                if r % 2 == 0 {
                    signed += term;
                } else {
                    signed -= term;
                }
            }
            compare(format!("n={n}"), Ok(signed), Ok(oracle(brute_tait(n))))
        });
    }
}
