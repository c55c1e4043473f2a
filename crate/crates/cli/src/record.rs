//! Table rows and their text, CSV and JSON encodings.

use std::io::{self, Write};

use menage_core::{factorial, tait_breakdown, tait_sequence, TouchardBreakdown};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One summand of the Touchard sum, every field a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub r: String,
    pub d_r: String,
    pub sign: String,
    pub tail_factorial: String,
    pub term: String,
}

/// One table row. Counts are decimal strings so no consumer has to pick an
/// integer width.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u64,
    pub tait: String,
    pub menage: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terms: Option<Vec<TermRecord>>,
}

fn term_records(breakdown: &TouchardBreakdown) -> Vec<TermRecord> {
    breakdown
        .terms
        .iter()
        .map(|t| TermRecord {
            r: t.r.to_string(),
            d_r: t.domino_count.to_string(),
            sign: t.sign.to_string(),
            tail_factorial: t.tail_factorial.to_string(),
            term: t.term_value.to_string(),
        })
        .collect()
}

/// Rows for `n = from..=to` from the incremental sequence. With
/// `include_terms`, each row also carries its breakdown, whose total must
/// agree with the sequence value.
pub fn build_records(
    from: u64,
    to: u64,
    include_terms: bool,
) -> menage_core::Result<Vec<OutputRecord>> {
    let mut records = Vec::new();
    for entry in tait_sequence(to)?.skip(from.saturating_sub(2) as usize) {
        let (n, tait) = entry?;
        let terms = if include_terms {
            let breakdown = tait_breakdown(n)?;
            assert_eq!(
                breakdown.total, tait,
                "breakdown total disagrees with sequence at n = {n}"
            );
            Some(term_records(&breakdown))
        } else {
            None
        };
        let menage: BigInt = factorial(n) * &tait * 2u32;
        records.push(OutputRecord {
            n,
            tait: tait.to_string(),
            menage: menage.to_string(),
            terms,
        });
    }
    Ok(records)
}

pub fn write_text<W: Write>(out: &mut W, records: &[OutputRecord]) -> io::Result<()> {
    writeln!(out, "n tait menage")?;
    for rec in records {
        writeln!(out, "{} {} {}", rec.n, rec.tait, rec.menage)?;
        for t in rec.terms.iter().flatten() {
            writeln!(
                out,
                "  r={} d_r={} sign={} tail_factorial={} term={}",
                t.r, t.d_r, t.sign, t.tail_factorial, t.term
            )?;
        }
    }
    Ok(())
}

/// CSV with header `n,tait,menage`. Term breakdowns are not part of the CSV
/// layout.
pub fn write_csv<W: Write>(out: &mut W, records: &[OutputRecord]) -> io::Result<()> {
    writeln!(out, "n,tait,menage")?;
    for rec in records {
        writeln!(out, "{},{},{}", rec.n, rec.tait, rec.menage)?;
    }
    Ok(())
}

pub fn write_json<W: Write>(out: &mut W, records: &[OutputRecord]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, records)?;
    writeln!(out)
}
