//! Reproduction of the gcd tables for the familiar families.
//!
//! * Table 3: `gcd(G'_m, G'_n) = G'_{gcd(m,n)}` for six Fibonacci-type families.
//! * Table 4: the Lucas-type formula, with the literal entry 1 whenever
//!   `E2(m) != E2(n)`.
//! * Table 5: `gcd(G'_m, G*_n)` for six equivalent pairs, with the literal
//!   entry 1 outside the `E2(m) > E2(n)` branch.
//!
//! Every cell is checked against the oracle gcd.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{builtin_family, Sequence};
use crate::theorems::{
    compare, gcd_fib_closed, gcd_lucas_closed, gcd_mixed_closed, CaseTag, GcdReport,
};

/// Largest index a table sweep accepts.
pub const MAX_TABLE_INDEX: usize = 64;

const TABLE3: [&str; 6] = [
    "fibonacci",
    "pell",
    "fermat",
    "chebyshev2",
    "jacobsthal",
    "morgan-voyce-b",
];
const TABLE4: [&str; 6] = [
    "lucas",
    "pell-lucas-prime",
    "fermat-lucas",
    "chebyshev1",
    "jacobsthal-lucas",
    "morgan-voyce-c",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Table {
    Three,
    Four,
    Five,
}

impl Table {
    pub fn number(self) -> u8 {
        match self {
            Table::Three => 3,
            Table::Four => 4,
            Table::Five => 5,
        }
    }

    /// Row labels: family names, or `fib/lucas` for Table 5.
    pub fn rows(self) -> Vec<String> {
        match self {
            Table::Three => TABLE3.iter().map(|s| s.to_string()).collect(),
            Table::Four => TABLE4.iter().map(|s| s.to_string()).collect(),
            Table::Five => TABLE3
                .iter()
                .zip(TABLE4)
                .map(|(f, l)| format!("{f}/{l}"))
                .collect(),
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for Table {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "3" => Ok(Table::Three),
            "4" => Ok(Table::Four),
            "5" => Ok(Table::Five),
            other => Err(Error::BadTable(other.to_string())),
        }
    }
}

/// Sweep results for one row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub comparisons: usize,
    pub agreements: usize,
    pub cases: BTreeMap<CaseTag, usize>,
    /// Cells where the table prints the constant 1.
    pub literal_checks: usize,
    pub literal_agreements: usize,
    pub mismatches: Vec<GcdReport>,
}

impl TableRow {
    pub fn all_agree(&self) -> bool {
        self.agreements == self.comparisons && self.literal_agreements == self.literal_checks
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub table: u8,
    pub max_index: usize,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(TableRow::all_agree)
    }
}

fn sweep<F>(label: String, max_index: usize, cell: F) -> Result<TableRow>
where
    F: Fn(usize, usize) -> Result<GcdReport> + Sync,
{
    let cells: Vec<(usize, usize)> = (1..=max_index)
        .flat_map(|m| (1..=max_index).map(move |n| (m, n)))
        .collect();
    let reports = cells
        .into_par_iter()
        .map(|(m, n)| cell(m, n))
        .collect::<Result<Vec<_>>>()?;
    let mut row = TableRow {
        label,
        comparisons: reports.len(),
        agreements: 0,
        cases: BTreeMap::new(),
        literal_checks: 0,
        literal_agreements: 0,
        mismatches: Vec::new(),
    };
    for report in reports {
        *row.cases.entry(report.case_tag).or_default() += 1;
        if matches!(
            report.case_tag,
            CaseTag::LucasUnequalE2 | CaseTag::MixedOtherwise
        ) {
            row.literal_checks += 1;
            if report.closed_form.is_one() && report.oracle.is_one() {
                row.literal_agreements += 1;
            }
        }
        if report.agrees {
            row.agreements += 1;
        } else {
            row.mismatches.push(report);
        }
    }
    Ok(row)
}

/// Checks every cell `1 <= m, n <= max_index` of `table`.
///
/// ```
/// use gfp::tables::{reproduce, Table};
/// let report = reproduce(Table::Four, 6).unwrap();
/// assert_eq!(report.rows.len(), 6);
/// assert!(report.all_agree());
/// ```
pub fn reproduce(table: Table, max_index: usize) -> Result<TableReport> {
    if max_index > MAX_TABLE_INDEX {
        return Err(Error::IndexTooLarge {
            index: max_index,
            cap: MAX_TABLE_INDEX,
        });
    }
    let rows = match table {
        Table::Three => TABLE3
            .iter()
            .map(|name| {
                let s = Sequence::new(builtin_family(name)?);
                sweep(name.to_string(), max_index, |m, n| {
                    Ok(compare(
                        &s,
                        &s,
                        m,
                        n,
                        gcd_fib_closed(&s, m, n)?,
                        CaseTag::FibStrong,
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?,
        Table::Four => TABLE4
            .iter()
            .map(|name| {
                let s = Sequence::new(builtin_family(name)?);
                sweep(name.to_string(), max_index, |m, n| {
                    let (closed, tag) = gcd_lucas_closed(&s, m, n)?;
                    Ok(compare(&s, &s, m, n, closed, tag))
                })
            })
            .collect::<Result<Vec<_>>>()?,
        Table::Five => TABLE3
            .iter()
            .zip(TABLE4)
            .map(|(f, l)| {
                let fib = Sequence::new(builtin_family(f)?);
                let lucas = Sequence::new(builtin_family(l)?);
                sweep(format!("{f}/{l}"), max_index, |m, n| {
                    let (closed, tag) = gcd_mixed_closed(&fib, &lucas, m, n)?;
                    Ok(compare(&fib, &lucas, m, n, closed, tag))
                })
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(TableReport {
        table: table.number(),
        max_index,
        rows,
    })
}
