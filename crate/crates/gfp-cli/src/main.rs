//! `gfp`: terms, gcds, identity sweeps and table reproduction for
//! generalized Fibonacci polynomials.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gfp::family::{builtin_families, builtin_family, builtin_partner, nth_term};
use gfp::identities::{run_catalog, Identity, IdentityReport, Pair};
use gfp::random::random_pairs;
use gfp::tables::{reproduce, Table, MAX_TABLE_INDEX};
use gfp::theorems::{
    compare, gcd_fib_closed, gcd_lucas_closed, gcd_mixed_closed, oracle_gcd, CaseTag,
};
use gfp::{Error, Family, Kind, Poly, Sequence};
use serde::Serialize;
use serde_json::json;

const MAX_TERM_INDEX: usize = 10_000;
const MAX_VERIFY_INDEX: usize = 64;

#[derive(Parser)]
#[command(
    name = "gfp",
    version,
    about = "Generalized Fibonacci polynomials over Z[x]"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in families with their equivalent partners.
    Families {
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Print the n-th term of a family.
    Term { family: String, n: usize },
    /// gcd(A_m, B_n) by closed form, optionally checked against the oracle.
    Gcd {
        a: String,
        m: usize,
        b: String,
        n: usize,
        #[arg(long)]
        check: bool,
    },
    /// Sweep identities over a set of families.
    Verify {
        /// Identity id or `all`.
        #[arg(long, default_value = "all")]
        identity: String,
        /// `builtin`, `random:K`, or a comma-separated list of family names.
        #[arg(long, default_value = "builtin")]
        families: String,
        #[arg(long, default_value_t = 10)]
        max_index: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reproduce Table 3, 4 or 5 against the oracle.
    Table {
        which: String,
        #[arg(long, default_value_t = 24)]
        max_index: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(alias = "fibonacci-type")]
    Fibonacci,
    #[value(alias = "lucas-type")]
    Lucas,
}

struct Run {
    out: String,
    ok: bool,
}

fn parse_family(selector: &str) -> Result<Family, Error> {
    if selector.trim_start().starts_with('{') {
        let family: Family = serde_json::from_str(selector)
            .map_err(|e| Error::InvalidArgument(format!("bad family JSON: {e}")))?;
        family.validated()
    } else {
        builtin_family(selector)
    }
}

fn cmd_families(kind: Option<KindArg>, json: bool) -> Run {
    let families: Vec<Family> = builtin_families()
        .into_iter()
        .filter(|f| match kind {
            None => true,
            Some(KindArg::Fibonacci) => f.kind() == Kind::FibonacciType,
            Some(KindArg::Lucas) => f.kind() == Kind::LucasType,
        })
        .collect();
    let mut out = String::new();
    if json {
        let rows: Vec<_> = families
            .iter()
            .map(|f| {
                let mut v = serde_json::to_value(f).expect("family serializes");
                v["partner"] = json!(builtin_partner(f.name()));
                v
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string(&rows).expect("json")).unwrap();
    } else {
        let rows: Vec<[String; 7]> = families
            .iter()
            .map(|f| {
                [
                    f.name().to_string(),
                    f.kind().to_string(),
                    f.d().to_string(),
                    f.g().to_string(),
                    f.p0().to_string(),
                    f.p1().to_string(),
                    builtin_partner(f.name()).unwrap_or("-").to_string(),
                ]
            })
            .collect();
        let header = ["name", "kind", "d", "g", "p0", "p1", "partner"].map(String::from);
        let widths: Vec<usize> = (0..7)
            .map(|i| {
                rows.iter()
                    .chain([&header])
                    .map(|r| r[i].len())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for row in std::iter::once(&header).chain(&rows) {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
        }
    }
    Run { out, ok: true }
}

fn cmd_term(selector: &str, n: usize, json: bool) -> Result<Run, Error> {
    let family = parse_family(selector)?;
    if n > MAX_TERM_INDEX {
        return Err(Error::IndexTooLarge {
            index: n,
            cap: MAX_TERM_INDEX,
        });
    }
    let term = nth_term(&family, n);
    let out = if json {
        format!(
            "{}\n",
            json!({ "family": family.name(), "n": n, "term": term })
        )
    } else {
        format!("{term}\n")
    };
    Ok(Run { out, ok: true })
}

fn closed_gcd(a: &Sequence, b: &Sequence, m: usize, n: usize) -> Result<(Poly, CaseTag), Error> {
    let (fa, fb) = (a.family(), b.family());
    if fa.same_sequence(fb) {
        match fa.kind() {
            Kind::FibonacciType => Ok((gcd_fib_closed(a, m, n)?, CaseTag::FibStrong)),
            Kind::LucasType => gcd_lucas_closed(a, m, n),
        }
    } else if fa.kind() == Kind::FibonacciType {
        gcd_mixed_closed(a, b, m, n)
    } else {
        gcd_mixed_closed(b, a, n, m)
    }
}

fn cmd_gcd(a: &str, m: usize, b: &str, n: usize, check: bool, json: bool) -> Result<Run, Error> {
    let (fa, fb) = (parse_family(a)?, parse_family(b)?);
    for index in [m, n] {
        if index > MAX_TERM_INDEX {
            return Err(Error::IndexTooLarge {
                index,
                cap: MAX_TERM_INDEX,
            });
        }
    }
    let (sa, sb) = (Sequence::new(fa), Sequence::new(fb));
    let mut out = String::new();
    match closed_gcd(&sa, &sb, m, n) {
        Ok((closed, tag)) => {
            if check {
                let report = compare(&sa, &sb, m, n, closed, tag);
                if json {
                    writeln!(out, "{}", serde_json::to_string(&report).expect("json")).unwrap();
                } else {
                    writeln!(out, "closed form: {}", report.closed_form).unwrap();
                    writeln!(out, "case: {:?}", report.case_tag).unwrap();
                    writeln!(out, "oracle: {}", report.oracle).unwrap();
                    writeln!(out, "agrees: {}", report.agrees).unwrap();
                }
                Ok(Run {
                    out,
                    ok: report.agrees,
                })
            } else {
                if json {
                    let v = json!({ "m": m, "n": n, "case_tag": tag, "closed_form": closed });
                    writeln!(out, "{v}").unwrap();
                } else {
                    writeln!(out, "closed form: {closed}").unwrap();
                    writeln!(out, "case: {tag:?}").unwrap();
                }
                Ok(Run { out, ok: true })
            }
        }
        Err(err) => {
            eprintln!("warning: no closed form applies ({err}); computing the oracle gcd only");
            let oracle = oracle_gcd(&sa, &sb, m, n);
            if json {
                writeln!(out, "{}", json!({ "m": m, "n": n, "oracle": oracle })).unwrap();
            } else {
                writeln!(out, "oracle: {oracle}").unwrap();
            }
            Ok(Run { out, ok: true })
        }
    }
}

fn parse_pairs(selector: &str, seed: u64) -> Result<Vec<Pair>, Error> {
    if selector == "builtin" {
        return Ok(Pair::builtins());
    }
    if let Some(count) = selector.strip_prefix("random:") {
        let count = count
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad random count `{count}`")))?;
        return random_pairs(seed, count);
    }
    let selectors: Vec<&str> = if selector.trim_start().starts_with('{') {
        vec![selector]
    } else {
        selector.split(',').map(str::trim).collect()
    };
    selectors
        .into_iter()
        .map(|s| Pair::around(parse_family(s)?))
        .collect()
}

#[derive(Serialize)]
struct Summary {
    identity: String,
    total: usize,
    passed: usize,
}

fn cmd_verify(
    identity: &str,
    families: &str,
    max_index: usize,
    seed: u64,
    json: bool,
) -> Result<Run, Error> {
    let identities: Vec<Identity> = if identity == "all" {
        Identity::ALL.to_vec()
    } else {
        identity
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_, _>>()?
    };
    if max_index > MAX_VERIFY_INDEX {
        return Err(Error::IndexTooLarge {
            index: max_index,
            cap: MAX_VERIFY_INDEX,
        });
    }
    let pairs = parse_pairs(families, seed)?;
    let reports = run_catalog(&pairs, &identities, max_index)?;

    let mut summary: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for r in &reports {
        let entry = summary.entry(r.identity_id.as_str()).or_default();
        entry.0 += 1;
        entry.1 += usize::from(r.pass);
    }
    let failures: Vec<&IdentityReport> = reports.iter().filter(|r| !r.pass).collect();
    let mut out = String::new();
    if json {
        for r in &reports {
            writeln!(out, "{}", serde_json::to_string(r).expect("json")).unwrap();
        }
    } else {
        for r in &failures {
            writeln!(
                out,
                "FAIL {} {} {:?}: lhs = {}, rhs = {}",
                r.identity_id, r.family, r.params, r.lhs, r.rhs
            )
            .unwrap();
        }
        for (id, (total, passed)) in &summary {
            writeln!(out, "{id}: {passed}/{total} pass").unwrap();
        }
        let witnesses = reports.iter().filter(|r| r.witness.is_some()).count();
        writeln!(
            out,
            "total: {}/{} pass across {} family pairs, {witnesses} witnesses",
            reports.len() - failures.len(),
            reports.len(),
            pairs.len()
        )
        .unwrap();
    }
    if json {
        let summaries: Vec<Summary> = summary
            .iter()
            .map(|(id, &(total, passed))| Summary {
                identity: id.to_string(),
                total,
                passed,
            })
            .collect();
        eprintln!("{}", serde_json::to_string(&summaries).expect("json"));
    }
    Ok(Run {
        out,
        ok: failures.is_empty(),
    })
}

fn cmd_table(which: &str, max_index: usize, json: bool) -> Result<Run, Error> {
    let table: Table = which.parse()?;
    if max_index > MAX_TABLE_INDEX {
        return Err(Error::IndexTooLarge {
            index: max_index,
            cap: MAX_TABLE_INDEX,
        });
    }
    let report = reproduce(table, max_index)?;
    let mut out = String::new();
    if json {
        writeln!(out, "{}", serde_json::to_string(&report).expect("json")).unwrap();
    } else {
        writeln!(out, "Table {table}, 1 <= m, n <= {max_index}").unwrap();
        for row in &report.rows {
            let cases: Vec<String> = row
                .cases
                .iter()
                .map(|(tag, k)| format!("{tag:?} {k}"))
                .collect();
            write!(
                out,
                "{:<34} {}/{} agree ({})",
                row.label,
                row.agreements,
                row.comparisons,
                cases.join(", ")
            )
            .unwrap();
            if row.literal_checks > 0 {
                write!(
                    out,
                    ", literal 1: {}/{}",
                    row.literal_agreements, row.literal_checks
                )
                .unwrap();
            }
            writeln!(out).unwrap();
            for m in &row.mismatches {
                writeln!(
                    out,
                    "  mismatch at ({}, {}): closed {} vs oracle {}",
                    m.m, m.n, m.closed_form, m.oracle
                )
                .unwrap();
            }
        }
    }
    Ok(Run {
        out,
        ok: report.all_agree(),
    })
}

fn configure_threads() {
    if let Some(n) = std::env::var("GFP_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let json = cli.json;
    let result = match &cli.command {
        Command::Families { kind } => Ok(cmd_families(*kind, json)),
        Command::Term { family, n } => cmd_term(family, *n, json),
        Command::Gcd { a, m, b, n, check } => cmd_gcd(a, *m, b, *n, *check, json),
        Command::Verify {
            identity,
            families,
            max_index,
            seed,
        } => cmd_verify(identity, families, *max_index, *seed, json),
        Command::Table { which, max_index } => cmd_table(which, *max_index, json),
    };
    match result {
        Ok(run) => {
            print!("{}", run.out);
            if run.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
