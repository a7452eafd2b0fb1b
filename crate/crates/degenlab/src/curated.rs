//! Curated smoothability verdicts.
//!
//! The battery only ever rules arrangements out; the table here records what
//! is actually known about the survivors, keyed by canonical certificate.
//! Rows live in a tab-separated file with one fixed header line:
//!
//! ```text
//! # symbol <TAB> certificate <TAB> m <TAB> status <TAB> source
//! (2|1,0) <TAB> 1-2 <TAB> =3 <TAB> Limit <TAB> ...
//! ```
//!
//! The `m` column restricts a row to one plane count (`=5`), a range (`>=7`)
//! or all (`*`); at lookup time the most specific matching row wins.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{ParseError, Result};
use crate::graph::ArrangementGraph;
use crate::symbol::{parse_type_symbol, type_symbol, TypeSymbol};

/// The header line every table file starts with.
pub const TABLE_HEADER: &str = "# symbol\tcertificate\tm\tstatus\tsource";

const BUILTIN_TABLE: &str = include_str!("../data/curated.tsv");

/// What is known about arrangements of one combinatorial class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CuratedStatus {
    /// The class is a limit double curve of a complete degeneration.
    Limit,
    /// Ruled out at the stated plane count, though not for all m.
    NotLimitForThisM,
    /// Ruled out at every plane count.
    AbsolutelyNotLimit,
    /// Survives every known obstruction but has no construction yet.
    PotentiallyLimit,
    /// Achievable as a limit only after adding virtual components.
    VirtuallyLimitOnly,
}

impl fmt::Display for CuratedStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CuratedStatus::Limit => "Limit",
            CuratedStatus::NotLimitForThisM => "NotLimitForThisM",
            CuratedStatus::AbsolutelyNotLimit => "AbsolutelyNotLimit",
            CuratedStatus::PotentiallyLimit => "PotentiallyLimit",
            CuratedStatus::VirtuallyLimitOnly => "VirtuallyLimitOnly",
        })
    }
}

impl FromStr for CuratedStatus {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        Ok(match s {
            "Limit" => CuratedStatus::Limit,
            "NotLimitForThisM" => CuratedStatus::NotLimitForThisM,
            "AbsolutelyNotLimit" => CuratedStatus::AbsolutelyNotLimit,
            "PotentiallyLimit" => CuratedStatus::PotentiallyLimit,
            "VirtuallyLimitOnly" => CuratedStatus::VirtuallyLimitOnly,
            _ => return Err(()),
        })
    }
}

/// Which plane counts a curated row speaks about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MPredicate {
    Exactly(u32),
    AtLeast(u32),
    Any,
}

impl MPredicate {
    pub fn matches(&self, m: u32) -> bool {
        match *self {
            MPredicate::Exactly(n) => m == n,
            MPredicate::AtLeast(n) => m >= n,
            MPredicate::Any => true,
        }
    }

    /// Lower ranks win at lookup time; among `>=` rows the higher threshold
    /// is the more specific one.
    fn rank(&self) -> (u8, i64) {
        match *self {
            MPredicate::Exactly(_) => (0, 0),
            MPredicate::AtLeast(n) => (1, -(n as i64)),
            MPredicate::Any => (2, 0),
        }
    }
}

impl fmt::Display for MPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MPredicate::Exactly(n) => write!(f, "={n}"),
            MPredicate::AtLeast(n) => write!(f, ">={n}"),
            MPredicate::Any => f.write_str("*"),
        }
    }
}

/// A curated verdict as returned from a lookup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnownVerdict {
    pub status: CuratedStatus,
    pub source: String,
    pub applicable_m: MPredicate,
}

/// One row of the table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CuratedRow {
    pub symbol: TypeSymbol,
    pub certificate: String,
    pub applicable_m: MPredicate,
    pub status: CuratedStatus,
    pub source: String,
}

/// An ordered collection of curated rows.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CuratedTable {
    rows: Vec<CuratedRow>,
}

impl CuratedTable {
    pub fn rows(&self) -> &[CuratedRow] {
        &self.rows
    }

    /// The table shipped with the crate.
    pub fn builtin() -> &'static CuratedTable {
        static TABLE: OnceLock<CuratedTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            parse_curated(BUILTIN_TABLE).expect("the built-in curated table must parse")
        })
    }

    /// The most specific verdict for a certificate at a given plane count.
    pub fn lookup(&self, certificate: &str, m: u32) -> Option<KnownVerdict> {
        self.rows
            .iter()
            .filter(|r| r.certificate == certificate && r.applicable_m.matches(m))
            .min_by_key(|r| r.applicable_m.rank())
            .map(|r| KnownVerdict {
                status: r.status,
                source: r.source.clone(),
                applicable_m: r.applicable_m,
            })
    }
}

/// [`CuratedTable::lookup`] as a free function, the conventional entry point.
pub fn curated_verdict(table: &CuratedTable, certificate: &str, m: u32) -> Option<KnownVerdict> {
    table.lookup(certificate, m)
}

/// Parses a curated table; positions in errors are 1-based line/column.
pub fn parse_curated(input: &str) -> Result<CuratedTable> {
    let mut rows: Vec<CuratedRow> = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line_no = lineno + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(ParseError::new(
                line_no,
                1,
                format!("expected 5 tab-separated fields, found {}", fields.len()),
            )
            .into());
        }
        let col = |k: usize| fields[..k].iter().map(|f| f.len() + 1).sum::<usize>() + 1;

        let symbol = parse_type_symbol(fields[0]).map_err(|e| match e {
            crate::error::Error::Parse(p) => crate::error::Error::Parse(ParseError::new(
                line_no,
                col(0) + p.column - 1,
                format!("bad symbol: {}", p.message),
            )),
            other => other,
        })?;
        let certificate = fields[1].to_string();
        validate_certificate(&certificate, &symbol)
            .map_err(|msg| ParseError::new(line_no, col(1), msg))?;
        let applicable_m = parse_predicate(fields[2]).ok_or_else(|| {
            ParseError::new(line_no, col(2), "bad m predicate, want =N, >=N or *")
        })?;
        let status = fields[3].parse::<CuratedStatus>().map_err(|_| {
            ParseError::new(line_no, col(3), format!("unknown status {:?}", fields[3]))
        })?;
        let source = fields[4].to_string();
        if source.is_empty() {
            return Err(ParseError::new(line_no, col(4), "empty source").into());
        }
        if rows.iter().any(|r| r.certificate == certificate && r.applicable_m == applicable_m) {
            return Err(ParseError::new(
                line_no,
                1,
                format!("duplicate row for certificate {certificate:?} at {applicable_m}"),
            )
            .into());
        }
        rows.push(CuratedRow { symbol, certificate, applicable_m, status, source });
    }
    Ok(CuratedTable { rows })
}

/// Serializes a table; parsing the output reproduces the table, and the
/// shipped file is byte-for-byte the serialization of its own parse.
pub fn serialize_curated(table: &CuratedTable) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for r in &table.rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.symbol, r.certificate, r.applicable_m, r.status, r.source
        ));
    }
    out
}

fn parse_predicate(s: &str) -> Option<MPredicate> {
    if s == "*" {
        return Some(MPredicate::Any);
    }
    if let Some(rest) = s.strip_prefix(">=") {
        return rest.parse().ok().map(MPredicate::AtLeast);
    }
    if let Some(rest) = s.strip_prefix('=') {
        return rest.parse().ok().map(MPredicate::Exactly);
    }
    None
}

/// Checks that a certificate is a well-formed edge list realizing the row's
/// symbol, so the table cannot drift out of sync with the classifier.
fn validate_certificate(cert: &str, symbol: &TypeSymbol) -> std::result::Result<(), String> {
    if cert.is_empty() {
        return if symbol.is_empty() {
            Ok(())
        } else {
            Err("empty certificate for a non-empty symbol".into())
        };
    }
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut max_v = 0u32;
    for part in cert.split(',') {
        let (a, b) =
            part.split_once('-').ok_or_else(|| format!("bad certificate edge {part:?}"))?;
        let a: u32 = a.parse().map_err(|_| format!("bad certificate edge {part:?}"))?;
        let b: u32 = b.parse().map_err(|_| format!("bad certificate edge {part:?}"))?;
        max_v = max_v.max(a).max(b);
        pairs.push((a, b));
    }
    let g =
        ArrangementGraph::new(max_v.max(3), pairs).map_err(|e| format!("bad certificate: {e}"))?;
    if &type_symbol(&g) != symbol {
        return Err(format!("certificate realizes {}, not the stated symbol", type_symbol(&g)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn table(body: &str) -> CuratedTable {
        parse_curated(&format!("{TABLE_HEADER}\n{body}")).unwrap()
    }

    #[test]
    fn parses_and_serializes_round_trip() {
        let input = format!(
            "{TABLE_HEADER}\n\
             (2|1,0)\t1-2\t=3\tLimit\tcomplete degeneration, one line kept\n\
             (3,0,1|3,0)\t1-2,1-3,1-4\t=5\tNotLimitForThisM\tplanarity trap\n\
             (3,0,1|3,0)\t1-2,1-3,1-4\t*\tPotentiallyLimit\tno obstruction known\n"
        );
        let t = parse_curated(&input).unwrap();
        assert_eq!(t.rows().len(), 3);
        assert_eq!(serialize_curated(&t), input);
        assert_eq!(parse_curated(&serialize_curated(&t)).unwrap(), t);
    }

    #[test]
    fn lookup_prefers_the_most_specific_row() {
        let t = table(
            "(3,0,1|3,0)\t1-2,1-3,1-4\t=5\tNotLimitForThisM\ttrap\n\
             (3,0,1|3,0)\t1-2,1-3,1-4\t>=7\tLimit\tconstruction\n\
             (3,0,1|3,0)\t1-2,1-3,1-4\t*\tPotentiallyLimit\topen\n",
        );
        let at = |m| t.lookup("1-2,1-3,1-4", m).unwrap().status;
        assert_eq!(at(5), CuratedStatus::NotLimitForThisM);
        assert_eq!(at(6), CuratedStatus::PotentiallyLimit);
        assert_eq!(at(7), CuratedStatus::Limit);
        assert_eq!(at(9), CuratedStatus::Limit);
        assert_eq!(t.lookup("1-2", 5), None);
    }

    #[test]
    fn higher_at_least_threshold_wins() {
        let t = table(
            "(2|1,0)\t1-2\t>=4\tPotentiallyLimit\tweak\n\
             (2|1,0)\t1-2\t>=6\tLimit\tstrong\n",
        );
        assert_eq!(t.lookup("1-2", 5).unwrap().status, CuratedStatus::PotentiallyLimit);
        assert_eq!(t.lookup("1-2", 6).unwrap().status, CuratedStatus::Limit);
    }

    #[test]
    fn rejects_malformed_rows() {
        let err = |body: &str| match parse_curated(&format!("{TABLE_HEADER}\n{body}")) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("(2|1,0)\t1-2\t=3\tLimit").line, 2);
        let e = err("(2|1,0)\t1-2\t=3\tMaybe\tsrc");
        assert_eq!((e.line, e.column), (2, 16));
        let e = err("(2|1,0)\t1-2\tsometimes\tLimit\tsrc");
        assert_eq!((e.line, e.column), (2, 13));
        let e = err("(2|1,0)\t1-3,2\t=3\tLimit\tsrc");
        assert_eq!((e.line, e.column), (2, 9));
        // Certificate and symbol disagree.
        assert!(
            parse_curated(&format!("{TABLE_HEADER}\n(2|1,0)\t1-2,2-3\t=3\tLimit\tsrc\n")).is_err()
        );
        // Duplicate key.
        assert!(parse_curated(&format!(
            "{TABLE_HEADER}\n(2|1,0)\t1-2\t=3\tLimit\ta\n(2|1,0)\t1-2\t=3\tLimit\tb\n"
        ))
        .is_err());
    }

    #[test]
    fn builtin_table_is_canonical() {
        let t = CuratedTable::builtin();
        assert_eq!(serialize_curated(t), BUILTIN_TABLE);
    }
}
