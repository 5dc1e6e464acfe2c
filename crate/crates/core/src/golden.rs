//! Reference p-vectors and exceptional descent-class lists shipped with the
//! crate.
//!
//! Vectors are authored in the compact notation `2^k(a, b, ...)` under
//! `data/shorthand/` and expanded to exact integers in `data/*.csv` by the
//! `expand-golden` binary. Both forms are embedded; a unit test keeps them
//! in sync.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::coxeter::parse_multiset;
use crate::{Error, Result};

/// One expanded vector: `counts[i]` classes with size `≡ i (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRecord {
    /// Family letter (`A`, `B`, `D`) or exceptional group label (`E6`, `I2:5`).
    pub group: String,
    pub p: u64,
    /// Rank parameter for the families; absent for exceptional groups.
    pub n: Option<u64>,
    pub counts: Vec<BigUint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GoldenTable {
    TypeA,
    TypeB,
    TypeD,
    Exceptional,
}

impl GoldenTable {
    pub const ALL: [GoldenTable; 4] = [
        GoldenTable::TypeA,
        GoldenTable::TypeB,
        GoldenTable::TypeD,
        GoldenTable::Exceptional,
    ];

    /// File stem shared by the shorthand and CSV forms.
    pub fn stem(self) -> &'static str {
        match self {
            GoldenTable::TypeA => "type_a",
            GoldenTable::TypeB => "type_b",
            GoldenTable::TypeD => "type_d",
            GoldenTable::Exceptional => "exceptional",
        }
    }

    pub fn shorthand(self) -> &'static str {
        match self {
            GoldenTable::TypeA => include_str!("../data/shorthand/type_a.txt"),
            GoldenTable::TypeB => include_str!("../data/shorthand/type_b.txt"),
            GoldenTable::TypeD => include_str!("../data/shorthand/type_d.txt"),
            GoldenTable::Exceptional => include_str!("../data/shorthand/exceptional.txt"),
        }
    }

    pub fn csv(self) -> &'static str {
        match self {
            GoldenTable::TypeA => include_str!("../data/type_a.csv"),
            GoldenTable::TypeB => include_str!("../data/type_b.csv"),
            GoldenTable::TypeD => include_str!("../data/type_d.csv"),
            GoldenTable::Exceptional => include_str!("../data/exceptional.csv"),
        }
    }

    /// Records parsed from the embedded CSV.
    pub fn records(self) -> Result<Vec<GoldenRecord>> {
        read_csv(self.csv().as_bytes())
    }
}

/// Exceptional descent-class multisets, one `GROUP: size^mult, ...` per line.
pub const DESCENT_CLASSES: &str = include_str!("../data/descent_classes.txt");

/// `(group, multiset)` pairs from [`DESCENT_CLASSES`].
pub fn descent_class_lists() -> Result<Vec<(String, BTreeMap<BigUint, u64>)>> {
    DESCENT_CLASSES
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let (group, list) = line
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("malformed line {line:?}")))?;
            Ok((group.trim().to_string(), parse_multiset(list)?))
        })
        .collect()
}

/// Expands `b^e(a_0, a_1, ...)`, `m(a_0, ...)` or `(a_0, ...)`.
pub fn expand_shorthand(s: &str) -> Result<Vec<BigUint>> {
    let bad = || Error::InvalidInput(format!("malformed vector {s:?}"));
    let s = s.trim();
    let open = s.find('(').ok_or_else(bad)?;
    let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let prefix = s[..open].trim().trim_end_matches(['*', '·']);
    let scale: BigUint = match prefix.split_once('^') {
        _ if prefix.is_empty() => BigUint::one(),
        Some((b, e)) => {
            let b: BigUint = b.trim().parse().map_err(|_| bad())?;
            let e: u32 = e.trim().parse().map_err(|_| bad())?;
            b.pow(e)
        }
        None => prefix.parse().map_err(|_| bad())?,
    };
    inner
        .split(',')
        .map(|a| a.trim().parse::<BigUint>().map(|a| a * &scale).map_err(|_| bad()))
        .collect()
}

/// Parses `GROUP p n shorthand` lines, `n` being `-` for exceptional groups.
pub fn parse_shorthand_file(text: &str) -> Result<Vec<GoldenRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let bad = || Error::InvalidInput(format!("malformed line {line:?}"));
            let mut fields = line.splitn(4, char::is_whitespace);
            let group = fields.next().ok_or_else(bad)?.to_string();
            let p: u64 = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let n = match fields.next().ok_or_else(bad)? {
                "-" => None,
                v => Some(v.parse().map_err(|_| bad())?),
            };
            let counts = expand_shorthand(fields.next().ok_or_else(bad)?)?;
            if counts.len() as u64 != p {
                return Err(Error::InvalidInput(format!(
                    "{line:?}: {} entries for p = {p}",
                    counts.len()
                )));
            }
            Ok(GoldenRecord { group, p, n, counts })
        })
        .collect()
}

/// Writes `family,p,n,residue,count` rows, one per residue.
pub fn write_csv<W: Write>(records: &[GoldenRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::InvalidInput(format!("csv output failed: {e}"));
    let exceptional = records.first().is_some_and(|r| r.n.is_none());
    let mut w = csv::Writer::from_writer(out);
    let first = if exceptional { "group" } else { "family" };
    w.write_record([first, "p", "n", "residue", "count"]).map_err(io)?;
    for r in records {
        let n = r.n.map_or_else(|| "-".to_string(), |n| n.to_string());
        for (i, c) in r.counts.iter().enumerate() {
            w.write_record([
                r.group.clone(),
                r.p.to_string(),
                n.clone(),
                i.to_string(),
                c.to_string(),
            ])
            .map_err(io)?;
        }
    }
    w.flush()
        .map_err(|e| Error::InvalidInput(format!("csv output failed: {e}")))
}

/// Reads rows written by [`write_csv`]. Each vector's residues must appear
/// in order `0..p`.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<GoldenRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    let mut out: Vec<GoldenRecord> = Vec::new();
    for (line, row) in rdr.records().enumerate() {
        let row = row.map_err(|e| Error::InvalidInput(format!("csv row {}: {e}", line + 2)))?;
        let bad = || Error::InvalidInput(format!("csv row {}: {row:?}", line + 2));
        if row.len() != 5 {
            return Err(bad());
        }
        let p: u64 = row[1].parse().map_err(|_| bad())?;
        let n = match &row[2] {
            "-" => None,
            v => Some(v.parse().map_err(|_| bad())?),
        };
        let residue: u64 = row[3].parse().map_err(|_| bad())?;
        let count: BigUint = row[4].parse().map_err(|_| bad())?;
        let continues = out.last().is_some_and(|r| {
            r.group == row[0] && r.p == p && r.n == n && (r.counts.len() as u64) < p
        });
        if residue == 0 && !continues {
            out.push(GoldenRecord {
                group: row[0].to_string(),
                p,
                n,
                counts: vec![count],
            });
        } else if continues && out.last().unwrap().counts.len() as u64 == residue {
            out.last_mut().unwrap().counts.push(count);
        } else {
            return Err(bad());
        }
    }
    if let Some(r) = out.iter().find(|r| r.counts.len() as u64 != r.p) {
        return Err(Error::InvalidInput(format!(
            "incomplete vector for {} p = {}",
            r.group, r.p
        )));
    }
    Ok(out)
}
