//! Character degree multisets: generated families, direct products and the
//! JSON-lines corpus format.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("degree multiset is empty")]
    Empty,
    #[error("degree 0 is not a character degree")]
    ZeroDegree,
    #[error("degree {0} has multiplicity 0")]
    ZeroMultiplicity(u64),
    #[error("degree 1 is missing (the trivial character always exists)")]
    MissingTrivial,
    #[error("sum-of-squares mismatch: sum of d^2*m is {sum}, group order is {order}")]
    SumOfSquares { sum: u128, order: u64 },
    #[error("degree {degree} does not divide group order {order}")]
    NonDivisor { degree: u64, order: u64 },
    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("q = {q} is not valid for {family}: {reason}")]
    BadParameter {
        family: Family,
        q: u64,
        reason: &'static str,
    },
}

/// Generated group families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Psl2,
    Pgl2,
    Sl2,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Psl2, Family::Pgl2, Family::Sl2];

    /// Smallest admissible field size.
    pub fn min_q(self) -> u64 {
        match self {
            Family::Psl2 => 4,
            Family::Pgl2 | Family::Sl2 => 5,
        }
    }

    pub fn accepts(self, q: u64) -> bool {
        self.check(q).is_ok()
    }

    fn check(self, q: u64) -> Result<(), DegreeError> {
        let bad = |reason| DegreeError::BadParameter {
            family: self,
            q,
            reason,
        };
        if q < 2 || arith::as_prime_power(q).ok().flatten().is_none() {
            return Err(DegreeError::NotPrimePower(q));
        }
        if q < self.min_q() {
            return Err(bad("field too small"));
        }
        if self != Family::Psl2 && q.is_multiple_of(2) {
            return Err(bad("q must be odd"));
        }
        // keeps q(q^2-1) inside u64
        if q > 2_000_000 {
            return Err(bad("q too large"));
        }
        Ok(())
    }

    pub fn generate(self, q: u64) -> Result<DegreeMultiset, DegreeError> {
        match self {
            Family::Psl2 => gen_psl2(q),
            Family::Pgl2 => gen_pgl2(q),
            Family::Sl2 => gen_sl2(q),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Psl2 => "PSL2",
            Family::Pgl2 => "PGL2",
            Family::Sl2 => "SL2",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "psl2" => Ok(Family::Psl2),
            "pgl2" => Ok(Family::Pgl2),
            "sl2" => Ok(Family::Sl2),
            other => Err(format!("unknown family '{other}' (expected psl2, pgl2 or sl2)")),
        }
    }
}

/// Where a multiset came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    GeneratedFamily,
    File,
    Product,
}

/// A named multiset of character degrees, `cd(G)` with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMultiset {
    name: String,
    entries: Vec<(u64, u64)>,
    group_order: Option<u64>,
    provenance: Provenance,
    tags: Vec<String>,
}

impl DegreeMultiset {
    /// Normalizes `entries` (sums duplicate degrees, sorts ascending) and
    /// validates every invariant.
    pub fn new(
        name: impl Into<String>,
        entries: impl IntoIterator<Item = (u64, u64)>,
        group_order: Option<u64>,
        provenance: Provenance,
    ) -> Result<Self, DegreeError> {
        let mut merged: BTreeMap<u64, u64> = BTreeMap::new();
        for (d, m) in entries {
            if d == 0 {
                return Err(DegreeError::ZeroDegree);
            }
            if m == 0 {
                return Err(DegreeError::ZeroMultiplicity(d));
            }
            let slot = merged.entry(d).or_insert(0);
            *slot = slot
                .checked_add(m)
                .ok_or(DegreeError::Overflow("summing multiplicities"))?;
        }
        let ms = DegreeMultiset {
            name: name.into(),
            entries: merged.into_iter().collect(),
            group_order,
            provenance,
            tags: Vec::new(),
        };
        ms.validate()?;
        Ok(ms)
    }

    pub fn with_tags(mut self, tags: impl IntoIterator<Item = String>) -> Self {
        self.tags = tags.into_iter().collect();
        self.tags.sort();
        self.tags.dedup();
        self
    }

    fn validate(&self) -> Result<(), DegreeError> {
        if self.entries.is_empty() {
            return Err(DegreeError::Empty);
        }
        if self.entries[0].0 != 1 {
            return Err(DegreeError::MissingTrivial);
        }
        if let Some(order) = self.group_order {
            let sum = self.sum_of_squares()?;
            if sum != order as u128 {
                return Err(DegreeError::SumOfSquares { sum, order });
            }
            if let Some(&(degree, _)) = self.entries.iter().find(|(d, _)| order % d != 0) {
                return Err(DegreeError::NonDivisor { degree, order });
            }
        }
        Ok(())
    }

    /// Sum of `degree^2 * multiplicity`.
    pub fn sum_of_squares(&self) -> Result<u128, DegreeError> {
        self.entries.iter().try_fold(0u128, |acc, &(d, m)| {
            (d as u128)
                .checked_mul(d as u128)
                .and_then(|sq| sq.checked_mul(m as u128))
                .and_then(|t| acc.checked_add(t))
                .ok_or(DegreeError::Overflow("summing squared degrees"))
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `(degree, multiplicity)`, distinct degrees ascending.
    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn group_order(&self) -> Option<u64> {
        self.group_order
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn tags(&self) -> &[String] {
        &self.tags
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    /// The distinct degrees, i.e. `cd(G)`.
    pub fn support(&self) -> Vec<u64> {
        self.entries.iter().map(|&(d, _)| d).collect()
    }

    /// Number of irreducible characters.
    pub fn character_count(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Every degree repeated by its multiplicity, ascending.
    pub fn expanded(&self) -> Vec<u64> {
        self.entries
            .iter()
            .flat_map(|&(d, m)| std::iter::repeat_n(d, m as usize))
            .collect()
    }
}

fn family_multiset(
    family: Family,
    q: u64,
    order: u64,
    entries: Vec<(u64, u64)>,
) -> Result<DegreeMultiset, DegreeError> {
    DegreeMultiset::new(
        format!("{family}({q})"),
        entries.into_iter().filter(|&(_, m)| m > 0),
        Some(order),
        Provenance::GeneratedFamily,
    )
}

/// Character degrees of `PSL2(q)`, `q >= 4`.
pub fn gen_psl2(q: u64) -> Result<DegreeMultiset, DegreeError> {
    Family::Psl2.check(q)?;
    let order = q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 };
    let entries = if q.is_multiple_of(2) {
        vec![(1, 1), (q, 1), (q - 1, q / 2), (q + 1, q / 2 - 1)]
    } else if q % 4 == 1 {
        vec![
            (1, 1),
            (q, 1),
            (q.div_ceil(2), 2),
            (q + 1, (q - 5) / 4),
            (q - 1, (q - 1) / 4),
        ]
    } else {
        vec![
            (1, 1),
            (q, 1),
            ((q - 1) / 2, 2),
            (q + 1, (q - 3) / 4),
            (q - 1, (q - 3) / 4),
        ]
    };
    family_multiset(Family::Psl2, q, order, entries)
}

/// Character degrees of `PGL2(q)`, `q >= 5` odd.
pub fn gen_pgl2(q: u64) -> Result<DegreeMultiset, DegreeError> {
    Family::Pgl2.check(q)?;
    let entries = vec![(1, 2), (q, 2), (q + 1, (q - 3) / 2), (q - 1, (q - 1) / 2)];
    family_multiset(Family::Pgl2, q, q * (q * q - 1), entries)
}

/// Character degrees of `SL2(q)`, `q >= 5` odd.
pub fn gen_sl2(q: u64) -> Result<DegreeMultiset, DegreeError> {
    Family::Sl2.check(q)?;
    let entries = vec![
        (1, 1),
        (q, 1),
        (q + 1, (q - 3) / 2),
        (q - 1, (q - 1) / 2),
        (q.div_ceil(2), 2),
        ((q - 1) / 2, 2),
    ];
    family_multiset(Family::Sl2, q, q * (q * q - 1), entries)
}

/// Degrees of an abelian group of order `k`: `k` linear characters.
pub fn abelian(k: u64) -> Result<DegreeMultiset, DegreeError> {
    DegreeMultiset::new(format!("C{k}"), [(1, k)], Some(k), Provenance::GeneratedFamily)
}

/// Degrees of `A x B`: every product `d_a * d_b`, multiplicities convolved.
/// Tags survive only when both factors carry them.
pub fn direct_product(a: &DegreeMultiset, b: &DegreeMultiset) -> Result<DegreeMultiset, DegreeError> {
    let mut pairs = Vec::with_capacity(a.entries.len() * b.entries.len());
    for &(da, ma) in &a.entries {
        for &(db, mb) in &b.entries {
            let d = da.checked_mul(db).ok_or(DegreeError::Overflow("multiplying degrees"))?;
            let m = ma
                .checked_mul(mb)
                .ok_or(DegreeError::Overflow("multiplying multiplicities"))?;
            pairs.push((d, m));
        }
    }
    let order = match (a.group_order, b.group_order) {
        (Some(x), Some(y)) => Some(
            x.checked_mul(y)
                .ok_or(DegreeError::Overflow("multiplying group orders"))?,
        ),
        _ => None,
    };
    let tags = a.tags.iter().filter(|t| b.has_tag(t)).cloned();
    Ok(DegreeMultiset::new(format!("{} x {}", a.name, b.name), pairs, order, Provenance::Product)?.with_tags(tags))
}

/// One line of the corpus file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusRecord {
    pub name: String,
    pub degrees: Vec<(u64, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
}

impl From<&DegreeMultiset> for CorpusRecord {
    fn from(d: &DegreeMultiset) -> Self {
        CorpusRecord {
            name: d.name.clone(),
            degrees: d.entries.clone(),
            order: d.group_order,
            tags: d.tags.clone(),
        }
    }
}

impl CorpusRecord {
    pub fn into_multiset(self) -> Result<DegreeMultiset, DegreeError> {
        Ok(DegreeMultiset::new(self.name, self.degrees, self.order, Provenance::File)?.with_tags(self.tags))
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("corpus records always serialize")
    }
}

/// A record that failed to parse or validate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct RecordError {
    pub line: usize,
    pub message: String,
}

/// Result of reading a corpus: valid records with their 1-based line numbers,
/// plus per-record errors.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub records: Vec<(usize, DegreeMultiset)>,
    pub errors: Vec<RecordError>,
}

impl Corpus {
    pub fn multisets(&self) -> impl Iterator<Item = &DegreeMultiset> {
        self.records.iter().map(|(_, d)| d)
    }
}

/// Parses one corpus line.
pub fn parse_record(line: &str) -> Result<DegreeMultiset, String> {
    let rec: CorpusRecord = serde_json::from_str(line).map_err(|e| e.to_string())?;
    rec.into_multiset().map_err(|e| e.to_string())
}

/// Reads a corpus; blank lines are skipped.
pub fn read_corpus<R: BufRead>(reader: R) -> io::Result<Corpus> {
    let mut corpus = Corpus::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        match parse_record(text) {
            Ok(d) => corpus.records.push((i + 1, d)),
            Err(message) => corpus.errors.push(RecordError { line: i + 1, message }),
        }
    }
    Ok(corpus)
}

pub fn load_corpus(path: impl AsRef<Path>) -> io::Result<Corpus> {
    read_corpus(BufReader::new(fs::File::open(path)?))
}

pub fn write_corpus<'a, W: Write>(mut out: W, records: impl IntoIterator<Item = &'a DegreeMultiset>) -> io::Result<()> {
    for d in records {
        writeln!(out, "{}", CorpusRecord::from(d).to_json_line())?;
    }
    Ok(())
}

pub fn save_corpus<'a>(
    path: impl AsRef<Path>,
    records: impl IntoIterator<Item = &'a DegreeMultiset>,
) -> io::Result<()> {
    let mut out = io::BufWriter::new(fs::File::create(path)?);
    write_corpus(&mut out, records)?;
    out.flush()
}

const BUNDLED: &str = include_str!("../data/corpus.jsonl");

/// Known groups shipped with the crate (small solvable groups, sporadic and
/// alternating examples).
pub fn bundled_corpus() -> Corpus {
    read_corpus(BUNDLED.as_bytes()).expect("reading from memory cannot fail")
}
