//! Closed-form cost comparison of bit-parallel multipliers and the field
//! survey over a range of extension degrees.
//!
//! The comparison rows evaluate published gate-count formulas from `(k, T,
//! C_N)` alone, without synthesizing anything; the survey classifies each
//! GF(2^k) by the smallest basis type that exists for it.

use std::fmt;

use crate::gnb::{self, build_params};
use crate::matrix::MultMatrix;

/// ⌈log2 n⌉ for n ≥ 1.
pub fn ceil_log2(n: u64) -> u32 {
    assert!(n >= 1);
    64 - (n - 1).leading_zeros()
}

/// One method's cost from the closed-form formulas: gate counts plus the
/// critical path as `(and_levels, xor_levels)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub method: &'static str,
    pub and_count: u64,
    pub xor_count: u64,
    pub and_levels: u32,
    pub xor_levels: u32,
}

impl ComparisonRow {
    /// Compact delay expression, e.g. `1A+5X`.
    pub fn delay(&self) -> String {
        format!("{}A+{}X", self.and_levels, self.xor_levels)
    }
}

/// Formula-based comparison rows for an odd-type basis: the naive multiplier,
/// the XEBP and AEBP digit-level designs, and the odd-type decomposition.
///
/// Requires odd T (the decomposition row is meaningless otherwise).
pub fn comparison_table(k: usize, t: usize, c_n: usize) -> Vec<ComparisonRow> {
    assert!(t % 2 == 1, "comparison table applies to odd-type bases");
    assert!(k.is_multiple_of(2), "odd-type bases require even k");
    let (k64, c64, t64) = (k as u64, c_n as u64, t as u64);
    let base_delay = ceil_log2(c64);
    vec![
        ComparisonRow {
            method: "naive",
            and_count: k64 * k64,
            xor_count: k64 * (c64 - 1),
            and_levels: 1,
            xor_levels: base_delay,
        },
        ComparisonRow {
            method: "xebp",
            and_count: k64 * k64,
            xor_count: (k64 / 2) * (c64 + k64 - 2),
            and_levels: 1,
            xor_levels: base_delay,
        },
        ComparisonRow {
            method: "aebp",
            and_count: (k64 / 2) * (k64 - 1),
            xor_count: (k64 / 2) * (c64 + 2 * k64 - 3),
            and_levels: 1,
            xor_levels: base_delay,
        },
        ComparisonRow {
            method: "ours",
            and_count: k64 * k64,
            xor_count: (k64 / 2) * (c64 + 2 * t64 - 1) - 1,
            and_levels: 1,
            xor_levels: 1 + ceil_log2(c64 - k64 + 2 * t64 - 1),
        },
    ]
}

/// Basis class of a field, judged by its smallest existing type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Smallest type is 1 (optimal normal basis, type 1).
    OnbType1,
    /// Smallest type is 2 (optimal normal basis, type 2).
    OnbType2,
    /// Smallest type is even and ≥ 4.
    EvenGnb,
    /// Smallest type is odd and ≥ 3.
    OddGnb,
    /// No type within the search bound.
    None,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::OnbType1 => "onb-type1",
            Classification::OnbType2 => "onb-type2",
            Classification::EvenGnb => "even-gnb",
            Classification::OddGnb => "odd-gnb",
            Classification::None => "none",
        }
    }

    pub fn from_smallest_type(t: Option<usize>) -> Classification {
        match t {
            Option::None => Classification::None,
            Some(1) => Classification::OnbType1,
            Some(2) => Classification::OnbType2,
            Some(t) if t % 2 == 0 => Classification::EvenGnb,
            Some(_) => Classification::OddGnb,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Survey entry for one extension degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub k: usize,
    pub smallest_type: Option<usize>,
    pub classification: Classification,
}

impl ScanRecord {
    /// CSV data row `k,smallest_type,classification`.
    pub fn csv(&self) -> String {
        let t = self
            .smallest_type
            .map(|t| t.to_string())
            .unwrap_or_default();
        format!("{},{},{}", self.k, t, self.classification)
    }

    /// `C_N` of the field's smallest-type basis, constructed on demand.
    /// Costly for large k, hence opt-in.
    pub fn count_ones(&self) -> Option<usize> {
        let t = self.smallest_type?;
        let params = build_params(self.k, t).ok()?;
        Some(MultMatrix::from_params(&params).count_ones())
    }
}

/// Per-class record counts for a finished scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ScanSummary {
    pub onb_type1: usize,
    pub onb_type2: usize,
    pub even_gnb: usize,
    pub odd_gnb: usize,
    pub none: usize,
}

impl ScanSummary {
    pub fn from_records(records: &[ScanRecord]) -> ScanSummary {
        let mut s = ScanSummary::default();
        for r in records {
            match r.classification {
                Classification::OnbType1 => s.onb_type1 += 1,
                Classification::OnbType2 => s.onb_type2 += 1,
                Classification::EvenGnb => s.even_gnb += 1,
                Classification::OddGnb => s.odd_gnb += 1,
                Classification::None => s.none += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.onb_type1 + self.onb_type2 + self.even_gnb + self.odd_gnb + self.none
    }
}

impl fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "onb-type1={} onb-type2={} even-gnb={} odd-gnb={} none={} total={}",
            self.onb_type1,
            self.onb_type2,
            self.even_gnb,
            self.odd_gnb,
            self.none,
            self.total()
        )
    }
}

/// Classifies every k in `[k_min, k_max]` by the smallest type within
/// `t_max`. Deterministic; records are ordered by k.
pub fn scan(k_min: usize, k_max: usize, t_max: usize) -> Vec<ScanRecord> {
    assert!(2 <= k_min && k_min <= k_max);
    (k_min..=k_max)
        .map(|k| {
            let smallest = gnb::smallest_type(k, t_max);
            ScanRecord {
                k,
                smallest_type: smallest,
                classification: Classification::from_smallest_type(smallest),
            }
        })
        .collect()
}
