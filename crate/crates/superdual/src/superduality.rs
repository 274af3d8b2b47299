//! Weight-level super duality: eventually-constant weights over integer,
//! half-integer, and interleaved index sets, the conjugation and
//! Frobenius-coordinate bijections between them, and the truncation map to
//! finite rank.
//!
//! Half-integer indices are stored as doubled integers internally; rendering
//! uses `1/2, 3/2, ...`.

use crate::partitions::{
    conjugate, from_frobenius, modified_frobenius, FrobeniusCoordinates, Partition,
};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SdError {
    KindMismatch { expected: TailKind, got: TailKind },
    NotInThetaImage(String),
}

impl fmt::Display for SdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SdError::KindMismatch { expected, got } => {
                write!(f, "expected a {expected:?}-kind weight, got {got:?}")
            }
            SdError::NotInThetaImage(s) => write!(f, "not in the theta image: {s}"),
        }
    }
}

impl std::error::Error for SdError {}

/// Which index set the tail lives on: `Y` for integers with constant `d`,
/// `YBar` for half-integers with constant `-d`, `YTilde` for the interleaved
/// set with alternating constants `-d, d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailKind {
    Y,
    YBar,
    YTilde,
}

/// Weight with `m` integer head coefficients on the delta side, a level `d`,
/// and an eventually-constant tail. The tail is stored semantically: for
/// `Y`/`YBar` kinds by the partition `lambda^+` of deviations from the
/// constant, for `YTilde` by the interleaved pair lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailWeight {
    pub head: Vec<i64>,
    pub level: i64,
    pub kind: TailKind,
    tail: TailData,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TailData {
    /// `Y`: coefficient at integer index `k` is `plus_k + d`;
    /// `YBar`: coefficient at half-integer index `k - 1/2` is `plus_k - d`.
    Plus(Partition),
    /// `YTilde`: coefficient at `i - 1/2` is `pairs[i-1].0`, at `i` is
    /// `pairs[i-1].1`; beyond the list they are `-d` and `d`.
    Interleaved(Vec<(i64, i64)>),
}

impl TailWeight {
    /// Build a `Y`-kind weight from its head, level, and tail partition.
    pub fn new_y(head: Vec<i64>, level: i64, plus: Partition) -> TailWeight {
        TailWeight {
            head,
            level,
            kind: TailKind::Y,
            tail: TailData::Plus(plus),
        }
    }

    pub fn new_ybar(head: Vec<i64>, level: i64, plus: Partition) -> TailWeight {
        TailWeight {
            head,
            level,
            kind: TailKind::YBar,
            tail: TailData::Plus(plus),
        }
    }

    /// The deviation partition `lambda^+`.
    pub fn plus_partition(&self) -> Option<&Partition> {
        match &self.tail {
            TailData::Plus(p) => Some(p),
            TailData::Interleaved(_) => None,
        }
    }

    /// Frobenius pair data of a `YTilde` weight.
    pub fn interleaved(&self) -> Option<&[(i64, i64)]> {
        match &self.tail {
            TailData::Interleaved(v) => Some(v),
            TailData::Plus(_) => None,
        }
    }

    /// Tail coefficient at the index `2 * idx2 / 2` (index given doubled:
    /// `idx2 = 1` means `1/2`, `idx2 = 2` means `1`, ...).
    pub fn tail_coeff(&self, idx2: u32) -> i64 {
        match (&self.tail, self.kind) {
            (TailData::Plus(p), TailKind::Y) => {
                // integer indices only
                assert_eq!(idx2 % 2, 0, "Y-kind tails live on integer indices");
                p.part((idx2 / 2) as usize) as i64 + self.level
            }
            (TailData::Plus(p), TailKind::YBar) => {
                assert_eq!(idx2 % 2, 1, "YBar-kind tails live on half-integer indices");
                p.part(((idx2 + 1) / 2) as usize) as i64 - self.level
            }
            (TailData::Interleaved(pairs), TailKind::YTilde) => {
                let i = ((idx2 + 1) / 2) as usize; // block number
                if idx2 % 2 == 1 {
                    pairs.get(i - 1).map_or(-self.level, |p| p.0)
                } else {
                    pairs.get(i - 1).map_or(self.level, |p| p.1)
                }
            }
            _ => unreachable!("kind and tail storage always agree"),
        }
    }

    /// Explicit prefix of tail coefficients (first `len` indices of the
    /// kind's index set) plus the eventual constant(s), for rendering.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct TailJson {
            head: Vec<i64>,
            tail_prefix: Vec<i64>,
            tail_constant: i64,
            kind: String,
            index_base: String,
        }
        let (kind, base, step, start) = match self.kind {
            TailKind::Y => ("Y", "1", 2u32, 2u32),
            TailKind::YBar => ("YBar", "1/2", 2, 1),
            TailKind::YTilde => ("YTilde", "1/2", 1, 1),
        };
        let len = match &self.tail {
            TailData::Plus(p) => p.len() as u32 + 1,
            TailData::Interleaved(v) => 2 * v.len() as u32 + 2,
        };
        let prefix: Vec<i64> = (0..len)
            .map(|k| self.tail_coeff(start + k * step))
            .collect();
        let constant = match self.kind {
            TailKind::Y => self.level,
            TailKind::YBar => -self.level,
            TailKind::YTilde => self.level, // alternates with -level
        };
        serde_json::to_value(TailJson {
            head: self.head.clone(),
            tail_prefix: prefix,
            tail_constant: constant,
            kind: kind.into(),
            index_base: base.into(),
        })
        .unwrap()
    }
}

/// The conjugation bijection: head and level fixed, tail partition
/// conjugated, landing on the half-integer index set.
pub fn natural_map(w: &TailWeight) -> Result<TailWeight, SdError> {
    if w.kind != TailKind::Y {
        return Err(SdError::KindMismatch {
            expected: TailKind::Y,
            got: w.kind,
        });
    }
    let plus = w.plus_partition().unwrap();
    Ok(TailWeight::new_ybar(
        w.head.clone(),
        w.level,
        conjugate(plus),
    ))
}

pub fn natural_map_inverse(w: &TailWeight) -> Result<TailWeight, SdError> {
    if w.kind != TailKind::YBar {
        return Err(SdError::KindMismatch {
            expected: TailKind::YBar,
            got: w.kind,
        });
    }
    let plus = w.plus_partition().unwrap();
    Ok(TailWeight::new_y(w.head.clone(), w.level, conjugate(plus)))
}

/// The interleaving injection: head and level fixed; with `(p | q)` the
/// modified Frobenius coordinates of the conjugated tail partition, the
/// coefficient at `i - 1/2` is `p_i - d` and at `i` is `q_i + d`.
pub fn theta_map(w: &TailWeight) -> Result<TailWeight, SdError> {
    if w.kind != TailKind::Y {
        return Err(SdError::KindMismatch {
            expected: TailKind::Y,
            got: w.kind,
        });
    }
    let plus = w.plus_partition().unwrap();
    let fc = modified_frobenius(&conjugate(plus));
    let pairs: Vec<(i64, i64)> =
        fc.p.iter()
            .zip(&fc.q)
            .map(|(&p, &q)| (p as i64 - w.level, q as i64 + w.level))
            .collect();
    Ok(TailWeight {
        head: w.head.clone(),
        level: w.level,
        kind: TailKind::YTilde,
        tail: TailData::Interleaved(pairs),
    })
}

/// Inverse of `theta_map` on its image: rebuild the partition from the
/// Frobenius data and conjugate back.
pub fn theta_map_inverse(w: &TailWeight) -> Result<TailWeight, SdError> {
    if w.kind != TailKind::YTilde {
        return Err(SdError::KindMismatch {
            expected: TailKind::YTilde,
            got: w.kind,
        });
    }
    let pairs = w.interleaved().unwrap();
    let p: Vec<u32> = pairs
        .iter()
        .map(|&(a, _)| {
            let v = a + w.level;
            if v <= 0 {
                return Err(SdError::NotInThetaImage(format!(
                    "p entry {v} not positive"
                )));
            }
            Ok(v as u32)
        })
        .collect::<Result<_, _>>()?;
    let q: Vec<u32> = pairs
        .iter()
        .map(|&(_, b)| {
            let v = b - w.level;
            if v < 0 {
                return Err(SdError::NotInThetaImage(format!("q entry {v} negative")));
            }
            Ok(v as u32)
        })
        .collect::<Result<_, _>>()?;
    let fc = FrobeniusCoordinates { p, q };
    let conj_plus = from_frobenius(&fc);
    Ok(TailWeight::new_y(
        w.head.clone(),
        w.level,
        conjugate(&conj_plus),
    ))
}

/// Result of truncating to rank `n`: either the finite-rank weight (head
/// plus the first `n` tail coefficients) or the designated zero marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Truncation {
    Module { head: Vec<i64>, tail: Vec<i64> },
    Zero,
}

/// Truncation of a half-integer-kind weight: keep the coefficients up to
/// index `n - 1/2` when the coefficient at `n + 1/2` has already reached the
/// constant `-d`, otherwise collapse to zero.
pub fn truncate_weight(w: &TailWeight, n: usize) -> Result<Truncation, SdError> {
    if w.kind != TailKind::YBar {
        return Err(SdError::KindMismatch {
            expected: TailKind::YBar,
            got: w.kind,
        });
    }
    assert!(n >= 1, "rank must be at least 1");
    let at = w.tail_coeff(2 * n as u32 + 1); // index n + 1/2
    if at != -w.level {
        return Ok(Truncation::Zero);
    }
    let tail: Vec<i64> = (1..=n).map(|k| w.tail_coeff(2 * k as u32 - 1)).collect();
    Ok(Truncation::Module {
        head: w.head.clone(),
        tail,
    })
}
