//! Partition combinatorics: conjugation, hook condition, modified Frobenius
//! coordinates, highest-weight labels for the hook parametrization, the
//! rectangle atypicality statistic, and the hook-length dimension formula.

use num::{BigInt, BigUint, One};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
pub enum PartitionError {
    NotWeaklyDecreasing(String),
    NonHook {
        lambda: Partition,
        m: usize,
        n: usize,
    },
    Parse(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotWeaklyDecreasing(s) => {
                write!(f, "parts are not weakly decreasing: {s}")
            }
            PartitionError::NonHook { lambda, m, n } => {
                write!(f, "{lambda} is not an ({m}|{n})-hook partition")
            }
            PartitionError::Parse(s) => write!(f, "cannot parse partition: {s}"),
        }
    }
}

impl std::error::Error for PartitionError {}

/// Dimensions `(m|n)` against which hook conditions and weight labels are
/// taken: `m` delta indices and `n` epsilon indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookContext {
    pub m: usize,
    pub n: usize,
}

impl HookContext {
    pub fn new(m: usize, n: usize) -> HookContext {
        HookContext { m, n }
    }
}

/// Weakly decreasing sequence of nonnegative integers; trailing zeros are
/// dropped so equality is structural. Indexing past the length reads 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Partition, PartitionError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(PartitionError::NotWeaklyDecreasing(format!("{parts:?}")));
            }
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition { parts: v })
    }

    /// Panicking constructor for literal shapes.
    pub fn of(parts: &[u32]) -> Partition {
        Partition::new(parts).expect("invalid partition literal")
    }

    pub fn empty() -> Partition {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `lambda_i` with 1-based `i`; 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Rows `m+1, m+2, ...` (the part below the first `m` rows).
    pub fn tail(&self, m: usize) -> Partition {
        if m >= self.parts.len() {
            Partition::empty()
        } else {
            Partition {
                parts: self.parts[m..].to_vec(),
            }
        }
    }

    /// All partitions of `d`.
    pub fn all_of_size(d: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let top = max.min(remaining);
            for p in (1..=top).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(d, d.max(1), &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `d` (including the empty one).
    pub fn all_up_to_size(d: u32) -> Vec<Partition> {
        (0..=d).flat_map(Partition::all_of_size).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated decreasing integers, e.g. `7,5,4,3,1`. The empty
    /// string and `0` both denote the empty partition.
    fn from_str(s: &str) -> Result<Partition, PartitionError> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = t.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) => Partition::new(&v),
            Err(e) => Err(PartitionError::Parse(format!("{s}: {e}"))),
        }
    }
}

/// Modified Frobenius coordinates `(p | q)`: `p_i = max(lambda_i - i + 1, 0)`,
/// `q_i = max(lambda'_i - i, 0)`, kept only while `p_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoordinates {
    pub p: Vec<u32>,
    pub q: Vec<u32>,
}

pub fn conjugate(lambda: &Partition) -> Partition {
    if lambda.is_empty() {
        return Partition::empty();
    }
    let cols = lambda.part(1) as usize;
    let parts: Vec<u32> = (1..=cols)
        .map(|j| lambda.parts().iter().filter(|&&p| p as usize >= j).count() as u32)
        .collect();
    Partition { parts }
}

/// `lambda_{m+1} <= n`.
pub fn is_hook(lambda: &Partition, ctx: HookContext) -> bool {
    lambda.part(ctx.m + 1) as usize <= ctx.n
}

pub fn modified_frobenius(lambda: &Partition) -> FrobeniusCoordinates {
    let conj = conjugate(lambda);
    let mut p = Vec::new();
    let mut q = Vec::new();
    let mut i = 1usize;
    loop {
        let pi = lambda.part(i) as i64 - i as i64 + 1;
        if pi <= 0 {
            break;
        }
        p.push(pi as u32);
        q.push((conj.part(i) as i64 - i as i64).max(0) as u32);
        i += 1;
    }
    FrobeniusCoordinates { p, q }
}

/// Rebuild the partition from modified Frobenius coordinates.
pub fn from_frobenius(fc: &FrobeniusCoordinates) -> Partition {
    let r = fc.p.len();
    let mut rows: Vec<u32> = (0..r).map(|i| fc.p[i] + i as u32).collect();
    // Rows below the diagonal come from the column data.
    let max_col = fc.q.iter().zip(1..).map(|(&q, j)| q + j).max().unwrap_or(0);
    for i in (r as u32 + 1)..=max_col {
        let row =
            fc.q.iter()
                .zip(1u32..)
                .filter(|&(&qj, j)| qj + j >= i)
                .count() as u32;
        if row == 0 {
            break;
        }
        rows.push(row);
    }
    Partition::new(&rows).expect("frobenius reconstruction produced a partition")
}

/// Minimal `i` in `0..=min(m,n)` such that the rectangle with `m - i` rows of
/// length `n - i` fits inside `lambda`; 0 means typical.
pub fn rectangle_atypicality(
    lambda: &Partition,
    ctx: HookContext,
) -> Result<usize, PartitionError> {
    if !is_hook(lambda, ctx) {
        return Err(PartitionError::NonHook {
            lambda: lambda.clone(),
            m: ctx.m,
            n: ctx.n,
        });
    }
    let (m, n) = (ctx.m, ctx.n);
    for i in 0..=m.min(n) {
        let rows = m - i;
        let cols = (n - i) as u32;
        if rows == 0 || cols == 0 || lambda.part(rows) >= cols {
            return Ok(i);
        }
    }
    unreachable!("i = min(m, n) always yields an empty rectangle")
}

/// Coefficient lists of a hook-partition weight label: `m` delta coefficients
/// followed by `n` epsilon coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookWeight {
    pub delta: Vec<i64>,
    pub epsilon: Vec<i64>,
}

impl fmt::Display for HookWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.delta.iter().enumerate() {
            if c != 0 {
                terms.push(format!("{}*d{}", c, i + 1));
            }
        }
        for (j, &c) in self.epsilon.iter().enumerate() {
            if c != 0 {
                terms.push(format!("{}*e{}", c, j + 1));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `(mu^natural, mu^natural_minus)`: first `m` rows on the delta side, the
/// conjugated remainder on the epsilon side; the minus variant flips the sign
/// of the last epsilon coefficient.
pub fn osp_labels(
    mu: &Partition,
    ctx: HookContext,
) -> Result<(HookWeight, HookWeight), PartitionError> {
    if !is_hook(mu, ctx) {
        return Err(PartitionError::NonHook {
            lambda: mu.clone(),
            m: ctx.m,
            n: ctx.n,
        });
    }
    let delta: Vec<i64> = (1..=ctx.m).map(|i| mu.part(i) as i64).collect();
    let nu = conjugate(&mu.tail(ctx.m));
    debug_assert!(nu.len() <= ctx.n);
    let epsilon: Vec<i64> = (1..=ctx.n).map(|j| nu.part(j) as i64).collect();
    let natural = HookWeight {
        delta: delta.clone(),
        epsilon: epsilon.clone(),
    };
    let mut eps_minus = epsilon;
    if ctx.n > 0 {
        eps_minus[ctx.n - 1] = -eps_minus[ctx.n - 1];
    }
    let natural_minus = HookWeight {
        delta,
        epsilon: eps_minus,
    };
    Ok((natural, natural_minus))
}

/// Dimension of the irreducible symmetric-group module labeled by `lambda`,
/// by the hook-length formula.
pub fn specht_dimension(lambda: &Partition) -> BigUint {
    if lambda.is_empty() {
        return BigUint::one();
    }
    let conj = conjugate(lambda);
    let mut numerator = BigUint::one();
    for k in 1..=lambda.size() {
        numerator *= BigUint::from(k);
    }
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 1..=row as usize {
            let arm = row as u64 - j as u64;
            let leg = conj.part(j) as u64 - (i as u64 + 1);
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    let (d, r) = num::Integer::div_rem(&numerator, &hooks);
    debug_assert!(num::Zero::is_zero(&r));
    d
}

pub fn specht_dimension_u64(lambda: &Partition) -> u64 {
    use num::ToPrimitive;
    specht_dimension(lambda)
        .to_u64()
        .expect("dimension fits u64")
}

/// Factorial as `BigInt`, for dimension identities.
pub fn factorial(d: u64) -> BigInt {
    let mut f = BigInt::one();
    for k in 1..=d {
        f *= BigInt::from(k);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Column-count oracle over the Young diagram.
    fn conjugate_oracle(lambda: &Partition) -> Partition {
        let mut cols: Vec<u32> = Vec::new();
        for &row in lambda.parts() {
            for j in 0..row as usize {
                if cols.len() <= j {
                    cols.push(0);
                }
                cols[j] += 1;
            }
        }
        Partition::new(&cols).unwrap()
    }

    #[test]
    fn conjugate_golden() {
        let lam = Partition::of(&[7, 5, 4, 3, 1]);
        assert_eq!(conjugate(&lam), conjugate_oracle(&lam));
        assert_eq!(conjugate(&lam), Partition::of(&[5, 4, 4, 3, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&Partition::of(&[1, 1, 1])), Partition::of(&[3]));
    }

    #[test]
    fn conjugate_involutive() {
        for d in 0..=12 {
            for lam in Partition::all_of_size(d) {
                assert_eq!(conjugate(&conjugate(&lam)), lam);
                assert_eq!(conjugate(&lam), conjugate_oracle(&lam));
            }
        }
    }

    #[test]
    fn hook_condition() {
        let lam = Partition::of(&[7, 2, 2, 1, 1]);
        assert!(is_hook(&lam, HookContext::new(1, 2)));
        assert!(is_hook(&Partition::empty(), HookContext::new(0, 0)));
        assert!(is_hook(&Partition::empty(), HookContext::new(2, 1)));
        assert!(!is_hook(&Partition::of(&[3, 3]), HookContext::new(1, 2)));
    }

    #[test]
    fn frobenius_golden() {
        let fc = modified_frobenius(&Partition::of(&[7, 5, 4, 3, 1]));
        assert_eq!(fc.p, vec![7, 4, 2]);
        assert_eq!(fc.q, vec![4, 2, 1]);
        let fc = modified_frobenius(&Partition::empty());
        assert!(fc.p.is_empty() && fc.q.is_empty());
        let fc = modified_frobenius(&Partition::of(&[1]));
        assert_eq!(
            (fc.p.as_slice(), fc.q.as_slice()),
            (&[1u32][..], &[0u32][..])
        );
    }

    #[test]
    fn frobenius_round_trip_and_size() {
        for d in 0..=10 {
            for lam in Partition::all_of_size(d) {
                let fc = modified_frobenius(&lam);
                let total: u64 = fc.p.iter().chain(fc.q.iter()).map(|&v| v as u64).sum();
                assert_eq!(total, lam.size());
                assert_eq!(from_frobenius(&fc), lam);
                // p strictly decreasing, q strictly decreasing among positives
                for w in fc.p.windows(2) {
                    assert!(w[0] > w[1]);
                }
                for w in fc.q.windows(2) {
                    if w[1] > 0 {
                        assert!(w[0] > w[1]);
                    }
                }
            }
        }
    }

    #[test]
    fn atypicality_examples() {
        let ctx = HookContext::new(1, 1);
        assert_eq!(rectangle_atypicality(&Partition::of(&[1]), ctx).unwrap(), 0);
        assert_eq!(rectangle_atypicality(&Partition::empty(), ctx).unwrap(), 1);
        // lambda_m >= n iff degree 0
        let ctx = HookContext::new(2, 3);
        assert_eq!(
            rectangle_atypicality(&Partition::of(&[3, 3]), ctx).unwrap(),
            0
        );
        assert!(rectangle_atypicality(&Partition::of(&[3, 3]), HookContext::new(1, 2)).is_err());
    }

    #[test]
    fn atypicality_zero_iff_lambda_m_ge_n() {
        // m = 0 has no odd roots at all, so the degree is always 0 there
        for m in 0..=3usize {
            for n in 0..=3usize {
                let ctx = HookContext::new(m, n);
                for d in 0..=8 {
                    for lam in Partition::all_of_size(d) {
                        if !is_hook(&lam, ctx) {
                            continue;
                        }
                        let deg = rectangle_atypicality(&lam, ctx).unwrap();
                        let typical = m == 0 || lam.part(m) as usize >= n;
                        assert_eq!(deg == 0, typical, "lam={lam} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn osp_label_examples() {
        let ctx = HookContext::new(1, 2);
        let (nat, natm) = osp_labels(&Partition::of(&[3, 2, 1]), ctx).unwrap();
        assert_eq!(nat.delta, vec![3]);
        assert_eq!(nat.epsilon, vec![2, 1]);
        assert_eq!(natm.delta, vec![3]);
        assert_eq!(natm.epsilon, vec![2, -1]);
        let (nat, natm) = osp_labels(&Partition::empty(), ctx).unwrap();
        assert_eq!(nat.delta, vec![0]);
        assert_eq!(nat.epsilon, vec![0, 0]);
        assert_eq!(nat, natm); // degenerate coincidence when nu_n = 0
    }

    /// Brute-force count of standard tableaux by filling 1..=d.
    fn standard_tableaux_count(lambda: &Partition) -> u64 {
        fn rec(shape: &[u32], filled: &mut Vec<u32>) -> u64 {
            if filled.iter().map(|&v| v as u64).sum::<u64>()
                == shape.iter().map(|&v| v as u64).sum::<u64>()
            {
                return 1;
            }
            let mut total = 0;
            for r in 0..shape.len() {
                let can = filled[r] < shape[r] && (r == 0 || filled[r] < filled[r - 1]);
                if can {
                    filled[r] += 1;
                    total += rec(shape, filled);
                    filled[r] -= 1;
                }
            }
            total
        }
        if lambda.is_empty() {
            return 1;
        }
        rec(lambda.parts(), &mut vec![0; lambda.len()])
    }

    #[test]
    fn specht_dimensions() {
        assert_eq!(specht_dimension_u64(&Partition::of(&[5])), 1);
        assert_eq!(specht_dimension_u64(&Partition::of(&[1, 1, 1, 1])), 1);
        assert_eq!(specht_dimension_u64(&Partition::of(&[2, 1])), 2);
        for d in 0..=6 {
            for lam in Partition::all_of_size(d) {
                assert_eq!(specht_dimension_u64(&lam), standard_tableaux_count(&lam));
            }
        }
    }

    #[test]
    fn specht_squares_sum_to_factorial() {
        for d in 1..=7u64 {
            let total: BigInt = Partition::all_of_size(d as u32)
                .iter()
                .map(|lam| {
                    let f = BigInt::from(specht_dimension(lam));
                    &f * &f
                })
                .sum();
            assert_eq!(total, factorial(d));
        }
    }

    #[test]
    fn text_syntax() {
        let lam: Partition = "7,5,4,3,1".parse().unwrap();
        assert_eq!(lam, Partition::of(&[7, 5, 4, 3, 1]));
        assert_eq!(lam.to_string(), "7,5,4,3,1");
        let empty: Partition = "".parse().unwrap();
        assert!(empty.is_empty());
        let zero: Partition = "0".parse().unwrap();
        assert!(zero.is_empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }
}
