//! Symmetric polynomials: monomial symmetric, Schur (tableau and bialternant
//! routes), skew Schur, hook Schur, and symplectic Weyl characters.
//!
//! All functions work inside a caller-supplied [`VarSet`] so that polynomials
//! in different families (`x`, `y`, `u`, `z`) can be multiplied together.

use crate::partitions::{conjugate, is_hook, HookContext, Partition};
use crate::polyring::{int, LaurentSeries, PolyError, Specialization, VarSet};
use num::{BigRational, One};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SymError {
    TooManyRows { rows: usize, vars: usize },
    NotContained { inner: Partition, outer: Partition },
    Poly(PolyError),
}

impl fmt::Display for SymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymError::TooManyRows { rows, vars } => {
                write!(
                    f,
                    "partition has {rows} rows but the family has {vars} variables"
                )
            }
            SymError::NotContained { inner, outer } => {
                write!(f, "{inner} is not contained in {outer}")
            }
            SymError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SymError {}

impl From<PolyError> for SymError {
    fn from(e: PolyError) -> Self {
        SymError::Poly(e)
    }
}

/// Sum of all distinct monomials with exponent multiset `nu`.
pub fn monomial_symmetric(
    nu: &Partition,
    vars: &VarSet,
    fam: usize,
) -> Result<LaurentSeries, SymError> {
    let m = vars.family_size(fam);
    if nu.len() > m {
        return Err(SymError::TooManyRows {
            rows: nu.len(),
            vars: m,
        });
    }
    let mut exps = vec![0u32; m];
    for (i, &p) in nu.parts().iter().enumerate() {
        exps[i] = p;
    }
    exps.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = LaurentSeries::zero(vars);
    // Enumerate distinct permutations of the exponent multiset.
    fn distinct_perms(exps: &[u32]) -> Vec<Vec<u32>> {
        let mut sorted = exps.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(exps.len());
        let mut used = vec![false; exps.len()];
        fn rec(sorted: &[u32], used: &mut Vec<bool>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == sorted.len() {
                out.push(cur.clone());
                return;
            }
            let mut last: Option<u32> = None;
            for i in 0..sorted.len() {
                if used[i] || last == Some(sorted[i]) {
                    continue;
                }
                last = Some(sorted[i]);
                used[i] = true;
                cur.push(sorted[i]);
                rec(sorted, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
        rec(&sorted, &mut used, &mut cur, &mut out);
        out
    }
    for perm in distinct_perms(&exps) {
        let mut mono = vec![0i32; vars.num_vars()];
        for (i, &e) in perm.iter().enumerate() {
            mono[vars.var(fam, i)] = e as i32;
        }
        out.add_term(&mono, BigRational::one());
    }
    Ok(out)
}

/// Shapes of a (possibly skew) diagram as row intervals `mu_i..lambda_i`.
fn skew_rows(lambda: &Partition, mu: &Partition) -> Vec<(usize, usize)> {
    (1..=lambda.len())
        .map(|i| (mu.part(i) as usize, lambda.part(i) as usize))
        .collect()
}

/// Semistandard fillings of `lambda/mu` with entries `1..=v`, accumulated as
/// monomials into `fam`. Rows weakly increase, columns strictly increase.
fn ssyt_polynomial(lambda: &Partition, mu: &Partition, vars: &VarSet, fam: usize) -> LaurentSeries {
    let v = vars.family_size(fam);
    let rows = skew_rows(lambda, mu);
    let mut out = LaurentSeries::zero(vars);
    if rows.is_empty() {
        return LaurentSeries::one(vars);
    }
    // entries[r][c] for c in mu_r..lambda_r
    let mut entries: Vec<Vec<u32>> = rows.iter().map(|&(a, b)| vec![0; b - a]).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &(a, b))| (a..b).map(move |c| (r, c)))
        .collect();
    fn entry_at(rows: &[(usize, usize)], entries: &[Vec<u32>], r: usize, c: usize) -> Option<u32> {
        let (a, b) = rows[r];
        if c >= a && c < b {
            Some(entries[r][c - a])
        } else {
            None
        }
    }
    struct Ctx<'a> {
        rows: &'a [(usize, usize)],
        cells: &'a [(usize, usize)],
        v: usize,
        vars: &'a VarSet,
        fam: usize,
    }
    fn rec(
        ctx: &Ctx,
        k: usize,
        entries: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        out: &mut LaurentSeries,
    ) {
        if k == ctx.cells.len() {
            let mut mono = vec![0i32; ctx.vars.num_vars()];
            for (i, &e) in content.iter().enumerate() {
                mono[ctx.vars.var(ctx.fam, i)] = e as i32;
            }
            out.add_term(&mono, BigRational::one());
            return;
        }
        let (r, c) = ctx.cells[k];
        let mut lo = 1u32;
        if c > 0 {
            if let Some(left) = entry_at(ctx.rows, entries, r, c - 1) {
                lo = lo.max(left);
            }
        }
        if r > 0 {
            if let Some(up) = entry_at(ctx.rows, entries, r - 1, c) {
                lo = lo.max(up + 1);
            }
        }
        for e in lo..=(ctx.v as u32) {
            let (a, _) = ctx.rows[r];
            entries[r][c - a] = e;
            content[(e - 1) as usize] += 1;
            rec(ctx, k + 1, entries, content, out);
            content[(e - 1) as usize] -= 1;
        }
    }
    let ctx = Ctx {
        rows: &rows,
        cells: &cells,
        v,
        vars,
        fam,
    };
    let mut content = vec![0u32; v];
    rec(&ctx, 0, &mut entries, &mut content, &mut out);
    out
}

/// Schur polynomial by semistandard-tableau enumeration; 0 when the shape
/// has more rows than the family has variables.
pub fn schur(lambda: &Partition, vars: &VarSet, fam: usize) -> LaurentSeries {
    if lambda.len() > vars.family_size(fam) {
        return LaurentSeries::zero(vars);
    }
    ssyt_polynomial(lambda, &Partition::empty(), vars, fam)
}

/// Skew Schur polynomial `s_{lambda/mu}`; equals `schur(lambda)` for `mu` empty.
pub fn skew_schur(
    lambda: &Partition,
    mu: &Partition,
    vars: &VarSet,
    fam: usize,
) -> Result<LaurentSeries, SymError> {
    if !lambda.contains(mu) {
        return Err(SymError::NotContained {
            inner: mu.clone(),
            outer: lambda.clone(),
        });
    }
    // A skew column longer than the variable count kills every filling.
    Ok(ssyt_polynomial(lambda, mu, vars, fam))
}

/// Hook Schur polynomial together with its vanishing status.
#[derive(Debug, Clone, PartialEq)]
pub struct HookSchur {
    pub poly: LaurentSeries,
    /// True when `lambda` violates the hook condition, so the polynomial is
    /// zero for structural reasons rather than by computation.
    pub structurally_zero: bool,
}

/// `hs_lambda(x, y) = sum over mu inside lambda of s_mu(x) s_{lambda'/mu'}(y)`.
/// Returns zero (flagged) when `lambda` is not a hook partition for the
/// family sizes `(|xfam| , |yfam|)`.
pub fn hook_schur(lambda: &Partition, vars: &VarSet, xfam: usize, yfam: usize) -> HookSchur {
    let ctx = HookContext::new(vars.family_size(xfam), vars.family_size(yfam));
    if !is_hook(lambda, ctx) {
        return HookSchur {
            poly: LaurentSeries::zero(vars),
            structurally_zero: true,
        };
    }
    let lam_c = conjugate(lambda);
    let mut out = LaurentSeries::zero(vars);
    // mu runs over partitions contained in lambda with at most m rows (other
    // mu contribute s_mu = 0) and lambda'/mu' fillable in n variables.
    let mut stack: Vec<Vec<u32>> = vec![vec![]];
    let m = ctx.m;
    while let Some(mu_parts) = stack.pop() {
        let row = mu_parts.len();
        if row < lambda.len() && row < m {
            let hi = if row == 0 {
                lambda.part(1)
            } else {
                mu_parts[row - 1].min(lambda.part(row + 1))
            };
            // Extending by 0 would duplicate the current canonical form.
            for next in 1..=hi {
                let mut ext = mu_parts.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
        let mu = Partition::new(&mu_parts).expect("generated in decreasing order");
        let smu = schur(&mu, vars, xfam);
        if smu.is_zero() {
            continue;
        }
        let skew =
            skew_schur(&lam_c, &conjugate(&mu), vars, yfam).expect("mu' is contained in lambda'");
        if skew.is_zero() {
            continue;
        }
        out = &out + &(&smu * &skew);
    }
    HookSchur {
        poly: out,
        structurally_zero: false,
    }
}

/// Signed permutations of rank `l` as (signs, permutation) pairs, with the
/// parity of the type-C Coxeter length.
fn hyperoctahedral(l: usize) -> Vec<(Vec<i64>, Vec<usize>, bool)> {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut idx: Vec<usize> = (0..l).collect();
    fn heap(k: usize, idx: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(idx.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, idx, out);
            if k % 2 == 0 {
                idx.swap(i, k - 1);
            } else {
                idx.swap(0, k - 1);
            }
        }
    }
    heap(l, &mut idx, &mut perms);
    let mut out = Vec::new();
    for p in perms {
        let mut inv = 0;
        for i in 0..l {
            for j in (i + 1)..l {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        for mask in 0..(1u32 << l) {
            let signs: Vec<i64> = (0..l)
                .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
                .collect();
            let negs: usize = (0..l).filter(|&i| signs[i] < 0).count();
            // Parity of the element in the sign character: (-1)^{inv + negs}
            // (each sign flip and each transposition is a reflection).
            let odd = (inv + negs) % 2 == 1;
            out.push((signs, p.clone(), odd));
        }
    }
    out
}

/// Weyl character of the rank-`l` symplectic algebra for the partition
/// `lambda`, as a Laurent polynomial in the `zfam` variables: the alternant
/// over the hyperoctahedral group divided exactly by the `lambda = 0` alternant.
pub fn symplectic_character(
    lambda: &Partition,
    vars: &VarSet,
    zfam: usize,
) -> Result<LaurentSeries, SymError> {
    let l = vars.family_size(zfam);
    if lambda.len() > l {
        return Err(SymError::TooManyRows {
            rows: lambda.len(),
            vars: l,
        });
    }
    let alternant = |coords: &[i64]| -> LaurentSeries {
        let mut out = LaurentSeries::zero(vars);
        for (signs, perm, odd) in hyperoctahedral(l) {
            let mut mono = vec![0i32; vars.num_vars()];
            // e^{w(coords)}: coordinate j goes to slot perm[j] with its sign.
            for j in 0..l {
                mono[vars.var(zfam, perm[j])] = (signs[j] * coords[j]) as i32;
            }
            out.add_term(
                &mono,
                if odd {
                    -BigRational::one()
                } else {
                    BigRational::one()
                },
            );
        }
        out
    };
    let rho: Vec<i64> = (0..l).map(|j| (l - j) as i64).collect();
    let shifted: Vec<i64> = (0..l).map(|j| lambda.part(j + 1) as i64 + rho[j]).collect();
    let num = alternant(&shifted);
    let den = alternant(&rho);
    Ok(num.div_exact(&den)?)
}

/// Schur-type character for a weakly decreasing integer sequence (entries may
/// be negative): the usual bialternant times a monomial shift.
pub fn laurent_schur(seq: &[i64], vars: &VarSet, fam: usize) -> Result<LaurentSeries, SymError> {
    let m = vars.family_size(fam);
    assert!(seq.len() <= m, "sequence longer than the variable family");
    let mut full: Vec<i64> = seq.to_vec();
    full.resize(m, 0);
    for w in full.windows(2) {
        assert!(w[0] >= w[1], "sequence not weakly decreasing");
    }
    if m == 0 {
        return Ok(LaurentSeries::one(vars));
    }
    let shift = (-full[m - 1]).max(0);
    let parts: Vec<u32> = full.iter().map(|&e| (e + shift) as u32).collect();
    let lam = Partition::new(&parts).expect("weakly decreasing");
    let s = schur_bialternant(&lam, vars, fam)?;
    if shift == 0 {
        return Ok(s);
    }
    let mut mono = vec![0i32; vars.num_vars()];
    for i in 0..m {
        mono[vars.var(fam, i)] = -(shift as i32);
    }
    Ok(&s * &LaurentSeries::monomial(vars, &mono, int(1)))
}

/// Independent route to the Schur polynomial: ratio of alternants
/// `a_{lambda+delta} / a_delta` with exact division.
pub fn schur_bialternant(
    lambda: &Partition,
    vars: &VarSet,
    fam: usize,
) -> Result<LaurentSeries, SymError> {
    let m = vars.family_size(fam);
    if lambda.len() > m {
        return Ok(LaurentSeries::zero(vars));
    }
    if m == 0 {
        return Ok(LaurentSeries::one(vars));
    }
    let alternant = |exps: &[i64]| -> LaurentSeries {
        let mut out = LaurentSeries::zero(vars);
        let mut idx: Vec<usize> = (0..m).collect();
        let mut perms = Vec::new();
        fn heap(k: usize, idx: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(idx.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, idx, out);
                if k % 2 == 0 {
                    idx.swap(i, k - 1);
                } else {
                    idx.swap(0, k - 1);
                }
            }
        }
        heap(m, &mut idx, &mut perms);
        for p in perms {
            let mut inv = 0;
            for i in 0..m {
                for j in (i + 1)..m {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            let mut mono = vec![0i32; vars.num_vars()];
            for (row, &col) in p.iter().enumerate() {
                mono[vars.var(fam, row)] = exps[col] as i32;
            }
            out.add_term(
                &mono,
                if inv % 2 == 1 {
                    -BigRational::one()
                } else {
                    BigRational::one()
                },
            );
        }
        out
    };
    let staircase: Vec<i64> = (0..m).map(|j| (m - 1 - j) as i64).collect();
    let shifted: Vec<i64> = (0..m)
        .map(|j| lambda.part(j + 1) as i64 + staircase[j])
        .collect();
    let num = alternant(&shifted);
    let den = alternant(&staircase);
    Ok(num.div_exact(&den)?)
}

/// Substitution test: invariant under swapping adjacent variables of `fam`.
pub fn is_symmetric_in(p: &LaurentSeries, fam: usize) -> bool {
    let vars = p.vars().clone();
    let m = vars.family_size(fam);
    for i in 0..m.saturating_sub(1) {
        let sw = Specialization::swap(&vars, vars.var(fam, i), vars.var(fam, i + 1));
        if p.specialize(&sw).unwrap() != *p {
            return false;
        }
    }
    true
}

/// Truncated verification of the general-linear Howe character identity:
/// `sum_lambda s_lambda(u) hs_lambda(x, y) = prod (1 - x_i u_k)^{-1} (1 + y_j u_k)`
/// over hook `lambda` with at most `d` rows, up to total degree `cutoff`.
pub fn verify_gl_howe_identity(
    m: usize,
    n: usize,
    d: usize,
    cutoff: i64,
) -> Result<bool, SymError> {
    let vars = VarSet::new(&[("x", m), ("y", n), ("u", d)]);
    let (xf, yf, uf) = (0, 1, 2);
    let mut lhs = LaurentSeries::zero(&vars).truncated(cutoff);
    // Each summand is bihomogeneous of degree 2|lambda|.
    let max_size = (cutoff / 2).max(0) as u32;
    for lam in Partition::all_up_to_size(max_size) {
        if lam.len() > d || !is_hook(&lam, HookContext::new(m, n)) {
            continue;
        }
        let su = schur(&lam, &vars, uf);
        if su.is_zero() {
            continue;
        }
        let hs = hook_schur(&lam, &vars, xf, yf);
        lhs = &lhs + &su.mul(&hs.poly, Some(cutoff))?;
    }
    let mut rhs = LaurentSeries::one(&vars).truncated(cutoff);
    let one = LaurentSeries::one(&vars);
    for k in 0..d {
        let u = LaurentSeries::variable(&vars, vars.var(uf, k));
        for i in 0..m {
            let x = LaurentSeries::variable(&vars, vars.var(xf, i));
            let factor = &one - &(&x * &u);
            rhs = rhs.mul(
                &LaurentSeries::geometric_inverse(&factor, cutoff)?,
                Some(cutoff),
            )?;
        }
        for j in 0..n {
            let y = LaurentSeries::variable(&vars, vars.var(yf, j));
            rhs = rhs.mul(&(&one + &(&y * &u)), Some(cutoff))?;
        }
    }
    Ok(lhs == rhs)
}

/// Truncated Cauchy identity `sum_{l(lambda)<=d} s_lambda(u) s_lambda(x) =
/// prod (1 - x_i u_k)^{-1}` up to total degree `cutoff`.
pub fn verify_cauchy_identity(m: usize, d: usize, cutoff: i64) -> Result<bool, SymError> {
    let vars = VarSet::new(&[("x", m), ("u", d)]);
    let (xf, uf) = (0, 1);
    let mut lhs = LaurentSeries::zero(&vars).truncated(cutoff);
    for lam in Partition::all_up_to_size(cutoff.max(0) as u32) {
        if lam.len() > d {
            continue;
        }
        let su = schur(&lam, &vars, uf);
        let sx = schur(&lam, &vars, xf);
        if su.is_zero() || sx.is_zero() {
            continue;
        }
        lhs = &lhs + &su.mul(&sx, Some(cutoff))?;
    }
    let mut rhs = LaurentSeries::one(&vars).truncated(cutoff);
    let one = LaurentSeries::one(&vars);
    for k in 0..d {
        let u = LaurentSeries::variable(&vars, vars.var(uf, k));
        for i in 0..m {
            let x = LaurentSeries::variable(&vars, vars.var(xf, i));
            let factor = &one - &(&x * &u);
            rhs = rhs.mul(
                &LaurentSeries::geometric_inverse(&factor, cutoff)?,
                Some(cutoff),
            )?;
        }
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn monomial_symmetric_examples() {
        let vars = VarSet::new(&[("x", 2)]);
        let p = monomial_symmetric(&Partition::of(&[1]), &vars, 0).unwrap();
        assert_eq!(p.render(), "x1 + x2");
        let p = monomial_symmetric(&Partition::of(&[2, 1]), &vars, 0).unwrap();
        assert_eq!(p.render(), "x1^2*x2 + x1*x2^2");
        let p = monomial_symmetric(&Partition::empty(), &vars, 0).unwrap();
        assert_eq!(p, LaurentSeries::one(&vars));
        assert!(monomial_symmetric(&Partition::of(&[1, 1, 1]), &vars, 0).is_err());
    }

    #[test]
    fn schur_examples() {
        let v1 = VarSet::new(&[("x", 1)]);
        assert!(schur(&Partition::of(&[1, 1]), &v1, 0).is_zero());
        let v2 = VarSet::new(&[("x", 2)]);
        let s2 = schur(&Partition::of(&[2]), &v2, 0);
        assert_eq!(s2.render(), "x1^2 + x1*x2 + x2^2");
        let v3 = VarSet::new(&[("x", 3)]);
        let col = schur(&Partition::of(&[1, 1, 1]), &v3, 0);
        assert_eq!(col.render(), "x1*x2*x3");
    }

    #[test]
    fn schur_matches_bialternant() {
        for m in 1..=4usize {
            let vars = VarSet::new(&[("x", m)]);
            for d in 0..=6u32 {
                for lam in Partition::all_of_size(d) {
                    let a = schur(&lam, &vars, 0);
                    let b = schur_bialternant(&lam, &vars, 0).unwrap();
                    assert_eq!(a, b, "lambda={lam} m={m}");
                }
            }
        }
    }

    #[test]
    fn skew_schur_examples() {
        let v1 = VarSet::new(&[("y", 1)]);
        let lam = Partition::of(&[1, 1]);
        let mu = Partition::of(&[1]);
        let p = skew_schur(&lam, &mu, &v1, 0).unwrap();
        assert_eq!(p.render(), "y1");
        // lambda = mu gives 1
        let p = skew_schur(&lam, &lam, &v1, 0).unwrap();
        assert_eq!(p, LaurentSeries::one(&v1));
        // empty mu specializes to schur
        let v2 = VarSet::new(&[("y", 2)]);
        let lam = Partition::of(&[2, 1]);
        assert_eq!(
            skew_schur(&lam, &Partition::empty(), &v2, 0).unwrap(),
            schur(&lam, &v2, 0)
        );
        assert!(skew_schur(&mu, &lam, &v1, 0).is_err());
    }

    #[test]
    fn hook_schur_examples() {
        let vars = VarSet::new(&[("x", 1), ("y", 1)]);
        let hs = hook_schur(&Partition::of(&[2]), &vars, 0, 1);
        assert!(!hs.structurally_zero);
        assert_eq!(hs.poly.render(), "x1^2 + x1*y1");
        let hs = hook_schur(&Partition::of(&[1]), &vars, 0, 1);
        assert_eq!(hs.poly.render(), "x1 + y1");
        // non-hook: zero with the structural flag
        let hs = hook_schur(&Partition::of(&[2, 2]), &vars, 0, 1);
        assert!(hs.structurally_zero && hs.poly.is_zero());
    }

    #[test]
    fn hook_schur_specializations() {
        // hs_lambda(x, {}) = s_lambda(x); hs_lambda({}, y) = s_{lambda'}(y)
        for d in 0..=8u32 {
            for lam in Partition::all_of_size(d) {
                let vx = VarSet::new(&[("x", 3), ("y", 0)]);
                let hs = hook_schur(&lam, &vx, 0, 1);
                if !hs.structurally_zero {
                    assert_eq!(hs.poly, schur(&lam, &vx, 0), "lambda={lam}");
                }
                let vy = VarSet::new(&[("x", 0), ("y", 3)]);
                let hs = hook_schur(&lam, &vy, 0, 1);
                if !hs.structurally_zero {
                    assert_eq!(hs.poly, schur(&conjugate(&lam), &vy, 1), "lambda={lam}");
                }
            }
        }
    }

    #[test]
    fn hook_schur_exchange_symmetry() {
        // hs_lambda(y, x) = hs_{lambda'}(x, y)
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)] {
            let vars = VarSet::new(&[("x", m), ("y", n)]);
            for d in 0..=6u32 {
                for lam in Partition::all_of_size(d) {
                    let swapped = hook_schur(&lam, &vars, 1, 0);
                    let conj = hook_schur(&conjugate(&lam), &vars, 0, 1);
                    assert_eq!(swapped.poly, conj.poly, "lambda={lam} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn hook_schur_symmetric_in_each_family() {
        let vars = VarSet::new(&[("x", 3), ("y", 2)]);
        for d in 0..=5u32 {
            for lam in Partition::all_of_size(d) {
                let hs = hook_schur(&lam, &vars, 0, 1);
                assert!(is_symmetric_in(&hs.poly, 0));
                assert!(is_symmetric_in(&hs.poly, 1));
            }
        }
    }

    #[test]
    fn symplectic_rank_one() {
        let vars = VarSet::new_mixed(&[("z", 1, false)]);
        for k in 0..=4u32 {
            let ch = symplectic_character(&Partition::of(&[k]), &vars, 0).unwrap();
            let mut expected = LaurentSeries::zero(&vars);
            let mut e = k as i32;
            loop {
                expected.add_term(&[e], int(1));
                if e <= -(k as i32) {
                    break;
                }
                e -= 2;
            }
            assert_eq!(ch, expected, "k={k}");
        }
    }

    #[test]
    fn symplectic_examples() {
        let vars = VarSet::new_mixed(&[("z", 2, false)]);
        let ch = symplectic_character(&Partition::empty(), &vars, 0).unwrap();
        assert_eq!(ch, LaurentSeries::one(&vars));
        let ch = symplectic_character(&Partition::of(&[1]), &vars, 0).unwrap();
        let mut expected = LaurentSeries::zero(&vars);
        expected.add_term(&[1, 0], int(1));
        expected.add_term(&[-1, 0], int(1));
        expected.add_term(&[0, 1], int(1));
        expected.add_term(&[0, -1], int(1));
        assert_eq!(ch, expected);
        assert!(symplectic_character(&Partition::of(&[1, 1, 1]), &vars, 0).is_err());
    }

    #[test]
    fn symplectic_invariances_and_dimension() {
        let vars = VarSet::new_mixed(&[("z", 2, false)]);
        for lam in [
            Partition::of(&[1]),
            Partition::of(&[2]),
            Partition::of(&[2, 1]),
            Partition::of(&[2, 2]),
        ] {
            let ch = symplectic_character(&lam, &vars, 0).unwrap();
            assert!(is_symmetric_in(&ch, 0));
            // invariance under z_i -> z_i^{-1}
            let mut flipped = LaurentSeries::zero(&vars);
            for (m, c) in ch.iter_terms() {
                flipped.add_term(&[-m[0], m[1]], c.clone());
            }
            assert_eq!(flipped, ch);
            // Weyl dimension at z = 1 for sp(4)
            let ones = Specialization::all_ones(&vars);
            let dim = ch.specialize(&ones).unwrap().constant_term();
            let expected = match lam.parts() {
                [1] => int(4),
                [2] => int(10),
                [2, 1] => int(16),
                [2, 2] => int(14),
                _ => unreachable!(),
            };
            assert_eq!(dim, expected, "lambda={lam}");
        }
    }

    #[test]
    fn laurent_schur_negative_entries() {
        let vars = VarSet::new(&[("x", 2)]);
        // character of the determinant-inverse power: all entries -1
        let p = laurent_schur(&[-1, -1], &vars, 0).unwrap();
        assert_eq!(p, LaurentSeries::monomial(&vars, &[-1, -1], int(1)));
        // mixed signs: (1, -1) = s_(2,0) shifted by (x1 x2)^{-1}
        let p = laurent_schur(&[1, -1], &vars, 0).unwrap();
        let s2 = schur(&Partition::of(&[2]), &vars, 0);
        let shift = LaurentSeries::monomial(&vars, &[-1, -1], int(1));
        assert_eq!(p, &s2 * &shift);
    }

    #[test]
    fn cauchy_truncated() {
        for (m, d, cut) in [(2, 2, 5), (3, 2, 6), (2, 3, 6), (3, 3, 6)] {
            assert!(verify_cauchy_identity(m, d, cut).unwrap(), "m={m} d={d}");
        }
    }

    #[test]
    fn principal_specialization_dimension() {
        // dim of the symmetric square of a (1|1) space is 2
        let vars = VarSet::new(&[("x", 1), ("y", 1)]);
        let hs = hook_schur(&Partition::of(&[2]), &vars, 0, 1);
        let ones = Specialization::all_ones(&vars);
        assert_eq!(hs.poly.specialize(&ones).unwrap().constant_term(), int(2));
        let third = Specialization {
            target: VarSet::new(&[]),
            map: vec![
                crate::polyring::SpecTarget::Value(rat(1, 3)),
                crate::polyring::SpecTarget::Value(rat(1, 3)),
            ],
        };
        assert_eq!(
            hs.poly.specialize(&third).unwrap().constant_term(),
            rat(2, 9)
        );
    }
}
