//! Brute-force duality engine on the tensor powers of a super vector space:
//! explicit commuting actions of the matrix superalgebra and the symmetric
//! group with the sign rule, weight-space and singular-vector analysis, and
//! verification of the multiplicity-free decomposition at desk scale.

use crate::partitions::{is_hook, osp_labels, specht_dimension_u64, HookContext, Partition};
use crate::polyring::{int, LaurentSeries, Specialization, VarSet};
use crate::ratmat::RatMatrix;
use crate::symfunc::hook_schur;
use num::{BigRational, One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

pub const BASIS_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub enum TensorError {
    SizeLimit { basis: usize, limit: usize },
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::SizeLimit { basis, limit } => {
                write!(f, "basis size {basis} exceeds the limit {limit}")
            }
        }
    }
}

impl std::error::Error for TensorError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub m: usize,
    pub n: usize,
    pub d: usize,
}

impl Dims {
    pub fn new(m: usize, n: usize, d: usize) -> Dims {
        Dims { m, n, d }
    }

    pub fn basis_size(&self) -> usize {
        (self.m + self.n).pow(self.d as u32)
    }

    /// Parity of a basis index `0..m+n`: 0 for the first `m`, 1 after.
    fn parity(&self, idx: u8) -> u32 {
        u32::from((idx as usize) >= self.m)
    }
}

/// Index word of length `d`; values `0..m` are the barred (even) indices,
/// `m..m+n` the unbarred (odd) ones.
pub type Word = Vec<u8>;

/// Exact-rational vector in the tensor power, sparse over index words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorVector {
    pub dims: Dims,
    pub terms: BTreeMap<Word, BigRational>,
}

impl TensorVector {
    pub fn zero(dims: Dims) -> TensorVector {
        TensorVector {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(dims: Dims, word: &[u8]) -> TensorVector {
        assert_eq!(word.len(), dims.d);
        let mut v = Self::zero(dims);
        v.terms.insert(word.to_vec(), BigRational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, word: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

/// Action of the elementary matrix `E_{ij}` (0-based indices into the ordered
/// basis) with the sign rule: crossing the first `t` slots costs
/// `(-1)^{|E| (|w_1| + ... + |w_t|)}`.
pub fn act_gl(dims: Dims, i: u8, j: u8, v: &TensorVector) -> TensorVector {
    let g_parity = (dims.parity(i) + dims.parity(j)) % 2;
    let mut out = TensorVector::zero(dims);
    for (word, c) in &v.terms {
        let mut prefix_parity = 0u32;
        for (t, &letter) in word.iter().enumerate() {
            if letter == j {
                let sign = if g_parity * prefix_parity % 2 == 1 {
                    -BigRational::one()
                } else {
                    BigRational::one()
                };
                let mut new_word = word.clone();
                new_word[t] = i;
                out.add_term(new_word, c * sign);
            }
            prefix_parity = (prefix_parity + dims.parity(letter)) % 2;
        }
    }
    out
}

/// Adjacent transposition `(pos, pos+1)` (0-based) with the sign
/// `(-1)^{|w_pos| |w_{pos+1}|}`.
pub fn act_sym(dims: Dims, pos: usize, v: &TensorVector) -> TensorVector {
    assert!(pos + 1 < dims.d);
    let mut out = TensorVector::zero(dims);
    for (word, c) in &v.terms {
        let pa = dims.parity(word[pos]);
        let pb = dims.parity(word[pos + 1]);
        let mut new_word = word.clone();
        new_word.swap(pos, pos + 1);
        let sign = if pa * pb % 2 == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        out.add_term(new_word, c * sign);
    }
    out
}

fn all_words(dims: Dims) -> Vec<Word> {
    let mut out = vec![vec![]];
    for _ in 0..dims.d {
        let mut next = Vec::new();
        for w in &out {
            for letter in 0..(dims.m + dims.n) as u8 {
                let mut e = w.clone();
                e.push(letter);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

/// Exhaustive check that every elementary-matrix action supercommutes with
/// every adjacent transposition on every basis word.
pub fn verify_commuting(dims: Dims) -> Result<bool, TensorError> {
    check_limit(dims)?;
    let words = all_words(dims);
    for i in 0..(dims.m + dims.n) as u8 {
        for j in 0..(dims.m + dims.n) as u8 {
            for pos in 0..dims.d.saturating_sub(1) {
                for w in &words {
                    let v = TensorVector::basis(dims, w);
                    let a = act_sym(dims, pos, &act_gl(dims, i, j, &v));
                    let b = act_gl(dims, i, j, &act_sym(dims, pos, &v));
                    if a != b {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn check_limit(dims: Dims) -> Result<(), TensorError> {
    let basis = dims.basis_size();
    if basis > BASIS_LIMIT {
        return Err(TensorError::SizeLimit {
            basis,
            limit: BASIS_LIMIT,
        });
    }
    Ok(())
}

/// Content of a word: how many times each basis index occurs.
fn content_of(word: &[u8], dims: Dims) -> Vec<u32> {
    let mut c = vec![0u32; dims.m + dims.n];
    for &l in word {
        c[l as usize] += 1;
    }
    c
}

fn words_of_content(dims: Dims, content: &[u32]) -> Vec<Word> {
    all_words(dims)
        .into_iter()
        .filter(|w| content_of(w, dims) == content)
        .collect()
}

/// Adjacent raising pairs `(i, i+1)` of the ordered basis, as 0-based index
/// pairs; these are the simple positive root vectors of the standard Borel.
fn raising_pairs(dims: Dims) -> Vec<(u8, u8)> {
    (0..(dims.m + dims.n).saturating_sub(1))
        .map(|a| (a as u8, a as u8 + 1))
        .collect()
}

/// Dimension of the space of vectors of the given content killed by all
/// standard raising operators: exact nullspace of the stacked matrices.
pub fn singular_space_dim(dims: Dims, content: &[u32]) -> usize {
    let source = words_of_content(dims, content);
    if source.is_empty() {
        return 0;
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (i, j) in raising_pairs(dims) {
        // E_{i, j} raises content at i and lowers at j
        let mut target = content.to_vec();
        if target[j as usize] == 0 {
            continue;
        }
        target[j as usize] -= 1;
        target[i as usize] += 1;
        let targets = words_of_content(dims, &target);
        let index: BTreeMap<&Word, usize> =
            targets.iter().enumerate().map(|(k, w)| (w, k)).collect();
        // one matrix row per target word; columns indexed by source words
        let mut mat = vec![vec![BigRational::zero(); source.len()]; targets.len()];
        for (col, w) in source.iter().enumerate() {
            let image = act_gl(dims, i, j, &TensorVector::basis(dims, w));
            for (tw, c) in &image.terms {
                mat[index[tw]][col] = c.clone();
            }
        }
        rows.extend(mat);
    }
    if rows.is_empty() {
        return source.len();
    }
    RatMatrix::from_rows(rows).nullspace_dim()
}

#[derive(Debug, Clone, Serialize)]
pub struct LambdaChecks {
    /// Singular-space dimension equals the symmetric-group dimension.
    pub multiplicity: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LambdaReport {
    pub lambda: String,
    pub hook: bool,
    pub hs_dim: u64,
    pub specht_dim: u64,
    pub singular_dim: usize,
    pub checks: LambdaChecks,
}

impl LambdaReport {
    pub fn multiplicity_ok(&self) -> bool {
        self.checks.multiplicity
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DecomposeReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub total_dim: u64,
    pub sum_hs_times_specht: u64,
    pub dimension_identity_ok: bool,
    pub character_identity_ok: bool,
    pub commuting_ok: bool,
    pub all_multiplicities_ok: bool,
    pub lambdas: Vec<LambdaReport>,
}

impl DecomposeReport {
    pub fn passed(&self) -> bool {
        self.dimension_identity_ok
            && self.character_identity_ok
            && self.commuting_ok
            && self.all_multiplicities_ok
    }
}

/// Principal specialization of the hook Schur polynomial: the dimension of
/// the simple module labeled by `lambda`.
pub fn hs_dimension(lambda: &Partition, ctx: HookContext) -> u64 {
    use num::ToPrimitive;
    let vars = VarSet::new(&[("x", ctx.m), ("y", ctx.n)]);
    let hs = hook_schur(lambda, &vars, 0, 1);
    let ones = Specialization::all_ones(&vars);
    hs.poly
        .specialize(&ones)
        .unwrap()
        .constant_term()
        .to_integer()
        .to_u64()
        .expect("dimension fits u64")
}

/// Full decomposition check: per-partition multiplicity spaces, the
/// dimension identity, the character identity, and the commuting property.
pub fn decompose(dims: Dims) -> Result<DecomposeReport, TensorError> {
    check_limit(dims)?;
    let ctx = HookContext::new(dims.m, dims.n);
    let mut lambdas = Vec::new();
    let mut sum = 0u64;
    for lam in Partition::all_of_size(dims.d as u32) {
        let hook = is_hook(&lam, ctx);
        let specht = specht_dimension_u64(&lam);
        let (hs_dim, singular, mult_ok) = if hook {
            let hs_dim = hs_dimension(&lam, ctx);
            let (nat, _) = osp_labels(&lam, ctx).expect("hook");
            let mut content: Vec<u32> = nat.delta.iter().map(|&v| v as u32).collect();
            content.extend(nat.epsilon.iter().map(|&v| v as u32));
            let singular = singular_space_dim(dims, &content);
            (hs_dim, singular, singular as u64 == specht)
        } else {
            // the label does not occur; its would-be content has no
            // distinguished meaning, so only record absence
            (0, 0, true)
        };
        if hook {
            sum += hs_dim * specht;
        }
        lambdas.push(LambdaReport {
            lambda: lam.to_string(),
            hook,
            hs_dim,
            specht_dim: specht,
            singular_dim: singular,
            checks: LambdaChecks {
                multiplicity: mult_ok,
            },
        });
    }
    let total = dims.basis_size() as u64;
    let character_ok = character_identity(dims)?;
    let commuting_ok = verify_commuting(dims)?;
    Ok(DecomposeReport {
        m: dims.m,
        n: dims.n,
        d: dims.d,
        total_dim: total,
        sum_hs_times_specht: sum,
        dimension_identity_ok: sum == total,
        character_identity_ok: character_ok,
        commuting_ok,
        all_multiplicities_ok: lambdas.iter().all(|l| l.multiplicity_ok()),
        lambdas,
    })
}

/// `(x_1 + .. + x_m + y_1 + .. + y_n)^d = sum_lambda f^lambda hs_lambda(x, y)`,
/// and the left side also equals the sum of weight monomials over all basis
/// words.
pub fn character_identity(dims: Dims) -> Result<bool, TensorError> {
    check_limit(dims)?;
    let ctx = HookContext::new(dims.m, dims.n);
    let vars = VarSet::new(&[("x", dims.m), ("y", dims.n)]);
    let mut linear = LaurentSeries::zero(&vars);
    for flat in 0..dims.m + dims.n {
        linear = &linear + &LaurentSeries::variable(&vars, flat);
    }
    let power = linear.pow(dims.d as u32, None).expect("same varset");
    // word-sum route
    let mut word_sum = LaurentSeries::zero(&vars);
    for w in all_words(dims) {
        let mut mono = vec![0i32; vars.num_vars()];
        for &l in &w {
            mono[l as usize] += 1;
        }
        word_sum.add_term(&mono, BigRational::one());
    }
    if word_sum != power {
        return Ok(false);
    }
    // representation-theoretic route
    let mut rhs = LaurentSeries::zero(&vars);
    for lam in Partition::all_of_size(dims.d as u32) {
        if !is_hook(&lam, ctx) {
            continue;
        }
        let f = specht_dimension_u64(&lam);
        let hs = hook_schur(&lam, &vars, 0, 1);
        rhs = &rhs + &hs.poly.scale(&int(f as i64));
    }
    Ok(rhs == power)
}

/// Weight-space dimension at a content equals the multinomial coefficient.
pub fn weight_space_dimension(dims: Dims, content: &[u32]) -> u64 {
    words_of_content(dims, content).len() as u64
}
