//! Root data for `gl(m|n)`: the supertrace bilinear form, rho vectors,
//! Borel classes as epsilon-delta words, odd reflections on simple-root
//! systems and on highest weights, extremal weights by row/column peeling,
//! typicality with its degree, and the induced-module character formula.

use crate::partitions::{is_hook, HookContext, Partition};
use crate::polyring::{int, LaurentSeries, VarSet};
use crate::symfunc::{laurent_schur, SymError};
use num::{BigRational, One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

/// Upper bound on `m * n` for the exhaustive orthogonal-set search.
pub const ODD_ROOT_SEARCH_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub enum GlError {
    NotSimpleRoot(Root),
    NotOddIsotropic(Root),
    NotARoot(Weight),
    NonHook {
        lambda: Partition,
        m: usize,
        n: usize,
    },
    NonDominant(Weight),
    SearchLimit {
        mn: usize,
        limit: usize,
    },
    BadWord(String),
    Sym(SymError),
}

impl fmt::Display for GlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlError::NotSimpleRoot(r) => write!(f, "{r} is not a simple root of the given system"),
            GlError::NotOddIsotropic(r) => write!(f, "{r} is not odd isotropic"),
            GlError::NotARoot(w) => write!(f, "weight {w} is not of root form"),
            GlError::NonHook { lambda, m, n } => {
                write!(f, "{lambda} is not an ({m}|{n})-hook partition")
            }
            GlError::NonDominant(w) => write!(f, "weight {w} is not dominant integral"),
            GlError::SearchLimit { mn, limit } => {
                write!(f, "odd-root search needs mn = {mn} <= {limit}")
            }
            GlError::BadWord(s) => write!(f, "bad epsilon-delta word: {s}"),
            GlError::Sym(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GlError {}

impl From<SymError> for GlError {
    fn from(e: SymError) -> Self {
        GlError::Sym(e)
    }
}

/// Basis symbol of the weight space: `Delta(i)` for `delta_i` (1-based,
/// `i <= m`), `Epsilon(j)` for `epsilon_j` (`j <= n`). The derived order is
/// the standard one: all deltas before all epsilons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    Delta(u8),
    Epsilon(u8),
}

impl Sym {
    pub fn is_delta(&self) -> bool {
        matches!(self, Sym::Delta(_))
    }

    /// `(sym, sym)` under the supertrace form: +1 for delta, -1 for epsilon.
    fn norm(&self) -> i64 {
        if self.is_delta() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::Delta(i) => write!(f, "d{i}"),
            Sym::Epsilon(j) => write!(f, "e{j}"),
        }
    }
}

/// Finitely supported exact-rational weight over the delta/epsilon basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Weight {
    coeffs: BTreeMap<Sym, BigRational>,
}

impl Weight {
    pub fn zero() -> Weight {
        Weight::default()
    }

    pub fn basis(sym: Sym) -> Weight {
        let mut w = Weight::zero();
        w.set(sym, BigRational::one());
        w
    }

    pub fn coeff(&self, sym: Sym) -> BigRational {
        self.coeffs
            .get(&sym)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn set(&mut self, sym: Sym, v: BigRational) {
        if v.is_zero() {
            self.coeffs.remove(&sym);
        } else {
            self.coeffs.insert(sym, v);
        }
    }

    pub fn add_coeff(&mut self, sym: Sym, v: &BigRational) {
        let cur = self.coeff(sym) + v;
        self.set(sym, cur);
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let mut out = self.clone();
        for (s, v) in &other.coeffs {
            out.add_coeff(*s, v);
        }
        out
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        let mut out = self.clone();
        for (s, v) in &other.coeffs {
            out.add_coeff(*s, &-v.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Sym, &BigRational)> {
        self.coeffs.iter()
    }

    /// Coefficient lists on `delta_1..delta_m` and `epsilon_1..epsilon_n`.
    pub fn coefficient_lists(&self, ctx: HookContext) -> (Vec<BigRational>, Vec<BigRational>) {
        let d = (1..=ctx.m as u8)
            .map(|i| self.coeff(Sym::Delta(i)))
            .collect();
        let e = (1..=ctx.n as u8)
            .map(|j| self.coeff(Sym::Epsilon(j)))
            .collect();
        (d, e)
    }

    pub fn from_lists(delta: &[BigRational], epsilon: &[BigRational]) -> Weight {
        let mut w = Weight::zero();
        for (i, v) in delta.iter().enumerate() {
            w.set(Sym::Delta(i as u8 + 1), v.clone());
        }
        for (j, v) in epsilon.iter().enumerate() {
            w.set(Sym::Epsilon(j as u8 + 1), v.clone());
        }
        w
    }

    pub fn from_integer_lists(delta: &[i64], epsilon: &[i64]) -> Weight {
        Weight::from_lists(
            &delta.iter().map(|&v| int(v)).collect::<Vec<_>>(),
            &epsilon.iter().map(|&v| int(v)).collect::<Vec<_>>(),
        )
    }

    pub fn to_json(&self, ctx: HookContext) -> serde_json::Value {
        let (d, e) = self.coefficient_lists(ctx);
        serde_json::json!({
            "delta": d.iter().map(crate::polyring::render_rational).collect::<Vec<_>>(),
            "epsilon": e.iter().map(crate::polyring::render_rational).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(s, v)| {
                if v.is_one() {
                    format!("{s}")
                } else {
                    format!("{}*{s}", crate::polyring::render_rational(v))
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The root `epsilon_plus - epsilon_minus`, where a barred index stands for a
/// delta symbol. Odd (equivalently isotropic, in type gl) when the two
/// symbols have different types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub plus: Sym,
    pub minus: Sym,
}

impl Root {
    pub fn new(plus: Sym, minus: Sym) -> Root {
        assert_ne!(plus, minus, "root symbols must differ");
        Root { plus, minus }
    }

    pub fn is_odd(&self) -> bool {
        self.plus.is_delta() != self.minus.is_delta()
    }

    pub fn negate(&self) -> Root {
        Root {
            plus: self.minus,
            minus: self.plus,
        }
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::basis(self.plus);
        w.add_coeff(self.minus, &-BigRational::one());
        w
    }

    /// Recognize a weight of the form `epsilon_a - epsilon_b` as a root.
    pub fn from_weight(w: &Weight) -> Result<Root, GlError> {
        let mut plus = None;
        let mut minus = None;
        for (s, v) in w.support() {
            if v.is_one() && plus.is_none() {
                plus = Some(*s);
            } else if (-v).is_one() && minus.is_none() {
                minus = Some(*s);
            } else {
                return Err(GlError::NotARoot(w.clone()));
            }
        }
        match (plus, minus) {
            (Some(p), Some(m)) => Ok(Root::new(p, m)),
            _ => Err(GlError::NotARoot(w.clone())),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.plus, self.minus)
    }
}

/// Supertrace-induced bilinear form: `(delta_i, delta_i) = 1`,
/// `(epsilon_j, epsilon_j) = -1`, cross terms 0.
pub fn form(a: &Weight, b: &Weight) -> BigRational {
    let mut out = BigRational::zero();
    for (s, va) in a.support() {
        let vb = b.coeff(*s);
        if !vb.is_zero() {
            out += va * vb * int(s.norm());
        }
    }
    out
}

pub fn form_root(a: &Root, b: &Root) -> BigRational {
    form(&a.weight(), &b.weight())
}

/// `(rho_0, rho_1, rho)`: half sums of even/odd positive roots and their
/// difference, as exact-rational weights.
pub fn rho_triple(ctx: HookContext) -> (Weight, Weight, Weight) {
    let (m, n) = (ctx.m as i64, ctx.n as i64);
    let mut rho0 = Weight::zero();
    for i in 1..=ctx.m as u8 {
        rho0.set(
            Sym::Delta(i),
            BigRational::new((m - 2 * i as i64 + 1).into(), 2.into()),
        );
    }
    for j in 1..=ctx.n as u8 {
        rho0.set(
            Sym::Epsilon(j),
            BigRational::new((n - 2 * j as i64 + 1).into(), 2.into()),
        );
    }
    let mut rho1 = Weight::zero();
    for i in 1..=ctx.m as u8 {
        rho1.set(Sym::Delta(i), BigRational::new(n.into(), 2.into()));
    }
    for j in 1..=ctx.n as u8 {
        rho1.set(Sym::Epsilon(j), BigRational::new((-m).into(), 2.into()));
    }
    let rho = rho0.sub(&rho1);
    (rho0, rho1, rho)
}

/// Positive odd roots `delta_i - epsilon_j`.
pub fn odd_positive_roots(ctx: HookContext) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=ctx.m as u8 {
        for j in 1..=ctx.n as u8 {
            out.push(Root::new(Sym::Delta(i), Sym::Epsilon(j)));
        }
    }
    out
}

/// Letter of an epsilon-delta word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    D,
    E,
}

/// Word over `{d, e}` recording the types of an ordered weight basis; fixes
/// a conjugacy class of Borel subalgebras.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorelWord {
    pub letters: Vec<Letter>,
}

impl BorelWord {
    pub fn parse(s: &str, ctx: HookContext) -> Result<BorelWord, GlError> {
        let letters: Result<Vec<Letter>, GlError> = s
            .chars()
            .map(|c| match c {
                'd' => Ok(Letter::D),
                'e' => Ok(Letter::E),
                other => Err(GlError::BadWord(format!("unexpected letter {other:?}"))),
            })
            .collect();
        let letters = letters?;
        let d = letters.iter().filter(|&&l| l == Letter::D).count();
        let e = letters.len() - d;
        if d != ctx.m || e != ctx.n {
            return Err(GlError::BadWord(format!(
                "word {s} has ({d}|{e}) letters, expected ({}|{})",
                ctx.m, ctx.n
            )));
        }
        Ok(BorelWord { letters })
    }

    pub fn standard(ctx: HookContext) -> BorelWord {
        let mut letters = vec![Letter::D; ctx.m];
        letters.extend(vec![Letter::E; ctx.n]);
        BorelWord { letters }
    }

    /// The ordered basis with deltas and epsilons each in natural order.
    pub fn ordered_basis(&self) -> Vec<Sym> {
        let mut d = 0u8;
        let mut e = 0u8;
        self.letters
            .iter()
            .map(|l| match l {
                Letter::D => {
                    d += 1;
                    Sym::Delta(d)
                }
                Letter::E => {
                    e += 1;
                    Sym::Epsilon(e)
                }
            })
            .collect()
    }
}

impl fmt::Display for BorelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", if *l == Letter::D { 'd' } else { 'e' })?;
        }
        Ok(())
    }
}

/// All `C(m+n, m)` epsilon-delta words.
pub fn borel_words(ctx: HookContext) -> Vec<BorelWord> {
    let total = ctx.m + ctx.n;
    let mut out = Vec::new();
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != ctx.m {
            continue;
        }
        let letters: Vec<Letter> = (0..total)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    Letter::D
                } else {
                    Letter::E
                }
            })
            .collect();
        out.push(BorelWord { letters });
    }
    out.sort_by_key(|w| w.to_string());
    out
}

/// Consecutive differences of an ordered basis.
pub fn simple_roots(basis: &[Sym]) -> Vec<Root> {
    basis.windows(2).map(|w| Root::new(w[0], w[1])).collect()
}

pub fn standard_basis(ctx: HookContext) -> Vec<Sym> {
    BorelWord::standard(ctx).ordered_basis()
}

/// Odd reflection on a simple-root system: replace `alpha` by `-alpha`, add
/// `alpha` to the neighbors pairing nontrivially with it, keep the rest.
pub fn odd_reflect_roots(pi: &[Root], alpha: &Root) -> Result<Vec<Root>, GlError> {
    if !pi.contains(alpha) {
        return Err(GlError::NotSimpleRoot(*alpha));
    }
    if !alpha.is_odd() || !form_root(alpha, alpha).is_zero() {
        return Err(GlError::NotOddIsotropic(*alpha));
    }
    pi.iter()
        .map(|beta| {
            if beta == alpha {
                Ok(alpha.negate())
            } else if form_root(beta, alpha).is_zero() {
                Ok(*beta)
            } else {
                Root::from_weight(&beta.weight().add(&alpha.weight()))
            }
        })
        .collect()
}

/// Even (real) reflection of a whole simple system at an even simple root.
pub fn even_reflect_roots(pi: &[Root], beta: &Root) -> Result<Vec<Root>, GlError> {
    if !pi.contains(beta) {
        return Err(GlError::NotSimpleRoot(*beta));
    }
    if beta.is_odd() {
        return Err(GlError::NotOddIsotropic(*beta));
    }
    let bw = beta.weight();
    let norm = form(&bw, &bw);
    pi.iter()
        .map(|gamma| {
            let gw = gamma.weight();
            let c = form(&gw, &bw) * int(2) / norm.clone();
            let mut refl = gw.clone();
            for (s, v) in bw.support() {
                refl.add_coeff(*s, &(-&c * v));
            }
            Root::from_weight(&refl)
        })
        .collect()
}

/// Highest-weight move under the odd reflection at `alpha`: unchanged when
/// the pairing `(lambda, alpha)` vanishes, otherwise `lambda - alpha`.
pub fn odd_reflect_weight(lambda: &Weight, alpha: &Root) -> Result<Weight, GlError> {
    if !alpha.is_odd() || !form_root(alpha, alpha).is_zero() {
        return Err(GlError::NotOddIsotropic(*alpha));
    }
    let pairing = form(lambda, &alpha.weight());
    if pairing.is_zero() {
        Ok(lambda.clone())
    } else {
        Ok(lambda.sub(&alpha.weight()))
    }
}

fn delete_first_row(p: &Partition) -> (u32, Partition) {
    (p.part(1), p.tail(1))
}

fn delete_first_column(p: &Partition) -> (u32, Partition) {
    let height = p.len() as u32;
    let rest: Vec<u32> = p.parts().iter().map(|&r| r - 1).collect();
    (height, Partition::new(&rest).expect("still decreasing"))
}

/// Extremal weight of the hook-partition module with respect to the Borel
/// class of `word`: peel the first row for each `d` letter and the first
/// column for each `e` letter, assigning the emitted numbers to the symbols
/// of the word in order.
pub fn extremal_weight(
    lambda: &Partition,
    word: &BorelWord,
    ctx: HookContext,
) -> Result<Weight, GlError> {
    let basis = word.ordered_basis();
    let mut remaining = lambda.clone();
    let mut out = Weight::zero();
    for sym in basis {
        let (emitted, rest) = match sym {
            Sym::Delta(_) => delete_first_row(&remaining),
            Sym::Epsilon(_) => delete_first_column(&remaining),
        };
        remaining = rest;
        out.set(sym, int(emitted as i64));
    }
    if !remaining.is_empty() {
        return Err(GlError::NonHook {
            lambda: lambda.clone(),
            m: ctx.m,
            n: ctx.n,
        });
    }
    Ok(out)
}

/// Maximum number of pairwise orthogonal vanishing odd positive roots:
/// vanishing roots `delta_i - epsilon_j` are orthogonal exactly when their
/// row and column indices both differ, so this is a bipartite matching.
fn max_orthogonal_matching(pairs: &[(u8, u8)]) -> usize {
    fn rec(pairs: &[(u8, u8)], k: usize, used_i: &mut Vec<u8>, used_j: &mut Vec<u8>) -> usize {
        if k == pairs.len() {
            return 0;
        }
        let skip = rec(pairs, k + 1, used_i, used_j);
        let (i, j) = pairs[k];
        if used_i.contains(&i) || used_j.contains(&j) {
            return skip;
        }
        used_i.push(i);
        used_j.push(j);
        let take = 1 + rec(pairs, k + 1, used_i, used_j);
        used_i.pop();
        used_j.pop();
        skip.max(take)
    }
    rec(pairs, 0, &mut Vec::new(), &mut Vec::new())
}

/// `(is_typical, degree of atypicality)` of a weight.
pub fn typicality(lambda: &Weight, ctx: HookContext) -> Result<(bool, usize), GlError> {
    let mn = ctx.m * ctx.n;
    if mn > ODD_ROOT_SEARCH_LIMIT {
        return Err(GlError::SearchLimit {
            mn,
            limit: ODD_ROOT_SEARCH_LIMIT,
        });
    }
    let (_, _, rho) = rho_triple(ctx);
    let shifted = lambda.add(&rho);
    let mut vanishing = Vec::new();
    for root in odd_positive_roots(ctx) {
        if form(&shifted, &root.weight()).is_zero() {
            if let (Sym::Delta(i), Sym::Epsilon(j)) = (root.plus, root.minus) {
                vanishing.push((i, j));
            }
        }
    }
    let degree = max_orthogonal_matching(&vanishing);
    Ok((vanishing.is_empty(), degree))
}

/// Character of the induced module `K(lambda)`: the even Weyl character for
/// the `gl(m) + gl(n)` part times `prod_{i,j} (1 + x_i^{-1} y_j)`, with
/// `e^{delta_i} -> x_i`, `e^{epsilon_j} -> y_j`. Exact Laurent polynomial.
pub fn kac_character(
    lambda: &Weight,
    ctx: HookContext,
    vars: &VarSet,
    xfam: usize,
    yfam: usize,
) -> Result<LaurentSeries, GlError> {
    let (dc, ec) = lambda.coefficient_lists(ctx);
    let as_int = |v: &BigRational| -> Option<i64> {
        use num::ToPrimitive;
        if v.denom().is_one() {
            v.numer().to_i64()
        } else {
            None
        }
    };
    let di: Option<Vec<i64>> = dc.iter().map(as_int).collect();
    let ei: Option<Vec<i64>> = ec.iter().map(as_int).collect();
    let (di, ei) = match (di, ei) {
        (Some(d), Some(e)) => (d, e),
        _ => return Err(GlError::NonDominant(lambda.clone())),
    };
    // support must lie within the context
    for (s, _) in lambda.support() {
        let ok = match s {
            Sym::Delta(i) => (*i as usize) <= ctx.m,
            Sym::Epsilon(j) => (*j as usize) <= ctx.n,
        };
        if !ok {
            return Err(GlError::NonDominant(lambda.clone()));
        }
    }
    if di.windows(2).any(|w| w[0] < w[1]) || ei.windows(2).any(|w| w[0] < w[1]) {
        return Err(GlError::NonDominant(lambda.clone()));
    }
    let even_x = laurent_schur(&di, vars, xfam)?;
    let even_y = laurent_schur(&ei, vars, yfam)?;
    let mut ch = &even_x * &even_y;
    let one = LaurentSeries::one(vars);
    for i in 0..ctx.m {
        for j in 0..ctx.n {
            let mut mono = vec![0i32; vars.num_vars()];
            mono[vars.var(xfam, i)] = -1;
            mono[vars.var(yfam, j)] = 1;
            let factor = &one + &LaurentSeries::monomial(vars, &mono, int(1));
            ch = &ch * &factor;
        }
    }
    Ok(ch)
}

/// All simple-root systems reachable from the standard one by odd and even
/// reflections at simple roots.
pub fn reachable_simple_systems(ctx: HookContext) -> Vec<Vec<Root>> {
    let start = simple_roots(&standard_basis(ctx));
    let key = |pi: &[Root]| -> Vec<Root> {
        let set: BTreeSet<Root> = pi.iter().copied().collect();
        set.into_iter().collect()
    };
    let mut seen: HashSet<Vec<Root>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(key(&start));
    queue.push_back(start);
    let mut out = Vec::new();
    while let Some(pi) = queue.pop_front() {
        out.push(pi.clone());
        for alpha in pi.clone() {
            let next = if alpha.is_odd() {
                odd_reflect_roots(&pi, &alpha)
            } else {
                even_reflect_roots(&pi, &alpha)
            };
            if let Ok(next) = next {
                if seen.insert(key(&next)) {
                    queue.push_back(next);
                }
            }
        }
    }
    out
}

/// One shuffle step: swap an adjacent `d e` pair to `e d`, returning the new
/// word and the odd root `delta_i - epsilon_j` whose reflection realizes it.
pub fn shuffle_step(word: &BorelWord, pos: usize) -> Option<(BorelWord, Root)> {
    if pos + 1 >= word.letters.len() {
        return None;
    }
    if word.letters[pos] != Letter::D || word.letters[pos + 1] != Letter::E {
        return None;
    }
    let i = word.letters[..=pos]
        .iter()
        .filter(|&&l| l == Letter::D)
        .count() as u8;
    let j = word.letters[..=pos + 1]
        .iter()
        .filter(|&&l| l == Letter::E)
        .count() as u8;
    let mut letters = word.letters.clone();
    letters.swap(pos, pos + 1);
    Some((
        BorelWord { letters },
        Root::new(Sym::Delta(i), Sym::Epsilon(j)),
    ))
}

/// All swap paths from the standard word to `target`, each as the sequence
/// of odd roots reflected along the way.
pub fn shuffle_paths(target: &BorelWord, ctx: HookContext) -> Vec<Vec<Root>> {
    let start = BorelWord::standard(ctx);
    let mut out = Vec::new();
    let mut path = Vec::new();
    fn rec(cur: &BorelWord, target: &BorelWord, path: &mut Vec<Root>, out: &mut Vec<Vec<Root>>) {
        if cur == target {
            out.push(path.clone());
            return;
        }
        for pos in 0..cur.letters.len().saturating_sub(1) {
            if let Some((next, root)) = shuffle_step(cur, pos) {
                // only move epsilons that still need to travel left
                if inversions(&next).is_subset(&inversions(target)) {
                    path.push(root);
                    rec(&next, target, path, out);
                    path.pop();
                }
            }
        }
    }
    fn inversions(w: &BorelWord) -> BTreeSet<(usize, usize)> {
        // pairs (delta index, epsilon index) with the epsilon left of the delta
        let mut out = BTreeSet::new();
        let mut d = 0usize;
        for (p, l) in w.letters.iter().enumerate() {
            if *l == Letter::D {
                d += 1;
                let e_before = w.letters[..p].iter().filter(|&&x| x == Letter::E).count();
                for j in 1..=e_before {
                    out.insert((d, j));
                }
            }
        }
        out
    }
    rec(&start, target, &mut path, &mut out);
    out
}

/// Fold of highest-weight odd reflections along a root path, starting from
/// the standard highest weight of the hook module.
pub fn fold_weight_along(
    lambda: &Partition,
    path: &[Root],
    ctx: HookContext,
) -> Result<Weight, GlError> {
    if !is_hook(lambda, ctx) {
        return Err(GlError::NonHook {
            lambda: lambda.clone(),
            m: ctx.m,
            n: ctx.n,
        });
    }
    let (nat, _) = crate::partitions::osp_labels(lambda, ctx).expect("hook checked");
    let mut w = Weight::from_integer_lists(&nat.delta, &nat.epsilon);
    for root in path {
        w = odd_reflect_weight(&w, root)?;
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;
    use crate::symfunc::hook_schur;

    fn d(i: u8) -> Sym {
        Sym::Delta(i)
    }

    fn e(j: u8) -> Sym {
        Sym::Epsilon(j)
    }

    #[test]
    fn form_examples() {
        let ctx = HookContext::new(1, 1);
        let _ = ctx;
        let alpha = Root::new(d(1), e(1)).weight();
        assert!(form(&alpha, &alpha).is_zero());
        let delta = Weight::basis(d(1));
        assert_eq!(form(&delta, &delta), int(1));
        let eps = Weight::basis(e(1));
        assert_eq!(form(&eps, &eps), int(-1));
        assert!(form(&Weight::zero(), &delta).is_zero());
    }

    #[test]
    fn rho_examples() {
        // gl(1|1): rho_0 = 0, rho_1 = (1/2) d1 - (1/2) e1
        let (r0, r1, _) = rho_triple(HookContext::new(1, 1));
        assert!(r0.is_zero());
        assert_eq!(r1.coeff(d(1)), rat(1, 2));
        assert_eq!(r1.coeff(e(1)), rat(-1, 2));
        // gl(2|0): rho_1 = 0
        let (_, r1, _) = rho_triple(HookContext::new(2, 0));
        assert!(r1.is_zero());
    }

    #[test]
    fn rho_pairs_with_simple_roots() {
        for m in 1..=4usize {
            for n in 1..=4usize {
                let ctx = HookContext::new(m, n);
                let (_, _, rho) = rho_triple(ctx);
                for beta in simple_roots(&standard_basis(ctx)) {
                    let bw = beta.weight();
                    assert_eq!(
                        form(&rho, &bw),
                        form(&bw, &bw) / int(2),
                        "m={m} n={n} beta={beta}"
                    );
                }
            }
        }
    }

    #[test]
    fn rho1_is_family_constant() {
        for m in 1..=4usize {
            for n in 1..=4usize {
                let (_, r1, _) = rho_triple(HookContext::new(m, n));
                let dvals: BTreeSet<BigRational> = (1..=m as u8).map(|i| r1.coeff(d(i))).collect();
                let evals: BTreeSet<BigRational> = (1..=n as u8).map(|j| r1.coeff(e(j))).collect();
                assert_eq!(dvals.len(), 1);
                assert_eq!(evals.len(), 1);
            }
        }
    }

    #[test]
    fn simple_roots_examples() {
        let ctx = HookContext::new(2, 2);
        let pi = simple_roots(&standard_basis(ctx));
        assert_eq!(pi.len(), 3);
        let odd: Vec<&Root> = pi.iter().filter(|r| r.is_odd()).collect();
        assert_eq!(odd.len(), 1);
        assert_eq!(*odd[0], Root::new(d(2), e(1)));
        // gl(1|2) middle diagram
        let basis = vec![e(1), d(1), e(2)];
        let pi = simple_roots(&basis);
        assert_eq!(pi, vec![Root::new(e(1), d(1)), Root::new(d(1), e(2))]);
        assert!(simple_roots(&[d(1)]).is_empty());
    }

    #[test]
    fn odd_reflection_on_roots() {
        // gl(1|2): reflect the standard system at d1 - e1
        let pi = vec![Root::new(d(1), e(1)), Root::new(e(1), e(2))];
        let alpha = Root::new(d(1), e(1));
        let new = odd_reflect_roots(&pi, &alpha).unwrap();
        let expected: BTreeSet<Root> = [Root::new(e(1), d(1)), Root::new(d(1), e(2))]
            .into_iter()
            .collect();
        assert_eq!(new.iter().copied().collect::<BTreeSet<_>>(), expected);
        // gl(1|1): only -alpha remains
        let pi = vec![Root::new(d(1), e(1))];
        let new = odd_reflect_roots(&pi, &Root::new(d(1), e(1))).unwrap();
        assert_eq!(new, vec![Root::new(e(1), d(1))]);
        // reflecting back restores the system
        let back = odd_reflect_roots(&new, &Root::new(e(1), d(1))).unwrap();
        assert_eq!(back, pi);
        // rejects non-simple and even roots
        assert!(odd_reflect_roots(&pi, &Root::new(d(1), e(2))).is_err());
        let even_pi = vec![Root::new(e(1), e(2))];
        assert!(odd_reflect_roots(&even_pi, &Root::new(e(1), e(2))).is_err());
    }

    #[test]
    fn even_reflection_on_systems() {
        // the vertical move of the gl(1|2) picture: reflecting the standard
        // system at the even simple root sends it to the lower-left system
        let pi = vec![Root::new(d(1), e(1)), Root::new(e(1), e(2))];
        let beta = Root::new(e(1), e(2));
        let new = even_reflect_roots(&pi, &beta).unwrap();
        let expected: BTreeSet<Root> = [Root::new(d(1), e(2)), Root::new(e(2), e(1))]
            .into_iter()
            .collect();
        assert_eq!(new.into_iter().collect::<BTreeSet<_>>(), expected);
        // involutive, and rejects odd roots
        let back = even_reflect_roots(
            &[Root::new(d(1), e(2)), Root::new(e(2), e(1))],
            &Root::new(e(2), e(1)),
        )
        .unwrap();
        assert_eq!(
            back.into_iter().collect::<BTreeSet<_>>(),
            pi.iter().copied().collect::<BTreeSet<_>>()
        );
        assert!(even_reflect_roots(&pi, &Root::new(d(1), e(1))).is_err());
    }

    #[test]
    fn weight_json_rendering() {
        let ctx = HookContext::new(1, 2);
        let mut w = Weight::from_integer_lists(&[3], &[2, 1]);
        w.set(e(2), rat(-1, 2));
        assert_eq!(
            w.to_json(ctx).to_string(),
            r#"{"delta":["3"],"epsilon":["2","-1/2"]}"#
        );
    }

    #[test]
    fn odd_reflection_on_weights() {
        let alpha = Root::new(d(1), e(1));
        // pairing zero: unchanged
        let mut w = Weight::zero();
        w.set(d(1), int(3));
        w.set(e(1), int(-3));
        assert_eq!(odd_reflect_weight(&w, &alpha).unwrap(), w);
        // pairing nonzero: subtract alpha
        let w = Weight::basis(d(1));
        let r = odd_reflect_weight(&w, &alpha).unwrap();
        assert_eq!(r, Weight::basis(e(1)));
        // zero weight fixed
        assert_eq!(
            odd_reflect_weight(&Weight::zero(), &alpha).unwrap(),
            Weight::zero()
        );
    }

    #[test]
    fn extremal_weight_examples() {
        let lam = Partition::of(&[7, 2, 2, 1, 1]);
        let ctx = HookContext::new(1, 2);
        let w = extremal_weight(&lam, &BorelWord::parse("dee", ctx).unwrap(), ctx).unwrap();
        assert_eq!(w, Weight::from_integer_lists(&[7], &[4, 2]));
        let w = extremal_weight(&lam, &BorelWord::parse("ede", ctx).unwrap(), ctx).unwrap();
        assert_eq!(w, Weight::from_integer_lists(&[6], &[5, 2]));
        let w = extremal_weight(&lam, &BorelWord::parse("eed", ctx).unwrap(), ctx).unwrap();
        assert_eq!(w, Weight::from_integer_lists(&[5], &[5, 3]));
        // standard word gives the natural label
        let (nat, _) = crate::partitions::osp_labels(&lam, ctx).unwrap();
        let w = extremal_weight(&lam, &BorelWord::standard(ctx), ctx).unwrap();
        assert_eq!(w, Weight::from_integer_lists(&nat.delta, &nat.epsilon));
        // non-hook is rejected
        let bad = Partition::of(&[3, 3, 3]);
        assert!(extremal_weight(&bad, &BorelWord::standard(ctx), ctx).is_err());
    }

    /// Block form of the peeling: take whole runs of letters at once.
    fn extremal_weight_blocks(lambda: &Partition, word: &BorelWord) -> Weight {
        let mut out = Weight::zero();
        let mut remaining = lambda.clone();
        let basis = word.ordered_basis();
        let mut pos = 0;
        while pos < basis.len() {
            let is_d = basis[pos].is_delta();
            let mut len = 0;
            while pos + len < basis.len() && basis[pos + len].is_delta() == is_d {
                len += 1;
            }
            if is_d {
                for k in 0..len {
                    out.set(basis[pos + k], int(remaining.part(k + 1) as i64));
                }
                remaining = remaining.tail(len);
            } else {
                let conj = crate::partitions::conjugate(&remaining);
                for k in 0..len {
                    out.set(basis[pos + k], int(conj.part(k + 1) as i64));
                }
                let rest: Vec<u32> = remaining
                    .parts()
                    .iter()
                    .map(|&r| r.saturating_sub(len as u32))
                    .collect();
                remaining = Partition::new(&rest).unwrap();
            }
            pos += len;
        }
        out
    }

    #[test]
    fn extremal_weight_block_cross_check() {
        for (m, n) in [(1, 2), (2, 2)] {
            let ctx = HookContext::new(m, n);
            for word in borel_words(ctx) {
                for dsize in 0..=9u32 {
                    for lam in Partition::all_of_size(dsize) {
                        if !is_hook(&lam, ctx) {
                            continue;
                        }
                        let a = extremal_weight(&lam, &word, ctx).unwrap();
                        let b = extremal_weight_blocks(&lam, &word);
                        assert_eq!(a, b, "lam={lam} word={word}");
                    }
                }
            }
        }
    }

    #[test]
    fn extremal_weight_coefficient_sum_and_monotonicity() {
        let ctx = HookContext::new(2, 2);
        for word in borel_words(ctx) {
            for dsize in 0..=8u32 {
                for lam in Partition::all_of_size(dsize) {
                    if !is_hook(&lam, ctx) {
                        continue;
                    }
                    let w = extremal_weight(&lam, &word, ctx).unwrap();
                    let total: BigRational = w.support().map(|(_, v)| v.clone()).sum();
                    assert_eq!(total, int(lam.size() as i64));
                    let (dc, ec) = w.coefficient_lists(ctx);
                    assert!(dc.windows(2).all(|p| p[0] >= p[1]));
                    assert!(ec.windows(2).all(|p| p[0] >= p[1]));
                }
            }
        }
    }

    #[test]
    fn typicality_gl11() {
        let ctx = HookContext::new(1, 1);
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                let w = Weight::from_integer_lists(&[a], &[b]);
                let (typ, deg) = typicality(&w, ctx).unwrap();
                assert_eq!(typ, a + b != 0, "a={a} b={b}");
                assert_eq!(deg, usize::from(a + b == 0));
            }
        }
        // gl(m|0): always typical
        let (typ, deg) = typicality(&Weight::basis(d(1)), HookContext::new(2, 0)).unwrap();
        assert!(typ && deg == 0);
    }

    #[test]
    fn typicality_degree_matches_rectangle() {
        for m in 1..=3usize {
            for n in 1..=3usize {
                let ctx = HookContext::new(m, n);
                for dsize in 0..=8u32 {
                    for lam in Partition::all_of_size(dsize) {
                        if !is_hook(&lam, ctx) {
                            continue;
                        }
                        let (nat, _) = crate::partitions::osp_labels(&lam, ctx).unwrap();
                        let w = Weight::from_integer_lists(&nat.delta, &nat.epsilon);
                        let (_, deg) = typicality(&w, ctx).unwrap();
                        let rect = crate::partitions::rectangle_atypicality(&lam, ctx).unwrap();
                        assert_eq!(deg, rect, "lam={lam} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn kac_character_gl11() {
        let ctx = HookContext::new(1, 1);
        let vars = VarSet::new(&[("x", 1), ("y", 1)]);
        let w = Weight::from_integer_lists(&[2], &[1]);
        let ch = kac_character(&w, ctx, &vars, 0, 1).unwrap();
        // x^2 y (1 + x^{-1} y)
        let mut expected = LaurentSeries::zero(&vars);
        expected.add_term(&[2, 1], int(1));
        expected.add_term(&[1, 2], int(1));
        assert_eq!(ch, expected);
        let w0 = Weight::zero();
        let ch = kac_character(&w0, ctx, &vars, 0, 1).unwrap();
        let mut expected = LaurentSeries::one(&vars);
        expected.add_term(&[-1, 1], int(1));
        assert_eq!(ch, expected);
        // non-dominant: decreasing violated
        let bad = Weight::from_integer_lists(&[0], &[0]);
        let _ = bad;
        let bad2 = Weight::from_lists(&[rat(1, 2)], &[int(0)]);
        assert!(kac_character(&bad2, ctx, &vars, 0, 1).is_err());
        let bad3 = Weight::from_integer_lists(&[1, 2], &[0, 0]);
        assert!(kac_character(
            &bad3,
            HookContext::new(2, 2),
            &VarSet::new(&[("x", 2), ("y", 2)]),
            0,
            1
        )
        .is_err());
    }

    #[test]
    fn kac_character_typical_equals_hook_schur() {
        // gl(2|1), lambda = (2,1) is typical; the induced and simple
        // characters coincide
        let ctx = HookContext::new(2, 1);
        let vars = VarSet::new(&[("x", 2), ("y", 1)]);
        let lam = Partition::of(&[2, 1]);
        let (nat, _) = crate::partitions::osp_labels(&lam, ctx).unwrap();
        let w = Weight::from_integer_lists(&nat.delta, &nat.epsilon);
        let ch = kac_character(&w, ctx, &vars, 0, 1).unwrap();
        assert_eq!(ch, hook_schur(&lam, &vars, 0, 1).poly);
    }

    #[test]
    fn borel_word_counts() {
        fn binom(a: usize, b: usize) -> usize {
            if b > a {
                return 0;
            }
            let mut r = 1usize;
            for k in 0..b {
                r = r * (a - k) / (k + 1);
            }
            r
        }
        for m in 0..=3usize {
            for n in 0..=3usize {
                let words = borel_words(HookContext::new(m, n));
                assert_eq!(words.len(), binom(m + n, m));
                let set: HashSet<String> = words.iter().map(|w| w.to_string()).collect();
                assert_eq!(set.len(), words.len());
            }
        }
        assert_eq!(borel_words(HookContext::new(1, 2)).len(), 3);
    }

    #[test]
    fn reachable_systems_gl12() {
        let systems = reachable_simple_systems(HookContext::new(1, 2));
        assert_eq!(systems.len(), 6);
        let as_sets: HashSet<BTreeSet<Root>> = systems
            .iter()
            .map(|pi| pi.iter().copied().collect())
            .collect();
        let expect = |a: Root, b: Root| [a, b].into_iter().collect::<BTreeSet<_>>();
        let expected: HashSet<BTreeSet<Root>> = [
            expect(Root::new(d(1), e(1)), Root::new(e(1), e(2))),
            expect(Root::new(e(1), d(1)), Root::new(d(1), e(2))),
            expect(Root::new(e(1), e(2)), Root::new(e(2), d(1))),
            expect(Root::new(d(1), e(2)), Root::new(e(2), e(1))),
            expect(Root::new(e(2), d(1)), Root::new(d(1), e(1))),
            expect(Root::new(e(2), e(1)), Root::new(e(1), d(1))),
        ]
        .into_iter()
        .collect();
        assert_eq!(as_sets, expected);
    }

    #[test]
    fn reachable_systems_count_is_factorial() {
        assert_eq!(reachable_simple_systems(HookContext::new(1, 1)).len(), 2);
        assert_eq!(reachable_simple_systems(HookContext::new(2, 1)).len(), 6);
        assert_eq!(reachable_simple_systems(HookContext::new(2, 2)).len(), 24);
    }

    #[test]
    fn odd_reflection_paths_reproduce_simple_systems() {
        // walking the simple system along any shuffle path lands on the
        // consecutive-difference system of the target shuffled basis
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)] {
            let ctx = HookContext::new(m, n);
            for word in borel_words(ctx) {
                let target = simple_roots(&word.ordered_basis());
                for path in shuffle_paths(&word, ctx) {
                    let mut pi = simple_roots(&standard_basis(ctx));
                    for alpha in &path {
                        pi = odd_reflect_roots(&pi, alpha).unwrap();
                    }
                    let got: BTreeSet<Root> = pi.into_iter().collect();
                    let want: BTreeSet<Root> = target.iter().copied().collect();
                    assert_eq!(got, want, "word={word} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn extremal_matches_reflection_fold() {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let ctx = HookContext::new(m, n);
            for word in borel_words(ctx) {
                let paths = shuffle_paths(&word, ctx);
                assert!(!paths.is_empty());
                for dsize in 0..=8u32 {
                    for lam in Partition::all_of_size(dsize) {
                        if !is_hook(&lam, ctx) {
                            continue;
                        }
                        let direct = extremal_weight(&lam, &word, ctx).unwrap();
                        for path in &paths {
                            let folded = fold_weight_along(&lam, path, ctx).unwrap();
                            assert_eq!(folded, direct, "lam={lam} word={word}");
                        }
                    }
                }
            }
        }
    }
}
