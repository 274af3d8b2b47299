//! Sparse multivariate Laurent polynomials with exact rational coefficients
//! and optional total-degree truncation.
//!
//! Variables come in named families (`x(m)`, `y(n)`, `u(d)`, `z(l)`, ...).
//! A family may be excluded from the degree grading; truncation then only
//! bounds the graded families while the ungraded ones stay Laurent. All
//! coefficients are `BigRational`; a stored coefficient is never zero.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
pub enum PolyError {
    VarSetMismatch,
    /// `geometric_inverse` needs a factor of the form `1 - M` with every
    /// monomial of `M` of strictly positive graded degree.
    NotGeometric(String),
    /// Zero substituted into a variable that occurs with a negative exponent.
    ZeroToNegativePower(String),
    NotDivisible,
    UnknownFamily(String),
    BadJson(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::VarSetMismatch => write!(f, "operands live over different variable sets"),
            PolyError::NotGeometric(m) => write!(f, "factor is not of the form 1 - M: {m}"),
            PolyError::ZeroToNegativePower(v) => {
                write!(f, "zero substituted into negative exponent of {v}")
            }
            PolyError::NotDivisible => write!(f, "exact division failed: not divisible"),
            PolyError::UnknownFamily(name) => write!(f, "unknown variable family {name}"),
            PolyError::BadJson(m) => write!(f, "bad series JSON: {m}"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Ordered collection of variable families. Each variable is addressed
/// either as `(family, index)` or by its flat index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    families: Vec<(String, usize, bool)>, // (name, count, counts toward the degree grading)
    offsets: Vec<usize>,
    total: usize,
}

impl VarSet {
    /// All families graded.
    pub fn new(families: &[(&str, usize)]) -> VarSet {
        Self::new_mixed(
            &families
                .iter()
                .map(|&(n, c)| (n, c, true))
                .collect::<Vec<_>>(),
        )
    }

    /// Families with explicit grading flags; ungraded families are Laurent
    /// directions exempt from truncation.
    pub fn new_mixed(families: &[(&str, usize, bool)]) -> VarSet {
        let mut offsets = Vec::with_capacity(families.len());
        let mut total = 0;
        for &(_, count, _) in families {
            offsets.push(total);
            total += count;
        }
        let names: Vec<&str> = families.iter().map(|f| f.0).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!names[..i].contains(n), "duplicate family name {n}");
        }
        VarSet {
            families: families
                .iter()
                .map(|&(n, c, g)| (n.to_string(), c, g))
                .collect(),
            offsets,
            total,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.total
    }

    pub fn family_index(&self, name: &str) -> Option<usize> {
        self.families.iter().position(|f| f.0 == name)
    }

    pub fn family_size(&self, fam: usize) -> usize {
        self.families[fam].1
    }

    /// Flat index of variable `idx` (0-based) of family `fam`.
    pub fn var(&self, fam: usize, idx: usize) -> usize {
        assert!(idx < self.families[fam].1, "variable index out of range");
        self.offsets[fam] + idx
    }

    pub fn var_name(&self, flat: usize) -> String {
        let fam = self.family_of(flat);
        format!("{}{}", self.families[fam].0, flat - self.offsets[fam] + 1)
    }

    fn family_of(&self, flat: usize) -> usize {
        debug_assert!(flat < self.total);
        let mut fam = 0;
        for (i, &off) in self.offsets.iter().enumerate() {
            if flat >= off {
                fam = i;
            }
        }
        fam
    }

    pub fn is_graded(&self, flat: usize) -> bool {
        self.families[self.family_of(flat)].2
    }

    fn graded_flags(&self) -> Vec<bool> {
        let mut flags = Vec::with_capacity(self.total);
        for &(_, count, graded) in &self.families {
            flags.extend(std::iter::repeat(graded).take(count));
        }
        flags
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

type Mono = Vec<i32>;

/// Sparse Laurent polynomial, optionally truncated: if `cutoff` is set every
/// stored monomial has graded total degree `<= cutoff`, and the series is to
/// be read as exact only up to that degree.
#[derive(Debug, Clone)]
pub struct LaurentSeries {
    vars: VarSet,
    terms: BTreeMap<Mono, BigRational>,
    cutoff: Option<i64>,
}

impl PartialEq for LaurentSeries {
    /// Structural equality of terms; the truncation marker is metadata.
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for LaurentSeries {}

impl LaurentSeries {
    pub fn zero(vars: &VarSet) -> LaurentSeries {
        LaurentSeries {
            vars: vars.clone(),
            terms: BTreeMap::new(),
            cutoff: None,
        }
    }

    pub fn one(vars: &VarSet) -> LaurentSeries {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> LaurentSeries {
        let mut s = Self::zero(vars);
        if !c.is_zero() {
            s.terms.insert(vec![0; vars.num_vars()], c);
        }
        s
    }

    /// The monomial `c * prod v_i^{e_i}`.
    pub fn monomial(vars: &VarSet, exps: &[i32], c: BigRational) -> LaurentSeries {
        assert_eq!(exps.len(), vars.num_vars());
        let mut s = Self::zero(vars);
        if !c.is_zero() {
            s.terms.insert(exps.to_vec(), c);
        }
        s
    }

    /// The single variable with flat index `flat`.
    pub fn variable(vars: &VarSet, flat: usize) -> LaurentSeries {
        let mut e = vec![0; vars.num_vars()];
        e[flat] = 1;
        Self::monomial(vars, &e, BigRational::one())
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn cutoff(&self) -> Option<i64> {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &[i32]) -> BigRational {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.vars.num_vars()])
    }

    /// Graded total degree of a monomial (ungraded families excluded).
    pub fn graded_degree(vars: &VarSet, mono: &[i32]) -> i64 {
        let flags = vars.graded_flags();
        mono.iter()
            .zip(&flags)
            .filter(|(_, &g)| g)
            .map(|(&e, _)| e as i64)
            .sum()
    }

    fn insert_term(&mut self, mono: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        if let Some(cut) = self.cutoff {
            if Self::graded_degree(&self.vars, &mono) > cut {
                return;
            }
        }
        match self.terms.entry(mono) {
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

    pub fn add_term(&mut self, mono: &[i32], c: BigRational) {
        self.insert_term(mono.to_vec(), c);
    }

    /// Drop all monomials of graded degree `> cutoff` and record the bound.
    pub fn truncated(&self, cutoff: i64) -> LaurentSeries {
        let mut out = LaurentSeries {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
            cutoff: Some(match self.cutoff {
                Some(c) => c.min(cutoff),
                None => cutoff,
            }),
        };
        for (m, c) in &self.terms {
            if Self::graded_degree(&self.vars, m) <= out.cutoff.unwrap() {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Forget the truncation marker (the terms are kept as-is).
    pub fn without_cutoff(&self) -> LaurentSeries {
        LaurentSeries {
            vars: self.vars.clone(),
            terms: self.terms.clone(),
            cutoff: None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentSeries {
        if c.is_zero() {
            return LaurentSeries {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
                cutoff: self.cutoff,
            };
        }
        LaurentSeries {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            cutoff: self.cutoff,
        }
    }

    /// Exact product; monomials above `cutoff` (graded degree) are discarded.
    /// The effective bound also honors the operands' own truncations.
    pub fn mul(
        &self,
        other: &LaurentSeries,
        cutoff: Option<i64>,
    ) -> Result<LaurentSeries, PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarSetMismatch);
        }
        let eff = [self.cutoff, other.cutoff, cutoff]
            .into_iter()
            .flatten()
            .min();
        let mut out = LaurentSeries {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
            cutoff: eff,
        };
        let flags = self.vars.graded_flags();
        let degs_b: Vec<(Mono, i64, &BigRational)> = other
            .terms
            .iter()
            .map(|(m, c)| {
                let d: i64 = m
                    .iter()
                    .zip(&flags)
                    .filter(|(_, &g)| g)
                    .map(|(&e, _)| e as i64)
                    .sum();
                (m.clone(), d, c)
            })
            .collect();
        for (ma, ca) in &self.terms {
            let da: i64 = ma
                .iter()
                .zip(&flags)
                .filter(|(_, &g)| g)
                .map(|(&e, _)| e as i64)
                .sum();
            for (mb, db, cb) in &degs_b {
                if let Some(cut) = eff {
                    if da + db > cut {
                        continue;
                    }
                }
                let mono: Mono = ma.iter().zip(mb.iter()).map(|(a, b)| a + b).collect();
                let c = ca * *cb;
                let entry = out.terms.entry(mono).or_insert_with(BigRational::zero);
                *entry += c;
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn pow(&self, k: u32, cutoff: Option<i64>) -> Result<LaurentSeries, PolyError> {
        let mut acc = LaurentSeries::one(&self.vars);
        if let Some(c) = cutoff {
            acc = acc.truncated(c);
        }
        for _ in 0..k {
            acc = acc.mul(self, cutoff)?;
        }
        Ok(acc)
    }

    /// For `factor = 1 - M` with `M` of strictly positive graded degree,
    /// returns `sum_{k>=0} M^k` truncated at `cutoff`.
    pub fn geometric_inverse(
        factor: &LaurentSeries,
        cutoff: i64,
    ) -> Result<LaurentSeries, PolyError> {
        let vars = &factor.vars;
        if !factor.constant_term().is_one() {
            return Err(PolyError::NotGeometric("constant term is not 1".into()));
        }
        let mut m = LaurentSeries::one(vars) - factor.clone();
        for (mono, _) in m.terms.iter() {
            if LaurentSeries::graded_degree(vars, mono) <= 0 {
                return Err(PolyError::NotGeometric(
                    "non-constant part contains a monomial of graded degree <= 0".into(),
                ));
            }
        }
        m = m.truncated(cutoff);
        let mut out = LaurentSeries::one(vars).truncated(cutoff);
        let mut power = LaurentSeries::one(vars).truncated(cutoff);
        loop {
            power = power.mul(&m, Some(cutoff))?;
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out)
    }

    /// Exact evaluation/renaming. Every variable of `self`'s set must be
    /// assigned either a rational value or a variable of the target set.
    pub fn specialize(&self, spec: &Specialization) -> Result<LaurentSeries, PolyError> {
        assert_eq!(spec.map.len(), self.vars.num_vars());
        let mut out = LaurentSeries::zero(&spec.target);
        for (mono, coeff) in &self.terms {
            let mut c = coeff.clone();
            let mut exps = vec![0i32; spec.target.num_vars()];
            for (flat, &e) in mono.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &spec.map[flat] {
                    SpecTarget::Var(t) => exps[*t] += e,
                    SpecTarget::Value(v) => {
                        if v.is_zero() {
                            if e < 0 {
                                return Err(PolyError::ZeroToNegativePower(
                                    self.vars.var_name(flat),
                                ));
                            }
                            c = BigRational::zero();
                            break;
                        }
                        let p = if e > 0 {
                            num::pow::pow(v.clone(), e as usize)
                        } else {
                            num::pow::pow(v.recip(), (-e) as usize)
                        };
                        c *= p;
                    }
                }
            }
            if !c.is_zero() {
                let entry = out.terms.entry(exps).or_insert_with(BigRational::zero);
                *entry += c;
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Exact division: `self = q * divisor` must hold; returns `q`.
    pub fn div_exact(&self, divisor: &LaurentSeries) -> Result<LaurentSeries, PolyError> {
        if self.vars != divisor.vars {
            return Err(PolyError::VarSetMismatch);
        }
        assert!(!divisor.is_zero(), "division by zero series");
        if self.is_zero() {
            return Ok(LaurentSeries::zero(&self.vars));
        }
        let n = self.vars.num_vars();
        // Shift both operands to non-negative exponents; the quotient picks
        // up the difference of the shifts.
        let shift_of = |s: &LaurentSeries| -> Vec<i32> {
            let mut sh = vec![0i32; n];
            for m in s.terms.keys() {
                for (i, &e) in m.iter().enumerate() {
                    sh[i] = sh[i].min(e);
                }
            }
            sh
        };
        let sf = shift_of(self);
        let sg = shift_of(divisor);
        let unshift = |s: &LaurentSeries, sh: &[i32]| -> BTreeMap<Mono, BigRational> {
            s.terms
                .iter()
                .map(|(m, c)| {
                    (
                        m.iter().zip(sh).map(|(e, s)| e - s).collect::<Mono>(),
                        c.clone(),
                    )
                })
                .collect()
        };
        let mut rem = unshift(self, &sf);
        let g = unshift(divisor, &sg);
        // Graded-lex leading term (total degree over all variables, then lex).
        fn lead(terms: &BTreeMap<Mono, BigRational>) -> Option<Mono> {
            terms
                .keys()
                .max_by(|a, b| {
                    let da: i64 = a.iter().map(|&e| e as i64).sum();
                    let db: i64 = b.iter().map(|&e| e as i64).sum();
                    da.cmp(&db).then_with(|| a.cmp(b))
                })
                .cloned()
        }
        let glead = lead(&g).unwrap();
        let gc = g[&glead].clone();
        let mut quot: BTreeMap<Mono, BigRational> = BTreeMap::new();
        while let Some(rlead) = lead(&rem) {
            let qm: Mono = rlead.iter().zip(&glead).map(|(a, b)| a - b).collect();
            if qm.iter().any(|&e| e < 0) {
                return Err(PolyError::NotDivisible);
            }
            let qc = &rem[&rlead] / &gc;
            for (m, c) in &g {
                let tm: Mono = m.iter().zip(&qm).map(|(a, b)| a + b).collect();
                let entry = rem.entry(tm).or_insert_with(BigRational::zero);
                *entry -= c * &qc;
            }
            rem.retain(|_, v| !v.is_zero());
            quot.insert(qm, qc);
        }
        // Undo the shifts: quotient exponents shift by sf - sg.
        let mut out = LaurentSeries::zero(&self.vars);
        for (m, c) in quot {
            let mono: Mono = m
                .iter()
                .enumerate()
                .map(|(i, &e)| e + sf[i] - sg[i])
                .collect();
            out.terms.insert(mono, c);
        }
        Ok(out)
    }

    /// Canonical text form: terms in descending graded-lex order, e.g.
    /// `3*x1^2*y2 - 1/2*u1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut monos: Vec<&Mono> = self.terms.keys().collect();
        monos.sort_by(|a, b| {
            let da = LaurentSeries::graded_degree(&self.vars, a);
            let db = LaurentSeries::graded_degree(&self.vars, b);
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.iter().all(|&e| e == 0) {
                factors.push(render_rational(&abs));
            }
            for (flat, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.vars.var_name(flat);
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut monos: Vec<&Mono> = self.terms.keys().collect();
        monos.sort_by(|a, b| {
            let da = LaurentSeries::graded_degree(&self.vars, a);
            let db = LaurentSeries::graded_degree(&self.vars, b);
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let terms: Vec<SeriesTermJson> = monos
            .iter()
            .map(|m| {
                let c = &self.terms[*m];
                SeriesTermJson {
                    exponents: (*m).clone(),
                    numerator: c.numer().to_string(),
                    denominator: c.denom().to_string(),
                }
            })
            .collect();
        serde_json::to_value(terms).unwrap()
    }

    pub fn from_json(vars: &VarSet, v: &serde_json::Value) -> Result<LaurentSeries, PolyError> {
        let terms: Vec<SeriesTermJson> =
            serde_json::from_value(v.clone()).map_err(|e| PolyError::BadJson(e.to_string()))?;
        let mut out = LaurentSeries::zero(vars);
        for t in terms {
            if t.exponents.len() != vars.num_vars() {
                return Err(PolyError::BadJson("exponent vector length mismatch".into()));
            }
            let n =
                BigInt::from_str(&t.numerator).map_err(|e| PolyError::BadJson(e.to_string()))?;
            let d =
                BigInt::from_str(&t.denominator).map_err(|e| PolyError::BadJson(e.to_string()))?;
            if d.is_zero() {
                return Err(PolyError::BadJson("zero denominator".into()));
            }
            out.add_term(&t.exponents, BigRational::new(n, d));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesTermJson {
    exponents: Vec<i32>,
    numerator: String,
    denominator: String,
}

pub fn render_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, other: &LaurentSeries) -> LaurentSeries {
        assert_eq!(self.vars, other.vars, "variable-set mismatch");
        let mut out = self.clone();
        out.cutoff = [self.cutoff, other.cutoff].into_iter().flatten().min();
        for (m, c) in &other.terms {
            let entry = out.terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, other: &LaurentSeries) -> LaurentSeries {
        self + &(-other)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.scale(&-BigRational::one())
    }
}

impl Add for LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, other: LaurentSeries) -> LaurentSeries {
        &self + &other
    }
}

impl Sub for LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, other: LaurentSeries) -> LaurentSeries {
        &self - &other
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, other: &LaurentSeries) -> LaurentSeries {
        self.mul(other, None).expect("variable-set mismatch")
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

pub enum SpecTarget {
    Value(BigRational),
    /// Flat index in the target variable set.
    Var(usize),
}

/// Total assignment for `specialize`: one target per source variable.
pub struct Specialization {
    pub target: VarSet,
    pub map: Vec<SpecTarget>,
}

impl Specialization {
    /// Send every variable to the constant 1 (principal specialization).
    pub fn all_ones(vars: &VarSet) -> Specialization {
        let target = VarSet::new(&[]);
        Specialization {
            target,
            map: (0..vars.num_vars())
                .map(|_| SpecTarget::Value(BigRational::one()))
                .collect(),
        }
    }

    /// Identity renaming onto the same variable set.
    pub fn identity(vars: &VarSet) -> Specialization {
        Specialization {
            target: vars.clone(),
            map: (0..vars.num_vars()).map(SpecTarget::Var).collect(),
        }
    }

    /// Swap two variables of the same set, fix the rest.
    pub fn swap(vars: &VarSet, a: usize, b: usize) -> Specialization {
        let mut map: Vec<SpecTarget> = (0..vars.num_vars()).map(SpecTarget::Var).collect();
        map[a] = SpecTarget::Var(b);
        map[b] = SpecTarget::Var(a);
        Specialization {
            target: vars.clone(),
            map,
        }
    }
}
