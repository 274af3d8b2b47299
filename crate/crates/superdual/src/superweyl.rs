//! The polynomial superalgebra `C[x, eta]` on an `(m|n) x d` grid of
//! generators, with first- and second-order differential operators realizing
//! the two commuting dual-pair actions, the simple-root raising operators,
//! the determinant elements, and explicit joint highest-weight vectors.
//!
//! Generators: `x_a^i` (even) for `1 <= a <= m`, and `eta_b^i` (odd) for
//! `1 <= b <= n`, with `1 <= i <= d` throughout. Odd factors are stored in a
//! canonical sorted order with the reordering sign absorbed into the
//! coefficient, so equality of elements is structural.

use crate::partitions::{conjugate, is_hook, HookContext, Partition};
use num::{BigRational, One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub m: usize,
    pub n: usize,
    pub d: usize,
}

impl Dims {
    pub fn new(m: usize, n: usize, d: usize) -> Dims {
        assert!(n * d <= 64, "eta index space must fit in a 64-bit mask");
        Dims { m, n, d }
    }

    fn x_index(&self, a: usize, i: usize) -> usize {
        assert!((1..=self.m).contains(&a) && (1..=self.d).contains(&i));
        (a - 1) * self.d + (i - 1)
    }

    fn eta_index(&self, b: usize, i: usize) -> usize {
        assert!((1..=self.n).contains(&b) && (1..=self.d).contains(&i));
        (b - 1) * self.d + (i - 1)
    }

    fn x_name(&self, flat: usize) -> String {
        format!("x{}_{}", flat / self.d + 1, flat % self.d + 1)
    }

    fn eta_name(&self, flat: usize) -> String {
        format!("eta{}_{}", flat / self.d + 1, flat % self.d + 1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WeylError {
    DimMismatch,
    IndexOutOfRange(String),
    OddTensorRank {
        d: usize,
    },
    NonHook {
        lambda: Partition,
        m: usize,
        n: usize,
    },
    TooManyRows {
        lambda: Partition,
        d: usize,
    },
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::DimMismatch => write!(f, "operator and element dimensions differ"),
            WeylError::IndexOutOfRange(s) => write!(f, "index out of range: {s}"),
            WeylError::OddTensorRank { d } => {
                write!(f, "symplectic families need even d, got {d}")
            }
            WeylError::NonHook { lambda, m, n } => {
                write!(f, "{lambda} is not an ({m}|{n})-hook partition")
            }
            WeylError::TooManyRows { lambda, d } => {
                write!(f, "{lambda} has more than d = {d} rows")
            }
        }
    }
}

impl std::error::Error for WeylError {}

type XExp = Vec<u32>;
type EtaMask = u64;

/// Element of the polynomial superalgebra with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperElement {
    dims: Dims,
    terms: BTreeMap<(XExp, EtaMask), BigRational>,
}

fn mask_sign_product(left: EtaMask, right: EtaMask) -> Option<i32> {
    if left & right != 0 {
        return None; // repeated odd generator
    }
    // inversions: pairs (a in left, b in right) with a > b
    let mut inv = 0u32;
    let mut r = right;
    while r != 0 {
        let b = r.trailing_zeros();
        let above = left >> (b + 1).min(63);
        let above = if b >= 63 { 0 } else { above };
        inv += above.count_ones();
        r &= r - 1;
    }
    Some(if inv % 2 == 0 { 1 } else { -1 })
}

impl SuperElement {
    pub fn zero(dims: Dims) -> SuperElement {
        SuperElement {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dims: Dims) -> SuperElement {
        Self::scalar(dims, BigRational::one())
    }

    pub fn scalar(dims: Dims, c: BigRational) -> SuperElement {
        let mut s = Self::zero(dims);
        if !c.is_zero() {
            s.terms.insert((vec![0; dims.m * dims.d], 0), c);
        }
        s
    }

    /// The generator `x_a^i` (1-based indices).
    pub fn x(dims: Dims, a: usize, i: usize) -> SuperElement {
        let mut e = vec![0u32; dims.m * dims.d];
        e[dims.x_index(a, i)] = 1;
        let mut s = Self::zero(dims);
        s.terms.insert((e, 0), BigRational::one());
        s
    }

    /// The generator `eta_b^i` (1-based indices).
    pub fn eta(dims: Dims, b: usize, i: usize) -> SuperElement {
        let mut s = Self::zero(dims);
        s.terms.insert(
            (vec![0; dims.m * dims.d], 1 << dims.eta_index(b, i)),
            BigRational::one(),
        );
        s
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, key: (XExp, EtaMask), c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add(&self, other: &SuperElement) -> SuperElement {
        assert_eq!(self.dims, other.dims);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SuperElement) -> SuperElement {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> SuperElement {
        if c.is_zero() {
            return Self::zero(self.dims);
        }
        SuperElement {
            dims: self.dims,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Supercommutative product with sign bookkeeping on the odd factors.
    pub fn mul(&self, other: &SuperElement) -> SuperElement {
        assert_eq!(self.dims, other.dims);
        let mut out = Self::zero(self.dims);
        for ((xa, ea), ca) in &self.terms {
            for ((xb, eb), cb) in &other.terms {
                let Some(sign) = mask_sign_product(*ea, *eb) else {
                    continue;
                };
                let xs: XExp = xa.iter().zip(xb).map(|(p, q)| p + q).collect();
                let c = ca * cb * BigRational::from(num::BigInt::from(sign));
                out.add_term((xs, ea | eb), c);
            }
        }
        out
    }

    /// Total degree: x-degree plus number of odd factors, maximized over terms.
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|(x, e)| x.iter().sum::<u32>() + e.count_ones())
            .max()
            .unwrap_or(0)
    }

    pub fn render(&self) -> String {
        use num::Signed;
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((x, e), c)) in self.terms.iter().enumerate() {
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
            let trivial = x.iter().all(|&v| v == 0) && *e == 0;
            if !abs.is_one() || trivial {
                factors.push(crate::polyring::render_rational(&abs));
            }
            for (flat, &exp) in x.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = self.dims.x_name(flat);
                if exp == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{exp}"));
                }
            }
            let mut mask = *e;
            while mask != 0 {
                let bit = mask.trailing_zeros() as usize;
                factors.push(self.dims.eta_name(bit));
                mask &= mask - 1;
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A generator slot, either even or odd, by flat index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    X(usize),
    Eta(usize),
}

/// One summand of a differential operator: coefficient times a monomial
/// multiplier times a product of derivations (applied right to left).
#[derive(Debug, Clone)]
struct OpTerm {
    coeff: BigRational,
    mult_x: XExp,
    mult_eta: EtaMask,
    derivs: Vec<Gen>,
}

impl OpTerm {
    fn parity(&self) -> u32 {
        let deta = self
            .derivs
            .iter()
            .filter(|g| matches!(g, Gen::Eta(_)))
            .count() as u32;
        (self.mult_eta.count_ones() + deta) % 2
    }
}

/// Finite sum of monomial-times-derivation terms of uniform parity.
#[derive(Debug, Clone)]
pub struct DiffOperator {
    pub label: String,
    dims: Dims,
    terms: Vec<OpTerm>,
    parity: u32,
}

impl DiffOperator {
    fn new(label: impl Into<String>, dims: Dims, terms: Vec<OpTerm>) -> DiffOperator {
        let parity = terms.first().map(|t| t.parity()).unwrap_or(0);
        for t in &terms {
            assert_eq!(t.parity(), parity, "mixed-parity operator");
        }
        DiffOperator {
            label: label.into(),
            dims,
            terms,
            parity,
        }
    }

    pub fn parity(&self) -> u32 {
        self.parity
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Scalar multiple of the identity (degree-zero multiplication term).
    fn scalar_term(c: BigRational, dims: Dims) -> OpTerm {
        OpTerm {
            coeff: c,
            mult_x: vec![0; dims.m * dims.d],
            mult_eta: 0,
            derivs: vec![],
        }
    }

    fn mono_deriv(dims: Dims, coeff: BigRational, mult: &[Gen], derivs: &[Gen]) -> OpTerm {
        let mut mult_x = vec![0u32; dims.m * dims.d];
        let mut mult_eta: EtaMask = 0;
        // multiplier monomial built left to right; for eta factors the
        // canonical-order sign is tracked here
        let mut sign = 1i32;
        for g in mult {
            match g {
                Gen::X(f) => mult_x[*f] += 1,
                Gen::Eta(f) => {
                    let bit = 1u64 << *f;
                    assert_eq!(mult_eta & bit, 0, "repeated odd multiplier");
                    let s = mask_sign_product(mult_eta, bit).unwrap();
                    sign *= s;
                    mult_eta |= bit;
                }
            }
        }
        OpTerm {
            coeff: coeff * BigRational::from(num::BigInt::from(sign)),
            mult_x,
            mult_eta,
            derivs: derivs.to_vec(),
        }
    }

    /// Apply to an element, with super-Leibniz signs for the odd derivations.
    pub fn apply(&self, v: &SuperElement) -> Result<SuperElement, WeylError> {
        if self.dims != v.dims {
            return Err(WeylError::DimMismatch);
        }
        let mut out = SuperElement::zero(self.dims);
        for term in &self.terms {
            let mut cur = v.clone();
            for g in term.derivs.iter().rev() {
                cur = derive(&cur, *g);
                if cur.is_zero() {
                    break;
                }
            }
            if cur.is_zero() {
                continue;
            }
            // multiply on the left by the monomial
            for ((x, e), c) in cur.terms {
                let Some(sign) = mask_sign_product(term.mult_eta, e) else {
                    continue;
                };
                let xs: XExp = term.mult_x.iter().zip(&x).map(|(p, q)| p + q).collect();
                let coeff = &term.coeff * c * BigRational::from(num::BigInt::from(sign));
                out.add_term((xs, term.mult_eta | e), coeff);
            }
        }
        Ok(out)
    }

    /// `[A, B] = AB - (-1)^{|A||B|} BA` evaluated on an element.
    pub fn supercommutator_on(
        &self,
        other: &DiffOperator,
        v: &SuperElement,
    ) -> Result<SuperElement, WeylError> {
        let ab = self.apply(&other.apply(v)?)?;
        let ba = other.apply(&self.apply(v)?)?;
        let sign = if self.parity * other.parity % 2 == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        Ok(ab.sub(&ba.scale(&sign)))
    }
}

fn derive(v: &SuperElement, g: Gen) -> SuperElement {
    let mut out = SuperElement::zero(v.dims);
    for ((x, e), c) in &v.terms {
        match g {
            Gen::X(f) => {
                let exp = x[f];
                if exp == 0 {
                    continue;
                }
                let mut nx = x.clone();
                nx[f] = exp - 1;
                out.add_term((nx, *e), c * BigRational::from(num::BigInt::from(exp)));
            }
            Gen::Eta(f) => {
                let bit = 1u64 << f;
                if e & bit == 0 {
                    continue;
                }
                let below = (*e & (bit - 1)).count_ones();
                let sign = if below % 2 == 0 { 1 } else { -1 };
                out.add_term(
                    (x.clone(), e & !bit),
                    c * BigRational::from(num::BigInt::from(sign)),
                );
            }
        }
    }
    out
}

/// Which operator family of the two dual pictures to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `E^{ii'}`: the general-linear action on the tensor-slot side.
    GlD,
    /// The `(m|n)`-side action, unshifted diagonals.
    GlMn,
    /// The `(m|n)`-side action with `+d/2` on even and `-d/2` on odd diagonals.
    GlMnShifted,
    /// The extra multiplication (`I`) and double-derivation (`Delta`)
    /// operators completing the orthosymplectic family; `d` must be even.
    OspExtra,
    /// A basis of the symplectic subalgebra of the slot side, pairing slot
    /// `j` with `d+1-j`.
    SpD,
}

/// The listed operator family for the given dimensions.
pub fn dual_pair_generators(kind: FamilyKind, dims: Dims) -> Result<Vec<DiffOperator>, WeylError> {
    let Dims { m, n, d } = dims;
    let mut out = Vec::new();
    match kind {
        FamilyKind::GlD => {
            for i in 1..=d {
                for ip in 1..=d {
                    out.push(gl_d_op(dims, i, ip));
                }
            }
        }
        FamilyKind::GlMn | FamilyKind::GlMnShifted => {
            let shifted = kind == FamilyKind::GlMnShifted;
            let half_d = BigRational::new((d as i64).into(), 2.into());
            for s in 1..=m {
                for sp in 1..=m {
                    let mut terms: Vec<OpTerm> = (1..=d)
                        .map(|j| {
                            DiffOperator::mono_deriv(
                                dims,
                                BigRational::one(),
                                &[Gen::X(dims.x_index(s, j))],
                                &[Gen::X(dims.x_index(sp, j))],
                            )
                        })
                        .collect();
                    if shifted && s == sp {
                        terms.push(DiffOperator::scalar_term(half_d.clone(), dims));
                    }
                    out.push(DiffOperator::new(format!("E^xx_{s}{sp}"), dims, terms));
                }
            }
            for s in 1..=m {
                for k in 1..=n {
                    let terms: Vec<OpTerm> = (1..=d)
                        .map(|j| {
                            DiffOperator::mono_deriv(
                                dims,
                                BigRational::one(),
                                &[Gen::X(dims.x_index(s, j))],
                                &[Gen::Eta(dims.eta_index(k, j))],
                            )
                        })
                        .collect();
                    out.push(DiffOperator::new(format!("E^xeta_{s}{k}"), dims, terms));
                    let terms: Vec<OpTerm> = (1..=d)
                        .map(|j| {
                            DiffOperator::mono_deriv(
                                dims,
                                BigRational::one(),
                                &[Gen::Eta(dims.eta_index(k, j))],
                                &[Gen::X(dims.x_index(s, j))],
                            )
                        })
                        .collect();
                    out.push(DiffOperator::new(format!("E^etax_{k}{s}"), dims, terms));
                }
            }
            for t in 1..=n {
                for k in 1..=n {
                    let mut terms: Vec<OpTerm> = (1..=d)
                        .map(|j| {
                            DiffOperator::mono_deriv(
                                dims,
                                BigRational::one(),
                                &[Gen::Eta(dims.eta_index(t, j))],
                                &[Gen::Eta(dims.eta_index(k, j))],
                            )
                        })
                        .collect();
                    if shifted && t == k {
                        terms.push(DiffOperator::scalar_term(-half_d.clone(), dims));
                    }
                    out.push(DiffOperator::new(format!("E^etaeta_{t}{k}"), dims, terms));
                }
            }
        }
        FamilyKind::OspExtra => {
            if d % 2 != 0 {
                return Err(WeylError::OddTensorRank { d });
            }
            let half = d / 2;
            let one = BigRational::one;
            // I^xx and Delta^xx for i < s
            for i in 1..=m {
                for s in (i + 1)..=m {
                    let mut iterms = Vec::new();
                    let mut dterms = Vec::new();
                    for j in 1..=half {
                        let (ij, isj) = (dims.x_index(i, j), dims.x_index(s, d + 1 - j));
                        let (ijb, isjb) = (dims.x_index(i, d + 1 - j), dims.x_index(s, j));
                        iterms.push(DiffOperator::mono_deriv(
                            dims,
                            one(),
                            &[Gen::X(ij), Gen::X(isj)],
                            &[],
                        ));
                        iterms.push(DiffOperator::mono_deriv(
                            dims,
                            -one(),
                            &[Gen::X(ijb), Gen::X(isjb)],
                            &[],
                        ));
                        dterms.push(DiffOperator::mono_deriv(
                            dims,
                            one(),
                            &[],
                            &[Gen::X(ij), Gen::X(isj)],
                        ));
                        dterms.push(DiffOperator::mono_deriv(
                            dims,
                            -one(),
                            &[],
                            &[Gen::X(ijb), Gen::X(isjb)],
                        ));
                    }
                    out.push(DiffOperator::new(format!("I^xx_{i}{s}"), dims, iterms));
                    out.push(DiffOperator::new(format!("Delta^xx_{i}{s}"), dims, dterms));
                }
            }
            // I^xeta and Delta^xeta for all (i, k); like every other member
            // of the family, the multiplication operator pairs slot j with
            // slot d+1-j (the double-centralizer property fails otherwise)
            for i in 1..=m {
                for k in 1..=n {
                    let mut iterms = Vec::new();
                    let mut dterms = Vec::new();
                    for j in 1..=half {
                        let (xj, ej) = (dims.x_index(i, j), dims.eta_index(k, j));
                        let (xjb, ejb) = (dims.x_index(i, d + 1 - j), dims.eta_index(k, d + 1 - j));
                        iterms.push(DiffOperator::mono_deriv(
                            dims,
                            one(),
                            &[Gen::X(xj), Gen::Eta(ejb)],
                            &[],
                        ));
                        iterms.push(DiffOperator::mono_deriv(
                            dims,
                            -one(),
                            &[Gen::X(xjb), Gen::Eta(ej)],
                            &[],
                        ));
                        dterms.push(DiffOperator::mono_deriv(
                            dims,
                            one(),
                            &[],
                            &[Gen::X(xj), Gen::Eta(ejb)],
                        ));
                        dterms.push(DiffOperator::mono_deriv(
                            dims,
                            -one(),
                            &[],
                            &[Gen::X(xjb), Gen::Eta(ej)],
                        ));
                    }
                    out.push(DiffOperator::new(format!("I^xeta_{i}{k}"), dims, iterms));
                    out.push(DiffOperator::new(
                        format!("Delta^xeta_{i}{k}"),
                        dims,
                        dterms,
                    ));
                }
            }
            // I^etaeta and Delta^etaeta for k <= t
            for k in 1..=n {
                for t in k..=n {
                    let mut iterms = Vec::new();
                    let mut dterms = Vec::new();
                    for j in 1..=half {
                        let (ej, etj) = (dims.eta_index(k, j), dims.eta_index(t, d + 1 - j));
                        let (ejb, etjb) = (dims.eta_index(k, d + 1 - j), dims.eta_index(t, j));
                        iterms.push(DiffOperator::mono_deriv(
                            dims,
                            one(),
                            &[Gen::Eta(ej), Gen::Eta(etj)],
                            &[],
                        ));
                        iterms.push(DiffOperator::mono_deriv(
                            dims,
                            -one(),
                            &[Gen::Eta(ejb), Gen::Eta(etjb)],
                            &[],
                        ));
                        dterms.push(DiffOperator::mono_deriv(
                            dims,
                            one(),
                            &[],
                            &[Gen::Eta(ej), Gen::Eta(etj)],
                        ));
                        dterms.push(DiffOperator::mono_deriv(
                            dims,
                            -one(),
                            &[],
                            &[Gen::Eta(ejb), Gen::Eta(etjb)],
                        ));
                    }
                    out.push(DiffOperator::new(format!("I^etaeta_{k}{t}"), dims, iterms));
                    out.push(DiffOperator::new(
                        format!("Delta^etaeta_{k}{t}"),
                        dims,
                        dterms,
                    ));
                }
            }
        }
        FamilyKind::SpD => {
            if d % 2 != 0 {
                return Err(WeylError::OddTensorRank { d });
            }
            let half = d / 2;
            let zeta = |i: usize| if i <= half { 1i64 } else { -1 };
            let mut seen: Vec<(usize, usize)> = Vec::new();
            for i in 1..=d {
                for j in 1..=d {
                    let partner = (d + 1 - j, d + 1 - i);
                    if seen.contains(&(i, j)) {
                        continue;
                    }
                    seen.push((i, j));
                    seen.push(partner);
                    // E_{ij} - zeta_i zeta_j E_{d+1-j, d+1-i}
                    let mut terms = gl_d_op(dims, i, j).terms;
                    if (i, j) != partner {
                        let c = BigRational::from(num::BigInt::from(-zeta(i) * zeta(j)));
                        for t in gl_d_op(dims, partner.0, partner.1).terms {
                            terms.push(OpTerm {
                                coeff: t.coeff * &c,
                                ..t
                            });
                        }
                    } else {
                        let c = BigRational::from(num::BigInt::from(1 - zeta(i) * zeta(j)));
                        if c.is_zero() {
                            continue;
                        }
                        // diagonal orbit: (1 - zeta_i zeta_j) E_{ij}; keep E_{ij}
                        // with the combined coefficient
                        terms = terms
                            .into_iter()
                            .map(|t| OpTerm {
                                coeff: t.coeff * &c,
                                ..t
                            })
                            .collect();
                    }
                    if m == 0 && n == 0 {
                        continue;
                    }
                    out.push(DiffOperator::new(format!("Sp_{i}{j}"), dims, terms));
                }
            }
        }
    }
    Ok(out)
}

fn gl_d_op(dims: Dims, i: usize, ip: usize) -> DiffOperator {
    let mut terms = Vec::new();
    for a in 1..=dims.m {
        terms.push(DiffOperator::mono_deriv(
            dims,
            BigRational::one(),
            &[Gen::X(dims.x_index(a, i))],
            &[Gen::X(dims.x_index(a, ip))],
        ));
    }
    for b in 1..=dims.n {
        terms.push(DiffOperator::mono_deriv(
            dims,
            BigRational::one(),
            &[Gen::Eta(dims.eta_index(b, i))],
            &[Gen::Eta(dims.eta_index(b, ip))],
        ));
    }
    DiffOperator::new(format!("E^{i}{ip}"), dims, terms)
}

/// Simple-root raising operators for both families: `d - 1` for the slot
/// side and `m + n - 1` for the `(m|n)` side (including the odd raiser when
/// both families are nonempty).
pub fn raising_operators(dims: Dims) -> (Vec<DiffOperator>, Vec<DiffOperator>) {
    let Dims { m, n, d } = dims;
    let mut gl_d = Vec::new();
    for i in 2..=d {
        let mut terms = Vec::new();
        for a in 1..=m {
            terms.push(DiffOperator::mono_deriv(
                dims,
                BigRational::one(),
                &[Gen::X(dims.x_index(a, i - 1))],
                &[Gen::X(dims.x_index(a, i))],
            ));
        }
        for b in 1..=n {
            terms.push(DiffOperator::mono_deriv(
                dims,
                BigRational::one(),
                &[Gen::Eta(dims.eta_index(b, i - 1))],
                &[Gen::Eta(dims.eta_index(b, i))],
            ));
        }
        gl_d.push(DiffOperator::new(format!("e^{}{}", i - 1, i), dims, terms));
    }
    let mut gl_mn = Vec::new();
    for s in 2..=m {
        let terms: Vec<OpTerm> = (1..=d)
            .map(|j| {
                DiffOperator::mono_deriv(
                    dims,
                    BigRational::one(),
                    &[Gen::X(dims.x_index(s - 1, j))],
                    &[Gen::X(dims.x_index(s, j))],
                )
            })
            .collect();
        gl_mn.push(DiffOperator::new(
            format!("e^x_{}{}", s - 1, s),
            dims,
            terms,
        ));
    }
    if m >= 1 && n >= 1 {
        let terms: Vec<OpTerm> = (1..=d)
            .map(|j| {
                DiffOperator::mono_deriv(
                    dims,
                    BigRational::one(),
                    &[Gen::X(dims.x_index(m, j))],
                    &[Gen::Eta(dims.eta_index(1, j))],
                )
            })
            .collect();
        gl_mn.push(DiffOperator::new("e^odd", dims, terms));
    }
    for k in 2..=n {
        let terms: Vec<OpTerm> = (1..=d)
            .map(|j| {
                DiffOperator::mono_deriv(
                    dims,
                    BigRational::one(),
                    &[Gen::Eta(dims.eta_index(k - 1, j))],
                    &[Gen::Eta(dims.eta_index(k, j))],
                )
            })
            .collect();
        gl_mn.push(DiffOperator::new(
            format!("e^eta_{}{}", k - 1, k),
            dims,
            terms,
        ));
    }
    (gl_d, gl_mn)
}

/// The `r x r` determinant in the `x`-variables with entry `(i, a) = x_a^i`.
pub fn diamond(r: usize, dims: Dims) -> Result<SuperElement, WeylError> {
    if r < 1 || r > dims.m.min(dims.d) {
        return Err(WeylError::IndexOutOfRange(format!(
            "diamond needs 1 <= r <= min(m, d), got r = {r}"
        )));
    }
    let mut out = SuperElement::zero(dims);
    for (perm, odd) in permutations_with_sign(r) {
        let mut term = SuperElement::one(dims);
        for i in 1..=r {
            term = term.mul(&SuperElement::x(dims, perm[i - 1] + 1, i));
        }
        out = out.add(&term.scale(&sign_rat(odd)));
    }
    Ok(out)
}

/// Row determinant of the matrix whose first `m` rows are `x_s^j` and whose
/// remaining `r - m` rows all equal `(eta_k^1, ..., eta_k^r)`, with the
/// factors multiplied in row order.
pub fn diamond_kr(k: usize, r: usize, dims: Dims) -> Result<SuperElement, WeylError> {
    if !(dims.m..=dims.d).contains(&r) || k < 1 || k > dims.n {
        return Err(WeylError::IndexOutOfRange(format!(
            "diamond_kr needs m <= r <= d and 1 <= k <= n, got (k, r) = ({k}, {r})"
        )));
    }
    let mut out = SuperElement::zero(dims);
    for (perm, odd) in permutations_with_sign(r) {
        let mut term = SuperElement::one(dims);
        for row in 1..=r {
            let col = perm[row - 1] + 1;
            let factor = if row <= dims.m {
                SuperElement::x(dims, row, col)
            } else {
                SuperElement::eta(dims, k, col)
            };
            term = term.mul(&factor);
            if term.is_zero() {
                break;
            }
        }
        out = out.add(&term.scale(&sign_rat(odd)));
    }
    Ok(out)
}

fn sign_rat(odd: bool) -> BigRational {
    if odd {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

fn permutations_with_sign(r: usize) -> Vec<(Vec<usize>, bool)> {
    let mut perms = Vec::new();
    let mut idx: Vec<usize> = (0..r).collect();
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
    heap(r, &mut idx, &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let mut inv = 0;
            for i in 0..p.len() {
                for j in (i + 1)..p.len() {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            (p, inv % 2 == 1)
        })
        .collect()
}

/// Joint highest-weight vector for the hook partition `lambda`: the product
/// of row determinants over the columns of height greater than `m`, followed
/// by plain determinants over the remaining columns.
pub fn highest_weight_vector(lambda: &Partition, dims: Dims) -> Result<SuperElement, WeylError> {
    if lambda.len() > dims.d {
        return Err(WeylError::TooManyRows {
            lambda: lambda.clone(),
            d: dims.d,
        });
    }
    let ctx = HookContext::new(dims.m, dims.n);
    if !is_hook(lambda, ctx) {
        return Err(WeylError::NonHook {
            lambda: lambda.clone(),
            m: dims.m,
            n: dims.n,
        });
    }
    let conj = conjugate(lambda);
    let mut r = 0usize;
    while conj.part(r + 1) as usize > dims.m {
        r += 1;
    }
    let mut out = SuperElement::one(dims);
    for k in 1..=r {
        out = out.mul(&diamond_kr(k, conj.part(k) as usize, dims)?);
    }
    for j in (r + 1)..=lambda.part(1) as usize {
        out = out.mul(&diamond(conj.part(j) as usize, dims)?);
    }
    Ok(out)
}

/// All monomials of total degree at most `max_degree`.
pub fn monomials_up_to(dims: Dims, max_degree: u32) -> Vec<SuperElement> {
    let nx = dims.m * dims.d;
    let neta = dims.n * dims.d;
    let mut xparts: Vec<XExp> = vec![];
    let mut cur = vec![0u32; nx];
    fn rec(pos: usize, left: u32, cur: &mut XExp, out: &mut Vec<XExp>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, max_degree, &mut cur, &mut xparts);
    let mut out = Vec::new();
    for x in &xparts {
        let xdeg: u32 = x.iter().sum();
        for mask in 0u64..(1 << neta) {
            if xdeg + mask.count_ones() > max_degree {
                continue;
            }
            let mut s = SuperElement::zero(dims);
            s.terms.insert((x.clone(), mask), BigRational::one());
            out.push(s);
        }
    }
    out
}

/// True when every pair from the two families supercommutes on all monomials
/// of total degree at most `max_degree`.
pub fn families_supercommute(
    a: &[DiffOperator],
    b: &[DiffOperator],
    dims: Dims,
    max_degree: u32,
) -> Result<bool, WeylError> {
    let basis = monomials_up_to(dims, max_degree);
    for opa in a {
        for opb in b {
            for v in &basis {
                if !opa.supercommutator_on(opb, v)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Outcome of checking one highest-weight vector.
#[derive(Debug, Clone, serde::Serialize)]
pub struct HwvCheck {
    pub lambda: String,
    pub annihilated: bool,
    pub slot_weight_ok: bool,
    pub side_weight_ok: bool,
    pub shifted_weight_ok: bool,
    pub harmonic_checked: bool,
    pub harmonic: bool,
}

impl HwvCheck {
    pub fn passed(&self) -> bool {
        self.annihilated
            && self.slot_weight_ok
            && self.side_weight_ok
            && self.shifted_weight_ok
            && (!self.harmonic_checked || self.harmonic)
    }
}

/// For every hook partition with at most `d` rows and size at most
/// `max_size`: the vector is killed by all raising operators of both
/// families, is a simultaneous diagonal eigenvector with the partition and
/// its hook label as weights (label plus `d/2` per family sign under the
/// shifted action), and is killed by the double-derivation operators when
/// those exist (`d` even) and the theorem applies (at most `d/2` rows).
pub fn verify_highest_weight_vectors(
    dims: Dims,
    max_size: u32,
) -> Result<Vec<HwvCheck>, WeylError> {
    let ctx = HookContext::new(dims.m, dims.n);
    let (gd_raise, gmn_raise) = raising_operators(dims);
    let gld = dual_pair_generators(FamilyKind::GlD, dims)?;
    let glmn = dual_pair_generators(FamilyKind::GlMn, dims)?;
    let shifted = dual_pair_generators(FamilyKind::GlMnShifted, dims)?;
    let deltas: Vec<DiffOperator> = if dims.d % 2 == 0 {
        dual_pair_generators(FamilyKind::OspExtra, dims)?
            .into_iter()
            .filter(|o| o.label.starts_with("Delta"))
            .collect()
    } else {
        Vec::new()
    };
    let half_d = BigRational::new((dims.d as i64).into(), 2.into());
    let mut out = Vec::new();
    for lam in Partition::all_up_to_size(max_size) {
        if lam.len() > dims.d || !is_hook(&lam, ctx) || lam.is_empty() {
            continue;
        }
        let v = highest_weight_vector(&lam, dims)?;
        let annihilated = gd_raise
            .iter()
            .chain(&gmn_raise)
            .map(|op| op.apply(&v).map(|w| w.is_zero()))
            .collect::<Result<Vec<bool>, _>>()?
            .into_iter()
            .all(|b| b);
        let int_of = |v: i64| BigRational::from(num::BigInt::from(v));
        let mut slot_ok = true;
        for i in 1..=dims.d {
            let op = gld
                .iter()
                .find(|o| o.label == format!("E^{i}{i}"))
                .expect("diagonal present");
            slot_ok &= eigenvalue(op, &v)? == Some(int_of(lam.part(i) as i64));
        }
        let (nat, _) = crate::partitions::osp_labels(&lam, ctx).expect("hook");
        let mut side_ok = true;
        let mut shifted_ok = true;
        for s in 1..=dims.m {
            let label = format!("E^xx_{s}{s}");
            let want = int_of(nat.delta[s - 1]);
            let op = glmn.iter().find(|o| o.label == label).unwrap();
            side_ok &= eigenvalue(op, &v)? == Some(want.clone());
            let op = shifted.iter().find(|o| o.label == label).unwrap();
            shifted_ok &= eigenvalue(op, &v)? == Some(&want + &half_d);
        }
        for k in 1..=dims.n {
            let label = format!("E^etaeta_{k}{k}");
            let want = int_of(nat.epsilon[k - 1]);
            let op = glmn.iter().find(|o| o.label == label).unwrap();
            side_ok &= eigenvalue(op, &v)? == Some(want.clone());
            let op = shifted.iter().find(|o| o.label == label).unwrap();
            shifted_ok &= eigenvalue(op, &v)? == Some(&want - &half_d);
        }
        let harmonic_checked = dims.d % 2 == 0 && lam.len() <= dims.d / 2;
        let harmonic = if harmonic_checked {
            deltas
                .iter()
                .map(|op| op.apply(&v).map(|w| w.is_zero()))
                .collect::<Result<Vec<bool>, _>>()?
                .into_iter()
                .all(|b| b)
        } else {
            true
        };
        out.push(HwvCheck {
            lambda: lam.to_string(),
            annihilated,
            slot_weight_ok: slot_ok,
            side_weight_ok: side_ok,
            shifted_weight_ok: shifted_ok,
            harmonic_checked,
            harmonic,
        });
    }
    Ok(out)
}

/// If `op(v) = c v` for a scalar `c`, return it.
pub fn eigenvalue(op: &DiffOperator, v: &SuperElement) -> Result<Option<BigRational>, WeylError> {
    let image = op.apply(v)?;
    if v.is_zero() {
        return Ok(None);
    }
    if image.is_zero() {
        return Ok(Some(BigRational::zero()));
    }
    let (k0, c0) = v.terms.iter().next().unwrap();
    let Some(ci) = image.terms.get(k0) else {
        return Ok(None);
    };
    let ratio = ci / c0;
    if image == v.scale(&ratio) {
        Ok(Some(ratio))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, rat};

    #[test]
    fn eta_signs() {
        let dims = Dims::new(1, 1, 2);
        let e1 = SuperElement::eta(dims, 1, 1);
        let e2 = SuperElement::eta(dims, 1, 2);
        // anticommutativity and square zero
        assert_eq!(e1.mul(&e2), e2.mul(&e1).scale(&int(-1)));
        assert!(e1.mul(&e1).is_zero());
        // derivative examples: d/deta(eta) = 1
        let d1 = derive(&e1, Gen::Eta(0));
        assert_eq!(d1, SuperElement::one(dims));
        // d/deta_1^1 (eta_1^1 eta_1^2) = eta_1^2 ; on the reversed product the
        // stored sign flips
        let prod = e1.mul(&e2);
        assert_eq!(derive(&prod, Gen::Eta(0)), e2);
        let rev = e2.mul(&e1);
        assert_eq!(derive(&rev, Gen::Eta(0)), e2.scale(&int(-1)));
    }

    #[test]
    fn gl_d_action_example() {
        // E^{11} applied to x_1^1 gives x_1^1 back
        let dims = Dims::new(1, 1, 2);
        let e11 = gl_d_op(dims, 1, 1);
        let x = SuperElement::x(dims, 1, 1);
        assert_eq!(e11.apply(&x).unwrap(), x);
        let zero = SuperElement::zero(dims);
        assert!(e11.apply(&zero).unwrap().is_zero());
    }

    #[test]
    fn family_counts() {
        let dims = Dims::new(1, 1, 2);
        assert_eq!(
            dual_pair_generators(FamilyKind::GlD, dims).unwrap().len(),
            4
        );
        assert_eq!(
            dual_pair_generators(FamilyKind::GlMn, dims).unwrap().len(),
            4
        );
        // (1,1,2) extra family: I/Delta^{xeta}, I/Delta^{etaeta}; no xx pairs
        let extra = dual_pair_generators(FamilyKind::OspExtra, dims).unwrap();
        let labels: Vec<&str> = extra.iter().map(|o| o.label.as_str()).collect();
        assert_eq!(
            labels,
            vec![
                "I^xeta_11",
                "Delta^xeta_11",
                "I^etaeta_11",
                "Delta^etaeta_11"
            ]
        );
        // sp(2) has dimension 3
        assert_eq!(
            dual_pair_generators(FamilyKind::SpD, dims).unwrap().len(),
            3
        );
        assert!(dual_pair_generators(FamilyKind::SpD, Dims::new(1, 1, 3)).is_err());
        let (gd, gmn) = raising_operators(Dims::new(2, 1, 3));
        assert_eq!(gd.len(), 2);
        assert_eq!(gmn.len(), 2);
    }

    #[test]
    fn shifted_diagonals() {
        let dims = Dims::new(1, 1, 2);
        let shifted = dual_pair_generators(FamilyKind::GlMnShifted, dims).unwrap();
        let exx = shifted.iter().find(|o| o.label == "E^xx_11").unwrap();
        let eee = shifted.iter().find(|o| o.label == "E^etaeta_11").unwrap();
        let one = SuperElement::one(dims);
        assert_eq!(exx.apply(&one).unwrap(), one.scale(&int(1)));
        assert_eq!(eee.apply(&one).unwrap(), one.scale(&int(-1)));
    }

    #[test]
    fn odd_raiser_example() {
        // m = 1, d = 1: the odd raiser sends eta_1^1 to x_1^1
        let dims = Dims::new(1, 1, 1);
        let (_, gmn) = raising_operators(dims);
        let odd = gmn.iter().find(|o| o.label == "e^odd").unwrap();
        let eta = SuperElement::eta(dims, 1, 1);
        assert_eq!(odd.apply(&eta).unwrap(), SuperElement::x(dims, 1, 1));
    }

    #[test]
    fn diamond_examples() {
        let dims = Dims::new(2, 1, 2);
        assert_eq!(diamond(1, dims).unwrap(), SuperElement::x(dims, 1, 1));
        let d2 = diamond(2, dims).unwrap();
        let expect = SuperElement::x(dims, 1, 1)
            .mul(&SuperElement::x(dims, 2, 2))
            .sub(&SuperElement::x(dims, 2, 1).mul(&SuperElement::x(dims, 1, 2)));
        assert_eq!(d2, expect);
        assert!(diamond(3, dims).is_err());
        // weight under the slot diagonal: (1, 1) for r = 2
        for i in 1..=2 {
            let e = gl_d_op(dims, i, i);
            assert_eq!(eigenvalue(&e, &d2).unwrap(), Some(int(1)));
        }
    }

    #[test]
    fn diamond_kr_examples() {
        // m = r reduces to the plain determinant
        let dims = Dims::new(2, 1, 2);
        assert_eq!(diamond_kr(1, 2, dims).unwrap(), diamond(2, dims).unwrap());
        // m = 0: scalar multiple of eta_k^1 ... eta_k^r
        let dims0 = Dims::new(0, 1, 2);
        let dk = diamond_kr(1, 2, dims0).unwrap();
        let pure = SuperElement::eta(dims0, 1, 1).mul(&SuperElement::eta(dims0, 1, 2));
        assert_eq!(dk, pure.scale(&int(2)));
        // m = 1, r = 2: x-row followed by a repeated eta-row
        let dims1 = Dims::new(1, 1, 2);
        let dk = diamond_kr(1, 2, dims1).unwrap();
        let expect = SuperElement::x(dims1, 1, 1)
            .mul(&SuperElement::eta(dims1, 1, 2))
            .sub(&SuperElement::x(dims1, 1, 2).mul(&SuperElement::eta(dims1, 1, 1)));
        assert_eq!(dk, expect);
        assert!(!dk.is_zero());
        assert!(diamond_kr(2, 2, dims1).is_err());
        assert!(diamond_kr(1, 3, dims1).is_err());
    }

    #[test]
    fn hwv_examples() {
        let dims = Dims::new(1, 1, 2);
        let v = highest_weight_vector(&Partition::of(&[1]), dims).unwrap();
        assert_eq!(v, SuperElement::x(dims, 1, 1));
        let v = highest_weight_vector(&Partition::of(&[1, 1]), dims).unwrap();
        assert_eq!(v, diamond_kr(1, 2, dims).unwrap());
        let v = highest_weight_vector(&Partition::of(&[2]), dims).unwrap();
        let x = SuperElement::x(dims, 1, 1);
        assert_eq!(v, x.mul(&x));
        assert!(highest_weight_vector(&Partition::of(&[1, 1, 1]), dims).is_err());
        assert!(highest_weight_vector(&Partition::of(&[2, 2]), dims).is_err());
    }

    #[test]
    fn commuting_actions_small() {
        for (m, n, d) in [(1, 1, 2), (2, 1, 2), (1, 2, 2)] {
            let dims = Dims::new(m, n, d);
            let gld = dual_pair_generators(FamilyKind::GlD, dims).unwrap();
            let glmn = dual_pair_generators(FamilyKind::GlMn, dims).unwrap();
            assert!(
                families_supercommute(&gld, &glmn, dims, 4).unwrap(),
                "(m,n,d)=({m},{n},{d})"
            );
        }
    }

    #[test]
    fn sp_osp_commutation() {
        let dims = Dims::new(1, 1, 2);
        let sp = dual_pair_generators(FamilyKind::SpD, dims).unwrap();
        let mut osp = dual_pair_generators(FamilyKind::GlMnShifted, dims).unwrap();
        osp.extend(dual_pair_generators(FamilyKind::OspExtra, dims).unwrap());
        assert!(families_supercommute(&sp, &osp, dims, 4).unwrap());
    }

    #[test]
    fn hwv_annihilated_and_weighted() {
        let dims = Dims::new(1, 1, 2);
        let (gd_raise, gmn_raise) = raising_operators(dims);
        for lam in [
            Partition::of(&[1]),
            Partition::of(&[2]),
            Partition::of(&[1, 1]),
            Partition::of(&[2, 1]),
        ] {
            let v = highest_weight_vector(&lam, dims).unwrap();
            assert!(!v.is_zero());
            for op in gd_raise.iter().chain(&gmn_raise) {
                assert!(op.apply(&v).unwrap().is_zero(), "lam={lam} op={}", op.label);
            }
            // slot-side weight is lambda itself
            for i in 1..=2usize {
                let e = gl_d_op(dims, i, i);
                assert_eq!(
                    eigenvalue(&e, &v).unwrap(),
                    Some(int(lam.part(i) as i64)),
                    "lam={lam}"
                );
            }
        }
    }

    #[test]
    fn bracket_closure_in_family_span() {
        // brackets of the shifted + extra family, restricted to low degree,
        // stay inside the family's span of actions
        let dims = Dims::new(1, 1, 2);
        let mut family = dual_pair_generators(FamilyKind::GlMnShifted, dims).unwrap();
        family.extend(dual_pair_generators(FamilyKind::OspExtra, dims).unwrap());
        let domain = monomials_up_to(dims, 3);
        let codomain = monomials_up_to(dims, 5);
        let coords = |v: &SuperElement| -> Vec<BigRational> {
            codomain
                .iter()
                .map(|b| {
                    let key = b.terms.keys().next().unwrap();
                    v.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
                })
                .collect()
        };
        let action_matrix = |op: &DiffOperator| -> Vec<BigRational> {
            domain
                .iter()
                .flat_map(|v| coords(&op.apply(v).unwrap()))
                .collect()
        };
        let span: Vec<Vec<BigRational>> = family.iter().map(action_matrix).collect();
        for a in &family {
            for b in &family {
                let mut bracket = Vec::new();
                for v in &domain {
                    let w = a.supercommutator_on(b, v).unwrap();
                    bracket.extend(coords(&w));
                }
                assert!(
                    crate::ratmat::in_span(&span, &bracket),
                    "[{}, {}] escapes the family span",
                    a.label,
                    b.label
                );
            }
        }
    }

    #[test]
    fn render_canonical_order() {
        let dims = Dims::new(1, 1, 2);
        let v = SuperElement::x(dims, 1, 1)
            .mul(&SuperElement::x(dims, 1, 1))
            .mul(&SuperElement::eta(dims, 1, 1))
            .mul(&SuperElement::eta(dims, 1, 2))
            .scale(&rat(1, 2));
        assert_eq!(v.render(), "1/2*x1_1^2*eta1_1*eta1_2");
    }
}
