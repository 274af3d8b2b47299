//! Hook semistandard tableaux: enumeration by backtracking, content counts,
//! the distinguished tableau, and the tableau form of the character.
//!
//! A hook tableau on a shape assigns to each box an index that is either
//! delta-type (`1-bar..m-bar`, drawn from the first alphabet) or epsilon-type
//! (`1..n`), with delta-bar entries before all epsilon entries in the total
//! order. Rows and columns weakly increase, delta entries strictly increase
//! down columns, epsilon entries strictly increase along rows.

use crate::partitions::{conjugate, is_hook, HookContext, Partition};
use crate::polyring::{LaurentSeries, VarSet};
use crate::symfunc::{monomial_symmetric, SymError};
use num::BigRational;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

pub const DEFAULT_SIZE_LIMIT: u64 = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum TabError {
    SizeLimit {
        size: u64,
        limit: u64,
    },
    ContentSizeMismatch {
        content: u64,
        shape: u64,
    },
    NonHook {
        lambda: Partition,
        m: usize,
        n: usize,
    },
    Sym(SymError),
}

impl fmt::Display for TabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TabError::SizeLimit { size, limit } => {
                write!(f, "shape size {size} exceeds the enumeration limit {limit}")
            }
            TabError::ContentSizeMismatch { content, shape } => {
                write!(
                    f,
                    "content size {content} does not match shape size {shape}"
                )
            }
            TabError::NonHook { lambda, m, n } => {
                write!(f, "{lambda} is not an ({m}|{n})-hook partition")
            }
            TabError::Sym(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TabError {}

impl From<SymError> for TabError {
    fn from(e: SymError) -> Self {
        TabError::Sym(e)
    }
}

/// Entry of a hook tableau; `D(i)` is the i-th barred (delta) index, `E(j)`
/// the j-th unbarred (epsilon) index. The derived order `D(1) < .. < D(m) <
/// E(1) < .. < E(n)` is the total order on the index set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuperIndex {
    D(u8),
    E(u8),
}

impl SuperIndex {
    pub fn is_delta(&self) -> bool {
        matches!(self, SuperIndex::D(_))
    }
}

impl fmt::Display for SuperIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperIndex::D(i) => write!(f, "d{i}"),
            SuperIndex::E(j) => write!(f, "e{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<SuperIndex>>,
}

/// Pair of compositions `nu | mu`; entries may be any nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Content {
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
}

impl Content {
    pub fn size(&self) -> u64 {
        self.nu
            .iter()
            .chain(self.mu.iter())
            .map(|&v| v as u64)
            .sum()
    }
}

impl HookTableau {
    /// Content `nu | mu` for a context `(m, n)`.
    pub fn content(&self, ctx: HookContext) -> Content {
        let mut nu = vec![0u32; ctx.m];
        let mut mu = vec![0u32; ctx.n];
        for row in &self.rows {
            for &e in row {
                match e {
                    SuperIndex::D(i) => nu[i as usize - 1] += 1,
                    SuperIndex::E(j) => mu[j as usize - 1] += 1,
                }
            }
        }
        Content { nu, mu }
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct TabJson {
            shape: Vec<u32>,
            rows: Vec<Vec<String>>,
        }
        serde_json::to_value(TabJson {
            shape: self.shape.parts().to_vec(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
        })
        .unwrap()
    }
}

fn admissible(up: Option<SuperIndex>, left: Option<SuperIndex>, e: SuperIndex) -> bool {
    if let Some(l) = left {
        if e < l {
            return false;
        }
        if e == l && !e.is_delta() {
            return false; // epsilon entries are strict along rows
        }
    }
    if let Some(u) = up {
        if e < u {
            return false;
        }
        if e == u && e.is_delta() {
            return false; // delta entries are strict down columns
        }
    }
    true
}

/// All hook tableaux of the given shape, enumerated column by column with
/// incremental admissibility checks.
pub fn enumerate(
    lambda: &Partition,
    ctx: HookContext,
    limit: u64,
) -> Result<Vec<HookTableau>, TabError> {
    if lambda.size() > limit {
        return Err(TabError::SizeLimit {
            size: lambda.size(),
            limit,
        });
    }
    let alphabet: Vec<SuperIndex> = (1..=ctx.m as u8)
        .map(SuperIndex::D)
        .chain((1..=ctx.n as u8).map(SuperIndex::E))
        .collect();
    let conj = conjugate(lambda);
    // Visit cells column by column, top to bottom.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for c in 0..lambda.part(1) as usize {
        for r in 0..conj.part(c + 1) as usize {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<Option<SuperIndex>>> = lambda
        .parts()
        .iter()
        .map(|&len| vec![None; len as usize])
        .collect();
    let mut out = Vec::new();
    fn rec(
        cells: &[(usize, usize)],
        k: usize,
        alphabet: &[SuperIndex],
        grid: &mut Vec<Vec<Option<SuperIndex>>>,
        shape: &Partition,
        out: &mut Vec<HookTableau>,
    ) {
        if k == cells.len() {
            out.push(HookTableau {
                shape: shape.clone(),
                rows: grid
                    .iter()
                    .map(|r| r.iter().map(|e| e.unwrap()).collect())
                    .collect(),
            });
            return;
        }
        let (r, c) = cells[k];
        let up = if r > 0 { grid[r - 1][c] } else { None };
        let left = if c > 0 { grid[r][c - 1] } else { None };
        for &e in alphabet {
            if admissible(up, left, e) {
                grid[r][c] = Some(e);
                rec(cells, k + 1, alphabet, grid, shape, out);
                grid[r][c] = None;
            }
        }
    }
    rec(&cells, 0, &alphabet, &mut grid, lambda, &mut out);
    Ok(out)
}

/// Number of hook tableaux of shape `lambda` and content `c`.
pub fn count_content(lambda: &Partition, c: &Content, ctx: HookContext) -> Result<u64, TabError> {
    if c.size() != lambda.size() {
        return Err(TabError::ContentSizeMismatch {
            content: c.size(),
            shape: lambda.size(),
        });
    }
    let all = enumerate(lambda, ctx, DEFAULT_SIZE_LIMIT)?;
    Ok(all.iter().filter(|t| t.content(ctx) == *c).count() as u64)
}

/// The distinguished tableau: row `i <= m` is filled with the i-th barred
/// index; below that, every box in column `c` holds the epsilon index `c`.
pub fn distinguished_tableau(
    lambda: &Partition,
    ctx: HookContext,
) -> Result<HookTableau, TabError> {
    if !is_hook(lambda, ctx) {
        return Err(TabError::NonHook {
            lambda: lambda.clone(),
            m: ctx.m,
            n: ctx.n,
        });
    }
    let mut rows = Vec::new();
    for (r, &len) in lambda.parts().iter().enumerate() {
        if r < ctx.m {
            rows.push(vec![SuperIndex::D(r as u8 + 1); len as usize]);
        } else {
            rows.push((1..=len as u8).map(SuperIndex::E).collect());
        }
    }
    Ok(HookTableau {
        shape: lambda.clone(),
        rows,
    })
}

/// Character as the content-counted sum `sum K_{lambda, nu|mu} m_nu(x) m_mu(y)`
/// over partition contents.
pub fn character_via_tableaux(
    lambda: &Partition,
    ctx: HookContext,
    vars: &VarSet,
    xfam: usize,
    yfam: usize,
) -> Result<LaurentSeries, TabError> {
    if !is_hook(lambda, ctx) {
        return Err(TabError::NonHook {
            lambda: lambda.clone(),
            m: ctx.m,
            n: ctx.n,
        });
    }
    let all = enumerate(lambda, ctx, DEFAULT_SIZE_LIMIT)?;
    let mut counts: BTreeMap<(Vec<u32>, Vec<u32>), u64> = BTreeMap::new();
    for t in &all {
        let c = t.content(ctx);
        let weakly_decreasing = |v: &[u32]| v.windows(2).all(|w| w[0] >= w[1]);
        if weakly_decreasing(&c.nu) && weakly_decreasing(&c.mu) {
            *counts.entry((c.nu, c.mu)).or_insert(0) += 1;
        }
    }
    let mut out = LaurentSeries::zero(vars);
    for ((nu, mu), k) in counts {
        let nu_p = Partition::new(&nu).expect("weakly decreasing");
        let mu_p = Partition::new(&mu).expect("weakly decreasing");
        let term =
            &monomial_symmetric(&nu_p, vars, xfam)? * &monomial_symmetric(&mu_p, vars, yfam)?;
        out = &out + &term.scale(&BigRational::from(num::BigInt::from(k)));
    }
    Ok(out)
}
