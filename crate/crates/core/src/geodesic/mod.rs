//! Chains of transpositions and the sets `Σ_n(k)` of length-`k` prefixes of
//! minimal factorisations of the long cycle `(1 … n)`.
//!
//! A chain `(τ₁, …, τ_k)` belongs to `Σ_n(k)` when its product `γ_k` has
//! norm `k` and lies below `(1 … n)` in the geodesic order. Writing
//! `τ_l = (i_l j_l)` with `i_l < j_l`, the chain is non-decreasing when
//! `i₁ ≤ … ≤ i_k`.

pub mod lemmas;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{parse_cycles, Permutation, Transposition};
use crate::surjection::count_formula;

/// Default upper bound on the number of chains [`enumerate_sigma`] agrees
/// to produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A finite sequence of transpositions of `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ChainRepr", into = "ChainRepr")]
pub struct Chain {
    n: usize,
    steps: Vec<Transposition>,
}

#[derive(Serialize, Deserialize)]
struct ChainRepr {
    n: usize,
    steps: Vec<Transposition>,
}

impl TryFrom<ChainRepr> for Chain {
    type Error = Error;

    fn try_from(r: ChainRepr) -> Result<Self> {
        Chain::new(r.n, r.steps)
    }
}

impl From<Chain> for ChainRepr {
    fn from(c: Chain) -> Self {
        ChainRepr {
            n: c.n,
            steps: c.steps,
        }
    }
}

impl Chain {
    pub fn new(n: usize, steps: Vec<Transposition>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if let Some(t) = steps.iter().find(|t| t.j() > n) {
            return Err(Error::OutOfRange { value: t.j(), n });
        }
        Ok(Chain { n, steps })
    }

    /// Convenience constructor from `(i, j)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let steps = pairs
            .iter()
            .map(|&(a, b)| Transposition::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Chain::new(n, steps)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Chain::new(n, Vec::new())
    }

    /// Steps are known to fit in `{1, …, n}`.
    pub(crate) fn from_trusted(n: usize, steps: Vec<Transposition>) -> Self {
        debug_assert!(steps.iter().all(|t| t.j() <= n));
        Chain { n, steps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Transposition] {
        &self.steps
    }

    /// `(i₁, …, i_k)`.
    pub fn small_entries(&self) -> Vec<usize> {
        self.steps.iter().map(|t| t.i()).collect()
    }

    /// `(j₁, …, j_k)`.
    pub fn large_entries(&self) -> Vec<usize> {
        self.steps.iter().map(|t| t.j()).collect()
    }

    /// `γ_l = τ₁ ⋯ τ_l`; `γ₀` is the identity.
    pub fn intermediate(&self, l: usize) -> Result<Permutation> {
        if l > self.len() {
            return Err(Error::IndexOutOfRange {
                index: l,
                max: self.len(),
            });
        }
        Ok(self.steps[..l]
            .iter()
            .fold(Permutation::identity(self.n), |acc, &t| {
                acc.times_transposition(t)
            }))
    }

    /// `γ_0, γ_1, …, γ_k`.
    pub fn intermediates(&self) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut acc = Permutation::identity(self.n);
        out.push(acc.clone());
        for &t in &self.steps {
            acc = acc.times_transposition(t);
            out.push(acc.clone());
        }
        out
    }

    /// The full product `γ_k`.
    pub fn product(&self) -> Permutation {
        self.intermediate(self.len())
            .expect("full length is in range")
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].i() <= w[1].i())
    }

    pub fn validate(&self) -> ValidityReport {
        let product = self.product();
        let is_geodesic = product.norm() == self.len();
        let is_below = product
            .precedes(&Permutation::long_cycle(self.n))
            .expect("sizes agree");
        ValidityReport {
            is_geodesic,
            is_below,
            is_member: is_geodesic && is_below,
            is_nondecreasing: self.is_nondecreasing(),
        }
    }

    pub fn is_member(&self) -> bool {
        self.validate().is_member
    }

    pub(crate) fn require_member(&self) -> Result<()> {
        if self.is_member() {
            Ok(())
        } else {
            Err(Error::NotMember)
        }
    }

    /// Parses `"(3 8)(5 7)(1 8)(3 7)"`. `"()"` and the empty string give
    /// the empty chain.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let groups = if text.is_empty() {
            Vec::new()
        } else {
            parse_cycles(text)?
        };
        let steps = groups
            .into_iter()
            .map(|g| match g.as_slice() {
                [a, b] => Transposition::new(*a, *b),
                _ => Err(Error::Parse(format!(
                    "expected a pair of labels, found {g:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Chain::new(n, steps)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "()");
        }
        for t in &self.steps {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// The two membership conditions for `Σ_n(k)` and the sortedness flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    /// `|γ_k| = k`.
    pub is_geodesic: bool,
    /// `γ_k ≼ (1 … n)`.
    pub is_below: bool,
    pub is_member: bool,
    /// `i₁ ≤ … ≤ i_k`.
    pub is_nondecreasing: bool,
}

/// All elements of `Σ_n(k)` in lexicographic order of their steps.
pub fn enumerate_sigma(n: usize, k: usize) -> Result<Vec<Chain>> {
    enumerate_sigma_capped(n, k, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_sigma`], refusing to run when `|Σ_n(k)|` exceeds `cap`.
pub fn enumerate_sigma_capped(n: usize, k: usize, cap: u64) -> Result<Vec<Chain>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let expected = count_formula(n, k);
    if expected > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            count: expected,
            cap,
        });
    }
    let mut out = Vec::new();
    if k >= n {
        return Ok(out);
    }
    let transpositions: Vec<Transposition> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| Transposition::new(i, j).unwrap()))
        .collect();
    let long = Permutation::long_cycle(n);
    let mut prefix = Vec::with_capacity(k);
    extend(
        &Permutation::identity(n),
        &mut prefix,
        k,
        &transpositions,
        &long,
        &mut out,
    );
    Ok(out)
}

// Every prefix of a member is a member, so pruning at the first invalid
// prefix loses nothing.
fn extend(
    product: &Permutation,
    prefix: &mut Vec<Transposition>,
    k: usize,
    transpositions: &[Transposition],
    long: &Permutation,
    out: &mut Vec<Chain>,
) {
    if prefix.len() == k {
        out.push(Chain::from_trusted(long.n(), prefix.clone()));
        return;
    }
    for &t in transpositions {
        let next = product.times_transposition(t);
        if next.norm() == prefix.len() + 1 && next.precedes(long).expect("sizes agree") {
            prefix.push(t);
            extend(&next, prefix, k, transpositions, long, out);
            prefix.pop();
        }
    }
}

/// The reflected reversal `((n+1−j_k  n+1−i_k), …, (n+1−j₁  n+1−i₁))`.
pub fn involute(c: &Chain) -> Result<Chain> {
    c.require_member()?;
    let n = c.n();
    let steps = c
        .steps()
        .iter()
        .rev()
        .map(|t| Transposition::new(n + 1 - t.j(), n + 1 - t.i()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Chain::from_trusted(n, steps))
}

/// `⋃_l {i_l, j_l}`, which for members equals the support of `γ_k`.
pub fn support(c: &Chain) -> Result<BTreeSet<usize>> {
    c.require_member()?;
    Ok(c.steps().iter().flat_map(|t| [t.i(), t.j()]).collect())
}

/// For a chain with non-decreasing smaller entries: for all `l < m`,
/// either `j_l ≤ i_m` or `j_l > j_m`. This holds exactly when the chain is
/// a member.
pub fn check_carac(c: &Chain) -> Result<bool> {
    if !c.is_nondecreasing() {
        return Err(Error::NotSorted);
    }
    let steps = c.steps();
    Ok(steps.iter().enumerate().all(|(l, a)| {
        steps[l + 1..]
            .iter()
            .all(|b| a.j() <= b.i() || a.j() > b.j())
    }))
}
