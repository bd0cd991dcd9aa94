//! The surjection from pairs `(A, B)` onto `Σ_n(k)` and the counting
//! formula it proves.
//!
//! `A` is any sequence in `{1, …, n}^k` and `B` any `(k+1)`-subset of
//! `{1, …, n}`. The pair is shifted around the circle until its parking
//! residue is 1; parking the sorted entries then yields a non-decreasing
//! member of `Σ_n(k)`, which the `𝔖_k` action carries back to the original
//! order of `A`. The fibres of the map are exactly the `n` shifts of a pair,
//! hence `|Σ_n(k)| = n^{k−1} · C(n, k+1)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::action::{act_on_sequence, apply_permutation, sort_chain, stable_sort_permutation};
use crate::error::{Error, Result};
use crate::geodesic::{enumerate_sigma_capped, Chain, DEFAULT_ENUMERATION_CAP};
use crate::parking::{normalize, park, residue, shift_pair, ParkingInput, ParkingOutcome};
use crate::perm::{Permutation, Transposition};

/// A sequence `A` of length `k` and a set `B` of size `k + 1`, both over
/// `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PairRepr", into = "PairRepr")]
pub struct PairAB {
    n: usize,
    a: Vec<usize>,
    b: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    n: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl TryFrom<PairRepr> for PairAB {
    type Error = Error;

    fn try_from(r: PairRepr) -> Result<Self> {
        PairAB::from_lists(r.n, r.a, &r.b)
    }
}

impl From<PairAB> for PairRepr {
    fn from(p: PairAB) -> Self {
        PairRepr {
            n: p.n,
            a: p.a,
            b: p.b.into_iter().collect(),
        }
    }
}

impl PairAB {
    pub fn new(n: usize, a: Vec<usize>, b: BTreeSet<usize>) -> Result<Self> {
        // same invariants as a parking input
        ParkingInput::new(n, a.clone(), b.clone())?;
        Ok(PairAB { n, a, b })
    }

    /// Like [`PairAB::new`], rejecting repeated elements of `b`.
    pub fn from_lists(n: usize, a: Vec<usize>, b: &[usize]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &x in b {
            if !set.insert(x) {
                return Err(Error::Duplicate(x));
            }
        }
        PairAB::new(n, a, set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &BTreeSet<usize> {
        &self.b
    }

    /// `ρ(A, B)`.
    pub fn residue(&self) -> usize {
        residue(&self.parking_input())
    }

    /// The pair shifted by `t` modulo `n`.
    pub fn shift(&self, t: i64) -> PairAB {
        let (a, b) = shift_pair(&self.a, &self.b, t, self.n).expect("labels are in range");
        PairAB { n: self.n, a, b }
    }

    fn parking_input(&self) -> ParkingInput {
        ParkingInput::new(self.n, self.a.clone(), self.b.clone()).expect("checked on construction")
    }
}

impl fmt::Display for PairAB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A=({}) B={{{}}}",
            self.a.iter().join(","),
            self.b.iter().join(",")
        )
    }
}

/// Every intermediate value of one evaluation of [`gamma`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTrace {
    /// Parking of the original pair; its residue decides the shift.
    pub first: ParkingOutcome,
    pub shift: usize,
    pub normalized: PairAB,
    /// The sorted entries `I`.
    pub sorted_entries: Vec<usize>,
    /// Parking of `I` into the shifted open spaces; its spaces are `J`.
    pub second: ParkingOutcome,
    /// `((i₁ j₁), …, (i_k j_k))`.
    pub sorted_chain: Chain,
    /// The stable permutation `σ` with `σ · Ã = I`.
    pub sorting: Permutation,
    pub chain: Chain,
}

pub fn gamma(pair: &PairAB) -> Result<Chain> {
    Ok(gamma_traced(pair)?.chain)
}

pub fn gamma_traced(pair: &PairAB) -> Result<GammaTrace> {
    let (n, k) = (pair.n, pair.k());
    if k >= n {
        return Err(Error::LengthTooLarge { k, n });
    }
    let first = park(&pair.parking_input());
    let nm = normalize(&pair.a, &pair.b, n)?;
    let normalized = PairAB {
        n,
        a: nm.entries,
        b: nm.open,
    };
    let sorting = stable_sort_permutation(&normalized.a);
    let sorted_entries = act_on_sequence(&sorting, &normalized.a)?;
    let second = park(&ParkingInput::new(
        n,
        sorted_entries.clone(),
        normalized.b.clone(),
    )?);
    let steps = sorted_entries
        .iter()
        .zip(&second.spaces)
        .map(|(&i, &j)| {
            if i < j {
                Transposition::new(i, j)
            } else {
                Err(Error::Internal(format!("parked at {j}, not after {i}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let sorted_chain = Chain::new(n, steps)?;
    if !sorted_chain.is_member() {
        return Err(Error::Internal(format!(
            "sorted chain {sorted_chain} is not a member"
        )));
    }
    let chain = apply_permutation(&sorted_chain, &sorting.inverse())?;
    Ok(GammaTrace {
        first,
        shift: nm.shift,
        normalized,
        sorted_entries,
        second,
        sorted_chain,
        sorting,
        chain,
    })
}

/// The unique residue-1 preimage of `c`: `A` is the smaller entries of `c`,
/// `B` the larger entries of its sorted form together with 1.
pub fn section(c: &Chain) -> Result<PairAB> {
    let (_, sorted) = sort_chain(c)?;
    let mut b: BTreeSet<usize> = sorted.large_entries().into_iter().collect();
    b.insert(1);
    PairAB::new(c.n(), c.small_entries(), b)
}

/// All `n` preimages of `c`, the shifts of its section by `0, …, n − 1`.
pub fn fiber(c: &Chain) -> Result<Vec<PairAB>> {
    let base = section(c)?;
    Ok((0..c.n() as i64).map(|t| base.shift(t)).collect())
}

/// `C(n, r)` exactly.
pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for step in 0..r {
        acc *= n - step;
        acc /= step + 1;
    }
    acc
}

/// `n^{k−1} · C(n, k+1)`, with the `k = 0` value 1 and 0 for `k ≥ n`.
pub fn count_formula(n: usize, k: usize) -> BigUint {
    if n == 0 || k >= n {
        return BigUint::zero();
    }
    if k == 0 {
        return BigUint::one();
    }
    BigUint::from(n).pow((k - 1) as u32) * binomial(n, k + 1)
}

fn serialize_count<S: Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&value.to_string()),
    }
}

/// One row of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub k: usize,
    #[serde(serialize_with = "serialize_count")]
    pub formula: BigUint,
    pub enumerated: usize,
    /// Every member is hit and every image is a member.
    pub surjective: bool,
    /// Each preimage set equals the shift orbit of the section and has `n`
    /// distinct elements with exactly one of residue 1.
    pub fibres_ok: bool,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        BigUint::from(self.enumerated) == self.formula && self.surjective && self.fibres_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(VerifyRow::passed)
    }
}

pub fn verify(n: usize) -> Result<VerifyReport> {
    verify_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// For each `k < n`: enumerates `Σ_n(k)`, compares with the formula, then
/// sweeps the whole domain of pairs through [`gamma`] and checks that the
/// preimages of every member are exactly its [`fiber`].
pub fn verify_capped(n: usize, cap: u64) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    // the domain has n times as many pairs as there are members
    for k in 0..n {
        let domain = count_formula(n, k) * n;
        if domain > BigUint::from(cap) {
            return Err(Error::CapExceeded { count: domain, cap });
        }
    }
    let rows = (0..n)
        .map(|k| verify_row(n, k, cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { n, rows })
}

fn verify_row(n: usize, k: usize, cap: u64) -> Result<VerifyRow> {
    let members = enumerate_sigma_capped(n, k, cap)?;
    let member_set: HashSet<&Chain> = members.iter().collect();
    let mut preimages: HashMap<Chain, Vec<PairAB>> = HashMap::new();
    let mut surjective = true;
    for (a, b) in domain(n, k) {
        let pair = PairAB::new(n, a, b)?;
        let image = gamma(&pair)?;
        if !member_set.contains(&image) {
            surjective = false;
        }
        preimages.entry(image).or_default().push(pair);
    }
    let mut fibres_ok = true;
    for c in &members {
        let Some(found) = preimages.get(c) else {
            surjective = false;
            continue;
        };
        let found: BTreeSet<&PairAB> = found.iter().collect();
        let orbit = fiber(c)?;
        let orbit_set: BTreeSet<&PairAB> = orbit.iter().collect();
        let unit_residues = orbit.iter().filter(|p| p.residue() == 1).count();
        if found != orbit_set || orbit_set.len() != n || unit_residues != 1 {
            fibres_ok = false;
        }
    }
    Ok(VerifyRow {
        k,
        formula: count_formula(n, k),
        enumerated: members.len(),
        surjective,
        fibres_ok,
    })
}

/// All pairs in `{1, …, n}^k × C({1, …, n}, k + 1)`.
pub fn domain(n: usize, k: usize) -> impl Iterator<Item = (Vec<usize>, BTreeSet<usize>)> {
    let sequences: Vec<Vec<usize>> = (0..k).map(|_| 1..=n).multi_cartesian_product().collect();
    // multi_cartesian_product of nothing yields nothing; k = 0 has one empty sequence
    let sequences = if k == 0 { vec![Vec::new()] } else { sequences };
    let subsets: Vec<BTreeSet<usize>> = (1..=n)
        .combinations(k + 1)
        .map(|c| c.into_iter().collect())
        .collect();
    sequences.into_iter().cartesian_product(subsets)
}
