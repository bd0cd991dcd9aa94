//! Circular parking on `n` spaces labelled `1, …, n` in cyclic order.
//!
//! Cars enter after the positions `e_k, e_{k−1}, …, e_1`, in that order.
//! Each one drives forward, starting with the space right after its entry
//! point, and takes the first open space not already occupied. With `k`
//! cars and `k + 1` open spaces exactly one open space, the residue, stays
//! empty.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_label(x: usize, n: usize) -> Result<()> {
    if x == 0 || x > n {
        Err(Error::OutOfRange { value: x, n })
    } else {
        Ok(())
    }
}

/// `x` moved `t` steps forward around the circle, as a label in `1..=n`.
pub fn shift_label(x: usize, t: i64, n: usize) -> usize {
    let n_i = n as i64;
    ((x as i64 - 1 + t).rem_euclid(n_i) + 1) as usize
}

/// Entry points `E` and open spaces `O` with `|O| = |E| + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkingInput {
    n: usize,
    entries: Vec<usize>,
    open: BTreeSet<usize>,
}

impl ParkingInput {
    pub fn new(n: usize, entries: Vec<usize>, open: BTreeSet<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if open.len() != entries.len() + 1 {
            return Err(Error::SizeMismatch {
                expected: entries.len() + 1,
                found: open.len(),
            });
        }
        for &x in entries.iter().chain(open.iter()) {
            check_label(x, n)?;
        }
        Ok(ParkingInput { n, entries, open })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn open(&self) -> &BTreeSet<usize> {
        &self.open
    }
}

/// Spaces `(p_1, …, p_k)` taken by the cars and the residue `ρ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParkingOutcome {
    pub spaces: Vec<usize>,
    pub residue: usize,
}

/// What one car did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarTrace {
    /// 1-based index `l` of the entry point `e_l`.
    pub car: usize,
    pub entry: usize,
    /// Every space looked at, the taken one last.
    pub probed: Vec<usize>,
    pub space: usize,
}

pub fn park(input: &ParkingInput) -> ParkingOutcome {
    park_traced(input).0
}

/// Runs the process and records each car, in entrance order (car `k`
/// first).
pub fn park_traced(input: &ParkingInput) -> (ParkingOutcome, Vec<CarTrace>) {
    let n = input.n;
    let k = input.entries.len();
    let mut free = input.open.clone();
    let mut spaces = vec![0; k];
    let mut trace = Vec::with_capacity(k);
    for l in (0..k).rev() {
        let entry = input.entries[l];
        let mut probed = Vec::new();
        // |free| ≥ 1 here, so some r in 1..=n reaches a free space.
        let space = (1..=n as i64)
            .map(|r| shift_label(entry, r, n))
            .find(|s| {
                probed.push(*s);
                free.contains(s)
            })
            .expect("a free open space always remains");
        free.remove(&space);
        spaces[l] = space;
        trace.push(CarTrace {
            car: l + 1,
            entry,
            probed,
            space,
        });
    }
    let residue = free
        .into_iter()
        .next()
        .expect("exactly one open space is left");
    (ParkingOutcome { spaces, residue }, trace)
}

/// `ρ(E, O)`.
pub fn residue(input: &ParkingInput) -> usize {
    park(input).residue
}

/// Adds `t` modulo `n` to every entry of `a` and every element of `b`.
pub fn shift_pair(
    a: &[usize],
    b: &BTreeSet<usize>,
    t: i64,
    n: usize,
) -> Result<(Vec<usize>, BTreeSet<usize>)> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    for &x in a.iter().chain(b.iter()) {
        check_label(x, n)?;
    }
    Ok((
        a.iter().map(|&x| shift_label(x, t, n)).collect(),
        b.iter().map(|&x| shift_label(x, t, n)).collect(),
    ))
}

/// A pair shifted so that its residue is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub entries: Vec<usize>,
    pub open: BTreeSet<usize>,
    /// `1 − ρ(A, B)` reduced to `0..n`.
    pub shift: usize,
}

pub fn normalize(a: &[usize], b: &BTreeSet<usize>, n: usize) -> Result<Normalized> {
    let input = ParkingInput::new(n, a.to_vec(), b.clone())?;
    let rho = residue(&input);
    let shift = shift_label(1, 1 - rho as i64 + n as i64, n) - 1;
    let (entries, open) = shift_pair(a, b, shift as i64, n)?;
    let check = ParkingInput::new(n, entries.clone(), open.clone())?;
    if residue(&check) != 1 {
        return Err(Error::Internal(format!(
            "residue after shifting by {shift} is {}",
            residue(&check)
        )));
    }
    Ok(Normalized {
        entries,
        open,
        shift,
    })
}
