//! Permutations of `{1, …, n}` and the Cayley-graph geometry of the
//! symmetric group generated by all transpositions.
//!
//! Products compose right to left: `(a * b)(x) = a(b(x))`, so in a product
//! of transpositions the rightmost factor acts first. Under this convention
//! `(3 8)(5 7)(1 8)(3 7) = (1 3 5 7 8)`.
//!
//! All public interfaces speak 1-based labels. The one-line table is stored
//! 0-based.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A transposition `(i j)`, always stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    /// Builds `(a b)` from two distinct positive labels in either order.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::InvalidTransposition(a, b));
        }
        Ok(Transposition {
            i: a.min(b),
            j: a.max(b),
        })
    }

    /// The smaller label.
    pub fn i(self) -> usize {
        self.i
    }

    /// The larger label.
    pub fn j(self) -> usize {
        self.j
    }

    pub fn apply(self, x: usize) -> usize {
        if x == self.i {
            self.j
        } else if x == self.j {
            self.i
        } else {
            x
        }
    }

    /// `other⁻¹ · self · other`, which for transpositions is the
    /// transposition of the relabelled pair `(other(i) other(j))`.
    pub fn conjugate_by(self, other: Transposition) -> Transposition {
        let a = other.apply(self.i);
        let b = other.apply(self.j);
        Transposition {
            i: a.min(b),
            j: a.max(b),
        }
    }
}

impl TryFrom<[usize; 2]> for Transposition {
    type Error = Error;

    fn try_from(pair: [usize; 2]) -> Result<Self> {
        Transposition::new(pair[0], pair[1])
    }
}

impl From<Transposition> for [usize; 2] {
    fn from(t: Transposition) -> Self {
        [t.i, t.j]
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

/// A bijection of `{1, …, n}` in one-line form.
///
/// `n = 0` is accepted so that the trivial group acting on chains of
/// length zero has an element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The long cycle `(1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|x| (x + 1) % n).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut table = Vec::with_capacity(n);
        for &y in images {
            if y == 0 || y > n {
                return Err(Error::OutOfRange { value: y, n });
            }
            if std::mem::replace(&mut seen[y - 1], true) {
                return Err(Error::NotBijection(y));
            }
            table.push(y - 1);
        }
        Ok(Permutation { images: table })
    }

    /// The transposition `t` as an element of `𝔖_n`.
    pub fn from_transposition(n: usize, t: Transposition) -> Result<Self> {
        if t.j > n {
            return Err(Error::OutOfRange { value: t.j, n });
        }
        let mut p = Permutation::identity(n);
        p.images.swap(t.i - 1, t.j - 1);
        Ok(p)
    }

    /// The product of the given cycles, leftmost cycle applied last.
    /// Disjoint cycles may come in any order.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut result = Permutation::identity(n);
        for cycle in cycles {
            let cycle = cycle.as_ref();
            let mut seen = BTreeSet::new();
            for &x in cycle {
                if x == 0 || x > n {
                    return Err(Error::OutOfRange { value: x, n });
                }
                if !seen.insert(x) {
                    return Err(Error::NotBijection(x));
                }
            }
            let mut c = Permutation::identity(n);
            for (pos, &x) in cycle.iter().enumerate() {
                c.images[x - 1] = cycle[(pos + 1) % cycle.len()] - 1;
            }
            result = &result * &c;
        }
        Ok(result)
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `σ(x)` for a 1-based label. Panics if `x` is outside `1..=n`.
    pub fn apply(&self, x: usize) -> usize {
        assert!(
            x >= 1 && x <= self.n(),
            "label {x} outside 1..={}",
            self.n()
        );
        self.images[x - 1] + 1
    }

    /// The 1-based one-line images `(σ(1), …, σ(n))`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    /// `self · other`, with `other` acting first.
    pub fn multiply(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    /// `self · t`, i.e. `t` acts first. Equivalent to swapping two entries
    /// of the one-line table.
    pub(crate) fn times_transposition(&self, t: Transposition) -> Self {
        let mut p = self.clone();
        p.images.swap(t.i - 1, t.j - 1);
        p
    }

    /// All cycles, fixed points included, each starting at its smallest
    /// element, listed by increasing smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// The number of cycles `ℓ(σ)`, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// `|σ| = n − ℓ(σ)`, the distance from the identity in the Cayley graph
    /// generated by all transpositions.
    pub fn norm(&self) -> usize {
        self.n() - self.cycle_count()
    }

    /// The cycle through `x`, starting at `x` and following `σ`.
    pub fn cycle_of(&self, x: usize) -> Result<Vec<usize>> {
        if x == 0 || x > self.n() {
            return Err(Error::OutOfRange {
                value: x,
                n: self.n(),
            });
        }
        let mut cycle = vec![x];
        let mut y = self.apply(x);
        while y != x {
            cycle.push(y);
            y = self.apply(y);
        }
        Ok(cycle)
    }

    /// Labels moved by `σ`.
    pub fn support(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x != y)
            .map(|(x, _)| x + 1)
            .collect()
    }

    /// `self ≼ other`: `|other| = |self| + |self⁻¹ · other|`, i.e. `self`
    /// lies on a geodesic from the identity to `other`.
    pub fn precedes(&self, other: &Permutation) -> Result<bool> {
        let quotient = self.inverse().multiply(other)?;
        Ok(other.norm() == self.norm() + quotient.norm())
    }

    /// Decides `σ ≼ (1 … n)` from the shape of the cycles alone: every
    /// cycle must increase from its minimum, and the blocks must form a
    /// non-crossing partition.
    pub fn below_long_cycle_geometric(&self) -> bool {
        let cycles = self.cycles();
        if cycles.iter().any(|c| c.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        let mut block = vec![0usize; self.n() + 1];
        for (b, c) in cycles.iter().enumerate() {
            for &x in c {
                block[x] = b;
            }
        }
        // Two blocks cross iff the labels of their union, read in order,
        // alternate between them at least four times (pattern XYXY).
        let nontrivial: Vec<usize> = (0..cycles.len()).filter(|&b| cycles[b].len() > 1).collect();
        for (pos, &x) in nontrivial.iter().enumerate() {
            for &y in &nontrivial[pos + 1..] {
                let mut runs = 0;
                let mut last = usize::MAX;
                for &b in &block[1..] {
                    if (b == x || b == y) && b != last {
                        runs += 1;
                        last = b;
                    }
                }
                if runs >= 4 {
                    return false;
                }
            }
        }
        true
    }

    /// Parses cycle notation (`"(1 3 5)(2 4)"`, `"()"`) or a one-line
    /// sequence (`"2,3,1"`, `"[2 3 1]"`) over `{1, …, n}`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('(') {
            let cycles = parse_cycles(text)?;
            Permutation::from_cycles(n, &cycles)
        } else {
            let images = parse_one_line(text)?;
            if images.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: images.len(),
                });
            }
            Permutation::from_images(&images)
        }
    }
}

fn parse_label(token: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected a positive integer, found {token:?}")))
}

fn split_labels(body: &str) -> Result<Vec<usize>> {
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_label)
        .collect()
}

/// Splits `"(1 3)(2 4)"` into `[[1, 3], [2, 4]]`. An empty pair of
/// parentheses yields an empty cycle list.
pub(crate) fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(inner) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' at {rest:?}")));
        };
        let Some(close) = inner.find(')') else {
            return Err(Error::Parse("unbalanced parentheses".into()));
        };
        let labels = split_labels(&inner[..close])?;
        if !labels.is_empty() {
            cycles.push(labels);
        }
        rest = inner[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn parse_one_line(text: &str) -> Result<Vec<usize>> {
    let body = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(text);
    split_labels(body)
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on mismatched sizes; use [`Permutation::multiply`] to get an
    /// error instead.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.multiply(rhs).expect("permutation sizes differ")
    }
}

impl fmt::Display for Permutation {
    /// Non-trivial cycles in standard notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (pos, x) in cycle.iter().enumerate() {
                if pos > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Cycle notation with `n` taken as the largest label that appears,
    /// or a one-line sequence.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let cycles = parse_cycles(s)?;
            let n = cycles.iter().flatten().copied().max().unwrap_or(0);
            Permutation::from_cycles(n, &cycles)
        } else {
            Permutation::from_images(&parse_one_line(s)?)
        }
    }
}
