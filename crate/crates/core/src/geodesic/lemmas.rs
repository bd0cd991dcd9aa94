//! Structural properties of members of `Σ_n(k)` as executable checks.
//!
//! Each check takes a chain that is expected to be a member and reports the
//! first step at which the property fails. They are meant to be run over
//! exhaustive enumerations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{involute, support, Chain};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub property: &'static str,
    /// 1-based step index, 0 when the failure is not tied to one step.
    pub step: usize,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at step {}: {}",
            self.property, self.step, self.detail
        )
    }
}

fn fail(property: &'static str, step: usize, detail: String) -> Result<(), Violation> {
    Err(Violation {
        property,
        step,
        detail,
    })
}

fn as_set(cycle: Vec<usize>) -> BTreeSet<usize> {
    cycle.into_iter().collect()
}

/// The five per-step bounds relating `i_l`, `j_l` and the cycles of
/// `γ_{l−1}`:
///
/// 1. `i_l` is below every element of the cycle of `j_l`, and is the
///    largest element of its own cycle with that property;
/// 2. `j_l` is the maximum of its cycle;
/// 3. `i_l` is below every element of the cycle of `i_l + 1`;
/// 4. if `i_l + 1` is not an earlier smaller entry, it is a fixed point;
/// 5. for full factorisations, the last occurrence of the largest `i` has
///    `j = i + 1`.
pub fn check_cycle_bounds(c: &Chain) -> Result<(), Violation> {
    let gammas = c.intermediates();
    let steps = c.steps();
    for (idx, t) in steps.iter().enumerate() {
        let l = idx + 1;
        let prev = &gammas[idx];
        let (i, j) = (t.i(), t.j());
        let cycle_j = as_set(prev.cycle_of(j).expect("label in range"));
        let min_j = *cycle_j.iter().next().expect("cycles are non-empty");
        if i >= min_j {
            return fail(
                "cycle bound 1",
                l,
                format!("i={i} not below cycle of j {cycle_j:?}"),
            );
        }
        let cycle_i = as_set(prev.cycle_of(i).expect("label in range"));
        if let Some(&bigger) = cycle_i.iter().find(|&&x| x > i && x < min_j) {
            return fail(
                "cycle bound 1",
                l,
                format!("{bigger} in cycle of i={i} is also below cycle of j {cycle_j:?}"),
            );
        }
        if cycle_j.iter().next_back() != Some(&j) {
            return fail(
                "cycle bound 2",
                l,
                format!("j={j} not the maximum of {cycle_j:?}"),
            );
        }
        let next = as_set(prev.cycle_of(i + 1).expect("i < j <= n"));
        if next.iter().any(|&x| x <= i) {
            return fail(
                "cycle bound 3",
                l,
                format!("cycle of {} is {next:?}", i + 1),
            );
        }
        if !steps[..idx].iter().any(|s| s.i() == i + 1) && next.len() != 1 {
            return fail("cycle bound 4", l, format!("{} not fixed: {next:?}", i + 1));
        }
    }
    if c.len() + 1 == c.n() && !steps.is_empty() {
        let max_i = steps.iter().map(|t| t.i()).max().expect("non-empty");
        let last = steps.iter().rposition(|t| t.i() == max_i).expect("present");
        if steps[last].j() != max_i + 1 {
            return fail(
                "cycle bound 5",
                last + 1,
                format!("last occurrence of i={max_i} has j={}", steps[last].j()),
            );
        }
    }
    Ok(())
}

/// For `l < m`: equal `i`s force `j_l > j_m`, equal `j`s force `i_l > i_m`.
pub fn check_monotone(c: &Chain) -> Result<(), Violation> {
    let steps = c.steps();
    for (l, a) in steps.iter().enumerate() {
        for (m, b) in steps.iter().enumerate().skip(l + 1) {
            if a.i() == b.i() && a.j() <= b.j() {
                return fail("monotone", m + 1, format!("{a} then {b}"));
            }
            if a.j() == b.j() && a.i() <= b.i() {
                return fail("monotone", m + 1, format!("{a} then {b}"));
            }
        }
    }
    Ok(())
}

/// On non-decreasing members: the `j`s are distinct, each `j_l` is fixed
/// by `γ_{l−1}`, `γ_l` is `γ_{l−1}` with `j_l` inserted right after `i_l`
/// in its cycle, and the support of `γ_m` is `⋃_{l ≤ m} {i_l, j_l}`.
pub fn check_insertion(c: &Chain) -> Result<(), Violation> {
    if !c.is_nondecreasing() {
        return fail("insertion", 0, "chain is not non-decreasing".into());
    }
    let gammas = c.intermediates();
    let steps = c.steps();
    let mut seen_j = BTreeSet::new();
    let mut touched = BTreeSet::new();
    for (idx, t) in steps.iter().enumerate() {
        let l = idx + 1;
        let (i, j) = (t.i(), t.j());
        if !seen_j.insert(j) {
            return fail("insertion", l, format!("j={j} repeated"));
        }
        let (prev, cur) = (&gammas[idx], &gammas[l]);
        if prev.apply(j) != j {
            return fail("insertion", l, format!("j={j} moved by γ_{idx}"));
        }
        for x in 1..=c.n() {
            let expected = if x == i {
                j
            } else if x == j {
                prev.apply(i)
            } else {
                prev.apply(x)
            };
            if cur.apply(x) != expected {
                return fail(
                    "insertion",
                    l,
                    format!("γ_{l}({x}) = {}, expected {expected}", cur.apply(x)),
                );
            }
        }
        touched.insert(i);
        touched.insert(j);
        if cur.support() != touched {
            return fail(
                "insertion",
                l,
                format!("support {:?} != {touched:?}", cur.support()),
            );
        }
    }
    Ok(())
}

/// On non-decreasing members: `j_l = min(supp(γ_l) ∩ {i_l + 1, …, n})`.
pub fn check_minimum_formula(c: &Chain) -> Result<(), Violation> {
    if !c.is_nondecreasing() {
        return fail("minimum formula", 0, "chain is not non-decreasing".into());
    }
    for (idx, (t, gamma)) in c
        .steps()
        .iter()
        .zip(c.intermediates().iter().skip(1))
        .enumerate()
    {
        let min = gamma.support().into_iter().find(|&x| x > t.i());
        if min != Some(t.j()) {
            return fail(
                "minimum formula",
                idx + 1,
                format!("{t}: minimum is {min:?}"),
            );
        }
    }
    Ok(())
}

/// `⋃_l {i_l, j_l}` equals the support of `γ_k`.
pub fn check_support(c: &Chain) -> Result<(), Violation> {
    let labels = support(c).map_err(|e| Violation {
        property: "support",
        step: 0,
        detail: e.to_string(),
    })?;
    let actual = c.product().support();
    if labels != actual {
        return fail(
            "support",
            0,
            format!("labels {labels:?} != support {actual:?}"),
        );
    }
    Ok(())
}

/// The involution maps the chain into `Σ_n(k)` and squares to the identity.
pub fn check_involution(c: &Chain) -> Result<(), Violation> {
    let wrap = |e: crate::Error| Violation {
        property: "involution",
        step: 0,
        detail: e.to_string(),
    };
    let image = involute(c).map_err(wrap)?;
    if !image.is_member() {
        return fail("involution", 0, format!("image {image} is not a member"));
    }
    let back = involute(&image).map_err(wrap)?;
    if &back != c {
        return fail("involution", 0, format!("twice gives {back}"));
    }
    Ok(())
}

/// Runs every check that applies to `c`.
pub fn check_all(c: &Chain) -> Result<(), Violation> {
    check_cycle_bounds(c)?;
    check_monotone(c)?;
    check_support(c)?;
    check_involution(c)?;
    if c.is_nondecreasing() {
        check_insertion(c)?;
        check_minimum_formula(c)?;
    }
    Ok(())
}

/// Two distinct non-decreasing chains sharing both their smaller entries
/// and the support of their product, if any such pair exists in `chains`.
///
/// Such pairs do exist from `n = 5` on: `(1 2)(2 3)(4 5)` and
/// `(1 4)(2 3)(4 5)` both have smaller entries `(1, 2, 4)` and support
/// `{1, …, 5}`.
pub fn find_determination_collision(chains: &[Chain]) -> Option<(Chain, Chain)> {
    find_collision(chains, |c| c.product().support())
}

/// Two distinct non-decreasing chains sharing both their smaller entries
/// and the set of their larger entries. None exist: parking the smaller
/// entries into the larger ones plus 1 rebuilds the chain.
pub fn find_large_entry_collision(chains: &[Chain]) -> Option<(Chain, Chain)> {
    find_collision(chains, |c| c.large_entries().into_iter().collect())
}

fn find_collision<F>(chains: &[Chain], labels: F) -> Option<(Chain, Chain)>
where
    F: Fn(&Chain) -> BTreeSet<usize>,
{
    let mut seen: HashMap<(Vec<usize>, BTreeSet<usize>), &Chain> = HashMap::new();
    for c in chains.iter().filter(|c| c.is_nondecreasing()) {
        let key = (c.small_entries(), labels(c));
        if let Some(prev) = seen.insert(key, c) {
            if prev != c {
                return Some((prev.clone(), c.clone()));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::enumerate_sigma;

    #[test]
    fn worked_example_passes_everything() {
        let c = Chain::from_pairs(8, &[(3, 8), (5, 7), (1, 8), (3, 7)]).unwrap();
        assert_eq!(check_all(&c), Ok(()));
        let s = Chain::from_pairs(8, &[(1, 3), (3, 8), (3, 5), (5, 7)]).unwrap();
        assert_eq!(check_all(&s), Ok(()));
    }

    #[test]
    fn detects_violations_on_non_members() {
        // (1 3)(2 4) is geodesic but crossing
        let c = Chain::from_pairs(4, &[(1, 3), (2, 4)]).unwrap();
        assert!(check_support(&c).is_err());
        assert!(check_involution(&c).is_err());
        let d = Chain::from_pairs(4, &[(1, 3), (1, 4)]).unwrap();
        assert_eq!(check_monotone(&d).unwrap_err().property, "monotone");
        let e = Chain::from_pairs(4, &[(2, 4), (1, 3)]).unwrap();
        assert!(check_insertion(&e).is_err());
    }

    #[test]
    fn small_enumerations_pass() {
        for n in 1..=5 {
            let mut all = Vec::new();
            for k in 0..n {
                for c in enumerate_sigma(n, k).unwrap() {
                    assert_eq!(check_all(&c), Ok(()), "{c}");
                    all.push(c);
                }
            }
            assert_eq!(find_large_entry_collision(&all), None);
            if n <= 4 {
                assert_eq!(find_determination_collision(&all), None);
            }
        }
    }

    #[test]
    fn support_does_not_determine_sorted_chains() {
        let a = Chain::from_pairs(5, &[(1, 2), (2, 3), (4, 5)]).unwrap();
        let b = Chain::from_pairs(5, &[(1, 4), (2, 3), (4, 5)]).unwrap();
        for c in [&a, &b] {
            assert!(c.is_member() && c.is_nondecreasing());
            assert_eq!(check_minimum_formula(c), Ok(()));
        }
        assert_eq!(a.small_entries(), b.small_entries());
        assert_eq!(a.product().support(), b.product().support());
        assert!(find_determination_collision(&[a, b]).is_some());
    }
}
