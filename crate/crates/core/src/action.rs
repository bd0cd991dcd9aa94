//! The action of `𝔖_k` on `Σ_n(k)`.
//!
//! The Coxeter generator `σ_l = (l l+1)` acts on a chain by a braid move on
//! positions `l, l+1`: nothing when `i_l = i_{l+1}`, the forward move when
//! `i_l < i_{l+1}` and the inverse move otherwise. Either way the step with
//! the larger `i` is kept and the other is conjugated by it, so the product
//! of the chain is preserved and the smaller entries are permuted exactly
//! like `σ_l` permutes a sequence.

use crate::error::{Error, Result};
use crate::geodesic::Chain;
use crate::perm::{Permutation, Transposition};

/// Index `l` of the Coxeter generator `σ_l = (l l+1)` of `𝔖_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorIndex(usize);

impl GeneratorIndex {
    /// Checks `1 ≤ l ≤ k − 1`.
    pub fn new(l: usize, k: usize) -> Result<Self> {
        if l == 0 || l + 1 > k {
            return Err(Error::GeneratorOutOfRange {
                l,
                max: k.saturating_sub(1),
            });
        }
        Ok(GeneratorIndex(l))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// `(i₁, …, i_k)`.
pub fn projection(c: &Chain) -> Vec<usize> {
    c.small_entries()
}

/// Forward: `(g_l, g_{l+1}) ↦ (g_{l+1}, g_{l+1}⁻¹ g_l g_{l+1})`.
/// Inverse: `(g_l, g_{l+1}) ↦ (g_l g_{l+1} g_l⁻¹, g_l)`.
pub fn braid_step(c: &Chain, l: GeneratorIndex, inverse: bool) -> Result<Chain> {
    check_generator(c, l)?;
    c.require_member()?;
    Ok(braid_unchecked(c, l.0, inverse))
}

fn check_generator(c: &Chain, l: GeneratorIndex) -> Result<()> {
    GeneratorIndex::new(l.0, c.len()).map(|_| ())
}

fn braid_unchecked(c: &Chain, l: usize, inverse: bool) -> Chain {
    let mut steps = c.steps().to_vec();
    let (a, b) = (steps[l - 1], steps[l]);
    if inverse {
        steps[l - 1] = b.conjugate_by(a);
        steps[l] = a;
    } else {
        steps[l - 1] = b;
        steps[l] = a.conjugate_by(b);
    }
    Chain::from_trusted(c.n(), steps)
}

fn generator_unchecked(c: &Chain, l: usize) -> Chain {
    let (a, b) = (c.steps()[l - 1], c.steps()[l]);
    match a.i().cmp(&b.i()) {
        std::cmp::Ordering::Equal => c.clone(),
        std::cmp::Ordering::Less => braid_unchecked(c, l, false),
        std::cmp::Ordering::Greater => braid_unchecked(c, l, true),
    }
}

/// `σ_l · c`.
pub fn apply_generator(c: &Chain, l: GeneratorIndex) -> Result<Chain> {
    check_generator(c, l)?;
    c.require_member()?;
    Ok(generator_unchecked(c, l.0))
}

/// `σ_{w₁} σ_{w₂} ⋯ σ_{w_m} · c`: the rightmost generator acts first.
pub fn apply_word(c: &Chain, word: &[usize]) -> Result<Chain> {
    for &l in word {
        GeneratorIndex::new(l, c.len())?;
    }
    c.require_member()?;
    Ok(word
        .iter()
        .rev()
        .fold(c.clone(), |acc, &l| generator_unchecked(&acc, l)))
}

/// `p · c` for `p ∈ 𝔖_k`, computed through the bubble-sort word of `p`.
pub fn apply_permutation(c: &Chain, p: &Permutation) -> Result<Chain> {
    if p.n() != c.len() {
        return Err(Error::SizeMismatch {
            expected: c.len(),
            found: p.n(),
        });
    }
    apply_word(c, &bubble_word(p))
}

/// A word `w` in the Coxeter generators with `σ_{w₁} ⋯ σ_{w_m} = p`.
///
/// Bubble-sorting the one-line form of `p` right-multiplies it by the
/// swapped generators until it becomes the identity, so `p` is the product
/// of those swaps in reverse order.
pub fn bubble_word(p: &Permutation) -> Vec<usize> {
    let mut line = p.one_line();
    let mut swaps = Vec::new();
    let k = line.len();
    for pass in 0..k {
        let mut moved = false;
        for pos in 0..k.saturating_sub(pass + 1) {
            if line[pos] > line[pos + 1] {
                line.swap(pos, pos + 1);
                swaps.push(pos + 1);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    swaps.reverse();
    swaps
}

/// `σ_{w₁} ⋯ σ_{w_m}` as an element of `𝔖_k`.
pub fn word_to_permutation(k: usize, word: &[usize]) -> Result<Permutation> {
    word.iter().try_fold(Permutation::identity(k), |acc, &l| {
        GeneratorIndex::new(l, k)?;
        let generator = Transposition::new(l, l + 1)?;
        Ok(acc.times_transposition(generator))
    })
}

/// `p · s`, defined by `(p · s)_{p(x)} = s_x`.
pub fn act_on_sequence(p: &Permutation, seq: &[usize]) -> Result<Vec<usize>> {
    if p.n() != seq.len() {
        return Err(Error::SizeMismatch {
            expected: seq.len(),
            found: p.n(),
        });
    }
    let mut out = vec![0; seq.len()];
    for (x, &v) in seq.iter().enumerate() {
        out[p.apply(x + 1) - 1] = v;
    }
    Ok(out)
}

/// The permutation `p` with `p · seq` sorted, ties kept in their original
/// order.
pub fn stable_sort_permutation(seq: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by_key(|&x| seq[x]);
    let mut images = vec![0; seq.len()];
    for (rank, &x) in order.iter().enumerate() {
        images[x] = rank + 1;
    }
    Permutation::from_images(&images).expect("ranks form a bijection")
}

/// The non-decreasing chain in the orbit of `c`, with the stable sorting
/// permutation that carries `c` to it.
pub fn sort_chain(c: &Chain) -> Result<(Permutation, Chain)> {
    c.require_member()?;
    let p = stable_sort_permutation(&projection(c));
    let sorted = apply_permutation(c, &p)?;
    Ok((p, sorted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize, pairs: &[(usize, usize)]) -> Chain {
        Chain::from_pairs(n, pairs).unwrap()
    }

    fn g(l: usize, k: usize) -> GeneratorIndex {
        GeneratorIndex::new(l, k).unwrap()
    }

    #[test]
    fn braid_steps() {
        let c = chain(3, &[(1, 2), (2, 3)]);
        let f = braid_step(&c, g(1, 2), false).unwrap();
        assert_eq!(f, chain(3, &[(2, 3), (1, 3)]));
        assert_eq!(braid_step(&f, g(1, 2), true).unwrap(), c);
        assert_eq!(f.product(), c.product());
    }

    #[test]
    fn generator_range() {
        assert_eq!(
            GeneratorIndex::new(1, 1),
            Err(Error::GeneratorOutOfRange { l: 1, max: 0 })
        );
        assert!(GeneratorIndex::new(0, 3).is_err());
        assert!(GeneratorIndex::new(3, 3).is_err());
        let c = chain(3, &[(1, 2)]);
        assert!(apply_word(&c, &[1]).is_err());
        // an index valid for a longer chain is rejected on a shorter one
        assert!(apply_generator(&c, g(1, 2)).is_err());
    }

    #[test]
    fn generator_examples() {
        let s = chain(3, &[(1, 3), (1, 2)]);
        assert_eq!(apply_generator(&s, g(1, 2)).unwrap(), s);
        let a = chain(3, &[(1, 2), (2, 3)]);
        let b = chain(3, &[(2, 3), (1, 3)]);
        assert_eq!(apply_generator(&a, g(1, 2)).unwrap(), b);
        assert_eq!(apply_generator(&b, g(1, 2)).unwrap(), a);
        let bad = chain(4, &[(1, 3), (2, 4)]);
        assert_eq!(apply_generator(&bad, g(1, 2)), Err(Error::NotMember));
    }

    #[test]
    fn worked_example_permutation() {
        let sorted = chain(8, &[(1, 3), (3, 8), (3, 5), (5, 7)]);
        let p = Permutation::parse("(1 3)(2 4)", 4).unwrap();
        assert_eq!(bubble_word(&p), vec![2, 1, 3, 2]);
        let expected = chain(8, &[(3, 8), (5, 7), (1, 8), (3, 7)]);
        assert_eq!(apply_permutation(&sorted, &p).unwrap(), expected);
        // the intermediate chains narrated step by step
        let after_first = apply_word(&sorted, &[2]).unwrap();
        assert_eq!(after_first, sorted);
        let after_second = apply_word(&sorted, &[3, 2]).unwrap();
        assert_eq!(after_second, chain(8, &[(1, 3), (3, 8), (5, 7), (3, 7)]));
        let after_third = apply_word(&sorted, &[1, 3, 2]).unwrap();
        assert_eq!(after_third, chain(8, &[(3, 8), (1, 8), (5, 7), (3, 7)]));
    }

    #[test]
    fn identity_and_size_mismatch() {
        let c = chain(8, &[(3, 8), (5, 7), (1, 8), (3, 7)]);
        assert_eq!(apply_permutation(&c, &Permutation::identity(4)).unwrap(), c);
        assert_eq!(
            apply_permutation(&c, &Permutation::identity(3)),
            Err(Error::SizeMismatch {
                expected: 4,
                found: 3
            })
        );
        let s = chain(3, &[(1, 3), (1, 2)]);
        let sigma1 = Permutation::parse("(1 2)", 2).unwrap();
        assert_eq!(apply_permutation(&s, &sigma1).unwrap(), s);
    }

    #[test]
    fn projections() {
        assert_eq!(
            projection(&chain(8, &[(3, 8), (5, 7), (1, 8), (3, 7)])),
            vec![3, 5, 1, 3]
        );
        assert!(projection(&Chain::empty(3).unwrap()).is_empty());
        assert_eq!(
            projection(&chain(8, &[(1, 3), (3, 8), (3, 5), (5, 7)])),
            vec![1, 3, 3, 5]
        );
    }

    #[test]
    fn sorting() {
        let c = chain(8, &[(3, 8), (5, 7), (1, 8), (3, 7)]);
        let (p, d) = sort_chain(&c).unwrap();
        assert_eq!(d, chain(8, &[(1, 3), (3, 8), (3, 5), (5, 7)]));
        assert_eq!(
            act_on_sequence(&p, &[3, 5, 1, 3]).unwrap(),
            vec![1, 3, 3, 5]
        );
        // same coset as (1 3)(2 4), which also sorts (3, 5, 1, 3)
        let q = Permutation::parse("(1 3)(2 4)", 4).unwrap();
        assert_eq!(apply_permutation(&c, &q).unwrap(), d);

        let sorted = chain(4, &[(1, 4), (1, 2), (2, 3)]);
        let (p, d) = sort_chain(&sorted).unwrap();
        assert!(p.is_identity());
        assert_eq!(d, sorted);

        let (p, d) = sort_chain(&chain(3, &[(2, 3), (1, 3)])).unwrap();
        assert_eq!(p, Permutation::parse("(1 2)", 2).unwrap());
        assert_eq!(d, chain(3, &[(1, 2), (2, 3)]));

        let (p, d) = sort_chain(&Chain::empty(5).unwrap()).unwrap();
        assert_eq!(p.n(), 0);
        assert!(d.is_empty());
    }

    #[test]
    fn words_and_permutations() {
        let p = Permutation::parse("(1 3)(2 4)", 4).unwrap();
        assert_eq!(word_to_permutation(4, &bubble_word(&p)).unwrap(), p);
        assert_eq!(word_to_permutation(4, &[2, 1, 3, 2]).unwrap(), p);
        assert!(word_to_permutation(4, &[4]).is_err());
        assert!(bubble_word(&Permutation::identity(3)).is_empty());
    }

    #[test]
    fn sequence_action() {
        let s1 = Permutation::parse("(1 2)", 3).unwrap();
        assert_eq!(act_on_sequence(&s1, &[7, 8, 9]).unwrap(), vec![8, 7, 9]);
        let cyc = Permutation::parse("(1 2 3)", 3).unwrap();
        // (p · s)_m = s_{p⁻¹(m)}
        assert_eq!(act_on_sequence(&cyc, &[7, 8, 9]).unwrap(), vec![9, 7, 8]);
    }
}
