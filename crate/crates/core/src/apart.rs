//! Apart sets and their restricted finite-sum sets.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::profile::{lambda, mu, Natural};

/// Checks the apartness condition on a strictly increasing list of
/// positive integers: `μ(x) < λ(x')` for consecutive `x < x'`.
pub fn is_apart(xs: &[Natural]) -> Result<bool> {
    check_increasing(xs)?;
    for w in xs.windows(2) {
        if mu(&w[0])? >= lambda(&w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_increasing(xs: &[Natural]) -> Result<()> {
    if xs.iter().any(Zero::is_zero) {
        return domain("elements must be positive");
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return domain("elements must be strictly increasing");
    }
    Ok(())
}

/// A strictly increasing list of positive integers whose binary supports
/// occupy disjoint, ordered bit intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ApartSet {
    elements: Vec<Natural>,
    // (λ, μ) per element
    bounds: Vec<(u64, u64)>,
}

impl ApartSet {
    pub fn new(elements: Vec<Natural>) -> Result<Self> {
        if !is_apart(&elements)? {
            return Err(Error::Domain("elements are not apart".into()));
        }
        let bounds = elements
            .iter()
            .map(|x| Ok((lambda(x)?, mu(x)?)))
            .collect::<Result<_>>()?;
        Ok(ApartSet { elements, bounds })
    }

    pub fn from_u64s(xs: &[u64]) -> Result<Self> {
        ApartSet::new(xs.iter().map(|&x| Natural::from(x)).collect())
    }

    pub fn elements(&self) -> &[Natural] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lambda_at(&self, i: usize) -> u64 {
        self.bounds[i].0
    }

    pub fn mu_at(&self, i: usize) -> u64 {
        self.bounds[i].1
    }

    /// Subset picked by strictly increasing indices; apartness is inherited.
    pub fn select(&self, indices: &[usize]) -> ApartSet {
        ApartSet {
            elements: indices.iter().map(|&i| self.elements[i].clone()).collect(),
            bounds: indices.iter().map(|&i| self.bounds[i]).collect(),
        }
    }

    pub fn prefix(&self, len: usize) -> ApartSet {
        let len = len.min(self.len());
        ApartSet {
            elements: self.elements[..len].to_vec(),
            bounds: self.bounds[..len].to_vec(),
        }
    }

    pub fn sum_of(&self, indices: &[usize]) -> Natural {
        let mut s = Natural::zero();
        for &i in indices {
            s += &self.elements[i];
        }
        s
    }

    /// Every `a`-subset as `(indices, sum)`, in lexicographic index order.
    pub fn sums_of_size(&self, a: usize) -> impl Iterator<Item = (Vec<usize>, Natural)> + '_ {
        Combinations::new(self.len(), a).map(move |idx| {
            let s = self.sum_of(&idx);
            (idx, s)
        })
    }
}

/// `{2^(start_exp + i*stride) : 0 <= i < count}`.
pub fn apart_ground(count: usize, start_exp: u64, stride: u64) -> Result<ApartSet> {
    if count == 0 {
        return domain("ground must have at least one element");
    }
    if stride == 0 {
        return domain("stride must be positive");
    }
    let elements = (0..count as u64)
        .map(|i| {
            let mut x = Natural::zero();
            x.set_bit(start_exp + i * stride, true);
            x
        })
        .collect();
    ApartSet::new(elements)
}

/// Sums of exactly `a` distinct elements of `h`. Empty when `a > |h|`.
pub fn fs_exact(h: &ApartSet, a: usize) -> Result<BTreeSet<Natural>> {
    if a == 0 {
        return domain("sum length must be at least 1");
    }
    Ok(h.sums_of_size(a).map(|(_, s)| s).collect())
}

/// Union of `fs_exact(h, j)` over `j` in `lengths`.
pub fn fs_lengths(h: &ApartSet, lengths: &BTreeSet<usize>) -> Result<BTreeSet<Natural>> {
    if lengths.is_empty() {
        return domain("length set must be non-empty");
    }
    let mut out = BTreeSet::new();
    for &j in lengths {
        out.extend(fs_exact(h, j)?);
    }
    Ok(out)
}

/// Lexicographic `k`-combinations of `0..n`.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
