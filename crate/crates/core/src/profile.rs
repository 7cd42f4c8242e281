//! Binary supports of positive integers.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{domain, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// A pair of consecutive exponents `(t_i, t_{i+1})` in a binary expansion.
pub type Gap = (u64, u64);

/// The exponent decomposition `n = 2^{t_1} + ... + 2^{t_k}`, `t_1 < ... < t_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BitProfile {
    exponents: Vec<u64>,
}

impl BitProfile {
    pub fn of(n: &Natural) -> Result<Self> {
        if n.is_zero() {
            return domain("bit profile of 0 is undefined");
        }
        Ok(BitProfile {
            exponents: exponents(n),
        })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Least exponent.
    pub fn lambda(&self) -> u64 {
        self.exponents[0]
    }

    /// Greatest exponent.
    pub fn mu(&self) -> u64 {
        self.exponents[self.exponents.len() - 1]
    }

    pub fn gaps(&self) -> impl Iterator<Item = Gap> + '_ {
        self.exponents.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn gap_list(&self) -> Vec<Gap> {
        self.gaps().collect()
    }

    pub fn reconstruct(&self) -> Natural {
        let mut n = Natural::zero();
        for &e in &self.exponents {
            n.set_bit(e, true);
        }
        n
    }
}

pub fn bit_profile(n: &Natural) -> Result<BitProfile> {
    BitProfile::of(n)
}

fn exponents(n: &Natural) -> Vec<u64> {
    let mut out = Vec::with_capacity(n.count_ones() as usize);
    for (word_idx, mut word) in n.iter_u64_digits().enumerate() {
        while word != 0 {
            let bit = word.trailing_zeros() as u64;
            out.push(word_idx as u64 * 64 + bit);
            word &= word - 1;
        }
    }
    out
}

/// `λ(n)`; `n` must be positive.
pub fn lambda(n: &Natural) -> Result<u64> {
    match n.trailing_zeros() {
        Some(t) => Ok(t),
        None => domain("λ(0) is undefined"),
    }
}

/// `μ(n)`; `n` must be positive.
pub fn mu(n: &Natural) -> Result<u64> {
    if n.is_zero() {
        return domain("μ(0) is undefined");
    }
    Ok(n.bits() - 1)
}

pub(crate) fn serialize_decimal<S: serde::Serializer>(
    n: &Natural,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn ten() {
        let p = bit_profile(&nat(10)).unwrap();
        assert_eq!(p.exponents(), &[1, 3]);
        assert_eq!((p.lambda(), p.mu()), (1, 3));
        assert_eq!(p.gap_list(), vec![(1, 3)]);
    }

    #[test]
    fn one() {
        let p = bit_profile(&nat(1)).unwrap();
        assert_eq!(p.exponents(), &[0]);
        assert_eq!((p.lambda(), p.mu()), (0, 0));
        assert!(p.gap_list().is_empty());
    }

    #[test]
    fn eleven() {
        let p = bit_profile(&nat(11)).unwrap();
        assert_eq!(p.exponents(), &[0, 1, 3]);
        assert_eq!((p.lambda(), p.mu()), (0, 3));
        assert_eq!(p.gap_list(), vec![(0, 1), (1, 3)]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(bit_profile(&nat(0)).is_err());
        assert!(lambda(&nat(0)).is_err());
        assert!(mu(&nat(0)).is_err());
    }

    #[test]
    fn wide_numbers() {
        let n = (Natural::from(1u8) << 200u32) + (Natural::from(1u8) << 64u32) + nat(2);
        let p = bit_profile(&n).unwrap();
        assert_eq!(p.exponents(), &[1, 64, 200]);
        assert_eq!(lambda(&n).unwrap(), 1);
        assert_eq!(mu(&n).unwrap(), 200);
    }

    proptest! {
        #[test]
        fn round_trip(words in proptest::collection::vec(any::<u64>(), 1..5)) {
            let n = Natural::new(words.iter().flat_map(|w| [*w as u32, (*w >> 32) as u32]).collect());
            prop_assume!(!n.is_zero());
            let p = bit_profile(&n).unwrap();
            prop_assert_eq!(p.reconstruct(), n.clone());
            prop_assert!(p.exponents().windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(p.lambda(), lambda(&n).unwrap());
            prop_assert_eq!(p.mu(), mu(&n).unwrap());
            prop_assert_eq!(p.gap_list().len() + 1, p.exponents().len());
        }
    }
}
