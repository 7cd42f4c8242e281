use num_traits::Zero;

use crate::coloring::Coloring;
use crate::error::{domain, Result};
use crate::profile::Natural;

/// A coloring of strictly increasing tuples of a fixed arity.
pub trait TupleColoring: Sync {
    fn arity(&self) -> usize;

    fn color(&self, tuple: &[&Natural]) -> Result<u64>;
}

/// `g_n(x_1..x_n) = Σ_i c(x_1 + ... + x_i) · 2^(i-1)` for a 2-coloring `c`.
pub struct DerivedTupleColoring<C> {
    base: C,
    arity: usize,
}

impl<C: Coloring> DerivedTupleColoring<C> {
    pub fn new(base: C, arity: usize) -> Result<Self> {
        if base.colors() != 2 {
            return domain("derived tuple colorings need a 2-coloring");
        }
        if arity == 0 || arity > 63 {
            return domain("arity must lie in [1, 63]");
        }
        Ok(DerivedTupleColoring { base, arity })
    }
}

impl<C: Coloring> TupleColoring for DerivedTupleColoring<C> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn color(&self, tuple: &[&Natural]) -> Result<u64> {
        if tuple.len() != self.arity {
            return domain(format!("expected a {}-tuple", self.arity));
        }
        if tuple.windows(2).any(|w| w[0] >= w[1]) {
            return domain("tuple must be strictly increasing");
        }
        let mut partial = Natural::zero();
        let mut code = 0u64;
        for (i, x) in tuple.iter().enumerate() {
            partial += *x;
            code |= (self.base.color(&partial)? as u64) << i;
        }
        Ok(code)
    }
}

/// Encoded color of `tuple` under the derived coloring of `c`.
pub fn derived_tuple_coloring<C: Coloring>(c: &C, tuple: &[Natural]) -> Result<u64> {
    let g = DerivedTupleColoring::new(c, tuple.len())?;
    let refs: Vec<&Natural> = tuple.iter().collect();
    g.color(&refs)
}

/// `f(x_1..x_n) = c(x_1 + ... + x_n)`.
pub struct SumColoring<C> {
    base: C,
    arity: usize,
}

impl<C: Coloring> SumColoring<C> {
    pub fn new(base: C, arity: usize) -> Self {
        SumColoring { base, arity }
    }
}

impl<C: Coloring> TupleColoring for SumColoring<C> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn color(&self, tuple: &[&Natural]) -> Result<u64> {
        let mut s = Natural::zero();
        for x in tuple {
            s += *x;
        }
        Ok(self.base.color(&s)? as u64)
    }
}

pub struct FnTupleColoring<F> {
    arity: usize,
    f: F,
}

impl<F: Fn(&[&Natural]) -> u64 + Sync> FnTupleColoring<F> {
    pub fn new(arity: usize, f: F) -> Self {
        FnTupleColoring { arity, f }
    }
}

impl<F: Fn(&[&Natural]) -> u64 + Sync> TupleColoring for FnTupleColoring<F> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn color(&self, tuple: &[&Natural]) -> Result<u64> {
        Ok((self.f)(tuple))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Parity;
    use crate::oracles::TableColoring;

    fn nats(xs: &[u64]) -> Vec<Natural> {
        xs.iter().map(|&x| Natural::from(x)).collect()
    }

    #[test]
    fn parity_examples() {
        assert_eq!(derived_tuple_coloring(&Parity, &nats(&[1, 2])).unwrap(), 3);
        assert_eq!(derived_tuple_coloring(&Parity, &nats(&[2, 4])).unwrap(), 0);
        assert_eq!(
            derived_tuple_coloring(&Parity, &nats(&[1, 2, 4])).unwrap(),
            7
        );
        assert_eq!(derived_tuple_coloring(&Parity, &nats(&[2, 3])).unwrap(), 2);
    }

    #[test]
    fn partial_sums_must_be_in_domain() {
        let c = TableColoring::new(2, vec![0, 1, 1]).unwrap();
        assert_eq!(derived_tuple_coloring(&c, &nats(&[1, 2])).unwrap(), 0b10);
        assert!(derived_tuple_coloring(&c, &nats(&[1, 4])).is_err());
        assert!(derived_tuple_coloring(&c, &nats(&[2, 1])).is_err());
        let three = TableColoring::new(3, vec![0]).unwrap();
        assert!(derived_tuple_coloring(&three, &nats(&[1])).is_err());
    }
}
