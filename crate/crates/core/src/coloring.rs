//! Colorings of the positive integers.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::profile::Natural;

/// A deterministic map from (a declared domain of) positive integers to
/// colors in `[0, colors())`. Out-of-domain queries are errors.
pub trait Coloring: Sync {
    fn colors(&self) -> u32;

    fn color(&self, n: &Natural) -> Result<u32>;

    /// Short identifier used in reports.
    fn describe(&self) -> String;
}

impl<C: Coloring + ?Sized> Coloring for &C {
    fn colors(&self) -> u32 {
        (**self).colors()
    }
    fn color(&self, n: &Natural) -> Result<u32> {
        (**self).color(n)
    }
    fn describe(&self) -> String {
        (**self).describe()
    }
}

impl<C: Coloring + ?Sized + Send> Coloring for Box<C> {
    fn colors(&self) -> u32 {
        (**self).colors()
    }
    fn color(&self, n: &Natural) -> Result<u32> {
        (**self).color(n)
    }
    fn describe(&self) -> String {
        (**self).describe()
    }
}

fn positive(n: &Natural) -> Result<()> {
    if n.is_zero() {
        return Err(Error::OutsideColoring {
            value: "0".into(),
            domain: "n >= 1".into(),
        });
    }
    Ok(())
}

/// Every positive integer gets the same color.
#[derive(Debug, Clone, Copy)]
pub struct Constant {
    pub colors: u32,
    pub color: u32,
}

impl Coloring for Constant {
    fn colors(&self) -> u32 {
        self.colors
    }
    fn color(&self, n: &Natural) -> Result<u32> {
        positive(n)?;
        Ok(self.color)
    }
    fn describe(&self) -> String {
        format!("constant:{}", self.color)
    }
}

/// `n mod 2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Parity;

impl Coloring for Parity {
    fn colors(&self) -> u32 {
        2
    }
    fn color(&self, n: &Natural) -> Result<u32> {
        positive(n)?;
        Ok(n.bit(0) as u32)
    }
    fn describe(&self) -> String {
        "parity".into()
    }
}

/// Parity of the number of ones in the binary expansion.
#[derive(Debug, Clone, Copy, Default)]
pub struct PopcountParity;

impl Coloring for PopcountParity {
    fn colors(&self) -> u32 {
        2
    }
    fn color(&self, n: &Natural) -> Result<u32> {
        positive(n)?;
        Ok((n.count_ones() % 2) as u32)
    }
    fn describe(&self) -> String {
        "popcount-parity".into()
    }
}

/// A coloring backed by a closure over the positive integers.
pub struct FnColoring<F> {
    colors: u32,
    name: String,
    f: F,
}

impl<F> FnColoring<F>
where
    F: Fn(&Natural) -> u32 + Sync,
{
    pub fn new(name: impl Into<String>, colors: u32, f: F) -> Self {
        FnColoring {
            colors,
            name: name.into(),
            f,
        }
    }
}

impl<F> Coloring for FnColoring<F>
where
    F: Fn(&Natural) -> u32 + Sync,
{
    fn colors(&self) -> u32 {
        self.colors
    }
    fn color(&self, n: &Natural) -> Result<u32> {
        positive(n)?;
        let c = (self.f)(n);
        debug_assert!(c < self.colors);
        Ok(c)
    }
    fn describe(&self) -> String {
        self.name.clone()
    }
}
