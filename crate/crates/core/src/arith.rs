use crate::error::{Error, Result};

pub(crate) fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| {
        acc.checked_mul(k)
            .ok_or_else(|| Error::Overflow(format!("{n}!")))
    })
}

/// `n * (n-1) * ... * (n-k+1)`.
pub(crate) fn falling_factorial(n: usize, k: usize) -> Result<u128> {
    debug_assert!(k <= n);
    ((n - k + 1) as u128..=n as u128).try_fold(1u128, |acc, f| {
        acc.checked_mul(f)
            .ok_or_else(|| Error::Overflow(format!("{n}!/({n}-{k})!")))
    })
}

pub(crate) fn check_cap(requested: u128, cap: u128) -> Result<()> {
    if requested > cap {
        Err(Error::CapExceeded { requested, cap })
    } else {
        Ok(())
    }
}
