//! Exact binomial coefficients.

/// `C(n, k)` in 64-bit arithmetic, `None` on overflow. Returns `Some(0)` when `k > n`.
pub fn checked_binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        let num = (acc as u128) * ((n - i) as u128);
        let next = num / ((i + 1) as u128);
        acc = u64::try_from(next).ok()?;
    }
    Some(acc)
}

/// `C(n, k)`; panics on overflow, which cannot happen for the ambient sizes used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    checked_binomial(n, k).unwrap_or_else(|| panic!("C({n}, {k}) overflows u64"))
}
