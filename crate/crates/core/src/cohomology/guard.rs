//! Size guard for cochain computations.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_DEGREE: usize = 6;
pub const DEFAULT_MEMORY_MB: u64 = 2048;
pub const MEMORY_ENV: &str = "LEIBNIZ_COH_MEMORY_MB";

/// Bytes budgeted per stored scalar. Rationals grow, so this is generous.
const BYTES_PER_ENTRY: u128 = 32;

pub fn memory_limit_mb() -> u64 {
    std::env::var(MEMORY_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MEMORY_MB)
}

/// Rough peak memory for computing `HL^n`: the sparse `d^n` with
/// `dim M · (dim L)^{n+1}` rows plus a dense basis of the cocycles.
pub fn estimate_mb(dim_l: usize, dim_m: usize, n: usize) -> u64 {
    let (d, dm, n) = (dim_l as u128, dim_m as u128, n as u128);
    let rows = dm.saturating_mul(d.saturating_pow(n as u32 + 1));
    let cols = dm.saturating_mul(d.saturating_pow(n as u32));
    let per_row = (n + 1) * dm.max(1) + n * (n + 1) / 2 * d;
    let entries = rows.saturating_mul(per_row).saturating_add(cols.saturating_mul(cols));
    let mb = entries.saturating_mul(BYTES_PER_ENTRY) >> 20;
    mb.min(u64::MAX as u128) as u64
}

/// Refuses, with the estimate, when degree `n` would exceed the limit.
pub fn check_memory(dim_l: usize, dim_m: usize, n: usize) -> Result<()> {
    let estimate_mb = estimate_mb(dim_l, dim_m, n);
    let limit_mb = memory_limit_mb();
    if estimate_mb > limit_mb {
        return Err(Error::MemoryGuard { estimate_mb, limit_mb });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn estimates_grow_and_refuse() {
        assert!(estimate_mb(2, 2, 6) < 10);
        assert!(estimate_mb(3, 3, 6) < DEFAULT_MEMORY_MB);
        assert!(estimate_mb(3, 3, 9) > DEFAULT_MEMORY_MB);
        assert!(estimate_mb(40, 40, 40) > 0);
        assert!(check_memory(2, 1, 6).is_ok());
        assert!(matches!(check_memory(4, 4, 12), Err(Error::MemoryGuard { .. })));
    }
}
