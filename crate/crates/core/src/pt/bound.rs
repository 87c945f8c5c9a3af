use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// Largest exponent for which [`kappa_bound_string`] prints all digits.
const DECIMAL_EXPONENT_LIMIT: u64 = 4096;

/// `2^|A| · |A| · (p|A| + 1)` with `p = max(k1, k2) + 1`.
pub fn kappa_bound_exponent(k1: usize, k2: usize, alphabet_size: usize) -> BigUint {
    let p = k1.max(k2) as u64 + 1;
    let m = alphabet_size as u64;
    (BigUint::one() << alphabet_size) * m * (p * m + 1)
}

/// `κ = p|A| · 2^(2^|A| · |A| · (p|A| + 1))` with `p = max(k1, k2) + 1`:
/// a level at which separability by any piecewise testable language
/// implies separability at that level.
///
/// # Panics
/// When the exponent does not fit in a `u64`.
pub fn kappa_bound(k1: usize, k2: usize, alphabet_size: usize) -> BigUint {
    let p = k1.max(k2) as u64 + 1;
    let e = kappa_bound_exponent(k1, k2, alphabet_size)
        .to_u64()
        .expect("exponent fits in u64");
    BigUint::from(p * alphabet_size as u64) << e
}

/// The bound in decimal when its exponent is at most 4096, otherwise as
/// `M*2^E`.
pub fn kappa_bound_string(k1: usize, k2: usize, alphabet_size: usize) -> String {
    let e = kappa_bound_exponent(k1, k2, alphabet_size);
    match e.to_u64() {
        Some(x) if x <= DECIMAL_EXPONENT_LIMIT => kappa_bound(k1, k2, alphabet_size).to_string(),
        _ => format!("{}*2^{}", (k1.max(k2) + 1) * alphabet_size, e),
    }
}
