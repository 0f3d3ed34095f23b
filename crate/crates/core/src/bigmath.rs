use num_bigint::BigUint;
use num_traits::Zero;

/// Natural log of a big integer; `-inf` for zero.
pub fn big_ln(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return biguint_to_f64(x).ln();
    }
    let shift = bits - 64;
    let top = biguint_to_f64(&(x >> shift));
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn biguint_to_f64(x: &BigUint) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::INFINITY)
}

/// `x^(1/k)` computed in log space.
pub fn big_root(x: &BigUint, k: u32) -> f64 {
    (big_ln(x) / f64::from(k)).exp()
}

/// Serialise as a decimal string.
pub fn serialize_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}
