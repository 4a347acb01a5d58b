//! Exact integer kernel: figurate-number evaluation and inversion, integer
//! roots, digit expansions, palindrome tests.
//!
//! Indices may be negative everywhere; `t` and `T` are evaluated by formula,
//! which makes the reflection identities `t_{-n} = t_{n-1}` and `T_{-1} =
//! T_{-2} = 0` theorems rather than special cases.

use num::{BigInt, BigRational, BigUint, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer scalar.
pub type Int = BigInt;
/// Exact rational scalar, always reduced, denominator positive.
pub type Rat = BigRational;

/// Triangular number `t_n = n(n+1)/2`, defined for all integers.
pub fn tri(n: &Int) -> Int {
    (n * (n + 1)) / 2
}

/// Tetrahedral number `T_n = n(n+1)(n+2)/6`, defined for all integers.
pub fn tet(n: &Int) -> Int {
    (n * (n + 1) * (n + 2)) / 6
}

/// `t_x` for a rational index, used by rational parametric solutions.
pub fn tri_rat(x: &Rat) -> Rat {
    x * (x + Rat::one()) / Rat::from_integer(Int::from(2))
}

/// `T_x` for a rational index.
pub fn tet_rat(x: &Rat) -> Rat {
    x * (x + Rat::one()) * (x + Rat::from_integer(Int::from(2)))
        / Rat::from_integer(Int::from(6))
}

/// Canonical nonnegative twin of a triangular index: `t_n = t_{-n-1}`, so
/// every negative index maps to `-n - 1 >= 0`.
pub fn canonical_tri_index(n: &Int) -> Int {
    if n.is_negative() {
        -n - 1
    } else {
        n.clone()
    }
}

/// Floor square root of a 128-bit value.
pub fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128;
    if x == 0 {
        x = 1;
    }
    // Two Newton steps wash out the float seed error, then a short exact
    // fixup. Comparisons go through division so nothing overflows.
    x = (x + n / x) >> 1;
    x = (x + n / x) >> 1;
    while x > n / x {
        x -= 1;
    }
    while x + 1 <= n / (x + 1) {
        x += 1;
    }
    x
}

/// Floor square root. The result `r` satisfies `r^2 <= n < (r+1)^2`.
///
/// Values that fit 128 bits take the fixed-width path; larger values run
/// exact Newton iteration on big integers. Both paths agree bit for bit
/// (tested against each other and against `num`'s implementation).
pub fn isqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::domain("isqrt: negative input"));
    }
    if let Some(v) = n.to_u128() {
        return Ok(Int::from(isqrt_u128(v)));
    }
    // Seed with a power of two >= sqrt(n); Newton with floor division then
    // descends monotonically to the floor root.
    let mut x = Int::one() << ((n.bits() + 1) / 2) as usize;
    loop {
        let y: Int = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    Ok(x)
}

/// True iff `n` is a perfect square.
pub fn is_square(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = isqrt(n).expect("nonnegative");
    &(&r * &r) == n
}

/// Floor `k`-th root of `n >= 0`, `k >= 1`.
pub fn iroot(n: &Int, k: u32) -> Result<Int> {
    if k == 0 {
        return Err(Error::domain("iroot: k must be >= 1"));
    }
    if n.is_negative() {
        return Err(Error::domain("iroot: negative input"));
    }
    if k == 1 || n.is_zero() || n.is_one() {
        return Ok(n.clone());
    }
    let mut x = Int::one() << (n.bits() / k as u64 + 1) as usize;
    loop {
        let xk1 = num::pow::pow(x.clone(), (k - 1) as usize);
        let y: Int = (&x * (k - 1) + n / xk1) / k;
        if y >= x {
            break;
        }
        x = y;
    }
    Ok(x)
}

/// True iff `n = r^k` for some integer `r >= 0` (negative `n` allowed for
/// odd `k`).
pub fn is_kth_power(n: &Int, k: u32) -> bool {
    if k == 0 {
        return false;
    }
    if n.is_negative() {
        if k % 2 == 0 {
            return false;
        }
        return is_kth_power(&-n, k);
    }
    let r = iroot(n, k).expect("nonnegative");
    &num::pow::pow(r, k as usize) == n
}

/// Inverts `tri`: the unique `n >= 0` with `t_n = m`, if any.
///
/// Decided by testing `8m + 1` for squareness; the root is odd exactly when
/// the test succeeds.
pub fn tri_index(m: &Int) -> Option<Int> {
    if m.is_negative() {
        return None;
    }
    let s = m * 8 + 1;
    let r = isqrt(&s).expect("nonnegative");
    if &(&r * &r) == &s {
        Some((r - 1) / 2)
    } else {
        None
    }
}

/// Inverts `tet`: the unique `n >= 0` with `T_n = m`, if any.
///
/// Brackets with the cube root of `6m`, then adjusts by up to two steps.
pub fn tet_index(m: &Int) -> Option<Int> {
    if m.is_negative() {
        return None;
    }
    if m.is_zero() {
        return Some(Int::zero());
    }
    let c = iroot(&(m * 6), 3).expect("nonnegative");
    let mut cand: Int = &c - 2;
    for _ in 0..5 {
        if !cand.is_negative() && &tet(&cand) == m {
            return Some(cand);
        }
        cand += 1;
    }
    None
}

/// Greatest common divisor, nonnegative; `gcd(0, 0) = 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// Base-`b` digit expansion, most significant digit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitString {
    base: u32,
    digits: Vec<u32>,
}

impl DigitString {
    pub fn base(&self) -> u32 {
        self.base
    }

    /// Digits, most significant first. The value 0 is the single digit `[0]`;
    /// otherwise there is no leading zero.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Reconstructs the source integer.
    pub fn value(&self) -> Int {
        let mut acc = Int::zero();
        for &d in &self.digits {
            acc = acc * self.base + d;
        }
        acc
    }

    pub fn is_palindrome(&self) -> bool {
        let d = &self.digits;
        (0..d.len() / 2).all(|i| d[i] == d[d.len() - 1 - i])
    }
}

impl std::fmt::Display for DigitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        const ALPHABET: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";
        if self.base <= 36 {
            for &d in &self.digits {
                write!(f, "{}", ALPHABET[d as usize] as char)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

/// Digit expansion of `n >= 0` in base `b >= 2`.
pub fn digits(n: &Int, base: u32) -> Result<DigitString> {
    if base < 2 {
        return Err(Error::domain("digits: base must be >= 2"));
    }
    if n.is_negative() {
        return Err(Error::domain("digits: negative input"));
    }
    let digits = if base <= 256 {
        // num special-cases power-of-two radices; this keeps the base-2
        // palindrome constructions cheap even for million-bit values.
        n.magnitude().to_radix_be(base).iter().map(|&d| d as u32).collect()
    } else {
        let mut ds = Vec::new();
        let mut m: BigUint = n.magnitude().clone();
        let big_base = BigUint::from(base);
        while !m.is_zero() {
            let (quo, rem) = m.div_rem(&big_base);
            ds.push(rem.to_u32().expect("remainder below base"));
            m = quo;
        }
        if ds.is_empty() {
            ds.push(0);
        }
        ds.reverse();
        ds
    };
    Ok(DigitString { base, digits })
}

/// True iff the base-`b` digit string of `n >= 0` equals its reversal.
pub fn is_palindrome(n: &Int, base: u32) -> Result<bool> {
    Ok(digits(n, base)?.is_palindrome())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn tri_values_and_reflection() {
        assert_eq!(tri(&int(0)), int(0));
        assert_eq!(tri(&int(-3)), int(3));
        assert_eq!(tri(&int(2)), int(3));
        assert_eq!(tri(&int(16)), int(136));
        for n in -50i64..=50 {
            assert_eq!(tri(&int(-n)), tri(&int(n - 1)));
        }
    }

    #[test]
    fn tet_values() {
        assert_eq!(tet(&int(5)), int(35));
        assert_eq!(tet(&int(7)), int(84));
        assert_eq!(
            tet(&int(5)).pow(2) + tet(&int(7)).pow(2),
            int(91).pow(2)
        );
        assert_eq!(tet(&int(0)), int(0));
        assert_eq!(tet(&int(-1)), int(0));
        assert_eq!(tet(&int(-2)), int(0));
        assert_eq!(tet(&int(19)), int(1330));
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(841)).unwrap(), int(29));
        assert_eq!(isqrt(&int(2_920_681)).unwrap(), int(1709));
        assert!(isqrt(&int(-1)).is_err());
    }

    #[test]
    fn roots_and_powers() {
        assert!(is_kth_power(&int(10000), 4));
        assert!(!is_kth_power(&int(10001), 4));
        assert_eq!(iroot(&int(1331), 3).unwrap(), int(11));
        assert!(is_kth_power(&int(-27), 3));
        assert!(!is_kth_power(&int(-16), 4));
        assert!(iroot(&int(5), 0).is_err());
    }

    #[test]
    fn tri_index_examples() {
        assert_eq!(tri_index(&int(136)), Some(int(16)));
        assert_eq!(tri_index(&int(2)), None);
        assert_eq!(tri_index(&int(0)), Some(int(0)));
        assert_eq!(tri_index(&int(-5)), None);
    }

    #[test]
    fn tet_index_examples() {
        assert_eq!(tet_index(&int(1330)), Some(int(19)));
        assert_eq!(tet_index(&int(5)), None);
        assert_eq!(tet_index(&int(0)), Some(int(0)));
    }

    #[test]
    fn digit_examples() {
        assert_eq!(digits(&int(153), 2).unwrap().to_string(), "10011001");
        assert_eq!(digits(&int(15), 2).unwrap().to_string(), "1111");
        assert_eq!(digits(&int(0), 10).unwrap().to_string(), "0");
        assert!(digits(&int(5), 1).is_err());
        assert!(digits(&int(-5), 10).is_err());
        let d = digits(&int(123_456), 1000).unwrap();
        assert_eq!(d.digits(), &[123, 456]);
        assert_eq!(d.value(), int(123_456));
    }

    #[test]
    fn palindrome_examples() {
        assert!(is_palindrome(&int(153), 2).unwrap());
        assert!(is_palindrome(&int(55), 10).unwrap());
        assert!(!is_palindrome(&int(56), 10).unwrap());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&int(741), &int(1540)), int(1));
        assert_eq!(gcd(&int(0), &int(7)), int(7));
        assert_eq!(gcd(&int(0), &int(0)), int(0));
        assert_eq!(gcd(&tet(&int(143)), &tet(&int(237))), int(1));
    }

    #[test]
    fn canonical_index() {
        assert_eq!(canonical_tri_index(&int(-1)), int(0));
        assert_eq!(canonical_tri_index(&int(-17)), int(16));
        assert_eq!(canonical_tri_index(&int(4)), int(4));
        for n in -100i64..0 {
            assert_eq!(tri(&int(n)), tri(&canonical_tri_index(&int(n))));
        }
    }

    #[test]
    fn rational_figurates() {
        let x = Rat::new(int(9), int(2));
        assert_eq!(tri_rat(&x), Rat::new(int(99), int(8)));
        let neg = Rat::new(int(-27), int(8));
        // reflection holds over the rationals as well
        assert_eq!(tri_rat(&neg), tri_rat(&(-&neg - Rat::one())));
    }
}
