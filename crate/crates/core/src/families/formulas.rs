//! The closed-form polynomials shared by the solution families and the
//! symbolic identity suite.
//!
//! Formulas whose published form is refuted by their own worked examples
//! appear twice: the corrected form used by the generators, and a
//! `*_printed` variant kept for the regression tests that demonstrate the
//! failure. The correction ledger on the family descriptors documents each
//! case.

use crate::error::Result;
use crate::figurate::Rat;
use crate::polyring::{parse, MultiPoly, RatFunc};

pub fn p(text: &str) -> MultiPoly {
    parse(text).expect("static formula")
}

// ---------------------------------------------------------------------------
// t_x^2 + t_y^2 = z^2: the parametric polynomial family
// ---------------------------------------------------------------------------

/// Pell right side `f(k) = (u^4 - 4)/4 k^2 - u^3 k + u^2 + 1` in (u, k).
pub fn eq1_pell_f() -> MultiPoly {
    p("1/4*k^2*u^4 - k^2 - k*u^3 + u^2 + 1")
}

/// Printed first solution `x_1(u) = (u^5 - 2u^4 - u - 2)/2`.
pub fn eq1_x1_printed() -> MultiPoly {
    p("u^5 - 2*u^4 - u - 2").div_int(2)
}

/// Printed `y_1(u) = (u^2 + 1)(u^4 - 2u^3 - u^2 + 2u - 2)/4`.
pub fn eq1_y1_printed() -> MultiPoly {
    (p("u^2 + 1") * p("u^4 - 2*u^3 - u^2 + 2*u - 2")).div_int(4)
}

/// Printed `z_1(u)`, a degree-12 polynomial over 32.
pub fn eq1_z1_printed() -> MultiPoly {
    p("u^12 - 4*u^11 + 4*u^10 + 2*u^8 - 16*u^7 + 24*u^6 - 7*u^4 + 20*u^3 + 4*u^2 + 4")
        .div_int(32)
}

// ---------------------------------------------------------------------------
// t_x^2 + t_y^2 = t_z^2: rational parametrization
// ---------------------------------------------------------------------------

/// Rational closed forms x(u,v), y(u,v), z(u,v).
pub fn txyz_rat() -> Result<(RatFunc, RatFunc, RatFunc)> {
    let core = p("u^2 - 2*u*v + 3*v^2");
    let x = RatFunc::new(p("u") * &core, p("u^2 - 2*u*v + v^2") * p("v"))?;
    let y = RatFunc::new(p("u + v") * &core, p("2*u - 2*v") * p("v^2"))?;
    let z = RatFunc::new(
        p("u^4 - 2*u^3*v + 2*u^2*v^2 + 2*u*v^3 + v^4"),
        p("2*u^2 - 4*u*v + 2*v^2") * p("v^2"),
    )?;
    Ok((x, y, z))
}

// ---------------------------------------------------------------------------
// T_x^2 + T_y^2 = z^2
// ---------------------------------------------------------------------------

/// `f(x) = 8x^2 + 4x + 1` behind the consecutive-index family.
pub fn consec_f() -> MultiPoly {
    p("8*x^2 + 4*x + 1")
}

/// `h(u, v) = u^2 - 6uv + v^2 - 1`, the curve carrying the Lucas pairs.
pub fn lucas_h() -> MultiPoly {
    p("u^2 - 6*u*v + v^2 - 1")
}

/// Degree-4 kernel of the first Lucas-family z: `Z(u, v)`.
pub fn lucas_z_kernel() -> MultiPoly {
    p("105*v^4 - 108*u*v^3 + 150*u^2*v^2 - 96*v^2 - 108*u^3*v + 64*u*v + 105*u^4 - 96*u^2 - 9")
}

/// Degree-4 kernel of the second Lucas-family z: `Z'(u, v)`.
pub fn lucas_z_kernel_prime() -> MultiPoly {
    p("105*v^4 - 108*u*v^3 + 150*u^2*v^2 + 96*v^2 - 108*u^3*v - 64*u*v + 105*u^4 + 96*u^2 - 9")
}

/// Closed forms (x, y, z) of the first Lucas family.
pub fn lucas_xyz() -> (MultiPoly, MultiPoly, MultiPoly) {
    let x = p("v^2 - u^2 - 1");
    let y = p("3*v^2 - 2*u*v + 3*u^2 - 3").div_int(2);
    let z = (p("v^2 - u^2") * lucas_z_kernel()).div_int(192);
    (x, y, z)
}

/// Closed forms (x', y', z') of the second Lucas family.
pub fn lucas_xyz_prime() -> (MultiPoly, MultiPoly, MultiPoly) {
    let (x, y, _) = lucas_xyz();
    let z = (p("v^2 - u^2") * lucas_z_kernel_prime()).div_int(192);
    (x, y + MultiPoly::one(), z)
}

// ---------------------------------------------------------------------------
// Harmonic progressions: 1/t_x + 1/t_y = 2/t_z
// ---------------------------------------------------------------------------

/// `f(x, y) = x^2 - x + y^2 - y - 4xy`, vanishing on consecutive pairs.
pub fn harmonic_f() -> MultiPoly {
    p("x^2 - 4*x*y + y^2 - x - y")
}

// ---------------------------------------------------------------------------
// t_z = (x^4 + y^4)/2
// ---------------------------------------------------------------------------

/// `f(w) = 60w^2 - 61w + 16`, the Pell right side of the quartic family.
pub fn quartic_f() -> MultiPoly {
    p("60*w^2 - 61*w + 16")
}

// ---------------------------------------------------------------------------
// Quotient and product families
// ---------------------------------------------------------------------------

/// Corrected quotient family A: `y = z = (u^3 + 3u^2 + 2u - 4)/2`.
/// Forced by `t_y T_x = T_y  <=>  y + 2 = u(u+1)(u+2)/2`.
pub fn quot_a_y() -> MultiPoly {
    p("u^3 + 3*u^2 + 2*u - 4").div_int(2)
}

/// Published variant with middle coefficient `u^2`; fails at u = 2.
pub fn quot_a_y_printed() -> MultiPoly {
    p("u^3 + u^2 + 2*u - 4").div_int(2)
}

/// Corrected quotient family B: `z = 3T_u + 1 = (u^3 + 3u^2 + 2u + 2)/2`.
pub fn quot_b_z() -> MultiPoly {
    p("u^3 + 3*u^2 + 2*u + 2").div_int(2)
}

/// Published variant; fails at u = 2.
pub fn quot_b_z_printed() -> MultiPoly {
    p("u^3 + u^2 + 2*u + 2").div_int(2)
}

/// The nine printed product-family rows (x_i, y_i, z_i) with
/// `t_z = T_x T_y`; all nine verify as printed.
pub fn product_table() -> Vec<(MultiPoly, MultiPoly, MultiPoly)> {
    let f = p("81*u^3 + 27*u^2 + 2*u - 2").div_int(2);
    let g = p("81*u^3 - u - 2").div_int(2);
    let h = p("81*u^3 - 27*u^2 + 2*u - 2").div_int(2);
    let two = MultiPoly::from_int(2);
    let four = MultiPoly::from_int(4);
    let five = MultiPoly::from_int(5);
    let one = MultiPoly::one();
    vec![
        (p("9*u"), f.clone(), (&f + &two) * &f),
        (
            p("9*u"),
            &four * &f + &one,
            p("u") * p("9*u + 1") * p("9*u + 2") * p("162*u^3 + 54*u^2 + 4*u - 3"),
        ),
        (
            p("9*u"),
            &four * &f + &five,
            p("u") * p("9*u + 1") * p("9*u + 2") * p("162*u^3 + 54*u^2 + 4*u + 3"),
        ),
        (p("9*u - 1"), g.clone(), (&g + &two) * &g),
        (
            p("9*u - 1"),
            &four * &g + &one,
            p("u") * p("9*u - 1") * p("9*u + 1") * p("162*u^3 - 2*u - 3"),
        ),
        (
            p("9*u - 1"),
            &four * &g + &five,
            p("u") * p("9*u - 1") * p("9*u + 1") * p("162*u^3 - 2*u + 3"),
        ),
        (p("9*u - 2"), h.clone(), (&h + &two) * &h),
        (
            p("9*u - 2"),
            &four * &h + &one,
            p("u") * p("9*u - 2") * p("9*u - 1") * p("162*u^3 - 54*u^2 + 4*u - 3"),
        ),
        (
            p("9*u - 2"),
            &four * &h + &five,
            p("u") * p("9*u - 2") * p("9*u - 1") * p("162*u^3 - 54*u^2 + 4*u + 3"),
        ),
    ]
}

// ---------------------------------------------------------------------------
// t_p^2 + t_q^2 = t_r^2 + t_s^2
// ---------------------------------------------------------------------------

/// Corrected two-pair quadruple (p, q, r, s) in b; the leading factor of
/// p(b) is `b - 1`, forced by the derivation and by the b = 4 instance.
pub fn two_pair_pqrs() -> (MultiPoly, MultiPoly, MultiPoly, MultiPoly) {
    (
        (p("b - 1") * p("b^3 + 4*b^2 + 2*b + 2")).div_int(6),
        p("b^5 + b^3 - 2*b - 6").div_int(6),
        (p("b + 1") * p("b^3 - 4*b^2 + 2*b - 2")).div_int(6),
        (p("b") * p("b^2 - 1") * p("b^2 + 2")).div_int(6),
    )
}

/// Published p(b) with leading factor `b + 1`; fails at b = 4.
pub fn two_pair_p_printed() -> MultiPoly {
    (p("b + 1") * p("b^3 + 4*b^2 + 2*b + 2")).div_int(6)
}

// ---------------------------------------------------------------------------
// z^3 = T_x + T_y
// ---------------------------------------------------------------------------

/// `F(x, y) = x^2 - 24y^2 - 4`, invariant of the cube-sum family.
pub fn cube_big_f() -> MultiPoly {
    p("x^2 - 24*y^2 - 4")
}

// ---------------------------------------------------------------------------
// z^2 = T_x T_y
// ---------------------------------------------------------------------------

/// `f1(x) = (x + 2)(2x + 1)/9`.
pub fn sqprod_f1() -> MultiPoly {
    (p("x + 2") * p("2*x + 1")).div_int(9)
}

/// `f2(x) = x(2x + 3)/9`.
pub fn sqprod_f2() -> MultiPoly {
    (p("x") * p("2*x + 3")).div_int(9)
}

// ---------------------------------------------------------------------------
// small helpers shared by identity checks
// ---------------------------------------------------------------------------

/// `t` lifted to rational functions.
pub fn tri_ratfunc(r: &RatFunc) -> Result<RatFunc> {
    let one = RatFunc::from_poly(MultiPoly::one());
    let half = RatFunc::from_poly(MultiPoly::constant(Rat::new(1.into(), 2.into())));
    r.mul(&r.add(&one)?)?.mul(&half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    use crate::figurate::{Int, Rat};

    #[test]
    fn lucas_kernel_value() {
        // Z(6, 35) and the z it induces for the first Lucas pair
        let mut at = BTreeMap::new();
        at.insert("u".to_string(), Rat::from_integer(Int::from(6)));
        at.insert("v".to_string(), Rat::from_integer(Int::from(35)));
        let z_kernel = lucas_z_kernel().eval(&at).unwrap();
        assert_eq!(z_kernel, Rat::from_integer(Int::from(135_609_600)));
        let (_, _, z) = lucas_xyz();
        assert_eq!(z.eval(&at).unwrap(), Rat::from_integer(Int::from(839_790_700i64)));
    }

    #[test]
    fn txyz_sample_point() {
        let (x, y, z) = txyz_rat().unwrap();
        let mut at = BTreeMap::new();
        at.insert("u".to_string(), Rat::from_integer(Int::from(1)));
        at.insert("v".to_string(), Rat::from_integer(Int::from(2)));
        assert_eq!(x.eval(&at).unwrap(), Rat::new(Int::from(9), Int::from(2)));
        assert_eq!(y.eval(&at).unwrap(), Rat::new(Int::from(-27), Int::from(8)));
        assert_eq!(z.eval(&at).unwrap(), Rat::new(Int::from(37), Int::from(8)));
    }

    #[test]
    fn quot_samples() {
        let mut at = BTreeMap::new();
        at.insert("u".to_string(), Rat::from_integer(Int::from(2)));
        assert_eq!(quot_a_y().eval(&at).unwrap(), Rat::from_integer(Int::from(10)));
        assert_eq!(quot_b_z().eval(&at).unwrap(), Rat::from_integer(Int::from(13)));
    }
}
