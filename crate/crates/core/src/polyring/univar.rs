//! Univariate operations: monic GCD, Sylvester resultants, and
//! integer-valuedness on arithmetic progressions.

use num::{One, Signed, Zero};

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::figurate::{Int, Rat};

/// Dense ascending coefficient vector of a polynomial univariate in `var`.
/// Errors if any other variable occurs.
fn univar_coeffs(p: &MultiPoly, var: &str) -> Result<Vec<Rat>> {
    for v in p.vars() {
        if v != var {
            return Err(Error::domain(format!(
                "expected a polynomial univariate in `{var}`, found variable `{v}`"
            )));
        }
    }
    let deg = p.degree_in(var) as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (factors, c) in p.terms() {
        let e = factors.first().map(|&(_, e)| e as usize).unwrap_or(0);
        coeffs[e] = c.clone();
    }
    Ok(coeffs)
}

fn from_univar_coeffs(var: &str, coeffs: &[Rat]) -> MultiPoly {
    MultiPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (c.clone(), vec![(var.to_string(), e as u32)])),
    )
}

fn trim(coeffs: &mut Vec<Rat>) {
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
}

/// Remainder of dense univariate division.
fn rem(mut a: Vec<Rat>, b: &[Rat]) -> Vec<Rat> {
    let db = b.len() - 1;
    let lead = &b[db];
    while a.len() > db {
        let da = a.len() - 1;
        let q = &a[da] / lead;
        if !q.is_zero() {
            for i in 0..=db {
                let t = &q * &b[i];
                a[da - db + i] -= t;
            }
        }
        a.pop();
        trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

/// Monic greatest common divisor over the rationals, by the Euclidean
/// remainder sequence. `uni_gcd(0, 0)` is 0; otherwise the result is monic
/// and divides both inputs exactly.
pub fn uni_gcd(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let mut a = univar_coeffs(p, var)?;
    let mut b = univar_coeffs(q, var)?;
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        return Ok(MultiPoly::zero());
    }
    let lead = a.last().unwrap().clone();
    for c in &mut a {
        *c /= &lead;
    }
    Ok(from_univar_coeffs(var, &a))
}

/// Resultant of two nonzero polynomials univariate in `var`, as the exact
/// determinant of their Sylvester matrix (coefficient rows in decreasing
/// degree, the second argument's rows first, so that
/// `resultant(u - a, u - b, u) = b - a`). Evaluated by fraction-free
/// Bareiss elimination.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<Rat> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::domain("resultant: zero polynomial input"));
    }
    let a = univar_coeffs(p, var)?;
    let b = univar_coeffs(q, var)?;
    let m = a.len() - 1; // deg p
    let n = b.len() - 1; // deg q
    if m == 0 && n == 0 {
        return Ok(Rat::one());
    }
    if m == 0 {
        return Ok(pow_rat(&a[0], n as u32));
    }
    if n == 0 {
        return Ok(pow_rat(&b[0], m as u32));
    }
    let size = m + n;
    let mut mat = vec![vec![Rat::zero(); size]; size];
    // m rows of q's coefficients, then n rows of p's, each shifted right.
    for row in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            mat[row][row + j] = c.clone();
        }
    }
    for row in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            mat[m + row][row + j] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

fn pow_rat(r: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

/// Fraction-free (Bareiss) elimination; exact over the rationals.
fn bareiss_determinant(mut m: Vec<Vec<Rat>>) -> Result<Rat> {
    let n = m.len();
    if n == 0 {
        return Ok(Rat::one());
    }
    let mut sign = 1i64;
    let mut prev = Rat::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(Rat::zero());
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { -det } else { det })
}

/// Decides whether `p(a + m*s)` is an integer for every integer `s`.
///
/// Writes `q(s) = p(a + m*s)` in the binomial basis: its coefficients are
/// the forward differences of `q` at 0, and `q` is integer-valued on all of
/// `Z` exactly when every such coefficient is an integer.
pub fn integer_valued_on_ap(p: &MultiPoly, a: &Int, m: &Int) -> Result<bool> {
    if !m.is_positive() {
        return Err(Error::domain("integer_valued_on_ap: modulus must be >= 1"));
    }
    if p.vars().len() > 1 {
        return Err(Error::domain("integer_valued_on_ap: polynomial must be univariate"));
    }
    let var = p.vars().first().cloned().unwrap_or_else(|| "x".to_string());
    let coeffs = univar_coeffs(p, &var)?;
    let deg = coeffs.len().saturating_sub(1);
    let mut values: Vec<Rat> = (0..=deg)
        .map(|j| {
            let point = Rat::from_integer(a + m * Int::from(j as u64));
            coeffs
                .iter()
                .rev()
                .fold(Rat::zero(), |acc, c| acc * &point + c)
        })
        .collect();
    // successive forward differences; the leading entries are the binomial
    // coefficients of q
    while !values.is_empty() {
        if !values[0].is_integer() {
            return Ok(false);
        }
        for i in 0..values.len() - 1 {
            values[i] = &values[i + 1] - &values[i];
        }
        values.pop();
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse, tri_poly};

    fn p(s: &str) -> MultiPoly {
        parse(s).unwrap()
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(Int::from(n))
    }

    #[test]
    fn gcd_of_self_is_monic() {
        let q = p("4*u^2 - 4");
        assert_eq!(uni_gcd(&q, &q, "u").unwrap(), p("u^2 - 1"));
    }

    #[test]
    fn gcd_extracts_known_factor() {
        let a = p("u - 2") * p("3*u^2 + u + 5");
        let b = p("u - 2") * p("u^3 - 7");
        assert_eq!(uni_gcd(&a, &b, "u").unwrap(), p("u - 2"));
        // and the cofactors are exact
        let g = uni_gcd(&a, &b, "u").unwrap();
        assert_eq!(a.divide_exact(&g).unwrap().unwrap(), p("3*u^2 + u + 5"));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert_eq!(uni_gcd(&p("u^2 + 1"), &p("u - 1"), "u").unwrap(), p("1"));
    }

    #[test]
    fn gcd_rejects_multivariate() {
        assert!(uni_gcd(&p("u*v"), &p("u"), "u").is_err());
    }

    #[test]
    fn resultant_linear_case() {
        // Res(u - a, u - b) = b - a, sampled at rational points
        for (a, b) in [(2i64, 5i64), (-3, 4), (7, 7), (0, -2)] {
            let pa = p(&format!("u - {a}").replace("- -", "+ "));
            let pb = p(&format!("u - {b}").replace("- -", "+ "));
            assert_eq!(resultant(&pa, &pb, "u").unwrap(), rat(b - a));
        }
    }

    #[test]
    fn resultant_zero_iff_common_root() {
        let shared = p("u - 3");
        let a = &shared * &p("u + 1");
        let b = &shared * &p("u^2 + u + 1");
        assert_eq!(resultant(&a, &b, "u").unwrap(), Rat::zero());
        assert!(!uni_gcd(&a, &b, "u").unwrap().is_constant());

        let c = p("u^2 + 1");
        let d = p("u - 1");
        assert_ne!(resultant(&c, &d, "u").unwrap(), Rat::zero());
        assert_eq!(uni_gcd(&c, &d, "u").unwrap(), p("1"));
    }

    #[test]
    fn resultant_rejects_zero_input() {
        assert!(resultant(&MultiPoly::zero(), &p("u"), "u").is_err());
    }

    #[test]
    fn resultant_against_product_formula() {
        // Res(p, q) = lc(q)^deg(p) * prod p(roots of q) for q = (u-1)(u-2)
        let q = p("u - 1") * p("u - 2");
        let f = p("u^2 + u + 1");
        let expect = f_eval(&f, 1) * f_eval(&f, 2);
        assert_eq!(resultant(&f, &q, "u").unwrap(), expect);
    }

    fn f_eval(f: &MultiPoly, at: i64) -> Rat {
        let mut point = std::collections::BTreeMap::new();
        point.insert("u".to_string(), rat(at));
        f.eval(&point).unwrap()
    }

    #[test]
    fn integer_valuedness_on_progressions() {
        let q = p("1/3*u^2 - 1/3"); // (u^2 - 1)/3
        assert!(integer_valued_on_ap(&q, &Int::from(1), &Int::from(3)).unwrap());
        assert!(integer_valued_on_ap(&q, &Int::from(2), &Int::from(3)).unwrap());
        assert!(!integer_valued_on_ap(&q, &Int::from(0), &Int::from(3)).unwrap());
        // binomial polynomial u(u+1)/2 is integer-valued on all of Z
        let t = tri_poly(&MultiPoly::var("u"));
        assert!(integer_valued_on_ap(&t, &Int::from(0), &Int::from(1)).unwrap());
        // constants
        assert!(integer_valued_on_ap(&p("7"), &Int::from(0), &Int::from(1)).unwrap());
        assert!(!integer_valued_on_ap(&p("1/2"), &Int::from(0), &Int::from(1)).unwrap());
        assert!(integer_valued_on_ap(&MultiPoly::zero(), &Int::from(0), &Int::from(1)).unwrap());
    }
}
