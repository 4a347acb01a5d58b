//! Target equations and their exact verification.
//!
//! Every solution family declares one of these equations; a record is only
//! marked verified after the equation has been re-checked here with exact
//! arithmetic. The checker is deliberately independent of any generator:
//! it works from the raw component values alone.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::figurate::{self, Int, Rat};

/// One exact numeric component of a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Int(Int),
    Rat(Rat),
}

impl Scalar {
    pub fn to_rat(&self) -> Rat {
        match self {
            Scalar::Int(n) => Rat::from_integer(n.clone()),
            Scalar::Rat(r) => r.clone(),
        }
    }

    pub fn as_int(&self) -> Option<Int> {
        match self {
            Scalar::Int(n) => Some(n.clone()),
            Scalar::Rat(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// Parses `-12`, `7/3`, ...
    pub fn parse(text: &str) -> Result<Scalar> {
        let t = text.trim();
        if t.contains('/') {
            let r: Rat = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational `{t}`")))?;
            Ok(Scalar::Rat(r))
        } else {
            let n: Int = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{t}`")))?;
            Ok(Scalar::Int(n))
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Rat(r) => write!(f, "{r}"),
        }
    }
}

impl From<Int> for Scalar {
    fn from(n: Int) -> Self {
        Scalar::Int(n)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Int(Int::from(n))
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        // integers normalize to the integer representation
        if r.is_integer() {
            Scalar::Int(r.to_integer())
        } else {
            Scalar::Rat(r)
        }
    }
}

/// A verifiable target equation. Index arguments are rationals where the
/// family produces rational solutions; `t`/`T` are always evaluated by
/// formula, so negative indices are legal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equation {
    /// t_x^2 + t_y^2 = z^2 (z a value, not an index)
    TriSqSumZ,
    /// t_x^2 + t_y^2 = t_z^2
    TriSqSumTri,
    /// T_x^2 + T_y^2 = z^2
    TetSqSumZ,
    /// z^2 = (T_x + T_y)/2
    TetMeanSquare,
    /// t_z = (x^4 + y^4)/2
    TriQuarticHalf,
    /// t_z = x^4 + y^4
    TriQuartic,
    /// z^n = T_x + T_y
    PowSumTet(u32),
    /// z^2 = T_x * T_y
    SqProdTet,
    /// 1/t_x + 1/t_y = 2/t_z
    Harmonic,
    /// t_z = T_y / T_x
    TetQuotient,
    /// t_z = T_x * T_y
    TetProduct,
    /// t_p^2 + t_q^2 = t_r^2 + t_s^2
    TwoPairs,
    /// z^3 = T_x + T_y
    CubeSumTet,
    /// t_n + delta is palindromic in the given base
    PalTri { base: u32, delta: i8 },
}

/// Outcome of an exact equation check. `residual` is `LHS - RHS` after
/// clearing denominators where the equation has any; palindrome targets
/// have no residual.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub holds: bool,
    pub residual: Option<Rat>,
}

impl Verdict {
    fn from_residual(residual: Rat) -> Self {
        Verdict { holds: residual.is_zero(), residual: Some(residual) }
    }
}

impl Equation {
    /// Component names in canonical (argument) order.
    pub fn component_names(&self) -> &'static [&'static str] {
        match self {
            Equation::TwoPairs => &["p", "q", "r", "s"],
            Equation::PalTri { .. } => &["n", "t"],
            _ => &["x", "y", "z"],
        }
    }

    /// Equation rendered the way reports and the CLI print it.
    pub fn render(&self) -> String {
        match self {
            Equation::TriSqSumZ => "t_x^2 + t_y^2 = z^2".into(),
            Equation::TriSqSumTri => "t_x^2 + t_y^2 = t_z^2".into(),
            Equation::TetSqSumZ => "T_x^2 + T_y^2 = z^2".into(),
            Equation::TetMeanSquare => "z^2 = (T_x + T_y)/2".into(),
            Equation::TriQuarticHalf => "t_z = (x^4 + y^4)/2".into(),
            Equation::TriQuartic => "t_z = x^4 + y^4".into(),
            Equation::PowSumTet(n) => format!("z^{n} = T_x + T_y"),
            Equation::SqProdTet => "z^2 = T_x*T_y".into(),
            Equation::Harmonic => "1/t_x + 1/t_y = 2/t_z".into(),
            Equation::TetQuotient => "t_z = T_y/T_x".into(),
            Equation::TetProduct => "t_z = T_x*T_y".into(),
            Equation::TwoPairs => "t_p^2 + t_q^2 = t_r^2 + t_s^2".into(),
            Equation::CubeSumTet => "z^3 = T_x + T_y".into(),
            Equation::PalTri { base, delta } => match delta.cmp(&0) {
                std::cmp::Ordering::Equal => format!("t_n palindromic in base {base}"),
                std::cmp::Ordering::Greater => format!("t_n + {delta} palindromic in base {base}"),
                std::cmp::Ordering::Less => format!("t_n - {} palindromic in base {base}", -delta),
            },
        }
    }

    /// Equation id as accepted by the CLI `verify` subcommand, where one
    /// exists.
    pub fn from_cli_id(id: &str, exponent: Option<u32>) -> Result<Equation> {
        Ok(match id {
            "t2sum" => Equation::TriSqSumTri,
            "T2sum" => Equation::TetSqSumZ,
            "tz_quartic" => Equation::TriQuartic,
            "pow_sum" => Equation::PowSumTet(
                exponent.ok_or_else(|| Error::domain("pow_sum requires an exponent"))?,
            ),
            "sqprod" => Equation::SqProdTet,
            "harmonic" => Equation::Harmonic,
            "quotient" => Equation::TetQuotient,
            "product" => Equation::TetProduct,
            "two_pairs" => Equation::TwoPairs,
            "cube_sum" => Equation::CubeSumTet,
            other => return Err(Error::domain(format!("unknown equation id `{other}`"))),
        })
    }

    /// Exact verification from raw components.
    pub fn check(&self, comps: &BTreeMap<String, Scalar>) -> Result<Verdict> {
        let get = |name: &str| -> Result<Rat> {
            comps
                .get(name)
                .map(Scalar::to_rat)
                .ok_or_else(|| Error::domain(format!("missing component `{name}`")))
        };
        let tri = figurate::tri_rat;
        let tet = figurate::tet_rat;
        let sq = |r: &Rat| r * r;

        Ok(match self {
            Equation::TriSqSumZ => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                Verdict::from_residual(sq(&tri(&x)) + sq(&tri(&y)) - sq(&z))
            }
            Equation::TriSqSumTri => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                Verdict::from_residual(sq(&tri(&x)) + sq(&tri(&y)) - sq(&tri(&z)))
            }
            Equation::TetSqSumZ => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                Verdict::from_residual(sq(&tet(&x)) + sq(&tet(&y)) - sq(&z))
            }
            Equation::TetMeanSquare => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                let two = Rat::from_integer(Int::from(2));
                Verdict::from_residual(two * sq(&z) - tet(&x) - tet(&y))
            }
            Equation::TriQuarticHalf => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                let two = Rat::from_integer(Int::from(2));
                Verdict::from_residual(two * tri(&z) - pow4(&x) - pow4(&y))
            }
            Equation::TriQuartic => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                Verdict::from_residual(tri(&z) - pow4(&x) - pow4(&y))
            }
            Equation::PowSumTet(n) => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                let mut zn = Rat::one();
                for _ in 0..*n {
                    zn *= &z;
                }
                Verdict::from_residual(zn - tet(&x) - tet(&y))
            }
            Equation::SqProdTet => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                Verdict::from_residual(sq(&z) - tet(&x) * tet(&y))
            }
            Equation::Harmonic => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                let (tx, ty, tz) = (tri(&x), tri(&y), tri(&z));
                // cleared form: 2 t_x t_y - t_z (t_x + t_y) = 0, valid only
                // when no t vanishes
                let residual = Rat::from_integer(Int::from(2)) * &tx * &ty
                    - &tz * (&tx + &ty);
                let nonzero = !tx.is_zero() && !ty.is_zero() && !tz.is_zero();
                Verdict { holds: nonzero && residual.is_zero(), residual: Some(residual) }
            }
            Equation::TetQuotient => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                let tx = tet(&x);
                let residual = tri(&z) * &tx - tet(&y);
                let holds = !tx.is_zero() && residual.is_zero();
                Verdict { holds, residual: Some(residual) }
            }
            Equation::TetProduct => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                Verdict::from_residual(tri(&z) - tet(&x) * tet(&y))
            }
            Equation::TwoPairs => {
                let (p, q) = (get("p")?, get("q")?);
                let (r, s) = (get("r")?, get("s")?);
                Verdict::from_residual(
                    sq(&tri(&p)) + sq(&tri(&q)) - sq(&tri(&r)) - sq(&tri(&s)),
                )
            }
            Equation::CubeSumTet => {
                let (x, y, z) = (get("x")?, get("y")?, get("z")?);
                Verdict::from_residual(&z * &z * &z - tet(&x) - tet(&y))
            }
            Equation::PalTri { base, delta } => {
                let n = comps
                    .get("n")
                    .and_then(Scalar::as_int)
                    .ok_or_else(|| Error::domain("missing integer component `n`"))?;
                let value = figurate::tri(&n) + Int::from(*delta as i64);
                if let Some(t) = comps.get("t").and_then(Scalar::as_int) {
                    if t != value {
                        return Ok(Verdict { holds: false, residual: None });
                    }
                }
                if value.is_negative() {
                    return Ok(Verdict { holds: false, residual: None });
                }
                Verdict { holds: figurate::is_palindrome(&value, *base)?, residual: None }
            }
        })
    }

    /// Convenience check from positional components in canonical order.
    pub fn check_positional(&self, values: &[Scalar]) -> Result<Verdict> {
        let names = self.component_names();
        if values.len() != names.len() {
            return Err(Error::domain(format!(
                "{} expects {} components ({})",
                self.render(),
                names.len(),
                names.join(", ")
            )));
        }
        let comps: BTreeMap<String, Scalar> = names
            .iter()
            .map(|n| n.to_string())
            .zip(values.iter().cloned())
            .collect();
        self.check(&comps)
    }
}

fn pow4(r: &Rat) -> Rat {
    let s = r * r;
    &s * &s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    #[test]
    fn tet_sq_sum_examples() {
        let eq = Equation::TetSqSumZ;
        assert!(eq.check_positional(&[s(5), s(7), s(91)]).unwrap().holds);
        assert!(eq.check_positional(&[s(143), s(237), s(2301289)]).unwrap().holds);
        let bad = eq.check_positional(&[s(143), s(237), s(2301290)]).unwrap();
        assert!(!bad.holds);
        assert!(!bad.residual.unwrap().is_zero());
    }

    #[test]
    fn zarankiewicz_triple() {
        let eq = Equation::TriSqSumTri;
        assert!(eq.check_positional(&[s(132), s(143), s(164)]).unwrap().holds);
    }

    #[test]
    fn rational_components() {
        let eq = Equation::TriSqSumTri;
        let x = Scalar::parse("9/2").unwrap();
        let y = Scalar::parse("-27/8").unwrap();
        let z = Scalar::parse("37/8").unwrap();
        assert!(eq.check_positional(&[x, y, z]).unwrap().holds);
    }

    #[test]
    fn quartic_question_solution() {
        let eq = Equation::TriQuartic;
        assert!(eq.check_positional(&[s(3300), s(7712), s(85508608)]).unwrap().holds);
        assert!(eq.check_positional(&[s(15), s(28), s(1153)]).unwrap().holds);
    }

    #[test]
    fn harmonic_rejects_vanishing_t() {
        let eq = Equation::Harmonic;
        assert!(eq.check_positional(&[s(76), s(285), s(104)]).unwrap().holds);
        // t_0 = 0: equation undefined, never "holds"
        assert!(!eq.check_positional(&[s(0), s(0), s(0)]).unwrap().holds);
    }

    #[test]
    fn palindrome_check() {
        let eq = Equation::PalTri { base: 10, delta: 0 };
        let mut comps = BTreeMap::new();
        comps.insert("n".to_string(), s(10));
        assert!(eq.check(&comps).unwrap().holds);
        comps.insert("n".to_string(), s(12));
        assert!(!eq.check(&comps).unwrap().holds);
        // value cross-check is enforced when present
        comps.insert("n".to_string(), s(10));
        comps.insert("t".to_string(), s(56));
        assert!(!eq.check(&comps).unwrap().holds);
    }

    #[test]
    fn cli_id_mapping() {
        assert!(Equation::from_cli_id("t2sum", None).is_ok());
        assert!(Equation::from_cli_id("pow_sum", Some(4)).is_ok());
        assert!(Equation::from_cli_id("pow_sum", None).is_err());
        assert!(Equation::from_cli_id("nope", None).is_err());
    }
}
