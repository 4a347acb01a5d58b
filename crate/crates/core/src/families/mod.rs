//! Registry and engine for the constructive solution families and the
//! symbolic identity suite.
//!
//! Each family descriptor names a target equation, a parameter domain, and
//! (where the published closed form is refuted by its own worked examples)
//! the correction-ledger entries that document the repair. Generation always
//! re-verifies against the target equation before a record is returned.

pub mod equations;
mod formulas;
mod generators;
pub mod identity;
pub mod recurrence;

pub use equations::{Equation, Scalar, Verdict};
pub use formulas::{
    consec_f, cube_big_f, eq1_pell_f, eq1_x1_printed, eq1_y1_printed, eq1_z1_printed,
    harmonic_f, lucas_h, lucas_xyz, lucas_xyz_prime, lucas_z_kernel, lucas_z_kernel_prime,
    product_table, quartic_f, quot_a_y, quot_a_y_printed, quot_b_z, quot_b_z_printed,
    sqprod_f1, sqprod_f2, two_pair_p_printed, two_pair_pqrs, txyz_rat,
};
pub use generators::{
    consec_recurrence, cube_recurrence, eq1_polynomials, eq1_recurrence, harmonic_recurrence,
    lucas_index_recurrence, quartic_recurrence, s_integer_check, s_smooth, sqprod_a_recurrence,
    sqprod_b_pell_recurrence, Eq1Polynomials,
};
pub use identity::{check_all_identities, check_identity, IdentityReport, IdentityStatus};

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::figurate::{Int, Rat};

/// A registered constructive solution family.
#[derive(Debug, Clone)]
pub struct FamilyDescriptor {
    pub id: &'static str,
    /// What the family constructs, in one line.
    pub summary: &'static str,
    pub equation: Equation,
    /// Human-readable parameter domain.
    pub domain: &'static str,
    /// Correction-ledger entries: published formulas refuted by their own
    /// instances, with the repair used here. Empty for families that verify
    /// as published.
    pub notes: &'static [&'static str],
}

impl FamilyDescriptor {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "id": self.id,
            "summary": self.summary,
            "equation": self.equation.render(),
            "domain": self.domain,
            "notes": self.notes,
        })
    }
}

/// One emitted, exactly verified solution.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionRecord {
    pub family: String,
    pub params: BTreeMap<String, String>,
    /// Named components in presentation order.
    pub solution: Vec<(String, Scalar)>,
    pub equation: Equation,
    pub verified: bool,
}

impl SolutionRecord {
    pub fn component(&self, name: &str) -> Option<&Scalar> {
        self.solution.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn component_map(&self) -> BTreeMap<String, Scalar> {
        self.solution.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }

    /// Big integers as decimal strings, rationals as `p/q`.
    pub fn to_json(&self) -> serde_json::Value {
        let solution: serde_json::Map<String, serde_json::Value> = self
            .solution
            .iter()
            .map(|(k, v)| (k.clone(), json!(v.to_string())))
            .collect();
        json!({
            "family": self.family,
            "params": self.params,
            "solution": solution,
            "equation": self.equation.render(),
            "verified": self.verified,
        })
    }
}

/// Re-checks a record against its target equation, independently of how it
/// was generated. Tampered components make this return false.
pub fn verify(record: &SolutionRecord) -> bool {
    match record.equation.check(&record.component_map()) {
        Ok(verdict) => verdict.holds,
        Err(_) => false,
    }
}

/// Exact verification verdict (with residual) for a record.
pub fn verify_verdict(record: &SolutionRecord) -> Result<Verdict> {
    record.equation.check(&record.component_map())
}

const LEDGER_L1: &str = "L1: r_n = u^2 (k_n u - 2)^2 / 4 + k_n^2; the published factor \
     (k_n - 2) contradicts the Pythagorean substitution a = u(ku - 2)/2 and the instance \
     (n, u) = (1, 3), where r = 114^2 + 26^2 = 13672 gives z = 1709.";
const LEDGER_L1B: &str = "L1b: the note that x_n(2u+1), y_n(2u+1), z_n(2u+1) have integer \
     coefficients holds for n = 1 but fails for n = 2 on the published branch (the constant \
     coefficient of x_2(2u+1) is -3/2); shipped as a documented erratum with regression tests.";
const LEDGER_L2: &str = "L2: the published recurrence x_n = 4x_{n-2} - x_{n-2} + 1 is \
     degenerate; the corrected step x_n = 4x_{n-1} - x_{n-2} + 1 follows from \
     f(x, y) = f(y, 4y - x + 1) and reproduces the published 76, 285, 1065, 3976.";
const LEDGER_L3: &str = "L3: y_n = |5w_n - 2|; the published y_n = 60w_n^2 - 61w_n + 16 \
     repeats f(w_n) and contradicts both the key identity and the published instances \
     (4, 2, 16), (120, 78, 15632).";
const LEDGER_L4A: &str = "L4: y(u) = z(u) = (u^3 + 3u^2 + 2u - 4)/2; the published middle \
     coefficient u^2 fails at u = 2 (t_6 T_2 - T_6 = 28); the corrected 3u^2 is forced by \
     t_y T_x = T_y <=> y + 2 = u(u+1)(u+2)/2.";
const LEDGER_L4B: &str = "L4: z(u) = 3T_u + 1 = (u^3 + 3u^2 + 2u + 2)/2; the published \
     middle coefficient u^2 fails at u = 2 (t_9 T_2 - T_12 = -184).";
const LEDGER_L5: &str = "L5: p(b) = (b - 1)(b^3 + 4b^2 + 2b + 2)/6; with the published \
     leading factor (b + 1) the identity fails at b = 4 (residual 38656675); with (b - 1) \
     b = 4 gives (69, 179, 5, 180) with 2415^2 + 16110^2 = 15^2 + 16290^2.";
const LEDGER_L6: &str = "L6: derived recurrence — no step map is published for \
     v^2 = f2(u) = u(2u + 3)/9; substituting u = 3t reduces it to t(2t + 1) = square, i.e. \
     the Pell equation b^2 - 2a^2 = 1 with t = a^2. Oracle: exhaustive search u <= 10^4 \
     finds exactly u = 0, 12, 432, matching the emitted sequence.";

/// All registered families, in stable order.
pub fn list_families() -> Vec<FamilyDescriptor> {
    use Equation::*;
    let mut out = vec![
        FamilyDescriptor {
            id: "F-EQ1-POLY",
            summary: "polynomial solutions x_n(u), y_n(u), z_n(u) of t_x^2 + t_y^2 = z^2 \
                      from a Pell-type recurrence over Q[u]",
            equation: TriSqSumZ,
            domain: "index n >= 1 (n <= 3 without the deep flag); rational evaluation point u",
            notes: &[LEDGER_L1, LEDGER_L1B],
        },
        FamilyDescriptor {
            id: "F-TXYZ-RAT",
            summary: "rational parametric solutions of t_x^2 + t_y^2 = t_z^2",
            equation: TriSqSumTri,
            domain: "rational u, v with u != v, v != 0",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-SINT",
            summary: "S-integer specialization of F-TXYZ-RAT via v = V^n, u = U^m - V^n",
            equation: TriSqSumTri,
            domain: "prime set S containing 2; U, V positive products of primes of S; \
                     exponents m, n >= 1; S-integrality of every component is verified and \
                     parameter choices that break it are rejected",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-TET-CONSEC",
            summary: "consecutive-index solutions (6x_n, 6x_n + 1) of T_x^2 + T_y^2 = z^2",
            equation: TetSqSumZ,
            domain: "index n >= 0",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-TET-LUCAS",
            summary: "solutions of T_x^2 + T_y^2 = z^2 with y - x unbounded, from the \
                      Lucas pairs u_n = 6u_{n-1} - u_{n-2} on h(u, v) = 0",
            equation: TetSqSumZ,
            domain: "index n >= 1",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-TET-LUCAS-P",
            summary: "second Lucas family: same indices, y' = y + 1 and the Z' kernel",
            equation: TetSqSumZ,
            domain: "index n >= 1",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-HARMONIC",
            summary: "three-term harmonic progressions 1/t_x, 1/t_z, 1/t_y",
            equation: Harmonic,
            domain: "odd index n >= 1",
            notes: &[LEDGER_L2],
        },
        FamilyDescriptor {
            id: "F-SQ-AP",
            summary: "arithmetic progressions T_x, z^2, T_y via the tetrahedral mean identity",
            equation: TetMeanSquare,
            domain: "integer u with u ≡ 1 or 2 (mod 3)",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-QUARTIC-AP",
            summary: "progressions x^4, t_z, y^4: solutions of t_z = (x^4 + y^4)/2",
            equation: TriQuarticHalf,
            domain: "index n >= 0",
            notes: &[LEDGER_L3],
        },
        FamilyDescriptor {
            id: "F-QUOT-A",
            summary: "triangular numbers as quotients of tetrahedral numbers, variant A",
            equation: TetQuotient,
            domain: "integer u >= 1",
            notes: &[LEDGER_L4A],
        },
        FamilyDescriptor {
            id: "F-QUOT-B",
            summary: "triangular numbers as quotients of tetrahedral numbers, variant B",
            equation: TetQuotient,
            domain: "integer u >= 1",
            notes: &[LEDGER_L4B],
        },
    ];
    for id in PROD_IDS {
        out.push(FamilyDescriptor {
            id,
            summary: "triangular numbers as products of two tetrahedral numbers \
                      (one of nine integer-valued polynomial rows)",
            equation: TetProduct,
            domain: "integer u >= 1",
            notes: &[],
        });
    }
    out.extend([
        FamilyDescriptor {
            id: "F-TWOPAIR",
            summary: "two distinct pairs of triangular squares with equal sums",
            equation: TwoPairs,
            domain: "integer b ≡ 1 (mod 3); r(b) may be negative and is stored raw",
            notes: &[LEDGER_L5],
        },
        FamilyDescriptor {
            id: "F-CUBE",
            summary: "cubes as sums of two tetrahedral numbers, on F(x, y) = 0",
            equation: CubeSumTet,
            domain: "index n >= 0",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-SQPROD-A",
            summary: "squares as products T_u T_{2u}",
            equation: SqProdTet,
            domain: "index n >= 0",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-SQPROD-B",
            summary: "squares as products T_u T_{2u+2} (derived Pell engine)",
            equation: SqProdTet,
            domain: "index n >= 0",
            notes: &[LEDGER_L6],
        },
        FamilyDescriptor {
            id: "F-PAL-2",
            summary: "base-2 palindromic triangular numbers t_n, n = 2^(2^k) + 1",
            equation: PalTri { base: 2, delta: 0 },
            domain: "1 <= k <= 24",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-PAL-3",
            summary: "base-3 palindromic triangular numbers t_n, n = (3^k - 1)/2",
            equation: PalTri { base: 3, delta: 0 },
            domain: "k >= 1",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-PAL-5",
            summary: "base-5 palindromic triangular numbers t_n, n = (5^k - 1)/2",
            equation: PalTri { base: 5, delta: 0 },
            domain: "k >= 1",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-PAL-7",
            summary: "base-7 palindromic triangular numbers t_n, n = (7^k - 1)/2",
            equation: PalTri { base: 7, delta: 0 },
            domain: "k >= 1",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-PAL-9",
            summary: "base-9 palindromic triangular numbers (repunits), n = (3^k - 1)/2",
            equation: PalTri { base: 9, delta: 0 },
            domain: "k >= 1",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-APAL-PLUS",
            summary: "almost-palindromes: t_n + 1 palindromic for n = 2*10^(k+1) + 1",
            equation: PalTri { base: 10, delta: 1 },
            domain: "k >= 1",
            notes: &[],
        },
        FamilyDescriptor {
            id: "F-APAL-MINUS",
            summary: "almost-palindromes: t_n - 1 palindromic for n = 2*10^k + 2",
            equation: PalTri { base: 10, delta: -1 },
            domain: "k >= 1",
            notes: &[],
        },
    ]);
    out
}

static PROD_IDS: [&str; 9] = [
    "F-PROD-1", "F-PROD-2", "F-PROD-3", "F-PROD-4", "F-PROD-5", "F-PROD-6", "F-PROD-7",
    "F-PROD-8", "F-PROD-9",
];

pub fn descriptor(id: &str) -> Result<FamilyDescriptor> {
    list_families()
        .into_iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownFamily(id.to_string()))
}

/// Parameters for `generate`: an optional inclusive index range plus named
/// values (integers, rationals, or `+`-separated prime lists).
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub range: Option<(u64, u64)>,
    pub named: BTreeMap<String, String>,
}

impl Params {
    pub fn index(n: u64) -> Self {
        Params { range: Some((n, n)), named: BTreeMap::new() }
    }

    pub fn index_range(lo: u64, hi: u64) -> Self {
        Params { range: Some((lo, hi)), named: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: &str) -> Self {
        self.named.insert(key.to_string(), value.to_string());
        self
    }

    fn want_range(&self, family: &str) -> Result<(u64, u64)> {
        self.range
            .ok_or_else(|| Error::domain(format!("{family} requires an index (--n N or --n A..B)")))
    }

    fn int(&self, family: &str, key: &str) -> Result<Int> {
        let raw = self
            .named
            .get(key)
            .ok_or_else(|| Error::domain(format!("{family} requires parameter {key}")))?;
        raw.trim()
            .parse()
            .map_err(|_| Error::domain(format!("{family}: parameter {key} must be an integer")))
    }

    fn rat(&self, family: &str, key: &str) -> Result<Rat> {
        let raw = self
            .named
            .get(key)
            .ok_or_else(|| Error::domain(format!("{family} requires parameter {key}")))?;
        raw.trim()
            .parse()
            .map_err(|_| Error::domain(format!("{family}: parameter {key} must be rational (p/q)")))
    }

    fn u32(&self, family: &str, key: &str) -> Result<u32> {
        let n = self.int(family, key)?;
        num::ToPrimitive::to_u32(&n)
            .ok_or_else(|| Error::domain(format!("{family}: parameter {key} out of range")))
    }

    fn primes(&self, family: &str, key: &str) -> Result<Vec<Int>> {
        let raw = self
            .named
            .get(key)
            .ok_or_else(|| Error::domain(format!("{family} requires parameter {key}")))?;
        raw.split('+')
            .map(|part| {
                part.trim().parse::<Int>().map_err(|_| {
                    Error::domain(format!(
                        "{family}: parameter {key} must be a +-separated list of primes"
                    ))
                })
            })
            .collect()
    }

    fn flag(&self, key: &str) -> bool {
        matches!(self.named.get(key).map(String::as_str), Some("1" | "true" | "yes"))
    }
}

/// Generates verified records for a family. Index-ranged requests emit one
/// record per index.
pub fn generate(family_id: &str, params: &Params) -> Result<Vec<SolutionRecord>> {
    use generators as g;
    let over_range = |f: &dyn Fn(u64) -> Result<SolutionRecord>| -> Result<Vec<SolutionRecord>> {
        let (lo, hi) = params.want_range(family_id)?;
        if lo > hi {
            return Err(Error::domain(format!("{family_id}: empty index range {lo}..{hi}")));
        }
        (lo..=hi).map(f).collect()
    };
    match family_id {
        "F-EQ1-POLY" => {
            let u = params.rat(family_id, "u")?;
            let deep = params.flag("deep");
            over_range(&|n| g::gen_eq1(n, &u, deep))
        }
        "F-TXYZ-RAT" => Ok(vec![g::gen_txyz(
            &params.rat(family_id, "u")?,
            &params.rat(family_id, "v")?,
        )?]),
        "F-SINT" => Ok(vec![g::gen_sint(
            &params.primes(family_id, "S")?,
            &params.int(family_id, "U")?,
            &params.int(family_id, "V")?,
            params.u32(family_id, "m")?,
            params.u32(family_id, "n")?,
        )?]),
        "F-TET-CONSEC" => over_range(&g::gen_tet_consec),
        "F-TET-LUCAS" => over_range(&g::gen_tet_lucas),
        "F-TET-LUCAS-P" => over_range(&g::gen_tet_lucas_prime),
        "F-HARMONIC" => over_range(&g::gen_harmonic),
        "F-SQ-AP" => Ok(vec![g::gen_sq_ap(&params.int(family_id, "u")?)?]),
        "F-QUARTIC-AP" => over_range(&g::gen_quartic_ap),
        "F-QUOT-A" => Ok(vec![g::gen_quot(false, &params.int(family_id, "u")?)?]),
        "F-QUOT-B" => Ok(vec![g::gen_quot(true, &params.int(family_id, "u")?)?]),
        _ if family_id.starts_with("F-PROD-") => {
            let row: usize = family_id["F-PROD-".len()..]
                .parse()
                .map_err(|_| Error::UnknownFamily(family_id.to_string()))?;
            Ok(vec![g::gen_prod(row, &params.int(family_id, "u")?)?])
        }
        "F-TWOPAIR" => Ok(vec![g::gen_two_pair(&params.int(family_id, "b")?)?]),
        "F-CUBE" => over_range(&g::gen_cube),
        "F-SQPROD-A" => over_range(&g::gen_sqprod_a),
        "F-SQPROD-B" => over_range(&g::gen_sqprod_b),
        "F-PAL-2" => over_range(&g::gen_pal2),
        "F-PAL-3" => over_range(&|k| g::gen_pal_odd(3, k)),
        "F-PAL-5" => over_range(&|k| g::gen_pal_odd(5, k)),
        "F-PAL-7" => over_range(&|k| g::gen_pal_odd(7, k)),
        "F-PAL-9" => over_range(&g::gen_pal9),
        "F-APAL-PLUS" => over_range(&g::gen_apal_plus),
        "F-APAL-MINUS" => over_range(&g::gen_apal_minus),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_stable_content() {
        let fams = list_families();
        assert!(fams.len() >= 20);
        let ids: Vec<&str> = fams.iter().map(|d| d.id).collect();
        for required in ["F-EQ1-POLY", "F-PROD-1", "F-PROD-9", "F-PAL-2", "F-APAL-MINUS"] {
            assert!(ids.contains(&required), "{required} missing");
        }
        assert!(fams.iter().all(|d| !d.summary.is_empty()));
        // exactly these carry correction-ledger entries
        let with_notes: Vec<&str> =
            fams.iter().filter(|d| !d.notes.is_empty()).map(|d| d.id).collect();
        assert_eq!(
            with_notes,
            vec![
                "F-EQ1-POLY",
                "F-HARMONIC",
                "F-QUARTIC-AP",
                "F-QUOT-A",
                "F-QUOT-B",
                "F-TWOPAIR",
                "F-SQPROD-B"
            ]
        );
    }

    #[test]
    fn generate_dispatch_and_ranges() {
        let recs = generate("F-TET-CONSEC", &Params::index_range(1, 2)).unwrap();
        assert_eq!(recs.len(), 2);
        assert!(recs.iter().all(|r| r.verified));
        assert!(generate("F-NOPE", &Params::index(1)).is_err());
        assert!(generate("F-TET-CONSEC", &Params::default()).is_err());
        let err = generate("F-SQ-AP", &Params::default().with("u", "3")).unwrap_err();
        assert!(err.to_string().contains("mod 3"));
    }

    #[test]
    fn verify_detects_tampering() {
        let rec = &generate("F-TET-CONSEC", &Params::index(1)).unwrap()[0];
        assert!(verify(rec));
        let mut bad = rec.clone();
        bad.solution[2].1 = Scalar::from(54840i64);
        assert!(!verify(&bad));
    }

    #[test]
    fn manual_record_for_quartic_question() {
        // t_z = x^4 + y^4 with the larger printed solution
        let rec = SolutionRecord {
            family: "manual".to_string(),
            params: BTreeMap::new(),
            solution: vec![
                ("x".to_string(), Scalar::from(3300i64)),
                ("y".to_string(), Scalar::from(7712i64)),
                ("z".to_string(), Scalar::from(85_508_608i64)),
            ],
            equation: Equation::TriQuartic,
            verified: false,
        };
        assert!(verify(&rec));
    }

    #[test]
    fn record_json_shape() {
        let rec = &generate("F-TET-CONSEC", &Params::index(1)).unwrap()[0];
        let v = rec.to_json();
        assert_eq!(v["family"], "F-TET-CONSEC");
        assert_eq!(v["solution"]["z"], "54839");
        assert_eq!(v["verified"], true);
    }
}
