//! Exhaustive, exactly verified searches over bounded ranges.
//!
//! Every search exists in two arithmetic flavors: a fixed-width 128-bit path
//! with a residue prefilter for speed, and an arbitrary-precision path. The
//! default mode picks the fast path only when the problem's largest possible
//! intermediate provably fits 128 bits — computed from the bound, never
//! assumed. Whatever the path, each hit is re-verified through the exact
//! equation checker before it enters a report, and reports are deterministic
//! across partition counts: the outer range is split into contiguous chunks,
//! workers share only immutable tables, and chunk buffers are merged in
//! order.

use std::collections::BTreeMap;
use std::time::Instant;

use num::{One, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::families::{Equation, Scalar};
use crate::figurate::{self, Int};

/// Problem identifiers, stable strings used by the CLI and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemId {
    /// T_x^2 + T_y^2 = z^2, 1 <= x < y < bound
    SqSumTet,
    /// t_n palindromic in a base, 1 <= n < bound
    PalTri,
    /// t_z = x^4 + y^4, 1 <= x < y < bound
    TzQuartic,
    /// z^e = T_x + T_y, 1 <= x < y < bound, z >= 1
    PowSumTet,
    /// z^2 = T_x T_y, 1 <= x < y < bound
    SqprodTet,
}

impl ProblemId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProblemId::SqSumTet => "SQ-SUM-TET",
            ProblemId::PalTri => "PAL-TRI",
            ProblemId::TzQuartic => "TZ-QUARTIC",
            ProblemId::PowSumTet => "POW-SUM-TET",
            ProblemId::SqprodTet => "SQPROD-TET",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(match text {
            "SQ-SUM-TET" => ProblemId::SqSumTet,
            "PAL-TRI" => ProblemId::PalTri,
            "TZ-QUARTIC" => ProblemId::TzQuartic,
            "POW-SUM-TET" => ProblemId::PowSumTet,
            "SQPROD-TET" => ProblemId::SqprodTet,
            other => return Err(Error::domain(format!("unknown search problem `{other}`"))),
        })
    }
}

/// A fully specified search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchProblem {
    pub id: ProblemId,
    /// Exclusive upper bound on the searched indices.
    pub bound: u64,
    /// Radix for PAL-TRI.
    pub base: u32,
    /// Exponent for POW-SUM-TET.
    pub exponent: u32,
    /// Keep only gcd(T_x, T_y) = 1 solutions of SQ-SUM-TET.
    pub coprime_only: bool,
    /// Keep only y > 2x + 2 solutions of SQPROD-TET.
    pub require_gap: bool,
    /// Contiguous chunks the outer range is split into (also the worker
    /// thread count).
    pub partitions: usize,
}

impl SearchProblem {
    pub fn new(id: ProblemId, bound: u64) -> Self {
        SearchProblem {
            id,
            bound,
            base: 10,
            exponent: 4,
            coprime_only: false,
            require_gap: false,
            partitions: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        let min_bound = if self.id == ProblemId::PalTri { 1 } else { 2 };
        if self.bound < min_bound {
            return Err(Error::domain(format!(
                "{}: bound must be >= {min_bound}",
                self.id.as_str()
            )));
        }
        if self.base < 2 {
            return Err(Error::domain("base must be >= 2"));
        }
        if self.id == ProblemId::PowSumTet && self.exponent < 2 {
            return Err(Error::domain("POW-SUM-TET: exponent must be >= 2"));
        }
        if self.partitions < 1 {
            return Err(Error::domain("partition count must be >= 1"));
        }
        Ok(())
    }
}

/// One verified hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionItem {
    /// (x, y, z) with z the recovered root value or triangular index;
    /// `coprime` is the gcd(T_x, T_y) = 1 flag of SQ-SUM-TET.
    Pair { x: u64, y: u64, z: Int, coprime: Option<bool> },
    /// A palindromic index with its value t_n.
    Index { n: u64, value: Int },
}

impl SolutionItem {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            SolutionItem::Pair { x, y, z, coprime } => {
                let mut obj = json!({
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "z": z.to_string(),
                });
                if let Some(flag) = coprime {
                    obj["coprime"] = json!(flag);
                }
                obj
            }
            SolutionItem::Index { n, value } => json!({
                "n": n.to_string(),
                "t": value.to_string(),
            }),
        }
    }
}

/// Search outcome; `elapsed_ms` is excluded from equality so determinism
/// checks compare content only.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub problem: SearchProblem,
    pub count: usize,
    pub solutions: Vec<SolutionItem>,
    pub elapsed_ms: u64,
}

impl PartialEq for SearchReport {
    /// Content equality: elapsed time and partition count are run metadata,
    /// not results, and are excluded so determinism checks compare content.
    fn eq(&self, other: &Self) -> bool {
        let a = &self.problem;
        let b = &other.problem;
        a.id == b.id
            && a.bound == b.bound
            && a.base == b.base
            && a.exponent == b.exponent
            && a.coprime_only == b.coprime_only
            && a.require_gap == b.require_gap
            && self.count == other.count
            && self.solutions == other.solutions
    }
}

impl SearchReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "problem": self.problem.id.as_str(),
            "bound": self.problem.bound,
            "options": {
                "base": self.problem.base,
                "exponent": self.problem.exponent,
                "coprime_only": self.problem.coprime_only,
                "require_gap": self.problem.require_gap,
            },
            "count": self.count,
            "solutions": self.solutions.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed_ms,
            "partitions": self.problem.partitions,
        })
    }
}

/// Arithmetic backend selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithMode {
    /// Fixed 128-bit when the largest intermediate provably fits, otherwise
    /// arbitrary precision.
    Auto,
    Fixed128,
    BigInt,
}

/// Largest intermediate the problem can produce, computed exactly.
fn max_intermediate(problem: &SearchProblem) -> Int {
    let b = Int::from(problem.bound);
    let tet_max = figurate::tet(&b);
    match problem.id {
        ProblemId::SqSumTet => &tet_max * &tet_max * 2,
        ProblemId::PalTri => figurate::tri(&b) + 1,
        ProblemId::TzQuartic => num::pow::pow(b, 4) * 16 + 1,
        ProblemId::PowSumTet => &tet_max * 2,
        ProblemId::SqprodTet => &tet_max * &tet_max,
    }
}

fn fits_fixed(problem: &SearchProblem) -> bool {
    max_intermediate(problem).to_u128().is_some()
}

// ---------------------------------------------------------------------------
// residue prefilters (pure optimization: every candidate is still proven by
// an exact root extraction, so correctness never depends on these tables)
// ---------------------------------------------------------------------------

struct PowerFilter {
    mask64: u64,
    mod63: [bool; 63],
    mod65: [bool; 65],
}

impl PowerFilter {
    fn squares() -> Self {
        Self::powers(2)
    }

    fn powers(exponent: u32) -> Self {
        let pow_mod = |r: u64, m: u64| -> u64 {
            let mut p = 1u64;
            for _ in 0..exponent {
                p = p * r % m;
            }
            p
        };
        let mut mask64 = 0u64;
        let mut mod63 = [false; 63];
        let mut mod65 = [false; 65];
        for r in 0..64 {
            mask64 |= 1u64 << pow_mod(r, 64);
        }
        for r in 0..63 {
            mod63[pow_mod(r, 63) as usize] = true;
        }
        for r in 0..65 {
            mod65[pow_mod(r, 65) as usize] = true;
        }
        PowerFilter { mask64, mod63, mod65 }
    }

    #[inline]
    fn candidate(&self, n: u128) -> bool {
        self.mask64 & (1u64 << (n % 64)) != 0
            && self.mod63[(n % 63) as usize]
            && self.mod65[(n % 65) as usize]
    }
}

#[inline]
fn exact_sqrt_u128(n: u128) -> Option<u128> {
    let r = figurate::isqrt_u128(n);
    (r * r == n).then_some(r)
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// ---------------------------------------------------------------------------
// per-problem chunk scans
// ---------------------------------------------------------------------------

/// Immutable tables shared by all workers of one run.
enum Tables {
    /// T_x and T_x^2 (fixed path) with residues of T_x^2 for the prefilter,
    /// so the hot loop never divides 128-bit values.
    TetSq {
        tet: Vec<u64>,
        tet_sq: Vec<u128>,
        m64: Vec<u8>,
        m63: Vec<u8>,
        m65: Vec<u8>,
    },
    /// x^4 (fixed path).
    Quartic(Vec<u128>),
    /// T_x (fixed path).
    Tet(Vec<u128>),
    /// Arbitrary-precision T_x.
    TetBig(Vec<Int>),
    /// x^4, arbitrary precision.
    QuarticBig(Vec<Int>),
    None,
}

fn build_tables(problem: &SearchProblem, fixed: bool) -> Tables {
    let bound = problem.bound as usize;
    match (problem.id, fixed) {
        (ProblemId::SqSumTet, true) => {
            let mut tet = Vec::with_capacity(bound);
            let mut tet_sq = Vec::with_capacity(bound);
            let (mut m64, mut m63, mut m65) =
                (Vec::with_capacity(bound), Vec::with_capacity(bound), Vec::with_capacity(bound));
            for x in 0..bound as u128 {
                let t = x * (x + 1) * (x + 2) / 6;
                let sq = t * t;
                tet.push(t as u64);
                tet_sq.push(sq);
                m64.push((sq % 64) as u8);
                m63.push((sq % 63) as u8);
                m65.push((sq % 65) as u8);
            }
            Tables::TetSq { tet, tet_sq, m64, m63, m65 }
        }
        (ProblemId::TzQuartic, true) => {
            Tables::Quartic((0..bound as u128).map(|x| x * x * x * x).collect())
        }
        (ProblemId::PowSumTet | ProblemId::SqprodTet, true) => {
            Tables::Tet((0..bound as u128).map(|x| x * (x + 1) * (x + 2) / 6).collect())
        }
        (ProblemId::SqSumTet | ProblemId::PowSumTet | ProblemId::SqprodTet, false) => {
            Tables::TetBig((0..bound).map(|x| figurate::tet(&Int::from(x))).collect())
        }
        (ProblemId::TzQuartic, false) => {
            Tables::QuarticBig((0..bound).map(|x| num::pow::pow(Int::from(x), 4)).collect())
        }
        (ProblemId::PalTri, _) => Tables::None,
    }
}

fn scan_chunk(
    problem: &SearchProblem,
    tables: &Tables,
    fixed: bool,
    lo: u64,
    hi: u64,
) -> Vec<SolutionItem> {
    match problem.id {
        ProblemId::SqSumTet => scan_sq_sum_tet(problem, tables, fixed, lo, hi),
        ProblemId::PalTri => scan_pal_tri(problem, fixed, lo, hi),
        ProblemId::TzQuartic => scan_tz_quartic(problem, tables, fixed, lo, hi),
        ProblemId::PowSumTet => scan_pow_sum_tet(problem, tables, fixed, lo, hi),
        ProblemId::SqprodTet => scan_sqprod_tet(problem, tables, fixed, lo, hi),
    }
}

fn scan_sq_sum_tet(
    problem: &SearchProblem,
    tables: &Tables,
    fixed: bool,
    lo: u64,
    hi: u64,
) -> Vec<SolutionItem> {
    let mut out = Vec::new();
    let bound = problem.bound;
    if fixed {
        let Tables::TetSq { tet, tet_sq, m64, m63, m65 } = tables else { unreachable!() };
        let filter = PowerFilter::squares();
        for x in lo..hi {
            let xi = x as usize;
            let a = tet_sq[xi];
            let (a64, a63, a65) = (m64[xi], m63[xi], m65[xi]);
            for y in x + 1..bound {
                let yi = y as usize;
                // residues of a + T_y^2 from precomputed tables
                let r64 = (a64 + m64[yi]) & 63;
                if filter.mask64 & (1u64 << r64) == 0 {
                    continue;
                }
                let mut r63 = a63 + m63[yi];
                if r63 >= 63 {
                    r63 -= 63;
                }
                if !filter.mod63[r63 as usize] {
                    continue;
                }
                let mut r65 = a65 + m65[yi];
                if r65 >= 65 {
                    r65 -= 65;
                }
                if !filter.mod65[r65 as usize] {
                    continue;
                }
                if let Some(r) = exact_sqrt_u128(a + tet_sq[yi]) {
                    let coprime = gcd_u64(tet[xi], tet[yi]) == 1;
                    if !problem.coprime_only || coprime {
                        out.push(SolutionItem::Pair {
                            x,
                            y,
                            z: Int::from(r),
                            coprime: Some(coprime),
                        });
                    }
                }
            }
        }
    } else {
        let Tables::TetBig(tet) = tables else { unreachable!() };
        for x in lo..hi {
            let a = &tet[x as usize] * &tet[x as usize];
            for y in x + 1..bound {
                let s = &a + &tet[y as usize] * &tet[y as usize];
                let r = figurate::isqrt(&s).expect("nonnegative");
                if &r * &r == s {
                    let coprime = figurate::gcd(&tet[x as usize], &tet[y as usize]).is_one();
                    if !problem.coprime_only || coprime {
                        out.push(SolutionItem::Pair { x, y, z: r, coprime: Some(coprime) });
                    }
                }
            }
        }
    }
    out
}

fn scan_pal_tri(problem: &SearchProblem, fixed: bool, lo: u64, hi: u64) -> Vec<SolutionItem> {
    let mut out = Vec::new();
    let base = problem.base;
    if fixed {
        let mut t: u128 = (lo as u128) * (lo as u128 + 1) / 2;
        let mut digits = [0u32; 128];
        for n in lo..hi {
            let mut m = t;
            let mut len = 0;
            while m > 0 {
                digits[len] = (m % base as u128) as u32;
                m /= base as u128;
                len += 1;
            }
            if len == 0 {
                len = 1;
                digits[0] = 0;
            }
            if (0..len / 2).all(|i| digits[i] == digits[len - 1 - i]) {
                out.push(SolutionItem::Index { n, value: Int::from(t) });
            }
            t += n as u128 + 1; // t_{n+1} = t_n + (n + 1)
        }
    } else {
        for n in lo..hi {
            let t = figurate::tri(&Int::from(n));
            if figurate::is_palindrome(&t, base).expect("base validated") {
                out.push(SolutionItem::Index { n, value: t });
            }
        }
    }
    out
}

fn scan_tz_quartic(
    problem: &SearchProblem,
    tables: &Tables,
    fixed: bool,
    lo: u64,
    hi: u64,
) -> Vec<SolutionItem> {
    let mut out = Vec::new();
    let bound = problem.bound;
    if fixed {
        let Tables::Quartic(p4) = tables else { unreachable!() };
        let filter = PowerFilter::squares();
        for x in lo..hi {
            let a = p4[x as usize];
            for y in x + 1..bound {
                let k = 8 * (a + p4[y as usize]) + 1;
                if !filter.candidate(k) {
                    continue;
                }
                if let Some(r) = exact_sqrt_u128(k) {
                    // 8 t_z + 1 = (2z + 1)^2; the root of an odd square is odd
                    out.push(SolutionItem::Pair {
                        x,
                        y,
                        z: Int::from((r - 1) / 2),
                        coprime: None,
                    });
                }
            }
        }
    } else {
        let Tables::QuarticBig(p4) = tables else { unreachable!() };
        for x in lo..hi {
            for y in x + 1..bound {
                let s: Int = &p4[x as usize] + &p4[y as usize];
                if let Some(z) = figurate::tri_index(&s) {
                    out.push(SolutionItem::Pair { x, y, z, coprime: None });
                }
            }
        }
    }
    out
}

fn scan_pow_sum_tet(
    problem: &SearchProblem,
    tables: &Tables,
    fixed: bool,
    lo: u64,
    hi: u64,
) -> Vec<SolutionItem> {
    let mut out = Vec::new();
    let bound = problem.bound;
    let e = problem.exponent;
    if fixed {
        let Tables::Tet(tet) = tables else { unreachable!() };
        let filter = PowerFilter::powers(e);
        for x in lo..hi {
            let a = tet[x as usize];
            for y in x + 1..bound {
                let s = a + tet[y as usize];
                if s == 0 || !filter.candidate(s) {
                    continue;
                }
                let s_big = Int::from(s);
                let r = figurate::iroot(&s_big, e).expect("nonnegative");
                if !r.is_zero() && num::pow::pow(r.clone(), e as usize) == s_big {
                    out.push(SolutionItem::Pair { x, y, z: r, coprime: None });
                }
            }
        }
    } else {
        let Tables::TetBig(tet) = tables else { unreachable!() };
        for x in lo..hi {
            for y in x + 1..bound {
                let s: Int = &tet[x as usize] + &tet[y as usize];
                if s.is_zero() {
                    continue;
                }
                let r = figurate::iroot(&s, e).expect("nonnegative");
                if !r.is_zero() && num::pow::pow(r.clone(), e as usize) == s {
                    out.push(SolutionItem::Pair { x, y, z: r, coprime: None });
                }
            }
        }
    }
    out
}

fn scan_sqprod_tet(
    problem: &SearchProblem,
    tables: &Tables,
    fixed: bool,
    lo: u64,
    hi: u64,
) -> Vec<SolutionItem> {
    let mut out = Vec::new();
    let bound = problem.bound;
    if fixed {
        let Tables::Tet(tet) = tables else { unreachable!() };
        let filter = PowerFilter::squares();
        for x in lo..hi {
            let a = tet[x as usize];
            for y in x + 1..bound {
                if problem.require_gap && y <= 2 * x + 2 {
                    continue;
                }
                let s = a * tet[y as usize];
                if !filter.candidate(s) {
                    continue;
                }
                if let Some(r) = exact_sqrt_u128(s) {
                    out.push(SolutionItem::Pair { x, y, z: Int::from(r), coprime: None });
                }
            }
        }
    } else {
        let Tables::TetBig(tet) = tables else { unreachable!() };
        for x in lo..hi {
            for y in x + 1..bound {
                if problem.require_gap && y <= 2 * x + 2 {
                    continue;
                }
                let s: Int = &tet[x as usize] * &tet[y as usize];
                let r = figurate::isqrt(&s).expect("nonnegative");
                if &r * &r == s {
                    out.push(SolutionItem::Pair { x, y, z: r, coprime: None });
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// drivers
// ---------------------------------------------------------------------------

/// Soundness gate: every reported hit must survive the exact equation
/// checker, which shares no code with the scan loops' fast arithmetic.
fn reverify(problem: &SearchProblem, items: &[SolutionItem]) -> Result<()> {
    for item in items {
        let (equation, comps) = match item {
            SolutionItem::Pair { x, y, z, .. } => {
                let equation = match problem.id {
                    ProblemId::SqSumTet => Equation::TetSqSumZ,
                    ProblemId::TzQuartic => Equation::TriQuartic,
                    ProblemId::PowSumTet => Equation::PowSumTet(problem.exponent),
                    ProblemId::SqprodTet => Equation::SqProdTet,
                    ProblemId::PalTri => unreachable!(),
                };
                let mut comps = BTreeMap::new();
                comps.insert("x".to_string(), Scalar::from(Int::from(*x)));
                comps.insert("y".to_string(), Scalar::from(Int::from(*y)));
                comps.insert("z".to_string(), Scalar::from(z.clone()));
                (equation, comps)
            }
            SolutionItem::Index { n, value } => {
                let equation = Equation::PalTri { base: problem.base, delta: 0 };
                let mut comps = BTreeMap::new();
                comps.insert("n".to_string(), Scalar::from(Int::from(*n)));
                comps.insert("t".to_string(), Scalar::from(value.clone()));
                (equation, comps)
            }
        };
        let verdict = equation.check(&comps)?;
        if !verdict.holds {
            return Err(Error::internal(format!(
                "search hit failed exact re-verification: {item:?} for {}",
                problem.id.as_str()
            )));
        }
    }
    Ok(())
}

/// Runs a search with automatic backend selection.
pub fn run(problem: &SearchProblem) -> Result<SearchReport> {
    run_with_mode(problem, ArithMode::Auto)
}

/// Runs a search on an explicit arithmetic backend. `Fixed128` errors if the
/// bound admits intermediates beyond 128 bits.
pub fn run_with_mode(problem: &SearchProblem, mode: ArithMode) -> Result<SearchReport> {
    problem.validate()?;
    let fixed = match mode {
        ArithMode::Auto => fits_fixed(problem),
        ArithMode::Fixed128 => {
            if !fits_fixed(problem) {
                return Err(Error::domain(format!(
                    "{}: bound {} exceeds the 128-bit fast path",
                    problem.id.as_str(),
                    problem.bound
                )));
            }
            true
        }
        ArithMode::BigInt => false,
    };
    let started = Instant::now();
    let tables = build_tables(problem, fixed);
    let chunks = partition(1, problem.bound, problem.partitions);

    let buffers: Vec<Vec<SolutionItem>> = if chunks.len() == 1 {
        vec![scan_chunk(problem, &tables, fixed, chunks[0].0, chunks[0].1)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|&(lo, hi)| {
                    let tables = &tables;
                    scope.spawn(move || scan_chunk(problem, tables, fixed, lo, hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };

    let mut solutions = Vec::new();
    for buffer in buffers {
        solutions.extend(buffer);
    }
    reverify(problem, &solutions)?;
    Ok(SearchReport {
        problem: problem.clone(),
        count: solutions.len(),
        solutions,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn partition(lo: u64, hi: u64, parts: usize) -> Vec<(u64, u64)> {
    let span = hi.saturating_sub(lo);
    let parts = (parts as u64).clamp(1, span.max(1));
    let step = span / parts;
    let rem = span % parts;
    let mut chunks = Vec::with_capacity(parts as usize);
    let mut cursor = lo;
    for i in 0..parts {
        let len = step + if i < rem { 1 } else { 0 };
        chunks.push((cursor, cursor + len));
        cursor += len;
    }
    chunks
}

// convenience wrappers matching the operation surface

pub fn search_sq_sum_tet(bound: u64, coprime_only: bool) -> Result<SearchReport> {
    let mut p = SearchProblem::new(ProblemId::SqSumTet, bound);
    p.coprime_only = coprime_only;
    run(&p)
}

pub fn search_palindromic_tri(bound: u64, base: u32) -> Result<SearchReport> {
    let mut p = SearchProblem::new(ProblemId::PalTri, bound);
    p.base = base;
    run(&p)
}

pub fn search_tz_quartic(bound: u64) -> Result<SearchReport> {
    run(&SearchProblem::new(ProblemId::TzQuartic, bound))
}

pub fn search_pow_sum_tet(exponent: u32, bound: u64) -> Result<SearchReport> {
    let mut p = SearchProblem::new(ProblemId::PowSumTet, bound);
    p.exponent = exponent;
    run(&p)
}

pub fn search_sqprod_tet(bound: u64, require_gap: bool) -> Result<SearchReport> {
    let mut p = SearchProblem::new(ProblemId::SqprodTet, bound);
    p.require_gap = require_gap;
    run(&p)
}
