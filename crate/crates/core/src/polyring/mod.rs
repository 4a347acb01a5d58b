//! Sparse multivariate polynomials and rational functions with exact
//! rational coefficients.
//!
//! Polynomials are kept in a canonical form — variables sorted and pruned to
//! those actually occurring, terms ordered graded-lexicographically, no zero
//! coefficients — so equality is plain structural comparison. Coefficients
//! are rationals throughout: the formulas this crate verifies live in
//! `(1/2)Z[u]` and `(1/6)Z[b]`, and integrality is a property to test, not a
//! representation constraint.

mod text;
mod univar;

pub use text::parse;
pub use univar::{integer_valued_on_ap, resultant, uni_gcd};

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::figurate::{Int, Rat};

/// Hard cap on stored terms; operations that would exceed it fail with a
/// resource error instead of thrashing.
pub const MAX_TERMS: usize = 1_000_000;

/// Exponent vector, parallel to the owning polynomial's variable list.
/// Ordered by total degree, ties broken lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rat::from_integer(Int::from(n)))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rat::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rat::zero))
    }

    /// Variables actually occurring, sorted.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in a single variable (0 if the variable does not occur).
    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    /// Terms in canonical (ascending graded-lex) order as
    /// `(variable-name, exponent)` lists plus coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<(&str, u32)>, &Rat)> {
        self.terms.iter().map(move |(m, c)| {
            let vars: Vec<(&str, u32)> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (self.vars[i].as_str(), e))
                .collect();
            (vars, c)
        })
    }

    /// Builds from raw term data; exponent maps may mention any variables.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rat, Vec<(String, u32)>)>) -> Self {
        let mut acc = MultiPoly::zero();
        for (coeff, exps) in terms {
            let mut names: Vec<String> = exps.iter().map(|(v, _)| v.clone()).collect();
            names.sort();
            names.dedup();
            let mono = Monomial(
                names
                    .iter()
                    .map(|n| exps.iter().filter(|(v, _)| v == n).map(|(_, e)| *e).sum())
                    .collect(),
            );
            let mut term = MultiPoly { vars: names, terms: BTreeMap::new() };
            if !coeff.is_zero() {
                term.terms.insert(mono, coeff);
            }
            term.normalize();
            acc = &acc + &term;
        }
        acc
    }

    /// Drops zero coefficients and variables that no longer occur.
    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let old = std::mem::take(&mut self.terms);
        for (m, c) in old {
            self.terms.insert(Monomial(keep.iter().map(|&i| m.0[i]).collect()), c);
        }
    }

    /// Re-expresses both polynomials over the union of their variables.
    fn aligned(&self, other: &Self) -> (Vec<String>, BTreeMap<Monomial, Rat>, BTreeMap<Monomial, Rat>) {
        let union: BTreeSet<&String> = self.vars.iter().chain(other.vars.iter()).collect();
        let vars: Vec<String> = union.into_iter().cloned().collect();
        let remap = |p: &MultiPoly| -> BTreeMap<Monomial, Rat> {
            let idx: Vec<usize> = p
                .vars
                .iter()
                .map(|v| vars.iter().position(|u| u == v).expect("union"))
                .collect();
            p.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; vars.len()];
                    for (j, &exp) in m.0.iter().enumerate() {
                        e[idx[j]] = exp;
                    }
                    (Monomial(e), c.clone())
                })
                .collect()
        };
        (vars.clone(), remap(self), remap(other))
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let (vars, mut a, b) = self.aligned(other);
        for (m, c) in b {
            let entry = a.entry(m).or_insert_with(Rat::zero);
            *entry += c;
        }
        let mut out = MultiPoly { vars, terms: a };
        out.normalize();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product with the term-count guardrail.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero());
        }
        if self.term_count().saturating_mul(other.term_count()) > 4 * MAX_TERMS {
            return Err(Error::Resource(format!(
                "product of {} x {} terms exceeds the term guardrail",
                self.term_count(),
                other.term_count()
            )));
        }
        let (vars, a, b) = self.aligned(other);
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let m = Monomial(ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect());
                let entry = acc.entry(m).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
            if acc.len() > MAX_TERMS {
                return Err(Error::Resource(format!(
                    "intermediate product reached {} terms",
                    acc.len()
                )));
            }
        }
        let mut out = MultiPoly { vars, terms: acc };
        out.normalize();
        Ok(out)
    }

    /// `self^k` by repeated squaring, guarded like `try_mul`.
    pub fn try_pow(&self, k: u32) -> Result<Self> {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = k;
        loop {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.try_mul(&base)?;
        }
        Ok(result)
    }

    pub fn pow(&self, k: u32) -> Self {
        self.try_pow(k).expect("term guardrail")
    }

    /// Multiplies every coefficient by an exact rational.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Divides every coefficient by a nonzero integer (exact).
    pub fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero scalar");
        self.scale(&Rat::new(Int::one(), Int::from(d)))
    }

    /// Exact composition: replaces `var` by `replacement`. A variable absent
    /// from the universe leaves the polynomial unchanged.
    pub fn substitute(&self, var: &str, replacement: &Self) -> Result<Self> {
        let Some(pos) = self.vars.iter().position(|v| v == var) else {
            return Ok(self.clone());
        };
        let max_exp = self.terms.keys().map(|m| m.0[pos]).max().unwrap_or(0);
        // powers[e] = replacement^e
        let mut powers = Vec::with_capacity(max_exp as usize + 1);
        powers.push(MultiPoly::one());
        for _ in 0..max_exp {
            let next = powers.last().unwrap().try_mul(replacement)?;
            powers.push(next);
        }
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = vec![0u32; self.vars.len() - 1];
            for (i, &e) in m.0.iter().enumerate() {
                if i < pos {
                    rest[i] = e;
                } else if i > pos {
                    rest[i - 1] = e;
                }
            }
            let mut vars_rest = self.vars.clone();
            vars_rest.remove(pos);
            let mut base = MultiPoly { vars: vars_rest, terms: BTreeMap::new() };
            base.terms.insert(Monomial(rest), c.clone());
            base.normalize();
            acc = acc.add(&base.try_mul(&powers[m.0[pos] as usize])?);
        }
        Ok(acc)
    }

    /// Exact evaluation; every occurring variable must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<String, Rat>) -> Result<Rat> {
        for v in &self.vars {
            if !assignment.contains_key(v) {
                return Err(Error::domain(format!("eval: variable `{v}` unassigned")));
            }
        }
        let point: Vec<&Rat> = self.vars.iter().map(|v| &assignment[v]).collect();
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term *= point[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Leading term in graded-lex order.
    fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact division: `Some(r)` with `self = divisor * r`, or `None` if the
    /// division is inexact. Errors on a zero divisor.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        if divisor.is_zero() {
            return Err(Error::domain("divide_exact: division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(Some(MultiPoly::zero()));
        }
        let (vars, a, b) = self.aligned(divisor);
        let mut rem = MultiPoly { vars: vars.clone(), terms: a };
        rem.normalize();
        let div = {
            let mut d = MultiPoly { vars, terms: b };
            d.normalize();
            d
        };
        let mut quotient = MultiPoly::zero();
        while !rem.is_zero() {
            // Re-align on each trip: normalize() may have pruned variables.
            let (vars_u, r_terms, d_terms) = rem.aligned(&div);
            let (rm, rc) = {
                let r = MultiPoly { vars: vars_u.clone(), terms: r_terms };
                let (m, c) = r.leading().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
                (m, c)
            };
            let d_poly = MultiPoly { vars: vars_u.clone(), terms: d_terms };
            let (dm, dc) = d_poly.leading().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
            if rm.0.iter().zip(&dm.0).any(|(r, d)| r < d) {
                return Ok(None);
            }
            let qm = Monomial(rm.0.iter().zip(&dm.0).map(|(r, d)| r - d).collect());
            let qc = &rc / &dc;
            let mut qterm = MultiPoly { vars: vars_u, terms: BTreeMap::new() };
            qterm.terms.insert(qm, qc);
            qterm.normalize();
            quotient = quotient.add(&qterm);
            rem = rem.sub(&qterm.try_mul(&div)?);
            if quotient.term_count() > MAX_TERMS {
                return Err(Error::Resource("divide_exact quotient exceeds term guardrail".into()));
            }
        }
        Ok(Some(quotient))
    }

    /// Simultaneous substitution: every listed variable is replaced in one
    /// pass, so replacements may mention the substituted variables.
    pub fn substitute_simultaneous(&self, subs: &[(&str, &MultiPoly)]) -> Result<Self> {
        // two-phase rename through fresh intermediates
        let mut staged = self.clone();
        for (i, (var, _)) in subs.iter().enumerate() {
            staged = staged.substitute(var, &MultiPoly::var(&format!("__subst_{i}")))?;
        }
        for (i, (_, replacement)) in subs.iter().enumerate() {
            staged = staged.substitute(&format!("__subst_{i}"), replacement)?;
        }
        Ok(staged)
    }

    /// True iff every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Largest absolute coefficient denominator (1 for integer polynomials).
    pub fn coefficient_denominator_lcm(&self) -> Int {
        let mut l = Int::one();
        for c in self.terms.values() {
            l = num::Integer::lcm(&l, c.denom());
        }
        l.abs()
    }
}

/// `t_P = P(P+1)/2` lifted to the polynomial ring.
pub fn tri_poly(p: &MultiPoly) -> MultiPoly {
    p.try_mul(&p.add(&MultiPoly::one())).expect("guardrail").div_int(2)
}

/// `T_P = P(P+1)(P+2)/6` lifted to the polynomial ring.
pub fn tet_poly(p: &MultiPoly) -> MultiPoly {
    p.try_mul(&p.add(&MultiPoly::one()))
        .and_then(|q| q.try_mul(&p.add(&MultiPoly::from_int(2))))
        .expect("guardrail")
        .div_int(6)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl std::ops::$trait for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$impl(self, rhs)
            }
        }
        impl std::ops::$trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$impl(&self, &rhs)
            }
        }
        impl std::ops::$trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$impl(&self, rhs)
            }
        }
        impl std::ops::$trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$impl(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("term guardrail")
    }
}
impl std::ops::Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        (&self).mul(&rhs)
    }
}
impl std::ops::Mul<&MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        (&self).mul(rhs)
    }
}
impl std::ops::Mul<MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self.mul(&rhs)
    }
}
impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
impl std::ops::Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(&self)
    }
}

/// Quotient of two polynomials; the denominator is nonzero. No reduction is
/// performed — the only canonical question a rational function answers
/// exactly is whether it is zero.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("RatFunc: zero denominator"));
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(RatFunc {
            num: self.num.try_mul(&other.den)?.add(&other.num.try_mul(&self.den)?),
            den: self.den.try_mul(&other.den)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(RatFunc {
            num: self.num.try_mul(&other.num)?,
            den: self.den.try_mul(&other.den)?,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::domain("RatFunc: division by zero"));
        }
        Ok(RatFunc {
            num: self.num.try_mul(&other.den)?,
            den: self.den.try_mul(&other.num)?,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        Ok(RatFunc { num: self.num.try_pow(k)?, den: self.den.try_pow(k)? })
    }

    /// Exact equality by cross-multiplication.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        Ok(self.num.try_mul(&other.den)? == other.num.try_mul(&self.den)?)
    }

    /// Exact evaluation; a vanishing denominator is an error, never absorbed.
    pub fn eval(&self, assignment: &BTreeMap<String, Rat>) -> Result<Rat> {
        let d = self.den.eval(assignment)?;
        if d.is_zero() {
            return Err(Error::DenominatorZero(format!(
                "rational function denominator {} vanishes at the given point",
                self.den
            )));
        }
        Ok(self.num.eval(assignment)? / d)
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == MultiPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
