//! Affine recurrences with invariant checking — the shared engine behind
//! every Pell-style family: `s_n = M s_{n-1} + c`, optionally constrained by
//! a polynomial `Q` with `Q(s_n) = Q(s_0)` at every step.
//!
//! The scalar type is generic: integer states drive the numeric families,
//! polynomial states drive the parametric one.

use crate::error::{Error, Result};
use crate::figurate::{Int, Rat};
use crate::polyring::MultiPoly;

/// Ring scalar a recurrence can run over.
pub trait RingScalar: Clone + std::fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Result<Self>;
    /// Embedding into the polynomial ring, used for invariant checking.
    fn to_poly(&self) -> MultiPoly;
}

impl RingScalar for Int {
    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }

    fn to_poly(&self) -> MultiPoly {
        MultiPoly::constant(Rat::from_integer(self.clone()))
    }
}

impl RingScalar for MultiPoly {
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }

    fn to_poly(&self) -> MultiPoly {
        self.clone()
    }
}

/// Conserved quantity of a recurrence: a polynomial over the state variable
/// names together with its expected constant value.
#[derive(Debug, Clone)]
pub struct RecurrenceInvariant {
    pub polynomial: MultiPoly,
    pub expected: MultiPoly,
}

/// `s_n = M s_{n-1} + c` with an optional invariant.
#[derive(Debug, Clone)]
pub struct AffineRecurrence<S> {
    pub state_vars: Vec<&'static str>,
    pub matrix: Vec<Vec<S>>,
    pub offset: Vec<S>,
    pub initial: Vec<S>,
    pub invariant: Option<RecurrenceInvariant>,
}

impl<S: RingScalar> AffineRecurrence<S> {
    pub fn dimension(&self) -> usize {
        self.state_vars.len()
    }

    /// Substitutes the state into the invariant and compares with the
    /// expected constant. Violations mean a registry bug and abort loudly.
    pub fn check_invariant(&self, state: &[S]) -> Result<()> {
        let Some(inv) = &self.invariant else {
            return Ok(());
        };
        let mut value = inv.polynomial.clone();
        for (i, var) in self.state_vars.iter().enumerate() {
            value = value.substitute(var, &state[i].to_poly())?;
        }
        if value != inv.expected {
            return Err(Error::internal(format!(
                "recurrence invariant violated: expected {}, got {}",
                inv.expected, value
            )));
        }
        Ok(())
    }

    /// One exact affine step; the invariant is re-checked on the result.
    pub fn step(&self, state: &[S]) -> Result<Vec<S>> {
        let d = self.dimension();
        if state.len() != d {
            return Err(Error::domain(format!(
                "state dimension {} does not match recurrence dimension {d}",
                state.len()
            )));
        }
        let mut next = Vec::with_capacity(d);
        for i in 0..d {
            let mut acc = self.offset[i].clone();
            for j in 0..d {
                acc = acc.add(&self.matrix[i][j].mul(&state[j])?);
            }
            next.push(acc);
        }
        self.check_invariant(&next)?;
        Ok(next)
    }

    /// State after `n` steps from the initial state, with the invariant
    /// checked at every state including the initial one.
    pub fn iterate(&self, n: u64) -> Result<Vec<S>> {
        let mut state = self.initial.clone();
        self.check_invariant(&state)?;
        for _ in 0..n {
            state = self.step(&state)?;
        }
        Ok(state)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    /// x_n = 17 x_{n-1} + 6 z_{n-1} + 4, z_n = 48 x + 17 z + 12,
    /// preserving z^2 - (8x^2 + 4x + 1) = 0.
    fn consec() -> AffineRecurrence<Int> {
        AffineRecurrence {
            state_vars: vec!["x", "z"],
            matrix: vec![vec![int(17), int(6)], vec![int(48), int(17)]],
            offset: vec![int(4), int(12)],
            initial: vec![int(0), int(1)],
            invariant: Some(RecurrenceInvariant {
                polynomial: parse("z^2 - 8*x^2 - 4*x - 1").unwrap(),
                expected: MultiPoly::zero(),
            }),
        }
    }

    #[test]
    fn single_step_matches_hand_computation() {
        let rec = consec();
        let s1 = rec.step(&[int(0), int(1)]).unwrap();
        assert_eq!(s1, vec![int(10), int(29)]);
        assert_eq!(int(841), int(29) * int(29)); // f(10) = 841 = 29^2
    }

    #[test]
    fn iterate_checks_invariant_throughout() {
        let rec = consec();
        assert_eq!(rec.iterate(2).unwrap(), vec![int(348), int(985)]);
        // a poisoned seed is rejected immediately
        let mut bad = consec();
        bad.initial = vec![int(0), int(2)];
        assert!(matches!(bad.iterate(1), Err(Error::Internal(_))));
    }

    #[test]
    fn dimension_mismatch_is_domain_error() {
        let rec = consec();
        assert!(matches!(rec.step(&[int(1)]), Err(Error::Domain(_))));
    }

    #[test]
    fn polynomial_states() {
        // trivial polynomial recurrence: s' = s + 1 over Q[u]
        let rec = AffineRecurrence {
            state_vars: vec!["s"],
            matrix: vec![vec![MultiPoly::one()]],
            offset: vec![MultiPoly::one()],
            initial: vec![MultiPoly::var("u")],
            invariant: None,
        };
        let s3 = rec.iterate(3).unwrap();
        assert_eq!(s3[0], parse("u + 3").unwrap());
    }
}
