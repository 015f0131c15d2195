//! Scalar-curvature upper bounds for complete intersections carrying an
//! area-nonincreasing map to their ambient projective space.
//!
//! Under the Fubini-Study normalization of constant holomorphic sectional
//! curvature 4, the minimum of the scalar curvature of `V^n(a_1,...,a_r)`
//! is bounded by `4 n k0`, where `k0` is the smallest nonnegative twist of
//! valid parity with nonvanishing Dirac index. The closed-form case table is
//!
//! ```text
//! 4n(n+r+1-|a|)   if |a| <= n+r                        (fano)
//! 0               if |a| > n+r, n even, V spin         (spin_even)
//! 4n              if |a| > n+r, V not spin             (nonspin)
//! 8n              if |a| > n+r, n odd, V spin          (spin_odd)
//! ```
//!
//! [`bound_closed_form`] evaluates the table literally; [`bound_from_k0`]
//! recomputes the same number from the minimal-twist search, so equality of
//! the two is a genuine cross-check of the index engine. Bounds are exact
//! integers; no unit rescaling is offered.

use crate::indextheory::{minimal_k0, CompleteIntersection, IndexError};
use std::fmt;

/// Which row of the case table applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCase {
    Fano,
    SpinEven,
    NonSpin,
    SpinOdd,
}

impl BoundCase {
    pub fn label(self) -> &'static str {
        match self {
            BoundCase::Fano => "fano",
            BoundCase::SpinEven => "spin_even",
            BoundCase::NonSpin => "nonspin",
            BoundCase::SpinOdd => "spin_odd",
        }
    }
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An upper bound on the minimum of the scalar curvature, in units of
/// inverse length squared under the holomorphic-sectional-curvature-4
/// normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureBound {
    pub ci: CompleteIntersection,
    /// The bound `4 n k0`, exact.
    pub value: i64,
    pub case: BoundCase,
    /// Minimal valid twist with nonvanishing index.
    pub k0: u64,
    /// Set on the boundary `|a| = n+r+1` with n even, where the vanishing
    /// fano formula and the spin_even row coincide.
    pub note: Option<&'static str>,
}

fn classify(ci: &CompleteIntersection) -> BoundCase {
    if ci.total_degree() <= ci.ambient_dimension() as u64 {
        BoundCase::Fano
    } else if !ci.is_spin() {
        BoundCase::NonSpin
    } else if ci.n().is_multiple_of(2) {
        BoundCase::SpinEven
    } else {
        BoundCase::SpinOdd
    }
}

fn boundary_note(ci: &CompleteIntersection) -> Option<&'static str> {
    if ci.total_degree() == ci.ambient_dimension() as u64 + 1 && ci.n().is_multiple_of(2) {
        Some("total degree n+r+1 with n even: the fano formula and the spin_even row both give 0")
    } else {
        None
    }
}

/// The four-case table evaluated literally, with `k0` back-filled as
/// `value / 4n`.
pub fn bound_closed_form(ci: &CompleteIntersection) -> CurvatureBound {
    let n = ci.n() as i64;
    let case = classify(ci);
    let k0: i64 = match case {
        BoundCase::Fano => ci.ambient_dimension() as i64 + 1 - ci.total_degree() as i64,
        BoundCase::SpinEven => 0,
        BoundCase::NonSpin => 1,
        BoundCase::SpinOdd => 2,
    };
    CurvatureBound {
        ci: ci.clone(),
        value: 4 * n * k0,
        case,
        k0: k0 as u64,
        note: boundary_note(ci),
    }
}

/// The bound recomputed as `4 n * minimal_k0(ci)`, independently of the
/// table.
pub fn bound_from_k0(ci: &CompleteIntersection) -> Result<CurvatureBound, IndexError> {
    let k0 = minimal_k0(ci)?;
    Ok(CurvatureBound {
        ci: ci.clone(),
        value: 4 * ci.n() as i64 * k0 as i64,
        case: classify(ci),
        k0,
        note: boundary_note(ci),
    })
}

/// Which multiple of the generating class the second Stiefel-Whitney class
/// is, in the general estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum W2Case {
    /// `w_2(M) = n c (mod 2)`
    NMultiple,
    /// `w_2(M) = (n+1) c (mod 2)`
    NPlusOneMultiple,
}

/// The general estimate `2n ||alpha||` resp. `2(n+1) ||alpha||` for a
/// 2-form norm bound `alpha_norm`.
pub fn general_bound(n: u32, case: W2Case, alpha_norm: f64) -> f64 {
    debug_assert!(alpha_norm >= 0.0);
    match case {
        W2Case::NMultiple => 2.0 * n as f64 * alpha_norm,
        W2Case::NPlusOneMultiple => 2.0 * (n as f64 + 1.0) * alpha_norm,
    }
}
