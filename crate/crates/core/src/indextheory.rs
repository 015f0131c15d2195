//! Twisted Dirac indices of complete intersections, computed three
//! independent ways, and the Hilbert polynomials they interpolate to.
//!
//! A complete intersection `V^n(a_1, ..., a_r)` is the transverse
//! intersection of `r` hypersurfaces of degrees `a_j` in projective space of
//! complex dimension `n + r`; `r = 0` denotes `CP^n` itself. Writing `x` for
//! the restricted hyperplane class, the A-hat class is
//!
//! ```text
//! A(V) = ((x/2)/sinh(x/2))^{n+r+1} * prod_j sinh(a_j x/2)/(a_j x/2)
//! ```
//!
//! and the index of the Dirac operator twisted into the k-th power of the
//! hyperplane bundle is the pairing `(A(V) e^{kx/2})[V]`, an integer
//! whenever `k === n+r+1-|a| (mod 2)`. The same number has two other
//! expressions used here as cross-checks: a residue
//! `2^{-n-1} res_{x=0}(sinh(x/2)^{-n-r-1} e^{kx/2} prod_j sinh(a_j x/2))`
//! and a finite lattice sum of values of the degree-n Hilbert polynomial of
//! projective space. All three routes are evaluated in exact rational
//! arithmetic and must agree exactly.
//!
//! As a function of the twist the index is a polynomial of degree `n` (the
//! Hilbert polynomial) with leading coefficient `a_1...a_r / (2^n n!)`. Its
//! integer zero set drives the minimal-twist search behind the curvature
//! bounds in [`crate::bounds`].
//!
//! For `n <= 2` the second cohomology of a complete intersection need not be
//! generated by the hyperplane class (elliptic curves, K3 surfaces, ...);
//! the parity criterion `k === n+r+1-|a| (mod 2)` is applied formally in
//! those edge cases.

use crate::series::{exp_halfk, sinh_ratio, Coeff, LaurentSeries, RationalSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Errors from descriptor construction and index computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("complex dimension must be at least 1")]
    ZeroDimension,
    #[error("hypersurface degrees must be at least 1")]
    ZeroDegree,
    /// The requested twist k admits no spin^c structure on this manifold.
    #[error("twist k = {k} has invalid parity for {ci}: k === {required} (mod 2) required")]
    ParityViolation { ci: String, k: i64, required: u8 },
    /// The minimal-twist search ran past its hard cap. The Hilbert
    /// polynomial has at most n zeros, so this signals an arithmetic bug.
    #[error("no nonvanishing index within {probes} probes of {ci}; arithmetic is inconsistent")]
    SearchExhausted { ci: String, probes: u32 },
    #[error("hyperplane sections require complex dimension at least 2")]
    DimensionTooSmall,
}

/// Descriptor of a complete intersection `V^n(a_1, ..., a_r)`.
///
/// `r = 0` (no degrees) is the projective space `CP^n`. The hyperplane class
/// is tracked implicitly: series live in the single variable `x` and the
/// fundamental-class pairing multiplies by `x^n[V] = a_1 ... a_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompleteIntersection {
    n: u32,
    degrees: Vec<u32>,
}

impl CompleteIntersection {
    pub fn new(n: u32, degrees: Vec<u32>) -> Result<Self, IndexError> {
        if n == 0 {
            return Err(IndexError::ZeroDimension);
        }
        if degrees.contains(&0) {
            return Err(IndexError::ZeroDegree);
        }
        Ok(CompleteIntersection { n, degrees })
    }

    /// The projective space `CP^n`.
    pub fn projective_space(n: u32) -> Result<Self, IndexError> {
        Self::new(n, Vec::new())
    }

    /// Complex dimension n.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Hypersurface degrees `a_1, ..., a_r`.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Codimension r in the ambient projective space.
    pub fn codimension(&self) -> u32 {
        self.degrees.len() as u32
    }

    /// Dimension `n + r` of the ambient projective space.
    pub fn ambient_dimension(&self) -> u32 {
        self.n + self.codimension()
    }

    /// Total degree `|a| = a_1 + ... + a_r`.
    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().map(|&a| a as u64).sum()
    }

    /// Top-class pairing `x^n[V] = a_1 ... a_r`.
    pub fn top_pairing(&self) -> BigInt {
        self.degrees
            .iter()
            .fold(BigInt::one(), |acc, &a| acc * BigInt::from(a))
    }

    /// A complete intersection is spin iff `|a| === n+r+1 (mod 2)`.
    pub fn is_spin(&self) -> bool {
        self.required_parity() == 0
    }

    /// The residue class mod 2 that valid twists must lie in:
    /// `n+r+1-|a| mod 2`.
    pub fn required_parity(&self) -> u8 {
        let m = self.ambient_dimension() as i64 + 1 - self.total_degree() as i64;
        m.rem_euclid(2) as u8
    }

    /// Whether a spin^c structure with canonical class `k x` exists,
    /// i.e. `k === n+r+1-|a| (mod 2)`.
    pub fn valid_parity(&self, k: i64) -> bool {
        k.rem_euclid(2) as u8 == self.required_parity()
    }

    /// The section `W = V^{n-1}(1, a_1, ..., a_r)` by a generic hyperplane.
    pub fn hyperplane_section(&self) -> Result<CompleteIntersection, IndexError> {
        if self.n < 2 {
            return Err(IndexError::DimensionTooSmall);
        }
        let mut degrees = Vec::with_capacity(self.degrees.len() + 1);
        degrees.push(1);
        degrees.extend_from_slice(&self.degrees);
        CompleteIntersection::new(self.n - 1, degrees)
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            write!(f, "CP^{}", self.n)
        } else {
            let list = self
                .degrees
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "V^{}({})", self.n, list)
        }
    }
}

/// Every complete intersection with `1 <= n <= n_max`, `r <= r_max`, and all
/// degrees in `1..=degree_max`, one representative per manifold (degree
/// tuples nondecreasing), sorted lexicographically by `(n, r, degrees)`.
pub fn scan_family(n_max: u32, r_max: u32, degree_max: u32) -> Vec<CompleteIntersection> {
    fn extend(out: &mut Vec<Vec<u32>>, tuple: &mut Vec<u32>, left: u32, degree_max: u32) {
        if left == 0 {
            out.push(tuple.clone());
            return;
        }
        let lo = tuple.last().copied().unwrap_or(1);
        for a in lo..=degree_max {
            tuple.push(a);
            extend(out, tuple, left - 1, degree_max);
            tuple.pop();
        }
    }
    let mut family = Vec::new();
    for n in 1..=n_max {
        for r in 0..=r_max {
            let mut tuples = Vec::new();
            extend(&mut tuples, &mut Vec::new(), r, degree_max.max(1));
            for degrees in tuples {
                family.push(CompleteIntersection { n, degrees });
            }
        }
    }
    family
}

/// The A-hat class of `ci` as a power series in the hyperplane class,
/// truncated at `order`. An even series with constant term 1.
pub fn a_hat_class(ci: &CompleteIntersection, order: usize) -> RationalSeries {
    let p = ci.ambient_dimension() + 1;
    let mut acc = sinh_ratio(1, order)
        .invert()
        .expect("sinh(x/2)/(x/2) has constant term 1")
        .pow(p);
    for &a in ci.degrees() {
        acc = acc.mul(&sinh_ratio(a as u64, order));
    }
    acc
}

/// The index of the Dirac operator with twist `k`, via the pairing route:
/// `a_1...a_r` times the coefficient of `x^n` in `A(V) e^{kx/2}`.
///
/// Defined as a rational for every integer `k`; the value is an integer
/// exactly when [`CompleteIntersection::valid_parity`] holds. That fact is
/// what makes the interpolation in [`hilbert_polynomial`] work from
/// consecutive nodes of mixed parity.
pub fn index(ci: &CompleteIntersection, k: i64) -> BigRational {
    let n = ci.n() as usize;
    let pairing = a_hat_class(ci, n).mul(&exp_halfk(k, n));
    pairing.coeff(n) * BigRational::from(ci.top_pairing())
}

/// The same index through Laurent division and residue extraction:
/// `2^{-n-1} res_{x=0}(sinh(x/2)^{-n-r-1} e^{kx/2} prod_j sinh(a_j x/2))`.
///
/// An independent code path from [`index`]: no series inversion of the
/// even ratio, no fundamental-class factor.
pub fn index_residue(ci: &CompleteIntersection, k: i64) -> BigRational {
    let n = ci.n() as i64;
    let r = ci.codimension() as i64;
    // Carrying each factor to degree n + r + 3 leaves the product exact
    // through degree r + 1 > -1, so the residue is covered.
    let m = n + r + 3;
    let p = (ci.ambient_dimension() + 1) as i32;
    let mut f = LaurentSeries::sinh_half(1, m)
        .pow(-p)
        .expect("sinh(x/2) has nonzero leading coefficient");
    f = f.mul(&LaurentSeries::from_power_series(&exp_halfk(k, m as usize)));
    for &a in ci.degrees() {
        f = f.mul(&LaurentSeries::sinh_half(a as u64, m));
    }
    let res = f.residue().expect("truncation order covers degree -1");
    res / BigRational::from(BigInt::from(2).pow(ci.n() + 1))
}

/// The same index as a brute-force lattice sum
/// `sum_{l_1} ... sum_{l_r} P_n(2 l_1 + ... + 2 l_r + k)`, where `2 l_j`
/// runs over `{1 - a_j, 3 - a_j, ..., a_j - 1}` and `P_n` is
/// [`cpn_hilbert`]. Serves as the independent oracle for the series routes.
pub fn index_lattice_sum(ci: &CompleteIntersection, k: i64) -> BigRational {
    let p = cpn_hilbert(ci.n());
    let mut total = BigRational::zero();
    // odometer over the integer offsets 2 l_j
    let mut offsets: Vec<i64> = ci.degrees().iter().map(|&a| 1 - a as i64).collect();
    loop {
        let arg = k + offsets.iter().sum::<i64>();
        total += p.eval_int(arg);
        let mut carry = true;
        for (offset, &a) in offsets.iter_mut().zip(ci.degrees()) {
            if *offset < a as i64 - 1 {
                *offset += 2;
                carry = false;
                break;
            }
            *offset = 1 - a as i64;
        }
        if carry {
            break;
        }
    }
    total
}

/// Parity-checked integer index, the strict mode used by the command line.
pub fn index_strict(ci: &CompleteIntersection, k: i64) -> Result<BigInt, IndexError> {
    if !ci.valid_parity(k) {
        return Err(IndexError::ParityViolation {
            ci: ci.to_string(),
            k,
            required: ci.required_parity(),
        });
    }
    let value = index(ci, k);
    debug_assert!(value.is_integer());
    Ok(value.to_integer())
}

/// A polynomial in the integer twist `k` with exact rational coefficients,
/// stored densely in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<Coeff>,
}

impl HilbertPolynomial {
    fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `k^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Coeff {
        self.coeffs.get(i).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> &Coeff {
        self.coeffs.last().expect("polynomials are nonempty")
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, k: &BigRational) -> BigRational {
        let mut acc = Coeff::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * k + c;
        }
        acc
    }

    pub fn eval_int(&self, k: i64) -> BigRational {
        self.eval(&BigRational::from(BigInt::from(k)))
    }

    /// Integer zeros in the inclusive range `[lo, hi]`.
    pub fn integer_zeros_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&k| self.eval_int(k).is_zero()).collect()
    }
}

impl fmt::Display for HilbertPolynomial {
    /// Renders over a common denominator, e.g. `(k^2 - 1)/8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let denom = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        let mut body = String::new();
        for (i, c) in ints.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let mag = c.abs();
            if body.is_empty() {
                if c.is_negative() {
                    body.push('-');
                }
            } else {
                body.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let coeff_part = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match i {
                0 => String::new(),
                1 => "k".to_string(),
                _ => format!("k^{}", i),
            };
            body.push_str(&coeff_part);
            body.push_str(&var_part);
        }
        if body.is_empty() {
            body.push('0');
        }
        if denom.is_one() {
            write!(f, "{}", body)
        } else if ints.iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "({})/{}", body, denom)
        } else {
            write!(f, "{}/{}", body, denom)
        }
    }
}

/// The Hilbert polynomial of projective space: the unique degree-n
/// polynomial with zeros `n-1, n-3, ..., 1-n`, normalized by
/// `P_n(n+1) = 1`; explicitly `prod_j (k - (n-1-2j)) / (2^n n!)`.
///
/// It is even as a function of `k` when n is even and odd when n is odd.
pub fn cpn_hilbert(n: u32) -> HilbertPolynomial {
    assert!(n >= 1, "projective space needs dimension at least 1");
    let mut coeffs = vec![Coeff::one()];
    for j in 0..n as i64 {
        let zero = BigRational::from(BigInt::from(n as i64 - 1 - 2 * j));
        // multiply by (k - zero)
        let mut next = vec![Coeff::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &zero;
        }
        coeffs = next;
    }
    let mut denom = BigInt::one();
    for i in 1..=n as u64 {
        denom *= BigInt::from(2 * i);
    }
    let scale = BigRational::new(BigInt::one(), denom);
    HilbertPolynomial::from_coeffs(coeffs.into_iter().map(|c| c * &scale).collect())
}

/// The Hilbert polynomial of `ci`: the degree-n polynomial through the
/// index values at the twists `k = 0, ..., n`, by exact Lagrange
/// interpolation. The index is polynomial in `k` even at twists of invalid
/// parity, so consecutive nodes are fine.
pub fn hilbert_polynomial(ci: &CompleteIntersection) -> HilbertPolynomial {
    let n = ci.n() as i64;
    let nodes: Vec<i64> = (0..=n).collect();
    let values: Vec<BigRational> = nodes.iter().map(|&k| index(ci, k)).collect();
    let mut acc = vec![Coeff::zero(); nodes.len()];
    for (i, &xi) in nodes.iter().enumerate() {
        if values[i].is_zero() {
            continue;
        }
        // basis numerator prod_{j != i} (k - x_j), denominator prod (x_i - x_j)
        let mut basis = vec![Coeff::one()];
        let mut denom = BigInt::one();
        for &xj in nodes.iter().filter(|&&xj| xj != xi) {
            let shift = BigRational::from(BigInt::from(xj));
            let mut next = vec![Coeff::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &shift;
            }
            basis = next;
            denom *= BigInt::from(xi - xj);
        }
        let weight = &values[i] / BigRational::from(denom);
        for (d, c) in basis.iter().enumerate() {
            acc[d] += c * &weight;
        }
    }
    HilbertPolynomial::from_coeffs(acc)
}

/// Hard cap on minimal-twist probes; the search is guaranteed to succeed
/// within `n + 1` probes because the Hilbert polynomial has at most `n`
/// zeros.
fn probe_cap(ci: &CompleteIntersection) -> u32 {
    2 * ci.n() + 4
}

/// The smallest twist `k >= 0` of valid parity with nonvanishing index.
pub fn minimal_k0(ci: &CompleteIntersection) -> Result<u64, IndexError> {
    let start = ci.required_parity() as i64;
    let cap = probe_cap(ci);
    for i in 0..cap as i64 {
        let k = start + 2 * i;
        if !index(ci, k).is_zero() {
            return Ok(k as u64);
        }
    }
    Err(IndexError::SearchExhausted {
        ci: ci.to_string(),
        probes: cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn ci(n: u32, degrees: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(n, degrees.to_vec()).unwrap()
    }

    fn int(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn descriptor_invariants() {
        let v = ci(3, &[2, 2]);
        assert_eq!(v.ambient_dimension(), 5);
        assert_eq!(v.total_degree(), 4);
        assert_eq!(v.top_pairing(), BigInt::from(4));
        assert!(v.is_spin()); // 4 === 6 (mod 2)
        assert!(!ci(2, &[3]).is_spin()); // 3 !== 4 (mod 2)
        assert_eq!(CompleteIntersection::new(0, vec![]), Err(IndexError::ZeroDimension));
        assert_eq!(CompleteIntersection::new(2, vec![0]), Err(IndexError::ZeroDegree));
    }

    #[test]
    fn a_hat_cp1_order_2() {
        let a = a_hat_class(&ci(1, &[]), 2);
        assert_eq!(a.coeff(0), &rat(1, 1));
        assert_eq!(a.coeff(1), &rat(0, 1));
        assert_eq!(a.coeff(2), &rat(-1, 12));
    }

    #[test]
    fn a_hat_constant_term_is_one() {
        for v in [ci(1, &[]), ci(2, &[4]), ci(3, &[2, 2]), ci(4, &[3, 5])] {
            assert_eq!(a_hat_class(&v, 6).coeff(0), &rat(1, 1));
        }
    }

    #[test]
    fn a_hat_is_even() {
        let a = a_hat_class(&ci(3, &[2, 3]), 7);
        for d in (1..=7).step_by(2) {
            assert_eq!(a.coeff(d), &rat(0, 1), "odd degree {}", d);
        }
    }

    #[test]
    fn index_todd_genus_of_cp2() {
        assert_eq!(index(&ci(2, &[]), 3), int(1));
    }

    #[test]
    fn index_quartic_k3_at_zero() {
        assert_eq!(index(&ci(2, &[4]), 0), int(2));
    }

    #[test]
    fn index_quadric_surface_vanishes_at_zero() {
        assert_eq!(index(&ci(2, &[2]), 0), int(0));
    }

    #[test]
    fn index_residue_cp1() {
        assert_eq!(index_residue(&ci(1, &[]), 2), int(1));
    }

    #[test]
    fn index_residue_v3_22() {
        assert_eq!(index_residue(&ci(3, &[2, 2]), 2), int(1));
    }

    #[test]
    fn three_routes_agree_on_small_family() {
        for n in 1..=4u32 {
            for degrees in [vec![], vec![2], vec![3], vec![2, 2], vec![2, 4]] {
                let v = ci(n, &degrees);
                for k in -6..=6i64 {
                    let a = index(&v, k);
                    assert_eq!(a, index_residue(&v, k), "{} k={}", v, k);
                    assert_eq!(a, index_lattice_sum(&v, k), "{} k={}", v, k);
                }
            }
        }
    }

    #[test]
    fn lattice_sum_cubic_surface() {
        assert_eq!(index_lattice_sum(&ci(2, &[3]), 1), int(1));
    }

    #[test]
    fn lattice_sum_reduces_to_cpn_for_r_zero() {
        let p = cpn_hilbert(3);
        for k in -5..=5 {
            assert_eq!(index_lattice_sum(&ci(3, &[]), k), p.eval_int(k));
        }
    }

    #[test]
    fn cpn_hilbert_small_cases() {
        // P_1 = k/2
        assert_eq!(cpn_hilbert(1).coeffs(), &[rat(0, 1), rat(1, 2)]);
        // P_2 = (k^2 - 1)/8
        assert_eq!(cpn_hilbert(2).coeffs(), &[rat(-1, 8), rat(0, 1), rat(1, 8)]);
        // P_3 = k(k^2 - 4)/48
        assert_eq!(
            cpn_hilbert(3).coeffs(),
            &[rat(0, 1), rat(-4, 48), rat(0, 1), rat(1, 48)]
        );
    }

    #[test]
    fn cpn_hilbert_parity_matches_dimension() {
        for n in 1..=8u32 {
            let p = cpn_hilbert(n);
            for (i, c) in p.coeffs().iter().enumerate() {
                if (i as u32) % 2 != n % 2 {
                    assert!(c.is_zero(), "n={} coefficient {} nonzero", n, i);
                }
            }
        }
    }

    #[test]
    fn hilbert_polynomial_matches_cpn() {
        for n in 1..=5 {
            assert_eq!(hilbert_polynomial(&ci(n, &[])), cpn_hilbert(n));
        }
    }

    #[test]
    fn hilbert_polynomial_quadric_surface() {
        // Q^2: k^2/4
        let p = hilbert_polynomial(&ci(2, &[2]));
        assert_eq!(p.coeffs(), &[rat(0, 1), rat(0, 1), rat(1, 4)]);
    }

    #[test]
    fn hilbert_polynomial_interpolates_every_twist() {
        // the polynomial reproduces the index at all twists, and its values
        // at valid-parity twists are integers
        for v in [ci(2, &[3]), ci(3, &[2, 2]), ci(4, &[2])] {
            let p = hilbert_polynomial(&v);
            for k in -8..=8 {
                assert_eq!(p.eval_int(k), index(&v, k), "{} k={}", v, k);
                if v.valid_parity(k) {
                    assert!(p.eval_int(k).is_integer(), "{} k={}", v, k);
                }
            }
        }
    }

    #[test]
    fn hilbert_polynomial_leading_coefficient() {
        let p = hilbert_polynomial(&ci(2, &[4]));
        assert_eq!(p.degree(), 2);
        assert_eq!(p.leading_coeff(), &rat(1, 2));
        let p = hilbert_polynomial(&ci(3, &[2, 3]));
        assert_eq!(p.degree(), 3);
        assert_eq!(p.leading_coeff(), &rat(6, 48));
    }

    #[test]
    fn parity_checks() {
        for n in 1..=5 {
            assert!(ci(n, &[]).valid_parity(n as i64 + 1));
        }
        assert!(ci(2, &[4]).valid_parity(0));
        assert!(!ci(2, &[3]).valid_parity(0));
        assert!(ci(2, &[3]).valid_parity(1));
        assert!(ci(2, &[3]).valid_parity(-3));
    }

    #[test]
    fn index_strict_rejects_bad_parity() {
        let err = index_strict(&ci(2, &[]), 2).unwrap_err();
        assert!(matches!(err, IndexError::ParityViolation { k: 2, .. }));
        assert_eq!(index_strict(&ci(2, &[]), 3).unwrap(), BigInt::from(1));
    }

    #[test]
    fn minimal_k0_examples() {
        assert_eq!(minimal_k0(&ci(2, &[3])).unwrap(), 1);
        assert_eq!(minimal_k0(&ci(3, &[2, 2])).unwrap(), 2);
        for n in 1..=6 {
            assert_eq!(minimal_k0(&ci(n, &[])).unwrap(), n as u64 + 1);
        }
        assert_eq!(minimal_k0(&ci(2, &[4])).unwrap(), 0);
    }

    #[test]
    fn hyperplane_sections() {
        assert_eq!(ci(3, &[2, 2]).hyperplane_section().unwrap(), ci(2, &[1, 2, 2]));
        assert_eq!(ci(4, &[]).hyperplane_section().unwrap(), ci(3, &[1]));
        assert_eq!(
            ci(1, &[3]).hyperplane_section(),
            Err(IndexError::DimensionTooSmall)
        );
    }

    #[test]
    fn recursion_identity_small_family() {
        for v in [ci(2, &[2]), ci(3, &[2, 2]), ci(4, &[3]), ci(2, &[])] {
            let w = v.hyperplane_section().unwrap();
            for k in -5..=5 {
                let lhs = index(&v, k) - index(&v, k - 2);
                assert_eq!(lhs, index(&w, k - 1), "{} k={}", v, k);
            }
        }
    }

    #[test]
    fn reflection_symmetry_small_family() {
        for v in [ci(1, &[]), ci(2, &[3]), ci(3, &[2, 2]), ci(4, &[2])] {
            let sign = if v.n() % 2 == 0 { 1 } else { -1 };
            for k in 0..=6 {
                assert_eq!(index(&v, -k), index(&v, k) * int(sign), "{} k={}", v, k);
            }
        }
    }

    #[test]
    fn anticanonical_twist_gives_todd_genus_one_on_fano_members() {
        // includes odd n, where the sign of the twist matters
        for v in [ci(1, &[]), ci(2, &[]), ci(3, &[]), ci(2, &[3]), ci(3, &[2, 2]), ci(4, &[2, 3])] {
            let k = v.ambient_dimension() as i64 + 1 - v.total_degree() as i64;
            assert!(k > 0, "{} is Fano", v);
            assert_eq!(index(&v, k), int(1), "{}", v);
        }
        // K3 regression: the same twist is 0 and the value is the Todd genus 2
        assert_eq!(index(&ci(2, &[4]), 0), int(2));
    }

    #[test]
    fn display_formats() {
        assert_eq!(ci(2, &[]).to_string(), "CP^2");
        assert_eq!(ci(3, &[2, 4]).to_string(), "V^3(2,4)");
        assert_eq!(cpn_hilbert(1).to_string(), "k/2");
        assert_eq!(cpn_hilbert(2).to_string(), "(k^2 - 1)/8");
        assert_eq!(cpn_hilbert(3).to_string(), "(k^3 - 4k)/48");
        assert_eq!(hilbert_polynomial(&ci(2, &[2])).to_string(), "k^2/4");
    }

    #[test]
    fn integer_zero_listing() {
        let p = cpn_hilbert(4);
        assert_eq!(p.integer_zeros_in(-8, 8), vec![-3, -1, 1, 3]);
    }
}
