//! Exact index-theoretic invariants of complete intersections in complex
//! projective space, the scalar-curvature upper bounds they imply, and
//! numerical verification of the 2-form norm and Fubini-Study curvature
//! identities those bounds rest on.
//!
//! The crate is organized around five modules:
//!
//! * [`series`]: truncated power/Laurent series over exact rationals, the
//!   substrate for every characteristic-class computation;
//! * [`indextheory`]: complete-intersection descriptors, the A-hat class,
//!   three independent routes to the twisted Dirac index, Hilbert
//!   polynomials, and the minimal nonvanishing twist;
//! * [`bounds`]: the four-case scalar-curvature bound table and its
//!   cross-validation against the computed minimal twist;
//! * [`comass`]: the rotation-number norm on 2-forms, a frame-maximization
//!   oracle, pullbacks, and area-dilation tests;
//! * [`fsgeometry`]: a finite-difference curvature oracle for the
//!   Fubini-Study metric normalized to holomorphic sectional curvature 4.
//!
//! ```
//! use spinc_bounds::bounds::bound_from_k0;
//! use spinc_bounds::indextheory::{index_strict, CompleteIntersection};
//!
//! // the quartic K3 surface V^2(4)
//! let k3 = CompleteIntersection::new(2, vec![4]).unwrap();
//! assert_eq!(index_strict(&k3, 0).unwrap(), 2.into());
//! assert_eq!(bound_from_k0(&k3).unwrap().value, 0);
//!
//! // the intersection of two quadrics in CP^5
//! let v = CompleteIntersection::new(3, vec![2, 2]).unwrap();
//! let bound = bound_from_k0(&v).unwrap();
//! assert_eq!((bound.value, bound.k0), (24, 2));
//! ```

pub mod bounds;
pub mod comass;
pub mod fsgeometry;
pub mod indextheory;
pub mod series;

pub use bounds::{BoundCase, CurvatureBound};
pub use comass::{ComassError, LinearMap, TwoForm};
pub use fsgeometry::{ChartPoint, FsError, KahlerData};
pub use indextheory::{CompleteIntersection, HilbertPolynomial, IndexError};
pub use series::{LaurentSeries, RationalSeries, SeriesError};
