//! Second-type covering-based rough sets and their matroids.
//!
//! Everything works over a finite [`Universe`] of at most a few dozen labeled
//! elements, with subsets stored as bit masks. The crate provides
//!
//! - the approximations `SL`/`SH` and the element structures `Md`, `N`, `I`
//!   ([`approx`]),
//! - covering reduction ([`reduct`]),
//! - closure systems, the induced closure of a covering, and the CL1–CL4
//!   matroid closure axioms ([`closure`], [`matroid`]),
//! - exhaustive and randomized sweeps that check the characterization
//!   theorems of these operators on every covering of a small universe
//!   ([`verify`]).
//!
//! ```
//! use rough_matroid::{make_covering, matroid_from_closure, induced_closure, upper_approx, Universe};
//!
//! let u = Universe::new(["a", "b", "c"])?;
//! let c = make_covering(&u, &[vec!["a", "b"], vec!["a", "c"]])?;
//! let b = u.subset(["b"])?;
//! assert_eq!(u.format(upper_approx(&c, b)?), "{a,b}");
//!
//! let e2 = make_covering(&u, &[vec!["a", "b"], vec!["c"]])?;
//! let m = matroid_from_closure(&induced_closure(&e2))?;
//! assert_eq!(m.rank(u.full()), 2);
//! # Ok::<(), rough_matroid::Error>(())
//! ```

pub mod approx;
pub mod cli;
pub mod closure;
pub mod covering;
pub mod error;
pub mod io;
pub mod matroid;
pub mod reduct;
pub mod universe;
pub mod verify;

pub use approx::{
    indiscernible_family, indiscernible_neighborhood, is_unary, lower_approx, minimal_description,
    neighborhood, neighborhood_family, property_report, upper_approx, ApproxProperty,
    ApproxPropertyReport,
};
pub use closure::{
    check_closure_axioms, closure_from_system, fixed_point_family, induced_closure,
    is_closure_system, sh_as_closure_table, AxiomReport, AxiomWitness, ClosureAxiom, ClosureTable,
};
pub use covering::{
    enumerate_coverings, is_partition, make_covering, random_covering, Covering, SetFamily,
};
pub use error::{Error, Result};
pub use matroid::{
    check_matroid_axioms, matroid_closure, matroid_from_closure, matroid_rank, Matroid,
};
pub use reduct::{compute_reduct, is_reducible, reduct_is_partition};
pub use universe::{enumerate_subsets, Subset, Universe};
