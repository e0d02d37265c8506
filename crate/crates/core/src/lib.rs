//! Index of symmetry of Kähler generalized flag manifolds, computed exactly
//! from root data.
//!
//! A flag manifold `G/H` of a compact simple group is given by a painted
//! Dynkin diagram. From it this crate computes
//!
//! * the roots `R_h`, `R_m`, the canonical ordering `R_m+` and the isotropy
//!   T-modules ([`flag`]);
//! * the symmetry roots, index and coindex of symmetry, the subalgebra
//!   `h' = h + p` and the leaf of symmetry as a Hermitian symmetric pair
//!   ([`symmetry`]);
//! * an independent check of the transvection condition from the
//!   Levi-Civita formula with Chevalley structure constants ([`oracle`],
//!   [`chevalley`]);
//! * exhaustive sweeps and the theorem audit ([`survey`]).
//!
//! ```
//! use symindex_core::{analyze, PaintedDiagram};
//!
//! let pd: PaintedDiagram = "A3:{2,3}".parse().unwrap();
//! let report = analyze(pd).unwrap();
//! assert_eq!((report.index, report.coindex), (4, 6));
//! assert_eq!(report.leaf.name, "CP^2");
//! ```

pub mod chevalley;
pub mod diagram;
pub mod error;
pub mod exceptions;
pub mod flag;
pub mod hermitian;
pub mod oracle;
pub mod rootsys;
pub mod subsystem;
pub mod survey;
pub mod symmetry;

/// Exact rational scalar used throughout.
pub type Rational = num_rational::Rational64;

pub use chevalley::{build_constants, ChevalleyTable};
pub use diagram::{dynkin_diagram, extended_diagram, Diagram, NodeLabel};
pub use error::{Error, Result};
pub use exceptions::{dim_g, onishchik_exception, ExceptionTag};
pub use flag::{make_flag, FlagData, KahlerParam, PaintedDiagram};
pub use hermitian::HermitianFamily;
pub use rootsys::{build_root_system, CartanType, Family, Root, RootSystem};
pub use survey::{enumerate, verify_theorem, EntryRecord, EnumerateOptions, EnumerationReport};
pub use symmetry::{analyze, LeafDescriptor, SymmetryReport};
