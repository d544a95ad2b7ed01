//! Exact character and Grothendieck-group computations for reductive groups
//! in positive characteristic, centred on the Steinberg block.
//!
//! Everything is integer arithmetic. A [`Context`] fixes a root system, its
//! enumerated Weyl group and the character lattice (simply connected or
//! adjoint); characters ([`Character`]) and classes in the Weyl-module basis
//! ([`KElement`]) are plain values manipulated through it.
//!
//! ```
//! use modrep_core::{Context, KElement, LatticeMode, Series, Weight};
//!
//! let ctx = Context::new(Series::A, 1, LatticeMode::SimplyConnected).unwrap();
//! let forward = ctx.steinberg_forward(&KElement::delta(Weight::from([1])), 3, 1).unwrap();
//! assert_eq!(forward, KElement::delta(Weight::from([5])));
//! ```

pub mod characters;
mod context;
pub mod error;
pub mod grothendieck;
pub mod linkage;
pub mod par;
pub mod root_data;
pub mod simple_a1;
mod terms;
mod weight;
pub mod weyl_group;

pub use characters::{frobenius_twist, Character};
pub use context::Context;
pub use error::{Error, Result};
pub use grothendieck::KElement;
pub use linkage::{AlcovePosition, AlcoveStatus};
pub use par::Exec;
pub use root_data::{Coroot, LatticeMode, RootSystem, RootSystemId, Series};
pub use simple_a1::{DigitDecomposition, SimpleDecomposition};
pub use terms::Terms;
pub use weight::Weight;
pub use weyl_group::{WeylElement, WeylGroup};
