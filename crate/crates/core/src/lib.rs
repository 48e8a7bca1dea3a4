//! Exact combinatorics of minuscule Schubert varieties and their
//! Bott-Samelson resolutions.
//!
//! The crate goes from a root system to the irreducible components of the
//! spaces of rational curves on a minuscule Schubert variety:
//!
//! * [`root_system`]: Cartan matrices, roots, coroot pairings, minuscule
//!   weights;
//! * [`weyl`]: words in the Weyl group, reduced words, minimal coset
//!   representatives;
//! * [`bott_samelson`]: root sequences of a word and intersection numbers of
//!   curves and divisors on the resolution;
//! * [`components`]: effective classes of each degree and the Young diagram
//!   front end for Grassmannians;
//! * [`audit`]: exhaustive sweeps checking every identity over a scope.
//!
//! Simple indices follow Bourbaki numbering and are 1-based in every public
//! signature, as are positions in a word. Coefficient vectors are ordinary
//! 0-based arrays.
//!
//! ```
//! use minuscule_core::{components, BottSamelsonData, Family, RootSystem, Word};
//!
//! let a3 = RootSystem::build(Family::A, 3)?;
//! let bs = BottSamelsonData::build(&a3, 2, &Word::new(vec![1, 3, 2]))?;
//! assert_eq!(bs.contracted_divisors(), &[3]);
//! assert_eq!(components::component_count(&bs, 2)?, 3);
//! # Ok::<(), minuscule_core::Error>(())
//! ```

pub mod audit;
pub mod bott_samelson;
pub mod components;
pub mod error;
pub mod root_system;
pub mod weyl;

pub use bott_samelson::{BottSamelsonData, BottSamelsonReport, CurveClass, DivisorVector};
pub use components::{ComponentSet, EffectiveClass, Partition};
pub use error::{Error, Result};
pub use root_system::{Family, Root, RootSystem, Weight, WeightClass};
pub use weyl::{ParabolicSpec, WeylElement, Word};
