//! Standard Young tableaux under the weak order.
//!
//! RSK, Knuth and dual Knuth moves, jeu de taquin, the weak order on
//! `SYT_n` built by projecting the right weak order of `S_n` through Knuth
//! classes, the shuffle product of plactic classes, and exhaustive
//! verification sweeps over all of these.

pub mod error;
pub mod hopf;
pub mod knuthclass;
pub mod permutation;
pub mod report;
pub mod tableau;
pub mod verify;
pub mod weakorder;

pub use error::{Error, Result};
pub use hopf::{interval_product, plactic_product, PlacticSum};
pub use knuthclass::{knuth_class, KnuthClass};
pub use permutation::{shuffle, DescentSet, InversionSet, Permutation};
pub use report::{VerificationReport, Witness};
pub use tableau::{dominance_leq, rsk, Cell, Shape, SkewTableau, SlideDirection, Tableau};
pub use verify::{CoverScope, Family, Mode};
pub use weakorder::{build_poset, is_isomorphic, Interval, TableauPoset};
