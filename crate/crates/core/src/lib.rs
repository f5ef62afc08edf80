//! Regular maps from group presentations: construction, invariants, quotients
//! and a computational check of the density classification.

pub mod analysis;
pub mod census;
pub mod fermat;
pub mod fpgroup;
pub mod mapcore;
pub mod quotient;
pub mod verifier;
