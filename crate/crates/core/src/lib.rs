//! Exact Alexander polynomials of positive braid closures, arborescent
//! positive Hopf plumbings and satellites, together with a certificate
//! system for links built by positive Hopf plumbing.

pub mod alexander;
pub mod braid;
pub mod cli;
pub mod error;
pub mod laurent;
pub mod membership;
pub mod satellite;
pub mod surfaces;
pub mod tree;

pub use alexander::{braid_poly, burau_poly, from_seifert, skein_oracle, tree_poly, SkeinOracle};
pub use braid::PositiveBraidWord;
pub use error::{Error, Result};
pub use laurent::{AlexSummary, ConwayParity, HalfLaurent};
pub use membership::{
    certify_braid, certify_sum, certify_tree, condition_star, ito_summand_check, verify,
    PCertificate, VerificationReport,
};
pub use satellite::{cable_pattern, krishna_check, obstruction, satellite_poly, SatellitePattern};
pub use surfaces::{
    betti_data, bricks, seifert_from_braid, seifert_from_tree, Brick, SeifertMatrix,
};
pub use tree::PlaneTree;
