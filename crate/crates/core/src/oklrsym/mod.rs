//! Symbolic (orientifold) KLR algebras acting on their polynomial
//! representation: relation checks, grading audit, PBW independence,
//! symmetry maps and a faithfulness probe.

pub mod audits;
pub mod normal;
pub mod params;
pub mod poly;
pub mod relations;
pub mod rep;

use thiserror::Error;

pub(crate) use crate::report::ReportBuilder;
pub use crate::report::{all_pass, ReportEntry, Status};
pub use audits::{regular_module_check, tau_w_dependence, verify_grading, verify_pbw_independence, GradingAudit};
pub use normal::{faithfulness_proxy, NormalElt};
pub use params::{ParamMatrices, Perfection, Vertex, VertexWeight};
pub use poly::MultiPoly;
pub use relations::{verify_relations, verify_symmetry_maps, Relation, SymmetryMap, Term};
pub use rep::{Comp, Gen, Mode, PolyVec, Rep};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OklrError {
    #[error("generator {0} out of range")]
    IndexOutOfRange(String),
    #[error("tau_0 does not exist in plain KLR mode")]
    NoTau0,
    #[error("weight {0} is not self-dual with even multiplicity at fixed vertices")]
    NotSelfDual(String),
    #[error("framing must vanish on theta-fixed vertices")]
    FramingOnFixedVertex,
    #[error("these parameters have no polynomial representation")]
    NoPolynomialRep,
    #[error("{0}")]
    Unsupported(String),
    #[error("cannot parse {input:?} at position {pos}: {msg}")]
    Parse { input: String, pos: usize, msg: String },
}
