//! Exact computation in Leavitt path algebras of finite graphs: normal forms,
//! generator-defined endomorphisms and the modules `S^f_c`, their twists, and
//! Chen modules of rational infinite paths.

pub mod graph;
pub mod lpa;
pub mod morphisms;
pub mod oracle;
pub mod repmod;
pub mod scalars;
pub mod text;

pub use graph::{EdgeId, Graph, GraphError, Path, RationalInfinitePath, VertexId};
pub use lpa::{Element, LeavittAlgebra, LpaError, Monomial, SpecialEdges};
pub use morphisms::{AlgMatrix, GenMap, MorphismError};
pub use repmod::{ChenElement, ChenModule, RepError, SfcElement, SfcSpec, SfcTwist};
pub use scalars::{Field, IrrPoly, Poly, Residue, Scalar, ScalarError};
pub use text::{parse_element, parse_generated, TextError};
