//! Exact computations with locally matrix algebras: Steinitz numbers,
//! Clifford and generalized Clifford algebras over cyclotomic fields, and
//! chain models of countable-dimensional locally matrix algebras.

pub mod clifford;
pub mod exactnum;
pub mod genclifford;
pub mod json;
pub mod linalg;
pub mod locmat;
pub mod profile;
pub mod report;
pub mod steinitz;
pub mod structure;
