//! Exact linear algebra over GF(2), `F[T]` and `F[U,V]`.

pub mod bits;
pub mod poly;
pub mod reduce;
pub mod snf;
pub mod sparse;

pub use bits::BitVec;
pub use poly::{PolyT, PolyUV};
pub use reduce::{
    essential_classes, homology_rank, homology_representatives, ColumnSpace, Essential,
};
pub use snf::{snf_fu, PolyMat, Snf};
pub use sparse::{affine_solve, AffineSolution, SparseMatGF2};
