//! Exact Hochschild cohomology of `Λ_q = k⟨x,y⟩/(x², xy + q·yx, y²)`.

pub mod field;
pub mod lambda;
pub mod matrix;
pub mod resolution;
pub mod cup;
pub mod barcomplex;
pub mod koszul;
pub mod hilbert;
pub mod cli;
