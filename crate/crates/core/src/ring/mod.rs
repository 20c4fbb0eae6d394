//! Exact arithmetic in the dyadic fractions, cyclotomic integers and the
//! rings `R_n = Z[1/2, zeta_n]`.

pub mod cyclo;
pub mod degree;
pub mod dyadic;
pub mod lde;
pub mod quad;
pub mod residue;
pub mod units;

pub use cyclo::{Cyclo, CycloElem};
pub use degree::{Degree, Family};
pub use dyadic::Dyadic;
pub use lde::{lde, LdeBase};
pub use quad::RealQuad;
pub use residue::{norm_residue, norm_residue_class, residue, Modulus, NormResidueClass, QuadResidue};
pub use units::{are_associates, unit_norm1_exponent};
