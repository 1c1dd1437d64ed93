//! Integer matrix algebra: determinants, Smith normal form with transforms,
//! and the solution set of `W * theta = 0` over `Q/Z`.

mod intmat;
mod snf;
mod torsion;

pub use intmat::IntMat;
pub use snf::{smith_normal_form, SnfResult};
pub use torsion::{torsion_solutions, RotationVector};
