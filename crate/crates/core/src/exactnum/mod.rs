//! Exact scalars: rationals, cyclotomic fields, and integer matrices.

mod cyclotomic;
mod intmatrix;
mod poly;

pub use cyclotomic::{cyclotomic_poly, totient, CycloField, Cyclotomic, Rational};
pub use intmatrix::{kernel_mod, smith_normal_form, IntMatrix, KernelMod, SmithForm};
pub use poly::IntPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("cyclotomic orders differ: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid cyclotomic order {0}")]
    InvalidOrder(u32),
    #[error("Q(ζ_{order}) elements need {expected} coefficients, got {got}")]
    CoefficientLength { order: u32, expected: usize, got: usize },
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("shape mismatch: {left:?} times {right:?}")]
    Shape { left: (usize, usize), right: (usize, usize) },
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
}

/// Field operation selector for [`cyclo_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyclo_arith(a: &Cyclotomic, b: &Cyclotomic, op: ArithOp) -> Result<Cyclotomic, NumError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}
