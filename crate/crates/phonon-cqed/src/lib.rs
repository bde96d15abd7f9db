pub mod jc;
pub mod real;
