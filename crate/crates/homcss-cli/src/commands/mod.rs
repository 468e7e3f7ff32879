pub mod arith;
pub mod bounds;
pub mod code;
pub mod complex;
