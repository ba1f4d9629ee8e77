pub mod arith;
pub mod cli;
pub mod fields;
pub mod ideal;
pub mod oracle;
pub mod verify;
