pub mod bits;
pub mod code;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod golden;
pub mod morphism;
pub mod reduction;
pub mod ring;
pub mod topology;
pub mod trunks;
