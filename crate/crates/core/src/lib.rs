pub mod arrangements;
pub mod exact;
pub mod families;
pub mod lattice;
pub mod poly;
