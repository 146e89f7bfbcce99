//! Exact algebra for deformed contact homology: Conley–Zehnder indices,
//! decorated forests and twisting maps, cobordism energy gates, dg-algebras
//! over Q[U], reduced cyclic homology and the open-book model tables.

pub mod ring;
pub mod czindex;
pub mod energy;
pub mod trees;
pub mod dga;
pub mod cyclic;
pub mod models;
pub mod machine;
pub mod cli;
