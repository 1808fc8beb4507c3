pub mod abelianize;
pub mod cli;
pub mod consistency;
pub mod cover;
pub mod linalg;
pub mod perm;
pub mod presentations;
pub mod report;
pub mod sphere;
pub mod words;
