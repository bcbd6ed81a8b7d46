//! Construction and analysis of quantum CSS codes built from product
//! operations over abelian group algebras: hypergraph products, generalized
//! bicycle codes, and lifted products, together with the supporting
//! machinery (exact F2/F_{2^r} linear algebra, chain complexes, expander
//! graphs and Tanner codes, distance search, and permanent-based distance
//! bounds).

pub mod alist;
pub mod bounds;
pub mod chain;
pub mod classify;
pub mod css;
pub mod distance;
pub mod error;
pub mod expand;
pub mod f2;
pub mod factor;
pub mod gf;
pub mod graph;
pub mod group;
pub mod poly;
pub mod products;
pub mod report;
pub mod rng;
pub mod tanner;

pub use error::{Error, Result};
pub use f2::{BinMatrix, BinVec};
pub use group::{AlgElem, AlgMatrix, GroupSpec, WeightMatrix};
pub use poly::F2Poly;
