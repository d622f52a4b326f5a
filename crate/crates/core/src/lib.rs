//! Character degree graphs of finite groups.
//!
//! Builds `Δ(G)` from a character degree multiset, decides three conditions
//! on `Δ(G)` and its complement that coincide for every finite group, and
//! produces certificates for each verdict. A graph on which the conditions
//! disagree cannot be the character graph of any finite group.
//!
//! * [`arith`]: factorization and prime-power recognition.
//! * [`degrees`]: `PSL2`/`PGL2`/`SL2` degree generators, products, corpus I/O.
//! * [`graph`]: `Δ`, complements, components, bipartiteness, blocks.
//! * [`domination`]: exact (odd) dominating sets.
//! * [`theorem`]: conditions (a)/(b)/(c), reports and `PSL2` cycle witnesses.
//! * [`oracle`]: brute-force references for self-checking.
//! * [`cli`]: the `chargraph` command.

pub mod arith;
pub mod cli;
pub mod degrees;
pub mod domination;
pub mod graph;
pub mod oracle;
pub mod theorem;

pub use degrees::{DegreeMultiset, Family};
pub use graph::{build_character_graph, PrimeGraph, VertexSet};
pub use theorem::{check_equivalence, TheoremReport};
