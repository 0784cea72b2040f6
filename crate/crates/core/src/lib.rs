//! Certificate-producing bi-clique finders for interval graphs, cographs and
//! chordal graphs given by subtree representations, together with extremal
//! generators and exhaustive oracles.
//!
//! Every finder returns a [`BicliqueCertificate`]: two disjoint id sets plus
//! the claimed cross relation, checkable with [`verify_certificate`].

pub mod ceh;
pub mod certificate;
pub mod cograph;
pub mod error;
pub mod extremal;
pub mod family;
pub mod graph;
pub mod io;
pub mod normalize;
pub mod oracle;
pub mod random;
pub mod rational;
pub mod seh;
pub mod trace;
pub mod tree;

pub use certificate::{verify_certificate, BicliqueCertificate, Failure, Instance, Kind, VerificationReport};
pub use error::{Error, Result};
pub use family::{Id, IntervalFamily, IntervalMember, Part, Partition, SubtreeFamily, SubtreeMember};
pub use graph::{Graph, LabeledGraph};
pub use rational::Rational;
pub use tree::{Subtree, Tree};
