//! Exact and Monte Carlo analysis of strongly edge-reinforced random walks.
//!
//! The crate centers on walks whose reinforcement weight `w` satisfies
//! `sum_k 1/w(k) < inf`, the regime in which a single attracting edge
//! eventually monopolizes the walk. It provides:
//!
//! * [`weights`] — the catalog of reinforcement weight functions with
//!   certified tail-sum enclosures and assumption checks;
//! * [`graph`] — finite undirected multigraphs and the canonical builders
//!   (parallel pair, three-vertex path, stars, trees, cycles, ...);
//! * [`series`] — certified evaluation of the infinite products `W_k(l)`
//!   and their stride-2 variants, convolution sums `S_n(k)`, comparison
//!   constants, and tail-envelope rates;
//! * [`exact2`] — the streaming O(K^2) dynamic program for the two-edge
//!   laws: distributions of the least-edge count `Z_k`, its limit
//!   `Z_inf`, and the attraction time `T`;
//! * [`sim`] — seeded Monte Carlo for the discrete walk on arbitrary
//!   finite graphs, the exponential time-line construction on stars, and
//!   the restriction coupling;
//! * [`stats`] — survival curves under censoring, tail-exponent fits,
//!   geometric-dominance fits, and the density cross-check;
//! * [`verify`] — mechanical verification suites for the two-edge sandwich
//!   bounds, tail asymptotics, the golden-ratio moment threshold, finite
//!   graph bounds, the star coupling, and range dominance.

pub mod error;
pub mod exact2;
pub mod graph;
pub mod series;
pub mod sim;
pub mod stats;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use weights::WeightFunction;
