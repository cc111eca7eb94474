//! q-deformed rational numbers `[r/s]_q`, computed exactly by several
//! independent routes and checked against weighted perfect matchings of
//! snake graphs and Kasteleyn determinants.
//!
//! ```
//! use qsnake::{q_rational, laurent::lp};
//!
//! let x = q_rational(5, 2).unwrap();
//! assert_eq!(x.num(), &lp("1 + 2q + q^2 + q^3"));
//! assert_eq!(x.den(), &lp("1 + q"));
//! ```

pub mod cli;
pub mod error;
pub mod kasteleyn;
pub mod laurent;
pub mod matching;
pub mod qrational;
pub mod render;
pub mod snake;
pub mod verify;

pub use error::{CfError, Error, LaurentError, Result, SnakeError};
pub use kasteleyn::{det_exact, kasteleyn_matrix, verify_kasteleyn, KasteleynMatrix};
pub use laurent::{LaurentFraction, LaurentPoly};
pub use matching::{enumerate_matchings, matching_stat, matching_stat_dp, Matching};
pub use qrational::{q_rational, ContinuedFraction, QRational};
pub use snake::{snake_graph, SnakeGraph};
