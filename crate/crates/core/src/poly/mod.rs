//! Exact polynomial arithmetic: dense univariate, sparse bivariate,
//! noncommutative, and truncated series.

mod bipoly;
mod gamma_basis;
mod int_poly;
mod ncpoly;
mod series;
mod shape;

pub use bipoly::{one_plus_tq, BiPolyDisplay, BiPolyTQ};
pub use gamma_basis::{gamma_expand, GammaVector};
pub use int_poly::{binomial, q_factorial, q_pochhammer, IntPoly, PolyDisplay};
pub use ncpoly::{NCPoly, NCPolyDisplay, Word};
pub use series::{RatPoly, TruncSeries};
pub use shape::{is_log_concave, is_palindromic, is_unimodal, shape_predicates, HalfInt, Shape};
