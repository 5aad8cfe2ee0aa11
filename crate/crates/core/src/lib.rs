//! Exact computer algebra for the quantum torus `LM = t^2 ML` and the
//! figure-eight knot: Laurent polynomials and rational functions over the
//! rationals, Groebner bases with conversion matrices, colored Jones
//! brackets, and the pipeline that builds and checks a symmetric
//! inhomogeneous recurrence.

pub mod bracket;
pub mod constants;
pub mod error;
pub mod expr;
pub mod gcd;
pub mod grammar;
pub mod groebner;
pub mod jones;
pub mod laurent;
pub mod linsolve;
pub mod pipeline;
pub mod ratfun;
pub mod torus;
pub mod unilaurent;

pub use bracket::{check_annihilation, AnnihilationReport, FitConfig, RelationTable};
pub use constants::PaperConstants;
pub use error::{Error, Result};
pub use expr::{parse_expr, parse_laurent};
pub use groebner::{
    buchberger_extended, dio_solve_pair, ideal_membership, DioSolution, ExtendedBasis, MonomialOrder, OrderKind,
};
pub use jones::{colored_jones_fig8, habiro_bracket, jones_fig8, DiscreteFunction, Summand};
pub use laurent::{Mono, MultiLaurent, Var};
pub use pipeline::{derive, verify_conditions, PipelineOptions, PipelineState, Provenance};
pub use ratfun::RationalFunction;
pub use torus::{Operator, RationalOperator, TorusElement};
pub use unilaurent::LaurentT;
