//! Stack calculus toolkit: syntax, reduction, head strategies, Böhm-tree
//! navigation and separation.

pub mod bohm;
pub mod check;
pub mod constants;
pub mod context;
pub mod parse;
pub mod reduce;
pub mod separator;
pub mod strategy;
pub mod syntax;

pub use parse::{parse_expr, parse_stack, parse_term, SyntaxError};
pub use reduce::{ReductOutcome, Rule, RuleSet, Tri};
pub use syntax::{alpha_eq, alpha_key, canonical_form, Dialect, Expr, FreshSession, Stack, Term, VarName};
