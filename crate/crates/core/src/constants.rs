//! Named closed (and a few deliberately open) terms.
//!
//! | name    | definition                                                  |
//! |---------|-------------------------------------------------------------|
//! | `I`     | `bd a. car(a) @ cdr(a)`                                     |
//! | `T`     | `bd a. car(a) @ cdr^2(a)`                                   |
//! | `F`     | `bd a. car(cdr(a)) @ cdr^2(a)`                              |
//! | `omega` | `bd a. car(a) @ a`                                          |
//! | `Omega` | `bd g. omega @ (omega :: g)`                                |
//! | `u`     | `bd x. car(f) @ (bd b. car(x) @ car(x) :: b) :: cdr(x)` (free `f`) |
//! | `U`     | `bd g. u @ (u :: g)` (free `f`)                             |
//! | `Y`     | `bd f. U @ cdr(f)`                                          |
//! | `Tinf`  | `bd d. Y @ (T :: d)`                                        |
//! | `wrapU` | `bd g. car(a) @ a` (free `a`)                               |
//! | `P<q>`  | `bd e1. ... bd eq. bd d. car(d) @ e1 @ ... @ eq`            |

use std::collections::BTreeMap;

use crate::syntax::{Stack, Term, VarName};

fn v(name: &str) -> Stack {
    Stack::var(name)
}

pub fn identity() -> Term {
    Term::abs("a", Term::app(Term::car(v("a")), Stack::cdr(v("a"))))
}

pub fn true_term() -> Term {
    Term::abs("a", Term::app(Term::car(v("a")), Stack::cdr_n(v("a"), 2)))
}

pub fn false_term() -> Term {
    Term::abs("a", Term::app(Term::car_n(v("a"), 1), Stack::cdr_n(v("a"), 2)))
}

pub fn small_omega() -> Term {
    Term::abs("a", Term::app(Term::car(v("a")), v("a")))
}

pub fn big_omega() -> Term {
    Term::abs(
        "g",
        Term::app(small_omega(), Stack::push(small_omega(), v("g"))),
    )
}

pub fn hp_u() -> Term {
    let inner = Term::abs(
        "b",
        Term::app(Term::car(v("x")), Stack::push(Term::car(v("x")), v("b"))),
    );
    Term::abs(
        "x",
        Term::app(Term::car(v("f")), Stack::push(inner, Stack::cdr(v("x")))),
    )
}

pub fn hp_big_u() -> Term {
    Term::abs("g", Term::app(hp_u(), Stack::push(hp_u(), v("g"))))
}

pub fn hp_y() -> Term {
    Term::abs("f", Term::app(hp_big_u(), Stack::cdr(v("f"))))
}

pub fn t_infinity() -> Term {
    Term::abs("d", Term::app(hp_y(), Stack::push(true_term(), v("d"))))
}

pub fn wrap_u() -> Term {
    Term::abs("g", Term::app(Term::car(v("a")), v("a")))
}

/// `W[x] = bd a. car(a) @ (bd b. car(a) @ wrapU :: x :: a) :: wrapU :: a`.
///
/// Plugging is literal: the free `a` of `wrapU` is captured by the outer
/// binder.
pub fn wrapper(x: Term) -> Term {
    let inner = Term::abs(
        "b",
        Term::app(
            Term::car(v("a")),
            Stack::push(wrap_u(), Stack::push(x, v("a"))),
        ),
    );
    Term::abs(
        "a",
        Term::app(
            Term::car(v("a")),
            Stack::push(inner, Stack::push(wrap_u(), v("a"))),
        ),
    )
}

/// `bd e1 ... eq d. car(d) @ e1 @ ... @ eq`
pub fn permutator(q: usize) -> Term {
    let es: Vec<VarName> = (1..=q as u32).map(|i| VarName::new("e", i)).collect();
    let body = Term::apps(
        Term::car(v("d")),
        es.iter().map(|e| Stack::Var(e.clone())),
    );
    Term::abs_many(es.into_iter().chain([VarName::from("d")]), body)
}

/// Looks up a constant by its surface name (without the `#`).
pub fn lookup(name: &str) -> Option<Term> {
    Some(match name {
        "I" => identity(),
        "T" => true_term(),
        "F" => false_term(),
        "omega" => small_omega(),
        "Omega" => big_omega(),
        "u" => hp_u(),
        "U" => hp_big_u(),
        "Y" => hp_y(),
        "Tinf" => t_infinity(),
        "wrapU" => wrap_u(),
        _ => {
            let digits = name.strip_prefix('P')?;
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return None;
            }
            permutator(digits.parse().ok()?)
        }
    })
}

/// The fixed constant table (permutators excluded).
pub fn constants() -> BTreeMap<&'static str, Term> {
    [
        "I", "T", "F", "omega", "Omega", "u", "U", "Y", "Tinf", "wrapU",
    ]
    .into_iter()
    .map(|n| (n, lookup(n).expect("known constant")))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;

    #[test]
    fn table_matches_surface_definitions() {
        let expect = [
            ("I", "bd a. car(a) @ cdr(a)"),
            ("T", "bd a. car(a) @ cdr(cdr(a))"),
            ("F", "bd a. car(cdr(a)) @ cdr^2(a)"),
            ("omega", "bd a. car(a) @ a"),
            ("Omega", "bd g. (bd a. car(a) @ a) @ (bd a. car(a) @ a) :: g"),
            ("Y", "bd f. #U @ cdr(f)"),
            ("Tinf", "bd d. #Y @ #T :: d"),
            ("wrapU", "bd g. car(a) @ a"),
        ];
        let table = constants();
        for (name, text) in expect {
            assert!(table[name].alpha_eq(&parse_term(text).unwrap()), "{name}");
        }
    }

    #[test]
    fn open_constants_keep_their_free_variables() {
        assert_eq!(wrap_u().free_vars().len(), 1);
        assert!(hp_u().free_vars().contains(&VarName::from("f")));
        assert!(t_infinity().free_vars().is_empty());
        assert!(wrapper(true_term()).free_vars().is_empty());
    }

    #[test]
    fn permutators() {
        assert_eq!(permutator(0), parse_term("bd d. car(d)").unwrap());
        assert!(permutator(2).alpha_eq(&parse_term("bd e1. bd e2. bd d. car(d) @ e1 @ e2").unwrap()));
        assert_eq!(lookup("P2"), Some(permutator(2)));
        assert_eq!(lookup("P"), None);
    }
}
