//! Head reduction (extended calculus) and outer reduction (original
//! calculus), with views on their normal forms.

use crate::syntax::{Dialect, Stack, Tail, Term, VarName};

/// The head `car(cdr^n(β))` or `car(cdr^n(nil))` of a normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Head {
    Proper(VarName, usize),
    Nil(usize),
}

impl Head {
    /// Reads a canonical stack `cdr^n(β)` / `cdr^n(nil)` under a `car`.
    pub fn from_car_arg(s: &Stack) -> Option<Head> {
        let mut n = 0;
        let mut cur = s;
        loop {
            match cur {
                Stack::Cdr(inner) => {
                    n += 1;
                    cur = inner;
                }
                Stack::Var(v) => return Some(Head::Proper(v.clone(), n)),
                Stack::Nil => return Some(Head::Nil(n)),
                Stack::Push(..) => return None,
            }
        }
    }

    pub fn to_term(&self) -> Term {
        match self {
            Head::Proper(v, n) => Term::car_n(Stack::Var(v.clone()), *n),
            Head::Nil(n) => Term::car_n(Stack::Nil, *n),
        }
    }

    pub fn is_proper(&self) -> bool {
        matches!(self, Head::Proper(..))
    }

    pub fn index(&self) -> usize {
        match self {
            Head::Proper(_, n) | Head::Nil(n) => *n,
        }
    }

    pub fn var(&self) -> Option<&VarName> {
        match self {
            Head::Proper(v, _) => Some(v),
            Head::Nil(_) => None,
        }
    }
}

/// `bd α1 ... αk. H @ π1 @ ... @ πm`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfView {
    pub binders: Vec<VarName>,
    pub head: Head,
    pub args: Vec<Stack>,
}

impl HnfView {
    pub fn recompose(&self) -> Term {
        Term::abs_many(
            self.binders.iter().cloned(),
            Term::apps(self.head.to_term(), self.args.iter().cloned()),
        )
    }

    pub fn is_proper(&self) -> bool {
        self.head.is_proper()
    }

    pub fn breadth(&self) -> usize {
        if self.is_proper() {
            self.args.len()
        } else {
            0
        }
    }

    pub fn weight(&self) -> usize {
        if self.is_proper() {
            self.head.index()
        } else {
            0
        }
    }
}

/// `bd α. H @ N1 :: ... :: Nj :: cdr^k(τ)`; a bare head has neither binder
/// nor stack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnfView {
    pub binder: Option<VarName>,
    pub head: Head,
    pub arg_terms: Vec<Term>,
    pub tail: Option<(Tail, usize)>,
}

impl OnfView {
    pub fn recompose(&self) -> Term {
        let head = self.head.to_term();
        let body = match &self.tail {
            Some((tail, k)) => Term::app(
                head,
                Stack::push_all(
                    self.arg_terms.iter().cloned(),
                    Stack::cdr_n(tail.to_stack(), *k),
                ),
            ),
            None => head,
        };
        match &self.binder {
            Some(b) => Term::abs(b.clone(), body),
            None => body,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.head.is_proper()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyResult<V> {
    Found(V),
    Improper(V),
    Diverged(usize),
}

impl<V> StrategyResult<V> {
    pub fn view(&self) -> Option<&V> {
        match self {
            StrategyResult::Found(v) | StrategyResult::Improper(v) => Some(v),
            StrategyResult::Diverged(_) => None,
        }
    }

    pub fn is_proper(&self) -> bool {
        matches!(self, StrategyResult::Found(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrategyError {
    #[error("term is not in the original dialect")]
    InvalidDialect,
}

fn peel_binders(t: &Term) -> (Vec<VarName>, &Term) {
    let mut binders = Vec::new();
    let mut cur = t;
    while let Term::Abs(b, body) = cur {
        binders.push(b.clone());
        cur = body;
    }
    (binders, cur)
}

/// Splits `f @ π1 @ ... @ πm` into `f` and the stacks.
pub(crate) fn peel_args(t: &Term) -> (&Term, Vec<Stack>) {
    let mut args = Vec::new();
    let mut cur = t;
    while let Term::App(f, s) = cur {
        args.push((**s).clone());
        cur = f;
    }
    args.reverse();
    (cur, args)
}

fn hnf_of_canonical(c: &Term) -> Option<HnfView> {
    let (binders, body) = peel_binders(c);
    let (f, args) = peel_args(body);
    let Term::Car(s) = f else { return None };
    Some(HnfView {
        binders,
        head: Head::from_car_arg(s)?,
        args,
    })
}

pub fn decompose_hnf(m: &Term) -> Option<HnfView> {
    hnf_of_canonical(&m.canonical())
}

fn head_step_canonical(c: &Term) -> Option<Term> {
    let (binders, body) = peel_binders(c);
    let (f, mut args) = peel_args(body);
    let Term::Abs(beta, inner) = f else { return None };
    if args.is_empty() {
        return None;
    }
    let first = args.remove(0);
    let reduct = Term::apps(inner.subst(&first, beta), args);
    Some(Term::abs_many(binders, reduct).canonical())
}

/// Contracts the head redex of the canonical form of `m`.
pub fn head_step(m: &Term) -> Option<Term> {
    head_step_canonical(&m.canonical())
}

/// Iterates [`head_step`]; also returns the number of steps taken.
pub fn head_normalize_counted(m: &Term, fuel: usize) -> (StrategyResult<HnfView>, usize) {
    let mut cur = m.canonical();
    let mut steps = 0;
    loop {
        if let Some(v) = hnf_of_canonical(&cur) {
            let r = if v.is_proper() {
                StrategyResult::Found(v)
            } else {
                StrategyResult::Improper(v)
            };
            return (r, steps);
        }
        if steps == fuel {
            return (StrategyResult::Diverged(fuel), steps);
        }
        match head_step_canonical(&cur) {
            Some(next) => cur = next,
            // Unreachable for well-formed terms: no hnf shape and no redex.
            None => return (StrategyResult::Diverged(steps), steps),
        }
        steps += 1;
    }
}

pub fn head_normalize(m: &Term, fuel: usize) -> StrategyResult<HnfView> {
    head_normalize_counted(m, fuel).0
}

fn check_original(m: &Term) -> Result<(), StrategyError> {
    if Dialect::Original.accepts_term(m) {
        Ok(())
    } else {
        Err(StrategyError::InvalidDialect)
    }
}

fn outer_step_canonical(c: &Term) -> Option<Term> {
    let Term::Abs(alpha, body) = c else { return None };
    let Term::App(f, pi) = &**body else { return None };
    let Term::Abs(beta, p) = &**f else { return None };
    Some(Term::abs(alpha.clone(), p.subst(pi, beta)).canonical())
}

/// Contracts the outermost redex `bd α. (bd β. P) @ π` of the canonical form.
pub fn outer_step(m: &Term) -> Result<Option<Term>, StrategyError> {
    check_original(m)?;
    Ok(outer_step_canonical(&m.canonical()))
}

fn onf_of_canonical(c: &Term) -> Option<OnfView> {
    match c {
        Term::Car(s) => Some(OnfView {
            binder: None,
            head: Head::from_car_arg(s)?,
            arg_terms: Vec::new(),
            tail: None,
        }),
        Term::Abs(alpha, body) => {
            let Term::App(f, pi) = &**body else { return None };
            let Term::Car(s) = &**f else { return None };
            let spine = pi.spine();
            Some(OnfView {
                binder: Some(alpha.clone()),
                head: Head::from_car_arg(s)?,
                arg_terms: spine.terms,
                tail: Some((spine.tail, spine.cdrs)),
            })
        }
        Term::App(..) => None,
    }
}

pub fn decompose_onf(m: &Term) -> Option<OnfView> {
    onf_of_canonical(&m.canonical())
}

pub fn outer_normalize(m: &Term, fuel: usize) -> Result<StrategyResult<OnfView>, StrategyError> {
    check_original(m)?;
    let mut cur = m.canonical();
    for _ in 0..=fuel {
        if let Some(v) = onf_of_canonical(&cur) {
            return Ok(if v.is_proper() {
                StrategyResult::Found(v)
            } else {
                StrategyResult::Improper(v)
            });
        }
        match outer_step_canonical(&cur) {
            Some(next) => cur = next,
            None => break,
        }
    }
    Ok(StrategyResult::Diverged(fuel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants;
    use crate::parse::{parse_stack, parse_term};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn head_step_examples() {
        let r = head_step(&t("bd e. #T @ e")).unwrap();
        assert!(r.alpha_eq(&t("bd e. car(e) @ cdr^2(e)")));
        assert_eq!(head_step(&t("bd a. car(b) @ a")), None);
        let o = constants::big_omega();
        assert!(head_step(&o).unwrap().alpha_eq(&o));
    }

    #[test]
    fn head_normalize_examples() {
        match head_normalize(&t("#T @ #F :: nil"), 100) {
            StrategyResult::Improper(v) => {
                assert_eq!(v.head, Head::Nil(2));
                assert_eq!(v.args, vec![parse_stack("cdr^3(nil)").unwrap()]);
                assert!(v.binders.is_empty());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            head_normalize(&t("bd a. car(b) @ a"), 10),
            StrategyResult::Found(HnfView {
                binders: vec!["a".into()],
                head: Head::Proper("b".into(), 0),
                args: vec![Stack::var("a")],
            })
        );
        assert_eq!(
            head_normalize(&constants::t_infinity(), 10_000),
            StrategyResult::Diverged(10_000)
        );
    }

    #[test]
    fn decompose_examples() {
        let v = decompose_hnf(&constants::true_term()).unwrap();
        assert_eq!(v.binders, vec![VarName::from("a")]);
        assert_eq!(v.head, Head::Proper("a".into(), 0));
        assert_eq!(v.args, vec![parse_stack("cdr^2(a)").unwrap()]);
        assert_eq!(decompose_hnf(&t("bd e. #T @ e")), None);
        let v = decompose_hnf(&t("car(nil)")).unwrap();
        assert_eq!((v.binders.len(), v.head, v.args.len()), (0, Head::Nil(0), 0));
        for s in ["#T", "bd a. car(b) @ a @ nil", "car(cdr(x))"] {
            let m = t(s);
            assert!(decompose_hnf(&m).unwrap().recompose().alpha_eq(&m.canonical()));
        }
    }

    #[test]
    fn outer_examples() {
        let r = outer_step(&t("bd g. (bd a. car(a) @ a) @ #T :: g"))
            .unwrap()
            .unwrap();
        assert!(r.canonical().alpha_eq(&t("bd g. car(#T :: g) @ #T :: g").canonical()));
        assert_eq!(outer_step(&constants::true_term()), Ok(None));
        let o = constants::big_omega();
        assert!(outer_step(&o).unwrap().unwrap().alpha_eq(&o));
        assert_eq!(
            outer_step(&t("bd a. car(a) @ a @ a")),
            Err(StrategyError::InvalidDialect)
        );
    }

    #[test]
    fn outer_normalize_examples() {
        let w = constants::wrapper(constants::true_term());
        match outer_normalize(&w, 100).unwrap() {
            StrategyResult::Found(v) => {
                assert_eq!(v.head, Head::Proper("a".into(), 0));
                assert!(v.recompose().alpha_eq(&w));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            outer_normalize(&constants::big_omega(), 500).unwrap(),
            StrategyResult::Diverged(500)
        );
        let tt = constants::true_term();
        assert_eq!(
            outer_normalize(&tt, 1).unwrap().view().unwrap().recompose(),
            tt
        );
    }

    #[test]
    fn identity_reaches_hnf_quickly() {
        let (r, steps) = head_normalize_counted(&t("#I @ (bd z. car(z) @ z) :: nil"), 10);
        assert!(r.view().is_some());
        assert!(steps <= 3);
    }
}
