//! Contextual one-step reduction, fuel-bounded normalisation and
//! convertibility checks.

use std::collections::{HashSet, VecDeque};

use crate::syntax::{alpha_key, Expr, Stack, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleSet {
    pub bd: bool,
    pub car: bool,
    pub cdr: bool,
    pub eta0: bool,
    pub eta1: bool,
}

impl RuleSet {
    pub const SIGMA: RuleSet = RuleSet {
        bd: true,
        car: true,
        cdr: true,
        eta0: false,
        eta1: false,
    };
    pub const SIGMA_ETA: RuleSet = RuleSet {
        bd: true,
        car: true,
        cdr: true,
        eta0: true,
        eta1: true,
    };

    pub fn is_subset_of(&self, other: &RuleSet) -> bool {
        (!self.bd || other.bd)
            && (!self.car || other.car)
            && (!self.cdr || other.cdr)
            && (!self.eta0 || other.eta0)
            && (!self.eta1 || other.eta1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Bd,
    Car,
    Cdr,
    Eta0,
    Eta1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductOutcome {
    Normal { expr: Expr, steps: usize },
    FuelExhausted { last: Expr, steps: usize },
}

impl ReductOutcome {
    pub fn expr(&self) -> &Expr {
        match self {
            ReductOutcome::Normal { expr, .. } => expr,
            ReductOutcome::FuelExhausted { last, .. } => last,
        }
    }

    pub fn steps(&self) -> usize {
        match self {
            ReductOutcome::Normal { steps, .. } | ReductOutcome::FuelExhausted { steps, .. } => {
                *steps
            }
        }
    }

    pub fn normal(&self) -> Option<&Expr> {
        match self {
            ReductOutcome::Normal { expr, .. } => Some(expr),
            ReductOutcome::FuelExhausted { .. } => None,
        }
    }
}

/// Three-valued answer of a bounded semi-decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

fn term_root(t: &Term, rules: RuleSet, out: &mut Vec<(Rule, Term)>) {
    match t {
        Term::App(f, s) if rules.bd => {
            if let Term::Abs(a, body) = &**f {
                out.push((Rule::Bd, body.subst(s, a)));
            }
        }
        Term::Abs(a, body) if rules.eta0 => {
            if let Term::App(m, s) = &**body {
                if matches!(&**s, Stack::Var(v) if v == a) && !m.has_free(a) {
                    out.push((Rule::Eta0, (**m).clone()));
                }
            }
        }
        Term::Car(s) if rules.car => {
            if let Stack::Push(h, _) = &**s {
                out.push((Rule::Car, (**h).clone()));
            }
        }
        _ => {}
    }
}

fn stack_root(s: &Stack, rules: RuleSet, out: &mut Vec<(Rule, Stack)>) {
    match s {
        Stack::Cdr(inner) if rules.cdr => {
            if let Stack::Push(_, t) = &**inner {
                out.push((Rule::Cdr, (**t).clone()));
            }
        }
        Stack::Push(h, t) if rules.eta1 => {
            if let (Term::Car(p), Stack::Cdr(q)) = (&**h, &**t) {
                if p.alpha_eq(q) {
                    out.push((Rule::Eta1, (**p).clone()));
                }
            }
        }
        _ => {}
    }
}

fn term_reducts(t: &Term, rules: RuleSet, out: &mut Vec<(Rule, Term)>) {
    term_root(t, rules, out);
    match t {
        Term::Car(s) => {
            let mut inner = Vec::new();
            stack_reducts(s, rules, &mut inner);
            out.extend(inner.into_iter().map(|(r, s)| (r, Term::car(s))));
        }
        Term::Abs(a, body) => {
            let mut inner = Vec::new();
            term_reducts(body, rules, &mut inner);
            out.extend(inner.into_iter().map(|(r, b)| (r, Term::abs(a.clone(), b))));
        }
        Term::App(f, s) => {
            let mut inner = Vec::new();
            term_reducts(f, rules, &mut inner);
            out.extend(
                inner
                    .into_iter()
                    .map(|(r, f2)| (r, Term::app(f2, (**s).clone()))),
            );
            let mut inner = Vec::new();
            stack_reducts(s, rules, &mut inner);
            out.extend(
                inner
                    .into_iter()
                    .map(|(r, s2)| (r, Term::app((**f).clone(), s2))),
            );
        }
    }
}

fn stack_reducts(s: &Stack, rules: RuleSet, out: &mut Vec<(Rule, Stack)>) {
    stack_root(s, rules, out);
    match s {
        Stack::Nil | Stack::Var(_) => {}
        Stack::Cdr(inner) => {
            let mut v = Vec::new();
            stack_reducts(inner, rules, &mut v);
            out.extend(v.into_iter().map(|(r, s)| (r, Stack::cdr(s))));
        }
        Stack::Push(h, t) => {
            let mut v = Vec::new();
            term_reducts(h, rules, &mut v);
            out.extend(
                v.into_iter()
                    .map(|(r, h2)| (r, Stack::push(h2, (**t).clone()))),
            );
            let mut v = Vec::new();
            stack_reducts(t, rules, &mut v);
            out.extend(
                v.into_iter()
                    .map(|(r, t2)| (r, Stack::push((**h).clone(), t2))),
            );
        }
    }
}

/// All one-step reducts with the rule that produced each, in pre-order
/// (outermost first, left to right).
pub fn labeled_reducts(e: &Expr, rules: RuleSet) -> Vec<(Rule, Expr)> {
    match e {
        Expr::Term(t) => {
            let mut out = Vec::new();
            term_reducts(t, rules, &mut out);
            out.into_iter().map(|(r, t)| (r, Expr::Term(t))).collect()
        }
        Expr::Stack(s) => {
            let mut out = Vec::new();
            stack_reducts(s, rules, &mut out);
            out.into_iter().map(|(r, s)| (r, Expr::Stack(s))).collect()
        }
    }
}

pub fn one_step_redexes(e: &Expr, rules: RuleSet) -> Vec<Expr> {
    labeled_reducts(e, rules)
        .into_iter()
        .map(|(_, e)| e)
        .collect()
}

fn term_leftmost(t: &Term, rules: RuleSet) -> Option<(Rule, Term)> {
    let mut root = Vec::new();
    term_root(t, rules, &mut root);
    if let Some(r) = root.into_iter().next() {
        return Some(r);
    }
    match t {
        Term::Car(s) => stack_leftmost(s, rules).map(|(r, s)| (r, Term::car(s))),
        Term::Abs(a, body) => {
            term_leftmost(body, rules).map(|(r, b)| (r, Term::abs(a.clone(), b)))
        }
        Term::App(f, s) => term_leftmost(f, rules)
            .map(|(r, f2)| (r, Term::app(f2, (**s).clone())))
            .or_else(|| {
                stack_leftmost(s, rules).map(|(r, s2)| (r, Term::app((**f).clone(), s2)))
            }),
    }
}

fn stack_leftmost(s: &Stack, rules: RuleSet) -> Option<(Rule, Stack)> {
    let mut root = Vec::new();
    stack_root(s, rules, &mut root);
    if let Some(r) = root.into_iter().next() {
        return Some(r);
    }
    match s {
        Stack::Nil | Stack::Var(_) => None,
        Stack::Cdr(inner) => stack_leftmost(inner, rules).map(|(r, s)| (r, Stack::cdr(s))),
        Stack::Push(h, t) => term_leftmost(h, rules)
            .map(|(r, h2)| (r, Stack::push(h2, (**t).clone())))
            .or_else(|| {
                stack_leftmost(t, rules).map(|(r, t2)| (r, Stack::push((**h).clone(), t2)))
            }),
    }
}

/// Contracts the leftmost-outermost redex, i.e. the first element of
/// [`labeled_reducts`].
pub fn step_leftmost(e: &Expr, rules: RuleSet) -> Option<(Rule, Expr)> {
    match e {
        Expr::Term(t) => term_leftmost(t, rules).map(|(r, t)| (r, Expr::Term(t))),
        Expr::Stack(s) => stack_leftmost(s, rules).map(|(r, s)| (r, Expr::Stack(s))),
    }
}

pub fn reduce_normal(e: &Expr, rules: RuleSet, fuel: usize) -> ReductOutcome {
    reduce_traced(e, rules, fuel, |_, _| {})
}

/// Like [`reduce_normal`], calling `on_step` after every contraction.
pub fn reduce_traced(
    e: &Expr,
    rules: RuleSet,
    fuel: usize,
    mut on_step: impl FnMut(Rule, &Expr),
) -> ReductOutcome {
    let mut cur = e.clone();
    for steps in 0..fuel {
        match step_leftmost(&cur, rules) {
            Some((rule, next)) => {
                on_step(rule, &next);
                cur = next;
            }
            None => return ReductOutcome::Normal { expr: cur, steps },
        }
    }
    if step_leftmost(&cur, rules).is_none() {
        ReductOutcome::Normal { expr: cur, steps: fuel }
    } else {
        ReductOutcome::FuelExhausted {
            last: cur,
            steps: fuel,
        }
    }
}

/// The leftmost reduction sequence read modulo car/cdr: each expression is
/// replaced by its canonical form and consecutive alpha-equal entries are
/// merged. The first entry is the (canonical) start.
pub fn canonical_trace(e: &Expr, rules: RuleSet, fuel: usize) -> (Vec<Expr>, ReductOutcome) {
    let mut chain = vec![crate::syntax::canonical_form(e)];
    let mut last_key = alpha_key(&chain[0]);
    let outcome = reduce_traced(e, rules, fuel, |_, next| {
        let c = crate::syntax::canonical_form(next);
        let k = alpha_key(&c);
        if k != last_key {
            last_key = k;
            chain.push(c);
        }
    });
    (chain, outcome)
}

/// Decides `e1 = e2` soundly but incompletely: compare leftmost normal
/// forms, then fall back to a bounded common-reduct search.
pub fn convertible(e1: &Expr, e2: &Expr, rules: RuleSet, fuel: usize) -> Tri {
    joinable(e1, e2, rules, fuel)
}

/// Searches for a common reduct of `e1` and `e2`.
///
/// Returns `No` only when both sides reach distinct normal forms, which by
/// confluence can never be joined.
pub fn joinable(e1: &Expr, e2: &Expr, rules: RuleSet, fuel: usize) -> Tri {
    if matches!((e1, e2), (Expr::Term(_), Expr::Stack(_)) | (Expr::Stack(_), Expr::Term(_))) {
        return Tri::No;
    }
    let k1 = alpha_key(e1);
    let k2 = alpha_key(e2);
    if k1 == k2 {
        return Tri::Yes;
    }

    // Leftmost paths of both sides.
    let mut seen1: HashSet<String> = HashSet::from([k1.clone()]);
    let mut seen2: HashSet<String> = HashSet::from([k2.clone()]);
    let mut hit = false;
    let o1 = reduce_traced(e1, rules, fuel, |_, e| {
        seen1.insert(alpha_key(e));
    });
    let o2 = reduce_traced(e2, rules, fuel, |_, e| {
        let k = alpha_key(e);
        hit |= seen1.contains(&k);
        seen2.insert(k);
    });
    if hit {
        return Tri::Yes;
    }
    if let (Some(n1), Some(n2)) = (o1.normal(), o2.normal()) {
        return if alpha_key(n1) == alpha_key(n2) {
            Tri::Yes
        } else {
            Tri::No
        };
    }
    if seen1.iter().any(|k| seen2.contains(k)) {
        return Tri::Yes;
    }

    // Breadth-first search from both sides, alternating, `fuel` expansions.
    let mut visited = [HashSet::from([k1]), HashSet::from([k2])];
    let mut queues = [VecDeque::from([e1.clone()]), VecDeque::from([e2.clone()])];
    let mut budget = fuel;
    let mut side = 0;
    while budget > 0 && (!queues[0].is_empty() || !queues[1].is_empty()) {
        if queues[side].is_empty() {
            side = 1 - side;
        }
        let Some(cur) = queues[side].pop_front() else {
            break;
        };
        budget -= 1;
        for next in one_step_redexes(&cur, rules) {
            let k = alpha_key(&next);
            if visited[1 - side].contains(&k) || seen_other(side, &seen1, &seen2, &k) {
                return Tri::Yes;
            }
            if visited[side].insert(k) {
                queues[side].push_back(next);
            }
        }
        side = 1 - side;
    }
    Tri::Unknown
}

fn seen_other(side: usize, seen1: &HashSet<String>, seen2: &HashSet<String>, k: &str) -> bool {
    if side == 0 {
        seen2.contains(k)
    } else {
        seen1.contains(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_expr, parse_term};

    fn e(s: &str) -> Expr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn identity_applied_to_identity() {
        let start = e("#I @ #I :: nil");
        let reducts = one_step_redexes(&start, RuleSet::SIGMA);
        // Only the outer bd redex exists; after car/cdr it is I @ nil.
        assert_eq!(reducts.len(), 1);
        let out = reduce_normal(&start, RuleSet::SIGMA, 100);
        assert_eq!(out.normal(), Some(&e("car(nil) @ cdr(nil)")));
        let (chain, _) = canonical_trace(&start, RuleSet::SIGMA, 100);
        let expect = [e("#I @ #I :: nil"), e("#I @ nil"), e("car(nil) @ cdr(nil)")];
        assert_eq!(chain.len(), 3);
        for (got, want) in chain.iter().zip(expect.iter()) {
            assert!(crate::syntax::alpha_eq(got, want), "{got} vs {want}");
        }
    }

    #[test]
    fn omega_loops() {
        let start = e("#omega @ #omega :: nil");
        let reducts = one_step_redexes(&start, RuleSet::SIGMA);
        let two = reducts
            .iter()
            .flat_map(|r| one_step_redexes(r, RuleSet::SIGMA))
            .collect::<Vec<_>>();
        assert!(two.iter().any(|r| crate::syntax::alpha_eq(r, &start)));
        assert_eq!(
            reduce_normal(&start, RuleSet::SIGMA, 50),
            ReductOutcome::FuelExhausted {
                last: reduce_normal(&start, RuleSet::SIGMA, 50).expr().clone(),
                steps: 50
            }
        );
    }

    #[test]
    fn eta_rules() {
        let r = one_step_redexes(&e("bd a. car(nil) @ a"), RuleSet::SIGMA_ETA);
        assert!(r.contains(&e("car(nil)")));
        assert!(one_step_redexes(&e("bd a. car(a) @ a"), RuleSet::SIGMA_ETA).is_empty());
        let out = reduce_normal(&e("car(x) :: cdr(x)"), RuleSet::SIGMA_ETA, 10);
        assert_eq!(out.normal(), Some(&e("x")));
        assert!(one_step_redexes(&e("car(x) :: cdr(x)"), RuleSet::SIGMA).is_empty());
    }

    #[test]
    fn convertibility() {
        let t = e("#T");
        assert_eq!(convertible(&t, &t, RuleSet::SIGMA, 10), Tri::Yes);
        assert_eq!(convertible(&e("#T"), &e("#F"), RuleSet::SIGMA, 100), Tri::No);
        assert_eq!(
            convertible(&e("bd e. #T @ e"), &e("#T"), RuleSet::SIGMA, 100),
            Tri::Yes
        );
        // Non-normalising but convertible.
        let o = e("#Omega");
        let o2 = Expr::Term(parse_term("bd g. car(#omega :: g) @ #omega :: g").unwrap());
        assert_eq!(convertible(&o, &o2, RuleSet::SIGMA, 50), Tri::Yes);
        assert_eq!(convertible(&e("#T"), &e("nil"), RuleSet::SIGMA, 5), Tri::No);
    }

    #[test]
    fn local_confluence_example() {
        let start = e("(bd a. car(#T :: a) @ a) @ #F :: nil");
        let reducts = one_step_redexes(&start, RuleSet::SIGMA);
        assert!(reducts.len() >= 2);
        for x in &reducts {
            for y in &reducts {
                assert_eq!(joinable(x, y, RuleSet::SIGMA, 200), Tri::Yes);
            }
        }
        let t = e("#T");
        assert_eq!(joinable(&t, &t, RuleSet::SIGMA, 1), Tri::Yes);
        assert_ne!(joinable(&e("#T"), &e("#F"), RuleSet::SIGMA, 100), Tri::Yes);
    }

    #[test]
    fn rule_sets() {
        assert!(RuleSet::SIGMA.is_subset_of(&RuleSet::SIGMA_ETA));
        assert!(!RuleSet::SIGMA_ETA.is_subset_of(&RuleSet::SIGMA));
    }
}
