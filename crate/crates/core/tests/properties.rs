use proptest::prelude::*;
use stack_calculus::bohm::{node_at, stack_similar, virtual_node, Lookup, NodePath, SimVerdict};
use stack_calculus::reduce::{convertible, one_step_redexes, reduce_normal, RuleSet, Tri};
use stack_calculus::strategy::{decompose_hnf, head_normalize, head_step};
use stack_calculus::syntax::free_vars;
use stack_calculus::{
    alpha_eq, canonical_form, parse_expr, parse_stack, parse_term, Dialect, Expr, Stack, Term,
    VarName,
};

fn var() -> impl Strategy<Value = VarName> {
    prop::sample::select(vec!["a", "b", "c", "x1", "y"]).prop_map(VarName::from)
}

fn term(d: u32) -> BoxedStrategy<Term> {
    if d == 0 {
        return var().prop_map(|v| Term::car(Stack::Var(v))).boxed();
    }
    prop_oneof![
        2 => stack(d - 1).prop_map(Term::car),
        2 => (var(), term(d - 1)).prop_map(|(v, b)| Term::abs(v, b)),
        2 => (term(d - 1), stack(d - 1)).prop_map(|(f, s)| Term::app(f, s)),
    ]
    .boxed()
}

fn stack(d: u32) -> BoxedStrategy<Stack> {
    let leaf = prop_oneof![Just(Stack::Nil), var().prop_map(Stack::Var)];
    if d == 0 {
        return leaf.boxed();
    }
    prop_oneof![
        2 => leaf,
        1 => stack(d - 1).prop_map(Stack::cdr),
        3 => (term(d - 1), stack(d - 1)).prop_map(|(t, s)| Stack::push(t, s)),
    ]
    .boxed()
}

fn small_term() -> impl Strategy<Value = Term> {
    term(5).prop_filter("size", |t| t.size() <= 40)
}

fn small_stack() -> impl Strategy<Value = Stack> {
    stack(4).prop_filter("size", |s| s.size() <= 20)
}

fn expr() -> impl Strategy<Value = Expr> {
    prop_oneof![
        small_term().prop_map(Expr::Term),
        small_stack().prop_map(Expr::Stack)
    ]
}

/// Terms of the original grammar: `car(s)` or `bd a. M @ s`.
fn original_term(d: u32) -> BoxedStrategy<Term> {
    let s = original_stack(d.saturating_sub(1));
    if d == 0 {
        return var().prop_map(|v| Term::car(Stack::Var(v))).boxed();
    }
    prop_oneof![
        s.clone().prop_map(Term::car),
        (var(), original_term(d - 1), s).prop_map(|(v, m, s)| Term::abs(v, Term::app(m, s))),
    ]
    .boxed()
}

fn original_stack(d: u32) -> BoxedStrategy<Stack> {
    let leaf = prop_oneof![Just(Stack::Nil), var().prop_map(Stack::Var)];
    if d == 0 {
        return leaf.boxed();
    }
    prop_oneof![
        leaf,
        original_stack(d - 1).prop_map(Stack::cdr),
        (original_term(d - 1), original_stack(d - 1)).prop_map(|(t, s)| Stack::push(t, s)),
    ]
    .boxed()
}

const CAR_CDR: RuleSet = RuleSet {
    bd: false,
    car: true,
    cdr: true,
    eta0: false,
    eta1: false,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_parse_round_trip(t in small_term(), s in small_stack()) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t.clone());
        prop_assert_eq!(parse_stack(&s.to_string()).unwrap(), s);
        let printed = t.to_string();
        prop_assert_eq!(parse_term(&printed).unwrap().to_string(), printed);
    }

    #[test]
    fn free_variables_after_substitution(e in expr(), pi in small_stack(), alpha in var()) {
        let after = match &e {
            Expr::Term(t) => Expr::Term(t.subst(&pi, &alpha)),
            Expr::Stack(s) => Expr::Stack(s.subst(&pi, &alpha)),
        };
        let mut expected = free_vars(&e);
        let had = expected.remove(&alpha);
        if had {
            expected.extend(pi.free_vars());
        }
        prop_assert_eq!(free_vars(&after), expected);
    }

    #[test]
    fn substitution_lemma(e in small_term(), pi in small_stack(), varpi in small_stack(),
                          alpha in var(), beta in var()) {
        prop_assume!(alpha != beta && !varpi.has_free(&alpha));
        let lhs = e.subst(&pi, &alpha).subst(&varpi, &beta);
        let rhs = e.subst(&varpi, &beta).subst(&pi.subst(&varpi, &beta), &alpha);
        prop_assert!(lhs.alpha_eq(&rhs), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn canonical_form_is_idempotent_and_order_free(e in expr(), picks in prop::collection::vec(any::<prop::sample::Index>(), 64)) {
        let c = canonical_form(&e);
        prop_assert!(alpha_eq(&canonical_form(&c), &c));
        // Contract car/cdr redexes in an arbitrary order.
        let mut cur = e.clone();
        for p in &picks {
            let next = one_step_redexes(&cur, CAR_CDR);
            if next.is_empty() {
                break;
            }
            cur = p.get(&next).clone();
        }
        while let Some(next) = one_step_redexes(&cur, CAR_CDR).into_iter().next() {
            cur = next;
        }
        prop_assert!(alpha_eq(&cur, &c));
    }

    #[test]
    fn original_dialect_is_closed(m in original_term(4), pi in original_stack(3), alpha in var()) {
        prop_assert!(Dialect::Original.accepts_term(&m));
        prop_assert!(Dialect::Original.accepts_term(&m.subst(&pi, &alpha)));
        prop_assert!(Dialect::Original.accepts_term(&m.canonical()));
    }

    #[test]
    fn normal_forms_have_no_redexes(e in expr()) {
        for rules in [RuleSet::SIGMA, RuleSet::SIGMA_ETA] {
            let out = reduce_normal(&e, rules, 200);
            if let Some(nf) = out.normal() {
                prop_assert!(one_step_redexes(nf, rules).is_empty());
            }
            // Sorts are preserved.
            prop_assert_eq!(matches!(out.expr(), Expr::Term(_)), matches!(e, Expr::Term(_)));
        }
    }

    #[test]
    fn head_steps_are_sound(m in small_term()) {
        if let Some(next) = head_step(&m) {
            prop_assert_eq!(head_step(&m), Some(next.clone()));
            let verdict = convertible(&Expr::Term(m.clone()), &Expr::Term(next), RuleSet::SIGMA, 200);
            prop_assert_ne!(verdict, Tri::No);
        }
    }

    #[test]
    fn hnf_decomposition_round_trips(m in small_term()) {
        if let Some(v) = decompose_hnf(&m) {
            prop_assert!(v.recompose().alpha_eq(&m.canonical()));
        }
    }

    #[test]
    fn stack_similarity_is_reflexive_and_symmetric(a in small_stack(), b in small_stack()) {
        prop_assert_eq!(stack_similar(&a, &a), SimVerdict::Similar);
        prop_assert_eq!(stack_similar(&a, &b).is_dissimilar(), stack_similar(&b, &a).is_dissimilar());
    }

    #[test]
    fn stack_similarity_ignores_element_substitution(a in small_stack(), b in small_stack(),
                                                      pi in small_stack(), alpha in var()) {
        let sp = a.canonical().spine();
        let terms: Vec<Term> = sp.terms.iter().map(|t| t.subst(&pi, &alpha)).collect();
        let a2 = Stack::push_all(terms, Stack::cdr_n(sp.tail.to_stack(), sp.cdrs));
        prop_assert_eq!(
            stack_similar(&a.canonical(), &b.canonical()).is_dissimilar(),
            stack_similar(&a2, &b.canonical()).is_dissimilar()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn tree_prefixes_are_proper(m in small_term(), j in 1usize..3, jp in 1usize..3, j2 in 1usize..3, jp2 in 1usize..3) {
        let sigma = NodePath(vec![(j, jp), (j2, jp2)]);
        if let Lookup::Defined(_) = node_at(&m, &sigma, 300) {
            for len in 0..sigma.len() {
                let node = node_at(&m, &sigma.prefix(len), 300).defined();
                prop_assert!(node.is_some());
                prop_assert!(head_normalize(&node.unwrap(), 300).is_proper());
            }
            // Real nodes are virtual nodes with the same value.
            let v = virtual_node(&m, &sigma, 300).defined().unwrap();
            prop_assert!(v.alpha_eq(&node_at(&m, &sigma, 300).defined().unwrap()));
        }
    }
}

#[test]
fn expression_sorts_parse_back() {
    for text in ["a", "bd a. car(a)", "car(x) :: nil", "cdr^3(y)"] {
        let e = parse_expr(text).unwrap();
        assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }
}
