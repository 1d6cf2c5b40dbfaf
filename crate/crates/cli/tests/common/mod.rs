//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stack_calculus::reduce::{one_step_redexes, RuleSet};
use stack_calculus::{Expr, Stack, Term, VarName};

pub struct Gen {
    pub rng: ChaCha8Rng,
    free: Vec<VarName>,
    next: u32,
    /// Probability that a generated stack ends in `nil`.
    pub nil_rate: f64,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            free: vec!["x".into(), "y".into()],
            next: 0,
            nil_rate: 0.0,
        }
    }

    fn binder(&mut self) -> VarName {
        self.next += 1;
        VarName::new("a", self.next)
    }

    fn pick(&mut self, scope: &[VarName]) -> VarName {
        let all: Vec<&VarName> = scope.iter().chain(self.free.iter()).collect();
        all[self.rng.gen_range(0..all.len())].clone()
    }

    /// A nil-free term with at most `depth` levels of pushed subterms.
    pub fn term(&mut self, depth: usize, scope: &mut Vec<VarName>) -> Term {
        let nb = self.rng.gen_range(0..=2);
        let binders: Vec<VarName> = (0..nb).map(|_| self.binder()).collect();
        scope.extend(binders.iter().cloned());
        // An improper head now and then, when nil is enabled.
        let head = if self.rng.gen_bool(self.nil_rate / 2.0) {
            Stack::Nil
        } else {
            Stack::Var(self.pick(scope))
        };
        let idx = self.rng.gen_range(0..=1);
        let nargs = self.rng.gen_range(0..=2);
        let args: Vec<Stack> = (0..nargs).map(|_| self.stack(depth, scope)).collect();
        scope.truncate(scope.len() - nb);
        Term::abs_many(binders, Term::apps(Term::car(Stack::cdr_n(head, idx)), args))
    }

    pub fn stack(&mut self, depth: usize, scope: &mut Vec<VarName>) -> Stack {
        let nterms = if depth == 0 { 0 } else { self.rng.gen_range(0..=2) };
        let terms: Vec<Term> = (0..nterms).map(|_| self.term(depth - 1, scope)).collect();
        let tail = if self.rng.gen_bool(self.nil_rate) {
            Stack::Nil
        } else {
            Stack::Var(self.pick(scope))
        };
        let cdrs = self.rng.gen_range(0..=1);
        Stack::push_all(terms, Stack::cdr_n(tail, cdrs))
    }

    pub fn normal_term(&mut self, depth: usize) -> Term {
        loop {
            let t = self.term(depth, &mut vec![]);
            if is_sigma_eta_normal(&t) {
                return t;
            }
        }
    }

    /// Changes one randomly chosen node of `t`.
    pub fn mutate(&mut self, t: &Term, depth: usize, scope: &mut Vec<VarName>) -> Term {
        let (binders, head, args) = split(t);
        scope.extend(binders.iter().cloned());
        let out = if args.is_empty() || self.rng.gen_bool(0.35) {
            match self.rng.gen_range(0..4) {
                0 => {
                    let (v, k) = head_of(&head);
                    Term::apps(Term::car(Stack::cdr_n(Stack::Var(v), 1 - k.min(1))), args)
                }
                1 => {
                    let mut args = args.clone();
                    if args.is_empty() || self.rng.gen_bool(0.5) {
                        args.push(self.stack(depth, scope));
                    } else {
                        args.pop();
                    }
                    Term::apps(head, args)
                }
                2 => {
                    let mut args = args.clone();
                    if let Some(a) = args.last_mut() {
                        *a = self.stack(depth, scope);
                    } else {
                        args.push(self.stack(depth, scope));
                    }
                    Term::apps(head, args)
                }
                _ => {
                    let (_, k) = head_of(&head);
                    let v = self.pick(scope);
                    Term::apps(Term::car(Stack::cdr_n(Stack::Var(v), k)), args)
                }
            }
        } else {
            let i = self.rng.gen_range(0..args.len());
            let mut args = args.clone();
            args[i] = self.mutate_stack(&args[i], depth, scope);
            Term::apps(head, args)
        };
        scope.truncate(scope.len() - binders.len());
        Term::abs_many(binders, out)
    }

    fn mutate_stack(&mut self, s: &Stack, depth: usize, scope: &mut Vec<VarName>) -> Stack {
        let sp = s.spine();
        let mut terms = sp.terms.clone();
        if !terms.is_empty() && depth > 0 && self.rng.gen_bool(0.6) {
            let i = self.rng.gen_range(0..terms.len());
            terms[i] = self.mutate(&terms[i], depth - 1, scope);
            return Stack::push_all(terms, Stack::cdr_n(sp.tail.to_stack(), sp.cdrs));
        }
        let tail = if self.rng.gen_bool(0.5) {
            Stack::Var(self.pick(scope))
        } else {
            sp.tail.to_stack()
        };
        let cdrs = if self.rng.gen_bool(0.5) { 1 - sp.cdrs.min(1) } else { sp.cdrs };
        Stack::push_all(terms, Stack::cdr_n(tail, cdrs))
    }

    /// Two distinct sigma-eta-normal, nil-free terms that share structure.
    pub fn pair(&mut self, depth: usize) -> (Term, Term) {
        loop {
            let m = self.normal_term(depth);
            let n = self.mutate(&m, depth, &mut vec![]);
            if is_sigma_eta_normal(&n) && !m.alpha_eq(&n) {
                return (m, n);
            }
        }
    }
}

/// Unconstrained expressions over a few variable names, redexes included.
pub struct AnyGen {
    pub rng: ChaCha8Rng,
}

const NAMES: [&str; 4] = ["a", "b", "c", "x"];

impl AnyGen {
    pub fn new(seed: u64) -> Self {
        AnyGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn var(&mut self) -> VarName {
        NAMES[self.rng.gen_range(0..NAMES.len())].into()
    }

    pub fn term(&mut self, budget: usize) -> Term {
        if budget <= 2 {
            return Term::car(Stack::Var(self.var()));
        }
        match self.rng.gen_range(0..5) {
            0 => Term::car(self.stack(budget - 1)),
            1 | 2 => {
                let v = self.var();
                Term::abs(v, self.term(budget - 1))
            }
            _ => {
                let left = self.rng.gen_range(1..budget - 1);
                Term::app(self.term(left), self.stack(budget - 1 - left))
            }
        }
    }

    pub fn stack(&mut self, budget: usize) -> Stack {
        if budget <= 2 {
            return if self.rng.gen_bool(0.3) {
                Stack::Nil
            } else {
                Stack::Var(self.var())
            };
        }
        match self.rng.gen_range(0..6) {
            0 => Stack::Nil,
            1 => Stack::Var(self.var()),
            2 => Stack::cdr(self.stack(budget - 1)),
            _ => {
                let left = self.rng.gen_range(1..budget - 1);
                Stack::push(self.term(left), self.stack(budget - 1 - left))
            }
        }
    }

    /// A term or stack of size at most `max`.
    pub fn expr(&mut self, max: usize) -> Expr {
        loop {
            let budget = self.rng.gen_range(3..=max);
            let e = if self.rng.gen_bool(0.7) {
                Expr::Term(self.term(budget))
            } else {
                Expr::Stack(self.stack(budget))
            };
            if e.size() <= max {
                return e;
            }
        }
    }
}

pub fn is_sigma_eta_normal(t: &Term) -> bool {
    one_step_redexes(&Expr::Term(t.clone()), RuleSet::SIGMA_ETA).is_empty()
}

fn split(t: &Term) -> (Vec<VarName>, Term, Vec<Stack>) {
    let mut binders = vec![];
    let mut cur = t;
    while let Term::Abs(b, body) = cur {
        binders.push(b.clone());
        cur = body;
    }
    let mut args = vec![];
    while let Term::App(f, s) = cur {
        args.push((**s).clone());
        cur = f;
    }
    args.reverse();
    (binders, cur.clone(), args)
}

fn head_of(h: &Term) -> (VarName, usize) {
    let Term::Car(s) = h else { panic!("generated heads are car(cdr^k(v))") };
    let sp = s.spine();
    match sp.tail {
        stack_calculus::syntax::Tail::Var(v) => (v, sp.cdrs),
        _ => panic!("nil-free"),
    }
}
