//! Abstract syntax of the (extended) stack calculus.
//!
//! Stacks and terms are two mutually recursive sorts. Processes `M @ π` of
//! the original calculus are represented as [`Term::App`]; the
//! [`Dialect`] predicate tells whether a value stays inside the original
//! grammar.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A stack variable: a base identifier plus a renaming index (0 = none).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarName {
    base: Arc<str>,
    index: u32,
}

pub(crate) fn is_valid_base(base: &str) -> bool {
    let mut chars = base.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarName {
    /// Builds a name from an already split base and index.
    ///
    /// Panics if `base` is not a valid identifier.
    pub fn new(base: &str, index: u32) -> Self {
        assert!(is_valid_base(base), "invalid variable base {base:?}");
        VarName {
            base: Arc::from(base),
            index,
        }
    }

    /// Parses a surface identifier, splitting a trailing renaming index.
    ///
    /// `b1` is `(b, 1)`, `x0_2` is `(x0, 2)` and `x01` stays unsuffixed.
    /// This is the exact inverse of the `Display` impl.
    pub fn parse(ident: &str) -> Option<Self> {
        if !is_valid_base(ident) {
            return None;
        }
        let digits_start = ident
            .char_indices()
            .rev()
            .take_while(|(_, c)| c.is_ascii_digit())
            .last()
            .map(|(i, _)| i);
        if let Some(start) = digits_start {
            let digits = &ident[start..];
            let prefix = &ident[..start];
            if start > 0 && !digits.starts_with('0') {
                if let Ok(index) = digits.parse::<u32>() {
                    let base = match prefix.strip_suffix('_') {
                        Some(p) if p.ends_with(|c: char| c.is_ascii_digit()) => p,
                        _ => prefix,
                    };
                    if is_valid_base(base) {
                        return Some(VarName::new(base, index));
                    }
                }
            }
        }
        Some(VarName::new(ident, 0))
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl From<&str> for VarName {
    fn from(s: &str) -> Self {
        VarName::parse(s).unwrap_or_else(|| panic!("invalid variable name {s:?}"))
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.base)?;
        if self.index > 0 {
            if self.base.ends_with(|c: char| c.is_ascii_digit()) {
                f.write_str("_")?;
            }
            write!(f, "{}", self.index)?;
        }
        Ok(())
    }
}

impl fmt::Debug for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Stack {
    Nil,
    Var(VarName),
    Cdr(Box<Stack>),
    Push(Box<Term>, Box<Stack>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Car(Box<Stack>),
    Abs(VarName, Box<Term>),
    App(Box<Term>, Box<Stack>),
}

/// Either sort of expression.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Expr {
    Term(Term),
    Stack(Stack),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Dialect {
    /// Bodies of abstractions are processes `M @ π`.
    Original,
    #[default]
    Extended,
}

impl Stack {
    pub fn var(name: impl Into<VarName>) -> Stack {
        Stack::Var(name.into())
    }

    pub fn push(head: Term, tail: Stack) -> Stack {
        Stack::Push(Box::new(head), Box::new(tail))
    }

    pub fn cdr(s: Stack) -> Stack {
        Stack::Cdr(Box::new(s))
    }

    pub fn cdr_n(mut s: Stack, k: usize) -> Stack {
        for _ in 0..k {
            s = Stack::cdr(s);
        }
        s
    }

    /// `t1 :: t2 :: ... :: tail`
    pub fn push_all(terms: impl IntoIterator<Item = Term>, tail: Stack) -> Stack {
        let terms: Vec<Term> = terms.into_iter().collect();
        terms
            .into_iter()
            .rev()
            .fold(tail, |acc, t| Stack::push(t, acc))
    }

    /// The canonical spine of this stack.
    pub fn spine(&self) -> Spine {
        let canon = self.canonical();
        let mut terms = Vec::new();
        let mut cur = canon;
        loop {
            match cur {
                Stack::Push(h, t) => {
                    terms.push(*h);
                    cur = *t;
                }
                other => {
                    let (cdrs, tail) = other.cdr_chain();
                    return Spine { terms, cdrs, tail };
                }
            }
        }
    }

    /// Splits `cdr^k(rest)`. Only meaningful on canonical stacks where the
    /// rest is a variable or nil.
    fn cdr_chain(&self) -> (usize, Tail) {
        let mut k = 0;
        let mut cur = self;
        while let Stack::Cdr(inner) = cur {
            k += 1;
            cur = inner;
        }
        match cur {
            Stack::Var(v) => (k, Tail::Var(v.clone())),
            Stack::Nil => (k, Tail::Nil),
            _ => unreachable!("cdr_chain on a non-canonical stack"),
        }
    }
}

/// Bottom of a canonical stack.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Tail {
    Var(VarName),
    Nil,
}

impl Tail {
    pub fn to_stack(&self) -> Stack {
        match self {
            Tail::Var(v) => Stack::Var(v.clone()),
            Tail::Nil => Stack::Nil,
        }
    }
}

/// Canonical stack `N1 :: ... :: Nm :: cdr^k(tail)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spine {
    pub terms: Vec<Term>,
    pub cdrs: usize,
    pub tail: Tail,
}

impl Spine {
    pub fn to_stack(&self) -> Stack {
        Stack::push_all(
            self.terms.iter().cloned(),
            Stack::cdr_n(self.tail.to_stack(), self.cdrs),
        )
    }

    pub fn is_nil_terminated(&self) -> bool {
        self.tail == Tail::Nil
    }
}

impl Term {
    pub fn car(s: Stack) -> Term {
        Term::Car(Box::new(s))
    }

    /// `car(cdr^n(s))`
    pub fn car_n(s: Stack, n: usize) -> Term {
        Term::car(Stack::cdr_n(s, n))
    }

    pub fn abs(binder: impl Into<VarName>, body: Term) -> Term {
        Term::Abs(binder.into(), Box::new(body))
    }

    pub fn app(fun: Term, arg: Stack) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    /// `bd x1. ... bd xk. body`
    pub fn abs_many(binders: impl IntoIterator<Item = VarName>, body: Term) -> Term {
        let binders: Vec<VarName> = binders.into_iter().collect();
        binders
            .into_iter()
            .rev()
            .fold(body, |acc, b| Term::abs(b, acc))
    }

    /// `fun @ s1 @ ... @ sm`, left-associated.
    pub fn apps(fun: Term, args: impl IntoIterator<Item = Stack>) -> Term {
        args.into_iter().fold(fun, Term::app)
    }

    /// Recognises a canonical head `car(cdr^n(tail))`.
    pub fn as_projection(&self) -> Option<(usize, Tail)> {
        match self {
            Term::Car(s) => {
                let mut k = 0;
                let mut cur: &Stack = s;
                while let Stack::Cdr(inner) = cur {
                    k += 1;
                    cur = inner;
                }
                match cur {
                    Stack::Var(v) => Some((k, Tail::Var(v.clone()))),
                    Stack::Nil => Some((k, Tail::Nil)),
                    _ => None,
                }
            }
            _ => None,
        }
    }
}

impl From<Term> for Expr {
    fn from(t: Term) -> Self {
        Expr::Term(t)
    }
}

impl From<Stack> for Expr {
    fn from(s: Stack) -> Self {
        Expr::Stack(s)
    }
}

impl Expr {
    pub fn as_term(&self) -> Option<&Term> {
        match self {
            Expr::Term(t) => Some(t),
            Expr::Stack(_) => None,
        }
    }

    pub fn as_stack(&self) -> Option<&Stack> {
        match self {
            Expr::Stack(s) => Some(s),
            Expr::Term(_) => None,
        }
    }

    pub fn into_term(self) -> Option<Term> {
        match self {
            Expr::Term(t) => Some(t),
            Expr::Stack(_) => None,
        }
    }

    pub fn into_stack(self) -> Option<Stack> {
        match self {
            Expr::Stack(s) => Some(s),
            Expr::Term(_) => None,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Expr::Term(t) => t.size(),
            Expr::Stack(s) => s.size(),
        }
    }
}

impl Term {
    /// Number of constructors.
    pub fn size(&self) -> usize {
        match self {
            Term::Car(s) => 1 + s.size(),
            Term::Abs(_, b) => 1 + b.size(),
            Term::App(f, s) => 1 + f.size() + s.size(),
        }
    }
}

impl Stack {
    pub fn size(&self) -> usize {
        match self {
            Stack::Nil | Stack::Var(_) => 1,
            Stack::Cdr(s) => 1 + s.size(),
            Stack::Push(h, t) => 1 + h.size() + t.size(),
        }
    }
}

// ---------------------------------------------------------------------------
// Variables

pub fn free_vars(e: &Expr) -> BTreeSet<VarName> {
    let mut out = BTreeSet::new();
    match e {
        Expr::Term(t) => t.collect_free(&mut Vec::new(), &mut out),
        Expr::Stack(s) => s.collect_free(&mut Vec::new(), &mut out),
    }
    out
}

impl Term {
    pub fn free_vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a VarName>, out: &mut BTreeSet<VarName>) {
        match self {
            Term::Car(s) => s.collect_free(bound, out),
            Term::Abs(b, body) => {
                bound.push(b);
                body.collect_free(bound, out);
                bound.pop();
            }
            Term::App(f, s) => {
                f.collect_free(bound, out);
                s.collect_free(bound, out);
            }
        }
    }

    pub fn has_free(&self, v: &VarName) -> bool {
        match self {
            Term::Car(s) => s.has_free(v),
            Term::Abs(b, body) => b != v && body.has_free(v),
            Term::App(f, s) => f.has_free(v) || s.has_free(v),
        }
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            Term::Car(s) => s.all_vars(out),
            Term::Abs(b, body) => {
                out.insert(b.clone());
                body.all_vars(out);
            }
            Term::App(f, s) => {
                f.all_vars(out);
                s.all_vars(out);
            }
        }
    }
}

impl Stack {
    pub fn free_vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a VarName>, out: &mut BTreeSet<VarName>) {
        match self {
            Stack::Nil => {}
            Stack::Var(v) => {
                if !bound.contains(&v) {
                    out.insert(v.clone());
                }
            }
            Stack::Cdr(s) => s.collect_free(bound, out),
            Stack::Push(h, t) => {
                h.collect_free(bound, out);
                t.collect_free(bound, out);
            }
        }
    }

    pub fn has_free(&self, v: &VarName) -> bool {
        match self {
            Stack::Nil => false,
            Stack::Var(w) => w == v,
            Stack::Cdr(s) => s.has_free(v),
            Stack::Push(h, t) => h.has_free(v) || t.has_free(v),
        }
    }

    pub fn all_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            Stack::Nil => {}
            Stack::Var(v) => {
                out.insert(v.clone());
            }
            Stack::Cdr(s) => s.all_vars(out),
            Stack::Push(h, t) => {
                h.all_vars(out);
                t.all_vars(out);
            }
        }
    }
}

impl Expr {
    pub fn all_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            Expr::Term(t) => t.all_vars(out),
            Expr::Stack(s) => s.all_vars(out),
        }
    }
}

/// Supply of fresh names for capture avoidance.
///
/// A name issued for base `b` always has an index above every reserved
/// index of `b`, so output is deterministic given the reserved set.
#[derive(Clone, Debug, Default)]
pub struct FreshSession {
    counter: u64,
    reserved: BTreeSet<VarName>,
}

impl FreshSession {
    pub fn new() -> Self {
        Self::default()
    }

    /// A session that already avoids every name of the given expressions.
    pub fn avoiding<'a>(exprs: impl IntoIterator<Item = &'a Expr>) -> Self {
        let mut s = Self::new();
        for e in exprs {
            e.all_vars(&mut s.reserved);
        }
        s
    }

    pub fn reserve(&mut self, v: VarName) {
        self.reserved.insert(v);
    }

    pub fn reserve_term(&mut self, t: &Term) {
        t.all_vars(&mut self.reserved);
    }

    pub fn reserve_stack(&mut self, s: &Stack) {
        s.all_vars(&mut self.reserved);
    }

    pub fn is_reserved(&self, v: &VarName) -> bool {
        self.reserved.contains(v)
    }

    /// Number of names issued so far.
    pub fn issued(&self) -> u64 {
        self.counter
    }

    pub fn fresh(&mut self, base: &str) -> VarName {
        let lo = VarName::new(base, 0);
        let hi = VarName::new(base, u32::MAX);
        let next = self
            .reserved
            .range(lo..=hi)
            .next_back()
            .map_or(1, |v| v.index + 1);
        let v = VarName::new(base, next);
        self.reserved.insert(v.clone());
        self.counter += 1;
        v
    }

    /// A base that occurs in no reserved name, derived from `hint`.
    pub fn fresh_base(&mut self, hint: &str) -> String {
        let mut base = hint.to_string();
        while self.reserved.iter().any(|v| *v.base == *base) {
            base.push('_');
        }
        // Mark the base as taken.
        self.reserved.insert(VarName::new(&base, 0));
        base
    }
}

// ---------------------------------------------------------------------------
// Substitution

struct Subst<'a> {
    pi: &'a Stack,
    alpha: &'a VarName,
    fv_pi: BTreeSet<VarName>,
    session: &'a mut FreshSession,
}

impl Subst<'_> {
    fn term(&mut self, t: &Term) -> Term {
        match t {
            Term::Car(s) => Term::car(self.stack(s)),
            Term::App(f, s) => Term::app(self.term(f), self.stack(s)),
            Term::Abs(b, body) => {
                if b == self.alpha {
                    return t.clone();
                }
                if self.fv_pi.contains(b) && body.has_free(self.alpha) {
                    let nb = self.session.fresh(b.base());
                    let renamed = body.rename_free(b, &nb);
                    Term::abs(nb, self.term(&renamed))
                } else {
                    Term::abs(b.clone(), self.term(body))
                }
            }
        }
    }

    fn stack(&mut self, s: &Stack) -> Stack {
        match s {
            Stack::Nil => Stack::Nil,
            Stack::Var(v) if v == self.alpha => self.pi.clone(),
            Stack::Var(_) => s.clone(),
            Stack::Cdr(inner) => Stack::cdr(self.stack(inner)),
            Stack::Push(h, t) => Stack::push(self.term(h), self.stack(t)),
        }
    }
}

/// Capture-avoiding substitution `e[pi/alpha]`.
pub fn substitute(e: &Expr, pi: &Stack, alpha: &VarName, session: &mut FreshSession) -> Expr {
    e.all_vars(&mut session.reserved);
    pi.all_vars(&mut session.reserved);
    let mut sub = Subst {
        pi,
        alpha,
        fv_pi: pi.free_vars(),
        session,
    };
    match e {
        Expr::Term(t) => Expr::Term(sub.term(t)),
        Expr::Stack(s) => Expr::Stack(sub.stack(s)),
    }
}

// Renaming is only possible when some binder is free in the substituted
// stack; skip collecting the reserved names otherwise.
fn term_binds_any(t: &Term, names: &BTreeSet<VarName>) -> bool {
    if names.is_empty() {
        return false;
    }
    match t {
        Term::Car(s) => stack_binds_any(s, names),
        Term::Abs(b, body) => names.contains(b) || term_binds_any(body, names),
        Term::App(f, s) => term_binds_any(f, names) || stack_binds_any(s, names),
    }
}

fn stack_binds_any(s: &Stack, names: &BTreeSet<VarName>) -> bool {
    match s {
        Stack::Nil | Stack::Var(_) => false,
        Stack::Cdr(inner) => stack_binds_any(inner, names),
        Stack::Push(h, t) => term_binds_any(h, names) || stack_binds_any(t, names),
    }
}

impl Term {
    /// `self[pi/alpha]` with a private fresh session.
    pub fn subst(&self, pi: &Stack, alpha: &VarName) -> Term {
        if !self.has_free(alpha) {
            return self.clone();
        }
        let fv_pi = pi.free_vars();
        let mut session = FreshSession::new();
        if term_binds_any(self, &fv_pi) {
            self.all_vars(&mut session.reserved);
            pi.all_vars(&mut session.reserved);
        }
        Subst {
            pi,
            alpha,
            fv_pi,
            session: &mut session,
        }
        .term(self)
    }

    /// Renames free occurrences of `from` to `to`; `to` must not occur in
    /// `self`.
    pub(crate) fn rename_free(&self, from: &VarName, to: &VarName) -> Term {
        match self {
            Term::Car(s) => Term::car(s.rename_free(from, to)),
            Term::App(f, s) => Term::app(f.rename_free(from, to), s.rename_free(from, to)),
            Term::Abs(b, body) if b == from => self.clone(),
            Term::Abs(b, body) => Term::abs(b.clone(), body.rename_free(from, to)),
        }
    }
}

impl Stack {
    pub fn subst(&self, pi: &Stack, alpha: &VarName) -> Stack {
        if !self.has_free(alpha) {
            return self.clone();
        }
        let fv_pi = pi.free_vars();
        let mut session = FreshSession::new();
        if stack_binds_any(self, &fv_pi) {
            self.all_vars(&mut session.reserved);
            pi.all_vars(&mut session.reserved);
        }
        Subst {
            pi,
            alpha,
            fv_pi,
            session: &mut session,
        }
        .stack(self)
    }

    pub(crate) fn rename_free(&self, from: &VarName, to: &VarName) -> Stack {
        match self {
            Stack::Nil => Stack::Nil,
            Stack::Var(v) if v == from => Stack::Var(to.clone()),
            Stack::Var(_) => self.clone(),
            Stack::Cdr(s) => Stack::cdr(s.rename_free(from, to)),
            Stack::Push(h, t) => Stack::push(h.rename_free(from, to), t.rename_free(from, to)),
        }
    }
}

// ---------------------------------------------------------------------------
// Alpha equivalence

pub fn alpha_eq(e1: &Expr, e2: &Expr) -> bool {
    match (e1, e2) {
        (Expr::Term(a), Expr::Term(b)) => a.alpha_eq(b),
        (Expr::Stack(a), Expr::Stack(b)) => a.alpha_eq(b),
        _ => false,
    }
}

type Env<'a> = Vec<(&'a VarName, &'a VarName)>;

fn var_eq(env: &Env<'_>, a: &VarName, b: &VarName) -> bool {
    let left = env.iter().rposition(|(x, _)| *x == a);
    let right = env.iter().rposition(|(_, y)| *y == b);
    match (left, right) {
        (None, None) => a == b,
        (Some(i), Some(j)) => i == j,
        _ => false,
    }
}

fn term_alpha<'a>(env: &mut Env<'a>, a: &'a Term, b: &'a Term) -> bool {
    match (a, b) {
        (Term::Car(s), Term::Car(t)) => stack_alpha(env, s, t),
        (Term::App(f, s), Term::App(g, t)) => term_alpha(env, f, g) && stack_alpha(env, s, t),
        (Term::Abs(x, m), Term::Abs(y, n)) => {
            env.push((x, y));
            let r = term_alpha(env, m, n);
            env.pop();
            r
        }
        _ => false,
    }
}

fn stack_alpha<'a>(env: &mut Env<'a>, a: &'a Stack, b: &'a Stack) -> bool {
    match (a, b) {
        (Stack::Nil, Stack::Nil) => true,
        (Stack::Var(x), Stack::Var(y)) => var_eq(env, x, y),
        (Stack::Cdr(s), Stack::Cdr(t)) => stack_alpha(env, s, t),
        (Stack::Push(h, s), Stack::Push(g, t)) => term_alpha(env, h, g) && stack_alpha(env, s, t),
        _ => false,
    }
}

impl Term {
    pub fn alpha_eq(&self, other: &Term) -> bool {
        term_alpha(&mut Vec::new(), self, other)
    }
}

impl Stack {
    pub fn alpha_eq(&self, other: &Stack) -> bool {
        stack_alpha(&mut Vec::new(), self, other)
    }
}

/// A string that is equal for two expressions iff they are alpha-equal.
/// Bound variables are written as de Bruijn levels.
pub fn alpha_key(e: &Expr) -> String {
    let mut out = String::new();
    let mut env = Vec::new();
    match e {
        Expr::Term(t) => key_term(t, &mut env, &mut out),
        Expr::Stack(s) => {
            out.push('S');
            key_stack(s, &mut env, &mut out)
        }
    }
    out
}

fn key_term<'a>(t: &'a Term, env: &mut Vec<&'a VarName>, out: &mut String) {
    match t {
        Term::Car(s) => {
            out.push('c');
            key_stack(s, env, out);
        }
        Term::Abs(b, body) => {
            out.push('\\');
            env.push(b);
            key_term(body, env, out);
            env.pop();
        }
        Term::App(f, s) => {
            out.push('@');
            key_term(f, env, out);
            key_stack(s, env, out);
        }
    }
}

fn key_stack<'a>(s: &'a Stack, env: &mut Vec<&'a VarName>, out: &mut String) {
    use std::fmt::Write;
    match s {
        Stack::Nil => out.push('n'),
        Stack::Var(v) => match env.iter().rposition(|x| *x == v) {
            Some(i) => {
                let _ = write!(out, "#{i};");
            }
            None => {
                let _ = write!(out, "${v};");
            }
        },
        Stack::Cdr(inner) => {
            out.push('d');
            key_stack(inner, env, out);
        }
        Stack::Push(h, t) => {
            out.push(':');
            key_term(h, env, out);
            key_stack(t, env, out);
        }
    }
}

// ---------------------------------------------------------------------------
// Canonical (car/cdr-normal) form

pub fn canonical_form(e: &Expr) -> Expr {
    match e {
        Expr::Term(t) => Expr::Term(t.canonical()),
        Expr::Stack(s) => Expr::Stack(s.canonical()),
    }
}

impl Term {
    pub fn canonical(&self) -> Term {
        match self {
            Term::Car(s) => match s.canonical() {
                Stack::Push(h, _) => *h,
                other => Term::car(other),
            },
            Term::Abs(b, body) => Term::abs(b.clone(), body.canonical()),
            Term::App(f, s) => Term::app(f.canonical(), s.canonical()),
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            Term::Car(s) => !matches!(**s, Stack::Push(..)) && s.is_canonical(),
            Term::Abs(_, body) => body.is_canonical(),
            Term::App(f, s) => f.is_canonical() && s.is_canonical(),
        }
    }
}

impl Stack {
    pub fn canonical(&self) -> Stack {
        match self {
            Stack::Nil | Stack::Var(_) => self.clone(),
            Stack::Cdr(s) => match s.canonical() {
                Stack::Push(_, t) => *t,
                other => Stack::cdr(other),
            },
            Stack::Push(h, t) => Stack::push(h.canonical(), t.canonical()),
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            Stack::Nil | Stack::Var(_) => true,
            Stack::Cdr(s) => !matches!(**s, Stack::Push(..)) && s.is_canonical(),
            Stack::Push(h, t) => h.is_canonical() && t.is_canonical(),
        }
    }
}

// ---------------------------------------------------------------------------
// Dialects

impl Dialect {
    /// Whether `t` is a term of this dialect. Every term is Extended-valid.
    pub fn accepts_term(self, t: &Term) -> bool {
        match self {
            Dialect::Extended => true,
            Dialect::Original => original_term(t),
        }
    }

    /// Terms and processes (`M @ π` with `M` a term) of this dialect.
    pub fn accepts_expr(self, e: &Expr) -> bool {
        match self {
            Dialect::Extended => true,
            Dialect::Original => match e {
                Expr::Term(t) => original_term(t) || original_process(t),
                Expr::Stack(s) => original_stack(s),
            },
        }
    }
}

fn original_term(t: &Term) -> bool {
    match t {
        Term::Car(s) => original_stack(s),
        Term::Abs(_, body) => original_process(body),
        Term::App(..) => false,
    }
}

fn original_process(t: &Term) -> bool {
    match t {
        Term::App(f, s) => original_term(f) && original_stack(s),
        _ => false,
    }
}

fn original_stack(s: &Stack) -> bool {
    match s {
        Stack::Nil | Stack::Var(_) => true,
        Stack::Cdr(inner) => original_stack(inner),
        Stack::Push(h, t) => original_term(h) && original_stack(t),
    }
}
