//! Separation: Böhm-out contexts and T/F separating contexts.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::bohm::{bounded_metrics, rename_binders, Navigator, NodePath, SimVerdict};
use crate::check::verify_certificate;
use crate::constants::{false_term, identity, true_term};
use crate::context::{Certificate, CertificateKind, Frame, HeadContext};
use crate::strategy::{head_normalize, Head, HnfView, StrategyResult};
use crate::syntax::{Dialect, FreshSession, Spine, Stack, Tail, Term, VarName};

pub use crate::constants::permutator;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparationError {
    #[error("term is not of the form bd a. car^n(b) @ pi")]
    NotSingleShape,
    #[error("no proper head normal form within fuel")]
    NoProperHnf,
    #[error("path is not in the bounded domain")]
    PathNotInDomain,
    #[error("bounds too small: need q >= {breadth} and p > {weight}")]
    BoundsTooSmall { breadth: usize, weight: usize },
    #[error("tree exploration ran out of fuel")]
    Unresolved,
    #[error("constructed context failed verification")]
    VerificationFailed,
}

/// `spt_q :: ... :: spt_q :: eps`, with `p` copies.
pub fn perm_stack(eps: &VarName, q: usize, p: usize) -> Stack {
    Stack::push_all(
        std::iter::repeat_n(permutator(q), p),
        Stack::Var(eps.clone()),
    )
}

fn session_for(terms: &[&Term]) -> FreshSession {
    let mut s = FreshSession::new();
    for t in terms {
        s.reserve_term(t);
    }
    s
}

/// `bd d1 ... dn. body`
fn eater(s: &mut FreshSession, n: usize, body: Term) -> Term {
    let ds: Vec<VarName> = (0..n).map(|_| s.fresh("d")).collect();
    Term::abs_many(ds, body)
}

/// Applies `α1 ... αn` innermost-first, listed outside-in.
fn apply_vars(vars: &[VarName]) -> Vec<Frame> {
    vars.iter()
        .rev()
        .map(|a| Frame::Apply(Stack::Var(a.clone())))
        .collect()
}

/// A stack of identities with `T`/`F` eaters at chosen positions.
fn selector_stack(slots: &[(usize, Term)], tail: Stack) -> Stack {
    let len = slots.iter().map(|(i, _)| i + 1).max().unwrap_or(0);
    let mut terms = vec![identity(); len];
    for (i, t) in slots {
        terms[*i] = t.clone();
    }
    Stack::push_all(terms, tail)
}

fn finish(
    mut frames: Vec<Frame>,
    flipped: bool,
    mut log: Vec<String>,
    s: &mut FreshSession,
    m: &Term,
    n: &Term,
    fuel: usize,
) -> Result<Certificate, SeparationError> {
    if flipped {
        log.push("negate".into());
        let mut neg = HeadContext::negation(s.fresh("e")).frames;
        neg.append(&mut frames);
        frames = neg;
    }
    let mut cert = Certificate::separation(HeadContext::new(frames), log, fuel);
    if !verify_certificate(&cert, m, n, fuel) {
        return Err(SeparationError::VerificationFailed);
    }
    cert.verified = true;
    Ok(cert)
}

// ---------------------------------------------------------------------------
// Single-binder, single-stack terms

struct SingleView {
    head: VarName,
    index: usize,
    spine: Spine,
}

fn single_view(t: &Term, alpha: &VarName, fuel: usize) -> Result<SingleView, SeparationError> {
    let v = match head_normalize(t, fuel) {
        StrategyResult::Found(v) => v,
        _ => return Err(SeparationError::NoProperHnf),
    };
    if v.binders.len() != 1 || v.args.len() != 1 {
        return Err(SeparationError::NotSingleShape);
    }
    let v = rename_binders(v, |_| alpha.clone());
    let Head::Proper(head, index) = v.head else {
        return Err(SeparationError::NoProperHnf);
    };
    Ok(SingleView {
        head,
        index,
        spine: v.args[0].spine(),
    })
}

type Built = Option<(Vec<Frame>, bool)>;

/// Frames outside-in, plus whether the context sends `m` to `F`.
fn single_rec(
    m: &Term,
    n: &Term,
    s: &mut FreshSession,
    log: &mut Vec<String>,
    fuel: usize,
    budget: usize,
) -> Result<Built, SeparationError> {
    if budget == 0 {
        return Err(SeparationError::NotSingleShape);
    }
    let alpha = s.fresh("a");
    let a = single_view(m, &alpha, fuel)?;
    let b = single_view(n, &alpha, fuel)?;
    let swapped = |s: &mut FreshSession, log: &mut Vec<String>| -> Result<Built, SeparationError> {
        log.push("swap".into());
        Ok(single_rec(n, m, s, log, fuel, budget - 1)?.map(|(f, flip)| (f, !flip)))
    };

    if a.head != b.head {
        log.push("single:1".into());
        let eps = s.fresh("e");
        let eat = |s: &mut FreshSession, body: Term| {
            eater(s, 1, Term::app(body, Stack::Var(eps.clone())))
        };
        let pi_t = selector_stack(&[(a.index, eat(s, true_term()))], Stack::Var(eps.clone()));
        let pi_f = selector_stack(&[(b.index, eat(s, false_term()))], Stack::Var(eps.clone()));
        let frames = vec![
            Frame::Bind(eps.clone()),
            Frame::Apply(pi_f),
            Frame::Bind(b.head),
            Frame::Apply(pi_t),
            Frame::Bind(a.head),
            Frame::Apply(Stack::Var(alpha)),
        ];
        return Ok(Some((frames, false)));
    }
    let beta = a.head.clone();
    if a.index != b.index {
        log.push("single:2".into());
        let eps = s.fresh("e");
        let t = eater(s, 1, Term::app(true_term(), Stack::Var(eps.clone())));
        let f = eater(s, 1, Term::app(false_term(), Stack::Var(eps.clone())));
        let pi = selector_stack(&[(a.index, t), (b.index, f)], Stack::Var(eps.clone()));
        let frames = vec![
            Frame::Bind(eps),
            Frame::Apply(pi),
            Frame::Bind(beta),
            Frame::Apply(Stack::Var(alpha)),
        ];
        return Ok(Some((frames, false)));
    }
    let (Tail::Var(gamma), Tail::Var(gamma2)) = (&a.spine.tail, &b.spine.tail) else {
        return Ok(None);
    };
    let (m1, k1) = (a.spine.terms.len(), a.spine.cdrs);
    let (m2, k2) = (b.spine.terms.len(), b.spine.cdrs);
    // Re-dispatch after pre-context `bd α. (bd v. [·] @ α) @ pi`.
    let redispatch = |v: &VarName,
                      pi: Stack,
                      s: &mut FreshSession,
                      log: &mut Vec<String>|
     -> Result<Built, SeparationError> {
        let pre = vec![
            Frame::Bind(alpha.clone()),
            Frame::Apply(pi),
            Frame::Bind(v.clone()),
            Frame::Apply(Stack::Var(alpha.clone())),
        ];
        let c = HeadContext::new(pre.clone());
        let built = single_rec(&c.plug(m), &c.plug(n), s, log, fuel, budget - 1)?;
        Ok(built.map(|(mut f, flip)| {
            f.extend(pre);
            (f, flip)
        }))
    };
    if gamma != gamma2 {
        if *gamma != beta {
            if *gamma2 == beta {
                return swapped(s, log);
            }
            log.push("single:3.1.1".into());
            return redispatch(gamma, Stack::Var(beta.clone()), s, log);
        }
        log.push("single:3.1.2".into());
        let pi = Stack::cdr_n(Stack::Var(beta.clone()), m2 + m1 + k1 + 1);
        return redispatch(gamma2, pi, s, log);
    }
    if k1 as i64 - m1 as i64 == k2 as i64 - m2 as i64 {
        return Ok(None);
    }
    if *gamma != beta {
        log.push("single:3.2.1".into());
        return redispatch(gamma, Stack::Var(beta.clone()), s, log);
    }
    if m1 < m2 {
        return swapped(s, log);
    }
    log.push("single:3.2.2".into());
    let dm = m1 - m2;
    let maxk = k1.max(k2);
    let x = if k1 < k2 { 0 } else { k1.abs_diff(k2).min(dm) };
    let count_m = dm + maxk - k1;
    let eps = s.fresh("e");
    let eps_s = Stack::Var(eps.clone());
    let d_inner = s.fresh("d");
    let inner = Term::abs(
        d_inner.clone(),
        Term::app(
            Term::car_n(Stack::Var(d_inner), x),
            Stack::cdr_n(eps_s.clone(), 2),
        ),
    );
    let d_outer = s.fresh("d");
    let chooser = Term::abs(
        d_outer.clone(),
        Term::app(inner, Stack::cdr_n(Stack::Var(d_outer), a.index + 1 + m1)),
    );
    let mut terms = vec![identity(); a.index];
    terms.push(chooser);
    terms.extend(std::iter::repeat_n(Term::car(Stack::cdr(eps_s.clone())), dm + maxk));
    terms.push(Term::car(eps_s.clone()));
    let pi = Stack::push_all(terms, eps_s);
    let frames = vec![
        Frame::Bind(eps),
        Frame::Apply(pi),
        Frame::Bind(beta),
        Frame::Apply(Stack::Var(alpha)),
    ];
    Ok(Some((frames, x != count_m)))
}

/// Separates `bd α. car^n(β) @ π` from `bd α'. car^n'(β') @ π'` when they
/// are dissimilar. `None` means the pair is similar.
pub fn separate_single(m: &Term, n: &Term, fuel: usize) -> Result<Option<Certificate>, SeparationError> {
    let mut s = session_for(&[m, n]);
    let mut log = Vec::new();
    match single_rec(m, n, &mut s, &mut log, fuel, 8)? {
        None => Ok(None),
        Some((frames, flip)) => finish(frames, flip, log, &mut s, m, n, fuel).map(Some),
    }
}

// ---------------------------------------------------------------------------
// General proper head normal forms

fn general_frames(
    m: &Term,
    n: &Term,
    s: &mut FreshSession,
    log: &mut Vec<String>,
    fuel: usize,
) -> Result<Built, SeparationError> {
    let (a, b) = match (head_normalize(m, fuel), head_normalize(n, fuel)) {
        (StrategyResult::Found(a), StrategyResult::Found(b)) => (a, b),
        _ => return Err(SeparationError::NoProperHnf),
    };
    let kk = a.binders.len().max(b.binders.len());
    let alphas: Vec<VarName> = (0..kk).map(|_| s.fresh("a")).collect();
    let a = rename_binders(a, |i| alphas[i - 1].clone());
    let b = rename_binders(b, |i| alphas[i - 1].clone());
    let reason = match crate::bohm::views_similar(&a, &b) {
        SimVerdict::Dissimilar { reason, .. } => reason,
        _ => return Ok(None),
    };
    let (Head::Proper(beta, h), Head::Proper(beta2, h2)) = (a.head.clone(), b.head.clone()) else {
        unreachable!()
    };
    let p_m = a.args.len() + kk - a.binders.len();
    let p_n = b.args.len() + kk - b.binders.len();
    let eps = s.fresh("e");
    let eps_s = Stack::Var(eps.clone());

    if reason == "head-variable" || reason == "head-index" {
        let t = eater(s, p_m, true_term());
        let f = eater(s, p_n, false_term());
        let mut frames = if reason == "head-variable" {
            log.push("general:1".into());
            vec![
                Frame::Apply(selector_stack(&[(h2, f)], eps_s.clone())),
                Frame::Apply(selector_stack(&[(h, t)], eps_s)),
                Frame::Bind(beta),
                Frame::Bind(beta2),
            ]
        } else {
            log.push("general:2".into());
            vec![
                Frame::Apply(selector_stack(&[(h, t), (h2, f)], eps_s)),
                Frame::Bind(beta),
            ]
        };
        frames.extend(apply_vars(&alphas));
        return Ok(Some((frames, false)));
    }

    if reason == "arity" {
        log.push("general:3".into());
        let p = p_m.max(p_n);
        let gap = p_m.abs_diff(p_n);
        let xs: Vec<VarName> = (0..=p).map(|_| s.fresh("x")).collect();
        let last = xs[p].clone();
        let pick_last = Term::abs_many(xs, Term::car(Stack::Var(last)));
        let pi = selector_stack(&[(h, pick_last)], eps_s.clone());
        let delta = s.fresh("d");
        let extra: Vec<VarName> = (0..gap).map(|_| s.fresh("e")).collect();
        let yes = eater(s, gap, true_term());
        let mut frames = vec![
            Frame::Apply(Stack::push(false_term(), eps_s.clone())),
            Frame::Apply(Stack::push(yes, eps_s)),
            Frame::Bind(delta.clone()),
            Frame::Bind(extra[gap - 1].clone()),
            Frame::Apply(pi),
            Frame::Bind(beta),
        ];
        let mut applied = alphas.clone();
        applied.push(delta);
        applied.extend(extra);
        frames.extend(apply_vars(&applied));
        return Ok(Some((frames, p_n > p_m)));
    }

    // A pair of dissimilar argument stacks at position `idx`.
    let idx = if let Some(i) = reason.strip_prefix("stack:") {
        log.push("general:4".into());
        i.parse::<usize>().unwrap()
    } else if let Some(j) = reason.strip_prefix("surplus:") {
        log.push("general:5".into());
        let short_m = if b.binders.len() > a.binders.len() {
            a.args.len()
        } else {
            b.args.len()
        };
        short_m + j.parse::<usize>().unwrap()
    } else {
        unreachable!("unexpected dissimilarity {reason}")
    };
    let xs: Vec<VarName> = (0..p_m).map(|_| s.fresh("x")).collect();
    let b2 = s.fresh("b");
    let pick = Term::abs_many(
        xs.iter().cloned().chain([b2.clone()]),
        Term::app(Term::car(Stack::Var(b2)), Stack::Var(xs[idx - 1].clone())),
    );
    let mut pre = vec![
        Frame::Apply(selector_stack(&[(h, pick)], eps_s)),
        Frame::Bind(beta),
    ];
    pre.extend(apply_vars(&alphas));
    let c = HeadContext::new(pre.clone());
    let built = single_rec(&c.plug(m), &c.plug(n), s, log, fuel, 8)?;
    match built {
        Some((mut f, flip)) => {
            f.extend(pre);
            Ok(Some((f, flip)))
        }
        None => Ok(None),
    }
}

/// Separates two terms with proper hnfs that are dissimilar at the root.
/// `None` means the root hnfs are similar.
pub fn separate_general(m: &Term, n: &Term, fuel: usize) -> Result<Option<Certificate>, SeparationError> {
    let mut s = session_for(&[m, n]);
    let mut log = Vec::new();
    match general_frames(m, n, &mut s, &mut log, fuel)? {
        None => Ok(None),
        Some((frames, flip)) => finish(frames, flip, log, &mut s, m, n, fuel).map(Some),
    }
}

// ---------------------------------------------------------------------------
// Böhm-out along a path

#[derive(Clone, Debug)]
pub struct BohmOut {
    pub context: HeadContext,
    /// `(β, sps)` in order of introduction.
    pub substitutions: Vec<(VarName, Stack)>,
    /// The node at the path, binders named as by [`Navigator`].
    pub node: Term,
}

impl BohmOut {
    /// The node with every substitution applied; `context[m]` converts to it.
    pub fn substituted_node(&self) -> Term {
        self.substitutions
            .iter()
            .fold(self.node.clone(), |t, (b, pi)| t.subst(pi, b))
    }
}

/// Extracts the node of `m` at `sigma` with permutator stacks
/// `sps_{q,p}`. Requires `q` at least the bounded breadth and `p` above the
/// bounded weight of the depth-`depth` tree.
pub fn bohm_out(
    m: &Term,
    depth: usize,
    sigma: &NodePath,
    q: usize,
    p: usize,
    fuel: usize,
) -> Result<BohmOut, SeparationError> {
    if sigma.len() > depth {
        return Err(SeparationError::PathNotInDomain);
    }
    let metrics = bounded_metrics(m, depth, fuel);
    if !metrics.exact {
        return Err(SeparationError::Unresolved);
    }
    if q < metrics.bounded_breadth || p <= metrics.bounded_weight {
        return Err(SeparationError::BoundsTooSmall {
            breadth: metrics.bounded_breadth,
            weight: metrics.bounded_weight,
        });
    }
    let nav = Navigator::new([m], fuel);
    let node = nav
        .real_node(m, sigma)
        .defined()
        .ok_or(SeparationError::PathNotInDomain)?;
    let mut s = session_for(&[m]);
    let mut frames: Vec<Frame> = Vec::new();
    let mut substitutions = Vec::new();
    let mut replaced: BTreeSet<VarName> = BTreeSet::new();
    let mut cur = m.clone();
    for (depth, &(j, jp)) in sigma.0.iter().enumerate() {
        let view = match nav.hnf(&cur, depth).0 {
            StrategyResult::Found(v) => v,
            _ => return Err(SeparationError::PathNotInDomain),
        };
        let beta = view.head.var().unwrap().clone();
        let eps = s.fresh("e");
        let sps = perm_stack(&eps, q, p);
        let mut args: Vec<VarName> = view.binders.clone();
        let mut c1: Vec<Frame> = Vec::new();
        let mut sps_slot = None;
        if let Some(r) = view.binders.iter().rposition(|b| *b == beta) {
            sps_slot = Some(r);
            substitutions.push((beta.clone(), sps.clone()));
            replaced.insert(beta.clone());
        } else if !replaced.contains(&beta) {
            c1.push(Frame::Apply(sps.clone()));
            c1.push(Frame::Bind(beta.clone()));
            substitutions.push((beta.clone(), sps.clone()));
            replaced.insert(beta.clone());
        }
        let mut applied: Vec<Frame> = args
            .drain(..)
            .enumerate()
            .map(|(i, a)| {
                if Some(i) == sps_slot {
                    Frame::Apply(sps.clone())
                } else {
                    Frame::Apply(Stack::Var(a))
                }
            })
            .collect();
        applied.reverse();
        c1.extend(applied);

        let xs: Vec<VarName> = (0..q).map(|_| s.fresh("x")).collect();
        let sel = Term::abs_many(
            xs.clone(),
            Term::car_n(Stack::Var(xs[j - 1].clone()), jp - 1),
        );
        let mut c2 = vec![Frame::Apply(Stack::push(sel, Stack::Var(eps.clone())))];
        let pads: Vec<VarName> = (view.args.len()..q).map(|_| s.fresh("e")).collect();
        c2.extend(apply_vars(&pads));

        c2.extend(c1);
        c2.append(&mut frames);
        frames = c2;
        cur = nav
            .child(&view, depth, j, jp)
            .defined()
            .ok_or(SeparationError::PathNotInDomain)?;
    }
    Ok(BohmOut {
        context: HeadContext::new(frames),
        substitutions,
        node,
    })
}

// ---------------------------------------------------------------------------
// Top level

#[derive(Clone, Debug)]
pub enum Separation {
    Separated {
        cert: Certificate,
        path: NodePath,
        reason: String,
    },
    NoneFound,
    Unknown(String),
}

struct PathBounds {
    q0: usize,
    p: usize,
}

fn path_bounds(nav: &Navigator, terms: [&Term; 2], sigma: &NodePath) -> PathBounds {
    let (mut t, mut m, mut w) = (0, 0, 0);
    for term in terms {
        for len in 0..=sigma.len() {
            let Some(node) = nav.node(term, &sigma.prefix(len)).defined() else {
                continue;
            };
            if let StrategyResult::Found(v) = nav.hnf(&node, len).0 {
                t = t.max(v.binders.len());
                m = m.max(v.args.len());
                w = w.max(v.head.index());
            }
        }
    }
    let j = sigma.0.iter().map(|&(j, _)| j).max().unwrap_or(0);
    PathBounds {
        q0: 3 * (t + m + j + 2),
        p: w + 1,
    }
}

fn align(a: HnfView, b: HnfView, s: &mut FreshSession) -> (HnfView, HnfView, Vec<VarName>) {
    let kk = a.binders.len().max(b.binders.len());
    let alphas: Vec<VarName> = (0..kk).map(|_| s.fresh("a")).collect();
    let a = rename_binders(a, |i| alphas[i - 1].clone());
    let b = rename_binders(b, |i| alphas[i - 1].clone());
    (a, b, alphas)
}

/// Arguments of an aligned hnf, padded with the unused binder names.
fn padded_args(v: &HnfView, alphas: &[VarName]) -> Vec<Stack> {
    let mut args = v.args.clone();
    args.extend(alphas[v.binders.len()..].iter().map(|a| Stack::Var(a.clone())));
    args
}

/// Searches the two trees up to `depth` for a dissimilar node and builds a
/// context separating `m` from `n` there.
///
/// Along the path, each head variable is replaced by a stack of permutators
/// whose arities differ per step and per head index, so that the two
/// projections of distinct heads stay apart once the path is followed.
pub fn separate(m: &Term, n: &Term, depth: usize, fuel: usize, dialect: Dialect) -> Separation {
    if !dialect.accepts_term(m) || !dialect.accepts_term(n) {
        return Separation::Unknown("input outside the dialect".into());
    }
    let nav = Navigator::new([m, n], fuel);
    let (path, reason) = match nav.sim_bounded(m, n, depth) {
        SimVerdict::Similar => return Separation::NoneFound,
        SimVerdict::Unknown(side) => return Separation::Unknown(format!("fuel exhausted ({side:?})")),
        SimVerdict::Dissimilar { path, reason } => (path, reason),
    };
    match build_along(&nav, m, n, &path, fuel) {
        Ok(Some(cert)) => {
            if dialect == Dialect::Original && !cert.context.is_original() {
                return Separation::NoneFound;
            }
            Separation::Separated { cert, path, reason }
        }
        Ok(None) => Separation::Unknown("construction lost the dissimilarity".into()),
        Err(e) => Separation::Unknown(e.to_string()),
    }
}

fn build_along(
    nav: &Navigator,
    m: &Term,
    n: &Term,
    sigma: &NodePath,
    fuel: usize,
) -> Result<Option<Certificate>, SeparationError> {
    let bounds = path_bounds(nav, [m, n], sigma);
    let mut s = session_for(&[m, n]);
    let mut frames: Vec<Frame> = Vec::new();
    let mut log = Vec::new();
    let (mut cur_m, mut cur_n) = (m.clone(), n.clone());
    for (l, &(j, jp)) in sigma.0.iter().enumerate() {
        let (a, b) = match (head_normalize(&cur_m, fuel), head_normalize(&cur_n, fuel)) {
            (StrategyResult::Found(a), StrategyResult::Found(b)) => (a, b),
            _ => return Err(SeparationError::NoProperHnf),
        };
        let (a, b, alphas) = align(a, b, &mut s);
        let (beta, h) = match (&a.head, &b.head) {
            (Head::Proper(x, h), Head::Proper(y, h2)) if x == y && h == h2 => (x.clone(), *h),
            _ => return Ok(None),
        };
        let args_m = padded_args(&a, &alphas);
        let args_n = padded_args(&b, &alphas);
        let pt = args_m.len();
        let arity = |i: usize| bounds.q0 * (1 + l * bounds.p + i);
        let q = arity(h);
        if pt > q || j > q {
            return Err(SeparationError::BoundsTooSmall {
                breadth: pt.max(j),
                weight: h,
            });
        }
        let eps = s.fresh("e");
        let stack = Stack::push_all((0..bounds.p).map(|i| permutator(arity(i))), Stack::Var(eps.clone()));

        let mut step: Vec<Frame> = Vec::new();
        let xs: Vec<VarName> = (0..q).map(|_| s.fresh("x")).collect();
        let sel = Term::abs_many(
            xs.clone(),
            Term::car_n(Stack::Var(xs[j - 1].clone()), jp - 1),
        );
        step.push(Frame::Apply(Stack::push(sel, Stack::Var(eps.clone()))));
        let pads: Vec<VarName> = (pt..q).map(|_| s.fresh("e")).collect();
        step.extend(apply_vars(&pads));
        if let Some(r) = alphas.iter().position(|x| *x == beta) {
            log.push(format!("path:{l}:bound"));
            for (i, x) in alphas.iter().enumerate().rev() {
                step.push(Frame::Apply(if i == r {
                    stack.clone()
                } else {
                    Stack::Var(x.clone())
                }));
            }
        } else {
            log.push(format!("path:{l}:free"));
            step.push(Frame::Apply(stack.clone()));
            step.push(Frame::Bind(beta.clone()));
            step.extend(apply_vars(&alphas));
        }
        step.append(&mut frames);
        frames = step;

        let next = |args: &[Stack]| -> Term {
            let st = if j <= pt {
                args[j - 1].subst(&stack, &beta)
            } else {
                Stack::Var(pads[j - pt - 1].clone())
            };
            Term::car_n(st, jp - 1).canonical()
        };
        cur_m = next(&args_m);
        cur_n = next(&args_n);
    }

    match (head_normalize(&cur_m, fuel), head_normalize(&cur_n, fuel)) {
        (StrategyResult::Found(_), StrategyResult::Found(_)) => {
            let Some((tail, flip)) = general_frames(&cur_m, &cur_n, &mut s, &mut log, fuel)? else {
                return Ok(None);
            };
            let mut all = tail;
            all.append(&mut frames);
            finish(all, flip, log, &mut s, m, n, fuel).map(Some)
        }
        (StrategyResult::Found(x), StrategyResult::Improper(y))
        | (StrategyResult::Improper(x), StrategyResult::Found(y)) => {
            log.push("proper-vs-improper".into());
            let ctx = HeadContext::new(frames);
            let (left, right) = match head_normalize(&cur_m, fuel) {
                StrategyResult::Found(_) => (x.recompose(), y.recompose()),
                _ => (y.recompose(), x.recompose()),
            };
            let mut cert = Certificate {
                kind: CertificateKind::Distinguishing,
                context: ctx,
                left_target: left,
                right_target: right,
                case_log: log,
                fuel,
                verified: false,
            };
            if !verify_certificate(&cert, m, n, fuel) {
                return Err(SeparationError::VerificationFailed);
            }
            cert.verified = true;
            Ok(Some(cert))
        }
        _ => Err(SeparationError::Unresolved),
    }
}
