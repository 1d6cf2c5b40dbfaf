//! Lazy Böhm-tree access, path expansion, similarity and its bounded
//! infinite unfolding.
//!
//! Two naming schemes coexist. The free functions [`node_at`],
//! [`path_expand`] and [`virtual_node`] keep the binder names that head
//! reduction produces. [`Navigator`] renames the binders of every node to
//! `<base><depth>_<position>`, so that nodes of two different terms reached
//! by the same path can be compared positionally.

use std::collections::VecDeque;
use std::fmt;

use crate::strategy::{head_normalize_counted, Head, HnfView, StrategyResult};
use crate::syntax::{FreshSession, Stack, Tail, Term, VarName};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodePath(pub Vec<(usize, usize)>);

impl NodePath {
    pub fn root() -> Self {
        NodePath(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, j: usize, jp: usize) -> NodePath {
        let mut v = self.0.clone();
        v.push((j, jp));
        NodePath(v)
    }

    pub fn is_proper_prefix_of(&self, other: &NodePath) -> bool {
        self.len() < other.len() && other.0[..self.len()] == self.0[..]
    }

    pub fn prefix(&self, len: usize) -> NodePath {
        NodePath(self.0[..len].to_vec())
    }
}

impl From<Vec<(usize, usize)>> for NodePath {
    fn from(v: Vec<(usize, usize)>) -> Self {
        NodePath(v)
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (j, jp) in &self.0 {
            write!(f, "({j},{jp})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Both,
}

impl Side {
    fn join(a: Option<Side>, b: Side) -> Side {
        match a {
            None => b,
            Some(a) if a == b => a,
            Some(_) => Side::Both,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimVerdict {
    Similar,
    Dissimilar { path: NodePath, reason: String },
    Unknown(Side),
}

impl SimVerdict {
    fn dissimilar(reason: impl Into<String>) -> Self {
        SimVerdict::Dissimilar {
            path: NodePath::root(),
            reason: reason.into(),
        }
    }

    pub fn is_dissimilar(&self) -> bool {
        matches!(self, SimVerdict::Dissimilar { .. })
    }
}

/// Result of a fuel-bounded lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lookup<T> {
    Defined(T),
    Undefined,
    Unknown,
}

impl<T> Lookup<T> {
    pub fn defined(self) -> Option<T> {
        match self {
            Lookup::Defined(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeMetrics {
    pub bounded_breadth: usize,
    pub bounded_weight: usize,
    pub depth_bound: usize,
    pub fuel_used: usize,
    pub exact: bool,
}

// ---------------------------------------------------------------------------
// Children of a head normal form

/// Child `(j, j')` of a proper hnf; `virtual_ok` enables the eta-expanded
/// positions. `fresh(pos)` names the binder appended at position `pos`.
fn child_of(
    view: &HnfView,
    j: usize,
    jp: usize,
    virtual_ok: bool,
    fresh: impl FnOnce(usize) -> VarName,
) -> Lookup<Term> {
    if !view.is_proper() || j == 0 || jp == 0 {
        return Lookup::Undefined;
    }
    let m = view.args.len();
    if j <= m {
        let spine = view.args[j - 1].spine();
        let len = spine.terms.len();
        if jp <= len {
            return Lookup::Defined(spine.terms[jp - 1].clone());
        }
        match (&spine.tail, virtual_ok) {
            (Tail::Var(g), true) => Lookup::Defined(Term::car_n(
                Stack::Var(g.clone()),
                spine.cdrs + jp - len - 1,
            )),
            _ => Lookup::Undefined,
        }
    } else if virtual_ok {
        let g = fresh(view.binders.len() + j - m);
        Lookup::Defined(Term::car_n(Stack::Var(g), jp - 1))
    } else {
        Lookup::Undefined
    }
}

/// Upper bounds on the child indices worth visiting below a pair of
/// similar hnfs: every child beyond them is identical on both sides.
fn child_bounds(views: &[&HnfView]) -> (usize, usize) {
    let mut jmax = 0;
    let mut jpmax = 0;
    for v in views {
        jmax = jmax.max(v.args.len());
        for a in &v.args {
            jpmax = jpmax.max(a.spine().terms.len());
        }
    }
    (jmax + 1, jpmax + 1)
}

// ---------------------------------------------------------------------------
// Original-name access

fn hnf_lookup(t: &Term, fuel: usize) -> Lookup<HnfView> {
    match head_normalize_counted(t, fuel).0 {
        StrategyResult::Found(v) => Lookup::Defined(v),
        StrategyResult::Improper(_) => Lookup::Undefined,
        StrategyResult::Diverged(_) => Lookup::Unknown,
    }
}

/// `M(σ)`: the real node at `sigma`.
pub fn node_at(m: &Term, sigma: &NodePath, fuel: usize) -> Lookup<Term> {
    let mut cur = m.clone();
    for &(j, jp) in &sigma.0 {
        let view = match hnf_lookup(&cur, fuel) {
            Lookup::Defined(v) => v,
            Lookup::Undefined => return Lookup::Undefined,
            Lookup::Unknown => return Lookup::Unknown,
        };
        match child_of(&view, j, jp, false, |_| unreachable!()) {
            Lookup::Defined(t) => cur = t,
            other => return other,
        }
    }
    Lookup::Defined(cur)
}

/// The path expansion `<m>σ`: eta-expands `m` along `sigma` so that the
/// first step leads to a node that `m` itself lacks.
pub fn path_expand(m: &Term, sigma: &NodePath, fuel: usize) -> Lookup<Term> {
    let mut session = FreshSession::new();
    session.reserve_term(m);
    expand(m, &sigma.0, fuel, &mut session)
}

fn expand(
    m: &Term,
    sigma: &[(usize, usize)],
    fuel: usize,
    session: &mut FreshSession,
) -> Lookup<Term> {
    let Some((&(j, jp), rest)) = sigma.split_first() else {
        return Lookup::Defined(m.clone());
    };
    if j == 0 || jp == 0 {
        return Lookup::Undefined;
    }
    let view = match hnf_lookup(m, fuel) {
        Lookup::Defined(v) => v,
        other => {
            return match other {
                Lookup::Unknown => Lookup::Unknown,
                _ => Lookup::Undefined,
            }
        }
    };
    let mm = view.args.len();
    // Builds `car(cdr^from(g)) :: ... :: <car(cdr^(to-1)(g))>rest :: cdr^to(g)`.
    let spliced = |g: &VarName, from: usize, to: usize, session: &mut FreshSession| {
        let inner = Term::car_n(Stack::Var(g.clone()), to - 1);
        let expanded = match expand(&inner, rest, fuel, session) {
            Lookup::Defined(t) => t,
            other => return Err(other),
        };
        let mut terms: Vec<Term> = (from..to - 1)
            .map(|i| Term::car_n(Stack::Var(g.clone()), i))
            .collect();
        terms.push(expanded);
        Ok(Stack::push_all(terms, Stack::cdr_n(Stack::Var(g.clone()), to)))
    };
    if j <= mm {
        let spine = view.args[j - 1].spine();
        let len = spine.terms.len();
        let Tail::Var(g) = &spine.tail else {
            return Lookup::Undefined;
        };
        if jp <= len {
            return Lookup::Undefined;
        }
        let k = spine.cdrs;
        let tail = match spliced(g, k, k + jp - len, session) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let mut args = view.args.clone();
        args[j - 1] = Stack::push_all(spine.terms.iter().cloned(), tail);
        Lookup::Defined(Term::abs_many(
            view.binders.iter().cloned(),
            Term::apps(view.head.to_term(), args),
        ))
    } else {
        let gammas: Vec<VarName> = (0..j - mm).map(|_| session.fresh("g")).collect();
        let last = gammas.last().expect("j > m").clone();
        let stack = match spliced(&last, 0, jp, session) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let mut args = view.args.clone();
        args.extend(gammas[..gammas.len() - 1].iter().cloned().map(Stack::Var));
        args.push(stack);
        Lookup::Defined(Term::abs_many(
            view.binders.iter().cloned().chain(gammas),
            Term::apps(view.head.to_term(), args),
        ))
    }
}

/// `M_σ`: the node at `sigma` of the eta-expanded tree, computed literally
/// from the longest real prefix and a path expansion.
pub fn virtual_node(m: &Term, sigma: &NodePath, fuel: usize) -> Lookup<Term> {
    let mut cur = m.clone();
    for (i, &(j, jp)) in sigma.0.iter().enumerate() {
        let view = match hnf_lookup(&cur, fuel) {
            Lookup::Defined(v) => v,
            Lookup::Undefined => return Lookup::Undefined,
            Lookup::Unknown => return Lookup::Unknown,
        };
        match child_of(&view, j, jp, false, |_| unreachable!()) {
            Lookup::Defined(t) => cur = t,
            Lookup::Unknown => return Lookup::Unknown,
            Lookup::Undefined => {
                let rest = NodePath(sigma.0[i..].to_vec());
                return match path_expand(&cur, &rest, fuel) {
                    Lookup::Defined(e) => {
                        // The expansion puts every remaining step on a real node.
                        node_at(&e, &rest, fuel)
                    }
                    other => other,
                };
            }
        }
    }
    Lookup::Defined(cur)
}

// ---------------------------------------------------------------------------
// Metrics

pub fn bounded_metrics(m: &Term, n: usize, fuel: usize) -> TreeMetrics {
    let mut metrics = TreeMetrics {
        bounded_breadth: 0,
        bounded_weight: 0,
        depth_bound: n,
        fuel_used: 0,
        exact: true,
    };
    let mut queue = VecDeque::from([(m.clone(), 0usize)]);
    while let Some((t, depth)) = queue.pop_front() {
        let (r, steps) = head_normalize_counted(&t, fuel);
        metrics.fuel_used += steps;
        let view = match r {
            StrategyResult::Found(v) => v,
            StrategyResult::Improper(_) => continue,
            StrategyResult::Diverged(_) => {
                metrics.exact = false;
                continue;
            }
        };
        metrics.bounded_breadth = metrics.bounded_breadth.max(view.breadth());
        metrics.bounded_weight = metrics.bounded_weight.max(view.weight());
        if depth < n {
            for a in &view.args {
                for child in a.spine().terms {
                    queue.push_back((child, depth + 1));
                }
            }
        }
    }
    metrics
}

/// Every real path of length at most `n`, in breadth-first lexicographic
/// order, with its node.
pub fn bounded_domain(m: &Term, n: usize, fuel: usize) -> Vec<(NodePath, Lookup<Term>)> {
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(NodePath::root(), m.clone())]);
    while let Some((path, t)) = queue.pop_front() {
        let r = hnf_lookup(&t, fuel);
        out.push((
            path.clone(),
            match r {
                Lookup::Unknown => Lookup::Unknown,
                _ => Lookup::Defined(t),
            },
        ));
        if let (Lookup::Defined(view), true) = (r, path.len() < n) {
            for (j, a) in view.args.iter().enumerate() {
                for (jp, child) in a.spine().terms.into_iter().enumerate() {
                    queue.push_back((path.child(j + 1, jp + 1), child));
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Similarity

pub fn stack_similar(pi: &Stack, varpi: &Stack) -> SimVerdict {
    let a = pi.spine();
    let b = varpi.spine();
    if a.is_nil_terminated() || b.is_nil_terminated() {
        return SimVerdict::Similar;
    }
    let balance = |s: &crate::syntax::Spine| s.cdrs as i64 - s.terms.len() as i64;
    if a.tail == b.tail && balance(&a) == balance(&b) {
        SimVerdict::Similar
    } else {
        SimVerdict::dissimilar("stack")
    }
}

/// Clause (1) of term similarity on two proper hnfs whose binders share
/// names position by position.
pub fn views_similar(a: &HnfView, b: &HnfView) -> SimVerdict {
    match (a.is_proper(), b.is_proper()) {
        (false, false) => return SimVerdict::Similar,
        (true, true) => {}
        _ => return SimVerdict::dissimilar("proper-vs-improper"),
    }
    let (Head::Proper(beta, n), Head::Proper(beta2, n2)) = (&a.head, &b.head) else {
        unreachable!()
    };
    if beta != beta2 {
        return SimVerdict::dissimilar("head-variable");
    }
    if n != n2 {
        return SimVerdict::dissimilar("head-index");
    }
    let (k, m, k2, m2) = (a.binders.len(), a.args.len(), b.binders.len(), b.args.len());
    if k as i64 - m as i64 != k2 as i64 - m2 as i64 {
        return SimVerdict::dissimilar("arity");
    }
    for i in 0..m.min(m2) {
        if stack_similar(&a.args[i], &b.args[i]).is_dissimilar() {
            return SimVerdict::dissimilar(format!("stack:{}", i + 1));
        }
    }
    // The side with more binders has surplus stacks facing bound variables.
    let (long, short_k, short_m) = if k2 > k { (b, k, m) } else { (a, k2, m2) };
    for jx in 1..=long.binders.len() - short_k {
        let alpha = Stack::Var(long.binders[short_k + jx - 1].clone());
        if stack_similar(&long.args[short_m + jx - 1], &alpha).is_dissimilar() {
            return SimVerdict::dissimilar(format!("surplus:{jx}"));
        }
    }
    SimVerdict::Similar
}

/// Renames the binders of `v`, position `i` (from 1) becoming `name(i)`.
/// The new names must not occur in `v`.
pub(crate) fn rename_binders(mut v: HnfView, name: impl Fn(usize) -> VarName) -> HnfView {
    let k = v.binders.len();
    for i in (0..k).rev() {
        let from = v.binders[i].clone();
        let to = name(i + 1);
        if v.binders[i + 1..].contains(&from) {
            // Shadowed: no free occurrence refers to this binder.
            v.binders[i] = to;
            continue;
        }
        v.args = v.args.iter().map(|a| a.rename_free(&from, &to)).collect();
        if let Head::Proper(h, n) = &v.head {
            if *h == from {
                v.head = Head::Proper(to.clone(), *n);
            }
        }
        v.binders[i] = to;
    }
    v
}

/// Names binders by depth and position, for joint traversal of two terms.
#[derive(Clone, Debug)]
pub struct Navigator {
    base: String,
    pub fuel: usize,
}

impl Navigator {
    /// A navigator whose names occur in none of `terms`.
    pub fn new<'a>(terms: impl IntoIterator<Item = &'a Term>, fuel: usize) -> Self {
        let mut names = std::collections::BTreeSet::new();
        for t in terms {
            t.all_vars(&mut names);
        }
        let mut base = String::from("z");
        while names.iter().any(|v| v.base().starts_with(&base)) {
            base.push('z');
        }
        Navigator { base, fuel }
    }

    pub fn name(&self, depth: usize, pos: usize) -> VarName {
        VarName::new(&format!("{}{}", self.base, depth), pos as u32)
    }

    /// Head-normalises `t` (a node at `depth`) and renames its binders.
    pub fn hnf(&self, t: &Term, depth: usize) -> (StrategyResult<HnfView>, usize) {
        let (r, steps) = head_normalize_counted(t, self.fuel);
        let r = match r {
            StrategyResult::Found(v) => StrategyResult::Found(self.rename(v, depth)),
            StrategyResult::Improper(v) => StrategyResult::Improper(self.rename(v, depth)),
            d => d,
        };
        (r, steps)
    }

    fn rename(&self, v: HnfView, depth: usize) -> HnfView {
        rename_binders(v, |pos| self.name(depth, pos))
    }

    pub fn child(&self, view: &HnfView, depth: usize, j: usize, jp: usize) -> Lookup<Term> {
        child_of(view, j, jp, true, |pos| self.name(depth, pos))
    }

    /// The virtual node at `sigma`, with navigator names.
    pub fn node(&self, m: &Term, sigma: &NodePath) -> Lookup<Term> {
        self.walk(m, sigma, true)
    }

    /// The real node at `sigma`, with navigator names.
    pub fn real_node(&self, m: &Term, sigma: &NodePath) -> Lookup<Term> {
        self.walk(m, sigma, false)
    }

    fn walk(&self, m: &Term, sigma: &NodePath, virtual_ok: bool) -> Lookup<Term> {
        let mut cur = m.clone();
        for (depth, &(j, jp)) in sigma.0.iter().enumerate() {
            let view = match self.hnf(&cur, depth).0 {
                StrategyResult::Found(v) => v,
                StrategyResult::Improper(_) => return Lookup::Undefined,
                StrategyResult::Diverged(_) => return Lookup::Unknown,
            };
            match child_of(&view, j, jp, virtual_ok, |pos| self.name(depth, pos)) {
                Lookup::Defined(t) => cur = t,
                other => return other,
            }
        }
        Lookup::Defined(cur)
    }

    /// Term similarity of two nodes at the same depth.
    pub fn similar(&self, m: &Term, n: &Term, depth: usize) -> SimVerdict {
        let a = self.hnf(m, depth).0;
        let b = self.hnf(n, depth).0;
        self.similar_results(&a, &b)
    }

    fn similar_results(
        &self,
        a: &StrategyResult<HnfView>,
        b: &StrategyResult<HnfView>,
    ) -> SimVerdict {
        match (a, b) {
            (StrategyResult::Diverged(_), StrategyResult::Diverged(_)) => {
                SimVerdict::Unknown(Side::Both)
            }
            (StrategyResult::Diverged(_), _) => SimVerdict::Unknown(Side::Left),
            (_, StrategyResult::Diverged(_)) => SimVerdict::Unknown(Side::Right),
            _ => views_similar(a.view().unwrap(), b.view().unwrap()),
        }
    }

    /// Breadth-first search, by length then lexicographically, for the first
    /// virtual node of length at most `depth` where the trees disagree.
    pub fn sim_bounded(&self, m: &Term, n: &Term, depth: usize) -> SimVerdict {
        let mut unknown: Option<Side> = None;
        let mut queue = VecDeque::from([(
            NodePath::root(),
            Lookup::Defined(m.clone()),
            Lookup::Defined(n.clone()),
        )]);
        while let Some((path, a, b)) = queue.pop_front() {
            let (a, b) = match (a, b) {
                (Lookup::Defined(a), Lookup::Defined(b)) => (a, b),
                (Lookup::Undefined, Lookup::Undefined) => continue,
                (Lookup::Unknown, Lookup::Unknown) => {
                    unknown = Some(Side::Both);
                    continue;
                }
                (Lookup::Unknown, _) => {
                    unknown = Some(Side::join(unknown, Side::Left));
                    continue;
                }
                (_, Lookup::Unknown) => {
                    unknown = Some(Side::join(unknown, Side::Right));
                    continue;
                }
                _ => {
                    return SimVerdict::Dissimilar {
                        path,
                        reason: "domain".into(),
                    }
                }
            };
            let d = path.len();
            let ra = self.hnf(&a, d).0;
            let rb = self.hnf(&b, d).0;
            match self.similar_results(&ra, &rb) {
                SimVerdict::Similar => {}
                SimVerdict::Dissimilar { reason, .. } => {
                    return SimVerdict::Dissimilar { path, reason }
                }
                SimVerdict::Unknown(side) => {
                    unknown = Some(Side::join(unknown, side));
                    continue;
                }
            }
            let (StrategyResult::Found(va), StrategyResult::Found(vb)) = (&ra, &rb) else {
                continue;
            };
            if d >= depth {
                continue;
            }
            let (jmax, jpmax) = child_bounds(&[va, vb]);
            for j in 1..=jmax {
                for jp in 1..=jpmax {
                    queue.push_back((
                        path.child(j, jp),
                        self.child(va, d, j, jp),
                        self.child(vb, d, j, jp),
                    ));
                }
            }
        }
        match unknown {
            Some(side) => SimVerdict::Unknown(side),
            None => SimVerdict::Similar,
        }
    }
}

pub fn term_similar(m: &Term, n: &Term, fuel: usize) -> SimVerdict {
    Navigator::new([m, n], fuel).similar(m, n, 0)
}

pub fn sim_bounded(m: &Term, n: &Term, depth: usize, fuel: usize) -> SimVerdict {
    Navigator::new([m, n], fuel).sim_bounded(m, n, depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants;
    use crate::parse::{parse_stack, parse_term};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn s(x: &str) -> Stack {
        parse_stack(x).unwrap()
    }

    fn p(v: &[(usize, usize)]) -> NodePath {
        NodePath(v.to_vec())
    }

    #[test]
    fn node_at_examples() {
        let m = t("bd a. car(b) @ #T :: #F :: a");
        assert_eq!(node_at(&m, &NodePath::root(), 10), Lookup::Defined(m.clone()));
        assert_eq!(node_at(&m, &p(&[(1, 2)]), 10), Lookup::Defined(constants::false_term()));
        assert_eq!(node_at(&t("bd a. car(b) @ #T :: a"), &p(&[(2, 1)]), 10), Lookup::Undefined);
        assert_eq!(node_at(&constants::big_omega(), &p(&[(1, 1)]), 50), Lookup::Unknown);
    }

    #[test]
    fn metrics_examples() {
        let mt = bounded_metrics(&constants::true_term(), 1, 100);
        assert_eq!((mt.bounded_breadth, mt.bounded_weight, mt.exact), (1, 0, true));
        let mf = bounded_metrics(&constants::false_term(), 1, 100);
        assert_eq!((mf.bounded_breadth, mf.bounded_weight), (1, 1));
        let mo = bounded_metrics(&constants::big_omega(), 3, 100);
        assert_eq!((mo.bounded_breadth, mo.bounded_weight, mo.exact), (0, 0, false));
    }

    #[test]
    fn path_expand_examples() {
        let m = t("bd a. car(b) @ a");
        assert_eq!(
            path_expand(&m, &p(&[(1, 1)]), 10),
            Lookup::Defined(t("bd a. car(b) @ car(a) :: cdr(a)"))
        );
        assert_eq!(path_expand(&m, &NodePath::root(), 10), Lookup::Defined(m.clone()));
        assert_eq!(
            path_expand(&m, &p(&[(2, 1)]), 10),
            Lookup::Defined(t("bd a. bd g1. car(b) @ a @ car(g1) :: cdr(g1)"))
        );
    }

    #[test]
    fn virtual_node_examples() {
        let m = t("bd a. car(b) @ a");
        assert_eq!(virtual_node(&m, &p(&[(1, 1)]), 10), Lookup::Defined(t("car(a)")));
        assert_eq!(
            virtual_node(&constants::true_term(), &p(&[(1, 1)]), 10),
            Lookup::Defined(t("car(cdr^2(a))"))
        );
        let m = t("bd a. car(b) @ #T :: #F :: a");
        for path in [p(&[]), p(&[(1, 1)]), p(&[(1, 2)])] {
            assert_eq!(virtual_node(&m, &path, 10), node_at(&m, &path, 10));
        }
        let outside = p(&[(1, 2), (1, 1)]);
        assert_eq!(node_at(&m, &outside, 10), Lookup::Undefined);
        assert_eq!(virtual_node(&m, &outside, 10), Lookup::Defined(t("car(cdr^2(a))")));
        // Deeper virtual steps go through nested expansions.
        assert_eq!(
            virtual_node(&m, &p(&[(1, 3), (2, 2)]), 10),
            Lookup::Defined(t("car(cdr(g2))"))
        );
        assert_eq!(virtual_node(&t("bd a. car(b) @ #T :: nil"), &p(&[(1, 2)]), 10), Lookup::Undefined);
    }

    #[test]
    fn navigator_agrees_with_literal_virtual_nodes() {
        let m = t("bd a. car(b) @ #T :: #F :: cdr(a)");
        let nav = Navigator::new([&m], 100);
        for path in [p(&[(1, 3)]), p(&[(2, 4)]), p(&[(1, 1), (1, 1)]), p(&[(1, 3), (2, 2)])] {
            let a = nav.node(&m, &path).defined().unwrap();
            let b = virtual_node(&m, &path, 100).defined().unwrap();
            assert_eq!(a.size(), b.size(), "{path}");
        }
    }

    #[test]
    fn stack_similarity_examples() {
        assert_eq!(stack_similar(&s("a"), &s("#T :: nil")), SimVerdict::Similar);
        assert_eq!(stack_similar(&s("#T :: g"), &s("#F :: #T :: cdr(g)")), SimVerdict::Similar);
        assert!(stack_similar(&s("g"), &s("d")).is_dissimilar());
        assert!(stack_similar(&s("g"), &s("#T :: g")).is_dissimilar());
    }

    #[test]
    fn term_similarity_examples() {
        let tt = constants::true_term();
        let ff = constants::false_term();
        assert_eq!(term_similar(&tt, &tt, 100), SimVerdict::Similar);
        assert_eq!(
            term_similar(&tt, &ff, 100),
            SimVerdict::Dissimilar { path: NodePath::root(), reason: "head-index".into() }
        );
        let a = t("bd g. car(g) @ #T :: g");
        let b = t("bd g. car(g) @ #F :: g");
        assert_eq!(term_similar(&a, &b, 100), SimVerdict::Similar);
        assert_eq!(
            term_similar(&t("car(nil)"), &t("bd x. car(cdr(nil)) @ x"), 10),
            SimVerdict::Similar
        );
        assert_eq!(
            term_similar(&constants::big_omega(), &tt, 50),
            SimVerdict::Unknown(Side::Left)
        );
        // Eta-related terms are similar: the surplus stack is the bound variable.
        assert_eq!(term_similar(&t("car(x)"), &t("bd a. car(x) @ a"), 10), SimVerdict::Similar);
        assert!(term_similar(&t("car(x)"), &t("bd a. car(x) @ cdr(a)"), 10).is_dissimilar());
    }

    #[test]
    fn sim_bounded_examples() {
        let a = t("bd g. car(g) @ #T :: g");
        let b = t("bd g. car(g) @ #F :: g");
        assert_eq!(sim_bounded(&a, &a, 3, 1000), SimVerdict::Similar);
        assert_eq!(
            sim_bounded(&a, &b, 1, 1000),
            SimVerdict::Dissimilar { path: p(&[(1, 1)]), reason: "head-index".into() }
        );
        assert_eq!(sim_bounded(&a, &b, 0, 1000), SimVerdict::Similar);
        assert_eq!(
            sim_bounded(&constants::big_omega(), &constants::t_infinity(), 2, 1000),
            SimVerdict::Unknown(Side::Both)
        );
        let c = t("bd a. car(b) @ #T :: nil");
        let d = t("bd a. car(b) @ #T :: a");
        assert_eq!(
            sim_bounded(&c, &d, 2, 100),
            SimVerdict::Dissimilar { path: p(&[(1, 2)]), reason: "domain".into() }
        );
    }
}
