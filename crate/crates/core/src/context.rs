//! Head contexts and separation certificates.

use crate::constants;
use crate::syntax::{Stack, Term, VarName};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Frame {
    Apply(Stack),
    Bind(VarName),
}

/// A head context, frames listed from the outside in.
///
/// `bd e. ([·] @ a) @ π` is `[Bind e, Apply π, Apply a]`. Plugging is
/// literal hole filling: variables free in the plugged term are captured by
/// `Bind` frames on purpose.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeadContext {
    pub frames: Vec<Frame>,
}

impl HeadContext {
    pub fn hole() -> Self {
        HeadContext::default()
    }

    pub fn new(frames: Vec<Frame>) -> Self {
        HeadContext { frames }
    }

    pub fn plug(&self, m: &Term) -> Term {
        self.frames
            .iter()
            .rev()
            .fold(m.clone(), |acc, frame| match frame {
                Frame::Apply(s) => Term::app(acc, s.clone()),
                Frame::Bind(v) => Term::abs(v.clone(), acc),
            })
    }

    /// `self[inner[·]]`
    pub fn compose(&self, inner: &HeadContext) -> HeadContext {
        let mut frames = self.frames.clone();
        frames.extend(inner.frames.iter().cloned());
        HeadContext { frames }
    }

    /// Whether the context has the original-calculus shape
    /// `bd α1. (... (bd αn. [·] @ πn) ...) @ π1`.
    pub fn is_original(&self) -> bool {
        self.frames.len().is_multiple_of(2)
            && self
                .frames
                .chunks(2)
                .all(|c| matches!(c, [Frame::Bind(_), Frame::Apply(_)]))
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    /// `bd e. [·] @ (F :: T :: e)`: swaps `T` and `F`.
    pub fn negation(e: VarName) -> HeadContext {
        let s = Stack::push(
            constants::false_term(),
            Stack::push(constants::true_term(), Stack::Var(e.clone())),
        );
        HeadContext::new(vec![Frame::Bind(e), Frame::Apply(s)])
    }

    /// `bd e. self[·] @ (Omega :: I :: e)`: sends `T` to a term without hnf
    /// and `F` to one with a proper hnf.
    pub fn hnf_splitter(&self, e: VarName) -> HeadContext {
        let s = Stack::push(
            constants::big_omega(),
            Stack::push(constants::identity(), Stack::Var(e.clone())),
        );
        let mut frames = vec![Frame::Bind(e), Frame::Apply(s)];
        frames.extend(self.frames.iter().cloned());
        HeadContext::new(frames)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `C[m] = left` and `C[n] = right`, the targets being `T` and `F`.
    Separation,
    /// Exactly one of `C[m]`, `C[n]` has a proper hnf; the other has an
    /// improper one.
    Distinguishing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub context: HeadContext,
    pub left_target: Term,
    pub right_target: Term,
    pub case_log: Vec<String>,
    pub fuel: usize,
    pub verified: bool,
}

impl Certificate {
    pub fn separation(context: HeadContext, case_log: Vec<String>, fuel: usize) -> Self {
        Certificate {
            kind: CertificateKind::Separation,
            context,
            left_target: constants::true_term(),
            right_target: constants::false_term(),
            case_log,
            fuel,
            verified: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_stack, parse_term};

    #[test]
    fn plug_captures() {
        let c = HeadContext::new(vec![
            Frame::Bind("a".into()),
            Frame::Apply(parse_stack("nil").unwrap()),
            Frame::Apply(Stack::var("a")),
        ]);
        let plugged = c.plug(&parse_term("car(b)").unwrap());
        assert_eq!(plugged, parse_term("bd a. car(b) @ a @ nil").unwrap());
        // The free `a` of the plugged term is captured.
        let plugged = c.plug(&parse_term("car(a)").unwrap());
        assert!(plugged.free_vars().is_empty());
        assert!(!c.is_original());
    }

    #[test]
    fn original_shape() {
        let c = HeadContext::new(vec![
            Frame::Bind("a".into()),
            Frame::Apply(Stack::var("a")),
        ]);
        assert!(c.is_original());
        assert!(HeadContext::hole().is_original());
        assert!(c.compose(&c).is_original());
        assert_eq!(c.compose(&HeadContext::hole()), c);
    }
}
