//! Independent certificate checking. Only syntax, reduction and head
//! normalisation are used here, never the construction code.

use crate::constants;
use crate::context::{Certificate, CertificateKind};
use crate::reduce::{convertible, RuleSet, Tri};
use crate::strategy::{head_normalize, StrategyResult};
use crate::syntax::{Expr, Term};

fn converts_to(m: &Term, target: &Term, fuel: usize) -> bool {
    convertible(
        &Expr::Term(m.clone()),
        &Expr::Term(target.clone()),
        RuleSet::SIGMA,
        fuel,
    ) == Tri::Yes
}

pub fn verify_certificate(cert: &Certificate, m: &Term, n: &Term, fuel: usize) -> bool {
    let cm = cert.context.plug(m);
    let cn = cert.context.plug(n);
    match cert.kind {
        CertificateKind::Separation => {
            let (t, f) = (constants::true_term(), constants::false_term());
            let targets_ok = (cert.left_target.alpha_eq(&t) && cert.right_target.alpha_eq(&f))
                || (cert.left_target.alpha_eq(&f) && cert.right_target.alpha_eq(&t));
            targets_ok
                && converts_to(&cm, &cert.left_target, fuel)
                && converts_to(&cn, &cert.right_target, fuel)
        }
        CertificateKind::Distinguishing => {
            let status = |x: &Term| match head_normalize(x, fuel) {
                StrategyResult::Found(_) => Some(true),
                StrategyResult::Improper(_) => Some(false),
                StrategyResult::Diverged(_) => None,
            };
            matches!(
                (status(&cm), status(&cn)),
                (Some(true), Some(false)) | (Some(false), Some(true))
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::HeadContext;

    fn cert() -> Certificate {
        Certificate::separation(HeadContext::hole(), vec![], 100)
    }

    #[test]
    fn identity_context() {
        let (t, f) = (constants::true_term(), constants::false_term());
        assert!(verify_certificate(&cert(), &t, &f, 100));
        assert!(!verify_certificate(&cert(), &t, &t, 100));
        let mut bogus = cert();
        bogus.right_target = t.clone();
        assert!(!verify_certificate(&bogus, &t, &t, 100));
    }

    #[test]
    fn negation_swaps() {
        let (t, f) = (constants::true_term(), constants::false_term());
        let mut c = cert();
        c.context = HeadContext::negation("e".into());
        assert!(verify_certificate(&c, &f, &t, 100));
        assert!(!verify_certificate(&c, &t, &f, 100));
    }
}
