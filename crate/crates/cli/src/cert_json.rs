//! The JSON certificate format.
//!
//! ```json
//! {"version":1,"context":[{"bind":"e1"},{"apply":"..."}],
//!  "caseLog":["general:1"],"fuel":10000,"targets":{"left":"#T","right":"#F"}}
//! ```
//!
//! Stacks are stored as surface text and must keep their exact variable
//! names: contexts capture on purpose, so renaming would change meaning.

use serde::{Deserialize, Serialize};
use stack_calculus::constants::{false_term, true_term};
use stack_calculus::context::{Certificate, CertificateKind, Frame, HeadContext};
use stack_calculus::{parse_stack, parse_term, Term, VarName};

#[derive(Serialize, Deserialize, Debug)]
#[serde(untagged)]
enum FrameJson {
    Bind { bind: String },
    Apply { apply: String },
}

#[derive(Serialize, Deserialize, Debug)]
struct Targets {
    left: String,
    right: String,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(rename_all = "camelCase")]
struct CertJson {
    version: u32,
    context: Vec<FrameJson>,
    case_log: Vec<String>,
    fuel: usize,
    targets: Targets,
    /// Present only for hnf-status certificates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
}

fn target_text(t: &Term) -> String {
    if t.alpha_eq(&true_term()) {
        "#T".into()
    } else if t.alpha_eq(&false_term()) {
        "#F".into()
    } else {
        t.to_string()
    }
}

pub fn to_json(cert: &Certificate) -> String {
    let context = cert
        .context
        .frames
        .iter()
        .map(|f| match f {
            Frame::Bind(v) => FrameJson::Bind { bind: v.to_string() },
            Frame::Apply(s) => FrameJson::Apply { apply: s.to_string() },
        })
        .collect();
    let doc = CertJson {
        version: 1,
        context,
        case_log: cert.case_log.clone(),
        fuel: cert.fuel,
        targets: Targets {
            left: target_text(&cert.left_target),
            right: target_text(&cert.right_target),
        },
        kind: match cert.kind {
            CertificateKind::Separation => None,
            CertificateKind::Distinguishing => Some("hnf-status".into()),
        },
    };
    serde_json::to_string_pretty(&doc).expect("certificate serialises")
}

pub fn from_json(text: &str) -> Result<Certificate, String> {
    let doc: CertJson = serde_json::from_str(text).map_err(|e| format!("bad certificate: {e}"))?;
    if doc.version != 1 {
        return Err(format!("unsupported certificate version {}", doc.version));
    }
    let mut frames = Vec::with_capacity(doc.context.len());
    for f in doc.context {
        frames.push(match f {
            FrameJson::Bind { bind } => Frame::Bind(
                VarName::parse(&bind).ok_or_else(|| format!("bad variable {bind:?}"))?,
            ),
            FrameJson::Apply { apply } => {
                Frame::Apply(parse_stack(&apply).map_err(|e| format!("in {apply:?}: {e}"))?)
            }
        });
    }
    let term = |s: &str| parse_term(s).map_err(|e| format!("in target {s:?}: {e}"));
    let kind = match doc.kind.as_deref() {
        None => CertificateKind::Separation,
        Some("hnf-status") => CertificateKind::Distinguishing,
        Some(k) => return Err(format!("unknown certificate kind {k:?}")),
    };
    Ok(Certificate {
        kind,
        context: HeadContext::new(frames),
        left_target: term(&doc.targets.left)?,
        right_target: term(&doc.targets.right)?,
        case_log: doc.case_log,
        fuel: doc.fuel,
        verified: false,
    })
}
