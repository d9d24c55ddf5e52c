//! Appendage numbers: the fewest vertices that must be added to disjoint
//! copies of `C` and `P` to obtain a uniform central graph whose center
//! induces `C` and whose centered periphery induces `P`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::Bounds;
use crate::construction::{
    build_cone, build_refined_scaffold, build_scaffold, verify_construction, ConstructionError,
    Scaffold, VerificationReport,
};
use crate::covering::{
    cov_a, settle_at_kappa, AtKappa, CovSizeResult, CovTarget, CovValue, Covering, Method, Witness,
};
use crate::graph::Graph;
use crate::metric::{metric_profile, ExtDist, MetricProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AppendageValue {
    Finite(usize),
    Infinite,
    /// The exact searches ran out of budget; the value lies in `lo..=hi`.
    Unresolved { lo: usize, hi: usize },
}

impl AppendageValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            AppendageValue::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for AppendageValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppendageValue::Finite(v) => write!(f, "{v}"),
            AppendageValue::Infinite => f.write_str("inf"),
            AppendageValue::Unresolved { lo, hi } => write!(f, "{lo}..={hi}"),
        }
    }
}

impl Serialize for AppendageValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            AppendageValue::Finite(v) => s.serialize_u64(*v as u64),
            AppendageValue::Infinite => s.serialize_str("inf"),
            AppendageValue::Unresolved { lo, hi } => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("lo", lo)?;
                m.serialize_entry("hi", hi)?;
                m.end()
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AppendageError {
    #[error("witness for case {case_tag} failed verification: {report:?}")]
    WitnessRejected {
        case_tag: String,
        report: VerificationReport,
    },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AppendageResult {
    pub value: AppendageValue,
    /// Which rule settled the value.
    pub case_tag: String,
    pub kappa: Option<usize>,
    /// Covering sizes the decision relied on, with their witnesses.
    pub certificates: Vec<CovSizeResult>,
    /// A graph attaining the value (or the upper end when unresolved).
    pub witness: Option<Scaffold>,
    pub verification: Option<VerificationReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AppendageOptions {
    /// Settle values from the diameter and radius of `P` when they
    /// determine it, instead of searching.
    pub table_fast_paths: bool,
    pub bounds: Bounds,
}

impl Default for AppendageOptions {
    fn default() -> Self {
        AppendageOptions {
            table_fast_paths: true,
            bounds: Bounds::default(),
        }
    }
}

fn check_witness(
    s: Scaffold,
    c: &Graph,
    p: &Graph,
    expected: usize,
    case_tag: &str,
) -> Result<(Scaffold, VerificationReport), AppendageError> {
    let report = verify_construction(&s, c, p);
    if !report.ok() || report.intermediate_count != expected {
        return Err(AppendageError::WitnessRejected {
            case_tag: case_tag.to_string(),
            report,
        });
    }
    Ok((s, report))
}

fn kappa_certificate(target: CovTarget, kappa: usize, answer: &AtKappa) -> CovSizeResult {
    let (value, witness, method) = match answer {
        AtKappa::Yes(w, m) => (CovValue::Exact(kappa), Some(w.clone()), *m),
        AtKappa::No(m) => (CovValue::NotEqual(kappa), None, *m),
        AtKappa::Unknown => (CovValue::Unknown { bound: kappa }, None, Method::Exhausted),
    };
    CovSizeResult {
        which: target,
        value,
        witness,
        method,
    }
}

fn a_covering(cert: &CovSizeResult) -> Covering {
    cert.witness
        .as_ref()
        .map(|w| w.covering().clone())
        .expect("feasible cov_A carries a witness")
}

fn plain(w: &Witness) -> &Covering {
    w.covering()
}

struct Engine<'a> {
    c: &'a Graph,
    p: &'a Graph,
    prof: MetricProfile,
    opts: &'a AppendageOptions,
    certificates: Vec<CovSizeResult>,
}

impl Engine<'_> {
    fn settle(&mut self, target: CovTarget, kappa: usize) -> AtKappa {
        let answer = settle_at_kappa(self.p, target, kappa, self.opts.table_fast_paths, &self.opts.bounds);
        self.certificates.push(kappa_certificate(target, kappa, &answer));
        answer
    }

    fn done(
        self,
        value: AppendageValue,
        tag: String,
        kappa: usize,
        witness: Scaffold,
        attained: usize,
    ) -> Result<AppendageResult, AppendageError> {
        let (s, report) = check_witness(witness, self.c, self.p, attained, &tag)?;
        Ok(AppendageResult {
            value,
            case_tag: tag,
            kappa: Some(kappa),
            certificates: self.certificates,
            witness: Some(s),
            verification: Some(report),
        })
    }

    fn diam_rows_complete(&self) -> Option<&'static str> {
        let (d, r) = (self.prof.diameter, self.prof.radius);
        if !self.opts.table_fast_paths {
            return None;
        }
        if d.at_least(4) && r.at_least(3) {
            Some("complete-center:diam≥4,r≥3")
        } else if d.at_least(3) && r == ExtDist::finite(2) {
            Some("complete-center:diam≥3,r=2")
        } else {
            None
        }
    }

    fn complete_center(mut self, kappa: usize, a_cert: CovSizeResult) -> Result<AppendageResult, AppendageError> {
        let (c, p) = (self.c, self.p);
        let row = self.diam_rows_complete();
        let ab = self.settle(CovTarget::AB, kappa);
        let tag = |suffix: &str| row.map_or_else(|| format!("complete-center:{suffix}"), str::to_string);
        match ab {
            AtKappa::Yes(w, _) => {
                let s = build_scaffold(c, p, plain(&w), 1, &[1])?;
                self.done(AppendageValue::Finite(kappa), tag("cov_AB=κ"), kappa, s, kappa)
            }
            other => {
                let s = build_scaffold(c, p, &a_covering(&a_cert), 1, &[])?;
                let value = if other == AtKappa::Unknown {
                    AppendageValue::Unresolved { lo: kappa, hi: kappa + 1 }
                } else {
                    AppendageValue::Finite(kappa + 1)
                };
                let t = if other == AtKappa::Unknown {
                    "complete-center:unresolved".to_string()
                } else {
                    tag("cov_AB≠κ")
                };
                self.done(value, t, kappa, s, kappa + 1)
            }
        }
    }

    fn diam_rows_general(&self) -> Option<&'static str> {
        let (d, r) = (self.prof.diameter, self.prof.radius);
        if !self.opts.table_fast_paths {
            return None;
        }
        if d == ExtDist::INFINITY {
            Some("general-center:diam=∞")
        } else if d.at_least(5) {
            Some("general-center:5≤diam<∞")
        } else if d == ExtDist::finite(4) && r == ExtDist::finite(2) {
            Some("general-center:diam=4,r=2")
        } else if d == ExtDist::finite(3) {
            Some("general-center:diam=3")
        } else {
            None
        }
    }

    fn general_center(mut self, kappa: usize, a_cert: CovSizeResult) -> Result<AppendageResult, AppendageError> {
        let (c, p) = (self.c, self.p);
        let row = self.diam_rows_general();
        let tag = |suffix: &str| row.map_or_else(|| format!("general-center:{suffix}"), str::to_string);

        let primed_pair = self.settle(CovTarget::APrimeBPrime, kappa);
        if let AtKappa::Yes(w, _) = &primed_pair {
            let s = build_scaffold(c, p, plain(w), 2, &[1, 2])?;
            return self.done(AppendageValue::Finite(2 * kappa), tag("cov_A′B′=κ"), kappa, s, 2 * kappa);
        }
        let low = if primed_pair == AtKappa::Unknown { 2 * kappa } else { 2 * kappa + 1 };

        let primed = self.settle(CovTarget::APrime, kappa);
        let odd = match &primed {
            AtKappa::Yes(w, _) => Some((build_scaffold(c, p, plain(w), 2, &[2])?, "cov_A′=κ")),
            _ => None,
        };
        let (odd, refined) = match odd {
            Some(found) => (Some(found), None),
            None => {
                let refined = self.settle(CovTarget::AADoublePrimeBDoublePrime, kappa);
                let built = match &refined {
                    AtKappa::Yes(Witness::Refined(rc), _) => {
                        Some((build_refined_scaffold(c, p, rc)?, "cov_AA″B″=κ"))
                    }
                    _ => None,
                };
                (built, Some(refined))
            }
        };
        if let Some((s, suffix)) = odd {
            let value = if low == 2 * kappa {
                AppendageValue::Unresolved { lo: low, hi: 2 * kappa + 1 }
            } else {
                AppendageValue::Finite(2 * kappa + 1)
            };
            let t = if low == 2 * kappa { "general-center:unresolved".into() } else { tag(suffix) };
            return self.done(value, t, kappa, s, 2 * kappa + 1);
        }

        let unknown = low == 2 * kappa || primed == AtKappa::Unknown || refined == Some(AtKappa::Unknown);
        let s = build_scaffold(c, p, &a_covering(&a_cert), 2, &[])?;
        let (value, t) = if unknown {
            (
                AppendageValue::Unresolved { lo: low, hi: 2 * kappa + 2 },
                "general-center:unresolved".to_string(),
            )
        } else {
            (AppendageValue::Finite(2 * kappa + 2), tag("otherwise"))
        };
        self.done(value, t, kappa, s, 2 * kappa + 2)
    }
}

/// `A(C, P)` with a verified witness graph.
///
/// Infinite when `P` has a vertex adjacent to all others. For a one-vertex
/// `C` the cone over `P` needs nothing. For complete `C` the value is
/// `cov_A(P)` or one more, for other `C` it lies between `2 cov_A(P)` and
/// `2 cov_A(P) + 2`, decided by which covering conditions can be met with
/// `cov_A(P)` blocks.
pub fn appendage_number(
    c: &Graph,
    p: &Graph,
    opts: &AppendageOptions,
) -> Result<AppendageResult, AppendageError> {
    let prof = metric_profile(p);
    if !prof.radius.at_least(2) {
        return Ok(AppendageResult {
            value: AppendageValue::Infinite,
            case_tag: "periphery-radius≤1".into(),
            kappa: None,
            certificates: Vec::new(),
            witness: None,
            verification: None,
        });
    }
    if c.n() == 1 {
        let tag = "single-vertex-center";
        let (s, report) = check_witness(build_cone(p), c, p, 0, tag)?;
        return Ok(AppendageResult {
            value: AppendageValue::Finite(0),
            case_tag: tag.into(),
            kappa: None,
            certificates: Vec::new(),
            witness: Some(s),
            verification: Some(report),
        });
    }
    let a_cert = cov_a(p);
    let kappa = a_cert.exact().expect("radius at least 2 makes cov_A finite");
    let engine = Engine {
        c,
        p,
        prof,
        opts,
        certificates: vec![a_cert.clone()],
    };
    if c.is_complete() {
        engine.complete_center(kappa, a_cert)
    } else {
        engine.general_center(kappa, a_cert)
    }
}

/// Result of the one-sided variants.
#[derive(Debug, Clone, PartialEq)]
pub struct OneSidedResult {
    pub value: AppendageValue,
    pub witness: Option<Scaffold>,
    pub verification: Option<VerificationReport>,
    /// The periphery graph used by the witness.
    pub periphery: Option<Graph>,
}

/// Fewest vertices to add to `C` alone (any centered periphery allowed):
/// 2 for a single vertex, 4 for other complete graphs, 6 otherwise. The
/// witness uses two isolated vertices as periphery.
pub fn appendage_center_only(c: &Graph) -> Result<OneSidedResult, AppendageError> {
    let p = Graph::edgeless(2).expect("two vertices");
    let singletons = Covering::singletons(&p);
    let (s, extra, tag) = if c.n() == 1 {
        (build_cone(&p), 0, "center-only:single-vertex")
    } else if c.is_complete() {
        (build_scaffold(c, &p, &singletons, 1, &[1])?, 2, "center-only:complete")
    } else {
        (build_scaffold(c, &p, &singletons, 2, &[1, 2])?, 4, "center-only:general")
    };
    let (s, report) = check_witness(s, c, &p, extra, tag)?;
    Ok(OneSidedResult {
        value: AppendageValue::Finite(extra + p.n()),
        witness: Some(s),
        verification: Some(report),
        periphery: Some(p),
    })
}

/// Fewest vertices to add to `P` alone (any center allowed): infinite when
/// some vertex of `P` is adjacent to all others, else 1 via the cone.
pub fn appendage_periphery_only(p: &Graph) -> Result<OneSidedResult, AppendageError> {
    if !metric_profile(p).radius.at_least(2) {
        return Ok(OneSidedResult {
            value: AppendageValue::Infinite,
            witness: None,
            verification: None,
            periphery: None,
        });
    }
    let k1 = Graph::edgeless(1).expect("one vertex");
    let (s, report) = check_witness(build_cone(p), &k1, p, 0, "periphery-only")?;
    Ok(OneSidedResult {
        value: AppendageValue::Finite(1),
        witness: Some(s),
        verification: Some(report),
        periphery: Some(p.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_prism;

    fn two_k2() -> Graph {
        Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap()
    }

    fn value(c: &Graph, p: &Graph) -> AppendageValue {
        appendage_number(c, p, &AppendageOptions::default()).unwrap().value
    }

    #[test]
    fn small_cases() {
        let k2 = Graph::complete(2).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert_eq!(value(&k2, &two_k2()), AppendageValue::Finite(2));
        assert_eq!(value(&p3, &Graph::edgeless(2).unwrap()), AppendageValue::Finite(4));
        assert_eq!(value(&k2, &Graph::cycle(7).unwrap()), AppendageValue::Finite(2));
        assert_eq!(value(&p3, &Graph::star(3).unwrap()), AppendageValue::Infinite);
        assert_eq!(value(&Graph::edgeless(1).unwrap(), &Graph::cycle(4).unwrap()), AppendageValue::Finite(0));
    }

    #[test]
    fn tag_for_disconnected_periphery() {
        let r = appendage_number(&Graph::complete(2).unwrap(), &two_k2(), &AppendageOptions::default()).unwrap();
        assert_eq!(r.case_tag, "complete-center:diam≥4,r≥3");
        let slow = AppendageOptions {
            table_fast_paths: false,
            ..AppendageOptions::default()
        };
        let r2 = appendage_number(&Graph::complete(2).unwrap(), &two_k2(), &slow).unwrap();
        assert_eq!(r2.value, r.value);
        assert_eq!(r2.case_tag, "complete-center:cov_AB=κ");
    }

    #[test]
    fn prisms_under_a_path_center() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(value(&p3, &gen_prism(7).unwrap().graph), AppendageValue::Finite(5));
        assert_eq!(value(&p3, &gen_prism(6).unwrap().graph), AppendageValue::Finite(6));
    }

    #[test]
    fn one_sided() {
        let v = |c: &Graph| appendage_center_only(c).unwrap().value;
        assert_eq!(v(&Graph::edgeless(1).unwrap()), AppendageValue::Finite(2));
        assert_eq!(v(&Graph::complete(5).unwrap()), AppendageValue::Finite(4));
        assert_eq!(v(&Graph::path(3).unwrap()), AppendageValue::Finite(6));
        let w = |p: &Graph| appendage_periphery_only(p).unwrap().value;
        assert_eq!(w(&Graph::star(3).unwrap()), AppendageValue::Infinite);
        assert_eq!(w(&Graph::edgeless(2).unwrap()), AppendageValue::Finite(1));
        assert_eq!(w(&Graph::cycle(6).unwrap()), AppendageValue::Finite(1));
    }

    #[test]
    fn unresolved_when_budget_is_tiny() {
        let opts = AppendageOptions {
            table_fast_paths: false,
            bounds: Bounds {
                search_budget: 1,
                ..Bounds::default()
            },
        };
        let r = appendage_number(&Graph::complete(2).unwrap(), &Graph::cycle(7).unwrap(), &opts).unwrap();
        assert_eq!(r.value, AppendageValue::Unresolved { lo: 2, hi: 3 });
        assert!(r.verification.unwrap().ok());
    }
}
