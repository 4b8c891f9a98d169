//! Text and JSON rendering of results.
//!
//! JSON documents share one envelope:
//! `{"schema": "s2s2-report/1", "kind": ..., "data": ...}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{FormClass, HomologyProfile};
use crate::complex::io::write_facets;
use crate::complex::SimplicialComplex;
use crate::enumerate::{render_candidates, Candidate, SearchConfig};
use crate::error::{Error, Result};
use crate::symmetry::{GroupFingerprint, Isomorphism, PermutationGroup, Refutation};
use crate::topology::{Verdict, VerificationReport};

pub const SCHEMA: &str = "s2s2-report/1";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidConfig(format!("unknown format {other:?}"))),
        }
    }
}

fn envelope(kind: &str, data: Value) -> String {
    let doc = json!({ "schema": SCHEMA, "kind": kind, "data": data });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn render_expand(c: &SimplicialComplex, format: Format) -> String {
    match format {
        Format::Text => write_facets(c),
        Format::Json => envelope(
            "expand",
            json!({ "n": c.n(), "f_vector": c.f_vector(), "facets": c.facets() }),
        ),
    }
}

pub fn render_enumerate(cands: &[Candidate], cfg: &SearchConfig, format: Format) -> String {
    match format {
        Format::Text => render_candidates(cands, cfg),
        Format::Json => {
            let blocks: Vec<Value> = cands
                .iter()
                .map(|c| {
                    let trace: serde_json::Map<String, Value> =
                        c.filter_trace.iter().map(|(f, ok)| (f.to_string(), Value::Bool(*ok))).collect();
                    json!({ "cycles": c.cycles, "f_vector": c.complex.f_vector(), "filters": trace })
                })
                .collect();
            envelope(
                "enumerate",
                json!({
                    "n": cfg.n,
                    "d": cfg.d,
                    "orbits": cfg.orbit_count,
                    "diagonal": cfg.required_diagonal,
                    "filters": cfg.filters.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    "candidates": blocks,
                }),
            )
        }
    }
}

/// With `witness` unset, certificates are reduced to verdict and method.
pub fn render_verify(r: &VerificationReport, witness: bool, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = to_value(r);
            if !witness {
                for lv in v["link_verdicts"].as_array_mut().into_iter().flatten() {
                    if let Some(cert) = lv["certificate"].as_object_mut() {
                        cert.remove("witness");
                    }
                }
            }
            envelope("verify", v)
        }
        Format::Text => {
            let mut s = String::new();
            let count = |v: Verdict| r.link_verdicts.iter().filter(|l| l.certificate.verdict == v).count();
            let _ = writeln!(s, "dim: {}", r.dim);
            let _ = writeln!(s, "f-vector: {}", r.f_vector);
            let _ = writeln!(s, "chi: {}", r.f_vector.euler_characteristic());
            let _ = writeln!(s, "pseudomanifold: {}", yes_no(r.pseudomanifold));
            let _ = writeln!(s, "eulerian: {}", yes_no(r.eulerian));
            let _ = writeln!(s, "transitivity shortcut: {}", yes_no(r.transitivity_shortcut));
            let _ = writeln!(
                s,
                "links checked: {} (sphere {}, not sphere {}, unknown {})",
                r.link_verdicts.len(),
                count(Verdict::Sphere),
                count(Verdict::NotSphere),
                count(Verdict::Unknown)
            );
            for lv in &r.link_verdicts {
                if !witness && lv.certificate.verdict == Verdict::Sphere {
                    continue;
                }
                let _ = write!(
                    s,
                    "link {}: {} via {} (orbit {}, f-vector {}, chi {})",
                    lv.face,
                    lv.certificate.verdict,
                    lv.certificate.method,
                    lv.orbit_size,
                    lv.link_f_vector,
                    lv.link_chi
                );
                if witness {
                    let _ = write!(s, " {}", serde_json::to_string(&lv.certificate.witness).expect("serializes"));
                }
                s.push('\n');
            }
            let _ = writeln!(s, "singular faces: {}", r.singular_faces.len());
            if !r.singular_faces.is_empty() {
                let _ = writeln!(s, "singular: {}", join(&r.singular_faces, " "));
            }
            let _ = writeln!(s, "manifold: {}", r.is_manifold);
            s
        }
    }
}

pub fn render_aut(g: &PermutationGroup, fp: &GroupFingerprint, multipliers: Option<&[u32]>, format: Format) -> String {
    match format {
        Format::Json => envelope(
            "aut",
            json!({
                "degree": g.degree(),
                "generators": g.generators(),
                "fingerprint": fp,
                "multipliers": multipliers,
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "order: {}", fp.order);
            let _ = writeln!(s, "generators: {}", join(g.generators(), " "));
            let _ = writeln!(s, "vertex-transitive: {}", yes_no(fp.vertex_transitive));
            let _ = writeln!(s, "edge-transitive: {}", yes_no(fp.edge_transitive));
            let _ = writeln!(s, "center: {}", fp.center_order);
            let _ = writeln!(
                s,
                "derived: {}{}",
                fp.derived_order,
                if fp.derived_perfect { " (perfect)" } else { "" }
            );
            let ab = if fp.abelianization.is_empty() {
                "trivial".to_string()
            } else {
                join(fp.abelianization.iter().map(|k| format!("C{k}")), " x ")
            };
            let _ = writeln!(s, "abelianization: {ab}");
            let _ = writeln!(s, "normal subgroup orders: {}", join(&fp.normal_subgroup_orders, " "));
            for c in &fp.semidirect_certificates {
                let kind = match (&c.complement_invariants, c.complement_cyclic) {
                    (_, true) => format!("C{}", c.complement_order),
                    (Some(inv), false) => join(inv.iter().map(|k| format!("C{k}")), " x "),
                    (None, false) => "non-abelian".to_string(),
                };
                let _ = writeln!(
                    s,
                    "semidirect: {} : {} [{}] normal <{}> complement <{}>",
                    c.normal_order,
                    c.complement_order,
                    kind,
                    join(&c.normal_generators, ", "),
                    join(&c.complement_generators, ", ")
                );
            }
            if let Some(m) = multipliers {
                let _ = writeln!(s, "multipliers: {}", join(m, " "));
            }
            s
        }
    }
}

pub fn render_homology(p: &HomologyProfile, form: Option<&FormClass>, format: Format) -> String {
    let gram = |f: &FormClass| -> Vec<Vec<String>> {
        (0..f.gram.rows()).map(|i| (0..f.gram.cols()).map(|j| f.gram.get(i, j).to_string()).collect()).collect()
    };
    match format {
        Format::Json => {
            let form = form.map(|f| {
                json!({
                    "rank": f.rank,
                    "parity": f.parity,
                    "signature": f.signature,
                    "determinant": f.determinant.to_string(),
                    "gram": gram(f),
                })
            });
            envelope("homology", json!({ "profile": p, "intersection_form": form }))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "betti: ({})", join(&p.betti, ","));
            let torsion: Vec<String> = p
                .torsion
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.is_empty())
                .map(|(k, t)| format!("H{k}: {}", join(t.iter().map(|q| format!("Z/{q}")), " + ")))
                .collect();
            let _ = writeln!(s, "torsion: {}", if torsion.is_empty() { "none".to_string() } else { torsion.join(", ") });
            let _ = writeln!(s, "chi: {}", p.chi);
            if let Some(f) = form {
                let _ = writeln!(s, "form rank: {}", f.rank);
                let _ = writeln!(s, "form parity: {}", f.parity);
                let _ = writeln!(s, "form signature: {}", f.signature);
                let _ = writeln!(s, "form determinant: {}", f.determinant);
                let rows: Vec<String> = gram(f).iter().map(|r| format!("[{}]", r.join(","))).collect();
                let _ = writeln!(s, "gram: [{}]", rows.join(","));
            }
            s
        }
    }
}

fn refutation_name(r: &Refutation) -> &'static str {
    match r {
        Refutation::FVector { .. } => "f-vector",
        Refutation::DegreeSequence { .. } => "degree sequence",
        Refutation::ValenceVectors { .. } => "valence vectors",
        Refutation::Exhausted => "exhausted search",
    }
}

pub fn render_iso(iso: &Isomorphism, format: Format) -> String {
    match format {
        Format::Json => envelope("iso", to_value(iso)),
        Format::Text => match iso {
            Isomorphism::Bijection(p) => format!("isomorphic: yes\nbijection: {p}\n"),
            Isomorphism::Refuted(r) => {
                let mut s = format!("isomorphic: no\nrefuted by: {}\n", refutation_name(r));
                match r {
                    Refutation::FVector { left, right } => {
                        let _ = writeln!(s, "left: {left}\nright: {right}");
                    }
                    Refutation::DegreeSequence { left, right } => {
                        let _ = writeln!(s, "left: ({})\nright: ({})", join(left, ","), join(right, ","));
                    }
                    Refutation::ValenceVectors { .. } | Refutation::Exhausted => {}
                }
                s
            }
        },
    }
}
