//! Range verification suites behind `gmlat verify`.

use gm_catalog::{
    admissible_range, disc_structure_failure, gram_ld, k3_association, mukai_checks,
    verify_marked_equals_labelled, GMDiscriminant,
};
use gm_counting::{disc_surjectivity, satisfies_star_star};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    DiscStructure,
    MarkingGroup,
    GlueExtension,
    K3Association,
    Surjectivity,
    Mukai,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "disc-structure" => Suite::DiscStructure,
            "marking-group" => Suite::MarkingGroup,
            "glue-extension" => Suite::GlueExtension,
            "k3-association" => Suite::K3Association,
            "surjectivity" => Suite::Surjectivity,
            "mukai" => Suite::Mukai,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::DiscStructure => "disc-structure",
            Suite::MarkingGroup => "marking-group",
            Suite::GlueExtension => "glue-extension",
            Suite::K3Association => "k3-association",
            Suite::Surjectivity => "surjectivity",
            Suite::Mukai => "mukai",
        }
    }

    /// Documented feasibility bound on the range end.
    pub fn max_d(&self) -> u64 {
        match self {
            Suite::DiscStructure => 400,
            Suite::MarkingGroup => 200,
            Suite::GlueExtension => 200,
            Suite::K3Association => 120,
            Suite::Surjectivity => 60,
            Suite::Mukai => u64::MAX,
        }
    }

    pub fn all_names() -> &'static str {
        "disc-structure | marking-group | glue-extension | k3-association | surjectivity | mukai"
    }
}

pub struct CaseResult {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

fn variants_of(d: u64) -> Vec<u8> {
    match GMDiscriminant::new(d) {
        Ok(disc) => (1..=disc.variants).collect(),
        Err(_) => vec![],
    }
}

/// Run one suite over `[start, end]`; deterministic order (d ascending,
/// variant 1 before 2). Returns one result per case.
pub fn run_suite(suite: Suite, start: u64, end: u64, cap: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    match suite {
        Suite::Mukai => {
            let (pass, detail) = match mukai_checks() {
                Ok(rep) => (
                    rep.pass(),
                    format!(
                        "complement {:?} even={} glue b/q-reversing={}/{} disc-action-trivial={} orientation={}",
                        rep.complement_signature,
                        rep.complement_even,
                        rep.glue_b_reversing,
                        rep.glue_q_reversing,
                        rep.disc_action_trivial,
                        rep.orientation_sign
                    ),
                ),
                Err(e) => (false, e.to_string()),
            };
            out.push(CaseResult { label: "mukai".into(), pass, detail });
        }
        Suite::DiscStructure => {
            for disc in admissible_range(start.max(8), end) {
                for v in variants_of(disc.d) {
                    let (pass, detail) = match disc_structure_failure(disc.d, v) {
                        Ok(None) => (true, "closed form matches".into()),
                        Ok(Some(why)) => (false, why),
                        Err(e) => (false, e.to_string()),
                    };
                    out.push(CaseResult { label: format!("d={} v{}", disc.d, v), pass, detail });
                }
            }
        }
        Suite::MarkingGroup => {
            for disc in admissible_range(start.max(8), end) {
                for v in variants_of(disc.d) {
                    let (pass, detail) = match gm_catalog::marking_group(disc.d, v, cap) {
                        Ok(_) => (true, "order 2, acts as -id on Disc".into()),
                        Err(e) => (false, e.to_string()),
                    };
                    out.push(CaseResult { label: format!("d={} v{}", disc.d, v), pass, detail });
                }
            }
        }
        Suite::GlueExtension => {
            for disc in admissible_range(start.max(8), end) {
                for v in variants_of(disc.d) {
                    let (pass, detail) = match verify_marked_equals_labelled(disc.d, v, cap) {
                        Ok(rep) => (
                            rep.pass(),
                            format!(
                                "glue order {} b-reversing={} extends={}",
                                rep.glue_order, rep.b_reversing, rep.extends
                            ),
                        ),
                        Err(e) => (false, e.to_string()),
                    };
                    out.push(CaseResult { label: format!("d={} v{}", disc.d, v), pass, detail });
                }
            }
        }
        Suite::K3Association => {
            for disc in admissible_range(start.max(8), end) {
                let (pass, detail) = match k3_association(disc.d) {
                    Ok(v) => (true, format!("associated={} agrees with (**)={}", v, satisfies_star_star(disc.d))),
                    Err(e) => (false, e.to_string()),
                };
                out.push(CaseResult { label: format!("d={}", disc.d), pass, detail });
            }
        }
        Suite::Surjectivity => {
            for disc in admissible_range(start.max(8), end) {
                let (pass, detail) = match gram_ld(disc.d, 1) {
                    Ok(l) => match disc_surjectivity(&l, cap) {
                        Ok(true) => (true, "O(L_d) surjects onto O(Disc L_d)".into()),
                        Ok(false) => (false, "image is a proper subgroup".into()),
                        Err(e) => (false, e.to_string()),
                    },
                    Err(e) => (false, e.to_string()),
                };
                out.push(CaseResult { label: format!("d={}", disc.d), pass, detail });
            }
        }
    }
    out
}
