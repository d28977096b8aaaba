//! Serializable report types. The JSON schema is versioned; timing and
//! cache statistics sit in their own top-level objects so golden-file
//! comparisons can mask them.

use serde::{Deserialize, Serialize};

use solvgraph_core::degrees::Rational;
use solvgraph_core::invariants::TwoStepResult;

use crate::checks::TheoremRow;
use crate::pipeline::GroupAnalysis;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct AnalysisReport {
    pub schema: u32,
    pub group: GroupDto,
    pub graph: Option<GraphDto>,
    pub invariants: Option<InvariantsDto>,
    pub certificate: Option<CertificateDto>,
    pub structural_bounds: Option<StructuralBoundsDto>,
    pub degrees: DegreesDto,
    pub theorems: Vec<TheoremDto>,
    pub timing: TimingDto,
    pub cache: CacheDto,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct GroupDto {
    pub name: String,
    pub spec: String,
    pub order: usize,
    pub degree: usize,
    pub radical_size: usize,
    pub solvable: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct GraphDto {
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct RationalDto {
    pub exact: String,
    pub approx: String,
}

impl RationalDto {
    pub fn from_rational(r: &Rational) -> Self {
        RationalDto {
            exact: r.to_string(),
            approx: r.approx_decimal(6),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct InvariantsDto {
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_histogram: Vec<(usize, usize)>,
    pub girth: Option<usize>,
    pub components: usize,
    pub diameter: Option<usize>,
    pub two_step: TwoStepDto,
    pub clique: CliqueDto,
    pub predicates: PredicatesDto,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct TwoStepDto {
    pub result: String,
    /// Element ids of the witness pair when the diameter exceeds 2.
    pub witness: Option<(u32, u32)>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct CliqueDto {
    pub size: usize,
    pub exact: bool,
    /// Element ids of the clique members.
    pub witness: Vec<u32>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct PredicatesDto {
    pub is_star: bool,
    pub is_regular: bool,
    pub is_complete_multipartite: bool,
    pub multipartite_parts: Option<usize>,
    pub has_isolated_vertex: bool,
    pub is_tree: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct CertificateDto {
    pub euler_bound: u64,
    pub clique_bound: u64,
    pub packing_bound: u64,
    pub best_lower_bound: u64,
    pub crosscap_euler_bound: u64,
    pub crosscap_clique_bound: u64,
    pub has_disjoint_2k5: bool,
    pub clique_size_found: usize,
    pub clique_exact: bool,
    pub packing_sizes: Vec<usize>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct StructuralBoundsDto {
    pub m_hypothesis: u64,
    pub heawood_cap: u64,
    pub t: usize,
    pub max_verified_clique: usize,
    pub clique_cap_ok: bool,
    pub radical_bound_ok: bool,
    pub subgroup_bound_ok: bool,
    pub sampled_subgroups: usize,
    pub order_bound_ok: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct DegreesDto {
    pub ps: RationalDto,
    pub pr: RationalDto,
    pub sum_solvabilizers: u64,
    pub integrality_ok: bool,
    pub lower_bound_ok: bool,
    pub ps_ge_pr_ok: bool,
    pub ps_eq_pr: bool,
    pub centralizers_match_solvabilizers: bool,
    pub equality_characterization_ok: bool,
    pub literal_equality_reading_ok: bool,
    pub sgroup_criterion_ok: bool,
    pub ceiling_ok: Option<bool>,
    pub edge_identity_ok: Option<bool>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct TheoremDto {
    pub key: String,
    pub anchor: String,
    pub group: String,
    pub status: String,
    pub gating: bool,
    pub detail: String,
}

impl TheoremDto {
    pub fn from_row(row: &TheoremRow) -> Self {
        TheoremDto {
            key: row.key.to_string(),
            anchor: row.anchor.to_string(),
            group: row.group.clone(),
            status: row.status.as_str().to_string(),
            gating: row.gating,
            detail: row.detail.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct TimingDto {
    pub total_ms: u64,
    pub matrix_ms: u64,
    pub invariants_ms: u64,
    pub certificate_ms: u64,
    pub degrees_ms: u64,
    pub checks_ms: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct CacheDto {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
    pub spot_checked: usize,
}

pub fn build_report(a: &GroupAnalysis) -> AnalysisReport {
    let group = GroupDto {
        name: a.group.name().to_string(),
        spec: a.spec_text.clone(),
        order: a.group.order(),
        degree: a.group.degree(),
        radical_size: a.radical.order(),
        solvable: a.solvable(),
    };
    let graph = a.graph.as_ref().map(|sg| GraphDto {
        vertices: sg.vertex_count(),
        edges: sg.edge_count(),
    });
    let invariants = a.invariants.as_ref().map(|inv| {
        let sg = a.graph.as_ref().expect("graph accompanies invariants");
        InvariantsDto {
            min_degree: inv.degrees.min,
            max_degree: inv.degrees.max,
            degree_histogram: inv.degrees.histogram.clone(),
            girth: inv.girth,
            components: inv.components,
            diameter: inv.diameter,
            two_step: match inv.two_step {
                TwoStepResult::AtMostTwo => TwoStepDto {
                    result: "<=2".to_string(),
                    witness: None,
                },
                TwoStepResult::ExceedsTwo { u, v } => TwoStepDto {
                    result: ">2".to_string(),
                    witness: Some((sg.vertex_element(u).0, sg.vertex_element(v).0)),
                },
            },
            clique: CliqueDto {
                size: inv.clique.size,
                exact: inv.clique.exact,
                witness: inv
                    .clique
                    .witness
                    .iter()
                    .map(|&i| sg.vertex_element(i).0)
                    .collect(),
            },
            predicates: PredicatesDto {
                is_star: inv.predicates.is_star,
                is_regular: inv.predicates.is_regular,
                is_complete_multipartite: inv.predicates.is_complete_multipartite,
                multipartite_parts: inv.predicates.multipartite_parts,
                has_isolated_vertex: inv.predicates.has_isolated_vertex,
                is_tree: inv.predicates.is_tree,
            },
        }
    });
    let certificate = a.certificate.as_ref().map(|c| CertificateDto {
        euler_bound: c.euler_bound,
        clique_bound: c.clique_bound,
        packing_bound: c.packing_bound,
        best_lower_bound: c.best_lower_bound,
        crosscap_euler_bound: c.crosscap_euler_bound,
        crosscap_clique_bound: c.crosscap_clique_bound,
        has_disjoint_2k5: c.has_disjoint_2k5,
        clique_size_found: c.clique_size_found,
        clique_exact: c.clique_exact,
        packing_sizes: c.packing_sizes.clone(),
    });
    let structural_bounds = a.structural_bounds.as_ref().map(|s| StructuralBoundsDto {
        m_hypothesis: s.m_hypothesis,
        heawood_cap: s.heawood_cap,
        t: s.t,
        max_verified_clique: s.max_verified_clique,
        clique_cap_ok: s.clique_cap_ok,
        radical_bound_ok: s.radical_bound_ok,
        subgroup_bound_ok: s.subgroup_bound_ok,
        sampled_subgroups: s.sampled_subgroups,
        order_bound_ok: s.order_bound_ok,
    });
    let d = &a.degrees;
    let degrees = DegreesDto {
        ps: RationalDto::from_rational(&d.ps),
        pr: RationalDto::from_rational(&d.pr),
        sum_solvabilizers: d.sum_solvabilizers,
        integrality_ok: d.integrality_ok,
        lower_bound_ok: d.lower_bound_ok,
        ps_ge_pr_ok: d.ps_ge_pr_ok,
        ps_eq_pr: d.ps_eq_pr,
        centralizers_match_solvabilizers: d.centralizers_match_solvabilizers,
        equality_characterization_ok: d.equality_characterization_ok,
        literal_equality_reading_ok: d.literal_equality_reading_ok,
        sgroup_criterion_ok: d.sgroup_criterion_ok,
        ceiling_ok: d.ceiling_ok,
        edge_identity_ok: d.edge_identity_ok,
    };
    AnalysisReport {
        schema: SCHEMA_VERSION,
        group,
        graph,
        invariants,
        certificate,
        structural_bounds,
        degrees,
        theorems: a.theorems.iter().map(TheoremDto::from_row).collect(),
        timing: TimingDto {
            total_ms: a.timing.total_ms,
            matrix_ms: a.timing.matrix_ms,
            invariants_ms: a.timing.invariants_ms,
            certificate_ms: a.timing.certificate_ms,
            degrees_ms: a.timing.degrees_ms,
            checks_ms: a.timing.checks_ms,
        },
        cache: CacheDto {
            hits: a.cache.hits,
            misses: a.cache.misses,
            entries: a.cache.entries,
            spot_checked: a.cache.spot_checked,
        },
    }
}

/// JSON adjacency export: vertices with labels plus a sorted edge list over
/// element ids.
#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct AdjacencyExport {
    pub schema: u32,
    pub group: GroupDto,
    pub vertices: Vec<VertexDto>,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct VertexDto {
    pub id: u32,
    pub label: String,
}

pub fn build_adjacency(a: &GroupAnalysis) -> Option<AdjacencyExport> {
    let sg = a.graph.as_ref()?;
    let vertices = sg
        .vertices()
        .iter()
        .map(|&u| VertexDto {
            id: u.0,
            label: a.group.element(u).cycle_notation(),
        })
        .collect();
    let mut edges = Vec::with_capacity(sg.edge_count());
    for i in 0..sg.vertex_count() {
        for j in sg.graph().neighbors(i).ones() {
            if j > i {
                edges.push((sg.vertex_element(i).0, sg.vertex_element(j).0));
            }
        }
    }
    Some(AdjacencyExport {
        schema: SCHEMA_VERSION,
        group: GroupDto {
            name: a.group.name().to_string(),
            spec: a.spec_text.clone(),
            order: a.group.order(),
            degree: a.group.degree(),
            radical_size: a.radical.order(),
            solvable: a.solvable(),
        },
        vertices,
        edges,
    })
}
