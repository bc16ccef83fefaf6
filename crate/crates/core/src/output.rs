//! JSON documents emitted by the command line tool. Every document carries
//! `schema_version` as its last field.

use serde::{Deserialize, Serialize};

use crate::cosets::{CosetRep, CosetTable};
use crate::cusps::classify_domain_cusps;
use crate::domain::{arc_census, Edge, GenusReport, GluingKind, GluingPair};
use crate::verify::{LevelReport, SweepSummary};
use crate::wfunc::WTable;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WEntry {
    pub j: i64,
    #[serde(rename = "W")]
    pub w: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WTableDoc {
    pub n: i64,
    pub entries: Vec<WEntry>,
    #[serde(rename = "M")]
    pub m: Vec<i64>,
    pub schema_version: u32,
}

impl WTableDoc {
    pub fn new(t: &WTable) -> Self {
        let n = t.modulus().get();
        WTableDoc {
            n,
            entries: (0..n).map(|j| WEntry { j, w: t.w(j) }).collect(),
            m: (0..n).map(|j| t.m(j)).collect(),
            schema_version: SCHEMA_VERSION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepEntry {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<i64>,
    pub word: String,
}

impl From<&CosetRep> for RepEntry {
    fn from(r: &CosetRep) -> Self {
        let word = r.to_string();
        match *r {
            CosetRep::I { i } => RepEntry { kind: "I".into(), i: Some(i), j: None, m: None, word },
            CosetRep::J { j, m } => RepEntry { kind: "J".into(), i: None, j: Some(j), m: Some(m), word },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetsDoc {
    pub n: i64,
    pub count: usize,
    pub reps: Vec<RepEntry>,
    pub schema_version: u32,
}

impl CosetsDoc {
    pub fn new(t: &CosetTable) -> Self {
        CosetsDoc {
            n: t.modulus().get(),
            count: t.len(),
            reps: t.reps().iter().map(RepEntry::from).collect(),
            schema_version: SCHEMA_VERSION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberEntry {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<i64>,
    #[serde(rename = "W")]
    pub w: i64,
    pub cusp: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub d: i64,
    pub b: i64,
    pub width: i64,
    pub members: Vec<MemberEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspsDoc {
    pub n: i64,
    pub count: usize,
    pub classes: Vec<ClassEntry>,
    pub schema_version: u32,
}

impl CuspsDoc {
    pub fn new(t: &CosetTable) -> Self {
        let classes: Vec<ClassEntry> = classify_domain_cusps(t.modulus(), t)
            .into_iter()
            .map(|(c, members)| ClassEntry {
                d: c.d,
                b: c.b,
                width: c.width,
                members: members
                    .into_iter()
                    .map(|m| MemberEntry { j: m.j, w: m.width, cusp: m.cusp.to_string() })
                    .collect(),
            })
            .collect();
        CuspsDoc { n: t.modulus().get(), count: classes.len(), classes, schema_version: SCHEMA_VERSION }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcEntry {
    pub arc: String,
    pub rep: String,
    pub edge: Edge,
    pub case: String,
    pub ray: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcsDoc {
    pub n: i64,
    pub count: usize,
    pub arcs: Vec<ArcEntry>,
    pub schema_version: u32,
}

impl ArcsDoc {
    pub fn new(t: &CosetTable) -> Self {
        let arcs: Vec<ArcEntry> = arc_census(t)
            .into_iter()
            .map(|(a, case)| ArcEntry {
                arc: a.to_string(),
                rep: a.rep.to_string(),
                edge: a.edge,
                case: case.label().to_string(),
                ray: a.is_ray(),
            })
            .collect();
        ArcsDoc { n: t.modulus().get(), count: arcs.len(), arcs, schema_version: SCHEMA_VERSION }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub arc1: String,
    pub arc2: String,
    pub kind: GluingKind,
    /// [[a, b], [c, d]]
    pub witness: [[i64; 2]; 2],
}

impl From<&GluingPair> for PairEntry {
    fn from(p: &GluingPair) -> Self {
        let g = p.witness;
        PairEntry {
            arc1: p.arc1.to_string(),
            arc2: p.arc2.to_string(),
            kind: p.kind,
            witness: [[g.a, g.b], [g.c, g.d]],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingDoc {
    pub n: i64,
    pub count: usize,
    pub pairs: Vec<PairEntry>,
    pub schema_version: u32,
}

impl GluingDoc {
    pub fn new(n: i64, pairs: &[GluingPair]) -> Self {
        GluingDoc {
            n,
            count: pairs.len(),
            pairs: pairs.iter().map(PairEntry::from).collect(),
            schema_version: SCHEMA_VERSION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusDoc {
    pub n: i64,
    pub genus: i64,
    pub faces: i64,
    pub edges: i64,
    pub vertices: i64,
    pub euler_characteristic: i64,
    pub schema_version: u32,
}

impl From<&GenusReport> for GenusDoc {
    fn from(r: &GenusReport) -> Self {
        GenusDoc {
            n: r.n,
            genus: r.genus,
            faces: r.faces,
            edges: r.edges,
            vertices: r.vertices,
            euler_characteristic: r.euler_characteristic(),
            schema_version: SCHEMA_VERSION,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub reports: Vec<LevelReport>,
    pub summary: SweepSummary,
    pub schema_version: u32,
}

impl VerifyDoc {
    pub fn new(reports: Vec<LevelReport>, summary: SweepSummary) -> Self {
        VerifyDoc { reports, summary, schema_version: SCHEMA_VERSION }
    }
}
