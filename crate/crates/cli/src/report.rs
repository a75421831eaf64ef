use serde::{Deserialize, Serialize};
use thetasg::{Params, ParamsError, SemigroupProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ClosedForm,
    VerifiedAgainstOracle,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::ClosedForm => "closed-form",
            Mode::VerifiedAgainstOracle => "verified-against-oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembersBelow {
    pub limit: u128,
    pub values: Vec<u128>,
}

/// Machine-readable record of one semigroup. Field names are a stable interface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub a: u128,
    pub b: u128,
    pub c: u128,
    pub k_tilde: usize,
    pub embedding_dimension: usize,
    pub minimal_generators: Vec<u128>,
    pub apery_set: Vec<u128>,
    pub frobenius: u128,
    pub genus: u128,
    pub conductor: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gaps: Option<Vec<u128>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<MembersBelow>,
    pub metadata: Metadata,
}

impl Report {
    pub fn new(profile: SemigroupProfile, mode: Mode) -> Self {
        let p = profile.params;
        Report {
            a: p.a(),
            b: p.b(),
            c: p.c(),
            k_tilde: profile.k_tilde,
            embedding_dimension: profile.embedding_dimension(),
            minimal_generators: profile.min_generators,
            apery_set: profile.apery,
            frobenius: profile.frobenius,
            genus: profile.genus,
            conductor: profile.conductor,
            gaps: None,
            members: None,
            metadata: Metadata {
                version: env!("CARGO_PKG_VERSION").to_string(),
                mode,
            },
        }
    }

    pub fn params(&self) -> Result<Params, ParamsError> {
        Params::new(self.a, self.b, self.c)
    }

    pub fn profile(&self) -> Result<SemigroupProfile, ParamsError> {
        Ok(SemigroupProfile {
            params: self.params()?,
            k_tilde: self.k_tilde,
            min_generators: self.minimal_generators.clone(),
            apery: self.apery_set.clone(),
            frobenius: self.frobenius,
            genus: self.genus,
            conductor: self.conductor,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: String| {
            out.push_str(&format!("{key:<21}{value}\n"));
        };
        line(
            "semigroup",
            format!("G_{{{},{}}}({})", self.a, self.b, self.c),
        );
        line("minimal generators", join(&self.minimal_generators));
        line("embedding dimension", self.embedding_dimension.to_string());
        line("k_tilde", self.k_tilde.to_string());
        line("apery set", join(&self.apery_set));
        line("frobenius", self.frobenius.to_string());
        line("genus", self.genus.to_string());
        line("conductor", self.conductor.to_string());
        if let Some(gaps) = &self.gaps {
            line("gaps", join(gaps));
        }
        if let Some(m) = &self.members {
            line(&format!("members below {}", m.limit), join(&m.values));
        }
        line("mode", self.metadata.mode.as_str().to_string());
        out
    }
}

pub(crate) fn join(values: &[u128]) -> String {
    values
        .iter()
        .map(u128::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
