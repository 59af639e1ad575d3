//! Survey of additively graceful non-divisible sum graphs, persisted as an
//! append-only JSON-lines catalog keyed by `(m, n)`.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, ErrorKind, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{solve, Goal, SearchConfig, SearchStatus};
use crate::error::{Error, Result};
use crate::graph::VertexLabeling;
use crate::ndsg::{build_gmn, is_complement_reducible, NdsgParams};
use crate::verify::{additive_bound_holds, LabelingMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// One catalog line. Field order is the serialised key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub m: u64,
    pub n: u64,
    pub p: usize,
    pub q: usize,
    pub connected: bool,
    pub complement_reducible: bool,
    pub bound_ok: bool,
    pub additively_graceful: Verdict,
    pub witness: Option<VertexLabeling>,
}

impl SurveyRecord {
    pub fn params(&self) -> (u64, u64) {
        (self.m, self.n)
    }
}

/// Builds `G(m, n)`, records its structure and searches for an additively
/// graceful labeling. `config.mode` and `config.goal` are overridden.
pub fn survey_one(params: NdsgParams, config: &SearchConfig) -> Result<SurveyRecord> {
    let graph = build_gmn(params)?;
    let stats = graph.stats();
    let bound_ok = additive_bound_holds(&graph);
    let mut config = config.clone();
    config.mode = LabelingMode::AdditivelyGraceful;
    config.goal = Goal::FindOne;
    let outcome = solve(&graph, &config)?;
    let verdict = match outcome.status {
        SearchStatus::Found => Verdict::Yes,
        SearchStatus::ExhaustedNone => Verdict::No,
        SearchStatus::BudgetExceeded => Verdict::Unknown,
    };
    Ok(SurveyRecord {
        m: params.m,
        n: params.n,
        p: stats.p,
        q: stats.q,
        connected: stats.connected,
        complement_reducible: is_complement_reducible(&graph)?,
        bound_ok,
        additively_graceful: verdict,
        witness: outcome.witnesses.into_iter().next(),
    })
}

/// Surveys every `(m, n)` pair, `m` outermost, in the given order.
pub fn survey_gmn(ms: &[u64], ns: &[u64], config: &SearchConfig) -> Result<Vec<SurveyRecord>> {
    if ms.is_empty() || ns.is_empty() {
        return Err(Error::InvalidParameter(
            "survey ranges must be nonempty".into(),
        ));
    }
    let mut out = Vec::with_capacity(ms.len() * ns.len());
    for &m in ms {
        for &n in ns {
            out.push(survey_one(NdsgParams::new(m, n)?, config)?);
        }
    }
    Ok(out)
}

/// JSON-lines catalog. Lines are only ever appended; when a key appears more
/// than once the last line wins.
pub struct Catalog {
    path: PathBuf,
    records: Vec<SurveyRecord>,
}

impl Catalog {
    /// Loads the catalog at `path`; a missing file is an empty catalog.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut records = Vec::new();
        match File::open(&path) {
            Ok(file) => {
                for (idx, line) in BufReader::new(file).lines().enumerate() {
                    let line = line?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    let record = serde_json::from_str(&line).map_err(|source| Error::Catalog {
                        line: idx + 1,
                        source,
                    })?;
                    records.push(record);
                }
            }
            Err(e) if e.kind() == ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        Ok(Catalog { path, records })
    }

    pub fn records(&self) -> &[SurveyRecord] {
        &self.records
    }

    pub fn get(&self, m: u64, n: u64) -> Option<&SurveyRecord> {
        self.records.iter().rev().find(|r| r.params() == (m, n))
    }

    pub fn append(&mut self, record: SurveyRecord) -> Result<()> {
        let line = serde_json::to_string(&record)?;
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        writeln!(file, "{line}")?;
        file.flush()?;
        self.records.push(record);
        Ok(())
    }

    /// Surveys every requested pair, reusing catalogued records unless
    /// `force` is set and appending whatever was computed. Returns the
    /// records for the requested pairs in request order.
    pub fn survey(
        &mut self,
        ms: &[u64],
        ns: &[u64],
        config: &SearchConfig,
        force: bool,
    ) -> Result<Vec<SurveyRecord>> {
        if ms.is_empty() || ns.is_empty() {
            return Err(Error::InvalidParameter(
                "survey ranges must be nonempty".into(),
            ));
        }
        let mut out = Vec::with_capacity(ms.len() * ns.len());
        for &m in ms {
            for &n in ns {
                let params = NdsgParams::new(m, n)?;
                if !force {
                    if let Some(existing) = self.get(m, n) {
                        out.push(existing.clone());
                        continue;
                    }
                }
                let record = survey_one(params, config)?;
                self.append(record.clone())?;
                out.push(record);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    fn config() -> SearchConfig {
        SearchConfig::new(LabelingMode::AdditivelyGraceful, Goal::FindOne)
    }

    #[test]
    fn figure_10_graphs_are_yes() {
        for (m, n) in [(2, 3), (6, 3), (6, 4)] {
            let r = survey_one(NdsgParams::new(m, n).unwrap(), &config()).unwrap();
            assert_eq!(r.additively_graceful, Verdict::Yes, "G({m},{n})");
            assert!(r.complement_reducible);
            let g = build_gmn(NdsgParams::new(m, n).unwrap()).unwrap();
            let w = r.witness.unwrap();
            assert!(
                verify(&g, &w, LabelingMode::AdditivelyGraceful)
                    .unwrap()
                    .valid
            );
        }
    }

    #[test]
    fn budget_gives_unknown() {
        let r = survey_one(
            NdsgParams::new(7, 7).unwrap(),
            &config().with_node_budget(3),
        )
        .unwrap();
        assert_eq!(r.additively_graceful, Verdict::Unknown);
        assert!(r.witness.is_none());
    }

    #[test]
    fn record_key_order_is_stable() {
        let r = survey_one(NdsgParams::new(2, 3).unwrap(), &config()).unwrap();
        let line = serde_json::to_string(&r).unwrap();
        assert_eq!(
            line,
            r#"{"m":2,"n":3,"p":3,"q":2,"connected":true,"complement_reducible":true,"bound_ok":true,"additively_graceful":"yes","witness":[1,0,2]}"#
        );
    }

    #[test]
    fn catalog_is_append_only_and_idempotent() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.jsonl");
        let mut cat = Catalog::open(&path).unwrap();
        let first = cat.survey(&[2, 6], &[3, 4], &config(), false).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 4);

        let mut cat = Catalog::open(&path).unwrap();
        let again = cat.survey(&[2, 6], &[3, 4], &config(), false).unwrap();
        assert_eq!(first, again);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), text);

        let forced = cat.survey(&[6], &[4], &config(), true).unwrap();
        assert_eq!(forced[0], *cat.get(6, 4).unwrap());
        let after = std::fs::read_to_string(&path).unwrap();
        assert!(after.starts_with(&text));
        assert_eq!(after.lines().count(), 5);
    }

    #[test]
    fn catalog_reports_bad_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.jsonl");
        std::fs::write(&path, "{\"m\":2}\n").unwrap();
        assert!(matches!(
            Catalog::open(&path),
            Err(Error::Catalog { line: 1, .. })
        ));
    }
}
