//! Term-file lookup: bundled, then cached, then (only when allowed) fetched.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use msection::oeis::{self, OeisFixture, Provenance};
use msection::Error;

use crate::CliError;

pub struct FixtureSource {
    pub cache_dir: Option<PathBuf>,
    pub fetch: bool,
}

impl FixtureSource {
    pub fn offline() -> Self {
        Self { cache_dir: None, fetch: false }
    }

    pub fn load(&self, a_number: &str) -> Result<OeisFixture, CliError> {
        let id = oeis::normalize_a_number(a_number)
            .ok_or_else(|| CliError::Usage(format!("not an A-number: {a_number}")))?;
        match oeis::bundled(&id) {
            Ok(f) => return Ok(f),
            Err(Error::FixtureUnavailable(_)) => {}
            Err(e) => return Err(e.into()),
        }
        let cached = self.cache_dir.as_ref().map(|d| cache_path(d, &id));
        if let Some(path) = cached.as_ref().filter(|p| p.exists()) {
            let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            return Ok(oeis::parse_fixture(&id, &text, Provenance::Cached)?);
        }
        if !self.fetch {
            return Err(Error::FixtureUnavailable(id).into());
        }
        let text = fetch_bfile(&id)?;
        let fixture = oeis::parse_fixture(&id, &text, Provenance::Fetched)?;
        if let Some(path) = cached {
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
            }
            fs::write(&path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
        Ok(fixture)
    }
}

/// `$XDG_CACHE_HOME/msection/oeis`, falling back to `~/.cache`.
pub fn default_cache_dir() -> Option<PathBuf> {
    std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .map(|base| base.join("msection").join("oeis"))
}

fn cache_path(dir: &Path, id: &str) -> PathBuf {
    dir.join(format!("b{}.txt", &id[1..]))
}

fn fetch_bfile(id: &str) -> Result<String, CliError> {
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let agent = ureq::AgentBuilder::new().timeout(Duration::from_secs(30)).build();
    agent
        .get(&url)
        .call()
        .map_err(|e| CliError::Fetch(format!("{url}: {e}")))?
        .into_string()
        .map_err(|e| CliError::Fetch(format!("{url}: {e}")))
}
