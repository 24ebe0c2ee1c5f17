//! Sieve acquisition with transparent caching. A cache whose magic,
//! version, or limit does not fit the request is rebuilt silently.

use std::path::{Path, PathBuf};

use mpf_exact::SpfSieve;

use crate::config::JobConfig;
use crate::error::CliError;

pub const CACHE_DIR_ENV: &str = "MPF_CACHE_DIR";

fn cache_path(config: &JobConfig, limit: u64) -> Option<PathBuf> {
    if let Some(p) = &config.sieve_cache {
        return Some(p.clone());
    }
    std::env::var_os(CACHE_DIR_ENV).map(|dir| Path::new(&dir).join(format!("spf-{limit}.bin")))
}

/// Load a cached sieve covering `limit`, or build one (in parallel) and
/// cache it when a cache location is configured.
pub fn acquire(config: &JobConfig, limit: u64) -> Result<SpfSieve, CliError> {
    let path = cache_path(config, limit);
    if let Some(p) = &path {
        if p.exists() {
            if let Ok(sieve) = SpfSieve::load_cache(p) {
                if sieve.limit() >= limit {
                    return Ok(sieve);
                }
            }
            // bad magic/version/limit: fall through and rebuild
        }
    }
    let sieve = SpfSieve::build_parallel(limit)?;
    if let Some(p) = &path {
        if let Some(parent) = p.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)?;
            }
        }
        sieve.save_cache(p).map_err(mpf_exact::ExactError::from)?;
    }
    Ok(sieve)
}
