//! On-disk cache of the SPF table.
//!
//! Layout: magic "MPFS", format version (u32 LE), limit N (u64 LE), then
//! N-1 little-endian u32 entries for indices 2..=N. The loader validates
//! magic and version and spot-checks 100 random entries against the SPF
//! invariant before trusting the table.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use rand::Rng;
use thiserror::Error;

use crate::SpfSieve;

pub const MAGIC: &[u8; 4] = b"MPFS";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad magic bytes (not an SPF cache)")]
    BadMagic,
    #[error("unsupported cache version {0}")]
    BadVersion(u32),
    #[error("truncated cache file")]
    Truncated,
    #[error("entry for {n} fails the smallest-prime-factor invariant")]
    CorruptEntry { n: u64 },
}

impl SpfSieve {
    pub fn save_cache(&self, path: &Path) -> Result<(), CacheError> {
        let mut w = BufWriter::new(File::create(path)?);
        w.write_all(MAGIC)?;
        w.write_all(&FORMAT_VERSION.to_le_bytes())?;
        w.write_all(&self.limit().to_le_bytes())?;
        let raw = self.raw();
        let mut buf = Vec::with_capacity(4 << 16);
        for chunk in raw[2..].chunks(1 << 16) {
            buf.clear();
            for &e in chunk {
                buf.extend_from_slice(&e.to_le_bytes());
            }
            w.write_all(&buf)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn load_cache(path: &Path) -> Result<Self, CacheError> {
        let mut r = BufReader::new(File::open(path)?);
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic).map_err(|_| CacheError::Truncated)?;
        if &magic != MAGIC {
            return Err(CacheError::BadMagic);
        }
        let mut v4 = [0u8; 4];
        r.read_exact(&mut v4).map_err(|_| CacheError::Truncated)?;
        let version = u32::from_le_bytes(v4);
        if version != FORMAT_VERSION {
            return Err(CacheError::BadVersion(version));
        }
        let mut v8 = [0u8; 8];
        r.read_exact(&mut v8).map_err(|_| CacheError::Truncated)?;
        let limit = u64::from_le_bytes(v8);
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut buf = vec![0u8; 4 << 16];
        let mut idx = 2usize;
        while idx <= n {
            let want = ((n + 1 - idx) * 4).min(buf.len());
            r.read_exact(&mut buf[..want]).map_err(|_| CacheError::Truncated)?;
            for four in buf[..want].chunks_exact(4) {
                spf[idx] = u32::from_le_bytes(four.try_into().unwrap());
                idx += 1;
            }
        }
        let sieve = SpfSieve::from_raw(limit, spf);
        sieve.spot_check(100)?;
        Ok(sieve)
    }

    /// Verify the SPF invariant on `samples` random entries: spf(n) divides
    /// n and no smaller prime does. A least factor above sqrt(n) forces n
    /// prime, hence spf(n) = n.
    fn spot_check(&self, samples: u32) -> Result<(), CacheError> {
        let mut rng = rand::thread_rng();
        for _ in 0..samples {
            let n = rng.gen_range(2..=self.limit());
            let p = self.raw()[n as usize] as u64;
            if !self.entry_valid(n, p) {
                return Err(CacheError::CorruptEntry { n });
            }
        }
        Ok(())
    }

    fn entry_valid(&self, n: u64, p: u64) -> bool {
        if p < 2 || p > n || n % p != 0 {
            return false;
        }
        if p * p > n {
            // least factor above sqrt(n) implies n prime
            if p != n {
                return false;
            }
            let mut d = 2u64;
            while d * d <= n {
                if n % d == 0 {
                    return false;
                }
                d += 1;
            }
            true
        } else {
            (2..p).all(|d| n % d != 0)
        }
    }
}
