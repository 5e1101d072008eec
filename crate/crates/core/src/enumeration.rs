//! Enumeration of all reduced images of a code, up to isomorphism.
//!
//! Every morphism is given by a list of trunks, and its reduced image only
//! depends on the set of trunks after dropping empty ones, the whole code,
//! duplicates, and trunks that are intersections of other chosen trunks
//! (those only add trivial or redundant neurons). So the search walks the
//! irredundant subsets of the nonempty proper trunks. For such a subset the
//! image is already reduced, with one neuron per chosen trunk.
//!
//! Irredundancy is closed upward (a redundant set stays redundant when
//! trunks are added), so the depth-first walk stops at the first redundant
//! extension.

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bits::WordSet;
use crate::code::{Code, Codeword};
use crate::error::{CodeError, Result};
use crate::morphism::Morphism;
use crate::reduction::{
    canonical_cmp, canonical_form, canonical_key, canonicalize_reduced, CanonicalForm,
};
use crate::trunks::{all_trunks, Trunk};

pub const DEFAULT_MAX_TRUNKS: usize = 24;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "CODECAT_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    /// Refuse codes with more trunks than this (empty trunk included).
    pub max_trunks: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_trunks: DEFAULT_MAX_TRUNKS,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub subsets_explored: u64,
    pub subsets_pruned: u64,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageSet {
    pub source: CanonicalForm,
    /// Canonical reduced images, sorted by [`canonical_cmp`].
    pub images: Vec<Code>,
    pub stats: EnumerationStats,
}

impl ImageSet {
    pub fn contains(&self, canonical: &Code) -> bool {
        self.images
            .binary_search_by(|c| canonical_cmp(c, canonical))
            .is_ok()
    }
}

struct Search<'a> {
    code: &'a Code,
    candidates: Vec<Trunk>,
    full: WordSet,
    memo: &'a DashMap<Code, Code>,
}

#[derive(Default)]
struct Local {
    images: HashSet<Code>,
    explored: u64,
    pruned: u64,
}

impl<'a> Search<'a> {
    fn new(code: &'a Code, memo: &'a DashMap<Code, Code>) -> Self {
        let full = WordSet::full(code.len());
        let candidates = all_trunks(code)
            .into_iter()
            .filter(|t| !t.is_empty() && *t.members() != full)
            .collect();
        Search {
            code,
            candidates,
            full,
            memo,
        }
    }

    fn set(&self, i: usize) -> &WordSet {
        self.candidates[i].members()
    }

    /// Whether `chosen ∪ {t}` stays irredundant, given `chosen` is.
    fn can_add(&self, chosen: &[usize], t: usize) -> bool {
        let new = self.set(t);
        let mut meet = self.full.clone();
        let mut above = false;
        for &c in chosen {
            if new.is_subset(self.set(c)) {
                meet.intersect_with(self.set(c));
                above = true;
            }
        }
        if above && meet == *new {
            return false;
        }
        for &x in chosen {
            let xs = self.set(x);
            if !xs.is_subset(new) {
                continue;
            }
            let mut meet = new.clone();
            for &y in chosen {
                if y != x && xs.is_subset(self.set(y)) {
                    meet.intersect_with(self.set(y));
                }
            }
            if meet == *xs {
                return false;
            }
        }
        true
    }

    fn raw_image(&self, chosen: &[usize]) -> Code {
        let words = (0..self.code.len()).map(|i| {
            let bits = chosen
                .iter()
                .enumerate()
                .filter(|(_, &t)| self.set(t).contains(i))
                .fold(0u64, |acc, (j, _)| acc | 1 << j);
            Codeword::from_bits(bits)
        });
        Code::new(chosen.len(), words).expect("at most 64 chosen trunks")
    }

    fn canonical_image(&self, chosen: &[usize]) -> Code {
        let raw = self.raw_image(chosen);
        if let Some(c) = self.memo.get(&raw) {
            return c.clone();
        }
        let canon = canonicalize_reduced(&raw).code;
        self.memo.insert(raw, canon.clone());
        canon
    }

    fn explore(&self, chosen: &mut Vec<usize>, start: usize, out: &mut Local) {
        out.explored += 1;
        out.images.insert(self.canonical_image(chosen));
        for t in start..self.candidates.len() {
            if self.can_add(chosen, t) {
                chosen.push(t);
                self.explore(chosen, t + 1, out);
                chosen.pop();
            } else {
                out.pruned += 1;
            }
        }
    }

    /// Depth-first search for a subset of exactly `size` trunks whose image
    /// has canonical form `target`.
    fn find(&self, chosen: &mut Vec<usize>, start: usize, size: usize, target: &Code) -> bool {
        if chosen.len() == size {
            return self.canonical_image(chosen) == *target;
        }
        for t in start..self.candidates.len() {
            if self.candidates.len() - t < size - chosen.len() {
                break;
            }
            if self.can_add(chosen, t) {
                chosen.push(t);
                if self.find(chosen, t + 1, size, target) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    fn run(&self) -> Local {
        // The first two levels are walked here; every two-trunk prefix then
        // becomes an independent task.
        let mut top = Local::default();
        let mut tasks = Vec::new();
        let mut chosen = Vec::new();
        top.explored += 1;
        top.images.insert(self.canonical_image(&chosen));
        for a in 0..self.candidates.len() {
            chosen.push(a);
            top.explored += 1;
            top.images.insert(self.canonical_image(&chosen));
            for b in a + 1..self.candidates.len() {
                if self.can_add(&chosen, b) {
                    tasks.push((a, b));
                } else {
                    top.pruned += 1;
                }
            }
            chosen.pop();
        }
        let parts: Vec<Local> = tasks
            .par_iter()
            .map(|&(a, b)| {
                let mut out = Local::default();
                let mut chosen = vec![a, b];
                self.explore(&mut chosen, b + 1, &mut out);
                out
            })
            .collect();
        for p in parts {
            top.images.extend(p.images);
            top.explored += p.explored;
            top.pruned += p.pruned;
        }
        top
    }
}

fn check_cap(code: &Code, config: &EnumerationConfig) -> Result<()> {
    let count = all_trunks(code).len();
    if count > config.max_trunks {
        return Err(CodeError::ResourceCap {
            what: "trunk count",
            count,
            cap: config.max_trunks,
        });
    }
    Ok(())
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| CodeError::InvalidInput(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// All reduced images of `code` under morphisms, as canonical forms.
pub fn enumerate_reduced_images(code: &Code, config: &EnumerationConfig) -> Result<ImageSet> {
    check_cap(code, config)?;
    let started = Instant::now();
    let memo = DashMap::new();
    let search = Search::new(code, &memo);
    let local = with_jobs(config.jobs, || search.run())?;
    let mut images: Vec<Code> = local.images.into_iter().collect();
    images.sort_by(canonical_cmp);
    Ok(ImageSet {
        source: canonical_form(code),
        images,
        stats: EnumerationStats {
            subsets_explored: local.explored,
            subsets_pruned: local.pruned,
            wall_time_ms: started.elapsed().as_millis() as u64,
        },
    })
}

/// Like [`enumerate_reduced_images`], reading and writing `cache` when given.
pub fn enumerate_cached(
    code: &Code,
    config: &EnumerationConfig,
    cache: Option<&ImageCache>,
) -> Result<ImageSet> {
    if let Some(cache) = cache {
        let key = canonical_form(code).code;
        if let Some(hit) = cache.load(&key)? {
            return Ok(hit);
        }
        let set = enumerate_reduced_images(code, config)?;
        cache.store(&set)?;
        Ok(set)
    } else {
        enumerate_reduced_images(code, config)
    }
}

/// Images of `target` that are not images of any baseline.
pub fn image_set_difference(
    target: &Code,
    baselines: &[Code],
    config: &EnumerationConfig,
    cache: Option<&ImageCache>,
) -> Result<Vec<Code>> {
    let mine = enumerate_cached(target, config, cache)?;
    let mut others = Vec::with_capacity(baselines.len());
    for b in baselines {
        others.push(enumerate_cached(b, config, cache)?);
    }
    Ok(mine
        .images
        .into_iter()
        .filter(|c| !others.iter().any(|o| o.contains(c)))
        .collect())
}

/// A morphism from `source` onto a code isomorphic to `target`, if any.
pub fn verify_image_membership(
    source: &Code,
    target: &Code,
    config: &EnumerationConfig,
) -> Result<Option<Morphism>> {
    let target = canonical_form(target).code;
    if target.len() > source.len() {
        return Ok(None);
    }
    check_cap(source, config)?;
    let memo = DashMap::new();
    let search = Search::new(source, &memo);
    let mut chosen = Vec::new();
    if !search.find(&mut chosen, 0, target.n(), &target) {
        return Ok(None);
    }
    let trunks = chosen
        .iter()
        .map(|&i| search.candidates[i].clone())
        .collect();
    Morphism::new(source.clone(), trunks).map(Some)
}

/// On-disk store of image sets keyed by the canonical form of the source.
#[derive(Clone, Debug)]
pub struct ImageCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: String,
    image_set: ImageSet,
}

impl ImageCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ImageCache { dir: dir.into() }
    }

    /// `$CODECAT_CACHE_DIR`, else `$XDG_CACHE_HOME/codecat`, else `~/.cache/codecat`.
    pub fn default_dir() -> Option<PathBuf> {
        let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty());
        env(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .or_else(|| env("XDG_CACHE_HOME").map(|d| PathBuf::from(d).join("codecat")))
            .or_else(|| env("HOME").map(|h| PathBuf::from(h).join(".cache").join("codecat")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{hex}.json"))
    }

    pub fn load(&self, canonical_source: &Code) -> Result<Option<ImageSet>> {
        let key = canonical_key(canonical_source);
        let path = self.path_for(&key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(CodeError::Cache(format!("{}: {e}", path.display()))),
        };
        match serde_json::from_str::<CacheEntry>(&text) {
            Ok(entry) if entry.key == key => Ok(Some(entry.image_set)),
            // Corrupt or colliding entries are recomputed.
            _ => Ok(None),
        }
    }

    pub fn store(&self, set: &ImageSet) -> Result<()> {
        let io = |e: std::io::Error| CodeError::Cache(format!("{}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let key = canonical_key(&set.source.code);
        let path = self.path_for(&key);
        let entry = CacheEntry {
            key,
            image_set: set.clone(),
        };
        let body = serde_json::to_vec(&entry).expect("image sets serialize");
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(&body).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(())
    }
}
