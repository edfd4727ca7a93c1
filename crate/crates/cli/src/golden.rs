use std::path::{Path, PathBuf};

use kdual_core::paper_rings::DEFAULT_TABLES_JSON;
use kdual_core::tduality::{MV_CLUTCHING_JSON, PAIR_K_TABLES_JSON};

pub const GOLDEN_DIR_VAR: &str = "KDUAL_GOLDEN_DIR";

pub const TABLES: &str = "tables.json";
pub const PAIR_K_TABLES: &str = "pair_k_tables.json";
pub const MV_CLUTCHING: &str = "mv_clutching.json";

/// The three golden files, either the copies compiled into the binary or
/// the ones found in `$KDUAL_GOLDEN_DIR`.
#[derive(Clone, Debug)]
pub struct Golden {
    pub dir: Option<PathBuf>,
    pub tables: String,
    pub pair_k_tables: String,
    pub mv_clutching: String,
}

impl Golden {
    pub fn builtin() -> Self {
        Golden {
            dir: None,
            tables: DEFAULT_TABLES_JSON.into(),
            pair_k_tables: PAIR_K_TABLES_JSON.into(),
            mv_clutching: MV_CLUTCHING_JSON.into(),
        }
    }

    pub fn from_dir(dir: &Path) -> Result<Self, String> {
        let read = |name: &str| {
            let p = dir.join(name);
            std::fs::read_to_string(&p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        };
        Ok(Golden {
            dir: Some(dir.to_path_buf()),
            tables: read(TABLES)?,
            pair_k_tables: read(PAIR_K_TABLES)?,
            mv_clutching: read(MV_CLUTCHING)?,
        })
    }

    pub fn from_env() -> Result<Self, String> {
        match std::env::var_os(GOLDEN_DIR_VAR) {
            Some(d) if !d.is_empty() => Self::from_dir(Path::new(&d)),
            _ => Ok(Self::builtin()),
        }
    }

    /// `(file name, loaded text, shipped text)` for each file.
    pub fn files(&self) -> [(&'static str, &str, &'static str); 3] {
        [
            (TABLES, &self.tables, DEFAULT_TABLES_JSON),
            (PAIR_K_TABLES, &self.pair_k_tables, PAIR_K_TABLES_JSON),
            (MV_CLUTCHING, &self.mv_clutching, MV_CLUTCHING_JSON),
        ]
    }
}
