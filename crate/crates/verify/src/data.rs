//! Loading and fingerprinting the data directory.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use ab19_core::hopf::Catalog;
use ab19_core::nf::FieldCertificate;
use ab19_core::ramification::DiscriminantTable;
use sha2::{Digest, Sha256};

use crate::error::VerifyError;

pub const QUARTIC: &str = "q_i_sqrt_m19.json";
pub const SEXTIC: &str = "f_sextic.json";
pub const TABLE: &str = "totally_imaginary.csv";
pub const CATALOG: &str = "catalog.json";

/// Parsed contents of `fields/*.json`, `tables/*.csv` and `hopf/*.json`.
#[derive(Debug, Clone)]
pub struct DataSet {
    pub root: PathBuf,
    pub fields: BTreeMap<String, FieldCertificate>,
    pub tables: BTreeMap<String, DiscriminantTable>,
    pub catalogs: BTreeMap<String, Catalog>,
    pub digests: BTreeMap<String, String>,
}

fn data_error(path: &Path, message: impl ToString) -> VerifyError {
    VerifyError::Data { path: path.to_path_buf(), message: message.to_string() }
}

/// Files in `dir` with the given extension, sorted by name.
fn list(dir: &Path, ext: &str) -> Result<Vec<PathBuf>, VerifyError> {
    let entries = std::fs::read_dir(dir).map_err(|e| data_error(dir, e))?;
    let mut out = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| data_error(dir, e))?.path();
        if path.extension().and_then(|s| s.to_str()) == Some(ext) {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

impl DataSet {
    pub fn load(root: &Path) -> Result<Self, VerifyError> {
        let mut set = DataSet {
            root: root.to_path_buf(),
            fields: BTreeMap::new(),
            tables: BTreeMap::new(),
            catalogs: BTreeMap::new(),
            digests: BTreeMap::new(),
        };
        for (sub, ext) in [("fields", "json"), ("tables", "csv"), ("hopf", "json")] {
            for path in list(&root.join(sub), ext)? {
                let bytes = std::fs::read(&path).map_err(|e| data_error(&path, e))?;
                let text = String::from_utf8(bytes.clone()).map_err(|e| data_error(&path, e))?;
                let name = path.file_name().and_then(|s| s.to_str()).unwrap_or_default().to_string();
                set.digests.insert(format!("{sub}/{name}"), hex::encode(Sha256::digest(&bytes)));
                match sub {
                    "fields" => {
                        let c = FieldCertificate::from_json(&text).map_err(|e| data_error(&path, e))?;
                        set.fields.insert(name, c);
                    }
                    "tables" => {
                        let t = DiscriminantTable::parse(&text).map_err(|e| data_error(&path, e))?;
                        set.tables.insert(name, t);
                    }
                    _ => {
                        let c = Catalog::from_json(&text).map_err(|e| data_error(&path, e))?;
                        set.catalogs.insert(name, c);
                    }
                }
            }
        }
        for (sub, name, present) in [
            ("fields", QUARTIC, set.fields.contains_key(QUARTIC)),
            ("fields", SEXTIC, set.fields.contains_key(SEXTIC)),
            ("tables", TABLE, set.tables.contains_key(TABLE)),
            ("hopf", CATALOG, set.catalogs.contains_key(CATALOG)),
        ] {
            if !present {
                return Err(data_error(&root.join(sub).join(name), "required data file is missing"));
            }
        }
        Ok(set)
    }

    pub fn field(&self, name: &str) -> &FieldCertificate {
        &self.fields[name]
    }

    pub fn table(&self) -> &DiscriminantTable {
        &self.tables[TABLE]
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalogs[CATALOG]
    }
}
