//! The bundled corpus.

use super::schema::{from_json, CorpusItem};
use crate::error::{Error, Result};

const FILES: [(&str, &str); 5] = [
    ("hypersurfaces.json", include_str!("../../corpus/hypersurfaces.json")),
    ("gluings.json", include_str!("../../corpus/gluings.json")),
    ("covers.json", include_str!("../../corpus/covers.json")),
    ("p1.json", include_str!("../../corpus/p1.json")),
    ("families.json", include_str!("../../corpus/families.json")),
];

/// Every bundled item, in file order.
pub fn items() -> Result<Vec<CorpusItem>> {
    let mut out = Vec::new();
    for (file, text) in FILES {
        let v: Vec<CorpusItem> = from_json(text).map_err(|e| Error::Input(format!("{file}: {e}")))?;
        out.extend(v);
    }
    Ok(out)
}

pub fn find(name: &str) -> Result<Option<CorpusItem>> {
    Ok(items()?.into_iter().find(|i| i.name == name))
}
