//! Bundled input files: small posets, Dynkin specs and NRF data files.
//!
//! The same files live under `corpus/` in the crate directory and can be
//! passed to the `rowcox` binary directly.

use std::path::PathBuf;

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name)))),*]
    };
}

/// `(relative path, contents)` of every poset file.
pub const POSETS: &[(&str, &str)] = bundle![
    "posets/empty.json",
    "posets/chain1.json",
    "posets/chain2.json",
    "posets/chain3.json",
    "posets/chain4.json",
    "posets/antichain3.json",
    "posets/boolean3.json",
    "posets/example6.json",
    "posets/m3.json",
    "posets/n5.json",
];

pub const DYNKIN: &[(&str, &str)] = bundle![
    "dynkin/a1.json",
    "dynkin/a2.json",
    "dynkin/a3.json",
    "dynkin/a4.json",
    "dynkin/a4_zigzag.json",
    "dynkin/a5.json",
    "dynkin/a6.json",
    "dynkin/d4.json",
    "dynkin/d5.json",
    "dynkin/e6.json",
];

pub const NRF: &[(&str, &str)] = bundle![
    "nrf/a3.json",
    "nrf/a3_corrupted.json",
    "nrf/d4_alternating.json",
];

/// Contents of a bundled file by relative path, e.g. `posets/m3.json`.
pub fn get(name: &str) -> Option<&'static str> {
    POSETS.iter().chain(DYNKIN).chain(NRF).find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// On-disk location of a bundled file inside the source tree.
pub fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{DynkinFile, DynkinSpec, NrfData, NrfFile};
    use crate::poset::{Poset, PosetFile};

    #[test]
    fn every_file_parses() {
        for (name, text) in POSETS {
            let f: PosetFile = serde_json::from_str(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            Poset::from_file(&f).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, text) in DYNKIN {
            let f: DynkinFile = serde_json::from_str(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            DynkinSpec::try_from(f).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, text) in NRF {
            let f: NrfFile = serde_json::from_str(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            NrfData::from_file(&f).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(get("posets/m3.json").is_some());
        assert!(path("posets/m3.json").is_file());
    }
}
