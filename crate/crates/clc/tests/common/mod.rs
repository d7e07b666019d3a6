#![allow(dead_code)] // each test binary uses a different subset

use std::path::PathBuf;

use clc::rational::rat_int;
use clc::{parse_matrix_tsv, parse_profile, LlullMatrix, Profile, UnlistedPolicy};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

/// The 2007 Blackpool dancesport final as a pairwise matrix: absolute
/// counts over 44 rankings.
pub fn blackpool_matrix() -> LlullMatrix {
    let text = std::fs::read_to_string(data_path("blackpool.tsv")).unwrap();
    parse_matrix_tsv(&text, Some(&rat_int(44))).unwrap()
}

/// A 44-ballot profile whose pairwise counts reproduce the Blackpool
/// matrix exactly.
pub fn blackpool_profile() -> Profile {
    let text = std::fs::read_to_string(data_path("blackpool.ballots")).unwrap();
    parse_profile(&text, UnlistedPolicy::Error).unwrap()
}
