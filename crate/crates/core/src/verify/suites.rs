use std::fmt;
use std::str::FromStr;

use super::{
    verify_corollary4_grid, verify_lemma1, verify_lemma2, verify_paths, verify_theorem1,
    verify_theorem2, verify_theorem3, VerificationReport,
};
use crate::kernel::KernelParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemma1,
    Corollary4,
    Lemma2,
    Thm1,
    Thm2,
    Thm3,
    Paths,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Lemma1,
        Suite::Corollary4,
        Suite::Lemma2,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Paths,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Corollary4 => "corollary4",
            Suite::Lemma2 => "lemma2",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Paths => "paths",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Optional replacements for a suite's default grid bounds. Fields a suite
/// does not use are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridOverrides {
    pub m_max: Option<usize>,
    pub n_max: Option<usize>,
    pub k_max: Option<i64>,
    pub k_margin: Option<i64>,
}

/// `(a, b)` pairs swept by the kernel-level suites.
pub fn default_params() -> Vec<KernelParams> {
    [(-1, 0), (1, 0), (1, 1), (2, -3)]
        .into_iter()
        .map(|(a, b)| KernelParams::from_ints(a, b))
        .collect()
}

/// Runs one suite (or every suite for [`Suite::All`]) on its default grid
/// with `overrides` applied.
pub fn run_suite(suite: Suite, overrides: &GridOverrides) -> Vec<VerificationReport> {
    let o = overrides;
    let params = default_params();
    match suite {
        Suite::All => Suite::EACH
            .into_iter()
            .flat_map(|s| run_suite(s, o))
            .collect(),
        Suite::Lemma1 => vec![verify_lemma1(
            o.m_max.unwrap_or(12),
            &params,
            o.k_margin.unwrap_or(5),
        )],
        Suite::Corollary4 => vec![verify_corollary4_grid(
            o.m_max.unwrap_or(8),
            &params,
            o.k_max.unwrap_or(30),
        )],
        Suite::Lemma2 => vec![verify_lemma2(
            o.m_max.unwrap_or(12),
            &params,
            o.k_margin.unwrap_or(5),
        )],
        Suite::Thm1 => {
            let k = o.k_max.unwrap_or(20);
            vec![verify_theorem1(
                o.m_max.unwrap_or(8),
                o.n_max.unwrap_or(40),
                -k..=k,
            )]
        }
        Suite::Thm2 => {
            let k = o.k_max.unwrap_or(20);
            vec![verify_theorem2(
                o.m_max.unwrap_or(8),
                o.n_max.unwrap_or(40),
                -k..=k,
            )]
        }
        Suite::Thm3 => {
            let k = o.k_max.unwrap_or(12);
            vec![verify_theorem3(
                o.m_max.unwrap_or(6),
                o.n_max.unwrap_or(30),
                -k..=k,
            )]
        }
        Suite::Paths => vec![verify_paths(o.n_max.unwrap_or(24), o.m_max.unwrap_or(4))],
    }
}
